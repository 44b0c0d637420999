//! Dispatch and rendering. Every command delegates to a single library
//! call; this module only reads files and formats results.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rp_core::closure::RationalPowerIdeal;
use rp_core::homology::DepthRegRow;
use rp_core::{
    BettiTable, CorollaryReport, DepthRegReport, ExpansionReport, ExpansionTerm,
    IntegralityCertificate, InvariantReport, MonomialIdeal, Rational, TorCertificates,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Cli, Command, Format, PowerArg};

pub const FORMAT_VERSION: &str = "rp/1";

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_HYPOTHESIS: u8 = 2;
pub const EXIT_DEFECT: u8 = 3;

#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub status: u8,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}:{line}:{column}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Core(#[from] rp_core::Error),
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => EXIT_PARSE,
            CliError::Core(rp_core::Error::InvalidRational(_)) => EXIT_PARSE,
            CliError::Core(_) => EXIT_HYPOTHESIS,
        }
    }

    /// The witness printed on stdout when a hypothesis fails.
    pub fn certificate(&self, format: Format) -> Option<String> {
        let CliError::Core(rp_core::Error::NonIntegralVertex { vertex }) = self else {
            return None;
        };
        let coords: Vec<String> = vertex.iter().map(ToString::to_string).collect();
        Some(match format {
            Format::Text => format!("non-integral dual vertex: ({})", coords.join(", ")),
            Format::Json => document(
                "certificate",
                json!({ "hypothesis": "integral", "holds": false, "witness": coords }),
            ),
        })
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn read_ideal(path: &Path) -> Result<MonomialIdeal> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let parsed = rp_core::parse_ideal(&text).map_err(|err| match err {
        rp_core::Error::Parse {
            line,
            column,
            message,
        } => CliError::Parse {
            path: path.to_path_buf(),
            line,
            column,
            message,
        },
        other => CliError::Core(other),
    })?;
    for g in &parsed.redundant {
        log::warn!(
            "{}: non-minimal input, dropped redundant generator {}",
            path.display(),
            parsed.ideal.format_monomial(g)
        );
    }
    Ok(parsed.ideal)
}

fn document(command: &str, body: Value) -> String {
    let mut doc = serde_json::Map::new();
    doc.insert("format".into(), FORMAT_VERSION.into());
    doc.insert("command".into(), command.into());
    if let Value::Object(fields) = body {
        doc.extend(fields);
    }
    let mut out = serde_json::to_string_pretty(&Value::Object(doc)).expect("json value");
    out.push('\n');
    out
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable report")
}

enum Power {
    Integer(u32),
    Rational(Rational),
}

fn power(arg: &PowerArg) -> Result<Power> {
    match (&arg.k, &arg.u) {
        (Some(k), _) => Ok(Power::Integer(*k)),
        (None, Some(u)) => Ok(Power::Rational(rp_core::parse_rational(u)?)),
        (None, None) => unreachable!("clap enforces the power group"),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    let ok = |output| Outcome {
        output,
        status: EXIT_OK,
    };
    match &cli.command {
        Command::Closure { k, file } => {
            let ideal = read_ideal(file)?;
            let result = rp_core::integral_closure_power(&ideal, *k)?;
            Ok(ok(match format {
                Format::Text => result.to_text(),
                Format::Json => document("closure", json!({ "k": k, "result": to_value(&result) })),
            }))
        }
        Command::RationalPower { u, file } => {
            let u = rp_core::parse_rational(u)?;
            let ideal = read_ideal(file)?;
            let power = rp_core::rational_power(&ideal, &u)?;
            Ok(ok(render_rational_power(&power, format)))
        }
        Command::JumpingDenominator { file } => {
            let ideal = read_ideal(file)?;
            let e = rp_core::jumping_denominator(&ideal)?;
            Ok(ok(match format {
                Format::Text => format!("{}\n", e.value()),
                Format::Json => document("jumping-denominator", json!({ "e": e.value() })),
            }))
        }
        Command::CheckIntegrality { file } => {
            let ideal = read_ideal(file)?;
            let cert = rp_core::nu_star_integrality(&ideal)?;
            Ok(ok(render_integrality(&cert, format)))
        }
        Command::Expand {
            power: p,
            grid_refine,
            first,
            second,
        } => {
            let (i, j) = (read_ideal(first)?, read_ideal(second)?);
            let output = match power(p)? {
                Power::Integer(k) => {
                    let result = rp_core::expansion_integer(&i, &j, k)?;
                    render_expansion("expand", &result, &[], format)
                }
                Power::Rational(u) => {
                    let refine = if *grid_refine { 2 } else { 1 };
                    let terms = rp_core::expansion::expansion_terms(&i, &j, &u, refine)?;
                    let result = rp_core::expansion::expansion_rational_refined(&i, &j, &u, refine)?;
                    render_expansion("expand", &result, &terms, format)
                }
            };
            Ok(ok(output))
        }
        Command::VerifyExpansion {
            power: p,
            grid_refine,
            first,
            second,
        } => {
            let (i, j) = (read_ideal(first)?, read_ideal(second)?);
            let report = match power(p)? {
                Power::Integer(k) => rp_core::verify_integer_expansion(&i, &j, k)?,
                Power::Rational(u) => {
                    let refine = if *grid_refine { 2 } else { 1 };
                    rp_core::expansion::verify_rational_expansion_refined(&i, &j, &u, refine)?
                }
            };
            Ok(Outcome {
                output: render_verification(&report, format),
                status: if report.theorem_violated() {
                    EXIT_DEFECT
                } else {
                    EXIT_OK
                },
            })
        }
        Command::Symbolic { k, bound, file } => {
            let ideal = read_ideal(file)?;
            match (k, bound) {
                (Some(k), None) => {
                    let result = rp_core::symbolic_power_squarefree(&ideal, *k)?;
                    Ok(ok(match format {
                        Format::Text => result.to_text(),
                        Format::Json => {
                            document("symbolic", json!({ "k": k, "result": to_value(&result) }))
                        }
                    }))
                }
                (None, Some(bound)) => {
                    let report = rp_core::check_corollary_hypotheses(&ideal, *bound)?;
                    Ok(ok(render_corollary(&report, format)))
                }
                _ => Err(rp_core::Error::Precondition(
                    "symbolic needs exactly one of -k and --bound".into(),
                )
                .into()),
            }
        }
        Command::Betti { file } => {
            let ideal = read_ideal(file)?;
            let table = rp_core::betti_table(&ideal)?;
            Ok(ok(render_betti(&table, format)))
        }
        Command::DepthReg { file } => {
            let ideal = read_ideal(file)?;
            let report = rp_core::depth_and_reg(&ideal)?;
            Ok(ok(render_invariants(&report, format)))
        }
        Command::VerifyDepthReg { k, first, second } => {
            let (i, j) = (read_ideal(first)?, read_ideal(second)?);
            let report = rp_core::verify_depth_reg_theorem(&i, &j, *k)?;
            Ok(Outcome {
                output: render_depth_reg(&report, format),
                status: if report.all_equal() {
                    EXIT_OK
                } else {
                    EXIT_DEFECT
                },
            })
        }
        Command::CertifyTor { k, bound, file } => {
            let ideal = read_ideal(file)?;
            let certs = rp_core::check_tor_vanishing_certificates(&ideal, *k, *bound)?;
            Ok(Outcome {
                output: render_tor(&certs, format),
                status: if certs.all_hold() {
                    EXIT_OK
                } else {
                    EXIT_DEFECT
                },
            })
        }
    }
}

fn render_rational_power(power: &RationalPowerIdeal, format: Format) -> String {
    match format {
        Format::Text => power.result.to_text(),
        Format::Json => document(
            "rational-power",
            json!({ "u": power.exponent.to_string(), "base": to_value(&power.base), "result": to_value(&power.result) }),
        ),
    }
}

fn render_integrality(cert: &IntegralityCertificate, format: Format) -> String {
    match format {
        Format::Text => match &cert.witness {
            None => "integral\n".to_string(),
            Some(v) => {
                let coords: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("not integral\nwitness: ({})\n", coords.join(", "))
            }
        },
        Format::Json => document("check-integrality", to_value(cert)),
    }
}

fn term_line(t: &ExpansionTerm) -> String {
    format!("# w={} u-w={}: {}\n", t.omega, t.complement, t.term)
}

fn render_expansion(
    command: &str,
    result: &MonomialIdeal,
    terms: &[ExpansionTerm],
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for t in terms {
                out.push_str(&term_line(t));
            }
            out.push_str(&result.to_text());
            out
        }
        Format::Json => {
            let mut body = json!({ "result": to_value(result) });
            if !terms.is_empty() {
                body["terms"] = to_value(&terms);
            }
            document(command, body)
        }
    }
}

fn render_verification(report: &ExpansionReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = if report.equal {
                "EQUAL\n".to_string()
            } else {
                format!("NOT EQUAL; missing: {}\n", report.missing_strings().join(", "))
            };
            if let Some((ci, cj)) = &report.integrality {
                let verdict = |c: &IntegralityCertificate| if c.integral { "integral" } else { "not integral" };
                let _ = writeln!(out, "# hypothesis: I {}, J {}", verdict(ci), verdict(cj));
            }
            let _ = writeln!(out, "# left: {}", report.left);
            let _ = writeln!(out, "# right: {}", report.right);
            out
        }
        Format::Json => {
            let mut body = to_value(report);
            body["missing"] = to_value(&report.missing_strings());
            body["theorem_violated"] = report.theorem_violated().into();
            document("verify-expansion", body)
        }
    }
}

fn render_corollary(report: &CorollaryReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            if !report.squarefree {
                out.push_str("not squarefree\n");
                return out;
            }
            let yes = |b: bool| if b { "yes" } else { "no" };
            out.push_str("k symbolic=closure power=symbolic\n");
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "{} {} {}",
                    r.k,
                    yes(r.symbolic_equals_closure),
                    yes(r.power_equals_symbolic)
                );
            }
            let _ = writeln!(out, "# checked for k <= {} only", report.verified_up_to);
            out
        }
        Format::Json => document("symbolic", to_value(report)),
    }
}

fn render_betti(table: &BettiTable, format: Format) -> String {
    match format {
        Format::Text => table.to_text(),
        Format::Json => document("betti", to_value(table)),
    }
}

fn render_invariants(report: &InvariantReport, format: Format) -> String {
    match format {
        Format::Text => format!(
            "depth {}\nregularity {}\nprojective dimension {}\n",
            report.depth, report.regularity, report.projective_dimension
        ),
        Format::Json => document("depth-reg", to_value(report)),
    }
}

fn depth_reg_line(r: &DepthRegRow) -> String {
    let mark = |b: bool| if b { "=" } else { "!=" };
    format!(
        "{} depth {} {} {} reg {} {} {}\n",
        r.k,
        r.depth,
        mark(r.depth_equal()),
        r.depth_formula,
        r.regularity,
        mark(r.regularity_equal()),
        r.regularity_formula
    )
}

fn render_depth_reg(report: &DepthRegReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::from("k direct vs formula\n");
            for r in &report.rows {
                out.push_str(&depth_reg_line(r));
            }
            out.push_str(if report.all_equal() { "EQUAL\n" } else { "NOT EQUAL\n" });
            out
        }
        Format::Json => {
            let mut body = to_value(report);
            body["all_equal"] = report.all_equal().into();
            document("verify-depth-reg", body)
        }
    }
}

fn render_tor(certs: &TorCertificates, format: Format) -> String {
    match format {
        Format::Text => {
            let ok = |b: bool| if b { "holds" } else { "FAILS" };
            let mut out = String::new();
            for (k, holds) in &certs.delta {
                let _ = writeln!(out, "delta* closure(I^{k}) in closure(I^{}): {}", k - 1, ok(*holds));
            }
            for (k, holds) in &certs.maximal {
                let _ = writeln!(out, "closure(I^{k}) in m closure(I^{}): {}", k - 1, ok(*holds));
            }
            for (k, e, holds) in &certs.power {
                let _ = writeln!(out, "closure(I^{}) in m^{e} closure(I^{k}): {}", k + e, ok(*holds));
            }
            out
        }
        Format::Json => {
            let mut body = to_value(certs);
            body["all_hold"] = certs.all_hold().into();
            document("certify-tor", body)
        }
    }
}
