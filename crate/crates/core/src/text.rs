//! Ideal text format.
//!
//! ```text
//! # comment
//! vars y z
//! y^2
//! y*z
//! ```
//!
//! Generators accept `x^2*y`, `x^2y` and `x2y` spellings. Variable names are
//! matched longest-first, so with variables `x1, x2` the factor `x12` reads
//! as `x1^2`. The keyword `zero` declares the zero ideal and `1` the unit
//! ideal.

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    /// Input generators that were dropped as non-minimal.
    pub redundant: Vec<ExponentVector>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_ideal(text: &str) -> Result<ParsedIdeal> {
    let mut context = None;
    let mut gens = Vec::new();
    let mut zero_keyword = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        let Some(ctx) = &context else {
            let mut words = trimmed.split_whitespace();
            if words.next() != Some("vars") {
                return Err(parse_err(line_no, indent + 1, "expected `vars` declaration"));
            }
            let names: Vec<&str> = words.collect();
            context = Some(VariableContext::new(names).map_err(|e| {
                parse_err(line_no, indent + 1, e.to_string())
            })?);
            continue;
        };
        if trimmed == "zero" {
            zero_keyword = true;
            continue;
        }
        gens.push(parse_monomial(ctx, trimmed, line_no, indent)?);
    }

    let Some(ctx) = context else {
        return Err(parse_err(1, 1, "missing `vars` declaration"));
    };
    if gens.is_empty() && !zero_keyword {
        return Err(parse_err(
            text.lines().count().max(1),
            1,
            "no generators; write `zero` for the zero ideal",
        ));
    }
    if !gens.is_empty() && zero_keyword {
        return Err(parse_err(1, 1, "`zero` cannot be combined with generators"));
    }
    let ideal = MonomialIdeal::minimalize(ctx, gens.iter().cloned())?;
    let mut redundant: Vec<ExponentVector> = gens
        .into_iter()
        .filter(|g| !ideal.generators().contains(g))
        .collect();
    redundant.sort();
    redundant.dedup();
    Ok(ParsedIdeal { ideal, redundant })
}

/// Parses one monomial. `offset` is the byte column of `src` in its line.
pub fn parse_monomial(
    ctx: &VariableContext,
    src: &str,
    line: usize,
    offset: usize,
) -> Result<ExponentVector> {
    let mut names: Vec<(usize, &str)> = ctx
        .names()
        .iter()
        .enumerate()
        .map(|(i, n)| (i, n.as_str()))
        .collect();
    names.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));

    let mut exps = vec![0u32; ctx.len()];
    let bytes = src.as_bytes();
    let mut pos = 0;
    let col = |p: usize| offset + p + 1;

    if src == "1" {
        return Ok(ExponentVector::new(exps));
    }
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() || c == b'*' {
            pos += 1;
            continue;
        }
        let rest = &src[pos..];
        let Some((var, name)) = names.iter().find(|(_, n)| rest.starts_with(n)) else {
            let token: String = rest.chars().take_while(|c| c.is_alphanumeric()).collect();
            let token = if token.is_empty() { rest.chars().take(1).collect() } else { token };
            return Err(parse_err(line, col(pos), format!("unknown variable `{token}`")));
        };
        pos += name.len();
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            if pos < bytes.len() && bytes[pos] == b'-' {
                return Err(parse_err(line, col(pos), "negative exponent"));
            }
            if pos >= bytes.len() || !bytes[pos].is_ascii_digit() {
                return Err(parse_err(line, col(pos), "expected exponent after `^`"));
            }
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let e: u32 = if start == pos {
            1
        } else {
            src[start..pos]
                .parse()
                .map_err(|_| parse_err(line, col(start), "exponent out of range"))?
        };
        exps[*var] += e;
    }
    Ok(ExponentVector::new(exps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(p: &ParsedIdeal) -> Vec<Vec<u32>> {
        p.ideal
            .generators()
            .iter()
            .map(|g| g.as_slice().to_vec())
            .collect()
    }

    #[test]
    fn parses_examples() {
        let p = parse_ideal("vars x\nx^2").unwrap();
        assert_eq!(gens(&p), vec![vec![2]]);
        assert!(p.redundant.is_empty());

        let p = parse_ideal("vars y z\ny^2\ny*z").unwrap();
        assert_eq!(gens(&p), vec![vec![2, 0], vec![1, 1]]);

        let p = parse_ideal("vars x\nx^2\nx^3").unwrap();
        assert_eq!(gens(&p), vec![vec![2]]);
        assert_eq!(p.redundant, vec![ExponentVector::new(vec![3])]);
    }

    #[test]
    fn power_notations_agree() {
        let a = parse_ideal("vars x y\nx^2*y").unwrap();
        let b = parse_ideal("vars x y\nx2y").unwrap();
        let c = parse_ideal("# c\nvars x y  # trailing\n  x^2y\n").unwrap();
        let d = parse_ideal("vars x y\nx x y").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a, d);
    }

    #[test]
    fn multi_letter_names() {
        let p = parse_ideal("vars x1 x10\nx10^2*x1").unwrap();
        assert_eq!(gens(&p), vec![vec![1, 2]]);
    }

    #[test]
    fn zero_and_unit() {
        assert!(parse_ideal("vars x\nzero").unwrap().ideal.is_zero());
        assert!(parse_ideal("vars x\n1").unwrap().ideal.is_unit());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_ideal("vars x\nx*w").unwrap_err(),
            Error::Parse {
                line: 2,
                column: 3,
                message: "unknown variable `w`".into()
            }
        );
        assert!(matches!(
            parse_ideal("vars x\nx^-2").unwrap_err(),
            Error::Parse { line: 2, column: 3, .. }
        ));
        assert!(matches!(
            parse_ideal("vars x\n").unwrap_err(),
            Error::Parse { .. }
        ));
        assert!(matches!(
            parse_ideal("x^2\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_ideal("vars x x\nx").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn serialization_round_trips() {
        for src in [
            "vars x y z\nx^2\ny^2\ny*z\n",
            "vars x\nzero\n",
            "vars x y\n1\n",
            "vars a1 a2\na1^3\na1*a2\n",
        ] {
            let once = parse_ideal(src).unwrap().ideal;
            let text = once.to_text();
            let twice = parse_ideal(&text).unwrap().ideal;
            assert_eq!(once, twice);
            assert_eq!(twice.to_text(), text);
        }
    }
}
