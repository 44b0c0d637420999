//! Graded Betti numbers, depth and regularity of monomial quotients, and
//! the checks built on them: Betti splittings, the filtration identities
//! for the partial sums `P_{k,t}`, the containment certificates behind the
//! Tor-vanishing of `{closure(I^k)}`, and the depth/regularity formulas for
//! `S / closure((I + J)^k)`.
//!
//! Betti numbers are computed over the rationals. For a multidegree `a`,
//! `beta_{i,a}(I)` is the dimension of `H~_{i-1}(K^a(I))`, where
//! `K^a(I) = { squarefree F : x^(a - F) in I }` is the upper Koszul
//! simplicial complex. Only multidegrees in the lcm lattice of the
//! generators can carry nonzero Betti numbers.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::closure::{integral_closure_power, nu_star_integrality, IntegralityCertificate};
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::monomial::{external_sum, ExponentVector, MonomialIdeal, VariableContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BettiSubject {
    /// Betti numbers of `S / I`.
    Quotient,
    /// Betti numbers of `I` itself.
    Ideal,
}

/// Graded Betti numbers `beta_{i,j}`, keyed by homological degree `i` and
/// internal degree `j`. Zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub subject: BettiSubject,
    pub num_vars: usize,
    entries: BTreeMap<(usize, u32), u64>,
}

#[derive(Serialize)]
struct BettiEntry {
    i: usize,
    j: u32,
    value: u64,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let entries: Vec<BettiEntry> = self
            .entries
            .iter()
            .map(|(&(i, j), &value)| BettiEntry { i, j, value })
            .collect();
        let mut st = s.serialize_struct("BettiTable", 3)?;
        st.serialize_field("subject", &self.subject)?;
        st.serialize_field("num_vars", &self.num_vars)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti numbers `beta_i = sum_j beta_{i,j}` for `i = 0..=max`.
    pub fn totals(&self) -> Vec<u64> {
        let Some(top) = self.max_homological_degree() else {
            return Vec::new();
        };
        (0..=top)
            .map(|i| self.entries().filter(|e| e.0 == i).map(|e| e.2).sum())
            .collect()
    }

    pub fn max_homological_degree(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `max { j - i : beta_{i,j} != 0 }`.
    pub fn regularity(&self) -> Option<i64> {
        self.entries
            .keys()
            .map(|&(i, j)| i64::from(j) - i as i64)
            .max()
    }

    /// Triangular grid with columns indexed by `i` and rows by `j - i`:
    ///
    /// ```text
    ///        0 1 2
    /// total: 1 2 1
    ///     0: 1 . .
    ///     1: . 2 1
    /// ```
    pub fn to_text(&self) -> String {
        let (Some(top), Some(reg)) = (self.max_homological_degree(), self.regularity()) else {
            return "(zero module)\n".to_string();
        };
        let low = self
            .entries
            .keys()
            .map(|&(i, j)| i64::from(j) - i as i64)
            .min()
            .unwrap_or(0);
        let totals = self.totals();
        let cells = |row: &[String]| -> Vec<String> { row.to_vec() };
        let mut grid: Vec<(String, Vec<String>)> = Vec::new();
        grid.push((String::new(), (0..=top).map(|i| i.to_string()).collect()));
        grid.push(("total:".into(), cells(&totals.iter().map(u64::to_string).collect::<Vec<_>>())));
        for r in low..=reg {
            let row = (0..=top)
                .map(|i| {
                    let j = r + i as i64;
                    match u32::try_from(j).map(|j| self.get(i, j)) {
                        Ok(v) if v > 0 => v.to_string(),
                        _ => ".".to_string(),
                    }
                })
                .collect();
            grid.push((format!("{r}:"), row));
        }
        let label_w = grid.iter().map(|g| g.0.len()).max().unwrap_or(0);
        let col_w: Vec<usize> = (0..=top)
            .map(|c| grid.iter().map(|g| g.1[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (label, row) in &grid {
            let _ = write!(out, "{label:>label_w$}");
            for (cell, w) in row.iter().zip(&col_w) {
                let _ = write!(out, " {cell:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

/// All lcms of nonempty subsets of the generators.
fn lcm_lattice(gens: &[ExponentVector]) -> BTreeSet<ExponentVector> {
    let mut lattice: BTreeSet<ExponentVector> = gens.iter().cloned().collect();
    let mut frontier: Vec<ExponentVector> = lattice.iter().cloned().collect();
    while let Some(v) = frontier.pop() {
        for g in gens {
            let l = v.lcm(g);
            if lattice.insert(l.clone()) {
                frontier.push(l);
            }
        }
    }
    lattice
}

/// Reduced homology of `K^a(I)` as `(face size, dimension)` pairs; a face
/// of size `s` has dimension `s - 1`, so size `i` carries `beta_{i,a}(I)`.
fn upper_koszul_homology(ideal: &MonomialIdeal, a: &ExponentVector) -> Vec<(usize, u64)> {
    let support: Vec<usize> = (0..a.len()).filter(|&v| a[v] > 0).collect();
    let in_ideal = |mask: u32| {
        let mut v = a.clone().into_inner();
        for (bit, &var) in support.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                v[var] -= 1;
            }
        }
        ideal.contains_monomial(&ExponentVector::new(v)).unwrap_or(false)
    };
    let d = support.len();
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); d + 1];
    for mask in 0u32..(1 << d) {
        if in_ideal(mask) {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    // boundary_ranks[s] = rank of the map from size-s faces to size-(s-1) faces
    let mut boundary_ranks = vec![0usize; d + 2];
    for s in 1..=d {
        if by_size[s].is_empty() || by_size[s - 1].is_empty() {
            continue;
        }
        let index: HashMap<u32, usize> = by_size[s - 1]
            .iter()
            .enumerate()
            .map(|(k, &f)| (f, k))
            .collect();
        let mut matrix = vec![vec![0i64; by_size[s].len()]; by_size[s - 1].len()];
        for (col, &face) in by_size[s].iter().enumerate() {
            let mut sign = 1;
            for bit in 0..d {
                if face & (1 << bit) == 0 {
                    continue;
                }
                let row = index[&(face & !(1 << bit))];
                matrix[row][col] = sign;
                sign = -sign;
            }
        }
        boundary_ranks[s] = rank(&matrix);
    }
    (0..=d)
        .filter_map(|s| {
            let dim = by_size[s].len() - boundary_ranks[s] - boundary_ranks[s + 1];
            (dim > 0).then_some((s, dim as u64))
        })
        .collect()
}

/// Multigraded Betti numbers `beta_{i,a}(I)` of the ideal.
pub fn multigraded_betti(ideal: &MonomialIdeal) -> BTreeMap<(usize, ExponentVector), u64> {
    let lattice: Vec<ExponentVector> = lcm_lattice(ideal.generators()).into_iter().collect();
    lattice
        .par_iter()
        .flat_map_iter(|a| {
            upper_koszul_homology(ideal, a)
                .into_iter()
                .map(move |(i, dim)| ((i, a.clone()), dim))
        })
        .collect()
}

/// Graded Betti numbers of the ideal itself.
pub fn ideal_betti_table(ideal: &MonomialIdeal) -> BettiTable {
    let mut entries = BTreeMap::new();
    for ((i, a), v) in multigraded_betti(ideal) {
        *entries.entry((i, a.degree())).or_insert(0) += v;
    }
    BettiTable {
        subject: BettiSubject::Ideal,
        num_vars: ideal.num_vars(),
        entries,
    }
}

/// Graded Betti numbers of `S / I`. The quotient by the zero ideal is `S`
/// (`beta_{0,0} = 1` only); the quotient by the unit ideal is the zero
/// module (empty table).
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let mut entries = BTreeMap::new();
    if !ideal.is_unit() {
        entries.insert((0, 0), 1);
        for (&(i, j), &v) in ideal_betti_table(ideal).entries.iter() {
            entries.insert((i + 1, j), v);
        }
    }
    Ok(BettiTable {
        subject: BettiSubject::Quotient,
        num_vars: ideal.num_vars(),
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub depth: usize,
    pub regularity: i64,
    pub projective_dimension: usize,
    pub betti: BettiTable,
}

/// Depth (via Auslander-Buchsbaum), projective dimension and regularity
/// of `S / I`.
pub fn depth_and_reg(ideal: &MonomialIdeal) -> Result<InvariantReport> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("depth and regularity"));
    }
    let betti = betti_table(ideal)?;
    let pd = betti.max_homological_degree().unwrap_or(0);
    Ok(InvariantReport {
        depth: ideal.num_vars() - pd,
        regularity: betti.regularity().unwrap_or(0),
        projective_dimension: pd,
        betti,
    })
}

/// Closures `closure(I^0), .., closure(I^top)` embedded at `offset` in `ctx`.
fn closure_ladder(
    i: &MonomialIdeal,
    top: u32,
    ctx: &std::sync::Arc<VariableContext>,
    offset: usize,
) -> Result<Vec<MonomialIdeal>> {
    (0..=top)
        .map(|k| integral_closure_power(i, k)?.embed(ctx, offset))
        .collect()
}

/// `P_{k,t} = sum_{l=0}^{t} closure(I^(k-l)) * closure(J^l)`.
pub fn partial_sum_ideal(i: &MonomialIdeal, j: &MonomialIdeal, k: u32, t: u32) -> Result<MonomialIdeal> {
    if t > k {
        return Err(Error::Precondition(format!("t = {t} exceeds k = {k}")));
    }
    let ctx = VariableContext::juxtapose(i.context(), j.context())?;
    let ci = closure_ladder(i, k, &ctx, 0)?;
    let cj = closure_ladder(j, t, &ctx, i.num_vars())?;
    partial_sum_from(&ci, &cj, k, t, &ctx)
}

fn partial_sum_from(
    ci: &[MonomialIdeal],
    cj: &[MonomialIdeal],
    k: u32,
    t: u32,
    ctx: &std::sync::Arc<VariableContext>,
) -> Result<MonomialIdeal> {
    (0..=t).try_fold(MonomialIdeal::zero(ctx.clone()), |acc, l| {
        acc.sum(&ci[(k - l) as usize].product(&cj[l as usize])?)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationRow {
    pub t: u32,
    /// `P_{k,t} = P_{k,t-1} + closure(I^(k-t)) closure(J^t)`
    pub sum_identity: bool,
    /// `P_{k,t-1} ∩ closure(I^(k-t)) closure(J^t) = closure(I^(k-t+1)) closure(J^t)`
    pub intersection_identity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub k: u32,
    pub rows: Vec<FiltrationRow>,
}

impl FiltrationReport {
    pub fn all_hold(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.sum_identity && r.intersection_identity)
    }
}

pub fn verify_filtration_identities(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: u32,
) -> Result<FiltrationReport> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let ctx = VariableContext::juxtapose(i.context(), j.context())?;
    let ci = closure_ladder(i, k, &ctx, 0)?;
    let cj = closure_ladder(j, k, &ctx, i.num_vars())?;
    let rows = (1..=k)
        .map(|t| {
            let previous = partial_sum_from(&ci, &cj, k, t - 1, &ctx)?;
            let current = partial_sum_from(&ci, &cj, k, t, &ctx)?;
            let term = ci[(k - t) as usize].product(&cj[t as usize])?;
            let shifted = ci[(k - t + 1) as usize].product(&cj[t as usize])?;
            Ok(FiltrationRow {
                t,
                sum_identity: current == previous.sum(&term)?,
                intersection_identity: previous.intersection(&term)? == shifted,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiltrationReport { k, rows })
}

/// Whether `beta_{i,j}(P) = beta_{i,j}(I) + beta_{i,j}(J) + beta_{i-1,j}(I ∩ J)`
/// for all `i, j`. Requires `P = I + J`.
pub fn is_betti_splitting(p: &MonomialIdeal, i: &MonomialIdeal, j: &MonomialIdeal) -> Result<bool> {
    if *p != i.sum(j)? {
        return Err(Error::Precondition("P is not the sum I + J".into()));
    }
    let meet = i.intersection(j)?;
    let (bp, bi, bj, bm) = (
        ideal_betti_table(p),
        ideal_betti_table(i),
        ideal_betti_table(j),
        ideal_betti_table(&meet),
    );
    let keys: BTreeSet<(usize, u32)> = bp
        .entries()
        .chain(bi.entries())
        .chain(bj.entries())
        .map(|(a, b, _)| (a, b))
        .chain(bm.entries().map(|(a, b, _)| (a + 1, b)))
        .collect();
    Ok(keys.into_iter().all(|(hi, deg)| {
        let shifted = if hi == 0 { 0 } else { bm.get(hi - 1, deg) };
        bp.get(hi, deg) == bi.get(hi, deg) + bj.get(hi, deg) + shifted
    }))
}

/// Containment certificates for the filtration `{closure(I^k)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorCertificates {
    /// `(k, delta*(closure(I^k)) ⊆ closure(I^(k-1)))` for `2 <= k <= kmax`
    pub delta: Vec<(u32, bool)>,
    /// `(k, closure(I^k) ⊆ m closure(I^(k-1)))` for `2 <= k <= kmax`
    pub maximal: Vec<(u32, bool)>,
    /// `(k, e, closure(I^(k+e)) ⊆ m^e closure(I^k))` for `1 <= k <= kmax`, `1 <= e <= emax`
    pub power: Vec<(u32, u32, bool)>,
}

impl TorCertificates {
    pub fn all_hold(&self) -> bool {
        self.delta.iter().all(|c| c.1)
            && self.maximal.iter().all(|c| c.1)
            && self.power.iter().all(|c| c.2)
    }
}

pub fn check_tor_vanishing_certificates(
    i: &MonomialIdeal,
    kmax: u32,
    emax: u32,
) -> Result<TorCertificates> {
    if kmax < 2 || emax < 1 {
        return Err(Error::Precondition("need kmax >= 2 and emax >= 1".into()));
    }
    if i.is_zero() {
        return Err(Error::ZeroIdeal("Tor-vanishing certificates"));
    }
    if i.is_unit() {
        return Err(Error::UnitIdeal("Tor-vanishing certificates"));
    }
    let closures: Vec<MonomialIdeal> = (0..=kmax + emax)
        .map(|k| integral_closure_power(i, k))
        .collect::<Result<_>>()?;
    let mut certs = TorCertificates {
        delta: Vec::new(),
        maximal: Vec::new(),
        power: Vec::new(),
    };
    for k in 2..=kmax as usize {
        let prev = &closures[k - 1];
        certs
            .delta
            .push((k as u32, prev.contains(&closures[k].delta_star()?)?));
        certs
            .maximal
            .push((k as u32, prev.maximal_power_times(1)?.contains(&closures[k])?));
    }
    for k in 1..=kmax as usize {
        for e in 1..=emax as usize {
            let holds = closures[k]
                .maximal_power_times(e as u32)?
                .contains(&closures[k + e])?;
            certs.power.push((k as u32, e as u32, holds));
        }
    }
    Ok(certs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthRegRow {
    pub k: u32,
    /// depth of `S / closure((I+J)^k)`, computed directly
    pub depth: usize,
    /// min over the formula terms
    pub depth_formula: usize,
    /// regularity of `S / closure((I+J)^k)`, computed directly
    pub regularity: i64,
    /// max over the formula terms
    pub regularity_formula: i64,
}

impl DepthRegRow {
    pub fn depth_equal(&self) -> bool {
        self.depth == self.depth_formula
    }

    pub fn regularity_equal(&self) -> bool {
        self.regularity == self.regularity_formula
    }

    /// `depth >= formula` and `reg <= formula`.
    pub fn bounds_hold(&self) -> bool {
        self.depth >= self.depth_formula && self.regularity <= self.regularity_formula
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthRegReport {
    pub hypothesis: IntegralityCertificate,
    pub rows: Vec<DepthRegRow>,
}

impl DepthRegReport {
    pub fn all_equal(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.depth_equal() && r.regularity_equal())
    }
}

/// Depth and regularity of `S / closure((I+J)^k)` for `k = 1..=kmax`,
/// computed directly on the juxtaposed ring and through
///
/// ```text
/// depth = min_{i in [1,k-1], j in [1,k]} { depth A/I_(k-i) + depth B/J_i + 1,
///                                          depth A/I_(k-j+1) + depth B/J_j }
/// reg   = max_{i in [1,k-1], j in [1,k]} { reg A/I_(k-i) + reg B/J_i + 1,
///                                          reg A/I_(k-j+1) + reg B/J_j }
/// ```
///
/// where `I_a` abbreviates `closure(I^a)`. No hypothesis is checked.
pub fn compare_depth_reg(i: &MonomialIdeal, j: &MonomialIdeal, kmax: u32) -> Result<Vec<DepthRegRow>> {
    if kmax == 0 {
        return Err(Error::Precondition("kmax must be at least 1".into()));
    }
    let (sum, _) = external_sum(i, j)?;
    let invariants = |ideal: &MonomialIdeal| -> Result<Vec<(usize, i64)>> {
        (0..=kmax)
            .map(|a| {
                if a == 0 {
                    // A / closure(I^0) is the zero module and never enters the formula
                    return Ok((0, 0));
                }
                let r = depth_and_reg(&integral_closure_power(ideal, a)?)?;
                Ok((r.depth, r.regularity))
            })
            .collect()
    };
    let inv_i = invariants(i)?;
    let inv_j = invariants(j)?;
    (1..=kmax)
        .map(|k| {
            let direct = depth_and_reg(&integral_closure_power(&sum, k)?)?;
            let mut depth_terms = Vec::new();
            let mut reg_terms = Vec::new();
            for a in 1..k {
                let (ia, ib) = (&inv_i[(k - a) as usize], &inv_j[a as usize]);
                depth_terms.push(ia.0 + ib.0 + 1);
                reg_terms.push(ia.1 + ib.1 + 1);
            }
            for b in 1..=k {
                let (ia, ib) = (&inv_i[(k - b + 1) as usize], &inv_j[b as usize]);
                depth_terms.push(ia.0 + ib.0);
                reg_terms.push(ia.1 + ib.1);
            }
            Ok(DepthRegRow {
                k,
                depth: direct.depth,
                depth_formula: depth_terms.into_iter().min().expect("j = k term"),
                regularity: direct.regularity,
                regularity_formula: reg_terms.into_iter().max().expect("j = k term"),
            })
        })
        .collect()
}

/// [`compare_depth_reg`] guarded by the integrality hypothesis on `I`;
/// refuses with the offending dual vertex when it fails.
pub fn verify_depth_reg_theorem(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    kmax: u32,
) -> Result<DepthRegReport> {
    let hypothesis = nu_star_integrality(i)?;
    if let Some(vertex) = &hypothesis.witness {
        return Err(Error::NonIntegralVertex {
            vertex: vertex.clone(),
        });
    }
    Ok(DepthRegReport {
        hypothesis,
        rows: compare_depth_reg(i, j, kmax)?,
    })
}
