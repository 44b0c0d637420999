//! Monomials, monomial ideals and their exponent matrices.
//!
//! A [`MonomialIdeal`] is stored as its unique minimal generating set, kept
//! in descending lexicographic order so that exponent matrices (and hence
//! LP bases) are reproducible. The zero ideal has no generators; the unit
//! ideal is generated by the zero vector.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Ordered variable names of a polynomial ring, optionally split into an
/// `A`-block (the first `r` names) and a `B`-block (the rest).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VariableContext {
    names: Vec<String>,
    block_split: Option<usize>,
}

impl VariableContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        Self::with_split(names, None)
    }

    pub fn with_split<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        block_split: Option<usize>,
    ) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidContext("no variables declared".into()));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if name.is_empty() {
                return Err(Error::InvalidContext("empty variable name".into()));
            }
            if !name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
                || !name.chars().next().is_some_and(|c| c.is_alphabetic())
            {
                return Err(Error::InvalidContext(format!(
                    "variable name `{name}` must start with a letter"
                )));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidContext(format!("duplicate variable `{name}`")));
            }
        }
        if let Some(r) = block_split {
            if r == 0 || r >= names.len() {
                return Err(Error::InvalidContext(format!(
                    "block split {r} outside 1..{}",
                    names.len()
                )));
            }
        }
        Ok(Arc::new(VariableContext { names, block_split }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn block_split(&self) -> Option<usize> {
        self.block_split
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Names can be written next to each other without a separator.
    fn single_letter(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Juxtaposes two disjoint contexts, recording the block boundary.
    pub fn juxtapose(a: &VariableContext, b: &VariableContext) -> Result<Arc<Self>> {
        if let Some(shared) = a.names.iter().find(|n| b.names.contains(n)) {
            return Err(Error::OverlappingVariables(shared.clone()));
        }
        Self::with_split(
            a.names.iter().chain(&b.names).cloned(),
            Some(a.names.len()),
        )
    }
}

/// Exponent vector of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Componentwise `self >= other`, i.e. `other` divides `self`.
    pub fn divisible_by(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, q: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * q).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// The vector with `entries` prepended by `offset` zeros and padded to
    /// length `n`.
    pub fn embed(&self, n: usize, offset: usize) -> ExponentVector {
        let mut v = vec![0; n];
        v[offset..offset + self.0.len()].copy_from_slice(&self.0);
        ExponentVector(v)
    }

    /// Compares in descending lexicographic order, the canonical order of
    /// generator lists.
    fn canonical_cmp(&self, other: &ExponentVector) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

/// Column matrix of minimal generator exponents. `rows` is the number of
/// variables, each column is one generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentMatrix {
    rows: usize,
    columns: Vec<ExponentVector>,
}

impl ExponentMatrix {
    pub fn from_columns(rows: usize, columns: Vec<ExponentVector>) -> Result<Self> {
        for c in &columns {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
        }
        Ok(ExponentMatrix { rows, columns })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.columns[col][row]
    }

    pub fn columns(&self) -> &[ExponentVector] {
        &self.columns
    }

    pub fn row_max(&self, row: usize) -> u32 {
        self.columns.iter().map(|c| c[row]).max().unwrap_or(0)
    }

    pub(crate) fn check_no_zero_column(&self) -> Result<()> {
        match self.columns.iter().position(ExponentVector::is_zero) {
            Some(j) => Err(Error::ZeroColumn(j)),
            None => Ok(()),
        }
    }
}

/// A monomial ideal, stored as its minimal generators in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    context: Arc<VariableContext>,
    generators: Vec<ExponentVector>,
}

/// Antichain of componentwise-minimal elements, in canonical order.
fn minimal_elements(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| g.divisible_by(k)) {
            kept.push(g);
        }
    }
    kept.sort_by(ExponentVector::canonical_cmp);
    kept
}

impl MonomialIdeal {
    /// Minimalizes `gens` into a monomial ideal over `context`.
    pub fn minimalize(
        context: Arc<VariableContext>,
        gens: impl IntoIterator<Item = ExponentVector>,
    ) -> Result<Self> {
        let n = context.len();
        let gens: Vec<ExponentVector> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(MonomialIdeal {
            context,
            generators: minimal_elements(gens),
        })
    }

    pub(crate) fn from_minimal_unchecked(
        context: Arc<VariableContext>,
        generators: Vec<ExponentVector>,
    ) -> Self {
        MonomialIdeal {
            context,
            generators: minimal_elements(generators),
        }
    }

    pub fn zero(context: Arc<VariableContext>) -> Self {
        MonomialIdeal {
            context,
            generators: Vec::new(),
        }
    }

    pub fn unit(context: Arc<VariableContext>) -> Self {
        let n = context.len();
        MonomialIdeal {
            context,
            generators: vec![ExponentVector::zeros(n)],
        }
    }

    /// The homogeneous maximal ideal generated by all variables.
    pub fn maximal(context: Arc<VariableContext>) -> Self {
        let n = context.len();
        let gens = (0..n).map(|i| ExponentVector::unit(n, i)).collect();
        MonomialIdeal::from_minimal_unchecked(context, gens)
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.context
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn num_vars(&self) -> usize {
        self.context.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(ExponentVector::is_squarefree)
    }

    pub fn exponent_matrix(&self) -> ExponentMatrix {
        ExponentMatrix {
            rows: self.num_vars(),
            columns: self.generators.clone(),
        }
    }

    fn same_context(&self, other: &MonomialIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.context, &other.context) || self.context == other.context {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn check_vector(&self, a: &ExponentVector) -> Result<()> {
        if a.len() != self.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars(),
                found: a.len(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_context(other)?;
        let gens = self.generators.iter().chain(&other.generators).cloned();
        Ok(MonomialIdeal::from_minimal_unchecked(
            self.context.clone(),
            gens.collect(),
        ))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_context(other)?;
        let gens = self
            .generators
            .iter()
            .cartesian_product(&other.generators)
            .map(|(f, g)| f.add(g))
            .collect();
        Ok(MonomialIdeal::from_minimal_unchecked(
            self.context.clone(),
            gens,
        ))
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.context.clone());
        for _ in 0..k {
            acc = acc.product(self).expect("same context");
        }
        acc
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_context(other)?;
        let gens = self
            .generators
            .iter()
            .cartesian_product(&other.generators)
            .map(|(f, g)| f.lcm(g))
            .collect();
        Ok(MonomialIdeal::from_minimal_unchecked(
            self.context.clone(),
            gens,
        ))
    }

    /// Whether the monomial `x^a` lies in the ideal.
    pub fn contains_monomial(&self, a: &ExponentVector) -> Result<bool> {
        self.check_vector(a)?;
        Ok(self.generators.iter().any(|g| a.divisible_by(g)))
    }

    /// Whether `other` is a subset of `self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_context(other)?;
        Ok(other
            .generators
            .iter()
            .all(|g| self.generators.iter().any(|f| g.divisible_by(f))))
    }

    /// Ideal generated by `f / x_i` over minimal generators `f` and
    /// variables `x_i` dividing `f`.
    pub fn delta_star(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("delta*"));
        }
        if self.is_unit() {
            return Ok(self.clone());
        }
        let mut gens = Vec::new();
        for g in &self.generators {
            for i in 0..g.len() {
                if g[i] > 0 {
                    let mut v = g.clone().into_inner();
                    v[i] -= 1;
                    gens.push(ExponentVector(v));
                }
            }
        }
        Ok(MonomialIdeal::from_minimal_unchecked(
            self.context.clone(),
            gens,
        ))
    }

    /// `m^e * I` where `m` is the ideal of all variables.
    pub fn maximal_power_times(&self, e: u32) -> Result<MonomialIdeal> {
        if e == 0 {
            return Err(Error::Precondition("maximal ideal power must be positive".into()));
        }
        MonomialIdeal::maximal(self.context.clone())
            .power(e)
            .product(self)
    }

    /// Extends the ideal to a larger context in which its variables occupy
    /// positions `offset..offset + n`.
    pub fn embed(&self, target: &Arc<VariableContext>, offset: usize) -> Result<MonomialIdeal> {
        let n = target.len();
        if offset + self.num_vars() > n
            || self.context.names()[..] != target.names()[offset..offset + self.num_vars()]
        {
            return Err(Error::ContextMismatch);
        }
        Ok(MonomialIdeal {
            context: target.clone(),
            generators: self
                .generators
                .iter()
                .map(|g| g.embed(n, offset))
                .sorted_by(ExponentVector::canonical_cmp)
                .collect(),
        })
    }

    /// Text rendering of a single monomial in this ideal's context.
    pub fn format_monomial(&self, a: &ExponentVector) -> String {
        format_monomial(&self.context, a)
    }

    /// Canonical text serialization: a `vars` line followed by one generator
    /// per line (`zero` for the zero ideal).
    pub fn to_text(&self) -> String {
        let mut out = format!("vars {}\n", self.context.names().join(" "));
        if self.is_zero() {
            out.push_str("zero\n");
        }
        for g in &self.generators {
            out.push_str(&format_monomial(&self.context, g));
            out.push('\n');
        }
        out
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| format_monomial(&self.context, g))
            .collect()
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MonomialIdeal", 2)?;
        st.serialize_field("vars", self.context.names())?;
        st.serialize_field("generators", &self.generator_strings())?;
        st.end()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

/// `I + J` for ideals in disjoint contexts, returned in the juxtaposed
/// context together with the block-diagonal exponent matrix `[M1 0; 0 M2]`.
pub fn external_sum(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
) -> Result<(MonomialIdeal, ExponentMatrix)> {
    let ctx = VariableContext::juxtapose(i.context(), j.context())?;
    let n = ctx.len();
    let r = i.num_vars();
    let columns: Vec<ExponentVector> = i
        .generators
        .iter()
        .map(|g| g.embed(n, 0))
        .chain(j.generators.iter().map(|g| g.embed(n, r)))
        .collect();
    let matrix = ExponentMatrix {
        rows: n,
        columns: columns.clone(),
    };
    let ideal = MonomialIdeal::from_minimal_unchecked(ctx, columns);
    Ok((ideal, matrix))
}

/// Renders `x^a` as e.g. `x^2yz` (single-letter names) or `x1^2*x2`.
pub fn format_monomial(ctx: &VariableContext, a: &ExponentVector) -> String {
    if a.is_zero() {
        return "1".to_string();
    }
    let sep = if ctx.single_letter() { "" } else { "*" };
    a.as_slice()
        .iter()
        .zip(ctx.names())
        .filter(|(e, _)| **e > 0)
        .map(|(e, name)| match e {
            1 => name.clone(),
            _ => format!("{name}^{e}"),
        })
        .join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(names: &str) -> Arc<VariableContext> {
        VariableContext::new(names.split_whitespace()).unwrap()
    }

    fn ideal(c: &Arc<VariableContext>, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(c.clone(), gens.iter().map(|g| ExponentVector::new(g.to_vec())))
            .unwrap()
    }

    fn gens(i: &MonomialIdeal) -> BTreeSet<Vec<u32>> {
        i.generators().iter().map(|g| g.as_slice().to_vec()).collect()
    }

    fn set(v: &[&[u32]]) -> BTreeSet<Vec<u32>> {
        v.iter().map(|g| g.to_vec()).collect()
    }

    #[test]
    fn minimalize_examples() {
        let c = ctx("x y");
        assert_eq!(gens(&ideal(&c, &[&[2, 0], &[2, 1]])), set(&[&[2, 0]]));
        assert!(ideal(&c, &[]).is_zero());
        assert_eq!(
            gens(&ideal(&c, &[&[2, 0], &[1, 1], &[0, 2]])),
            set(&[&[2, 0], &[1, 1], &[0, 2]])
        );
        let err = MonomialIdeal::minimalize(c, vec![ExponentVector::new(vec![1])]);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn canonical_order_is_descending_lex() {
        let c = ctx("x y");
        let i = ideal(&c, &[&[0, 2], &[2, 0], &[1, 1]]);
        assert_eq!(i.generator_strings(), vec!["x^2", "xy", "y^2"]);
    }

    #[test]
    fn sum_examples() {
        let c = ctx("x y");
        let a = ideal(&c, &[&[2, 0]]);
        let b = ideal(&c, &[&[1, 1]]);
        assert_eq!(gens(&a.sum(&b).unwrap()), set(&[&[2, 0], &[1, 1]]));
        assert_eq!(a.sum(&MonomialIdeal::zero(c.clone())).unwrap(), a);
        let ab = a.sum(&b).unwrap();
        let y2 = ideal(&c, &[&[0, 2]]);
        assert_eq!(
            gens(&ab.sum(&y2).unwrap()),
            set(&[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert_eq!(a.sum(&ideal(&ctx("x z"), &[&[1, 0]])), Err(Error::ContextMismatch));
    }

    #[test]
    fn product_and_power_examples() {
        let c = ctx("y z");
        let j = ideal(&c, &[&[2, 0], &[1, 1]]);
        assert_eq!(
            gens(&j.product(&j).unwrap()),
            set(&[&[4, 0], &[3, 1], &[2, 2]])
        );
        assert_eq!(j.power(1), j);
        assert!(j.power(0).is_unit());
        let x = ctx("x");
        assert_eq!(gens(&ideal(&x, &[&[2]]).power(3)), set(&[&[6]]));
    }

    #[test]
    fn intersection_examples() {
        let c = ctx("x y");
        let a = ideal(&c, &[&[2, 0]]);
        let b = ideal(&c, &[&[1, 1]]);
        assert_eq!(gens(&a.intersection(&b).unwrap()), set(&[&[2, 1]]));
        assert_eq!(a.intersection(&MonomialIdeal::unit(c.clone())).unwrap(), a);
        let xy2 = ideal(&c, &[&[2, 0], &[0, 2]]);
        assert_eq!(
            gens(&xy2.intersection(&b).unwrap()),
            set(&[&[2, 1], &[1, 2]])
        );
    }

    #[test]
    fn intersection_matches_brute_force() {
        // monomials of degree <= 4 in both (x^2, y^2) and (xy)
        let c = ctx("x y");
        let a = ideal(&c, &[&[2, 0], &[0, 2]]);
        let b = ideal(&c, &[&[1, 1]]);
        let both = a.intersection(&b).unwrap();
        for d in 0..=4u32 {
            for i in 0..=d {
                let m = ExponentVector::new(vec![i, d - i]);
                let expected =
                    a.contains_monomial(&m).unwrap() && b.contains_monomial(&m).unwrap();
                assert_eq!(both.contains_monomial(&m).unwrap(), expected, "{m:?}");
            }
        }
    }

    #[test]
    fn membership_examples() {
        let c = ctx("x y");
        let a = ideal(&c, &[&[2, 0], &[0, 2]]);
        assert!(a.contains_monomial(&ExponentVector::new(vec![3, 1])).unwrap());
        assert!(!a.contains_monomial(&ExponentVector::new(vec![1, 1])).unwrap());
        let z = MonomialIdeal::zero(c.clone());
        assert!(z.contains(&z).unwrap());
        assert!(MonomialIdeal::unit(c).contains(&a).unwrap());
    }

    #[test]
    fn delta_star_examples() {
        let c = ctx("x y");
        let i = ideal(&c, &[&[2, 1]]);
        assert_eq!(gens(&i.delta_star().unwrap()), set(&[&[1, 1], &[2, 0]]));
        let x = ctx("x");
        assert!(ideal(&x, &[&[1]]).delta_star().unwrap().is_unit());
        let yz = ctx("y z");
        let j2 = ideal(&yz, &[&[4, 0], &[3, 1], &[2, 2]]);
        assert_eq!(
            gens(&j2.delta_star().unwrap()),
            set(&[&[3, 0], &[2, 1], &[1, 2]])
        );
        assert_eq!(
            MonomialIdeal::zero(yz).delta_star(),
            Err(Error::ZeroIdeal("delta*"))
        );
    }

    #[test]
    fn maximal_power_times_examples() {
        let x = ctx("x");
        assert_eq!(
            gens(&ideal(&x, &[&[1]]).maximal_power_times(1).unwrap()),
            set(&[&[2]])
        );
        let c = ctx("x y");
        assert_eq!(
            gens(&ideal(&c, &[&[2, 0]]).maximal_power_times(1).unwrap()),
            set(&[&[3, 0], &[2, 1]])
        );
        assert_eq!(
            gens(&MonomialIdeal::unit(c.clone()).maximal_power_times(2).unwrap()),
            set(&[&[2, 0], &[1, 1], &[0, 2]])
        );
    }

    #[test]
    fn external_sum_examples() {
        let i = ideal(&ctx("x"), &[&[2]]);
        let j = ideal(&ctx("y"), &[&[2]]);
        let (s, m) = external_sum(&i, &j).unwrap();
        assert_eq!(gens(&s), set(&[&[2, 0], &[0, 2]]));
        assert_eq!(m.rows(), 2);
        assert_eq!((m.get(0, 0), m.get(1, 0), m.get(0, 1), m.get(1, 1)), (2, 0, 0, 2));
        assert_eq!(s.context().block_split(), Some(1));

        let j = ideal(&ctx("y z"), &[&[2, 0], &[1, 1]]);
        let (s, m) = external_sum(&i, &j).unwrap();
        assert_eq!(gens(&s), set(&[&[2, 0, 0], &[0, 2, 0], &[0, 1, 1]]));
        let rows: Vec<Vec<u32>> = (0..3)
            .map(|r| (0..3).map(|c| m.get(r, c)).collect())
            .collect();
        assert_eq!(rows, vec![vec![2, 0, 0], vec![0, 2, 1], vec![0, 0, 1]]);

        let (s, _) = external_sum(&MonomialIdeal::zero(ctx("x")), &j).unwrap();
        assert_eq!(gens(&s), set(&[&[0, 2, 0], &[0, 1, 1]]));

        assert_eq!(
            external_sum(&i, &ideal(&ctx("x"), &[&[1]])).unwrap_err(),
            Error::OverlappingVariables("x".into())
        );
    }

    #[test]
    fn context_validation() {
        assert!(VariableContext::new(["x", "x"]).is_err());
        assert!(VariableContext::new(Vec::<String>::new()).is_err());
        assert!(VariableContext::with_split(["x", "y"], Some(2)).is_err());
        assert!(VariableContext::with_split(["x", "y"], Some(1)).is_ok());
    }

    #[test]
    fn monomial_formatting() {
        let c = ctx("x y z");
        assert_eq!(format_monomial(&c, &ExponentVector::new(vec![1, 3, 0])), "xy^3");
        assert_eq!(format_monomial(&c, &ExponentVector::zeros(3)), "1");
        let c = ctx("x1 x2");
        assert_eq!(format_monomial(&c, &ExponentVector::new(vec![2, 1])), "x1^2*x2");
    }
}
