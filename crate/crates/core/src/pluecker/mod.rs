//! Pluecker coordinates on the product of projective wedge spaces: the
//! variable ring, the generalized relations, the parametrization map into
//! the T/Z polynomial algebra, straightening, and the dual module action.

mod psi;
mod qmod;
mod relations;
mod straighten;

pub use psi::{
    evaluate_orbit, evaluate_orbit_poly, psi, psi_var, validate_params, verify_vanishing, ParamMap,
};
pub use qmod::{cocyclicity_probe, f_action_q, f_q_on_var, qm_dimension, CocyclicityOutcome};
pub use relations::{
    distinct_nonzero_relations, enumerate_relations, enumerate_relations_filtered,
    generate_relation, RelationData,
};
pub use straighten::{multiply_by_degree_zero, straighten};

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactlin::{rat_to_string, Rational};
use crate::fundmod::{allowed_indices, sort_with_sign, WedgeKey};
use crate::roots::{MultDegree, RootIndex};
use num_traits::{One, Zero};

/// A Pluecker variable X_L^{(i,j)}: canonical sorted index tuple inside
/// the factor's allowed set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XVar {
    pub factor: RootIndex,
    pub indices: Vec<usize>,
}

impl XVar {
    /// The degree-zero coordinate X_{1..i} of the factor.
    pub fn highest(factor: RootIndex) -> Self {
        XVar {
            factor,
            indices: (1..=factor.i).collect(),
        }
    }

    /// The degree-one variable with r removed from {1..i} and m appended.
    pub fn degree_one(factor: RootIndex, r: usize, m: usize) -> Self {
        let mut indices: Vec<usize> = (1..=factor.i).filter(|&x| x != r).collect();
        indices.push(m);
        XVar { factor, indices }
    }
}

impl From<&WedgeKey> for XVar {
    fn from(key: &WedgeKey) -> Self {
        XVar {
            factor: key.factor,
            indices: key.indices.clone(),
        }
    }
}

impl fmt::Display for XVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "X[{},{}]({})",
            self.factor.i,
            self.factor.j,
            self.indices.iter().map(|l| l.to_string()).join(",")
        )
    }
}

/// PBW degree of a variable: entries exceeding j.
pub fn xvar_pbw_degree(v: &XVar) -> usize {
    v.indices.iter().filter(|&&l| l > v.factor.j).count()
}

/// Canonical form of an index tuple in a factor: `None` encodes the zero
/// wedge (repeated entry or an index outside {1..i} u {j+1..n}).
pub fn canonicalize(n: usize, factor: RootIndex, tuple: &[usize]) -> Option<(XVar, i8)> {
    let RootIndex { i, j } = factor;
    for &l in tuple {
        let ok = (1 <= l && l <= i) || (j < l && l <= n);
        if !ok {
            return None;
        }
    }
    let (sorted, sign, repeated) = sort_with_sign(tuple);
    if repeated {
        return None;
    }
    Some((
        XVar {
            factor,
            indices: sorted,
        },
        sign,
    ))
}

/// A monomial is a sorted multiset of variables.
pub type XMonomial = Vec<XVar>;

fn monomial_from(vars: impl IntoIterator<Item = XVar>) -> XMonomial {
    let mut m: Vec<XVar> = vars.into_iter().collect();
    m.sort();
    m
}

/// Multidegree profile of a monomial: factor -> number of variables.
pub fn monomial_profile(mono: &XMonomial) -> BTreeMap<RootIndex, u64> {
    let mut profile = BTreeMap::new();
    for v in mono {
        *profile.entry(v.factor).or_insert(0) += 1;
    }
    profile
}

/// A polynomial in Pluecker variables with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct XPoly {
    terms: BTreeMap<XMonomial, Rational>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = XPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(v: XVar) -> Self {
        let mut p = XPoly::zero();
        p.add_term(vec![v], Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&XMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &XMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c` times the (re-sorted) monomial.
    pub fn add_term(&mut self, mono: impl IntoIterator<Item = XVar>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = monomial_from(mono);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &XPoly, c: &Rational) {
        for (mono, coeff) in other.terms.iter() {
            self.add_term(mono.clone(), coeff * c);
        }
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &XPoly) -> XPoly {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scaled(&self, c: &Rational) -> XPoly {
        let mut out = XPoly::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in other.terms.iter() {
                let mono = monomial_from(m1.iter().cloned().chain(m2.iter().cloned()));
                out.add_term(mono, c1 * c2);
            }
        }
        out
    }

    pub fn mul_var(&self, v: &XVar) -> XPoly {
        let mut out = XPoly::zero();
        for (mono, c) in self.terms.iter() {
            let m = monomial_from(mono.iter().cloned().chain(std::iter::once(v.clone())));
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn is_multihomogeneous(&self) -> bool {
        let mut profiles = self.terms.keys().map(monomial_profile);
        match profiles.next() {
            None => true,
            Some(first) => profiles.all(|p| p == first),
        }
    }

    /// The common degree profile, if the polynomial is nonzero and
    /// multi-homogeneous.
    pub fn multidegree(&self) -> Option<BTreeMap<RootIndex, u64>> {
        let mut profiles = self.terms.keys().map(monomial_profile);
        let first = profiles.next()?;
        if profiles.all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn multidegree_as_mult(&self, n: usize) -> Result<MultDegree> {
        let profile = self.multidegree().ok_or_else(|| {
            Error::invalid("polynomial is zero or not multi-homogeneous".to_string())
        })?;
        MultDegree::from_entries(n, profile)
    }

    /// Monic form: unit coefficient on the greatest monomial. Relations that
    /// differ by a scalar normalize to the same polynomial.
    pub fn normalized(&self) -> XPoly {
        match self.terms.iter().next_back() {
            None => XPoly::zero(),
            Some((_, lead)) => {
                let inv = Rational::one() / lead.clone();
                self.scaled(&inv)
            }
        }
    }

    /// Variables occurring in the polynomial, with multiplicity collapsed.
    pub fn variables(&self) -> impl Iterator<Item = &XVar> {
        self.terms
            .keys()
            .flatten()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Leading (greatest) monomial first.
        for (pos, (mono, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || mono.is_empty();
            if show_coeff {
                write!(f, "{}", rat_to_string(&abs))?;
            }
            for (t, v) in mono.iter().enumerate() {
                if t > 0 || show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Variables of the parametrization algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TZVar {
    T(RootIndex),
    Z(RootIndex),
}

impl fmt::Display for TZVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TZVar::T(r) => write!(f, "T[{},{}]", r.i, r.j),
            TZVar::Z(r) => write!(f, "Z[{},{}]", r.i, r.j),
        }
    }
}

/// Exponent map of a T/Z monomial.
pub type TZMonomial = BTreeMap<TZVar, u32>;

fn tz_mul(a: &TZMonomial, b: &TZMonomial) -> TZMonomial {
    let mut out = a.clone();
    for (v, e) in b {
        *out.entry(*v).or_insert(0) += e;
    }
    out
}

/// A polynomial in the T and Z variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TZPoly {
    terms: BTreeMap<TZMonomial, Rational>,
}

impl TZPoly {
    pub fn zero() -> Self {
        TZPoly::default()
    }

    pub fn one() -> Self {
        TZPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = TZPoly::zero();
        p.add_term(TZMonomial::new(), c);
        p
    }

    pub fn var(v: TZVar) -> Self {
        let mut p = TZPoly::zero();
        p.add_term([(v, 1)].into_iter().collect(), Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TZMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mono: TZMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(mono.clone())
            .or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn add_scaled(&mut self, other: &TZPoly, c: &Rational) {
        for (mono, coeff) in other.terms.iter() {
            self.add_term(mono.clone(), coeff * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> TZPoly {
        let mut out = TZPoly::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &TZPoly) -> TZPoly {
        let mut out = TZPoly::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in other.terms.iter() {
                out.add_term(tz_mul(m1, m2), c1 * c2);
            }
        }
        out
    }

    pub fn sub(&self, other: &TZPoly) -> TZPoly {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    /// Total degree in the Z variables, over all terms; `None` when the
    /// terms disagree.
    pub fn z_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| {
            m.iter()
                .filter(|(v, _)| matches!(v, TZVar::Z(_)))
                .map(|(_, e)| e)
                .sum::<u32>()
        });
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// View as a sparse vector for rank computations.
    pub fn to_sparse(&self) -> crate::exactlin::SparseVector<TZMonomial> {
        crate::exactlin::SparseVector::from_pairs(
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

impl fmt::Display for TZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (mono, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || mono.is_empty();
            if show_coeff {
                write!(f, "{}", rat_to_string(&abs))?;
            }
            let mut first = !show_coeff;
            for (v, e) in mono {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if *e == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// All Pluecker variables of one factor, lexicographic.
pub fn factor_variables(n: usize, factor: RootIndex) -> Result<Vec<XVar>> {
    let allowed = allowed_indices(n, factor)?;
    Ok(allowed
        .into_iter()
        .combinations(factor.i)
        .map(|indices| XVar { factor, indices })
        .collect())
}
