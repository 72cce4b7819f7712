//! Generator for the generalized Pluecker relations coupling two factors,
//! and the exhaustive enumeration of all valid relation labels.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactlin::Rational;
use crate::fundmod::allowed_indices;
use crate::roots::{positive_roots, RootIndex};

use super::{canonicalize, XPoly};

/// Label of one relation: factors with i1 >= i2, an exchange size k and
/// index tuples L (length i1) and P (length i2).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RelationData {
    pub factor1: RootIndex,
    pub factor2: RootIndex,
    pub k: usize,
    pub l: Vec<usize>,
    pub p: Vec<usize>,
}

fn distinct(tuple: &[usize]) -> bool {
    let set: BTreeSet<usize> = tuple.iter().copied().collect();
    set.len() == tuple.len()
}

fn within(tuple: &[usize], small_max: usize, large_min: usize, n: usize) -> bool {
    tuple
        .iter()
        .all(|&l| (1 <= l && l <= small_max) || (large_min <= l && l <= n))
}

impl RelationData {
    /// Validates every labeling constraint, naming the first violated one.
    pub fn validate(&self, n: usize) -> Result<()> {
        self.factor1.check(n)?;
        self.factor2.check(n)?;
        let (i1, j1) = (self.factor1.i, self.factor1.j);
        let (i2, j2) = (self.factor2.i, self.factor2.j);
        if i1 < i2 {
            return Err(Error::invalid(format!(
                "relation data requires i1 >= i2, got i1={i1} i2={i2}"
            )));
        }
        if self.k < 1 || self.k > i2 {
            return Err(Error::invalid(format!(
                "exchange size k={} out of range 1..={i2}",
                self.k
            )));
        }
        if self.l.len() != i1 {
            return Err(Error::invalid(format!(
                "L has {} entries, expected i1={i1}",
                self.l.len()
            )));
        }
        if self.p.len() != i2 {
            return Err(Error::invalid(format!(
                "P has {} entries, expected i2={i2}",
                self.p.len()
            )));
        }
        if !distinct(&self.l) {
            return Err(Error::invalid("L has repeated entries".to_string()));
        }
        if !distinct(&self.p) {
            return Err(Error::invalid("P has repeated entries".to_string()));
        }
        if !within(&self.l, i1, j1 + 1, n) {
            return Err(Error::invalid(format!(
                "L not inside {{1..{i1}}} u {{{}..{n}}}",
                j1 + 1
            )));
        }
        if !within(&self.p, i2, j2 + 1, n) {
            return Err(Error::invalid(format!(
                "P not inside {{1..{i2}}} u {{{}..{n}}}",
                j2 + 1
            )));
        }
        // When j1 <= j2 the L-entries must avoid the dead window (i1, j2].
        if j1 <= j2 && !within(&self.l, i1, j2 + 1, n) {
            return Err(Error::invalid(format!(
                "j1 <= j2 requires L inside {{1..{i1}}} u {{{}..{n}}}",
                j2 + 1
            )));
        }
        // The initial term is present only when the exchanged P-entries
        // avoid the window (i2, j1].
        if !within(&self.p[..self.k], i2, j1 + 1, n) {
            return Err(Error::invalid(format!(
                "first k={} entries of P must lie inside {{1..{i2}}} u {{{}..{n}}}",
                self.k,
                j1 + 1
            )));
        }
        Ok(())
    }
}

/// The relation attached to a label:
///
///   X_L X_P - sum over positions r_1 < .. < r_k of L with entries in
///   {1..i2} u {j1+1..n}, of the exchanged pair X_{L'} X_{P'},
///
/// where L' carries p_1..p_k in the chosen slots and P' starts with the
/// displaced entries of L. Exchanged terms that leave a factor's allowed
/// index set or collide canonicalize to zero. The result may cancel to
/// the zero polynomial.
pub fn generate_relation(n: usize, data: &RelationData) -> Result<XPoly> {
    data.validate(n)?;
    let (i1, j1) = (data.factor1.i, data.factor1.j);
    let i2 = data.factor2.i;

    let mut out = XPoly::zero();
    let (lv, ls) = canonicalize(n, data.factor1, &data.l).expect("validated L canonicalizes");
    let (pv, ps) = canonicalize(n, data.factor2, &data.p).expect("validated P canonicalizes");
    let mut initial = Rational::one();
    if ls * ps < 0 {
        initial = -initial;
    }
    out.add_term(vec![lv, pv], initial);

    let exchangeable = |l: usize| (1 <= l && l <= i2) || (j1 < l && l <= n);
    for positions in (0..i1).combinations(data.k) {
        if !positions.iter().all(|&t| exchangeable(data.l[t])) {
            continue;
        }
        let mut l_new = data.l.clone();
        for (t, &pos) in positions.iter().enumerate() {
            l_new[pos] = data.p[t];
        }
        let mut p_new: Vec<usize> = positions.iter().map(|&pos| data.l[pos]).collect();
        p_new.extend_from_slice(&data.p[data.k..]);

        let left = canonicalize(n, data.factor1, &l_new);
        let right = canonicalize(n, data.factor2, &p_new);
        if let (Some((lv, ls)), Some((pv, ps))) = (left, right) {
            let mut c = -Rational::one();
            if ls * ps < 0 {
                c = -c;
            }
            out.add_term(vec![lv, pv], c);
        }
    }
    Ok(out)
}

/// Every valid relation label for the given n together with its polynomial,
/// deterministic order; identically-zero polynomials are kept so callers
/// can see the zero flag.
pub fn enumerate_relations_filtered(
    n: usize,
    mut pred: impl FnMut(&RelationData) -> bool,
) -> Result<Vec<(RelationData, XPoly)>> {
    let roots = positive_roots(n)?;
    let mut out = Vec::new();
    for &factor1 in &roots {
        for &factor2 in &roots {
            if factor2.i > factor1.i {
                continue;
            }
            let (i1, j1) = (factor1.i, factor1.j);
            let (i2, j2) = (factor2.i, factor2.j);
            let mut l_allowed = allowed_indices(n, factor1)?;
            if j1 <= j2 {
                l_allowed.retain(|&l| l <= i1 || l > j2);
            }
            let p_allowed = allowed_indices(n, factor2)?;
            for k in 1..=i2 {
                for l in l_allowed.iter().copied().combinations(i1) {
                    for p in p_allowed.iter().copied().combinations(i2) {
                        let data = RelationData {
                            factor1,
                            factor2,
                            k,
                            l: l.clone(),
                            p,
                        };
                        if data.validate(n).is_err() || !pred(&data) {
                            continue;
                        }
                        let poly = generate_relation(n, &data)?;
                        out.push((data, poly));
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn enumerate_relations(n: usize) -> Result<Vec<(RelationData, XPoly)>> {
    enumerate_relations_filtered(n, |_| true)
}

/// Distinct nonzero relations up to scalar: normalized polynomials keyed by
/// first occurrence, in enumeration order.
pub fn distinct_nonzero_relations(n: usize) -> Result<Vec<(RelationData, XPoly)>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (data, poly) in enumerate_relations(n)? {
        if poly.is_zero() {
            continue;
        }
        let normal = poly.normalized();
        if seen.insert(normal.clone()) {
            out.push((data, normal));
        }
    }
    Ok(out)
}
