//! Fundamental modules attached to positive roots: wedge bases of the
//! coordinate subspaces W_{i,j}, the lowering-operator action and the
//! PBW grading.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactlin::SparseVector;
use crate::roots::RootIndex;

/// Basis label of the module attached to (i,j): a strictly increasing
/// i-tuple inside {1..i} u {j+1..n}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeKey {
    pub factor: RootIndex,
    pub indices: Vec<usize>,
}

impl WedgeKey {
    pub fn new(factor: RootIndex, indices: Vec<usize>) -> Self {
        WedgeKey { factor, indices }
    }

    /// The degree-zero key (1, ..., i) of the factor.
    pub fn highest(factor: RootIndex) -> Self {
        WedgeKey::new(factor, (1..=factor.i).collect())
    }
}

impl fmt::Display for WedgeKey {
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

/// Sorts a tuple, returning the permutation sign; a repeated entry flags
/// the wedge as zero.
pub fn sort_with_sign(tuple: &[usize]) -> (Vec<usize>, i8, bool) {
    let mut sorted = tuple.to_vec();
    let mut sign = 1i8;
    // Insertion sort; swap count parity is the permutation sign.
    for a in 1..sorted.len() {
        let mut b = a;
        while b > 0 && sorted[b - 1] > sorted[b] {
            sorted.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    let repeated = sorted.windows(2).any(|w| w[0] == w[1]);
    (sorted, sign, repeated)
}

/// The index set {1..i} u {j+1..n} spanning W_{i,j}.
pub fn allowed_indices(n: usize, factor: RootIndex) -> Result<Vec<usize>> {
    factor.check(n)?;
    Ok((1..=factor.i).chain(factor.j + 1..=n).collect())
}

/// All basis keys of the factor module, lexicographic; there are
/// binom(i + n - j, i) of them.
pub fn fundamental_basis(n: usize, i: usize, j: usize) -> Result<Vec<WedgeKey>> {
    let factor = RootIndex::new(i, j);
    let allowed = allowed_indices(n, factor)?;
    Ok(allowed
        .into_iter()
        .combinations(i)
        .map(|indices| WedgeKey::new(factor, indices))
        .collect())
}

/// Number of entries exceeding j: the PBW degree of the key.
pub fn pbw_degree(key: &WedgeKey) -> usize {
    key.indices.iter().filter(|&&l| l > key.factor.j).count()
}

/// Action of f_{a,b} on a single key: zero unless a <= i <= j <= b, else the
/// derivation replacing index a by b+1 (zero if absent or colliding).
pub fn f_on_key(a: usize, b: usize, key: &WedgeKey) -> Option<(WedgeKey, i8)> {
    let RootIndex { i, j } = key.factor;
    if !(a <= i && j <= b) {
        return None;
    }
    let pos = key.indices.iter().position(|&l| l == a)?;
    if key.indices.contains(&(b + 1)) {
        return None;
    }
    let mut raw = key.indices.clone();
    raw[pos] = b + 1;
    let (sorted, sign, repeated) = sort_with_sign(&raw);
    debug_assert!(!repeated);
    Some((WedgeKey::new(key.factor, sorted), sign))
}

/// Linear extension of `f_on_key` to sparse vectors over one factor.
pub fn f_action_fund(
    a: usize,
    b: usize,
    v: &SparseVector<WedgeKey>,
    n: usize,
) -> Result<SparseVector<WedgeKey>> {
    RootIndex::new(a, b).check(n)?;
    let mut out = SparseVector::new();
    for (key, coeff) in v.iter() {
        if let Some((image, sign)) = f_on_key(a, b, key) {
            let mut c = coeff.clone();
            if sign < 0 {
                c = -c;
            }
            out.add_to(image, c);
        }
    }
    Ok(out)
}

/// Euler-type weight: indicator vector of the key's index set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub coordinates: Vec<i64>,
}

pub fn weight_of(key: &WedgeKey, n: usize) -> Result<Weight> {
    key.factor.check(n)?;
    let mut coordinates = vec![0i64; n];
    for &l in &key.indices {
        if l < 1 || l > n {
            return Err(Error::invalid(format!("index {l} out of range 1..={n}")));
        }
        coordinates[l - 1] += 1;
    }
    Ok(Weight { coordinates })
}
