//! Exact linear algebra over the rationals: sparse vectors keyed by an
//! ordered basis-label type, incremental reduced echelon bases, and
//! fraction-free determinants.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// All coefficients in the crate are arbitrary-precision rationals.
/// `BigRational` keeps the reduced-form / positive-denominator invariants.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact decimal-free text form: "p" or "p/q" with q > 0.
pub fn rat_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_str(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::invalid(format!("malformed integer `{t}`")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let denom = parse_int(d)?;
            if denom.is_zero() {
                return Err(Error::invalid(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(parse_int(n)?, denom))
        }
    }
}

/// A sparse vector over an ordered key universe. Zero entries are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SparseVector<K: Ord + Clone> {
    entries: BTreeMap<K, Rational>,
}

impl<K: Ord + Clone> Default for SparseVector<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> SparseVector<K> {
    pub fn new() -> Self {
        SparseVector {
            entries: BTreeMap::new(),
        }
    }

    pub fn unit(key: K) -> Self {
        let mut v = Self::new();
        v.set(key, Rational::one());
        v
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (K, Rational)>) -> Self {
        let mut v = Self::new();
        for (k, c) in pairs {
            v.add_to(k, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &K) -> Option<&Rational> {
        self.entries.get(key)
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.entries
            .get(key)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, key: K, value: Rational) {
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn add_to(&mut self, key: K, value: Rational) {
        if value.is_zero() {
            return;
        }
        let entry = self
            .entries
            .entry(key.clone())
            .or_insert_with(Rational::zero);
        *entry += value;
        if entry.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.entries.iter()
    }

    /// Smallest key with a nonzero coefficient.
    pub fn leading_key(&self) -> Option<&K> {
        self.entries.keys().next()
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for v in self.entries.values_mut() {
            *v *= c;
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        out.scale(c);
        out
    }

    /// self += c * other
    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.entries.iter() {
            self.add_to(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }
}

impl<K: Ord + Clone + fmt::Debug> fmt::Display for SparseVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.entries.iter() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}*{:?}", rat_to_string(c), k)?;
            first = false;
        }
        Ok(())
    }
}

/// Incremental span in reduced echelon form: pivots strictly increasing,
/// each pivot entry 1, pivot key zero in every other row.
#[derive(Debug, Clone)]
pub struct SpanBasis<K: Ord + Clone> {
    rows: Vec<SparseVector<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for SpanBasis<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> SpanBasis<K> {
    pub fn new() -> Self {
        SpanBasis {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector<K>] {
        &self.rows
    }

    /// Residual of `v` after elimination against the current span. Pivots are
    /// always the smallest nonzero key of a row.
    pub fn residual(&self, v: &SparseVector<K>) -> SparseVector<K> {
        let mut residual = v.clone();
        // One ascending sweep suffices: eliminating pivot k only touches
        // keys > k because rows are fully reduced.
        let mut cursor: Option<K> = None;
        loop {
            let hit = residual
                .entries
                .range((
                    match &cursor {
                        None => std::ops::Bound::Unbounded,
                        Some(c) => std::ops::Bound::Excluded(c.clone()),
                    },
                    std::ops::Bound::Unbounded,
                ))
                .find(|(k, _)| self.pivots.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            match hit {
                None => break,
                Some((k, c)) => {
                    let row = &self.rows[self.pivots[&k]];
                    residual.add_scaled(row, &-c);
                    cursor = Some(k);
                }
            }
        }
        residual
    }

    /// Reduce `v` against the span; if the residual is nonzero the basis
    /// grows by its normalized form. Returns (residual, grew).
    pub fn reduce_into(&mut self, v: &SparseVector<K>) -> (SparseVector<K>, bool) {
        let residual = self.residual(v);
        if residual.is_zero() {
            return (residual, false);
        }
        let pivot = residual.leading_key().cloned().expect("nonzero residual");
        let lead = residual.coeff(&pivot);
        let mut row = residual.clone();
        row.scale(&(Rational::one() / lead));
        // Keep the invariant: the new pivot key vanishes in all other rows.
        for other in self.rows.iter_mut() {
            let c = other.coeff(&pivot);
            if !c.is_zero() {
                other.add_scaled(&row, &-c);
            }
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(row);
        (residual, true)
    }

    pub fn contains(&self, v: &SparseVector<K>) -> bool {
        self.residual(v).is_zero()
    }
}

/// Exact rank of a set of sparse vectors.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = SparseVector<K>>) -> usize {
    let mut basis = SpanBasis::new();
    for v in vectors {
        basis.reduce_into(&v);
    }
    basis.dim()
}

fn check_square(m: &[Vec<Rational>]) -> Result<usize> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected square matrix, got row of length {} in a {}-row matrix",
                row.len(),
                n
            )));
        }
    }
    Ok(n)
}

/// Exact determinant via Bareiss fraction-free elimination on a
/// denominator-cleared integer matrix. The empty matrix has determinant 1.
pub fn determinant(m: &[Vec<Rational>]) -> Result<Rational> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    // Clear denominators row by row and track the scale.
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m {
        let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        a.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
        scale *= lcm;
    }
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Exact by the Bareiss identity.
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = &a[n - 1][n - 1] * BigInt::from(sign);
    Ok(Rational::new(det, scale))
}

/// Checks the Sylvester determinant identity for s x s matrices M, N and
/// 1 <= k <= s: det M det N equals the sum over column sets r_1 < ... < r_k
/// of det M' det N', where M' takes the first k columns of N in place of
/// columns r_1..r_k and N' takes those columns of M in place of its first k.
pub fn sylvester_check(m: &[Vec<Rational>], n: &[Vec<Rational>], k: usize) -> Result<bool> {
    let s = check_square(m)?;
    if check_square(n)? != s {
        return Err(Error::DimensionMismatch(format!(
            "matrices of sizes {} and {} in Sylvester identity",
            s,
            n.len()
        )));
    }
    if k == 0 || k > s {
        return Err(Error::invalid(format!(
            "Sylvester exchange size k={k} out of range 1..={s}"
        )));
    }
    let mut total = determinant(m)? * determinant(n)?;
    for cols in (0..s).combinations(k) {
        let mut mp = m.to_vec();
        let mut np = n.to_vec();
        for (t, &r) in cols.iter().enumerate() {
            for row in 0..s {
                mp[row][r] = n[row][t].clone();
                np[row][t] = m[row][r].clone();
            }
        }
        total -= determinant(&mp)? * determinant(&np)?;
    }
    Ok(total.is_zero())
}
