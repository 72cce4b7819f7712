//! Linear-algebra side: exact subspaces in reduced echelon form,
//! membership tests for the desingularized and degenerate flag varieties,
//! orbit points from parameters, and Pluecker coordinates by maximal
//! minors.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{self, Rational};
use crate::fundmod::allowed_indices;
use crate::pluecker::{ParamMap, XVar};
use crate::roots::{positive_roots, RootIndex};

/// A subspace of the standard n-dimensional space, canonicalized to
/// reduced row-echelon form so that equality and containment are decided
/// by exact elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        for row in &rows {
            if row.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in ambient dimension {ambient}",
                    row.len()
                )));
            }
        }
        Ok(Subspace {
            ambient,
            rows: rref(rows),
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        let mut v = v.to_vec();
        for row in &self.rows {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let c = v[pivot].clone();
            if !c.is_zero() {
                for (a, b) in v.iter_mut().zip(row) {
                    *a -= &c * b;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains_vector(r))
    }

    /// Image under the coordinate-killing projection pr_k (kills w_k).
    pub fn project_kill(&self, k: usize) -> Result<Subspace> {
        if k < 1 || k > self.ambient {
            return Err(Error::invalid(format!(
                "projection index {k} out of range 1..={}",
                self.ambient
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r[k - 1] = Rational::zero();
                r
            })
            .collect();
        Subspace::from_rows(self.ambient, rows)
    }
}

/// Reduced row-echelon form; zero rows dropped.
fn rref(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivot_rows: Vec<Vec<Rational>> = Vec::new();
    for col in 0..cols {
        if let Some(idx) = rows
            .iter()
            .position(|r| !r[col].is_zero() && r[..col].iter().all(|x| x.is_zero()))
        {
            let mut pivot = rows.swap_remove(idx);
            let inv = Rational::one() / pivot[col].clone();
            for x in pivot.iter_mut() {
                *x *= &inv;
            }
            for r in rows.iter_mut().chain(pivot_rows.iter_mut()) {
                let c = r[col].clone();
                if !c.is_zero() {
                    for (a, b) in r.iter_mut().zip(&pivot) {
                        *a -= &c * b;
                    }
                }
            }
            pivot_rows.push(pivot);
        }
    }
    pivot_rows
}

/// A point of the desingularization: one subspace per positive root.
#[derive(Debug, Clone)]
pub struct RnPoint {
    pub n: usize,
    pub spaces: BTreeMap<RootIndex, Subspace>,
}

/// A point of the degenerate flag variety.
#[derive(Debug, Clone)]
pub struct FlagPoint {
    pub n: usize,
    pub spaces: Vec<Subspace>,
}

/// The orbit point of the parameters c: factor (i,j) is spanned by the
/// rows w_r + sum_{b >= j} c_{r,b} w_{b+1}, r = 1..i.
pub fn orbit_point(n: usize, c: &ParamMap) -> Result<RnPoint> {
    crate::pluecker::validate_params(n, c)?;
    let mut spaces = BTreeMap::new();
    for root in positive_roots(n)? {
        let (i, j) = (root.i, root.j);
        let mut rows = Vec::new();
        for r in 1..=i {
            let mut row = vec![Rational::zero(); n];
            row[r - 1] = Rational::one();
            for b in j..n {
                row[b] = c[&RootIndex::new(r, b)].clone();
            }
            rows.push(row);
        }
        spaces.insert(root, Subspace::from_rows(n, rows)?);
    }
    Ok(RnPoint { n, spaces })
}

fn coordinate_subspace(n: usize, factor: RootIndex) -> Subspace {
    let allowed = allowed_indices(n, factor).expect("valid factor");
    let rows = allowed
        .iter()
        .map(|&l| {
            let mut row = vec![Rational::zero(); n];
            row[l - 1] = Rational::one();
            row
        })
        .collect();
    Subspace::from_rows(n, rows).expect("unit rows")
}

/// Exact check of the three membership condition families, reporting each
/// violation in a fixed order: dimensions and coordinate-window
/// containments first, then the chain conditions, then the projection
/// conditions.
pub fn is_rn_member(p: &RnPoint) -> Result<(bool, Vec<String>)> {
    let n = p.n;
    let roots = positive_roots(n)?;
    for root in &roots {
        if !p.spaces.contains_key(root) {
            return Err(Error::invalid(format!("point misses factor {root}")));
        }
    }
    let mut violations = Vec::new();
    for &root in &roots {
        let (i, j) = (root.i, root.j);
        let v = &p.spaces[&root];
        if v.ambient() != n {
            return Err(Error::DimensionMismatch(format!(
                "factor {root} lives in ambient dimension {}",
                v.ambient()
            )));
        }
        if v.dim() != i {
            violations.push(format!("dim V_{{{i},{j}}} = {} != {i}", v.dim()));
        }
        if !coordinate_subspace(n, root).contains(v) {
            violations.push(format!("V_{{{i},{j}}} not inside W_{{{i},{j}}}"));
        }
    }
    for &root in &roots {
        let (i, j) = (root.i, root.j);
        if i < j {
            let big = RootIndex::new(i + 1, j);
            if !p.spaces[&big].contains(&p.spaces[&root]) {
                violations.push(format!("V_{{{i},{j}}} not inside V_{{{},{j}}}", i + 1));
            }
        }
    }
    for &root in &roots {
        let (i, j) = (root.i, root.j);
        if j < n - 1 {
            let next = RootIndex::new(i, j + 1);
            let projected = p.spaces[&root].project_kill(j + 1)?;
            if !p.spaces[&next].contains(&projected) {
                violations.push(format!(
                    "pr_{} V_{{{i},{j}}} not inside V_{{{i},{}}}",
                    j + 1,
                    j + 1
                ));
            }
        }
    }
    Ok((violations.is_empty(), violations))
}

/// The surjection onto the degenerate flag variety: keep the diagonal
/// factors.
pub fn project_to_flag(p: &RnPoint) -> Result<FlagPoint> {
    let (ok, violations) = is_rn_member(p)?;
    if !ok {
        return Err(Error::invalid(format!(
            "not a member of the desingularization: {}",
            violations.join("; ")
        )));
    }
    let spaces = (1..p.n)
        .map(|i| p.spaces[&RootIndex::new(i, i)].clone())
        .collect();
    Ok(FlagPoint { n: p.n, spaces })
}

/// Degenerate flag membership: dim V_i = i and pr_{i+1} V_i inside V_{i+1}.
pub fn is_fna_member(f: &FlagPoint) -> Result<bool> {
    if f.spaces.len() != f.n - 1 {
        return Err(Error::DimensionMismatch(format!(
            "flag with {} steps for n={}",
            f.spaces.len(),
            f.n
        )));
    }
    for (idx, v) in f.spaces.iter().enumerate() {
        if v.dim() != idx + 1 {
            return Ok(false);
        }
    }
    for idx in 0..f.spaces.len() - 1 {
        let projected = f.spaces[idx].project_kill(idx + 2)?;
        if !f.spaces[idx + 1].contains(&projected) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All maximal minors of the basis matrix, indexed by the factor's valid
/// column tuples.
pub fn pluecker_of_subspace(
    v: &Subspace,
    n: usize,
    factor: RootIndex,
) -> Result<BTreeMap<XVar, Rational>> {
    factor.check(n)?;
    if v.dim() != factor.i {
        return Err(Error::DimensionMismatch(format!(
            "subspace of dimension {} for factor ({}, {})",
            v.dim(),
            factor.i,
            factor.j
        )));
    }
    if !coordinate_subspace(n, factor).contains(v) {
        return Err(Error::invalid(format!(
            "subspace not inside the coordinate window of ({}, {})",
            factor.i, factor.j
        )));
    }
    let allowed = allowed_indices(n, factor)?;
    let mut out = BTreeMap::new();
    for cols in allowed.iter().copied().combinations(factor.i) {
        let matrix: Vec<Vec<Rational>> = v
            .rows()
            .iter()
            .map(|row| cols.iter().map(|&c| row[c - 1].clone()).collect())
            .collect();
        let minor = exactlin::determinant(&matrix)?;
        out.insert(
            XVar {
                factor,
                indices: cols,
            },
            minor,
        );
    }
    Ok(out)
}
