//! Positive roots of sl_n, Dyck paths between them, the window bounds
//! D_{i,j}, and lattice-point enumeration of the associated polytopes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A positive root alpha_{i,j} = alpha_i + ... + alpha_j, 1 <= i <= j <= n-1.
/// The same label indexes lowering operators, Pluecker variable groups and
/// multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootIndex {
    pub i: usize,
    pub j: usize,
}

impl RootIndex {
    pub fn new(i: usize, j: usize) -> Self {
        RootIndex { i, j }
    }

    pub fn is_valid(&self, n: usize) -> bool {
        1 <= self.i && self.i <= self.j && self.j <= n.saturating_sub(1)
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.is_valid(n) {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "root ({},{}) invalid for n={n}: need 1 <= i <= j <= n-1",
                self.i, self.j
            )))
        }
    }
}

impl fmt::Display for RootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// All positive roots for rank n-1, in lexicographic order.
pub fn positive_roots(n: usize) -> Result<Vec<RootIndex>> {
    if n < 2 {
        return Err(Error::invalid(format!("n={n} must be at least 2")));
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..n {
        for j in i..n {
            out.push(RootIndex::new(i, j));
        }
    }
    Ok(out)
}

/// Lookup table between roots and their positions in lexicographic order.
#[derive(Debug, Clone)]
pub struct RootSystem {
    n: usize,
    roots: Vec<RootIndex>,
    index: BTreeMap<RootIndex, usize>,
}

impl RootSystem {
    pub fn new(n: usize) -> Result<Self> {
        let roots = positive_roots(n)?;
        let index = roots.iter().enumerate().map(|(p, &r)| (r, p)).collect();
        Ok(RootSystem { n, roots, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[RootIndex] {
        &self.roots
    }

    pub fn position(&self, root: RootIndex) -> Result<usize> {
        self.index
            .get(&root)
            .copied()
            .ok_or_else(|| Error::invalid(format!("root {root} invalid for n={}", self.n)))
    }
}

/// A multiplicity collection m = (m_{i,j}); absent pairs mean zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultDegree {
    n: usize,
    entries: BTreeMap<RootIndex, u64>,
}

impl MultDegree {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("n={n} must be at least 2")));
        }
        Ok(MultDegree {
            n,
            entries: BTreeMap::new(),
        })
    }

    pub fn from_entries(
        n: usize,
        entries: impl IntoIterator<Item = (RootIndex, u64)>,
    ) -> Result<Self> {
        let mut m = Self::new(n)?;
        for (root, value) in entries {
            m.set(root, value)?;
        }
        Ok(m)
    }

    pub fn all_ones(n: usize) -> Result<Self> {
        let mut m = Self::new(n)?;
        for root in positive_roots(n)? {
            m.set(root, 1)?;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, root: RootIndex, value: u64) -> Result<()> {
        root.check(self.n)?;
        if value == 0 {
            self.entries.remove(&root);
        } else {
            self.entries.insert(root, value);
        }
        Ok(())
    }

    pub fn get(&self, root: RootIndex) -> u64 {
        self.entries.get(&root).copied().unwrap_or(0)
    }

    /// Nonzero entries in lexicographic root order.
    pub fn entries(&self) -> impl Iterator<Item = (RootIndex, u64)> + '_ {
        self.entries.iter().map(|(&r, &m)| (r, m))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// All n(n-1)/2 multiplicities positive.
    pub fn is_regular(&self) -> bool {
        self.entries.len() == self.n * (self.n - 1) / 2
    }

    pub fn add(&self, other: &MultDegree) -> Result<MultDegree> {
        if self.n != other.n {
            return Err(Error::invalid(format!(
                "cannot add multiplicity collections for n={} and n={}",
                self.n, other.n
            )));
        }
        let mut out = self.clone();
        for (root, value) in other.entries() {
            let cur = out.get(root);
            out.set(root, cur + value)?;
        }
        Ok(out)
    }

    /// Short inline text form "i,j:m;i,j:m".
    pub fn to_spec_string(&self) -> String {
        self.entries()
            .map(|(r, m)| format!("{},{}:{}", r.i, r.j, m))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// A monotone chain of roots from alpha_{i,i} to alpha_{j,j}, each step
/// incrementing exactly one coordinate, staying inside p <= q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckPath {
    pub steps: Vec<RootIndex>,
}

/// Exhaustive enumeration of Dyck paths from alpha_{i,i} to alpha_{j,j}.
pub fn dyck_paths(n: usize, i: usize, j: usize) -> Result<Vec<DyckPath>> {
    let root = RootIndex::new(i, j);
    root.check(n)?;
    let mut out = Vec::new();
    let mut prefix = vec![RootIndex::new(i, i)];
    extend_paths(&mut prefix, i, i, j, &mut out);
    Ok(out)
}

fn extend_paths(
    prefix: &mut Vec<RootIndex>,
    p: usize,
    q: usize,
    target: usize,
    out: &mut Vec<DyckPath>,
) {
    if p == target && q == target {
        out.push(DyckPath {
            steps: prefix.clone(),
        });
        return;
    }
    // Steps only increase, so coordinates beyond the target are dead ends.
    if p < q && p < target {
        prefix.push(RootIndex::new(p + 1, q));
        extend_paths(prefix, p + 1, q, target, out);
        prefix.pop();
    }
    if q < target {
        prefix.push(RootIndex::new(p, q + 1));
        extend_paths(prefix, p, q + 1, target, out);
        prefix.pop();
    }
}

/// The window bound D_{i,j}(m) = sum of m_{k,l} over i <= k <= l <= j.
pub fn path_bound(m: &MultDegree, i: usize, j: usize) -> Result<u64> {
    RootIndex::new(i, j).check(m.n())?;
    let mut total = 0;
    for k in i..=j {
        for l in k..=j {
            total += m.get(RootIndex::new(k, l));
        }
    }
    Ok(total)
}

/// Exponents of a monomial in the lowering operators, stored densely in
/// lexicographic root order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExponentVector {
    pub exps: Vec<u64>,
}

impl ExponentVector {
    pub fn zero(num_roots: usize) -> Self {
        ExponentVector {
            exps: vec![0; num_roots],
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().sum()
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn get(&self, system: &RootSystem, root: RootIndex) -> Result<u64> {
        Ok(self.exps[system.position(root)?])
    }
}

/// All Dyck-path constraints for a given n: (coordinate positions, bound).
fn path_constraints(m: &MultDegree) -> Result<Vec<(Vec<usize>, u64)>> {
    let system = RootSystem::new(m.n())?;
    let mut constraints = Vec::new();
    for &root in system.roots() {
        let bound = path_bound(m, root.i, root.j)?;
        for path in dyck_paths(m.n(), root.i, root.j)? {
            let positions = path
                .steps
                .iter()
                .map(|&r| system.position(r))
                .collect::<Result<Vec<_>>>()?;
            constraints.push((positions, bound));
        }
    }
    Ok(constraints)
}

/// Membership test for the polytope lattice set of m.
pub fn satisfies_bounds(m: &MultDegree, s: &ExponentVector) -> Result<bool> {
    let system = RootSystem::new(m.n())?;
    if s.exps.len() != system.len() {
        return Err(Error::invalid(format!(
            "exponent vector of length {} for n={} (expected {})",
            s.exps.len(),
            m.n(),
            system.len()
        )));
    }
    for (positions, bound) in path_constraints(m)? {
        let total: u64 = positions.iter().map(|&p| s.exps[p]).sum();
        if total > bound {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All lattice points s with sum_{beta in p} s_beta <= D_{i,j}(m) for every
/// Dyck path, in graded lexicographic order.
pub fn enumerate_polytope(m: &MultDegree) -> Result<Vec<ExponentVector>> {
    let system = RootSystem::new(m.n())?;
    let constraints = path_constraints(m)?;
    // Box bounds: the single-root path gives s_{i,j} <= D_{i,j}(m).
    let boxes: Vec<u64> = system
        .roots()
        .iter()
        .map(|r| path_bound(m, r.i, r.j))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let mut current = vec![0u64; system.len()];
    scan_box(&boxes, &constraints, 0, &mut current, &mut out);
    out.sort_by_key(|s: &ExponentVector| (s.total_degree(), s.exps.clone()));
    Ok(out)
}

fn scan_box(
    boxes: &[u64],
    constraints: &[(Vec<usize>, u64)],
    pos: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<ExponentVector>,
) {
    if pos == boxes.len() {
        let ok = constraints
            .iter()
            .all(|(positions, bound)| positions.iter().map(|&p| current[p]).sum::<u64>() <= *bound);
        if ok {
            out.push(ExponentVector {
                exps: current.clone(),
            });
        }
        return;
    }
    for v in 0..=boxes[pos] {
        current[pos] = v;
        scan_box(boxes, constraints, pos + 1, current, out);
    }
    current[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(n: usize, entries: &[(usize, usize, u64)]) -> MultDegree {
        MultDegree::from_entries(
            n,
            entries.iter().map(|&(i, j, m)| (RootIndex::new(i, j), m)),
        )
        .unwrap()
    }

    #[test]
    fn positive_roots_examples() {
        assert!(positive_roots(1).is_err());
        assert_eq!(positive_roots(2).unwrap(), vec![RootIndex::new(1, 1)]);
        assert_eq!(
            positive_roots(3).unwrap(),
            vec![
                RootIndex::new(1, 1),
                RootIndex::new(1, 2),
                RootIndex::new(2, 2)
            ]
        );
        assert_eq!(positive_roots(5).unwrap().len(), 10);
    }

    #[test]
    fn dyck_path_examples() {
        let paths = dyck_paths(3, 1, 1).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].steps, vec![RootIndex::new(1, 1)]);

        let paths = dyck_paths(3, 1, 2).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(
            paths[0].steps,
            vec![
                RootIndex::new(1, 1),
                RootIndex::new(1, 2),
                RootIndex::new(2, 2)
            ]
        );

        assert_eq!(dyck_paths(4, 1, 3).unwrap().len(), 2);
        assert!(dyck_paths(3, 2, 1).is_err());
    }

    #[test]
    fn dyck_paths_stay_monotone() {
        for (n, i, j) in [(4usize, 1usize, 3usize), (5, 1, 4), (5, 2, 4)] {
            for path in dyck_paths(n, i, j).unwrap() {
                assert_eq!(path.steps.first().unwrap(), &RootIndex::new(i, i));
                assert_eq!(path.steps.last().unwrap(), &RootIndex::new(j, j));
                for w in path.steps.windows(2) {
                    let (a, b) = (w[0], w[1]);
                    let step_i = b.i == a.i + 1 && b.j == a.j;
                    let step_j = b.i == a.i && b.j == a.j + 1;
                    assert!(step_i ^ step_j);
                    assert!(b.i <= b.j);
                }
            }
        }
    }

    #[test]
    fn path_bound_examples() {
        let ones = MultDegree::all_ones(3).unwrap();
        assert_eq!(path_bound(&ones, 1, 2).unwrap(), 3);

        let m = md(3, &[(1, 1, 1), (1, 2, 1)]);
        assert_eq!(path_bound(&m, 1, 1).unwrap(), 1);
        assert_eq!(path_bound(&m, 1, 2).unwrap(), 2);

        let m = md(4, &[(2, 2, 5), (1, 3, 2)]);
        assert_eq!(path_bound(&m, 2, 2).unwrap(), 5);
    }

    #[test]
    fn polytope_examples() {
        let zero = MultDegree::new(3).unwrap();
        let pts = enumerate_polytope(&zero).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].exps, vec![0, 0, 0]);

        let m = md(3, &[(1, 1, 1)]);
        let pts = enumerate_polytope(&m).unwrap();
        let coords: Vec<Vec<u64>> = pts.iter().map(|p| p.exps.clone()).collect();
        // {0, e_{1,1}, e_{1,2}} in graded lexicographic order.
        assert_eq!(coords, vec![vec![0, 0, 0], vec![0, 1, 0], vec![1, 0, 0]]);

        let m = md(3, &[(1, 1, 1), (1, 2, 1)]);
        assert_eq!(enumerate_polytope(&m).unwrap().len(), 5);
    }

    #[test]
    fn polytope_single_coordinate_projection() {
        // Membership implies each coordinate obeys its own window bound.
        let m = md(4, &[(1, 1, 1), (2, 3, 2), (1, 3, 1)]);
        let system = RootSystem::new(4).unwrap();
        for s in enumerate_polytope(&m).unwrap() {
            for (pos, &root) in system.roots().iter().enumerate() {
                assert!(s.exps[pos] <= path_bound(&m, root.i, root.j).unwrap());
            }
        }
    }

    #[test]
    fn mult_degree_validation() {
        let mut m = MultDegree::new(3).unwrap();
        assert!(m.set(RootIndex::new(2, 1), 1).is_err());
        assert!(m.set(RootIndex::new(1, 3), 1).is_err());
        m.set(RootIndex::new(1, 2), 2).unwrap();
        assert_eq!(m.get(RootIndex::new(1, 2)), 2);
        assert_eq!(m.get(RootIndex::new(1, 1)), 0);
        assert!(!m.is_regular());
        assert!(MultDegree::all_ones(3).unwrap().is_regular());
    }
}
