//! Highest-weight modules built from tensor products of fundamental
//! modules: breadth-first construction, PBW-graded dimensions, monomial
//! evaluation and the basis-independence check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{self, SparseVector};
use crate::fundmod::{f_on_key, pbw_degree, WedgeKey};
use crate::roots::{enumerate_polytope, ExponentVector, MultDegree, RootIndex, RootSystem};

/// Ambient tensor-basis cap; exceeding it is an explicit error.
pub const DEFAULT_DIM_CAP: usize = 200_000;

/// A pure tensor of wedge keys, one per factor of the canonical factor list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorKey {
    pub slots: Vec<WedgeKey>,
}

/// The factor list of m: each root in lexicographic order, repeated with
/// its multiplicity.
pub fn canonical_factors(m: &MultDegree) -> Vec<RootIndex> {
    let mut out = Vec::new();
    for (root, mult) in m.entries() {
        for _ in 0..mult {
            out.push(root);
        }
    }
    out
}

/// The cyclic vector: every slot holds the degree-zero key of its factor.
pub fn highest_weight_key(m: &MultDegree) -> TensorKey {
    TensorKey {
        slots: canonical_factors(m)
            .iter()
            .map(|&f| WedgeKey::highest(f))
            .collect(),
    }
}

pub fn tensor_pbw_degree(key: &TensorKey) -> usize {
    key.slots.iter().map(pbw_degree).sum()
}

/// Leibniz extension of the factor action: sum over slots.
pub fn f_action_tensor(
    a: usize,
    b: usize,
    v: &SparseVector<TensorKey>,
    n: usize,
) -> Result<SparseVector<TensorKey>> {
    RootIndex::new(a, b).check(n)?;
    let mut out = SparseVector::new();
    for (key, coeff) in v.iter() {
        for t in 0..key.slots.len() {
            if let Some((image, sign)) = f_on_key(a, b, &key.slots[t]) {
                let mut slots = key.slots.clone();
                slots[t] = image;
                let mut c = coeff.clone();
                if sign < 0 {
                    c = -c;
                }
                out.add_to(TensorKey { slots }, c);
            }
        }
    }
    Ok(out)
}

/// PBW-graded basis of a module: one reduced span per degree.
#[derive(Debug)]
pub struct GradedSpan {
    levels: Vec<exactlin::SpanBasis<TensorKey>>,
}

impl GradedSpan {
    pub fn graded_dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.dim()).collect()
    }

    pub fn dim(&self) -> usize {
        self.levels.iter().map(|l| l.dim()).sum()
    }

    pub fn levels(&self) -> &[exactlin::SpanBasis<TensorKey>] {
        &self.levels
    }
}

fn ambient_dimension(m: &MultDegree) -> usize {
    let n = m.n();
    canonical_factors(m).iter().fold(1usize, |acc, f| {
        let dim = num_integer::binomial((f.i + n - f.j) as u128, f.i as u128) as usize;
        acc.saturating_mul(dim)
    })
}

/// Breadth-first closure of the cyclic vector under all lowering operators,
/// one PBW level at a time.
pub fn build_module(m: &MultDegree, cap: usize) -> Result<GradedSpan> {
    let ambient = ambient_dimension(m);
    if ambient > cap {
        return Err(Error::CapExceeded {
            what: format!(
                "building the module for n={} m={}",
                m.n(),
                m.to_spec_string()
            ),
            needed: ambient,
            cap,
        });
    }
    let system = RootSystem::new(m.n())?;
    let mut levels = Vec::new();
    let mut level = exactlin::SpanBasis::new();
    level.reduce_into(&SparseVector::unit(highest_weight_key(m)));
    let mut total = level.dim();
    while level.dim() > 0 {
        let mut next = exactlin::SpanBasis::new();
        for row in level.rows() {
            for &root in system.roots() {
                let image = f_action_tensor(root.i, root.j, row, m.n())?;
                if !image.is_zero() {
                    next.reduce_into(&image);
                }
            }
        }
        total += next.dim();
        if total > cap {
            return Err(Error::CapExceeded {
                what: format!(
                    "building the module for n={} m={}",
                    m.n(),
                    m.to_spec_string()
                ),
                needed: total,
                cap,
            });
        }
        levels.push(level);
        level = next;
    }
    Ok(GradedSpan { levels })
}

/// PBW-graded dimensions of the module of m.
pub fn hilbert(m: &MultDegree, cap: usize) -> Result<Vec<usize>> {
    Ok(build_module(m, cap)?.graded_dims())
}

/// Applies each f_{i,j} exactly s_{i,j} times to the cyclic vector, in
/// lexicographic root order (the operators commute).
pub fn apply_f_monomial(s: &ExponentVector, m: &MultDegree) -> Result<SparseVector<TensorKey>> {
    let system = RootSystem::new(m.n())?;
    if s.exps.len() != system.len() {
        return Err(Error::invalid(format!(
            "exponent vector of length {} for n={}",
            s.exps.len(),
            m.n()
        )));
    }
    let mut v = SparseVector::unit(highest_weight_key(m));
    for (pos, &root) in system.roots().iter().enumerate() {
        for _ in 0..s.exps[pos] {
            if v.is_zero() {
                return Ok(v);
            }
            v = f_action_tensor(root.i, root.j, &v, m.n())?;
        }
    }
    Ok(v)
}

fn mult_json(m: &MultDegree) -> Vec<serde_json::Value> {
    m.entries()
        .map(|(r, v)| serde_json::json!({"i": r.i, "j": r.j, "m": v}))
        .collect()
}

/// Evidence record for the monomial-basis conjecture on one m.
#[derive(Debug, Clone, Serialize)]
pub struct MonomialBasisReport {
    pub n: usize,
    pub mult: Vec<serde_json::Value>,
    pub graded_dims: Vec<usize>,
    pub dim: usize,
    pub polytope_size: usize,
    pub independent: bool,
    #[serde(skip)]
    pub rank: usize,
}

/// Computes |S_m|, dim M_m and the exact rank of the monomial vectors
/// f^s v_m over s in S_m; they are independent iff rank = |S_m|.
pub fn monomial_basis_check(m: &MultDegree, cap: usize) -> Result<MonomialBasisReport> {
    let polytope = enumerate_polytope(m)?;
    let module = build_module(m, cap)?;
    let vectors = polytope
        .iter()
        .map(|s| apply_f_monomial(s, m))
        .collect::<Result<Vec<_>>>()?;
    let rank = exactlin::rank(vectors);
    Ok(MonomialBasisReport {
        n: m.n(),
        mult: mult_json(m),
        graded_dims: module.graded_dims(),
        dim: module.dim(),
        polytope_size: polytope.len(),
        independent: rank == polytope.len(),
        rank,
    })
}
