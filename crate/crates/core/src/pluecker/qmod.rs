//! The graded pieces of the coordinate ring: dimension through the rank of
//! parametrization images, the dual lowering action on polynomials, and
//! the cocyclic-vector probe.

use itertools::Itertools;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactlin::{Rational, SpanBasis};
use crate::roots::{ExponentVector, MultDegree, RootIndex, RootSystem};

use super::psi::psi;
use super::{canonicalize, factor_variables, xvar_pbw_degree, TZMonomial, TZVar, XPoly, XVar};

/// Exact dimension of the multidegree-m piece of the coordinate ring: the
/// rank of the parametrization images of all multidegree-m monomials.
pub fn qm_dimension(m: &MultDegree, cap: usize) -> Result<usize> {
    let n = m.n();
    if m.is_zero() {
        return Ok(1);
    }
    // One multiset of variables per factor.
    let mut factor_monomials: Vec<Vec<Vec<XVar>>> = Vec::new();
    let mut count: usize = 1;
    for (root, mult) in m.entries() {
        let vars = factor_variables(n, root)?;
        let multisets: Vec<Vec<XVar>> = vars
            .into_iter()
            .combinations_with_replacement(mult as usize)
            .collect();
        count = count.saturating_mul(multisets.len());
        if count > cap {
            return Err(Error::CapExceeded {
                what: format!(
                    "enumerating multidegree monomials for n={n} m={}",
                    m.to_spec_string()
                ),
                needed: count,
                cap,
            });
        }
        factor_monomials.push(multisets);
    }
    let mut basis: SpanBasis<TZMonomial> = SpanBasis::new();
    for pieces in factor_monomials.iter().multi_cartesian_product() {
        let mut poly = XPoly::constant(Rational::one());
        for piece in pieces {
            for v in piece {
                poly = poly.mul_var(v);
            }
        }
        let image = psi(&poly);
        if !image.is_zero() {
            basis.reduce_into(&image.to_sparse());
        }
    }
    Ok(basis.dim())
}

/// Dual action of f_{a,b} on one variable: active when a <= i <= j <= b,
/// it moves the entry b+1 down to a with a sign.
pub fn f_q_on_var(n: usize, a: usize, b: usize, v: &XVar) -> Option<(XVar, Rational)> {
    let RootIndex { i, j } = v.factor;
    if !(a <= i && j <= b) {
        return None;
    }
    let pos = v.indices.iter().position(|&l| l == b + 1)?;
    let mut raw = v.indices.clone();
    raw[pos] = a;
    let (var, sign) = canonicalize(n, v.factor, &raw)?;
    let mut c = -Rational::one();
    if sign < 0 {
        c = -c;
    }
    Some((var, c))
}

/// Leibniz extension of the dual action to polynomials.
pub fn f_action_q(n: usize, a: usize, b: usize, p: &XPoly) -> Result<XPoly> {
    RootIndex::new(a, b).check(n)?;
    let mut out = XPoly::zero();
    for (mono, coeff) in p.terms() {
        for t in 0..mono.len() {
            if let Some((var, c)) = f_q_on_var(n, a, b, &mono[t]) {
                let mut new_mono = mono.clone();
                new_mono[t] = var;
                out.add_term(new_mono, coeff * &c);
            }
        }
    }
    Ok(out)
}

/// Result of the cocyclicity search: exponents of the lowering monomial
/// that maps the input onto the cocyclic vector, with the final scalar.
#[derive(Debug, Clone)]
pub enum CocyclicityOutcome {
    Witness {
        exponents: ExponentVector,
        scalar: Rational,
    },
    Failure,
}

fn target_monomial(m: &MultDegree) -> TZMonomial {
    let mut mono = TZMonomial::new();
    for (root, mult) in m.entries() {
        mono.insert(TZVar::T(root), mult as u32);
    }
    mono
}

fn enumerate_exponents(num_roots: usize, max_total: u64) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        let mut current = vec![0u64; num_roots];
        compositions(total, 0, &mut current, &mut out);
    }
    out
}

fn compositions(rest: u64, pos: usize, current: &mut Vec<u64>, out: &mut Vec<ExponentVector>) {
    if pos + 1 == current.len() {
        current[pos] = rest;
        out.push(ExponentVector {
            exps: current.clone(),
        });
        current[pos] = 0;
        return;
    }
    for v in 0..=rest {
        current[pos] = v;
        compositions(rest - v, pos + 1, current, out);
    }
    current[pos] = 0;
}

/// Breadth-first search (as a graded scan over commuting exponents) for a
/// lowering monomial carrying `p` onto a multiple of the product of
/// degree-zero coordinates, modulo the kernel of the parametrization.
/// `Failure` is a reportable outcome, not an error.
pub fn cocyclicity_probe(n: usize, m: &MultDegree, p: &XPoly) -> Result<CocyclicityOutcome> {
    let profile = p
        .multidegree()
        .ok_or_else(|| Error::invalid("probe input must be multi-homogeneous and nonzero"))?;
    let wanted = MultDegree::from_entries(n, profile)?;
    if &wanted != m {
        return Err(Error::invalid(format!(
            "polynomial has multidegree {} but m is {}",
            wanted.to_spec_string(),
            m.to_spec_string()
        )));
    }
    if psi(p).is_zero() {
        return Err(Error::invalid(
            "probe input vanishes on the variety".to_string(),
        ));
    }
    let system = RootSystem::new(n)?;
    let target = target_monomial(m);
    // Each application strictly lowers the PBW degree somewhere, so the
    // total PBW degree of the input bounds the search.
    let bound = p
        .terms()
        .map(|(mono, _)| mono.iter().map(xvar_pbw_degree).sum::<usize>())
        .max()
        .unwrap_or(0) as u64;
    for exps in enumerate_exponents(system.len(), bound) {
        let mut q = p.clone();
        for (pos, &root) in system.roots().iter().enumerate() {
            for _ in 0..exps.exps[pos] {
                if q.is_zero() {
                    break;
                }
                q = f_action_q(n, root.i, root.j, &q)?;
            }
        }
        if q.is_zero() {
            continue;
        }
        let image = psi(&q);
        if image.num_terms() == 1 {
            let (mono, c) = image.terms().next().unwrap();
            if mono == &target {
                return Ok(CocyclicityOutcome::Witness {
                    exponents: exps,
                    scalar: c.clone(),
                });
            }
        }
    }
    Ok(CocyclicityOutcome::Failure)
}
