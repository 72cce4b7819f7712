//! The adjoint raising action on the polynomial ring in the lowering
//! generators, closures of generator spans under that action, and the
//! Hilbert function of the resulting graded ideal quotients.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Rational, SpanBasis, SparseVector};
use crate::roots::{path_bound, ExponentVector, MultDegree, RootIndex, RootSystem};
use crate::tensormod::hilbert;

/// A polynomial in the commuting lowering generators f_{i,j}, stored as a
/// sparse vector over dense exponent keys in lexicographic root order.
pub type FPoly = SparseVector<ExponentVector>;

pub fn f_monomial(exps: &[u64]) -> FPoly {
    SparseVector::unit(ExponentVector {
        exps: exps.to_vec(),
    })
}

/// f_{i,j}^e as a polynomial.
pub fn f_power(system: &RootSystem, root: RootIndex, e: u64) -> Result<FPoly> {
    let mut exps = vec![0u64; system.len()];
    exps[system.position(root)?] = e;
    Ok(f_monomial(&exps))
}

/// Image of e_{c,d} on the generator f_{a,b}, projected onto the lowering
/// part: with f_{a,b} = E_{b+1,a} and e_{c,d} = E_{c,d+1},
///
///   [e_{c,d}, f_{a,b}] = delta_{d,b} E_{c,a} - delta_{a,c} E_{b+1,d+1},
///
/// which survives the projection as +f_{a,c-1} when d=b, c>a and as
/// -f_{d+1,b} when a=c, b>d.
fn e_on_generator(c: usize, d: usize, a: usize, b: usize) -> Option<(RootIndex, i8)> {
    if d == b && c > a {
        Some((RootIndex::new(a, c - 1), 1))
    } else if a == c && b > d {
        Some((RootIndex::new(d + 1, b), -1))
    } else {
        None
    }
}

/// Degree-preserving derivation extending the adjoint action of e_{c,d}.
pub fn e_adjoint(system: &RootSystem, c: usize, d: usize, p: &FPoly) -> Result<FPoly> {
    RootIndex::new(c, d).check(system.n())?;
    let mut out = FPoly::new();
    for (mono, coeff) in p.iter() {
        for (pos, &root) in system.roots().iter().enumerate() {
            let e = mono.exps[pos];
            if e == 0 {
                continue;
            }
            if let Some((image_root, sign)) = e_on_generator(c, d, root.i, root.j) {
                let image_pos = system.position(image_root)?;
                let mut exps = mono.exps.clone();
                exps[pos] -= 1;
                exps[image_pos] += 1;
                let mut value = coeff * Rational::from_integer(e.into());
                if sign < 0 {
                    value = -value;
                }
                out.add_to(ExponentVector { exps }, value);
            }
        }
    }
    Ok(out)
}

/// Diagonal Cartan action (for stability spot checks): h_k scales each
/// monomial by minus its alpha_k-weight.
pub fn h_adjoint(system: &RootSystem, k: usize, p: &FPoly) -> Result<FPoly> {
    if k < 1 || k >= system.n() {
        return Err(Error::invalid(format!(
            "Cartan index {k} out of range for n={}",
            system.n()
        )));
    }
    let mut out = FPoly::new();
    for (mono, coeff) in p.iter() {
        let mut weight: i64 = 0;
        for (pos, &root) in system.roots().iter().enumerate() {
            let e = mono.exps[pos] as i64;
            if e == 0 {
                continue;
            }
            // alpha_{i,j}(h_k) summed over simple components.
            for l in root.i..=root.j {
                let cartan = if l == k {
                    2
                } else if l + 1 == k || k + 1 == l {
                    -1
                } else {
                    0
                };
                weight += e * cartan;
            }
        }
        out.add_to(
            mono.clone(),
            coeff * Rational::from_integer((-weight).into()),
        );
    }
    Ok(out)
}

/// Smallest subspace containing the generators and closed under every
/// raising derivation, by fixed-point iteration with exact rank tests.
pub fn b_closure(system: &RootSystem, generators: &[FPoly]) -> Result<Vec<FPoly>> {
    let mut basis: SpanBasis<ExponentVector> = SpanBasis::new();
    let mut worklist: Vec<FPoly> = Vec::new();
    for g in generators {
        let before = basis.dim();
        basis.reduce_into(g);
        if basis.dim() > before {
            worklist.push(basis.rows()[basis.dim() - 1].clone());
        }
    }
    while let Some(v) = worklist.pop() {
        for &root in system.roots() {
            let image = e_adjoint(system, root.i, root.j, &v)?;
            if image.is_zero() {
                continue;
            }
            let before = basis.dim();
            basis.reduce_into(&image);
            if basis.dim() > before {
                worklist.push(basis.rows()[basis.dim() - 1].clone());
            }
        }
    }
    Ok(basis.rows().to_vec())
}

fn monomials_of_degree(num_vars: usize, degree: u64) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut current = vec![0u64; num_vars];
    fill_monomials(degree, 0, &mut current, &mut out);
    out
}

fn fill_monomials(rest: u64, pos: usize, current: &mut Vec<u64>, out: &mut Vec<ExponentVector>) {
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
        fill_monomials(rest - v, pos + 1, current, out);
    }
    current[pos] = 0;
}

fn multiply_monomial(p: &FPoly, mono: &ExponentVector) -> FPoly {
    FPoly::from_pairs(p.iter().map(|(k, c)| (k.add(mono), c.clone())))
}

fn total_degree_of(p: &FPoly) -> Option<u64> {
    let mut degs = p.iter().map(|(k, _)| k.total_degree());
    let first = degs.next()?;
    degs.all(|d| d == first).then_some(first)
}

/// The ideal generators for m: f_{i,j}^{D_{i,j}(m)+1} over all roots.
pub fn ideal_generators(m: &MultDegree) -> Result<Vec<FPoly>> {
    let system = RootSystem::new(m.n())?;
    system
        .roots()
        .iter()
        .map(|&root| f_power(&system, root, path_bound(m, root.i, root.j)? + 1))
        .collect()
}

/// Default degree cutoff: a safe overshoot of the module's top degree.
pub fn default_dmax(m: &MultDegree) -> u64 {
    m.total() * (m.n() as u64 - 1) + 2
}

/// Hilbert function of the quotient by the ideal of m up to degree dmax:
/// h(d) = dim S^d - dim I(d) with I(d) spanned by monomial multiples of
/// the closure basis.
pub fn ideal_hilbert(m: &MultDegree, dmax: u64, cap: usize) -> Result<Vec<u64>> {
    let system = RootSystem::new(m.n())?;
    let closure = b_closure(&system, &ideal_generators(m)?)?;
    // The closure basis stays degree-homogeneous: generators are and the
    // raising action preserves degree.
    let mut graded: Vec<(u64, FPoly)> = Vec::new();
    for v in closure {
        let deg = total_degree_of(&v)
            .ok_or_else(|| Error::invalid("closure produced an inhomogeneous vector"))?;
        graded.push((deg, v));
    }
    let num_vars = system.len();
    let mut out = Vec::new();
    for d in 0..=dmax {
        let full =
            num_integer::binomial((d as u128) + (num_vars as u128) - 1, (num_vars as u128) - 1);
        if full > cap as u128 {
            return Err(Error::CapExceeded {
                what: format!("grading degree {d} of the polynomial ring"),
                needed: full as usize,
                cap,
            });
        }
        let mut piece: SpanBasis<ExponentVector> = SpanBasis::new();
        for (deg, v) in &graded {
            if *deg > d {
                continue;
            }
            for mono in monomials_of_degree(num_vars, d - deg) {
                piece.reduce_into(&multiply_monomial(v, &mono));
            }
        }
        out.push(full as u64 - piece.dim() as u64);
    }
    Ok(out)
}

fn mult_json(m: &MultDegree) -> Vec<serde_json::Value> {
    m.entries()
        .map(|(r, v)| serde_json::json!({"i": r.i, "j": r.j, "m": v}))
        .collect()
}

/// Evidence record comparing the quotient Hilbert function with the
/// PBW-graded module dimensions.
#[derive(Debug, Clone, Serialize)]
pub struct IdealComparisonReport {
    pub n: usize,
    pub mult: Vec<serde_json::Value>,
    pub ideal_hilbert: Vec<u64>,
    pub module_hilbert: Vec<u64>,
    pub agree: bool,
    pub polytope_size: usize,
    /// h(d) >= dim M(d) holds by the surjection; false flags a bug.
    #[serde(skip)]
    pub surjection_ok: bool,
}

/// Computes both Hilbert functions out to where both vanish (capped) and
/// flags agreement. The surjection inequality h(d) >= dim M(d) must hold
/// unconditionally. `dmax` overrides the default degree cutoff.
pub fn ideal_comparison_report(
    m: &MultDegree,
    cap: usize,
    dmax: Option<u64>,
) -> Result<IdealComparisonReport> {
    let module = hilbert(m, cap)?;
    let dmax = dmax
        .unwrap_or_else(|| default_dmax(m))
        .max(module.len() as u64);
    let mut ideal_h = ideal_hilbert(m, dmax, cap)?;
    // Trim to the common support, padding the shorter side with zeros.
    let mut module_h: Vec<u64> = module.iter().map(|&d| d as u64).collect();
    while ideal_h.len() > module_h.len() && *ideal_h.last().unwrap() == 0 {
        ideal_h.pop();
    }
    while module_h.len() < ideal_h.len() {
        module_h.push(0);
    }
    while ideal_h.len() < module_h.len() {
        ideal_h.push(0);
    }
    let agree = ideal_h == module_h;
    let surjection_ok = ideal_h.iter().zip(module_h.iter()).all(|(h, d)| h >= d);
    let polytope_size = crate::roots::enumerate_polytope(m)?.len();
    Ok(IdealComparisonReport {
        n: m.n(),
        mult: mult_json(m),
        ideal_hilbert: ideal_h,
        module_hilbert: module_h,
        agree,
        polytope_size,
        surjection_ok,
    })
}

/// Total quotient dimension must stay below the polytope size: the
/// monomials attached to lattice points span the quotient.
pub fn spanning_bound_holds(report: &IdealComparisonReport) -> bool {
    let total: u64 = report.ideal_hilbert.iter().sum();
    total <= report.polytope_size as u64
}
