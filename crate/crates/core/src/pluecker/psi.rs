//! The parametrization homomorphism: each Pluecker variable maps to a
//! factor variable T_{i,j} times a signed minor in the Z variables, and a
//! polynomial vanishes on the desingularized variety iff its image is zero.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactlin::{self, Rational};
use crate::fundmod::sort_with_sign;
use crate::roots::{positive_roots, RootIndex};
use num_traits::One;

use super::{TZMonomial, TZPoly, TZVar, XPoly, XVar};

/// Image of one variable: with d the number of entries <= i and
/// {r_1 < .. < r_{i-d}} the complement of the small entries in {1..i},
///
///   X_L^{(i,j)} -> T_{i,j} * (-1)^{sum_p (l_p - p)} * det(Z_{r_a, l_{d+b} - 1})
///
/// The empty determinant is 1, so degree-zero variables map to T_{i,j}.
pub fn psi_var(v: &XVar) -> TZPoly {
    let RootIndex { i, j } = v.factor;
    let d = v.indices.iter().filter(|&&l| l <= i).count();
    let small = &v.indices[..d];
    let large = &v.indices[d..];
    debug_assert!(large.iter().all(|&l| l > j));

    let complement: Vec<usize> = (1..=i).filter(|r| !small.contains(r)).collect();
    let sign_exp: usize = small.iter().enumerate().map(|(p, &l)| l - (p + 1)).sum();

    // Symbolic determinant, expanded over permutations; the matrix is at
    // most (n-1) x (n-1) at desk scale.
    let k = complement.len();
    let mut det = TZPoly::zero();
    for perm in (0..k).permutations(k) {
        let (_, sign, _) = sort_with_sign(&perm.iter().map(|&x| x + 1).collect::<Vec<_>>());
        let mut mono = TZMonomial::new();
        for (a, &b) in perm.iter().enumerate() {
            let z = TZVar::Z(RootIndex::new(complement[a], large[b] - 1));
            *mono.entry(z).or_insert(0) += 1;
        }
        let mut c = Rational::one();
        if sign < 0 {
            c = -c;
        }
        det.add_term(mono, c);
    }
    if k == 0 {
        det = TZPoly::one();
    }
    let mut scale = Rational::one();
    if sign_exp % 2 == 1 {
        scale = -scale;
    }
    let t = TZPoly::var(TZVar::T(v.factor));
    t.mul(&det).scaled(&scale)
}

/// Algebra homomorphism extension to polynomials.
pub fn psi(p: &XPoly) -> TZPoly {
    let mut out = TZPoly::zero();
    for (mono, c) in p.terms() {
        let mut image = TZPoly::constant(c.clone());
        for v in mono {
            image = image.mul(&psi_var(v));
        }
        out.add_scaled(&image, &Rational::one());
    }
    out
}

/// Exact symbolic vanishing test.
pub fn verify_vanishing(p: &XPoly) -> bool {
    psi(p).is_zero()
}

/// Orbit parameters: one rational per positive root.
pub type ParamMap = BTreeMap<RootIndex, Rational>;

pub fn validate_params(n: usize, c: &ParamMap) -> Result<()> {
    for root in positive_roots(n)? {
        if !c.contains_key(&root) {
            return Err(Error::invalid(format!(
                "parameter map misses root {root} for n={n}"
            )));
        }
    }
    for root in c.keys() {
        root.check(n)?;
    }
    Ok(())
}

/// Numeric specialization of the variable image at Z_{a,b} = c_{a,b} and
/// T_{i,j} = 1: the Pluecker coordinate of the orbit point with
/// parameters c.
pub fn evaluate_orbit(n: usize, c: &ParamMap, v: &XVar) -> Result<Rational> {
    validate_params(n, c)?;
    let RootIndex { i, j: _ } = v.factor;
    let d = v.indices.iter().filter(|&&l| l <= i).count();
    let small = &v.indices[..d];
    let large = &v.indices[d..];
    let complement: Vec<usize> = (1..=i).filter(|r| !small.contains(r)).collect();
    let sign_exp: usize = small.iter().enumerate().map(|(p, &l)| l - (p + 1)).sum();

    let matrix: Vec<Vec<Rational>> = complement
        .iter()
        .map(|&r| {
            large
                .iter()
                .map(|&l| c[&RootIndex::new(r, l - 1)].clone())
                .collect()
        })
        .collect();
    let mut det = exactlin::determinant(&matrix)?;
    if sign_exp % 2 == 1 {
        det = -det;
    }
    Ok(det)
}

/// Specialization of a whole polynomial at the orbit point of c.
pub fn evaluate_orbit_poly(n: usize, c: &ParamMap, p: &XPoly) -> Result<Rational> {
    validate_params(n, c)?;
    let mut total = Rational::from_integer(0.into());
    for (mono, coeff) in p.terms() {
        let mut value = coeff.clone();
        for v in mono {
            value *= evaluate_orbit(n, c, v)?;
        }
        total += value;
    }
    Ok(total)
}
