//! Straightening: multiplying by degree-zero coordinates and rewriting
//! against generated relations until only variables of PBW degree at most
//! one remain, with one factor family per (r,m) pair.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactlin::Rational;
use crate::roots::MultDegree;

use super::relations::{generate_relation, RelationData};
use super::{xvar_pbw_degree, XPoly, XVar};

/// F times the product of the degree-zero coordinates with exponents N.
pub fn multiply_by_degree_zero(f: &XPoly, n_exp: &MultDegree) -> XPoly {
    let mut out = f.clone();
    for (root, mult) in n_exp.entries() {
        let x0 = XVar::highest(root);
        for _ in 0..mult {
            out = out.mul_var(&x0);
        }
    }
    out
}

/// Sign (-1)^{r-1} as a rational.
fn alt_sign(r: usize) -> Rational {
    if (r - 1).is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// P-tuple (r, 1, .., r-1, r+1, .., i).
fn moved_front(r: usize, i: usize) -> Vec<usize> {
    std::iter::once(r)
        .chain((1..=i).filter(|&x| x != r))
        .collect()
}

/// In every monomial of `g` containing `target`, consumes one `target` and
/// one `helper` and multiplies in `replacement` (which must equal
/// target*helper modulo the relation ideal).
fn rewrite_occurrences(g: &XPoly, target: &XVar, helper: &XVar, replacement: &XPoly) -> XPoly {
    let mut out = XPoly::zero();
    for (mono, c) in g.terms() {
        if let Some(pos) = mono.iter().position(|v| v == target) {
            let mut rest = mono.clone();
            rest.remove(pos);
            let helper_pos = rest
                .iter()
                .position(|v| v == helper)
                .expect("helper coordinate was multiplied in");
            rest.remove(helper_pos);
            let mut rest_poly = XPoly::zero();
            rest_poly.add_term(rest, c.clone());
            out.add_scaled(&rest_poly.mul(replacement), &Rational::one());
        } else {
            out.add_term(mono.clone(), c.clone());
        }
    }
    out
}

/// Finds, in deterministic term order, a variable of PBW degree >= 2.
fn find_high_variable(g: &XPoly) -> Option<XVar> {
    for (mono, _) in g.terms() {
        for v in mono {
            if xvar_pbw_degree(v) >= 2 {
                return Some(v.clone());
            }
        }
    }
    None
}

/// Degree-one variables grouped by their (r,m) family: the deleted small
/// index r and the single large entry m.
fn family_of(v: &XVar) -> Option<(usize, usize)> {
    if xvar_pbw_degree(v) != 1 {
        return None;
    }
    let i = v.factor.i;
    let m = *v.indices.last().expect("degree-one variable is nonempty");
    let r = (1..=i).find(|r| !v.indices.contains(r))?;
    Some((r, m))
}

/// Finds an (r,m) family realized by two different factors, if any.
fn find_duplicate_family(g: &XPoly) -> Option<(XVar, XVar)> {
    let mut families: BTreeMap<(usize, usize), Vec<XVar>> = BTreeMap::new();
    for v in g.variables() {
        if let Some(fam) = family_of(v) {
            let entry = families.entry(fam).or_default();
            if !entry.contains(v) {
                entry.push(v.clone());
            }
        }
    }
    for (_, mut vars) in families {
        if vars.len() >= 2 {
            vars.sort();
            // Keep the lexicographically smallest factor; eliminate the
            // largest, whose i is then >= the kept one.
            let keep = vars.first().unwrap().clone();
            let elim = vars.last().unwrap().clone();
            return Some((keep, elim));
        }
    }
    None
}

/// Produces exponents N and a polynomial G with
/// prod (X_{1..i})^{N_{i,j}} F - G in the relation ideal, where G uses only
/// variables of PBW degree <= 1 and realizes each (r,m) family through a
/// single factor. Each rewrite is an instance of a generated two-factor
/// relation, so membership in the ideal holds by construction.
pub fn straighten(n: usize, f: &XPoly) -> Result<(MultDegree, XPoly)> {
    if !f.is_multihomogeneous() {
        return Err(Error::invalid(
            "straightening expects a multi-homogeneous polynomial".to_string(),
        ));
    }
    let mut n_exp = MultDegree::new(n)?;
    let mut g = f.clone();

    // Phase 1: decrease PBW degrees. Rewriting a degree-t variable yields
    // degree t-1 and degree 1 variables, so this terminates.
    while let Some(target) = find_high_variable(&g) {
        let factor = target.factor;
        let d = target.indices.iter().filter(|&&l| l <= factor.i).count();
        // Some small index is free because the variable has degree >= 2.
        let r = (1..=factor.i)
            .find(|r| !target.indices[..d].contains(r))
            .expect("degree >= 2 leaves a free small index");
        let helper = XVar::highest(factor);
        n_exp.set(factor, n_exp.get(factor) + 1)?;
        g = g.mul_var(&helper);

        let relation = generate_relation(
            n,
            &RelationData {
                factor1: factor,
                factor2: factor,
                k: 1,
                l: target.indices.clone(),
                p: moved_front(r, factor.i),
            },
        )?;
        // target*helper == target*helper - (-1)^{r-1} R  (mod ideal).
        let mut replacement = XPoly::zero();
        replacement.add_term(vec![target.clone(), helper.clone()], Rational::one());
        replacement.add_scaled(&relation, &-alt_sign(r));
        g = rewrite_occurrences(&g, &target, &helper, &replacement);
    }

    // Phase 2: collapse duplicate (r,m) families onto one factor via the
    // two-term exchange relation.
    while let Some((keep, elim)) = find_duplicate_family(&g) {
        let (r, _m) = family_of(&keep).expect("family paired");
        let helper = XVar::highest(keep.factor);
        n_exp.set(keep.factor, n_exp.get(keep.factor) + 1)?;
        g = g.mul_var(&helper);

        let relation = generate_relation(
            n,
            &RelationData {
                factor1: elim.factor,
                factor2: keep.factor,
                k: 1,
                l: elim.indices.clone(),
                p: moved_front(r, keep.factor.i),
            },
        )?;
        let mut replacement = XPoly::zero();
        replacement.add_term(vec![elim.clone(), helper.clone()], Rational::one());
        replacement.add_scaled(&relation, &-alt_sign(r));
        g = rewrite_occurrences(&g, &elim, &helper, &replacement);
    }

    Ok((n_exp, g))
}
