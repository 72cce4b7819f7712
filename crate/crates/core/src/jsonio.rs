//! JSON forms of the exchange formats: multiplicity collections, wedge
//! labels, polynomials with exact string coefficients, relation records,
//! parameter files and subspaces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{rat_from_str, rat_to_string};
use crate::flaggeo::Subspace;
use crate::pluecker::{canonicalize, ParamMap, RelationData, TZPoly, TZVar, XPoly, XVar};
use crate::roots::{MultDegree, RootIndex};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultEntryJson {
    pub i: usize,
    pub j: usize,
    pub m: u64,
}

/// {"n": 3, "mult": [{"i":1,"j":1,"m":1}, ...]} -- omitted pairs are zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultDegreeJson {
    pub n: usize,
    pub mult: Vec<MultEntryJson>,
}

pub fn mult_to_json(m: &MultDegree) -> MultDegreeJson {
    MultDegreeJson {
        n: m.n(),
        mult: m
            .entries()
            .map(|(r, v)| MultEntryJson {
                i: r.i,
                j: r.j,
                m: v,
            })
            .collect(),
    }
}

pub fn mult_from_json(json: &MultDegreeJson) -> Result<MultDegree> {
    let mut m = MultDegree::new(json.n)?;
    for e in &json.mult {
        let root = RootIndex::new(e.i, e.j);
        if m.get(root) != 0 {
            return Err(Error::invalid(format!(
                "duplicate multiplicity entry for ({}, {})",
                e.i, e.j
            )));
        }
        m.set(root, e.m)?;
    }
    Ok(m)
}

/// {"i":2,"j":3,"L":[1,4]} -- a wedge label / Pluecker variable.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VarJson {
    pub i: usize,
    pub j: usize,
    #[serde(rename = "L")]
    pub l: Vec<usize>,
}

pub fn xvar_to_json(v: &XVar) -> VarJson {
    VarJson {
        i: v.factor.i,
        j: v.factor.j,
        l: v.indices.clone(),
    }
}

/// Parses and canonicalizes a variable; signs from unsorted input are
/// surfaced to the caller.
pub fn xvar_from_json(n: usize, json: &VarJson) -> Result<(XVar, i8)> {
    let factor = RootIndex::new(json.i, json.j);
    factor.check(n)?;
    if json.l.len() != json.i {
        return Err(Error::invalid(format!(
            "variable of factor ({}, {}) needs {} indices, got {}",
            json.i,
            json.j,
            json.i,
            json.l.len()
        )));
    }
    canonicalize(n, factor, &json.l).ok_or_else(|| {
        Error::invalid(format!(
            "indices {:?} are not a valid wedge label for factor ({}, {})",
            json.l, json.i, json.j
        ))
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct XTermJson {
    pub coeff: String,
    pub vars: Vec<VarJson>,
}

/// {"terms":[{"coeff":"-1","vars":[...]}]} -- exact rational strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct XPolyJson {
    pub terms: Vec<XTermJson>,
}

pub fn xpoly_to_json(p: &XPoly) -> XPolyJson {
    XPolyJson {
        terms: p
            .terms()
            .map(|(mono, c)| XTermJson {
                coeff: rat_to_string(c),
                vars: mono.iter().map(xvar_to_json).collect(),
            })
            .collect(),
    }
}

pub fn xpoly_from_json(n: usize, json: &XPolyJson) -> Result<XPoly> {
    let mut out = XPoly::zero();
    for term in &json.terms {
        let mut coeff = rat_from_str(&term.coeff)?;
        let mut vars = Vec::with_capacity(term.vars.len());
        for v in &term.vars {
            let (var, sign) = xvar_from_json(n, v)?;
            if sign < 0 {
                coeff = -coeff;
            }
            vars.push(var);
        }
        out.add_term(vars, coeff);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationDataJson {
    pub i1: usize,
    pub j1: usize,
    pub i2: usize,
    pub j2: usize,
    pub k: usize,
    #[serde(rename = "L")]
    pub l: Vec<usize>,
    #[serde(rename = "P")]
    pub p: Vec<usize>,
}

/// {"data":{...},"terms":[...]} -- one generated relation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationJson {
    pub data: RelationDataJson,
    pub terms: Vec<XTermJson>,
}

pub fn relation_to_json(data: &RelationData, poly: &XPoly) -> RelationJson {
    RelationJson {
        data: RelationDataJson {
            i1: data.factor1.i,
            j1: data.factor1.j,
            i2: data.factor2.i,
            j2: data.factor2.j,
            k: data.k,
            l: data.l.clone(),
            p: data.p.clone(),
        },
        terms: xpoly_to_json(poly).terms,
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TZFactorJson {
    pub var: String,
    pub i: usize,
    pub j: usize,
    pub e: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TZTermJson {
    pub coeff: String,
    pub factors: Vec<TZFactorJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TZPolyJson {
    pub terms: Vec<TZTermJson>,
}

pub fn tzpoly_to_json(p: &TZPoly) -> TZPolyJson {
    TZPolyJson {
        terms: p
            .terms()
            .map(|(mono, c)| TZTermJson {
                coeff: rat_to_string(c),
                factors: mono
                    .iter()
                    .map(|(v, e)| match v {
                        TZVar::T(r) => TZFactorJson {
                            var: "T".to_string(),
                            i: r.i,
                            j: r.j,
                            e: *e,
                        },
                        TZVar::Z(r) => TZFactorJson {
                            var: "Z".to_string(),
                            i: r.i,
                            j: r.j,
                            e: *e,
                        },
                    })
                    .collect(),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamEntryJson {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

/// {"n":3,"c":[{"i":1,"j":1,"value":"1/2"}, ...]} -- orbit parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamsJson {
    pub n: usize,
    pub c: Vec<ParamEntryJson>,
}

pub fn params_from_json(json: &ParamsJson) -> Result<(usize, ParamMap)> {
    let mut map = ParamMap::new();
    for e in &json.c {
        let root = RootIndex::new(e.i, e.j);
        root.check(json.n)?;
        if map.insert(root, rat_from_str(&e.value)?).is_some() {
            return Err(Error::invalid(format!(
                "duplicate parameter for ({}, {})",
                e.i, e.j
            )));
        }
    }
    crate::pluecker::validate_params(json.n, &map)?;
    Ok((json.n, map))
}

pub fn params_to_json(n: usize, c: &ParamMap) -> ParamsJson {
    ParamsJson {
        n,
        c: c.iter()
            .map(|(r, v)| ParamEntryJson {
                i: r.i,
                j: r.j,
                value: rat_to_string(v),
            })
            .collect(),
    }
}

/// Row matrix of exact rational strings.
pub fn subspace_to_json(v: &Subspace) -> Vec<Vec<String>> {
    v.rows()
        .iter()
        .map(|row| row.iter().map(rat_to_string).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    #[test]
    fn mult_round_trip() {
        let m = MultDegree::from_entries(3, [(RootIndex::new(1, 1), 1), (RootIndex::new(1, 2), 2)])
            .unwrap();
        let json = mult_to_json(&m);
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(
            text,
            r#"{"n":3,"mult":[{"i":1,"j":1,"m":1},{"i":1,"j":2,"m":2}]}"#
        );
        let back = mult_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn mult_rejects_bad_entries() {
        let json: MultDegreeJson =
            serde_json::from_str(r#"{"n":3,"mult":[{"i":2,"j":1,"m":1}]}"#).unwrap();
        assert!(mult_from_json(&json).is_err());
        let json: MultDegreeJson =
            serde_json::from_str(r#"{"n":3,"mult":[{"i":1,"j":1,"m":1},{"i":1,"j":1,"m":2}]}"#)
                .unwrap();
        assert!(mult_from_json(&json).is_err());
    }

    #[test]
    fn xpoly_round_trip_with_signs() {
        let text = r#"{"terms":[{"coeff":"1","vars":[{"i":1,"j":1,"L":[3]},{"i":1,"j":2,"L":[1]}]},{"coeff":"-1","vars":[{"i":1,"j":1,"L":[1]},{"i":1,"j":2,"L":[3]}]}]}"#;
        let json: XPolyJson = serde_json::from_str(text).unwrap();
        let p = xpoly_from_json(3, &json).unwrap();
        assert_eq!(p.num_terms(), 2);
        let back = xpoly_to_json(&p);
        let reparsed = xpoly_from_json(3, &back).unwrap();
        assert_eq!(p, reparsed);

        // Unsorted indices fold their sign into the coefficient.
        let text = r#"{"terms":[{"coeff":"1","vars":[{"i":2,"j":2,"L":[3,2]}]}]}"#;
        let json: XPolyJson = serde_json::from_str(text).unwrap();
        let p = xpoly_from_json(4, &json).unwrap();
        let (mono, c) = p.terms().next().unwrap();
        assert_eq!(mono[0].indices, vec![2, 3]);
        assert_eq!(c, &rat(-1));
    }

    #[test]
    fn invalid_variables_rejected() {
        let text = r#"{"terms":[{"coeff":"1","vars":[{"i":2,"j":3,"L":[1,3]}]}]}"#;
        let json: XPolyJson = serde_json::from_str(text).unwrap();
        assert!(xpoly_from_json(4, &json).is_err());
        let text = r#"{"terms":[{"coeff":"1","vars":[{"i":2,"j":2,"L":[1]}]}]}"#;
        let json: XPolyJson = serde_json::from_str(text).unwrap();
        assert!(xpoly_from_json(4, &json).is_err());
    }

    #[test]
    fn params_round_trip() {
        let text = r#"{"n":3,"c":[{"i":1,"j":1,"value":"2"},{"i":1,"j":2,"value":"-1/3"},{"i":2,"j":2,"value":"5/7"}]}"#;
        let json: ParamsJson = serde_json::from_str(text).unwrap();
        let (n, c) = params_from_json(&json).unwrap();
        assert_eq!(n, 3);
        assert_eq!(c.len(), 3);
        let back = params_to_json(n, &c);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);

        // Missing roots are rejected.
        let text = r#"{"n":3,"c":[{"i":1,"j":1,"value":"2"}]}"#;
        let json: ParamsJson = serde_json::from_str(text).unwrap();
        assert!(params_from_json(&json).is_err());
    }
}
