//! Declarative text format for Hopf presentations.
//!
//! ```text
//! hopf Gamma^(L)_3
//! characteristic 3
//! base L
//! base-denominator L
//! generators T
//! relation T^3 = 0
//! comultiplication T = T.1 + T.2 + L*T.1*T.2
//! counit T = 0
//! antipode T = -T + L*T^2
//! ```
//!
//! Fractions use the compact `num / D0^1` form, where `Dk` indexes the
//! designated denominators in declaration order (base ones first).

use std::sync::Arc;

use crate::algebra::fp::PrimeField;
use crate::algebra::ring::{Frac, LocalizedRing, RingSpec};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;

pub fn to_text<F: PrimeField>(h: &HopfAlgebra<F>) -> String {
    let c = h.carrier();
    let base = h.base();
    let mut out = Vec::new();
    out.push(format!("hopf {}", h.name()));
    out.push(format!("characteristic {}", F::CHARACTERISTIC));
    out.push(format!("base {}", base.vars().join(" ")).trim_end().to_string());
    for d in base.denominators() {
        out.push(format!("base-denominator {}", base.poly_text(d)));
    }
    out.push(format!("generators {}", c.own_vars().join(" ")));
    for r in c.relations() {
        out.push(format!("relation {}^{} = {}", c.vars()[r.var], r.exponent, c.poly_text(&r.rhs)));
    }
    for d in &c.denominators()[c.base_denominator_count()..] {
        out.push(format!("denominator {}", c.poly_text(d)));
    }
    let r2 = h.square().ring();
    for g in h.generators() {
        let img = h.comultiplication().image_of(g).expect("comultiplication is total");
        out.push(format!("comultiplication {g} = {}", r2.to_text(img)));
    }
    for g in h.generators() {
        let img = h.counit().image_of(g).expect("counit is total");
        out.push(format!("counit {g} = {}", base.to_text(img)));
    }
    for g in h.generators() {
        let img = h.antipode().image_of(g).expect("antipode is total");
        out.push(format!("antipode {g} = {}", c.to_text(img)));
    }
    out.push(String::new());
    out.join("\n")
}

fn assignment(rest: &str) -> Result<(String, String)> {
    let (lhs, rhs) = rest
        .split_once(" = ")
        .ok_or_else(|| Error::Parse(format!("expected `name = value`, got `{rest}`")))?;
    Ok((lhs.trim().to_string(), rhs.trim().to_string()))
}

pub fn from_text<F: PrimeField>(text: &str) -> Result<HopfAlgebra<F>> {
    let mut name = String::new();
    let mut base_vars: Vec<String> = Vec::new();
    let mut base_dens: Vec<String> = Vec::new();
    let mut gens: Vec<String> = Vec::new();
    let mut rels: Vec<(String, String)> = Vec::new();
    let mut dens: Vec<String> = Vec::new();
    let mut comult = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "hopf" => name = rest.to_string(),
            "characteristic" => {
                let p: u32 = rest.parse().map_err(|_| Error::Parse(format!("bad characteristic `{rest}`")))?;
                if p != F::CHARACTERISTIC {
                    return Err(Error::InvalidPrime(p));
                }
            }
            "base" => base_vars = rest.split_whitespace().map(String::from).collect(),
            "base-denominator" => base_dens.push(rest.to_string()),
            "generators" => gens = rest.split_whitespace().map(String::from).collect(),
            "relation" => rels.push(assignment(rest)?),
            "denominator" => dens.push(rest.to_string()),
            "comultiplication" => comult.push(assignment(rest)?),
            "counit" => counit.push(assignment(rest)?),
            "antipode" => antipode.push(assignment(rest)?),
            other => return Err(Error::Parse(format!("unknown key `{other}`"))),
        }
    }

    let bd = base_dens
        .iter()
        .map(|d| crate::algebra::parse::parse_poly::<F>(d, &base_vars))
        .collect::<Result<Vec<_>>>()?;
    let base = LocalizedRing::base(base_vars.clone(), bd)?;
    let mut all = base_vars.clone();
    all.extend(gens.iter().cloned());
    let mut relations = Vec::new();
    for (lhs, rhs) in rels {
        let (v, e) = lhs
            .split_once('^')
            .ok_or_else(|| Error::Parse(format!("relation must read `v^d = rhs`, got `{lhs}`")))?;
        let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad exponent in `{lhs}`")))?;
        relations.push((v.to_string(), e, crate::algebra::parse::parse_poly::<F>(&rhs, &all)?));
    }
    let denominators = dens
        .iter()
        .map(|d| crate::algebra::parse::parse_poly::<F>(d, &all))
        .collect::<Result<Vec<_>>>()?;
    let carrier: Arc<LocalizedRing<F>> = LocalizedRing::over(&base, RingSpec { vars: gens, relations, denominators })?;
    let t2 = crate::algebra::tensor::TensorRing::square(&carrier)?;
    let parse_in = |ring: &LocalizedRing<F>, items: Vec<(String, String)>| -> Result<Vec<(String, Frac<F>)>> {
        items.into_iter().map(|(g, v)| Ok((g, ring.parse(&v)?))).collect()
    };
    let comult = parse_in(t2.ring(), comult)?;
    let counit = parse_in(&base, counit)?;
    let antipode = parse_in(&carrier, antipode)?;
    HopfAlgebra::new(name, carrier, comult, counit, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;
    use crate::catalog::{lambda_base, make_scheme, LambdaMode, SchemeTag};
    use crate::hopf::unit_group::build_unit_group;

    type F3 = Fp<3>;

    #[test]
    fn round_trip_catalog_and_unit_group() {
        let (base, l) = lambda_base::<F3>(LambdaMode::Symbolic, true).unwrap();
        let g = make_scheme(SchemeTag::GammaLambda, 1, &base, &l).unwrap();
        let u = build_unit_group(&g.hopf, "X").unwrap();
        for tag in SchemeTag::ALL {
            let h = make_scheme(tag, 1, &base, &l).unwrap().hopf;
            let s = to_text(&h);
            let back = from_text::<F3>(&s).unwrap();
            assert_eq!(to_text(&back), s);
            assert_eq!(back.carrier(), h.carrier());
        }
        let s = to_text(&u.hopf);
        let back = from_text::<F3>(&s).unwrap();
        assert_eq!(to_text(&back), s);
        assert!(back.check_axioms().unwrap().all_pass());
        assert!(from_text::<Fp<2>>(&s).is_err());
    }
}
