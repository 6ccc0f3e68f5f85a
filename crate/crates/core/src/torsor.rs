//! Torsors under `Γ^{(λ)}` and `G^{(λ)}`.
//!
//! `C = R[X', 1/(a+λX')]` with `ρ(X') = X'⊗1 + a⊗T + λX'⊗T` is a
//! `G^{(λ)}`-torsor; `C̃ = R[X']/(X'^p − c)` with the same formula is a
//! `Γ^{(λ)}`-torsor once `a^p + λ^p c` is a unit. The coordinate is called
//! `X'` so that the base ring may use `X`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::fp::PrimeField;
use crate::algebra::hom::RingHom;
use crate::algebra::poly::{Monomial, Poly};
use crate::algebra::ring::{Frac, LocalizedRing, RingSpec};
use crate::algebra::tensor::TensorRing;
use crate::catalog::{lambda_base, make_scheme, GroupScheme, LambdaMode, SchemeTag, LAMBDA_VAR};
use crate::error::{Error, Result};
use crate::hopf::comodule::Coaction;
use crate::report::{Checks, Verdict};
use crate::resolution::same;
use crate::suites::Bounds;

pub const TORSOR_VAR: &str = "X'";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TorsorKind {
    Full,
    Finite,
}

/// `R`, `λ`, `a` and (for the finite torsor) `c`.
#[derive(Clone, Debug)]
pub struct TorsorParams<F> {
    pub base: Arc<LocalizedRing<F>>,
    pub lambda: Frac<F>,
    pub a: Frac<F>,
    pub c: Option<Frac<F>>,
}

impl<F: PrimeField> TorsorParams<F> {
    /// Parses `λ`, `a`, `c` over `F_p[vars][1/d for d in invert]`.
    pub fn parse(vars: &[String], invert: &[String], lambda: &str, a: &str, c: Option<&str>) -> Result<Self> {
        let dens = invert
            .iter()
            .map(|d| crate::algebra::parse::parse_poly::<F>(d, vars))
            .collect::<Result<Vec<_>>>()?;
        let base = LocalizedRing::base(vars.to_vec(), dens)?;
        let lambda = base.parse(lambda)?;
        let a = base.parse(a)?;
        let c = c.map(|c| base.parse(c)).transpose()?;
        Ok(TorsorParams { base, lambda, a, c })
    }

    /// `a^p + λ^p c`.
    pub fn norm(&self) -> Result<Frac<F>> {
        let b = &self.base;
        let p = F::CHARACTERISTIC;
        let c = self.c.as_ref().ok_or_else(|| Error::ConfigInvalid("the finite torsor needs c".into()))?;
        Ok(b.add(&b.pow(&self.a, p), &b.mul(&b.pow(&self.lambda, p), c)))
    }
}

/// `R = F_p[X, Y, 1/(X^p + Y^p + (X+1)^p Y)]`, `λ = X+1`, `a = X+Y`, `c = Y`.
pub fn example_instance<F: PrimeField>() -> Result<TorsorParams<F>> {
    let p = F::CHARACTERISTIC;
    let vars = vec!["X".to_string(), "Y".to_string()];
    let d = format!("X^{p} + Y^{p} + (X + 1)^{p}*Y");
    TorsorParams::parse(&vars, &[d], "X + 1", "X + Y", Some("Y"))
}

#[derive(Clone, Debug)]
pub struct Torsor<F> {
    pub kind: TorsorKind,
    pub params: TorsorParams<F>,
    /// `Γ^{(λ)}` (finite) or `G^{(λ)}` (full)
    pub group: GroupScheme<F>,
    pub coaction: Coaction<F>,
    /// `u`, `v` with `a·u = 1 + λ·v` (full), or `(a + λX')^{-1}` in `C̃` (finite)
    pub hypothesis_witness: String,
}

impl<F: PrimeField> Torsor<F> {
    pub fn ring(&self) -> &Arc<LocalizedRing<F>> {
        &self.coaction.source
    }

    /// `a + λX'` in the torsor's ring.
    pub fn unit_element(&self) -> Frac<F> {
        let r = self.ring();
        r.add(&r.from_base(&self.params.a), &r.mul(&r.from_base(&self.params.lambda), &r.var(TORSOR_VAR)))
    }
}

/// `a` is a unit modulo `λ`: returns `(u, v)` with `a·u = 1 + λ·v`.
fn unit_mod_lambda<F: PrimeField>(t: &TorsorParams<F>, kmax: u32) -> Result<(Frac<F>, Frac<F>)> {
    let b = &t.base;
    if let Ok(u) = b.invert(&t.a, kmax) {
        return Ok((u, b.zero()));
    }
    if let Ok(l) = b.invert(&t.lambda, kmax) {
        return Ok((b.zero(), b.neg(&l)));
    }
    // a · a^{p-1}/N = 1 − λ · λ^{p-1}c/N with N = a^p + λ^p c
    let p = F::CHARACTERISTIC;
    if let Some(c) = &t.c {
        if let Ok(n_inv) = b.invert(&t.norm()?, kmax) {
            let u = b.mul(&b.pow(&t.a, p - 1), &n_inv);
            let v = b.neg(&b.mul(&b.mul(&b.pow(&t.lambda, p - 1), c), &n_inv));
            return Ok((u, v));
        }
    }
    // a unit a + λb gives u = 1/(a + λb), v = −b·u
    if let Ok(SearchVerdict::CleftWitness(w)) = cleft_obstruction_search(t, HYPOTHESIS_SEARCH_DEGREE, kmax) {
        let u = b.invert(&b.add(&t.a, &b.mul(&t.lambda, &w)), kmax)?;
        let v = b.neg(&b.mul(&w, &u));
        return Ok((u, v));
    }
    Err(Error::HypothesisUnverified("no certificate that a is a unit modulo λ".into()))
}

/// Degree of the fallback search certifying `a` as a unit modulo `λ`.
const HYPOTHESIS_SEARCH_DEGREE: u32 = 1;

pub fn make_torsor<F: PrimeField>(kind: TorsorKind, params: &TorsorParams<F>, kmax: u32) -> Result<Torsor<F>> {
    let base = &params.base;
    let p = F::CHARACTERISTIC;
    let shell = LocalizedRing::over(base, RingSpec { vars: vec![TORSOR_VAR.into()], relations: vec![], denominators: vec![] })?;
    let xv = shell.var(TORSOR_VAR);
    let unit = shell.add(&shell.from_base(&params.a), &shell.mul(&shell.from_base(&params.lambda), &xv));
    let (ring, group, witness) = match kind {
        TorsorKind::Full => {
            let (u, v) = unit_mod_lambda(params, kmax)?;
            let lhs = base.mul(&params.a, &u);
            let rhs = base.add(&base.one(), &base.mul(&params.lambda, &v));
            if !base.equal(&lhs, &rhs) {
                return Err(Error::HypothesisUnverified("unit witness modulo λ does not verify".into()));
            }
            let ring = LocalizedRing::over_deduped(base, RingSpec { vars: vec![TORSOR_VAR.into()], relations: vec![], denominators: vec![unit.num.clone()] })?;
            let w = format!("a*({}) = 1 + λ*({})", base.display(&u), base.display(&v));
            (ring, make_scheme(SchemeTag::GLambda, 1, base, &params.lambda)?, w)
        }
        TorsorKind::Finite => {
            let n = params.norm()?;
            let n_inv = base
                .invert(&n, kmax)
                .map_err(|_| Error::HypothesisUnverified(format!("a^p + λ^p c = {} is not a unit", base.display(&n))))?;
            let c = params.c.as_ref().expect("norm needs c");
            let c_poly = shell.from_base(c);
            if !c_poly.is_polynomial() {
                return Err(Error::ConfigInvalid("c must be a polynomial".into()));
            }
            let ring = LocalizedRing::over(base, RingSpec { vars: vec![TORSOR_VAR.into()], relations: vec![(TORSOR_VAR.into(), p, c_poly.num)], denominators: vec![] })?;
            let w = format!("(a^p + λ^p c)^-1 = {}", base.display(&n_inv));
            (ring, make_scheme(SchemeTag::GammaLambda, 1, base, &params.lambda)?, w)
        }
    };
    let a = params.a.clone();
    let l = params.lambda.clone();
    let coaction = Coaction::new(ring.clone(), &group.hopf, |t| {
        let r = t.ring();
        let x = t.embed(0, &ring.var(TORSOR_VAR));
        let tt = t.embed(1, &group.hopf.var(group.generator()));
        let img = r.add(&x, &r.mul(&r.add(&r.from_base(&a), &r.mul(&r.from_base(&l), &x)), &tt));
        Ok(vec![(TORSOR_VAR.to_string(), img)])
    })?;
    Ok(Torsor { kind, params: params.clone(), group, coaction, hypothesis_witness: witness })
}

/// Coaction axioms, the Galois map `r: C⊗C → C⊗B` against its printed
/// inverse, and for `C̃` the identity `(a+λX')^p = a^p + λ^p c`.
pub fn verify_galois_map<F: PrimeField>(t: &Torsor<F>, checks: &mut Checks) {
    let anchor = "Galois map of the torsor";
    checks.check_result(
        "coaction-axioms",
        "coaction of the torsor",
        t.coaction.check_axioms(&t.group.hopf).map(|v| {
            let bad = v.iter().find(|c| !(c.coassociative && c.counital)).map(|c| c.generator.clone());
            (bad.is_none(), bad)
        }),
    );
    if t.kind == TorsorKind::Finite {
        let r = t.ring();
        let lhs = r.pow(&t.unit_element(), F::CHARACTERISTIC);
        checks.check_result("frobenius-identity", "p-th power of the unit in the finite torsor", t.params.norm().map(|n| same(r, &lhs, &r.from_base(&n))));
    }
    let run = || -> Result<(bool, Option<String>)> {
        let c = t.ring();
        let cc = TensorRing::new(vec![c.clone(), c.clone()])?;
        let cb = TensorRing::new(vec![c.clone(), t.group.carrier().clone()])?;
        let (ccr, cbr) = (cc.ring(), cb.ring());
        let x = c.var(TORSOR_VAR);
        let tv = t.group.hopf.var(t.group.generator());
        let (a, l) = (&t.params.a, &t.params.lambda);

        let x1 = cb.embed(0, &x);
        let t2 = cb.embed(1, &tv);
        let img = cbr.add(&cbr.add(&cbr.mul(&cbr.mul(&cbr.from_base(l), &x1), &t2), &x1), &cbr.mul(&cbr.from_base(a), &t2));
        let r = RingHom::over_base(ccr.clone(), cbr.clone(), vec![(format!("{TORSOR_VAR}.1"), x1.clone()), (format!("{TORSOR_VAR}.2"), img)])?;

        let y1 = cc.embed(0, &x);
        let y2 = cc.embed(1, &x);
        let unit1 = ccr.add(&ccr.from_base(a), &ccr.mul(&ccr.from_base(l), &y1));
        let img = ccr.div(&ccr.sub(&y2, &y1), &unit1)?;
        let tname = format!("{}.2", t.group.generator());
        let r_inv = RingHom::over_base(cbr.clone(), ccr.clone(), vec![(format!("{TORSOR_VAR}.1"), y1), (tname, img)])?;

        if !r.then(&r_inv)?.agrees_with(&RingHom::identity(ccr.clone())) {
            return Ok((false, Some("r⁻¹∘r is not the identity".into())));
        }
        if !r_inv.then(&r)?.agrees_with(&RingHom::identity(cbr.clone())) {
            return Ok((false, Some("r∘r⁻¹ is not the identity".into())));
        }
        Ok((true, None))
    };
    checks.check_result("galois-map", anchor, run());
}

/// `φ: C → C̃⊗B`, `X' ↦ X'⊗1 + a⊗T + λX'⊗T`: a ring map, colinear for the
/// right `B`-coactions, and invariant under the left `Γ`-coaction
/// `X'⊗1 ↦ 1⊗X'⊗1 − T/(1+λT)⊗(a+λX')⊗1`, `1⊗T ↦ Δ(T)`.
pub fn contracted_product_check<F: PrimeField>(finite: &Torsor<F>, full: &Torsor<F>, checks: &mut Checks) {
    let anchor = "contracted product with the deformed multiplicative group";
    let run = || -> Result<Vec<(&'static str, bool, Option<String>)>> {
        let ct = finite.ring();
        let c = full.ring();
        let bh = &full.group.hopf;
        let b = bh.carrier();
        let (a, l) = (&full.params.a, &full.params.lambda);
        let pair = TensorRing::new(vec![ct.clone(), b.clone()])?;
        let pr = pair.ring();
        let x1 = pair.embed(0, &ct.var(TORSOR_VAR));
        let t2 = pair.embed(1, &bh.var(full.group.generator()));
        let (pa, pl) = (pr.from_base(a), pr.from_base(l));
        let phi_x = pr.add(&pr.add(&x1, &pr.mul(&pa, &t2)), &pr.mul(&pr.mul(&pl, &x1), &t2));
        let phi = RingHom::over_base(c.clone(), pr.clone(), vec![(TORSOR_VAR.into(), phi_x.clone())])?;
        let mut out = Vec::new();

        let want = pr.mul(&pair.embed(0, &finite.unit_element()), &pr.add(&pr.one(), &pr.mul(&pl, &t2)));
        let got = phi.apply(&full.unit_element())?;
        let (ok, w) = same(pr, &got, &want);
        let unit_ok = ok && pr.invert(&got, crate::algebra::ring::DEFAULT_KMAX).is_ok();
        out.push(("phi-unit", unit_ok, w));

        // (φ⊗id)∘ρ_C = (id⊗Δ)∘φ in C̃⊗B⊗B
        let triple = TensorRing::new(vec![ct.clone(), b.clone(), b.clone()])?;
        let into01 = pair.reindex_into(&triple, &[0, 1])?;
        let left = full.coaction.tensor.hom_from_factors(triple.ring().clone(), &[&phi.then(&into01)?, &triple.inclusion(2)?])?;
        let delta = bh.comultiplication().then(&bh.square().reindex_into(&triple, &[1, 2])?)?;
        let right = pair.hom_from_factors(triple.ring().clone(), &[&triple.inclusion(0)?, &delta])?;
        let x = c.var(TORSOR_VAR);
        let lhs = left.apply(&full.coaction.apply(&x)?)?;
        let rhs = right.apply(&phi_x)?;
        let (ok, w) = same(triple.ring(), &lhs, &rhs);
        out.push(("comodule-hom", ok, w));

        // left Γ-coaction into B̃ ⊗ C̃ ⊗ B
        let gh = &finite.group.hopf;
        let lt = TensorRing::new(vec![gh.carrier().clone(), ct.clone(), b.clone()])?;
        let lr = lt.ring();
        let s = lt.embed(0, &gh.var(finite.group.generator()));
        let (la, ll) = (lr.from_base(a), lr.from_base(l));
        let p = F::CHARACTERISTIC;
        // (1 + λT)^{-1} = Σ_{k<p} (−λT)^k since T^p = 0
        let neg_lt = lr.neg(&lr.mul(&ll, &s));
        let inv: Vec<Frac<F>> = (0..p).map(|k| lr.pow(&neg_lt, k)).collect();
        let anti = lr.neg(&lr.mul(&s, &lr.sum(inv.iter())));
        let xm = lt.embed(1, &ct.var(TORSOR_VAR));
        let t3 = lt.embed(2, &bh.var(full.group.generator()));
        let img_x = lr.add(&xm, &lr.mul(&anti, &lr.add(&la, &lr.mul(&ll, &xm))));
        let img_t = lr.add(&lr.add(&s, &t3), &lr.mul(&ll, &lr.mul(&s, &t3)));
        let tname = format!("{}.2", full.group.generator());
        let left_coaction = RingHom::over_base(pr.clone(), lr.clone(), vec![(format!("{TORSOR_VAR}.1"), img_x), (tname, img_t)])?;
        let shift = pair.reindex_into(&lt, &[1, 2])?;
        let inv_x = c.invert(&full.unit_element(), crate::algebra::ring::DEFAULT_KMAX)?;
        let mut witness = None;
        for g in [x, inv_x] {
            let y = phi.apply(&g)?;
            let (ok, w) = same(lr, &left_coaction.apply(&y)?, &shift.apply(&y)?);
            if !ok {
                witness = w;
                break;
            }
        }
        out.push(("left-invariant", witness.is_none(), witness));
        Ok(out)
    };
    match run() {
        Ok(v) => {
            for (id, ok, w) in v {
                checks.check(id, anchor, ok, || w.unwrap_or_default());
            }
        }
        Err(e) => checks.fail("phi", anchor, format!("error: {e}")),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SearchVerdict<F> {
    CleftWitness(Frac<F>),
    NoWitnessUpTo(u32),
}

/// Searches `b` with `F_p` coefficients on the monomials of total degree
/// `≤ degree_bound` in the base variables for a unit `a + λb`. The first
/// witness in enumeration order is returned.
pub fn cleft_obstruction_search<F: PrimeField>(t: &TorsorParams<F>, degree_bound: u32, kmax: u32) -> Result<SearchVerdict<F>> {
    let base = &t.base;
    let nv = base.nvars();
    let mut monomials: Vec<Monomial> = Vec::new();
    let mut stack = vec![(0usize, vec![0u32; nv])];
    while let Some((i, e)) = stack.pop() {
        if i == nv {
            monomials.push(Monomial::from_exponents(e));
            continue;
        }
        let used: u32 = e.iter().sum();
        for k in 0..=(degree_bound - used) {
            let mut e2 = e.clone();
            e2[i] = k;
            stack.push((i + 1, e2));
        }
    }
    monomials.sort();
    let p = F::CHARACTERISTIC as u64;
    let total = p
        .checked_pow(monomials.len() as u32)
        .ok_or_else(|| Error::ConfigInvalid("search space too large".into()))?;
    let candidate = |code: u64| -> Frac<F> {
        let mut k = code;
        let terms = monomials.iter().map(|m| {
            let c = F::from_i64((k % p) as i64);
            k /= p;
            (m.clone(), c)
        });
        base.poly(Poly::from_terms(nv, terms.collect::<Vec<_>>()))
    };
    let found = (0..total).into_par_iter().find_first(|&code| {
        let b = candidate(code);
        let x = base.add(&t.a, &base.mul(&t.lambda, &b));
        !x.num.is_zero() && base.localized_invert(&x, kmax).is_ok()
    });
    Ok(match found {
        Some(code) => SearchVerdict::CleftWitness(candidate(code)),
        None => SearchVerdict::NoWitnessUpTo(degree_bound),
    })
}

/// Both torsors on one parameter set, with the Galois maps and the
/// contracted product.
pub fn instance_checks<F: PrimeField>(params: &TorsorParams<F>, kmax: u32, checks: &mut Checks) {
    let finite = match params.c {
        Some(_) => Some(make_torsor(TorsorKind::Finite, params, kmax)),
        None => None,
    };
    let full = Some(make_torsor(TorsorKind::Full, params, kmax));
    for (label, t) in [("finite", &finite), ("full", &full)] {
        let Some(t) = t else { continue };
        match t {
            Ok(t) => {
                checks.push(&format!("{label}/hypothesis"), "unit hypothesis of the torsor family", Verdict::Pass, Some(t.hypothesis_witness.clone()));
                let mut sub = Checks::new(label);
                verify_galois_map(t, &mut sub);
                checks.extend(sub);
            }
            Err(e) => checks.fail(&format!("{label}/hypothesis"), "unit hypothesis of the torsor family", format!("error: {e}")),
        }
    }
    if let (Some(Ok(f)), Some(Ok(g))) = (&finite, &full) {
        let mut sub = Checks::new("contracted");
        contracted_product_check(f, g, &mut sub);
        checks.extend(sub);
    }
}

/// Generic parameters `a = A`, `c = C` over `F_p[(L,) A, C][1/(A^p + λ^p C)]`.
pub fn generic_instance<F: PrimeField>(mode: LambdaMode) -> Result<TorsorParams<F>> {
    let (_, _) = lambda_base::<F>(mode, false)?;
    let p = F::CHARACTERISTIC;
    let (vars, lambda) = match mode {
        LambdaMode::Symbolic => (vec![LAMBDA_VAR.to_string(), "A".into(), "C".into()], LAMBDA_VAR.to_string()),
        LambdaMode::Value(v) => (vec!["A".to_string(), "C".into()], v.to_string()),
    };
    let d = format!("A^{p} + ({lambda})^{p}*C");
    TorsorParams::parse(&vars, &[d], &lambda, "A", Some("C"))
}

pub fn torsor_suite<F: PrimeField>(mode: LambdaMode, bounds: Bounds) -> Checks {
    let mut checks = Checks::new("torsor");
    match generic_instance::<F>(mode) {
        Ok(params) => {
            let mut sub = Checks::new("generic");
            instance_checks(&params, bounds.k_max, &mut sub);
            checks.extend(sub);
        }
        Err(e) => checks.fail("generic/setup", "torsor family", format!("error: {e}")),
    }

    // a + λc-type degeneracy: a = 1, λ = 1, c = −1 gives a^p + λ^p c = 0
    let vars: Vec<String> = Vec::new();
    let r = TorsorParams::<F>::parse(&vars, &[], "1", "1", Some("-1")).and_then(|t| make_torsor(TorsorKind::Finite, &t, bounds.k_max));
    match r {
        Err(Error::HypothesisUnverified(w)) => checks.push("controls/degenerate-hypothesis", "unit hypothesis of the torsor family", Verdict::Pass, Some(w)),
        Err(e) => checks.fail("controls/degenerate-hypothesis", "unit hypothesis of the torsor family", format!("unexpected error: {e}")),
        Ok(_) => checks.fail("controls/degenerate-hypothesis", "unit hypothesis of the torsor family", "torsor constructed".into()),
    }
    let r = TorsorParams::<F>::parse(&["X".to_string()], &[], "X", "1", Some("0")).and_then(|t| cleft_obstruction_search(&t, 0, bounds.k_max));
    match r {
        Ok(SearchVerdict::CleftWitness(b)) if b.num.is_zero() => checks.push("search/unit-a", "cleftness criterion", Verdict::Pass, Some("b = 0".into())),
        other => checks.fail("search/unit-a", "cleftness criterion", format!("{other:?}")),
    }

    if mode == LambdaMode::Symbolic {
        example_checks::<F>(bounds, &mut checks);
    }
    checks
}

/// Torsor checks and the bounded cleft search for user parameters.
pub fn user_checks<F: PrimeField>(params: &TorsorParams<F>, bounds: Bounds) -> Checks {
    let mut checks = Checks::new("torsor");
    instance_checks(params, bounds.k_max, &mut checks);
    let b = &params.base;
    match cleft_obstruction_search(params, bounds.degree_bound, bounds.k_max) {
        Ok(SearchVerdict::CleftWitness(w)) => {
            let u = b.add(&params.a, &b.mul(&params.lambda, &w));
            checks.push("search", "cleftness criterion", Verdict::Pass, Some(format!("CleftWitness({}): a + λb = {} is a unit", b.display(&w), b.display(&u))))
        }
        Ok(SearchVerdict::NoWitnessUpTo(d)) => checks.push("search", "cleftness criterion", Verdict::Evidence, Some(format!("NoWitnessUpTo({d})"))),
        Err(e) => checks.fail("search", "cleftness criterion", format!("error: {e}")),
    }
    checks
}

/// The concluding non-cleft example.
pub fn example_checks<F: PrimeField>(bounds: Bounds, checks: &mut Checks) {
    let anchor = "concluding non-cleft example";
    let params = match example_instance::<F>() {
        Ok(p) => p,
        Err(e) => {
            checks.fail("example/setup", anchor, format!("error: {e}"));
            return;
        }
    };
    let b = &params.base;
    let r = params.norm().map(|n| same(b, &n, &b.poly(b.denominators()[0].clone())));
    checks.check_result("example/norm-is-designated", anchor, r);
    let mut sub = Checks::new("example");
    instance_checks(&params, bounds.k_max, &mut sub);
    checks.extend(sub);
    match cleft_obstruction_search(&params, bounds.degree_bound, bounds.k_max) {
        Ok(SearchVerdict::NoWitnessUpTo(d)) => checks.push(
            "example/cleft-search",
            anchor,
            Verdict::Evidence,
            Some(format!("NoWitnessUpTo({d}); expected non-cleft; bounded search consistent")),
        ),
        Ok(SearchVerdict::CleftWitness(w)) => {
            let u = b.add(&params.a, &b.mul(&params.lambda, &w));
            checks.fail("example/cleft-search", anchor, format!("CleftWitness({}): a + λb = {} is a unit", b.display(&w), b.display(&u)))
        }
        Err(e) => checks.fail("example/cleft-search", anchor, format!("error: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;

    type F2 = Fp<2>;

    fn bare(lambda: &str, a: &str, c: &str) -> TorsorParams<F2> {
        TorsorParams::parse(&[], &[], lambda, a, Some(c)).unwrap()
    }

    #[test]
    fn hypothesis_examples() {
        assert!(matches!(make_torsor(TorsorKind::Finite, &bare("1", "1", "1"), 4), Err(Error::HypothesisUnverified(_))));
        assert!(make_torsor(TorsorKind::Finite, &bare("1", "1", "0"), 4).is_ok());
    }

    #[test]
    fn example_is_cleft_in_characteristic_two() {
        // X^2 + Y^2 + (X+1)^2 Y = (Y+1)(X^2+Y), so a + λ·1 = Y+1 is a unit
        let t = example_instance::<F2>().unwrap();
        let b = &t.base;
        let f = b.mul(&b.parse("Y + 1").unwrap(), &b.parse("X^2 + Y").unwrap());
        assert!(b.equal(&t.norm().unwrap(), &f));
        match cleft_obstruction_search(&t, 2, 4).unwrap() {
            SearchVerdict::CleftWitness(w) => assert!(b.is_one(&w)),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn example_search_finds_nothing_in_odd_characteristic() {
        let t = example_instance::<Fp<3>>().unwrap();
        assert_eq!(cleft_obstruction_search(&t, 2, 4).unwrap(), SearchVerdict::NoWitnessUpTo(2));
        let t = example_instance::<Fp<5>>().unwrap();
        assert_eq!(cleft_obstruction_search(&t, 1, 4).unwrap(), SearchVerdict::NoWitnessUpTo(1));
    }

    #[test]
    fn search_is_monotone() {
        let t = TorsorParams::<F2>::parse(&["X".to_string()], &["X".to_string()], "X", "X + 1", Some("0")).unwrap();
        let first = cleft_obstruction_search(&t, 1, 4).unwrap();
        assert!(matches!(first, SearchVerdict::CleftWitness(_)));
        for d in 2..4 {
            assert!(matches!(cleft_obstruction_search(&t, d, 4).unwrap(), SearchVerdict::CleftWitness(_)));
        }
    }

    #[test]
    fn suites_pass() {
        use crate::report::Verdict;
        for mode in [LambdaMode::Symbolic, LambdaMode::Value(0), LambdaMode::Value(1)] {
            let c = torsor_suite::<F2>(mode, Bounds::default());
            let bad: Vec<_> = c.entries.iter().filter(|e| e.verdict == Verdict::Fail).map(|e| e.check_id.as_str()).collect();
            let expected: &[&str] = if mode == LambdaMode::Symbolic { &["torsor/example/cleft-search"] } else { &[] };
            assert_eq!(bad, expected, "{mode}");
            let c = torsor_suite::<Fp<3>>(mode, Bounds::default());
            let bad: Vec<_> = c.entries.iter().filter(|e| e.verdict == Verdict::Fail).collect();
            assert!(bad.is_empty(), "{mode}: {bad:#?}");
        }
    }
}
