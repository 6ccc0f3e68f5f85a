//! Coinvariants of `U(Γ^{(λ)})`: the `P_s`, the elimination of the higher
//! coordinates, and the polynomial models.

use crate::algebra::fp::PrimeField;
use crate::algebra::hom::RingHom;
use crate::algebra::ring::{Frac, DEFAULT_KMAX};
use crate::catalog::LambdaMode;
use crate::error::Result;
use crate::report::Checks;
use crate::resolution::ptable::{self, d_prime, occurrence_witness, PTable};
use crate::resolution::zring::ZModels;
use crate::resolution::{same, CleftStructure, GammaSetting};

/// Everything the later suites reuse.
#[derive(Clone, Debug)]
pub struct GammaData<F> {
    pub setting: GammaSetting<F>,
    pub table: PTable<F>,
    pub models: ZModels<F>,
}

impl<F: PrimeField> GammaData<F> {
    pub fn build(n: u32, mode: LambdaMode) -> Result<Self> {
        let setting = GammaSetting::new(n, mode)?;
        let table = ptable::table(&setting)?;
        let models = ZModels::build(&setting.cleft, &table)?;
        Ok(GammaData { setting, table, models })
    }

    pub fn cleft(&self) -> &CleftStructure<F> {
        &self.setting.cleft
    }
}

/// The listed coinvariant generators with their labels: `X₁^{±1}`,
/// `X_T^q`, the `P_s`, `1/(X₁+λX_T)^q` and `D_r/(X₁+λX_T)^r`.
pub fn generator_list<F: PrimeField>(c: &CleftStructure<F>, t: &PTable<F>) -> Result<Vec<(String, Frac<F>)>> {
    let u = c.ring();
    let q = c.q();
    let x1 = c.x1();
    let d1 = c.d(1);
    let mut out = vec![
        ("x1".to_string(), x1.clone()),
        ("x1-inverse".to_string(), u.invert(&x1, DEFAULT_KMAX)?),
        ("xt-power".to_string(), u.pow(&c.x(1), q)),
    ];
    for s in t.range() {
        out.push((format!("p{s}"), t.p(s).clone()));
    }
    out.push(("d1-power-inverse".to_string(), u.invert(&u.pow(&d1, q), DEFAULT_KMAX)?));
    for r in 2..q {
        out.push((format!("ratio{r}"), ratio(c, r)?));
    }
    Ok(out)
}

/// `D_r / D_1^r`.
pub fn ratio<F: PrimeField>(c: &CleftStructure<F>, r: u32) -> Result<Frac<F>> {
    let u = c.ring();
    u.div(&c.d(r), &u.pow(&c.d(1), r))
}

pub fn gamma_suite<F: PrimeField>(n: u32, mode: LambdaMode) -> Checks {
    let mut checks = Checks::new("gamma");
    let setting = match GammaSetting::<F>::new(n, mode) {
        Ok(s) => s,
        Err(e) => {
            checks.fail("setup", "unit group of the deformed scheme", format!("error: {e}"));
            return checks;
        }
    };
    setting.cleft.verify(&mut checks);
    cleaving_values(&setting.cleft, &mut checks);

    let table = match ptable::table(&setting) {
        Ok(t) => {
            let what = match mode {
                LambdaMode::Symbolic => "cleared over the polynomial ring in the parameter",
                LambdaMode::Value(_) => "specialised from the parameter-cleared table",
            };
            checks.check("ptable/parameter-clears", "polynomiality of the coinvariant recursion", true, || what.into());
            t
        }
        Err(e) => {
            checks.fail("ptable/parameter-clears", "polynomiality of the coinvariant recursion", format!("error: {e}"));
            return checks;
        }
    };
    let data = GammaData { models: match ZModels::build(&setting.cleft, &table) {
        Ok(m) => m,
        Err(e) => {
            ptable_checks(&setting, &table, &mut checks);
            checks.fail("models/build", "polynomial model of the unit group", format!("error: {e}"));
            return checks;
        }
    }, setting, table };
    ptable_checks(&data.setting, &data.table, &mut checks);
    elimination_checks(data.cleft(), &data.table, &mut checks);
    generator_checks(data.cleft(), &data.table, &mut checks);
    model_checks(&data, &mut checks);
    checks
}

fn cleaving_values<F: PrimeField>(c: &CleftStructure<F>, checks: &mut Checks) {
    let u = c.ring();
    let r = u
        .invert(&c.x1(), DEFAULT_KMAX)
        .map(|inv| same(u, &c.inverse.values[0], &inv));
    checks.check_result("cleaving/inverse-at-unit", "inverse of the cleaving at the unit", r);
    // ψ⁻¹(T) = −X_T / (X₁ (X₁ + λX_T))
    let r = u
        .invert(&u.mul(&c.x1(), &c.d(1)), DEFAULT_KMAX)
        .map(|inv| same(u, &c.inverse.values[1], &u.neg(&u.mul(&c.x(1), &inv))));
    checks.check_result("cleaving/inverse-at-generator", "inverse of the cleaving by triangular solve", r);
}

fn ptable_checks<F: PrimeField>(g: &GammaSetting<F>, t: &PTable<F>, checks: &mut Checks) {
    let c = &g.cleft;
    let u = c.ring();
    if let LambdaMode::Value(v) = g.mode {
        if !(v as u64).is_multiple_of(F::CHARACTERISTIC as u64) {
            let r = ptable::closed_form(c).map(|d| {
                let bad = t.range().find(|&s| !u.equal(t.p(s), d.p(s)));
                (bad.is_none(), bad.map(|s| format!("s = {s}")))
            });
            checks.check_result("ptable/direct-recursion", "coinvariant recursion at a unit parameter", r);
        }
    }
    for s in t.range() {
        let p = t.p(s);
        checks.check_result(
            &format!("ptable/s{s}/coinvariant"),
            "coinvariance of the recursion values",
            c.coaction.is_coinvariant(p).map(|ok| (ok, None)),
        );
        let target = u.mul(&c.x1(), &u.pow(&c.x(1), s));
        checks.check_result(
            &format!("ptable/s{s}/projector"),
            "agreement with the projector onto coinvariants",
            c.cleft().project(&target).map(|pd| same(u, p, &pd)),
        );
    }
    if t.q > 2 {
        let (x1, xt, xt2) = (c.x1(), c.x(1), c.x(2));
        let num = u.mul(&x1, &u.sub(&u.mul(&xt, &xt), &u.mul(&x1, &xt2)));
        let r = u.div(&num, &c.d(2)).map(|e| same(u, t.p(2), &e));
        checks.check_result("ptable/s2/quotient-form", "first coinvariant in closed form", r);
    }
}

fn elimination_checks<F: PrimeField>(c: &CleftStructure<F>, t: &PTable<F>, checks: &mut Checks) {
    let u = c.ring();
    for s in t.range() {
        let qs = t.q_elem(c, s);
        let w = occurrence_witness(c, s, &qs);
        checks.check(&format!("elimination/s{s}/occurrence"), "earlier coordinates suffice for the auxiliary numerator", w.is_none(), || w.unwrap_or_default());
        // X_{T^s} = (Q_s − D'_s P_s) / E_s
        let r = u
            .div(&u.sub(&qs, &u.mul(&d_prime(c, s), t.p(s))), &t.e(c, s))
            .map(|x| same(u, &x, &c.x(s)));
        checks.check_result(&format!("elimination/s{s}/solve-back"), "recovering the coordinates from the coinvariants", r);
    }
}

fn generator_checks<F: PrimeField>(c: &CleftStructure<F>, t: &PTable<F>, checks: &mut Checks) {
    match generator_list(c, t) {
        Ok(gens) => {
            for (name, g) in gens {
                checks.check_result(
                    &format!("generators/{name}/coinvariant"),
                    "listed generators of the coinvariant subalgebra",
                    c.coaction.is_coinvariant(&g).map(|ok| (ok, None)),
                );
            }
        }
        Err(e) => checks.fail("generators", "listed generators of the coinvariant subalgebra", format!("error: {e}")),
    }
}

fn model_checks<F: PrimeField>(d: &GammaData<F>, checks: &mut Checks) {
    let c = d.cleft();
    let m = &d.models;
    let u = c.ring();
    let q = c.q();
    let r = m.chi.then(&m.xi).map(|h| (h.agrees_with(&RingHom::identity(u.clone())), None));
    checks.check_result("models/xi-after-chi", "the two model maps are mutually inverse", r);
    let r = m.xi.then(&m.chi).map(|h| (h.agrees_with(&RingHom::identity(m.z.clone())), None));
    checks.check_result("models/chi-after-xi", "the two model maps are mutually inverse", r);

    let xo = match m.xi_omega() {
        Ok(h) => h,
        Err(e) => {
            checks.fail("models/xi-omega", "image of the Frobenius-twisted model", format!("error: {e}"));
            return;
        }
    };
    let zp = &m.z_prime;
    let names = m.names();
    let mut expected: Vec<(String, Frac<F>, Frac<F>)> = vec![
        (names[0].clone(), zp.var(&names[0]), c.x1()),
        (names[1].clone(), zp.var(&names[1]), u.pow(&c.x(1), q)),
    ];
    for s in d.table.range() {
        expected.push((names[s as usize].clone(), zp.var(&names[s as usize]), d.table.p(s).clone()));
    }
    let lam = zp.from_base(&c.scheme.lambda);
    let twisted = zp.add(&zp.pow(&zp.var(&names[0]), q), &zp.mul(&zp.pow(&lam, q), &zp.var(&names[1])));
    let listed = u.invert(&u.pow(&c.d(1), q), DEFAULT_KMAX);
    if let (Ok(inv), Ok(l)) = (zp.invert(&twisted, DEFAULT_KMAX), listed) {
        expected.push(("twisted-denominator".into(), inv, l));
    }
    for s in d.table.range() {
        let e = zp.poly(e_poly_in(zp, &lam, &names, s));
        let rhs = ratio(c, s).and_then(|r| u.div(&r, &c.x1()));
        match (zp.invert(&e, DEFAULT_KMAX), rhs) {
            (Ok(inv), Ok(rhs)) => expected.push((format!("e{s}-inverse"), inv, rhs)),
            (a, b) => checks.fail(
                &format!("models/xi-omega/e{s}-inverse"),
                "image of the Frobenius-twisted model",
                format!("{:?} {:?}", a.err(), b.err()),
            ),
        }
    }
    for (label, z, x) in expected {
        let r = xo.apply(&z).map(|img| same(u, &img, &x));
        checks.check_result(&format!("models/xi-omega/{label}"), "image of the Frobenius-twisted model", r);
    }

    // ω is injective: the rewrite back recovers every generator and inverse
    let mut probes: Vec<Frac<F>> = names.iter().map(|v| zp.var(v)).collect();
    probes.extend((0..zp.denominators().len()).map(|k| zp.denominator_power_inverse(k, 1)));
    let bad = probes.iter().find(|x| {
        let back = m.omega.apply(x).and_then(|y| m.omega_preimage(&y));
        !matches!(back, Ok(b) if zp.equal(&b, x))
    });
    checks.check("models/omega-injective", "injectivity of the Frobenius-twisted model map", bad.is_none(), || {
        format!("no preimage recovered for {}", zp.display(bad.expect("checked")))
    });

    // every left component of Φ⁻¹(X_{T^s}) lies in the image of ξ∘ω
    let mut witness = None;
    let mut inputs: Vec<Frac<F>> = (0..q).map(|s| c.x(s)).collect();
    if let Ok(inv) = u.invert(&c.x1(), DEFAULT_KMAX) {
        inputs.push(inv);
    }
    for a in &inputs {
        let res = c.cleft().phi_inverse(a).and_then(|mt| {
            for b in &mt.components {
                if m.coinvariant_preimage(u, b)?.is_none() {
                    return Ok(Some(format!("component {} of {}", u.display(b), u.display(a))));
                }
            }
            Ok((!u.equal(&c.cleft().phi(&mt), a)).then(|| format!("reassembly of {}", u.display(a))))
        });
        match res {
            Ok(None) => {}
            Ok(Some(w)) => witness = Some(w),
            Err(e) => witness = Some(format!("{}: {e}", u.display(a))),
        }
        if witness.is_some() {
            break;
        }
    }
    checks.check("models/expansion-complete", "coinvariant components of the cleft expansion", witness.is_none(), || witness.unwrap_or_default());
}

/// `E_s(Z)` in the twisted model.
fn e_poly_in<F: PrimeField>(zp: &crate::algebra::ring::LocalizedRing<F>, lam: &Frac<F>, names: &[String], s: u32) -> crate::algebra::poly::Poly<F> {
    let z = |i: u32| zp.var(&names[i as usize]);
    let mut acc = zp.pow(&z(0), s);
    for k in 2..s {
        let t = zp.mul(&zp.pow(lam, k), &zp.mul(&zp.pow(&z(0), s - k), &z(k)));
        acc = zp.add(&acc, &zp.scale(&t, crate::resolution::binom(s, k)));
    }
    zp.add(&acc, &zp.mul(&zp.pow(lam, s), &z(s))).num
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;
    use crate::report::Verdict;

    fn assert_all_pass(c: &Checks) {
        let bad: Vec<_> = c.entries.iter().filter(|e| e.verdict == Verdict::Fail).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn suite_passes_on_small_grid() {
        for mode in [LambdaMode::Symbolic, LambdaMode::Value(0), LambdaMode::Value(1)] {
            assert_all_pass(&gamma_suite::<Fp<2>>(1, mode));
            assert_all_pass(&gamma_suite::<Fp<3>>(1, mode));
            assert_all_pass(&gamma_suite::<Fp<2>>(2, mode));
        }
    }

    #[test]
    fn p2_has_no_recursion_entries() {
        let c = gamma_suite::<Fp<2>>(1, LambdaMode::Symbolic);
        assert!(!c.entries.iter().any(|e| e.check_id.starts_with("gamma/ptable/s")));
        assert!(c.entries.iter().any(|e| e.check_id == "gamma/generators/d1-power-inverse/coinvariant"));
    }
}
