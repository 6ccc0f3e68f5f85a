//! Coinvariants of `U(μ_{p^n})`: a Laurent torus on `Y₁`, the ratios
//! `g_i = Y_U^i / Y_{U^i}` and `Y_U^q`.

use crate::algebra::fp::PrimeField;
use crate::algebra::ring::{Frac, DEFAULT_KMAX};
use crate::catalog::{lambda_base, make_scheme, LambdaMode, SchemeTag};
use crate::error::Result;
use crate::hopf::comodule::MixedTensor;
use crate::report::Checks;
use crate::resolution::{build_cleft_structure, same, CleftStructure};

pub fn mu_structure<F: PrimeField>(n: u32) -> Result<CleftStructure<F>> {
    let (base, l) = lambda_base::<F>(LambdaMode::Value(0), false)?;
    build_cleft_structure(make_scheme(SchemeTag::Mu, n, &base, &l)?)
}

/// `g_i = Y_U^i / Y_{U^i}` for `2 ≤ i < q`.
pub fn ratio<F: PrimeField>(c: &CleftStructure<F>, i: u32) -> Result<Frac<F>> {
    let u = c.ring();
    u.div(&u.pow(&c.x(1), i), &c.x(i))
}

/// `x^e` for a signed exponent.
fn spow<F: PrimeField>(c: &CleftStructure<F>, x: &Frac<F>, e: i64) -> Result<Frac<F>> {
    let u = c.ring();
    let base = if e < 0 { u.invert(x, DEFAULT_KMAX)? } else { x.clone() };
    Ok(u.pow(&base, e.unsigned_abs() as u32))
}

pub fn generator_list<F: PrimeField>(c: &CleftStructure<F>) -> Result<Vec<(String, Frac<F>)>> {
    let q = c.q();
    let y1 = c.x1();
    let yq = c.ring().pow(&c.x(1), q);
    let mut out = vec![("y1".to_string(), y1.clone()), ("y1-inverse".to_string(), spow(c, &y1, -1)?)];
    for i in 2..q {
        let g = ratio(c, i)?;
        out.push((format!("ratio{i}-inverse"), spow(c, &g, -1)?));
        out.push((format!("ratio{i}"), g));
    }
    out.push(("yu-power-inverse".to_string(), spow(c, &yq, -1)?));
    out.push(("yu-power".to_string(), yq));
    Ok(out)
}

/// `Φ⁻¹(Π Y_{U^i}^{m_i})` predicted from the generators: with
/// `S = Σ i m_i = qQ + r`, it is
/// `Y₁^{m₀−[r=0]} Π_{i≥2} g_i^{[i=r]−m_i} (Y_U^q)^Q ⊗ U^r`.
pub fn predicted_expansion<F: PrimeField>(c: &CleftStructure<F>, m: &[i64]) -> Result<MixedTensor<F>> {
    let u = c.ring();
    let q = c.q() as i64;
    let s: i64 = m.iter().enumerate().map(|(i, e)| i as i64 * e).sum();
    let (big_q, r) = (s.div_euclid(q), s.rem_euclid(q));
    let mut coeff = spow(c, &c.x1(), m[0] - (r == 0) as i64)?;
    for i in 2..q {
        let e = (i == r) as i64 - m[i as usize];
        coeff = u.mul(&coeff, &spow(c, &ratio(c, i as u32)?, e)?);
    }
    coeff = u.mul(&coeff, &spow(c, &u.pow(&c.x(1), q as u32), big_q)?);
    let mut components = vec![u.zero(); q as usize];
    components[r as usize] = coeff;
    Ok(MixedTensor { components })
}

fn monomial<F: PrimeField>(c: &CleftStructure<F>, m: &[i64]) -> Result<Frac<F>> {
    let u = c.ring();
    let mut acc = u.one();
    for (i, &e) in m.iter().enumerate() {
        acc = u.mul(&acc, &spow(c, &c.x(i as u32), e)?);
    }
    Ok(acc)
}

fn agree<F: PrimeField>(c: &CleftStructure<F>, a: &MixedTensor<F>, b: &MixedTensor<F>) -> bool {
    let u = c.ring();
    a.components.len() == b.components.len() && a.components.iter().zip(&b.components).all(|(x, y)| u.equal(x, y))
}

pub fn mu_suite<F: PrimeField>(n: u32) -> Checks {
    let mut checks = Checks::new("mu");
    let c = match mu_structure::<F>(n) {
        Ok(c) => c,
        Err(e) => {
            checks.fail("setup", "unit group of the multiplicative kernel", format!("error: {e}"));
            return checks;
        }
    };
    c.verify(&mut checks);
    let u = c.ring();
    let q = c.q();

    let bad = (0..q).find(|&s| !matches!(u.invert(&c.x(s), DEFAULT_KMAX), Ok(inv) if u.equal(&inv, &c.inverse.values[s as usize])));
    checks.check("cleaving/inverse-reciprocal", "inverse of the cleaving on grouplike elements", bad.is_none(), || {
        format!("U^{}", bad.unwrap_or_default())
    });

    match generator_list(&c) {
        Ok(gens) => {
            for (name, g) in gens {
                checks.check_result(
                    &format!("generators/{name}/coinvariant"),
                    "listed generators of the coinvariant subalgebra",
                    c.coaction.is_coinvariant(&g).map(|ok| (ok, None)),
                );
                let r = c.unit.hopf.comult(&g).map(|d| same(c.unit.hopf.square().ring(), &d, &c.unit.hopf.square().pure(&[&g, &g])));
                checks.check_result(&format!("generators/{name}/grouplike"), "Laurent torus structure of the quotient", r);
            }
        }
        Err(e) => checks.fail("generators", "listed generators of the coinvariant subalgebra", format!("error: {e}")),
    }

    // Φ⁻¹(Y_U^N) for 0 ≤ N < 2q
    let mut witness = None;
    for big_n in 0..2 * q as i64 {
        let mut m = vec![0i64; q as usize];
        if q > 1 {
            m[1] = big_n;
        }
        let r = monomial(&c, &m).and_then(|x| c.cleft().phi_inverse(&x)).and_then(|got| Ok((got, predicted_expansion(&c, &m)?)));
        match r {
            Ok((got, want)) if agree(&c, &got, &want) => {}
            Ok(_) => witness = Some(format!("N = {big_n}")),
            Err(e) => witness = Some(format!("N = {big_n}: {e}")),
        }
        if witness.is_some() {
            break;
        }
    }
    checks.check("expansion/powers", "cleft expansion of powers of the generator coordinate", witness.is_none(), || witness.unwrap_or_default());

    // every monomial with exponents in [−2, 2]
    let mut witness = None;
    let total = 5usize.pow(q);
    for code in 0..total {
        let mut m = vec![0i64; q as usize];
        let mut k = code;
        for e in m.iter_mut() {
            *e = (k % 5) as i64 - 2;
            k /= 5;
        }
        let r = monomial(&c, &m).and_then(|x| c.cleft().phi_inverse(&x)).and_then(|got| Ok((got, predicted_expansion(&c, &m)?)));
        match r {
            Ok((got, want)) if agree(&c, &got, &want) => {}
            Ok(_) => witness = Some(format!("exponents {m:?}")),
            Err(e) => witness = Some(format!("exponents {m:?}: {e}")),
        }
        if witness.is_some() {
            break;
        }
    }
    checks.check("expansion/bounded-monomials", "bijectivity of the cleft expansion on monomials", witness.is_none(), || witness.unwrap_or_default());
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;
    use crate::report::Verdict;

    #[test]
    fn suite_passes() {
        for c in [mu_suite::<Fp<2>>(1), mu_suite::<Fp<3>>(1), mu_suite::<Fp<2>>(2)] {
            let bad: Vec<_> = c.entries.iter().filter(|e| e.verdict == Verdict::Fail).collect();
            assert!(bad.is_empty(), "{bad:#?}");
        }
    }

    #[test]
    fn expansion_example() {
        let c = mu_structure::<Fp<3>>(1).unwrap();
        let u = c.ring();
        // Φ⁻¹(Y_U^4) = Y_U^3 ⊗ U
        let got = c.cleft().phi_inverse(&u.pow(&c.x(1), 4)).unwrap();
        assert!(u.equal(&got.components[1], &u.pow(&c.x(1), 3)));
        assert!(u.is_zero(&got.components[0]) && u.is_zero(&got.components[2]));
    }
}
