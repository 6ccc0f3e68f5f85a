//! Pulling an element back along `v ↦ v^q` (`q` a power of the
//! characteristic).
//!
//! Succeeds iff the element lies in the image of the substitution: after
//! raising every denominator that involves `v` to a multiple of `q` (so it
//! becomes a Frobenius image), every exponent of `v` must be divisible by `q`.

use crate::algebra::fp::PrimeField;
use crate::algebra::poly::{Monomial, Poly};
use crate::algebra::ring::{Frac, LocalizedRing, DEFAULT_KMAX};
use crate::error::{Error, Result};

/// Returns `y ∈ to` with `y(…, v ↦ v^q) = x`, where `var` of `from`
/// corresponds to `to_var` of `to` and all other variables match by name.
pub fn descend<F: PrimeField>(
    from: &LocalizedRing<F>,
    x: &Frac<F>,
    var: &str,
    q: u32,
    to: &LocalizedRing<F>,
    to_var: &str,
) -> Result<Frac<F>> {
    let v = from
        .var_index(var)
        .ok_or_else(|| Error::IncompatibleRings(format!("unknown variable `{var}`")))?;
    let tv = to
        .var_index(to_var)
        .ok_or_else(|| Error::IncompatibleRings(format!("unknown variable `{to_var}`")))?;
    let x = from.normalize(x.clone());
    let map: Vec<Option<usize>> = from
        .vars()
        .iter()
        .enumerate()
        .map(|(i, name)| if i == v { Some(tv) } else { to.var_index(name) })
        .collect();

    let mut num = x.num.clone();
    let mut pulled: Vec<(Poly<F>, u32)> = Vec::new();
    for (k, &e) in x.den.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let d = &from.denominators()[k];
        if d.mentions(v) {
            let lifted = e.div_ceil(q) * q;
            num = from.reduce(&num.mul(&d.pow(lifted - e)));
            pulled.push((shrink(&d.frobenius(q), v, q)?, lifted / q));
        } else {
            pulled.push((d.clone(), e));
        }
    }
    let num = remap(&shrink(&num, v, q)?, &map, to, from)?;
    let mut den = vec![0u32; to.denominators().len()];
    let mut extra = Poly::one(to.nvars());
    for (d, e) in pulled {
        let d = remap(&d, &map, to, from)?;
        match to.denominators().iter().position(|t| *t == d) {
            Some(j) => den[j] += e,
            None => {
                let inv = to
                    .localized_invert(&to.poly(d.clone()), DEFAULT_KMAX)
                    .map_err(|_| Error::ClearingFailed(format!("({}) is not a unit after descent", to.poly_text(&d))))?;
                extra = to.reduce(&extra.mul(&inv.num.pow(e)));
                for (j, &f) in inv.den.iter().enumerate() {
                    den[j] += f * e;
                }
            }
        }
    }
    Ok(to.normalize(Frac { num: to.reduce(&num.mul(&extra)), den }))
}

/// Divides every exponent of `v` by `q`.
fn shrink<F: PrimeField>(p: &Poly<F>, v: usize, q: u32) -> Result<Poly<F>> {
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let mut e = m.exponents().to_vec();
        if e[v] % q != 0 {
            return Err(Error::ClearingFailed(format!("exponent {} of a descended variable is not a multiple of {q}", e[v])));
        }
        e[v] /= q;
        terms.push((Monomial::from_exponents(e), *c));
    }
    Ok(Poly::from_terms(p.nvars(), terms))
}

fn remap<F: PrimeField>(p: &Poly<F>, map: &[Option<usize>], to: &LocalizedRing<F>, from: &LocalizedRing<F>) -> Result<Poly<F>> {
    let mut full = Vec::with_capacity(map.len());
    for (i, m) in map.iter().enumerate() {
        match m {
            Some(j) => full.push(*j),
            None if p.mentions(i) => {
                return Err(Error::IncompatibleRings(format!("variable `{}` missing in target", from.vars()[i])));
            }
            None => full.push(0),
        }
    }
    Ok(p.remap(to.nvars(), &full))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;
    use crate::algebra::ring::RingSpec;

    type F3 = Fp<3>;

    #[test]
    fn descends_frobenius_images_only() {
        let base = LocalizedRing::<F3>::base(vec!["L".into()], vec![]).unwrap();
        let b = LocalizedRing::over(&base, RingSpec { vars: vec!["T".into()], relations: vec![], denominators: vec![base_poly(&base, "1 + L*T", "T")] }).unwrap();
        let g = LocalizedRing::over(&base, RingSpec { vars: vec!["S".into()], relations: vec![], denominators: vec![base_poly(&base, "1 + L^3*S", "S")] }).unwrap();
        let x = b.parse("T^6 / D0^1").unwrap();
        let x = b.mul(&x, &b.parse("1 + L*T").unwrap());
        let x = b.mul(&x, &b.pow(&b.denominator_power_inverse(0, 1), 3));
        let y = descend(&b, &x, "T", 3, &g, "S").unwrap();
        assert!(g.equal(&y, &g.mul(&g.parse("S^2").unwrap(), &g.denominator_power_inverse(0, 1))));
        assert!(descend(&b, &b.parse("T^2").unwrap(), "T", 3, &g, "S").is_err());
    }

    fn base_poly(base: &LocalizedRing<F3>, text: &str, var: &str) -> Poly<F3> {
        let mut names = base.vars().to_vec();
        names.push(var.into());
        crate::algebra::parse::parse_poly(text, &names).unwrap()
    }
}
