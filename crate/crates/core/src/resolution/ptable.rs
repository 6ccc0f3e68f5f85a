//! The coinvariants `P_s` and the companion elements `F_s`, `E_s`, `Q_s`.
//!
//! `P_s` is defined by a recursion dividing by `λ^s`; it is computed over
//! `F_p[L, 1/L]` and then moved to `F_p[L]`, which succeeds exactly when every
//! power of `L` clears. Numeric λ values are reached by specialising `L`.

use std::sync::Arc;

use crate::algebra::fp::PrimeField;
use crate::algebra::hom::RingHom;
use crate::algebra::ring::{Frac, LocalizedRing, DEFAULT_KMAX};
use crate::catalog::{LambdaMode, LAMBDA_VAR};
use crate::error::{Error, Result};
use crate::resolution::{binom, CleftStructure, GammaSetting};

/// `P_2, …, P_{q-1}` in the coordinate ring of a unit group.
#[derive(Clone, Debug)]
pub struct PTable<F> {
    pub q: u32,
    entries: Vec<Frac<F>>,
}

impl<F: PrimeField> PTable<F> {
    pub fn new(q: u32, entries: Vec<Frac<F>>) -> Self {
        assert_eq!(entries.len() as u32, q.saturating_sub(2));
        PTable { q, entries }
    }

    /// `P_s` for `2 ≤ s ≤ q-1`.
    pub fn p(&self, s: u32) -> &Frac<F> {
        &self.entries[(s - 2) as usize]
    }

    pub fn range(&self) -> std::ops::Range<u32> {
        2..self.q
    }

    pub fn entries(&self) -> &[Frac<F>] {
        &self.entries
    }

    /// `F_s = X₁^s + Σ_{k=2}^{s-1} C(s,k) λ^k X₁^{s-k} P_k`.
    pub fn f(&self, c: &CleftStructure<F>, s: u32) -> Frac<F> {
        let u = c.ring();
        let l = c.lambda();
        let x1 = c.x1();
        let mut acc = u.pow(&x1, s);
        for k in 2..s {
            let t = u.mul(&u.pow(&l, k), &u.mul(&u.pow(&x1, s - k), self.p(k)));
            acc = u.add(&acc, &u.scale(&t, binom(s, k)));
        }
        acc
    }

    /// `E_s = F_s + λ^s P_s`.
    pub fn e(&self, c: &CleftStructure<F>, s: u32) -> Frac<F> {
        let u = c.ring();
        u.add(&self.f(c, s), &u.mul(&u.pow(&c.lambda(), s), self.p(s)))
    }

    /// `Q_s = P_s D_s + F_s X_{T^s}`.
    pub fn q_elem(&self, c: &CleftStructure<F>, s: u32) -> Frac<F> {
        let u = c.ring();
        u.add(&u.mul(self.p(s), &c.d(s)), &u.mul(&self.f(c, s), &c.x(s)))
    }
}

/// `D'_s = D_s − λ^s X_{T^s}`.
pub fn d_prime<F: PrimeField>(c: &CleftStructure<F>, s: u32) -> Frac<F> {
    let u = c.ring();
    u.sub(&c.d(s), &u.mul(&u.pow(&c.lambda(), s), &c.x(s)))
}

/// The closed-form recursion; λ must be a unit of the base.
pub fn closed_form<F: PrimeField>(c: &CleftStructure<F>) -> Result<PTable<F>> {
    let u = c.ring();
    let q = c.q();
    let l = c.lambda();
    let x1 = c.x1();
    let d1 = c.d(1);
    let mut table = PTable { q, entries: Vec::new() };
    for s in 2..q {
        let lead = u.div(&u.mul(&u.pow(&d1, s), &x1), &c.d(s))?;
        let mut inner = u.sub(&lead, &u.pow(&x1, s));
        for k in 2..s {
            let t = u.mul(&u.pow(&l, k), &u.mul(&u.pow(&x1, s - k), table.p(k)));
            inner = u.sub(&inner, &u.scale(&t, binom(s, k)));
        }
        let ls_inv = u.invert(&u.pow(&l, s), DEFAULT_KMAX)?;
        table.entries.push(u.mul(&inner, &ls_inv));
    }
    Ok(table)
}

/// Computes over `F_p[L, 1/L]` and clears `L` into the setting's ring.
pub fn symbolic<F: PrimeField>(target: &GammaSetting<F>) -> Result<PTable<F>> {
    if target.mode != LambdaMode::Symbolic {
        return Err(Error::ConfigInvalid("symbolic table requested for a numeric λ".into()));
    }
    let wide = GammaSetting::<F>::with_inverted_lambda(target.n, LambdaMode::Symbolic, true)?;
    let t = closed_form(&wide.cleft)?;
    let u = target.cleft.ring();
    let entries = t
        .entries
        .iter()
        .map(|x| {
            u.rehome(wide.cleft.ring(), x)
                .map_err(|_| Error::ClearingFailed(wide.cleft.ring().display(x)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PTable { q: t.q, entries })
}

/// `L ↦ value` between unit groups built over `F_p[L]` and `F_p`.
pub fn specialization<F: PrimeField>(from: &LocalizedRing<F>, to: &Arc<LocalizedRing<F>>, value: u32) -> Result<RingHom<F>> {
    let images = from
        .vars()
        .iter()
        .map(|name| {
            if name == LAMBDA_VAR {
                Ok(Some(to.int(value as i64)))
            } else {
                to.var_index(name)
                    .map(|i| Some(to.var_at(i)))
                    .ok_or_else(|| Error::IncompatibleRings(format!("`{name}` missing after specialisation")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    RingHom::new(Arc::new(from.clone()), to.clone(), images)
}

/// The table for any λ mode; numeric values go through the symbolic table.
pub fn table<F: PrimeField>(setting: &GammaSetting<F>) -> Result<PTable<F>> {
    match setting.mode {
        LambdaMode::Symbolic => symbolic(setting),
        LambdaMode::Value(v) => {
            let sym = GammaSetting::<F>::new(setting.n, LambdaMode::Symbolic)?;
            let t = symbolic(&sym)?;
            let h = specialization(sym.cleft.ring(), setting.cleft.ring(), v)?;
            let entries = t.entries.iter().map(|x| h.apply(x)).collect::<Result<Vec<_>>>()?;
            Ok(PTable { q: t.q, entries })
        }
    }
}

/// Names a generator `X_{T^j}` with `j ≥ s` that `x` still involves, either
/// in its numerator or through a denominator.
pub fn occurrence_witness<F: PrimeField>(c: &CleftStructure<F>, s: u32, x: &Frac<F>) -> Option<String> {
    let u = c.ring();
    let x = u.normalize(x.clone());
    let late: Vec<usize> = (s..c.q())
        .filter_map(|j| u.var_index(&c.unit.coords[j as usize]))
        .collect();
    if let Some(&v) = late.iter().find(|&&v| x.num.mentions(v)) {
        return Some(format!("numerator involves {}", u.vars()[v]));
    }
    for (k, &e) in x.den.iter().enumerate() {
        let d = &u.denominators()[k];
        if e > 0 && late.iter().any(|&v| d.mentions(v)) {
            return Some(format!("denominator {} involves a later generator", u.poly_text(d)));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;

    #[test]
    fn p2_matches_quotient_form() {
        let g = GammaSetting::<Fp<3>>::new(1, LambdaMode::Symbolic).unwrap();
        let t = table(&g).unwrap();
        let c = &g.cleft;
        let u = c.ring();
        let (x1, xt, xt2) = (c.x1(), c.x(1), c.x(2));
        let num = u.mul(&x1, &u.sub(&u.mul(&xt, &xt), &u.mul(&x1, &xt2)));
        let expected = u.div(&num, &c.d(2)).unwrap();
        assert!(u.equal(t.p(2), &expected), "{}", u.display(t.p(2)));
    }

    #[test]
    fn specialised_tables_agree_with_direct_recursion() {
        for v in [1u32, 2] {
            let g = GammaSetting::<Fp<5>>::new(1, LambdaMode::Value(v)).unwrap();
            let t = table(&g).unwrap();
            let d = closed_form(&g.cleft).unwrap();
            let u = g.cleft.ring();
            for s in t.range() {
                assert!(u.equal(t.p(s), d.p(s)), "λ={v} s={s}");
            }
        }
    }
}
