//! Polynomial models of `U(Γ)` and of its coinvariants.
//!
//! `Z = R[Z_1^{±1}, Z_T, Z_{T^2}, …][1/(Z_1+λZ_T), 1/E_s(Z)]` is isomorphic to
//! `O(U(Γ))` via `χ` and `ξ`; `Z'` replaces `1/(Z_1+λZ_T)` by
//! `1/(Z_1^q+λ^qZ_T)` and `ω: Z' → Z` sends `Z_T ↦ Z_T^q`, so `ξ∘ω` lands in
//! the coinvariants.

use std::sync::Arc;

use crate::algebra::descend::descend;
use crate::algebra::fp::PrimeField;
use crate::algebra::hom::RingHom;
use crate::algebra::poly::Poly;
use crate::algebra::ring::{Frac, LocalizedRing, RingSpec, DEFAULT_KMAX};
use crate::error::Result;
use crate::resolution::ptable::{d_prime, PTable};
use crate::resolution::{binom, CleftStructure};

#[derive(Clone, Debug)]
pub struct ZModels<F> {
    pub z: Arc<LocalizedRing<F>>,
    pub z_prime: Arc<LocalizedRing<F>>,
    /// `χ: O(U) → Z`
    pub chi: RingHom<F>,
    /// `ξ: Z → O(U)`
    pub xi: RingHom<F>,
    /// `ω: Z' → Z`
    pub omega: RingHom<F>,
    pub q: u32,
}

/// `Z_e` for the coordinate `X_e`.
fn z_name(coord: &str) -> String {
    match coord.split_once('_') {
        Some((_, rest)) => format!("Z_{rest}"),
        None => format!("Z{coord}"),
    }
}

/// `E_s(Z) = Z₁^s + Σ_{k=2}^{s-1} C(s,k) λ^k Z₁^{s-k} Z_{T^k} + λ^s Z_{T^s}`
/// as a polynomial; `vars` lists `Z_1, Z_T, …` by index in `ring`.
fn e_poly<F: PrimeField>(ring: &LocalizedRing<F>, lambda: &Poly<F>, vars: &[usize], s: u32) -> Poly<F> {
    let n = ring.nvars();
    let z = |i: u32| Poly::var(n, vars[i as usize]);
    let mut acc = z(0).pow(s);
    for k in 2..s {
        acc = acc.add(&lambda.pow(k).mul(&z(0).pow(s - k)).mul(&z(k)).scale(binom(s, k)));
    }
    acc.add(&lambda.pow(s).mul(&z(s)))
}

fn model<F: PrimeField>(c: &CleftStructure<F>, names: &[String], prime: bool) -> Result<Arc<LocalizedRing<F>>> {
    let base = c.scheme.base();
    let q = c.q();
    let shell = LocalizedRing::over(base, RingSpec { vars: names.to_vec(), relations: vec![], denominators: vec![] })?;
    let n = shell.nvars();
    let vars: Vec<usize> = names.iter().map(|v| shell.var_index(v).expect("own variable")).collect();
    let lambda = shell.from_base(&c.scheme.lambda).num;
    let z1 = Poly::var(n, vars[0]);
    let zt = Poly::var(n, vars[1]);
    let mut dens = vec![z1.clone()];
    dens.push(if prime { z1.pow(q).add(&lambda.pow(q).mul(&zt)) } else { z1.add(&lambda.mul(&zt)) });
    for s in 2..q {
        dens.push(e_poly(&shell, &lambda, &vars, s));
    }
    // at λ = 0 these collapse to powers of Z₁, which is already inverted
    dens.retain(|d| d.len() > 1 || *d == z1);
    LocalizedRing::over_deduped(base, RingSpec { vars: names.to_vec(), relations: vec![], denominators: dens })
}

impl<F: PrimeField> ZModels<F> {
    pub fn build(c: &CleftStructure<F>, table: &PTable<F>) -> Result<Self> {
        let q = c.q();
        let u = c.ring();
        let names: Vec<String> = c.unit.coords.iter().map(|s| z_name(s)).collect();
        let z = model(c, &names, false)?;
        let z_prime = model(c, &names, true)?;
        let zv = |i: u32| z.var(&names[i as usize]);
        let lambda = z.from_base(&c.scheme.lambda);

        // χ is assembled one coordinate at a time: X_{T^s} is recovered from
        // Q_s, which only involves earlier coordinates.
        let mut images: Vec<Option<Frac<F>>> = vec![None; u.nvars()];
        for v in 0..u.base_len() {
            images[v] = Some(z.var_at(z.var_index(&u.vars()[v]).expect("shared base")));
        }
        let slot = |i: u32| u.var_index(&c.unit.coords[i as usize]).expect("coordinate");
        images[slot(0)] = Some(zv(0));
        if q > 1 {
            images[slot(1)] = Some(zv(1));
        }
        for s in 2..q {
            let partial = RingHom::new_unchecked(u.clone(), z.clone(), images.clone());
            let qs = partial.apply(&u.normalize(table.q_elem(c, s)))?;
            let dp = partial.apply(&d_prime(c, s))?;
            let zs = zv(s);
            let e = {
                let vars: Vec<usize> = names.iter().map(|v| z.var_index(v).expect("own")).collect();
                z.poly(e_poly(&z, &lambda.num, &vars, s))
            };
            let top = z.sub(&qs, &z.mul(&dp, &zs));
            images[slot(s)] = Some(z.mul(&top, &z.invert(&e, DEFAULT_KMAX)?));
        }
        let chi = RingHom::new(u.clone(), z.clone(), images)?;

        let mut own = vec![(names[0].clone(), c.x1())];
        if q > 1 {
            own.push((names[1].clone(), c.x(1)));
        }
        for s in 2..q {
            own.push((names[s as usize].clone(), table.p(s).clone()));
        }
        let xi = RingHom::over_base(z.clone(), u.clone(), own)?;

        let mut own = Vec::new();
        for (i, name) in names.iter().enumerate() {
            let img = if i == 1 { z.pow(&z.var(name), q) } else { z.var(name) };
            own.push((name.clone(), img));
        }
        let omega = RingHom::over_base(z_prime.clone(), z.clone(), own)?;
        Ok(ZModels { z, z_prime, chi, xi, omega, q })
    }

    pub fn names(&self) -> Vec<String> {
        self.z.own_vars().to_vec()
    }

    /// `Z_T`.
    pub fn zt_name(&self) -> String {
        self.z.own_vars()[1].clone()
    }

    /// `ξ∘ω: Z' → O(U)`.
    pub fn xi_omega(&self) -> Result<RingHom<F>> {
        self.omega.then(&self.xi)
    }

    /// Pulls `z ∈ Z` back through `ω`, failing unless `z ∈ ω(Z')`.
    pub fn omega_preimage(&self, x: &Frac<F>) -> Result<Frac<F>> {
        let v = self.zt_name();
        descend(&self.z, x, &v, self.q, &self.z_prime, &v)
    }

    /// Certificate that `b ∈ O(U)` lies in `ξω(Z')`: the preimage and the
    /// confirmation that it maps back to `b`.
    pub fn coinvariant_preimage(&self, u: &LocalizedRing<F>, b: &Frac<F>) -> Result<Option<Frac<F>>> {
        let pre = self.omega_preimage(&self.chi.apply(b)?)?;
        let back = self.xi_omega()?.apply(&pre)?;
        Ok(u.equal(&back, b).then_some(pre))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;
    use crate::catalog::LambdaMode;
    use crate::resolution::{ptable, GammaSetting};

    fn round_trip<F: PrimeField>(n: u32, mode: LambdaMode) {
        let g = GammaSetting::<F>::new(n, mode).unwrap();
        let t = ptable::table(&g).unwrap();
        let m = ZModels::build(&g.cleft, &t).unwrap();
        let u = g.cleft.ring();
        let id_u = RingHom::identity(u.clone());
        let id_z = RingHom::identity(m.z.clone());
        assert!(m.chi.then(&m.xi).unwrap().agrees_with(&id_u), "ξχ p={} n={n} {mode}", F::CHARACTERISTIC);
        assert!(m.xi.then(&m.chi).unwrap().agrees_with(&id_z), "χξ p={} n={n} {mode}", F::CHARACTERISTIC);
        for name in m.z_prime.own_vars() {
            let x = m.z_prime.var(name);
            let back = m.omega_preimage(&m.omega.apply(&x).unwrap()).unwrap();
            assert!(m.z_prime.equal(&back, &x));
        }
        for s in t.range() {
            assert!(m.coinvariant_preimage(u, t.p(s)).unwrap().is_some());
        }
        assert!(m.coinvariant_preimage(u, &g.cleft.x(1)).is_err());
    }

    #[test]
    fn chi_and_xi_are_inverse() {
        round_trip::<Fp<3>>(1, LambdaMode::Symbolic);
        round_trip::<Fp<3>>(1, LambdaMode::Value(0));
        round_trip::<Fp<5>>(1, LambdaMode::Value(2));
        round_trip::<Fp<2>>(2, LambdaMode::Symbolic);
        round_trip::<Fp<2>>(2, LambdaMode::Value(0));
    }
}
