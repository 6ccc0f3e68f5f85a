//! Right comodule algebras `ρ: S → S ⊗ H`, coinvariants, and the
//! Doi-Takeuchi projector of a cleft extension.

use std::sync::Arc;

use crate::algebra::fp::PrimeField;
use crate::algebra::free::{split_components, FreeBasis};
use crate::algebra::hom::RingHom;
use crate::algebra::ring::{Frac, LocalizedRing};
use crate::algebra::tensor::TensorRing;
use crate::error::Result;
use crate::hopf::convolution::ConvolutionMap;
use crate::hopf::unit_group::{RegularRepresentation, UnitGroup};
use crate::hopf::HopfAlgebra;

#[derive(Clone, Debug)]
pub struct Coaction<F> {
    pub source: Arc<LocalizedRing<F>>,
    pub tensor: TensorRing<F>,
    pub rho: RingHom<F>,
}

/// An element of `S ⊗ H` split along the basis of `H`.
#[derive(Clone, Debug)]
pub struct MixedTensor<F> {
    pub components: Vec<Frac<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleCheck {
    pub generator: String,
    pub coassociative: bool,
    pub counital: bool,
}

impl<F: PrimeField> Coaction<F> {
    /// `ρ` given on the own generators of `source`, images in `source ⊗ H`.
    pub fn new(source: Arc<LocalizedRing<F>>, h: &HopfAlgebra<F>, images: impl FnOnce(&TensorRing<F>) -> Result<Vec<(String, Frac<F>)>>) -> Result<Self> {
        let tensor = TensorRing::new(vec![source.clone(), h.carrier().clone()])?;
        let own = images(&tensor)?;
        let rho = RingHom::over_base(source.clone(), tensor.ring().clone(), own)?;
        Ok(Coaction { source, tensor, rho })
    }

    /// `ρ = (id ⊗ i#) ∘ Δ_U` on the unit group.
    pub fn from_unit_group(u: &UnitGroup<F>, h: &HopfAlgebra<F>) -> Result<Self> {
        let source = u.carrier().clone();
        let tensor = TensorRing::new(vec![source.clone(), h.carrier().clone()])?;
        let incl0 = tensor.inclusion(0)?;
        let incl1 = tensor.inclusion(1)?;
        let imm = u.immersion.then(&incl1)?;
        let id_i = u.hopf.square().hom_from_factors(tensor.ring().clone(), &[&incl0, &imm])?;
        let rho = u.hopf.comultiplication().then(&id_i)?.checked()?;
        Ok(Coaction { source, tensor, rho })
    }

    /// `ρ(X_j) = Σ_i X_i ⊗ R_ij(e)` straight from the structure constants.
    pub fn direct_from_unit_group(u: &UnitGroup<F>, h: &HopfAlgebra<F>) -> Result<Self> {
        Self::new(u.carrier().clone(), h, |t| {
            let n = u.rep.rank();
            let r = t.ring();
            (0..n)
                .map(|j| {
                    let mut acc = r.zero();
                    for i in 0..n {
                        for k in 0..n {
                            let c = &u.rep.c[i][j][k];
                            if c.num.is_zero() {
                                continue;
                            }
                            let e = t.pure(&[&u.coord(i), &u.rep.basis.element(k)]);
                            acc = r.add(&acc, &r.mul(&r.from_base(c), &e));
                        }
                    }
                    Ok((u.coords[j].clone(), acc))
                })
                .collect()
        })
    }

    pub fn apply(&self, x: &Frac<F>) -> Result<Frac<F>> {
        self.rho.apply(x)
    }

    pub fn agrees_with(&self, other: &Coaction<F>) -> bool {
        self.rho.agrees_with(&other.rho)
    }

    /// `x ⊗ 1`.
    pub fn trivial(&self, x: &Frac<F>) -> Frac<F> {
        self.tensor.embed(0, x)
    }

    pub fn is_coinvariant(&self, b: &Frac<F>) -> Result<bool> {
        let r = self.apply(b)?;
        Ok(self.tensor.ring().equal(&r, &self.trivial(b)))
    }

    /// Coassociativity and counit law on every generator of the source.
    pub fn check_axioms(&self, h: &HopfAlgebra<F>) -> Result<Vec<ComoduleCheck>> {
        let s = &self.source;
        let hh = h.carrier();
        let t3 = TensorRing::new(vec![s.clone(), hh.clone(), hh.clone()])?;
        let to01 = self.tensor.reindex_into(&t3, &[0, 1])?;
        let incl0 = t3.inclusion(0)?;
        let incl2 = t3.inclusion(2)?;
        let rho_left = self.rho.then(&to01)?;
        let rho_id = self.tensor.hom_from_factors(t3.ring().clone(), &[&rho_left, &incl2])?;
        let h12 = h.square().reindex_into(&t3, &[1, 2])?;
        let delta_right = h.comultiplication().then(&h12)?;
        let id_delta = self.tensor.hom_from_factors(t3.ring().clone(), &[&incl0, &delta_right])?;
        let id_s = RingHom::identity(s.clone());
        let eps_s = h.counit().then(&RingHom::over_base(h.base().clone(), s.clone(), vec![])?)?;
        let id_eps = self.tensor.hom_from_factors(s.clone(), &[&id_s, &eps_s])?;

        let mut out = Vec::new();
        for g in s.own_vars() {
            let x = s.var(g);
            let r = self.apply(&x)?;
            let coassociative = t3.ring().equal(&rho_id.apply(&r)?, &id_delta.apply(&r)?);
            let counital = s.equal(&id_eps.apply(&r)?, &x);
            out.push(ComoduleCheck { generator: g.clone(), coassociative, counital });
        }
        Ok(out)
    }

    /// Splits an element of `S ⊗ H` along the basis of `H`.
    pub fn components(&self, basis: &FreeBasis<F>, x: &Frac<F>) -> Result<MixedTensor<F>> {
        let hh = &self.tensor.factors()[1];
        let vars: Vec<usize> = (hh.base_len()..hh.nvars()).map(|v| self.tensor.factor_var_map(1)[v]).collect();
        let parts = split_components(self.tensor.ring(), x, &vars, basis.exponents())?;
        let components = parts.iter().map(|p| self.tensor.project(0, p)).collect::<Result<_>>()?;
        Ok(MixedTensor { components })
    }

    /// `Σ components[k] ⊗ e_k`.
    pub fn assemble(&self, basis: &FreeBasis<F>, m: &MixedTensor<F>) -> Frac<F> {
        let r = self.tensor.ring();
        let terms: Vec<Frac<F>> = m
            .components
            .iter()
            .enumerate()
            .map(|(k, c)| self.tensor.pure(&[c, &basis.element(k)]))
            .collect();
        r.sum(terms.iter())
    }
}

/// The data of a cleft extension `S^{co H} ⊂ S` used by the projector.
#[derive(Clone, Debug)]
pub struct Cleaving<'a, F> {
    pub coaction: &'a Coaction<F>,
    pub rep: &'a RegularRepresentation<F>,
    pub cleaving: &'a ConvolutionMap<F>,
    pub inverse: &'a ConvolutionMap<F>,
}

impl<F: PrimeField> Cleaving<'_, F> {
    /// `P(a) = Σ a₍₀₎ ψ⁻¹(a₍₁₎)`.
    pub fn project(&self, a: &Frac<F>) -> Result<Frac<F>> {
        let s = &self.coaction.source;
        let m = self.coaction.components(&self.rep.basis, &self.coaction.apply(a)?)?;
        let terms: Vec<Frac<F>> = m
            .components
            .iter()
            .zip(&self.inverse.values)
            .filter(|(c, _)| !c.num.is_zero())
            .map(|(c, v)| s.mul(c, v))
            .collect();
        Ok(s.sum(terms.iter()))
    }

    /// `Φ⁻¹(a) = Σ P(a₍₀₎) ⊗ a₍₁₎`, components along the basis of `H`.
    pub fn phi_inverse(&self, a: &Frac<F>) -> Result<MixedTensor<F>> {
        let m = self.coaction.components(&self.rep.basis, &self.coaction.apply(a)?)?;
        let components = m.components.iter().map(|c| self.project(c)).collect::<Result<_>>()?;
        Ok(MixedTensor { components })
    }

    /// `Φ(Σ b_k ⊗ e_k) = Σ b_k ψ(e_k)`.
    pub fn phi(&self, m: &MixedTensor<F>) -> Frac<F> {
        let s = &self.coaction.source;
        let terms: Vec<Frac<F>> = m.components.iter().zip(&self.cleaving.values).map(|(b, v)| s.mul(b, v)).collect();
        s.sum(terms.iter())
    }

    /// `ρ∘ψ = (ψ ⊗ id)∘Δ` on the basis.
    pub fn cleaving_is_colinear(&self, h: &HopfAlgebra<F>) -> Result<bool> {
        let t = &self.coaction.tensor;
        let n = self.rep.rank();
        for j in 0..n {
            let lhs = self.coaction.apply(&self.cleaving.values[j])?;
            let mut rhs = t.ring().zero();
            for i in 0..n {
                for k in 0..n {
                    let c = &self.rep.c[i][j][k];
                    if c.num.is_zero() {
                        continue;
                    }
                    let e = t.pure(&[&self.cleaving.values[i], &self.rep.basis.element(k)]);
                    rhs = t.ring().add(&rhs, &t.ring().mul(&t.ring().from_base(c), &e));
                }
            }
            if !t.ring().equal(&lhs, &rhs) {
                return Ok(false);
            }
        }
        let _ = h;
        Ok(true)
    }
}
