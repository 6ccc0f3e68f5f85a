//! Grothendieck resolutions of `μ_{p^n}` and `Γ^{(λ)}` through their unit
//! group schemes: cleaving maps, coinvariant presentations, and the
//! comparison with the Frobenius sequences.

pub mod diagrams;
pub mod gamma;
pub mod mu;
pub mod ptable;
pub mod zring;

use std::sync::Arc;

use crate::algebra::fp::PrimeField;
use crate::algebra::ring::{Frac, LocalizedRing};
use crate::catalog::{frobenius_order, lambda_base, make_scheme, GroupScheme, LambdaMode, SchemeTag};
use crate::error::{Error, Result};
use crate::hopf::comodule::{Cleaving, Coaction};
use crate::hopf::convolution::ConvolutionMap;
use crate::hopf::unit_group::{build_unit_group, UnitGroup};
use crate::report::Checks;

/// `U(Γ)` as a cleft `Γ`-torsor: the coaction, the cleaving `e_s ↦ X_{e_s}`
/// and its convolution inverse.
#[derive(Clone, Debug)]
pub struct CleftStructure<F> {
    pub scheme: GroupScheme<F>,
    pub unit: UnitGroup<F>,
    pub coaction: Coaction<F>,
    pub cleaving: ConvolutionMap<F>,
    pub inverse: ConvolutionMap<F>,
}

pub fn build_cleft_structure<F: PrimeField>(scheme: GroupScheme<F>) -> Result<CleftStructure<F>> {
    let prefix = match scheme.tag {
        SchemeTag::Mu => "Y",
        SchemeTag::GammaLambda => "X",
        other => return Err(Error::UnsupportedScheme(other.as_str().into())),
    };
    let unit = build_unit_group(&scheme.hopf, prefix)?;
    let coaction = Coaction::from_unit_group(&unit, &scheme.hopf)?;
    let values = (0..unit.rep.rank()).map(|i| unit.coord(i)).collect();
    let cleaving = ConvolutionMap::new(unit.carrier().clone(), values);
    let inverse = cleaving.inverse(&scheme.hopf, &unit.rep)?;
    Ok(CleftStructure { scheme, unit, coaction, cleaving, inverse })
}

impl<F: PrimeField> CleftStructure<F> {
    pub fn ring(&self) -> &Arc<LocalizedRing<F>> {
        self.unit.carrier()
    }

    pub fn q(&self) -> u32 {
        self.scheme.order()
    }

    /// `X_{T^s}` (or `Y_{U^s}`); `s = 0` is `X_1`.
    pub fn x(&self, s: u32) -> Frac<F> {
        self.unit.coord(s as usize)
    }

    pub fn x1(&self) -> Frac<F> {
        self.x(0)
    }

    pub fn lambda(&self) -> Frac<F> {
        self.ring().from_base(&self.scheme.lambda)
    }

    pub fn cleft(&self) -> Cleaving<'_, F> {
        Cleaving { coaction: &self.coaction, rep: &self.unit.rep, cleaving: &self.cleaving, inverse: &self.inverse }
    }

    /// `D_r = Σ_k C(r,k) λ^k X_{T^k}`, the coordinate of `(1+λT)^r`.
    pub fn d(&self, r: u32) -> Frac<F> {
        let u = self.ring();
        let l = self.lambda();
        let terms: Vec<Frac<F>> = (0..=r)
            .map(|k| u.mul(&u.scale(&u.pow(&l, k), F::binomial(r as u64, k as u64)), &self.x(k)))
            .collect();
        u.sum(terms.iter())
    }

    /// Index of the designated denominator equal to `D_r`, if any.
    pub fn d_index(&self, r: u32) -> Option<usize> {
        let d = self.d(r);
        self.ring().denominators().iter().position(|p| *p == d.num)
    }

    /// Structural checks shared by both cleft structures.
    pub fn verify(&self, checks: &mut Checks) {
        let h = &self.scheme.hopf;
        let u = &self.unit;
        checks.check_result(
            "unit-group/axioms",
            "unit group scheme of the group algebra",
            u.hopf.check_axioms().map(|r| {
                let w = r.failures().next().map(|f| format!("{} at {}: {}", f.law.as_str(), f.generator, f.witness.clone().unwrap_or_default()));
                (r.all_pass(), w)
            }),
        );
        checks.check_result(
            "unit-group/regular-representation",
            "regular representation reconstructs the comultiplication",
            u.rep.reconstructs(h).map(|ok| (ok, None)),
        );
        checks.check_result(
            "coaction/two-constructions-agree",
            "coaction through the closed immersion",
            Coaction::direct_from_unit_group(u, h).map(|d| (d.agrees_with(&self.coaction), None)),
        );
        checks.check_result(
            "coaction/comodule-axioms",
            "comodule algebra structure",
            self.coaction.check_axioms(h).map(|v| {
                let bad = v.iter().find(|c| !(c.coassociative && c.counital)).map(|c| c.generator.clone());
                (bad.is_none(), bad)
            }),
        );
        checks.check_result(
            "cleaving/comodule-map",
            "cleaving map is colinear",
            self.cleft().cleaving_is_colinear(h).map(|ok| (ok, None)),
        );
        checks.check_result(
            "cleaving/convolution-inverse",
            "convolution invertibility of the cleaving",
            self.cleaving.is_two_sided_inverse(&self.inverse, h, &u.rep).map(|ok| (ok, None)),
        );
    }
}

/// `Γ^{(λ)}_{p^n}` with its cleft structure over the base of a λ mode.
#[derive(Clone, Debug)]
pub struct GammaSetting<F> {
    pub mode: LambdaMode,
    pub n: u32,
    pub cleft: CleftStructure<F>,
}

impl<F: PrimeField> GammaSetting<F> {
    pub fn new(n: u32, mode: LambdaMode) -> Result<Self> {
        Self::with_inverted_lambda(n, mode, false)
    }

    /// Over `F_p[L, 1/L]` when `invert_lambda` (symbolic mode only).
    pub fn with_inverted_lambda(n: u32, mode: LambdaMode, invert_lambda: bool) -> Result<Self> {
        let (base, l) = lambda_base::<F>(mode, invert_lambda)?;
        let g = make_scheme(SchemeTag::GammaLambda, n, &base, &l)?;
        Ok(GammaSetting { mode, n, cleft: build_cleft_structure(g)? })
    }

    pub fn q(&self) -> u32 {
        frobenius_order::<F>(self.n)
    }

    pub fn base(&self) -> &Arc<LocalizedRing<F>> {
        self.cleft.scheme.base()
    }
}

/// `C(n, k)` in `F`.
pub(crate) fn binom<F: PrimeField>(n: u32, k: u32) -> F {
    F::binomial(n as u64, k as u64)
}

/// `a == b` with the difference as witness.
pub(crate) fn same<F: PrimeField>(ring: &LocalizedRing<F>, a: &Frac<F>, b: &Frac<F>) -> (bool, Option<String>) {
    if ring.equal(a, b) {
        (true, None)
    } else {
        (false, Some(format!("difference {}", ring.display(&ring.sub(a, b)))))
    }
}
