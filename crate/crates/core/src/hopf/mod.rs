//! Commutative Hopf algebras presented by generators, and their axiom and
//! morphism checks.

pub mod comodule;
pub mod convolution;
pub mod text;
pub mod unit_group;

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::fp::PrimeField;
use crate::algebra::hom::RingHom;
use crate::algebra::ring::{Frac, LocalizedRing};
use crate::algebra::tensor::TensorRing;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct HopfAlgebra<F> {
    name: String,
    carrier: Arc<LocalizedRing<F>>,
    base: Arc<LocalizedRing<F>>,
    h2: TensorRing<F>,
    comult: RingHom<F>,
    counit: RingHom<F>,
    antipode: RingHom<F>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Coassociativity,
    CounitLeft,
    CounitRight,
    AntipodeLeft,
    AntipodeRight,
}

impl Law {
    pub fn as_str(self) -> &'static str {
        match self {
            Law::Coassociativity => "coassociativity",
            Law::CounitLeft => "counit-left",
            Law::CounitRight => "counit-right",
            Law::AntipodeLeft => "antipode-left",
            Law::AntipodeRight => "antipode-right",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: Law,
    pub generator: String,
    pub pass: bool,
    /// `lhs - rhs` when the law fails
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub entries: Vec<LawCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        !self.entries.is_empty() && self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn law_passes(&self, law: Law) -> bool {
        self.entries.iter().filter(|e| e.law == law).all(|e| e.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomCheck {
    pub generator: String,
    pub comultiplication: bool,
    pub counit: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomReport {
    pub entries: Vec<HomCheck>,
}

impl HomReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.comultiplication && e.counit)
    }
}

fn compare<F: PrimeField>(ring: &LocalizedRing<F>, lhs: &Result<Frac<F>>, rhs: &Result<Frac<F>>) -> (bool, Option<String>) {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) => {
            if ring.equal(a, b) {
                (true, None)
            } else {
                (false, Some(ring.display(&ring.sub(a, b))))
            }
        }
        (Err(e), _) | (_, Err(e)) => (false, Some(format!("evaluation failed: {e}"))),
    }
}

impl<F: PrimeField> HopfAlgebra<F> {
    /// Structure maps are given on the own generators of `carrier`; the
    /// comultiplication images live in `TensorRing::square(carrier)`, the
    /// counit images in the base ring.
    pub fn new(
        name: impl Into<String>,
        carrier: Arc<LocalizedRing<F>>,
        comult: Vec<(String, Frac<F>)>,
        counit: Vec<(String, Frac<F>)>,
        antipode: Vec<(String, Frac<F>)>,
    ) -> Result<Self> {
        Self::assemble(name.into(), carrier, comult, counit, antipode, true)
    }

    /// As [`HopfAlgebra::new`] but the antipode assignment is not required to
    /// define a ring map (used to exhibit faulty antipodes).
    pub fn with_unchecked_antipode(
        name: impl Into<String>,
        carrier: Arc<LocalizedRing<F>>,
        comult: Vec<(String, Frac<F>)>,
        counit: Vec<(String, Frac<F>)>,
        antipode: Vec<(String, Frac<F>)>,
    ) -> Result<Self> {
        Self::assemble(name.into(), carrier, comult, counit, antipode, false)
    }

    fn assemble(
        name: String,
        carrier: Arc<LocalizedRing<F>>,
        comult: Vec<(String, Frac<F>)>,
        counit: Vec<(String, Frac<F>)>,
        antipode: Vec<(String, Frac<F>)>,
        checked_antipode: bool,
    ) -> Result<Self> {
        let h2 = TensorRing::square(&carrier)?;
        let base = carrier.base_ring();
        let own = carrier.own_vars().to_vec();
        for table in [&comult, &counit, &antipode] {
            for v in &own {
                if !table.iter().any(|(n, _)| n == v) {
                    return Err(Error::UnboundGenerator(v.clone()));
                }
            }
        }
        let comult = RingHom::over_base(carrier.clone(), h2.ring().clone(), comult)?;
        let counit = RingHom::over_base(carrier.clone(), base.clone(), counit)?;
        let antipode = if checked_antipode {
            RingHom::over_base(carrier.clone(), carrier.clone(), antipode)?
        } else {
            RingHom::over_base_unchecked(carrier.clone(), carrier.clone(), antipode)?
        };
        Ok(HopfAlgebra { name, carrier, base, h2, comult, counit, antipode })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> &Arc<LocalizedRing<F>> {
        &self.carrier
    }

    pub fn base(&self) -> &Arc<LocalizedRing<F>> {
        &self.base
    }

    pub fn square(&self) -> &TensorRing<F> {
        &self.h2
    }

    pub fn comultiplication(&self) -> &RingHom<F> {
        &self.comult
    }

    pub fn counit(&self) -> &RingHom<F> {
        &self.counit
    }

    pub fn antipode(&self) -> &RingHom<F> {
        &self.antipode
    }

    pub fn generators(&self) -> &[String] {
        self.carrier.own_vars()
    }

    pub fn var(&self, name: &str) -> Frac<F> {
        self.carrier.var(name)
    }

    pub fn comult(&self, x: &Frac<F>) -> Result<Frac<F>> {
        self.comult.apply(x)
    }

    pub fn eps(&self, x: &Frac<F>) -> Result<Frac<F>> {
        self.counit.apply(x)
    }

    pub fn s(&self, x: &Frac<F>) -> Result<Frac<F>> {
        self.antipode.apply(x)
    }

    /// Base scalar embedded in the carrier.
    pub fn scalar(&self, x: &Frac<F>) -> Frac<F> {
        self.carrier.from_base(x)
    }

    pub fn base_inclusion(&self) -> Result<RingHom<F>> {
        RingHom::over_base(self.base.clone(), self.carrier.clone(), vec![])
    }

    /// `f ⊗ g : H ⊗ H → target ⊗ target` for coordinate maps into another
    /// Hopf algebra's carrier.
    pub fn tensor_square_map(&self, other: &HopfAlgebra<F>, f: &RingHom<F>) -> Result<RingHom<F>> {
        let i0 = other.h2.inclusion(0)?;
        let i1 = other.h2.inclusion(1)?;
        let f0 = f.then(&i0)?;
        let f1 = f.then(&i1)?;
        self.h2.hom_from_factors(other.h2.ring().clone(), &[&f0, &f1])
    }

    pub fn check_axioms(&self) -> Result<AxiomReport> {
        let h = &self.carrier;
        let h3 = TensorRing::cube(h)?;
        let shift01 = self.h2.reindex_into(&h3, &[0, 1])?;
        let shift12 = self.h2.reindex_into(&h3, &[1, 2])?;
        let incl0 = h3.inclusion(0)?;
        let incl2 = h3.inclusion(2)?;
        let delta_left = self.comult.then(&shift01)?;
        let delta_right = self.comult.then(&shift12)?;
        let d_id = self.h2.hom_from_factors(h3.ring().clone(), &[&delta_left, &incl2])?;
        let id_d = self.h2.hom_from_factors(h3.ring().clone(), &[&incl0, &delta_right])?;

        let id = RingHom::identity(h.clone());
        let eps_h = self.counit.then(&self.base_inclusion()?)?;
        let eps_id = self.h2.hom_from_factors(h.clone(), &[&eps_h, &id])?;
        let id_eps = self.h2.hom_from_factors(h.clone(), &[&id, &eps_h])?;
        let s_id = self.h2.hom_from_factors_unchecked(h.clone(), &[&self.antipode, &id]);
        let id_s = self.h2.hom_from_factors_unchecked(h.clone(), &[&id, &self.antipode]);

        let mut entries = Vec::new();
        for g in self.generators() {
            let x = h.var(g);
            let dx = self.comult.apply(&x)?;
            let (pass, witness) = compare(h3.ring(), &d_id.apply(&dx), &id_d.apply(&dx));
            entries.push(LawCheck { law: Law::Coassociativity, generator: g.clone(), pass, witness });

            let (pass, witness) = compare(h, &eps_id.apply(&dx), &Ok(x.clone()));
            entries.push(LawCheck { law: Law::CounitLeft, generator: g.clone(), pass, witness });
            let (pass, witness) = compare(h, &id_eps.apply(&dx), &Ok(x.clone()));
            entries.push(LawCheck { law: Law::CounitRight, generator: g.clone(), pass, witness });

            let unit = eps_h.apply(&x);
            let (pass, witness) = compare(h, &s_id.apply(&dx), &unit);
            entries.push(LawCheck { law: Law::AntipodeLeft, generator: g.clone(), pass, witness });
            let (pass, witness) = compare(h, &id_s.apply(&dx), &unit);
            entries.push(LawCheck { law: Law::AntipodeRight, generator: g.clone(), pass, witness });
        }
        Ok(AxiomReport { entries })
    }

    /// `f` is a coordinate map `self.carrier → target.carrier` (the scheme
    /// map runs the other way). Checks `Δ∘f = (f⊗f)∘Δ` and `ε∘f = ε`.
    pub fn check_hom_into(&self, target: &HopfAlgebra<F>, f: &RingHom<F>) -> Result<HomReport> {
        let ff = self.tensor_square_map(target, f)?;
        let mut entries = Vec::new();
        for g in self.generators() {
            let x = self.carrier.var(g);
            let fx = f.apply(&x);
            let lhs = fx.as_ref().map_err(Clone::clone).and_then(|y| target.comult.apply(y));
            let rhs = self.comult.apply(&x).and_then(|d| ff.apply(&d));
            let (comultiplication, w1) = compare(target.h2.ring(), &lhs, &rhs);
            let e_lhs = fx.as_ref().map_err(Clone::clone).and_then(|y| target.counit.apply(y));
            let e_rhs = self.counit.apply(&x);
            let (counit, w2) = compare(&target.base, &e_lhs, &e_rhs);
            entries.push(HomCheck { generator: g.clone(), comultiplication, counit, witness: w1.or(w2) });
        }
        Ok(HomReport { entries })
    }
}
