//! Ring homomorphisms given by images of generators.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::fp::PrimeField;
use crate::algebra::poly::Poly;
use crate::algebra::ring::{Frac, LocalizedRing, DEFAULT_KMAX};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct RingHom<F> {
    source: Arc<LocalizedRing<F>>,
    target: Arc<LocalizedRing<F>>,
    images: Vec<Option<Frac<F>>>,
    /// inverse of the image of each designated denominator of the source
    den_inverses: Vec<Option<Frac<F>>>,
}

impl<F: PrimeField> RingHom<F> {
    /// Checked construction: every relation of the source must hold for the
    /// images, and every designated denominator whose variables are all
    /// bound must map to a unit of the target.
    pub fn new(source: Arc<LocalizedRing<F>>, target: Arc<LocalizedRing<F>>, images: Vec<Option<Frac<F>>>) -> Result<Self> {
        Self::new_unchecked(source, target, images).verified()
    }

    fn verified(self) -> Result<Self> {
        let h = self;
        for (k, d) in h.source.denominators().iter().enumerate() {
            if !h.bound(d) {
                continue;
            }
            let unit = match &h.den_inverses[k] {
                Some(inv) => h.target.is_one(&h.target.mul(&h.apply_poly(d)?, inv)),
                None => false,
            };
            if !unit {
                return Err(Error::DenominatorNotUnit { denominator: h.source.poly_text(d) });
            }
        }
        for r in h.source.relations() {
            let Some(img) = &h.images[r.var] else { continue };
            if !h.bound(&r.rhs) {
                continue;
            }
            let lhs = h.target.pow(img, r.exponent);
            let rhs = h.apply_poly(&r.rhs)?;
            if !h.target.equal(&lhs, &rhs) {
                let name = &h.source.vars()[r.var];
                return Err(Error::RelationNotPreserved(format!("{name}^{}", r.exponent)));
            }
        }
        Ok(h)
    }

    /// No well-definedness checks. Denominator inverses are still attempted;
    /// a denominator whose image is not a recognised unit stays unusable.
    pub fn new_unchecked(source: Arc<LocalizedRing<F>>, target: Arc<LocalizedRing<F>>, images: Vec<Option<Frac<F>>>) -> Self {
        assert_eq!(images.len(), source.nvars(), "one image slot per source variable");
        let mut h = RingHom { den_inverses: vec![None; source.denominators().len()], source, target, images };
        for k in 0..h.source.denominators().len() {
            let d = h.source.denominators()[k].clone();
            if !h.bound(&d) {
                continue;
            }
            if let Ok(img) = h.apply_poly(&d) {
                h.den_inverses[k] = h.target.invert(&img, DEFAULT_KMAX).ok();
            }
        }
        h
    }

    /// Base variables go to the equally named target variables; own
    /// variables are assigned by name, the rest stay unbound.
    pub fn over_base(source: Arc<LocalizedRing<F>>, target: Arc<LocalizedRing<F>>, own: Vec<(String, Frac<F>)>) -> Result<Self> {
        let images = Self::base_images(&source, &target, own)?;
        Self::new(source, target, images)
    }

    pub fn over_base_unchecked(source: Arc<LocalizedRing<F>>, target: Arc<LocalizedRing<F>>, own: Vec<(String, Frac<F>)>) -> Result<Self> {
        let images = Self::base_images(&source, &target, own)?;
        Ok(Self::new_unchecked(source, target, images))
    }

    fn base_images(source: &LocalizedRing<F>, target: &LocalizedRing<F>, own: Vec<(String, Frac<F>)>) -> Result<Vec<Option<Frac<F>>>> {
        let mut images: Vec<Option<Frac<F>>> = vec![None; source.nvars()];
        for v in 0..source.base_len() {
            let name = &source.vars()[v];
            let t = target
                .var_index(name)
                .ok_or_else(|| Error::IncompatibleRings(format!("base variable `{name}` missing in target")))?;
            images[v] = Some(target.var_at(t));
        }
        for (name, img) in own {
            let v = source
                .var_index(&name)
                .ok_or_else(|| Error::IncompatibleRings(format!("unknown generator `{name}`")))?;
            images[v] = Some(img);
        }
        Ok(images)
    }

    pub fn identity(ring: Arc<LocalizedRing<F>>) -> Self {
        let images = (0..ring.nvars()).map(|v| Some(ring.var_at(v))).collect();
        let den_inverses = (0..ring.denominators().len()).map(|k| Some(ring.denominator_power_inverse(k, 1))).collect();
        RingHom { source: ring.clone(), target: ring, images, den_inverses }
    }

    pub fn source(&self) -> &Arc<LocalizedRing<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<LocalizedRing<F>> {
        &self.target
    }

    pub fn image(&self, v: usize) -> Option<&Frac<F>> {
        self.images[v].as_ref()
    }

    pub fn image_of(&self, name: &str) -> Option<&Frac<F>> {
        self.source.var_index(name).and_then(|v| self.image(v))
    }

    pub fn images(&self) -> &[Option<Frac<F>>] {
        &self.images
    }

    pub fn denominator_inverse(&self, k: usize) -> Option<&Frac<F>> {
        self.den_inverses[k].as_ref()
    }

    fn bound(&self, p: &Poly<F>) -> bool {
        p.support().iter().all(|&v| self.images[v].is_some())
    }

    fn apply_poly(&self, p: &Poly<F>) -> Result<Frac<F>> {
        let t = &self.target;
        let nd = t.denominators().len();
        let mut cache: HashMap<(usize, u32), (Poly<F>, Vec<u32>)> = HashMap::new();
        let mut parts: Vec<(Poly<F>, Vec<u32>)> = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let mut num = Poly::constant(t.nvars(), *c);
            let mut den = vec![0u32; nd];
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = self.images[v]
                    .as_ref()
                    .ok_or_else(|| Error::UnboundGenerator(self.source.vars()[v].clone()))?;
                let (pn, pd) = cache
                    .entry((v, e))
                    .or_insert_with(|| {
                        let pn = t.reduce(&img.num.pow(e));
                        let pd = img.den.iter().map(|x| x * e).collect();
                        (pn, pd)
                    })
                    .clone();
                num = t.reduce(&num.mul(&pn));
                for (a, b) in den.iter_mut().zip(&pd) {
                    *a += b;
                }
            }
            parts.push((num, den));
        }
        let mut top = vec![0u32; nd];
        for (_, d) in &parts {
            for (a, b) in top.iter_mut().zip(d) {
                *a = (*a).max(*b);
            }
        }
        let mut acc = Poly::zero(t.nvars());
        for (num, den) in parts {
            let lifted = t.lift(&Frac { num, den }, &top);
            acc = acc.add(&lifted);
        }
        Ok(t.normalize(Frac { num: acc, den: top }))
    }

    pub fn apply(&self, x: &Frac<F>) -> Result<Frac<F>> {
        let mut out = self.apply_poly(&x.num)?;
        for (k, &e) in x.den.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let inv = self.den_inverses[k].as_ref().ok_or_else(|| {
                let d = &self.source.denominators()[k];
                if self.bound(d) {
                    Error::DenominatorNotUnit { denominator: self.source.poly_text(d) }
                } else {
                    let v = d.support().into_iter().find(|&v| self.images[v].is_none()).unwrap_or(0);
                    Error::UnboundGenerator(self.source.vars()[v].clone())
                }
            })?;
            out = self.target.mul(&out, &self.target.pow(inv, e));
        }
        Ok(out)
    }

    pub fn apply_var(&self, name: &str) -> Result<Frac<F>> {
        let v = self
            .source
            .var_index(name)
            .ok_or_else(|| Error::UnboundGenerator(name.to_string()))?;
        self.images[v].clone().ok_or_else(|| Error::UnboundGenerator(name.to_string()))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RingHom<F>) -> Result<RingHom<F>> {
        if self.target.vars() != other.source.vars() {
            return Err(Error::IncompatibleRings("composition of mismatched homs".into()));
        }
        let images = self
            .images
            .iter()
            .map(|img| match img {
                Some(x) => other.apply(x).map(Some),
                None => Ok(None),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut h = RingHom::new_unchecked(self.source.clone(), other.target.clone(), images);
        // a unit stays a unit: push the known inverses through `other`
        for k in 0..h.den_inverses.len() {
            if h.den_inverses[k].is_none() {
                if let Some(inv) = &self.den_inverses[k] {
                    h.den_inverses[k] = other.apply(inv).ok();
                }
            }
        }
        Ok(h)
    }

    /// Same images, checked again from scratch.
    pub fn checked(self) -> Result<Self> {
        self.verified()
    }

    /// Agreement on all own generators of the source.
    pub fn agrees_with(&self, other: &RingHom<F>) -> bool {
        (self.source.base_len()..self.source.nvars()).all(|v| match (&self.images[v], &other.images[v]) {
            (Some(a), Some(b)) => self.target.equal(a, b),
            (None, None) => true,
            _ => false,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;
    use crate::algebra::ring::RingSpec;

    type F3 = Fp<3>;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn alpha_on_product() {
        let base = LocalizedRing::<F3>::base(s(&["L"]), vec![]).unwrap();
        let gm = LocalizedRing::over(&base, RingSpec { vars: s(&["U"]), relations: vec![], denominators: vec![Poly::var(2, 1)] }).unwrap();
        let d = gm.parse_poly("1 + L*U").unwrap();
        let b = LocalizedRing::over(&base, RingSpec { vars: s(&["T"]), relations: vec![], denominators: vec![d] }).unwrap();
        let img = b.parse("L*T + 1").unwrap();
        let h = RingHom::over_base(gm.clone(), b.clone(), vec![("U".into(), img.clone())]).unwrap();
        let uu = gm.parse("U*U").unwrap();
        assert!(b.equal(&h.apply(&uu).unwrap(), &b.mul(&img, &img)));
        let inv = gm.denominator_power_inverse(0, 1);
        assert_eq!(h.apply(&inv).unwrap(), b.denominator_power_inverse(0, 1));
    }

    #[test]
    fn relation_must_hold() {
        let base = LocalizedRing::<F3>::base(vec![], vec![]).unwrap();
        let a = LocalizedRing::over(&base, RingSpec { vars: s(&["T"]), relations: vec![("T".into(), 3, Poly::zero(1))], denominators: vec![] }).unwrap();
        let ok = RingHom::over_base(a.clone(), a.clone(), vec![("T".into(), a.parse("2*T").unwrap())]);
        assert!(ok.is_ok());
        let bad = RingHom::over_base(a.clone(), a.clone(), vec![("T".into(), a.parse("1 + T").unwrap())]);
        assert!(matches!(bad, Err(Error::RelationNotPreserved(_))));
    }

    #[test]
    fn unbound_generator_reported() {
        let r = LocalizedRing::<F3>::base(s(&["x", "y"]), vec![]).unwrap();
        let h = RingHom::new(r.clone(), r.clone(), vec![Some(r.var("x")), None]).unwrap();
        assert_eq!(h.apply(&r.parse("x*y").unwrap()), Err(Error::UnboundGenerator("y".into())));
        assert!(r.equal(&h.apply(&r.parse("x^2").unwrap()).unwrap(), &r.parse("x^2").unwrap()));
    }
}
