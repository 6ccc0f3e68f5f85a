//! Tensor products over a shared base ring.
//!
//! Factors must agree on their base variables and base denominators. The
//! product is again a [`LocalizedRing`]: base variables are shared, and the
//! own variables of factor `i` (1-based) are renamed `name.i`.

use std::sync::Arc;

use crate::algebra::fp::PrimeField;
use crate::algebra::hom::RingHom;
use crate::algebra::poly::Poly;
use crate::algebra::ring::{Frac, LocalizedRing, Relation};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TensorRing<F> {
    ring: Arc<LocalizedRing<F>>,
    factors: Vec<Arc<LocalizedRing<F>>>,
    var_maps: Vec<Vec<usize>>,
    den_maps: Vec<Vec<usize>>,
}

fn same_base<F: PrimeField>(a: &LocalizedRing<F>, b: &LocalizedRing<F>) -> bool {
    if a.base_len() != b.base_len() || a.vars()[..a.base_len()] != b.vars()[..b.base_len()] {
        return false;
    }
    let (ra, rb) = (a.base_ring(), b.base_ring());
    ra.denominators() == rb.denominators()
}

impl<F: PrimeField> TensorRing<F> {
    pub fn new(factors: Vec<Arc<LocalizedRing<F>>>) -> Result<Self> {
        let first = factors.first().ok_or_else(|| Error::IncompatibleRings("empty tensor product".into()))?;
        for f in &factors[1..] {
            if !same_base(first, f) {
                return Err(Error::IncompatibleRings("tensor factors have different base rings".into()));
            }
        }
        let base_len = first.base_len();
        let base = first.base_ring();
        let base_denoms = base.denominators().len();

        let mut vars: Vec<String> = base.vars().to_vec();
        let mut var_maps = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            let mut map: Vec<usize> = (0..base_len).collect();
            for v in f.own_vars() {
                map.push(vars.len());
                vars.push(format!("{v}.{}", i + 1));
            }
            var_maps.push(map);
        }
        let n = vars.len();

        let ident: Vec<usize> = (0..base_len).collect();
        let mut denominators: Vec<Poly<F>> = base.denominators().iter().map(|d| d.remap(n, &ident)).collect();
        let mut relations = Vec::new();
        let mut den_maps = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            let map = &var_maps[i];
            for r in f.relations() {
                relations.push(Relation { var: map[r.var], exponent: r.exponent, rhs: r.rhs.remap(n, map) });
            }
            let mut dmap: Vec<usize> = (0..f.base_denominator_count()).collect();
            for d in &f.denominators()[f.base_denominator_count()..] {
                dmap.push(denominators.len());
                denominators.push(d.remap(n, map));
            }
            den_maps.push(dmap);
        }
        let ring = LocalizedRing::assemble(vars, base_len, base_denoms, relations, denominators, false)?;
        Ok(TensorRing { ring: Arc::new(ring), factors, var_maps, den_maps })
    }

    pub fn square(h: &Arc<LocalizedRing<F>>) -> Result<Self> {
        Self::new(vec![h.clone(), h.clone()])
    }

    pub fn cube(h: &Arc<LocalizedRing<F>>) -> Result<Self> {
        Self::new(vec![h.clone(), h.clone(), h.clone()])
    }

    pub fn ring(&self) -> &Arc<LocalizedRing<F>> {
        &self.ring
    }

    pub fn factors(&self) -> &[Arc<LocalizedRing<F>>] {
        &self.factors
    }

    pub fn factor_var_map(&self, i: usize) -> &[usize] {
        &self.var_maps[i]
    }

    /// `x` placed in factor `i` (0-based), i.e. `1 ⊗ … ⊗ x ⊗ … ⊗ 1`.
    pub fn embed(&self, i: usize, x: &Frac<F>) -> Frac<F> {
        let n = self.ring.nvars();
        let mut den = vec![0; self.ring.denominators().len()];
        for (k, &e) in x.den.iter().enumerate() {
            den[self.den_maps[i][k]] += e;
        }
        Frac { num: x.num.remap(n, &self.var_maps[i]), den }
    }

    /// Inverse of [`TensorRing::embed`]: the element must only involve the
    /// base and factor `i`.
    pub fn project(&self, i: usize, x: &Frac<F>) -> Result<Frac<F>> {
        let f = &self.factors[i];
        let mut back = vec![usize::MAX; self.ring.nvars()];
        for (v, &tv) in self.var_maps[i].iter().enumerate() {
            back[tv] = v;
        }
        let x = self.ring.normalize(x.clone());
        if x.num.support().iter().any(|&v| back[v] == usize::MAX) {
            return Err(Error::IncompatibleRings(format!("element involves factors other than {}", i + 1)));
        }
        let map: Vec<usize> = back.iter().map(|&b| if b == usize::MAX { 0 } else { b }).collect();
        let mut den = vec![0; f.denominators().len()];
        for (k, &e) in x.den.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let j = self.den_maps[i].iter().position(|&t| t == k).ok_or_else(|| {
                Error::IncompatibleRings(format!("denominator outside factor {}", i + 1))
            })?;
            den[j] = e;
        }
        Ok(Frac { num: x.num.remap(f.nvars(), &map), den })
    }

    /// Pure tensor `x_1 ⊗ x_2 ⊗ …`.
    pub fn pure(&self, xs: &[&Frac<F>]) -> Frac<F> {
        let parts: Vec<Frac<F>> = xs.iter().enumerate().map(|(i, x)| self.embed(i, x)).collect();
        self.ring.product(parts.iter())
    }

    pub fn inclusion(&self, i: usize) -> Result<RingHom<F>> {
        let src = &self.factors[i];
        let images = (0..src.nvars()).map(|v| Some(self.embed(i, &src.var_at(v)))).collect();
        RingHom::new(src.clone(), self.ring.clone(), images)
    }

    /// The hom out of the tensor product determined by one hom per factor,
    /// all landing in the same target and agreeing on the base.
    pub fn hom_from_factors(&self, target: Arc<LocalizedRing<F>>, homs: &[&RingHom<F>]) -> Result<RingHom<F>> {
        self.assemble_hom(target, homs, true)
    }

    pub fn hom_from_factors_unchecked(&self, target: Arc<LocalizedRing<F>>, homs: &[&RingHom<F>]) -> RingHom<F> {
        self.assemble_hom(target, homs, false).expect("unchecked assembly does not fail")
    }

    fn assemble_hom(&self, target: Arc<LocalizedRing<F>>, homs: &[&RingHom<F>], checked: bool) -> Result<RingHom<F>> {
        if homs.len() != self.factors.len() {
            return Err(Error::IncompatibleRings("one hom per tensor factor required".into()));
        }
        let mut images: Vec<Option<Frac<F>>> = vec![None; self.ring.nvars()];
        for (i, h) in homs.iter().enumerate() {
            for (v, &tv) in self.var_maps[i].iter().enumerate() {
                if images[tv].is_none() {
                    images[tv] = h.image(v).cloned();
                }
            }
        }
        if checked {
            RingHom::new(self.ring.clone(), target, images)
        } else {
            Ok(RingHom::new_unchecked(self.ring.clone(), target, images))
        }
    }

    /// Sends factor `i` of `self` to factor `map[i]` of `dst` (factors must
    /// be the same rings).
    pub fn reindex_into(&self, dst: &TensorRing<F>, map: &[usize]) -> Result<RingHom<F>> {
        let mut images: Vec<Option<Frac<F>>> = vec![None; self.ring.nvars()];
        for v in 0..self.ring.base_len() {
            images[v] = Some(dst.ring.var_at(v));
        }
        for (i, f) in self.factors.iter().enumerate() {
            let j = map[i];
            if dst.factors[j].vars() != f.vars() {
                return Err(Error::IncompatibleRings("reindexing between different factors".into()));
            }
            for v in f.base_len()..f.nvars() {
                images[self.var_maps[i][v]] = Some(dst.embed(j, &f.var_at(v)));
            }
        }
        RingHom::new(self.ring.clone(), dst.ring.clone(), images)
    }

    /// Multiplication `H ⊗ H ⊗ … → H` for a tensor power of one ring.
    pub fn multiplication(&self) -> Result<RingHom<F>> {
        let h = self.factors[0].clone();
        if self.factors.iter().any(|f| f.vars() != h.vars()) {
            return Err(Error::IncompatibleRings("multiplication needs a tensor power".into()));
        }
        let id = RingHom::identity(h.clone());
        let homs: Vec<&RingHom<F>> = self.factors.iter().map(|_| &id).collect();
        self.hom_from_factors(h, &homs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;
    use crate::algebra::ring::RingSpec;

    type F3 = Fp<3>;

    #[test]
    fn tensor_square_names_and_embeddings() {
        let base = LocalizedRing::<F3>::base(vec!["L".into()], vec![]).unwrap();
        let h = LocalizedRing::over(
            &base,
            RingSpec { vars: vec!["T".into()], relations: vec![("T".into(), 3, Poly::zero(2))], denominators: vec![] },
        )
        .unwrap();
        let t = TensorRing::square(&h).unwrap();
        assert_eq!(t.ring().vars(), &["L".to_string(), "T.1".into(), "T.2".into()]);
        let x = t.pure(&[&h.var("T"), &h.var("T")]);
        let cube = t.ring().pow(&x, 3);
        assert!(t.ring().is_zero(&cube));
        let m = t.multiplication().unwrap();
        let img = m.apply(&t.ring().add(&t.embed(0, &h.var("T")), &t.embed(1, &h.var("L")))).unwrap();
        assert!(h.equal(&img, &h.parse("T + L").unwrap()));
    }
}
