//! Linear maps out of a finite free Hopf algebra under the convolution
//! product.

use std::sync::Arc;

use crate::algebra::fp::PrimeField;
use crate::algebra::ring::{Frac, LocalizedRing, DEFAULT_KMAX};
use crate::error::{Error, Result};
use crate::hopf::unit_group::RegularRepresentation;
use crate::hopf::HopfAlgebra;

#[derive(Clone, Debug)]
pub struct ConvolutionMap<F> {
    pub target: Arc<LocalizedRing<F>>,
    /// value on each basis element, in basis order
    pub values: Vec<Frac<F>>,
}

impl<F: PrimeField> ConvolutionMap<F> {
    pub fn new(target: Arc<LocalizedRing<F>>, values: Vec<Frac<F>>) -> Self {
        ConvolutionMap { target, values }
    }

    /// `η∘ε`.
    pub fn unit(h: &HopfAlgebra<F>, rep: &RegularRepresentation<F>, target: Arc<LocalizedRing<F>>) -> Result<Self> {
        let values = (0..rep.rank())
            .map(|j| Ok(target.from_base(&h.eps(&rep.basis.element(j))?)))
            .collect::<Result<_>>()?;
        Ok(ConvolutionMap { target, values })
    }

    /// Value on an arbitrary element of `H` by linearity.
    pub fn apply(&self, rep: &RegularRepresentation<F>, x: &Frac<F>) -> Result<Frac<F>> {
        let coords = rep.basis.coords(x)?;
        let t = &self.target;
        let mut acc = t.zero();
        for (c, v) in coords.iter().zip(&self.values) {
            if !c.num.is_zero() {
                acc = t.add(&acc, &t.mul(&t.from_base(c), v));
            }
        }
        Ok(acc)
    }

    /// `(u * v)(e_j) = Σ c_ijk u(e_i) v(e_k)`.
    pub fn convolve(&self, other: &ConvolutionMap<F>, rep: &RegularRepresentation<F>) -> ConvolutionMap<F> {
        let t = &self.target;
        let n = rep.rank();
        let values = (0..n)
            .map(|j| {
                let mut acc = t.zero();
                for i in 0..n {
                    for k in 0..n {
                        let c = &rep.c[i][j][k];
                        if c.num.is_zero() {
                            continue;
                        }
                        let term = t.mul(&t.mul(&t.from_base(c), &self.values[i]), &other.values[k]);
                        acc = t.add(&acc, &term);
                    }
                }
                acc
            })
            .collect();
        ConvolutionMap { target: t.clone(), values }
    }

    pub fn equals(&self, other: &ConvolutionMap<F>) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| self.target.equal(a, b))
    }

    /// Solves `u * v = η∘ε` basis element by basis element. Requires the
    /// comultiplication to be filtered: in `Δ(e_j)` only `e_k` with `k ≤ j`
    /// occur on the right. The coefficient of `v(e_j)` must be a unit.
    pub fn inverse(&self, h: &HopfAlgebra<F>, rep: &RegularRepresentation<F>) -> Result<ConvolutionMap<F>> {
        let t = &self.target;
        let n = rep.rank();
        let mut values: Vec<Frac<F>> = Vec::with_capacity(n);
        for j in 0..n {
            let mut lead = t.zero();
            let mut rest = t.zero();
            for i in 0..n {
                for k in 0..n {
                    let c = &rep.c[i][j][k];
                    if c.num.is_zero() {
                        continue;
                    }
                    let cu = t.mul(&t.from_base(c), &self.values[i]);
                    if k == j {
                        lead = t.add(&lead, &cu);
                    } else if k < j {
                        rest = t.add(&rest, &t.mul(&cu, &values[k]));
                    } else {
                        return Err(Error::NotConvolutionInvertible(format!(
                            "comultiplication of basis element {j} is not filtered"
                        )));
                    }
                }
            }
            let lead_inv = t
                .invert(&lead, DEFAULT_KMAX)
                .map_err(|_| Error::NotConvolutionInvertible(t.display(&lead)))?;
            let eps = t.from_base(&h.eps(&rep.basis.element(j))?);
            values.push(t.mul(&t.sub(&eps, &rest), &lead_inv));
        }
        Ok(ConvolutionMap { target: t.clone(), values })
    }

    /// `u * v = v * u = η∘ε` on every basis element.
    pub fn is_two_sided_inverse(&self, v: &ConvolutionMap<F>, h: &HopfAlgebra<F>, rep: &RegularRepresentation<F>) -> Result<bool> {
        let unit = ConvolutionMap::unit(h, rep, self.target.clone())?;
        Ok(self.convolve(v, rep).equals(&unit) && v.convolve(self, rep).equals(&unit))
    }
}
