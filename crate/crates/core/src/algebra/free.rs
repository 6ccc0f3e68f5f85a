//! Finite free algebras: rings whose own variables are all truncated by
//! relations, viewed as free modules over the base with a monomial basis.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::fp::PrimeField;
use crate::algebra::poly::{Monomial, Poly};
use crate::algebra::ring::{Frac, LocalizedRing};
use crate::algebra::tensor::TensorRing;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FreeBasis<F> {
    ring: Arc<LocalizedRing<F>>,
    own: Vec<usize>,
    /// exponents of the own variables, one row per basis element
    exps: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

/// Splits `x = Σ_b x_b · m_b` where `m_b` runs over monomials in `vars` with
/// the exponent rows of `basis`. Components stay in the ambient ring.
pub fn split_components<F: PrimeField>(
    ring: &LocalizedRing<F>,
    x: &Frac<F>,
    vars: &[usize],
    basis: &[Vec<u32>],
) -> Result<Vec<Frac<F>>> {
    let index: HashMap<&[u32], usize> = basis.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    let n = ring.nvars();
    let mut nums: Vec<Poly<F>> = vec![Poly::zero(n); basis.len()];
    for (m, c) in x.num.terms() {
        let key: Vec<u32> = vars.iter().map(|&v| m.exponents()[v]).collect();
        let b = *index.get(key.as_slice()).ok_or(Error::NotFiniteFree)?;
        let mut e = m.exponents().to_vec();
        for &v in vars {
            e[v] = 0;
        }
        nums[b] = nums[b].add(&Poly::monomial(n, Monomial::from_exponents(e), *c));
    }
    Ok(nums.into_iter().map(|num| ring.normalize(Frac { num, den: x.den.clone() })).collect())
}

impl<F: PrimeField> FreeBasis<F> {
    pub fn new(ring: Arc<LocalizedRing<F>>) -> Result<Self> {
        if !ring.is_finite_free() {
            return Err(Error::NotFiniteFree);
        }
        let own: Vec<usize> = (ring.base_len()..ring.nvars()).collect();
        let bounds: Vec<u32> = own
            .iter()
            .map(|&v| ring.relations().iter().find(|r| r.var == v).map(|r| r.exponent).unwrap())
            .collect();
        // first own variable varies fastest
        let total: u32 = bounds.iter().product();
        let exps: Vec<Vec<u32>> = (0..total)
            .map(|idx| {
                let mut rest = idx;
                bounds
                    .iter()
                    .map(|&b| {
                        let e = rest % b;
                        rest /= b;
                        e
                    })
                    .collect()
            })
            .collect();
        let index = exps.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Ok(FreeBasis { ring, own, exps, index })
    }

    pub fn ring(&self) -> &Arc<LocalizedRing<F>> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exps
    }

    pub fn position(&self, exps: &[u32]) -> Option<usize> {
        self.index.get(exps).copied()
    }

    /// Identifier-safe label: `1`, `T`, `T2`, `T3`, … (products joined).
    pub fn label(&self, i: usize) -> String {
        let parts: Vec<String> = self
            .own
            .iter()
            .zip(&self.exps[i])
            .filter(|(_, &e)| e > 0)
            .map(|(&v, &e)| {
                let name = &self.ring.vars()[v];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }

    /// Human label `T^2`.
    pub fn display_label(&self, i: usize) -> String {
        let parts: Vec<String> = self
            .own
            .iter()
            .zip(&self.exps[i])
            .filter(|(_, &e)| e > 0)
            .map(|(&v, &e)| {
                let name = &self.ring.vars()[v];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn element(&self, i: usize) -> Frac<F> {
        let mut e = vec![0; self.ring.nvars()];
        for (&v, &x) in self.own.iter().zip(&self.exps[i]) {
            e[v] = x;
        }
        self.ring.poly(Poly::monomial(self.ring.nvars(), Monomial::from_exponents(e), F::one()))
    }

    /// Coordinates as base scalars.
    pub fn coords(&self, x: &Frac<F>) -> Result<Vec<Frac<F>>> {
        let comps = split_components(&self.ring, x, &self.own, &self.exps)?;
        comps
            .iter()
            .map(|c| self.ring.to_base(c).ok_or(Error::NotFiniteFree))
            .collect()
    }

    /// `Σ coords[i] e_i`.
    pub fn combine(&self, coords: &[Frac<F>]) -> Frac<F> {
        let terms: Vec<Frac<F>> = coords
            .iter()
            .enumerate()
            .map(|(i, c)| self.ring.mul(&self.ring.from_base(c), &self.element(i)))
            .collect();
        self.ring.sum(terms.iter())
    }

    /// `c[i][j][k]` with `e_i e_j = Σ_k c[i][j][k] e_k`.
    pub fn structure_constants(&self) -> Result<Vec<Vec<Vec<Frac<F>>>>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.coords(&self.ring.mul(&self.element(i), &self.element(j))))
                    .collect()
            })
            .collect()
    }

    /// Exhaustive check of associativity and unitality through the
    /// structure constants alone.
    pub fn check_associative_unital(&self) -> Result<bool> {
        let c = self.structure_constants()?;
        let base = self.ring.base_ring();
        let n = self.rank();
        let unit = self.position(&vec![0; self.own.len()]).ok_or(Error::NotFiniteFree)?;
        for i in 0..n {
            for k in 0..n {
                let expect = if i == k { base.one() } else { base.zero() };
                if !base.equal(&c[unit][i][k], &expect) || !base.equal(&c[i][unit][k], &expect) {
                    return Ok(false);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for out in 0..n {
                        let mut left = base.zero();
                        let mut right = base.zero();
                        for m in 0..n {
                            left = base.add(&left, &base.mul(&c[i][j][m], &c[m][l][out]));
                            right = base.add(&right, &base.mul(&c[j][l][m], &c[i][m][out]));
                        }
                        if !base.equal(&left, &right) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Coordinates of an element of `H ⊗ H` (a [`TensorRing::square`] of this
    /// ring): `out[i][k]` is the coefficient of `e_i ⊗ e_k`.
    pub fn tensor_coords(&self, t: &TensorRing<F>, x: &Frac<F>) -> Result<Vec<Vec<Frac<F>>>> {
        let v1: Vec<usize> = self.own.iter().map(|&v| t.factor_var_map(0)[v]).collect();
        let v2: Vec<usize> = self.own.iter().map(|&v| t.factor_var_map(1)[v]).collect();
        let ring = t.ring();
        let outer = split_components(ring, x, &v1, &self.exps)?;
        outer
            .iter()
            .map(|part| {
                let inner = split_components(ring, part, &v2, &self.exps)?;
                inner.iter().map(|c| ring.to_base(c).ok_or(Error::NotFiniteFree)).collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;
    use crate::algebra::ring::RingSpec;

    type F2 = Fp<2>;

    #[test]
    fn truncated_basis_and_constants() {
        let base = LocalizedRing::<F2>::base(vec!["L".into()], vec![]).unwrap();
        let a = LocalizedRing::over(
            &base,
            RingSpec { vars: vec!["T".into()], relations: vec![("T".into(), 4, Poly::zero(2))], denominators: vec![] },
        )
        .unwrap();
        let fb = FreeBasis::new(a.clone()).unwrap();
        assert_eq!(fb.rank(), 4);
        assert_eq!(fb.label(2), "T2");
        let c = fb.structure_constants().unwrap();
        let b = a.base_ring();
        assert!(b.is_one(&c[1][2][3]));
        assert!(b.is_zero(&c[2][2][3]));
        assert!(fb.check_associative_unital().unwrap());
        let x = a.parse("1 + L*T^3").unwrap();
        let back = fb.combine(&fb.coords(&x).unwrap());
        assert!(a.equal(&back, &x));
    }

    #[test]
    fn root_extension_basis() {
        let base = LocalizedRing::<F2>::base(vec!["c".into()], vec![]).unwrap();
        let a = LocalizedRing::over(
            &base,
            RingSpec { vars: vec!["X".into()], relations: vec![("X".into(), 2, Poly::var(2, 0))], denominators: vec![] },
        )
        .unwrap();
        let fb = FreeBasis::new(a.clone()).unwrap();
        let c = fb.structure_constants().unwrap();
        assert_eq!(c[1][1][0], a.base_ring().var("c"));
        assert!(fb.check_associative_unital().unwrap());
    }
}
