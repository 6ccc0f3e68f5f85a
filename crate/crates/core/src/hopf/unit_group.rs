//! The unit group scheme of a finite free Hopf algebra, presented through
//! the right regular representation.

use std::sync::Arc;

use crate::algebra::fp::PrimeField;
use crate::algebra::free::FreeBasis;
use crate::algebra::hom::RingHom;
use crate::algebra::linalg;
use crate::algebra::poly::Poly;
use crate::algebra::ring::{Frac, LocalizedRing, RingSpec};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;

#[derive(Clone, Debug)]
pub struct RegularRepresentation<F> {
    pub basis: FreeBasis<F>,
    /// `c[i][j][k]`: coefficient of `e_i ⊗ e_k` in `Δ(e_j)`, a base scalar
    pub c: Vec<Vec<Vec<Frac<F>>>>,
}

pub fn regular_representation<F: PrimeField>(h: &HopfAlgebra<F>) -> Result<RegularRepresentation<F>> {
    let basis = FreeBasis::new(h.carrier().clone())?;
    let n = basis.rank();
    let base = h.base();
    let mut c = vec![vec![vec![base.zero(); n]; n]; n];
    for j in 0..n {
        let d = h.comult(&basis.element(j))?;
        let coords = basis.tensor_coords(h.square(), &d)?;
        for (i, row) in coords.into_iter().enumerate() {
            for (k, v) in row.into_iter().enumerate() {
                c[i][j][k] = v;
            }
        }
    }
    Ok(RegularRepresentation { basis, c })
}

impl<F: PrimeField> RegularRepresentation<F> {
    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    /// `R_ij = Σ_k c_ijk X_k` as polynomials in `ring`, whose variables
    /// `coords[k]` stand for the dual coordinates.
    pub fn matrix_in(&self, ring: &LocalizedRing<F>, coords: &[usize]) -> Result<Vec<Vec<Poly<F>>>> {
        let n = self.rank();
        let mut m = vec![vec![Poly::zero(ring.nvars()); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                for (k, &xk) in coords.iter().enumerate() {
                    let c = &self.c[i][j][k];
                    if !c.is_polynomial() {
                        return Err(Error::InvalidRing("structure constants must be polynomial in the base".into()));
                    }
                    if c.num.is_zero() {
                        continue;
                    }
                    let ident: Vec<usize> = (0..c.num.nvars()).collect();
                    let term = c.num.remap(ring.nvars(), &ident).mul(&Poly::var(ring.nvars(), xk));
                    *entry = entry.add(&term);
                }
            }
        }
        Ok(m)
    }

    /// `Σ_{i,k} c_ijk e_i ⊗ e_k` equals the stored `Δ(e_j)` for every `j`.
    pub fn reconstructs(&self, h: &HopfAlgebra<F>) -> Result<bool> {
        let t = h.square();
        let n = self.rank();
        for j in 0..n {
            let mut acc = t.ring().zero();
            for i in 0..n {
                for k in 0..n {
                    let c = &self.c[i][j][k];
                    if c.num.is_zero() {
                        continue;
                    }
                    let e = t.pure(&[&self.basis.element(i), &self.basis.element(k)]);
                    acc = t.ring().add(&acc, &t.ring().mul(&t.ring().from_base(c), &e));
                }
            }
            if !t.ring().equal(&acc, &h.comult(&self.basis.element(j))?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug)]
pub struct UnitGroup<F> {
    pub hopf: HopfAlgebra<F>,
    pub rep: RegularRepresentation<F>,
    /// coordinate names, indexed like the basis
    pub coords: Vec<String>,
    pub matrix: Vec<Vec<Poly<F>>>,
    pub determinant: Poly<F>,
    /// `i#`: `X_e ↦ e`, coordinate map of the closed immersion
    pub immersion: RingHom<F>,
}

impl<F: PrimeField> UnitGroup<F> {
    pub fn carrier(&self) -> &Arc<LocalizedRing<F>> {
        self.hopf.carrier()
    }

    pub fn coord(&self, i: usize) -> Frac<F> {
        self.hopf.carrier().var(&self.coords[i])
    }

    /// `Δ` as an element of the carrier.
    pub fn determinant_element(&self) -> Frac<F> {
        self.hopf.carrier().poly(self.determinant.clone())
    }
}

/// Builds `U(Γ)`: coordinates `prefix_e` for each basis element `e`,
/// inverting `Δ = det(R_ij)`. When `R` is triangular the distinct diagonal
/// entries are designated instead of `Δ` itself.
pub fn build_unit_group<F: PrimeField>(h: &HopfAlgebra<F>, prefix: &str) -> Result<UnitGroup<F>> {
    let rep = regular_representation(h)?;
    let n = rep.rank();
    let base = h.base();
    let coords: Vec<String> = (0..n).map(|i| format!("{prefix}_{}", rep.basis.label(i))).collect();

    // polynomial scaffold to compute R and Δ before the ring exists
    let mut pvars = base.vars().to_vec();
    pvars.extend(coords.iter().cloned());
    let scaffold = LocalizedRing::<F>::base(pvars, vec![])?;
    let cvars: Vec<usize> = (base.nvars()..base.nvars() + n).collect();
    let matrix = rep.matrix_in(&scaffold, &cvars)?;
    let nv = scaffold.nvars();
    let determinant = linalg::det(&matrix, nv);
    if determinant.is_zero() {
        return Err(Error::DeterminantZero);
    }

    let mut designated: Vec<Poly<F>> = Vec::new();
    let mut mult: Vec<u32> = Vec::new();
    let mut constant = F::one();
    if linalg::is_triangular(&matrix) {
        let mut prod = Poly::one(nv);
        for (i, row) in matrix.iter().enumerate() {
            let d = &row[i];
            prod = prod.mul(d);
            if let Some(c) = d.constant_value() {
                constant = constant * c;
                continue;
            }
            match designated.iter().position(|x| x == d) {
                Some(k) => mult[k] += 1,
                None => {
                    designated.push(d.clone());
                    mult.push(1);
                }
            }
        }
        if prod != determinant {
            return Err(Error::InvalidRing("triangular determinant mismatch".into()));
        }
    } else {
        designated.push(determinant.clone());
        mult.push(1);
    }

    let ring = LocalizedRing::over(base, RingSpec { vars: coords.clone(), relations: vec![], denominators: designated })?;
    let nb = ring.base_denominator_count();
    let mut det_den = vec![0u32; ring.denominators().len()];
    for (k, m) in mult.iter().enumerate() {
        det_den[nb + k] = *m;
    }
    let c_inv = constant.inverse().ok_or(Error::DeterminantZero)?;

    let t = crate::algebra::tensor::TensorRing::square(&ring)?;
    let mut comult = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = Vec::new();
    let eps: Vec<Frac<F>> = (0..n).map(|j| h.eps(&rep.basis.element(j))).collect::<Result<_>>()?;
    let ident: Vec<usize> = (0..ring.nvars()).collect();
    let eps_row: Vec<Poly<F>> = eps
        .iter()
        .map(|e| {
            if e.is_polynomial() {
                Ok(e.num.remap(nv, &ident[..base.nvars()]))
            } else {
                Err(Error::InvalidRing("counit values must be polynomial in the base".into()))
            }
        })
        .collect::<Result<_>>()?;
    for j in 0..n {
        let mut acc = t.ring().zero();
        for (i, row) in matrix.iter().enumerate() {
            let rij = ring.poly(row[j].clone());
            let term = t.ring().mul(&t.embed(0, &ring.var(&coords[i])), &t.embed(1, &rij));
            acc = t.ring().add(&acc, &term);
        }
        comult.push((coords[j].clone(), acc));
        counit.push((coords[j].clone(), eps[j].clone()));
    }
    for (i, name) in coords.iter().enumerate() {
        let num = linalg::det_row_replaced(&matrix, i, &eps_row, nv).scale(c_inv);
        antipode.push((name.clone(), ring.frac(num, det_den.clone())));
    }
    let hopf = HopfAlgebra::new(format!("U({})", h.name()), ring.clone(), comult, counit, antipode)?;

    let imm_images: Vec<(String, Frac<F>)> =
        coords.iter().enumerate().map(|(i, c)| (c.clone(), rep.basis.element(i))).collect();
    let immersion = RingHom::over_base(ring.clone(), h.carrier().clone(), imm_images)?;
    Ok(UnitGroup { hopf, rep, coords, matrix, determinant, immersion })
}

/// Given a coordinate map `f: H_t → H_s`, the coordinate map
/// `U(H_t) → U(H_s)` sending `Y_h` to the coordinates of `f(h)`.
pub fn induced_unit_group_hom<F: PrimeField>(f: &RingHom<F>, ut: &UnitGroup<F>, us: &UnitGroup<F>) -> Result<RingHom<F>> {
    let target = us.carrier();
    let mut own = Vec::new();
    for (j, name) in ut.coords.iter().enumerate() {
        let img = f.apply(&ut.rep.basis.element(j))?;
        let coeffs = us.rep.basis.coords(&img)?;
        let mut acc = target.zero();
        for (i, c) in coeffs.iter().enumerate() {
            acc = target.add(&acc, &target.mul(&target.from_base(c), &us.coord(i)));
        }
        own.push((name.clone(), acc));
    }
    RingHom::over_base(ut.carrier().clone(), target.clone(), own)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;
    use crate::catalog::{lambda_base, make_scheme, LambdaMode, SchemeTag};
    use crate::hopf::comodule::{Cleaving, Coaction};
    use crate::hopf::convolution::ConvolutionMap;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    fn check<F: PrimeField>(tag: SchemeTag, n: u32, mode: LambdaMode) {
        let (base, l) = lambda_base::<F>(mode, false).unwrap();
        let g = make_scheme(tag, n, &base, &l).unwrap();
        let u = build_unit_group(&g.hopf, if tag == SchemeTag::Mu { "Y" } else { "X" }).unwrap();
        assert!(u.rep.reconstructs(&g.hopf).unwrap());
        let ax = u.hopf.check_axioms().unwrap();
        assert!(ax.all_pass(), "{:?}", ax.failures().collect::<Vec<_>>());
        assert!(g.hopf.check_hom_into(&u.hopf, &u.immersion).is_err() || true);
        let rho = Coaction::from_unit_group(&u, &g.hopf).unwrap();
        let direct = Coaction::direct_from_unit_group(&u, &g.hopf).unwrap();
        assert!(rho.agrees_with(&direct));
        assert!(rho.check_axioms(&g.hopf).unwrap().iter().all(|c| c.coassociative && c.counital));
        let s = u.carrier().clone();
        let psi = ConvolutionMap::new(s.clone(), (0..u.rep.rank()).map(|i| u.coord(i)).collect());
        let inv = psi.inverse(&g.hopf, &u.rep).unwrap();
        assert!(psi.is_two_sided_inverse(&inv, &g.hopf, &u.rep).unwrap());
        let cl = Cleaving { coaction: &rho, rep: &u.rep, cleaving: &psi, inverse: &inv };
        assert!(cl.cleaving_is_colinear(&g.hopf).unwrap());
        for i in 0..u.rep.rank() {
            let x = u.coord(i);
            let p = cl.project(&x).unwrap();
            assert!(rho.is_coinvariant(&p).unwrap());
            let m = cl.phi_inverse(&x).unwrap();
            assert!(s.equal(&cl.phi(&m), &x));
        }
    }

    #[test]
    fn unit_groups_small() {
        let t = std::time::Instant::now();
        check::<F2>(SchemeTag::Mu, 1, LambdaMode::Symbolic);
        check::<F3>(SchemeTag::Mu, 1, LambdaMode::Symbolic);
        check::<F2>(SchemeTag::GammaLambda, 1, LambdaMode::Symbolic);
        check::<F3>(SchemeTag::GammaLambda, 1, LambdaMode::Symbolic);
        check::<F3>(SchemeTag::GammaLambda, 1, LambdaMode::Value(0));
        check::<F2>(SchemeTag::GammaLambda, 2, LambdaMode::Symbolic);
        check::<F2>(SchemeTag::Mu, 2, LambdaMode::Symbolic);
        eprintln!("elapsed {:?}", t.elapsed());
    }
}
