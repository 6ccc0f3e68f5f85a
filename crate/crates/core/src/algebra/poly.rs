//! Sparse multivariate polynomials over a prime field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::fp::PrimeField;
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic with variable 0 most significant).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = vec![0; nvars];
        m[i] = e;
        Monomial(m)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables; stored coefficients are never zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: PrimeField> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, Monomial::var(nvars, i, 1), F::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: F) -> Self {
        debug_assert_eq!(m.0.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, F)> {
        self.terms.into_iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).copied().unwrap_or_else(F::zero)
    }

    pub fn constant_value(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then_some(*c)
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn mentions(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Indices of variables occurring with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.mentions(v)).collect()
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), *c);
        }
        big
    }

    pub fn neg(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -*c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -*c);
        }
        out
    }

    pub fn scale(&self, k: F) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), *c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, k: F) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), *c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), *c1 * *c2);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The `q`-th power for `q` a power of the characteristic, computed
    /// coefficient-free: every exponent is multiplied by `q`.
    pub fn frobenius(&self, q: u32) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial(m.0.iter().map(|e| e * q).collect()), *c))
                .collect(),
        }
    }

    /// Exact quotient `self / g`.
    ///
    /// Multivariate division by a single divisor leaves remainder zero iff
    /// the divisor divides, so the first non-divisible leading term decides.
    pub fn exact_divide(&self, g: &Self) -> Result<Self> {
        let (lm, lc) = match g.leading_term() {
            Some((m, c)) => (m.clone(), *c),
            None => return Err(Error::ZeroDivisor),
        };
        let lc_inv = lc.inverse().expect("nonzero field element");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading_term() {
            let Some(t) = rm.div(&lm) else {
                return Err(Error::NotDivisible);
            };
            let k = *rc * lc_inv;
            rem = rem.sub(&g.mul_monomial(&t, k));
            quot.add_term(t, k);
        }
        Ok(quot)
    }

    pub fn divides(&self, f: &Self) -> bool {
        !self.is_zero() && f.exact_divide(self).is_ok()
    }

    /// Re-index variables: variable `i` of `self` becomes variable `map[i]`
    /// of a polynomial in `nvars` variables.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Self {
        debug_assert_eq!(map.len(), self.nvars);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; nvars];
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    e[map[i]] += x;
                }
            }
            (Monomial(e), *c)
        });
        Self::from_terms(nvars, terms)
    }

    /// Sets variable `var` to zero.
    pub fn drop_var(&self, var: usize) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[var] == 0)
                .map(|(m, c)| (m.clone(), *c))
                .collect(),
        }
    }

    /// Evaluates by substituting polynomials in `nvars_target` variables.
    pub fn substitute(&self, nvars_target: usize, images: &[Poly<F>]) -> Poly<F> {
        let mut cache: BTreeMap<(usize, u32), Poly<F>> = BTreeMap::new();
        let mut out = Poly::zero(nvars_target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(nvars_target, *c);
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = cache
                    .entry((v, e))
                    .or_insert_with(|| images[v].pow(e))
                    .clone();
                t = t.mul(&pw);
            }
            out = out.add(&t);
        }
        out
    }

    /// Canonical text form: descending monomial order, `*` between factors,
    /// `^k` for exponents, e.g. `2*X_1^2*X_T + 1`.
    pub fn to_text(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                s.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if c.value() != 1 || m.is_one() {
                factors.push(c.value().to_string());
            }
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[v].clone()),
                    _ => factors.push(format!("{}^{}", names[v], e)),
                }
            }
            let _ = write!(s, "{}", factors.join("*"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn divide_by_self_is_one() {
        let x = Poly::<F3>::var(2, 0);
        let y = Poly::<F3>::var(2, 1);
        let f = x.mul(&y).add(&Poly::constant(2, F3::new(2)));
        assert_eq!(f.exact_divide(&f).unwrap(), Poly::one(2));
    }

    #[test]
    fn char_two_square() {
        // t^2 + 1 = (t + 1)^2 over F_2
        let t = Poly::<F2>::var(1, 0);
        let one = Poly::<F2>::one(1);
        let f = t.pow(2).add(&one);
        assert_eq!(f.exact_divide(&t.add(&one)).unwrap(), t.add(&one));
    }

    #[test]
    fn not_divisible_over_f3() {
        let x = Poly::<F3>::var(1, 0);
        let one = Poly::<F3>::one(1);
        let f = x.pow(2).add(&one);
        assert!(matches!(f.exact_divide(&x.add(&one)), Err(Error::NotDivisible)));
        assert!(matches!(f.exact_divide(&Poly::zero(1)), Err(Error::ZeroDivisor)));
    }

    #[test]
    fn canonical_text() {
        let x1 = Poly::<F3>::var(2, 0);
        let xt = Poly::<F3>::var(2, 1);
        let f = x1.pow(2).mul(&xt).scale(F3::new(2)).add(&Poly::one(2));
        assert_eq!(f.to_text(&names(&["X_1", "X_T"])), "2*X_1^2*X_T + 1");
    }

    #[test]
    fn frobenius_matches_power() {
        let x = Poly::<F3>::var(2, 0);
        let y = Poly::<F3>::var(2, 1);
        let f = x.add(&y.scale(F3::new(2))).add(&Poly::one(2));
        assert_eq!(f.frobenius(3), f.pow(3));
        assert_eq!(f.frobenius(9), f.pow(9));
    }
}
