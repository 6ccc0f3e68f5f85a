//! Localized, possibly truncated, polynomial rings over `F_p`.
//!
//! A [`LocalizedRing`] is `F_p[x_1, …, x_m] / (v^d − c, …) [1/D_1, …, 1/D_r]`
//! where every relation rewrites a power of one variable into a polynomial
//! free of all relation variables, and every designated denominator `D_k` is
//! free of relation variables. Such a ring is free over the localized
//! polynomial subring in the non-relation variables, so each `D_k` is a
//! non-zero-divisor and fractions can be compared by cross-multiplication.

use std::fmt;
use std::sync::Arc;

use crate::algebra::fp::PrimeField;
use crate::algebra::poly::{Monomial, Poly};
use crate::error::{Error, Result};

/// Default bound on the designated-denominator power searched by
/// [`LocalizedRing::localized_invert`].
pub const DEFAULT_KMAX: u32 = 8;

/// `var^exponent = rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation<F> {
    pub var: usize,
    pub exponent: u32,
    pub rhs: Poly<F>,
}

/// An element `num / Π D_k^{den[k]}` (the "localized scalar").
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Frac<F> {
    pub num: Poly<F>,
    pub den: Vec<u32>,
}

impl<F: PrimeField> Frac<F> {
    pub fn is_polynomial(&self) -> bool {
        self.den.iter().all(|&e| e == 0)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalizedRing<F> {
    vars: Vec<String>,
    base_len: usize,
    base_denoms: usize,
    relations: Vec<Relation<F>>,
    denominators: Vec<Poly<F>>,
}

/// Builder input for a [`LocalizedRing`]: the ring's own variables,
/// relations and denominators, layered over a base ring.
pub struct RingSpec<F> {
    pub vars: Vec<String>,
    pub relations: Vec<(String, u32, Poly<F>)>,
    pub denominators: Vec<Poly<F>>,
}

impl<F: PrimeField> LocalizedRing<F> {
    /// A base ring: polynomial ring with designated denominators and no
    /// relations. Nonzero constant denominators are dropped.
    pub fn base(vars: Vec<String>, denominators: Vec<Poly<F>>) -> Result<Arc<Self>> {
        let n = vars.len();
        let ring = Self::assemble(vars, n, 0, Vec::new(), denominators, true)?;
        Ok(Arc::new(ring))
    }

    pub fn prime_field() -> Arc<Self> {
        Arc::new(LocalizedRing {
            vars: Vec::new(),
            base_len: 0,
            base_denoms: 0,
            relations: Vec::new(),
            denominators: Vec::new(),
        })
    }

    /// Extends `base` by new variables. Relations and denominators in `spec`
    /// are polynomials in `base.vars() ++ spec.vars`.
    pub fn over(base: &LocalizedRing<F>, spec: RingSpec<F>) -> Result<Arc<Self>> {
        if !base.relations.is_empty() || base.base_len != base.vars.len() {
            return Err(Error::InvalidRing("base ring must be a plain localized polynomial ring".into()));
        }
        let mut vars = base.vars.clone();
        for v in &spec.vars {
            if vars.contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
            vars.push(v.clone());
        }
        let mut relations = Vec::new();
        for (name, exponent, rhs) in spec.relations {
            let var = vars
                .iter()
                .position(|v| *v == name)
                .ok_or_else(|| Error::InvalidRing(format!("unknown relation variable `{name}`")))?;
            if var < base.vars.len() || exponent == 0 {
                return Err(Error::InvalidRing(format!("bad relation on `{name}`")));
            }
            relations.push(Relation { var, exponent, rhs });
        }
        let ident: Vec<usize> = (0..base.vars.len()).collect();
        let mut denoms: Vec<Poly<F>> = base.denominators.iter().map(|d| d.remap(vars.len(), &ident)).collect();
        denoms.extend(spec.denominators);
        let ring = Self::assemble(vars, base.vars.len(), base.denominators.len(), relations, denoms, false)?;
        Ok(Arc::new(ring))
    }

    pub(crate) fn assemble(
        vars: Vec<String>,
        base_len: usize,
        base_denoms: usize,
        relations: Vec<Relation<F>>,
        denominators: Vec<Poly<F>>,
        dedupe: bool,
    ) -> Result<Self> {
        let n = vars.len();
        for r in &relations {
            if r.rhs.nvars() != n {
                return Err(Error::InvalidRing("relation arity mismatch".into()));
            }
            if relations.iter().any(|s| r.rhs.mentions(s.var)) {
                return Err(Error::InvalidRing(format!(
                    "relation for `{}` must not involve relation variables",
                    vars[r.var]
                )));
            }
        }
        let mut kept: Vec<Poly<F>> = Vec::new();
        let mut kept_base = 0;
        for (i, d) in denominators.into_iter().enumerate() {
            if d.nvars() != n {
                return Err(Error::InvalidRing("denominator arity mismatch".into()));
            }
            if d.is_zero() {
                return Err(Error::InvalidRing("designated denominator is zero".into()));
            }
            if relations.iter().any(|r| d.mentions(r.var)) {
                return Err(Error::InvalidRing("designated denominator involves a relation variable".into()));
            }
            if dedupe && (d.is_constant() || kept.contains(&d)) {
                continue;
            }
            if i < base_denoms {
                kept_base += 1;
            }
            kept.push(d);
        }
        Ok(LocalizedRing {
            vars,
            base_len,
            base_denoms: if dedupe { kept_base } else { base_denoms },
            relations,
            denominators: kept,
        })
    }

    /// Same as [`LocalizedRing::over`] but drops constant and duplicated
    /// denominators (used for parameter specializations such as λ = 0).
    pub fn over_deduped(base: &LocalizedRing<F>, spec: RingSpec<F>) -> Result<Arc<Self>> {
        let ring = Self::over(base, spec)?;
        let mut kept: Vec<Poly<F>> = Vec::new();
        for (i, d) in ring.denominators.iter().enumerate() {
            if i >= ring.base_denoms && (d.is_constant() || kept.contains(d)) {
                continue;
            }
            kept.push(d.clone());
        }
        let mut r = (*ring).clone();
        r.denominators = kept;
        Ok(Arc::new(r))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn base_len(&self) -> usize {
        self.base_len
    }

    pub fn base_denominator_count(&self) -> usize {
        self.base_denoms
    }

    pub fn own_vars(&self) -> &[String] {
        &self.vars[self.base_len..]
    }

    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    pub fn denominators(&self) -> &[Poly<F>] {
        &self.denominators
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The base ring these variables sit over.
    pub fn base_ring(&self) -> Arc<Self> {
        let vars = self.vars[..self.base_len].to_vec();
        let idx: Vec<usize> = (0..self.base_len).collect();
        let denominators = self.denominators[..self.base_denoms]
            .iter()
            .map(|d| restrict(d, &idx))
            .collect();
        Arc::new(LocalizedRing {
            vars,
            base_len: self.base_len,
            base_denoms: self.base_denoms,
            relations: Vec::new(),
            denominators,
        })
    }

    pub fn is_relation_var(&self, v: usize) -> bool {
        self.relations.iter().any(|r| r.var == v)
    }

    pub fn is_finite_free(&self) -> bool {
        (self.base_len..self.vars.len()).all(|v| self.is_relation_var(v))
            && self.denominators.len() == self.base_denoms
    }

    // ---- element construction -------------------------------------------

    pub fn zero(&self) -> Frac<F> {
        self.poly(Poly::zero(self.nvars()))
    }

    pub fn one(&self) -> Frac<F> {
        self.poly(Poly::one(self.nvars()))
    }

    pub fn constant(&self, c: F) -> Frac<F> {
        self.poly(Poly::constant(self.nvars(), c))
    }

    pub fn int(&self, c: i64) -> Frac<F> {
        self.constant(F::from_i64(c))
    }

    pub fn var(&self, name: &str) -> Frac<F> {
        let i = self.var_index(name).unwrap_or_else(|| panic!("unknown variable `{name}`"));
        self.poly(Poly::var(self.nvars(), i))
    }

    pub fn var_at(&self, i: usize) -> Frac<F> {
        self.poly(Poly::var(self.nvars(), i))
    }

    pub fn poly(&self, p: Poly<F>) -> Frac<F> {
        Frac { num: self.reduce(&p), den: vec![0; self.denominators.len()] }
    }

    /// `1 / D_k^e`.
    pub fn denominator_power_inverse(&self, k: usize, e: u32) -> Frac<F> {
        let mut den = vec![0; self.denominators.len()];
        den[k] = e;
        Frac { num: Poly::one(self.nvars()), den }
    }

    pub fn frac(&self, num: Poly<F>, den: Vec<u32>) -> Frac<F> {
        assert_eq!(den.len(), self.denominators.len());
        self.normalize(Frac { num: self.reduce(&num), den })
    }

    /// Embeds an element of [`LocalizedRing::base_ring`].
    pub fn from_base(&self, x: &Frac<F>) -> Frac<F> {
        let ident: Vec<usize> = (0..self.base_len).collect();
        let mut den = x.den.clone();
        den.resize(self.denominators.len(), 0);
        Frac { num: x.num.remap(self.nvars(), &ident), den }
    }

    /// The element as a base scalar, if it involves no own variables or
    /// own denominators.
    pub fn to_base(&self, x: &Frac<F>) -> Option<Frac<F>> {
        let x = self.normalize(x.clone());
        if x.den[self.base_denoms..].iter().any(|&e| e > 0) {
            return None;
        }
        if (self.base_len..self.nvars()).any(|v| x.num.mentions(v)) {
            return None;
        }
        let idx: Vec<usize> = (0..self.base_len).collect();
        Some(Frac { num: restrict(&x.num, &idx), den: x.den[..self.base_denoms].to_vec() })
    }

    // ---- arithmetic -------------------------------------------------------

    /// Rewrites relation variables into normal form.
    pub fn reduce(&self, p: &Poly<F>) -> Poly<F> {
        if self.relations.is_empty() {
            return p.clone();
        }
        let needs = p.terms().any(|(m, _)| {
            self.relations.iter().any(|r| m.exponents()[r.var] >= r.exponent)
        });
        if !needs {
            return p.clone();
        }
        let n = self.nvars();
        let mut out = Poly::zero(n);
        for (m, c) in p.terms() {
            let mut e = m.exponents().to_vec();
            let mut factor = Poly::constant(n, *c);
            for r in &self.relations {
                let q = e[r.var] / r.exponent;
                if q > 0 {
                    e[r.var] %= r.exponent;
                    factor = factor.mul(&r.rhs.pow(q));
                }
            }
            out = out.add(&factor.mul_monomial(&Monomial::from_exponents(e), F::one()));
        }
        out
    }

    pub fn denominator_product(&self, den: &[u32]) -> Poly<F> {
        let mut acc = Poly::one(self.nvars());
        for (k, &e) in den.iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&self.denominators[k].pow(e));
            }
        }
        acc
    }

    /// Cancels designated factors that divide the numerator.
    pub fn normalize(&self, mut x: Frac<F>) -> Frac<F> {
        if x.num.is_zero() {
            x.den.iter_mut().for_each(|e| *e = 0);
            return x;
        }
        for k in 0..x.den.len() {
            while x.den[k] > 0 {
                match x.num.exact_divide(&self.denominators[k]) {
                    Ok(q) => {
                        x.num = q;
                        x.den[k] -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        x
    }

    pub(crate) fn lift(&self, x: &Frac<F>, to: &[u32]) -> Poly<F> {
        let extra: Vec<u32> = to.iter().zip(&x.den).map(|(a, b)| a - b).collect();
        if extra.iter().all(|&e| e == 0) {
            x.num.clone()
        } else {
            self.reduce(&x.num.mul(&self.denominator_product(&extra)))
        }
    }

    pub fn add(&self, a: &Frac<F>, b: &Frac<F>) -> Frac<F> {
        if a.num.is_zero() {
            return b.clone();
        }
        if b.num.is_zero() {
            return a.clone();
        }
        let den: Vec<u32> = a.den.iter().zip(&b.den).map(|(x, y)| *x.max(y)).collect();
        let num = self.lift(a, &den).add(&self.lift(b, &den));
        self.normalize(Frac { num, den })
    }

    pub fn neg(&self, a: &Frac<F>) -> Frac<F> {
        Frac { num: a.num.neg(), den: a.den.clone() }
    }

    pub fn sub(&self, a: &Frac<F>, b: &Frac<F>) -> Frac<F> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Frac<F>, b: &Frac<F>) -> Frac<F> {
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        let den: Vec<u32> = a.den.iter().zip(&b.den).map(|(x, y)| x + y).collect();
        let num = self.reduce(&a.num.mul(&b.num));
        if den.iter().all(|&e| e == 0) {
            Frac { num, den }
        } else {
            self.normalize(Frac { num, den })
        }
    }

    pub fn scale(&self, a: &Frac<F>, k: F) -> Frac<F> {
        if k.is_zero() {
            return self.zero();
        }
        Frac { num: a.num.scale(k), den: a.den.clone() }
    }

    pub fn pow(&self, a: &Frac<F>, mut e: u32) -> Frac<F> {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Frac<F>>) -> Frac<F> {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a Frac<F>>) -> Frac<F> {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// Equality by cross-multiplication.
    pub fn equal(&self, a: &Frac<F>, b: &Frac<F>) -> bool {
        let den: Vec<u32> = a.den.iter().zip(&b.den).map(|(x, y)| *x.max(y)).collect();
        self.lift(a, &den) == self.lift(b, &den)
    }

    pub fn is_zero(&self, a: &Frac<F>) -> bool {
        a.num.is_zero()
    }

    pub fn is_one(&self, a: &Frac<F>) -> bool {
        self.equal(a, &self.one())
    }

    // ---- inversion ----------------------------------------------------------

    /// Inverse of an element whose numerator avoids relation variables: the
    /// numerator must divide a product of designated denominators. Factors
    /// equal to a designated denominator are stripped first; the remainder
    /// is tested against `(Π D_k)^j` for `j ≤ kmax`.
    pub fn localized_invert(&self, x: &Frac<F>, kmax: u32) -> Result<Frac<F>> {
        if x.num.is_zero() {
            return Err(Error::ZeroElement);
        }
        if self.relations.iter().any(|r| x.num.mentions(r.var)) {
            return Err(Error::NoInverseFound);
        }
        let mut rem = x.num.clone();
        let mut exps = vec![0u32; self.denominators.len()];
        for (k, d) in self.denominators.iter().enumerate() {
            if d.is_constant() {
                continue;
            }
            while let Ok(q) = rem.exact_divide(d) {
                rem = q;
                exps[k] += 1;
                if rem.is_constant() {
                    break;
                }
            }
        }
        let back = self.denominator_product(&x.den);
        if let Some(c) = rem.constant_value() {
            let c_inv = c.inverse().expect("nonzero remainder");
            return Ok(self.normalize(Frac { num: self.reduce(&back.scale(c_inv)), den: exps }));
        }
        if self.denominators.is_empty() {
            return Err(Error::NoInverseFound);
        }
        let all = self.denominators.iter().fold(Poly::one(self.nvars()), |a, d| a.mul(d));
        let mut power = Poly::one(self.nvars());
        for j in 1..=kmax {
            power = power.mul(&all);
            if let Ok(q) = power.exact_divide(&rem) {
                let den: Vec<u32> = exps.iter().map(|e| e + j).collect();
                return Ok(self.normalize(Frac { num: self.reduce(&q.mul(&back)), den }));
            }
        }
        Err(Error::NoInverseFound)
    }

    /// Inverse of `e = e₀ + ν` where `ν` lies in the ideal of nilpotent
    /// relation variables (`v^d = 0`): `e⁻¹ = e₀⁻¹ Σ_j (−e₀⁻¹ ν)^j`.
    pub fn nilpotent_split_invert(&self, x: &Frac<F>, kmax: u32) -> Result<Frac<F>> {
        let nilpotent: Vec<&Relation<F>> = self.relations.iter().filter(|r| r.rhs.is_zero()).collect();
        if nilpotent.len() != self.relations.len() {
            return Err(Error::NotInvertible("ring has non-nilpotent relations".into()));
        }
        let mut e0 = x.num.clone();
        for r in &nilpotent {
            e0 = e0.drop_var(r.var);
        }
        if e0.is_zero() {
            return Err(Error::NotInvertible("counit component vanishes".into()));
        }
        let e0 = Frac { num: e0, den: x.den.clone() };
        let e0_inv = self
            .localized_invert(&e0, kmax)
            .map_err(|_| Error::NotInvertible("counit component is not a unit".into()))?;
        let nu = self.sub(x, &e0);
        let step = self.neg(&self.mul(&e0_inv, &nu));
        // ν^J = 0 once J exceeds the total truncation order
        let bound: u32 = nilpotent.iter().map(|r| r.exponent - 1).sum::<u32>() + 1;
        let mut series = self.one();
        let mut term = self.one();
        for _ in 0..bound {
            term = self.mul(&term, &step);
            if term.num.is_zero() {
                break;
            }
            series = self.add(&series, &term);
        }
        Ok(self.mul(&e0_inv, &series))
    }

    /// Inverse by the characteristic-p norm: with every relation of the form
    /// `v^{p^k} = c`, `x^Q` avoids relation variables for `Q = max p^k`, so
    /// `x⁻¹ = x^{Q−1} · (x^Q)⁻¹`.
    pub fn frobenius_invert(&self, x: &Frac<F>, kmax: u32) -> Result<Frac<F>> {
        let p = F::CHARACTERISTIC;
        let mut q = 1;
        for r in &self.relations {
            if !is_power_of(r.exponent, p) {
                return Err(Error::NoInverseFound);
            }
            q = q.max(r.exponent);
        }
        let norm_num = self.reduce(&x.num.frobenius(q));
        let norm = Frac { num: norm_num, den: x.den.iter().map(|e| e * q).collect() };
        let norm_inv = self.localized_invert(&norm, kmax)?;
        let rest = self.pow(x, q - 1);
        Ok(self.mul(&rest, &norm_inv))
    }

    /// Decides invertibility by whichever exact route fits the element.
    pub fn invert(&self, x: &Frac<F>, kmax: u32) -> Result<Frac<F>> {
        if x.num.is_zero() {
            return Err(Error::ZeroElement);
        }
        if !self.relations.iter().any(|r| x.num.mentions(r.var)) {
            return self.localized_invert(x, kmax);
        }
        if self.relations.iter().all(|r| r.rhs.is_zero()) {
            if let Ok(v) = self.nilpotent_split_invert(x, kmax) {
                return Ok(v);
            }
        }
        self.frobenius_invert(x, kmax)
    }

    pub fn div(&self, a: &Frac<F>, b: &Frac<F>) -> Result<Frac<F>> {
        Ok(self.mul(a, &self.invert(b, DEFAULT_KMAX)?))
    }

    // ---- text -----------------------------------------------------------------

    pub fn poly_text(&self, p: &Poly<F>) -> String {
        p.to_text(&self.vars)
    }

    /// `num` or `(num) / (D)^e * …` with denominators written out.
    pub fn display(&self, x: &Frac<F>) -> String {
        let x = self.normalize(x.clone());
        let num = self.poly_text(&x.num);
        if x.is_polynomial() {
            return num;
        }
        let dens: Vec<String> = x
            .den
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                let d = self.poly_text(&self.denominators[k]);
                if e == 1 {
                    format!("({d})")
                } else {
                    format!("({d})^{e}")
                }
            })
            .collect();
        format!("({num}) / {}", dens.join("*"))
    }

    /// Compact serialization referencing denominators by index:
    /// `num` or `num / D0^2 D3^1`.
    pub fn to_text(&self, x: &Frac<F>) -> String {
        let x = self.normalize(x.clone());
        let num = self.poly_text(&x.num);
        if x.is_polynomial() {
            return num;
        }
        let dens: Vec<String> = x
            .den
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| format!("D{k}^{e}"))
            .collect();
        format!("{num} / {}", dens.join(" "))
    }

    pub fn parse_poly(&self, text: &str) -> Result<Poly<F>> {
        let p = crate::algebra::parse::parse_poly::<F>(text, &self.vars)?;
        Ok(self.reduce(&p))
    }

    pub fn parse(&self, text: &str) -> Result<Frac<F>> {
        let (num, den) = match text.split_once(" / ") {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let mut exps = vec![0; self.denominators.len()];
        if let Some(d) = den {
            for tok in d.split_whitespace() {
                let body = tok
                    .strip_prefix('D')
                    .ok_or_else(|| Error::Parse(format!("bad denominator token `{tok}`")))?;
                let (k, e) = body
                    .split_once('^')
                    .ok_or_else(|| Error::Parse(format!("bad denominator token `{tok}`")))?;
                let k: usize = k.parse().map_err(|_| Error::Parse(tok.to_string()))?;
                let e: u32 = e.parse().map_err(|_| Error::Parse(tok.to_string()))?;
                if k >= exps.len() {
                    return Err(Error::Parse(format!("denominator index {k} out of range")));
                }
                exps[k] += e;
            }
        }
        Ok(Frac { num: self.parse_poly(num)?, den: exps })
    }

    /// Moves an element of `from` into `self`, matching variables and
    /// designated denominators by name and value.
    pub fn rehome(&self, from: &LocalizedRing<F>, x: &Frac<F>) -> Result<Frac<F>> {
        let map: Vec<usize> = from
            .vars
            .iter()
            .map(|v| {
                self.var_index(v)
                    .ok_or_else(|| Error::IncompatibleRings(format!("variable `{v}` missing in target")))
            })
            .collect::<Result<_>>()?;
        let x = from.normalize(x.clone());
        let num = x.num.remap(self.nvars(), &map);
        let mut den = vec![0; self.denominators.len()];
        let mut extra = Poly::one(self.nvars());
        for (k, &e) in x.den.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let d = from.denominators[k].remap(self.nvars(), &map);
            match self.denominators.iter().position(|t| *t == d) {
                Some(j) => den[j] += e,
                None => {
                    let inv = self
                        .localized_invert(&self.poly(d.clone()), DEFAULT_KMAX)
                        .map_err(|_| Error::ClearingFailed(format!("({}) remains in the denominator", self.poly_text(&d))))?;
                    extra = self.reduce(&extra.mul(&inv.num.pow(e)));
                    for (j, &f) in inv.den.iter().enumerate() {
                        den[j] += f * e;
                    }
                }
            }
        }
        Ok(self.normalize(Frac { num: self.reduce(&num.mul(&extra)), den }))
    }
}

impl<F: PrimeField> fmt::Display for LocalizedRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", F::CHARACTERISTIC, self.vars.join(", "))?;
        for r in &self.relations {
            write!(f, "/({}^{} - ({}))", self.vars[r.var], r.exponent, self.poly_text(&r.rhs))?;
        }
        for d in &self.denominators {
            write!(f, "[1/({})]", self.poly_text(d))?;
        }
        Ok(())
    }
}

fn is_power_of(mut n: u32, p: u32) -> bool {
    while n > 1 {
        if !n.is_multiple_of(p) {
            return false;
        }
        n /= p;
    }
    n == 1
}

/// Restricts a polynomial to a prefix of its variables (which it must only
/// mention).
fn restrict<F: PrimeField>(p: &Poly<F>, keep: &[usize]) -> Poly<F> {
    Poly::from_terms(
        keep.len(),
        p.terms().map(|(m, c)| {
            let e = keep.iter().map(|&i| m.exponents()[i]).collect();
            (Monomial::from_exponents(e), *c)
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn designated_power_inverts() {
        // R[T, 1/(1+λT)] over F_3[λ]
        let base = LocalizedRing::<F3>::base(s(&["L"]), vec![]).unwrap();
        let d = crate::algebra::parse::parse_poly::<F3>("1 + L*T", &s(&["L", "T"])).unwrap();
        let ring = LocalizedRing::over(&base, RingSpec { vars: s(&["T"]), relations: vec![], denominators: vec![d.clone()] }).unwrap();
        let u = ring.poly(d.pow(3));
        let v = ring.localized_invert(&u, DEFAULT_KMAX).unwrap();
        assert_eq!(v, Frac { num: Poly::one(2), den: vec![3] });
        assert!(ring.is_one(&ring.mul(&u, &v)));
    }

    #[test]
    fn final_example_denominator_inverts() {
        let vars = s(&["X", "Y"]);
        let d = crate::algebra::parse::parse_poly::<F2>("X^2 + Y^2 + (X+1)^2*Y", &vars).unwrap();
        let ring = LocalizedRing::<F2>::base(vars, vec![d.clone()]).unwrap();
        let u = ring.poly(d);
        let v = ring.localized_invert(&u, DEFAULT_KMAX).unwrap();
        assert!(ring.is_one(&ring.mul(&u, &v)));
    }

    #[test]
    fn x_plus_one_not_unit_when_x_inverted() {
        let vars = s(&["x"]);
        let ring = LocalizedRing::<F3>::base(vars.clone(), vec![Poly::var(1, 0)]).unwrap();
        let u = ring.parse("x + 1").unwrap();
        for k in [0, 1, 8, 20] {
            assert_eq!(ring.localized_invert(&u, k), Err(Error::NoInverseFound));
        }
        assert_eq!(ring.localized_invert(&ring.zero(), 3), Err(Error::ZeroElement));
    }

    fn truncated(p_vars: &[&str]) -> Arc<LocalizedRing<F3>> {
        let base = LocalizedRing::<F3>::base(s(&["c"]), vec![]).unwrap();
        let n = 1 + p_vars.len();
        LocalizedRing::over(
            &base,
            RingSpec { vars: s(p_vars), relations: vec![(p_vars[0].to_string(), 2, Poly::zero(n))], denominators: vec![] },
        )
        .unwrap()
    }

    #[test]
    fn geometric_series_truncates() {
        let ring = truncated(&["T"]);
        let e = ring.parse("1 + c*T").unwrap();
        let inv = ring.nilpotent_split_invert(&e, DEFAULT_KMAX).unwrap();
        assert!(ring.equal(&inv, &ring.parse("1 + 2*c*T").unwrap()));
        let z = ring.parse("c*T").unwrap();
        assert!(matches!(ring.nilpotent_split_invert(&z, DEFAULT_KMAX), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn char_two_sign() {
        let base = LocalizedRing::<F2>::base(s(&["c"]), vec![]).unwrap();
        let ring = LocalizedRing::over(
            &base,
            RingSpec { vars: s(&["T"]), relations: vec![("T".into(), 2, Poly::zero(2))], denominators: vec![] },
        )
        .unwrap();
        let e = ring.parse("1 + c*T").unwrap();
        let inv = ring.nilpotent_split_invert(&e, DEFAULT_KMAX).unwrap();
        assert!(ring.equal(&inv, &e));
    }

    #[test]
    fn frobenius_route_agrees_with_series() {
        let base = LocalizedRing::<F3>::base(s(&["L"]), vec![]).unwrap();
        let ring = LocalizedRing::over(
            &base,
            RingSpec { vars: s(&["T"]), relations: vec![("T".into(), 9, Poly::zero(2))], denominators: vec![] },
        )
        .unwrap();
        let e = ring.parse("1 + L*T + 2*T^4").unwrap();
        let a = ring.nilpotent_split_invert(&e, DEFAULT_KMAX).unwrap();
        let b = ring.frobenius_invert(&e, DEFAULT_KMAX).unwrap();
        assert!(ring.equal(&a, &b));
        assert!(ring.is_one(&ring.mul(&a, &e)));
    }

    #[test]
    fn unit_in_root_extension() {
        // R[X]/(X^3 - c) with c designated: X is a unit.
        let base = LocalizedRing::<F3>::base(s(&["c"]), vec![Poly::var(1, 0)]).unwrap();
        let c = Poly::var(2, 0);
        let ring = LocalizedRing::over(
            &base,
            RingSpec { vars: s(&["X"]), relations: vec![("X".into(), 3, c)], denominators: vec![] },
        )
        .unwrap();
        let x = ring.var("X");
        let inv = ring.invert(&x, DEFAULT_KMAX).unwrap();
        assert!(ring.is_one(&ring.mul(&x, &inv)));
    }

    #[test]
    fn text_round_trip() {
        let vars = s(&["x", "y"]);
        let ring = LocalizedRing::<F3>::base(vars, vec![Poly::var(2, 0)]).unwrap();
        let a = ring.parse("2*x*y + y^2 / D0^3").unwrap();
        let t = ring.to_text(&a);
        assert!(ring.equal(&ring.parse(&t).unwrap(), &a));
    }
}
