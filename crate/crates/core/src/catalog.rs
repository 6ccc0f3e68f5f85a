//! Named group schemes: `G_a`, `G_m`, `μ_{p^n}`, the deformed groups
//! `G^{(λ)}` and their Frobenius kernels `Γ^{(λ)}`, plus the maps between
//! them.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::fp::PrimeField;
use crate::algebra::hom::RingHom;
use crate::algebra::poly::Poly;
use crate::algebra::ring::{Frac, LocalizedRing, RingSpec, DEFAULT_KMAX};
use crate::error::{Error, Result};
use crate::hopf::unit_group::{induced_unit_group_hom, UnitGroup};
use crate::hopf::HopfAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SchemeTag {
    Ga,
    Gm,
    Mu,
    GLambda,
    GammaLambda,
}

impl SchemeTag {
    pub const ALL: [SchemeTag; 5] = [SchemeTag::Ga, SchemeTag::Gm, SchemeTag::Mu, SchemeTag::GLambda, SchemeTag::GammaLambda];

    pub fn as_str(self) -> &'static str {
        match self {
            SchemeTag::Ga => "Ga",
            SchemeTag::Gm => "Gm",
            SchemeTag::Mu => "Mu",
            SchemeTag::GLambda => "GLambda",
            SchemeTag::GammaLambda => "GammaLambda",
        }
    }
}

impl FromStr for SchemeTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SchemeTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::ConfigInvalid(format!("unknown scheme `{s}`")))
    }
}

/// How λ enters: as the base variable `L`, or as a constant of `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LambdaMode {
    Symbolic,
    Value(u32),
}

impl fmt::Display for LambdaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaMode::Symbolic => f.write_str("sym"),
            LambdaMode::Value(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for LambdaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "sym" {
            return Ok(LambdaMode::Symbolic);
        }
        s.parse::<u32>()
            .map(LambdaMode::Value)
            .map_err(|_| Error::ConfigInvalid(format!("lambda must be `sym` or a non-negative integer, got `{s}`")))
    }
}

impl Serialize for LambdaMode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub const LAMBDA_VAR: &str = "L";

/// The base ring for a λ mode: `F_p[L]` (with `1/L` when `invert_lambda`)
/// or `F_p`, together with λ as an element of it.
pub fn lambda_base<F: PrimeField>(mode: LambdaMode, invert_lambda: bool) -> Result<(Arc<LocalizedRing<F>>, Frac<F>)> {
    match mode {
        LambdaMode::Symbolic => {
            let dens = if invert_lambda { vec![Poly::var(1, 0)] } else { vec![] };
            let base = LocalizedRing::base(vec![LAMBDA_VAR.into()], dens)?;
            let l = base.var(LAMBDA_VAR);
            Ok((base, l))
        }
        LambdaMode::Value(v) => {
            let base = LocalizedRing::prime_field();
            let l = base.int(v as i64);
            Ok((base, l))
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroupScheme<F> {
    pub tag: SchemeTag,
    pub n: u32,
    /// λ as a base scalar (zero for the undeformed schemes)
    pub lambda: Frac<F>,
    pub hopf: HopfAlgebra<F>,
}

impl<F: PrimeField> GroupScheme<F> {
    pub fn base(&self) -> &Arc<LocalizedRing<F>> {
        self.hopf.base()
    }

    pub fn carrier(&self) -> &Arc<LocalizedRing<F>> {
        self.hopf.carrier()
    }

    /// The single coordinate generator (`T` or `U`, possibly renamed).
    pub fn generator(&self) -> &str {
        &self.hopf.generators()[0]
    }

    pub fn order(&self) -> u32 {
        F::CHARACTERISTIC.pow(self.n)
    }
}

/// `q = p^n`.
pub fn frobenius_order<F: PrimeField>(n: u32) -> u32 {
    F::CHARACTERISTIC.pow(n)
}

fn default_var(tag: SchemeTag) -> &'static str {
    match tag {
        SchemeTag::Gm | SchemeTag::Mu => "U",
        _ => "T",
    }
}

pub fn make_scheme<F: PrimeField>(tag: SchemeTag, n: u32, base: &Arc<LocalizedRing<F>>, lambda: &Frac<F>) -> Result<GroupScheme<F>> {
    make_scheme_with_var(tag, n, base, lambda, default_var(tag))
}

/// As [`make_scheme`] with a chosen name for the coordinate.
pub fn make_scheme_with_var<F: PrimeField>(
    tag: SchemeTag,
    n: u32,
    base: &Arc<LocalizedRing<F>>,
    lambda: &Frac<F>,
    var: &str,
) -> Result<GroupScheme<F>> {
    let hopf = presentation(tag, n, base, lambda, var, None)?;
    let report = hopf.check_axioms()?;
    if !report.all_pass() {
        return Err(Error::AxiomFailure(hopf.name().to_string()));
    }
    Ok(GroupScheme { tag, n, lambda: lambda.clone(), hopf })
}

/// The antipode variants printed for `μ_{p^n}` and `Γ^{(λ)}` that are not
/// antipodes: `U ↦ −1/U` and `T ↦ −1/(1+λT)`.
pub fn printed_antipode_variant<F: PrimeField>(
    tag: SchemeTag,
    n: u32,
    base: &Arc<LocalizedRing<F>>,
    lambda: &Frac<F>,
) -> Result<HopfAlgebra<F>> {
    let var = default_var(tag);
    let carrier = carrier(tag, n, base, lambda, var)?;
    let x = carrier.var(var);
    let s = match tag {
        SchemeTag::Mu => carrier.neg(&carrier.invert(&x, DEFAULT_KMAX)?),
        SchemeTag::GammaLambda => {
            let d = carrier.add(&carrier.one(), &carrier.mul(&carrier.from_base(lambda), &x));
            carrier.neg(&carrier.invert(&d, DEFAULT_KMAX)?)
        }
        _ => return Err(Error::UnsupportedScheme(tag.as_str().into())),
    };
    presentation(tag, n, base, lambda, var, Some(s))
}

fn name_of<F: PrimeField>(tag: SchemeTag, n: u32, base: &LocalizedRing<F>, lambda: &Frac<F>) -> String {
    let l = base.display(lambda);
    let q = frobenius_order::<F>(n);
    match tag {
        SchemeTag::Ga => "G_a".into(),
        SchemeTag::Gm => "G_m".into(),
        SchemeTag::Mu => format!("mu_{q}"),
        SchemeTag::GLambda => format!("G^({l})"),
        SchemeTag::GammaLambda => format!("Gamma^({l})_{q}"),
    }
}

fn carrier<F: PrimeField>(tag: SchemeTag, n: u32, base: &Arc<LocalizedRing<F>>, lambda: &Frac<F>, var: &str) -> Result<Arc<LocalizedRing<F>>> {
    if !crate::algebra::fp::is_prime(F::CHARACTERISTIC) {
        return Err(Error::InvalidPrime(F::CHARACTERISTIC));
    }
    if n == 0 && matches!(tag, SchemeTag::Mu | SchemeTag::GammaLambda) {
        return Err(Error::ConfigInvalid("n must be at least 1".into()));
    }
    let nv = base.nvars() + 1;
    let x = Poly::var(nv, base.nvars());
    let ident: Vec<usize> = (0..base.nvars()).collect();
    if !lambda.is_polynomial() {
        return Err(Error::ConfigInvalid("λ must be a polynomial of the base".into()));
    }
    let lam = lambda.num.remap(nv, &ident);
    let q = frobenius_order::<F>(n);
    let spec = match tag {
        SchemeTag::Ga => RingSpec { vars: vec![var.into()], relations: vec![], denominators: vec![] },
        SchemeTag::Gm => RingSpec { vars: vec![var.into()], relations: vec![], denominators: vec![x] },
        SchemeTag::Mu => RingSpec { vars: vec![var.into()], relations: vec![(var.into(), q, Poly::one(nv))], denominators: vec![] },
        SchemeTag::GLambda => {
            RingSpec { vars: vec![var.into()], relations: vec![], denominators: vec![Poly::one(nv).add(&lam.mul(&x))] }
        }
        SchemeTag::GammaLambda => {
            RingSpec { vars: vec![var.into()], relations: vec![(var.into(), q, Poly::zero(nv))], denominators: vec![] }
        }
    };
    LocalizedRing::over_deduped(base, spec)
}

fn presentation<F: PrimeField>(
    tag: SchemeTag,
    n: u32,
    base: &Arc<LocalizedRing<F>>,
    lambda: &Frac<F>,
    var: &str,
    antipode_override: Option<Frac<F>>,
) -> Result<HopfAlgebra<F>> {
    let h = carrier(tag, n, base, lambda, var)?;
    let t2 = crate::algebra::tensor::TensorRing::square(&h)?;
    let r2 = t2.ring();
    let x = h.var(var);
    let (x1, x2) = (t2.embed(0, &x), t2.embed(1, &x));
    let lam = h.from_base(lambda);
    let (delta, eps, s) = match tag {
        SchemeTag::Ga => (r2.add(&x1, &x2), base.zero(), h.neg(&x)),
        SchemeTag::Gm | SchemeTag::Mu => (r2.mul(&x1, &x2), base.one(), h.invert(&x, DEFAULT_KMAX)?),
        SchemeTag::GLambda | SchemeTag::GammaLambda => {
            let l2 = r2.from_base(lambda);
            let delta = r2.add(&r2.add(&x1, &x2), &r2.mul(&l2, &r2.mul(&x1, &x2)));
            let d = h.add(&h.one(), &h.mul(&lam, &x));
            let s = h.neg(&h.mul(&x, &h.invert(&d, DEFAULT_KMAX)?));
            (delta, base.zero(), s)
        }
    };
    let name = name_of(tag, n, base, lambda);
    let v = var.to_string();
    match antipode_override {
        None => HopfAlgebra::new(name, h, vec![(v.clone(), delta)], vec![(v.clone(), eps)], vec![(v, s)]),
        Some(s) => HopfAlgebra::with_unchecked_antipode(name, h, vec![(v.clone(), delta)], vec![(v.clone(), eps)], vec![(v, s)]),
    }
}

/// `F^{n#}`: coordinates of the `λ^{p^n}`-twisted target into those of `g`,
/// `T ↦ T^{p^n}` (resp. `U ↦ U^{p^n}`). Returns the twisted scheme with the
/// map.
pub fn frobenius_hom<F: PrimeField>(g: &GroupScheme<F>, n: u32) -> Result<(GroupScheme<F>, RingHom<F>)> {
    frobenius_hom_with_var(g, n, g.generator())
}

pub fn frobenius_hom_with_var<F: PrimeField>(g: &GroupScheme<F>, n: u32, var: &str) -> Result<(GroupScheme<F>, RingHom<F>)> {
    if !matches!(g.tag, SchemeTag::Gm | SchemeTag::GLambda) {
        return Err(Error::UnsupportedScheme(g.tag.as_str().into()));
    }
    let q = frobenius_order::<F>(n);
    let base = g.base();
    let lam_q = base.pow(&g.lambda, q);
    let target = make_scheme_with_var(g.tag, g.n, base, &lam_q, var)?;
    let h = g.carrier();
    let img = h.pow(&h.var(g.generator()), q);
    let f = RingHom::over_base(target.carrier().clone(), h.clone(), vec![(var.into(), img)])?;
    Ok((target, f))
}

/// The exponent-`(p^n − 1)` map used as a negative control; not a hom.
pub fn wrong_frobenius<F: PrimeField>(g: &GroupScheme<F>, twisted: &GroupScheme<F>, n: u32) -> Result<RingHom<F>> {
    let q = frobenius_order::<F>(n);
    let h = g.carrier();
    let img = h.pow(&h.var(g.generator()), q - 1);
    RingHom::over_base_unchecked(twisted.carrier().clone(), h.clone(), vec![(twisted.generator().into(), img)])
}

/// `e#`: the quotient map `O(G) → O(G)/(v^{p^n} − c)` onto the kernel's
/// coordinates.
pub fn closed_immersion<F: PrimeField>(g: &GroupScheme<F>, kernel: &GroupScheme<F>) -> Result<RingHom<F>> {
    let k = kernel.carrier();
    RingHom::over_base(g.carrier().clone(), k.clone(), vec![(g.generator().into(), k.var(kernel.generator()))])
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SequenceCheckReport {
    /// `e#` is a surjective Hopf map onto the kernel's coordinates
    pub injection_ok: bool,
    /// `e# ∘ F^{n#} = η∘ε`
    pub composition_trivial: bool,
    /// `F^{n#}(g) − ε(g)` is exactly the generator of `ker e#`
    pub kernel_ideal_ok: bool,
    pub witnesses: Vec<String>,
}

impl SequenceCheckReport {
    pub fn all_pass(&self) -> bool {
        self.injection_ok && self.composition_trivial && self.kernel_ideal_ok
    }
}

/// Proxy checks for `0 → K → G → G' → 0` with `K` the kernel of `f`.
pub fn check_kernel_sequence<F: PrimeField>(
    kernel: &GroupScheme<F>,
    g: &GroupScheme<F>,
    twisted: &GroupScheme<F>,
    f: &RingHom<F>,
) -> Result<SequenceCheckReport> {
    let mut out = SequenceCheckReport::default();
    let e = closed_immersion(g, kernel)?;
    let k = kernel.carrier();
    let hom = g.hopf.check_hom_into(&kernel.hopf, &e)?;
    let surjective = k
        .own_vars()
        .iter()
        .all(|v| g.carrier().own_vars().iter().any(|w| e.image_of(w).is_some_and(|img| k.equal(img, &k.var(v)))));
    out.injection_ok = hom.all_pass() && surjective;
    if !out.injection_ok {
        out.witnesses.push(format!("closed immersion: hom {} surjective {surjective}", hom.all_pass()));
    }

    // the kernel ideal generator `v^d − c` read off the relation
    let rel = k.relations().first().ok_or(Error::NotFiniteFree)?;
    let gc = g.carrier();
    let gv = gc.var(g.generator());
    let kernel_gen = gc.sub(&gc.pow(&gv, rel.exponent), &gc.from_base(&k.to_base(&k.poly(rel.rhs.clone())).ok_or(Error::NotFiniteFree)?));

    out.composition_trivial = true;
    out.kernel_ideal_ok = k.is_zero(&e.apply(&kernel_gen)?);
    for v in twisted.carrier().own_vars() {
        let x = twisted.carrier().var(v);
        let eps = twisted.hopf.eps(&x)?;
        match f.apply(&x).and_then(|fx| Ok((e.apply(&fx)?, fx))) {
            Ok((efx, fx)) => {
                let diff = k.sub(&efx, &k.from_base(&eps));
                if !k.is_zero(&diff) {
                    out.composition_trivial = false;
                    out.witnesses.push(format!("e#(F#({v})) - eps({v}) = {}", k.display(&diff)));
                }
                let gap = gc.sub(&gc.sub(&fx, &gc.from_base(&eps)), &kernel_gen);
                if !gc.is_zero(&gap) {
                    out.kernel_ideal_ok = false;
                    out.witnesses.push(format!("F#({v}) - eps({v}) - ({}) = {}", gc.display(&kernel_gen), gc.display(&gap)));
                }
            }
            Err(err) => {
                out.composition_trivial = false;
                out.kernel_ideal_ok = false;
                out.witnesses.push(format!("F#({v}): {err}"));
            }
        }
    }
    Ok(out)
}

/// `α#: U ↦ 1 + λT` between the coordinates of `G_m` (or `μ`) and `G^{(λ)}`
/// (or `Γ^{(λ)}`).
pub fn alpha_hom<F: PrimeField>(mult: &GroupScheme<F>, deformed: &GroupScheme<F>) -> Result<RingHom<F>> {
    let d = deformed.carrier();
    let img = d.add(&d.one(), &d.mul(&d.from_base(&deformed.lambda), &d.var(deformed.generator())));
    RingHom::over_base(mult.carrier().clone(), d.clone(), vec![(mult.generator().into(), img)])
}

/// `T ↦ (U − 1)/λ`, defined when λ is a unit of the base.
pub fn alpha_inverse<F: PrimeField>(mult: &GroupScheme<F>, deformed: &GroupScheme<F>) -> Result<RingHom<F>> {
    let base = deformed.base();
    let inv = base
        .invert(&deformed.lambda, DEFAULT_KMAX)
        .map_err(|_| Error::NotInvertible(format!("λ = {}", base.display(&deformed.lambda))))?;
    let m = mult.carrier();
    let u = m.var(mult.generator());
    let img = m.mul(&m.sub(&u, &m.one()), &m.from_base(&inv));
    RingHom::over_base(deformed.carrier().clone(), m.clone(), vec![(deformed.generator().into(), img)])
}

/// `U(α̃)` on coordinates: `Y_h ↦` the coordinates of `α̃#(h)`.
pub fn unit_alpha<F: PrimeField>(alpha_tilde: &RingHom<F>, u_mu: &UnitGroup<F>, u_gamma: &UnitGroup<F>) -> Result<RingHom<F>> {
    induced_unit_group_hom(alpha_tilde, u_mu, u_gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fp::Fp;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    #[test]
    fn all_tags_pass_axioms_symbolic() {
        let (base, l) = lambda_base::<F3>(LambdaMode::Symbolic, false).unwrap();
        for tag in SchemeTag::ALL {
            let g = make_scheme(tag, 1, &base, &l).unwrap();
            assert!(g.hopf.check_axioms().unwrap().all_pass(), "{tag:?}");
        }
    }

    #[test]
    fn lambda_zero_is_primitive() {
        let (base, l) = lambda_base::<F2>(LambdaMode::Value(0), false).unwrap();
        let g = make_scheme(SchemeTag::GammaLambda, 2, &base, &l).unwrap();
        let t = g.hopf.square();
        let x = g.hopf.var("T");
        let want = t.ring().add(&t.embed(0, &x), &t.embed(1, &x));
        assert!(t.ring().equal(&g.hopf.comult(&x).unwrap(), &want));
        assert_eq!(g.carrier().denominators().len(), 0);
    }

    #[test]
    fn kummer_and_deformed_sequences() {
        let (base, l) = lambda_base::<F3>(LambdaMode::Symbolic, false).unwrap();
        for (big, small) in [(SchemeTag::Gm, SchemeTag::Mu), (SchemeTag::GLambda, SchemeTag::GammaLambda)] {
            let g = make_scheme(big, 1, &base, &l).unwrap();
            let k = make_scheme(small, 1, &base, &l).unwrap();
            let (tw, f) = frobenius_hom(&g, 1).unwrap();
            assert!(tw.hopf.check_hom_into(&g.hopf, &f).unwrap().all_pass());
            let rep = check_kernel_sequence(&k, &g, &tw, &f).unwrap();
            assert!(rep.all_pass(), "{rep:?}");
            let bad = wrong_frobenius(&g, &tw, 1).unwrap();
            let rep = check_kernel_sequence(&k, &g, &tw, &bad).unwrap();
            assert!(!rep.composition_trivial && !rep.witnesses.is_empty());
        }
    }

    #[test]
    fn printed_antipodes_fail() {
        let (base, l) = lambda_base::<F3>(LambdaMode::Symbolic, false).unwrap();
        for tag in [SchemeTag::Mu, SchemeTag::GammaLambda] {
            let h = printed_antipode_variant(tag, 1, &base, &l).unwrap();
            let rep = h.check_axioms().unwrap();
            assert!(!rep.law_passes(crate::hopf::Law::AntipodeLeft), "{tag:?}");
            assert!(rep.failures().all(|f| f.witness.is_some()));
        }
    }

    #[test]
    fn alpha_is_hom_and_invertible_at_one() {
        let (base, l) = lambda_base::<F2>(LambdaMode::Value(1), false).unwrap();
        let gm = make_scheme(SchemeTag::Gm, 1, &base, &l).unwrap();
        let gl = make_scheme(SchemeTag::GLambda, 1, &base, &l).unwrap();
        let a = alpha_hom(&gm, &gl).unwrap();
        assert!(gm.hopf.check_hom_into(&gl.hopf, &a).unwrap().all_pass());
        let b = alpha_inverse(&gm, &gl).unwrap();
        assert!(a.then(&b).unwrap().agrees_with(&RingHom::identity(gm.carrier().clone())));
        assert!(b.then(&a).unwrap().agrees_with(&RingHom::identity(gl.carrier().clone())));
    }
}
