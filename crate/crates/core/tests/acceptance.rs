//! One line per acceptance criterion. Exits non-zero if a criterion
//! deviates from its recorded outcome.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cleft_core::algebra::ring::DEFAULT_KMAX;
use cleft_core::catalog::LambdaMode;
use cleft_core::report::{CheckEntry, Report, Verdict};
use cleft_core::resolution::mu::mu_structure;
use cleft_core::resolution::{CleftStructure, GammaSetting};
use cleft_core::run::{default_grid, run, GridPoint, SuiteConfig};
use cleft_core::suites::Suite;
use cleft_core::torsor::{cleft_obstruction_search, example_instance, SearchVerdict};
use cleft_core::{Fp, PrimeField, Result};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn of(problems: Vec<String>) -> Self {
        Outcome { pass: problems.is_empty(), detail: problems.join("; ") }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn grid(suites: &[Suite], points: Vec<GridPoint>) -> Report {
    run(&SuiteConfig::new(points, suites.to_vec())).expect("valid configuration")
}

fn sym(p: u32, n: u32) -> GridPoint {
    GridPoint { p, n, lambda: LambdaMode::Symbolic }
}

/// Entries whose id contains every fragment.
fn select<'a>(r: &'a Report, fragments: &[&str]) -> Vec<&'a CheckEntry> {
    r.checks.iter().filter(|e| fragments.iter().all(|f| e.check_id.contains(f))).collect()
}

/// Non-empty and all passing.
fn all_pass(r: &Report, fragments: &[&str], problems: &mut Vec<String>) {
    let sel = select(r, fragments);
    if sel.is_empty() {
        problems.push(format!("no entries matching {fragments:?}"));
    }
    for e in sel.into_iter().filter(|e| e.verdict != Verdict::Pass) {
        problems.push(format!("{} {:?} {}", e.check_id, e.verdict, e.witness.clone().unwrap_or_default()));
    }
}

fn within(t: Duration, secs: u64, problems: &mut Vec<String>) {
    if t > Duration::from_secs(secs) {
        problems.push(format!("took {t:?}, bound {secs} s"));
    }
}

fn criterion_1() -> Outcome {
    let (r, t) = timed(|| grid(&[Suite::Axioms], default_grid()));
    let mut problems = Vec::new();
    for tag in ["/ga/", "/gm/", "/mu/", "/g-lambda/", "/gamma/"] {
        for law in ["coassociativity", "counit", "antipode"] {
            all_pass(&r, &["/axioms", tag, law], &mut problems);
        }
    }
    within(t, 10, &mut problems);
    Outcome::of(problems)
}

fn criterion_2() -> Outcome {
    let (r, t) = timed(|| grid(&[Suite::Unitgroup], default_grid()));
    let mut problems = Vec::new();
    for label in ["mu", "gamma"] {
        all_pass(&r, &[&format!("unitgroup/{label}/determinant-oracle")], &mut problems);
        all_pass(&r, &[&format!("unitgroup/{label}/determinant-closed-form")], &mut problems);
    }
    within(t, 5, &mut problems);
    Outcome::of(problems)
}

fn convolution_at<F: PrimeField>(c: &CleftStructure<F>, unit_is_reciprocal: bool) -> Result<Option<String>> {
    let h = &c.scheme.hopf;
    if !c.cleaving.is_two_sided_inverse(&c.inverse, h, &c.unit.rep)? {
        return Ok(Some("cleaving and inverse do not convolve to the unit".into()));
    }
    let u = c.ring();
    if unit_is_reciprocal && !u.equal(&c.inverse.values[0], &u.invert(&c.x1(), DEFAULT_KMAX)?) {
        return Ok(Some(format!("inverse at the unit is {}", u.display(&c.inverse.values[0]))));
    }
    Ok(None)
}

fn convolution_typed<F: PrimeField>(n: u32, problems: &mut Vec<String>) {
    let tag = format!("p{} n{n}", F::CHARACTERISTIC);
    match mu_structure::<F>(n).and_then(|c| convolution_at(&c, true)) {
        Ok(None) => {}
        Ok(Some(w)) => problems.push(format!("{tag} mu: {w}")),
        Err(e) => problems.push(format!("{tag} mu: {e}")),
    }
    for mode in [LambdaMode::Symbolic, LambdaMode::Value(0), LambdaMode::Value(1)] {
        match GammaSetting::<F>::new(n, mode).and_then(|g| convolution_at(&g.cleft, true)) {
            Ok(None) => {}
            Ok(Some(w)) => problems.push(format!("{tag} λ={mode} gamma: {w}")),
            Err(e) => problems.push(format!("{tag} λ={mode} gamma: {e}")),
        }
    }
}

fn criterion_3() -> Outcome {
    let (problems, t) = timed(|| {
        let mut problems = Vec::new();
        convolution_typed::<Fp<2>>(1, &mut problems);
        convolution_typed::<Fp<3>>(1, &mut problems);
        convolution_typed::<Fp<2>>(2, &mut problems);
        problems
    });
    let mut problems = problems;
    within(t, 5, &mut problems);
    Outcome::of(problems)
}

fn criterion_4() -> Outcome {
    let (r, t) = timed(|| grid(&[Suite::Gamma], vec![sym(3, 1), sym(2, 2)]));
    let mut problems = Vec::new();
    for pt in ["p3/n1/lsym/", "p2/n2/lsym/"] {
        all_pass(&r, &[pt, "ptable/parameter-clears"], &mut problems);
        all_pass(&r, &[pt, "ptable/s", "/coinvariant"], &mut problems);
        all_pass(&r, &[pt, "ptable/s", "/projector"], &mut problems);
    }
    within(t, 30, &mut problems);
    Outcome::of(problems)
}

fn criterion_5() -> Outcome {
    let (r, t) = timed(|| grid(&[Suite::Gamma, Suite::Mu], default_grid()));
    let mut problems = Vec::new();
    all_pass(&r, &["/gamma/generators/", "/coinvariant"], &mut problems);
    all_pass(&r, &["/mu/generators/", "/coinvariant"], &mut problems);
    all_pass(&r, &["/gamma/elimination/", "/solve-back"], &mut problems);
    all_pass(&r, &["/gamma/models/xi-after-chi"], &mut problems);
    all_pass(&r, &["/gamma/models/chi-after-xi"], &mut problems);
    all_pass(&r, &["/gamma/models/xi-omega/"], &mut problems);
    within(t, 30, &mut problems);
    Outcome::of(problems)
}

fn criterion_6() -> Outcome {
    let (r, t) = timed(|| grid(&[Suite::Diagrams], default_grid()));
    let mut problems = Vec::new();
    for map in ["sigma1", "tau1", "sigma2", "tau2"] {
        all_pass(&r, &[&format!("diagrams/maps/{map}/hopf")], &mut problems);
    }
    all_pass(&r, &["diagrams/squares/"], &mut problems);
    all_pass(&r, &["diagrams/rows/top"], &mut problems);
    all_pass(&r, &["diagrams/rows/bottom/"], &mut problems);
    all_pass(&r, &["diagrams/"], &mut problems);
    within(t, 20, &mut problems);
    Outcome::of(problems)
}

fn criterion_7() -> Outcome {
    let (r, t) = timed(|| grid(&[Suite::Kummer], default_grid()));
    let mut problems = Vec::new();
    for part in ["immersion", "composition-trivial", "kernel-ideal", "frobenius-hopf"] {
        all_pass(&r, &[&format!("kummer/multiplicative/{part}")], &mut problems);
        all_pass(&r, &[&format!("kummer/deformed/{part}")], &mut problems);
    }
    within(t, 5, &mut problems);
    Outcome::of(problems)
}

/// Everything except the p = 2 search must pass; the p = 2 search is
/// expected to find `b = 1`, because `X^2 + Y^2 + (X+1)^2 Y = (Y+1)(X^2+Y)`.
fn criterion_8() -> (Outcome, bool) {
    let ((r, search), t) = timed(|| {
        let r = grid(&[Suite::Torsor], vec![sym(2, 1), sym(3, 1), GridPoint { p: 2, n: 1, lambda: LambdaMode::Value(1) }]);
        let params = example_instance::<Fp<2>>().expect("example instance builds");
        let search = cleft_obstruction_search(&params, 2, 4).map(|v| (v, params));
        (r, search)
    });
    let mut problems = Vec::new();
    for instance in ["torsor/generic/", "torsor/example/"] {
        for id in [
            "finite/hypothesis",
            "finite/frobenius-identity",
            "finite/galois-map",
            "full/galois-map",
            "contracted/phi-unit",
            "contracted/comodule-hom",
            "contracted/left-invariant",
        ] {
            all_pass(&r, &[instance, id], &mut problems);
        }
    }
    all_pass(&r, &["torsor/example/norm-is-designated"], &mut problems);
    within(t, 60, &mut problems);
    let others_ok = problems.is_empty();

    let odd = select(&r, &["p3/", "example/cleft-search"]);
    let odd_ok = odd.len() == 1 && odd[0].verdict == Verdict::Evidence;
    let counterexample = match &search {
        Ok((SearchVerdict::CleftWitness(b), params)) => {
            let base = &params.base;
            let factored = base.mul(&base.parse("Y + 1").unwrap(), &base.parse("X^2 + Y").unwrap());
            base.is_one(b) && base.equal(&params.norm().unwrap(), &factored)
        }
        _ => false,
    };
    if !odd_ok {
        problems.push("p=3 search is not NoWitnessUpTo(2)".into());
    }
    match &search {
        Ok((SearchVerdict::NoWitnessUpTo(_), _)) => {}
        Ok((SearchVerdict::CleftWitness(b), params)) => problems.push(format!(
            "p=2 search returns CleftWitness({}) instead of NoWitnessUpTo(2): in characteristic 2 the designated denominator is (Y+1)(X^2+Y), so a+λ = Y+1 is a unit",
            params.base.display(b)
        )),
        Err(e) => problems.push(format!("p=2 search errored: {e}")),
    }
    let expected = others_ok && odd_ok && counterexample;
    (Outcome::of(problems), expected)
}

fn criterion_9() -> Outcome {
    let r = grid(&[Suite::Axioms, Suite::Kummer], default_grid());
    let mut problems = Vec::new();
    let with_witness = |sel: Vec<&CheckEntry>, problems: &mut Vec<String>| {
        if sel.is_empty() {
            problems.push("missing control".into());
        }
        for e in sel {
            if e.verdict != Verdict::Pass || e.witness.as_deref().is_none_or(str::is_empty) {
                problems.push(format!("{} {:?}", e.check_id, e.verdict));
            }
        }
    };
    // −1/U is the true inverse when −1 = 1, so the μ control only bites for odd p
    with_witness(select(&r, &["p3/", "controls/printed-antipode-mu"]), &mut problems);
    with_witness(select(&r, &["controls/printed-antipode-gamma"]), &mut problems);
    with_witness(select(&r, &["controls/wrong-exponent-"]), &mut problems);
    for e in select(&r, &["controls/wrong-exponent-"]) {
        if !e.witness.as_deref().unwrap_or_default().starts_with("composition not trivial") {
            problems.push(format!("{} does not name the composition proxy", e.check_id));
        }
    }
    Outcome::of(problems)
}

fn criterion_10() -> Outcome {
    let config = SuiteConfig::new(default_grid(), Suite::ALL.to_vec());
    let a = run(&config).expect("valid configuration").to_json();
    let b = run(&config).expect("valid configuration").to_json();
    Outcome::of(if a == b { vec![] } else { vec!["reports differ".into()] })
}

fn main() -> ExitCode {
    let (c8, recorded8) = criterion_8();
    // criterion 8 is recorded as failing, through the characteristic-2 counterexample only
    let results = [
        (criterion_1(), true, "Hopf axioms of every catalog scheme on the grid"),
        (criterion_2(), true, "unit-group determinants against the cofactor oracle"),
        (criterion_3(), true, "convolution inverses of the cleaving maps"),
        (criterion_4(), true, "P polynomials: clearing, coinvariance, projector"),
        (criterion_5(), true, "coinvariant presentations and the Z models"),
        (criterion_6(), true, "the two resolution diagrams"),
        (criterion_7(), true, "Kummer sequence proxies"),
        (c8, false, "torsor laboratory and the non-cleft example"),
        (criterion_9(), true, "negative controls"),
        (criterion_10(), true, "byte-identical reports across runs"),
    ];
    let mut unexpected = usize::from(!recorded8);
    for (k, (o, expected_pass, title)) in results.iter().enumerate() {
        let status = if o.pass { "PASS" } else { "FAIL" };
        let note = if o.detail.is_empty() { String::new() } else { format!(" ({})", o.detail) };
        println!("criterion {:>2}: {status}  {title}{note}", k + 1);
        if o.pass != *expected_pass {
            unexpected += 1;
        }
    }
    if !recorded8 {
        println!("criterion 8 deviates from its recorded counterexample");
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria deviate from their recorded outcome");
        ExitCode::FAILURE
    }
}
