//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Every comparison is exact (tolerance zero).

use std::process::{Command, ExitCode};
use std::time::Instant;

use cremona_core::algebra::{int, matrix, Polynomial, Scalar};
use cremona_core::arrangement::{
    all_through_point, blowup_expansion, degree_p2_lines, degree_p3, incidence_p2, incidence_p3,
    monotonicity_check, random, search_degree_one, verify_line_identity, verify_pair_count,
    verify_triple_count, Family, HyperplaneSet,
};
use cremona_core::legendre::{
    adjugate_involution_check, catalog, catalog_entry, degree_divisibility_check, det3,
    hessian_divisibility_check, verify_entry,
};
use cremona_core::polar::{polar_system, topological_degree, CurveShape, DEFAULT_MAX_RETRIES};
use cremona_core::rng::{derive_seed, int_in, int_vec, seeded, SeededRng};
use cremona_core::{classify_reduced_curve, parse_poly_in};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn p(s: &str) -> Polynomial {
    parse_poly_in(s, 3).expect("valid fixture").poly
}

fn invertible(rng: &mut SeededRng, bound: i64) -> Vec<Vec<Scalar>> {
    loop {
        let m: Vec<Vec<Scalar>> = (0..3)
            .map(|_| int_vec(rng, 3, bound).into_iter().map(int).collect())
            .collect();
        if matrix::rank(&m) == 3 {
            return m;
        }
    }
}

fn random_form(rng: &mut SeededRng, degree: u32) -> Polynomial {
    let mut terms = Vec::new();
    for a in 0..=degree {
        for b in 0..=degree - a {
            terms.push((vec![a, b, degree - a - b], int(int_in(rng, 5))));
        }
    }
    Polynomial::from_terms(3, terms)
}

fn polar_degree(f: &Polynomial, seed: u64) -> Result<u64, String> {
    let system = polar_system(f).map_err(|e| e.to_string())?;
    let r = topological_degree(&system, seed, DEFAULT_MAX_RETRIES).map_err(|e| e.to_string())?;
    Ok(if r.degenerate_image { 0 } else { r.degree })
}

fn criterion_1() -> Outcome {
    let cases = [
        ("x0^2 + x1*x2", CurveShape::NonsingularConic),
        ("x0*x1*x2", CurveShape::ThreeNonconcurrentLines),
        ("x0*(x0*x2 + x1^2)", CurveShape::ConicPlusTangent),
    ];
    let mut detail = Vec::new();
    let mut pass = true;
    for (text, shape) in cases {
        match classify_reduced_curve(&p(text), 0) {
            Ok(r) => {
                pass &= r.tag == shape && r.degree == Some(1);
                detail.push(format!("{text} -> {:?}/{:?}", r.tag, r.degree));
            }
            Err(e) => {
                pass = false;
                detail.push(format!("{text} -> error {e}"));
            }
        }
    }
    outcome(pass, detail.join("; "))
}

/// A labelled curve and the shape it must be classified as.
struct CorpusCurve {
    label: String,
    f: Polynomial,
    expected: CurveShape,
    expected_degree: Option<u64>,
}

fn curve_corpus() -> Vec<CorpusCurve> {
    let mut rng = seeded(2024);
    let mut out = Vec::new();
    let mut push = |label: String, f: Polynomial, expected: CurveShape, d: Option<u64>| {
        out.push(CorpusCurve { label, f, expected, expected_degree: d });
    };
    let fixed = [
        ("smooth cubic", "x0^3 + x1^3 + x2^3", 4),
        ("nodal cubic", "x1^2*x2 - x0^2*(x0 + x2)", 3),
        ("cuspidal cubic", "x1^2*x2 - x0^3", 2),
        ("smooth quartic", "x0^4 + x1^4 + x2^4", 9),
        ("four general lines", "x0*x1*x2*(x0 + x1 + x2)", 3),
    ];
    for (label, text, d) in fixed {
        push(label.into(), p(text), CurveShape::NotHomaloidal, Some(d));
    }
    let shapes = [
        ("x0^2 + x1*x2", CurveShape::NonsingularConic),
        ("x0*x1*x2", CurveShape::ThreeNonconcurrentLines),
        ("x0*(x0*x2 + x1^2)", CurveShape::ConicPlusTangent),
    ];
    for (text, shape) in shapes {
        for i in 0..4 {
            let m = invertible(&mut rng, 4);
            push(format!("{text} sheared #{i}"), p(text).linear_change(&m), shape, Some(1));
        }
    }
    for (label, text, d) in [("nodal cubic", "x1^2*x2 - x0^2*(x0 + x2)", 3), ("cuspidal cubic", "x1^2*x2 - x0^3", 2)] {
        for i in 0..5 {
            let m = invertible(&mut rng, 4);
            push(format!("{label} sheared #{i}"), p(text).linear_change(&m), CurveShape::NotHomaloidal, Some(d));
        }
    }
    for i in 0..8 {
        push(format!("random cubic #{i}"), random_form(&mut rng, 3), CurveShape::NotHomaloidal, Some(4));
    }
    for i in 0..6 {
        push(format!("random quartic #{i}"), random_form(&mut rng, 4), CurveShape::NotHomaloidal, Some(9));
    }
    for i in 0..3 {
        push(format!("random quintic #{i}"), random_form(&mut rng, 5), CurveShape::NotHomaloidal, Some(16));
    }
    for i in 0..5 {
        let conic = p("x0^2 + x1*x2").linear_change(&invertible(&mut rng, 3));
        let line = Polynomial::linear_form(&int_vec(&mut rng, 3, 6).into_iter().map(int).collect::<Vec<_>>());
        // a secant meets the conic in two nodes: 4 - 1 - 1
        push(format!("conic plus secant #{i}"), &conic * &line, CurveShape::NotHomaloidal, Some(2));
    }
    let mut lines_added = 0;
    while lines_added < 10 {
        let s = 3 + lines_added % 3;
        let set = random::random_lines(&mut rng, s, 3);
        let inc = incidence_p2(&set).expect("at least two lines");
        let d = degree_p2_lines(&inc);
        let shape = if s == 3 && inc.t == 3 {
            CurveShape::ThreeNonconcurrentLines
        } else {
            CurveShape::NotHomaloidal
        };
        push(format!("{s} random lines #{lines_added}"), set.product(), shape, Some(d as u64));
        lines_added += 1;
    }
    out
}

fn criterion_2() -> Outcome {
    let corpus = curve_corpus();
    let mut failures = Vec::new();
    let mut degree_one = 0;
    for c in &corpus {
        let r = match classify_reduced_curve(&c.f, 1) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{}: error {e}", c.label));
                continue;
            }
        };
        if r.degree == Some(1) {
            degree_one += 1;
        }
        let shape_ok = r.tag == c.expected && (r.degree == Some(1)) == c.expected.is_homaloidal();
        let degree_ok = c.expected_degree.is_none() || r.degree == c.expected_degree;
        // independent fiber count with unrelated randomness
        let second = polar_degree(&c.f, 0xD1CE);
        let oracle_ok = second.as_ref().ok() == r.degree.as_ref();
        if !(shape_ok && degree_ok && oracle_ok) {
            failures.push(format!(
                "{}: {:?}/{:?}, expected {:?}/{:?}, second count {:?}",
                c.label, r.tag, r.degree, c.expected, c.expected_degree, second
            ));
        }
    }
    let pass = failures.is_empty() && corpus.len() >= 50;
    outcome(
        pass,
        format!(
            "{} curves, {} of degree one, mismatches: {}",
            corpus.len(),
            degree_one,
            if failures.is_empty() { "none".into() } else { failures.join("; ") }
        ),
    )
}

fn line_arrangement(rng: &mut SeededRng, s: usize, index: usize) -> HyperplaneSet {
    if index % 2 == 0 {
        random::random_lines(rng, s, 3)
    } else {
        random::lines_through_points(rng, s, 3 + index % 3, 4)
    }
}

fn criterion_3() -> Outcome {
    let mut rng = seeded(33);
    let (mut checked, mut failures) = (0, Vec::new());
    let mut index = 0;
    while checked < 60 {
        let s = 3 + index % 4;
        let set = line_arrangement(&mut rng, s, index);
        index += 1;
        let inc = incidence_p2(&set).expect("at least two lines");
        if inc.t <= 1 {
            continue;
        }
        let formula = degree_p2_lines(&inc);
        let computed = polar_degree(&set.product(), index as u64);
        if computed != Ok(formula as u64) {
            failures.push(format!("s={s} t={}: formula {formula}, elimination {computed:?}", inc.t));
        }
        checked += 1;
    }
    outcome(
        failures.is_empty(),
        format!("{checked} arrangements with t > 1, s <= 6; mismatches: {}", failures.len()),
    )
    .with_failures(failures)
}

impl Outcome {
    fn with_failures(mut self, failures: Vec<String>) -> Self {
        if !failures.is_empty() {
            self.detail = format!("{} [{}]", self.detail, failures.join("; "));
        }
        self
    }
}

fn criterion_4() -> Outcome {
    let mut rng = seeded(44);
    let mut failures = Vec::new();
    let total = 240;
    for i in 0..total {
        let s = 2 + i % 7;
        let set = line_arrangement(&mut rng, s, i);
        let inc = incidence_p2(&set).expect("at least two lines");
        let incidences: u32 = inc.points.iter().map(|pt| pt.multiplicity()).sum();
        if !verify_pair_count(&inc) || inc.k.iter().sum::<u32>() != incidences {
            failures.push(format!("arrangement {i} (s={s})"));
        }
    }
    outcome(failures.is_empty(), format!("{total} arrangements, s <= 8; failures: {}", failures.len()))
        .with_failures(failures)
}

fn planes(rows: &[[i64; 4]]) -> HyperplaneSet {
    HyperplaneSet::from_ints(3, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).expect("distinct planes")
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let four = planes(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
    let five = planes(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1]]);
    for (label, set, expected) in [("4 general", &four, 1), ("5 general", &five, 4)] {
        let inc = incidence_p3(set).expect("valid");
        let (d, e) = (degree_p3(&inc), blowup_expansion(&inc).total);
        if d != expected || e != expected {
            failures.push(format!("{label}: formula {d}, expansion {e}"));
        }
    }
    let mut rng = seeded(55);
    for n in 3..=7 {
        let set = random::bundle(&mut rng, n, 3);
        let d = degree_p3(&incidence_p3(&set).expect("valid"));
        if d != 0 {
            failures.push(format!("bundle of {n}: degree {d}"));
        }
    }
    let mut count = 0;
    for i in 0..250u64 {
        let n = 3 + (i % 5) as usize;
        let family = Family::ALL[(i / 5 % 5) as usize];
        let set = family.sample(n, derive_seed(55, i));
        let inc = incidence_p3(&set).expect("valid");
        let d = degree_p3(&inc);
        let ok = blowup_expansion(&inc).total == d
            && verify_triple_count(&inc)
            && verify_line_identity(&inc)
            && all_through_point(&set) == (d == 0);
        if !ok {
            failures.push(format!("{} N={n} seed {i}", family.name()));
        }
        count += 1;
    }
    outcome(
        failures.is_empty(),
        format!("4 general -> 1, 5 general -> 4, bundles -> 0; {count} random arrangements N <= 7; failures: {}", failures.len()),
    )
    .with_failures(failures)
}

fn criterion_6() -> Outcome {
    match search_degree_one(3, 7, &Family::ALL, 48, 66) {
        Ok(r) => {
            let positive = r.degree_one.iter().any(|&i| r.cases[i].n == 4 && r.cases[i].general_position);
            let bad: Vec<String> = r
                .degree_one
                .iter()
                .map(|&i| &r.cases[i])
                .filter(|c| !(c.n == 4 && c.general_position))
                .map(|c| format!("{} N={} seed {}", c.family.name(), c.n, c.seed))
                .collect();
            outcome(
                r.cases.len() >= 1000 && positive && bad.is_empty() && r.degree_one_only_general_four,
                format!(
                    "{} arrangements, {} with degree one, all four planes in general position: {}",
                    r.cases.len(),
                    r.degree_one.len(),
                    bad.is_empty()
                ),
            )
            .with_failures(bad)
        }
        Err(e) => outcome(false, format!("error {e}")),
    }
}

/// A plane through a multiple point, containing a multiple line, or free.
fn extra_plane(rng: &mut SeededRng, set: &HyperplaneSet, kind: usize) -> Vec<Scalar> {
    let inc = incidence_p3(set).expect("valid");
    let free = |rng: &mut SeededRng| int_vec(rng, 4, 7).into_iter().map(int).collect::<Vec<_>>();
    let constraint: Option<Vec<Vec<Scalar>>> = match kind {
        0 if !inc.points.is_empty() => {
            let pt = &inc.points[int_in(rng, 1000).unsigned_abs() as usize % inc.points.len()];
            Some(vec![pt.coords.clone()])
        }
        1 if !inc.lines.is_empty() => {
            let line = &inc.lines[int_in(rng, 1000).unsigned_abs() as usize % inc.lines.len()];
            let c = set.covectors();
            // points of the line span the nullspace of two of its planes
            Some(matrix::nullspace(&[c[line.planes[0]].clone(), c[line.planes[1]].clone()], 4))
        }
        _ => None,
    };
    match constraint {
        None => free(rng),
        Some(points) => {
            let through = matrix::nullspace(&points, 4);
            loop {
                let coeffs = int_vec(rng, through.len(), 5);
                let mut v = vec![int(0); 4];
                for (k, b) in coeffs.iter().zip(&through) {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += int(*k) * y;
                    }
                }
                if v.iter().any(|x| *x != int(0)) {
                    return v;
                }
            }
        }
    }
}

fn criterion_7() -> Outcome {
    let mut rng = seeded(77);
    let (mut checked, mut failures) = (0, Vec::new());
    let mut i = 0u64;
    while checked < 120 && i < 5000 {
        let n = 4 + (i % 3) as usize;
        let family = Family::ALL[(i % 5) as usize];
        let set = family.sample(n, derive_seed(77, i));
        i += 1;
        if degree_p3(&incidence_p3(&set).expect("valid")) == 0 {
            continue;
        }
        let extra = extra_plane(&mut rng, &set, (i % 3) as usize);
        match monotonicity_check(&set, extra) {
            Ok(r) => {
                if !r.holds {
                    failures.push(format!("{} N={n}: {} -> {}", family.name(), r.d_before, r.d_after));
                }
                checked += 1;
            }
            // the extra plane duplicated an existing one
            Err(_) => continue,
        }
    }
    outcome(
        failures.is_empty() && checked >= 100,
        format!("{checked} pairs with nonzero starting degree; failures: {}", failures.len()),
    )
    .with_failures(failures)
}

fn criterion_8() -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    for e in catalog() {
        match verify_entry(&e, 24, 8) {
            Ok(r) => {
                let ok = r.samples_tested >= 20 && r.reciprocal_holds && r.round_trip_holds;
                pass &= ok;
                detail.push(format!(
                    "{} {} (c={}, {} samples)",
                    e.name,
                    if ok { "ok" } else { "FAILED" },
                    cremona_core::report::scalar_string(&r.calibrated_scale),
                    r.samples_tested
                ));
            }
            Err(err) => {
                pass = false;
                detail.push(format!("{} error {err}", e.name));
            }
        }
    }
    let tangent = catalog_entry("conic-plus-tangent").expect("catalog entry");
    pass &= tangent.fstar_numerator == p("(4*x0*x2 + x1^2)^2") && tangent.fstar_denominator == p("x2");
    outcome(pass, detail.join(", "))
}

fn criterion_9() -> Outcome {
    let triple = p("x0*x1*x2");
    let det = det3();
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, f) in [("x0*x1*x2", &triple), ("det3", &det)] {
        let k = degree_divisibility_check(f);
        let h = hessian_divisibility_check(f);
        pass &= k == Ok(true) && h == Ok(true);
        detail.push(format!("{name}: k | 2(n+1) {k:?}, F | Hess {h:?}"));
    }
    let adj = adjugate_involution_check();
    pass &= adj;
    detail.push(format!("adj(adj(A)) = det(A) A symbolically: {adj}"));
    outcome(pass, detail.join("; "))
}

fn criterion_10() -> Outcome {
    let dir = std::env::temp_dir().join(format!("cremona-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let commands: [&[&str]; 3] = [
        &["curve-degree", "--poly", "x1^2*x2 - x0^2*(x0 + x2)", "--seed", "3"],
        &["arr-search", "--n-min", "3", "--n-max", "6", "--trials", "5", "--seed", "11"],
        &["legendre-verify", "--entry", "det3", "--samples", "20", "--seed", "5"],
    ];
    let mut pass = true;
    let mut detail = Vec::new();
    for (i, args) in commands.iter().enumerate() {
        let mut reports = Vec::new();
        for run in 0..2 {
            let out = dir.join(format!("{i}-{run}.json"));
            let status = Command::new(env!("CARGO_BIN_EXE_cremona"))
                .args(*args)
                .arg("--out")
                .arg(&out)
                .output()
                .expect("binary runs");
            pass &= status.status.success();
            reports.push(std::fs::read(&out).unwrap_or_default());
        }
        let same = !reports[0].is_empty() && reports[0] == reports[1];
        pass &= same;
        detail.push(format!("{}: {}", args[0], if same { "identical" } else { "DIFFERENT" }));
    }
    let _ = std::fs::remove_dir_all(&dir);
    outcome(pass, detail.join(", "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("birational polar maps of the three reduced plane curves", criterion_1),
        ("degree one only for those three shapes on a curve corpus", criterion_2),
        ("line arrangements: incidence formula equals elimination degree", criterion_3),
        ("line arrangements: pair count identity", criterion_4),
        ("plane arrangements: degree formula, blow-up expansion, triple count", criterion_5),
        ("plane arrangements: degree one only for four general planes", criterion_6),
        ("plane arrangements: adding a plane raises a nonzero degree", criterion_7),
        ("Legendre transform identities on the catalog", criterion_8),
        ("degree and Hessian divisibility, adjugate involution", criterion_9),
        ("byte-identical reports for identical seeds", criterion_10),
    ];
    println!("acceptance: all comparisons exact (tolerance 0)");
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name} ({:.1}s): {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
