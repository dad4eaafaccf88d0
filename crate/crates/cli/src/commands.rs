use cremona_core::arrangement::{
    all_through_point, blowup_expansion, degree_p2_lines, degree_p3, incidence_p2, incidence_p3,
    search_degree_one, verify_line_identity, verify_multiple_point_bound, verify_pair_count,
    verify_triple_count, Family,
};
use cremona_core::legendre::{catalog, catalog_entry, degree_divisibility_check, verify_entry};
use cremona_core::polar::{conjecture_probe, polar_system, topological_degree};
use cremona_core::{algebra, classify_reduced_curve, parse_poly, parse_poly_in, Polynomial};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{input, CliError, Command};

/// Everything a command produces: a one-line summary and the report payload.
pub struct Outcome {
    pub command: &'static str,
    pub summary: String,
    pub inputs: Value,
    pub seed: Option<u64>,
    pub results: Value,
    pub formulas: Vec<&'static str>,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn curve(text: &str) -> Result<Polynomial, CliError> {
    parse_poly_in(text, 3)
        .map(|p| p.poly)
        .map_err(|e| CliError::Usage(format!("{text:?}: {e}")))
}

const DEGREE_FORMULA: &str =
    "degree = deg sqfree(R1) - deg gcd(sqfree R1, sqfree R2), R_i the resultant of the fiber over target i";

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::CurveDegree { poly, seed, max_retries } => {
            let f = curve(poly)?;
            let system = polar_system(&f)?;
            let report = topological_degree(&system, *seed, *max_retries)?;
            let summary = if report.degenerate_image {
                "degree 0 (polar map is not dominant)".to_string()
            } else {
                format!("degree {}", report.degree)
            };
            Ok(Outcome {
                command: "curve-degree",
                summary,
                inputs: json!({ "poly": f.to_string(), "max_retries": max_retries }),
                seed: Some(*seed),
                results: json!({ "polar_system": to_value(&system), "degree": to_value(&report) }),
                formulas: vec![DEGREE_FORMULA],
            })
        }
        Command::Classify { poly, seed } => {
            let f = curve(poly)?;
            let result = classify_reduced_curve(&f, *seed)?;
            let summary = match result.degree {
                Some(d) => format!("{:?}, degree {d}", result.tag),
                None => format!("{:?}", result.tag),
            };
            Ok(Outcome {
                command: "classify",
                summary,
                inputs: json!({ "poly": f.to_string() }),
                seed: Some(*seed),
                results: to_value(&result),
                formulas: vec![
                    DEGREE_FORMULA,
                    "degree one for a reduced plane curve: smooth conic, three non-concurrent lines, or conic plus tangent line",
                ],
            })
        }
        Command::ArrDegree { file } => arr_degree(file),
        Command::ArrSearch { n_min, n_max, trials, seed, families } => {
            let families: Vec<Family> = match families {
                None => Family::ALL.to_vec(),
                Some(names) => names
                    .iter()
                    .map(|n| n.parse().map_err(|e: cremona_core::Error| CliError::Usage(e.to_string())))
                    .collect::<Result<_, _>>()?,
            };
            if families.is_empty() || *n_min < 3 || *n_max > 7 || n_min > n_max {
                return Err(CliError::Usage(
                    "need at least one family and 3 <= n-min <= n-max <= 7".into(),
                ));
            }
            let report = search_degree_one(*n_min, *n_max, &families, *trials, *seed)?;
            Ok(Outcome {
                command: "arr-search",
                summary: format!(
                    "{} arrangements, {} of degree one, all four general planes: {}",
                    report.cases.len(),
                    report.degree_one.len(),
                    report.degree_one_only_general_four
                ),
                inputs: json!({ "n_min": n_min, "n_max": n_max, "trials": trials, "families": to_value(&families) }),
                seed: Some(*seed),
                results: to_value(&report),
                formulas: vec![
                    "d = N - 1 - sum_p (k_p - 1) + sum_l (a_l - 1)(k_l - 1)",
                    "d = 1 only for four planes in general position",
                ],
            })
        }
        Command::LegendreVerify { entry, samples, seed } => {
            let Some(e) = catalog_entry(entry) else {
                let names: Vec<String> = catalog().into_iter().map(|e| e.name).collect();
                return Err(CliError::Usage(format!(
                    "unknown entry {entry:?}; available: {}",
                    names.join(", ")
                )));
            };
            let report = verify_entry(&e, *samples, *seed)?;
            Ok(Outcome {
                command: "legendre-verify",
                summary: format!(
                    "{}: reciprocal {}, round trip {}, {} samples, scale {}",
                    e.name,
                    report.reciprocal_holds,
                    report.round_trip_holds,
                    report.samples_tested,
                    cremona_core::report::scalar_string(&report.calibrated_scale)
                ),
                inputs: json!({ "entry": to_value(&e), "samples": samples }),
                seed: Some(*seed),
                results: to_value(&report),
                formulas: vec![
                    "c F*(d ln F(v)) = 1 / F(v)",
                    "d ln F*(d ln F(v)) = v",
                    "v . d ln F(v) = deg F",
                    "dF*(dF(v)) F(v) = c' F*(dF(v)) v",
                ],
            })
        }
        Command::HessianCheck { poly, nvars } => {
            let parsed = match nvars {
                Some(n) => parse_poly_in(poly, *n),
                None => parse_poly(poly),
            }
            .map_err(|e| CliError::Usage(format!("{poly:?}: {e}")))?;
            let f = parsed.poly;
            if f.is_zero() {
                return Err(CliError::Compute(cremona_core::Error::ZeroPolynomial));
            }
            let hessian = algebra::hessian_det(&f);
            let quotient = hessian.exact_div(&f)?;
            let degree_divides = degree_divisibility_check(&f).ok();
            Ok(Outcome {
                command: "hessian-check",
                summary: format!("divides: {}", quotient.is_some()),
                inputs: json!({ "poly": f.to_string(), "nvars": f.nvars() }),
                seed: None,
                results: json!({
                    "hessian_det": hessian.to_string(),
                    "divides": quotient.is_some(),
                    "quotient": quotient.map(|q| q.to_string()),
                    "degree_divides_twice_nvars": degree_divides,
                }),
                formulas: vec!["F | det Hess(F)", "deg F | 2(n+1)"],
            })
        }
        Command::ConjectureProbe { factors, seed } => {
            let factors = input::load_factors(factors)?;
            let record = conjecture_probe(&factors, *seed)?;
            Ok(Outcome {
                command: "conjecture-probe",
                summary: format!(
                    "degree of F {}, degree of reduction {}, agree on degree one: {}",
                    record.degree_f, record.degree_g, record.agree_on_homaloidal
                ),
                inputs: json!({
                    "factors": factors
                        .iter()
                        .map(|(p, m)| json!({ "poly": p.to_string(), "multiplicity": m }))
                        .collect::<Vec<_>>(),
                }),
                seed: Some(*seed),
                results: to_value(&record),
                formulas: vec![DEGREE_FORMULA, "compare F = prod A_i^m_i with G = prod A_i"],
            })
        }
    }
}

fn arr_degree(file: &std::path::Path) -> Result<Outcome, CliError> {
    let set = input::load_arrangement(file)?;
    let inputs = json!({ "file": file.display().to_string(), "arrangement": to_value(&set) });
    if set.dim() == 2 {
        let inc = incidence_p2(&set)?;
        let degree = degree_p2_lines(&inc);
        let bound = verify_multiple_point_bound(&inc).ok();
        return Ok(Outcome {
            command: "arr-degree",
            summary: format!("{} lines, {} multiple points, degree {degree}", inc.s, inc.t),
            inputs,
            seed: None,
            results: json!({
                "incidence": to_value(&inc),
                "degree": degree,
                "pair_count_holds": verify_pair_count(&inc),
                "multiple_point_bound_holds": bound,
            }),
            formulas: vec![
                "s(s-1) = sum_i a_i i(i-1)",
                "d = 1 + sum_i (k_i - 1) - t, and d = 0 for a pencil",
                "sum_i (k_i - 1) >= t, with equality only for t = s = 3",
            ],
        });
    }
    let inc = incidence_p3(&set)?;
    let degree = degree_p3(&inc);
    let expansion = blowup_expansion(&inc);
    Ok(Outcome {
        command: "arr-degree",
        summary: format!(
            "{} planes, {} multiple lines, {} multiple points, degree {degree}",
            inc.n,
            inc.lines.len(),
            inc.points.len()
        ),
        inputs,
        seed: None,
        results: json!({
            "incidence": to_value(&inc),
            "degree": degree,
            "blowup_expansion": to_value(&expansion),
            "triple_count_holds": verify_triple_count(&inc),
            "line_identity_holds": verify_line_identity(&inc),
            "all_through_point": all_through_point(&set),
        }),
        formulas: vec![
            "d = N - 1 - sum_p (k_p - 1) + sum_l (a_l - 1)(k_l - 1)",
            "d = ((N-1)H - D)^3 on the blow-up of multiple points and lines",
            "C(N,3) = sum_s C(s,3) t_s - sum_q C(q,3) (sum_s t_sq - t_q(1))",
            "sum_{p in l} (k_p - 1) = (a_l - 1) k_l + N - a_l",
            "d = 0 iff all planes pass through one point",
        ],
    })
}
