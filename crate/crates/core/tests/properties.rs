use cremona_core::algebra::{
    divides, euler_check, int, gcd_multi, resultant_elim, squarefree_part, Polynomial, UniPoly,
};
use cremona_core::arrangement::{
    all_through_point, blowup_expansion, degree_p3, incidence_p2, incidence_p3, verify_line_identity,
    verify_pair_count, verify_triple_count, HyperplaneSet,
};
use cremona_core::legendre::{catalog, dlog, dlog_homogeneity};
use cremona_core::parse::parse_poly_in;
use cremona_core::Scalar;
use proptest::prelude::*;

fn poly_from(nvars: usize, terms: Vec<(Vec<u32>, i64)>) -> Polynomial {
    Polynomial::from_terms(
        nvars,
        terms.into_iter().map(|(e, c)| (e, int(c))),
    )
}

fn poly(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), -5i64..=5),
        0..=max_terms,
    )
    .prop_map(move |t| poly_from(nvars, t))
}

/// Exponent vectors of total degree `d`, via sorted cut points.
fn homogeneous(nvars: usize, d: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=d, nvars - 1), -7i64..=7),
        1..=max_terms,
    )
    .prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .map(|(mut cuts, c)| {
                cuts.sort_unstable();
                let mut e = Vec::with_capacity(nvars);
                let mut prev = 0;
                for &cut in &cuts {
                    e.push(cut - prev);
                    prev = cut;
                }
                e.push(d - prev);
                (e, c)
            })
            .collect();
        poly_from(nvars, terms)
    })
}

fn unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| UniPoly::from_ints(&c))
}

fn point(nvars: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(-9i64..=9, nvars).prop_map(|v| v.into_iter().map(int).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in poly(3, 3, 5), b in poly(3, 3, 5), c in poly(3, 3, 5)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn euler_on_homogeneous(f in (2usize..=4, 0u32..=6).prop_flat_map(|(n, d)| homogeneous(n, d, 6))) {
        prop_assert!(f.is_zero() || euler_check(&f).unwrap());
    }

    #[test]
    fn divisibility(a in poly(3, 2, 4), b in poly(3, 2, 4)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = &a * &b;
        prop_assert!(divides(&a, &ab).unwrap());
        let g = gcd_multi(&[a.clone(), b.clone()]).unwrap();
        if g.is_constant() && !b.is_constant() {
            prop_assert!(!divides(&ab, &a).unwrap());
        }
    }

    #[test]
    fn squarefree_of_square(u in unipoly(6)) {
        prop_assume!(!u.is_zero());
        let sq = &u * &u;
        prop_assert_eq!(
            squarefree_part(&sq).unwrap().degree(),
            squarefree_part(&u).unwrap().degree()
        );
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        a in poly(2, 2, 4),
        b in poly(2, 2, 4),
        c in poly(2, 1, 3),
        share in any::<bool>(),
    ) {
        let (a, b) = if share { (&a * &c, &b * &c) } else { (a, b) };
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assume!(a.involves(1) || b.involves(1));
        let r = resultant_elim(&a, &b, 1).unwrap();
        let g = gcd_multi(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(r.is_zero(), g.involves(1));
        if let (Some(da), Some(db), Some(dr)) = (a.degree(), b.degree(), r.degree()) {
            prop_assert!(dr as u32 <= da * db);
        }
    }

    #[test]
    fn parse_print_round_trip(f in poly(4, 3, 6)) {
        let text = f.to_string();
        let back = parse_poly_in(&text, 4).unwrap();
        prop_assert_eq!(back.poly, f);
    }

    #[test]
    fn line_arrangement_pair_count(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 2..=8)) {
        let Ok(lines) = HyperplaneSet::from_ints(2, &rows) else { return Ok(()) };
        prop_assume!(lines.len() >= 2);
        let inc = incidence_p2(&lines).unwrap();
        prop_assert!(verify_pair_count(&inc));
        let incidences: u32 = inc.points.iter().map(|p| p.multiplicity()).sum();
        prop_assert_eq!(inc.k.iter().sum::<u32>(), incidences);
    }

    #[test]
    fn plane_arrangement_identities(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 3..=7)) {
        let Ok(planes) = HyperplaneSet::from_ints(3, &rows) else { return Ok(()) };
        let inc = incidence_p3(&planes).unwrap();
        let d = degree_p3(&inc);
        prop_assert_eq!(blowup_expansion(&inc).total, d);
        prop_assert!(verify_triple_count(&inc));
        prop_assert!(verify_line_identity(&inc));
        prop_assert_eq!(all_through_point(&planes), d == 0);
        prop_assert!(inc.lines.iter().all(|l| l.k() >= 2));
        prop_assert!(inc.points.iter().all(|p| p.k() >= 3));
    }

    #[test]
    fn dlog_homogeneity_and_euler(
        entry in 0usize..9,
        v in point(15),
        num in -9i64..=9,
        den in 1i64..=9,
    ) {
        prop_assume!(num != 0);
        let e = &catalog()[entry];
        let v = &v[..e.nvars];
        let w = dlog(&e.f, v);
        prop_assume!(w.defined);
        let lambda = Scalar::new(num.into(), den.into());
        prop_assert!(dlog_homogeneity(&e.f, v, &lambda));
        let pairing: Scalar = v.iter().zip(&w.components).map(|(a, b)| a * b).sum();
        prop_assert_eq!(pairing, int(i64::from(e.degree)));
    }
}

#[test]
fn squarefree_examples() {
    let u = UniPoly::from_ints(&[0, 0, 0, 1]);
    assert_eq!(squarefree_part(&u).unwrap().degree(), Some(1));
    assert!(squarefree_part(&UniPoly::zero()).is_err());
}
