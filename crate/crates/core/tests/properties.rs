use eqcohom_core::algebra::{rat, GradedPolynomial, Matrix, PoincareSeries};
use eqcohom_core::cohomology::{IntervalModel, IntervalSpec, Leg, SubgroupDatum};
use eqcohom_core::groups::{close_group, weyl_standard, MatrixGroup, WeylType, DEFAULT_CAP};
use eqcohom_core::invariants::{act, molien, InvariantRing};
use proptest::prelude::*;

fn poly(nvars: usize, terms: Vec<(Vec<u32>, i64)>) -> GradedPolynomial {
    GradedPolynomial::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, rat(c))))
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = GradedPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -4i64..=4), 0..5)
        .prop_map(move |terms| poly(nvars, terms))
}

fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| Matrix::from_vec(n, n, v.into_iter().map(rat).collect()))
}

fn groups() -> Vec<MatrixGroup> {
    vec![
        weyl_standard(WeylType::A, 3).unwrap(),
        weyl_standard(WeylType::A, 4).unwrap(),
        weyl_standard(WeylType::B, 2).unwrap(),
        weyl_standard(WeylType::D, 3).unwrap(),
        weyl_standard(WeylType::U, 3).unwrap(),
        close_group(2, &[Matrix::from_ints(&[&[0, 1], &[-1, -1]])], DEFAULT_CAP).unwrap(),
        close_group(2, &[Matrix::from_ints(&[&[0, -1], &[1, 0]])], DEFAULT_CAP).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn substitution_is_a_ring_map(g in arb_matrix(2), p in arb_poly(2), q in arb_poly(2)) {
        prop_assert_eq!(act(&g, &p.mul(&q)), act(&g, &p).mul(&act(&g, &q)));
        prop_assert_eq!(act(&g, &p.add(&q)), act(&g, &p).add(&act(&g, &q)));
        prop_assert_eq!(act(&Matrix::identity(2), &p), p);
    }

    #[test]
    fn action_composes(g in arb_matrix(2), h in arb_matrix(2), p in arb_poly(2)) {
        // Row i of g is the image of x_i, so substituting g and then h is g h.
        let gh = g.mul(&h).unwrap();
        prop_assert_eq!(act(&h, &act(&g, &p)), act(&gh, &p));
    }

    #[test]
    fn reynolds_lands_in_invariants((i, p) in (0usize..7).prop_flat_map(|i| (Just(i), arb_poly(groups()[i].rank())))) {
        let ring = InvariantRing::new(groups()[i].clone());
        prop_assert!(ring.is_invariant(&ring.reynolds(&p)));
    }

    #[test]
    fn series_inverse_round_trips(coeffs in prop::collection::vec(-3i64..=3, 1..12)) {
        let mut c = coeffs;
        c[0] = 1;
        let s = PoincareSeries::from_ints(15, &c);
        let inv = s.inverse().unwrap();
        prop_assert_eq!(s.mul(&inv), PoincareSeries::one(15));
    }
}

#[test]
fn molien_matches_invariant_dimensions() {
    for g in groups() {
        let series = molien(&g, 24);
        let ring = InvariantRing::new(g);
        for d in 0..=24 {
            assert_eq!(series.coeff(d), rat(ring.dim(d) as i64), "degree {d}");
        }
    }
}

fn leg(weyl: MatrixGroup, embedding: Matrix, sphere_dim: usize) -> Leg {
    Leg {
        group: SubgroupDatum::new("K", weyl),
        embedding,
        sphere_dim,
        orientable: true,
    }
}

/// even(d) - K₋(d) - K₊(d) + H(d) - odd(d+1) = 0.
fn assert_exact(spec: IntervalSpec, n: usize) {
    let model = IntervalModel::new(spec).unwrap();
    let p_h = molien(model.h_ring().group(), n);
    let p_m = molien(model.leg_ring(eqcohom_core::cohomology::Side::Minus).group(), n);
    let p_p = molien(model.leg_ring(eqcohom_core::cohomology::Side::Plus).group(), n);
    for d in 0..=n {
        let defect = rat(model.even_dim(d) as i64) - p_m.coeff(d) - p_p.coeff(d) + p_h.coeff(d)
            - rat(model.odd_dim(d + 1) as i64);
        assert_eq!(defect, rat(0), "degree {d}");
    }
}

#[test]
fn mayer_vietoris_exactness() {
    let t2 = || SubgroupDatum::new("T2", MatrixGroup::trivial(2));
    let a3 = weyl_standard(WeylType::A, 3).unwrap();
    let swap = close_group(2, &[Matrix::from_ints(&[&[0, 1], &[1, 0]])], DEFAULT_CAP).unwrap();
    assert_exact(
        IntervalSpec {
            name: "t2-a3".into(),
            h: t2(),
            minus: leg(swap, Matrix::identity(2), 2),
            plus: leg(a3, Matrix::identity(2), 6),
            ambient: None,
        },
        24,
    );
    let su2 = weyl_standard(WeylType::A, 2).unwrap();
    assert_exact(
        IntervalSpec {
            name: "u1-u2".into(),
            h: SubgroupDatum::new("U1", MatrixGroup::trivial(1)),
            minus: leg(su2, Matrix::identity(1), 2),
            plus: leg(weyl_standard(WeylType::U, 2).unwrap(), Matrix::from_ints(&[&[1, 1]]), 3),
            ambient: None,
        },
        24,
    );
}
