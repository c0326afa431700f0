mod oracles;

use knotform::cli::{cmd_invariants, cmd_obstruct, Knot, ObstructInput, ObstructOutput, InvariantsReport};
use knotform::diagram::checkerboard;
use knotform::obstructions::{
    crosscap2_candidates, gordian_lower_bound, klein_bottle_test, moebius_b4_test, residue,
    sharp_gordian_lower_bound, Definiteness,
};
use knotform::surfaces::random_sstar_walk;
use knotform::{
    arf, gl_signature, goeritz, knot_determinant, seifert_matrix_from_braid, Braid, IntMatrix,
    SeifertMatrix, SurfaceState, SymIntMatrix,
};
use num_bigint::BigInt;
use oracles::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sym_matrix(max_dim: usize) -> impl Strategy<Value = SymIntMatrix> {
    (0..=max_dim).prop_flat_map(|n| {
        proptest::collection::vec(-6i64..=6, n * (n + 1) / 2).prop_map(move |v| {
            let mut it = v.into_iter();
            SymIntMatrix::from_upper(n, |_, _| it.next().unwrap())
        })
    })
}

fn knot_braid() -> impl Strategy<Value = Braid> {
    any::<u64>().prop_map(|seed| random_knot_braids(1, seed).remove(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn congruence_preserves_invariants(m in sym_matrix(5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_unimodular(m.dim(), &mut rng);
        let c = m.congruent(&u);
        prop_assert_eq!(c.inertia(), m.inertia());
        prop_assert_eq!(c.determinant(), m.determinant());
        prop_assert_eq!(c.smith_invariants(), m.smith_invariants());
    }

    #[test]
    fn direct_sum_is_additive(a in sym_matrix(4), b in sym_matrix(4)) {
        let s = a.direct_sum(&b);
        let (ia, ib, is) = (a.inertia(), b.inertia(), s.inertia());
        prop_assert_eq!(is.positive, ia.positive + ib.positive);
        prop_assert_eq!(is.negative, ia.negative + ib.negative);
        prop_assert_eq!(is.zero, ia.zero + ib.zero);
        prop_assert_eq!(s.signature(), a.signature() + b.signature());
        prop_assert_eq!(s.determinant(), a.determinant() * b.determinant());
    }

    #[test]
    fn forms_match_oracles(m in sym_matrix(5)) {
        let r = m.to_rows();
        let i = m.inertia();
        prop_assert_eq!(charpoly_inertia(&r), (i.positive, i.negative, i.zero));
        prop_assert_eq!(m.determinant(), BigInt::from(cofactor_det(&r)));
        let smith: Vec<BigInt> = smith_by_minors(&r).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(m.smith_invariants(), smith);
    }

    #[test]
    fn arf_is_basis_invariant(b in knot_braid(), seed in any::<u64>()) {
        let s = seifert_matrix_from_braid(&b).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_unimodular(s.dim(), &mut rng);
        let moved = u.mul(s.matrix()).mul(&u.transpose());
        let t = SeifertMatrix::from_matrix(moved).unwrap();
        prop_assert_eq!(arf(&t).unwrap(), arf(&s).unwrap());
    }

    #[test]
    fn arf_matches_determinant_mod_8(b in knot_braid()) {
        let s = seifert_matrix_from_braid(&b).unwrap();
        let det = knot_determinant(&b.to_diagram().unwrap()).unwrap();
        prop_assert_eq!(arf(&s).unwrap(), arf_from_det(det));
    }

    #[test]
    fn seifert_form_is_unimodular(b in knot_braid()) {
        let s = seifert_matrix_from_braid(&b).unwrap();
        let anti: IntMatrix = s.antisymmetrized();
        prop_assert_eq!(cofactor_det(&anti.to_rows()), 1);
    }

    #[test]
    fn mirror_and_reverse(b in knot_braid()) {
        let d = b.to_diagram().unwrap();
        let sigma = gl_signature(&d).unwrap();
        prop_assert_eq!(gl_signature(&d.mirror()).unwrap(), -sigma);
        prop_assert_eq!(gl_signature(&d.reverse()).unwrap(), sigma);
        prop_assert_eq!(knot_determinant(&d.mirror()).unwrap(), knot_determinant(&d).unwrap());
    }

    #[test]
    fn goeritz_matches_oracle_determinant(b in knot_braid()) {
        let d = b.to_diagram().unwrap();
        let (canonical, dual) = checkerboard(&d).unwrap();
        let det = knot_determinant(&d).unwrap() as i128;
        for col in [&canonical, &dual] {
            let g = goeritz(&d, col, 0).unwrap();
            prop_assert_eq!(cofactor_det(&g.reduced.to_rows()).abs(), det);
        }
    }

    #[test]
    fn residue_depends_on_sigma_mod_8(sigma in -40i64..=40, arf_v in 0u8..=1, k in -5i64..=5) {
        let shifted = sigma + 8 * k;
        prop_assert_eq!(residue(shifted, arf_v), residue(sigma, arf_v));
        prop_assert_eq!(moebius_b4_test(shifted, arf_v).verdict, moebius_b4_test(sigma, arf_v).verdict);
        for def in [Definiteness::Positive, Definiteness::Negative] {
            prop_assert_eq!(
                klein_bottle_test(shifted, arf_v, def).verdict,
                klein_bottle_test(sigma, arf_v, def).verdict
            );
        }
    }

    #[test]
    fn distance_bounds_are_ordered(a in -60i64..=60, b in -60i64..=60) {
        let g = gordian_lower_bound(a, b);
        let s = sharp_gordian_lower_bound(a, b);
        prop_assert!(s <= g);
        prop_assert_eq!(g, gordian_lower_bound(b, a));
        prop_assert!(2 * g >= a.abs_diff(b));
    }

    #[test]
    fn crosscap_search_grows_with_bound(sigma in -4i64..=4, det in 1u64..=30, bound in 1i64..=8) {
        let small = crosscap2_candidates(sigma, det, bound, false);
        let large = crosscap2_candidates(sigma, det, bound + 1, false);
        for t in &small {
            prop_assert!(large.contains(t));
            prop_assert_eq!(t.determinant().unsigned_abs(), det);
            prop_assert_eq!(binary_signature(t.l, t.m, t.n) - (t.l + 2 * t.m + t.n), sigma);
        }
        let cyclic = crosscap2_candidates(sigma, det, bound, true);
        prop_assert!(cyclic.iter().all(|t| small.contains(t)));
    }

    #[test]
    fn obstruct_report_round_trips(
        sigma in -20i64..=20,
        arf_v in proptest::option::of(0u8..=1),
        det in proptest::option::of(1u64..=40),
    ) {
        let out = cmd_obstruct(&ObstructInput { signature: sigma, arf: arf_v, determinant: det, bound: 6, ..Default::default() });
        let text = serde_json::to_string(&out).unwrap();
        prop_assert_eq!(serde_json::from_str::<ObstructOutput>(&text).unwrap(), out);
    }

    #[test]
    fn invariants_report_round_trips(b in knot_braid()) {
        let knot = Knot::from_braid(b).unwrap();
        let r = cmd_invariants(&knot, Default::default(), 0).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<InvariantsReport>(&text).unwrap(), r);
    }

    #[test]
    fn walk_state_round_trips(m in sym_matrix(4), half_euler in -5i64..=5, seed in any::<u64>()) {
        let st = SurfaceState::new(m, 2 * half_euler).unwrap();
        let end = random_sstar_walk(&st, 50, seed);
        prop_assert_eq!(end.conserved(), st.conserved());
        let text = serde_json::to_string(&end).unwrap();
        prop_assert_eq!(serde_json::from_str::<SurfaceState>(&text).unwrap(), end);
    }
}
