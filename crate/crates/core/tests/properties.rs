use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use twocubes::identities::{cube, quadratic_residual, solve_pair_small};
use twocubes::oracle::divisor_representations;
use twocubes::{
    alpha_solve, classify_family, cube_sum_consecutive, discriminant, mirror, naive_representations,
    parametric_row, scale_representation, solve_pair, verify_record, CubeSumRecord, FamilyId,
    Representation,
};

const BUDGET: u64 = 10_000_000;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `B^2 - 4AC` of `A n^2 + B n + C` with the coefficients written out directly.
fn discriminant_from_coefficients(a: i64, b: i64) -> BigInt {
    let (a, b) = (big(a), big(b));
    let lead = (&a + &b - 1) * 3;
    let mid = (&a * &a + &b * &b - 1) * 3;
    let constant = &a * &a * &a + &b * &b * &b - 1;
    &mid * &mid - lead * constant * 4
}

/// Integer roots by scanning `n` against the cube identity directly.
fn roots_by_scan(a: i64, b: i64, lo: i64, hi: i64) -> Vec<i64> {
    let c = |v: i128| v * v * v;
    (lo..=hi)
        .filter(|&n| {
            let (n, a, b) = (n as i128, a as i128, b as i128);
            c(n) + c(n + 1) == c(n + a) + c(n + b)
        })
        .collect()
}

proptest! {
    #[test]
    fn discriminant_matches_coefficients(a in -5000i64..5000, b in -5000i64..5000) {
        prop_assert_eq!(discriminant(&big(a), &big(b)), discriminant_from_coefficients(a, b));
    }

    #[test]
    fn roots_are_exact_solutions(a in -300i64..300, b in -300i64..300) {
        let sol = solve_pair(&big(a), &big(b));
        for (_, n) in &sol.roots {
            prop_assert!(quadratic_residual(&big(a), &big(b), n).is_zero());
            let r = CubeSumRecord::new(n.clone(), a, b);
            if !r.is_trivial() {
                prop_assert!(verify_record(&r));
            }
            let s = sol.discriminant.sqrt();
            prop_assert_eq!(&s * &s, sol.discriminant.clone());
        }
    }

    #[test]
    fn roots_agree_with_direct_scan(a in -40i64..40, b in -40i64..40) {
        prop_assume!(a + b != 1);
        // Cauchy bound: |n| <= 1 + max(|B|, |C|) / |A| < 50_000 here
        let mut found: Vec<i64> = solve_pair(&big(a), &big(b))
            .roots
            .iter()
            .map(|(_, n)| n.to_i64().unwrap())
            .collect();
        found.sort();
        found.dedup();
        prop_assert_eq!(found, roots_by_scan(a, b, -50_000, 50_000));
    }

    #[test]
    fn small_path_is_bit_identical(a in any::<i64>(), b in any::<i64>()) {
        prop_assert_eq!(solve_pair_small(a, b), solve_pair(&big(a), &big(b)).roots);
    }

    #[test]
    fn small_path_is_bit_identical_near_roots(a in 1i64..5000, b in -5000i64..-1) {
        prop_assert_eq!(solve_pair_small(a, b), solve_pair(&big(a), &big(b)).roots);
    }

    #[test]
    fn alpha_form_agrees_with_general_form(alpha in -20000i64..20000) {
        prop_assert_eq!(alpha_solve(&big(alpha)), solve_pair(&big(3), &big(alpha)).roots);
    }

    #[test]
    fn scaling_preserves_identity(x in -10_000i64..10_000, y in -10_000i64..10_000, k in 1i64..1000) {
        let rep = Representation::new(x, y);
        let scaled = scale_representation(&rep, &big(k)).unwrap();
        prop_assert_eq!(scaled.value(), rep.value() * big(k).pow(3));
    }

    #[test]
    fn oracles_agree(n in 1i64..2_000_000) {
        let d = divisor_representations(&big(n), BUDGET).unwrap();
        let s = naive_representations(&big(n)).unwrap();
        prop_assert_eq!(&d, &s);
        for r in &d.reps {
            prop_assert_eq!(r.value(), big(n));
            prop_assert!(r.x >= r.y && r.x.is_positive());
            // no representation with (x+y)^3 > 4N
            let s = &r.x + &r.y;
            prop_assert!(&s * &s * &s <= big(4 * n));
        }
    }

    #[test]
    fn mirror_is_an_involution(i in 1u64..300, second in any::<bool>()) {
        let family = if second { FamilyId::Two } else { FamilyId::One };
        let r = parametric_row(family, i).unwrap().record();
        let m = mirror(&r).unwrap();
        prop_assert!(verify_record(&m));
        prop_assert_eq!(&m.sum, &-&r.sum);
        prop_assert!(quadratic_residual(&m.a, &m.b, &m.n).is_zero());
        let back = mirror(&m).unwrap();
        prop_assert_eq!((back.n, back.a, back.b), (r.n, r.a, r.b));
    }

    #[test]
    fn family_rows_round_trip_through_classifier(i in 1u64..2000, second in any::<bool>()) {
        let family = if second { FamilyId::Two } else { FamilyId::One };
        let row = parametric_row(family, i).unwrap();
        prop_assert_eq!(classify_family(&row.record()).unwrap(), Some((family, i)));
    }
}

#[test]
fn family_a_relations() {
    for i in 1..=200u64 {
        let one = parametric_row(FamilyId::One, i).unwrap();
        let beta = &one.beta;
        let a = &one.x - &one.n;
        assert_eq!(a, (beta - 1) * &one.n + beta * beta + beta + 1, "family 1 i={i}");
        assert_eq!(one.y, -&one.x + beta);

        let two = parametric_row(FamilyId::Two, i).unwrap();
        let beta = &two.beta;
        let a = &two.x - &two.n;
        let num: BigInt = (beta - 3) * &two.n + beta * 2;
        assert!((&num % 3u32).is_zero(), "family 2 i={i}");
        assert_eq!(a, num / 3u32);
        assert_eq!(two.y, -&two.x + beta);
    }
}

#[test]
fn closed_form_sum_matches_cubes() {
    for family in FamilyId::ALL {
        for i in 1..=300u64 {
            let row = parametric_row(family, i).unwrap();
            assert_eq!(row.sum, cube_sum_consecutive(&row.n));
            assert_eq!(row.sum, cube(&row.x) + cube(&row.y));
        }
    }
}
