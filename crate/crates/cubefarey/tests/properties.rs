//! Randomized invariants: field arithmetic laws, orbit invariants, the
//! Pisot decision against a floating-point root finder, letter-layer
//! identities, and serialization round trips.

use cubefarey::analysis::{self, charpoly3, detect_period, is_pisot, is_primitive, period_matrix};
use cubefarey::contfrac::{
    c_matrix, digits_to_cfword, evaluate_cf, letter_word, reduce_finite, word_product, CfDigit,
};
use cubefarey::farey::{
    apply_t, expand, frac_action, mat_det, mat_mul, Digit, Mat3, PointPair, ValueExponent,
    ALL_DIGITS,
};
use cubefarey::numberfield::{CubicField, FieldDescription, FieldElement, Rat};
use cubefarey::ratstr;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn ri(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

fn rq(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

#[derive(Clone, Copy, Debug)]
enum FieldId {
    Cbrt2,
    Simplex(u8),
    TotallyReal,
}

impl FieldId {
    fn build(self) -> CubicField {
        match self {
            FieldId::Cbrt2 => {
                CubicField::new([ri(-2), ri(0), ri(0)], ri(1), ri(2)).unwrap()
            }
            FieldId::Simplex(m) => CubicField::largest_real_root([
                ri(-1),
                ri(0),
                ri(-(m as i64)),
            ])
            .unwrap(),
            FieldId::TotallyReal => {
                CubicField::new([ri(1), ri(-5), ri(0)], ri(1), ri(3)).unwrap()
            }
        }
    }
}

fn field_id() -> impl Strategy<Value = FieldId> {
    prop_oneof![
        Just(FieldId::Cbrt2),
        (1u8..=4).prop_map(FieldId::Simplex),
        Just(FieldId::TotallyReal),
    ]
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=6).prop_map(|(n, d)| rq(n, d))
}

fn coords() -> impl Strategy<Value = [Rat; 3]> {
    [small_rat(), small_rat(), small_rat()]
}

prop_compose! {
    fn element()(id in field_id(), c in coords()) -> FieldElement {
        id.build().element(c)
    }
}

prop_compose! {
    fn element_pair()(id in field_id(), a in coords(), b in coords()) -> (FieldElement, FieldElement) {
        let f = id.build();
        (f.element(a), f.element(b))
    }
}

fn interior_point(id: FieldId, raw: &[[Rat; 3]; 3]) -> Option<PointPair> {
    let f = id.build();
    let pos = |c: &[Rat; 3]| {
        f.element([
            c[0].abs() + rq(1, 17),
            c[1].abs(),
            c[2].abs(),
        ])
    };
    let g1 = pos(&raw[0]);
    let g2 = pos(&raw[1]);
    let g3 = pos(&raw[2]);
    let s = (&(&g1 + &g2) + &g3).inv().ok()?;
    PointPair::new(&g1 * &s, &g2 * &s).ok()
}

// ---------------------------------------------------------------------------
// Field arithmetic laws.
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_multiplicative((a, b) in element_pair()) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn inverse_multiplies_to_one(a in element()) {
        prop_assume!(!a.norm().is_zero());
        let inv = a.inv().unwrap();
        prop_assert_eq!(&a * &inv, a.field().one());
    }

    #[test]
    fn squares_are_nonnegative(a in element()) {
        prop_assert!((&a * &a).sign_at_root().unwrap() >= 0);
    }

    #[test]
    fn minimal_polynomial_annihilates(a in element()) {
        let cs = a.min_poly().coefficients();
        let f = a.field();
        let mut acc = f.zero();
        let mut power = f.one();
        for c in cs {
            acc = &acc + &power.scale(&c);
            power = &power * &a;
        }
        prop_assert_eq!(acc, f.zero());
    }

    #[test]
    fn floor_brackets_the_value(a in element()) {
        let fl = a.floor_at_root().unwrap();
        let f = a.field();
        let low = &a - &f.rational(Rat::from(fl.clone()));
        let high = &a - &f.rational(Rat::from(fl + 1));
        prop_assert!(low.sign_at_root().unwrap() >= 0);
        prop_assert!(high.sign_at_root().unwrap() < 0);
    }

    #[test]
    fn rational_strings_round_trip(r in small_rat()) {
        prop_assert_eq!(ratstr::parse(&ratstr::to_string(&r)).unwrap(), r);
    }

    #[test]
    fn field_description_round_trips(id in field_id()) {
        let f = id.build();
        let json = serde_json::to_string(&f.description()).unwrap();
        let back: FieldDescription = serde_json::from_str(&json).unwrap();
        let g = CubicField::from_description(&back).unwrap();
        prop_assert!(f.same_embedding(&g));
    }
}

// ---------------------------------------------------------------------------
// Fractional-linear action.
// ---------------------------------------------------------------------------

fn digit_pair() -> impl Strategy<Value = (Digit, Digit)> {
    ((0usize..6), (0usize..6)).prop_map(|(a, b)| (ALL_DIGITS[a], ALL_DIGITS[b]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matrix_action_composes((a, b) in element_pair(), (d1, d2) in digit_pair()) {
        use cubefarey::farey::m_matrix;
        let m1 = m_matrix(d1);
        let m2 = m_matrix(d2);
        let once = frac_action(&m2, &a, &b)
            .and_then(|(x, y)| frac_action(&m1, &x, &y));
        let combined = frac_action(&mat_mul(&m1, &m2), &a, &b);
        match (once, combined) {
            (Ok((x1, y1)), Ok((x2, y2))) => {
                prop_assert_eq!(x1, x2);
                prop_assert_eq!(y1, y2);
            }
            (Err(_), Err(_)) => {}
            // The composed action can survive an intermediate blow-up; the
            // two-step route must not invent values.
            (Err(_), Ok(_)) => {}
            (Ok(_), Err(_)) => prop_assert!(false, "composition lost a defined value"),
        }
    }
}

// ---------------------------------------------------------------------------
// Orbit invariants.
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn orbits_keep_their_invariants(id in field_id(), raw in [coords(), coords(), coords()]) {
        let Some(point) = interior_point(id, &raw) else {
            return Ok(());
        };
        let r = ValueExponent::default();
        let e = expand(&point, r, 25).unwrap();
        for conv in &e.convergents {
            prop_assert_eq!(mat_det(conv.matrix()).abs(), BigInt::one());
            prop_assert!(conv.contains(&point).unwrap());
        }
        for k in 1..e.digits.len() {
            prop_assert!(!e.digits[k - 1].forbidden_successors().contains(&e.digits[k]));
        }
        // replay: the checked single-step map reproduces the recorded states
        for (k, eps) in e.digits.iter().enumerate() {
            let next = apply_t(&e.states[k], *eps, r).unwrap();
            prop_assert_eq!(&next, &e.states[k + 1]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn periodic_loops_have_unimodular_primitive_matrices(m in 1i64..=8) {
        let c = [BigInt::from(-1), BigInt::from(0), BigInt::from(-m)];
        let point = analysis::family_point(&c).unwrap().unwrap();
        let res = detect_period(&point, ValueExponent::default(), 10_000).unwrap();
        prop_assert!(res.found());
        let pm = period_matrix(&res).unwrap();
        prop_assert_eq!(pm.charpoly[0].abs(), BigInt::one());
        prop_assert!(is_primitive(&pm.matrix).unwrap());
        // eigenvalue lives in the same field and solves its charpoly
        let f = point.field();
        let lam = &pm.eigenvalue;
        let three = [
            f.rational(Rat::from(pm.charpoly[0].clone())),
            f.rational(Rat::from(pm.charpoly[1].clone())),
            f.rational(Rat::from(pm.charpoly[2].clone())),
        ];
        let value = &(&(&lam.pow(3) + &(&lam.pow(2) * &three[2])) + &(lam * &three[1])) + &three[0];
        prop_assert_eq!(value, f.zero());
    }
}

// ---------------------------------------------------------------------------
// Pisot decision versus a floating-point root finder.
// ---------------------------------------------------------------------------

/// All real roots of x^3 + c2 x^2 + c1 x + c0 by sign-change bisection.
fn real_roots_f64(c0: f64, c1: f64, c2: f64) -> Vec<f64> {
    let eval = |x: f64| ((x + c2) * x + c1) * x + c0;
    let bound = 1.0 + c0.abs().max(c1.abs()).max(c2.abs());
    // critical points of the derivative 3x^2 + 2 c2 x + c1
    let mut cuts = vec![-bound, bound];
    let disc = c2 * c2 - 3.0 * c1;
    if disc > 0.0 {
        cuts.push((-c2 - disc.sqrt()) / 3.0);
        cuts.push((-c2 + disc.sqrt()) / 3.0);
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut roots = Vec::new();
    for w in cuts.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        if eval(lo) == 0.0 {
            roots.push(lo);
            continue;
        }
        if (eval(lo) < 0.0) == (eval(hi) < 0.0) {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (eval(mid) < 0.0) == (eval(lo) < 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    roots
}

/// Float replica of the Pisot definition, with the margin of confidence it
/// still has; tiny margins are discarded by the caller.
fn pisot_by_float(c0: i64, c1: i64, c2: i64) -> Option<bool> {
    // monic integer cubic: rational roots are integer divisors of c0
    if c0 == 0 {
        return Some(false);
    }
    let eval_int = |x: i64| ((x + c2) * x + c1) * x + c0;
    for d in 1..=c0.abs() {
        if c0 % d == 0 && (eval_int(d) == 0 || eval_int(-d) == 0) {
            return Some(false);
        }
    }
    let roots = real_roots_f64(c0 as f64, c1 as f64, c2 as f64);
    let margin = 1e-6;
    match roots.len() {
        1 => {
            let lam = roots[0];
            // remaining conjugate pair: modulus^2 = |c0| / |lam|
            let pair_sq = (c0 as f64 / lam).abs();
            if (lam - 1.0).abs() < margin || (pair_sq - 1.0).abs() < margin {
                return None;
            }
            Some(lam > 1.0 && pair_sq < 1.0)
        }
        3 => {
            let mut sorted = roots.clone();
            sorted.sort_by(|a, b| b.abs().partial_cmp(&a.abs()).unwrap());
            let lam = sorted[0];
            if sorted.iter().any(|t| (t.abs() - 1.0).abs() < margin) {
                return None;
            }
            if (sorted[0].abs() - sorted[1].abs()).abs() < margin {
                return None;
            }
            Some(lam > 1.0 && sorted[1].abs() < 1.0 && sorted[2].abs() < 1.0)
        }
        _ => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn pisot_matches_float_oracle(c0 in -9i64..=9, c1 in -9i64..=9, c2 in -9i64..=9) {
        prop_assume!(c0 != 0);
        let Some(expected) = pisot_by_float(c0, c1, c2) else {
            return Ok(());
        };
        let cert = is_pisot(&[BigInt::from(c0), BigInt::from(c1), BigInt::from(c2)]);
        prop_assert_eq!(cert.is_pisot(), expected, "c = ({}, {}, {})", c0, c1, c2);
    }
}

// ---------------------------------------------------------------------------
// Letter layer.
// ---------------------------------------------------------------------------

fn cf_word() -> impl Strategy<Value = Vec<CfDigit>> {
    proptest::collection::vec((0u64..=3, 0u64..=3).prop_map(|(a, b)| CfDigit::new(a, b)), 1..=14)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn letter_words_triple_the_length(digits in proptest::collection::vec(0usize..6, 0..=30)) {
        let ds: Vec<Digit> = digits.iter().map(|&k| ALL_DIGITS[k]).collect();
        let letters = digits_to_cfword(&ds);
        prop_assert_eq!(letters.len(), 3 * ds.len());
        // and the letter product equals the digit-matrix product
        let lhs = letters.iter().fold(
            cubefarey::farey::mat_identity(),
            |acc: Mat3, &l| mat_mul(&acc, &c_matrix(l)),
        );
        let rhs = ds.iter().fold(
            cubefarey::farey::mat_identity(),
            |acc: Mat3, &d| mat_mul(&acc, &cubefarey::farey::m_matrix(d)),
        );
        prop_assert_eq!(lhs, rhs);
        for d in ds {
            prop_assert_eq!(letter_word(d).len(), 3);
        }
    }

    #[test]
    fn reduction_preserves_products(word in cf_word()) {
        let reduced = reduce_finite(&word);
        prop_assert!(reduced.len() <= word.len());
        prop_assert_eq!(word_product(&reduced), word_product(&word));
        if let Ok(v) = evaluate_cf(&word) {
            prop_assert_eq!(evaluate_cf(&reduced).unwrap(), v);
        }
    }
}

// ---------------------------------------------------------------------------
// Patch serialization.
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn patch_json_round_trips(id in field_id(), n in 0usize..6, raw in [coords(), coords(), coords()]) {
        use cubefarey::stepped::{export_json, grow_from_seed, Direction, PatchDocument, Seed};
        let Some(point) = interior_point(id, &raw) else {
            return Ok(());
        };
        let e = expand(&point, ValueExponent::default(), n).unwrap();
        let dir = Direction::new(&point);
        let patch = grow_from_seed(&e.digits, Seed::UnitVectors, &dir).unwrap();
        let json = export_json(&patch, &dir).unwrap();
        let doc: PatchDocument = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(doc.faces.len(), patch.len());
        let again = export_json(&patch, &dir).unwrap();
        prop_assert_eq!(json, again);
    }
}

// ---------------------------------------------------------------------------
// Determinants and characteristic polynomials of digit products.
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn digit_products_are_unimodular(digits in proptest::collection::vec(0usize..6, 1..=12)) {
        let product = digits.iter().fold(
            cubefarey::farey::mat_identity(),
            |acc: Mat3, &k| mat_mul(&acc, &cubefarey::farey::m_matrix(ALL_DIGITS[k])),
        );
        prop_assert_eq!(mat_det(&product).abs(), BigInt::one());
        let cp = charpoly3(&product);
        prop_assert_eq!(cp[0].abs(), BigInt::one());
    }
}
