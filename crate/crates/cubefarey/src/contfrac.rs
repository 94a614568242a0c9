//! Letter layer: digit strings rewritten as two-dimensional continued
//! fractions over column vectors (a, b), their reduction rule, and exact
//! evaluation through products of companion-style matrices.

use crate::error::{Error, Result};
use crate::farey::{
    a_matrix, frac_action, m_matrix, mat_identity, mat_mul, s_inv_matrix, s_matrix, Digit, Mat3,
    PointPair,
};
use crate::numberfield::{FieldElement, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// One continued-fraction letter: a column vector of nonnegative integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CfDigit {
    pub a: u64,
    pub b: u64,
}

pub const Z: CfDigit = CfDigit { a: 0, b: 0 };

impl CfDigit {
    pub fn new(a: u64, b: u64) -> CfDigit {
        CfDigit { a, b }
    }

    fn merged(self, other: CfDigit) -> CfDigit {
        CfDigit {
            a: self.a + other.a,
            b: self.b + other.b,
        }
    }
}

impl fmt::Display for CfDigit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

/// A letter word, either finite or eventually periodic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CfWord {
    Finite(Vec<CfDigit>),
    Periodic { pre: Vec<CfDigit>, per: Vec<CfDigit> },
}

impl fmt::Display for CfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |w: &[CfDigit]| {
            w.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            CfWord::Finite(w) => write!(f, "{}", join(w)),
            CfWord::Periodic { pre, per } => {
                if pre.is_empty() {
                    write!(f, "| {}", join(per))
                } else {
                    write!(f, "{} | {}", join(pre), join(per))
                }
            }
        }
    }
}

/// The three-letter word of a digit.
pub fn letter_word(d: Digit) -> [CfDigit; 3] {
    let u = CfDigit::new(1, 0);
    let v = CfDigit::new(0, 1);
    match (d.i, d.j) {
        (1, 2) => [Z, Z, v],
        (0, 1) => [Z, v, Z],
        (0, 2) => [Z, Z, u],
        (2, 1) => [Z, u, Z],
        (1, 0) => [u, Z, Z],
        (2, 0) => [v, Z, Z],
        _ => unreachable!(),
    }
}

/// Concatenates the per-digit words; output is three letters per digit.
pub fn digits_to_cfword(digits: &[Digit]) -> Vec<CfDigit> {
    let mut out = Vec::with_capacity(3 * digits.len());
    for &d in digits {
        out.extend_from_slice(&letter_word(d));
    }
    out
}

/// The matrix of one letter.
pub fn c_matrix(d: CfDigit) -> Mat3 {
    let mut m: Mat3 = Default::default();
    m[0][2] = BigInt::from(1);
    m[1][0] = BigInt::from(1);
    m[1][2] = BigInt::from(d.a);
    m[2][1] = BigInt::from(1);
    m[2][2] = BigInt::from(d.b);
    m
}

pub fn word_product(word: &[CfDigit]) -> Mat3 {
    word.iter()
        .fold(mat_identity(), |acc, &d| mat_mul(&acc, &c_matrix(d)))
}

fn reduce_once(word: &mut Vec<CfDigit>) -> bool {
    for i in 0..word.len().saturating_sub(3) {
        if word[i + 1] == Z && word[i + 2] == Z {
            let m = word[i].merged(word[i + 3]);
            word.splice(i..i + 4, [m]);
            return true;
        }
    }
    false
}

/// Exhaustively applies the leftmost occurrence of the rewrite
/// x (0,0) (0,0) y -> x+y. Zeros at the start of the word are kept unless a
/// later letter closes the pattern.
pub fn reduce_finite(word: &[CfDigit]) -> Vec<CfDigit> {
    let mut w = word.to_vec();
    while reduce_once(&mut w) {}
    w
}

/// Reduces an eventually periodic digit word to letter normal form.
pub fn reduce_periodic(pre: &[Digit], per: &[Digit]) -> Result<CfWord> {
    reduce_periodic_letters(&digits_to_cfword(pre), &digits_to_cfword(per))
}

/// Reduces a word of either shape.
pub fn reduce_cfword(word: &CfWord) -> Result<CfWord> {
    match word {
        CfWord::Finite(w) => Ok(CfWord::Finite(reduce_finite(w))),
        CfWord::Periodic { pre, per } => reduce_periodic_letters(pre, per),
    }
}

/// Normal form of an eventually periodic letter word. The word is unfolded
/// for two different repeat counts; the longer reduction must be the
/// shorter one with copies of a single block inserted, and that block is
/// the reduced period. A third unfolding cross-checks the answer.
fn reduce_periodic_letters(lp: &[CfDigit], lq: &[CfDigit]) -> Result<CfWord> {
    if lq.is_empty() {
        return Err(Error::invalid("empty period"));
    }
    let unfold = |k: usize| {
        let mut w = lp.to_vec();
        for _ in 0..k {
            w.extend_from_slice(lq);
        }
        reduce_finite(&w)
    };
    let r1 = unfold(4);
    let r2 = unfold(5);
    if r2.len() <= r1.len() {
        return Err(Error::invalid("reduction collapsed the period"));
    }
    let d = r2.len() - r1.len();
    let splice = |head: &[CfDigit], block: &[CfDigit], reps: usize, tail: &[CfDigit]| {
        let mut w = head.to_vec();
        for _ in 0..reps {
            w.extend_from_slice(block);
        }
        w.extend_from_slice(tail);
        w
    };
    for p in 1..=d {
        if d % p != 0 {
            continue;
        }
        let reps = d / p;
        for i in 0..=r1.len() {
            if i + p > r2.len() {
                break;
            }
            let block = &r2[i..i + p];
            if r2 == splice(&r1[..i], block, reps, &r1[i..]) {
                let r3 = unfold(6);
                if r3 == splice(&r1[..i], block, 2 * reps, &r1[i..]) {
                    return Ok(CfWord::Periodic {
                        pre: r1[..i].to_vec(),
                        per: block.to_vec(),
                    });
                }
            }
        }
    }
    Err(Error::invalid("no periodic structure in reduced word"))
}

/// Exact value of a finite word: the last column of the letter-matrix
/// product, dehomogenized by its first entry.
pub fn evaluate_cf(word: &[CfDigit]) -> Result<(Rat, Rat)> {
    let p = word_product(word);
    if p[0][2].is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok((
        Rat::new(p[1][2].clone(), p[0][2].clone()),
        Rat::new(p[2][2].clone(), p[0][2].clone()),
    ))
}

/// Value of the first n digits with the exact tail substituted: the letter
/// product applied to the starred tail point. Feeding the starred n-th
/// state of an orbit returns the starred initial point exactly.
pub fn evaluate_cf_with_tail(
    digits: &[Digit],
    tail: &(FieldElement, FieldElement),
) -> Result<(FieldElement, FieldElement)> {
    let p = word_product(&digits_to_cfword(digits));
    frac_action(&p, &tail.0, &tail.1)
}

/// Projective change of coordinates (x, y) -> (x, y)/(1 - x - y).
pub fn starred(point: &PointPair) -> Result<(FieldElement, FieldElement)> {
    let d = point.gamma().inv()?;
    Ok((&point.alpha * &d, &point.beta * &d))
}

fn r_letter() -> Mat3 {
    c_matrix(Z)
}

fn u_letter() -> Mat3 {
    c_matrix(CfDigit::new(1, 0))
}

fn v_letter() -> Mat3 {
    c_matrix(CfDigit::new(0, 1))
}

/// Exact integer checks of the twelve matrix identities tying the three
/// layers together: each digit's elementary matrix is both a three-letter
/// product and the triangle matrix conjugated by the coordinate change.
pub fn verify_decompositions() -> Vec<(String, bool)> {
    let mut out = Vec::with_capacity(12);
    let (r, u, v) = (r_letter(), u_letter(), v_letter());
    let letters: [(&str, [&Mat3; 3]); 6] = [
        ("(1,2) = R R V", [&r, &r, &v]),
        ("(0,1) = R V R", [&r, &v, &r]),
        ("(0,2) = R R U", [&r, &r, &u]),
        ("(2,1) = R U R", [&r, &u, &r]),
        ("(1,0) = U R R", [&u, &r, &r]),
        ("(2,0) = V R R", [&v, &r, &r]),
    ];
    let digit_of = |name: &str| -> Digit {
        let bytes = name.as_bytes();
        Digit {
            i: bytes[1] - b'0',
            j: bytes[3] - b'0',
        }
    };
    for (name, ms) in letters {
        let prod = mat_mul(&mat_mul(ms[0], ms[1]), ms[2]);
        out.push((format!("M{name}"), prod == m_matrix(digit_of(name))));
    }
    let s = s_matrix();
    let sinv = s_inv_matrix();
    for d in crate::farey::ALL_DIGITS {
        let conj = mat_mul(&mat_mul(&sinv, &a_matrix(d)), &s);
        out.push((
            format!("S^-1 A({},{}) S = M({},{})", d.i, d.j, d.i, d.j),
            conj == m_matrix(d),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::{expand, ValueExponent};
    use crate::numberfield::{rat_int, CubicField};

    fn d(i: u8, j: u8) -> Digit {
        Digit { i, j }
    }

    fn cf(a: u64, b: u64) -> CfDigit {
        CfDigit::new(a, b)
    }

    #[test]
    fn word_table() {
        assert_eq!(digits_to_cfword(&[d(1, 2)]), vec![Z, Z, cf(0, 1)]);
        assert_eq!(digits_to_cfword(&[]), Vec::<CfDigit>::new());
        assert_eq!(
            digits_to_cfword(&[d(0, 2), d(2, 1)]),
            vec![Z, Z, cf(1, 0), Z, cf(1, 0), Z]
        );
        for ds in [[d(0, 1), d(1, 2)], [d(2, 0), d(0, 2)]] {
            assert_eq!(digits_to_cfword(&ds).len(), 3 * ds.len());
        }
    }

    #[test]
    fn letter_products_match_elementary_matrices() {
        for dg in crate::farey::ALL_DIGITS {
            assert_eq!(word_product(&letter_word(dg)), m_matrix(dg));
        }
    }

    #[test]
    fn decompositions_all_pass() {
        let report = verify_decompositions();
        assert_eq!(report.len(), 12);
        assert!(report.iter().all(|(_, ok)| *ok), "{report:?}");
        // a deliberately wrong pairing fails
        let (r, v) = (r_letter(), v_letter());
        let rvr = mat_mul(&mat_mul(&r, &v), &r);
        assert_ne!(rvr, m_matrix(d(1, 2)));
    }

    #[test]
    fn reduction_examples() {
        let w = vec![Z, Z, Z, cf(2, 3), Z, Z, Z, cf(1, 1)];
        assert_eq!(reduce_finite(&w), vec![cf(2, 3), cf(1, 1)]);
        let fixed = vec![cf(1, 0), Z, cf(0, 1), Z, cf(2, 2)];
        assert_eq!(reduce_finite(&fixed), fixed);
        // evaluation is unchanged by reduction
        assert_eq!(word_product(&reduce_finite(&w)), word_product(&w));
    }

    #[test]
    fn p2_reduced_forms() {
        for m in 1..=4u64 {
            let mut per = Vec::new();
            per.extend(std::iter::repeat(d(0, 2)).take(m as usize));
            per.extend(std::iter::repeat(d(2, 1)).take(m as usize));
            per.extend(std::iter::repeat(d(1, 0)).take(m as usize));
            let reduced = reduce_periodic(&[], &per).unwrap();
            assert_eq!(
                reduced,
                CfWord::Periodic {
                    pre: vec![Z],
                    per: vec![Z, cf(m, 0)],
                }
            );
            assert_eq!(reduced.to_string(), format!("0/0 | 0/0 {m}/0"));
        }
    }

    #[test]
    fn single_letter_value() {
        assert_eq!(
            evaluate_cf(&[cf(3, 7)]).unwrap(),
            (rat_int(3), rat_int(7))
        );
        assert!(matches!(
            evaluate_cf(&[Z, Z]),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn tail_substitution_is_exact() {
        let f = CubicField::new([rat_int(-2), rat_int(0), rat_int(0)], rat_int(1), rat_int(2))
            .unwrap();
        let rq = |n: i64, dn: i64| Rat::new(n.into(), dn.into());
        let p = PointPair::new(
            f.element([rq(2, 3), rq(-2, 3), rq(1, 6)]),
            f.element([rq(2, 3), rq(1, 3), rq(-1, 3)]),
        )
        .unwrap();
        let e = expand(&p, ValueExponent::default(), 7).unwrap();
        let target = starred(&p).unwrap();
        for n in [1, 4, 7] {
            let tail = starred(&e.states[n]).unwrap();
            let got = evaluate_cf_with_tail(&e.digits[..n], &tail).unwrap();
            assert_eq!(got, target);
        }
    }

    #[test]
    fn truncated_p2_word_approximates_starred_point() {
        let f = CubicField::new([rat_int(-1), rat_int(0), rat_int(-1)], rat_int(1), rat_int(2))
            .unwrap();
        let lam = f.theta();
        let denom = (&(&f.one() + &lam) + &lam.pow(2)).inv().unwrap();
        let p = PointPair::new(denom.clone(), &lam * &denom).unwrap();
        let (xs, ys) = starred(&p).unwrap();
        let mut digits = Vec::new();
        for _ in 0..8 {
            digits.extend([d(0, 2), d(2, 1), d(1, 0)]);
        }
        let word = reduce_finite(&digits_to_cfword(&digits));
        let (vx, vy) = evaluate_cf(&word).unwrap();
        let tol = Rat::new(1.into(), 1000.into());
        for (exact, approx) in [(&xs, vx), (&ys, vy)] {
            let diff = exact - &exact.field().rational(approx);
            let above = &diff + &exact.field().rational(tol.clone());
            let below = &diff - &exact.field().rational(tol.clone());
            assert!(above.sign_at_root().unwrap() > 0);
            assert!(below.sign_at_root().unwrap() < 0);
        }
    }
}
