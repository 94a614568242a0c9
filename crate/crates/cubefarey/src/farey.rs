//! The slow continued-fraction expansion itself: norm-weighted digit
//! selection, the six elementary maps on the unit triangle, and the
//! convergent matrices with their triangle predicates.

use crate::error::{Error, Result};
use crate::numberfield::{det3, rat_int, rat_pow, CubicField, FieldElement, MinPoly, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// One of the six digits (i,j), i != j, i,j in {0,1,2}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Digit {
    pub i: u8,
    pub j: u8,
}

pub const ALL_DIGITS: [Digit; 6] = [
    Digit { i: 0, j: 1 },
    Digit { i: 0, j: 2 },
    Digit { i: 1, j: 0 },
    Digit { i: 1, j: 2 },
    Digit { i: 2, j: 0 },
    Digit { i: 2, j: 1 },
];

impl Digit {
    pub fn new(i: u8, j: u8) -> Result<Digit> {
        if i > 2 || j > 2 || i == j {
            return Err(Error::invalid(format!("({i},{j}) is not a digit")));
        }
        Ok(Digit { i, j })
    }

    /// The two successors that provably never follow this digit.
    pub fn forbidden_successors(self) -> [Digit; 2] {
        let (a, b) = match (self.i, self.j) {
            (1, 2) => ((0, 1), (1, 0)),
            (2, 1) => ((0, 2), (2, 0)),
            (0, 1) => ((0, 2), (2, 0)),
            (1, 0) => ((1, 2), (2, 1)),
            (0, 2) => ((0, 1), (1, 0)),
            (2, 0) => ((1, 2), (2, 1)),
            _ => unreachable!(),
        };
        [Digit { i: a.0, j: a.1 }, Digit { i: b.0, j: b.1 }]
    }

    pub fn transpose(self) -> Digit {
        Digit {
            i: self.j,
            j: self.i,
        }
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

// ---------------------------------------------------------------------------
// Integer 3x3 matrices.
// ---------------------------------------------------------------------------

pub type Mat3 = [[BigInt; 3]; 3];

pub fn mat_identity() -> Mat3 {
    let mut m: Mat3 = Default::default();
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = BigInt::one();
    }
    m
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out: Mat3 = Default::default();
    for r in 0..3 {
        for c in 0..3 {
            out[r][c] = (0..3).map(|k| &a[r][k] * &b[k][c]).sum();
        }
    }
    out
}

pub fn mat_det(m: &Mat3) -> BigInt {
    let a = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]);
    let b = &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0]);
    let c = &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    a - b + c
}

fn mat_from(rows: [[i64; 3]; 3]) -> Mat3 {
    rows.map(|r| r.map(BigInt::from))
}

/// The triangle-subdivision matrix attached to a digit.
pub fn a_matrix(d: Digit) -> Mat3 {
    match (d.i, d.j) {
        (1, 2) => mat_from([[1, 0, 1], [0, 1, 1], [0, 0, 1]]),
        (2, 1) => mat_from([[1, 1, 0], [0, 1, 0], [0, 1, 1]]),
        (0, 1) => mat_from([[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
        (1, 0) => mat_from([[2, -1, -1], [1, 0, -1], [0, 0, 1]]),
        (0, 2) => mat_from([[1, 0, 1], [0, 1, 0], [0, 0, 1]]),
        (2, 0) => mat_from([[2, -1, -1], [0, 1, 0], [1, -1, 0]]),
        _ => unreachable!(),
    }
}

/// Elementary matrix I + E_{ij}: the conjugate of `a_matrix` by `s_matrix`.
pub fn m_matrix(d: Digit) -> Mat3 {
    let mut m = mat_identity();
    m[d.i as usize][d.j as usize] = BigInt::one();
    m
}

/// Incidence matrix of the letter substitution attached to a digit.
pub fn l_matrix(d: Digit) -> Mat3 {
    m_matrix(d.transpose())
}

pub fn s_matrix() -> Mat3 {
    mat_from([[1, 1, 1], [0, 1, 0], [0, 0, 1]])
}

pub fn s_inv_matrix() -> Mat3 {
    mat_from([[1, -1, -1], [0, 1, 0], [0, 0, 1]])
}

/// Fractional-linear action of an integer matrix: lift (x, y) to
/// (1, x, y), multiply, dehomogenize by the first coordinate.
pub fn frac_action(m: &Mat3, x: &FieldElement, y: &FieldElement) -> Result<(FieldElement, FieldElement)> {
    let f = x.field();
    let lift = [f.one(), x.clone(), y.clone()];
    let mut img = [f.zero(), f.zero(), f.zero()];
    for (r, slot) in img.iter_mut().enumerate() {
        let mut acc = f.zero();
        for (k, l) in lift.iter().enumerate() {
            acc = &acc + &l.scale(&Rat::from_integer(m[r][k].clone()));
        }
        *slot = acc;
    }
    let d = img[0].inv().map_err(|_| Error::ZeroDenominator)?;
    Ok((&img[1] * &d, &img[2] * &d))
}

// ---------------------------------------------------------------------------
// Exponent of the value function.
// ---------------------------------------------------------------------------

/// The exponent r = p/q of the norm-weighted value function. Admissibility
/// (p and q coprime, p not a multiple of 3) rules out exact ties between
/// distinct weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValueExponent {
    p: u64,
    q: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl ValueExponent {
    pub fn new(p: u64, q: u64) -> Result<ValueExponent> {
        if p == 0 || q == 0 {
            return Err(Error::invalid("exponent parts must be positive"));
        }
        if gcd(p, q) != 1 {
            return Err(Error::invalid("exponent p/q must be in lowest terms"));
        }
        if p % 3 == 0 {
            return Err(Error::invalid(
                "exponent numerator divisible by 3 admits ties",
            ));
        }
        Ok(ValueExponent { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl Default for ValueExponent {
    fn default() -> Self {
        ValueExponent { p: 5, q: 2 }
    }
}

impl fmt::Display for ValueExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for ValueExponent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p = p
            .parse()
            .map_err(|_| Error::invalid(format!("bad exponent {s:?}")))?;
        let q = q
            .parse()
            .map_err(|_| Error::invalid(format!("bad exponent {s:?}")))?;
        ValueExponent::new(p, q)
    }
}

// ---------------------------------------------------------------------------
// Points of the expansion domain.
// ---------------------------------------------------------------------------

/// A point (alpha, beta) of the open unit triangle with 1, alpha, beta
/// linearly independent over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointPair {
    pub alpha: FieldElement,
    pub beta: FieldElement,
}

impl PointPair {
    pub fn new(alpha: FieldElement, beta: FieldElement) -> Result<PointPair> {
        if !alpha.field().same_embedding(beta.field()) {
            return Err(Error::invalid("coordinates live in different fields"));
        }
        let coords = [
            [Rat::one(), Rat::zero(), Rat::zero()],
            alpha.coords().clone(),
            beta.coords().clone(),
        ];
        if det3(&coords).is_zero() {
            return Err(Error::invalid(
                "1, alpha, beta are linearly dependent over Q",
            ));
        }
        let p = PointPair { alpha, beta };
        let g = p.gamma();
        for (name, e) in [("alpha", &p.alpha), ("beta", &p.beta), ("1-alpha-beta", &g)] {
            if e.sign_at_root()? <= 0 {
                return Err(Error::invalid(format!("{name} must be positive")));
            }
        }
        Ok(p)
    }

    pub fn field(&self) -> &CubicField {
        self.alpha.field()
    }

    pub fn gamma(&self) -> FieldElement {
        let one = self.field().one();
        &(&one - &self.alpha) - &self.beta
    }

    /// Hash key: the six reduced rational coordinates.
    pub fn state_key(&self) -> [Rat; 6] {
        let a = self.alpha.coords();
        let b = self.beta.coords();
        [
            a[0].clone(),
            a[1].clone(),
            a[2].clone(),
            b[0].clone(),
            b[1].clone(),
            b[2].clone(),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightOrder {
    Less,
    Greater,
}

fn weight_diff_sign(
    x: &FieldElement,
    nxq: &Rat,
    y: &FieldElement,
    nyq: &Rat,
    p: u64,
) -> Result<i32> {
    let lhs = x.pow(p).scale(nyq);
    let rhs = y.pow(p).scale(nxq);
    let s = (&lhs - &rhs).sign_at_root()?;
    if s == 0 {
        return Err(Error::TieImpossible);
    }
    Ok(s)
}

/// Compares the norm-weighted values w(x) = x^p / |N(x)|^q of two positive
/// elements without extracting roots: the sign of
/// x^p |N(y)|^q - y^p |N(x)|^q decides.
pub fn weight_compare(
    r: ValueExponent,
    x: &FieldElement,
    y: &FieldElement,
) -> Result<WeightOrder> {
    let nxq = rat_pow(&x.norm().abs(), r.q);
    let nyq = rat_pow(&y.norm().abs(), r.q);
    Ok(match weight_diff_sign(x, &nxq, y, &nyq, r.p)? {
        s if s < 0 => WeightOrder::Less,
        _ => WeightOrder::Greater,
    })
}

/// Selects the digit for a point: the index of smallest weight among
/// (gamma, alpha, beta) is excluded, and a sign test orients the remaining
/// pair. Uses at most three weight comparisons and caches the norm powers.
pub fn select_epsilon(point: &PointPair, r: ValueExponent) -> Result<Digit> {
    let g = point.gamma();
    let w = [&g, &point.alpha, &point.beta];
    let nq: Vec<Rat> = w.iter().map(|e| rat_pow(&e.norm().abs(), r.q)).collect();
    let less = |a: usize, b: usize| -> Result<bool> {
        Ok(weight_diff_sign(w[a], &nq[a], w[b], &nq[b], r.p)? < 0)
    };
    let first = if less(0, 1)? { 0 } else { 1 };
    let excluded = if less(first, 2)? { first } else { 2 };
    let one = point.field().one();
    let (test, pos, neg) = match excluded {
        0 => (&point.alpha - &point.beta, (1, 2), (2, 1)),
        2 => (
            &(&one - &point.alpha) - &(&point.alpha + &point.beta),
            (0, 1),
            (1, 0),
        ),
        1 => (
            &(&one - &point.beta) - &(&point.alpha + &point.beta),
            (0, 2),
            (2, 0),
        ),
        _ => unreachable!(),
    };
    match test.sign_at_root()? {
        s if s > 0 => Ok(Digit { i: pos.0, j: pos.1 }),
        s if s < 0 => Ok(Digit { i: neg.0, j: neg.1 }),
        _ => Err(Error::BoundaryImpossible),
    }
}

fn apply_map(point: &PointPair, eps: Digit) -> Result<PointPair> {
    let f = point.field();
    let one = f.one();
    let x = &point.alpha;
    let y = &point.beta;
    let (nx, ny) = match (eps.i, eps.j) {
        (1, 2) => {
            let d = (&one - y).inv()?;
            (&(x - y) * &d, y * &d)
        }
        (2, 1) => {
            let d = (&one - x).inv()?;
            (x * &d, &(y - x) * &d)
        }
        (0, 1) => {
            let d = (&one - x).inv()?;
            (x * &d, y * &d)
        }
        (1, 0) => {
            let d = (x + y).inv()?;
            let num = &(&x.scale(&rat_int(2)) + y) - &one;
            (&num * &d, y * &d)
        }
        (0, 2) => {
            let d = (&one - y).inv()?;
            (x * &d, y * &d)
        }
        (2, 0) => {
            let d = (x + y).inv()?;
            let num = &(x + &y.scale(&rat_int(2))) - &one;
            (x * &d, &num * &d)
        }
        _ => unreachable!(),
    };
    PointPair::new(nx, ny)
}

/// Applies the elementary map of a digit after checking, with the same sign
/// tests the selector uses, that the point lies in that digit's domain.
pub fn apply_t(point: &PointPair, eps: Digit, r: ValueExponent) -> Result<PointPair> {
    if select_epsilon(point, r)? != eps {
        return Err(Error::WrongTriangle(eps.i, eps.j));
    }
    apply_map(point, eps)
}

/// One step of the algorithm: select the digit, apply its map.
pub fn step(point: &PointPair, r: ValueExponent) -> Result<(Digit, PointPair)> {
    let eps = select_epsilon(point, r)?;
    let next = apply_map(point, eps)?;
    Ok((eps, next))
}

// ---------------------------------------------------------------------------
// Convergents.
// ---------------------------------------------------------------------------

/// The running product A_{e0} ... A_{e_{n-1}} S whose columns hold the three
/// simultaneous rational approximations (p, q, r) to (1, alpha, beta).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentState {
    m: Mat3,
}

impl ConvergentState {
    pub fn initial() -> ConvergentState {
        ConvergentState { m: s_matrix() }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    /// Digit update: column j gains column i. Equal to right-multiplication
    /// by the elementary matrix of the digit.
    pub fn advance(&mut self, d: Digit) {
        let (i, j) = (d.i as usize, d.j as usize);
        for row in self.m.iter_mut() {
            let add = row[i].clone();
            row[j] += add;
        }
    }

    pub fn det(&self) -> BigInt {
        mat_det(&self.m)
    }

    /// The three vertices (q/p, r/p) of the convergent triangle, one per
    /// column.
    pub fn triangle(&self) -> Result<[(Rat, Rat); 3]> {
        let mut out = [
            (Rat::zero(), Rat::zero()),
            (Rat::zero(), Rat::zero()),
            (Rat::zero(), Rat::zero()),
        ];
        for (c, slot) in out.iter_mut().enumerate() {
            let p = &self.m[0][c];
            if p.is_zero() {
                return Err(Error::DegenerateDenominator);
            }
            slot.0 = Rat::new(self.m[1][c].clone(), p.clone());
            slot.1 = Rat::new(self.m[2][c].clone(), p.clone());
        }
        Ok(out)
    }

    /// Whether the point lies inside the convergent triangle, decided by
    /// exact signed-area orientation tests in the field. Linear independence
    /// of 1, alpha, beta keeps the point off every rational edge, so open
    /// and closed containment agree.
    pub fn contains(&self, point: &PointPair) -> Result<bool> {
        let v = self.triangle()?;
        let f = point.field();
        let orient = |a: &(Rat, Rat), b: &(Rat, Rat)| -> Result<i32> {
            let ex = &b.0 - &a.0;
            let ey = &b.1 - &a.1;
            let px = &point.alpha - &f.rational(a.0.clone());
            let py = &point.beta - &f.rational(a.1.clone());
            (&py.scale(&ex) - &px.scale(&ey)).sign_at_root()
        };
        let base = {
            let ex = &v[1].0 - &v[0].0;
            let ey = &v[1].1 - &v[0].1;
            let fx = &v[2].0 - &v[0].0;
            let fy = &v[2].1 - &v[0].1;
            let d = &ex * &fy - &ey * &fx;
            if d.is_positive() {
                1
            } else {
                -1
            }
        };
        for (a, b) in [(0, 1), (1, 2), (2, 0)] {
            if orient(&v[a], &v[b])? != base {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

// ---------------------------------------------------------------------------
// Expansion driver.
// ---------------------------------------------------------------------------

/// A finite expansion: digits, every intermediate state (states[0] is the
/// input), and the convergent matrices M_0 ... M_n.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub digits: Vec<Digit>,
    pub states: Vec<PointPair>,
    pub convergents: Vec<ConvergentState>,
}

/// Runs n steps, checking at each one that the column recurrence agrees
/// with the direct matrix product and that no forbidden digit pair occurs.
pub fn expand(point: &PointPair, r: ValueExponent, n: usize) -> Result<Expansion> {
    let mut digits: Vec<Digit> = Vec::with_capacity(n);
    let mut states = vec![point.clone()];
    let mut convergents = vec![ConvergentState::initial()];
    for k in 0..n {
        let (d, next) = step(states.last().unwrap(), r)?;
        if let Some(&prev) = digits.last() {
            if prev.forbidden_successors().contains(&d) {
                return Err(Error::ForbiddenWordDetected(k));
            }
        }
        let mut cs = convergents.last().unwrap().clone();
        cs.advance(d);
        let direct = mat_mul(convergents.last().unwrap().matrix(), &m_matrix(d));
        assert_eq!(cs.m, direct, "column recurrence disagrees with product");
        digits.push(d);
        states.push(next);
        convergents.push(cs);
    }
    Ok(Expansion {
        digits,
        states,
        convergents,
    })
}

// ---------------------------------------------------------------------------
// Decimal heights.
// ---------------------------------------------------------------------------

/// Decimal height of a rational: digit count of the larger of |numerator|
/// and denominator; zero has height 0.
pub fn decimal_height(r: &Rat) -> u32 {
    if r.is_zero() {
        return 0;
    }
    let digits = |n: &BigInt| n.magnitude().to_string().len() as u32;
    digits(r.numer()).max(digits(r.denom()))
}

/// Decimal height of a minimal polynomial: maximum over all coefficients,
/// including the leading 1.
pub fn poly_height(mp: &MinPoly) -> u32 {
    mp.coefficients()
        .iter()
        .map(decimal_height)
        .max()
        .unwrap_or(0)
}

/// Height of a point: the larger of the two coordinate heights.
pub fn point_height(p: &PointPair) -> u32 {
    poly_height(&p.alpha.min_poly()).max(poly_height(&p.beta.min_poly()))
}

/// Per-state heights along an orbit, paired with the exact ratio to the
/// initial height.
pub fn decimal_heights(states: &[PointPair]) -> Vec<(u32, Rat)> {
    let h0 = match states.first() {
        Some(s) => point_height(s),
        None => return Vec::new(),
    };
    states
        .iter()
        .map(|s| {
            let h = point_height(s);
            (h, Rat::new(BigInt::from(h), BigInt::from(h0)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rq(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn ex1_point() -> PointPair {
        let f = CubicField::new([rat_int(-2), rat_int(0), rat_int(0)], rat_int(1), rat_int(2))
            .unwrap();
        let alpha = f.element([rq(2, 3), rq(-2, 3), rq(1, 6)]);
        let beta = f.element([rq(2, 3), rq(1, 3), rq(-1, 3)]);
        PointPair::new(alpha, beta).unwrap()
    }

    #[test]
    fn exponent_validation() {
        assert!(ValueExponent::new(5, 2).is_ok());
        assert!(ValueExponent::new(6, 2).is_err());
        assert!(ValueExponent::new(3, 1).is_err());
        assert!(ValueExponent::new(0, 1).is_err());
        assert_eq!("5/2".parse::<ValueExponent>().unwrap(), ValueExponent::default());
    }

    #[test]
    fn matrices_are_conjugate_and_unimodular() {
        let s = s_matrix();
        let sinv = s_inv_matrix();
        assert_eq!(mat_mul(&s, &sinv), mat_identity());
        for d in ALL_DIGITS {
            let a = a_matrix(d);
            assert_eq!(mat_det(&a).magnitude().to_string(), "1");
            assert_eq!(mat_mul(&mat_mul(&sinv, &a), &s), m_matrix(d));
        }
    }

    #[test]
    fn ex1_first_digit_and_word() {
        let p = ex1_point();
        let r = ValueExponent::default();
        assert_eq!(select_epsilon(&p, r).unwrap(), Digit { i: 2, j: 0 });
        let e = expand(&p, r, 12).unwrap();
        let word: Vec<(u8, u8)> = e.digits.iter().map(|d| (d.i, d.j)).collect();
        assert_eq!(
            word,
            vec![
                (2, 0),
                (0, 2),
                (2, 1),
                (2, 1),
                (0, 1),
                (1, 0),
                (0, 2),
                (0, 2),
                (1, 2),
                (2, 1),
                (1, 0),
                (1, 0)
            ]
        );
        assert_eq!(e.states[12], e.states[0]);
        assert!(e.convergents[12].contains(&p).unwrap());
    }

    #[test]
    fn totally_real_step() {
        // lambda is the root > 1 of x^3 - 5x + 1; the first digit is (2,1)
        // and the image has the stated exact coordinates.
        let f = CubicField::new([rat_int(1), rat_int(-5), rat_int(0)], rat_int(1), rat_int(3))
            .unwrap();
        let p = PointPair::new(
            f.element([rq(5, 39), rq(7, 39), rq(-2, 39)]),
            f.element([rq(2, 39), rq(-5, 39), rq(7, 39)]),
        )
        .unwrap();
        let r = ValueExponent::default();
        let (d, next) = step(&p, r).unwrap();
        assert_eq!(d, Digit { i: 2, j: 1 });
        assert_eq!(next.alpha.coords(), &[rq(6, 37), rq(6, 37), rq(-1, 37)]);
        assert_eq!(next.beta.coords(), &[rq(-5, 37), rq(-5, 37), rq(7, 37)]);
    }

    #[test]
    fn pure_cubic_five_step() {
        // mu = cbrt(5): the point (1 - mu^2/5, 1/2 + mu/2 - 3 mu^2/10) steps
        // by (2,1) to (-1 + mu, -1/2 - mu/2 + mu^2/2).
        let f = CubicField::new([rat_int(-5), rat_int(0), rat_int(0)], rat_int(1), rat_int(2))
            .unwrap();
        let p = PointPair::new(
            f.element([rat_int(1), Rat::zero(), rq(-1, 5)]),
            f.element([rq(1, 2), rq(1, 2), rq(-3, 10)]),
        )
        .unwrap();
        let (d, next) = step(&p, ValueExponent::default()).unwrap();
        assert_eq!(d, Digit { i: 2, j: 1 });
        assert_eq!(next.alpha.coords(), &[rat_int(-1), Rat::one(), Rat::zero()]);
        assert_eq!(next.beta.coords(), &[rq(-1, 2), rq(-1, 2), rq(1, 2)]);
    }

    #[test]
    fn wrong_triangle_rejected() {
        let p = ex1_point();
        let r = ValueExponent::default();
        let err = apply_t(&p, Digit { i: 0, j: 1 }, r);
        assert!(matches!(err, Err(Error::WrongTriangle(0, 1))));
        assert!(apply_t(&p, Digit { i: 2, j: 0 }, r).is_ok());
    }

    #[test]
    fn initial_triangle() {
        let cs = ConvergentState::initial();
        let t = cs.triangle().unwrap();
        assert_eq!(t[0], (rat_int(0), rat_int(0)));
        assert_eq!(t[1], (rat_int(1), rat_int(0)));
        assert_eq!(t[2], (rat_int(0), rat_int(1)));
    }

    #[test]
    fn heights() {
        assert_eq!(decimal_height(&rq(123, 7)), 3);
        assert_eq!(decimal_height(&rat_int(0)), 0);
        let p = ex1_point();
        let e = expand(&p, ValueExponent::default(), 12).unwrap();
        let hs: Vec<u32> = decimal_heights(&e.states).iter().map(|x| x.0).collect();
        assert_eq!(hs, vec![1, 2, 1, 1, 1, 2, 1, 2, 1, 2, 1, 2, 1]);
    }

    #[test]
    fn frac_round_trip() {
        let p = ex1_point();
        let r = ValueExponent::default();
        let (d, next) = step(&p, r).unwrap();
        let (bx, by) = frac_action(&a_matrix(d), &next.alpha, &next.beta).unwrap();
        assert_eq!(bx, p.alpha);
        assert_eq!(by, p.beta);
    }
}
