//! Exact arithmetic in a real cubic number field Q(theta).
//!
//! Elements are power-basis coordinate triples a0 + a1*theta + a2*theta^2
//! with arbitrary-precision rational coefficients, kept in canonical reduced
//! form so that equality and hashing are exact. The embedding is pinned by
//! an isolating interval for the chosen real root of the defining
//! polynomial; every comparison against zero is decided by refining that
//! interval until the sign is certain, which terminates for every nonzero
//! element.

use crate::error::{Error, Result};
use crate::ratstr;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

pub type Rat = BigRational;

pub(crate) fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub(crate) fn rat_pow(r: &Rat, e: u64) -> Rat {
    let mut base = r.clone();
    let mut e = e;
    let mut acc = Rat::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------
// Dense polynomials over Q, ascending coefficients. Only what Sturm-sequence
// root isolation needs; degrees never exceed 3 here.
// ---------------------------------------------------------------------------

fn poly_trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = &acc * x + c;
    }
    acc
}

fn poly_deriv(p: &[Rat]) -> Vec<Rat> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * rat_int(k as i64))
        .collect()
}

fn poly_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let f = r.last().unwrap() / lead;
        for k in 0..=db {
            let t = &b[k] * &f;
            r[dr - db + k] = &r[dr - db + k] - t;
        }
        r = poly_trim(r);
        if r.len() <= db {
            break;
        }
    }
    r
}

/// Sturm chain of `p`: p, p', then negated remainders until constant.
pub(crate) fn sturm_chain(p: &[Rat]) -> Vec<Vec<Rat>> {
    let mut chain = vec![poly_trim(p.to_vec())];
    let d = poly_deriv(chain[0].as_slice());
    if d.is_empty() {
        return chain;
    }
    chain.push(poly_trim(d));
    loop {
        let n = chain.len();
        let r = poly_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            return chain;
        }
        chain.push(r.iter().map(|c| -c).collect());
        if chain.last().unwrap().len() == 1 {
            return chain;
        }
    }
}

fn sign_variations_at(chain: &[Vec<Rat>], x: &Rat) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for p in chain {
        let v = poly_eval(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

/// Number of distinct real roots of the chain's polynomial in (lo, hi].
pub(crate) fn count_roots_in(chain: &[Vec<Rat>], lo: &Rat, hi: &Rat) -> usize {
    sign_variations_at(chain, lo) - sign_variations_at(chain, hi)
}

/// Bound B with every real root in (-B, B); valid for monic `p`.
pub(crate) fn root_bound(p: &[Rat]) -> Rat {
    let lead = p.last().unwrap();
    let mut m = Rat::zero();
    for c in &p[..p.len() - 1] {
        let a = (c / lead).abs();
        if a > m {
            m = a;
        }
    }
    m + rat_int(1)
}

/// Disjoint isolating intervals (lo, hi] for all real roots, ascending.
/// The input must have no rational root (bisection midpoints are rational).
pub(crate) fn isolate_real_roots(p: &[Rat]) -> Vec<(Rat, Rat)> {
    let chain = sturm_chain(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        match count_roots_in(&chain, &lo, &hi) {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / rat_int(2);
                debug_assert!(!poly_eval(p, &mid).is_zero());
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Does the monic cubic x^3 + c2 x^2 + c1 x + c0 have a rational root?
///
/// Substituting x = y/d for d the lcm of the coefficient denominators turns
/// the question into integer roots of a monic integer cubic, which are found
/// by Sturm isolation plus testing the at most one integer candidate per
/// interval. No integer factorization is needed, so huge constant terms are
/// fine.
pub(crate) fn has_rational_root(c: &[Rat; 3]) -> bool {
    let mut d = BigInt::one();
    for ci in c {
        d = d.lcm(ci.denom());
    }
    let d = Rat::from_integer(d);
    let p: Vec<Rat> = vec![
        &c[0] * rat_pow(&d, 3),
        &c[1] * rat_pow(&d, 2),
        &c[2] * &d,
        Rat::one(),
    ];
    debug_assert!(p.iter().all(|x| x.is_integer()));
    let chain = sturm_chain(&p);
    let b = root_bound(&p);
    let mut stack = vec![(-b.clone(), b.clone())];
    while let Some((mut lo, mut hi)) = stack.pop() {
        match count_roots_in(&chain, &lo, &hi) {
            0 => continue,
            1 => {
                while &hi - &lo >= rat_int(1) {
                    let mid = (&lo + &hi) / rat_int(2);
                    let v = poly_eval(&p, &mid);
                    if v.is_zero() {
                        return mid.is_integer();
                    }
                    if count_roots_in(&chain, &lo, &mid) == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                let mut k = lo.ceil().to_integer();
                let top = hi.floor().to_integer();
                while k <= top {
                    if poly_eval(&p, &Rat::from_integer(k.clone())).is_zero() {
                        return true;
                    }
                    k += 1;
                }
            }
            _ => {
                let mid = (&lo + &hi) / rat_int(2);
                if poly_eval(&p, &mid).is_zero() {
                    return mid.is_integer();
                }
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Rational interval arithmetic, endpoints inclusive.
// ---------------------------------------------------------------------------

type Iv = (Rat, Rat);

pub(crate) fn iv_add(a: &Iv, b: &Iv) -> Iv {
    (&a.0 + &b.0, &a.1 + &b.1)
}

pub(crate) fn iv_mul(a: &Iv, b: &Iv) -> Iv {
    let p1 = &a.0 * &b.0;
    let p2 = &a.0 * &b.1;
    let p3 = &a.1 * &b.0;
    let p4 = &a.1 * &b.1;
    let mut lo = p1.clone();
    let mut hi = p1;
    for p in [p2, p3, p4] {
        if p < lo {
            lo = p.clone();
        }
        if p > hi {
            hi = p;
        }
    }
    (lo, hi)
}

pub(crate) fn iv_scale(c: &Rat, a: &Iv) -> Iv {
    if c.is_negative() {
        (c * &a.1, c * &a.0)
    } else {
        (c * &a.0, c * &a.1)
    }
}

// ---------------------------------------------------------------------------
// The field itself.
// ---------------------------------------------------------------------------

/// Serializable description of a field: defining polynomial and the
/// isolating interval pinning the real embedding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescription {
    #[serde(with = "ratstr::arr3")]
    pub minpoly: [Rat; 3],
    #[serde(with = "ratstr::arr2")]
    pub root: (Rat, Rat),
}

struct FieldCore {
    /// Monic defining polynomial x^3 + c2 x^2 + c1 x + c0 as [c0, c1, c2].
    poly: [Rat; 3],
    /// Cached Sturm chain of the defining polynomial.
    chain: Vec<Vec<Rat>>,
    /// Isolating interval as originally supplied.
    orig: (Rat, Rat),
    /// Whether the polynomial is negative at the interval's left end.
    neg_at_lo: bool,
    /// Monotonically narrowing isolating interval. Refinement is a cache:
    /// narrowing never changes any exact answer, so concurrent readers
    /// always see a valid bracket.
    bracket: RwLock<(Rat, Rat)>,
    refine_cap: u32,
}

/// A real cubic field with a distinguished real root of its defining
/// polynomial. Cheap to clone; clones share the refinement cache.
#[derive(Clone)]
pub struct CubicField {
    core: Arc<FieldCore>,
}

pub const DEFAULT_REFINE_CAP: u32 = 10_000;

impl CubicField {
    /// Builds Q(theta) for theta the unique root of x^3 + c2 x^2 + c1 x + c0
    /// in the interval (lo, hi]. Rejects reducible polynomials and intervals
    /// that do not isolate exactly one root.
    pub fn new(minpoly: [Rat; 3], lo: Rat, hi: Rat) -> Result<Self> {
        Self::with_cap(minpoly, lo, hi, DEFAULT_REFINE_CAP)
    }

    pub fn with_cap(minpoly: [Rat; 3], lo: Rat, hi: Rat, refine_cap: u32) -> Result<Self> {
        if lo >= hi {
            return Err(Error::invalid("empty root interval"));
        }
        if has_rational_root(&minpoly) {
            return Err(Error::Reducible);
        }
        let full = [
            minpoly[0].clone(),
            minpoly[1].clone(),
            minpoly[2].clone(),
            Rat::one(),
        ];
        let chain = sturm_chain(&full);
        let n = count_roots_in(&chain, &lo, &hi);
        if n != 1 {
            return Err(Error::NotIsolating(n));
        }
        let flo = poly_eval(&full, &lo);
        debug_assert!(!flo.is_zero() && !poly_eval(&full, &hi).is_zero());
        Ok(CubicField {
            core: Arc::new(FieldCore {
                poly: minpoly,
                chain,
                orig: (lo.clone(), hi.clone()),
                neg_at_lo: flo.is_negative(),
                bracket: RwLock::new((lo, hi)),
                refine_cap,
            }),
        })
    }

    /// Convenience selector: pins the k-th real root in ascending order,
    /// 1-based.
    pub fn kth_real_root(minpoly: [Rat; 3], k: usize) -> Result<Self> {
        if has_rational_root(&minpoly) {
            return Err(Error::Reducible);
        }
        let full = [
            minpoly[0].clone(),
            minpoly[1].clone(),
            minpoly[2].clone(),
            Rat::one(),
        ];
        let roots = isolate_real_roots(&full);
        if k == 0 || k > roots.len() {
            return Err(Error::invalid(format!(
                "root index {k} out of range, polynomial has {} real roots",
                roots.len()
            )));
        }
        let (lo, hi) = roots[k - 1].clone();
        Self::new(minpoly, lo, hi)
    }

    /// Pins the largest real root.
    pub fn largest_real_root(minpoly: [Rat; 3]) -> Result<Self> {
        if has_rational_root(&minpoly) {
            return Err(Error::Reducible);
        }
        let full = [
            minpoly[0].clone(),
            minpoly[1].clone(),
            minpoly[2].clone(),
            Rat::one(),
        ];
        let roots = isolate_real_roots(&full);
        let (lo, hi) = roots.last().expect("cubic has a real root").clone();
        Self::new(minpoly, lo, hi)
    }

    pub fn minpoly(&self) -> &[Rat; 3] {
        &self.core.poly
    }

    pub fn refine_cap(&self) -> u32 {
        self.core.refine_cap
    }

    /// Current isolating interval (narrows over time, never widens).
    pub fn bracket(&self) -> (Rat, Rat) {
        self.core.bracket.read().unwrap().clone()
    }

    pub fn description(&self) -> FieldDescription {
        FieldDescription {
            minpoly: self.core.poly.clone(),
            root: self.core.orig.clone(),
        }
    }

    pub fn from_description(d: &FieldDescription) -> Result<Self> {
        Self::new(d.minpoly.clone(), d.root.0.clone(), d.root.1.clone())
    }

    fn eval_minpoly(&self, x: &Rat) -> Rat {
        let c = &self.core.poly;
        ((x + &c[2]) * x + &c[1]) * x + &c[0]
    }

    /// One bisection step on a local copy of the bracket.
    fn refine_step(&self, b: Iv) -> Iv {
        let mid = (&b.0 + &b.1) / rat_int(2);
        let fm = self.eval_minpoly(&mid);
        debug_assert!(!fm.is_zero(), "irreducible polynomial has no rational root");
        if fm.is_negative() == self.core.neg_at_lo {
            (mid, b.1)
        } else {
            (b.0, mid)
        }
    }

    /// Publishes a narrower bracket so later sign decisions start closer.
    fn narrow_cache(&self, b: &Iv) {
        let mut cur = self.core.bracket.write().unwrap();
        if &b.1 - &b.0 < &cur.1 - &cur.0 {
            *cur = b.clone();
        }
    }

    /// Same polynomial and same real root (isolating intervals may differ).
    pub fn same_embedding(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.core, &other.core) {
            return true;
        }
        if self.core.poly != other.core.poly {
            return false;
        }
        let a = self.bracket();
        let b = other.bracket();
        let lo = a.0.max(b.0);
        let hi = a.1.min(b.1);
        lo < hi && count_roots_in(&self.core.chain, &lo, &hi) == 1
    }

    pub fn element(&self, coords: [Rat; 3]) -> FieldElement {
        FieldElement {
            field: self.clone(),
            c: coords,
        }
    }

    pub fn rational(&self, r: Rat) -> FieldElement {
        self.element([r, Rat::zero(), Rat::zero()])
    }

    pub fn integer(&self, n: i64) -> FieldElement {
        self.rational(rat_int(n))
    }

    pub fn zero(&self) -> FieldElement {
        self.integer(0)
    }

    pub fn one(&self) -> FieldElement {
        self.integer(1)
    }

    /// The distinguished root itself.
    pub fn theta(&self) -> FieldElement {
        self.element([Rat::zero(), Rat::one(), Rat::zero()])
    }
}

impl PartialEq for CubicField {
    fn eq(&self, other: &Self) -> bool {
        self.same_embedding(other)
    }
}

impl fmt::Debug for CubicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.core.poly;
        write!(
            f,
            "CubicField(x^3 + ({})x^2 + ({})x + ({}), root in ({}, {}])",
            ratstr::to_string(&c[2]),
            ratstr::to_string(&c[1]),
            ratstr::to_string(&c[0]),
            ratstr::to_string(&self.core.orig.0),
            ratstr::to_string(&self.core.orig.1),
        )
    }
}

/// Minimal polynomial of an element: linear for rationals, else the monic
/// cubic characteristic polynomial of the multiplication map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinPoly {
    /// x - a for the rational element a.
    Linear(Rat),
    /// x^3 + c2 x^2 + c1 x + c0 as [c0, c1, c2].
    Cubic([Rat; 3]),
}

impl MinPoly {
    /// Ascending coefficients including the leading 1.
    pub fn coefficients(&self) -> Vec<Rat> {
        match self {
            MinPoly::Linear(a) => vec![-a.clone(), Rat::one()],
            MinPoly::Cubic(c) => vec![c[0].clone(), c[1].clone(), c[2].clone(), Rat::one()],
        }
    }
}

#[derive(Clone)]
pub struct FieldElement {
    field: CubicField,
    c: [Rat; 3],
}

pub(crate) fn det3(m: &[[Rat; 3]; 3]) -> Rat {
    let a = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]);
    let b = &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0]);
    let c = &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    a - b + c
}

fn solve3(m: &[[Rat; 3]; 3], rhs: &[Rat; 3]) -> Option<[Rat; 3]> {
    let d = det3(m);
    if d.is_zero() {
        return None;
    }
    let mut out = [Rat::zero(), Rat::zero(), Rat::zero()];
    for (col, slot) in out.iter_mut().enumerate() {
        let mut mm = m.clone();
        for row in 0..3 {
            mm[row][col] = rhs[row].clone();
        }
        *slot = det3(&mm) / &d;
    }
    Some(out)
}

impl FieldElement {
    pub fn field(&self) -> &CubicField {
        &self.field
    }

    pub fn coords(&self) -> &[Rat; 3] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero()
    }

    pub fn scale(&self, r: &Rat) -> FieldElement {
        self.field
            .element([&self.c[0] * r, &self.c[1] * r, &self.c[2] * r])
    }

    fn assert_same_field(&self, other: &FieldElement) {
        debug_assert!(
            self.field.same_embedding(&other.field),
            "elements of different fields"
        );
    }

    /// Matrix of multiplication by this element in the basis 1, theta,
    /// theta^2; column j holds the coordinates of x * theta^j.
    pub fn mul_matrix(&self) -> [[Rat; 3]; 3] {
        let x = self.clone();
        let xt = &x * &self.field.theta();
        let xt2 = &xt * &self.field.theta();
        let mut m = [
            [Rat::zero(), Rat::zero(), Rat::zero()],
            [Rat::zero(), Rat::zero(), Rat::zero()],
            [Rat::zero(), Rat::zero(), Rat::zero()],
        ];
        for row in 0..3 {
            m[row][0] = x.c[row].clone();
            m[row][1] = xt.c[row].clone();
            m[row][2] = xt2.c[row].clone();
        }
        m
    }

    /// Field norm: determinant of the multiplication map, the product of
    /// the three conjugates.
    pub fn norm(&self) -> Rat {
        det3(&self.mul_matrix())
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.mul_matrix();
        let rhs = [Rat::one(), Rat::zero(), Rat::zero()];
        let z = solve3(&m, &rhs).ok_or(Error::DivisionByZero)?;
        Ok(self.field.element(z))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut e = e;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn min_poly(&self) -> MinPoly {
        if self.is_rational() {
            return MinPoly::Linear(self.c[0].clone());
        }
        let m = self.mul_matrix();
        let tr = &m[0][0] + &m[1][1] + &m[2][2];
        let s2 = (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0])
            + (&m[0][0] * &m[2][2] - &m[0][2] * &m[2][0])
            + (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]);
        let det = det3(&m);
        MinPoly::Cubic([-det, s2, -tr])
    }

    /// Value interval of the element over a theta-bracket.
    fn eval_iv(&self, br: &Iv) -> Iv {
        let t2 = iv_mul(br, br);
        let mut v = (self.c[0].clone(), self.c[0].clone());
        v = iv_add(&v, &iv_scale(&self.c[1], br));
        v = iv_add(&v, &iv_scale(&self.c[2], &t2));
        v
    }

    /// Exact sign of the element under the distinguished embedding.
    pub fn sign_at_root(&self) -> Result<i32> {
        if self.is_zero() {
            return Ok(0);
        }
        if self.is_rational() {
            return Ok(if self.c[0].is_positive() { 1 } else { -1 });
        }
        let mut br = self.field.bracket();
        let cap = self.field.refine_cap();
        for _ in 0..=cap {
            let (vlo, vhi) = self.eval_iv(&br);
            if vlo.is_positive() {
                self.field.narrow_cache(&br);
                return Ok(1);
            }
            if vhi.is_negative() {
                self.field.narrow_cache(&br);
                return Ok(-1);
            }
            br = self.field.refine_step(br);
        }
        Err(Error::RefinementCap(cap))
    }

    /// Largest integer not exceeding the element's value.
    pub fn floor_at_root(&self) -> Result<BigInt> {
        if self.is_rational() {
            return Ok(self.c[0].floor().to_integer());
        }
        let mut br = self.field.bracket();
        let cap = self.field.refine_cap();
        for _ in 0..=cap {
            let (vlo, vhi) = self.eval_iv(&br);
            let flo = vlo.floor().to_integer();
            if flo == vhi.floor().to_integer() {
                self.field.narrow_cache(&br);
                return Ok(flo);
            }
            br = self.field.refine_step(br);
        }
        Err(Error::RefinementCap(cap))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.field.same_embedding(&other.field)
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}]",
            ratstr::to_string(&self.c[0]),
            ratstr::to_string(&self.c[1]),
            ratstr::to_string(&self.c[2])
        )
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        self.field.element([
            &self.c[0] + &rhs.c[0],
            &self.c[1] + &rhs.c[1],
            &self.c[2] + &rhs.c[2],
        ])
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        self.field.element([
            &self.c[0] - &rhs.c[0],
            &self.c[1] - &rhs.c[1],
            &self.c[2] - &rhs.c[2],
        ])
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field
            .element([-self.c[0].clone(), -self.c[1].clone(), -self.c[2].clone()])
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let a = &self.c;
        let b = &rhs.c;
        let t0 = &a[0] * &b[0];
        let t1 = &a[0] * &b[1] + &a[1] * &b[0];
        let t2 = &a[0] * &b[2] + &a[1] * &b[1] + &a[2] * &b[0];
        let t3 = &a[1] * &b[2] + &a[2] * &b[1];
        let t4 = &a[2] * &b[2];
        // theta^3 = r0 + r1 theta + r2 theta^2, theta^4 = theta * theta^3
        let p = self.field.minpoly();
        let r0 = -p[0].clone();
        let r1 = -p[1].clone();
        let r2 = -p[2].clone();
        let c0 = t0 + &t3 * &r0 + &t4 * (&r2 * &r0);
        let c1 = t1 + &t3 * &r1 + &t4 * (&r0 + &r2 * &r1);
        let c2 = t2 + &t3 * &r2 + &t4 * (&r1 + &r2 * &r2);
        self.field.element([c0, c1, c2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn croot2() -> CubicField {
        CubicField::new([rat_int(-2), rat_int(0), rat_int(0)], rat_int(1), rat_int(2)).unwrap()
    }

    #[test]
    fn rejects_reducible() {
        let r = CubicField::new([rat_int(-1), rat_int(0), rat_int(0)], rat_int(0), rat_int(2));
        assert!(matches!(r, Err(Error::Reducible)));
        let r = CubicField::new([rat_int(0), rat_int(-1), rat_int(0)], rat_int(0), rat_int(2));
        assert!(matches!(r, Err(Error::Reducible)));
    }

    #[test]
    fn rejects_non_isolating() {
        // x^3 - 5x + 1 has three real roots, two of them in (-3, 3].
        let r = CubicField::new([rat_int(1), rat_int(-5), rat_int(0)], rat_int(-3), rat_int(3));
        assert!(matches!(r, Err(Error::NotIsolating(3))));
    }

    #[test]
    fn accepts_totally_real_with_selector() {
        let f = CubicField::new([rat_int(1), rat_int(-5), rat_int(0)], rat_int(1), rat_int(3))
            .unwrap();
        assert_eq!(f.theta().sign_at_root().unwrap(), 1);
        let g = CubicField::kth_real_root([rat_int(1), rat_int(-5), rat_int(0)], 3).unwrap();
        assert!(f.same_embedding(&g));
    }

    #[test]
    fn basic_arithmetic() {
        let f = croot2();
        let t = f.theta();
        let t2 = &t * &t;
        assert_eq!(&t * &t2, f.integer(2));
        assert_eq!(t.inv().unwrap(), t2.scale(&Rat::new(1.into(), 2.into())));
        let a = &f.one() + &t;
        let b = &f.one() - &t;
        assert_eq!(&a * &b, &f.one() - &t2);
    }

    #[test]
    fn norms() {
        let f = croot2();
        assert_eq!(f.theta().norm(), rat_int(2));
        assert_eq!(f.zero().norm(), rat_int(0));
        assert_eq!((&f.one() + &f.theta()).norm(), rat_int(3));
    }

    #[test]
    fn min_polys() {
        let f = croot2();
        assert_eq!(
            f.theta().min_poly(),
            MinPoly::Cubic([rat_int(-2), rat_int(0), rat_int(0)])
        );
        assert_eq!(
            f.rational(Rat::new(5.into(), 3.into())).min_poly(),
            MinPoly::Linear(Rat::new(5.into(), 3.into()))
        );
        assert_eq!(
            (&f.one() + &f.theta()).min_poly(),
            MinPoly::Cubic([rat_int(-3), rat_int(3), rat_int(-3)])
        );
    }

    #[test]
    fn signs_and_floors() {
        let f = croot2();
        let t = f.theta();
        assert_eq!((&t - &f.one()).sign_at_root().unwrap(), 1);
        assert_eq!(f.zero().sign_at_root().unwrap(), 0);
        let e = &(&t * &t) - &(&t + &f.one());
        assert_eq!(e.sign_at_root().unwrap(), -1);
        assert_eq!((&t * &t).floor_at_root().unwrap(), BigInt::from(1));
        assert_eq!((-&t).floor_at_root().unwrap(), BigInt::from(-2));
        let f5 = CubicField::new([rat_int(-5), rat_int(0), rat_int(0)], rat_int(1), rat_int(5))
            .unwrap();
        assert_eq!(f5.theta().floor_at_root().unwrap(), BigInt::from(1));
    }

    #[test]
    fn description_round_trip() {
        let f = croot2();
        let d = f.description();
        let json = serde_json::to_string(&d).unwrap();
        let d2: FieldDescription = serde_json::from_str(&json).unwrap();
        assert_eq!(d, d2);
        let g = CubicField::from_description(&d2).unwrap();
        assert!(f.same_embedding(&g));
    }
}
