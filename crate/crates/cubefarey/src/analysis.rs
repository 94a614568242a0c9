//! Orbit analysis: exact periodicity detection, the period matrix and its
//! eigen data, Pisot and primitivity certificates, and batch surveys over
//! pure cubic fields and small polynomial families.

use crate::error::{Error, Result};
use crate::farey::{
    m_matrix, mat_det, mat_identity, mat_mul, point_height, step, Digit, Mat3, PointPair,
    ValueExponent,
};
use crate::numberfield::{
    count_roots_in, has_rational_root, rat_int, sturm_chain, CubicField, FieldElement, Rat,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeriodStatus {
    Found,
    CapExceeded,
}

/// Outcome of iterating the algorithm until a state repeats or the step cap
/// is reached. `digits` and `states` cover every step taken; when a period
/// is found, `states[preperiod] == states[preperiod + period]` exactly.
#[derive(Clone, Debug)]
pub struct PeriodResult {
    pub status: PeriodStatus,
    pub preperiod: usize,
    pub period: usize,
    pub digits: Vec<Digit>,
    pub states: Vec<PointPair>,
}

impl PeriodResult {
    pub fn found(&self) -> bool {
        self.status == PeriodStatus::Found
    }

    /// The digits of one period, starting at the preperiod boundary.
    pub fn period_digits(&self) -> &[Digit] {
        &self.digits[self.preperiod..self.preperiod + self.period]
    }

    pub fn preperiod_digits(&self) -> &[Digit] {
        &self.digits[..self.preperiod]
    }

    /// All pairwise-distinct states of the orbit.
    pub fn cycle_states(&self) -> &[PointPair] {
        &self.states[..self.preperiod + self.period]
    }
}

/// Iterates the map, hashing each exact state (six reduced rationals); the
/// first revisit fixes the preperiod and the shortest period. Hitting the
/// cap is a reportable status, not an error.
pub fn detect_period(point: &PointPair, r: ValueExponent, cap: usize) -> Result<PeriodResult> {
    if cap == 0 {
        return Err(Error::invalid("cap must be at least 1"));
    }
    let mut seen: HashMap<[Rat; 6], usize> = HashMap::new();
    let mut digits = Vec::new();
    let mut states = vec![point.clone()];
    seen.insert(point.state_key(), 0);
    for n in 1..=cap {
        let (d, next) = step(states.last().unwrap(), r)?;
        digits.push(d);
        let key = next.state_key();
        states.push(next);
        if let Some(&m) = seen.get(&key) {
            return Ok(PeriodResult {
                status: PeriodStatus::Found,
                preperiod: m,
                period: n - m,
                digits,
                states,
            });
        }
        seen.insert(key, n);
    }
    Ok(PeriodResult {
        status: PeriodStatus::CapExceeded,
        preperiod: 0,
        period: 0,
        digits,
        states,
    })
}

/// The product of the elementary matrices over one period, its
/// characteristic polynomial, and the eigenvalue it acts by on the
/// direction vector of the entry state.
#[derive(Clone, Debug)]
pub struct PeriodMatrix {
    pub matrix: Mat3,
    /// Coefficients (c0, c1, c2) of x^3 + c2 x^2 + c1 x + c0.
    pub charpoly: [BigInt; 3],
    pub eigenvalue: FieldElement,
}

/// Characteristic polynomial of an integer matrix, low-to-high coefficients
/// below the leading 1.
pub fn charpoly3(m: &Mat3) -> [BigInt; 3] {
    let tr = &m[0][0] + &m[1][1] + &m[2][2];
    let s2 = (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0])
        + (&m[0][0] * &m[2][2] - &m[0][2] * &m[2][0])
        + (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]);
    [-mat_det(m), s2, -tr]
}

/// Builds the period matrix of a found period and verifies, exactly, that
/// it scales the vector (1-alpha-beta, alpha, beta) at the period entry
/// point. The determinant must be a unit and the characteristic polynomial
/// must have no rational root; both are structural and asserted.
pub fn period_matrix(res: &PeriodResult) -> Result<PeriodMatrix> {
    if !res.found() {
        return Err(Error::invalid("no period to extract a matrix from"));
    }
    let mut c = mat_identity();
    for &d in res.period_digits() {
        c = mat_mul(&c, &m_matrix(d));
    }
    let entry = &res.states[res.preperiod];
    let v = [entry.gamma(), entry.alpha.clone(), entry.beta.clone()];
    let f = entry.field();
    let image: Vec<FieldElement> = (0..3)
        .map(|i| {
            let mut acc = f.zero();
            for (k, vk) in v.iter().enumerate() {
                acc = &acc + &vk.scale(&Rat::from_integer(c[i][k].clone()));
            }
            acc
        })
        .collect();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if &image[i] * &v[j] != &image[j] * &v[i] {
            return Err(Error::EigenRelationViolated);
        }
    }
    let eigenvalue = &image[0] * &v[0].inv()?;
    let cp = charpoly3(&c);
    assert!(cp[0].magnitude().is_one(), "period matrix is not a unit");
    let at_one = BigInt::one() + &cp[2] + &cp[1] + &cp[0];
    let at_minus_one = -BigInt::one() + &cp[2] - &cp[1] + &cp[0];
    assert!(
        !at_one.is_zero() && !at_minus_one.is_zero(),
        "characteristic polynomial has a rational root"
    );
    Ok(PeriodMatrix {
        matrix: c,
        charpoly: cp,
        eigenvalue,
    })
}

// ---------------------------------------------------------------------------
// Pisot certification.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PisotVerdict {
    Pisot,
    NotPisot,
}

/// Fully exact decision data for one monic integer cubic. Writing
/// chi(x) = (x - t) (x^2 + ux + v) with t the dominant root, the two
/// conjugates lie strictly inside the unit circle iff q(1) > 0, q(-1) > 0
/// and |v| < 1; those translate to the integer signs of chi(1), chi(-1)
/// and to t > |c0|, each decided by Sturm counts.
#[derive(Clone, Debug)]
pub struct PisotCertificate {
    pub poly: [BigInt; 3],
    pub verdict: PisotVerdict,
    pub irreducible: bool,
    /// Number of real roots in (1, B] for the Cauchy-style bound B.
    pub roots_above_one: usize,
    pub value_at_one: BigInt,
    pub value_at_minus_one: BigInt,
    /// Whether both non-dominant roots are certified inside the unit circle.
    pub conjugates_inside: bool,
}

impl PisotCertificate {
    pub fn is_pisot(&self) -> bool {
        self.verdict == PisotVerdict::Pisot
    }
}

/// Certifies whether x^3 + c2 x^2 + c1 x + c0 is the minimal polynomial of
/// a Pisot number. Always returns a verdict; reducible input is NotPisot.
pub fn is_pisot(poly: &[BigInt; 3]) -> PisotCertificate {
    let [c0, c1, c2] = poly;
    let coeffs: Vec<Rat> = [c0, c1, c2]
        .iter()
        .map(|c| Rat::from_integer((*c).clone()))
        .chain(std::iter::once(Rat::one()))
        .collect();
    let rc = [coeffs[0].clone(), coeffs[1].clone(), coeffs[2].clone()];
    let irreducible = !has_rational_root(&rc);
    let chain = sturm_chain(&coeffs);
    let bound = rat_int(2) + rc[0].abs() + rc[1].abs() + rc[2].abs();
    let roots_above_one = count_roots_in(&chain, &Rat::one(), &bound);
    let value_at_one = BigInt::one() + c2 + c1 + c0;
    let value_at_minus_one = -BigInt::one() + c2 - c1 + c0;
    let a0 = c0.abs();
    let conjugates_inside = if a0 <= BigInt::one() {
        true
    } else {
        count_roots_in(&chain, &Rat::from_integer(a0), &bound) == 1
    };
    let pisot = irreducible
        && roots_above_one == 1
        && value_at_one.is_negative()
        && value_at_minus_one.is_negative()
        && conjugates_inside;
    PisotCertificate {
        poly: poly.clone(),
        verdict: if pisot {
            PisotVerdict::Pisot
        } else {
            PisotVerdict::NotPisot
        },
        irreducible,
        roots_above_one,
        value_at_one,
        value_at_minus_one,
        conjugates_inside,
    }
}

/// Whether some power of a nonnegative integer matrix up to the Wielandt
/// bound (n-1)^2 + 1 = 5 is entrywise positive.
pub fn is_primitive(m: &Mat3) -> Result<bool> {
    if m.iter().flatten().any(|e| e.is_negative()) {
        return Err(Error::NegativeEntry);
    }
    let positive = |p: &Mat3| p.iter().flatten().all(|e| e.is_positive());
    let mut p = m.clone();
    for _ in 0..5 {
        if positive(&p) {
            return Ok(true);
        }
        p = mat_mul(&p, m);
    }
    Ok(false)
}

// ---------------------------------------------------------------------------
// Surveys.
// ---------------------------------------------------------------------------

/// Heights along one orbit: the height of the initial state, the maximum
/// over all distinct states, and their exact ratio.
pub fn orbit_heights(res: &PeriodResult) -> (u32, u32, Rat) {
    let hs: Vec<u32> = res.cycle_states().iter().map(point_height).collect();
    let dh0 = hs[0];
    let dhf = *hs.iter().max().unwrap();
    (dh0, dhf, Rat::new(dhf.into(), dh0.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Periodic,
    Cap,
    Failed,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RowStatus::Periodic => "periodic",
            RowStatus::Cap => "cap",
            RowStatus::Failed => "failed",
        };
        f.write_str(s)
    }
}

/// One survey row. Numeric fields are present exactly when the orbit was
/// periodic within the cap.
#[derive(Clone, Debug)]
pub struct SurveyRow {
    pub key: String,
    pub status: RowStatus,
    pub preperiod: Option<usize>,
    pub period_len: Option<usize>,
    pub charpoly: Option<[BigInt; 3]>,
    pub pisot: Option<bool>,
    pub primitive: Option<bool>,
    pub dh0: Option<u32>,
    pub dhf: Option<u32>,
    pub rdhf: Option<Rat>,
}

impl SurveyRow {
    fn not_periodic(key: String, status: RowStatus) -> SurveyRow {
        SurveyRow {
            key,
            status,
            preperiod: None,
            period_len: None,
            charpoly: None,
            pisot: None,
            primitive: None,
            dh0: None,
            dhf: None,
            rdhf: None,
        }
    }
}

/// Runs the full per-point pipeline (period, matrix, Pisot, primitivity,
/// heights) and flattens the outcome into one row. Arithmetic failures are
/// recorded in the row status; the caller's sweep continues.
pub fn point_row(key: String, point: &PointPair, r: ValueExponent, cap: usize) -> SurveyRow {
    let run = || -> Result<SurveyRow> {
        let res = detect_period(point, r, cap)?;
        if !res.found() {
            return Ok(SurveyRow::not_periodic(key.clone(), RowStatus::Cap));
        }
        let pm = period_matrix(&res)?;
        let cert = is_pisot(&pm.charpoly);
        let prim = is_primitive(&pm.matrix)?;
        let (dh0, dhf, rdhf) = orbit_heights(&res);
        Ok(SurveyRow {
            key: key.clone(),
            status: RowStatus::Periodic,
            preperiod: Some(res.preperiod),
            period_len: Some(res.period),
            charpoly: Some(pm.charpoly),
            pisot: Some(cert.is_pisot()),
            primitive: Some(prim),
            dh0: Some(dh0),
            dhf: Some(dhf),
            rdhf: Some(rdhf),
        })
    };
    run().unwrap_or_else(|_| SurveyRow::not_periodic(key, RowStatus::Failed))
}

pub fn is_perfect_cube(m: u64) -> bool {
    let mut c = 0u64;
    while c * c * c < m {
        c += 1;
    }
    c * c * c == m
}

/// The field of the real cube root of a noncubic integer m >= 2.
pub fn pure_cubic_field(m: u64) -> Result<CubicField> {
    if m < 2 || is_perfect_cube(m) {
        return Err(Error::invalid(format!("{m} is a perfect cube or below 2")));
    }
    CubicField::new(
        [-Rat::from_integer(m.into()), Rat::zero(), Rat::zero()],
        Rat::one(),
        Rat::from_integer(m.into()),
    )
}

/// The canonical survey point: half the fractional parts of the cube root
/// and its square.
pub fn pure_cubic_point(m: u64) -> Result<PointPair> {
    let f = pure_cubic_field(m)?;
    let half = Rat::new(1.into(), 2.into());
    let theta = f.theta();
    let theta2 = theta.pow(2);
    let frac = |e: &FieldElement| -> Result<FieldElement> {
        let fl = e.floor_at_root()?;
        Ok((e - &f.rational(Rat::from_integer(fl))).scale(&half))
    };
    PointPair::new(frac(&theta)?, frac(&theta2)?)
}

pub fn pure_cubic_row(m: u64, r: ValueExponent, cap: usize) -> SurveyRow {
    match pure_cubic_point(m) {
        Ok(p) => point_row(m.to_string(), &p, r, cap),
        Err(_) => SurveyRow::not_periodic(m.to_string(), RowStatus::Failed),
    }
}

/// Aggregates of a survey: the longest period, the tallest orbit height,
/// and the largest height ratio, maxima over the periodic rows.
#[derive(Clone, Debug)]
pub struct SurveyReport {
    pub rows: Vec<SurveyRow>,
    pub longest_period: usize,
    pub max_height: u32,
    pub max_height_ratio: Rat,
}

/// Folds rows into the three survey maxima.
pub fn aggregate_rows(rows: Vec<SurveyRow>) -> SurveyReport {
    let mut longest_period = 0;
    let mut max_height = 0;
    let mut max_height_ratio = Rat::zero();
    for row in &rows {
        if let Some(l) = row.period_len {
            longest_period = longest_period.max(l);
        }
        if let Some(h) = row.dhf {
            max_height = max_height.max(h);
        }
        if let Some(rh) = &row.rdhf {
            if *rh > max_height_ratio {
                max_height_ratio = rh.clone();
            }
        }
    }
    SurveyReport {
        rows,
        longest_period,
        max_height,
        max_height_ratio,
    }
}

/// Surveys the pure cubic points for every noncubic m in [lo, hi]. Rows are
/// independent and processed in parallel; output order is by m.
pub fn survey_pure_cubics(lo: u64, hi: u64, r: ValueExponent, cap: usize) -> Result<SurveyReport> {
    if lo < 2 || lo > hi {
        return Err(Error::invalid("range must satisfy 2 <= lo <= hi"));
    }
    let ms: Vec<u64> = (lo..=hi).filter(|&m| !is_perfect_cube(m)).collect();
    let rows: Vec<SurveyRow> = ms
        .par_iter()
        .map(|&m| pure_cubic_row(m, r, cap))
        .collect();
    Ok(aggregate_rows(rows))
}

/// Discriminant of x^3 + c2 x^2 + c1 x + c0.
pub fn discriminant(c: &[BigInt; 3]) -> BigInt {
    let [d, cc, b] = c;
    BigInt::from(18) * b * cc * d - BigInt::from(4) * b.pow(3) * d + b.pow(2) * cc.pow(2)
        - BigInt::from(4) * cc.pow(3)
        - BigInt::from(27) * d.pow(2)
}

/// Canonical point of a family member: (1, t, t^2)/(1 + t + t^2) for the
/// largest real root t, when that root is positive. Returns None when the
/// polynomial is reducible or the root is not positive.
pub fn family_point(c: &[BigInt; 3]) -> Result<Option<PointPair>> {
    let rc = [
        Rat::from_integer(c[0].clone()),
        Rat::from_integer(c[1].clone()),
        Rat::from_integer(c[2].clone()),
    ];
    let field = match CubicField::largest_real_root(rc) {
        Ok(f) => f,
        Err(Error::Reducible) => return Ok(None),
        Err(e) => return Err(e),
    };
    let alpha = field.theta();
    if alpha.sign_at_root()? <= 0 {
        return Ok(None);
    }
    let den = (&(&field.one() + &alpha) + &alpha.pow(2)).inv()?;
    Ok(Some(PointPair::new(den.clone(), &alpha * &den)?))
}

/// Tallies for one polynomial family sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyStatistics {
    /// Members: irreducible with positive dominant root.
    pub n: usize,
    /// Members whose orbit is periodic within the cap.
    pub p: usize,
    /// Members with one real and two complex conjugate roots.
    pub c: usize,
    /// Totally real members.
    pub r: usize,
    /// Members whose period matrix is certified Pisot.
    pub s: usize,
    /// Largest height ratio among periodic members.
    pub rh: Rat,
}

impl fmt::Display for FamilyStatistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} p={} c={} r={} s={} rh={}",
            self.n,
            self.p,
            self.c,
            self.r,
            self.s,
            crate::ratstr::to_string(&self.rh)
        )
    }
}

/// Enumerates the family members for a coefficient bound: the monic cubics
/// with |ci| <= t that are irreducible with a positive dominant root,
/// paired with their canonical points, in ascending (c2, c1, c0) order.
pub fn family_members(t: i64) -> Result<Vec<([BigInt; 3], PointPair)>> {
    if t < 1 {
        return Err(Error::invalid("family bound must be at least 1"));
    }
    let mut members = Vec::new();
    for c2 in -t..=t {
        for c1 in -t..=t {
            for c0 in -t..=t {
                let c = [BigInt::from(c0), BigInt::from(c1), BigInt::from(c2)];
                if let Some(point) = family_point(&c)? {
                    members.push((c, point));
                }
            }
        }
    }
    Ok(members)
}

pub fn family_key(c: &[BigInt; 3]) -> String {
    format!("{},{},{}", c[0], c[1], c[2])
}

/// Tallies the family statistics from the member polynomials and their
/// finished rows.
pub fn family_statistics(members: &[[BigInt; 3]], rows: &[SurveyRow]) -> FamilyStatistics {
    let mut stats = FamilyStatistics {
        n: members.len(),
        p: 0,
        c: 0,
        r: 0,
        s: 0,
        rh: Rat::zero(),
    };
    for c in members {
        if discriminant(c).is_negative() {
            stats.c += 1;
        } else {
            stats.r += 1;
        }
    }
    for row in rows {
        if row.status == RowStatus::Periodic {
            stats.p += 1;
        }
        if row.pisot == Some(true) {
            stats.s += 1;
        }
        if let Some(rh) = &row.rdhf {
            if *rh > stats.rh {
                stats.rh = rh.clone();
            }
        }
    }
    stats
}

/// Sweeps every monic cubic with coefficients bounded by t, keeping the
/// members (irreducible, largest real root positive), and runs the full
/// pipeline on each. Rows are keyed "c0,c1,c2" in ascending (c2, c1, c0)
/// iteration order.
pub fn survey_family(
    t: i64,
    r: ValueExponent,
    cap: usize,
) -> Result<(FamilyStatistics, SurveyReport)> {
    let members = family_members(t)?;
    let rows: Vec<SurveyRow> = members
        .par_iter()
        .map(|(c, point)| point_row(family_key(c), point, r, cap))
        .collect();
    let polys: Vec<[BigInt; 3]> = members.into_iter().map(|(c, _)| c).collect();
    let stats = family_statistics(&polys, &rows);
    Ok((stats, aggregate_rows(rows)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::rat_int;

    fn rq(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn big(v: [i64; 3]) -> [BigInt; 3] {
        v.map(BigInt::from)
    }

    fn ex1_point() -> PointPair {
        let f = CubicField::new([rat_int(-2), rat_int(0), rat_int(0)], rat_int(1), rat_int(2))
            .unwrap();
        PointPair::new(
            f.element([rq(2, 3), rq(-2, 3), rq(1, 6)]),
            f.element([rq(2, 3), rq(1, 3), rq(-1, 3)]),
        )
        .unwrap()
    }

    #[test]
    fn ex1_is_purely_periodic_with_pisot_charpoly() {
        let res = detect_period(&ex1_point(), ValueExponent::default(), 1000).unwrap();
        assert!(res.found());
        assert_eq!((res.preperiod, res.period), (0, 12));
        let pm = period_matrix(&res).unwrap();
        assert_eq!(pm.charpoly, big([-1, 3, -57]));
        assert!(is_pisot(&pm.charpoly).is_pisot());
        assert!(is_primitive(&pm.matrix).unwrap());
        let lam_poly = pm.eigenvalue.min_poly().coefficients();
        assert_eq!(lam_poly, vec![rat_int(-1), rat_int(3), rat_int(-57), rat_int(1)]);
    }

    #[test]
    fn cap_is_a_status() {
        let res = detect_period(&ex1_point(), ValueExponent::default(), 5).unwrap();
        assert_eq!(res.status, PeriodStatus::CapExceeded);
        assert_eq!(res.digits.len(), 5);
    }

    #[test]
    fn pisot_fixtures() {
        assert!(is_pisot(&big([-1, 3, -57])).is_pisot());
        assert!(is_pisot(&big([-1, 10, -13])).is_pisot());
        assert!(is_pisot(&big([-1, -6, -29])).is_pisot());
        assert!(!is_pisot(&big([-1, 7, -6])).is_pisot());
        assert!(is_pisot(&big([-1, -1, 0])).is_pisot());
        assert!(!is_pisot(&big([1, -1, 0])).is_pisot());
        assert!(!is_pisot(&big([0, -1, 0])).irreducible);
        for m in 1..=8i64 {
            assert!(is_pisot(&big([-1, 0, -m])).is_pisot());
        }
    }

    #[test]
    fn non_pisot_product_matrix() {
        let mut prod = mat_identity();
        for (i, j) in [(1, 0), (0, 1), (2, 0), (0, 2)] {
            prod = mat_mul(&prod, &m_matrix(Digit { i, j }));
        }
        let cp = charpoly3(&prod);
        assert_eq!(cp, big([-1, 6, -5]));
        assert!(!is_pisot(&cp).is_pisot());
    }

    #[test]
    fn primitivity_small_cases() {
        assert!(!is_primitive(&mat_identity()).unwrap());
        assert!(!is_primitive(&m_matrix(Digit { i: 0, j: 1 })).unwrap());
        let mut p = m_matrix(Digit { i: 0, j: 2 });
        p = mat_mul(&p, &m_matrix(Digit { i: 2, j: 1 }));
        p = mat_mul(&p, &m_matrix(Digit { i: 1, j: 0 }));
        assert!(is_primitive(&p).unwrap());
        let mut neg = mat_identity();
        neg[0][1] = BigInt::from(-1);
        assert!(matches!(is_primitive(&neg), Err(Error::NegativeEntry)));
    }

    #[test]
    fn pure_cubic_survey_smoke() {
        assert!(is_perfect_cube(8) && is_perfect_cube(27) && !is_perfect_cube(12));
        let row = pure_cubic_row(2, ValueExponent::default(), 10_000);
        assert_eq!(row.status, RowStatus::Periodic);
        assert_eq!((row.preperiod, row.period_len), (Some(8), Some(60)));
        assert_eq!(row.charpoly, Some(big([-1, 4539, -10517259])));
    }

    #[test]
    fn family_members_t1() {
        let mut n = 0;
        for c2 in -1..=1i64 {
            for c1 in -1..=1i64 {
                for c0 in -1..=1i64 {
                    let c = big([c0, c1, c2]);
                    if family_point(&c).unwrap().is_some() {
                        n += 1;
                    }
                }
            }
        }
        assert_eq!(n, 6);
    }

    #[test]
    fn discriminant_signs() {
        assert!(discriminant(&big([-1, 0, -1])).is_negative());
        assert!(discriminant(&big([1, -5, 0])).is_positive());
    }
}
