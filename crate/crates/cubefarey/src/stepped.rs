//! Stepped surfaces orthogonal to a positive direction, the dual face
//! substitutions attached to digits, patch growth with exact membership
//! verification, and JSON/SVG/OBJ export.

use crate::error::{Error, Result};
use crate::farey::{m_matrix, mat_identity, mat_mul, Digit, PointPair};
use crate::numberfield::{FieldElement, Rat};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

/// A unit face: the square of type `kind` attached to the lattice point
/// `x`, spanned by the two basis vectors other than e_kind.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    pub x: [BigInt; 3],
    pub kind: u8,
}

impl Face {
    pub fn new(x: [i64; 3], kind: u8) -> Face {
        Face {
            x: x.map(BigInt::from),
            kind,
        }
    }
}

pub type Patch = BTreeSet<Face>;

/// A positive direction vector (1-alpha-beta, alpha, beta).
#[derive(Clone, Debug)]
pub struct Direction {
    nu: [FieldElement; 3],
}

impl Direction {
    pub fn new(point: &PointPair) -> Direction {
        Direction {
            nu: [point.gamma(), point.alpha.clone(), point.beta.clone()],
        }
    }

    pub fn components(&self) -> &[FieldElement; 3] {
        &self.nu
    }

    fn dot_sign(&self, x: &[BigInt; 3]) -> Result<i32> {
        let f = self.nu[0].field();
        let mut acc = f.zero();
        for (c, xi) in self.nu.iter().zip(x) {
            acc = &acc + &c.scale(&Rat::from_integer(xi.clone()));
        }
        acc.sign_at_root()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceVariant {
    /// Strict positive side: <x, nu> > 0 and <x - e_i, nu> <= 0.
    Standard,
    /// Shifted closure: <x, nu> >= 0 and <x - e_i, nu> < 0.
    Primed,
}

/// Exact membership test of a face in the stepped surface of a direction.
pub fn face_in_surface(dir: &Direction, face: &Face, variant: SurfaceVariant) -> Result<bool> {
    let s1 = dir.dot_sign(&face.x)?;
    let mut shifted = face.x.clone();
    shifted[face.kind as usize] -= 1;
    let s2 = dir.dot_sign(&shifted)?;
    Ok(match variant {
        SurfaceVariant::Standard => s1 > 0 && s2 <= 0,
        SurfaceVariant::Primed => s1 >= 0 && s2 < 0,
    })
}

fn linv_apply(d: Digit, x: &[BigInt; 3]) -> [BigInt; 3] {
    let mut y = x.clone();
    let sub = y[d.i as usize].clone();
    y[d.j as usize] -= sub;
    y
}

/// Incidence-dual substitution of one face: a face of the digit's target
/// kind splits into two, every other face maps through the inverse lattice
/// change alone.
pub fn theta_apply(eps: Digit, face: &Face) -> Vec<Face> {
    if face.kind == eps.j {
        let mut xe = face.x.clone();
        xe[eps.i as usize] += 1;
        vec![
            Face {
                x: linv_apply(eps, &xe),
                kind: eps.i,
            },
            Face {
                x: linv_apply(eps, &face.x),
                kind: eps.j,
            },
        ]
    } else {
        vec![Face {
            x: linv_apply(eps, &face.x),
            kind: face.kind,
        }]
    }
}

/// Applies the substitution to every face of a patch. Two faces mapping to
/// a common image face signal a broken direction pairing or an arithmetic
/// bug, so the collision is an error rather than a silent union.
pub fn patch_apply(eps: Digit, patch: &Patch) -> Result<Patch> {
    let mut out = Patch::new();
    for face in patch {
        for img in theta_apply(eps, face) {
            if !out.insert(img) {
                return Err(Error::FaceCollision);
            }
        }
    }
    Ok(out)
}

/// Iterated substitution along a digit word, innermost digit first: the
/// result is the composition Theta_{e0} ... Theta_{e_{n-1}} of the seed.
pub fn grow_patch(digits: &[Digit], seed: &Patch) -> Result<Patch> {
    let mut p = seed.clone();
    for &eps in digits.iter().rev() {
        p = patch_apply(eps, &p)?;
    }
    Ok(p)
}

/// The two canonical seeds: three faces at the unit vectors, or the same
/// three kinds attached to the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seed {
    UnitVectors,
    Origin,
}

pub fn seed_patch(seed: Seed) -> Patch {
    let mut p = Patch::new();
    for k in 0..3u8 {
        let mut x = [0i64; 3];
        if seed == Seed::UnitVectors {
            x[k as usize] = 1;
        }
        p.insert(Face::new(x, k));
    }
    p
}

/// Grows the patch of an orbit prefix from a canonical seed and verifies
/// that every face of the result lies in the surface of the initial
/// direction (the standard surface for the unit-vector seed, the primed
/// one for the origin seed).
pub fn grow_from_seed(digits: &[Digit], seed: Seed, dir: &Direction) -> Result<Patch> {
    let patch = grow_patch(digits, &seed_patch(seed))?;
    let variant = match seed {
        Seed::UnitVectors => SurfaceVariant::Standard,
        Seed::Origin => SurfaceVariant::Primed,
    };
    for face in &patch {
        if !face_in_surface(dir, face, variant)? {
            return Err(Error::SurfaceMembershipViolated);
        }
    }
    Ok(patch)
}

/// Exact face count the grown patch must have: the all-ones bilinear form
/// of the product of the digits' elementary matrices.
pub fn expected_face_count(digits: &[Digit]) -> BigInt {
    let mut m = mat_identity();
    for &d in digits {
        m = mat_mul(&m, &m_matrix(d));
    }
    m.iter().flatten().sum()
}

/// All faces of a surface whose base points lie in the centered cube of
/// the given radius.
pub fn window_faces(dir: &Direction, radius: i64, variant: SurfaceVariant) -> Result<Patch> {
    let mut out = Patch::new();
    for x0 in -radius..=radius {
        for x1 in -radius..=radius {
            for x2 in -radius..=radius {
                for kind in 0..3u8 {
                    let f = Face::new([x0, x1, x2], kind);
                    if face_in_surface(dir, &f, variant)? {
                        out.insert(f);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Step-by-step verification that each successive direction is the
/// transposed-inverse lattice image of the previous one, rescaled by the
/// digit's branch factor.
#[derive(Clone, Debug)]
pub struct EigenDirectionReport {
    pub steps: usize,
    pub failures: Vec<usize>,
}

impl EigenDirectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_eigen_direction(
    states: &[PointPair],
    digits: &[Digit],
) -> Result<EigenDirectionReport> {
    if states.len() != digits.len() + 1 {
        return Err(Error::invalid("need one more state than digits"));
    }
    let mut failures = Vec::new();
    for (n, &eps) in digits.iter().enumerate() {
        let cur = Direction::new(&states[n]);
        let next = Direction::new(&states[n + 1]);
        let mut image = cur.nu.clone();
        image[eps.i as usize] = &image[eps.i as usize] - &cur.nu[eps.j as usize];
        let denom = match (eps.i, eps.j) {
            (1, 2) | (0, 2) => &states[n].field().one() - &states[n].beta,
            (2, 1) | (0, 1) => &states[n].field().one() - &states[n].alpha,
            (1, 0) | (2, 0) => &states[n].alpha + &states[n].beta,
            _ => unreachable!(),
        };
        let factor = denom.inv()?;
        let ok = (0..3).all(|k| next.nu[k] == &image[k] * &factor);
        if !ok {
            failures.push(n);
        }
    }
    Ok(EigenDirectionReport {
        steps: digits.len(),
        failures,
    })
}

// ---------------------------------------------------------------------------
// Export.
// ---------------------------------------------------------------------------

/// Serialized form of a patch: the direction as exact coordinate strings,
/// faces as machine integers.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PatchDocument {
    pub direction: [[String; 3]; 3],
    pub faces: Vec<FaceDocument>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FaceDocument {
    pub x: [i64; 3],
    pub kind: u8,
}

fn face_to_document(face: &Face) -> Result<FaceDocument> {
    let mut x = [0i64; 3];
    for (slot, c) in x.iter_mut().zip(&face.x) {
        *slot = i64::try_from(c).map_err(|_| Error::invalid("face coordinate exceeds i64"))?;
    }
    Ok(FaceDocument { x, kind: face.kind })
}

pub fn export_json(patch: &Patch, dir: &Direction) -> Result<String> {
    let coord_strings = |e: &FieldElement| -> [String; 3] {
        let c = e.coords();
        [
            crate::ratstr::to_string(&c[0]),
            crate::ratstr::to_string(&c[1]),
            crate::ratstr::to_string(&c[2]),
        ]
    };
    let doc = PatchDocument {
        direction: [
            coord_strings(&dir.nu[0]),
            coord_strings(&dir.nu[1]),
            coord_strings(&dir.nu[2]),
        ],
        faces: patch.iter().map(face_to_document).collect::<Result<_>>()?,
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

/// Rendering options for the flat projection.
#[derive(Clone, Debug)]
pub struct SvgOptions {
    /// Fill colors for kinds 0, 1, 2.
    pub fills: [String; 3],
    pub origin_marker: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            fills: [
                "#d9d9d9".to_string(),
                "#969696".to_string(),
                "#525252".to_string(),
            ],
            origin_marker: false,
        }
    }
}

const SQRT3_HALF: f64 = 0.8660254037844386;

/// Projects the basis vectors to unit directions at 90, 210 and 330
/// degrees; the vertical axis is flipped for screen coordinates.
fn project(x: &[BigInt; 3]) -> Result<(f64, f64)> {
    let mut v = [0f64; 3];
    for (slot, c) in v.iter_mut().zip(x) {
        *slot = i64::try_from(c).map_err(|_| Error::invalid("face coordinate exceeds i64"))? as f64;
    }
    let px = -SQRT3_HALF * v[1] + SQRT3_HALF * v[2];
    let py = v[0] - 0.5 * v[1] - 0.5 * v[2];
    Ok((px, -py))
}

fn face_corners(face: &Face) -> [[BigInt; 3]; 4] {
    let (j, k) = match face.kind {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let mut a = face.x.clone();
    let mut b = face.x.clone();
    let mut c = face.x.clone();
    a[j] += 1;
    b[j] += 1;
    b[k] += 1;
    c[k] += 1;
    [face.x.clone(), a, b, c]
}

pub fn export_svg(patch: &Patch, options: &SvgOptions) -> Result<String> {
    let mut paths = Vec::with_capacity(patch.len());
    let mut bounds = Vec::new();
    for face in patch {
        let mut pts = Vec::with_capacity(4);
        for corner in face_corners(face) {
            let p = project(&corner)?;
            bounds.push(p);
            pts.push(p);
        }
        paths.push((pts, face.kind));
    }
    if options.origin_marker {
        bounds.push((0.0, 0.0));
    }
    if bounds.is_empty() {
        bounds.push((0.0, 0.0));
        bounds.push((1.0, 1.0));
    }
    let fold = |f: fn(f64, f64) -> f64, init: f64, pick: fn(&(f64, f64)) -> f64| {
        bounds.iter().map(pick).fold(init, f)
    };
    let min = (
        fold(f64::min, f64::INFINITY, |p| p.0),
        fold(f64::min, f64::INFINITY, |p| p.1),
    );
    let max = (
        fold(f64::max, f64::NEG_INFINITY, |p| p.0),
        fold(f64::max, f64::NEG_INFINITY, |p| p.1),
    );
    let margin = 0.25;
    let (w, h) = (
        max.0 - min.0 + 2.0 * margin,
        max.1 - min.1 + 2.0 * margin,
    );
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.4} {:.4} {:.4} {:.4}\">",
        min.0 - margin,
        min.1 - margin,
        w,
        h
    );
    for (pts, kind) in &paths {
        let mut d = String::new();
        for (k, (x, y)) in pts.iter().enumerate() {
            let _ = write!(d, "{}{:.4} {:.4} ", if k == 0 { "M" } else { "L" }, x, y);
        }
        d.push('Z');
        let _ = writeln!(
            svg,
            "<path d=\"{}\" fill=\"{}\" stroke=\"#000000\" stroke-width=\"0.02\"/>",
            d, options.fills[*kind as usize]
        );
    }
    if options.origin_marker {
        let _ = writeln!(svg, "<circle cx=\"0\" cy=\"0\" r=\"0.08\" fill=\"#000000\"/>");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Wavefront OBJ with one quad per face and shared vertices.
pub fn export_obj(patch: &Patch) -> Result<String> {
    let mut index: BTreeMap<[BigInt; 3], usize> = BTreeMap::new();
    let mut vertices: Vec<[BigInt; 3]> = Vec::new();
    let mut quads = Vec::with_capacity(patch.len());
    for face in patch {
        let mut q = [0usize; 4];
        for (slot, corner) in q.iter_mut().zip(face_corners(face)) {
            let next = index.len();
            let id = *index.entry(corner.clone()).or_insert_with(|| {
                vertices.push(corner);
                next
            });
            *slot = id + 1;
        }
        quads.push(q);
    }
    let mut obj = String::new();
    for v in &vertices {
        let _ = writeln!(obj, "v {} {} {}", v[0], v[1], v[2]);
    }
    for q in &quads {
        let _ = writeln!(obj, "f {} {} {} {}", q[0], q[1], q[2], q[3]);
    }
    Ok(obj)
}
