//! Planar faces and the orbit ratios at which they occur.

use serde::{Deserialize, Serialize};

use super::poly::{complex_roots, rationalize, Poly};
use crate::exactgeom::{FieldElement, Vec3};
use crate::solids::{Alignment, Frame};
use crate::tracer::GeometricPolyhedron;

const ROOT_TOLERANCE: f64 = 1e-10;
const MAX_DENOMINATOR: i64 = 1_000_000;

/// Whether the points span at most a plane.
fn coplanar(points: &[Vec3]) -> bool {
    let Some(o) = points.first() else { return true };
    let diffs: Vec<Vec3> = points[1..].iter().map(|p| p - o).collect();
    let normal = diffs
        .iter()
        .enumerate()
        .flat_map(|(i, a)| diffs[i + 1..].iter().map(move |b| a.cross(b)))
        .find(|n| !n.is_zero());
    match normal {
        None => true,
        Some(n) => diffs.iter().all(|d| n.dot(d).is_zero()),
    }
}

/// Per-face planarity at a concrete ratio.
pub fn planarity(p: &GeometricPolyhedron, lambda: &FieldElement) -> Vec<bool> {
    let pos = p.positions(lambda);
    p.faces().iter().map(|f| coplanar(&f.iter().map(|&v| pos[v].clone()).collect::<Vec<_>>())).collect()
}

type PolyVec = [Poly; 3];

fn position_poly(frame: &Frame, label: usize) -> PolyVec {
    let n = frame.orbit_size();
    let v = frame.solid().vertex(label % n);
    if label < n {
        return v.0.clone().map(Poly::constant);
    }
    let sign = match frame.config().alignment {
        Alignment::Aligned => FieldElement::one(),
        Alignment::Opposed => FieldElement::from_int(-1),
    };
    v.0.clone().map(|c| Poly::linear(&c * &sign))
}

fn sub(a: &PolyVec, b: &PolyVec) -> PolyVec {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn triple(a: &PolyVec, b: &PolyVec, c: &PolyVec) -> Poly {
    let cross = [
        &(&b[1] * &c[2]) - &(&b[2] * &c[1]),
        &(&b[2] * &c[0]) - &(&b[0] * &c[2]),
        &(&b[0] * &c[1]) - &(&b[1] * &c[0]),
    ];
    &(&(&a[0] * &cross[0]) + &(&a[1] * &cross[1])) + &(&a[2] * &cross[2])
}

/// All 3×3 minors of the face's difference vectors, as polynomials in λ.
/// The face is planar exactly at the common roots.
pub fn face_minors(p: &GeometricPolyhedron, face: usize) -> Vec<Poly> {
    let frame = p.frame();
    let cycle = &p.faces()[face];
    let pts: Vec<PolyVec> = cycle.iter().map(|&l| position_poly(frame, l)).collect();
    let diffs: Vec<PolyVec> = pts[1..].iter().map(|q| sub(q, &pts[0])).collect();
    let m = diffs.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let t = triple(&diffs[i], &diffs[j], &diffs[k]);
                if !t.is_zero() {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Outcome of the planar-ratio search for a family.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PlanarSearch {
    /// Ratios in Q(√5) at which every face is planar, verified exactly.
    pub exact: Vec<FieldElement>,
    /// Numeric common roots that could not be confirmed in Q(√5).
    pub inexact: Vec<f64>,
}

impl PlanarSearch {
    pub fn unique(&self) -> Option<&FieldElement> {
        match self.exact.as_slice() {
            [one] => Some(one),
            _ => None,
        }
    }
}

fn real_roots(poly: &Poly) -> Vec<f64> {
    let coeffs = poly.to_f64();
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs())).max(1.0);
    complex_roots(&coeffs)
        .into_iter()
        .filter(|z| z.im.abs() <= ROOT_TOLERANCE * scale.max(z.re.abs()))
        .map(|z| z.re)
        .collect()
}

/// Ratios `λ > 0`, `λ ≠ 1`, at which all faces of the family are planar.
///
/// The minors of one face are polynomials in λ. Their numeric roots `x`
/// and the roots `y` of the conjugate polynomial give the candidates
/// `a = (x+y)/2`, `b = (x−y)/(2√5)`, which are rounded to nearby rationals
/// and confirmed by exact substitution.
pub fn find_planar_lambda(p: &GeometricPolyhedron) -> PlanarSearch {
    let mut search = PlanarSearch::default();
    if p.faces().is_empty() {
        return search;
    }
    let minors = face_minors(p, 0);
    let Some(pivot) = minors.iter().min_by_key(|m| m.degree()) else {
        return search;
    };
    let sqrt5 = 5f64.sqrt();
    let xs = real_roots(pivot);
    let ys = real_roots(&pivot.conjugate());
    let admissible = |x: f64| x > ROOT_TOLERANCE && (x - 1.0).abs() > ROOT_TOLERANCE;
    let common_numeric = |x: f64| {
        minors.iter().all(|m| {
            let scale = m.to_f64().iter().fold(0.0f64, |s, c| s.max(c.abs())).max(1.0);
            m.eval_f64(x).abs() <= 1e-8 * scale * (1.0 + x.abs()).powi(3)
        })
    };
    for &x in xs.iter().filter(|&&x| admissible(x)) {
        let mut confirmed = false;
        for &y in &ys {
            let (Some(a), Some(b)) =
                (rationalize((x + y) / 2.0, MAX_DENOMINATOR), rationalize((x - y) / (2.0 * sqrt5), MAX_DENOMINATOR))
            else {
                continue;
            };
            let lambda = FieldElement::new(a, b);
            if !lambda.is_positive() || lambda.is_one() {
                continue;
            }
            if (lambda.to_f64() - x).abs() > ROOT_TOLERANCE * x.max(1.0) {
                continue;
            }
            if minors.iter().all(|m| m.eval(&lambda).is_zero()) && planarity(p, &lambda).iter().all(|&b| b) {
                if !search.exact.contains(&lambda) {
                    search.exact.push(lambda);
                }
                confirmed = true;
                break;
            }
        }
        if !confirmed && common_numeric(x) && !search.inexact.iter().any(|&z| (z - x).abs() < ROOT_TOLERANCE) {
            search.inexact.push(x);
        }
    }
    search.exact.sort();
    search
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solids::{SolidKind, VertexConfiguration};
    use crate::tracer::{assemble, FaceShape, TurnSymbol::*};

    fn ico1(shape: FaceShape) -> GeometricPolyhedron {
        assemble(&VertexConfiguration::new(SolidKind::Icosahedron, Alignment::Aligned, 1), shape).unwrap()
    }

    #[test]
    fn square_faces_planar_at_tau() {
        let p = ico1(FaceShape::new(Hr, Sr));
        let s = find_planar_lambda(&p);
        assert_eq!(s.unique(), Some(&FieldElement::tau()));
        assert!(s.inexact.is_empty());
        assert!(planarity(&p, &FieldElement::tau()).iter().all(|&b| b));
        assert!(!planarity(&p, &FieldElement::from_int(2)).iter().any(|&b| b));
    }

    #[test]
    fn hexagons_planar_at_two_tau_plus_one() {
        let p = ico1(FaceShape::new(Hr, Sl));
        let two_tau_plus_one = &(&FieldElement::tau() * &FieldElement::from_int(2)) + &FieldElement::one();
        assert_eq!(find_planar_lambda(&p).unique(), Some(&two_tau_plus_one));
    }

    #[test]
    fn doubled_family_has_no_planar_member() {
        let p = ico1(FaceShape::new(Hr, Hr));
        assert_eq!(find_planar_lambda(&p), PlanarSearch::default());
    }

    #[test]
    fn coplanarity() {
        let sq = [Vec3::from_ints(0, 0, 0), Vec3::from_ints(1, 0, 0), Vec3::from_ints(1, 1, 0), Vec3::from_ints(0, 1, 0)];
        assert!(coplanar(&sq));
        let skew = [Vec3::from_ints(0, 0, 0), Vec3::from_ints(1, 0, 0), Vec3::from_ints(1, 1, 0), Vec3::from_ints(0, 1, 1)];
        assert!(!coplanar(&skew));
    }
}
