//! Points of the projective closure, for intersections of chords that may be
//! parallel.

use serde::{Deserialize, Serialize};

use super::construct::{intersect_lines, line_through};
use super::predicates::parallel;
use super::scalar::Scalar;
use super::types::{Circle, GeomError, GeomResult, Line, Point};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProjectivePoint {
    Finite(Point),
    /// Direction normalized so its first nonzero coordinate is 1.
    Infinite(Point),
}

fn normalize_direction(d: &Point) -> Point {
    let lead = if d.x.is_zero() { &d.y } else { &d.x };
    let inv = lead.recip().expect("nonzero direction");
    d.scale(&inv)
}

impl ProjectivePoint {
    /// Meet of two distinct lines; parallel lines meet at infinity.
    pub fn meet(l1: &Line, l2: &Line) -> GeomResult<Self> {
        if parallel(l1, l2) {
            if l1 == l2 {
                return Err(GeomError::ParallelLines { identical: true });
            }
            return Ok(ProjectivePoint::Infinite(normalize_direction(&l1.direction())));
        }
        intersect_lines(l1, l2).map(ProjectivePoint::Finite)
    }

    pub fn finite(&self) -> Option<&Point> {
        match self {
            ProjectivePoint::Finite(p) => Some(p),
            ProjectivePoint::Infinite(_) => None,
        }
    }

    pub fn finite_mut(&mut self) -> Option<&mut Point> {
        match self {
            ProjectivePoint::Finite(p) => Some(p),
            ProjectivePoint::Infinite(_) => None,
        }
    }

    /// Homogeneous incidence with `l`; zero iff the point lies on `l`.
    pub fn incidence(&self, l: &Line) -> Scalar {
        match self {
            ProjectivePoint::Finite(p) => l.eval(p),
            ProjectivePoint::Infinite(d) => l.a() * &d.x + l.b() * &d.y,
        }
    }

    /// Homogeneous coordinates `(x, y, w)`.
    pub fn homogeneous(&self) -> [Scalar; 3] {
        match self {
            ProjectivePoint::Finite(p) => [p.x.clone(), p.y.clone(), Scalar::one()],
            ProjectivePoint::Infinite(d) => [d.x.clone(), d.y.clone(), Scalar::zero()],
        }
    }
}

/// Determinant of the homogeneous coordinates; zero iff the three points are
/// collinear in the projective plane.
pub fn projective_collinearity_det(p: &ProjectivePoint, q: &ProjectivePoint, r: &ProjectivePoint) -> Scalar {
    let [a, b, c] = [p.homogeneous(), q.homogeneous(), r.homogeneous()];
    &a[0] * &(&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * &(&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * &(&b[0] * &c[1] - &b[1] * &c[0])
}

/// Affine line through two projective points, at least one finite.
pub fn projective_line_through(p: &ProjectivePoint, q: &ProjectivePoint) -> GeomResult<Line> {
    match (p, q) {
        (ProjectivePoint::Finite(a), ProjectivePoint::Finite(b)) => line_through(a, b),
        (ProjectivePoint::Finite(a), ProjectivePoint::Infinite(d))
        | (ProjectivePoint::Infinite(d), ProjectivePoint::Finite(a)) => line_through(a, &(a + d)),
        _ => Err(GeomError::degenerate("line at infinity")),
    }
}

/// Polar of a projective point; for a point at infinity this is the diameter
/// perpendicular to its direction.
pub fn projective_polar(p: &ProjectivePoint, c: &Circle) -> GeomResult<Line> {
    match p {
        ProjectivePoint::Finite(pt) => super::construct::polar_of_point(pt, c),
        ProjectivePoint::Infinite(d) => {
            let cst = (&c.d * &d.x + &c.e * &d.y).half();
            Line::new(d.x.clone(), d.y.clone(), cst)
        }
    }
}
