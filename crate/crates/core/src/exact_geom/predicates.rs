//! Exact decision predicates. There is no tolerance parameter: every test is
//! a sign or zero test on an exact determinant.

use super::construct::signed_area2;
use super::scalar::Scalar;
use super::types::{Circle, DirectedAngleClass, Line, Orientation, Point};

pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    match signed_area2(p, q, r).signum() {
        1 => Orientation::CounterClockwise,
        -1 => Orientation::Clockwise,
        _ => Orientation::Collinear,
    }
}

pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    signed_area2(p, q, r).is_zero()
}

/// Lifted incircle determinant of `p, q, r, s`; zero iff the four points are
/// concyclic (or collinear).
pub fn concyclic_det(p: &Point, q: &Point, r: &Point, s: &Point) -> Scalar {
    let rows: Vec<(Scalar, Scalar, Scalar)> = [p, q, r]
        .iter()
        .map(|v| {
            let d = *v - s;
            let n = d.norm2();
            (d.x, d.y, n)
        })
        .collect();
    let (a, b, c) = (&rows[0], &rows[1], &rows[2]);
    &a.0 * &(&b.1 * &c.2 - &b.2 * &c.1) - &a.1 * &(&b.0 * &c.2 - &b.2 * &c.0)
        + &a.2 * &(&b.0 * &c.1 - &b.1 * &c.0)
}

pub fn concyclic(p: &Point, q: &Point, r: &Point, s: &Point) -> bool {
    concyclic_det(p, q, r, s).is_zero()
}

/// Determinant of the three coefficient rows.
pub fn concurrency_det(l1: &Line, l2: &Line, l3: &Line) -> Scalar {
    l1.a() * &(l2.b() * l3.c() - l3.b() * l2.c()) - l1.b() * &(l2.a() * l3.c() - l3.a() * l2.c())
        + l1.c() * &(l2.a() * l3.b() - l3.a() * l2.b())
}

/// Affine concurrency: the three lines share a finite point. Three mutually
/// parallel lines are not concurrent.
pub fn concurrent(l1: &Line, l2: &Line, l3: &Line) -> bool {
    concurrency_det(l1, l2, l3).is_zero()
        && !(parallel(l1, l2) && parallel(l2, l3) && !(l1 == l2 && l2 == l3))
}

pub fn on_line(p: &Point, l: &Line) -> bool {
    l.eval(p).is_zero()
}

pub fn on_circle(p: &Point, c: &Circle) -> bool {
    c.power(p).is_zero()
}

pub fn parallel_det(l1: &Line, l2: &Line) -> Scalar {
    l1.a() * l2.b() - l2.a() * l1.b()
}

pub fn parallel(l1: &Line, l2: &Line) -> bool {
    parallel_det(l1, l2).is_zero()
}

pub fn perpendicular_dot(l1: &Line, l2: &Line) -> Scalar {
    l1.a() * l2.a() + l1.b() * l2.b()
}

pub fn perpendicular(l1: &Line, l2: &Line) -> bool {
    perpendicular_dot(l1, l2).is_zero()
}

/// Directed angle from `l1` to `l2`, modulo π.
pub fn directed_angle(l1: &Line, l2: &Line) -> DirectedAngleClass {
    let (d1, d2) = (l1.direction(), l2.direction());
    DirectedAngleClass {
        cross: d1.cross(&d2),
        dot: d1.dot(&d2),
    }
}

pub fn directed_angle_equal(pair1: (&Line, &Line), pair2: (&Line, &Line)) -> bool {
    directed_angle(pair1.0, pair1.1) == directed_angle(pair2.0, pair2.1)
}

/// Whether `p` lies on the closed segment `[a, b]` (collinearity included).
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if !collinear(a, b, p) {
        return false;
    }
    let ab = b - a;
    let t = (p - a).dot(&ab);
    !t.is_negative() && t <= ab.norm2()
}
