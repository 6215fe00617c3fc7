//! Ruler-and-compass constructions over exact rationals.
//!
//! Circle intersections are only ever taken against a known common point, so
//! every result is rational and no square root is needed.

use super::predicates::{on_circle, on_line};
use super::scalar::Scalar;
use super::types::{Circle, GeomError, GeomResult, Line, Point};

pub fn line_through(p: &Point, q: &Point) -> GeomResult<Line> {
    if p == q {
        return Err(GeomError::CoincidentPoints);
    }
    // (q − p)⊥ is a normal
    let a = &p.y - &q.y;
    let b = &q.x - &p.x;
    let c = -(&a * &p.x + &b * &p.y);
    Line::new(a, b, c)
}

pub fn intersect_lines(l1: &Line, l2: &Line) -> GeomResult<Point> {
    let det = l1.a() * l2.b() - l2.a() * l1.b();
    if det.is_zero() {
        let identical = (l1.a() * l2.c() - l2.a() * l1.c()).is_zero()
            && (l1.b() * l2.c() - l2.b() * l1.c()).is_zero();
        return Err(GeomError::ParallelLines { identical });
    }
    let x = (l1.b() * l2.c() - l2.b() * l1.c()) / &det;
    let y = (l2.a() * l1.c() - l1.a() * l2.c()) / &det;
    Ok(Point::new(x, y))
}

pub fn parallel_through(p: &Point, l: &Line) -> Line {
    let c = -(l.a() * &p.x + l.b() * &p.y);
    Line::new(l.a().clone(), l.b().clone(), c).expect("normal of a line is nonzero")
}

pub fn perpendicular_through(p: &Point, l: &Line) -> Line {
    let a = l.b().clone();
    let b = -l.a();
    let c = -(&a * &p.x + &b * &p.y);
    Line::new(a, b, c).expect("normal of a line is nonzero")
}

pub fn perpendicular_bisector(p: &Point, q: &Point) -> GeomResult<Line> {
    if p == q {
        return Err(GeomError::CoincidentPoints);
    }
    let n = q - p;
    let c = -(n.dot(&p.midpoint(q)));
    Line::new(n.x, n.y, c)
}

pub fn foot_perpendicular(p: &Point, l: &Line) -> Point {
    let n = l.normal();
    let t = l.eval(p) / n.norm2();
    p - &n.scale(&t)
}

/// Mirror image of `p` in `l`.
pub fn reflect_in_line(p: &Point, l: &Line) -> Point {
    let foot = foot_perpendicular(p, l);
    &(&foot + &foot) - p
}

pub fn circumcircle(p: &Point, q: &Point, r: &Point) -> GeomResult<Circle> {
    let u = q - p;
    let v = r - p;
    let det = u.cross(&v);
    if det.is_zero() {
        return Err(GeomError::CollinearPoints);
    }
    // d·ux + e·uy = −(|q|² − |p|²), likewise for v
    let ru = -(q.norm2() - p.norm2());
    let rv = -(r.norm2() - p.norm2());
    let d = (&ru * &v.y - &rv * &u.y) / &det;
    let e = (&u.x * &rv - &v.x * &ru) / &det;
    let f = -(p.norm2() + &d * &p.x + &e * &p.y);
    Ok(Circle::new(d, e, f))
}

/// Circle through `p` tangent to `l` at `t`.
pub fn circle_through_tangent(t: &Point, l: &Line, p: &Point) -> GeomResult<Circle> {
    if !on_line(t, l) {
        return Err(GeomError::degenerate("tangency point not on line"));
    }
    if p == t || on_line(p, l) {
        return Err(GeomError::degenerate("through-point on tangent line"));
    }
    let n = l.normal();
    let tp = t - p;
    let lambda = -tp.norm2() / (n.dot(&tp) + n.dot(&tp));
    let center = t + &n.scale(&lambda);
    let radius2 = center.dist2(t);
    Ok(Circle::from_center_radius2(&center, &radius2))
}

/// Tangent line to `c` at `p`.
pub fn tangent_at(p: &Point, c: &Circle) -> GeomResult<Line> {
    if !on_circle(p, c) {
        return Err(GeomError::PointNotOnCircle);
    }
    let radius = p - &c.center();
    if radius.is_zero_vector() {
        return Err(GeomError::degenerate("point circle"));
    }
    let cst = -radius.dot(p);
    Line::new(radius.x, radius.y, cst)
}

pub fn antipode(p: &Point, c: &Circle) -> GeomResult<Point> {
    if !on_circle(p, c) {
        return Err(GeomError::PointNotOnCircle);
    }
    Ok(reflect_in_point(p, &c.center()))
}

pub fn reflect_in_point(p: &Point, center: &Point) -> Point {
    &(center + center) - p
}

/// Result of a Vieta second-intersection: the other common point, and
/// whether the two objects were tangent at the known point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondIntersection {
    pub point: Point,
    pub tangent: bool,
}

pub fn second_intersection_circle_line(
    c: &Circle,
    l: &Line,
    x: &Point,
) -> GeomResult<SecondIntersection> {
    if !on_circle(x, c) {
        return Err(GeomError::PointNotOnCircle);
    }
    if !on_line(x, l) {
        return Err(GeomError::PointNotOnLine);
    }
    // x + t·u on the circle: t²|u|² + t(2x·u + d·ux + e·uy) = 0
    let u = l.direction();
    let linear = &(x.dot(&u) + x.dot(&u)) + &(&c.d * &u.x + &c.e * &u.y);
    let t = -linear / u.norm2();
    let tangent = t.is_zero();
    Ok(SecondIntersection {
        point: x + &u.scale(&t),
        tangent,
    })
}

pub fn radical_axis(c1: &Circle, c2: &Circle) -> GeomResult<Line> {
    let dd = &c1.d - &c2.d;
    let de = &c1.e - &c2.e;
    let df = &c1.f - &c2.f;
    if dd.is_zero() && de.is_zero() {
        return Err(if df.is_zero() {
            GeomError::CirclesIdentical
        } else {
            GeomError::degenerate("concentric circles")
        });
    }
    Line::new(dd, de, df)
}

pub fn second_intersection_circles(
    c1: &Circle,
    c2: &Circle,
    x: &Point,
) -> GeomResult<SecondIntersection> {
    if c1 == c2 {
        return Err(GeomError::CirclesIdentical);
    }
    if !on_circle(x, c1) || !on_circle(x, c2) {
        return Err(GeomError::PointNotOnCircle);
    }
    let axis = radical_axis(c1, c2)?;
    second_intersection_circle_line(c1, &axis, x)
}

pub fn polar_of_point(p: &Point, c: &Circle) -> GeomResult<Line> {
    let center = c.center();
    if *p == center {
        return Err(GeomError::CenterDegenerate);
    }
    let a = &p.x + &c.d.half();
    let b = &p.y + &c.e.half();
    let cst = &(&c.d * &p.x + &c.e * &p.y).half() + &c.f;
    Line::new(a, b, cst)
}

pub fn pole_of_line(l: &Line, c: &Circle) -> GeomResult<Point> {
    let denom = &(&c.d * l.a() + &c.e * l.b()).half() - l.c();
    if denom.is_zero() {
        return Err(GeomError::CenterDegenerate);
    }
    let lambda = c.radius2() / denom;
    Ok(&c.center() + &l.normal().scale(&lambda))
}

/// Inverse of `p` in `c`; `p` must not be the center.
pub fn invert_in_circle(p: &Point, c: &Circle) -> GeomResult<Point> {
    let center = c.center();
    let v = p - &center;
    let n = v.norm2();
    if n.is_zero() {
        return Err(GeomError::CenterDegenerate);
    }
    Ok(&center + &v.scale(&(c.radius2() / n)))
}

/// Signed double area of `abc` (positive when anticlockwise).
pub fn signed_area2(a: &Point, b: &Point, c: &Point) -> Scalar {
    (b - a).cross(&(c - a))
}

/// Point with barycentric coordinates `(u : v : w)`.
pub fn from_barycentric(
    u: &Scalar,
    v: &Scalar,
    w: &Scalar,
    a: &Point,
    b: &Point,
    c: &Point,
) -> GeomResult<Point> {
    let total = u + v + w;
    let inv = total
        .recip()
        .ok_or_else(|| GeomError::degenerate("barycentric weights sum to zero"))?;
    let x = (u * &a.x + v * &b.x + w * &c.x) * &inv;
    let y = (u * &a.y + v * &b.y + w * &c.y) * &inv;
    Ok(Point::new(x, y))
}

pub fn isogonal_conjugate(p: &Point, a: &Point, b: &Point, c: &Point) -> GeomResult<Point> {
    let bary = [signed_area2(p, b, c), signed_area2(a, p, c), signed_area2(a, b, p)];
    if bary.iter().any(Scalar::is_zero) {
        return Err(GeomError::degenerate("point on a sideline"));
    }
    let sides = [b.dist2(c), c.dist2(a), a.dist2(b)];
    let w: Vec<Scalar> = sides.iter().zip(&bary).map(|(s, x)| s / x).collect();
    from_barycentric(&w[0], &w[1], &w[2], a, b, c)
        .map_err(|_| GeomError::degenerate("point on the circumcircle"))
}

/// Feet of the perpendiculars from `p` to BC, CA, AB.
pub fn pedal_feet(p: &Point, a: &Point, b: &Point, c: &Point) -> GeomResult<[Point; 3]> {
    Ok([
        foot_perpendicular(p, &line_through(b, c)?),
        foot_perpendicular(p, &line_through(c, a)?),
        foot_perpendicular(p, &line_through(a, b)?),
    ])
}

pub fn simson_line(p: &Point, a: &Point, b: &Point, c: &Point) -> GeomResult<Line> {
    let circ = circumcircle(a, b, c)?;
    if !on_circle(p, &circ) {
        return Err(GeomError::PointNotOnCircle);
    }
    let [d, e, f] = pedal_feet(p, a, b, c)?;
    let line = if d != e { line_through(&d, &e)? } else { line_through(&d, &f)? };
    debug_assert!(on_line(&f, &line) && on_line(&e, &line));
    Ok(line)
}

impl Point {
    pub fn is_zero_vector(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::predicates::{collinear, perpendicular};
    use crate::exact_geom::scalar::q;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn ln(a: i64, b: i64, c: i64) -> Line {
        Line::from_ints(a, b, c).unwrap()
    }

    fn unit() -> Circle {
        Circle::from_center_radius2(&Point::origin(), &q(1, 1))
    }

    #[test]
    fn line_through_examples() {
        assert_eq!(line_through(&pt(0, 0), &pt(1, 0)).unwrap(), ln(0, 1, 0));
        assert_eq!(line_through(&pt(1, 0), &pt(0, 1)).unwrap(), ln(1, 1, -1));
        assert_eq!(line_through(&pt(2, 3), &pt(2, 3)), Err(GeomError::CoincidentPoints));
    }

    #[test]
    fn intersect_lines_examples() {
        assert_eq!(intersect_lines(&ln(1, 1, -4), &ln(1, -1, 0)).unwrap(), pt(2, 2));
        assert_eq!(
            intersect_lines(&ln(0, 1, 0), &ln(0, 1, -1)),
            Err(GeomError::ParallelLines { identical: false })
        );
        assert_eq!(
            intersect_lines(&ln(0, 1, 0), &ln(0, 2, 0)),
            Err(GeomError::ParallelLines { identical: true })
        );
        assert_eq!(intersect_lines(&ln(0, 1, 0), &ln(1, 0, 0)).unwrap(), pt(0, 0));
    }

    #[test]
    fn parallel_and_perpendicular_examples() {
        assert_eq!(parallel_through(&pt(0, 1), &ln(0, 1, 0)), ln(0, 1, -1));
        assert_eq!(parallel_through(&pt(1, 0), &ln(1, 1, -1)), ln(1, 1, -1));
        assert_eq!(parallel_through(&pt(2, 2), &ln(1, 1, -1)), ln(1, 1, -4));
        assert_eq!(perpendicular_through(&pt(0, 0), &ln(0, 1, 0)), ln(1, 0, 0));
        assert_eq!(perpendicular_through(&pt(1, 1), &ln(1, 1, 0)), ln(1, -1, 0));
        assert_eq!(perpendicular_through(&pt(3, 4), &ln(1, 0, 0)), ln(0, 1, -4));
    }

    #[test]
    fn perpendicular_bisector_examples() {
        assert_eq!(perpendicular_bisector(&pt(0, 0), &pt(2, 0)).unwrap(), ln(1, 0, -1));
        assert_eq!(perpendicular_bisector(&pt(1, 0), &pt(0, 1)).unwrap(), ln(1, -1, 0));
        assert_eq!(perpendicular_bisector(&pt(0, 0), &pt(0, 0)), Err(GeomError::CoincidentPoints));
    }

    #[test]
    fn foot_examples() {
        assert_eq!(foot_perpendicular(&pt(3, 4), &ln(0, 1, 0)), pt(3, 0));
        assert_eq!(foot_perpendicular(&pt(4, 4), &ln(1, 1, -4)), pt(2, 2));
        assert_eq!(foot_perpendicular(&pt(1, 3), &ln(1, 1, -4)), pt(1, 3));
    }

    #[test]
    fn circumcircle_examples() {
        let c = circumcircle(&pt(0, 0), &pt(2, 0), &pt(0, 2)).unwrap();
        assert_eq!(c.center(), pt(1, 1));
        assert_eq!(c.radius2(), q(2, 1));
        assert_eq!(circumcircle(&pt(1, 0), &pt(0, 1), &pt(-1, 0)).unwrap(), unit());
        assert_eq!(circumcircle(&pt(0, 0), &pt(1, 1), &pt(2, 2)), Err(GeomError::CollinearPoints));
    }

    #[test]
    fn tangent_circle_examples() {
        let c = circle_through_tangent(&pt(0, 0), &ln(0, 1, 0), &pt(0, 2)).unwrap();
        assert_eq!(c, Circle::from_center_radius2(&pt(0, 1), &q(1, 1)));
        let c = circle_through_tangent(&pt(1, 0), &ln(1, 0, -1), &pt(-1, 0)).unwrap();
        assert_eq!(c, unit());
        assert!(matches!(
            circle_through_tangent(&pt(0, 0), &ln(0, 1, 0), &pt(3, 0)),
            Err(GeomError::Degenerate(_))
        ));
        assert!(matches!(
            circle_through_tangent(&pt(0, 1), &ln(0, 1, 0), &pt(3, 3)),
            Err(GeomError::Degenerate(_))
        ));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&pt(1, 0), &unit()).unwrap(), pt(-1, 0));
        assert_eq!(antipode(&pt(0, 1), &unit()).unwrap(), pt(0, -1));
        assert_eq!(antipode(&pt(2, 0), &unit()), Err(GeomError::PointNotOnCircle));
    }

    #[test]
    fn second_intersection_examples() {
        let c1 = Circle::from_center_radius2(&pt(0, 0), &q(25, 1));
        let c2 = Circle::from_center_radius2(&pt(8, 0), &q(25, 1));
        let s = second_intersection_circles(&c1, &c2, &pt(4, 3)).unwrap();
        assert_eq!(s, SecondIntersection { point: pt(4, -3), tangent: false });

        let c3 = Circle::from_center_radius2(&pt(2, 0), &q(1, 1));
        let s = second_intersection_circles(&unit(), &c3, &pt(1, 0)).unwrap();
        assert_eq!(s, SecondIntersection { point: pt(1, 0), tangent: true });

        assert_eq!(
            second_intersection_circles(&c1, &c1, &pt(4, 3)),
            Err(GeomError::CirclesIdentical)
        );
    }

    #[test]
    fn circle_line_examples() {
        let c = Circle::from_center_radius2(&pt(0, 0), &q(25, 1));
        let s = second_intersection_circle_line(&c, &ln(0, 1, -3), &pt(4, 3)).unwrap();
        assert_eq!(s.point, pt(-4, 3));
        assert!(!s.tangent);
        let s = second_intersection_circle_line(&unit(), &ln(1, 0, -1), &pt(1, 0)).unwrap();
        assert_eq!(s, SecondIntersection { point: pt(1, 0), tangent: true });
        assert_eq!(
            second_intersection_circle_line(&unit(), &ln(1, 0, 0), &pt(0, 0)),
            Err(GeomError::PointNotOnCircle)
        );
        assert_eq!(
            second_intersection_circle_line(&unit(), &ln(1, 0, 0), &pt(1, 0)),
            Err(GeomError::PointNotOnLine)
        );
    }

    #[test]
    fn pole_polar_examples() {
        let p = Point::new(q(1, 4), q(0, 1));
        assert_eq!(polar_of_point(&p, &unit()).unwrap(), ln(1, 0, -4));
        assert_eq!(pole_of_line(&ln(1, 0, -4), &unit()).unwrap(), p);
        assert_eq!(polar_of_point(&pt(0, 0), &unit()), Err(GeomError::CenterDegenerate));
        assert_eq!(pole_of_line(&ln(1, 1, 0), &unit()), Err(GeomError::CenterDegenerate));
    }

    // Orthocenter as the intersection of two altitudes, independent of the
    // barycentric route used by `isogonal_conjugate`.
    fn orthocenter_oracle(a: &Point, b: &Point, c: &Point) -> Point {
        let alt_a = perpendicular_through(a, &line_through(b, c).unwrap());
        let alt_b = perpendicular_through(b, &line_through(c, a).unwrap());
        intersect_lines(&alt_a, &alt_b).unwrap()
    }

    #[test]
    fn isogonal_circumcenter_to_orthocenter() {
        let (a, b, c) = (pt(0, 0), pt(4, 0), pt(1, 3));
        let o = circumcircle(&a, &b, &c).unwrap().center();
        assert_eq!(o, pt(2, 1));
        let h = orthocenter_oracle(&a, &b, &c);
        assert_eq!(h, pt(1, 1));
        assert_eq!(isogonal_conjugate(&o, &a, &b, &c).unwrap(), h);
    }

    #[test]
    fn isogonal_centroid_to_symmedian() {
        let (a, b, c) = (pt(0, 0), pt(4, 0), pt(1, 3));
        let g = Point::new(q(5, 3), q(1, 1));
        // a² = |BC|² = 18, b² = |CA|² = 10, c² = |AB|² = 16
        let total = q(44, 1);
        let k = Point::new(
            (q(18, 1) * &a.x + q(10, 1) * &b.x + q(16, 1) * &c.x) / &total,
            (q(18, 1) * &a.y + q(10, 1) * &b.y + q(16, 1) * &c.y) / &total,
        );
        assert_eq!(k, Point::new(q(14, 11), q(12, 11)));
        assert_eq!(isogonal_conjugate(&g, &a, &b, &c).unwrap(), k);
        assert!(matches!(
            isogonal_conjugate(&pt(2, 0), &a, &b, &c),
            Err(GeomError::Degenerate(_))
        ));
        assert!(matches!(
            isogonal_conjugate(&pt(4, 2), &a, &b, &c),
            Err(GeomError::Degenerate(_))
        ));
    }

    #[test]
    fn simson_examples() {
        let (a, b, c) = (pt(0, 0), pt(4, 0), pt(0, 4));
        let l = simson_line(&pt(4, 4), &a, &b, &c).unwrap();
        assert_eq!(l, ln(1, 1, -4));
        let feet = pedal_feet(&pt(4, 4), &a, &b, &c).unwrap();
        assert_eq!(feet, [pt(2, 2), pt(0, 4), pt(4, 0)]);
        assert!(collinear(&feet[0], &feet[1], &feet[2]));
        assert_eq!(simson_line(&a, &a, &b, &c).unwrap(), ln(1, -1, 0));
        assert_eq!(simson_line(&pt(1, 1), &a, &b, &c), Err(GeomError::PointNotOnCircle));
    }

    #[test]
    fn tangent_at_is_perpendicular_to_radius() {
        let t = tangent_at(&pt(0, 1), &unit()).unwrap();
        assert_eq!(t, ln(0, 1, -1));
        let r = line_through(&pt(0, 0), &pt(0, 1)).unwrap();
        assert!(perpendicular(&t, &r));
    }
}
