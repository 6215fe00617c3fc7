use crate::exact_geom::{
    circle_through_tangent, circumcircle, foot_perpendicular, intersect_lines, line_through,
    on_circle, on_line, second_intersection_circles, Circle, Complex, GeomError, GeomResult, Line,
    Point,
};

/// Circle through a vertex and one point on each of the two sidelines
/// meeting there. When a side point coincides with the vertex the circle is
/// taken tangent to that side at the vertex, which is the limit the
/// classical configuration needs.
pub fn corner_circle(
    vertex: &Point,
    p: &Point,
    p_side: &Line,
    q: &Point,
    q_side: &Line,
) -> GeomResult<Circle> {
    match (p == vertex, q == vertex) {
        (true, true) => Err(GeomError::degenerate("both side points at the vertex")),
        (true, false) => circle_through_tangent(vertex, p_side, q),
        (false, true) => circle_through_tangent(vertex, q_side, p),
        (false, false) => circumcircle(vertex, p, q),
    }
}

/// The three circles `⊙(AEF), ⊙(BFD), ⊙(CDE)` (with tangent limits).
pub fn miquel_circles(
    d: &Point,
    e: &Point,
    f: &Point,
    a: &Point,
    b: &Point,
    c: &Point,
) -> GeomResult<[Circle; 3]> {
    let bc = line_through(b, c)?;
    let ca = line_through(c, a)?;
    let ab = line_through(a, b)?;
    for (pt, side, name) in [(d, &bc, "D not on BC"), (e, &ca, "E not on CA"), (f, &ab, "F not on AB")] {
        if !on_line(pt, side) {
            return Err(GeomError::degenerate(name));
        }
    }
    Ok([
        corner_circle(a, e, &ca, f, &ab)?,
        corner_circle(b, f, &ab, d, &bc)?,
        corner_circle(c, d, &bc, e, &ca)?,
    ])
}

/// Miquel point of `DEF` in `ABC`. The third circle's membership is asserted.
pub fn miquel_point(
    d: &Point,
    e: &Point,
    f: &Point,
    a: &Point,
    b: &Point,
    c: &Point,
) -> GeomResult<Point> {
    let [circle_a, circle_b, circle_c] = miquel_circles(d, e, f, a, b, c)?;
    let m = second_intersection_circles(&circle_a, &circle_b, f)?.point;
    if !on_circle(&m, &circle_c) {
        return Err(GeomError::degenerate("Miquel point misses the third circle"));
    }
    Ok(m)
}

/// The two diagonal points `P = AB ∩ CD`, `Q = AD ∩ BC` and the Miquel point
/// of quadrangle `ABCD`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrangleMiquel {
    pub p: Point,
    pub q: Point,
    pub m: Point,
}

pub fn quadrangle_miquel(a: &Point, b: &Point, c: &Point, d: &Point) -> GeomResult<QuadrangleMiquel> {
    let p = intersect_lines(&line_through(a, b)?, &line_through(c, d)?)
        .map_err(|_| GeomError::degenerate("P: AB parallel to CD"))?;
    let q = intersect_lines(&line_through(a, d)?, &line_through(b, c)?)
        .map_err(|_| GeomError::degenerate("Q: AD parallel to BC"))?;
    let pad = circumcircle(&p, a, d)?;
    let qab = circumcircle(&q, a, b)?;
    let m = second_intersection_circles(&pad, &qab, a)?.point;
    if !on_circle(&m, &circumcircle(&p, b, c)?) || !on_circle(&m, &circumcircle(&q, c, d)?) {
        return Err(GeomError::degenerate("quadrangle Miquel point misses a circle"));
    }
    Ok(QuadrangleMiquel { p, q, m })
}

pub fn miquel_point_quadrangle(a: &Point, b: &Point, c: &Point, d: &Point) -> GeomResult<Point> {
    quadrangle_miquel(a, b, c, d).map(|qm| qm.m)
}

/// `(d − m) / (foot(m, side) − m)`: the spiral similarity about `m` taking
/// the pedal foot on `side` to `d`.
pub fn spiral_ratio(m: &Point, d: &Point, side: &Line) -> GeomResult<Complex> {
    if on_line(m, side) {
        return Err(GeomError::degenerate("center on side"));
    }
    if !on_line(d, side) {
        return Err(GeomError::PointNotOnLine);
    }
    let foot = foot_perpendicular(m, side);
    (d - m)
        .to_complex()
        .checked_div(&(&foot - m).to_complex())
        .ok_or_else(|| GeomError::degenerate("center on side"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::{circumcircle, collinear, line_through, perpendicular, q, Scalar};
    use crate::scene_gen::circle_point_from_parameter;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn medial_triangle_gives_circumcenter() {
        let (a, b, c) = (pt(0, 0), pt(4, 0), pt(1, 3));
        let m = miquel_point(&b.midpoint(&c), &c.midpoint(&a), &a.midpoint(&b), &a, &b, &c).unwrap();
        assert_eq!(m, pt(2, 1));
        assert_eq!(m, circumcircle(&a, &b, &c).unwrap().center());
    }

    #[test]
    fn point_on_wrong_side_is_degenerate() {
        let (a, b, c) = (pt(0, 0), pt(4, 0), pt(1, 3));
        let err = miquel_point(&c.midpoint(&a), &c.midpoint(&a), &a.midpoint(&b), &a, &b, &c);
        assert!(matches!(err, Err(GeomError::Degenerate(_))));
    }

    #[test]
    fn square_quadrangle_is_degenerate() {
        let r = miquel_point_quadrangle(&pt(1, 0), &pt(0, 1), &pt(-1, 0), &pt(0, -1));
        assert!(matches!(r, Err(GeomError::Degenerate(ref s)) if s.starts_with("P")));
    }

    #[test]
    fn cyclic_quadrangle_miquel_on_diagonal_line() {
        let (o, one) = (Point::origin(), Scalar::one());
        let [a, b, c, d] = [q(0, 1), q(1, 1), q(-1, 1), q(3, 1)]
            .map(|t| circle_point_from_parameter(&t, &o, &one));
        let qm = quadrangle_miquel(&a, &b, &c, &d).unwrap();
        for (x, y, z) in [(&qm.p, &a, &d), (&qm.p, &b, &c), (&qm.q, &a, &b), (&qm.q, &c, &d)] {
            assert!(on_circle(&qm.m, &circumcircle(x, y, z).unwrap()));
        }
        assert!(collinear(&qm.p, &qm.q, &qm.m));
        let pq = line_through(&qm.p, &qm.q).unwrap();
        assert!(perpendicular(&line_through(&o, &qm.m).unwrap(), &pq));
    }

    #[test]
    fn spiral_ratio_at_foot_is_one() {
        let side = line_through(&pt(0, 0), &pt(4, 0)).unwrap();
        let m = pt(1, 2);
        assert_eq!(spiral_ratio(&m, &pt(1, 0), &side).unwrap(), Complex::one());
        // d = foot + 1 along the side: ratio (1, −2)/(0, −2) = 1 + i/2
        assert_eq!(
            spiral_ratio(&m, &pt(2, 0), &side).unwrap(),
            Complex::new(q(1, 1), q(1, 2))
        );
        assert!(spiral_ratio(&pt(3, 0), &pt(1, 0), &side).is_err());
    }

    #[test]
    fn tangent_limit_corner_circle() {
        let (a, b) = (pt(0, 0), pt(4, 0));
        let ab = line_through(&a, &b).unwrap();
        let ac = line_through(&a, &pt(0, 3)).unwrap();
        let c = corner_circle(&a, &a, &ab, &pt(0, 2), &ac).unwrap();
        assert!(on_circle(&a, &c) && on_circle(&pt(0, 2), &c));
        assert_eq!(c.center(), pt(0, 1));
    }
}
