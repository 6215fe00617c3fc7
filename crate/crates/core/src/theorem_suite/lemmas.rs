use serde::{Deserialize, Serialize};

use crate::brocard_pipeline::{corner_circle, quadrangle_miquel, spiral_ratio};
use crate::exact_geom::{
    circumcircle, concyclic_det, directed_angle, foot_perpendicular, intersect_lines,
    line_through, on_circle, on_line, pedal_feet, second_intersection_circles, signed_area2,
    Circle, Complex, GeomError, GeomResult, Line, Point, Scalar,
};
use crate::scene_gen::{circle_point_from_parameter, KwonScene};

use super::{run_check, Abort, CheckResult, Named};

fn sides(a: &Point, b: &Point, c: &Point) -> GeomResult<[Line; 3]> {
    Ok([line_through(b, c)?, line_through(c, a)?, line_through(a, b)?])
}

/// Image of the pedal triangle of `m` under the spiral similarity about `m`
/// with ratio `1 + s·i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiralFigure {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub m: Point,
    pub s: Scalar,
    pub d: Point,
    pub e: Point,
    pub f: Point,
}

impl SpiralFigure {
    pub fn build([a, b, c]: [Point; 3], m: Point, s: Scalar) -> GeomResult<Self> {
        if sides(&a, &b, &c)?.iter().any(|l| on_line(&m, l)) {
            return Err(GeomError::degenerate("m on a sideline"));
        }
        let feet = pedal_feet(&m, &a, &b, &c)?;
        let [d, e, f] = feet.map(|foot| {
            let turn = (&foot - &m).perp().scale(&s);
            &foot + &turn
        });
        Ok(SpiralFigure { a, b, c, m, s, d, e, f })
    }
}

/// Miquel membership of `m` in the corner circles of `DEF`, and equality of
/// the three spiral ratios.
pub fn verify_spiral(fig: &SpiralFigure) -> CheckResult {
    run_check("check_lemma_spiral", |ck| {
        let (a, b, c, m) = (&fig.a, &fig.b, &fig.c, &fig.m);
        let [bc, ca, ab] = sides(a, b, c)?;
        for (name, pt, side) in [("D", &fig.d, &bc), ("E", &fig.e, &ca), ("F", &fig.f, &ab)] {
            ck.zero(format!("{name} on its sideline"), side.eval(pt));
        }
        let circles = [
            ("⊙(AEF)", corner_circle(a, &fig.e, &ca, &fig.f, &ab).named("⊙(AEF)")?),
            ("⊙(BFD)", corner_circle(b, &fig.f, &ab, &fig.d, &bc).named("⊙(BFD)")?),
            ("⊙(CDE)", corner_circle(c, &fig.d, &bc, &fig.e, &ca).named("⊙(CDE)")?),
        ];
        for (name, circle) in &circles {
            ck.zero(format!("m on {name}"), circle.power(m));
        }
        let ratio = |pt: &Point, side: &Line| -> Result<Complex, Abort> {
            let foot = foot_perpendicular(m, side);
            (pt - m)
                .to_complex()
                .checked_div(&(&foot - m).to_complex())
                .ok_or_else(|| Abort("m on a sideline".into()))
        };
        let rd = ratio(&fig.d, &bc)?;
        let expected = Complex::new(Scalar::one(), fig.s.clone());
        ck.zeros("(D − m)/(D′ − m) = 1 + s·i", vec![&rd.re - &expected.re, &rd.im - &expected.im]);
        for (label, pt, side) in [("E", &fig.e, &ca), ("F", &fig.f, &ab)] {
            let r = ratio(pt, side)?;
            ck.zeros(
                format!("(D − m)/(D′ − m) = ({label} − m)/({label}′ − m)"),
                vec![&rd.re - &r.re, &rd.im - &r.im],
            );
        }
        Ok(())
    })
}

pub fn check_lemma_spiral(triangle: [Point; 3], m: Point, s: Scalar) -> CheckResult {
    match SpiralFigure::build(triangle, m, s) {
        Ok(fig) => verify_spiral(&fig),
        Err(e) => CheckResult::degenerate("check_lemma_spiral", e.to_string()),
    }
}

/// Cyclic quadrangle `ABCD` on `circle` with `P = AB ∩ CD`, `Q = AD ∩ BC`,
/// Miquel point `M` and `R = AC ∩ BD`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicFigure {
    pub circle: Circle,
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub d: Point,
    pub p: Point,
    pub q: Point,
    pub m: Point,
    pub r: Point,
}

impl CyclicFigure {
    pub fn build(circle: Circle, [a, b, c, d]: [Point; 4]) -> GeomResult<Self> {
        if [&a, &b, &c, &d].iter().any(|p| !on_circle(p, &circle)) {
            return Err(GeomError::PointNotOnCircle);
        }
        let qm = quadrangle_miquel(&a, &b, &c, &d)?;
        let r = intersect_lines(&line_through(&a, &c)?, &line_through(&b, &d)?)
            .map_err(|_| GeomError::degenerate("R: AC parallel to BD"))?;
        if r == circle.center() {
            return Err(GeomError::degenerate("R at the center"));
        }
        Ok(CyclicFigure { circle, a, b, c, d, p: qm.p, q: qm.q, m: qm.m, r })
    }
}

pub fn verify_cyclic(fig: &CyclicFigure) -> CheckResult {
    run_check("check_lemma_cyclic", |ck| {
        let (a, b, c, d) = (&fig.a, &fig.b, &fig.c, &fig.d);
        let (p, q, m, r) = (&fig.p, &fig.q, &fig.m, &fig.r);
        let o = fig.circle.center();
        for (name, pt) in [("A", a), ("B", b), ("C", c), ("D", d)] {
            ck.zero(format!("{name} on the circle"), fig.circle.power(pt));
        }
        ck.zeros("P on AB and CD", vec![signed_area2(a, b, p), signed_area2(c, d, p)]);
        ck.zeros("Q on AD and BC", vec![signed_area2(a, d, q), signed_area2(b, c, q)]);
        for (label, x, y, z) in [("PAD", p, a, d), ("PBC", p, b, c), ("QAB", q, a, b), ("QCD", q, c, d)] {
            ck.zero(format!("M on ⊙({label})"), concyclic_det(x, y, z, m));
        }
        ck.zero("M on PQ", signed_area2(p, q, m));
        ck.zero("OM ⊥ PQ", (m - &o).dot(&(q - p)));
        ck.zeros("R on AC and BD", vec![signed_area2(a, c, r), signed_area2(b, d, r)]);
        let inv = o.dist2(r).recip().ok_or_else(|| Abort("R at the center".into()))?;
        let k = fig.circle.radius2() * inv;
        let image = &o + &(r - &o).scale(&k);
        ck.same_point("M = inverse of R", m, &image);
        Ok(())
    })
}

pub fn check_lemma_cyclic_points(circle: Circle, quad: [Point; 4]) -> CheckResult {
    match CyclicFigure::build(circle, quad) {
        Ok(fig) => verify_cyclic(&fig),
        Err(e) => CheckResult::degenerate("check_lemma_cyclic", e.to_string()),
    }
}

/// Quadrangle from four parameters of the rational parametrization of the
/// circle `(center, radius)`.
pub fn check_lemma_cyclic(params: [&Scalar; 4], center: &Point, radius: &Scalar) -> CheckResult {
    let quad = params.map(|t| circle_point_from_parameter(t, center, radius));
    check_lemma_cyclic_points(Circle::from_center_radius2(center, &radius.square()), quad)
}

/// Two points `M, N` of the circumcircle of `ABC`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimsonFigure {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub m: Point,
    pub n: Point,
}

pub fn verify_simson(fig: &SimsonFigure) -> CheckResult {
    run_check("check_lemma_simson_angle", |ck| {
        let (a, b, c) = (&fig.a, &fig.b, &fig.c);
        let circ = circumcircle(a, b, c).named("⊙(ABC)")?;
        ck.zero("M on ⊙(ABC)", circ.power(&fig.m));
        ck.zero("N on ⊙(ABC)", circ.power(&fig.n));
        let mut lines = Vec::new();
        for (name, pt) in [("M", &fig.m), ("N", &fig.n)] {
            let feet = pedal_feet(pt, a, b, c)?;
            ck.zero(format!("pedal feet of {name} collinear"), signed_area2(&feet[0], &feet[1], &feet[2]));
            let other = feet.iter().find(|f| **f != feet[0]).unwrap_or(&feet[1]);
            lines.push(line_through(&feet[0], other).named("Simson line")?);
        }
        let lhs = directed_angle(&lines[0], &lines[1]);
        let man = directed_angle(
            &line_through(a, &fig.m).named("AM")?,
            &line_through(a, &fig.n).named("AN")?,
        );
        // As directed angles the Simson line turns against the point.
        ck.same_angle("∠(ℓ_M, ℓ_N) = ∠NAM", &lhs, &man.negate());
        ck.note("∠(ℓ_M, ℓ_N) = ∠MAN", vec![lhs.discrepancy(&man)]);
        Ok(())
    })
}

/// Errors with [`GeomError::PointNotOnCircle`] unless `m` and `n` lie on the
/// circumcircle.
pub fn check_lemma_simson_angle(triangle: [Point; 3], m: Point, n: Point) -> GeomResult<CheckResult> {
    let [a, b, c] = triangle;
    let circ = circumcircle(&a, &b, &c)?;
    if !on_circle(&m, &circ) || !on_circle(&n, &circ) {
        return Err(GeomError::PointNotOnCircle);
    }
    Ok(verify_simson(&SimsonFigure { a, b, c, m, n }))
}

/// Miquel point of side points `d ∈ BC, e ∈ CA, f ∈ AB` without incidence
/// preconditions, plus the power of the result with respect to the third
/// circle.
fn miquel_with_residual(k: &KwonScene, d: &Point, e: &Point, f: &Point) -> Result<(Point, Scalar), Abort> {
    let (a, b, c) = (&k.a, &k.b, &k.c);
    let [bc, ca, ab] = sides(a, b, c)?;
    let ca_circle = corner_circle(a, e, &ca, f, &ab)?;
    let cb_circle = corner_circle(b, f, &ab, d, &bc)?;
    let cc_circle = corner_circle(c, d, &bc, e, &ca)?;
    let m = second_intersection_circles(&ca_circle, &cb_circle, f)?.point;
    let residual = cc_circle.power(&m);
    Ok((m, residual))
}

pub fn check_kwon_remark(k: &KwonScene) -> CheckResult {
    run_check("check_kwon_remark", |ck| {
        let [bc, ca, ab] = sides(&k.a, &k.b, &k.c)?;
        for (label, p1, p2, side) in [("D, X", &k.d, &k.x, &bc), ("E, Y", &k.e, &k.y, &ca), ("F, Z", &k.f, &k.z, &ab)] {
            ck.zeros(format!("{label} on their sideline"), vec![side.eval(p1), side.eval(p2)]);
            ck.zero(format!("T equidistant from {label}"), k.t.dist2(p1) - k.t.dist2(p2));
        }
        let (o1, res1) = miquel_with_residual(k, &k.d, &k.e, &k.f).map_err(|e| Abort(format!("O1: {}", e.0)))?;
        let (o2, res2) = miquel_with_residual(k, &k.x, &k.y, &k.z).map_err(|e| Abort(format!("O2: {}", e.0)))?;
        ck.zero("O1 on ⊙(CDE)", res1);
        ck.zero("O2 on ⊙(CXY)", res2);
        ck.zero("TO1² − TO2²", k.t.dist2(&o1) - k.t.dist2(&o2));
        Ok(())
    })
}

/// Spiral ratio about `m` measured on a side, for deriving lemma inputs.
pub(crate) fn spiral_parameter(m: &Point, d: &Point, side: &Line) -> GeomResult<Scalar> {
    Ok(spiral_ratio(m, d, side)?.im)
}
