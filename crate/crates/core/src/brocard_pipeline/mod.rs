//! Derived objects of a scene: the Miquel pair `P, Q`, the generalized first
//! and second Brocard triangles, the Pascal line and its pole `R`, the circle
//! through all of them, and the Steiner/Tarry analogues.
//!
//! Every object is built by exactly one construction; objects that the
//! theory says could be built a second way are cross-checked here, and a
//! disagreement is reported as [`PipelineError::Inconsistent`].

mod classical;
mod miquel;

use std::fmt;

use crate::exact_geom::{
    antipode, circumcircle, intersect_lines, isogonal_conjugate, line_through, on_circle, on_line,
    parallel_through, pole_of_line, projective_line_through, second_intersection_circles,
    tangent_at, Circle, Complex, GeomError, GeomResult, Line, Point, ProjectivePoint,
};
use crate::scene_gen::{validate_scene, Scene};

pub use classical::{classical_overlay, ClassicalOverlay};
pub use miquel::{
    corner_circle, miquel_circles, miquel_point, miquel_point_quadrangle, quadrangle_miquel,
    spiral_ratio, QuadrangleMiquel,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PipelineError {
    #[error("invalid scene: {}", .0.join("; "))]
    InvalidScene(Vec<String>),
    #[error("{object}: {cause}")]
    Degenerate { object: String, cause: GeomError },
    /// `P = Q`: every point of the circle collapses onto one point.
    #[error("configuration collapses to {point}")]
    Collapse { point: Point },
    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),
}

impl PipelineError {
    pub fn is_degeneracy(&self) -> bool {
        matches!(self, PipelineError::Degenerate { .. } | PipelineError::Collapse { .. })
    }

    /// Name of the first object that could not be built, if any.
    pub fn object(&self) -> Option<&str> {
        match self {
            PipelineError::Degenerate { object, .. } => Some(object),
            _ => None,
        }
    }
}

pub(crate) trait At<T> {
    fn at(self, object: &str) -> Result<T, PipelineError>;
}

impl<T> At<T> for GeomResult<T> {
    fn at(self, object: &str) -> Result<T, PipelineError> {
        self.map_err(|cause| PipelineError::Degenerate { object: object.to_string(), cause })
    }
}

fn ensure(cond: bool, what: &str) -> Result<(), PipelineError> {
    if cond {
        Ok(())
    } else {
        Err(PipelineError::Inconsistent(what.to_string()))
    }
}

/// Points where `OR` meets the sidelines and the circumcenters of
/// `AYZ, BZX, CXY`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrCevians {
    pub x: Point,
    pub y: Point,
    pub z: Point,
    pub o_a: Point,
    pub o_b: Point,
    pub o_c: Point,
}

/// A construction that failed, by object name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneracy {
    pub object: String,
    pub cause: GeomError,
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.object, self.cause)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    /// Miquel point of `A1B1C1`.
    pub p: Point,
    /// Miquel point of `A2B2C2`.
    pub q: Point,
    /// `T_A = PA1 ∩ QA2`, and cyclically.
    pub t_a: Point,
    pub t_b: Point,
    pub t_c: Point,
    /// `A' = ⊙(AB1C1) ∩ ⊙(AB2C2)`, and cyclically.
    pub a_prime: Point,
    pub b_prime: Point,
    pub c_prime: Point,
    /// Intersections of opposite sides of the hexagon `A1B1C1A2B2C2`; a pair
    /// of parallel sides meets at infinity.
    pub a0: ProjectivePoint,
    pub b0: ProjectivePoint,
    pub c0: ProjectivePoint,
    pub pascal_line: Line,
    /// Pole of the Pascal line with respect to Γ.
    pub r: Point,
    /// Isogonal conjugate of `R` in `ABC`.
    pub r_star: Point,
    /// Circle through `P, Q, O` (and `R`, the primed points, the T-points).
    pub brocard_circle: Circle,
    pub circumcircle: Circle,
    /// Generalized Steiner point `S_t`.
    pub steiner: Point,
    /// Generalized Tarry point `T_a`, the antipode of `S_t` on `⊙(ABC)`.
    pub tarry: Point,
    /// Perspector of `T_AT_BT_C` and `A'B'C'`.
    pub s: Point,
    pub or_cevians: Result<OrCevians, Degeneracy>,
    /// Spiral ratios about `P` and `Q` measured on `BC` at `A1`, `A2`.
    pub r_p: Complex,
    pub r_q: Complex,
}

impl Configuration {
    /// Names accepted by [`Configuration::point_mut`].
    pub const POINT_NAMES: [&'static str; 22] = [
        "P", "Q", "T_A", "T_B", "T_C", "A'", "B'", "C'", "A0", "B0", "C0", "R", "R*", "S_t", "T_a",
        "S", "X", "Y", "Z", "O_A", "O_B", "O_C",
    ];

    pub fn point(&self, name: &str) -> Option<Point> {
        let mut copy = self.clone();
        copy.point_mut(name).map(|p| p.clone())
    }

    /// Mutable access to a constructed point by name. The `OR` cevian points
    /// are unavailable when that construction degenerated, and Pascal points
    /// when at infinity.
    pub fn point_mut(&mut self, name: &str) -> Option<&mut Point> {
        let cev = self.or_cevians.as_mut().ok();
        Some(match name {
            "P" => &mut self.p,
            "Q" => &mut self.q,
            "T_A" => &mut self.t_a,
            "T_B" => &mut self.t_b,
            "T_C" => &mut self.t_c,
            "A'" => &mut self.a_prime,
            "B'" => &mut self.b_prime,
            "C'" => &mut self.c_prime,
            "A0" => self.a0.finite_mut()?,
            "B0" => self.b0.finite_mut()?,
            "C0" => self.c0.finite_mut()?,
            "R" => &mut self.r,
            "R*" => &mut self.r_star,
            "S_t" => &mut self.steiner,
            "T_a" => &mut self.tarry,
            "S" => &mut self.s,
            "X" => &mut cev?.x,
            "Y" => &mut cev?.y,
            "Z" => &mut cev?.z,
            "O_A" => &mut cev?.o_a,
            "O_B" => &mut cev?.o_b,
            "O_C" => &mut cev?.o_c,
            _ => return None,
        })
    }

    /// The ten points claimed to lie on the generalized Brocard circle.
    pub fn brocard_points<'a>(&'a self, o: &'a Point) -> [(&'static str, &'a Point); 10] {
        [
            ("P", &self.p),
            ("Q", &self.q),
            ("O", o),
            ("R", &self.r),
            ("A'", &self.a_prime),
            ("B'", &self.b_prime),
            ("C'", &self.c_prime),
            ("T_A", &self.t_a),
            ("T_B", &self.t_b),
            ("T_C", &self.t_c),
        ]
    }
}

/// Sidelines `BC, CA, AB`.
pub fn sidelines(s: &Scene) -> Result<[Line; 3], PipelineError> {
    Ok([
        line_through(&s.b, &s.c).at("BC")?,
        line_through(&s.c, &s.a).at("CA")?,
        line_through(&s.a, &s.b).at("AB")?,
    ])
}

/// Line through two points of Γ; the tangent when they coincide.
pub(crate) fn chord(p: &Point, q: &Point, gamma: &Circle) -> GeomResult<Line> {
    if p == q {
        tangent_at(p, gamma)
    } else {
        line_through(p, q)
    }
}

/// `A0 = B1C2 ∩ C1B2`, `B0 = A1C2 ∩ C1A2`, `C0 = A1B2 ∩ B1A2`.
pub fn pascal_points(s: &Scene) -> Result<[ProjectivePoint; 3], PipelineError> {
    let g = &s.gamma;
    let meet = |p1: &Point, p2: &Point, p3: &Point, p4: &Point, name: &str| {
        let l1 = chord(p1, p2, g).at(name)?;
        let l2 = chord(p3, p4, g).at(name)?;
        ProjectivePoint::meet(&l1, &l2).at(name)
    };
    Ok([
        meet(&s.b1, &s.c2, &s.c1, &s.b2, "A0")?,
        meet(&s.a1, &s.c2, &s.c1, &s.a2, "B0")?,
        meet(&s.a1, &s.b2, &s.b1, &s.a2, "C0")?,
    ])
}

/// Line through the three Pascal points, which must be collinear.
pub fn pascal_line(points: &[ProjectivePoint; 3]) -> Result<Line, PipelineError> {
    let line = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .filter(|&&(i, j)| points[i] != points[j])
        .find_map(|&(i, j)| projective_line_through(&points[i], &points[j]).ok())
        .ok_or_else(|| PipelineError::Degenerate {
            object: "Pascal line".into(),
            cause: GeomError::CoincidentPoints,
        })?;
    ensure(points.iter().all(|p| p.incidence(&line).is_zero()), "A0, B0, C0 not collinear")?;
    Ok(line)
}

fn or_cevians(s: &Scene, sides: &[Line; 3], or_line: &Line) -> Result<OrCevians, Degeneracy> {
    let wrap = |object: &str| {
        let object = object.to_string();
        move |cause| Degeneracy { object, cause }
    };
    let [bc, ca, ab] = sides;
    let x = intersect_lines(or_line, bc).map_err(wrap("X"))?;
    let y = intersect_lines(or_line, ca).map_err(wrap("Y"))?;
    let z = intersect_lines(or_line, ab).map_err(wrap("Z"))?;
    let o_a = circumcircle(&s.a, &y, &z).map_err(wrap("O_A"))?.center();
    let o_b = circumcircle(&s.b, &z, &x).map_err(wrap("O_B"))?.center();
    let o_c = circumcircle(&s.c, &x, &y).map_err(wrap("O_C"))?.center();
    Ok(OrCevians { x, y, z, o_a, o_b, o_c })
}

/// The circle `⊙(vertex, p, q)` for the primed points, with tangent limits.
fn primed_point(
    vertex: &Point,
    first: (&Point, &Point),
    second: (&Point, &Point),
    sides: (&Line, &Line),
    name: &str,
) -> Result<Point, PipelineError> {
    let c1 = corner_circle(vertex, first.0, sides.0, first.1, sides.1).at(name)?;
    let c2 = corner_circle(vertex, second.0, sides.0, second.1, sides.1).at(name)?;
    let hit = second_intersection_circles(&c1, &c2, vertex).at(name)?;
    if hit.tangent {
        return Err(PipelineError::Degenerate {
            object: name.to_string(),
            cause: GeomError::degenerate("circles tangent at the vertex"),
        });
    }
    Ok(hit.point)
}

pub fn compute_configuration(s: &Scene) -> Result<Configuration, PipelineError> {
    let violations = validate_scene(s);
    if !violations.is_empty() {
        return Err(PipelineError::InvalidScene(violations));
    }
    let (a, b, c, o) = (&s.a, &s.b, &s.c, &s.o);
    let sides = sidelines(s)?;
    let [bc, ca, ab] = &sides;

    let p = miquel_point(&s.a1, &s.b1, &s.c1, a, b, c).at("P")?;
    let q = miquel_point(&s.a2, &s.b2, &s.c2, a, b, c).at("Q")?;
    if p == q {
        return Err(PipelineError::Collapse { point: p });
    }

    let t_point = |x1: &Point, x2: &Point, name: &str| {
        let lp = line_through(&p, x1).at(name)?;
        let lq = line_through(&q, x2).at(name)?;
        intersect_lines(&lp, &lq).at(name)
    };
    let t_a = t_point(&s.a1, &s.a2, "T_A")?;
    let t_b = t_point(&s.b1, &s.b2, "T_B")?;
    let t_c = t_point(&s.c1, &s.c2, "T_C")?;

    let a_prime = primed_point(a, (&s.b1, &s.c1), (&s.b2, &s.c2), (ca, ab), "A'")?;
    let b_prime = primed_point(b, (&s.c1, &s.a1), (&s.c2, &s.a2), (ab, bc), "B'")?;
    let c_prime = primed_point(c, (&s.a1, &s.b1), (&s.a2, &s.b2), (bc, ca), "C'")?;

    let pascal = pascal_points(s)?;
    let pascal_line = pascal_line(&pascal)?;
    let [a0, b0, c0] = pascal;
    let r = pole_of_line(&pascal_line, &s.gamma).at("R")?;
    let aa = line_through(a, &a_prime).at("AA'")?;
    let bb = line_through(b, &b_prime).at("BB'")?;
    let cc = line_through(c, &c_prime).at("CC'")?;
    let r_concurrent = intersect_lines(&aa, &bb).at("AA' ∩ BB'")?;
    ensure(r_concurrent == r, "pole of the Pascal line differs from AA' ∩ BB'")?;
    ensure(on_line(&r, &cc), "CC' misses R")?;
    let r_star = isogonal_conjugate(&r, a, b, c).at("R*")?;

    let brocard_circle = circumcircle(&p, &q, o).at("Brocard circle")?;
    ensure(brocard_circle.center() == o.midpoint(&r), "OR is not a diameter")?;

    let line_tbtc = line_through(&t_b, &t_c).at("T_BT_C")?;
    let line_tcta = line_through(&t_c, &t_a).at("T_CT_A")?;
    let line_tatb = line_through(&t_a, &t_b).at("T_AT_B")?;
    let steiner = intersect_lines(&parallel_through(a, &line_tbtc), &parallel_through(b, &line_tcta))
        .at("S_t")?;
    ensure(on_line(&steiner, &parallel_through(c, &line_tatb)), "third parallel misses S_t")?;
    let circ = circumcircle(a, b, c).at("circumcircle")?;
    let tarry = antipode(&steiner, &circ)
        .map_err(|_| PipelineError::Inconsistent("S_t not on the circumcircle".into()))?;

    let ta_line = line_through(&t_a, &a_prime).at("T_AA'")?;
    let tb_line = line_through(&t_b, &b_prime).at("T_BB'")?;
    let tc_line = line_through(&t_c, &c_prime).at("T_CC'")?;
    let s_point = intersect_lines(&ta_line, &tb_line).at("S")?;
    ensure(on_line(&s_point, &tc_line), "T_CC' misses S")?;

    let or_line = line_through(o, &r).at("OR")?;
    let or_cevians = or_cevians(s, &sides, &or_line);

    let r_p = spiral_ratio(&p, &s.a1, bc).at("r_P")?;
    let r_q = spiral_ratio(&q, &s.a2, bc).at("r_Q")?;

    debug_assert!(on_circle(&r, &brocard_circle));
    Ok(Configuration {
        p,
        q,
        t_a,
        t_b,
        t_c,
        a_prime,
        b_prime,
        c_prime,
        a0,
        b0,
        c0,
        pascal_line,
        r,
        r_star,
        brocard_circle,
        circumcircle: circ,
        steiner,
        tarry,
        s: s_point,
        or_cevians,
        r_p,
        r_q,
    })
}
