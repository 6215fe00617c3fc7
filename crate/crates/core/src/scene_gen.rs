//! Seeded generation of rational scenes.
//!
//! Every point of a generated scene is an image of the rational
//! parametrization of a circle with rational radius, so every object derived
//! from it downstream is rational as well.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::brocard_pipeline::{miquel_point, PipelineError};
use crate::exact_geom::{
    collinear, foot_perpendicular, intersect_lines, line_through, on_circle, on_line, on_segment,
    orientation, perpendicular_bisector, Circle, GeomError, Orientation, Point, Scalar,
};

/// Triangle `ABC`, circle Γ and the six points where Γ meets the sidelines.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Scene {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub gamma: Circle,
    pub o: Point,
    pub a1: Point,
    pub a2: Point,
    pub b1: Point,
    pub b2: Point,
    pub c1: Point,
    pub c2: Point,
    #[serde(default)]
    pub strict_segments: bool,
    #[serde(default)]
    pub classical: bool,
}

impl Scene {
    pub fn vertices(&self) -> [&Point; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn incidence_points(&self) -> [(&'static str, &Point); 6] {
        [
            ("a1", &self.a1),
            ("a2", &self.a2),
            ("b1", &self.b1),
            ("b2", &self.b2),
            ("c1", &self.c1),
            ("c2", &self.c2),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SceneParams {
    pub seed: u64,
    pub center: Point,
    pub radius: Scalar,
    /// Caps for the chord parameters `t = n/d`: `|n| ≤ max_numerator`, `1 ≤ d ≤ max_denominator`.
    pub max_numerator: u32,
    pub max_denominator: u32,
    pub strict_segments: bool,
    pub max_attempts: u32,
}

impl Default for SceneParams {
    fn default() -> Self {
        SceneParams {
            seed: 0,
            center: Point::origin(),
            radius: Scalar::one(),
            max_numerator: 50,
            max_denominator: 50,
            strict_segments: false,
            max_attempts: 1000,
        }
    }
}

impl SceneParams {
    pub fn with_seed(seed: u64) -> Self {
        SceneParams { seed, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GenerationError {
    #[error("generation exhausted after {attempts} attempts")]
    GenerationExhausted { attempts: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("pipeline self-check failed: {0}")]
    Pipeline(PipelineError),
}

/// Outcome of the downstream acceptance test applied to a candidate scene.
pub type Acceptance = Result<(), PipelineError>;

/// `center + radius·((1 − t²)/(1 + t²), 2t/(1 + t²))`.
pub fn circle_point_from_parameter(t: &Scalar, center: &Point, radius: &Scalar) -> Point {
    let t2 = t.square();
    let denom = &Scalar::one() + &t2;
    let x = (&Scalar::one() - &t2) / &denom;
    let y = (t + t) / &denom;
    Point::new(&center.x + &(radius * &x), &center.y + &(radius * &y))
}

fn random_parameter(rng: &mut ChaCha8Rng, params: &SceneParams) -> Scalar {
    let n = params.max_numerator as i64;
    let numer = rng.random_range(-n..=n);
    let denom = rng.random_range(1..=params.max_denominator.max(1) as i64);
    Scalar::ratio(numer, denom)
}

/// Assembles a scene from six chord parameters on Γ: `A1A2 ⊂ BC`,
/// `B1B2 ⊂ CA`, `C1C2 ⊂ AB`. Relabels to make `ABC` anticlockwise.
pub fn scene_from_parameters(
    t: &[Scalar; 6],
    center: &Point,
    radius: &Scalar,
) -> Result<Scene, GeomError> {
    for i in 0..6 {
        for j in i + 1..6 {
            if t[i] == t[j] {
                return Err(GeomError::degenerate("repeated chord parameter"));
            }
        }
    }
    let pts: Vec<Point> = t
        .iter()
        .map(|ti| circle_point_from_parameter(ti, center, radius))
        .collect();
    let (a1, a2) = (pts[0].clone(), pts[1].clone());
    let (mut b1, mut b2) = (pts[2].clone(), pts[3].clone());
    let (mut c1, mut c2) = (pts[4].clone(), pts[5].clone());
    let mut vertices = chord_triangle(&a1, &a2, &b1, &b2, &c1, &c2)?;
    if orientation(&vertices[0], &vertices[1], &vertices[2]) == Orientation::Clockwise {
        std::mem::swap(&mut b1, &mut c1);
        std::mem::swap(&mut b2, &mut c2);
        vertices = chord_triangle(&a1, &a2, &b1, &b2, &c1, &c2)?;
    }
    let [a, b, c] = vertices;
    if orientation(&a, &b, &c) != Orientation::CounterClockwise {
        return Err(GeomError::CollinearPoints);
    }
    for p in [&a1, &a2, &b1, &b2, &c1, &c2] {
        if *p == a || *p == b || *p == c {
            return Err(GeomError::degenerate("incidence point at a vertex"));
        }
    }
    Ok(Scene {
        a,
        b,
        c,
        gamma: Circle::from_center_radius2(center, &radius.square()),
        o: center.clone(),
        a1,
        a2,
        b1,
        b2,
        c1,
        c2,
        strict_segments: false,
        classical: false,
    })
}

fn chord_triangle(
    a1: &Point,
    a2: &Point,
    b1: &Point,
    b2: &Point,
    c1: &Point,
    c2: &Point,
) -> Result<[Point; 3], GeomError> {
    let bc = line_through(a1, a2)?;
    let ca = line_through(b1, b2)?;
    let ab = line_through(c1, c2)?;
    let a = intersect_lines(&ca, &ab)?;
    let b = intersect_lines(&ab, &bc)?;
    let c = intersect_lines(&bc, &ca)?;
    if collinear(&a, &b, &c) {
        return Err(GeomError::CollinearPoints);
    }
    Ok([a, b, c])
}

/// Draws scenes until one passes the exact scene checks and `accept`.
/// Degeneracies reported by `accept` trigger a resample; any other pipeline
/// error aborts generation.
pub fn generate_scene_with(
    params: &SceneParams,
    mut accept: impl FnMut(&Scene) -> Acceptance,
) -> Result<Scene, GenerationError> {
    if !params.radius.is_positive() {
        return Err(GenerationError::InvalidParams("radius must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for _ in 0..params.max_attempts {
        let t: [Scalar; 6] = std::array::from_fn(|_| random_parameter(&mut rng, params));
        let Ok(mut scene) = scene_from_parameters(&t, &params.center, &params.radius) else {
            continue;
        };
        scene.strict_segments = params.strict_segments;
        if !validate_scene(&scene).is_empty() {
            continue;
        }
        match accept(&scene) {
            Ok(()) => return Ok(scene),
            Err(e) if e.is_degeneracy() => continue,
            Err(e) => return Err(GenerationError::Pipeline(e)),
        }
    }
    Err(GenerationError::GenerationExhausted { attempts: params.max_attempts })
}

/// Generates a scene on which the full pipeline and every suite input are
/// constructible.
pub fn generate_scene(params: &SceneParams) -> Result<Scene, GenerationError> {
    generate_scene_with(params, |s| crate::theorem_suite::SuiteInputs::prepare(s).map(drop))
}

/// The classical limit: Γ is the circumcircle and the incidence points alias
/// the vertices as `A1 = B, B1 = C, C1 = A, A2 = C, B2 = A, C2 = B`.
///
/// If the three parametrized points are clockwise, the second and third are
/// swapped.
pub fn classical_brocard_scene(
    t: [&Scalar; 3],
    center: &Point,
    radius: &Scalar,
) -> Result<Scene, GenerationError> {
    if !radius.is_positive() {
        return Err(GenerationError::InvalidParams("radius must be positive".into()));
    }
    let exhausted = GenerationError::GenerationExhausted { attempts: 1 };
    if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
        return Err(exhausted);
    }
    let mut pts: Vec<Point> = t
        .iter()
        .map(|ti| circle_point_from_parameter(ti, center, radius))
        .collect();
    match orientation(&pts[0], &pts[1], &pts[2]) {
        Orientation::Collinear => return Err(exhausted),
        Orientation::Clockwise => pts.swap(1, 2),
        Orientation::CounterClockwise => {}
    }
    let [a, b, c]: [Point; 3] = pts.try_into().expect("three points");
    Ok(Scene {
        a1: b.clone(),
        b1: c.clone(),
        c1: a.clone(),
        a2: c.clone(),
        b2: a.clone(),
        c2: b.clone(),
        a,
        b,
        c,
        gamma: Circle::from_center_radius2(center, &radius.square()),
        o: center.clone(),
        strict_segments: false,
        classical: true,
    })
}

/// Triangle with two free pairs `{D, X} ⊂ BC`, `{E, Y} ⊂ CA` and a third
/// pair `{F, Z} ⊂ AB` forced so that the perpendicular bisectors of
/// `DX, EY, FZ` concur at `T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KwonScene {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub d: Point,
    pub e: Point,
    pub f: Point,
    pub x: Point,
    pub y: Point,
    pub z: Point,
    pub t: Point,
}

impl KwonScene {
    /// Completes a triangle and five side points into a scene; `Z` is the
    /// reflection of `F` across the foot of `T` on `AB`.
    pub fn complete(
        [a, b, c]: [Point; 3],
        d: Point,
        x: Point,
        e: Point,
        y: Point,
        f: Point,
    ) -> Result<KwonScene, GeomError> {
        let t = intersect_lines(&perpendicular_bisector(&d, &x)?, &perpendicular_bisector(&e, &y)?)?;
        let foot = foot_perpendicular(&t, &line_through(&a, &b)?);
        let z = &(&foot + &foot) - &f;
        if z == f {
            return Err(GeomError::degenerate("F at the foot of T"));
        }
        let scene = KwonScene { a, b, c, d, e, f, x, y, z, t };
        scene.miquel_points()?;
        Ok(scene)
    }

    /// Miquel points of `DEF` and `XYZ`.
    pub fn miquel_points(&self) -> Result<(Point, Point), GeomError> {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        Ok((
            miquel_point(&self.d, &self.e, &self.f, a, b, c)?,
            miquel_point(&self.x, &self.y, &self.z, a, b, c)?,
        ))
    }
}

fn affine(p: &Point, q: &Point, t: &Scalar) -> Point {
    p + &(q - p).scale(t)
}

fn small_rational(rng: &mut ChaCha8Rng, numer: i64, denom: i64) -> Scalar {
    Scalar::ratio(rng.random_range(-numer..=numer), rng.random_range(1..=denom))
}

/// Random scene for the equal-distance remark; deterministic in `seed`.
pub fn kwon_scene(seed: u64) -> Result<KwonScene, GenerationError> {
    const ATTEMPTS: u32 = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let verts: [Point; 3] = std::array::from_fn(|_| {
            Point::new(small_rational(&mut rng, 20, 3), small_rational(&mut rng, 20, 3))
        });
        let [a, b, c] = match orientation(&verts[0], &verts[1], &verts[2]) {
            Orientation::Collinear => continue,
            Orientation::CounterClockwise => verts,
            Orientation::Clockwise => {
                let [a, b, c] = verts;
                [a, c, b]
            }
        };
        let mut side_point = |p: &Point, q: &Point| affine(p, q, &small_rational(&mut rng, 30, 10));
        let d = side_point(&b, &c);
        let x = side_point(&b, &c);
        let e = side_point(&c, &a);
        let y = side_point(&c, &a);
        let f = side_point(&a, &b);
        let pts = [&d, &x, &e, &y, &f];
        if pts.iter().any(|p| **p == a || **p == b || **p == c) {
            continue;
        }
        if let Ok(scene) = KwonScene::complete([a, b, c], d, x, e, y, f) {
            if scene.z != scene.a && scene.z != scene.b {
                return Ok(scene);
            }
        }
    }
    Err(GenerationError::GenerationExhausted { attempts: ATTEMPTS })
}

/// Second intersections of `circle` with the lines through `anchor` of the
/// given slopes. Tangent slopes yield `anchor` itself.
pub fn circle_points_through(
    circle: &Circle,
    anchor: &Point,
    slopes: &[Scalar],
) -> Result<Vec<Point>, GeomError> {
    slopes
        .iter()
        .map(|m| {
            let dir = Point::new(Scalar::one(), m.clone());
            let line = line_through(anchor, &(anchor + &dir))?;
            crate::exact_geom::second_intersection_circle_line(circle, &line, anchor).map(|s| s.point)
        })
        .collect()
}

/// Scene whose circle is centered at the incenter of the 3-4-5 triangle
/// `(0,0), (4,0), (0,3)` and meets each side at the contact point shifted by
/// `±1/2` of the inradius along the side. Both inscribed triangles then have
/// the incenter as Miquel point, so `P = Q = O` and the configuration
/// collapses. (An equilateral triangle, the classical collapse, has no
/// rational realization.)
pub fn incentric_collapse_scene() -> Scene {
    let (a, b, c) = (Point::from_ints(0, 0), Point::from_ints(4, 0), Point::from_ints(0, 3));
    let incenter = Point::from_ints(1, 1);
    let shift = Scalar::ratio(1, 2);
    let along = |p: &Point, q: &Point, sign: i64| -> Point {
        let side = line_through(p, q).expect("distinct vertices");
        let foot = foot_perpendicular(&incenter, &side);
        let offset = (&foot - &incenter).perp().scale(&(&shift * &Scalar::from_int(sign)));
        &foot + &offset
    };
    let radius2 = Scalar::one() + shift.square();
    Scene {
        a1: along(&b, &c, 1),
        a2: along(&b, &c, -1),
        b1: along(&c, &a, 1),
        b2: along(&c, &a, -1),
        c1: along(&a, &b, 1),
        c2: along(&a, &b, -1),
        gamma: Circle::from_center_radius2(&incenter, &radius2),
        o: incenter,
        a,
        b,
        c,
        strict_segments: false,
        classical: false,
    }
}

impl Scene {
    /// SHA-256 of the canonical JSON encoding, hex encoded.
    pub fn digest(&self) -> String {
        use sha2::{Digest, Sha256};
        let bytes = serde_json::to_vec(self).expect("scene serializes");
        hex::encode(Sha256::digest(&bytes))
    }
}

/// Scene invariant violations; empty iff the scene is valid.
pub fn validate_scene(s: &Scene) -> Vec<String> {
    let mut violations = Vec::new();
    let (a, b, c) = (&s.a, &s.b, &s.c);
    match orientation(a, b, c) {
        Orientation::CounterClockwise => {}
        Orientation::Clockwise => violations.push("orientation: triangle is clockwise".to_string()),
        Orientation::Collinear => {
            violations.push("orientation: triangle is degenerate".to_string());
            return violations;
        }
    }
    if s.o != s.gamma.center() {
        violations.push("o is not the center of gamma".to_string());
    }
    if !s.gamma.radius2().is_positive() {
        violations.push("gamma has nonpositive radius²".to_string());
    }
    let sides = [
        ("BC", b, c, [("a1", &s.a1), ("a2", &s.a2)]),
        ("CA", c, a, [("b1", &s.b1), ("b2", &s.b2)]),
        ("AB", a, b, [("c1", &s.c1), ("c2", &s.c2)]),
    ];
    for (side, p, q, pts) in &sides {
        let line = line_through(p, q).expect("vertices distinct in a nondegenerate triangle");
        for (name, pt) in pts {
            if !on_line(pt, &line) {
                violations.push(format!("{name} not on {side}"));
            } else if s.strict_segments && !on_segment(pt, p, q) {
                violations.push(format!("{name} not within segment {side}"));
            }
        }
    }
    for (name, pt) in s.incidence_points() {
        if !on_circle(pt, &s.gamma) {
            violations.push(format!("{name} not on gamma"));
        }
    }
    if s.classical {
        let aliases = [
            ("a1 = B", &s.a1, b),
            ("b1 = C", &s.b1, c),
            ("c1 = A", &s.c1, a),
            ("a2 = C", &s.a2, c),
            ("b2 = A", &s.b2, a),
            ("c2 = B", &s.c2, b),
        ];
        for (label, p, v) in aliases {
            if p != v {
                violations.push(format!("classical alias violated: {label}"));
            }
        }
    } else {
        let pts = s.incidence_points();
        for i in 0..6 {
            for j in i + 1..6 {
                if pts[i].1 == pts[j].1 {
                    violations.push(format!("{} coincides with {}", pts[i].0, pts[j].0));
                }
            }
            if s.vertices().contains(&pts[i].1) {
                violations.push(format!("{} coincides with a vertex", pts[i].0));
            }
        }
    }
    violations
}
