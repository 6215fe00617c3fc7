use crate::brocard_pipeline::{chord, classical_overlay, pascal_line, spiral_ratio, Configuration};
use crate::exact_geom::{
    circumcircle, directed_angle, isogonal_conjugate, line_through,
    parallel_det, parallel_through, pedal_feet, perpendicular_dot, perpendicular_through,
    pole_of_line, projective_collinearity_det, projective_polar, reflect_in_point, signed_area2, Complex, DirectedAngleClass,
    GeomResult, InverseSimilarity, Line, Point, Scalar,
};
use crate::scene_gen::Scene;

use super::{run_check, Abort, CheckResult, Named};

pub type ConfigCheck = fn(&Scene, &Configuration) -> CheckResult;

pub const CONFIG_CHECKS: [(&str, ConfigCheck); 13] = [
    ("check_isogonal_conjugates", check_isogonal_conjugates),
    ("check_rotation_angles", check_rotation_angles),
    ("check_pascal_and_R", check_pascal_and_r),
    ("check_brocard_circle", check_brocard_circle),
    ("check_equidistant", check_equidistant),
    ("check_first_triangle_similarity", check_first_triangle_similarity),
    ("check_steiner", check_steiner),
    ("check_tarry", check_tarry),
    ("check_polygon_similarity", check_polygon_similarity),
    ("check_perspective", check_perspective),
    ("check_simson_parallel", check_simson_parallel),
    ("check_simson_perpendicular", check_simson_perpendicular),
    ("check_circumcenter_perspective", check_circumcenter_perspective),
];

/// Runs one configuration check, or the classical overlay, by id.
pub fn run_config_check(id: &str, s: &Scene, cfg: &Configuration) -> Option<CheckResult> {
    if id == super::OVERLAY_CHECK {
        return Some(check_classical_overlay(s, cfg));
    }
    CONFIG_CHECKS.iter().find(|(name, _)| *name == id).map(|(_, f)| f(s, cfg))
}

/// Configuration points read by each check.
pub fn consumed_points(check_id: &str) -> &'static [&'static str] {
    match check_id {
        "check_isogonal_conjugates" | "check_rotation_angles" => &["P", "Q"],
        "check_pascal_and_R" => &["A0", "B0", "C0", "A'", "B'", "C'", "R"],
        "check_brocard_circle" => &["P", "Q", "R", "A'", "B'", "C'", "T_A", "T_B", "T_C"],
        "check_equidistant" => &["P", "Q", "R"],
        "check_first_triangle_similarity" => &["T_A", "T_B", "T_C"],
        "check_steiner" => &["T_A", "T_B", "T_C", "S_t"],
        "check_tarry" => &["T_A", "T_B", "T_C", "S_t", "T_a"],
        "check_polygon_similarity" => &["T_A", "T_B", "T_C", "S_t", "T_a", "R"],
        "check_perspective" => &["T_A", "T_B", "T_C", "A'", "B'", "C'", "S", "R", "R*"],
        "check_simson_parallel" => &["S_t", "R"],
        "check_simson_perpendicular" => &["T_a", "R"],
        "check_circumcenter_perspective" => &["X", "Y", "Z", "O_A", "O_B", "O_C", "S_t", "R"],
        "check_classical_overlay" => &["P", "Q", "R"],
        _ => &[],
    }
}

/// `∠(vertex p, vertex q)`: the directed angle from line `vertex p` to line
/// `vertex q`.
fn angle_at(vertex: &Point, p: &Point, q: &Point) -> GeomResult<DirectedAngleClass> {
    Ok(directed_angle(&line_through(vertex, p)?, &line_through(vertex, q)?))
}

fn complex_diff(z: &Complex, w: &Complex) -> Vec<Scalar> {
    vec![&z.re - &w.re, &z.im - &w.im]
}

/// A line through two distinct points among `pts`.
fn line_through_any(pts: &[Point]) -> GeomResult<Line> {
    let first = &pts[0];
    let other = pts.iter().find(|p| *p != first).unwrap_or(&pts[1]);
    line_through(first, other)
}

fn vertex_names() -> [&'static str; 3] {
    ["A", "B", "C"]
}

pub fn check_isogonal_conjugates(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_isogonal_conjugates", |ck| {
        let (p, q) = (&cfg.p, &cfg.q);
        let conj = isogonal_conjugate(p, &s.a, &s.b, &s.c).named("isogonal conjugate of P")?;
        ck.same_point("isogonal conjugate of P = Q", &conj, q);

        let chain = [
            ("∠PA1A2", angle_at(&s.a1, p, &s.a2)?),
            ("∠PB1B2", angle_at(&s.b1, p, &s.b2)?),
            ("∠PC1C2", angle_at(&s.c1, p, &s.c2)?),
            ("−∠QA2A1", angle_at(&s.a2, q, &s.a1)?.negate()),
            ("−∠QB2B1", angle_at(&s.b2, q, &s.b1)?.negate()),
            ("−∠QC2C1", angle_at(&s.c2, q, &s.c1)?.negate()),
        ];
        let (first_label, first) = &chain[0];
        for (label, angle) in &chain[1..] {
            ck.same_angle(format!("{first_label} = {label}"), first, angle);
        }
        let unsigned_last = chain[5].1.negate();
        ck.note(
            format!("{first_label} = ∠QC2C1 (unsigned last term)"),
            vec![first.discrepancy(&unsigned_last)],
        );
        Ok(())
    })
}

pub fn check_rotation_angles(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_rotation_angles", |ck| {
        let sides = [
            ("BC", line_through(&s.b, &s.c)?, &s.a1, &s.a2),
            ("CA", line_through(&s.c, &s.a)?, &s.b1, &s.b2),
            ("AB", line_through(&s.a, &s.b)?, &s.c1, &s.c2),
        ];
        let mut r_p = Vec::new();
        let mut r_q = Vec::new();
        for (name, side, x1, x2) in &sides {
            r_p.push((name, spiral_ratio(&cfg.p, x1, side).named("r_P")?));
            r_q.push((name, spiral_ratio(&cfg.q, x2, side).named("r_Q")?));
        }
        ck.zero("Im(r_P · r_Q)", (&r_p[0].1 * &r_q[0].1).im);
        for (label, ratios) in [("r_P", &r_p), ("r_Q", &r_q)] {
            for (side, z) in &ratios[1..] {
                ck.zeros(format!("{label} on BC = {label} on {side}"), complex_diff(&ratios[0].1, z));
            }
        }
        Ok(())
    })
}

pub fn check_pascal_and_r(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_pascal_and_R", |ck| {
        let g = &s.gamma;
        let hexagon_sides = [
            ("A0", &cfg.a0, (&s.b1, &s.c2), (&s.c1, &s.b2)),
            ("B0", &cfg.b0, (&s.a1, &s.c2), (&s.c1, &s.a2)),
            ("C0", &cfg.c0, (&s.a1, &s.b2), (&s.b1, &s.a2)),
        ];
        for (name, pt, (p1, p2), (p3, p4)) in hexagon_sides {
            let l1 = chord(p1, p2, g)?;
            let l2 = chord(p3, p4, g)?;
            ck.zeros(format!("{name} on both hexagon sides"), vec![pt.incidence(&l1), pt.incidence(&l2)]);
        }
        ck.zero("A0, B0, C0 collinear", projective_collinearity_det(&cfg.a0, &cfg.b0, &cfg.c0));

        let primed = [(&s.a, &cfg.a_prime, &cfg.a0), (&s.b, &cfg.b_prime, &cfg.b0), (&s.c, &cfg.c_prime, &cfg.c0)];
        for (name, (v, vp, _)) in vertex_names().iter().zip(&primed) {
            ck.zero(format!("R on {name}{name}′"), signed_area2(v, vp, &cfg.r));
        }
        let pascal = pascal_line(&[cfg.a0.clone(), cfg.b0.clone(), cfg.c0.clone()]);
        // a non-collinear triple is reported by the collinearity witness above
        if let Ok(pascal) = pascal {
            let pole = pole_of_line(&pascal, g).named("pole of the Pascal line")?;
            ck.same_point("R = pole of the Pascal line", &cfg.r, &pole);
        }
        for (name, (v, vp, x0)) in vertex_names().iter().zip(&primed) {
            let polar = projective_polar(x0, g).named("polar")?;
            ck.zeros(format!("{name}{name}′ is the polar of {name}0"), vec![polar.eval(v), polar.eval(vp)]);
        }
        Ok(())
    })
}

pub fn check_brocard_circle(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_brocard_circle", |ck| {
        let o = &s.o;
        let circle = circumcircle(&cfg.p, &cfg.q, o).named("⊙(PQO)")?;
        for (name, pt) in cfg.brocard_points(o).into_iter().skip(3) {
            ck.zero(format!("{name} on ⊙(PQO)"), circle.power(pt));
        }
        ck.same_point("center = midpoint of OR", &circle.center(), &o.midpoint(&cfg.r));
        for (name, pt) in [("A′", &cfg.a_prime), ("B′", &cfg.b_prime), ("C′", &cfg.c_prime)] {
            ck.zero(format!("O{name} ⊥ {name}R"), (pt - o).dot(&(pt - &cfg.r)));
        }
        // Inscribed angles over PQ; a vertex equal to P or Q subtends nothing.
        let vertices = [
            ("∠PA′Q", &cfg.a_prime),
            ("∠PB′Q", &cfg.b_prime),
            ("∠PC′Q", &cfg.c_prime),
            ("∠PT_AQ", &cfg.t_a),
            ("∠PT_BQ", &cfg.t_b),
            ("∠PT_CQ", &cfg.t_c),
        ];
        let mut subtending = Vec::new();
        for (label, vertex) in vertices {
            if *vertex == cfg.p || *vertex == cfg.q {
                ck.note(format!("{label} skipped: vertex on P or Q"), Vec::new());
            } else {
                subtending.push((label, angle_at(vertex, &cfg.p, &cfg.q)?));
            }
        }
        if let Some(((base_label, base), rest)) = subtending.split_first() {
            for (label, angle) in rest {
                ck.same_angle(format!("{base_label} = {label}"), base, angle);
            }
        }
        Ok(())
    })
}

pub fn check_equidistant(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_equidistant", |ck| {
        ck.zero("RP² − RQ²", cfg.r.dist2(&cfg.p) - cfg.r.dist2(&cfg.q));
        ck.zero("OP² − OQ²", s.o.dist2(&cfg.p) - s.o.dist2(&cfg.q));
        Ok(())
    })
}

fn triangle_map(s: &Scene, cfg: &Configuration) -> Result<InverseSimilarity, Abort> {
    InverseSimilarity::fit(&s.a, &cfg.t_a, &s.b, &cfg.t_b).named("ABC → T_AT_BT_C")
}

pub fn check_first_triangle_similarity(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_first_triangle_similarity", |ck| {
        let map = triangle_map(s, cfg)?;
        ck.same_point("map(C) = T_C", &map.apply(&s.c), &cfg.t_c);
        let div = |num: Point, den: Point| {
            num.to_complex().checked_div(&den.to_complex()).ok_or_else(|| Abort("zero side".into()))
        };
        let lhs = div(&cfg.t_b - &cfg.t_a, &cfg.t_c - &cfg.t_a)?;
        let rhs = div(&s.b - &s.a, &s.c - &s.a)?.conj();
        ck.zeros("(T_B − T_A)/(T_C − T_A) = conj((B − A)/(C − A))", complex_diff(&lhs, &rhs));
        Ok(())
    })
}

fn t_sides(cfg: &Configuration) -> GeomResult<[Line; 3]> {
    Ok([
        line_through(&cfg.t_b, &cfg.t_c)?,
        line_through(&cfg.t_c, &cfg.t_a)?,
        line_through(&cfg.t_a, &cfg.t_b)?,
    ])
}

pub fn check_steiner(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_steiner", |ck| {
        let sides = t_sides(cfg)?;
        let labels = ["T_BT_C", "T_CT_A", "T_AT_B"];
        for ((name, v), (side, label)) in vertex_names().iter().zip(s.vertices()).zip(sides.iter().zip(labels)) {
            let par = parallel_through(v, side);
            ck.zero(format!("S_t on the parallel from {name} to {label}"), par.eval(&cfg.steiner));
        }
        let circ = circumcircle(&s.a, &s.b, &s.c).named("⊙(ABC)")?;
        ck.zero("S_t on ⊙(ABC)", circ.power(&cfg.steiner));
        Ok(())
    })
}

pub fn check_tarry(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_tarry", |ck| {
        let sides = t_sides(cfg)?;
        let labels = ["T_BT_C", "T_CT_A", "T_AT_B"];
        for ((name, v), (side, label)) in vertex_names().iter().zip(s.vertices()).zip(sides.iter().zip(labels)) {
            let perp = perpendicular_through(v, side);
            ck.zero(format!("T_a on the perpendicular from {name} to {label}"), perp.eval(&cfg.tarry));
        }
        let circ = circumcircle(&s.a, &s.b, &s.c).named("⊙(ABC)")?;
        ck.zero("T_a on ⊙(ABC)", circ.power(&cfg.tarry));
        ck.same_point("T_a = antipode of S_t", &cfg.tarry, &reflect_in_point(&cfg.steiner, &circ.center()));
        Ok(())
    })
}

pub fn check_polygon_similarity(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_polygon_similarity", |ck| {
        let map = triangle_map(s, cfg)?;
        ck.same_point("map(C) = T_C", &map.apply(&s.c), &cfg.t_c);
        ck.same_point("map(S_t) = R", &map.apply(&cfg.steiner), &cfg.r);
        ck.same_point("map(T_a) = O", &map.apply(&cfg.tarry), &s.o);
        Ok(())
    })
}

pub fn check_perspective(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_perspective", |ck| {
        let pairs = [
            ("T_AA′", &cfg.t_a, &cfg.a_prime),
            ("T_BB′", &cfg.t_b, &cfg.b_prime),
            ("T_CC′", &cfg.t_c, &cfg.c_prime),
        ];
        for (label, t, primed) in pairs {
            ck.zero(format!("S on {label}"), signed_area2(t, primed, &cfg.s));
        }
        let conj = isogonal_conjugate(&cfg.r, &s.a, &s.b, &s.c).named("isogonal conjugate of R")?;
        ck.same_point("R* = isogonal conjugate of R", &cfg.r_star, &conj);
        let map = triangle_map(s, cfg)?;
        ck.same_point("map(R*) = S", &map.apply(&cfg.r_star), &cfg.s);
        Ok(())
    })
}

/// Collinearity witness of the pedal feet of `pt` and the line they span.
fn simson(s: &Scene, pt: &Point) -> Result<(Scalar, Line), Abort> {
    let feet = pedal_feet(pt, &s.a, &s.b, &s.c)?;
    let det = signed_area2(&feet[0], &feet[1], &feet[2]);
    Ok((det, line_through_any(&feet).named("Simson line")?))
}

pub fn check_simson_parallel(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_simson_parallel", |ck| {
        let (det, line) = simson(s, &cfg.steiner)?;
        ck.zero("pedal feet of S_t collinear", det);
        let or = line_through(&s.o, &cfg.r).named("OR")?;
        ck.zero("Simson line of S_t ∥ OR", parallel_det(&line, &or));
        Ok(())
    })
}

pub fn check_simson_perpendicular(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_simson_perpendicular", |ck| {
        let (det, line) = simson(s, &cfg.tarry)?;
        ck.zero("pedal feet of T_a collinear", det);
        let or = line_through(&s.o, &cfg.r).named("OR")?;
        ck.zero("Simson line of T_a ⊥ OR", perpendicular_dot(&line, &or));
        Ok(())
    })
}

pub fn check_circumcenter_perspective(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check("check_circumcenter_perspective", |ck| {
        let cev = cfg.or_cevians.as_ref().map_err(Abort::from)?;
        let or = line_through(&s.o, &cfg.r).named("OR")?;
        let sides = [
            ("X", &cev.x, line_through(&s.b, &s.c)?, "BC"),
            ("Y", &cev.y, line_through(&s.c, &s.a)?, "CA"),
            ("Z", &cev.z, line_through(&s.a, &s.b)?, "AB"),
        ];
        for (name, pt, side, side_name) in &sides {
            ck.zeros(format!("{name} = OR ∩ {side_name}"), vec![or.eval(pt), side.eval(pt)]);
        }
        let centers = [
            ("O_A", &cev.o_a, &s.a, &cev.y, &cev.z),
            ("O_B", &cev.o_b, &s.b, &cev.z, &cev.x),
            ("O_C", &cev.o_c, &s.c, &cev.x, &cev.y),
        ];
        for (name, center, v, p1, p2) in centers {
            let r2 = center.dist2(v);
            ck.zeros(
                format!("{name} is a circumcenter"),
                vec![&r2 - &center.dist2(p1), &r2 - &center.dist2(p2)],
            );
        }
        for ((name, v), (label, center)) in vertex_names()
            .iter()
            .zip(s.vertices())
            .zip([("O_A", &cev.o_a), ("O_B", &cev.o_b), ("O_C", &cev.o_c)])
        {
            ck.zero(format!("S_t on {name}{label}"), signed_area2(v, center, &cfg.steiner));
        }
        Ok(())
    })
}

/// Classical identities: the pole of the Pascal line is the symmedian point,
/// the Miquel pair are the Brocard points, and Ω, Ω′ see `OK` at a right
/// angle.
pub fn check_classical_overlay(s: &Scene, cfg: &Configuration) -> CheckResult {
    run_check(super::OVERLAY_CHECK, |ck| {
        let ov = classical_overlay(s).map_err(|e| Abort(e.to_string()))?;
        let (a, b, c, o) = (&s.a, &s.b, &s.c, &s.o);
        ck.same_point("R = K", &cfg.r, &ov.k);
        let weights = [b.dist2(c), c.dist2(a), a.dist2(b)];
        let total: Scalar = weights.iter().cloned().sum();
        let inv = total.recip().ok_or_else(|| Abort("zero side lengths".into()))?;
        let k = Point::new(
            (&weights[0] * &a.x + &weights[1] * &b.x + &weights[2] * &c.x) * &inv,
            (&weights[0] * &a.y + &weights[1] * &b.y + &weights[2] * &c.y) * &inv,
        );
        ck.same_point("K = (a²A + b²B + c²C)/(a² + b² + c²)", &ov.k, &k);
        ck.same_point("Ω = P", &ov.omega, &cfg.p);
        ck.same_point("Ω′ = Q", &ov.omega_prime, &cfg.q);
        for (name, w) in [("Ω", &ov.omega), ("Ω′", &ov.omega_prime)] {
            ck.zero(format!("{name} on the circle with diameter OK"), (w - o).dot(&(w - &ov.k)));
        }
        let w = &ov.omega;
        let brocard = [angle_at(a, b, w)?, angle_at(b, c, w)?, angle_at(c, a, w)?];
        ck.same_angle("∠(AB, AΩ) = ∠(BC, BΩ)", &brocard[0], &brocard[1]);
        ck.same_angle("∠(AB, AΩ) = ∠(CA, CΩ)", &brocard[0], &brocard[2]);
        let w2 = &ov.omega_prime;
        let second = [angle_at(a, w2, c)?, angle_at(b, w2, a)?, angle_at(c, w2, b)?];
        ck.same_angle("∠(AΩ′, AC) = ∠(BΩ′, BA)", &second[0], &second[1]);
        ck.same_angle("∠(AΩ′, AC) = ∠(CΩ′, CB)", &second[0], &second[2]);
        let cot_form = (signed_area2(a, b, c) * Scalar::from_int(2)) * inv;
        ck.zero("tan ω = 4·area/(a² + b² + c²)", &ov.tan_brocard - &cot_form);
        Ok(())
    })
}
