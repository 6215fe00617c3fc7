use crate::exact_geom::{
    circle_through_tangent, on_circle, pole_of_line, Circle, GeomError, Point, Scalar,
};
use crate::scene_gen::Scene;

use super::{miquel_point, pascal_line, pascal_points, sidelines, At, PipelineError};

/// Objects of the classical Brocard configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalOverlay {
    /// First Brocard point Ω.
    pub omega: Point,
    /// Second Brocard point Ω′.
    pub omega_prime: Point,
    /// Symmedian point, as the pole of the Pascal line.
    pub k: Point,
    /// `ω_A, ω_B, ω_C, ω_A′, ω_B′, ω_C′`.
    pub tangent_circles: [Circle; 6],
    /// tan of the Brocard angle `∠ΩAB`.
    pub tan_brocard: Scalar,
    /// Ω = Ω′ (only for an equilateral triangle).
    pub collapsed: bool,
}

pub fn classical_overlay(s: &Scene) -> Result<ClassicalOverlay, PipelineError> {
    if !s.classical {
        return Err(PipelineError::InvalidScene(vec!["scene is not classical".into()]));
    }
    let (a, b, c) = (&s.a, &s.b, &s.c);
    let [bc, ca, ab] = sidelines(s)?;

    let omega = miquel_point(b, c, a, a, b, c).at("Ω")?;
    let omega_prime = miquel_point(c, a, b, a, b, c).at("Ω′")?;

    // ω_A through A tangent to BC at B, ω_B through B tangent to CA at C,
    // ω_C through C tangent to AB at A; primed circles touch at the other end.
    let tangent_circles = [
        circle_through_tangent(b, &bc, a).at("ω_A")?,
        circle_through_tangent(c, &ca, b).at("ω_B")?,
        circle_through_tangent(a, &ab, c).at("ω_C")?,
        circle_through_tangent(c, &bc, a).at("ω_A′")?,
        circle_through_tangent(a, &ca, b).at("ω_B′")?,
        circle_through_tangent(b, &ab, c).at("ω_C′")?,
    ];
    let (first, second) = tangent_circles.split_at(3);
    if !first.iter().all(|w| on_circle(&omega, w)) {
        return Err(PipelineError::Inconsistent("Ω misses a tangent circle".into()));
    }
    if !second.iter().all(|w| on_circle(&omega_prime, w)) {
        return Err(PipelineError::Inconsistent("Ω′ misses a tangent circle".into()));
    }

    let k = pole_of_line(&pascal_line(&pascal_points(s)?)?, &s.gamma).at("K")?;

    let ray_ab = b - a;
    let ray_aw = &omega - a;
    let inv_dot = ray_ab
        .dot(&ray_aw)
        .recip()
        .ok_or_else(|| GeomError::degenerate("right Brocard angle"))
        .at("tan ω")?;
    let tan_brocard = ray_ab.cross(&ray_aw) * inv_dot;

    Ok(ClassicalOverlay {
        collapsed: omega == omega_prime,
        omega,
        omega_prime,
        k,
        tangent_circles,
        tan_brocard,
    })
}
