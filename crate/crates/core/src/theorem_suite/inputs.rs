use crate::brocard_pipeline::{compute_configuration, miquel_point, Configuration, PipelineError};
use crate::exact_geom::{circumcircle, line_through, GeomError, GeomResult, Scalar};
use crate::scene_gen::{circle_points_through, KwonScene, Scene};

use super::lemmas::{
    check_kwon_remark, spiral_parameter, verify_cyclic, verify_simson, verify_spiral, CyclicFigure,
    SimsonFigure, SpiralFigure,
};
use super::{CheckResult, LEMMA_CHECKS};

/// Slopes of the chords through `A1` that pick the other three vertices of
/// the cyclic quadrangle on Γ.
const CYCLIC_SLOPES: [(i64, i64); 3] = [(1, 1), (-2, 1), (1, 3)];
/// Slopes of the chords through `A` that pick `M, N` on the circumcircle.
const SIMSON_SLOPES: [(i64, i64); 2] = [(2, 1), (-3, 1)];

/// Lemma figures derived deterministically from a scene:
/// the spiral figure about `P` with the scene's own rotation, a cyclic
/// quadrangle on Γ through `A1`, two circumcircle points reached from `A`,
/// and the equal-distance figure with `D, E, F = A1, B1, C1` and `X, Y` the
/// midpoints of `BC, CA`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteInputs {
    pub spiral: Result<SpiralFigure, String>,
    pub cyclic: Result<CyclicFigure, String>,
    pub simson: Result<SimsonFigure, String>,
    pub kwon: Result<KwonScene, String>,
}

fn slopes(pairs: &[(i64, i64)]) -> Vec<Scalar> {
    pairs.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect()
}

fn spiral_input(s: &Scene) -> GeomResult<SpiralFigure> {
    let p = miquel_point(&s.a1, &s.b1, &s.c1, &s.a, &s.b, &s.c)?;
    let rotation = spiral_parameter(&p, &s.a1, &line_through(&s.b, &s.c)?)?;
    SpiralFigure::build([s.a.clone(), s.b.clone(), s.c.clone()], p, rotation)
}

fn cyclic_input(s: &Scene) -> GeomResult<CyclicFigure> {
    let pts = circle_points_through(&s.gamma, &s.a1, &slopes(&CYCLIC_SLOPES))?;
    let quad = [s.a1.clone(), pts[0].clone(), pts[1].clone(), pts[2].clone()];
    for (i, p) in quad.iter().enumerate() {
        if quad[..i].contains(p) {
            return Err(GeomError::CoincidentPoints);
        }
    }
    CyclicFigure::build(s.gamma.clone(), quad)
}

fn simson_input(s: &Scene) -> GeomResult<SimsonFigure> {
    let circ = circumcircle(&s.a, &s.b, &s.c)?;
    let pts = circle_points_through(&circ, &s.a, &slopes(&SIMSON_SLOPES))?;
    if pts.contains(&s.a) {
        return Err(GeomError::degenerate("chord through A is tangent"));
    }
    Ok(SimsonFigure {
        a: s.a.clone(),
        b: s.b.clone(),
        c: s.c.clone(),
        m: pts[0].clone(),
        n: pts[1].clone(),
    })
}

fn kwon_input(s: &Scene) -> GeomResult<KwonScene> {
    let k = KwonScene::complete(
        [s.a.clone(), s.b.clone(), s.c.clone()],
        s.a1.clone(),
        s.b.midpoint(&s.c),
        s.b1.clone(),
        s.c.midpoint(&s.a),
        s.c1.clone(),
    )?;
    if k.z == k.a || k.z == k.b {
        return Err(GeomError::degenerate("Z at a vertex"));
    }
    Ok(k)
}

impl SuiteInputs {
    /// Derives each figure independently; a failure only affects its own
    /// check.
    pub fn derive_each(s: &Scene) -> SuiteInputs {
        let text = |e: GeomError| e.to_string();
        SuiteInputs {
            spiral: spiral_input(s).map_err(text),
            cyclic: cyclic_input(s).map_err(text),
            simson: simson_input(s).map_err(text),
            kwon: kwon_input(s).map_err(text),
        }
    }

    /// Fails with a degeneracy naming the first figure that cannot be built.
    pub fn derive(s: &Scene) -> Result<SuiteInputs, PipelineError> {
        let inputs = SuiteInputs::derive_each(s);
        let errors = [
            inputs.spiral.as_ref().err(),
            inputs.cyclic.as_ref().err(),
            inputs.simson.as_ref().err(),
            inputs.kwon.as_ref().err(),
        ];
        for (id, err) in LEMMA_CHECKS.iter().zip(errors) {
            if let Some(e) = err {
                return Err(PipelineError::Degenerate {
                    object: id.to_string(),
                    cause: GeomError::Degenerate(e.clone()),
                });
            }
        }
        Ok(inputs)
    }

    /// The configuration and all lemma figures, or the first degeneracy.
    /// A degenerate `OR` cevian construction counts as a degeneracy.
    pub fn prepare(s: &Scene) -> Result<(Configuration, SuiteInputs), PipelineError> {
        let cfg = compute_configuration(s)?;
        if let Err(d) = &cfg.or_cevians {
            return Err(PipelineError::Degenerate { object: d.object.clone(), cause: d.cause.clone() });
        }
        let inputs = SuiteInputs::derive(s)?;
        Ok((cfg, inputs))
    }

    /// Results of the lemma checks, in [`LEMMA_CHECKS`] order.
    pub fn run(&self) -> [CheckResult; 4] {
        let degenerate = |id: &str, e: &String| CheckResult::degenerate(id, e.clone());
        [
            self.spiral.as_ref().map_or_else(|e| degenerate(LEMMA_CHECKS[0], e), verify_spiral),
            self.cyclic.as_ref().map_or_else(|e| degenerate(LEMMA_CHECKS[1], e), verify_cyclic),
            self.simson.as_ref().map_or_else(|e| degenerate(LEMMA_CHECKS[2], e), verify_simson),
            self.kwon.as_ref().map_or_else(|e| degenerate(LEMMA_CHECKS[3], e), check_kwon_remark),
        ]
    }
}
