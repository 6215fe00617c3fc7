//! Exact checks of the configuration theorems and the supporting lemmas.
//!
//! Each check returns a [`CheckResult`] whose assertions carry the exact
//! quantities that must vanish. A check never rounds and never compares
//! against a tolerance.

mod config_checks;
mod inputs;
mod lemmas;

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::brocard_pipeline::{compute_configuration, Configuration, Degeneracy, PipelineError};
use crate::exact_geom::{DirectedAngleClass, GeomError, Point, Scalar};
use crate::scene_gen::Scene;

pub use config_checks::{
    check_brocard_circle, check_circumcenter_perspective, check_classical_overlay,
    check_equidistant, check_first_triangle_similarity, check_isogonal_conjugates,
    check_pascal_and_r, check_perspective, check_polygon_similarity, check_rotation_angles,
    check_simson_parallel, check_simson_perpendicular, check_steiner, check_tarry,
    consumed_points, run_config_check, CONFIG_CHECKS,
};
pub use inputs::SuiteInputs;
pub use lemmas::{
    check_kwon_remark, check_lemma_cyclic, check_lemma_cyclic_points, check_lemma_simson_angle,
    check_lemma_spiral, verify_cyclic, verify_simson, verify_spiral, CyclicFigure, SimsonFigure,
    SpiralFigure,
};

pub const LEMMA_CHECKS: [&str; 4] =
    ["check_lemma_spiral", "check_lemma_cyclic", "check_lemma_simson_angle", "check_kwon_remark"];

/// Extra check run on classical scenes only.
pub const OVERLAY_CHECK: &str = "check_classical_overlay";

/// Every check id, in report order.
pub fn check_ids() -> Vec<&'static str> {
    CONFIG_CHECKS
        .iter()
        .map(|(id, _)| *id)
        .chain(LEMMA_CHECKS)
        .chain([OVERLAY_CHECK])
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Degenerate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Degenerate => "DEGENERATE",
        })
    }
}

/// One exact identity. `pass` iff every witness is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub label: String,
    pub pass: bool,
    pub witness: Vec<Scalar>,
}

/// Wall-clock time of a check. Ignored by equality and serialization.
#[derive(Debug, Clone, Copy, Default)]
pub struct Elapsed(pub Duration);

impl PartialEq for Elapsed {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Elapsed {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub assertions: Vec<Assertion>,
    /// Informational identities; they never change the status.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Assertion>,
    /// First object that could not be built, for DEGENERATE results.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip)]
    pub elapsed: Elapsed,
}

impl CheckResult {
    pub fn degenerate(check_id: &str, reason: impl Into<String>) -> Self {
        CheckResult {
            check_id: check_id.to_string(),
            status: Status::Degenerate,
            assertions: Vec::new(),
            notes: Vec::new(),
            reason: Some(reason.into()),
            elapsed: Elapsed::default(),
        }
    }

    pub fn failed(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.pass)
    }
}

/// Reason a check could not be evaluated.
#[derive(Debug, Clone)]
pub(crate) struct Abort(String);

impl From<GeomError> for Abort {
    fn from(e: GeomError) -> Self {
        Abort(e.to_string())
    }
}

impl From<&Degeneracy> for Abort {
    fn from(d: &Degeneracy) -> Self {
        Abort(d.to_string())
    }
}

pub(crate) trait Named<T> {
    fn named(self, object: &str) -> Result<T, Abort>;
}

impl<T> Named<T> for Result<T, GeomError> {
    fn named(self, object: &str) -> Result<T, Abort> {
        self.map_err(|e| Abort(format!("{object}: {e}")))
    }
}

/// Accumulates assertions for one check.
pub(crate) struct Checker {
    assertions: Vec<Assertion>,
    notes: Vec<Assertion>,
}

fn assertion(label: impl Into<String>, witness: Vec<Scalar>) -> Assertion {
    Assertion { label: label.into(), pass: witness.iter().all(Scalar::is_zero), witness }
}

impl Checker {
    pub(crate) fn zeros(&mut self, label: impl Into<String>, witness: Vec<Scalar>) {
        self.assertions.push(assertion(label, witness));
    }

    pub(crate) fn zero(&mut self, label: impl Into<String>, witness: Scalar) {
        self.zeros(label, vec![witness]);
    }

    pub(crate) fn same_point(&mut self, label: impl Into<String>, p: &Point, q: &Point) {
        self.zeros(label, vec![&p.x - &q.x, &p.y - &q.y]);
    }

    pub(crate) fn same_angle(
        &mut self,
        label: impl Into<String>,
        lhs: &DirectedAngleClass,
        rhs: &DirectedAngleClass,
    ) {
        self.zero(label, lhs.discrepancy(rhs));
    }

    pub(crate) fn note(&mut self, label: impl Into<String>, witness: Vec<Scalar>) {
        self.notes.push(assertion(label, witness));
    }
}

/// Runs `body`; a construction failure inside it makes the check DEGENERATE.
pub(crate) fn run_check(
    check_id: &str,
    body: impl FnOnce(&mut Checker) -> Result<(), Abort>,
) -> CheckResult {
    let started = Instant::now();
    let mut ck = Checker { assertions: Vec::new(), notes: Vec::new() };
    let outcome = body(&mut ck);
    let elapsed = Elapsed(started.elapsed());
    match outcome {
        Err(Abort(reason)) => CheckResult { elapsed, ..CheckResult::degenerate(check_id, reason) },
        Ok(()) => {
            let status = if ck.assertions.iter().all(|a| a.pass) { Status::Pass } else { Status::Fail };
            CheckResult {
                check_id: check_id.to_string(),
                status,
                assertions: ck.assertions,
                notes: ck.notes,
                reason: None,
                elapsed,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub scene_digest: String,
    pub classical: bool,
    /// `P = Q`; every configuration check is then DEGENERATE.
    pub collapsed: bool,
    pub pass: usize,
    pub fail: usize,
    pub degenerate: usize,
    pub all_pass: bool,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check_id == id)
    }
}

/// Runs every applicable check on `s`.
///
/// Invalid scenes and failed internal cross-checks are errors; degenerate
/// constructions become DEGENERATE entries.
pub fn run_suite(s: &Scene) -> Result<SuiteReport, PipelineError> {
    run_suite_filtered(s, None)
}

/// As [`run_suite`], restricted to the check ids in `filter`.
pub fn run_suite_filtered(s: &Scene, filter: Option<&[String]>) -> Result<SuiteReport, PipelineError> {
    let wanted = |id: &str| filter.is_none_or(|f| f.iter().any(|w| w == id));
    let outcome = match compute_configuration(s) {
        Ok(cfg) => Ok(cfg),
        Err(e @ (PipelineError::InvalidScene(_) | PipelineError::Inconsistent(_))) => return Err(e),
        Err(e) => Err(e),
    };
    let collapsed = matches!(outcome, Err(PipelineError::Collapse { .. }));

    let mut checks = Vec::new();
    for (id, check) in CONFIG_CHECKS {
        if !wanted(id) {
            continue;
        }
        checks.push(match &outcome {
            Ok(cfg) => check(s, cfg),
            Err(e) => CheckResult::degenerate(id, e.to_string()),
        });
    }

    let lemma_inputs = SuiteInputs::derive_each(s);
    for (id, result) in LEMMA_CHECKS.iter().zip(lemma_inputs.run()) {
        if wanted(id) {
            checks.push(result);
        }
    }

    if s.classical && wanted(OVERLAY_CHECK) {
        checks.push(match &outcome {
            Ok(cfg) => check_classical_overlay(s, cfg),
            Err(e) => CheckResult::degenerate(OVERLAY_CHECK, e.to_string()),
        });
    }

    let count = |st: Status| checks.iter().filter(|c| c.status == st).count();
    let (pass, fail, degenerate) = (count(Status::Pass), count(Status::Fail), count(Status::Degenerate));
    Ok(SuiteReport {
        scene_digest: s.digest(),
        classical: s.classical,
        collapsed,
        pass,
        fail,
        degenerate,
        all_pass: fail == 0 && degenerate == 0,
        checks,
    })
}

/// The configuration of `s` with `point` translated by `(dx, dy)`, for
/// mutation testing.
pub fn mutate(cfg: &Configuration, point: &str, dx: &Scalar, dy: &Scalar) -> Option<Configuration> {
    let mut copy = cfg.clone();
    let p = copy.point_mut(point)?;
    *p = p.translate(dx, dy);
    Some(copy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::q;
    use crate::scene_gen::{
        classical_brocard_scene, generate_scene, incentric_collapse_scene, SceneParams,
    };

    #[test]
    fn seed_seven_all_pass() {
        let s = generate_scene(&SceneParams::with_seed(7)).unwrap();
        let report = run_suite(&s).unwrap();
        for c in &report.checks {
            assert_eq!(c.status, Status::Pass, "{c:?}");
        }
        assert_eq!(report.checks.len(), 17);
        assert!(report.all_pass);
    }

    #[test]
    fn classical_scene_runs_overlay() {
        let s = classical_brocard_scene([&q(0, 1), &q(1, 1), &q(-1, 1)], &Point::origin(), &Scalar::one())
            .unwrap();
        let report = run_suite(&s).unwrap();
        assert_eq!(report.check(OVERLAY_CHECK).unwrap().status, Status::Pass);
        assert_eq!(report.fail, 0, "{report:?}");
        // isosceles apex on OR
        let cp = report.check("check_circumcenter_perspective").unwrap();
        assert_eq!(cp.status, Status::Degenerate);
        assert!(cp.reason.as_deref().unwrap().starts_with("O_A"));
    }

    #[test]
    fn collapse_is_degenerate_not_fail() {
        let report = run_suite(&incentric_collapse_scene()).unwrap();
        assert!(report.collapsed);
        assert_eq!(report.fail, 0);
        for (id, _) in CONFIG_CHECKS {
            assert_eq!(report.check(id).unwrap().status, Status::Degenerate);
        }
    }

    #[test]
    fn filter_restricts_checks() {
        let s = generate_scene(&SceneParams::with_seed(7)).unwrap();
        let filter = vec!["check_steiner".to_string(), "check_tarry".to_string()];
        let report = run_suite_filtered(&s, Some(&filter)).unwrap();
        let ids: Vec<_> = report.checks.iter().map(|c| c.check_id.as_str()).collect();
        assert_eq!(ids, ["check_steiner", "check_tarry"]);
    }

    #[test]
    fn report_is_deterministic() {
        let s = generate_scene(&SceneParams::with_seed(3)).unwrap();
        assert_eq!(run_suite(&s).unwrap(), run_suite(&s).unwrap());
    }

    #[test]
    fn mutation_flips_isogonal_check() {
        let s = generate_scene(&SceneParams::with_seed(7)).unwrap();
        let cfg = compute_configuration(&s).unwrap();
        let moved = mutate(&cfg, "P", &q(1, 1), &q(0, 1)).unwrap();
        let r = check_isogonal_conjugates(&s, &moved);
        assert_eq!(r.status, Status::Fail);
        assert!(r.failed().all(|a| a.witness.iter().any(|w| !w.is_zero())));
    }
}
