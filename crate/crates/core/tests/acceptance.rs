//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

use brocard::brocard_pipeline::{classical_overlay, compute_configuration, miquel_point, Configuration};
use brocard::exact_geom::{
    isogonal_conjugate, on_line, pole_of_line, polar_of_point, second_intersection_circle_line, Circle,
    Line, Point, Scalar,
};
use brocard::scene_gen::{
    circle_point_from_parameter, classical_brocard_scene, generate_scene, Scene, SceneParams,
};
use brocard::theorem_suite::{
    check_ids, consumed_points, mutate, run_config_check, run_suite, verify_cyclic, CheckResult,
    CyclicFigure, Status, SuiteInputs, LEMMA_CHECKS, OVERLAY_CHECK,
};
use common::{circumcenter_oracle, meet_oracle, nonzero_scalar, point, scalar, triangle};
use proptest::prelude::*;
use proptest::sample::Index;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

type Criterion = fn() -> Result<String, String>;

const TIME_BUDGET: Duration = Duration::from_secs(60);

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, max_global_rejects: 100_000, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run_property<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    body: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases).run(&strategy, body).map_err(|e| format!("{name}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_seeds() -> Result<String, String> {
    let start = Instant::now();
    for seed in 1..=100u64 {
        let scene = generate_scene(&SceneParams::with_seed(seed)).map_err(|e| format!("seed {seed}: {e}"))?;
        let report = run_suite(&scene).map_err(|e| format!("seed {seed}: {e}"))?;
        let bad: Vec<_> =
            report.checks.iter().filter(|c| c.status != Status::Pass).map(|c| c.check_id.as_str()).collect();
        ensure(report.pass == 17 && bad.is_empty(), || format!("seed {seed}: pass {} not passing {bad:?}", report.pass))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < TIME_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("100 scenes × 17 PASS in {:.2}s", elapsed.as_secs_f64()))
}

fn classical() -> Result<String, String> {
    let scene = classical_brocard_scene(
        [&Scalar::zero(), &Scalar::one(), &Scalar::from_int(-1)],
        &Point::origin(),
        &Scalar::one(),
    )
    .map_err(|e| e.to_string())?;
    let cfg = compute_configuration(&scene).map_err(|e| e.to_string())?;
    let overlay = classical_overlay(&scene).map_err(|e| e.to_string())?;
    let (a, b, c) = (&scene.a, &scene.b, &scene.c);

    // Symmedian point from barycentrics a² : b² : c².
    let w = [b.dist2(c), c.dist2(a), a.dist2(b)];
    let total = &(&w[0] + &w[1]) + &w[2];
    let k_oracle = Point::new(
        &(&(&w[0] * &a.x) + &(&w[1] * &b.x)) + &(&w[2] * &c.x),
        &(&(&w[0] * &a.y) + &(&w[1] * &b.y)) + &(&w[2] * &c.y),
    )
    .scale(&total.recip().ok_or("zero perimeter")?);
    let half = Point::new(Scalar::ratio(1, 2), Scalar::zero());
    ensure(k_oracle == half, || format!("oracle K = {k_oracle}"))?;
    ensure(cfg.r == k_oracle, || format!("R = {} but K = {k_oracle}", cfg.r))?;
    ensure(overlay.k == k_oracle, || format!("overlay K = {}", overlay.k))?;

    // tan ω = 4·Area / (a² + b² + c²).
    let area2 = (b - a).cross(&(c - a)).abs();
    let tan_oracle = (area2 * Scalar::from_int(2)) / total;
    ensure(tan_oracle == Scalar::ratio(1, 2), || format!("oracle tan ω = {tan_oracle}"))?;
    ensure(overlay.tan_brocard == tan_oracle, || format!("tan ω = {}", overlay.tan_brocard))?;

    for (name, w) in [("Ω", &overlay.omega), ("Ω′", &overlay.omega_prime)] {
        let dot = (w - &scene.o).dot(&(w - &k_oracle));
        ensure(dot.is_zero(), || format!("{name} = {w} misses the circle on OK"))?;
    }
    let mirror = Point::new(overlay.omega.x.clone(), -&overlay.omega.y);
    ensure(overlay.omega_prime == mirror, || format!("Ω′ = {} is not the mirror of Ω", overlay.omega_prime))?;
    ensure(overlay.omega != overlay.omega_prime, || "Ω = Ω′".into())?;
    Ok(format!("R = K = {}, tan ω = {}, Ω = {}, Ω′ = {}", cfg.r, overlay.tan_brocard, overlay.omega, overlay.omega_prime))
}

fn lemma_oracles() -> Result<String, String> {
    run_property("medial Miquel point", 20, triangle(), |[a, b, c]| {
        let (d, e, f) = (b.midpoint(&c), c.midpoint(&a), a.midpoint(&b));
        let m = miquel_point(&d, &e, &f, &a, &b, &c).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(m, circumcenter_oracle(&a, &b, &c));
        Ok(())
    })?;
    let quad = (point(), 1i64..=20, [scalar(), scalar(), scalar(), scalar()]);
    run_property("cyclic quadrangle inversion", 20, quad, |(center, r, t)| {
        let radius = Scalar::from_int(r);
        let pts = t.map(|ti| circle_point_from_parameter(&ti, &center, &radius));
        let circle = Circle::from_center_radius2(&center, &radius.square());
        let Ok(fig) = CyclicFigure::build(circle, pts.clone()) else {
            return Err(TestCaseError::reject("degenerate quadrangle"));
        };
        let [a, b, c, d] = &pts;
        let r_oracle = meet_oracle(a, c, b, d);
        let v = &r_oracle - &center;
        let inverse = &center + &v.scale(&(radius.square() / v.norm2()));
        prop_assert_eq!(&fig.r, &r_oracle);
        prop_assert_eq!(&fig.m, &inverse);
        prop_assert_eq!(verify_cyclic(&fig).status, Status::Pass);
        Ok(())
    })?;
    Ok("20 medial triangles and 20 cyclic quadrangles match closed forms".into())
}

fn nonzero_offset() -> impl Strategy<Value = (Scalar, Scalar)> {
    (scalar(), scalar()).prop_filter("nonzero offset", |(dx, dy)| !dx.is_zero() || !dy.is_zero())
}

fn detected(result: &CheckResult) -> Result<(), TestCaseError> {
    prop_assert_eq!(result.status, Status::Fail, "{:?}", result.reason);
    let witnessed = result.failed().any(|a| a.witness.iter().any(|w| !w.is_zero()));
    prop_assert!(witnessed, "FAIL without a nonzero witness");
    Ok(())
}

fn shifted(p: &Point, (dx, dy): &(Scalar, Scalar)) -> Point {
    p.translate(dx, dy)
}

fn mutation_of_config(
    id: &str,
    scenes: &[(Scene, Configuration)],
) -> Result<(), String> {
    let points = consumed_points(id);
    ensure(!points.is_empty(), || format!("{id} consumes no points"))?;
    let strategy = (any::<Index>(), any::<Index>(), nonzero_offset());
    run_property(id, 20, strategy, |(si, pi, (dx, dy))| {
        let (scene, cfg) = &scenes[si.index(scenes.len())];
        let name = points[pi.index(points.len())];
        let mutated = mutate(cfg, name, &dx, &dy).ok_or_else(|| TestCaseError::reject("point unavailable"))?;
        let result = run_config_check(id, scene, &mutated).expect("known check");
        detected(&result).map_err(|e| TestCaseError::fail(format!("{name} moved by ({dx}, {dy}): {e}")))
    })
}

fn mutation_of_lemma(id: &str, inputs: &[SuiteInputs]) -> Result<(), String> {
    let strategy = (any::<Index>(), any::<Index>(), nonzero_offset());
    run_property(id, 20, strategy, |(si, pi, off)| {
        let mut input = inputs[si.index(inputs.len())].clone();
        let slot = |n: usize| pi.index(n);
        let result = match id {
            "check_lemma_spiral" => {
                let fig = input.spiral.as_mut().expect("spiral input");
                let p = [&mut fig.m, &mut fig.d, &mut fig.e, &mut fig.f].into_iter().nth(slot(4)).unwrap();
                *p = shifted(p, &off);
                input.run()[0].clone()
            }
            "check_lemma_cyclic" => {
                let fig = input.cyclic.as_mut().expect("cyclic input");
                let all = [&mut fig.a, &mut fig.b, &mut fig.c, &mut fig.d, &mut fig.p, &mut fig.q, &mut fig.m, &mut fig.r];
                let p = all.into_iter().nth(slot(8)).unwrap();
                *p = shifted(p, &off);
                input.run()[1].clone()
            }
            "check_lemma_simson_angle" => {
                let fig = input.simson.as_mut().expect("simson input");
                let p = [&mut fig.m, &mut fig.n].into_iter().nth(slot(2)).unwrap();
                *p = shifted(p, &off);
                input.run()[2].clone()
            }
            "check_kwon_remark" => {
                let fig = input.kwon.as_mut().expect("equal-distance input");
                let all = [&mut fig.d, &mut fig.e, &mut fig.f, &mut fig.x, &mut fig.y, &mut fig.z, &mut fig.t];
                let p = all.into_iter().nth(slot(7)).unwrap();
                *p = shifted(p, &off);
                input.run()[3].clone()
            }
            other => panic!("unknown lemma check {other}"),
        };
        detected(&result)
    })
}

fn mutation_soundness() -> Result<String, String> {
    let mut scenes = Vec::new();
    let mut inputs = Vec::new();
    for seed in 1..=5u64 {
        let scene = generate_scene(&SceneParams::with_seed(seed)).map_err(|e| e.to_string())?;
        let (cfg, input) = SuiteInputs::prepare(&scene).map_err(|e| e.to_string())?;
        scenes.push((scene, cfg));
        inputs.push(input);
    }
    let classical = classical_brocard_scene(
        [&Scalar::zero(), &Scalar::one(), &Scalar::from_int(-1)],
        &Point::origin(),
        &Scalar::one(),
    )
    .map_err(|e| e.to_string())?;
    let classical_cfg = compute_configuration(&classical).map_err(|e| e.to_string())?;
    let classical = [(classical, classical_cfg)];

    let ids = check_ids();
    let mut covered = 0;
    for id in &ids {
        if LEMMA_CHECKS.contains(id) {
            mutation_of_lemma(id, &inputs)?;
        } else if *id == OVERLAY_CHECK {
            mutation_of_config(id, &classical)?;
        } else {
            mutation_of_config(id, &scenes)?;
        }
        covered += 1;
    }
    ensure(covered == 18, || format!("covered {covered} checks"))?;
    Ok(format!("{covered} checks × 20 mutations all FAIL with a nonzero witness"))
}

fn cli(out_dir: &std::path::Path, args: &[&str]) -> Result<(), String> {
    let status = Command::new(env!("CARGO_BIN_EXE_brocard"))
        .arg("--out-dir")
        .arg(out_dir)
        .args(args)
        .stdout(Stdio::null())
        .status()
        .map_err(|e| e.to_string())?;
    ensure(status.success(), || format!("brocard {args:?} exited with {status}"))
}

fn determinism() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    let path = |name: &str| d.join(name).to_string_lossy().into_owned();
    for run in ["1", "2"] {
        cli(d, &["generate", "--seed", "42", "--count", "10", "--out", &path(&format!("scenes{run}.json"))])?;
    }
    let read = |name: &str| std::fs::read(d.join(name)).map_err(|e| e.to_string());
    ensure(read("scenes1.json")? == read("scenes2.json")?, || "scene files differ".into())?;
    for run in ["1", "2"] {
        cli(d, &["verify", "--in", &path("scenes1.json"), "--report", &path(&format!("report{run}.json"))])?;
    }
    ensure(read("report1.json")? == read("report2.json")?, || "reports differ".into())?;
    Ok("seed 42: scene files and reports are byte-identical across runs".into())
}

fn kernel_properties() -> Result<String, String> {
    const CASES: u32 = 1000;
    let circle = (point(), nonzero_scalar()).prop_map(|(c, r)| Circle::from_center_radius2(&c, &r.square()));
    run_property("pole of polar", CASES, (circle, point()), |(c, p)| {
        prop_assume!(p != c.center());
        let polar = polar_of_point(&p, &c).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(pole_of_line(&polar, &c).map_err(|e| TestCaseError::fail(e.to_string()))?, p);
        Ok(())
    })?;
    run_property("isogonal involution", CASES, (triangle(), point()), |([a, b, c], p)| {
        let Ok(q) = isogonal_conjugate(&p, &a, &b, &c) else {
            return Err(TestCaseError::reject("on a sideline or the circumcircle"));
        };
        let Ok(back) = isogonal_conjugate(&q, &a, &b, &c) else {
            return Err(TestCaseError::reject("conjugate on a sideline"));
        };
        prop_assert_eq!(back, p);
        Ok(())
    })?;
    let secant = (point(), 1i64..=30, scalar(), scalar(), scalar());
    run_property("second intersection twice", CASES, secant, |(center, r, t, dx, dy)| {
        prop_assume!(!dx.is_zero() || !dy.is_zero());
        let radius = Scalar::from_int(r);
        let circle = Circle::from_center_radius2(&center, &radius.square());
        let p = circle_point_from_parameter(&t, &center, &radius);
        let line = Line::new(dy.clone(), -&dx, &dx * &p.y - &dy * &p.x).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(on_line(&p, &line));
        let q = second_intersection_circle_line(&circle, &line, &p).map_err(|e| TestCaseError::fail(e.to_string()))?.point;
        let back = second_intersection_circle_line(&circle, &line, &q).map_err(|e| TestCaseError::fail(e.to_string()))?.point;
        prop_assert_eq!(back, p);
        Ok(())
    })?;
    let coeffs = (scalar(), scalar(), scalar(), nonzero_scalar());
    run_property("line canonicalization", CASES, coeffs, |(a, b, c, k)| {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let line = Line::new(a.clone(), b.clone(), c.clone()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let again = Line::new(line.a().clone(), line.b().clone(), line.c().clone()).unwrap();
        prop_assert_eq!(&again, &line);
        let scaled = Line::new(&a * &k, &b * &k, &c * &k).unwrap();
        prop_assert_eq!(&scaled, &line);
        Ok(())
    })?;
    Ok(format!("4 kernel properties × {CASES} cases"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 6] = [
        ("random seeds 1..100 all PASS", random_seeds),
        ("classical limit matches oracles", classical),
        ("lemma oracles", lemma_oracles),
        ("mutation soundness", mutation_soundness),
        ("CLI determinism", determinism),
        ("kernel properties", kernel_properties),
    ];
    let mut failures = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(criterion)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
