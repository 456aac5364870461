//! Acceptance suite: one test per release criterion, each printing a PASS
//! line when it holds. Random inputs are drawn from a fixed-seed generator
//! so every run checks the same cases. Run with `--nocapture` to see the
//! per-criterion lines.


use std::fs;
use std::process::{Command, Output};

use ffsim_core::{
    assign, build_layout, classify_center, classify_corner, compute_expansion, coverage_map,
    validate_layout, CenterRegion, Corner, CornerRegion, HumanSpec, Layout, Point2, Rect,
    RobotSpec, SensorModel,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oracle::{rel_close, TOL};

fn random_expanded_pair(rng: &mut ChaCha8Rng) -> (RobotSpec, HumanSpec) {
    let wrlr = rng.gen_range(0.2..1.5);
    let k2 = rng.gen_range(0.5..1.15);
    let p_target = rng.gen_range(1.25..1.95);
    (
        RobotSpec {
            wrfb: rng.gen_range(0.2..1.5),
            wrlr,
            xi: p_target - k2,
            epsilon: rng.gen_range(0.3..1.5),
            k2_threshold: 1.2,
            p_min: 1.2,
            p_max: 2.0,
        },
        HumanSpec {
            whfb: rng.gen_range(0.15..0.8),
            whlr: wrlr / k2,
        },
    )
}

fn random_pair(rng: &mut ChaCha8Rng) -> (RobotSpec, HumanSpec) {
    (
        RobotSpec {
            wrfb: rng.gen_range(0.2..1.5),
            wrlr: rng.gen_range(0.2..1.5),
            xi: rng.gen_range(0.05..1.0),
            epsilon: rng.gen_range(0.3..1.5),
            k2_threshold: 1.2,
            p_min: 1.2,
            p_max: 2.0,
        },
        HumanSpec {
            whfb: rng.gen_range(0.15..0.8),
            whlr: rng.gen_range(0.2..1.2),
        },
    )
}

#[test]
fn a1_expansion_ratio_identities_hold_on_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..100 {
        let (robot, human) = random_expanded_pair(&mut rng);
        let e = compute_expansion(&robot, &human).unwrap();
        assert!(e.expanded && !e.clamped, "case {case}: generator promised an unclamped expansion");
        assert!(rel_close(e.k1, robot.wrfb / human.whfb, TOL), "case {case}: k1");
        assert!(rel_close(e.k2, robot.wrlr / human.whlr, TOL), "case {case}: k2");
        assert!(rel_close(e.p, robot.xi + e.k2, TOL), "case {case}: p from margin plus width ratio");
        assert!(rel_close(e.vwrfb / robot.wrfb, e.p, TOL), "case {case}: depth ratio");
        assert!(rel_close(e.vwrlr / robot.wrlr, e.p, TOL), "case {case}: width ratio");
        assert!(rel_close(e.wlr / robot.wrlr, e.p, TOL), "case {case}: restricted width ratio");
        assert!(rel_close(e.wfb / e.wlr, robot.epsilon, TOL), "case {case}: restricted depth ratio");
    }
    println!("[acceptance] A1 PASS: expansion ratio identities hold on 100 random expanded inputs (tol 1e-12)");
}

#[test]
fn a2_center_key_points_match_recomputed_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..100 {
        let (robot, human) = random_expanded_pair(&mut rng);
        let l = build_layout(&robot, &human, SensorModel::FourSideCenter).unwrap();
        let f = oracle::center_form(&robot, &human);
        let kp = &l.key_points;

        assert_eq!(kp.p1.x, 0.0, "case {case}: front midpoint is on the axis");
        assert_eq!(kp.p3.x, 0.0, "case {case}: rear midpoint is on the axis");
        assert!(rel_close(kp.p1.y, f.y_front, TOL), "case {case}: front midpoint height");
        assert!(rel_close(kp.p2.x, f.half_width, TOL), "case {case}: right midpoint offset");
        assert!(rel_close(kp.p2.y, f.y_side, TOL), "case {case}: right midpoint height");
        assert!(rel_close(kp.p4.x, -f.half_width, TOL), "case {case}: left midpoint offset");
        assert!(rel_close(kp.p4.y, f.y_side, TOL), "case {case}: left midpoint height");
        assert!(rel_close(kp.p3.y, f.y_rear, TOL), "case {case}: rear midpoint height");
        assert!(rel_close(kp.pa.x, -f.half_width, TOL), "case {case}: restricted corner a");
        assert!(rel_close(kp.pb.x, f.half_width, TOL), "case {case}: restricted corner b");
        assert!(rel_close(kp.pa.y, f.y_restricted, TOL), "case {case}: restricted floor");
        assert!(rel_close(kp.pb.y, f.y_restricted, TOL), "case {case}: restricted floor");

        assert!(
            !rel_close(kp.p3.y, -robot.wrfb, 1e-2),
            "case {case}: a full body depth below center would be wrong"
        );
    }
    println!("[acceptance] A2 PASS: center-placement key points match the recomputed closed forms (tol 1e-12)");
}

#[test]
fn a2_rear_midpoint_sits_at_half_depth_not_full_depth() {
    let (robot, human) = oracle::baseline::spec();
    let l = build_layout(&robot, &human, SensorModel::FourSideCenter).unwrap();
    let y3 = l.key_points.p3.y;
    assert!(rel_close(y3, -0.5 * robot.wrfb, TOL), "rear midpoint at half the body depth");
    assert!(
        (y3 - (-robot.wrfb)).abs() > 0.4 * robot.wrfb,
        "the unsimplified coordinate chain puts the rear midpoint at -wrfb/2; \
         a layout satisfying -wrfb instead would break rear alignment"
    );
    println!("[acceptance] A2 PASS: rear midpoint sits at half the body depth, not a full depth");
}

#[test]
fn a3_baseline_layout_matches_hand_evaluated_constants() {
    use oracle::baseline;
    let (robot, human) = baseline::spec();

    let e = compute_expansion(&robot, &human).unwrap();
    assert!(rel_close(e.p, baseline::P, TOL), "expansion factor");

    for model in [SensorModel::FourCorner, SensorModel::FourSideCenter] {
        let l = build_layout(&robot, &human, model).unwrap();
        let r = &l.restricted_rect;
        assert!(rel_close(r.xmin, -baseline::X_MAX, TOL), "restricted left");
        assert!(rel_close(r.xmax, baseline::X_MAX, TOL), "restricted right");
        assert!(rel_close(r.ymin, baseline::Y_RESTRICTED_FLOOR, TOL), "restricted floor");
        assert!(rel_close(r.ymax, baseline::Y_REAR, TOL), "restricted ceiling");
    }

    let corner = build_layout(&robot, &human, SensorModel::FourCorner).unwrap();
    assert!(rel_close(corner.key_points.p1.x, -baseline::X_MAX, TOL), "corner first key point x");
    assert!(rel_close(corner.key_points.p1.y, baseline::Y_FRONT, TOL), "corner first key point y");

    let center = build_layout(&robot, &human, SensorModel::FourSideCenter).unwrap();
    assert_eq!(center.key_points.p1.x, 0.0, "center first key point x");
    assert!(rel_close(center.key_points.p1.y, baseline::Y_FRONT, TOL), "center first key point y");

    println!("[acceptance] A3 PASS: baseline fixture matches the hand-evaluated constants (tol 1e-12)");
}

#[test]
fn a4_rear_alignment_and_mirror_symmetry_hold_on_random_layouts() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for case in 0..1000 {
        let (robot, human) = random_pair(&mut rng);
        for model in [SensorModel::FourCorner, SensorModel::FourSideCenter] {
            let l = build_layout(&robot, &human, model).unwrap();
            let report = validate_layout(&l);
            assert!(report.ok(), "case {case} {model:?}: {report:?}");
            assert_eq!(l.virtual_rect.ymin, l.real_rect.ymin, "case {case} {model:?}: rear edges");
            assert_eq!(l.restricted_rect.ymax, l.virtual_rect.ymin, "case {case} {model:?}: restricted sits flush behind");
            assert_eq!(l.virtual_rect.xmin, -l.virtual_rect.xmax, "case {case} {model:?}: virtual frame centered");
            assert_eq!(l.real_rect.xmin, -l.real_rect.xmax, "case {case} {model:?}: real body centered");
        }
    }
    println!("[acceptance] A4 PASS: rear alignment and mirror symmetry hold on 1000 random layouts, both placements");
}

fn check_corner_grid(layout: &Layout, points: &[Point2]) {
    for &q in points {
        let candidates = oracle::corner_candidates(layout, q);
        assert_eq!(candidates.len(), 1, "{q:?} matched {candidates:?}");
        assert_eq!(classify_corner(layout, q), candidates[0], "disagreement at {q:?}");
    }
}

fn check_center_grid(layout: &Layout, points: &[Point2]) {
    for &q in points {
        let candidates = oracle::center_candidates(layout, q);
        assert_eq!(candidates.len(), 1, "{q:?} matched {candidates:?}");
        assert_eq!(classify_center(layout, q), candidates[0], "disagreement at {q:?}");
    }
}

fn grid(n: usize) -> Vec<Point2> {
    let mut points = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        for j in 0..=n {
            points.push(Point2::new(
                -3.0 + 6.0 * (i as f64) / (n as f64),
                -3.0 + 6.0 * (j as f64) / (n as f64),
            ));
        }
    }
    points
}

fn dyadic_spec() -> (RobotSpec, HumanSpec) {
    (
        RobotSpec {
            wrfb: 0.5,
            wrlr: 0.5,
            xi: 0.5,
            epsilon: 0.5,
            k2_threshold: 1.2,
            p_min: 1.2,
            p_max: 2.0,
        },
        HumanSpec { whfb: 0.25, whlr: 0.5 },
    )
}

#[test]
fn a5_classifiers_agree_with_brute_force_predicates_everywhere() {
    let (robot, human) = oracle::baseline::spec();
    let corner = build_layout(&robot, &human, SensorModel::FourCorner).unwrap();
    let center = build_layout(&robot, &human, SensorModel::FourSideCenter).unwrap();

    let points = grid(200);
    check_corner_grid(&corner, &points);
    check_center_grid(&center, &points);

    // Exact boundary hits, built from the layout's own coordinates so no
    // rounding can pull them off the rays.
    let r = &corner.virtual_rect;
    let corners = [
        (Point2::new(r.xmin, r.ymax), Corner::FrontLeft),
        (Point2::new(r.xmax, r.ymax), Corner::FrontRight),
        (Point2::new(r.xmin, r.ymin), Corner::BackLeft),
        (Point2::new(r.xmax, r.ymin), Corner::BackRight),
    ];
    for (q, c) in corners {
        assert_eq!(classify_corner(&corner, q), CornerRegion::OnDiagonal(c));
        assert_eq!(oracle::corner_candidates(&corner, q), vec![CornerRegion::OnDiagonal(c)]);
        assert_eq!(classify_center(&center, q), CenterRegion::Interior);
        assert_eq!(oracle::center_candidates(&center, q), vec![CenterRegion::Interior]);
    }
    let diag_r = Point2::new(r.xmax + 0.25, r.ymax + 0.25);
    let diag_l = Point2::new(-(r.xmax + 0.25), r.ymax + 0.25);
    assert_eq!(classify_corner(&corner, diag_r), CornerRegion::OnDiagonal(Corner::FrontRight));
    assert_eq!(classify_corner(&corner, diag_l), CornerRegion::OnDiagonal(Corner::FrontLeft));
    check_corner_grid(&corner, &[diag_r, diag_l]);

    let rays = [
        Point2::new(r.xmax, r.ymax + 1.0),
        Point2::new(r.xmin, r.ymin - 1.0),
        Point2::new(r.xmax + 1.0, r.ymax),
        Point2::new(r.xmin - 1.0, r.ymin),
    ];
    for q in rays {
        assert!(matches!(classify_center(&center, q), CenterRegion::OnBoundary(_)));
    }
    check_center_grid(&center, &rays);

    // Second sweep on a layout whose edges land exactly on a power-of-two
    // grid, so edge lines, rays, and both diagonal families are hit exactly.
    let (robot, human) = dyadic_spec();
    let corner = build_layout(&robot, &human, SensorModel::FourCorner).unwrap();
    let center = build_layout(&robot, &human, SensorModel::FourSideCenter).unwrap();
    let points = grid(192);
    check_corner_grid(&corner, &points);
    check_center_grid(&center, &points);

    println!("[acceptance] A5 PASS: both classifiers agree with the brute-force predicates on every grid point, exactly one label each");
}

#[test]
fn a6_unit_multiplicity_follows_the_region_kind() {
    let (robot, human) = oracle::baseline::spec();
    let corner = build_layout(&robot, &human, SensorModel::FourCorner).unwrap();
    let center = build_layout(&robot, &human, SensorModel::FourSideCenter).unwrap();

    let mut exterior = 0usize;
    for q in grid(200) {
        match oracle::corner_candidates(&corner, q)[0] {
            CornerRegion::Interior | CornerRegion::OnDiagonal(_) => {}
            _ => {
                let a = assign(&corner, q);
                assert_eq!(a.units.len(), 2, "{q:?}: two units watch every wedge");
                assert_eq!(a.groups().len(), 2, "{q:?}: from two distinct corner groups");
                assert!(a.double_detected, "{q:?}");
                exterior += 1;
            }
        }
        match oracle::center_candidates(&center, q)[0] {
            CenterRegion::Interior | CenterRegion::OnBoundary(_) => {}
            region => {
                let a = assign(&center, q);
                if region.is_overlap() {
                    assert_eq!(a.units.len(), 4, "{q:?}: overlap quadrants get both sides' pairs");
                    assert_eq!(a.groups().len(), 2, "{q:?}");
                    assert!(a.double_detected, "{q:?}");
                } else {
                    assert_eq!(a.units.len(), 2, "{q:?}: strips get a single side's pair");
                    assert_eq!(a.groups().len(), 1, "{q:?}");
                    assert!(!a.double_detected, "{q:?}");
                }
            }
        }
    }
    assert!(exterior > 30_000, "the window is mostly exterior");
    println!("[acceptance] A6 PASS: unit multiplicity follows the region kind on every exterior grid point");
}

#[test]
fn a7_center_model_overlap_area_exceeds_separate_area() {
    let (robot, human) = oracle::baseline::spec();
    let layout = build_layout(&robot, &human, SensorModel::FourSideCenter).unwrap();
    let window = Rect::new(-3.0, 3.0, -3.0, 3.0).unwrap();
    let grid = coverage_map(&layout, &window, 0.05).unwrap();
    let s = &grid.summary;
    assert!(
        s.overlap_area > s.separate_area,
        "overlap {} vs separate {}",
        s.overlap_area,
        s.separate_area
    );
    let ratio = s.ratio.unwrap();
    println!("[acceptance] A7 PASS: overlap area {} exceeds separate area {} (ratio {ratio:.3}) at window 6 m, resolution 0.05 m",
        s.overlap_area, s.separate_area);
}

const LOCK_BREAK_SCENARIO: &str = r#"{
  "config": {
    "robot": {"wrfb": 0.6, "wrlr": 0.5, "xi": 0.5, "epsilon": 0.8},
    "human": {"whfb": 0.3, "whlr": 0.5},
    "model": "corner"
  },
  "trajectory": [[0.0, 0.0, -0.45], [1.0, 0.0, 1.0]]
}"#;

fn run_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffsim"))
        .args(args)
        .output()
        .expect("failed to spawn ffsim")
}

#[test]
fn a8_lock_break_replay_is_byte_identical_and_reports_one_transition() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = dir.path().join("scenario.json");
    fs::write(&scenario, LOCK_BREAK_SCENARIO).unwrap();

    let mut outputs = Vec::new();
    for run in 0..2 {
        let json = dir.path().join(format!("run{run}.json"));
        let csv = dir.path().join(format!("run{run}.csv"));
        let out = run_bin(&[
            "simulate",
            scenario.to_str().unwrap(),
            "--out",
            json.to_str().unwrap(),
            "--csv",
            csv.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        outputs.push((out.stdout, fs::read(&json).unwrap(), fs::read(&csv).unwrap()));
    }
    assert_eq!(outputs[0].0, outputs[1].0, "stdout differs between runs");
    assert_eq!(outputs[0].1, outputs[1].1, "JSON file differs between runs");
    assert_eq!(outputs[0].2, outputs[1].2, "CSV file differs between runs");

    let v: serde_json::Value = serde_json::from_slice(&outputs[0].1).unwrap();
    assert_eq!(
        v["transitions"],
        serde_json::json!([{"t": 1.0, "from": "locked", "to": "disengaged"}])
    );
    println!("[acceptance] A8 PASS: lock-break replay is byte-identical and reports the single locked-to-disengaged transition at t=1");
}

#[test]
fn a9_cli_distinguishes_input_domain_and_io_failures() {
    let dir = tempfile::tempdir().unwrap();

    let malformed = dir.path().join("broken.json");
    fs::write(&malformed, "{ this is not json").unwrap();
    let out = run_bin(&["expand", malformed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "malformed JSON is an input error");

    let zero_width = dir.path().join("zero.json");
    fs::write(
        &zero_width,
        r#"{
          "robot": {"wrfb": 0.6, "wrlr": 0.0, "xi": 0.5, "epsilon": 0.8},
          "human": {"whfb": 0.3, "whlr": 0.5},
          "model": "corner"
        }"#,
    )
    .unwrap();
    let out = run_bin(&["expand", zero_width.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3), "zero width is a domain error");

    let good = dir.path().join("good.json");
    fs::write(
        &good,
        r#"{
          "robot": {"wrfb": 0.6, "wrlr": 0.5, "xi": 0.5, "epsilon": 0.8},
          "human": {"whfb": 0.3, "whlr": 0.5},
          "model": "corner"
        }"#,
    )
    .unwrap();
    let out = run_bin(&["render", good.to_str().unwrap(), "--out", "/no/such/dir/fig.svg"]);
    assert_eq!(out.status.code(), Some(4), "unwritable output is an I/O error");

    println!("[acceptance] A9 PASS: exit codes separate input (2), domain (3), and I/O (4) failures");
}
