use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{HumanSpec, RobotSpec};
use crate::geom::{Point2, Rect};
use crate::layout::{build_layout, GroupId, Layout, SensorModel};
use crate::partition::{assign, lock_state, LockMode, LockState, RegionLabel};

/// Largest cell count `coverage_map` will allocate.
const MAX_GRID_CELLS: usize = 10_000_000;

/// One timestamped human position in the robot body frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectorySample {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

/// A replayable situation: one robot/human pairing, one sensor model, one
/// lock rule, and the human's path through the body frame.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub robot: RobotSpec,
    pub human: HumanSpec,
    pub model: SensorModel,
    #[serde(default)]
    pub lock_mode: LockMode,
    pub trajectory: Vec<TrajectorySample>,
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        self.robot.validate()?;
        self.human.validate()?;
        if self.trajectory.is_empty() {
            return Err(Error::InvalidScenario("trajectory is empty".into()));
        }
        for (i, s) in self.trajectory.iter().enumerate() {
            if !(s.t.is_finite() && s.x.is_finite() && s.y.is_finite()) {
                return Err(Error::InvalidScenario(format!(
                    "sample {i} has a non-finite value: t={}, x={}, y={}",
                    s.t, s.x, s.y
                )));
            }
            if i > 0 && s.t <= self.trajectory[i - 1].t {
                return Err(Error::InvalidScenario(format!(
                    "timestamps must be strictly increasing, sample {i} has t={} after t={}",
                    s.t,
                    self.trajectory[i - 1].t
                )));
            }
        }
        Ok(())
    }
}

/// Snapshot of one trajectory sample after classification and lock testing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StepRecord {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub region: RegionLabel,
    pub lock: LockState,
    pub groups: Vec<GroupId>,
    #[serde(rename = "double")]
    pub double_detected: bool,
}

/// A lock flip between two consecutive samples, stamped with the later
/// sample's time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LockTransition {
    pub t: f64,
    pub from: LockState,
    pub to: LockState,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimSummary {
    pub steps: usize,
    pub locked_fraction: f64,
    pub transitions: usize,
}

/// Full result of replaying a scenario.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimReport {
    pub records: Vec<StepRecord>,
    pub transitions: Vec<LockTransition>,
    pub summary: SimSummary,
}

fn human_rect(human: &HumanSpec, x: f64, y: f64) -> Rect {
    Rect {
        xmin: x - 0.5 * human.whlr,
        xmax: x + 0.5 * human.whlr,
        ymin: y - 0.5 * human.whfb,
        ymax: y + 0.5 * human.whfb,
    }
}

/// Replays a trajectory step by step: builds the layout once, then per
/// sample classifies the human's center point, assigns LRF units, and tests
/// the lock against the human rectangle centered on the sample. Input order
/// is the only order; the result is deterministic for equal inputs.
pub fn run_scenario(scenario: &Scenario) -> Result<SimReport> {
    scenario.validate()?;
    let layout = build_layout(&scenario.robot, &scenario.human, scenario.model)?;

    let mut records = Vec::with_capacity(scenario.trajectory.len());
    let mut transitions = Vec::new();
    let mut locked_steps = 0usize;
    let mut prev_lock: Option<LockState> = None;

    for s in &scenario.trajectory {
        let a = assign(&layout, Point2::new(s.x, s.y));
        let lock = lock_state(&layout, &human_rect(&scenario.human, s.x, s.y), scenario.lock_mode);
        if lock == LockState::Locked {
            locked_steps += 1;
        }
        if let Some(prev) = prev_lock {
            if prev != lock {
                transitions.push(LockTransition { t: s.t, from: prev, to: lock });
            }
        }
        prev_lock = Some(lock);
        records.push(StepRecord {
            t: s.t,
            x: s.x,
            y: s.y,
            region: a.region,
            lock,
            groups: a.groups(),
            double_detected: a.double_detected,
        });
    }

    let steps = records.len();
    let summary = SimSummary {
        steps,
        locked_fraction: locked_steps as f64 / steps as f64,
        transitions: transitions.len(),
    };
    Ok(SimReport { records, transitions, summary })
}

/// One sampled grid cell, identified by its center point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoverageCell {
    pub x: f64,
    pub y: f64,
    pub region: RegionLabel,
    /// Number of distinct LRF groups watching the cell center (0 inside the
    /// virtual frame, 1 in single-group regions, 2 in double-covered ones).
    pub multiplicity: u8,
}

/// Count- and area-based totals of a coverage grid. Areas are
/// `cells * resolution^2`, so the three buckets partition the sampled grid
/// exactly. `ratio` is overlap over separate, absent when nothing is
/// single-covered.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoverageSummary {
    pub interior_cells: usize,
    pub separate_cells: usize,
    pub overlap_cells: usize,
    pub interior_area: f64,
    pub separate_area: f64,
    pub overlap_area: f64,
    pub ratio: Option<f64>,
}

/// A rectangular window sampled at cell centers. Cells are stored row-major
/// from the bottom row (ymin side), x fastest.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverageGrid {
    pub window: Rect,
    pub resolution: f64,
    pub nx: usize,
    pub ny: usize,
    pub cells: Vec<CoverageCell>,
    pub summary: CoverageSummary,
}

/// Samples the window on a regular grid and classifies every cell center.
///
/// The grid spans `ceil(extent / resolution)` cells per axis, so it covers
/// the whole window and may overhang when the resolution does not divide the
/// window exactly. Multiplicity counts distinct groups, which makes the
/// summary model-agnostic: for the center placement, separate regions count
/// 1 and overlap regions 2; for the corner placement every off-diagonal
/// exterior point counts 2.
pub fn coverage_map(layout: &Layout, window: &Rect, resolution: f64) -> Result<CoverageGrid> {
    if !(resolution.is_finite() && resolution > 0.0) {
        return Err(Error::NonPositiveResolution(resolution));
    }
    let nx_f = (window.width() / resolution).ceil();
    let ny_f = (window.height() / resolution).ceil();
    if !(nx_f.is_finite() && ny_f.is_finite()) || nx_f * ny_f > MAX_GRID_CELLS as f64 {
        return Err(Error::GridTooLarge {
            nx: nx_f.min(usize::MAX as f64) as usize,
            ny: ny_f.min(usize::MAX as f64) as usize,
            max_cells: MAX_GRID_CELLS,
        });
    }
    let nx = nx_f as usize;
    let ny = ny_f as usize;
    if nx * ny < 4 {
        return Err(Error::ResolutionTooCoarse { nx, ny });
    }

    let mut cells = Vec::with_capacity(nx * ny);
    let (mut interior, mut separate, mut overlap) = (0usize, 0usize, 0usize);
    for iy in 0..ny {
        let y = window.ymin + (iy as f64 + 0.5) * resolution;
        for ix in 0..nx {
            let x = window.xmin + (ix as f64 + 0.5) * resolution;
            let a = assign(layout, Point2::new(x, y));
            let multiplicity = a.groups().len() as u8;
            match multiplicity {
                0 => interior += 1,
                1 => separate += 1,
                _ => overlap += 1,
            }
            cells.push(CoverageCell { x, y, region: a.region, multiplicity });
        }
    }

    let cell_area = resolution * resolution;
    let separate_area = separate as f64 * cell_area;
    let overlap_area = overlap as f64 * cell_area;
    let summary = CoverageSummary {
        interior_cells: interior,
        separate_cells: separate,
        overlap_cells: overlap,
        interior_area: interior as f64 * cell_area,
        separate_area,
        overlap_area,
        ratio: (separate > 0).then(|| overlap_area / separate_area),
    };
    Ok(CoverageGrid { window: *window, resolution, nx, ny, cells, summary })
}

/// Square analysis window centered on the virtual frame, three times its
/// larger dimension in half-width. Large enough that every region shows up,
/// small enough that the frame stays legible.
pub fn default_window(layout: &Layout) -> Rect {
    let half = 3.0 * layout.expansion.vwrfb.max(layout.expansion.vwrlr);
    let c = layout.virtual_rect.center();
    Rect { xmin: c.x - half, xmax: c.x + half, ymin: c.y - half, ymax: c.y + half }
}
