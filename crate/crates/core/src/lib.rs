//! Planar sensor-placement geometry for a front-following robot.
//!
//! A robot that walks ahead of a person has to watch the space behind and
//! around itself with laser range finders. This crate models the published
//! two-placement design in the plane: the robot's real footprint, a
//! proportionally expanded virtual frame that shares the real rear edge, a
//! restricted area hanging off that rear edge where the followed person is
//! expected to walk, and eight LRFs arranged either as pairs on the virtual
//! frame's four corners or as pairs on its four side midpoints.
//!
//! The modules build on each other:
//!
//! * [`expansion`] decides whether the virtual frame grows and by how much,
//!   from the robot/human width ratio.
//! * [`layout`] turns an expansion result into concrete rectangles, key
//!   points, and LRF mount positions.
//! * [`partition`] splits the plane around the virtual frame into regions,
//!   maps each region to the LRF units responsible for it, and tracks the
//!   lock state that ties the robot to the person behind it.
//! * [`simulation`] replays human trajectories against a layout and samples
//!   coverage grids for area statistics.
//!
//! Everything is deterministic: the same inputs produce bitwise-identical
//! outputs, with no randomness, no time dependence, and no global state.

pub mod error;
pub mod expansion;
pub mod geom;
pub mod layout;
pub mod partition;
pub mod simulation;

pub use error::{Error, Result};
pub use expansion::{compute_expansion, ExpansionResult, HumanSpec, RobotSpec};
pub use geom::{Point2, Rect};
pub use layout::{
    build_layout, center_layout, corner_layout, validate_layout, Corner, GroupId, KeyPoints,
    Layout, LrfUnit, SensorModel, ValidationReport, CENTER_GROUPS, CORNER_GROUPS,
};
pub use partition::{
    assign, classify_center, classify_corner, lock_state, Assignment, BoundaryRay, CenterRegion,
    CornerRegion, LockMode, LockState, RegionLabel, UnitId,
};
pub use simulation::{
    coverage_map, default_window, run_scenario, CoverageCell, CoverageGrid, CoverageSummary,
    LockTransition, Scenario, SimReport, SimSummary, StepRecord, TrajectorySample,
};
