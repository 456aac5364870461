use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{compute_expansion, ExpansionResult, HumanSpec, RobotSpec};
use crate::geom::{Point2, Rect};

/// Which of the two LRF placements a layout uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SensorModel {
    /// Paired LRFs at the four corners of the virtual frame.
    #[serde(rename = "corner")]
    FourCorner,
    /// Paired LRFs at the midpoints of the virtual frame's four sides.
    #[serde(rename = "center")]
    FourSideCenter,
}

/// Corners of the virtual frame, named from the robot's point of view.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Corner {
    FrontLeft,
    FrontRight,
    BackLeft,
    BackRight,
}

impl Corner {
    pub fn group(self) -> GroupId {
        match self {
            Corner::FrontLeft => GroupId::FrontLeftCorner,
            Corner::FrontRight => GroupId::FrontRightCorner,
            Corner::BackLeft => GroupId::BackLeftCorner,
            Corner::BackRight => GroupId::BackRightCorner,
        }
    }

    /// Counterpart across the forward axis.
    pub fn mirrored(self) -> Self {
        match self {
            Corner::FrontLeft => Corner::FrontRight,
            Corner::FrontRight => Corner::FrontLeft,
            Corner::BackLeft => Corner::BackRight,
            Corner::BackRight => Corner::BackLeft,
        }
    }
}

/// Identity of a colocated LRF pair. Corner groups belong to the four-corner
/// placement, side groups to the four-sided-center placement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupId {
    FrontLeftCorner,
    FrontRightCorner,
    BackLeftCorner,
    BackRightCorner,
    Front,
    Right,
    Back,
    Left,
}

impl GroupId {
    pub fn code(self) -> &'static str {
        match self {
            GroupId::FrontLeftCorner => "front_left_corner",
            GroupId::FrontRightCorner => "front_right_corner",
            GroupId::BackLeftCorner => "back_left_corner",
            GroupId::BackRightCorner => "back_right_corner",
            GroupId::Front => "front",
            GroupId::Right => "right",
            GroupId::Back => "back",
            GroupId::Left => "left",
        }
    }

    /// Counterpart across the forward axis.
    pub fn mirrored(self) -> Self {
        match self {
            GroupId::FrontLeftCorner => GroupId::FrontRightCorner,
            GroupId::FrontRightCorner => GroupId::FrontLeftCorner,
            GroupId::BackLeftCorner => GroupId::BackRightCorner,
            GroupId::BackRightCorner => GroupId::BackLeftCorner,
            GroupId::Right => GroupId::Left,
            GroupId::Left => GroupId::Right,
            other => other,
        }
    }
}

impl std::fmt::Display for GroupId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.code())
    }
}

/// Group order used for unit vectors, CSV rows, and tie-break-free iteration.
pub const CORNER_GROUPS: [GroupId; 4] = [
    GroupId::FrontLeftCorner,
    GroupId::FrontRightCorner,
    GroupId::BackLeftCorner,
    GroupId::BackRightCorner,
];

pub const CENTER_GROUPS: [GroupId; 4] =
    [GroupId::Front, GroupId::Right, GroupId::Back, GroupId::Left];

/// One laser range finder. Each group holds two, colocated in this planar
/// model; `unit` is 0 or 1 within the group. `position` is on the virtual
/// frame, `real_position` the matching mount point on the robot body.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LrfUnit {
    pub group: GroupId,
    pub unit: u8,
    pub position: Point2,
    pub real_position: Point2,
}

impl LrfUnit {
    /// Short name for the virtual mount point, e.g. `Vllf1` (corner model,
    /// left-front pair, first unit) or `Vlr2` (center model, right side).
    pub fn label(&self) -> String {
        let stem = match self.group {
            GroupId::FrontLeftCorner => "llf",
            GroupId::FrontRightCorner => "lrf",
            GroupId::BackLeftCorner => "llb",
            GroupId::BackRightCorner => "lrb",
            GroupId::Front => "lf",
            GroupId::Right => "lr",
            GroupId::Back => "lb",
            GroupId::Left => "ll",
        };
        format!("V{}{}", stem, self.unit + 1)
    }
}

/// The six named construction points of a layout.
///
/// For the corner placement P1..P4 are the virtual frame's corners
/// (front-left, front-right, back-left, back-right) and Pa/Pb the rear
/// corners of the restricted area. For the center placement P1..P4 are the
/// side midpoints (front, right, back, left) and Pa/Pb again close the
/// restricted area.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KeyPoints {
    #[serde(rename = "P1")]
    pub p1: Point2,
    #[serde(rename = "P2")]
    pub p2: Point2,
    #[serde(rename = "P3")]
    pub p3: Point2,
    #[serde(rename = "P4")]
    pub p4: Point2,
    #[serde(rename = "Pa")]
    pub pa: Point2,
    #[serde(rename = "Pb")]
    pub pb: Point2,
}

impl KeyPoints {
    pub fn named(&self) -> [(&'static str, Point2); 6] {
        [
            ("P1", self.p1),
            ("P2", self.p2),
            ("P3", self.p3),
            ("P4", self.p4),
            ("Pa", self.pa),
            ("Pb", self.pb),
        ]
    }
}

/// A fully constructed sensor layout in the robot body frame.
///
/// The real footprint is centered on the origin. The virtual frame shares
/// the real rear edge and extends forward (and sideways when expanded);
/// `shift` is the Y offset of its center from the origin. The restricted
/// area hangs off the rear edge, virtual-frame wide and `wfb` deep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Layout {
    pub model: SensorModel,
    pub expansion: ExpansionResult,
    pub virtual_rect: Rect,
    pub real_rect: Rect,
    pub restricted_rect: Rect,
    pub lrf_units: Vec<LrfUnit>,
    pub shift: f64,
    pub key_points: KeyPoints,
}

impl Layout {
    pub fn units_of(&self, group: GroupId) -> impl Iterator<Item = &LrfUnit> {
        self.lrf_units.iter().filter(move |u| u.group == group)
    }
}

struct Frame {
    half_vwlr: f64,
    half_rlr: f64,
    y_front: f64,
    y_real_front: f64,
    y_rear: f64,
    y_restricted: f64,
    shift: f64,
    virtual_rect: Rect,
    real_rect: Rect,
    restricted_rect: Rect,
}

/// Shared rectangle construction. Every named coordinate is computed once so
/// that points meant to coincide (rect corners, key points, unit positions)
/// are bitwise equal, which the exact boundary classification relies on.
fn frame(robot: &RobotSpec, exp: &ExpansionResult) -> Result<Frame> {
    check_expansion(robot, exp)?;
    let half_vwlr = 0.5 * exp.vwrlr;
    let half_rlr = 0.5 * robot.wrlr;
    let y_rear = -0.5 * robot.wrfb;
    let y_real_front = 0.5 * robot.wrfb;
    let y_front = exp.vwrfb - 0.5 * robot.wrfb;
    let y_restricted = y_rear - exp.wfb;
    let shift = 0.5 * (exp.vwrfb - robot.wrfb);
    Ok(Frame {
        half_vwlr,
        half_rlr,
        y_front,
        y_real_front,
        y_rear,
        y_restricted,
        shift,
        virtual_rect: Rect::new(-half_vwlr, half_vwlr, y_rear, y_front)?,
        real_rect: Rect::new(-half_rlr, half_rlr, y_rear, y_real_front)?,
        restricted_rect: Rect::new(-half_vwlr, half_vwlr, y_restricted, y_rear)?,
    })
}

/// Rejects an expansion result that was not produced from these robot
/// parameters, so layouts cannot be built from mismatched halves.
fn check_expansion(robot: &RobotSpec, exp: &ExpansionResult) -> Result<()> {
    robot.validate()?;
    let tol = 1e-9;
    let bad = |what: String| Err(Error::InvalidExpansion(what));
    if !exp.p.is_finite() || exp.p <= 0.0 {
        return bad(format!("factor p = {} is not usable", exp.p));
    }
    if exp.expanded {
        if exp.p < robot.p_min - tol || exp.p > robot.p_max + tol {
            return bad(format!("factor p = {} is outside [{}, {}]", exp.p, robot.p_min, robot.p_max));
        }
    } else if exp.p != 1.0 {
        return bad(format!("unexpanded result must have p = 1, got {}", exp.p));
    }
    let checks = [
        ("vwrfb", exp.vwrfb, exp.p * robot.wrfb),
        ("vwrlr", exp.vwrlr, exp.p * robot.wrlr),
        ("wlr", exp.wlr, exp.vwrlr),
        ("wfb", exp.wfb, robot.epsilon * exp.wlr),
    ];
    for (name, got, want) in checks {
        if !got.is_finite() || (got - want).abs() > tol {
            return bad(format!("{name} = {got} does not match {want} from the robot parameters"));
        }
    }
    Ok(())
}

/// Places paired LRFs at the four corners of the virtual frame.
///
/// P1..P4 are the front-left, front-right, back-left, and back-right corners;
/// Pa/Pb close the restricted area behind the rear edge. Real mount points
/// are the matching corners of the robot body.
pub fn corner_layout(robot: &RobotSpec, exp: &ExpansionResult) -> Result<Layout> {
    let f = frame(robot, exp)?;
    let key_points = KeyPoints {
        p1: Point2::new(-f.half_vwlr, f.y_front),
        p2: Point2::new(f.half_vwlr, f.y_front),
        p3: Point2::new(-f.half_vwlr, f.y_rear),
        p4: Point2::new(f.half_vwlr, f.y_rear),
        pa: Point2::new(-f.half_vwlr, f.y_restricted),
        pb: Point2::new(f.half_vwlr, f.y_restricted),
    };
    let mounts = [
        (GroupId::FrontLeftCorner, key_points.p1, Point2::new(-f.half_rlr, f.y_real_front)),
        (GroupId::FrontRightCorner, key_points.p2, Point2::new(f.half_rlr, f.y_real_front)),
        (GroupId::BackLeftCorner, key_points.p3, Point2::new(-f.half_rlr, f.y_rear)),
        (GroupId::BackRightCorner, key_points.p4, Point2::new(f.half_rlr, f.y_rear)),
    ];
    Ok(assemble(SensorModel::FourCorner, robot, exp, f, key_points, &mounts))
}

/// Places paired LRFs at the midpoints of the virtual frame's sides.
///
/// P1..P4 are the front, right, back, and left midpoints; the side midpoints
/// sit at the shifted center height. Pa/Pb close the restricted area.
pub fn center_layout(robot: &RobotSpec, exp: &ExpansionResult) -> Result<Layout> {
    let f = frame(robot, exp)?;
    let key_points = KeyPoints {
        p1: Point2::new(0.0, f.y_front),
        p2: Point2::new(f.half_vwlr, f.shift),
        p3: Point2::new(0.0, f.y_rear),
        p4: Point2::new(-f.half_vwlr, f.shift),
        pa: Point2::new(-f.half_vwlr, f.y_restricted),
        pb: Point2::new(f.half_vwlr, f.y_restricted),
    };
    let mounts = [
        (GroupId::Front, key_points.p1, Point2::new(0.0, f.y_real_front)),
        (GroupId::Right, key_points.p2, Point2::new(f.half_rlr, 0.0)),
        (GroupId::Back, key_points.p3, Point2::new(0.0, f.y_rear)),
        (GroupId::Left, key_points.p4, Point2::new(-f.half_rlr, 0.0)),
    ];
    Ok(assemble(SensorModel::FourSideCenter, robot, exp, f, key_points, &mounts))
}

fn assemble(
    model: SensorModel,
    _robot: &RobotSpec,
    exp: &ExpansionResult,
    f: Frame,
    key_points: KeyPoints,
    mounts: &[(GroupId, Point2, Point2); 4],
) -> Layout {
    let mut lrf_units = Vec::with_capacity(8);
    for &(group, position, real_position) in mounts {
        for unit in 0..2u8 {
            lrf_units.push(LrfUnit { group, unit, position, real_position });
        }
    }
    Layout {
        model,
        expansion: *exp,
        virtual_rect: f.virtual_rect,
        real_rect: f.real_rect,
        restricted_rect: f.restricted_rect,
        lrf_units,
        shift: f.shift,
        key_points,
    }
}

/// Expansion and placement in one step.
pub fn build_layout(robot: &RobotSpec, human: &HumanSpec, model: SensorModel) -> Result<Layout> {
    let exp = compute_expansion(robot, human)?;
    match model {
        SensorModel::FourCorner => corner_layout(robot, &exp),
        SensorModel::FourSideCenter => center_layout(robot, &exp),
    }
}

/// Structural re-check of a finished layout. Each flag is an independent
/// invariant; `ok()` is their conjunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Virtual frame, real footprint, and restricted area share the rear edge
    /// line: virtual and real have equal ymin, restricted ends exactly there.
    pub rear_edges_aligned: bool,
    /// The real footprint never leaves the virtual frame.
    pub real_inside_virtual: bool,
    /// The restricted area is virtual-frame wide and sits directly behind.
    pub restricted_behind_real: bool,
    /// Key points and LRF mounts are symmetric across the forward axis.
    pub mirror_symmetric: bool,
    /// Every group's two units are colocated on the key point the group owns.
    pub units_at_key_points: bool,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.rear_edges_aligned
            && self.real_inside_virtual
            && self.restricted_behind_real
            && self.mirror_symmetric
            && self.units_at_key_points
    }
}

fn group_key_point(layout: &Layout, group: GroupId) -> Point2 {
    let kp = &layout.key_points;
    match group {
        GroupId::FrontLeftCorner | GroupId::Front => kp.p1,
        GroupId::FrontRightCorner | GroupId::Right => kp.p2,
        GroupId::BackLeftCorner | GroupId::Back => kp.p3,
        GroupId::BackRightCorner | GroupId::Left => kp.p4,
    }
}

/// Re-derives the layout invariants from the finished artifact alone.
pub fn validate_layout(layout: &Layout) -> ValidationReport {
    let tol = 1e-9;
    let close = |a: f64, b: f64| (a - b).abs() <= tol;
    let close_pt = |a: Point2, b: Point2| close(a.x, b.x) && close(a.y, b.y);

    let rear_edges_aligned = close(layout.virtual_rect.ymin, layout.real_rect.ymin)
        && close(layout.restricted_rect.ymax, layout.real_rect.ymin);

    let real_inside_virtual = layout.virtual_rect.xmin <= layout.real_rect.xmin + tol
        && layout.real_rect.xmax <= layout.virtual_rect.xmax + tol
        && layout.virtual_rect.ymin <= layout.real_rect.ymin + tol
        && layout.real_rect.ymax <= layout.virtual_rect.ymax + tol;

    let restricted_behind_real = close(layout.restricted_rect.xmin, layout.virtual_rect.xmin)
        && close(layout.restricted_rect.xmax, layout.virtual_rect.xmax)
        && close(layout.restricted_rect.height(), layout.expansion.wfb)
        && layout.restricted_rect.ymax <= layout.real_rect.ymin + tol;

    let points: Vec<Point2> = layout.key_points.named().iter().map(|&(_, p)| p).collect();
    let mut mirror_symmetric = points
        .iter()
        .all(|p| points.iter().any(|q| close_pt(*q, p.mirrored_x())));
    mirror_symmetric &= layout.lrf_units.iter().all(|u| {
        layout.lrf_units.iter().any(|v| {
            v.group == u.group.mirrored()
                && v.unit == u.unit
                && close_pt(v.position, u.position.mirrored_x())
                && close_pt(v.real_position, u.real_position.mirrored_x())
        })
    });

    let units_at_key_points = layout.lrf_units.len() == 8
        && layout.lrf_units.iter().all(|u| {
            close_pt(u.position, group_key_point(layout, u.group))
                && layout.virtual_rect.contains(u.position)
        })
        && {
            let groups = match layout.model {
                SensorModel::FourCorner => CORNER_GROUPS,
                SensorModel::FourSideCenter => CENTER_GROUPS,
            };
            groups.iter().all(|&g| layout.units_of(g).count() == 2)
        };

    ValidationReport {
        rear_edges_aligned,
        real_inside_virtual,
        restricted_behind_real,
        mirror_symmetric,
        units_at_key_points,
    }
}
