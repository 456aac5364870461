use serde::{Deserialize, Serialize};

use crate::geom::{Point2, Rect};
use crate::layout::{Corner, GroupId, Layout, SensorModel};

/// Region of the plane under the four-corner partition: four quadrant-like
/// areas split by the 45-degree diagonal rays leaving the virtual frame's
/// corners. Points exactly on a ray (corners included) get the ray's own
/// corner group instead of an area.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CornerRegion {
    Area1Front,
    Area2Right,
    Area3Back,
    Area4Left,
    OnDiagonal(Corner),
    Interior,
}

impl CornerRegion {
    pub fn code(self) -> String {
        match self {
            CornerRegion::Area1Front => "area1_front".into(),
            CornerRegion::Area2Right => "area2_right".into(),
            CornerRegion::Area3Back => "area3_back".into(),
            CornerRegion::Area4Left => "area4_left".into(),
            CornerRegion::OnDiagonal(c) => format!("on_diagonal_{}", corner_code(c)),
            CornerRegion::Interior => "interior".into(),
        }
    }

    pub fn mirrored(self) -> Self {
        match self {
            CornerRegion::Area2Right => CornerRegion::Area4Left,
            CornerRegion::Area4Left => CornerRegion::Area2Right,
            CornerRegion::OnDiagonal(c) => CornerRegion::OnDiagonal(c.mirrored()),
            other => other,
        }
    }
}

fn corner_code(c: Corner) -> &'static str {
    match c {
        Corner::FrontLeft => "front_left",
        Corner::FrontRight => "front_right",
        Corner::BackLeft => "back_left",
        Corner::BackRight => "back_right",
    }
}

/// The eight boundary rays of the eight-region partition: extensions of the
/// virtual frame's sides. Named corner-first: `FrontLeft` runs forward from
/// the front-left corner, `RightBack` runs rightward from the back-right
/// corner, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryRay {
    FrontLeft,
    FrontRight,
    RightFront,
    RightBack,
    BackRight,
    BackLeft,
    LeftBack,
    LeftFront,
}

impl BoundaryRay {
    pub fn code(self) -> &'static str {
        match self {
            BoundaryRay::FrontLeft => "front_left",
            BoundaryRay::FrontRight => "front_right",
            BoundaryRay::RightFront => "right_front",
            BoundaryRay::RightBack => "right_back",
            BoundaryRay::BackRight => "back_right",
            BoundaryRay::BackLeft => "back_left",
            BoundaryRay::LeftBack => "left_back",
            BoundaryRay::LeftFront => "left_front",
        }
    }

    /// The two side groups responsible on either flank of the ray, in
    /// canonical group order.
    pub fn groups(self) -> [GroupId; 2] {
        match self {
            BoundaryRay::FrontLeft | BoundaryRay::LeftFront => [GroupId::Front, GroupId::Left],
            BoundaryRay::FrontRight | BoundaryRay::RightFront => [GroupId::Front, GroupId::Right],
            BoundaryRay::RightBack | BoundaryRay::BackRight => [GroupId::Right, GroupId::Back],
            BoundaryRay::BackLeft | BoundaryRay::LeftBack => [GroupId::Back, GroupId::Left],
        }
    }

    pub fn mirrored(self) -> Self {
        match self {
            BoundaryRay::FrontLeft => BoundaryRay::FrontRight,
            BoundaryRay::FrontRight => BoundaryRay::FrontLeft,
            BoundaryRay::RightFront => BoundaryRay::LeftFront,
            BoundaryRay::RightBack => BoundaryRay::LeftBack,
            BoundaryRay::BackRight => BoundaryRay::BackLeft,
            BoundaryRay::BackLeft => BoundaryRay::BackRight,
            BoundaryRay::LeftBack => BoundaryRay::RightBack,
            BoundaryRay::LeftFront => BoundaryRay::RightFront,
        }
    }
}

/// Region of the plane under the eight-region partition, numbered clockwise
/// from straight ahead. Odd areas face one side (separate coverage), even
/// areas span two sides (overlap coverage). Points exactly on a side
/// extension are boundary cases owned by both flanking sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CenterRegion {
    Area1Front,
    Area2FrontRight,
    Area3Right,
    Area4BackRight,
    Area5Back,
    Area6BackLeft,
    Area7Left,
    Area8FrontLeft,
    OnBoundary(BoundaryRay),
    Interior,
}

impl CenterRegion {
    pub fn code(self) -> String {
        match self {
            CenterRegion::Area1Front => "area1_front".into(),
            CenterRegion::Area2FrontRight => "area2_front_right".into(),
            CenterRegion::Area3Right => "area3_right".into(),
            CenterRegion::Area4BackRight => "area4_back_right".into(),
            CenterRegion::Area5Back => "area5_back".into(),
            CenterRegion::Area6BackLeft => "area6_back_left".into(),
            CenterRegion::Area7Left => "area7_left".into(),
            CenterRegion::Area8FrontLeft => "area8_front_left".into(),
            CenterRegion::OnBoundary(r) => format!("on_boundary_{}", r.code()),
            CenterRegion::Interior => "interior".into(),
        }
    }

    /// True for the even-numbered two-sided areas and the boundary rays
    /// between them and their neighbors.
    pub fn is_overlap(self) -> bool {
        matches!(
            self,
            CenterRegion::Area2FrontRight
                | CenterRegion::Area4BackRight
                | CenterRegion::Area6BackLeft
                | CenterRegion::Area8FrontLeft
        )
    }

    pub fn mirrored(self) -> Self {
        match self {
            CenterRegion::Area2FrontRight => CenterRegion::Area8FrontLeft,
            CenterRegion::Area8FrontLeft => CenterRegion::Area2FrontRight,
            CenterRegion::Area3Right => CenterRegion::Area7Left,
            CenterRegion::Area7Left => CenterRegion::Area3Right,
            CenterRegion::Area4BackRight => CenterRegion::Area6BackLeft,
            CenterRegion::Area6BackLeft => CenterRegion::Area4BackRight,
            CenterRegion::OnBoundary(r) => CenterRegion::OnBoundary(r.mirrored()),
            other => other,
        }
    }
}

/// Model-tagged region label, serialized as a flat code string such as
/// `area2_right` or `on_boundary_left_front`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    Corner(CornerRegion),
    Center(CenterRegion),
}

impl RegionLabel {
    pub fn code(self) -> String {
        match self {
            RegionLabel::Corner(r) => r.code(),
            RegionLabel::Center(r) => r.code(),
        }
    }

    pub fn is_interior(self) -> bool {
        matches!(
            self,
            RegionLabel::Corner(CornerRegion::Interior) | RegionLabel::Center(CenterRegion::Interior)
        )
    }

    pub fn mirrored(self) -> Self {
        match self {
            RegionLabel::Corner(r) => RegionLabel::Corner(r.mirrored()),
            RegionLabel::Center(r) => RegionLabel::Center(r.mirrored()),
        }
    }
}

impl Serialize for RegionLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.code())
    }
}

impl std::fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.code())
    }
}

/// Classifies a point against a four-corner layout.
///
/// The exterior splits along the 45-degree rays leaving the virtual frame's
/// corners: a point belongs to the front or back area when its vertical
/// excess over the frame exceeds its horizontal excess, to a side area in
/// the opposite case, and to a diagonal when the two excesses tie exactly.
/// Comparisons are exact; no epsilon widens the rays. The frame itself
/// (boundary included) is interior, except the four corners, which lie on
/// their own diagonals.
pub fn classify_corner(layout: &Layout, point: Point2) -> CornerRegion {
    assert_eq!(layout.model, SensorModel::FourCorner, "layout is not a four-corner layout");
    let r = &layout.virtual_rect;

    if let Some(c) = corner_at(r, point) {
        return CornerRegion::OnDiagonal(c);
    }

    let dx = (r.xmin - point.x).max(point.x - r.xmax).max(0.0);
    let dy = (r.ymin - point.y).max(point.y - r.ymax).max(0.0);
    if dx == 0.0 && dy == 0.0 {
        return CornerRegion::Interior;
    }
    if dy > dx {
        if point.y > r.ymax {
            CornerRegion::Area1Front
        } else {
            CornerRegion::Area3Back
        }
    } else if dx > dy {
        if point.x > r.xmax {
            CornerRegion::Area2Right
        } else {
            CornerRegion::Area4Left
        }
    } else {
        CornerRegion::OnDiagonal(match (point.x > r.xmax, point.y > r.ymax) {
            (true, true) => Corner::FrontRight,
            (false, true) => Corner::FrontLeft,
            (true, false) => Corner::BackRight,
            (false, false) => Corner::BackLeft,
        })
    }
}

fn corner_at(r: &Rect, p: Point2) -> Option<Corner> {
    let on_x = p.x == r.xmin || p.x == r.xmax;
    let on_y = p.y == r.ymin || p.y == r.ymax;
    if on_x && on_y {
        Some(match (p.x == r.xmax, p.y == r.ymax) {
            (true, true) => Corner::FrontRight,
            (false, true) => Corner::FrontLeft,
            (true, false) => Corner::BackRight,
            (false, false) => Corner::BackLeft,
        })
    } else {
        None
    }
}

/// Classifies a point against a four-sided-center layout.
///
/// The exterior splits into eight regions by extending the virtual frame's
/// sides outward: four one-sided strips ahead of each side and four
/// two-sided corner regions between them. Points exactly on a side extension
/// (exact coordinate equality, no epsilon) are boundary cases shared by both
/// flanking sides. The frame itself, boundary included, is interior.
pub fn classify_center(layout: &Layout, point: Point2) -> CenterRegion {
    assert_eq!(layout.model, SensorModel::FourSideCenter, "layout is not a four-sided-center layout");
    let r = &layout.virtual_rect;
    if r.contains(point) {
        return CenterRegion::Interior;
    }

    let Point2 { x, y } = point;
    let front = y > r.ymax;
    let right = x > r.xmax;
    if x == r.xmin {
        return CenterRegion::OnBoundary(if front { BoundaryRay::FrontLeft } else { BoundaryRay::BackLeft });
    }
    if x == r.xmax {
        return CenterRegion::OnBoundary(if front { BoundaryRay::FrontRight } else { BoundaryRay::BackRight });
    }
    if y == r.ymax {
        return CenterRegion::OnBoundary(if right { BoundaryRay::RightFront } else { BoundaryRay::LeftFront });
    }
    if y == r.ymin {
        return CenterRegion::OnBoundary(if right { BoundaryRay::RightBack } else { BoundaryRay::LeftBack });
    }

    let sx = if x < r.xmin { -1 } else if x > r.xmax { 1 } else { 0 };
    let sy = if y < r.ymin { -1 } else if y > r.ymax { 1 } else { 0 };
    match (sx, sy) {
        (0, 1) => CenterRegion::Area1Front,
        (1, 1) => CenterRegion::Area2FrontRight,
        (1, 0) => CenterRegion::Area3Right,
        (1, -1) => CenterRegion::Area4BackRight,
        (0, -1) => CenterRegion::Area5Back,
        (-1, -1) => CenterRegion::Area6BackLeft,
        (-1, 0) => CenterRegion::Area7Left,
        (-1, 1) => CenterRegion::Area8FrontLeft,
        (0, 0) => unreachable!("contained points already returned Interior"),
        _ => unreachable!(),
    }
}

/// One LRF picked out of a layout by group and index within the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitId {
    pub group: GroupId,
    pub unit: u8,
}

/// Which units watch a point, and under which region label.
///
/// `units` is ordered by the layout's canonical group order, then unit index.
/// `double_detected` is true when at least two distinct groups see the point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Assignment {
    pub region: RegionLabel,
    pub units: Vec<UnitId>,
    pub double_detected: bool,
}

impl Assignment {
    /// Distinct groups in canonical order.
    pub fn groups(&self) -> Vec<GroupId> {
        let mut out = Vec::new();
        for u in &self.units {
            if !out.contains(&u.group) {
                out.push(u.group);
            }
        }
        out
    }
}

fn units_of_groups(groups: &[GroupId]) -> Vec<UnitId> {
    groups
        .iter()
        .flat_map(|&group| [UnitId { group, unit: 0 }, UnitId { group, unit: 1 }])
        .collect()
}

/// Maps a point to the LRF units responsible for it under the layout's model.
///
/// Four-corner: each area is watched by one unit from each of its two
/// flanking corner pairs (unit 0 for front/back areas, unit 1 for side
/// areas), so the eight units split evenly across the four areas; a diagonal
/// point falls to both units of its corner pair alone.
///
/// Four-sided-center: a one-sided area is watched by both units of that
/// side's pair; a two-sided area by all four units of the two adjacent
/// pairs; a boundary ray by the same four units of its two flanking sides.
pub fn assign(layout: &Layout, point: Point2) -> Assignment {
    match layout.model {
        SensorModel::FourCorner => {
            let region = classify_corner(layout, point);
            let units = match region {
                CornerRegion::Area1Front => vec![
                    UnitId { group: GroupId::FrontLeftCorner, unit: 0 },
                    UnitId { group: GroupId::FrontRightCorner, unit: 0 },
                ],
                CornerRegion::Area2Right => vec![
                    UnitId { group: GroupId::FrontRightCorner, unit: 1 },
                    UnitId { group: GroupId::BackRightCorner, unit: 1 },
                ],
                CornerRegion::Area3Back => vec![
                    UnitId { group: GroupId::BackLeftCorner, unit: 0 },
                    UnitId { group: GroupId::BackRightCorner, unit: 0 },
                ],
                CornerRegion::Area4Left => vec![
                    UnitId { group: GroupId::FrontLeftCorner, unit: 1 },
                    UnitId { group: GroupId::BackLeftCorner, unit: 1 },
                ],
                CornerRegion::OnDiagonal(c) => units_of_groups(&[c.group()]),
                CornerRegion::Interior => Vec::new(),
            };
            finish(RegionLabel::Corner(region), units)
        }
        SensorModel::FourSideCenter => {
            let region = classify_center(layout, point);
            let units = match region {
                CenterRegion::Area1Front => units_of_groups(&[GroupId::Front]),
                CenterRegion::Area2FrontRight => units_of_groups(&[GroupId::Front, GroupId::Right]),
                CenterRegion::Area3Right => units_of_groups(&[GroupId::Right]),
                CenterRegion::Area4BackRight => units_of_groups(&[GroupId::Right, GroupId::Back]),
                CenterRegion::Area5Back => units_of_groups(&[GroupId::Back]),
                CenterRegion::Area6BackLeft => units_of_groups(&[GroupId::Back, GroupId::Left]),
                CenterRegion::Area7Left => units_of_groups(&[GroupId::Left]),
                CenterRegion::Area8FrontLeft => units_of_groups(&[GroupId::Front, GroupId::Left]),
                CenterRegion::OnBoundary(ray) => units_of_groups(&ray.groups()),
                CenterRegion::Interior => Vec::new(),
            };
            finish(RegionLabel::Center(region), units)
        }
    }
}

fn finish(region: RegionLabel, units: Vec<UnitId>) -> Assignment {
    let mut groups: Vec<GroupId> = Vec::new();
    for u in &units {
        if !groups.contains(&u.group) {
            groups.push(u.group);
        }
    }
    Assignment { region, double_detected: groups.len() >= 2, units }
}

/// Whether the following lock is engaged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LockState {
    Locked,
    Disengaged,
}

impl LockState {
    pub fn code(self) -> &'static str {
        match self {
            LockState::Locked => "locked",
            LockState::Disengaged => "disengaged",
        }
    }
}

/// How the human's presence in the restricted area is judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LockMode {
    /// The whole human rectangle must fit inside the restricted area.
    #[default]
    Containment,
    /// Only the human rectangle's center must lie inside.
    CenterPoint,
}

/// Lock test against the layout's restricted area. Both modes treat the
/// restricted boundary as inside, so grazing contact still locks.
pub fn lock_state(layout: &Layout, human_rect: &Rect, mode: LockMode) -> LockState {
    let hit = match mode {
        LockMode::Containment => layout.restricted_rect.contains_rect(human_rect),
        LockMode::CenterPoint => layout.restricted_rect.contains(human_rect.center()),
    };
    if hit {
        LockState::Locked
    } else {
        LockState::Disengaged
    }
}
