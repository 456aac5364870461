use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point in the robot body frame. +Y is the robot's forward direction,
/// +X points to its right; units are meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Reflection across the robot's forward axis (x = 0).
    pub fn mirrored_x(self) -> Self {
        Self { x: -self.x, y: self.y }
    }
}

/// An axis-aligned rectangle with non-degenerate extents, in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Rect {
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Result<Self> {
        let r = Self { xmin, xmax, ymin, ymax };
        if ![xmin, xmax, ymin, ymax].iter().all(|v| v.is_finite()) {
            return Err(Error::DegenerateRect(format!("non-finite extent in {r:?}")));
        }
        if xmin >= xmax || ymin >= ymax {
            return Err(Error::DegenerateRect(format!(
                "extents must satisfy xmin < xmax and ymin < ymax, got {r:?}"
            )));
        }
        Ok(r)
    }

    /// Rectangle of the given width (along X) and height (along Y) centered
    /// at (cx, cy).
    pub fn centered(cx: f64, cy: f64, width: f64, height: f64) -> Result<Self> {
        Self::new(
            cx - 0.5 * width,
            cx + 0.5 * width,
            cy - 0.5 * height,
            cy + 0.5 * height,
        )
    }

    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }

    pub fn center(&self) -> Point2 {
        Point2::new(0.5 * (self.xmin + self.xmax), 0.5 * (self.ymin + self.ymax))
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    /// Closed-set membership: points on the edges count as inside.
    pub fn contains(&self, p: Point2) -> bool {
        self.xmin <= p.x && p.x <= self.xmax && self.ymin <= p.y && p.y <= self.ymax
    }

    /// Closed-set containment of another rectangle.
    pub fn contains_rect(&self, other: &Rect) -> bool {
        self.xmin <= other.xmin
            && other.xmax <= self.xmax
            && self.ymin <= other.ymin
            && other.ymax <= self.ymax
    }
}
