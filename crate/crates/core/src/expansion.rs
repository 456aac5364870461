use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn default_k2_threshold() -> f64 {
    1.2
}

fn default_p_min() -> f64 {
    1.2
}

fn default_p_max() -> f64 {
    2.0
}

/// Physical footprint of the robot plus the tuning constants of the
/// scale-expansion rule. Dimensions are meters.
///
/// `wrfb` is the robot's front-back depth, `wrlr` its left-right width.
/// `xi` is the margin added on top of the width ratio when the virtual frame
/// is expanded, and `epsilon` scales the restricted area's depth off the
/// virtual width.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RobotSpec {
    pub wrfb: f64,
    pub wrlr: f64,
    pub xi: f64,
    pub epsilon: f64,
    /// Expansion triggers only while the robot/human width ratio stays at or
    /// below this value; a wider robot already sees past the human.
    #[serde(default = "default_k2_threshold")]
    pub k2_threshold: f64,
    #[serde(default = "default_p_min")]
    pub p_min: f64,
    #[serde(default = "default_p_max")]
    pub p_max: f64,
}

impl RobotSpec {
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("wrfb", self.wrfb),
            ("wrlr", self.wrlr),
            ("xi", self.xi),
            ("epsilon", self.epsilon),
            ("k2_threshold", self.k2_threshold),
            ("p_min", self.p_min),
            ("p_max", self.p_max),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::NonPositiveDimension { name, value });
            }
        }
        if self.p_min > self.p_max {
            return Err(Error::InvalidExpansion(format!(
                "p_min {} exceeds p_max {}",
                self.p_min, self.p_max
            )));
        }
        Ok(())
    }
}

/// Footprint of the human being followed, meters. `whfb` is front-back depth,
/// `whlr` left-right width.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HumanSpec {
    pub whfb: f64,
    pub whlr: f64,
}

impl HumanSpec {
    pub fn validate(&self) -> Result<()> {
        if self.whlr == 0.0 {
            return Err(Error::DegenerateHuman);
        }
        if !(self.whlr.is_finite() && self.whlr > 0.0) {
            return Err(Error::NonPositiveDimension { name: "whlr", value: self.whlr });
        }
        if !(self.whfb.is_finite() && self.whfb > 0.0) {
            return Err(Error::NonPositiveDimension { name: "whfb", value: self.whfb });
        }
        Ok(())
    }
}

/// Outcome of the scale-expansion rule.
///
/// `p` is the factor actually applied; when `expanded` is false the virtual
/// frame equals the real footprint and `p` is 1. `vwrfb`/`vwrlr` are the
/// virtual frame's depth and width, `wlr` the restricted area's width (always
/// the virtual width), and `wfb` its depth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpansionResult {
    pub p: f64,
    pub k1: f64,
    pub k2: f64,
    pub expanded: bool,
    pub clamped: bool,
    pub vwrfb: f64,
    pub vwrlr: f64,
    pub wfb: f64,
    pub wlr: f64,
}

/// Decides whether the virtual frame grows and by how much.
///
/// The depth ratio `k1 = wrfb/whfb` is reported for diagnostics; the decision
/// rides on the width ratio `k2 = wrlr/whlr`. While `k2 <= k2_threshold`
/// (inclusive) the frame expands by `p = xi + k2`, clamped into
/// `[p_min, p_max]`; otherwise the frame keeps the real footprint. Both
/// virtual dimensions use the same factor, so the aspect ratio is preserved.
pub fn compute_expansion(robot: &RobotSpec, human: &HumanSpec) -> Result<ExpansionResult> {
    robot.validate()?;
    human.validate()?;

    let k1 = robot.wrfb / human.whfb;
    let k2 = robot.wrlr / human.whlr;
    let expanded = k2 <= robot.k2_threshold;

    let (p, clamped) = if expanded {
        let raw = robot.xi + k2;
        let p = raw.clamp(robot.p_min, robot.p_max);
        (p, p != raw)
    } else {
        (1.0, false)
    };

    let vwrfb = p * robot.wrfb;
    let vwrlr = p * robot.wrlr;
    let wlr = vwrlr;
    let wfb = robot.epsilon * wlr;

    Ok(ExpansionResult { p, k1, k2, expanded, clamped, vwrfb, vwrlr, wfb, wlr })
}
