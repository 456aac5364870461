//! On-disk JSON formats accepted by the CLI.

use serde::Deserialize;

use ffsim_core::{HumanSpec, LockMode, RobotSpec, Scenario, SensorModel, TrajectorySample};

/// A robot/human pairing plus model selection:
///
/// ```json
/// {
///   "robot": {"wrfb": 0.6, "wrlr": 0.5, "xi": 0.5, "epsilon": 0.8},
///   "human": {"whfb": 0.3, "whlr": 0.5},
///   "model": "corner"
/// }
/// ```
///
/// `lock_mode` defaults to `"containment"`; the robot's tuning constants
/// (`k2_threshold`, `p_min`, `p_max`) default to 1.2, 1.2, and 2.0. Unknown
/// keys anywhere are parse errors.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub robot: RobotSpec,
    pub human: HumanSpec,
    pub model: SensorModel,
    #[serde(default)]
    pub lock_mode: LockMode,
}

/// A config plus a human trajectory in the robot body frame:
///
/// ```json
/// {
///   "config": { ... },
///   "trajectory": [[0.0, 0.0, -0.45], [1.0, 0.0, 1.0]]
/// }
/// ```
///
/// Each sample is `[t, x, y]` with strictly increasing `t`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub config: ConfigFile,
    pub trajectory: Vec<[f64; 3]>,
}

impl ScenarioFile {
    pub fn into_scenario(self) -> Scenario {
        Scenario {
            robot: self.config.robot,
            human: self.config.human,
            model: self.config.model,
            lock_mode: self.config.lock_mode,
            trajectory: self
                .trajectory
                .iter()
                .map(|&[t, x, y]| TrajectorySample { t, x, y })
                .collect(),
        }
    }
}
