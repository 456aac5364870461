use thiserror::Error;

/// Failure modes shared by the geometry, partition, and simulation layers.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical dimension that must be strictly positive was zero, negative,
    /// or not finite.
    #[error("dimension `{name}` must be a positive finite number, got {value}")]
    NonPositiveDimension { name: &'static str, value: f64 },

    /// The human left-right width is zero, so the width ratio that drives the
    /// expansion decision is undefined.
    #[error("human left-right width must be positive; the width ratio is undefined otherwise")]
    DegenerateHuman,

    /// An expansion result was paired with robot parameters it was not
    /// computed from.
    #[error("expansion result is inconsistent with the robot parameters: {0}")]
    InvalidExpansion(String),

    /// A scenario failed structural validation before simulation.
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    /// A rectangle with non-increasing extents was requested.
    #[error("degenerate rectangle: {0}")]
    DegenerateRect(String),

    /// Coverage sampling needs a strictly positive cell size.
    #[error("grid resolution must be a positive finite number, got {0}")]
    NonPositiveResolution(f64),

    /// The requested resolution produces too few cells to say anything about
    /// the partition.
    #[error("resolution too coarse: window yields a {nx}x{ny} grid, need at least 4 cells")]
    ResolutionTooCoarse { nx: usize, ny: usize },

    /// The requested resolution produces more cells than we are willing to
    /// hold in memory.
    #[error("resolution too fine: window yields a {nx}x{ny} grid, the limit is {max_cells} cells")]
    GridTooLarge { nx: usize, ny: usize, max_cells: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
