//! Littlewood-Richardson tableaux and the twelve-fold symmetry of LR coefficients.
//!
//! Partitions live inside a fixed `d × (n-d)` rectangle and are drawn in French
//! convention (row 1 at the bottom). An LR tableau with boundary `(μ, ν, λ)` has
//! shape `complement(λ)/μ` and content `ν`.

pub mod bench;
pub mod companions;
pub mod crystal;
pub mod oracle;
pub mod plactic;
pub mod puzzles;
pub mod shapes;
pub mod symmetries;
pub mod tableaux;

mod error;

pub use error::{Error, Result};
pub use shapes::{BinaryWord, Partition, Rect, SkewShape};
pub use symmetries::GroupElement;
pub use tableaux::{Boundary, RecordingMatrix, SkewTableau, Word};

/// Banner attached to every boundary triple that leaves the library.
pub const CONVENTION: &str = "shape = complement(λ)/μ";
