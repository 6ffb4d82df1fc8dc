//! Deterministic SVG output for tiling billiards.
//!
//! Every coordinate is written with six fractional digits, so identical
//! inputs give byte-identical documents.

mod atlas;
mod folded;
mod options;
mod pet;
mod plane;
mod svg;

pub use atlas::{write_atlas, AtlasReport};
pub use folded::render_folded;
pub use options::{Palette, RenderOptions, ViewBox};
pub use pet::render_pet;
pub use plane::render_plane;

#[derive(Debug, thiserror::Error)]
pub enum RenderError {
    #[error("invalid render options: {0}")]
    InvalidOptions(String),
    #[error(transparent)]
    Core(#[from] tiling_billiards::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = RenderError> = std::result::Result<T, E>;
