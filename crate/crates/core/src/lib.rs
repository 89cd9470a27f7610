//! Position analysis and classification of the planar 4R linkage on the
//! Minkowskian plane.

pub mod classify;
pub mod coupler_curve;
pub mod double_plane;
pub mod error;
pub mod fourbar;
pub mod io_cli;
pub mod lorentz2;

pub use error::{Error, Result};
