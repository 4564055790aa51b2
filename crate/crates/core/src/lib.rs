pub mod algebra;
pub mod cli;
pub mod complex;
pub mod document;
pub mod error;
pub mod grading;
pub mod involutive;
pub mod iota;
pub mod knot;
pub mod local;
pub mod presets;
pub mod random;

pub use error::{Error, Result};
pub use grading::Grading;
