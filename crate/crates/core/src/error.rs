use thiserror::Error;

use crate::grading::Grading;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index mismatch: {0}")]
    IndexMismatch(String),

    #[error(
        "entry {source_name} -> {target} is not homogeneous: gradings {source_grading} -> {target_grading} \
         with degree shift {shift} need U-exponent {needed}"
    )]
    NotHomogeneous {
        source_name: String,
        target: String,
        source_grading: Grading,
        target_grading: Grading,
        shift: Grading,
        needed: Grading,
    },

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),

    #[error("invalid complex: {}", join(.0))]
    InvalidComplex(Vec<String>),

    #[error("invalid iota-complex: {}", join(.0))]
    InvalidIota(Vec<String>),

    #[error("not a rational homology sphere model: homology has {0} free towers")]
    TowerCount(usize),

    #[error("structural error: {0}")]
    Structure(String),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

fn join(items: &[String]) -> String {
    items.join("; ")
}
