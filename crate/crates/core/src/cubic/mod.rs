//! Cubic surfaces in P³ over GF(2^k): forms, lines, automorphisms.

pub mod aut;
pub mod form;
pub mod graph;
pub mod lines;

pub use aut::{automorphisms, automorphisms_over, galois_image, gl4_f2_oracle, is_isomorphic, AutGroup, GaloisImage};
pub use form::{CubicForm, CYCLIC, FERMAT};
pub use lines::{find_lines, find_lines_with_degree, label_lines, lines_over, LineFrame, SurfaceLines};

use thiserror::Error;

use crate::gf2k::GfError;
use crate::permgrp::PermError;
use crate::proj::ProjError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("term {term:?} has degree {degree}, expected 3")]
    WrongDegree { term: String, degree: usize },
    #[error("the form is identically zero")]
    ZeroForm,
    #[error("the lines do not split over any field of size at most {field_size}")]
    SplitCap { field_size: usize },
    #[error("{0} lines found; the surface is singular")]
    TooManyLines(usize),
    #[error("{0} lines over the requested field, expected 27")]
    LineCount(usize),
    #[error("the intersection graph admits no standard labeling")]
    LabelingFailed,
    #[error("no five intersection points in general position")]
    FrameNotFound,
    #[error("forms are over different fields")]
    FieldMismatch,
    #[error("line does not lie on the surface")]
    LineNotOnSurface,
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Proj(#[from] ProjError),
    #[error(transparent)]
    Perm(#[from] PermError),
}
