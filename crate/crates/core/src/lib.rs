//! Exact computations on cubic surfaces over finite fields of characteristic 2.

pub mod gf2k;
pub mod linalg;
pub mod mpoly;
pub mod construct;
pub mod cubic;
pub mod expected;
pub mod permgrp;
pub mod picweyl;
pub mod proj;
pub mod quadric;
pub mod suites;

pub use gf2k::{FieldElem, FieldSpec, GfError};
pub use linalg::{Field, Matrix, Ring};

pub type GfMatrix = Matrix<FieldElem>;
pub type QMatrix = Matrix<num_rational::Rational64>;
pub type ZMatrix = Matrix<i64>;
pub type GfPoint = proj::ProjPoint<FieldElem>;
pub type GfLine = proj::PluckerLine<FieldElem>;
pub type GfProjectivity = proj::Projectivity<FieldElem>;
