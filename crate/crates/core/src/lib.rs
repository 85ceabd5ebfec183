//! Kazhdan-Lusztig combinatorics, tilting multiplicity formulas and a
//! brute-force minimal tilting complex oracle.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod mincpx;
pub mod par;
pub mod poly;
pub mod rootdata;
pub mod tilting;

pub use coxeter::{CoxeterElement, CoxeterSystem, Side};
pub use error::{Error, Result};
pub use poly::LaurentPoly;
