//! Exact computations around filtered φ-modules, Newton and Hodge polygons,
//! split root data and Satake norms.

pub mod bsc;
pub mod error;
pub mod exactnum;
pub mod ineq;
pub mod isocrystal;
pub mod rootdata;
pub mod satake;
pub mod weildeligne;

pub use error::{Error, Result};
