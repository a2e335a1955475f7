//! Exact scalars: rationals, the formal extension by `√q`, valuations, and
//! the linear algebra built on them.

mod field;
pub mod linalg;
pub mod lp;
mod rat;
mod sqrt;
mod valuation;

pub use field::{is_prime, FieldData};
pub use linalg::{rat_linear_solve, Matrix};
pub use rat::{fmt_rat_list, parse_rat_list, Rat};
pub use sqrt::QSqrtQ;
pub use valuation::Val;
