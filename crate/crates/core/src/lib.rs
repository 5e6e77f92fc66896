//! Exact decision procedures for normal crossing divisor germs at the origin,
//! built on a small polynomial and Gröbner basis engine over the rationals.

pub mod divisor;
pub mod error;
pub mod gb;
pub mod ideal;
pub mod linalg;
pub mod logres;
pub mod par;
pub mod poly;

pub use error::{Error, Result};
