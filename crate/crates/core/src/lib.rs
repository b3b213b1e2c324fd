//! Exact verification kernel for the affine Lie algebra `a_{N-1}^(1)`, its
//! classical r-matrices, the FRT and current presentations of the sl_N
//! Onsager algebra, its commuting charges and the higher rank classical
//! Askey-Wilson quotients.
//!
//! Every identity is checked symbolically: parameters stay formal, rational
//! functions are cleared by an explicit denominator, and the remaining
//! polynomial residual must vanish term by term.

#![allow(clippy::result_large_err)]

pub mod error;
pub mod exactnum;

pub use error::{Error, Result};
pub mod askey_wilson;
pub mod charges;
pub mod frt;
pub mod genmatrix;
pub mod loop_algebra;
pub mod onsager;
pub mod report;
pub mod rmatrix;
pub mod suites;
