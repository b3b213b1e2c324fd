//! Exact scalar arithmetic: rationals, parameter polynomials, Laurent
//! polynomials in spectral variables and their quotients.

mod laurent;
mod lincomb;
mod param;
mod poly;
mod ratfn;
mod rational;
mod ring;

pub use laurent::{Laurent, SMono, Var, NVARS};
pub use lincomb::{LieLaurent, LinComb, Symbol};
pub use param::{Param, ParamMono, ParamPoly};
pub use poly::{CoeffDisplay, Monomial, Poly};
pub use ratfn::RationalFn;
pub use rational::Rational;
pub use ring::Ring;
