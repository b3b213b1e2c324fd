//! Matrices with Lie-algebra-valued generating-function entries, i.e.
//! elements of `End((C^N)^{⊗k}) ⊗ g[x^±, y^±]`, and the leg operations
//! needed to state FRT-type relations.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{Laurent, LieLaurent, LinComb, SMono, Symbol, Var};
use crate::report::{Detail, Outcome};
use crate::rmatrix::{digits, one_based, scalar_times, times_scalar, Matrix};

pub type LieMatrix<S> = Matrix<LieLaurent<S>>;

/// `[A_1(x), B_2(y)]`: entry `((i,k),(j,l))` is `[A_ij, B_kl]`.
pub fn tensor_bracket<S, F>(a: &LieMatrix<S>, b: &LieMatrix<S>, n: usize, br: &F) -> LieMatrix<S>
where
    S: Symbol,
    F: Fn(&S, &S) -> LinComb<S> + Sync,
{
    let a_entries: Vec<_> = a.iter().collect();
    let b_entries: Vec<_> = b.iter().collect();
    type Block<S> = Vec<((usize, usize), LieLaurent<S>)>;
    let parts: Vec<Block<S>> = a_entries
        .par_iter()
        .map(|((i, j), va)| {
            b_entries
                .iter()
                .map(|((k, l), vb)| ((i * n + k, j * n + l), va.bilinear(vb, br)))
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect();
    let mut out = Matrix::new(n * n);
    for part in parts {
        for ((r, c), v) in part {
            out.add_at(r, c, &v);
        }
    }
    out
}

/// `L·R - R·L` for a Lie-valued `L` and a scalar `R`.
pub fn commutator_scalar<S: Symbol>(l: &LieMatrix<S>, r: &Matrix<Laurent>) -> LieMatrix<S> {
    times_scalar(l, r).minus(&scalar_times(r, l))
}

/// `R·L - L·R`.
pub fn scalar_commutator<S: Symbol>(r: &Matrix<Laurent>, l: &LieMatrix<S>) -> LieMatrix<S> {
    commutator_scalar(l, r).negated()
}

pub fn scale<S: Symbol>(l: &LieMatrix<S>, p: &Laurent) -> LieMatrix<S> {
    l.map(|v| v.scale_laurent(p))
}

/// Scalar matrix times a fixed Lie element.
pub fn scalar_lie<S: Symbol>(m: &Matrix<Laurent>, v: &LinComb<S>) -> LieMatrix<S> {
    m.map(|p| {
        let mut out = LieLaurent::zero();
        for (mono, c) in p.terms() {
            out.add_scaled_at(*mono, v, c);
        }
        out
    })
}

pub fn rename<S: Symbol>(l: &LieMatrix<S>, from: Var, to: Var) -> LieMatrix<S> {
    l.map(|v| v.rename(from, to))
}

/// Largest per-variable exponent span of `q` over `vars`.
pub fn degree_span(q: &Laurent, vars: &[Var]) -> i32 {
    vars.iter()
        .map(|v| {
            let (lo, hi) = q.degree_range(*v);
            hi - lo
        })
        .max()
        .unwrap_or(0)
}

/// Contamination-free window `cutoff - span(q)`; errors when it is empty.
pub fn window(cutoff: i32, q: &Laurent, vars: &[Var]) -> Result<i32> {
    let degree = degree_span(q, vars);
    if cutoff - degree < 0 {
        return Err(Error::EmptyWindow { cutoff, degree });
    }
    Ok(cutoff - degree)
}

/// Keeps monomials whose exponents in `vars` are all within `[-w, w]`.
pub fn in_window(m: &SMono, vars: &[Var], w: i32) -> bool {
    vars.iter().all(|v| m.exp(*v).abs() <= w)
}

/// First nonzero (entry, monomial, symbol) of `m` among monomials accepted
/// by `keep`, in index order.
pub fn zero_check<S: Symbol, K: Fn(&SMono) -> bool>(m: &LieMatrix<S>, n: usize, legs: usize, keep: K) -> Outcome {
    for ((r, c), v) in m.iter() {
        for (mono, lc) in v.iter() {
            if keep(mono) && !lc.is_zero() {
                return Err(Detail::from_residual(lc)
                    .with_entry(one_based(&digits(*r, n, legs)), one_based(&digits(*c, n, legs)))
                    .with_monomial(mono));
            }
        }
    }
    Ok(())
}

/// Entrywise difference check for two Lie matrices.
pub fn compare<S: Symbol, K: Fn(&SMono) -> bool>(
    a: &LieMatrix<S>,
    b: &LieMatrix<S>,
    n: usize,
    legs: usize,
    keep: K,
) -> Outcome {
    zero_check(&a.minus(b), n, legs, keep)
}

/// Sum of diagonal entries of an `N×N` Lie matrix.
pub fn trace<S: Symbol>(m: &LieMatrix<S>) -> LieLaurent<S> {
    m.trace()
}
