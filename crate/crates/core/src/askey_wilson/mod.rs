//! Higher rank classical Askey-Wilson algebras: the N = 3 and N = 4 bracket
//! tables, their `B(x)` matrices and exact reflection relation, the
//! generator-only presentations, and structure-constant extraction from the
//! general-N ansatz.

mod extract;
mod presentation;
mod solve;
mod table;
mod word;

pub use extract::{
    build_b_general, extract_structure_constants, match_tables, rescale_generator, Convention, Extraction, Pair,
    TableMatch,
};
pub use presentation::{
    check_defcom, check_generation, check_oa3, check_oa3q, check_pro1, check_pro2, check_remark, generated_rank,
};
pub use solve::{Insert, Reducer};
pub use table::{
    aw3_table, aw3_table_with, aw4_table, aw4_table_checked, check_antisymmetry, check_jacobi, Aw3Variant, AwElement,
    AwSym, BracketDoc, StructTable, TableDoc,
};
pub use word::{ChainWord, FreeWord};

use crate::error::{Error, Result};
use crate::exactnum::{Laurent, LieLaurent, LinComb, Param, ParamPoly, Ring, SMono, Symbol, Var};
use crate::genmatrix::{rename, scalar_commutator, scale, tensor_bracket, zero_check, LieMatrix};
use crate::report::{Detail, Outcome};
use crate::rmatrix::{build_rbar_closed, parity_sign, Matrix};

/// `B(x) = 2 / (α + (-1)^{N+1} x - x^{-1}) · num(x)`.
#[derive(Clone, Debug)]
pub struct AwMatrix<S: Symbol> {
    pub n: usize,
    pub num: LieMatrix<S>,
}

impl<S: Symbol> AwMatrix<S> {
    pub fn denominator(&self) -> Laurent {
        denominator(self.n, Var::X)
    }
}

/// `α + (-1)^{N+1} v - v^{-1}`.
pub fn denominator(n: usize, v: Var) -> Laurent {
    Laurent::scalar(ParamPoly::param(Param::Alpha))
        .plus(&Laurent::var(v).scale_int(-parity_sign(n)))
        .minus(&Laurent::var_pow(v, -1))
}

/// Entry from `(coefficient, x-power, element)` terms.
fn entry<S: Symbol>(terms: &[(ParamPoly, i32, LinComb<S>)]) -> LieLaurent<S> {
    let mut v = LieLaurent::zero();
    for (c, k, e) in terms {
        v.add_scaled_at(SMono::var(Var::X, *k), e, c);
    }
    v
}

/// The displayed `B(x)` for the N = 3 and N = 4 tables.
pub fn build_b_aw(t: &StructTable) -> Result<AwMatrix<AwSym>> {
    let n = t.generator_count();
    let el = |name: &str| t.index_of(name).map(|i| t.elem(i)).ok_or_else(|| Error::Config(format!("no {name}")));
    let q = ParamPoly::frac;
    let one = || ParamPoly::int(1);
    let neg = || ParamPoly::int(-1);
    let mut num = Matrix::new(n);
    match n {
        3 => {
            let (e1, e2, e3) = (el("e1")?, el("e2")?, el("e3")?);
            let (f1, f2, f3) = (el("f1")?, el("f2")?, el("f3")?);
            let (g1, g2) = (el("g1")?, el("g2")?);
            let rows = [
                [
                    entry(&[(q(2, 3), 0, g1.clone()), (q(1, 3), 0, g2.clone())]),
                    entry(&[(one(), 0, f1.clone()), (neg(), -1, e1.clone())]),
                    entry(&[(one(), 0, e3.clone()), (one(), -1, f3.clone())]),
                ],
                [
                    entry(&[(neg(), 1, e1.clone()), (neg(), 0, f1.clone())]),
                    entry(&[(q(-1, 3), 0, g1.clone()), (q(1, 3), 0, g2.clone())]),
                    entry(&[(one(), 0, f2.clone()), (neg(), -1, e2.clone())]),
                ],
                [
                    entry(&[(one(), 0, e3.clone()), (neg(), 1, f3.clone())]),
                    entry(&[(neg(), 1, e2.clone()), (neg(), 0, f2.clone())]),
                    entry(&[(q(-1, 3), 0, g1.clone()), (q(-2, 3), 0, g2.clone())]),
                ],
            ];
            for (i, row) in rows.into_iter().enumerate() {
                for (j, v) in row.into_iter().enumerate() {
                    num.set(i, j, v);
                }
            }
        }
        4 => {
            let e = |k: usize| el(&format!("e{k}"));
            let f = |k: usize| el(&format!("f{k}"));
            let g = |k: usize| el(&format!("g{k}"));
            let (h1, h2, h3) = (el("h1")?, el("h2")?, el("h3")?);
            let diag = |a: ParamPoly, b: ParamPoly, c: ParamPoly| {
                entry(&[(a, 0, h1.clone()), (b, 0, h2.clone()), (c, 0, h3.clone())])
            };
            let rows = [
                [
                    diag(q(3, 4), q(1, 2), q(1, 4)),
                    entry(&[(one(), 0, g(1)?), (one(), -1, e(1)?)]),
                    entry(&[(one(), 0, f(1)?), (one(), -1, f(3)?)]),
                    entry(&[(neg(), 0, e(4)?), (neg(), -1, g(4)?)]),
                ],
                [
                    entry(&[(neg(), 0, g(1)?), (neg(), 1, e(1)?)]),
                    diag(q(-1, 4), q(1, 2), q(1, 4)),
                    entry(&[(one(), 0, g(2)?), (one(), -1, e(2)?)]),
                    entry(&[(one(), 0, f(2)?), (one(), -1, f(4)?)]),
                ],
                [
                    entry(&[(one(), 0, f(1)?), (one(), 1, f(3)?)]),
                    entry(&[(neg(), 0, g(2)?), (neg(), 1, e(2)?)]),
                    diag(q(-1, 4), q(-1, 2), q(1, 4)),
                    entry(&[(one(), 0, g(3)?), (one(), -1, e(3)?)]),
                ],
                [
                    entry(&[(one(), 0, e(4)?), (one(), 1, g(4)?)]),
                    entry(&[(one(), 0, f(2)?), (one(), 1, f(4)?)]),
                    entry(&[(neg(), 0, g(3)?), (neg(), 1, e(3)?)]),
                    diag(q(-1, 4), q(-1, 2), q(-3, 4)),
                ],
            ];
            for (i, row) in rows.into_iter().enumerate() {
                for (j, v) in row.into_iter().enumerate() {
                    num.set(i, j, v);
                }
            }
        }
        _ => return Err(Error::Unsupported(format!("no displayed B(x) for N = {n}"))),
    }
    Ok(AwMatrix { n, num })
}

/// Residual of the reflection relation for `B(x) = 2 num(x) / d(x)`,
/// multiplied through by `d(x) d(y) (x - y)(xy - (-1)^N) / 2`:
///
/// `2Q [num_1(x), num_2(y)] - d(y) [R_21, num_1(x)] + d(x) [R_12, num_2(y)]`
///
/// where `R = Q r̄`. Every term is a finite Laurent polynomial, so the
/// identity holds iff the residual is exactly zero.
pub fn reflection_residual<S, F>(b: &AwMatrix<S>, br: &F) -> Result<LieMatrix<S>>
where
    S: Symbol,
    F: Fn(&S, &S) -> LinComb<S> + Sync,
{
    let n = b.n;
    let (x, y) = (Laurent::var(Var::X), Laurent::var(Var::Y));
    let q = x.minus(&y).times(&x.times(&y).minus(&Laurent::int(parity_sign(n))));
    let bx = &b.num;
    let by = rename(bx, Var::X, Var::Y);
    let lhs = scale(&tensor_bracket(bx, &by, n, br), &q.scale_int(2));
    let r21 = build_rbar_closed(n, &y, &x)?.embed(&[2, 1], 2)?.cleared(&q)?;
    let r12 = build_rbar_closed(n, &x, &y)?.cleared(&q)?;
    let b1 = bx.embed_legs(n, 1, &[1], 2)?;
    let b2 = by.embed_legs(n, 1, &[2], 2)?;
    let rhs = scale(&scalar_commutator(&r21, &b1), &denominator(n, Var::Y))
        .minus(&scale(&scalar_commutator(&r12, &b2), &denominator(n, Var::X)));
    Ok(lhs.minus(&rhs))
}

/// `tr B(x) = 0` and the reflection relation, exactly.
pub fn check_reflection_aw(t: &StructTable, b: &AwMatrix<AwSym>) -> Result<Outcome> {
    if let Some((m, lc)) = b.num.trace().iter().find(|(_, lc)| !lc.is_zero()) {
        return Ok(Err(Detail::from_residual(lc).with_monomial(m).with_info("trace of B(x)")));
    }
    let res = reflection_residual(b, &|a: &AwSym, c: &AwSym| t.sym_bracket(a, c))?;
    Ok(zero_check(&res, b.n, 2, |_| true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_entries() {
        let t = aw3_table();
        let b = build_b_aw(&t).unwrap();
        let expect = t.elem(0).negated();
        assert_eq!(b.num.entry(1, 0).coeff(&SMono::var(Var::X, 1)), expect);
        let t4 = aw4_table();
        let b4 = build_b_aw(&t4).unwrap();
        assert_eq!(b4.num.entry(0, 3).coeff(&SMono::var(Var::X, -1)), t4.elem(11).negated());
        assert_eq!(b4.denominator().to_string(), denominator(4, Var::X).to_string());
    }

    #[test]
    fn reflection_exact() {
        for t in [aw3_table(), aw4_table()] {
            let b = build_b_aw(&t).unwrap();
            let o = check_reflection_aw(&t, &b).unwrap();
            assert!(o.is_ok(), "{o:?}");
        }
        let bad = aw3_table_with(Aw3Variant::FlipFG).unwrap();
        let b = build_b_aw(&bad).unwrap();
        let err = check_reflection_aw(&bad, &b).unwrap().unwrap_err();
        assert!(err.monomial.is_some() && err.entry.is_some());
    }
}
