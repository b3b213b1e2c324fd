//! Classical r-matrices on `C^N ⊗ C^N`, the folded non-standard r-matrix,
//! and exact checks of skew-symmetry and the (non-standard) classical
//! Yang-Baxter equations.

mod matrix;
mod tensor;

pub use matrix::{compose, digits, mul_with, scalar_mul, zip_with, Entry, Matrix};
pub use tensor::{laurent_matrix_zero, one_based, scalar_times, times_scalar, Denom, TensorOperator};

use crate::error::{Error, Result};
use crate::exactnum::{Laurent, Monomial, Ring, SMono, Var};
use crate::report::{Detail, Outcome};

/// `(-1)^N` as an integer.
pub fn parity_sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn validate_n(n: usize) -> Result<()> {
    if !(2..=9).contains(&n) {
        return Err(Error::Config(format!("N must be in 2..=9, got {n}")));
    }
    Ok(())
}

/// Deliberate corruptions used as negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RVariant {
    Standard,
    /// Sign of the `E_12 ⊗ E_21` coefficient flipped.
    FlipSign,
    /// Diagonal `E_ii ⊗ E_kk` weight removed.
    DropDiagonal,
}

/// `r(a/b)` for arbitrary Laurent arguments: denominator `b - a`, diagonal
/// numerator `(a + b)(δ_ik - 1/N)`, and `E_ij ⊗ E_ji` numerator `2b` (`i < j`)
/// or `2a` (`i > j`).
pub fn build_r_args(n: usize, a: &Laurent, b: &Laurent, variant: RVariant) -> Result<TensorOperator> {
    validate_n(n)?;
    let mut num = Matrix::new(n * n);
    let apb = a.plus(b);
    if variant != RVariant::DropDiagonal {
        let off = apb.times(&Laurent::frac(-1, n as i64));
        let on = apb.times(&Laurent::frac(n as i64 - 1, n as i64));
        for i in 0..n {
            for k in 0..n {
                num.set(i * n + k, i * n + k, if i == k { on.clone() } else { off.clone() });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut v = if i < j { b.scale_int(2) } else { a.scale_int(2) };
            if variant == RVariant::FlipSign && (i, j) == (0, 1) {
                v = Ring::negated(&v);
            }
            num.set(i * n + j, j * n + i, v);
        }
    }
    TensorOperator::new(n, 2, num, &[b.minus(a)])
}

/// `r_12(x/y)` in the variables `x`, `y`.
pub fn build_r(n: usize) -> Result<TensorOperator> {
    build_r_args(n, &Laurent::var(Var::X), &Laurent::var(Var::Y), RVariant::Standard)
}

/// Single-variable `r(z)`, the specialization `b = 1`.
pub fn build_r_single(n: usize, z: &Laurent) -> Result<TensorOperator> {
    build_r_args(n, z, &Laurent::one(), RVariant::Standard)
}

/// `r̄_12(a, b) = r_12(a/b) + U_1 r_12^{t_1}((-1)^N/(ab)) U_1`, built from `r`.
pub fn build_rbar_folded(n: usize, a: &Laurent, b: &Laurent) -> Result<TensorOperator> {
    let s = parity_sign(n);
    let direct = build_r_args(n, a, b, RVariant::Standard)?;
    let z = match a.times(b).terms() {
        [(m, c)] if c.is_one() => {
            Laurent::monomial(SMono::one().div(m).expect("laurent monomials are units")).scale_int(s)
        }
        _ => return Err(Error::Unsupported("folding arguments must be monomials".into())),
    };
    let folded =
        build_r_single(n, &z)?.transpose_leg(1)?.conjugate_signs(|r, c| if (r[0] + c[0]) % 2 == 0 { 1 } else { -1 });
    Ok(direct.add(&folded))
}

/// Closed form of the folded r-matrix over the denominator
/// `(a - b)(ab - (-1)^N)`.
pub fn build_rbar_closed(n: usize, a: &Laurent, b: &Laurent) -> Result<TensorOperator> {
    validate_n(n)?;
    let s = Laurent::int(parity_sign(n));
    let ab = a.times(b);
    let amb = a.minus(b);
    let abms = ab.minus(&s);
    let w = a.plus(b).times(&s.minus(&ab)).plus(&ab.plus(&s).times(&amb));
    let mut num = Matrix::new(n * n);
    for i in 0..n {
        for k in 0..n {
            let f = if i == k { Laurent::frac(n as i64 - 1, n as i64) } else { Laurent::frac(-1, n as i64) };
            num.set(i * n + k, i * n + k, w.times(&f));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            let (swap, fold) = if i < j {
                (b.times(&abms).scale_int(-2), ab.times(&amb).scale_int(2 * sign))
            } else {
                (a.times(&abms).scale_int(-2), s.times(&amb).scale_int(2 * sign))
            };
            num.set(i * n + j, j * n + i, swap);
            // E_ji ⊗ E_ji
            num.add_at(j * n + j, i * n + i, &fold);
        }
    }
    TensorOperator::new(n, 2, num, &[amb.clone(), abms.clone()])
}

/// Folded form and closed form of `r̄_12(x, y)`.
pub fn build_rbar(n: usize) -> Result<(TensorOperator, TensorOperator)> {
    let (x, y) = (Laurent::var(Var::X), Laurent::var(Var::Y));
    Ok((build_rbar_folded(n, &x, &y)?, build_rbar_closed(n, &x, &y)?))
}

pub fn check_rbar_folding(n: usize) -> Result<Outcome> {
    let (folded, closed) = build_rbar(n)?;
    Ok(folded.sub(&closed).zero_check())
}

/// Builder of a two-leg operator from its two spectral arguments.
pub type Builder<'a> = dyn Fn(&Laurent, &Laurent) -> Result<TensorOperator> + Sync + 'a;

/// `r_12(x/y) + r_21(y/x) = 0`.
pub fn check_skew_with(n: usize, r: &Builder) -> Result<Outcome> {
    let (x, y) = (Laurent::var(Var::X), Laurent::var(Var::Y));
    let lhs = r(&x, &y)?;
    let rhs = r(&y, &x)?.embed(&[2, 1], 2)?;
    let sum = lhs.add(&rhs);
    Ok(laurent_matrix_zero(&sum.cleared(&x.minus(&y))?, n, 2))
}

pub fn check_skew(n: usize) -> Result<Outcome> {
    check_skew_with(n, &|a, b| build_r_args(n, a, b, RVariant::Standard))
}

fn vars3() -> [Laurent; 3] {
    [Laurent::var(Var::X1), Laurent::var(Var::X2), Laurent::var(Var::X3)]
}

fn differences(v: &[Laurent; 3]) -> Laurent {
    v[0].minus(&v[1]).times(&v[0].minus(&v[2])).times(&v[1].minus(&v[2]))
}

/// `[r_13, r_23] - [r_13 + r_23, r_12]` cleared by `Π_{a<b}(x_a - x_b)`.
pub fn check_cybe_with(n: usize, r: &Builder) -> Result<Outcome> {
    let v = vars3();
    let r13 = r(&v[0], &v[2])?.embed(&[1, 3], 3)?;
    let r23 = r(&v[1], &v[2])?.embed(&[2, 3], 3)?;
    let r12 = r(&v[0], &v[1])?.embed(&[1, 2], 3)?;
    let res = r13.commutator(&r23).sub(&r13.add(&r23).commutator(&r12));
    Ok(laurent_matrix_zero(&res.cleared(&differences(&v))?, n, 3))
}

pub fn check_cybe(n: usize) -> Result<Outcome> {
    check_cybe_with(n, &|a, b| build_r_args(n, a, b, RVariant::Standard))
}

/// `[r̄_13(x1,x3), r̄_23(x2,x3)] - [r̄_21(x2,x1), r̄_13(x1,x3)]
///  - [r̄_23(x2,x3), r̄_12(x1,x2)]`, cleared by
/// `Π_{a<b}(x_a - x_b)(x_a x_b - (-1)^N)`.
pub fn check_ns_cybe_with(n: usize, rbar: &Builder) -> Result<Outcome> {
    let v = vars3();
    let s = Laurent::int(parity_sign(n));
    let r13 = rbar(&v[0], &v[2])?.embed(&[1, 3], 3)?;
    let r23 = rbar(&v[1], &v[2])?.embed(&[2, 3], 3)?;
    let r21 = rbar(&v[1], &v[0])?.embed(&[2, 1], 3)?;
    let r12 = rbar(&v[0], &v[1])?.embed(&[1, 2], 3)?;
    let res = r13.commutator(&r23).sub(&r21.commutator(&r13)).sub(&r23.commutator(&r12));
    let mut q = differences(&v);
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        q = q.times(&v[a].times(&v[b]).minus(&s));
    }
    Ok(laurent_matrix_zero(&res.cleared(&q)?, n, 3))
}

pub fn check_ns_cybe(n: usize) -> Result<Outcome> {
    check_ns_cybe_with(n, &|a, b| build_rbar_closed(n, a, b))
}

/// With `r̄_12(x, y) := r_12(x/y)` the non-standard equation reduces to the
/// ordinary one.
pub fn check_ns_cybe_reduction(n: usize) -> Result<Outcome> {
    check_ns_cybe_with(n, &|a, b| build_r_args(n, a, b, RVariant::Standard))
}

/// `U_1 U_2 r_12(x/y) = r_12(x/y) U_1 U_2` with `U = diag((-1)^j)`.
pub fn check_u_invariance(n: usize) -> Result<Outcome> {
    let r = build_r(n)?;
    let uu = Matrix::from_entries(
        n * n,
        (0..n * n).map(|idx| ((idx, idx), Laurent::int(if (idx / n + idx % n).is_multiple_of(2) { 1 } else { -1 }))),
    );
    let u = TensorOperator::polynomial(n, 2, uu);
    Ok(u.mul(&r).sub(&r.mul(&u)).zero_check())
}

/// Locator for a mismatch between two tensor operators.
pub fn compare(a: &TensorOperator, b: &TensorOperator) -> Outcome {
    a.sub(b).zero_check().map_err(|d: Detail| d.with_info("operators differ"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::RationalFn;

    fn x() -> Laurent {
        Laurent::var(Var::X)
    }
    fn y() -> Laurent {
        Laurent::var(Var::Y)
    }
    fn rf(num: Laurent, den: Laurent) -> RationalFn {
        RationalFn { num, den }
    }

    #[test]
    fn r_entries() {
        let r = build_r(2).unwrap();
        // E_12 ⊗ E_21: row (1,2) col (2,1)
        assert_eq!(r.entry_fn(1, 2), rf(y().scale_int(2), y().minus(&x())));
        assert_eq!(r.entry_fn(0, 0), rf(y().plus(&x()).times(&Laurent::frac(1, 2)), y().minus(&x())));
        let r3 = build_r(3).unwrap();
        // E_11 ⊗ E_22 is diagonal entry (1,2),(1,2)
        assert_eq!(r3.entry_fn(1, 1), rf(y().plus(&x()).times(&Laurent::frac(-1, 3)), y().minus(&x())));
    }

    #[test]
    fn rbar_closed_entries() {
        let (_, closed) = build_rbar(2).unwrap();
        // E_21 ⊗ E_21: row (2,2) col (1,1)
        let xy = x().times(&y());
        let expect = rf(xy.scale_int(-2), xy.minus(&Laurent::one()));
        assert_eq!(closed.entry_fn(3, 0), expect);
        for n in 2..=4 {
            let (_, c) = build_rbar(n).unwrap();
            let s = Laurent::int(parity_sign(n));
            let w1 = rf(x().plus(&y()), x().minus(&y()));
            let w2 = rf(xy.plus(&s), s.minus(&xy));
            let scale = rf(Laurent::frac(1 - n as i64, n as i64), Laurent::one());
            assert_eq!(c.entry_fn(0, 0), w1.add(&w2).mul(&scale));
        }
    }

    #[test]
    fn identities_small_n() {
        for n in 2..=3 {
            assert!(check_skew(n).unwrap().is_ok());
            assert!(check_cybe(n).unwrap().is_ok());
            assert!(check_rbar_folding(n).unwrap().is_ok());
            assert!(check_ns_cybe(n).unwrap().is_ok());
            assert!(check_ns_cybe_reduction(n).unwrap().is_ok());
            assert!(check_u_invariance(n).unwrap().is_ok());
        }
    }

    #[test]
    fn negative_controls_locate_entries() {
        let bad = check_skew_with(2, &|a, b| build_r_args(2, a, b, RVariant::FlipSign)).unwrap();
        let d = bad.unwrap_err();
        assert!(d.entry.is_some());
        let bad = check_cybe_with(3, &|a, b| build_r_args(3, a, b, RVariant::DropDiagonal)).unwrap();
        assert!(bad.unwrap_err().entry.is_some());
    }

    #[test]
    fn derivative_of_r_weight() {
        let w = rf(Laurent::one().plus(&x()), Laurent::one().minus(&x()));
        let expect = rf(Laurent::int(2), Laurent::one().minus(&x()).pow(2));
        assert_eq!(w.derivative(Var::X), expect);
    }
}
