//! Generating matrices `T^±(x)` of `a_{N-1}^(1)`, their FRT relations with
//! the r-matrix, and the two involutions in generator and matrix form.

use rayon::prelude::*;

use crate::error::Result;
use crate::exactnum::{Laurent, LieLaurent, LinComb, Monomial, ParamPoly, Ring, SMono, Var};
use crate::genmatrix::{
    commutator_scalar, compare, in_window, rename, scalar_lie, scale, tensor_bracket, window, zero_check, LieMatrix,
};
use crate::loop_algebra::{LoopAlgebra, LoopElement, LoopSym, Theta};
use crate::report::{Detail, Outcome};
use crate::rmatrix::{build_r, parity_sign, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    Plus,
    Minus,
}

impl Half {
    pub fn opposite(self) -> Half {
        match self {
            Half::Plus => Half::Minus,
            Half::Minus => Half::Plus,
        }
    }

    fn sign(self) -> i64 {
        match self {
            Half::Plus => 1,
            Half::Minus => -1,
        }
    }
}

/// `T^±(x)` truncated at `|exponent| <= cutoff`.
pub fn build_t(alg: &LoopAlgebra, half: Half, cutoff: i32) -> LieMatrix<LoopSym> {
    let n = alg.n();
    let sg = half.sign();
    let mut out = Matrix::new(n);
    for i in 1..=n {
        for j in 1..=n {
            let mut v = LieLaurent::zero();
            let constant = match half {
                Half::Plus => i <= j,
                Half::Minus => i >= j,
            };
            if constant {
                let weight = if i == j { sg } else { 2 * sg };
                v.add_scaled_at(SMono::one(), &alg.e(j, i, 0), &ParamPoly::int(weight));
            }
            for k in 1..=cutoff {
                let level = k * sg as i32;
                v.add_scaled_at(SMono::var(Var::X, level), &alg.e(j, i, level), &ParamPoly::int(2 * sg));
            }
            if !v.is_zero() {
                out.set(i - 1, j - 1, v);
            }
        }
    }
    out
}

fn bracket_fn(alg: &LoopAlgebra) -> impl Fn(&LoopSym, &LoopSym) -> LoopElement + Sync + '_ {
    move |a, b| alg.sym_bracket(a, b)
}

/// `[T^±(x), c] = 0` coefficientwise.
pub fn check_central(alg: &LoopAlgebra, t: &LieMatrix<LoopSym>) -> Outcome {
    let c = alg.central();
    let br = t.map(|v| {
        let mut out = LieLaurent::zero();
        for (m, lc) in v.iter() {
            out.add_at(*m, &alg.bracket(lc, &c));
        }
        out
    });
    zero_check(&br, alg.n(), 1, |_| true)
}

/// `tr T^±(x) = 0`, i.e. every diagonal coefficient sum canonicalizes to 0.
pub fn check_trace(alg: &LoopAlgebra, t: &LieMatrix<LoopSym>) -> Outcome {
    let tr = t.trace();
    let found = tr.iter().find(|(_, lc)| !lc.is_zero()).map(|(m, lc)| (*m, lc.clone()));
    match found {
        None => Ok(()),
        Some((m, lc)) => Err(Detail::from_residual(&lc).with_monomial(&m).with_info(format!("trace, N = {}", alg.n()))),
    }
}

fn leg(t: &LieMatrix<LoopSym>, n: usize, which: usize) -> Result<LieMatrix<LoopSym>> {
    t.embed_legs(n, 1, &[which], 2)
}

const XY: [Var; 2] = [Var::X, Var::Y];

/// `[T_1^±(x), T_2^±(y)] = [T_1^±(x) + T_2^±(y), r_12(x/y)]`, cleared by the
/// r-matrix denominator and compared in the contamination-free window.
pub fn check_rpp(alg: &LoopAlgebra, half: Half, cutoff: i32) -> Result<Outcome> {
    let n = alg.n();
    let r = build_r(n)?;
    let den = r.den.product();
    let w = window(cutoff, &den, &XY)?;
    let tx = build_t(alg, half, cutoff);
    let ty = rename(&tx, Var::X, Var::Y);
    let lhs = scale(&tensor_bracket(&tx, &ty, n, &bracket_fn(alg)), &den);
    let sum = leg(&tx, n, 1)?.plus(&leg(&ty, n, 2)?);
    let rhs = commutator_scalar(&sum, &r.num);
    Ok(compare(&lhs, &rhs, n, 2, |m| in_window(m, &XY, w)))
}

/// `[T_1^+(x), T_2^-(y)] = [T_1^+(x) + T_2^-(y), r_12(x/y)] - 2c x ∂_x r_12(x/y)`,
/// cleared by the square of the r-matrix denominator. With
/// `include_central = false` the last term is dropped.
pub fn check_rpm(alg: &LoopAlgebra, cutoff: i32, include_central: bool) -> Result<Outcome> {
    let n = alg.n();
    let r = build_r(n)?;
    let den = r.den.product();
    let q = den.times(&den);
    let w = window(cutoff, &q, &XY)?;
    let tp = build_t(alg, Half::Plus, cutoff);
    let tm = rename(&build_t(alg, Half::Minus, cutoff), Var::X, Var::Y);
    let lhs = scale(&tensor_bracket(&tp, &tm, n, &bracket_fn(alg)), &q);
    let sum = leg(&tp, n, 1)?.plus(&leg(&tm, n, 2)?);
    let mut rhs = scale(&commutator_scalar(&sum, &r.num), &den);
    if include_central {
        // x ∂_x (num/den) · den² = x num_x den - num x den_x
        let xden = den.euler(Var::X);
        let d = r.num.map(|v| v.euler(Var::X).times(&den).minus(&v.times(&xden)));
        rhs = rhs.minus(&scalar_lie(&d, &alg.central().scaled(&ParamPoly::int(2))));
    }
    Ok(compare(&lhs, &rhs, n, 2, |m| in_window(m, &XY, w)))
}

/// Linear extension of a symbol map.
pub fn extend<F>(f: &F, a: &LoopElement) -> Result<LoopElement>
where
    F: Fn(&LoopSym) -> Result<LoopElement> + ?Sized,
{
    let mut out = LinComb::zero();
    for (s, c) in a.iter() {
        out.add_scaled(&f(s)?, c);
    }
    Ok(out)
}

/// `θ([a, b]) = [θ(a), θ(b)]` and `θ(θ(a)) = a` for all canonical basis
/// symbols with `|level| <= levels`.
pub fn check_automorphism_with<F>(alg: &LoopAlgebra, levels: i32, f: &F) -> Result<Outcome>
where
    F: Fn(&LoopSym) -> Result<LoopElement> + Sync,
{
    let basis = alg.basis(levels);
    let images: Vec<LoopElement> = basis.iter().map(f).collect::<Result<_>>()?;
    for (s, img) in basis.iter().zip(&images) {
        let back = extend(f, img)?;
        let diff = back.minus(&LinComb::single(*s));
        if !diff.is_zero() {
            return Ok(Err(Detail::from_residual(&diff).with_info(format!("not involutive on {s}"))));
        }
    }
    let results: Vec<Result<Outcome>> = (0..basis.len())
        .into_par_iter()
        .map(|ia| {
            for ib in 0..basis.len() {
                let br = alg.sym_bracket(&basis[ia], &basis[ib]);
                let lhs = extend(f, &br)?;
                let rhs = alg.bracket(&images[ia], &images[ib]);
                let diff = lhs.minus(&rhs);
                if !diff.is_zero() {
                    return Ok(Err(Detail::from_residual(&diff)
                        .with_info(format!("bracket not preserved on ({}, {})", basis[ia], basis[ib]))));
                }
            }
            Ok(Ok(()))
        })
        .collect();
    for r in results {
        let o = r?;
        if o.is_err() {
            return Ok(o);
        }
    }
    Ok(Ok(()))
}

pub fn check_automorphism(alg: &LoopAlgebra, theta: &Theta, levels: i32) -> Result<Outcome> {
    check_automorphism_with(alg, levels, &|s: &LoopSym| alg.apply_theta_sym(theta, s))
}

/// `θ_1` with the overall sign of its action on loop generators flipped;
/// a negative control for the automorphism check.
pub fn theta1_wrong_sign(alg: &LoopAlgebra, s: &LoopSym) -> Result<LoopElement> {
    let img = alg.apply_theta_sym(&Theta::Theta1, s)?;
    Ok(if *s == LoopSym::Central { img } else { img.negated() })
}

fn apply_entrywise(alg: &LoopAlgebra, theta: &Theta, t: &LieMatrix<LoopSym>) -> Result<LieMatrix<LoopSym>> {
    t.try_map(|v| {
        let mut out = LieLaurent::zero();
        for (m, lc) in v.iter() {
            out.add_at(*m, &alg.apply_theta(theta, lc)?);
        }
        Ok(out)
    })
}

/// `θ_1(T^±(x)) = U T^∓((-1)^N/x)^t U` with `U = diag((-1)^j)`.
pub fn check_theta1_matrix_form(alg: &LoopAlgebra, half: Half, cutoff: i32) -> Result<Outcome> {
    let n = alg.n();
    let generator = apply_entrywise(alg, &Theta::Theta1, &build_t(alg, half, cutoff))?;
    let image = Laurent::var_pow(Var::X, -1).scale_int(parity_sign(n));
    let other = build_t(alg, half.opposite(), cutoff).try_map(|v| v.substitute(Var::X, &image))?;
    let matrix = other.transpose().map_indexed(|r, c, v| if (r + c) % 2 == 0 { v.clone() } else { v.negated() });
    Ok(compare(&generator, &matrix, n, 1, |_| true))
}

/// `θ_2(T^±(x)) = V(x) T^∓(1/x)^t V(x)^{-1} ∓ c x V'(x) V(x)^{-1}` with
/// `V(x) = Σ_j x^{-1/2} E_{j,j+N/2} + ε x^{1/2} E_{j+N/2,j}`.
///
/// Conjugation by `V` is computed on doubled exponents; the half-integer
/// parts cancel in pairs, which is asserted. `x V' V^{-1}` is the constant
/// `diag(-1/2, …, 1/2, …)`. Truncation shifts levels by one, so the window
/// is `cutoff - 1`.
pub fn check_theta2_matrix_form(alg: &LoopAlgebra, eps: i64, half: Half, cutoff: i32) -> Result<Outcome> {
    let n = alg.n();
    let theta = Theta::Theta2(ParamPoly::int(eps));
    let generator = apply_entrywise(alg, &theta, &build_t(alg, half, cutoff))?;
    let h = n / 2;
    let other =
        build_t(alg, half.opposite(), cutoff).try_map(|v| v.substitute(Var::X, &Laurent::var_pow(Var::X, -1)))?;
    let t = other.transpose();
    let pi = |a: usize| if a < h { a + h } else { a - h };
    // V_{a,π(a)} = ε^{[a≥h]} x^{dv/2}, V^{-1}_{q,π(q)} = ε^{[q<h]} x^{dw/2}
    let dv = |a: usize| if a < h { -1 } else { 1 };
    let dw = |q: usize| if q < h { -1 } else { 1 };
    let mut conj = Matrix::new(n);
    for a in 0..n {
        for b in 0..n {
            let q = pi(b);
            let doubled = dv(a) + dw(q);
            assert!(doubled % 2 == 0, "half-integer exponents must cancel");
            let eps_power = (a >= h) as i64 + (q < h) as i64;
            let coeff = if eps_power % 2 == 1 { eps } else { 1 };
            let v = t.entry(pi(a), q);
            if v.is_zero() {
                continue;
            }
            let shifted = v.scale_laurent(&Laurent::var_pow(Var::X, doubled / 2).scale_int(coeff));
            conj.set(a, b, shifted);
        }
    }
    let diag = Matrix::from_entries(n, (0..n).map(|i| ((i, i), Laurent::frac(if i < h { -1 } else { 1 }, 2))));
    let central = scalar_lie(&diag, &alg.central());
    let matrix = match half {
        Half::Plus => conj.minus(&central),
        Half::Minus => conj.plus(&central),
    };
    let w = cutoff - 1;
    Ok(compare(&generator, &matrix, n, 1, |m| m.exp(Var::X).abs() <= w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_plus_entries() {
        let alg = LoopAlgebra::new(3).unwrap();
        let t = build_t(&alg, Half::Plus, 3);
        let e = |i, j, n| alg.inject(i, j, n).unwrap();
        // entry (1,2): 2 e_21^(0) + 2 Σ x^n e_21^(n)
        let v = t.entry(0, 1);
        assert_eq!(v.coeff(&SMono::one()), e(2, 1, 0).scaled(&ParamPoly::int(2)));
        assert_eq!(v.coeff(&SMono::var(Var::X, 2)), e(2, 1, 2).scaled(&ParamPoly::int(2)));
        // entry (2,1) has no constant term
        assert!(t.entry(1, 0).coeff(&SMono::one()).is_zero());
        assert!(check_trace(&alg, &t).is_ok());
    }

    #[test]
    fn frt_relations_n2() {
        let alg = LoopAlgebra::new(2).unwrap();
        for half in [Half::Plus, Half::Minus] {
            assert!(check_rpp(&alg, half, 4).unwrap().is_ok());
            assert!(check_central(&alg, &build_t(&alg, half, 4)).is_ok());
        }
        assert!(check_rpm(&alg, 4, true).unwrap().is_ok());
        let bad = check_rpm(&alg, 4, false).unwrap().unwrap_err();
        assert!(bad.monomial.is_some() && bad.entry.is_some());
    }

    #[test]
    fn window_must_be_nonempty() {
        let alg = LoopAlgebra::new(2).unwrap();
        assert!(check_rpm(&alg, 1, true).is_err());
    }

    #[test]
    fn automorphisms() {
        let alg = LoopAlgebra::new(3).unwrap();
        assert!(check_automorphism(&alg, &Theta::Theta1, 1).unwrap().is_ok());
        let bad = check_automorphism_with(&alg, 1, &|s: &LoopSym| theta1_wrong_sign(&alg, s)).unwrap();
        assert!(bad.is_err());
        let alg2 = LoopAlgebra::new(2).unwrap();
        for eps in [1, -1] {
            assert!(check_automorphism(&alg2, &Theta::Theta2(ParamPoly::int(eps)), 1).unwrap().is_ok());
        }
    }

    #[test]
    fn matrix_forms() {
        for n in [2, 3] {
            let alg = LoopAlgebra::new(n).unwrap();
            for half in [Half::Plus, Half::Minus] {
                assert!(check_theta1_matrix_form(&alg, half, 4).unwrap().is_ok(), "n={n}");
            }
        }
        let alg = LoopAlgebra::new(2).unwrap();
        for eps in [1, -1] {
            for half in [Half::Plus, Half::Minus] {
                let o = check_theta2_matrix_form(&alg, eps, half, 4).unwrap();
                assert!(o.is_ok(), "{o:?}");
            }
        }
    }
}
