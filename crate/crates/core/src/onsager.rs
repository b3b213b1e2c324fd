//! The sl_N-Onsager algebra: abstract generators `B_ij^(n)`, the embedding
//! into `a_{N-1}^(1)` as θ1-fixed points, the Uglov-Ivanov and N-generator
//! presentations, the FRT matrix `B(x)` with its reflection relation, and
//! the current presentation.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{Laurent, LieLaurent, LinComb, Monomial, ParamPoly, Ring, SMono, Var};
use crate::frt::{build_t, Half};
use crate::genmatrix::{
    compare, in_window, rename, scalar_commutator, scale, tensor_bracket, window, zero_check, LieMatrix,
};
use crate::loop_algebra::{LoopAlgebra, LoopElement, Theta};
use crate::report::{Detail, Outcome};
use crate::rmatrix::{build_rbar_closed, parity_sign, Builder, Matrix};

/// Canonical basis symbols; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OnsagerSym {
    /// `B_ij^(0)` with `i < j`.
    B0(u8, u8),
    /// `B_ij^(n)` with `n >= 1`, excluding `i = j = N`.
    B(u8, u8, i32),
}

impl OnsagerSym {
    pub fn level(&self) -> i32 {
        match self {
            OnsagerSym::B0(..) => 0,
            OnsagerSym::B(_, _, n) => *n,
        }
    }

    fn raw(&self) -> (usize, usize, i32) {
        match *self {
            OnsagerSym::B0(i, j) => (i as usize, j as usize, 0),
            OnsagerSym::B(i, j, n) => (i as usize, j as usize, n),
        }
    }
}

impl fmt::Display for OnsagerSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, n) = self.raw();
        write!(f, "B_{i}{j}^({n})")
    }
}

pub type OnsagerElement = LinComb<OnsagerSym>;

fn sign(k: i64) -> ParamPoly {
    ParamPoly::sign(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OnsagerAlgebra {
    n: usize,
    /// Negative control: flips the sign of the `δ_ik` term of the bracket.
    corrupt: bool,
}

impl OnsagerAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        LoopAlgebra::new(n)?;
        Ok(OnsagerAlgebra { n, corrupt: false })
    }

    pub fn corrupted(self) -> Self {
        OnsagerAlgebra { corrupt: true, ..self }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn loop_algebra(&self) -> LoopAlgebra {
        LoopAlgebra::new(self.n).expect("validated at construction")
    }

    /// Raw `B_ij^(n)` reduced to canonical symbols by the reflection and
    /// trace relations.
    pub fn canonical(&self, i: usize, j: usize, level: i32) -> OnsagerElement {
        let nn = self.n as i64;
        if level < 0 {
            let s = sign((i + j + 1) as i64 + level as i64 * nn);
            return self.canonical(j, i, -level).scaled(&s);
        }
        if level == 0 {
            return match i.cmp(&j) {
                std::cmp::Ordering::Equal => LinComb::zero(),
                std::cmp::Ordering::Less => LinComb::single(OnsagerSym::B0(i as u8, j as u8)),
                std::cmp::Ordering::Greater => {
                    LinComb::term(OnsagerSym::B0(j as u8, i as u8), sign((i + j + 1) as i64))
                }
            };
        }
        if i == j && i == self.n {
            let mut out = LinComb::zero();
            for k in 1..self.n {
                out.add_term(OnsagerSym::B(k as u8, k as u8, level), &ParamPoly::int(-1));
            }
            return out;
        }
        LinComb::single(OnsagerSym::B(i as u8, j as u8, level))
    }

    /// Checked `canonical` for user-facing indices.
    pub fn canonicalize(&self, i: usize, j: usize, level: i32) -> Result<OnsagerElement> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange(format!("B_{i}{j} with N = {}", self.n)));
        }
        Ok(self.canonical(i, j, level))
    }

    /// `B_ij^(n) = e_ij^(n) + (-1)^{i+j+1+nN} e_ji^(-n)`.
    pub fn embed_raw(&self, i: usize, j: usize, level: i32) -> LoopElement {
        let alg = self.loop_algebra();
        let s = sign((i + j + 1) as i64 + level as i64 * self.n as i64);
        alg.e(i, j, level).plus(&alg.e(j, i, -level).scaled(&s))
    }

    pub fn embed_sym(&self, s: &OnsagerSym) -> LoopElement {
        let (i, j, n) = s.raw();
        self.embed_raw(i, j, n)
    }

    pub fn embed(&self, a: &OnsagerElement) -> LoopElement {
        a.map(|s| self.embed_sym(s))
    }

    /// `[B_ij^(m), B_kl^(n)] = δ_jk B_il^(m+n) - δ_il B_kj^(m+n)
    ///  + δ_ik σ B_jl^(n-m) - δ_jl σ B_ki^(n-m)`, `σ = (-1)^{i+j+1+mN}`.
    pub fn raw_bracket(&self, (i, j, m): (usize, usize, i32), (k, l, n): (usize, usize, i32)) -> OnsagerElement {
        let mut out = LinComb::zero();
        let sigma = sign((i + j + 1) as i64 + m as i64 * self.n as i64);
        if j == k {
            out.add_assign(&self.canonical(i, l, m + n));
        }
        if i == l {
            out.sub_assign(&self.canonical(k, j, m + n));
        }
        if i == k {
            let t = if self.corrupt { sigma.negated() } else { sigma.clone() };
            out.add_scaled(&self.canonical(j, l, n - m), &t);
        }
        if j == l {
            out.add_scaled(&self.canonical(k, i, n - m), &sigma.negated());
        }
        out
    }

    pub fn sym_bracket(&self, a: &OnsagerSym, b: &OnsagerSym) -> OnsagerElement {
        self.raw_bracket(a.raw(), b.raw())
    }

    pub fn bracket(&self, a: &OnsagerElement, b: &OnsagerElement) -> OnsagerElement {
        a.bilinear(b, |x, y| self.sym_bracket(x, y))
    }

    /// Canonical symbols with level `<= max_level`.
    pub fn basis(&self, max_level: i32) -> Vec<OnsagerSym> {
        let n = self.n as u8;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(OnsagerSym::B0(i, j));
            }
        }
        for lv in 1..=max_level {
            for i in 1..=n {
                for j in 1..=n {
                    if !(i == n && j == n) {
                        out.push(OnsagerSym::B(i, j, lv));
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// `A_ij^(n)`, `i != j`.
    pub fn a(&self, i: usize, j: usize, level: i32) -> OnsagerElement {
        self.canonical(i, j, level)
    }

    /// `G_i^(n) = B_ii^(n) - B_{i+1,i+1}^(n)`.
    pub fn g(&self, i: usize, level: i32) -> OnsagerElement {
        self.canonical(i, i, level).minus(&self.canonical(i + 1, i + 1, level))
    }
}

fn first_failure(results: Vec<Outcome>) -> Outcome {
    results.into_iter().find(|r| r.is_err()).unwrap_or(Ok(()))
}

fn mismatch(diff: &OnsagerElement, what: String) -> Outcome {
    if diff.is_zero() {
        Ok(())
    } else {
        Err(Detail::from_residual(diff).with_info(what))
    }
}

/// `embed([a, b]) = [embed(a), embed(b)]` for all canonical pairs with
/// level `<= levels`.
pub fn check_presentation_agreement(ons: &OnsagerAlgebra, levels: i32) -> Outcome {
    let alg = ons.loop_algebra();
    let basis = ons.basis(levels);
    let results: Vec<Outcome> = basis
        .par_iter()
        .map(|a| {
            for b in &basis {
                let lhs = ons.embed(&ons.sym_bracket(a, b));
                let rhs = alg.bracket(&ons.embed_sym(a), &ons.embed_sym(b));
                let diff = lhs.minus(&rhs);
                if !diff.is_zero() {
                    return Err(Detail::from_residual(&diff).with_info(format!("pair ({a}, {b})")));
                }
            }
            Ok(())
        })
        .collect();
    first_failure(results)
}

/// Every canonical symbol embeds to a θ1 fixed point.
pub fn check_theta1_fixed(ons: &OnsagerAlgebra, levels: i32) -> Outcome {
    let alg = ons.loop_algebra();
    for s in ons.basis(levels) {
        let e = ons.embed_sym(&s);
        let diff = alg.apply_theta(&Theta::Theta1, &e).expect("theta1 is total").minus(&e);
        if !diff.is_zero() {
            return Err(Detail::from_residual(&diff).with_info(format!("{s} is not fixed")));
        }
    }
    Ok(())
}

fn theta(b: bool) -> i64 {
    b as i64
}

/// The Uglov-Ivanov relations, instantiated for all indices and all levels
/// `|m|, |n| <= levels` (the `[A, A]` relation for `m >= n` only).
pub fn check_ui_relations(ons: &OnsagerAlgebra, levels: i32) -> Outcome {
    let n = ons.n;
    let nn = n as i64;
    let pairs: Vec<(i32, i32)> = (-levels..=levels).flat_map(|m| (-levels..=levels).map(move |k| (m, k))).collect();
    let results: Vec<Outcome> = pairs
        .par_iter()
        .map(|&(m, lv)| {
            // [A_ij^(m), A_kl^(n)], m >= n
            if m >= lv {
                for i in 1..=n {
                    for j in (1..=n).filter(|&j| j != i) {
                        for k in 1..=n {
                            for l in (1..=n).filter(|&l| l != k) {
                                let lhs = ons.bracket(&ons.a(i, j, m), &ons.a(k, l, lv));
                                let mut rhs = LinComb::zero();
                                if j == k {
                                    rhs.add_assign(&ons.a(i, l, m + lv));
                                }
                                if i == l {
                                    rhs.sub_assign(&ons.a(k, j, m + lv));
                                }
                                let (i6, j6, k6, l6, m6, n6) =
                                    (i as i64, j as i64, k as i64, l as i64, m as i64, lv as i64);
                                if i == k {
                                    if j < l {
                                        rhs.add_scaled(&ons.a(j, l, lv - m), &sign(i6 + j6 + 1 + m6 * nn));
                                    }
                                    if l < j {
                                        rhs.add_scaled(&ons.a(l, j, m - lv), &sign(i6 + l6 + n6 * nn));
                                    }
                                }
                                if j == l {
                                    if i < k {
                                        rhs.add_scaled(&ons.a(i, k, m - lv), &sign(k6 + l6 + 1 + n6 * nn));
                                    }
                                    if k < i {
                                        rhs.add_scaled(&ons.a(k, i, lv - m), &sign(i6 + l6 + m6 * nn));
                                    }
                                }
                                if i == k && j == l {
                                    // Σ_{s=i}^{j-1} G_s, read as -Σ_{s=j}^{i-1} when i > j
                                    let mut sum = LinComb::zero();
                                    let (lo, hi, sg) = if i < j { (i, j, 1) } else { (j, i, -1) };
                                    for s in lo..hi {
                                        sum.add_assign(&ons.g(s, m - lv));
                                    }
                                    rhs.add_scaled(&sum, &sign(i6 + j6 + 1 + n6 * nn).times(&ParamPoly::int(sg)));
                                }
                                mismatch(&lhs.minus(&rhs), format!("[A_{i}{j}^({m}), A_{k}{l}^({lv})]"))?;
                            }
                        }
                    }
                }
            }
            // [G_i^(m), A_kl^(n)]
            for i in 1..n {
                for k in 1..=n {
                    for l in (1..=n).filter(|&l| l != k) {
                        let lhs = ons.bracket(&ons.g(i, m), &ons.a(k, l, lv));
                        let d = |a: usize, b: usize| theta(a == b);
                        let c = d(i, k) - d(k, i + 1) - d(l, i) + d(l, i + 1);
                        let inner = ons.a(k, l, m + lv).minus(&ons.a(k, l, lv - m).scaled(&sign(m as i64 * nn)));
                        let rhs = inner.scaled(&ParamPoly::int(c));
                        mismatch(&lhs.minus(&rhs), format!("[G_{i}^({m}), A_{k}{l}^({lv})]"))?;
                    }
                }
                for j in 1..n {
                    let lhs = ons.bracket(&ons.g(i, m), &ons.g(j, lv));
                    mismatch(&lhs, format!("[G_{i}^({m}), G_{j}^({lv})]"))?;
                }
            }
            Ok(())
        })
        .collect();
    first_failure(results)
}

/// Generators `e_i = A_{i,i+1}^(0)`, `e_N = A_{1N}^(-1)`.
pub fn oan_generators(ons: &OnsagerAlgebra) -> Vec<OnsagerElement> {
    let n = ons.n;
    let mut out: Vec<OnsagerElement> = (1..n).map(|i| ons.a(i, i + 1, 0)).collect();
    out.push(ons.a(1, n, -1));
    out
}

/// `[e_i, [e_i, e_j]] = e_j` for cyclically adjacent `i, j` and
/// `[e_i, e_j] = 0` otherwise. `None` when `N < 3`.
pub fn check_oan(ons: &OnsagerAlgebra) -> Option<Outcome> {
    let n = ons.n;
    if n < 3 {
        return None;
    }
    let e = oan_generators(ons);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let adjacent = (i + 1) % n == j || (j + 1) % n == i;
            let inner = ons.bracket(&e[i], &e[j]);
            let (lhs, rhs, what) = if adjacent {
                (ons.bracket(&e[i], &inner), e[j].clone(), format!("[e_{0}, [e_{0}, e_{1}]] = e_{1}", i + 1, j + 1))
            } else {
                (inner, LinComb::zero(), format!("[e_{}, e_{}] = 0", i + 1, j + 1))
            };
            if let Err(d) = mismatch(&lhs.minus(&rhs), what) {
                return Some(Err(d));
            }
        }
    }
    Some(Ok(()))
}

/// `B(x) = 2 Σ_{i<j} E_ij ⊗ B_ji^(0) + 2 Σ_{n=1}^{cutoff} x^n E_ij ⊗ B_ji^(n)`.
pub fn build_b(ons: &OnsagerAlgebra, cutoff: i32) -> LieMatrix<OnsagerSym> {
    let n = ons.n;
    let two = ParamPoly::int(2);
    let mut out = Matrix::new(n);
    for i in 1..=n {
        for j in 1..=n {
            let mut v = LieLaurent::zero();
            if i < j {
                v.add_scaled_at(SMono::one(), &ons.canonical(j, i, 0), &two);
            }
            for k in 1..=cutoff {
                v.add_scaled_at(SMono::var(Var::X, k), &ons.canonical(j, i, k), &two);
            }
            if !v.is_zero() {
                out.set(i - 1, j - 1, v);
            }
        }
    }
    out
}

fn embed_matrix(ons: &OnsagerAlgebra, b: &LieMatrix<OnsagerSym>) -> LieMatrix<crate::loop_algebra::LoopSym> {
    b.map(|v| v.map(|s| ons.embed_sym(s)))
}

/// `B(x) = T^+(x) + θ1(T^+(x)) = T^+(x) + U T^-((-1)^N/x)^t U` through the
/// embedding, plus `tr B(x) = 0`.
pub fn check_bxg(ons: &OnsagerAlgebra, cutoff: i32) -> Result<Outcome> {
    let n = ons.n;
    let alg = ons.loop_algebra();
    let b = build_b(ons, cutoff);
    if let Some((m, lc)) = b.trace().iter().find(|(_, lc)| !lc.is_zero()) {
        return Ok(Err(Detail::from_residual(lc).with_monomial(m).with_info("trace of B(x)")));
    }
    let embedded = embed_matrix(ons, &b);
    let tp = build_t(&alg, Half::Plus, cutoff);
    let generator = tp.try_map(|v| {
        let mut out = LieLaurent::zero();
        for (m, lc) in v.iter() {
            out.add_at(*m, &alg.apply_theta(&Theta::Theta1, lc)?);
        }
        Ok(out)
    })?;
    let image = Laurent::var_pow(Var::X, -1).scale_int(parity_sign(n));
    let matrix = build_t(&alg, Half::Minus, cutoff).try_map(|v| v.substitute(Var::X, &image))?.transpose().map_indexed(
        |r, c, v| {
            if (r + c) % 2 == 0 {
                v.clone()
            } else {
                v.negated()
            }
        },
    );
    if let Err(d) = compare(&embedded, &tp.plus(&generator), n, 1, |_| true) {
        return Ok(Err(d.with_info("B(x) against T+ + θ1(T+)")));
    }
    Ok(compare(&embedded, &tp.plus(&matrix), n, 1, |_| true).map_err(|d| d.with_info("B(x) against matrix form")))
}

const XY: [Var; 2] = [Var::X, Var::Y];

fn reflection_clearing(n: usize) -> Laurent {
    let (x, y) = (Laurent::var(Var::X), Laurent::var(Var::Y));
    x.minus(&y).times(&x.times(&y).minus(&Laurent::int(parity_sign(n))))
}

/// `[B_1(x), B_2(y)] = [r̄_21(y,x), B_1(x)] + [B_2(y), r̄_12(x,y)]`, cleared by
/// `(x - y)(xy - (-1)^N)` and compared in the contamination-free window.
pub fn check_reflection_with(ons: &OnsagerAlgebra, cutoff: i32, rbar: &Builder) -> Result<Outcome> {
    let n = ons.n;
    let (x, y) = (Laurent::var(Var::X), Laurent::var(Var::Y));
    let q = reflection_clearing(n);
    let w = window(cutoff, &q, &XY)?;
    let bx = build_b(ons, cutoff);
    let by = rename(&bx, Var::X, Var::Y);
    let br = |a: &OnsagerSym, b: &OnsagerSym| ons.sym_bracket(a, b);
    let lhs = scale(&tensor_bracket(&bx, &by, n, &br), &q);
    let r21 = rbar(&y, &x)?.embed(&[2, 1], 2)?.cleared(&q)?;
    let r12 = rbar(&x, &y)?.cleared(&q)?;
    let b1 = bx.embed_legs(n, 1, &[1], 2)?;
    let b2 = by.embed_legs(n, 1, &[2], 2)?;
    let rhs = scalar_commutator(&r21, &b1).minus(&scalar_commutator(&r12, &b2));
    Ok(compare(&lhs, &rhs, n, 2, |m| in_window(m, &XY, w)))
}

pub fn check_reflection(ons: &OnsagerAlgebra, cutoff: i32) -> Result<Outcome> {
    let n = ons.n;
    check_reflection_with(ons, cutoff, &|a, b| build_rbar_closed(n, a, b))
}

/// Current `B_ij(v) = 2 Σ v^n B_ij^(n)`, with `n >= 0` when `i > j` and
/// `n >= 1` otherwise.
pub fn current(ons: &OnsagerAlgebra, i: usize, j: usize, var: Var, cutoff: i32) -> LieLaurent<OnsagerSym> {
    let mut v = LieLaurent::zero();
    let start = if i > j { 0 } else { 1 };
    for k in start..=cutoff {
        v.add_scaled_at(SMono::var(var, k), &ons.canonical(i, j, k), &ParamPoly::int(2));
    }
    v
}

/// Step function with `H(0) = 1/2`.
fn step(k: i64) -> Laurent {
    match k.signum() {
        1 => Laurent::one(),
        0 => Laurent::frac(1, 2),
        _ => Laurent::zero(),
    }
}

/// The current relations for all index quadruples, cleared by
/// `(x - y)(xy - (-1)^N)` and compared in the contamination-free window.
pub fn check_currents(ons: &OnsagerAlgebra, cutoff: i32) -> Result<Outcome> {
    let n = ons.n;
    let q = reflection_clearing(n);
    let w = window(cutoff, &q, &XY)?;
    let (x, y) = (Laurent::var(Var::X), Laurent::var(Var::Y));
    let xy = x.times(&y);
    let s = Laurent::int(parity_sign(n));
    let xmy = x.minus(&y);
    let xyms = xy.minus(&s);
    let cx = |i, j| current(ons, i, j, Var::X, cutoff);
    let cy = |i, j| current(ons, i, j, Var::Y, cutoff);
    let quads: Vec<(usize, usize, usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).flat_map(move |j| (1..=n).flat_map(move |k| (1..=n).map(move |l| (i, j, k, l)))))
        .collect();
    let results: Vec<Outcome> = quads
        .par_iter()
        .map(|&(i, j, k, l)| {
            let (i6, j6, k6, l6) = (i as i64, j as i64, k as i64, l as i64);
            let lhs = cx(i, j).bilinear(&cy(k, l), &|a: &OnsagerSym, b: &OnsagerSym| ons.sym_bracket(a, b));
            let lhs = lhs.scale_laurent(&q);
            let mut rhs = LieLaurent::zero();
            let kx = x.times(&step(k6 - l6)).plus(&y.times(&step(l6 - k6)));
            let ky = y.times(&step(i6 - j6)).plus(&x.times(&step(j6 - i6)));
            let two_xyms = xyms.scale_int(2);
            let two_xmy = xmy.scale_int(2);
            if j == k {
                let t = cx(i, l).scale_laurent(&kx).minus(&cy(i, l).scale_laurent(&ky));
                rhs.add_assign(&t.scale_laurent(&two_xyms));
            }
            if i == l {
                let t = cx(k, j).scale_laurent(&kx).minus(&cy(k, j).scale_laurent(&ky));
                rhs.sub_assign(&t.scale_laurent(&two_xyms));
            }
            let wx = xy.times(&step(l6 - k6)).plus(&s.times(&step(k6 - l6))).scale_int(sign_i(k6 + l6));
            let wy = xy.times(&step(j6 - i6)).plus(&s.times(&step(i6 - j6))).scale_int(sign_i(i6 + j6));
            if i == k {
                let t = cx(l, j).scale_laurent(&wx).minus(&cy(j, l).scale_laurent(&wy));
                rhs.sub_assign(&t.scale_laurent(&two_xmy));
            }
            if j == l {
                let t = cx(i, k).scale_laurent(&wx).minus(&cy(k, i).scale_laurent(&wy));
                rhs.add_assign(&t.scale_laurent(&two_xmy));
            }
            let mut diff = lhs;
            diff.sub_assign(&rhs);
            let diff = diff.filter(|m| in_window(m, &XY, w));
            let outcome = match diff.iter().find(|(_, lc)| !lc.is_zero()) {
                None => Ok(()),
                Some((m, lc)) => {
                    Err(Detail::from_residual(lc).with_monomial(m).with_info(format!("[B_{i}{j}(x), B_{k}{l}(y)]")))
                }
            };
            outcome
        })
        .collect();
    Ok(first_failure(results))
}

fn sign_i(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `B(x) = Σ E_ij ⊗ B_ji(x)`: the currents reassemble the FRT matrix.
pub fn check_currents_assemble(ons: &OnsagerAlgebra, cutoff: i32) -> Outcome {
    let n = ons.n;
    let b = build_b(ons, cutoff);
    let mut c = Matrix::new(n);
    for i in 1..=n {
        for j in 1..=n {
            c.set(i - 1, j - 1, current(ons, j, i, Var::X, cutoff));
        }
    }
    zero_check(&b.minus(&c), n, 1, |_| true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b0(i: u8, j: u8) -> OnsagerElement {
        LinComb::single(OnsagerSym::B0(i, j))
    }

    #[test]
    fn canonical_forms() {
        let ons = OnsagerAlgebra::new(3).unwrap();
        assert_eq!(ons.canonical(2, 1, 0), b0(1, 2));
        assert!(ons.canonical(1, 1, 0).is_zero());
        assert_eq!(ons.canonical(1, 2, -2), LinComb::single(OnsagerSym::B(2, 1, 2)));
        // idempotence on the basis
        for s in ons.basis(2) {
            let (i, j, n) = s.raw();
            assert_eq!(ons.canonical(i, j, n), LinComb::single(s));
        }
    }

    #[test]
    fn embedding_examples() {
        let ons = OnsagerAlgebra::new(3).unwrap();
        let alg = ons.loop_algebra();
        let e = |i, j, n| alg.inject(i, j, n).unwrap();
        assert_eq!(ons.embed(&b0(1, 2)), e(1, 2, 0).plus(&e(2, 1, 0)));
        assert_eq!(ons.embed(&b0(1, 3)), e(1, 3, 0).minus(&e(3, 1, 0)));
        assert_eq!(ons.bracket(&b0(1, 2), &b0(2, 3)), b0(1, 3));
        assert!(check_theta1_fixed(&ons, 3).is_ok());
    }

    #[test]
    fn presentations_n3() {
        let ons = OnsagerAlgebra::new(3).unwrap();
        assert!(check_presentation_agreement(&ons, 2).is_ok());
        assert!(check_presentation_agreement(&ons.corrupted(), 1).is_err());
        let ui = check_ui_relations(&ons, 2);
        assert!(ui.is_ok(), "{ui:?}");
        assert_eq!(check_oan(&ons), Some(Ok(())));
        assert_eq!(check_oan(&OnsagerAlgebra::new(2).unwrap()), None);
    }

    #[test]
    fn frt_form_n2() {
        let ons = OnsagerAlgebra::new(2).unwrap();
        assert!(check_bxg(&ons, 4).unwrap().is_ok());
        assert!(check_currents_assemble(&ons, 4).is_ok());
        let r = check_reflection(&ons, 5).unwrap();
        assert!(r.is_ok(), "{r:?}");
        let bad = check_reflection_with(&ons, 5, &|a, b| {
            crate::rmatrix::build_r_args(2, a, b, crate::rmatrix::RVariant::Standard)
        })
        .unwrap();
        assert!(bad.is_err());
        let c = check_currents(&ons, 5).unwrap();
        assert!(c.is_ok(), "{c:?}");
    }
}
