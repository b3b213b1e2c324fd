//! The affine Lie algebra `a_{N-1}^(1)`: central element `c`, off-diagonal
//! loop generators `e_ij^(n)` and Cartan generators `h_i^(n)`.
//!
//! Diagonal `e_ii^(n)` are never stored; they are expanded in the Cartan
//! basis on construction, so the trace relation `Σ_i e_ii^(n) = 0` holds by
//! representation.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{LinComb, Param, ParamPoly, Rational, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LoopSym {
    Central,
    /// `e_ij^(n)`, `i != j`, 1-based.
    OffDiag(u8, u8, i32),
    /// `h_i^(n) = e_ii^(n) - e_{i+1,i+1}^(n)`, `1 <= i <= N-1`.
    Cartan(u8, i32),
}

impl LoopSym {
    pub fn level(&self) -> i32 {
        match self {
            LoopSym::Central => 0,
            LoopSym::OffDiag(_, _, n) | LoopSym::Cartan(_, n) => *n,
        }
    }
}

impl fmt::Display for LoopSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopSym::Central => write!(f, "c"),
            LoopSym::OffDiag(i, j, n) => write!(f, "e_{i}{j}^({n})"),
            LoopSym::Cartan(i, n) => write!(f, "h_{i}^({n})"),
        }
    }
}

pub type LoopElement = LinComb<LoopSym>;

/// Which involution of `a_{N-1}^(1)` to apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theta {
    Theta1,
    /// Only defined for even `N`; carries the sign `ε` (a constant ±1 or the
    /// formal parameter `eps`).
    Theta2(ParamPoly),
}

impl Theta {
    pub fn theta2_symbolic() -> Self {
        Theta::Theta2(ParamPoly::param(Param::Epsilon))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoopAlgebra {
    n: usize,
}

impl LoopAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=9).contains(&n) {
            return Err(Error::Config(format!("N must lie in 2..=9, got {n}")));
        }
        Ok(LoopAlgebra { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn central(&self) -> LoopElement {
        LinComb::single(LoopSym::Central)
    }

    /// `e_ij^(n)` in the canonical basis.
    pub fn inject(&self, i: usize, j: usize, level: i32) -> Result<LoopElement> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange(format!("e_{i}{j} with N = {}", self.n)));
        }
        Ok(self.e(i, j, level))
    }

    /// Unchecked `inject` for internal use with known-valid indices.
    pub(crate) fn e(&self, i: usize, j: usize, level: i32) -> LoopElement {
        if i != j {
            return LinComb::single(LoopSym::OffDiag(i as u8, j as u8, level));
        }
        let n = self.n as i64;
        let mut out = LinComb::zero();
        for k in 1..self.n {
            let c = if k < i { ParamPoly::frac(-(k as i64), n) } else { ParamPoly::frac(n - k as i64, n) };
            out.add_term(LoopSym::Cartan(k as u8, level), &c);
        }
        out
    }

    /// `s` written as raw `(i, j, level, coefficient)` generators.
    fn raw_terms(s: &LoopSym) -> Vec<(usize, usize, i32, i64)> {
        match *s {
            LoopSym::Central => vec![],
            LoopSym::OffDiag(i, j, n) => vec![(i as usize, j as usize, n, 1)],
            LoopSym::Cartan(i, n) => vec![(i as usize, i as usize, n, 1), (i as usize + 1, i as usize + 1, n, -1)],
        }
    }

    /// `[e_ij^(m), e_kl^(n)]` including the central term.
    fn raw_bracket(&self, (i, j, m): (usize, usize, i32), (k, l, n): (usize, usize, i32)) -> LoopElement {
        let mut out = LinComb::zero();
        if j == k {
            out.add_assign(&self.e(i, l, m + n));
        }
        if i == l {
            out.sub_assign(&self.e(k, j, m + n));
        }
        if m + n == 0 && m != 0 {
            let mut c = Rational::from_int(0);
            if i == l && j == k {
                c = c.plus(&Rational::from_int(1));
            }
            if i == j && k == l {
                c = c.minus(&Rational::new(1, self.n as i64));
            }
            if !c.is_zero() {
                out.add_term(LoopSym::Central, &ParamPoly::rational(c.times(&Rational::from_int(m as i64))));
            }
        }
        out
    }

    pub fn sym_bracket(&self, a: &LoopSym, b: &LoopSym) -> LoopElement {
        let mut out = LinComb::zero();
        for (i, j, m, ca) in Self::raw_terms(a) {
            for (k, l, n, cb) in Self::raw_terms(b) {
                let v = self.raw_bracket((i, j, m), (k, l, n));
                out.add_scaled(&v, &ParamPoly::int(ca * cb));
            }
        }
        out
    }

    pub fn bracket(&self, a: &LoopElement, b: &LoopElement) -> LoopElement {
        a.bilinear(b, |s, t| self.sym_bracket(s, t))
    }

    pub fn jacobi_residual(&self, a: &LoopElement, b: &LoopElement, c: &LoopElement) -> LoopElement {
        let mut out = self.bracket(a, &self.bracket(b, c));
        out.add_assign(&self.bracket(b, &self.bracket(c, a)));
        out.add_assign(&self.bracket(c, &self.bracket(a, b)));
        out
    }

    /// Canonical basis symbols with `|level| <= max_level`.
    pub fn basis(&self, max_level: i32) -> Vec<LoopSym> {
        let mut out = vec![LoopSym::Central];
        for n in -max_level..=max_level {
            for i in 1..=self.n {
                for j in 1..=self.n {
                    if i != j {
                        out.push(LoopSym::OffDiag(i as u8, j as u8, n));
                    }
                }
            }
            for i in 1..self.n {
                out.push(LoopSym::Cartan(i as u8, n));
            }
        }
        out.sort();
        out
    }

    /// Image of raw `e_ij^(n)` under `θ`.
    fn theta_raw(&self, theta: &Theta, i: usize, j: usize, level: i32) -> Result<LoopElement> {
        let n = self.n as i64;
        match theta {
            Theta::Theta1 => {
                let sign = ParamPoly::sign(n * level as i64 + (i + j + 1) as i64);
                Ok(self.e(j, i, -level).scaled(&sign))
            }
            Theta::Theta2(eps) => {
                if !self.n.is_multiple_of(2) {
                    return Err(Error::Unsupported(format!("the second involution needs even N, got {}", self.n)));
                }
                let half = self.n / 2;
                let bar = |k: usize| if k <= half { k + half } else { k - half };
                let upper_i = i <= half;
                let upper_j = j <= half;
                let mut out;
                if upper_i == upper_j {
                    out = self.e(bar(j), bar(i), -level).negated();
                    if i == j && level == 0 {
                        let alpha = if upper_i { 1 } else { -1 };
                        out.add_term(LoopSym::Central, &ParamPoly::frac(alpha, 2));
                    }
                } else if upper_i {
                    out = self.e(bar(j), bar(i), -level + 1).scaled(&eps.negated());
                } else {
                    out = self.e(bar(j), bar(i), -level - 1).scaled(&eps.negated());
                }
                Ok(out)
            }
        }
    }

    pub fn apply_theta_sym(&self, theta: &Theta, s: &LoopSym) -> Result<LoopElement> {
        if *s == LoopSym::Central {
            return Ok(self.central().negated());
        }
        let mut out = LinComb::zero();
        for (i, j, n, c) in Self::raw_terms(s) {
            out.add_scaled(&self.theta_raw(theta, i, j, n)?, &ParamPoly::int(c));
        }
        Ok(out)
    }

    pub fn apply_theta(&self, theta: &Theta, a: &LoopElement) -> Result<LoopElement> {
        let mut out = LinComb::zero();
        for (s, c) in a.iter() {
            out.add_scaled(&self.apply_theta_sym(theta, s)?, c);
        }
        Ok(out)
    }

    pub fn apply_theta1(&self, a: &LoopElement) -> LoopElement {
        self.apply_theta(&Theta::Theta1, a).expect("theta1 is defined for every N")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(g: &LoopAlgebra, i: usize, j: usize, n: i32) -> LoopElement {
        g.inject(i, j, n).unwrap()
    }

    #[test]
    fn cartan_inversion() {
        let g2 = LoopAlgebra::new(2).unwrap();
        assert_eq!(e(&g2, 1, 1, 0), LinComb::term(LoopSym::Cartan(1, 0), ParamPoly::frac(1, 2)));
        let g3 = LoopAlgebra::new(3).unwrap();
        let want = LinComb::from_terms([
            (LoopSym::Cartan(1, 0), ParamPoly::frac(-1, 3)),
            (LoopSym::Cartan(2, 0), ParamPoly::frac(1, 3)),
        ]);
        assert_eq!(e(&g3, 2, 2, 0), want);
        for n in 2..=5 {
            let g = LoopAlgebra::new(n).unwrap();
            let mut sum = LinComb::zero();
            for i in 1..=n {
                sum.add_assign(&e(&g, i, i, 3));
            }
            assert!(sum.is_zero());
            // h_i = e_ii - e_{i+1,i+1}
            for i in 1..n {
                let h = e(&g, i, i, 1).minus(&e(&g, i + 1, i + 1, 1));
                assert_eq!(h, LinComb::single(LoopSym::Cartan(i as u8, 1)));
            }
        }
        assert!(g3.inject(4, 1, 0).is_err());
    }

    #[test]
    fn bracket_examples() {
        let g = LoopAlgebra::new(3).unwrap();
        assert_eq!(g.bracket(&e(&g, 1, 2, 0), &e(&g, 2, 3, 0)), e(&g, 1, 3, 0));
        let want = e(&g, 1, 1, 0).minus(&e(&g, 2, 2, 0)).plus(&g.central());
        assert_eq!(g.bracket(&e(&g, 1, 2, 1), &e(&g, 2, 1, -1)), want);
        assert!(g.bracket(&g.central(), &e(&g, 1, 3, 5)).is_zero());
    }

    #[test]
    fn jacobi_examples() {
        let g = LoopAlgebra::new(3).unwrap();
        assert!(g.jacobi_residual(&e(&g, 1, 2, 0), &e(&g, 2, 3, 0), &e(&g, 3, 1, 0)).is_zero());
        assert!(g.jacobi_residual(&g.central(), &e(&g, 1, 2, 4), &e(&g, 2, 1, -4)).is_zero());
    }

    #[test]
    fn exhaustive_jacobi_small() {
        for n in 2..=3 {
            let g = LoopAlgebra::new(n).unwrap();
            let basis = g.basis(2);
            let el: Vec<LoopElement> = basis.iter().map(|s| LinComb::single(*s)).collect();
            for a in 0..el.len() {
                for b in a + 1..el.len() {
                    for c in b + 1..el.len() {
                        let r = g.jacobi_residual(&el[a], &el[b], &el[c]);
                        assert!(r.is_zero(), "N={n} {} {} {}: {r}", basis[a], basis[b], basis[c]);
                    }
                }
            }
        }
    }

    #[test]
    fn antisymmetry_and_levels() {
        for n in 2..=5 {
            let g = LoopAlgebra::new(n).unwrap();
            let basis = g.basis(3);
            for a in &basis {
                for b in &basis {
                    let ab = g.sym_bracket(a, b);
                    assert!(ab.plus(&g.sym_bracket(b, a)).is_zero());
                    for (s, _) in ab.iter() {
                        assert!(*s == LoopSym::Central || s.level() == a.level() + b.level());
                    }
                }
            }
        }
    }

    #[test]
    fn theta_examples() {
        let g = LoopAlgebra::new(3).unwrap();
        assert_eq!(g.apply_theta1(&e(&g, 1, 2, 1)), e(&g, 2, 1, -1).negated());
        assert_eq!(g.apply_theta1(&g.central()), g.central().negated());

        let g2 = LoopAlgebra::new(2).unwrap();
        let t = Theta::Theta2(ParamPoly::int(1));
        assert_eq!(g2.apply_theta(&t, &e(&g2, 1, 2, 0)).unwrap(), e(&g2, 1, 2, 1).negated());
        let want = e(&g2, 2, 2, 0).negated().plus(&g.central().scaled(&ParamPoly::frac(1, 2)));
        assert_eq!(g2.apply_theta(&t, &e(&g2, 1, 1, 0)).unwrap(), want);
        assert!(g.apply_theta(&t, &e(&g, 1, 2, 0)).is_err());
    }
}
