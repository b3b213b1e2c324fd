//! Laurent polynomials in the spectral variables with parameter-polynomial
//! coefficients.

use std::fmt;

use super::param::ParamPoly;
use super::poly::{Monomial, Poly};
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

pub const NVARS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    X1,
    X2,
    X3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::X1, Var::X2, Var::X3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::X3 => "x3",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over `Var::ALL`; exponents may be negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SMono(pub [i32; NVARS]);

impl SMono {
    pub fn var(v: Var, k: i32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = k;
        SMono(e)
    }

    pub fn xy(a: i32, b: i32) -> Self {
        SMono([a, b, 0, 0, 0])
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn with_exp(mut self, v: Var, k: i32) -> Self {
        self.0[v.index()] = k;
        self
    }

    /// Non-zero exponents as `(name, exponent)` pairs, in variable order.
    pub fn pairs(&self) -> Vec<(String, i32)> {
        Var::ALL.iter().filter(|v| self.exp(**v) != 0).map(|v| (v.name().to_string(), self.exp(*v))).collect()
    }
}

impl Monomial for SMono {
    fn one() -> Self {
        SMono([0; NVARS])
    }
    fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }
    fn mul(&self, o: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        SMono(e)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a -= b;
        }
        Some(SMono(e))
    }
    fn gcd(&self, o: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        SMono(e)
    }
    fn is_poly_multiple_of(&self, o: &Self) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a >= b)
    }
    fn fmt_mono(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let k = self.exp(v);
            if k == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{k}")?;
            }
        }
        Ok(())
    }
}

/// Laurent polynomial in the spectral variables over `ParamPoly`.
pub type Laurent = Poly<SMono, ParamPoly>;

impl Laurent {
    pub fn var(v: Var) -> Self {
        Poly::monomial(SMono::var(v, 1))
    }

    pub fn var_pow(v: Var, k: i32) -> Self {
        Poly::monomial(SMono::var(v, k))
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(ParamPoly::int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Poly::constant(ParamPoly::frac(n, d))
    }

    pub fn scalar(p: ParamPoly) -> Self {
        Poly::constant(p)
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&ParamPoly::int(n))
    }

    /// `(min, max)` exponent of `v` over the support; `(0, 0)` for zero.
    pub fn degree_range(&self, v: Var) -> (i32, i32) {
        let mut it = self.terms().iter().map(|(m, _)| m.exp(v));
        match it.next() {
            None => (0, 0),
            Some(k) => it.fold((k, k), |(lo, hi), e| (lo.min(e), hi.max(e))),
        }
    }

    /// Replaces `var` by `image`, which must be a single monomial with
    /// coefficient ±1 (the empty monomial specializes `var` to ±1).
    pub fn substitute(&self, var: Var, image: &Laurent) -> Result<Laurent> {
        let (img_mono, sign) = match image.terms() {
            [(m, c)] => match c.as_rational() {
                Some(r) if r.is_one() => (*m, 1),
                Some(r) if r == Rational::from_int(-1) => (*m, -1),
                _ => return Err(Error::Unsupported(format!("substitution image `{image}` is not a signed monomial"))),
            },
            _ => return Err(Error::Unsupported(format!("substitution image `{image}` is not a signed monomial"))),
        };
        Ok(self.map_monomials(|m| {
            let k = m.exp(var);
            let mut out = m.with_exp(var, 0);
            for (e, i) in out.0.iter_mut().zip(img_mono.0.iter()) {
                *e += i * k;
            }
            let c = if sign < 0 { ParamPoly::sign(k as i64) } else { ParamPoly::one() };
            (out, c)
        }))
    }

    /// Renames `from` to `to` (infallible special case of `substitute`).
    pub fn rename(&self, from: Var, to: Var) -> Laurent {
        self.substitute(from, &Laurent::var(to)).expect("variable is a monomial")
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> Laurent {
        Poly::from_terms(self.terms().iter().filter_map(|(m, c)| {
            let k = m.exp(v);
            (k != 0).then(|| (m.with_exp(v, k - 1), c.scale(&Rational::from_int(k as i64))))
        }))
    }

    /// `x ∂/∂x`, which keeps monomials in place.
    pub fn euler(&self, v: Var) -> Laurent {
        Poly::from_terms(self.terms().iter().map(|(m, c)| (*m, c.scale(&Rational::from_int(m.exp(v) as i64)))))
    }

    pub fn pow(&self, k: u32) -> Laurent {
        let mut out = Laurent::one();
        for _ in 0..k {
            out = out.times(self);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Laurent {
        Laurent::var(Var::X)
    }
    fn y() -> Laurent {
        Laurent::var(Var::Y)
    }

    #[test]
    fn difference_of_squares() {
        let p = x().minus(&y()).times(&x().plus(&y()));
        assert_eq!(p, x().times(&x()).minus(&y().times(&y())));
        assert!(x().plus(&Laurent::one()).times(&Laurent::zero()).is_empty());
    }

    #[test]
    fn clears_laurent_denominator() {
        let a = Laurent::scalar(ParamPoly::param(super::super::Param::Alpha));
        let p = a.plus(&x()).minus(&Laurent::var_pow(Var::X, -1)).times(&x());
        let want = a.times(&x()).plus(&x().times(&x())).minus(&Laurent::one());
        assert_eq!(p, want);
        assert_eq!(p.to_string(), "-1 + (alpha)*x + x^2");
    }

    #[test]
    fn substitution_with_sign() {
        let inv = Laurent::var_pow(Var::X, -1);
        let p = x().times(&x());
        assert_eq!(p.substitute(Var::X, &inv).unwrap(), Laurent::var_pow(Var::X, -2));
        let minus_inv = inv.negated();
        assert_eq!(x().substitute(Var::X, &minus_inv).unwrap(), minus_inv);
        assert!(x().substitute(Var::X, &x().plus(&y())).is_err());
        assert!(x().substitute(Var::X, &x().scale_int(2)).is_err());
    }

    #[test]
    fn folded_argument_map() {
        // x y under x -> -(x y)^{-1} gives -x^{-1}
        let img = Laurent::var_pow(Var::X, -1).times(&Laurent::var_pow(Var::Y, -1)).negated();
        let p = x().times(&y());
        assert_eq!(p.substitute(Var::X, &img).unwrap(), Laurent::var_pow(Var::X, -1).negated());
    }

    #[test]
    fn derivative_and_degree() {
        let p = x().pow(3).plus(&Laurent::var_pow(Var::X, -2));
        let d = p.derivative(Var::X);
        assert_eq!(d, x().pow(2).scale_int(3).plus(&Laurent::var_pow(Var::X, -3).scale_int(-2)));
        assert_eq!(p.degree_range(Var::X), (-2, 3));
        assert_eq!(Laurent::int(7).derivative(Var::X), Laurent::zero());
    }
}
