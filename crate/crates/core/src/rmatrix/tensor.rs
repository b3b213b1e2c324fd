use std::collections::BTreeMap;

use super::matrix::{digits, mul_with, scalar_mul, Matrix};
use crate::error::{Error, Result};
use crate::exactnum::{Laurent, Monomial, ParamPoly, RationalFn, Ring, SMono, Var};
use crate::report::{Detail, Outcome};

/// Denominator kept as a multiset of normalized factors, so that sums use
/// the least common multiple rather than the product.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Denom(BTreeMap<Laurent, u32>);

impl Denom {
    pub fn one() -> Self {
        Denom::default()
    }

    /// Splits `f` as `unit · g` with `unit` a signed monomial (or invertible
    /// constant) and `g` a normalized factor; returns `(g, 1/unit)`.
    fn normalize(f: &Laurent) -> Result<(Option<Laurent>, Laurent)> {
        if f.is_zero() {
            return Err(Error::Config("zero denominator factor".into()));
        }
        let content = f.monomial_content();
        let inv_content = SMono::one().div(&content).expect("laurent monomials are units");
        let g = f.mul_monomial(&inv_content);
        if let [(_, c)] = g.terms() {
            if let Some(r) = c.as_rational() {
                let unit = Laurent::monomial(inv_content).scale(&ParamPoly::rational(r.recip()));
                return Ok((None, unit));
            }
        }
        let lead_negative = g.leading().and_then(|(_, c)| c.leading().map(|(_, r)| r.is_negative())).unwrap_or(false);
        let mut mult = Laurent::monomial(inv_content);
        let g = if lead_negative {
            mult = mult.negated();
            g.negated()
        } else {
            g
        };
        Ok((Some(g), mult))
    }

    pub fn product(&self) -> Laurent {
        let mut out = Laurent::one();
        for (f, k) in &self.0 {
            out = out.times(&f.pow(*k));
        }
        out
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Laurent, &u32)> {
        self.0.iter()
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (f, k) in &o.0 {
            *out.0.entry(f.clone()).or_insert(0) += k;
        }
        out
    }

    fn lcm(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (f, k) in &o.0 {
            let e = out.0.entry(f.clone()).or_insert(0);
            *e = (*e).max(*k);
        }
        out
    }

    /// `self / sub` as a polynomial, for `sub` dividing `self` factorwise.
    fn cofactor(&self, sub: &Self) -> Laurent {
        let mut out = Laurent::one();
        for (f, k) in &self.0 {
            let have = sub.0.get(f).copied().unwrap_or(0);
            out = out.times(&f.pow(k - have));
        }
        out
    }
}

/// Square matrix on `(C^N)^{⊗legs}` with rational-function entries sharing
/// one denominator.
#[derive(Clone, Debug)]
pub struct TensorOperator {
    pub n: usize,
    pub legs: usize,
    pub num: Matrix<Laurent>,
    pub den: Denom,
}

impl TensorOperator {
    /// `num / Π den_factors`.
    pub fn new(n: usize, legs: usize, num: Matrix<Laurent>, den_factors: &[Laurent]) -> Result<Self> {
        let mut den = Denom::one();
        let mut mult = Laurent::one();
        for f in den_factors {
            let (g, m) = Denom::normalize(f)?;
            mult = mult.times(&m);
            if let Some(g) = g {
                *den.0.entry(g).or_insert(0) += 1;
            }
        }
        let num = if mult.is_one() { num } else { num.map(|v| v.times(&mult)) };
        Ok(TensorOperator { n, legs, num, den })
    }

    pub fn polynomial(n: usize, legs: usize, num: Matrix<Laurent>) -> Self {
        TensorOperator { n, legs, num, den: Denom::one() }
    }

    pub fn identity(n: usize, legs: usize) -> Self {
        let dim = n.pow(legs as u32);
        Self::polynomial(n, legs, Matrix::from_entries(dim, (0..dim).map(|i| ((i, i), Laurent::one()))))
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    fn check_shape(&self, o: &Self) {
        assert!(self.n == o.n && self.legs == o.legs, "tensor shape mismatch");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_shape(o);
        let den = self.den.lcm(&o.den);
        let a = self.num.map(|v| v.times(&den.cofactor(&self.den)));
        let ca = den.cofactor(&o.den);
        let b = o.num.map(|v| v.times(&ca));
        TensorOperator { n: self.n, legs: self.legs, num: a.plus(&b), den }
    }

    pub fn neg(&self) -> Self {
        TensorOperator { num: self.num.negated(), ..self.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_shape(o);
        TensorOperator { n: self.n, legs: self.legs, num: scalar_mul(&self.num, &o.num), den: self.den.mul(&o.den) }
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn scale(&self, p: &Laurent) -> Self {
        TensorOperator { num: self.num.map(|v| v.times(p)), ..self.clone() }
    }

    pub fn embed(&self, placement: &[usize], total: usize) -> Result<Self> {
        Ok(TensorOperator {
            n: self.n,
            legs: total,
            num: self.num.embed_legs(self.n, self.legs, placement, total)?,
            den: self.den.clone(),
        })
    }

    pub fn transpose_leg(&self, leg: usize) -> Result<Self> {
        Ok(TensorOperator { num: self.num.transpose_leg(self.n, self.legs, leg)?, ..self.clone() })
    }

    pub fn partial_trace(&self, leg: usize) -> Result<Self> {
        Ok(TensorOperator {
            n: self.n,
            legs: self.legs - 1,
            num: self.num.partial_trace(self.n, self.legs, leg)?,
            den: self.den.clone(),
        })
    }

    /// Multiplies entry `(r, c)` by `f(r, c)`; used for diagonal conjugations.
    pub fn conjugate_signs<F: Fn(&[usize], &[usize]) -> i64>(&self, f: F) -> Self {
        let (n, k) = (self.n, self.legs);
        let num = self.num.map_indexed(|r, c, v| v.scale_int(f(&digits(r, n, k), &digits(c, n, k))));
        TensorOperator { num, ..self.clone() }
    }

    pub fn substitute(&self, var: Var, image: &Laurent) -> Result<Self> {
        let num = self.num.try_map(|v| v.substitute(var, image))?;
        let mut factors = Vec::new();
        for (f, k) in self.den.factors() {
            let g = f.substitute(var, image)?;
            for _ in 0..*k {
                factors.push(g.clone());
            }
        }
        TensorOperator::new(self.n, self.legs, num, &factors)
    }

    pub fn entry_fn(&self, r: usize, c: usize) -> RationalFn {
        RationalFn { num: self.num.entry(r, c), den: self.den.product() }
    }

    /// Numerator after multiplying by `q`, which must be divisible by the
    /// denominator.
    pub fn cleared(&self, q: &Laurent) -> Result<Matrix<Laurent>> {
        let d = self.den.product();
        let co = q
            .div_exact(&d)
            .ok_or_else(|| Error::Config(format!("clearing polynomial {q} is not a multiple of denominator {d}")))?;
        Ok(self.num.map(|v| v.times(&co)))
    }

    /// Passes iff every entry vanishes identically.
    pub fn zero_check(&self) -> Outcome {
        laurent_matrix_zero(&self.num, self.n, self.legs)
    }
}

/// First nonzero entry of a Laurent matrix, as a report locator.
pub fn laurent_matrix_zero(m: &Matrix<Laurent>, n: usize, legs: usize) -> Outcome {
    match m.first_nonzero() {
        None => Ok(()),
        Some(((r, c), v)) => {
            let (mono, coeff) = v.terms()[0].clone();
            Err(Detail::scalar(&coeff)
                .with_entry(one_based(&digits(r, n, legs)), one_based(&digits(c, n, legs)))
                .with_monomial(&mono))
        }
    }
}

pub fn one_based(d: &[usize]) -> Vec<usize> {
    d.iter().map(|x| x + 1).collect()
}

/// Matrix-valued product helpers for scalar operators acting on Lie-valued
/// matrices.
pub fn scalar_times<S: crate::exactnum::Symbol>(
    a: &Matrix<Laurent>,
    b: &Matrix<crate::exactnum::LieLaurent<S>>,
) -> Matrix<crate::exactnum::LieLaurent<S>> {
    mul_with(a, b, |s, l| l.scale_laurent(s))
}

pub fn times_scalar<S: crate::exactnum::Symbol>(
    a: &Matrix<crate::exactnum::LieLaurent<S>>,
    b: &Matrix<Laurent>,
) -> Matrix<crate::exactnum::LieLaurent<S>> {
    mul_with(a, b, |l, s| l.scale_laurent(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn denominators_combine_by_lcm() {
        let x = Laurent::var(Var::X);
        let y = Laurent::var(Var::Y);
        let one = Matrix::from_entries(1, [((0, 0), Laurent::one())]);
        let a = TensorOperator::new(1, 1, one.clone(), &[x.minus(&y)]).unwrap();
        let b = TensorOperator::new(1, 1, one, &[y.minus(&x)]).unwrap();
        // 1/(x-y) + 1/(y-x) = 0
        let s = a.add(&b);
        assert!(s.zero_check().is_ok());
        assert_eq!(s.den.product(), x.minus(&y));
        // 1 - s/(xy) has the same factor as xy - s
        let f = Laurent::one().minus(&Laurent::var_pow(Var::X, -1).times(&Laurent::var_pow(Var::Y, -1)));
        let (g, _) = Denom::normalize(&f).unwrap();
        assert_eq!(g.unwrap(), x.times(&y).minus(&Laurent::one()));
    }
}
