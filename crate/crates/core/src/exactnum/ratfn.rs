use std::fmt;

use super::laurent::{Laurent, Var};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Unreduced quotient of Laurent polynomials. No gcd is ever taken; equality
/// is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFn {
    pub num: Laurent,
    pub den: Laurent,
}

impl RationalFn {
    pub fn new(num: Laurent, den: Laurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Config("zero denominator".into()));
        }
        Ok(RationalFn { num, den })
    }

    pub fn poly(num: Laurent) -> Self {
        RationalFn { num, den: Laurent::one() }
    }

    pub fn zero() -> Self {
        Self::poly(Laurent::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RationalFn { num: self.num.plus(&o.num), den: self.den.clone() };
        }
        RationalFn { num: self.num.times(&o.den).plus(&o.num.times(&self.den)), den: self.den.times(&o.den) }
    }

    pub fn neg(&self) -> Self {
        RationalFn { num: self.num.negated(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        RationalFn { num: self.num.times(&o.num), den: self.den.times(&o.den) }
    }

    pub fn derivative(&self, v: Var) -> Self {
        RationalFn {
            num: self.num.derivative(v).times(&self.den).minus(&self.num.times(&self.den.derivative(v))),
            den: self.den.times(&self.den),
        }
    }

    pub fn substitute(&self, v: Var, image: &Laurent) -> Result<Self> {
        Ok(RationalFn { num: self.num.substitute(v, image)?, den: self.den.substitute(v, image)? })
    }

    /// `num·o.den − o.num·den`; zero iff the two functions are equal.
    pub fn cross_residual(&self, o: &Self) -> Laurent {
        self.num.times(&o.den).minus(&o.num.times(&self.den))
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, o: &Self) -> bool {
        self.cross_residual(o).is_zero()
    }
}

impl Eq for RationalFn {}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_rule() {
        let x = Laurent::var(Var::X);
        let one = Laurent::one();
        let f = RationalFn::new(one.plus(&x), one.minus(&x)).unwrap();
        let want = RationalFn::new(Laurent::int(2), one.minus(&x).pow(2)).unwrap();
        assert_eq!(f.derivative(Var::X), want);
        assert_eq!(RationalFn::poly(x.clone()).derivative(Var::X), RationalFn::poly(one));
    }

    #[test]
    fn equality_ignores_common_factors() {
        let x = Laurent::var(Var::X);
        let y = Laurent::var(Var::Y);
        let a = RationalFn::new(x.times(&y), y.times(&y)).unwrap();
        let b = RationalFn::new(x, y).unwrap();
        assert_eq!(a, b);
        assert!(RationalFn::new(Laurent::one(), Laurent::zero()).is_err());
    }
}
