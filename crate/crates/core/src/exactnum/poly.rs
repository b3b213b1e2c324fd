//! Sparse multivariate polynomials, generic over the monomial monoid and the
//! coefficient ring.
//!
//! Terms are kept in a vector sorted by monomial with no zero coefficients,
//! so structural equality is ring equality.

use std::fmt::{self, Debug};
use std::hash::Hash;

use super::ring::Ring;

pub trait Monomial: Clone + Ord + Eq + Hash + Debug + Send + Sync {
    fn one() -> Self;
    fn is_one(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    /// Quotient in the monoid (always defined for Laurent monomials).
    fn div(&self, o: &Self) -> Option<Self>;
    /// Componentwise minimum of exponents.
    fn gcd(&self, o: &Self) -> Self;
    /// `o` divides `self` with non-negative quotient exponents.
    fn is_poly_multiple_of(&self, o: &Self) -> bool;
    fn fmt_mono(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<M, C> {
    terms: Vec<(M, C)>,
}

impl<M: Monomial, C: Ring> Poly<M, C> {
    pub fn from_terms<I: IntoIterator<Item = (M, C)>>(it: I) -> Self {
        let mut terms: Vec<(M, C)> = it.into_iter().collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Self::from_sorted_with_duplicates(terms)
    }

    fn from_sorted_with_duplicates(terms: Vec<(M, C)>) -> Self {
        let mut out: Vec<(M, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => lc.add_assign_ref(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn term(m: M, c: C) -> Self {
        if c.is_zero() {
            Self { terms: vec![] }
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    pub fn constant(c: C) -> Self {
        Self::term(M::one(), c)
    }

    pub fn monomial(m: M) -> Self {
        Self::term(m, C::one())
    }

    pub fn terms(&self) -> &[(M, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(M, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> C {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Constant coefficient.
    pub fn constant_term(&self) -> C {
        self.coeff(&M::one())
    }

    pub fn leading(&self) -> Option<&(M, C)> {
        self.terms.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self { terms: vec![] };
        }
        Self { terms: self.terms.iter().map(|(m, k)| (m.clone(), k.times(c))).filter(|(_, k)| !k.is_zero()).collect() }
    }

    pub fn mul_monomial(&self, mono: &M) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())))
    }

    pub fn map_monomials<F: Fn(&M) -> (M, C)>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let (m2, k) = f(m);
            (m2, c.times(&k))
        }))
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &o.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Less => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((mb.clone(), if negate { cb.negated() } else { cb.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { ca.minus(cb) } else { ca.plus(cb) };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(o.terms[j..].iter().map(|(m, c)| (m.clone(), if negate { c.negated() } else { c.clone() })));
        Poly { terms: out }
    }

    /// Componentwise-minimum monomial over the support.
    pub fn monomial_content(&self) -> M {
        let mut it = self.terms.iter();
        match it.next() {
            None => M::one(),
            Some((m0, _)) => it.fold(m0.clone(), |acc, (m, _)| acc.gcd(m)),
        }
    }

    fn poly_div_exact(f: &Self, g: &Self) -> Option<Self> {
        let (gm, gc) = g.leading()?.clone();
        let mut rem = f.clone();
        let mut quot = Vec::new();
        // Each step strictly lowers the leading monomial; the bound only guards
        // against monoids whose order is not multiplicative.
        let mut budget = 1_000_000usize;
        while let Some((fm, fc)) = rem.leading().cloned() {
            if !fm.is_poly_multiple_of(&gm) || budget == 0 {
                return None;
            }
            budget -= 1;
            let qm = fm.div(&gm)?;
            let qc = fc.div_exact(&gc)?;
            let step = g.mul_monomial(&qm).scale(&qc);
            rem = rem.merge(&step, true);
            quot.push((qm, qc));
        }
        Some(Self::from_terms(quot))
    }
}

impl<M: Monomial, C: Ring + CoeffDisplay> Ring for Poly<M, C> {
    fn zero() -> Self {
        Poly { terms: vec![] }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }
    fn plus(&self, o: &Self) -> Self {
        if o.terms.is_empty() {
            return self.clone();
        }
        if self.terms.is_empty() {
            return o.clone();
        }
        self.merge(o, false)
    }
    fn minus(&self, o: &Self) -> Self {
        if o.terms.is_empty() {
            return self.clone();
        }
        self.merge(o, true)
    }
    fn times(&self, o: &Self) -> Self {
        if self.terms.is_empty() || o.terms.is_empty() {
            return Self::zero();
        }
        if o.terms.len() == 1 && o.terms[0].0.is_one() {
            return self.scale(&o.terms[0].1);
        }
        if self.terms.len() == 1 && self.terms[0].0.is_one() {
            return o.scale(&self.terms[0].1);
        }
        let mut prod = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                prod.push((ma.mul(mb), ca.times(cb)));
            }
        }
        prod.sort_by(|a, b| a.0.cmp(&b.0));
        Self::from_sorted_with_duplicates(prod)
    }
    fn negated(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negated())).collect() }
    }
    /// Exact division. Monomial content is split off first so that the same
    /// routine decides divisibility both for polynomials and for Laurent
    /// polynomials (where every monomial is a unit).
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mf = self.monomial_content();
        let mg = o.monomial_content();
        let shift = mf.div(&mg)?;
        let f0 = self.map_monomials(|m| (m.div(&mf).expect("content divides"), C::one()));
        let g0 = o.map_monomials(|m| (m.div(&mg).expect("content divides"), C::one()));
        let q0 = Self::poly_div_exact(&f0, &g0)?;
        Some(q0.mul_monomial(&shift))
    }
    fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_constant())
    }
    fn add_assign_ref(&mut self, o: &Self) {
        if o.terms.is_empty() {
            return;
        }
        *self = self.merge(o, false);
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        if o.terms.is_empty() {
            return;
        }
        *self = self.merge(o, true);
    }
}

/// Coefficients print bare when they are a single constant, otherwise
/// parenthesised.
pub trait CoeffDisplay {
    fn fmt_coeff(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    /// Renders as a single signed factor (no internal `+`).
    fn is_atomic(&self) -> bool;
    fn is_neg_atomic(&self) -> bool;
}

impl<M: Monomial, C: Ring + CoeffDisplay> fmt::Display for Poly<M, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let atomic = c.is_atomic();
            let neg = atomic && c.is_neg_atomic();
            if idx > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let shown = if neg { c.negated() } else { c.clone() };
            if m.is_one() {
                if atomic {
                    shown.fmt_coeff(f)?;
                } else {
                    write!(f, "(")?;
                    shown.fmt_coeff(f)?;
                    write!(f, ")")?;
                }
            } else {
                if !shown.is_one() {
                    if atomic {
                        shown.fmt_coeff(f)?;
                    } else {
                        write!(f, "(")?;
                        shown.fmt_coeff(f)?;
                        write!(f, ")")?;
                    }
                    write!(f, "*")?;
                }
                m.fmt_mono(f)?;
            }
        }
        Ok(())
    }
}

impl<M: Monomial, C: Ring + CoeffDisplay> Debug for Poly<M, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl CoeffDisplay for super::Rational {
    fn fmt_coeff(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
    fn is_atomic(&self) -> bool {
        true
    }
    fn is_neg_atomic(&self) -> bool {
        self.is_negative()
    }
}

impl<M: Monomial, C: Ring + CoeffDisplay> CoeffDisplay for Poly<M, C> {
    fn fmt_coeff(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
    fn is_atomic(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_atomic()
    }
    fn is_neg_atomic(&self) -> bool {
        self.is_atomic() && self.terms[0].1.is_neg_atomic()
    }
}
