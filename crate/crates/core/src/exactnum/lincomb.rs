//! Formal linear combinations of basis symbols and their Laurent-polynomial
//! extensions (Lie-algebra-valued generating functions).

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};

use super::laurent::{Laurent, SMono, Var};
use super::param::ParamPoly;
use super::poly::{CoeffDisplay, Monomial};
use super::ring::Ring;
use crate::error::Result;

pub trait Symbol: Clone + Ord + Debug + Display + Send + Sync {}
impl<T: Clone + Ord + Debug + Display + Send + Sync> Symbol for T {}

/// Sparse vector `Σ c_s · s` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinComb<S: Ord>(BTreeMap<S, ParamPoly>);

impl<S: Ord> Default for LinComb<S> {
    fn default() -> Self {
        LinComb(BTreeMap::new())
    }
}

impl<S: Symbol> LinComb<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(s: S) -> Self {
        Self::term(s, ParamPoly::one())
    }

    pub fn term(s: S, c: ParamPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(s, &c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (S, ParamPoly)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (s, c) in it {
            out.add_term(s, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&S, &ParamPoly)> {
        self.0.iter()
    }

    pub fn coeff(&self, s: &S) -> ParamPoly {
        self.0.get(s).cloned().unwrap_or_else(ParamPoly::zero)
    }

    pub fn add_term(&mut self, s: S, c: &ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&s) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.0.remove(&s);
                }
            }
            None => {
                self.0.insert(s, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Self, c: &ParamPoly) {
        if c.is_zero() {
            return;
        }
        for (s, v) in &o.0 {
            self.add_term(s.clone(), &v.times(c));
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (s, v) in &o.0 {
            self.add_term(s.clone(), v);
        }
    }

    pub fn sub_assign(&mut self, o: &Self) {
        for (s, v) in &o.0 {
            self.add_term(s.clone(), &v.negated());
        }
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn minus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(o);
        out
    }

    pub fn scaled(&self, c: &ParamPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb(self.0.iter().map(|(s, v)| (s.clone(), v.times(c))).filter(|(_, v)| !v.is_zero()).collect())
    }

    pub fn negated(&self) -> Self {
        LinComb(self.0.iter().map(|(s, v)| (s.clone(), v.negated())).collect())
    }

    /// Linear extension of a map on symbols.
    pub fn map<T: Symbol, F: Fn(&S) -> LinComb<T>>(&self, f: F) -> LinComb<T> {
        let mut out = LinComb::zero();
        for (s, c) in &self.0 {
            out.add_scaled(&f(s), c);
        }
        out
    }

    /// Bilinear extension of a map on symbol pairs.
    pub fn bilinear<U: Symbol, T: Symbol, F: Fn(&S, &U) -> LinComb<T>>(&self, o: &LinComb<U>, f: F) -> LinComb<T> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.0 {
            for (b, cb) in &o.0 {
                let v = f(a, b);
                if !v.is_zero() {
                    out.add_scaled(&v, &ca.times(cb));
                }
            }
        }
        out
    }

    pub fn first(&self) -> Option<(&S, &ParamPoly)> {
        self.0.iter().next()
    }
}

impl<S: Symbol> Display for LinComb<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (s, c)) in self.0.iter().enumerate() {
            let neg = c.is_neg_atomic();
            let shown = if neg { c.negated() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !shown.is_one() {
                if shown.is_atomic() {
                    write!(f, "{shown}*")?;
                } else {
                    write!(f, "({shown})*")?;
                }
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl<S: Symbol> Debug for LinComb<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

/// Laurent polynomial in the spectral variables whose coefficients are
/// linear combinations of symbols.
#[derive(Clone, PartialEq, Eq)]
pub struct LieLaurent<S: Ord>(BTreeMap<SMono, LinComb<S>>);

impl<S: Ord> Default for LieLaurent<S> {
    fn default() -> Self {
        LieLaurent(BTreeMap::new())
    }
}

impl<S: Symbol> LieLaurent<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(m: SMono, v: LinComb<S>) -> Self {
        let mut out = Self::zero();
        out.add_at(m, &v);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SMono, &LinComb<S>)> {
        self.0.iter()
    }

    pub fn coeff(&self, m: &SMono) -> LinComb<S> {
        self.0.get(m).cloned().unwrap_or_default()
    }

    pub fn add_at(&mut self, m: SMono, v: &LinComb<S>) {
        if v.is_zero() {
            return;
        }
        let slot = self.0.entry(m).or_default();
        slot.add_assign(v);
        if slot.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn add_scaled_at(&mut self, m: SMono, v: &LinComb<S>, c: &ParamPoly) {
        if v.is_zero() || c.is_zero() {
            return;
        }
        let slot = self.0.entry(m).or_default();
        slot.add_scaled(v, c);
        if slot.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (m, v) in &o.0 {
            self.add_at(*m, v);
        }
    }

    pub fn sub_assign(&mut self, o: &Self) {
        for (m, v) in &o.0 {
            self.add_at(*m, &v.negated());
        }
    }

    pub fn negated(&self) -> Self {
        LieLaurent(self.0.iter().map(|(m, v)| (*m, v.negated())).collect())
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn minus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(o);
        out
    }

    pub fn scale_param(&self, c: &ParamPoly) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.0 {
            out.add_scaled_at(*m, v, c);
        }
        out
    }

    /// Product with a scalar Laurent polynomial.
    pub fn scale_laurent(&self, p: &Laurent) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.0 {
            for (pm, pc) in p.terms() {
                out.add_scaled_at(m.mul(pm), v, pc);
            }
        }
        out
    }

    pub fn map<T: Symbol, F: Fn(&S) -> LinComb<T>>(&self, f: F) -> LieLaurent<T> {
        let mut out = LieLaurent::zero();
        for (m, v) in &self.0 {
            out.add_at(*m, &v.map(&f));
        }
        out
    }

    pub fn map_monomials<F: Fn(&SMono) -> (SMono, ParamPoly)>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.0 {
            let (m2, c) = f(m);
            out.add_scaled_at(m2, v, &c);
        }
        out
    }

    /// Coefficient-wise bilinear product (bracket) of two generating functions.
    pub fn bilinear<U: Symbol, T: Symbol, F: Fn(&S, &U) -> LinComb<T>>(
        &self,
        o: &LieLaurent<U>,
        f: &F,
    ) -> LieLaurent<T> {
        let mut out = LieLaurent::zero();
        for (ma, va) in &self.0 {
            for (mb, vb) in o.iter() {
                out.add_at(ma.mul(mb), &va.bilinear(vb, f));
            }
        }
        out
    }

    pub fn substitute(&self, v: Var, image: &Laurent) -> Result<Self> {
        let mut out = Self::zero();
        for (m, lc) in &self.0 {
            let moved = Laurent::monomial(*m).substitute(v, image)?;
            for (m2, c) in moved.terms() {
                out.add_scaled_at(*m2, lc, c);
            }
        }
        Ok(out)
    }

    pub fn rename(&self, from: Var, to: Var) -> Self {
        self.substitute(from, &Laurent::var(to)).expect("variable is a monomial")
    }

    /// Keeps only monomials accepted by `keep`.
    pub fn filter<F: Fn(&SMono) -> bool>(&self, keep: F) -> Self {
        LieLaurent(self.0.iter().filter(|(m, _)| keep(m)).map(|(m, v)| (*m, v.clone())).collect())
    }
}

impl<S: Symbol> Debug for LieLaurent<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(m, v)| format!("[{}]·({v})", Laurent::monomial(*m))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_entries() {
        let mut a = LinComb::single("a".to_string());
        a.add_term("b".to_string(), &ParamPoly::int(2));
        a.add_term("a".to_string(), &ParamPoly::int(-1));
        assert_eq!(a.len(), 1);
        assert_eq!(a.to_string(), "2*b");
        let mut s = LieLaurent::term(SMono::xy(1, 0), a.clone());
        s.sub_assign(&LieLaurent::term(SMono::xy(1, 0), a));
        assert!(s.is_zero());
    }

    #[test]
    fn prints_signs() {
        let a = LinComb::from_terms([
            ("p".to_string(), ParamPoly::int(-1)),
            ("q".to_string(), ParamPoly::frac(1, 2)),
            ("r".to_string(), ParamPoly::param(super::super::Param::Alpha)),
        ]);
        assert_eq!(a.to_string(), "-p + 1/2*q + (alpha)*r");
    }
}
