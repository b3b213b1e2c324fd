//! Incremental sparse row reduction over ℚ[α] with constant pivots.
//!
//! A row is a pair `(k, w)` of linear combinations: unknowns `k` and a
//! payload `w`. The reducer keeps the rows in reduced echelon form on the
//! unknowns, so each pivot row contains its pivot with coefficient 1 and no
//! other pivot.

use std::collections::BTreeMap;

use crate::exactnum::{LinComb, ParamPoly, Ring, Symbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert<K: Symbol, W: Symbol> {
    Pivot(K),
    Redundant,
    /// The unknowns cancel but the payload does not.
    Inconsistent(LinComb<W>),
    /// Every remaining coefficient involves a parameter.
    NoConstantPivot(LinComb<K>, LinComb<W>),
}

#[derive(Clone, Debug)]
pub struct Reducer<K: Symbol, W: Symbol> {
    rows: BTreeMap<K, (LinComb<K>, LinComb<W>)>,
}

impl<K: Symbol, W: Symbol> Default for Reducer<K, W> {
    fn default() -> Self {
        Reducer { rows: BTreeMap::new() }
    }
}

impl<K: Symbol, W: Symbol> Reducer<K, W> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_row(&self, k: &K) -> Option<&(LinComb<K>, LinComb<W>)> {
        self.rows.get(k)
    }

    pub fn pivots(&self) -> impl Iterator<Item = (&K, &(LinComb<K>, LinComb<W>))> {
        self.rows.iter()
    }

    pub fn reduce(&self, mut k: LinComb<K>, mut w: LinComb<W>) -> (LinComb<K>, LinComb<W>) {
        let hits: Vec<(K, ParamPoly)> =
            k.iter().filter(|(s, _)| self.rows.contains_key(*s)).map(|(s, c)| (s.clone(), c.clone())).collect();
        for (s, c) in hits {
            let (rk, rw) = &self.rows[&s];
            let m = c.negated();
            k.add_scaled(rk, &m);
            w.add_scaled(rw, &m);
        }
        (k, w)
    }

    pub fn insert(&mut self, k: LinComb<K>, w: LinComb<W>) -> Insert<K, W> {
        let (k, w) = self.reduce(k, w);
        if k.is_zero() {
            return if w.is_zero() { Insert::Redundant } else { Insert::Inconsistent(w) };
        }
        let Some((p, c)) = k.iter().find_map(|(s, c)| c.as_rational().map(|r| (s.clone(), r))) else {
            return Insert::NoConstantPivot(k, w);
        };
        let inv = ParamPoly::rational(c.recip());
        let (k, w) = (k.scaled(&inv), w.scaled(&inv));
        for (rk, rw) in self.rows.values_mut() {
            let c = rk.coeff(&p);
            if !c.is_zero() {
                let m = c.negated();
                rk.add_scaled(&k, &m);
                rw.add_scaled(&w, &m);
            }
        }
        self.rows.insert(p.clone(), (k, w));
        Insert::Pivot(p)
    }

    /// Value of a fully determined unknown: its pivot row holds no other
    /// unknown, so `k + w = 0` reads `k = -w`.
    pub fn solved(&self, k: &K) -> Option<LinComb<W>> {
        let (rk, rw) = self.rows.get(k)?;
        (rk.len() == 1).then(|| rw.negated())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lc(terms: &[(u32, i64)]) -> LinComb<u32> {
        LinComb::from_terms(terms.iter().map(|(s, c)| (*s, ParamPoly::int(*c))))
    }

    #[test]
    fn solves_small_system() {
        // x0 + x1 = w0, x0 - x1 = w1
        let mut r: Reducer<u32, u32> = Reducer::new();
        assert_eq!(r.insert(lc(&[(0, 1), (1, 1)]), lc(&[(0, -1)])), Insert::Pivot(0));
        assert_eq!(r.insert(lc(&[(0, 1), (1, -1)]), lc(&[(1, -1)])), Insert::Pivot(1));
        let half = ParamPoly::frac(1, 2);
        let x0 = LinComb::from_terms([(0u32, half.clone()), (1, half.clone())]);
        assert_eq!(r.solved(&0), Some(x0));
        assert_eq!(r.insert(lc(&[(0, 2)]), lc(&[(0, -1), (1, -1)])), Insert::Redundant);
        assert!(matches!(r.insert(lc(&[(1, 1)]), LinComb::zero()), Insert::Inconsistent(_)));
    }
}
