//! Sparse square matrices on `(C^N)^{⊗k}` with leg calculus.
//!
//! A composite index stores leg 1 as the most significant base-`N` digit.
//! All indices here are 0-based; reports convert to 1-based.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{Laurent, LieLaurent, LinComb, Ring, Symbol};

/// Additive group structure needed for matrix entries.
pub trait Entry: Clone + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, o: &Self);
    fn sub_assign(&mut self, o: &Self);
    fn negated(&self) -> Self;
}

impl Entry for Laurent {
    fn zero() -> Self {
        <Laurent as Ring>::zero()
    }
    fn is_zero(&self) -> bool {
        Ring::is_zero(self)
    }
    fn add_assign(&mut self, o: &Self) {
        self.add_assign_ref(o)
    }
    fn sub_assign(&mut self, o: &Self) {
        self.sub_assign_ref(o)
    }
    fn negated(&self) -> Self {
        Ring::negated(self)
    }
}

impl<S: Symbol> Entry for LieLaurent<S> {
    fn zero() -> Self {
        LieLaurent::zero()
    }
    fn is_zero(&self) -> bool {
        LieLaurent::is_zero(self)
    }
    fn add_assign(&mut self, o: &Self) {
        LieLaurent::add_assign(self, o)
    }
    fn sub_assign(&mut self, o: &Self) {
        LieLaurent::sub_assign(self, o)
    }
    fn negated(&self) -> Self {
        LieLaurent::negated(self)
    }
}

impl<S: Symbol> Entry for LinComb<S> {
    fn zero() -> Self {
        LinComb::zero()
    }
    fn is_zero(&self) -> bool {
        LinComb::is_zero(self)
    }
    fn add_assign(&mut self, o: &Self) {
        LinComb::add_assign(self, o)
    }
    fn sub_assign(&mut self, o: &Self) {
        LinComb::sub_assign(self, o)
    }
    fn negated(&self) -> Self {
        LinComb::negated(self)
    }
}

/// Splits a composite index into its `k` leg digits.
pub fn digits(mut idx: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for p in (0..k).rev() {
        out[p] = idx % n;
        idx /= n;
    }
    out
}

pub fn compose(d: &[usize], n: usize) -> usize {
    d.iter().fold(0, |acc, x| acc * n + x)
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    dim: usize,
    entries: BTreeMap<(usize, usize), T>,
}

impl<T: Entry> Matrix<T> {
    pub fn new(dim: usize) -> Self {
        Matrix { dim, entries: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&T> {
        self.entries.get(&(r, c))
    }

    pub fn entry(&self, r: usize, c: usize) -> T {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &T)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &T) {
        if v.is_zero() {
            return;
        }
        let slot = self.entries.entry((r, c)).or_insert_with(T::zero);
        slot.add_assign(v);
        if slot.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn from_entries<I: IntoIterator<Item = ((usize, usize), T)>>(dim: usize, it: I) -> Self {
        let mut m = Self::new(dim);
        for ((r, c), v) in it {
            m.add_at(r, c, &v);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((r, c), v) in &o.entries {
            out.add_at(*r, *c, v);
        }
        out
    }

    pub fn minus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((r, c), v) in &o.entries {
            out.add_at(*r, *c, &v.negated());
        }
        out
    }

    pub fn negated(&self) -> Self {
        Matrix { dim: self.dim, entries: self.entries.iter().map(|(k, v)| (*k, v.negated())).collect() }
    }

    pub fn map<U: Entry, F: Fn(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix::from_entries(self.dim, self.entries.iter().map(|(k, v)| (*k, f(v))))
    }

    pub fn try_map<U: Entry, F: Fn(&T) -> Result<U>>(&self, f: F) -> Result<Matrix<U>> {
        let mut out = Matrix::new(self.dim);
        for ((r, c), v) in &self.entries {
            out.add_at(*r, *c, &f(v)?);
        }
        Ok(out)
    }

    /// Entrywise map that also sees the position.
    pub fn map_indexed<U: Entry, F: Fn(usize, usize, &T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix::from_entries(self.dim, self.entries.iter().map(|((r, c), v)| ((*r, *c), f(*r, *c, v))))
    }

    pub fn transpose(&self) -> Self {
        Matrix { dim: self.dim, entries: self.entries.iter().map(|((r, c), v)| ((*c, *r), v.clone())).collect() }
    }

    /// Places a `k`-leg operator on legs `placement` (1-based, ordered,
    /// distinct) of an `m`-leg space, with identity on the remaining legs.
    pub fn embed_legs(&self, n: usize, k: usize, placement: &[usize], m: usize) -> Result<Self> {
        if placement.len() != k {
            return Err(Error::Config(format!("placement {placement:?} does not have {k} legs")));
        }
        let mut seen = vec![false; m];
        for &p in placement {
            if p == 0 || p > m {
                return Err(Error::IndexOutOfRange(format!("leg {p} of {m}")));
            }
            if seen[p - 1] {
                return Err(Error::Config(format!("duplicate leg {p} in {placement:?}")));
            }
            seen[p - 1] = true;
        }
        let free: Vec<usize> = (0..m).filter(|p| !seen[*p]).collect();
        let combos = n.pow(free.len() as u32);
        let mut out = Self::new(n.pow(m as u32));
        for ((r, c), v) in &self.entries {
            let rd = digits(*r, n, k);
            let cd = digits(*c, n, k);
            let mut row = vec![0; m];
            let mut col = vec![0; m];
            for (q, &p) in placement.iter().enumerate() {
                row[p - 1] = rd[q];
                col[p - 1] = cd[q];
            }
            for f in 0..combos {
                let fd = digits(f, n, free.len());
                for (q, &p) in free.iter().enumerate() {
                    row[p] = fd[q];
                    col[p] = fd[q];
                }
                out.set(compose(&row, n), compose(&col, n), v.clone());
            }
        }
        Ok(out)
    }

    /// Transposes a single leg (1-based).
    pub fn transpose_leg(&self, n: usize, k: usize, leg: usize) -> Result<Self> {
        if leg == 0 || leg > k {
            return Err(Error::IndexOutOfRange(format!("leg {leg} of {k}")));
        }
        let mut out = Self::new(self.dim);
        for ((r, c), v) in &self.entries {
            let mut rd = digits(*r, n, k);
            let mut cd = digits(*c, n, k);
            std::mem::swap(&mut rd[leg - 1], &mut cd[leg - 1]);
            out.set(compose(&rd, n), compose(&cd, n), v.clone());
        }
        Ok(out)
    }

    /// Traces out a single leg (1-based), leaving a `k-1`-leg operator.
    pub fn partial_trace(&self, n: usize, k: usize, leg: usize) -> Result<Self> {
        if leg == 0 || leg > k || k < 2 {
            return Err(Error::IndexOutOfRange(format!("leg {leg} of {k}")));
        }
        let mut out = Self::new(n.pow(k as u32 - 1));
        for ((r, c), v) in &self.entries {
            let mut rd = digits(*r, n, k);
            let mut cd = digits(*c, n, k);
            if rd[leg - 1] != cd[leg - 1] {
                continue;
            }
            rd.remove(leg - 1);
            cd.remove(leg - 1);
            out.add_at(compose(&rd, n), compose(&cd, n), v);
        }
        Ok(out)
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> T {
        let mut out = T::zero();
        for ((r, c), v) in &self.entries {
            if r == c {
                out.add_assign(v);
            }
        }
        out
    }

    /// First nonzero entry in index order.
    pub fn first_nonzero(&self) -> Option<((usize, usize), &T)> {
        self.entries.iter().next().map(|(k, v)| (*k, v))
    }
}

impl<T: Entry + std::fmt::Debug> std::fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

/// Matrix product with a caller-supplied entry product; rows are computed in
/// parallel and reassembled in index order.
pub fn mul_with<A, B, C, F>(a: &Matrix<A>, b: &Matrix<B>, f: F) -> Matrix<C>
where
    A: Entry,
    B: Entry,
    C: Entry,
    F: Fn(&A, &B) -> C + Sync,
{
    assert_eq!(a.dim, b.dim, "dimension mismatch");
    let mut b_rows: BTreeMap<usize, Vec<(usize, &B)>> = BTreeMap::new();
    for ((r, c), v) in &b.entries {
        b_rows.entry(*r).or_default().push((*c, v));
    }
    let mut a_rows: BTreeMap<usize, Vec<(usize, &A)>> = BTreeMap::new();
    for ((r, c), v) in &a.entries {
        a_rows.entry(*r).or_default().push((*c, v));
    }
    let rows: Vec<(usize, Vec<(usize, &A)>)> = a_rows.into_iter().collect();
    let computed: Vec<(usize, BTreeMap<usize, C>)> = rows
        .par_iter()
        .map(|(r, items)| {
            let mut acc: BTreeMap<usize, C> = BTreeMap::new();
            for (m, av) in items {
                if let Some(brow) = b_rows.get(m) {
                    for (c, bv) in brow {
                        let p = f(av, bv);
                        if !p.is_zero() {
                            acc.entry(*c).or_insert_with(C::zero).add_assign(&p);
                        }
                    }
                }
            }
            (*r, acc)
        })
        .collect();
    let mut out = Matrix::new(a.dim);
    for (r, acc) in computed {
        for (c, v) in acc {
            out.set(r, c, v);
        }
    }
    out
}

/// Entrywise combination over the union of supports.
pub fn zip_with<A, B, C, F>(a: &Matrix<A>, b: &Matrix<B>, f: F) -> Matrix<C>
where
    A: Entry,
    B: Entry,
    C: Entry,
    F: Fn(&A, &B) -> C,
{
    let mut keys: Vec<(usize, usize)> = a.entries.keys().chain(b.entries.keys()).copied().collect();
    keys.sort();
    keys.dedup();
    let mut out = Matrix::new(a.dim);
    for (r, c) in keys {
        out.set(r, c, f(&a.entry(r, c), &b.entry(r, c)));
    }
    out
}

pub fn scalar_mul(a: &Matrix<Laurent>, b: &Matrix<Laurent>) -> Matrix<Laurent> {
    mul_with(a, b, |x, y| x.times(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{Laurent, Ring};

    fn int(n: i64) -> Laurent {
        Laurent::int(n)
    }

    fn sample(n: usize, seed: i64) -> Matrix<Laurent> {
        let mut m = Matrix::new(n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, int(seed + (r * n + c) as i64 * 3 % 7));
            }
        }
        m
    }

    fn identity(dim: usize) -> Matrix<Laurent> {
        Matrix::from_entries(dim, (0..dim).map(|i| ((i, i), int(1))))
    }

    #[test]
    fn embed_is_kronecker_with_identity() {
        let n = 2;
        let a = sample(n, 1);
        let e = a.embed_legs(n, 1, &[1], 2).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                let (rd, cd) = (digits(r, n, 2), digits(c, n, 2));
                let want = if rd[1] == cd[1] { a.entry(rd[0], cd[0]) } else { int(0) };
                assert_eq!(e.entry(r, c), want);
            }
        }
        let id = identity(4).embed_legs(2, 2, &[1, 3], 3).unwrap();
        assert_eq!(id, identity(8));
        assert_eq!(id.trace(), int(8));
        assert!(a.embed_legs(n, 1, &[3], 2).is_err());
        assert!(identity(4).embed_legs(2, 2, &[1, 1], 2).is_err());
    }

    #[test]
    fn swapped_placement_conjugates_by_flip() {
        let n = 3;
        let mut a = Matrix::new(9);
        for r in 0..9 {
            for c in 0..9 {
                a.set(r, c, int((r * 11 + c * 5) as i64 % 13 - 6));
            }
        }
        let mut flip = Matrix::new(9);
        for i in 0..n {
            for j in 0..n {
                flip.set(i * n + j, j * n + i, int(1));
            }
        }
        let swapped = a.embed_legs(n, 2, &[2, 1], 2).unwrap();
        assert_eq!(swapped, scalar_mul(&scalar_mul(&flip, &a), &flip));
    }

    #[test]
    fn partial_trace_of_product() {
        let n = 3;
        let a = sample(n, 2);
        let b = sample(n, -4);
        let ab = scalar_mul(&a.embed_legs(n, 1, &[1], 2).unwrap(), &b.embed_legs(n, 1, &[2], 2).unwrap());
        let tr = ab.partial_trace(n, 2, 1).unwrap();
        assert_eq!(tr, b.map(|v| v.times(&a.trace())));
        let t = ab.transpose_leg(n, 2, 2).unwrap();
        assert_eq!(t.transpose_leg(n, 2, 2).unwrap(), ab);
        assert!(ab.partial_trace(n, 2, 3).is_err());
    }
}
