//! Nested commutators of abstract generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{LinComb, Symbol};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FreeWord {
    /// Generator `ē_i`, 1-based.
    Gen(usize),
    Br(Box<FreeWord>, Box<FreeWord>),
}

impl FreeWord {
    pub fn gen(i: usize) -> Self {
        FreeWord::Gen(i)
    }

    pub fn br(a: FreeWord, b: FreeWord) -> Self {
        FreeWord::Br(Box::new(a), Box::new(b))
    }

    /// Right-normed `[ē_{i_1},[ē_{i_2},[…,ē_{i_k}]…]]`.
    pub fn right_normed(indices: &[usize]) -> Self {
        let (last, rest) = indices.split_last().expect("nonempty word");
        rest.iter().rev().fold(FreeWord::Gen(*last), |acc, &i| FreeWord::br(FreeWord::Gen(i), acc))
    }

    pub fn leaves(&self) -> usize {
        match self {
            FreeWord::Gen(_) => 1,
            FreeWord::Br(a, b) => a.leaves() + b.leaves(),
        }
    }

    /// Evaluates the word with `ē_i ↦ gens[i-1]` and the given bracket.
    pub fn eval<S: Symbol, F>(&self, gens: &[LinComb<S>], br: &F) -> Result<LinComb<S>>
    where
        F: Fn(&LinComb<S>, &LinComb<S>) -> LinComb<S>,
    {
        match self {
            FreeWord::Gen(i) => gens
                .get(i.wrapping_sub(1))
                .cloned()
                .ok_or_else(|| Error::IndexOutOfRange(format!("generator e{i} of {}", gens.len()))),
            FreeWord::Br(a, b) => Ok(br(&a.eval(gens, br)?, &b.eval(gens, br)?)),
        }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeWord::Gen(i) => write!(f, "e{i}"),
            FreeWord::Br(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// `f_{i,j} = [e_i,[e_{i+1},[…,e_j]…]]` over `N` generators with indices
/// mod `N`, stored as its number of letters and start. Ordered by length,
/// so single letters come first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainWord {
    pub len: u8,
    pub start: u8,
    pub n: u8,
}

impl ChainWord {
    /// `f_{i,j}`, indices taken mod `N` in `1..=N`.
    pub fn new(n: usize, i: i64, j: i64) -> Self {
        let m = |k: i64| (k - 1).rem_euclid(n as i64) as usize + 1;
        let (i, j) = (m(i), m(j));
        let len = (j + n - i) % n + 1;
        ChainWord { len: len as u8, start: i as u8, n: n as u8 }
    }

    pub fn letter(n: usize, i: i64) -> Self {
        ChainWord::new(n, i, i)
    }

    pub fn end(&self) -> usize {
        let (s, l, n) = (self.start as usize, self.len as usize, self.n as usize);
        (s + l - 2) % n + 1
    }

    pub fn letters(&self) -> Vec<usize> {
        let (s, n) = (self.start as usize, self.n as usize);
        (0..self.len as usize).map(|k| (s - 1 + k) % n + 1).collect()
    }

    pub fn to_free(&self) -> FreeWord {
        FreeWord::right_normed(&self.letters())
    }

    /// `[e_start, rest]`, `None` for a single letter.
    pub fn split(&self) -> Option<(ChainWord, ChainWord)> {
        (self.len > 1).then(|| {
            let first = ChainWord { len: 1, ..*self };
            let rest = ChainWord { len: self.len - 1, start: self.start % self.n + 1, n: self.n };
            (first, rest)
        })
    }
}

impl fmt::Display for ChainWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len == 1 {
            write!(f, "e{}", self.start)
        } else {
            write!(f, "f({},{})", self.start, self.end())
        }
    }
}
