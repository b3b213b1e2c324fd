//! The general-N ansatz for `B(x)` and recovery of its bracket table from
//! the reflection relation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use super::solve::{Insert, Reducer};
use super::table::{AwElement, AwSym, StructTable};
use super::word::ChainWord;
use super::{entry, reflection_residual, AwMatrix};
use crate::error::{Error, Result};
use crate::exactnum::{LinComb, ParamPoly, Rational, Ring};
use crate::report::Detail;
use crate::rmatrix::Matrix;

/// Sign convention for the non-adjacent off-diagonal entries of the
/// general ansatz.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Convention {
    /// The entry table exactly as printed.
    Literal,
    /// Non-adjacent entries with the opposite overall sign.
    FlipNonAdjacent,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Literal, Convention::FlipNonAdjacent];
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Literal => "literal",
            Convention::FlipNonAdjacent => "flip-non-adjacent",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(Convention::Literal),
            "flip-non-adjacent" => Ok(Convention::FlipNonAdjacent),
            _ => Err(Error::Parse(format!("unknown convention `{s}` (expected literal or flip-non-adjacent)"))),
        }
    }
}

fn sign(k: i64) -> ParamPoly {
    ParamPoly::sign(k)
}

/// `B(x)` of the general ansatz with chain-word entries.
pub fn build_b_general(n: usize, conv: Convention) -> Result<AwMatrix<ChainWord>> {
    if !(3..=9).contains(&n) {
        return Err(Error::Config(format!("general ansatz needs 3 <= N <= 9, got {n}")));
    }
    let nn = n as i64;
    let f = |i: i64, j: i64| LinComb::single(ChainWord::new(n, i, j));
    let e = |i: i64| LinComb::single(ChainWord::letter(n, i));
    let flip = match conv {
        Convention::Literal => ParamPoly::int(1),
        Convention::FlipNonAdjacent => ParamPoly::int(-1),
    };
    let mut num = Matrix::new(n);
    for i in 1..=nn {
        for j in 1..=nn {
            let v = if i == j {
                let terms: Vec<_> = (1..nn)
                    .map(|l| {
                        let c = if i <= l { ParamPoly::frac(nn - l, nn) } else { ParamPoly::frac(-l, nn) };
                        (c, 0, f(l, l - 1))
                    })
                    .collect();
                entry(&terms)
            } else if (i, j) == (1, nn) {
                entry(&[(sign(nn + 1), 0, e(nn)), (ParamPoly::int(1), -1, f(1, nn - 1))])
            } else if (i, j) == (nn, 1) {
                entry(&[(ParamPoly::int(1), 0, e(nn)), (ParamPoly::int(-1), 1, f(1, nn - 1))])
            } else if j == i + 1 {
                let s = sign(nn);
                entry(&[(s.negated(), 0, f(i + 1, i - 1)), (s, -1, e(i))])
            } else if i == j + 1 {
                entry(&[(sign(nn), 0, f(j + 1, j - 1)), (ParamPoly::int(-1), 1, e(j))])
            } else if i < j {
                let s = sign((j - i) * (nn + 1)).times(&flip);
                entry(&[(s.clone(), 0, f(j, i - 1)), (s.times(&sign(j - i)), -1, f(i, j - 1))])
            } else {
                let s = sign((i - j) * nn).times(&flip);
                entry(&[(s.clone(), 0, f(i, j - 1)), (s.times(&sign(i - j + nn)), 1, f(j, i - 1))])
            };
            num.set(i as usize - 1, j as usize - 1, v);
        }
    }
    Ok(AwMatrix { n, num })
}

/// Symbols of the extraction system: words, and brackets of words as
/// unknown vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum XSym {
    W(ChainWord),
    P(ChainWord, ChainWord),
}

impl fmt::Display for XSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XSym::W(w) => write!(f, "{w}"),
            XSym::P(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Unknown `[a, b]` with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair(pub ChainWord, pub ChainWord);

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.0, self.1)
    }
}

fn pair_term(a: ChainWord, b: ChainWord) -> Option<(Pair, ParamPoly)> {
    match a.cmp(&b) {
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Less => Some((Pair(a, b), ParamPoly::int(1))),
        std::cmp::Ordering::Greater => Some((Pair(b, a), ParamPoly::int(-1))),
    }
}

#[derive(Clone, Debug)]
pub struct Extraction {
    pub n: usize,
    pub convention: Convention,
    pub words: Vec<ChainWord>,
    /// Determined brackets on the word basis.
    pub table: StructTable,
    /// Nonzero scalar equations imposed, definitions included.
    pub equations: usize,
    /// First residual equations that could not be satisfied.
    pub inconsistent: Vec<String>,
    /// Brackets left undetermined.
    pub free: Vec<String>,
    /// Brackets of a word with a letter outside the word basis, e.g.
    /// `[e_N, f(1,N-1)]`, as determined by the system.
    pub dependent: Vec<(String, String)>,
}

impl Extraction {
    pub fn consistent(&self) -> bool {
        self.inconsistent.is_empty()
    }

    pub fn determined(&self) -> bool {
        self.free.is_empty()
    }
}

const MAX_REPORTED: usize = 5;

/// Solves the reflection relation for the brackets among the words of
/// `build_b_general(n, conv)`.
///
/// Each word `f_{i,j}` with at least two letters contributes its definition
/// `[e_i, f_{i+1,j}] = f_{i,j}`; the cleared reflection residual contributes
/// one vector equation per matrix entry and spectral monomial. Both are fed
/// in a fixed order to an exact reducer.
pub fn extract_structure_constants(n: usize, conv: Convention) -> Result<Extraction> {
    let b = build_b_general(n, conv)?;
    let mut words = BTreeSet::new();
    for (_, v) in b.num.iter() {
        for (_, lc) in v.iter() {
            for (w, _) in lc.iter() {
                words.insert(*w);
            }
        }
    }
    let words: Vec<ChainWord> = words.into_iter().collect();
    let basis: BTreeSet<ChainWord> = words.iter().copied().collect();

    let xb = AwMatrix { n, num: b.num.map(|v| v.map(|w| LinComb::single(XSym::W(*w)))) };
    let br = |a: &XSym, c: &XSym| match (a, c) {
        (XSym::W(a), XSym::W(c)) => match pair_term(*a, *c) {
            Some((Pair(p, q), s)) => LinComb::term(XSym::P(p, q), s),
            None => LinComb::zero(),
        },
        _ => LinComb::zero(),
    };
    let residual = reflection_residual(&xb, &br)?;

    let mut red: Reducer<Pair, ChainWord> = Reducer::new();
    let mut equations = 0;
    let mut inconsistent = Vec::new();
    let mut feed = |k: LinComb<Pair>, w: LinComb<ChainWord>, what: &dyn Fn() -> String| -> Result<()> {
        equations += 1;
        match red.insert(k, w) {
            Insert::Inconsistent(r) => {
                if inconsistent.len() < MAX_REPORTED {
                    inconsistent.push(format!("{}: 0 = {r}", what()));
                }
            }
            Insert::NoConstantPivot(k, _) => {
                return Err(Error::Unsupported(format!("{}: no constant pivot in {k}", what())));
            }
            _ => {}
        }
        Ok(())
    };
    for w in &words {
        if let Some((first, rest)) = w.split() {
            if basis.contains(&rest) {
                let (p, s) = pair_term(first, rest).expect("distinct words");
                feed(LinComb::term(p, s), LinComb::term(*w, ParamPoly::int(-1)), &|| format!("definition of {w}"))?;
            }
        }
    }
    for ((r, c), v) in residual.iter() {
        for (m, lc) in v.iter() {
            let mut k = LinComb::zero();
            let mut w = LinComb::zero();
            for (s, coeff) in lc.iter() {
                match s {
                    XSym::P(a, b) => k.add_term(Pair(*a, *b), coeff),
                    XSym::W(a) => w.add_term(*a, coeff),
                }
            }
            if k.is_zero() && w.is_zero() {
                continue;
            }
            let at = || format!("entry ({},{}) at {:?}", r + 1, c + 1, m.pairs());
            feed(k, w, &at)?;
        }
    }

    let names: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    let mut table = StructTable::new(n, &names)?;
    let index: BTreeMap<ChainWord, usize> = words.iter().enumerate().map(|(i, w)| (*w, i)).collect();
    let to_table = |v: &LinComb<ChainWord>, t: &StructTable| -> AwElement {
        v.map(|w| index.get(w).map(|&i| t.elem(i)).unwrap_or_default())
    };
    let mut free = Vec::new();
    for (a, wa) in words.iter().enumerate() {
        for (bi, wb) in words.iter().enumerate().skip(a + 1) {
            match red.solved(&Pair(*wa, *wb)) {
                Some(v) => {
                    let val = to_table(&v, &table);
                    table.set(a, bi, val)?;
                }
                None => free.push(Pair(*wa, *wb).to_string()),
            }
        }
    }
    let mut dependent = Vec::new();
    for (p, (rk, rw)) in red.pivots() {
        if !(basis.contains(&p.0) && basis.contains(&p.1)) && rk.len() == 1 {
            dependent.push((p.to_string(), rw.negated().to_string()));
        }
    }
    Ok(Extraction { n, convention: conv, words, table, equations, inconsistent, free, dependent })
}

/// A bracket-preserving linear isomorphism between two tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMatch {
    /// `e_i ↦ signs[i] e_i`.
    pub signs: Vec<i64>,
    /// Image of each source basis element.
    pub images: Vec<(String, String)>,
}

impl TableMatch {
    pub fn is_identity(&self) -> bool {
        self.images.iter().all(|(a, b)| a == b)
    }
}

/// Searches for an isomorphism `a → b` sending generators to generators up
/// to sign. The map on the rest of the basis is forced by brackets of
/// generators; it must be well defined, bijective, and preserve all
/// brackets.
pub fn match_tables(a: &StructTable, b: &StructTable) -> std::result::Result<TableMatch, Detail> {
    if a.dim() != b.dim() || a.generator_count() != b.generator_count() {
        return Err(Detail::info(format!(
            "shapes differ: {} generators / dim {} against {} / {}",
            a.generator_count(),
            a.dim(),
            b.generator_count(),
            b.dim()
        )));
    }
    let n = a.generator_count();
    let mut first_obstruction = None;
    for mask in 0u32..(1 << n) {
        let signs: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        match try_signs(a, b, &signs) {
            Ok(m) => return Ok(m),
            Err(d) => {
                first_obstruction.get_or_insert(d);
            }
        }
    }
    Err(first_obstruction.unwrap_or_else(|| Detail::info("no generators")))
}

fn try_signs(a: &StructTable, b: &StructTable, signs: &[i64]) -> std::result::Result<TableMatch, Detail> {
    let n = signs.len();
    let ga = a.generators();
    let gb: Vec<AwElement> =
        b.generators().into_iter().zip(signs).map(|(g, s)| g.scaled(&ParamPoly::int(*s))).collect();
    let mut red: Reducer<AwSym, AwSym> = Reducer::new();
    let mut frontier: Vec<(AwElement, AwElement)> = Vec::new();
    let feed = |red: &mut Reducer<AwSym, AwSym>, va: AwElement, vb: AwElement, out: &mut Vec<_>| match red
        .insert(va.clone(), vb.clone())
    {
        Insert::Pivot(_) => {
            out.push((va, vb));
            Ok(())
        }
        Insert::Redundant => Ok(()),
        Insert::Inconsistent(r) => Err(Detail::from_residual(&r)
            .with_info(format!("signs {signs:?}: image of {} is not well defined", a.render(&va)))),
        Insert::NoConstantPivot(k, _) => Err(Detail::from_residual(&k).with_info("no constant pivot")),
    };
    for i in 0..n {
        feed(&mut red, ga[i].clone(), gb[i].clone(), &mut frontier)?;
    }
    let mut depth = 1;
    while !frontier.is_empty() && red.rank() < a.dim() && depth <= a.dim() {
        let mut next = Vec::new();
        for (va, vb) in &frontier {
            for i in 0..n {
                feed(&mut red, a.bracket(&ga[i], va), b.bracket(&gb[i], vb), &mut next)?;
            }
        }
        frontier = next;
        depth += 1;
    }
    if red.rank() < a.dim() {
        return Err(Detail::info(format!("generators span only {} of {} dimensions", red.rank(), a.dim())));
    }
    let mut images = Vec::with_capacity(a.dim());
    for s in a.basis() {
        let (rk, rw) = red.pivot_row(s).expect("full rank");
        debug_assert_eq!(rk.len(), 1);
        images.push(rw.clone());
    }
    let phi = |v: &AwElement| v.map(|s| images[s.index as usize].clone());
    for i in 0..a.dim() {
        for j in i + 1..a.dim() {
            let lhs = phi(&a.bracket(&a.elem(i), &a.elem(j)));
            let rhs = b.bracket(&images[i], &images[j]);
            let d = lhs.minus(&rhs);
            if !d.is_zero() {
                return Err(Detail::from_residual(&d).with_info(format!(
                    "signs {signs:?}: bracket [{}, {}] not preserved",
                    a.sym(i),
                    a.sym(j)
                )));
            }
        }
    }
    let mut inv: Reducer<AwSym, AwSym> = Reducer::new();
    for v in &images {
        inv.insert(v.clone(), LinComb::zero());
    }
    if inv.rank() < b.dim() {
        return Err(Detail::info(format!("signs {signs:?}: map is not surjective")));
    }
    Ok(TableMatch {
        signs: signs.to_vec(),
        images: a.basis().iter().zip(&images).map(|(s, v)| (s.to_string(), v.to_string())).collect(),
    })
}

/// Rescales generator `i` by `c`; used to exercise sign bookkeeping.
pub fn rescale_generator(t: &StructTable, i: usize, c: i64) -> Result<StructTable> {
    t.rescaled(i, &Rational::from_int(c))
}

#[cfg(test)]
mod tests {
    use super::super::table::{aw3_table, aw4_table, check_jacobi};
    use super::super::{build_b_aw, check_reflection_aw};
    use super::*;
    use crate::exactnum::{Monomial, SMono, Var};

    #[test]
    fn general_ansatz_n3_entries() {
        let b = build_b_general(3, Convention::Literal).unwrap();
        let w = |i, j| LinComb::single(ChainWord::new(3, i, j));
        // (1,2): f(2,3) - x^{-1} e1
        assert_eq!(b.num.entry(0, 1).coeff(&SMono::one()), w(2, 3));
        assert_eq!(b.num.entry(0, 1).coeff(&SMono::var(Var::X, -1)), w(1, 1).negated());
        // (3,1): e3 - x f(1,2)
        assert_eq!(b.num.entry(2, 0).coeff(&SMono::var(Var::X, 1)), w(1, 2).negated());
    }

    #[test]
    fn matcher_basics() {
        let t = aw3_table();
        let m = match_tables(&t, &t).unwrap();
        assert!(m.is_identity());
        assert_eq!(m.signs, vec![1, 1, 1]);
        let flipped = rescale_generator(&t, 0, -1).unwrap();
        let m = match_tables(&t, &flipped).unwrap();
        assert_eq!(m.signs, vec![-1, 1, 1]);
        assert!(match_tables(&t, &aw4_table()).is_err());
    }

    #[test]
    fn extraction_n3() {
        let ex = extract_structure_constants(3, Convention::Literal).unwrap();
        assert!(ex.consistent(), "{:?}", ex.inconsistent);
        assert!(ex.determined(), "{:?}", ex.free);
        assert!(check_jacobi(&ex.table).is_ok());
        let m = match_tables(&aw3_table(), &ex.table).unwrap();
        assert_eq!(m.signs, vec![1, 1, 1]);
        let b = build_b_aw(&aw3_table()).unwrap();
        assert!(check_reflection_aw(&aw3_table(), &b).unwrap().is_ok());
    }
}
