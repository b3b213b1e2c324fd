//! Finite Lie algebras given by structure constants over ℚ[α].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{LinComb, Param, ParamPoly, Rational, Ring};
use crate::report::{Detail, Outcome};

/// Basis symbol of a [`StructTable`]; ordered by position in the basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AwSym {
    pub index: u16,
    name: Arc<str>,
}

impl AwSym {
    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Display for AwSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

pub type AwElement = LinComb<AwSym>;

/// Antisymmetric bracket table on a named basis. The first `generators`
/// basis elements are the distinguished generators `e_1 … e_N`.
#[derive(Clone, Debug)]
pub struct StructTable {
    generators: usize,
    basis: Vec<AwSym>,
    brackets: BTreeMap<(u16, u16), AwElement>,
}

/// Tables are equal when they have the same basis and the same nonzero
/// brackets; explicitly recorded zeros do not matter.
impl PartialEq for StructTable {
    fn eq(&self, o: &Self) -> bool {
        self.generators == o.generators && self.basis == o.basis && self.entries().eq(o.entries())
    }
}

impl Eq for StructTable {}

impl StructTable {
    pub fn new<S: AsRef<str>>(generators: usize, names: &[S]) -> Result<Self> {
        if generators > names.len() {
            return Err(Error::Config(format!("{generators} generators but only {} basis elements", names.len())));
        }
        let mut seen = std::collections::BTreeSet::new();
        for n in names {
            if !seen.insert(n.as_ref()) {
                return Err(Error::Config(format!("duplicate basis name `{}`", n.as_ref())));
            }
        }
        let basis =
            names.iter().enumerate().map(|(i, n)| AwSym { index: i as u16, name: Arc::from(n.as_ref()) }).collect();
        Ok(StructTable { generators, basis, brackets: BTreeMap::new() })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn basis(&self) -> &[AwSym] {
        &self.basis
    }

    pub fn sym(&self, i: usize) -> &AwSym {
        &self.basis[i]
    }

    pub fn elem(&self, i: usize) -> AwElement {
        LinComb::single(self.basis[i].clone())
    }

    pub fn generators(&self) -> Vec<AwElement> {
        (0..self.generators).map(|i| self.elem(i)).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|s| s.name() == name)
    }

    /// Records `[b_a, b_b] = v`. A pair may be recorded from both sides, in
    /// which case the two values must be negatives of each other.
    pub fn set(&mut self, a: usize, b: usize, v: AwElement) -> Result<()> {
        if a == b {
            if v.is_zero() {
                return Ok(());
            }
            return Err(Error::Config(format!("[{0}, {0}] = {v} is not zero", self.basis[a])));
        }
        let (key, val) = if a < b { ((a as u16, b as u16), v) } else { ((b as u16, a as u16), v.negated()) };
        if let Some(old) = self.brackets.get(&key) {
            if *old != val {
                return Err(Error::Config(format!(
                    "bracket [{}, {}] recorded as both {} and {}",
                    self.basis[key.0 as usize], self.basis[key.1 as usize], old, val
                )));
            }
            return Ok(());
        }
        self.brackets.insert(key, val);
        Ok(())
    }

    pub fn is_set(&self, a: usize, b: usize) -> bool {
        a == b || self.brackets.contains_key(&(a.min(b) as u16, a.max(b) as u16))
    }

    pub fn sym_bracket(&self, a: &AwSym, b: &AwSym) -> AwElement {
        match a.index.cmp(&b.index) {
            std::cmp::Ordering::Equal => LinComb::zero(),
            std::cmp::Ordering::Less => self.brackets.get(&(a.index, b.index)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => {
                self.brackets.get(&(b.index, a.index)).map(|v| v.negated()).unwrap_or_default()
            }
        }
    }

    pub fn bracket(&self, x: &AwElement, y: &AwElement) -> AwElement {
        x.bilinear(y, |a, b| self.sym_bracket(a, b))
    }

    /// Nonzero brackets `[b_a, b_b]`, `a < b`, in index order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &AwElement)> {
        self.brackets.iter().filter(|(_, v)| !v.is_zero()).map(|((a, b), v)| ((*a as usize, *b as usize), v))
    }

    /// Same algebra in the basis where `b_i` is replaced by `c · b_i`.
    pub fn rescaled(&self, i: usize, c: &Rational) -> Result<StructTable> {
        if c.is_zero() {
            return Err(Error::Config("rescaling by zero".into()));
        }
        let mut out = StructTable { brackets: BTreeMap::new(), ..self.clone() };
        let inv = ParamPoly::rational(c.recip());
        let cp = ParamPoly::rational(c.clone());
        // old b_i = c^{-1} b'_i
        let rewrite = |v: &AwElement| {
            v.map(|s| {
                let e = LinComb::single(s.clone());
                if s.index as usize == i {
                    e.scaled(&inv)
                } else {
                    e
                }
            })
        };
        for (&(a, b), v) in &self.brackets {
            let mut w = rewrite(v);
            if a as usize == i || b as usize == i {
                w = w.scaled(&cp);
            }
            out.brackets.insert((a, b), w);
        }
        Ok(out)
    }

    pub fn render(&self, v: &AwElement) -> String {
        v.to_string()
    }

    pub fn to_doc(&self) -> TableDoc {
        TableDoc {
            generators: self.generators,
            basis: self.basis.iter().map(|s| s.name().to_string()).collect(),
            parameters: vec![Param::Alpha.to_string()],
            brackets: self
                .entries()
                .map(|((a, b), v)| BracketDoc {
                    left: self.basis[a].name().to_string(),
                    right: self.basis[b].name().to_string(),
                    value: v.iter().map(|(s, c)| (s.name().to_string(), c.to_string())).collect(),
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &TableDoc) -> Result<StructTable> {
        let mut t = StructTable::new(doc.generators, &doc.basis)?;
        let find = |name: &str| t.index_of(name).ok_or_else(|| Error::Parse(format!("unknown basis element `{name}`")));
        let mut pending = Vec::new();
        for br in &doc.brackets {
            let (a, b) = (find(&br.left)?, find(&br.right)?);
            let mut v = LinComb::zero();
            for (name, coeff) in &br.value {
                let s = t.basis[find(name)?].clone();
                v.add_term(s, &ParamPoly::parse(coeff)?);
            }
            pending.push((a, b, v));
        }
        for (a, b, v) in pending {
            t.set(a, b, v)?;
        }
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<StructTable> {
        let doc: TableDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        StructTable::from_doc(&doc)
    }
}

/// Serialized form of a [`StructTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub generators: usize,
    pub basis: Vec<String>,
    pub parameters: Vec<String>,
    pub brackets: Vec<BracketDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketDoc {
    pub left: String,
    pub right: String,
    pub value: Vec<(String, String)>,
}

/// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0` on every basis triple.
pub fn check_jacobi(t: &StructTable) -> Outcome {
    let d = t.dim();
    let triples: Vec<(usize, usize, usize)> =
        (0..d).flat_map(|a| (a + 1..d).flat_map(move |b| (b + 1..d).map(move |c| (a, b, c)))).collect();
    let results: Vec<Outcome> = triples
        .par_iter()
        .map(|&(a, b, c)| {
            let (x, y, z) = (t.elem(a), t.elem(b), t.elem(c));
            let mut r = t.bracket(&x, &t.bracket(&y, &z));
            r.add_assign(&t.bracket(&y, &t.bracket(&z, &x)));
            r.add_assign(&t.bracket(&z, &t.bracket(&x, &y)));
            if r.is_zero() {
                Ok(())
            } else {
                Err(Detail::from_residual(&r).with_info(format!(
                    "Jacobi on ({}, {}, {})",
                    t.sym(a),
                    t.sym(b),
                    t.sym(c)
                )))
            }
        })
        .collect();
    results.into_iter().find(|r| r.is_err()).unwrap_or(Ok(()))
}

/// Every stored bracket `[b_a, b_b]` with `a < b`; `[b_b, b_a]` is derived,
/// so antisymmetry holds by construction. This re-derives it through
/// `sym_bracket` as a guard against storage errors.
pub fn check_antisymmetry(t: &StructTable) -> Outcome {
    for a in 0..t.dim() {
        for b in 0..t.dim() {
            let s = t.sym_bracket(t.sym(a), t.sym(b)).plus(&t.sym_bracket(t.sym(b), t.sym(a)));
            if !s.is_zero() {
                return Err(Detail::from_residual(&s).with_info(format!("[{0},{1}] + [{1},{0}]", t.sym(a), t.sym(b))));
            }
        }
    }
    Ok(())
}

pub(crate) fn alpha() -> ParamPoly {
    ParamPoly::param(Param::Alpha)
}

pub(crate) fn int(n: i64) -> ParamPoly {
    ParamPoly::int(n)
}

/// Levi-Civita symbol on `{1,2,3}`.
pub(crate) fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

/// Deliberate corruptions of the N = 3 table for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Aw3Variant {
    Standard,
    /// `α` term dropped from `[f_i, f_j]`.
    DropAlphaFF,
    /// Sign of the `α f_i` term in `[f_i, g_j]` flipped.
    FlipFG,
}

/// The N = 3 table on `e_1..e_3, f_1..f_3, g_1, g_2` with `g_3 = -g_1 - g_2`.
pub fn aw3_table() -> StructTable {
    aw3_table_with(Aw3Variant::Standard).expect("displayed table is antisymmetric")
}

pub fn aw3_table_with(variant: Aw3Variant) -> Result<StructTable> {
    let names = ["e1", "e2", "e3", "f1", "f2", "f3", "g1", "g2"];
    let mut t = StructTable::new(3, &names)?;
    let e = |i: usize| t.elem(i - 1);
    let f = |i: usize| t.elem(2 + i);
    let g = |j: usize| match j {
        3 => t.elem(6).plus(&t.elem(7)).negated(),
        _ => t.elem(5 + j),
    };
    let lc = |terms: &[(ParamPoly, AwElement)]| {
        let mut v = LinComb::zero();
        for (c, x) in terms {
            v.add_scaled(x, c);
        }
        v
    };
    let a = alpha();
    let mut rows = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            let mut ee = LinComb::zero();
            let mut ef = LinComb::zero();
            let mut ff = LinComb::zero();
            for k in 1..=3 {
                let eps = int(levi_civita(i, j, k));
                ee.add_scaled(&f(k), &eps);
                ef.add_scaled(&e(k), &eps.negated());
                let ffk = match variant {
                    Aw3Variant::DropAlphaFF => f(k),
                    _ => f(k).minus(&e(k).scaled(&a)),
                };
                ff.add_scaled(&ffk, &eps);
            }
            ef.add_scaled(&g(i), &int(delta(i, j)));
            rows.push((i - 1, j - 1, ee));
            rows.push((i - 1, 2 + j, ef));
            rows.push((2 + i, 2 + j, ff));
            if j <= 2 {
                let d = int(3 * delta(i, j));
                let eg = lc(&[(a.clone(), e(i)), (int(-2), f(i))])
                    .plus(&lc(&[(int(2), f(i)), (a.negated(), e(i))]).scaled(&d));
                let fa = match variant {
                    Aw3Variant::FlipFG => a.clone(),
                    _ => a.negated(),
                };
                let fg = lc(&[(fa, f(i)), (int(-2), e(i))]).plus(&lc(&[(a.clone(), f(i)), (int(2), e(i))]).scaled(&d));
                rows.push((i - 1, 5 + j, eg));
                rows.push((2 + i, 5 + j, fg));
            }
        }
    }
    rows.push((6, 7, LinComb::zero()));
    for (x, y, v) in rows {
        t.set(x, y, v)?;
    }
    Ok(t)
}

/// The N = 4 table on `e_1..e_4, f_1..f_4, g_1..g_4, h_1..h_3` with
/// `h_4 = -h_1 - h_2 - h_3`; indices are taken mod 4.
pub fn aw4_table() -> StructTable {
    aw4_table_checked().expect("displayed table is antisymmetric")
}

pub fn aw4_table_checked() -> Result<StructTable> {
    let names = ["e1", "e2", "e3", "e4", "f1", "f2", "f3", "f4", "g1", "g2", "g3", "g4", "h1", "h2", "h3"];
    let mut t = StructTable::new(4, &names)?;
    let m = |k: i64| (k - 1).rem_euclid(4) as usize + 1;
    let e = |k: i64| t.elem(m(k) - 1);
    let f = |k: i64| t.elem(3 + m(k));
    let g = |k: i64| t.elem(7 + m(k));
    let h = |k: i64| match m(k) {
        4 => t.elem(12).plus(&t.elem(13)).plus(&t.elem(14)).negated(),
        j => t.elem(11 + j),
    };
    let d = |a: i64, b: i64| int(delta(m(a), m(b)));
    let a = alpha();
    let two = int(2);
    let mut rows: Vec<(usize, usize, AwElement)> = Vec::new();
    let (ei, fi, gi, hi) = (|k: i64| m(k) - 1, |k: i64| 3 + m(k), |k: i64| 7 + m(k), |k: i64| 11 + m(k));
    for i in 1..=4i64 {
        rows.push((ei(i), ei(i + 1), f(i + 2)));
        rows.push((ei(i), ei(i + 2), LinComb::zero()));
        rows.push((fi(i), fi(i + 1), LinComb::zero()));
        rows.push((fi(i), fi(i + 2), h(i).plus(&h(i + 1)).negated()));
        rows.push((gi(i), gi(i + 1), f(i).scaled(&a).plus(&f(i + 2)).negated()));
        rows.push((gi(i), gi(i + 2), LinComb::zero()));
        for j in 1..=4i64 {
            let mut ef = g(i + 1).scaled(&d(j, i));
            ef.add_scaled(&g(i - 1), &d(j, i - 1).negated());
            ef.add_scaled(&e(i - 1), &d(j, i + 1).negated());
            ef.add_scaled(&e(i + 1), &d(j, i + 2));
            rows.push((ei(i), fi(j), ef));

            let mut eg = h(i).scaled(&d(i, j).negated());
            eg.add_scaled(&f(i), &d(j, i + 1));
            eg.add_scaled(&f(i - 1), &d(j, i - 1).negated());
            rows.push((ei(i), gi(j), eg));

            let mut fg = e(i - 2).scaled(&a).plus(&g(i - 2)).scaled(&d(j, i - 1).negated());
            fg.add_scaled(&e(i - 1).scaled(&a).plus(&g(i - 1)), &d(j, i - 2));
            fg.add_scaled(&e(i + 1), &d(i, j).negated());
            fg.add_scaled(&e(i), &d(j, i + 1));
            rows.push((fi(i), gi(j), fg));

            if j <= 3 {
                let near = d(j, i + 1).plus(&d(j, i - 1));
                let base_e = e(i).scaled(&a).plus(&g(i).scaled(&two));
                let eh = base_e.scaled(&d(i, j).times(&int(-2))).plus(&base_e.scaled(&near));
                rows.push((ei(i), hi(j), eh));

                let w = d(i, j).minus(&d(j, i - 1)).plus(&d(j, i + 1)).minus(&d(j, i - 2));
                rows.push((fi(i), hi(j), f(i).scaled(&a).plus(&f(i + 2).scaled(&two)).scaled(&w)));

                let base_g = e(i).scaled(&two).plus(&g(i).scaled(&a));
                let gh = base_g.scaled(&d(i, j).times(&two)).minus(&base_g.scaled(&near));
                rows.push((gi(i), hi(j), gh));
            }
        }
    }
    for j in 1..=3 {
        for k in 1..=3 {
            rows.push((hi(j), hi(k), LinComb::zero()));
        }
    }
    for (x, y, v) in rows {
        t.set(x, y, v)?;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aw3_examples() {
        let t = aw3_table();
        let (e1, e2, f1, f3, g1) = (t.elem(0), t.elem(1), t.elem(3), t.elem(5), t.elem(6));
        assert_eq!(t.bracket(&e1, &e2), f3);
        assert_eq!(t.bracket(&e1, &f1), g1);
        let expect = e1.scaled(&alpha().times(&int(-2))).plus(&f1.scaled(&int(4)));
        assert_eq!(t.bracket(&e1, &g1), expect);
        for a in 0..t.dim() {
            for b in 0..t.dim() {
                assert!(t.is_set(a, b));
            }
        }
    }

    #[test]
    fn jacobi_tables() {
        assert!(check_jacobi(&aw3_table()).is_ok());
        assert!(check_jacobi(&aw4_table()).is_ok());
        assert!(check_antisymmetry(&aw4_table()).is_ok());
        let bad = aw3_table_with(Aw3Variant::DropAlphaFF).unwrap();
        let err = check_jacobi(&bad).unwrap_err();
        assert!(err.symbol.is_some());
    }

    #[test]
    fn json_round_trip() {
        for t in [aw3_table(), aw4_table()] {
            let s = t.to_json();
            let back = StructTable::from_json(&s).unwrap();
            assert_eq!(back, t);
            assert_eq!(back.to_json(), s);
        }
    }

    #[test]
    fn rescaling_preserves_jacobi() {
        let t = aw3_table().rescaled(0, &Rational::from_int(-1)).unwrap();
        assert!(check_jacobi(&t).is_ok());
        let (e1, e2) = (t.elem(0), t.elem(1));
        assert_eq!(t.bracket(&e1, &e2), t.elem(5).negated());
    }
}
