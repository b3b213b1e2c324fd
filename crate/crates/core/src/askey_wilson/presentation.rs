//! Generator-only presentations of the N = 3 and N = 4 tables.

use super::solve::{Insert, Reducer};
use super::table::{alpha, int, levi_civita, AwElement, AwSym, StructTable};
use super::word::FreeWord;
use crate::exactnum::{LinComb, Ring};
use crate::report::{Detail, Outcome};

fn g(i: usize) -> FreeWord {
    FreeWord::gen(i)
}

fn br(a: FreeWord, b: FreeWord) -> FreeWord {
    FreeWord::br(a, b)
}

fn eval(t: &StructTable, w: &FreeWord) -> AwElement {
    w.eval(&t.generators(), &|a, b| t.bracket(a, b)).expect("word uses the table's generators")
}

fn expect_zero(r: AwElement, what: impl FnOnce() -> String) -> Outcome {
    if r.is_zero() {
        Ok(())
    } else {
        Err(Detail::from_residual(&r).with_info(what()))
    }
}

fn named(t: &StructTable, name: &str) -> Result<AwElement, Detail> {
    t.index_of(name).map(|i| t.elem(i)).ok_or_else(|| Detail::info(format!("table has no basis element {name}")))
}

/// `f_1 = [e_2,e_3]`, `f_2 = [e_3,e_1]`, `f_3 = [e_1,e_2]`,
/// `g_1 = [e_1,[e_2,e_3]]`, `g_2 = [e_2,[e_3,e_1]]`.
pub fn check_defcom(t: &StructTable) -> Outcome {
    let defs = [
        ("f1", FreeWord::right_normed(&[2, 3])),
        ("f2", FreeWord::right_normed(&[3, 1])),
        ("f3", FreeWord::right_normed(&[1, 2])),
        ("g1", FreeWord::right_normed(&[1, 2, 3])),
        ("g2", FreeWord::right_normed(&[2, 3, 1])),
    ];
    for (name, w) in defs {
        let r = eval(t, &w).minus(&named(t, name)?);
        expect_zero(r, || format!("{name} = {w}"))?;
    }
    Ok(())
}

/// `[ē_i,[ē_i,ē_j]] = ē_j` for `i ≠ j`.
pub fn check_oa3(t: &StructTable) -> Outcome {
    for i in 1..=3 {
        for j in (1..=3).filter(|&j| j != i) {
            let r = eval(t, &FreeWord::right_normed(&[i, i, j])).minus(&eval(t, &g(j)));
            expect_zero(r, || format!("[e{i},[e{i},e{j}]] = e{j}"))?;
        }
    }
    Ok(())
}

fn distinct_triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=3).flat_map(|i| {
        (1..=3).flat_map(move |j| (1..=3).map(move |k| (i, j, k))).filter(|&(i, j, k)| i != j && j != k && i != k)
    })
}

/// `[[ē_i,ē_j],[ē_j,ē_k]] + [ē_i,ē_k] + α ε_ijk ē_j = 0`.
pub fn check_oa3q(t: &StructTable) -> Outcome {
    for (i, j, k) in distinct_triples() {
        let mut r = eval(t, &br(br(g(i), g(j)), br(g(j), g(k))));
        r.add_assign(&eval(t, &br(g(i), g(k))));
        r.add_scaled(&eval(t, &g(j)), &alpha().times(&int(levi_civita(i, j, k))));
        expect_zero(r, || format!("[[e{i},e{j}],[e{j},e{k}]] + [e{i},e{k}] + alpha eps e{j} = 0"))?;
    }
    Ok(())
}

/// `[ē_i,[ē_j,[ē_k,ē_i]]] = α ε_ijk ē_i - 2[ē_j,ē_k]`.
pub fn check_remark(t: &StructTable) -> Outcome {
    for (i, j, k) in distinct_triples() {
        let mut r = eval(t, &FreeWord::right_normed(&[i, j, k, i]));
        r.add_scaled(&eval(t, &g(i)), &alpha().times(&int(-levi_civita(i, j, k))));
        r.add_scaled(&eval(t, &br(g(j), g(k))), &int(2));
        expect_zero(r, || format!("[e{i},[e{j},[e{k},e{i}]]] = alpha eps e{i} - 2[e{j},e{k}]"))?;
    }
    Ok(())
}

/// Dimension of the span of all right-normed brackets of the generators
/// with at most `depth` letters.
pub fn generated_rank(t: &StructTable, depth: usize) -> Result<usize, Detail> {
    let n = t.generator_count();
    let mut red: Reducer<AwSym, AwSym> = Reducer::new();
    let mut words: Vec<Vec<usize>> = (1..=n).map(|i| vec![i]).collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &words {
            if let Insert::NoConstantPivot(k, _) = red.insert(eval(t, &FreeWord::right_normed(w)), LinComb::zero()) {
                return Err(Detail::from_residual(&k).with_info("word with no constant pivot"));
            }
            for i in 1..=n {
                let mut v = vec![i];
                v.extend_from_slice(w);
                next.push(v);
            }
        }
        words = next;
    }
    Ok(red.rank())
}

/// The generators span the whole table within `depth` letters.
pub fn check_generation(t: &StructTable, depth: usize) -> Outcome {
    let r = generated_rank(t, depth)?;
    if r == t.dim() {
        Ok(())
    } else {
        Err(Detail::info(format!("brackets of depth <= {depth} span {r} of {} dimensions", t.dim())))
    }
}

pub fn check_pro1(t: &StructTable) -> Vec<(&'static str, Outcome)> {
    vec![
        ("defcom", check_defcom(t)),
        ("oa3", check_oa3(t)),
        ("oa3q", check_oa3q(t)),
        ("remark", check_remark(t)),
        ("generation-rank", check_generation(t, 3)),
    ]
}

fn m4(k: usize) -> usize {
    (k - 1) % 4 + 1
}

/// Relations in `ē_1..ē_4`, indices mod 4, under `ē_i = e_i`.
pub fn check_pro2(t: &StructTable) -> Vec<(&'static str, Outcome)> {
    let mut out: Vec<(&'static str, Outcome)> = Vec::new();
    let e = |k: usize| g(m4(k));
    let run = |f: &dyn Fn(usize) -> Outcome| (1..=4).try_for_each(f);
    out.push((
        "oa4a",
        run(&|i| {
            for j in [i + 1, i + 3] {
                let r = eval(t, &br(e(i), br(e(i), e(j)))).minus(&eval(t, &e(j)));
                expect_zero(r, || format!("[e{0},[e{0},e{1}]] = e{1}", m4(i), m4(j)))?;
            }
            Ok(())
        }),
    ));
    out.push((
        "oa4b",
        run(&|i| expect_zero(eval(t, &br(e(i), e(i + 2))), || format!("[e{},e{}] = 0", m4(i), m4(i + 2)))),
    ));
    out.push((
        "oa4c",
        run(&|i| {
            let r = eval(t, &br(br(e(i), e(i + 1)), br(e(i + 1), e(i + 2))));
            expect_zero(r, || format!("oa4c at i = {i}"))
        }),
    ));
    out.push((
        "oa4d",
        run(&|i| {
            let mut r = eval(t, &br(br(e(i), e(i + 1)), br(e(i + 1), br(e(i + 2), e(i + 3)))));
            r.add_scaled(&eval(t, &e(i + 1)), &alpha());
            r.add_assign(&eval(t, &br(e(i), br(e(i + 2), e(i + 3)))));
            expect_zero(r, || format!("oa4d at i = {i}"))
        }),
    ));
    out.push((
        "oa4e",
        run(&|i| {
            let w = br(e(i), br(e(i + 1), e(i + 2)));
            let mut r = eval(t, &br(w.clone(), br(e(i + 3), w.clone())));
            r.add_scaled(&eval(t, &e(i + 3)), &int(4));
            r.add_scaled(&eval(t, &w), &alpha().times(&int(-2)));
            expect_zero(r, || format!("oa4e at i = {i}"))
        }),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::super::table::{aw3_table, aw4_table};
    use super::*;

    #[test]
    fn presentations() {
        let t3 = aw3_table();
        for (name, o) in check_pro1(&t3) {
            assert!(o.is_ok(), "{name}: {o:?}");
        }
        assert_eq!(eval(&t3, &FreeWord::right_normed(&[1, 2, 3])), t3.elem(6));
        assert_eq!(generated_rank(&t3, 2).unwrap(), 6);
        let t4 = aw4_table();
        for (name, o) in check_pro2(&t4) {
            assert!(o.is_ok(), "{name}: {o:?}");
        }
        assert!(check_generation(&t4, 4).is_ok());
    }
}
