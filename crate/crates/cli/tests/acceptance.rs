//! Acceptance run: one line per criterion with its runtime against a pinned
//! limit. Exits nonzero if any criterion fails or overruns.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use sln_core::askey_wilson::{aw3_table, aw3_table_with, build_b_aw, check_reflection_aw, generated_rank, Aw3Variant};
use sln_core::charges::{check_commutativity, check_trace_condition, corrupt_first_charge, extract_charges};
use sln_core::frt::{check_automorphism_with, check_rpm, theta1_wrong_sign};
use sln_core::loop_algebra::{LoopAlgebra, LoopSym};
use sln_core::onsager::{check_presentation_agreement, OnsagerAlgebra};
use sln_core::report::{Detail, Outcome, Report};
use sln_core::rmatrix::{build_r_args, check_cybe_with, check_skew_with, RVariant};
use sln_core::suites::{self, Which};

type Res = Result<Vec<String>, String>;

fn passed(r: sln_core::Result<Report>) -> Result<Report, String> {
    let r = r.map_err(|e| e.to_string())?;
    if r.all_passed() {
        Ok(r)
    } else {
        Err(r.to_text())
    }
}

fn ok(label: &str, o: sln_core::Result<Outcome>) -> Result<(), String> {
    match o.map_err(|e| e.to_string())? {
        Ok(()) => Ok(()),
        Err(d) => Err(format!("{label}: {}", d.render())),
    }
}

/// A negative control must fail, and the failure must carry a locator.
fn located(label: &str, o: Outcome, need: impl Fn(&Detail) -> bool) -> Result<(), String> {
    match o {
        Ok(()) => Err(format!("{label}: negative control passed")),
        Err(d) if need(&d) => Ok(()),
        Err(d) => Err(format!("{label}: failure not located: {}", d.render())),
    }
}

fn has_entry(d: &Detail) -> bool {
    d.entry.is_some() && d.residual.is_some()
}

fn rmatrix_suite() -> Res {
    for n in 2..=5 {
        passed(suites::verify_skew(n))?;
        passed(suites::verify_cybe(n))?;
        let flipped = |a: &_, b: &_| build_r_args(n, a, b, RVariant::FlipSign);
        located(&format!("skew N={n}"), check_skew_with(n, &flipped).map_err(|e| e.to_string())?, has_entry)?;
        located(&format!("cybe N={n}"), check_cybe_with(n, &flipped).map_err(|e| e.to_string())?, has_entry)?;
    }
    Ok(vec!["N=2..5, negative controls located".into()])
}

fn folding_suite() -> Res {
    for n in 2..=5 {
        passed(suites::verify_ns_cybe(n))?;
    }
    Ok(vec!["N=2..5".into()])
}

fn automorphism_suite() -> Res {
    for n in 2..=4 {
        passed(suites::verify_automorphism(Which::Theta1, n, 3, None))?;
    }
    for n in [2, 4] {
        passed(suites::verify_automorphism(Which::Theta2, n, 3, None))?;
    }
    let alg = LoopAlgebra::new(3).map_err(|e| e.to_string())?;
    let bad = check_automorphism_with(&alg, 1, &|s: &LoopSym| theta1_wrong_sign(&alg, s)).map_err(|e| e.to_string())?;
    located("wrong-sign theta1", bad, |d| d.symbol.is_some())?;
    Ok(vec![format!("levels 3, matrix forms at D={}", suites::MATRIX_FORM_CUTOFF)])
}

fn frt_suite() -> Res {
    for n in 2..=4 {
        passed(suites::verify_frt(n, 6))?;
        let alg = LoopAlgebra::new(n).map_err(|e| e.to_string())?;
        let bad = check_rpm(&alg, 6, false).map_err(|e| e.to_string())?;
        located(&format!("rpm without central term N={n}"), bad, |d| has_entry(d) && d.monomial.is_some())?;
    }
    Ok(vec!["N=2..4, D=6".into()])
}

fn onsager_suite() -> Res {
    for n in 2..=4 {
        passed(suites::verify_onsager(n, 3))?;
    }
    let bad = OnsagerAlgebra::new(3).map_err(|e| e.to_string())?.corrupted();
    located("corrupted bracket", check_presentation_agreement(&bad, 1), |d| d.symbol.is_some())?;
    Ok(vec!["N=2..4, levels <= 3".into()])
}

fn reflection_suite() -> Res {
    for (n, d) in [(2, 6), (3, 6), (4, 5)] {
        passed(suites::verify_reflection(n, d))?;
        passed(suites::verify_currents(n, d))?;
    }
    Ok(vec!["N=2,3 at D=6, N=4 at D=5".into()])
}

fn charges_suite() -> Res {
    for n in 2..=5 {
        ok(&format!("trace condition N={n}"), check_trace_condition(n))?;
    }
    let mut lambdas = Vec::new();
    for (n, k) in [(2, 4), (3, 4), (4, 3)] {
        let r = passed(suites::verify_charges(n, k))?;
        for c in r.checks.iter().filter(|c| {
            c.name.starts_with("displayed-charge[order=0") || c.name.starts_with("displayed-charge[order=1,special")
        }) {
            let info = c.detail.as_ref().and_then(|d| d.info.clone()).unwrap_or_default();
            lambdas.push(format!("N={n} {}: {info}", c.name));
        }
    }
    let ons = OnsagerAlgebra::new(2).map_err(|e| e.to_string())?;
    let charges = extract_charges(&ons, 2).map_err(|e| e.to_string())?;
    located("corrupted I_1", check_commutativity(&ons, &corrupt_first_charge(&charges)), |d| d.symbol.is_some())?;
    Ok(lambdas)
}

fn aw_suite() -> Res {
    for n in [3, 4] {
        passed(suites::verify_aw(n))?;
    }
    let bad = aw3_table_with(Aw3Variant::FlipFG).map_err(|e| e.to_string())?;
    let b = build_b_aw(&bad).map_err(|e| e.to_string())?;
    located("flipped table", check_reflection_aw(&bad, &b).map_err(|e| e.to_string())?, |d| d.monomial.is_some())?;
    let t = aw3_table();
    let rank = generated_rank(&t, 3).map_err(|d| d.render())?;
    if (t.dim(), rank) != (8, 8) {
        return Err(format!("N=3: dimension {}, depth-3 brackets span {rank}", t.dim()));
    }
    Ok(vec!["N=3: depth-3 brackets of e1, e2, e3 span all 8 dimensions; N=4 presentation holds".into()])
}

fn extraction_suite() -> Res {
    let resolved = suites::resolve_convention()
        .map_err(|e| e.to_string())?
        .ok_or("no convention reproduces both displayed tables")?;
    let conv = resolved.convention;
    let [s3, s4] = &resolved.signs;
    let mut notes = vec![format!("resolved convention {conv}, generator signs N=3 {s3:?}, N=4 {s4:?}")];
    for n in [3, 4, 5] {
        let (r, table) = suites::extract_aw(n, Some(conv)).map_err(|e| e.to_string())?;
        if !r.all_passed() {
            return Err(r.to_text());
        }
        let t = table.ok_or("no table")?;
        if n == 5 {
            notes.push(format!("N=5: dimension {}, antisymmetry and Jacobi pass", t.dim()));
        } else if !r.checks.iter().any(|c| c.name == "matches-displayed-table") {
            return Err(format!("N={n}: no comparison with the displayed table"));
        }
    }
    Ok(notes)
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_sln")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {}", out.status));
    }
    let s = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok(s.lines().filter(|l| !l.trim_start().starts_with("\"elapsed_ms\"")).collect::<Vec<_>>().join("\n"))
}

fn determinism() -> Res {
    let dir = std::env::temp_dir().join(format!("sln-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let table = |k: usize| dir.join(format!("table{k}.json")).to_string_lossy().into_owned();
    let (t1, t2) = (table(1), table(2));
    let runs: Vec<Vec<String>> = vec![
        "verify cybe --n 4".split(' ').map(String::from).collect(),
        "verify ns-cybe --n 4".split(' ').map(String::from).collect(),
        "verify skew --n 4".split(' ').map(String::from).collect(),
        "verify automorphism --which theta1 --n 3 --levels 2".split(' ').map(String::from).collect(),
        "verify automorphism --which theta2 --n 4 --levels 2".split(' ').map(String::from).collect(),
        "verify frt --n 3 --cutoff 5".split(' ').map(String::from).collect(),
        "verify onsager --n 3 --levels 2".split(' ').map(String::from).collect(),
        "verify reflection --n 3 --cutoff 5".split(' ').map(String::from).collect(),
        "verify currents --n 3 --cutoff 5".split(' ').map(String::from).collect(),
        "verify charges --n 3 --max-order 3".split(' ').map(String::from).collect(),
        "verify aw --n 3".split(' ').map(String::from).collect(),
        "verify aw --n 4".split(' ').map(String::from).collect(),
        "charges print --n 3 --max-order 3".split(' ').map(String::from).collect(),
    ];
    for args in &runs {
        let mut a: Vec<&str> = args.iter().map(String::as_str).collect();
        a.extend(["--format", "json", "--parallel", "on"]);
        let (x, y) = (cli(&a)?, cli(&a)?);
        if x != y {
            return Err(format!("{} differs between runs", args.join(" ")));
        }
    }
    let x = cli(&["extract", "aw", "--n", "5", "--out", &t1, "--format", "json", "--parallel", "on"])?;
    let y = cli(&["extract", "aw", "--n", "5", "--out", &t2, "--format", "json", "--parallel", "on"])?;
    let read = |p: &str| std::fs::read(p).map_err(|e| e.to_string());
    if x != y || read(&t1)? != read(&t2)? {
        return Err("extract aw --n 5 differs between runs".into());
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(vec![format!("{} commands, byte-identical", runs.len() + 1)])
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Res,
}

fn main() -> ExitCode {
    let min = |m: u64| Duration::from_secs(60 * m);
    let criteria = [
        Criterion { id: 1, name: "r-matrix suite", limit: Duration::from_secs(60), run: rmatrix_suite },
        Criterion { id: 2, name: "folding suite", limit: min(2), run: folding_suite },
        Criterion { id: 3, name: "automorphism suite", limit: min(2), run: automorphism_suite },
        Criterion { id: 4, name: "FRT suite", limit: min(5), run: frt_suite },
        Criterion { id: 5, name: "Onsager equivalence", limit: min(5), run: onsager_suite },
        Criterion { id: 6, name: "reflection and currents", limit: min(10), run: reflection_suite },
        Criterion { id: 7, name: "charges", limit: min(10), run: charges_suite },
        Criterion { id: 8, name: "Askey-Wilson suite", limit: min(2), run: aw_suite },
        Criterion { id: 9, name: "extraction", limit: min(15), run: extraction_suite },
        Criterion { id: 10, name: "determinism", limit: min(10), run: determinism },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let t = start.elapsed();
        let (status, notes) = match result {
            Ok(_) if t > c.limit => ("FAIL", vec![format!("overran the limit of {:?}", c.limit)]),
            Ok(notes) => ("PASS", notes),
            Err(e) => ("FAIL", vec![e]),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("[{status}] {:>2} {} ({:.2}s, limit {}s)", c.id, c.name, t.as_secs_f64(), c.limit.as_secs());
        for n in notes {
            println!("       {n}");
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
