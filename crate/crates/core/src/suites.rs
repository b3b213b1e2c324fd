//! One function per command: each runs a suite and assembles a `Report`
//! whose check order depends only on the inputs.

use crate::askey_wilson::{
    aw3_table, aw4_table, build_b_aw, check_antisymmetry, check_jacobi, check_pro1, check_pro2, check_reflection_aw,
    extract_structure_constants, match_tables, Convention, StructTable,
};
use crate::charges::{
    charge_table, check_cancellations, check_charge_structure, check_commutativity, check_generating_commutativity,
    check_trace_condition, extract_charges, match_displayed, ChargeTable,
};
use crate::error::{config, Result};
use crate::exactnum::ParamPoly;
use crate::frt::{
    build_t, check_automorphism, check_central, check_rpm, check_rpp, check_theta1_matrix_form,
    check_theta2_matrix_form, check_trace, Half,
};
use crate::loop_algebra::{LoopAlgebra, Theta};
use crate::onsager::{
    check_bxg, check_currents, check_currents_assemble, check_oan, check_presentation_agreement, check_reflection,
    check_theta1_fixed, check_ui_relations, OnsagerAlgebra,
};
use crate::report::{Check, Detail, Outcome, Report};
use crate::rmatrix::{check_cybe, check_ns_cybe, check_rbar_folding, check_skew, validate_n};

/// Cutoff used for the matrix forms of the involutions.
pub const MATRIX_FORM_CUTOFF: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Theta1,
    Theta2,
}

impl std::str::FromStr for Which {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta1" => Ok(Which::Theta1),
            "theta2" => Ok(Which::Theta2),
            _ => Err(crate::error::Error::Parse(format!("unknown involution `{s}` (expected theta1 or theta2)"))),
        }
    }
}

fn sign_label(e: i64) -> &'static str {
    if e > 0 {
        "+1"
    } else {
        "-1"
    }
}

fn non_negative(what: &str, v: i32) -> Result<()> {
    if v < 0 {
        return Err(config(format!("{what} must be >= 0, got {v}")));
    }
    Ok(())
}

pub fn verify_cybe(n: usize) -> Result<Report> {
    let mut r = Report::new("verify cybe").param("n", n);
    r.push(Check::from_outcome("cybe", check_cybe(n)?));
    Ok(r)
}

pub fn verify_skew(n: usize) -> Result<Report> {
    let mut r = Report::new("verify skew").param("n", n);
    r.push(Check::from_outcome("skew", check_skew(n)?));
    Ok(r)
}

pub fn verify_ns_cybe(n: usize) -> Result<Report> {
    let mut r = Report::new("verify ns-cybe").param("n", n);
    r.push(Check::from_outcome("rbar-folding", check_rbar_folding(n)?));
    r.push(Check::from_outcome("ns-cybe", check_ns_cybe(n)?));
    Ok(r)
}

/// `epsilon = None` runs θ2 for both signs.
pub fn verify_automorphism(which: Which, n: usize, levels: i32, epsilon: Option<i64>) -> Result<Report> {
    non_negative("levels", levels)?;
    let alg = LoopAlgebra::new(n)?;
    let name = match which {
        Which::Theta1 => "theta1",
        Which::Theta2 => "theta2",
    };
    let mut r = Report::new("verify automorphism")
        .param("which", name)
        .param("n", n)
        .param("levels", levels)
        .param("matrix-cutoff", MATRIX_FORM_CUTOFF);
    match which {
        Which::Theta1 => {
            if epsilon.is_some() {
                return Err(config("--epsilon only applies to theta2"));
            }
            r.push(Check::from_outcome("theta1-automorphism", check_automorphism(&alg, &Theta::Theta1, levels)?));
            for (half, label) in [(Half::Plus, "plus"), (Half::Minus, "minus")] {
                let o = check_theta1_matrix_form(&alg, half, MATRIX_FORM_CUTOFF)?;
                r.push(Check::from_outcome(format!("theta1-matrix-form-{label}"), o));
            }
        }
        Which::Theta2 => {
            if !n.is_multiple_of(2) {
                return Err(config(format!("theta2 requires even N, got {n}")));
            }
            let signs = match epsilon {
                Some(e) if e == 1 || e == -1 => vec![e],
                Some(e) => return Err(config(format!("epsilon must be +1 or -1, got {e}"))),
                None => vec![1, -1],
            };
            r = r.param("epsilon", signs.iter().map(|&e| sign_label(e)).collect::<Vec<_>>().join(","));
            for e in signs {
                let s = sign_label(e);
                let theta = Theta::Theta2(ParamPoly::int(e));
                r.push(Check::from_outcome(
                    format!("theta2-automorphism[eps={s}]"),
                    check_automorphism(&alg, &theta, levels)?,
                ));
                for (half, label) in [(Half::Plus, "plus"), (Half::Minus, "minus")] {
                    let o = check_theta2_matrix_form(&alg, e, half, MATRIX_FORM_CUTOFF)?;
                    r.push(Check::from_outcome(format!("theta2-matrix-form-{label}[eps={s}]"), o));
                }
            }
        }
    }
    Ok(r)
}

pub fn verify_frt(n: usize, cutoff: i32) -> Result<Report> {
    let alg = LoopAlgebra::new(n)?;
    let mut r = Report::new("verify frt").param("n", n).param("cutoff", cutoff);
    // validates the window before any output
    let rpm = check_rpm(&alg, cutoff, true)?;
    for (half, label) in [(Half::Plus, "plus"), (Half::Minus, "minus")] {
        let t = build_t(&alg, half, cutoff);
        r.push(Check::from_outcome(format!("central-{label}"), check_central(&alg, &t)));
        r.push(Check::from_outcome(format!("trace-{label}"), check_trace(&alg, &t)));
        r.push(Check::from_outcome(format!("rpp-{label}"), check_rpp(&alg, half, cutoff)?));
    }
    r.push(Check::from_outcome("rpm", rpm));
    Ok(r)
}

/// `oan` is only defined for `N >= 3` and is omitted below that.
pub fn verify_onsager(n: usize, levels: i32) -> Result<Report> {
    non_negative("levels", levels)?;
    let ons = OnsagerAlgebra::new(n)?;
    let mut r = Report::new("verify onsager").param("n", n).param("levels", levels);
    r.push(Check::from_outcome("presentation-agreement", check_presentation_agreement(&ons, levels)));
    r.push(Check::from_outcome("theta1-fixed", check_theta1_fixed(&ons, levels)));
    r.push(Check::from_outcome("ui-relations", check_ui_relations(&ons, levels)));
    if let Some(o) = check_oan(&ons) {
        r.push(Check::from_outcome("oan", o));
    }
    Ok(r)
}

pub fn verify_reflection(n: usize, cutoff: i32) -> Result<Report> {
    let ons = OnsagerAlgebra::new(n)?;
    let refl = check_reflection(&ons, cutoff)?;
    let mut r = Report::new("verify reflection").param("n", n).param("cutoff", cutoff);
    r.push(Check::from_outcome("b-from-t-plus", check_bxg(&ons, cutoff)?));
    r.push(Check::from_outcome("reflection", refl));
    Ok(r)
}

pub fn verify_currents(n: usize, cutoff: i32) -> Result<Report> {
    let ons = OnsagerAlgebra::new(n)?;
    let cur = check_currents(&ons, cutoff)?;
    let mut r = Report::new("verify currents").param("n", n).param("cutoff", cutoff);
    r.push(Check::from_outcome("currents-assemble", check_currents_assemble(&ons, cutoff)));
    r.push(Check::from_outcome("currents", cur));
    Ok(r)
}

/// Cutoff of `b(x)` used for the generating-function commutativity.
pub fn charges_cutoff(max_order: i32) -> i32 {
    max_order + 2
}

pub fn verify_charges(n: usize, max_order: i32) -> Result<Report> {
    non_negative("max order", max_order)?;
    let ons = OnsagerAlgebra::new(n)?;
    let cutoff = charges_cutoff(max_order);
    let mut r = Report::new("verify charges").param("n", n).param("max-order", max_order).param("cutoff", cutoff);
    r.push(Check::from_outcome("trace-condition", check_trace_condition(n)?));
    r.push(Check::from_outcome("cancellations", check_cancellations(n)?));
    r.push(Check::from_outcome("b-commutativity", check_generating_commutativity(&ons, cutoff)));
    let charges = extract_charges(&ons, max_order)?;
    r.push(Check::from_outcome("charge-commutativity", check_commutativity(&ons, &charges)));
    r.push(Check::from_outcome("charge-structure", check_charge_structure(&ons, &charges)));
    for m in match_displayed(&ons, &charges) {
        let form = if m.generic_formula { "generic" } else { "special" };
        let name = format!("displayed-charge[order={},{form}]", m.order);
        r.push(match m.lambda {
            Some(l) => Check::pass_with(name, Detail::info(format!("lambda = {l}"))),
            None => Check::fail(name, Detail::info("expansion coefficient is not proportional to the formula")),
        });
    }
    Ok(r)
}

pub fn print_charges(n: usize, max_order: i32) -> Result<ChargeTable> {
    let ons = OnsagerAlgebra::new(n)?;
    Ok(charge_table(n, &extract_charges(&ons, max_order)?))
}

fn first_failure(outcomes: Vec<(&'static str, Outcome)>) -> Outcome {
    for (name, o) in outcomes {
        o.map_err(|d| {
            let info = match &d.info {
                Some(i) => format!("{name}: {i}"),
                None => name.to_string(),
            };
            d.with_info(info)
        })?;
    }
    Ok(())
}

pub fn displayed_table(n: usize) -> Result<StructTable> {
    match n {
        3 => Ok(aw3_table()),
        4 => Ok(aw4_table()),
        _ => Err(config(format!("bracket tables are displayed for N = 3, 4 only, got {n}"))),
    }
}

pub fn verify_aw(n: usize) -> Result<Report> {
    let t = displayed_table(n)?;
    let mut r = Report::new("verify aw").param("n", n);
    r.push(Check::from_outcome("jacobi", check_antisymmetry(&t).and_then(|_| check_jacobi(&t))));
    r.push(Check::from_outcome("reflection", check_reflection_aw(&t, &build_b_aw(&t)?)?));
    let (name, o) = if n == 3 {
        ("pro1-presentation", first_failure(check_pro1(&t)))
    } else {
        ("pro2-presentation", first_failure(check_pro2(&t)))
    };
    r.push(Check::from_outcome(name, o));
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolved {
    pub convention: Convention,
    /// Generator signs of the isomorphisms onto the N = 3 and N = 4 tables.
    pub signs: [Vec<i64>; 2],
}

/// The ansatz convention under which extraction reproduces both displayed
/// tables.
pub fn resolve_convention() -> Result<Option<Resolved>> {
    for conv in Convention::ALL {
        let mut signs = Vec::new();
        for n in [3, 4] {
            let ex = extract_structure_constants(n, conv)?;
            if !ex.consistent() || !ex.determined() {
                break;
            }
            match match_tables(&displayed_table(n)?, &ex.table) {
                Ok(m) => signs.push(m.signs),
                Err(_) => break,
            }
        }
        if let [s3, s4] = &signs[..] {
            return Ok(Some(Resolved { convention: conv, signs: [s3.clone(), s4.clone()] }));
        }
    }
    Ok(None)
}

fn signs_text(s: &[i64]) -> String {
    let parts: Vec<String> = s.iter().map(|&e| sign_label(e).to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Extraction report and, when every equation is consistent and every
/// bracket determined, the table. Without an explicit convention the
/// resolved one is used.
pub fn extract_aw(n: usize, convention: Option<Convention>) -> Result<(Report, Option<StructTable>)> {
    validate_n(n)?;
    if n < 3 {
        return Err(config(format!("extraction needs N >= 3, got {n}")));
    }
    let conv = match convention {
        Some(c) => c,
        None => resolve_convention()?.map(|r| r.convention).unwrap_or(Convention::Literal),
    };
    let ex = extract_structure_constants(n, conv)?;
    let mut r = Report::new("extract aw")
        .param("n", n)
        .param("convention", conv)
        .param("equations", ex.equations)
        .param("dimension", ex.words.len());
    r.push(match ex.inconsistent.first() {
        None => Check::pass("consistent"),
        Some(e) => Check::fail(
            "consistent",
            Detail::info(format!("{} inconsistent equations, first: {e}", ex.inconsistent.len())),
        ),
    });
    r.push(match ex.free.first() {
        None => Check::pass("determined"),
        Some(p) => {
            Check::fail("determined", Detail::info(format!("{} undetermined brackets, first: {p}", ex.free.len())))
        }
    });
    if !ex.dependent.is_empty() {
        let (w, v) = &ex.dependent[0];
        r.push(Check::fail(
            "independent-basis",
            Detail::info(format!("{} basis words are dependent, first: {w} = {v}", ex.dependent.len())),
        ));
    }
    if !(ex.consistent() && ex.determined()) {
        return Ok((r, None));
    }
    let t = ex.table;
    r.push(Check::from_outcome("antisymmetry", check_antisymmetry(&t)));
    r.push(Check::from_outcome("jacobi", check_jacobi(&t)));
    if let Ok(shown) = displayed_table(n) {
        r.push(match match_tables(&shown, &t) {
            Ok(m) => Check::pass_with(
                "matches-displayed-table",
                Detail::info(format!("generator signs {}", signs_text(&m.signs))),
            ),
            Err(d) => Check::fail("matches-displayed-table", d),
        });
    }
    Ok((r, Some(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_reports() {
        let r = verify_cybe(2).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.checks.len(), 1);
        let r = verify_aw(4).unwrap();
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["jacobi", "reflection", "pro2-presentation"]);
        assert!(r.all_passed(), "{}", r.to_text());
        assert!(verify_aw(5).is_err());
        assert!(verify_automorphism(Which::Theta2, 3, 1, None).is_err());
    }

    #[test]
    fn convention_resolves_to_literal() {
        let r = resolve_convention().unwrap().unwrap();
        assert_eq!(r.convention, Convention::Literal);
        assert_eq!(r.signs, [vec![1; 3], vec![1; 4]]);
    }

    #[test]
    fn empty_window_is_an_error() {
        assert!(matches!(verify_frt(2, 1), Err(crate::error::Error::EmptyWindow { .. })));
    }
}
