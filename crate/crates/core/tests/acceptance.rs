//! The nine acceptance criteria, each timed against its budget.
//!
//! Run with `cargo test -p alterna-core --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use alterna_core::coeffs::{a_vector, gen_check_c, gen_check_d};
use alterna_core::heckedihedral::{braid_f_expansion, relation_residual};
use alterna_core::presentations::bourbaki_group;
use alterna_core::report::CheckResult;
use alterna_core::verify::suites::{
    artin_relation_checks, closed_form_checks, generation_check, group_presentations_suite,
    printed_table_checks, quotient_checks, remark_iv_suite, rs_checks, ARTIN_GENERATION_MAX_N,
    ARTIN_MAX_N,
};
use alterna_core::verify::{todd_coxeter, CorpusEntry, SuiteOptions};

struct Outcome {
    id: u32,
    title: &'static str,
    passed: bool,
    elapsed: Duration,
    budget: Option<Duration>,
    detail: String,
}

fn criterion(
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    body: impl FnOnce() -> (bool, String),
) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = body();
    let elapsed = start.elapsed();
    let in_time = budget.is_none_or(|b| elapsed <= b);
    Outcome {
        id,
        title,
        passed: ok && in_time,
        elapsed,
        budget,
        detail: if in_time { detail } else { format!("{detail}; over budget") },
    }
}

fn summarize(checks: &[CheckResult]) -> (bool, String) {
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(CheckResult::line).collect();
    if failed.is_empty() {
        (true, format!("{} checks", checks.len()))
    } else {
        (false, failed.join("; "))
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn modes(m: u32) -> &'static [bool] {
    if m % 2 == 1 {
        &[true]
    } else {
        &[true, false]
    }
}

#[test]
fn acceptance() {
    let opts = SuiteOptions::default();
    let mut outcomes = Vec::new();

    outcomes.push(criterion(1, "printed coefficient table, m = 2..6", secs(1), || {
        summarize(&printed_table_checks().unwrap())
    }));

    outcomes.push(criterion(2, "recursion matches generating functions", secs(30), || {
        let (c, d) = (gen_check_c(12), gen_check_d(30));
        let detail = format!(
            "C: {} coefficients to order {}; D: {} to order {}; mismatches {:?} {:?}",
            c.coefficients_checked, c.max_order, d.coefficients_checked, d.max_order, c.mismatch, d.mismatch
        );
        (c.passed() && d.passed(), detail)
    }));

    outcomes.push(criterion(3, "closed form equals specialized recursion, m <= 20", secs(10), || {
        summarize(&closed_form_checks(20).unwrap())
    }));

    outcomes.push(criterion(4, "parity and symmetric-part vanishing, m <= 12", secs(60), || {
        let mut bad = Vec::new();
        for m in 2..=12 {
            for &equal in modes(m) {
                let e = braid_f_expansion(m, equal).unwrap();
                let a = a_vector(m, equal).unwrap();
                if !(e.parity_vanishes() && e.symmetric_part_vanishes() && e.matches(&a)) {
                    bad.push((m, equal));
                }
            }
        }
        (bad.is_empty(), format!("symbolic; failing {bad:?}"))
    }));

    outcomes.push(criterion(5, "relation residual is exactly zero, m <= 12", None, || {
        let mut bad = Vec::new();
        let mut count = 0;
        for m in 2..=12 {
            for &equal in modes(m) {
                count += 1;
                if !relation_residual(m, equal).unwrap().is_zero() {
                    bad.push((m, equal));
                }
            }
        }
        (bad.is_empty(), format!("{count} algebras, symbolic; failing {bad:?}"))
    }));

    outcomes.push(criterion(6, "group presentations define the alternating subgroup", secs(60), || {
        let (mut ok, mut detail) = summarize(&group_presentations_suite(&opts).unwrap());
        let mut expected: Vec<(String, usize)> = [("A3", 12), ("A4", 60), ("B3", 24), ("H3", 60)]
            .into_iter()
            .map(|(n, k)| (n.to_string(), k))
            .collect();
        expected.extend((2..=12).map(|m| (format!("I2({m})"), m)));
        for (name, order) in expected {
            let mat = CorpusEntry::named(&name).unwrap().matrix;
            let found = todd_coxeter(&bourbaki_group(&mat), opts.cap);
            if found != Some(order) {
                ok = false;
                detail.push_str(&format!("; {name}: {found:?} != {order}"));
            }
        }
        // Skipped checks would hide a missing model.
        if detail.contains("skipped") {
            ok = false;
        }
        (ok, detail)
    }));

    outcomes.push(criterion(7, "braid presentations hold in the Artin model", secs(30), || {
        let mut checks = Vec::new();
        for n in 2..=ARTIN_MAX_N {
            checks.extend(artin_relation_checks(n).unwrap());
        }
        for n in 2..=ARTIN_GENERATION_MAX_N {
            checks.push(generation_check(n).unwrap());
        }
        summarize(&checks)
    }));

    outcomes.push(criterion(8, "Reidemeister-Schreier reproduces the Bourbaki forms", secs(10), || {
        let mut checks = Vec::new();
        for entry in &opts.corpus {
            checks.extend(rs_checks(entry).unwrap());
        }
        summarize(&checks)
    }));

    outcomes.push(criterion(9, "quotient reductions and the non-minimality counterexample", secs(5), || {
        let mut checks = Vec::new();
        for entry in &opts.corpus {
            checks.extend(quotient_checks(entry).unwrap());
        }
        checks.extend(remark_iv_suite(&opts).unwrap());
        summarize(&checks)
    }));

    for o in &outcomes {
        let budget = o.budget.map_or("no limit".to_string(), |b| format!("limit {b:?}"));
        println!(
            "{} [{}] {} ({:.3?}, {budget}): {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.id,
            o.title,
            o.elapsed,
            o.detail
        );
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
