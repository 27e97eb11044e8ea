use std::fmt::Write as _;

use alterna_core::coeffs::{a_one_param, a_vector, alpha_table, gen_check_c, gen_check_d};
use alterna_core::coxeter::{connected_extension, cycle_basis, parameter_classes};
use alterna_core::heckedihedral::{braid_f_expansion, dihedral_checks};
use alterna_core::presentations::{emit, PresentationKind};
use alterna_core::report::{all_passed, CheckResult};
use alterna_core::subgroup_rewrite::{rs_rewrite, simplify, SchreierSetup};
use alterna_core::verify::{default_corpus, load_corpus, run_suite, SuiteOptions};
use serde::Serialize;

use crate::{input, CoeffsArgs, DihedralArgs, Failure, InfoArgs, PresentArgs, RsArgs, VerifyArgs};

/// Output on success, or output plus the reason for failing.
pub type Outcome = Result<String, (String, Failure)>;

fn invalid(f: impl Into<Failure>) -> (String, Failure) {
    (String::new(), f.into())
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

/// Succeeds only if every check passed.
fn gate(out: String, passed: bool) -> Outcome {
    if passed {
        Ok(out)
    } else {
        Err((out, Failure::Checks))
    }
}

fn check_lines(checks: &[CheckResult]) -> String {
    let mut out = String::new();
    for c in checks {
        writeln!(out, "{}", c.line()).unwrap();
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} checks, {failed} failed", checks.len()).unwrap();
    out
}

pub fn coeffs(args: &CoeffsArgs, json: bool) -> Outcome {
    if args.check_gen {
        let reports = [gen_check_c(args.max), gen_check_d(args.max)];
        let passed = reports.iter().all(|r| r.passed());
        let out = if json {
            to_json(&reports)
        } else {
            let mut out = String::new();
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                write!(out, "{status} {}: {} coefficients to order {}", r.name, r.coefficients_checked, r.max_order)
                    .unwrap();
                if let Some(mm) = &r.mismatch {
                    write!(
                        out,
                        " (first mismatch from {} at m = {}, {}: expected {}, found {})",
                        mm.source, mm.m, mm.monomial, mm.expected, mm.found
                    )
                    .unwrap();
                }
                out.push('\n');
            }
            out
        };
        return gate(out, passed);
    }
    let m = args.m.expect("clap requires --m without --check-gen");
    if args.alpha {
        let table = alpha_table(m);
        if json {
            return Ok(to_json(&table));
        }
        let mut out = String::new();
        for (&(k, l, lp), v) in table.entries() {
            writeln!(out, "alpha[{k},{l},{lp}] = {v}").unwrap();
        }
        return Ok(out);
    }
    let a = if args.one_param { a_one_param(m) } else { a_vector(m, false) }.map_err(invalid)?;
    if json {
        return Ok(to_json(&a));
    }
    let mut out = String::new();
    for (k, p) in a.nonzero() {
        writeln!(out, "a{k} = {p}").unwrap();
    }
    Ok(out)
}

pub fn present(args: &PresentArgs, json: bool) -> Outcome {
    let mat = input::matrix(&args.input).map_err(invalid)?;
    let kind: PresentationKind = args.kind.parse().map_err(|e: alterna_core::Error| {
        let names: Vec<&str> = PresentationKind::ALL.iter().map(|k| k.name()).collect();
        invalid(Failure::Invalid(format!("{e}; expected one of {}", names.join(", "))))
    })?;
    let pres = emit(kind, &mat).map_err(invalid)?;
    Ok(if json { to_json(&pres) } else { pres.to_string() })
}

#[derive(Serialize)]
struct Expansion {
    m: u32,
    equal_params: bool,
    /// Keyed by k: positive for ⟨f_i,f_j⟩_k, negative for ⟨f_j,f_i⟩_{−k}.
    coefficients: Vec<(i32, String)>,
}

pub fn dihedral(args: &DihedralArgs, seed: u64, json: bool) -> Outcome {
    if args.check {
        let checks = dihedral_checks(args.m, args.eval_mode, seed, args.fuzz).map_err(invalid)?;
        let passed = all_passed(&checks);
        let out = if json { to_json(&checks) } else { check_lines(&checks) };
        return gate(out, passed);
    }
    let e = braid_f_expansion(args.m, args.one_param).map_err(invalid)?;
    let coefficients: Vec<(i32, String)> =
        e.coeffs.iter().rev().filter(|(_, p)| !p.is_zero()).map(|(&k, p)| (k, p.to_string())).collect();
    if json {
        return Ok(to_json(&Expansion {
            m: e.m,
            equal_params: e.equal_params,
            coefficients,
        }));
    }
    let mut out = format!("2^{m} (<g_i,g_j>_{m} - <g_j,g_i>_{m}) =\n", m = args.m);
    for (k, p) in coefficients {
        let word = match k {
            0 => "1".to_string(),
            k if k > 0 => format!("<f_i,f_j>_{k}"),
            k => format!("<f_j,f_i>_{}", -k),
        };
        writeln!(out, "  ({p}) * {word}").unwrap();
    }
    Ok(out)
}

pub fn rs(args: &RsArgs, json: bool) -> Outcome {
    let pres = input::presentation(&args.input).map_err(invalid)?;
    let character = input::character(&args.character, &pres).map_err(invalid)?;
    let setup = SchreierSetup::new(pres, character).map_err(invalid)?;
    let mut out = rs_rewrite(&setup).map_err(invalid)?;
    if args.simplify {
        out = simplify(&out);
    }
    Ok(if json { to_json(&out) } else { out.to_string() })
}

pub fn verify(args: &VerifyArgs, seed: u64, json: bool) -> Outcome {
    let corpus = if args.corpus == "default" {
        default_corpus()
    } else {
        let text = std::fs::read_to_string(&args.corpus)
            .map_err(|e| invalid(Failure::Invalid(format!("{}: {e}", args.corpus))))?;
        load_corpus(&text).map_err(invalid)?
    };
    let opts = SuiteOptions {
        cap: args.cap,
        corpus,
        seed,
    };
    let reports = run_suite(&args.suite, &opts).map_err(invalid)?;
    let passed = reports.iter().all(|r| r.passed);
    let out = if json {
        to_json(&reports)
    } else {
        let mut out = String::new();
        for r in &reports {
            writeln!(out, "== {} ==", r.suite).unwrap();
            out.push_str(&check_lines(&r.checks));
        }
        out
    };
    gate(out, passed)
}

#[derive(Serialize)]
struct Info {
    rank: usize,
    matrix: Vec<Vec<u32>>,
    parameter_classes: Vec<Vec<usize>>,
    /// Edges of the connected extension as `(tail, head, label)`.
    edges: Vec<(usize, usize, String)>,
    added_edges: Vec<(usize, usize)>,
    cycle_basis: Vec<Vec<usize>>,
}

pub fn info(args: &InfoArgs, json: bool) -> Outcome {
    let mat = input::matrix(&args.input).map_err(invalid)?;
    let g = connected_extension(&mat);
    let info = Info {
        rank: mat.rank(),
        matrix: mat.to_raw(),
        parameter_classes: parameter_classes(&mat).classes,
        edges: g.edges().map(|(e, l)| (e.tail, e.head, l.to_string())).collect(),
        added_edges: g.added_edges().iter().map(|e| (e.tail, e.head)).collect(),
        cycle_basis: cycle_basis(&g).cycles,
    };
    if json {
        return Ok(to_json(&info));
    }
    let mut out = String::new();
    writeln!(out, "rank: {}", info.rank).unwrap();
    write!(out, "matrix:\n{mat}").unwrap();
    if !out.ends_with('\n') {
        out.push('\n');
    }
    let classes: Vec<String> = info
        .parameter_classes
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    writeln!(out, "parameter classes: {}", classes.join(" ")).unwrap();
    let edges: Vec<String> = info.edges.iter().map(|(a, b, l)| format!("{a}-{b} ({l})")).collect();
    writeln!(out, "connected extension edges: {}", edges.join(", ")).unwrap();
    let added: Vec<String> = info.added_edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
    writeln!(out, "added edges: {}", if added.is_empty() { "none".into() } else { added.join(", ") }).unwrap();
    writeln!(out, "cycle basis: {} cycles", info.cycle_basis.len()).unwrap();
    for c in &info.cycle_basis {
        writeln!(out, "  {}", c.iter().map(usize::to_string).collect::<Vec<_>>().join(" -> ")).unwrap();
    }
    Ok(out)
}
