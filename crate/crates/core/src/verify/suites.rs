//! The named verification suites.

use std::collections::{BTreeMap, BTreeSet};

use crate::coeffs::{a_one_param, a_vector, gen_check_c, gen_check_d, symmetric_part_vanishes};
use crate::coxeter::{CoxeterMatrix, Label};
use crate::error::Result;
use crate::exactmath::LaurentPoly;
use crate::heckedihedral::dihedral_checks;
use crate::presentations::names::{big_r, big_r_prime, indexed};
use crate::presentations::{
    bourbaki_braid, bourbaki_group, bourbaki_hecke, braid_group, coxeter_group, edge_braid,
    edge_group, edge_hecke, iso_maps, substitute, typea_presentations, FreeWord, GenMap,
    GroupPresentation, Relation,
};
use crate::report::CheckResult;
use crate::subgroup_rewrite::{rs_rewrite, simplify, SchreierSetup, SignCharacter};

use super::hecke::hecke_check;
use super::{
    artin_rep, assign_via, bfs_closure, check_relations, check_relations_via, coxeter_model,
    eval_word, indexed_assignment, power_exponent, regular_model, todd_coxeter, Affine,
    CorpusEntry, FreeGroupAuto, GroupElement, Permutation, SuiteOptions,
};

/// Largest type-A rank for the Artin-model relation checks.
pub const ARTIN_MAX_N: usize = 6;
/// Largest rank for generation, τ and ω checks.
pub const ARTIN_GENERATION_MAX_N: usize = 4;
/// Fuzzed triples per dihedral algebra.
const DIHEDRAL_FUZZ: usize = 6;

fn w(s: &str) -> FreeWord {
    s.parse().expect("well-formed word")
}

fn fmt_failures(failed: &[Relation]) -> String {
    let list: Vec<String> = failed.iter().take(3).map(Relation::to_string).collect();
    format!("{} failed, e.g. {}", failed.len(), list.join("; "))
}

fn relations_check(label: String, failed: Vec<Relation>, total: usize) -> CheckResult {
    let detail = if failed.is_empty() {
        format!("{total} relations")
    } else {
        fmt_failures(&failed)
    };
    CheckResult::new(label, failed.is_empty()).with_detail(detail)
}

fn equality_check<T: PartialEq + std::fmt::Debug>(label: String, found: T, expected: T) -> CheckResult {
    let ok = found == expected;
    let detail = if ok {
        format!("{found:?}")
    } else {
        format!("found {found:?}, expected {expected:?}")
    };
    CheckResult::new(label, ok).with_detail(detail)
}

/// A skipped check: passes, with the reason recorded.
fn skipped(label: String, why: impl std::fmt::Display) -> CheckResult {
    CheckResult::new(label, true).with_detail(format!("skipped: {why}"))
}

// ---------------------------------------------------------------- coeffs

/// The printed a_k for m = 2..6.
fn printed_table() -> Vec<(u32, Vec<(u32, &'static str)>)> {
    vec![
        (2, vec![(2, "1")]),
        (3, vec![(3, "1"), (1, "b0^2")]),
        (4, vec![(4, "1"), (2, "2*b0*b1")]),
        (5, vec![(5, "1"), (3, "3*b0^2"), (1, "b0^4 + b0^2")]),
        (6, vec![(6, "1"), (4, "4*b0*b1"), (2, "3*b0^2*b1^2 + b0^2 + b1^2")]),
    ]
}

fn expected_vector(m: u32, entries: &[(u32, &str)], equal: bool) -> BTreeMap<u32, LaurentPoly> {
    let mut out: BTreeMap<u32, LaurentPoly> = (1..=m).map(|k| (k, LaurentPoly::zero())).collect();
    for &(k, p) in entries {
        let p: LaurentPoly = p.parse().expect("table entries parse");
        let p = if equal { p.rename(|v| if v == crate::Var::B(1) { crate::Var::B(0) } else { v }) } else { p };
        out.insert(k, p);
    }
    out
}

pub fn printed_table_checks() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for (m, entries) in printed_table() {
        let two = m % 2 == 0;
        let found = a_vector(m, !two)?;
        out.push(equality_check(
            format!("printed a_k, m={m}"),
            found.a,
            expected_vector(m, &entries, !two),
        ));
        out.push(equality_check(
            format!("printed a_k, m={m}, closed form"),
            a_one_param(m)?.a,
            expected_vector(m, &entries, true),
        ));
    }
    Ok(out)
}

pub fn coeffs_suite() -> Result<Vec<CheckResult>> {
    let mut out = printed_table_checks()?;
    for report in [gen_check_c(12), gen_check_d(30)] {
        let detail = match &report.mismatch {
            None => format!("{} coefficients up to order {}", report.coefficients_checked, report.max_order),
            Some(mm) => format!("{mm:?}"),
        };
        out.push(CheckResult::new(format!("generating function {}", report.name), report.passed()).with_detail(detail));
    }
    out.extend(closed_form_checks(20)?);
    for m in 2..=20 {
        let modes: &[bool] = if m % 2 == 1 { &[true] } else { &[true, false] };
        for &equal in modes {
            out.push(CheckResult::new(
                format!("symmetric part vanishes, m={m}, {}", mode_name(equal)),
                symmetric_part_vanishes(m, equal),
            ));
        }
    }
    Ok(out)
}

fn mode_name(equal: bool) -> &'static str {
    if equal {
        "one-param"
    } else {
        "two-param"
    }
}

/// Closed one-parameter formula against the specialized recursion.
pub fn closed_form_checks(max_m: u32) -> Result<Vec<CheckResult>> {
    (2..=max_m)
        .map(|m| {
            let spec = a_vector(m, m % 2 == 1)?.specialize_equal();
            Ok(equality_check(format!("closed form = specialization, m={m}"), a_one_param(m)?.a, spec.a))
        })
        .collect()
}

// -------------------------------------------------------------- dihedral

pub fn dihedral_suite(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for m in 2..=12 {
        out.extend(dihedral_checks(m, true, opts.seed, DIHEDRAL_FUZZ)?);
    }
    Ok(out)
}

// --------------------------------------------------- group presentations

/// A permutation model of a corpus entry, if one fits within `cap`.
pub struct Model {
    pub s: BTreeMap<String, Permutation>,
    pub identity: Permutation,
    pub order: usize,
}

pub fn model_for(entry: &CorpusEntry, cap: usize) -> std::result::Result<Model, String> {
    let by_name = CoxeterMatrix::named(&entry.name).is_ok_and(|m| m == entry.matrix);
    let gens = if by_name {
        coxeter_model(&entry.name, cap)
    } else {
        regular_model(&entry.matrix, cap)
    }
    .map_err(|e| e.to_string())?;
    let degree = gens[0].degree();
    let order = bfs_closure(&gens, degree, cap.max(1) * 4)
        .ok_or_else(|| format!("group order exceeds {}", cap.max(1) * 4))?;
    Ok(Model {
        s: indexed_assignment("s", &gens),
        identity: Permutation::identity(degree),
        order,
    })
}

pub fn group_presentation_checks(entry: &CorpusEntry, opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let name = &entry.name;
    let mat = &entry.matrix;
    let mut out = Vec::new();
    let model = match model_for(entry, opts.cap) {
        Ok(m) => m,
        Err(why) => return Ok(vec![skipped(format!("{name}: concrete model"), why)]),
    };
    let id = &model.identity;
    let maps = iso_maps(mat);
    out.push(relations_check(
        format!("{name}: Coxeter relations in model"),
        check_relations(&coxeter_group(mat), &model.s, id)?,
        coxeter_group(mat).relations.len(),
    ));
    let half = model.order / 2;
    let mut images = BTreeMap::new();
    for (flavor, pres, map) in [
        ("bourbaki", bourbaki_group(mat), "bourbaki-group-to-coxeter"),
        ("edge", edge_group(mat), "edge-group-to-coxeter"),
    ] {
        let map = &maps[map];
        out.push(relations_check(
            format!("{name}: {flavor} relations hold"),
            check_relations_via(&pres, map, &model.s, id)?,
            pres.relations.len(),
        ));
        let assign = assign_via(&pres, map, &model.s, id)?;
        let gens: Vec<Permutation> = assign.values().cloned().collect();
        let closure = if gens.is_empty() {
            Some(1)
        } else {
            bfs_closure(&gens, id.degree(), opts.cap.max(model.order))
        };
        out.push(equality_check(format!("{name}: {flavor} image order = |G|/2"), closure, Some(half)));
        out.push(match todd_coxeter(&pres, opts.cap) {
            Some(k) => equality_check(format!("{name}: {flavor} Todd-Coxeter order = |G|/2"), k, half),
            None => skipped(format!("{name}: {flavor} Todd-Coxeter order"), format!("coset cap {} exceeded", opts.cap)),
        });
        images.insert(flavor, (pres, assign));
    }
    // The maps between the two presentations agree with the maps to G.
    for (from, to, map) in [
        ("edge", "bourbaki", "edge-group-to-bourbaki-group"),
        ("bourbaki", "edge", "bourbaki-group-to-edge-group"),
    ] {
        let (pres, direct) = &images[from];
        let via = assign_via(pres, &maps[map], &images[to].1, id)?;
        out.push(CheckResult::new(format!("{name}: {map} commutes with the maps to G"), &via == direct));
    }
    for (pres, map, flavor) in [
        (bourbaki_hecke(mat)?, "bourbaki-hecke-to-hecke", "bourbaki"),
        (edge_hecke(mat)?, "edge-hecke-to-hecke", "edge"),
    ] {
        out.push(hecke_check(
            &format!("{name}: {flavor} algebra relations vanish"),
            mat,
            &pres,
            &maps[map],
            opts.seed,
        )?);
    }
    Ok(out)
}

pub fn group_presentations_suite(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for entry in &opts.corpus {
        out.extend(group_presentation_checks(entry, opts)?);
    }
    Ok(out)
}

// --------------------------------------------------- braid presentations

/// `r_i ↦ g_{i−1} g_i⁻¹`, `t_i ↦ g_i²` for the type-A edge presentation.
pub fn typea_edge_map(n: usize) -> GenMap {
    let g = |i: usize| FreeWord::gen(&indexed("g", i));
    let mut m = GenMap::new("typeA-edge-braid-to-braid");
    for i in 1..n {
        m = m.with(indexed("r", i), g(i - 1).concat(&g(i).inverse()));
    }
    for i in 0..n {
        m = m.with(indexed("t", i), g(i).pow(2));
    }
    m
}

/// The printed form `r_i t_i r_i = r_i⁻¹ t_i⁻¹` of the odd-label relation.
pub fn misprinted_relations(n: usize) -> Vec<Relation> {
    (1..n)
        .map(|i| {
            let (r, t) = (FreeWord::gen(&indexed("r", i)), FreeWord::gen(&indexed("t", i)));
            Relation::new(r.concat(&t).concat(&r), r.inverse().concat(&t.inverse()))
        })
        .collect()
}

struct Artin {
    g: BTreeMap<String, FreeGroupAuto>,
    id: FreeGroupAuto,
}

impl Artin {
    fn new(n: usize) -> Self {
        Artin {
            g: indexed_assignment("g", &artin_rep(n)),
            id: FreeGroupAuto::identity(n + 1),
        }
    }

    fn eval(&self, word: &FreeWord) -> Result<FreeGroupAuto> {
        eval_word(word, &self.g, &self.id)
    }
}

/// Relation, map-consistency and misprint checks for `A_n` in the Artin model.
pub fn artin_relation_checks(n: usize) -> Result<Vec<CheckResult>> {
    let mat = CoxeterMatrix::named(&format!("A{n}"))?;
    let maps = iso_maps(&mat);
    let art = Artin::new(n);
    let mut out = Vec::new();
    let braid = braid_group(&mat);
    out.push(relations_check(
        format!("A{n}: braid relations in Artin model"),
        check_relations(&braid, &art.g, &art.id)?,
        braid.relations.len(),
    ));
    let (typea, typea_edge) = typea_presentations(n)?;
    let psi = &maps["bourbaki-braid-to-braid"];
    let edge_map = typea_edge_map(n);
    for (label, pres, map) in [
        ("rel-braid", bourbaki_braid(&mat), psi),
        ("rel-braid2", edge_braid(&mat), &maps["edge-braid-to-braid"]),
        ("braid-A+", typea, psi),
        ("braid2-A+", typea_edge.clone(), &edge_map),
    ] {
        out.push(relations_check(
            format!("A{n}: {label} holds in Artin model"),
            check_relations_via(&pres, map, &art.g, &art.id)?,
            pres.relations.len(),
        ));
    }
    let mis = GroupPresentation::new(typea_edge.generators.clone(), misprinted_relations(n))?;
    let failed = check_relations_via(&mis, &edge_map, &art.g, &art.id)?;
    out.push(
        CheckResult::new(
            format!("A{n}: printed r_i t_i r_i = r_i^-1 t_i^-1 fails"),
            failed.len() == mis.relations.len(),
        )
        .with_detail(format!("{} of {} fail", failed.len(), mis.relations.len())),
    );
    // Maps between the two braid presentations agree with the maps to B(G).
    let bb = bourbaki_braid(&mat);
    let eb = edge_braid(&mat);
    let bb_img = assign_via(&bb, psi, &art.g, &art.id)?;
    let eb_img = assign_via(&eb, &maps["edge-braid-to-braid"], &art.g, &art.id)?;
    out.push(CheckResult::new(
        format!("A{n}: edge-braid-to-bourbaki-braid commutes with the maps to B(G)"),
        assign_via(&eb, &maps["edge-braid-to-bourbaki-braid"], &bb_img, &art.id)? == eb_img,
    ));
    out.push(CheckResult::new(
        format!("A{n}: bourbaki-braid-to-edge-braid commutes with the maps to B(G)"),
        assign_via(&bb, &maps["bourbaki-braid-to-edge-braid"], &eb_img, &art.id)? == bb_img,
    ));
    Ok(out)
}

/// `g_i g_j = ψ(R'_i R_j)` for all `i, j`.
pub fn generation_check(n: usize) -> Result<CheckResult> {
    let mat = CoxeterMatrix::named(&format!("A{n}"))?;
    let psi = &iso_maps(&mat)["bourbaki-braid-to-braid"];
    let art = Artin::new(n);
    let mut bad = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = FreeWord::gen(&indexed("g", i)).concat(&FreeWord::gen(&indexed("g", j)));
            let rhs = substitute(&FreeWord::gen(&big_r_prime(i)).concat(&FreeWord::gen(&big_r(j))), psi)?;
            if art.eval(&lhs)? != art.eval(&rhs)? {
                bad.push((i, j));
            }
        }
    }
    Ok(CheckResult::new(format!("A{n}: g_i g_j = psi(R'_i R_j)"), bad.is_empty())
        .with_detail(format!("{} pairs, failing {bad:?}", n * n)))
}

/// τ on generators agrees with reversal of their braid-group images.
fn tau_check(n: usize, pres: &GroupPresentation, to_braid: &GenMap, tau: &GenMap) -> Result<CheckResult> {
    let art = Artin::new(n);
    let mut bad = Vec::new();
    for gen in &pres.generators {
        let img = substitute(&FreeWord::gen(gen), to_braid)?;
        let tau_img = substitute(&substitute(&FreeWord::gen(gen), tau)?, to_braid)?;
        if art.eval(&img.reversed())? != art.eval(&tau_img)? {
            bad.push(gen.clone());
        }
    }
    Ok(CheckResult::new(format!("A{n}: {} is word reversal", tau.name), bad.is_empty())
        .with_detail(format!("{} generators, failing {bad:?}", pres.generators.len())))
}

/// ω² is conjugation by `R_0`, and ω preserves the relations.
fn omega_checks(n: usize) -> Result<Vec<CheckResult>> {
    let mat = CoxeterMatrix::named(&format!("A{n}"))?;
    let maps = iso_maps(&mat);
    let (psi, omega) = (&maps["bourbaki-braid-to-braid"], &maps["omega"]);
    let art = Artin::new(n);
    let pres = bourbaki_braid(&mat);
    let r0 = FreeWord::gen(&big_r(0));
    let mut bad = Vec::new();
    for gen in &pres.generators {
        let x = FreeWord::gen(gen);
        let twice = substitute(&substitute(&x, omega)?, omega)?;
        let conj = r0.concat(&twice).concat(&r0.inverse());
        if art.eval(&substitute(&conj, psi)?)? != art.eval(&substitute(&x, psi)?)? {
            bad.push(gen.clone());
        }
    }
    let assign = assign_via(&pres, psi, &art.g, &art.id)?;
    Ok(vec![
        CheckResult::new(format!("A{n}: R0 omega^2(x) R0^-1 = x"), bad.is_empty())
            .with_detail(format!("failing {bad:?}")),
        relations_check(
            format!("A{n}: omega preserves rel-braid"),
            check_relations_via(&pres, omega, &assign, &art.id)?,
            pres.relations.len(),
        ),
    ])
}

/// Images of `r_i`, `t_j` commute when `|i − j| > 2`.
pub fn locality_check(n: usize) -> Result<CheckResult> {
    let art = Artin::new(n);
    let map = typea_edge_map(n);
    let img = |name: String| -> Result<FreeGroupAuto> { art.eval(&substitute(&FreeWord::gen(&name), &map)?) };
    let mut pairs = 0;
    let mut bad = Vec::new();
    let gens: Vec<(char, usize)> = (1..n).map(|i| ('r', i)).chain((0..n).map(|i| ('t', i))).collect();
    for &(a, i) in &gens {
        for &(b, j) in &gens {
            if i.abs_diff(j) <= 2 || (a, i) >= (b, j) {
                continue;
            }
            pairs += 1;
            let (x, y) = (img(indexed(&a.to_string(), i))?, img(indexed(&b.to_string(), j))?);
            if x.mul(&y) != y.mul(&x) {
                bad.push(format!("{a}{i},{b}{j}"));
            }
        }
    }
    Ok(CheckResult::new(format!("A{n}: generators at distance > 2 commute"), bad.is_empty())
        .with_detail(format!("{pairs} pairs, failing {bad:?}")))
}

/// Quotients by the squares of the braid generators give the group presentations.
pub fn quotient_checks(entry: &CorpusEntry) -> Result<Vec<CheckResult>> {
    let (name, mat) = (&entry.name, &entry.matrix);
    let maps = iso_maps(mat);
    let bg = bourbaki_group(mat);
    let eg = edge_group(mat);
    let bq = bourbaki_braid(mat).substituted(&maps["bourbaki-braid-quotient"], bg.generators.clone())?;
    let eq = edge_braid(mat).substituted(&maps["edge-braid-quotient"], eg.generators.clone())?;
    Ok(vec![
        CheckResult::new(
            format!("{name}: rel-braid mod R0, R'_i R_i gives the Bourbaki presentation"),
            bq.relator_set() == bg.relator_set(),
        ),
        CheckResult::new(
            format!("{name}: rel-braid2 mod t_i gives the edge presentation"),
            eq.relator_set() == eg.relator_set(),
        ),
    ])
}

/// Relations of the braid presentations hold in `G` under `g_i ↦ s_i`.
fn coxeter_quotient_checks(entry: &CorpusEntry, cap: usize) -> Result<Vec<CheckResult>> {
    let name = &entry.name;
    let model = match model_for(entry, cap) {
        Ok(m) => m,
        Err(why) => return Ok(vec![skipped(format!("{name}: braid relations in G"), why)]),
    };
    let g: BTreeMap<String, Permutation> = model
        .s
        .iter()
        .map(|(k, v)| (k.replacen('s', "g", 1), v.clone()))
        .collect();
    let maps = iso_maps(&entry.matrix);
    let mut out = Vec::new();
    for (label, pres, map) in [
        ("rel-braid", bourbaki_braid(&entry.matrix), "bourbaki-braid-to-braid"),
        ("rel-braid2", edge_braid(&entry.matrix), "edge-braid-to-braid"),
    ] {
        out.push(relations_check(
            format!("{name}: {label} holds in G"),
            check_relations_via(&pres, &maps[map], &g, &model.identity)?,
            pres.relations.len(),
        ));
    }
    Ok(out)
}

pub fn braid_presentations_suite(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 2..=ARTIN_MAX_N {
        out.extend(artin_relation_checks(n)?);
        out.push(locality_check(n)?);
    }
    for n in 2..=ARTIN_GENERATION_MAX_N {
        let mat = CoxeterMatrix::named(&format!("A{n}"))?;
        let maps = iso_maps(&mat);
        out.push(generation_check(n)?);
        out.push(tau_check(n, &bourbaki_braid(&mat), &maps["bourbaki-braid-to-braid"], &maps["tau-bourbaki-braid"])?);
        out.push(tau_check(n, &edge_braid(&mat), &maps["edge-braid-to-braid"], &maps["tau-edge-braid"])?);
        out.extend(omega_checks(n)?);
    }
    for entry in &opts.corpus {
        out.extend(quotient_checks(entry)?);
        out.extend(coxeter_quotient_checks(entry, opts.cap)?);
    }
    Ok(out)
}

// -------------------------------------------------------------------- rs

pub fn rs_checks(entry: &CorpusEntry) -> Result<Vec<CheckResult>> {
    let (name, mat) = (&entry.name, &entry.matrix);
    let mut out = Vec::new();
    let cox = coxeter_group(mat);
    let rs = rs_rewrite(&SchreierSetup::new(cox.clone(), SignCharacter::all_minus(&cox))?)?;
    out.push(equality_check(
        format!("{name}: rs doubles the Coxeter relations"),
        rs.relations.len(),
        2 * cox.relations.len(),
    ));
    let simple = simplify(&rs);
    let bg = bourbaki_group(mat);
    out.push(equality_check(format!("{name}: rs generators match Bourbaki"), &simple.generators, &bg.generators));
    out.push(CheckResult::new(
        format!("{name}: rs reproduces the Bourbaki group relations"),
        simple.relator_set() == bg.relator_set(),
    ));
    let braid = braid_group(mat);
    let rsb = rs_rewrite(&SchreierSetup::new(braid.clone(), SignCharacter::all_minus(&braid))?)?;
    out.push(equality_check(
        format!("{name}: rs doubles the braid relations"),
        rsb.relations.len(),
        2 * braid.relations.len(),
    ));
    let bb = bourbaki_braid(mat);
    out.push(CheckResult::new(
        format!("{name}: rs reproduces rel-braid"),
        simplify(&rsb).equation_set() == simplify(&bb).equation_set(),
    ));
    Ok(out)
}

pub fn rs_suite(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for entry in &opts.corpus {
        out.extend(rs_checks(entry)?);
    }
    Ok(out)
}

// ------------------------------------------------------------- remark iv

/// In the quotient of `⟨g0, g1 | (g0g1)² = (g1g0)²⟩` by `g0²`, modeled by
/// the swap and a unit translation of `Z²`, neither of `g1g0⁻¹`, `g0g1`
/// lies in the cyclic group generated by the other.
pub fn affine_counterexample() -> Result<Vec<CheckResult>> {
    let mat = CoxeterMatrix::named("B2")?;
    let mut pres = braid_group(&mat);
    pres.relations.push(Relation::relator(w("g0^2")));
    let assign: BTreeMap<String, Affine> = [
        ("g0".to_string(), Affine::swap()),
        ("g1".to_string(), Affine::translation([1, 0])),
    ]
    .into();
    let id = Affine::identity();
    let failed = check_relations(&pres, &assign, &id)?;
    let total = pres.relations.len();
    let ev = |s: &str| eval_word(&w(s), &assign, &id);
    let (h, target) = (ev("g0 g1")?, ev("g1 g0^-1")?);
    let infinite = h.mul(&h) != id && target.mul(&target) != id;
    Ok(vec![
        relations_check("model satisfies the relations of the quotient".into(), failed, total),
        CheckResult::new("model images have infinite order", infinite),
        CheckResult::new("g1 g0^-1 is not in <g0^2, g0 g1>", power_exponent(&h, &target).is_none()),
        CheckResult::new("g0 g1 is not in <g0^2, g1 g0^-1>", power_exponent(&target, &h).is_none()),
    ])
}

/// For `m_0j = 2`, the relations of rel-braid involving only `R_0, R_j,
/// R'_j` reduce to `R'_j = R_j R_0⁻¹ = R_0⁻¹ R_j`.
pub fn commuting_reduction_checks(entry: &CorpusEntry) -> Result<Vec<CheckResult>> {
    let (name, mat) = (&entry.name, &entry.matrix);
    let pres = bourbaki_braid(mat);
    let mut out = Vec::new();
    for j in 1..mat.rank() {
        if mat.m(0, j) != Label::Finite(2) {
            continue;
        }
        let local: BTreeSet<String> = [big_r(0), big_r_prime(0), big_r(j), big_r_prime(j)].into();
        let mut map = GenMap::new("R'0 = 1");
        for g in &local {
            map = map.with(g.clone(), if *g == big_r_prime(0) { FreeWord::one() } else { FreeWord::gen(g) });
        }
        let mut found = BTreeSet::new();
        for r in &pres.relations {
            if r.as_relator().generators().iter().all(|g| local.contains(*g)) {
                let r = r.map_words(|x| substitute(x, &map))?;
                if !r.is_tautology() {
                    found.insert(r.as_relator().canonical_relator().to_string());
                }
            }
        }
        let (r0, rj, rpj) = (FreeWord::gen(&big_r(0)), FreeWord::gen(&big_r(j)), FreeWord::gen(&big_r_prime(j)));
        let expected: BTreeSet<String> = [
            rpj.concat(&r0).concat(&rj.inverse()).canonical_relator().to_string(),
            r0.concat(&rpj).concat(&rj.inverse()).canonical_relator().to_string(),
        ]
        .into();
        out.push(equality_check(format!("{name}: m_0{j} = 2 gives R'_{j} = R_{j} R_0^-1 = R_0^-1 R_{j}"), found, expected));
    }
    Ok(out)
}

/// `R'_j = R_j^{−(m+1)/2} R_0 R_j^{(m−1)/2}` for odd `m = m_0j`, as images
/// under `g ↦ braid group` (type A, Artin model) or `g_i ↦ s_i`.
fn odd_identity(mat: &CoxeterMatrix, j: usize) -> Option<(FreeWord, FreeWord)> {
    let m = mat.m(0, j).finite().filter(|m| m % 2 == 1)? as i32;
    let rj = FreeWord::gen(&big_r(j));
    let rhs = rj.pow(-(m + 1) / 2).concat(&FreeWord::gen(&big_r(0))).concat(&rj.pow((m - 1) / 2));
    Some((FreeWord::gen(&big_r_prime(j)), rhs))
}

pub fn odd_reduction_checks(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 2..=ARTIN_MAX_N {
        let mat = CoxeterMatrix::named(&format!("A{n}"))?;
        let psi = &iso_maps(&mat)["bourbaki-braid-to-braid"];
        let art = Artin::new(n);
        for j in 1..n {
            if let Some((lhs, rhs)) = odd_identity(&mat, j) {
                let ok = art.eval(&substitute(&lhs, psi)?)? == art.eval(&substitute(&rhs, psi)?)?;
                out.push(CheckResult::new(format!("A{n}: odd m_0{j} expresses R'_{j} (Artin model)"), ok));
            }
        }
    }
    for entry in &opts.corpus {
        let Ok(model) = model_for(entry, opts.cap) else {
            continue;
        };
        let g: BTreeMap<String, Permutation> =
            model.s.iter().map(|(k, v)| (k.replacen('s', "g", 1), v.clone())).collect();
        let psi = &iso_maps(&entry.matrix)["bourbaki-braid-to-braid"];
        for j in 1..entry.matrix.rank() {
            if let Some((lhs, rhs)) = odd_identity(&entry.matrix, j) {
                let a = eval_word(&substitute(&lhs, psi)?, &g, &model.identity)?;
                let b = eval_word(&substitute(&rhs, psi)?, &g, &model.identity)?;
                out.push(CheckResult::new(format!("{}: odd m_0{j} expresses R'_{j} (in G)", entry.name), a == b));
            }
        }
    }
    Ok(out)
}

pub fn remark_iv_suite(opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let mut out = affine_counterexample()?;
    for entry in &opts.corpus {
        out.extend(commuting_reduction_checks(entry)?);
    }
    out.extend(odd_reduction_checks(opts)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_passed;

    fn failures(checks: &[CheckResult]) -> Vec<String> {
        checks.iter().filter(|c| !c.passed).map(CheckResult::line).collect()
    }

    #[test]
    fn coeffs_suite_passes() {
        let c = coeffs_suite().unwrap();
        assert!(all_passed(&c), "{:?}", failures(&c));
    }

    #[test]
    fn group_presentations_small() {
        let opts = SuiteOptions::default();
        for name in ["A3", "B2", "I2(5)", "I2(2)"] {
            let c = group_presentation_checks(&CorpusEntry::named(name).unwrap(), &opts).unwrap();
            assert!(all_passed(&c), "{:?}", failures(&c));
        }
    }

    #[test]
    fn artin_checks_small() {
        for n in 2..=4 {
            let c = artin_relation_checks(n).unwrap();
            assert!(all_passed(&c), "{:?}", failures(&c));
            assert!(generation_check(n).unwrap().passed);
            assert!(locality_check(n).unwrap().passed);
        }
    }

    #[test]
    fn remark_iv() {
        let c = remark_iv_suite(&SuiteOptions::default()).unwrap();
        assert!(all_passed(&c), "{:?}", failures(&c));
        assert!(c.iter().any(|c| c.name.contains("m_02 = 2")));
    }

    #[test]
    fn unsupported_model_is_skipped() {
        let opts = SuiteOptions { cap: 100, ..SuiteOptions::default() };
        let c = group_presentation_checks(&CorpusEntry::named("E8").unwrap(), &opts).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].passed && c[0].detail.as_deref().unwrap().starts_with("skipped"));
    }
}
