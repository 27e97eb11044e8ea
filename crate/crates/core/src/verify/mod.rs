//! Independent oracles: concrete models of finite Coxeter groups, subgroup
//! closure, coset enumeration and the Artin action of braid groups.

pub mod affine;
pub mod artin;
pub mod hecke;
pub mod perm;
pub mod suites;
pub mod todd_coxeter;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterMatrix, MatrixInput};
use crate::error::{Error, Result};
use crate::presentations::{substitute, FreeWord, GenMap, GroupPresentation, Relation};
use crate::report::{all_passed, CheckResult};

pub use affine::{power_exponent, Affine};
pub use artin::{artin_rep, FreeGroupAuto};
pub use perm::{bfs_closure, coxeter_model, regular_model, Permutation};
pub use todd_coxeter::{todd_coxeter, todd_coxeter_table, CosetTable};

/// Elements of a concrete group model.
pub trait GroupElement: Clone + PartialEq {
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
}

/// Value of `w` with generators replaced by their assigned elements.
pub fn eval_word<E: GroupElement>(
    w: &FreeWord,
    assign: &BTreeMap<String, E>,
    identity: &E,
) -> Result<E> {
    let mut acc = identity.clone();
    for l in w.letters() {
        let x = assign
            .get(&l.gen)
            .ok_or_else(|| Error::UnmappedGenerator(l.gen.clone()))?;
        acc = acc.mul(&if l.inverse { x.inv() } else { x.clone() });
    }
    Ok(acc)
}

/// Relations of `pres` that fail under `assign`.
pub fn check_relations<E: GroupElement>(
    pres: &GroupPresentation,
    assign: &BTreeMap<String, E>,
    identity: &E,
) -> Result<Vec<Relation>> {
    let mut failed = Vec::new();
    for r in &pres.relations {
        if eval_word(&r.lhs, assign, identity)? != eval_word(&r.rhs, assign, identity)? {
            failed.push(r.clone());
        }
    }
    Ok(failed)
}

/// Images of the generators of `pres` under `map`, evaluated in a model of
/// the target.
pub fn assign_via<E: GroupElement>(
    pres: &GroupPresentation,
    map: &GenMap,
    target: &BTreeMap<String, E>,
    identity: &E,
) -> Result<BTreeMap<String, E>> {
    pres.generators
        .iter()
        .map(|g| {
            let img = substitute(&FreeWord::gen(g), map)?;
            Ok((g.clone(), eval_word(&img, target, identity)?))
        })
        .collect()
}

/// [`check_relations`] after pushing `pres` through `map`.
pub fn check_relations_via<E: GroupElement>(
    pres: &GroupPresentation,
    map: &GenMap,
    target: &BTreeMap<String, E>,
    identity: &E,
) -> Result<Vec<Relation>> {
    check_relations(pres, &assign_via(pres, map, target, identity)?, identity)
}

/// `name_0 ↦ elems[0], name_1 ↦ elems[1], …`.
pub fn indexed_assignment<E: Clone>(prefix: &str, elems: &[E]) -> BTreeMap<String, E> {
    elems
        .iter()
        .enumerate()
        .map(|(i, e)| (format!("{prefix}{i}"), e.clone()))
        .collect()
}

/// A named Coxeter matrix of the verification corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub matrix: CoxeterMatrix,
}

impl CorpusEntry {
    pub fn named(name: &str) -> Result<Self> {
        Ok(CorpusEntry {
            name: name.to_string(),
            matrix: CoxeterMatrix::named(name)?,
        })
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawEntry {
    Name(String),
    Matrix {
        name: String,
        #[serde(flatten)]
        input: MatrixInput,
    },
}

pub const DEFAULT_CORPUS: &[&str] = &["A2", "A3", "A4", "B2", "B3", "D4", "H3"];
pub const MAX_DIHEDRAL_CORPUS: u32 = 12;

pub fn default_corpus() -> Vec<CorpusEntry> {
    DEFAULT_CORPUS
        .iter()
        .map(|s| s.to_string())
        .chain((2..=MAX_DIHEDRAL_CORPUS).map(|m| format!("I2({m})")))
        .map(|s| CorpusEntry::named(&s).expect("corpus names are valid"))
        .collect()
}

/// Reads a corpus from JSON: a list whose items are type names or
/// `{"name", "rank", "matrix"}` objects.
pub fn load_corpus(json: &str) -> Result<Vec<CorpusEntry>> {
    let raw: Vec<RawEntry> =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("corpus: {e}")))?;
    raw.into_iter()
        .map(|r| match r {
            RawEntry::Name(n) => CorpusEntry::named(&n),
            RawEntry::Matrix { name, input } => Ok(CorpusEntry {
                name,
                matrix: CoxeterMatrix::from_input(&input)?,
            }),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Coset and closure cap.
    pub cap: usize,
    pub corpus: Vec<CorpusEntry>,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            cap: 50_000,
            corpus: default_corpus(),
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Coeffs,
    Dihedral,
    GroupPresentations,
    BraidPresentations,
    Rs,
    RemarkIv,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Coeffs,
        Suite::Dihedral,
        Suite::GroupPresentations,
        Suite::BraidPresentations,
        Suite::Rs,
        Suite::RemarkIv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coeffs => "coeffs",
            Suite::Dihedral => "dihedral",
            Suite::GroupPresentations => "group-presentations",
            Suite::BraidPresentations => "braid-presentations",
            Suite::Rs => "rs",
            Suite::RemarkIv => "remark-iv",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn new(suite: Suite, checks: Vec<CheckResult>) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            passed: all_passed(&checks),
            checks,
        }
    }
}

pub fn run(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Coeffs => suites::coeffs_suite()?,
        Suite::Dihedral => suites::dihedral_suite(opts)?,
        Suite::GroupPresentations => suites::group_presentations_suite(opts)?,
        Suite::BraidPresentations => suites::braid_presentations_suite(opts)?,
        Suite::Rs => suites::rs_suite(opts)?,
        Suite::RemarkIv => suites::remark_iv_suite(opts)?,
    };
    Ok(SuiteReport::new(suite, checks))
}

/// Runs the named suite, or every suite for `"all"`.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return Suite::ALL.into_iter().map(|s| run(s, opts)).collect();
    }
    Ok(vec![run(name.parse()?, opts)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{bourbaki_group, iso_maps, typea_presentations};

    #[test]
    fn bourbaki_a3_holds_in_s4() {
        let mat = CoxeterMatrix::named("A3").unwrap();
        let s = indexed_assignment("s", &coxeter_model("A3", 100).unwrap());
        let id = Permutation::identity(4);
        let maps = iso_maps(&mat);
        let failed =
            check_relations_via(&bourbaki_group(&mat), &maps["bourbaki-group-to-coxeter"], &s, &id)
                .unwrap();
        assert!(failed.is_empty());
    }

    #[test]
    fn corrupted_relation_is_listed() {
        let mat = CoxeterMatrix::named("A2").unwrap();
        let s = indexed_assignment("s", &coxeter_model("A2", 100).unwrap());
        let id = Permutation::identity(3);
        let mut pres = bourbaki_group(&mat);
        let bad = Relation::relator("R1^4".parse().unwrap());
        pres.relations.push(bad.clone());
        let failed =
            check_relations_via(&pres, &iso_maps(&mat)["bourbaki-group-to-coxeter"], &s, &id).unwrap();
        assert_eq!(failed, vec![bad]);
    }

    #[test]
    fn braid_a_plus_holds_in_artin_model() {
        let (braid_a, _) = typea_presentations(4).unwrap();
        let mat = CoxeterMatrix::named("A4").unwrap();
        let g = indexed_assignment("g", &artin_rep(4));
        let id = FreeGroupAuto::identity(5);
        let failed =
            check_relations_via(&braid_a, &iso_maps(&mat)["bourbaki-braid-to-braid"], &g, &id).unwrap();
        assert!(failed.is_empty());
    }

    #[test]
    fn unmapped_generators_error() {
        let id = Permutation::identity(2);
        let empty = BTreeMap::new();
        assert!(eval_word(&"x".parse().unwrap(), &empty, &id).is_err());
        assert_eq!(eval_word(&FreeWord::one(), &empty, &id).unwrap(), id);
    }

    #[test]
    fn corpus_loading() {
        let c = load_corpus(r#"["A2", {"name": "tri", "rank": 3, "matrix": [[1,3,3],[3,1,3],[3,3,1]]}]"#)
            .unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[1].matrix.rank(), 3);
        assert!(load_corpus(r#"["Q7"]"#).is_err());
        assert!(load_corpus(r#"[{"name": "bad", "rank": 2, "matrix": [[1,1],[1,1]]}]"#).is_err());
        assert_eq!(default_corpus().len(), 7 + 11);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
