//! Presentations of the alternating subgroups and subalgebras, and the maps
//! relating them.

mod emit;
mod maps;
mod word;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::LaurentPoly;

pub use emit::{
    bourbaki_braid, bourbaki_group, bourbaki_hecke, braid_group, coxeter_group, edge_braid,
    edge_group, edge_hecke, emit, typea_presentations, PresentationKind, Presented,
};
pub use maps::{iso_maps, substitute, GenMap};
pub use word::{free_reduce, FreeWord, Letter};

/// `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: FreeWord,
    pub rhs: FreeWord,
}

impl Relation {
    pub fn new(lhs: FreeWord, rhs: FreeWord) -> Self {
        Relation { lhs, rhs }
    }

    /// `w = 1`.
    pub fn relator(w: FreeWord) -> Self {
        Relation::new(w, FreeWord::one())
    }

    /// `lhs · rhs⁻¹`, freely reduced.
    pub fn as_relator(&self) -> FreeWord {
        self.lhs.concat(&self.rhs.inverse())
    }

    pub fn is_tautology(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn map_words(&self, f: impl Fn(&FreeWord) -> Result<FreeWord>) -> Result<Relation> {
        Ok(Relation::new(f(&self.lhs)?, f(&self.rhs)?))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

#[derive(Deserialize)]
struct RawGroupPresentation {
    generators: Vec<String>,
    relations: Vec<Relation>,
}

impl<'de> Deserialize<'de> for GroupPresentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawGroupPresentation::deserialize(d)?;
        GroupPresentation::new(raw.generators, raw.relations).map_err(serde::de::Error::custom)
    }
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relations: Vec<Relation>) -> Result<Self> {
        let p = GroupPresentation {
            generators,
            relations,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let declared: BTreeSet<&str> = self.generators.iter().map(String::as_str).collect();
        if declared.len() != self.generators.len() {
            return Err(Error::InvalidArgument("duplicate generator name".into()));
        }
        for (idx, r) in self.relations.iter().enumerate() {
            for g in r.lhs.generators().into_iter().chain(r.rhs.generators()) {
                if !declared.contains(g) {
                    return Err(Error::InvalidArgument(format!(
                        "relation {idx} ({r}) uses undeclared generator `{g}`"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn index_of(&self, gen: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == gen)
    }

    pub fn relators(&self) -> Vec<FreeWord> {
        self.relations.iter().map(Relation::as_relator).collect()
    }

    /// Nontrivial relators up to rotation and inversion.
    pub fn relator_set(&self) -> BTreeSet<FreeWord> {
        self.relations
            .iter()
            .map(|r| r.as_relator().canonical_relator())
            .filter(|w| !w.is_empty())
            .collect()
    }

    /// Non-tautological relations as unordered `{lhs, rhs}` pairs.
    pub fn equation_set(&self) -> BTreeSet<(FreeWord, FreeWord)> {
        self.relations
            .iter()
            .filter(|r| !r.is_tautology())
            .map(|r| {
                if r.lhs <= r.rhs {
                    (r.lhs.clone(), r.rhs.clone())
                } else {
                    (r.rhs.clone(), r.lhs.clone())
                }
            })
            .collect()
    }

    /// Applies `map` to every relation; generators not in the map are kept.
    /// The generator list becomes `generators`.
    pub fn substituted(&self, map: &GenMap, generators: Vec<String>) -> Result<GroupPresentation> {
        let relations = self
            .relations
            .iter()
            .map(|r| r.map_words(|w| map.apply_partial(w)))
            .collect::<Result<Vec<_>>>()?;
        GroupPresentation::new(generators, relations)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generators.join(", "))?;
        writeln!(f, "relations:")?;
        for r in &self.relations {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraTerm {
    pub coeff: LaurentPoly,
    pub word: FreeWord,
}

/// `Σ coeff · word = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraRelation {
    pub terms: Vec<AlgebraTerm>,
}

impl AlgebraRelation {
    /// `lhs − rhs = 0`.
    pub fn equation(lhs: FreeWord, rhs: FreeWord) -> Self {
        AlgebraRelation {
            terms: vec![
                AlgebraTerm {
                    coeff: LaurentPoly::one(),
                    word: lhs,
                },
                AlgebraTerm {
                    coeff: -LaurentPoly::one(),
                    word: rhs,
                },
            ],
        }
    }

    /// Collects equal words and drops zero coefficients.
    pub fn combined(&self) -> BTreeMap<FreeWord, LaurentPoly> {
        let mut out: BTreeMap<FreeWord, LaurentPoly> = BTreeMap::new();
        for t in &self.terms {
            let e = out.entry(t.word.clone()).or_default();
            *e = &*e + &t.coeff;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

impl fmt::Display for AlgebraRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if t.coeff.is_one() {
                write!(f, "{}", t.word)?;
            } else if t.word.is_empty() {
                write!(f, "({})", t.coeff)?;
            } else {
                write!(f, "({})*{}", t.coeff, t.word)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str(" = 0")
    }
}

/// Presentation of an algebra; when `invertible`, every generator has a
/// formal inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraPresentation {
    pub generators: Vec<String>,
    pub invertible: bool,
    pub relations: Vec<AlgebraRelation>,
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = if self.invertible { " (invertible)" } else { "" };
        writeln!(f, "generators{inv}: {}", self.generators.join(", "))?;
        writeln!(f, "relations:")?;
        for r in &self.relations {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

pub(crate) mod names {
    pub fn big_r(i: usize) -> String {
        format!("R{i}")
    }
    pub fn big_r_prime(i: usize) -> String {
        format!("R'{i}")
    }
    pub fn edge(prefix: &str, i: usize, j: usize) -> String {
        format!("{prefix}{i}_{j}")
    }
    pub fn indexed(prefix: &str, i: usize) -> String {
        format!("{prefix}{i}")
    }
}
