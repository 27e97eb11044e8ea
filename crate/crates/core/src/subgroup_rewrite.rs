//! Reidemeister–Schreier rewriting for the kernel of a sign character
//! (an index-2 subgroup), and a small simplification pass.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentations::names::{big_r, big_r_prime};
use crate::presentations::{FreeWord, GenMap, GroupPresentation, Letter, Relation};

pub use crate::presentations::free_reduce;

/// `ε: generators → {±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignCharacter {
    pub values: BTreeMap<String, i8>,
}

impl SignCharacter {
    /// The character with `ε(g) = −1` for every generator (the sign
    /// character of Coxeter and braid groups).
    pub fn all_minus(pres: &GroupPresentation) -> Self {
        SignCharacter {
            values: pres.generators.iter().map(|g| (g.clone(), -1)).collect(),
        }
    }

    pub fn is_odd(&self, gen: &str) -> bool {
        self.values.get(gen) == Some(&-1)
    }

    /// `ε(w)` as `+1` or `−1`.
    pub fn of_word(&self, w: &FreeWord) -> i8 {
        if w.letters().iter().filter(|l| self.is_odd(&l.gen)).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// A presentation, a sign character on it, and the transversal `{1, g₀}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierSetup {
    pub presentation: GroupPresentation,
    pub character: SignCharacter,
    g0: usize,
}

impl SchreierSetup {
    /// `g₀` is the first generator with `ε = −1`.
    pub fn new(presentation: GroupPresentation, character: SignCharacter) -> Result<Self> {
        for g in &presentation.generators {
            match character.values.get(g) {
                Some(1) | Some(-1) => {}
                Some(v) => {
                    return Err(Error::InvalidArgument(format!("ε({g}) = {v} is not ±1")))
                }
                None => return Err(Error::InvalidArgument(format!("ε is undefined on `{g}`"))),
            }
        }
        let g0 = presentation
            .generators
            .iter()
            .position(|g| character.is_odd(g))
            .ok_or_else(|| Error::InvalidArgument("ε is trivial: no generator has ε = −1".into()))?;
        Ok(SchreierSetup {
            presentation,
            character,
            g0,
        })
    }

    pub fn g0(&self) -> &str {
        &self.presentation.generators[self.g0]
    }
}

/// Kernel generator names. For odd `g = g_i`: `γ(g₀, g) = g₀g` is `R{i}`
/// and `γ(1, g) = g g₀⁻¹` is `R'{i}` (trivial for `g = g₀`). For even `g`:
/// `γ(1, g) = g` keeps its name and `γ(g₀, g) = g₀ g g₀⁻¹` is `{g}~`.
struct Naming {
    /// Indexed by [coset][generator]; `None` is the trivial element.
    names: [Vec<Option<String>>; 2],
    odd: Vec<bool>,
}

impl Naming {
    fn new(setup: &SchreierSetup) -> Self {
        let gens = &setup.presentation.generators;
        let odd: Vec<bool> = gens.iter().map(|g| setup.character.is_odd(g)).collect();
        let mut names: [Vec<Option<String>>; 2] = [Vec::new(), Vec::new()];
        for (i, g) in gens.iter().enumerate() {
            if odd[i] {
                names[0].push((i != setup.g0).then(|| big_r_prime(i)));
                names[1].push(Some(big_r(i)));
            } else {
                names[0].push(Some(g.clone()));
                names[1].push(Some(format!("{g}~")));
            }
        }
        Naming { names, odd }
    }

    fn generators(&self) -> Vec<String> {
        let (mut first, mut second, mut even) = (Vec::new(), Vec::new(), Vec::new());
        for i in 0..self.odd.len() {
            let (a, b) = (&self.names[0][i], &self.names[1][i]);
            if self.odd[i] {
                first.extend(b.clone());
                second.extend(a.clone());
            } else {
                even.extend(a.clone());
                even.extend(b.clone());
            }
        }
        first.into_iter().chain(second).chain(even).collect()
    }
}

/// `π(a · w)`, starting in coset `coset` (0 for `1`, 1 for `g₀`).
fn rewrite_word(
    w: &FreeWord,
    coset: usize,
    index: &BTreeMap<&str, usize>,
    naming: &Naming,
) -> FreeWord {
    let mut c = coset;
    let mut out: Vec<Letter> = Vec::new();
    for l in w.letters() {
        let i = index[l.gen.as_str()];
        let flip = usize::from(naming.odd[i]);
        if l.inverse {
            c ^= flip;
            if let Some(name) = &naming.names[c][i] {
                out.push(Letter::new(name.clone(), true));
            }
        } else {
            if let Some(name) = &naming.names[c][i] {
                out.push(Letter::new(name.clone(), false));
            }
            c ^= flip;
        }
    }
    FreeWord::from_letters(out)
}

/// Presentation of `ker ε`: relations `π(a·lhs) = π(a·rhs)` for `a = 1`
/// then `a = g₀`, per input relation.
pub fn rs_rewrite(setup: &SchreierSetup) -> Result<GroupPresentation> {
    let pres = &setup.presentation;
    let index: BTreeMap<&str, usize> = pres
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| (g.as_str(), i))
        .collect();
    let naming = Naming::new(setup);
    let mut rels = Vec::with_capacity(2 * pres.relations.len());
    for (k, r) in pres.relations.iter().enumerate() {
        if setup.character.of_word(&r.lhs) != setup.character.of_word(&r.rhs) {
            return Err(Error::CharacterMismatch {
                index: k,
                relation: r.to_string(),
            });
        }
        for coset in [0, 1] {
            rels.push(Relation::new(
                rewrite_word(&r.lhs, coset, &index, &naming),
                rewrite_word(&r.rhs, coset, &index, &naming),
            ));
        }
    }
    GroupPresentation::new(naming.generators(), rels)
}

/// If `r` reads `x = 1` or `x^±1 y^±1 = 1` (as a cyclically reduced
/// relator, `x ≠ y`), returns the generator to eliminate (the later one in
/// `gens`) and its value.
fn short_definition(r: &Relation, pres: &GroupPresentation) -> Option<(String, FreeWord)> {
    let w = r.as_relator().cyclically_reduced();
    match w.letters() {
        [x] => Some((x.gen.clone(), FreeWord::one())),
        [a, b] if a.gen != b.gen => {
            let pos = |l: &Letter| pres.index_of(&l.gen);
            let (x, other) = if pos(a) > pos(b) { (a, b) } else { (b, a) };
            // x^e · y^f = 1 up to rotation, so x^e = y^{−f}.
            let value = FreeWord::from_letters([other.inv()]);
            let value = if x.inverse { value.inverse() } else { value };
            Some((x.gen.clone(), value))
        }
        _ => None,
    }
}

/// Eliminates generators defined by relators of length at most two
/// (`x = 1`, `x = y^±1`), then drops tautologies. Free reduction is
/// automatic.
pub fn simplify(pres: &GroupPresentation) -> GroupPresentation {
    let mut cur = pres.clone();
    loop {
        let found = cur
            .relations
            .iter()
            .enumerate()
            .find_map(|(k, r)| short_definition(r, &cur).map(|d| (k, d)));
        let Some((k, (x, value))) = found else { break };
        let map = GenMap::new("eliminate").with(x.clone(), value);
        let relations = cur
            .relations
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, r)| r.map_words(|w| map.apply_partial(w)).expect("partial maps are total"))
            .collect();
        let generators = cur.generators.iter().filter(|g| **g != x).cloned().collect();
        cur = GroupPresentation {
            generators,
            relations,
        };
    }
    cur.relations.retain(|r| !r.is_tautology());
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterMatrix;
    use crate::presentations::{bourbaki_braid, bourbaki_group, braid_group, coxeter_group};

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    fn all_minus(p: GroupPresentation) -> SchreierSetup {
        let c = SignCharacter::all_minus(&p);
        SchreierSetup::new(p, c).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        let l = |g: &str, inv| Letter::new(g, inv);
        assert!(free_reduce([l("g0", false), l("g0", true)]).is_empty());
        assert_eq!(
            free_reduce([l("g0", false), l("g1", false), l("g1", true), l("g0", false)]),
            vec![l("g0", false), l("g0", false)]
        );
        let reduced = vec![l("a", false), l("b", true)];
        assert_eq!(free_reduce(reduced.clone()), reduced);
    }

    #[test]
    fn braid_a2() {
        let out = rs_rewrite(&all_minus(braid_group(&CoxeterMatrix::named("A2").unwrap()))).unwrap();
        assert_eq!(out.generators, ["R0", "R1", "R'1"]);
        let rels: Vec<String> = out.relations.iter().map(|r| r.to_string()).collect();
        assert_eq!(rels, ["R1 = R'1 R0 R'1", "R0 R'1 R0 = R1^2"]);
    }

    #[test]
    fn coxeter_a2() {
        let out = rs_rewrite(&all_minus(coxeter_group(&CoxeterMatrix::named("A2").unwrap()))).unwrap();
        assert_eq!(out.relations.len(), 6);
        let s = simplify(&out);
        assert_eq!(s.generators, ["R1"]);
        assert_eq!(s.relator_set(), [w("R1^3")].into_iter().collect());
    }

    #[test]
    fn free_group() {
        let p = GroupPresentation::new(vec!["g0".into()], vec![]).unwrap();
        let out = rs_rewrite(&all_minus(p)).unwrap();
        assert_eq!(out.generators, ["R0"]);
        assert!(out.relations.is_empty());
    }

    #[test]
    fn character_mismatch_is_reported() {
        let p = GroupPresentation::new(
            vec!["a".into(), "b".into()],
            vec![Relation::new(w("a b"), w("b a")), Relation::new(w("a"), w("b^2"))],
        )
        .unwrap();
        let err = rs_rewrite(&all_minus(p)).unwrap_err();
        assert!(matches!(err, Error::CharacterMismatch { index: 1, .. }));
    }

    #[test]
    fn even_generators_get_two_kernel_generators() {
        let p = GroupPresentation::new(
            vec!["a".into(), "x".into()],
            vec![Relation::new(w("a x a^-1"), w("x^-1"))],
        )
        .unwrap();
        let mut c = SignCharacter::all_minus(&p);
        c.values.insert("x".into(), 1);
        let out = rs_rewrite(&SchreierSetup::new(p, c).unwrap()).unwrap();
        assert_eq!(out.generators, ["R0", "x", "x~"]);
        let rels: Vec<String> = out.relations.iter().map(|r| r.to_string()).collect();
        assert_eq!(rels, ["x~ = x^-1", "R0 x R0^-1 = x~^-1"]);
    }

    #[test]
    fn trivial_character_rejected() {
        let p = GroupPresentation::new(vec!["a".into()], vec![]).unwrap();
        let mut c = SignCharacter::all_minus(&p);
        c.values.insert("a".into(), 1);
        assert!(SchreierSetup::new(p, c).is_err());
    }

    #[test]
    fn reproduces_bourbaki_forms() {
        for name in ["A3", "B3", "H3", "D4", "I2(6)", "I2(inf)"] {
            let mat = CoxeterMatrix::named(name).unwrap();
            let cox = simplify(&rs_rewrite(&all_minus(coxeter_group(&mat))).unwrap());
            let expected = bourbaki_group(&mat);
            assert_eq!(cox.generators, expected.generators, "{name}");
            assert_eq!(cox.relator_set(), expected.relator_set(), "{name}");

            let braid = rs_rewrite(&all_minus(braid_group(&mat))).unwrap();
            let expected = simplify(&bourbaki_braid(&mat));
            assert_eq!(simplify(&braid).equation_set(), expected.equation_set(), "{name}");
        }
    }
}
