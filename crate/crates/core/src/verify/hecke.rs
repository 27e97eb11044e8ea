//! Oracle for the algebra presentations: every relation, pushed into the
//! Hecke algebra through `Y_i ↦ f_0 f_i` or `y_ij ↦ f_i f_j`, must vanish.
//!
//! Relations touching two generators `f_i, f_j` are evaluated in the rank-2
//! algebra of `m_ij`. The remaining ones are binomials `u − v`; those are
//! checked by reducing `u v⁻¹` with `f² = 1` and the commutations of
//! label-2 pairs, which hold in any Hecke algebra.

use std::collections::{BTreeMap, BTreeSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coxeter::{parameter_classes, CoxeterMatrix, Label};
use crate::error::Result;
use crate::exactmath::{LaurentPoly, Var};
use crate::heckedihedral::{DihedralAlgebra, DihedralElement, Scalar, Side};
use crate::presentations::{substitute, AlgebraPresentation, AlgebraRelation, GenMap};
use crate::report::CheckResult;

/// Largest label evaluated symbolically; above it, at random points.
const SYMBOLIC_MAX_M: u32 = 6;
const EVAL_POINTS: usize = 2;

fn f_index(gen: &str) -> usize {
    gen.strip_prefix('f')
        .and_then(|s| s.parse().ok())
        .expect("images are words in f_i")
}

/// Cancels `f f` pairs separated only by letters commuting with `f`.
fn racg_reduce(word: &[usize], commute: &dyn Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut w = word.to_vec();
    'outer: loop {
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[j] == w[i] {
                    w.remove(j);
                    w.remove(i);
                    continue 'outer;
                }
                if !commute(w[i], w[j]) {
                    break;
                }
            }
        }
        return w;
    }
}

fn eval_in<C: Scalar>(
    alg: &DihedralAlgebra<C>,
    terms: &[(LaurentPoly, Vec<usize>)],
    side_of: &dyn Fn(usize) -> Side,
) -> DihedralElement<C> {
    let mut acc = DihedralElement::zero();
    for (c, w) in terms {
        let mut x = alg.scalar(alg.lift_beta_poly(c));
        for &l in w.iter().rev() {
            x = alg.mul(&alg.f_gen(side_of(l)), &x);
        }
        acc = acc.add(&x);
    }
    acc
}

fn relation_vanishes(
    mat: &CoxeterMatrix,
    rel: &AlgebraRelation,
    map: &GenMap,
    seed: u64,
) -> Result<bool> {
    let commute = |a: usize, b: usize| a == b || mat.m(a, b) == Label::Finite(2);
    let mut terms: Vec<(LaurentPoly, Vec<usize>)> = Vec::new();
    for t in &rel.terms {
        let w = substitute(&t.word, map)?;
        let letters: Vec<usize> = w.letters().iter().map(|l| f_index(&l.gen)).collect();
        terms.push((t.coeff.clone(), racg_reduce(&letters, &commute)));
    }
    let letters: BTreeSet<usize> = terms.iter().flat_map(|(_, w)| w.iter().copied()).collect();
    if letters.len() > 2 {
        // Binomial check.
        let [(c1, u), (c2, v)] = terms.as_slice() else {
            return Ok(false);
        };
        if (c1 + c2).is_zero() {
            let mut uv: Vec<usize> = u.clone();
            uv.extend(v.iter().rev());
            return Ok(racg_reduce(&uv, &commute).is_empty());
        }
        return Ok(false);
    }
    let mut it = letters.iter().copied();
    let i = it.next().unwrap_or(0);
    let j = it.next().unwrap_or(if i == 0 { 1 } else { 0 });
    let (i, j) = (i.min(j), i.max(j));
    let Some(m) = mat.m(i, j).finite() else {
        return Ok(false);
    };
    let classes = parameter_classes(mat);
    let (ri, rj) = (classes.representative(i), classes.representative(j));
    let equal = ri == rj;
    // Coefficients are in β of the class representatives; rename to b0/b1.
    let rename = |v: Var| match v {
        Var::B(x) if x as usize == ri => Var::B(0),
        Var::B(x) if x as usize == rj => Var::B(1),
        other => other,
    };
    let terms: Vec<(LaurentPoly, Vec<usize>)> =
        terms.into_iter().map(|(c, w)| (c.rename(rename), w)).collect();
    let side_of = |l: usize| if l == i { Side::I } else { Side::J };
    if m <= SYMBOLIC_MAX_M {
        let alg = DihedralAlgebra::symbolic(m, equal)?;
        return Ok(eval_in(&alg, &terms, &side_of).is_zero());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..EVAL_POINTS {
        let alg = DihedralAlgebra::random(m, equal, &mut rng)?;
        if !eval_in(&alg, &terms, &side_of).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Failing relation indices of `pres` under `map`.
pub fn hecke_failures(
    mat: &CoxeterMatrix,
    pres: &AlgebraPresentation,
    map: &GenMap,
    seed: u64,
) -> Result<Vec<usize>> {
    let mut failed = Vec::new();
    for (k, r) in pres.relations.iter().enumerate() {
        if !relation_vanishes(mat, r, map, seed)? {
            failed.push(k);
        }
    }
    Ok(failed)
}

pub fn hecke_check(
    label: &str,
    mat: &CoxeterMatrix,
    pres: &AlgebraPresentation,
    map: &GenMap,
    seed: u64,
) -> Result<CheckResult> {
    let failed = hecke_failures(mat, pres, map, seed)?;
    let detail = if failed.is_empty() {
        format!("{} relations", pres.relations.len())
    } else {
        let list: BTreeMap<usize, String> =
            failed.iter().map(|&k| (k, pres.relations[k].to_string())).collect();
        format!("failed: {list:?}")
    };
    Ok(CheckResult::new(label, failed.is_empty()).with_detail(detail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{bourbaki_hecke, edge_hecke, iso_maps, AlgebraTerm, FreeWord};

    #[test]
    fn presentations_vanish() {
        for name in ["A3", "B3", "H3", "D4", "I2(8)"] {
            let mat = CoxeterMatrix::named(name).unwrap();
            let maps = iso_maps(&mat);
            let b = bourbaki_hecke(&mat).unwrap();
            assert!(hecke_failures(&mat, &b, &maps["bourbaki-hecke-to-hecke"], 1).unwrap().is_empty(), "{name}");
            let e = edge_hecke(&mat).unwrap();
            assert!(hecke_failures(&mat, &e, &maps["edge-hecke-to-hecke"], 1).unwrap().is_empty(), "{name}");
        }
    }

    #[test]
    fn corrupted_relation_is_caught() {
        let mat = CoxeterMatrix::named("B2").unwrap();
        let maps = iso_maps(&mat);
        let mut b = bourbaki_hecke(&mat).unwrap();
        b.relations[0].terms.push(AlgebraTerm {
            coeff: "b0".parse().unwrap(),
            word: "Y1".parse::<FreeWord>().unwrap(),
        });
        let failed = hecke_failures(&mat, &b, &maps["bourbaki-hecke-to-hecke"], 1).unwrap();
        assert_eq!(failed, [0]);
    }

    #[test]
    fn racg_reduction() {
        let commute = |a: usize, b: usize| a == b || (a, b) == (0, 2) || (a, b) == (2, 0);
        assert_eq!(racg_reduce(&[0, 2, 0], &commute), vec![2]);
        assert_eq!(racg_reduce(&[0, 1, 0], &commute), vec![0, 1, 0]);
    }
}
