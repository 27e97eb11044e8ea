//! HLT coset enumeration over the trivial subgroup.

use std::collections::BTreeMap;

use crate::presentations::GroupPresentation;

use super::perm::Permutation;

const NONE: u32 = u32::MAX;

/// Coset table with a column per generator and per inverse generator
/// (`2k` and `2k+1`).
#[derive(Clone, Debug)]
pub struct CosetTable {
    cols: usize,
    rows: Vec<Vec<u32>>,
    /// Union-find parent; a row is live iff it is its own parent.
    parent: Vec<u32>,
    cap: usize,
}

#[derive(Debug)]
struct CapExceeded;

impl CosetTable {
    fn new(generators: usize, cap: usize) -> Self {
        let cols = 2 * generators;
        CosetTable {
            cols,
            rows: vec![vec![NONE; cols]],
            parent: vec![0],
            cap,
        }
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), CapExceeded> {
        if self.rows.len() >= self.cap {
            return Err(CapExceeded);
        }
        let d = self.rows.len();
        self.rows.push(vec![NONE; self.cols]);
        self.parent.push(d as u32);
        self.rows[c][x] = d as u32;
        self.rows[d][x ^ 1] = c as u32;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        let mut k = c;
        while self.parent[k] as usize != r {
            let next = self.parent[k] as usize;
            self.parent[k] = r as u32;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (x, y) = (self.rep(a), self.rep(b));
        if x != y {
            let (keep, kill) = (x.min(y), x.max(y));
            self.parent[kill] = keep as u32;
            queue.push(kill);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let g = queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.rows[g][x];
                if d == NONE {
                    continue;
                }
                let d = d as usize;
                self.rows[d][x ^ 1] = NONE;
                let (mu, nu) = (self.rep(g), self.rep(d));
                if self.rows[mu][x] != NONE {
                    let t = self.rows[mu][x] as usize;
                    self.merge(nu, t, &mut queue);
                } else if self.rows[nu][x ^ 1] != NONE {
                    let t = self.rows[nu][x ^ 1] as usize;
                    self.merge(mu, t, &mut queue);
                } else {
                    self.rows[mu][x] = nu as u32;
                    self.rows[nu][x ^ 1] = mu as u32;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), CapExceeded> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.rows[f][w[i]] != NONE {
                f = self.rows[f][w[i]] as usize;
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.rows[b][w[j as usize] ^ 1] != NONE {
                b = self.rows[b][w[j as usize] ^ 1] as usize;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.rows[f][w[i]] = b as u32;
                self.rows[b][w[i] ^ 1] = f as u32;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    /// Number of live cosets.
    pub fn order(&self) -> usize {
        (0..self.rows.len()).filter(|&c| self.is_live(c)).count()
    }

    /// Rows ever allocated, live or not.
    pub fn cosets_defined(&self) -> usize {
        self.rows.len()
    }

    /// Right action of generator `gen` on the live cosets, renumbered
    /// `0..order`.
    pub fn permutation(&self, gen: usize) -> Permutation {
        let live: Vec<usize> = (0..self.rows.len()).filter(|&c| self.is_live(c)).collect();
        let index: BTreeMap<usize, usize> = live.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let images = live
            .iter()
            .map(|&c| {
                let mut d = self.rows[c][2 * gen] as usize;
                while !self.is_live(d) {
                    d = self.parent[d] as usize;
                }
                index[&d] as u32
            })
            .collect();
        Permutation::new(images).expect("closed coset tables give permutations")
    }
}

fn relator_columns(pres: &GroupPresentation) -> Vec<Vec<usize>> {
    let index: BTreeMap<&str, usize> = pres
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| (g.as_str(), i))
        .collect();
    pres.relators()
        .iter()
        .map(|w| {
            w.cyclically_reduced()
                .letters()
                .iter()
                .map(|l| 2 * index[l.gen.as_str()] + usize::from(l.inverse))
                .collect()
        })
        .collect()
}

/// Enumerates the cosets of the trivial subgroup; `None` if more than
/// `cap` cosets would be needed.
pub fn todd_coxeter_table(pres: &GroupPresentation, cap: usize) -> Option<CosetTable> {
    let rels = relator_columns(pres);
    let mut t = CosetTable::new(pres.generators.len(), cap.max(1));
    let mut c = 0;
    while c < t.rows.len() {
        if t.is_live(c) {
            for r in &rels {
                if !t.is_live(c) {
                    break;
                }
                t.scan_and_fill(c, r).ok()?;
            }
            if t.is_live(c) {
                for x in 0..t.cols {
                    if t.rows[c][x] == NONE {
                        t.define(c, x).ok()?;
                    }
                }
            }
        }
        c += 1;
    }
    Some(t)
}

/// Order of the presented group, or `None` past the coset cap.
pub fn todd_coxeter(pres: &GroupPresentation, cap: usize) -> Option<usize> {
    todd_coxeter_table(pres, cap).map(|t| t.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterMatrix;
    use crate::presentations::{bourbaki_group, coxeter_group, edge_group, FreeWord, Relation};
    use crate::verify::GroupElement;

    fn named(s: &str) -> CoxeterMatrix {
        CoxeterMatrix::named(s).unwrap()
    }

    #[test]
    fn small_groups() {
        assert_eq!(todd_coxeter(&edge_group(&named("A2")), 100), Some(3));
        assert_eq!(todd_coxeter(&bourbaki_group(&named("A3")), 1000), Some(12));
        assert_eq!(todd_coxeter(&bourbaki_group(&named("H3")), 5000), Some(60));
        assert_eq!(todd_coxeter(&coxeter_group(&named("B3")), 5000), Some(48));
        assert_eq!(todd_coxeter(&bourbaki_group(&named("A1")), 10), Some(1));
    }

    #[test]
    fn cap_is_a_sentinel() {
        assert_eq!(todd_coxeter(&coxeter_group(&named("A5")), 50), None);
        // Infinite: free group of rank 1.
        let free = GroupPresentation::new(vec!["a".into()], vec![]).unwrap();
        assert_eq!(todd_coxeter(&free, 1000), None);
    }

    #[test]
    fn coincidences_collapse() {
        // ⟨a, b | a³, b², a = b⟩ is trivial.
        let w = |s: &str| s.parse::<FreeWord>().unwrap();
        let p = GroupPresentation::new(
            vec!["a".into(), "b".into()],
            vec![Relation::relator(w("a^3")), Relation::relator(w("b^2")), Relation::new(w("a"), w("b"))],
        )
        .unwrap();
        assert_eq!(todd_coxeter(&p, 1000), Some(1));
    }

    #[test]
    fn regular_permutations_are_faithful() {
        let t = todd_coxeter_table(&coxeter_group(&named("I2(6)")), 1000).unwrap();
        assert_eq!(t.order(), 12);
        let p = t.permutation(0).mul(&t.permutation(1));
        assert_eq!(p.order(), 6);
    }
}
