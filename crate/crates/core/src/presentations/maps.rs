use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::emit::{path_word, step};
use super::names::{big_r, big_r_prime, edge, indexed};
use super::FreeWord;
use crate::coxeter::{connected_extension, CoxeterMatrix};
use crate::error::{Error, Result};

/// A substitution `generator ↦ word`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenMap {
    pub name: String,
    pub images: BTreeMap<String, FreeWord>,
}

impl GenMap {
    pub fn new(name: impl Into<String>) -> Self {
        GenMap {
            name: name.into(),
            images: BTreeMap::new(),
        }
    }

    pub fn with(mut self, gen: String, image: FreeWord) -> Self {
        self.images.insert(gen, image);
        self
    }

    pub fn image(&self, gen: &str) -> Option<&FreeWord> {
        self.images.get(gen)
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        substitute(w, self)
    }

    /// Like [`GenMap::apply`], but generators outside the domain map to
    /// themselves.
    pub fn apply_partial(&self, w: &FreeWord) -> Result<FreeWord> {
        Ok(self.expand(w, |g| Some(FreeWord::gen(g))))
    }

    fn expand(&self, w: &FreeWord, fallback: impl Fn(&str) -> Option<FreeWord>) -> FreeWord {
        let mut letters = Vec::new();
        for l in w.letters() {
            let img = match self.images.get(&l.gen) {
                Some(x) => x.clone(),
                None => fallback(&l.gen).expect("checked by caller"),
            };
            let img = if l.inverse { img.inverse() } else { img };
            letters.extend(img.letters().iter().cloned());
        }
        FreeWord::from_letters(letters)
    }
}

impl fmt::Display for GenMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.name)?;
        for (g, w) in &self.images {
            writeln!(f, "  {g} -> {w}")?;
        }
        Ok(())
    }
}

pub fn substitute(word: &FreeWord, map: &GenMap) -> Result<FreeWord> {
    if let Some(l) = word.letters().iter().find(|l| !map.images.contains_key(&l.gen)) {
        return Err(Error::UnmappedGenerator(l.gen.clone()));
    }
    Ok(map.expand(word, |_| None))
}

fn words(parts: &[FreeWord]) -> FreeWord {
    parts.iter().fold(FreeWord::one(), |a, b| a.concat(b))
}

/// All maps between the presentations of one Coxeter matrix, keyed by name.
///
/// Targets: `s_i` (Coxeter group), `f_i` (Hecke generators), `g_i` (braid
/// group). Tree paths come from the BFS spanning tree of the connected
/// extension.
pub fn iso_maps(mat: &CoxeterMatrix) -> BTreeMap<String, GenMap> {
    let n = mat.rank();
    let graph = connected_extension(mat);
    let tree = graph.spanning_tree();
    let edges: Vec<(usize, usize)> = graph.edges().map(|(e, _)| (e.tail, e.head)).collect();
    let gen = |p: &str, i: usize| FreeWord::gen(&indexed(p, i));
    let r = |i: usize| FreeWord::gen(&big_r(i));
    let rp = |i: usize| FreeWord::gen(&big_r_prime(i));
    let mut out = Vec::new();

    // Alternating subgroup and subalgebra, into the ambient generators.
    let mut m = GenMap::new("bourbaki-group-to-coxeter");
    let mut h = GenMap::new("bourbaki-hecke-to-hecke");
    for i in 1..n {
        m = m.with(big_r(i), gen("s", 0).concat(&gen("s", i)));
        h = h.with(indexed("Y", i), gen("f", 0).concat(&gen("f", i)));
    }
    out.push(m);
    out.push(h);
    let mut m = GenMap::new("edge-group-to-coxeter");
    let mut h = GenMap::new("edge-hecke-to-hecke");
    for &(i, j) in &edges {
        m = m.with(edge("r", i, j), gen("s", i).concat(&gen("s", j)));
        h = h.with(edge("y", i, j), gen("f", i).concat(&gen("f", j)));
    }
    out.push(m);
    out.push(h);

    // Edge ↔ Bourbaki, in both the group and the algebra flavour.
    for (small, big, fl) in [("r", "R", "group"), ("y", "Y", "hecke")] {
        let big_w = |i: usize| FreeWord::gen(&indexed(big, i));
        let mut fwd = GenMap::new(format!("edge-{fl}-to-bourbaki-{fl}"));
        for &(i, j) in &edges {
            let img = if i == 0 {
                big_w(j)
            } else {
                big_w(i).inverse().concat(&big_w(j))
            };
            fwd = fwd.with(edge(small, i, j), img);
        }
        let mut back = GenMap::new(format!("bourbaki-{fl}-to-edge-{fl}"));
        for i in 1..n {
            back = back.with(indexed(big, i), path_word(small, &tree.path_from_root(i)));
        }
        out.push(fwd);
        out.push(back);
    }

    // Braid presentations into the braid group, and between each other.
    let mut m = GenMap::new("bourbaki-braid-to-braid");
    for i in 0..n {
        m = m.with(big_r(i), gen("g", 0).concat(&gen("g", i)));
        m = m.with(big_r_prime(i), gen("g", i).concat(&gen("g", 0).inverse()));
    }
    out.push(m);
    let mut m = GenMap::new("edge-braid-to-braid");
    for &(i, j) in &edges {
        m = m.with(edge("r", i, j), gen("g", i).concat(&gen("g", j).inverse()));
    }
    for i in 0..n {
        m = m.with(indexed("t", i), gen("g", i).pow(2));
    }
    out.push(m);
    let mut m = GenMap::new("edge-braid-to-bourbaki-braid");
    for &(i, j) in &edges {
        m = m.with(edge("r", i, j), rp(i).concat(&rp(j).inverse()));
    }
    for i in 0..n {
        m = m.with(indexed("t", i), rp(i).concat(&r(i)));
    }
    out.push(m);
    let mut m = GenMap::new("bourbaki-braid-to-edge-braid");
    for i in 0..n {
        let path = tree.path_from_root(i);
        m = m.with(big_r(i), path_word("r", &path).concat(&gen("t", i)));
        let back: Vec<usize> = path.into_iter().rev().collect();
        m = m.with(big_r_prime(i), path_word("r", &back));
    }
    out.push(m);

    // ω is an automorphism; τ is the anti-automorphism reversing words in
    // the g_i, and has the same formula on the Bourbaki generators.
    for name in ["omega", "tau-bourbaki-braid"] {
        let mut m = GenMap::new(name);
        for i in 0..n {
            m = m.with(big_r(i), rp(i).concat(&r(0)));
            m = m.with(big_r_prime(i), r(0).inverse().concat(&r(i)));
        }
        out.push(m);
    }
    let mut m = GenMap::new("tau-edge-braid");
    for &(i, j) in &edges {
        m = m.with(
            edge("r", i, j),
            words(&[gen("t", j).inverse(), step("r", j, i), gen("t", i)]),
        );
    }
    for i in 0..n {
        m = m.with(indexed("t", i), gen("t", i));
    }
    out.push(m);

    // Quotients by the squares of the braid generators.
    let mut m = GenMap::new("bourbaki-braid-quotient");
    for i in 0..n {
        m = m.with(big_r(i), if i == 0 { FreeWord::one() } else { r(i) });
        m = m.with(big_r_prime(i), if i == 0 { FreeWord::one() } else { r(i).inverse() });
    }
    out.push(m);
    let mut m = GenMap::new("edge-braid-quotient");
    for &(i, j) in &edges {
        m = m.with(edge("r", i, j), step("r", i, j));
    }
    for i in 0..n {
        m = m.with(indexed("t", i), FreeWord::one());
    }
    out.push(m);

    out.into_iter().map(|m| (m.name.clone(), m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{bourbaki_braid, bourbaki_group, edge_braid, edge_group};

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    fn maps(name: &str) -> BTreeMap<String, GenMap> {
        iso_maps(&CoxeterMatrix::named(name).unwrap())
    }

    #[test]
    fn a3_examples() {
        let m = maps("A3");
        let iso = &m["bourbaki-braid-to-braid"];
        assert_eq!(iso.image("R2").unwrap(), &w("g0 g2"));
        assert_eq!(iso.image("R'2").unwrap(), &w("g2 g0^-1"));
        assert_eq!(m["edge-braid-to-braid"].image("r0_1").unwrap(), &w("g0 g1^-1"));
        assert_eq!(m["bourbaki-hecke-to-edge-hecke"].image("Y2").unwrap(), &w("y0_1 y1_2"));
        assert_eq!(m["edge-hecke-to-bourbaki-hecke"].image("y1_2").unwrap(), &w("Y1^-1 Y2"));
        assert_eq!(m["edge-hecke-to-bourbaki-hecke"].image("y0_1").unwrap(), &w("Y1"));
    }

    #[test]
    fn substitute_examples() {
        let m = maps("A3");
        let iso = &m["bourbaki-braid-to-braid"];
        assert_eq!(substitute(&w("R0"), iso).unwrap(), w("g0^2"));
        assert_eq!(substitute(&w("R'0"), iso).unwrap(), FreeWord::one());
        let cox = &m["bourbaki-group-to-coxeter"];
        assert_eq!(substitute(&w("R1^-1 R2"), cox).unwrap(), w("s1^-1 s2"));
        assert!(matches!(substitute(&w("X"), cox), Err(Error::UnmappedGenerator(_))));
    }

    #[test]
    fn substitute_is_a_homomorphism() {
        let m = maps("B3");
        let iso = &m["edge-braid-to-braid"];
        let (a, b) = (w("r0_1 t2^-1"), w("t2 r1_2^-1 t0"));
        let lhs = substitute(&a.concat(&b), iso).unwrap();
        let rhs = substitute(&a, iso).unwrap().concat(&substitute(&b, iso).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(substitute(&a.inverse(), iso).unwrap(), substitute(&a, iso).unwrap().inverse());
    }

    #[test]
    fn maps_are_total() {
        for name in ["A4", "B3", "D4", "H3", "I2(7)", "E6"] {
            let mat = CoxeterMatrix::named(name).unwrap();
            let m = iso_maps(&mat);
            let total = |map: &str, gens: &[String]| {
                gens.iter().all(|g| m[map].images.contains_key(g))
            };
            assert!(total("bourbaki-group-to-coxeter", &bourbaki_group(&mat).generators));
            assert!(total("edge-group-to-coxeter", &edge_group(&mat).generators));
            assert!(total("edge-group-to-bourbaki-group", &edge_group(&mat).generators));
            assert!(total("bourbaki-braid-to-braid", &bourbaki_braid(&mat).generators));
            assert!(total("bourbaki-braid-to-edge-braid", &bourbaki_braid(&mat).generators));
            assert!(total("edge-braid-to-braid", &edge_braid(&mat).generators));
            assert!(total("edge-braid-to-bourbaki-braid", &edge_braid(&mat).generators));
            assert!(total("tau-edge-braid", &edge_braid(&mat).generators));
        }
    }

    #[test]
    fn path_choice_is_absorbed_by_cycle_relations() {
        // Triangle: Y2 via the tree edge 0–2 and via 0–1–2 differ by the
        // fundamental cycle relator.
        let mat = crate::coxeter::validate_matrix(&[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]])
            .unwrap();
        let m = iso_maps(&mat);
        let tree_path = m["bourbaki-group-to-edge-group"].image("R2").unwrap().clone();
        let other = path_word("r", &[0, 1, 2]);
        let diff = other.concat(&tree_path.inverse()).canonical_relator();
        let cycles = edge_group(&mat).relator_set();
        assert!(cycles.contains(&diff));
    }
}
