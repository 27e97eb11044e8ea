use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::names::{big_r, big_r_prime, edge, indexed};
use super::{AlgebraPresentation, AlgebraRelation, AlgebraTerm, FreeWord, GroupPresentation, Relation};
use crate::coeffs::a_vector;
use crate::coxeter::{
    connected_extension, cycle_basis, parameter_classes, CoxGraph, CoxeterMatrix, Label,
    OrientedEdge,
};
use crate::error::{Error, Result};
use crate::exactmath::Var;

fn g(name: &str) -> FreeWord {
    FreeWord::gen(name)
}

fn gi(prefix: &str, i: usize) -> FreeWord {
    FreeWord::gen(&indexed(prefix, i))
}

fn pres(generators: Vec<String>, relations: Vec<Relation>) -> GroupPresentation {
    GroupPresentation::new(generators, relations).expect("emitted presentations are well formed")
}

/// `⟨s_0, …, s_{n−1} | s_i² = 1, (s_i s_j)^{m_ij} = 1⟩`.
pub fn coxeter_group(mat: &CoxeterMatrix) -> GroupPresentation {
    let n = mat.rank();
    let mut rels: Vec<Relation> = (0..n).map(|i| Relation::relator(gi("s", i).pow(2))).collect();
    for i in 0..n {
        for j in i + 1..n {
            if let Some(m) = mat.m(i, j).finite() {
                rels.push(Relation::relator(gi("s", i).concat(&gi("s", j)).pow(m as i32)));
            }
        }
    }
    pres((0..n).map(|i| indexed("s", i)).collect(), rels)
}

/// `⟨g_0, …, g_{n−1} | ⟨g_i, g_j⟩_{m_ij} = ⟨g_j, g_i⟩_{m_ij}⟩`.
pub fn braid_group(mat: &CoxeterMatrix) -> GroupPresentation {
    let n = mat.rank();
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if let Some(m) = mat.m(i, j).finite() {
                let (a, b) = (gi("g", i), gi("g", j));
                rels.push(Relation::new(
                    FreeWord::alternating(&a, &b, m),
                    FreeWord::alternating(&b, &a, m),
                ));
            }
        }
    }
    pres((0..n).map(|i| indexed("g", i)).collect(), rels)
}

/// Generators `R_i = s_0 s_i`, `1 ≤ i < n`.
pub fn bourbaki_group(mat: &CoxeterMatrix) -> GroupPresentation {
    let n = mat.rank();
    let r = |i: usize| g(&big_r(i));
    let mut rels = Vec::new();
    for i in 1..n {
        if let Some(m) = mat.m(0, i).finite() {
            rels.push(Relation::relator(r(i).pow(m as i32)));
        }
    }
    for i in 1..n {
        for j in i + 1..n {
            if let Some(m) = mat.m(i, j).finite() {
                rels.push(Relation::relator(r(i).inverse().concat(&r(j)).pow(m as i32)));
            }
        }
    }
    pres((1..n).map(big_r).collect(), rels)
}

/// `Σ_k a_k (x^{(m+k)/2} − x^{(m−k)/2}) = 0` for the pair of parameter
/// variables `(bi, bj)`.
fn hecke_torsion(x: &FreeWord, m: u32, bi: Var, bj: Var) -> Result<AlgebraRelation> {
    let a = a_vector(m, m % 2 == 1)?.instantiate(bi, bj);
    let mut terms = Vec::new();
    for (&k, c) in a.iter().rev() {
        if c.is_zero() {
            continue;
        }
        terms.push(AlgebraTerm {
            coeff: c.clone(),
            word: x.pow(((m + k) / 2) as i32),
        });
        terms.push(AlgebraTerm {
            coeff: -c,
            word: x.pow(((m - k) / 2) as i32),
        });
    }
    Ok(AlgebraRelation { terms })
}

fn beta_for(mat: &CoxeterMatrix) -> impl Fn(usize) -> Var {
    let classes = parameter_classes(mat);
    move |v| Var::B(classes.representative(v) as u16)
}

/// Generators `Y_i = f_0 f_i` (invertible); β-variables are named by the
/// smallest vertex of each parameter class.
pub fn bourbaki_hecke(mat: &CoxeterMatrix) -> Result<AlgebraPresentation> {
    let n = mat.rank();
    let beta = beta_for(mat);
    let y = |i: usize| gi("Y", i);
    let mut rels = Vec::new();
    for i in 1..n {
        if let Some(m) = mat.m(0, i).finite() {
            rels.push(hecke_torsion(&y(i), m, beta(0), beta(i))?);
        }
    }
    for i in 1..n {
        for j in i + 1..n {
            if let Some(m) = mat.m(i, j).finite() {
                let x = y(i).inverse().concat(&y(j));
                rels.push(hecke_torsion(&x, m, beta(i), beta(j))?);
            }
        }
    }
    Ok(AlgebraPresentation {
        generators: (1..n).map(|i| indexed("Y", i)).collect(),
        invertible: true,
        relations: rels,
    })
}

/// The letter for walking the edge `a → b`: `x_ab` if `a < b`, else `x_ba⁻¹`.
pub(crate) fn step(prefix: &str, a: usize, b: usize) -> FreeWord {
    if a < b {
        g(&edge(prefix, a, b))
    } else {
        g(&edge(prefix, b, a)).inverse()
    }
}

pub(crate) fn path_word(prefix: &str, path: &[usize]) -> FreeWord {
    path.windows(2)
        .fold(FreeWord::one(), |w, p| w.concat(&step(prefix, p[0], p[1])))
}

/// Combinatorial data shared by the edge presentations.
struct EdgeScheme {
    graph: CoxGraph,
    edges: Vec<(OrientedEdge, Label)>,
    cycles: Vec<Vec<usize>>,
    chains2: Vec<Vec<usize>>,
    chains3: Vec<Vec<usize>>,
    commuting: Vec<(OrientedEdge, OrientedEdge)>,
}

fn simple_paths(graph: &CoxGraph, vertices: usize) -> Vec<Vec<usize>> {
    fn extend(graph: &CoxGraph, path: &mut Vec<usize>, vertices: usize, out: &mut Vec<Vec<usize>>) {
        if path.len() == vertices {
            out.push(path.clone());
            return;
        }
        let last = *path.last().expect("nonempty path");
        for v in graph.neighbors(last) {
            if !path.contains(&v) {
                path.push(v);
                extend(graph, path, vertices, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..graph.vertex_count() {
        extend(graph, &mut vec![v], vertices, &mut out);
    }
    out
}

fn edge_scheme(mat: &CoxeterMatrix) -> EdgeScheme {
    let graph = connected_extension(mat);
    let edges: Vec<(OrientedEdge, Label)> = graph.edges().collect();
    let cycles = cycle_basis(&graph).cycles;
    let chain = |vertices: usize| -> Vec<Vec<usize>> {
        simple_paths(&graph, vertices)
            .into_iter()
            .filter(|p| {
                let (a, b) = (p[0], p[vertices - 1]);
                a < b && mat.m(a, b) == Label::Finite(2)
            })
            .collect()
    };
    let chains2 = chain(3);
    let chains3 = chain(4);
    let mut commuting = Vec::new();
    for (x, (e, _)) in edges.iter().enumerate() {
        for (f, _) in &edges[x + 1..] {
            if graph.edges_not_connected(*e, *f) {
                commuting.push((*e, *f));
            }
        }
    }
    EdgeScheme {
        graph,
        edges,
        cycles,
        chains2,
        chains3,
        commuting,
    }
}

impl EdgeScheme {
    fn generators(&self, prefix: &str) -> Vec<String> {
        self.edges
            .iter()
            .map(|(e, _)| edge(prefix, e.tail, e.head))
            .collect()
    }

    /// Cycle, chain and commutation relations, which are common to the
    /// group and algebra flavours.
    fn shared(&self, prefix: &str) -> Vec<Relation> {
        let mut rels = Vec::new();
        for c in &self.cycles {
            rels.push(Relation::relator(path_word(prefix, c)));
        }
        for p in self.chains2.iter().chain(&self.chains3) {
            rels.push(Relation::relator(path_word(prefix, p).pow(2)));
        }
        rels.extend(self.commutations(prefix));
        rels
    }

    fn commutations(&self, prefix: &str) -> Vec<Relation> {
        self.commuting
            .iter()
            .map(|(e, f)| {
                let (x, y) = (step(prefix, e.tail, e.head), step(prefix, f.tail, f.head));
                Relation::new(x.concat(&y), y.concat(&x))
            })
            .collect()
    }
}

/// Generators `r_ij = s_i s_j` for the edges `i < j` of the connected
/// extension.
pub fn edge_group(mat: &CoxeterMatrix) -> GroupPresentation {
    let s = edge_scheme(mat);
    let mut rels = Vec::new();
    for (e, l) in &s.edges {
        if let Some(m) = l.finite() {
            rels.push(Relation::relator(step("r", e.tail, e.head).pow(m as i32)));
        }
    }
    rels.extend(s.shared("r"));
    debug_assert!(s.graph.is_connected() || s.graph.vertex_count() == 0);
    pres(s.generators("r"), rels)
}

pub fn edge_hecke(mat: &CoxeterMatrix) -> Result<AlgebraPresentation> {
    let s = edge_scheme(mat);
    let beta = beta_for(mat);
    let mut rels = Vec::new();
    for (e, l) in &s.edges {
        if let Some(m) = l.finite() {
            let x = step("y", e.tail, e.head);
            rels.push(hecke_torsion(&x, m, beta(e.tail), beta(e.head))?);
        }
    }
    rels.extend(
        s.shared("y")
            .into_iter()
            .map(|r| AlgebraRelation::equation(r.lhs, r.rhs)),
    );
    Ok(AlgebraPresentation {
        generators: s.generators("y"),
        invertible: true,
        relations: rels,
    })
}

/// Generators `R_i = g_0 g_i` and `R'_i = g_i g_0⁻¹`, `0 ≤ i < n`.
pub fn bourbaki_braid(mat: &CoxeterMatrix) -> GroupPresentation {
    let n = mat.rank();
    let r = |i: usize| g(&big_r(i));
    let rp = |i: usize| g(&big_r_prime(i));
    let mut rels = vec![Relation::relator(rp(0))];
    for i in 0..n {
        for j in i + 1..n {
            if let Some(m) = mat.m(i, j).finite() {
                rels.push(Relation::new(
                    FreeWord::alternating(&rp(i), &r(j), m),
                    FreeWord::alternating(&rp(j), &r(i), m),
                ));
                rels.push(Relation::new(
                    FreeWord::alternating(&r(i), &rp(j), m),
                    FreeWord::alternating(&r(j), &rp(i), m),
                ));
            }
        }
    }
    let gens = (0..n).map(big_r).chain((0..n).map(big_r_prime)).collect();
    pres(gens, rels)
}

/// Generators `r_ij = g_i g_j⁻¹` for the edges of the connected extension,
/// and `t_i = g_i²`.
///
/// The edge relations for even labels are imposed on label-2 edges too;
/// without them the group for a disconnected graph would be too big.
pub fn edge_braid(mat: &CoxeterMatrix) -> GroupPresentation {
    let n = mat.rank();
    let s = edge_scheme(mat);
    let t = |i: usize| gi("t", i);
    let mut rels = Vec::new();
    for c in &s.cycles {
        rels.push(Relation::relator(path_word("r", c)));
    }
    for p in s.chains2.iter().chain(&s.chains3) {
        let (first, last) = (p[0], *p.last().expect("chain"));
        let fwd = path_word("r", p);
        let back = fwd.inverse();
        rels.push(Relation::new(fwd.concat(&t(last)), back.concat(&t(first))));
        rels.push(Relation::new(t(last).concat(&fwd), back.concat(&t(first))));
    }
    for (e, l) in &s.edges {
        let Some(m) = l.finite() else { continue };
        let (i, j) = (e.tail, e.head);
        let rij_tj = step("r", i, j).concat(&t(j));
        let rji_ti = step("r", j, i).concat(&t(i));
        let h = (m / 2) as i32;
        if m % 2 == 0 {
            rels.push(Relation::new(rij_tj.pow(h), rji_ti.pow(h)));
            let tj_rij = t(j).concat(&step("r", i, j));
            rels.push(Relation::new(tj_rij.pow(h), rji_ti.pow(h)));
        } else {
            rels.push(Relation::new(rij_tj.pow(h).concat(&step("r", i, j)), rji_ti.pow(h)));
            rels.push(Relation::new(rij_tj.pow(h + 1), t(i).concat(&rji_ti.pow(h))));
        }
    }
    rels.extend(s.commutations("r"));
    let gens = s.generators("r").into_iter().chain((0..n).map(|i| indexed("t", i))).collect();
    pres(gens, rels)
}

/// The two hand-written presentations of `B⁺(A_n)`: in the generators
/// `R_0, …, R_{n−1}`, and in `r_1, …, r_{n−1}` (with `r_i = r_{i−1,i}`)
/// and `t_0, …, t_{n−1}`.
///
/// In the second one the relation `r_i t_i r_i = r_i⁻¹ t_{i−1}` is the
/// odd-label instance of the general edge relations; the variant with
/// `t_i⁻¹` on the right does not hold in the braid group.
pub fn typea_presentations(n: usize) -> Result<(GroupPresentation, GroupPresentation)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("type A presentations need n ≥ 2, got {n}")));
    }
    let r = |i: usize| g(&big_r(i));
    let w = |parts: &[FreeWord]| parts.iter().fold(FreeWord::one(), |a, b| a.concat(b));
    let mut a = Vec::new();
    a.push(Relation::new(
        w(&[r(0), r(1), r(0)]),
        w(&[r(1).pow(2), r(0).inverse(), r(1).pow(2)]),
    ));
    for j in 2..n {
        a.push(Relation::new(w(&[r(0), r(j)]), w(&[r(j), r(0)])));
    }
    if n >= 3 {
        a.push(Relation::new(
            w(&[r(2), r(1), r(2)]),
            w(&[r(1).pow(2), r(0).inverse(), r(2), r(0).inverse(), r(1).pow(2)]),
        ));
        a.push(Relation::new(
            w(&[r(2), r(1).pow(2), r(2)]),
            w(&[r(0), r(1), r(2), r(0).inverse(), r(1), r(0)]),
        ));
    }
    for j in 3..n {
        a.push(Relation::new(w(&[r(1).pow(2), r(j)]), w(&[r(j), r(1), r(0)])));
        a.push(Relation::new(w(&[r(j), r(1).pow(2)]), w(&[r(0), r(1), r(j)])));
    }
    for i in 2..n.saturating_sub(1) {
        a.push(Relation::new(
            w(&[r(i), r(i + 1), r(i)]),
            w(&[r(i + 1), r(i), r(i + 1)]),
        ));
    }
    for i in 2..n {
        for j in i + 2..n {
            a.push(Relation::new(w(&[r(i), r(j)]), w(&[r(j), r(i)])));
        }
    }
    let braid_a = pres((0..n).map(big_r).collect(), a);

    let ri = |i: usize| gi("r", i);
    let t = |i: usize| gi("t", i);
    let mut e = Vec::new();
    for i in 1..n.saturating_sub(1) {
        let rhs = w(&[ri(i + 1).inverse(), ri(i).inverse(), t(i - 1)]);
        e.push(Relation::new(w(&[ri(i), ri(i + 1), t(i + 1)]), rhs.clone()));
        e.push(Relation::new(w(&[t(i + 1), ri(i), ri(i + 1)]), rhs));
    }
    for i in 1..n.saturating_sub(2) {
        let rhs = w(&[ri(i + 2).inverse(), ri(i + 1).inverse(), ri(i).inverse(), t(i - 1)]);
        e.push(Relation::new(w(&[ri(i), ri(i + 1), ri(i + 2), t(i + 2)]), rhs.clone()));
        e.push(Relation::new(w(&[t(i + 2), ri(i), ri(i + 1), ri(i + 2)]), rhs));
    }
    for i in 1..n {
        e.push(Relation::new(w(&[ri(i), t(i), ri(i)]), w(&[ri(i).inverse(), t(i - 1)])));
        e.push(Relation::new(
            w(&[ri(i), t(i)]).pow(2),
            w(&[t(i - 1), ri(i).inverse(), t(i - 1)]),
        ));
    }
    for i in 1..n {
        for j in i + 3..n {
            e.push(Relation::new(w(&[ri(i), ri(j)]), w(&[ri(j), ri(i)])));
        }
    }
    let gens = (1..n)
        .map(|i| indexed("r", i))
        .chain((0..n).map(|i| indexed("t", i)))
        .collect();
    Ok((braid_a, pres(gens, e)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PresentationKind {
    Coxeter,
    Braid,
    BourbakiGroup,
    BourbakiHecke,
    EdgeGroup,
    EdgeHecke,
    BourbakiBraid,
    EdgeBraid,
    TypeABraid,
    TypeAEdgeBraid,
}

impl PresentationKind {
    pub const ALL: [PresentationKind; 10] = [
        PresentationKind::Coxeter,
        PresentationKind::Braid,
        PresentationKind::BourbakiGroup,
        PresentationKind::BourbakiHecke,
        PresentationKind::EdgeGroup,
        PresentationKind::EdgeHecke,
        PresentationKind::BourbakiBraid,
        PresentationKind::EdgeBraid,
        PresentationKind::TypeABraid,
        PresentationKind::TypeAEdgeBraid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresentationKind::Coxeter => "coxeter",
            PresentationKind::Braid => "braid",
            PresentationKind::BourbakiGroup => "bourbaki-group",
            PresentationKind::BourbakiHecke => "bourbaki-hecke",
            PresentationKind::EdgeGroup => "edge-group",
            PresentationKind::EdgeHecke => "edge-hecke",
            PresentationKind::BourbakiBraid => "bourbaki-braid",
            PresentationKind::EdgeBraid => "edge-braid",
            PresentationKind::TypeABraid => "typeA-braid",
            PresentationKind::TypeAEdgeBraid => "typeA-edge-braid",
        }
    }
}

impl fmt::Display for PresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PresentationKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PresentationKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown presentation kind `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Presented {
    Group(GroupPresentation),
    Algebra(AlgebraPresentation),
}

impl fmt::Display for Presented {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Presented::Group(p) => p.fmt(f),
            Presented::Algebra(p) => p.fmt(f),
        }
    }
}

fn is_type_a(mat: &CoxeterMatrix) -> bool {
    let n = mat.rank();
    (0..n).all(|i| {
        (i + 1..n).all(|j| mat.m(i, j) == Label::Finite(if j == i + 1 { 3 } else { 2 }))
    })
}

pub fn emit(kind: PresentationKind, mat: &CoxeterMatrix) -> Result<Presented> {
    use PresentationKind::*;
    Ok(match kind {
        Coxeter => Presented::Group(coxeter_group(mat)),
        Braid => Presented::Group(braid_group(mat)),
        BourbakiGroup => Presented::Group(bourbaki_group(mat)),
        BourbakiHecke => Presented::Algebra(bourbaki_hecke(mat)?),
        EdgeGroup => Presented::Group(edge_group(mat)),
        EdgeHecke => Presented::Algebra(edge_hecke(mat)?),
        BourbakiBraid => Presented::Group(bourbaki_braid(mat)),
        EdgeBraid => Presented::Group(edge_braid(mat)),
        TypeABraid | TypeAEdgeBraid => {
            if !is_type_a(mat) {
                return Err(Error::InvalidArgument(format!("{kind} needs a type A matrix")));
            }
            let (a, e) = typea_presentations(mat.rank())?;
            Presented::Group(if kind == TypeABraid { a } else { e })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    fn named(s: &str) -> CoxeterMatrix {
        CoxeterMatrix::named(s).unwrap()
    }

    fn rels(p: &GroupPresentation) -> Vec<String> {
        p.relations.iter().map(|r| r.to_string()).collect()
    }

    #[test]
    fn bourbaki_group_examples() {
        let p = bourbaki_group(&named("I2(5)"));
        assert_eq!(p.generators, ["R1"]);
        assert_eq!(rels(&p), ["R1^5 = 1"]);
        let p = bourbaki_group(&named("A4"));
        assert_eq!(p.generators, ["R1", "R2", "R3"]);
        assert_eq!(
            rels(&p),
            [
                "R1^3 = 1",
                "R2^2 = 1",
                "R3^2 = 1",
                "R1^-1 R2 R1^-1 R2 R1^-1 R2 = 1",
                "R1^-1 R3 R1^-1 R3 = 1",
                "R2^-1 R3 R2^-1 R3 R2^-1 R3 = 1",
            ]
        );
        let p = bourbaki_group(&named("A1"));
        assert!(p.generators.is_empty() && p.relations.is_empty());
        assert!(bourbaki_group(&named("I2(inf)")).relations.is_empty());
    }

    #[test]
    fn bourbaki_hecke_examples() {
        let h = bourbaki_hecke(&named("A2")).unwrap();
        assert_eq!(h.relations.len(), 1);
        assert_eq!(h.relations[0].to_string(), "Y1^3 + (-1) + (b0^2)*Y1^2 + (-b0^2)*Y1 = 0");
        let h = bourbaki_hecke(&named("B2")).unwrap();
        let terms = h.relations[0].combined();
        assert_eq!(terms[&w("Y1^3")], "2*b0*b1".parse().unwrap());
        let h = bourbaki_hecke(&named("A3")).unwrap();
        // m_02 = 2 gives Y_2^2 = 1; the whole component shares b0.
        assert_eq!(h.relations[1].to_string(), "Y2^2 + (-1) = 0");
        assert!(h.relations.iter().all(|r| r
            .terms
            .iter()
            .all(|t| t.coeff.vars().iter().all(|v| *v == Var::B(0)))));
    }

    #[test]
    fn edge_group_examples() {
        assert_eq!(rels(&edge_group(&named("A2"))), ["r0_1^3 = 1"]);
        let p = edge_group(&named("A3"));
        assert_eq!(p.generators, ["r0_1", "r1_2"]);
        assert_eq!(rels(&p), ["r0_1^3 = 1", "r1_2^3 = 1", "r0_1 r1_2 r0_1 r1_2 = 1"]);
        let p = edge_group(&named("I2(2)"));
        assert_eq!(rels(&p), ["r0_1^2 = 1"]);
        let p = edge_group(&named("A1"));
        assert!(p.generators.is_empty());
    }

    #[test]
    fn edge_group_a4_has_three_chain_and_commutation() {
        let p = edge_group(&named("A4"));
        let s = rels(&p);
        assert!(s.contains(&"r0_1 r1_2 r2_3 r0_1 r1_2 r2_3 = 1".to_string()));
        assert!(s.contains(&"r1_2 r2_3 r1_2 r2_3 = 1".to_string()));
        // 0–1 and 2–3 are joined by the edge 1–2, so they do not commute.
        assert!(!s.iter().any(|r| r.starts_with("r0_1 r2_3 =")));
        let s = rels(&edge_group(&named("A5")));
        assert!(s.contains(&"r0_1 r3_4 = r3_4 r0_1".to_string()));
    }

    #[test]
    fn chains_follow_path_direction() {
        // D4: vertex 2 is the centre; the path 0–2–1 walks r1_2 backwards.
        let p = edge_group(&named("D4"));
        assert!(rels(&p).contains(&"r0_2 r1_2^-1 r0_2 r1_2^-1 = 1".to_string()));
    }

    #[test]
    fn cycles_appear_for_triangles() {
        let mat = crate::coxeter::validate_matrix(&[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]])
            .unwrap();
        let p = edge_group(&mat);
        assert!(rels(&p).contains(&"r0_1 r1_2 r0_2^-1 = 1".to_string()));
    }

    #[test]
    fn edge_hecke_examples() {
        let h = edge_hecke(&named("A2")).unwrap();
        assert_eq!(h.relations[0].to_string(), "y0_1^3 + (-1) + (b0^2)*y0_1^2 + (-b0^2)*y0_1 = 0");
        let h = edge_hecke(&named("I2(2)")).unwrap();
        assert_eq!(h.relations[0].to_string(), "y0_1^2 + (-1) = 0");
        let h = edge_hecke(&named("A3")).unwrap();
        assert!(h
            .relations
            .iter()
            .any(|r| r.to_string() == "y0_1 y1_2 y0_1 y1_2 + (-1) = 0"));
        let h = edge_hecke(&named("B2")).unwrap();
        let terms = h.relations[0].combined();
        assert_eq!(terms[&w("y0_1")], "-2*b0*b1".parse().unwrap());
    }

    #[test]
    fn bourbaki_braid_examples() {
        let p = bourbaki_braid(&named("A2"));
        assert_eq!(p.generators, ["R0", "R1", "R'0", "R'1"]);
        assert_eq!(
            rels(&p),
            ["R'0 = 1", "R'0 R1 R'0 = R'1 R0 R'1", "R0 R'1 R0 = R1 R'0 R1"]
        );
        let p = bourbaki_braid(&named("A1"));
        assert_eq!(rels(&p), ["R'0 = 1"]);
        let p = bourbaki_braid(&named("B2"));
        assert_eq!(rels(&p)[1], "R'0 R1 R'0 R1 = R'1 R0 R'1 R0");
    }

    #[test]
    fn edge_braid_examples() {
        let s = rels(&edge_braid(&named("A2")));
        assert_eq!(s, ["r0_1 t1 r0_1 = r0_1^-1 t0", "r0_1 t1 r0_1 t1 = t0 r0_1^-1 t0"]);
        let s = rels(&edge_braid(&named("B2")));
        assert_eq!(
            s,
            ["r0_1 t1 r0_1 t1 = r0_1^-1 t0 r0_1^-1 t0", "t1 r0_1 t1 r0_1 = r0_1^-1 t0 r0_1^-1 t0"]
        );
        let s = rels(&edge_braid(&named("A3")));
        assert!(s.contains(&"r0_1 r1_2 t2 = r1_2^-1 r0_1^-1 t0".to_string()));
        assert!(s.contains(&"t2 r0_1 r1_2 = r1_2^-1 r0_1^-1 t0".to_string()));
        assert!(rels(&edge_braid(&named("I2(inf)"))).is_empty());
    }

    #[test]
    fn typea_examples() {
        let (a, e) = typea_presentations(3).unwrap();
        assert!(rels(&a).contains(&"R0 R1 R0 = R1^2 R0^-1 R1^2".to_string()));
        let (a, e4) = typea_presentations(4).unwrap();
        assert!(rels(&a).contains(&"R1^2 R3 = R3 R1 R0".to_string()));
        assert!(rels(&a).contains(&"R3 R1^2 = R0 R1 R3".to_string()));
        assert!(rels(&e).contains(&"r1 t1 r1 = r1^-1 t0".to_string()));
        let (_, e5) = typea_presentations(5).unwrap();
        assert!(!rels(&e4).iter().any(|r| r == "r1 r4 = r4 r1"));
        assert!(rels(&e5).contains(&"r1 r4 = r4 r1".to_string()));
        assert!(typea_presentations(1).is_err());
    }

    #[test]
    fn kinds_parse() {
        for k in PresentationKind::ALL {
            assert_eq!(k.name().parse::<PresentationKind>().unwrap(), k);
        }
        assert!(emit(PresentationKind::TypeABraid, &named("B3")).is_err());
        assert!(emit(PresentationKind::TypeABraid, &named("A3")).is_ok());
    }

    #[test]
    fn deterministic() {
        let a = serde_json::to_string(&edge_braid(&named("D4"))).unwrap();
        let b = serde_json::to_string(&edge_braid(&named("D4"))).unwrap();
        assert_eq!(a, b);
    }
}
