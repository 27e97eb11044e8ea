//! Coxeter matrices and the graphs built from them: connected extensions,
//! breadth-first spanning trees, fundamental cycles and the partition of
//! generators into conjugacy (parameter) classes.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An entry `m_ij` of a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Label::Finite(m) if m % 2 == 1)
    }

    /// The JSON encoding, with 0 standing for ∞.
    pub fn raw(self) -> u32 {
        self.finite().unwrap_or(0)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// A validated symmetric Coxeter matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Label>,
}

/// JSON shape of a matrix: `{"rank": n, "matrix": [[...]]}`, 0 meaning ∞.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixInput {
    pub rank: usize,
    pub matrix: Vec<Vec<u32>>,
}

pub fn validate_matrix(raw: &[Vec<u32>]) -> Result<CoxeterMatrix> {
    let n = raw.len();
    for (i, row) in raw.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidMatrix(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let x = raw[i][j];
            if x != raw[j][i] {
                return Err(Error::InvalidMatrix(format!(
                    "not symmetric: entry ({i},{j}) = {x} but ({j},{i}) = {}",
                    raw[j][i]
                )));
            }
            if i == j && x != 1 {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry ({i},{i}) = {x}, expected 1"
                )));
            }
            if i != j && x == 1 {
                return Err(Error::InvalidMatrix(format!(
                    "off-diagonal entry ({i},{j}) = 1, expected >= 2 or 0 for infinity"
                )));
            }
            entries.push(if x == 0 { Label::Infinity } else { Label::Finite(x) });
        }
    }
    Ok(CoxeterMatrix { rank: n, entries })
}

impl CoxeterMatrix {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn m(&self, i: usize, j: usize) -> Label {
        self.entries[i * self.rank + j]
    }

    /// `true` when `m_ij == 2`, i.e. the generators commute.
    pub fn commute(&self, i: usize, j: usize) -> bool {
        self.m(i, j) == Label::Finite(2)
    }

    pub fn to_raw(&self) -> Vec<Vec<u32>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.m(i, j).raw()).collect())
            .collect()
    }

    pub fn to_input(&self) -> MatrixInput {
        MatrixInput {
            rank: self.rank,
            matrix: self.to_raw(),
        }
    }

    pub fn from_input(input: &MatrixInput) -> Result<Self> {
        if input.matrix.len() != input.rank {
            return Err(Error::InvalidMatrix(format!(
                "rank {} but {} rows",
                input.rank,
                input.matrix.len()
            )));
        }
        validate_matrix(&input.matrix)
    }

    fn from_edges(rank: usize, edges: &[(usize, usize, u32)]) -> Self {
        let mut raw = vec![vec![2u32; rank]; rank];
        for (i, row) in raw.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, m) in edges {
            raw[i][j] = m;
            raw[j][i] = m;
        }
        validate_matrix(&raw).expect("named matrices are valid")
    }

    /// Expands a standard type name: `A{n}`, `B{n}`, `D{n}`, `E6`–`E8`,
    /// `F4`, `H3`, `H4`, `I2({m})` (with `I2(inf)` allowed).
    ///
    /// Labelings: `A_n` is the path `0–1–…`; `B_n` carries the 4 on edge
    /// `0–1`; `D_n` has vertices 0 and 1 both attached to 2; `E_n` follows
    /// Bourbaki shifted to 0-based indices; `F4` has the 4 on `1–2`;
    /// `H_n` has the 5 on `0–1`.
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown Coxeter type `{name}`"));
        let name = name.trim();
        if let Some(inner) = name
            .strip_prefix("I2(")
            .and_then(|rest| rest.strip_suffix(')'))
        {
            if inner == "inf" || inner == "0" {
                return validate_matrix(&[vec![1, 0], vec![0, 1]]);
            }
            let m: u32 = inner.parse().map_err(|_| bad())?;
            if m < 2 {
                return Err(bad());
            }
            return Ok(Self::from_edges(2, &[(0, 1, m)]));
        }
        let (family, rest) = name.split_at(name.chars().next().map_or(0, |c| c.len_utf8()));
        let n: usize = rest.parse().map_err(|_| bad())?;
        let path = |from: usize, to: usize| (from..to).map(|i| (i, i + 1, 3)).collect::<Vec<_>>();
        let matrix = match (family, n) {
            ("A", n) if n >= 1 => Self::from_edges(n, &path(0, n - 1)),
            ("B", n) if n >= 2 => {
                let mut e = path(1, n - 1);
                e.push((0, 1, 4));
                Self::from_edges(n, &e)
            }
            ("D", n) if n >= 2 => {
                let mut e = if n >= 3 { path(2, n - 1) } else { vec![] };
                if n >= 3 {
                    e.push((0, 2, 3));
                    e.push((1, 2, 3));
                }
                Self::from_edges(n, &e)
            }
            ("E", n @ 6..=8) => {
                let mut e = path(2, n - 1);
                e.push((0, 2, 3));
                e.push((1, 3, 3));
                Self::from_edges(n, &e)
            }
            ("F", 4) => Self::from_edges(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)]),
            ("H", n @ 3..=4) => {
                let mut e = path(1, n - 1);
                e.push((0, 1, 5));
                Self::from_edges(n, &e)
            }
            _ => return Err(bad()),
        };
        Ok(matrix)
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rank {
            let row: Vec<String> = (0..self.rank).map(|j| self.m(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// An edge oriented from the smaller to the larger vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrientedEdge {
    pub tail: usize,
    pub head: usize,
}

impl OrientedEdge {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loops are not edges");
        OrientedEdge {
            tail: a.min(b),
            head: a.max(b),
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.tail == v || self.head == v
    }
}

/// Coxeter graph together with the label-2 edges of a connected extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxGraph {
    n: usize,
    edges: BTreeMap<OrientedEdge, Label>,
    added: BTreeSet<OrientedEdge>,
}

impl CoxGraph {
    /// The Coxeter graph proper: an edge wherever `m_ij >= 3` (or ∞).
    pub fn coxeter_graph(mat: &CoxeterMatrix) -> Self {
        let n = mat.rank();
        let mut edges = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = mat.m(i, j);
                if m != Label::Finite(2) {
                    edges.insert(OrientedEdge::new(i, j), m);
                }
            }
        }
        CoxGraph {
            n,
            edges,
            added: BTreeSet::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (OrientedEdge, Label)> + '_ {
        self.edges.iter().map(|(e, l)| (*e, *l))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn added_edges(&self) -> &BTreeSet<OrientedEdge> {
        &self.added
    }

    pub fn label(&self, a: usize, b: usize) -> Option<Label> {
        if a == b {
            return None;
        }
        self.edges.get(&OrientedEdge::new(a, b)).copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.label(a, b).is_some()
    }

    /// Neighbours in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .keys()
            .filter_map(|e| {
                if e.tail == v {
                    Some(e.head)
                } else if e.head == v {
                    Some(e.tail)
                } else {
                    None
                }
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![];
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two edges are not connected when they share no vertex and no edge
    /// joins an endpoint of one to an endpoint of the other.
    pub fn edges_not_connected(&self, e: OrientedEdge, f: OrientedEdge) -> bool {
        let a = [e.tail, e.head];
        let b = [f.tail, f.head];
        a.iter()
            .all(|&x| b.iter().all(|&y| x != y && !self.has_edge(x, y)))
    }

    /// Breadth-first spanning tree from vertex 0, neighbours visited in
    /// increasing order.
    pub fn spanning_tree(&self) -> SpanningTree {
        let mut parent = vec![None; self.n];
        let mut depth = vec![usize::MAX; self.n];
        if self.n > 0 {
            depth[0] = 0;
            let mut queue = VecDeque::from([0]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[v] + 1;
                        parent[w] = Some(v);
                        queue.push_back(w);
                    }
                }
            }
        }
        SpanningTree { parent, depth }
    }
}

/// Rooted spanning tree (root 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
}

impl SpanningTree {
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn reaches(&self, v: usize) -> bool {
        self.depth[v] != usize::MAX
    }

    pub fn is_tree_edge(&self, a: usize, b: usize) -> bool {
        self.parent[a] == Some(b) || self.parent[b] == Some(a)
    }

    /// Vertex path from the root to `v`, both included.
    pub fn path_from_root(&self, v: usize) -> Vec<usize> {
        assert!(self.reaches(v), "vertex {v} is not in the tree");
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }
}

/// Fundamental cycles of a connected graph, as closed vertex walks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleBasis {
    pub cycles: Vec<Vec<usize>>,
}

pub fn connected_extension(mat: &CoxeterMatrix) -> CoxGraph {
    let mut g = CoxGraph::coxeter_graph(mat);
    let reps: Vec<usize> = g.components().iter().map(|c| c[0]).collect();
    for pair in reps.windows(2) {
        let e = OrientedEdge::new(pair[0], pair[1]);
        debug_assert_eq!(mat.m(e.tail, e.head), Label::Finite(2));
        g.edges.insert(e, Label::Finite(2));
        g.added.insert(e);
    }
    g
}

/// One cycle per non-tree edge `(a, b)`, `a < b`: from the lowest common
/// ancestor down the tree to `a`, across to `b`, and back up.
pub fn cycle_basis(g: &CoxGraph) -> CycleBasis {
    let tree = g.spanning_tree();
    let mut cycles = Vec::new();
    for (e, _) in g.edges() {
        if tree.is_tree_edge(e.tail, e.head) {
            continue;
        }
        let pa = tree.path_from_root(e.tail);
        let pb = tree.path_from_root(e.head);
        let common = pa.iter().zip(&pb).take_while(|(x, y)| x == y).count();
        let mut walk: Vec<usize> = pa[common - 1..].to_vec();
        walk.extend(pb[common - 1..].iter().rev());
        cycles.push(walk);
    }
    CycleBasis { cycles }
}

/// Partition of the generators into classes joined by odd-labelled paths;
/// generators in one class are conjugate and share a Hecke parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamClass {
    pub classes: Vec<Vec<usize>>,
    rep: Vec<usize>,
}

impl ParamClass {
    /// Smallest member of the class containing `v`.
    pub fn representative(&self, v: usize) -> usize {
        self.rep[v]
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.rep[a] == self.rep[b]
    }
}

pub fn parameter_classes(mat: &CoxeterMatrix) -> ParamClass {
    let n = mat.rank();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if mat.m(i, j).is_odd() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let rep: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &r) in rep.iter().enumerate() {
        classes.entry(r).or_default().push(v);
    }
    ParamClass {
        classes: classes.into_values().collect(),
        rep,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(s: &str) -> CoxeterMatrix {
        CoxeterMatrix::named(s).unwrap()
    }

    #[test]
    fn validation() {
        let a2 = validate_matrix(&[vec![1, 3], vec![3, 1]]).unwrap();
        assert_eq!(a2, named("A2"));
        let err = validate_matrix(&[vec![1, 2], vec![3, 1]]).unwrap_err();
        assert!(err.to_string().contains("not symmetric"), "{err}");
        assert!(err.to_string().contains("(0,1)"), "{err}");
        let inf = validate_matrix(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(inf.m(0, 1), Label::Infinity);
        assert!(validate_matrix(&[vec![2, 3], vec![3, 1]]).is_err());
        assert!(validate_matrix(&[vec![1, 1], vec![1, 1]]).is_err());
        assert!(validate_matrix(&[vec![1, 3], vec![3]]).is_err());
    }

    #[test]
    fn named_types() {
        let b3 = named("B3");
        assert_eq!(b3.m(0, 1), Label::Finite(4));
        assert_eq!(b3.m(1, 2), Label::Finite(3));
        assert_eq!(b3.m(0, 2), Label::Finite(2));
        let d4 = named("D4");
        assert_eq!(CoxGraph::coxeter_graph(&d4).neighbors(2), vec![0, 1, 3]);
        let e8 = named("E8");
        assert_eq!(CoxGraph::coxeter_graph(&e8).edge_count(), 7);
        assert_eq!(named("H3").m(0, 1), Label::Finite(5));
        assert_eq!(named("I2(7)").m(0, 1), Label::Finite(7));
        assert!(CoxeterMatrix::named("Z3").is_err());
        assert!(CoxeterMatrix::named("I2(1)").is_err());
    }

    #[test]
    fn connected_extensions() {
        let g = connected_extension(&named("A2"));
        assert_eq!(g.edge_count(), 1);
        assert!(g.added_edges().is_empty());

        let g = connected_extension(&named("I2(2)"));
        assert_eq!(
            g.added_edges().iter().copied().collect::<Vec<_>>(),
            vec![OrientedEdge::new(0, 1)]
        );
        assert_eq!(g.label(0, 1), Some(Label::Finite(2)));

        let m = validate_matrix(&[vec![1, 3, 2], vec![3, 1, 2], vec![2, 2, 1]]).unwrap();
        let g = connected_extension(&m);
        assert_eq!(
            g.added_edges().iter().copied().collect::<Vec<_>>(),
            vec![OrientedEdge::new(0, 2)]
        );
        assert!(g.is_connected());
    }

    #[test]
    fn cycles() {
        assert!(cycle_basis(&connected_extension(&named("A3"))).cycles.is_empty());
        let tri = validate_matrix(&[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert_eq!(
            cycle_basis(&connected_extension(&tri)).cycles,
            vec![vec![0, 1, 2, 0]]
        );
        let k4 = validate_matrix(&[
            vec![1, 3, 3, 3],
            vec![3, 1, 3, 3],
            vec![3, 3, 1, 3],
            vec![3, 3, 3, 1],
        ])
        .unwrap();
        let basis = cycle_basis(&connected_extension(&k4));
        assert_eq!(basis.cycles.len(), 3);
        for c in &basis.cycles {
            assert_eq!(c.first(), c.last());
        }
    }

    #[test]
    fn parameter_class_examples() {
        assert_eq!(parameter_classes(&named("A3")).classes, vec![vec![0, 1, 2]]);
        assert_eq!(parameter_classes(&named("B2")).classes, vec![vec![0], vec![1]]);
        assert_eq!(
            parameter_classes(&named("B3")).classes,
            vec![vec![0], vec![1, 2]]
        );
        let f4 = parameter_classes(&named("F4"));
        assert_eq!(f4.classes, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(f4.representative(3), 2);
    }
}
