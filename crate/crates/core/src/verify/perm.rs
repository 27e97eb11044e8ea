use std::collections::{HashSet, VecDeque};

use crate::coxeter::CoxeterMatrix;
use crate::error::{Error, Result};
use crate::presentations::coxeter_group;

use super::todd_coxeter::todd_coxeter_table;
use super::GroupElement;

/// A bijection of `{0, …, N−1}`. Products apply the left factor first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Product of disjoint transpositions.
    pub fn swaps(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut p = Self::identity(n);
        for &(a, b) in pairs {
            p.images.swap(a, b);
        }
        p
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new((0..n).map(|x| f(x) as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.mul(self);
            k += 1;
        }
        k
    }
}

impl GroupElement for Permutation {
    fn mul(&self, other: &Self) -> Self {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    fn inv(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }
}

/// Order of the group generated by `gens`, or `None` once more than `cap`
/// elements have been found.
pub fn bfs_closure(gens: &[Permutation], degree: usize, cap: usize) -> Option<usize> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.mul(g);
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(q);
            }
        }
    }
    Some(seen.len())
}

/// Permutation images of `s_0, …, s_{n−1}` for a named finite type.
///
/// `A_n`: adjacent transpositions of `n+1` points. `B_n`: signed
/// permutations on `±0, …, ±(n−1)` (point `x + n` is `−x`), `s_0` negating
/// the first coordinate. `D_n`: `s_0 = (0 1)`, `s_1` the signed swap
/// `0 ↔ −1`, `s_k = (k−1 k)`. `I_2(m)`: the reflections `x ↦ −x`, `x ↦ 1−x`
/// of `Z/m`, on flagged points `(x, ±)` so that `m = 2` stays faithful.
/// Other finite types fall back to the regular representation read off a
/// closed Todd–Coxeter table of the Coxeter presentation.
pub fn coxeter_model(name: &str, cap: usize) -> Result<Vec<Permutation>> {
    let name = name.trim();
    let unsupported = || Error::UnsupportedModel(name.to_string());
    if let Some(inner) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
        let m: usize = inner.parse().map_err(|_| unsupported())?;
        if m < 2 {
            return Err(unsupported());
        }
        let refl = |shift: usize| {
            Permutation::from_fn(2 * m, move |p| {
                let (x, e) = (p % m, p / m);
                (shift + m - x) % m + (1 - e) * m
            })
        };
        return Ok(vec![refl(0)?, refl(1)?]);
    }
    let (family, rest) = name.split_at(1.min(name.len()));
    let n: usize = rest.parse().map_err(|_| unsupported())?;
    let gens = match family {
        "A" if n >= 1 => (0..n)
            .map(|i| Permutation::swaps(n + 1, &[(i, i + 1)]))
            .collect(),
        "B" if n >= 2 => {
            let d = 2 * n;
            let mut g = vec![Permutation::swaps(d, &[(0, n)])];
            for i in 1..n {
                g.push(Permutation::swaps(d, &[(i - 1, i), (i - 1 + n, i + n)]));
            }
            g
        }
        "D" if n >= 2 => {
            let d = 2 * n;
            let mut g = vec![
                Permutation::swaps(d, &[(0, 1), (n, n + 1)]),
                Permutation::swaps(d, &[(0, n + 1), (1, n)]),
            ];
            for k in 2..n {
                g.push(Permutation::swaps(d, &[(k - 1, k), (k - 1 + n, k + n)]));
            }
            g
        }
        _ => {
            let mat = CoxeterMatrix::named(name).map_err(|_| unsupported())?;
            return regular_model(&mat, cap);
        }
    };
    Ok(gens)
}

/// Regular representation of a finite Coxeter group from its presentation.
pub fn regular_model(mat: &CoxeterMatrix, cap: usize) -> Result<Vec<Permutation>> {
    let pres = coxeter_group(mat);
    let table = todd_coxeter_table(&pres, cap)
        .ok_or_else(|| Error::UnsupportedModel(format!("coset enumeration exceeded {cap}")))?;
    Ok((0..mat.rank()).map(|i| table.permutation(i)).collect())
}
