use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator or its formal inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: String,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: impl Into<String>, inverse: bool) -> Self {
        Letter {
            gen: gen.into(),
            inverse,
        }
    }

    pub fn exp(&self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(&self) -> Letter {
        Letter {
            gen: self.gen.clone(),
            inverse: !self.inverse,
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word. Serialized as `[[gen, ±1], ...]`; on input any
/// nonzero exponent is accepted and expanded.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(String, i32)>", into = "Vec<(String, i32)>")]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl TryFrom<Vec<(String, i32)>> for FreeWord {
    type Error = Error;
    fn try_from(raw: Vec<(String, i32)>) -> Result<Self> {
        let mut w = FreeWord::one();
        for (gen, e) in raw {
            if e == 0 {
                return Err(Error::Parse(format!("zero exponent on `{gen}`")));
            }
            w = w.concat(&FreeWord::gen_pow(&gen, e));
        }
        Ok(w)
    }
}

impl From<FreeWord> for Vec<(String, i32)> {
    fn from(w: FreeWord) -> Self {
        w.letters.into_iter().map(|l| {
            let e = l.exp();
            (l.gen, e)
        }).collect()
    }
}

/// Cancels adjacent `x x⁻¹` pairs; the result has none.
pub fn free_reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last().is_some_and(|last| last.cancels(&l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl FreeWord {
    pub fn one() -> Self {
        FreeWord::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        FreeWord {
            letters: free_reduce(letters),
        }
    }

    pub fn gen(name: &str) -> Self {
        FreeWord {
            letters: vec![Letter::new(name, false)],
        }
    }

    pub fn gen_pow(name: &str, e: i32) -> Self {
        let l = Letter::new(name, e < 0);
        FreeWord {
            letters: vec![l; e.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        FreeWord::from_letters(self.letters.iter().chain(&other.letters).cloned())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(Letter::inv).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::one();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// The letters in reverse order, without inverting them.
    pub fn reversed(&self) -> FreeWord {
        FreeWord::from_letters(self.letters.iter().rev().cloned())
    }

    /// Alternating product `a b a b …` with `k` factors.
    pub fn alternating(a: &FreeWord, b: &FreeWord, k: u32) -> FreeWord {
        let mut out = FreeWord::one();
        for i in 0..k {
            out = out.concat(if i % 2 == 0 { a } else { b });
        }
        out
    }

    pub fn generators(&self) -> BTreeSet<&str> {
        self.letters.iter().map(|l| l.gen.as_str()).collect()
    }

    pub fn contains(&self, gen: &str) -> bool {
        self.letters.iter().any(|l| l.gen == gen)
    }

    /// Exponent sum of each generator, weighted by `weight`.
    pub fn weighted_sum(&self, weight: impl Fn(&str) -> i32) -> i32 {
        self.letters.iter().map(|l| l.exp() * weight(&l.gen)).sum()
    }

    /// Removes matching letters from both ends.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j >= i + 2 && l[i].cancels(&l[j - 1]) {
            i += 1;
            j -= 1;
        }
        FreeWord {
            letters: l[i..j].to_vec(),
        }
    }

    /// Representative of the relator up to cyclic rotation and inversion:
    /// the least rotation of the cyclic reduction or its inverse.
    pub fn canonical_relator(&self) -> FreeWord {
        let c = self.cyclically_reduced();
        let n = c.len();
        let mut best = c.clone();
        for w in [c.clone(), c.inverse()] {
            for r in 0..n {
                let mut letters = w.letters[r..].to_vec();
                letters.extend_from_slice(&w.letters[..r]);
                let cand = FreeWord { letters };
                if cand < best {
                    best = cand;
                }
            }
        }
        best
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = &self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == *l {
                run += 1;
            }
            let e = run as i32 * l.exp();
            parts.push(if e == 1 { l.gen.clone() } else { format!("{}^{e}", l.gen) });
            i += run;
        }
        f.write_str(&parts.join(" "))
    }
}

/// Parses the display form: space-separated `gen` or `gen^e`, `1` for the
/// empty word.
impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(FreeWord::one());
        }
        let mut w = FreeWord::one();
        for tok in s.split_whitespace() {
            let (name, e) = match tok.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?,
                ),
                None => (tok, 1),
            };
            if name.is_empty() || e == 0 {
                return Err(Error::Parse(format!("bad letter `{tok}`")));
            }
            w = w.concat(&FreeWord::gen_pow(name, e));
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn reduction() {
        assert_eq!(w("g0 g0^-1"), FreeWord::one());
        assert_eq!(w("g0 g1 g1^-1 g0"), w("g0^2"));
        assert_eq!(w("g0 g1^-1").to_string(), "g0 g1^-1");
        assert_eq!(w("R'1^-2 R0").to_string(), "R'1^-2 R0");
    }

    #[test]
    fn json_form() {
        let x = w("R1^2 R0^-1");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"[["R1",1],["R1",1],["R0",-1]]"#);
        let back: FreeWord = serde_json::from_str(r#"[["R1",2],["R0",-1]]"#).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<FreeWord>(r#"[["R1",0]]"#).is_err());
    }

    #[test]
    fn canonical_relators() {
        let a = w("a b a^-1");
        assert_eq!(a.cyclically_reduced(), w("b"));
        assert_eq!(w("a b c").canonical_relator(), w("b c a").canonical_relator());
        assert_eq!(w("a b c").canonical_relator(), w("c^-1 b^-1 a^-1").canonical_relator());
        assert_ne!(w("a b c").canonical_relator(), w("a c b").canonical_relator());
        assert_eq!(w("x y x^-1 y^-1").canonical_relator(), w("y x y^-1 x^-1").canonical_relator());
    }

    #[test]
    fn alternating_words() {
        let (a, b) = (w("a"), w("b"));
        assert_eq!(FreeWord::alternating(&a, &b, 3), w("a b a"));
        assert_eq!(FreeWord::alternating(&a, &b, 0), FreeWord::one());
        assert_eq!(w("a b^-1").reversed(), w("b^-1 a"));
    }
}
