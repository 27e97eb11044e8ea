//! The rank-two Hecke algebra on `g_i`, `g_j` with `(g g')`-braid length `m`,
//! modelled exactly in its 2m-element word basis. It is the oracle against
//! which the alternating-subalgebra relations are checked.
//!
//! Coefficients are generic over [`Scalar`]: [`QFraction`] keeps everything
//! symbolic in the q-parameters, while [`BigRational`] evaluates at exact
//! rational points.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::{a_vector, AKVector};
use crate::error::{Error, Result};
use crate::exactmath::{LaurentPoly, Monomial, RationalFunction, Var};
use crate::report::CheckResult;

/// Coefficient ring of the dihedral algebra.
pub trait Scalar: Clone + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn from_int(n: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn one() -> Self {
        Self::from_int(&BigInt::one())
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_int(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

fn sigma(v: Var) -> LaurentPoly {
    &LaurentPoly::var(v) + &LaurentPoly::var_pow(v, -1)
}

fn delta(v: Var) -> LaurentPoly {
    &LaurentPoly::var(v) - &LaurentPoly::var_pow(v, -1)
}

/// Exact quotient `p / (v + v⁻¹)` when it exists.
fn div_sigma(p: &LaurentPoly, v: Var) -> Option<LaurentPoly> {
    if p.is_zero() {
        return Some(LaurentPoly::zero());
    }
    // p_e = r_{e−1} + r_{e+1}; solve for r from the top exponent down.
    let parts = p.coefficients_in(v);
    let lo = *parts.keys().next().unwrap();
    let hi = *parts.keys().next_back().unwrap();
    let mut r: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
    for e in (lo + 1..=hi).rev() {
        let pe = parts.get(&e).cloned().unwrap_or_default();
        let above = r.get(&(e + 1)).cloned().unwrap_or_default();
        r.insert(e - 1, &pe - &above);
    }
    let mut q = LaurentPoly::zero();
    for (e, c) in r {
        q = &q + &c.mul_monomial(&Monomial::var(v, e));
    }
    (&q * &sigma(v) == *p).then_some(q)
}

/// `num / Π (v + v⁻¹)^{e_v}`: the only denominators the f-generators create.
#[derive(Clone)]
pub struct QFraction {
    num: LaurentPoly,
    den: BTreeMap<Var, u32>,
}

impl QFraction {
    pub fn from_poly(p: LaurentPoly) -> Self {
        QFraction {
            num: p,
            den: BTreeMap::new(),
        }
    }

    /// `1 / (v + v⁻¹)`.
    pub fn sigma_inverse(v: Var) -> Self {
        QFraction {
            num: LaurentPoly::one(),
            den: BTreeMap::from([(v, 1)]),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator_exponents(&self) -> &BTreeMap<Var, u32> {
        &self.den
    }

    fn lift_to(&self, target: &BTreeMap<Var, u32>) -> LaurentPoly {
        let mut p = self.num.clone();
        for (&v, &e) in target {
            let have = self.den.get(&v).copied().unwrap_or(0);
            if e > have {
                p = &p * &sigma(v).pow(e - have);
            }
        }
        p
    }

    /// Cancels every `(v + v⁻¹)` that divides the numerator.
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return QFraction::from_poly(LaurentPoly::zero());
        }
        let mut out = self.clone();
        for (&v, e) in self.den.iter() {
            for _ in 0..*e {
                match div_sigma(&out.num, v) {
                    Some(q) => {
                        out.num = q;
                        *out.den.get_mut(&v).unwrap() -= 1;
                    }
                    None => break,
                }
            }
        }
        out.den.retain(|_, e| *e > 0);
        out
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        let den = self
            .den
            .iter()
            .fold(LaurentPoly::one(), |acc, (&v, &e)| &acc * &sigma(v).pow(e));
        RationalFunction::new(self.num.clone(), den).expect("nonzero denominator")
    }
}

impl PartialEq for QFraction {
    fn eq(&self, other: &Self) -> bool {
        Scalar::is_zero(&Scalar::sub(self, other))
    }
}

impl Scalar for QFraction {
    fn zero() -> Self {
        QFraction::from_poly(LaurentPoly::zero())
    }
    fn from_int(n: &BigInt) -> Self {
        QFraction::from_poly(LaurentPoly::constant(n.clone()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (&v, &e) in &other.den {
            let slot = den.entry(v).or_insert(0);
            *slot = (*slot).max(e);
        }
        let num = &self.lift_to(&den) + &other.lift_to(&den);
        if num.is_zero() {
            return Self::zero();
        }
        QFraction { num, den }
    }
    fn mul(&self, other: &Self) -> Self {
        let num = &self.num * &other.num;
        if num.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (&v, &e) in &other.den {
            *den.entry(v).or_insert(0) += e;
        }
        QFraction { num, den }
    }
    fn neg(&self) -> Self {
        QFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.den.is_empty() {
            return write!(f, "{}", r.num);
        }
        let den: Vec<String> = r
            .den
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    format!("({v} + {v}^-1)")
                } else {
                    format!("({v} + {v}^-1)^{e}")
                }
            })
            .collect();
        write!(f, "({}) / {}", r.num, den.join("*"))
    }
}

impl fmt::Debug for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QFraction({self})")
    }
}

/// One of the two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    I,
    J,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::I => Side::J,
            Side::J => Side::I,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Alternating word `⟨g_start, g_other⟩_len`. The empty word and the
/// length-m word (which has two spellings) are stored with `start = I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    pub start: Side,
    pub len: u32,
}

impl Word {
    pub const ONE: Word = Word {
        start: Side::I,
        len: 0,
    };

    fn canonical(start: Side, len: u32, m: u32) -> Word {
        if len == 0 || len == m {
            Word { start: Side::I, len }
        } else {
            Word { start, len }
        }
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Side> + '_ {
        (0..self.len).map(move |i| if i % 2 == 0 { self.start } else { self.start.other() })
    }

    pub fn is_canonical(&self, m: u32) -> bool {
        self.len <= m && (self.start == Side::I || (self.len != 0 && self.len != m))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len == 0 {
            return f.write_str("1");
        }
        let names: Vec<&str> = self
            .letters()
            .map(|s| if s == Side::I { "g_i" } else { "g_j" })
            .collect();
        f.write_str(&names.join(" "))
    }
}

/// Element of the dihedral algebra; no zero coefficients are stored.
#[derive(Clone, Debug)]
pub struct DihedralElement<C> {
    coeffs: BTreeMap<Word, C>,
}

impl<C: Scalar> DihedralElement<C> {
    pub fn zero() -> Self {
        DihedralElement {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn term(w: Word, c: C) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> C {
        self.coeffs.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&w) {
            Some(old) => old.add(&c),
            None => c,
        };
        if sum.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&C::one().neg()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.coeffs {
            out.add_term(*w, x.mul(c));
        }
        out
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl<C: Scalar> fmt::Display for DihedralElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(w, c)| format!("({c})*[{w}]"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The algebra with its structure constants δ = q − q⁻¹, 1/(q + q⁻¹) and
/// β = δ/(q + q⁻¹) for each generator.
#[derive(Clone, Debug)]
pub struct DihedralAlgebra<C> {
    m: u32,
    equal_params: bool,
    delta: [C; 2],
    sigma_inv: [C; 2],
    beta: [C; 2],
}

fn check_label(m: u32, equal_params: bool) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("label m must be >= 2, got {m}")));
    }
    if m % 2 == 1 && !equal_params {
        return Err(Error::ParametersMustCoincide(m));
    }
    Ok(())
}

/// q-variables of the two generators: `q0`, and `q1` unless identified.
pub fn q_vars(equal_params: bool) -> [Var; 2] {
    if equal_params {
        [Var::Q(0), Var::Q(0)]
    } else {
        [Var::Q(0), Var::Q(1)]
    }
}

impl DihedralAlgebra<QFraction> {
    /// Symbolic coefficients over `q0` (and `q1` for distinct parameters).
    pub fn symbolic(m: u32, equal_params: bool) -> Result<Self> {
        check_label(m, equal_params)?;
        let qs = q_vars(equal_params);
        let delta = qs.map(|v| QFraction::from_poly(delta(v)));
        let sigma_inv = qs.map(QFraction::sigma_inverse);
        let beta = [delta[0].mul(&sigma_inv[0]), delta[1].mul(&sigma_inv[1])];
        Ok(DihedralAlgebra {
            m,
            equal_params,
            delta,
            sigma_inv,
            beta,
        })
    }
}

impl DihedralAlgebra<BigRational> {
    /// Coefficients evaluated at rational parameter values.
    pub fn at(m: u32, qi: BigRational, qj: BigRational) -> Result<Self> {
        let equal_params = qi == qj;
        check_label(m, equal_params)?;
        let mut delta = Vec::new();
        let mut sigma_inv = Vec::new();
        for q in [qi, qj] {
            if Zero::is_zero(&q) {
                return Err(Error::InvalidArgument("q must be nonzero".into()));
            }
            let inv = q.recip();
            delta.push(&q - &inv);
            sigma_inv.push((&q + &inv).recip());
        }
        let beta = [&delta[0] * &sigma_inv[0], &delta[1] * &sigma_inv[1]];
        Ok(DihedralAlgebra {
            m,
            equal_params,
            delta: [delta[0].clone(), delta[1].clone()],
            sigma_inv: [sigma_inv[0].clone(), sigma_inv[1].clone()],
            beta,
        })
    }

    /// A random rational point with q ≠ ±1 (so that q − q⁻¹ ≠ 0).
    pub fn random(m: u32, equal_params: bool, rng: &mut impl Rng) -> Result<Self> {
        let mut pick = || loop {
            let n: i64 = rng.random_range(1..=40);
            let d: i64 = rng.random_range(1..=40);
            if n == d {
                continue;
            }
            let sign = if rng.random_bool(0.5) { -1 } else { 1 };
            break BigRational::new((sign * n).into(), d.into());
        };
        let qi = pick();
        let qj = if equal_params { qi.clone() } else { pick() };
        Self::at(m, qi, qj)
    }
}

impl<C: Scalar> DihedralAlgebra<C> {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn equal_params(&self) -> bool {
        self.equal_params
    }

    /// The 2m basis words.
    pub fn basis(&self) -> Vec<Word> {
        let mut out = vec![Word::ONE];
        for len in 1..self.m {
            out.push(Word { start: Side::I, len });
            out.push(Word { start: Side::J, len });
        }
        out.push(Word {
            start: Side::I,
            len: self.m,
        });
        out
    }

    pub fn one(&self) -> DihedralElement<C> {
        DihedralElement::term(Word::ONE, C::one())
    }

    pub fn scalar(&self, c: C) -> DihedralElement<C> {
        DihedralElement::term(Word::ONE, c)
    }

    pub fn word(&self, w: Word) -> DihedralElement<C> {
        DihedralElement::term(Word::canonical(w.start, w.len, self.m), C::one())
    }

    pub fn gen(&self, s: Side) -> DihedralElement<C> {
        self.word(Word { start: s, len: 1 })
    }

    /// g⁻¹ = g − (q − q⁻¹).
    pub fn gen_inverse(&self, s: Side) -> DihedralElement<C> {
        self.gen(s).sub(&self.scalar(self.delta[s.index()].clone()))
    }

    pub fn beta(&self, s: Side) -> &C {
        &self.beta[s.index()]
    }

    fn left_mul_word(&self, s: Side, w: Word, c: &C, out: &mut DihedralElement<C>) {
        let starts_with_s = w.len == self.m || (w.len > 0 && w.start == s);
        if starts_with_s {
            // g_s g_s rest = (q − q⁻¹) g_s rest + rest
            out.add_term(w, c.mul(&self.delta[s.index()]));
            out.add_term(Word::canonical(s.other(), w.len - 1, self.m), c.clone());
        } else {
            out.add_term(Word::canonical(s, w.len + 1, self.m), c.clone());
        }
    }

    pub fn left_mul_gen(&self, s: Side, x: &DihedralElement<C>) -> DihedralElement<C> {
        let mut out = DihedralElement::zero();
        for (w, c) in x.terms() {
            self.left_mul_word(s, *w, c, &mut out);
        }
        out
    }

    pub fn mul(&self, x: &DihedralElement<C>, y: &DihedralElement<C>) -> DihedralElement<C> {
        let mut out = DihedralElement::zero();
        for (w, c) in x.terms() {
            let mut z = y.clone();
            for s in w.letters().rev() {
                z = self.left_mul_gen(s, &z);
            }
            out = out.add(&z.scale(c));
        }
        out
    }

    /// The involution g ↦ −g⁻¹ = (q − q⁻¹) − g.
    pub fn phi(&self, x: &DihedralElement<C>) -> DihedralElement<C> {
        let mut out = DihedralElement::zero();
        for (w, c) in x.terms() {
            let mut z = self.scalar(c.clone());
            for s in w.letters().rev() {
                let shifted = z.scale(&self.delta[s.index()]);
                z = shifted.sub(&self.left_mul_gen(s, &z));
            }
            out = out.add(&z);
        }
        out
    }

    /// f = (2g − (q − q⁻¹)) / (q + q⁻¹).
    pub fn f_gen(&self, s: Side) -> DihedralElement<C> {
        let two = C::from_int(&BigInt::from(2));
        self.gen(s)
            .scale(&two)
            .sub(&self.scalar(self.delta[s.index()].clone()))
            .scale(&self.sigma_inv[s.index()])
    }

    /// Evaluates a polynomial in `b0`, `b1` at β_i, β_j.
    pub fn lift_beta_poly(&self, p: &LaurentPoly) -> C {
        let mut acc = C::zero();
        for (mono, c) in p.terms() {
            let mut t = C::from_int(c);
            for (v, e) in mono.iter() {
                let side = match v {
                    Var::B(0) => Side::I,
                    Var::B(1) => Side::J,
                    other => panic!("unexpected variable {other} in a_k"),
                };
                assert!(e >= 0, "negative power of β");
                t = t.mul(&self.beta[side.index()].pow(e as u32));
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn random_element(&self, rng: &mut impl Rng) -> DihedralElement<C> {
        let mut out = DihedralElement::zero();
        for w in self.basis() {
            if rng.random_bool(0.6) {
                let c: i64 = rng.random_range(-4..=4);
                out.add_term(w, C::from_int(&BigInt::from(c)));
            }
        }
        out
    }
}

/// Σ_k a_k ((f_i f_j)^{(m+k)/2} − (f_i f_j)^{(m−k)/2}) in the given algebra.
pub fn relation_residual_in<C: Scalar>(alg: &DihedralAlgebra<C>) -> DihedralElement<C> {
    let m = alg.m();
    let a = a_vector(m, alg.equal_params()).expect("algebra label is valid");
    let y = alg.mul(&alg.f_gen(Side::I), &alg.f_gen(Side::J));
    let mut powers = vec![alg.one()];
    for _ in 0..m {
        let next = alg.mul(&y, powers.last().unwrap());
        powers.push(next);
    }
    let mut out = DihedralElement::zero();
    for (k, ak) in a.nonzero() {
        let c = alg.lift_beta_poly(ak);
        let diff = powers[((m + k) / 2) as usize].sub(&powers[((m - k) / 2) as usize]);
        out = out.add(&diff.scale(&c));
    }
    out
}

pub fn relation_residual(m: u32, equal_params: bool) -> Result<DihedralElement<QFraction>> {
    Ok(relation_residual_in(&DihedralAlgebra::symbolic(m, equal_params)?))
}

/// 2^m (⟨g_i,g_j⟩_m − ⟨g_j,g_i⟩_m) expanded over the words of the
/// infinite dihedral group on f_i, f_j. Index k > 0 is ⟨f_i,f_j⟩_k, k < 0
/// is ⟨f_j,f_i⟩_{−k}, 0 is the empty word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FExpansion {
    pub m: u32,
    pub equal_params: bool,
    pub coeffs: BTreeMap<i32, LaurentPoly>,
}

impl FExpansion {
    pub fn coeff(&self, k: i32) -> LaurentPoly {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Coefficients of ⟨f_i,f_j⟩_k and ⟨f_j,f_i⟩_k.
    pub fn pair(&self, k: u32) -> (LaurentPoly, LaurentPoly) {
        (self.coeff(k as i32), self.coeff(-(k as i32)))
    }

    /// Every ⟨f_i,f_j⟩_k + ⟨f_j,f_i⟩_k component (including the constant) vanishes.
    pub fn symmetric_part_vanishes(&self) -> bool {
        (0..=self.m).all(|k| {
            let (a, b) = self.pair(k);
            (&a + &b).is_zero()
        })
    }

    /// Antisymmetric components vanish for k ≢ m (mod 2).
    pub fn parity_vanishes(&self) -> bool {
        (1..=self.m).filter(|k| (self.m - k) % 2 == 1).all(|k| {
            let (a, b) = self.pair(k);
            (&a - &b).is_zero()
        })
    }

    fn antisymmetric(&self, k: u32) -> LaurentPoly {
        let (a, b) = self.pair(k);
        &a - &b
    }

    /// The antisymmetric part normalized by its k = m component.
    pub fn normalized(&self, k: u32) -> RationalFunction {
        RationalFunction::new(self.antisymmetric(k), self.antisymmetric(self.m))
            .expect("leading component is nonzero")
    }

    /// Whether the normalized antisymmetric part equals a_k(β) with
    /// β = (q − q⁻¹)/(q + q⁻¹), for every k.
    pub fn matches(&self, a: &AKVector) -> bool {
        let qs = q_vars(self.equal_params);
        let lead = self.antisymmetric(self.m);
        (1..=self.m).all(|k| {
            // a_k(β) = A / P with P = Π σ_v^{deg_v}; compare A·lead with P·c_k.
            let ak = a.get(k);
            let degs = [Var::B(0), Var::B(1)].map(|b| ak.max_exponent(b).max(0) as u32);
            let mut num = LaurentPoly::zero();
            for (mono, c) in ak.terms() {
                let mut t = LaurentPoly::constant(c.clone());
                for (idx, b) in [Var::B(0), Var::B(1)].into_iter().enumerate() {
                    let e = mono.exponent(b) as u32;
                    t = &t * &(&delta(qs[idx]).pow(e) * &sigma(qs[idx]).pow(degs[idx] - e));
                }
                num = &num + &t;
            }
            let den = &sigma(qs[0]).pow(degs[0]) * &sigma(qs[1]).pow(degs[1]);
            &num * &lead == &den * &self.antisymmetric(k)
        })
    }
}

pub fn braid_f_expansion(m: u32, equal_params: bool) -> Result<FExpansion> {
    check_label(m, equal_params)?;
    let qs = q_vars(equal_params);
    // ⟨g_a,g_b⟩_m with 2g = σ f + δ, built right to left.
    let braid = |first: Side| -> BTreeMap<i32, LaurentPoly> {
        let mut cur: BTreeMap<i32, LaurentPoly> = BTreeMap::from([(0, LaurentPoly::one())]);
        let w = Word { start: first, len: m };
        for s in w.letters().rev() {
            let v = qs[s.index()];
            let (sg, dl) = (sigma(v), delta(v));
            let mut next: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
            for (&k, c) in &cur {
                let target = match s {
                    Side::I => 1 - k,
                    Side::J => -1 - k,
                };
                let e = next.entry(target).or_default();
                *e = &*e + &(c * &sg);
                let e = next.entry(k).or_default();
                *e = &*e + &(c * &dl);
            }
            cur = next;
        }
        cur
    };
    let mut coeffs = braid(Side::I);
    for (k, c) in braid(Side::J) {
        let e = coeffs.entry(k).or_default();
        *e = &*e - &c;
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(FExpansion {
        m,
        equal_params,
        coeffs,
    })
}

fn check_all<C: Scalar>(alg: &DihedralAlgebra<C>, tag: &str, rng: &mut ChaCha8Rng, fuzz: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (s, name) in [(Side::I, "i"), (Side::J, "j")] {
        let f = alg.f_gen(s);
        out.push(CheckResult::new(
            format!("f_{name}^2 = 1 {tag}"),
            alg.mul(&f, &f).equals(&alg.one()),
        ));
        out.push(CheckResult::new(
            format!("phi(f_{name}) = -f_{name} {tag}"),
            alg.phi(&f).add(&f).is_zero(),
        ));
        out.push(CheckResult::new(
            format!("g_{name} g_{name}^-1 = 1 {tag}"),
            alg.mul(&alg.gen(s), &alg.gen_inverse(s)).equals(&alg.one()),
        ));
    }
    if fuzz > 0 {
        let basis = alg.basis();
        let closed = basis.iter().all(|&a| {
            basis.iter().all(|&b| {
                alg.mul(&alg.word(a), &alg.word(b))
                    .terms()
                    .all(|(w, _)| w.is_canonical(alg.m()))
            })
        });
        out.push(CheckResult::new(format!("basis closed under products {tag}"), closed));
        let mut assoc = true;
        let mut phi_ok = true;
        for _ in 0..fuzz {
            let (x, y, z) = (
                alg.random_element(rng),
                alg.random_element(rng),
                alg.random_element(rng),
            );
            let xy = alg.mul(&x, &y);
            assoc &= alg.mul(&xy, &z).equals(&alg.mul(&x, &alg.mul(&y, &z)));
            phi_ok &= alg.phi(&xy).equals(&alg.mul(&alg.phi(&x), &alg.phi(&y)));
            phi_ok &= alg.phi(&alg.phi(&x)).equals(&x);
        }
        out.push(CheckResult::new(
            format!("associativity on {fuzz} random triples {tag}"),
            assoc,
        ));
        out.push(CheckResult::new(
            format!("phi involutive homomorphism on {fuzz} random pairs {tag}"),
            phi_ok,
        ));
    }
    out.push(CheckResult::new(
        format!("relation residual = 0 {tag}"),
        relation_residual_in(alg).is_zero(),
    ));
    out
}

/// Largest label checked symbolically when evaluation mode is requested.
pub const SYMBOLIC_LIMIT_IN_EVAL_MODE: u32 = 8;

/// Number of random points used per label in evaluation mode.
pub const EVAL_POINTS: usize = 3;

/// All dihedral identities for label `m`: f² = 1, φ(f) = −f, closure,
/// associativity and φ fuzzing (at random rational points), the relation
/// residual, and the braid f-expansion against `coeffs`.
///
/// In evaluation mode the residual is checked symbolically for
/// `m ≤ SYMBOLIC_LIMIT_IN_EVAL_MODE` and at `EVAL_POINTS` random rational
/// points otherwise.
pub fn dihedral_checks(m: u32, eval_mode: bool, seed: u64, fuzz: usize) -> Result<Vec<CheckResult>> {
    check_label(m, true)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(m));
    let modes: &[bool] = if m % 2 == 1 { &[true] } else { &[true, false] };
    let mut out = Vec::new();
    for &equal in modes {
        let tag = format!("[m={m}, {}]", if equal { "one-param" } else { "two-param" });
        let fuzz_alg = DihedralAlgebra::random(m, equal, &mut rng)?;
        let fuzz_checks = check_all(&fuzz_alg, &format!("{tag} at random q"), &mut rng, fuzz);
        out.extend(fuzz_checks.into_iter().filter(|c| !c.name.starts_with("relation")));
        if eval_mode && m > SYMBOLIC_LIMIT_IN_EVAL_MODE {
            for point in 0..EVAL_POINTS {
                let alg = DihedralAlgebra::random(m, equal, &mut rng)?;
                out.extend(check_all(&alg, &format!("{tag} point {point}"), &mut rng, 0));
            }
        } else {
            out.extend(check_all(&DihedralAlgebra::symbolic(m, equal)?, &format!("{tag} symbolic"), &mut rng, 0));
        }
        let exp = braid_f_expansion(m, equal)?;
        out.push(CheckResult::new(
            format!("braid f-expansion: symmetric part = 0 {tag}"),
            exp.symmetric_part_vanishes(),
        ));
        out.push(CheckResult::new(
            format!("braid f-expansion: parity vanishing {tag}"),
            exp.parity_vanishes(),
        ));
        out.push(CheckResult::new(
            format!("braid f-expansion: antisymmetric part = a_k {tag}"),
            exp.matches(&a_vector(m, equal)?),
        ));
    }
    Ok(out)
}
