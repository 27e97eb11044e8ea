//! The integers α^(m)_{k,l,l'} expanding `⟨f₁+x, f₂+y⟩_m` in the infinite
//! dihedral basis, the relation polynomials a_k built from them, their
//! one-parameter closed forms, and cross-checks against the generating
//! functions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{series_expand, LaurentPoly, Monomial, TruncatedSeries, Var};

/// Key `(k, l, l')`.
pub type AlphaKey = (i32, u32, u32);

/// α^(m)_{k,l,l'} for one `m`; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    pub m: u32,
    entries: BTreeMap<AlphaKey, BigInt>,
}

impl AlphaTable {
    fn initial() -> Self {
        AlphaTable {
            m: 0,
            entries: BTreeMap::from([((0, 0, 0), BigInt::one())]),
        }
    }

    /// One recursion step: α^(m+1)_{k,l,l'} = α^(m)_{k−1,l',l} + α^(m)_{−k,l',l−1},
    /// read as each entry `(k,l,l')` feeding `(k+1,l',l)` and `(−k,l'+1,l)`.
    fn next(&self) -> Self {
        let mut entries: BTreeMap<AlphaKey, BigInt> = BTreeMap::new();
        for (&(k, l, lp), v) in &self.entries {
            *entries.entry((k + 1, lp, l)).or_default() += v;
            *entries.entry((-k, lp + 1, l)).or_default() += v;
        }
        entries.retain(|_, v| !v.is_zero());
        AlphaTable {
            m: self.m + 1,
            entries,
        }
    }

    pub fn get(&self, k: i32, l: u32, lp: u32) -> BigInt {
        self.entries.get(&(k, l, lp)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<AlphaKey, BigInt> {
        &self.entries
    }

    /// α^(m)_{k,L} = Σ_{l+l'=L} α^(m)_{k,l,l'}.
    pub fn one_param(&self, k: i32, total: u32) -> BigInt {
        (0..=total).map(|l| self.get(k, l, total - l)).sum()
    }

    /// The table as the polynomial Σ α t^m u^l v^{l'} s^k without the `t^m`.
    pub fn as_uvs_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.entries.iter().map(|(&(k, l, lp), c)| {
            (
                Monomial::from_pairs([(Var::U, l as i32), (Var::V, lp as i32), (Var::S, k)]),
                c.clone(),
            )
        }))
    }

    /// Checks the finite-support constraints on every stored entry.
    pub fn support_ok(&self) -> bool {
        let m = self.m as i64;
        self.entries.keys().all(|&(k, l, lp)| {
            let rest = m - l as i64 - lp as i64;
            (k as i64).abs() <= rest
                && (rest - k as i64).rem_euclid(2) == 0
                && l as i64 <= (m + 1) / 2
                && lp as i64 <= m / 2
        })
    }
}

#[derive(Serialize)]
struct AlphaEntry {
    k: i32,
    l: u32,
    lp: u32,
    value: String,
}

impl Serialize for AlphaTable {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            m: u32,
            entries: Vec<AlphaEntry>,
        }
        Repr {
            m: self.m,
            entries: self
                .entries
                .iter()
                .map(|(&(k, l, lp), v)| AlphaEntry {
                    k,
                    l,
                    lp,
                    value: v.to_string(),
                })
                .collect(),
        }
        .serialize(ser)
    }
}

pub fn alpha_table(m: u32) -> AlphaTable {
    let mut t = AlphaTable::initial();
    for _ in 0..m {
        t = t.next();
    }
    t
}

/// All tables `α^(0) … α^(max)`.
pub fn alpha_tables(max: u32) -> Vec<AlphaTable> {
    let mut out = vec![AlphaTable::initial()];
    for _ in 0..max {
        let next = out.last().unwrap().next();
        out.push(next);
    }
    out
}

/// The relation coefficients a_1 … a_m for one label `m`.
///
/// Polynomials are in `b0` (β_i) and `b1` (β_j); with identified parameters
/// only `b0` appears.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AKVector {
    pub m: u32,
    pub equal_params: bool,
    pub a: BTreeMap<u32, LaurentPoly>,
}

impl AKVector {
    pub fn get(&self, k: u32) -> &LaurentPoly {
        &self.a[&k]
    }

    /// Nonzero coefficients, highest `k` first.
    pub fn nonzero(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> {
        self.a.iter().rev().filter(|(_, p)| !p.is_zero()).map(|(&k, p)| (k, p))
    }

    /// Renames `b0`, `b1` to the given variables.
    pub fn instantiate(&self, bi: Var, bj: Var) -> BTreeMap<u32, LaurentPoly> {
        let rename = |v: Var| match v {
            Var::B(0) => bi,
            Var::B(1) => bj,
            other => other,
        };
        self.a.iter().map(|(&k, p)| (k, p.rename(rename))).collect()
    }

    /// Sets `b1 := b0`.
    pub fn specialize_equal(&self) -> AKVector {
        let a = self
            .a
            .iter()
            .map(|(&k, p)| (k, identify_betas(p)))
            .collect();
        AKVector {
            m: self.m,
            equal_params: true,
            a,
        }
    }
}

pub(crate) fn identify_betas(p: &LaurentPoly) -> LaurentPoly {
    p.rename(|v| if v == Var::B(1) { Var::B(0) } else { v })
}

fn beta_monomial(l: u32, lp: u32) -> Monomial {
    Monomial::from_pairs([(Var::B(0), l as i32), (Var::B(1), lp as i32)])
}

/// c(k) = Σ β_i^l β_j^{l'} (α_{k,l,l'} − α_{−k,l',l}) for every `k ∈ [−m, m]`.
///
/// For `k ≥ 1` this is a_k; antisymmetry of the expansion of the
/// braid difference amounts to `c(k) + c(−k) = 0`.
pub fn signed_coefficients(table: &AlphaTable, equal_params: bool) -> BTreeMap<i32, LaurentPoly> {
    let m = table.m as i32;
    let mut out: BTreeMap<i32, LaurentPoly> =
        (-m..=m).map(|k| (k, LaurentPoly::zero())).collect();
    for (&(k, l, lp), v) in table.entries() {
        out.get_mut(&k).unwrap().add_term(beta_monomial(l, lp), v.clone());
        // α_{k,l,l'} appears with a minus sign in c(−k) at monomial β_i^{l'} β_j^l.
        out.get_mut(&-k)
            .unwrap()
            .add_term(beta_monomial(lp, l), -v.clone());
    }
    if equal_params {
        for p in out.values_mut() {
            *p = identify_betas(p);
        }
    }
    out
}

pub fn a_vector(m: u32, equal_params: bool) -> Result<AKVector> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("label m must be >= 2, got {m}")));
    }
    if m % 2 == 1 && !equal_params {
        return Err(Error::ParametersMustCoincide(m));
    }
    let c = signed_coefficients(&alpha_table(m), equal_params);
    let a = (1..=m).map(|k| (k, c[&(k as i32)].clone())).collect();
    Ok(AKVector {
        m,
        equal_params,
        a,
    })
}

/// C(n, k) with C(n, 0) = 1 for every n and C(n, k) = 0 for k < 0 or
/// k > n ≥ 0. Negative `n` with positive `k` never occurs in the closed
/// form's support.
fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one();
    }
    assert!(n >= 0, "binomial C({n}, {k}) with negative top reached");
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Closed form of α^(m)_{k,L} = Σ_{l+l'=L} α^(m)_{k,l,l'}.
pub fn alpha_one_param(m: u32, k: i32, total: u32) -> BigInt {
    let (m, k, total) = (m as i64, k as i64, total as i64);
    if total > m || k.abs() > m - total || (m + k - total).rem_euclid(2) != 0 {
        return BigInt::zero();
    }
    if total % 2 == 0 {
        binom((m + k) / 2, (m + k - total) / 2) * binom((m - k - 2) / 2, (m - k - total) / 2)
    } else {
        binom((m + k - 1) / 2, (m + k - total) / 2) * binom((m - k - 1) / 2, (m - k - total) / 2)
    }
}

/// a_k = Σ_p β^{2p} · 2k α^(m)_{k,2p} / (m+k) from the closed form.
pub fn a_one_param(m: u32) -> Result<AKVector> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("label m must be >= 2, got {m}")));
    }
    let mut a = BTreeMap::new();
    for k in 1..=m {
        let mut poly = LaurentPoly::zero();
        for p in 0..=(m - 1) / 2 {
            let alpha = alpha_one_param(m, k as i32, 2 * p);
            let (q, r) = (alpha * BigInt::from(2 * k)).div_rem(&BigInt::from(m + k));
            assert!(
                r.is_zero(),
                "2k/(m+k) division inexact at m={m}, k={k}, p={p}"
            );
            poly.add_term(Monomial::var(Var::B(0), 2 * p as i32), q);
        }
        a.insert(k, poly);
    }
    Ok(AKVector {
        m,
        equal_params: true,
        a,
    })
}

/// A disagreement found by a generating-function check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub source: String,
    pub m: usize,
    pub monomial: String,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenCheckReport {
    pub name: &'static str,
    pub max_order: usize,
    pub coefficients_checked: usize,
    pub mismatch: Option<Mismatch>,
}

impl GenCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// First monomial where `expected` and `found` differ.
fn compare(source: &str, m: usize, expected: &LaurentPoly, found: &LaurentPoly) -> Option<Mismatch> {
    if expected == found {
        return None;
    }
    let diff = expected - found;
    let (mono, _) = diff.terms().next().expect("nonzero difference");
    Some(Mismatch {
        source: source.to_string(),
        m,
        monomial: mono.to_string(),
        expected: expected.coeff(mono).to_string(),
        found: found.coeff(mono).to_string(),
    })
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().expect("well-formed constant polynomial")
}

/// Numerator and denominator of the four-variable generating function C(t,u,v,s).
pub fn generating_function_c() -> (LaurentPoly, LaurentPoly) {
    let num = poly("1 + t*u + t*s + t^2*v*s + t^2*u*s^-1 - t^2*s^-2 - t^2*u*v")
        + &(&poly("t^3 - t^3*u^2") * &poly("v - s^-1"));
    let den = poly("1 - t^2*s^2 - t^2*s^-2 - 2*t^2*u*v")
        + &(&poly("t^4*u^2 - t^4") * &poly("v^2 - 1"));
    (num, den)
}

/// Numerator and denominator of D(t,u,s) = C(t,u,u,s).
pub fn generating_function_d() -> (LaurentPoly, LaurentPoly) {
    (
        poly("1 + t*u - t*s^-1"),
        poly("1 - t*s - t*s^-1 + t^2 - t^2*u^2"),
    )
}

fn expand(num: &LaurentPoly, den: &LaurentPoly, order: usize) -> TruncatedSeries {
    series_expand(num, den, Var::T, order).expect("generating functions have unit constant term")
}

pub fn gen_check_c(max: usize) -> GenCheckReport {
    let (num, den) = generating_function_c();
    let series = expand(&num, &den, max);
    let mut report = GenCheckReport {
        name: "C(t,u,v,s) vs recursion",
        max_order: max,
        coefficients_checked: 0,
        mismatch: None,
    };
    for (m, table) in alpha_tables(max as u32).iter().enumerate() {
        let expected = table.as_uvs_poly();
        report.coefficients_checked += expected.len();
        if let Some(bad) = compare("recursion vs C series", m, &expected, series.coeff(m)) {
            report.mismatch = Some(bad);
            break;
        }
    }
    report
}

fn closed_form_poly(m: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for total in 0..=m {
        for k in -(m as i32)..=m as i32 {
            let c = alpha_one_param(m, k, total);
            if !c.is_zero() {
                p.add_term(Monomial::from_pairs([(Var::U, total as i32), (Var::S, k)]), c);
            }
        }
    }
    p
}

fn recursion_one_param_poly(table: &AlphaTable) -> LaurentPoly {
    LaurentPoly::from_terms(table.entries().iter().map(|(&(k, l, lp), c)| {
        (
            Monomial::from_pairs([(Var::U, (l + lp) as i32), (Var::S, k)]),
            c.clone(),
        )
    }))
}

/// Coefficient of t^m in the triple-sum expansions of the even and odd
/// parts of D. The a = 0 terms of the even sum, where the factorial
/// expression degenerates, are those of 1/(1 − ts): t^b s^b.
fn triple_sum_poly(m: u32) -> LaurentPoly {
    let fact_ratio = |a: u32, b: u32| binom((a + b) as i64, a as i64);
    let mut p = LaurentPoly::zero();
    for a in 0..=m / 2 {
        for b in 0..=m - 2 * a {
            let c = m - 2 * a - b;
            let s_exp = b as i32 - c as i32;
            // even part: C(a+b, a) · C(a+c−1, c)
            let even = if a == 0 {
                if c == 0 { BigInt::one() } else { BigInt::zero() }
            } else {
                fact_ratio(a, b) * binom((a + c - 1) as i64, c as i64)
            };
            p.add_term(
                Monomial::from_pairs([(Var::U, 2 * a as i32), (Var::S, s_exp)]),
                even,
            );
        }
        if 2 * a < m {
            for b in 0..=m - 1 - 2 * a {
                let c = m - 1 - 2 * a - b;
                let odd = fact_ratio(a, b) * fact_ratio(a, c);
                p.add_term(
                    Monomial::from_pairs([(Var::U, 2 * a as i32 + 1), (Var::S, b as i32 - c as i32)]),
                    odd,
                );
            }
        }
    }
    p
}

/// Checks D(t,u,s) to order `max` against the C series with v := u, the
/// closed form, the recursion, the even/odd split and its triple sums.
pub fn gen_check_d(max: usize) -> GenCheckReport {
    let (num, den) = generating_function_d();
    let d_series = expand(&num, &den, max);
    let (cn, cd) = generating_function_c();
    let c_series = expand(&cn, &cd, max).map(|p| p.rename(|v| if v == Var::V { Var::U } else { v }));
    let even = expand(&poly("1 - t*s^-1"), &den, max);
    let odd = expand(&poly("t*u"), &den, max);
    let tables = alpha_tables(max as u32);

    let mut report = GenCheckReport {
        name: "D(t,u,s) vs C(t,u,u,s), closed form and recursion",
        max_order: max,
        coefficients_checked: 0,
        mismatch: None,
    };
    for m in 0..=max {
        let d = d_series.coeff(m);
        report.coefficients_checked += d.len();
        let split_sum = even.coeff(m) + odd.coeff(m);
        let parity_ok = even.coeff(m).terms().all(|(mono, _)| mono.exponent(Var::U) % 2 == 0)
            && odd.coeff(m).terms().all(|(mono, _)| mono.exponent(Var::U) % 2 == 1);
        let checks = [
            ("C series with v = u", c_series.coeff(m).clone()),
            ("closed form", closed_form_poly(m as u32)),
            ("recursion", recursion_one_param_poly(&tables[m])),
            ("even + odd parts", split_sum),
            ("triple sums", triple_sum_poly(m as u32)),
        ];
        for (source, found) in checks {
            if let Some(bad) = compare(source, m, d, &found) {
                report.mismatch = Some(bad);
                return report;
            }
        }
        if !parity_ok {
            report.mismatch = Some(Mismatch {
                source: "even/odd parity of split".into(),
                m,
                monomial: "u".into(),
                expected: "even/odd powers".into(),
                found: "mixed".into(),
            });
            return report;
        }
    }
    report
}

/// Whether `c(k) + c(−k) = 0` for all k (with c(0) = 0).
pub fn symmetric_part_vanishes(m: u32, equal_params: bool) -> bool {
    let c = signed_coefficients(&alpha_table(m), equal_params);
    (0..=m as i32).all(|k| (&c[&k] + &c[&-k]).is_zero())
}

/// Number of terms with negative coefficient, useful as a sanity statistic.
pub fn negative_terms(p: &LaurentPoly) -> usize {
    p.terms().filter(|(_, c)| c.is_negative()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    /// Direct expansion of ⟨f₁+x, f₂+y⟩_m in the infinite dihedral group
    /// ring, with words indexed by k ∈ Z: index k ≥ 0 is ⟨f₁,f₂⟩_k and
    /// k < 0 is ⟨f₂,f₁⟩_{−k}. Independent of the recursion.
    fn alpha_by_expansion(m: u32) -> BTreeMap<AlphaKey, BigInt> {
        // element: (k, l, l') -> coeff; build the product right to left.
        let mut cur: BTreeMap<AlphaKey, BigInt> = BTreeMap::from([((0, 0, 0), BigInt::one())]);
        for pos in (0..m).rev() {
            let first = pos % 2 == 0; // factor is f₁ + x at even positions
            let mut next: BTreeMap<AlphaKey, BigInt> = BTreeMap::new();
            for (&(k, l, lp), c) in &cur {
                // multiply by the f-letter: reduce f·word
                let word = |k: i32| -> Vec<u8> {
                    let len = k.unsigned_abs() as usize;
                    let start = if k >= 0 { 1u8 } else { 2u8 };
                    (0..len).map(|i| if i % 2 == 0 { start } else { 3 - start }).collect()
                };
                let mut w = word(k);
                let letter = if first { 1 } else { 2 };
                if w.first() == Some(&letter) {
                    w.remove(0);
                } else {
                    w.insert(0, letter);
                }
                let nk = match w.first() {
                    None => 0,
                    Some(1) => w.len() as i32,
                    Some(_) => -(w.len() as i32),
                };
                *next.entry((nk, l, lp)).or_default() += c;
                let scalar_key = if first { (k, l + 1, lp) } else { (k, l, lp + 1) };
                *next.entry(scalar_key).or_default() += c;
            }
            cur = next;
        }
        cur.retain(|_, v| !v.is_zero());
        cur
    }

    #[test]
    fn small_tables() {
        assert_eq!(alpha_table(0).entries(), &BTreeMap::from([((0, 0, 0), BigInt::one())]));
        let one: BTreeMap<AlphaKey, BigInt> =
            [((1, 0, 0), 1), ((0, 1, 0), 1)].into_iter().map(|(k, v)| (k, v.into())).collect();
        assert_eq!(alpha_table(1).entries(), &one);
        let two: BTreeMap<AlphaKey, BigInt> =
            [((2, 0, 0), 1), ((1, 0, 1), 1), ((-1, 1, 0), 1), ((0, 1, 1), 1)]
                .into_iter()
                .map(|(k, v)| (k, v.into()))
                .collect();
        assert_eq!(alpha_table(2).entries(), &two);
    }

    #[test]
    fn recursion_matches_direct_expansion() {
        for m in 0..=10 {
            assert_eq!(alpha_table(m).entries(), &alpha_by_expansion(m), "m = {m}");
        }
    }

    #[test]
    fn support_constraints() {
        for t in alpha_tables(20) {
            assert!(t.support_ok(), "m = {}", t.m);
        }
    }

    #[test]
    fn printed_examples() {
        let a3 = a_vector(3, true).unwrap();
        assert_eq!(a3.get(3), &p("1"));
        assert_eq!(a3.get(1), &p("b0^2"));
        assert!(a3.get(2).is_zero());
        let a4 = a_vector(4, false).unwrap();
        assert_eq!(a4.get(4), &p("1"));
        assert_eq!(a4.get(2), &p("2*b0*b1"));
        assert!(a4.get(1).is_zero() && a4.get(3).is_zero());
        let a6 = a_vector(6, false).unwrap();
        assert_eq!(a6.get(4), &p("4*b0*b1"));
        assert_eq!(a6.get(2), &p("3*b0^2*b1^2 + b0^2 + b1^2"));
        let a5 = a_one_param(5).unwrap();
        assert_eq!(a5.get(5), &p("1"));
        assert_eq!(a5.get(3), &p("3*b0^2"));
        assert_eq!(a5.get(1), &p("b0^4 + b0^2"));
        let a2 = a_one_param(2).unwrap();
        assert_eq!(a2.get(2), &p("1"));
        assert!(a2.get(1).is_zero());
    }

    #[test]
    fn odd_label_needs_equal_parameters() {
        assert_eq!(a_vector(5, false), Err(Error::ParametersMustCoincide(5)));
        assert!(a_vector(1, true).is_err());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(alpha_one_param(3, 3, 0), 1.into());
        assert_eq!(alpha_one_param(3, 1, 0), 0.into());
        assert_eq!(alpha_one_param(3, 0, 1), 1.into());
        assert_eq!(alpha_one_param(5, 1, 2), 3.into());
        assert_eq!(alpha_one_param(5, 1, 9), 0.into());
        assert_eq!(alpha_one_param(4, 1, 0), 0.into());
    }

    #[test]
    fn closed_form_matches_recursion() {
        for t in alpha_tables(30) {
            let m = t.m;
            for total in 0..=m + 1 {
                for k in -(m as i32) - 1..=m as i32 + 1 {
                    assert_eq!(alpha_one_param(m, k, total), t.one_param(k, total), "{m} {k} {total}");
                }
            }
        }
    }

    #[test]
    fn reflection_identities() {
        for m in 0..=30u32 {
            for total in 0..=m {
                for k in 0..=m as i32 {
                    let plus = alpha_one_param(m, k, total);
                    let minus = alpha_one_param(m, -k, total);
                    if total % 2 == 1 {
                        assert_eq!(minus, plus);
                    } else {
                        assert_eq!(BigInt::from(m as i32 + k) * minus, BigInt::from(m as i32 - k) * plus);
                    }
                }
            }
        }
    }

    #[test]
    fn one_param_formula_matches_specialization() {
        for m in 2..=20 {
            let general = a_vector(m, m % 2 == 1).unwrap().specialize_equal();
            assert_eq!(a_one_param(m).unwrap(), general, "m = {m}");
        }
    }

    #[test]
    fn lemma_properties() {
        for m in 2..=20u32 {
            let odd = m % 2 == 1;
            let a = a_vector(m, odd).unwrap();
            assert!(a.get(m).is_one());
            for k in 1..=m {
                if (m - k) % 2 == 1 {
                    assert!(a.get(k).is_zero(), "parity m={m} k={k}");
                }
                // For odd m only one parameter exists, so symmetry is vacuous.
                if odd {
                    continue;
                }
                let raw = &signed_coefficients(&alpha_table(m), false)[&(k as i32)];
                let swapped = raw.rename(|v| match v {
                    Var::B(0) => Var::B(1),
                    Var::B(1) => Var::B(0),
                    o => o,
                });
                assert_eq!(&swapped, raw, "symmetry m={m} k={k}");
            }
            assert!(symmetric_part_vanishes(m, odd), "m = {m}");
        }
        // Without identified parameters the odd case is genuinely not antisymmetric.
        assert!(!symmetric_part_vanishes(3, false));
    }

    #[test]
    fn generating_functions() {
        let c0 = gen_check_c(0);
        assert!(c0.passed());
        let (n, d) = generating_function_c();
        let s = series_expand(&n, &d, Var::T, 1).unwrap();
        assert_eq!(s.coeff(0), &p("1"));
        assert_eq!(s.coeff(1), &p("u + s"));
        assert!(gen_check_c(12).passed());
        assert!(gen_check_d(0).passed());
        let (n, d) = generating_function_d();
        let s = series_expand(&n, &d, Var::T, 3).unwrap();
        assert_eq!(s.coeff(3).coeff(&Monomial::var(Var::S, 3)), 1.into());
        let r = gen_check_d(12);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn mismatch_is_reported() {
        let bad = compare("x", 2, &p("u + s"), &p("u + 2*s"));
        let bad = bad.unwrap();
        assert_eq!((bad.monomial.as_str(), bad.expected.as_str(), bad.found.as_str()), ("s", "1", "2"));
    }
}
