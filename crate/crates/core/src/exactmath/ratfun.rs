use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::univariate::UniPoly;
use super::{LaurentPoly, Monomial, Var};
use crate::error::{Error, Result};

/// A quotient of Laurent polynomials kept in normalized form.
///
/// Normalization removes the monomial part of the denominator, every common
/// factor that is univariate in some variable, and the common integer
/// content, and makes the leading coefficient of the denominator positive.
/// Denominators must split into univariate factors (all denominators in this
/// crate are products of `q + q⁻¹` and `q − q⁻¹` powers), which makes the
/// normal form canonical and equality a plain structural comparison.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFraction")]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Deserialize)]
struct RawFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl TryFrom<RawFraction> for RationalFunction {
    type Error = Error;
    fn try_from(raw: RawFraction) -> Result<Self> {
        RationalFunction::new(raw.num, raw.den)
    }
}

/// Groups the terms of `p` by their monomial in the other variables and
/// returns each group as a univariate polynomial in `v` together with the
/// exponent shift that was removed.
fn univariate_slices(p: &LaurentPoly, v: Var) -> BTreeMap<Monomial, (i32, UniPoly)> {
    let mut groups: BTreeMap<Monomial, BTreeMap<i32, BigInt>> = BTreeMap::new();
    for (m, c) in p.terms() {
        groups
            .entry(m.without(v))
            .or_default()
            .insert(m.exponent(v), c.clone());
    }
    groups
        .into_iter()
        .map(|(rest, by_exp)| {
            let lo = *by_exp.keys().next().unwrap();
            let hi = *by_exp.keys().next_back().unwrap();
            let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
            for (e, c) in by_exp {
                dense[(e - lo) as usize] = c;
            }
            (rest, (lo, UniPoly::new(dense)))
        })
        .collect()
}

/// Primitive gcd of all univariate slices of `p` in `v`.
fn univariate_content(p: &LaurentPoly, v: Var) -> UniPoly {
    univariate_slices(p, v)
        .into_values()
        .fold(UniPoly::new(vec![]), |g, (_, slice)| g.gcd(&slice))
}

fn div_by_univariate(p: &LaurentPoly, v: Var, d: &UniPoly) -> Option<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for (rest, (shift, slice)) in univariate_slices(p, v) {
        let q = slice.div_exact(d)?;
        for (i, c) in q.0.into_iter().enumerate() {
            out.add_term(rest.mul(&Monomial::var(v, shift + i as i32)), c);
        }
    }
    Some(out)
}

fn univariate_to_poly(v: Var, u: &UniPoly) -> LaurentPoly {
    LaurentPoly::from_terms(
        u.0.iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(v, i as i32), c.clone())),
    )
}

impl RationalFunction {
    /// Builds and normalizes `num / den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let shift = den.min_monomial().inverse();
        let mut num = num.mul_monomial(&shift);
        let mut den = den.mul_monomial(&shift);

        for v in den.vars() {
            let g = univariate_content(&num, v).gcd(&univariate_content(&den, v));
            if g.degree().unwrap_or(0) > 0 {
                num = div_by_univariate(&num, v, &g).expect("gcd divides numerator");
                den = div_by_univariate(&den, v, &g).expect("gcd divides denominator");
            }
        }

        let mut c = num_integer::Integer::gcd(&num.content(), &den.content());
        if den.leading_term().is_some_and(|(_, lc)| lc.is_negative()) {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_exact_int(&c)?;
            den = den.div_exact_int(&c)?;
        }

        if den.vars().len() > 1 {
            Self::check_splits(&den)?;
        }
        Ok(RationalFunction { num, den })
    }

    /// Verifies that `den` is an integer times a product of univariate
    /// polynomials in distinct variables.
    fn check_splits(den: &LaurentPoly) -> Result<()> {
        let mut product = LaurentPoly::constant(den.content());
        for v in den.vars() {
            product = &product * &univariate_to_poly(v, &univariate_content(den, v));
        }
        if &product == den || &(-&product) == den {
            Ok(())
        } else {
            Err(Error::UnsupportedDenominator(den.to_string()))
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inverse(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
}

fn combine(num: LaurentPoly, den: LaurentPoly) -> RationalFunction {
    RationalFunction::new(num, den).expect("product of split denominators splits")
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return combine(&self.num + &rhs.num, self.den.clone());
        }
        combine(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        combine(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by zero rational function");
        combine(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn examples() {
        let x = rf("2*b0", "2");
        assert_eq!((x.num(), x.den()), (&p("b0"), &p("1")));
        let y = rf("q0^2 - 1", "q0 - 1");
        assert_eq!((y.num(), y.den()), (&p("q0 + 1"), &p("1")));
        let z = rf("0", "q0 + q0^-1");
        assert_eq!((z.num(), z.den()), (&p("0"), &p("1")));
        assert_eq!(
            RationalFunction::new(p("1"), LaurentPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn unit_and_sign_are_normalized() {
        // 1/(q + q^-1) = q/(q^2 + 1)
        let x = rf("1", "q0 + q0^-1");
        assert_eq!((x.num(), x.den()), (&p("q0"), &p("q0^2 + 1")));
        let y = rf("-q0", "-q0^2 - 1");
        assert_eq!(x, y);
    }

    #[test]
    fn multivariate_numerator_cancels() {
        // (q0^2 - 1) * b1 / ((q0 - 1)(q1^2 + 1)) = (q0 + 1) b1 / (q1^2 + 1)
        let x = rf("b1*q0^2 - b1", "q0*q1^2 + q0 - q1^2 - 1");
        assert_eq!(x.num(), &p("b1*q0 + b1"));
        assert_eq!(x.den(), &p("q1^2 + 1"));
    }

    #[test]
    fn arithmetic() {
        let a = rf("1", "q0 + q0^-1");
        let b = rf("q0 - q0^-1", "q0 + q0^-1");
        let sum = &a + &b;
        assert_eq!(sum, rf("q0^2 + q0 - 1", "q0^2 + 1"));
        assert_eq!(&(&sum - &b), &a);
        assert_eq!(&(&a * &a.inverse().unwrap()), &RationalFunction::one());
        assert_eq!(&(&b / &b), &RationalFunction::one());
    }

    #[test]
    fn non_split_denominator_is_rejected() {
        assert!(matches!(
            RationalFunction::new(p("1"), p("q0 + q1")),
            Err(Error::UnsupportedDenominator(_))
        ));
    }
}
