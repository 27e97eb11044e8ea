use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::Signed;

use super::{LaurentPoly, Var};
use crate::error::{Error, Result};

/// A power series in one distinguished variable, truncated after `t^order`.
/// Coefficients are Laurent polynomials in the remaining variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: Var,
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(var: Var, order: usize) -> Self {
        TruncatedSeries {
            var,
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    /// Truncates a polynomial. Negative powers of `var` are rejected.
    pub fn from_poly(p: &LaurentPoly, var: Var, order: usize) -> Result<Self> {
        let mut out = Self::zero(var, order);
        for (e, c) in split_nonnegative(p, var)? {
            if e < out.coeffs.len() {
                out.coeffs[e] = c;
            }
        }
        Ok(out)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        &self.coeffs[n]
    }

    /// Reassembles `Σ c_n t^n` as a polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (n, c) in self.coeffs.iter().enumerate() {
            out += &(c * &LaurentPoly::var_pow(self.var, n as i32));
        }
        out
    }

    /// Applies a coefficientwise map.
    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        TruncatedSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

fn split_nonnegative(p: &LaurentPoly, var: Var) -> Result<BTreeMap<usize, LaurentPoly>> {
    p.coefficients_in(var)
        .into_iter()
        .map(|(e, c)| {
            usize::try_from(e)
                .map(|e| (e, c))
                .map_err(|_| Error::NegativeSeriesExponent {
                    var: var.to_string(),
                    poly: p.to_string(),
                })
        })
        .collect()
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.var, rhs.var);
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            var: self.var,
            coeffs: (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect(),
        }
    }
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.var, rhs.var);
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(self.var, order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out.coeffs[i + j] += &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        out
    }
}

/// Expands `num / den` as a power series in `var` up to `var^order`.
///
/// The constant term of `den` in `var` must be a unit of the Laurent ring
/// (a signed monomial) so that every coefficient stays a Laurent polynomial.
pub fn series_expand(
    num: &LaurentPoly,
    den: &LaurentPoly,
    var: Var,
    order: usize,
) -> Result<TruncatedSeries> {
    let num_s = TruncatedSeries::from_poly(num, var, order)?;
    let den_parts = split_nonnegative(den, var)?;
    let den0 = den_parts
        .get(&0)
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::ZeroConstantTerm(den.to_string()))?;
    let den0_inv = match den0.as_term() {
        Some((c, _)) if c.abs() == 1.into() => den0.unit_inverse().unwrap(),
        _ => return Err(Error::NonUnitConstantTerm(den0.to_string())),
    };

    let mut out = TruncatedSeries::zero(var, order);
    for n in 0..=order {
        let mut acc = num_s.coeffs[n].clone();
        for (&i, d) in den_parts.range(1..).take_while(|(&i, _)| i <= n) {
            acc -= &(d * &out.coeffs[n - i]);
        }
        out.coeffs[n] = &acc * &den0_inv;
    }

    let den_s = TruncatedSeries::from_poly(den, var, order)?;
    if &den_s * &out != num_s {
        return Err(Error::InexactDivision(format!(
            "series of ({num}) / ({den}) failed its round-trip check"
        )));
    }
    Ok(out)
}
