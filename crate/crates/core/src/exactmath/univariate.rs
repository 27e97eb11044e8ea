//! Dense univariate integer polynomials, used for content/gcd extraction
//! inside rational-function normalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UniPoly(pub Vec<BigInt>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> &BigInt {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        UniPoly(self.0.iter().map(|x| x / &c).collect())
    }

    /// Pseudo-remainder of `self` by `d`: lc(d)^k · self mod d.
    fn pseudo_rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        let lc = d.lead().clone();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let top = r.last().unwrap().clone();
            for x in r.iter_mut() {
                *x *= &lc;
            }
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &top * c;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UniPoly(r)
    }

    /// Primitive gcd via the primitive remainder sequence.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Exact division over the integers; `None` if `d` does not divide.
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(self.clone());
        }
        let n = self.degree()?;
        if n < dd {
            return None;
        }
        let mut r = self.0.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        let lc = d.lead();
        for shift in (0..=n - dd).rev() {
            let top = &r[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &qc * c;
            }
            q[shift] = qc;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(UniPoly::new(q))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_products() {
        // (x+1)(x-1) and (x-1)(x^2+1)
        let a = u(&[-1, 0, 1]);
        let b = u(&[-1, 1, -1, 1]);
        assert_eq!(a.gcd(&b), u(&[-1, 1]));
        // content is dropped
        assert_eq!(u(&[2, 2]).gcd(&u(&[4, 4])), u(&[1, 1]));
        assert_eq!(u(&[1, 0, 1]).gcd(&u(&[1, 1])), u(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = u(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&u(&[-1, 1])), Some(u(&[1, 1])));
        assert_eq!(a.div_exact(&u(&[1, 0, 1])), None);
        assert_eq!(u(&[2, 4]).div_exact(&u(&[2])), Some(u(&[1, 2])));
    }
}
