//! Exact arithmetic: multivariate Laurent polynomials over the integers,
//! normalized rational functions and truncated power series.

mod poly;
mod ratfun;
mod series;
mod univariate;
mod var;

pub use poly::{LaurentPoly, Monomial};
pub use ratfun::RationalFunction;
pub use series::{series_expand, TruncatedSeries};
pub use var::Var;

/// Ring operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &LaurentPoly, b: &LaurentPoly, op: PolyOp) -> LaurentPoly {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}

pub fn ratfun_normalize(num: LaurentPoly, den: LaurentPoly) -> crate::Result<RationalFunction> {
    RationalFunction::new(num, den)
}
