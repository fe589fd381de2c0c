//! Exact arithmetic: integers, Laurent polynomials, rational functions,
//! truncated series, Witt vectors, and dense matrices over any of them.

pub mod expr;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod ring;
pub mod series;

pub use expr::{parse_laurent, parse_rational};
pub use linalg::PivotOrder;
pub use matrix::Matrix;
pub use poly::LaurentPoly;
pub use ratfunc::RationalFunction;
pub use ring::{Field, IntegralDomain, Ring};
pub use series::{SeriesComparison, exp_eta, is_integral, log_series, rf_expand, CoeffRing, TruncatedSeries, WittVector};
