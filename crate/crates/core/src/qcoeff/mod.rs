//! Exact arithmetic in ℚ(q): Laurent polynomials, normalized rational
//! functions, quantum integers and factorials, and the bar involution.

pub(crate) mod expr;
mod laurent;
mod ratfunc;

pub use expr::parse_ratfunc;
pub use laurent::{qfact, qint, LaurentPoly};
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// `[k]!` as an element of ℚ(q); rejects negative `k`.
pub fn qfact_checked(k: i64) -> Result<LaurentPoly> {
    qfact(k).ok_or(Error::NegativeFactorial(k))
}

/// The bar involution `q ↦ q⁻¹`.
pub fn bar(x: &RatFunc) -> RatFunc {
    x.bar()
}
