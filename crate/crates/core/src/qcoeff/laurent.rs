//! Laurent polynomials in one variable `q` with rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A finite sum `Σ c_e q^e` with `c_e ∈ ℚ`, stored densely from the lowest
/// nonzero exponent. Both ends of `coeffs` are nonzero; the zero polynomial
/// has no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `c·q^e`.
    pub fn monomial(c: BigRational, e: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: e, coeffs: vec![c] }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    /// Builds from a dense coefficient vector starting at exponent `low`.
    pub fn from_dense(low: i32, coeffs: Vec<BigRational>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, BigRational)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Exactly one nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, e: i32) -> BigRational {
        let idx = e - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub(crate) fn low(&self) -> i32 {
        self.low
    }

    pub(crate) fn dense(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigRational)> + '_ {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (low + k as i32, c))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Coefficient of the lowest-degree term.
    pub fn lowest_coeff(&self) -> Option<&BigRational> {
        self.coeffs.first()
    }

    /// Coefficient of the highest-degree term.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// The substitution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Self { low: -hi, coeffs }
            }
        }
    }

    /// Keeps only terms whose exponent satisfies `keep`.
    pub fn filter_exponents(&self, keep: impl Fn(i32) -> bool) -> Self {
        Self::from_terms(self.terms().filter(|(e, _)| keep(*e)).map(|(e, c)| (e, c.clone())))
    }

    /// Exact evaluation at a rational point; `None` if `x = 0` and a negative
    /// power occurs.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if x.is_zero() {
            return if self.low > 0 {
                Some(BigRational::zero())
            } else if self.low == 0 {
                Some(self.coeffs[0].clone())
            } else {
                None
            };
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Some(acc * pow_rational(x, self.low))
    }

    /// Whether every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

pub(crate) fn pow_rational(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - lo) as usize + k] += c;
        }
        LaurentPoly::from_dense(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[a + b] += x * y;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

/// Formats a rational coefficient without a redundant `/1`.
pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_term(c: &BigRational, e: i32) -> String {
    let var = match e {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{e}"),
    };
    if e == 0 {
        fmt_rational(c)
    } else if c.is_one() {
        var
    } else {
        format!("{}*{}", fmt_rational(c), var)
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending degree, e.g. `q + q^-1`, `2*q^3 - 1/2*q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms().rev() {
            let neg = c.is_negative();
            let body = fmt_term(&c.abs(), e);
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Quantum integer `[k] = (q^k − q^{−k})/(q − q^{−1})`.
pub fn qint(k: i64) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::zero();
    }
    let n = k.unsigned_abs() as i32;
    let sign = if k < 0 { -BigRational::one() } else { BigRational::one() };
    LaurentPoly::from_terms((0..n).map(|t| (n - 1 - 2 * t, sign.clone())))
}

/// Quantum factorial `[k]! = [1][2]⋯[k]`; `None` for negative `k`.
pub fn qfact(k: i64) -> Option<LaurentPoly> {
    if k < 0 {
        return None;
    }
    Some((1..=k).fold(LaurentPoly::one(), |acc, n| &acc * &qint(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into()))))
    }

    #[test]
    fn quantum_integers() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(2), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(qint(-3), -qint(3));
        assert_eq!(qint(3), lp(&[(2, 1), (0, 1), (-2, 1)]));
    }

    #[test]
    fn quantum_factorials() {
        assert!(qfact(0).unwrap().is_one());
        assert_eq!(qfact(2).unwrap(), lp(&[(1, 1), (-1, 1)]));
        // (q + q^-1)(q^2 + 1 + q^-2) expanded by hand
        assert_eq!(qfact(3).unwrap(), lp(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]));
        assert!(qfact(-1).is_none());
        for k in 1..=12 {
            assert_eq!(qfact(k).unwrap(), &qfact(k - 1).unwrap() * &qint(k));
            assert_eq!(&qint(k) * &qint(1), qint(k));
        }
    }

    #[test]
    fn bar_reverses_exponents() {
        let p = lp(&[(3, 2), (-1, 5)]);
        assert_eq!(p.bar(), lp(&[(-3, 2), (1, 5)]));
        assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn display() {
        assert_eq!(qint(2).to_string(), "q + q^-1");
        assert_eq!(lp(&[(3, 2), (0, -1), (-2, -1)]).to_string(), "2*q^3 - 1 - q^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn evaluation() {
        let one = BigRational::one();
        assert_eq!(qfact(3).unwrap().eval(&one).unwrap(), BigRational::from_integer(6.into()));
        assert!(lp(&[(-1, 1)]).eval(&BigRational::zero()).is_none());
    }
}
