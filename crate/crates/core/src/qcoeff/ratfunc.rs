//! Exact elements of the field ℚ(q).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;

/// A quotient `num/den` in normal form: both are polynomials in `q` with
/// integer coefficients and nonnegative exponents, coprime in ℚ[q], the
/// coefficients jointly have content 1, and the lowest-degree coefficient of
/// `den` is positive. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(e))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        normalize(p, LaurentPoly::one())
    }

    /// `num/den`; `None` if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        (!den.is_zero()).then(|| normalize(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Membership in 𝐀 = ℚ[q, q⁻¹].
    pub fn in_a(&self) -> bool {
        self.den.is_monomial()
    }

    /// Membership in 𝐀₀: regular at `q = 0`.
    pub fn in_a0(&self) -> bool {
        self.den.min_exp() == Some(0)
    }

    /// Membership in 𝐀_∞: regular at `q = ∞`.
    pub fn in_a_inf(&self) -> bool {
        match self.num.max_exp() {
            None => true,
            Some(n) => n <= self.den.max_exp().unwrap(),
        }
    }

    /// Membership in `q·𝐀₀`: regular at `q = 0` with value 0 there.
    pub fn in_q_a0(&self) -> bool {
        self.is_zero() || (self.in_a0() && self.num.min_exp().unwrap() >= 1)
    }

    /// Membership in `q·ℚ[q]`.
    pub fn in_q_zq(&self) -> bool {
        self.is_zero() || (self.den.max_exp() == Some(0) && self.num.min_exp().unwrap() >= 1)
    }

    /// The Laurent polynomial this element equals, if it lies in 𝐀.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if !self.in_a() {
            return None;
        }
        let c = self.den.lowest_coeff().unwrap().recip();
        let e = self.den.min_exp().unwrap();
        Some(self.num.scale(&c).shift(-e))
    }

    /// The field automorphism `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        normalize(self.num.bar(), self.den.bar())
    }

    /// Exact value at `q = 1`; `None` on a pole.
    pub fn eval_at_one(&self) -> Option<BigRational> {
        self.eval(&BigRational::one())
    }

    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x)? / d)
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| normalize(self.den.clone(), self.num.clone()))
    }

    /// Rough size used for pivot selection: total number of terms and degree
    /// spread.
    pub fn complexity(&self) -> usize {
        let spread = |p: &LaurentPoly| match (p.min_exp(), p.max_exp()) {
            (Some(a), Some(b)) => (b - a) as usize,
            _ => 0,
        };
        self.num.term_count() + self.den.term_count() + spread(&self.num) + spread(&self.den)
    }

    /// Whether this is `±c·q^e`, i.e. a unit of 𝐀.
    pub fn is_unit_of_a(&self) -> bool {
        self.num.is_monomial() && self.den.is_monomial()
    }
}

/// Dense ascending coefficients of an ordinary polynomial; the input must
/// have no negative exponents.
fn to_poly(p: &LaurentPoly) -> Vec<BigRational> {
    debug_assert!(p.min_exp().unwrap_or(0) >= 0);
    let mut v = vec![BigRational::zero(); p.low().max(0) as usize];
    v.extend(p.dense().iter().cloned());
    v
}

fn from_poly(v: Vec<BigRational>) -> LaurentPoly {
    LaurentPoly::from_dense(0, v)
}

fn poly_trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Remainder of `a` modulo the nonzero polynomial `b`.
fn poly_rem(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
    poly_trim(&mut a);
    let db = b.len() - 1;
    let lead = b[db].clone();
    while a.len() > db {
        let shift = a.len() - 1 - db;
        let factor = a.last().unwrap() / &lead;
        for (k, c) in b.iter().enumerate() {
            a[shift + k] -= &factor * c;
        }
        a.pop();
        poly_trim(&mut a);
    }
    a
}

/// Quotient of an exact division `a / b`.
fn poly_exact_div(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut a = a.to_vec();
    poly_trim(&mut a);
    let db = b.len() - 1;
    if a.len() <= db {
        return Vec::new();
    }
    let mut quot = vec![BigRational::zero(); a.len() - db];
    let lead = b[db].clone();
    while a.len() > db {
        let shift = a.len() - 1 - db;
        let factor = a.last().unwrap() / &lead;
        for (k, c) in b.iter().enumerate() {
            a[shift + k] -= &factor * c;
        }
        quot[shift] = factor;
        a.pop();
        poly_trim(&mut a);
    }
    debug_assert!(a.is_empty(), "inexact polynomial division");
    quot
}

/// Monic gcd by the Euclidean algorithm.
fn poly_gcd(a: Vec<BigRational>, b: Vec<BigRational>) -> Vec<BigRational> {
    let (mut a, mut b) = (a, b);
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let lead = b.last().unwrap().clone();
        for c in b.iter_mut() {
            *c /= &lead;
        }
        let r = poly_rem(a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in a.iter_mut() {
            *c /= &lead;
        }
    }
    a
}

fn normalize(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return RatFunc::zero();
    }
    let s = num.min_exp().unwrap().min(den.min_exp().unwrap());
    let (mut num, mut den) = (num.shift(-s), den.shift(-s));

    if !num.is_monomial() && !den.is_monomial() {
        let g = poly_gcd(to_poly(&num), to_poly(&den));
        if g.len() > 1 {
            num = from_poly(poly_exact_div(&to_poly(&num), &g));
            den = from_poly(poly_exact_div(&to_poly(&den), &g));
        }
    }

    let mut lcm = BigInt::one();
    for (_, c) in num.terms().chain(den.terms()) {
        lcm = lcm.lcm(c.denom());
    }
    let scale = BigRational::from_integer(lcm);
    let mut num = num.scale(&scale);
    let mut den = den.scale(&scale);
    let mut content = BigInt::zero();
    for (_, c) in num.terms().chain(den.terms()) {
        content = content.gcd(c.numer());
    }
    let mut inv = BigRational::new(BigInt::one(), content);
    if den.lowest_coeff().unwrap().is_negative() {
        inv = -inv;
    }
    if !inv.is_one() {
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    RatFunc { num, den }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return normalize(&self.num + &rhs.num, self.den.clone());
        }
        normalize(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() && (self.num.is_monomial() || rhs.num.is_monomial()) {
            return normalize(&self.num * &rhs.num, LaurentPoly::one());
        }
        normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero in Q(q)");
        normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_laurent(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl fmt::Display for RatFunc {
    /// Elements of 𝐀 print as Laurent polynomials (`q + q^-1`); everything
    /// else as `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_laurent() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl std::str::FromStr for RatFunc {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::expr::parse_ratfunc(s)
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
