use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::Signed;

use super::Word;
use crate::error::{Error, Result};
use crate::mseg::{pairing, Content, Window};
use crate::qcoeff::{expr, RatFunc};

/// A finite ℚ(q)-linear combination of words over a fixed window. It
/// represents an element of `U_q^-` only up to the Serre relations.
#[derive(Clone, PartialEq, Eq)]
pub struct WordVector {
    window: Window,
    terms: BTreeMap<Word, RatFunc>,
}

impl WordVector {
    pub fn zero(window: &Window) -> Self {
        Self { window: window.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(window: &Window, c: RatFunc) -> Self {
        let mut v = Self::zero(window);
        v.add_term(Word::empty(), c);
        v
    }

    pub fn one(window: &Window) -> Self {
        Self::scalar(window, RatFunc::one())
    }

    pub fn word(window: &Window, letters: &[i32]) -> Result<Self> {
        for &i in letters {
            window.check(i)?;
        }
        let mut v = Self::zero(window);
        v.add_term(Word::new(letters.to_vec()), RatFunc::one());
        Ok(v)
    }

    /// The generator `f_i`.
    pub fn letter(window: &Window, i: i32) -> Result<Self> {
        Self::word(window, &[i])
    }

    /// Parses expressions such as `f[1]·f[3] - q·f[3]·f[1]`.
    pub fn parse(window: &Window, src: &str) -> Result<Self> {
        let poly = expr::parse_nc(src)?;
        let mut v = Self::zero(window);
        for (letters, c) in poly {
            for &i in &letters {
                window.check(i)?;
            }
            v.add_term(Word::new(letters), c);
        }
        Ok(v)
    }

    pub(crate) fn from_terms(window: &Window, terms: impl IntoIterator<Item = (Word, RatFunc)>) -> Self {
        let mut v = Self::zero(window);
        for (w, c) in terms {
            v.add_term(w, c);
        }
        v
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Zero as a free-algebra element (not modulo the Serre relations).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of the empty word.
    pub fn constant_term(&self) -> RatFunc {
        self.coeff(&Word::empty())
    }

    pub(crate) fn add_term(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &WordVector, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(&self.window);
        }
        Self { window: self.window.clone(), terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    fn same_window(&self, other: &WordVector) -> Result<()> {
        if self.window == other.window {
            Ok(())
        } else {
            Err(Error::WindowMismatch)
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &WordVector) -> Result<Self> {
        self.same_window(other)?;
        let mut out = Self::zero(&self.window);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        Ok(out)
    }

    /// `f_i · self`.
    pub fn left_mul_letter(&self, i: i32) -> Result<Self> {
        self.window.check(i)?;
        Ok(Self {
            window: self.window.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.prepend(i), c.clone())).collect(),
        })
    }

    /// `self · f_i`.
    pub fn right_mul_letter(&self, i: i32) -> Result<Self> {
        self.window.check(i)?;
        Ok(Self {
            window: self.window.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.append(i), c.clone())).collect(),
        })
    }

    /// Splits into homogeneous components.
    pub fn components(&self) -> BTreeMap<Content, WordVector> {
        let mut out: BTreeMap<Content, WordVector> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.content()).or_insert_with(|| Self::zero(&self.window)).terms.insert(w.clone(), c.clone());
        }
        out
    }

    /// The common content of all words; `None` for the zero vector.
    pub fn content(&self) -> Result<Option<Content>> {
        let mut it = self.terms.keys().map(Word::content);
        let Some(first) = it.next() else { return Ok(None) };
        if it.all(|c| c == first) {
            Ok(Some(first))
        } else {
            Err(Error::Inhomogeneous(format!("{self}")))
        }
    }

    /// `Ad(t_i)`: scales each word of content `β` by `q^{−(α_i, β)}`.
    pub fn ad_t(&self, i: i32) -> Self {
        Self {
            window: self.window.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let e: i32 = w.letters().iter().map(|&j| pairing(i, j)).sum();
                    (w.clone(), c * &RatFunc::q_pow(-e))
                })
                .collect(),
        }
    }

    /// The derivation `e'_i`: deletes one letter `f_i`, twisting by the
    /// letters to its left.
    pub fn eprime(&self, i: i32) -> Self {
        let mut out = Self::zero(&self.window);
        for (w, c) in &self.terms {
            let mut e = 0;
            for (p, &j) in w.letters().iter().enumerate() {
                if j == i {
                    out.add_term(w.without(p), c * &RatFunc::q_pow(-e));
                }
                e += pairing(i, j);
            }
        }
        out
    }

    /// The derivation `e*_i`: deletes one letter `f_i`, twisting by the
    /// letters to its right.
    pub fn estar(&self, i: i32) -> Self {
        let mut out = Self::zero(&self.window);
        for (w, c) in &self.terms {
            let mut e = 0;
            for (p, &j) in w.letters().iter().enumerate().rev() {
                if j == i {
                    out.add_term(w.without(p), c * &RatFunc::q_pow(-e));
                }
                e += pairing(i, j);
            }
        }
        out
    }

    /// Conjugates every coefficient; words are bar-invariant.
    pub fn bar(&self) -> Self {
        Self { window: self.window.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), c.bar())).collect() }
    }
}

impl Add for &WordVector {
    type Output = WordVector;
    /// Panics if the windows differ.
    fn add(self, rhs: &WordVector) -> WordVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &WordVector {
    type Output = WordVector;
    fn sub(self, rhs: &WordVector) -> WordVector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &WordVector {
    type Output = WordVector;
    fn neg(self) -> WordVector {
        WordVector { window: self.window.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl AddAssign<&WordVector> for WordVector {
    fn add_assign(&mut self, rhs: &WordVector) {
        self.same_window(rhs).expect("window mismatch");
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&WordVector> for WordVector {
    fn sub_assign(&mut self, rhs: &WordVector) {
        self.same_window(rhs).expect("window mismatch");
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

/// Coefficient prefix for one term, e.g. `q·`, `(q + 1)·`, or `2*q^-1·`.
fn fmt_coeff(c: &RatFunc) -> (bool, Option<String>) {
    let neg_c = -c;
    let (negative, abs) = match c.to_laurent() {
        Some(p) if p.is_monomial() && p.leading_coeff().unwrap().is_negative() => (true, neg_c),
        _ => (false, c.clone()),
    };
    if abs.is_one() {
        return (negative, None);
    }
    let simple = abs.to_laurent().is_some_and(|p| p.is_monomial());
    let s = if simple { abs.to_string() } else { format!("({abs})") };
    (negative, Some(s))
}

impl fmt::Display for WordVector {
    /// e.g. `f[1]·f[3] - q·f[3]·f[1]`; the zero vector prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (negative, coeff) = fmt_coeff(c);
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (coeff, w.is_empty()) {
                (None, true) => f.write_str("1")?,
                (None, false) => write!(f, "{w}")?,
                (Some(s), true) => f.write_str(&s)?,
                (Some(s), false) => write!(f, "{s}·{w}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Window {
        Window::symmetric(5).unwrap()
    }

    fn v(s: &str) -> WordVector {
        WordVector::parse(&w(), s).unwrap()
    }

    #[test]
    fn display_roundtrip() {
        let x = v("f[1]f[3] - q f[3]f[1]");
        assert_eq!(x.to_string(), "f[1]·f[3] - q·f[3]·f[1]");
        assert_eq!(v(&x.to_string()), x);
        let y = v("(q + q^-1) f[1] - 2 q^-1 + 1/2");
        assert_eq!(v(&y.to_string()), y);
        assert_eq!(WordVector::zero(&w()).to_string(), "0");
    }

    #[test]
    fn products_and_twists() {
        assert_eq!(v("f[1]").mul(&v("f[3]")).unwrap(), v("f[1]f[3]"));
        assert_eq!(v("1").mul(&v("f[1] + q")).unwrap(), v("f[1] + q"));
        assert_eq!(v("f[1] - q f[3]").mul(&v("f[1]")).unwrap(), v("f[1]f[1] - q f[3]f[1]"));
        assert_eq!(v("f[1]").ad_t(1), v("q^-2 f[1]"));
        assert_eq!(v("f[3]").ad_t(1), v("q f[3]"));
        assert_eq!(v("f[5]").ad_t(1), v("f[5]"));
        let other = WordVector::one(&Window::symmetric(1).unwrap());
        assert_eq!(v("1").mul(&other), Err(Error::WindowMismatch));
        assert!(matches!(WordVector::parse(&Window::symmetric(1).unwrap(), "f[3]"), Err(Error::OutOfWindow { index: 3, .. })));
    }

    #[test]
    fn derivations() {
        assert_eq!(v("f[1]").eprime(1), v("1"));
        assert_eq!(v("f[3]f[1]").eprime(1), v("q f[3]"));
        assert_eq!(v("f[1]f[1]").eprime(1), v("(1 + q^-2) f[1]"));
        assert_eq!(v("f[1]f[3]").estar(1), v("q f[3]"));
        assert_eq!(v("f[1]f[3]").eprime(5), WordVector::zero(&w()));
    }

    #[test]
    fn bar_conjugates_coefficients() {
        assert_eq!(v("q f[1]").bar(), v("q^-1 f[1]"));
        assert_eq!(v("f[1]f[3] - q f[3]f[1]").bar(), v("f[1]f[3] - q^-1 f[3]f[1]"));
    }
}
