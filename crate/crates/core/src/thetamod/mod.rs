//! The symmetric-crystal module `V_θ(0)`, realised as the quotient
//! `U_q^- / Σ_k U_q^-(f_k − f_{−k})` with `θ(i) = −i`.
//!
//! Vectors are word-vector representatives; coordinates in the basis
//! `P_θ(m)φ` are computed per block of symmetrized content by reducing
//! against the image of the left ideal in PBW coordinates.

mod block;
mod form;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::freealg::{self, pbw_segment, WordVector};
use crate::mseg::{cmp_pbw, pairing, Segment, SymContent, Window};
use crate::qcoeff::{qfact, qint, RatFunc};
use crate::theta::ThetaMultisegment;

pub use block::{theta_block_data, theta_coords, theta_coords_vec, ThetaBlock};
pub use form::{theta_form, theta_gram};

/// A class in `V_θ(0)` given by a word-vector representative `a`, standing
/// for `aφ`.
#[derive(Clone)]
pub struct ThetaClassVector {
    rep: WordVector,
}

fn check_symmetric(window: &Window) -> Result<()> {
    if window.is_symmetric() {
        Ok(())
    } else {
        Err(Error::InvalidWindow(format!("{window} is not symmetric under i -> -i")))
    }
}

impl ThetaClassVector {
    pub fn from_rep(rep: WordVector) -> Result<Self> {
        check_symmetric(rep.window())?;
        Ok(Self { rep })
    }

    /// The generator `φ`.
    pub fn phi(window: &Window) -> Result<Self> {
        Self::from_rep(WordVector::one(window))
    }

    pub fn zero(window: &Window) -> Result<Self> {
        Self::from_rep(WordVector::zero(window))
    }

    pub fn parse(window: &Window, src: &str) -> Result<Self> {
        Self::from_rep(WordVector::parse(window, src)?)
    }

    pub fn rep(&self) -> &WordVector {
        &self.rep
    }

    pub fn window(&self) -> &Window {
        self.rep.window()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self { rep: self.rep.scale(c) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.window() != other.window() {
            return Err(Error::WindowMismatch);
        }
        Ok(Self { rep: &self.rep + &other.rep })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-RatFunc::one()))
    }

    /// Representatives split by symmetrized content.
    pub fn components(&self) -> BTreeMap<SymContent, WordVector> {
        let mut out: BTreeMap<SymContent, WordVector> = BTreeMap::new();
        for (content, part) in self.rep.components() {
            let e = out.entry(content.symmetrized()).or_insert_with(|| WordVector::zero(self.window()));
            *e += &part;
        }
        out
    }

    /// The symmetrized content, if homogeneous; `None` for a zero
    /// representative.
    pub fn sym_content(&self) -> Result<Option<SymContent>> {
        let comps = self.components();
        match comps.len() {
            0 => Ok(None),
            1 => Ok(comps.into_keys().next()),
            _ => Err(Error::Inhomogeneous(format!("{self}"))),
        }
    }

    /// Whether the class is zero.
    pub fn is_zero_class(&self) -> Result<bool> {
        Ok(theta_coords(self)?.is_empty())
    }

    /// Equality of classes.
    pub fn class_eq(&self, other: &Self) -> Result<bool> {
        self.sub(other)?.is_zero_class()
    }
}

impl fmt::Display for ThetaClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]φ", self.rep)
    }
}

impl fmt::Debug for ThetaClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `F_i`: left multiplication by `f_i`.
pub fn f_op(i: i32, v: &ThetaClassVector) -> Result<ThetaClassVector> {
    Ok(ThetaClassVector { rep: v.rep.left_mul_letter(i)? })
}

/// `E_i(aφ) = (e'_i a + Ad(t_i) e*_{−i} a)φ`.
pub fn e_op(i: i32, v: &ThetaClassVector) -> Result<ThetaClassVector> {
    v.window().check(i)?;
    let mut rep = v.rep.eprime(i);
    rep += &v.rep.estar(-i).ad_t(i);
    Ok(ThetaClassVector { rep })
}

/// `T_i`: scales content `β` by `q^{−(α_i + α_{−i}, β)}`.
pub fn t_op(i: i32, v: &ThetaClassVector) -> Result<ThetaClassVector> {
    v.window().check(i)?;
    Ok(ThetaClassVector { rep: v.rep.ad_t(i).ad_t(-i) })
}

/// `E_i` computed instead by pushing it through the letters with
/// `E_i F_j = q^{−(α_i,α_j)} F_j E_i + δ_{ij} + δ_{−i,j} T_i` and `E_i φ = 0`.
pub fn e_op_pushed(i: i32, v: &ThetaClassVector) -> Result<ThetaClassVector> {
    v.window().check(i)?;
    let window = v.window().clone();
    let mut out = WordVector::zero(&window);
    for (w, c) in v.rep.terms() {
        let letters = w.letters();
        // Walk from the right: acc = E_i applied to the suffix.
        let mut acc = WordVector::zero(&window);
        for p in (0..letters.len()).rev() {
            let j = letters[p];
            let suffix = WordVector::word(&window, &letters[p + 1..])?;
            let mut next = acc.left_mul_letter(j)?.scale(&RatFunc::q_pow(-pairing(i, j)));
            if j == i {
                next += &suffix;
            }
            if j == -i {
                next += &suffix.ad_t(i).ad_t(-i);
            }
            acc = next;
        }
        out.add_scaled(&acc, c);
    }
    Ok(ThetaClassVector { rep: out })
}

/// `⟨i,j⟩^{[n]}`: `⟨−j,j⟩^n / ∏_{ν=1}^n [2ν]` when `i = −j`, the divided
/// power `⟨i,j⟩^{(n)}` otherwise.
fn theta_power(window: &Window, s: Segment, n: u32) -> Result<WordVector> {
    let root = pbw_segment(window, s)?;
    let norm = if s.i() == -s.j() {
        (1..=n as i64).fold(RatFunc::one(), |acc, v| acc * RatFunc::from(qint(2 * v)))
    } else {
        RatFunc::from(qfact(n as i64).unwrap())
    };
    Ok(freealg::power(&root, n).scale(&(RatFunc::one() / norm)))
}

/// `P_θ(m)φ`.
pub fn ptheta_vector(window: &Window, m: &ThetaMultisegment) -> Result<ThetaClassVector> {
    check_symmetric(window)?;
    let mut segs: Vec<(Segment, u32)> = m.iter().collect();
    segs.sort_by(|a, b| cmp_pbw(&b.0, &a.0));
    let mut acc = WordVector::one(window);
    for (s, n) in segs {
        acc = acc.mul(&theta_power(window, s, n)?)?;
    }
    ThetaClassVector::from_rep(acc)
}

/// `Σ c_m P_θ(m)φ`.
pub fn from_theta_coords(window: &Window, coords: &BTreeMap<ThetaMultisegment, RatFunc>) -> Result<ThetaClassVector> {
    let mut rep = WordVector::zero(window);
    for (m, c) in coords {
        rep.add_scaled(ptheta_vector(window, m)?.rep(), c);
    }
    ThetaClassVector::from_rep(rep)
}

/// The bar involution: conjugate the coefficients of a representative.
pub fn bar_theta(v: &ThetaClassVector) -> ThetaClassVector {
    ThetaClassVector { rep: v.rep.bar() }
}

/// `(Ẽ_i v, F̃_i v)` from the decomposition `v = Σ F_i^{(n)} v_n` with
/// `E_i v_n = 0`.
pub fn theta_mod_ops(i: i32, v: &ThetaClassVector) -> Result<(ThetaClassVector, ThetaClassVector)> {
    v.window().check(i)?;
    let top = v
        .rep
        .terms()
        .map(|(w, _)| w.letters().iter().filter(|j| j.abs() == i.abs()).count() as u32)
        .max()
        .unwrap_or(0);
    let lower = |y: &WordVector| {
        let mut r = y.eprime(i);
        r += &y.estar(-i).ad_t(i);
        r
    };
    let parts = freealg::decompose(i, top, &v.rep, lower)?;
    Ok((
        ThetaClassVector { rep: freealg::raise_etilde(i, &parts)? },
        ThetaClassVector { rep: freealg::raise_ftilde(i, &parts)? },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Window {
        Window::symmetric(3).unwrap()
    }

    fn cls(s: &str) -> ThetaClassVector {
        ThetaClassVector::parse(&w(), s).unwrap()
    }

    fn tm(t: &[(i32, i32, u32)]) -> ThetaMultisegment {
        ThetaMultisegment::from_triples(t).unwrap()
    }

    fn coords(v: &ThetaClassVector) -> BTreeMap<ThetaMultisegment, RatFunc> {
        theta_coords(v).unwrap()
    }

    #[test]
    fn f_and_e_actions() {
        let phi = ThetaClassVector::phi(&w()).unwrap();
        assert!(f_op(1, &phi).unwrap().class_eq(&f_op(-1, &phi).unwrap()).unwrap());
        assert!(f_op(1, &cls("f[3]")).unwrap().class_eq(&cls("f[1]f[3]")).unwrap());
        assert!(f_op(3, &phi).unwrap().class_eq(&ptheta_vector(&w(), &tm(&[(3, 3, 1)])).unwrap()).unwrap());
        assert!(e_op(1, &phi).unwrap().is_zero_class().unwrap());
        assert!(e_op(1, &cls("f[1]")).unwrap().class_eq(&phi).unwrap());
        assert!(e_op(1, &cls("f[-1]")).unwrap().class_eq(&phi).unwrap());
        assert!(e_op(3, &cls("f[1]f[3]")).unwrap().class_eq(&cls("q f[1]")).unwrap());
    }

    #[test]
    fn t_action() {
        assert!(t_op(1, &cls("1")).unwrap().class_eq(&cls("1")).unwrap());
        // (α_1 + α_{-1}, α_1) = 2 - 1: the indices -1 and 1 are adjacent.
        assert_eq!(t_op(1, &cls("f[1]")).unwrap().rep(), cls("q^-1 f[1]").rep());
        assert_eq!(t_op(1, &cls("f[3]")).unwrap().rep(), cls("q f[3]").rep());
    }

    #[test]
    fn ptheta_and_coordinates() {
        let m = tm(&[(-1, 1, 1)]);
        let p = ptheta_vector(&w(), &m).unwrap();
        assert_eq!(p.rep(), cls("1/(q + q^-1) (f[-1]f[1] - q f[1]f[-1])").rep());
        assert_eq!(coords(&p), BTreeMap::from([(m, RatFunc::one())]));
        assert_eq!(coords(&cls("f[-1]")), BTreeMap::from([(tm(&[(1, 1, 1)]), RatFunc::one())]));
        let two = RatFunc::from(qfact(2).unwrap());
        assert_eq!(coords(&cls("f[1]f[1]")), BTreeMap::from([(tm(&[(1, 1, 2)]), two)]));
    }

    #[test]
    fn modified_operators() {
        let phi = ThetaClassVector::phi(&w()).unwrap();
        let (e, f) = theta_mod_ops(-1, &phi).unwrap();
        assert!(e.is_zero_class().unwrap());
        assert!(f.class_eq(&ptheta_vector(&w(), &tm(&[(1, 1, 1)])).unwrap()).unwrap());
        let (e, _) = theta_mod_ops(1, &ptheta_vector(&w(), &tm(&[(1, 1, 1)])).unwrap()).unwrap();
        assert!(e.class_eq(&phi).unwrap());
        let (_, f) = theta_mod_ops(-3, &ptheta_vector(&w(), &tm(&[(3, 3, 1)])).unwrap()).unwrap();
        let c = coords(&f);
        for (m, x) in &c {
            let d = if *m == tm(&[(3, 3, 2)]) { x - &RatFunc::one() } else { x.clone() };
            assert!(d.in_q_a0(), "{m}: {x}");
        }
        assert!(c.contains_key(&tm(&[(3, 3, 2)])));
    }

    #[test]
    fn bar_and_pushed_e() {
        let p = ptheta_vector(&w(), &tm(&[(-1, 1, 1)])).unwrap();
        let c = coords(&bar_theta(&p));
        assert_eq!(c[&tm(&[(-1, 1, 1)])], RatFunc::one());
        assert!(c.values().all(RatFunc::in_a));
        let v = cls("f[1]f[-3]f[3] - q f[-1]f[1]f[3]");
        for i in [-3, -1, 1, 3] {
            assert!(e_op(i, &v).unwrap().class_eq(&e_op_pushed(i, &v).unwrap()).unwrap());
        }
    }
}
