//! Modified root operators through the q-boson decomposition
//! `x = Σ_n f_i^{(n)} x_n` with `e x_n = 0`.
//!
//! If `e f_i = q^{-2} f_i e + 1` then `e f_i^{(n)} u = q^{-(n-1)} f_i^{(n-1)} u`
//! whenever `e u = 0`, so `x_N = q^{N(N-1)/2} e^N x` for the top `N`; peeling
//! off `f_i^{(N)} x_N` and descending yields every component.

use super::WordVector;
use crate::error::Result;
use crate::qcoeff::{qfact, RatFunc};

/// `f_i^{(n)} · x`.
pub(crate) fn divided_left(i: i32, n: u32, x: &WordVector) -> Result<WordVector> {
    let mut acc = x.clone();
    for _ in 0..n {
        acc = acc.left_mul_letter(i)?;
    }
    Ok(acc.scale(&(RatFunc::one() / RatFunc::from(qfact(n as i64).unwrap()))))
}

/// The components `x_0, …, x_top` for the lowering operator `lower`.
pub(crate) fn decompose(
    i: i32,
    top: u32,
    x: &WordVector,
    lower: impl Fn(&WordVector) -> WordVector,
) -> Result<Vec<WordVector>> {
    let mut parts = vec![WordVector::zero(x.window()); top as usize + 1];
    let mut rest = x.clone();
    for n in (0..=top).rev() {
        let mut y = rest.clone();
        for _ in 0..n {
            y = lower(&y);
        }
        let n64 = n as i64;
        let part = y.scale(&RatFunc::q_pow((n64 * (n64 - 1) / 2) as i32));
        rest -= &divided_left(i, n, &part)?;
        parts[n as usize] = part;
    }
    Ok(parts)
}

/// `Σ_{n≥1} f_i^{(n−1)} x_n`.
pub(crate) fn raise_etilde(i: i32, parts: &[WordVector]) -> Result<WordVector> {
    let mut out = WordVector::zero(parts[0].window());
    for (n, p) in parts.iter().enumerate().skip(1) {
        out += &divided_left(i, n as u32 - 1, p)?;
    }
    Ok(out)
}

/// `Σ_{n≥0} f_i^{(n+1)} x_n`.
pub(crate) fn raise_ftilde(i: i32, parts: &[WordVector]) -> Result<WordVector> {
    let mut out = WordVector::zero(parts[0].window());
    for (n, p) in parts.iter().enumerate() {
        out += &divided_left(i, n as u32 + 1, p)?;
    }
    Ok(out)
}

fn top_for(i: i32, x: &WordVector) -> u32 {
    x.terms().map(|(w, _)| w.letters().iter().filter(|&&j| j == i).count() as u32).max().unwrap_or(0)
}

/// The modified root operator `ẽ_i` on `U_q^-`.
pub fn mod_etilde(i: i32, x: &WordVector) -> Result<WordVector> {
    let parts = decompose(i, top_for(i, x), x, |y| y.eprime(i))?;
    raise_etilde(i, &parts)
}

/// The modified root operator `f̃_i` on `U_q^-`.
pub fn mod_ftilde(i: i32, x: &WordVector) -> Result<WordVector> {
    x.window().check(i)?;
    let parts = decompose(i, top_for(i, x), x, |y| y.eprime(i))?;
    raise_ftilde(i, &parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{is_zero_in_uq, pbw_coords, pbw_element};
    use crate::mseg::{Multisegment, Window};

    fn v(s: &str) -> WordVector {
        WordVector::parse(&Window::symmetric(3).unwrap(), s).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(mod_ftilde(1, &v("1")).unwrap(), v("f[1]"));
        assert_eq!(mod_etilde(1, &v("f[1]")).unwrap(), v("1"));
        assert_eq!(mod_ftilde(1, &v("f[3]")).unwrap(), v("f[1]f[3]"));
        let x = mod_ftilde(1, &v("f[1]")).unwrap();
        assert!(is_zero_in_uq(&(&x - &v("1/(q + q^-1) f[1]f[1]"))));
    }

    #[test]
    fn etilde_inverts_ftilde() {
        let w = Window::symmetric(3).unwrap();
        let m = Multisegment::from_triples(&[(-1, 1, 1), (3, 3, 1)]).unwrap();
        let p = pbw_element(&w, &m).unwrap();
        for i in [-3, -1, 1, 3] {
            let back = mod_etilde(i, &mod_ftilde(i, &p).unwrap()).unwrap();
            assert!(pbw_coords(&(&back - &p)).unwrap().is_empty());
        }
    }
}
