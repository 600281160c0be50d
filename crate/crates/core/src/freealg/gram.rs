//! The bilinear form on words, `(f_i u, v) = (u, e'_i v)` with `(1,1) = 1`.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock};

use super::cache::BlockCache;
use super::{Word, WordVector};
use crate::linalg::Matrix;
use crate::mseg::{pairing, Content};
use crate::qcoeff::RatFunc;

/// All words of one content together with their Gram matrix.
pub struct WordGram {
    pub words: Vec<Word>,
    pub index: HashMap<Word, usize>,
    pub gram: Matrix,
}

impl WordGram {
    /// Dense coefficient vector of a vector supported on this content.
    pub fn coords_of(&self, x: &WordVector) -> Vec<RatFunc> {
        let mut out = vec![RatFunc::zero(); self.words.len()];
        for (w, c) in x.terms() {
            out[self.index[w]] = c.clone();
        }
        out
    }
}

static WORD_GRAMS: LazyLock<BlockCache<Content, WordGram>> = LazyLock::new(BlockCache::new);

pub fn word_gram(content: &Content) -> Arc<WordGram> {
    WORD_GRAMS.get_or_try_build(content, || Ok(build(content))).expect("infallible")
}

fn build(content: &Content) -> WordGram {
    let words = Word::all_with_content(content);
    let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
    let n = words.len();
    if content.degree() == 0 {
        return WordGram { words, index, gram: Matrix::identity(1) };
    }
    let subs: HashMap<i32, Arc<WordGram>> =
        content.iter().map(|(i, _)| (i, word_gram(&content.without(i).unwrap()))).collect();
    let mut gram = Matrix::zeros(n, n);
    for a in 0..n {
        let u = &words[a];
        let i = u.letters()[0];
        let sub = &subs[&i];
        let ua = sub.index[&Word::new(u.letters()[1..].to_vec())];
        for b in a..n {
            let v = &words[b];
            let mut acc = RatFunc::zero();
            let mut e = 0;
            for (p, &j) in v.letters().iter().enumerate() {
                if j == i {
                    let g = &sub.gram[(ua, sub.index[&v.without(p)])];
                    if !g.is_zero() {
                        acc += &(g * &RatFunc::q_pow(-e));
                    }
                }
                e += pairing(i, j);
            }
            gram[(b, a)] = acc.clone();
            gram[(a, b)] = acc;
        }
    }
    WordGram { words, index, gram }
}

/// The symmetric bilinear form on `U_q^-`; distinct contents are orthogonal.
pub fn form(x: &WordVector, y: &WordVector) -> RatFunc {
    let ys = y.components();
    let mut acc = RatFunc::zero();
    for (content, xc) in x.components() {
        let Some(yc) = ys.get(&content) else { continue };
        let g = word_gram(&content);
        let xv = g.coords_of(&xc);
        let gy = g.gram.mul_vec(&g.coords_of(yc));
        for (a, b) in xv.iter().zip(&gy) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
    }
    acc
}

/// Whether `x` vanishes in `U_q^-`, i.e. lies in the radical of the form on
/// words (the Serre ideal).
pub fn is_zero_in_uq(x: &WordVector) -> bool {
    x.components().iter().all(|(content, xc)| {
        let g = word_gram(content);
        g.gram.mul_vec(&g.coords_of(xc)).iter().all(RatFunc::is_zero)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mseg::Window;

    fn v(s: &str) -> WordVector {
        WordVector::parse(&Window::symmetric(5).unwrap(), s).unwrap()
    }

    #[test]
    fn form_values() {
        assert_eq!(form(&v("1"), &v("1")), RatFunc::one());
        assert_eq!(form(&v("f[1]f[3]"), &v("f[3]f[1]")), RatFunc::q_pow(1));
        assert_eq!(form(&v("f[1]f[1]"), &v("f[1]f[1]")), RatFunc::one() + RatFunc::q_pow(-2));
        assert_eq!(form(&v("f[1]"), &v("f[3]")), RatFunc::zero());
    }

    #[test]
    fn serre_and_commutators() {
        assert!(is_zero_in_uq(&v("f[1]f[1]f[3] - (q + q^-1) f[1]f[3]f[1] + f[3]f[1]f[1]")));
        assert!(is_zero_in_uq(&v("f[1]f[5] - f[5]f[1]")));
        assert!(!is_zero_in_uq(&v("f[1]f[3] - f[3]f[1]")));
    }

    #[test]
    fn adjunction_with_eprime() {
        let x = v("f[1]f[3] + q f[3]f[1] - 2 f[1]f[1]");
        let y = v("f[3] - q^2 f[1]");
        for i in [1, 3] {
            let lhs = form(&x.eprime(i), &y);
            let rhs = form(&x, &y.left_mul_letter(i).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
