//! PBW elements `P(m)` and coordinates with respect to them.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use super::cache::BlockCache;
use super::gram::word_gram;
use super::WordVector;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::mseg::{cmp_pbw, multisegments_of_content, Content, Multisegment, Segment, Window};
use crate::qcoeff::{qfact, RatFunc};

/// The root vector `⟨i,j⟩ = ⟨i,j−2⟩⟨j,j⟩ − q⟨j,j⟩⟨i,j−2⟩`, `⟨i,i⟩ = f_i`.
pub fn pbw_segment(window: &Window, s: Segment) -> Result<WordVector> {
    let mut acc = WordVector::letter(window, s.i())?;
    let mut j = s.i() + 2;
    while j <= s.j() {
        let left = acc.right_mul_letter(j)?;
        let right = acc.left_mul_letter(j)?.scale(&-RatFunc::q_pow(1));
        acc = &left + &right;
        j += 2;
    }
    Ok(acc)
}

pub(crate) fn power(x: &WordVector, n: u32) -> WordVector {
    let mut acc = WordVector::one(x.window());
    for _ in 0..n {
        acc = acc.mul(x).expect("same window");
    }
    acc
}

/// `P(m)`: the product of divided powers `⟨i,j⟩^{(m_ij)}`, segments taken
/// from largest to smallest in the PBW order.
pub fn pbw_element(window: &Window, m: &Multisegment) -> Result<WordVector> {
    let mut segs: Vec<(Segment, u32)> = m.iter().collect();
    segs.sort_by(|a, b| cmp_pbw(&b.0, &a.0));
    let mut acc = WordVector::one(window);
    for (s, n) in segs {
        let root = pbw_segment(window, s)?;
        let div = RatFunc::one() / RatFunc::from(qfact(n as i64).unwrap());
        acc = acc.mul(&power(&root, n).scale(&div))?;
    }
    Ok(acc)
}

/// One weight space of `U_q^-` with its PBW basis.
pub struct UBlock {
    pub content: Content,
    /// Basis labels, in decreasing crystal order.
    pub mults: Vec<Multisegment>,
    /// Word coordinates of `P(m)`, one column per label (words indexed as in
    /// [`word_gram`]).
    pub pbw: Matrix,
    /// `(P(m), P(n))`.
    pub pbw_gram: Matrix,
    /// Word coordinates to PBW coordinates.
    pub proj: Matrix,
}

impl UBlock {
    pub fn dim(&self) -> usize {
        self.mults.len()
    }

    pub fn position(&self, m: &Multisegment) -> Option<usize> {
        self.mults.iter().position(|x| x == m)
    }

    /// PBW coordinates of a vector supported on this content.
    pub fn coords_vec(&self, x: &WordVector) -> Vec<RatFunc> {
        let g = word_gram(&self.content);
        self.proj.mul_vec(&g.coords_of(x))
    }

    /// `Σ c_m P(m)` as a word vector.
    pub fn vector_from(&self, window: &Window, c: &[RatFunc]) -> WordVector {
        let g = word_gram(&self.content);
        let coeffs = self.pbw.mul_vec(c);
        WordVector::from_terms(window, g.words.iter().cloned().zip(coeffs))
    }
}

static BLOCKS: LazyLock<BlockCache<Content, UBlock>> = LazyLock::new(BlockCache::new);

/// The PBW data of one content, built on first use.
pub fn ublock(content: &Content) -> Result<Arc<UBlock>> {
    BLOCKS.get_or_try_build(content, || build(content))
}

fn build(content: &Content) -> Result<UBlock> {
    let g = word_gram(content);
    let window = Window::new(content.iter().map(|(i, _)| i)).unwrap_or_else(|_| Window::new([1]).unwrap());
    let mults = multisegments_of_content(content);
    let n = mults.len();
    let mut pbw = Matrix::zeros(g.words.len(), n);
    for (c, m) in mults.iter().enumerate() {
        let p = pbw_element(&window, m)?;
        for (w, x) in p.terms() {
            pbw[(g.index[w], c)] = x.clone();
        }
    }
    let gp = &g.gram * &pbw;
    let pbw_gram = &pbw.transpose() * &gp;
    let proj = pbw_gram
        .solve(&gp.transpose())
        .map_err(|e| Error::Singular(format!("PBW Gram matrix of content {content}: {e}")))?;
    Ok(UBlock { content: content.clone(), mults, pbw, pbw_gram, proj })
}

/// Coordinates of `x` in the PBW basis, modulo the Serre relations.
pub fn pbw_coords(x: &WordVector) -> Result<BTreeMap<Multisegment, RatFunc>> {
    let mut out = BTreeMap::new();
    for (content, xc) in x.components() {
        let b = ublock(&content)?;
        for (m, c) in b.mults.iter().zip(b.coords_vec(&xc)) {
            if !c.is_zero() {
                out.insert(m.clone(), c);
            }
        }
    }
    Ok(out)
}

/// `Σ c_m P(m)`.
pub fn from_pbw_coords(window: &Window, coords: &BTreeMap<Multisegment, RatFunc>) -> Result<WordVector> {
    let mut out = WordVector::zero(window);
    for (m, c) in coords {
        m.check_within(window)?;
        out.add_scaled(&pbw_element(window, m)?, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::is_zero_in_uq;

    fn w() -> Window {
        Window::symmetric(3).unwrap()
    }

    fn v(s: &str) -> WordVector {
        WordVector::parse(&w(), s).unwrap()
    }

    fn ms(t: &[(i32, i32, u32)]) -> Multisegment {
        Multisegment::from_triples(t).unwrap()
    }

    #[test]
    fn root_vectors() {
        let seg = |i, j| pbw_segment(&w(), Segment::new(i, j).unwrap()).unwrap();
        assert_eq!(seg(1, 1), v("f[1]"));
        assert_eq!(seg(1, 3), v("f[1]f[3] - q f[3]f[1]"));
        assert_eq!(seg(-1, 3), v("(f[-1]f[1] - q f[1]f[-1])f[3] - q f[3](f[-1]f[1] - q f[1]f[-1])"));
        assert!(pbw_segment(&Window::symmetric(1).unwrap(), Segment::new(1, 3).unwrap()).is_err());
    }

    #[test]
    fn pbw_elements() {
        assert_eq!(pbw_element(&w(), &Multisegment::empty()).unwrap(), v("1"));
        assert_eq!(pbw_element(&w(), &ms(&[(1, 1, 1), (3, 3, 1)])).unwrap(), v("f[3]f[1]"));
        assert_eq!(pbw_element(&w(), &ms(&[(1, 1, 2)])).unwrap(), v("1/(q + q^-1) f[1]f[1]"));
    }

    #[test]
    fn coordinates() {
        let m = ms(&[(-1, 3, 1), (1, 1, 1)]);
        let p = pbw_element(&w(), &m).unwrap();
        assert_eq!(pbw_coords(&p).unwrap(), BTreeMap::from([(m, RatFunc::one())]));

        let c = pbw_coords(&v("f[1]f[3]")).unwrap();
        let expect = BTreeMap::from([(ms(&[(1, 3, 1)]), RatFunc::one()), (ms(&[(1, 1, 1), (3, 3, 1)]), RatFunc::q_pow(1))]);
        assert_eq!(c, expect);

        let serre = v("f[1]f[1]f[3] - (q + q^-1) f[1]f[3]f[1] + f[3]f[1]f[1]");
        assert!(pbw_coords(&serre).unwrap().is_empty());

        let x = v("f[3]f[1]f[-1]f[1] - 2 q f[1]f[1]f[3]f[-1]");
        let back = from_pbw_coords(&w(), &pbw_coords(&x).unwrap()).unwrap();
        assert!(is_zero_in_uq(&(&x - &back)));
    }
}
