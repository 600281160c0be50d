use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use super::{e_op, ptheta_vector, theta_block_data, ThetaClassVector};
use crate::error::Result;
use crate::freealg::cache::BlockCache;
use crate::freealg::WordVector;
use crate::linalg::Matrix;
use crate::mseg::{SymContent, Window};
use crate::qcoeff::RatFunc;

/// `(u, v)` determined by `(φ, φ) = 1` and `(u, F_i v) = (E_i u, v)`.
pub fn theta_form(u: &ThetaClassVector, v: &ThetaClassVector) -> Result<RatFunc> {
    pair(u, v.rep())
}

fn pair(u: &ThetaClassVector, v: &WordVector) -> Result<RatFunc> {
    if u.rep().is_zero() {
        return Ok(RatFunc::zero());
    }
    // v = c·1 + Σ_i f_i v_i
    let mut acc = &v.constant_term() * &u.rep().constant_term();
    let mut tails: BTreeMap<i32, WordVector> = BTreeMap::new();
    for (w, c) in v.terms() {
        let Some((&first, rest)) = w.letters().split_first() else { continue };
        let tail = tails.entry(first).or_insert_with(|| WordVector::zero(v.window()));
        *tail += &WordVector::word(v.window(), rest)?.scale(c);
    }
    for (i, tail) in tails {
        acc += &pair(&e_op(i, u)?, &tail)?;
    }
    Ok(acc)
}

static GRAMS: LazyLock<BlockCache<SymContent, Matrix>> = LazyLock::new(BlockCache::new);

/// `(P_θ(m)φ, P_θ(n)φ)` over one block, in the block's basis order.
pub fn theta_gram(sym: &SymContent) -> Result<Arc<Matrix>> {
    GRAMS.get_or_try_build(sym, || {
        let b = theta_block_data(sym)?;
        let idx: Vec<i32> = sym.iter().flat_map(|(k, _)| [k as i32, -(k as i32)]).collect();
        let window = Window::new(idx).unwrap_or_else(|_| Window::symmetric(1).unwrap());
        let vecs: Vec<ThetaClassVector> =
            b.mults.iter().map(|m| ptheta_vector(&window, m)).collect::<Result<_>>()?;
        let n = vecs.len();
        let mut g = Matrix::zeros(n, n);
        for a in 0..n {
            for c in a..n {
                let x = theta_form(&vecs[a], &vecs[c])?;
                g[(c, a)] = x.clone();
                g[(a, c)] = x;
            }
        }
        Ok(g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thetamod::theta_coords_vec;

    fn cls(s: &str) -> ThetaClassVector {
        ThetaClassVector::parse(&Window::symmetric(3).unwrap(), s).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(theta_form(&cls("1"), &cls("1")).unwrap(), RatFunc::one());
        assert_eq!(theta_form(&cls("f[1]"), &cls("f[1]")).unwrap(), RatFunc::one());
        assert_eq!(theta_form(&cls("f[1]"), &cls("f[-1]")).unwrap(), RatFunc::one());
        assert_eq!(theta_form(&cls("f[1]"), &cls("f[3]")).unwrap(), RatFunc::zero());
    }

    #[test]
    fn symmetric_and_consistent_with_coordinates() {
        let u = cls("f[1]f[-3]f[1] - q f[3]f[1]f[1]");
        let v = cls("f[-1]f[1]f[3] + 2 f[1]f[3]f[-1]");
        assert_eq!(theta_form(&u, &v).unwrap(), theta_form(&v, &u).unwrap());

        let sym = SymContent::from_abs([1, 1, 3]);
        let g = theta_gram(&sym).unwrap();
        let cu = theta_coords_vec(&sym, &u).unwrap();
        let cv = theta_coords_vec(&sym, &v).unwrap();
        let gv = g.mul_vec(&cv);
        let mut acc = RatFunc::zero();
        for (a, b) in cu.iter().zip(&gv) {
            acc += &(a * b);
        }
        assert_eq!(acc, theta_form(&u, &v).unwrap());
    }
}
