use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use super::{ptheta_vector, ThetaClassVector};
use crate::error::{Error, Result};
use crate::freealg::cache::BlockCache;
use crate::freealg::{ublock, word_gram, UBlock, WordVector};
use crate::linalg::Matrix;
use crate::mseg::{Content, SymContent, Window};
use crate::qcoeff::RatFunc;
use crate::theta::{theta_block, ThetaMultisegment};

/// One graded piece of `V_θ(0)`: all contents `β` with `|β| = σ`, the
/// ideal `Σ U_q^-(f_k − f_{−k})` inside their sum, and the basis
/// `P_θ(m)φ`.
pub struct ThetaBlock {
    pub sym: SymContent,
    /// Basis labels in decreasing crystal order.
    pub mults: Vec<ThetaMultisegment>,
    pub lifts: Vec<Content>,
    /// Sum of the dimensions of the `U_q^-` weight spaces over all lifts.
    pub ambient_dim: usize,
    pub ideal_rank: usize,
    /// Per lift, word coordinates to `P_θ` coordinates.
    word_maps: BTreeMap<Content, Matrix>,
}

impl ThetaBlock {
    pub fn dim(&self) -> usize {
        self.mults.len()
    }

    pub fn position(&self, m: &ThetaMultisegment) -> Option<usize> {
        self.mults.iter().position(|x| x == m)
    }

    /// `P_θ` coordinates of a representative supported on this block.
    pub fn coords_vec(&self, rep: &WordVector) -> Vec<RatFunc> {
        let mut out = vec![RatFunc::zero(); self.dim()];
        for (content, part) in rep.components() {
            let map = &self.word_maps[&content];
            let g = word_gram(&content);
            for (acc, x) in out.iter_mut().zip(map.mul_vec(&g.coords_of(&part))) {
                *acc += &x;
            }
        }
        out
    }
}

fn sym_window(sym: &SymContent) -> Window {
    let idx: Vec<i32> = sym.iter().flat_map(|(k, _)| [k as i32, -(k as i32)]).collect();
    Window::new(idx).unwrap_or_else(|_| Window::symmetric(1).unwrap())
}

static BLOCKS: LazyLock<BlockCache<SymContent, ThetaBlock>> = LazyLock::new(BlockCache::new);

pub fn theta_block_data(sym: &SymContent) -> Result<Arc<ThetaBlock>> {
    BLOCKS.get_or_try_build(sym, || build(sym))
}

fn build(sym: &SymContent) -> Result<ThetaBlock> {
    let window = sym_window(sym);
    let lifts = sym.lifts();
    let ublocks: Vec<Arc<UBlock>> = lifts.iter().map(ublock).collect::<Result<_>>()?;
    let mut offsets = BTreeMap::new();
    let mut d = 0;
    for (c, b) in lifts.iter().zip(&ublocks) {
        offsets.insert(c.clone(), d);
        d += b.dim();
    }
    let ambient = |rep: &WordVector| -> Result<Vec<RatFunc>> {
        let mut v = vec![RatFunc::zero(); d];
        for (content, part) in rep.components() {
            let off = offsets[&content];
            for (k, x) in ublock(&content)?.coords_vec(&part).into_iter().enumerate() {
                v[off + k] = x;
            }
        }
        Ok(v)
    };

    // Generators P(m')(f_k − f_{−k}) of the ideal.
    let mut gens: Vec<Vec<RatFunc>> = Vec::new();
    for (k, _) in sym.iter() {
        let k = k as i32;
        let lower = sym.without(k as u32).unwrap();
        for base in lower.lifts() {
            let b = ublock(&base)?;
            for idx in 0..b.dim() {
                let mut e = vec![RatFunc::zero(); b.dim()];
                e[idx] = RatFunc::one();
                let p = b.vector_from(&window, &e);
                let g = &p.right_mul_letter(k)? - &p.right_mul_letter(-k)?;
                gens.push(ambient(&g)?);
            }
        }
    }
    let mut ideal = Matrix::from_rows(gens);
    if ideal.rows() == 0 {
        ideal = Matrix::zeros(0, d);
    }
    let pivots = ideal.rref_in_place();
    let r = pivots.len();
    let mults = theta_block(sym);
    let n = mults.len();
    if d - r != n {
        return Err(Error::DimensionMismatch { block: sym.to_string(), quotient: d - r, expected: n });
    }
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();

    // Reduction modulo the ideal, read on the free columns: an f × d matrix.
    let mut red = Matrix::zeros(free.len(), d);
    for (a, &c) in free.iter().enumerate() {
        red[(a, c)] = RatFunc::one();
    }
    for (p, &pc) in pivots.iter().enumerate() {
        for (a, &c) in free.iter().enumerate() {
            let x = &ideal[(p, c)];
            if !x.is_zero() {
                red[(a, pc)] = -x;
            }
        }
    }

    // Images of the basis: column m holds red(P_θ(m)).
    let mut s = Matrix::zeros(free.len(), n);
    for (col, m) in mults.iter().enumerate() {
        let img = red.mul_vec(&ambient(ptheta_vector(&window, m)?.rep())?);
        for (a, x) in img.into_iter().enumerate() {
            s[(a, col)] = x;
        }
    }
    let theta = s
        .solve(&red)
        .map_err(|e| Error::Singular(format!("P_theta images in block {sym}: {e}")))?;

    let mut word_maps = BTreeMap::new();
    for (c, b) in lifts.iter().zip(&ublocks) {
        let off = offsets[c];
        let slice = Matrix::from_fn(n, b.dim(), |r, k| theta[(r, off + k)].clone());
        word_maps.insert(c.clone(), &slice * &b.proj);
    }
    Ok(ThetaBlock { sym: sym.clone(), mults, lifts, ambient_dim: d, ideal_rank: r, word_maps })
}

/// Coordinates of a class in the basis `P_θ(m)φ`.
pub fn theta_coords(v: &ThetaClassVector) -> Result<BTreeMap<ThetaMultisegment, RatFunc>> {
    let mut out = BTreeMap::new();
    for (sym, part) in v.components() {
        let b = theta_block_data(&sym)?;
        for (m, c) in b.mults.iter().zip(b.coords_vec(&part)) {
            if !c.is_zero() {
                out.insert(m.clone(), c);
            }
        }
    }
    Ok(out)
}

/// Dense coordinates of a class homogeneous of symmetrized content `sym`.
pub fn theta_coords_vec(sym: &SymContent, v: &ThetaClassVector) -> Result<Vec<RatFunc>> {
    let b = theta_block_data(sym)?;
    let comps = v.components();
    if comps.keys().any(|k| k != sym) {
        return Err(Error::Inhomogeneous(format!("{v} is not of symmetrized content {sym}")));
    }
    Ok(comps.get(sym).map_or_else(|| vec![RatFunc::zero(); b.dim()], |p| b.coords_vec(p)))
}
