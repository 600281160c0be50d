//! `e'_{i,b,b'}`, `f_{i,b,b'}` (type A) and `E_{i,b,b'}`, `F_{i,b,b'}`
//! (θ) from the upper global basis.

use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::{global_lower, global_upper_from, Block, TransitionMatrix};
use crate::error::{Error, Result};
use crate::freealg::WordVector;
use crate::linalg::Matrix;
use crate::mseg::{Multisegment, Window};
use crate::thetamod::{e_op, f_op, ThetaClassVector};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Side {
    /// `e'_i` or `E_i`: lowers the weight.
    E,
    /// `f_i` or `F_i`: raises it.
    F,
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E" | "e" => Ok(Side::E),
            "F" | "f" => Ok(Side::F),
            other => Err(Error::Config(format!("unknown side '{other}' (expected E or F)"))),
        }
    }
}

/// Coefficients `X_{i,b,b'}` of `X G^up(b) = Σ_{b'} X_{i,b,b'} G^up(b')`.
#[derive(Clone, Debug)]
pub struct MultiplicityTable {
    pub index: i32,
    pub side: Side,
    pub source: Block,
    pub target: Option<Block>,
    pub rows: Vec<Multisegment>,
    pub cols: Vec<Multisegment>,
    /// Row `b`, column `b'`.
    pub entries: Matrix,
    /// Entries at `q = 1`.
    pub at_one: Vec<Vec<BigRational>>,
    /// Pairs whose value at `q = 1` is negative.
    pub negative_at_one: Vec<(Multisegment, Multisegment)>,
}

impl MultiplicityTable {
    pub fn to_json(&self) -> serde_json::Value {
        let mut rows = Vec::new();
        for (r, b) in self.rows.iter().enumerate() {
            for (c, b2) in self.cols.iter().enumerate() {
                let x = &self.entries[(r, c)];
                if x.is_zero() {
                    continue;
                }
                rows.push(serde_json::json!({
                    "b": b,
                    "b_prime": b2,
                    "poly": x.to_string(),
                    "at_q1": self.at_one[r][c].to_string(),
                }));
            }
        }
        serde_json::json!({
            "i": self.index,
            "side": self.side,
            "kind": self.source.kind(),
            "source": self.source.to_string(),
            "target": self.target.as_ref().map(|t| t.to_string()),
            "entries": rows,
        })
    }

    pub fn to_text(&self) -> String {
        let op = match (self.side, self.source.kind()) {
            (Side::E, super::BasisKind::TypeA) => "e'",
            (Side::F, super::BasisKind::TypeA) => "f",
            (Side::E, super::BasisKind::Theta) => "E",
            (Side::F, super::BasisKind::Theta) => "F",
        };
        let mut out = format!(
            "{op}_{} from block {} to {}\n",
            self.index,
            self.source,
            self.target.as_ref().map_or_else(|| "(empty)".to_string(), |t| t.to_string())
        );
        for (r, b) in self.rows.iter().enumerate() {
            for (c, b2) in self.cols.iter().enumerate() {
                let x = &self.entries[(r, c)];
                if !x.is_zero() {
                    let one = self.at_one[r][c].to_string();
                    out.push_str(&format!("  b={b}  b'={b2}  {x}  (q=1: {one})\n"));
                }
            }
        }
        out
    }
}

/// The block reached from `block` by the index `i` on the given side.
pub fn target_block(block: &Block, i: i32, side: Side) -> Option<Block> {
    match (block, side) {
        (Block::TypeA(c), Side::E) => c.without(i).map(Block::TypeA),
        (Block::TypeA(c), Side::F) => Some(Block::TypeA(c.with(i))),
        (Block::Theta(s), Side::E) => s.without(i.unsigned_abs()).map(Block::Theta),
        (Block::Theta(s), Side::F) => Some(Block::Theta(s.with(i.unsigned_abs()))),
    }
}

fn joint_window(a: &Block, b: &Block, i: i32) -> Result<Window> {
    let mut idx: Vec<i32> = a.window().indices().to_vec();
    idx.extend_from_slice(b.window().indices());
    idx.push(i);
    if a.kind() == super::BasisKind::Theta {
        idx.push(-i);
    }
    idx.sort_unstable();
    idx.dedup();
    Window::new(idx)
}

fn apply(block: &Block, i: i32, side: Side, v: &WordVector) -> Result<WordVector> {
    match (block.kind(), side) {
        (super::BasisKind::TypeA, Side::E) => Ok(v.eprime(i)),
        (super::BasisKind::TypeA, Side::F) => v.left_mul_letter(i),
        (super::BasisKind::Theta, side) => {
            let c = ThetaClassVector::from_rep(v.clone())?;
            let out = match side {
                Side::E => e_op(i, &c)?,
                Side::F => f_op(i, &c)?,
            };
            Ok(out.rep().clone())
        }
    }
}

/// The adjoint of the side: `f_i` for `e'_i`, `e'_i` for `f_i`, and the
/// same with capitals.
fn adjoint(side: Side) -> Side {
    match side {
        Side::E => Side::F,
        Side::F => Side::E,
    }
}

struct Prepared {
    window: Window,
    target: Block,
    src_low: TransitionMatrix,
    src_up: TransitionMatrix,
    tgt_low: TransitionMatrix,
    tgt_up: TransitionMatrix,
}

fn prepare(block: &Block, i: i32, side: Side) -> Result<Option<Prepared>> {
    let Some(target) = target_block(block, i, side) else { return Ok(None) };
    let window = joint_window(block, &target, i)?;
    let src_low = global_lower(block)?;
    let src_up = global_upper_from(&src_low)?;
    let tgt_low = global_lower(&target)?;
    let tgt_up = global_upper_from(&tgt_low)?;
    Ok(Some(Prepared { window, target, src_low, src_up, tgt_low, tgt_up }))
}

/// Applies the operator to each `G^up(b)` and expands the result in the
/// target's upper global basis.
pub fn multiplicity_direct(block: &Block, i: i32, side: Side) -> Result<Option<Matrix>> {
    let Some(p) = prepare(block, i, side)? else { return Ok(None) };
    direct(block, i, side, &p).map(Some)
}

fn direct(block: &Block, i: i32, side: Side, p: &Prepared) -> Result<Matrix> {
    let n = p.src_up.dim();
    let m = p.tgt_up.dim();
    let mut y = Matrix::zeros(m, n);
    for b in 0..n {
        let v = block.combination(&p.window, &p.src_up.entries.column(b))?;
        let image = apply(block, i, side, &v)?;
        for (r, x) in p.target.coords(&image)?.into_iter().enumerate() {
            y[(r, b)] = x;
        }
    }
    Ok(p.tgt_up.entries.solve(&y)?.transpose())
}

/// Reads `X_{i,b,b'}` as the coefficient of `G^low(b)` in
/// `X^† G^low(b')`, where `X^†` is the adjoint for the bilinear form.
pub fn multiplicity_adjoint(block: &Block, i: i32, side: Side) -> Result<Option<Matrix>> {
    let Some(p) = prepare(block, i, side)? else { return Ok(None) };
    adjoint_route(block, i, side, &p).map(Some)
}

fn adjoint_route(block: &Block, i: i32, side: Side, p: &Prepared) -> Result<Matrix> {
    let n = p.src_low.dim();
    let m = p.tgt_low.dim();
    let mut x = Matrix::zeros(n, m);
    for b2 in 0..m {
        let v = p.target.combination(&p.window, &p.tgt_low.entries.column(b2))?;
        let image = apply(&p.target, i, adjoint(side), &v)?;
        for (r, c) in block.coords(&image)?.into_iter().enumerate() {
            x[(r, b2)] = c;
        }
    }
    p.src_low.entries.solve(&x)
}

/// Both routes, cross-checked, with the specialization at `q = 1`.
/// An empty target gives an empty table.
pub fn multiplicity_polys(block: &Block, i: i32, side: Side) -> Result<MultiplicityTable> {
    let rows = block.labels()?;
    let Some(p) = prepare(block, i, side)? else {
        return Ok(MultiplicityTable {
            index: i,
            side,
            source: block.clone(),
            target: None,
            rows,
            cols: Vec::new(),
            entries: Matrix::zeros(block.dim()?, 0),
            at_one: Vec::new(),
            negative_at_one: Vec::new(),
        });
    };
    let d = direct(block, i, side, &p)?;
    let a = adjoint_route(block, i, side, &p)?;
    if d != a {
        return Err(Error::CrossCheck(format!(
            "multiplicities of index {i} on block {block}: direct {d:?} vs adjoint {a:?}"
        )));
    }
    let cols = p.tgt_low.index.clone();
    let mut at_one = Vec::new();
    let mut negative_at_one = Vec::new();
    for (r, b) in rows.iter().enumerate() {
        let mut row = Vec::new();
        for (c, b2) in cols.iter().enumerate() {
            let x = &d[(r, c)];
            let v = x.eval_at_one().ok_or_else(|| {
                Error::CrossCheck(format!("multiplicity {x} at ({b}, {b2}) has a pole at q = 1"))
            })?;
            if !v.is_integer() {
                return Err(Error::CrossCheck(format!("multiplicity {x} at ({b}, {b2}) is {v} at q = 1")));
            }
            if v.is_negative() {
                negative_at_one.push((b.clone(), b2.clone()));
            }
            row.push(v);
        }
        at_one.push(row);
    }
    Ok(MultiplicityTable {
        index: i,
        side,
        source: block.clone(),
        target: Some(p.target),
        rows,
        cols,
        entries: d,
        at_one,
        negative_at_one,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mseg::{Content, SymContent};

    #[test]
    fn f_from_empty() {
        let t = multiplicity_polys(&Block::TypeA(Content::new()), 1, Side::F).unwrap();
        assert_eq!(t.cols, vec![Multisegment::from_triples(&[(1, 1, 1)]).unwrap()]);
        assert!(t.entries[(0, 0)].is_one());
        let e = multiplicity_polys(&Block::TypeA(Content::from_indices([1])), 1, Side::E).unwrap();
        assert!(e.entries[(0, 0)].is_one());
    }

    #[test]
    fn routes_agree_on_small_blocks() {
        for (block, i) in [
            (Block::TypeA(Content::from_indices([1, 3])), 1),
            (Block::TypeA(Content::from_indices([1, 3])), 3),
            (Block::TypeA(Content::from_indices([1, 1, 3])), 1),
            (Block::Theta(SymContent::from_abs([1])), -1),
            (Block::Theta(SymContent::from_abs([1, 1])), 1),
            (Block::Theta(SymContent::from_abs([1, 3])), -3),
        ] {
            for side in [Side::E, Side::F] {
                let d = multiplicity_direct(&block, i, side).unwrap();
                let a = multiplicity_adjoint(&block, i, side).unwrap();
                assert_eq!(d, a, "{block} i={i} {side:?}");
            }
        }
    }

    #[test]
    fn theta_f_minus_one_from_empty() {
        let t = multiplicity_polys(&Block::Theta(SymContent::from_abs([])), -1, Side::F).unwrap();
        assert_eq!(t.cols.len(), 1);
        assert!(t.at_one[0][0].is_integer());
    }

    #[test]
    fn empty_target() {
        let t = multiplicity_polys(&Block::TypeA(Content::from_indices([3])), 1, Side::E).unwrap();
        assert!(t.target.is_none());
        assert_eq!(t.entries.cols(), 0);
    }
}
