//! Bar matrices, lower and upper global bases, and multiplicity
//! polynomials, block by block.
//!
//! All matrices are indexed by the block's basis labels in decreasing
//! crystal order, so "lower" in the crystal order means a larger index.

mod balanced;
mod multiplicity;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{ublock, WordVector};
use crate::linalg::Matrix;
use crate::mseg::{contents_up_to, Content, Multisegment, SymContent, Window};
use crate::theta::sym_contents_up_to;
use crate::qcoeff::RatFunc;
use crate::thetamod::{ptheta_vector, theta_block_data, theta_gram, ThetaClassVector};

pub use balanced::{balanced_split, random_a_vector, BalancedSplit};
pub use multiplicity::{
    multiplicity_adjoint, multiplicity_direct, multiplicity_polys, target_block, MultiplicityTable, Side,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    /// `U_q^-` with the PBW basis `P(m)`.
    TypeA,
    /// `V_θ(0)` with the basis `P_θ(m)φ`.
    Theta,
}

/// A weight block: a content of `U_q^-` or a symmetrized content of `V_θ(0)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Block {
    TypeA(Content),
    Theta(SymContent),
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::TypeA(c) => write!(f, "{c}"),
            Block::Theta(s) => write!(f, "{s}"),
        }
    }
}

impl Block {
    pub fn kind(&self) -> BasisKind {
        match self {
            Block::TypeA(_) => BasisKind::TypeA,
            Block::Theta(_) => BasisKind::Theta,
        }
    }

    /// Every block inside `window` of degree `≤ max_degree`, by degree.
    pub fn all_up_to(kind: BasisKind, window: &Window, max_degree: u32) -> Result<Vec<Block>> {
        Ok(match kind {
            BasisKind::TypeA => contents_up_to(window, max_degree).into_iter().map(Block::TypeA).collect(),
            BasisKind::Theta => sym_contents_up_to(window, max_degree)?.into_iter().map(Block::Theta).collect(),
        })
    }

    /// The block containing `m`.
    pub fn of(kind: BasisKind, m: &Multisegment) -> Self {
        match kind {
            BasisKind::TypeA => Block::TypeA(m.content()),
            BasisKind::Theta => Block::Theta(m.content().symmetrized()),
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            Block::TypeA(c) => c.degree(),
            Block::Theta(s) => s.degree(),
        }
    }

    /// The smallest window on which every vector of the block lives.
    pub fn window(&self) -> Window {
        let idx: Vec<i32> = match self {
            Block::TypeA(c) => c.iter().map(|(i, _)| i).collect(),
            Block::Theta(s) => s.iter().flat_map(|(k, _)| [k as i32, -(k as i32)]).collect(),
        };
        Window::new(idx).unwrap_or_else(|_| Window::symmetric(1).unwrap())
    }

    pub fn labels(&self) -> Result<Vec<Multisegment>> {
        Ok(match self {
            Block::TypeA(c) => ublock(c)?.mults.clone(),
            Block::Theta(s) => theta_block_data(s)?.mults.iter().map(|m| m.as_multisegment().clone()).collect(),
        })
    }

    pub fn dim(&self) -> Result<usize> {
        Ok(match self {
            Block::TypeA(c) => ublock(c)?.dim(),
            Block::Theta(s) => theta_block_data(s)?.dim(),
        })
    }

    /// Representative of the `k`-th basis vector on `window`.
    pub fn basis_vector(&self, window: &Window, k: usize) -> Result<WordVector> {
        match self {
            Block::TypeA(c) => {
                let b = ublock(c)?;
                let mut e = vec![RatFunc::zero(); b.dim()];
                e[k] = RatFunc::one();
                Ok(b.vector_from(window, &e))
            }
            Block::Theta(s) => {
                let b = theta_block_data(s)?;
                Ok(ptheta_vector(window, &b.mults[k])?.rep().clone())
            }
        }
    }

    /// `Σ c_k · (basis vector k)`.
    pub fn combination(&self, window: &Window, c: &[RatFunc]) -> Result<WordVector> {
        let mut out = WordVector::zero(window);
        for (k, x) in c.iter().enumerate() {
            if !x.is_zero() {
                out += &self.basis_vector(window, k)?.scale(x);
            }
        }
        Ok(out)
    }

    /// Coordinates of a representative supported on this block.
    pub fn coords(&self, rep: &WordVector) -> Result<Vec<RatFunc>> {
        match self {
            Block::TypeA(c) => {
                let b = ublock(c)?;
                if let Some(other) = rep.components().keys().find(|k| *k != c) {
                    return Err(Error::Inhomogeneous(format!("content {other} in block {c}")));
                }
                Ok(rep.components().get(c).map_or_else(|| vec![RatFunc::zero(); b.dim()], |p| b.coords_vec(p)))
            }
            Block::Theta(s) => {
                let v = ThetaClassVector::from_rep(rep.clone())?;
                crate::thetamod::theta_coords_vec(s, &v)
            }
        }
    }

    /// Gram matrix of the basis under the block's bilinear form.
    pub fn gram(&self) -> Result<Arc<Matrix>> {
        match self {
            Block::TypeA(c) => Ok(Arc::new(ublock(c)?.pbw_gram.clone())),
            Block::Theta(s) => theta_gram(s),
        }
    }
}

/// A square matrix over ℚ(q) indexed by the labels of one block.
#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    pub block: Block,
    pub index: Vec<Multisegment>,
    pub entries: Matrix,
}

impl TransitionMatrix {
    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn get(&self, row: &Multisegment, col: &Multisegment) -> Option<&RatFunc> {
        let r = self.index.iter().position(|m| m == row)?;
        let c = self.index.iter().position(|m| m == col)?;
        Some(&self.entries[(r, c)])
    }

    /// JSON document: block label, index, and rows of canonical strings.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> =
            (0..self.dim()).map(|r| self.entries.row(r).iter().map(|x| x.to_string()).collect()).collect();
        serde_json::json!({
            "kind": self.block.kind(),
            "block": self.block.to_string(),
            "index": self.index,
            "entries": rows,
        })
    }

    /// Aligned text table with one row per label.
    pub fn to_text(&self) -> String {
        let mut cells: Vec<Vec<String>> = vec![std::iter::once(String::new())
            .chain(self.index.iter().map(|m| m.to_string()))
            .collect()];
        for (r, m) in self.index.iter().enumerate() {
            let mut row = vec![m.to_string()];
            row.extend(self.entries.row(r).iter().map(|x| x.to_string()));
            cells.push(row);
        }
        let ncols = cells[0].len();
        let widths: Vec<usize> =
            (0..ncols).map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = format!("block {}\n", self.block);
        for row in cells {
            let line: Vec<String> =
                row.iter().zip(&widths).map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count()))).collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

fn check_lower_unitriangular(block: &Block, m: &Matrix, what: &str) -> Result<()> {
    if m.is_unitriangular(false) {
        Ok(())
    } else {
        Err(Error::Triangularity(format!("{what} of block {block} is not unitriangular")))
    }
}

/// `B` with `bar(P(n)) = Σ_m B_{mn} P(m)`; asserted unitriangular with 𝐀
/// entries.
pub fn bar_matrix(block: &Block) -> Result<TransitionMatrix> {
    let index = block.labels()?;
    let window = block.window();
    let n = index.len();
    let mut b = Matrix::zeros(n, n);
    for c in 0..n {
        let col = block.coords(&block.basis_vector(&window, c)?.bar())?;
        for (r, x) in col.into_iter().enumerate() {
            b[(r, c)] = x;
        }
    }
    check_lower_unitriangular(block, &b, "bar matrix")?;
    if let Some(((r, c), x)) = b.entries().find(|(_, x)| !x.in_a()) {
        return Err(Error::Triangularity(format!("bar matrix entry ({}, {}) = {x} is not in A", index[r], index[c])));
    }
    Ok(TransitionMatrix { block: block.clone(), index, entries: b })
}

/// Order in which the entries of the lower global basis are solved.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SolveOrder {
    #[default]
    ColumnMajor,
    RowMajor,
}

/// Splits `ρ` with `bar(ρ) = −ρ` as `c − bar(c)`, `c ∈ qℚ[q]`.
fn positive_part(rho: &RatFunc, block: &Block) -> Result<RatFunc> {
    let fail = || Error::Triangularity(format!("no solution of c - bar(c) = {rho} with c in qQ[q] (block {block})"));
    let p = rho.to_laurent().ok_or_else(fail)?;
    if p.coeff(0) != num_traits::Zero::zero() || rho.bar() != -rho {
        return Err(fail());
    }
    Ok(RatFunc::from(p.filter_exponents(|e| e > 0)))
}

/// `C` from the bar matrix: unitriangular, off-diagonal entries in `qℚ[q]`,
/// with `B · bar(C) = C`.
pub fn solve_lower(bar: &TransitionMatrix, order: SolveOrder) -> Result<Matrix> {
    let n = bar.dim();
    let b = &bar.entries;
    let mut c = Matrix::identity(n);
    let solve = |c: &mut Matrix, r: usize, col: usize| -> Result<()> {
        let mut rho = RatFunc::zero();
        for k in col..r {
            let bk = &b[(r, k)];
            if !bk.is_zero() && !c[(k, col)].is_zero() {
                rho += &(bk * &c[(k, col)].bar());
            }
        }
        c[(r, col)] = positive_part(&rho, &bar.block)?;
        Ok(())
    };
    match order {
        SolveOrder::ColumnMajor => {
            for col in 0..n {
                for r in col + 1..n {
                    solve(&mut c, r, col)?;
                }
            }
        }
        SolveOrder::RowMajor => {
            for r in 0..n {
                for col in (0..r).rev() {
                    solve(&mut c, r, col)?;
                }
            }
        }
    }
    Ok(c)
}

/// Lower global basis: `G(m) = Σ_n C_{nm} P(n)`.
pub fn global_lower(block: &Block) -> Result<TransitionMatrix> {
    let bar = bar_matrix(block)?;
    let c = solve_lower(&bar, SolveOrder::ColumnMajor)?;
    if &bar.entries * &c.bar() != c {
        return Err(Error::CrossCheck(format!("global basis of block {block} is not bar-invariant")));
    }
    Ok(TransitionMatrix { block: block.clone(), index: bar.index, entries: c })
}

/// Upper global basis: `G^up(b) = Σ_n U_{nb} P(n)` with
/// `(G^up(b), G^low(b')) = δ`, i.e. `U = Γ^{-1} C^{-T}`.
pub fn global_upper(block: &Block) -> Result<TransitionMatrix> {
    let lower = global_lower(block)?;
    global_upper_from(&lower)
}

pub(crate) fn global_upper_from(lower: &TransitionMatrix) -> Result<TransitionMatrix> {
    let gram = lower.block.gram()?;
    let c_inv_t = lower.entries.inverse()?.transpose();
    let u = gram.solve(&c_inv_t)?;
    let dual = &(&u.transpose() * &gram) * &lower.entries;
    if !dual.is_identity() {
        return Err(Error::CrossCheck(format!("upper basis of block {} is not dual to the lower basis", lower.block)));
    }
    Ok(TransitionMatrix { block: lower.block.clone(), index: lower.index.clone(), entries: u })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::form;

    fn ms(t: &[(i32, i32, u32)]) -> Multisegment {
        Multisegment::from_triples(t).unwrap()
    }

    #[test]
    fn type_a_content_1_3() {
        let block = Block::TypeA(Content::from_indices([1, 3]));
        let bar = bar_matrix(&block).unwrap();
        assert_eq!(bar.index, vec![ms(&[(1, 3, 1)]), ms(&[(1, 1, 1), (3, 3, 1)])]);
        // bar(f1 f3 - q f3 f1) = (f1 f3 - q f3 f1) + (q - q^-1) f3 f1, and P(<1>+<3>) = f3 f1.
        assert_eq!(bar.entries[(1, 0)], RatFunc::q_pow(1) - RatFunc::q_pow(-1));
        let g = global_lower(&block).unwrap();
        assert_eq!(g.entries[(1, 0)], RatFunc::q_pow(1));
        // G(<1,3>) = P(<1,3>) + q P(<1>+<3>) = f1 f3, visibly bar-invariant.
        let w = block.window();
        let v = block.combination(&w, &g.entries.column(0)).unwrap();
        assert_eq!(v, WordVector::parse(&w, "f[1]f[3]").unwrap());

        let up = global_upper(&block).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let x = block.combination(&w, &up.entries.column(a)).unwrap();
                let y = block.combination(&w, &g.entries.column(b)).unwrap();
                let expect = if a == b { RatFunc::one() } else { RatFunc::zero() };
                assert_eq!(form(&x, &y), expect);
            }
        }
    }

    #[test]
    fn singleton_blocks_are_identity() {
        let block = Block::TypeA(Content::from_indices([3]));
        assert!(bar_matrix(&block).unwrap().entries.is_identity());
        assert!(global_lower(&block).unwrap().entries.is_identity());
        let t = Block::Theta(SymContent::from_abs([1]));
        assert!(global_lower(&t).unwrap().entries.is_identity());
        assert!(global_upper(&t).unwrap().entries.is_identity());
    }

    #[test]
    fn theta_block_two_by_two() {
        let block = Block::Theta(SymContent::from_abs([1, 1]));
        let bar = bar_matrix(&block).unwrap();
        assert_eq!(bar.index, vec![ms(&[(-1, 1, 1)]), ms(&[(1, 1, 2)])]);
        let g = global_lower(&block).unwrap();
        // Brute force: G = P(<-1,1>) + c P(2<1>) with c in qQ[q] bar-fixed.
        let b = &bar.entries;
        let c = &g.entries[(1, 0)];
        assert_eq!(&(b[(1, 0)].clone()) + &(&b[(1, 1)] * &c.bar()), c.clone());
        assert!(c.in_q_zq());
    }

    #[test]
    fn solve_order_does_not_matter() {
        let block = Block::TypeA(Content::from_indices([-1, 1, 1, 3]));
        let bar = bar_matrix(&block).unwrap();
        assert_eq!(solve_lower(&bar, SolveOrder::ColumnMajor).unwrap(), solve_lower(&bar, SolveOrder::RowMajor).unwrap());
    }
}
