//! Splitting an 𝐀-lattice vector along `L₀ ⊕ q⁻¹L_∞` with the lower
//! global basis.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use super::{bar_matrix, global_lower, Block};
use crate::error::{Error, Result};
use crate::qcoeff::{LaurentPoly, RatFunc};

/// `x = low + high` in PBW coordinates, `low ∈ L₀ ∩ V_𝐀`,
/// `high ∈ q⁻¹L_∞ ∩ V_𝐀`.
#[derive(Clone, Debug, PartialEq)]
pub struct BalancedSplit {
    pub low: Vec<RatFunc>,
    pub high: Vec<RatFunc>,
}

/// Splits `x` (PBW coordinates with entries in 𝐀) and checks both parts
/// land in the advertised lattices.
pub fn balanced_split(block: &Block, x: &[RatFunc]) -> Result<BalancedSplit> {
    let bar = bar_matrix(block)?;
    let c = global_lower(block)?.entries;
    if x.len() != c.rows() {
        return Err(Error::Config(format!("vector of length {} for block of dimension {}", x.len(), c.rows())));
    }
    let mut z_plus = Vec::with_capacity(x.len());
    let mut z_minus = Vec::with_capacity(x.len());
    let as_matrix = crate::linalg::Matrix::from_rows(x.iter().map(|v| vec![v.clone()]).collect());
    let z = c.solve(&as_matrix)?.column(0);
    for (k, zk) in z.iter().enumerate() {
        let p = zk
            .to_laurent()
            .ok_or_else(|| Error::CrossCheck(format!("G-coordinate {k} = {zk} is not in A")))?;
        z_plus.push(RatFunc::from(p.filter_exponents(|e| e >= 0)));
        z_minus.push(RatFunc::from(p.filter_exponents(|e| e < 0)));
    }
    let low = c.mul_vec(&z_plus);
    let high = c.mul_vec(&z_minus);
    if let Some(v) = low.iter().find(|v| !(v.in_a() && v.in_a0())) {
        return Err(Error::CrossCheck(format!("L0 part has coordinate {v} outside A0 ∩ A on block {block}")));
    }
    let high_bar: Vec<RatFunc> = high.iter().map(RatFunc::bar).collect();
    let bar_high = bar.entries.mul_vec(&high_bar);
    if let Some(v) = bar_high.iter().find(|v| !(v.in_a() && v.in_q_a0())) {
        return Err(Error::CrossCheck(format!("q^-1 L_inf part has bar coordinate {v} outside qA0 on block {block}")));
    }
    Ok(BalancedSplit { low, high })
}

/// A vector of `n` Laurent polynomials with small integer coefficients
/// and exponents in `-span..=span`.
pub fn random_a_vector<R: Rng>(rng: &mut R, n: usize, span: i32) -> Vec<RatFunc> {
    (0..n)
        .map(|_| {
            let terms: Vec<(i32, i64)> =
                (-span..=span).map(|e| (e, rng.random_range(-3..=3))).filter(|&(_, c)| c != 0).collect();
            RatFunc::from(LaurentPoly::from_terms(
                terms.into_iter().map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mseg::{Content, SymContent};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn random_vectors_split() {
        let mut rng = StdRng::seed_from_u64(7);
        for block in [
            Block::TypeA(Content::from_indices([1, 3])),
            Block::TypeA(Content::from_indices([-1, 1, 3])),
            Block::Theta(SymContent::from_abs([1, 1])),
            Block::Theta(SymContent::from_abs([1, 3])),
        ] {
            let n = block.dim().unwrap();
            for _ in 0..5 {
                let x = random_a_vector(&mut rng, n, 3);
                let s = balanced_split(&block, &x).unwrap();
                let sum: Vec<RatFunc> = s.low.iter().zip(&s.high).map(|(a, b)| a + b).collect();
                assert_eq!(sum, x);
            }
        }
    }
}
