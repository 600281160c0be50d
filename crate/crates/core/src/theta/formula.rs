//! Closed formulas for `ε_{−k}`, `Ẽ_{−k}`, `F̃_{−k}` (`k > 0`).

use super::{check_positive, ThetaMultisegment, ThetaTriple};
use crate::mseg::Multisegment;

/// Positions of the `A_ℓ` values, listed from largest to smallest in the
/// selection order `⋯ > k+2 > k > −k+2 > −k+4 > ⋯ > k−2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Pos {
    Above(i32),
    K,
    Inner(i32),
}

fn a_values(k: i32, m: &Multisegment) -> Vec<(Pos, i64)> {
    let mm = |i: i32, j: i32| m.m(i, j) as i64;
    let top = m
        .iter()
        .filter(|(s, _)| s.i() == -k || s.i() == -k + 2)
        .map(|(s, _)| s.j())
        .max()
        .unwrap_or(k)
        .max(k)
        + 2;

    let mut above = Vec::new();
    let mut acc = 0;
    let mut l = top;
    while l > k {
        acc += mm(-k, l) - mm(-k + 2, l + 2);
        above.push((Pos::Above(l), acc));
        l -= 2;
    }

    let tail: i64 = ((k + 2)..=top).step_by(2).map(|l| mm(-k, l) - mm(-k + 2, l)).sum();
    let base = tail + 2 * mm(-k, k);
    let odd = mm(-k + 2, k) % 2;
    let mut out = above;
    out.push((Pos::K, base + odd));

    let inner_base = base - if k > 1 { 2 * mm(-k + 2, k - 2) } else { 0 };
    let mut j = -k + 2;
    while j <= k - 2 {
        let plus: i64 = ((-k + 4)..=(j + 2)).step_by(2).map(|i| mm(i, k)).sum();
        let minus: i64 = ((-k + 4)..=j).step_by(2).map(|i| mm(i, k - 2)).sum();
        out.push((Pos::Inner(j), inner_base + plus - minus));
        j += 2;
    }
    out
}

fn max_a(a: &[(Pos, i64)]) -> i64 {
    a.iter().map(|&(_, v)| v).max().unwrap_or(0).max(0)
}

pub fn theta_epsilon(k: i32, m: &ThetaMultisegment) -> u32 {
    check_positive(k);
    max_a(&a_values(k, m)) as u32
}

pub fn theta_ftilde(k: i32, m: &ThetaMultisegment) -> ThetaMultisegment {
    check_positive(k);
    let a = a_values(k, m);
    let eps = max_a(&a);
    let nf = a.iter().rev().find(|&&(_, v)| v == eps).map(|&(p, _)| p).unwrap();
    let mut out = m.as_multisegment().clone();
    match nf {
        Pos::Above(l) => {
            out.remove_interval(-k + 2, l);
            out.add_interval(-k, l);
        }
        Pos::K if m.m(-k + 2, k) % 2 == 1 => {
            out.remove_interval(-k + 2, k);
            out.add_interval(-k, k);
        }
        Pos::K => {
            if k != 1 {
                out.remove_interval(-k + 2, k - 2);
            }
            out.add_interval(-k + 2, k);
        }
        Pos::Inner(n) => {
            if n != k - 2 {
                out.remove_interval(n + 2, k - 2);
            }
            out.add_interval(n + 2, k);
        }
    }
    ThetaMultisegment::wrap(out)
}

pub fn theta_etilde(k: i32, m: &ThetaMultisegment) -> Option<ThetaMultisegment> {
    check_positive(k);
    let a = a_values(k, m);
    let eps = max_a(&a);
    if eps == 0 {
        return None;
    }
    let ne = a.iter().find(|&&(_, v)| v == eps).map(|&(p, _)| p).unwrap();
    let mut out = m.as_multisegment().clone();
    match ne {
        Pos::Above(l) => {
            out.remove_interval(-k, l);
            out.add_interval(-k + 2, l);
        }
        Pos::K if m.m(-k + 2, k).is_multiple_of(2) => {
            out.remove_interval(-k, k);
            out.add_interval(-k + 2, k);
        }
        Pos::K => {
            out.remove_interval(-k + 2, k);
            if k != 1 {
                out.add_interval(-k + 2, k - 2);
            }
        }
        Pos::Inner(n) => {
            out.remove_interval(n + 2, k);
            if n != k - 2 {
                out.add_interval(n + 2, k - 2);
            }
        }
    }
    Some(ThetaMultisegment::wrap(out))
}

pub fn theta_formula_ops(k: i32, m: &ThetaMultisegment) -> ThetaTriple {
    ThetaTriple { epsilon: theta_epsilon(k, m), etilde: theta_etilde(k, m), ftilde: theta_ftilde(k, m) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tm(t: &[(i32, i32, u32)]) -> ThetaMultisegment {
        ThetaMultisegment::from_triples(t).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(theta_epsilon(1, &tm(&[])), 0);
        assert_eq!(theta_epsilon(1, &tm(&[(1, 1, 1)])), 1);
        assert_eq!(theta_epsilon(3, &tm(&[(3, 3, 1)])), 1);
        assert_eq!(theta_ftilde(1, &tm(&[])), tm(&[(1, 1, 1)]));
        assert_eq!(theta_ftilde(1, &tm(&[(1, 1, 1)])), tm(&[(-1, 1, 1)]));
        assert_eq!(theta_ftilde(3, &tm(&[(3, 3, 1)])), tm(&[(3, 3, 2)]));
        assert_eq!(theta_etilde(3, &tm(&[(3, 3, 1)])), Some(tm(&[])));
        assert_eq!(theta_etilde(1, &tm(&[])), None);
    }

    #[test]
    fn minus_one_chain() {
        // {a,b} = a<-1,1> + b<1>
        let expect = [(0, 1), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 1), (4, 0)];
        let mut m = tm(&[]);
        for (a, b) in expect {
            m = theta_ftilde(1, &m);
            assert_eq!((m.m(-1, 1), m.m(1, 1)), (a, b));
            assert_eq!(m.segment_count(), a + b);
        }
    }
}
