//! Closed formulas for `ε_i`, `ẽ_i`, `f̃_i` on multisegments.

use super::Multisegment;

/// `(ε, ẽ(m), f̃(m))` for one index; `ẽ` is `None` when `ε = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrystalTriple {
    pub epsilon: u32,
    pub etilde: Option<Multisegment>,
    pub ftilde: Multisegment,
}

/// `A_k^{(i)}(m) = Σ_{k'≥k} (m_{i,k'} − m_{i+2,k'+2})` for `k = i, i+2, …`
/// up to the first `k` past the support, in increasing `k`.
fn a_values(i: i32, m: &Multisegment) -> Vec<(i32, i64)> {
    let top = m.iter().map(|(s, _)| s.j()).max().unwrap_or(i).max(i) + 2;
    let mut out = Vec::new();
    let mut acc = 0i64;
    let mut k = top;
    while k >= i {
        acc += m.m(i, k) as i64 - m.m(i + 2, k + 2) as i64;
        out.push((k, acc));
        k -= 2;
    }
    out.reverse();
    out
}

pub fn epsilon(i: i32, m: &Multisegment) -> u32 {
    a_values(i, m).iter().map(|&(_, a)| a).max().unwrap_or(0).max(0) as u32
}

pub fn etilde(i: i32, m: &Multisegment) -> Option<Multisegment> {
    let a = a_values(i, m);
    let eps = a.iter().map(|&(_, v)| v).max().unwrap_or(0).max(0);
    if eps == 0 {
        return None;
    }
    let ke = a.iter().rev().find(|&&(_, v)| v == eps).map(|&(k, _)| k).unwrap();
    let mut out = m.clone();
    out.remove_interval(i, ke);
    out.add_interval(i + 2, ke);
    Some(out)
}

pub fn ftilde(i: i32, m: &Multisegment) -> Multisegment {
    let a = a_values(i, m);
    let eps = a.iter().map(|&(_, v)| v).max().unwrap_or(0).max(0);
    let kf = a.iter().find(|&&(_, v)| v == eps).map(|&(k, _)| k).unwrap();
    let mut out = m.clone();
    out.remove_interval(i + 2, kf);
    out.add_interval(i, kf);
    out
}

pub fn crystal_triple(i: i32, m: &Multisegment) -> CrystalTriple {
    CrystalTriple { epsilon: epsilon(i, m), etilde: etilde(i, m), ftilde: ftilde(i, m) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(t: &[(i32, i32, u32)]) -> Multisegment {
        Multisegment::from_triples(t).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(epsilon(1, &Multisegment::empty()), 0);
        assert_eq!(epsilon(1, &ms(&[(1, 1, 1)])), 1);
        assert_eq!(epsilon(1, &ms(&[(3, 3, 1)])), 0);
        assert_eq!(ftilde(1, &Multisegment::empty()), ms(&[(1, 1, 1)]));
        assert_eq!(ftilde(1, &ms(&[(3, 3, 1)])), ms(&[(1, 3, 1)]));
        assert_eq!(etilde(1, &ms(&[(1, 3, 1)])), Some(ms(&[(3, 3, 1)])));
        assert_eq!(etilde(1, &ms(&[(3, 3, 1)])), None);
        assert_eq!(etilde(1, &ms(&[(1, 1, 1)])), Some(Multisegment::empty()));
    }

    #[test]
    fn mixed_signs() {
        // <3> gives + and comes first, so it cancels the − of <1>.
        let m = ms(&[(1, 1, 1), (3, 3, 1)]);
        assert_eq!(epsilon(1, &m), 0);
        assert_eq!(etilde(1, &m), None);
        assert_eq!(ftilde(1, &m), ms(&[(1, 1, 2), (3, 3, 1)]));
        let m = ms(&[(1, 3, 1), (1, 1, 1)]);
        assert_eq!(epsilon(1, &m), 2);
        assert_eq!(etilde(1, &m), Some(ms(&[(1, 3, 1)])));
    }
}
