//! The `+`/`−` signature rule for the type-A crystal operators.

use super::{cmp_cry, CrystalTriple, Multisegment, Segment};

/// Entries are `(is_plus, tag)`. Cancels adjacent `+−` pairs until the word reads `−…−+…+`; returns the
/// surviving entries in order.
pub(crate) fn reduce<T: Copy>(word: &[(bool, T)]) -> Vec<(bool, T)> {
    let mut kept: Vec<(bool, T)> = Vec::with_capacity(word.len());
    for &(plus, tag) in word {
        if !plus && kept.last().is_some_and(|&(p, _)| p) {
            kept.pop();
        } else {
            kept.push((plus, tag));
        }
    }
    kept
}

pub fn signature_ops(i: i32, m: &Multisegment) -> CrystalTriple {
    let mut segs: Vec<(Segment, u32)> = m.iter().collect();
    segs.sort_by(|a, b| cmp_cry(&b.0, &a.0));
    let mut word = Vec::new();
    for (s, n) in segs {
        let plus = match s.i() - i {
            0 => false,
            2 => true,
            _ => continue,
        };
        for _ in 0..n {
            word.push((plus, s));
        }
    }
    let kept = reduce(&word);
    let epsilon = kept.iter().filter(|e| !e.0).count() as u32;
    let etilde = kept.iter().rev().find(|e| !e.0).map(|&(_, s)| {
        let mut out = m.clone();
        out.remove(s);
        out.add_interval(i + 2, s.j());
        out
    });
    let mut ftilde = m.clone();
    match kept.iter().find(|e| e.0) {
        Some(&(_, s)) => {
            ftilde.remove(s);
            ftilde.add_interval(i, s.j());
        }
        None => ftilde.add_interval(i, i),
    }
    CrystalTriple { epsilon, etilde, ftilde }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mseg::crystal::crystal_triple;

    #[test]
    fn agrees_on_small_inputs() {
        let e = Multisegment::empty();
        let t = signature_ops(1, &e);
        assert_eq!((t.epsilon, t.etilde, t.ftilde), (0, None, Multisegment::from_triples(&[(1, 1, 1)]).unwrap()));
        let m = Multisegment::from_triples(&[(3, 3, 1)]).unwrap();
        let t = signature_ops(1, &m);
        assert_eq!(t.ftilde, Multisegment::from_triples(&[(1, 3, 1)]).unwrap());
        let m = Multisegment::from_triples(&[(1, 1, 1), (3, 3, 1)]).unwrap();
        assert_eq!(signature_ops(1, &m), crystal_triple(1, &m));
    }

    #[test]
    fn reduction_cancels_nested_pairs() {
        let w = [(true, 0), (true, 1), (false, 2), (false, 3), (false, 4), (true, 5)];
        let kept: Vec<_> = reduce(&w).into_iter().map(|e| e.1).collect();
        assert_eq!(kept, vec![4, 5]);
    }
}
