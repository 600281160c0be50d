//! The signature rule for `Ẽ_{−k}`, `F̃_{−k}`, `ε_{−k}` (`k > 0`).

use super::{check_positive, ThetaMultisegment, ThetaTriple};
use crate::mseg::signature::reduce;

/// Which segment produced a sign.
#[derive(Clone, Copy, Debug)]
enum Tag {
    /// `⟨−k, j⟩`, `j ≥ k`.
    Low(i32),
    /// `⟨−k+2, j⟩`, `j > k`.
    Next(i32),
    /// `⟨−k+2, k⟩` with odd multiplicity.
    Odd,
    /// `⟨i, k⟩`, `−k+2 < i ≤ k`.
    EndK(i32),
    /// `⟨i, k−2⟩`, `−k+2 ≤ i ≤ k−2`.
    EndK2(i32),
}

pub fn theta_signature_ops(k: i32, m: &ThetaMultisegment) -> ThetaTriple {
    check_positive(k);
    let mut word: Vec<(bool, Tag)> = Vec::new();
    let mut push = |plus: bool, tag: Tag, n: u32| {
        for _ in 0..n {
            word.push((plus, tag));
        }
    };

    let top = m.iter().map(|(s, _)| s.j()).max().unwrap_or(k).max(k);
    let mut j = top;
    while j > k {
        push(false, Tag::Low(j), m.m(-k, j));
        push(true, Tag::Next(j), m.m(-k + 2, j));
        j -= 2;
    }
    push(false, Tag::Low(k), 2 * m.m(-k, k));
    if m.m(-k + 2, k) % 2 == 1 {
        push(false, Tag::Odd, 1);
        push(true, Tag::Odd, 1);
    }
    if k > 1 {
        push(true, Tag::EndK2(-k + 2), 2 * m.m(-k + 2, k - 2));
        let mut i = -k + 4;
        while i <= k - 2 {
            push(false, Tag::EndK(i), m.m(i, k));
            push(true, Tag::EndK2(i), m.m(i, k - 2));
            i += 2;
        }
        push(false, Tag::EndK(k), m.m(k, k));
    }

    let kept = reduce(&word);
    let epsilon = kept.iter().filter(|e| !e.0).count() as u32;

    let etilde = kept.iter().rev().find(|e| !e.0).map(|&(_, tag)| {
        let mut out = m.as_multisegment().clone();
        match tag {
            Tag::Low(j) => {
                out.remove_interval(-k, j);
                out.add_interval(-k + 2, j);
            }
            Tag::Odd => {
                out.remove_interval(-k + 2, k);
                out.add_interval(-k + 2, k - 2);
            }
            Tag::EndK(i) => {
                out.remove_interval(i, k);
                out.add_interval(i, k - 2);
            }
            Tag::Next(_) | Tag::EndK2(_) => unreachable!("minus sign on a plus segment"),
        }
        ThetaMultisegment::wrap(out)
    });

    let mut out = m.as_multisegment().clone();
    match kept.iter().find(|e| e.0).map(|e| e.1) {
        Some(Tag::Next(j)) => {
            out.remove_interval(-k + 2, j);
            out.add_interval(-k, j);
        }
        Some(Tag::Odd) => {
            out.remove_interval(-k + 2, k);
            out.add_interval(-k, k);
        }
        Some(Tag::EndK2(i)) => {
            out.remove_interval(i, k - 2);
            out.add_interval(i, k);
        }
        Some(Tag::Low(_) | Tag::EndK(_)) => unreachable!("plus sign on a minus segment"),
        None => out.add_interval(k, k),
    }
    ThetaTriple { epsilon, etilde, ftilde: ThetaMultisegment::wrap(out) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::theta_formula_ops;

    fn tm(t: &[(i32, i32, u32)]) -> ThetaMultisegment {
        ThetaMultisegment::from_triples(t).unwrap()
    }

    #[test]
    fn small_values() {
        let t = theta_signature_ops(1, &tm(&[]));
        assert_eq!((t.epsilon, t.etilde, t.ftilde), (0, None, tm(&[(1, 1, 1)])));
        let t = theta_signature_ops(3, &tm(&[(3, 3, 1)]));
        assert_eq!((t.epsilon, t.etilde, t.ftilde), (1, Some(tm(&[])), tm(&[(3, 3, 2)])));
        let m = tm(&[(-1, 1, 1)]);
        assert_eq!(theta_signature_ops(1, &m), theta_formula_ops(1, &m));
    }
}
