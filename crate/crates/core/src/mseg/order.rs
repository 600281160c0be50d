use std::cmp::Ordering;

use super::{Multisegment, Segment};
use crate::error::{Error, Result};

/// PBW ordering: `⟨i₁,j₁⟩ ≥ ⟨i₂,j₂⟩` iff `j₁ > j₂`, or `j₁ = j₂` and `i₁ ≥ i₂`.
pub fn cmp_pbw(a: &Segment, b: &Segment) -> Ordering {
    a.j().cmp(&b.j()).then(a.i().cmp(&b.i()))
}

/// Crystal ordering: `⟨i₁,j₁⟩ ≥ ⟨i₂,j₂⟩` iff `j₁ > j₂`, or `j₁ = j₂` and `i₁ ≤ i₂`.
pub fn cmp_cry(a: &Segment, b: &Segment) -> Ordering {
    a.j().cmp(&b.j()).then(b.i().cmp(&a.i()))
}

/// Lexicographic extension of [`cmp_cry`] to multisegments: scan segments
/// from the largest down and compare multiplicities at the first difference.
/// Does not check contents.
pub fn cmp_cry_lex(m: &Multisegment, n: &Multisegment) -> Ordering {
    let mut segs: Vec<Segment> = m.iter().chain(n.iter()).map(|(s, _)| s).collect();
    segs.sort_by(|a, b| cmp_cry(b, a));
    segs.dedup();
    for s in segs {
        match m.mult(s).cmp(&n.mult(s)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// [`cmp_cry_lex`] restricted to multisegments of equal content.
pub fn cmp_cry_multiseg(m: &Multisegment, n: &Multisegment) -> Result<Ordering> {
    if m.content() != n.content() {
        return Err(Error::ContentMismatch);
    }
    Ok(cmp_cry_lex(m, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seg(i: i32, j: i32) -> Segment {
        Segment::new(i, j).unwrap()
    }

    #[test]
    fn pbw_and_crystal_orders_differ() {
        assert_eq!(cmp_pbw(&seg(1, 1), &seg(-1, 1)), Ordering::Greater);
        assert_eq!(cmp_pbw(&seg(-1, 1), &seg(-1, -1)), Ordering::Greater);
        assert_eq!(cmp_cry(&seg(-1, 1), &seg(1, 1)), Ordering::Greater);
        assert_eq!(cmp_cry(&seg(1, 1), &seg(-1, -1)), Ordering::Greater);
        assert_eq!(cmp_pbw(&seg(3, 3), &seg(3, 3)), Ordering::Equal);
    }

    #[test]
    fn multisegment_comparison_needs_equal_content() {
        let a = Multisegment::from_triples(&[(1, 3, 1)]).unwrap();
        let b = Multisegment::from_triples(&[(1, 1, 1), (3, 3, 1)]).unwrap();
        assert_eq!(cmp_cry_multiseg(&a, &b), Ok(Ordering::Greater));
        assert_eq!(cmp_cry_multiseg(&a, &a), Ok(Ordering::Equal));
        let c = Multisegment::from_triples(&[(1, 1, 1)]).unwrap();
        assert_eq!(cmp_cry_multiseg(&a, &c), Err(Error::ContentMismatch));
    }

    fn arb_segment() -> impl Strategy<Value = Segment> {
        (-4i32..4, 0i32..4).prop_map(|(a, len)| seg(2 * a + 1, 2 * (a + len) + 1))
    }

    proptest! {
        #[test]
        fn orders_are_total(a in arb_segment(), b in arb_segment(), c in arb_segment()) {
            for cmp in [cmp_pbw, cmp_cry] {
                prop_assert_eq!(cmp(&a, &b), cmp(&b, &a).reverse());
                prop_assert_eq!(cmp(&a, &b) == Ordering::Equal, a == b);
                if cmp(&a, &b) != Ordering::Greater && cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(cmp(&a, &c), Ordering::Greater);
                }
            }
        }
    }
}
