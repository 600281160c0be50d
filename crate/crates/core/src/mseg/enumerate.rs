use super::{cmp_cry_lex, Content, Multisegment, Segment, Window};

/// Every content of total degree `≤ max_degree` supported in the window,
/// ordered by degree and then by content.
pub fn contents_up_to(window: &Window, max_degree: u32) -> Vec<Content> {
    fn rec(idx: &[i32], budget: u32, cur: &mut Content, out: &mut Vec<Content>) {
        let Some((&first, rest)) = idx.split_first() else {
            out.push(cur.clone());
            return;
        };
        for n in 0..=budget {
            let mut next = cur.clone();
            next.add(first, n);
            rec(rest, budget - n, &mut next, out);
        }
    }
    let mut out = Vec::new();
    rec(window.indices(), max_degree, &mut Content::new(), &mut out);
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    out
}

/// All multisegments with exactly the given content, in decreasing crystal
/// order.
pub fn multisegments_of_content(content: &Content) -> Vec<Multisegment> {
    // Peel segments off the smallest remaining index; segments starting there
    // are chosen with nondecreasing end so each multiset appears once.
    fn rec(rem: &Content, cur: &Multisegment, start: i32, min_j: i32, out: &mut Vec<Multisegment>) {
        let Some((a, _)) = rem.iter().next() else {
            out.push(cur.clone());
            return;
        };
        let min_j = if a == start { min_j } else { a };
        let mut j = a;
        let mut left = rem.clone();
        while left.remove_one(j) {
            if j >= min_j {
                let mut next = cur.clone();
                next.add(Segment::new(a, j).expect("odd"), 1);
                rec(&left, &next, a, j, out);
            }
            j += 2;
        }
    }
    let mut out = Vec::new();
    rec(content, &Multisegment::empty(), i32::MIN, i32::MIN, &mut out);
    out.sort_by(|a, b| cmp_cry_lex(b, a));
    out
}

/// All multisegments inside `window` of degree `≤ max_degree`, each once,
/// grouped by content (contents in [`contents_up_to`] order, each group in
/// decreasing crystal order).
pub fn enumerate_multisegments(window: &Window, max_degree: u32) -> Vec<Multisegment> {
    contents_up_to(window, max_degree).iter().flat_map(multisegments_of_content).collect()
}
