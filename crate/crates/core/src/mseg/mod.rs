//! Segments, multisegments, the PBW and crystal orderings, and the type-A
//! crystal structure on multisegments.
//!
//! The crystal operators have two independent implementations: closed
//! formulas in [`crystal`] and the `+`/`−` signature rule in [`signature`].
//! They must agree on every input; the test suites use one as the oracle for
//! the other.

pub mod crystal;
pub mod enumerate;
pub mod order;
pub mod signature;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use crystal::{crystal_triple, epsilon, etilde, ftilde, CrystalTriple};
pub use enumerate::{contents_up_to, enumerate_multisegments, multisegments_of_content};
pub use order::{cmp_cry, cmp_cry_lex, cmp_cry_multiseg, cmp_pbw};
pub use signature::signature_ops;

pub(crate) fn is_odd(x: i32) -> bool {
    x.rem_euclid(2) == 1
}

/// The root pairing of `gl_∞` on odd indices: 2 on the diagonal, −1 for
/// neighbours `j = i ± 2`, 0 otherwise.
pub fn pairing(i: i32, j: i32) -> i32 {
    match (i - j).abs() {
        0 => 2,
        2 => -1,
        _ => 0,
    }
}

/// A finite, sorted set of odd indices on which the algebra is modelled.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Window(Vec<i32>);

impl Window {
    pub fn new(indices: impl IntoIterator<Item = i32>) -> Result<Self> {
        let mut v: Vec<i32> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::InvalidWindow("empty window".into()));
        }
        if let Some(&bad) = v.iter().find(|&&x| !is_odd(x)) {
            return Err(Error::InvalidWindow(format!("{bad} is not odd")));
        }
        Ok(Self(v))
    }

    /// All odd integers in `lo..=hi`.
    pub fn range(lo: i32, hi: i32) -> Result<Self> {
        Self::new((lo..=hi).filter(|&x| is_odd(x)))
    }

    /// `{±1, ±3, …, ±n}` for odd `n > 0`.
    pub fn symmetric(n: i32) -> Result<Self> {
        Self::range(-n, n)
    }

    pub fn indices(&self) -> &[i32] {
        &self.0
    }

    pub fn contains(&self, i: i32) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().all(|&i| self.contains(-i))
    }

    /// Positive indices of a symmetric window.
    pub fn positive(&self) -> Vec<i32> {
        self.0.iter().copied().filter(|&i| i > 0).collect()
    }

    pub fn check(&self, i: i32) -> Result<()> {
        if self.contains(i) {
            Ok(())
        } else {
            Err(Error::OutOfWindow { index: i, window: self.to_string() })
        }
    }

    pub fn contains_segment(&self, s: &Segment) -> bool {
        s.indices().all(|k| self.contains(k))
    }

    /// Every segment all of whose indices lie in the window.
    pub fn segments(&self) -> Vec<Segment> {
        let mut out = Vec::new();
        for &i in &self.0 {
            let mut j = i;
            while self.contains(j) {
                out.push(Segment { i, j });
                j += 2;
            }
        }
        out
    }
}

impl TryFrom<Vec<i32>> for Window {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        Window::new(v)
    }
}

impl From<Window> for Vec<i32> {
    fn from(w: Window) -> Self {
        w.0
    }
}

impl std::str::FromStr for Window {
    type Err = Error;
    /// Comma-separated indices, e.g. `-3,-1,1,3`.
    fn from_str(s: &str) -> Result<Self> {
        let parsed: std::result::Result<Vec<i32>, _> =
            s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::parse).collect();
        Window::new(parsed.map_err(|e| Error::InvalidWindow(format!("{s:?}: {e}")))?)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Content of an element: how many times each index occurs. The weight is
/// `Σ content_i · α_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Content(BTreeMap<i32, u32>);

impl Content {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_indices(indices: impl IntoIterator<Item = i32>) -> Self {
        let mut c = Self::new();
        for i in indices {
            c.add(i, 1);
        }
        c
    }

    pub fn get(&self, i: i32) -> u32 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: i32, n: u32) {
        if n > 0 {
            *self.0.entry(i).or_insert(0) += n;
        }
    }

    /// Removes one occurrence of `i`; `false` if there was none.
    pub fn remove_one(&mut self, i: i32) -> bool {
        match self.0.get_mut(&i) {
            None => false,
            Some(n) => {
                *n -= 1;
                if *n == 0 {
                    self.0.remove(&i);
                }
                true
            }
        }
    }

    pub fn with(&self, i: i32) -> Self {
        let mut c = self.clone();
        c.add(i, 1);
        c
    }

    pub fn without(&self, i: i32) -> Option<Self> {
        let mut c = self.clone();
        c.remove_one(i).then_some(c)
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, u32)> + '_ {
        self.0.iter().map(|(&i, &n)| (i, n))
    }

    /// `(α_i, β)` for this content `β`.
    pub fn pairing_with(&self, i: i32) -> i32 {
        self.iter().map(|(j, n)| pairing(i, j) * n as i32).sum()
    }

    /// Multiset of absolute values.
    pub fn symmetrized(&self) -> SymContent {
        let mut s = SymContent::default();
        for (i, n) in self.iter() {
            *s.0.entry(i.unsigned_abs()).or_insert(0) += n;
        }
        s
    }

    pub fn is_within(&self, w: &Window) -> bool {
        self.0.keys().all(|&i| w.contains(i))
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .map(|(i, n)| if n == 1 { i.to_string() } else { format!("{i}^{n}") })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Symmetrized content: the multiset of `|i|` over letters. This is the
/// grading that survives on `V_θ(0)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct SymContent(BTreeMap<u32, u32>);

impl SymContent {
    pub fn from_abs(indices: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Self::default();
        for k in indices {
            *s.0.entry(k).or_insert(0) += 1;
        }
        s
    }

    pub fn get(&self, k: u32) -> u32 {
        self.0.get(&k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&k, &n)| (k, n))
    }

    pub fn with(&self, k: u32) -> Self {
        let mut s = self.clone();
        *s.0.entry(k).or_insert(0) += 1;
        s
    }

    pub fn without(&self, k: u32) -> Option<Self> {
        let mut s = self.clone();
        let n = s.0.get_mut(&k)?;
        *n -= 1;
        if *n == 0 {
            s.0.remove(&k);
        }
        Some(s)
    }

    /// All contents `β` with `|β| = self`, in increasing order.
    pub fn lifts(&self) -> Vec<Content> {
        let mut out = vec![Content::new()];
        for (k, n) in self.iter() {
            let k = k as i32;
            let mut next = Vec::new();
            for base in &out {
                for neg in 0..=n {
                    let mut c = base.clone();
                    c.add(-k, neg);
                    c.add(k, n - neg);
                    next.push(c);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// `(α_i + α_{−i}, β)` for any lift `β`; independent of the lift.
    pub fn theta_pairing(&self, i: i32) -> i32 {
        let lift = self.lifts().into_iter().next().unwrap();
        lift.pairing_with(i) + lift.pairing_with(-i)
    }
}

impl fmt::Display for SymContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .map(|(k, n)| if n == 1 { format!("±{k}") } else { format!("±{k}^{n}") })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The segment `⟨i, j⟩ = {i, i+2, …, j}` of odd integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Segment {
    i: i32,
    j: i32,
}

impl Segment {
    pub fn new(i: i32, j: i32) -> Result<Self> {
        if is_odd(i) && is_odd(j) && i <= j {
            Ok(Self { i, j })
        } else {
            Err(Error::InvalidSegment { i, j })
        }
    }

    /// `⟨i, i⟩`.
    pub fn single(i: i32) -> Self {
        Self::new(i, i).expect("odd index")
    }

    pub fn i(&self) -> i32 {
        self.i
    }

    pub fn j(&self) -> i32 {
        self.j
    }

    /// Number of indices covered.
    pub fn len(&self) -> u32 {
        ((self.j - self.i) / 2 + 1) as u32
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn indices(&self) -> impl Iterator<Item = i32> {
        (self.i..=self.j).step_by(2)
    }

    pub fn is_theta_restricted(&self) -> bool {
        -self.j <= self.i && self.i <= self.j
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i == self.j {
            write!(f, "<{}>", self.i)
        } else {
            write!(f, "<{},{}>", self.i, self.j)
        }
    }
}

/// A finite formal sum `Σ m_{ij} ⟨i, j⟩` with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multisegment(BTreeMap<Segment, u32>);

#[derive(Serialize, Deserialize)]
struct SegmentEntry {
    i: i32,
    j: i32,
    mult: u32,
}

impl Multisegment {
    /// The empty multisegment `∅`.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_segments(entries: impl IntoIterator<Item = (Segment, u32)>) -> Self {
        let mut m = Self::empty();
        for (s, n) in entries {
            m.add(s, n);
        }
        m
    }

    /// Convenience constructor from `(i, j, mult)` triples.
    pub fn from_triples(triples: &[(i32, i32, u32)]) -> Result<Self> {
        let mut m = Self::empty();
        for &(i, j, n) in triples {
            if n == 0 {
                return Err(Error::ZeroMultiplicity { i, j });
            }
            m.add(Segment::new(i, j)?, n);
        }
        Ok(m)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mult(&self, s: Segment) -> u32 {
        self.0.get(&s).copied().unwrap_or(0)
    }

    /// `m_{ij}`, zero for invalid pairs.
    pub fn m(&self, i: i32, j: i32) -> u32 {
        Segment::new(i, j).map_or(0, |s| self.mult(s))
    }

    pub fn add(&mut self, s: Segment, n: u32) {
        if n > 0 {
            *self.0.entry(s).or_insert(0) += n;
        }
    }

    /// Adds one copy of `⟨i, j⟩` when `i <= j`; an empty interval is a no-op.
    pub(crate) fn add_interval(&mut self, i: i32, j: i32) {
        if i <= j {
            self.add(Segment::new(i, j).expect("odd interval"), 1);
        }
    }

    /// Removes one copy of `s`; `false` if absent.
    pub fn remove(&mut self, s: Segment) -> bool {
        match self.0.get_mut(&s) {
            None => false,
            Some(n) => {
                *n -= 1;
                if *n == 0 {
                    self.0.remove(&s);
                }
                true
            }
        }
    }

    /// Removes one copy of `⟨i, j⟩` when `i <= j`; panics if it is absent.
    pub(crate) fn remove_interval(&mut self, i: i32, j: i32) {
        if i <= j {
            let s = Segment::new(i, j).expect("odd interval");
            assert!(self.remove(s), "segment {s} not present");
        }
    }

    /// Segments with multiplicities, in storage order (by `i`, then `j`).
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (Segment, u32)> + '_ {
        self.0.iter().map(|(&s, &n)| (s, n))
    }

    pub fn segment_count(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn degree(&self) -> u32 {
        self.iter().map(|(s, n)| s.len() * n).sum()
    }

    pub fn content(&self) -> Content {
        let mut c = Content::new();
        for (s, n) in self.iter() {
            for k in s.indices() {
                c.add(k, n);
            }
        }
        c
    }

    pub fn is_theta_restricted(&self) -> bool {
        self.0.keys().all(Segment::is_theta_restricted)
    }

    /// Error naming the first segment that violates `−j ≤ i ≤ j`.
    pub fn check_theta_restricted(&self) -> Result<()> {
        match self.0.keys().find(|s| !s.is_theta_restricted()) {
            None => Ok(()),
            Some(s) => Err(Error::NotThetaRestricted { i: s.i, j: s.j }),
        }
    }

    pub fn is_within(&self, w: &Window) -> bool {
        self.0.keys().all(|s| w.contains_segment(s))
    }

    pub fn check_within(&self, w: &Window) -> Result<()> {
        for s in self.0.keys() {
            for k in s.indices() {
                w.check(k)?;
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// `{a,b}` for `a⟨−1,1⟩ + b⟨1⟩`, if the multisegment has that shape.
    pub fn ab_label(&self) -> Option<String> {
        let a = self.m(-1, 1);
        let b = self.m(1, 1);
        let rest = self.segment_count() - a - b;
        (rest == 0).then(|| format!("{{{a},{b}}}"))
    }
}

impl Serialize for Multisegment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<SegmentEntry> =
            self.iter().map(|(seg, n)| SegmentEntry { i: seg.i, j: seg.j, mult: n }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multisegment {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<SegmentEntry>::deserialize(d)?;
        let triples: Vec<_> = v.iter().map(|e| (e.i, e.j, e.mult)).collect();
        Multisegment::from_triples(&triples).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Multisegment {
    /// Segments in decreasing crystal order, e.g. `<-1,1> + 2<1>`; `∅` if empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let mut segs: Vec<(Segment, u32)> = self.iter().collect();
        segs.sort_by(|a, b| cmp_cry(&b.0, &a.0));
        let parts: Vec<String> =
            segs.iter().map(|(s, n)| if *n == 1 { s.to_string() } else { format!("{n}{s}") }).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multisegment({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_validation() {
        assert!(Segment::new(1, 3).is_ok());
        assert!(Segment::new(3, 1).is_err());
        assert!(Segment::new(2, 3).is_err());
        assert_eq!(Segment::new(-3, 3).unwrap().len(), 4);
    }

    #[test]
    fn pairing_values() {
        assert_eq!(pairing(1, 1), 2);
        assert_eq!(pairing(1, 3), -1);
        assert_eq!(pairing(-1, 1), -1);
        assert_eq!(pairing(1, 5), 0);
    }

    #[test]
    fn json_format() {
        let m = Multisegment::from_triples(&[(-1, 1, 2), (1, 1, 1)]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[{"i":-1,"j":1,"mult":2},{"i":1,"j":1,"mult":1}]"#);
        assert_eq!(Multisegment::from_json_str(&s).unwrap(), m);
        assert_eq!(serde_json::to_string(&Multisegment::empty()).unwrap(), "[]");
        assert!(Multisegment::from_json_str(r#"[{"i":3,"j":1,"mult":1}]"#).is_err());
        assert!(Multisegment::from_json_str(r#"[{"i":1,"j":1,"mult":0}]"#).is_err());
    }

    #[test]
    fn content_and_lifts() {
        let m = Multisegment::from_triples(&[(-1, 3, 1), (1, 1, 2)]).unwrap();
        assert_eq!(m.content(), Content::from_indices([-1, 1, 1, 1, 3]));
        assert_eq!(m.degree(), 5);
        let sym = SymContent::from_abs([1, 1, 3]);
        assert_eq!(sym.lifts().len(), 3 * 2);
        assert_eq!(sym.theta_pairing(1), Content::from_indices([1, 1, 3]).pairing_with(1) + Content::from_indices([1, 1, 3]).pairing_with(-1));
    }

    #[test]
    fn theta_restriction_error_names_segment() {
        let m = Multisegment::from_triples(&[(-3, 1, 1)]).unwrap();
        assert_eq!(m.check_theta_restricted(), Err(Error::NotThetaRestricted { i: -3, j: 1 }));
    }

    #[test]
    fn window_parsing() {
        let w: Window = "-3,-1,1,3".parse().unwrap();
        assert!(w.is_symmetric());
        assert_eq!(w.to_string(), "{-3,-1,1,3}");
        assert!("1,2".parse::<Window>().is_err());
        assert_eq!(Window::new([1, 3]).unwrap().segments().len(), 3);
    }

    #[test]
    fn formulas_match_signature_rule() {
        let w = Window::range(-5, 5).unwrap();
        for m in enumerate_multisegments(&w, 4) {
            for i in (-7..=7).step_by(2) {
                let t = crystal_triple(i, &m);
                assert_eq!(t, signature_ops(i, &m), "i = {i}, m = {m}");
                assert_eq!(etilde(i, &t.ftilde).as_ref(), Some(&m));
                if let Some(e) = &t.etilde {
                    assert_eq!(&ftilde(i, e), &m);
                    assert_eq!(epsilon(i, e) + 1, t.epsilon);
                }
            }
        }
    }
}
