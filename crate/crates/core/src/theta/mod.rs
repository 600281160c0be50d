//! θ-restricted multisegments (`−j ≤ i ≤ j` for every segment) and the
//! symmetric crystal operators `Ẽ_k`, `F̃_k`, `ε_k` on them.
//!
//! For positive `k` the operators are the type-A ones. For `−k` there are
//! two implementations, closed formulas in [`formula`] and the signature
//! rule in [`signature`], kept independent so each can check the other.

pub mod formula;
pub mod signature;

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mseg::{self, cmp_cry_lex, multisegments_of_content, CrystalTriple, Multisegment, SymContent, Window};

pub use formula::{theta_epsilon, theta_etilde, theta_ftilde, theta_formula_ops};
pub use signature::theta_signature_ops;

/// A multisegment all of whose segments satisfy `−j ≤ i ≤ j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Multisegment", into = "Multisegment")]
pub struct ThetaMultisegment(Multisegment);

impl ThetaMultisegment {
    pub fn new(m: Multisegment) -> Result<Self> {
        m.check_theta_restricted()?;
        Ok(Self(m))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_triples(triples: &[(i32, i32, u32)]) -> Result<Self> {
        Self::new(Multisegment::from_triples(triples)?)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::new(Multisegment::from_json_str(s)?)
    }

    pub fn as_multisegment(&self) -> &Multisegment {
        &self.0
    }

    pub fn into_inner(self) -> Multisegment {
        self.0
    }

    /// Trusted wrap for operator outputs; checked in debug builds.
    pub(crate) fn wrap(m: Multisegment) -> Self {
        debug_assert!(m.is_theta_restricted(), "{m} is not theta-restricted");
        Self(m)
    }

    pub fn sym_content(&self) -> SymContent {
        self.0.content().symmetrized()
    }
}

impl Deref for ThetaMultisegment {
    type Target = Multisegment;
    fn deref(&self) -> &Multisegment {
        &self.0
    }
}

impl TryFrom<Multisegment> for ThetaMultisegment {
    type Error = Error;
    fn try_from(m: Multisegment) -> Result<Self> {
        Self::new(m)
    }
}

impl From<ThetaMultisegment> for Multisegment {
    fn from(m: ThetaMultisegment) -> Self {
        m.0
    }
}

impl fmt::Display for ThetaMultisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for ThetaMultisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThetaMultisegment({})", self.0)
    }
}

/// `(ε, Ẽ(m), F̃(m))` at a θ index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaTriple {
    pub epsilon: u32,
    pub etilde: Option<ThetaMultisegment>,
    pub ftilde: ThetaMultisegment,
}

impl From<CrystalTriple> for ThetaTriple {
    fn from(t: CrystalTriple) -> Self {
        Self {
            epsilon: t.epsilon,
            etilde: t.etilde.map(ThetaMultisegment::wrap),
            ftilde: ThetaMultisegment::wrap(t.ftilde),
        }
    }
}

fn check_positive(k: i32) {
    assert!(k > 0 && mseg::is_odd(k), "expected a positive odd index, got {k}");
}

/// `F̃_k`, `Ẽ_k`, `ε_k` for `k > 0`: the type-A rule at index `k`.
pub fn theta_ops_positive(k: i32, m: &ThetaMultisegment) -> ThetaTriple {
    check_positive(k);
    mseg::crystal_triple(k, m).into()
}

/// The symmetric crystal structure at any odd index `i`.
pub fn theta_ops(i: i32, m: &ThetaMultisegment) -> ThetaTriple {
    if i > 0 {
        theta_ops_positive(i, m)
    } else {
        theta_formula_ops(-i, m)
    }
}

/// All θ-restricted multisegments whose symmetrized content is `sym`, in
/// decreasing crystal order.
pub fn theta_block(sym: &SymContent) -> Vec<ThetaMultisegment> {
    let mut out: Vec<ThetaMultisegment> = sym
        .lifts()
        .iter()
        .flat_map(multisegments_of_content)
        .filter(Multisegment::is_theta_restricted)
        .map(ThetaMultisegment)
        .collect();
    out.sort_by(|a, b| cmp_cry_lex(b, a));
    out
}

/// Symmetrized contents of degree `≤ max_degree` over the positive part of
/// a symmetric window, ordered by degree then content.
pub fn sym_contents_up_to(window: &Window, max_degree: u32) -> Result<Vec<SymContent>> {
    if !window.is_symmetric() {
        return Err(Error::InvalidWindow(format!("{window} is not symmetric under i -> -i")));
    }
    let pos: Vec<u32> = window.positive().iter().map(|&k| k as u32).collect();
    let mut out = vec![SymContent::default()];
    let mut frontier = out.clone();
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for s in &frontier {
            for &k in &pos {
                // Add indices in nondecreasing order to avoid repeats.
                if s.iter().last().is_none_or(|(top, _)| top <= k) {
                    next.push(s.with(k));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// All θ-restricted multisegments inside a symmetric window with degree
/// `≤ max_degree`, grouped by symmetrized content.
pub fn enumerate_theta(window: &Window, max_degree: u32) -> Result<Vec<ThetaMultisegment>> {
    Ok(sym_contents_up_to(window, max_degree)?.iter().flat_map(theta_block).collect())
}
