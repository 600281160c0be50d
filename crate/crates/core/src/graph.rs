//! Crystal graphs: the closure of `∅` under the modified root operators.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::config::{JobConfig, Mode};
use crate::error::{Error, Result};
use crate::mseg::{cmp_cry_lex, ftilde, Multisegment, Window};
use crate::theta::{theta_ops, ThetaMultisegment};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GraphEdge {
    pub source: usize,
    pub target: usize,
    pub i: i32,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CrystalGraphDoc {
    pub mode: Mode,
    pub window: Window,
    pub max_degree: u32,
    pub nodes: Vec<Multisegment>,
    pub edges: Vec<GraphEdge>,
}

fn f_op(mode: Mode, i: i32, m: &Multisegment) -> Multisegment {
    match mode {
        Mode::TypeA => ftilde(i, m),
        Mode::Theta => theta_ops(i, &ThetaMultisegment::wrap(m.clone())).ftilde.into_inner(),
    }
}

/// Breadth-first closure of `{∅}` under `F̃_i` for the given indices
/// (default: the whole window), stopping at `max_degree`. Nodes leaving
/// the window are dropped. Nodes are ordered by degree, then decreasing
/// crystal order.
pub fn crystal_graph(config: &JobConfig, indices: Option<&[i32]>) -> Result<CrystalGraphDoc> {
    config.validate()?;
    let window = &config.window;
    let indices: Vec<i32> = match indices {
        Some(ix) => {
            for &i in ix {
                window.check(i)?;
            }
            let mut v = ix.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        }
        None => window.indices().to_vec(),
    };
    if indices.is_empty() {
        return Err(Error::Config("no indices to follow".into()));
    }
    let mut seen: BTreeSet<Multisegment> = BTreeSet::new();
    let mut raw_edges: BTreeSet<(Multisegment, Multisegment, i32)> = BTreeSet::new();
    let mut queue = VecDeque::from([Multisegment::empty()]);
    seen.insert(Multisegment::empty());
    while let Some(m) = queue.pop_front() {
        if m.degree() >= config.max_degree {
            continue;
        }
        for &i in &indices {
            let n = f_op(config.mode, i, &m);
            if !n.is_within(window) {
                continue;
            }
            raw_edges.insert((m.clone(), n.clone(), i));
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    let mut nodes: Vec<Multisegment> = seen.into_iter().collect();
    nodes.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| cmp_cry_lex(b, a)));
    let pos: BTreeMap<&Multisegment, usize> = nodes.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut edges: Vec<GraphEdge> =
        raw_edges.iter().map(|(s, t, i)| GraphEdge { source: pos[s], target: pos[t], i: *i }).collect();
    edges.sort_by_key(|e| (e.source, e.i, e.target));
    Ok(CrystalGraphDoc {
        mode: config.mode,
        window: window.clone(),
        max_degree: config.max_degree,
        nodes,
        edges,
    })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl CrystalGraphDoc {
    /// `{a,b}` labels on the window `{±1}`, JSON multisegments otherwise.
    pub fn label(&self, k: usize) -> String {
        let m = &self.nodes[k];
        let ab = self.window.indices() == [-1, 1];
        match m.ab_label() {
            Some(l) if ab => l,
            _ => m.to_json().to_string(),
        }
    }

    /// The edge `source -i-> target`, if present.
    pub fn has_edge(&self, source: &Multisegment, target: &Multisegment, i: i32) -> bool {
        let s = self.nodes.iter().position(|m| m == source);
        let t = self.nodes.iter().position(|m| m == target);
        match (s, t) {
            (Some(s), Some(t)) => self.edges.iter().any(|e| e.source == s && e.target == t && e.i == i),
            _ => false,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "mode": self.mode,
            "window": self.window,
            "max_degree": self.max_degree,
            "nodes": self.nodes.iter().enumerate().map(|(k, m)| serde_json::json!({
                "id": k,
                "label": self.label(k),
                "multisegment": m,
            })).collect::<Vec<_>>(),
            "edges": self.edges,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n  rankdir=LR;\n");
        for k in 0..self.nodes.len() {
            out.push_str(&format!("  n{k} [label=\"{}\"];\n", dot_escape(&self.label(k))));
        }
        for e in &self.edges {
            out.push_str(&format!("  n{} -> n{} [label=\"{}\"];\n", e.source, e.target, e.i));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} nodes, {} edges\n", self.nodes.len(), self.edges.len());
        for (k, m) in self.nodes.iter().enumerate() {
            out.push_str(&format!("{k}: {m}\n"));
        }
        for e in &self.edges {
            out.push_str(&format!("{} -{}-> {}\n", e.source, e.i, e.target));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(t: &[(i32, i32, u32)]) -> Multisegment {
        Multisegment::from_triples(t).unwrap()
    }

    #[test]
    fn theta_pm1_degree_2() {
        let c = JobConfig::new(Window::symmetric(1).unwrap(), 2, Mode::Theta).unwrap();
        let g = crystal_graph(&c, None).unwrap();
        let labels: Vec<String> = (0..g.nodes.len()).map(|k| g.label(k)).collect();
        assert_eq!(labels, ["{0,0}", "{0,1}", "{1,0}", "{0,2}"]);
        assert!(g.has_edge(&Multisegment::empty(), &ms(&[(1, 1, 1)]), -1));
        assert!(g.has_edge(&ms(&[(1, 1, 1)]), &ms(&[(-1, 1, 1)]), -1));
    }

    #[test]
    fn ladder_for_three() {
        let c = JobConfig::new("-3,3".parse().unwrap(), 2, Mode::Theta).unwrap();
        let g = crystal_graph(&c, Some(&[3, -3])).unwrap();
        for i in [3, -3] {
            assert!(g.has_edge(&Multisegment::empty(), &ms(&[(3, 3, 1)]), i));
            assert!(g.has_edge(&ms(&[(3, 3, 1)]), &ms(&[(3, 3, 2)]), i));
        }
        assert_eq!(g.nodes.len(), 3);
    }

    #[test]
    fn type_a_chain() {
        let c = JobConfig::new("1".parse().unwrap(), 2, Mode::TypeA).unwrap();
        let g = crystal_graph(&c, None).unwrap();
        assert_eq!(g.nodes, vec![Multisegment::empty(), ms(&[(1, 1, 1)]), ms(&[(1, 1, 2)])]);
        assert_eq!(g.edges.len(), 2);
        assert!(g.to_dot().starts_with("digraph crystal {"));
    }
}
