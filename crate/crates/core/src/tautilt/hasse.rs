//! The Hasse quiver of support τ-tilting pairs, by breadth-first search
//! along left mutations from `(Λ, 0)`.

use std::collections::VecDeque;
use std::fmt::Write;

use super::{left_mutation, regular_pair, LeftMutation, SttPair};
use crate::error::{Error, Result};
use crate::presentation::Algebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseArrow {
    pub from: usize,
    pub to: usize,
    /// Index of the exchanged summand among those of `from`, and its label.
    pub position: usize,
    pub summand: String,
}

#[derive(Clone, Debug)]
pub struct HasseQuiver {
    algebra: Algebra,
    nodes: Vec<SttPair>,
    arrows: Vec<HasseArrow>,
}

impl HasseQuiver {
    pub fn new(algebra: &Algebra, nodes: Vec<SttPair>, arrows: Vec<HasseArrow>) -> HasseQuiver {
        HasseQuiver { algebra: algebra.clone(), nodes, arrows }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn nodes(&self) -> &[SttPair] {
        &self.nodes
    }

    pub fn arrows(&self) -> &[HasseArrow] {
        &self.arrows
    }

    pub fn find(&self, pair: &SttPair) -> Option<usize> {
        self.nodes.iter().position(|n| n.same_as(pair))
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.arrows.iter().filter(|a| a.from == i).count()
    }

    pub fn in_degree(&self, i: usize) -> usize {
        self.arrows.iter().filter(|a| a.to == i).count()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.in_degree(i) == 0).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.out_degree(i) == 0).collect()
    }
}

/// Fails with `NodeCapExceeded` once more than `node_cap` pairs are found,
/// which is how τ-tilting infinite algebras surface.
pub fn hasse(alg: &Algebra, node_cap: usize) -> Result<HasseQuiver> {
    let mut nodes = vec![regular_pair(alg)?];
    let mut arrows = Vec::new();
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        let labels = nodes[i].summand_labels();
        for (x, label) in labels.into_iter().enumerate() {
            let LeftMutation::Mutated(q) = left_mutation(&nodes[i], x)? else {
                continue;
            };
            let j = match nodes.iter().position(|n| n.same_as(&q)) {
                Some(j) => j,
                None => {
                    if nodes.len() >= node_cap {
                        return Err(Error::NodeCapExceeded(node_cap));
                    }
                    nodes.push(q);
                    queue.push_back(nodes.len() - 1);
                    nodes.len() - 1
                }
            };
            arrows.push(HasseArrow { from: i, to: j, position: x, summand: label });
        }
        log::debug!("{}: {} nodes, {} arrows", alg.name(), nodes.len(), arrows.len());
    }
    Ok(HasseQuiver::new(alg, nodes, arrows))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz source. Highlighted nodes, and arrows between two highlighted
/// nodes, are drawn dashed.
pub fn export_dot(h: &HasseQuiver, highlight: Option<&dyn Fn(usize) -> bool>) -> String {
    let lit = |i: usize| highlight.is_some_and(|f| f(i));
    let mut out = String::from("digraph hasse {\n");
    for (i, n) in h.nodes.iter().enumerate() {
        let style = if lit(i) { ", style=dashed" } else { "" };
        writeln!(out, "  n{i} [label={}{style}];", quote(&n.label())).unwrap();
    }
    for a in &h.arrows {
        let style = if lit(a.from) && lit(a.to) { ", style=dashed" } else { "" };
        writeln!(out, "  n{} -> n{} [label={}{style}];", a.from, a.to, quote(&a.summand)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::super::tests::lambda_indecomposables;
    use super::super::{check_pair, mutations, Direction};
    use super::*;
    use crate::rep::tests::lambda;
    use crate::rep::Representation;

    /// Every basic τ-rigid pair of the right size, from subsets of a complete
    /// list of indecomposables.
    pub(crate) fn brute_force(alg: &Algebra, inds: &[Representation]) -> Vec<SttPair> {
        let n = alg.vertex_count();
        let mut out = Vec::new();
        for tmask in 0u32..(1 << inds.len()) {
            for pmask in 0u32..(1 << n) {
                if (tmask.count_ones() + pmask.count_ones()) as usize != n {
                    continue;
                }
                let t: Vec<Representation> =
                    (0..inds.len()).filter(|i| tmask >> i & 1 == 1).map(|i| inds[i].clone()).collect();
                let p: Vec<usize> = (0..n).filter(|v| pmask >> v & 1 == 1).collect();
                let v = check_pair(alg, t, p).unwrap();
                if v.is_stt() {
                    out.push(v.pair);
                }
            }
        }
        out
    }

    #[test]
    fn lambda_quiver() {
        let l = lambda();
        let h = hasse(&l, 100).unwrap();
        assert_eq!(h.nodes().len(), 12);
        assert_eq!(h.arrows().len(), 18);
        assert_eq!(h.sources(), vec![0]);
        let sinks = h.sinks();
        assert_eq!(sinks.len(), 1);
        assert_eq!(h.nodes()[sinks[0]].label(), "0 (1/2 ⊕ 2/3 ⊕ 3)");
        for i in 0..12 {
            assert_eq!(h.in_degree(i) + h.out_degree(i), 3);
        }
    }

    #[test]
    fn nodes_match_brute_force() {
        let l = lambda();
        let h = hasse(&l, 100).unwrap();
        let oracle = brute_force(&l, &lambda_indecomposables(&l));
        assert_eq!(oracle.len(), h.nodes().len());
        for o in &oracle {
            assert!(h.find(o).is_some(), "{} missing", o.label());
        }
    }

    #[test]
    fn arrows_exchange_one_position() {
        let l = lambda();
        let h = hasse(&l, 100).unwrap();
        for a in h.arrows() {
            let (s, t) = (&h.nodes()[a.from], &h.nodes()[a.to]);
            let common_t =
                s.summands().iter().filter(|x| t.summands().iter().any(|y| crate::rep::is_isomorphic(x, y))).count();
            let common_p = s.p_vertices().iter().filter(|v| t.p_vertices().contains(v)).count();
            assert_eq!(common_t + common_p, 2, "{} -> {}", s.label(), t.label());
            // the summand that came in is a right mutation from the other side
            let back = mutations(t).unwrap();
            for (k, y) in t.summands().iter().enumerate() {
                if !s.summands().iter().any(|x| crate::rep::is_isomorphic(x, y)) {
                    assert_eq!(back[k].direction, Direction::Right);
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let l = lambda();
        assert!(matches!(hasse(&l, 5), Err(Error::NodeCapExceeded(5))));
    }

    #[test]
    fn dot_output() {
        let l = lambda();
        let empty = HasseQuiver::new(&l, vec![], vec![]);
        assert_eq!(export_dot(&empty, None), "digraph hasse {\n}\n");
        let one = HasseQuiver::new(&l, vec![regular_pair(&l).unwrap()], vec![]);
        let dot = export_dot(&one, None);
        assert!(dot.contains("n0 [label=\"1/2 ⊕ 2/3 ⊕ 3\"];"));
        assert!(!dot.contains("->"));
        let h = hasse(&l, 100).unwrap();
        let dot = export_dot(&h, Some(&|i| i == 0 || i == 1));
        assert_eq!(dot.matches(" -> ").count(), 18);
        assert_eq!(dot.matches("label=").count(), 30);
        assert!(
            dot.contains("n0 -> n1 [label=")
                && dot.lines().any(|l| l.starts_with("  n0 -> n1") && l.contains("dashed"))
        );
        assert_eq!(dot, export_dot(&hasse(&l, 100).unwrap(), Some(&|i| i == 0 || i == 1)));
    }
}
