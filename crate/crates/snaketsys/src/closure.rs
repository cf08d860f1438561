//! Maximum-weight closure via a minimum cut.
//!
//! Given a finite poset with integer vertex weights, a lower-closed subset maximizing the
//! total weight is found by the classical reduction: connect the source to every positive
//! vertex with capacity `w`, every negative vertex to the sink with capacity `-w`, and
//! every vertex to each of its predecessors with infinite capacity. The optimum is the
//! sum of positive weights minus the value of a minimum cut, and the source side of the
//! cut is an optimal closed set. The maximum flow itself is computed by `petgraph`'s
//! implementation of Dinic's algorithm.

use petgraph::algo::dinics;
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::visit::EdgeRef;
use petgraph::Direction;
use std::collections::VecDeque;

/// Capacity standing in for `∞`; larger than any total of weights used here.
const INF: u64 = u64::MAX / 4;

/// Maximum total weight of a lower-closed subset.
///
/// `below[v]` lists the elements `u` with `u ⪯ v` (or any generating subset of those
/// relations); a subset is lower closed when it contains `below[v]` whenever it contains
/// `v`. Returns the optimum and a membership mask of an optimal subset.
pub fn max_weight_closure(weights: &[i64], below: &[Vec<usize>]) -> (i64, Vec<bool>) {
    let m = weights.len();
    let mut g = DiGraph::<(), u64>::new();
    let nodes: Vec<NodeIndex> = (0..m + 2).map(|_| g.add_node(())).collect();
    let (s, t) = (nodes[m], nodes[m + 1]);
    let mut positive = 0;
    for (v, &w) in weights.iter().enumerate() {
        if w > 0 {
            positive += w;
            g.add_edge(s, nodes[v], w.unsigned_abs());
        } else if w < 0 {
            g.add_edge(nodes[v], t, w.unsigned_abs());
        }
        for &u in &below[v] {
            if u != v {
                g.add_edge(nodes[v], nodes[u], INF);
            }
        }
    }
    let (cut, flows) = dinics(&g, s, t);
    // The source side of a minimum cut: everything reachable from s in the residual graph.
    let mut side = vec![false; m + 2];
    side[s.index()] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let forward = g
            .edges_directed(u, Direction::Outgoing)
            .filter(|e| flows[e.id().index()] < *e.weight())
            .map(|e| e.target());
        let backward = g
            .edges_directed(u, Direction::Incoming)
            .filter(|e| flows[e.id().index()] > 0)
            .map(|e| e.source());
        for x in forward.chain(backward).collect::<Vec<_>>() {
            if !side[x.index()] {
                side[x.index()] = true;
                queue.push_back(x);
            }
        }
    }
    side.truncate(m);
    (positive - cut as i64, side)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_closure() {
        // Chain 0 ⪯ 1 ⪯ 2 with weights (-1, 3, -5): best ideal is {0, 1}.
        let below = vec![vec![], vec![0], vec![0, 1]];
        let (best, mask) = max_weight_closure(&[-1, 3, -5], &below);
        assert_eq!(best, 2);
        assert_eq!(mask, vec![true, true, false]);
    }

    #[test]
    fn empty_set_is_allowed() {
        let below = vec![vec![], vec![0]];
        assert_eq!(max_weight_closure(&[-2, 1], &below).0, 0);
    }
}
