//! Exhaustive minimum identifying code search for small graphs.
//!
//! Two independent implementations: a branch-and-bound over hitting-set
//! constraints, and a plain enumeration that tests every subset against the
//! definitional checker. They must agree; the tests hold them to that. The
//! solver is the ground truth the construction pipeline is validated
//! against, so being slow and obviously correct beats being clever.

use crate::certify;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// Largest instance the solver accepts unless the caller raises the limit.
/// Each size step enumerates on the order of 2^16 candidate sets.
pub const DEFAULT_VERTEX_LIMIT: usize = 16;

#[derive(Clone, Debug)]
pub struct ExactResult {
    pub size: usize,
    pub witness: VertexSet,
    /// Search nodes visited (pruned path) or subsets tested (naive path).
    pub explored: u64,
}

/// max(ceil(log2(n+1)), ceil(2n/(delta+2))): every identifying code needs
/// enough members to give n distinct nonempty traces, and each member
/// reaches at most delta+2 of the trace slots.
pub fn lower_bound(n: usize, delta: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let log_term = (usize::BITS - n.leading_zeros()) as usize;
    let degree_term = (2 * n).div_ceil(delta + 2);
    log_term.max(degree_term)
}

/// Minimum identifying code by iterative deepening over hitting-set
/// constraints: the code must intersect every closed ball (domination) and
/// every symmetric difference of two balls (separation).
pub fn min_identifying_code(g: &Graph, vertex_limit: usize) -> Result<ExactResult> {
    check_preconditions(g, vertex_limit)?;
    let n = g.n();
    if n == 0 {
        return Ok(ExactResult {
            size: 0,
            witness: VertexSet::new(0),
            explored: 0,
        });
    }

    let balls: Vec<u64> = g
        .vertices()
        .map(|v| {
            let mut mask = 1u64 << v;
            for w in g.neighbors(v).iter() {
                mask |= 1 << w;
            }
            mask
        })
        .collect();
    let mut constraints: Vec<u64> = Vec::new();
    constraints.extend(&balls);
    for u in 0..n {
        for v in u + 1..n {
            constraints.push(balls[u] ^ balls[v]);
        }
    }
    // Identifiability was checked, so no constraint is empty.
    debug_assert!(constraints.iter().all(|&c| c != 0));
    constraints.sort_by_key(|&c| (c.count_ones(), c));
    constraints.dedup();

    let mut explored = 0u64;
    for k in lower_bound(n, g.max_degree())..=n {
        if let Some(mask) = search(&constraints, 0, 0, k, &mut explored) {
            let witness = VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            debug_assert!(certify::is_identifying_code(g, &witness));
            return Ok(ExactResult {
                size: k,
                witness,
                explored,
            });
        }
    }
    unreachable!("the full vertex set always identifies an identifiable graph")
}

/// Finds a hitting set of size at most `budget` extending `chosen`, with
/// `excluded` vertices barred. Branches over the candidates of the first
/// unhit constraint; barring earlier candidates in later branches keeps the
/// enumeration duplicate-free.
fn search(
    constraints: &[u64],
    chosen: u64,
    excluded: u64,
    budget: usize,
    explored: &mut u64,
) -> Option<u64> {
    *explored += 1;
    let Some(&target) = constraints.iter().find(|&&c| c & chosen == 0) else {
        return Some(chosen);
    };
    if budget == 0 {
        return None;
    }
    // Disjoint unhit constraints each demand their own vertex.
    let mut needed = 0usize;
    let mut acc = 0u64;
    for &c in constraints {
        if c & chosen == 0 && c & acc == 0 {
            needed += 1;
            acc |= c;
            if needed > budget {
                return None;
            }
        }
    }

    let mut barred = excluded;
    let mut candidates = target & !excluded;
    while candidates != 0 {
        let v = candidates.trailing_zeros();
        let bit = 1u64 << v;
        candidates ^= bit;
        if let Some(hit) = search(constraints, chosen | bit, barred, budget - 1, explored) {
            return Some(hit);
        }
        barred |= bit;
    }
    None
}

/// The dumb path: for each size, try every subset in lexicographic order
/// and hand it to the definitional checker. Exists purely to cross-examine
/// the pruned search.
pub fn min_identifying_code_naive(g: &Graph, vertex_limit: usize) -> Result<ExactResult> {
    check_preconditions(g, vertex_limit)?;
    let n = g.n();
    let mut explored = 0u64;
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let set = VertexSet::from_iter(n, combo.iter().copied());
            explored += 1;
            if certify::is_identifying_code(g, &set) {
                return Ok(ExactResult {
                    size: k,
                    witness: set,
                    explored,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set always identifies an identifiable graph")
}

/// Advances `combo` to the next k-combination of 0..n in lexicographic
/// order; false once the last combination has been seen.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn check_preconditions(g: &Graph, vertex_limit: usize) -> Result<()> {
    assert!(
        vertex_limit <= 64,
        "mask-based search supports at most 64 vertices"
    );
    if g.n() > vertex_limit {
        return Err(Error::TooLargeForExact {
            n: g.n(),
            limit: vertex_limit,
        });
    }
    if let Some((u, v)) = g.find_twins() {
        return Err(Error::NotIdentifiable { u, v });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(lower_bound(7, 2), 4);
        assert_eq!(lower_bound(6, 3), 3);
        assert_eq!(lower_bound(1, 1), 1);
        assert_eq!(lower_bound(0, 5), 0);
        // The log term dominates on big sparse-degree inputs.
        assert_eq!(lower_bound(15, 14), 4);
    }

    #[test]
    fn small_known_minima() {
        let cases: Vec<(Graph, usize)> = vec![
            (path(3), 2),
            (path(4), 3),
            (path(5), 3),
            (cycle(4), 3),
            (cycle(5), 3),
            (cycle(6), 3),
            (cycle(7), 5),
            (star(4), 3),
            (star(5), 4),
        ];
        for (g, expect) in cases {
            let res = min_identifying_code(&g, DEFAULT_VERTEX_LIMIT).unwrap();
            assert_eq!(res.size, expect, "graph n={}", g.n());
            assert!(certify::is_identifying_code(&g, &res.witness));
            assert!(res.size >= lower_bound(g.n(), g.max_degree()));
        }
    }

    #[test]
    fn path3_unique_witness() {
        let res = min_identifying_code(&path(3), 16).unwrap();
        assert_eq!(res.witness.to_vec(), vec![0, 2]);
    }

    #[test]
    fn rejects_twins_and_oversize() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            min_identifying_code(&k2, 16),
            Err(Error::NotIdentifiable { u: 0, v: 1 })
        ));
        assert!(matches!(
            min_identifying_code(&path(17), 16),
            Err(Error::TooLargeForExact { n: 17, limit: 16 })
        ));
        assert!(min_identifying_code(&path(17), 17).is_ok());
    }

    #[test]
    fn singleton_graph() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        let res = min_identifying_code(&g, 16).unwrap();
        assert_eq!(res.size, 1);
        assert_eq!(res.witness.to_vec(), vec![0]);
    }

    #[test]
    fn pruned_and_naive_paths_agree() {
        let mut graphs: Vec<Graph> = vec![
            path(3),
            path(6),
            cycle(4),
            cycle(5),
            cycle(7),
            star(6),
        ];
        // K_{3,3} and a tree with mixed degrees.
        let mut kb = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                kb.push((a, b));
            }
        }
        graphs.push(Graph::from_edge_list(6, &kb).unwrap());
        graphs.push(
            Graph::from_edge_list(8, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (6, 7)])
                .unwrap(),
        );
        for g in &graphs {
            let fast = min_identifying_code(g, 16).unwrap();
            let slow = min_identifying_code_naive(g, 16).unwrap();
            assert_eq!(fast.size, slow.size, "n={}", g.n());
            assert!(certify::is_identifying_code(g, &fast.witness));
            assert!(certify::is_identifying_code(g, &slow.witness));
        }
    }

    #[test]
    fn agreement_on_seeded_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1dc0de);
        let mut tested = 0;
        while tested < 25 {
            let n = rng.random_range(4..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            if !g.is_identifiable() {
                continue;
            }
            tested += 1;
            let fast = min_identifying_code(&g, 16).unwrap();
            let slow = min_identifying_code_naive(&g, 16).unwrap();
            assert_eq!(fast.size, slow.size);
        }
    }
}
