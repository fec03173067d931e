//! Simple undirected graphs with bit-vector adjacency rows.
//!
//! Neighbourhood comparisons (twin detection, false-twin classes, trace
//! equality) all reduce to word-parallel operations on the rows, which keeps
//! the certification loops near O(n^2) words instead of O(n^2) edges.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An immutable simple graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
    deg: Vec<usize>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Edges are undirected; duplicates
    /// collapse silently (callers that care can compare `edge_count` with the
    /// number of pairs supplied). Loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge { u, v });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { v: w, n });
                }
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let deg: Vec<usize> = adj.iter().map(|row| row.len()).collect();
        let m = deg.iter().sum::<usize>() / 2;
        Ok(Graph { n, m, adj, deg })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.deg[v]
    }

    pub fn max_degree(&self) -> usize {
        self.deg.iter().copied().max().unwrap_or(0)
    }

    /// Average degree as the exact fraction (2m, n). Kept rational so bound
    /// checks never round.
    pub fn average_degree_fraction(&self) -> (u64, u64) {
        (2 * self.m as u64, self.n as u64)
    }

    /// Open neighbourhood N(v).
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed ball B(v) = N(v) plus v itself.
    pub fn closed_ball(&self, v: usize) -> VertexSet {
        let mut b = self.adj[v].clone();
        b.insert(v);
        b
    }

    /// All closed balls at once; the certification loops index this heavily.
    pub fn closed_balls(&self) -> Vec<VertexSet> {
        self.vertices().map(|v| self.closed_ball(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as (min, max) pairs in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Finds a triangle if one exists. For each edge (u, v) the common
    /// neighbourhood N(u) and N(v) is intersected word by word.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for u in self.vertices() {
            for v in self.adj[u].iter() {
                if v <= u {
                    continue;
                }
                let common = self.adj[u].intersection(&self.adj[v]);
                if let Some(w) = common.first() {
                    return Some((u, v, w));
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Finds a twin pair, i.e. two vertices with equal closed balls. Twins
    /// are necessarily adjacent (each lies in the other's ball), so only
    /// edges need checking.
    pub fn find_twins(&self) -> Option<(usize, usize)> {
        let balls = self.closed_balls();
        for u in self.vertices() {
            for v in self.adj[u].iter() {
                if v > u && balls[u] == balls[v] {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// A graph admits an identifying code at all iff it has no twins.
    pub fn is_identifiable(&self) -> bool {
        self.find_twins().is_none()
    }

    /// Connected components, each as a vertex set, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            let mut queue = vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(u) = queue.pop() {
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.insert(v);
                        queue.push(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `s`, relabelled to 0..|s| in ascending id order.
    /// Returns the subgraph and the map from new ids back to originals.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let back: Vec<usize> = s.to_vec();
        let mut fwd = vec![usize::MAX; self.n];
        for (new, &old) in back.iter().enumerate() {
            fwd[old] = new;
        }
        let mut edges = Vec::new();
        for &old_u in &back {
            for old_v in self.adj[old_u].iter() {
                if old_u < old_v && s.contains(old_v) {
                    edges.push((fwd[old_u], fwd[old_v]));
                }
            }
        }
        let g = Graph::from_edge_list(back.len(), &edges)
            .expect("relabelled edges are always in range");
        (g, back)
    }

    /// Vertices of degree exactly one.
    pub fn degree_one_vertices(&self) -> VertexSet {
        VertexSet::from_iter(self.n, self.vertices().filter(|&v| self.deg[v] == 1))
    }

    /// Groups vertices by open neighbourhood. Sorting the adjacency rows
    /// costs O(n log n) row comparisons, each word-parallel.
    pub fn false_twin_classes(&self) -> FalseTwinPartition {
        let mut order: Vec<usize> = self.vertices().collect();
        order.sort_by(|&a, &b| self.adj[a].cmp(&self.adj[b]).then(a.cmp(&b)));

        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match classes.last_mut() {
                Some(cur) if self.adj[cur[0]] == self.adj[v] => cur.push(v),
                _ => classes.push(vec![v]),
            }
        }
        classes.sort_by_key(|c| c[0]);

        let delta = self.max_degree();
        let mut x = VertexSet::new(self.n);
        let mut nontrivial = Vec::new();
        for class in &classes {
            if class.len() >= 2 {
                // Members of a nontrivial class share every neighbour, so
                // when they have any neighbour at all the class size is
                // capped by that neighbour's degree.
                if self.deg[class[0]] > 0 {
                    assert!(
                        class.len() <= delta,
                        "false-twin class {:?} exceeds the maximum degree {}",
                        class,
                        delta
                    );
                }
                for &v in class {
                    x.insert(v);
                }
                nontrivial.push(class.clone());
            }
        }
        let y = VertexSet::full(self.n).difference(&x);
        FalseTwinPartition {
            classes,
            nontrivial,
            x,
            y,
        }
    }

    /// Length of a shortest cycle, or None for forests. BFS from every
    /// vertex; only used for reporting, not on any hot path.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in self.vertices() {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let cycle = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }
}

/// The partition of V by open neighbourhood. Two non-adjacent vertices with
/// N(u) = N(v) are false twins; `x` collects every vertex lying in a
/// nontrivial class, `y` is its complement.
#[derive(Clone, Debug)]
pub struct FalseTwinPartition {
    /// Every equivalence class, sorted internally and ordered by smallest
    /// member. Includes the singletons.
    pub classes: Vec<Vec<usize>>,
    /// Classes of size two or more.
    pub nontrivial: Vec<Vec<usize>>,
    /// Union of the nontrivial classes.
    pub x: VertexSet,
    /// V minus x: the vertices with no false twin.
    pub y: VertexSet,
}

impl FalseTwinPartition {
    /// Number of nontrivial classes, the |F| in the size ledger n - |F|.
    pub fn f(&self) -> usize {
        self.nontrivial.len()
    }
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

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(Error::LoopEdge { .. })
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { v: 3, n: 3 })
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(0), 1);
    }

    #[test]
    fn balls_and_degrees() {
        let g = path(4);
        assert_eq!(g.closed_ball(0).to_vec(), vec![0, 1]);
        assert_eq!(g.closed_ball(1).to_vec(), vec![0, 1, 2]);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.degree_one_vertices().to_vec(), vec![0, 3]);
        for v in g.vertices() {
            assert!(g.closed_ball(v).contains(v));
            assert_eq!(g.closed_ball(v).len(), g.degree(v) + 1);
        }
    }

    #[test]
    fn triangle_detection() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(g.find_triangle(), Some((0, 1, 2)));
        assert!(cycle(5).is_triangle_free());
        assert!(path(6).is_triangle_free());
    }

    #[test]
    fn twin_detection() {
        // An isolated edge is the smallest twin pair.
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(g.find_twins(), Some((0, 1)));
        assert!(!g.is_identifiable());
        // A triangle with a pendant: vertices 0 and 1 both see {0,1,2}.
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(g.find_twins(), Some((0, 1)));
        assert!(path(4).is_identifiable());
        assert!(cycle(4).is_identifiable());
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edge_list(5, &[(0, 1), (2, 3)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![2, 3]);
        assert_eq!(comps[2].to_vec(), vec![4]);
        assert!(!g.is_connected());
        assert!(cycle(6).is_connected());
        assert!(Graph::from_edge_list(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = cycle(6);
        let s = VertexSet::from_iter(6, [1, 2, 4, 5]);
        let (h, back) = g.induced_subgraph(&s);
        assert_eq!(back, vec![1, 2, 4, 5]);
        assert_eq!(h.n(), 4);
        // Surviving edges: (1,2) and (4,5).
        assert_eq!(h.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn false_twins_in_star() {
        // Star on 5 vertices: the four leaves share the neighbourhood {0}.
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let p = g.false_twin_classes();
        assert_eq!(p.f(), 1);
        assert_eq!(p.nontrivial[0], vec![1, 2, 3, 4]);
        assert_eq!(p.x.to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(p.y.to_vec(), vec![0]);
    }

    #[test]
    fn false_twins_in_complete_bipartite() {
        // K_{3,3}: both sides are nontrivial classes, Y is empty.
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, b));
            }
        }
        let g = Graph::from_edge_list(6, &edges).unwrap();
        let p = g.false_twin_classes();
        assert_eq!(p.f(), 2);
        assert!(p.y.is_empty());
        assert_eq!(p.classes.len(), 2);
    }

    #[test]
    fn no_false_twins_in_long_cycle() {
        let p = cycle(7).false_twin_classes();
        assert_eq!(p.f(), 0);
        assert_eq!(p.y.len(), 7);
        assert_eq!(p.classes.len(), 7);
    }

    #[test]
    fn girth_values() {
        assert_eq!(path(5).girth(), None);
        assert_eq!(cycle(4).girth(), Some(4));
        assert_eq!(cycle(9).girth(), Some(9));
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn false_twin_classes_match_naive_definition() {
        // Cross-check the sorted grouping against a quadratic scan on a few
        // structured graphs.
        let graphs = [cycle(8), path(7), {
            let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4)];
            edges.extend([(1, 5), (1, 6), (3, 7), (3, 8)]);
            Graph::from_edge_list(9, &edges).unwrap()
        }];
        for g in &graphs {
            let p = g.false_twin_classes();
            for u in g.vertices() {
                for v in g.vertices() {
                    let same_class = p
                        .classes
                        .iter()
                        .any(|c| c.contains(&u) && c.contains(&v));
                    let same_nbhd = g.neighbors(u) == g.neighbors(v);
                    assert_eq!(same_class, same_nbhd, "u={u} v={v}");
                }
            }
        }
    }
}
