//! Quasi-identifying codes around a strong induced matching.
//!
//! A strong induced matching M splits its surroundings into the endpoint
//! set R and the independent neighbourhood L. A quasi-identifying code on
//! g[L + R] dominates it, separates everything except L-pairs with equal
//! neighbourhoods, and touches every matched edge. Two constructions live
//! here: an orientation argument for the part of R whose vertices all have
//! degree two, and the general two-candidate construction layered on top.

use crate::certify;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// A strong induced matching with the degree-two split precomputed.
///
/// `r1` holds the endpoints of edges whose two ends both have degree
/// exactly 2 in the host graph, `r2` the rest. `l1` is the part of L seen
/// by `r1`; since a degree-2 endpoint sees only its partner and one
/// L-vertex, no `r1` vertex can reach `l2`.
#[derive(Clone, Debug)]
pub struct StrongMatching {
    /// Matched edges as (min, max) pairs, ascending.
    pub edges: Vec<(usize, usize)>,
    pub r: VertexSet,
    pub l: VertexSet,
    pub r1: VertexSet,
    pub r2: VertexSet,
    pub l1: VertexSet,
    pub l2: VertexSet,
    /// partner[v] is v's matched neighbour, usize::MAX outside R.
    partner: Vec<usize>,
}

impl StrongMatching {
    /// Derives the full split from a list of matched edges. Panics unless
    /// the edges really form a strong induced matching; use
    /// `certify::is_strong_induced_matching` first when in doubt.
    pub fn from_edges(g: &Graph, edges: &[(usize, usize)]) -> StrongMatching {
        assert!(
            certify::is_strong_induced_matching(g, edges),
            "edges do not form a strong induced matching: {edges:?}"
        );
        let mut edges: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort();

        let n = g.n();
        let mut r = VertexSet::new(n);
        let mut partner = vec![usize::MAX; n];
        for &(u, v) in &edges {
            r.insert(u);
            r.insert(v);
            partner[u] = v;
            partner[v] = u;
        }
        let mut l = VertexSet::new(n);
        for x in r.iter() {
            l.union_with(g.neighbors(x));
        }
        l.difference_with(&r);

        let mut r1 = VertexSet::new(n);
        for &(u, v) in &edges {
            if g.degree(u) == 2 && g.degree(v) == 2 {
                r1.insert(u);
                r1.insert(v);
            }
        }
        let r2 = r.difference(&r1);
        let mut l1 = VertexSet::new(n);
        for x in r1.iter() {
            l1.union_with(g.neighbors(x));
        }
        l1.intersect_with(&l);
        let l2 = l.difference(&l1);

        for x in r1.iter() {
            assert!(
                g.neighbors(x).is_disjoint(&l2),
                "degree-two endpoint {x} reaches outside l1"
            );
        }
        StrongMatching {
            edges,
            r,
            l,
            r1,
            r2,
            l1,
            l2,
            partner,
        }
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v]
    }

    /// The matched edges with both ends of degree two.
    pub fn deg2_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, _)| self.r1.contains(u))
            .collect()
    }
}

/// A quasi-identifying code and what it leaves uncovered inside L + R.
#[derive(Clone, Debug)]
pub struct QuasiCode {
    pub code: VertexSet,
    /// (L + R) minus the code; at least |L|/3 vertices stay out.
    pub leftover: VertexSet,
}

/// Collects the matching the proofs work with: every edge whose endpoints
/// both have degree at least 2 and whose entire outside neighbourhood lies
/// in the independent set `s`. Equivalently, the isolated edges of the
/// complement of `s` once pendant edges are discarded.
pub fn extract_strong_matching(g: &Graph, s: &VertexSet) -> Result<StrongMatching> {
    for u in s.iter() {
        if let Some(v) = g.neighbors(u).intersection(s).first() {
            return Err(Error::NotIndependent { u, v });
        }
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if g.degree(u) < 2 || g.degree(v) < 2 {
            continue;
        }
        let mut outside = g.neighbors(u).union(g.neighbors(v));
        outside.remove(u);
        outside.remove(v);
        if outside.is_subset(s) {
            edges.push((u, v));
        }
    }
    Ok(StrongMatching::from_edges(g, &edges))
}

/// One contracted 3-path l_a - r_a - r_b - l_b, stored with its current
/// orientation. The code picks up whichever endpoint's R-neighbour sits at
/// the head of the arc.
#[derive(Clone, Debug)]
struct Arc {
    la: usize,
    ra: usize,
    rb: usize,
    lb: usize,
    toward_lb: bool,
}

impl Arc {
    fn head(&self) -> usize {
        if self.toward_lb {
            self.lb
        } else {
            self.la
        }
    }

    /// The R-vertex adjacent to the head; this is the one the code takes.
    fn code_member(&self) -> usize {
        if self.toward_lb {
            self.rb
        } else {
            self.ra
        }
    }

    fn other_member(&self) -> usize {
        if self.toward_lb {
            self.ra
        } else {
            self.rb
        }
    }
}

/// Builds a quasi-identifying code for the degree-two part (l1, r1) of the
/// matching via the orientation argument: contract each 3-path between two
/// L-vertices to a multigraph arc, sweep each spanning tree bottom-up
/// flipping the parent arc of any vertex with in-degree exactly 1, and
/// repair roots stuck at in-degree 1 by swapping them for the far endpoint
/// of their incoming path. The result takes all of l1 plus one endpoint per
/// matched edge.
pub fn quasi_code_deg2(g: &Graph, sm: &StrongMatching) -> Result<QuasiCode> {
    for v in sm.r1.iter() {
        if g.degree(v) != 2 {
            return Err(Error::DegreeTwoViolated { v, deg: g.degree(v) });
        }
    }
    let n = g.n();

    // Contract each degree-two matched edge into an arc between the two
    // L-vertices its endpoints see.
    let mut arcs: Vec<Arc> = Vec::new();
    for (u, v) in sm.deg2_edges() {
        let lu = g
            .neighbors(u)
            .intersection(&sm.l)
            .first()
            .expect("degree-2 endpoint has an L-neighbour");
        let lv = g
            .neighbors(v)
            .intersection(&sm.l)
            .first()
            .expect("degree-2 endpoint has an L-neighbour");
        // Triangle-freeness rules out lu == lv (it would close a triangle
        // with the matched edge).
        assert_ne!(lu, lv, "contracted edge became a loop");
        let (la, ra, rb, lb) = if lu < lv { (lu, u, v, lv) } else { (lv, v, u, lu) };
        arcs.push(Arc {
            la,
            ra,
            rb,
            lb,
            toward_lb: true,
        });
    }

    // Multigraph adjacency (arc indices) and live in-degrees.
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for (i, arc) in arcs.iter().enumerate() {
        incident[arc.la].push(i);
        incident[arc.lb].push(i);
        indeg[arc.head()] += 1;
    }

    let mut visited = VertexSet::new(n);
    let mut depth = vec![0usize; n];
    let mut parent_arc = vec![usize::MAX; n];
    let mut roots = Vec::new();
    for start in sm.l1.iter() {
        if visited.contains(start) {
            continue;
        }
        roots.push(start);
        // Iterative depth-first spanning tree rooted at the lowest id.
        let mut comp = vec![start];
        visited.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &ai in &incident[v] {
                let arc = &arcs[ai];
                let w = if arc.la == v { arc.lb } else { arc.la };
                if !visited.contains(w) {
                    visited.insert(w);
                    depth[w] = depth[v] + 1;
                    parent_arc[w] = ai;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }

        // Bottom-up sweep: deepest first, ties by id, root excluded. A flip
        // moves the current vertex to in-degree 0 or 2 and only ever touches
        // the arc to its parent, so earlier vertices stay settled.
        comp.sort_by(|&a, &b| depth[b].cmp(&depth[a]).then(a.cmp(&b)));
        for &v in &comp {
            if v == start || indeg[v] != 1 {
                continue;
            }
            let arc = &mut arcs[parent_arc[v]];
            indeg[arc.head()] -= 1;
            arc.toward_lb = !arc.toward_lb;
            indeg[arc.head()] += 1;
        }
    }

    // Assemble: all of l1 plus the head-side R-vertex of every arc.
    let mut code = sm.l1.clone();
    for arc in &arcs {
        code.insert(arc.code_member());
    }

    // Roots stuck at in-degree 1 swap out for the far endpoint of their
    // unique incoming path, keeping the size unchanged.
    for &root in &roots {
        if indeg[root] != 1 {
            continue;
        }
        let ai = incident[root]
            .iter()
            .copied()
            .find(|&ai| arcs[ai].head() == root)
            .expect("in-degree 1 vertex has an incoming arc");
        code.remove(root);
        code.insert(arcs[ai].other_member());
    }

    let leftover = sm.l1.union(&sm.r1).difference(&code);

    // The three promised ledgers, plus full quasi-identification of the
    // degree-two substructure.
    assert!(2 * code.len() <= 2 * sm.l1.len() + sm.r1.len());
    for v in sm.r1.intersection(&code).iter() {
        assert!(
            !g.neighbors(v).is_disjoint(&code),
            "R-vertex {v} is isolated in the code"
        );
    }
    assert!(2 * code.intersection_len(&sm.l1) >= sm.l1.len());
    let sub = StrongMatching::from_edges(g, &sm.deg2_edges());
    assert!(
        certify::is_quasi_identifying(g, &sub, &code)?,
        "degree-two code failed quasi-identification"
    );
    Ok(QuasiCode { code, leftover })
}

/// Builds both candidate codes of the general construction and returns the
/// smaller (ties toward the first). Candidate A extends the degree-two code
/// with all of l2 and one well-connected endpoint per remaining matched
/// edge; candidate B instead takes all of r2 plus one L-neighbour per edge.
/// Both candidates then swap out any code L-vertex with no code neighbour.
pub fn quasi_code_general(g: &Graph, sm: &StrongMatching) -> QuasiCode {
    let (lr_graph, _) = g.induced_subgraph(&sm.l.union(&sm.r));
    assert!(
        lr_graph.is_identifiable(),
        "the matched substructure must be identifiable"
    );

    let c1 = quasi_code_deg2(g, sm)
        .expect("degree-two split is consistent by construction")
        .code;
    let r2_edges: Vec<(usize, usize)> = sm
        .edges
        .iter()
        .copied()
        .filter(|&(u, _)| sm.r2.contains(u))
        .collect();

    // Candidate A.
    let mut ca = c1.union(&sm.l2);
    let mut picked = Vec::new();
    for &(u, v) in &r2_edges {
        let star = [u, v]
            .into_iter()
            .find(|&x| g.neighbors(x).intersection_len(&sm.l) >= 2)
            .expect("an R2 edge has an endpoint of degree at least 3");
        ca.insert(star);
        picked.push(star);
    }
    // Top up: each picked endpoint wants two code neighbours inside L.
    for &star in &picked {
        let in_l = g.neighbors(star).intersection(&sm.l);
        if in_l.intersection_len(&ca) < 2 {
            let extra = in_l
                .difference(&ca)
                .first()
                .expect("an endpoint with fewer than 2 covered neighbours has a spare");
            ca.insert(extra);
        }
    }
    repair_isolated_l(g, sm, &mut ca);
    assert!(
        2 * ca.len()
            <= 2 * sm.l1.len() + sm.r1.len() + 2 * sm.l2.len() + sm.r2.len()
                + sm.l1.len().min(sm.r2.len())
    );

    // Candidate B.
    let mut cb = c1.union(&sm.r2);
    for &(u, v) in &r2_edges {
        let nbhd = g.neighbors(u).union(g.neighbors(v)).intersection(&sm.l);
        cb.insert(nbhd.first().expect("every R-vertex has an L-neighbour"));
    }
    repair_isolated_l(g, sm, &mut cb);
    assert!(2 * cb.len() <= 2 * sm.l1.len() + sm.r1.len() + 3 * sm.r2.len());

    for cand in [&ca, &cb] {
        assert!(
            certify::is_quasi_identifying(g, sm, cand).expect("candidate stays inside L and R"),
            "candidate code failed quasi-identification"
        );
        assert!(
            certify::s_isolated_vertices(g, cand).is_empty(),
            "candidate code has isolated members"
        );
    }

    let code = if ca.len() <= cb.len() { ca } else { cb };
    let leftover = sm.l.union(&sm.r).difference(&code);
    assert!(
        3 * leftover.len() >= sm.l.len(),
        "leftover fell below a third of L"
    );
    QuasiCode { code, leftover }
}

/// Swaps every code L-vertex with no code neighbour for its lowest R-
/// neighbour. L is independent, so removals never isolate other L-vertices,
/// and a removed vertex had no code neighbour to lose.
fn repair_isolated_l(g: &Graph, sm: &StrongMatching, code: &mut VertexSet) {
    for l in sm.l.intersection(code).iter() {
        if g.neighbors(l).is_disjoint(code) {
            code.remove(l);
            let sub = g
                .neighbors(l)
                .intersection(&sm.r)
                .first()
                .expect("L-vertices neighbour R by definition");
            code.insert(sub);
        }
    }
}
