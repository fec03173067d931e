//! Definition-level checkers for every property the constructions promise.
//!
//! Nothing in this module is clever: each predicate walks the definition it
//! states, so the builders elsewhere in the crate can be validated against
//! it. The only optimisation is grouping equal traces through a sort instead
//! of comparing all pairs directly, which the failure enumeration needs
//! anyway to report every offending pair.

use crate::graph::Graph;
use crate::lr_codes::StrongMatching;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// One reason a candidate code fails to identify.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SeparationFailure {
    /// The vertex has an empty trace: no code vertex in its closed ball.
    Undominated { vertex: usize },
    /// The two vertices have equal, nonempty-or-empty traces.
    Unseparated { u: usize, v: usize },
}

/// True iff every vertex of `within` has a code vertex in its closed ball.
pub fn is_dominating(g: &Graph, code: &VertexSet, within: &VertexSet) -> bool {
    within
        .iter()
        .all(|v| !g.closed_ball(v).is_disjoint(code))
}

/// Enumerates every vertex the code fails to dominate and every pair it
/// fails to separate, in ascending vertex order. An empty result certifies
/// `code` as an identifying code of `g`.
pub fn identifying_failures(g: &Graph, code: &VertexSet) -> Vec<SeparationFailure> {
    let traces: Vec<VertexSet> = g
        .vertices()
        .map(|v| g.closed_ball(v).intersection(code))
        .collect();

    let mut failures = Vec::new();
    for v in g.vertices() {
        if traces[v].is_empty() {
            failures.push(SeparationFailure::Undominated { vertex: v });
        }
    }

    // Group vertices with equal traces; every pair inside a group is
    // unseparated.
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by(|&a, &b| traces[a].cmp(&traces[b]).then(a.cmp(&b)));
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && traces[order[i]] == traces[order[j]] {
            j += 1;
        }
        for a in i..j {
            for b in a + 1..j {
                let (u, v) = (order[a].min(order[b]), order[a].max(order[b]));
                failures.push(SeparationFailure::Unseparated { u, v });
            }
        }
        i = j;
    }
    failures.sort();
    failures
}

/// Convenience wrapper: no failures at all.
pub fn is_identifying_code(g: &Graph, code: &VertexSet) -> bool {
    identifying_failures(g, code).is_empty()
}

/// True iff `code` is an identifying code of the induced subgraph g[s].
/// Balls are taken inside the subgraph, not the host graph.
pub fn is_s_identifying(g: &Graph, s: &VertexSet, code: &VertexSet) -> Result<bool> {
    if let Some(v) = code.iter().find(|&v| !s.contains(v)) {
        return Err(Error::CodeOutsideSet { v });
    }
    let (sub, back) = g.induced_subgraph(s);
    let mapped = VertexSet::from_iter(
        sub.n(),
        (0..sub.n()).filter(|&new| code.contains(back[new])),
    );
    Ok(identifying_failures(&sub, &mapped).is_empty())
}

/// Vertices of `s` with no neighbour in `s`.
pub fn s_isolated_vertices(g: &Graph, s: &VertexSet) -> VertexSet {
    VertexSet::from_iter(
        g.n(),
        s.iter().filter(|&x| g.neighbors(x).is_disjoint(s)),
    )
}

/// Checks that `edges` forms a strong induced matching of `g`:
/// it is an induced matching, the neighbourhood L of its endpoint set R
/// is independent, and every endpoint has a neighbour in L.
pub fn is_strong_induced_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
    // A matching made of actual edges, no endpoint repeated.
    let mut r = VertexSet::new(g.n());
    for &(u, v) in edges {
        if u >= g.n() || v >= g.n() || u == v || !g.has_edge(u, v) {
            return false;
        }
        if r.contains(u) || r.contains(v) {
            return false;
        }
        r.insert(u);
        r.insert(v);
    }
    // Induced: inside R, each endpoint sees exactly its partner.
    for &(u, v) in edges {
        if g.neighbors(u).intersection_len(&r) != 1 || g.neighbors(v).intersection_len(&r) != 1 {
            return false;
        }
    }
    // L is the outside neighbourhood of R; it must be independent and must
    // touch every endpoint.
    let mut l = VertexSet::new(g.n());
    for x in r.iter() {
        l.union_with(g.neighbors(x));
    }
    l.difference_with(&r);
    if l.iter().any(|x| !g.neighbors(x).is_disjoint(&l)) {
        return false;
    }
    let every_endpoint_touches_l = r.iter().all(|x| !g.neighbors(x).is_disjoint(&l));
    every_endpoint_touches_l
}

/// Checks the three quasi-identification conditions for a code on the
/// subgraph induced by L and R: domination, separation of all pairs except
/// L-pairs with equal subgraph neighbourhoods, and coverage of every
/// matching edge.
pub fn is_quasi_identifying(g: &Graph, sm: &StrongMatching, code: &VertexSet) -> Result<bool> {
    let lr = sm.l.union(&sm.r);
    if let Some(v) = code.iter().find(|&v| !lr.contains(v)) {
        return Err(Error::CodeOutsideSet { v });
    }
    let (sub, back) = g.induced_subgraph(&lr);
    let in_l = |new: usize| sm.l.contains(back[new]);
    let mapped = VertexSet::from_iter(
        sub.n(),
        (0..sub.n()).filter(|&new| code.contains(back[new])),
    );

    // Condition 1: domination inside the subgraph.
    if !is_dominating(&sub, &mapped, &VertexSet::full(sub.n())) {
        return Ok(false);
    }
    // Condition 2: separation, except L-pairs sharing a neighbourhood.
    let traces: Vec<VertexSet> = (0..sub.n())
        .map(|v| sub.closed_ball(v).intersection(&mapped))
        .collect();
    for u in 0..sub.n() {
        for v in u + 1..sub.n() {
            if traces[u] != traces[v] {
                continue;
            }
            let exempt = in_l(u) && in_l(v) && sub.neighbors(u) == sub.neighbors(v);
            if !exempt {
                return Ok(false);
            }
        }
    }
    // Condition 3: each matching edge contributes an endpoint.
    Ok(sm
        .edges
        .iter()
        .all(|&(u, v)| code.contains(u) || code.contains(v)))
}

/// Checks the four conditions under which the complement of an independent
/// set is an identifying code: no isolated vertex of `g` inside `s`, no
/// false-twin pair inside `s`, a non-`s` vertex at distance two from every
/// degree-1 vertex, and no isolated edge in the complement. When they hold
/// the conclusion is asserted before returning.
pub fn check_complement_code_conditions(g: &Graph, s: &VertexSet) -> Result<bool> {
    for u in s.iter() {
        if let Some(v) = g.neighbors(u).intersection(s).first() {
            return Err(Error::NotIndependent { u, v });
        }
    }

    // Condition 1: no isolated vertex of the graph inside s.
    if s.iter().any(|v| g.degree(v) == 0) {
        return Ok(false);
    }
    // Condition 2: no false twins inside s.
    let members: Vec<usize> = s.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.neighbors(u) == g.neighbors(v) {
                return Ok(false);
            }
        }
    }
    // Condition 3: every degree-1 vertex has a distance-2 vertex outside s.
    for u in g.degree_one_vertices().iter() {
        let w = g.neighbors(u).first().expect("degree-1 vertex");
        let mut dist2 = g.neighbors(w).clone();
        dist2.remove(u);
        if dist2.is_empty() || dist2.is_subset(s) {
            return Ok(false);
        }
    }
    // Condition 4: the complement induces no isolated edge.
    let complement = VertexSet::full(g.n()).difference(s);
    let (sub, _) = g.induced_subgraph(&complement);
    for comp in sub.components() {
        if comp.len() == 2 {
            return Ok(false);
        }
    }

    let failures = identifying_failures(g, &complement);
    assert!(
        failures.is_empty(),
        "complement conditions held but V \\ S failed to identify: {failures:?}"
    );
    Ok(true)
}
