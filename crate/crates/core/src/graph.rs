//! Multigraph representation and perfect-matching primitives.
//!
//! Edge identity is positional: edge `k` is the `k`-th entry of the edge
//! list, and every vector indexed by edges uses that numbering. Parallel
//! edges are distinct edges sharing endpoints; self-loops are rejected.

use std::collections::BTreeSet;

use crate::blossom;
use crate::{EdgeId, Error, Result, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<EdgeId>>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (id, &(a, b)) in edges.iter().enumerate() {
            if a == b {
                return Err(Error::InvalidGraph(format!("edge {id} is a self-loop")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {id} ({a},{b}) has an endpoint outside 0..{n}"
                )));
            }
            adj[a].push(id);
            adj[b].push(id);
        }
        Ok(MultiGraph { n, edges, adj })
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if v == a {
            b
        } else {
            a
        }
    }

    /// Incident edge ids of `v`, ascending.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: VertexId) -> Vec<VertexId> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        let mut out = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            out.push(v);
            for &e in &self.adj[v] {
                let w = self.other_endpoint(e, v);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if !seen[s] {
                let comp = self.component_of(s);
                for &v in &comp {
                    seen[v] = true;
                }
                comps.push(comp);
            }
        }
        comps
    }

    /// 2-coloring of the underlying simple graph, if bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let cv = color[v].unwrap();
                for &e in &self.adj[v] {
                    let w = self.other_endpoint(e, v);
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            stack.push(w);
                        }
                        Some(cw) => {
                            if cw == cv {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph on the same vertex set keeping only `keep` (sorted, deduped).
    /// Edge `i` of the result is edge `keep[i]` of `self`.
    pub fn restrict_edges(&self, keep: &[EdgeId]) -> (MultiGraph, Vec<EdgeId>) {
        let mut keep: Vec<EdgeId> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let edges = keep.iter().map(|&e| self.edges[e]).collect();
        let g = MultiGraph::new(self.n, edges).expect("restriction of a valid graph");
        (g, keep)
    }

    /// Underlying simple graph; result edge `i` is the smallest original
    /// edge id of its parallel class.
    pub fn simple_graph(&self) -> (MultiGraph, Vec<EdgeId>) {
        let mut seen = BTreeSet::new();
        let mut keep = Vec::new();
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                keep.push(id);
            }
        }
        self.restrict_edges(&keep)
    }

    /// Delete a vertex set. Returns the graph, a map old-vertex -> new-vertex
    /// (usize::MAX for deleted) and the kept original edge ids in order.
    pub fn delete_vertices(&self, del: &[VertexId]) -> (MultiGraph, Vec<VertexId>, Vec<EdgeId>) {
        let mut dead = vec![false; self.n];
        for &v in del {
            dead[v] = true;
        }
        let mut vmap = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !dead[v] {
                vmap[v] = next;
                next += 1;
            }
        }
        let mut edges = Vec::new();
        let mut emap = Vec::new();
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if !dead[a] && !dead[b] {
                edges.push((vmap[a], vmap[b]));
                emap.push(id);
            }
        }
        let g = MultiGraph::new(next, edges).expect("deletion of a valid graph");
        (g, vmap, emap)
    }
}

/// A matching stored as a sorted set of edge ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matching {
    edge_ids: Vec<EdgeId>,
}

impl Matching {
    pub fn new(mut edge_ids: Vec<EdgeId>) -> Self {
        edge_ids.sort_unstable();
        edge_ids.dedup();
        Matching { edge_ids }
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edge_ids.binary_search(&e).is_ok()
    }

    /// Number of matching edges in the given edge set (sorted).
    pub fn crossings(&self, cut_edges: &[EdgeId]) -> usize {
        self.edge_ids
            .iter()
            .filter(|e| cut_edges.binary_search(e).is_ok())
            .count()
    }

    /// 0/1 vector over the `m` edges of the host graph.
    pub fn incidence_vector(&self, m: usize) -> Vec<i64> {
        let mut v = vec![0i64; m];
        for &e in &self.edge_ids {
            v[e] = 1;
        }
        v
    }

    /// Checks vertex-disjointness, and full coverage when `perfect`.
    pub fn is_valid_on(&self, g: &MultiGraph, perfect: bool) -> bool {
        let mut covered = vec![0usize; g.num_vertices()];
        for &e in &self.edge_ids {
            if e >= g.num_edges() {
                return false;
            }
            let (a, b) = g.endpoints(e);
            covered[a] += 1;
            covered[b] += 1;
        }
        if perfect {
            covered.iter().all(|&c| c == 1)
        } else {
            covered.iter().all(|&c| c <= 1)
        }
    }

    /// Translate through an edge-id map (position -> image).
    pub fn map_edges(&self, map: &[EdgeId]) -> Matching {
        Matching::new(self.edge_ids.iter().map(|&e| map[e]).collect())
    }

    pub fn weight(&self, w: &[i64]) -> i64 {
        self.edge_ids.iter().map(|&e| w[e]).sum()
    }
}

/// An edge cut given by one shore; `edge_ids` is exactly delta(shore).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    shore: Vec<VertexId>,
    edge_ids: Vec<EdgeId>,
}

impl Cut {
    pub fn from_shore(g: &MultiGraph, shore: &[VertexId]) -> Result<Cut> {
        let mut shore: Vec<VertexId> = shore.to_vec();
        shore.sort_unstable();
        shore.dedup();
        if shore.is_empty() || shore.len() >= g.num_vertices() {
            return Err(Error::InvalidRequest(
                "cut shore must be a proper nonempty vertex subset".into(),
            ));
        }
        if let Some(&v) = shore.iter().find(|&&v| v >= g.num_vertices()) {
            return Err(Error::InvalidRequest(format!("shore vertex {v} out of range")));
        }
        let inside = {
            let mut m = vec![false; g.num_vertices()];
            for &v in &shore {
                m[v] = true;
            }
            m
        };
        let edge_ids = (0..g.num_edges())
            .filter(|&e| {
                let (a, b) = g.endpoints(e);
                inside[a] != inside[b]
            })
            .collect();
        Ok(Cut { shore, edge_ids })
    }

    /// Same cut, shore flipped to the side avoiding `root` (vertex 0 by
    /// convention elsewhere).
    pub fn oriented_away_from(&self, g: &MultiGraph, root: VertexId) -> Cut {
        if self.shore.binary_search(&root).is_err() {
            return self.clone();
        }
        let complement: Vec<VertexId> = (0..g.num_vertices())
            .filter(|v| self.shore.binary_search(v).is_err())
            .collect();
        Cut {
            shore: complement,
            edge_ids: self.edge_ids.clone(),
        }
    }

    pub fn shore(&self) -> &[VertexId] {
        &self.shore
    }

    pub fn complement_shore(&self, g: &MultiGraph) -> Vec<VertexId> {
        (0..g.num_vertices())
            .filter(|v| self.shore.binary_search(v).is_err())
            .collect()
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn is_odd(&self, g: &MultiGraph) -> bool {
        let k = self.shore.len();
        k % 2 == 1 && (g.num_vertices() - k) % 2 == 1
    }

    pub fn is_trivial(&self, g: &MultiGraph) -> bool {
        self.shore.len() == 1 || self.shore.len() == g.num_vertices() - 1
    }
}

/// One shore of a cut shrunk to a single vertex.
///
/// Surviving vertices keep their relative order and occupy `0..k`; the
/// contracted vertex is `k` (the last id). Edges keep their original order;
/// `edge_map[new] = old`.
#[derive(Clone, Debug)]
pub struct ContractionResult {
    pub graph: MultiGraph,
    pub vertex_map: Vec<VertexId>,
    pub contracted_vertex: VertexId,
    pub edge_map: Vec<EdgeId>,
}

impl ContractionResult {
    /// Original vertices merged into the contracted vertex.
    pub fn contracted_set(&self) -> Vec<VertexId> {
        (0..self.vertex_map.len())
            .filter(|&v| self.vertex_map[v] == self.contracted_vertex)
            .collect()
    }

    /// Preimage of a non-contracted vertex of the contraction.
    pub fn original_vertex(&self, contracted: VertexId) -> VertexId {
        debug_assert_ne!(contracted, self.contracted_vertex);
        self.vertex_map
            .iter()
            .position(|&img| img == contracted)
            .expect("contraction vertex has a preimage")
    }
}

pub fn contract(g: &MultiGraph, shore: &[VertexId]) -> Result<ContractionResult> {
    let mut shore: Vec<VertexId> = shore.to_vec();
    shore.sort_unstable();
    shore.dedup();
    if shore.is_empty() || shore.len() >= g.num_vertices() {
        return Err(Error::InvalidRequest(
            "contraction shore must be a proper nonempty vertex subset".into(),
        ));
    }
    let inside = {
        let mut m = vec![false; g.num_vertices()];
        for &v in &shore {
            if v >= g.num_vertices() {
                return Err(Error::InvalidRequest(format!("shore vertex {v} out of range")));
            }
            m[v] = true;
        }
        m
    };
    let survivors = g.num_vertices() - shore.len();
    let contracted_vertex = survivors;
    let mut vertex_map = vec![usize::MAX; g.num_vertices()];
    let mut next = 0;
    for v in 0..g.num_vertices() {
        vertex_map[v] = if inside[v] {
            contracted_vertex
        } else {
            let id = next;
            next += 1;
            id
        };
    }
    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    for (id, &(a, b)) in g.edges().iter().enumerate() {
        if inside[a] && inside[b] {
            continue;
        }
        edges.push((vertex_map[a], vertex_map[b]));
        edge_map.push(id);
    }
    let graph = MultiGraph::new(survivors + 1, edges)?;
    Ok(ContractionResult {
        graph,
        vertex_map,
        contracted_vertex,
        edge_map,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// Optimal-weight perfect matching, or `None` when no perfect matching
/// exists. Deterministic for a fixed edge order; parallel edges are reduced
/// to the best representative per vertex pair (smallest id on ties).
pub fn max_weight_perfect_matching(
    g: &MultiGraph,
    weights: &[i64],
    sense: Sense,
) -> Option<Matching> {
    assert_eq!(weights.len(), g.num_edges(), "one weight per edge");
    if g.num_vertices() % 2 != 0 {
        return None;
    }
    if g.num_vertices() == 0 {
        return Some(Matching::new(Vec::new()));
    }
    let w: Vec<i64> = match sense {
        Sense::Maximize => weights.to_vec(),
        Sense::Minimize => weights.iter().map(|&x| -x).collect(),
    };
    // Best representative per vertex pair.
    let mut best: std::collections::BTreeMap<(usize, usize), EdgeId> = std::collections::BTreeMap::new();
    for (id, &(a, b)) in g.edges().iter().enumerate() {
        let key = (a.min(b), a.max(b));
        match best.get(&key) {
            Some(&cur) if w[cur] >= w[id] => {}
            _ => {
                best.insert(key, id);
            }
        }
    }
    let mut simple_edges = Vec::new();
    let mut rep = Vec::new();
    for (&(a, b), &id) in &best {
        simple_edges.push((a, b, w[id]));
        rep.push(id);
    }
    let mate = blossom::max_weight_matching(g.num_vertices(), &simple_edges, true);
    let mut ids = Vec::new();
    for v in 0..g.num_vertices() {
        match mate[v] {
            None => return None,
            Some(k) => {
                let (a, _b, _) = simple_edges[k];
                if a == v {
                    ids.push(rep[k]);
                }
            }
        }
    }
    Some(Matching::new(ids))
}

pub fn has_perfect_matching(g: &MultiGraph) -> bool {
    find_perfect_matching(g).is_some()
}

/// Any perfect matching (deterministic), or `None`.
pub fn find_perfect_matching(g: &MultiGraph) -> Option<Matching> {
    let w = vec![0i64; g.num_edges()];
    max_weight_perfect_matching(g, &w, Sense::Maximize)
}

/// A perfect matching containing all of `include` and none of `exclude`.
pub fn perfect_matching_with(
    g: &MultiGraph,
    include: &[EdgeId],
    exclude: &[EdgeId],
) -> Result<Option<Matching>> {
    let include_set: BTreeSet<EdgeId> = include.iter().copied().collect();
    let exclude_set: BTreeSet<EdgeId> = exclude.iter().copied().collect();
    if include_set.intersection(&exclude_set).next().is_some() {
        return Err(Error::InvalidRequest(
            "include and exclude sets overlap".into(),
        ));
    }
    let mut covered = vec![false; g.num_vertices()];
    for &e in &include_set {
        let (a, b) = g.endpoints(e);
        if covered[a] || covered[b] {
            return Err(Error::InvalidRequest(
                "include edges are not pairwise vertex-disjoint".into(),
            ));
        }
        covered[a] = true;
        covered[b] = true;
    }
    let del: Vec<VertexId> = (0..g.num_vertices()).filter(|&v| covered[v]).collect();
    let (mut h, _vmap, mut emap) = g.delete_vertices(&del);
    if !exclude_set.is_empty() {
        let keep: Vec<usize> = (0..h.num_edges())
            .filter(|&i| !exclude_set.contains(&emap[i]))
            .collect();
        let kept_emap: Vec<EdgeId> = keep.iter().map(|&i| emap[i]).collect();
        let edges = keep.iter().map(|&i| h.edges()[i]).collect();
        h = MultiGraph::new(h.num_vertices(), edges)?;
        emap = kept_emap;
    }
    match find_perfect_matching(&h) {
        None => Ok(None),
        Some(m) => {
            let mut ids: Vec<EdgeId> = m.edge_ids().iter().map(|&e| emap[e]).collect();
            ids.extend(include_set.iter().copied());
            let m = Matching::new(ids);
            debug_assert!(m.is_valid_on(g, true));
            Ok(Some(m))
        }
    }
}

/// Is `g` matching covered: connected, has a perfect matching, and every
/// edge lies in one. The second component lists the violating edges.
pub fn is_matching_covered(g: &MultiGraph) -> (bool, Vec<EdgeId>) {
    if g.num_vertices() == 0 || !g.is_connected() || !has_perfect_matching(g) {
        return (false, (0..g.num_edges()).collect());
    }
    let uncovered: Vec<EdgeId> = (0..g.num_edges())
        .filter(|&e| {
            perfect_matching_with(g, &[e], &[])
                .expect("single-edge include is well-formed")
                .is_none()
        })
        .collect();
    (uncovered.is_empty(), uncovered)
}

/// Subgraph on the edges that belong to some perfect matching, plus the map
/// result-edge -> original-edge. May be disconnected.
pub fn matching_covered_core(g: &MultiGraph) -> Result<(MultiGraph, Vec<EdgeId>)> {
    if !has_perfect_matching(g) {
        return Err(Error::NoPerfectMatching);
    }
    let keep: Vec<EdgeId> = (0..g.num_edges())
        .filter(|&e| {
            perfect_matching_with(g, &[e], &[])
                .expect("single-edge include is well-formed")
                .is_some()
        })
        .collect();
    Ok(g.restrict_edges(&keep))
}

/// phi(C) = min over perfect matchings of |M` ∩ `C|.
pub fn phi(g: &MultiGraph, c: &Cut) -> Result<usize> {
    let mut w = vec![0i64; g.num_edges()];
    for &e in c.edge_ids() {
        w[e] = 1;
    }
    match max_weight_perfect_matching(g, &w, Sense::Minimize) {
        Some(m) => Ok(m.crossings(c.edge_ids())),
        None => Err(Error::NoPerfectMatching),
    }
}

/// Tight: every perfect matching crosses exactly once (max crossing = 1).
pub fn is_tight_cut(g: &MultiGraph, c: &Cut) -> Result<bool> {
    let mut w = vec![0i64; g.num_edges()];
    for &e in c.edge_ids() {
        w[e] = 1;
    }
    match max_weight_perfect_matching(g, &w, Sense::Maximize) {
        Some(m) => Ok(m.crossings(c.edge_ids()) == 1),
        None => Err(Error::NoPerfectMatching),
    }
}

/// Separating: both C-contractions are matching covered.
pub fn is_separating_cut(g: &MultiGraph, c: &Cut) -> Result<bool> {
    let a = contract(g, c.shore())?;
    if !is_matching_covered(&a.graph).0 {
        return Ok(false);
    }
    let b = contract(g, &c.complement_shore(g))?;
    Ok(is_matching_covered(&b.graph).0)
}

/// All perfect matchings in deterministic (lexicographic) order; errors when
/// their number would exceed `cap`.
pub fn enumerate_perfect_matchings(g: &MultiGraph, cap: usize) -> Result<Vec<Matching>> {
    assert!(cap >= 1, "cap must be positive");
    if g.num_vertices() % 2 != 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut covered = vec![false; g.num_vertices()];
    let mut current = Vec::new();
    fn recurse(
        g: &MultiGraph,
        covered: &mut Vec<bool>,
        current: &mut Vec<EdgeId>,
        out: &mut Vec<Matching>,
        cap: usize,
    ) -> Result<()> {
        let v = match covered.iter().position(|&c| !c) {
            None => {
                if out.len() == cap {
                    return Err(Error::CapExceeded { cap });
                }
                out.push(Matching::new(current.clone()));
                return Ok(());
            }
            Some(v) => v,
        };
        for &e in g.incident(v) {
            let w = g.other_endpoint(e, v);
            if covered[w] {
                continue;
            }
            covered[v] = true;
            covered[w] = true;
            current.push(e);
            recurse(g, covered, current, out, cap)?;
            current.pop();
            covered[v] = false;
            covered[w] = false;
        }
        Ok(())
    }
    recurse(g, &mut covered, &mut current, &mut out, cap)?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn c4_min_weight_pm_has_weight_two() {
        let g = corpus::cycle(4);
        let w = vec![1i64; 4];
        let m = max_weight_perfect_matching(&g, &w, Sense::Minimize).unwrap();
        assert_eq!(m.weight(&w), 2);
        assert!(m.is_valid_on(&g, true));
    }

    #[test]
    fn k4_max_weight_unique_maximizer() {
        // K4 edge order: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
        let g = corpus::complete(4);
        let mut w = vec![0i64; 6];
        w[0] = 1; // 0-1
        w[5] = 1; // 2-3
        let m = max_weight_perfect_matching(&g, &w, Sense::Maximize).unwrap();
        assert_eq!(m.edge_ids(), &[0, 5]);
    }

    #[test]
    fn petersen_spoke_weights_select_all_spokes() {
        let g = corpus::petersen();
        let mut w = vec![0i64; 15];
        for e in 5..10 {
            w[e] = 1; // the five spokes
        }
        let m = max_weight_perfect_matching(&g, &w, Sense::Maximize).unwrap();
        assert_eq!(m.edge_ids(), &[5, 6, 7, 8, 9]);
        assert_eq!(m.weight(&w), 5);
    }

    #[test]
    fn prism_include_rung_forces_triangle_edges() {
        let g = corpus::prism();
        // prism edges: 0:(0,1) 1:(1,2) 2:(2,0) 3:(3,4) 4:(4,5) 5:(5,3) 6:(0,3) 7:(1,4) 8:(2,5)
        let m = perfect_matching_with(&g, &[6], &[]).unwrap().unwrap();
        assert_eq!(m.edge_ids(), &[1, 4, 6]); // {1-2, 4-5, 0-3}
        let all = enumerate_perfect_matchings(&g, 100).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.iter().any(|x| x == &m));
    }

    #[test]
    fn c4_include_full_pm_returns_it() {
        let g = corpus::cycle(4);
        let m = perfect_matching_with(&g, &[0, 2], &[]).unwrap().unwrap();
        assert_eq!(m.edge_ids(), &[0, 2]);
    }

    #[test]
    fn petersen_adjacent_spokes_cannot_extend() {
        let g = corpus::petersen();
        // spokes at adjacent outer vertices 0 and 1 are edges 5 and 6
        let m = perfect_matching_with(&g, &[5, 6], &[]).unwrap();
        assert!(m.is_none());
        // oracle: no enumerated PM contains both
        let all = enumerate_perfect_matchings(&g, 100).unwrap();
        assert_eq!(all.len(), 6);
        assert!(!all.iter().any(|m| m.contains(5) && m.contains(6)));
    }

    #[test]
    fn overlapping_include_rejected() {
        let g = corpus::complete(4);
        // edges 0:(0,1) and 1:(0,2) share vertex 0
        assert!(perfect_matching_with(&g, &[0, 1], &[]).is_err());
        assert!(perfect_matching_with(&g, &[0], &[0]).is_err());
    }

    #[test]
    fn matching_covered_checks() {
        let g = corpus::complete(4);
        assert_eq!(is_matching_covered(&g), (true, vec![]));
        let path = MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(is_matching_covered(&path), (false, vec![1]));
        let pet = corpus::petersen();
        assert_eq!(is_matching_covered(&pet), (true, vec![]));
    }

    #[test]
    fn core_of_path_and_idempotence() {
        let path = MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let (core, map) = matching_covered_core(&path).unwrap();
        assert_eq!(map, vec![0, 2]);
        assert_eq!(core.num_edges(), 2);
        let (core2, map2) = matching_covered_core(&core).unwrap();
        assert_eq!(core2.num_edges(), 2);
        assert_eq!(map2, vec![0, 1]);
    }

    #[test]
    fn core_keeps_parallel_rung_copies() {
        let mut edges = corpus::prism().edges().to_vec();
        edges.push((0, 3)); // parallel copy of rung 0-3
        let g = MultiGraph::new(6, edges).unwrap();
        let (core, map) = matching_covered_core(&g).unwrap();
        assert_eq!(core.num_edges(), g.num_edges());
        assert_eq!(map.len(), 10);
        // oracle: every edge in some enumerated PM
        let all = enumerate_perfect_matchings(&g, 100).unwrap();
        for e in 0..g.num_edges() {
            assert!(all.iter().any(|m| m.contains(e)), "edge {e} uncovered");
        }
    }

    #[test]
    fn contract_prism_triangle_gives_k4() {
        let g = corpus::prism();
        let res = contract(&g, &[0, 1, 2]).unwrap();
        assert_eq!(res.graph.num_vertices(), 4);
        assert_eq!(res.graph.num_edges(), 6);
        // 3-regular simple on 4 vertices is K4
        let (simple, _) = res.graph.simple_graph();
        assert_eq!(simple.num_edges(), 6);
        for v in 0..4 {
            assert_eq!(simple.degree(v), 3);
        }
    }

    #[test]
    fn contract_singleton_keeps_graph_shape() {
        let g = corpus::prism();
        let res = contract(&g, &[5]).unwrap();
        assert_eq!(res.graph.num_vertices(), 6);
        assert_eq!(res.graph.num_edges(), 9);
        assert_eq!(res.edge_map, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn contraction_edge_and_vertex_counts() {
        // |E1|+|E2| = |E|+|C| and |V1|+|V2| = |V|+2 for any odd cut
        let g = corpus::petersen();
        let cut = Cut::from_shore(&g, &[0, 1, 2, 3, 4]).unwrap();
        let a = contract(&g, cut.shore()).unwrap();
        let b = contract(&g, &cut.complement_shore(&g)).unwrap();
        assert_eq!(
            a.graph.num_edges() + b.graph.num_edges(),
            g.num_edges() + cut.edge_ids().len()
        );
        assert_eq!(
            a.graph.num_vertices() + b.graph.num_vertices(),
            g.num_vertices() + 2
        );
    }

    #[test]
    fn phi_examples() {
        let g = corpus::prism();
        let rungs = Cut::from_shore(&g, &[0, 1, 2]).unwrap();
        assert_eq!(phi(&g, &rungs).unwrap(), 1);
        let trivial = Cut::from_shore(&g, &[3]).unwrap();
        assert_eq!(phi(&g, &trivial).unwrap(), 1);
        let pet = corpus::petersen();
        let pentagon = Cut::from_shore(&pet, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(phi(&pet, &pentagon).unwrap(), 1);
    }

    #[test]
    fn tight_and_separating_examples() {
        let g = corpus::prism();
        let rungs = Cut::from_shore(&g, &[0, 1, 2]).unwrap();
        assert!(!is_tight_cut(&g, &rungs).unwrap());
        assert!(is_separating_cut(&g, &rungs).unwrap());
        let trivial = Cut::from_shore(&g, &[4]).unwrap();
        assert!(is_tight_cut(&g, &trivial).unwrap());
        let pet = corpus::petersen();
        let pentagon = Cut::from_shore(&pet, &[0, 1, 2, 3, 4]).unwrap();
        assert!(!is_tight_cut(&pet, &pentagon).unwrap());
        assert!(is_separating_cut(&pet, &pentagon).unwrap());
    }

    #[test]
    fn enumeration_counts_and_cap() {
        assert_eq!(
            enumerate_perfect_matchings(&corpus::complete(4), 10).unwrap().len(),
            3
        );
        assert_eq!(
            enumerate_perfect_matchings(&corpus::petersen(), 10).unwrap().len(),
            6
        );
        assert_eq!(
            enumerate_perfect_matchings(&corpus::prism(), 10).unwrap().len(),
            4
        );
        match enumerate_perfect_matchings(&corpus::petersen(), 3) {
            Err(Error::CapExceeded { cap: 3 }) => {}
            other => panic!("expected cap overflow, got {other:?}"),
        }
    }

    #[test]
    fn pullback_of_crossing_once_pms_composes() {
        // Pull back a PM of a contraction crossing once, unite with a
        // compatible PM of the other side: perfect matching of g.
        let g = corpus::prism();
        let cut = Cut::from_shore(&g, &[0, 1, 2]).unwrap();
        let a = contract(&g, cut.shore()).unwrap();
        let b = contract(&g, &cut.complement_shore(&g)).unwrap();
        let ma = find_perfect_matching(&a.graph).unwrap();
        let crossing: Vec<EdgeId> = ma
            .edge_ids()
            .iter()
            .map(|&e| a.edge_map[e])
            .filter(|e| cut.edge_ids().binary_search(e).is_ok())
            .collect();
        assert_eq!(crossing.len(), 1);
        // Find PM of b using the same crossing edge.
        let b_local: Vec<EdgeId> = b
            .edge_map
            .iter()
            .enumerate()
            .filter(|(_, &orig)| orig == crossing[0])
            .map(|(i, _)| i)
            .collect();
        let mb = perfect_matching_with(&b.graph, &b_local, &[]).unwrap().unwrap();
        let mut union: Vec<EdgeId> = ma.edge_ids().iter().map(|&e| a.edge_map[e]).collect();
        union.extend(
            mb.edge_ids()
                .iter()
                .map(|&e| b.edge_map[e])
                .filter(|e| cut.edge_ids().binary_search(e).is_err()),
        );
        let m = Matching::new(union);
        assert!(m.is_valid_on(&g, true));
    }
}
