//! Named test graphs, isomorphism keys, and corpus generators.
//!
//! The exhaustive generator walks ear additions from K2: every matching
//! covered graph arises from K2 through single and double ear additions with
//! all intermediate graphs matching covered, so closing {K2} under ear
//! additions followed by a matching-covered filter reaches all of them.
//! Canonical adjacency keys deduplicate isomorphic candidates.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::graph::{is_matching_covered, MultiGraph};
use crate::VertexId;

pub fn cycle(n: usize) -> MultiGraph {
    assert!(n >= 3);
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    MultiGraph::new(n, edges).unwrap()
}

pub fn complete(n: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    MultiGraph::new(n, edges).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    MultiGraph::new(a + b, edges).unwrap()
}

/// Two triangles {0,1,2}, {3,4,5} joined by rungs 0-3, 1-4, 2-5.
pub fn prism() -> MultiGraph {
    MultiGraph::new(
        6,
        vec![
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

/// Pentagonal prism C5 x K2: outer 0..5, inner 5..10, rungs i-(i+5).
pub fn pentagonal_prism() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, 5 + i));
    }
    MultiGraph::new(10, edges).unwrap()
}

/// Outer cycle 0..5, spokes i-(i+5), inner pentagram (i+5)-((i+2)%5+5).
pub fn petersen() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, 5 + i));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    MultiGraph::new(10, edges).unwrap()
}

/// Petersen plus one parallel copy of spoke 0-5 (edge id 15).
pub fn petersen_with_parallel_spoke() -> MultiGraph {
    let mut edges = petersen().edges().to_vec();
    edges.push((0, 5));
    MultiGraph::new(10, edges).unwrap()
}

/// Rim cycle 0..k, hub vertex k with a spoke to every rim vertex.
pub fn wheel(k: usize) -> MultiGraph {
    assert!(k >= 3);
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
    }
    for i in 0..k {
        edges.push((i, k));
    }
    MultiGraph::new(k + 1, edges).unwrap()
}

/// All named corpus members with stable labels.
pub fn named_family() -> Vec<(&'static str, MultiGraph)> {
    vec![
        ("C4", cycle(4)),
        ("C6", cycle(6)),
        ("K4", complete(4)),
        ("K3,3", complete_bipartite(3, 3)),
        ("prism", prism()),
        ("CL5", pentagonal_prism()),
        ("Petersen", petersen()),
        ("Petersen+parallel", petersen_with_parallel_spoke()),
    ]
}

/// Canonical key of the underlying simple graph: lexicographically minimal
/// adjacency rows (row i holds bits for already-placed j < i).
pub fn canonical_key(g: &MultiGraph) -> Vec<u64> {
    let (simple, _) = g.simple_graph();
    let n = simple.num_vertices();
    assert!(n <= 64, "canonical keys support at most 64 vertices");
    let mut adj = vec![0u64; n];
    for &(a, b) in simple.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut best: Option<Vec<u64>> = None;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut rows = Vec::with_capacity(n);
    search(&adj, n, &mut perm, &mut used, &mut rows, &mut best);
    let mut key = best.unwrap_or_default();
    key.push(n as u64);
    key
}

fn search(
    adj: &[u64],
    n: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    rows: &mut Vec<u64>,
    best: &mut Option<Vec<u64>>,
) {
    let depth = perm.len();
    if depth == n {
        let better = match best {
            None => true,
            Some(b) => rows[..] < b[..],
        };
        if better {
            *best = Some(rows.clone());
        }
        return;
    }
    // Row value for each unused candidate, keep only the minimum.
    let mut min_row = u64::MAX;
    let mut cands = Vec::new();
    for v in 0..n {
        if used[v] {
            continue;
        }
        let mut row = 0u64;
        for (i, &p) in perm.iter().enumerate() {
            if adj[v] >> p & 1 == 1 {
                row |= 1 << i;
            }
        }
        // Lexicographic on bitstrings b_0 b_1 ... = numeric on reversed bits;
        // reverse so smaller numeric value means lexicographically smaller row.
        let sortable = row.reverse_bits();
        if sortable < min_row {
            min_row = sortable;
            cands.clear();
            cands.push((v, row));
        } else if sortable == min_row {
            cands.push((v, row));
        }
    }
    let row = cands[0].1;
    // Prune against current best prefix.
    if let Some(b) = best {
        let r = row.reverse_bits();
        let br = b[depth].reverse_bits();
        if r > br {
            return;
        }
        if r == br && rows[..] == b[..depth] {
            // equal prefix: continue exploring (could tie or improve later)
        } else if rows[..] > b[..depth] {
            return;
        }
    }
    // Twin pruning: candidates whose remaining neighborhoods coincide are
    // interchangeable by a transposition automorphism.
    let mut kept: Vec<usize> = Vec::new();
    let mut seen_sigs: Vec<u64> = Vec::new();
    let used_mask: u64 = (0..n).filter(|&v| used[v]).fold(0u64, |m, v| m | 1 << v);
    for &(v, _) in &cands {
        let sig = adj[v] & !used_mask & !(1 << v);
        let mut twin = false;
        for (i, &s) in seen_sigs.iter().enumerate() {
            let w = kept[i];
            if s & !(1 << v) == sig & !(1 << w) {
                twin = true;
                break;
            }
        }
        if !twin {
            kept.push(v);
            seen_sigs.push(sig);
        }
    }
    for v in kept {
        used[v] = true;
        perm.push(v);
        rows.push(row);
        search(adj, n, perm, used, rows, best);
        rows.pop();
        perm.pop();
        used[v] = false;
    }
}

/// Every simple matching covered graph on at most `max_n` vertices, up to
/// isomorphism, by ear closure from K2.
pub fn all_matching_covered_up_to(max_n: usize) -> Vec<MultiGraph> {
    let k2 = MultiGraph::new(2, vec![(0, 1)]).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(canonical_key(&k2));
    let mut result = vec![k2.clone()];
    let mut frontier = vec![k2];
    while let Some(g) = frontier.pop() {
        for cand in ear_successors(&g, max_n) {
            let key = canonical_key(&cand);
            if seen.contains(&key) {
                continue;
            }
            seen.insert(key);
            if is_matching_covered(&cand).0 {
                result.push(cand.clone());
                frontier.push(cand);
            }
        }
    }
    result.sort_by_key(|g| (g.num_vertices(), g.num_edges(), canonical_key(g)));
    result
}

/// All single- and double-ear additions staying within `max_n` vertices.
fn ear_successors(g: &MultiGraph, max_n: usize) -> Vec<MultiGraph> {
    let n = g.num_vertices();
    let budget = max_n - n;
    let mut out = Vec::new();
    let singles = single_ears(g, budget);
    for ear in &singles {
        out.push(apply_ears(g, &[ear.clone()]));
    }
    // Double ears: two vertex-disjoint single ears added simultaneously.
    for i in 0..singles.len() {
        for j in i + 1..singles.len() {
            let (a, b) = (&singles[i], &singles[j]);
            if a.internal + b.internal > budget {
                continue;
            }
            let endpoints = [a.u, a.v, b.u, b.v];
            let mut distinct = endpoints.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != 4 {
                continue;
            }
            out.push(apply_ears(g, &[a.clone(), b.clone()]));
        }
    }
    out
}

#[derive(Clone, Debug)]
struct Ear {
    u: VertexId,
    v: VertexId,
    internal: usize, // even number of new vertices
}

fn single_ears(g: &MultiGraph, budget: usize) -> Vec<Ear> {
    let n = g.num_vertices();
    let mut present = std::collections::BTreeSet::new();
    for &(a, b) in g.edges() {
        present.insert((a.min(b), a.max(b)));
    }
    let mut ears = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let mut t = 0;
            while t <= budget {
                // internal count 0 needs the edge to be absent (simple corpus)
                if t > 0 || !present.contains(&(u, v)) {
                    ears.push(Ear { u, v, internal: t });
                }
                t += 2;
            }
        }
    }
    ears
}

fn apply_ears(g: &MultiGraph, ears: &[Ear]) -> MultiGraph {
    let mut edges = g.edges().to_vec();
    let mut next = g.num_vertices();
    for ear in ears {
        if ear.internal == 0 {
            edges.push((ear.u, ear.v));
        } else {
            let first = next;
            edges.push((ear.u, first));
            for i in 0..ear.internal - 1 {
                edges.push((first + i, first + i + 1));
            }
            edges.push((first + ear.internal - 1, ear.v));
            next += ear.internal;
        }
    }
    MultiGraph::new(next, edges).unwrap()
}

/// Seeded random corpus of matching covered graphs with 6..=max_n vertices:
/// cubic and near-cubic graphs plus bipartite regular graphs. Only graphs
/// passing the matching covered filter are emitted.
pub fn random_corpus(max_n: usize, count: usize, seed: u64) -> Vec<MultiGraph> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < count && attempts < count * 200 {
        attempts += 1;
        let pick = rng.gen_range(0..3u8);
        let cand = match pick {
            0 => {
                let n = 2 * rng.gen_range(3..=max_n / 2);
                random_regular(n, 3, &mut rng)
            }
            1 => {
                // near-cubic: cubic plus one extra chord
                let n = 2 * rng.gen_range(3..=max_n / 2);
                random_regular(n, 3, &mut rng).map(|g| {
                    let mut edges = g.edges().to_vec();
                    let mut present: std::collections::BTreeSet<(usize, usize)> = edges
                        .iter()
                        .map(|&(a, b)| (a.min(b), a.max(b)))
                        .collect();
                    for _ in 0..20 {
                        let a = rng.gen_range(0..n);
                        let b = rng.gen_range(0..n);
                        if a != b && present.insert((a.min(b), a.max(b))) {
                            edges.push((a.min(b), a.max(b)));
                            break;
                        }
                    }
                    MultiGraph::new(n, edges).unwrap()
                })
            }
            _ => {
                let half = rng.gen_range(3..=max_n / 2);
                let k = rng.gen_range(2..=3usize.min(half));
                random_bipartite_regular(half, k, &mut rng)
            }
        };
        let Some(g) = cand else { continue };
        if is_matching_covered(&g).0 {
            out.push(g);
        }
    }
    out
}

/// Pairing-model random k-regular simple graph; None when the sampled
/// pairing has loops or parallels after a few retries.
fn random_regular(n: usize, k: usize, rng: &mut StdRng) -> Option<MultiGraph> {
    assert!(n * k % 2 == 0);
    'retry: for _ in 0..50 {
        let mut stubs: Vec<usize> = (0..n * k).map(|s| s / k).collect();
        stubs.shuffle(rng);
        let mut edges = Vec::new();
        let mut present = std::collections::BTreeSet::new();
        for pair in stubs.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            if a == b || !present.insert((a.min(b), a.max(b))) {
                continue 'retry;
            }
            edges.push((a.min(b), a.max(b)));
        }
        return Some(MultiGraph::new(n, edges).unwrap());
    }
    None
}

/// Union of k random perfect matchings between the sides; simple only.
fn random_bipartite_regular(half: usize, k: usize, rng: &mut StdRng) -> Option<MultiGraph> {
    'retry: for _ in 0..50 {
        let mut edges = Vec::new();
        let mut present = std::collections::BTreeSet::new();
        for _ in 0..k {
            let mut perm: Vec<usize> = (0..half).collect();
            perm.shuffle(rng);
            for (i, &j) in perm.iter().enumerate() {
                if !present.insert((i, half + j)) {
                    continue 'retry;
                }
                edges.push((i, half + j));
            }
        }
        edges.sort_unstable();
        return Some(MultiGraph::new(2 * half, edges).unwrap());
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_are_matching_covered() {
        for (name, g) in named_family() {
            assert!(is_matching_covered(&g).0, "{name} should be matching covered");
        }
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.num_vertices(), 10);
        assert_eq!(g.num_edges(), 15);
        for v in 0..10 {
            assert_eq!(g.degree(v), 3);
        }
    }

    #[test]
    fn canonical_key_respects_isomorphism() {
        // same graph under a relabeling
        let g1 = prism();
        let relabel = [3, 5, 1, 0, 4, 2];
        let edges = g1
            .edges()
            .iter()
            .map(|&(a, b)| (relabel[a], relabel[b]))
            .collect();
        let g2 = MultiGraph::new(6, edges).unwrap();
        assert_eq!(canonical_key(&g1), canonical_key(&g2));
        assert_ne!(canonical_key(&g1), canonical_key(&cycle(6)));
        // K3,3 and prism are both cubic on 6 vertices but not isomorphic
        assert_ne!(canonical_key(&complete_bipartite(3, 3)), canonical_key(&prism()));
    }

    #[test]
    fn exhaustive_small_counts_match_brute_force() {
        // independent oracle: enumerate all labeled graphs on exactly n
        // vertices (n = 4 and 6), filter matching covered with no isolated
        // vertices, dedup by canonical key.
        for (n, _) in [(4usize, ()), (6, ())] {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect();
            let mut keys = std::collections::BTreeSet::new();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                if edges.len() < n / 2 {
                    continue;
                }
                let g = MultiGraph::new(n, edges).unwrap();
                if (0..n).any(|v| g.degree(v) == 0) {
                    continue;
                }
                if is_matching_covered(&g).0 {
                    keys.insert(canonical_key(&g));
                }
            }
            let generated: std::collections::BTreeSet<Vec<u64>> = all_matching_covered_up_to(n)
                .into_iter()
                .filter(|g| g.num_vertices() == n)
                .map(|g| canonical_key(&g))
                .collect();
            assert_eq!(generated, keys, "mismatch at n = {n}");
        }
    }

    #[test]
    fn random_corpus_is_matching_covered_and_big_enough() {
        let graphs = random_corpus(12, 25, 7);
        assert!(graphs.len() >= 25);
        for g in &graphs {
            assert!(is_matching_covered(g).0);
        }
    }
}
