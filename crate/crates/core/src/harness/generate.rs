//! Graph sources for the sweeps: exhaustive generation of small connected
//! graphs and trees, and seeded random families.

use crate::graph::{bits, contains_induced, Graph};
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeMap;

/// Largest order handled by [`generate_connected`].
pub const MAX_GENERATED: usize = 6;

/// Largest order handled by [`generate_connected_bipartite`].
pub const MAX_BIPARTITE: usize = 8;

/// Largest order handled by [`generate_trees`].
pub const MAX_TREE: usize = 12;

/// Upper-triangle adjacency bits in graph6 order, first bit most significant.
fn adjacency_code(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | g.has_edge(inv[i], inv[j]) as u64;
        }
    }
    code
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else { return false };
    let j = p.iter().rposition(|&x| x > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Canonical form: the lexicographically smallest adjacency bit string over
/// all relabellings, and the relabelled graph realising it. Only sensible for
/// small graphs (`n!` permutations).
pub fn canonical_form(g: &Graph) -> (u64, Graph) {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = (adjacency_code(g, &perm), perm.clone());
    while next_permutation(&mut perm) {
        let code = adjacency_code(g, &perm);
        if code < best.0 {
            best = (code, perm.clone());
        }
    }
    let canon = g.unlabeled().permuted(&best.1).expect("valid permutation");
    (best.0, canon)
}

/// All connected graphs on `n` vertices up to isomorphism, in increasing
/// canonical code order.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// level `n` is reached by attaching a new vertex to each level `n-1` graph
/// in every possible way.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::invalid("graphs need at least one vertex"));
    }
    if n > MAX_GENERATED {
        return Err(Error::invalid(format!(
            "internal generation stops at {MAX_GENERATED} vertices; supply larger graphs as a graph6 stream"
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 2..=n {
        let mut next = BTreeMap::new();
        for g in &level {
            for nbrs in 1u64..1 << (m - 1) {
                let h = extend(g, nbrs);
                let (code, canon) = canonical_form(&h);
                next.entry(code).or_insert(canon);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

type DegreeProfile = Vec<(usize, Vec<usize>)>;

/// Degree of each vertex together with its neighbours' degrees, sorted.
fn degree_profile(g: &Graph) -> DegreeProfile {
    let mut out: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = bits(g.neighbors(v)).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    out.sort_unstable();
    out
}

/// All connected bipartite graphs on `n` vertices up to isomorphism.
///
/// Same vertex-extension scheme as [`generate_connected`], with the new
/// vertex joined to a nonempty subset of one colour class. Duplicates are
/// bucketed by degree profile and then tested with an induced embedding,
/// which avoids the `n!` canonical form at eight vertices.
pub fn generate_connected_bipartite(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_BIPARTITE {
        return Err(Error::invalid(format!("bipartite generation order must be in 1..={MAX_BIPARTITE}")));
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 2..=n {
        let mut buckets: BTreeMap<(usize, DegreeProfile), Vec<Graph>> = BTreeMap::new();
        for g in &level {
            let (a, b) = g.bipartition().expect("level graphs are bipartite");
            for side in [a, b] {
                let side_mask: u64 = side.iter().map(|&v| 1u64 << v).sum();
                let mut sub = side_mask;
                while sub != 0 {
                    let h = extend(g, sub);
                    let bucket = buckets.entry((h.edge_count(), degree_profile(&h))).or_default();
                    if !bucket.iter().any(|k| contains_induced(k, &h).is_some()) {
                        bucket.push(h);
                    }
                    sub = (sub - 1) & side_mask;
                }
            }
        }
        level = buckets.into_values().flatten().collect();
    }
    Ok(level)
}

fn extend(g: &Graph, nbrs: u64) -> Graph {
    let m = g.n() + 1;
    let mut edges = g.edges();
    edges.extend(bits(nbrs).map(|u| (u, m - 1)));
    Graph::from_edges(m, &edges).expect("within cap")
}

/// Rooted tree code: children codes sorted, wrapped in parentheses.
fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> =
        bits(g.neighbors(v)).filter(|&u| Some(u) != parent).map(|u| rooted_code(g, u, Some(v))).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn centers(g: &Graph) -> Vec<usize> {
    let mut alive = g.vertex_mask();
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    while alive.count_ones() > 2 {
        let leaves: Vec<usize> = bits(alive).filter(|&v| deg[v] <= 1).collect();
        for &v in &leaves {
            alive &= !(1 << v);
            for u in bits(g.neighbors(v) & alive) {
                deg[u] -= 1;
            }
        }
    }
    bits(alive).collect()
}

/// Isomorphism-invariant code of a tree.
pub fn tree_code(g: &Graph) -> String {
    centers(g).into_iter().map(|c| rooted_code(g, c, None)).min().unwrap_or_default()
}

/// All trees on `n` vertices up to isomorphism, ordered by their codes.
pub fn generate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_TREE {
        return Err(Error::invalid(format!("tree order must be in 1..={MAX_TREE}")));
    }
    let mut level = BTreeMap::from([(tree_code(&Graph::empty(1)?), Graph::empty(1)?)]);
    for _ in 2..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for v in 0..g.n() {
                let h = extend(g, 1 << v);
                next.entry(tree_code(&h)).or_insert(h);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// Random labelled tree: vertex `i` attaches to a uniform earlier vertex,
/// then labels are shuffled.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = (1..n).map(|i| (perm[rng.gen_range(0..i)], perm[i])).collect();
    Graph::from_edges(n, &edges).expect("within cap")
}

/// Random connected graph: a random tree plus each other pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let tree = random_tree(rng, n);
    let mut edges = tree.edges();
    for v in 1..n {
        for u in 0..v {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("within cap")
}

/// Random connected bipartite graph on `n >= 2` vertices: random side sizes,
/// a spanning tree across the sides, then each other cross pair with probability `p`.
pub fn random_connected_bipartite<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!(n >= 2, "a connected bipartite graph with an edge needs two vertices");
    let a = rng.gen_range(1..n);
    let side = |v: usize| v < a;
    let mut order: Vec<usize> = (0..n).filter(|&v| v != 0 && v != a).collect();
    order.shuffle(rng);
    let mut placed = vec![0, a];
    let mut edges = vec![(0, a)];
    for v in order {
        let others: Vec<usize> = placed.iter().copied().filter(|&u| side(u) != side(v)).collect();
        edges.push((*others.choose(rng).expect("both sides placed"), v));
        placed.push(v);
    }
    let mut g = Graph::from_edges(n, &edges).expect("within cap");
    for u in 0..a {
        for v in a..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    /// Oracle: every labelled graph, connectivity filter, dedup by canonical code.
    fn labelled_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut seen = BTreeSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = bits(mask).map(|b| pairs[b]).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                seen.insert(canonical_form(&g).0);
            }
        }
        seen.len()
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| generate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        for n in 1..=5 {
            assert_eq!(labelled_count(n), counts[n - 1], "n = {n}");
        }
        assert!(generate_connected(7).unwrap_err().to_string().contains("graph6"));
    }

    #[test]
    fn bipartite_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| generate_connected_bipartite(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 5, 17, 44, 182]);
        for n in 1..=6 {
            let filtered = generate_connected(n).unwrap().into_iter().filter(|g| g.is_bipartite()).count();
            assert_eq!(filtered, counts[n - 1], "n = {n}");
        }
        let seven = generate_connected_bipartite(7).unwrap();
        assert!(seven.iter().all(|g| g.n() == 7 && g.is_connected() && g.is_bipartite()));
        let codes: BTreeSet<u64> = seven.iter().map(|g| canonical_form(g).0).collect();
        assert_eq!(codes.len(), seven.len());
        assert!(generate_connected_bipartite(9).is_err());
    }

    #[test]
    fn generated_graphs_are_connected_and_distinct() {
        let gs = generate_connected(5).unwrap();
        let codes: BTreeSet<u64> = gs.iter().map(|g| canonical_form(g).0).collect();
        assert_eq!(codes.len(), gs.len());
        assert!(gs.iter().all(|g| g.is_connected() && g.n() == 5));
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| generate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        // trees agree with the connected generator where both apply
        let trees6 = generate_connected(6).unwrap().into_iter().filter(|g| g.edge_count() == 5).count();
        assert_eq!(trees6, 6);
    }

    #[test]
    fn random_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=12 {
            let t = random_tree(&mut rng, n);
            assert!(t.is_connected() && t.edge_count() == n - 1);
            let b = random_connected_bipartite(&mut rng, n, 0.3);
            assert!(b.is_connected() && b.is_bipartite());
            let g = random_connected(&mut rng, n, 0.3);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = g.permuted(&[3, 0, 4, 1, 2]).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert_eq!(tree_code(&g), tree_code(&h));
    }
}
