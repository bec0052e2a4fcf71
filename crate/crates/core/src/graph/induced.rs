use super::{bits, Graph};

/// Find an induced copy of `h` in `g`.
///
/// Returns `map` with `map[i]` the vertex of `g` playing vertex `i` of `h`;
/// edges and non-edges are both preserved. Pattern vertices are placed in
/// descending-degree order and candidates are filtered with neighbourhood
/// bitsets, which is ample for the ≤ 7-vertex patterns used here.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let (ng, nh) = (g.n(), h.n());
    if nh > ng || h.edge_count() > g.edge_count() {
        return None;
    }
    if nh == 0 {
        return Some(Vec::new());
    }
    // degree prefilter: a pattern vertex needs at least as many neighbours
    // and at least as many non-neighbours in the host
    let (hd, gd) = (h.degree_sequence(), g.degree_sequence());
    if hd[0] > gd[0] {
        return None;
    }

    let mut order: Vec<usize> = (0..nh).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));

    let candidates: Vec<u64> = (0..nh)
        .map(|hv| {
            let (deg, codeg) = (h.degree(hv), nh - 1 - h.degree(hv));
            (0..ng).filter(|&gv| g.degree(gv) >= deg && ng - 1 - g.degree(gv) >= codeg).fold(0u64, |m, gv| m | 1 << gv)
        })
        .collect();

    let mut map = vec![usize::MAX; nh];
    if extend(g, h, &order, &candidates, 0, 0, &mut map) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    candidates: &[u64],
    depth: usize,
    used: u64,
    map: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let hv = order[depth];
    let mut cand = candidates[hv] & !used;
    for &prev in &order[..depth] {
        let gv = map[prev];
        if h.has_edge(hv, prev) {
            cand &= g.neighbors(gv);
        } else {
            cand &= !g.neighbors(gv);
        }
    }
    for gv in bits(cand) {
        map[hv] = gv;
        if extend(g, h, order, candidates, depth + 1, used | 1 << gv, map) {
            return true;
        }
    }
    map[hv] = usize::MAX;
    false
}

/// True when `map` is an induced embedding of `h` into `g`.
pub fn is_induced_embedding(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if map.len() != h.n() {
        return false;
    }
    let mut used = 0u64;
    for &v in map {
        if v >= g.n() || used >> v & 1 == 1 {
            return false;
        }
        used |= 1 << v;
    }
    (0..h.n()).all(|i| (0..h.n()).all(|j| i == j || h.has_edge(i, j) == g.has_edge(map[i], map[j])))
}
