use super::{bits, Graph};

/// Find an induced cycle of odd length at least `min_len`.
///
/// Induced paths are grown from each start vertex `s` through vertices with
/// larger index than `s`; a path may only be extended by a vertex that has no
/// neighbour among the earlier path vertices, and it closes when the new
/// endpoint is adjacent to `s`. The cycle is returned in traversal order.
pub fn find_odd_hole_geq(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    assert!(min_len >= 5 && min_len % 2 == 1, "min_len must be odd and at least 5");
    let n = g.n();
    if n < min_len {
        return None;
    }
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        path.clear();
        path.push(s);
        // vertices above s only, so each cycle is found from its minimum vertex
        let allowed = !((1u64 << s) | ((1u64 << s) - 1));
        if let Some(c) = grow(g, min_len, allowed, 1u64 << s, &mut path) {
            return Some(c);
        }
    }
    None
}

fn grow(g: &Graph, min_len: usize, allowed: u64, on_path: u64, path: &mut Vec<usize>) -> Option<Vec<usize>> {
    let s = path[0];
    let last = *path.last().unwrap();
    // neighbours of path vertices other than `last` (and other than s, handled separately)
    let mut blocked = 0u64;
    if path.len() > 2 {
        for &v in &path[1..path.len() - 1] {
            blocked |= g.neighbors(v);
        }
    }
    let cand = g.neighbors(last) & allowed & !on_path & !blocked;
    for v in bits(cand) {
        if path.len() >= 2 && g.has_edge(v, s) {
            // v closes the cycle s .. last v; it cannot extend an induced path
            let len = path.len() + 1;
            if len >= min_len && len % 2 == 1 {
                let mut cycle = path.clone();
                cycle.push(v);
                return Some(cycle);
            }
            continue;
        }
        // a non-closing vertex still needs one more vertex to close
        if path.len() + 2 > g.n() {
            continue;
        }
        path.push(v);
        if let Some(c) = grow(g, min_len, allowed, on_path | 1 << v, path) {
            return Some(c);
        }
        path.pop();
    }
    None
}

/// True when `cycle` is an induced cycle of `g` (consecutive vertices
/// adjacent, all other pairs non-adjacent).
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_long_odd_cycles() {
        let c7 = find_odd_hole_geq(&Graph::cycle(7), 7).unwrap();
        assert_eq!(c7.len(), 7);
        assert!(is_induced_cycle(&Graph::cycle(7), &c7));
        assert_eq!(find_odd_hole_geq(&Graph::cycle(9), 7).unwrap().len(), 9);
        assert_eq!(find_odd_hole_geq(&Graph::cycle(5), 5).unwrap().len(), 5);
    }

    #[test]
    fn nothing_in_small_or_even() {
        assert!(find_odd_hole_geq(&Graph::cycle(6), 7).is_none());
        assert!(find_odd_hole_geq(&Graph::cycle(8), 7).is_none());
        assert!(find_odd_hole_geq(&Graph::cycle(5), 7).is_none());
        assert!(find_odd_hole_geq(&Graph::complete(7), 5).is_none());
    }

    #[test]
    fn chord_breaks_the_hole() {
        let mut g = Graph::cycle(9);
        g.add_edge(0, 4).unwrap();
        // 0..4 closes a C5, 4..8,0 a C6: no odd hole of length >= 7
        assert!(find_odd_hole_geq(&g, 7).is_none());
        assert_eq!(find_odd_hole_geq(&g, 5).unwrap().len(), 5);
    }
}
