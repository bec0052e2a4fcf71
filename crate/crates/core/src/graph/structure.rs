use super::{bits, Graph};

impl Graph {
    /// BFS 2-colouring. Returns the two colour classes (the class of the
    /// lowest vertex of each component first) or `None` on an odd cycle.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut colour = vec![u8::MAX; n];
        for root in 0..n {
            if colour[root] != u8::MAX {
                continue;
            }
            colour[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in bits(self.neighbors(u)) {
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        queue.push_back(v);
                    } else if colour[v] == colour[u] {
                        return None;
                    }
                }
            }
        }
        let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| colour[v] == 0);
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Part sizes (ascending) if the graph is complete multipartite, i.e. its
    /// complement is a disjoint union of cliques. A complete graph has all
    /// parts of size one; an edgeless graph is a single part.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<usize>> {
        let parts = self.multipartite_classes()?;
        let mut sizes: Vec<usize> = parts.iter().map(|p| p.count_ones() as usize).collect();
        sizes.sort_unstable();
        Some(sizes)
    }

    /// Vertex classes of a complete multipartite graph, as bitmasks ordered by lowest vertex.
    pub fn multipartite_classes(&self) -> Option<Vec<u64>> {
        let all = self.vertex_mask();
        let mut remaining = all;
        let mut classes = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let class = all & !self.neighbors(v);
            for u in bits(class) {
                if all & !self.neighbors(u) != class {
                    return None;
                }
            }
            classes.push(class);
            remaining &= !class;
        }
        Some(classes)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n()).all(|v| self.degree(v) == self.n() - 1)
    }
}
