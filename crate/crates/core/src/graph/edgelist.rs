use super::Graph;
use crate::{Error, Result};

/// Parse an edge list: one `u v` pair of 0-based vertices per line, `#`
/// starts a comment. The vertex count is one more than the largest index seen.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [u, v] => {
                let parse =
                    |s: &str| s.parse::<usize>().map_err(|_| Error::parse(offset, format!("bad vertex index {s:?}")));
                let (u, v) = (parse(u)?, parse(v)?);
                n = n.max(u + 1).max(v + 1);
                edges.push((u, v));
            }
            _ => return Err(Error::parse(offset, format!("expected `u v`, got {:?}", body.trim()))),
        }
        offset += line.len();
    }
    if n == 0 {
        return Err(Error::parse(0, "edge list has no edges"));
    }
    Graph::from_edges(n, &edges)
}
