use crate::error::{Error, Result};

use super::cnf::parse_count;

/// Undirected simple graph on `0..num_vertices`, optionally carrying a
/// terminal set and a bipartition `[0, a) | [a, n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    terminals: Option<Vec<usize>>,
    bipartition: Option<usize>,
}

impl Graph {
    pub fn new(num_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {u}")));
            }
            if u.max(v) >= num_vertices {
                return Err(Error::param(format!(
                    "edge ({u}, {v}) outside {num_vertices} vertices"
                )));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::param("duplicate edge"));
        }
        Ok(Graph {
            num_vertices,
            edges: list,
            terminals: None,
            bipartition: None,
        })
    }

    pub fn with_terminals(mut self, terminals: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut t: Vec<usize> = terminals.into_iter().collect();
        t.sort_unstable();
        t.dedup();
        if t.last().is_some_and(|&v| v >= self.num_vertices) {
            return Err(Error::param("terminal outside the vertex set"));
        }
        self.terminals = Some(t);
        Ok(self)
    }

    /// Declare `[0, a)` as side A and `[a, n)` as side B.
    pub fn with_bipartition(mut self, a: usize) -> Result<Self> {
        if a > self.num_vertices {
            return Err(Error::param("bipartition split beyond the vertex count"));
        }
        if let Some(&(u, v)) = self.edges.iter().find(|&&(u, v)| (u < a) == (v < a)) {
            return Err(Error::param(format!(
                "edge ({u}, {v}) does not cross the bipartition at {a}"
            )));
        }
        self.bipartition = Some(a);
        Ok(self)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn terminals(&self) -> Option<&[usize]> {
        self.terminals.as_deref()
    }

    pub fn bipartition(&self) -> Option<usize> {
        self.bipartition
    }

    /// Neighborhood masks (at most 64 vertices).
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.num_vertices > 64 {
            return None;
        }
        let mut adj = vec![0u64; self.num_vertices];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Some(adj)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut terminals = None;
        let mut bipartition = None;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let Some((n, _)) = header else {
                if parts.len() != 4 || parts[0] != "p" || parts[1] != "graph" {
                    return Err(Error::parse(line_no, "expected `p graph <n> <m>`"));
                }
                header = Some((parse_count(parts[2], line_no)?, parse_count(parts[3], line_no)?));
                continue;
            };
            match parts[0] {
                "terminals" => {
                    let mut t = Vec::new();
                    for tok in &parts[1..] {
                        let v = parse_count(tok, line_no)?;
                        if v >= n {
                            return Err(Error::parse(line_no, format!("terminal {v} out of range")));
                        }
                        t.push(v);
                    }
                    terminals = Some((t, line_no));
                }
                "bipartition" => {
                    if parts.len() != 2 {
                        return Err(Error::parse(line_no, "expected `bipartition <a>`"));
                    }
                    bipartition = Some((parse_count(parts[1], line_no)?, line_no));
                }
                _ => {
                    if parts.len() != 2 {
                        return Err(Error::parse(line_no, "expected an edge `u v`"));
                    }
                    let u = parse_count(parts[0], line_no)?;
                    let v = parse_count(parts[1], line_no)?;
                    if u.max(v) >= n {
                        return Err(Error::parse(line_no, format!("edge ({u}, {v}) out of range")));
                    }
                    if u == v {
                        return Err(Error::parse(line_no, "self-loop"));
                    }
                    let e = (u.min(v), u.max(v));
                    if edges.iter().any(|&(x, _)| x == e) {
                        return Err(Error::parse(line_no, "duplicate edge"));
                    }
                    edges.push((e, line_no));
                }
            }
        }
        let Some((n, m)) = header else {
            return Err(Error::parse(last_line.max(1), "missing `p graph` header"));
        };
        if edges.len() != m {
            return Err(Error::parse(
                last_line,
                format!("header declares {m} edges, found {}", edges.len()),
            ));
        }
        let mut g = Graph::new(n, edges.into_iter().map(|(e, _)| e))?;
        if let Some((t, line)) = terminals {
            g = g.with_terminals(t).map_err(|e| Error::parse(line, e.to_string()))?;
        }
        if let Some((a, line)) = bipartition {
            g = g.with_bipartition(a).map_err(|e| Error::parse(line, e.to_string()))?;
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p graph {} {}\n", self.num_vertices, self.edges.len());
        if let Some(t) = &self.terminals {
            out.push_str("terminals");
            for v in t {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        if let Some(a) = self.bipartition {
            out.push_str(&format!("bipartition {a}\n"));
        }
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_are_enforced() {
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(g.clone().with_bipartition(1).is_err());
        assert!(g.clone().with_terminals([3]).is_err());
        let b = Graph::new(3, [(0, 1), (0, 2)]).unwrap().with_bipartition(1).unwrap();
        assert_eq!(b.bipartition(), Some(1));
    }

    #[test]
    fn text_round_trip() {
        let text = "p graph 4 2\nterminals 0 3\nbipartition 2\n0 2\n1 3\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.terminals(), Some(&[0, 3][..]));
        assert_eq!(g.to_text(), text);
        let err = Graph::parse("p graph 3 1\n0 1\nbipartition 1\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = Graph::parse("p graph 3 2\n0 1\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }
}
