use std::collections::HashMap;

use super::InstanceError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub range: usize,
    pub source: usize,
}

/// A finite directed graph. Paths compose right to left: `e1 e2` is a path
/// when `s(e1) = r(e2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

/// A path as a vertex (length zero) or a nonempty edge sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Path {
    Vertex(usize),
    Edges(Vec<usize>),
}

impl Graph {
    /// `edges` lists `(name, range, source)` by vertex name.
    pub fn new(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self, InstanceError> {
        let owned: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
        let owned_edges: Vec<(String, String, String)> = edges
            .iter()
            .map(|(e, r, s)| (e.to_string(), r.to_string(), s.to_string()))
            .collect();
        Self::from_names(owned, owned_edges)
    }

    pub fn from_names(
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
    ) -> Result<Self, InstanceError> {
        let mut names: HashMap<&str, usize> = HashMap::new();
        for (k, v) in vertices.iter().enumerate() {
            validate_name(v)?;
            if names.insert(v, k).is_some() {
                return Err(InstanceError::DuplicateName(v.clone()));
            }
        }
        let mut seen_edges: HashMap<&str, ()> = HashMap::new();
        let mut out = Vec::with_capacity(edges.len());
        for (name, r, s) in &edges {
            validate_name(name)?;
            if names.contains_key(name.as_str()) || seen_edges.insert(name, ()).is_some() {
                return Err(InstanceError::DuplicateName(name.clone()));
            }
            let lookup = |v: &String| {
                names.get(v.as_str()).copied().ok_or_else(|| InstanceError::UnknownVertex {
                    edge: name.clone(),
                    vertex: v.clone(),
                })
            };
            out.push(Edge {
                name: name.clone(),
                range: lookup(r)?,
                source: lookup(s)?,
            });
        }
        Ok(Graph {
            vertices,
            edges: out,
        })
    }

    /// Three vertices `u, v, w` and edges `e: w → u`, `f, g: v → w`, written
    /// as `r(e) = u`, `s(e) = w`, `r(f) = r(g) = w`, `s(f) = s(g) = v`.
    pub fn e_star() -> Self {
        Graph::new(
            &["u", "v", "w"],
            &[("e", "u", "w"), ("f", "w", "v"), ("g", "w", "v")],
        )
        .expect("well-formed")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// Edges with range `v`, sorted by name.
    pub fn range_inverse(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.edges.len())
            .filter(|e| self.edges[*e].range == v)
            .collect();
        out.sort_by(|a, b| self.edges[*a].name.cmp(&self.edges[*b].name));
        out
    }

    /// A vertex receiving no edge; paths cannot be extended past it.
    pub fn is_sink(&self, v: usize) -> bool {
        self.edges.iter().all(|e| e.range != v)
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|v| self.is_sink(*v)).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on the relation r(e) → s(e).
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for e in &self.edges {
            indegree[e.source] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|v| indegree[*v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for e in self.edges.iter().filter(|e| e.range == v) {
                indegree[e.source] -= 1;
                if indegree[e.source] == 0 {
                    stack.push(e.source);
                }
            }
        }
        seen == n
    }

    pub fn path_range(&self, p: &Path) -> usize {
        match p {
            Path::Vertex(v) => *v,
            Path::Edges(es) => self.edges[es[0]].range,
        }
    }

    pub fn path_source(&self, p: &Path) -> usize {
        match p {
            Path::Vertex(v) => *v,
            Path::Edges(es) => self.edges[*es.last().expect("nonempty")].source,
        }
    }

    pub fn path_len(p: &Path) -> usize {
        match p {
            Path::Vertex(_) => 0,
            Path::Edges(es) => es.len(),
        }
    }

    /// All paths of length at most `max_len`, vertices first, then by length.
    pub fn paths(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices.len()).map(Path::Vertex).collect();
        let mut layer: Vec<Vec<usize>> = (0..self.edges.len()).map(|e| vec![e]).collect();
        for _ in 0..max_len {
            if layer.is_empty() {
                break;
            }
            out.extend(layer.iter().cloned().map(Path::Edges));
            let mut next = Vec::new();
            for p in &layer {
                let tail = self.edges[*p.last().expect("nonempty")].source;
                for e in 0..self.edges.len() {
                    if self.edges[e].range == tail {
                        let mut q = p.clone();
                        q.push(e);
                        next.push(q);
                    }
                }
            }
            layer = next;
        }
        out
    }

    /// Longest path length, `None` for cyclic graphs.
    pub fn longest_path(&self) -> Option<usize> {
        if !self.is_acyclic() {
            return None;
        }
        Some(
            self.paths(self.vertices.len())
                .iter()
                .map(Graph::path_len)
                .max()
                .unwrap_or(0),
        )
    }

    pub fn path_name(&self, p: &Path) -> String {
        match p {
            Path::Vertex(v) => self.vertices[*v].clone(),
            Path::Edges(es) => es.iter().map(|e| self.edges[*e].name.as_str()).collect(),
        }
    }
}

fn validate_name(name: &str) -> Result<(), InstanceError> {
    let ok = name.starts_with(|c: char| c.is_alphabetic() || c == '_')
        && name
            .chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
    if ok {
        Ok(())
    } else {
        Err(InstanceError::BadName(name.to_string()))
    }
}
