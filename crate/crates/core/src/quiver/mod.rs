//! Quivers, paths, walks and bound quivers.
//!
//! Paths compose left to right: the path `[b, a]` runs along `b` and then
//! along `a`, so `t(b) = s(a)`.

mod bound;
pub(crate) mod io;
mod path;
mod tree;

use std::collections::{HashMap, VecDeque};

pub use bound::{BoundQuiver, Issue, Relation, ValidationReport};
pub use io::{ArrowSpec, BoundQuiverFile, TermSpec};
pub use path::{enumerate_paths, Path, Step, Walk};
pub use tree::{spanning_tree, SpanningTree};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// Finite quiver with named vertices and arrows in declaration order.
#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
    outgoing: Vec<Vec<ArrowId>>,
    incoming: Vec<Vec<ArrowId>>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    /// Arrows are `(name, source, target)` triples naming declared vertices.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), VertexId(i)).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut built = Vec::new();
        let mut arrow_index = HashMap::new();
        for (name, from, to) in arrows {
            let source = *vertex_index.get(&from).ok_or_else(|| Error::UnknownVertex(from.clone()))?;
            let target = *vertex_index.get(&to).ok_or_else(|| Error::UnknownVertex(to.clone()))?;
            if arrow_index.insert(name.clone(), ArrowId(built.len())).is_some() {
                return Err(Error::DuplicateArrow(name));
            }
            built.push(Arrow { name, source, target });
        }
        let mut outgoing = vec![Vec::new(); vertices.len()];
        let mut incoming = vec![Vec::new(); vertices.len()];
        for (i, a) in built.iter().enumerate() {
            outgoing[a.source.0].push(ArrowId(i));
            incoming[a.target.0].push(ArrowId(i));
        }
        Ok(Quiver { vertices, arrows: built, vertex_index, arrow_index, outgoing, incoming })
    }

    /// Convenience constructor from string slices; panics on malformed input.
    pub fn from_spec(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Self {
        Quiver::new(
            vertices.iter().copied(),
            arrows.iter().map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
        )
        .expect("well-formed quiver spec")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id.0]
    }

    pub fn vertex_name(&self, id: VertexId) -> &str {
        &self.vertices[id.0]
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId> {
        self.arrow_index.get(name).copied().ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn outgoing(&self, v: VertexId) -> &[ArrowId] {
        &self.outgoing[v.0]
    }

    pub fn incoming(&self, v: VertexId) -> &[ArrowId] {
        &self.incoming[v.0]
    }

    /// Arrows touching `v`, in declaration order, loops once.
    pub fn incident(&self, v: VertexId) -> Vec<ArrowId> {
        let mut all: Vec<ArrowId> = self.outgoing[v.0].iter().chain(&self.incoming[v.0]).copied().collect();
        all.sort();
        all.dedup();
        all
    }

    /// Whether the underlying undirected graph is connected.
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([VertexId(0)]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for a in self.incident(v) {
                let arrow = self.arrow(a);
                for u in [arrow.source, arrow.target] {
                    if !seen[u.0] {
                        seen[u.0] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Topological order of the vertices, or `None` if there is an oriented cycle.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        let mut indegree: Vec<usize> = self.incoming.iter().map(Vec::len).collect();
        let mut queue: VecDeque<VertexId> = self.vertices().filter(|v| indegree[v.0] == 0).collect();
        let mut order = Vec::with_capacity(self.vertices.len());
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &a in &self.outgoing[v.0] {
                let t = self.arrow(a).target;
                indegree[t.0] -= 1;
                if indegree[t.0] == 0 {
                    queue.push_back(t);
                }
            }
        }
        (order.len() == self.vertices.len()).then_some(order)
    }

    /// No oriented cycles (loops count as cycles).
    pub fn is_triangular(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Length of the longest path, `None` for cyclic quivers.
    pub fn longest_path(&self) -> Option<usize> {
        let order = self.topological_order()?;
        let mut best = vec![0usize; self.vertices.len()];
        for v in order.into_iter().rev() {
            best[v.0] = self.outgoing[v.0].iter().map(|&a| best[self.arrow(a).target.0] + 1).max().unwrap_or(0);
        }
        Some(best.into_iter().max().unwrap_or(0))
    }

    /// Copy with every vertex and arrow renamed.
    pub fn renamed(&self, vertex: impl Fn(&str) -> String, arrow: impl Fn(&str) -> String) -> Quiver {
        Quiver::new(
            self.vertices.iter().map(|v| vertex(v)),
            self.arrows
                .iter()
                .map(|a| (arrow(&a.name), vertex(&self.vertices[a.source.0]), vertex(&self.vertices[a.target.0]))),
        )
        .expect("renaming must stay injective")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_and_longest_path() {
        let single = Quiver::from_spec(&["1"], &[]);
        assert!(single.is_triangular());
        assert_eq!(single.longest_path(), Some(0));

        let loop_q = Quiver::from_spec(&["1"], &[("l", "1", "1")]);
        assert!(!loop_q.is_triangular());
        assert_eq!(loop_q.longest_path(), None);

        let chain = Quiver::from_spec(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]);
        assert_eq!(chain.longest_path(), Some(2));
        assert!(chain.is_connected());
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(Quiver::new(["1", "1"], std::iter::empty()), Err(Error::DuplicateVertex(_))));
        assert!(matches!(Quiver::new(["1"], [("a".into(), "1".into(), "2".into())]), Err(Error::UnknownVertex(_))));
        let disconnected = Quiver::from_spec(&["1", "2"], &[]);
        assert!(!disconnected.is_connected());
    }
}
