use std::cmp::Ordering;

use super::{ArrowId, Quiver, VertexId};
use crate::error::{Error, Result};

/// Path in a quiver; an empty arrow list is the stationary path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Ord for Path {
    /// Length first, then lexicographic on arrow indices.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Path {
    pub fn stationary(v: VertexId) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Self {
        let arrow = q.arrow(a);
        Path { source: arrow.source, target: arrow.target, arrows: vec![a] }
    }

    pub fn new(q: &Quiver, source: VertexId, arrows: Vec<ArrowId>) -> Result<Self> {
        let mut at = source;
        for &a in &arrows {
            let arrow = q.arrow(a);
            if arrow.source != at {
                return Err(Error::NotComposable(format!(
                    "arrow {:?} starts at {:?}, expected {:?}",
                    arrow.name,
                    q.vertex_name(arrow.source),
                    q.vertex_name(at)
                )));
            }
            at = arrow.target;
        }
        Ok(Path { source, target: at, arrows })
    }

    /// Path through a nonempty arrow list, source taken from the first arrow.
    pub fn from_arrows(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Self> {
        let first = arrows.first().ok_or_else(|| Error::NotComposable("empty arrow list has no source".into()))?;
        Path::new(q, q.arrow(*first).source, arrows)
    }

    /// Path from arrow names in composition order.
    pub fn from_names(q: &Quiver, names: &[&str]) -> Result<Self> {
        let ids = names.iter().map(|n| q.arrow_id(n)).collect::<Result<Vec<_>>>()?;
        Path::from_arrows(q, ids)
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_stationary(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `other`, if the endpoints chain.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    pub fn is_parallel(&self, other: &Path) -> bool {
        self.source == other.source && self.target == other.target
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertex_name(self.source))
        } else {
            self.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join("·")
        }
    }

    pub fn names<'q>(&self, q: &'q Quiver) -> Vec<&'q str> {
        self.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect()
    }
}

/// All paths of length at most `max_len` matching the endpoint filters, in
/// path order (length, then arrow indices).
pub fn enumerate_paths(q: &Quiver, from: Option<VertexId>, to: Option<VertexId>, max_len: usize) -> Vec<Path> {
    let mut level: Vec<Path> = match from {
        Some(v) => vec![Path::stationary(v)],
        None => q.vertices().map(Path::stationary).collect(),
    };
    let mut out = Vec::new();
    for len in 0..=max_len {
        out.extend(level.iter().filter(|p| to.is_none_or(|t| p.target == t)).cloned());
        if len == max_len {
            break;
        }
        let mut next = Vec::new();
        for p in &level {
            for &a in q.outgoing(p.target) {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                next.push(Path { source: p.source, target: q.arrow(a).target, arrows });
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub arrow: ArrowId,
    pub inverse: bool,
}

impl Step {
    pub fn forward(arrow: ArrowId) -> Self {
        Step { arrow, inverse: false }
    }

    pub fn backward(arrow: ArrowId) -> Self {
        Step { arrow, inverse: true }
    }

    pub fn flip(self) -> Self {
        Step { arrow: self.arrow, inverse: !self.inverse }
    }

    pub fn start(self, q: &Quiver) -> VertexId {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    pub fn end(self, q: &Quiver) -> VertexId {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }
}

/// Walk: arrows and formal inverses, chained end to start.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    source: VertexId,
    target: VertexId,
    steps: Vec<Step>,
}

impl Walk {
    pub fn stationary(v: VertexId) -> Self {
        Walk { source: v, target: v, steps: Vec::new() }
    }

    pub fn new(q: &Quiver, source: VertexId, steps: Vec<Step>) -> Result<Self> {
        let mut at = source;
        for s in &steps {
            if s.start(q) != at {
                return Err(Error::NotComposable(format!(
                    "step along {:?} does not start at {:?}",
                    q.arrow(s.arrow).name,
                    q.vertex_name(at)
                )));
            }
            at = s.end(q);
        }
        Ok(Walk { source, target: at, steps })
    }

    pub fn from_path(p: &Path) -> Self {
        Walk { source: p.source, target: p.target, steps: p.arrows.iter().map(|&a| Step::forward(a)).collect() }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.source == self.target
    }

    /// Reverse order and flip every step.
    pub fn inverse(&self) -> Walk {
        Walk { source: self.target, target: self.source, steps: self.steps.iter().rev().map(|s| s.flip()).collect() }
    }

    pub fn compose(&self, other: &Walk) -> Option<Walk> {
        if self.target != other.source {
            return None;
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Some(Walk { source: self.source, target: other.target, steps })
    }

    /// Cancels adjacent `α α⁻¹` and `α⁻¹ α` pairs.
    pub fn reduced(&self) -> Walk {
        let mut steps: Vec<Step> = Vec::with_capacity(self.steps.len());
        for &s in &self.steps {
            if steps.last().is_some_and(|&l| l == s.flip()) {
                steps.pop();
            } else {
                steps.push(s);
            }
        }
        Walk { source: self.source, target: self.target, steps }
    }
}
