use std::collections::VecDeque;

use super::{ArrowId, Quiver, Step, VertexId, Walk};
use crate::union_find::UnionFind;

/// Spanning tree of the underlying graph, with the tree walk from the root
/// to every vertex.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    root: VertexId,
    in_tree: Vec<bool>,
    /// Step into each vertex from its parent; `None` at the root.
    parent_step: Vec<Option<Step>>,
}

/// Breadth-first tree from `root`, incident arrows scanned in declaration order.
pub fn spanning_tree(q: &Quiver, root: VertexId) -> SpanningTree {
    let mut in_tree = vec![false; q.arrow_count()];
    let mut parent_step = vec![None; q.vertex_count()];
    let mut seen = vec![false; q.vertex_count()];
    seen[root.0] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for a in q.incident(v) {
            let arrow = q.arrow(a);
            let (step, other) =
                if arrow.source == v { (Step::forward(a), arrow.target) } else { (Step::backward(a), arrow.source) };
            if !seen[other.0] {
                seen[other.0] = true;
                in_tree[a.0] = true;
                parent_step[other.0] = Some(step);
                queue.push_back(other);
            }
        }
    }
    SpanningTree { root, in_tree, parent_step }
}

impl SpanningTree {
    /// Tree built greedily from arrows in `order` (Kruskal), rooted at `root`.
    pub fn kruskal(q: &Quiver, root: VertexId, order: &[ArrowId]) -> SpanningTree {
        let mut uf = UnionFind::new(q.vertex_count());
        let mut in_tree = vec![false; q.arrow_count()];
        for &a in order {
            let arrow = q.arrow(a);
            if uf.union(arrow.source.0, arrow.target.0) {
                in_tree[a.0] = true;
            }
        }
        SpanningTree::from_arrows(q, root, in_tree)
    }

    /// Tree given by membership flags; the flags must describe a spanning tree.
    pub fn from_arrows(q: &Quiver, root: VertexId, in_tree: Vec<bool>) -> SpanningTree {
        let mut parent_step = vec![None; q.vertex_count()];
        let mut seen = vec![false; q.vertex_count()];
        seen[root.0] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for a in q.incident(v) {
                if !in_tree[a.0] {
                    continue;
                }
                let arrow = q.arrow(a);
                let (step, other) = if arrow.source == v {
                    (Step::forward(a), arrow.target)
                } else {
                    (Step::backward(a), arrow.source)
                };
                if !seen[other.0] {
                    seen[other.0] = true;
                    parent_step[other.0] = Some(step);
                    queue.push_back(other);
                }
            }
        }
        assert!(seen.iter().all(|&s| s), "tree arrows do not span the quiver");
        SpanningTree { root, in_tree, parent_step }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn contains(&self, a: ArrowId) -> bool {
        self.in_tree[a.0]
    }

    pub fn arrows(&self) -> Vec<ArrowId> {
        (0..self.in_tree.len()).filter(|&i| self.in_tree[i]).map(ArrowId).collect()
    }

    pub fn arrow_names<'q>(&self, q: &'q Quiver) -> Vec<&'q str> {
        self.arrows().into_iter().map(|a| q.arrow(a).name.as_str()).collect()
    }

    /// Non-tree arrows, in declaration order.
    pub fn cotree(&self) -> Vec<ArrowId> {
        (0..self.in_tree.len()).filter(|&i| !self.in_tree[i]).map(ArrowId).collect()
    }

    /// Walk from the root to `v` along tree arrows.
    pub fn walk_to(&self, q: &Quiver, v: VertexId) -> Walk {
        let mut steps = Vec::new();
        let mut at = v;
        while let Some(step) = self.parent_step[at.0] {
            steps.push(step);
            at = step.start(q);
        }
        steps.reverse();
        Walk::new(q, self.root, steps).expect("tree walk chains")
    }

    /// Closed walk at the root: tree walk to s(a), then a, then back.
    pub fn generator_walk(&self, q: &Quiver, a: ArrowId) -> Walk {
        let arrow = q.arrow(a);
        let there = self.walk_to(q, arrow.source);
        let back = self.walk_to(q, arrow.target).inverse();
        let through = Walk::new(q, arrow.source, vec![Step::forward(a)]).expect("single arrow walk");
        there.compose(&through).and_then(|w| w.compose(&back)).expect("generator walk chains")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfs_prefers_declaration_order() {
        let q = Quiver::from_spec(&["1", "2", "3"], &[("alpha", "2", "1"), ("beta", "3", "2"), ("gamma", "3", "2")]);
        let t = spanning_tree(&q, q.vertex("3").unwrap());
        let mut names = t.arrow_names(&q);
        names.sort();
        assert_eq!(names, ["alpha", "beta"]);
        assert_eq!(t.cotree(), vec![q.arrow_id("gamma").unwrap()]);

        let single = Quiver::from_spec(&["1"], &[]);
        assert!(spanning_tree(&single, VertexId(0)).arrows().is_empty());
    }

    #[test]
    fn ladder_tree_and_walks() {
        let q = Quiver::from_spec(
            &["x0", "x1", "x2"],
            &[("alpha1", "x1", "x0"), ("beta1", "x1", "x0"), ("alpha2", "x2", "x1"), ("beta2", "x2", "x1")],
        );
        let t = spanning_tree(&q, q.vertex("x2").unwrap());
        let mut names = t.arrow_names(&q);
        names.sort();
        assert_eq!(names, ["alpha1", "alpha2"]);
        let g = t.generator_walk(&q, q.arrow_id("beta1").unwrap());
        assert!(g.is_closed());
        assert_eq!(g.source(), q.vertex("x2").unwrap());
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn kruskal_spans() {
        let q = Quiver::from_spec(
            &["x0", "x1", "x2"],
            &[("alpha1", "x1", "x0"), ("beta1", "x1", "x0"), ("alpha2", "x2", "x1"), ("beta2", "x2", "x1")],
        );
        let order = [ArrowId(3), ArrowId(1), ArrowId(2), ArrowId(0)];
        let t = SpanningTree::kruskal(&q, VertexId(0), &order);
        assert_eq!(t.arrows(), vec![ArrowId(1), ArrowId(3)]);
        assert_eq!(t.arrows().len(), q.vertex_count() - 1);
    }
}
