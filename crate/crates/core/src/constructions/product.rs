//! Tensor product of bound quivers.

use crate::error::Result;
use crate::quiver::{enumerate_paths, ArrowId, BoundQuiver, Path, Quiver, Relation, Step, VertexId, Walk};

/// Where an arrow of the product comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductArrow {
    /// `(θ, y)` for an arrow `θ` of the left factor.
    Left { arrow: ArrowId, at: VertexId },
    /// `(x, θ)` for an arrow `θ` of the right factor.
    Right { at: VertexId, arrow: ArrowId },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductQuiver {
    pub bound: BoundQuiver,
    pub left: BoundQuiver,
    pub right: BoundQuiver,
    /// Factor vertices of each product vertex.
    pub pairs: Vec<(VertexId, VertexId)>,
    pub origins: Vec<ProductArrow>,
}

pub fn product_vertex_name(x: &str, y: &str) -> String {
    format!("({x},{y})")
}

impl ProductQuiver {
    pub fn vertex(&self, x: VertexId, y: VertexId) -> VertexId {
        VertexId(x.0 * self.right.quiver.vertex_count() + y.0)
    }

    pub fn left_arrow(&self, arrow: ArrowId, at: VertexId) -> ArrowId {
        ArrowId(arrow.0 * self.right.quiver.vertex_count() + at.0)
    }

    pub fn right_arrow(&self, at: VertexId, arrow: ArrowId) -> ArrowId {
        let offset = self.left.quiver.arrow_count() * self.right.quiver.vertex_count();
        ArrowId(offset + at.0 * self.right.quiver.arrow_count() + arrow.0)
    }

    /// `(p, y)` for a path `p` of the left factor.
    pub fn lift_left(&self, r: &Relation, at: VertexId) -> Relation {
        self.lift(r, |p| self.lift_left_path(p, at))
    }

    /// `(x, p)` for a path `p` of the right factor.
    pub fn lift_right(&self, r: &Relation, at: VertexId) -> Relation {
        self.lift(r, |p| self.lift_right_path(p, at))
    }

    fn lift(&self, r: &Relation, f: impl Fn(&Path) -> Path) -> Relation {
        Relation::new(r.terms().iter().map(|(c, p)| (c.clone(), f(p))))
    }

    fn lift_left_path(&self, p: &Path, at: VertexId) -> Path {
        if p.is_stationary() {
            return Path::stationary(self.vertex(p.source(), at));
        }
        Path::from_arrows(&self.bound.quiver, p.arrows().iter().map(|&a| self.left_arrow(a, at)).collect())
            .expect("lift preserves incidence")
    }

    fn lift_right_path(&self, p: &Path, at: VertexId) -> Path {
        if p.is_stationary() {
            return Path::stationary(self.vertex(at, p.source()));
        }
        Path::from_arrows(&self.bound.quiver, p.arrows().iter().map(|&a| self.right_arrow(at, a)).collect())
            .expect("lift preserves incidence")
    }

    pub fn lift_left_walk(&self, w: &Walk, at: VertexId) -> Walk {
        let steps =
            w.steps().iter().map(|s| Step { arrow: self.left_arrow(s.arrow, at), inverse: s.inverse }).collect();
        Walk::new(&self.bound.quiver, self.vertex(w.source(), at), steps).expect("lift preserves incidence")
    }

    pub fn lift_right_walk(&self, w: &Walk, at: VertexId) -> Walk {
        let steps =
            w.steps().iter().map(|s| Step { arrow: self.right_arrow(at, s.arrow), inverse: s.inverse }).collect();
        Walk::new(&self.bound.quiver, self.vertex(at, w.source()), steps).expect("lift preserves incidence")
    }
}

/// Image of a product walk in the left factor: right-factor steps collapse.
pub fn product_projection_word(pq: &ProductQuiver, walk: &Walk) -> Walk {
    project(pq, walk, true)
}

/// Image of a product walk in the right factor.
pub fn product_projection_word_right(pq: &ProductQuiver, walk: &Walk) -> Walk {
    project(pq, walk, false)
}

fn project(pq: &ProductQuiver, walk: &Walk, left: bool) -> Walk {
    let (x, y) = pq.pairs[walk.source().0];
    let steps = walk
        .steps()
        .iter()
        .filter_map(|s| match (pq.origins[s.arrow.0], left) {
            (ProductArrow::Left { arrow, .. }, true) | (ProductArrow::Right { arrow, .. }, false) => {
                Some(Step { arrow, inverse: s.inverse })
            }
            _ => None,
        })
        .collect();
    let (q, start) = if left { (&pq.left.quiver, x) } else { (&pq.right.quiver, y) };
    Walk::new(q, start, steps).expect("projection preserves incidence")
}

/// `Q' ⊗ Q''`: vertices `(x,y)`, arrows `c0.θ@y` and `c1.θ@x`. The ideal is
/// generated by lifts of both factor ideals (with their truncation paths),
/// and the commutativity squares; truncation `m' + m'' − 1`.
pub fn product(left: &BoundQuiver, right: &BoundQuiver) -> Result<ProductQuiver> {
    let (lq, rq) = (&left.quiver, &right.quiver);
    let mut vertices = Vec::new();
    let mut pairs = Vec::new();
    for x in lq.vertices() {
        for y in rq.vertices() {
            vertices.push(product_vertex_name(lq.vertex_name(x), rq.vertex_name(y)));
            pairs.push((x, y));
        }
    }
    let vname = |x: VertexId, y: VertexId| product_vertex_name(lq.vertex_name(x), rq.vertex_name(y));
    let mut arrows = Vec::new();
    let mut origins = Vec::new();
    for a in lq.arrow_ids() {
        let arrow = lq.arrow(a);
        for y in rq.vertices() {
            arrows.push((
                format!("c0.{}@{}", arrow.name, rq.vertex_name(y)),
                vname(arrow.source, y),
                vname(arrow.target, y),
            ));
            origins.push(ProductArrow::Left { arrow: a, at: y });
        }
    }
    for x in lq.vertices() {
        for a in rq.arrow_ids() {
            let arrow = rq.arrow(a);
            arrows.push((
                format!("c1.{}@{}", arrow.name, lq.vertex_name(x)),
                vname(x, arrow.source),
                vname(x, arrow.target),
            ));
            origins.push(ProductArrow::Right { at: x, arrow: a });
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let truncation = left.truncation + right.truncation - 1;
    let basepoint = VertexId(left.basepoint.0 * rq.vertex_count() + right.basepoint.0);
    let mut pq = ProductQuiver {
        bound: BoundQuiver::new(quiver, Vec::new(), Some(truncation), basepoint)?,
        left: left.clone(),
        right: right.clone(),
        pairs,
        origins,
    };

    let lifts = |bq: &BoundQuiver| -> Vec<Relation> {
        let mut out = bq.generators.clone();
        if bq.quiver.longest_path().is_none_or(|l| l >= bq.truncation) {
            out.extend(
                enumerate_paths(&bq.quiver, None, None, bq.truncation)
                    .into_iter()
                    .filter(|p| p.len() == bq.truncation)
                    .map(Relation::monomial),
            );
        }
        out
    };
    let mut generators = Vec::new();
    for g in lifts(left) {
        for y in rq.vertices() {
            generators.push(pq.lift_left(&g, y));
        }
    }
    for g in lifts(right) {
        for x in lq.vertices() {
            generators.push(pq.lift_right(&g, x));
        }
    }
    let q = &pq.bound.quiver;
    for a in lq.arrow_ids() {
        let alpha = lq.arrow(a);
        for b in rq.arrow_ids() {
            let beta = rq.arrow(b);
            let down_then_across =
                Path::from_arrows(q, vec![pq.right_arrow(alpha.source, b), pq.left_arrow(a, beta.target)])
                    .expect("square commutes");
            let across_then_down =
                Path::from_arrows(q, vec![pq.left_arrow(a, beta.source), pq.right_arrow(alpha.target, b)])
                    .expect("square commutes");
            generators.push(Relation::difference(down_then_across, across_then_down));
        }
    }
    pq.bound.generators = generators;
    Ok(pq)
}
