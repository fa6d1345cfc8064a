//! Gluing bound quivers at a vertex.

use crate::error::{Error, Result};
use crate::quiver::{enumerate_paths, ArrowId, BoundQuiver, Path, Quiver, Relation, VertexId};

pub const GLUE_VERTEX: &str = "x";

pub fn component_prefix(k: usize) -> String {
    format!("c{k}.")
}

/// Coproduct of several components, with the map from each component into
/// the glued quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedQuiver {
    pub bound: BoundQuiver,
    pub vertex_maps: Vec<Vec<VertexId>>,
    pub arrow_maps: Vec<Vec<ArrowId>>,
    pub glue: VertexId,
}

impl GluedQuiver {
    pub fn component_count(&self) -> usize {
        self.vertex_maps.len()
    }

    /// Transport of a combination of paths from component `k`.
    pub fn embed(&self, k: usize, r: &Relation) -> Result<Relation> {
        let arrows = self.arrow_maps.get(k).ok_or(Error::UnknownComponent(k))?;
        let vertices = &self.vertex_maps[k];
        Ok(Relation::new(
            r.terms().iter().map(|(c, p)| (c.clone(), embed_path(&self.bound.quiver, vertices, arrows, p))),
        ))
    }
}

fn embed_path(q: &Quiver, vertices: &[VertexId], arrows: &[ArrowId], p: &Path) -> Path {
    if p.is_stationary() {
        Path::stationary(vertices[p.source().0])
    } else {
        Path::from_arrows(q, p.arrows().iter().map(|a| arrows[a.0]).collect()).expect("embedding preserves incidence")
    }
}

/// Binary coproduct gluing `left_at` to `right_at`.
pub fn coproduct(
    left: &BoundQuiver,
    left_at: VertexId,
    right: &BoundQuiver,
    right_at: VertexId,
) -> Result<GluedQuiver> {
    coproduct_all(&[(left.clone(), left_at), (right.clone(), right_at)])
}

/// Glues all components at the chosen vertices. The result is cross-path
/// free when no component enters the glue vertex while another leaves it;
/// otherwise every component must be acyclic. The ideal is the sum of the
/// component ideals plus, for components truncated below the common
/// exponent, their paths of length equal to their own exponent.
pub fn coproduct_all(parts: &[(BoundQuiver, VertexId)]) -> Result<GluedQuiver> {
    if parts.is_empty() {
        return Err(Error::BadParameter("coproduct of no components".into()));
    }
    for (k, (bq, at)) in parts.iter().enumerate() {
        if at.0 >= bq.quiver.vertex_count() {
            return Err(Error::UnknownVertex(format!("component {k} vertex #{}", at.0)));
        }
    }
    let entering: Vec<usize> =
        parts.iter().enumerate().filter(|(_, (bq, at))| !bq.quiver.incoming(*at).is_empty()).map(|(k, _)| k).collect();
    let leaving: Vec<usize> =
        parts.iter().enumerate().filter(|(_, (bq, at))| !bq.quiver.outgoing(*at).is_empty()).map(|(k, _)| k).collect();
    let cross = entering.iter().any(|i| leaving.iter().any(|j| i != j));
    let acyclic = parts.iter().all(|(bq, _)| bq.quiver.is_triangular());
    if cross && !acyclic {
        return Err(Error::GlueSafety(
            "a cyclic component meets the glue vertex while paths cross it between components".into(),
        ));
    }

    let mut vertices = vec![GLUE_VERTEX.to_string()];
    let mut arrows = Vec::new();
    let mut vertex_maps = Vec::new();
    for (k, (bq, at)) in parts.iter().enumerate() {
        let q = &bq.quiver;
        let prefix = component_prefix(k);
        let name =
            |v: VertexId| if v == *at { GLUE_VERTEX.to_string() } else { format!("{prefix}{}", q.vertex_name(v)) };
        let mut map = Vec::new();
        for v in q.vertices() {
            if v == *at {
                map.push(VertexId(0));
            } else {
                map.push(VertexId(vertices.len()));
                vertices.push(name(v));
            }
        }
        vertex_maps.push(map);
        for a in q.arrows() {
            arrows.push((format!("{prefix}{}", a.name), name(a.source), name(a.target)));
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let mut arrow_maps = Vec::new();
    let mut offset = 0;
    for (bq, _) in parts {
        arrow_maps.push((offset..offset + bq.quiver.arrow_count()).map(ArrowId).collect::<Vec<_>>());
        offset += bq.quiver.arrow_count();
    }

    let truncation = if acyclic {
        (quiver.longest_path().expect("acyclic") + 1).max(2)
    } else {
        parts.iter().map(|(bq, _)| bq.truncation).max().expect("nonempty")
    };
    let mut generators = Vec::new();
    for (k, (bq, _)) in parts.iter().enumerate() {
        let embed = |p: &Path| embed_path(&quiver, &vertex_maps[k], &arrow_maps[k], p);
        for g in &bq.generators {
            generators.push(Relation::new(g.terms().iter().map(|(c, p)| (c.clone(), embed(p)))));
        }
        if !acyclic && bq.truncation < truncation {
            for p in enumerate_paths(&bq.quiver, None, None, bq.truncation) {
                if p.len() == bq.truncation {
                    generators.push(Relation::monomial(embed(&p)));
                }
            }
        }
    }
    let bound = BoundQuiver::new(quiver, generators, Some(truncation), VertexId(0))?;
    Ok(GluedQuiver { bound, vertex_maps, arrow_maps, glue: VertexId(0) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ladder, parallel_arrows_example, quiver_from_group};
    use crate::group::GroupPresentation;
    use crate::relations::algebra_basis;

    #[test]
    fn dimensions_add_without_cross_paths() {
        let a = ladder(2).unwrap();
        let b = parallel_arrows_example();
        let glued = coproduct(&a, a.basepoint, &b, b.basepoint).unwrap();
        assert!(glued.bound.validate().is_valid());
        let d = |bq: &BoundQuiver| algebra_basis(bq).unwrap().1;
        assert_eq!(d(&glued.bound), d(&a) + d(&b) - 1);
        assert_eq!(glued.bound.quiver.vertex_count(), 3 + 3 - 1);
    }

    #[test]
    fn cyclic_components_pad_truncation() {
        let g1 = quiver_from_group(&GroupPresentation::cyclic(2));
        let g2 = quiver_from_group(&GroupPresentation::cyclic(5));
        assert!(g1.truncation < g2.truncation);
        let glued = coproduct(&g1, VertexId(0), &g2, VertexId(0)).unwrap();
        assert_eq!(glued.bound.truncation, g2.truncation);
        let d = |bq: &BoundQuiver| algebra_basis(bq).unwrap().1;
        assert_eq!(d(&glued.bound), d(&g1) + d(&g2) - 1);
    }

    #[test]
    fn glue_safety() {
        let g = quiver_from_group(&GroupPresentation::cyclic(2));
        let middle = g.quiver.vertex("2").unwrap();
        assert!(matches!(coproduct(&g, middle, &g, VertexId(0)), Err(Error::GlueSafety(_))));
    }
}
