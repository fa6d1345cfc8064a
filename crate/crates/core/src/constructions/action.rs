//! Free actions of a finite cyclic group on a bound quiver and their orbit
//! quotients.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{ArrowId, BoundQuiver, Path, Quiver, Relation, VertexId};
use crate::relations::RelationSpaces;
use crate::union_find::UnionFind;

/// A generator `g` of `Z_order` acting by the given permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupActionSpec {
    pub base: BoundQuiver,
    pub vertex_map: Vec<VertexId>,
    pub arrow_map: Vec<ArrowId>,
    pub order: usize,
}

/// JSON form: images of the generator by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub order: usize,
    pub vertices: BTreeMap<String, String>,
    pub arrows: BTreeMap<String, String>,
}

fn is_permutation(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&i| i < map.len() && !std::mem::replace(&mut seen[i], true))
}

impl GroupActionSpec {
    /// The trivial action.
    pub fn identity(base: &BoundQuiver) -> Self {
        GroupActionSpec {
            base: base.clone(),
            vertex_map: base.quiver.vertices().collect(),
            arrow_map: base.quiver.arrow_ids().collect(),
            order: 1,
        }
    }

    pub fn from_file(base: &BoundQuiver, file: &ActionFile) -> Result<Self> {
        let q = &base.quiver;
        let mut vertex_map: Vec<VertexId> = q.vertices().collect();
        for (from, to) in &file.vertices {
            vertex_map[q.vertex(from)?.0] = q.vertex(to)?;
        }
        let mut arrow_map: Vec<ArrowId> = q.arrow_ids().collect();
        for (from, to) in &file.arrows {
            arrow_map[q.arrow_id(from)?.0] = q.arrow_id(to)?;
        }
        Ok(GroupActionSpec { base: base.clone(), vertex_map, arrow_map, order: file.order })
    }

    pub fn from_json(base: &BoundQuiver, text: &str) -> Result<Self> {
        let file: ActionFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        GroupActionSpec::from_file(base, &file)
    }

    pub fn to_file(&self) -> ActionFile {
        let q = &self.base.quiver;
        ActionFile {
            order: self.order,
            vertices: q
                .vertices()
                .map(|v| (q.vertex_name(v).to_string(), q.vertex_name(self.vertex_map[v.0]).to_string()))
                .collect(),
            arrows: q
                .arrow_ids()
                .map(|a| (q.arrow(a).name.clone(), q.arrow(self.arrow_map[a.0]).name.clone()))
                .collect(),
        }
    }

    fn power_vertex(&self, v: VertexId, k: usize) -> VertexId {
        (0..k).fold(v, |v, _| self.vertex_map[v.0])
    }

    fn power_arrow(&self, a: ArrowId, k: usize) -> ArrowId {
        (0..k).fold(a, |a, _| self.arrow_map[a.0])
    }

    /// Image of a combination of paths under the generator.
    pub fn apply(&self, r: &Relation) -> Relation {
        let q = &self.base.quiver;
        Relation::new(r.terms().iter().map(|(c, p)| (c.clone(), self.apply_path(q, p))))
    }

    fn apply_path(&self, q: &Quiver, p: &Path) -> Path {
        if p.is_stationary() {
            return Path::stationary(self.vertex_map[p.source().0]);
        }
        Path::from_arrows(q, p.arrows().iter().map(|a| self.arrow_map[a.0]).collect())
            .expect("action preserves incidence")
    }

    /// Checks that the maps are quiver automorphisms of order dividing
    /// `order`, that no nontrivial power fixes a vertex, and that the ideal
    /// is stable.
    pub fn validate(&self) -> Result<()> {
        let q = &self.base.quiver;
        let fail = |msg: String| Err(Error::Action(msg));
        if self.order == 0 {
            return fail("order must be positive".into());
        }
        if self.vertex_map.len() != q.vertex_count() || self.arrow_map.len() != q.arrow_count() {
            return fail("maps must cover every vertex and arrow".into());
        }
        if !is_permutation(&self.vertex_map.iter().map(|v| v.0).collect::<Vec<_>>())
            || !is_permutation(&self.arrow_map.iter().map(|a| a.0).collect::<Vec<_>>())
        {
            return fail("maps must be bijections".into());
        }
        for a in q.arrow_ids() {
            let (arrow, image) = (q.arrow(a), q.arrow(self.arrow_map[a.0]));
            if image.source != self.vertex_map[arrow.source.0] || image.target != self.vertex_map[arrow.target.0] {
                return fail(format!("arrow {} is not sent to an arrow between the image vertices", arrow.name));
            }
        }
        for v in q.vertices() {
            if self.power_vertex(v, self.order) != v {
                return fail(format!("g^{} moves vertex {}", self.order, q.vertex_name(v)));
            }
            if let Some(k) = (1..self.order).find(|&k| self.power_vertex(v, k) == v) {
                return fail(format!("g^{k} fixes vertex {}", q.vertex_name(v)));
            }
        }
        for a in q.arrow_ids() {
            if self.power_arrow(a, self.order) != a {
                return fail(format!("g^{} moves arrow {}", self.order, q.arrow(a).name));
            }
        }
        if self.order > 1 {
            let spaces = RelationSpaces::new(&self.base)?;
            for (i, g) in self.base.generators.iter().enumerate() {
                if !spaces.contains(&self.apply(g)) {
                    return fail(format!("image of generator {i} leaves the ideal"));
                }
            }
        }
        Ok(())
    }
}

/// Orbit quotient; each orbit is named after its first member and orbits are
/// ordered by first member. Generators are the images of the base
/// generators, with zeros and duplicates dropped.
pub fn quotient_by_action(action: &GroupActionSpec) -> Result<BoundQuiver> {
    action.validate()?;
    let base = &action.base;
    let q = &base.quiver;
    let orbits = |n: usize, map: &dyn Fn(usize) -> usize| -> (Vec<usize>, Vec<usize>) {
        let mut uf = UnionFind::new(n);
        for i in 0..n {
            uf.union(i, map(i));
        }
        let groups = uf.groups();
        let mut orbit_of = vec![0; n];
        for (k, g) in groups.iter().enumerate() {
            for &i in g {
                orbit_of[i] = k;
            }
        }
        (groups.iter().map(|g| g[0]).collect(), orbit_of)
    };
    let (vreps, vorbit) = orbits(q.vertex_count(), &|i| action.vertex_map[i].0);
    let (areps, aorbit) = orbits(q.arrow_count(), &|i| action.arrow_map[i].0);
    let vname = |i: usize| q.vertex_name(VertexId(i)).to_string();
    let quotient = Quiver::new(
        vreps.iter().map(|&v| vname(v)),
        areps.iter().map(|&a| {
            let arrow = &q.arrows()[a];
            (arrow.name.clone(), vname(vreps[vorbit[arrow.source.0]]), vname(vreps[vorbit[arrow.target.0]]))
        }),
    )?;
    let project = |p: &Path| -> Path {
        if p.is_stationary() {
            Path::stationary(VertexId(vorbit[p.source().0]))
        } else {
            Path::from_arrows(&quotient, p.arrows().iter().map(|a| ArrowId(aorbit[a.0])).collect())
                .expect("projection preserves incidence")
        }
    };
    let mut seen = HashSet::new();
    let mut gens = Vec::new();
    for g in &base.generators {
        let image = Relation::new(g.terms().iter().map(|(c, p)| (c.clone(), project(p))));
        if !image.is_zero() && seen.insert(image.clone()) {
            gens.push(image);
        }
    }
    BoundQuiver::new(quotient, gens, Some(base.truncation), VertexId(vorbit[base.basepoint.0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ladder, ladder_cover};
    use crate::relations::same_ideal;

    fn strip_orbit_index(name: &str) -> String {
        match name.split_once(',') {
            Some((head, j)) => format!("{}{j}", head.trim_end_matches(|c: char| c.is_ascii_digit())),
            None => name.to_string(),
        }
    }

    #[test]
    fn cover_quotients_to_ladder() {
        for n in 2..=4 {
            let (_, action) = ladder_cover(n).unwrap();
            let quotient = quotient_by_action(&action).unwrap();
            let renamed = quotient.quiver.renamed(strip_orbit_index, strip_orbit_index);
            let l = ladder(n).unwrap();
            assert_eq!(renamed, l.quiver);
            let renamed_bq = BoundQuiver { quiver: renamed, ..quotient.clone() };
            let gens: Vec<Relation> = quotient.generators.clone();
            assert_eq!(renamed_bq.generators, gens);
            assert!(same_ideal(&renamed_bq, &l).unwrap(), "n = {n}");
            assert_eq!(renamed_bq.basepoint, l.basepoint);
        }
    }

    #[test]
    fn trivial_action_is_identity() {
        let l = ladder(3).unwrap();
        assert_eq!(quotient_by_action(&GroupActionSpec::identity(&l)).unwrap(), l);
    }

    #[test]
    fn rejects_bad_actions() {
        let (_, mut action) = ladder_cover(2).unwrap();
        action.order = 3;
        assert!(matches!(action.validate(), Err(Error::Action(_))));
        let l = ladder(2).unwrap();
        let mut fixed = GroupActionSpec::identity(&l);
        fixed.order = 2;
        assert!(fixed.validate().is_err());
    }

    #[test]
    fn action_json_round_trip() {
        let (cover, action) = ladder_cover(3).unwrap();
        let text = serde_json::to_string(&action.to_file()).unwrap();
        assert_eq!(GroupActionSpec::from_json(&cover, &text).unwrap(), action);
    }
}
