//! Concrete bound quivers: `Q_G`, ladders and their covers, loop families and
//! the parallel-arrows example.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{canonical_cyclic, free_reduce, inverse_word, GroupPresentation, Word};
use crate::linalg::rational;
use crate::quiver::{enumerate_paths, ArrowId, BoundQuiver, Path, Quiver, Relation, VertexId};

use super::action::GroupActionSpec;

fn owned(arrows: Vec<(String, String, String)>) -> impl Iterator<Item = (String, String, String)> {
    arrows.into_iter()
}

fn path(q: &Quiver, names: &[String]) -> Path {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Path::from_names(q, &refs).expect("construction paths compose")
}

/// Reduced, nonempty, pairwise distinct relators, each with a positive letter.
pub fn normalize_relators(g: &GroupPresentation) -> Vec<Word> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in &g.relators {
        let mut w = free_reduce(r);
        if w.is_empty() {
            continue;
        }
        if w.iter().all(|l| l.inverse) {
            w = inverse_word(&w);
        }
        if seen.insert(w.clone()) {
            out.push(w);
        }
    }
    out
}

pub fn loop_name(kind: &str, generator: &str) -> String {
    format!("{kind}_{generator}")
}

/// `Q_G`: `1 -a-> 2 -b-> 3` with loops `alpha_g`, `beta_g` at 2 for every
/// generator `g`; `beta_g` plays the letter `g⁻¹`. The ideal identifies
/// `a·alpha_g·beta_g·b` and `a·w·b` with `a·b` for every relator `w`, and the
/// truncation is `max(len(w) + 3, 6)`.
pub fn quiver_from_group(g: &GroupPresentation) -> BoundQuiver {
    let relators = normalize_relators(g);
    let mut arrows =
        vec![("a".to_string(), "1".to_string(), "2".to_string()), ("b".to_string(), "2".to_string(), "3".to_string())];
    for kind in ["alpha", "beta"] {
        for name in &g.generators {
            arrows.push((loop_name(kind, name), "2".into(), "2".into()));
        }
    }
    let q = Quiver::new(["1", "2", "3"], owned(arrows)).expect("Q_G is well formed");
    let alpha = |i: usize| loop_name("alpha", &g.generators[i]);
    let beta = |i: usize| loop_name("beta", &g.generators[i]);
    let ab = path(&q, &["a".into(), "b".into()]);
    let mut gens = Vec::new();
    for i in 0..g.generators.len() {
        gens.push(Relation::difference(path(&q, &["a".into(), alpha(i), beta(i), "b".into()]), ab.clone()));
    }
    for w in &relators {
        assert!(w.iter().any(|l| !l.inverse), "normalized relator has a positive letter");
        let mut names = vec!["a".to_string()];
        names.extend(w.iter().map(|l| if l.inverse { beta(l.gen) } else { alpha(l.gen) }));
        names.push("b".into());
        gens.push(Relation::difference(path(&q, &names), ab.clone()));
    }
    let n = relators.iter().map(|w| w.len() + 3).chain([6]).max().expect("nonempty");
    BoundQuiver::new(q, gens, Some(n), VertexId(0)).expect("truncation given")
}

fn indexed(prefix: &str, j: usize) -> String {
    format!("{prefix}{j}")
}

/// `Qⁿ`: vertices `x0..xn`, arrows `alpha_j`, `beta_j : x_j → x_{j-1}`,
/// ideal generated by `alpha_n⋯alpha_1 − beta_n⋯beta_1` and
/// `alpha_i·beta_{i-1} − beta_i·alpha_{i-1}` for `1 < i ≤ n`.
pub fn ladder(n: usize) -> Result<BoundQuiver> {
    if n < 2 {
        return Err(Error::BadParameter(format!("ladder needs n >= 2, got {n}")));
    }
    let vertices: Vec<String> = (0..=n).map(|j| indexed("x", j)).collect();
    let mut arrows = Vec::new();
    for j in 1..=n {
        for kind in ["alpha", "beta"] {
            arrows.push((indexed(kind, j), indexed("x", j), indexed("x", j - 1)));
        }
    }
    let q = Quiver::new(vertices, owned(arrows)).expect("ladder is well formed");
    let run = |kind: &str| -> Vec<String> { (1..=n).rev().map(|j| indexed(kind, j)).collect() };
    let mut gens = vec![Relation::difference(path(&q, &run("alpha")), path(&q, &run("beta")))];
    for i in 2..=n {
        gens.push(Relation::difference(
            path(&q, &[indexed("alpha", i), indexed("beta", i - 1)]),
            path(&q, &[indexed("beta", i), indexed("alpha", i - 1)]),
        ));
    }
    let base = q.vertex(&indexed("x", n)).expect("top vertex");
    BoundQuiver::new(q, gens, None, base)
}

pub fn cover_vertex(i: usize, j: usize) -> String {
    format!("x{i},{j}")
}

pub fn cover_arrow(kind: &str, i: usize, j: usize) -> String {
    format!("{kind}{i},{j}")
}

/// `Q̂ⁿ` with every difference of parallel paths in the ideal, and the
/// automorphism `x_{i,j} ↦ x_{i+1,j}` of order `n`.
pub fn ladder_cover(n: usize) -> Result<(BoundQuiver, GroupActionSpec)> {
    if n < 2 {
        return Err(Error::BadParameter(format!("ladder cover needs n >= 2, got {n}")));
    }
    let mut vertices = Vec::new();
    for j in 0..=n {
        for i in 0..n {
            vertices.push(cover_vertex(i, j));
        }
    }
    let mut arrows = Vec::new();
    for j in 1..=n {
        for i in 0..n {
            arrows.push((cover_arrow("alpha", i, j), cover_vertex(i, j), cover_vertex(i, j - 1)));
        }
        for i in 0..n {
            arrows.push((cover_arrow("beta", i, j), cover_vertex(i, j), cover_vertex((i + 1) % n, j - 1)));
        }
    }
    let q = Quiver::new(vertices, owned(arrows)).expect("ladder cover is well formed");
    let mut gens = Vec::new();
    for x in q.vertices() {
        for y in q.vertices() {
            let paths = enumerate_paths(&q, Some(x), Some(y), n);
            let long: Vec<&Path> = paths.iter().filter(|p| p.len() >= 2).collect();
            if let Some((rep, rest)) = long.split_first() {
                for p in rest {
                    gens.push(Relation::difference((*p).clone(), (*rep).clone()));
                }
            }
        }
    }
    let base = q.vertex(&cover_vertex(0, n)).expect("top vertex");
    let bq = BoundQuiver::new(q, gens, None, base)?;
    let q = &bq.quiver;
    let vertex_map = q
        .vertices()
        .map(|v| {
            let (i, j) = (v.0 % n, v.0 / n);
            q.vertex(&cover_vertex((i + 1) % n, j)).expect("shifted vertex")
        })
        .collect();
    let arrow_map = q
        .arrow_ids()
        .map(|a| {
            let name = &q.arrow(a).name;
            let (kind, rest) = name.split_at(if name.starts_with("alpha") { 5 } else { 4 });
            let (i, j) = rest.split_once(',').expect("indexed arrow");
            let (i, j): (usize, usize) = (i.parse().expect("index"), j.parse().expect("index"));
            q.arrow_id(&cover_arrow(kind, (i + 1) % n, j)).expect("shifted arrow")
        })
        .collect::<Vec<ArrowId>>();
    let action = GroupActionSpec { base: bq.clone(), vertex_map, arrow_map, order: n };
    Ok((bq, action))
}

/// `1 -a-> 2 -b-> 3` with loops `alpha1..alphat` at 2 and ideal generated by
/// `a·alpha_i·b − a·alpha_i^{n_i+1}·b` and the commutators
/// `alpha_i·alpha_j − alpha_j·alpha_i`; truncation `max(n_i) + 4`.
pub fn loop_family(orders: &[usize]) -> Result<BoundQuiver> {
    if orders.is_empty() {
        return Err(Error::BadParameter("loop family needs at least one order".into()));
    }
    if let Some(bad) = orders.iter().find(|&&n| n == 0) {
        return Err(Error::BadParameter(format!("loop orders must be positive, got {bad}")));
    }
    let mut arrows =
        vec![("a".to_string(), "1".to_string(), "2".to_string()), ("b".to_string(), "2".to_string(), "3".to_string())];
    for i in 1..=orders.len() {
        arrows.push((indexed("alpha", i), "2".into(), "2".into()));
    }
    let q = Quiver::new(["1", "2", "3"], owned(arrows)).expect("loop quiver is well formed");
    let mut gens = Vec::new();
    for (k, &n) in orders.iter().enumerate() {
        let alpha = indexed("alpha", k + 1);
        let short = path(&q, &["a".into(), alpha.clone(), "b".into()]);
        let mut names = vec!["a".to_string()];
        names.extend(std::iter::repeat_n(alpha, n + 1));
        names.push("b".into());
        gens.push(Relation::new([(rational(1), short), (rational(-1), path(&q, &names))]));
    }
    for i in 1..=orders.len() {
        for j in i + 1..=orders.len() {
            let (ai, aj) = (indexed("alpha", i), indexed("alpha", j));
            gens.push(Relation::difference(path(&q, &[ai.clone(), aj.clone()]), path(&q, &[aj, ai])));
        }
    }
    let m = orders.iter().max().expect("nonempty") + 4;
    BoundQuiver::new(q, gens, Some(m), VertexId(0))
}

/// Vertices 1, 2, 3 with `alpha: 2 → 1` and `beta, gamma: 3 → 2`, bound by
/// `beta·alpha`; based at 3.
pub fn parallel_arrows_example() -> BoundQuiver {
    let q = Quiver::from_spec(&["1", "2", "3"], &[("alpha", "2", "1"), ("beta", "3", "2"), ("gamma", "3", "2")]);
    let g = Relation::monomial(Path::from_names(&q, &["beta", "alpha"]).expect("composable"));
    let base = q.vertex("3").expect("vertex 3");
    BoundQuiver::new(q, vec![g], None, base).expect("acyclic")
}

/// One vertex, no arrows.
pub fn single_vertex() -> BoundQuiver {
    BoundQuiver::new(Quiver::from_spec(&["1"], &[]), vec![], None, VertexId(0)).expect("acyclic")
}

/// Group relators of a presentation with duplicates up to rotation removed;
/// used when comparing presentations.
pub fn relator_classes(g: &GroupPresentation) -> BTreeSet<Word> {
    g.relators.iter().map(|r| canonical_cyclic(r)).filter(|w| !w.is_empty()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::algebra_basis;

    #[test]
    fn qg_shapes() {
        let z2 = GroupPresentation::from_spec(&["g"], &[&["g", "g"]]);
        let bq = quiver_from_group(&z2);
        assert_eq!(bq.quiver.vertex_count(), 3);
        assert_eq!(bq.quiver.arrow_count(), 4);
        assert_eq!(bq.truncation, 6);
        assert_eq!(bq.generators.len(), 2);
        assert!(bq.validate().is_valid());
        assert!(!bq.quiver.is_triangular());

        let trivial = quiver_from_group(&GroupPresentation::trivial());
        assert_eq!(trivial.quiver.arrow_count(), 2);
        assert!(trivial.generators.is_empty());
    }

    #[test]
    fn negative_relators_are_inverted() {
        let g = GroupPresentation::from_spec(&["g"], &[&["g^-1", "g^-1", "g^-1"], &["g", "g", "g"]]);
        assert_eq!(normalize_relators(&g).len(), 1);
    }

    #[test]
    fn ladder_shapes() {
        let l2 = ladder(2).unwrap();
        assert_eq!(l2.quiver.arrow_count(), 4);
        assert_eq!(l2.truncation, 3);
        assert_eq!(algebra_basis(&l2).unwrap().1, 9);
        assert!(ladder(1).is_err());
        let (cover, action) = ladder_cover(2).unwrap();
        assert_eq!(cover.quiver.vertex_count(), 6);
        assert_eq!(cover.quiver.arrow_count(), 8);
        assert!(cover.validate().is_valid());
        assert!(action.validate().is_ok());
    }

    #[test]
    fn loop_family_shapes() {
        let bq = loop_family(&[2, 3]).unwrap();
        assert_eq!(bq.truncation, 7);
        assert_eq!(bq.generators.len(), 3);
        assert!(bq.validate().is_valid());
        assert!(loop_family(&[]).is_err());
    }
}
