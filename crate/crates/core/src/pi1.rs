//! Presentation of `π₁(Q, I)` from the homotopy partition.
//!
//! Generators are the arrows outside a spanning tree. Every homotopy class
//! `{p₀, p₁, …}` with representative `p₀` contributes the relators
//! `word(p₀)·word(pᵢ)⁻¹`; inverse cancellation and compatibility with
//! concatenation are absorbed by free reduction and normal closure.

use crate::error::Result;
use crate::group::{free_reduce, inverse_word, GroupPresentation, Letter, Word};
use crate::quiver::{spanning_tree, ArrowId, BoundQuiver, Path, Quiver, SpanningTree, Walk};
use crate::relations::{homotopy_partition, HomotopyPartition};

#[derive(Clone, Debug)]
pub struct Pi1Result {
    pub presentation: GroupPresentation,
    pub tree: SpanningTree,
    /// Arrow behind each generator, by generator index.
    pub generator_arrows: Vec<ArrowId>,
    /// Relators before empty ones were dropped: Σ (class size − 1).
    pub relator_count: usize,
}

impl Pi1Result {
    pub fn generator_of(&self, a: ArrowId) -> Option<usize> {
        self.generator_arrows.iter().position(|&g| g == a)
    }

    /// Closed walk at the tree root representing generator `i`.
    pub fn generator_walk(&self, q: &Quiver, i: usize) -> Walk {
        self.tree.generator_walk(q, self.generator_arrows[i])
    }
}

/// Tree arrows vanish; a non-tree arrow becomes its generator, with the
/// step's exponent. The result is freely reduced.
pub fn walk_to_word(walk: &Walk, tree: &SpanningTree, generator_arrows: &[ArrowId]) -> Word {
    let word: Word = walk
        .steps()
        .iter()
        .filter(|s| !tree.contains(s.arrow))
        .map(|s| {
            let gen = generator_arrows.iter().position(|&a| a == s.arrow).expect("non-tree arrow is a generator");
            Letter { gen, inverse: s.inverse }
        })
        .collect();
    free_reduce(&word)
}

fn path_word(p: &Path, tree: &SpanningTree, generator_arrows: &[ArrowId]) -> Word {
    walk_to_word(&Walk::from_path(p), tree, generator_arrows)
}

/// Breadth-first tree from the basepoint.
pub fn fundamental_group(bq: &BoundQuiver) -> Result<Pi1Result> {
    let tree = spanning_tree(&bq.quiver, bq.basepoint);
    let partition = homotopy_partition(bq)?;
    Ok(fundamental_group_from_partition(bq, &partition, tree))
}

pub fn fundamental_group_with_tree(bq: &BoundQuiver, tree: SpanningTree) -> Result<Pi1Result> {
    let partition = homotopy_partition(bq)?;
    Ok(fundamental_group_from_partition(bq, &partition, tree))
}

pub fn fundamental_group_from_partition(
    bq: &BoundQuiver,
    partition: &HomotopyPartition,
    tree: SpanningTree,
) -> Pi1Result {
    let q = &bq.quiver;
    let generator_arrows = tree.cotree();
    let generators = generator_arrows.iter().map(|&a| q.arrow(a).name.clone()).collect();
    let mut relators = Vec::new();
    for class in &partition.classes {
        for block in class.merged() {
            let rep = path_word(&class.paths[block[0]], &tree, &generator_arrows);
            for &i in &block[1..] {
                let other = path_word(&class.paths[i], &tree, &generator_arrows);
                let mut r = rep.clone();
                r.extend(inverse_word(&other));
                relators.push(free_reduce(&r));
            }
        }
    }
    let relator_count = relators.len();
    Pi1Result { presentation: GroupPresentation::new(generators, relators), tree, generator_arrows, relator_count }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{abelian_invariants, AbelianInvariants};
    use crate::quiver::{Relation, Step, VertexId};

    fn example1(monomial: bool) -> BoundQuiver {
        let q = Quiver::from_spec(&["1", "2", "3"], &[("alpha", "2", "1"), ("beta", "3", "2"), ("gamma", "3", "2")]);
        let ba = Path::from_names(&q, &["beta", "alpha"]).unwrap();
        let ga = Path::from_names(&q, &["gamma", "alpha"]).unwrap();
        let g = if monomial { Relation::monomial(ba) } else { Relation::difference(ba, ga) };
        let base = q.vertex("3").unwrap();
        BoundQuiver::new(q, vec![g], None, base).unwrap()
    }

    #[test]
    fn words_of_walks() {
        let bq = example1(true);
        let q = &bq.quiver;
        let tree = spanning_tree(q, q.vertex("3").unwrap());
        let gens = tree.cotree();
        let p = |n: &[&str]| Walk::from_path(&Path::from_names(q, n).unwrap());
        assert!(walk_to_word(&p(&["beta", "alpha"]), &tree, &gens).is_empty());
        assert_eq!(walk_to_word(&p(&["gamma", "alpha"]), &tree, &gens), vec![Letter::pos(0)]);
        let a = q.arrow_id("alpha").unwrap();
        let back = Walk::new(q, VertexId(1), vec![Step::forward(a), Step::backward(a)]).unwrap();
        assert!(walk_to_word(&back, &tree, &gens).is_empty());
    }

    #[test]
    fn example_one_groups() {
        let r1 = fundamental_group(&example1(true)).unwrap();
        assert_eq!(r1.presentation.generators, ["gamma"]);
        assert!(r1.presentation.relators.is_empty());
        assert_eq!(abelian_invariants(&r1.presentation), AbelianInvariants::new(1, &[]));

        let r2 = fundamental_group(&example1(false)).unwrap();
        assert_eq!(r2.presentation.relators.len(), 1);
        assert_eq!(r2.relator_count, 1);
        assert!(abelian_invariants(&r2.presentation).is_trivial());
    }
}
