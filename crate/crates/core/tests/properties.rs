use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quiver_pi::change::{kernel_ideal, kernel_ideal_direct, validate_substitution, Substitution};
use quiver_pi::group::abelian_invariants;
use quiver_pi::linalg::{rational, Rational};
use quiver_pi::pi1::fundamental_group;
use quiver_pi::quiver::{enumerate_paths, BoundQuiver, Path, Quiver, Relation, VertexId};
use quiver_pi::relations::{algebra_basis, homotopy_partition, same_ideal};

const COEFFICIENTS: [i64; 4] = [-2, -1, 1, 2];

fn random_bound_quiver(rng: &mut ChaCha8Rng) -> Option<BoundQuiver> {
    let n = rng.gen_range(2..=4);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut arrows: Vec<(usize, usize)> = (1..n).map(|j| (rng.gen_range(0..j), j)).collect();
    for _ in 0..rng.gen_range(1..=4) {
        let i = rng.gen_range(0..n - 1);
        arrows.push((i, rng.gen_range(i + 1..n)));
    }
    let q = Quiver::new(
        names.clone(),
        arrows.iter().enumerate().map(|(k, &(i, j))| (format!("a{k}"), names[i].clone(), names[j].clone())),
    )
    .ok()?;
    let longest = q.longest_path()?;
    let mut classes = Vec::new();
    for x in q.vertices() {
        for y in q.vertices() {
            let long: Vec<Path> =
                enumerate_paths(&q, Some(x), Some(y), longest).into_iter().filter(|p| p.len() >= 2).collect();
            if long.len() > 6 {
                return None;
            }
            if !long.is_empty() {
                classes.push(long);
            }
        }
    }
    let mut generators = Vec::new();
    for _ in 0..rng.gen_range(0..=3) {
        if classes.is_empty() {
            break;
        }
        let class = &classes[rng.gen_range(0..classes.len())];
        let mut terms: Vec<(Rational, Path)> = Vec::new();
        for p in class {
            if rng.gen_bool(0.6) {
                terms.push((rational(COEFFICIENTS[rng.gen_range(0..4)]), p.clone()));
            }
        }
        let g = Relation::new(terms);
        if !g.is_zero() {
            generators.push(g);
        }
    }
    let bq = BoundQuiver::new(q, generators, None, VertexId(0)).ok()?;
    bq.validate().is_valid().then_some(bq)
}

/// Perturbs arrows by parallel paths of length at least two and by parallel
/// arrows of smaller index, so every degree-one block is unitriangular.
fn random_substitution(bq: &BoundQuiver, rng: &mut ChaCha8Rng) -> Substitution {
    let q = &bq.quiver;
    let mut s = Substitution::new();
    for a in q.arrow_ids() {
        if !rng.gen_bool(0.6) {
            continue;
        }
        let arrow = q.arrow(a);
        let mut terms: Vec<(Rational, Path)> = Vec::new();
        for p in enumerate_paths(q, Some(arrow.source), Some(arrow.target), bq.truncation - 1) {
            let admissible = p.len() >= 2 || (p.len() == 1 && p.arrows()[0] < a);
            if admissible && rng.gen_bool(0.5) {
                terms.push((rational(COEFFICIENTS[rng.gen_range(0..4)]), p));
            }
        }
        let rho = Relation::new(terms);
        if !rho.is_zero() {
            s = s.assign(a, rho);
        }
    }
    s
}

fn sample(seed: u64) -> Option<(BoundQuiver, ChaCha8Rng)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_bound_quiver(&mut rng).map(|bq| (bq, rng))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn kernel_routes_agree(seed in any::<u64>()) {
        let Some((bq, mut rng)) = sample(seed) else { return Ok(()) };
        let s = random_substitution(&bq, &mut rng);
        prop_assert!(validate_substitution(&bq, &s).unwrap().is_invertible());
        let via_inverse = kernel_ideal(&bq, &s).unwrap();
        let direct = kernel_ideal_direct(&bq, &s).unwrap();
        prop_assert!(same_ideal(&via_inverse, &direct).unwrap());
        prop_assert_eq!(algebra_basis(&via_inverse).unwrap().1, algebra_basis(&bq).unwrap().1);
    }

    #[test]
    fn partition_ignores_generator_choice(seed in any::<u64>()) {
        let Some((bq, mut rng)) = sample(seed) else { return Ok(()) };
        let mut gens = bq.generators.clone();
        gens.reverse();
        for i in 0..gens.len() {
            let j = rng.gen_range(0..gens.len());
            if i != j && gens[i].endpoints() == gens[j].endpoints() {
                gens[i] = gens[i].add(&gens[j].scaled(&rational(rng.gen_range(-3..=3))));
            }
        }
        gens.retain(|g| !g.is_zero());
        let other = bq.with_generators(gens);
        prop_assert!(same_ideal(&bq, &other).unwrap());
        prop_assert_eq!(homotopy_partition(&bq).unwrap(), homotopy_partition(&other).unwrap());
    }

    #[test]
    fn basepoint_does_not_matter(seed in any::<u64>()) {
        let Some((bq, mut rng)) = sample(seed) else { return Ok(()) };
        let v = VertexId(rng.gen_range(0..bq.quiver.vertex_count()));
        let a = abelian_invariants(&fundamental_group(&bq).unwrap().presentation);
        let b = abelian_invariants(&fundamental_group(&bq.with_basepoint(v)).unwrap().presentation);
        prop_assert_eq!(a, b);
    }
}
