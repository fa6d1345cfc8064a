//! Homotopy partitions of parallel paths.
//!
//! Two paths are homotopic when they occur together in the support of a
//! minimal relation. The supports of inclusion-minimal vectors of `I(x,y)`
//! are the circuits of a matroid on the paths, and the equivalence they
//! generate is the partition into connected components of that matroid.
//! Components can be read off any single basis of fundamental circuits: each
//! row of the reduced echelon form of `I(x,y)` is a minimal-support vector,
//! and the rows' supports connect exactly the components.

use rayon::prelude::*;

use super::{ParallelClassSpace, RelationSpaces};
use crate::error::{Error, Result};
use crate::linalg::{Field, Fp, Matrix};
use crate::quiver::{BoundQuiver, Path, VertexId};
use crate::union_find::UnionFind;

/// Largest support handled by [`minimal_support_circuits`].
pub const DEFAULT_CIRCUIT_CAP: usize = 20;

/// Largest class the brute-force oracle accepts.
const ORACLE_PATH_CAP: usize = 12;
/// Largest number of projective points the oracle enumerates per class.
const ORACLE_VECTOR_CAP: u64 = 200_000;

/// Homotopy classes among the paths `x → y` of length below `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    pub source: VertexId,
    pub target: VertexId,
    pub paths: Vec<Path>,
    /// Blocks of path indices, each sorted, ordered by first member; the
    /// first member is the representative.
    pub blocks: Vec<Vec<usize>>,
    /// Paths lying in the ideal.
    pub null: Vec<usize>,
}

impl ClassPartition {
    fn build(source: VertexId, target: VertexId, paths: Vec<Path>, merges: &[Vec<usize>], null: Vec<usize>) -> Self {
        let mut uf = UnionFind::new(paths.len());
        for support in merges {
            for w in support.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        ClassPartition { source, target, blocks: uf.groups(), paths, null }
    }

    pub fn is_null(&self, index: usize) -> bool {
        self.null.binary_search(&index).is_ok()
    }

    /// Blocks with at least two paths.
    pub fn merged(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.blocks.iter().filter(|b| b.len() > 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyPartition {
    /// Nonempty parallel classes, ordered by (source, target).
    pub classes: Vec<ClassPartition>,
}

impl HomotopyPartition {
    pub fn class(&self, x: VertexId, y: VertexId) -> Option<&ClassPartition> {
        self.classes.iter().find(|c| c.source == x && c.target == y)
    }

    /// Number of relators the partition contributes: Σ (block size − 1).
    pub fn merge_count(&self) -> usize {
        self.classes.iter().flat_map(|c| c.blocks.iter()).map(|b| b.len() - 1).sum()
    }

    /// Partition from the fundamental circuits of each class's echelon basis.
    pub fn from_spaces<F: Field>(spaces: &RelationSpaces<F>) -> Self {
        let table = spaces.table();
        let classes = (0..table.class_count())
            .into_par_iter()
            .filter(|&key| !table.class_by_key(key).is_empty())
            .map(|key| {
                let (x, y) = table.endpoints(key);
                let space = spaces.space_by_key(key);
                let mut null = Vec::new();
                let mut merges = Vec::new();
                for row in space.rows() {
                    if row.len() == 1 {
                        null.push(row[0].0);
                    } else {
                        merges.push(row.iter().map(|(c, _)| *c).collect());
                    }
                }
                null.sort_unstable();
                ClassPartition::build(x, y, table.class_by_key(key).to_vec(), &merges, null)
            })
            .collect();
        HomotopyPartition { classes }
    }
}

pub fn homotopy_partition(bq: &BoundQuiver) -> Result<HomotopyPartition> {
    Ok(HomotopyPartition::from_spaces(&RelationSpaces::new(bq)?))
}

fn subsets_of_size(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Inclusion-minimal supports of nonzero vectors of the subspace, by
/// increasing size, each as sorted path indices.
pub fn minimal_support_circuits<F: Field>(space: &ParallelClassSpace<F>) -> Result<Vec<Vec<usize>>> {
    let (d, source, target) = (space.space.dim(), space.source, space.target);
    let space = &space.space;
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut universe: Vec<usize> = space.rows().iter().flat_map(|r| r.iter().map(|(c, _)| *c)).collect();
    universe.sort_unstable();
    universe.dedup();
    if universe.len() > DEFAULT_CIRCUIT_CAP {
        return Err(Error::ClassTooLarge {
            from: format!("#{}", source.0),
            to: format!("#{}", target.0),
            count: universe.len(),
            cap: DEFAULT_CIRCUIT_CAP,
        });
    }
    let dense = Matrix::from_rows(space.ncols(), space.dense_rows());
    let u = universe.len();
    let mut found: Vec<Vec<usize>> = Vec::new();
    for k in 1..=u {
        subsets_of_size(u, k, |pos| {
            let subset: Vec<usize> = pos.iter().map(|&i| universe[i]).collect();
            if found.iter().any(|c| c.iter().all(|x| subset.binary_search(x).is_ok())) {
                return;
            }
            // Some nonzero vector vanishes off the subset iff the restriction
            // to the complement loses rank.
            let complement: Vec<usize> =
                universe.iter().copied().filter(|c| subset.binary_search(c).is_err()).collect();
            if dense.select_columns(&complement).rank() < d {
                found.push(subset);
            }
        });
    }
    Ok(found)
}

/// Brute-force partition over `F_P` that applies the definition of a minimal
/// relation literally: every nonzero vector of `I(x,y)` is enumerated, and it
/// is minimal when it has at least two terms and no proper nonempty
/// sub-sum lies in `I(x,y)`.
pub fn paper_minimal_partition_oracle<const P: u64>(bq: &BoundQuiver) -> Result<HomotopyPartition> {
    let spaces = RelationSpaces::<Fp<P>>::over_field(bq)?;
    let table = spaces.table();
    let mut classes = Vec::new();
    for key in 0..table.class_count() {
        let paths = table.class_by_key(key);
        if paths.is_empty() {
            continue;
        }
        let (x, y) = table.endpoints(key);
        let space = spaces.space_by_key(key);
        let d = space.dim();
        let too_large =
            paths.len() > ORACLE_PATH_CAP || (d > 0 && P.checked_pow(d as u32).is_none_or(|n| n > ORACLE_VECTOR_CAP));
        if too_large && d > 0 {
            return Err(Error::ClassTooLarge {
                from: bq.quiver.vertex_name(x).to_string(),
                to: bq.quiver.vertex_name(y).to_string(),
                count: paths.len(),
                cap: ORACLE_PATH_CAP,
            });
        }
        let rows = space.dense_rows();
        let n = paths.len();
        let contains = |v: &[Fp<P>]| space.contains(&crate::linalg::sparse::to_sparse(v));
        let mut null = Vec::new();
        let mut merges = Vec::new();
        // Projective enumeration: the first nonzero coordinate is 1.
        let mut coeffs = vec![Fp::<P>::new(0); d];
        for lead in 0..d {
            coeffs.iter_mut().for_each(|c| *c = Fp::new(0));
            coeffs[lead] = Fp::new(1);
            let free = d - lead - 1;
            for code in 0..P.pow(free as u32) {
                let mut rest = code;
                for c in coeffs[lead + 1..].iter_mut() {
                    *c = Fp::new((rest % P) as i64);
                    rest /= P;
                }
                let mut v = vec![Fp::<P>::new(0); n];
                for (c, row) in coeffs.iter().zip(&rows) {
                    if c.is_zero() {
                        continue;
                    }
                    for (vi, ri) in v.iter_mut().zip(row) {
                        *vi = vi.add(&c.mul(ri));
                    }
                }
                let support: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
                match support.len() {
                    0 => unreachable!("echelon rows are independent"),
                    1 => null.push(support[0]),
                    s => {
                        let minimal = (1..(1u64 << s) - 1).all(|mask| {
                            let mut part = vec![Fp::<P>::new(0); n];
                            for (bit, &i) in support.iter().enumerate() {
                                if mask >> bit & 1 == 1 {
                                    part[i] = v[i];
                                }
                            }
                            !contains(&part)
                        });
                        if minimal {
                            merges.push(support);
                        }
                    }
                }
            }
        }
        null.sort_unstable();
        null.dedup();
        classes.push(ClassPartition::build(x, y, paths.to_vec(), &merges, null));
    }
    Ok(HomotopyPartition { classes })
}
