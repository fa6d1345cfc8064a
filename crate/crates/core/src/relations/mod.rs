//! Relation subspaces `I(x,y)`, the quotient algebra basis, and the homotopy
//! partition induced by minimal relations.
//!
//! Only paths of length below the truncation `m` are indexed: everything
//! longer lies in the ideal.

mod partition;

use std::collections::{HashMap, VecDeque};

pub use partition::{
    homotopy_partition, minimal_support_circuits, paper_minimal_partition_oracle, ClassPartition, HomotopyPartition,
    DEFAULT_CIRCUIT_CAP,
};

use crate::error::{Error, Result};
use crate::linalg::{Field, Rational, SparseEchelon, SparseRref, SparseVec};
use crate::quiver::{BoundQuiver, Path, Quiver, Relation, VertexId};

/// Default bound on the number of indexed paths.
pub const DEFAULT_PATH_CAP: usize = 2_000_000;

/// All paths of length below `m`, grouped by endpoints and sorted in path order.
#[derive(Clone, Debug)]
pub struct PathTable {
    truncation: usize,
    vertex_count: usize,
    classes: Vec<Vec<Path>>,
    lookup: HashMap<Path, usize>,
}

impl PathTable {
    pub fn new(q: &Quiver, truncation: usize, cap: usize) -> Result<Self> {
        let n = q.vertex_count();
        let mut classes: Vec<Vec<Path>> = vec![Vec::new(); n * n];
        let mut level: Vec<Path> = q.vertices().map(Path::stationary).collect();
        let mut total = 0usize;
        for len in 0..truncation {
            for p in &level {
                total += 1;
                let key = p.source().0 * n + p.target().0;
                if total > cap {
                    return Err(Error::ClassTooLarge {
                        from: q.vertex_name(p.source()).to_string(),
                        to: q.vertex_name(p.target()).to_string(),
                        count: classes[key].len() + 1,
                        cap,
                    });
                }
                classes[key].push(p.clone());
            }
            if len + 1 == truncation {
                break;
            }
            let mut next = Vec::new();
            for p in &level {
                for &a in q.outgoing(p.target()) {
                    next.push(p.compose(&Path::arrow(q, a)).expect("outgoing arrow chains"));
                }
            }
            if next.is_empty() {
                break;
            }
            level = next;
        }
        let mut lookup = HashMap::with_capacity(total);
        for class in &mut classes {
            class.sort();
            for (i, p) in class.iter().enumerate() {
                lookup.insert(p.clone(), i);
            }
        }
        Ok(PathTable { truncation, vertex_count: n, classes, lookup })
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn key(&self, x: VertexId, y: VertexId) -> usize {
        x.0 * self.vertex_count + y.0
    }

    pub fn endpoints(&self, key: usize) -> (VertexId, VertexId) {
        (VertexId(key / self.vertex_count), VertexId(key % self.vertex_count))
    }

    pub fn class(&self, x: VertexId, y: VertexId) -> &[Path] {
        &self.classes[self.key(x, y)]
    }

    pub fn class_by_key(&self, key: usize) -> &[Path] {
        &self.classes[key]
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Position of `p` inside its parallel class, `None` if it is too long.
    pub fn index(&self, p: &Path) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn total(&self) -> usize {
        self.lookup.len()
    }

    /// Coordinates of a parallel combination on its class, dropping terms of
    /// length at least `m`. `None` if some coefficient has no image in `F`.
    pub fn coordinates<F: Field>(&self, r: &Relation) -> Option<SparseVec<F>> {
        let mut out = Vec::new();
        for (c, p) in r.terms() {
            if let Some(i) = self.index(p) {
                out.push((i, F::from_rational(c)?));
            }
        }
        Some(crate::linalg::sparse::normalize(out))
    }
}

/// `I(x,y)` restricted to the paths `x → y` of length below `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParallelClassSpace<F = Rational> {
    pub source: VertexId,
    pub target: VertexId,
    pub paths: Vec<Path>,
    pub space: SparseRref<F>,
}

/// Relation subspaces of every parallel class.
#[derive(Clone, Debug)]
pub struct RelationSpaces<F = Rational> {
    table: PathTable,
    spaces: Vec<SparseRref<F>>,
}

impl RelationSpaces<Rational> {
    pub fn new(bq: &BoundQuiver) -> Result<Self> {
        RelationSpaces::over_field(bq)
    }
}

impl<F: Field> RelationSpaces<F> {
    /// Fails with [`Error::DegenerateModP`] if a generator has a coefficient
    /// with no image in `F` or vanishes there.
    pub fn over_field(bq: &BoundQuiver) -> Result<Self> {
        let table = PathTable::new(&bq.quiver, bq.truncation, DEFAULT_PATH_CAP)?;
        RelationSpaces::with_table(bq, table)
    }

    pub fn with_table(bq: &BoundQuiver, table: PathTable) -> Result<Self> {
        let q = &bq.quiver;
        let degenerate = |index| Error::DegenerateModP { index, modulus: F::characteristic() };
        let mut echelons: Vec<SparseEchelon<F>> =
            (0..table.class_count()).map(|k| SparseEchelon::new(table.class_by_key(k).len())).collect();
        let mut queue: VecDeque<(usize, SparseVec<F>)> = VecDeque::new();
        for (index, g) in bq.generators.iter().enumerate() {
            let Some((x, y)) = g.endpoints() else {
                return Err(Error::Invalid(bq.validate()));
            };
            if F::characteristic() != 0 {
                let all = g.terms().iter().all(|(c, _)| F::from_rational(c).is_some_and(|v| !v.is_zero()));
                if !all {
                    return Err(degenerate(index));
                }
            }
            let key = table.key(x, y);
            let v = table.coordinates::<F>(g).ok_or_else(|| degenerate(index))?;
            if let Some(row) = echelons[key].insert_residual(v) {
                queue.push_back((key, row.clone()));
            }
        }
        // Close under left and right multiplication by arrows.
        while let Some((key, v)) = queue.pop_front() {
            let (x, y) = table.endpoints(key);
            let class = table.class_by_key(key);
            for &a in q.incoming(x) {
                let arrow_path = Path::arrow(q, a);
                let target_key = table.key(q.arrow(a).source, y);
                let moved: SparseVec<F> = v
                    .iter()
                    .filter_map(|(i, c)| {
                        let p = arrow_path.compose(&class[*i]).expect("incoming arrow chains");
                        table.index(&p).map(|j| (j, c.clone()))
                    })
                    .collect();
                if moved.is_empty() {
                    continue;
                }
                if let Some(row) = echelons[target_key].insert_residual(moved) {
                    queue.push_back((target_key, row.clone()));
                }
            }
            for &a in q.outgoing(y) {
                let arrow_path = Path::arrow(q, a);
                let target_key = table.key(x, q.arrow(a).target);
                let moved: SparseVec<F> = v
                    .iter()
                    .filter_map(|(i, c)| {
                        let p = class[*i].compose(&arrow_path).expect("outgoing arrow chains");
                        table.index(&p).map(|j| (j, c.clone()))
                    })
                    .collect();
                if moved.is_empty() {
                    continue;
                }
                if let Some(row) = echelons[target_key].insert_residual(moved) {
                    queue.push_back((target_key, row.clone()));
                }
            }
        }
        let spaces = echelons.into_iter().map(SparseEchelon::finish).collect();
        Ok(RelationSpaces { table, spaces })
    }

    pub fn table(&self) -> &PathTable {
        &self.table
    }

    pub fn space(&self, x: VertexId, y: VertexId) -> &SparseRref<F> {
        &self.spaces[self.table.key(x, y)]
    }

    pub fn space_by_key(&self, key: usize) -> &SparseRref<F> {
        &self.spaces[key]
    }

    pub fn class_space(&self, x: VertexId, y: VertexId) -> ParallelClassSpace<F> {
        ParallelClassSpace {
            source: x,
            target: y,
            paths: self.table.class(x, y).to_vec(),
            space: self.space(x, y).clone(),
        }
    }

    /// Non-pivot paths of every class, in class order.
    pub fn basis(&self) -> Vec<Path> {
        let mut out = Vec::new();
        for key in 0..self.table.class_count() {
            let space = &self.spaces[key];
            out.extend(
                self.table
                    .class_by_key(key)
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !space.is_pivot(*i))
                    .map(|(_, p)| p.clone()),
            );
        }
        out
    }

    pub fn dimension(&self) -> usize {
        self.table.total() - self.spaces.iter().map(SparseRref::dim).sum::<usize>()
    }

    pub fn class_dimension(&self, x: VertexId, y: VertexId) -> usize {
        self.table.class(x, y).len() - self.space(x, y).dim()
    }

    /// Whether the combination lies in the ideal.
    pub fn contains(&self, r: &Relation) -> bool {
        self.normal_form_terms(r).is_some_and(|terms| terms.is_empty())
    }

    /// Remainder modulo the ideal, as terms on basis paths, grouped by class.
    fn normal_form_terms(&self, r: &Relation) -> Option<Vec<(F, Path)>> {
        let mut by_class: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
        for (c, p) in r.terms() {
            if let Some(i) = self.table.index(p) {
                by_class.entry(self.table.key(p.source(), p.target())).or_default().push((i, F::from_rational(c)?));
            }
        }
        let mut keys: Vec<usize> = by_class.keys().copied().collect();
        keys.sort_unstable();
        let mut out = Vec::new();
        for key in keys {
            let reduced = self.spaces[key].reduce(&by_class[&key]);
            let class = self.table.class_by_key(key);
            out.extend(reduced.into_iter().map(|(i, c)| (c, class[i].clone())));
        }
        Some(out)
    }
}

impl RelationSpaces<Rational> {
    /// Unique representative of `r` modulo the ideal, supported on basis paths.
    pub fn normal_form(&self, r: &Relation) -> Relation {
        Relation::new(self.normal_form_terms(r).expect("rationals embed in themselves"))
    }

    /// Same quiver, same truncation and equal subspaces in every class.
    pub fn same_ideal(&self, other: &RelationSpaces<Rational>) -> bool {
        self.table.truncation == other.table.truncation && self.spaces == other.spaces
    }
}

pub fn ideal_subspace(bq: &BoundQuiver, x: VertexId, y: VertexId) -> Result<ParallelClassSpace> {
    for v in [x, y] {
        if v.0 >= bq.quiver.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{}", v.0)));
        }
    }
    Ok(RelationSpaces::new(bq)?.class_space(x, y))
}

/// Basis paths of `kQ/I` and the dimension.
pub fn algebra_basis(bq: &BoundQuiver) -> Result<(Vec<Path>, usize)> {
    let spaces = RelationSpaces::new(bq)?;
    let basis = spaces.basis();
    let dim = basis.len();
    Ok((basis, dim))
}

pub fn normal_form(bq: &BoundQuiver, elem: &Relation) -> Result<Relation> {
    Ok(RelationSpaces::new(bq)?.normal_form(elem))
}

/// `dim e_x A e_y = 1` for every arrow `x → y`.
pub fn is_constricted(bq: &BoundQuiver) -> Result<bool> {
    let spaces = RelationSpaces::new(bq)?;
    Ok(bq.quiver.arrows().iter().all(|a| spaces.class_dimension(a.source, a.target) == 1))
}

/// Equal ideals: same quiver, same truncation, same subspaces.
pub fn same_ideal(a: &BoundQuiver, b: &BoundQuiver) -> Result<bool> {
    if a.quiver != b.quiver || a.truncation != b.truncation {
        return Ok(false);
    }
    Ok(RelationSpaces::new(a)?.same_ideal(&RelationSpaces::new(b)?))
}
