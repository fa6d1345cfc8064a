//! Changes of presentation: automorphisms `α ↦ α + ρ_α` of the path algebra
//! and the ideal `Ker ν` presenting the same algebra.

mod builtins;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constructions::{GluedQuiver, ProductQuiver};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, Matrix, Rational};
use crate::quiver::io::{parse_terms, terms_of};
use crate::quiver::{ArrowId, BoundQuiver, Path, Quiver, Relation, TermSpec, VertexId};
use crate::relations::RelationSpaces;

pub use builtins::{builtin, example1, ladder_trivializer, loop_freeer, qg_trivializer, BUILTINS};

/// Assignment `α ↦ α + ρ_α`; arrows without an entry are fixed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    pub assignments: BTreeMap<ArrowId, Relation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssignmentSpec {
    pub arrow: String,
    pub rho: Vec<TermSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubstitutionFile {
    pub assignments: Vec<AssignmentSpec>,
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    pub fn assign(mut self, arrow: ArrowId, rho: Relation) -> Self {
        self.assignments.insert(arrow, rho);
        self
    }

    pub fn rho(&self, arrow: ArrowId) -> Option<&Relation> {
        self.assignments.get(&arrow)
    }

    /// `ν(α) = α + ρ_α`.
    pub fn image(&self, q: &Quiver, arrow: ArrowId) -> Relation {
        let a = Relation::monomial(Path::arrow(q, arrow));
        match self.rho(arrow) {
            Some(rho) => a.add(rho),
            None => a,
        }
    }

    /// Transport along an arrow map into another quiver.
    pub fn transported(&self, q: &Quiver, map: impl Fn(ArrowId) -> ArrowId) -> Substitution {
        let assignments = self
            .assignments
            .iter()
            .map(|(&a, rho)| {
                let moved = Relation::new(rho.terms().iter().map(|(c, p)| {
                    let arrows = p.arrows().iter().map(|&b| map(b)).collect();
                    (c.clone(), Path::from_arrows(q, arrows).expect("transport preserves incidence"))
                }));
                (map(a), moved)
            })
            .collect();
        Substitution { assignments }
    }

    pub fn from_json(q: &Quiver, text: &str) -> Result<Self> {
        let file: SubstitutionFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Substitution::new();
        for (i, spec) in file.assignments.iter().enumerate() {
            let arrow = q
                .arrow_id(&spec.arrow)
                .map_err(|_| Error::Parse(format!("assignments[{i}].arrow: unknown arrow {:?}", spec.arrow)))?;
            if out.assignments.contains_key(&arrow) {
                return Err(Error::Parse(format!("assignments[{i}].arrow: {:?} assigned twice", spec.arrow)));
            }
            out.assignments.insert(arrow, parse_terms(q, &spec.rho, &format!("assignments[{i}].rho"))?);
        }
        Ok(out)
    }

    pub fn to_json(&self, q: &Quiver) -> String {
        let file = SubstitutionFile {
            assignments: self
                .assignments
                .iter()
                .map(|(&a, rho)| AssignmentSpec { arrow: q.arrow(a).name.clone(), rho: terms_of(q, rho) })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("substitution serializes")
    }
}

/// Degree-one part of `ν` on the arrows `x → y`: row `i` holds the
/// coefficients of `ν(arrows[i])` on `arrows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeOneBlock {
    pub source: VertexId,
    pub target: VertexId,
    pub arrows: Vec<ArrowId>,
    pub matrix: Matrix<Rational>,
    pub inverse: Option<Matrix<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionCheck {
    pub blocks: Vec<DegreeOneBlock>,
}

impl SubstitutionCheck {
    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| b.inverse.is_some())
    }

    pub fn singular_blocks(&self) -> impl Iterator<Item = &DegreeOneBlock> {
        self.blocks.iter().filter(|b| b.inverse.is_none())
    }

    pub fn describe(&self, q: &Quiver) -> String {
        let mut lines = Vec::new();
        for b in &self.blocks {
            let rows: Vec<String> = b
                .matrix
                .row_vecs()
                .iter()
                .map(|r| format!("[{}]", r.iter().map(format_rational).collect::<Vec<_>>().join(", ")))
                .collect();
            lines.push(format!(
                "({}, {}) {}: {}",
                q.vertex_name(b.source),
                q.vertex_name(b.target),
                if b.inverse.is_some() { "invertible" } else { "singular" },
                rows.join(" ")
            ));
        }
        lines.join("\n")
    }
}

/// Rejects `ρ_α` with terms not parallel to `α`, stationary terms, or `α`
/// itself, and computes the degree-one blocks.
pub fn validate_substitution(bq: &BoundQuiver, s: &Substitution) -> Result<SubstitutionCheck> {
    let q = &bq.quiver;
    for (&a, rho) in &s.assignments {
        if a.0 >= q.arrow_count() {
            return Err(Error::Substitution(format!("arrow #{} is not in the quiver", a.0)));
        }
        let arrow = q.arrow(a);
        for (_, p) in rho.terms() {
            let shown = p.display(q);
            if p.source() != arrow.source || p.target() != arrow.target {
                return Err(Error::Substitution(format!("term {shown} of rho_{} is not parallel to it", arrow.name)));
            }
            if p.is_stationary() {
                return Err(Error::Substitution(format!("rho_{} has a stationary term", arrow.name)));
            }
            if p.arrows() == [a] {
                return Err(Error::Substitution(format!("rho_{} contains {} itself", arrow.name, arrow.name)));
            }
        }
    }
    let mut groups: BTreeMap<(VertexId, VertexId), Vec<ArrowId>> = BTreeMap::new();
    for a in q.arrow_ids() {
        let arrow = q.arrow(a);
        groups.entry((arrow.source, arrow.target)).or_default().push(a);
    }
    let blocks = groups
        .into_iter()
        .map(|((source, target), arrows)| {
            let k = arrows.len();
            let mut matrix = Matrix::<Rational>::identity(k);
            for (i, &a) in arrows.iter().enumerate() {
                for (c, p) in s.rho(a).map(Relation::terms).unwrap_or_default() {
                    if let [b] = p.arrows() {
                        let j = arrows.iter().position(|x| x == b).expect("parallel arrow");
                        matrix.set(i, j, matrix.get(i, j) + c);
                    }
                }
            }
            let inverse = matrix.inverse();
            DegreeOneBlock { source, target, arrows, matrix, inverse }
        })
        .collect();
    Ok(SubstitutionCheck { blocks })
}

/// Product in `kQ/F^m`.
fn multiply(a: &Relation, b: &Relation, m: usize) -> Relation {
    let mut terms = Vec::new();
    for (c1, p1) in a.terms() {
        for (c2, p2) in b.terms() {
            if p1.len() + p2.len() < m {
                if let Some(p) = p1.compose(p2) {
                    terms.push((c1 * c2, p));
                }
            }
        }
    }
    Relation::new(terms)
}

/// The algebra endomorphism of `kQ/F^m` with the given arrow images.
fn apply_map(images: &[Relation], r: &Relation, m: usize) -> Relation {
    let mut terms = Vec::new();
    for (c, p) in r.terms() {
        if p.len() >= m {
            continue;
        }
        if p.is_stationary() {
            terms.push((c.clone(), p.clone()));
            continue;
        }
        let mut acc = images[p.arrows()[0].0].clone();
        for a in &p.arrows()[1..] {
            acc = multiply(&acc, &images[a.0], m);
            if acc.is_zero() {
                break;
            }
        }
        terms.extend(acc.terms().iter().map(|(d, q)| (c * d, q.clone())));
    }
    Relation::new(terms)
}

/// `ν(α)` for every arrow, truncated below `m`.
fn forward_images(q: &Quiver, s: &Substitution, m: usize) -> Vec<Relation> {
    q.arrow_ids().map(|a| s.image(q, a).truncated(m)).collect()
}

/// Images `μ(α)` of the inverse automorphism of `kQ/F^m`, found by
/// correcting the degree-one inverse one degree at a time.
pub fn inverse_images(bq: &BoundQuiver, s: &Substitution) -> Result<Vec<Relation>> {
    let q = &bq.quiver;
    let m = bq.truncation;
    let check = validate_substitution(bq, s)?;
    let mut linear = vec![Relation::default(); q.arrow_count()];
    for block in &check.blocks {
        let Some(inv) = &block.inverse else {
            return Err(singular(q, block));
        };
        for (j, &a) in block.arrows.iter().enumerate() {
            linear[a.0] = Relation::new(
                block.arrows.iter().enumerate().map(|(i, &b)| (inv.get(j, i).clone(), Path::arrow(q, b))),
            );
        }
    }
    let nu = forward_images(q, s, m);
    let mut out = Vec::with_capacity(q.arrow_count());
    for a in q.arrow_ids() {
        let target = Relation::monomial(Path::arrow(q, a));
        let mut x = linear[a.0].clone();
        for _ in 0..=m {
            let err = target.add(&apply_map(&nu, &x, m).scaled(&Rational::from_integer((-1).into())));
            if err.is_zero() {
                break;
            }
            x = x.add(&apply_map(&linear, &err, m));
        }
        out.push(x);
    }
    Ok(out)
}

fn singular(q: &Quiver, block: &DegreeOneBlock) -> Error {
    Error::Substitution(format!(
        "degree-one part is singular on the arrows {} -> {}",
        q.vertex_name(block.source),
        q.vertex_name(block.target)
    ))
}

/// `Ker(ν)` for `ν : kQ → kQ/I`, as `μ(I)` with `μ` the inverse of the
/// substitution modulo `F^m`: one generator per generator of `I`.
pub fn kernel_ideal(bq: &BoundQuiver, s: &Substitution) -> Result<BoundQuiver> {
    let mu = inverse_images(bq, s)?;
    let generators = bq.generators.iter().map(|g| apply_map(&mu, g, bq.truncation)).filter(|g| !g.is_zero()).collect();
    Ok(bq.with_generators(generators))
}

/// `Ker(ν)` by linear algebra in each parallel class: the null space of
/// `p ↦ normal form of ν(p)`.
pub fn kernel_ideal_direct(bq: &BoundQuiver, s: &Substitution) -> Result<BoundQuiver> {
    let check = validate_substitution(bq, s)?;
    if let Some(block) = check.singular_blocks().next() {
        return Err(singular(&bq.quiver, block));
    }
    let m = bq.truncation;
    let spaces = RelationSpaces::new(bq)?;
    let table = spaces.table();
    let nu = forward_images(&bq.quiver, s, m);
    let mut generators = Vec::new();
    for key in 0..table.class_count() {
        let paths = table.class_by_key(key);
        let space = spaces.space_by_key(key);
        let basis: Vec<usize> = (0..paths.len()).filter(|&i| !space.is_pivot(i)).collect();
        let mut matrix = Matrix::<Rational>::zeros(basis.len(), paths.len());
        for (j, p) in paths.iter().enumerate() {
            let image = spaces.normal_form(&apply_map(&nu, &Relation::monomial(p.clone()), m));
            for (c, b) in image.terms() {
                let i = table.index(b).expect("normal form stays in the class");
                let row = basis.iter().position(|&k| k == i).expect("normal form uses basis paths");
                matrix.set(row, j, c.clone());
            }
        }
        for v in matrix.kernel_basis() {
            generators.push(Relation::new(v.into_iter().zip(paths.iter().cloned())));
        }
    }
    Ok(bq.with_generators(generators))
}

/// Substitution on a coproduct assembled from substitutions on components.
pub fn glued_substitution(glued: &GluedQuiver, parts: &[(usize, &Substitution)]) -> Result<Substitution> {
    let mut out = Substitution::new();
    for &(k, s) in parts {
        let map = glued.arrow_maps.get(k).ok_or(Error::UnknownComponent(k))?;
        out.assignments.extend(s.transported(&glued.bound.quiver, |a| map[a.0]).assignments);
    }
    Ok(out)
}

/// Substitution on a product acting as `left` on every `(θ, y)` and as
/// `right` on every `(x, θ)`.
pub fn product_substitution(
    pq: &ProductQuiver,
    left: Option<&Substitution>,
    right: Option<&Substitution>,
) -> Substitution {
    let q = &pq.bound.quiver;
    let mut out = Substitution::new();
    if let Some(s) = left {
        for y in pq.right.quiver.vertices() {
            out.assignments.extend(s.transported(q, |a| pq.left_arrow(a, y)).assignments);
        }
    }
    if let Some(s) = right {
        for x in pq.left.quiver.vertices() {
            out.assignments.extend(s.transported(q, |a| pq.right_arrow(x, a)).assignments);
        }
    }
    out
}
