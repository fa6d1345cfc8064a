use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{Path, Quiver, VertexId};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, Rational};

/// Linear combination of paths, kept sorted by path with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Relation {
    terms: Vec<(Rational, Path)>,
}

impl Relation {
    /// Merges repeated paths and drops zero coefficients.
    pub fn new(terms: impl IntoIterator<Item = (Rational, Path)>) -> Self {
        let mut acc: BTreeMap<Path, Rational> = BTreeMap::new();
        for (c, p) in terms {
            *acc.entry(p).or_insert_with(Rational::zero) += c;
        }
        Relation { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (c, p)).collect() }
    }

    pub fn monomial(p: Path) -> Self {
        Relation { terms: vec![(Rational::one(), p)] }
    }

    /// `p - q`.
    pub fn difference(p: Path, q: Path) -> Self {
        Relation::new([(Rational::one(), p), (-Rational::one(), q)])
    }

    pub fn terms(&self) -> &[(Rational, Path)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.terms.iter().map(|(_, p)| p)
    }

    /// Common endpoints of all terms, if the relation is nonempty and parallel.
    pub fn endpoints(&self) -> Option<(VertexId, VertexId)> {
        let first = self.terms.first()?.1.clone();
        self.terms.iter().all(|(_, p)| p.is_parallel(&first)).then_some((first.source(), first.target()))
    }

    pub fn min_len(&self) -> Option<usize> {
        self.terms.iter().map(|(_, p)| p.len()).min()
    }

    pub fn max_len(&self) -> Option<usize> {
        self.terms.iter().map(|(_, p)| p.len()).max()
    }

    pub fn scaled(&self, c: &Rational) -> Relation {
        Relation::new(self.terms.iter().map(|(k, p)| (k * c, p.clone())))
    }

    pub fn add(&self, other: &Relation) -> Relation {
        Relation::new(self.terms.iter().chain(&other.terms).cloned())
    }

    /// Drops terms of length at least `m`.
    pub fn truncated(&self, m: usize) -> Relation {
        Relation { terms: self.terms.iter().filter(|(_, p)| p.len() < m).cloned().collect() }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&format_rational(&mag));
                out.push('*');
            }
            out.push_str(&p.display(q));
        }
        out
    }
}

/// Quiver with ideal `<generators> + F^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    pub quiver: Quiver,
    pub generators: Vec<Relation>,
    pub truncation: usize,
    pub basepoint: VertexId,
}

impl BoundQuiver {
    /// For acyclic quivers a missing truncation defaults to one past the
    /// longest path (at least 2).
    pub fn new(
        quiver: Quiver,
        generators: Vec<Relation>,
        truncation: Option<usize>,
        basepoint: VertexId,
    ) -> Result<Self> {
        let truncation = match truncation {
            Some(m) => m,
            None => match quiver.longest_path() {
                Some(l) => (l + 1).max(2),
                None => return Err(Error::MissingTruncation),
            },
        };
        Ok(BoundQuiver { quiver, generators, truncation, basepoint })
    }

    /// Like [`BoundQuiver::new`], failing unless [`BoundQuiver::validate`] passes.
    pub fn validated(
        quiver: Quiver,
        generators: Vec<Relation>,
        truncation: Option<usize>,
        basepoint: VertexId,
    ) -> Result<Self> {
        let bq = BoundQuiver::new(quiver, generators, truncation, basepoint)?;
        let report = bq.validate();
        if report.is_valid() {
            Ok(bq)
        } else {
            Err(Error::Invalid(report))
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let m = self.truncation;
        let mut issues = Vec::new();
        if m < 2 {
            issues.push(Issue::TruncationBelowTwo { truncation: m });
        }
        if !self.quiver.is_connected() {
            issues.push(Issue::Disconnected);
        }
        if let Some(longest) = self.quiver.longest_path() {
            if m <= longest {
                issues.push(Issue::TruncationWithinPaths { truncation: m, longest });
            }
        }
        for (index, g) in self.generators.iter().enumerate() {
            if g.is_zero() {
                issues.push(Issue::EmptyRelation { index });
                continue;
            }
            if g.endpoints().is_none() {
                issues.push(Issue::NotParallel { index });
            }
            if let Some(len) = g.min_len().filter(|&l| l < 2) {
                issues.push(Issue::NotInSquare { index, len });
            }
            if let Some(len) = g.max_len().filter(|&l| l >= m) {
                issues.push(Issue::TooLong { index, len, truncation: m });
            }
        }
        ValidationReport { issues }
    }

    pub fn with_generators(&self, generators: Vec<Relation>) -> BoundQuiver {
        BoundQuiver { generators, ..self.clone() }
    }

    pub fn with_basepoint(&self, basepoint: VertexId) -> BoundQuiver {
        BoundQuiver { basepoint, ..self.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    EmptyRelation { index: usize },
    NotParallel { index: usize },
    NotInSquare { index: usize, len: usize },
    TooLong { index: usize, len: usize, truncation: usize },
    Disconnected,
    TruncationBelowTwo { truncation: usize },
    TruncationWithinPaths { truncation: usize, longest: usize },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::EmptyRelation { index } => write!(f, "relations[{index}]: empty relation"),
            Issue::NotParallel { index } => write!(f, "relations[{index}]: not parallel"),
            Issue::NotInSquare { index, len } => {
                write!(f, "relations[{index}]: I ⊄ F² (term of length {len})")
            }
            Issue::TooLong { index, len, truncation } => {
                write!(f, "relations[{index}]: term of length {len} is not below the truncation {truncation}")
            }
            Issue::Disconnected => write!(f, "quiver is not connected"),
            Issue::TruncationBelowTwo { truncation } => {
                write!(f, "truncation: {truncation} is below 2")
            }
            Issue::TruncationWithinPaths { truncation, longest } => {
                write!(f, "truncation: {truncation} does not exceed the longest path length {longest}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.issues.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    fn example1() -> Quiver {
        Quiver::from_spec(&["1", "2", "3"], &[("alpha", "2", "1"), ("beta", "3", "2"), ("gamma", "3", "2")])
    }

    fn path(q: &Quiver, names: &[&str]) -> Path {
        Path::from_names(q, names).unwrap()
    }

    #[test]
    fn example_one_is_valid() {
        let q = example1();
        let g = Relation::monomial(path(&q, &["beta", "alpha"]));
        let bq = BoundQuiver::new(q.clone(), vec![g], Some(3), q.vertex("3").unwrap()).unwrap();
        assert!(bq.validate().is_valid());
        let auto = BoundQuiver::new(q.clone(), vec![], None, VertexId(0)).unwrap();
        assert_eq!(auto.truncation, 3);
    }

    #[test]
    fn reports_short_and_skew_generators() {
        let q = example1();
        let short = Relation::monomial(path(&q, &["alpha"]));
        let skew = Relation::new([(rational(1), path(&q, &["beta", "alpha"])), (rational(-1), path(&q, &["gamma"]))]);
        let bq = BoundQuiver::new(q, vec![short, skew], None, VertexId(0)).unwrap();
        let report = bq.validate();
        assert!(report.issues.contains(&Issue::NotInSquare { index: 0, len: 1 }));
        assert!(report.issues.contains(&Issue::NotParallel { index: 1 }));
        assert!(report.to_string().contains("I ⊄ F²"));
        assert!(report.to_string().contains("not parallel"));
    }

    #[test]
    fn cyclic_needs_truncation() {
        let q = Quiver::from_spec(&["1"], &[("l", "1", "1")]);
        assert!(matches!(BoundQuiver::new(q, vec![], None, VertexId(0)), Err(Error::MissingTruncation)));
    }

    #[test]
    fn relation_normalizes() {
        let q = example1();
        let p = path(&q, &["beta", "alpha"]);
        let r = Relation::new([(rational(1), p.clone()), (rational(-1), p)]);
        assert!(r.is_zero());
        let d = Relation::difference(path(&q, &["gamma", "alpha"]), path(&q, &["beta", "alpha"]));
        assert_eq!(d.display(&q), "-beta·alpha + gamma·alpha");
    }
}
