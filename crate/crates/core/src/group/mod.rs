//! Finitely presented groups: words, presentations, simplification,
//! abelianization and coset enumeration.

mod abelian;
mod io;
mod tietze;
mod todd_coxeter;

use std::fmt;

pub use abelian::{abelian_invariants, AbelianInvariants};
pub use io::{GroupFile, LetterSpec};
pub use tietze::{tietze_simplify, DEFAULT_TIETZE_PASSES};
pub use todd_coxeter::{todd_coxeter, OrderResult, DEFAULT_COSET_CAP};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

pub type Word = Vec<Letter>;

pub fn inverse_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inv()).collect()
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancellation between the two ends.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == w[hi - 1].inv() {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

/// Least rotation of the word or of its inverse; equal for relators that
/// define the same normal closure by conjugation and inversion.
pub fn canonical_cyclic(w: &[Letter]) -> Word {
    let w = cyclic_reduce(w);
    let inv = inverse_word(&w);
    let mut best: Option<Word> = None;
    for cand in [&w, &inv] {
        for k in 0..cand.len().max(1) {
            let rot: Word = cand[k..].iter().chain(&cand[..k]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Finite presentation `⟨generators | relators⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    /// Relators are freely reduced and empty ones dropped.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        let relators = relators.iter().map(|r| free_reduce(r)).filter(|r| !r.is_empty()).collect();
        GroupPresentation { generators, relators }
    }

    pub fn trivial() -> Self {
        GroupPresentation { generators: Vec::new(), relators: Vec::new() }
    }

    /// Builds from generator names and relators spelled as name lists, where
    /// a trailing `^-1` marks an inverse letter. Panics on unknown names.
    pub fn from_spec(generators: &[&str], relators: &[&[&str]]) -> Self {
        let gens: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let find = |name: &str| gens.iter().position(|g| g == name).expect("declared generator");
        let relators = relators
            .iter()
            .map(|r| {
                r.iter()
                    .map(|l| match l.strip_suffix("^-1") {
                        Some(n) => Letter::neg(find(n)),
                        None => Letter::pos(find(l)),
                    })
                    .collect()
            })
            .collect();
        GroupPresentation::new(gens, relators)
    }

    /// `⟨a | a^n⟩`.
    pub fn cyclic(n: usize) -> Self {
        GroupPresentation::new(vec!["a".into()], vec![vec![Letter::pos(0); n]])
    }

    pub fn is_trivially_presented(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn word_to_string(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|l| {
                let name = &self.generators[l.gen];
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Generators of `other` that clash with ours get primes appended.
    pub fn free_product(&self, other: &GroupPresentation) -> GroupPresentation {
        let mut gens = self.generators.clone();
        for g in &other.generators {
            let mut name = g.clone();
            while gens.contains(&name) {
                name.push('\'');
            }
            gens.push(name);
        }
        let shift = self.generators.len();
        let mut relators = self.relators.clone();
        relators.extend(
            other
                .relators
                .iter()
                .map(|r| r.iter().map(|l| Letter { gen: l.gen + shift, inverse: l.inverse }).collect()),
        );
        GroupPresentation::new(gens, relators)
    }

    /// Free product plus commutators `g⁻¹h⁻¹gh` across the factors.
    pub fn direct_product(&self, other: &GroupPresentation) -> GroupPresentation {
        let mut p = self.free_product(other);
        let shift = self.generators.len();
        for g in 0..shift {
            for h in 0..other.generators.len() {
                let h = h + shift;
                p.relators.push(vec![Letter::neg(g), Letter::neg(h), Letter::pos(g), Letter::pos(h)]);
            }
        }
        p
    }
}

pub fn free_product(p1: &GroupPresentation, p2: &GroupPresentation) -> GroupPresentation {
    p1.free_product(p2)
}

pub fn direct_product(p1: &GroupPresentation, p2: &GroupPresentation) -> GroupPresentation {
    p1.direct_product(p2)
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_to_string(r)).collect();
        write!(f, "<{} | {}>", self.generators.join(", "), rels.join(", "))
    }
}

/// Identification data for a presented group: simplified presentation,
/// abelian invariants and the coset-enumeration outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCertificate {
    pub simplified: GroupPresentation,
    pub abelian: AbelianInvariants,
    pub order: OrderResult,
    pub coset_cap: usize,
}

impl GroupCertificate {
    pub fn new(p: &GroupPresentation, coset_cap: usize) -> Self {
        let simplified = tietze_simplify(p, DEFAULT_TIETZE_PASSES);
        let abelian = abelian_invariants(&simplified);
        let order = todd_coxeter(&simplified, coset_cap);
        GroupCertificate { simplified, abelian, order, coset_cap }
    }

    pub fn is_trivial(&self) -> bool {
        self.simplified.generators.is_empty() || self.order == OrderResult::Finite(1)
    }

    /// Free of rank k: simplification left k generators and no relators.
    pub fn free_rank(&self) -> Option<usize> {
        self.simplified.relators.is_empty().then_some(self.simplified.generators.len())
    }

    /// Short human-readable identification, e.g. `Z`, `trivial`, `Z_3 (order 3)`.
    pub fn summary(&self) -> String {
        if self.is_trivial() {
            return "trivial".into();
        }
        if let Some(k) = self.free_rank() {
            return if k == 1 { "Z".into() } else { format!("free group of rank {k}") };
        }
        match self.order {
            OrderResult::Finite(n) if self.abelian.order().is_some_and(|a| a == n.into()) => {
                format!("{} (order {n})", self.abelian)
            }
            OrderResult::Finite(n) => format!("nonabelian of order {n}, abelianization {}", self.abelian),
            OrderResult::Inconclusive => {
                format!("abelianization {}; order inconclusive at coset cap {}", self.abelian, self.coset_cap)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        let w = vec![Letter::pos(0), Letter::pos(1), Letter::neg(1), Letter::neg(0), Letter::pos(2)];
        assert_eq!(free_reduce(&w), vec![Letter::pos(2)]);
        let c = vec![Letter::neg(0), Letter::pos(1), Letter::pos(0)];
        assert_eq!(cyclic_reduce(&c), vec![Letter::pos(1)]);
        let r1 = vec![Letter::pos(0), Letter::pos(1)];
        let r2 = vec![Letter::neg(0), Letter::neg(1)];
        assert_eq!(canonical_cyclic(&r1), canonical_cyclic(&r2));
    }

    #[test]
    fn products() {
        let a = GroupPresentation::cyclic(2);
        let b = GroupPresentation::cyclic(3);
        let fp = free_product(&a, &b);
        assert_eq!(fp.generators, ["a", "a'"]);
        assert_eq!(fp.relators.len(), 2);
        let dp = direct_product(&a, &b);
        assert_eq!(dp.relators.len(), 3);
        assert_eq!(todd_coxeter(&dp, 100), OrderResult::Finite(6));
        let t = direct_product(&a, &GroupPresentation::trivial());
        assert_eq!(t, a);
        assert_eq!(fp.to_string(), "<a, a' | a*a, a'*a'*a'>");
    }

    #[test]
    fn summaries() {
        let cert = |p: &GroupPresentation| GroupCertificate::new(p, DEFAULT_COSET_CAP).summary();
        assert_eq!(cert(&GroupPresentation::from_spec(&["g"], &[])), "Z");
        assert_eq!(cert(&GroupPresentation::from_spec(&["g"], &[&["g"]])), "trivial");
        assert_eq!(cert(&GroupPresentation::cyclic(3)), "Z_3 (order 3)");
        let s3 = GroupPresentation::from_spec(&["a", "b"], &[&["a", "a"], &["b", "b", "b"], &["a", "b", "a", "b"]]);
        assert_eq!(cert(&s3), "nonabelian of order 6, abelianization Z_2");
    }
}
