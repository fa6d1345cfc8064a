use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::GroupPresentation;
use crate::linalg::{smith_normal_form, Matrix};

/// `Z^free_rank ⊕ Z_{t_1} ⊕ … ⊕ Z_{t_k}` with `t_1 | t_2 | … | t_k`, all `t_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn new(free_rank: usize, torsion: &[u64]) -> Self {
        AbelianInvariants { free_rank, torsion: torsion.iter().map(|&t| BigInt::from(t)).collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the abelianization when finite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion.iter().map(|t| u64::try_from(t).unwrap_or(u64::MAX)).collect()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z_{t}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            k => parts.push(format!("Z^{k}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Smith normal form of the relator exponent-sum matrix.
pub fn abelian_invariants(p: &GroupPresentation) -> AbelianInvariants {
    let n = p.generators.len();
    let mut m = Matrix::filled(p.relators.len(), n, BigInt::zero());
    for (r, rel) in p.relators.iter().enumerate() {
        for l in rel {
            let v = m.get(r, l.gen) + l.exponent();
            m.set(r, l.gen, v);
        }
    }
    let d = smith_normal_form(&m);
    AbelianInvariants { free_rank: n - d.len(), torsion: d.into_iter().filter(|x| !x.is_one()).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let z = GroupPresentation::from_spec(&["a"], &[]);
        assert_eq!(abelian_invariants(&z), AbelianInvariants::new(1, &[]));
        assert_eq!(abelian_invariants(&GroupPresentation::cyclic(2)), AbelianInvariants::new(0, &[2]));
        let p =
            GroupPresentation::from_spec(&["a", "b"], &[&["a", "a"], &["b", "b", "b"], &["a", "b", "a^-1", "b^-1"]]);
        assert_eq!(abelian_invariants(&p), AbelianInvariants::new(0, &[6]));
        assert_eq!(AbelianInvariants::new(0, &[2, 6]).to_string(), "Z_2 x Z_6");
        assert_eq!(AbelianInvariants::new(2, &[]).to_string(), "Z^2");
        assert_eq!(abelian_invariants(&GroupPresentation::trivial()).to_string(), "1");
    }
}
