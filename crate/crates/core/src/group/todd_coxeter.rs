//! HLT coset enumeration over the trivial subgroup.

use super::{GroupPresentation, Letter};

pub const DEFAULT_COSET_CAP: usize = 100_000;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderResult {
    Finite(u64),
    /// The table did not close before the coset cap was reached.
    Inconclusive,
}

struct Overflow;

struct Table {
    cols: usize,
    rows: Vec<Vec<usize>>,
    parent: Vec<usize>,
    cap: usize,
}

fn col(l: Letter) -> usize {
    2 * l.gen + usize::from(l.inverse)
}

impl Table {
    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), Overflow> {
        if self.rows.len() >= self.cap {
            return Err(Overflow);
        }
        let d = self.rows.len();
        self.rows.push(vec![NONE; self.cols]);
        self.parent.push(d);
        self.rows[c][x] = d;
        self.rows[d][x ^ 1] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (keep, drop) = (k.min(l), k.max(l));
        self.parent[drop] = keep;
        queue.push(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.rows[e][x];
                if f == NONE {
                    continue;
                }
                self.rows[f][x ^ 1] = NONE;
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.rows[e1][x] != NONE {
                    let t = self.rows[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.rows[f1][x ^ 1] != NONE {
                    let t = self.rows[f1][x ^ 1];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.rows[e1][x] = f1;
                    self.rows[f1][x ^ 1] = e1;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), Overflow> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, w.len() as isize - 1);
        loop {
            while i <= j && self.rows[f][w[i as usize]] != NONE {
                f = self.rows[f][w[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.rows[b][w[j as usize] ^ 1] != NONE {
                b = self.rows[b][w[j as usize] ^ 1];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.rows[f][x] = b;
                self.rows[b][x ^ 1] = f;
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }
}

/// Order of the presented group when the coset table closes with at most
/// `max_cosets` cosets ever defined.
pub fn todd_coxeter(p: &GroupPresentation, max_cosets: usize) -> OrderResult {
    if p.generators.is_empty() {
        return OrderResult::Finite(1);
    }
    let relators: Vec<Vec<usize>> = p.relators.iter().map(|r| r.iter().map(|&l| col(l)).collect()).collect();
    let cols = 2 * p.generators.len();
    let mut t = Table { cols, rows: vec![vec![NONE; cols]], parent: vec![0], cap: max_cosets.max(1) };
    let run = |t: &mut Table| -> Result<(), Overflow> {
        let mut c = 0;
        while c < t.rows.len() {
            for r in &relators {
                if !t.live(c) {
                    break;
                }
                t.scan_and_fill(c, r)?;
            }
            if t.live(c) {
                for x in 0..cols {
                    if t.rows[c][x] == NONE {
                        t.define(c, x)?;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    };
    match run(&mut t) {
        Ok(()) => OrderResult::Finite((0..t.rows.len()).filter(|&c| t.live(c)).count() as u64),
        Err(Overflow) => OrderResult::Inconclusive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_groups() {
        assert_eq!(todd_coxeter(&GroupPresentation::cyclic(3), 100), OrderResult::Finite(3));
        let klein = GroupPresentation::from_spec(&["a", "b"], &[&["a", "a"], &["b", "b"], &["a", "b", "a", "b"]]);
        assert_eq!(todd_coxeter(&klein, 100), OrderResult::Finite(4));
        let z = GroupPresentation::from_spec(&["a"], &[]);
        assert_eq!(todd_coxeter(&z, 1000), OrderResult::Inconclusive);
        let s3 = GroupPresentation::from_spec(&["a", "b"], &[&["a", "a"], &["b", "b", "b"], &["a", "b", "a", "b"]]);
        assert_eq!(todd_coxeter(&s3, 100), OrderResult::Finite(6));
        assert_eq!(todd_coxeter(&GroupPresentation::trivial(), 1), OrderResult::Finite(1));
    }

    #[test]
    fn cyclic_orders() {
        for n in 1..=12 {
            assert_eq!(todd_coxeter(&GroupPresentation::cyclic(n), 1000), OrderResult::Finite(n as u64));
        }
    }

    #[test]
    fn larger_groups() {
        // Binary polyhedral-style presentation of A5 and a dihedral group.
        let a5 = GroupPresentation::from_spec(
            &["a", "b"],
            &[&["a", "a"], &["b", "b", "b"], &["a", "b", "a", "b", "a", "b", "a", "b", "a", "b"]],
        );
        assert_eq!(todd_coxeter(&a5, 10_000), OrderResult::Finite(60));
        let d8 = GroupPresentation::from_spec(
            &["r", "s"],
            &[&["r", "r", "r", "r", "r", "r", "r", "r"], &["s", "s"], &["s", "r", "s", "r"]],
        );
        assert_eq!(todd_coxeter(&d8, 10_000), OrderResult::Finite(16));
    }

    proptest! {
        #[test]
        fn independent_of_generator_order(n in 1usize..6, m in 1usize..6) {
            let p = GroupPresentation::cyclic(n).direct_product(&GroupPresentation::cyclic(m));
            let q = GroupPresentation::cyclic(m).direct_product(&GroupPresentation::cyclic(n));
            prop_assert_eq!(todd_coxeter(&p, 10_000), OrderResult::Finite((n * m) as u64));
            prop_assert_eq!(todd_coxeter(&q, 10_000), todd_coxeter(&p, 10_000));
        }
    }
}
