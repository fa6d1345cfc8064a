use std::collections::HashSet;

use num_integer::Integer;

use super::{canonical_cyclic, cyclic_reduce, free_reduce, inverse_word, GroupPresentation, Letter, Word};

pub const DEFAULT_TIETZE_PASSES: usize = 10_000;

/// Total relator length above which generator elimination stops.
const LENGTH_CAP: usize = 200_000;

/// Tietze moves until nothing changes or `max_passes` passes ran:
/// free and cyclic reduction, removal of empty and duplicate relators
/// (up to rotation and inversion), merging the pure powers `g^a`, `g^b` of a
/// generator into `g^gcd(a,b)`, and elimination of a generator occurring
/// exactly once in some relator.
pub fn tietze_simplify(p: &GroupPresentation, max_passes: usize) -> GroupPresentation {
    let mut gens = p.generators.clone();
    let mut rels: Vec<Word> = p.relators.clone();
    for _ in 0..max_passes {
        rels = tidy(&rels);
        rels = merge_powers(&rels);
        match eliminate_one(&mut gens, &rels) {
            Some(next) => rels = next,
            None => break,
        }
    }
    GroupPresentation { generators: gens, relators: tidy(&rels) }
}

/// Cyclic reduction, dropping empties and duplicates; first occurrence wins.
fn tidy(rels: &[Word]) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in rels {
        let r = cyclic_reduce(r);
        if r.is_empty() {
            continue;
        }
        if seen.insert(canonical_cyclic(&r)) {
            out.push(r);
        }
    }
    out
}

/// Exponent `k` if the word is `g^k` for a single generator `g`.
fn pure_power(w: &[Letter]) -> Option<(usize, i64)> {
    let g = w.first()?.gen;
    w.iter().all(|l| l.gen == g).then(|| (g, w.iter().map(|l| l.exponent()).sum()))
}

fn merge_powers(rels: &[Word]) -> Vec<Word> {
    let mut gcds: Vec<(usize, i64)> = Vec::new();
    for r in rels {
        if let Some((g, k)) = pure_power(r) {
            match gcds.iter_mut().find(|(h, _)| *h == g) {
                Some((_, d)) => *d = d.gcd(&k),
                None => gcds.push((g, k.abs())),
            }
        }
    }
    let mut out: Vec<Word> = Vec::new();
    let mut emitted: Vec<usize> = Vec::new();
    for r in rels {
        match pure_power(r) {
            Some((g, _)) => {
                if !emitted.contains(&g) {
                    emitted.push(g);
                    let d = gcds.iter().find(|(h, _)| *h == g).expect("recorded").1;
                    out.push(vec![Letter::pos(g); d as usize]);
                }
            }
            None => out.push(r.clone()),
        }
    }
    out
}

/// Eliminates one generator occurring exactly once in a relator, choosing the
/// shortest such relator and then the lowest generator index.
fn eliminate_one(gens: &mut Vec<String>, rels: &[Word]) -> Option<Vec<Word>> {
    let total: usize = rels.iter().map(Vec::len).sum();
    let mut best: Option<(usize, usize, usize)> = None; // (len, gen, relator)
    for (ri, r) in rels.iter().enumerate() {
        let mut counts = std::collections::BTreeMap::new();
        for l in r {
            *counts.entry(l.gen).or_insert(0usize) += 1;
        }
        if let Some((&g, _)) = counts.iter().find(|(_, &c)| c == 1) {
            let cand = (r.len(), g, ri);
            if best.is_none_or(|b| (cand.0, cand.1) < (b.0, b.1)) {
                best = Some(cand);
            }
        }
    }
    let (len, g, ri) = best?;
    let r = &rels[ri];
    // Worst case every other occurrence grows by the replacement length.
    if total.saturating_mul(len) > LENGTH_CAP && len > 1 {
        return None;
    }
    let pos = r.iter().position(|l| l.gen == g).expect("occurs once");
    // Rotate to g^e · w.
    let rest: Word = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
    let replacement = if r[pos].inverse { rest } else { inverse_word(&rest) };
    let replacement_inv = inverse_word(&replacement);
    let mut out = Vec::with_capacity(rels.len() - 1);
    for (i, other) in rels.iter().enumerate() {
        if i == ri {
            continue;
        }
        let mut w = Vec::with_capacity(other.len());
        for l in other {
            if l.gen == g {
                w.extend_from_slice(if l.inverse { &replacement_inv } else { &replacement });
            } else {
                w.push(*l);
            }
        }
        out.push(free_reduce(&w));
    }
    gens.remove(g);
    for w in &mut out {
        for l in w.iter_mut() {
            if l.gen > g {
                l.gen -= 1;
            }
        }
    }
    Some(out)
}
