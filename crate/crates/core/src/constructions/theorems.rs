//! One algebra, several presentations: for each listed group a presentation
//! whose fundamental group is that group.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{coproduct, coproduct_all, ladder, parallel_arrows_example, product, quiver_from_group, single_vertex};
use crate::change::{
    example1, glued_substitution, kernel_ideal, ladder_trivializer, product_substitution, qg_trivializer, Substitution,
};
use crate::error::{Error, Result};
use crate::group::{GroupCertificate, GroupPresentation};
use crate::pi1::fundamental_group;
use crate::quiver::BoundQuiver;
use crate::relations::RelationSpaces;

/// Groups built from `Z` and `Z_n` by free and direct products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Z,
    Cyclic(usize),
    Free(Box<GroupExpr>, Box<GroupExpr>),
    Direct(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    pub fn presentation(&self) -> GroupPresentation {
        match self {
            GroupExpr::Z => GroupPresentation::from_spec(&["z"], &[]),
            GroupExpr::Cyclic(1) => GroupPresentation::trivial(),
            GroupExpr::Cyclic(n) => GroupPresentation::cyclic(*n),
            GroupExpr::Free(a, b) => a.presentation().free_product(&b.presentation()),
            GroupExpr::Direct(a, b) => a.presentation().direct_product(&b.presentation()),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Z => write!(f, "Z"),
            GroupExpr::Cyclic(n) => write!(f, "Z_{n}"),
            GroupExpr::Free(a, b) => write!(f, "({a} * {b})"),
            GroupExpr::Direct(a, b) => write!(f, "({a} x {b})"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Expression(format!("{msg} at offset {} in {:?}", self.pos, self.text)))
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().expect("nonempty").len_utf8();
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        if self.eat("(") {
            let left = self.expr()?;
            let free = if self.eat("*") {
                true
            } else if self.eat("x") || self.eat("×") {
                false
            } else {
                return self.err("expected '*' or 'x'");
            };
            let right = self.expr()?;
            if !self.eat(")") {
                return self.err("expected ')'");
            }
            let (l, r) = (Box::new(left), Box::new(right));
            return Ok(if free { GroupExpr::Free(l, r) } else { GroupExpr::Direct(l, r) });
        }
        if self.eat("Z_") {
            let digits: String = self.text[self.pos..].chars().take_while(char::is_ascii_digit).collect();
            self.pos += digits.len();
            return match digits.parse::<usize>() {
                Ok(n) if n >= 1 => Ok(GroupExpr::Cyclic(n)),
                _ => self.err("expected a positive order after 'Z_'"),
            };
        }
        if self.eat("Z") {
            return Ok(GroupExpr::Z);
        }
        self.err("expected 'Z', 'Z_n' or '('")
    }
}

impl FromStr for GroupExpr {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut p = Parser { text, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != text.len() {
            return p.err("trailing input");
        }
        Ok(e)
    }
}

/// A presentation realizing a group, with a substitution to a presentation
/// of the same algebra with trivial fundamental group.
#[derive(Clone, Debug)]
pub struct Realization {
    pub presenting: BoundQuiver,
    pub trivializer: Substitution,
    pub expected: GroupPresentation,
}

/// `Z_n` by ladders, `Z` by the parallel-arrows example, products by
/// coproducts and tensor products of the parts.
pub fn realize(e: &GroupExpr) -> Result<Realization> {
    let expected = e.presentation();
    match e {
        GroupExpr::Cyclic(1) => {
            Ok(Realization { presenting: single_vertex(), trivializer: Substitution::new(), expected })
        }
        GroupExpr::Cyclic(n) => {
            let presenting = ladder(*n)?;
            let trivializer = ladder_trivializer(&presenting, Some(*n))?;
            Ok(Realization { presenting, trivializer, expected })
        }
        GroupExpr::Z => {
            let presenting = parallel_arrows_example();
            let trivializer = example1(&presenting)?;
            Ok(Realization { presenting, trivializer, expected })
        }
        GroupExpr::Free(a, b) => {
            let (ra, rb) = (realize(a)?, realize(b)?);
            let glued = coproduct(&ra.presenting, ra.presenting.basepoint, &rb.presenting, rb.presenting.basepoint)?;
            let trivializer = glued_substitution(&glued, &[(0, &ra.trivializer), (1, &rb.trivializer)])?;
            Ok(Realization { presenting: glued.bound, trivializer, expected })
        }
        GroupExpr::Direct(a, b) => {
            let (ra, rb) = (realize(a)?, realize(b)?);
            let pq = product(&ra.presenting, &rb.presenting)?;
            let trivializer = product_substitution(&pq, Some(&ra.trivializer), Some(&rb.trivializer));
            Ok(Realization { presenting: pq.bound, trivializer, expected })
        }
    }
}

/// Presentations `(Q, I_1), …, (Q, I_k)` of one algebra, where `I_i` uses the
/// presenting ideal of component `i` and the trivialized ideals elsewhere.
#[derive(Clone, Debug)]
pub struct TheoremInstance {
    /// All components presenting.
    pub base: BoundQuiver,
    pub presentations: Vec<BoundQuiver>,
    pub expected: Vec<GroupPresentation>,
    /// Trivializer of each component, on the glued quiver.
    pub substitutions: Vec<Substitution>,
}

fn assemble(parts: Vec<Realization>) -> Result<TheoremInstance> {
    if parts.is_empty() {
        return Err(Error::BadParameter("at least one group is required".into()));
    }
    let trivial: Vec<BoundQuiver> =
        parts.par_iter().map(|r| kernel_ideal(&r.presenting, &r.trivializer)).collect::<Result<_>>()?;
    let glue = |i: Option<usize>| {
        let chosen: Vec<(BoundQuiver, _)> = parts
            .iter()
            .zip(&trivial)
            .enumerate()
            .map(|(k, (r, t))| {
                let bq = if Some(k) == i { r.presenting.clone() } else { t.clone() };
                (bq, r.presenting.basepoint)
            })
            .collect();
        coproduct_all(&chosen)
    };
    let all: Vec<(BoundQuiver, _)> = parts.iter().map(|r| (r.presenting.clone(), r.presenting.basepoint)).collect();
    let base = coproduct_all(&all)?;
    let substitutions =
        (0..parts.len()).map(|k| glued_substitution(&base, &[(k, &parts[k].trivializer)])).collect::<Result<_>>()?;
    let presentations = (0..parts.len()).map(|i| glue(Some(i)).map(|g| g.bound)).collect::<Result<_>>()?;
    Ok(TheoremInstance {
        base: base.bound,
        presentations,
        expected: parts.into_iter().map(|r| r.expected).collect(),
        substitutions,
    })
}

/// Glues the `Q_{G_i}` at their vertex 1.
pub fn theorem_a_instance(groups: &[GroupPresentation]) -> Result<TheoremInstance> {
    let parts = groups
        .iter()
        .map(|g| {
            let presenting = quiver_from_group(g);
            let trivializer = qg_trivializer(&presenting)?;
            Ok(Realization { presenting, trivializer, expected: g.clone() })
        })
        .collect::<Result<_>>()?;
    assemble(parts)
}

/// Triangular presentations for groups in the `Z | Z_n | (e * e) | (e x e)`
/// grammar.
pub fn theorem_b_instance(exprs: &[GroupExpr]) -> Result<TheoremInstance> {
    assemble(exprs.iter().map(realize).collect::<Result<_>>()?)
}

#[derive(Clone, Debug)]
pub struct PresentationCheck {
    pub dimension: usize,
    /// The ideal is the kernel of the other trivializers applied to the base.
    pub same_algebra: bool,
    pub expected: GroupCertificate,
    pub observed: GroupCertificate,
}

impl PresentationCheck {
    pub fn group_matches(&self) -> bool {
        self.expected.abelian == self.observed.abelian && self.expected.order == self.observed.order
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub triangular: bool,
    pub checks: Vec<PresentationCheck>,
}

impl TheoremReport {
    pub fn dimensions_agree(&self) -> bool {
        self.checks.windows(2).all(|w| w[0].dimension == w[1].dimension)
    }

    pub fn passed(&self) -> bool {
        self.dimensions_agree() && self.checks.iter().all(|c| c.same_algebra && c.group_matches())
    }
}

/// Dimensions, algebra isomorphism via the substitutions, and identification
/// of every fundamental group against its target.
pub fn certify(instance: &TheoremInstance, coset_cap: usize) -> Result<TheoremReport> {
    let base = &instance.base;
    let checks = (0..instance.presentations.len())
        .into_par_iter()
        .map(|i| {
            let bq = &instance.presentations[i];
            let spaces = RelationSpaces::new(bq)?;
            let mut others = Substitution::new();
            for (k, s) in instance.substitutions.iter().enumerate() {
                if k != i {
                    others.assignments.extend(s.assignments.clone());
                }
            }
            let changed = RelationSpaces::new(&kernel_ideal(base, &others)?)?;
            let pi1 = fundamental_group(bq)?;
            Ok(PresentationCheck {
                dimension: spaces.dimension(),
                same_algebra: bq.quiver == base.quiver && spaces.same_ideal(&changed),
                expected: GroupCertificate::new(&instance.expected[i], coset_cap),
                observed: GroupCertificate::new(&pi1.presentation, coset_cap),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoremReport { triangular: base.quiver.is_triangular(), checks })
}
