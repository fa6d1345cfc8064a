//! Named substitutions used by the constructions.

use crate::constructions::loop_name;
use crate::error::{Error, Result};
use crate::linalg::rational;
use crate::quiver::{BoundQuiver, Path, Relation};

use super::Substitution;

pub const BUILTINS: [&str; 4] = ["example1", "ladder_trivializer", "qg_trivializer", "loop_freeer"];

fn arrow_path(bq: &BoundQuiver, name: &str) -> Result<Path> {
    Ok(Path::arrow(&bq.quiver, bq.quiver.arrow_id(name)?))
}

/// `beta ↦ beta + gamma`.
pub fn example1(bq: &BoundQuiver) -> Result<Substitution> {
    let (beta, gamma) = (arrow_path(bq, "beta")?, arrow_path(bq, "gamma")?);
    if !beta.is_parallel(&gamma) {
        return Err(Error::BadParameter("beta and gamma must be parallel".into()));
    }
    Ok(Substitution::new().assign(beta.arrows()[0], Relation::monomial(gamma)))
}

/// `alpha_n ↦ alpha_n − beta_n` on a ladder; `n` defaults to the largest
/// index with an arrow `alpha<n>`.
pub fn ladder_trivializer(bq: &BoundQuiver, n: Option<usize>) -> Result<Substitution> {
    let n = match n {
        Some(n) => n,
        None => (1..=bq.quiver.arrow_count())
            .rev()
            .find(|j| bq.quiver.arrow_id(&format!("alpha{j}")).is_ok())
            .ok_or_else(|| Error::BadParameter("no arrow named alpha<n>".into()))?,
    };
    let alpha = arrow_path(bq, &format!("alpha{n}"))?;
    let beta = arrow_path(bq, &format!("beta{n}"))?;
    Ok(Substitution::new().assign(alpha.arrows()[0], Relation::new([(rational(-1), beta)])))
}

/// `alpha_g ↦ alpha_g + beta_g + beta_g²` for every pair of loops of `Q_G`;
/// empty for a group without generators.
pub fn qg_trivializer(bq: &BoundQuiver) -> Result<Substitution> {
    let q = &bq.quiver;
    let mut s = Substitution::new();
    for a in q.arrows() {
        let Some(g) = a.name.strip_prefix("alpha_") else { continue };
        let alpha = q.arrow_id(&a.name)?;
        let beta = q.arrow_id(&loop_name("beta", g))?;
        let square = Path::from_arrows(q, vec![beta, beta])?;
        s = s.assign(alpha, Relation::new([(rational(1), Path::arrow(q, beta)), (rational(1), square)]));
    }
    Ok(s)
}

/// `alpha_i ↦ alpha_i − alpha_i^{n_i+1}` on a loop family.
pub fn loop_freeer(bq: &BoundQuiver, orders: &[usize]) -> Result<Substitution> {
    let q = &bq.quiver;
    let loops = (1..).take_while(|i| q.arrow_id(&format!("alpha{i}")).is_ok()).count();
    if loops != orders.len() {
        return Err(Error::BadParameter(format!("{} orders given for {loops} loops", orders.len())));
    }
    let mut s = Substitution::new();
    for (k, &n) in orders.iter().enumerate() {
        let alpha = q.arrow_id(&format!("alpha{}", k + 1))?;
        let power = Path::from_arrows(q, vec![alpha; n + 1])?;
        s = s.assign(alpha, Relation::new([(rational(-1), power)]));
    }
    Ok(s)
}

/// Builtin by name; `ladder_trivializer` reads an optional `n`,
/// `loop_freeer` needs the loop orders.
pub fn builtin(name: &str, bq: &BoundQuiver, params: &[usize]) -> Result<Substitution> {
    match name {
        "example1" => example1(bq),
        "ladder_trivializer" => ladder_trivializer(bq, params.first().copied()),
        "qg_trivializer" => qg_trivializer(bq),
        "loop_freeer" => loop_freeer(bq, params),
        other => {
            Err(Error::BadParameter(format!("unknown builtin substitution {other:?}; known: {}", BUILTINS.join(", "))))
        }
    }
}
