//! Scalar fields used by the linear-algebra kernel.
//!
//! Everything user-facing runs over exact rationals. The prime fields exist
//! for the brute-force minimality oracle, where a relation subspace has to be
//! small enough to enumerate vector by vector.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Minimal field interface shared by [`Rational`] and [`Fp`].
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Image of a rational under the canonical map, or `None` when the
    /// denominator is not invertible in this field.
    fn from_rational(r: &Rational) -> Option<Self>;

    /// 0 for the rationals, p for the prime field of order p.
    fn characteristic() -> u64;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n))).expect("integers always map into a field")
    }

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

impl Field for Rational {
    fn characteristic() -> u64 {
        0
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        Some(r.clone())
    }
}

/// Element of the prime field `Z/PZ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

pub type F5 = Fp<5>;
pub type F7 = Fp<7>;

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(value: i64) -> Self {
        Fp(value.rem_euclid(P as i64) as u64)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    /// All field elements in residue order.
    pub fn elements() -> impl Iterator<Item = Self> {
        (0..P).map(Fp)
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u128;
        let mut acc: u128 = 1;
        let p = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u64)
    }

    fn reduce_big(n: &BigInt) -> u64 {
        let p = BigInt::from(P);
        n.mod_floor(&p).to_u64().expect("residue fits in u64")
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn characteristic() -> u64 {
        P
    }
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % P)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp((self.0 + P - other.0) % P)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u128 * other.0 as u128) % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        // Fermat: a^(p-2) = a^-1 for prime p.
        self.pow(P - 2)
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        let den = Self::reduce_big(r.denom());
        if den == 0 {
            return None;
        }
        let num = Fp::<P>(Self::reduce_big(r.numer()));
        Some(num.mul(&Fp(den).inv()))
    }
}

/// Error returned when a rational literal is malformed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `[sign]digits[/digits]`, with a strictly positive denominator.
/// A leading U+2212 minus sign is accepted as `-`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let replaced;
    let text = match text.strip_prefix('\u{2212}') {
        Some(rest) => {
            replaced = format!("-{rest}");
            replaced.as_str()
        }
        None => text,
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let numer = BigInt::from_str(num.strip_prefix('+').unwrap_or(num)).map_err(|_| err())?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let d = BigInt::from_str(d).map_err(|_| err())?;
            if !d.is_positive() {
                return Err(err());
            }
            d
        }
    };
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `n` for integers, `n/d` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_rational_literals() {
        assert_eq!(parse_rational("-1").unwrap(), rational(-1));
        assert_eq!(parse_rational("2/3").unwrap(), Rational::new(BigInt::from(2), BigInt::from(3)));
        assert_eq!(parse_rational("4/6").unwrap(), parse_rational("2/3").unwrap());
        assert_eq!(parse_rational("+7").unwrap(), rational(7));
        for bad in ["", "-", "1/0", "1/-2", "a", "1.5", "1/", "/2", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(format_rational(&parse_rational("-8/4").unwrap()), "-2");
    }

    #[test]
    fn prime_field_reduction() {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(F5::from_rational(&half), Some(F5::new(3)));
        let fifth = Rational::new(BigInt::from(1), BigInt::from(5));
        assert_eq!(F5::from_rational(&fifth), None);
        assert_eq!(F5::from_rational(&rational(-2)), Some(F5::new(3)));
        for a in F7::elements().skip(1) {
            assert_eq!(a.mul(&a.inv()), F7::one());
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..9).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!(Field::add(&Field::add(&a, &b), &c), Field::add(&a, &Field::add(&b, &c)));
            prop_assert_eq!(Field::mul(&Field::mul(&a, &b), &c), Field::mul(&a, &Field::mul(&b, &c)));
            prop_assert_eq!(Field::add(&a, &b), Field::add(&b, &a));
            prop_assert_eq!(Field::mul(&a, &b), Field::mul(&b, &a));
            prop_assert_eq!(
                Field::mul(&a, &Field::add(&b, &c)),
                Field::add(&Field::mul(&a, &b), &Field::mul(&a, &c))
            );
            prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
        }

        #[test]
        fn prime_field_axioms(a in 0i64..5, b in 0i64..5, c in 0i64..5) {
            let (a, b, c) = (F5::new(a), F5::new(b), F5::new(c));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&b).add(&b), a);
        }
    }
}
