//! Exact arithmetic over ℚ and ℚ(i), exact linear algebra, and the
//! binary-form polynomial algebra used by the counting engine.
//!
//! All values are immutable normal forms: rationals are reduced with a
//! positive denominator, projective points carry a canonical lift, and
//! gcds are monic, so equality is syntactic everywhere.

mod form;
mod gauss;
mod linalg;
mod poly;

pub use form::{
    distinct_root_count, form_gcd, squarefree_root_count, BinaryForm, BinaryQuadratic,
    ProjectivePoint1,
};
pub use gauss::Gauss;
pub use linalg::rank_of_matrix;
pub use poly::Poly;

use crate::Error;
use alloc::string::{String, ToString};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rat = num_rational::BigRational;

/// A vector with entries in ℚ(i).
pub type QiVector = alloc::vec::Vec<Gauss>;

/// Canonical wire format for a rational: `"p/q"` with `q > 0`, zero as
/// `"0/1"`. This format is shared by every module and the CLI.
pub fn rat_to_string(r: &Rat) -> String {
    let mut s = r.numer().to_string();
    s.push('/');
    s.push_str(&r.denom().to_string());
    s
}

/// Parses the `"p/q"` wire format. A bare integer `"p"` is accepted as
/// `p/1`; a zero denominator is rejected.
pub fn rat_from_str(s: &str) -> crate::Result<Rat> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::Parse(alloc::format!("bad numerator in {:?}", s)))?;
    let denom: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::Parse(alloc::format!("bad denominator in {:?}", s)))?;
    if denom.is_zero() {
        return Err(Error::Parse(alloc::format!("zero denominator in {:?}", s)));
    }
    Ok(Rat::new(numer, denom))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Max-norm distance between two rationals, used by the semi-continuity
/// probe's radius bookkeeping.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

/// Exact square root in ℚ when one exists.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rat::new(n, d))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_wire_format_round_trips() {
        for (s, canon) in [("3/6", "1/2"), ("-4/2", "-2/1"), ("0/5", "0/1"), ("7", "7/1")] {
            let r = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&r), canon);
        }
    }

    #[test]
    fn rat_zero_denominator_rejected() {
        assert!(matches!(rat_from_str("1/0"), Err(Error::Parse(_))));
    }

    #[test]
    fn rat_negative_denominator_normalizes() {
        let r = rat_from_str("1/-2").unwrap();
        assert_eq!(rat_to_string(&r), "-1/2");
    }
}
