//! Exact scalar arithmetic.
//!
//! Every computation in this crate is exact: signs of determinants, strict
//! interiority of solutions and emptiness certificates are all decided by
//! comparisons of rational numbers, never by tolerances. The [`Scalar`] trait
//! captures what the geometric core needs from a coordinate field: an ordered
//! field with total comparison and exact arithmetic. Floating-point types do
//! not implement `Ord` and cannot instantiate it.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed};

/// An exactly ordered field usable as the coordinate type of all geometry.
pub trait Scalar:
    Num + Signed + Ord + Clone + Hash + Debug + Display + Send + Sync + 'static
{
    /// The exact rational `num / den`. `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// Parse either an integer literal or a `p/q` fraction. Anything else
    /// (in particular decimal notation) is rejected.
    fn parse_exact(s: &str) -> Option<Self>;

    /// Render in the same `p/q` (or plain integer) notation accepted by
    /// [`Scalar::parse_exact`].
    fn to_exact_string(&self) -> String;
}

impl Scalar for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn parse_exact(s: &str) -> Option<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Option<BigInt> {
            if t.is_empty() {
                return None;
            }
            let (sign, digits) = match t.as_bytes()[0] {
                b'-' => (-1, &t[1..]),
                b'+' => (1, &t[1..]),
                _ => (1, t),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let n: BigInt = digits.parse().ok()?;
            Some(if sign < 0 { -n } else { n })
        };
        match s.split_once('/') {
            Some((p, q)) => {
                let num = parse_int(p)?;
                let den = parse_int(q)?;
                if den == BigInt::from(0) {
                    return None;
                }
                Some(BigRational::new(num, den))
            }
            None => Some(BigRational::from(parse_int(s)?)),
        }
    }

    fn to_exact_string(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

/// The concrete scalar used by builders, invariants and the CLI.
pub type Rat = BigRational;

/// Shorthand for an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::from_ratio(num, den)
}

/// Shorthand for an exact integer scalar.
pub fn int(n: i64) -> Rat {
    Rat::from_int(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7", "1000000000000000000000/3"] {
            let r = Rat::parse_exact(s).unwrap();
            assert_eq!(Rat::parse_exact(&r.to_exact_string()), Some(r));
        }
    }

    #[test]
    fn rejects_floats_and_garbage() {
        for s in ["1.5", "1e3", "", "/", "3/0", "0x10", "1/2/3", "nan"] {
            assert!(Rat::parse_exact(s).is_none(), "accepted {s:?}");
        }
    }

    #[test]
    fn canonical_form() {
        let r = rat(6, -8);
        assert_eq!(r, rat(-3, 4));
        assert!(rat(0, 5).is_zero());
    }
}
