//! Arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Shorthand constructor from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "rat: zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Decimal-free textual form: `"p"` for integers, `"p/q"` otherwise.
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = n.parse().ok()?;
    let den: BigInt = d.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

/// Height of a rational: max of |numerator| and denominator, for
/// reconstruction bounds and test diagnostics.
pub fn rat_height(x: &Rat) -> BigInt {
    x.numer().abs().max(x.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_of_thirds() {
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
    }

    #[test]
    fn formatting_round_trip() {
        for x in [rat(3, 4), rat(-7, 2), rat(5, 1), rat(0, 9)] {
            assert_eq!(rat_from_str(&rat_to_string(&x)).unwrap(), x);
        }
        assert_eq!(rat_to_string(&rat(5, 1)), "5");
        assert_eq!(rat_to_string(&rat(-1, 3)), "-1/3");
        assert!(rat_from_str("1/0").is_none());
    }
}
