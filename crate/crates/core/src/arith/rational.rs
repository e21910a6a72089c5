//! Helpers around [`BigRational`], the coefficient field of every computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p`, `p/q` with arbitrary-size integers.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse { pos: 0, msg: format!("not a rational: `{s}`") };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Gcd of a list of integers (nonnegative; zero for an empty or all-zero list).
pub fn integer_content<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for c in it {
        if g.is_one() {
            break;
        }
        g = g.gcd(c);
    }
    g.abs()
}

/// Scales a rational vector to coprime integers whose first nonzero entry is positive.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let l = denominator_lcm(v.iter());
    let ints: Vec<BigInt> = v.iter().map(|r| (r * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = integer_content(ints.iter());
    if g.is_zero() {
        return ints;
    }
    let sign = ints.iter().find(|c| !c.is_zero()).map(|c| c.is_negative()).unwrap_or(false);
    ints.into_iter()
        .map(|c| {
            let q = c / &g;
            if sign {
                -q
            } else {
                q
            }
        })
        .collect()
}

/// The rational with the smallest denominator (then smallest absolute numerator)
/// in the closed interval `[lo, hi]`.
pub fn simplest_in(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_in(&-hi, &-lo);
    }
    // 0 < lo <= hi: continued-fraction descent.
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if fl.clone() + Rational::one() <= *hi {
        return fl + Rational::one();
    }
    // Both in (fl, fl + 1).
    let rest = simplest_in(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + rest.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), rat(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(-3, 6)), "-1/2");
        assert_eq!(format_rational(&rat(5)), "5");
    }

    #[test]
    fn cross_multiplication_identity() {
        for (a, b, c, d) in [(1, 2, 1, 3), (-5, 7, 3, 14), (0, 1, 9, 4)] {
            let lhs = ratio(a, b) + ratio(c, d);
            let rhs = ratio(a * d + b * c, b * d);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_in(&ratio(1, 3), &ratio(1, 2)), ratio(1, 2));
        assert_eq!(simplest_in(&ratio(3, 10), &ratio(7, 20)), ratio(1, 3));
        assert_eq!(simplest_in(&ratio(-7, 20), &ratio(-3, 10)), ratio(-1, 3));
        assert_eq!(simplest_in(&ratio(-1, 2), &ratio(5, 2)), rat(0));
        assert_eq!(simplest_in(&ratio(5, 2), &ratio(5, 2)), ratio(5, 2));
    }

    #[test]
    fn primitive_vector() {
        let v = primitive_integer_vector(&[ratio(-1, 2), ratio(3, 4), rat(0)]);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }
}
