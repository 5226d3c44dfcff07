//! Exact rational scalars and vector helpers.
//!
//! Every scalar in the kernel is a [`Rational`]: an arbitrary-precision
//! fraction kept in canonical form (positive denominator, fully reduced,
//! zero is 0/1). The text form is `[-]numerator[/denominator]`, e.g.
//! `5/2`, `-1`, `47/48`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;
pub type QVector = Vec<Rational>;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the canonical token form: optional sign, integer, optionally
/// `/` followed by a positive integer denominator.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational token `{token}`"));
    let (num_s, den_s) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let rest = num_s.strip_prefix(['+', '-']).unwrap_or(num_s);
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let num: BigInt = num_s.parse().map_err(|_| bad())?;
    let den: BigInt = match den_s {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let den: BigInt = d.parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            den
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(num, den))
}

/// Canonical text form of a rational; inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Scales a vector by the unique positive rational that makes all entries
/// coprime integers. Preserves orientation; the zero vector is unchanged.
pub fn primitive_scale(v: &[Rational]) -> QVector {
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for n in &ints {
        gcd = gcd.gcd(n);
    }
    ints.into_iter()
        .map(|n| Rational::from_integer(n / &gcd))
        .collect()
}

/// Primitive scaling plus a sign flip making the first nonzero entry
/// positive. Only valid where a row and its negation are interchangeable
/// (equations, lineality spans).
pub fn sign_canonical(v: &[Rational]) -> QVector {
    let prim = primitive_scale(v);
    match prim.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => prim.iter().map(|x| -x).collect(),
        _ => prim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_canonical_tokens() {
        assert_eq!(parse_rational("5/2").unwrap(), ratio(5, 2));
        assert_eq!(parse_rational("-1").unwrap(), rat(-1));
        assert_eq!(parse_rational("47/48").unwrap(), ratio(47, 48));
        assert_eq!(parse_rational("+3").unwrap(), rat(3));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
    }

    #[test]
    fn parse_rejects_malformed() {
        for tok in ["", "/", "1/", "/2", "1/0", "1/-2", "a", "1.5", "1 /2", "--1"] {
            assert!(parse_rational(tok).is_err(), "accepted `{tok}`");
        }
    }

    #[test]
    fn format_round_trips() {
        for r in [ratio(5, 2), rat(-1), rat(0), ratio(-7, 3)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }

    #[test]
    fn arithmetic_keeps_canonical_form() {
        let a = ratio(1, 6) + ratio(1, 3); // 1/2
        assert_eq!(a.numer(), &BigInt::from(1));
        assert_eq!(a.denom(), &BigInt::from(2));
        let b = ratio(1, 2) - ratio(1, 2);
        assert!(b.is_zero());
        assert_eq!(b.denom(), &BigInt::from(1));
    }

    #[test]
    fn primitive_scale_preserves_sign() {
        let v = vec![ratio(-1, 2), rat(0), ratio(-3, 2)];
        assert_eq!(primitive_scale(&v), vec![rat(-1), rat(0), rat(-3)]);
        let w = sign_canonical(&v);
        assert_eq!(w, vec![rat(1), rat(0), rat(3)]);
    }
}
