//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Formats as `p/q` with `q > 0` and `gcd(p, q) = 1`; integers keep the `/1`.
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_pq(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let q: BigInt = q
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

pub fn pow(r: &Rational, k: usize) -> Rational {
    let mut out = Rational::one();
    for _ in 0..k {
        out *= r;
    }
    out
}

/// Compact human form: integers without `/1`.
pub fn display(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn integers_keep_unit_denominator() {
        assert_eq!(to_pq(&int(2002)), "2002/1");
        assert_eq!(to_pq(&ratio(4, -8)), "-1/2");
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(parse_pq("3/0").is_err());
        assert!(parse_pq("x/2").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_usize(14, 5), 2002);
        assert_eq!(binomial_usize(3, 5), 0);
        assert_eq!(binomial(21, 5), BigInt::from(20349));
    }

    proptest! {
        #[test]
        fn pq_round_trip(p in -1_000_000i64..1_000_000, q in 1i64..1_000_000) {
            let r = ratio(p, q);
            let s = to_pq(&r);
            prop_assert_eq!(parse_pq(&s).unwrap(), r.clone());
            let (_, den) = s.split_once('/').unwrap();
            prop_assert!(!den.starts_with('-'));
        }
    }
}
