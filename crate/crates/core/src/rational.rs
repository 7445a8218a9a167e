//! Small helpers around [`BigRational`] and binomial coefficients.

use num::bigint::{BigInt, BigUint};
use num::integer::binomial as int_binomial;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Q = BigRational;

pub fn int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn half() -> Q {
    frac(1, 2)
}

/// `p/q` rendering; integers print without a denominator.
pub fn fmt_q(q: &Q) -> String {
    q.to_string()
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Q::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Nonnegative integer test (`N_0` membership).
pub fn is_nonneg_integer(q: &Q) -> bool {
    q.is_integer() && !q.is_negative()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    int_binomial(BigUint::from(n), BigUint::from(k))
}

/// Dimension of the `i`-th symmetric power of a `dim`-dimensional space.
pub fn sym_power_dim(dim: u64, i: u64) -> BigUint {
    if i == 0 {
        BigUint::one()
    } else if dim == 0 {
        BigUint::zero()
    } else {
        binomial(dim + i - 1, i)
    }
}

/// Serializes any `Display` value (big integers in particular) as a JSON string.
pub fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn ser_display_seq<T: std::fmt::Display, S: serde::Serializer>(
    v: &[T],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}
