//! Exact rational scalars and their `"p/q"` wire format.
//!
//! Every inequality in this crate is evaluated over [`Rat`], an
//! arbitrary-precision rational kept in lowest terms. Reports never render a
//! rational as a decimal; the wire format is the reduced fraction `p/q`
//! (just `p` when the denominator is one).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number, always reduced.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced fraction `n/d`. Panics on a zero denominator.
pub fn frac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Decimal-free rendering: `p` for integers, `p/q` otherwise.
pub fn to_pq(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the `to_pq` format back. Accepts `p` and `p/q`.
pub fn parse_pq(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Serde adapter serializing a [`Rat`] as a `"p/q"` string.
pub mod pq_string {
    use super::{parse_pq, to_pq, Rat};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_pq(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let raw = String::deserialize(d)?;
        parse_pq(&raw).ok_or_else(|| de::Error::custom(format!("invalid rational `{raw}`")))
    }
}

/// Serde adapter for symbol tables `name -> Rat` with `"p/q"` values.
pub mod pq_map {
    use super::{parse_pq, to_pq, Rat};
    use serde::{de, Deserialize, Deserializer, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(m: &BTreeMap<String, Rat>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k, to_pq(v))))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<String, Rat>, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                parse_pq(&v)
                    .map(|r| (k, r))
                    .ok_or_else(|| de::Error::custom(format!("invalid rational `{v}`")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_round_trip() {
        for (n, d) in [(0, 1), (582, 7), (-4, 7), (36, 1), (-1, 2)] {
            let x = frac(n, d);
            assert_eq!(parse_pq(&to_pq(&x)).unwrap(), x);
        }
    }

    #[test]
    fn pq_rejects_zero_denominator() {
        assert!(parse_pq("1/0").is_none());
        assert!(parse_pq("x").is_none());
    }

    #[test]
    fn integers_render_without_slash() {
        assert_eq!(to_pq(&rat(-34)), "-34");
        assert_eq!(to_pq(&frac(6, 3)), "2");
        assert_eq!(to_pq(&frac(583, 7)), "583/7");
    }
}
