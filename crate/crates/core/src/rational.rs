//! Exact rationals and their `"p/q"` text form.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational used for every time and position in the crate.
pub type Q = Ratio<i128>;

pub fn q(n: i128) -> Q {
    Q::from_integer(n)
}

pub fn qf(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

/// Formats as `"p/q"`, or `"p"` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.trim().parse().map_err(|_| bad())?;
            let d: i128 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(q(s.parse().map_err(|_| bad())?)),
    }
}

/// Least common multiple of two positive rationals: the smallest positive
/// rational that is an integer multiple of both.
pub fn lcm_q(a: &Q, b: &Q) -> Q {
    let num = a.numer().lcm(b.numer());
    let den = a.denom().gcd(b.denom());
    Q::new(num, den)
}

/// Reduces `x` into `[0, period)`.
pub fn modulo(x: &Q, period: &Q) -> Q {
    let k = (x / period).floor();
    x - k * period
}

pub fn is_positive(x: &Q) -> bool {
    !x.is_zero() && x.is_positive()
}

pub mod serde_q {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_q_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(fmt_q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_q(s).map_err(serde::de::Error::custom)).collect()
    }
}

pub mod serde_q_pairs {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[(Q, Q)], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(|(a, b)| [fmt_q(a), fmt_q(b)]))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<(Q, Q)>, D::Error> {
        let v = Vec::<[String; 2]>::deserialize(d)?;
        v.iter()
            .map(|[a, b]| Ok((parse_q(a).map_err(serde::de::Error::custom)?, parse_q(b).map_err(serde::de::Error::custom)?)))
            .collect()
    }
}

/// Sorted, disjoint closed intervals of rationals; points are `[a, a]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntervalSet(Vec<(Q, Q)>);

impl IntervalSet {
    pub fn new(mut parts: Vec<(Q, Q)>) -> Self {
        parts.sort();
        let mut out: Vec<(Q, Q)> = Vec::new();
        for (a, b) in parts {
            match out.last_mut() {
                Some(last) if a <= last.1 => {
                    if b > last.1 {
                        last.1 = b;
                    }
                }
                _ => out.push((a, b)),
            }
        }
        IntervalSet(out)
    }

    pub fn parts(&self) -> &[(Q, Q)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a0, a1) = self.0[i];
            let (b0, b1) = other.0[j];
            let lo = a0.max(b0);
            let hi = a1.min(b1);
            if lo <= hi {
                out.push((lo, hi));
            }
            if a1 < b1 {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet(out)
    }

    pub fn contains(&self, x: &Q) -> bool {
        self.0.iter().any(|(a, b)| a <= x && x <= b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_round_trips() {
        for s in ["3/2", "-7/4", "5", "0"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn interval_sets() {
        let a = IntervalSet::new(vec![(q(0), q(2)), (q(1), q(3)), (q(5), q(5))]);
        assert_eq!(a.parts(), &[(q(0), q(3)), (q(5), q(5))]);
        let b = IntervalSet::new(vec![(q(3), q(5))]);
        assert_eq!(a.intersect(&b).parts(), &[(q(3), q(3)), (q(5), q(5))]);
    }

    #[test]
    fn rational_lcm() {
        assert_eq!(lcm_q(&q(3), &q(6)), q(6));
        assert_eq!(lcm_q(&qf(3, 2), &q(2)), q(6));
        assert_eq!(lcm_q(&qf(1, 2), &qf(1, 3)), q(1));
        assert_eq!(modulo(&qf(-1, 2), &q(3)), qf(5, 2));
    }
}
