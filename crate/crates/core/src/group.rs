//! Torsion-free base groups with decidable equality: free groups and free
//! abelian groups of finite rank.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Free,
    Abelian,
}

/// A base group `G`. Both kinds are torsion-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BaseGroup {
    pub kind: GroupKind,
    pub rank: usize,
}

/// An element of a [`BaseGroup`].
///
/// Free-group elements are freely reduced letter sequences, letter `k > 0`
/// standing for the `k`-th generator and `-k` for its inverse. Abelian
/// elements are exponent vectors of length `rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Free(Vec<i32>),
    Abelian(Vec<i64>),
}

fn free_reduce(letters: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for x in letters {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Splits a reduced free word as `u c u⁻¹` with `c` cyclically reduced;
/// returns `(u, c)`.
pub(crate) fn free_cyclic_split(w: &[i32]) -> (Vec<i32>, Vec<i32>) {
    let mut i = 0;
    let n = w.len();
    while n >= 2 * (i + 1) && w[i] == -w[n - 1 - i] {
        i += 1;
    }
    (w[..i].to_vec(), w[i..n - i].to_vec())
}

fn is_rotation<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|r| (0..a.len()).all(|i| a[(i + r) % a.len()] == b[i]))
}

impl BaseGroup {
    pub fn free(rank: usize) -> Self {
        BaseGroup {
            kind: GroupKind::Free,
            rank,
        }
    }

    pub fn abelian(rank: usize) -> Self {
        BaseGroup {
            kind: GroupKind::Abelian,
            rank,
        }
    }

    pub fn identity(&self) -> Elem {
        match self.kind {
            GroupKind::Free => Elem::Free(Vec::new()),
            GroupKind::Abelian => Elem::Abelian(vec![0; self.rank]),
        }
    }

    pub fn generator(&self, i: usize) -> Elem {
        assert!(i < self.rank, "generator index out of range");
        match self.kind {
            GroupKind::Free => Elem::Free(vec![i as i32 + 1]),
            GroupKind::Abelian => {
                let mut v = vec![0; self.rank];
                v[i] = 1;
                Elem::Abelian(v)
            }
        }
    }

    pub fn generators(&self) -> Vec<Elem> {
        (0..self.rank).map(|i| self.generator(i)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank <= 1
    }

    pub fn is_identity(&self, e: &Elem) -> bool {
        match e {
            Elem::Free(w) => w.is_empty(),
            Elem::Abelian(v) => v.iter().all(|&x| x == 0),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Free(x), Elem::Free(y)) => {
                Elem::Free(free_reduce(x.iter().chain(y.iter()).copied()))
            }
            (Elem::Abelian(x), Elem::Abelian(y)) => {
                Elem::Abelian(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            _ => panic!("mixed element kinds"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Elem {
        match a {
            Elem::Free(x) => Elem::Free(x.iter().rev().map(|l| -l).collect()),
            Elem::Abelian(v) => Elem::Abelian(v.iter().map(|x| -x).collect()),
        }
    }

    pub fn pow(&self, a: &Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(a) } else { a.clone() };
        let mut out = self.identity();
        for _ in 0..k.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        out
    }

    /// Whether `a` and `b` are conjugate in `G`.
    pub fn conjugate(&self, a: &Elem, b: &Elem) -> bool {
        match (a, b) {
            (Elem::Free(x), Elem::Free(y)) => {
                is_rotation(&free_cyclic_split(x).1, &free_cyclic_split(y).1)
            }
            _ => a == b,
        }
    }

    /// `true` iff `g = h^k` for some integer `k`.
    pub fn cyclic_membership(&self, g: &Elem, h: &Elem) -> bool {
        if self.is_identity(g) {
            return true;
        }
        if self.is_identity(h) {
            return false;
        }
        match (g, h) {
            (Elem::Free(gw), Elem::Free(hw)) => {
                // |h^k| = 2|u| + |k||c| for h = u c u^-1, so |k| is bounded by |g|.
                let (_, core) = free_cyclic_split(hw);
                let bound = gw.len() / core.len().max(1) + 1;
                (1..=bound as i64).any(|k| {
                    let p = self.pow(h, k);
                    &p == g || self.inv(&p) == *g
                })
            }
            (Elem::Abelian(gv), Elem::Abelian(hv)) => {
                let mut ratio: Option<i64> = None;
                for (x, y) in gv.iter().zip(hv) {
                    if *y == 0 {
                        if *x != 0 {
                            return false;
                        }
                        continue;
                    }
                    if x % y != 0 || ratio.is_some_and(|k| k != x / y) {
                        return false;
                    }
                    ratio = Some(x / y);
                }
                true
            }
            _ => false,
        }
    }

    /// Parses an element literal: letters `a..z` (capitals are inverses) for
    /// free groups, a bracketed or comma-separated integer vector for abelian
    /// groups. `"1"` and `""` denote the identity in a free group.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        match self.kind {
            GroupKind::Free => {
                if s.is_empty() || s == "1" {
                    return Ok(self.identity());
                }
                let mut letters = Vec::new();
                for ch in s.chars() {
                    let (idx, sign) = if ch.is_ascii_lowercase() {
                        ((ch as u8 - b'a') as usize, 1)
                    } else if ch.is_ascii_uppercase() {
                        ((ch as u8 - b'A') as usize, -1)
                    } else {
                        return Err(Error::BadLiteral(s.to_string()));
                    };
                    if idx >= self.rank {
                        return Err(Error::BadLiteral(s.to_string()));
                    }
                    letters.push(sign * (idx as i32 + 1));
                }
                Ok(Elem::Free(free_reduce(letters)))
            }
            GroupKind::Abelian => {
                let inner = s.trim_start_matches('[').trim_end_matches(']');
                let v: Vec<i64> = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|x| x.trim().parse::<i64>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| Error::BadLiteral(s.to_string()))?
                };
                if v.len() != self.rank {
                    return Err(Error::BadLiteral(s.to_string()));
                }
                Ok(Elem::Abelian(v))
            }
        }
    }

    pub fn format(&self, e: &Elem) -> String {
        e.to_string()
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Free(w) if w.is_empty() => write!(f, "1"),
            Elem::Free(w) => {
                for &l in w {
                    let c = (b'a' + (l.unsigned_abs() - 1) as u8) as char;
                    if l > 0 {
                        write!(f, "{c}")?;
                    } else {
                        write!(f, "{}", c.to_ascii_uppercase())?;
                    }
                }
                Ok(())
            }
            Elem::Abelian(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_literals() {
        let g = BaseGroup::free(2);
        let e = g.parse("abBA").unwrap();
        assert!(g.is_identity(&e));
        assert_eq!(g.parse("aB").unwrap().to_string(), "aB");
        assert!(g.parse("c").is_err());
    }

    #[test]
    fn membership_examples() {
        let g = BaseGroup::free(2);
        let a = g.parse("a").unwrap();
        assert!(g.cyclic_membership(&g.parse("aaa").unwrap(), &a));
        assert!(!g.cyclic_membership(&g.parse("ab").unwrap(), &a));
        let ab = g.parse("ab").unwrap();
        assert!(g.cyclic_membership(&g.parse("BABA").unwrap(), &ab));
        assert!(!g.cyclic_membership(&a, &g.parse("aa").unwrap()));
        // conjugated power
        let h = g.parse("bab").unwrap();
        assert!(g.cyclic_membership(&g.pow(&h, -3), &h));
    }

    #[test]
    fn abelian_membership() {
        let g = BaseGroup::abelian(2);
        let h = g.parse("[2,-1]").unwrap();
        assert!(g.cyclic_membership(&g.parse("[-6,3]").unwrap(), &h));
        assert!(!g.cyclic_membership(&g.parse("[4,-1]").unwrap(), &h));
        assert!(!g.cyclic_membership(&g.parse("[1,0]").unwrap(), &h));
    }

    #[test]
    fn group_axioms_on_samples() {
        let g = BaseGroup::free(3);
        let xs: Vec<Elem> = ["a", "bC", "abcA", "CCb", "1"]
            .iter()
            .map(|s| g.parse(s).unwrap())
            .collect();
        for x in &xs {
            assert!(g.is_identity(&g.mul(x, &g.inv(x))));
            for y in &xs {
                for z in &xs {
                    assert_eq!(g.mul(&g.mul(x, y), z), g.mul(x, &g.mul(y, z)));
                }
            }
        }
    }
}
