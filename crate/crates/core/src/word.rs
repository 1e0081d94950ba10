//! Normal forms in free products `G^(0) * … * G^(s) * F(t_1, t_2, …)`.
//!
//! A word is an alternating sequence of syllables: a nonidentity element of
//! some copy `G^(i)` of the base group, or a nonzero power of a generator
//! `t_j`. Adjacent syllables never share a factor.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{BaseGroup, Elem};

/// The main stable letter `t`.
pub const T: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Copy(u32),
    T(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Syllable {
    G { copy: u32, elem: Elem },
    T { gen: u32, exp: i64 },
}

impl Syllable {
    pub fn factor(&self) -> Factor {
        match self {
            Syllable::G { copy, .. } => Factor::Copy(*copy),
            Syllable::T { gen, .. } => Factor::T(*gen),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeProductWord {
    base: BaseGroup,
    syllables: Vec<Syllable>,
}

impl FreeProductWord {
    pub fn identity(base: BaseGroup) -> Self {
        FreeProductWord {
            base,
            syllables: Vec::new(),
        }
    }

    /// Builds the normal form of the product of the given syllables.
    pub fn from_syllables(base: BaseGroup, syllables: impl IntoIterator<Item = Syllable>) -> Self {
        let mut w = Self::identity(base);
        for s in syllables {
            w.push(s);
        }
        w
    }

    pub fn g(base: BaseGroup, copy: u32, elem: Elem) -> Self {
        Self::from_syllables(base, [Syllable::G { copy, elem }])
    }

    pub fn t_pow(base: BaseGroup, gen: u32, exp: i64) -> Self {
        Self::from_syllables(base, [Syllable::T { gen, exp }])
    }

    pub fn base(&self) -> BaseGroup {
        self.base
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    fn is_trivial_syllable(&self, s: &Syllable) -> bool {
        match s {
            Syllable::G { elem, .. } => self.base.is_identity(elem),
            Syllable::T { exp, .. } => *exp == 0,
        }
    }

    fn merge(&self, a: &Syllable, b: &Syllable) -> Syllable {
        match (a, b) {
            (Syllable::G { copy, elem: x }, Syllable::G { elem: y, .. }) => Syllable::G {
                copy: *copy,
                elem: self.base.mul(x, y),
            },
            (Syllable::T { gen, exp: x }, Syllable::T { exp: y, .. }) => Syllable::T {
                gen: *gen,
                exp: x + y,
            },
            _ => unreachable!("merging syllables of different factors"),
        }
    }

    /// Right-multiplies by one syllable, keeping normal form.
    pub fn push(&mut self, s: Syllable) {
        if self.is_trivial_syllable(&s) {
            return;
        }
        match self.syllables.last() {
            Some(last) if last.factor() == s.factor() => {
                let m = self.merge(last, &s);
                self.syllables.pop();
                if !self.is_trivial_syllable(&m) {
                    self.syllables.push(m);
                }
            }
            _ => self.syllables.push(s),
        }
    }

    fn check_base(&self, other: &Self) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(s.clone());
        }
        Ok(out)
    }

    /// Product; panics on mismatched base groups (use [`Self::try_mul`] to
    /// get an error instead).
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("mismatched base groups")
    }

    pub fn inv_syllable(&self, s: &Syllable) -> Syllable {
        match s {
            Syllable::G { copy, elem } => Syllable::G {
                copy: *copy,
                elem: self.base.inv(elem),
            },
            Syllable::T { gen, exp } => Syllable::T {
                gen: *gen,
                exp: -exp,
            },
        }
    }

    pub fn inv(&self) -> Self {
        FreeProductWord {
            base: self.base,
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| self.inv_syllable(s))
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let b = if k < 0 { self.inv() } else { self.clone() };
        let mut out = Self::identity(self.base);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&b);
        }
        out
    }

    /// `y⁻¹ x y`.
    pub fn conj_by(&self, y: &Self) -> Self {
        y.inv().mul(self).mul(y)
    }

    /// Writes `self = u c u⁻¹` with `c` cyclically reduced; returns `(u, c)`.
    pub fn cyclic_split(&self) -> (Self, Self) {
        let mut u = Self::identity(self.base);
        let mut cur: Vec<Syllable> = self.syllables.clone();
        loop {
            let n = cur.len();
            if n < 2 || cur[0].factor() != cur[n - 1].factor() {
                break;
            }
            let first = cur[0].clone();
            let last = cur[n - 1].clone();
            let merged = self.merge(&last, &first);
            u.push(first);
            let mut inner: Vec<Syllable> = cur[1..n - 1].to_vec();
            if self.is_trivial_syllable(&merged) {
                cur = inner;
            } else {
                inner.push(merged);
                cur = inner;
                break;
            }
        }
        (
            u,
            FreeProductWord {
                base: self.base,
                syllables: cur,
            },
        )
    }

    /// A cyclically reduced conjugate; idempotent.
    pub fn cyclic_reduce(&self) -> Self {
        self.cyclic_split().1
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        let n = self.syllables.len();
        n < 2 || self.syllables[0].factor() != self.syllables[n - 1].factor()
    }

    /// Signed count of `t_gen` letters.
    pub fn exponent_sum(&self, gen: u32) -> i64 {
        self.syllables
            .iter()
            .map(|s| match s {
                Syllable::T { gen: g, exp } if *g == gen => *exp,
                _ => 0,
            })
            .sum()
    }

    /// Like [`Self::exponent_sum`], but rejects generators absent from the
    /// word's factor universe (`known` lists the declared generators).
    pub fn exponent_sum_checked(&self, gen: u32, known: &[u32]) -> Result<i64> {
        if !known.contains(&gen) {
            return Err(Error::UnknownGenerator(gen));
        }
        Ok(self.exponent_sum(gen))
    }

    pub fn t_generators(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self
            .syllables
            .iter()
            .filter_map(|s| match s {
                Syllable::T { gen, .. } => Some(*gen),
                _ => None,
            })
            .collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn t_syllable_count(&self) -> usize {
        self.syllables
            .iter()
            .filter(|s| matches!(s, Syllable::T { .. }))
            .count()
    }

    pub fn has_t(&self) -> bool {
        self.t_syllable_count() > 0
    }

    /// Copy indices used by the `G` syllables.
    pub fn copies(&self) -> impl Iterator<Item = u32> + '_ {
        self.syllables.iter().filter_map(|s| match s {
            Syllable::G { copy, .. } => Some(*copy),
            _ => None,
        })
    }

    /// True when the word is a nonempty element of `G^(lo) * … * G^(hi)`.
    pub fn in_copies(&self, lo: u32, hi: u32) -> bool {
        !self.is_identity()
            && !self.has_t()
            && self.copies().all(|c| lo <= c && c <= hi)
    }

    /// Applies `G^(i) -> G^(i + delta)` to every copy syllable.
    pub fn shift_copies(&self, delta: i64) -> Self {
        FreeProductWord {
            base: self.base,
            syllables: self
                .syllables
                .iter()
                .map(|s| match s {
                    Syllable::G { copy, elem } => Syllable::G {
                        copy: (*copy as i64 + delta) as u32,
                        elem: elem.clone(),
                    },
                    t => t.clone(),
                })
                .collect(),
        }
    }

    /// Substitutes `g^(i) ↦ t^{-i} g t^{i}` (with `t = t_1`), landing in
    /// `G * ⟨t⟩`.
    pub fn collapse_copies(&self) -> Self {
        let mut out = Self::identity(self.base);
        for s in &self.syllables {
            match s {
                Syllable::G { copy, elem } => {
                    let i = *copy as i64;
                    out.push(Syllable::T { gen: T, exp: -i });
                    out.push(Syllable::G {
                        copy: 0,
                        elem: elem.clone(),
                    });
                    out.push(Syllable::T { gen: T, exp: i });
                }
                t => out.push(t.clone()),
            }
        }
        out
    }

    /// Conjugacy in the free product.
    pub fn is_conjugate(&self, other: &Self) -> bool {
        if self.base != other.base {
            return false;
        }
        let a = self.cyclic_reduce();
        let b = other.cyclic_reduce();
        if a.len() != b.len() {
            return false;
        }
        match a.len() {
            0 => true,
            1 => match (&a.syllables[0], &b.syllables[0]) {
                (Syllable::G { copy: c1, elem: x }, Syllable::G { copy: c2, elem: y }) => {
                    c1 == c2 && self.base.conjugate(x, y)
                }
                (s, r) => s == r,
            },
            n => (0..n).any(|r| (0..n).all(|i| a.syllables[(i + r) % n] == b.syllables[i])),
        }
    }

    /// True iff `self` is a cyclic rotation of `other` at syllable level.
    pub fn is_rotation_of(&self, other: &Self) -> bool {
        let n = self.len();
        n == other.len()
            && (n == 0
                || (0..n).any(|r| (0..n).all(|i| self.syllables[(i + r) % n] == other.syllables[i])))
    }

    /// `true` iff `self = h^k` for some integer `k`.
    pub fn cyclic_membership(&self, h: &Self) -> bool {
        if self.is_identity() {
            return true;
        }
        let (u, c) = h.cyclic_split();
        match c.len() {
            0 => false,
            1 => {
                let x = self.conj_by(&u);
                if x.len() != 1 {
                    return false;
                }
                match (&x.syllables[0], &c.syllables[0]) {
                    (Syllable::G { copy: c1, elem: g }, Syllable::G { copy: c2, elem: hh }) => {
                        c1 == c2 && self.base.cyclic_membership(g, hh)
                    }
                    (Syllable::T { gen: g1, exp: e1 }, Syllable::T { gen: g2, exp: e2 }) => {
                        g1 == g2 && e1 % e2 == 0
                    }
                    _ => false,
                }
            }
            _ => {
                let bound = (self.len() + h.len()) as i64 + 1;
                let mut p = Self::identity(self.base);
                let mut q = Self::identity(self.base);
                let hi = h.inv();
                for _ in 0..bound {
                    p = p.mul(h);
                    q = q.mul(&hi);
                    if &p == self || &q == self {
                        return true;
                    }
                }
                false
            }
        }
    }

    /// The sequence of unit `t` signs, reading `t^k` as `|k|` letters.
    pub fn epsilon_sequence(&self, gen: u32) -> Vec<i8> {
        let mut eps = Vec::new();
        for s in &self.syllables {
            if let Syllable::T { gen: g, exp } = s {
                if *g == gen {
                    let sign = if *exp > 0 { 1 } else { -1 };
                    eps.extend(std::iter::repeat_n(sign, exp.unsigned_abs() as usize));
                }
            }
        }
        eps
    }
}

impl fmt::Display for FreeProductWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|s| match s {
                Syllable::G { copy: 0, elem } => format!("{elem}"),
                Syllable::G { copy, elem } => format!("{elem}@{copy}"),
                Syllable::T { gen, exp } => {
                    let name = if *gen == T {
                        "t".to_string()
                    } else {
                        format!("t{gen}")
                    };
                    if *exp == 1 {
                        name
                    } else {
                        format!("{name}^{exp}")
                    }
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Small builder used by tests, examples and fixtures: `"a t B t^-1 ab@1"`.
///
/// Tokens are element literals (optionally suffixed with `@copy`) or `t`,
/// `t^k`, `t2^k`.
pub fn parse_word(base: BaseGroup, text: &str) -> Result<FreeProductWord> {
    let mut w = FreeProductWord::identity(base);
    for tok in text.split_whitespace() {
        if let Some(rest) = tok.strip_prefix('t') {
            if rest.is_empty() || rest.starts_with('^') || rest.chars().next().unwrap().is_ascii_digit() {
                let (gen_part, exp_part) = match rest.split_once('^') {
                    Some((g, e)) => (g, e),
                    None => (rest, "1"),
                };
                let gen = if gen_part.is_empty() {
                    T
                } else {
                    gen_part.parse().map_err(|_| Error::BadLiteral(tok.into()))?
                };
                let exp: i64 = exp_part.parse().map_err(|_| Error::BadLiteral(tok.into()))?;
                w.push(Syllable::T { gen, exp });
                continue;
            }
        }
        let (lit, copy) = match tok.split_once('@') {
            Some((l, c)) => (l, c.parse().map_err(|_| Error::BadLiteral(tok.into()))?),
            None => (tok, 0),
        };
        w.push(Syllable::G {
            copy,
            elem: base.parse(lit)?,
        });
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> BaseGroup {
        BaseGroup::free(3)
    }

    fn w(s: &str) -> FreeProductWord {
        parse_word(f2(), s).unwrap()
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(w("a t").mul(&w("t^-1 b")), w("ab"));
        assert_eq!(w("a t b").mul(&FreeProductWord::identity(f2())), w("a t b"));
        assert_eq!(w("t a").mul(&w("A t")), w("t^2"));
        let z = FreeProductWord::identity(BaseGroup::free(1));
        assert_eq!(w("a").try_mul(&z), Err(Error::BaseMismatch));
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(w("A t a").cyclic_reduce(), w("t"));
        assert_eq!(w("t a t^-1").cyclic_reduce(), w("a"));
        let x = w("a t b t^-1 c t");
        assert_eq!(x.cyclic_reduce(), x);
    }

    #[test]
    fn split_reassembles() {
        for s in ["a t b A", "t a b t^-1", "a b@1 t c a@1 A", "t", "a t^2 b t^-1 A"] {
            let x = w(s);
            let (u, c) = x.cyclic_split();
            assert_eq!(u.mul(&c).mul(&u.inv()), x, "{s}");
            assert!(c.is_cyclically_reduced());
        }
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w("a t b t^-1 c t").exponent_sum(T), 1);
        assert_eq!(w("t^3").exponent_sum(T), 3);
        assert_eq!(w("a").exponent_sum(T), 0);
        assert_eq!(
            w("a").exponent_sum_checked(7, &[T]),
            Err(Error::UnknownGenerator(7))
        );
    }

    #[test]
    fn membership_in_free_product() {
        let h = w("a t");
        assert!(h.pow(-3).cyclic_membership(&h));
        assert!(!w("a t a").cyclic_membership(&h));
        let k = w("b a@1 B");
        assert!(k.pow(4).cyclic_membership(&k));
        assert!(!w("b aa B").cyclic_membership(&k));
    }
}
