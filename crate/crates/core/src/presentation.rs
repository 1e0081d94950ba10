//! Relative presentations `⟨H, t_1, … | w_1, w_2, …⟩` over
//! `H = G^(0) * … * G^(s)`, optionally carrying the shift isomorphism
//! `φ: G^(i) → G^(i+1)` between `P = G^(0) * … * G^(s-1)` and
//! `P^φ = G^(1) * … * G^(s)`.

use crate::group::BaseGroup;
use crate::word::{FreeProductWord, Syllable, T};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativePresentation {
    pub base: BaseGroup,
    /// Highest copy index of `H`.
    pub s: u32,
    pub generators: Vec<u32>,
    pub relators: Vec<FreeProductWord>,
    /// When true the family `{p^t = p^φ : p ∈ P \ {1}}` is part of the
    /// presentation (only meaningful for `s ≥ 1`).
    pub phi: bool,
}

impl RelativePresentation {
    /// `p ∈ P`: every syllable lies in copies `0..s`.
    pub fn in_p(&self, p: &FreeProductWord) -> bool {
        self.s >= 1 && p.in_copies(0, self.s - 1)
    }

    pub fn in_p_phi(&self, p: &FreeProductWord) -> bool {
        self.s >= 1 && p.in_copies(1, self.s)
    }

    pub fn phi(&self, p: &FreeProductWord) -> FreeProductWord {
        p.shift_copies(1)
    }

    /// Whether `label` is (a cyclic permutation of) a φ-relator
    /// `t⁻¹ p t (p^φ)⁻¹` with `p ∈ P \ {1}`; returns `p` when it is.
    pub fn phi_cell(&self, label: &FreeProductWord) -> Option<FreeProductWord> {
        if !self.phi {
            return None;
        }
        phi_cell_of(label, self.s)
    }

    /// Interior-face check: `label` is a cyclic permutation of some
    /// `w_i^{±1}` or a φ-relator.
    pub fn accepts_face_label(&self, label: &FreeProductWord) -> bool {
        if self.phi_cell(label).is_some() {
            return true;
        }
        self.relators
            .iter()
            .any(|r| label.is_conjugate(r) || label.is_conjugate(&r.inv()))
    }
}

/// [`RelativePresentation::phi_cell`] for `P = G^(0) * … * G^(s-1)`.
pub fn phi_cell_of(label: &FreeProductWord, s: u32) -> Option<FreeProductWord> {
    if s == 0 {
        return None;
    }
    let c = label.cyclic_reduce();
    let syl = c.syllables();
    let ts: Vec<usize> = (0..syl.len()).filter(|&i| matches!(syl[i], Syllable::T { .. })).collect();
    if ts.len() != 2 {
        return None;
    }
    let n = syl.len();
    for &start in &ts {
        if syl[start] != (Syllable::T { gen: T, exp: -1 }) {
            continue;
        }
        let rot: Vec<Syllable> = (0..n).map(|i| syl[(start + i) % n].clone()).collect();
        let mid = rot.iter().position(|x| *x == Syllable::T { gen: T, exp: 1 })?;
        let p = FreeProductWord::from_syllables(c.base(), rot[1..mid].iter().cloned());
        let q = FreeProductWord::from_syllables(c.base(), rot[mid + 1..].iter().cloned());
        if !p.is_identity() && p.in_copies(0, s - 1) && q == p.shift_copies(1).inv() {
            return Some(p);
        }
    }
    None
}
