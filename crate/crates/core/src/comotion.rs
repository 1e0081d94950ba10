//! Comotions: nondecreasing maps from face boundaries to the circle of time,
//! the functions `χ` and `ψ`, collision loci and the weight identity.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::{OrientedMap, Sign};
use crate::motion::{CollisionReport, EdgeLocus, Motion, VertexCollision};
use crate::rational::{modulo, q, serde_q, serde_q_pairs, IntervalSet, Q};

/// `χ(x, y)`: 0 when `x` comes no later than `y` after the reference point.
pub fn chi(x: Q, y: Q, period: Q, reference: Q) -> u32 {
    u32::from(modulo(&(x - reference), &period) > modulo(&(y - reference), &period))
}

/// `ψ(t_1, …, t_k) = χ(t_1, t_2) + … + χ(t_k, t_1)`.
pub fn psi(ts: &[Q], period: Q, reference: Q) -> u32 {
    let k = ts.len();
    if k <= 1 {
        return 0;
    }
    (0..k).map(|i| chi(ts[i], ts[(i + 1) % k], period, reference)).sum()
}

/// Number of half-open arcs `(t_i, t_{i+1}]` containing the reference point.
pub fn psi_arcs(ts: &[Q], period: Q, reference: Q) -> u32 {
    let k = ts.len();
    let mut n = 0;
    for i in 0..k {
        let a = modulo(&(ts[i] - reference), &period);
        let b = modulo(&(ts[(i + 1) % k] - reference), &period);
        let arc = modulo(&(b - a), &period);
        // the arc from a runs forward by `arc`; it contains 0 ≡ period when it wraps
        if !arc.is_zero() && a + arc >= period {
            n += 1;
        }
    }
    n
}

/// Degree of the nondecreasing circle map through the points in order.
pub fn psi_degree(ts: &[Q], period: Q) -> u32 {
    let k = ts.len();
    if k == 0 {
        return 0;
    }
    let mut total = Q::zero();
    for i in 0..k {
        total += modulo(&(ts[(i + 1) % k] - ts[i]), &period);
    }
    (total / period).to_integer() as u32
}

/// `ψ` of the corner values around a vertex, corrected for corners where the
/// cocar waits: `spans` are the lifted ranges `[start, end]` in anticlockwise
/// order, and each wait subtracts the number of laps it winds.
pub fn vertex_degree(spans: &[(Q, Q)], period: Q) -> i64 {
    let k = spans.len();
    let mut n = 0i64;
    for i in 0..k {
        let (a, b) = spans[i];
        n -= ((b / period).floor() - (a / period).floor()).to_integer() as i64;
        n += chi(a, spans[(i + 1) % k].1, period, Q::zero()) as i64;
    }
    n
}

/// `ψ` agrees across all references and with both independent forms.
pub fn psi_reference_invariance(ts: &[Q], period: Q, references: &[Q]) -> bool {
    let base = psi(ts, period, Q::zero());
    base == psi_degree(ts, period)
        && references
            .iter()
            .all(|r| psi(ts, period, *r) == base && psi_arcs(ts, period, *r) == base)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cocar {
    pub face: usize,
    /// `(boundary coordinate, lifted time)`; coordinates nondecreasing in
    /// `[0, L)`, repeated only at corners (a jump in time).
    #[serde(with = "serde_q_pairs")]
    pub breakpoints: Vec<(Q, Q)>,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comotion {
    #[serde(with = "serde_q")]
    pub period: Q,
    pub cocars: Vec<Cocar>,
}

impl Cocar {
    fn closure(&self, len: Q, period: Q) -> (Q, Q) {
        let (x, t) = self.breakpoints[0];
        (x + len, t + period * q(self.degree as i128))
    }

    /// Lifted time range at lifted coordinate `x` (a single value except at
    /// jumps).
    pub fn value_range(&self, x: Q, len: Q, period: Q) -> (Q, Q) {
        let x0 = self.breakpoints[0].0;
        let k = ((x - x0) / len).floor();
        let xx = x - k * len;
        let lap = period * q(self.degree as i128) * k;
        let mut pts = self.breakpoints.clone();
        pts.push(self.closure(len, period));
        let mut lo: Option<Q> = None;
        let mut hi: Option<Q> = None;
        for w in pts.windows(2) {
            let ((xa, ta), (xb, tb)) = (w[0], w[1]);
            if xa <= xx && xx <= xb {
                let v = if xa == xb {
                    ta
                } else {
                    ta + (xx - xa) * (tb - ta) / (xb - xa)
                };
                let v2 = if xa == xb { tb } else { v };
                lo = Some(lo.map_or(v, |l: Q| l.min(v)));
                hi = Some(hi.map_or(v2, |h: Q| h.max(v2)));
            }
        }
        (lo.unwrap() + lap, hi.unwrap() + lap)
    }

    /// Sorted breakpoint coordinates lifted into `[lo, hi]`.
    fn coords_in(&self, lo: Q, hi: Q, len: Q) -> Vec<Q> {
        let mut out = Vec::new();
        for &(x, _) in &self.breakpoints {
            out.extend(crate::motion::lifts_in(x, len, lo, hi));
        }
        out.sort();
        out.dedup();
        out
    }
}

impl Comotion {
    pub fn validate(&self, map: &OrientedMap) -> Result<()> {
        if self.period <= Q::zero() {
            return Err(Error::Schedule("period must be positive".into()));
        }
        for (i, c) in self.cocars.iter().enumerate() {
            if c.face >= map.num_faces() {
                return Err(Error::Schedule(format!("cocar {i} is on unknown face {}", c.face)));
            }
            let len = q(map.face_len(c.face) as i128);
            let bp = &c.breakpoints;
            if bp.is_empty() || bp[0].0 < Q::zero() || bp[bp.len() - 1].0 >= len {
                return Err(Error::Schedule(format!("cocar {i} has coordinates outside [0, L)")));
            }
            let mut pts = bp.clone();
            pts.push(c.closure(len, self.period));
            for w in pts.windows(2) {
                let ((xa, ta), (xb, tb)) = (w[0], w[1]);
                if xb < xa || tb < ta || (xa == xb && (ta == tb || !xa.is_integer())) {
                    return Err(Error::Schedule(format!("cocar {i} is not nondecreasing")));
                }
            }
        }
        let mut seen = vec![false; map.num_faces()];
        for c in &self.cocars {
            if std::mem::replace(&mut seen[c.face], true) {
                return Err(Error::Schedule(format!("face {} has two cocars", c.face)));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Schedule("every face needs a cocar".into()));
        }
        Ok(())
    }

    /// No cocar waits at a corner.
    pub fn is_continuous(&self) -> bool {
        self.cocars.iter().all(|c| c.breakpoints.windows(2).all(|w| w[0].0 != w[1].0))
    }

    pub fn cocar_of(&self, face: usize) -> &Cocar {
        self.cocars.iter().find(|c| c.face == face).expect("validated comotion")
    }

    /// Time (mod the period) at corner `c`; at a jump the start of the jump.
    pub fn corner_time(&self, map: &OrientedMap, c: usize) -> Q {
        let f = map.face_of(c);
        let len = q(map.face_len(f) as i128);
        let x = q(map.index_in_face(c) as i128 + 1);
        modulo(&self.cocar_of(f).value_range(x, len, self.period).0, &self.period)
    }

    /// Lifted time range `[start, end]` at corner `c`.
    pub fn corner_span(&self, map: &OrientedMap, c: usize) -> (Q, Q) {
        let f = map.face_of(c);
        let len = q(map.face_len(f) as i128);
        let x = q(map.index_in_face(c) as i128 + 1);
        self.cocar_of(f).value_range(x, len, self.period)
    }

    fn corner_set(&self, map: &OrientedMap, c: usize) -> IntervalSet {
        let f = map.face_of(c);
        let len = q(map.face_len(f) as i128);
        let x = q(map.index_in_face(c) as i128 + 1);
        let (lo, hi) = self.cocar_of(f).value_range(x, len, self.period);
        let t = self.period;
        if hi - lo >= t {
            return IntervalSet::new(vec![(Q::zero(), t)]);
        }
        let a = modulo(&lo, &t);
        let b = a + (hi - lo);
        if b <= t {
            IntervalSet::new(vec![(a, b)])
        } else {
            IntervalSet::new(vec![(a, t), (Q::zero(), b - t)])
        }
    }

    pub fn collisions(&self, map: &OrientedMap) -> CollisionReport {
        let t = self.period;
        let mut vertices = Vec::new();
        for v in 0..map.num_vertices() {
            let mut set: Option<IntervalSet> = None;
            for &c in map.vertex_corner_cycle(v) {
                let occ = self.corner_set(map, c);
                set = Some(match set {
                    None => occ,
                    Some(s) => s.intersect(&occ),
                });
            }
            let set = set.unwrap_or_default();
            if !set.is_empty() {
                let mut parts: Vec<(Q, Q)> = set.parts().to_vec();
                if parts.len() > 1 && parts[parts.len() - 1] == (t, t) {
                    parts.pop();
                }
                vertices.push(VertexCollision { vertex: v, times: parts });
            }
        }
        let mut edges = Vec::new();
        for &e in map.edges() {
            edges.extend(self.edge_loci(map, e));
        }
        CollisionReport::new(t, vertices, edges)
    }

    /// Collision loci inside edge `e`, in the coordinate `μ` along the arrow.
    pub fn edge_loci(&self, map: &OrientedMap, e: u32) -> Vec<EdgeLocus> {
        let t = self.period;
        let d1 = map.dart_of_edge(e, Sign::Plus).unwrap();
        let d2 = map.twin(d1);
        let (f1, f2) = (map.face_of(d1), map.face_of(d2));
        let (c1, c2) = (self.cocar_of(f1), self.cocar_of(f2));
        let (l1, l2) = (q(map.face_len(f1) as i128), q(map.face_len(f2) as i128));
        let i1 = q(map.index_in_face(d1) as i128);
        let i2 = q(map.index_in_face(d2) as i128);
        // D(μ) = A1(i1 + μ) − A2(i2 + 1 − μ), nondecreasing in μ
        let mut mus: Vec<Q> = vec![Q::zero(), Q::one()];
        mus.extend(c1.coords_in(i1, i1 + Q::one(), l1).into_iter().map(|x| x - i1));
        mus.extend(c2.coords_in(i2, i2 + Q::one(), l2).into_iter().map(|x| i2 + Q::one() - x));
        mus.retain(|m| *m >= Q::zero() && *m <= Q::one());
        mus.sort();
        mus.dedup();
        let a1 = |m: Q| c1.value_range(i1 + m, l1, t);
        let a2 = |m: Q| c2.value_range(i2 + Q::one() - m, l2, t);
        // one-sided values: right limit at the start, left limit at the end of each segment
        let right = |m: Q| a1(m).1 - a2(m).0;
        let left = |m: Q| a1(m).0 - a2(m).1;
        let mut hits: Vec<(Q, Q)> = Vec::new();
        for w in mus.windows(2) {
            let (ma, mb) = (w[0], w[1]);
            let (da, db) = (right(ma), left(mb));
            let k0 = (da / t).ceil().to_integer();
            let k1 = (db / t).floor().to_integer();
            for k in k0..=k1 {
                let level = t * q(k);
                if da == db {
                    hits.push((ma, mb));
                } else {
                    let m = ma + (level - da) * (mb - ma) / (db - da);
                    hits.push((m, m));
                }
            }
        }
        IntervalSet::new(hits)
            .parts()
            .iter()
            .filter(|(a, b)| !(a == b && (a.is_zero() || a.is_one())))
            .map(|&(a, b)| {
                let probe = (a + b) / q(2);
                EdgeLocus {
                    edge: e,
                    from: a,
                    to: b,
                    times: vec![modulo(&a1(probe).0, &t)],
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub faces: Vec<i64>,
    pub edges: Vec<(u32, i64)>,
    pub vertices: Vec<i64>,
    pub total: i64,
}

/// Face, edge and vertex weights; the total equals `V − E + F`.
pub fn weights(map: &OrientedMap, a: &Comotion) -> WeightReport {
    let faces: Vec<i64> = (0..map.num_faces()).map(|f| 1 - a.cocar_of(f).degree as i64).collect();
    let edges: Vec<(u32, i64)> = map
        .edges()
        .iter()
        .map(|&e| {
            let loci = a.edge_loci(map, e);
            let r = loci.len() as i64;
            let touch0 = loci.iter().any(|l| l.from.is_zero()) as i64;
            let touch1 = loci.iter().any(|l| l.to.is_one()) as i64;
            (e, -1 + (r + 1 - touch0 - touch1))
        })
        .collect();
    let vertices: Vec<i64> = (0..map.num_vertices())
        .map(|v| {
            let cyc: Vec<usize> = map.vertex_corner_cycle(v).to_vec();
            let spans: Vec<(Q, Q)> = cyc.iter().map(|&c| a.corner_span(map, c)).collect();
            1 - vertex_degree(&spans, a.period)
        })
        .collect();
    let total = faces.iter().sum::<i64>() + edges.iter().map(|e| e.1).sum::<i64>() + vertices.iter().sum::<i64>();
    WeightReport { faces, edges, vertices, total }
}

/// Sum of the generic face, edge and vertex weights built from arbitrary
/// corner-pair functions `g` (consecutive corners of a face) and `h`
/// (consecutive corners at a vertex).
pub fn lemma14_total(map: &OrientedMap, g: impl Fn(usize, usize) -> Q, h: impl Fn(usize, usize) -> Q) -> Q {
    let mut total = Q::zero();
    for f in 0..map.num_faces() {
        let mut s = Q::one();
        for d in map.face_darts(f) {
            s -= g(map.prev(d), d);
        }
        total += s;
    }
    for &e in map.edges() {
        let d = map.dart_of_edge(e, Sign::Plus).unwrap();
        let d2 = map.twin(d);
        total += -Q::one() + g(map.prev(d), d) + h(d, map.prev(d2)) + g(map.prev(d2), d2) + h(d2, map.prev(d));
    }
    for v in 0..map.num_vertices() {
        let cyc = map.vertex_corner_cycle(v);
        let mut s = Q::one();
        for i in 0..cyc.len() {
            s -= h(cyc[i], cyc[(i + 1) % cyc.len()]);
        }
        total += s;
    }
    total
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

/// `loci + Σ (1 − deg α_i) ≥ e(S)` for a continuous comotion.
pub fn lemma11_check(map: &OrientedMap, a: &Comotion) -> Result<InequalityReport> {
    a.validate(map)?;
    if !a.is_continuous() {
        return Err(Error::Precondition("cocars must be continuous".into()));
    }
    let loci = a.collisions(map).loci as i64;
    let lhs = loci + a.cocars.iter().map(|c| 1 - c.degree as i64).sum::<i64>();
    let rhs = map.census().euler_characteristic;
    Ok(InequalityReport { lhs, rhs, holds: lhs >= rhs })
}

/// The comotion `β_i(x) = t mod T` where some car of face `i` is at `x` at
/// time `t`. Needs a regular multiple motion whose cars make one lap per
/// own period.
pub fn induce_comotion(map: &OrientedMap, motion: &Motion) -> Result<Comotion> {
    motion.validate(map)?;
    if !motion.is_regular(map) {
        return Err(Error::Precondition("motion is not regular".into()));
    }
    let mut cocars = Vec::new();
    for f in 0..map.num_faces() {
        let cars = motion.cars_on(f);
        let Some(&j) = cars.first() else {
            return Err(Error::Precondition(format!("face {f} has no car")));
        };
        if cars.iter().any(|&c| motion.cars[c].degree != 1) {
            return Err(Error::Precondition(format!("cars of face {f} must make one lap per own period")));
        }
        let len = q(map.face_len(f) as i128);
        let own = motion.car_period(j);
        let mut pts: Vec<(Q, Q)> = motion.cars[j]
            .breakpoints
            .iter()
            .map(|&(t, x)| {
                let k = (x / len).floor();
                (x - k * len, t - own * k)
            })
            .collect();
        pts.sort();
        cocars.push(Cocar { face: f, breakpoints: pts, degree: cars.len() as u32 });
    }
    let a = Comotion { period: motion.period, cocars };
    a.validate(map)?;
    Ok(a)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub multiplicities: Vec<usize>,
    pub bound: i64,
    pub observed: usize,
    pub holds: bool,
}

/// `loci ≥ e(S) + Σ (d_i − 1)` for a multiple motion.
pub fn lemma16_bound(map: &OrientedMap, motion: &Motion) -> Result<BoundReport> {
    let d = crate::motion::multiplicities(map, motion)?;
    let bound = map.census().euler_characteristic + d.iter().map(|&x| x as i64 - 1).sum::<i64>();
    let observed = motion.complete_collisions(map).loci;
    Ok(BoundReport { multiplicities: d, bound, observed, holds: observed as i64 >= bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn psi_examples() {
        let t = q(5);
        assert_eq!(psi(&[q(1)], t, q(0)), 0);
        assert_eq!(psi(&[q(2), q(2), q(2)], t, q(0)), 0);
        let ts = [q(1), qf(7, 2), q(1), qf(7, 2)];
        assert_eq!(psi(&ts, t, q(0)), 2);
        let refs: Vec<Q> = (0..20).map(|i| qf(i, 4)).collect();
        assert!(psi_reference_invariance(&ts, t, &refs));
    }

    #[test]
    fn chi_antisymmetry() {
        let t = q(3);
        assert_eq!(chi(q(1), q(2), t, q(0)) + chi(q(2), q(1), t, q(0)), 1);
        assert_eq!(chi(q(1), q(1), t, q(0)), 0);
    }
}
