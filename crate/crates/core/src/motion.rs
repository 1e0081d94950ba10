//! Piecewise-linear periodic car schedules and complete collisions.
//!
//! A car runs around the boundary of one face. Its position is a lifted
//! coordinate `x`: dart `i` of the face occupies `[i, i + 1]` (mod the face
//! length `L`) and corner `i` sits at `i + 1`. A face carrying `d` cars is
//! a multiple motion; each of its cars has period `d · T`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::{OrientedMap, Sign, VertexClass};
use crate::rational::{lcm_q, modulo, q, serde_q, serde_q_pairs, serde_q_vec, IntervalSet, Q};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Car {
    pub face: usize,
    /// `(time, lifted position)` with times strictly increasing in
    /// `[0, own period)` and positions nondecreasing.
    #[serde(with = "serde_q_pairs")]
    pub breakpoints: Vec<(Q, Q)>,
    /// Boundary laps per own period.
    pub degree: u32,
}

/// A linear stretch of a schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Piece {
    pub t0: Q,
    pub t1: Q,
    pub x0: Q,
    pub x1: Q,
}

impl Piece {
    pub fn is_stop(&self) -> bool {
        self.x0 == self.x1
    }

    /// Time at which the moving piece reaches `x`.
    pub fn time_at(&self, x: Q) -> Q {
        self.t0 + (x - self.x0) * (self.t1 - self.t0) / (self.x1 - self.x0)
    }

    pub fn position_at(&self, t: Q) -> Q {
        if self.t1 == self.t0 {
            return self.x0;
        }
        self.x0 + (t - self.t0) * (self.x1 - self.x0) / (self.t1 - self.t0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Motion {
    #[serde(with = "serde_q")]
    pub period: Q,
    pub cars: Vec<Car>,
    #[serde(default)]
    pub stop_corners: Vec<usize>,
}

/// Times (over one common period) at which all corners of a vertex are occupied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCollision {
    pub vertex: usize,
    #[serde(with = "serde_q_pairs")]
    pub times: Vec<(Q, Q)>,
}

/// A connected piece of an edge-interior collision set, in the edge
/// coordinate `μ ∈ (0, 1)` measured along the arrow.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLocus {
    pub edge: u32,
    #[serde(with = "serde_q")]
    pub from: Q,
    #[serde(with = "serde_q")]
    pub to: Q,
    #[serde(with = "serde_q_vec")]
    pub times: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionReport {
    #[serde(with = "serde_q")]
    pub period: Q,
    pub vertices: Vec<VertexCollision>,
    pub edges: Vec<EdgeLocus>,
    /// Collision vertices plus maximal collision loci inside edges.
    pub loci: usize,
}

/// Geometric collision locus without times.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Locus {
    Vertex(usize),
    Edge {
        edge: u32,
        #[serde(with = "serde_q")]
        from: Q,
        #[serde(with = "serde_q")]
        to: Q,
    },
}

impl CollisionReport {
    pub fn new(period: Q, vertices: Vec<VertexCollision>, mut edges: Vec<EdgeLocus>) -> Self {
        edges.sort_by_key(|a| (a.edge, a.from, a.to));
        let loci = vertices.len() + edges.len();
        CollisionReport { period, vertices, edges, loci }
    }

    pub fn loci_set(&self) -> Vec<Locus> {
        let mut out: Vec<Locus> = self.vertices.iter().map(|v| Locus::Vertex(v.vertex)).collect();
        out.extend(self.edges.iter().map(|e| Locus::Edge { edge: e.edge, from: e.from, to: e.to }));
        out.sort();
        out
    }
}

impl Motion {
    pub fn cars_on(&self, face: usize) -> Vec<usize> {
        (0..self.cars.len()).filter(|&j| self.cars[j].face == face).collect()
    }

    /// Number of cars on each face.
    pub fn face_multiplicities(&self, faces: usize) -> Vec<usize> {
        let mut d = vec![0; faces];
        for c in &self.cars {
            if c.face < faces {
                d[c.face] += 1;
            }
        }
        d
    }

    pub fn car_period(&self, j: usize) -> Q {
        self.period * q(self.cars_on(self.cars[j].face).len() as i128)
    }

    pub fn common_period(&self) -> Q {
        (0..self.cars.len()).fold(self.period, |acc, j| lcm_q(&acc, &self.car_period(j)))
    }

    pub fn validate(&self, map: &OrientedMap) -> Result<()> {
        if self.period <= Q::zero() {
            return Err(Error::Schedule("period must be positive".into()));
        }
        for (j, car) in self.cars.iter().enumerate() {
            if car.face >= map.num_faces() {
                return Err(Error::Schedule(format!("car {j} is on unknown face {}", car.face)));
            }
            let p = self.car_period(j);
            let len = q(map.face_len(car.face) as i128);
            let bp = &car.breakpoints;
            if bp.is_empty() {
                return Err(Error::Schedule(format!("car {j} has no breakpoints")));
            }
            if car.degree == 0 {
                return Err(Error::Schedule(format!("car {j} has degree 0")));
            }
            if bp[0].0 < Q::zero() || bp[bp.len() - 1].0 >= p {
                return Err(Error::Schedule(format!("car {j} has times outside [0, period)")));
            }
            for w in bp.windows(2) {
                if w[1].0 <= w[0].0 || w[1].1 < w[0].1 {
                    return Err(Error::Schedule(format!("car {j} is not monotone")));
                }
            }
            if bp[bp.len() - 1].1 > bp[0].1 + len * q(car.degree as i128) {
                return Err(Error::Schedule(format!("car {j} overruns its degree")));
            }
            for pc in self.pieces(map, j, p) {
                if pc.is_stop() && !pc.x0.is_integer() {
                    return Err(Error::Schedule(format!("car {j} stops away from a corner")));
                }
            }
        }
        self.check_periodicity(map)
    }

    /// `α_{i,j}(t + T) = α_{i,j+1}(t)` for faces with several cars.
    pub fn check_periodicity(&self, map: &OrientedMap) -> Result<()> {
        for f in 0..map.num_faces() {
            let cs = self.cars_on(f);
            if cs.len() < 2 {
                continue;
            }
            let len = q(map.face_len(f) as i128);
            for (k, &a) in cs.iter().enumerate() {
                let b = cs[(k + 1) % cs.len()];
                let mut times: Vec<Q> = self.cars[b].breakpoints.iter().map(|p| p.0).collect();
                times.extend(self.cars[a].breakpoints.iter().map(|p| p.0 - self.period));
                let diffs: Vec<Q> = times
                    .iter()
                    .map(|t| self.position(map, a, *t + self.period) - self.position(map, b, *t))
                    .collect();
                let ok = diffs.iter().all(|d| *d == diffs[0]) && (diffs[0] / len).is_integer();
                if !ok {
                    return Err(Error::Schedule(format!("cars {a} and {b} of face {f} violate periodicity")));
                }
            }
        }
        Ok(())
    }

    /// Pieces of car `j` over `[0, window]`; `window` must be a multiple of
    /// the car's own period.
    pub fn pieces(&self, map: &OrientedMap, j: usize, window: Q) -> Vec<Piece> {
        let car = &self.cars[j];
        let p = self.car_period(j);
        let shift = q(map.face_len(car.face) as i128 * car.degree as i128);
        let reps = (window / p).to_integer();
        let bp = &car.breakpoints;
        let mut out = Vec::new();
        for r in 0..reps {
            let dt = p * q(r);
            let dx = shift * q(r);
            for i in 0..bp.len() {
                let (t0, x0) = bp[i];
                let (t1, x1) = if i + 1 < bp.len() { bp[i + 1] } else { (bp[0].0 + p, bp[0].1 + shift) };
                out.push(Piece { t0: t0 + dt, t1: t1 + dt, x0: x0 + dx, x1: x1 + dx });
            }
        }
        // the stretch before the first breakpoint comes from the previous lap
        let (t_first, x_first) = bp[0];
        if t_first > Q::zero() && reps > 0 {
            let last = out[out.len() - 1];
            let back = Piece {
                t0: last.t0 - window,
                t1: last.t1 - window,
                x0: last.x0 - shift * q(reps),
                x1: last.x1 - shift * q(reps),
            };
            out.insert(0, back);
            debug_assert_eq!(back.t1, t_first);
            debug_assert_eq!(back.x1, x_first);
        }
        out
    }

    /// Lifted position of car `j` at any time.
    pub fn position(&self, map: &OrientedMap, j: usize, t: Q) -> Q {
        let car = &self.cars[j];
        let p = self.car_period(j);
        let shift = q(map.face_len(car.face) as i128 * car.degree as i128);
        let k = ((t - car.breakpoints[0].0) / p).floor();
        let tt = t - k * p;
        let bp = &car.breakpoints;
        for i in 0..bp.len() {
            let (t0, x0) = bp[i];
            let (t1, x1) = if i + 1 < bp.len() { bp[i + 1] } else { (bp[0].0 + p, bp[0].1 + shift) };
            if t0 <= tt && tt <= t1 {
                let pc = Piece { t0, t1, x0, x1 };
                return pc.position_at(tt) + k * shift;
            }
        }
        unreachable!("time reduced into one period")
    }

    pub fn is_regular(&self, map: &OrientedMap) -> bool {
        (0..self.cars.len()).all(|j| self.pieces(map, j, self.car_period(j)).iter().all(|p| !p.is_stop()))
    }

    /// Closed time set (within `[0, window]`) during which corner `c` is occupied.
    pub fn corner_occupancy(&self, map: &OrientedMap, c: usize, window: Q) -> IntervalSet {
        let f = map.face_of(c);
        let len = q(map.face_len(f) as i128);
        let target = q(map.index_in_face(c) as i128 + 1);
        let mut parts = Vec::new();
        for j in self.cars_on(f) {
            for pc in self.pieces(map, j, window) {
                for x in lifts_in(target, len, pc.x0, pc.x1) {
                    if pc.is_stop() {
                        parts.push((pc.t0, pc.t1));
                    } else {
                        let t = pc.time_at(x);
                        parts.push((t, t));
                    }
                }
            }
        }
        let clipped: Vec<(Q, Q)> = parts
            .into_iter()
            .filter_map(|(a, b)| {
                let a = a.max(Q::zero());
                let b = b.min(window);
                (a <= b).then_some((a, b))
            })
            .collect();
        IntervalSet::new(clipped)
    }

    pub fn complete_collisions(&self, map: &OrientedMap) -> CollisionReport {
        let w = self.common_period();
        let mut vertices = Vec::new();
        for v in 0..map.num_vertices() {
            let mut set: Option<IntervalSet> = None;
            for &c in map.vertex_corner_cycle(v) {
                let occ = self.corner_occupancy(map, c, w);
                set = Some(match set {
                    None => occ,
                    Some(s) => s.intersect(&occ),
                });
            }
            let set = set.unwrap_or_default();
            if !set.is_empty() {
                vertices.push(VertexCollision { vertex: v, times: fold_times(&set, w) });
            }
        }
        let mut edges: BTreeMap<(u32, Q), Vec<Q>> = BTreeMap::new();
        for &e in map.edges() {
            let d1 = map.dart_of_edge(e, Sign::Plus).unwrap();
            let d2 = map.twin(d1);
            let pa = self.dart_passages(map, d1, w);
            let pb = self.dart_passages(map, d2, w);
            for a in &pa {
                for b in &pb {
                    if a.car == b.car {
                        continue;
                    }
                    if let Some((t, mu)) = meet(a, b) {
                        edges.entry((e, mu)).or_default().push(modulo(&t, &w));
                    }
                }
            }
        }
        let edges = edges
            .into_iter()
            .map(|((edge, mu), mut times)| {
                times.sort();
                times.dedup();
                EdgeLocus { edge, from: mu, to: mu, times }
            })
            .collect();
        CollisionReport::new(w, vertices, edges)
    }

    /// Time intervals during which some car of the dart's face is inside
    /// dart `d`, with its fraction `λ` linear in time.
    fn dart_passages(&self, map: &OrientedMap, d: usize, window: Q) -> Vec<Passage> {
        let f = map.face_of(d);
        let len = q(map.face_len(f) as i128);
        let start = q(map.index_in_face(d) as i128);
        let mut out = Vec::new();
        for j in self.cars_on(f) {
            for pc in self.pieces(map, j, window) {
                if pc.is_stop() {
                    continue;
                }
                for x in lifts_in_open(start, len, pc.x0, pc.x1) {
                    let lo = x.max(pc.x0);
                    let hi = (x + Q::one()).min(pc.x1);
                    if lo >= hi {
                        continue;
                    }
                    out.push(Passage {
                        car: j,
                        t0: pc.time_at(lo),
                        t1: pc.time_at(hi),
                        l0: lo - x,
                        l1: hi - x,
                    });
                }
            }
        }
        out
    }
}

struct Passage {
    car: usize,
    t0: Q,
    t1: Q,
    l0: Q,
    l1: Q,
}

impl Passage {
    fn at(&self, t: Q) -> Q {
        self.l0 + (t - self.t0) * (self.l1 - self.l0) / (self.t1 - self.t0)
    }
}

/// Meeting of two cars on the two darts of one edge: `λ_a + λ_b = 1`.
/// Returns the time and the position `μ = λ_a` along dart `a`.
fn meet(a: &Passage, b: &Passage) -> Option<(Q, Q)> {
    let s = a.t0.max(b.t0);
    let e = a.t1.min(b.t1);
    if s > e {
        return None;
    }
    let fs = a.at(s) + b.at(s) - Q::one();
    let fe = a.at(e) + b.at(e) - Q::one();
    if fs > Q::zero() || fe < Q::zero() {
        return None;
    }
    let t = if fs == fe { s } else { s + (e - s) * (-fs) / (fe - fs) };
    let mu = a.at(t);
    (mu > Q::zero() && mu < Q::one()).then_some((t, mu))
}

/// Values `target + kL` lying in `[lo, hi]`.
pub(crate) fn lifts_in(target: Q, len: Q, lo: Q, hi: Q) -> Vec<Q> {
    let k0 = ((lo - target) / len).ceil();
    let mut out = Vec::new();
    let mut x = target + k0 * len;
    while x <= hi {
        out.push(x);
        x += len;
    }
    out
}

/// Values `start + kL` whose unit window `[x, x + 1]` meets `(lo, hi)`.
fn lifts_in_open(start: Q, len: Q, lo: Q, hi: Q) -> Vec<Q> {
    lifts_in(start, len, lo - Q::one(), hi)
        .into_iter()
        .filter(|x| *x + Q::one() > lo && *x < hi)
        .collect()
}

/// Reports an occupancy set in `[0, w)`, identifying `w` with `0`.
fn fold_times(set: &IntervalSet, w: Q) -> Vec<(Q, Q)> {
    let mut out: Vec<(Q, Q)> = Vec::new();
    for &(a, b) in set.parts() {
        if a == w {
            if !set.contains(&Q::zero()) {
                out.push((Q::zero(), Q::zero()));
            }
        } else {
            out.push((a, b));
        }
    }
    IntervalSet::new(out).parts().to_vec()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatedStopsReport {
    pub stops_at_stop_corners: bool,
    pub consecutive_disjoint: bool,
    pub at_least_two_per_vertex: bool,
    pub violations: Vec<String>,
}

impl SeparatedStopsReport {
    pub fn passes(&self) -> bool {
        self.stops_at_stop_corners && self.consecutive_disjoint && self.at_least_two_per_vertex
    }
}

/// Corner where a stop at lifted coordinate `x` on face `f` happens.
pub fn corner_at(map: &OrientedMap, f: usize, x: Q) -> usize {
    let len = map.face_len(f) as i128;
    let i = (x.to_integer() - 1).rem_euclid(len) as usize;
    map.dart_id(f, i)
}

pub fn check_separated_stops(map: &OrientedMap, motion: &Motion, stop_corners: &[usize]) -> SeparatedStopsReport {
    let mut violations = Vec::new();
    let w = motion.common_period();
    let mut cond1 = true;
    for (j, car) in motion.cars.iter().enumerate() {
        for pc in motion.pieces(map, j, motion.car_period(j)) {
            if pc.is_stop() && pc.t1 > pc.t0 {
                let c = corner_at(map, car.face, pc.x0);
                if !stop_corners.contains(&c) {
                    cond1 = false;
                    violations.push(format!("car {j} stops at corner {c}, which is not a stop corner"));
                }
            }
        }
    }
    let mut cond2 = true;
    let mut cond3 = true;
    for v in 0..map.num_vertices() {
        let stops: Vec<usize> = map
            .vertex_corner_cycle(v)
            .iter()
            .copied()
            .filter(|c| stop_corners.contains(c))
            .collect();
        if stops.is_empty() {
            continue;
        }
        if stops.len() < 2 {
            cond3 = false;
            violations.push(format!("vertex {v} has a single stop corner"));
            continue;
        }
        let occ: Vec<IntervalSet> = stops.iter().map(|&c| motion.corner_occupancy(map, c, w)).collect();
        for i in 0..stops.len() {
            let k = (i + 1) % stops.len();
            if !occ[i].intersect(&occ[k]).is_empty() {
                cond2 = false;
                violations.push(format!(
                    "stop corners {} and {} at vertex {v} are occupied simultaneously",
                    stops[i], stops[k]
                ));
            }
        }
    }
    SeparatedStopsReport {
        stops_at_stop_corners: cond1,
        consecutive_disjoint: cond2,
        at_least_two_per_vertex: cond3,
        violations,
    }
}

/// Per-face car counts, after re-checking the periodicity condition.
pub fn multiplicities(map: &OrientedMap, motion: &Motion) -> Result<Vec<usize>> {
    motion.check_periodicity(map)?;
    Ok(motion.face_multiplicities(map.num_faces()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceSinkReport {
    pub holds: bool,
    pub violations: Vec<String>,
}

/// Every complete collision is at a sink at an even integer time or at a
/// source at an odd integer time.
pub fn verify_source_sink_collisions(map: &OrientedMap, motion: &Motion) -> SourceSinkReport {
    let rep = motion.complete_collisions(map);
    let mut violations = Vec::new();
    for e in &rep.edges {
        violations.push(format!("collision inside edge {} at {}", e.edge, crate::rational::fmt_q(&e.from)));
    }
    for vc in &rep.vertices {
        let parity = match map.classify_vertex(vc.vertex) {
            VertexClass::Sink => 0,
            VertexClass::Source => 1,
            VertexClass::Mixed { .. } => {
                violations.push(format!("collision at mixed vertex {}", vc.vertex));
                continue;
            }
        };
        for (a, b) in &vc.times {
            if a != b || !a.is_integer() || a.to_integer().rem_euclid(2) != parity {
                violations.push(format!(
                    "vertex {} collides at time {}",
                    vc.vertex,
                    crate::rational::fmt_q(a)
                ));
            }
        }
    }
    SourceSinkReport { holds: violations.is_empty(), violations }
}
