//! Blowing up stop corners: every stop corner becomes a pair of new darts
//! `y, x`, and at each vertex the dart `x` of a stop corner is glued to the
//! dart `y` of the next stop corner anticlockwise. Cars that stopped at the
//! corner now run along `y` and then `x`, so the motion becomes regular.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::{Dart, OrientedMap, Sign};
use crate::motion::{check_separated_stops, corner_at, lifts_in, Motion, Piece};
use crate::rational::{q, qf, IntervalSet, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUp {
    pub map: OrientedMap,
    pub motion: Motion,
    pub new_edges: Vec<u32>,
    /// Duration given to stops inserted at pass-throughs.
    pub delta: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowUpReport {
    pub regular: bool,
    pub euler_preserved: bool,
    pub collisions_on_new_edges: usize,
    pub loci_before: usize,
    pub loci_after: usize,
}

impl Motion {
    /// Corners at which some car actually stops.
    pub fn stopping_corners(&self, map: &OrientedMap) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (j, car) in self.cars.iter().enumerate() {
            for pc in self.pieces(map, j, self.car_period(j)) {
                if pc.is_stop() && pc.t1 > pc.t0 {
                    out.push(corner_at(map, car.face, pc.x0));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn min_gap(times: &mut Vec<Q>, period: Q) -> Option<Q> {
    times.sort();
    times.dedup();
    if times.len() < 2 {
        return None;
    }
    let mut g = times[0] + period - times[times.len() - 1];
    for w in times.windows(2) {
        g = g.min(w[1] - w[0]);
    }
    Some(g)
}

fn set_distance(a: &IntervalSet, b: &IntervalSet, period: Q) -> Option<Q> {
    let mut best: Option<Q> = None;
    for &(a0, a1) in a.parts() {
        for &(b0, b1) in b.parts() {
            for d in [b0 - a1, a0 - b1, b0 + period - a1, a0 + period - b1] {
                if d > Q::zero() {
                    best = Some(best.map_or(d, |x: Q| x.min(d)));
                }
            }
        }
    }
    best
}

/// Replaces pass-throughs at stop corners by stops of length `delta`.
fn add_stops(map: &OrientedMap, motion: &Motion, stops: &[usize], delta: Q) -> Motion {
    let mut out = motion.clone();
    for (j, car) in motion.cars.iter().enumerate() {
        let p = motion.car_period(j);
        let len = q(map.face_len(car.face) as i128);
        let targets: Vec<Q> = stops
            .iter()
            .filter(|&&c| map.face_of(c) == car.face)
            .map(|&c| q(map.index_in_face(c) as i128 + 1))
            .collect();
        let first = car.breakpoints[0].0;
        let pieces: Vec<Piece> = motion
            .pieces(map, j, p)
            .into_iter()
            .filter(|pc| pc.t0 >= first && pc.t0 < first + p)
            .collect();
        let n = pieces.len();
        let mut bps: Vec<(Q, Q)> = Vec::new();
        for (idx, pc) in pieces.iter().enumerate() {
            bps.push((pc.t0, pc.x0));
            if pc.is_stop() {
                continue;
            }
            let prev_moving = !pieces[(idx + n - 1) % n].is_stop();
            let mut passes: Vec<Q> = targets
                .iter()
                .flat_map(|&x| lifts_in(x, len, pc.x0, pc.x1))
                .filter(|x| *x < pc.x1)
                .collect();
            passes.sort();
            for x in passes {
                if x == pc.x0 {
                    if prev_moving {
                        bps.push((pc.t0 + delta, x));
                    }
                    continue;
                }
                let t = pc.time_at(x);
                bps.push((t, x));
                bps.push((t + delta, x));
            }
        }
        out.cars[j].breakpoints = normalize(bps, p, len * q(car.degree as i128));
    }
    out
}

/// Brings breakpoints into `[0, p)`, shifting positions by whole laps.
fn normalize(v: Vec<(Q, Q)>, p: Q, shift: Q) -> Vec<(Q, Q)> {
    let mut out: Vec<(Q, Q)> = v
        .into_iter()
        .map(|(t, x)| {
            let k = (t / p).floor();
            (t - k * p, x - k * shift)
        })
        .collect();
    out.sort();
    out
}

/// Blows up the given stop corners of a motion with separated stops.
pub fn blow_up(map: &OrientedMap, motion: &Motion, stops: &[usize]) -> Result<BlowUp> {
    let sep = check_separated_stops(map, motion, stops);
    if !sep.passes() {
        return Err(Error::Precondition(format!("stops are not separated: {:?}", sep.violations)));
    }
    if stops.is_empty() {
        return Ok(BlowUp { map: map.clone(), motion: motion.clone(), new_edges: vec![], delta: Q::zero() });
    }
    let w = motion.common_period();
    let mut gaps: Vec<Q> = Vec::new();
    for (j, car) in motion.cars.iter().enumerate() {
        let p = motion.car_period(j);
        let mut times: Vec<Q> = car.breakpoints.iter().map(|b| b.0).collect();
        for &c in stops.iter().filter(|&&c| map.face_of(c) == car.face) {
            let occ = motion.corner_occupancy(map, c, p);
            times.extend(occ.parts().iter().flat_map(|&(a, b)| [a, b]).filter(|t| *t < p));
        }
        if let Some(g) = min_gap(&mut times, p) {
            gaps.push(g);
        }
        gaps.push(p);
    }
    for v in 0..map.num_vertices() {
        let cs: Vec<usize> = map.vertex_corner_cycle(v).iter().copied().filter(|c| stops.contains(c)).collect();
        let occ: Vec<IntervalSet> = cs.iter().map(|&c| motion.corner_occupancy(map, c, w)).collect();
        for i in 0..cs.len() {
            for k in 0..cs.len() {
                if i != k {
                    if let Some(d) = set_distance(&occ[i], &occ[k], w) {
                        gaps.push(d);
                    }
                }
            }
        }
    }
    let delta = gaps.into_iter().min().unwrap() * qf(1, 4);
    let adjusted = add_stops(map, motion, stops, delta);
    adjusted.validate(map)?;
    let sep = check_separated_stops(map, &adjusted, stops);
    if !sep.passes() {
        return Err(Error::Precondition(format!("adjusted stops are not separated: {:?}", sep.violations)));
    }
    let (new_map, new_edges, layout) = blow_up_map(map, stops)?;
    let new_motion = transport(map, &adjusted, stops, &new_map, &layout);
    new_motion.validate(&new_map)?;
    Ok(BlowUp { map: new_map, motion: new_motion, new_edges, delta })
}

/// New index of each old dart of each face.
type Layout = Vec<Vec<usize>>;

fn blow_up_map(map: &OrientedMap, stops: &[usize]) -> Result<(OrientedMap, Vec<u32>, Layout)> {
    let mut fresh = map.edges().iter().max().map_or(0, |e| e + 1);
    // (x-edge, y-edge) for each stop corner
    let mut xy: std::collections::BTreeMap<usize, (u32, u32)> = Default::default();
    let mut new_edges = Vec::new();
    for v in 0..map.num_vertices() {
        let cs: Vec<usize> = map.vertex_corner_cycle(v).iter().copied().filter(|c| stops.contains(c)).collect();
        let k = cs.len();
        let ids: Vec<u32> = (0..k as u32).map(|i| fresh + i).collect();
        fresh += k as u32;
        new_edges.extend(&ids);
        for i in 0..k {
            // edge ids[i] joins x of corner i with y of corner i - 1
            let x = ids[i];
            let y = ids[(i + 1) % k];
            xy.insert(cs[i], (x, y));
        }
    }
    let mut faces = Vec::new();
    let mut layout = Vec::new();
    for f in 0..map.num_faces() {
        let mut nf = Vec::new();
        let mut pos = Vec::new();
        for d in map.face_darts(f) {
            pos.push(nf.len());
            nf.push(map.dart(d));
            if let Some(&(x, y)) = xy.get(&d) {
                nf.push(Dart::new(y, Sign::Minus));
                nf.push(Dart::new(x, Sign::Plus));
            }
        }
        faces.push(nf);
        layout.push(pos);
    }
    let new_map = OrientedMap::new(map.surface(), faces)?;
    Ok((new_map, new_edges, layout))
}

fn transport(map: &OrientedMap, motion: &Motion, stops: &[usize], new_map: &OrientedMap, layout: &Layout) -> Motion {
    let mut out = motion.clone();
    for (j, car) in motion.cars.iter().enumerate() {
        let f = car.face;
        let p = motion.car_period(j);
        let len = q(map.face_len(f) as i128);
        let new_len = q(new_map.face_len(f) as i128);
        // new coordinate of an old coordinate lying in dart `i` of lap `k`
        let conv = |x: Q, i: usize, k: Q| new_len * k + q(layout[f][i] as i128) + (x - k * len - q(i as i128));
        let first = car.breakpoints[0].0;
        let mut bps = Vec::new();
        for pc in motion.pieces(map, j, p).into_iter().filter(|pc| pc.t0 >= first && pc.t0 < first + p) {
            if pc.is_stop() {
                let k = ((pc.x0 - q(1)) / len).floor();
                let i = (pc.x0 - q(1) - k * len).to_integer() as usize;
                let c = map.dart_id(f, i);
                debug_assert!(stops.contains(&c));
                let y0 = conv(pc.x0, i, k);
                bps.push((pc.t0, y0));
                bps.push(((pc.t0 + pc.t1) / q(2), y0 + q(1)));
                continue;
            }
            for sub in split_at_integers(&pc) {
                let k = (sub.x0 / len).floor();
                let i = (sub.x0 - k * len).floor().to_integer() as usize;
                bps.push((sub.t0, conv(sub.x0, i, k)));
            }
        }
        out.cars[j].breakpoints = bps;
    }
    out.stop_corners = vec![];
    out
}

fn split_at_integers(pc: &Piece) -> Vec<Piece> {
    let mut cuts = vec![pc.x0];
    let mut x = pc.x0.floor() + q(1);
    while x < pc.x1 {
        cuts.push(x);
        x += q(1);
    }
    cuts.push(pc.x1);
    cuts.windows(2)
        .map(|w| Piece { t0: pc.time_at(w[0]), t1: pc.time_at(w[1]), x0: w[0], x1: w[1] })
        .collect()
}

/// Checks the blow-up postconditions.
pub fn blow_up_report(map: &OrientedMap, motion: &Motion, b: &BlowUp) -> BlowUpReport {
    let after = b.motion.complete_collisions(&b.map);
    let mut on_new = after.edges.iter().filter(|e| b.new_edges.contains(&e.edge)).count();
    for vc in &after.vertices {
        let touches_new = b.map.vertex_corner_cycle(vc.vertex).iter().any(|&c| {
            b.new_edges.contains(&b.map.dart(c).edge) || b.new_edges.contains(&b.map.dart(b.map.next(c)).edge)
        });
        if touches_new {
            on_new += 1;
        }
    }
    BlowUpReport {
        regular: b.motion.is_regular(&b.map),
        euler_preserved: b.map.census().euler_characteristic == map.census().euler_characteristic,
        collisions_on_new_edges: on_new,
        loci_before: motion.complete_collisions(map).loci,
        loci_after: after.loci,
    }
}
