//! Seeded random generators for maps, motions and words.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::comotion::{Cocar, Comotion};
use crate::diagram::HowieDiagram;
use crate::group::BaseGroup;
use crate::map::{Dart, OrientedMap, Sign, Surface};
use crate::motion::{Car, Motion};
use crate::rational::{q, qf, Q};
use crate::word::{FreeProductWord, Syllable, T};

fn signs(pattern: &[(Sign, u32)]) -> Vec<Sign> {
    pattern
        .iter()
        .flat_map(|&(s, n)| std::iter::repeat_n(s, n as usize))
        .collect()
}

/// `+(+−)^{m+1}`
pub fn profile_b(m: u32) -> Vec<Sign> {
    let mut p = vec![Sign::Plus];
    for _ in 0..=m {
        p.extend([Sign::Plus, Sign::Minus]);
    }
    p
}

/// `−(−+)^{m+1}`
pub fn profile_c(m: u32) -> Vec<Sign> {
    profile_b(m).into_iter().map(Sign::flip).collect()
}

/// `((+)^{k+1}(−)^{l+1})^s`
pub fn profile_blocks(k: u32, l: u32, s: u32) -> Vec<Sign> {
    (0..s)
        .flat_map(|_| signs(&[(Sign::Plus, k + 1), (Sign::Minus, l + 1)]))
        .collect()
}

/// Glues faces with the given sign profiles into a sphere: first a tree of
/// faces (a disk), then its boundary is zipped up by folding adjacent
/// darts of opposite sign. Profiles must have as many `+` as `−` overall.
/// Each face is rotated by a random amount.
pub fn glue_sphere<R: Rng>(rng: &mut R, profiles: &[Vec<Sign>]) -> Option<OrientedMap> {
    let plus: usize = profiles.iter().flatten().filter(|s| **s == Sign::Plus).count();
    let total: usize = profiles.iter().map(|p| p.len()).sum();
    if profiles.is_empty() || 2 * plus != total {
        return None;
    }
    let mut faces: Vec<Vec<(Sign, Option<u32>)>> = profiles
        .iter()
        .map(|p| {
            let mut p = p.clone();
            let r = rng.gen_range(0..p.len());
            p.rotate_left(r);
            p.into_iter().map(|s| (s, None)).collect()
        })
        .collect();
    let mut next_edge = 0u32;
    let mut glue = |faces: &mut Vec<Vec<(Sign, Option<u32>)>>, a: (usize, usize), b: (usize, usize)| {
        faces[a.0][a.1].1 = Some(next_edge);
        faces[b.0][b.1].1 = Some(next_edge);
        next_edge += 1;
    };
    let mut order: Vec<usize> = (1..faces.len()).collect();
    order.shuffle(rng);
    // boundary of the growing disk, anticlockwise
    let mut boundary: Vec<(usize, usize)> = (0..faces[0].len()).map(|i| (0, i)).collect();
    let mut pending = order;
    let mut stalls = 0;
    while let Some(f) = pending.pop() {
        let options: Vec<(usize, usize)> = (0..boundary.len())
            .flat_map(|bi| (0..faces[f].len()).map(move |i| (bi, i)))
            .filter(|&(bi, i)| {
                let (g, j) = boundary[bi];
                faces[g][j].0 != faces[f][i].0
            })
            .collect();
        let Some(&(bi, i)) = options.choose(rng) else {
            pending.insert(0, f);
            stalls += 1;
            if stalls > pending.len() + 1 {
                return None;
            }
            continue;
        };
        stalls = 0;
        let d = boundary[bi];
        glue(&mut faces, d, (f, i));
        let n = faces[f].len();
        let inserted: Vec<(usize, usize)> = (1..n).map(|k| (f, (i + k) % n)).collect();
        boundary.splice(bi..=bi, inserted);
    }
    while !boundary.is_empty() {
        let n = boundary.len();
        let folds: Vec<usize> = (0..n)
            .filter(|&i| {
                let (a, b) = (boundary[i], boundary[(i + 1) % n]);
                faces[a.0][a.1].0 != faces[b.0][b.1].0
            })
            .collect();
        let &i = folds.choose(rng)?;
        let j = (i + 1) % n;
        glue(&mut faces, boundary[i], boundary[j]);
        if j == 0 {
            boundary.pop();
            boundary.remove(0);
        } else {
            boundary.drain(i..=j);
        }
    }
    let darts: Vec<Vec<Dart>> = faces
        .into_iter()
        .map(|f| f.into_iter().map(|(s, e)| Dart::new(e.unwrap(), s)).collect())
        .collect();
    OrientedMap::new(Surface::Sphere, darts).ok()
}

/// A random sphere map of type `A_m`: faces of forms (a)–(d), balanced.
pub fn random_am_map<R: Rng>(rng: &mut R, m: u32, faces: usize) -> OrientedMap {
    loop {
        let mut profiles = Vec::new();
        for _ in 0..faces.max(1) {
            profiles.push(match rng.gen_range(0..4) {
                0 => vec![Sign::Plus, Sign::Minus],
                1 => profile_b(m),
                2 => profile_c(m),
                _ => profile_blocks(rng.gen_range(1..3), rng.gen_range(1..3), 1),
            });
        }
        balance(&mut profiles, m);
        if let Some(map) = glue_sphere(rng, &profiles) {
            return map;
        }
    }
}

/// A random sphere map of type `B_m`: faces of forms (b), (c) and blocks.
pub fn random_bm_map<R: Rng>(rng: &mut R, m: u32, faces: usize) -> OrientedMap {
    loop {
        let mut profiles = Vec::new();
        for _ in 0..faces.max(1) {
            profiles.push(match rng.gen_range(0..3) {
                0 => profile_b(m),
                1 => profile_c(m),
                _ => profile_blocks(rng.gen_range(1..3), rng.gen_range(1..3), rng.gen_range(1..4)),
            });
        }
        balance(&mut profiles, m);
        if let Some(map) = glue_sphere(rng, &profiles) {
            return map;
        }
    }
}

fn balance(profiles: &mut Vec<Vec<Sign>>, m: u32) {
    let excess: i64 = profiles.iter().flatten().map(|s| s.as_i8() as i64).sum();
    for _ in 0..excess.abs() {
        profiles.push(if excess > 0 { profile_c(m) } else { profile_b(m) });
    }
}

/// A random sphere map whose faces have arbitrary balanced sign words.
pub fn random_sphere_map<R: Rng>(rng: &mut R, faces: usize, max_len: usize) -> OrientedMap {
    loop {
        let mut profiles: Vec<Vec<Sign>> = (0..faces.max(1))
            .map(|_| {
                let n = rng.gen_range(1..=max_len.max(1));
                (0..n).map(|_| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }).collect()
            })
            .collect();
        let excess: i64 = profiles.iter().flatten().map(|s| s.as_i8() as i64).sum();
        let fix = if excess > 0 { Sign::Minus } else { Sign::Plus };
        let target = rng.gen_range(0..profiles.len());
        profiles[target].extend(std::iter::repeat_n(fix, excess.unsigned_abs() as usize));
        if let Some(map) = glue_sphere(rng, &profiles) {
            return map;
        }
    }
}

/// Splits face `f` by a new edge from corner `i` to corner `j`.
pub fn split_face(map: &OrientedMap, f: usize, i: usize, j: usize, edge: u32) -> OrientedMap {
    let face = &map.faces()[f];
    let n = face.len();
    let (i, j) = (i.min(j), i.max(j));
    let mut one: Vec<Dart> = (i + 1..=j).map(|k| face[k % n]).collect();
    one.push(Dart::plus(edge));
    let mut two: Vec<Dart> = (j + 1..=i + n).map(|k| face[k % n]).collect();
    two.push(Dart::minus(edge));
    let mut faces = map.faces().to_vec();
    faces[f] = one;
    faces.push(two);
    OrientedMap::new(map.surface(), faces).expect("splitting a face keeps the map valid")
}

/// The torus square refined by random face splits and edge subdivisions.
pub fn random_torus_map<R: Rng>(rng: &mut R, moves: usize) -> OrientedMap {
    let base = OrientedMap::new(
        Surface::Torus,
        vec![vec![Dart::plus(0), Dart::plus(1), Dart::minus(0), Dart::minus(1)]],
    )
    .expect("torus square");
    refine(rng, base, moves)
}

/// Random face splits and edge subdivisions.
pub fn refine<R: Rng>(rng: &mut R, mut map: OrientedMap, moves: usize) -> OrientedMap {
    for _ in 0..moves {
        let fresh = map.edges().iter().max().map_or(0, |e| e + 1);
        if rng.gen_bool(0.6) {
            let f = rng.gen_range(0..map.num_faces());
            let n = map.face_len(f);
            map = split_face(&map, f, rng.gen_range(0..n), rng.gen_range(0..n), fresh);
        } else {
            let e = *map.edges().choose(rng).unwrap();
            map = map.subdivide_edge(e, fresh).unwrap();
        }
    }
    map
}

fn random_lap<R: Rng>(rng: &mut R, own: Q, len: i128, grid: i128) -> Vec<(Q, Q)> {
    let n = rng.gen_range(1..=4usize);
    let mut ts: Vec<i128> = (1..grid).collect();
    ts.shuffle(rng);
    let mut ts: Vec<i128> = ts.into_iter().take(n - 1).collect();
    ts.push(0);
    ts.sort();
    let mut xs: Vec<i128> = (1..len * grid).collect();
    xs.shuffle(rng);
    let mut xs: Vec<i128> = xs.into_iter().take(n - 1).collect();
    xs.push(0);
    xs.sort();
    let x0 = qf(rng.gen_range(0..len * grid), grid);
    ts.into_iter()
        .zip(xs)
        .map(|(t, x)| (own * qf(t, grid), x0 + qf(x, grid)))
        .collect()
}

/// Breakpoints of the lap `x ↦ lap(x + shift)`, re-based into `[0, own)`.
fn shift_lap(lap: &[(Q, Q)], own: Q, len: Q, shift: Q) -> Vec<(Q, Q)> {
    let mut out: Vec<(Q, Q)> = Vec::new();
    for k in -1..=1i128 {
        for &(t, x) in lap {
            let tt = t + own * q(k) - shift;
            if tt >= q(0) && tt < own {
                out.push((tt, x + len * q(k)));
            }
        }
    }
    out.sort();
    out
}

/// A random regular multiple motion: face `i` carries `d_i ∈ {1, …, max_d}`
/// cars, each making one lap per own period `d_i · T`.
pub fn random_multiple_motion<R: Rng>(rng: &mut R, map: &OrientedMap, max_d: usize) -> Motion {
    let period = qf(rng.gen_range(1..=6), rng.gen_range(1..=2));
    let mut cars = Vec::new();
    for f in 0..map.num_faces() {
        let d = if max_d > 1 && rng.gen_bool(0.3) { rng.gen_range(2..=max_d) } else { 1 };
        let own = period * q(d as i128);
        let len = map.face_len(f) as i128;
        let lap = random_lap(rng, own, len, 6);
        for j in 0..d {
            cars.push(Car {
                face: f,
                breakpoints: shift_lap(&lap, own, q(len), period * q(j as i128)),
                degree: 1,
            });
        }
    }
    Motion { period, cars, stop_corners: vec![] }
}

/// A random reduced word over `F(rank) * ⟨t⟩` with `n` unit `t` letters
/// of exponent sum one (`n` odd).
pub fn random_word<R: Rng>(rng: &mut R, base: BaseGroup, n: usize) -> FreeProductWord {
    let n = if n.is_multiple_of(2) { n + 1 } else { n };
    let mut eps: Vec<i64> = (0..n).map(|i| if i < n.div_ceil(2) { 1 } else { -1 }).collect();
    eps.shuffle(rng);
    let mut w = FreeProductWord::identity(base);
    for e in eps {
        if rng.gen_bool(0.8) {
            let mut elem = base.identity();
            for _ in 0..rng.gen_range(1..=3) {
                let g = base.generator(rng.gen_range(0..base.rank));
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                elem = base.mul(&elem, &base.pow(&g, sign));
            }
            w.push(Syllable::G { copy: 0, elem });
        }
        w.push(Syllable::T { gen: T, exp: e });
    }
    w
}

/// A random comotion: each face gets a nondecreasing piecewise-linear map of
/// degree 0, 1 or 2; with `jumps`, it sometimes waits at a corner.
pub fn random_comotion<R: Rng>(rng: &mut R, map: &OrientedMap, jumps: bool) -> Comotion {
    let grid = 4i128;
    let period = q(rng.gen_range(1..=4));
    let mut cocars = Vec::new();
    for f in 0..map.num_faces() {
        let len = map.face_len(f) as i128;
        let degree = rng.gen_range(0..=2u32);
        let n = rng.gen_range(1..=5usize).min((len * grid) as usize);
        let mut xs: Vec<i128> = (0..len * grid).collect();
        xs.shuffle(rng);
        let mut xs: Vec<i128> = xs.into_iter().take(n).collect();
        xs.sort();
        let span = period * q(degree as i128);
        let t0 = qf(rng.gen_range(0..grid * 4), grid);
        let mut ts: Vec<Q> = (0..n).map(|_| span * qf(rng.gen_range(0..=grid), grid)).collect();
        ts.sort();
        let base = ts[0];
        let ts: Vec<Q> = ts.into_iter().map(|t| t - base + t0).collect();
        let mut pts = Vec::new();
        for i in 0..n {
            let x = qf(xs[i], grid);
            pts.push((x, ts[i]));
            let next = if i + 1 < n { ts[i + 1] } else { t0 + span };
            if jumps && x.is_integer() && next > ts[i] && rng.gen_bool(0.3) {
                pts.push((x, ts[i] + (next - ts[i]) * qf(rng.gen_range(1..=2), 2)));
            }
        }
        cocars.push(Cocar { face: f, breakpoints: pts, degree });
    }
    Comotion { period, cocars }
}

/// Face `f` carries `ds[f]` unit-speed cars spread evenly, each making one
/// lap per own period `ds[f] · T`.
pub fn uniform_multiple_motion(map: &OrientedMap, ds: &[usize], period: Q) -> Motion {
    let mut cars = Vec::new();
    for (f, &d) in ds.iter().enumerate() {
        let len = q(map.face_len(f) as i128);
        for j in 0..d {
            cars.push(Car {
                face: f,
                breakpoints: vec![(q(0), len * qf(j as i128, d as i128))],
                degree: 1,
            });
        }
    }
    Motion { period, cars, stop_corners: vec![] }
}

/// A random nontrivial `p` over copies `0..s` of `F(2)`, with one or two letters.
pub fn random_phi_p<R: Rng>(rng: &mut R, s: u32) -> FreeProductWord {
    let base = BaseGroup::free(2);
    loop {
        let mut p = FreeProductWord::identity(base);
        for _ in 0..rng.gen_range(1..=2) {
            let copy = rng.gen_range(0..s.max(1));
            let g = base.generator(rng.gen_range(0..2));
            let e = if rng.gen_bool(0.5) { g } else { base.inv(&g) };
            p = p.mul(&FreeProductWord::g(base, copy, e));
        }
        if !p.is_identity() && p.in_copies(0, s.max(1) - 1) {
            return p;
        }
    }
}

/// φ-bigon sphere on `ps` plus one more cell chosen so that the interior
/// vertex reads 1. `None` when the extra cell would be trivial.
pub fn closed_phi_bigons(ps: &[FreeProductWord], s: u32) -> Option<HowieDiagram> {
    let base = ps.first()?.base();
    let mut ps = ps.to_vec();
    ps.push(FreeProductWord::identity(base));
    let probe = HowieDiagram::phi_bigons(&ps, s).ok()?;
    let last = 2 * (ps.len() - 1);
    let v = probe.map.vertex_of(last);
    let start = probe.map.vertex_corner_cycle(v).iter().position(|&c| c == last)?;
    let rest = probe.vertex_label(v, start);
    if rest.is_identity() {
        return None;
    }
    *ps.last_mut()? = rest.shift_copies(-1);
    HowieDiagram::phi_bigons(&ps, s).ok()
}
