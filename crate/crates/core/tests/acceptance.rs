//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. All comparisons are exact; only wall-clock
//! limits carry a tolerance.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spheremotion::blowup::{blow_up, blow_up_report};
use spheremotion::comotion::{chi, induce_comotion, lemma14_total, lemma16_bound, psi, psi_reference_invariance, weights};
use spheremotion::generate::*;
use spheremotion::group::BaseGroup;
use spheremotion::io::{read_json, MapDoc, MotionDoc};
use spheremotion::map::{FaceForm, OrientedMap};
use spheremotion::motion::{check_separated_stops, multiplicities, verify_source_sink_collisions, Motion};
use spheremotion::rational::{modulo, q, qf, Q};
use spheremotion::rewrite::{is_difficult_case, minimize_data, minimize_presentation, reconstruct_relator};
use spheremotion::standard::{standard_motion_am, standard_multiple_motion_bm};
use spheremotion::word::T;

const FAST: Duration = Duration::from_secs(1);
const WEIGHT_BUDGET: Duration = Duration::from_secs(60);
const SEED: u64 = 20240611;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)
}

fn fig1() -> OrientedMap {
    read_json::<MapDoc>(golden("fig1.map.json")).unwrap().to_map().unwrap()
}

fn motion(map: &OrientedMap, file: &str) -> Motion {
    read_json::<MotionDoc>(golden(file)).unwrap().to_motion(map).unwrap()
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if took > limit {
        o.passed = false;
    }
    o.detail = format!("{}; {:.2?} of {:?}", o.detail, took, limit);
    o
}

fn census() -> Outcome {
    timed(FAST, || {
        let c = fig1().census();
        let got = (c.faces, c.vertices, c.edges, c.corners, c.pre_edges, c.euler_characteristic);
        outcome(got == (5, 6, 9, 18, 18, 2), format!("F V E corners pre-edges χ = {got:?}"))
    })
}

fn example1() -> Outcome {
    timed(FAST, || {
        let map = fig1();
        let plain = motion(&map, "example1.motion.json").complete_collisions(&map).loci;
        let fast = motion(&map, "example1-optimized.motion.json").complete_collisions(&map).loci;
        outcome(plain == 3 && fast == 2, format!("loci {plain} and {fast}, bound 2"))
    })
}

fn example2() -> Outcome {
    timed(FAST, || {
        let map = fig1();
        let m2 = motion(&map, "example2.motion.json");
        let m1 = motion(&map, "example1.motion.json");
        let mults = multiplicities(&map, &m2).unwrap();
        let b = lemma16_bound(&map, &m2).unwrap();
        let same = m2.complete_collisions(&map).loci_set() == m1.complete_collisions(&map).loci_set();
        outcome(
            mults == [1, 2, 1, 1, 1] && b.bound == 3 && b.observed == 3 && same,
            format!("multiplicities {mults:?}, bound {}, observed {}, same points as the single motion {same}", b.bound, b.observed),
        )
    })
}

fn weight_identity() -> Outcome {
    timed(WEIGHT_BUDGET, || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut bad = 0;
        for case in 0..200 {
            let torus = case % 2 == 1;
            let map = if torus {
                let moves = rng.gen_range(0..=6);
                random_torus_map(&mut rng, moves)
            } else {
                let faces = rng.gen_range(1..=6);
                random_sphere_map(&mut rng, faces, 5)
            };
            let a = random_comotion(&mut rng, &map, case % 3 == 0);
            let want = if torus { 0 } else { 2 };
            if weights(&map, &a).total != want {
                bad += 1;
            }
        }
        outcome(bad == 0, format!("100 sphere and 100 torus comotions, {bad} mismatches"))
    })
}

fn generic_weights() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let mut bad = 0;
    for case in 0..120 {
        let map = if case % 2 == 0 { random_sphere_map(&mut rng, 4, 5) } else { random_torus_map(&mut rng, 4) };
        let n = map.num_darts();
        let mut table = || (0..n * n).map(|_| qf(rng.gen_range(-50..=50), rng.gen_range(1..=9))).collect::<Vec<Q>>();
        let (g, h) = (table(), table());
        let total = lemma14_total(&map, |a, b| g[a * n + b], |a, b| h[a * n + b]);
        if total != q(map.census().euler_characteristic as i128) {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("120 maps with random rational g, h, {bad} mismatches"))
}

/// Laps wound by walking forward through the points and back to the first.
fn winding(ts: &[Q], period: Q) -> u32 {
    let total: Q = (0..ts.len()).map(|i| modulo(&(ts[(i + 1) % ts.len()] - ts[i]), &period)).sum();
    (total / period).to_integer() as u32
}

fn psi_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let mut bad = Vec::new();
    for case in 0..300 {
        let period = qf(rng.gen_range(1..=8), rng.gen_range(1..=3));
        let k = rng.gen_range(1..=6);
        let mut pt = || qf(rng.gen_range(-30..30), rng.gen_range(1..=4));
        let ts: Vec<Q> = if case % 5 == 0 { vec![pt(); k] } else { (0..k).map(|_| pt()).collect() };
        let refs: Vec<Q> = (0..20).map(|_| pt()).collect();
        let v = psi(&ts, period, q(0));
        let equal = ts.iter().all(|t| modulo(t, &period) == modulo(&ts[0], &period));
        if (v == 0) != equal || !psi_reference_invariance(&ts, period, &refs) || v != winding(&ts, period) {
            bad.push(case);
        }
        let (a, b) = (pt(), pt());
        if modulo(&a, &period) != modulo(&b, &period) {
            let chi_sum = chi(a, b, period, q(0)) + chi(b, a, period, q(0)) + chi(a, b, period, q(0)) + chi(b, a, period, q(0));
            if chi_sum != 2 || psi(&[a, b, a, b], period, q(0)) != 2 {
                bad.push(case);
            }
        }
    }
    outcome(bad.is_empty(), format!("300 tuples with 20 references each, failures {bad:?}"))
}

/// A sphere of type `B_m` (or `A_m` when `s = 1`) whose first profile is
/// `((+)^3(−)^3)^s`.
fn block_sphere(m: u32, s: u32) -> OrientedMap {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 100 * m as u64 + s as u64);
    loop {
        if let Some(x) = glue_sphere(&mut rng, &[profile_blocks(2, 2, s), profile_b(m), profile_c(m)]) {
            if x.map_type().map(|t| t.m == Some(m)).unwrap_or(false) {
                return x;
            }
        }
    }
}

fn block_face(map: &OrientedMap, s: u32) -> Option<(usize, usize)> {
    let want = if s == 1 { FaceForm::D { k: 2, l: 2 } } else { FaceForm::Blocks { k: 2, l: 2, s } };
    let faces = map.map_type().ok()?.faces;
    (0..faces.len()).find(|&f| faces[f].0 == want).map(|f| (f, faces[f].1))
}

/// Occupancy of block-face corners by the lifted cars equals the occupancy
/// of the projected corners by the single car on a one-block face.
fn lift_matches_single_block(m: u32) -> bool {
    const S: u32 = 4;
    let (big, small) = (block_sphere(m, S), block_sphere(m, 1));
    let (Ok(lifted), Ok(single)) = (standard_multiple_motion_bm(&big, m), standard_motion_am(&small, m)) else { return false };
    let (Some((b, off_b)), Some((a, off_a))) = (block_face(&big, S), block_face(&small, 1)) else { return false };
    let window = lifted.period * q(S as i128);
    let n = big.face_len(b);
    (0..n).all(|i| {
        let j = (i + n - off_b) % n;
        let cb = big.dart_id(b, i);
        let ca = small.dart_id(a, off_a + j % 6);
        let occ = lifted.corner_occupancy(&big, cb, window);
        !occ.is_empty() && occ == single.corner_occupancy(&small, ca, window)
    })
}

/// With `m = 0` every block-face car moves at speed 3 and sits on a
/// vertex at time 0.
fn uniform_when_m_is_zero() -> bool {
    let map = block_sphere(0, 4);
    let Some((b, _)) = block_face(&map, 4) else { return false };
    let Ok(motion) = standard_multiple_motion_bm(&map, 0) else { return false };
    let cars = motion.cars_on(b);
    cars.len() == 4
        && cars.into_iter().all(|j| {
            let pieces = motion.pieces(&map, j, motion.car_period(j));
            pieces.iter().all(|p| p.x1 - p.x0 == q(3) * (p.t1 - p.t0)) && motion.position(&map, j, q(0)).is_integer()
        })
}

fn standard_motions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let (mut am, mut bm) = (0, 0);
    for case in 0..60u32 {
        let m = case % 3;
        let map = random_am_map(&mut rng, m, 1 + case as usize % 5);
        let mo = standard_motion_am(&map, m).unwrap();
        if check_separated_stops(&map, &mo, &mo.stop_corners).passes() && verify_source_sink_collisions(&map, &mo).holds {
            am += 1;
        }
        let map = random_bm_map(&mut rng, m, 1 + case as usize % 4);
        let mo = standard_multiple_motion_bm(&map, m).unwrap();
        if check_separated_stops(&map, &mo, &mo.stop_corners).passes() && verify_source_sink_collisions(&map, &mo).holds {
            bm += 1;
        }
    }
    let lifts = [0, 1, 2].map(lift_matches_single_block);
    let uniform = uniform_when_m_is_zero();
    outcome(
        am == 60 && bm == 60 && lifts == [true; 3] && uniform,
        format!("A_m {am}/60, B_m {bm}/60, block timetable m=0,1,2 {lifts:?}, speed 3 at m=0 {uniform}"),
    )
}

fn blow_ups() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let mut bad = Vec::new();
    for case in 0..60u32 {
        let m = case % 3;
        let map = if case % 2 == 0 { random_am_map(&mut rng, m, 1 + case as usize % 4) } else { random_bm_map(&mut rng, m, 1 + case as usize % 3) };
        let mo = if case % 2 == 0 { standard_motion_am(&map, m) } else { standard_multiple_motion_bm(&map, m) }.unwrap();
        if !check_separated_stops(&map, &mo, &mo.stop_corners).passes() {
            bad.push(case);
            continue;
        }
        let b = blow_up(&map, &mo, &mo.stop_corners).unwrap();
        let r = blow_up_report(&map, &mo, &b);
        if !(r.regular && r.euler_preserved && r.collisions_on_new_edges == 0 && r.loci_after >= 2) {
            bad.push(case);
        }
    }
    outcome(bad.is_empty(), format!("60 separated-stops motions, failures {bad:?}"))
}

fn rewriting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let (mut trips, mut fixed, mut agree, mut small) = (0, 0, 0, 0);
    let cases = 600;
    for _ in 0..cases {
        let n = 1 + 2 * rng.gen_range(0..=5);
        let rank = rng.gen_range(1..=3);
        let w = random_word(&mut rng, BaseGroup::free(rank), n);
        let d = minimize_presentation(&w).unwrap();
        let back = reconstruct_relator(&d);
        trips += usize::from(back.cyclic_reduce().is_rotation_of(&w.cyclic_reduce()) || back.is_conjugate(&w));
        fixed += usize::from(minimize_data(&d) == d);
        let letters = w.cyclic_reduce().epsilon_sequence(T).len();
        if (3..=9).contains(&letters) {
            small += 1;
            agree += usize::from(is_difficult_case(&w).unwrap() == (d.s == 0));
        }
    }
    outcome(
        trips == cases && fixed == cases && agree == small,
        format!("{cases} words: round trips {trips}, fixpoints {fixed}, difficult-case agreement {agree}/{small}"),
    )
}

fn bridge() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    let mut bad = Vec::new();
    let mut multi = 0;
    for case in 0..60 {
        let faces = rng.gen_range(1..=5);
        let map = random_sphere_map(&mut rng, faces, 5);
        let mo = random_multiple_motion(&mut rng, &map, 3);
        let mults = multiplicities(&map, &mo).unwrap();
        multi += usize::from(mults.iter().any(|&d| d > 1));
        let ok = mo.is_regular(&map)
            && induce_comotion(&map, &mo)
                .map(|a| {
                    a.collisions(&map).loci_set() == mo.complete_collisions(&map).loci_set()
                        && a.cocars.iter().all(|c| c.degree as usize == mults[c.face])
                })
                .unwrap_or(false);
        if !ok {
            bad.push(case);
        }
    }
    outcome(bad.is_empty(), format!("60 regular multiple motions ({multi} with a face of multiplicity > 1), failures {bad:?}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("five-face sphere census", census),
        ("single-car collision counts", example1),
        ("multiple motion bound is tight", example2),
        ("weight identity on sphere and torus", weight_identity),
        ("generic weights cancel to χ", generic_weights),
        ("ψ properties", psi_properties),
        ("standard motions and block lifts", standard_motions),
        ("blow-up of separated stops", blow_ups),
        ("rewriting round trip", rewriting),
        ("motion and comotion loci agree", bridge),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        failed += usize::from(!o.passed);
        println!("criterion {:>2} {}: {name} ({})", i + 1, if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
