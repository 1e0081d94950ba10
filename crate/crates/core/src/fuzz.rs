//! Seeded fuzz campaigns over the invariant suites. Case `i` draws from
//! its own ChaCha stream, so a run is reproducible from `(seed, cases)`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::comotion::{induce_comotion, lemma11_check, lemma14_total, lemma16_bound, weights};
use crate::error::{Error, Result};
use crate::generate::*;
use crate::group::BaseGroup;
use crate::map::OrientedMap;
use crate::presentation::RelativePresentation;
use crate::rational::{qf, Q};
use crate::report::RunReport;
use crate::rewrite::{is_difficult_case, minimize_data, minimize_presentation, reconstruct_relator};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Weights,
    Collisions,
    Rewriting,
    Diagrams,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Weights, Suite::Collisions, Suite::Rewriting, Suite::Diagrams];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Weights => "weights",
            Suite::Collisions => "collisions",
            Suite::Rewriting => "rewriting",
            Suite::Diagrams => "diagrams",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

/// Tally of one invariant over all cases.
#[derive(Debug, Default, Serialize)]
struct Tally {
    name: &'static str,
    checked: usize,
    failures: Vec<u64>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, ..Default::default() }
    }

    fn record(&mut self, case: u64, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures.push(case);
        }
    }

    fn emit(self, report: &mut RunReport) {
        let mut detail = format!("{} checked", self.checked);
        if !self.failures.is_empty() {
            let shown: Vec<String> = self.failures.iter().take(10).map(|c| c.to_string()).collect();
            detail += &format!(", {} failed (cases {})", self.failures.len(), shown.join(", "));
        }
        report.check(self.name, self.failures.is_empty() && self.checked > 0, detail);
    }
}

pub fn run_suite(suite: Suite, seed: u64, cases: u64) -> RunReport {
    let mut report = RunReport::new(format!("fuzz {suite}"));
    report.result("seed", seed);
    report.result("cases", cases);
    match suite {
        Suite::Weights => weights_suite(&mut report, seed, cases),
        Suite::Collisions => collisions_suite(&mut report, seed, cases),
        Suite::Rewriting => rewriting_suite(&mut report, seed, cases),
        Suite::Diagrams => diagrams_suite(&mut report, seed, cases),
    }
    report
}

/// Sphere maps on even cases, torus maps on odd ones.
pub fn fuzz_map(rng: &mut ChaCha8Rng, case: u64) -> OrientedMap {
    if case.is_multiple_of(2) {
        let faces = rng.gen_range(1..=6);
        random_sphere_map(rng, faces, 5)
    } else {
        let moves = rng.gen_range(0..=6);
        random_torus_map(rng, moves)
    }
}

fn weights_suite(report: &mut RunReport, seed: u64, cases: u64) {
    let mut identity = Tally::new("weight total equals Euler characteristic");
    let mut generic = Tally::new("generic corner weights telescope to Euler characteristic");
    let mut inequality = Tally::new("continuous comotions satisfy the vertex inequality");
    let (mut sphere, mut torus) = (0u64, 0u64);
    for case in 0..cases {
        let mut rng = case_rng(seed, case);
        let map = fuzz_map(&mut rng, case);
        let chi = map.census().euler_characteristic;
        if case % 2 == 0 {
            sphere += 1;
        } else {
            torus += 1;
        }
        let a = random_comotion(&mut rng, &map, case % 4 == 2);
        let w = weights(&map, &a);
        identity.record(case, w.total == chi);
        if a.is_continuous() {
            inequality.record(case, lemma11_check(&map, &a).map(|r| r.holds).unwrap_or(false));
        }
        let n = map.num_darts();
        let table = |rng: &mut ChaCha8Rng| -> Vec<Q> { (0..n * n).map(|_| qf(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect() };
        let (g, h) = (table(&mut rng), table(&mut rng));
        let total = lemma14_total(&map, |a, b| g[a * n + b], |a, b| h[a * n + b]);
        generic.record(case, total == Q::from_integer(chi as i128));
    }
    report.result("sphere_cases", sphere);
    report.result("torus_cases", torus);
    identity.emit(report);
    generic.emit(report);
    inequality.emit(report);
}

fn collisions_suite(report: &mut RunReport, seed: u64, cases: u64) {
    let mut lower = Tally::new("regular sphere motions have at least two collision loci");
    let mut bridge = Tally::new("induced comotions share the motion's loci and degrees");
    let mut bound = Tally::new("multiple motions meet the multiplicity bound");
    let mut min_loci = usize::MAX;
    for case in 0..cases {
        let mut rng = case_rng(seed, case);
        let faces = rng.gen_range(1..=6);
        let map = random_sphere_map(&mut rng, faces, 5);
        let single = random_multiple_motion(&mut rng, &map, 1);
        let loci = single.complete_collisions(&map).loci;
        min_loci = min_loci.min(loci);
        lower.record(case, single.is_regular(&map) && loci >= 2);
        let multi = random_multiple_motion(&mut rng, &map, 3);
        let ok = match induce_comotion(&map, &multi) {
            Ok(a) => {
                let mults = crate::motion::multiplicities(&map, &multi).unwrap_or_default();
                a.collisions(&map).loci_set() == multi.complete_collisions(&map).loci_set()
                    && a.cocars.iter().all(|c| mults.get(c.face) == Some(&(c.degree as usize)))
            }
            Err(_) => false,
        };
        bridge.record(case, ok);
        bound.record(case, lemma16_bound(&map, &multi).map(|r| r.holds).unwrap_or(false));
    }
    if cases > 0 {
        report.result("min_loci", min_loci);
    }
    lower.emit(report);
    bridge.emit(report);
    bound.emit(report);
}

fn rewriting_suite(report: &mut RunReport, seed: u64, cases: u64) {
    let mut round_trip = Tally::new("reconstructed relator is conjugate to the input");
    let mut fixpoint = Tally::new("minimization is a fixpoint");
    let mut difficult = Tally::new("difficult case agrees with s = 0");
    let mut smallest_s = 0usize;
    for case in 0..cases {
        let mut rng = case_rng(seed, case);
        let n = 1 + 2 * rng.gen_range(0..=4);
        let rank = rng.gen_range(1..=3);
        let w = random_word(&mut rng, BaseGroup::free(rank), n);
        let Ok(data) = minimize_presentation(&w) else {
            round_trip.record(case, false);
            continue;
        };
        if data.s == 0 {
            smallest_s += 1;
        }
        round_trip.record(case, reconstruct_relator(&data).is_conjugate(&w));
        fixpoint.record(case, minimize_data(&data) == data);
        let letters = w.cyclic_reduce().epsilon_sequence(crate::word::T).len();
        if (3..=9).contains(&letters) {
            difficult.record(case, is_difficult_case(&w).map(|d| d == (data.s == 0)).unwrap_or(false));
        }
    }
    report.result("s_zero_cases", smallest_s);
    round_trip.emit(report);
    fixpoint.emit(report);
    difficult.emit(report);
}

fn diagrams_suite(report: &mut RunReport, seed: u64, cases: u64) {
    let mut labelled = Tally::new("closed φ-bigon spheres are diagrams over the φ-presentation");
    let mut euler = Tally::new("reduction keeps a sphere");
    let mut valid = Tally::new("reduction keeps a diagram over the φ-presentation");
    let mut reduced = Tally::new("reduction ends φ-reduced and reduced");
    let mut cells_removed = 0usize;
    for case in 0..cases {
        let mut rng = case_rng(seed, case);
        let s = rng.gen_range(1..=2);
        let n = rng.gen_range(1..=7);
        let ps: Vec<_> = (0..n).map(|_| random_phi_p(&mut rng, s)).collect();
        let Some(d) = closed_phi_bigons(&ps, s) else { continue };
        let pres = RelativePresentation {
            base: BaseGroup::free(2),
            s,
            generators: vec![crate::word::T],
            relators: vec![],
            phi: true,
        };
        labelled.record(case, d.check_over(&pres).ok);
        let r = d.reduce();
        cells_removed += d.map.num_faces() - r.map.num_faces();
        euler.record(case, r.map.census().euler_characteristic == 2);
        valid.record(case, r.check_over(&pres).ok);
        let two = r.map.num_faces() == 2;
        reduced.record(case, two || (r.is_phi_reduced() && r.find_reducible_pair().is_none()));
    }
    report.result("cells_removed", cells_removed);
    labelled.emit(report);
    euler.emit(report);
    valid.emit(report);
    reduced.emit(report);
}
