//! Commands behind the `spheremotion` binary. Each reads its inputs, runs
//! the library checks and returns a [`RunReport`].

use std::path::Path;

use crate::blowup::{blow_up, blow_up_report};
use crate::comotion::{lemma11_check, lemma16_bound, weights};
use crate::error::{Error, Result};
use crate::fuzz::{run_suite, Suite};
use crate::group::BaseGroup;
use crate::io::*;
use crate::map::{OrientedMap, Surface};
use crate::motion::{check_separated_stops, verify_source_sink_collisions, Motion};
use crate::presentation::RelativePresentation;
use crate::report::RunReport;
use crate::rewrite::{
    is_conjugate_to_t_pm_g, is_difficult_case, is_single_letter_case, main_theorem_verdict, reconstruct_relator,
    rewrite,
};
use crate::standard::{standard_motion_am, standard_multiple_motion_bm};
use crate::word::{parse_word, FreeProductWord, T};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn file_name(path: &Path) -> String {
    path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| path.display().to_string())
}

fn load_map(report: &mut RunReport, path: &Path) -> Result<(MapDoc, OrientedMap)> {
    let text = read(path)?;
    report.input(file_name(path), text.as_bytes());
    let doc: MapDoc = from_json(&text)?;
    let map = doc.to_map()?;
    Ok((doc, map))
}

pub fn cmd_validate(path: &Path) -> Result<RunReport> {
    let mut r = RunReport::new("validate");
    let (_, map) = load_map(&mut r, path)?;
    let census = map.census();
    r.result("census", census);
    r.result("map_type", map.map_type().ok());
    r.check(
        "Euler characteristic matches the declared surface",
        census.euler_characteristic == map.surface().euler_characteristic(),
        format!("χ = {}", census.euler_characteristic),
    );
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardFamily {
    Am,
    Bm,
}

#[derive(Debug, Clone)]
pub enum MotionSource<'a> {
    File(&'a Path),
    Standard { family: StandardFamily, m: u32 },
}

pub fn cmd_motion(map_path: &Path, source: MotionSource) -> Result<RunReport> {
    let mut r = RunReport::new("motion");
    let (_, map) = load_map(&mut r, map_path)?;
    let (motion, standard): (Motion, bool) = match source {
        MotionSource::File(p) => {
            let text = read(p)?;
            r.input(file_name(p), text.as_bytes());
            (from_json::<MotionDoc>(&text)?.to_motion(&map)?, false)
        }
        MotionSource::Standard { family: StandardFamily::Am, m } => (standard_motion_am(&map, m)?, true),
        MotionSource::Standard { family: StandardFamily::Bm, m } => (standard_multiple_motion_bm(&map, m)?, true),
    };
    let sphere = map.surface() == Surface::Sphere;
    let collisions = motion.complete_collisions(&map);
    let regular = motion.is_regular(&map);
    r.result("regular", regular);
    r.result("loci", collisions.loci);
    r.result("collisions", &collisions);
    let periodic = motion.check_periodicity(&map);
    r.check("cars on a face satisfy the periodicity condition", periodic.is_ok(), periodic.err().map(|e| e.to_string()).unwrap_or_default());
    let bound = lemma16_bound(&map, &motion)?;
    r.result("multiplicities", &bound.multiplicities);
    r.result("bound", bound.bound);
    let sep = (!motion.stop_corners.is_empty()).then(|| check_separated_stops(&map, &motion, &motion.stop_corners));
    if let Some(sep) = &sep {
        r.check("stops are separated", sep.passes(), sep.violations.join("; "));
    }
    let separated = sep.as_ref().map(|s| s.passes()).unwrap_or(false);
    if regular || separated {
        r.check("loci reach the multiplicity bound", bound.holds, format!("{} ≥ {}", bound.observed, bound.bound));
        if sphere {
            r.check("sphere motion has at least two loci", collisions.loci >= 2, String::new());
        }
    }
    if separated {
        let b = blow_up(&map, &motion, &motion.stop_corners)?;
        let br = blow_up_report(&map, &motion, &b);
        r.result("blow_up", &br);
        r.check(
            "blow-up is regular, keeps χ and has no collisions on new edges",
            br.regular && br.euler_preserved && br.collisions_on_new_edges == 0,
            String::new(),
        );
    }
    if standard {
        let ss = verify_source_sink_collisions(&map, &motion);
        r.check("collisions only at sinks at even and sources at odd times", ss.holds, ss.violations.join("; "));
    }
    Ok(r)
}

pub fn cmd_comotion(map_path: &Path, comotion_path: &Path) -> Result<RunReport> {
    let mut r = RunReport::new("comotion");
    let (_, map) = load_map(&mut r, map_path)?;
    let text = read(comotion_path)?;
    r.input(file_name(comotion_path), text.as_bytes());
    let a = from_json::<ComotionDoc>(&text)?.to_comotion(&map)?;
    let w = weights(&map, &a);
    let chi = map.census().euler_characteristic;
    r.result("loci", a.collisions(&map).loci);
    r.result("weights", &w);
    r.check("weights sum to the Euler characteristic", w.total == chi, format!("{} vs {chi}", w.total));
    if a.is_continuous() {
        let ineq = lemma11_check(&map, &a)?;
        r.check("loci + Σ(1 − deg) ≥ χ", ineq.holds, format!("{} ≥ {}", ineq.lhs, ineq.rhs));
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordCommand {
    Classify,
    Rewrite,
    Criterion { g_is_simple: bool },
}

pub enum WordSource<'a> {
    File(&'a Path),
    Text { base: BaseGroup, text: &'a str },
}

pub fn cmd_word(source: WordSource, command: WordCommand) -> Result<RunReport> {
    let mut r = RunReport::new("word");
    let w: FreeProductWord = match source {
        WordSource::File(p) => {
            let text = read(p)?;
            r.input(file_name(p), text.as_bytes());
            from_json::<WordDoc>(&text)?.to_word()?
        }
        WordSource::Text { base, text } => {
            r.input("word", text.as_bytes());
            parse_word(base, text)?
        }
    };
    r.result("word", w.to_string());
    r.result("cyclic_reduction", w.cyclic_reduce().to_string());
    r.result("exponent_sum", w.exponent_sum(T));
    match command {
        WordCommand::Classify => {
            let single = is_single_letter_case(&w);
            r.result("single_letter", single);
            r.result("difficult", if w.exponent_sum(T) == 1 { Some(is_difficult_case(&w)?) } else { None });
        }
        WordCommand::Rewrite => {
            let rw = rewrite(&w)?;
            let d = &rw.data;
            r.result("inverted", rw.inverted);
            r.result("exponents", rw.shifted.exponents());
            r.result("presentation", PresentationDoc::from_data(d, &[]));
            r.result("relator", d.relator().to_string());
            r.result("difficult", d.s == 0);
            let back = reconstruct_relator(d);
            let target = if rw.inverted { w.inv() } else { w.clone() };
            r.check("reconstructed relator is conjugate to the input", back.is_conjugate(&target), back.to_string());
        }
        WordCommand::Criterion { g_is_simple } => {
            r.result("conjugate_to_t_g", is_conjugate_to_t_pm_g(&w));
            r.result("verdict", main_theorem_verdict(g_is_simple, &w));
        }
    }
    Ok(r)
}

pub fn cmd_diagram(path: &Path, presentation: Option<&Path>, reduce: bool) -> Result<RunReport> {
    let mut r = RunReport::new("diagram");
    let (doc, _) = load_map(&mut r, path)?;
    let d = doc.to_diagram()?;
    let base = d.corner_labels.first().map(|w| w.base()).unwrap_or(BaseGroup::free(1));
    let pres = match presentation {
        Some(p) => {
            let text = read(p)?;
            r.input(file_name(p), text.as_bytes());
            let (data, extra) = from_json::<PresentationDoc>(&text)?.to_data()?;
            let mut pres = data.presentation();
            pres.relators.extend(extra);
            Some(pres)
        }
        None => d.phi.map(|s| RelativePresentation { base, s, generators: vec![T], relators: vec![], phi: true }),
    };
    r.result("census", d.map.census());
    r.result("reducible_pair", d.find_reducible_pair());
    if d.phi.is_some() {
        r.result("adjacent_phi_cells", d.adjacent_phi_cells());
        r.result("phi_reduced", d.is_phi_reduced());
    }
    if let Some(pres) = &pres {
        let rep = d.check_over(pres);
        r.check("labels satisfy the presentation", rep.ok, format!("bad faces {:?}, bad vertices {:?}", rep.bad_faces, rep.bad_vertices));
    }
    if reduce {
        let red = d.reduce();
        r.result("reduced_census", red.map.census());
        r.result("reduced", MapDoc::from_diagram(&red));
        r.check("reduction keeps the Euler characteristic", red.map.census().euler_characteristic == d.map.census().euler_characteristic, String::new());
        if let Some(pres) = &pres {
            r.check("reduced labels satisfy the presentation", red.check_over(pres).ok, String::new());
        }
    }
    Ok(r)
}

pub fn cmd_fuzz(suite: Option<Suite>, seed: u64, cases: u64) -> RunReport {
    let suites: Vec<Suite> = suite.map(|s| vec![s]).unwrap_or(Suite::ALL.to_vec());
    let mut r = RunReport::new("fuzz");
    r.result("seed", seed);
    r.result("cases", cases);
    for s in suites {
        let sub = run_suite(s, seed, cases);
        for (k, v) in sub.results {
            if k != "seed" && k != "cases" {
                r.results.insert(format!("{s}.{k}"), v);
            }
        }
        for mut c in sub.checks {
            c.name = format!("{s}: {}", c.name);
            r.checks.push(c);
        }
    }
    r
}

pub fn cmd_examples_emit(name: &str, out: &Path) -> Result<RunReport> {
    let mut r = RunReport::new(format!("examples emit {name}"));
    std::fs::create_dir_all(out).map_err(|e| Error::Parse(format!("{}: {e}", out.display())))?;
    let mut written = Vec::new();
    for (file, text) in golden_files(name)? {
        let path = out.join(&file);
        std::fs::write(&path, &text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        r.input(file.clone(), text.as_bytes());
        written.push(file);
    }
    r.result("written", written);
    Ok(r)
}
