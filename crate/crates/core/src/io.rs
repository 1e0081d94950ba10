//! JSON documents for maps, diagrams, motions, comotions, words and
//! presentations. Positions on face boundaries are written as a dart and a
//! fraction along it, or as a corner.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::comotion::{Cocar, Comotion};
use crate::contact::Grading;
use crate::diagram::HowieDiagram;
use crate::error::{Error, Result};
use crate::group::BaseGroup;
use crate::map::{Dart, OrientedMap, Sign, Surface};
use crate::motion::{Car, Motion};
use crate::rational::{modulo, q, serde_q, Q};
use crate::rewrite::RelativePresentationData;
use crate::word::{parse_word, FreeProductWord, Syllable};

pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize") + "\n"
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SyllableDoc {
    G { copy: u32, elem: String },
    T { t: u32, exp: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordDoc {
    pub base: BaseGroup,
    pub syllables: Vec<SyllableDoc>,
}

impl WordDoc {
    pub fn from_word(w: &FreeProductWord) -> Self {
        let syllables = w
            .syllables()
            .iter()
            .map(|s| match s {
                Syllable::G { copy, elem } => SyllableDoc::G { copy: *copy, elem: elem.to_string() },
                Syllable::T { gen, exp } => SyllableDoc::T { t: *gen, exp: *exp },
            })
            .collect();
        WordDoc { base: w.base(), syllables }
    }

    pub fn to_word(&self) -> Result<FreeProductWord> {
        let mut out = Vec::new();
        for s in &self.syllables {
            out.push(match s {
                SyllableDoc::G { copy, elem } => Syllable::G { copy: *copy, elem: self.base.parse(elem)? },
                SyllableDoc::T { t, exp } => Syllable::T { gen: *t, exp: *exp },
            });
        }
        Ok(FreeProductWord::from_syllables(self.base, out))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiDoc {
    pub s: u32,
}

/// `map.json`, optionally extended to a diagram or a 2-graded map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    pub surface: Surface,
    pub faces: Vec<Vec<Dart>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<BaseGroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corner_labels: Option<BTreeMap<usize, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_labels: Option<BTreeMap<u32, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrows: Option<BTreeMap<u32, usize>>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub exterior_vertices: BTreeSet<usize>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub exterior_faces: BTreeSet<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub large_faces: Option<BTreeSet<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<PhiDoc>,
}

impl MapDoc {
    pub fn from_map(map: &OrientedMap) -> Self {
        MapDoc {
            surface: map.surface(),
            faces: map.faces().to_vec(),
            base: None,
            corner_labels: None,
            edge_labels: None,
            arrows: None,
            exterior_vertices: BTreeSet::new(),
            exterior_faces: BTreeSet::new(),
            large_faces: None,
            phi: None,
        }
    }

    pub fn to_map(&self) -> Result<OrientedMap> {
        OrientedMap::new(self.surface, self.faces.clone())
    }

    pub fn grading(&self) -> Grading {
        Grading {
            exterior_vertices: self.exterior_vertices.clone(),
            exterior_faces: self.exterior_faces.clone(),
            large_faces: self.large_faces.clone().unwrap_or_default(),
        }
    }

    pub fn from_diagram(d: &HowieDiagram) -> Self {
        let m = &d.map;
        MapDoc {
            base: Some(d.corner_labels[0].base()),
            corner_labels: Some(d.corner_labels.iter().enumerate().map(|(c, w)| (c, w.to_string())).collect()),
            edge_labels: Some(d.edge_labels.iter().map(|(&e, &j)| (e, format!("t_{j}"))).collect()),
            arrows: Some(m.edges().iter().map(|&e| (e, m.dart_of_edge(e, Sign::Plus).unwrap())).collect()),
            exterior_vertices: d.exterior_vertices.clone(),
            exterior_faces: d.exterior_faces.clone(),
            large_faces: d.large_faces.clone(),
            phi: d.phi.map(|s| PhiDoc { s }),
            ..MapDoc::from_map(m)
        }
    }

    pub fn to_diagram(&self) -> Result<HowieDiagram> {
        let map = self.to_map()?;
        let base = self.base.ok_or_else(|| Error::Parse("diagram needs a base group".into()))?;
        let labels = self.corner_labels.as_ref().ok_or_else(|| Error::Parse("diagram needs corner_labels".into()))?;
        let mut corner_labels = Vec::new();
        for c in 0..map.num_darts() {
            let text = labels.get(&c).ok_or_else(|| Error::Parse(format!("corner {c} has no label")))?;
            corner_labels.push(parse_word(base, text)?);
        }
        let mut edge_labels = BTreeMap::new();
        for &e in map.edges() {
            let j = match self.edge_labels.as_ref().and_then(|l| l.get(&e)) {
                None => crate::word::T,
                Some(s) => s
                    .strip_prefix("t_")
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("edge {e}: bad label {s}")))?,
            };
            edge_labels.insert(e, j);
        }
        for (&e, &dart) in self.arrows.iter().flatten() {
            if map.dart_of_edge(e, Sign::Plus) != Some(dart) {
                return Err(Error::Parse(format!("edge {e}: the arrow must follow its + dart")));
            }
        }
        let mut d = HowieDiagram::new(map, corner_labels, edge_labels)?;
        d.exterior_vertices = self.exterior_vertices.clone();
        d.exterior_faces = self.exterior_faces.clone();
        d.large_faces = self.large_faces.clone();
        d.phi = self.phi.as_ref().map(|p| p.s);
        d.validate()?;
        Ok(d)
    }
}

/// A point of a face boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AtDoc {
    Dart {
        dart: usize,
        #[serde(with = "serde_q")]
        lambda: Q,
    },
    Corner {
        corner: usize,
    },
}

fn at_of(map: &OrientedMap, f: usize, x: Q) -> AtDoc {
    let len = map.face_len(f);
    let r = modulo(&x, &q(len as i128));
    let k = r.floor().to_integer() as usize;
    let lambda = r - q(k as i128);
    if lambda == q(0) {
        AtDoc::Corner { corner: map.dart_id(f, k + len - 1) }
    } else {
        AtDoc::Dart { dart: map.dart_id(f, k), lambda }
    }
}

/// Boundary coordinate in `[0, L)`.
fn coord_of(map: &OrientedMap, f: usize, at: &AtDoc) -> Result<Q> {
    let (d, lambda) = match at {
        AtDoc::Dart { dart, lambda } => (*dart, *lambda),
        AtDoc::Corner { corner } => (*corner, q(1)),
    };
    if d >= map.num_darts() || map.face_of(d) != f {
        return Err(Error::Parse(format!("position {d} is not on face {f}")));
    }
    if lambda <= q(0) || lambda > q(1) {
        return Err(Error::Parse("lambda must lie strictly between 0 and 1".into()));
    }
    Ok(modulo(&(q(map.index_in_face(d) as i128) + lambda), &q(map.face_len(f) as i128)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotionPointDoc {
    #[serde(with = "serde_q")]
    pub t: Q,
    pub at: AtDoc,
}

fn one() -> u32 {
    1
}

fn is_one(x: &u32) -> bool {
    *x == 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarDoc {
    pub face: usize,
    pub breakpoints: Vec<MotionPointDoc>,
    /// Laps per own period.
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotionDoc {
    #[serde(with = "serde_q")]
    pub period: Q,
    pub cars: Vec<CarDoc>,
    #[serde(default)]
    pub stop_corners: Vec<usize>,
}

impl MotionDoc {
    /// Pieces covering a full lap or more get extra breakpoints so that
    /// positions can be unwrapped by the shortest forward advance.
    pub fn from_motion(map: &OrientedMap, motion: &Motion) -> Self {
        let cars = motion
            .cars
            .iter()
            .map(|car| {
                let len = q(map.face_len(car.face) as i128);
                let mut pts: Vec<(Q, Q)> = Vec::new();
                for &(t, x) in &car.breakpoints {
                    if let Some(&(t0, x0)) = pts.last() {
                        let parts = ((x - x0) / len).floor().to_integer() + 1;
                        for k in 1..parts {
                            let f = q(k) / q(parts);
                            pts.push((t0 + (t - t0) * f, x0 + (x - x0) * f));
                        }
                    }
                    pts.push((t, x));
                }
                CarDoc {
                    face: car.face,
                    breakpoints: pts.into_iter().map(|(t, x)| MotionPointDoc { t, at: at_of(map, car.face, x) }).collect(),
                    degree: car.degree,
                }
            })
            .collect();
        MotionDoc { period: motion.period, cars, stop_corners: motion.stop_corners.clone() }
    }

    pub fn to_motion(&self, map: &OrientedMap) -> Result<Motion> {
        let mut cars = Vec::new();
        for c in &self.cars {
            if c.face >= map.num_faces() || c.breakpoints.is_empty() {
                return Err(Error::Parse(format!("car on face {} is malformed", c.face)));
            }
            let len = q(map.face_len(c.face) as i128);
            let mut pts: Vec<(Q, Q)> = Vec::new();
            for p in &c.breakpoints {
                let x = coord_of(map, c.face, &p.at)?;
                let x = match pts.last() {
                    None => x,
                    Some(&(_, prev)) => prev + modulo(&(x - prev), &len),
                };
                pts.push((p.t, x));
            }
            cars.push(Car { face: c.face, breakpoints: pts, degree: c.degree });
        }
        let m = Motion { period: self.period, cars, stop_corners: self.stop_corners.clone() };
        m.validate(map)?;
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComotionPointDoc {
    pub at: AtDoc,
    #[serde(with = "serde_q")]
    pub time: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocarDoc {
    pub face: usize,
    pub breakpoints: Vec<ComotionPointDoc>,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComotionDoc {
    #[serde(with = "serde_q")]
    pub period: Q,
    pub cocars: Vec<CocarDoc>,
}

impl ComotionDoc {
    pub fn from_comotion(map: &OrientedMap, a: &Comotion) -> Self {
        let cocars = a
            .cocars
            .iter()
            .map(|c| CocarDoc {
                face: c.face,
                breakpoints: c
                    .breakpoints
                    .iter()
                    .map(|&(x, time)| ComotionPointDoc { at: at_of(map, c.face, x), time })
                    .collect(),
                degree: c.degree,
            })
            .collect();
        ComotionDoc { period: a.period, cocars }
    }

    pub fn to_comotion(&self, map: &OrientedMap) -> Result<Comotion> {
        let mut cocars = Vec::new();
        for c in &self.cocars {
            if c.face >= map.num_faces() {
                return Err(Error::Parse(format!("cocar on unknown face {}", c.face)));
            }
            let mut pts = Vec::new();
            for p in &c.breakpoints {
                pts.push((coord_of(map, c.face, &p.at)?, p.time));
            }
            cocars.push(Cocar { face: c.face, breakpoints: pts, degree: c.degree });
        }
        let a = Comotion { period: self.period, cocars };
        a.validate(map)?;
        Ok(a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub s: u32,
    pub m: i64,
    pub c: WordDoc,
    pub b: Vec<WordDoc>,
    pub a: Vec<WordDoc>,
    #[serde(default)]
    pub extra_relators: Vec<WordDoc>,
}

impl PresentationDoc {
    pub fn from_data(data: &RelativePresentationData, extra: &[FreeProductWord]) -> Self {
        PresentationDoc {
            s: data.s,
            m: data.m,
            c: WordDoc::from_word(&data.c),
            b: data.b.iter().map(WordDoc::from_word).collect(),
            a: data.a.iter().map(WordDoc::from_word).collect(),
            extra_relators: extra.iter().map(WordDoc::from_word).collect(),
        }
    }

    pub fn to_data(&self) -> Result<(RelativePresentationData, Vec<FreeProductWord>)> {
        let words = |v: &[WordDoc]| v.iter().map(WordDoc::to_word).collect::<Result<Vec<_>>>();
        let data = RelativePresentationData {
            base: self.c.base,
            s: self.s,
            m: self.m,
            c: self.c.to_word()?,
            b: words(&self.b)?,
            a: words(&self.a)?,
        };
        data.validate()?;
        Ok((data, words(&self.extra_relators)?))
    }
}

/// Names accepted by [`golden_files`].
pub const GOLDEN_NAMES: [&str; 6] = ["fig1", "example1", "example1-optimized", "example2", "fig10", "torus"];

/// The JSON files of a built-in example as `(file name, contents)` pairs.
pub fn golden_files(name: &str) -> Result<Vec<(String, String)>> {
    use crate::golden::*;
    let fig1 = fig1_map();
    let motion = |m: &Motion| to_json(&MotionDoc::from_motion(&fig1, m));
    let files = match name {
        "fig1" => vec![("fig1.map.json", to_json(&MapDoc::from_map(&fig1)))],
        "example1" => vec![("example1.motion.json", motion(&example1_motion()))],
        "example1-optimized" => vec![("example1-optimized.motion.json", motion(&example1_optimized_motion()))],
        "example2" => vec![
            ("example2.motion.json", motion(&example2_motion())),
            ("example2.comotion.json", to_json(&ComotionDoc::from_comotion(&fig1, &example2_comotion()))),
        ],
        "torus" => vec![("torus.map.json", to_json(&MapDoc::from_map(&torus_map())))],
        "fig10" => {
            let map = fig10_map();
            let b = fig10_blow_up();
            vec![
                ("fig10.map.json", to_json(&MapDoc::from_map(&map))),
                ("fig10.motion.json", to_json(&MotionDoc::from_motion(&map, &fig10_motion()))),
                ("fig10-blowup.map.json", to_json(&MapDoc::from_map(&b.map))),
                ("fig10-blowup.motion.json", to_json(&MotionDoc::from_motion(&b.map, &b.motion))),
                ("fig10.comotion.json", to_json(&ComotionDoc::from_comotion(&b.map, &fig10_comotion()))),
            ]
        }
        other => return Err(Error::Parse(format!("unknown example {other}"))),
    };
    Ok(files.into_iter().map(|(n, s)| (n.to_string(), s)).collect())
}
