//! Howie diagrams: maps whose corners carry elements of `H` and whose edges
//! carry stable letters, with exterior marks, φ-cells and 2-gradings.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::{Dart, OrientedMap, Sign, VertexClass};
use crate::motion::Motion;
use crate::presentation::{phi_cell_of, RelativePresentation};
use crate::word::{FreeProductWord, T};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HowieDiagram {
    pub map: OrientedMap,
    /// `λ(c)` for every corner, indexed like darts (corner `i` ends dart `i`).
    pub corner_labels: Vec<FreeProductWord>,
    /// Stable-letter index of every edge; the arrow points along the `+` dart.
    pub edge_labels: BTreeMap<u32, u32>,
    pub exterior_vertices: BTreeSet<usize>,
    pub exterior_faces: BTreeSet<usize>,
    /// `P = G^(0) * … * G^(s-1)` when the diagram is read over a φ-presentation.
    pub phi: Option<u32>,
    /// Large faces of a 2-grading.
    pub large_faces: Option<BTreeSet<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub bad_faces: Vec<usize>,
    pub bad_vertices: Vec<usize>,
    pub ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduciblePair {
    pub faces: (usize, usize),
    pub edge: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhiMove {
    Merged(HowieDiagram),
    Reducible(ReduciblePair),
}

impl HowieDiagram {
    pub fn new(
        map: OrientedMap,
        corner_labels: Vec<FreeProductWord>,
        edge_labels: BTreeMap<u32, u32>,
    ) -> Result<Self> {
        let d = HowieDiagram {
            map,
            corner_labels,
            edge_labels,
            exterior_vertices: BTreeSet::new(),
            exterior_faces: BTreeSet::new(),
            phi: None,
            large_faces: None,
        };
        d.validate()?;
        Ok(d)
    }

    /// Labels every edge with the main letter `t`.
    pub fn with_t_edges(map: OrientedMap, corner_labels: Vec<FreeProductWord>) -> Result<Self> {
        let edges = map.edges().iter().map(|&e| (e, T)).collect();
        Self::new(map, corner_labels, edges)
    }

    /// The sphere of `n = ps.len() ≥ 2` φ-cells `t⁻¹ p_i t (p_i^φ)⁻¹` glued
    /// around two vertices; the vertex where the `p_i` meet is exterior.
    pub fn phi_bigons(ps: &[FreeProductWord], s: u32) -> Result<Self> {
        let n = ps.len() as u32;
        if n < 2 {
            return Err(Error::Diagram("need at least two φ-cells".into()));
        }
        let faces = (0..n).map(|i| vec![Dart::plus(i), Dart::minus((i + 1) % n)]).collect();
        let map = OrientedMap::new(crate::map::Surface::Sphere, faces)?;
        let labels = ps.iter().flat_map(|p| [p.shift_copies(1).inv(), p.clone()]).collect();
        let mut d = Self::with_t_edges(map, labels)?;
        d.phi = Some(s);
        d.exterior_vertices.insert(d.map.vertex_of(1));
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.corner_labels.len() != self.map.num_darts() {
            return Err(Error::Diagram(format!(
                "{} corner labels for {} corners",
                self.corner_labels.len(),
                self.map.num_darts()
            )));
        }
        if let Some(c) = self.corner_labels.iter().position(|w| w.has_t()) {
            return Err(Error::Diagram(format!("corner {c} label is not in H")));
        }
        for &e in self.map.edges() {
            if !self.edge_labels.contains_key(&e) {
                return Err(Error::Diagram(format!("edge {e} has no label")));
            }
        }
        if self.exterior_vertices.iter().any(|&v| v >= self.map.num_vertices())
            || self.exterior_faces.iter().any(|&f| f >= self.map.num_faces())
            || self.large_faces.iter().flatten().any(|&f| f >= self.map.num_faces())
        {
            return Err(Error::Diagram("mark refers to a missing vertex or face".into()));
        }
        Ok(())
    }

    fn base(&self) -> crate::group::BaseGroup {
        self.corner_labels[0].base()
    }

    pub fn is_interior_vertex(&self, v: usize) -> bool {
        !self.exterior_vertices.contains(&v)
    }

    pub fn is_interior_face(&self, f: usize) -> bool {
        !self.exterior_faces.contains(&f)
    }

    /// Product of the corner labels at `v` read clockwise from the
    /// `start`-th corner of the anticlockwise cycle.
    pub fn vertex_label(&self, v: usize, start: usize) -> FreeProductWord {
        let cyc = self.map.vertex_corner_cycle(v);
        let n = cyc.len();
        let mut w = FreeProductWord::identity(self.base());
        for i in 0..n {
            w = w.mul(&self.corner_labels[cyc[(start + n - i) % n]]);
        }
        w
    }

    fn edge_letter(&self, dart: usize) -> FreeProductWord {
        let d = self.map.dart(dart);
        FreeProductWord::t_pow(self.base(), self.edge_labels[&d.edge], d.dir.as_i8() as i64)
    }

    /// Edge letters (inverted against the arrow) alternating with corner
    /// labels, anticlockwise from the `start`-th dart of face `f`.
    pub fn face_label(&self, f: usize, start: usize) -> FreeProductWord {
        let n = self.map.face_len(f);
        let mut w = FreeProductWord::identity(self.base());
        for i in 0..n {
            let d = self.map.dart_id(f, start + i);
            w = w.mul(&self.edge_letter(d)).mul(&self.corner_labels[d]);
        }
        w
    }

    /// Interior faces must read relators (or φ-relators) and interior
    /// vertices must read `1`.
    pub fn check_over(&self, pres: &RelativePresentation) -> DiagramReport {
        let bad_faces: Vec<usize> = (0..self.map.num_faces())
            .filter(|&f| self.is_interior_face(f) && !pres.accepts_face_label(&self.face_label(f, 0)))
            .collect();
        let bad_vertices: Vec<usize> = (0..self.map.num_vertices())
            .filter(|&v| self.is_interior_vertex(v) && !self.vertex_label(v, 0).is_identity())
            .collect();
        let ok = bad_faces.is_empty() && bad_vertices.is_empty();
        DiagramReport { bad_faces, bad_vertices, ok }
    }

    /// Two distinct interior faces across `edge` whose labels, read from
    /// the edge, are mutually inverse.
    pub fn is_reducible_across(&self, edge: u32) -> bool {
        let d1 = self.map.dart_of_edge(edge, Sign::Plus).unwrap();
        let d2 = self.map.twin(d1);
        let (f1, f2) = (self.map.face_of(d1), self.map.face_of(d2));
        if f1 == f2 || !self.is_interior_face(f1) || !self.is_interior_face(f2) {
            return false;
        }
        let l1 = self.face_label(f1, self.map.index_in_face(d1));
        let l2 = self.face_label(f2, self.map.index_in_face(d2));
        let e = self.edge_letter(d1);
        l2 == e.inv().mul(&l1.inv()).mul(&e)
    }

    pub fn find_reducible_pair(&self) -> Option<ReduciblePair> {
        self.map.edges().iter().find(|&&e| self.is_reducible_across(e)).map(|&e| {
            let d = self.map.dart_of_edge(e, Sign::Plus).unwrap();
            ReduciblePair { faces: (self.map.face_of(d), self.map.face_of(self.map.twin(d))), edge: e }
        })
    }

    /// `p` when interior face `f` is a φ-cell `t⁻¹ p t (p^φ)⁻¹`.
    pub fn phi_cell(&self, f: usize) -> Option<FreeProductWord> {
        let s = self.phi?;
        if !self.is_interior_face(f) {
            return None;
        }
        phi_cell_of(&self.face_label(f, 0), s)
    }

    /// Edges shared by two distinct φ-cells.
    pub fn adjacent_phi_cells(&self) -> Vec<u32> {
        self.map
            .edges()
            .iter()
            .copied()
            .filter(|&e| {
                let d = self.map.dart_of_edge(e, Sign::Plus).unwrap();
                let (f1, f2) = (self.map.face_of(d), self.map.face_of(self.map.twin(d)));
                f1 != f2 && self.phi_cell(f1).is_some() && self.phi_cell(f2).is_some()
            })
            .collect()
    }

    pub fn is_phi_reduced(&self) -> bool {
        self.adjacent_phi_cells().is_empty()
    }

    /// Removes an edge shared by two φ-cells, merging them; a mutually
    /// inverse pair is returned as a reducible pair instead.
    pub fn phi_reduce_move(&self, edge: u32) -> Result<PhiMove> {
        if !self.adjacent_phi_cells().contains(&edge) {
            return Err(Error::Diagram(format!("edge {edge} does not join two φ-cells")));
        }
        if self.is_reducible_across(edge) {
            let d = self.map.dart_of_edge(edge, Sign::Plus).unwrap();
            let faces = (self.map.face_of(d), self.map.face_of(self.map.twin(d)));
            return Ok(PhiMove::Reducible(ReduciblePair { faces, edge }));
        }
        self.remove_edge(edge).map(PhiMove::Merged)
    }

    /// Merges the two distinct faces on either side of `edge`.
    pub fn remove_edge(&self, edge: u32) -> Result<HowieDiagram> {
        let m = &self.map;
        let d = m.dart_of_edge(edge, Sign::Plus).ok_or(Error::Diagram(format!("no edge {edge}")))?;
        let d2 = m.twin(d);
        let (f1, f2) = (m.face_of(d), m.face_of(d2));
        if f1 == f2 {
            return Err(Error::Diagram(format!("edge {edge} has the same face on both sides")));
        }
        let mut labels: BTreeMap<Dart, FreeProductWord> =
            (0..m.num_darts()).map(|c| (m.dart(c), self.corner_labels[c].clone())).collect();
        // corners at each end of the edge fuse, in clockwise order
        let fuse = [(m.prev(d2), d), (m.prev(d), d2)];
        for (a, b) in fuse {
            let w = self.corner_labels[a].mul(&self.corner_labels[b]);
            labels.insert(m.dart(a), w);
        }
        let rotated = |f: usize, x: usize| -> Vec<Dart> {
            let i = m.index_in_face(x);
            (1..m.face_len(f)).map(|k| m.dart(m.dart_id(f, i + k))).collect()
        };
        let mut merged = rotated(f1, d);
        merged.extend(rotated(f2, d2));
        let mut faces = Vec::new();
        let mut face_map = vec![usize::MAX; m.num_faces()];
        for f in 0..m.num_faces() {
            if f == f2 {
                continue;
            }
            face_map[f] = faces.len();
            faces.push(if f == f1 { merged.clone() } else { m.faces()[f].clone() });
        }
        face_map[f2] = face_map[f1];
        let map = OrientedMap::new(m.surface(), faces)?;
        self.transfer(map, &labels, |f| face_map[f], &[d, d2])
    }

    /// Rebuilds the diagram on `map`, carrying labels by dart and marks
    /// through surviving corners.
    fn transfer(
        &self,
        map: OrientedMap,
        labels: &BTreeMap<Dart, FreeProductWord>,
        face_map: impl Fn(usize) -> usize,
        dropped: &[usize],
    ) -> Result<HowieDiagram> {
        let old = &self.map;
        let new_id: BTreeMap<Dart, usize> = (0..map.num_darts()).map(|c| (map.dart(c), c)).collect();
        let corner_labels = (0..map.num_darts()).map(|c| labels[&map.dart(c)].clone()).collect();
        let mut exterior_vertices = BTreeSet::new();
        for &v in &self.exterior_vertices {
            for &c in old.vertex_corner_cycle(v) {
                if dropped.contains(&c) {
                    continue;
                }
                if let Some(&nc) = new_id.get(&old.dart(c)) {
                    exterior_vertices.insert(map.vertex_of(nc));
                }
            }
        }
        let edge_labels = map.edges().iter().map(|e| (*e, self.edge_labels[e])).collect();
        let d = HowieDiagram {
            map,
            corner_labels,
            edge_labels,
            exterior_vertices,
            exterior_faces: self.exterior_faces.iter().map(|&f| face_map(f)).collect(),
            phi: self.phi,
            large_faces: self.large_faces.as_ref().map(|s| s.iter().map(|&f| face_map(f)).collect()),
        };
        d.validate()?;
        Ok(d)
    }

    /// Cuts out a reducible pair and glues the two remaining boundary paths
    /// together.
    pub fn remove_reducible_pair(&self, pair: ReduciblePair) -> Result<HowieDiagram> {
        if !self.is_reducible_across(pair.edge) {
            return Err(Error::Diagram(format!("edge {} is not between a reducible pair", pair.edge)));
        }
        let m = &self.map;
        let d = m.dart_of_edge(pair.edge, Sign::Plus).unwrap();
        let d2 = m.twin(d);
        let (f1, f2) = (m.face_of(d), m.face_of(d2));
        let k = m.face_len(f1);
        if k != m.face_len(f2) || k < 2 {
            return Err(Error::Diagram("reducible pair cannot be removed".into()));
        }
        let a: Vec<usize> = (1..k).map(|i| m.dart_id(f1, m.index_in_face(d) + i)).collect();
        let b: Vec<usize> = (1..k).map(|i| m.dart_id(f2, m.index_in_face(d2) + i)).collect();
        let mut rename: BTreeMap<Dart, Dart> = BTreeMap::new();
        for i in 0..k - 1 {
            let (x, y) = (m.twin(a[i]), m.twin(b[k - 2 - i]));
            let (fx, fy) = (m.face_of(x), m.face_of(y));
            if [f1, f2].contains(&fx) || [f1, f2].contains(&fy) {
                return Err(Error::Diagram("reducible pair shares another edge".into()));
            }
            let (dx, dy) = (m.dart(x), m.dart(y));
            if dx.dir == dy.dir || self.edge_labels[&dx.edge] != self.edge_labels[&dy.edge] {
                return Err(Error::Diagram("boundary paths do not match".into()));
            }
            rename.insert(dy, Dart::new(dx.edge, dy.dir));
        }
        let mut labels = BTreeMap::new();
        let mut faces = Vec::new();
        let mut face_map = vec![usize::MAX; m.num_faces()];
        for f in 0..m.num_faces() {
            if f == f1 || f == f2 {
                continue;
            }
            face_map[f] = faces.len();
            let darts: Vec<Dart> = m
                .face_darts(f)
                .map(|c| {
                    let dart = m.dart(c);
                    let nd = rename.get(&dart).copied().unwrap_or(dart);
                    labels.insert(nd, self.corner_labels[c].clone());
                    nd
                })
                .collect();
            faces.push(darts);
        }
        if faces.is_empty() {
            return Err(Error::Diagram("removing the pair leaves no faces".into()));
        }
        let map = OrientedMap::new(m.surface(), faces)?;
        let dropped: Vec<usize> = m.face_darts(f1).chain(m.face_darts(f2)).collect();
        let mut out = self.transfer(map, &labels, |f| face_map[f], &dropped)?;
        // a removed cell could carry a mark only by being exterior
        out.exterior_faces.retain(|&f| f != usize::MAX);
        if let Some(l) = out.large_faces.as_mut() {
            l.retain(|&f| f != usize::MAX);
        }
        out.validate()?;
        Ok(out)
    }

    /// Applies φ-moves and removes reducible pairs until neither applies or
    /// the diagram would vanish.
    pub fn reduce(&self) -> HowieDiagram {
        let mut d = self.clone();
        loop {
            if let Some(p) = d.find_reducible_pair() {
                match d.remove_reducible_pair(p) {
                    Ok(next) => {
                        d = next;
                        continue;
                    }
                    Err(_) => return d,
                }
            }
            let Some(&e) = d.adjacent_phi_cells().first() else {
                return d;
            };
            match d.phi_reduce_move(e) {
                Ok(PhiMove::Merged(next)) => d = next,
                _ => return d,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub vertex: usize,
    pub class: String,
    /// The vertex label that a collision would force to be trivial.
    pub equation: String,
    pub holds_in_h: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionAudit {
    pub entries: Vec<AuditEntry>,
    /// Edge loci strictly inside the interior part of the diagram.
    pub interior_edge_loci: Vec<u32>,
    pub passes: bool,
}

/// Every complete collision at an interior vertex forces the product of
/// its corner labels to be trivial; the audit passes when each such
/// product is nontrivial in `H` and no collision lies on an edge between
/// interior faces.
pub fn audit_standard_collisions(d: &HowieDiagram, motion: &Motion) -> Result<CollisionAudit> {
    motion.validate(&d.map)?;
    let report = motion.complete_collisions(&d.map);
    let mut entries = Vec::new();
    for vc in &report.vertices {
        let v = vc.vertex;
        if !d.is_interior_vertex(v) {
            continue;
        }
        let class = match d.map.classify_vertex(v) {
            VertexClass::Source => "source",
            VertexClass::Sink => "sink",
            VertexClass::Mixed { .. } => "mixed",
        };
        let label = d.vertex_label(v, 0);
        entries.push(AuditEntry {
            vertex: v,
            class: class.into(),
            equation: format!("{label} = 1"),
            holds_in_h: label.is_identity(),
        });
    }
    let interior_edge_loci: Vec<u32> = report
        .edges
        .iter()
        .map(|l| l.edge)
        .filter(|&e| {
            let x = d.map.dart_of_edge(e, Sign::Plus).unwrap();
            d.is_interior_face(d.map.face_of(x)) && d.is_interior_face(d.map.face_of(d.map.twin(x)))
        })
        .collect();
    let passes = entries.iter().all(|e| !e.holds_in_h) && interior_edge_loci.is_empty();
    Ok(CollisionAudit { entries, interior_edge_loci, passes })
}
