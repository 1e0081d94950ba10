//! Oriented combinatorial maps on closed surfaces.
//!
//! A map is a list of faces, each a cyclic list of darts read anticlockwise.
//! Darts are numbered globally (face by face). Corner `i` is the corner at the
//! end of dart `i`, between dart `i` and the next dart of its face.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub edge: u32,
    pub dir: Sign,
}

impl Dart {
    pub fn new(edge: u32, dir: Sign) -> Self {
        Dart { edge, dir }
    }

    pub fn plus(edge: u32) -> Self {
        Dart::new(edge, Sign::Plus)
    }

    pub fn minus(edge: u32) -> Self {
        Dart::new(edge, Sign::Minus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Surface {
    Sphere,
    Torus,
    Genus(u32),
}

impl Surface {
    pub fn euler_characteristic(self) -> i64 {
        match self {
            Surface::Sphere => 2,
            Surface::Torus => 0,
            Surface::Genus(g) => 2 - 2 * g as i64,
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Sphere => write!(f, "sphere"),
            Surface::Torus => write!(f, "torus"),
            Surface::Genus(g) => write!(f, "genus-{g}"),
        }
    }
}

impl TryFrom<String> for Surface {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        match s.as_str() {
            "sphere" => Ok(Surface::Sphere),
            "torus" => Ok(Surface::Torus),
            _ => s
                .strip_prefix("genus-")
                .and_then(|g| g.parse().ok())
                .map(Surface::Genus)
                .ok_or_else(|| Error::Parse(format!("unknown surface {s:?}"))),
        }
    }
}

impl From<Surface> for String {
    fn from(s: Surface) -> String {
        s.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CornerType {
    #[serde(rename = "++")]
    PlusPlus,
    #[serde(rename = "--")]
    MinusMinus,
    #[serde(rename = "+-")]
    PlusMinus,
    #[serde(rename = "-+")]
    MinusPlus,
}

impl CornerType {
    pub fn from_signs(before: Sign, after: Sign) -> Self {
        match (before, after) {
            (Sign::Plus, Sign::Plus) => CornerType::PlusPlus,
            (Sign::Minus, Sign::Minus) => CornerType::MinusMinus,
            (Sign::Plus, Sign::Minus) => CornerType::PlusMinus,
            (Sign::Minus, Sign::Plus) => CornerType::MinusPlus,
        }
    }
}

impl fmt::Display for CornerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CornerType::PlusPlus => "++",
            CornerType::MinusMinus => "--",
            CornerType::PlusMinus => "+-",
            CornerType::MinusPlus => "-+",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub corners: usize,
    pub pre_edges: usize,
    pub euler_characteristic: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    Source,
    Sink,
    /// `alternates` records whether `(++)` and `(−−)` corners alternate.
    Mixed { alternates: bool },
}

/// A point of the 1-skeleton that is either a vertex or an interior point
/// of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Point {
    Vertex(usize),
    EdgeInterior(u32),
}

/// Recognized face boundaries, up to rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "form")]
pub enum FaceForm {
    /// `+−`
    A,
    /// `+(+−)^{m+1}`
    B { m: u32 },
    /// `−(−+)^{m+1}`
    C { m: u32 },
    /// `(+)^{k+1}(−)^{l+1}` with `k, l ≥ 1`
    D { k: u32, l: u32 },
    /// `((+)^{k+1}(−)^{l+1})^s` with `k, l ≥ 1`, `s ≥ 2`
    Blocks { k: u32, l: u32, s: u32 },
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    A,
    B,
    Both,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapType {
    pub family: Family,
    /// `None` when no face pins down `m`.
    pub m: Option<u32>,
    /// Per face: the form and the dart index where the canonical pattern starts.
    pub faces: Vec<(FaceForm, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedMap {
    surface: Surface,
    faces: Vec<Vec<Dart>>,
    offsets: Vec<usize>,
    face_of: Vec<usize>,
    twin: Vec<usize>,
    edges: Vec<u32>,
    vertex_of: Vec<usize>,
    vertex_cycles: Vec<Vec<usize>>,
}

impl OrientedMap {
    pub fn new(surface: Surface, faces: Vec<Vec<Dart>>) -> Result<Self> {
        let mut offsets = Vec::with_capacity(faces.len());
        let mut face_of = Vec::new();
        for (i, f) in faces.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::EmptyFace(i));
            }
            offsets.push(face_of.len());
            face_of.extend(std::iter::repeat_n(i, f.len()));
        }
        let darts: Vec<Dart> = faces.iter().flatten().copied().collect();
        let mut uses: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, d) in darts.iter().enumerate() {
            uses.entry(d.edge).or_default().push(i);
        }
        let mut twin = vec![0; darts.len()];
        for (&edge, ds) in &uses {
            if ds.len() != 2 {
                return Err(Error::EdgeUse { edge, count: ds.len() });
            }
            if darts[ds[0]].dir == darts[ds[1]].dir {
                return Err(Error::EdgeDirection(edge));
            }
            twin[ds[0]] = ds[1];
            twin[ds[1]] = ds[0];
        }
        let mut map = OrientedMap {
            surface,
            faces,
            offsets,
            face_of,
            twin,
            edges: uses.keys().copied().collect(),
            vertex_of: Vec::new(),
            vertex_cycles: Vec::new(),
        };
        map.build_vertices();
        if !map.is_connected() {
            return Err(Error::Disconnected);
        }
        let chi = map.census().euler_characteristic;
        if chi != surface.euler_characteristic() {
            return Err(Error::SurfaceMismatch {
                declared: surface.to_string(),
                expected: surface.euler_characteristic(),
                actual: chi,
            });
        }
        Ok(map)
    }

    fn build_vertices(&mut self) {
        let n = self.num_darts();
        let mut vertex_of = vec![usize::MAX; n];
        let mut cycles = Vec::new();
        for c in 0..n {
            if vertex_of[c] != usize::MAX {
                continue;
            }
            let v = cycles.len();
            let mut cyc = Vec::new();
            let mut x = c;
            while vertex_of[x] == usize::MAX {
                vertex_of[x] = v;
                cyc.push(x);
                x = self.next_ccw(x);
            }
            cycles.push(cyc);
        }
        self.vertex_of = vertex_of;
        self.vertex_cycles = cycles;
    }

    fn is_connected(&self) -> bool {
        let nf = self.faces.len();
        if nf == 0 {
            return false;
        }
        let mut seen = vec![false; nf];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(f) = stack.pop() {
            for d in self.face_darts(f) {
                let g = self.face_of[self.twin[d]];
                if !seen[g] {
                    seen[g] = true;
                    stack.push(g);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn num_darts(&self) -> usize {
        self.face_of.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_cycles.len()
    }

    pub fn edges(&self) -> &[u32] {
        &self.edges
    }

    pub fn face_len(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    /// Global id of the `i`-th dart of face `f` (index taken cyclically).
    pub fn dart_id(&self, f: usize, i: usize) -> usize {
        self.offsets[f] + i % self.faces[f].len()
    }

    pub fn face_darts(&self, f: usize) -> std::ops::Range<usize> {
        self.offsets[f]..self.offsets[f] + self.faces[f].len()
    }

    pub fn dart(&self, d: usize) -> Dart {
        let f = self.face_of[d];
        self.faces[f][d - self.offsets[f]]
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    pub fn index_in_face(&self, d: usize) -> usize {
        d - self.offsets[self.face_of[d]]
    }

    pub fn next(&self, d: usize) -> usize {
        let f = self.face_of[d];
        self.dart_id(f, self.index_in_face(d) + 1)
    }

    pub fn prev(&self, d: usize) -> usize {
        let f = self.face_of[d];
        let len = self.faces[f].len();
        self.dart_id(f, self.index_in_face(d) + len - 1)
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    /// The dart of `edge` with the given direction.
    pub fn dart_of_edge(&self, edge: u32, dir: Sign) -> Option<usize> {
        (0..self.num_darts()).find(|&d| self.dart(d) == Dart::new(edge, dir))
    }

    /// The next corner anticlockwise around the common vertex.
    pub fn next_ccw(&self, corner: usize) -> usize {
        self.prev(self.twin[corner])
    }

    pub fn corner_type(&self, corner: usize) -> CornerType {
        CornerType::from_signs(self.dart(corner).dir, self.dart(self.next(corner)).dir)
    }

    pub fn vertex_of(&self, corner: usize) -> usize {
        self.vertex_of[corner]
    }

    pub fn start_vertex(&self, d: usize) -> usize {
        self.vertex_of[self.prev(d)]
    }

    pub fn end_vertex(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    /// Tail and head of an edge with respect to its arrow.
    pub fn edge_endpoints(&self, edge: u32) -> (usize, usize) {
        let d = self.dart_of_edge(edge, Sign::Plus).expect("edge present");
        (self.start_vertex(d), self.end_vertex(d))
    }

    /// Corners at `v` in anticlockwise order, starting at the smallest id.
    pub fn vertex_corner_cycle(&self, v: usize) -> &[usize] {
        &self.vertex_cycles[v]
    }

    pub fn census(&self) -> Census {
        let v = self.num_vertices();
        let e = self.edges.len();
        let f = self.faces.len();
        Census {
            vertices: v,
            edges: e,
            faces: f,
            corners: self.num_darts(),
            pre_edges: self.num_darts(),
            euler_characteristic: v as i64 - e as i64 + f as i64,
        }
    }

    pub fn classify_vertex(&self, v: usize) -> VertexClass {
        let types: Vec<CornerType> = self.vertex_cycles[v].iter().map(|&c| self.corner_type(c)).collect();
        if types.iter().all(|&t| t == CornerType::PlusMinus) {
            return VertexClass::Sink;
        }
        if types.iter().all(|&t| t == CornerType::MinusPlus) {
            return VertexClass::Source;
        }
        let extremes: Vec<CornerType> = types
            .into_iter()
            .filter(|t| matches!(t, CornerType::PlusPlus | CornerType::MinusMinus))
            .collect();
        let n = extremes.len();
        let alternates = n.is_multiple_of(2) && (0..n).all(|i| extremes[i] != extremes[(i + 1) % n]);
        VertexClass::Mixed { alternates }
    }

    /// Number of edge-ends at a vertex (loops count twice); 2 for edge points.
    pub fn multiplicity(&self, p: Point) -> usize {
        match p {
            Point::Vertex(v) => self.vertex_cycles[v].len(),
            Point::EdgeInterior(_) => 2,
        }
    }

    pub fn face_profile(&self, f: usize) -> Vec<Sign> {
        self.faces[f].iter().map(|d| d.dir).collect()
    }

    pub fn face_form(&self, f: usize) -> (FaceForm, usize) {
        classify_profile(&self.face_profile(f))
    }

    pub fn map_type(&self) -> Result<MapType> {
        let faces: Vec<(FaceForm, usize)> = (0..self.num_faces()).map(|f| self.face_form(f)).collect();
        let mut m: Option<u32> = None;
        for (form, _) in &faces {
            if let FaceForm::B { m: j } | FaceForm::C { m: j } = form {
                match m {
                    Some(x) if x != *j => {
                        return Err(Error::MapType(format!("faces disagree on m ({x} vs {j})")));
                    }
                    _ => m = Some(*j),
                }
            }
        }
        let a = faces
            .iter()
            .all(|(f, _)| matches!(f, FaceForm::A | FaceForm::B { .. } | FaceForm::C { .. } | FaceForm::D { .. }));
        let b = faces
            .iter()
            .all(|(f, _)| matches!(f, FaceForm::B { .. } | FaceForm::C { .. } | FaceForm::D { .. } | FaceForm::Blocks { .. }));
        let family = match (a, b) {
            (true, true) => Family::Both,
            (true, false) => Family::A,
            (false, true) => Family::B,
            (false, false) => Family::Neither,
        };
        Ok(MapType { family, m, faces })
    }

    /// Splits `edge` at an interior point into `edge` followed by `new_edge`.
    pub fn subdivide_edge(&self, edge: u32, new_edge: u32) -> Result<OrientedMap> {
        if self.edges.contains(&new_edge) {
            return Err(Error::Precondition(format!("edge id {new_edge} already used")));
        }
        if !self.edges.contains(&edge) {
            return Err(Error::Precondition(format!("no edge {edge}")));
        }
        let faces = self
            .faces
            .iter()
            .map(|f| {
                f.iter()
                    .flat_map(|d| match (d.edge == edge, d.dir) {
                        (false, _) => vec![*d],
                        (true, Sign::Plus) => vec![Dart::plus(edge), Dart::plus(new_edge)],
                        (true, Sign::Minus) => vec![Dart::minus(new_edge), Dart::minus(edge)],
                    })
                    .collect()
            })
            .collect();
        OrientedMap::new(self.surface, faces)
    }
}

fn runs(p: &[Sign]) -> Vec<(Sign, usize)> {
    let mut out: Vec<(Sign, usize)> = Vec::new();
    for &s in p {
        match out.last_mut() {
            Some((x, n)) if *x == s => *n += 1,
            _ => out.push((s, 1)),
        }
    }
    out
}

/// Classifies a sign word up to rotation, returning the start offset of the
/// canonical pattern.
pub fn classify_profile(p: &[Sign]) -> (FaceForm, usize) {
    let n = p.len();
    for r in 0..n {
        let rot: Vec<Sign> = (0..n).map(|i| p[(r + i) % n]).collect();
        if let Some(form) = match_canonical(&rot) {
            return (form, r);
        }
    }
    (FaceForm::Other, 0)
}

fn match_canonical(p: &[Sign]) -> Option<FaceForm> {
    use Sign::*;
    let n = p.len();
    if p == [Plus, Minus] {
        return Some(FaceForm::A);
    }
    if n >= 3 && n % 2 == 1 {
        let m = (n as u32 - 3) / 2;
        if p[0] == Plus && (1..n).all(|i| p[i] == if i % 2 == 1 { Plus } else { Minus }) {
            return Some(FaceForm::B { m });
        }
        if p[0] == Minus && (1..n).all(|i| p[i] == if i % 2 == 1 { Minus } else { Plus }) {
            return Some(FaceForm::C { m });
        }
    }
    let r = runs(p);
    if r.len() >= 2 && r.len().is_multiple_of(2) && r[0].0 == Plus && r[r.len() - 1].0 == Minus {
        let (kp, lm) = (r[0].1, r[1].1);
        if kp >= 2 && lm >= 2 && r.chunks(2).all(|c| c[0].1 == kp && c[1].1 == lm) {
            let (k, l, s) = (kp as u32 - 1, lm as u32 - 1, r.len() as u32 / 2);
            return Some(if s == 1 { FaceForm::D { k, l } } else { FaceForm::Blocks { k, l, s } });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> OrientedMap {
        OrientedMap::new(
            Surface::Torus,
            vec![vec![Dart::plus(0), Dart::plus(1), Dart::minus(0), Dart::minus(1)]],
        )
        .unwrap()
    }

    fn bigon() -> OrientedMap {
        OrientedMap::new(
            Surface::Sphere,
            vec![vec![Dart::plus(0), Dart::minus(1)], vec![Dart::plus(1), Dart::minus(0)]],
        )
        .unwrap()
    }

    #[test]
    fn census_small_maps() {
        assert_eq!(torus().census().euler_characteristic, 0);
        assert_eq!(torus().num_vertices(), 1);
        let b = bigon();
        assert_eq!(b.census().vertices, 2);
        for v in 0..2 {
            assert_eq!(b.vertex_corner_cycle(v).len(), 2);
        }
    }

    #[test]
    fn edge_errors() {
        let e = OrientedMap::new(
            Surface::Sphere,
            vec![vec![Dart::plus(0), Dart::minus(0), Dart::plus(0)]],
        );
        assert!(matches!(e, Err(Error::EdgeUse { edge: 0, count: 3 })));
        let e = OrientedMap::new(Surface::Sphere, vec![vec![]]);
        assert!(matches!(e, Err(Error::EmptyFace(0))));
    }

    #[test]
    fn bigon_vertices_are_source_and_sink() {
        let b = bigon();
        let classes: Vec<VertexClass> = (0..2).map(|v| b.classify_vertex(v)).collect();
        assert!(classes.contains(&VertexClass::Sink));
        assert!(classes.contains(&VertexClass::Source));
    }

    #[test]
    fn profiles() {
        use Sign::*;
        assert_eq!(classify_profile(&[Plus, Minus]).0, FaceForm::A);
        assert_eq!(classify_profile(&[Minus, Plus, Plus]).0, FaceForm::B { m: 0 });
        let mut p = Vec::new();
        for _ in 0..4 {
            p.extend([Plus; 3]);
            p.extend([Minus; 3]);
        }
        p.rotate_left(2);
        assert_eq!(classify_profile(&p), (FaceForm::Blocks { k: 2, l: 2, s: 4 }, 4));
    }

    #[test]
    fn subdivision_keeps_chi() {
        let t = torus().subdivide_edge(0, 7).unwrap();
        assert_eq!(t.census().euler_characteristic, 0);
        assert_eq!(t.census().edges, 3);
    }
}
