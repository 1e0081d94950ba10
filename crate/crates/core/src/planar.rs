//! Graphs embedded in the sphere, given by rotation systems, and the edge
//! bound `E ≤ 3V` under the perimeter hypothesis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    /// Boundary length; an edge with the region on both sides counts twice.
    pub perimeter: usize,
    pub simply_connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub regions: Vec<Region>,
}

/// Half-edge `2e` runs from `edges[e].0` to `edges[e].1`, `2e + 1` back.
fn tail(edges: &[(usize, usize)], h: usize) -> usize {
    let (a, b) = edges[h / 2];
    if h.is_multiple_of(2) {
        a
    } else {
        b
    }
}

impl EmbeddedGraph {
    /// Builds the graph from a connected rotation system: `rotation[v]` lists
    /// the half-edges leaving `v` in anticlockwise order.
    pub fn from_rotation(vertices: usize, edges: Vec<(usize, usize)>, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != vertices {
            return Err(Error::Precondition("one rotation list per vertex".into()));
        }
        let nh = 2 * edges.len();
        let mut pos = vec![(usize::MAX, 0); nh];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &h) in rot.iter().enumerate() {
                if h >= nh || tail(&edges, h) != v || pos[h].0 != usize::MAX {
                    return Err(Error::Precondition(format!("bad half-edge {h} at vertex {v}")));
                }
                pos[h] = (v, i);
            }
        }
        if pos.iter().any(|p| p.0 == usize::MAX) {
            return Err(Error::Precondition("every half-edge must appear in a rotation".into()));
        }
        if vertices == 0 {
            return Err(Error::Precondition("graph needs a vertex".into()));
        }
        if edges.is_empty() {
            if vertices != 1 {
                return Err(Error::Disconnected);
            }
            return Ok(EmbeddedGraph {
                vertices,
                edges,
                regions: vec![Region { perimeter: 0, simply_connected: true }],
            });
        }
        // next half-edge along a face: turn at the head of h
        let next = |h: usize| {
            let t = h ^ 1;
            let (v, i) = pos[t];
            let rot = &rotation[v];
            rot[(i + rot.len() - 1) % rot.len()]
        };
        let mut seen = vec![false; nh];
        let mut regions = Vec::new();
        for h0 in 0..nh {
            if seen[h0] {
                continue;
            }
            let mut len = 0;
            let mut h = h0;
            while !seen[h] {
                seen[h] = true;
                len += 1;
                h = next(h);
            }
            regions.push(Region { perimeter: len, simply_connected: true });
        }
        let g = EmbeddedGraph { vertices, edges, regions };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let chi = g.vertices as i64 - g.edges.len() as i64 + g.regions.len() as i64;
        if chi != 2 {
            return Err(Error::SurfaceMismatch {
                declared: "sphere".into(),
                expected: 2,
                actual: chi,
            });
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.vertices];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma18Report {
    pub vertices: usize,
    pub edges: usize,
    pub regions: usize,
    pub perimeters: Vec<usize>,
    /// Simply connected regions with perimeter below 3.
    pub short_regions: usize,
    pub hypothesis_holds: bool,
    pub bound_holds: bool,
}

pub fn lemma18_check(g: &EmbeddedGraph) -> Lemma18Report {
    let short = g
        .regions
        .iter()
        .filter(|r| r.simply_connected && r.perimeter < 3)
        .count();
    Lemma18Report {
        vertices: g.vertices,
        edges: g.edges.len(),
        regions: g.regions.len(),
        perimeters: g.regions.iter().map(|r| r.perimeter).collect(),
        short_regions: short,
        hypothesis_holds: short <= 1,
        bound_holds: g.edges.len() <= 3 * g.vertices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolated_vertex() {
        let g = EmbeddedGraph::from_rotation(1, vec![], vec![vec![]]).unwrap();
        let r = lemma18_check(&g);
        assert!(r.hypothesis_holds && r.bound_holds);
    }

    #[test]
    fn tetrahedron() {
        // vertex 3 in the middle of triangle 0 1 2
        let edges = vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)];
        let rotation = vec![vec![0, 6, 5], vec![2, 8, 1], vec![4, 10, 3], vec![7, 9, 11]];
        let g = EmbeddedGraph::from_rotation(4, edges, rotation).unwrap();
        let r = lemma18_check(&g);
        assert_eq!(r.perimeters, vec![3; 4]);
        assert!(r.hypothesis_holds && r.bound_holds);
    }

    #[test]
    fn parallel_edges() {
        let edges = vec![(0, 1); 7];
        let rot0: Vec<usize> = (0..7).map(|e| 2 * e).collect();
        let rot1: Vec<usize> = (0..7).rev().map(|e| 2 * e + 1).collect();
        let g = EmbeddedGraph::from_rotation(2, edges, vec![rot0, rot1]).unwrap();
        let r = lemma18_check(&g);
        assert_eq!(r.perimeters, vec![2; 7]);
        assert!(!r.hypothesis_holds);
        assert!(!r.bound_holds);
    }
}
