//! Canonical codes of connected disc graphs up to rotation-system
//! isomorphism and reflection.
//!
//! Slots fix the rotation at every vertex, so a numbering is determined by
//! where a breadth-first walk starts: at `∂D` with a choice of first
//! boundary position, or, without boundary edges, at a vertex. The code is
//! the least over all starts and both mirror images. Mirroring flips every
//! sign, reverses `∂D`, and replaces each dart of the outer face by its
//! partner.

use std::collections::VecDeque;

use serde::Serialize;

use super::embed::{DartEdge, NodeKind};
use super::{Ambient, EdgeId, FatGraph, Sign};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CanonicalCode(pub Vec<u32>);

#[derive(Clone, Copy)]
enum End {
    Vertex(usize, u32),
    Boundary(usize),
}

struct Shape {
    signs: Vec<Sign>,
    partner: Vec<Vec<End>>,
    boundary: Vec<(usize, u32)>,
    outer: Vec<(usize, u32)>,
}

impl Shape {
    fn mirror(&self) -> Shape {
        let b = self.boundary.len();
        let partner = self
            .partner
            .iter()
            .map(|ends| {
                ends.iter()
                    .map(|e| match *e {
                        End::Boundary(r) => End::Boundary(b - 1 - r),
                        other => other,
                    })
                    .collect()
            })
            .collect();
        let outer = self
            .outer
            .iter()
            .map(|&(v, s)| match self.partner[v][(s - 1) as usize] {
                End::Vertex(w, t) => (w, t),
                End::Boundary(_) => unreachable!("outer face is only tracked without boundary edges"),
            })
            .collect();
        Shape {
            signs: self.signs.iter().map(|s| s.flip()).collect(),
            partner,
            boundary: self.boundary.iter().rev().copied().collect(),
            outer,
        }
    }

    fn code(&self, start: Option<usize>, rotation: usize) -> Vec<u32> {
        let n = self.signs.len();
        let b = self.boundary.len();
        let mut number = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::new();
        let visit = |v: usize, number: &mut Vec<u32>, order: &mut Vec<usize>, queue: &mut VecDeque<usize>| {
            if number[v] == u32::MAX {
                number[v] = order.len() as u32;
                order.push(v);
                queue.push_back(v);
            }
        };
        let mut out = Vec::new();
        match start {
            Some(v) => visit(v, &mut number, &mut order, &mut queue),
            None => {
                for k in 0..b {
                    let (v, _) = self.boundary[(rotation + k) % b];
                    visit(v, &mut number, &mut order, &mut queue);
                }
            }
        }
        while let Some(v) = queue.pop_front() {
            for end in &self.partner[v] {
                if let End::Vertex(w, _) = *end {
                    visit(w, &mut number, &mut order, &mut queue);
                }
            }
        }
        for k in 0..b {
            let (v, s) = self.boundary[(rotation + k) % b];
            out.extend([number[v], s]);
        }
        for &v in &order {
            out.push(self.signs[v] as u32);
            for end in &self.partner[v] {
                match *end {
                    End::Vertex(w, t) => out.extend([1, number[w], t]),
                    End::Boundary(r) => out.extend([2, ((r + b - rotation) % b) as u32, 0]),
                }
            }
        }
        if start.is_some() {
            let least = self.outer.iter().map(|&(v, s)| (number[v], s)).min().expect("outer face has a dart");
            out.extend([least.0, least.1]);
        }
        out
    }

    fn best(&self) -> Vec<u32> {
        let b = self.boundary.len();
        if b > 0 {
            (0..b).map(|r| self.code(None, r)).min().unwrap()
        } else {
            (0..self.signs.len()).map(|v| self.code(Some(v), 0)).min().unwrap()
        }
    }
}

impl FatGraph {
    fn shape(&self) -> Shape {
        let e = &self.emb;
        let end_of = |d: usize| match e.nodes[e.dart_node[d]] {
            NodeKind::Vertex(w) => {
                End::Vertex(w, e.vertex_darts[w].iter().position(|&x| x == d).unwrap() as u32 + 1)
            }
            NodeKind::Boundary => End::Boundary(e.boundary_darts.iter().position(|&x| x == d).unwrap()),
            _ => unreachable!("disc graphs have no suture"),
        };
        let partner = e
            .vertex_darts
            .iter()
            .map(|darts| darts.iter().map(|&d| end_of(e.alpha[d])).collect())
            .collect();
        let boundary = e
            .boundary_darts
            .iter()
            .map(|&d| match end_of(e.alpha[d]) {
                End::Vertex(v, s) => (v, s),
                End::Boundary(_) => unreachable!(),
            })
            .collect();
        let mut outer = Vec::new();
        if e.boundary_darts.is_empty() {
            let graph = (0..e.comps.len()).find(|&c| Some(c) != e.root).expect("a vertex component");
            let f = e.comps[graph].outer.unwrap();
            for &d in &e.face_darts[f] {
                if let End::Vertex(v, s) = end_of(d) {
                    outer.push((v, s));
                }
            }
        }
        Shape { signs: self.spec.vertices.iter().map(|v| v.sign).collect(), partner, boundary, outer }
    }

    /// Least breadth-first code over all starting points and both
    /// reflections. Defined for disc graphs whose vertices and boundary
    /// edges form one connected piece.
    pub fn canonical_code(&self) -> Result<CanonicalCode> {
        let e = &self.emb;
        if self.spec.ambient != Ambient::Disc {
            return Err(Error::Precondition("canonical codes are defined for disc graphs".into()));
        }
        let vertex_comps = e.comps.len() - usize::from(e.boundary_darts.is_empty());
        if self.spec.vertices.is_empty() || vertex_comps != 1 {
            return Err(Error::Precondition("canonical codes need a nonempty connected graph".into()));
        }
        if e.dart_edge.iter().any(|d| matches!(d, DartEdge::Graph(EdgeId::Suture(_)))) {
            return Err(Error::Precondition("disc graphs have no suture edges".into()));
        }
        let shape = self.shape();
        let code = shape.best().min(shape.mirror().best());
        let mut full = vec![self.spec.mu, self.spec.vertices.len() as u32, e.boundary_darts.len() as u32];
        full.extend(code);
        Ok(CanonicalCode(full))
    }
}
