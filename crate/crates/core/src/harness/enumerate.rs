//! Exhaustive generation of Gabai disc graphs.
//!
//! Edge ends are matched in breadth-first order: the least unmatched end of
//! a discovered vertex is paired with a boundary position, another open end
//! of a discovered vertex, or a slot of the next undiscovered vertex. When
//! no discovered end is open, the next vertex is discovered through `∂D`.
//! Every connected graph arises this way from each choice of first vertex, so
//! relabelings are mostly cut off before any embedding is built. An Euler
//! count on the raw rotation system filters non-planar matchings;
//! survivors are built, checked, and deduplicated by canonical code.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fatgraph::{BoundaryEdge, CanonicalCode, FaceRef, FatGraph, GraphSpec, Placement, Port, Sign, VertexSpec};

const OPEN: usize = usize::MAX;
const BOUNDARY: usize = usize::MAX - 1;

/// A matching of edge ends with the boundary ends in cyclic order.
#[derive(Debug, Clone)]
struct RawGraph {
    n: usize,
    mu: usize,
    partner: Vec<usize>,
    boundary: Vec<usize>,
}

impl RawGraph {
    /// Faces of the rotation system, as in the embedding: `+` vertices turn
    /// to the next slot, `∂D` to the previous boundary end.
    fn is_planar_connected(&self) -> bool {
        let ends = self.n * self.mu;
        let b = self.boundary.len();
        let darts = ends + b;
        // Boundary edge k joins its vertex end to the ∂D dart ends + k.
        let mut rank = vec![0; ends];
        for (k, &e) in self.boundary.iter().enumerate() {
            rank[e] = k;
        }
        let alpha = |d: usize| -> usize {
            match d.checked_sub(ends) {
                Some(k) => self.boundary[k],
                None if self.partner[d] == BOUNDARY => ends + rank[d],
                None => self.partner[d],
            }
        };
        let sigma = |d: usize| -> usize {
            match d.checked_sub(ends) {
                Some(k) => ends + (k + b - 1) % b,
                None => d / self.mu * self.mu + (d % self.mu + 1) % self.mu,
            }
        };
        let mut seen = vec![false; darts];
        let mut faces = 0;
        for d in 0..darts {
            if seen[d] {
                continue;
            }
            faces += 1;
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                x = sigma(alpha(x));
            }
        }
        let nodes = self.n + usize::from(b > 0);
        let edges = (ends + b) / 2;
        if !self.connected() {
            return false;
        }
        nodes + faces == edges + 2
    }

    fn connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (e, &p) in self.partner.iter().enumerate() {
            let w = if p == BOUNDARY { self.n } else { p / self.mu };
            let (a, c) = (find(&mut parent, e / self.mu), find(&mut parent, w));
            parent[a] = c;
        }
        let r = find(&mut parent, 0);
        (1..self.n).all(|v| find(&mut parent, v) == r)
    }

    fn spec(&self, mu: u32) -> GraphSpec {
        let port = |e: usize| Port::new(e as u32 / mu + 1, e as u32 % mu + 1);
        let mut spec = GraphSpec::disc(mu, (1..=self.n as u32).map(|id| VertexSpec::new(id, Sign::Plus)).collect());
        for (e, &p) in self.partner.iter().enumerate() {
            if p != BOUNDARY && e < p {
                spec.interior_edges.push([port(e), port(p)]);
            }
        }
        spec.boundary_edges = self
            .boundary
            .iter()
            .enumerate()
            .map(|(k, &e)| BoundaryEdge { end: port(e), boundary_pos: k as i64 })
            .collect();
        spec
    }
}

struct Generator {
    n: usize,
    mu: usize,
    b: usize,
    partner: Vec<usize>,
    boundary: Vec<usize>,
    found: Vec<RawGraph>,
}

impl Generator {
    fn run(&mut self, discovered: usize) {
        let open = (0..discovered * self.mu).find(|&e| self.partner[e] == OPEN);
        let Some(e) = open else {
            if discovered < self.n && self.boundary.len() < self.b {
                // The rest can only hang off ∂D: the next vertex is reached
                // through a boundary edge.
                self.run(discovered + 1);
            } else if discovered == self.n && self.boundary.len() == self.b {
                self.emit();
            }
            return;
        };
        let slot = e % self.mu;
        if self.boundary.len() < self.b {
            self.partner[e] = BOUNDARY;
            self.boundary.push(e);
            self.run(discovered);
            self.boundary.pop();
            self.partner[e] = OPEN;
        }
        for f in e + 1..discovered * self.mu {
            if self.partner[f] == OPEN && f % self.mu != slot {
                self.pair(e, f);
                self.run(discovered);
                self.unpair(e, f);
            }
        }
        if discovered < self.n {
            for t in (0..self.mu).filter(|&t| t != slot) {
                let f = discovered * self.mu + t;
                self.pair(e, f);
                self.run(discovered + 1);
                self.unpair(e, f);
            }
        }
    }

    fn pair(&mut self, e: usize, f: usize) {
        self.partner[e] = f;
        self.partner[f] = e;
    }

    fn unpair(&mut self, e: usize, f: usize) {
        self.partner[e] = OPEN;
        self.partner[f] = OPEN;
    }

    /// One raw graph per cyclic order of the boundary ends.
    fn emit(&mut self) {
        if self.boundary.is_empty() {
            let raw = RawGraph { n: self.n, mu: self.mu, partner: self.partner.clone(), boundary: Vec::new() };
            if raw.is_planar_connected() {
                self.found.push(raw);
            }
            return;
        }
        let mut rest = self.boundary[1..].to_vec();
        permutations(&mut rest, 0, &mut |order| {
            let mut boundary = vec![self.boundary[0]];
            boundary.extend_from_slice(order);
            let raw = RawGraph { n: self.n, mu: self.mu, partner: self.partner.clone(), boundary };
            if raw.is_planar_connected() {
                self.found.push(raw);
            }
        });
    }
}

fn permutations<T: Copy>(items: &mut Vec<T>, k: usize, visit: &mut dyn FnMut(&[T])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn raw_graphs(n: usize, mu: usize, b: usize) -> Vec<RawGraph> {
    if n == 0 || (n * mu - b) % 2 != 0 || (b == 0 && n * mu == 0) {
        return Vec::new();
    }
    let mut g = Generator { n, mu, b, partner: vec![OPEN; n * mu], boundary: Vec::new(), found: Vec::new() };
    g.run(1);
    g.found
}

/// Built, admissible graphs for one raw matching: one per choice of outer
/// face when there is no boundary edge.
fn realize(raw: &RawGraph, mu: u32) -> Vec<FatGraph> {
    let spec = raw.spec(mu);
    let Ok(base) = spec.clone().build() else { return Vec::new() };
    if !raw.boundary.is_empty() {
        return if base.admissible().is_valid() { vec![base] } else { Vec::new() };
    }
    base.faces()
        .into_iter()
        .filter_map(|face| {
            let placed = spec.clone().place(Placement {
                component: 1,
                inside: FaceRef::Boundary(None),
                outer: FaceRef::Right(face[0]),
            });
            placed.build().ok().filter(|g| g.admissible().is_valid())
        })
        .collect()
}

/// Every connected admissible Gabai disc graph with at most `max_vertices`
/// vertices, all signed `+`, and at most `max_boundary_edges` boundary
/// edges, once per isomorphism class, ordered by canonical code.
pub fn enumerate_gabai_graphs(max_vertices: u32, mu: u32, max_boundary_edges: u32) -> Result<Vec<FatGraph>> {
    Ok(enumerate_with_codes(max_vertices, mu, max_boundary_edges)?.into_values().collect())
}

/// As [`enumerate_gabai_graphs`], keyed by canonical code.
pub fn enumerate_with_codes(
    max_vertices: u32,
    mu: u32,
    max_boundary_edges: u32,
) -> Result<BTreeMap<CanonicalCode, FatGraph>> {
    if mu == 0 || max_boundary_edges >= mu {
        return Err(Error::Bounds(format!(
            "Gabai disc graphs need fewer than mu = {mu} boundary edges, asked for up to {max_boundary_edges}"
        )));
    }
    let mut shards = Vec::new();
    for n in 1..=max_vertices as usize {
        for b in 0..=max_boundary_edges as usize {
            shards.extend(raw_graphs(n, mu as usize, b));
        }
    }
    let built: Vec<Vec<(CanonicalCode, FatGraph)>> = shards
        .par_iter()
        .map(|raw| {
            realize(raw, mu)
                .into_iter()
                .filter_map(|g| g.canonical_code().ok().map(|c| (c, g)))
                .collect()
        })
        .collect();
    let mut out = BTreeMap::new();
    for (code, g) in built.into_iter().flatten() {
        out.entry(code).or_insert(g);
    }
    Ok(out)
}
