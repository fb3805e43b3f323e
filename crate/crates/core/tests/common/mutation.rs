//! Single-change mutations of valid inputs, each breaking one rule, paired
//! with the check name the validators must report.

use sutcomb::fatgraph::{BoundaryEdge, FatGraph, GraphSpec, Port};
use sutcomb::harness::enumerate_gabai_graphs;
use sutcomb::sutured::{check_sutured_axioms, BoundaryPattern, RegionSign, RegionSpec, SuturedData, SutureSpec};

#[derive(Debug, Default)]
pub struct Tally {
    pub total: usize,
    pub detected: usize,
    pub missed: Vec<String>,
}

impl Tally {
    fn record(&mut self, hit: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if hit {
            self.detected += 1;
        } else {
            self.missed.push(what());
        }
    }

    pub fn complete(&self) -> bool {
        self.total > 0 && self.detected == self.total
    }
}

pub fn base_graphs() -> Vec<FatGraph> {
    let mut out = enumerate_gabai_graphs(3, 3, 2).unwrap();
    out.extend(enumerate_gabai_graphs(3, 4, 3).unwrap());
    out
}

fn graph_hit(spec: GraphSpec, check: &str) -> bool {
    match FatGraph::new(spec) {
        Ok(g) => g.admissible().has(check),
        Err(_) => false,
    }
}

/// All ends of the graph, as mutable port references.
fn ports_mut(spec: &mut GraphSpec) -> Vec<&mut Port> {
    let mut v: Vec<&mut Port> = spec.interior_edges.iter_mut().flat_map(|e| e.iter_mut()).collect();
    v.extend(spec.boundary_edges.iter_mut().map(|e| &mut e.end));
    v.extend(spec.suture_edges.iter_mut().map(|e| &mut e.end));
    v
}

/// For an interior edge with labels `a != b`, swaps labels `a` and `b` at
/// the first end's vertex, so the edge joins `b` to `b`.
pub fn observation_one(graphs: &[FatGraph]) -> Tally {
    let mut tally = Tally::default();
    for g in graphs {
        for (k, [p, q]) in g.spec().interior_edges.iter().enumerate() {
            if p.vertex == q.vertex {
                continue;
            }
            let (v, a, b) = (p.vertex, p.slot, q.slot);
            let mut spec = g.spec().clone();
            for port in ports_mut(&mut spec) {
                if port.vertex == v && port.slot == a {
                    port.slot = b;
                } else if port.vertex == v && port.slot == b {
                    port.slot = a;
                }
            }
            tally.record(graph_hit(spec, "Observation 1"), || format!("{} edge {k}", sutcomb::format::to_record(g)));
        }
    }
    tally
}

/// Turns one interior edge into two boundary edges, on graphs with at
/// least `mu - 2` boundary edges.
pub fn gabai_bound(graphs: &[FatGraph]) -> Tally {
    let mut tally = Tally::default();
    for g in graphs {
        let spec = g.spec();
        if spec.boundary_edges.len() + 2 < spec.mu as usize {
            continue;
        }
        for k in 0..spec.interior_edges.len() {
            let mut m = spec.clone();
            let [p, q] = m.interior_edges.remove(k);
            let top = m.boundary_edges.iter().map(|e| e.boundary_pos).max().unwrap_or(0);
            m.boundary_edges.push(BoundaryEdge { end: p, boundary_pos: top + 1 });
            m.boundary_edges.push(BoundaryEdge { end: q, boundary_pos: top + 2 });
            tally.record(graph_hit(m, "Gabai bound"), || format!("{} edge {k}", sutcomb::format::to_record(g)));
        }
    }
    tally
}

/// A sphere or higher-genus boundary component cut by `k` parallel sutures
/// into a chain of regions of alternating sign.
fn chain(first_region: u32, first_suture: u32, k: u32, genera: &[u32], start: RegionSign) -> BoundaryPattern {
    let other = |s: RegionSign| if s == RegionSign::Minus { RegionSign::Plus } else { RegionSign::Minus };
    let mut sign = start;
    let mut regions = Vec::new();
    for i in 0..=k {
        let mut circles = Vec::new();
        if i > 0 {
            circles.push(first_suture + i - 1);
        }
        if i < k {
            circles.push(first_suture + i);
        }
        let genus = genera.get(i as usize).copied().unwrap_or(0);
        regions.push(RegionSpec { id: first_region + i, sign, genus, circles });
        sign = other(sign);
    }
    let sutures = (0..k)
        .map(|i| {
            let (l, r) = (&regions[i as usize], &regions[i as usize + 1]);
            let (minus, plus) = if l.sign == RegionSign::Minus { (l.id, r.id) } else { (r.id, l.id) };
            SutureSpec { id: first_suture + i, minus, plus }
        })
        .collect();
    BoundaryPattern { regions, sutures }
}

pub fn base_sutured() -> Vec<SuturedData> {
    let mut out = Vec::new();
    for comps in 1..=3u32 {
        for k in 1..=4u32 {
            for start in [RegionSign::Minus, RegionSign::Plus] {
                let mut boundary = Vec::new();
                let (mut r, mut s) = (0, 0);
                for c in 0..comps {
                    let genera: Vec<u32> = (0..=k).map(|i| (i + c) % 3).collect();
                    boundary.push(chain(r, s, k + c, &genera, start));
                    r += k + c + 1;
                    s += k + c;
                }
                out.push(SuturedData { boundary, beta_arcs: vec![], beta_loops: 0, irreducible: true, r_taut: true });
            }
        }
    }
    out
}

/// Flips the sign of one region, or swaps the two sides of one suture.
pub fn suture_adjacency(bases: &[SuturedData]) -> Tally {
    let mut tally = Tally::default();
    for data in bases {
        assert!(check_sutured_axioms(data).is_valid(), "base data must be valid");
        for (c, pattern) in data.boundary.iter().enumerate() {
            for i in 0..pattern.regions.len() {
                let mut m = data.clone();
                let r = &mut m.boundary[c].regions[i];
                r.sign = if r.sign == RegionSign::Minus { RegionSign::Plus } else { RegionSign::Minus };
                tally.record(check_sutured_axioms(&m).has("suture-adjacency"), || format!("{data:?} region {i}"));
            }
            for j in 0..pattern.sutures.len() {
                let mut m = data.clone();
                let s = &mut m.boundary[c].sutures[j];
                std::mem::swap(&mut s.minus, &mut s.plus);
                tally.record(check_sutured_axioms(&m).has("suture-adjacency"), || format!("{data:?} suture {j}"));
            }
        }
    }
    tally
}
