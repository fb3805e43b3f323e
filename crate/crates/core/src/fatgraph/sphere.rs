//! Queries on graphs in a sphere cut by one suture into `R_-` and `R_+`.

use serde::Serialize;

use super::embed::{DartEdge, NodeKind};
use super::{Ambient, EdgeId, FatGraph, Sign};
use crate::error::{Error, Result};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LoopClass {
    Essential,
    Inessential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MissingPiece {
    /// Two vertices of one region with no edge between them.
    Edge(u32, u32),
    /// A vertex with no edge to the suture.
    Suture(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompleteStructure {
    pub complete: bool,
    pub witness: Option<MissingPiece>,
    pub report: Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessSite {
    Vertex(u32),
    Suture(Sign),
}

/// A vertex or suture side meeting fewer than `mu` edges, around which a
/// Gabai disc is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GabaiWitness {
    pub site: WitnessSite,
    pub case: u8,
    pub rho: u64,
    /// The disc exists only after sliding across cancelling discs, which
    /// this model does not perform.
    pub pre_slide: bool,
}

impl FatGraph {
    /// `ρ(v)`: edges with exactly one end at `v`. Full iff `ρ(v) ≥ mu`.
    pub fn fullness(&self, v: u32) -> Result<(u64, bool)> {
        let k = self.vertex_index(v)?;
        let e = &self.emb;
        let rho = e.vertex_darts[k].iter().filter(|&&d| e.dart_node[e.alpha[d]] != e.dart_node[d]).count() as u64;
        Ok((rho, rho >= u64::from(self.spec.mu)))
    }

    /// `ρ(δ)` for the suture seen from one side: edges of that region with
    /// one end on the suture.
    pub fn suture_fullness(&self, side: Sign) -> Result<(u64, bool)> {
        self.require_suture()?;
        let rho = self
            .spec
            .suture_edges
            .iter()
            .filter(|se| self.vertex(se.end.vertex).ok().and_then(|v| v.region) == Some(side))
            .count() as u64;
        Ok((rho, rho >= u64::from(self.spec.mu)))
    }

    fn require_sphere(&self) -> Result<()> {
        if self.spec.ambient != Ambient::Sphere {
            return Err(Error::Precondition("operation needs a sphere graph".into()));
        }
        Ok(())
    }

    fn require_suture(&self) -> Result<()> {
        self.require_sphere()?;
        if self.emb.suture_node.is_none() {
            return Err(Error::Precondition("graph has no marked suture".into()));
        }
        Ok(())
    }

    fn loop_at(&self, edge: usize) -> Result<u32> {
        let [a, b] = self.spec.interior_edges.get(edge).ok_or(Error::UnknownEdge(edge))?;
        if a.vertex != b.vertex {
            return Err(Error::Precondition(format!("edge {edge} joins {a} to {b}, not a loop")));
        }
        Ok(a.vertex)
    }

    /// Inessential iff one side of the loop holds no vertex.
    pub fn classify_loop(&self, edge: usize) -> Result<LoopClass> {
        self.require_sphere()?;
        let v = self.loop_at(edge)?;
        let sides = self.sides_of(&[edge], &[v])?;
        Ok(if sides.iter().any(|s| s.vertices.is_empty()) {
            LoopClass::Inessential
        } else {
            LoopClass::Essential
        })
    }

    fn region_of(&self, v: u32) -> Option<Sign> {
        self.vertex(v).ok().and_then(|s| s.region)
    }

    /// Whether each region's vertices are pairwise adjacent and each meets
    /// the suture. A complete structure with more than three vertices in a
    /// region cannot be planar and is reported.
    pub fn complete_graph_structure(&self) -> Result<CompleteStructure> {
        self.require_suture()?;
        let mut report = Report::new();
        let mut witness = None;
        for side in [Sign::Minus, Sign::Plus] {
            let mut vs: Vec<u32> = self.vertex_ids().filter(|&v| self.region_of(v) == Some(side)).collect();
            vs.sort_unstable();
            let mut region_complete = true;
            for (i, &v) in vs.iter().enumerate() {
                for &w in &vs[i + 1..] {
                    if !self.adjacent(v, w) {
                        region_complete = false;
                        witness.get_or_insert(MissingPiece::Edge(v, w));
                    }
                }
                if !self.spec.suture_edges.iter().any(|se| se.end.vertex == v) {
                    region_complete = false;
                    witness.get_or_insert(MissingPiece::Suture(v));
                }
            }
            if region_complete && vs.len() > 3 {
                report.violation(
                    "Kuratowski",
                    format!("R{side} has {} pairwise adjacent vertices all meeting the suture", vs.len()),
                );
            }
        }
        Ok(CompleteStructure { complete: witness.is_none(), witness, report })
    }

    pub fn adjacent(&self, v: u32, w: u32) -> bool {
        self.spec
            .interior_edges
            .iter()
            .any(|[a, b]| (a.vertex == v && b.vertex == w) || (a.vertex == w && b.vertex == v))
    }

    fn loops_at(&self, v: u32) -> Vec<usize> {
        (0..self.spec.interior_edges.len())
            .filter(|&k| self.loop_at(k).ok() == Some(v))
            .collect()
    }

    /// Searches for a non-full vertex or suture side meeting the
    /// combinatorial hypotheses under which a Gabai disc exists: (1) a
    /// vertex with no essential loop; (2) a vertex with an essential loop
    /// one of whose sides has all its vertices in one region; (3) a suture
    /// side.
    pub fn gabai_witness_search(&self) -> Result<Option<GabaiWitness>> {
        self.require_sphere()?;
        let mu = u64::from(self.spec.mu);
        let mut ids: Vec<u32> = self.vertex_ids().collect();
        ids.sort_unstable();
        let mut case2 = None;
        for &v in &ids {
            let (rho, full) = self.fullness(v)?;
            if full {
                continue;
            }
            let mut essential = Vec::new();
            for k in self.loops_at(v) {
                if self.classify_loop(k)? == LoopClass::Essential {
                    essential.push(k);
                }
            }
            if essential.is_empty() {
                return Ok(Some(GabaiWitness { site: WitnessSite::Vertex(v), case: 1, rho, pre_slide: false }));
            }
            if case2.is_none() {
                for &k in &essential {
                    let one_region = self.sides_of(&[k], &[v])?.iter().any(|s| {
                        let mut regions = s.vertices.iter().map(|&w| self.region_of(w));
                        let first = regions.next().flatten();
                        first.is_some() && regions.all(|r| r == first)
                    });
                    if one_region {
                        case2 = Some(GabaiWitness { site: WitnessSite::Vertex(v), case: 2, rho, pre_slide: true });
                        break;
                    }
                }
            }
        }
        if case2.is_some() {
            return Ok(case2);
        }
        if self.emb.suture_node.is_some() {
            for side in [Sign::Minus, Sign::Plus] {
                let (rho, _) = self.suture_fullness(side)?;
                if rho < mu {
                    return Ok(Some(GabaiWitness { site: WitnessSite::Suture(side), case: 3, rho, pre_slide: true }));
                }
            }
        }
        Ok(None)
    }

    /// Vertices whose every incident edge is a loop, by id.
    pub fn loop_only_vertices(&self) -> Vec<u32> {
        let e = &self.emb;
        (0..self.spec.vertices.len())
            .filter(|&k| {
                e.vertex_darts[k].iter().all(|&d| {
                    matches!(e.dart_edge[d], DartEdge::Graph(EdgeId::Interior(_)))
                        && e.nodes[e.dart_node[e.alpha[d]]] == NodeKind::Vertex(k)
                })
            })
            .map(|k| self.spec.vertices[k].id)
            .collect()
    }
}
