//! Constructive search for a Scharlemann cycle in a Gabai disc graph.
//!
//! Start from a λ_i-cycle for a label `i` that no boundary edge carries and
//! shrink: while the current cycle σ (a λ_j-cycle bounding `E`) is not
//! Scharlemann, either some vertex of σ has its `j±1` edge inside `E` and
//! off σ, and following that label from there gives a new cycle inside `E`;
//! or no such edge exists and the interior of `E` holds a smaller Gabai
//! disc graph, whose own λ-cycle is used. Each step strictly lowers the
//! number of edges inside the cycle.

use std::collections::HashSet;

use serde::Serialize;

use super::{Cycle, FatGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStep {
    pub rule: &'static str,
    pub cycle: Cycle,
}

/// Record of one search: the first cycle found, the refinement steps, and
/// the result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchTrace {
    pub label: u32,
    pub first: Cycle,
    pub steps: Vec<SearchStep>,
    pub result: Cycle,
    /// Set when the refinement stalled and the result came from an
    /// exhaustive scan of all λ-cycles.
    pub fallback: bool,
}

impl FatGraph {
    pub fn find_scharlemann_cycle(&self) -> Result<Cycle> {
        self.scharlemann_search().map(|t| t.result)
    }

    pub fn scharlemann_search(&self) -> Result<SearchTrace> {
        self.require_gabai()?;
        let mu = self.spec.mu;
        let carried: HashSet<u32> = self.spec.boundary_edges.iter().map(|b| b.end.slot).collect();
        let label = (1..=mu)
            .find(|l| !carried.contains(l))
            .ok_or_else(|| Error::NotGabai("every label is carried by a boundary edge".into()))?;
        let start = self.min_vertex();
        let first = self
            .walk(start, label)
            .ok_or_else(|| Error::Counterexample(format!("no λ_{label}-cycle from the first vertex")))?;

        let mut steps = Vec::new();
        let mut sigma = first.clone();
        for _ in 0..=self.edge_count() {
            if self.is_scharlemann(&sigma)? {
                return Ok(SearchTrace { label, first, steps, result: sigma, fallback: false });
            }
            match self.refine(&sigma)? {
                Some(step) => {
                    sigma = step.cycle.clone();
                    steps.push(step);
                }
                None => break,
            }
        }
        let result = self.exhaustive_scharlemann()?;
        Ok(SearchTrace { label, first, steps, result, fallback: true })
    }

    fn min_vertex(&self) -> usize {
        (0..self.spec.vertices.len())
            .min_by_key(|&v| self.spec.vertices[v].id)
            .expect("Gabai graphs have a vertex")
    }

    /// One shrinking step, or `None` if it fails to make progress.
    fn refine(&self, sigma: &Cycle) -> Result<Option<SearchStep>> {
        let e = &self.emb;
        let inside = self.disc_side(sigma)?;
        let faces: HashSet<usize> = inside.faces.iter().copied().collect();
        let on_sigma: HashSet<usize> = sigma.edges().into_iter().collect();

        let mut next = None;
        for t in &sigma.traversals {
            let v = self.vertex_index(t.tail.vertex)?;
            let out = e.slot_dart(v, t.tail.slot);
            // The neighbor of the outgoing dart on the side of E.
            let toward = if faces.contains(&e.face_of[e.sigma[out]]) { e.sigma[out] } else { e.sigma_inv(out) };
            let slot = e.vertex_darts[v].iter().position(|&d| d == toward).unwrap() as u32 + 1;
            let off_sigma = match self.step(v, slot) {
                Some((tr, _)) => !on_sigma.contains(&tr.edge),
                None => false,
            };
            if off_sigma {
                next = self.walk(v, slot).map(|c| ("adjacent label", c));
                break;
            }
        }
        if next.is_none() {
            if let Some(&w) = inside.vertices.first() {
                let w = self.vertex_index(w)?;
                next = (1..=self.spec.mu).find_map(|l| self.walk(w, l)).map(|c| ("interior Gabai disc", c));
            }
        }
        let Some((rule, cycle)) = next else { return Ok(None) };
        let allowed: HashSet<u32> = sigma.vertices().into_iter().chain(inside.vertices.iter().copied()).collect();
        let contained = cycle.vertices().iter().all(|v| allowed.contains(v));
        if !contained || cycle.interior_edge_count >= sigma.interior_edge_count {
            return Ok(None);
        }
        Ok(Some(SearchStep { rule, cycle }))
    }

    /// Fewest interior edges among all Scharlemann λ-cycles, ties broken by
    /// cycle order.
    fn exhaustive_scharlemann(&self) -> Result<Cycle> {
        let mut best: Option<Cycle> = None;
        for l in 1..=self.spec.mu {
            for c in self.find_lambda_cycles(l) {
                if self.is_scharlemann(&c)?
                    && best.as_ref().map_or(true, |b| c.interior_edge_count < b.interior_edge_count)
                {
                    best = Some(c);
                }
            }
        }
        best.ok_or_else(|| Error::Counterexample("no λ-cycle of the graph is a Scharlemann cycle".into()))
    }
}
