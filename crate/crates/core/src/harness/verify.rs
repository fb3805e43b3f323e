//! Exhaustive existence checks over enumerated Gabai disc graphs.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;

use super::enumerate::enumerate_gabai_graphs;
use super::report::VerificationReport;
use crate::cobordism::scharlemann_cycle_to_cobordism;
use crate::error::Result;
use crate::fatgraph::{Cycle, FatGraph};
use crate::surfaces::{SurfaceComponent, SurfaceSpec};

fn artifact(g: &FatGraph) -> serde_json::Value {
    serde_json::to_value(g).unwrap_or(serde_json::Value::Null)
}

fn edge_set(c: &Cycle) -> Vec<usize> {
    let mut e = c.edges();
    e.sort_unstable();
    e
}

/// Runs `check` on every admissible Gabai graph and merges the results in
/// instance order. Inadmissible graphs are counted as rejected.
fn over_graphs(
    family: VerificationReport,
    graphs: &[FatGraph],
    check: impl Fn(&FatGraph, u64, &mut VerificationReport) + Sync,
) -> VerificationReport {
    let start = Instant::now();
    let parts: Vec<VerificationReport> = graphs
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let mut r = VerificationReport::new(&family.family);
            if g.require_gabai().is_err() {
                r.bump("rejected", 1);
                return r;
            }
            r.instances = 1;
            check(g, k as u64, &mut r);
            r
        })
        .collect();
    let mut out = parts.into_iter().fold(family, VerificationReport::merge);
    out.wall_time_s = start.elapsed().as_secs_f64();
    out
}

/// Scharlemann-cycle search on each graph, checked against the full list
/// of λ-cycles, plus the cobordism bookkeeping of each cycle found.
pub fn verify_scharlemann_on(graphs: &[FatGraph]) -> VerificationReport {
    over_graphs(VerificationReport::new("scharlemann"), graphs, check_scharlemann)
}

fn check_scharlemann(g: &FatGraph, k: u64, r: &mut VerificationReport) {
    let trace = match g.scharlemann_search() {
        Ok(t) => t,
        Err(e) => return r.fail(k, format!("search failed: {e}"), artifact(g)),
    };
    let c = &trace.result;
    if !matches!(g.is_scharlemann(c), Ok(true)) {
        return r.fail(k, "search returned a cycle that is not Scharlemann", artifact(g));
    }
    let listed = g.find_lambda_cycles(c.tail_label);
    if !listed.iter().any(|x| edge_set(x) == edge_set(c)) {
        return r.fail(k, "search returned a cycle missing from the λ-cycle list", artifact(g));
    }
    r.bump("fallback", u64::from(trace.fallback));
    r.bump("refined", u64::from(edge_set(&trace.first) != edge_set(c)));
    r.bump("steps", trace.steps.len() as u64);

    // Every Scharlemann cycle feeds the cobordism bookkeeping.
    let mut any = false;
    for l in 1..=g.mu() {
        for cyc in g.find_lambda_cycles(l) {
            if !matches!(g.is_scharlemann(&cyc), Ok(true)) {
                continue;
            }
            any = true;
            let genus = (k % 3) as u32;
            let alpha = g.spec().vertices.len() as u64 + 2;
            let qbar = SurfaceSpec::connected(SurfaceComponent::closed(genus)).expect("closed surface");
            match scharlemann_cycle_to_cobordism(g, &cyc, &qbar, alpha) {
                Ok(rep) => {
                    let rs = &rep.r_surface.components()[0];
                    if rs.genus != genus || u64::from(rs.punctures) != alpha - 2 {
                        r.fail(k, format!("cobordism bookkeeping off for the λ_{l}-cycle"), artifact(g));
                    }
                    r.bump("cobordism_checks", 1);
                }
                Err(e) => r.fail(k, format!("cobordism failed: {e}"), artifact(g)),
            }
        }
    }
    if !any {
        r.fail(k, "no λ-cycle is Scharlemann", artifact(g));
    }
}

/// Every label carried by no boundary edge has a λ-cycle.
pub fn verify_lambda_cycles_on(graphs: &[FatGraph]) -> VerificationReport {
    over_graphs(VerificationReport::new("lambda-cycles"), graphs, |g, k, r| {
        let carried: HashSet<u32> = g.spec().boundary_edges.iter().map(|b| b.end.slot).collect();
        for l in (1..=g.mu()).filter(|l| !carried.contains(l)) {
            r.bump("labels", 1);
            if g.find_lambda_cycles(l).is_empty() {
                r.fail(k, format!("no λ_{l}-cycle"), artifact(g));
            }
        }
    })
}

fn run(
    name: &str,
    max_vertices: u32,
    mu: u32,
    max_boundary: u32,
    check: fn(&[FatGraph]) -> VerificationReport,
) -> Result<VerificationReport> {
    let graphs = enumerate_gabai_graphs(max_vertices, mu, max_boundary)?;
    let body = check(&graphs);
    let wall = body.wall_time_s;
    let head = VerificationReport::new(name)
        .param("max_vertices", max_vertices)
        .param("mu", mu)
        .param("max_boundary", max_boundary);
    let mut out = head.merge(body);
    out.wall_time_s = wall;
    Ok(out)
}

/// Scharlemann-cycle search over every graph up to the bounds.
pub fn verify_scharlemann_bounded(max_vertices: u32, mu: u32, max_boundary: u32) -> Result<VerificationReport> {
    run("scharlemann", max_vertices, mu, max_boundary, verify_scharlemann_on)
}

pub fn verify_lambda_cycles_bounded(max_vertices: u32, mu: u32, max_boundary: u32) -> Result<VerificationReport> {
    run("lambda-cycles", max_vertices, mu, max_boundary, verify_lambda_cycles_on)
}

/// All Gabai graphs with at most `max_vertices` vertices for this `mu`
/// (so up to `mu - 1` boundary edges).
pub fn verify_scharlemann_existence(max_vertices: u32, mu: u32) -> VerificationReport {
    verify_scharlemann_bounded(max_vertices, mu.max(1), mu.saturating_sub(1)).expect("bounds below mu")
}

pub fn verify_lambda_cycle_existence(max_vertices: u32, mu: u32) -> VerificationReport {
    verify_lambda_cycles_bounded(max_vertices, mu.max(1), mu.saturating_sub(1)).expect("bounds below mu")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatgraph::fixtures::plus;
    use crate::fatgraph::GraphSpec;

    #[test]
    fn small_families_pass() {
        let r = verify_scharlemann_existence(3, 2);
        assert!(r.passed() && r.instances > 0, "{r}");
        let r = verify_lambda_cycle_existence(3, 3);
        assert!(r.passed() && r.instances > 0, "{r}");
    }

    #[test]
    fn inadmissible_graph_is_rejected_not_failed() {
        let mut graphs = enumerate_gabai_graphs(2, 2, 1).unwrap();
        let bad = GraphSpec::disc(2, plus(&[1, 2])).edge((1, 1), (2, 1)).edge((1, 2), (2, 2)).build().unwrap();
        graphs.push(bad);
        let r = verify_scharlemann_on(&graphs);
        assert!(r.passed());
        assert_eq!(r.stats["rejected"], 1);
        assert_eq!(r.instances as usize, graphs.len() - 1);
    }
}
