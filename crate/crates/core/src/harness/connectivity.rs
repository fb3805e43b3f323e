//! The connectivity dichotomy on spheres with one suture: two full,
//! non-adjacent vertices of one region force `I(Q) ≥ 2μ`.
//!
//! An instance is a sphere graph `Γ'` whose vertices come in pairs, the two
//! ends of an arc of `β` (one in `R_-`, one in `R_+`), together with a
//! grouping of the boundary curves of `Q` into pieces. The curves are read
//! off the graph: follow an edge, then pass through the arc or across the
//! suture at its far end, leaving by the same slot or crossing position.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::report::VerificationReport;
use crate::error::{Error, Result};
use crate::fatgraph::{FatGraph, GraphSpec, Port, Sign, SutureEdge, VertexSpec};
use crate::sutured::{index, BoundaryWord, DiscType, Letter, ParamSurface, Piece};

/// Curves of `∂Q` grouped into one piece of genus `genus`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceGroup {
    #[serde(default)]
    pub genus: u32,
    pub curves: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectivityInstance {
    pub graph: GraphSpec,
    /// Arc `k` joins `arcs[k][0]` in `R_-` to `arcs[k][1]` in `R_+`.
    pub arcs: Vec<[u32; 2]>,
    pub pieces: Vec<PieceGroup>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum End {
    Slot(Port),
    Crossing(i64, Sign),
}

/// One boundary curve: its letters and the loops of `Γ'` it runs along,
/// by base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub word: BoundaryWord,
    pub loops: BTreeMap<u32, u64>,
    pub arc_visits: BTreeMap<u32, u64>,
}

impl ConnectivityInstance {
    fn mates(&self) -> Result<HashMap<u32, (u32, u32)>> {
        let mut mate = HashMap::new();
        for (k, &[m, p]) in self.arcs.iter().enumerate() {
            for (a, b) in [(m, p), (p, m)] {
                if mate.insert(a, (b, k as u32)).is_some() {
                    return Err(Error::Structure(format!("vertex {a} ends two arcs")));
                }
            }
        }
        Ok(mate)
    }

    /// Builds the graph and checks that arcs pair every vertex of `R_-`
    /// with one of `R_+` of equal valence.
    pub fn graph(&self) -> Result<FatGraph> {
        let g = self.graph.clone().build()?;
        let report = g.admissible();
        if !report.is_valid() {
            return Err(Error::Structure(report.to_string().trim_end().replace('\n', "; ")));
        }
        let mate = self.mates()?;
        for v in g.vertex_ids() {
            if !mate.contains_key(&v) {
                return Err(Error::Structure(format!("vertex {v} ends no arc")));
            }
        }
        for &[m, p] in &self.arcs {
            if g.vertex(m)?.region != Some(Sign::Minus) || g.vertex(p)?.region != Some(Sign::Plus) {
                return Err(Error::Structure(format!("arc {m}-{p} must run from R_- to R_+")));
            }
            if g.valence(m)? != g.valence(p)? {
                return Err(Error::Structure(format!("arc ends {m} and {p} have different valence")));
            }
        }
        Ok(g)
    }

    /// The boundary curves of `Q`, in order of their least edge end.
    pub fn curves(&self) -> Result<Vec<Curve>> {
        let g = self.graph()?;
        let mate = self.mates()?;
        let spec = g.spec();
        let mut partner: BTreeMap<End, (End, Option<u32>)> = BTreeMap::new();
        for [a, b] in &spec.interior_edges {
            let looped = (a.vertex == b.vertex).then_some(a.vertex);
            partner.insert(End::Slot(*a), (End::Slot(*b), looped));
            partner.insert(End::Slot(*b), (End::Slot(*a), looped));
        }
        for se in &spec.suture_edges {
            let side = g.vertex(se.end.vertex)?.region.expect("checked by admissible");
            partner.insert(End::Slot(se.end), (End::Crossing(se.suture_pos, side), None));
            partner.insert(End::Crossing(se.suture_pos, side), (End::Slot(se.end), None));
        }
        let jump = |e: End| -> (End, Letter) {
            match e {
                End::Slot(p) => {
                    let (w, k) = mate[&p.vertex];
                    (End::Slot(Port::new(w, p.slot)), Letter::Arc(k))
                }
                End::Crossing(pos, side) => (End::Crossing(pos, side.flip()), Letter::Suture(0)),
            }
        };
        let mut seen = HashSet::new();
        let mut curves = Vec::new();
        for &start in partner.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut curve = Curve { word: BoundaryWord::new(Vec::new()), loops: BTreeMap::new(), arc_visits: BTreeMap::new() };
            let mut letters = Vec::new();
            let mut x = start;
            loop {
                seen.insert(x);
                let (y, looped) = partner[&x];
                seen.insert(y);
                if let (Some(v), End::Slot(p)) = (looped, x) {
                    // Count each loop once, from its first end.
                    if p < match y {
                        End::Slot(q) => q,
                        _ => unreachable!(),
                    } {
                        *curve.loops.entry(v).or_default() += 1;
                    }
                }
                let (z, letter) = jump(y);
                if let End::Slot(p) = y {
                    *curve.arc_visits.entry(p.vertex).or_default() += 1;
                    *curve.arc_visits.entry(mate[&p.vertex].0).or_default() += 1;
                }
                letters.push(letter);
                if z == start {
                    break;
                }
                x = z;
            }
            curve.word = BoundaryWord::new(letters);
            curves.push(curve);
        }
        Ok(curves)
    }

    pub fn param_surface(&self, curves: &[Curve]) -> Result<ParamSurface> {
        let mut used = vec![false; curves.len()];
        let mut pieces = Vec::new();
        for group in &self.pieces {
            let mut words = Vec::new();
            for &c in &group.curves {
                let slot = used.get_mut(c).ok_or_else(|| Error::Reference(format!("no curve {c}")))?;
                if std::mem::replace(slot, true) {
                    return Err(Error::Structure(format!("curve {c} is in two pieces")));
                }
                words.push(curves[c].word.clone());
            }
            pieces.push(Piece::new(group.genus, words));
        }
        if let Some(c) = used.iter().position(|u| !u) {
            return Err(Error::Structure(format!("curve {c} is in no piece")));
        }
        Ok(ParamSurface::new(pieces))
    }
}

/// What one instance shows about the dichotomy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DichotomyCheck {
    pub index: u64,
    /// Non-adjacent pairs of full vertices sharing a region.
    pub pairs: Vec<(u32, u32)>,
    pub problems: Vec<String>,
}

/// Index by direct summation over the words: `-2χ` per piece plus one per
/// letter.
fn summed_index(q: &ParamSurface) -> i64 {
    q.pieces
        .iter()
        .map(|p| {
            let chi = 2 - 2 * i64::from(p.surface.genus) - p.words.len() as i64;
            -2 * chi + p.words.iter().map(|w| w.letters().len() as i64).sum::<i64>()
        })
        .sum()
}

pub fn check_dichotomy(inst: &ConnectivityInstance) -> Result<DichotomyCheck> {
    let g = inst.graph()?;
    let curves = inst.curves()?;
    let q = inst.param_surface(&curves)?;
    for p in &q.pieces {
        // Such discs are removed before the lemma applies.
        if p.is_disc() && matches!(DiscType::of_word(&p.words[0]), DiscType::Cancelling | DiscType::NonSelfAmalgamating) {
            return Err(Error::Precondition("Q has a cancelling or non-self-amalgamating disc".into()));
        }
    }
    let idx = index(&q)?;
    let mu = u64::from(g.mu());
    let mut problems = Vec::new();
    if summed_index(&q) != idx as i64 {
        problems.push(format!("index {idx} disagrees with the summed index {}", summed_index(&q)));
    }
    let mut ids: Vec<u32> = g.vertex_ids().collect();
    ids.sort_unstable();
    let mut pairs = Vec::new();
    for (i, &v) in ids.iter().enumerate() {
        for &w in &ids[i + 1..] {
            let same = g.vertex(v)?.region == g.vertex(w)?.region;
            let (rv, fv) = g.fullness(v)?;
            let (rw, fw) = g.fullness(w)?;
            if !(same && fv && fw) || g.adjacent(v, w) {
                continue;
            }
            pairs.push((v, w));
            if idx < 2 * mu {
                problems.push(format!("full vertices {v}, {w} are non-adjacent but I(Q) = {idx} < 2mu = {}", 2 * mu));
            }
            // Per piece, traversals of e_v and e_w minus twice the loops at
            // v and w bound the piece's index.
            let mut total = 0i64;
            let mut offset = 0;
            for (group, piece) in inst.pieces.iter().zip(&q.pieces) {
                let bound: i64 = group
                    .curves
                    .iter()
                    .map(|&c| {
                        let cv = &curves[c];
                        let st = cv.arc_visits.get(&v).copied().unwrap_or(0)
                            + cv.arc_visits.get(&w).copied().unwrap_or(0);
                        let l = cv.loops.get(&v).copied().unwrap_or(0) + cv.loops.get(&w).copied().unwrap_or(0);
                        st as i64 - 2 * l as i64
                    })
                    .sum();
                if piece.index() < bound {
                    problems.push(format!("piece {offset} has index {} below its bound {bound}", piece.index()));
                }
                total += bound;
                offset += 1;
            }
            if total != (rv + rw) as i64 {
                problems.push(format!("bounds sum to {total}, not rho(v) + rho(w) = {}", rv + rw));
            }
        }
    }
    Ok(DichotomyCheck { index: idx, pairs, problems })
}

/// Random family of sphere-one-suture instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectivityConfig {
    pub mu: u32,
    pub max_arcs: u32,
    /// Arc ends have valence between `mu` and `mu + extra_valence`.
    pub extra_valence: u32,
    pub max_crossings: u32,
    pub instances: u64,
    pub seed: u64,
}

impl Default for ConnectivityConfig {
    fn default() -> Self {
        Self { mu: 2, max_arcs: 3, extra_valence: 1, max_crossings: 4, instances: 2000, seed: 1 }
    }
}

fn random_instance(cfg: &ConnectivityConfig, rng: &mut ChaCha8Rng) -> ConnectivityInstance {
    let arcs = rng.gen_range(1..=cfg.max_arcs.max(1));
    let valence: Vec<u32> = (0..arcs).map(|_| cfg.mu + rng.gen_range(0..=cfg.extra_valence)).collect();
    let total: u32 = valence.iter().sum();
    let mut m = rng.gen_range(0..=cfg.max_crossings);
    if (total + m) % 2 == 1 {
        m = if m == cfg.max_crossings { m.saturating_sub(1) } else { m + 1 };
    }
    let mut vertices = Vec::new();
    let mut arc_ids = Vec::new();
    for (k, &d) in valence.iter().enumerate() {
        let (minus, plus) = (2 * k as u32 + 1, 2 * k as u32 + 2);
        for (id, region) in [(minus, Sign::Minus), (plus, Sign::Plus)] {
            vertices.push(VertexSpec { id, sign: Sign::Plus, region: Some(region), valence: Some(d) });
        }
        arc_ids.push([minus, plus]);
    }
    let mut spec = GraphSpec::sphere(cfg.mu, vertices);
    for side in [Sign::Minus, Sign::Plus] {
        let mut ends: Vec<End> = Vec::new();
        for (k, &d) in valence.iter().enumerate() {
            let v = if side == Sign::Minus { 2 * k as u32 + 1 } else { 2 * k as u32 + 2 };
            ends.extend((1..=d).map(|s| End::Slot(Port::new(v, s))));
        }
        ends.extend((0..m as i64).map(|p| End::Crossing(p, side)));
        ends.shuffle(rng);
        for pair in ends.chunks(2) {
            match (pair[0], pair[1]) {
                (End::Slot(a), End::Slot(b)) => spec.interior_edges.push([a, b]),
                (End::Slot(a), End::Crossing(p, _)) | (End::Crossing(p, _), End::Slot(a)) => {
                    spec.suture_edges.push(SutureEdge { end: a, suture_pos: p })
                }
                // Suture-to-suture arcs are outside the model; the caller
                // rejects the draw.
                _ => spec.suture_edges.push(SutureEdge { end: Port::new(0, 0), suture_pos: -1 }),
            }
        }
    }
    ConnectivityInstance { graph: spec, arcs: arc_ids, pieces: Vec::new() }
}

fn group_curves(n: usize, rng: &mut ChaCha8Rng) -> Vec<PieceGroup> {
    let mut groups: Vec<PieceGroup> = Vec::new();
    let mut label: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
    label.iter_mut().for_each(|l| *l %= n.max(1));
    let mut order: BTreeMap<usize, usize> = BTreeMap::new();
    for (c, &l) in label.iter().enumerate() {
        let at = *order.entry(l).or_insert_with(|| {
            groups.push(PieceGroup { genus: 0, curves: Vec::new() });
            groups.len() - 1
        });
        groups[at].curves.push(c);
    }
    for g in &mut groups {
        if g.curves.len() > 1 && rng.gen_bool(0.2) {
            g.genus = 1;
        }
    }
    groups
}

/// Draws instances until `cfg.instances` usable ones are found (or a cap
/// on draws is hit) and checks each.
pub fn verify_connectivity_dichotomy(cfg: &ConnectivityConfig) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("connectivity")
        .param("mu", cfg.mu)
        .param("max_arcs", cfg.max_arcs)
        .param("extra_valence", cfg.extra_valence)
        .param("max_crossings", cfg.max_crossings)
        .param("seed", cfg.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let cap = cfg.instances.saturating_mul(1000).max(1000);
    let mut draws = 0;
    while report.instances < cfg.instances && draws < cap {
        draws += 1;
        let mut inst = random_instance(cfg, &mut rng);
        let Ok(curves) = inst.curves() else { continue };
        inst.pieces = group_curves(curves.len(), &mut rng);
        match check_dichotomy(&inst) {
            Ok(check) => {
                let k = report.instances;
                report.instances += 1;
                report.bump("dichotomy_cases", u64::from(!check.pairs.is_empty()));
                report.bump("non_adjacent_pairs", check.pairs.len() as u64);
                for p in check.problems {
                    report.fail(k, p, serde_json::to_value(&inst).unwrap_or_default());
                }
            }
            Err(_) => report.bump("rejected_after_grouping", 1),
        }
    }
    report.bump("draws", draws);
    report.wall_time_s = start.elapsed().as_secs_f64();
    report
}
