//! Sutured boundary data, parameterizing surfaces and their index.
//!
//! Irreducibility of `M - β` and tautness of `R(γ)` are 3-manifold facts;
//! they enter as declared flags and are echoed in reports, never computed.
//! Annular neighborhoods of sutures are implicit: a suture is an id with two
//! adjacent regions.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::report::Report;
use crate::surfaces::{SurfaceComponent, SurfaceSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionSign {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "T")]
    Torus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionSpec {
    pub id: u32,
    pub sign: RegionSign,
    #[serde(default)]
    pub genus: u32,
    /// Boundary circles, named by the suture they run along.
    #[serde(default)]
    pub circles: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SutureSpec {
    pub id: u32,
    pub minus: u32,
    pub plus: u32,
}

/// One component of `∂M` cut into regions by sutures.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryPattern {
    pub regions: Vec<RegionSpec>,
    #[serde(default)]
    pub sutures: Vec<SutureSpec>,
}

/// An edge of β, given by the regions containing its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BetaArc {
    pub minus_end: u32,
    pub plus_end: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuturedData {
    #[serde(default)]
    pub boundary: Vec<BoundaryPattern>,
    #[serde(default)]
    pub beta_arcs: Vec<BetaArc>,
    #[serde(default)]
    pub beta_loops: u32,
    /// Declared: `M - β` is irreducible.
    pub irreducible: bool,
    /// Declared: `R_-(γ)`, `R_+(γ)` and `T(γ)` are β-taut.
    #[serde(default = "yes")]
    pub r_taut: bool,
}

fn yes() -> bool {
    true
}

impl SuturedData {
    fn regions(&self) -> HashMap<u32, &RegionSpec> {
        self.boundary
            .iter()
            .flat_map(|b| b.regions.iter())
            .map(|r| (r.id, r))
            .collect()
    }

    fn suture_ids(&self) -> BTreeSet<u32> {
        self.boundary
            .iter()
            .flat_map(|b| b.sutures.iter().map(|s| s.id))
            .collect()
    }
}

/// Checks the boundary-pattern axioms of a sutured manifold that are
/// decidable from the data.
pub fn check_sutured_axioms(data: &SuturedData) -> Report {
    let mut report = Report::new();
    let mut seen_regions = BTreeSet::new();
    let mut seen_sutures = BTreeSet::new();
    for pattern in &data.boundary {
        for r in &pattern.regions {
            if !seen_regions.insert(r.id) {
                report.violation("ids", format!("region id {} used twice", r.id));
            }
        }
        for s in &pattern.sutures {
            if !seen_sutures.insert(s.id) {
                report.violation("ids", format!("suture id {} used twice", s.id));
            }
        }
    }
    let regions = data.regions();

    for (k, pattern) in data.boundary.iter().enumerate() {
        let local: HashMap<u32, &RegionSpec> =
            pattern.regions.iter().map(|r| (r.id, r)).collect();
        for s in &pattern.sutures {
            for (end, want) in [(s.minus, RegionSign::Minus), (s.plus, RegionSign::Plus)] {
                match local.get(&end) {
                    None => report.violation(
                        "reference",
                        format!("suture {} names region {end} outside boundary component {k}", s.id),
                    ),
                    Some(r) if r.sign != want => report.violation(
                        "suture-adjacency",
                        format!(
                            "suture {} expects region {} of sign {:?} but it has sign {:?}",
                            s.id, r.id, want, r.sign
                        ),
                    ),
                    Some(_) => {}
                }
            }
        }
        for r in &pattern.regions {
            if r.sign == RegionSign::Torus {
                if r.genus != 1 || !r.circles.is_empty() {
                    report.violation(
                        "torus-regions",
                        format!(
                            "T region {} must be a closed torus, has genus {} and {} boundary circles",
                            r.id,
                            r.genus,
                            r.circles.len()
                        ),
                    );
                }
                if pattern.regions.len() > 1 || !pattern.sutures.is_empty() {
                    report.violation(
                        "torus-regions",
                        format!("T region {} must be a whole boundary component", r.id),
                    );
                }
            }
        }
        // Each suture bounds exactly one circle in its R_- region and one in
        // its R_+ region.
        let mut uses: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for r in &pattern.regions {
            for c in &r.circles {
                uses.entry(*c).or_default().push(r.id);
            }
        }
        for s in &pattern.sutures {
            let mut want = vec![s.minus, s.plus];
            want.sort_unstable();
            let mut got = uses.remove(&s.id).unwrap_or_default();
            got.sort_unstable();
            if got != want {
                report.violation(
                    "circle-bijection",
                    format!(
                        "suture {} should bound circles of regions {:?}, found {:?}",
                        s.id, want, got
                    ),
                );
            }
        }
        for (c, owners) in uses {
            report.violation(
                "circle-bijection",
                format!("circle {c} of regions {owners:?} has no suture"),
            );
        }
        if !pattern.regions.is_empty() && !boundary_connected(pattern) {
            report.violation(
                "boundary-connected",
                format!("regions of boundary component {k} are not joined by sutures"),
            );
        }
        let chi: i64 = pattern
            .regions
            .iter()
            .map(|r| 2 - 2 * i64::from(r.genus) - r.circles.len() as i64)
            .sum();
        if chi > 2 || chi % 2 != 0 {
            report.violation(
                "boundary-surface",
                format!("boundary component {k} has Euler characteristic {chi}, not a closed orientable surface"),
            );
        }
    }

    for (e, arc) in data.beta_arcs.iter().enumerate() {
        for end in [arc.minus_end, arc.plus_end] {
            if !regions.contains_key(&end) {
                report.violation("reference", format!("β edge {e} ends in unknown region {end}"));
            }
        }
    }
    report
}

fn boundary_connected(pattern: &BoundaryPattern) -> bool {
    let ids: Vec<u32> = pattern.regions.iter().map(|r| r.id).collect();
    let mut reached = BTreeSet::from([ids[0]]);
    let mut changed = true;
    while changed {
        changed = false;
        for s in &pattern.sutures {
            let (a, b) = (reached.contains(&s.minus), reached.contains(&s.plus));
            if a != b {
                reached.insert(s.minus);
                reached.insert(s.plus);
                changed = true;
            }
        }
    }
    ids.iter().all(|id| reached.contains(id))
}

/// Checks the β-tautness conditions that are decidable from boundary data;
/// the rest are echoed from the declared flags.
pub fn check_beta_taut_conditions(data: &SuturedData) -> Report {
    let mut report = Report::new();
    report.declared("irreducible", format!("M - β irreducible: {}", data.irreducible));
    report.declared("r-taut", format!("R(γ) and T(γ) β-taut: {}", data.r_taut));
    if !data.irreducible {
        report.violation("irreducible", "declared reducible");
    }
    if !data.r_taut {
        report.violation("r-taut", "boundary surfaces declared not β-taut");
    }
    let regions = data.regions();
    for (e, arc) in data.beta_arcs.iter().enumerate() {
        let signs: Vec<Option<RegionSign>> = [arc.minus_end, arc.plus_end]
            .iter()
            .map(|id| regions.get(id).map(|r| r.sign))
            .collect();
        if signs.contains(&None) {
            report.violation("reference", format!("β edge {e} ends in an unknown region"));
            continue;
        }
        if signs.contains(&Some(RegionSign::Torus)) {
            report.violation("beta-disjoint", format!("β edge {e} has an endpoint in T(γ)"));
        } else if signs[0] == signs[1] {
            report.violation(
                "beta-ends",
                format!("β edge {e} has both endpoints in R{}", sign_str(signs[0].unwrap())),
            );
        }
    }
    report
}

fn sign_str(s: RegionSign) -> &'static str {
    match s {
        RegionSign::Minus => "-",
        RegionSign::Plus => "+",
        RegionSign::Torus => "T",
    }
}

/// One letter of a boundary word of a parameterizing surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// Crossing of the suture with this id.
    Suture(u32),
    /// Spanning arc of `A(e)` for β edge `e`.
    Arc(u32),
    /// A whole boundary circle inside `A(e)`.
    SpanCircle(u32),
    /// A whole boundary circle on the torus around β loop `k`.
    Loop(u32),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Suture(i) => write!(f, "S{i}"),
            Letter::Arc(i) => write!(f, "A{i}"),
            Letter::SpanCircle(i) => write!(f, "C{i}"),
            Letter::Loop(i) => write!(f, "L{i}"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("bad boundary letter {s:?}"));
        let mut chars = s.chars();
        let tag = chars.next().ok_or_else(bad)?;
        let id: u32 = chars.as_str().parse().map_err(|_| bad())?;
        match tag {
            'S' => Ok(Letter::Suture(id)),
            'A' => Ok(Letter::Arc(id)),
            'C' => Ok(Letter::SpanCircle(id)),
            'L' => Ok(Letter::Loop(id)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Cyclic word read along one boundary curve of a parameterizing surface.
/// Equality is up to rotation and reversal.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoundaryWord(pub Vec<Letter>);

impl BoundaryWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn suture_crossings(&self) -> u64 {
        self.0.iter().filter(|l| matches!(l, Letter::Suture(_))).count() as u64
    }

    pub fn spanning_arcs(&self) -> u64 {
        self.0.iter().filter(|l| matches!(l, Letter::Arc(_))).count() as u64
    }

    /// Least rotation of the word or of its reverse.
    pub fn canonical(&self) -> Vec<Letter> {
        let n = self.0.len();
        let mut best = self.0.clone();
        let mut rev = self.0.clone();
        rev.reverse();
        for w in [&self.0, &rev] {
            for r in 0..n {
                let rotated: Vec<Letter> = w[r..].iter().chain(&w[..r]).copied().collect();
                if rotated < best {
                    best = rotated;
                }
            }
        }
        best
    }
}

impl PartialEq for BoundaryWord {
    fn eq(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.canonical() == other.canonical()
    }
}

impl Eq for BoundaryWord {}

/// Connected piece of a parameterizing surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Piece {
    pub surface: SurfaceComponent,
    pub words: Vec<BoundaryWord>,
}

impl Piece {
    /// A genus `g` piece whose boundary count is the number of words.
    pub fn new(genus: u32, words: Vec<BoundaryWord>) -> Self {
        let surface = SurfaceComponent::new(genus, words.len() as u32, 0);
        Self { surface, words }
    }

    pub fn disc(word: BoundaryWord) -> Self {
        Self::new(0, vec![word])
    }

    pub fn is_disc(&self) -> bool {
        self.surface.genus == 0 && self.surface.boundary == 1 && self.words.len() == 1
    }

    pub fn euler(&self) -> i64 {
        self.surface.euler()
    }

    /// `-2χ + |∂q ∩ γ| + μ(q)`.
    pub fn index(&self) -> i64 {
        let crossings: u64 = self.words.iter().map(BoundaryWord::suture_crossings).sum();
        let arcs: u64 = self.words.iter().map(BoundaryWord::spanning_arcs).sum();
        -2 * self.euler() + crossings as i64 + arcs as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamSurface {
    pub pieces: Vec<Piece>,
    /// Optional declared spanning-arc counts per β edge, checked against the words.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_per_edge: Option<BTreeMap<u32, u64>>,
}

impl ParamSurface {
    pub fn new(pieces: Vec<Piece>) -> Self {
        Self { pieces, mu_per_edge: None }
    }

    /// Spanning arcs per β edge, read off the words.
    pub fn arc_counts(&self) -> BTreeMap<u32, u64> {
        let mut counts = BTreeMap::new();
        for l in self.pieces.iter().flat_map(|p| &p.words).flat_map(|w| &w.0) {
            if let Letter::Arc(e) = l {
                *counts.entry(*e).or_insert(0) += 1;
            }
        }
        counts
    }

    pub fn as_surface(&self) -> SurfaceSpec {
        SurfaceSpec::new(self.pieces.iter().map(|p| p.surface.clone()).collect())
            .expect("pieces carry no puncture signs")
    }
}

/// Conditions checkable without the sutured data.
fn intrinsic_checks(q: &ParamSurface, report: &mut Report) {
    for (k, piece) in q.pieces.iter().enumerate() {
        if piece.surface.boundary as usize != piece.words.len() || piece.surface.punctures != 0 {
            report.violation(
                "piece-shape",
                format!(
                    "piece {k} declares {} boundary circles and {} punctures but has {} words",
                    piece.surface.boundary,
                    piece.surface.punctures,
                    piece.words.len()
                ),
            );
        }
        for (w, word) in piece.words.iter().enumerate() {
            let circles = word.0.iter().filter(|l| matches!(l, Letter::SpanCircle(_) | Letter::Loop(_))).count();
            if circles > 0 && word.0.len() != 1 {
                report.violation(
                    "P2",
                    format!("piece {k} word {w}: a circle of ∂Q ∩ A(e) must be a whole boundary curve"),
                );
            }
        }
        if piece.surface.genus == 0 && piece.words.is_empty() {
            report.violation("P3", format!("piece {k} is a sphere"));
        }
        if piece.is_disc() && piece.words[0].0.is_empty() {
            report.violation("P3", format!("piece {k} is a disc disjoint from γ ∪ ∂η(β)"));
        }
        if piece.index() < 0 {
            report.violation("index-sign", format!("piece {k} has negative index {}", piece.index()));
        }
    }
}

/// Checks (P1)-(P3) for `q` against `data`. Dangling ids are an error.
pub fn check_param_conditions(q: &ParamSurface, data: &SuturedData) -> Result<Report> {
    let sutures = data.suture_ids();
    let regions = data.regions();
    for (k, piece) in q.pieces.iter().enumerate() {
        for l in piece.words.iter().flat_map(|w| &w.0) {
            let ok = match *l {
                Letter::Suture(s) => sutures.contains(&s),
                Letter::Arc(e) | Letter::SpanCircle(e) => (e as usize) < data.beta_arcs.len(),
                Letter::Loop(i) => i < data.beta_loops,
            };
            if !ok {
                return Err(Error::Reference(format!("piece {k} letter {l} names no such object")));
            }
        }
    }
    let mut report = Report::new();
    intrinsic_checks(q, &mut report);
    // Sides of ∂M alternate at each suture crossing and at each traversal of
    // an edge whose ends lie on opposite sides.
    let flips = |e: u32| {
        let arc = data.beta_arcs[e as usize];
        let side = |id| regions.get(&id).map(|r| r.sign);
        side(arc.minus_end) != side(arc.plus_end)
    };
    for (k, piece) in q.pieces.iter().enumerate() {
        for (w, word) in piece.words.iter().enumerate() {
            let changes = word
                .0
                .iter()
                .filter(|l| match l {
                    Letter::Suture(_) => true,
                    Letter::Arc(e) => flips(*e),
                    _ => false,
                })
                .count();
            if changes % 2 != 0 {
                report.violation(
                    "P1",
                    format!("piece {k} word {w} changes side of γ an odd number of times"),
                );
            }
        }
    }
    if let Some(declared) = &q.mu_per_edge {
        let counted = q.arc_counts();
        for e in declared.keys().chain(counted.keys()).collect::<BTreeSet<_>>() {
            let (d, c) = (declared.get(e).copied().unwrap_or(0), counted.get(e).copied().unwrap_or(0));
            if d != c {
                report.violation("mu", format!("edge {e}: declared μ = {d}, words traverse it {c} times"));
            }
        }
    }
    Ok(report)
}

/// `I(Q) = -2χ(Q) + |∂Q ∩ γ| + μ(Q)`, summed over pieces.
pub fn index(q: &ParamSurface) -> Result<u64> {
    let mut report = Report::new();
    intrinsic_checks(q, &mut report);
    if !report.is_valid() {
        return Err(Error::Precondition(report.to_string().trim_end().replace('\n', "; ")));
    }
    Ok(q.pieces.iter().map(|p| p.index() as u64).sum())
}

/// Index of `Q = Q̄ ∩ N` when `Q̄` lies in a Dehn surgery on a link and meets
/// the surgery core `n` times: `-2χ(Q̄) + 2n`.
pub fn dehn_surgery_index(qbar: &SurfaceSpec, alpha_intersections: u64) -> i64 {
    -2 * qbar.euler() + 2 * alpha_intersections as i64
}

/// Index of `Q` in the 2-handle setting, with `Q̄` the capped surface:
/// `-2χ(Q̄) + 2|∂Q| + |∂Q|Δ`.
pub fn two_handle_index(qbar: &SurfaceSpec, boundary_curves: u64, delta: u64) -> i64 {
    -2 * qbar.euler() + 2 * boundary_curves as i64 + (boundary_curves * delta) as i64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscType {
    Cancelling,
    NonSelfAmalgamating,
    Product,
    SelfAmalgamating,
    None,
}

impl DiscType {
    pub fn of_word(word: &BoundaryWord) -> DiscType {
        match word.0.as_slice() {
            [Letter::Arc(_), Letter::Suture(_)] | [Letter::Suture(_), Letter::Arc(_)] => {
                DiscType::Cancelling
            }
            [Letter::Arc(a), Letter::Arc(b)] if a != b => DiscType::NonSelfAmalgamating,
            [Letter::Arc(_), Letter::Arc(_)] => DiscType::SelfAmalgamating,
            [Letter::Suture(_), Letter::Suture(_)] => DiscType::Product,
            _ => DiscType::None,
        }
    }
}

/// Classifies a disc piece into the index-zero types.
pub fn classify_zero_index_disc(piece: &Piece) -> Result<DiscType> {
    if !piece.is_disc() {
        return Err(Error::Precondition(format!(
            "piece of genus {} with {} boundary words is not a disc",
            piece.surface.genus,
            piece.words.len()
        )));
    }
    Ok(DiscType::of_word(&piece.words[0]))
}
