use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};
use sutcomb::cobordism::{cobordism_homology, SurfaceKind, TubeCompressionData};
use sutcomb::fatgraph::{Ambient, FatGraph};
use sutcomb::harness::{
    scenario_report, verify_connectivity_dichotomy, verify_lambda_cycles_bounded, verify_scharlemann_bounded,
    ConnectivityConfig, Scenario, VerificationReport,
};
use sutcomb::surfaces::{SurfaceComponent, SurfaceSpec};
use sutcomb::sutured::{check_param_conditions, index as param_index, ParamSurface, SuturedData};
use sutcomb::{format, slopes, Slope};

use crate::{Family, Format};

pub struct Context {
    pub format: Format,
    pub seed: u64,
}

pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: u8,
}

#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub status: u8,
}

type Outcome = Result<Output, Failure>;

fn usage(message: impl Into<String>) -> Failure {
    Failure { message: message.into(), status: 2 }
}

/// Input that parsed but that the analysis rejects for mathematical
/// reasons exits 1; everything else about the input exits 2.
fn core_error(e: sutcomb::Error) -> Failure {
    let status = match e {
        sutcomb::Error::NotGabai(_) | sutcomb::Error::Counterexample(_) => 1,
        _ => 2,
    };
    Failure { message: format!("error: {e}"), status }
}

fn read<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    format::read(path).map_err(|e| usage(e.to_string()))
}

impl Context {
    fn emit(&self, text: String, record: Value, status: u8) -> Output {
        let stdout = match self.format {
            Format::Text => text,
            Format::Records => format::to_record(&record) + "\n",
        };
        Output { stdout, stderr: String::new(), status }
    }
}

pub fn slope_delta(ctx: &Context, a: &str, b: &str) -> Outcome {
    let parse = |s: &str| s.parse::<Slope>().map_err(|e| usage(format!("error: {s}: {e}")));
    let (sa, sb) = (parse(a)?, parse(b)?);
    let d = slopes::delta(&sa, &sb);
    Ok(ctx.emit(format!("{d}\n"), json!({"command": "slope-delta", "a": sa, "b": sb, "delta": d}), 0))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SurfaceFile {
    components: SurfaceSpec,
}

pub fn norm(ctx: &Context, file: Option<&Path>, inline: Option<(u32, u32, u32)>) -> Outcome {
    let surface = match (file, inline) {
        (Some(path), _) => read::<SurfaceFile>(path)?.components,
        (None, Some((g, b, p))) => {
            SurfaceSpec::connected(SurfaceComponent::new(g, b, p)).map_err(|e| usage(format!("error: {e}")))?
        }
        (None, None) => return Err(usage("error: give a surface file or --genus")),
    };
    let (chi, x, xb) = (surface.euler(), surface.thurston_norm(), surface.beta_norm());
    let text = format!("euler: {chi}\nthurston_norm: {x}\nbeta_norm: {xb}\n");
    let record = json!({"command": "norm", "euler": chi, "thurston_norm": x, "beta_norm": xb});
    Ok(ctx.emit(text, record, 0))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IndexFile {
    surface: ParamSurface,
    #[serde(default)]
    sutured: Option<SuturedData>,
}

pub fn index(ctx: &Context, path: &Path) -> Outcome {
    let input: IndexFile = read(path)?;
    let i = param_index(&input.surface).map_err(core_error)?;
    let mut text = format!("index: {i}\n");
    let mut record = json!({"command": "index", "index": i});
    let mut status = 0;
    if let Some(data) = &input.sutured {
        let report = check_param_conditions(&input.surface, data).map_err(core_error)?;
        if report.is_valid() {
            text.push_str("conditions: ok\n");
        } else {
            status = 1;
        }
        text.push_str(&report.to_string());
        record["conditions_ok"] = json!(report.is_valid());
        record["findings"] = json!(report.findings);
    }
    Ok(ctx.emit(text, record, status))
}

pub fn graph_check(ctx: &Context, path: &Path, dot: bool) -> Outcome {
    let g: FatGraph = read(path)?;
    if dot {
        return Ok(Output { stdout: to_dot(&g), stderr: String::new(), status: 0 });
    }
    let report = g.admissible();
    let ok = report.is_valid();
    let text = if ok { "admissible\n".to_string() } else { report.to_string() };
    let record = json!({"command": "graph-check", "admissible": ok, "findings": report.findings});
    Ok(ctx.emit(text, record, u8::from(!ok)))
}

/// Dot-language export: vertices as nodes, ends labeled by slot, `∂D` and
/// the suture as extra nodes.
fn to_dot(g: &FatGraph) -> String {
    let spec = g.spec();
    let graph = match spec.ambient {
        Ambient::Disc => "disc",
        Ambient::Sphere => "sphere",
    };
    let mut s = format!("graph {graph} {{\n");
    for v in &spec.vertices {
        let _ = writeln!(s, "  v{} [label=\"{}{}\"];", v.id, v.id, v.sign);
    }
    if !spec.boundary_edges.is_empty() {
        s.push_str("  boundary [shape=box, label=\"∂D\"];\n");
    }
    if !spec.suture_edges.is_empty() {
        s.push_str("  suture [shape=box, label=\"γ\"];\n");
    }
    for [a, b] in &spec.interior_edges {
        let _ = writeln!(
            s,
            "  v{} -- v{} [taillabel=\"{}\", headlabel=\"{}\"];",
            a.vertex, b.vertex, a.slot, b.slot
        );
    }
    for e in &spec.boundary_edges {
        let _ = writeln!(s, "  v{} -- boundary [taillabel=\"{}\", headlabel=\"{}\"];", e.end.vertex, e.end.slot, e.boundary_pos);
    }
    for e in &spec.suture_edges {
        let _ = writeln!(s, "  v{} -- suture [taillabel=\"{}\", headlabel=\"{}\"];", e.end.vertex, e.end.slot, e.suture_pos);
    }
    s.push_str("}\n");
    s
}

pub fn graph_scharlemann(ctx: &Context, path: &Path) -> Outcome {
    let g: FatGraph = read(path)?;
    g.require_gabai().map_err(core_error)?;
    let trace = g.scharlemann_search().map_err(core_error)?;
    let c = &trace.result;
    let label = g.cycle_label_pair(c).map_or(c.tail_label, |(tail, _)| tail);
    let mut text = format!("scharlemann cycle: label {label}, length {}\n", c.len());
    for t in &c.traversals {
        let _ = writeln!(text, "  {} -> {}", t.tail, t.head);
    }
    let record = json!({
        "command": "graph-scharlemann",
        "cycle": c,
        "first": trace.first,
        "steps": trace.steps.len(),
        "fallback": trace.fallback,
    });
    Ok(ctx.emit(text, record, 0))
}

pub struct InlineTube {
    pub genus: u32,
    pub kind: Option<String>,
    pub q: Option<u64>,
    pub alpha: Option<u64>,
    pub a: Vec<i64>,
}

pub fn cobordism(ctx: &Context, file: Option<&Path>, inline: Option<InlineTube>) -> Outcome {
    let data: TubeCompressionData = match (file, inline) {
        (Some(path), _) => read(path)?,
        (None, Some(t)) => {
            let kind: SurfaceKind = serde_json::from_value(json!(t.kind.unwrap_or_default()))
                .map_err(|e| usage(format!("error: --kind: {e}")))?;
            let mut d = TubeCompressionData::new(t.genus, kind, t.q.unwrap_or(0), t.alpha.unwrap_or(0));
            if !t.a.is_empty() {
                d.a = t.a;
            }
            d
        }
        (None, None) => return Err(usage("error: give a cobordism file or --genus --kind --q --alpha")),
    };
    let rep = cobordism_homology(&data).map_err(core_error)?;
    let r = &rep.r_surface.components()[0];
    let mut text = format!(
        "H_1: {}\nrational rank: {}\nproduct: {}\nrational cobordism: {}\n",
        rep.h1_integral,
        rep.h1_rational_rank,
        yes_no(rep.is_product),
        yes_no(rep.is_rational_cobordism)
    );
    if let Some(q) = rep.lens_summand {
        let _ = writeln!(text, "lens summand: order {q}");
    }
    let _ = writeln!(text, "R: genus {}, {} boundary, {} intersections with alpha", r.genus, r.boundary, r.punctures);
    let mut record = serde_json::to_value(&rep).expect("reports serialize");
    record["command"] = json!("cobordism");
    Ok(ctx.emit(text, record, 0))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verify(
    ctx: &Context,
    family: Family,
    max_v: u32,
    mu: Option<u32>,
    max_boundary: Option<u32>,
    instances: u64,
) -> Outcome {
    let mus: Vec<u32> = match (mu, family) {
        (Some(m), _) => vec![m],
        (None, Family::Connectivity) => vec![2, 3],
        (None, _) => vec![2, 3, 4],
    };
    let mut reports = Vec::new();
    for mu in mus {
        let report = match family {
            Family::Scharlemann | Family::Lambda => {
                let mb = max_boundary.unwrap_or(mu.saturating_sub(1));
                let run = if family == Family::Scharlemann {
                    verify_scharlemann_bounded
                } else {
                    verify_lambda_cycles_bounded
                };
                run(max_v, mu, mb).map_err(|e| usage(format!("error: {e}")))?
            }
            Family::Connectivity => {
                if mu == 0 {
                    return Err(usage("error: mu must be positive"));
                }
                let cfg = ConnectivityConfig { mu, instances, seed: ctx.seed, ..ConnectivityConfig::default() };
                verify_connectivity_dichotomy(&cfg)
            }
        };
        reports.push(report);
    }
    let failed = reports.iter().any(|r| !r.passed());
    let mut stdout = String::new();
    let mut stderr = String::new();
    for r in &reports {
        let _ = writeln!(stderr, "{}: wall time {:.3} s", r.family, r.wall_time_s);
        match ctx.format {
            Format::Text => {
                let _ = writeln!(stdout, "{r}");
            }
            Format::Records => {
                stdout.push_str(&format::to_record(&record_of(r)));
                stdout.push('\n');
            }
        }
    }
    if ctx.format == Format::Text {
        let _ = writeln!(stdout, "{}", if failed { "FAILED" } else { "ok" });
    }
    Ok(Output { stdout, stderr, status: u8::from(failed) })
}

/// Report record without the wall time, so equal runs print equal records.
fn record_of(r: &VerificationReport) -> Value {
    let mut v = serde_json::to_value(r).expect("reports serialize");
    if let Some(obj) = v.as_object_mut() {
        obj.remove("wall_time_s");
        obj.insert("command".into(), json!("verify"));
    }
    v
}

pub fn scenario(ctx: &Context, path: &Path) -> Outcome {
    let s: Scenario = read(path)?;
    let conclusion = scenario_report(&s).map_err(core_error)?;
    let ineq = sutcomb::harness::check_surgery_inequality(&s).map_err(core_error)?;
    let text = format!(
        "inequality: (delta - 1)|Q ∩ alpha| = {} <= -chi = {}: {}\nconclusion: {conclusion}\n",
        ineq.lhs,
        ineq.rhs,
        if ineq.holds { "holds" } else { "fails" }
    );
    let record = json!({"command": "scenario", "inequality": ineq, "conclusion": conclusion});
    Ok(ctx.emit(text, record, u8::from(!conclusion.is_applicable())))
}
