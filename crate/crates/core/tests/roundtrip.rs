use proptest::prelude::*;
use sutcomb::cobordism::{SurfaceKind, TubeCompressionData};
use sutcomb::fatgraph::{FatGraph, GraphSpec};
use sutcomb::format;
use sutcomb::harness::{enumerate_gabai_graphs, scenario_report, Conclusion, Flag, Flags, Scenario, ScenarioKind};
use sutcomb::sutured::{BoundaryWord, Letter, ParamSurface, Piece};
use sutcomb::Error;

fn through_file<T>(value: &T) -> T
where
    T: serde::Serialize + serde::de::DeserializeOwned,
{
    let pretty: T = format::from_str(&format::to_string(value), "pretty").unwrap();
    let line: T = format::from_str(&format::to_record(value), "record").unwrap();
    assert_eq!(format::to_string(&pretty), format::to_string(&line));
    pretty
}

/// Vertex ids sent through `id -> 3 id + shift`.
fn relabel(spec: &GraphSpec, shift: u32) -> GraphSpec {
    let f = |id: u32| 3 * id + shift;
    let mut s = spec.clone();
    for v in &mut s.vertices {
        v.id = f(v.id);
    }
    for e in &mut s.interior_edges {
        for p in e.iter_mut() {
            p.vertex = f(p.vertex);
        }
    }
    for e in &mut s.boundary_edges {
        e.end.vertex = f(e.end.vertex);
    }
    for e in &mut s.suture_edges {
        e.end.vertex = f(e.end.vertex);
    }
    s
}

fn small_graphs() -> Vec<FatGraph> {
    enumerate_gabai_graphs(3, 3, 2).unwrap()
}

fn flags_from_bits(bits: u16) -> Flags {
    let mut f = Flags::default();
    for (k, flag) in Flag::ALL.into_iter().enumerate() {
        f.set(flag, bits & (1 << k) != 0);
    }
    f
}

fn valid_chi(kind: ScenarioKind, genus: i64) -> i64 {
    match kind {
        ScenarioKind::Sphere => 2,
        ScenarioKind::Disc => 1,
        ScenarioKind::Annulus | ScenarioKind::Torus => 0,
        ScenarioKind::GenusG => 2 - 2 * genus,
    }
}

#[test]
fn every_small_graph_round_trips() {
    let graphs = small_graphs();
    assert!(graphs.len() > 50);
    for g in &graphs {
        assert_eq!(&through_file(g), g);
        if g.spec().placements.is_empty() {
            let moved = FatGraph::new(relabel(g.spec(), 5)).unwrap();
            assert_eq!(through_file(&moved), moved);
            assert_eq!(moved.admissible().is_valid(), g.admissible().is_valid());
        }
    }
}

#[test]
fn scenario_report_is_total_over_flags() {
    for kind in ScenarioKind::ALL {
        for bits in 0..(1u16 << 9) {
            let flags = flags_from_bits(bits);
            for delta in [1, 2, 5] {
                let s = Scenario::new(kind, delta, valid_chi(kind, 3), 4).with_flags(flags);
                let c = scenario_report(&s).unwrap();
                assert_eq!(c, scenario_report(&s).unwrap());
                let missing = kind.required_flags().iter().copied().find(|&f| !flags.get(f));
                match missing {
                    Some(flag) => assert_eq!(c, Conclusion::NotApplicable { flag }),
                    None => assert!(c.is_applicable()),
                }
            }
        }
    }
}

#[test]
fn inconsistent_scenarios_are_errors() {
    for kind in ScenarioKind::ALL {
        let bad_chi = match kind {
            ScenarioKind::GenusG => -3,
            _ => valid_chi(kind, 0) + 1,
        };
        for s in [Scenario::new(kind, 2, bad_chi, 1), Scenario::new(kind, 0, valid_chi(kind, 2), 1)] {
            let s = s.with_flags(Flags::all());
            assert!(matches!(scenario_report(&s), Err(Error::InconsistentScenario(_))), "{s:?}");
        }
    }
}

fn any_kind() -> impl Strategy<Value = ScenarioKind> {
    prop::sample::select(ScenarioKind::ALL.to_vec())
}

fn any_letter() -> impl Strategy<Value = Letter> {
    (0u32..4, 0u32..5).prop_map(|(t, id)| match t {
        0 => Letter::Suture(id),
        1 => Letter::Arc(id),
        2 => Letter::SpanCircle(id),
        _ => Letter::Loop(id),
    })
}

fn any_piece() -> impl Strategy<Value = Piece> {
    (0u32..3, prop::collection::vec(prop::collection::vec(any_letter(), 0..5), 0..3))
        .prop_map(|(g, words)| Piece::new(g, words.into_iter().map(BoundaryWord::new).collect()))
}

proptest! {
    #[test]
    fn scenarios_round_trip(kind in any_kind(), delta in 0u64..1000, chi in -50i64..5, alpha in 0u64..1000, bits in 0u16..512) {
        let s = Scenario::new(kind, delta, chi, alpha).with_flags(flags_from_bits(bits));
        prop_assert_eq!(through_file(&s), s);
    }

    #[test]
    fn tube_data_round_trips(
        g in 0u32..4,
        kind in prop::sample::select(vec![SurfaceKind::Sphere, SurfaceKind::Disc, SurfaceKind::ClosedGenusG, SurfaceKind::Bounded]),
        q in 0u64..20,
        alpha in 0u64..20,
        a in prop::collection::vec(-9i64..9, 8),
        boundary in prop::option::of(0u32..4),
        p in prop::option::of(-5i64..5),
    ) {
        let mut d = TubeCompressionData::new(g, kind, q, alpha);
        d.a = a[..2 * g as usize].to_vec();
        d.boundary = boundary;
        d.p = p;
        prop_assert_eq!(through_file(&d), d);
    }

    #[test]
    fn param_surfaces_round_trip(pieces in prop::collection::vec(any_piece(), 0..4)) {
        let q = ParamSurface::new(pieces);
        let back = through_file(&q);
        prop_assert_eq!(&back, &q);
        prop_assert_eq!(format::to_string(&back), format::to_string(&q));
    }

    #[test]
    fn relabeled_graphs_round_trip(k in 0usize..10_000, shift in 0u32..50) {
        let graphs = small_graphs();
        let g = &graphs[k % graphs.len()];
        prop_assume!(g.spec().placements.is_empty());
        let moved = FatGraph::new(relabel(g.spec(), shift)).unwrap();
        prop_assert_eq!(through_file(&moved), moved);
    }
}
