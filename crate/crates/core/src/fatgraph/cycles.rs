//! λ-cycles, the two sides of a closed curve in the graph, and the
//! Scharlemann test.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::embed::{DartEdge, FaceId, NodeKind};
use super::{Ambient, EdgeId, FatGraph, Port};
use crate::error::{Error, Result};

/// One edge of a cycle, walked from `tail` to `head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Traversal {
    pub edge: usize,
    pub tail: Port,
    pub head: Port,
}

/// Directed cycle of interior edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    pub traversals: Vec<Traversal>,
    pub tail_label: u32,
    /// Edges strictly inside the disc the cycle bounds: the side away from
    /// `∂D` for disc graphs, the smaller side for sphere graphs.
    pub interior_edge_count: usize,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.traversals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traversals.is_empty()
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.traversals.iter().map(|t| t.tail.vertex).collect()
    }

    pub fn edges(&self) -> Vec<usize> {
        self.traversals.iter().map(|t| t.edge).collect()
    }

    fn sort_key(&self) -> (u32, usize, u32) {
        (self.traversals[0].tail.vertex, self.len(), self.tail_label)
    }
}

/// What lies on one side of a closed curve made of graph edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SideContents {
    pub faces: Vec<FaceId>,
    /// Vertices off the curve, by id.
    pub vertices: Vec<u32>,
    /// Graph edges off the curve.
    pub edges: usize,
    /// Whether `∂D` lies on this side.
    pub boundary: bool,
    /// Whether the suture meets this side.
    pub suture: bool,
}

impl SideContents {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges == 0
    }
}

impl FatGraph {
    /// The edge leaving vertex `v` (by index) at slot `label`, if it is an
    /// interior edge.
    pub(crate) fn step(&self, v: usize, label: u32) -> Option<(Traversal, usize)> {
        let darts = &self.emb.vertex_darts[v];
        if label == 0 || label as usize > darts.len() {
            return None;
        }
        let d = darts[(label - 1) as usize];
        let DartEdge::Graph(EdgeId::Interior(k)) = self.emb.dart_edge[d] else {
            return None;
        };
        let [a, b] = self.spec.interior_edges[k];
        let tail = Port::new(self.spec.vertices[v].id, label);
        let head = if a == tail { b } else { a };
        let w = self.index[&head.vertex];
        Some((Traversal { edge: k, tail, head }, w))
    }

    /// Follows label `label` from vertex index `start` until a vertex
    /// repeats and returns the cycle reached.
    pub(crate) fn walk(&self, start: usize, label: u32) -> Option<Cycle> {
        let mut seen: Vec<Option<usize>> = vec![None; self.spec.vertices.len()];
        let mut path: Vec<Traversal> = Vec::new();
        let mut v = start;
        loop {
            if let Some(at) = seen[v] {
                let traversals = path[at..].to_vec();
                return self.finish_cycle(traversals, label);
            }
            seen[v] = Some(path.len());
            let (t, w) = self.step(v, label)?;
            path.push(t);
            v = w;
        }
    }

    fn finish_cycle(&self, mut traversals: Vec<Traversal>, label: u32) -> Option<Cycle> {
        let edges: HashSet<usize> = traversals.iter().map(|t| t.edge).collect();
        if edges.len() != traversals.len() {
            // An edge labeled i at both ends walked back and forth.
            return None;
        }
        let min = (0..traversals.len()).min_by_key(|&k| traversals[k].tail.vertex)?;
        traversals.rotate_left(min);
        let mut c = Cycle { traversals, tail_label: label, interior_edge_count: 0 };
        c.interior_edge_count = self.interior_count(&c).ok()?;
        Some(c)
    }

    /// All simple directed cycles whose edges have tail label `i`, ordered
    /// by least vertex id, then length.
    pub fn find_lambda_cycles(&self, i: u32) -> Vec<Cycle> {
        let n = self.spec.vertices.len();
        // 0 = unvisited, 1 = on current walk, 2 = done.
        let mut state = vec![0u8; n];
        let mut cycles = Vec::new();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| self.spec.vertices[v].id);
        for &start in &order {
            let mut walk = Vec::new();
            let mut v = start;
            while state[v] == 0 {
                state[v] = 1;
                walk.push(v);
                match self.step(v, i) {
                    Some((_, w)) => v = w,
                    None => break,
                }
            }
            if state[v] == 1 && self.step(v, i).is_some() {
                if let Some(c) = self.walk(v, i) {
                    cycles.push(c);
                }
            }
            for w in walk {
                state[w] = 2;
            }
        }
        cycles.sort_by_key(Cycle::sort_key);
        cycles
    }

    /// Checks that `c` is a simple directed cycle of interior edges of this
    /// graph with constant tail label.
    pub fn validate_cycle(&self, c: &Cycle) -> Result<()> {
        let bad = |m: String| Err(Error::Precondition(format!("not a cycle of the graph: {m}")));
        if c.traversals.is_empty() {
            return bad("no edges".into());
        }
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for (k, t) in c.traversals.iter().enumerate() {
            let Some([a, b]) = self.spec.interior_edges.get(t.edge) else {
                return Err(Error::UnknownEdge(t.edge));
            };
            if !((t.tail == *a && t.head == *b) || (t.tail == *b && t.head == *a)) {
                return bad(format!("edge {} does not join {} and {}", t.edge, t.tail, t.head));
            }
            if t.tail.slot != c.tail_label {
                return bad(format!("edge {} leaves slot {}, not {}", t.edge, t.tail.slot, c.tail_label));
            }
            let next = &c.traversals[(k + 1) % c.traversals.len()];
            if t.head.vertex != next.tail.vertex {
                return bad(format!("edge {} ends at {} but the next starts at {}", t.edge, t.head.vertex, next.tail.vertex));
            }
            if !vertices.insert(t.tail.vertex) || !edges.insert(t.edge) {
                return bad("repeats a vertex or an edge".into());
            }
        }
        Ok(())
    }

    /// Contents of the two sides of the closed curve formed by interior
    /// edges `edges` through vertices `on` (vertex ids).
    pub fn sides_of(&self, edges: &[usize], on: &[u32]) -> Result<Vec<SideContents>> {
        let e = &self.emb;
        let v0 = self.vertex_index(on[0])?;
        let comp = e.node_comp[v0];
        let cut: HashSet<usize> = edges.iter().copied().collect();
        let on: HashSet<u32> = on.iter().copied().collect();
        let mut parent: Vec<usize> = (0..e.face_darts.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &d in &e.comps[comp].darts {
            if matches!(e.dart_edge[d], DartEdge::Graph(EdgeId::Interior(k)) if cut.contains(&k)) {
                continue;
            }
            let (a, b) = (find(&mut parent, e.face_of[d]), find(&mut parent, e.face_of[e.alpha[d]]));
            parent[a.max(b)] = a.min(b);
        }
        let mut classes: Vec<usize> = e.comps[comp].faces.iter().map(|&f| find(&mut parent, f)).collect();
        classes.sort_unstable();
        classes.dedup();
        if classes.len() != 2 {
            return Err(Error::Structure(format!(
                "closed curve has {} sides, expected 2",
                classes.len()
            )));
        }
        let mut sides = vec![SideContents::default(), SideContents::default()];
        let side_of = |f: FaceId, parent: &mut Vec<usize>| {
            let r = find(parent, f);
            classes.iter().position(|&c| c == r).unwrap()
        };
        for &f in &e.comps[comp].faces {
            let s = side_of(f, &mut parent);
            sides[s].faces.push(f);
        }
        for &node in &e.comps[comp].nodes {
            if let NodeKind::Vertex(k) = e.nodes[node] {
                if on.contains(&self.spec.vertices[k].id) {
                    continue;
                }
            }
            let d = *e.comps[comp].darts.iter().find(|&&d| e.dart_node[d] == node).expect("connected node");
            let s = side_of(e.face_of[d], &mut parent);
            self.add_node(node, &mut sides[s]);
        }
        for &d in &e.comps[comp].darts {
            if d > e.alpha[d] {
                continue;
            }
            match e.dart_edge[d] {
                DartEdge::Graph(EdgeId::Interior(k)) if cut.contains(&k) => {}
                DartEdge::Graph(_) => {
                    let s = side_of(e.face_of[d], &mut parent);
                    sides[s].edges += 1;
                }
                DartEdge::SutureArc => {}
            }
        }
        for &child in &e.comps[comp].children {
            let s = side_of(e.comps[child].inside.unwrap(), &mut parent);
            self.add_subtree(child, &mut sides[s]);
        }
        if Some(comp) != e.root {
            let s = side_of(e.comps[comp].outer.unwrap(), &mut parent);
            let mut inner = HashSet::new();
            self.collect_subtree(comp, &mut inner);
            for c in 0..e.comps.len() {
                if !inner.contains(&c) {
                    self.add_component(c, &mut sides[s]);
                }
            }
        }
        for side in &mut sides {
            side.vertices.sort_unstable();
        }
        Ok(sides)
    }

    fn add_node(&self, node: usize, side: &mut SideContents) {
        match self.emb.nodes[node] {
            NodeKind::Vertex(k) => side.vertices.push(self.spec.vertices[k].id),
            NodeKind::Boundary => side.boundary = true,
            NodeKind::Crossing(_) | NodeKind::SutureLoop => side.suture = true,
        }
    }

    fn add_component(&self, c: usize, side: &mut SideContents) {
        let e = &self.emb;
        for &node in &e.comps[c].nodes {
            self.add_node(node, side);
        }
        side.edges += e.comps[c]
            .darts
            .iter()
            .filter(|&&d| d < e.alpha[d] && matches!(e.dart_edge[d], DartEdge::Graph(_)))
            .count();
    }

    fn collect_subtree(&self, c: usize, out: &mut HashSet<usize>) {
        out.insert(c);
        for &child in &self.emb.comps[c].children {
            self.collect_subtree(child, out);
        }
    }

    fn add_subtree(&self, c: usize, side: &mut SideContents) {
        let mut all = HashSet::new();
        self.collect_subtree(c, &mut all);
        for k in all {
            self.add_component(k, side);
        }
    }

    pub fn cycle_sides(&self, c: &Cycle) -> Result<Vec<SideContents>> {
        self.sides_of(&c.edges(), &c.vertices())
    }

    /// The side a disc-graph cycle bounds in `D`: the one away from `∂D`.
    pub fn disc_side(&self, c: &Cycle) -> Result<SideContents> {
        let sides = self.cycle_sides(c)?;
        sides
            .into_iter()
            .find(|s| !s.boundary)
            .ok_or_else(|| Error::Structure("both sides of the cycle meet ∂D".into()))
    }

    pub(crate) fn interior_count(&self, c: &Cycle) -> Result<usize> {
        match self.spec.ambient {
            Ambient::Disc => Ok(self.disc_side(c)?.edges),
            Ambient::Sphere => Ok(self.cycle_sides(c)?.iter().map(|s| s.edges).min().unwrap()),
        }
    }

    /// Great (all vertices parallel) and bounding a disc whose interior
    /// misses the graph. On a sphere either side may serve as the disc.
    pub fn is_scharlemann(&self, c: &Cycle) -> Result<bool> {
        self.validate_cycle(c)?;
        let mut signs = c.vertices().into_iter().map(|v| self.vertex(v).map(|s| s.sign));
        let first = signs.next().unwrap()?;
        for s in signs {
            if s? != first {
                return Ok(false);
            }
        }
        Ok(match self.spec.ambient {
            Ambient::Disc => self.disc_side(c)?.is_empty(),
            Ambient::Sphere => self.cycle_sides(c)?.iter().any(SideContents::is_empty),
        })
    }

    /// `(tail, head)` labels when every edge of `c` carries the same pair
    /// and the two labels are adjacent mod `mu`.
    pub fn cycle_label_pair(&self, c: &Cycle) -> Option<(u32, u32)> {
        let head = c.traversals.first()?.head.slot;
        let mu = self.spec.mu;
        let adjacent = head % mu + 1 == c.tail_label || c.tail_label % mu + 1 == head;
        (adjacent && c.traversals.iter().all(|t| t.head.slot == head)).then_some((c.tail_label, head))
    }
}
