//! Rotation system, face tracing, components and their nesting.
//!
//! Darts carry the face on their right; `φ = σ ∘ α` walks a face. The disc
//! boundary is collapsed to a node `B` whose counterclockwise order is the
//! reverse of the boundary positions. A suture is a cycle of crossing
//! nodes, each with darts `[next, plus, prev, minus]` counterclockwise.

use std::collections::HashMap;

use super::{Ambient, EdgeId, FaceRef, GraphSpec, Port, Sign};
use crate::error::{Error, Result};
use crate::report::Report;

pub type FaceId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum NodeKind {
    Vertex(usize),
    Boundary,
    Crossing(usize),
    SutureLoop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum DartEdge {
    Graph(EdgeId),
    SutureArc,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Component {
    pub nodes: Vec<usize>,
    pub darts: Vec<usize>,
    pub faces: Vec<FaceId>,
    pub parent: Option<usize>,
    pub inside: Option<FaceId>,
    pub outer: Option<FaceId>,
    pub children: Vec<usize>,
}

const NEXT: usize = 0;
const PLUS: usize = 1;
const PREV: usize = 2;
const MINUS: usize = 3;

#[derive(Debug, Clone, Default)]
pub(crate) struct Embedding {
    pub nodes: Vec<NodeKind>,
    pub dart_node: Vec<usize>,
    pub alpha: Vec<usize>,
    pub sigma: Vec<usize>,
    pub dart_edge: Vec<DartEdge>,
    pub vertex_darts: Vec<Vec<usize>>,
    pub boundary_node: Option<usize>,
    pub boundary_darts: Vec<usize>,
    pub boundary_positions: Vec<i64>,
    pub crossings: Vec<[usize; 4]>,
    pub suture_positions: Vec<i64>,
    pub suture_loop: Option<[usize; 2]>,
    pub suture_node: Option<usize>,
    pub face_of: Vec<FaceId>,
    pub node_face: Vec<Option<FaceId>>,
    pub face_darts: Vec<Vec<usize>>,
    pub face_comp: Vec<usize>,
    pub node_comp: Vec<usize>,
    pub comps: Vec<Component>,
    pub root: Option<usize>,
    pub face_region: Vec<Option<Sign>>,
}

impl Embedding {
    pub fn build(spec: &GraphSpec, index: &HashMap<u32, usize>) -> Result<Self> {
        let mut e = Embedding::default();
        e.alloc_vertices(spec)?;
        let mut used: Vec<Vec<bool>> = e.vertex_darts.iter().map(|d| vec![false; d.len()]).collect();
        let mut port = |p: Port, used: &mut Vec<Vec<bool>>| -> Result<usize> {
            let &v = index.get(&p.vertex).ok_or(Error::UnknownVertex(p.vertex))?;
            let slots = used[v].len() as u32;
            if p.slot == 0 || p.slot > slots {
                return Err(Error::Structure(format!("slot {} of vertex {} out of range 1..={slots}", p.slot, p.vertex)));
            }
            let s = (p.slot - 1) as usize;
            if std::mem::replace(&mut used[v][s], true) {
                return Err(Error::Structure(format!("slot {p} used twice")));
            }
            Ok(v)
        };

        for (k, [a, b]) in spec.interior_edges.iter().enumerate() {
            let (va, vb) = (port(*a, &mut used)?, port(*b, &mut used)?);
            let (da, db) = (e.slot_dart(va, a.slot), e.slot_dart(vb, b.slot));
            e.pair(da, db, DartEdge::Graph(EdgeId::Interior(k)));
        }

        match spec.ambient {
            Ambient::Disc => {
                if spec.suture_circles != 0 || !spec.suture_edges.is_empty() {
                    return Err(Error::Structure("disc graphs carry no sutures".into()));
                }
                let node = e.add_node(NodeKind::Boundary);
                e.boundary_node = Some(node);
                let mut order: Vec<usize> = (0..spec.boundary_edges.len()).collect();
                order.sort_by_key(|&k| spec.boundary_edges[k].boundary_pos);
                let b = order.len();
                for w in order.windows(2) {
                    if spec.boundary_edges[w[0]].boundary_pos == spec.boundary_edges[w[1]].boundary_pos {
                        return Err(Error::Structure(format!(
                            "boundary position {} used twice",
                            spec.boundary_edges[w[0]].boundary_pos
                        )));
                    }
                }
                let darts: Vec<usize> = (0..b).map(|_| e.add_dart(node)).collect();
                for (rank, &k) in order.iter().enumerate() {
                    let be = spec.boundary_edges[k];
                    let v = port(be.end, &mut used)?;
                    let dv = e.slot_dart(v, be.end.slot);
                    e.pair(darts[rank], dv, DartEdge::Graph(EdgeId::Boundary(k)));
                    e.sigma[darts[rank]] = darts[(rank + b - 1) % b];
                    e.boundary_positions.push(be.boundary_pos);
                }
                e.boundary_darts = darts;
            }
            Ambient::Sphere => {
                if !spec.boundary_edges.is_empty() {
                    return Err(Error::Structure("sphere graphs have no boundary edges".into()));
                }
                if spec.suture_circles > 1 {
                    return Err(Error::Structure("at most one suture circle is supported".into()));
                }
                if spec.suture_circles == 0 && !spec.suture_edges.is_empty() {
                    return Err(Error::Structure("suture edges need a suture circle".into()));
                }
                if spec.suture_circles == 1 {
                    e.build_suture(spec, index, &mut used, &mut port)?;
                }
            }
        }

        for (v, slots) in used.iter().enumerate() {
            if let Some(s) = slots.iter().position(|u| !u) {
                return Err(Error::Structure(format!(
                    "slot {} of vertex {} is empty",
                    s + 1,
                    spec.vertices[v].id
                )));
            }
        }
        e.trace_faces();
        e.find_components(spec);
        e.place(spec, index)?;
        e.assign_regions();
        Ok(e)
    }

    fn alloc_vertices(&mut self, spec: &GraphSpec) -> Result<()> {
        for (k, v) in spec.vertices.iter().enumerate() {
            let valence = match (spec.ambient, v.valence) {
                (_, None) => spec.mu,
                (Ambient::Sphere, Some(n)) => n,
                (Ambient::Disc, Some(n)) if n == spec.mu => n,
                (Ambient::Disc, Some(n)) => {
                    return Err(Error::Structure(format!(
                        "vertex {} of a disc graph has valence {n}, expected mu = {}",
                        v.id, spec.mu
                    )))
                }
            } as usize;
            let node = self.add_node(NodeKind::Vertex(k));
            let darts: Vec<usize> = (0..valence).map(|_| self.add_dart(node)).collect();
            for s in 0..valence {
                let next = match v.sign {
                    Sign::Plus => (s + 1) % valence,
                    Sign::Minus => (s + valence - 1) % valence,
                };
                self.sigma[darts[s]] = darts[next];
            }
            self.vertex_darts.push(darts);
        }
        Ok(())
    }

    fn build_suture(
        &mut self,
        spec: &GraphSpec,
        index: &HashMap<u32, usize>,
        used: &mut Vec<Vec<bool>>,
        port: &mut impl FnMut(Port, &mut Vec<Vec<bool>>) -> Result<usize>,
    ) -> Result<()> {
        let mut by_pos: std::collections::BTreeMap<i64, [Option<usize>; 2]> = Default::default();
        for (k, se) in spec.suture_edges.iter().enumerate() {
            let &v = index.get(&se.end.vertex).ok_or(Error::UnknownVertex(se.end.vertex))?;
            let side = spec.vertices[v].region.ok_or_else(|| {
                Error::Structure(format!("vertex {} meets the suture but declares no region", se.end.vertex))
            })?;
            let slot = &mut by_pos.entry(se.suture_pos).or_default()[(side == Sign::Minus) as usize];
            if slot.replace(k).is_some() {
                return Err(Error::Structure(format!(
                    "suture position {} has two pieces on side {side}",
                    se.suture_pos
                )));
            }
        }
        let m = by_pos.len();
        if m == 0 {
            let node = self.add_node(NodeKind::SutureLoop);
            let (a, b) = (self.add_dart(node), self.add_dart(node));
            self.pair(a, b, DartEdge::SutureArc);
            self.sigma[a] = b;
            self.sigma[b] = a;
            self.suture_loop = Some([a, b]);
            self.suture_node = Some(node);
            return Ok(());
        }
        for (rank, (&pos, pieces)) in by_pos.iter().enumerate() {
            let node = self.add_node(NodeKind::Crossing(rank));
            let d: [usize; 4] = std::array::from_fn(|_| self.add_dart(node));
            for i in 0..4 {
                self.sigma[d[i]] = d[(i + 1) % 4];
            }
            for (side, dart) in [(0, d[PLUS]), (1, d[MINUS])] {
                let k = pieces[side].ok_or_else(|| {
                    Error::Structure(format!("suture position {pos} lacks a piece on one side"))
                })?;
                let se = spec.suture_edges[k];
                let v = port(se.end, used)?;
                let dv = self.slot_dart(v, se.end.slot);
                self.pair(dart, dv, DartEdge::Graph(EdgeId::Suture(k)));
            }
            self.crossings.push(d);
            self.suture_positions.push(pos);
            if rank == 0 {
                self.suture_node = Some(node);
            }
        }
        for k in 0..m {
            let (a, b) = (self.crossings[k][NEXT], self.crossings[(k + 1) % m][PREV]);
            self.pair(a, b, DartEdge::SutureArc);
        }
        Ok(())
    }

    fn add_node(&mut self, kind: NodeKind) -> usize {
        self.nodes.push(kind);
        self.nodes.len() - 1
    }

    fn add_dart(&mut self, node: usize) -> usize {
        let d = self.dart_node.len();
        self.dart_node.push(node);
        self.alpha.push(d);
        self.sigma.push(d);
        self.dart_edge.push(DartEdge::SutureArc);
        d
    }

    fn pair(&mut self, a: usize, b: usize, edge: DartEdge) {
        self.alpha[a] = b;
        self.alpha[b] = a;
        self.dart_edge[a] = edge;
        self.dart_edge[b] = edge;
    }

    pub fn slot_dart(&self, v: usize, slot: u32) -> usize {
        self.vertex_darts[v][(slot - 1) as usize]
    }

    pub fn phi(&self, d: usize) -> usize {
        self.sigma[self.alpha[d]]
    }

    pub fn sigma_inv(&self, d: usize) -> usize {
        let mut x = d;
        while self.sigma[x] != d {
            x = self.sigma[x];
        }
        x
    }

    fn trace_faces(&mut self) {
        let n = self.dart_node.len();
        self.face_of = vec![usize::MAX; n];
        for start in 0..n {
            if self.face_of[start] != usize::MAX {
                continue;
            }
            let f = self.face_darts.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                self.face_of[d] = f;
                darts.push(d);
                d = self.phi(d);
                if d == start {
                    break;
                }
            }
            self.face_darts.push(darts);
        }
        let mut has_dart = vec![false; self.nodes.len()];
        for &node in &self.dart_node {
            has_dart[node] = true;
        }
        self.node_face = vec![None; self.nodes.len()];
        for node in 0..self.nodes.len() {
            if !has_dart[node] {
                self.node_face[node] = Some(self.face_darts.len());
                self.face_darts.push(Vec::new());
            }
        }
    }

    fn find_components(&mut self, spec: &GraphSpec) {
        let n = self.nodes.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for d in 0..self.dart_node.len() {
            let (a, b) = (find(&mut parent, self.dart_node[d]), find(&mut parent, self.dart_node[self.alpha[d]]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comp_of_root: HashMap<usize, usize> = HashMap::new();
        self.node_comp = vec![0; n];
        for node in 0..n {
            let r = find(&mut parent, node);
            let next = comp_of_root.len();
            let c = *comp_of_root.entry(r).or_insert(next);
            if c == self.comps.len() {
                self.comps.push(Component::default());
            }
            self.node_comp[node] = c;
            self.comps[c].nodes.push(node);
        }
        for d in 0..self.dart_node.len() {
            let c = self.node_comp[self.dart_node[d]];
            self.comps[c].darts.push(d);
        }
        self.face_comp = vec![0; self.face_darts.len()];
        for (f, darts) in self.face_darts.iter().enumerate() {
            let c = match darts.first() {
                Some(&d) => self.node_comp[self.dart_node[d]],
                None => {
                    let node = self.node_face.iter().position(|&x| x == Some(f)).expect("isolated node face");
                    self.node_comp[node]
                }
            };
            self.face_comp[f] = c;
            self.comps[c].faces.push(f);
        }
        self.root = if let Some(b) = self.boundary_node {
            Some(self.node_comp[b])
        } else if let Some(s) = self.suture_node {
            Some(self.node_comp[s])
        } else {
            spec.vertices
                .iter()
                .enumerate()
                .min_by_key(|(_, v)| v.id)
                .map(|(k, _)| self.node_comp[k])
        };
    }

    /// A face of component `c` used when no placement names one.
    fn default_face(&self, c: usize, spec: &GraphSpec) -> FaceId {
        let nodes = &self.comps[c].nodes;
        if Some(c) == self.root {
            if let Some(b) = self.boundary_node {
                return self.boundary_darts.first().map_or_else(|| self.node_face[b].unwrap(), |&d| self.face_of[d]);
            }
        }
        let v = nodes
            .iter()
            .filter_map(|&n| match self.nodes[n] {
                NodeKind::Vertex(k) => Some((spec.vertices[k].id, n, k)),
                _ => None,
            })
            .min();
        match v {
            Some((_, n, k)) => match self.vertex_darts[k].first() {
                Some(&d) => self.face_of[d],
                None => self.node_face[n].unwrap(),
            },
            None => self.face_of.first().copied().or(self.node_face[nodes[0]]).unwrap(),
        }
    }

    fn root_face_for(&self, c: usize, spec: &GraphSpec) -> FaceId {
        let root = self.root.expect("nonempty graph has a root");
        let side = self.comps[c]
            .nodes
            .iter()
            .filter_map(|&n| match self.nodes[n] {
                NodeKind::Vertex(k) => Some((spec.vertices[k].id, spec.vertices[k].region)),
                _ => None,
            })
            .min()
            .and_then(|(_, r)| r)
            .unwrap_or(Sign::Plus);
        if let Some(d) = self.crossings.first() {
            return self.face_of[if side == Sign::Plus { d[PLUS] } else { d[NEXT] }];
        }
        if let Some([next, prev]) = self.suture_loop {
            return self.face_of[if side == Sign::Plus { prev } else { next }];
        }
        self.default_face(root, spec)
    }

    pub fn resolve(&self, r: &FaceRef, index: &HashMap<u32, usize>) -> Result<FaceId> {
        let bad = |msg: String| Error::Structure(msg);
        match *r {
            FaceRef::Right(p) => {
                let &v = index.get(&p.vertex).ok_or(Error::UnknownVertex(p.vertex))?;
                if p.slot == 0 || p.slot as usize > self.vertex_darts[v].len() {
                    return Err(bad(format!("face reference names missing slot {p}")));
                }
                Ok(self.face_of[self.slot_dart(v, p.slot)])
            }
            FaceRef::Around(id) => {
                let &v = index.get(&id).ok_or(Error::UnknownVertex(id))?;
                let node = self.vertex_node(v);
                self.node_face[node].ok_or_else(|| bad(format!("vertex {id} is not isolated")))
            }
            FaceRef::Boundary(pos) => {
                let b = self.boundary_node.ok_or_else(|| bad("sphere graphs have no ∂D".into()))?;
                match pos {
                    None if self.boundary_darts.is_empty() => Ok(self.node_face[b].unwrap()),
                    None => Err(bad("name the boundary position of the face".into())),
                    Some(p) => {
                        let rank = self
                            .boundary_positions
                            .iter()
                            .position(|&x| x == p)
                            .ok_or_else(|| bad(format!("no boundary edge at position {p}")))?;
                        Ok(self.face_of[self.boundary_darts[rank]])
                    }
                }
            }
            FaceRef::Suture { side, pos } => match (pos, self.suture_loop) {
                (None, Some([next, prev])) => Ok(self.face_of[if side == Sign::Plus { prev } else { next }]),
                (Some(p), None) => {
                    let rank = self
                        .suture_positions
                        .iter()
                        .position(|&x| x == p)
                        .ok_or_else(|| bad(format!("no suture crossing at position {p}")))?;
                    let d = self.crossings[rank];
                    Ok(self.face_of[if side == Sign::Plus { d[PLUS] } else { d[NEXT] }])
                }
                _ => Err(bad(format!("suture face reference {r:?} does not match the suture"))),
            },
        }
    }

    fn vertex_node(&self, v: usize) -> usize {
        // Vertex nodes are allocated first, in vertex order.
        debug_assert_eq!(self.nodes[v], NodeKind::Vertex(v));
        v
    }

    fn place(&mut self, spec: &GraphSpec, index: &HashMap<u32, usize>) -> Result<()> {
        let Some(root) = self.root else { return Ok(()) };
        let mut placed = vec![false; self.comps.len()];
        for p in &spec.placements {
            let &v = index.get(&p.component).ok_or(Error::UnknownVertex(p.component))?;
            let c = self.node_comp[self.vertex_node(v)];
            if c == root {
                return Err(Error::Structure(format!(
                    "vertex {} lies in the root component, which cannot be placed",
                    p.component
                )));
            }
            if std::mem::replace(&mut placed[c], true) {
                return Err(Error::Structure(format!("component of vertex {} placed twice", p.component)));
            }
            let inside = self.resolve(&p.inside, index)?;
            let outer = self.resolve(&p.outer, index)?;
            if self.face_comp[inside] == c {
                return Err(Error::Structure(format!(
                    "component of vertex {} is placed inside its own face",
                    p.component
                )));
            }
            if self.face_comp[outer] != c {
                return Err(Error::Structure(format!(
                    "outer face of the component of vertex {} belongs to another component",
                    p.component
                )));
            }
            self.comps[c].inside = Some(inside);
            self.comps[c].outer = Some(outer);
            self.comps[c].parent = Some(self.face_comp[inside]);
        }
        for c in 0..self.comps.len() {
            if c == root || placed[c] {
                continue;
            }
            let inside = self.root_face_for(c, spec);
            self.comps[c].inside = Some(inside);
            self.comps[c].outer = Some(self.default_face(c, spec));
            self.comps[c].parent = Some(root);
        }
        for c in 0..self.comps.len() {
            let mut x = c;
            for _ in 0..=self.comps.len() {
                match self.comps[x].parent {
                    Some(p) => x = p,
                    None => break,
                }
            }
            if x != root {
                return Err(Error::Structure("placements nest components in a loop".into()));
            }
            if let Some(p) = self.comps[c].parent {
                self.comps[p].children.push(c);
            }
        }
        Ok(())
    }

    /// Sides of the suture per face, by flooding across graph edges.
    fn assign_regions(&mut self) {
        self.face_region = vec![None; self.face_darts.len()];
        let mut stack = Vec::new();
        for d in &self.crossings {
            stack.push((self.face_of[d[PLUS]], Sign::Plus));
            stack.push((self.face_of[d[NEXT]], Sign::Minus));
        }
        if let Some([next, prev]) = self.suture_loop {
            stack.push((self.face_of[prev], Sign::Plus));
            stack.push((self.face_of[next], Sign::Minus));
        }
        // Conflicting seeds are left for the embedding check to report.
        while let Some((f, side)) = stack.pop() {
            if self.face_region[f].is_some() {
                continue;
            }
            self.face_region[f] = Some(side);
            for &d in &self.face_darts[f] {
                if let DartEdge::Graph(_) = self.dart_edge[d] {
                    stack.push((self.face_of[self.alpha[d]], side));
                }
            }
            for &child in &self.comps[self.face_comp[f]].children {
                if self.comps[child].inside == Some(f) {
                    for &g in &self.comps[child].faces {
                        stack.push((g, side));
                    }
                }
            }
        }
    }

    /// Side of the suture containing vertex `v`, if the graph has a suture.
    pub fn vertex_region(&self, v: usize) -> Option<Sign> {
        let f = match self.vertex_darts[v].first() {
            Some(&d) => self.face_of[d],
            None => self.node_face[self.vertex_node(v)]?,
        };
        self.face_region.get(f).copied().flatten()
    }

    pub fn check(&self, spec: &GraphSpec, report: &mut Report) {
        for (c, comp) in self.comps.iter().enumerate() {
            let v = comp.nodes.len() as i64;
            let e = comp.darts.len() as i64 / 2;
            let f = comp.faces.len() as i64;
            if v - e + f != 2 {
                report.violation(
                    "embedding",
                    format!("component {c} has V - E + F = {v} - {e} + {f} = {}, not planar", v - e + f),
                );
            }
        }
        if self.suture_node.is_some() {
            let mut conflicts = 0;
            for d in 0..self.dart_node.len() {
                if let DartEdge::Graph(_) = self.dart_edge[d] {
                    let (a, b) = (self.face_region[self.face_of[d]], self.face_region[self.face_of[self.alpha[d]]]);
                    if a != b {
                        conflicts += 1;
                    }
                }
            }
            let seeded_twice = self.crossings.iter().any(|d| self.face_of[d[PLUS]] == self.face_of[d[NEXT]])
                || self.suture_loop.is_some_and(|[a, b]| self.face_of[a] == self.face_of[b]);
            if conflicts > 0 || seeded_twice {
                report.violation("region", "a face meets both sides of the suture");
            }
            for (k, v) in spec.vertices.iter().enumerate() {
                match (v.region, self.vertex_region(k)) {
                    (Some(declared), Some(derived)) if declared != derived => report.violation(
                        "region",
                        format!("vertex {} declared in R{declared} but lies in R{derived}", v.id),
                    ),
                    (None, _) => report.violation("region", format!("vertex {} declares no region", v.id)),
                    _ => {}
                }
            }
        }
    }
}
