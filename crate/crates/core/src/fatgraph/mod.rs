//! Labeled fat-vertex graphs embedded in a disc or a sphere.
//!
//! A graph is given by its vertices, the slot each edge end occupies, and
//! (for disc graphs) the cyclic order of boundary edges on `∂D`. The
//! embedding is the rotation system this data determines; faces are traced,
//! never stored. Graphs with several components say where each non-root
//! component sits through [`Placement`] records.

mod canon;
mod cycles;
mod embed;
mod search;
mod sphere;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::report::Report;

pub use canon::CanonicalCode;
pub use cycles::{Cycle, SideContents, Traversal};
pub use embed::FaceId;
pub use search::{SearchTrace, SearchStep};
pub use sphere::{CompleteStructure, GabaiWitness, LoopClass, MissingPiece, WitnessSite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    Disc,
    Sphere,
}

/// Parallelism class of a vertex. `+` vertices read their slots
/// counterclockwise, `-` vertices clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// An edge end: vertex id and 1-based slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub vertex: u32,
    pub slot: u32,
}

impl Port {
    pub fn new(vertex: u32, slot: u32) -> Self {
        Self { vertex, slot }
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.vertex, self.slot)
    }
}

impl Serialize for Port {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.vertex, self.slot].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Port {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [vertex, slot] = <[u32; 2]>::deserialize(d)?;
        Ok(Port { vertex, slot })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSpec {
    pub id: u32,
    pub sign: Sign,
    /// Side of the suture the vertex lies on (sphere graphs).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region: Option<Sign>,
    /// Number of slots; sphere graphs only, defaults to `mu`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valence: Option<u32>,
}

impl VertexSpec {
    pub fn new(id: u32, sign: Sign) -> Self {
        Self { id, sign, region: None, valence: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryEdge {
    pub end: Port,
    pub boundary_pos: i64,
}

/// A piece of an edge running from a vertex to the suture. Each suture
/// position carries one piece from each side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SutureEdge {
    pub end: Port,
    pub suture_pos: i64,
}

/// Names a face of the embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceRef {
    /// The face on the right of the edge leaving this port.
    Right(Port),
    /// The face around an isolated vertex.
    Around(u32),
    /// Disc graphs: the face along `∂D` after this boundary position, or
    /// the face along all of `∂D` when there are no boundary edges.
    Boundary(Option<i64>),
    /// Sphere graphs: the face along the suture on one side, after the
    /// given crossing position.
    Suture { side: Sign, pos: Option<i64> },
}

/// Puts the component containing `component` inside a face of another
/// component. `outer` is the face of this component that faces outward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Placement {
    pub component: u32,
    pub inside: FaceRef,
    pub outer: FaceRef,
}

/// Serialized form of a [`FatGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub ambient: Ambient,
    pub mu: u32,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub gabai: bool,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub suture_circles: u32,
    pub vertices: Vec<VertexSpec>,
    #[serde(default)]
    pub interior_edges: Vec<[Port; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub boundary_edges: Vec<BoundaryEdge>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub suture_edges: Vec<SutureEdge>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub placements: Vec<Placement>,
}

fn is_zero(v: &u32) -> bool {
    *v == 0
}

impl GraphSpec {
    pub fn disc(mu: u32, vertices: Vec<VertexSpec>) -> Self {
        Self {
            ambient: Ambient::Disc,
            mu,
            gabai: true,
            suture_circles: 0,
            vertices,
            interior_edges: Vec::new(),
            boundary_edges: Vec::new(),
            suture_edges: Vec::new(),
            placements: Vec::new(),
        }
    }

    pub fn sphere(mu: u32, vertices: Vec<VertexSpec>) -> Self {
        Self {
            ambient: Ambient::Sphere,
            suture_circles: 1,
            gabai: false,
            ..Self::disc(mu, vertices)
        }
    }

    pub fn edge(mut self, a: (u32, u32), b: (u32, u32)) -> Self {
        self.interior_edges.push([Port::new(a.0, a.1), Port::new(b.0, b.1)]);
        self
    }

    pub fn boundary(mut self, end: (u32, u32), pos: i64) -> Self {
        self.boundary_edges.push(BoundaryEdge { end: Port::new(end.0, end.1), boundary_pos: pos });
        self
    }

    pub fn suture(mut self, end: (u32, u32), pos: i64) -> Self {
        self.suture_edges.push(SutureEdge { end: Port::new(end.0, end.1), suture_pos: pos });
        self
    }

    pub fn place(mut self, p: Placement) -> Self {
        self.placements.push(p);
        self
    }

    pub fn build(self) -> Result<FatGraph> {
        FatGraph::new(self)
    }
}

/// Any edge of the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeId {
    Interior(usize),
    Boundary(usize),
    Suture(usize),
}

/// Label at an edge end: a slot, or the end on `∂D` or on the suture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EndLabel {
    Slot(u32),
    Boundary,
    Suture,
}

impl fmt::Display for EndLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndLabel::Slot(s) => write!(f, "{s}"),
            EndLabel::Boundary => f.write_str("∂"),
            EndLabel::Suture => f.write_str("γ"),
        }
    }
}

/// An embedded graph with its derived rotation system.
#[derive(Debug, Clone)]
pub struct FatGraph {
    spec: GraphSpec,
    index: HashMap<u32, usize>,
    emb: embed::Embedding,
}

impl PartialEq for FatGraph {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for FatGraph {}

impl Serialize for FatGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.spec.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FatGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FatGraph::new(GraphSpec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl FatGraph {
    /// Builds the rotation system. Malformed slot or reference data is a
    /// structure error; embedding and admissibility problems are reported by
    /// [`FatGraph::admissible`].
    pub fn new(spec: GraphSpec) -> Result<Self> {
        if spec.mu == 0 {
            return Err(Error::Structure("mu must be positive".into()));
        }
        let mut index = HashMap::new();
        for (k, v) in spec.vertices.iter().enumerate() {
            if index.insert(v.id, k).is_some() {
                return Err(Error::Structure(format!("vertex id {} used twice", v.id)));
            }
        }
        let emb = embed::Embedding::build(&spec, &index)?;
        Ok(Self { spec, index, emb })
    }

    pub fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    pub fn ambient(&self) -> Ambient {
        self.spec.ambient
    }

    pub fn mu(&self) -> u32 {
        self.spec.mu
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = u32> + '_ {
        self.spec.vertices.iter().map(|v| v.id)
    }

    pub fn vertex(&self, id: u32) -> Result<&VertexSpec> {
        self.index
            .get(&id)
            .map(|&k| &self.spec.vertices[k])
            .ok_or(Error::UnknownVertex(id))
    }

    pub fn valence(&self, id: u32) -> Result<u32> {
        let v = self.vertex(id)?;
        Ok(v.valence.unwrap_or(self.spec.mu))
    }

    pub fn edge_count(&self) -> usize {
        self.spec.interior_edges.len() + self.spec.boundary_edges.len() + self.spec.suture_edges.len()
    }

    /// Vertex ports grouped by the face on their right. Faces are listed in
    /// order of their least port; faces meeting no vertex are omitted.
    pub fn faces(&self) -> Vec<Vec<Port>> {
        let mut by_face: HashMap<FaceId, Vec<Port>> = HashMap::new();
        for (k, v) in self.spec.vertices.iter().enumerate() {
            for (s, &d) in self.emb.vertex_darts[k].iter().enumerate() {
                by_face.entry(self.emb.face_of[d]).or_default().push(Port::new(v.id, s as u32 + 1));
            }
        }
        let mut faces: Vec<Vec<Port>> = by_face.into_values().collect();
        for f in &mut faces {
            f.sort_unstable();
        }
        faces.sort_unstable();
        faces
    }

    /// Slot labels at the two ends of an edge.
    pub fn edge_labels(&self, edge: EdgeId) -> Result<(EndLabel, EndLabel)> {
        match edge {
            EdgeId::Interior(i) => {
                let [a, b] = self.spec.interior_edges.get(i).ok_or(Error::UnknownEdge(i))?;
                Ok((EndLabel::Slot(a.slot), EndLabel::Slot(b.slot)))
            }
            EdgeId::Boundary(i) => {
                let e = self.spec.boundary_edges.get(i).ok_or(Error::UnknownEdge(i))?;
                Ok((EndLabel::Slot(e.end.slot), EndLabel::Boundary))
            }
            EdgeId::Suture(i) => {
                let e = self.spec.suture_edges.get(i).ok_or(Error::UnknownEdge(i))?;
                Ok((EndLabel::Slot(e.end.slot), EndLabel::Suture))
            }
        }
    }

    /// Checks the embedding, Observation 1 on disc graphs, region
    /// consistency on sphere graphs, and the Gabai-disc conditions when the
    /// graph is flagged.
    pub fn admissible(&self) -> Report {
        let mut report = Report::new();
        self.emb.check(&self.spec, &mut report);
        if self.spec.ambient == Ambient::Disc {
            for (k, [a, b]) in self.spec.interior_edges.iter().enumerate() {
                if a.slot == b.slot {
                    report.violation(
                        "Observation 1",
                        format!("edge {k} joins {a} to {b}, both ends labeled {}", a.slot),
                    );
                }
            }
        }
        if self.spec.gabai {
            if self.spec.ambient != Ambient::Disc {
                report.violation("Gabai ambient", "a Gabai disc graph must lie in a disc");
            }
            let b = self.spec.boundary_edges.len();
            if b >= self.spec.mu as usize {
                report.violation(
                    "Gabai bound",
                    format!("{b} boundary edges, need fewer than mu = {}", self.spec.mu),
                );
            }
            if self.spec.vertices.is_empty() {
                report.violation("Gabai vertices", "a Gabai disc meets β at least once");
            }
            let mut signs = self.spec.vertices.iter().map(|v| v.sign);
            if let Some(first) = signs.next() {
                if signs.any(|s| s != first) {
                    report.violation("Gabai signs", "vertices of a Gabai disc are all parallel");
                }
            }
        }
        report
    }

    /// Admissible and flagged as a Gabai disc graph.
    pub fn require_gabai(&self) -> Result<()> {
        if !self.spec.gabai {
            return Err(Error::NotGabai("graph is not flagged as a Gabai disc graph".into()));
        }
        let report = self.admissible();
        if !report.is_valid() {
            return Err(Error::NotGabai(report.to_string().trim_end().replace('\n', "; ")));
        }
        Ok(())
    }

    fn vertex_index(&self, id: u32) -> Result<usize> {
        self.index.get(&id).copied().ok_or(Error::UnknownVertex(id))
    }
}
