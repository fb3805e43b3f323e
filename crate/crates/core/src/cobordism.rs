//! First homology of the cobordism obtained by compressing a surface along a
//! tube, and the bookkeeping that turns a Scharlemann cycle into such data.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fatgraph::{Cycle, FatGraph};
use crate::scalar::IntScalar;
use crate::snf::AbelianGroup;
use crate::surfaces::{SurfaceComponent, SurfaceSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    Sphere,
    Disc,
    ClosedGenusG,
    Bounded,
}

/// Input to [`cobordism_homology`]. `Q̄` has genus `genus_g`; `∂D` crosses
/// the tube `q` times in one direction and has class `Σ a_i x_i` on the
/// surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TubeCompressionData {
    pub genus_g: u32,
    pub surface_kind: SurfaceKind,
    pub q: u64,
    /// Defaults to all zeros.
    #[serde(default)]
    pub a: Vec<i64>,
    pub alpha_intersections: u64,
    /// Boundary circles of `Q̄` when the kind is `bounded`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<u32>,
    /// Coefficient of the meridian in the class of `∂D`. Kept for
    /// completeness; it does not enter the relation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
}

impl TubeCompressionData {
    pub fn new(genus_g: u32, surface_kind: SurfaceKind, q: u64, alpha_intersections: u64) -> Self {
        Self {
            genus_g,
            surface_kind,
            q,
            a: vec![0; 2 * genus_g as usize],
            alpha_intersections,
            boundary: None,
            p: None,
        }
    }

    fn boundary_count(&self) -> u32 {
        match self.surface_kind {
            SurfaceKind::Sphere | SurfaceKind::ClosedGenusG => 0,
            SurfaceKind::Disc => 1,
            SurfaceKind::Bounded => self.boundary.unwrap_or(1),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.q == 0 {
            return Err(Error::DegenerateCrossing(
                "∂D must cross the tube at least once".into(),
            ));
        }
        let coefficients = if self.a.is_empty() { 0 } else { self.a.len() };
        if coefficients != 0 && coefficients != 2 * self.genus_g as usize {
            return Err(Error::Precondition(format!(
                "{} coefficients given for genus {}, expected {}",
                self.a.len(),
                self.genus_g,
                2 * self.genus_g
            )));
        }
        if matches!(self.surface_kind, SurfaceKind::Sphere | SurfaceKind::Disc) && self.genus_g != 0 {
            return Err(Error::Precondition(format!(
                "a {:?} has genus 0, not {}",
                self.surface_kind, self.genus_g
            )));
        }
        if self.surface_kind == SurfaceKind::Bounded && self.boundary == Some(0) {
            return Err(Error::Precondition("a bounded surface needs a boundary circle".into()));
        }
        if self.alpha_intersections < 2 {
            return Err(Error::Precondition(format!(
                "compression removes two points of Q̄ ∩ α, only {} present",
                self.alpha_intersections
            )));
        }
        Ok(())
    }

    /// The single relation `(a_1, ..., a_2g, q)` on generators `x_1..x_2g, l`.
    pub fn relation<T: IntScalar>(&self) -> Vec<T> {
        let mut row: Vec<T> = if self.a.is_empty() {
            vec![T::zero(); 2 * self.genus_g as usize]
        } else {
            self.a.iter().map(|&v| <T as IntScalar>::from_i64(v)).collect()
        };
        row.push(T::from_u64(self.q).expect("q fits the scalar"));
        row
    }
}

/// Statements about the ambient manifold that the data cannot decide.
pub const AMBIENT_NOTES: [&str; 3] = [
    "if Q̄ is incompressible then so is R̄ (not computed)",
    "W is irreducible when the complement of Q̄ is (not computed)",
    "a reducing sphere for W meets the tube (not computed)",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CobordismReport {
    pub h1_integral: AbelianGroup<i64>,
    pub h1_rational_rank: usize,
    pub is_product: bool,
    pub is_rational_cobordism: bool,
    pub lens_summand: Option<u64>,
    pub r_surface: SurfaceSpec,
    /// Set by [`scharlemann_cycle_to_cobordism`]: both tube ends attach on
    /// the same side of `Q̄`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tube_orientable: Option<bool>,
    pub notes: Vec<String>,
}

pub fn cobordism_homology(d: &TubeCompressionData) -> Result<CobordismReport> {
    d.validate()?;
    let generators = 2 * d.genus_g as usize + 1;
    let h1 = AbelianGroup::from_presentation(generators, &[d.relation::<i64>()]);
    let lens = matches!(d.surface_kind, SurfaceKind::Sphere | SurfaceKind::Disc) && d.q >= 2;
    let r = SurfaceComponent::new(d.genus_g, d.boundary_count(), (d.alpha_intersections - 2) as u32);
    Ok(CobordismReport {
        h1_rational_rank: h1.rational_rank(),
        h1_integral: h1,
        is_product: d.q == 1,
        // Rationally the relation kills l, leaving the surface classes as a basis.
        is_rational_cobordism: true,
        lens_summand: lens.then_some(d.q),
        r_surface: SurfaceSpec::connected(r)?,
        tube_orientable: None,
        notes: AMBIENT_NOTES.iter().map(|s| s.to_string()).collect(),
    })
}

/// Tube compression along the disc bounded by a Scharlemann cycle `c` of
/// `g`. The disc crosses the tube once per edge of `c`.
pub fn scharlemann_cycle_to_cobordism(
    g: &FatGraph,
    c: &Cycle,
    qbar: &SurfaceSpec,
    alpha_intersections: u64,
) -> Result<CobordismReport> {
    if !g.is_scharlemann(c)? {
        return Err(Error::Precondition("cycle is not a Scharlemann cycle".into()));
    }
    let [component] = qbar.components() else {
        return Err(Error::Precondition(format!(
            "Q̄ must be connected, has {} components",
            qbar.components().len()
        )));
    };
    let surface_kind = match (component.genus, component.boundary) {
        (0, 0) => SurfaceKind::Sphere,
        (0, 1) => SurfaceKind::Disc,
        (_, 0) => SurfaceKind::ClosedGenusG,
        _ => SurfaceKind::Bounded,
    };
    let mut data = TubeCompressionData::new(component.genus, surface_kind, c.len() as u64, alpha_intersections);
    if surface_kind == SurfaceKind::Bounded {
        data.boundary = Some(component.boundary);
    }
    let mut report = cobordism_homology(&data)?;
    // Consecutive labels at every edge of the cycle: the arcs of α cross the
    // annulus between those labels in opposite directions, so the tube ends
    // lie on one side.
    report.tube_orientable = Some(g.cycle_label_pair(c).is_some());
    Ok(report)
}
