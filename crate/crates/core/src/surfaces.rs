//! Punctured orientable surfaces, Euler characteristic and the two norms.
//!
//! Punctures are counted data: each puncture of a component is a point of
//! `S ∩ β`. The caller is responsible for the count being minimal.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PunctureSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// One connected surface: genus, boundary circles, punctures.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceComponent {
    #[serde(rename = "g")]
    pub genus: u32,
    #[serde(rename = "b", default)]
    pub boundary: u32,
    #[serde(default)]
    pub punctures: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<Vec<PunctureSign>>,
}

impl SurfaceComponent {
    pub fn new(genus: u32, boundary: u32, punctures: u32) -> Self {
        Self { genus, boundary, punctures, signs: None }
    }

    pub fn closed(genus: u32) -> Self {
        Self::new(genus, 0, 0)
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * i64::from(self.genus) - i64::from(self.boundary)
    }

    pub fn beta_norm(&self) -> u64 {
        (-self.euler() + i64::from(self.punctures)).max(0) as u64
    }

    pub fn thurston_norm(&self) -> u64 {
        (-self.euler()).max(0) as u64
    }

    /// Whether β meets this component with a single sign. `None` when no
    /// signs were recorded.
    pub fn coherent(&self) -> Option<bool> {
        self.signs
            .as_ref()
            .map(|s| s.windows(2).all(|w| w[0] == w[1]))
    }

    pub fn validate(&self) -> Result<()> {
        match &self.signs {
            Some(signs) if signs.len() != self.punctures as usize => Err(Error::InvalidSurface(
                format!(
                    "{} puncture signs given for {} punctures",
                    signs.len(),
                    self.punctures
                ),
            )),
            _ => Ok(()),
        }
    }
}

/// Possibly disconnected orientable surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct SurfaceSpec {
    components: Vec<SurfaceComponent>,
}

impl SurfaceSpec {
    pub fn new(components: Vec<SurfaceComponent>) -> Result<Self> {
        components.iter().try_for_each(SurfaceComponent::validate)?;
        Ok(Self { components })
    }

    pub fn connected(component: SurfaceComponent) -> Result<Self> {
        Self::new(vec![component])
    }

    pub fn components(&self) -> &[SurfaceComponent] {
        &self.components
    }

    /// Disjoint union.
    pub fn union(&self, other: &SurfaceSpec) -> SurfaceSpec {
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        SurfaceSpec { components }
    }

    pub fn euler(&self) -> i64 {
        self.components.iter().map(SurfaceComponent::euler).sum()
    }

    pub fn beta_norm(&self) -> u64 {
        self.components.iter().map(SurfaceComponent::beta_norm).sum()
    }

    pub fn thurston_norm(&self) -> u64 {
        self.components.iter().map(SurfaceComponent::thurston_norm).sum()
    }

    pub fn punctures(&self) -> u64 {
        self.components.iter().map(|c| u64::from(c.punctures)).sum()
    }
}

/// Record form used when reading surface files. Nonorientable input is
/// rejected here, before it reaches [`SurfaceSpec`].
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentRecord {
    g: u32,
    #[serde(default)]
    b: u32,
    #[serde(default)]
    punctures: u32,
    #[serde(default)]
    signs: Option<Vec<PunctureSign>>,
    #[serde(default = "yes")]
    orientable: bool,
}

fn yes() -> bool {
    true
}

impl<'de> Deserialize<'de> for SurfaceSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<ComponentRecord>::deserialize(d)?;
        let mut components = Vec::with_capacity(records.len());
        for r in records {
            if !r.orientable {
                return Err(serde::de::Error::custom("nonorientable surfaces are not supported"));
            }
            components.push(SurfaceComponent {
                genus: r.g,
                boundary: r.b,
                punctures: r.punctures,
                signs: r.signs,
            });
        }
        SurfaceSpec::new(components).map_err(serde::de::Error::custom)
    }
}

/// A class is exceptional iff the wrapping and winding numbers of β differ.
///
/// Winding is the absolute algebraic count, so it can neither exceed the
/// geometric count nor differ from it in parity. The arc case has no numeric
/// form and is not covered here.
pub fn exceptional_predicate(wrapping: u64, winding: u64) -> Result<bool> {
    if winding > wrapping {
        return Err(Error::InconsistentIntersection(format!(
            "winding number {winding} exceeds wrapping number {wrapping}"
        )));
    }
    if (wrapping - winding) % 2 != 0 {
        return Err(Error::InconsistentIntersection(format!(
            "wrapping number {wrapping} and winding number {winding} differ in parity"
        )));
    }
    Ok(wrapping != winding)
}
