//! Surgery scenarios: the inequality of the rationally essential theorem
//! and the conclusion table of the exceptional surgery theorem.
//!
//! Hypotheses about the 3-manifolds are flags the user asserts; nothing
//! here checks them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScenarioKind {
    Sphere,
    Disc,
    Annulus,
    Torus,
    GenusG,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 5] =
        [ScenarioKind::Sphere, ScenarioKind::Disc, ScenarioKind::Annulus, ScenarioKind::Torus, ScenarioKind::GenusG];

    /// Flags each conclusion rests on, in the order they are checked.
    pub fn required_flags(self) -> &'static [Flag] {
        use Flag::*;
        match self {
            ScenarioKind::Sphere | ScenarioKind::Disc => {
                &[NIrreducible, NBoundaryIrreducible, H2Nonzero, MIrreducible, ExceptionalClass]
            }
            ScenarioKind::Torus => {
                &[NIrreducible, NBoundaryIrreducible, H2Nonzero, MIrreducible, ExceptionalClass, MPrimeIrreducible]
            }
            ScenarioKind::Annulus => &[
                NIrreducible,
                NBoundaryIrreducible,
                H2Nonzero,
                MIrreducible,
                ExceptionalClass,
                MPrimeIrreducible,
                MPrimeAtoroidal,
                BoundaryComponentBoundOk,
            ],
            ScenarioKind::GenusG => &[AssumptionsAToD, ExceptionalClass],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flag {
    #[serde(rename = "N_irreducible")]
    NIrreducible,
    #[serde(rename = "N_boundary_irreducible")]
    NBoundaryIrreducible,
    #[serde(rename = "M_irreducible")]
    MIrreducible,
    #[serde(rename = "H2_nonzero")]
    H2Nonzero,
    #[serde(rename = "exceptional_class")]
    ExceptionalClass,
    #[serde(rename = "M_prime_irreducible")]
    MPrimeIrreducible,
    #[serde(rename = "M_prime_atoroidal")]
    MPrimeAtoroidal,
    #[serde(rename = "boundary_component_bound_ok")]
    BoundaryComponentBoundOk,
    #[serde(rename = "assumptions_A_to_D")]
    AssumptionsAToD,
}

impl Flag {
    pub const ALL: [Flag; 9] = [
        Flag::NIrreducible,
        Flag::NBoundaryIrreducible,
        Flag::MIrreducible,
        Flag::H2Nonzero,
        Flag::ExceptionalClass,
        Flag::MPrimeIrreducible,
        Flag::MPrimeAtoroidal,
        Flag::BoundaryComponentBoundOk,
        Flag::AssumptionsAToD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::NIrreducible => "N_irreducible",
            Flag::NBoundaryIrreducible => "N_boundary_irreducible",
            Flag::MIrreducible => "M_irreducible",
            Flag::H2Nonzero => "H2_nonzero",
            Flag::ExceptionalClass => "exceptional_class",
            Flag::MPrimeIrreducible => "M_prime_irreducible",
            Flag::MPrimeAtoroidal => "M_prime_atoroidal",
            Flag::BoundaryComponentBoundOk => "boundary_component_bound_ok",
            Flag::AssumptionsAToD => "assumptions_A_to_D",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// User-asserted hypotheses. Unset flags default to false.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Flags {
    #[serde(rename = "N_irreducible")]
    pub n_irreducible: bool,
    #[serde(rename = "N_boundary_irreducible")]
    pub n_boundary_irreducible: bool,
    #[serde(rename = "M_irreducible")]
    pub m_irreducible: bool,
    #[serde(rename = "H2_nonzero")]
    pub h2_nonzero: bool,
    pub exceptional_class: bool,
    #[serde(rename = "M_prime_irreducible")]
    pub m_prime_irreducible: bool,
    #[serde(rename = "M_prime_atoroidal")]
    pub m_prime_atoroidal: bool,
    pub boundary_component_bound_ok: bool,
    #[serde(rename = "assumptions_A_to_D")]
    pub assumptions_a_to_d: bool,
}

impl Flags {
    pub fn all() -> Self {
        let mut f = Flags::default();
        for flag in Flag::ALL {
            f.set(flag, true);
        }
        f
    }

    pub fn get(&self, flag: Flag) -> bool {
        match flag {
            Flag::NIrreducible => self.n_irreducible,
            Flag::NBoundaryIrreducible => self.n_boundary_irreducible,
            Flag::MIrreducible => self.m_irreducible,
            Flag::H2Nonzero => self.h2_nonzero,
            Flag::ExceptionalClass => self.exceptional_class,
            Flag::MPrimeIrreducible => self.m_prime_irreducible,
            Flag::MPrimeAtoroidal => self.m_prime_atoroidal,
            Flag::BoundaryComponentBoundOk => self.boundary_component_bound_ok,
            Flag::AssumptionsAToD => self.assumptions_a_to_d,
        }
    }

    pub fn set(&mut self, flag: Flag, value: bool) {
        let slot = match flag {
            Flag::NIrreducible => &mut self.n_irreducible,
            Flag::NBoundaryIrreducible => &mut self.n_boundary_irreducible,
            Flag::MIrreducible => &mut self.m_irreducible,
            Flag::H2Nonzero => &mut self.h2_nonzero,
            Flag::ExceptionalClass => &mut self.exceptional_class,
            Flag::MPrimeIrreducible => &mut self.m_prime_irreducible,
            Flag::MPrimeAtoroidal => &mut self.m_prime_atoroidal,
            Flag::BoundaryComponentBoundOk => &mut self.boundary_component_bound_ok,
            Flag::AssumptionsAToD => &mut self.assumptions_a_to_d,
        };
        *slot = value;
    }

    pub fn without(mut self, flag: Flag) -> Self {
        self.set(flag, false);
        self
    }
}

/// Slope distance `delta` between the filling slopes, and the surface `Q̄`
/// in `M′` meeting the core `α` of the filling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub delta: u64,
    pub surface_kind: ScenarioKind,
    pub chi: i64,
    pub alpha_intersections: u64,
    #[serde(default)]
    pub flags: Flags,
}

impl Scenario {
    pub fn new(surface_kind: ScenarioKind, delta: u64, chi: i64, alpha_intersections: u64) -> Self {
        Self { delta, surface_kind, chi, alpha_intersections, flags: Flags::default() }
    }

    pub fn with_flags(mut self, flags: Flags) -> Self {
        self.flags = flags;
        self
    }

    /// `delta ≥ 1`, and `chi` is the Euler characteristic of the kind: 2
    /// for a sphere, 1 for a disc, 0 for an annulus or torus, and even and
    /// at most −2 for a closed surface of genus at least 2.
    pub fn validate(&self) -> Result<()> {
        if self.delta == 0 {
            return Err(Error::InconsistentScenario("delta must be at least 1".into()));
        }
        let ok = match self.surface_kind {
            ScenarioKind::Sphere => self.chi == 2,
            ScenarioKind::Disc => self.chi == 1,
            ScenarioKind::Annulus | ScenarioKind::Torus => self.chi == 0,
            ScenarioKind::GenusG => self.chi <= -2 && self.chi % 2 == 0,
        };
        if !ok {
            return Err(Error::InconsistentScenario(format!(
                "chi = {} does not fit surface kind {:?}",
                self.chi, self.surface_kind
            )));
        }
        Ok(())
    }
}

/// `(Δ − 1)|Q̄ ∩ α| ≤ −χ(Q̄)`, evaluated in wide integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub lhs: i128,
    pub rhs: i128,
    pub holds: bool,
}

pub fn check_surgery_inequality(s: &Scenario) -> Result<Inequality> {
    s.validate()?;
    let lhs = (i128::from(s.delta) - 1) * i128::from(s.alpha_intersections);
    let rhs = -i128::from(s.chi);
    Ok(Inequality { lhs, rhs, holds: lhs <= rhs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum Conclusion {
    NotApplicable { flag: Flag },
    /// Disc: an essential disc cannot meet α, so `M′` is
    /// boundary-irreducible.
    BoundaryIrreducible,
    /// Sphere: `M′` has a lens space proper summand.
    LensSummand,
    /// Torus: `Δ = 1`, or an essential torus bounds a Heegaard genus 2
    /// submanifold.
    TorusBranch { delta_one: bool },
    /// Annulus: `Δ = 1`, or `∂M′` is a single torus and `M′` has Heegaard
    /// genus 2.
    AnnulusBranch { delta_one: bool },
    /// Closed surface of higher genus: the inequality must hold; if the
    /// data violates it the scenario cannot occur.
    RationallyEssential { inequality: Inequality },
}

impl Conclusion {
    pub fn is_applicable(&self) -> bool {
        !matches!(self, Conclusion::NotApplicable { .. })
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::NotApplicable { flag } => write!(f, "theorem not applicable: {flag} unset"),
            Conclusion::BoundaryIrreducible => f.write_str("M' is boundary-irreducible (no essential disc meets alpha)"),
            Conclusion::LensSummand => f.write_str("lens space proper summand"),
            Conclusion::TorusBranch { delta_one: true } => f.write_str("delta = 1"),
            Conclusion::TorusBranch { delta_one: false } => f.write_str("genus-2 submanifold branch (delta != 1)"),
            Conclusion::AnnulusBranch { delta_one: true } => f.write_str("delta = 1"),
            Conclusion::AnnulusBranch { delta_one: false } => {
                f.write_str("single torus boundary, Heegaard genus 2 branch (delta != 1)")
            }
            Conclusion::RationallyEssential { inequality: i } if i.holds => {
                write!(f, "inequality holds ({} <= {})", i.lhs, i.rhs)
            }
            Conclusion::RationallyEssential { inequality: i } => {
                write!(f, "inequality violated ({} > {}): no such surface exists", i.lhs, i.rhs)
            }
        }
    }
}

pub fn scenario_report(s: &Scenario) -> Result<Conclusion> {
    s.validate()?;
    if let Some(&flag) = s.surface_kind.required_flags().iter().find(|&&f| !s.flags.get(f)) {
        return Ok(Conclusion::NotApplicable { flag });
    }
    Ok(match s.surface_kind {
        ScenarioKind::Disc => Conclusion::BoundaryIrreducible,
        ScenarioKind::Sphere => Conclusion::LensSummand,
        ScenarioKind::Torus => Conclusion::TorusBranch { delta_one: s.delta == 1 },
        ScenarioKind::Annulus => Conclusion::AnnulusBranch { delta_one: s.delta == 1 },
        ScenarioKind::GenusG => Conclusion::RationallyEssential { inequality: check_surgery_inequality(s)? },
    })
}
