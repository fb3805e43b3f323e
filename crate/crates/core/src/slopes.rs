//! Slopes on a torus boundary and oriented multicurves.
//!
//! A slope is stored as a primitive pair `(p, q)` in a fixed basis of the
//! first homology of the torus, normalized so that `q > 0`, or `p > 0` when
//! `q = 0`. Orientation is carried separately by [`Orientation`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{gcd, IntScalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }

    pub fn sign<T: IntScalar>(self) -> T {
        match self {
            Orientation::Positive => T::one(),
            Orientation::Negative => -T::one(),
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Positive => "+",
            Orientation::Negative => "-",
        })
    }
}

/// Unoriented slope in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope<T> {
    p: T,
    q: T,
}

impl<T: IntScalar> Slope<T> {
    /// Builds the slope of `(p, q)`; `(p, q)` and `(-p, -q)` give the same slope.
    pub fn new(p: T, q: T) -> Result<Self> {
        Self::from_vector(p, q).map(|(s, _)| s)
    }

    /// Splits a primitive vector into its slope and the orientation relative
    /// to the canonical representative.
    pub fn from_vector(p: T, q: T) -> Result<(Self, Orientation)> {
        if (p.is_zero() && q.is_zero()) || !gcd(&p, &q).is_one() {
            return Err(Error::InvalidSlope(format!("{p}/{q}")));
        }
        let canonical = q.is_positive() || (q.is_zero() && p.is_positive());
        if canonical {
            Ok((Slope { p, q }, Orientation::Positive))
        } else {
            Ok((Slope { p: -p, q: -q }, Orientation::Negative))
        }
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    /// The canonical representative scaled by an orientation.
    pub fn vector(&self, orientation: Orientation) -> (T, T) {
        let s: T = orientation.sign();
        (self.p.clone() * s.clone(), self.q.clone() * s)
    }

    /// Applies an integer basis change of determinant ±1 and reports whether
    /// the image representative flipped relative to the new canonical form.
    pub fn change_basis(&self, m: [[T; 2]; 2]) -> Result<(Self, Orientation)> {
        let det = m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        let p = m[0][0].clone() * self.p.clone() + m[0][1].clone() * self.q.clone();
        let q = m[1][0].clone() * self.p.clone() + m[1][1].clone() * self.q.clone();
        Self::from_vector(p, q)
    }
}

/// Minimal geometric intersection number `|p s - q r|`.
pub fn delta<T: IntScalar>(a: &Slope<T>, b: &Slope<T>) -> T {
    (a.p.clone() * b.q.clone() - a.q.clone() * b.p.clone()).abs()
}

impl<T: IntScalar> PartialOrd for Slope<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: IntScalar> Ord for Slope<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.p, &self.q).cmp(&(&other.p, &other.q))
    }
}

impl<T: IntScalar> fmt::Display for Slope<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl<T: IntScalar + FromStr> FromStr for Slope<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSlope(s.to_string());
        let (p, q) = s.trim().split_once('/').ok_or_else(bad)?;
        let p = p.trim().parse::<T>().map_err(|_| bad())?;
        let q = q.trim().parse::<T>().map_err(|_| bad())?;
        Slope::new(p, q)
    }
}

impl<T: IntScalar> Serialize for Slope<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, T: IntScalar + FromStr> Deserialize<'de> for Slope<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `mult` parallel copies of `slope`, all with the same orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: IntScalar",
    deserialize = "T: IntScalar + FromStr"
))]
pub struct Term<T> {
    pub slope: Slope<T>,
    pub mult: u32,
    #[serde(rename = "orient")]
    pub orientation: Orientation,
}

/// Oriented weighted collection of slopes; normalized so each
/// `(slope, orientation)` pair appears at most once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent, bound(serialize = "T: IntScalar"))]
pub struct OrientedMulticurve<T> {
    terms: Vec<Term<T>>,
}

impl<T: IntScalar> OrientedMulticurve<T> {
    pub fn new(terms: Vec<Term<T>>) -> Result<Self> {
        if let Some(t) = terms.iter().find(|t| t.mult == 0) {
            return Err(Error::InvalidMulticurve(format!(
                "term {}{} has zero multiplicity",
                t.slope, t.orientation
            )));
        }
        let mut merged: Vec<Term<T>> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged
                .iter_mut()
                .find(|m| m.slope == t.slope && m.orientation == t.orientation)
            {
                Some(m) => m.mult += t.mult,
                None => merged.push(t),
            }
        }
        merged.sort_by(|a, b| (&a.slope, a.orientation).cmp(&(&b.slope, b.orientation)));
        Ok(Self { terms: merged })
    }

    pub fn single(slope: Slope<T>, mult: u32, orientation: Orientation) -> Result<Self> {
        Self::new(vec![Term { slope, mult, orientation }])
    }

    pub fn empty() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn component_count(&self) -> u64 {
        self.terms.iter().map(|t| u64::from(t.mult)).sum()
    }

    /// Total homology class.
    pub fn class(&self) -> (T, T) {
        self.terms.iter().fold((T::zero(), T::zero()), |(x, y), t| {
            let (p, q) = t.slope.vector(t.orientation);
            let m = T::from_u32(t.mult).expect("multiplicity fits");
            (x + p * m.clone(), y + q * m)
        })
    }

    /// Components are pairwise disjoint on the torus iff they share one slope.
    pub fn common_slope(&self) -> Option<&Slope<T>> {
        let first = &self.terms.first()?.slope;
        self.terms.iter().all(|t| &t.slope == first).then_some(first)
    }

    fn is_coherent(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].orientation == w[1].orientation)
    }
}

impl<'de, T: IntScalar + FromStr> Deserialize<'de> for OrientedMulticurve<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term<T>>::deserialize(deserializer)?;
        OrientedMulticurve::new(terms).map_err(serde::de::Error::custom)
    }
}

/// Oriented double curve sum of two embedded multicurves on the torus.
///
/// Inputs sharing a slope have no crossings and are returned as a disjoint
/// union. Transverse inputs are resolved at every crossing; the result is
/// `gcd(|x|, |y|)` coherently oriented copies of the primitive slope of the
/// summed class `(x, y)`. A transverse input carrying both orientations is
/// rejected.
pub fn double_curve_sum<T: IntScalar>(
    c1: &OrientedMulticurve<T>,
    c2: &OrientedMulticurve<T>,
) -> Result<OrientedMulticurve<T>> {
    let s1 = embedded_slope(c1, "first")?;
    let s2 = embedded_slope(c2, "second")?;
    let transverse = matches!((s1, s2), (Some(a), Some(b)) if a != b);
    if !transverse {
        let mut terms = c1.terms.clone();
        terms.extend(c2.terms.iter().cloned());
        return OrientedMulticurve::new(terms);
    }
    for (c, which) in [(c1, "first"), (c2, "second")] {
        if !c.is_coherent() {
            return Err(Error::AmbiguousOrientation(format!(
                "{which} input carries both orientations of its slope and crosses the other input"
            )));
        }
    }
    let (x1, y1) = c1.class();
    let (x2, y2) = c2.class();
    let (x, y) = (x1 + x2, y1 + y2);
    let g = gcd(&x, &y);
    let (slope, orientation) = Slope::from_vector(x / g.clone(), y / g.clone())?;
    let mult = g
        .to_u32()
        .ok_or_else(|| Error::InvalidMulticurve(format!("component count {g} overflows")))?;
    OrientedMulticurve::single(slope, mult, orientation)
}

fn embedded_slope<'a, T: IntScalar>(
    c: &'a OrientedMulticurve<T>,
    which: &str,
) -> Result<Option<&'a Slope<T>>> {
    if c.is_empty() {
        return Ok(None);
    }
    c.common_slope().map(Some).ok_or_else(|| {
        Error::InvalidMulticurve(format!(
            "{which} input mixes distinct slopes, so it is not embedded on the torus"
        ))
    })
}
