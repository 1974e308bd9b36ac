//! Closed-surface arithmetic: Euler characteristic, the extendability bound
//! μ(Σ), the constant c and the vertex-count thresholds for E(k−1,1).

use std::fmt;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("non-orientable surfaces have genus at least 1")]
    ZeroCrosscaps,
    #[error("{0}")]
    OutOfDomain(String),
    #[error("exact arithmetic overflowed the chosen scalar type")]
    ArithmeticOverflow,
    #[error("cannot parse surface `{0}` (expected S<g> or N<g>)")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceKind {
    Orientable,
    NonOrientable,
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceKind::Orientable => "orientable",
            SurfaceKind::NonOrientable => "non-orientable",
        })
    }
}

impl FromStr for SurfaceKind {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "orientable" => Ok(SurfaceKind::Orientable),
            "non-orientable" | "nonorientable" => Ok(SurfaceKind::NonOrientable),
            other => Err(SurfaceError::Parse(other.to_string())),
        }
    }
}

/// S_g (orientable, g ≥ 0) or N_ḡ (non-orientable, ḡ ≥ 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Surface {
    kind: SurfaceKind,
    genus: u32,
}

impl Surface {
    pub fn new(kind: SurfaceKind, genus: u32) -> Result<Self, SurfaceError> {
        if kind == SurfaceKind::NonOrientable && genus == 0 {
            return Err(SurfaceError::ZeroCrosscaps);
        }
        Ok(Surface { kind, genus })
    }

    pub fn orientable(genus: u32) -> Self {
        Surface { kind: SurfaceKind::Orientable, genus }
    }

    /// Panics if `genus == 0`.
    pub fn non_orientable(genus: u32) -> Self {
        Surface::new(SurfaceKind::NonOrientable, genus).expect("crosscap number must be positive")
    }

    pub fn sphere() -> Self {
        Surface::orientable(0)
    }

    pub fn kind(self) -> SurfaceKind {
        self.kind
    }

    pub fn genus(self) -> u32 {
        self.genus
    }

    pub fn is_sphere(self) -> bool {
        self == Surface::sphere()
    }

    /// χ = 2 − 2g or 2 − ḡ.
    pub fn chi(self) -> i64 {
        match self.kind {
            SurfaceKind::Orientable => 2 - 2 * self.genus as i64,
            SurfaceKind::NonOrientable => 2 - self.genus as i64,
        }
    }

    /// Smallest k such that no graph embedded on the surface is
    /// k-extendable: 2 + ⌊√(4 − 2χ)⌋, except 3 on the sphere.
    pub fn mu(self) -> i64 {
        if self.is_sphere() {
            return 3;
        }
        let radicand = (4 - 2 * self.chi()) as u64;
        2 + radicand.sqrt() as i64
    }

    /// c = 4 − 2χ/(μ + 1), defined for χ ≤ −1.
    pub fn c_constant<T: ExactScalar>(self) -> Result<T, SurfaceError> {
        let chi = self.chi();
        if chi >= 0 {
            return Err(SurfaceError::OutOfDomain(format!(
                "c is defined only for χ ≤ -1, {self} has χ = {chi}"
            )));
        }
        let denom = self.mu() + 1;
        T::from_fraction(4 * denom - 2 * chi, denom).ok_or(SurfaceError::ArithmeticOverflow)
    }

    /// ⌊c⌋ ≤ μ.
    pub fn claim3_holds(self) -> Result<bool, SurfaceError> {
        let c: Rational64 = self.c_constant()?;
        let floor = c.floor_i64().ok_or(SurfaceError::ArithmeticOverflow)?;
        Ok(floor <= self.mu())
    }

    /// ⌊(8g−8)/(k−3)⌋ + 1, or ⌊(4ḡ−8)/(k−3)⌋ + 1 when non-orientable, with
    /// floor division toward −∞. Graphs with at least this many vertices that
    /// embed on the surface are not E(k−1,1).
    pub fn theorem2_threshold(self, k: i64) -> Result<i64, SurfaceError> {
        if k < 4 {
            return Err(SurfaceError::OutOfDomain(format!("threshold requires k ≥ 4, got {k}")));
        }
        let g = self.genus as i64;
        let numer = match self.kind {
            SurfaceKind::Orientable => 8 * g - 8,
            SurfaceKind::NonOrientable => 4 * g - 8,
        };
        Ok(Integer::div_floor(&numer, &(k - 3)) + 1)
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SurfaceKind::Orientable => write!(f, "S{}", self.genus),
            SurfaceKind::NonOrientable => write!(f, "N{}", self.genus),
        }
    }
}

impl FromStr for Surface {
    type Err = SurfaceError;

    /// `S2`, `N3`, ...
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SurfaceError::Parse(s.to_string());
        let (kind, rest) = match s.split_at_checked(1).ok_or_else(bad)? {
            ("S", rest) => (SurfaceKind::Orientable, rest),
            ("N", rest) => (SurfaceKind::NonOrientable, rest),
            _ => return Err(bad()),
        };
        let genus = rest.parse().map_err(|_| bad())?;
        Surface::new(kind, genus)
    }
}

/// All surfaces with χ in `lo..=hi`, orientable first within each χ.
pub fn surfaces_with_chi(lo: i64, hi: i64) -> Vec<Surface> {
    let mut out = Vec::new();
    for chi in (lo..=hi.min(2)).rev() {
        if chi % 2 == 0 {
            out.push(Surface::orientable(((2 - chi) / 2) as u32));
        }
        if chi <= 1 {
            out.push(Surface::non_orientable((2 - chi) as u32));
        }
    }
    out
}
