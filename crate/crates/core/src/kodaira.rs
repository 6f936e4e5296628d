//! Kodaira fibers of rational elliptic surfaces: the type/Euler-characteristic
//! table indexed by the value and local degree of `J`, root ranks, and the
//! enumeration of candidate singular-fiber configurations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KodairaError {
    #[error("no Kodaira fiber has J = {j}, local degree {degree} and Euler characteristic {euler}")]
    Inconsistent { j: JClass, degree: u32, euler: u32 },
    #[error("J = {0} needs local degree at least 1")]
    ZeroDegree(JClass),
    #[error("unknown fiber type {0:?}")]
    UnknownType(String),
    #[error("unknown J value {0:?}")]
    UnknownJ(String),
}

/// Where `J` sends the point under the fiber.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum JClass {
    Zero,
    One,
    Infinity,
    Generic,
}

impl fmt::Display for JClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JClass::Zero => "0",
            JClass::One => "1",
            JClass::Infinity => "inf",
            JClass::Generic => "generic",
        })
    }
}

impl FromStr for JClass {
    type Err = KodairaError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "0" => Ok(JClass::Zero),
            "1" => Ok(JClass::One),
            "inf" | "∞" | "infinity" => Ok(JClass::Infinity),
            "generic" => Ok(JClass::Generic),
            _ => Err(KodairaError::UnknownJ(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum KodairaType {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(k) => write!(f, "I{k}"),
            KodairaType::IStar(k) => write!(f, "I*{k}"),
            KodairaType::II => f.write_str("II"),
            KodairaType::III => f.write_str("III"),
            KodairaType::IV => f.write_str("IV"),
            KodairaType::IVStar => f.write_str("IV*"),
            KodairaType::IIIStar => f.write_str("III*"),
            KodairaType::IIStar => f.write_str("II*"),
        }
    }
}

impl Serialize for KodairaType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for KodairaType {
    type Err = KodairaError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || KodairaError::UnknownType(s.to_string());
        Ok(match s {
            "II" => KodairaType::II,
            "III" => KodairaType::III,
            "IV" => KodairaType::IV,
            "IV*" => KodairaType::IVStar,
            "III*" => KodairaType::IIIStar,
            "II*" => KodairaType::IIStar,
            _ => {
                if let Some(k) = s.strip_prefix("I*") {
                    KodairaType::IStar(k.parse().map_err(|_| bad())?)
                } else if let Some(k) = s.strip_prefix('I') {
                    KodairaType::I(k.parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

impl KodairaType {
    pub fn euler_char(self) -> u32 {
        match self {
            KodairaType::I(k) => k,
            KodairaType::IStar(k) => k + 6,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    /// Rank of the root lattice spanned by the components missing the zero section.
    pub fn root_rank(self) -> u32 {
        match self {
            KodairaType::I(k) => k.saturating_sub(1),
            KodairaType::IStar(k) => k + 4,
            KodairaType::II => 0,
            KodairaType::III => 1,
            KodairaType::IV => 2,
            KodairaType::IVStar => 6,
            KodairaType::IIIStar => 7,
            KodairaType::IIStar => 8,
        }
    }

    /// Contribution to the degree of `J` over `∞`.
    pub fn pole_order(self) -> u32 {
        match self {
            KodairaType::I(k) | KodairaType::IStar(k) => k,
            _ => 0,
        }
    }
}

pub fn euler_char(t: KodairaType) -> u32 {
    t.euler_char()
}

pub fn fiber_root_rank(t: KodairaType) -> u32 {
    t.root_rank()
}

/// The fiber over a point where `J` takes value `j` with local degree `degree`.
pub fn kodaira_type(j: JClass, degree: u32, euler: u32) -> Result<KodairaType, KodairaError> {
    use KodairaType::*;
    if degree == 0 && j != JClass::Generic {
        return Err(KodairaError::ZeroDegree(j));
    }
    let found = match j {
        JClass::Infinity if euler == degree => Some(I(degree)),
        JClass::Infinity if euler == degree + 6 => Some(IStar(degree)),
        JClass::Zero => match (degree % 3, euler) {
            (0, 0) => Some(I(0)),
            (0, 6) => Some(IStar(0)),
            (1, 2) => Some(II),
            (1, 8) => Some(IVStar),
            (2, 4) => Some(IV),
            (2, 10) => Some(IIStar),
            _ => None,
        },
        JClass::One => match (degree % 2, euler) {
            (0, 0) => Some(I(0)),
            (0, 6) => Some(IStar(0)),
            (1, 3) => Some(III),
            (1, 9) => Some(IIIStar),
            _ => None,
        },
        JClass::Generic => match euler {
            0 => Some(I(0)),
            6 => Some(IStar(0)),
            _ => None,
        },
        _ => None,
    };
    found.ok_or(KodairaError::Inconsistent { j, degree, euler })
}

/// One singular fiber with a witness placement of `J`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct FiberPlacement {
    pub fiber: KodairaType,
    pub j: JClass,
    pub local_degree: u32,
}

/// A multiset of singular fibers (sorted) with a feasible assignment of local degrees of `J`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct FiberConfiguration {
    pub fibers: Vec<KodairaType>,
    pub j_degree: u32,
    pub placements: Vec<FiberPlacement>,
    /// Local degrees over `0` and `1` carried by smooth fibers.
    pub smooth_degree_over_zero: u32,
    pub smooth_degree_over_one: u32,
}

impl fmt::Display for FiberConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.fibers.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigurationError {
    #[error("Euler characteristics sum to {0}, not 12")]
    EulerSum(u32),
    #[error("J-degree {0} outside 1..=12")]
    JDegree(u32),
    #[error("no admissible local degrees over J = {0}")]
    Infeasible(JClass),
    #[error("root rank {0} exceeds 8")]
    RootRank(u32),
    #[error("smooth fibers are not listed")]
    SmoothFiber,
}

/// Checks the four constraints and builds a placement witness.
pub fn validate(fibers: &[KodairaType]) -> Result<FiberConfiguration, ConfigurationError> {
    use KodairaType::*;
    if fibers.contains(&I(0)) {
        return Err(ConfigurationError::SmoothFiber);
    }
    let euler: u32 = fibers.iter().map(|t| t.euler_char()).sum();
    if euler != 12 {
        return Err(ConfigurationError::EulerSum(euler));
    }
    let d: u32 = fibers.iter().map(|t| t.pole_order()).sum();
    if d == 0 || d > 12 {
        return Err(ConfigurationError::JDegree(d));
    }
    let rank: u32 = fibers.iter().map(|t| t.root_rank()).sum();
    if rank > 8 {
        return Err(ConfigurationError::RootRank(rank));
    }
    let mut placements = Vec::new();
    let (mut over0, mut over1) = (0, 0);
    for &t in fibers {
        let (j, deg) = match t {
            I(k) | IStar(k) if k > 0 => (JClass::Infinity, k),
            II | IVStar => (JClass::Zero, 1),
            IV | IIStar => (JClass::Zero, 2),
            III | IIIStar => (JClass::One, 1),
            _ => (JClass::Generic, 1),
        };
        match j {
            JClass::Zero => over0 += deg,
            JClass::One => over1 += deg,
            _ => {}
        }
        debug_assert_eq!(kodaira_type(j, deg, t.euler_char()), Ok(t));
        placements.push(FiberPlacement { fiber: t, j, local_degree: deg });
    }
    // remaining degree over 0 (resp. 1) goes to smooth fibers, in multiples of 3 (resp. 2)
    if over0 > d || !(d - over0).is_multiple_of(3) {
        return Err(ConfigurationError::Infeasible(JClass::Zero));
    }
    if over1 > d || !(d - over1).is_multiple_of(2) {
        return Err(ConfigurationError::Infeasible(JClass::One));
    }
    let mut sorted = fibers.to_vec();
    sorted.sort();
    placements.sort();
    Ok(FiberConfiguration {
        fibers: sorted,
        j_degree: d,
        placements,
        smooth_degree_over_zero: d - over0,
        smooth_degree_over_one: d - over1,
    })
}

/// Every singular fiber type with Euler characteristic at most 12.
pub fn singular_types() -> Vec<KodairaType> {
    use KodairaType::*;
    let mut v: Vec<KodairaType> = (1..=12).map(I).collect();
    v.extend((0..=6).map(IStar));
    v.extend([II, III, IV, IVStar, IIIStar, IIStar]);
    v.sort();
    v
}

/// All candidate configurations, sorted.
pub fn enumerate_configurations() -> Vec<FiberConfiguration> {
    fn rec(types: &[KodairaType], start: usize, left: u32, cur: &mut Vec<KodairaType>, out: &mut BTreeSet<FiberConfiguration>) {
        if left == 0 {
            if let Ok(c) = validate(cur) {
                out.insert(c);
            }
            return;
        }
        for (i, &t) in types.iter().enumerate().skip(start) {
            if t.euler_char() <= left {
                cur.push(t);
                rec(types, i, left - t.euler_char(), cur, out);
                cur.pop();
            }
        }
    }
    let types = singular_types();
    let mut out = BTreeSet::new();
    rec(&types, 0, 12, &mut Vec::new(), &mut out);
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for t in singular_types() {
            assert_eq!(t.to_string().parse::<KodairaType>(), Ok(t));
        }
        assert!("I*x".parse::<KodairaType>().is_err());
        assert_eq!("inf".parse::<JClass>(), Ok(JClass::Infinity));
    }
}
