//! Reachability graphs that separate two settings.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::realize::{realize_search, RealizeOptions};
use crate::error::{Error, Result};
use crate::fixtures::get_fixture;
use crate::model::{SettingClass, Strictness, TemporalGraph};
use crate::reachability::ReachabilityGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SeparationId {
    L2,
    L3,
    L5,
    L7,
}

impl SeparationId {
    pub const ALL: [SeparationId; 4] = [SeparationId::L2, SeparationId::L3, SeparationId::L5, SeparationId::L7];

    pub fn name(self) -> &'static str {
        match self {
            SeparationId::L2 => "L2",
            SeparationId::L3 => "L3",
            SeparationId::L5 => "L5",
            SeparationId::L7 => "L7",
        }
    }
}

impl fmt::Display for SeparationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeparationId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeparationId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown separation case `{s}`")))
    }
}

/// A reachability graph realizable in one setting, paired with a setting
/// that cannot realize it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationCase {
    pub id: SeparationId,
    pub target: ReachabilityGraph,
    pub forbidden: SettingClass,
    pub options: RealizeOptions,
}

impl SeparationCase {
    /// - `L2`: a strict closure with no simple strict realization.
    /// - `L3`: a strict closure with no non-strict realization.
    /// - `L5`: a diamond with no simple non-strict realization.
    /// - `L7`: a non-strict closure with no happy realization.
    ///
    /// Only the footprint restrictions that follow from the target itself
    /// are applied, so every surviving labeling is actually examined.
    pub fn new(id: SeparationId) -> Self {
        let (fixture, s, forbidden) = match id {
            SeparationId::L2 => ("L2", Strictness::Strict, SettingClass::SimpleStrict),
            SeparationId::L3 => ("L3", Strictness::Strict, SettingClass::NonStrict),
            SeparationId::L5 => ("L5", Strictness::NonStrict, SettingClass::SimpleNonStrict),
            SeparationId::L7 => ("L7", Strictness::NonStrict, SettingClass::Happy),
        };
        let target = get_fixture(fixture).expect("separation fixtures exist").expected(s).clone();
        SeparationCase {
            id,
            target,
            forbidden,
            options: RealizeOptions {
                prune_distance_two: false,
                ..RealizeOptions::default()
            },
        }
    }

    pub fn all() -> Vec<SeparationCase> {
        SeparationId::ALL.into_iter().map(SeparationCase::new).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationCertificate {
    pub case: SeparationId,
    pub setting: SettingClass,
    pub target: ReachabilityGraph,
    /// Footprints that survived pruning.
    pub footprints: u64,
    /// Labelings examined.
    pub scanned: u64,
    /// `None` when the separation holds.
    pub witness: Option<TemporalGraph>,
}

impl SeparationCertificate {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn verify_separation(case: &SeparationCase) -> Result<SeparationCertificate> {
    let r = realize_search(&case.target, case.forbidden, &case.options)?;
    Ok(SeparationCertificate {
        case: case.id,
        setting: case.forbidden,
        target: case.target.clone(),
        footprints: r.footprints,
        scanned: r.scanned,
        witness: r.witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_round_trip() {
        for id in SeparationId::ALL {
            assert_eq!(id.name().parse::<SeparationId>().unwrap(), id);
            assert_eq!(SeparationCase::new(id).id, id);
        }
        assert!("L4".parse::<SeparationId>().is_err());
    }

    #[test]
    fn small_cases_hold() {
        for id in [SeparationId::L2, SeparationId::L3, SeparationId::L5] {
            let cert = verify_separation(&SeparationCase::new(id)).unwrap();
            assert!(cert.holds(), "{id}");
            assert!(cert.scanned > 0);
        }
    }
}
