use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// The graph families a sequence can be realized by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Forest,
    Tree,
    Unicyclic,
    BiUnicyclic,
    BridgelessCactus,
    TriangulatedCactus,
    BridgelessBicactus,
    CoreCactus,
    CoreBicactus,
    Cactus,
    Bicactus,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Forest,
        Family::Tree,
        Family::Unicyclic,
        Family::BiUnicyclic,
        Family::BridgelessCactus,
        Family::TriangulatedCactus,
        Family::BridgelessBicactus,
        Family::CoreCactus,
        Family::CoreBicactus,
        Family::Cactus,
        Family::Bicactus,
    ];

    /// Canonical kebab-case name, as accepted on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Family::Forest => "forest",
            Family::Tree => "tree",
            Family::Unicyclic => "unicyclic",
            Family::BiUnicyclic => "bi-unicyclic",
            Family::BridgelessCactus => "bridgeless-cactus",
            Family::TriangulatedCactus => "triangulated-cactus",
            Family::BridgelessBicactus => "bridgeless-bicactus",
            Family::CoreCactus => "core-cactus",
            Family::CoreBicactus => "core-bicactus",
            Family::Cactus => "cactus",
            Family::Bicactus => "bicactus",
        }
    }

    /// The bipartite variant's underlying family, if this is one.
    pub fn non_bipartite_counterpart(self) -> Option<Family> {
        match self {
            Family::BiUnicyclic => Some(Family::Unicyclic),
            Family::BridgelessBicactus => Some(Family::BridgelessCactus),
            Family::CoreBicactus => Some(Family::CoreCactus),
            Family::Bicactus => Some(Family::Cactus),
            _ => None,
        }
    }

    fn bit(self) -> u16 {
        1 << (self as u16)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown family `{0}`")]
pub struct UnknownFamily(pub String);

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| !matches!(c, '-' | '_' | ' '))
        .flat_map(char::to_lowercase)
        .collect()
}

impl FromStr for Family {
    type Err = UnknownFamily;

    /// Accepts the canonical names plus spelling variants that differ only in
    /// case, hyphens, underscores or spaces (`bi-cactus`, `BiCactus`, ...).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = normalize(s);
        Family::ALL
            .into_iter()
            .find(|f| normalize(f.name()) == key)
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

/// A set of families, one bit each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FamilySet(u16);

impl FamilySet {
    pub const EMPTY: FamilySet = FamilySet(0);

    pub fn insert(&mut self, f: Family) {
        self.0 |= f.bit();
    }

    pub fn contains(self, f: Family) -> bool {
        self.0 & f.bit() != 0
    }

    pub fn union(self, other: FamilySet) -> FamilySet {
        FamilySet(self.0 | other.0)
    }

    pub fn intersection(self, other: FamilySet) -> FamilySet {
        FamilySet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Family> {
        Family::ALL.into_iter().filter(move |&f| self.contains(f))
    }
}

impl FromIterator<Family> for FamilySet {
    fn from_iter<I: IntoIterator<Item = Family>>(iter: I) -> Self {
        let mut s = FamilySet::EMPTY;
        for f in iter {
            s.insert(f);
        }
        s
    }
}
