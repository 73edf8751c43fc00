//! Independence statements `I(X, Y; Z)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::varset::{Universe, VarSet};

/// `(X, Y; Z)` with pairwise disjoint sets.
///
/// The canonical form (see [`Triplet::normalize`]) keeps an empty side in the
/// `Y` position and otherwise orders the two sides by bitmask, so a triplet
/// and its symmetric image normalize to the same value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triplet {
    x: VarSet,
    y: VarSet,
    z: VarSet,
}

impl Triplet {
    pub fn new(x: VarSet, y: VarSet, z: VarSet) -> Result<Self> {
        if !x.is_disjoint(y) || !x.is_disjoint(z) || !y.is_disjoint(z) {
            return Err(Error::InvalidTriplet(format!(
                "sets must be pairwise disjoint: X={x:?} Y={y:?} Z={z:?}"
            )));
        }
        Ok(Triplet { x, y, z })
    }

    /// `new` followed by `normalize`.
    pub fn canonical(x: VarSet, y: VarSet, z: VarSet) -> Result<Self> {
        Triplet::new(x, y, z).map(Triplet::normalize)
    }

    /// Caller guarantees disjointness.
    pub(crate) fn raw(x: VarSet, y: VarSet, z: VarSet) -> Self {
        debug_assert!(x.is_disjoint(y) && x.is_disjoint(z) && y.is_disjoint(z));
        Triplet { x, y, z }
    }

    pub fn x(&self) -> VarSet {
        self.x
    }

    pub fn y(&self) -> VarSet {
        self.y
    }

    pub fn z(&self) -> VarSet {
        self.z
    }

    pub fn variables(&self) -> VarSet {
        self.x | self.y | self.z
    }

    pub fn swap(self) -> Self {
        Triplet {
            x: self.y,
            y: self.x,
            z: self.z,
        }
    }

    pub fn normalize(self) -> Self {
        let swap = if self.x.is_empty() {
            !self.y.is_empty()
        } else {
            !self.y.is_empty() && self.y < self.x
        };
        if swap {
            self.swap()
        } else {
            self
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.normalize() == *self
    }

    /// An instance of trivial independence: one side is empty.
    pub fn is_trivial(&self) -> bool {
        self.x.is_empty() || self.y.is_empty()
    }

    /// Both orientations, `(X,Y;Z)` then `(Y,X;Z)`.
    pub fn orientations(self) -> [Triplet; 2] {
        [self, self.swap()]
    }

    pub fn display<'a>(&'a self, universe: &'a Universe) -> TripletDisplay<'a> {
        TripletDisplay {
            triplet: self,
            universe,
        }
    }

    pub fn to_json(&self, universe: &Universe) -> TripletJson {
        TripletJson {
            x: universe.set_names(self.x),
            y: universe.set_names(self.y),
            z: universe.set_names(self.z),
        }
    }
}

impl fmt::Debug for Triplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I({:?}, {:?}; {:?})", self.x, self.y, self.z)
    }
}

pub struct TripletDisplay<'a> {
    triplet: &'a Triplet,
    universe: &'a Universe,
}

impl fmt::Display for TripletDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = self.universe;
        write!(
            f,
            "I({}, {}; {})",
            u.format_set(self.triplet.x),
            u.format_set(self.triplet.y),
            u.format_set(self.triplet.z)
        )
    }
}

/// Interchange form of a triplet: variable names per side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripletJson {
    #[serde(rename = "X")]
    pub x: Vec<String>,
    #[serde(rename = "Y")]
    pub y: Vec<String>,
    #[serde(rename = "Z", default)]
    pub z: Vec<String>,
}

impl TripletJson {
    pub fn resolve(&self, universe: &Universe) -> Result<Triplet> {
        Triplet::new(universe.set(&self.x)?, universe.set(&self.y)?, universe.set(&self.z)?)
    }
}
