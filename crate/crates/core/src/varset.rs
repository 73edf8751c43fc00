//! Variable identifiers, bitmask variable sets and the named variable universe.
//!
//! A [`VarSet`] is a `u32` bitmask: bit `i` is set iff variable `i` is a
//! member. Comparing two sets compares their bitmasks, which is the fixed
//! total order used for triplet canonicalization and for every enumeration
//! that has to be reproducible.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

/// Hard upper bound on universe size imposed by the bitmask representation.
pub const MAX_VARIABLES: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableId(u8);

impl VariableId {
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_VARIABLES, "variable index {index} out of range");
        VariableId(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(v: VariableId) -> Self {
        VarSet(1 << v.0)
    }

    /// `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARIABLES);
        if n == MAX_VARIABLES {
            VarSet(u32::MAX)
        } else {
            VarSet((1u32 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().map(VariableId::new).collect()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: VariableId) -> bool {
        self.0 & (1 << v.0) != 0
    }

    pub fn with(self, v: VariableId) -> Self {
        VarSet(self.0 | (1 << v.0))
    }

    pub fn without(self, v: VariableId) -> Self {
        VarSet(self.0 & !(1 << v.0))
    }

    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Least member, if any.
    pub fn first(self) -> Option<VariableId> {
        (self.0 != 0).then(|| VariableId(self.0.trailing_zeros() as u8))
    }

    /// Members in increasing index order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_indices(self) -> Vec<usize> {
        self.iter().map(VariableId::index).collect()
    }

    /// Every subset of `self`, in increasing bitmask order (starting with the
    /// empty set, ending with `self`).
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Every subset of `self` ordered by cardinality, then lexicographically
    /// by the sorted member indices.
    pub fn subsets_by_size(self) -> impl Iterator<Item = VarSet> {
        use itertools::Itertools;
        let members: Vec<VariableId> = self.iter().collect();
        (0..=members.len()).flat_map(move |k| {
            members
                .clone()
                .into_iter()
                .combinations(k)
                .map(|c| c.into_iter().collect::<VarSet>())
        })
    }

    /// Re-index a set expressed over the sub-universe `kept` (where index `i`
    /// stands for the `i`-th member of `kept`) into the full universe.
    pub fn expand(self, kept: VarSet) -> VarSet {
        let members: Vec<VariableId> = kept.iter().collect();
        self.iter().map(|v| members[v.index()]).collect()
    }

    /// Inverse of [`VarSet::expand`]. Members outside `kept` are dropped.
    pub fn compress(self, kept: VarSet) -> VarSet {
        kept.iter()
            .enumerate()
            .filter(|(_, v)| self.contains(*v))
            .map(|(i, _)| VariableId::new(i))
            .collect()
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

impl FromIterator<VariableId> for VarSet {
    fn from_iter<I: IntoIterator<Item = VariableId>>(iter: I) -> Self {
        iter.into_iter().fold(VarSet::EMPTY, VarSet::with)
    }
}

impl BitOr for VarSet {
    type Output = VarSet;
    fn bitor(self, rhs: VarSet) -> VarSet {
        self.union(rhs)
    }
}

impl BitAnd for VarSet {
    type Output = VarSet;
    fn bitand(self, rhs: VarSet) -> VarSet {
        self.intersection(rhs)
    }
}

impl Sub for VarSet {
    type Output = VarSet;
    fn sub(self, rhs: VarSet) -> VarSet {
        self.difference(rhs)
    }
}

impl Not for VarSet {
    type Output = VarSet;
    fn not(self) -> VarSet {
        VarSet(!self.0)
    }
}

pub struct Members(u32);

impl Iterator for Members {
    type Item = VariableId;

    fn next(&mut self) -> Option<VariableId> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(VariableId(i as u8))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Submask enumeration in increasing order.
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = VarSet;

    fn next(&mut self) -> Option<VarSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next submask in increasing numeric order
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(VarSet(cur))
    }
}

/// The ordered list of variable names a model is defined over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    names: Vec<String>,
}

impl Universe {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARIABLES {
            return Err(Error::Capacity {
                what: "universe size",
                requested: names.len(),
                limit: MAX_VARIABLES,
            });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::input("empty variable name"));
            }
            if names[..i].contains(name) {
                return Err(Error::input(format!("duplicate variable name `{name}`")));
            }
        }
        Ok(Universe { names })
    }

    /// `a, b, c, ...` for `n <= 26`, `v1, v2, ...` beyond that.
    pub fn letters(n: usize) -> Result<Self> {
        if n <= 26 {
            Universe::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
        } else {
            Universe::new((1..=n).map(|i| format!("v{i}")))
        }
    }

    /// `x1, x2, ..., xn`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self> {
        Universe::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VariableId) -> &str {
        &self.names[v.index()]
    }

    pub fn ids(&self) -> impl Iterator<Item = VariableId> {
        (0..self.names.len()).map(VariableId::new)
    }

    pub fn all(&self) -> VarSet {
        VarSet::full(self.names.len())
    }

    pub fn id(&self, name: &str) -> Result<VariableId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(VariableId::new)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn set<S: AsRef<str>>(&self, names: &[S]) -> Result<VarSet> {
        names.iter().map(|n| self.id(n.as_ref())).collect()
    }

    pub fn set_names(&self, set: VarSet) -> Vec<String> {
        set.iter().map(|v| self.names[v.index()].clone()).collect()
    }

    /// `{a,b}` style rendering.
    pub fn format_set(&self, set: VarSet) -> String {
        format!("{{{}}}", self.set_names(set).join(","))
    }

    pub fn check_set(&self, set: VarSet) -> Result<()> {
        if set.is_subset(self.all()) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "variable set {set:?} exceeds universe of {} variables",
                self.len()
            )))
        }
    }

    /// The universe restricted to `kept`, re-indexed densely.
    pub fn restrict(&self, kept: VarSet) -> Universe {
        Universe {
            names: self.set_names(kept),
        }
    }
}
