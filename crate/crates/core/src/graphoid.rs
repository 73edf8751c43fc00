//! Dependency models and their closure under the graphoid axioms.
//!
//! The axioms, for disjoint `X, Y, W, Z`:
//!
//! * trivial independence: `I(X, ∅; Z)`
//! * symmetry: `I(X, Y; Z) ⇒ I(Y, X; Z)`
//! * decomposition: `I(X, Y ∪ W; Z) ⇒ I(X, Y; Z)`
//! * weak union: `I(X, Y ∪ W; Z) ⇒ I(X, Y; Z ∪ W)`
//! * contraction: `I(X, Y; Z) & I(X, W; Z ∪ Y) ⇒ I(X, Y ∪ W; Z)`
//!
//! Statements are stored in canonical form, which makes symmetry structural.
//! Trivial statements are never stored; membership queries report them as
//! present. Neither choice changes the closure: a contraction with a trivial
//! premise only reproduces its other premise.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::triplet::{Triplet, TripletJson};
use crate::varset::{Universe, VarSet};

/// Default bound on the universe size accepted by [`DependencyModel::close`].
pub const DEFAULT_CLOSURE_CAP: usize = 10;

/// Anything that can answer "is `(X, Y; Z)` a member?".
///
/// Answers must be deterministic. Implementations may assume the triplet's
/// variables lie in [`IndependenceOracle::universe`].
pub trait IndependenceOracle {
    fn universe(&self) -> &Universe;

    fn independent(&self, t: &Triplet) -> bool;

    fn independent_sets(&self, x: VarSet, y: VarSet, z: VarSet) -> Result<bool> {
        let t = Triplet::new(x, y, z)?;
        self.universe().check_set(t.variables())?;
        Ok(self.independent(&t))
    }
}

impl<O: IndependenceOracle + ?Sized> IndependenceOracle for &O {
    fn universe(&self) -> &Universe {
        (**self).universe()
    }

    fn independent(&self, t: &Triplet) -> bool {
        (**self).independent(t)
    }
}

/// Remembers every answer of a symmetric oracle, keyed by normalized triplet.
pub struct CachedOracle<'a, O: ?Sized> {
    inner: &'a O,
    cache: RefCell<HashMap<Triplet, bool>>,
}

impl<'a, O: IndependenceOracle + ?Sized> CachedOracle<'a, O> {
    pub fn new(inner: &'a O) -> Self {
        CachedOracle {
            inner,
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// Distinct queries forwarded so far.
    pub fn misses(&self) -> usize {
        self.cache.borrow().len()
    }
}

impl<O: IndependenceOracle + ?Sized> IndependenceOracle for CachedOracle<'_, O> {
    fn universe(&self) -> &Universe {
        self.inner.universe()
    }

    fn independent(&self, t: &Triplet) -> bool {
        if t.is_trivial() {
            return true;
        }
        let key = t.normalize();
        if let Some(&hit) = self.cache.borrow().get(&key) {
            return hit;
        }
        let answer = self.inner.independent(&key);
        self.cache.borrow_mut().insert(key, answer);
        answer
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    TrivialIndependence,
    Symmetry,
    Decomposition,
    WeakUnion,
    Contraction,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::TrivialIndependence => "trivial independence",
            Axiom::Symmetry => "symmetry",
            Axiom::Decomposition => "decomposition",
            Axiom::WeakUnion => "weak union",
            Axiom::Contraction => "contraction",
        };
        f.write_str(name)
    }
}

/// A single axiom application whose conclusion is missing from the model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureViolation {
    pub axiom: Axiom,
    pub premises: Vec<Triplet>,
    pub missing: Triplet,
}

impl ClosureViolation {
    pub fn to_json(&self, universe: &Universe) -> serde_json::Value {
        serde_json::json!({
            "axiom": self.axiom,
            "premises": self.premises.iter().map(|t| t.to_json(universe)).collect::<Vec<_>>(),
            "missing": self.missing.to_json(universe),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureCheck {
    Closed,
    Violated(ClosureViolation),
}

impl ClosureCheck {
    pub fn is_closed(&self) -> bool {
        matches!(self, ClosureCheck::Closed)
    }
}

/// A set of independence statements over a finite universe.
#[derive(Clone, Debug)]
pub struct DependencyModel {
    universe: Universe,
    statements: HashSet<Triplet>,
    closed: bool,
}

impl DependencyModel {
    pub fn new(universe: Universe) -> Self {
        DependencyModel {
            universe,
            statements: HashSet::new(),
            closed: false,
        }
    }

    pub fn from_statements(universe: Universe, statements: impl IntoIterator<Item = Triplet>) -> Result<Self> {
        let mut m = DependencyModel::new(universe);
        for t in statements {
            m.insert(t)?;
        }
        Ok(m)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Adds a statement. Returns whether it was new. Clears the closed flag
    /// when the model changes.
    pub fn insert(&mut self, t: Triplet) -> Result<bool> {
        self.universe.check_set(t.variables())?;
        let t = t.normalize();
        if t.is_trivial() {
            return Ok(false);
        }
        let added = self.statements.insert(t);
        if added {
            self.closed = false;
        }
        Ok(added)
    }

    pub fn contains(&self, t: &Triplet) -> bool {
        t.is_trivial() || self.statements.contains(&t.normalize())
    }

    /// Stored (non-trivial, canonical) statements in sorted order.
    pub fn statements(&self) -> Vec<Triplet> {
        let mut v: Vec<Triplet> = self.statements.iter().copied().collect();
        v.sort();
        v
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }

    /// Whether closure has been computed or verified for the current
    /// statement set.
    pub fn closed_flag(&self) -> bool {
        self.closed
    }

    /// Sets the flag after checking the model really is closed.
    pub fn mark_if_closed(&mut self) -> bool {
        self.closed = self.check_closed().is_closed();
        self.closed
    }

    /// Least superset closed under the graphoid axioms.
    pub fn close(&self, cap: usize) -> Result<DependencyModel> {
        if self.universe.len() > cap {
            return Err(Error::Capacity {
                what: "closure universe",
                requested: self.universe.len(),
                limit: cap,
            });
        }
        if self.closed {
            return Ok(self.clone());
        }
        let all = self.universe.all();
        let mut known = self.statements.clone();
        let mut queue: VecDeque<Triplet> = self.statements().into();

        let add = |t: Triplet, known: &mut HashSet<Triplet>, queue: &mut VecDeque<Triplet>| {
            let t = t.normalize();
            if !t.is_trivial() && known.insert(t) {
                queue.push_back(t);
            }
        };

        while let Some(t) = queue.pop_front() {
            for o in t.orientations() {
                let (x, y, z) = (o.x(), o.y(), o.z());
                // decomposition and weak union over every nonempty proper W ⊂ Y
                for keep in y.subsets() {
                    if keep.is_empty() || keep == y {
                        continue;
                    }
                    let w = y - keep;
                    add(Triplet::raw(x, keep, z), &mut known, &mut queue);
                    add(Triplet::raw(x, keep, z | w), &mut known, &mut queue);
                }
                // contraction with `o` as the first premise I(X, Y; Z)
                let free = all - (x | y | z);
                for w in free.subsets().skip(1) {
                    if contains_in(&known, Triplet::raw(x, w, z | y)) {
                        add(Triplet::raw(x, y | w, z), &mut known, &mut queue);
                    }
                }
                // contraction with `o` as the second premise I(X, W; Z' ∪ Y')
                for y0 in z.subsets().skip(1) {
                    let z0 = z - y0;
                    if contains_in(&known, Triplet::raw(x, y0, z0)) {
                        add(Triplet::raw(x, y0 | y, z0), &mut known, &mut queue);
                    }
                }
            }
        }

        Ok(DependencyModel {
            universe: self.universe.clone(),
            statements: known,
            closed: true,
        })
    }

    /// Checks every single application of the axioms to stored statements.
    ///
    /// Trivial independence and symmetry hold structurally, so a violation is
    /// always of decomposition, weak union or contraction. Statements are
    /// visited in sorted order, so the reported witness is deterministic.
    pub fn check_closed(&self) -> ClosureCheck {
        let all = self.universe.all();
        for t in self.statements() {
            for o in t.orientations() {
                let (x, y, z) = (o.x(), o.y(), o.z());
                for keep in y.subsets() {
                    if keep.is_empty() || keep == y {
                        continue;
                    }
                    let w = y - keep;
                    let dec = Triplet::raw(x, keep, z);
                    if !self.contains(&dec) {
                        return ClosureCheck::Violated(ClosureViolation {
                            axiom: Axiom::Decomposition,
                            premises: vec![o],
                            missing: dec,
                        });
                    }
                    let wu = Triplet::raw(x, keep, z | w);
                    if !self.contains(&wu) {
                        return ClosureCheck::Violated(ClosureViolation {
                            axiom: Axiom::WeakUnion,
                            premises: vec![o],
                            missing: wu,
                        });
                    }
                }
                let free = all - (x | y | z);
                for w in free.subsets().skip(1) {
                    let second = Triplet::raw(x, w, z | y);
                    if self.contains(&second) {
                        let conclusion = Triplet::raw(x, y | w, z);
                        if !self.contains(&conclusion) {
                            return ClosureCheck::Violated(ClosureViolation {
                                axiom: Axiom::Contraction,
                                premises: vec![o, second],
                                missing: conclusion,
                            });
                        }
                    }
                }
            }
        }
        ClosureCheck::Closed
    }

    pub fn to_file(&self) -> ModelFile {
        ModelFile {
            variables: self.universe.names().to_vec(),
            statements: self.statements().iter().map(|t| t.to_json(&self.universe)).collect(),
        }
    }

    pub fn from_file(file: &ModelFile) -> Result<Self> {
        let universe = Universe::new(file.variables.iter().cloned())?;
        let statements = file
            .statements
            .iter()
            .map(|s| s.resolve(&universe))
            .collect::<Result<Vec<_>>>()?;
        DependencyModel::from_statements(universe, statements)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModelFile = serde_json::from_str(text)?;
        DependencyModel::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("model serializes")
    }
}

fn contains_in(set: &HashSet<Triplet>, t: Triplet) -> bool {
    t.is_trivial() || set.contains(&t.normalize())
}

impl PartialEq for DependencyModel {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.statements == other.statements
    }
}

impl IndependenceOracle for DependencyModel {
    fn universe(&self) -> &Universe {
        &self.universe
    }

    fn independent(&self, t: &Triplet) -> bool {
        self.contains(t)
    }
}

/// Interchange format for explicit dependency models.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub variables: Vec<String>,
    #[serde(default)]
    pub statements: Vec<TripletJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m1_seed() -> DependencyModel {
        let u = Universe::letters(4).unwrap();
        let t = Triplet::new(u.set(&["a", "b"]).unwrap(), u.set(&["c", "d"]).unwrap(), VarSet::EMPTY).unwrap();
        DependencyModel::from_statements(u, [t]).unwrap()
    }

    fn stmt(m: &DependencyModel, x: &[&str], y: &[&str], z: &[&str]) -> Triplet {
        let u = m.universe();
        Triplet::new(u.set(x).unwrap(), u.set(y).unwrap(), u.set(z).unwrap()).unwrap()
    }

    #[test]
    fn m1_closure_contains_listed_statements() {
        let m = m1_seed().close(DEFAULT_CLOSURE_CAP).unwrap();
        for z in [&[][..], &["b"], &["d"], &["b", "d"]] {
            assert!(m.contains(&stmt(&m, &["a"], &["c"], z)), "I(a,c;{z:?})");
        }
        assert!(m.contains(&stmt(&m, &["d"], &["a", "b"], &["c"])));
        assert!(!m.contains(&stmt(&m, &["a"], &["b"], &[])));
        assert!(m.closed_flag());
        assert!(m.check_closed().is_closed());
    }

    #[test]
    fn empty_seed_closure_is_empty() {
        let u = Universe::letters(2).unwrap();
        let m = DependencyModel::new(u).close(DEFAULT_CLOSURE_CAP).unwrap();
        assert!(m.is_empty());
        // trivial statements are still members
        let t = Triplet::new(VarSet::from_indices([0]), VarSet::EMPTY, VarSet::from_indices([1])).unwrap();
        assert!(m.contains(&t));
        assert!(m.contains(&t.swap()));
    }

    #[test]
    fn decomposition_witness_for_unclosed_model() {
        let u = Universe::letters(3).unwrap();
        let t = Triplet::new(u.set(&["a"]).unwrap(), u.set(&["b", "c"]).unwrap(), VarSet::EMPTY).unwrap();
        let m = DependencyModel::from_statements(u, [t]).unwrap();
        match m.check_closed() {
            ClosureCheck::Violated(v) => {
                assert_eq!(v.axiom, Axiom::Decomposition);
                assert_eq!(v.missing, stmt(&m, &["a"], &["b"], &[]));
            }
            ClosureCheck::Closed => panic!("model is not closed"),
        }
        let mut single = m.clone();
        let ab = stmt(&m, &["a"], &["b"], &[]);
        single.insert(ab).unwrap();
        assert!(!single.check_closed().is_closed());
    }

    #[test]
    fn capacity_is_enforced() {
        let u = Universe::letters(11).unwrap();
        let err = DependencyModel::new(u).close(DEFAULT_CLOSURE_CAP).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
    }

    #[test]
    fn json_round_trip_and_unknown_variable() {
        let m = m1_seed().close(DEFAULT_CLOSURE_CAP).unwrap();
        let back = DependencyModel::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        let bad = r#"{"variables":["a","b"],"statements":[{"X":["a"],"Y":["q"],"Z":[]}]}"#;
        assert!(matches!(
            DependencyModel::from_json(bad),
            Err(Error::UnknownVariable(_))
        ));
    }
}
