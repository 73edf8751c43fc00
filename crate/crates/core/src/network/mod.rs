//! Belief networks built from an independence oracle and a total ordering.
//!
//! Each variable receives a minimal set of predecessors `π(u)` such that
//! `(u, predecessors ∖ π(u); π(u))` holds, and an edge from every member of
//! `π(u)` to `u`.

mod dot;
mod dsep;
mod trails;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphoid::IndependenceOracle;
use crate::triplet::Triplet;
use crate::varset::{Universe, VarSet, VariableId};

pub(crate) use dot::render as render_dot;
pub use trails::{Edge, Trail, DEFAULT_TRAIL_CAP};

/// Which minimal predecessor set to pick when several qualify.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ParentChoice {
    /// First set by increasing cardinality, then lexicographic order. Minimum
    /// cardinality implies inclusion-minimality.
    #[default]
    Smallest,
    /// Last inclusion-minimal qualifying set in the same enumeration. Exists
    /// to audit that the choice does not affect connectivity.
    LastMinimal,
}

/// First qualifying subset of `predecessors`, by cardinality then lex order.
///
/// Never fails: `π = predecessors` leaves an empty remainder, which is an
/// instance of trivial independence.
pub fn minimal_parents<O: IndependenceOracle + ?Sized>(oracle: &O, u: VariableId, predecessors: VarSet) -> VarSet {
    assert!(!predecessors.contains(u), "a variable cannot precede itself");
    let single = VarSet::singleton(u);
    predecessors
        .subsets_by_size()
        .find(|pi| oracle.independent(&Triplet::raw(single, predecessors - *pi, *pi)))
        .unwrap_or(predecessors)
}

/// Every inclusion-minimal qualifying subset, in cardinality-then-lex order.
pub fn minimal_parent_sets<O: IndependenceOracle + ?Sized>(
    oracle: &O,
    u: VariableId,
    predecessors: VarSet,
) -> Vec<VarSet> {
    let single = VarSet::singleton(u);
    let mut found: Vec<VarSet> = Vec::new();
    for pi in predecessors.subsets_by_size() {
        if found.iter().any(|f| f.is_subset(pi)) {
            continue;
        }
        if oracle.independent(&Triplet::raw(single, predecessors - pi, pi)) {
            found.push(pi);
        }
    }
    found
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeliefNetwork {
    universe: Universe,
    ordering: Vec<VariableId>,
    parents: Vec<VarSet>,
}

impl BeliefNetwork {
    /// Validates that `ordering` is a permutation and every parent precedes
    /// its child.
    pub fn from_parts(universe: Universe, ordering: Vec<VariableId>, parents: Vec<VarSet>) -> Result<Self> {
        check_ordering(&universe, &ordering)?;
        if parents.len() != universe.len() {
            return Err(Error::input("one parent set per variable is required"));
        }
        let mut before = VarSet::EMPTY;
        for &v in &ordering {
            if !parents[v.index()].is_subset(before) {
                return Err(Error::input(format!(
                    "parents of `{}` must precede it in the ordering",
                    universe.name(v)
                )));
            }
            before = before.with(v);
        }
        Ok(BeliefNetwork {
            universe,
            ordering,
            parents,
        })
    }

    pub fn build<O: IndependenceOracle + ?Sized>(oracle: &O, ordering: &[VariableId]) -> Result<Self> {
        BeliefNetwork::build_with(oracle, ordering, ParentChoice::Smallest)
    }

    pub fn build_with<O: IndependenceOracle + ?Sized>(
        oracle: &O,
        ordering: &[VariableId],
        choice: ParentChoice,
    ) -> Result<Self> {
        let universe = oracle.universe().clone();
        check_ordering(&universe, ordering)?;
        let mut parents = vec![VarSet::EMPTY; universe.len()];
        let mut before = VarSet::EMPTY;
        for &u in ordering {
            parents[u.index()] = match choice {
                ParentChoice::Smallest => minimal_parents(oracle, u, before),
                ParentChoice::LastMinimal => *minimal_parent_sets(oracle, u, before)
                    .last()
                    .expect("the full predecessor set always qualifies"),
            };
            before = before.with(u);
        }
        Ok(BeliefNetwork {
            universe,
            ordering: ordering.to_vec(),
            parents,
        })
    }

    /// Build under the universe order.
    pub fn build_default<O: IndependenceOracle + ?Sized>(oracle: &O) -> Result<Self> {
        let ordering: Vec<VariableId> = oracle.universe().ids().collect();
        BeliefNetwork::build(oracle, &ordering)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn ordering(&self) -> &[VariableId] {
        &self.ordering
    }

    pub fn parents(&self, v: VariableId) -> VarSet {
        self.parents[v.index()]
    }

    pub fn children(&self, v: VariableId) -> VarSet {
        self.universe
            .ids()
            .filter(|&c| self.parents[c.index()].contains(v))
            .collect()
    }

    /// `(parent, child)` pairs sorted by parent index, then child index.
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = self
            .universe
            .ids()
            .flat_map(|c| self.parents[c.index()].iter().map(move |p| Edge { from: p, to: c }))
            .collect();
        edges.sort();
        edges
    }

    pub fn neighbors(&self, v: VariableId) -> VarSet {
        self.parents(v) | self.children(v)
    }

    /// Proper descendants of `v`.
    pub fn descendants(&self, v: VariableId) -> VarSet {
        let mut seen = VarSet::EMPTY;
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for c in self.children(u).iter() {
                if !seen.contains(c) {
                    seen = seen.with(c);
                    stack.push(c);
                }
            }
        }
        seen
    }

    /// `set` together with all of its ancestors.
    pub fn ancestral_closure(&self, set: VarSet) -> VarSet {
        let mut seen = set;
        let mut stack: Vec<VariableId> = set.iter().collect();
        while let Some(u) = stack.pop() {
            for p in self.parents(u).iter() {
                if !seen.contains(p) {
                    seen = seen.with(p);
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Maximal connected components of the underlying undirected graph,
    /// ordered by least member.
    pub fn connected_components(&self) -> Vec<VarSet> {
        let mut remaining = self.universe.all();
        let mut components = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VarSet::singleton(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u).iter() {
                    if !comp.contains(w) {
                        comp = comp.with(w);
                        stack.push(w);
                    }
                }
            }
            remaining = remaining - comp;
            components.push(comp);
        }
        components
    }

    pub fn component_of(&self, v: VariableId) -> VarSet {
        self.connected_components()
            .into_iter()
            .find(|c| c.contains(v))
            .expect("every node lies in a component")
    }

    pub fn connected(&self, a: VariableId, b: VariableId) -> bool {
        self.component_of(a).contains(b)
    }

    /// Checks both defining conditions against `oracle`: each variable is
    /// independent of its other predecessors given its parents, and no proper
    /// subset of its parents would do. Returns the first offending variable.
    pub fn verify<O: IndependenceOracle + ?Sized>(&self, oracle: &O) -> Option<VariableId> {
        let mut before = VarSet::EMPTY;
        for &u in &self.ordering {
            let pi = self.parents[u.index()];
            let single = VarSet::singleton(u);
            if !oracle.independent(&Triplet::raw(single, before - pi, pi)) {
                return Some(u);
            }
            let smaller_works = pi
                .subsets()
                .filter(|s| *s != pi)
                .any(|s| oracle.independent(&Triplet::raw(single, before - s, s)));
            if smaller_works {
                return Some(u);
            }
            before = before.with(u);
        }
        None
    }

    pub fn to_file(&self) -> NetworkFile {
        NetworkFile {
            variables: self.universe.names().to_vec(),
            ordering: self
                .ordering
                .iter()
                .map(|&v| self.universe.name(v).to_string())
                .collect(),
            parents: self
                .universe
                .ids()
                .map(|v| {
                    (
                        self.universe.name(v).to_string(),
                        self.universe.set_names(self.parents[v.index()]),
                    )
                })
                .collect(),
        }
    }

    pub fn from_file(file: &NetworkFile) -> Result<Self> {
        let universe = Universe::new(file.variables.iter().cloned())?;
        let ordering = file
            .ordering
            .iter()
            .map(|n| universe.id(n))
            .collect::<Result<Vec<_>>>()?;
        let mut parents = vec![VarSet::EMPTY; universe.len()];
        for (child, ps) in &file.parents {
            parents[universe.id(child)?.index()] = universe.set(ps)?;
        }
        BeliefNetwork::from_parts(universe, ordering, parents)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("network serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        BeliefNetwork::from_file(&serde_json::from_str(text)?)
    }
}

/// d-separation as an independence oracle.
impl IndependenceOracle for BeliefNetwork {
    fn universe(&self) -> &Universe {
        &self.universe
    }

    fn independent(&self, t: &Triplet) -> bool {
        self.d_separated_unchecked(t.x(), t.y(), t.z())
    }
}

pub fn check_ordering(universe: &Universe, ordering: &[VariableId]) -> Result<()> {
    let mut seen = VarSet::EMPTY;
    for &v in ordering {
        if v.index() >= universe.len() || seen.contains(v) {
            return Err(Error::input("ordering is not a permutation of the variables"));
        }
        seen = seen.with(v);
    }
    if seen != universe.all() {
        return Err(Error::input("ordering is not a permutation of the variables"));
    }
    Ok(())
}

/// Parses a comma-separated list of names into an ordering.
pub fn parse_ordering(universe: &Universe, spec: &str) -> Result<Vec<VariableId>> {
    let ordering = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|n| universe.id(n))
        .collect::<Result<Vec<_>>>()?;
    check_ordering(universe, &ordering)?;
    Ok(ordering)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkFile {
    pub variables: Vec<String>,
    pub ordering: Vec<String>,
    pub parents: BTreeMap<String, Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{named_example, NamedExample};
    use crate::graphoid::{DependencyModel, DEFAULT_CLOSURE_CAP};

    fn m1() -> DependencyModel {
        let u = Universe::letters(4).unwrap();
        let t = Triplet::new(u.set(&["a", "b"]).unwrap(), u.set(&["c", "d"]).unwrap(), VarSet::EMPTY).unwrap();
        DependencyModel::from_statements(u, [t])
            .unwrap()
            .close(DEFAULT_CLOSURE_CAP)
            .unwrap()
    }

    fn edge_names(net: &BeliefNetwork) -> Vec<String> {
        net.edges()
            .iter()
            .map(|e| format!("{}->{}", net.universe().name(e.from), net.universe().name(e.to)))
            .collect()
    }

    #[test]
    fn m1_minimal_parents_of_d() {
        let m = m1();
        let u = m.universe();
        let pi = minimal_parents(&m, u.id("d").unwrap(), u.set(&["a", "b", "c"]).unwrap());
        assert_eq!(pi, u.set(&["c"]).unwrap());
        assert_eq!(minimal_parents(&m, u.id("a").unwrap(), VarSet::EMPTY), VarSet::EMPTY);
    }

    #[test]
    fn parity_minimal_parents_of_c() {
        let p = named_example(NamedExample::Parity).unwrap();
        let u = p.universe();
        let pi = minimal_parents(&p, u.id("c").unwrap(), u.set(&["a", "b"]).unwrap());
        assert_eq!(pi, u.set(&["a", "b"]).unwrap());
    }

    #[test]
    fn m1_networks_in_both_orders() {
        let m = m1();
        let fwd = BeliefNetwork::build(&m, &parse_ordering(m.universe(), "a,b,c,d").unwrap()).unwrap();
        assert_eq!(edge_names(&fwd), ["a->b", "c->d"]);
        let rev = BeliefNetwork::build(&m, &parse_ordering(m.universe(), "d,c,b,a").unwrap()).unwrap();
        assert_eq!(edge_names(&rev), ["b->a", "d->c"]);
        assert_eq!(fwd.verify(&m), None);
        let comps: Vec<Vec<String>> = fwd
            .connected_components()
            .into_iter()
            .map(|c| m.universe().set_names(c))
            .collect();
        assert_eq!(comps, [["a", "b"], ["c", "d"]]);
    }

    #[test]
    fn parity_network_is_a_collider() {
        let p = named_example(NamedExample::Parity).unwrap();
        let net = BeliefNetwork::build_default(&p).unwrap();
        assert_eq!(edge_names(&net), ["a->c", "b->c"]);
        assert_eq!(net.connected_components(), vec![net.universe().all()]);
    }

    #[test]
    fn edgeless_network_components_are_singletons() {
        let u = Universe::letters(2).unwrap();
        let net = BeliefNetwork::from_parts(u.clone(), u.ids().collect(), vec![VarSet::EMPTY; 2]).unwrap();
        assert_eq!(
            net.connected_components(),
            vec![VarSet::from_indices([0]), VarSet::from_indices([1])]
        );
    }

    #[test]
    fn orderings_must_be_permutations() {
        let m = m1();
        let u = m.universe();
        assert!(parse_ordering(u, "a,b,c").is_err());
        assert!(parse_ordering(u, "a,b,c,c").is_err());
        let bad = vec![u.id("a").unwrap(); 4];
        assert!(matches!(BeliefNetwork::build(&m, &bad), Err(Error::Input(_))));
    }

    #[test]
    fn network_json_round_trip() {
        let m = m1();
        let net = BeliefNetwork::build_default(&m).unwrap();
        let back = BeliefNetwork::from_json(&net.to_json()).unwrap();
        assert_eq!(back, net);
        let cyclic = r#"{"variables":["a","b"],"ordering":["a","b"],"parents":{"a":["b"]}}"#;
        assert!(BeliefNetwork::from_json(cyclic).is_err());
    }
}
