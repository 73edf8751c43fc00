//! Total independence, total uncoupledness and total disconnectedness of
//! pairs and sets, plus the model-level properties built on them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphoid::IndependenceOracle;
use crate::network::BeliefNetwork;
use crate::triplet::Triplet;
use crate::varset::{Universe, VarSet, VariableId};

/// Default universe bound for the partition scan behind uncoupledness.
pub const DEFAULT_PARTITION_CAP: usize = 12;

fn check_pair(universe: &Universe, a: VariableId, b: VariableId) -> Result<()> {
    if a == b {
        return Err(Error::input("the two variables must differ"));
    }
    universe.check_set(VarSet::singleton(a).with(b))
}

fn check_sets(universe: &Universe, a: VarSet, b: VarSet) -> Result<()> {
    if a.is_empty() || b.is_empty() || !a.is_disjoint(b) {
        return Err(Error::input("sets must be nonempty and disjoint"));
    }
    universe.check_set(a | b)
}

/// `(A, B; Z)` holds for every `Z` outside `A ∪ B`.
pub fn totally_independent_sets<O: IndependenceOracle + ?Sized>(oracle: &O, a: VarSet, b: VarSet) -> Result<bool> {
    check_sets(oracle.universe(), a, b)?;
    let rest = oracle.universe().all() - a - b;
    Ok(rest.subsets().all(|z| oracle.independent(&Triplet::raw(a, b, z))))
}

pub fn totally_independent_pair<O: IndependenceOracle + ?Sized>(
    oracle: &O,
    a: VariableId,
    b: VariableId,
) -> Result<bool> {
    check_pair(oracle.universe(), a, b)?;
    totally_independent_sets(oracle, VarSet::singleton(a), VarSet::singleton(b))
}

/// Negation of total independence.
pub fn interact<O: IndependenceOracle + ?Sized>(oracle: &O, a: VariableId, b: VariableId) -> Result<bool> {
    totally_independent_pair(oracle, a, b).map(|t| !t)
}

/// First partition `U₁ ⊇ A`, `U₂ ⊇ B` of the universe with `(U₁, U₂; ∅)`,
/// scanning the remaining variables assigned to `U₁` in increasing bitmask
/// order.
pub fn totally_uncoupled_sets<O: IndependenceOracle + ?Sized>(
    oracle: &O,
    a: VarSet,
    b: VarSet,
    cap: usize,
) -> Result<Option<(VarSet, VarSet)>> {
    let universe = oracle.universe();
    check_sets(universe, a, b)?;
    if universe.len() > cap {
        return Err(Error::Capacity {
            what: "partition scan universe",
            requested: universe.len(),
            limit: cap,
        });
    }
    let all = universe.all();
    let rest = all - a - b;
    Ok(rest.subsets().find_map(|s| {
        let u1 = a | s;
        let u2 = all - u1;
        oracle
            .independent(&Triplet::raw(u1, u2, VarSet::EMPTY))
            .then_some((u1, u2))
    }))
}

pub fn totally_uncoupled_pair<O: IndependenceOracle + ?Sized>(
    oracle: &O,
    a: VariableId,
    b: VariableId,
    cap: usize,
) -> Result<Option<(VarSet, VarSet)>> {
    check_pair(oracle.universe(), a, b)?;
    totally_uncoupled_sets(oracle, VarSet::singleton(a), VarSet::singleton(b), cap)
}

/// Ordering with `a` first, `b` second and the rest in universe order.
pub fn pair_ordering(universe: &Universe, a: VariableId, b: VariableId) -> Vec<VariableId> {
    [a, b]
        .into_iter()
        .chain(universe.ids().filter(|&v| v != a && v != b))
        .collect()
}

/// Builds one network under [`pair_ordering`] and reports whether `a` and
/// `b` end up in different components. Disconnection in one network implies
/// disconnection in every network of a graphoid, so one ordering suffices.
pub fn totally_disconnected_pair<O: IndependenceOracle + ?Sized>(
    oracle: &O,
    a: VariableId,
    b: VariableId,
) -> Result<(bool, BeliefNetwork)> {
    check_pair(oracle.universe(), a, b)?;
    let net = BeliefNetwork::build(oracle, &pair_ordering(oracle.universe(), a, b))?;
    Ok((!net.connected(a, b), net))
}

#[derive(Clone, Debug)]
pub struct PairVerdict {
    pub a: VariableId,
    pub b: VariableId,
    pub totally_independent: bool,
    pub uncoupling: Option<(VarSet, VarSet)>,
    pub totally_disconnected: bool,
    pub network: BeliefNetwork,
}

impl PairVerdict {
    pub fn compute<O: IndependenceOracle + ?Sized>(
        oracle: &O,
        a: VariableId,
        b: VariableId,
        cap: usize,
    ) -> Result<Self> {
        let totally_independent = totally_independent_pair(oracle, a, b)?;
        let uncoupling = totally_uncoupled_pair(oracle, a, b, cap)?;
        let (totally_disconnected, network) = totally_disconnected_pair(oracle, a, b)?;
        Ok(PairVerdict {
            a,
            b,
            totally_independent,
            uncoupling,
            totally_disconnected,
            network,
        })
    }

    pub fn totally_uncoupled(&self) -> bool {
        self.uncoupling.is_some()
    }

    pub fn interact(&self) -> bool {
        !self.totally_independent
    }

    /// Uncoupledness agrees with disconnectedness and implies independence.
    pub fn consistent(&self) -> bool {
        self.totally_uncoupled() == self.totally_disconnected && (!self.totally_uncoupled() || self.totally_independent)
    }

    pub fn to_json(&self, universe: &Universe) -> PairVerdictJson {
        PairVerdictJson {
            a: universe.name(self.a).to_string(),
            b: universe.name(self.b).to_string(),
            totally_independent: self.totally_independent,
            interact: self.interact(),
            totally_uncoupled: self.totally_uncoupled(),
            witness: self.uncoupling.map(|(u1, u2)| WitnessJson {
                u1: universe.set_names(u1),
                u2: universe.set_names(u2),
            }),
            totally_disconnected: self.totally_disconnected,
            network_edges: self
                .network
                .edges()
                .iter()
                .map(|e| format!("{}->{}", universe.name(e.from), universe.name(e.to)))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    #[serde(rename = "U1")]
    pub u1: Vec<String>,
    #[serde(rename = "U2")]
    pub u2: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairVerdictJson {
    pub a: String,
    pub b: String,
    pub totally_independent: bool,
    pub interact: bool,
    pub totally_uncoupled: bool,
    pub witness: Option<WitnessJson>,
    pub totally_disconnected: bool,
    pub network_edges: Vec<String>,
}

/// Pairs `(a, b)` with `a < b` in universe order.
pub fn pairs(universe: &Universe) -> Vec<(VariableId, VariableId)> {
    let ids: Vec<VariableId> = universe.ids().collect();
    ids.iter()
        .enumerate()
        .flat_map(|(i, &a)| ids[i + 1..].iter().map(move |&b| (a, b)))
        .collect()
}

/// Symmetric interaction matrix indexed by variable index.
pub fn interaction_matrix<O: IndependenceOracle + ?Sized>(oracle: &O) -> Vec<Vec<bool>> {
    let n = oracle.universe().len();
    let mut m = vec![vec![false; n]; n];
    for (a, b) in pairs(oracle.universe()) {
        let i = interact(oracle, a, b).expect("pair is valid");
        m[a.index()][b.index()] = i;
        m[b.index()][a.index()] = i;
    }
    m
}

/// First ordered triple `(a, b, c)` of distinct variables, in lex order of
/// indices, where `a` interacts with `b`, `b` with `c`, but `a` not with `c`.
pub fn transitivity_violation<O: IndependenceOracle + ?Sized>(
    oracle: &O,
) -> Option<(VariableId, VariableId, VariableId)> {
    let m = interaction_matrix(oracle);
    let ids: Vec<VariableId> = oracle.universe().ids().collect();
    for &a in &ids {
        for &b in &ids {
            for &c in &ids {
                if a == b || b == c || a == c {
                    continue;
                }
                let (i, j, k) = (a.index(), b.index(), c.index());
                if m[i][j] && m[j][k] && !m[i][k] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn is_transitive<O: IndependenceOracle + ?Sized>(oracle: &O) -> bool {
    transitivity_violation(oracle).is_none()
}

/// First pair `a < b` that is totally independent but not totally uncoupled.
pub fn separability_violation<O: IndependenceOracle + ?Sized>(
    oracle: &O,
    cap: usize,
) -> Result<Option<(VariableId, VariableId)>> {
    for (a, b) in pairs(oracle.universe()) {
        if totally_independent_pair(oracle, a, b)? && totally_uncoupled_pair(oracle, a, b, cap)?.is_none() {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

pub fn is_separable<O: IndependenceOracle + ?Sized>(oracle: &O, cap: usize) -> Result<bool> {
    separability_violation(oracle, cap).map(|v| v.is_none())
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub variables: Vec<String>,
    pub pairs: Vec<PairVerdictJson>,
    pub transitive: bool,
    pub transitivity_counterexample: Option<[String; 3]>,
    pub separable: bool,
    pub separability_counterexample: Option<[String; 2]>,
}

/// Verdicts for every pair plus transitivity and separability.
pub fn verdict_report<O: IndependenceOracle + ?Sized>(oracle: &O, cap: usize) -> Result<VerdictReport> {
    let u = oracle.universe();
    let verdicts = pairs(u)
        .into_iter()
        .map(|(a, b)| PairVerdict::compute(oracle, a, b, cap))
        .collect::<Result<Vec<_>>>()?;
    let trans = transitivity_violation(oracle);
    let sep = separability_violation(oracle, cap)?;
    let name = |v: VariableId| u.name(v).to_string();
    Ok(VerdictReport {
        variables: u.names().to_vec(),
        pairs: verdicts.iter().map(|v| v.to_json(u)).collect(),
        transitive: trans.is_none(),
        transitivity_counterexample: trans.map(|(a, b, c)| [name(a), name(b), name(c)]),
        separable: sep.is_none(),
        separability_counterexample: sep.map(|(a, b)| [name(a), name(b)]),
    })
}
