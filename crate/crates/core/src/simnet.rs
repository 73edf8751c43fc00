//! Similarity networks: one local belief network per pair of similar
//! hypotheses, combined into a global network.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::distributions::{Assignment, TabularDistribution};
use crate::error::{Error, Result};
use crate::network::{check_ordering, render_dot, BeliefNetwork, Edge};
use crate::unrelatedness::totally_independent_pair;
use crate::varset::{Universe, VarSet, VariableId};

/// Default universe bound for the exhaustive discrimination scan.
pub const DEFAULT_SIMNET_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimilarityGraph {
    pub hypothesis: String,
    pub values: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// A similarity graph checked against a distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedGraph {
    pub h: VariableId,
    /// Pairs of domain indices, each with the smaller index first.
    pub pairs: Vec<(usize, usize)>,
}

impl SimilarityGraph {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    /// Checks that the hypothesis exists with exactly the listed values and
    /// that the edges connect all of them.
    pub fn resolve(&self, p: &TabularDistribution) -> Result<ResolvedGraph> {
        let h = p.universe().id(&self.hypothesis)?;
        let domain: BTreeSet<&str> = p.domain(h).iter().map(String::as_str).collect();
        let listed: BTreeSet<&str> = self.values.iter().map(String::as_str).collect();
        if domain != listed || listed.len() != self.values.len() {
            return Err(Error::input(format!(
                "values of `{}` must list its domain exactly once",
                self.hypothesis
            )));
        }
        let mut pairs = BTreeSet::new();
        for [x, y] in &self.edges {
            let (i, j) = (p.value_index(h, x)?, p.value_index(h, y)?);
            if i == j {
                return Err(Error::input(format!("similarity edge `{x}`–`{y}` is a loop")));
            }
            pairs.insert((i.min(j), i.max(j)));
        }
        let n = self.values.len();
        let mut reached = vec![false; n];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(v) = stack.pop() {
            for &(i, j) in &pairs {
                for (from, to) in [(i, j), (j, i)] {
                    if from == v && !reached[to] {
                        reached[to] = true;
                        stack.push(to);
                    }
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Err(Error::input("the similarity graph is not connected"));
        }
        Ok(ResolvedGraph {
            h,
            pairs: pairs.into_iter().collect(),
        })
    }
}

/// `h` first, then the other variables in universe order.
pub fn default_ordering(universe: &Universe, h: VariableId) -> Vec<VariableId> {
    std::iter::once(h).chain(universe.ids().filter(|&v| v != h)).collect()
}

#[derive(Clone, Debug)]
pub struct LocalNetwork {
    pub pair: (usize, usize),
    pub h: VariableId,
    pub network: BeliefNetwork,
    /// The distribution given `h ∈ {hᵢ, hⱼ}`.
    pub conditioned: TabularDistribution,
}

impl LocalNetwork {
    /// Variables connected to `h`.
    pub fn relevant_symptoms(&self) -> VarSet {
        self.network.component_of(self.h).without(self.h)
    }
}

/// Conditions `p` on `h` taking one of the two values and builds a network
/// under `ordering`, which must start with `h`.
pub fn build_local(
    p: &TabularDistribution,
    h: VariableId,
    pair: (usize, usize),
    ordering: &[VariableId],
) -> Result<LocalNetwork> {
    check_ordering(p.universe(), ordering)?;
    if ordering.first() != Some(&h) {
        return Err(Error::input("the ordering must start with the hypothesis"));
    }
    if pair.0 == pair.1 {
        return Err(Error::input("a similar pair needs two distinct values"));
    }
    let conditioned = p.restrict_domain(h, &[pair.0, pair.1])?;
    let network = BeliefNetwork::build(&conditioned, ordering)?;
    Ok(LocalNetwork {
        pair,
        h,
        network,
        conditioned,
    })
}

/// Both ways of deciding whether `s` helps tell `hᵢ` from `hⱼ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Discrimination {
    /// Some `Z = z` with both hypotheses possible gives different
    /// distributions of `s`.
    pub direct: bool,
    /// `s` and `h` interact once `h` is restricted to the two values.
    pub via_interaction: bool,
}

impl Discrimination {
    pub fn agree(&self) -> bool {
        self.direct == self.via_interaction
    }
}

pub fn discriminates(
    p: &TabularDistribution,
    s: VariableId,
    h: VariableId,
    pair: (usize, usize),
    cap: usize,
) -> Result<Discrimination> {
    let universe = p.universe();
    if s == h {
        return Err(Error::input("the symptom and hypothesis must differ"));
    }
    universe.check_set(VarSet::singleton(s).with(h))?;
    if universe.len() > cap {
        return Err(Error::Capacity {
            what: "discrimination scan universe",
            requested: universe.len(),
            limit: cap,
        });
    }
    let (hi, hj) = pair;
    let rest = universe.all() - VarSet::singleton(s).with(h);
    let mut direct = false;
    'scan: for z in rest.subsets() {
        for zv in p.assignments(z) {
            let with_h = |v: usize| zv.iter().chain([(h, v)]).collect::<Assignment>();
            let pi = p.probability(&with_h(hi))?;
            let pj = p.probability(&with_h(hj))?;
            if pi.is_zero() || pj.is_zero() {
                continue;
            }
            for sv in 0..p.domain(s).len() {
                let si = p.probability(&with_h(hi).with(s, sv))?;
                let sj = p.probability(&with_h(hj).with(s, sv))?;
                // P(s | hᵢ, z) ≠ P(s | hⱼ, z), cross-multiplied
                if &si * &pj != &sj * &pi {
                    direct = true;
                    break 'scan;
                }
            }
        }
    }
    let restricted = p.restrict_domain(h, &[hi, hj])?;
    let via_interaction = !totally_independent_pair(&restricted, s, h)?;
    Ok(Discrimination {
        direct,
        via_interaction,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalNetwork {
    pub universe: Universe,
    pub ordering: Vec<VariableId>,
    pub nodes: VarSet,
    pub edges: Vec<Edge>,
}

impl GlobalNetwork {
    /// True iff the edges admit a topological order of `nodes`.
    pub fn is_acyclic(&self) -> bool {
        let mut placed = VarSet::EMPTY;
        loop {
            let ready: VarSet = (self.nodes - placed)
                .iter()
                .filter(|&v| self.edges.iter().all(|e| e.to != v || placed.contains(e.from)))
                .collect();
            if ready.is_empty() {
                return placed == self.nodes;
            }
            placed = placed | ready;
        }
    }

    pub fn to_dot(&self) -> String {
        let u = &self.universe;
        render_dot(
            self.nodes.iter().map(|v| u.name(v)),
            self.edges.iter().map(|e| (u.name(e.from), u.name(e.to))),
        )
    }

    pub fn to_file(&self) -> GlobalNetworkJson {
        let u = &self.universe;
        GlobalNetworkJson {
            nodes: u.set_names(self.nodes),
            edges: self
                .edges
                .iter()
                .map(|e| [u.name(e.from).to_string(), u.name(e.to).to_string()])
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GlobalNetworkJson {
    pub nodes: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// Union of the links inside `h`'s component of every local network.
pub fn compose_global(locals: &[LocalNetwork]) -> Result<GlobalNetwork> {
    let first = locals
        .first()
        .ok_or_else(|| Error::input("composition needs at least one local network"))?;
    let (universe, ordering, h) = (first.network.universe(), first.network.ordering(), first.h);
    if locals
        .iter()
        .any(|l| l.network.ordering() != ordering || l.h != h || l.network.universe() != universe)
    {
        return Err(Error::input("local networks must share one ordering and hypothesis"));
    }
    let mut nodes = VarSet::singleton(h);
    let mut edges = BTreeSet::new();
    for l in locals {
        let comp = l.network.component_of(h);
        nodes = nodes | comp;
        edges.extend(l.network.edges().into_iter().filter(|e| comp.contains(e.from)));
    }
    let global = GlobalNetwork {
        universe: universe.clone(),
        ordering: ordering.to_vec(),
        nodes,
        edges: edges.into_iter().collect(),
    };
    if !global.is_acyclic() {
        return Err(Error::input("composed network has a cycle"));
    }
    Ok(global)
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalJson {
    pub pair: [String; 2],
    pub edges: Vec<[String; 2]>,
    pub relevant: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceCheck {
    pub pair: [String; 2],
    pub symptom: String,
    pub relevant: bool,
    pub discrimination: Discrimination,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompositionReport {
    pub hypothesis: String,
    pub ordering: Vec<String>,
    pub locals: Vec<LocalJson>,
    pub global: GlobalNetworkJson,
    pub acyclic: bool,
    /// Whether connectivity and discrimination are expected to coincide:
    /// every restricted distribution is binary and strictly positive.
    pub equivalence_expected: bool,
    pub checks: Vec<EquivalenceCheck>,
    /// Dual routes of discrimination agree everywhere.
    pub routes_agree: bool,
    /// Relevance matches discrimination everywhere.
    pub equivalent: bool,
}

impl CompositionReport {
    /// Acyclic, internally consistent, and equivalent where expected.
    pub fn pass(&self) -> bool {
        self.acyclic && self.routes_agree && (!self.equivalence_expected || self.equivalent)
    }
}

/// Builds all local networks, composes the global one, and compares
/// relevance with discrimination for every pair and symptom.
pub fn compose(
    p: &TabularDistribution,
    graph: &SimilarityGraph,
    ordering: Option<&[VariableId]>,
    cap: usize,
) -> Result<(GlobalNetwork, CompositionReport)> {
    let resolved = graph.resolve(p)?;
    let h = resolved.h;
    let universe = p.universe();
    let ordering = ordering.map_or_else(|| default_ordering(universe, h), <[VariableId]>::to_vec);
    let locals = resolved
        .pairs
        .iter()
        .map(|&pair| build_local(p, h, pair, &ordering))
        .collect::<Result<Vec<_>>>()?;
    let global = compose_global(&locals)?;
    let value = |i: usize| p.domain(h)[i].clone();
    let name = |v: VariableId| universe.name(v).to_string();

    let mut checks = Vec::new();
    let mut equivalence_expected = true;
    for l in &locals {
        equivalence_expected &= l.conditioned.is_binary() && l.conditioned.is_strictly_positive();
        let relevant = l.relevant_symptoms();
        for s in universe.ids().filter(|&s| s != h) {
            checks.push(EquivalenceCheck {
                pair: [value(l.pair.0), value(l.pair.1)],
                symptom: name(s),
                relevant: relevant.contains(s),
                discrimination: discriminates(p, s, h, l.pair, cap)?,
            });
        }
    }
    let report = CompositionReport {
        hypothesis: name(h),
        ordering: ordering.iter().map(|&v| name(v)).collect(),
        locals: locals
            .iter()
            .map(|l| LocalJson {
                pair: [value(l.pair.0), value(l.pair.1)],
                edges: l.network.edges().iter().map(|e| [name(e.from), name(e.to)]).collect(),
                relevant: universe.set_names(l.relevant_symptoms()),
            })
            .collect(),
        global: global.to_file(),
        acyclic: global.is_acyclic(),
        equivalence_expected,
        routes_agree: checks.iter().all(|c| c.discrimination.agree()),
        equivalent: checks.iter().all(|c| c.relevant == c.discrimination.direct),
        checks,
    };
    Ok((global, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `h` uniform over three values and one binary symptom with weights
    /// given per `(h, s)`.
    fn one_symptom(weight: impl Fn(usize, usize) -> u64) -> TabularDistribution {
        TabularDistribution::from_fn(
            Universe::new(["h", "s"]).unwrap(),
            vec![
                vec!["h1".into(), "h2".into(), "h3".into()],
                vec!["0".into(), "1".into()],
            ],
            |d| weight(d[0], d[1]),
        )
        .unwrap()
    }

    fn ids(p: &TabularDistribution) -> (VariableId, VariableId) {
        (p.universe().id("h").unwrap(), p.universe().id("s").unwrap())
    }

    #[test]
    fn symptom_tied_to_third_value_is_irrelevant_for_first_pair() {
        let p = one_symptom(|h, s| if (h == 2) == (s == 1) { 3 } else { 1 });
        let (h, s) = ids(&p);
        let ord = default_ordering(p.universe(), h);
        let l = build_local(&p, h, (0, 1), &ord).unwrap();
        assert_eq!(l.relevant_symptoms(), VarSet::EMPTY);
        let d = discriminates(&p, s, h, (0, 1), DEFAULT_SIMNET_CAP).unwrap();
        assert!(!d.direct && d.agree());
        let l = build_local(&p, h, (0, 2), &ord).unwrap();
        assert_eq!(l.relevant_symptoms(), VarSet::singleton(s));
    }

    #[test]
    fn indicator_symptom_links_to_h() {
        let p = one_symptom(|h, s| u64::from((h == 0) == (s == 1)));
        let (h, s) = ids(&p);
        let l = build_local(&p, h, (0, 1), &default_ordering(p.universe(), h)).unwrap();
        assert_eq!(l.network.edges(), vec![Edge { from: h, to: s }]);
        let d = discriminates(&p, s, h, (0, 1), DEFAULT_SIMNET_CAP).unwrap();
        assert!(d.direct && d.agree());
    }

    #[test]
    fn independent_symptom_is_isolated() {
        let p = one_symptom(|_, s| 1 + s as u64);
        let (h, s) = ids(&p);
        for pair in [(0, 1), (0, 2), (1, 2)] {
            let l = build_local(&p, h, pair, &default_ordering(p.universe(), h)).unwrap();
            assert!(l.network.edges().is_empty());
            assert!(!discriminates(&p, s, h, pair, DEFAULT_SIMNET_CAP).unwrap().direct);
        }
    }

    fn graph(edges: &[[&str; 2]]) -> SimilarityGraph {
        SimilarityGraph {
            hypothesis: "h".into(),
            values: vec!["h1".into(), "h2".into(), "h3".into()],
            edges: edges.iter().map(|[a, b]| [a.to_string(), b.to_string()]).collect(),
        }
    }

    #[test]
    fn similarity_graph_must_be_connected() {
        let p = one_symptom(|_, _| 1);
        assert!(graph(&[["h1", "h2"]]).resolve(&p).is_err());
        assert!(graph(&[["h1", "h1"], ["h2", "h3"]]).resolve(&p).is_err());
        let r = graph(&[["h2", "h1"], ["h2", "h3"]]).resolve(&p).unwrap();
        assert_eq!(r.pairs, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn all_isolated_gives_h_alone() {
        let p = one_symptom(|_, s| 1 + s as u64);
        let (global, report) = compose(&p, &graph(&[["h1", "h2"], ["h2", "h3"]]), None, DEFAULT_SIMNET_CAP).unwrap();
        assert_eq!(global.nodes, VarSet::singleton(ids(&p).0));
        assert!(global.edges.is_empty());
        assert!(report.pass());
        assert_eq!(global.to_dot(), "digraph G {\n  h;\n}\n");
    }

    #[test]
    fn inconsistent_orderings_are_rejected() {
        let u = Universe::new(["h", "s", "t"]).unwrap();
        let p = TabularDistribution::from_fn(
            u.clone(),
            vec![
                vec!["h1".into(), "h2".into()],
                vec!["0".into(), "1".into()],
                vec!["0".into(), "1".into()],
            ],
            |_| 1,
        )
        .unwrap();
        let h = u.id("h").unwrap();
        let a = build_local(&p, h, (0, 1), &[h, VariableId::new(1), VariableId::new(2)]).unwrap();
        let b = build_local(&p, h, (0, 1), &[h, VariableId::new(2), VariableId::new(1)]).unwrap();
        assert!(compose_global(&[a, b]).is_err());
        assert!(build_local(&p, h, (0, 1), &[VariableId::new(1), h, VariableId::new(2)]).is_err());
    }
}
