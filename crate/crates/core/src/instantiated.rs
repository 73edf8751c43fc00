//! Instantiated dependency models: independence statements about specific
//! values, conditional models, the propositional transitivity scan and the
//! Gaussian unification check.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::distributions::{induced_model, Assignment, GaussianModel, Model, TabularDistribution};
use crate::error::{Error, Result};
use crate::graphoid::DependencyModel;
use crate::triplet::Triplet;
use crate::varset::{Universe, VarSet, VariableId};

/// Representative values of the conditioning variable when scanning a
/// Gaussian backing. Value-level Gaussian statements do not depend on the
/// value, so two distinct values cover every case.
pub const GAUSSIAN_SCAN_VALUES: [f64; 2] = [-1.0, 1.0];

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    /// Index into a tabular domain.
    Discrete(usize),
    Real(f64),
}

/// `(X = x, Y = y; Z = z)`: a triplet with a value for every member.
#[derive(Clone, Debug, PartialEq)]
pub struct InstantiatedTriplet {
    triplet: Triplet,
    values: BTreeMap<VariableId, Value>,
}

impl InstantiatedTriplet {
    pub fn new(x: VarSet, y: VarSet, z: VarSet, values: BTreeMap<VariableId, Value>) -> Result<Self> {
        let triplet = Triplet::new(x, y, z)?;
        let covered: VarSet = values.keys().copied().collect();
        if covered != triplet.variables() {
            return Err(Error::input("values must cover exactly X ∪ Y ∪ Z"));
        }
        Ok(InstantiatedTriplet { triplet, values })
    }

    /// From a tabular assignment covering `x ∪ y ∪ z`.
    pub fn discrete(x: VarSet, y: VarSet, z: VarSet, values: &Assignment) -> Result<Self> {
        let values = values.iter().map(|(v, i)| (v, Value::Discrete(i))).collect();
        InstantiatedTriplet::new(x, y, z, values)
    }

    pub fn triplet(&self) -> Triplet {
        self.triplet
    }

    pub fn values(&self) -> &BTreeMap<VariableId, Value> {
        &self.values
    }

    fn assignment(&self) -> Result<Assignment> {
        self.values
            .iter()
            .map(|(&v, val)| match val {
                Value::Discrete(i) => Ok((v, *i)),
                Value::Real(_) => Err(Error::input("tabular statements need discrete values")),
            })
            .collect()
    }

    fn real_values(&self) -> Result<()> {
        if self.values.values().all(|v| matches!(v, Value::Real(_))) {
            Ok(())
        } else {
            Err(Error::input("Gaussian statements need real values"))
        }
    }
}

/// A probability model read at the level of individual values.
#[derive(Clone, Debug, PartialEq)]
pub struct InstantiatedModel {
    backing: Model,
}

impl From<Model> for InstantiatedModel {
    fn from(backing: Model) -> Self {
        InstantiatedModel { backing }
    }
}

impl From<TabularDistribution> for InstantiatedModel {
    fn from(p: TabularDistribution) -> Self {
        Model::Tabular(p).into()
    }
}

impl From<GaussianModel> for InstantiatedModel {
    fn from(g: GaussianModel) -> Self {
        Model::Gaussian(g).into()
    }
}

impl InstantiatedModel {
    pub fn backing(&self) -> &Model {
        &self.backing
    }

    pub fn universe(&self) -> &Universe {
        self.backing.universe()
    }

    /// Tabular backings compare `P(x, y | z)` with `P(x | z)·P(y | z)` at the
    /// given values. Gaussian backings answer the set-level question, since
    /// conditional covariances do not depend on the conditioning values.
    pub fn query(&self, t: &InstantiatedTriplet) -> Result<bool> {
        let (x, y, z) = (t.triplet.x(), t.triplet.y(), t.triplet.z());
        match &self.backing {
            Model::Tabular(p) => p.independent_at_values(x, y, z, &t.assignment()?),
            Model::Gaussian(g) => {
                t.real_values()?;
                g.independent(x, y, z)
            }
        }
    }

    /// The model over `U ∖ {u}` obtained by conditioning the backing on
    /// `u = value`.
    pub fn conditional_model(&self, u: VariableId, value: Value) -> Result<InstantiatedModel> {
        self.universe().check_set(VarSet::singleton(u))?;
        match (&self.backing, value) {
            (Model::Tabular(p), Value::Discrete(i)) => Ok(p.condition_on(&Assignment::new().with(u, i))?.into()),
            (Model::Gaussian(g), Value::Real(r)) => Ok(g.conditional(VarSet::singleton(u), &[r])?.into()),
            _ => Err(Error::input("value kind does not match the backing distribution")),
        }
    }

    /// Set-level model: `(X, Y; Z)` is included iff the value-level statement
    /// holds at every instantiation with `P(Z = z) > 0`.
    pub fn induced_uninstantiated(&self, cap: usize) -> Result<DependencyModel> {
        match &self.backing {
            Model::Gaussian(g) => induced_model(g, cap),
            Model::Tabular(p) => {
                let universe = p.universe().clone();
                if universe.len() > cap {
                    return Err(Error::Capacity {
                        what: "triplet enumeration universe",
                        requested: universe.len(),
                        limit: cap,
                    });
                }
                let mut statements = Vec::new();
                for t in crate::distributions::all_triplets(&universe) {
                    let mut holds = true;
                    for values in p.assignments(t.variables()) {
                        match p.independent_at_values(t.x(), t.y(), t.z(), &values) {
                            Ok(true) | Err(Error::ZeroEvidence(_)) => {}
                            Ok(false) => {
                                holds = false;
                                break;
                            }
                            Err(e) => return Err(e),
                        }
                    }
                    if holds {
                        statements.push(t);
                    }
                }
                let mut m = DependencyModel::from_statements(universe, statements)?;
                m.mark_if_closed();
                Ok(m)
            }
        }
    }
}

/// The conditional model read directly off its definition: `(X, Y; Z)` over
/// `U ∖ {u}` holds iff `(X, Y; Z ∪ {u})` holds in the parent with `u` fixed.
pub struct ConditionalView<'a> {
    parent: &'a InstantiatedModel,
    u: VariableId,
    value: Value,
    kept: VarSet,
    universe: Universe,
}

impl<'a> ConditionalView<'a> {
    pub fn new(parent: &'a InstantiatedModel, u: VariableId, value: Value) -> Result<Self> {
        parent.universe().check_set(VarSet::singleton(u))?;
        let kept = parent.universe().all().without(u);
        Ok(ConditionalView {
            parent,
            u,
            value,
            kept,
            universe: parent.universe().restrict(kept),
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// `t` is expressed over the reduced universe.
    pub fn query(&self, t: &InstantiatedTriplet) -> Result<bool> {
        let expand = |s: VarSet| s.expand(self.kept);
        let tr = t.triplet;
        let mut values: BTreeMap<VariableId, Value> = t
            .values
            .iter()
            .map(|(&v, &val)| (expand(VarSet::singleton(v)).first().expect("kept variable"), val))
            .collect();
        values.insert(self.u, self.value);
        let full = InstantiatedTriplet::new(expand(tr.x()), expand(tr.y()), expand(tr.z()).with(self.u), values)?;
        self.parent.query(&full)
    }
}

/// Compares the conditioned distribution with the definition-based view on
/// every instantiated triplet over `U ∖ {u}`. Tabular backings only. Returns
/// the first disagreeing triplet.
pub fn conditional_disagreement(
    m: &InstantiatedModel,
    u: VariableId,
    value: usize,
) -> Result<Option<InstantiatedTriplet>> {
    let conditioned = m.conditional_model(u, Value::Discrete(value))?;
    let view = ConditionalView::new(m, u, Value::Discrete(value))?;
    let Model::Tabular(p) = conditioned.backing() else {
        return Err(Error::input("conditional coherence is checked on tabular backings"));
    };
    for t in crate::distributions::all_triplets(p.universe()) {
        for values in p.assignments(t.variables()) {
            let it = InstantiatedTriplet::discrete(t.x(), t.y(), t.z(), &values)?;
            let direct = conditioned.query(&it);
            let defined = view.query(&it);
            let agree = match (&direct, &defined) {
                (Ok(a), Ok(b)) => a == b,
                (Err(Error::ZeroEvidence(_)), Err(Error::ZeroEvidence(_))) => true,
                _ => false,
            };
            if !agree {
                return Ok(Some(it));
            }
        }
    }
    Ok(None)
}

/// The eight cells of one propositional transitivity instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cells {
    /// `A₁..A₄` then `B₁..B₄`.
    pub cells: [VarSet; 8],
}

impl Cells {
    fn union(&self, idx: &[usize]) -> VarSet {
        idx.iter().fold(VarSet::EMPTY, |acc, &i| acc | self.cells[i])
    }

    pub fn a(&self) -> VarSet {
        self.union(&[0, 1, 2, 3])
    }

    pub fn b(&self) -> VarSet {
        self.union(&[4, 5, 6, 7])
    }

    /// Sides of the statement conditioned on `e = e′`.
    pub fn first_split(&self) -> (VarSet, VarSet) {
        (self.union(&[0, 1, 6, 7]), self.union(&[4, 5, 2, 3]))
    }

    /// Sides of the statement conditioned on `e = e″`.
    pub fn second_split(&self) -> (VarSet, VarSet) {
        (self.union(&[0, 2, 5, 7]), self.union(&[4, 6, 1, 3]))
    }

    /// The part of `A` on the left of each split and of `B` on the right
    /// recovers the cells: `A ∩ X″ = A₁A₃`, `A ∩ X′ = A₁A₂`, and the same
    /// for `B`. Their intersections are `A₁` and `B₁`.
    fn assert_algebra(&self) {
        let (a, b) = (self.a(), self.b());
        let (x1, y1) = self.first_split();
        let (x2, y2) = self.second_split();
        let c = &self.cells;
        assert_eq!(a, c[0] | c[1] | c[2] | c[3]);
        assert_eq!(a & x2, c[0] | c[2]);
        assert_eq!(a & x1, c[0] | c[1]);
        assert_eq!(b & y2, c[4] | c[6]);
        assert_eq!(b & y1, c[4] | c[5]);
        assert_eq!((a & x1) & (a & x2), c[0]);
        assert_eq!((b & y1) & (b & y2), c[4]);
        assert!(x1.is_disjoint(y1) && x2.is_disjoint(y2));
        assert_eq!(x1 | y1, a | b);
        assert_eq!(x2 | y2, a | b);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropTransViolation {
    #[serde(rename = "A1")]
    pub a1: Vec<String>,
    #[serde(rename = "A2")]
    pub a2: Vec<String>,
    #[serde(rename = "A3")]
    pub a3: Vec<String>,
    #[serde(rename = "A4")]
    pub a4: Vec<String>,
    #[serde(rename = "B1")]
    pub b1: Vec<String>,
    #[serde(rename = "B2")]
    pub b2: Vec<String>,
    #[serde(rename = "B3")]
    pub b3: Vec<String>,
    #[serde(rename = "B4")]
    pub b4: Vec<String>,
    pub e: String,
    pub e_prime: String,
    pub e_double_prime: String,
    /// `A₁` independent of everything else.
    pub first_disjunct: bool,
    /// `B₁` independent of everything else.
    pub second_disjunct: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropTransReport {
    pub a: String,
    pub b: String,
    pub pass: bool,
    pub checked_instances: u64,
    /// Instances where all three antecedents held.
    pub antecedent_hits: u64,
    /// Instances dropped because a conditioning value has zero probability.
    pub skipped: u64,
    pub violation: Option<PropTransViolation>,
}

/// Default universe bound for the propositional transitivity scan.
pub const DEFAULT_PROPTRANS_CAP: usize = 6;

type QueryKey = (Triplet, Option<(VariableId, usize)>);

struct Scanner<'a> {
    model: &'a Model,
    memo: HashMap<QueryKey, Option<bool>>,
}

impl Scanner<'_> {
    /// `None` when the conditioning value has zero probability.
    fn ask(&mut self, x: VarSet, y: VarSet, cond: Option<(VariableId, usize)>) -> Result<Option<bool>> {
        let z = cond.map_or(VarSet::EMPTY, |(e, _)| VarSet::singleton(e));
        let key = (Triplet::new(x, y, z)?.normalize(), cond);
        if let Some(&hit) = self.memo.get(&key) {
            return Ok(hit);
        }
        let answer = match (self.model, cond) {
            (Model::Tabular(p), None) => Some(p.independent(x, y, VarSet::EMPTY)?),
            (Model::Tabular(p), Some((e, val))) => match p.independent_at(x, y, z, &Assignment::new().with(e, val)) {
                Ok(b) => Some(b),
                Err(Error::ZeroEvidence(_)) => None,
                Err(err) => return Err(err),
            },
            (Model::Gaussian(g), _) => Some(g.independent(x, y, z)?),
        };
        self.memo.insert(key, answer);
        Ok(answer)
    }
}

/// Scans every instance of propositional transitivity with `a ∈ A₁` and
/// `b ∈ B₁`: each choice of `e`, each placement of the remaining variables
/// into the eight cells, and each ordered pair of distinct values of `e`.
/// Wherever the three antecedents hold, one of the two consequent
/// disjuncts must hold.
pub fn check_propositional_transitivity(
    model: &InstantiatedModel,
    a: VariableId,
    b: VariableId,
    cap: usize,
) -> Result<PropTransReport> {
    let universe = model.universe();
    if a == b {
        return Err(Error::input("the two variables must differ"));
    }
    universe.check_set(VarSet::singleton(a).with(b))?;
    if universe.len() > cap {
        return Err(Error::Capacity {
            what: "propositional transitivity universe",
            requested: universe.len(),
            limit: cap,
        });
    }
    let value_names = |e: VariableId| -> Vec<String> {
        match model.backing() {
            Model::Tabular(p) => p.domain(e).to_vec(),
            Model::Gaussian(_) => GAUSSIAN_SCAN_VALUES.iter().map(|v| v.to_string()).collect(),
        }
    };
    let all = universe.all();
    let mut scanner = Scanner {
        model: model.backing(),
        memo: HashMap::new(),
    };
    let mut report = PropTransReport {
        a: universe.name(a).to_string(),
        b: universe.name(b).to_string(),
        pass: true,
        checked_instances: 0,
        antecedent_hits: 0,
        skipped: 0,
        violation: None,
    };

    for e in (all - VarSet::singleton(a).with(b)).iter() {
        let values = value_names(e);
        let rest: Vec<VariableId> = (all - VarSet::singleton(a).with(b).with(e)).iter().collect();
        for code in 0..8usize.pow(rest.len() as u32) {
            let mut cells = [VarSet::EMPTY; 8];
            cells[0] = VarSet::singleton(a);
            cells[4] = VarSet::singleton(b);
            for (i, &v) in rest.iter().enumerate() {
                let c = (code >> (3 * i)) & 7;
                cells[c] = cells[c].with(v);
            }
            let cells = Cells { cells };
            cells.assert_algebra();
            let (x1, y1) = cells.first_split();
            let (x2, y2) = cells.second_split();

            for (i1, i2) in (0..values.len()).flat_map(|i| (0..values.len()).map(move |j| (i, j))) {
                if i1 == i2 {
                    continue;
                }
                report.checked_instances += 1;
                if scanner.ask(cells.a(), cells.b(), None)? != Some(true) {
                    continue;
                }
                let second = scanner.ask(x1, y1, Some((e, i1)))?;
                let third = scanner.ask(x2, y2, Some((e, i2)))?;
                match (second, third) {
                    (None, _) | (_, None) => {
                        report.skipped += 1;
                        continue;
                    }
                    (Some(true), Some(true)) => {}
                    _ => continue,
                }
                report.antecedent_hits += 1;
                let first_disjunct = scanner.ask(cells.cells[0], all - cells.cells[0], None)? == Some(true);
                let second_disjunct = scanner.ask(cells.cells[4], all - cells.cells[4], None)? == Some(true);
                if !(first_disjunct || second_disjunct) && report.violation.is_none() {
                    let n = |i: usize| universe.set_names(cells.cells[i]);
                    report.pass = false;
                    report.violation = Some(PropTransViolation {
                        a1: n(0),
                        a2: n(1),
                        a3: n(2),
                        a4: n(3),
                        b1: n(4),
                        b2: n(5),
                        b3: n(6),
                        b4: n(7),
                        e: universe.name(e).to_string(),
                        e_prime: values[i1].clone(),
                        e_double_prime: values[i2].clone(),
                        first_disjunct,
                        second_disjunct,
                    });
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct UnificationReport {
    pub pass: bool,
    pub checked_sets: usize,
    pub checked_values: usize,
    pub max_deviation: f64,
}

/// Compares the conditional covariance given `z` across every combination of
/// `grid` values for the members of `z`. Deviation is entrywise.
pub fn unification_deviation(g: &GaussianModel, z: VarSet, grid: &[f64]) -> Result<(f64, usize)> {
    if grid.len() < 3 {
        return Err(Error::input("the value grid needs at least three values"));
    }
    g.universe().check_set(z)?;
    let k = z.len();
    let combos = grid.len().pow(k as u32);
    let mut reference = None;
    let mut worst = 0.0f64;
    for code in 0..combos {
        let values: Vec<f64> = (0..k)
            .map(|i| grid[(code / grid.len().pow(i as u32)) % grid.len()])
            .collect();
        let cov = g.conditional(z, &values)?.covariance().clone();
        match &reference {
            None => reference = Some(cov),
            Some(r) => worst = worst.max((&cov - r).amax()),
        }
    }
    Ok((worst, combos))
}

/// Runs [`unification_deviation`] for every nonempty proper `Z` with at most
/// `max_size` members.
pub fn check_unification(g: &GaussianModel, grid: &[f64], max_size: usize) -> Result<UnificationReport> {
    let all = g.universe().all();
    let mut report = UnificationReport {
        pass: true,
        checked_sets: 0,
        checked_values: 0,
        max_deviation: 0.0,
    };
    for z in all.subsets().skip(1) {
        if z.len() > max_size || z == all {
            continue;
        }
        let (dev, n) = unification_deviation(g, z, grid)?;
        report.checked_sets += 1;
        report.checked_values += n;
        report.max_deviation = report.max_deviation.max(dev);
    }
    report.pass = report.max_deviation <= g.tolerance();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{
        generate, named_example, GeneratorKind, GeneratorParams, NamedExample, DEFAULT_ENUMERATION_CAP,
    };

    fn tab(e: NamedExample) -> TabularDistribution {
        named_example(e).unwrap().into_tabular().unwrap()
    }

    fn it(p: &TabularDistribution, x: &[&str], y: &[&str], z: &[&str], vals: &[(&str, &str)]) -> InstantiatedTriplet {
        let u = p.universe();
        InstantiatedTriplet::discrete(
            u.set(x).unwrap(),
            u.set(y).unwrap(),
            u.set(z).unwrap(),
            &p.assignment(vals).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn value_level_queries() {
        let pc = tab(NamedExample::PairCopy);
        let m = InstantiatedModel::from(pc.clone());
        assert!(m
            .query(&it(
                &pc,
                &["a"],
                &["b"],
                &["c"],
                &[("a", "0"), ("b", "1"), ("c", "(0,1)")]
            ))
            .unwrap());
        let par = tab(NamedExample::Parity);
        let m = InstantiatedModel::from(par.clone());
        assert!(!m
            .query(&it(&par, &["a"], &["b"], &["c"], &[("a", "0"), ("b", "0"), ("c", "0")]))
            .unwrap());
    }

    #[test]
    fn gaussian_queries_ignore_values() {
        let g = named_example(NamedExample::MarkovChain)
            .unwrap()
            .into_gaussian()
            .unwrap();
        let m = InstantiatedModel::from(g.clone());
        let u = g.universe();
        let (x, y, z) = (
            u.set(&["x1"]).unwrap(),
            u.set(&["x3"]).unwrap(),
            u.set(&["x2"]).unwrap(),
        );
        let answers: Vec<bool> = [-3.0, 0.0, 7.5]
            .iter()
            .map(|&v| {
                let vals = [(x, v), (y, -v), (z, 2.0 * v)]
                    .iter()
                    .map(|(s, r)| (s.first().unwrap(), Value::Real(*r)))
                    .collect();
                m.query(&InstantiatedTriplet::new(x, y, z, vals).unwrap()).unwrap()
            })
            .collect();
        assert_eq!(answers, [true, true, true]);
    }

    #[test]
    fn conditioning_parity_on_c_couples_a_and_b() {
        let par = tab(NamedExample::Parity);
        let m = InstantiatedModel::from(par.clone());
        let c = par.universe().id("c").unwrap();
        let cond = m.conditional_model(c, Value::Discrete(0)).unwrap();
        let Model::Tabular(q) = cond.backing() else { panic!() };
        for vals in q.assignments(q.universe().all()) {
            let t = InstantiatedTriplet::discrete(
                VarSet::from_indices([0]),
                VarSet::from_indices([1]),
                VarSet::EMPTY,
                &vals,
            )
            .unwrap();
            let positive = !num_traits::Zero::is_zero(&q.probability(&vals).unwrap());
            if positive {
                assert!(!cond.query(&t).unwrap());
            }
        }
        assert_eq!(conditional_disagreement(&m, c, 0).unwrap(), None);
    }

    #[test]
    fn pair_copy_point_mass_conditioning() {
        let pc = tab(NamedExample::PairCopy);
        let m = InstantiatedModel::from(pc.clone());
        let c = pc.universe().id("c").unwrap();
        let idx = pc.value_index(c, "(1,1)").unwrap();
        assert_eq!(conditional_disagreement(&m, c, idx).unwrap(), None);
    }

    #[test]
    fn induced_uninstantiated_matches_set_level() {
        for e in [NamedExample::Parity, NamedExample::PairCopy, NamedExample::M1Product] {
            let p = tab(e);
            let m = InstantiatedModel::from(p.clone());
            let lifted = m.induced_uninstantiated(DEFAULT_ENUMERATION_CAP).unwrap();
            assert_eq!(lifted, induced_model(&p, DEFAULT_ENUMERATION_CAP).unwrap());
            assert!(lifted.check_closed().is_closed());
        }
        let pc = InstantiatedModel::from(tab(NamedExample::PairCopy));
        let lifted = pc.induced_uninstantiated(DEFAULT_ENUMERATION_CAP).unwrap();
        let u = lifted.universe().clone();
        let ab = |z: &[&str]| Triplet::new(u.set(&["a"]).unwrap(), u.set(&["b"]).unwrap(), u.set(z).unwrap()).unwrap();
        assert!(lifted.contains(&ab(&[])) && lifted.contains(&ab(&["c"])));
    }

    #[test]
    fn proptrans_on_product_passes_with_hits() {
        let u = Universe::letters(4).unwrap();
        let params = GeneratorParams {
            blocks: Some(vec![u.set(&["a", "c"]).unwrap(), u.set(&["b", "d"]).unwrap()]),
            ..GeneratorParams::default()
        };
        let p = generate(GeneratorKind::SpbBlockProduct, 4, 11, &params).unwrap();
        let m = InstantiatedModel::from(p);
        let r = check_propositional_transitivity(&m, VariableId::new(0), VariableId::new(1), 6).unwrap();
        assert!(r.pass);
        assert!(r.antecedent_hits > 0);
        assert_eq!(r.skipped, 0);
        // two choices of e, 8 placements of the last variable, 2 value pairs
        assert_eq!(r.checked_instances, 2 * 8 * 2);
    }

    #[test]
    fn proptrans_cap_and_pair_checks() {
        let m = InstantiatedModel::from(tab(NamedExample::Parity));
        assert!(matches!(
            check_propositional_transitivity(&m, VariableId::new(0), VariableId::new(1), 2),
            Err(Error::Capacity { .. })
        ));
        assert!(check_propositional_transitivity(&m, VariableId::new(0), VariableId::new(0), 6).is_err());
    }

    #[test]
    fn unification_on_markov_chain() {
        let g = named_example(NamedExample::MarkovChain)
            .unwrap()
            .into_gaussian()
            .unwrap();
        let z = g.universe().set(&["x2"]).unwrap();
        let (dev, n) = unification_deviation(&g, z, &[-1.0, 0.0, 5.0]).unwrap();
        assert_eq!(n, 3);
        assert!(dev <= 1e-9);
        assert!(check_unification(&g, &[-1.0, 0.0, 5.0], 2).unwrap().pass);
        assert!(unification_deviation(&g, z, &[0.0, 1.0]).is_err());
    }
}
