//! Exact joint probability tables over finite-domain variables.
//!
//! Cells hold nonnegative integer weights over a common denominator (the
//! total weight), so every probability is an exact rational and every
//! independence test is an identity between integers.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphoid::IndependenceOracle;
use crate::triplet::Triplet;
use crate::varset::{Universe, VarSet, VariableId};

pub type Rational = BigRational;

/// Value indices for a subset of variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(BTreeMap<VariableId, usize>);

impl Assignment {
    pub fn new() -> Self {
        Assignment(BTreeMap::new())
    }

    pub fn with(mut self, v: VariableId, value: usize) -> Self {
        self.0.insert(v, value);
        self
    }

    pub fn insert(&mut self, v: VariableId, value: usize) {
        self.0.insert(v, value);
    }

    pub fn get(&self, v: VariableId) -> Option<usize> {
        self.0.get(&v).copied()
    }

    pub fn variables(&self) -> VarSet {
        self.0.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VariableId, usize)> + '_ {
        self.0.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Keeps only the entries for `set`.
    pub fn restrict(&self, set: VarSet) -> Assignment {
        Assignment(
            self.0
                .iter()
                .filter(|(k, _)| set.contains(**k))
                .map(|(k, v)| (*k, *v))
                .collect(),
        )
    }
}

impl FromIterator<(VariableId, usize)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (VariableId, usize)>>(iter: I) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

/// Mixed-radix index space over a subset of the variables.
#[derive(Clone, Debug)]
struct Space {
    members: Vec<usize>,
    radix: Vec<usize>,
    size: usize,
}

impl Space {
    fn new(set: VarSet, domains: &[Vec<String>]) -> Space {
        let members = set.to_indices();
        let radix: Vec<usize> = members.iter().map(|&i| domains[i].len()).collect();
        let size = radix.iter().product();
        Space { members, radix, size }
    }

    /// Index of the projection of a full digit vector (first member most
    /// significant).
    fn index(&self, digits: &[usize]) -> usize {
        self.members
            .iter()
            .zip(&self.radix)
            .fold(0, |acc, (&m, &r)| acc * r + digits[m])
    }

    /// Writes the digits of `idx` into the member slots of `digits`.
    fn decode(&self, mut idx: usize, digits: &mut [usize]) {
        for (&m, &r) in self.members.iter().zip(&self.radix).rev() {
            digits[m] = idx % r;
            idx /= r;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabularDistribution {
    universe: Universe,
    domains: Vec<Vec<String>>,
    weights: Vec<BigUint>,
    total: BigUint,
}

impl TabularDistribution {
    /// Cells are indexed row-major with the first variable most significant.
    pub fn from_weights(universe: Universe, domains: Vec<Vec<String>>, weights: Vec<BigUint>) -> Result<Self> {
        if domains.len() != universe.len() {
            return Err(Error::input(format!(
                "{} domains for {} variables",
                domains.len(),
                universe.len()
            )));
        }
        for (name, d) in universe.names().iter().zip(&domains) {
            if d.is_empty() {
                return Err(Error::input(format!("variable `{name}` has an empty domain")));
            }
            for (i, v) in d.iter().enumerate() {
                if d[..i].contains(v) {
                    return Err(Error::input(format!("variable `{name}` lists value `{v}` twice")));
                }
            }
        }
        let size: usize = domains.iter().map(Vec::len).product();
        if weights.len() != size {
            return Err(Error::input(format!(
                "{} cells given for a product space of {size}",
                weights.len()
            )));
        }
        let total: BigUint = weights.iter().sum();
        if total.is_zero() {
            return Err(Error::input("all cells have zero probability"));
        }
        let mut p = TabularDistribution {
            universe,
            domains,
            weights,
            total,
        };
        p.reduce();
        Ok(p)
    }

    /// Cell weights computed from the value indices of each full assignment.
    pub fn from_fn(universe: Universe, domains: Vec<Vec<String>>, weight: impl Fn(&[usize]) -> u64) -> Result<Self> {
        let space = Space::new(universe.all(), &domains);
        let mut digits = vec![0; universe.len()];
        let weights = (0..space.size)
            .map(|i| {
                space.decode(i, &mut digits);
                BigUint::from(weight(&digits))
            })
            .collect();
        TabularDistribution::from_weights(universe, domains, weights)
    }

    /// Exact probabilities per cell; they must be nonnegative and sum to one.
    pub fn from_probabilities(
        universe: Universe,
        domains: Vec<Vec<String>>,
        probabilities: Vec<Rational>,
    ) -> Result<Self> {
        if probabilities.iter().any(|p| p < &Rational::zero()) {
            return Err(Error::input("negative cell probability"));
        }
        let sum: Rational = probabilities.iter().sum();
        if !sum.is_one() {
            return Err(Error::input(format!("cell probabilities sum to {sum}, not 1")));
        }
        let lcm = probabilities
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, p| acc.lcm(p.denom()));
        let weights = probabilities
            .iter()
            .map(|p| {
                let w = p.numer() * (&lcm / p.denom());
                w.to_biguint().expect("nonnegative")
            })
            .collect();
        TabularDistribution::from_weights(universe, domains, weights)
    }

    fn reduce(&mut self) {
        let g = self.weights.iter().fold(self.total.clone(), |acc, w| acc.gcd(w));
        if !g.is_one() {
            for w in &mut self.weights {
                *w /= &g;
            }
            self.total /= &g;
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn domains(&self) -> &[Vec<String>] {
        &self.domains
    }

    pub fn domain(&self, v: VariableId) -> &[String] {
        &self.domains[v.index()]
    }

    pub fn num_cells(&self) -> usize {
        self.weights.len()
    }

    /// Cells as (value indices, probability), in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (Vec<usize>, Rational)> + '_ {
        let space = Space::new(self.universe.all(), &self.domains);
        self.weights.iter().enumerate().map(move |(i, w)| {
            let mut digits = vec![0; self.universe.len()];
            space.decode(i, &mut digits);
            (digits, ratio(w, &self.total))
        })
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.weights.iter().all(|w| !w.is_zero())
    }

    pub fn is_binary(&self) -> bool {
        self.domains.iter().all(|d| d.len() == 2)
    }

    pub fn value_index(&self, v: VariableId, value: &str) -> Result<usize> {
        self.domains[v.index()]
            .iter()
            .position(|d| d == value)
            .ok_or_else(|| Error::Domain(format!("`{value}` is not a value of `{}`", self.universe.name(v))))
    }

    /// Parses `name -> value` pairs into an assignment.
    pub fn assignment<S: AsRef<str>>(&self, pairs: &[(S, S)]) -> Result<Assignment> {
        pairs
            .iter()
            .map(|(n, v)| {
                let id = self.universe.id(n.as_ref())?;
                Ok((id, self.value_index(id, v.as_ref())?))
            })
            .collect()
    }

    fn check_assignment(&self, a: &Assignment) -> Result<()> {
        for (v, val) in a.iter() {
            if v.index() >= self.universe.len() {
                return Err(Error::Domain(format!("variable index {} out of range", v.index())));
            }
            if val >= self.domains[v.index()].len() {
                return Err(Error::Domain(format!(
                    "value index {val} out of range for `{}`",
                    self.universe.name(v)
                )));
            }
        }
        Ok(())
    }

    /// Marginal weights over `set`, indexed by the set's own mixed-radix space.
    fn marginal_weights(&self, set: VarSet) -> Vec<BigUint> {
        let full = Space::new(self.universe.all(), &self.domains);
        let sub = Space::new(set, &self.domains);
        let mut out = vec![BigUint::zero(); sub.size];
        let mut digits = vec![0; self.universe.len()];
        for (i, w) in self.weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            full.decode(i, &mut digits);
            out[sub.index(&digits)] += w;
        }
        out
    }

    fn weight_of(&self, a: &Assignment) -> BigUint {
        let full = Space::new(self.universe.all(), &self.domains);
        let mut digits = vec![0; self.universe.len()];
        let mut sum = BigUint::zero();
        for (i, w) in self.weights.iter().enumerate() {
            full.decode(i, &mut digits);
            if a.iter().all(|(v, val)| digits[v.index()] == val) {
                sum += w;
            }
        }
        sum
    }

    /// `P(A = a)` for a partial assignment.
    pub fn probability(&self, a: &Assignment) -> Result<Rational> {
        self.check_assignment(a)?;
        Ok(ratio(&self.weight_of(a), &self.total))
    }

    /// Distribution of the variables in `set`, over the restricted universe.
    pub fn marginalize(&self, set: VarSet) -> Result<TabularDistribution> {
        if !set.is_subset(self.universe.all()) {
            return Err(Error::Domain(format!(
                "{set:?} is not a subset of the distribution's variables"
            )));
        }
        let weights = self.marginal_weights(set);
        TabularDistribution::from_weights(
            self.universe.restrict(set),
            set.iter().map(|v| self.domains[v.index()].clone()).collect(),
            weights,
        )
    }

    /// Restricts to the cells consistent with `evidence` and renormalizes,
    /// keeping only the unassigned variables.
    pub fn condition_on(&self, evidence: &Assignment) -> Result<TabularDistribution> {
        self.check_assignment(evidence)?;
        let keep = self.universe.all() - evidence.variables();
        let full = Space::new(self.universe.all(), &self.domains);
        let sub = Space::new(keep, &self.domains);
        let mut weights = vec![BigUint::zero(); sub.size];
        let mut digits = vec![0; self.universe.len()];
        for (i, w) in self.weights.iter().enumerate() {
            full.decode(i, &mut digits);
            if evidence.iter().all(|(v, val)| digits[v.index()] == val) {
                weights[sub.index(&digits)] += w;
            }
        }
        if weights.iter().all(Zero::is_zero) {
            return Err(Error::ZeroEvidence(self.describe(evidence)));
        }
        TabularDistribution::from_weights(
            self.universe.restrict(keep),
            keep.iter().map(|v| self.domains[v.index()].clone()).collect(),
            weights,
        )
    }

    /// Restricts `v` to the listed values (in the given order) and
    /// renormalizes. The variable stays in the universe.
    pub fn restrict_domain(&self, v: VariableId, values: &[usize]) -> Result<TabularDistribution> {
        if values.is_empty() {
            return Err(Error::input("restriction to an empty value set"));
        }
        for &val in values {
            self.check_assignment(&Assignment::new().with(v, val))?;
        }
        let mut domains = self.domains.clone();
        domains[v.index()] = values.iter().map(|&i| self.domains[v.index()][i].clone()).collect();
        let full = Space::new(self.universe.all(), &self.domains);
        let target = Space::new(self.universe.all(), &domains);
        let mut weights = vec![BigUint::zero(); target.size];
        let mut digits = vec![0; self.universe.len()];
        for (i, w) in self.weights.iter().enumerate() {
            full.decode(i, &mut digits);
            if let Some(pos) = values.iter().position(|&x| x == digits[v.index()]) {
                digits[v.index()] = pos;
                weights[target.index(&digits)] += w;
            }
        }
        if weights.iter().all(Zero::is_zero) {
            return Err(Error::ZeroEvidence(format!(
                "`{}` restricted to values of zero total probability",
                self.universe.name(v)
            )));
        }
        TabularDistribution::from_weights(self.universe.clone(), domains, weights)
    }

    /// Conditional independence in cross-multiplied form, `P(xyz)·P(z) = P(xz)·P(yz)` for every
    /// value combination. Holds vacuously where `P(z) = 0`.
    pub fn independent(&self, x: VarSet, y: VarSet, z: VarSet) -> Result<bool> {
        let t = Triplet::new(x, y, z)?;
        self.universe.check_set(t.variables())?;
        Ok(self.independent_unchecked(x, y, z))
    }

    fn independent_unchecked(&self, x: VarSet, y: VarSet, z: VarSet) -> bool {
        if x.is_empty() || y.is_empty() {
            return true;
        }
        let xyz_space = Space::new(x | y | z, &self.domains);
        let xz_space = Space::new(x | z, &self.domains);
        let yz_space = Space::new(y | z, &self.domains);
        let z_space = Space::new(z, &self.domains);
        let p_xyz = self.marginal_weights(x | y | z);
        let p_xz = self.marginal_weights(x | z);
        let p_yz = self.marginal_weights(y | z);
        let p_z = self.marginal_weights(z);
        let mut digits = vec![0; self.universe.len()];
        (0..xyz_space.size).all(|i| {
            xyz_space.decode(i, &mut digits);
            let zi = z_space.index(&digits);
            if p_z[zi].is_zero() {
                return true;
            }
            &p_xyz[i] * &p_z[zi] == &p_xz[xz_space.index(&digits)] * &p_yz[yz_space.index(&digits)]
        })
    }

    /// Value-level statement: `X` and `Y` independent given the single
    /// instantiation `Z = z`.
    pub fn independent_at(&self, x: VarSet, y: VarSet, z: VarSet, z_value: &Assignment) -> Result<bool> {
        let t = Triplet::new(x, y, z)?;
        self.universe.check_set(t.variables())?;
        if z_value.variables() != z {
            return Err(Error::input("the conditioning assignment must cover exactly Z"));
        }
        self.check_assignment(z_value)?;
        let conditioned = self.condition_on(z_value)?;
        let kept = self.universe.all() - z;
        Ok(conditioned.independent_unchecked(x.compress(kept), y.compress(kept), VarSet::EMPTY))
    }

    /// Independence at one fully specified instantiation of `X`, `Y` and `Z`:
    /// `P(x, y | z) = P(x | z)·P(y | z)`. Requires `P(z) > 0`.
    pub fn independent_at_values(&self, x: VarSet, y: VarSet, z: VarSet, values: &Assignment) -> Result<bool> {
        let t = Triplet::new(x, y, z)?;
        self.universe.check_set(t.variables())?;
        if values.variables() != x | y | z {
            return Err(Error::input("the assignment must cover exactly X ∪ Y ∪ Z"));
        }
        self.check_assignment(values)?;
        let w_z = self.weight_of(&values.restrict(z));
        if w_z.is_zero() {
            return Err(Error::ZeroEvidence(self.describe(&values.restrict(z))));
        }
        let w_xyz = self.weight_of(values);
        let w_xz = self.weight_of(&values.restrict(x | z));
        let w_yz = self.weight_of(&values.restrict(y | z));
        Ok(w_xyz * w_z == w_xz * w_yz)
    }

    /// Every assignment of `set`, in row-major order.
    pub fn assignments(&self, set: VarSet) -> Vec<Assignment> {
        let space = Space::new(set, &self.domains);
        let mut digits = vec![0; self.universe.len()];
        (0..space.size)
            .map(|i| {
                space.decode(i, &mut digits);
                set.iter().map(|v| (v, digits[v.index()])).collect()
            })
            .collect()
    }

    pub fn describe(&self, a: &Assignment) -> String {
        let parts: Vec<String> = a
            .iter()
            .map(|(v, val)| format!("{}={}", self.universe.name(v), self.domains[v.index()][val]))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub fn to_file(&self) -> TabularFile {
        let cells = self
            .cells()
            .map(|(digits, p)| CellJson {
                assign: self
                    .universe
                    .names()
                    .iter()
                    .zip(&digits)
                    .zip(&self.domains)
                    .map(|((n, &d), dom)| (n.clone(), dom[d].clone()))
                    .collect(),
                p: p.to_string(),
            })
            .collect();
        TabularFile {
            kind: TabularTag::Tabular,
            variables: self
                .universe
                .names()
                .iter()
                .zip(&self.domains)
                .map(|(n, d)| VariableJson {
                    name: n.clone(),
                    domain: d.clone(),
                })
                .collect(),
            cells,
        }
    }

    /// Cells must cover the product space exactly once.
    pub fn from_file(file: &TabularFile) -> Result<Self> {
        let universe = Universe::new(file.variables.iter().map(|v| v.name.clone()))?;
        let domains: Vec<Vec<String>> = file.variables.iter().map(|v| v.domain.clone()).collect();
        if domains.iter().any(Vec::is_empty) {
            return Err(Error::input("every variable needs a nonempty domain"));
        }
        let space = Space::new(universe.all(), &domains);
        let mut probs: Vec<Option<Rational>> = vec![None; space.size];
        let mut digits = vec![0; universe.len()];
        for cell in &file.cells {
            if cell.assign.len() != universe.len() {
                return Err(Error::input("every cell must assign every variable"));
            }
            for (name, value) in &cell.assign {
                let id = universe.id(name)?;
                digits[id.index()] = domains[id.index()]
                    .iter()
                    .position(|d| d == value)
                    .ok_or_else(|| Error::Domain(format!("`{value}` is not a value of `{name}`")))?;
            }
            let idx = space.index(&digits);
            if probs[idx].is_some() {
                return Err(Error::input(format!("cell {:?} listed twice", cell.assign)));
            }
            probs[idx] = Some(parse_rational(&cell.p)?);
        }
        let probs = probs
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::input("cells do not cover the full product space"))?;
        TabularDistribution::from_probabilities(universe, domains, probs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("distribution serializes")
    }
}

fn ratio(w: &BigUint, total: &BigUint) -> Rational {
    Rational::new(w.clone().into(), total.clone().into())
}

/// `"num/den"` or `"num"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let r: Rational = s
        .trim()
        .parse()
        .map_err(|_| Error::input(format!("`{s}` is not a rational number")))?;
    if r < Rational::zero() {
        return Err(Error::input(format!("negative probability `{s}`")));
    }
    Ok(r)
}

impl IndependenceOracle for TabularDistribution {
    fn universe(&self) -> &Universe {
        &self.universe
    }

    fn independent(&self, t: &Triplet) -> bool {
        self.independent_unchecked(t.x(), t.y(), t.z())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TabularTag {
    Tabular,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VariableJson {
    pub name: String,
    pub domain: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CellJson {
    pub assign: BTreeMap<String, String>,
    pub p: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TabularFile {
    #[serde(rename = "type")]
    pub kind: TabularTag,
    pub variables: Vec<VariableJson>,
    pub cells: Vec<CellJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::generate::{named_example, NamedExample};

    fn parity() -> TabularDistribution {
        named_example(NamedExample::Parity).unwrap().into_tabular().unwrap()
    }

    fn pair_copy() -> TabularDistribution {
        named_example(NamedExample::PairCopy).unwrap().into_tabular().unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn set(p: &TabularDistribution, names: &[&str]) -> VarSet {
        p.universe().set(names).unwrap()
    }

    #[test]
    fn parity_marginal_of_a_is_uniform() {
        let p = parity();
        let m = p.marginalize(set(&p, &["a"])).unwrap();
        let probs: Vec<Rational> = m.cells().map(|(_, q)| q).collect();
        assert_eq!(probs, vec![r(1, 2), r(1, 2)]);
    }

    #[test]
    fn marginalize_everything_is_identity() {
        let p = parity();
        assert_eq!(p.marginalize(p.universe().all()).unwrap(), p);
        assert!(matches!(
            p.marginalize(VarSet::from_indices([5])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn pair_copy_marginal_of_c_is_uniform_over_four() {
        let p = pair_copy();
        let m = p.marginalize(set(&p, &["c"])).unwrap();
        let probs: Vec<Rational> = m.cells().map(|(_, q)| q).collect();
        assert_eq!(probs, vec![r(1, 4); 4]);
    }

    #[test]
    fn parity_given_c0_is_two_cell_correlation() {
        let p = parity();
        let e = p.assignment(&[("c", "0")]).unwrap();
        let q = p.condition_on(&e).unwrap();
        assert_eq!(q.universe().names(), ["a", "b"]);
        let probs: Vec<Rational> = q.cells().map(|(_, x)| x).collect();
        // cells (0,0), (0,1), (1,0), (1,1)
        assert_eq!(probs, vec![r(1, 2), r(0, 1), r(0, 1), r(1, 2)]);
        assert_eq!(p.condition_on(&Assignment::new()).unwrap(), p);
    }

    #[test]
    fn pair_copy_given_c01_is_point_mass() {
        let p = pair_copy();
        let e = p.assignment(&[("c", "(0,1)")]).unwrap();
        let q = p.condition_on(&e).unwrap();
        let support: Vec<Vec<usize>> = q.cells().filter(|(_, x)| !x.is_zero()).map(|(d, _)| d).collect();
        assert_eq!(support, vec![vec![0, 1]]);
    }

    #[test]
    fn zero_evidence_is_an_error() {
        let p = TabularDistribution::from_fn(
            Universe::letters(2).unwrap(),
            vec![vec!["0".into(), "1".into()]; 2],
            |d| u64::from(d[0] == d[1]),
        )
        .unwrap();
        let e = p.assignment(&[("a", "0"), ("b", "1")]).unwrap();
        assert!(matches!(p.condition_on(&e), Err(Error::ZeroEvidence(_))));
    }

    #[test]
    fn parity_set_level_independencies() {
        let p = parity();
        let s = |n: &[&str]| set(&p, n);
        assert!(p.independent(s(&["a"]), s(&["b"]), VarSet::EMPTY).unwrap());
        assert!(!p.independent(s(&["c"]), s(&["a", "b"]), VarSet::EMPTY).unwrap());
        assert!(!p.independent(s(&["a"]), s(&["b"]), s(&["c"])).unwrap());
        assert!(matches!(
            p.independent(s(&["a"]), s(&["a"]), VarSet::EMPTY),
            Err(Error::InvalidTriplet(_))
        ));
    }

    #[test]
    fn value_level_independence() {
        let pc = pair_copy();
        let s = |n: &[&str]| set(&pc, n);
        let z = pc.assignment(&[("c", "(1,0)")]).unwrap();
        assert!(pc.independent_at(s(&["a"]), s(&["b"]), s(&["c"]), &z).unwrap());
        assert!(pc
            .independent_at(s(&["a"]), VarSet::EMPTY, VarSet::EMPTY, &Assignment::new())
            .unwrap());

        let p = parity();
        let s = |n: &[&str]| set(&p, n);
        let z = p.assignment(&[("c", "0")]).unwrap();
        assert!(!p.independent_at(s(&["a"]), s(&["b"]), s(&["c"]), &z).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let p = pair_copy();
        let back = TabularDistribution::from_file(&serde_json::from_str(&p.to_json()).unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn json_rejects_incomplete_and_unnormalized_tables() {
        let missing = r#"{"type":"tabular","variables":[{"name":"a","domain":["0","1"]}],
            "cells":[{"assign":{"a":"0"},"p":"1"}]}"#;
        let f: TabularFile = serde_json::from_str(missing).unwrap();
        assert!(TabularDistribution::from_file(&f).is_err());
        let unnormalized = r#"{"type":"tabular","variables":[{"name":"a","domain":["0","1"]}],
            "cells":[{"assign":{"a":"0"},"p":"1/2"},{"assign":{"a":"1"},"p":"1/3"}]}"#;
        let f: TabularFile = serde_json::from_str(unnormalized).unwrap();
        assert!(TabularDistribution::from_file(&f).is_err());
    }
}
