//! Seeded verification suites. Each suite generates fixtures, runs one family
//! of checks on them and reports per-trial verdicts.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::distributions::generate::{random_partition, GENERATOR_SCHEME};
use crate::distributions::{
    all_triplets, generate, named_example, GeneratorKind, GeneratorParams, Model, NamedExample, DEFAULT_ENUMERATION_CAP,
};
use crate::error::{Error, Result};
use crate::graphoid::{CachedOracle, DependencyModel, IndependenceOracle, DEFAULT_CLOSURE_CAP};
use crate::instantiated::{check_propositional_transitivity, InstantiatedModel, DEFAULT_PROPTRANS_CAP};
use crate::network::{BeliefNetwork, ParentChoice, DEFAULT_TRAIL_CAP};
use crate::triplet::Triplet;
use crate::unrelatedness::{
    pairs, separability_violation, totally_independent_pair, totally_independent_sets, totally_uncoupled_pair,
    totally_uncoupled_sets, transitivity_violation, PairVerdict, DEFAULT_PARTITION_CAP,
};
use crate::varset::{Universe, VarSet, VariableId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Thm1,
    Thm3,
    Thm4,
    Thm5Spb,
    Thm5Gauss,
    Thm6,
    Thm7,
    Lemma2,
    Lemma8,
    Counterexamples,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Thm1,
        Suite::Thm3,
        Suite::Thm4,
        Suite::Thm5Spb,
        Suite::Thm5Gauss,
        Suite::Thm6,
        Suite::Thm7,
        Suite::Lemma2,
        Suite::Lemma8,
        Suite::Counterexamples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm3 => "thm3",
            Suite::Thm4 => "thm4",
            Suite::Thm5Spb => "thm5-spb",
            Suite::Thm5Gauss => "thm5-gauss",
            Suite::Thm6 => "thm6",
            Suite::Thm7 => "thm7",
            Suite::Lemma2 => "lemma2",
            Suite::Lemma8 => "lemma8",
            Suite::Counterexamples => "counterexamples",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::input(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentConfig {
    pub suite: Suite,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// Orderings compared per fixture in the ordering-invariance suite. When
    /// absent, every ordering is used up to five variables and 50 sampled
    /// ones above.
    pub orderings: Option<usize>,
    pub tolerance: f64,
    pub closure_cap: usize,
    pub enumeration_cap: usize,
    pub partition_cap: usize,
    pub proptrans_cap: usize,
    pub trail_cap: usize,
    pub generator_scheme: &'static str,
}

impl ExperimentConfig {
    pub fn new(suite: Suite, n: usize, trials: usize, seed: u64) -> Self {
        ExperimentConfig {
            suite,
            n,
            trials,
            seed,
            orderings: None,
            tolerance: 1e-9,
            closure_cap: DEFAULT_CLOSURE_CAP,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            partition_cap: DEFAULT_PARTITION_CAP,
            proptrans_cap: DEFAULT_PROPTRANS_CAP,
            trail_cap: DEFAULT_TRAIL_CAP,
            generator_scheme: GENERATOR_SCHEME,
        }
    }

    fn check_caps(&self) -> Result<()> {
        let cap = |what: &'static str, limit: usize| {
            if self.n > limit {
                Err(Error::Capacity {
                    what,
                    requested: self.n,
                    limit,
                })
            } else {
                Ok(())
            }
        };
        if self.suite != Suite::Counterexamples && self.n < 2 {
            return Err(Error::input("suites need at least two variables"));
        }
        match self.suite {
            Suite::Thm1 | Suite::Thm4 | Suite::Lemma2 | Suite::Lemma8 => {
                cap("closure universe", self.closure_cap)?;
                cap("partition scan universe", self.partition_cap)
            }
            Suite::Thm3 => cap("partition scan universe", self.partition_cap),
            Suite::Thm5Spb | Suite::Thm5Gauss | Suite::Thm6 => {
                cap("propositional transitivity universe", self.proptrans_cap)
            }
            Suite::Thm7 => cap("triplet enumeration universe", self.enumeration_cap),
            Suite::Counterexamples => Ok(()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialVerdict {
    pub trial: usize,
    pub seed: u64,
    pub fixtures: Vec<String>,
    pub pass: bool,
    pub checks: u64,
    pub antecedent_hits: u64,
    pub skipped: u64,
    pub counterexample: Option<Json>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub suite: Suite,
    pub config: ExperimentConfig,
    pub pass: bool,
    pub checks: u64,
    pub antecedent_hits: u64,
    pub skipped: u64,
    pub trials: Vec<TrialVerdict>,
    pub first_counterexample: Option<Json>,
    /// Kept out of the JSON so output is reproducible byte for byte.
    #[serde(skip)]
    pub wall_time: std::time::Duration,
}

/// Per-trial seeds drawn from one generator seeded with `seed`.
pub fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| rng.random()).collect()
}

/// Strictly positive binary distribution: a block product over a random
/// partition on even trials, a single random block on odd ones.
pub fn spb_fixture(n: usize, seed: u64, trial: usize) -> Result<(String, Model)> {
    if trial.is_multiple_of(2) {
        let blocks = random_partition(n, seed);
        let params = GeneratorParams {
            blocks: Some(blocks.clone()),
            ..GeneratorParams::default()
        };
        let m = generate(GeneratorKind::SpbBlockProduct, n, seed, &params)?;
        let label = format!(
            "spb-block-product n={n} seed={seed} blocks={}",
            describe_blocks(m.universe(), &blocks)
        );
        Ok((label, m))
    } else {
        let m = generate(GeneratorKind::SpbRandom, n, seed, &GeneratorParams::default())?;
        Ok((format!("spb-random n={n} seed={seed}"), m))
    }
}

/// Regular Gaussian, block-diagonal on even trials and dense on odd ones.
pub fn gaussian_fixture(n: usize, seed: u64, trial: usize, tolerance: f64) -> Result<(String, Model)> {
    let mut params = GeneratorParams {
        tolerance,
        ..GeneratorParams::default()
    };
    if trial.is_multiple_of(2) {
        let blocks = random_partition(n, seed);
        params.blocks = Some(blocks.clone());
        let m = generate(GeneratorKind::GaussianBlock, n, seed, &params)?;
        let label = format!(
            "gaussian-block n={n} seed={seed} blocks={}",
            describe_blocks(m.universe(), &blocks)
        );
        Ok((label, m))
    } else {
        let m = generate(GeneratorKind::GaussianRandom, n, seed, &params)?;
        Ok((format!("gaussian-random n={n} seed={seed}"), m))
    }
}

fn describe_blocks(u: &Universe, blocks: &[VarSet]) -> String {
    blocks.iter().map(|b| u.set_names(*b).join(",")).join("|")
}

/// Closure of a few random statements over `n` letters. About half of the
/// seeds split the whole universe marginally, so uncoupled pairs are common.
pub fn closed_model_fixture(n: usize, seed: u64, closure_cap: usize) -> Result<(String, DependencyModel)> {
    let universe = Universe::letters(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates = all_triplets(&universe);
    let k = rng.random_range(1..=3);
    let mut seeds = Vec::new();
    for _ in 0..k {
        if rng.random_bool(0.5) {
            let bits = rng.random_range(1..(1u32 << n) - 1);
            let x = VarSet::from_bits(bits);
            seeds.push(Triplet::new(x, universe.all() - x, VarSet::EMPTY)?);
        } else {
            seeds.push(candidates[rng.random_range(0..candidates.len())]);
        }
    }
    let label = format!(
        "closed-model n={n} seed={seed} seeds=[{}]",
        seeds.iter().map(|t| t.display(&universe).to_string()).join(", ")
    );
    let m = DependencyModel::from_statements(universe, seeds)?.close(closure_cap)?;
    Ok((label, m))
}

#[derive(Default)]
struct Tally {
    checks: u64,
    hits: u64,
    skipped: u64,
    counterexample: Option<Json>,
}

impl Tally {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> Json) {
        self.checks += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(detail());
        }
    }
}

fn names(u: &Universe, s: VarSet) -> Vec<String> {
    u.set_names(s)
}

fn component_names(u: &Universe, comps: &[VarSet]) -> Vec<Vec<String>> {
    comps.iter().map(|c| names(u, *c)).collect()
}

fn orderings_for(n: usize, requested: Option<usize>, seed: u64) -> Vec<Vec<VariableId>> {
    let ids: Vec<VariableId> = (0..n).map(VariableId::new).collect();
    let exhaustive = match requested {
        None => n <= 5,
        Some(k) => (1..=n).product::<usize>() <= k,
    };
    if exhaustive {
        return ids.iter().copied().permutations(n).collect();
    }
    let k = requested.unwrap_or(50);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0000_0000_0001);
    (0..k)
        .map(|_| {
            let mut o = ids.clone();
            o.shuffle(&mut rng);
            o
        })
        .collect()
}

/// Components agree across orderings and across minimal-parent choices.
fn check_ordering_invariance<O: IndependenceOracle + ?Sized>(
    oracle: &O,
    orderings: &[Vec<VariableId>],
    t: &mut Tally,
) -> Result<()> {
    let u = oracle.universe();
    let reference = BeliefNetwork::build(oracle, &orderings[0])?.connected_components();
    for o in orderings {
        for choice in [ParentChoice::Smallest, ParentChoice::LastMinimal] {
            if choice == ParentChoice::LastMinimal && o != &orderings[0] {
                continue;
            }
            let comps = BeliefNetwork::build_with(oracle, o, choice)?.connected_components();
            t.check(comps == reference, || {
                json!({
                    "ordering": o.iter().map(|&v| u.name(v)).collect::<Vec<_>>(),
                    "choice": format!("{choice:?}"),
                    "components": component_names(u, &comps),
                    "reference": component_names(u, &reference),
                })
            });
        }
    }
    Ok(())
}

fn check_pair_verdicts<O: IndependenceOracle + ?Sized>(oracle: &O, cap: usize, t: &mut Tally) -> Result<()> {
    let u = oracle.universe();
    for (a, b) in pairs(u) {
        let v = PairVerdict::compute(oracle, a, b, cap)?;
        t.check(v.consistent(), || {
            serde_json::to_value(v.to_json(u)).expect("verdict serializes")
        });
    }
    Ok(())
}

fn check_separable_iff_transitive<O: IndependenceOracle + ?Sized>(oracle: &O, cap: usize, t: &mut Tally) -> Result<()> {
    let u = oracle.universe();
    let sep = separability_violation(oracle, cap)?;
    let trans = transitivity_violation(oracle);
    t.check(sep.is_none() == trans.is_none(), || {
        json!({
            "separable": sep.is_none(),
            "separability_counterexample": sep.map(|(a, b)| [u.name(a), u.name(b)]),
            "transitive": trans.is_none(),
            "transitivity_counterexample": trans.map(|(a, b, c)| [u.name(a), u.name(b), u.name(c)]),
        })
    });
    Ok(())
}

/// Propositional transitivity for every pair, then separability.
fn check_proptrans_and_separability(model: &Model, cfg: &ExperimentConfig, t: &mut Tally) -> Result<()> {
    let inst = InstantiatedModel::from(model.clone());
    let mut all_pass = true;
    for (a, b) in pairs(model.universe()) {
        let r = check_propositional_transitivity(&inst, a, b, cfg.proptrans_cap)?;
        t.hits += r.antecedent_hits;
        t.skipped += r.skipped;
        all_pass &= r.pass;
        t.check(r.pass, || serde_json::to_value(&r).expect("report serializes"));
    }
    let cached = CachedOracle::new(model);
    let sep = separability_violation(&cached, cfg.partition_cap)?;
    let u = model.universe();
    t.check(
        !all_pass || sep.is_none(),
        || json!({ "not_separable": sep.map(|(a, b)| [u.name(a), u.name(b)]) }),
    );
    Ok(())
}

/// d-separation implies independence and agrees with trail enumeration.
fn check_dsep_soundness<O: IndependenceOracle + ?Sized>(
    oracle: &O,
    ordering: &[VariableId],
    trail_cap: usize,
    t: &mut Tally,
) -> Result<()> {
    let u = oracle.universe();
    let net = BeliefNetwork::build(oracle, ordering)?;
    for tr in all_triplets(u) {
        let sep = net.d_separated(tr.x(), tr.y(), tr.z())?;
        let trails = net.enumerate_active_trails(tr.x(), tr.y(), tr.z(), trail_cap)?;
        let detail = || {
            json!({
                "triplet": tr.display(u).to_string(),
                "d_separated": sep,
                "active_trails": trails.iter().map(|p| p.display(u).to_string()).collect::<Vec<_>>(),
                "edges": net.edges().iter().map(|e| format!("{}->{}", u.name(e.from), u.name(e.to))).collect::<Vec<_>>(),
            })
        };
        t.check(sep == trails.is_empty(), detail);
        t.check(!sep || oracle.independent(&tr), detail);
    }
    Ok(())
}

/// Composition of total independence and of set-level uncoupledness.
fn check_composition<O: IndependenceOracle + ?Sized>(oracle: &O, cap: usize, t: &mut Tally) -> Result<()> {
    let u = oracle.universe();
    let all = u.all();
    for a in all.subsets().skip(1) {
        let rest = all - a;
        for b in rest.subsets().skip(1) {
            for c in (rest - b).subsets().skip(1) {
                if c < b {
                    continue;
                }
                let ind = |s: VarSet| totally_independent_sets(oracle, a, s);
                if ind(b)? && ind(c)? {
                    let ok = ind(b | c)?;
                    t.check(ok, || {
                        json!({ "property": "total independence", "A": names(u, a), "B": names(u, b), "C": names(u, c) })
                    });
                }
                let unc = |s: VarSet| totally_uncoupled_sets(oracle, a, s, cap).map(|w| w.is_some());
                if unc(b)? && unc(c)? {
                    let ok = unc(b | c)?;
                    t.check(ok, || {
                        json!({ "property": "total uncoupledness", "A": names(u, a), "B": names(u, b), "C": names(u, c) })
                    });
                }
            }
        }
    }
    Ok(())
}

/// Every component of the built network is marginally independent of the
/// rest.
fn check_components_independent<O: IndependenceOracle + ?Sized>(
    oracle: &O,
    ordering: &[VariableId],
    t: &mut Tally,
) -> Result<()> {
    let u = oracle.universe();
    let comps = BeliefNetwork::build(oracle, ordering)?.connected_components();
    if comps.len() < 2 {
        return Ok(());
    }
    for &c in &comps {
        let tr = Triplet::new(c, u.all() - c, VarSet::EMPTY)?;
        t.check(
            oracle.independent(&tr),
            || json!({ "components": component_names(u, &comps), "failed": names(u, c) }),
        );
    }
    Ok(())
}

fn random_ordering(n: usize, seed: u64) -> Vec<VariableId> {
    let mut o: Vec<VariableId> = (0..n).map(VariableId::new).collect();
    o.shuffle(&mut ChaCha8Rng::seed_from_u64(seed.rotate_left(17)));
    o
}

fn counterexamples(t: &mut Tally, fixtures: &mut Vec<String>) -> Result<()> {
    let pc = named_example(NamedExample::PairCopy)?;
    fixtures.push("named-example:pair-copy".into());
    let u = pc.universe().clone();
    let id = |n: &str| u.id(n);
    let (a, b, c) = (id("a")?, id("b")?, id("c")?);
    let indep = totally_independent_pair(&pc, a, b)?;
    let coupled = totally_uncoupled_pair(&pc, a, b, DEFAULT_PARTITION_CAP)?.is_none();
    let connected = !crate::unrelatedness::totally_disconnected_pair(&pc, a, b)?.0;
    let sep = separability_violation(&pc, DEFAULT_PARTITION_CAP)?;
    let trans = transitivity_violation(&pc);
    let expected = indep && coupled && connected && sep == Some((a, b)) && trans == Some((a, c, b));
    t.check(expected, || {
        json!({
            "fixture": "pair-copy",
            "totally_independent_ab": indep,
            "coupled_ab": coupled,
            "connected_ab": connected,
            "separability_counterexample": sep.map(|(x, y)| [u.name(x), u.name(y)]),
            "transitivity_counterexample": trans.map(|(x, y, z)| [u.name(x), u.name(y), u.name(z)]),
        })
    });

    let par = named_example(NamedExample::Parity)?;
    fixtures.push("named-example:parity".into());
    let u = par.universe().clone();
    let s = |n: &[&str]| u.set(n);
    let single = par.independent_sets(s(&["c"])?, s(&["a"])?, VarSet::EMPTY)?
        && par.independent_sets(s(&["c"])?, s(&["b"])?, VarSet::EMPTY)?;
    let joint = par.independent_sets(s(&["c"])?, s(&["a", "b"])?, VarSet::EMPTY)?;
    t.check(
        single && !joint,
        || json!({ "fixture": "parity", "c_indep_each": single, "c_indep_ab": joint }),
    );
    Ok(())
}

fn run_trial(cfg: &ExperimentConfig, trial: usize, seed: u64) -> Result<TrialVerdict> {
    let mut t = Tally::default();
    let mut fixtures = Vec::new();
    let n = cfg.n;
    let canonical: Vec<VariableId> = (0..n).map(VariableId::new).collect();
    match cfg.suite {
        Suite::Thm1 => {
            if trial.is_multiple_of(2) {
                let (label, m) = closed_model_fixture(n, seed, cfg.closure_cap)?;
                fixtures.push(label);
                check_separable_iff_transitive(&m, cfg.partition_cap, &mut t)?;
            } else {
                let (label, p) = spb_fixture(n, seed, trial / 2)?;
                fixtures.push(label);
                check_separable_iff_transitive(&CachedOracle::new(&p), cfg.partition_cap, &mut t)?;
            }
        }
        Suite::Thm3 => {
            let (label, p) = spb_fixture(n, seed, trial)?;
            fixtures.push(label);
            let orderings = orderings_for(n, cfg.orderings, seed);
            check_ordering_invariance(&CachedOracle::new(&p), &orderings, &mut t)?;
        }
        Suite::Thm4 => {
            let (label, p) = spb_fixture(n, seed, trial)?;
            fixtures.push(label);
            check_pair_verdicts(&CachedOracle::new(&p), cfg.partition_cap, &mut t)?;
            let (label, m) = closed_model_fixture(n, seed, cfg.closure_cap)?;
            fixtures.push(label);
            check_pair_verdicts(&m, cfg.partition_cap, &mut t)?;
        }
        Suite::Thm5Spb => {
            let (label, p) = spb_fixture(n, seed, trial)?;
            fixtures.push(label);
            check_proptrans_and_separability(&p, cfg, &mut t)?;
        }
        Suite::Thm5Gauss => {
            let (label, g) = gaussian_fixture(n, seed, trial, cfg.tolerance)?;
            fixtures.push(label);
            check_proptrans_and_separability(&g, cfg, &mut t)?;
        }
        Suite::Thm6 => {
            let (label, m) = if trial.is_multiple_of(2) {
                spb_fixture(n, seed, trial / 2)?
            } else {
                gaussian_fixture(n, seed, trial / 2, cfg.tolerance)?
            };
            fixtures.push(label);
            check_proptrans_and_separability(&m, cfg, &mut t)?;
        }
        Suite::Thm7 => {
            let (label, p) = spb_fixture(n, seed, trial)?;
            fixtures.push(label);
            let cached = CachedOracle::new(&p);
            check_dsep_soundness(&cached, &canonical, cfg.trail_cap, &mut t)?;
            check_dsep_soundness(&cached, &random_ordering(n, seed), cfg.trail_cap, &mut t)?;
        }
        Suite::Lemma2 => {
            let (label, m) = closed_model_fixture(n, seed, cfg.closure_cap)?;
            fixtures.push(label);
            check_composition(&m, cfg.partition_cap, &mut t)?;
        }
        Suite::Lemma8 => {
            let (label, p) = spb_fixture(n, seed, trial)?;
            fixtures.push(label);
            check_components_independent(&CachedOracle::new(&p), &random_ordering(n, seed), &mut t)?;
            let (label, m) = closed_model_fixture(n, seed, cfg.closure_cap)?;
            fixtures.push(label);
            check_components_independent(&m, &random_ordering(n, seed), &mut t)?;
        }
        Suite::Counterexamples => counterexamples(&mut t, &mut fixtures)?,
    }
    Ok(TrialVerdict {
        trial,
        seed,
        fixtures,
        pass: t.counterexample.is_none(),
        checks: t.checks,
        antecedent_hits: t.hits,
        skipped: t.skipped,
        counterexample: t.counterexample,
    })
}

/// Runs every trial, in parallel, and assembles the report in trial order.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.check_caps()?;
    let start = std::time::Instant::now();
    let trials = if cfg.suite == Suite::Counterexamples {
        1
    } else {
        cfg.trials
    };
    let seeds = trial_seeds(cfg.seed, trials);
    let verdicts = seeds
        .par_iter()
        .enumerate()
        .map(|(i, &s)| run_trial(cfg, i, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport {
        suite: cfg.suite,
        config: cfg.clone(),
        pass: verdicts.iter().all(|v| v.pass),
        checks: verdicts.iter().map(|v| v.checks).sum(),
        antecedent_hits: verdicts.iter().map(|v| v.antecedent_hits).sum(),
        skipped: verdicts.iter().map(|v| v.skipped).sum(),
        first_counterexample: verdicts.iter().find_map(|v| v.counterexample.clone()),
        trials: verdicts,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("thm2".parse::<Suite>().is_err());
    }

    #[test]
    fn counterexamples_suite_passes() {
        let r = run_experiment(&ExperimentConfig::new(Suite::Counterexamples, 3, 5, 0)).unwrap();
        assert!(r.pass);
        assert_eq!(r.trials.len(), 1);
        assert_eq!(r.checks, 2);
    }

    #[test]
    fn runs_are_deterministic() {
        let cfg = ExperimentConfig::new(Suite::Thm4, 4, 3, 9);
        let a = serde_json::to_string(&run_experiment(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&run_experiment(&cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn caps_are_enforced() {
        let cfg = ExperimentConfig::new(Suite::Thm5Spb, 7, 1, 0);
        assert!(matches!(run_experiment(&cfg), Err(Error::Capacity { .. })));
    }

    #[test]
    fn sampled_orderings_are_permutations() {
        let os = orderings_for(6, None, 3);
        assert_eq!(os.len(), 50);
        for o in os {
            let mut s = o.clone();
            s.sort();
            assert_eq!(s, (0..6).map(VariableId::new).collect::<Vec<_>>());
        }
        assert_eq!(orderings_for(4, None, 3).len(), 24);
    }
}
