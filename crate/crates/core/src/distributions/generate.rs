//! Seeded fixture generators.
//!
//! Every generator draws from a ChaCha8 stream seeded with the `u64` seed, in
//! a fixed draw order, so output is reproducible bit-for-bit across runs and
//! platforms. [`GENERATOR_SCHEME`] names the scheme and is echoed in reports;
//! any change to draw order must bump it.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::gaussian::{GaussianModel, DEFAULT_TOLERANCE};
use super::tabular::TabularDistribution;
use super::Model;
use crate::error::{Error, Result};
use crate::varset::{Universe, VarSet};

pub const GENERATOR_SCHEME: &str = "chacha8-u64seed-v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedExample {
    /// `a`, `b` fair independent bits, `c = a xor b`.
    Parity,
    /// `a`, `b` fair independent bits, `c = (a, b)` over four values.
    PairCopy,
    /// `P(a, b)·P(c, d)` with both factors dependent.
    M1Product,
    /// Gaussian chain with covariance `[[1,.5,.25],[.5,1,.5],[.25,.5,1]]`.
    MarkovChain,
}

impl FromStr for NamedExample {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "parity" => Ok(NamedExample::Parity),
            "pair-copy" => Ok(NamedExample::PairCopy),
            "m1-product" => Ok(NamedExample::M1Product),
            "markov-chain" => Ok(NamedExample::MarkovChain),
            other => Err(Error::input(format!("unknown named example `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    SpbRandom,
    SpbBlockProduct,
    GaussianRandom,
    GaussianBlock,
    NamedExample(NamedExample),
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spb-random" => Ok(GeneratorKind::SpbRandom),
            "spb-block-product" => Ok(GeneratorKind::SpbBlockProduct),
            "gaussian-random" => Ok(GeneratorKind::GaussianRandom),
            "gaussian-block" => Ok(GeneratorKind::GaussianBlock),
            other => match other.strip_prefix("named-example:") {
                Some(name) => Ok(GeneratorKind::NamedExample(name.parse()?)),
                None => Err(Error::input(format!("unknown generator kind `{other}`"))),
            },
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKind::SpbRandom => f.write_str("spb-random"),
            GeneratorKind::SpbBlockProduct => f.write_str("spb-block-product"),
            GeneratorKind::GaussianRandom => f.write_str("gaussian-random"),
            GeneratorKind::GaussianBlock => f.write_str("gaussian-block"),
            GeneratorKind::NamedExample(e) => write!(
                f,
                "named-example:{}",
                serde_json::to_value(e).unwrap().as_str().unwrap()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorParams {
    /// Cell weights are drawn uniformly from `1..=weight_max`.
    pub weight_max: u64,
    /// Partition of the variables for the block kinds.
    pub blocks: Option<Vec<VarSet>>,
    /// Ridge added to `A·Aᵀ` for Gaussian kinds.
    pub epsilon: f64,
    pub tolerance: f64,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        GeneratorParams {
            weight_max: 16,
            blocks: None,
            epsilon: 0.1,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

/// Deterministic in `(kind, n, seed, params)`. Named examples ignore `n` and
/// `seed`.
pub fn generate(kind: GeneratorKind, n: usize, seed: u64, params: &GeneratorParams) -> Result<Model> {
    if let GeneratorKind::NamedExample(e) = kind {
        return named_example(e);
    }
    if n == 0 {
        return Err(Error::input("at least one variable is required"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        GeneratorKind::SpbRandom => spb_product(n, &[VarSet::full(n)], params, &mut rng).map(Model::Tabular),
        GeneratorKind::SpbBlockProduct => {
            let blocks = required_blocks(n, params)?;
            spb_product(n, &blocks, params, &mut rng).map(Model::Tabular)
        }
        GeneratorKind::GaussianRandom => gaussian_blocks(n, &[VarSet::full(n)], params, &mut rng).map(Model::Gaussian),
        GeneratorKind::GaussianBlock => {
            let blocks = required_blocks(n, params)?;
            gaussian_blocks(n, &blocks, params, &mut rng).map(Model::Gaussian)
        }
        GeneratorKind::NamedExample(_) => unreachable!(),
    }
}

fn required_blocks(n: usize, params: &GeneratorParams) -> Result<Vec<VarSet>> {
    let blocks = params
        .blocks
        .clone()
        .ok_or_else(|| Error::input("block generators need a block partition"))?;
    check_partition(n, &blocks)?;
    Ok(blocks)
}

/// Blocks must be nonempty, disjoint, and cover `0..n`.
pub fn check_partition(n: usize, blocks: &[VarSet]) -> Result<()> {
    let mut seen = VarSet::EMPTY;
    for b in blocks {
        if b.is_empty() || !b.is_disjoint(seen) {
            return Err(Error::input("invalid block spec: blocks must be nonempty and disjoint"));
        }
        seen = seen | *b;
    }
    if seen != VarSet::full(n) {
        return Err(Error::input(format!(
            "invalid block spec: blocks must cover all {n} variables"
        )));
    }
    Ok(())
}

/// Parses `a,b|c,d` against a universe.
pub fn parse_blocks(spec: &str, universe: &Universe) -> Result<Vec<VarSet>> {
    let blocks = spec
        .split('|')
        .map(|part| {
            let names: Vec<&str> = part.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            universe.set(&names)
        })
        .collect::<Result<Vec<_>>>()?;
    check_partition(universe.len(), &blocks)?;
    Ok(blocks)
}

/// A random partition of `0..n` into between one and `n` blocks.
pub fn random_partition(n: usize, seed: u64) -> Vec<VarSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(1..=n.max(1));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut blocks = vec![VarSet::EMPTY; k];
    // the first k variables seed distinct blocks, the rest land anywhere
    for (pos, &v) in order.iter().enumerate() {
        let b = if pos < k { pos } else { rng.random_range(0..k) };
        blocks[b] = blocks[b] | VarSet::from_indices([v]);
    }
    blocks.sort();
    blocks
}

fn binary_domains(n: usize) -> Vec<Vec<String>> {
    vec![vec!["0".to_string(), "1".to_string()]; n]
}

fn spb_product(
    n: usize,
    blocks: &[VarSet],
    params: &GeneratorParams,
    rng: &mut ChaCha8Rng,
) -> Result<TabularDistribution> {
    if params.weight_max == 0 {
        return Err(Error::input("weight_max must be at least 1"));
    }
    let tables: Vec<Vec<u64>> = blocks
        .iter()
        .map(|b| {
            (0..1usize << b.len())
                .map(|_| rng.random_range(1..=params.weight_max))
                .collect()
        })
        .collect();
    let members: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_indices()).collect();
    let universe = Universe::letters(n)?;
    let space = 1usize << n;
    let weights = (0..space)
        .map(|cell| {
            // first variable is the most significant digit
            let digit = |v: usize| (cell >> (n - 1 - v)) & 1;
            let mut w = BigUint::from(1u32);
            for (table, vars) in tables.iter().zip(&members) {
                let idx = vars.iter().fold(0, |acc, &v| (acc << 1) | digit(v));
                w *= table[idx];
            }
            w
        })
        .collect();
    TabularDistribution::from_weights(universe, binary_domains(n), weights)
}

fn gaussian_blocks(
    n: usize,
    blocks: &[VarSet],
    params: &GeneratorParams,
    rng: &mut ChaCha8Rng,
) -> Result<GaussianModel> {
    let mut cov = DMatrix::<f64>::zeros(n, n);
    for b in blocks {
        let idx = b.to_indices();
        let k = idx.len();
        let a = DMatrix::from_fn(k, k, |_, _| rng.random_range(-1.0..1.0));
        let local = &a * a.transpose() + DMatrix::identity(k, k) * params.epsilon;
        for i in 0..k {
            for j in 0..k {
                cov[(idx[i], idx[j])] = local[(i, j)];
            }
        }
    }
    let mean = DVector::from_fn(n, |_, _| rng.random_range(-1.0..1.0));
    GaussianModel::new(Universe::numbered("x", n)?, mean, cov, params.tolerance)
}

pub fn named_example(e: NamedExample) -> Result<Model> {
    let bits = || vec!["0".to_string(), "1".to_string()];
    match e {
        NamedExample::Parity => {
            TabularDistribution::from_fn(Universe::letters(3)?, vec![bits(), bits(), bits()], |d| {
                u64::from(d[2] == d[0] ^ d[1])
            })
            .map(Model::Tabular)
        }
        NamedExample::PairCopy => TabularDistribution::from_fn(
            Universe::letters(3)?,
            vec![
                bits(),
                bits(),
                ["(0,0)", "(0,1)", "(1,0)", "(1,1)"].map(String::from).to_vec(),
            ],
            |d| u64::from(d[2] == 2 * d[0] + d[1]),
        )
        .map(Model::Tabular),
        NamedExample::M1Product => {
            const AB: [[u64; 2]; 2] = [[3, 1], [1, 3]];
            const CD: [[u64; 2]; 2] = [[1, 2], [2, 1]];
            TabularDistribution::from_fn(Universe::letters(4)?, vec![bits(); 4], |d| {
                AB[d[0]][d[1]] * CD[d[2]][d[3]]
            })
            .map(Model::Tabular)
        }
        NamedExample::MarkovChain => GaussianModel::from_rows(
            Universe::numbered("x", 3)?,
            vec![0.0; 3],
            vec![vec![1.0, 0.5, 0.25], vec![0.5, 1.0, 0.5], vec![0.25, 0.5, 1.0]],
            DEFAULT_TOLERANCE,
        )
        .map(Model::Gaussian),
    }
}
