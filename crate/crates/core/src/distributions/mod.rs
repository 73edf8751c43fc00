//! Concrete probability models and the dependency models they induce.

pub mod gaussian;
pub mod generate;
pub mod tabular;

use crate::error::{Error, Result};
use crate::graphoid::{DependencyModel, IndependenceOracle};
use crate::triplet::Triplet;
use crate::varset::Universe;

pub use gaussian::{GaussianFile, GaussianModel};
pub use generate::{generate, named_example, GeneratorKind, GeneratorParams, NamedExample};
pub use tabular::{Assignment, Rational, TabularDistribution, TabularFile};

/// Default universe bound for exhaustive triplet enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 6;

/// Either kind of probability model.
#[derive(Clone, Debug, PartialEq)]
pub enum Model {
    Tabular(TabularDistribution),
    Gaussian(GaussianModel),
}

impl Model {
    pub fn universe(&self) -> &Universe {
        match self {
            Model::Tabular(p) => p.universe(),
            Model::Gaussian(g) => g.universe(),
        }
    }

    pub fn into_tabular(self) -> Result<TabularDistribution> {
        match self {
            Model::Tabular(p) => Ok(p),
            Model::Gaussian(_) => Err(Error::input("expected a tabular distribution")),
        }
    }

    pub fn into_gaussian(self) -> Result<GaussianModel> {
        match self {
            Model::Gaussian(g) => Ok(g),
            Model::Tabular(_) => Err(Error::input("expected a Gaussian model")),
        }
    }

    /// Dispatches on the `"type"` field.
    pub fn from_json(text: &str) -> Result<Model> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        match value.get("type").and_then(|t| t.as_str()) {
            Some("tabular") => {
                let file: TabularFile = serde_json::from_value(value)?;
                TabularDistribution::from_file(&file).map(Model::Tabular)
            }
            Some("gaussian") => {
                let file: GaussianFile = serde_json::from_value(value)?;
                GaussianModel::from_file(&file).map(Model::Gaussian)
            }
            Some(other) => Err(Error::input(format!("unknown distribution type `{other}`"))),
            None => Err(Error::input("distribution file lacks a \"type\" field")),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Model::Tabular(p) => p.to_json(),
            Model::Gaussian(g) => g.to_json(),
        }
    }
}

impl IndependenceOracle for Model {
    fn universe(&self) -> &Universe {
        Model::universe(self)
    }

    fn independent(&self, t: &Triplet) -> bool {
        match self {
            Model::Tabular(p) => IndependenceOracle::independent(p, t),
            Model::Gaussian(g) => IndependenceOracle::independent(g, t),
        }
    }
}

/// Every canonical non-trivial triplet over `universe`, in a fixed order.
pub fn all_triplets(universe: &Universe) -> Vec<Triplet> {
    let all = universe.all();
    let mut out = Vec::new();
    for z in all.subsets() {
        let rest = all - z;
        for x in rest.subsets().skip(1) {
            for y in (rest - x).subsets().skip(1) {
                if x < y {
                    out.push(Triplet::raw(x, y, z));
                }
            }
        }
    }
    out
}

/// Queries the oracle on every triplet and returns the explicit model. The
/// closed flag reflects a full closure check of the result.
pub fn induced_model<O: IndependenceOracle + ?Sized>(oracle: &O, cap: usize) -> Result<DependencyModel> {
    let universe = oracle.universe().clone();
    if universe.len() > cap {
        return Err(Error::Capacity {
            what: "triplet enumeration universe",
            requested: universe.len(),
            limit: cap,
        });
    }
    let statements: Vec<Triplet> = all_triplets(&universe)
        .into_iter()
        .filter(|t| oracle.independent(t))
        .collect();
    let mut m = DependencyModel::from_statements(universe, statements)?;
    m.mark_if_closed();
    Ok(m)
}

/// Number of canonical non-trivial triplets over `n` variables; used for
/// progress and sanity checks.
pub fn triplet_count(n: usize) -> usize {
    // assignments of each variable to X, Y, Z or nothing with X, Y nonempty,
    // halved for symmetry
    let n = n as u32;
    let total = 4usize.pow(n);
    let x_empty = 3usize.pow(n);
    let both_empty = 2usize.pow(n);
    (total + both_empty - 2 * x_empty) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphoid::DEFAULT_CLOSURE_CAP;
    use crate::varset::VarSet;

    fn set(u: &Universe, names: &[&str]) -> VarSet {
        u.set(names).unwrap()
    }

    #[test]
    fn triplet_enumeration_count() {
        for n in 0..6 {
            let u = Universe::letters(n).unwrap();
            assert_eq!(all_triplets(&u).len(), triplet_count(n), "n = {n}");
        }
    }

    #[test]
    fn parity_induced_model() {
        let p = named_example(NamedExample::Parity).unwrap();
        let m = induced_model(&p, DEFAULT_ENUMERATION_CAP).unwrap();
        let u = m.universe().clone();
        let t = |x: &[&str], y: &[&str]| Triplet::new(set(&u, x), set(&u, y), VarSet::EMPTY).unwrap();
        assert!(m.contains(&t(&["a"], &["b"])));
        assert!(m.contains(&t(&["a"], &["c"])));
        assert!(m.contains(&t(&["b"], &["c"])));
        assert!(!m.contains(&t(&["c"], &["a", "b"])));
        assert!(m.closed_flag());
    }

    #[test]
    fn single_variable_model_is_trivial() {
        let p = TabularDistribution::from_fn(Universe::letters(1).unwrap(), vec![vec!["0".into(), "1".into()]], |_| 1)
            .unwrap();
        let m = induced_model(&p, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(m.is_empty());
    }

    #[test]
    fn m1_product_contains_m1_closure() {
        let p = named_example(NamedExample::M1Product).unwrap();
        let induced = induced_model(&p, DEFAULT_ENUMERATION_CAP).unwrap();
        let u = induced.universe().clone();
        let seed = Triplet::new(set(&u, &["a", "b"]), set(&u, &["c", "d"]), VarSet::EMPTY).unwrap();
        let closure = DependencyModel::from_statements(u, [seed])
            .unwrap()
            .close(DEFAULT_CLOSURE_CAP)
            .unwrap();
        for t in closure.statements() {
            assert!(induced.contains(&t));
        }
    }

    #[test]
    fn capacity_error_above_bound() {
        let p = generate(GeneratorKind::SpbRandom, 7, 1, &GeneratorParams::default()).unwrap();
        assert!(matches!(
            induced_model(&p, DEFAULT_ENUMERATION_CAP),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn model_json_dispatch() {
        let g = named_example(NamedExample::MarkovChain).unwrap();
        assert_eq!(Model::from_json(&g.to_json()).unwrap(), g);
        assert!(Model::from_json(r#"{"type":"weird"}"#).is_err());
    }
}
