//! Regular Gaussian models: finite means, positive-definite covariance.
//!
//! Conditional independence is read off the conditional covariance
//! `Σ_XY − Σ_XZ Σ_ZZ⁻¹ Σ_ZY`, which does not involve the conditioning value.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphoid::IndependenceOracle;
use crate::triplet::Triplet;
use crate::varset::{Universe, VarSet};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct GaussianModel {
    universe: Universe,
    mean: DVector<f64>,
    covariance: DMatrix<f64>,
    tolerance: f64,
}

impl GaussianModel {
    pub fn new(universe: Universe, mean: DVector<f64>, covariance: DMatrix<f64>, tolerance: f64) -> Result<Self> {
        let n = universe.len();
        if mean.len() != n || covariance.nrows() != n || covariance.ncols() != n {
            return Err(Error::input(format!(
                "mean/covariance dimensions do not match {n} variables"
            )));
        }
        if !(tolerance >= 0.0 && tolerance.is_finite()) {
            return Err(Error::input("tolerance must be a finite nonnegative number"));
        }
        if mean.iter().chain(covariance.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Regularity("non-finite mean or covariance entry".into()));
        }
        for i in 0..n {
            if covariance[(i, i)] <= 0.0 {
                return Err(Error::Regularity(format!(
                    "variance of `{}` is not positive",
                    universe.names()[i]
                )));
            }
            for j in 0..i {
                if (covariance[(i, j)] - covariance[(j, i)]).abs() > tolerance {
                    return Err(Error::Regularity("covariance is not symmetric".into()));
                }
            }
        }
        if covariance.clone().cholesky().is_none() {
            return Err(Error::Regularity("covariance is not positive definite".into()));
        }
        Ok(GaussianModel {
            universe,
            mean,
            covariance,
            tolerance,
        })
    }

    pub fn from_rows(universe: Universe, mean: Vec<f64>, covariance: Vec<Vec<f64>>, tolerance: f64) -> Result<Self> {
        let n = covariance.len();
        if covariance.iter().any(|r| r.len() != n) {
            return Err(Error::input("covariance must be square"));
        }
        let cov = DMatrix::from_fn(n, n, |i, j| covariance[i][j]);
        GaussianModel::new(universe, DVector::from_vec(mean), cov, tolerance)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn mean(&self) -> &DVector<f64> {
        &self.mean
    }

    pub fn covariance(&self) -> &DMatrix<f64> {
        &self.covariance
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    fn block(&self, rows: &[usize], cols: &[usize]) -> DMatrix<f64> {
        DMatrix::from_fn(rows.len(), cols.len(), |i, j| self.covariance[(rows[i], cols[j])])
    }

    /// `Σ_AB − Σ_AZ Σ_ZZ⁻¹ Σ_ZB`.
    fn conditional_block(&self, a: &[usize], b: &[usize], z: &[usize]) -> Result<DMatrix<f64>> {
        let sab = self.block(a, b);
        if z.is_empty() {
            return Ok(sab);
        }
        let chol = self
            .block(z, z)
            .cholesky()
            .ok_or_else(|| Error::Regularity("conditioning block is singular".into()))?;
        let szb = self.block(z, b);
        let saz = self.block(a, z);
        Ok(sab - saz * chol.solve(&szb))
    }

    /// Conditional model over the variables outside `z_set`, given
    /// `z_set = z_value` (values listed in increasing variable order).
    pub fn conditional(&self, z_set: VarSet, z_value: &[f64]) -> Result<GaussianModel> {
        self.universe.check_set(z_set)?;
        if z_value.len() != z_set.len() {
            return Err(Error::input(format!(
                "{} conditioning values for {} variables",
                z_value.len(),
                z_set.len()
            )));
        }
        if z_set.is_empty() {
            return Ok(self.clone());
        }
        let rest = (self.universe.all() - z_set).to_indices();
        let z = z_set.to_indices();
        let chol = self
            .block(&z, &z)
            .cholesky()
            .ok_or_else(|| Error::Regularity("conditioning block is singular".into()))?;
        let s_rz = self.block(&rest, &z);
        let s_zr = self.block(&z, &rest);
        let cov = self.block(&rest, &rest) - &s_rz * chol.solve(&s_zr);
        let dz = DVector::from_fn(z.len(), |i, _| z_value[i] - self.mean[z[i]]);
        let shift = &s_rz * chol.solve(&dz);
        let mean = DVector::from_fn(rest.len(), |i, _| self.mean[rest[i]] + shift[i]);
        // symmetrize away round-off before re-validating
        let cov = (&cov + cov.transpose()) * 0.5;
        GaussianModel::new(
            self.universe.restrict(self.universe.all() - z_set),
            mean,
            cov,
            self.tolerance,
        )
    }

    /// Conditional covariance between `x` and `y` given `z`.
    pub fn conditional_cross_covariance(&self, x: VarSet, y: VarSet, z: VarSet) -> Result<DMatrix<f64>> {
        Triplet::new(x, y, z)?;
        self.universe.check_set(x | y | z)?;
        self.conditional_block(&x.to_indices(), &y.to_indices(), &z.to_indices())
    }

    /// True iff every conditional correlation between a member of `x` and a
    /// member of `y` given `z` is within tolerance of zero.
    pub fn independent(&self, x: VarSet, y: VarSet, z: VarSet) -> Result<bool> {
        Triplet::new(x, y, z)?;
        self.universe.check_set(x | y | z)?;
        if x.is_empty() || y.is_empty() {
            return Ok(true);
        }
        let xs = x.to_indices();
        let ys = y.to_indices();
        let zs = z.to_indices();
        let cross = self.conditional_block(&xs, &ys, &zs)?;
        let var_x = self.conditional_block(&xs, &xs, &zs)?;
        let var_y = self.conditional_block(&ys, &ys, &zs)?;
        for i in 0..xs.len() {
            for j in 0..ys.len() {
                let scale = (var_x[(i, i)] * var_y[(j, j)]).sqrt();
                if scale.is_nan() || scale <= 0.0 {
                    return Err(Error::Regularity("zero conditional variance".into()));
                }
                if (cross[(i, j)] / scale).abs() > self.tolerance {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn to_file(&self) -> GaussianFile {
        let n = self.universe.len();
        GaussianFile {
            kind: GaussianTag::Gaussian,
            variables: self.universe.names().to_vec(),
            mean: self.mean.iter().copied().collect(),
            covariance: (0..n)
                .map(|i| (0..n).map(|j| self.covariance[(i, j)]).collect())
                .collect(),
            tolerance: self.tolerance,
        }
    }

    pub fn from_file(file: &GaussianFile) -> Result<Self> {
        GaussianModel::from_rows(
            Universe::new(file.variables.iter().cloned())?,
            file.mean.clone(),
            file.covariance.clone(),
            file.tolerance,
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("model serializes")
    }
}

impl IndependenceOracle for GaussianModel {
    fn universe(&self) -> &Universe {
        &self.universe
    }

    fn independent(&self, t: &Triplet) -> bool {
        GaussianModel::independent(self, t.x(), t.y(), t.z())
            .expect("principal blocks of a positive-definite covariance are regular")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GaussianTag {
    Gaussian,
}

fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GaussianFile {
    #[serde(rename = "type")]
    pub kind: GaussianTag,
    pub variables: Vec<String>,
    pub mean: Vec<f64>,
    pub covariance: Vec<Vec<f64>>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
}
