//! Check reports: every checker records named laws and, for each failure,
//! the basis indices where it breaks.

use serde::Serialize;

use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub law: String,
    pub failures: Vec<Failure>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, indices: impl Into<Vec<usize>>, detail: impl Into<String>) {
        self.failures.push(Failure {
            indices: indices.into(),
            detail: detail.into(),
        });
    }

    /// Records a failure at `indices` unless `ok` holds.
    pub fn expect(&mut self, ok: bool, indices: impl Into<Vec<usize>>, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(indices, detail());
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts a new named check and returns it for recording failures.
    pub fn check(&mut self, name: &str, law: &str) -> &mut Check {
        self.checks.push(Check {
            name: name.to_string(),
            law: law.to_string(),
            failures: Vec::new(),
        });
        self.checks.last_mut().expect("just pushed")
    }

    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// First failure across all checks, with its check name.
    pub fn first_failure(&self) -> Option<(&str, &Failure)> {
        self.checks
            .iter()
            .find_map(|c| c.failures.first().map(|f| (c.name.as_str(), f)))
    }

    /// Appends all checks of `other`, prefixing their names.
    pub fn merge(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}.{}", c.name);
            }
            self.checks.push(c);
        }
    }
}

/// `[k]` for the first coordinate where `got` and `want` differ, empty if equal.
pub fn differing_coordinate(got: &[Scalar], want: &[Scalar]) -> Vec<usize> {
    got.iter()
        .zip(want)
        .position(|(x, y)| x != y)
        .or_else(|| (got.len() != want.len()).then(|| got.len().min(want.len())))
        .map(|k| vec![k])
        .unwrap_or_default()
}

/// `[row, column]` of the first entry where two matrices differ.
pub fn differing_entry(got: &Matrix, want: &Matrix) -> Vec<usize> {
    if got.rows() != want.rows() || got.cols() != want.cols() {
        return vec![got.rows().min(want.rows()), got.cols().min(want.cols())];
    }
    match got.entries().iter().zip(want.entries()).position(|(x, y)| x != y) {
        Some(k) => vec![k / got.cols(), k % got.cols()],
        None => Vec::new(),
    }
}

/// `[0, k]` if basis vector `k` of `a` is outside `b`, `[1, k]` if basis
/// vector `k` of `b` is outside `a`, empty if the spaces agree.
pub fn subspace_difference(a: &Subspace, b: &Subspace) -> Vec<usize> {
    if let Some(k) = a.basis_vectors().iter().position(|v| !b.contains(v)) {
        return vec![0, k];
    }
    match b.basis_vectors().iter().position(|v| !a.contains(v)) {
        Some(k) => vec![1, k],
        None => Vec::new(),
    }
}

/// `[k]` for the first nonzero coordinate of `v`.
pub fn first_nonzero(v: &[Scalar]) -> Vec<usize> {
    v.iter().position(|x| !x.is_zero()).map(|k| vec![k]).unwrap_or_default()
}

/// Locates why a matrix is not invertible: `[0, k]` if a kernel vector has
/// its leading coordinate at `k`, `[1, k]` if coordinate `k` of the target
/// is missed by the image.
pub fn singular_witness(m: &Matrix) -> Vec<usize> {
    let ker = m.kernel();
    if let Some(&k) = ker.pivots().first() {
        return vec![0, k];
    }
    match m.image().free_columns().first() {
        Some(&k) => vec![1, k],
        None => Vec::new(),
    }
}
