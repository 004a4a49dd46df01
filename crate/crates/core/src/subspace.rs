//! Subspaces in canonical reduced-echelon form, lattice operations, and
//! exhaustive enumeration over finite fields.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{vector, Matrix};

/// Environment variable overriding the enumeration cap (dimension over `F_2`).
pub const MAX_ENUM_DIM_ENV: &str = "FROBLAB_MAX_ENUM_DIM";

/// Incrementally maintained reduced row-echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: FieldSpec, ambient: usize) -> Self {
        Echelon {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    x.sub_mul(&factor, y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[c].inv().expect("nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    x.sub_mul(&factor, y);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.pivots.insert(at, c);
        self.rows.insert(at, v);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace {
            basis: Matrix::from_rows(self.field, self.ambient, self.rows),
            pivots: self.pivots,
            field: self.field,
            ambient: self.ambient,
        }
    }
}

/// A subspace of `field^ambient`, stored by its unique reduced echelon basis,
/// so equality of subspaces is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Echelon::new(field, ambient).into_subspace()
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Self::span(field, ambient, (0..ambient).map(|k| field.unit_vector(ambient, k)))
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            if e.dim() == ambient {
                break;
            }
            e.insert(&v);
        }
        e.into_subspace()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates complementary to the pivots; they index a canonical
    /// complement and therefore the quotient `ambient / self`.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Matrix `ambient -> ambient / self` in the free-column coordinates.
    pub fn quotient_projection(&self) -> Matrix {
        let free = self.free_columns();
        let cols: Vec<Vec<Scalar>> = (0..self.ambient)
            .map(|k| {
                let r = self.reduce(&self.field.unit_vector(self.ambient, k));
                free.iter().map(|&c| r[c].clone()).collect()
            })
            .collect();
        Matrix::from_columns(self.field, free.len(), &cols)
    }

    /// Right inverse of [`Subspace::quotient_projection`]: the free-column
    /// coordinates placed back into the ambient space.
    pub fn quotient_section(&self) -> Matrix {
        let free = self.free_columns();
        let cols: Vec<Vec<Scalar>> = free.iter().map(|&c| self.field.unit_vector(self.ambient, c)).collect();
        Matrix::from_columns(self.field, self.ambient, &cols)
    }

    fn echelon(&self) -> Echelon {
        Echelon {
            field: self.field,
            ambient: self.ambient,
            rows: self.basis.row_vectors(),
            pivots: self.pivots.clone(),
        }
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, y) in v.iter_mut().zip(self.basis.row(r)) {
                if !y.is_zero() {
                    x.sub_mul(&factor, y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        vector::is_zero(&self.reduce(v))
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of basis rows.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = self.field.zeros(self.ambient);
        for (r, c) in coeffs.iter().enumerate() {
            vector::axpy(&mut out, c, self.basis.row(r));
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.row_vectors().iter().all(|v| other.contains(v))
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut e = self.echelon();
        for v in other.basis.row_vectors() {
            e.insert(&v);
        }
        Ok(e.into_subspace())
    }

    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // Solve sum a_i u_i - sum b_j w_j = 0 and map the a-part back.
        let (du, dw) = (self.dim(), other.dim());
        let mut m = Matrix::zeros(self.field, self.ambient, du + dw);
        for i in 0..du {
            for c in 0..self.ambient {
                m.set(c, i, self.basis.get(i, c).clone());
            }
        }
        for j in 0..dw {
            for c in 0..self.ambient {
                m.set(c, du + j, -other.basis.get(j, c));
            }
        }
        let kernel = m.kernel();
        let vectors = kernel.basis_vectors().into_iter().map(|k| self.combine(&k[..du]));
        Ok(Subspace::span(self.field, self.ambient, vectors))
    }

    pub fn meet_join(&self, other: &Subspace) -> Result<(Subspace, Subspace)> {
        Ok((self.meet(other)?, self.join(other)?))
    }

    /// Image under a linear map `ambient -> m.rows()`.
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Subspace::span(self.field, m.rows(), self.basis.row_vectors().iter().map(|v| m.mul_vec(v)))
    }

    /// Whether `m` maps the subspace into itself.
    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        (0..self.dim()).all(|r| self.contains(&m.mul_vec(self.basis.row(r))))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(Error::dim(format!(
                "ambient spaces differ: {} over {} vs {} over {}",
                self.ambient, self.field, other.ambient, other.field
            )));
        }
        Ok(())
    }
}

/// Limits for exhaustive lattice enumeration, expressed as a dimension over
/// `F_2` and scaled by `log2 p` for larger primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumCaps {
    pub max_dim_f2: usize,
}

impl EnumCaps {
    /// Submodule enumeration default.
    pub const MODULES: EnumCaps = EnumCaps { max_dim_f2: 8 };
    /// Ideal-lattice default used by the FBN checks.
    pub const LATTICE: EnumCaps = EnumCaps { max_dim_f2: 6 };

    /// Applies the `FROBLAB_MAX_ENUM_DIM` override, if set and valid.
    pub fn with_env_override(self) -> Self {
        match std::env::var(MAX_ENUM_DIM_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            Some(max_dim_f2) => EnumCaps { max_dim_f2 },
            None => self,
        }
    }

    pub fn limit_for(&self, field: FieldSpec) -> Result<usize> {
        match field {
            // round(max / log2 p) is the largest d with p^(2d-1) <= 4^max.
            FieldSpec::Prime(p) => {
                let bound = BigUint::from(4u32).pow(self.max_dim_f2 as u32);
                let mut d = 0usize;
                while BigUint::from(p).pow(2 * d as u32 + 1) <= bound {
                    d += 1;
                }
                Ok(d)
            }
            FieldSpec::Rational => Err(Error::InfiniteField(field.to_string())),
        }
    }

    pub fn check(&self, field: FieldSpec, dim: usize) -> Result<()> {
        let limit = self.limit_for(field)?;
        if dim > limit {
            return Err(Error::CapExceeded {
                dim,
                field: field.to_string(),
                limit,
            });
        }
        Ok(())
    }
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps::MODULES
    }
}

/// Every subspace of `F_p^n` accepted by `keep`, ordered by dimension, then
/// by pivot set (lexicographic), then by the free entries read as base-`p`
/// digits. The order does not depend on the thread schedule.
pub fn enumerate_subspaces<F>(field: FieldSpec, n: usize, caps: EnumCaps, keep: F) -> Result<Vec<Subspace>>
where
    F: Fn(&Subspace) -> bool + Sync,
{
    let elements = field.elements().ok_or_else(|| Error::InfiniteField(field.to_string()))?;
    caps.check(field, n)?;
    let mut jobs = Vec::new();
    for k in 0..=n {
        for_each_combination(n, k, &mut |pivots| jobs.push(pivots.to_vec()));
    }
    let chunks: Vec<Vec<Subspace>> = jobs
        .par_iter()
        .map(|pivots| {
            let mut out = Vec::new();
            // Free slots: (row, column) with column after the row's pivot and not a pivot.
            let slots: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| ((p + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let mut digits = vec![0usize; slots.len()];
            loop {
                let mut rows: Vec<Vec<Scalar>> = pivots
                    .iter()
                    .map(|&p| field.unit_vector(n, p))
                    .collect();
                for (&(r, c), &d) in slots.iter().zip(&digits) {
                    rows[r][c] = elements[d].clone();
                }
                let s = Subspace {
                    field,
                    ambient: n,
                    basis: Matrix::from_rows(field, n, rows),
                    pivots: pivots.clone(),
                };
                if keep(&s) {
                    out.push(s);
                }
                if !advance(&mut digits, elements.len()) {
                    break;
                }
            }
            out
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: FieldSpec, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn two_lines_in_f2_plane() {
        let f = FieldSpec::Prime(2);
        let u = Subspace::span(f, 2, vec![v(f, &[1, 0])]);
        let w = Subspace::span(f, 2, vec![v(f, &[1, 1])]);
        let (meet, join) = u.meet_join(&w).unwrap();
        assert_eq!(meet, Subspace::zero(f, 2));
        assert_eq!(join, Subspace::full(f, 2));
    }

    #[test]
    fn meet_join_with_self_and_zero() {
        let f = FieldSpec::Rational;
        let u = Subspace::span(f, 3, vec![v(f, &[1, 2, 3]), v(f, &[0, 1, 1])]);
        assert_eq!(u.meet_join(&u).unwrap(), (u.clone(), u.clone()));
        let z = Subspace::zero(f, 3);
        assert_eq!(u.meet_join(&z).unwrap(), (z.clone(), u.clone()));
        assert!(u.meet_join(&Subspace::zero(f, 2)).is_err());
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        // Number of subspaces of F_q^n, summed Gaussian binomials.
        let count = |p: u64, n: usize| {
            enumerate_subspaces(FieldSpec::Prime(p), n, EnumCaps { max_dim_f2: 16 }, |_| true)
                .unwrap()
                .len()
        };
        assert_eq!(count(2, 1), 2);
        assert_eq!(count(2, 2), 5);
        assert_eq!(count(2, 3), 16);
        assert_eq!(count(2, 4), 67);
        assert_eq!(count(3, 2), 6);
        assert_eq!(count(3, 3), 28);
    }

    #[test]
    fn enumeration_respects_caps() {
        let err = enumerate_subspaces(FieldSpec::Prime(2), 7, EnumCaps::LATTICE, |_| true).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
        let err = enumerate_subspaces(FieldSpec::Rational, 1, EnumCaps::LATTICE, |_| true).unwrap_err();
        assert!(matches!(err, Error::InfiniteField(_)));
        assert_eq!(EnumCaps::LATTICE.limit_for(FieldSpec::Prime(3)).unwrap(), 4);
    }

    #[test]
    fn coordinates_roundtrip() {
        let f = FieldSpec::Prime(5);
        let u = Subspace::span(f, 3, vec![v(f, &[2, 1, 0]), v(f, &[0, 3, 4])]);
        let w = vector::add(&v(f, &[2, 1, 0]), &v(f, &[0, 3, 4]));
        let c = u.coordinates(&w).unwrap();
        assert_eq!(u.combine(&c), w);
        assert!(u.coordinates(&v(f, &[0, 0, 1])).is_none());
    }
}
