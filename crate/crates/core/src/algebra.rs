//! Finite-dimensional unital associative algebras presented by structure
//! constants, algebra maps, and the constructions built from them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{vector, Matrix};
use crate::report::Report;
use crate::subspace::{Echelon, Subspace};

/// `b_i · b_j = Σ_k c[i][j][k] b_k`, with a distinguished unit vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: FieldSpec,
    basis_names: Vec<String>,
    /// `table[i * n + j]` holds the coefficient vector of `b_i · b_j`.
    table: Vec<Vec<Scalar>>,
    unit: Vec<Scalar>,
}

impl Algebra {
    /// Shape-checks a presentation; the algebra laws are verified by [`Algebra::check`].
    pub fn new(
        field: FieldSpec,
        basis_names: Vec<String>,
        table: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        let n = basis_names.len();
        if table.len() != n {
            return Err(Error::schema("table", format!("expected {n} rows, found {}", table.len())));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::schema(format!("table[{i}]"), format!("expected {n} entries, found {}", row.len())));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != n {
                    return Err(Error::schema(
                        format!("table[{i}][{j}]"),
                        format!("expected {n} coefficients, found {}", v.len()),
                    ));
                }
                flat.push(v);
            }
        }
        if unit.len() != n {
            return Err(Error::schema("unit", format!("expected {n} coefficients, found {}", unit.len())));
        }
        Ok(Algebra {
            field,
            basis_names,
            table: flat,
            unit,
        })
    }

    /// Builds the table from a product rule on basis indices.
    pub fn from_fn(
        field: FieldSpec,
        basis_names: Vec<String>,
        unit: Vec<Scalar>,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Self {
        let n = basis_names.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                assert_eq!(v.len(), n);
                table.push(v);
            }
        }
        assert_eq!(unit.len(), n);
        Algebra {
            field,
            basis_names,
            table,
            unit,
        }
    }

    /// The one-dimensional algebra `k`.
    pub fn base(field: FieldSpec) -> Self {
        Algebra::from_fn(field, vec!["1".into()], vec![field.one()], |_, _| vec![field.one()])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Coefficients of `b_i · b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim() + j]
    }

    pub fn table(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.product(i, j).to_vec()).collect()).collect()
    }

    pub fn basis_element(&self, k: usize) -> Vec<Scalar> {
        self.field.unit_vector(self.dim(), k)
    }

    pub fn zero(&self) -> Vec<Scalar> {
        self.field.zeros(self.dim())
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert_eq!(x.len(), n);
        assert_eq!(y.len(), n);
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                vector::axpy(&mut out, &ab, self.product(i, j));
            }
        }
        out
    }

    /// Matrix of `y ↦ x · y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.mul(x, &self.basis_element(j))).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of `y ↦ y · x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.mul(&self.basis_element(j), x)).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// Associativity on every basis quadruple and both unit laws.
    pub fn check(&self) -> Report {
        let n = self.dim();
        let mut report = Report::new();
        let assoc = report.check("associativity", "(b_i b_j) b_k = b_i (b_j b_k)");
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    let jk = self.product(j, k);
                    // Compare coefficient by coefficient: Σ_m c[i][j][m] c[m][k][l] vs Σ_m c[j][k][m] c[i][m][l].
                    let mut lhs = self.zero();
                    for (m, c) in ij.iter().enumerate() {
                        vector::axpy(&mut lhs, c, self.product(m, k));
                    }
                    let mut rhs = self.zero();
                    for (m, c) in jk.iter().enumerate() {
                        vector::axpy(&mut rhs, c, self.product(i, m));
                    }
                    for l in 0..n {
                        if lhs[l] != rhs[l] {
                            assoc.fail(
                                vec![i, j, k, l],
                                format!(
                                    "coefficient of {} in ({}·{})·{} is {} but in {}·({}·{}) is {}",
                                    self.basis_names[l],
                                    self.basis_names[i],
                                    self.basis_names[j],
                                    self.basis_names[k],
                                    lhs[l],
                                    self.basis_names[i],
                                    self.basis_names[j],
                                    self.basis_names[k],
                                    rhs[l]
                                ),
                            );
                        }
                    }
                }
            }
        }
        let left = report.check("left_unit", "1 · b_i = b_i");
        for i in 0..n {
            let e = self.basis_element(i);
            let got = self.mul(&self.unit, &e);
            left.expect(got == e, vec![i], || format!("1·{} ≠ {}", self.basis_names[i], self.basis_names[i]));
        }
        let right = report.check("right_unit", "b_i · 1 = b_i");
        for i in 0..n {
            let e = self.basis_element(i);
            let got = self.mul(&e, &self.unit);
            right.expect(got == e, vec![i], || format!("{}·1 ≠ {}", self.basis_names[i], self.basis_names[i]));
        }
        report
    }

    /// `c_op[i][j] = c[j][i]`.
    pub fn opposite(&self) -> Algebra {
        Algebra::from_fn(self.field, self.basis_names.clone(), self.unit.clone(), |i, j| {
            self.product(j, i).to_vec()
        })
    }

    /// `self ⊗ other` over the base field, basis `(i, j) ↦ i * dim(other) + j`.
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        let m = other.dim();
        let names = self
            .basis_names
            .iter()
            .flat_map(|a| other.basis_names.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        Ok(Algebra::from_fn(
            self.field,
            names,
            vector::kron(&self.unit, &other.unit),
            |x, y| {
                let (i, j) = (x / m, x % m);
                let (k, l) = (y / m, y % m);
                vector::kron(self.product(i, k), other.product(j, l))
            },
        ))
    }

    /// Presentation of a unital subalgebra in the echelon basis of `space`.
    pub fn subalgebra(&self, space: &Subspace) -> Result<Algebra> {
        let basis = space.basis_vectors();
        let unit = space
            .coordinates(&self.unit)
            .ok_or_else(|| Error::NotInSubspace("unit of a subalgebra".into()))?;
        let mut table = Vec::with_capacity(basis.len());
        for x in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for y in &basis {
                let xy = self.mul(x, y);
                row.push(
                    space
                        .coordinates(&xy)
                        .ok_or_else(|| Error::NotInSubspace("subspace is not closed under multiplication".into()))?,
                );
            }
            table.push(row);
        }
        let names = (0..basis.len()).map(|k| format!("s{k}")).collect();
        Algebra::new(self.field, names, table, unit)
    }

    /// `self / ideal` on the canonical complement of the ideal's pivots,
    /// together with the projection matrix.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, Matrix)> {
        let n = self.dim();
        for v in ideal.basis_vectors() {
            for k in 0..n {
                let e = self.basis_element(k);
                if !ideal.contains(&self.mul(&v, &e)) || !ideal.contains(&self.mul(&e, &v)) {
                    return Err(Error::Invalid("subspace is not a two-sided ideal".into()));
                }
            }
        }
        let free = ideal.free_columns();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = ideal.reduce(v);
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let proj = Matrix::from_columns(
            self.field,
            free.len(),
            &(0..n).map(|k| project(&self.basis_element(k))).collect::<Vec<_>>(),
        );
        let names = free.iter().map(|&c| format!("[{}]", self.basis_names[c])).collect();
        let quotient = Algebra::from_fn(self.field, names, project(&self.unit), |i, j| {
            project(self.product(free[i], free[j]))
        });
        Ok((quotient, proj))
    }
}

/// An element together with the algebra it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub parent: Arc<Algebra>,
    pub coeffs: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn new(parent: Arc<Algebra>, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != parent.dim() {
            return Err(Error::dim(format!("{} coefficients for a {}-dim algebra", coeffs.len(), parent.dim())));
        }
        Ok(AlgebraElement { parent, coeffs })
    }

    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if !same_algebra(&self.parent, &other.parent) {
            return Err(Error::AlgebraMismatch("factors of a product".into()));
        }
        Ok(AlgebraElement {
            parent: self.parent.clone(),
            coeffs: self.parent.mul(&self.coeffs, &other.coeffs),
        })
    }
}

pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A multiplicative linear map between algebras, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    matrix: Matrix,
}

impl AlgebraMap {
    /// Checks multiplicativity on all basis pairs, and unit preservation when `unital`.
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Matrix, unital: bool) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::dim(format!(
                "algebra map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let images = matrix.columns();
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let lhs = matrix.mul_vec(source.product(i, j));
                let rhs = target.mul(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotMultiplicative(i, j));
                }
            }
        }
        if unital && matrix.mul_vec(source.unit()) != target.unit() {
            return Err(Error::NotUnital);
        }
        Ok(AlgebraMap { source, target, matrix })
    }

    pub fn identity(a: Arc<Algebra>) -> Self {
        let matrix = Matrix::identity(a.field(), a.dim());
        AlgebraMap {
            source: a.clone(),
            target: a,
            matrix,
        }
    }

    /// The structure map `k → A`.
    pub fn unit_map(k: Arc<Algebra>, a: Arc<Algebra>) -> Result<Self> {
        let matrix = Matrix::from_columns(a.field(), a.dim(), &[a.unit().to_vec()]);
        AlgebraMap::new(k, a, matrix, true)
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x)
    }

    pub fn is_unital(&self) -> bool {
        self.apply(self.source.unit()) == self.target.unit()
    }
}

/// `{a ∈ A : j(s) a = a j(s) for all s ∈ S}` for `j: S → A`.
pub fn centralizer(j: &AlgebraMap) -> Subspace {
    let a = j.target();
    let blocks: Vec<Matrix> = (0..j.source().dim())
        .map(|s| {
            let js = j.apply(&j.source().basis_element(s));
            a.left_mul_matrix(&js).sub(&a.right_mul_matrix(&js))
        })
        .collect();
    if blocks.is_empty() {
        return Subspace::full(a.field(), a.dim());
    }
    Matrix::vstack(a.field(), a.dim(), &blocks).kernel()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// Smallest subspace containing `gens` and closed under the requested
/// multiplications by basis elements.
pub fn ideal_generated(alg: &Algebra, gens: &[Vec<Scalar>], side: Side) -> Subspace {
    let n = alg.dim();
    let mut ech = Echelon::new(alg.field(), n);
    let mut frontier: Vec<Vec<Scalar>> = Vec::new();
    for g in gens {
        if ech.insert(g) {
            frontier.push(g.clone());
        }
    }
    // Each round multiplies only the newly added vectors; stops once no new
    // dimension appears, which happens after at most n rounds.
    while let Some(v) = frontier.pop() {
        for k in 0..n {
            let e = alg.basis_element(k);
            let mut products = Vec::with_capacity(2);
            if matches!(side, Side::Right | Side::TwoSided) {
                products.push(alg.mul(&v, &e));
            }
            if matches!(side, Side::Left | Side::TwoSided) {
                products.push(alg.mul(&e, &v));
            }
            for p in products {
                if ech.insert(&p) {
                    frontier.push(p);
                }
            }
        }
    }
    ech.into_subspace()
}

/// Whether `space` is closed under left (resp. right) multiplication by `alg`.
pub fn is_ideal(alg: &Algebra, space: &Subspace, side: Side) -> bool {
    let n = alg.dim();
    space.basis_vectors().iter().all(|v| {
        (0..n).all(|k| {
            let e = alg.basis_element(k);
            let right_ok = !matches!(side, Side::Right | Side::TwoSided) || space.contains(&alg.mul(v, &e));
            let left_ok = !matches!(side, Side::Left | Side::TwoSided) || space.contains(&alg.mul(&e, v));
            right_ok && left_ok
        })
    })
}

/// Span of all products `x · y` with `x ∈ u`, `y ∈ v`.
pub fn product_space(alg: &Algebra, u: &Subspace, v: &Subspace) -> Subspace {
    let us = u.basis_vectors();
    let vs = v.basis_vectors();
    Subspace::span(
        alg.field(),
        alg.dim(),
        us.iter().flat_map(|x| vs.iter().map(move |y| alg.mul(x, y))),
    )
}

/// Whether `space` contains the unit and is closed under multiplication.
pub fn is_unital_subalgebra(alg: &Algebra, space: &Subspace) -> bool {
    subalgebra_witness(alg, space).is_empty()
}

/// Empty for a unital subalgebra; otherwise `[k]` with `k` a coordinate of
/// `1` outside the space, or `[x, y]` with `v_x v_y` outside it.
pub fn subalgebra_witness(alg: &Algebra, space: &Subspace) -> Vec<usize> {
    let missing = space.reduce(alg.unit());
    if let Some(k) = missing.iter().position(|c| !c.is_zero()) {
        return vec![k];
    }
    let basis = space.basis_vectors();
    for (x, vx) in basis.iter().enumerate() {
        for (y, vy) in basis.iter().enumerate() {
            if !space.contains(&alg.mul(vx, vy)) {
                return vec![x, y];
            }
        }
    }
    Vec::new()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn small_algebras_are_valid() {
        assert!(corpus::dual_numbers(FieldSpec::Prime(2)).check().is_ok());
        assert!(corpus::cyclic_group_algebra(FieldSpec::Rational, 2).check().is_ok());
        assert!(corpus::matrix_algebra(FieldSpec::Prime(2), 2).check().is_ok());
    }

    #[test]
    fn one_sided_tamper_is_caught() {
        // Set g·1 = 1 in QC2 while leaving 1·g = g alone.
        let a = corpus::cyclic_group_algebra(FieldSpec::Rational, 2);
        let f = a.field();
        let mut table = a.table();
        table[1][0] = vec![f.one(), f.zero()];
        let bad = Algebra::new(f, a.basis_names().to_vec(), table, a.unit().to_vec()).unwrap();
        let report = bad.check();
        assert!(!report.is_ok());
        let (name, failure) = report.first_failure().unwrap();
        assert_eq!(name, "associativity");
        assert_eq!(failure.indices.len(), 4);
        assert!(!report.get("right_unit").unwrap().passed());
        assert!(report.get("left_unit").unwrap().passed());
    }

    #[test]
    fn multiply_examples() {
        let f2 = FieldSpec::Prime(2);
        let d = corpus::dual_numbers(f2);
        assert_eq!(d.mul(&d.basis_element(1), &d.basis_element(1)), d.zero());
        let q = FieldSpec::Rational;
        let c2 = Arc::new(corpus::cyclic_group_algebra(q, 2));
        let g = c2.basis_element(1);
        assert_eq!(c2.mul(&g, &g), c2.unit());
        let x = AlgebraElement::new(c2.clone(), vec![q.one(), q.one()]).unwrap();
        let y = AlgebraElement::new(c2.clone(), vec![q.one(), q.from_i64(-1)]).unwrap();
        assert_eq!(x.multiply(&y).unwrap().coeffs, c2.zero());
        let other = AlgebraElement::new(Arc::new(d.clone()), d.zero());
        assert!(other.is_err() || x.multiply(&other.unwrap()).is_err());
    }

    #[test]
    fn opposite_and_tensor() {
        let f2 = FieldSpec::Prime(2);
        let m2 = corpus::matrix_algebra(f2, 2);
        let op = m2.opposite();
        assert!(op.check().is_ok());
        assert_eq!(op.opposite(), m2);
        // e12 · e21 = e11 in M2, so in the opposite e21 ∘ e12 = e11.
        assert_eq!(op.product(2, 1), m2.product(1, 2));
        let c2 = corpus::cyclic_group_algebra(FieldSpec::Rational, 2);
        assert_eq!(c2.opposite(), c2);
        let t = c2.tensor(&c2).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(t.check().is_ok());
        let k = Algebra::base(f2);
        assert_eq!(k.tensor(&m2).unwrap().table(), m2.table());
        let up = corpus::upper_triangular(f2);
        assert_eq!(corpus::cyclic_group_algebra(f2, 2).tensor(&up).unwrap().dim(), 6);
        assert!(c2.tensor(&m2).is_err());
    }

    #[test]
    fn centralizer_examples() {
        let f2 = FieldSpec::Prime(2);
        let m2 = Arc::new(corpus::matrix_algebra(f2, 2));
        let k = Arc::new(Algebra::base(f2));
        assert!(centralizer(&AlgebraMap::unit_map(k.clone(), m2.clone()).unwrap()).is_full());

        let prod = Arc::new(corpus::split_algebra(f2, 2));
        let diag = AlgebraMap::unit_map(k, prod.clone()).unwrap();
        assert!(centralizer(&diag).is_full());

        // Diagonal matrices F2×F2 → M2(F2): e1 ↦ e11, e2 ↦ e22.
        let m = Matrix::from_columns(f2, 4, &[m2.basis_element(0), m2.basis_element(3)]);
        let inc = AlgebraMap::new(prod, m2.clone(), m, true).unwrap();
        let c = centralizer(&inc);
        assert_eq!(c, Subspace::span(f2, 4, vec![m2.basis_element(0), m2.basis_element(3)]));
        assert!(is_unital_subalgebra(&m2, &c));
    }

    #[test]
    fn ideal_examples() {
        let f2 = FieldSpec::Prime(2);
        let d = corpus::dual_numbers(f2);
        let x = d.basis_element(1);
        assert_eq!(ideal_generated(&d, std::slice::from_ref(&x), Side::Right), Subspace::span(f2, 2, vec![x]));
        let m2 = corpus::matrix_algebra(f2, 2);
        assert!(ideal_generated(&m2, &[m2.basis_element(0)], Side::TwoSided).is_full());
        assert!(ideal_generated(&m2, &[m2.zero()], Side::TwoSided).is_zero());
        // e11 M2 = row space of the first row: {e11, e12}.
        let r = ideal_generated(&m2, &[m2.basis_element(0)], Side::Right);
        assert_eq!(r, Subspace::span(f2, 4, vec![m2.basis_element(0), m2.basis_element(1)]));
    }

    #[test]
    fn quotient_by_radical() {
        let f2 = FieldSpec::Prime(2);
        let d = corpus::dual_numbers(f2);
        let rad = ideal_generated(&d, &[d.basis_element(1)], Side::TwoSided);
        let (q, proj) = d.quotient(&rad).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.check().is_ok());
        assert_eq!(proj.mul_vec(&d.basis_element(1)), vec![f2.zero()]);
    }
}
