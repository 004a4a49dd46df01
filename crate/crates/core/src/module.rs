//! Right modules and bimodules over presented algebras, module maps, hom
//! spaces, submodule lattices, annihilators and quotients.
//!
//! Vectors are columns and every action is a matrix acting on the left of
//! them. For a right module, `actions[i]` is `m ↦ m·b_i`, so the matrix of
//! `xy` is `ρ(y)ρ(x)`. For a left action the matrix of `xy` is `λ(x)λ(y)`.

use std::sync::Arc;

use crate::algebra::{same_algebra, Algebra, AlgebraMap};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::report::Report;
use crate::subspace::{enumerate_subspaces, EnumCaps, Subspace};

fn check_action_shapes(alg: &Algebra, dim: usize, actions: &[Matrix], what: &str) -> Result<()> {
    if actions.len() != alg.dim() {
        return Err(Error::schema(
            what,
            format!("expected {} action matrices, found {}", alg.dim(), actions.len()),
        ));
    }
    for (i, a) in actions.iter().enumerate() {
        if a.rows() != dim || a.cols() != dim {
            return Err(Error::schema(
                format!("{what}[{i}]"),
                format!("expected {dim}x{dim}, found {}x{}", a.rows(), a.cols()),
            ));
        }
        if a.field() != alg.field() {
            return Err(Error::FieldMismatch(a.field().to_string(), alg.field().to_string()));
        }
    }
    Ok(())
}

/// `Σ x_i M_i`.
fn combine_actions(field: FieldSpec, dim: usize, actions: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(field, dim, dim);
    for (c, m) in x.iter().zip(actions) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Hand {
    Left,
    Right,
}

/// Records unit and compatibility failures of one family of action matrices.
fn check_action_laws(report: &mut Report, prefix: &str, alg: &Algebra, actions: &[Matrix], hand: Hand) {
    let f = alg.field();
    let dim = actions.first().map_or(0, Matrix::rows);
    let unit = combine_actions(f, dim, actions, alg.unit());
    let c = report.check(&format!("{prefix}unit"), "the unit acts as the identity");
    for col in 0..dim {
        for row in 0..dim {
            let expected = if row == col { f.one() } else { f.zero() };
            if unit.get(row, col) != &expected {
                c.fail(vec![row, col], format!("unit action has entry {} at ({row}, {col})", unit.get(row, col)));
            }
        }
    }
    let law = match hand {
        Hand::Right => "m·(b_i b_j) = (m·b_i)·b_j",
        Hand::Left => "(b_i b_j)·m = b_i·(b_j·m)",
    };
    let c = report.check(&format!("{prefix}compatibility"), law);
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = combine_actions(f, dim, actions, alg.product(i, j));
            let rhs = match hand {
                Hand::Right => actions[j].mul(&actions[i]),
                Hand::Left => actions[i].mul(&actions[j]),
            };
            if lhs != rhs {
                c.fail(vec![i, j], format!("action of b{i}·b{j} differs from the composite of the actions"));
            }
        }
    }
}

/// Matrices `X: source → target` with `X S_k = T_k X` for every pair.
pub fn intertwiners(field: FieldSpec, src_dim: usize, tgt_dim: usize, pairs: &[(&Matrix, &Matrix)]) -> Vec<Matrix> {
    // Unknown X[r][c] sits at index r * src_dim + c.
    let unknowns = tgt_dim * src_dim;
    let mut rows = Vec::new();
    for (s, t) in pairs {
        for r in 0..tgt_dim {
            for c in 0..src_dim {
                let mut eq = field.zeros(unknowns);
                // (X S)[r][c] = Σ_k X[r][k] S[k][c]
                for k in 0..src_dim {
                    let v = s.get(k, c);
                    if !v.is_zero() {
                        eq[r * src_dim + k] = &eq[r * src_dim + k] + v;
                    }
                }
                // (T X)[r][c] = Σ_k T[r][k] X[k][c]
                for k in 0..tgt_dim {
                    let v = t.get(r, k);
                    if !v.is_zero() {
                        eq[k * src_dim + c] = &eq[k * src_dim + c] - v;
                    }
                }
                rows.push(eq);
            }
        }
    }
    let system = Matrix::from_rows(field, unknowns, rows);
    system
        .kernel()
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::new(field, tgt_dim, src_dim, v).expect("kernel vector has the right length"))
        .collect()
}

/// A right module given by one action matrix per algebra basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    algebra: Arc<Algebra>,
    dim: usize,
    actions: Vec<Matrix>,
}

impl RightModule {
    /// Shape-checks the action table; the module laws are verified by [`RightModule::check`].
    pub fn new(algebra: Arc<Algebra>, dim: usize, actions: Vec<Matrix>) -> Result<Self> {
        check_action_shapes(&algebra, dim, &actions, "actions")?;
        Ok(RightModule { algebra, dim, actions })
    }

    /// `R` acting on itself by right multiplication.
    pub fn regular(algebra: Arc<Algebra>) -> Self {
        let actions = (0..algebra.dim())
            .map(|i| algebra.right_mul_matrix(&algebra.basis_element(i)))
            .collect();
        RightModule {
            dim: algebra.dim(),
            algebra,
            actions,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// Matrix of `m ↦ m·x`.
    pub fn action_of(&self, x: &[Scalar]) -> Matrix {
        combine_actions(self.field(), self.dim, &self.actions, x)
    }

    pub fn act(&self, m: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        self.action_of(x).mul_vec(m)
    }

    pub fn check(&self) -> Report {
        let mut report = Report::new();
        check_action_laws(&mut report, "", &self.algebra, &self.actions, Hand::Right);
        report
    }

    /// Restriction of scalars along `map: S → R`.
    pub fn restrict(&self, map: &AlgebraMap) -> Result<RightModule> {
        if !same_algebra(map.target(), &self.algebra) {
            return Err(Error::AlgebraMismatch("restriction map must land in the acting algebra".into()));
        }
        let actions = (0..map.source().dim())
            .map(|s| self.action_of(&map.apply(&map.source().basis_element(s))))
            .collect();
        RightModule::new(map.source().clone(), self.dim, actions)
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        self.actions.iter().all(|a| s.is_invariant_under(a))
    }

    fn ensure_submodule(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::dim(format!("subspace of {} in a {}-dim module", s.ambient_dim(), self.dim)));
        }
        for (action, a) in self.actions.iter().enumerate() {
            for (vector, v) in s.basis_vectors().iter().enumerate() {
                if !s.contains(&a.mul_vec(v)) {
                    return Err(Error::NotInvariant { vector, action });
                }
            }
        }
        Ok(())
    }

    /// The submodule `s` in the coordinates of its echelon basis.
    pub fn submodule(&self, s: &Subspace) -> Result<RightModule> {
        self.ensure_submodule(s)?;
        let basis = s.basis_vectors();
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let cols: Vec<_> = basis
                    .iter()
                    .map(|v| s.coordinates(&a.mul_vec(v)).expect("invariant subspace"))
                    .collect();
                Matrix::from_columns(self.field(), s.dim(), &cols)
            })
            .collect();
        RightModule::new(self.algebra.clone(), s.dim(), actions)
    }

    /// `self / s` on the free-column complement of `s`, with the projection.
    pub fn quotient(&self, s: &Subspace) -> Result<(RightModule, Matrix)> {
        self.ensure_submodule(s)?;
        let proj = s.quotient_projection();
        let sect = s.quotient_section();
        let actions = self.actions.iter().map(|a| proj.mul(a).mul(&sect)).collect();
        let quotient = RightModule::new(self.algebra.clone(), proj.rows(), actions)?;
        Ok((quotient, proj))
    }

    /// `{r ∈ R : x·r = 0 for all x ∈ xs}`.
    pub fn annihilator(&self, xs: &[Vec<Scalar>]) -> Subspace {
        let f = self.field();
        let n = self.algebra.dim();
        if xs.is_empty() {
            return Subspace::full(f, n);
        }
        let blocks: Vec<Matrix> = xs
            .iter()
            .map(|x| {
                let cols: Vec<_> = self.actions.iter().map(|a| a.mul_vec(x)).collect();
                Matrix::from_columns(f, self.dim, &cols)
            })
            .collect();
        Matrix::vstack(f, n, &blocks).kernel()
    }

    /// `r_R(M)`, the annihilator of every element.
    pub fn annihilator_of_module(&self) -> Subspace {
        let basis: Vec<_> = (0..self.dim).map(|k| self.field().unit_vector(self.dim, k)).collect();
        self.annihilator(&basis)
    }

    /// Every submodule, in the canonical enumeration order.
    pub fn submodules(&self, caps: EnumCaps) -> Result<Vec<Subspace>> {
        enumerate_subspaces(self.field(), self.dim, caps, |s| self.is_submodule(s))
    }

    /// Submodule generated by `xs`.
    pub fn generated(&self, xs: &[Vec<Scalar>]) -> Subspace {
        let mut ech = crate::subspace::Echelon::new(self.field(), self.dim);
        let mut frontier = Vec::new();
        for x in xs {
            if ech.insert(x) {
                frontier.push(x.clone());
            }
        }
        while let Some(v) = frontier.pop() {
            for a in &self.actions {
                let w = a.mul_vec(&v);
                if ech.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        ech.into_subspace()
    }
}

/// Basis of `Hom_R(m, n)`.
pub fn hom_space(m: &RightModule, n: &RightModule) -> Result<Vec<Matrix>> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch("hom space between modules over different algebras".into()));
    }
    let pairs: Vec<_> = m.actions.iter().zip(&n.actions).collect();
    Ok(intertwiners(m.field(), m.dim, n.dim, &pairs))
}

/// A linear map between right modules that commutes with every action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: Arc<RightModule>,
    target: Arc<RightModule>,
    matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: Arc<RightModule>, target: Arc<RightModule>, matrix: Matrix) -> Result<Self> {
        if !same_algebra(&source.algebra, &target.algebra) {
            return Err(Error::AlgebraMismatch("module map between modules over different algebras".into()));
        }
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::dim(format!(
                "module map is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim,
                source.dim
            )));
        }
        for (k, (s, t)) in source.actions.iter().zip(&target.actions).enumerate() {
            if matrix.mul(s) != t.mul(&matrix) {
                return Err(Error::Invalid(format!("map does not commute with the action of basis element {k}")));
            }
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn source(&self) -> &Arc<RightModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RightModule> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x)
    }
}

/// A bimodule: left actions of one algebra, right actions of another, commuting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    dim: usize,
    left_actions: Vec<Matrix>,
    right_actions: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        dim: usize,
        left_actions: Vec<Matrix>,
        right_actions: Vec<Matrix>,
    ) -> Result<Self> {
        if left.field() != right.field() {
            return Err(Error::FieldMismatch(left.field().to_string(), right.field().to_string()));
        }
        check_action_shapes(&left, dim, &left_actions, "left_actions")?;
        check_action_shapes(&right, dim, &right_actions, "right_actions")?;
        Ok(Bimodule {
            left,
            right,
            dim,
            left_actions,
            right_actions,
        })
    }

    /// An algebra acting on itself from both sides.
    pub fn regular(alg: Arc<Algebra>) -> Self {
        Bimodule::ring(alg, None, None)
    }

    /// The algebra `r` as a bimodule, with each side acting through the
    /// given ring map into `r` (or by `r` itself when no map is given).
    pub fn ring(r: Arc<Algebra>, left: Option<&AlgebraMap>, right: Option<&AlgebraMap>) -> Self {
        let side = |map: Option<&AlgebraMap>, mult: &dyn Fn(&[Scalar]) -> Matrix| -> (Arc<Algebra>, Vec<Matrix>) {
            match map {
                Some(m) => {
                    assert!(same_algebra(m.target(), &r), "ring map must land in the bimodule's algebra");
                    let acts = (0..m.source().dim())
                        .map(|s| mult(&m.apply(&m.source().basis_element(s))))
                        .collect();
                    (m.source().clone(), acts)
                }
                None => (r.clone(), (0..r.dim()).map(|s| mult(&r.basis_element(s))).collect()),
            }
        };
        let (la, lacts) = side(left, &|x| r.left_mul_matrix(x));
        let (ra, racts) = side(right, &|x| r.right_mul_matrix(x));
        Bimodule {
            left: la,
            right: ra,
            dim: r.dim(),
            left_actions: lacts,
            right_actions: racts,
        }
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn field(&self) -> FieldSpec {
        self.left.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left_actions
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.right_actions
    }

    /// Matrix of `m ↦ x·m`.
    pub fn left_action_of(&self, x: &[Scalar]) -> Matrix {
        combine_actions(self.field(), self.dim, &self.left_actions, x)
    }

    /// Matrix of `m ↦ m·x`.
    pub fn right_action_of(&self, x: &[Scalar]) -> Matrix {
        combine_actions(self.field(), self.dim, &self.right_actions, x)
    }

    pub fn check(&self) -> Report {
        let mut report = Report::new();
        check_action_laws(&mut report, "left_", &self.left, &self.left_actions, Hand::Left);
        check_action_laws(&mut report, "right_", &self.right, &self.right_actions, Hand::Right);
        let c = report.check("commutation", "(a·m)·b = a·(m·b)");
        for (i, l) in self.left_actions.iter().enumerate() {
            for (j, r) in self.right_actions.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    c.fail(vec![i, j], format!("left action {i} and right action {j} do not commute"));
                }
            }
        }
        report
    }

    pub fn as_right_module(&self) -> RightModule {
        RightModule {
            algebra: self.right.clone(),
            dim: self.dim,
            actions: self.right_actions.clone(),
        }
    }

    /// The same space as a bimodule over `(right^op, left^op)`.
    pub fn op(&self) -> Bimodule {
        Bimodule {
            left: Arc::new(self.right.opposite()),
            right: Arc::new(self.left.opposite()),
            dim: self.dim,
            left_actions: self.right_actions.clone(),
            right_actions: self.left_actions.clone(),
        }
    }

    /// Whether `matrix: self → other` commutes with both actions.
    pub fn is_bimodule_map(&self, other: &Bimodule, matrix: &Matrix) -> bool {
        self.left_actions.iter().zip(&other.left_actions).all(|(s, t)| matrix.mul(s) == t.mul(matrix))
            && self.right_actions.iter().zip(&other.right_actions).all(|(s, t)| matrix.mul(s) == t.mul(matrix))
    }
}
