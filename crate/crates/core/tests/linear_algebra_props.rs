//! Randomised laws for exact scalars, row reduction and subspace lattices.

use froblab::{FieldSpec, Matrix, Scalar, Subspace};
use proptest::prelude::*;

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rational),
        Just(FieldSpec::Prime(2)),
        Just(FieldSpec::Prime(3)),
        Just(FieldSpec::Prime(7)),
    ]
}

fn scalar(f: FieldSpec, num: i64, den: i64) -> Scalar {
    match f {
        FieldSpec::Rational => &f.from_i64(num) * &f.from_i64(den).inv().unwrap(),
        _ => f.from_i64(num),
    }
}

fn matrix(f: FieldSpec, rows: usize, cols: usize, seed: &[(i64, i64)]) -> Matrix {
    Matrix::from_fn(f, rows, cols, |r, c| {
        let (n, d) = seed[(r * cols + c) % seed.len()];
        // Sparsify so rank deficiency shows up often.
        if (n + r as i64 * 3 + c as i64) % 4 == 0 {
            f.zero()
        } else {
            scalar(f, n, d)
        }
    })
}

prop_compose! {
    fn field_and_matrix(max: usize)(f in fields(), rows in 1..=max, cols in 1..=max,
        seed in prop::collection::vec((-6i64..=6, 1i64..=5), 1..40)) -> (FieldSpec, Matrix) {
        (f, matrix(f, rows, cols, &seed))
    }
}

prop_compose! {
    fn field_and_scalars()(f in fields(), v in prop::collection::vec((-9i64..=9, 1i64..=7), 3))
        -> (FieldSpec, Scalar, Scalar, Scalar) {
        (f, scalar(f, v[0].0, v[0].1), scalar(f, v[1].0, v[1].1), scalar(f, v[2].0, v[2].1))
    }
}

proptest! {
    #[test]
    fn field_axioms((f, a, b, c) in field_and_scalars()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &(-&a), f.zero());
        if let Some(inv) = a.inv() {
            prop_assert_eq!(&a * &inv, f.one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn scalars_round_trip_through_text((f, a, _b, _c) in field_and_scalars()) {
        prop_assert_eq!(f.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rref_is_idempotent((_f, m) in field_and_matrix(6)) {
        let once = m.rref();
        let twice = once.reduced.rref();
        prop_assert_eq!(&once.reduced, &twice.reduced);
        prop_assert_eq!(once.pivots, twice.pivots);
    }

    #[test]
    fn rank_nullity((_f, m) in field_and_matrix(6)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.image().dim(), m.rank());
        for v in m.kernel().basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_is_exact((f, m) in field_and_matrix(6), x_seed in prop::collection::vec((-4i64..=4, 1i64..=3), 6)) {
        let x: Vec<Scalar> = (0..m.cols()).map(|i| scalar(f, x_seed[i].0, x_seed[i].1)).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).unwrap().expect("b lies in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn inverse_when_full_rank((f, m) in field_and_matrix(5)) {
        if m.is_square() {
            match m.inverse() {
                Some(inv) => prop_assert_eq!(m.mul(&inv), Matrix::identity(f, m.rows())),
                None => prop_assert!(m.rank() < m.rows()),
            }
        }
    }

    #[test]
    fn lattice_laws((f, a) in field_and_matrix(5), seed in prop::collection::vec((-6i64..=6, 1i64..=5), 1..40),
                    cseed in prop::collection::vec((-6i64..=6, 1i64..=5), 1..40)) {
        let n = a.cols();
        let b = matrix(f, 1 + seed.len() % 4, n, &seed);
        let c = matrix(f, 1 + cseed.len() % 4, n, &cseed);
        let sa = Subspace::span(f, n, a.row_vectors());
        let sb = Subspace::span(f, n, b.row_vectors());
        let sc = Subspace::span(f, n, c.row_vectors());
        let join = sa.join(&sb).unwrap();
        let meet = sa.meet(&sb).unwrap();
        prop_assert_eq!(join.dim() + meet.dim(), sa.dim() + sb.dim());
        prop_assert!(meet.is_subspace_of(&sa) && meet.is_subspace_of(&sb));
        prop_assert!(sa.is_subspace_of(&join) && sb.is_subspace_of(&join));
        // Modular law: if A ≤ C then A ∨ (B ∧ C) = (A ∨ B) ∧ C.
        let small = sa.meet(&sc).unwrap();
        let lhs = small.join(&sb.meet(&sc).unwrap()).unwrap();
        let rhs = small.join(&sb).unwrap().meet(&sc).unwrap();
        prop_assert_eq!(lhs, rhs);
        let q = sa.quotient_projection();
        prop_assert_eq!(q.rows(), n - sa.dim());
        for v in sa.basis_vectors() {
            prop_assert!(q.mul_vec(&v).iter().all(Scalar::is_zero));
        }
    }
}
