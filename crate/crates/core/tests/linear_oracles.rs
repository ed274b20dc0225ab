//! Exact linear algebra checked against independent integer oracles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use triassoc::exactlin::{Field, Matrix, Scalar, Subspace};

const Q: Field = Field::Rational;

/// Fraction-free (Bareiss) elimination over the integers; returns the rank.
fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let (nr, nc) = (m.len(), m.first().map_or(0, Vec::len));
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(p) = (rank..nr).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nr {
            for c in col + 1..nc {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn to_matrix(field: Field, rows: &[Vec<i64>]) -> Matrix {
    Matrix::from_i64(field, rows)
}

fn int_matrix(r: usize, c: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    // Few distinct values so that rank deficiency actually happens.
    prop::collection::vec(prop::collection::vec(-2i64..=2, c), r)
}

fn span_of(rows: &[Vec<i64>], n: usize) -> Subspace {
    let m = to_matrix(Q, rows);
    Subspace::span(Q, n, m.row_vecs().map(<[Scalar]>::to_vec)).unwrap()
}

#[test]
fn bareiss_oracle_sanity() {
    assert_eq!(bareiss_rank(&[vec![2, 4], vec![1, 2]]), 1);
    assert_eq!(bareiss_rank(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), 3);
    assert_eq!(bareiss_rank(&[vec![0, 0], vec![0, 0]]), 0);
    assert_eq!(bareiss_rank(&[vec![0, 3, 1], vec![0, 6, 2], vec![1, 0, 1]]), 2);
}

#[test]
fn trivial_kernels() {
    assert_eq!(Matrix::zeros(Q, 2, 3).kernel(), Subspace::full(Q, 3));
    assert!(Matrix::identity(Q, 4).kernel().is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_fraction_free_oracle(rows in int_matrix(5, 8)) {
        prop_assert_eq!(to_matrix(Q, &rows).rank(), bareiss_rank(&rows));
    }

    #[test]
    fn prime_field_rank_never_exceeds_rational(rows in int_matrix(5, 6)) {
        let r = bareiss_rank(&rows);
        for p in [5, 7] {
            prop_assert!(to_matrix(Field::Prime(p), &rows).rank() <= r);
        }
    }

    #[test]
    fn rref_is_idempotent(rows in int_matrix(4, 6)) {
        let (r, pivots) = to_matrix(Q, &rows).rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn kernel_vectors_multiply_back(rows in int_matrix(6, 4)) {
        let m = to_matrix(Q, &rows);
        let ker = m.kernel();
        prop_assert_eq!(ker.dim(), 4 - bareiss_rank(&rows));
        for v in ker.basis_vectors() {
            prop_assert!(m.apply(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn spans_are_canonical(rows in int_matrix(3, 5), mix in int_matrix(3, 3)) {
        // Any invertible recombination of the generators spans the same space.
        prop_assume!(bareiss_rank(&mix) == 3);
        let a = to_matrix(Q, &rows);
        let b = to_matrix(Q, &mix).mul(&a).unwrap();
        prop_assert_eq!(Subspace::from_matrix_rows(&a), Subspace::from_matrix_rows(&b));
    }

    #[test]
    fn dimension_formula(a in int_matrix(2, 4), b in int_matrix(3, 4)) {
        let (sa, sb) = (span_of(&a, 4), span_of(&b, 4));
        let joint: Vec<Vec<i64>> = a.iter().chain(&b).cloned().collect();
        let sum = sa.sum(&sb).unwrap();
        let meet = sa.intersection(&sb).unwrap();
        prop_assert_eq!(sum.dim(), bareiss_rank(&joint));
        prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + meet.dim());
        prop_assert!(meet.is_subspace_of(&sa) && meet.is_subspace_of(&sb));
    }

    #[test]
    fn complements_split(a in int_matrix(2, 5), extra in int_matrix(2, 5)) {
        let sa = span_of(&a, 5);
        let outer = sa.sum(&span_of(&extra, 5)).unwrap();
        let c = sa.complement_in(&outer).unwrap();
        prop_assert_eq!(sa.sum(&c).unwrap(), outer.clone());
        prop_assert!(sa.intersection(&c).unwrap().is_zero());
        let qm = sa.quotient_map(&outer).unwrap();
        prop_assert_eq!(qm.dim(), outer.dim() - sa.dim());
        for v in sa.basis_vectors() {
            prop_assert!(qm.coordinates(v).unwrap().iter().all(Scalar::is_zero));
        }
        for (t, r) in qm.representatives().row_vecs().enumerate() {
            let coords = qm.coordinates(r).unwrap();
            for (s, x) in coords.iter().enumerate() {
                prop_assert_eq!(x.is_one(), s == t);
            }
        }
    }

    #[test]
    fn scalars_stay_canonical(a in -50i64..50, b in 1i64..50, c in -50i64..50) {
        let q = Q.parse_scalar(&format!("{a}/{b}")).unwrap();
        let r = &(&q * &Q.from_i64(c)) - &Q.from_i64(1);
        if let Scalar::Rational(x) = &r {
            prop_assert!(x.denom().is_positive());
            prop_assert_eq!(x.numer().gcd(x.denom()), BigInt::from(1));
        }
        for p in [5u64, 7, 2_147_483_647] {
            let f = Field::Prime(p);
            let s = &(&f.from_i64(a) * &f.from_i64(c)) - &f.from_i64(b);
            match s {
                Scalar::Residue { value, modulus } => prop_assert!(value < modulus && modulus == p),
                _ => prop_assert!(false),
            }
        }
    }
}

#[test]
fn mixed_fields_are_rejected() {
    let rows = vec![vec![Q.one(), Field::Prime(5).one()]];
    assert!(Matrix::from_rows(Q, 2, rows).is_err());
    let a = Subspace::full(Q, 2);
    let b = Subspace::full(Field::Prime(5), 2);
    assert!(a.sum(&b).is_err());
}
