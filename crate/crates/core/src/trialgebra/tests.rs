use super::*;
use crate::catalog::{abelian, cover_abelian, nilpotent_square, random_invertible, upper_triangular};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rational;

fn v(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| Q.from_i64(x)).collect()
}

#[test]
fn abelian_passes() {
    assert!(abelian(Q, 3).validate_axioms().passed());
}

#[test]
fn cover_abelian_one_passes() {
    let k = cover_abelian(Q, 1);
    assert_eq!(k.dim(), 4);
    assert!(k.validate_axioms().passed());
}

#[test]
fn left_unit_action_breaks_first_identity() {
    let mut a = TriAlgebra::abelian(Q, 2);
    a.set_product(Op::Vdash, 0, 1, v(&[1, 0])).unwrap();
    let report = a.validate_axioms();
    assert!(!report.passed());
    let first = &report.violations[0];
    assert_eq!(first.axiom, 1);
    // (e1⊢e2)⊢e2 = e1 while e1⊢(e2⊢e2) = 0
    let hit = report.violations.iter().find(|x| x.axiom == 1 && x.triple == (0, 1, 1)).unwrap();
    assert_eq!(hit.defect, v(&[1, 0]));
    // Independent evaluation of both sides.
    let e1 = v(&[1, 0]);
    let e2 = v(&[0, 1]);
    let lhs = a.multiply(&a.multiply(&e1, &e2, Op::Vdash).unwrap(), &e2, Op::Vdash).unwrap();
    let rhs = a.multiply(&e1, &a.multiply(&e2, &e2, Op::Vdash).unwrap(), Op::Vdash).unwrap();
    assert_ne!(lhs, rhs);
    assert!(matches!(a.require_valid(), Err(Error::Unvalidated { first_axiom: 1, .. })));
}

#[test]
fn multiply_examples() {
    let k = cover_abelian(Q, 1);
    let x = v(&[1, 0, 0, 0]);
    assert_eq!(k.multiply(&x, &x, Op::Vdash).unwrap(), v(&[0, 1, 0, 0]));
    assert_eq!(k.multiply(&x, &x, Op::Dashv).unwrap(), v(&[0, 0, 1, 0]));
    assert_eq!(k.multiply(&x, &x, Op::Perp).unwrap(), v(&[0, 0, 0, 1]));
    let a = abelian(Q, 2);
    assert_eq!(a.multiply(&v(&[3, 1]), &v(&[2, -5]), Op::Perp).unwrap(), v(&[0, 0]));
    assert!(matches!(a.multiply(&v(&[1]), &v(&[1, 1]), Op::Vdash), Err(Error::DimensionMismatch(_))));
}

#[test]
fn multiply_is_bilinear() {
    let a = upper_triangular(Q);
    let (x, y, z) = (v(&[1, 2, -1]), v(&[0, 3, 1]), v(&[2, -1, 4]));
    let two = Q.from_i64(2);
    let scale = |s: &Scalar, w: &[Scalar]| w.iter().map(|t| s * t).collect::<Vec<_>>();
    let add = |p: &[Scalar], q: &[Scalar]| p.iter().zip(q).map(|(a, b)| a + b).collect::<Vec<_>>();
    for op in Op::ALL {
        let lhs = a.multiply(&scale(&two, &x), &add(&y, &z), op).unwrap();
        let rhs = add(
            &scale(&two, &a.multiply(&x, &y, op).unwrap()),
            &scale(&two, &a.multiply(&x, &z, op).unwrap()),
        );
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn product_subspaces() {
    let k = cover_abelian(Q, 1);
    let zero = k.zero_space();
    let full = k.full_space();
    assert_eq!(k.product_subspace(&zero, &full).unwrap().dim(), 0);
    assert_eq!(k.derived().dim(), 3);
    assert_eq!(k.product_subspace(&full, &full).unwrap(), k.derived());

    let l = nilpotent_square(Q);
    assert_eq!(l.derived().space(), &Subspace::span(Q, 2, [v(&[0, 1])]).unwrap());
    assert_eq!(abelian(Q, 3).derived().dim(), 0);

    let other = nilpotent_square(Q);
    assert_eq!(l.product_subspace(&other.full_space(), &l.full_space()), Err(Error::ParentMismatch));
}

#[test]
fn product_subspace_is_monotone() {
    let k = cover_abelian(Q, 2);
    let s = k.span(vec![unit(14, 0)]).unwrap();
    let s2 = k.span(vec![unit(14, 0), unit(14, 1)]).unwrap();
    let t = k.span(vec![unit(14, 1)]).unwrap();
    let small = k.product_subspace(&s, &t).unwrap();
    let big = k.product_subspace(&s2, &s2).unwrap();
    assert_eq!(small.dim(), 3);
    assert_eq!(big.dim(), 12);
    assert!(small.space().is_subspace_of(big.space()));
}

fn unit(n: usize, k: usize) -> Vec<Scalar> {
    let mut e = vec![Q.zero(); n];
    e[k] = Q.one();
    e
}

#[test]
fn centers() {
    assert_eq!(abelian(Q, 3).center().dim(), 3);
    let k = cover_abelian(Q, 1);
    assert_eq!(k.center(), k.derived());
    let l = nilpotent_square(Q);
    assert_eq!(l.center().space(), &Subspace::span(Q, 2, [v(&[0, 1])]).unwrap());
    assert_eq!(upper_triangular(Q).center().dim(), 0);
}

#[test]
fn ideals() {
    let l = nilpotent_square(Q);
    assert!(l.is_ideal(&l.center()).unwrap());
    assert!(l.is_ideal(&l.derived()).unwrap());
    assert!(!l.is_ideal(&l.span(vec![v(&[1, 0])]).unwrap()).unwrap());
    let k = cover_abelian(Q, 2);
    assert!(k.is_ideal(&k.center()).unwrap());
    assert!(k.is_ideal(&k.derived()).unwrap());
}

#[test]
fn central_requirement_names_the_vector() {
    let l = nilpotent_square(Q);
    let s = Subspace::full(Q, 2);
    match l.require_central(&s) {
        Err(Error::NotCentral { vector }) => assert_eq!(vector, "1, 0"),
        other => panic!("{other:?}"),
    }
    assert!(l.require_central(l.center().space()).is_ok());
}

#[test]
fn quotients() {
    let k = cover_abelian(Q, 1);
    let q = k.quotient(&k.derived()).unwrap();
    assert_eq!(q.algebra, TriAlgebra::abelian(Q, 1));
    assert_eq!(q.projection.mul(&q.section).unwrap(), Matrix::identity(Q, 1));

    let l = nilpotent_square(Q);
    let q = l.quotient(&l.zero_space()).unwrap();
    for op in Op::ALL {
        assert_eq!(q.algebra.tensor(op), l.tensor(op));
    }
    assert_eq!(q.projection, Matrix::identity(Q, 2));

    let q = l.quotient(&l.center()).unwrap();
    assert_eq!(q.algebra, TriAlgebra::abelian(Q, 1));
    assert_eq!(q.section.column(0), v(&[1, 0]));

    assert_eq!(l.quotient(&l.span(vec![v(&[1, 0])]).unwrap()), Err(Error::NotIdeal));
}

#[test]
fn quotients_stay_valid() {
    let a = upper_triangular(Q);
    let ideal = a.span(vec![v(&[0, 1, 0])]).unwrap();
    assert!(a.is_ideal(&ideal).unwrap());
    let q = a.quotient(&ideal).unwrap();
    assert_eq!(q.algebra.dim(), 2);
    assert!(q.algebra.validate_axioms().passed());
    // The projection is a homomorphism.
    for op in Op::ALL {
        for i in 0..3 {
            for j in 0..3 {
                let lhs = q.projection.apply(a.product(op, i, j)).unwrap();
                let rhs = q
                    .algebra
                    .multiply(&q.projection.column(i), &q.projection.column(j), op)
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn hom_dimensions() {
    assert_eq!(abelian(Q, 3).hom_to_field(1).dim(), 3);
    assert_eq!(abelian(Q, 3).hom_to_field(2).dim(), 6);
    assert_eq!(nilpotent_square(Q).hom_to_field(1).dim(), 1);
    assert_eq!(cover_abelian(Q, 1).hom_to_field(1).dim(), 1);
    let h = nilpotent_square(Q).hom_to_field(1);
    assert_eq!(h.basis_vectors().next().unwrap(), &v(&[1, 0])[..]);
}

#[test]
fn dimension_bounds() {
    let k = cover_abelian(Q, 1);
    let r = k.check_dim_bounds(Some(k.derived().space())).unwrap();
    assert_eq!((r.central_quotient_dim, r.derived_dim, r.derived_bound), (1, 3, 3));
    let pair = r.defining_pair.clone().unwrap();
    assert!(pair.is_defining_pair);
    assert_eq!(pair.dim_bound, 4);
    assert!(r.holds() && r.tight());

    let r = abelian(Q, 4).check_dim_bounds(None).unwrap();
    assert_eq!((r.central_quotient_dim, r.derived_dim, r.derived_bound), (0, 0, 0));
    assert!(r.holds());

    let k2 = cover_abelian(Q, 2);
    let r = k2.check_dim_bounds(Some(k2.center().space())).unwrap();
    assert_eq!((r.derived_dim, r.derived_bound, r.dim), (12, 12, 14));
    assert!(r.tight());
}

#[test]
fn basis_change_preserves_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for a in [cover_abelian(Q, 1), nilpotent_square(Q), upper_triangular(Q)] {
        let p = random_invertible(Q, a.dim(), &mut rng);
        let b = a.change_basis(&p).unwrap();
        assert!(b.validate_axioms().passed());
        assert_eq!(b.center().dim(), a.center().dim());
        assert_eq!(b.derived().dim(), a.derived().dim());
        // Round trip through the inverse recovers the original table.
        let back = b.change_basis(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, a);
    }
}

#[test]
fn direct_sums() {
    let s = nilpotent_square(Q).direct_sum(&abelian(Q, 1)).unwrap();
    assert_eq!(s.dim(), 3);
    assert!(s.validate_axioms().passed());
    assert_eq!(s.center().dim(), 2);
    assert_eq!(s.derived().dim(), 1);
    let f5 = Field::prime(5).unwrap();
    assert!(matches!(s.direct_sum(&abelian(f5, 1)), Err(Error::FieldMismatch { .. })));
}

#[test]
fn tensors_are_checked() {
    let bad = TriAlgebra::new(Q, 2, [vec![Q.zero(); 8], vec![Q.zero(); 8], vec![Q.zero(); 7]]);
    assert!(matches!(bad, Err(Error::MalformedAlgebra(_))));
    let mut a = TriAlgebra::abelian(Q, 2);
    assert!(a.set_product(Op::Perp, 2, 0, v(&[0, 0])).is_err());
    assert!(a.set_product(Op::Perp, 0, 0, v(&[0])).is_err());
}
