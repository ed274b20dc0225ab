//! Named algebras and random generators.

use rand::Rng;

use crate::cohomology::{z2_space, CochainTriple};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};
use crate::extensions::build_central_extension;
use crate::trialgebra::{Op, TriAlgebra};

fn unit(field: Field, n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[k] = field.one();
    v
}

/// The `n`-dimensional algebra with all products zero.
pub fn abelian(field: Field, n: usize) -> TriAlgebra {
    TriAlgebra::abelian(field, n).with_name(format!("abelian{n}"))
}

/// The maximal defining pair of the abelian algebra of dimension `n`.
///
/// Basis order: `x₁..xₙ`, then `mᵢⱼ`, `sᵢⱼ`, `tᵢⱼ` (each row-major in
/// `(i, j)`), with `xᵢ⊢xⱼ = mᵢⱼ`, `xᵢ⊣xⱼ = sᵢⱼ`, `xᵢ⊥xⱼ = tᵢⱼ` and all
/// other products zero. Dimension `n + 3n²`.
pub fn cover_abelian(field: Field, n: usize) -> TriAlgebra {
    let dim = n + 3 * n * n;
    let mut a = TriAlgebra::abelian(field, dim);
    for (block, op) in Op::ALL.into_iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let target = n + block * n * n + i * n + j;
                a.set_product(op, i, j, unit(field, dim, target)).expect("indices in range");
            }
        }
    }
    a.with_name(format!("cover-abelian{n}"))
}

/// Kernel `span(mᵢⱼ, sᵢⱼ, tᵢⱼ)` of [`cover_abelian`].
pub fn cover_abelian_kernel(field: Field, n: usize) -> crate::exactlin::Subspace {
    let dim = n + 3 * n * n;
    crate::exactlin::Subspace::span(field, dim, (n..dim).map(|k| unit(field, dim, k)))
        .expect("unit vectors")
}

/// Two-dimensional algebra whose only nonzero product is `e₁⊢e₁ = e₂`.
pub fn nilpotent_square(field: Field) -> TriAlgebra {
    let mut a = TriAlgebra::abelian(field, 2);
    a.set_product(Op::Vdash, 0, 0, unit(field, 2, 1)).expect("indices in range");
    a.with_name("nilpotent2")
}

/// Associative algebra seen as triassociative with all three products equal
/// to the given multiplication table.
pub fn from_associative(assoc: &TriAlgebra) -> TriAlgebra {
    let mut a = TriAlgebra::abelian(assoc.field(), assoc.dim());
    for op in Op::ALL {
        for i in 0..assoc.dim() {
            for j in 0..assoc.dim() {
                a.set_product(op, i, j, assoc.product(Op::Vdash, i, j).to_vec()).expect("same shape");
            }
        }
    }
    a
}

/// Upper-triangular 2×2 matrices (`e₁₁, e₁₂, e₂₂`) with ⊢ = ⊣ = ⊥ = matrix
/// multiplication.
pub fn upper_triangular(field: Field) -> TriAlgebra {
    let mut m = TriAlgebra::abelian(field, 3);
    // e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22
    let set = |m: &mut TriAlgebra, i, j, k| m.set_product(Op::Vdash, i, j, unit(field, 3, k)).unwrap();
    set(&mut m, 0, 0, 0);
    set(&mut m, 0, 1, 1);
    set(&mut m, 1, 2, 1);
    set(&mut m, 2, 2, 2);
    from_associative(&m).with_name("upper-triangular")
}

/// One-dimensional algebra with `e ∗ e = e` for all three products.
pub fn idempotent(field: Field) -> TriAlgebra {
    let mut m = TriAlgebra::abelian(field, 1);
    m.set_product(Op::Vdash, 0, 0, vec![field.one()]).unwrap();
    from_associative(&m).with_name("idempotent")
}

/// Associative algebra with only ⊥ nonzero: `(𝔽[x]/x³)₊` via `x⊥x = x²`.
pub fn perp_truncated(field: Field) -> TriAlgebra {
    let mut a = TriAlgebra::abelian(field, 2);
    a.set_product(Op::Perp, 0, 0, unit(field, 2, 1)).unwrap();
    a.with_name("perp-truncated")
}

/// Resolves a base name of the form `abelianN`, `cover-abelianN`,
/// `nilpotent2`, `upper-triangular`, `idempotent` or `perp-truncated`.
pub fn by_name(field: Field, name: &str) -> Result<TriAlgebra> {
    let bad = || Error::Parse(format!("unknown base algebra {name:?}"));
    if let Some(n) = name.strip_prefix("cover-abelian") {
        return Ok(cover_abelian(field, n.parse().map_err(|_| bad())?));
    }
    if let Some(n) = name.strip_prefix("abelian") {
        return Ok(abelian(field, n.parse().map_err(|_| bad())?));
    }
    match name {
        "nilpotent2" => Ok(nilpotent_square(field)),
        "upper-triangular" => Ok(upper_triangular(field)),
        "idempotent" => Ok(idempotent(field)),
        "perp-truncated" => Ok(perp_truncated(field)),
        _ => Err(bad()),
    }
}

/// Small random integer in `[-r, r]` as a field element.
pub fn random_scalar<R: Rng>(field: Field, rng: &mut R, r: i64) -> Scalar {
    field.from_i64(rng.gen_range(-r..=r))
}

pub fn random_vector<R: Rng>(field: Field, n: usize, rng: &mut R) -> Vec<Scalar> {
    (0..n).map(|_| random_scalar(field, rng, 3)).collect()
}

/// Random invertible matrix with small entries.
pub fn random_invertible<R: Rng>(field: Field, n: usize, rng: &mut R) -> Matrix {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..n).map(|_| random_vector(field, n, rng)).collect();
        let m = Matrix::from_rows(field, n, rows).expect("well formed");
        if m.rank() == n {
            return m;
        }
    }
}

/// Uniformly random triple of bilinear maps `B×B → 𝔽ᵏ` with small entries.
pub fn random_cochain<R: Rng>(base: &TriAlgebra, k: usize, rng: &mut R) -> CochainTriple {
    let n = base.dim();
    let data = random_vector(base.field(), 3 * n * n * k, rng);
    CochainTriple::from_vector(base.field(), n, k, data).expect("length matches")
}

/// Random element of `Z²(B, 𝔽ᵏ)`: a random combination of the cocycle
/// basis, resampled until nonzero (when the space is nonzero).
pub fn random_cocycle<R: Rng>(base: &TriAlgebra, k: usize, rng: &mut R) -> Result<CochainTriple> {
    let z2 = z2_space(base, k)?;
    let n = base.dim();
    for _ in 0..64 {
        let coords = random_vector(base.field(), z2.dim(), rng);
        let v = z2.from_coordinates(&coords);
        if z2.dim() == 0 || v.iter().any(|s| !s.is_zero()) {
            return CochainTriple::from_vector(base.field(), n, k, v);
        }
    }
    Ok(CochainTriple::zero(base.field(), n, k))
}

/// Central extension of `base` by `𝔽ᵏ` along a random cocycle.
pub fn random_extension<R: Rng>(base: &TriAlgebra, k: usize, rng: &mut R) -> Result<TriAlgebra> {
    let f = random_cocycle(base, k, rng)?;
    Ok(build_central_extension(base, k, &f)?.total().clone())
}
