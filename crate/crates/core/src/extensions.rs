//! Central extensions, covers and the subspace `Z*(L)`.
//!
//! Covers are built cohomologically: extend `L` by a basis of `H²(L, 𝔽)`,
//! then divide out a complement of `ker ∩ K′` inside the kernel so the
//! result is stem.

use rand::Rng;

use crate::catalog::{random_invertible, random_vector};
use crate::cohomology::{coboundary, cocycle_defects, h2, section_cocycle, CochainTriple, CohomologyResult};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};
use crate::trialgebra::{AlgSubspace, Op, TriAlgebra};

/// `0 → kernel → total → base → 0` with `kernel ⊆ Z(total)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralExtension {
    total: TriAlgebra,
    kernel: Subspace,
    base: TriAlgebra,
    projection: Matrix,
    cocycle: CochainTriple,
}

impl CentralExtension {
    /// Checks that `projection` (a `dim base × dim total` matrix) is a
    /// surjective homomorphism with central kernel `kernel`.
    pub fn new(total: TriAlgebra, kernel: Subspace, base: TriAlgebra, projection: Matrix) -> Result<CentralExtension> {
        if projection.nrows() != base.dim() || projection.ncols() != total.dim() {
            return Err(Error::DimensionMismatch(format!(
                "projection of shape {}×{} between dimensions {} and {}",
                projection.nrows(),
                projection.ncols(),
                total.dim(),
                base.dim()
            )));
        }
        if projection.rank() != base.dim() || projection.kernel() != kernel {
            return Err(Error::DimensionMismatch("projection kernel differs from the stated kernel".into()));
        }
        total.require_central(&kernel)?;
        let mut ext = CentralExtension {
            cocycle: CochainTriple::zero(base.field(), base.dim(), kernel.dim()),
            total,
            kernel,
            base,
            projection,
        };
        if !ext.is_homomorphism() {
            return Err(Error::MalformedAlgebra("projection is not a homomorphism".into()));
        }
        ext.cocycle = section_cocycle(&ext, &ext.canonical_section())?;
        Ok(ext)
    }

    /// `L → L/Z` for a central ideal `Z` of `l`.
    pub fn from_central_ideal(l: &TriAlgebra, z: &Subspace) -> Result<CentralExtension> {
        l.require_central(z)?;
        let q = l.quotient(&l.subspace(z.clone())?)?;
        CentralExtension::new(l.clone(), z.clone(), q.algebra, q.projection)
    }

    pub fn total(&self) -> &TriAlgebra {
        &self.total
    }

    pub fn base(&self) -> &TriAlgebra {
        &self.base
    }

    pub fn kernel_space(&self) -> &Subspace {
        &self.kernel
    }

    pub fn kernel(&self) -> AlgSubspace<'_> {
        AlgSubspace::new(&self.total, self.kernel.clone()).expect("kernel lives in the total space")
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// The section cocycle of [`canonical_section`](Self::canonical_section),
    /// valued in the kernel's canonical coordinates.
    pub fn cocycle(&self) -> &CochainTriple {
        &self.cocycle
    }

    /// The section sending the base basis onto the pivot completion of the
    /// kernel inside the total space.
    pub fn canonical_section(&self) -> Matrix {
        let field = self.total.field();
        let full = Subspace::full(field, self.total.dim());
        let reps = self.kernel.complement_in(&full).expect("kernel is a subspace").basis().transpose();
        let square = self.projection.mul(&reps).expect("shapes agree");
        let inv = square.inverse().expect("complement maps isomorphically onto the base");
        reps.mul(&inv).expect("shapes agree")
    }

    /// `A ⊆ L′`.
    pub fn is_stem(&self) -> bool {
        self.kernel.is_subspace_of(self.total.derived().space())
    }

    pub fn is_central(&self) -> bool {
        self.total.is_central(&self.kernel).unwrap_or(false)
    }

    /// `π(eᵢ ∗ eⱼ) = π(eᵢ) ∗ π(eⱼ)` on all basis pairs and products.
    pub fn is_homomorphism(&self) -> bool {
        let cols: Vec<Vec<Scalar>> = (0..self.total.dim()).map(|i| self.projection.column(i)).collect();
        Op::ALL.into_iter().all(|op| {
            (0..self.total.dim()).all(|i| {
                (0..self.total.dim()).all(|j| {
                    let lhs = self.projection.apply(self.total.product(op, i, j)).expect("shapes agree");
                    lhs == self.base.multiply_unchecked(&cols[i], &cols[j], op)
                })
            })
        })
    }

    /// `ω(Z(total))`.
    pub fn center_image(&self) -> Subspace {
        self.total.center().space().image_under(&self.projection).expect("shapes agree")
    }

    /// Divides out the pivot complement `E` of `ker ∩ total′` in the kernel,
    /// leaving a stem extension of the same base.
    pub fn stem_reduction(&self) -> Result<CentralExtension> {
        let d = self.kernel.intersection(self.total.derived().space())?;
        let e = d.complement_in(&self.kernel)?;
        if e.is_zero() {
            return Ok(self.clone());
        }
        let q = self.total.quotient(&self.total.subspace(e)?)?;
        let kernel = self.kernel.image_under(&q.projection)?;
        let projection = self.projection.mul(&q.section)?;
        CentralExtension::new(q.algebra, kernel, self.base.clone(), projection)
    }
}

fn check_cochain(b: &TriAlgebra, k: usize, f: &CochainTriple) -> Result<()> {
    if f.field() != b.field() {
        return Err(Error::FieldMismatch { expected: b.field(), found: f.field() });
    }
    if f.base_dim() != b.dim() || f.coeff_dim() != k {
        return Err(Error::DimensionMismatch(format!(
            "cochain on ({}, {}) for base of dimension {} and k = {k}",
            f.base_dim(),
            f.coeff_dim(),
            b.dim()
        )));
    }
    Ok(())
}

/// `B ⊕ 𝔽ᵏ` with `(x, a) ∗ (y, c) = (x ∗ y, f∗(x, y))`, built without any
/// validity checks. The base coordinates come first.
pub fn force_build(b: &TriAlgebra, k: usize, f: &CochainTriple) -> Result<CentralExtension> {
    check_cochain(b, k, f)?;
    let (n, field) = (b.dim(), b.field());
    let mut total = TriAlgebra::abelian(field, n + k);
    for op in Op::ALL {
        for i in 0..n {
            for j in 0..n {
                let mut v = b.product(op, i, j).to_vec();
                v.extend_from_slice(f.value(op, i, j));
                total.set_product(op, i, j, v)?;
            }
        }
    }
    let kernel = Subspace::span(field, n + k, (n..n + k).map(|t| unit(field, n + k, t)))?;
    let mut projection = Matrix::zeros(field, n, n + k);
    for i in 0..n {
        projection.set(i, i, field.one())?;
    }
    Ok(CentralExtension { total, kernel, base: b.clone(), projection, cocycle: f.clone() })
}

fn unit(field: Field, n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[k] = field.one();
    v
}

/// Central extension of a validated `b` by `𝔽ᵏ` along the cocycle `f`.
pub fn build_central_extension(b: &TriAlgebra, k: usize, f: &CochainTriple) -> Result<CentralExtension> {
    check_cochain(b, k, f)?;
    b.require_valid()?;
    let mut axioms: Vec<usize> = cocycle_defects(b, f)?.iter().map(|d| d.axiom).collect();
    if !axioms.is_empty() {
        axioms.dedup();
        return Err(Error::CocycleViolation { axioms });
    }
    force_build(b, k, f)
}

/// A cover of `L` together with the cohomology it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub extension: CentralExtension,
    pub multiplier_dim: usize,
    pub cohomology: CohomologyResult,
}

/// Stem reduction of the extension of `l` by the stacked cocycles `reps`.
/// When `reps` is a basis of `H²(l, 𝔽)` the result is a cover.
pub fn cover_from_representatives(l: &TriAlgebra, reps: &[CochainTriple]) -> Result<CentralExtension> {
    let f = CochainTriple::stack(l.field(), l.dim(), reps)?;
    build_central_extension(l, reps.len(), &f)?.stem_reduction()
}

pub fn cover(l: &TriAlgebra) -> Result<Cover> {
    let cohomology = h2(l, 1)?;
    let extension = cover_from_representatives(l, &cohomology.h2_reps)?;
    Ok(Cover { extension, multiplier_dim: cohomology.h2_dim, cohomology })
}

/// `Z*(L)`, computed as the image of the center of a cover.
pub fn z_star(l: &TriAlgebra) -> Result<AlgSubspace<'_>> {
    let c = cover(l)?;
    l.subspace(c.extension.center_image())
}

/// `Z(L) = Z*(L)`.
pub fn is_unicentral(l: &TriAlgebra) -> Result<bool> {
    Ok(z_star(l)?.space() == l.center().space())
}

/// `r` random combinations of the `H²` representatives, each shifted by a
/// random coboundary. With `r = dim H²` and `mix` invertible these still
/// represent a basis of `H²`.
fn shuffled_representatives<R: Rng>(
    l: &TriAlgebra,
    h: &CohomologyResult,
    mix: &Matrix,
    rng: &mut R,
) -> Result<Vec<CochainTriple>> {
    let field = l.field();
    (0..mix.nrows())
        .map(|a| {
            let mut f = CochainTriple::zero(field, l.dim(), 1);
            for (b, rep) in h.h2_reps.iter().enumerate() {
                f = f.add(&rep.scale(mix.get(a, b)))?;
            }
            let eps = Matrix::from_rows(field, l.dim(), vec![random_vector(field, l.dim(), rng)])?;
            f.add(&coboundary(l, &eps)?)
        })
        .collect()
}

/// A cover built from a random basis of `H²`: an invertible recombination of
/// the canonical representatives plus random coboundaries.
pub fn random_cover<R: Rng>(l: &TriAlgebra, h: &CohomologyResult, rng: &mut R) -> Result<CentralExtension> {
    let mix = random_invertible(l.field(), h.h2_dim, rng);
    cover_from_representatives(l, &shuffled_representatives(l, h, &mix, rng)?)
}

/// A stem extension by `r ≤ dim H²` random cohomology classes.
pub fn random_stem_extension<R: Rng>(
    l: &TriAlgebra,
    h: &CohomologyResult,
    r: usize,
    rng: &mut R,
) -> Result<CentralExtension> {
    let field = l.field();
    let rows = (0..r).map(|_| random_vector(field, h.h2_dim, rng)).collect();
    let mix = Matrix::from_rows(field, h.h2_dim, rows)?;
    cover_from_representatives(l, &shuffled_representatives(l, h, &mix, rng)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StemCenterReport {
    pub z_star: Subspace,
    pub center: Subspace,
    pub unicentral: bool,
    /// `ω(Z(K))` for randomized covers `K`.
    pub cover_images: Vec<Subspace>,
    /// `ω(Z(E))` for stem extensions by fewer classes, the first being the
    /// identity extension.
    pub partial_images: Vec<Subspace>,
}

impl StemCenterReport {
    /// Every randomized cover yields `Z*(L)`.
    pub fn covers_agree(&self) -> bool {
        self.cover_images.iter().all(|s| *s == self.z_star)
    }

    pub fn z_star_in_center(&self) -> bool {
        self.z_star.is_subspace_of(&self.center)
    }

    /// `Z*(L) ⊆ ω(Z(E)) ⊆ Z(L)` for every stem extension tried.
    pub fn partial_bracketed(&self) -> bool {
        self.partial_images.iter().all(|s| self.z_star.is_subspace_of(s) && s.is_subspace_of(&self.center))
    }

    /// For unicentral `L`, every stem extension tried has `ω(Z(E)) = Z(L)`.
    pub fn unicentral_images_equal_center(&self) -> bool {
        !self.unicentral || self.cover_images.iter().chain(&self.partial_images).all(|s| *s == self.center)
    }

    pub fn passed(&self) -> bool {
        self.covers_agree() && self.z_star_in_center() && self.partial_bracketed() && self.unicentral_images_equal_center()
    }
}

/// Compares `ω(Z(E))` across `trials` randomized covers and `trials` stem
/// extensions by random subsets of classes, plus the identity extension.
pub fn stem_center_image_check<R: Rng>(l: &TriAlgebra, trials: usize, rng: &mut R) -> Result<StemCenterReport> {
    let c = cover(l)?;
    let z_star = c.extension.center_image();
    let center = l.center().into_space();
    let h = &c.cohomology;
    let mut cover_images = Vec::with_capacity(trials);
    let mut partial_images = Vec::with_capacity(trials + 1);
    let identity = CentralExtension::from_central_ideal(l, &Subspace::zero(l.field(), l.dim()))?;
    partial_images.push(identity.center_image());
    for _ in 0..trials {
        cover_images.push(random_cover(l, h, rng)?.center_image());
        let r = rng.gen_range(0..=h.h2_dim);
        partial_images.push(random_stem_extension(l, h, r, rng)?.center_image());
    }
    Ok(StemCenterReport { unicentral: z_star == center, z_star, center, cover_images, partial_images })
}

/// Isomorphism invariants used to compare covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub derived_center_dim: usize,
    /// `dim K′◊K′`.
    pub derived_square_dim: usize,
    /// `dim H²(K, 𝔽)`.
    pub h2_dim: usize,
}

pub fn fingerprint(k: &TriAlgebra) -> Result<Fingerprint> {
    let derived = k.derived();
    let center = k.center();
    Ok(Fingerprint {
        dim: k.dim(),
        derived_dim: derived.dim(),
        center_dim: center.dim(),
        derived_center_dim: derived.space().intersection(center.space())?.dim(),
        derived_square_dim: k.product_subspace(&derived, &derived)?.dim(),
        h2_dim: h2(k, 1)?.h2_dim,
    })
}
