//! The maps `Inf₁`, `Res`, `Tra`, `Inf₂` and `δ` as explicit matrices, and
//! exactness checks for the sequences they form.
//!
//! For a central ideal `Z` of `L` and `A = 𝔽ᵏ` the nodes carry these
//! coordinates:
//!
//! * `Hom(L/Z, A)`, `Hom(L, A)`: the canonical basis of
//!   [`TriAlgebra::hom_to_field`] on `L/Z` and `L`;
//! * `Hom(Z, A)`: `k×z` matrices, row-major, against the canonical basis of `Z`;
//! * `H²(L/Z, A)`, `H²(L, A)`: class coordinates from [`h2`];
//! * the tensor block: component (⊢, ⊣, ⊥), then all pairs
//!   `(uₐ, zₜ)`, then all pairs `(zₜ, uₐ)`, where `uₐ` runs over the
//!   pivot-completion representatives of `L/L′`.
//!
//! Every map is a `codomain × domain` matrix acting on column vectors.

use rand::Rng;

use crate::catalog::random_vector;
use crate::cohomology::{h2, section_cocycle, CochainTriple, CohomologyResult};
use crate::error::Result;
use crate::exactlin::{Field, Matrix, Scalar, Subspace};
use crate::extensions::{z_star, CentralExtension};
use crate::trialgebra::{Op, TriAlgebra};

/// Everything needed to write down the maps for one pair `(L, Z)`.
struct Setting<'a> {
    l: &'a TriAlgebra,
    k: usize,
    ext: CentralExtension,
    hom_quotient: Subspace,
    hom_l: Subspace,
}

impl<'a> Setting<'a> {
    fn new(l: &'a TriAlgebra, z: &Subspace, k: usize) -> Result<Setting<'a>> {
        let ext = CentralExtension::from_central_ideal(l, z)?;
        let hom_quotient = ext.base().hom_to_field(k);
        let hom_l = l.hom_to_field(k);
        Ok(Setting { l, k, ext, hom_quotient, hom_l })
    }

    fn field(&self) -> Field {
        self.l.field()
    }

    fn z(&self) -> &Subspace {
        self.ext.kernel_space()
    }

    fn hom_z_dim(&self) -> usize {
        self.k * self.z().dim()
    }

    fn inf1(&self) -> Result<Matrix> {
        let beta = self.ext.projection();
        let (q, n, k) = (self.ext.base().dim(), self.l.dim(), self.k);
        let cols = self
            .hom_quotient
            .basis_vectors()
            .map(|chi| {
                let chi = Matrix::from_rows(self.field(), q, chi.chunks(q.max(1)).take(k).map(<[Scalar]>::to_vec).collect())?;
                let composed = chi.mul(beta)?;
                self.hom_l.coordinates(&flatten(&composed, k, n))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(from_columns(self.field(), self.hom_l.dim(), cols))
    }

    fn res(&self) -> Result<Matrix> {
        let (n, k) = (self.l.dim(), self.k);
        let iota = self.z().basis().transpose();
        let cols = self
            .hom_l
            .basis_vectors()
            .map(|pi| {
                let pi = Matrix::from_rows(self.field(), n, pi.chunks(n.max(1)).take(k).map(<[Scalar]>::to_vec).collect())?;
                Ok(flatten(&pi.mul(&iota)?, k, self.z().dim()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(from_columns(self.field(), self.hom_z_dim(), cols))
    }

    fn tra_with(&self, h2_quotient: &CohomologyResult, section: &Matrix) -> Result<Matrix> {
        let f = section_cocycle(&self.ext, section)?;
        let zd = self.z().dim();
        let cols = (0..self.hom_z_dim())
            .map(|t| {
                let mut chi = Matrix::zeros(self.field(), self.k, zd);
                chi.set(t / zd, t % zd, self.field().one())?;
                h2_quotient.class_coordinates(&f.compose(&chi)?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(from_columns(self.field(), h2_quotient.h2_dim, cols))
    }

    fn inf2(&self, h2_quotient: &CohomologyResult, h2_l: &CohomologyResult) -> Result<Matrix> {
        let beta = self.ext.projection();
        let cols = h2_quotient
            .h2_reps
            .iter()
            .map(|r| h2_l.class_coordinates(&r.pullback(beta)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(from_columns(self.field(), h2_l.h2_dim, cols))
    }
}

/// Row-major flattening of a `k×m` matrix.
fn flatten(m: &Matrix, k: usize, cols: usize) -> Vec<Scalar> {
    (0..k).flat_map(|r| (0..cols).map(move |c| m.get(r, c).clone())).collect()
}

fn from_columns(field: Field, rows: usize, cols: Vec<Vec<Scalar>>) -> Matrix {
    let mut m = Matrix::zeros(field, rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, s) in col.iter().enumerate() {
            m.set(i, j, s.clone()).expect("same field");
        }
    }
    m
}

/// `Inf₁: Hom(L/Z, A) → Hom(L, A)`, `χ ↦ χ∘β`.
pub fn inf1(l: &TriAlgebra, z: &Subspace, k: usize) -> Result<Matrix> {
    Setting::new(l, z, k)?.inf1()
}

/// `Res: Hom(L, A) → Hom(Z, A)`, `π ↦ π∘ι`.
pub fn res(l: &TriAlgebra, z: &Subspace, k: usize) -> Result<Matrix> {
    Setting::new(l, z, k)?.res()
}

/// `Tra: Hom(Z, A) → H²(L/Z, A)`, using the canonical section of `L → L/Z`.
pub fn tra(l: &TriAlgebra, z: &Subspace, k: usize) -> Result<Matrix> {
    let s = Setting::new(l, z, k)?;
    let h = h2(s.ext.base(), k)?;
    s.tra_with(&h, &s.ext.canonical_section())
}

/// `Tra` computed from an arbitrary section of `L → L/Z`.
pub fn tra_with_section(l: &TriAlgebra, z: &Subspace, k: usize, section: &Matrix) -> Result<Matrix> {
    let s = Setting::new(l, z, k)?;
    let h = h2(s.ext.base(), k)?;
    s.tra_with(&h, section)
}

/// `Inf₂: H²(L/Z, A) → H²(L, A)`, pulling cocycles back along `β`.
pub fn inf2(l: &TriAlgebra, z: &Subspace, k: usize) -> Result<Matrix> {
    let s = Setting::new(l, z, k)?;
    s.inf2(&h2(s.ext.base(), k)?, &h2(l, k)?)
}

/// The six restricted blocks of a scalar cochain, in tensor block order.
pub fn delta_of(l: &TriAlgebra, z: &Subspace, f: &CochainTriple) -> Result<Vec<Scalar>> {
    let derived = l.derived().into_space();
    let cosets = derived.quotient_map(&Subspace::full(l.field(), l.dim()))?;
    let reps: Vec<&[Scalar]> = cosets.representatives().row_vecs().collect();
    let zs: Vec<&[Scalar]> = z.basis_vectors().collect();
    let mut out = Vec::with_capacity(6 * reps.len() * zs.len());
    for op in Op::ALL {
        for u in &reps {
            for w in &zs {
                out.push(f.eval(op, u, w)[0].clone());
            }
        }
        for w in &zs {
            for u in &reps {
                out.push(f.eval(op, w, u)[0].clone());
            }
        }
    }
    Ok(out)
}

/// `δ: H²(L, 𝔽) → (L/L′⊗Z ⊕ Z⊗L/L′)³` on the class representatives.
pub fn delta_map(l: &TriAlgebra, z: &Subspace) -> Result<Matrix> {
    l.require_central(z)?;
    delta_with(l, z, &h2(l, 1)?)
}

fn delta_with(l: &TriAlgebra, z: &Subspace, h: &CohomologyResult) -> Result<Matrix> {
    let block = tensor_block_dim(l, z);
    let cols = h.h2_reps.iter().map(|f| delta_of(l, z, f)).collect::<Result<Vec<_>>>()?;
    Ok(from_columns(l.field(), block, cols))
}

/// `6 · dim(L/L′) · dim Z`.
pub fn tensor_block_dim(l: &TriAlgebra, z: &Subspace) -> usize {
    6 * (l.dim() - l.derived().dim()) * z.dim()
}

/// `im a = ker b` for composable maps.
fn exact_at(a: &Matrix, b: &Matrix) -> bool {
    a.column_space() == b.kernel()
}

fn vanishes(a: &Matrix, b: &Matrix) -> bool {
    b.mul(a).map(|m| m.is_zero()).unwrap_or(false)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiveTermReport {
    /// `Hom(L/Z,A)`, `Hom(L,A)`, `Hom(Z,A)`, `H²(L/Z,A)`, `H²(L,A)`.
    pub dims: [usize; 5],
    /// `Inf₁`, `Res`, `Tra`, `Inf₂`.
    pub ranks: [usize; 4],
    pub inf1_injective: bool,
    pub exact_at_hom_l: bool,
    pub exact_at_hom_z: bool,
    pub exact_at_h2_quotient: bool,
    pub composites_vanish: bool,
}

impl FiveTermReport {
    pub fn exact(&self) -> bool {
        self.inf1_injective && self.exact_at_hom_l && self.exact_at_hom_z && self.exact_at_h2_quotient
    }

    pub fn passed(&self) -> bool {
        self.exact() && self.composites_vanish
    }
}

/// The four maps of the five-term sequence, computed together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiveTermMaps {
    pub dims: [usize; 5],
    pub inf1: Matrix,
    pub res: Matrix,
    pub tra: Matrix,
    pub inf2: Matrix,
}

pub fn five_term_maps(l: &TriAlgebra, z: &Subspace, k: usize) -> Result<FiveTermMaps> {
    let s = Setting::new(l, z, k)?;
    let hq = h2(s.ext.base(), k)?;
    let hl = h2(l, k)?;
    Ok(FiveTermMaps {
        dims: [s.hom_quotient.dim(), s.hom_l.dim(), s.hom_z_dim(), hq.h2_dim, hl.h2_dim],
        inf1: s.inf1()?,
        res: s.res()?,
        tra: s.tra_with(&hq, &s.ext.canonical_section())?,
        inf2: s.inf2(&hq, &hl)?,
    })
}

pub fn verify_five_term(l: &TriAlgebra, z: &Subspace, k: usize) -> Result<FiveTermReport> {
    let m = five_term_maps(l, z, k)?;
    Ok(five_term_report(&m))
}

fn five_term_report(m: &FiveTermMaps) -> FiveTermReport {
    FiveTermReport {
        dims: m.dims,
        ranks: [m.inf1.rank(), m.res.rank(), m.tra.rank(), m.inf2.rank()],
        inf1_injective: m.inf1.kernel().is_zero(),
        exact_at_hom_l: exact_at(&m.inf1, &m.res),
        exact_at_hom_z: exact_at(&m.res, &m.tra),
        exact_at_h2_quotient: exact_at(&m.tra, &m.inf2),
        composites_vanish: vanishes(&m.inf1, &m.res) && vanishes(&m.res, &m.tra) && vanishes(&m.tra, &m.inf2),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfDeltaReport {
    pub h2_quotient_dim: usize,
    pub h2_dim: usize,
    pub block_dim: usize,
    pub inf2_rank: usize,
    pub delta_rank: usize,
    /// `im Inf₂ = ker δ`.
    pub exact: bool,
    /// `δ∘Inf₂ = 0`.
    pub composite_vanishes: bool,
}

impl InfDeltaReport {
    pub fn passed(&self) -> bool {
        self.exact && self.composite_vanishes
    }
}

pub fn verify_inf_delta(l: &TriAlgebra, z: &Subspace) -> Result<InfDeltaReport> {
    let s = Setting::new(l, z, 1)?;
    let hq = h2(s.ext.base(), 1)?;
    let hl = h2(l, 1)?;
    let inf = s.inf2(&hq, &hl)?;
    let delta = delta_with(l, z, &hl)?;
    Ok(InfDeltaReport {
        h2_quotient_dim: hq.h2_dim,
        h2_dim: hl.h2_dim,
        block_dim: delta.nrows(),
        inf2_rank: inf.rank(),
        delta_rank: delta.rank(),
        exact: exact_at(&inf, &delta),
        composite_vanishes: vanishes(&inf, &delta),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraImageReport {
    pub image_dim: usize,
    /// `dim L′ ∩ Z`.
    pub derived_center_dim: usize,
}

impl TraImageReport {
    pub fn holds(&self) -> bool {
        self.image_dim == self.derived_center_dim
    }
}

/// `dim im Tra = dim L′ ∩ Z` with coefficients in `𝔽`.
pub fn tra_image_theorem(l: &TriAlgebra, z: &Subspace) -> Result<TraImageReport> {
    let image_dim = tra(l, z, 1)?.rank();
    let derived_center_dim = l.derived().space().intersection(z)?.dim();
    Ok(TraImageReport { image_dim, derived_center_dim })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// (1) `δ = 0`.
    pub delta_trivial: bool,
    /// (2) `Inf₂: H²(L/Z, 𝔽) → H²(L, 𝔽)` is onto.
    pub inf2_surjective: bool,
    /// (3) `dim H²(L) = dim H²(L/Z) − dim L′∩Z`.
    pub multiplier_formula: bool,
    /// (4) `Z ⊆ Z*(L)`.
    pub z_in_z_star: bool,
}

impl EquivalenceReport {
    pub fn conditions(&self) -> [bool; 4] {
        [self.delta_trivial, self.inf2_surjective, self.multiplier_formula, self.z_in_z_star]
    }

    pub fn agree(&self) -> bool {
        let c = self.conditions();
        c.iter().all(|&b| b == c[0])
    }
}

pub fn theorem_equivalence(l: &TriAlgebra, z: &Subspace) -> Result<EquivalenceReport> {
    let s = Setting::new(l, z, 1)?;
    let hq = h2(s.ext.base(), 1)?;
    let hl = h2(l, 1)?;
    let inf = s.inf2(&hq, &hl)?;
    let delta = delta_with(l, z, &hl)?;
    let derived_center = l.derived().space().intersection(z)?.dim();
    let zs = z_star(l)?.into_space();
    Ok(EquivalenceReport {
        delta_trivial: delta.is_zero(),
        inf2_surjective: inf.rank() == hl.h2_dim,
        multiplier_formula: hl.h2_dim + derived_center == hq.h2_dim,
        z_in_z_star: z.is_subspace_of(&zs),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StallingsReport {
    /// `M(L)`, `M(L/Z)`, `Z`, `L/L′`, `L/(Z+L′)`.
    pub dims: [usize; 5],
    /// Ranks of `M(L)→M(L/Z)`, `M(L/Z)→Z`, `Z→L/L′`, `L/L′→L/(Z+L′)`,
    /// read off the dual maps `Inf₂`, `Tra`, `Res`, `Inf₁`.
    pub ranks: [usize; 4],
    /// `dim ker(M(L) → M(L/Z))`.
    pub first_kernel_dim: usize,
    /// Exactness of `Hom(L/(Z+L′)) → Hom(L/L′) → Hom(Z) → H²(L/Z) → H²(L)`.
    pub dual_exact: bool,
    /// The ranks satisfy exactness at `M(L/Z)`, `Z`, `L/L′` and
    /// surjectivity onto `L/(Z+L′)`.
    pub consistent: bool,
}

impl StallingsReport {
    pub fn passed(&self) -> bool {
        self.dual_exact && self.consistent
    }
}

pub fn stallings_check(l: &TriAlgebra, z: &Subspace) -> Result<StallingsReport> {
    let m = five_term_maps(l, z, 1)?;
    let five = five_term_report(&m);
    let derived = l.derived().into_space();
    let n = l.dim();
    let abelianized = n - derived.dim();
    let tail = n - derived.sum(z)?.dim();
    let dims = [m.dims[4], m.dims[3], z.dim(), abelianized, tail];
    let ranks = [five.ranks[3], five.ranks[2], five.ranks[1], five.ranks[0]];
    let consistent = ranks[3] == dims[4]
        && ranks[2] + ranks[3] == dims[3]
        && ranks[1] + ranks[2] == dims[2]
        && ranks[0] + ranks[1] == dims[1];
    Ok(StallingsReport {
        dims,
        ranks,
        first_kernel_dim: dims[0] - ranks[0],
        dual_exact: five.exact(),
        consistent,
    })
}

/// Central ideals to sweep over: `0`, `Z(L)`, `L′ ∩ Z(L)` and `lines`
/// random lines in `Z(L)`, without repeats.
pub fn sample_central_ideals<R: Rng>(l: &TriAlgebra, lines: usize, rng: &mut R) -> Result<Vec<Subspace>> {
    let field = l.field();
    let center = l.center().into_space();
    let mut out = vec![Subspace::zero(field, l.dim()), center.clone(), l.derived().space().intersection(&center)?];
    if !center.is_zero() {
        for _ in 0..lines {
            let coords = random_vector(field, center.dim(), rng);
            let v = center.from_coordinates(&coords);
            out.push(Subspace::span(field, l.dim(), [v])?);
        }
    }
    let mut unique: Vec<Subspace> = Vec::new();
    for s in out {
        if !unique.contains(&s) {
            unique.push(s);
        }
    }
    Ok(unique)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{abelian, cover_abelian, nilpotent_square};
    use crate::error::Error;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Q: Field = Field::Rational;

    fn e2() -> Subspace {
        Subspace::span(Q, 2, [vec![Q.zero(), Q.one()]]).unwrap()
    }

    #[test]
    fn nilpotent_square_maps() {
        let l = nilpotent_square(Q);
        let z = e2();
        let m = five_term_maps(&l, &z, 1).unwrap();
        assert_eq!(m.dims, [1, 1, 1, 3, 2]);
        let r = verify_five_term(&l, &z, 1).unwrap();
        assert_eq!(r.ranks, [1, 0, 1, 2]);
        assert!(r.passed());
        assert!(m.res.is_zero());
        assert!(delta_map(&l, &z).unwrap().is_zero());
        let d = verify_inf_delta(&l, &z).unwrap();
        assert!(d.passed());
        assert_eq!((d.h2_dim, d.inf2_rank, d.delta_rank), (2, 2, 0));
        assert!(tra_image_theorem(&l, &z).unwrap().holds());
        let eq = theorem_equivalence(&l, &z).unwrap();
        assert_eq!(eq.conditions(), [true; 4]);
        assert!(stallings_check(&l, &z).unwrap().passed());
    }

    #[test]
    fn abelian_full_center() {
        for n in 1..=2 {
            let l = abelian(Q, n);
            let z = Subspace::full(Q, n);
            let r = verify_five_term(&l, &z, 1).unwrap();
            assert_eq!(r.dims, [0, n, n, 0, 3 * n * n]);
            assert!(r.passed());
            let d = delta_map(&l, &z).unwrap();
            assert_eq!(d.rank(), 3 * n * n);
            assert_eq!(d.nrows(), 6 * n * n);
            let eq = theorem_equivalence(&l, &z).unwrap();
            assert_eq!(eq.conditions(), [false; 4]);
            let s = stallings_check(&l, &z).unwrap();
            assert!(s.passed());
            assert_eq!(s.ranks[2], n);
        }
    }

    #[test]
    fn zero_ideal_degenerates() {
        let l = nilpotent_square(Q);
        let z = Subspace::zero(Q, 2);
        assert_eq!(inf1(&l, &z, 1).unwrap(), Matrix::identity(Q, 1));
        assert_eq!(inf2(&l, &z, 1).unwrap(), Matrix::identity(Q, 2));
        assert_eq!(delta_map(&l, &z).unwrap().nrows(), 0);
        assert_eq!(theorem_equivalence(&l, &z).unwrap().conditions(), [true; 4]);
        assert!(verify_inf_delta(&l, &z).unwrap().passed());
    }

    #[test]
    fn cover_kernel_transgression() {
        let k = cover_abelian(Q, 1);
        let z = k.derived().into_space();
        let r = tra_image_theorem(&k, &z).unwrap();
        assert_eq!((r.image_dim, r.derived_center_dim), (3, 3));
    }

    #[test]
    fn transgression_ignores_the_section() {
        let l = cover_abelian(Q, 1);
        let z = l.center().into_space();
        let ext = CentralExtension::from_central_ideal(&l, &z).unwrap();
        let mut section = ext.canonical_section();
        section.set(2, 0, Q.from_i64(7)).unwrap();
        assert_eq!(tra_with_section(&l, &z, 2, &section).unwrap(), tra(&l, &z, 2).unwrap());
    }

    #[test]
    fn non_central_ideal_is_refused() {
        let l = nilpotent_square(Q);
        let z = Subspace::full(Q, 2);
        assert!(matches!(verify_five_term(&l, &z, 1), Err(Error::NotCentral { .. })));
        assert!(matches!(delta_map(&l, &z), Err(Error::NotCentral { .. })));
    }

    #[test]
    fn sampled_ideals_are_central() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let l = abelian(Q, 2);
        let ideals = sample_central_ideals(&l, 3, &mut rng).unwrap();
        assert!(ideals.len() >= 3);
        for z in &ideals {
            assert!(l.is_central(z).unwrap());
        }
    }
}
