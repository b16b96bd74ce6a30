//! Rational polyhedral cones: primitive extreme rays, exact dual cones,
//! the full face lattice with face duality, and the reduction of a pointed
//! non-full cone to a full one over its saturated span.
//!
//! A [`Cone`] is always pointed: constructors reject input containing a
//! line and name a lineality direction in the error. Non-full pointed
//! cones are accepted; operations that need a full cone say so and return
//! [`Error::NotFull`] otherwise.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    self, express_in_lattice_basis, kernel_basis, saturate_span, smith_normal_form,
    IntegerMatrix, LatticeVector,
};

/// A pointed rational polyhedral cone `C = Cone(G)` together with its
/// primitive extreme rays and the primitive extreme rays of the dual cone.
///
/// For a full cone the dual rays generate `C^∨`. For a pointed non-full
/// cone the stored dual rays are the extreme rays of `C^∨ ∩ span(C)`; the
/// dual cone itself is that cone plus the orthogonal complement of
/// `span(C)`, and full-cone operations are routed through
/// [`reduce_to_full_pointed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    ambient_rank: usize,
    span_rank: usize,
    generators: Vec<LatticeVector>,
    rays: Vec<LatticeVector>,
    dual_rays: Vec<LatticeVector>,
}

/// Pointed/full/simplicial/smooth flags for a cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub pointed: bool,
    pub full: bool,
    pub simplicial: bool,
    pub smooth: bool,
}

/// A face `F` of a cone, presented by the primitive parent rays it contains.
///
/// `ray_indices` index into the parent's ray list (`Cone::rays`, or
/// `Cone::dual_rays` for descriptors produced by [`Cone::dual_face`]);
/// `sum` is `v_F`, the sum of the face's primitive generators, and
/// `supporting` is a functional in the dual cone vanishing exactly on `F`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub ray_indices: Vec<usize>,
    pub generators: Vec<LatticeVector>,
    pub sum: LatticeVector,
    pub dim: usize,
    pub supporting: LatticeVector,
}

impl Face {
    pub fn is_zero(&self) -> bool {
        self.ray_indices.is_empty()
    }
}

fn validate_generators(ambient_rank: usize, generators: &[LatticeVector]) -> Result<()> {
    if ambient_rank == 0 {
        return Err(Error::DegenerateInput("ambient rank must be positive"));
    }
    if generators.is_empty() {
        return Err(Error::DegenerateInput("a cone needs at least one generator"));
    }
    for g in generators {
        if g.rank() != ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: ambient_rank,
                found: g.rank(),
            });
        }
        if g.is_zero() {
            return Err(Error::DegenerateInput("zero vector among cone generators"));
        }
    }
    Ok(())
}

/// Distinct primitive directions among the generators.
fn primitive_directions(generators: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    let mut set = BTreeSet::new();
    for g in generators {
        set.insert(g.primitivize()?);
    }
    Ok(set.into_iter().collect())
}

pub(crate) fn for_each_subset_of_size(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance the combination odometer
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Extreme rays of the dual of a full cone, by facet enumeration: every
/// facet of `Cone(dirs)` is spanned by `d − 1` linearly independent
/// generators, and its primitive normal with the correct sign is an extreme
/// ray of the dual cone.
fn dual_rays_of_full(dirs: &[LatticeVector], d: usize) -> Vec<LatticeVector> {
    let mut found = BTreeSet::new();
    for_each_subset_of_size(dirs.len(), d - 1, &mut |subset| {
        let rows: Vec<LatticeVector> = subset.iter().map(|&i| dirs[i].clone()).collect();
        let m = IntegerMatrix::from_rows(&rows);
        let kernel = if d == 1 {
            vec![LatticeVector::unit(1, 0)]
        } else {
            if m.rank() != d - 1 {
                return;
            }
            kernel_basis(&m)
        };
        if kernel.len() != 1 {
            return;
        }
        let w = kernel[0].primitivize().expect("kernel vector is nonzero");
        let mut nonneg = true;
        let mut nonpos = true;
        for g in dirs {
            let p = w.pairing(g).expect("ranks agree");
            if p.is_negative() {
                nonneg = false;
            }
            if p.is_positive() {
                nonpos = false;
            }
            if !nonneg && !nonpos {
                return;
            }
        }
        if nonneg {
            found.insert(w);
        } else if nonpos {
            found.insert(w.neg());
        }
    });
    found.into_iter().collect()
}

impl Cone {
    /// Builds a cone from integer generators. The generators are kept
    /// verbatim; primitive extreme rays and dual rays are computed with the
    /// double-description facet enumeration, exactly.
    ///
    /// Errors with [`Error::NotPointed`] (naming a lineality direction) when
    /// the generated cone contains a line, and with
    /// [`Error::DegenerateInput`] on empty input or zero generators.
    pub fn new(ambient_rank: usize, generators: Vec<LatticeVector>) -> Result<Self> {
        validate_generators(ambient_rank, &generators)?;
        let dirs = primitive_directions(&generators)?;
        let (span_basis, span_rank) = saturate_span(&dirs, ambient_rank);

        // Work inside the saturated span so the facet enumeration always
        // sees a full cone.
        let (local_dirs, basis_matrix) = if span_rank == ambient_rank {
            (dirs.clone(), None)
        } else {
            let b = IntegerMatrix::from_columns(&span_basis);
            let local = dirs
                .iter()
                .map(|g| {
                    express_in_lattice_basis(&b, g)
                        .expect("saturated span contains every generator")
                })
                .collect();
            (local, Some(b))
        };

        let local_duals = dual_rays_of_full(&local_dirs, span_rank);
        let dual_rank = if local_duals.is_empty() {
            0
        } else {
            IntegerMatrix::from_rows(&local_duals).rank()
        };
        if dual_rank < span_rank {
            // The dual does not span: some direction pairs to zero with every
            // facet normal, so the cone contains the line through it.
            let lineality_local = if local_duals.is_empty() {
                LatticeVector::unit(span_rank, 0)
            } else {
                kernel_basis(&IntegerMatrix::from_rows(&local_duals))
                    .into_iter()
                    .next()
                    .expect("rank-deficient dual has a kernel vector")
            };
            let lineality = match &basis_matrix {
                Some(b) => b.apply(&lineality_local),
                None => lineality_local,
            };
            return Err(Error::NotPointed {
                lineality: lineality.primitivize().expect("nonzero kernel vector"),
            });
        }

        // A generator direction spans an extreme ray exactly when its tight
        // facet normals cut out a one-dimensional face.
        let mut local_rays = Vec::new();
        for g in &local_dirs {
            let tight: Vec<LatticeVector> = local_duals
                .iter()
                .filter(|w| w.pairing(g).expect("ranks agree").is_zero())
                .cloned()
                .collect();
            let tight_rank = if tight.is_empty() {
                0
            } else {
                IntegerMatrix::from_rows(&tight).rank()
            };
            if tight_rank == span_rank - 1 {
                local_rays.push(g.clone());
            }
        }

        let (mut rays, mut dual_rays) = match &basis_matrix {
            None => (local_rays, local_duals),
            Some(b) => {
                let rays = local_rays.iter().map(|r| b.apply(r)).collect();
                let duals = local_duals
                    .iter()
                    .map(|w| lift_dual_vector(b, w))
                    .collect::<Result<Vec<_>>>()?;
                (rays, duals)
            }
        };
        rays.sort_by(lattice::lex_cmp);
        rays.dedup();
        dual_rays.sort_by(lattice::lex_cmp);
        dual_rays.dedup();

        Ok(Cone {
            ambient_rank,
            span_rank,
            generators,
            rays,
            dual_rays,
        })
    }

    pub fn from_i64_generators(ambient_rank: usize, gens: &[&[i64]]) -> Result<Self> {
        Self::new(
            ambient_rank,
            gens.iter().map(|g| LatticeVector::from_i64(g)).collect(),
        )
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn span_rank(&self) -> usize {
        self.span_rank
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    /// Primitive extreme ray generators, sorted lexicographically.
    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    /// Primitive extreme rays of the dual cone, sorted lexicographically.
    pub fn dual_rays(&self) -> &[LatticeVector] {
        &self.dual_rays
    }

    /// `v_C`: the sum of the primitive ray generators. For a full pointed
    /// cone this pairs strictly positively with every nonzero semigroup
    /// element, giving the canonical grading.
    pub fn grading_functional(&self) -> LatticeVector {
        let mut acc = LatticeVector::zero(self.ambient_rank);
        for r in &self.rays {
            acc = acc.add(r);
        }
        acc
    }

    /// Membership of a lattice point in the semigroup `C^∨ ∩ M`: the point
    /// must pair nonnegatively with every ray of `C`. Valid as a semigroup
    /// test because `C^∨ ∩ M` is saturated.
    pub fn semigroup_contains(&self, m: &LatticeVector) -> bool {
        self.rays
            .iter()
            .all(|r| !m.pairing(r).expect("ranks agree").is_negative())
    }

    /// Pairings of `m` against the rays of `C`, in stored ray order. Two
    /// semigroup points divide one another exactly when their pairing
    /// vectors compare componentwise, so most ideal arithmetic happens on
    /// these vectors.
    pub fn pairing_vector(&self, m: &LatticeVector) -> Vec<BigInt> {
        self.rays
            .iter()
            .map(|r| m.pairing(r).expect("ranks agree"))
            .collect()
    }

    /// The dual cone, generated by the dual rays. Requires a full cone.
    pub fn dual(&self) -> Result<Cone> {
        self.require_full()?;
        Cone::new(self.ambient_rank, self.dual_rays.clone())
    }

    pub fn require_full(&self) -> Result<()> {
        if self.span_rank != self.ambient_rank {
            return Err(Error::NotFull {
                span_rank: self.span_rank,
                ambient_rank: self.ambient_rank,
            });
        }
        Ok(())
    }

    pub fn is_full(&self) -> bool {
        self.span_rank == self.ambient_rank
    }

    pub fn classify(&self) -> Classification {
        let simplicial = self.rays.len() == self.span_rank;
        let smooth = simplicial && {
            let snf = smith_normal_form(&IntegerMatrix::from_rows(&self.rays));
            snf.nonzero_count() == self.rays.len()
                && snf
                    .diag
                    .iter()
                    .filter(|d| !d.is_zero())
                    .all(|d| d.is_one())
        };
        Classification {
            // Construction rejects cones with lineality, so every value of
            // this type is pointed.
            pointed: true,
            full: self.is_full(),
            simplicial,
            smooth,
        }
    }

    /// Every face of the cone, including `{0}` and the cone itself, sorted
    /// by dimension and then by ray signature.
    ///
    /// Faces are found as zero sets of functionals `w = Σ` of a subset of
    /// dual rays: the face cut out by such a `w` depends only on the face of
    /// `C^∨` whose relative interior contains `w`, and subset sums reach the
    /// relative interior of every dual face. Each face's stored supporting
    /// functional is canonical: the sum of all dual rays vanishing on it.
    pub fn faces(&self) -> Result<Vec<Face>> {
        self.require_full()?;
        let k = self.dual_rays.len();
        if k > 20 {
            return Err(Error::Unsupported(alloc::format!(
                "face enumeration over {k} dual rays"
            )));
        }
        let pairings: Vec<Vec<BigInt>> = self
            .dual_rays
            .iter()
            .map(|w| {
                self.rays
                    .iter()
                    .map(|r| w.pairing(r).expect("ranks agree"))
                    .collect()
            })
            .collect();

        let mut signatures: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mask in 0u32..(1u32 << k) {
            let mut zero_rays: Vec<usize> = Vec::new();
            'rays: for (ri, _) in self.rays.iter().enumerate() {
                for wi in 0..k {
                    if mask & (1 << wi) != 0 && !pairings[wi][ri].is_zero() {
                        continue 'rays;
                    }
                }
                zero_rays.push(ri);
            }
            signatures.insert(zero_rays);
        }

        let mut faces: Vec<Face> = signatures
            .into_iter()
            .map(|ray_indices| self.face_from_ray_indices(ray_indices))
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.ray_indices).cmp(&(b.dim, &b.ray_indices)));
        Ok(faces)
    }

    fn face_from_ray_indices(&self, ray_indices: Vec<usize>) -> Face {
        let generators: Vec<LatticeVector> =
            ray_indices.iter().map(|&i| self.rays[i].clone()).collect();
        let mut sum = LatticeVector::zero(self.ambient_rank);
        for g in &generators {
            sum = sum.add(g);
        }
        let dim = if generators.is_empty() {
            0
        } else {
            IntegerMatrix::from_rows(&generators).rank()
        };
        // Canonical supporting functional: the sum of the dual rays lying on
        // the dual face, i.e. those vanishing on all of F. Its zero set is
        // exactly F by face duality.
        let mut supporting = LatticeVector::zero(self.ambient_rank);
        for w in &self.dual_rays {
            if generators
                .iter()
                .all(|g| w.pairing(g).expect("ranks agree").is_zero())
            {
                supporting = supporting.add(w);
            }
        }
        Face {
            ray_indices,
            generators,
            sum,
            dim,
            supporting,
        }
    }

    /// Looks up the stored face with the same ray set, validating that `f`
    /// really is a face of this cone.
    fn validate_face(&self, f: &Face) -> Result<()> {
        for (&i, g) in f.ray_indices.iter().zip(&f.generators) {
            if i >= self.rays.len() || self.rays[i] != *g {
                return Err(Error::InvalidParameter("face does not belong to this cone"));
            }
        }
        if f.ray_indices.len() != f.generators.len() {
            return Err(Error::InvalidParameter("face descriptor is inconsistent"));
        }
        Ok(())
    }

    /// The face of `C^∨` dual to `f`: all dual rays vanishing on `f`. The
    /// returned descriptor indexes into `dual_rays()`, and its supporting
    /// functional is `v_F`, which vanishes on the dual face and is positive
    /// on every other dual ray. Satisfies `dim F + dim F* = ambient rank`.
    pub fn dual_face(&self, f: &Face) -> Result<Face> {
        self.require_full()?;
        self.validate_face(f)?;
        let mut ray_indices = Vec::new();
        let mut generators = Vec::new();
        for (i, w) in self.dual_rays.iter().enumerate() {
            if f.generators
                .iter()
                .all(|g| w.pairing(g).expect("ranks agree").is_zero())
            {
                ray_indices.push(i);
                generators.push(w.clone());
            }
        }
        let mut sum = LatticeVector::zero(self.ambient_rank);
        for g in &generators {
            sum = sum.add(g);
        }
        let dim = if generators.is_empty() {
            0
        } else {
            IntegerMatrix::from_rows(&generators).rank()
        };
        Ok(Face {
            ray_indices,
            generators,
            sum,
            dim,
            supporting: f.sum.clone(),
        })
    }

    /// Convenience: the unique face with the given parent-ray index set.
    pub fn face_with_rays(&self, ray_indices: &[usize]) -> Result<Face> {
        let faces = self.faces()?;
        faces
            .into_iter()
            .find(|f| f.ray_indices == ray_indices)
            .ok_or(Error::InvalidParameter("no face with the requested ray set"))
    }
}

/// Transports a dual vector from span coordinates back to the ambient
/// lattice: finds the primitive `w ∈ span(C)` with `⟨w, B·x⟩ = ⟨w', x⟩` up
/// to positive scale, where `B` is the span basis.
fn lift_dual_vector(b: &IntegerMatrix, w_local: &LatticeVector) -> Result<LatticeVector> {
    let bt = b.transpose();
    let btb = bt.mul(b);
    let rhs: Vec<BigRational> = w_local
        .coords()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let x = lattice::solve_square_rational(&btb, &rhs)
        .expect("Bᵀ·B is invertible for a full-column-rank basis");
    // w = B·x is rational with the right pairings; clear denominators and
    // primitivize to get the unique primitive lattice point on the ray.
    let mut denom_lcm = BigInt::one();
    for c in &x {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let scaled: Vec<BigInt> = x
        .iter()
        .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let w_ambient = b.apply(&LatticeVector::new(scaled));
    w_ambient.primitivize()
}

/// Re-presents a pointed cone as a full cone over the saturated lattice
/// `N' = span(C) ∩ N`.
///
/// Returns the full cone in rank `dim C`, the number of free lattice
/// directions split off (`ambient_rank − dim C`), and the embedding matrix
/// whose columns map `N'` coordinates back into `N`.
pub fn reduce_to_full_pointed(
    ambient_rank: usize,
    generators: &[LatticeVector],
) -> Result<(Cone, usize, IntegerMatrix)> {
    validate_generators(ambient_rank, generators)?;
    let (span_basis, span_rank) = saturate_span(generators, ambient_rank);
    if span_rank == ambient_rank {
        let cone = Cone::new(ambient_rank, generators.to_vec())?;
        return Ok((cone, 0, IntegerMatrix::identity(ambient_rank)));
    }
    let b = IntegerMatrix::from_columns(&span_basis);
    let local: Vec<LatticeVector> = generators
        .iter()
        .map(|g| express_in_lattice_basis(&b, g).expect("saturation contains the generators"))
        .collect();
    match Cone::new(span_rank, local) {
        Ok(cone) => Ok((cone, ambient_rank - span_rank, b)),
        Err(Error::NotPointed { lineality }) => Err(Error::NotPointed {
            // Report the lineality direction in the ambient coordinates.
            lineality: b.apply(&lineality).primitivize().expect("nonzero"),
        }),
        Err(e) => Err(e),
    }
}

/// Intersection of two faces of the same cone, as a face.
pub fn face_intersection(cone: &Cone, a: &Face, b: &Face) -> Result<Face> {
    cone.validate_face(a)?;
    cone.validate_face(b)?;
    let common: Vec<usize> = a
        .ray_indices
        .iter()
        .filter(|i| b.ray_indices.contains(i))
        .copied()
        .collect();
    cone.face_with_rays(&common)
}
