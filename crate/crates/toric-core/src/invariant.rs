//! Computed invariants of a full pointed cone: the uniform containment
//! multipliers `D`, `D′`, `T`, `U` and the sharpness bound `B`, the divisor
//! class group from the Smith normal form of the ray matrix, the
//! F-signature as an exact lattice-normalized polytope volume, and the
//! drivers that machine-check the containment and sharpness statements.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cone::{for_each_subset_of_size, Cone, Face};
use crate::error::{Error, Result};
use crate::hilbert::SemigroupBasis;
use crate::ideal::{
    ideal_power, monomial_prime, symbolic_membership, valuation_ideals_multi, IdealMembership,
};
use crate::lattice::{smith_normal_form, IntegerMatrix, LatticeVector};

/// `D = max_{m ∈ 𝓑} ⟨m, v_C⟩`, the global containment multiplier.
pub fn compute_d(basis: &SemigroupBasis) -> BigInt {
    let d = basis.max_degree();
    debug_assert!(d.is_positive());
    d
}

/// `D′ = max_{m ∈ 𝓑} ⟨m, v_F⟩`, the face-local multiplier. Satisfies
/// `1 ≤ D′ ≤ D`.
pub fn compute_dprime(basis: &SemigroupBasis, face: &Face) -> Result<BigInt> {
    if face.is_zero() {
        return Err(Error::ZeroFace);
    }
    let d = basis
        .elements()
        .iter()
        .map(|b| b.pairing(&face.sum).expect("ranks agree"))
        .max()
        .expect("basis is nonempty");
    debug_assert!(d.is_positive());
    Ok(d)
}

/// `B = max_{w ∈ 𝓟𝓖} ⟨w, v_C⟩` over the primitive generators of `C^∨`.
pub fn compute_b_sharp(cone: &Cone) -> BigInt {
    let grading = cone.grading_functional();
    cone.dual_rays()
        .iter()
        .map(|w| w.pairing(&grading).expect("ranks agree"))
        .max()
        .expect("cones have dual rays")
}

/// Divisor class group data read off the cokernel of the ray pairing map
/// `m ↦ (⟨m, u_ρ⟩)_ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroupReport {
    pub free_rank: usize,
    /// Torsion invariant factors, each `> 1`, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    /// Group order; present exactly when the group is finite.
    pub order: Option<BigInt>,
    /// Order of each ray class, indexed like `Cone::rays`; `None` marks an
    /// element of infinite order (only possible when `free_rank > 0`).
    pub ray_orders: Vec<Option<BigInt>>,
}

/// Class group of the toric algebra of a full pointed cone.
///
/// The group is the cokernel of the `#rays × rank` matrix of ray pairings;
/// its Smith form gives the invariant factors directly, and the unimodular
/// left transform carries each ray class onto cokernel coordinates, from
/// which element orders fall out. The computation is purely combinatorial:
/// no field is involved anywhere.
pub fn class_group(cone: &Cone) -> Result<ClassGroupReport> {
    cone.require_full()?;
    let rays = cone.rays();
    let k = rays.len();
    let n = cone.ambient_rank();
    let a = IntegerMatrix::from_rows(rays);
    let snf = smith_normal_form(&a);
    let r = snf.nonzero_count();
    debug_assert_eq!(r, n, "ray matrix of a full cone has full column rank");

    let free_rank = k - r;
    let invariant_factors: Vec<BigInt> = snf
        .diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    let order = if free_rank == 0 {
        Some(invariant_factors.iter().product())
    } else {
        None
    };

    let mut ray_orders = Vec::with_capacity(k);
    for j in 0..k {
        // Image of the class of the j-th ray in cokernel coordinates.
        let y = snf.left.column(j);
        let infinite = (r..k).any(|i| !y.get(i).is_zero());
        if infinite {
            ray_orders.push(None);
            continue;
        }
        let mut ord = BigInt::one();
        for i in 0..r {
            let d = &snf.diag[i];
            let g = d.gcd(y.get(i));
            ord = ord.lcm(&(d / g));
        }
        ray_orders.push(Some(ord));
    }

    Ok(ClassGroupReport {
        free_rank,
        invariant_factors,
        order,
        ray_orders,
    })
}

/// For a simplicial full cone, the order of the `j`-th ray class computed
/// the short way: index the dual rays so that `⟨w_j, v_i⟩ > 0` exactly when
/// `i = j`; then the order is `⟨w_j, v_j⟩`.
pub fn ray_class_order(cone: &Cone, j: usize) -> Result<BigInt> {
    cone.require_full()?;
    if !cone.classify().simplicial {
        return Err(Error::InvalidParameter(
            "ray class orders via facet normals need a simplicial cone",
        ));
    }
    if j >= cone.rays().len() {
        return Err(Error::InvalidParameter("ray index out of range"));
    }
    for w in cone.dual_rays() {
        let matches = cone.rays().iter().enumerate().all(|(i, v)| {
            let positive = w.pairing(v).expect("ranks agree").is_positive();
            positive == (i == j)
        });
        if matches {
            return Ok(w.pairing(&cone.rays()[j]).expect("ranks agree"));
        }
    }
    Err(Error::InvalidParameter(
        "no facet normal isolates the requested ray",
    ))
}

/// `T = max{D, A}` where `A` annihilates the class group; present exactly
/// when the class group is finite. The least annihilator — the group
/// exponent, i.e. the largest invariant factor — gives the sharpest bound
/// and reproduces `T = max{n, E}` on the hypersurface family.
pub fn compute_t(basis: &SemigroupBasis, cg: &ClassGroupReport) -> Option<BigInt> {
    if cg.order.is_none() {
        return None;
    }
    let exponent = cg
        .invariant_factors
        .last()
        .cloned()
        .unwrap_or_else(BigInt::one);
    Some(compute_d(basis).max(exponent))
}

/// `U = lcm{D, #Cl}`: present exactly when the class group is finite.
pub fn compute_u(basis: &SemigroupBasis, cg: &ClassGroupReport) -> Option<BigInt> {
    cg.order.as_ref().map(|ord| compute_d(basis).lcm(ord))
}

/// All multipliers in one record, with the face-local `D′` values keyed by
/// the face's ray signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierReport {
    pub d: BigInt,
    /// `(face ray indices, D′_F)` for every nonzero face, sorted.
    pub per_face_dprime: Vec<(Vec<usize>, BigInt)>,
    pub t: Option<BigInt>,
    pub u: Option<BigInt>,
    pub b_sharp: BigInt,
    pub simplicial: bool,
}

pub fn multiplier_report(
    cone: &Cone,
    basis: &SemigroupBasis,
    cg: &ClassGroupReport,
    faces: &[Face],
) -> Result<MultiplierReport> {
    let d = compute_d(basis);
    let mut per_face_dprime = Vec::new();
    for f in faces {
        if f.is_zero() {
            continue;
        }
        let dp = compute_dprime(basis, f)?;
        debug_assert!(dp <= d);
        per_face_dprime.push((f.ray_indices.clone(), dp));
    }
    per_face_dprime.sort();
    Ok(MultiplierReport {
        d,
        per_face_dprime,
        t: compute_t(basis, cg),
        u: compute_u(basis, cg),
        b_sharp: compute_b_sharp(cone),
        simplicial: cone.classify().simplicial,
    })
}

/// F-signature data: the exact volume of the polytope
/// `P_C = {w : 0 ≤ ⟨w, v⟩ ≤ 1 for every primitive ray generator v}`,
/// normalized so the unit lattice cube has volume one. The closed polytope
/// has the same volume as its half-open variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSignatureReport {
    pub value: BigRational,
    pub polytope_vertices: Vec<Vec<BigRational>>,
    /// `1/#Cl` when the cone is simplicial; must equal `value`.
    pub simplicial_check: Option<BigRational>,
}

fn rational_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(k, p);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &pivot;
            for j in k..n {
                let v = &m[i][j] - &f * &m[k][j];
                m[i][j] = v;
            }
        }
    }
    det
}

/// Affine dimension of a set of rational points.
fn affine_dim(points: &[&Vec<BigRational>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = points[0];
    let rows: Vec<LatticeVector> = points[1..]
        .iter()
        .map(|p| {
            // Clear denominators; scaling a row does not change the rank.
            let diffs: Vec<BigRational> = p.iter().zip(base.iter()).map(|(a, b)| a - b).collect();
            let mut l = BigInt::one();
            for d in &diffs {
                l = l.lcm(d.denom());
            }
            LatticeVector::new(
                diffs
                    .iter()
                    .map(|d| (d * BigRational::from_integer(l.clone())).to_integer())
                    .collect(),
            )
        })
        .collect();
    IntegerMatrix::from_rows(&rows).rank()
}

struct VolumeContext {
    vertices: Vec<Vec<BigRational>>,
    /// Tight vertex set per constraint.
    tight: Vec<Vec<usize>>,
}

impl VolumeContext {
    /// Pulling triangulation of a face of the polytope, as vertex-index
    /// simplices. A face of dimension `d` with `d + 1` vertices is a
    /// simplex; otherwise the face is coned from its least vertex over the
    /// facets avoiding that vertex (each obtained by intersecting with one
    /// more tight constraint set).
    fn triangulate(&self, face_verts: &[usize], d: usize) -> Vec<Vec<usize>> {
        debug_assert!(face_verts.len() >= d + 1);
        if face_verts.len() == d + 1 {
            return alloc::vec![face_verts.to_vec()];
        }
        let v0 = face_verts[0];
        let mut out = Vec::new();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for t in &self.tight {
            let sub: Vec<usize> = face_verts
                .iter()
                .copied()
                .filter(|i| t.contains(i))
                .collect();
            if sub.len() == face_verts.len() || sub.is_empty() || sub.contains(&v0) {
                continue;
            }
            let pts: Vec<&Vec<BigRational>> = sub.iter().map(|&i| &self.vertices[i]).collect();
            if affine_dim(&pts) != d - 1 {
                continue;
            }
            if !seen.insert(sub.clone()) {
                continue;
            }
            for mut simplex in self.triangulate(&sub, d - 1) {
                simplex.push(v0);
                out.push(simplex);
            }
        }
        out
    }
}

/// Exact F-signature of the toric algebra of a full pointed cone, as the
/// lattice-normalized volume of `P_C`, by vertex enumeration and a pulling
/// triangulation of the boundary coned from the vertex centroid.
pub fn f_signature(cone: &Cone) -> Result<FSignatureReport> {
    cone.require_full()?;
    let n = cone.ambient_rank();
    let rays = cone.rays();

    // Constraints ⟨w, v⟩ ≥ 0 and ⟨w, v⟩ ≤ 1 per ray, as (normal, bound, is_upper).
    let constraints: Vec<(&LatticeVector, BigInt)> = rays
        .iter()
        .flat_map(|v| [(v, BigInt::zero()), (v, BigInt::one())])
        .collect();

    // Vertices: feasible solutions of n independent tight constraints.
    let mut vertex_set: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    let m = constraints.len();
    for_each_subset_of_size(m, n, &mut |subset| {
        let rows: Vec<LatticeVector> = subset.iter().map(|&i| constraints[i].0.clone()).collect();
        let rhs: Vec<BigRational> = subset
            .iter()
            .map(|&i| BigRational::from_integer(constraints[i].1.clone()))
            .collect();
        let a = IntegerMatrix::from_rows(&rows);
        let Some(w) = crate::lattice::solve_square_rational(&a, &rhs) else {
            return;
        };
        // Feasibility against every constraint.
        for v in rays {
            let mut acc = BigRational::zero();
            for i in 0..n {
                acc += BigRational::from_integer(v.get(i).clone()) * &w[i];
            }
            if acc < BigRational::zero() || acc > BigRational::one() {
                return;
            }
        }
        vertex_set.insert(w);
    });
    let vertices: Vec<Vec<BigRational>> = vertex_set.into_iter().collect();
    debug_assert!(!vertices.is_empty());

    let tight: Vec<Vec<usize>> = constraints
        .iter()
        .map(|(v, b)| {
            let bound = BigRational::from_integer(b.clone());
            vertices
                .iter()
                .enumerate()
                .filter(|(_, w)| {
                    let mut acc = BigRational::zero();
                    for i in 0..n {
                        acc += BigRational::from_integer(v.get(i).clone()) * &w[i];
                    }
                    acc == bound
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let ctx = VolumeContext {
        vertices: vertices.clone(),
        tight,
    };

    let value = if n == 1 {
        // An interval: its length.
        let lo = vertices.first().expect("nonempty")[0].clone();
        let hi = vertices.last().expect("nonempty")[0].clone();
        hi - lo
    } else {
        // Apex strictly inside the polytope: the vertex centroid.
        let count = BigRational::from_integer(BigInt::from(vertices.len() as u64));
        let apex: Vec<BigRational> = (0..n)
            .map(|i| {
                vertices
                    .iter()
                    .fold(BigRational::zero(), |acc, w| acc + &w[i])
                    / &count
            })
            .collect();
        let all: Vec<usize> = (0..vertices.len()).collect();
        let mut factorial = BigInt::one();
        for i in 1..=n {
            factorial *= BigInt::from(i as u64);
        }
        let mut total = BigRational::zero();
        let mut seen_facets: BTreeSet<Vec<usize>> = BTreeSet::new();
        for t in &ctx.tight {
            if t.len() == vertices.len() {
                continue;
            }
            let pts: Vec<&Vec<BigRational>> = t.iter().map(|&i| &ctx.vertices[i]).collect();
            if pts.is_empty() || affine_dim(&pts) != n - 1 {
                continue;
            }
            if !seen_facets.insert(t.clone()) {
                continue;
            }
            for simplex in ctx.triangulate(t, n - 1) {
                let mat: Vec<Vec<BigRational>> = simplex
                    .iter()
                    .map(|&vi| {
                        (0..n)
                            .map(|i| &ctx.vertices[vi][i] - &apex[i])
                            .collect()
                    })
                    .collect();
                let det = rational_det(mat);
                total += det.abs();
            }
        }
        let _ = all;
        total / BigRational::from_integer(factorial)
    };

    debug_assert!(value.is_positive());
    debug_assert!(value <= BigRational::one());

    let simplicial_check = if cone.classify().simplicial {
        let cg = class_group(cone)?;
        let ord = cg.order.expect("simplicial cones have finite class groups");
        Some(BigRational::new(BigInt::one(), ord))
    } else {
        None
    };

    Ok(FSignatureReport {
        value,
        polytope_vertices: vertices,
        simplicial_check,
    })
}

/// Which multiplier a containment check used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplierScope {
    /// The global multiplier `D`.
    Global,
    /// The face-local multiplier `D′`.
    FaceLocal,
    /// A caller-supplied override (negative testing).
    Override,
}

/// Outcome of one containment check `I_F(mult·(r−1)+1) ⊆ P_F^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentCheck {
    pub r: u32,
    pub scope: MultiplierScope,
    pub multiplier: BigInt,
    pub exponent: u32,
    pub pass: bool,
    /// On failure: a generator of the valuation ideal outside the power.
    /// A failure is always a defect of the implementation (or of an
    /// override multiplier), never of the containment statement.
    pub witness: Option<LatticeVector>,
}

/// Checks `I_F(D(r−1)+1) ⊆ P_F^r` and `I_F(D′(r−1)+1) ⊆ P_F^r` for
/// `r = 1..=r_max` on one nonzero face, through the valuation-ideal route.
/// With `multiplier_override` set, only the override multiplier is checked.
pub fn verify_containment(
    cone: &Cone,
    basis: &SemigroupBasis,
    face: &Face,
    r_max: u32,
    multiplier_override: Option<u64>,
) -> Result<Vec<ContainmentCheck>> {
    if r_max == 0 {
        return Err(Error::InvalidParameter("verification requires r_max ≥ 1"));
    }
    if face.is_zero() {
        return Err(Error::ZeroFace);
    }
    let prime = monomial_prime(cone, basis, face)?;
    let d_global = compute_d(basis);
    let d_face = compute_dprime(basis, face)?;

    let mut plan: Vec<(u32, MultiplierScope, BigInt)> = Vec::new();
    for r in 1..=r_max {
        match multiplier_override {
            Some(m) => plan.push((r, MultiplierScope::Override, BigInt::from(m))),
            None => {
                plan.push((r, MultiplierScope::Global, d_global.clone()));
                plan.push((r, MultiplierScope::FaceLocal, d_face.clone()));
            }
        }
    }

    let exponents: Vec<BigInt> = plan
        .iter()
        .map(|(r, _, m)| m * BigInt::from(r - 1) + BigInt::one())
        .collect();
    let distinct: Vec<BigInt> = {
        let set: BTreeSet<BigInt> = exponents.iter().cloned().collect();
        set.into_iter().collect()
    };
    let ideals = valuation_ideals_multi(&prime, &distinct)?;

    let mut checks = Vec::new();
    for ((r, scope, mult), exponent) in plan.into_iter().zip(exponents) {
        let idx = distinct
            .iter()
            .position(|e| *e == exponent)
            .expect("exponent was planned");
        let valuation = &ideals[idx];
        let power = ideal_power(&prime, r)?;
        let oracle = IdealMembership::new(&power);
        let mut witness = None;
        for g in valuation.generators() {
            if !oracle.contains(g)? {
                witness = Some(g.clone());
                break;
            }
        }
        let e_u32 = exponent
            .to_u32()
            .ok_or_else(|| Error::Unsupported(alloc::format!("exponent {exponent}")))?;
        checks.push(ContainmentCheck {
            r,
            scope,
            multiplier: mult,
            exponent: e_u32,
            pass: witness.is_none(),
            witness,
        });
    }
    Ok(checks)
}

/// The sharpness witness for a simplicial full cone: the height-one prime
/// and dual ray realizing `B`, with the two membership facts that make the
/// bound tight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpnessWitness {
    /// Index (into `Cone::rays`) of the ray whose prime realizes the bound.
    pub ray_index: usize,
    /// The dual ray `w` with `(χ^w) = P^{(B)}`.
    pub witness: LatticeVector,
    pub bound: BigInt,
    /// `w ∈ P^{(B)}` (must hold).
    pub symbolic_member: bool,
    /// `w ∈ P²` (must fail).
    pub in_square: bool,
}

/// Locates the dual ray realizing `B` and checks
/// `w ∈ P^{(B)}` while `w ∉ P²` for the matching height-one prime.
pub fn verify_sharpness(cone: &Cone, basis: &SemigroupBasis) -> Result<SharpnessWitness> {
    cone.require_full()?;
    if !cone.classify().simplicial {
        return Err(Error::InvalidParameter(
            "sharpness verification needs a simplicial cone",
        ));
    }
    let grading = cone.grading_functional();
    let mut best: Option<(BigInt, usize, &LatticeVector)> = None;
    for w in cone.dual_rays() {
        // In a simplicial full cone each dual ray is positive on exactly
        // one ray; that ray's prime is the one the witness lives in.
        let mut positive = cone
            .rays()
            .iter()
            .enumerate()
            .filter(|(_, v)| w.pairing(v).expect("ranks agree").is_positive());
        let (j, _) = positive.next().expect("dual rays are nonzero on the cone");
        debug_assert!(positive.next().is_none());
        let value = w.pairing(&grading).expect("ranks agree");
        // Ties broken toward the lexicographically largest dual ray.
        let replace = match &best {
            None => true,
            Some((bv, _, _)) => value >= *bv,
        };
        if replace {
            best = Some((value, j, w));
        }
    }
    let (bound, ray_index, witness) = best.expect("cones have dual rays");
    let face = cone.face_with_rays(&[ray_index])?;
    let prime = monomial_prime(cone, basis, &face)?;
    let b_u32 = bound
        .to_u32()
        .ok_or_else(|| Error::Unsupported(alloc::format!("sharpness bound {bound}")))?;
    let symbolic_member = symbolic_membership(&prime, b_u32, witness)?;
    let square = ideal_power(&prime, 2)?;
    let in_square = IdealMembership::new(&square).contains(witness)?;
    Ok(SharpnessWitness {
        ray_index,
        witness: witness.clone(),
        bound,
        symbolic_member,
        in_square,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_basis;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn orthant(n: usize) -> Cone {
        let gens: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
        Cone::new(n, gens).unwrap()
    }

    fn segre() -> Cone {
        Cone::from_i64_generators(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]).unwrap()
    }

    fn hypersurface(n: usize, e: i64) -> Cone {
        let mut gens: Vec<LatticeVector> = Vec::new();
        let mut en = vec![0i64; n];
        en[n - 1] = 1;
        gens.push(v(&en));
        for i in 0..n - 1 {
            let mut g = vec![0i64; n];
            g[i] = e;
            g[n - 1] = 1;
            gens.push(v(&g));
        }
        Cone::new(n, gens).unwrap()
    }

    fn veronese(e: i64) -> Cone {
        Cone::from_i64_generators(2, &[&[1, 0], &[-1, e]]).unwrap()
    }

    #[test]
    fn d_examples() {
        for e in 2..=4 {
            let b = hilbert_basis(&veronese(e)).unwrap();
            assert_eq!(compute_d(&b), BigInt::from(e));
        }
        let b = hilbert_basis(&segre()).unwrap();
        assert_eq!(compute_d(&b), BigInt::from(2));
        for (n, e) in [(2usize, 2i64), (3, 2), (2, 5), (4, 3)] {
            let b = hilbert_basis(&hypersurface(n, e)).unwrap();
            assert_eq!(compute_d(&b), BigInt::from((n as i64).max(e)));
        }
    }

    #[test]
    fn dprime_examples() {
        let c = segre();
        let b = hilbert_basis(&c).unwrap();
        let faces = c.faces().unwrap();
        for f in &faces {
            if f.dim == 1 {
                assert_eq!(compute_dprime(&b, f).unwrap(), BigInt::one());
            }
            if f.dim == c.ambient_rank() {
                assert_eq!(compute_dprime(&b, f).unwrap(), compute_d(&b));
            }
        }
        // F spanned by e_1, e_2 has D′ = 2 (from the basis element (1,1,−1)).
        let e1 = c.rays().iter().position(|r| *r == v(&[1, 0, 0])).unwrap();
        let e2 = c.rays().iter().position(|r| *r == v(&[0, 1, 0])).unwrap();
        let mut idx = vec![e1, e2];
        idx.sort();
        let f = c.face_with_rays(&idx).unwrap();
        assert_eq!(compute_dprime(&b, &f).unwrap(), BigInt::from(2));

        let zero = c.face_with_rays(&[]).unwrap();
        assert!(matches!(compute_dprime(&b, &zero), Err(Error::ZeroFace)));
    }

    #[test]
    fn class_group_examples() {
        for (n, e) in [(2usize, 2i64), (3, 2), (4, 3)] {
            let cg = class_group(&hypersurface(n, e)).unwrap();
            assert_eq!(cg.free_rank, 0);
            assert_eq!(cg.invariant_factors, vec![BigInt::from(e); n - 1]);
            assert_eq!(cg.order, Some(BigInt::from(e).pow((n - 1) as u32)));
        }

        let cg = class_group(&orthant(3)).unwrap();
        assert_eq!(cg.free_rank, 0);
        assert!(cg.invariant_factors.is_empty());
        assert_eq!(cg.order, Some(BigInt::one()));
        assert!(cg.ray_orders.iter().all(|o| *o == Some(BigInt::one())));

        let cg = class_group(&segre()).unwrap();
        assert_eq!(cg.free_rank, 1);
        assert!(cg.invariant_factors.is_empty());
        assert_eq!(cg.order, None);
        // Every ray class generates the free quotient: infinite order.
        assert!(cg.ray_orders.iter().all(Option::is_none));
    }

    #[test]
    fn ray_class_orders_match_cokernel() {
        for cone in [orthant(3), hypersurface(2, 2), hypersurface(3, 2), veronese(3)] {
            let cg = class_group(&cone).unwrap();
            for j in 0..cone.rays().len() {
                let fast = ray_class_order(&cone, j).unwrap();
                assert_eq!(Some(fast), cg.ray_orders[j], "ray {j}");
            }
        }
        // Hypersurface n=2, E=2: both ray classes have order 2.
        let c = hypersurface(2, 2);
        assert_eq!(ray_class_order(&c, 0).unwrap(), BigInt::from(2));
        assert_eq!(ray_class_order(&c, 1).unwrap(), BigInt::from(2));

        assert!(ray_class_order(&segre(), 0).is_err());
    }

    #[test]
    fn t_and_u_examples() {
        for (n, e) in [(2usize, 2i64), (3, 2), (2, 5)] {
            let c = hypersurface(n, e);
            let b = hilbert_basis(&c).unwrap();
            let cg = class_group(&c).unwrap();
            assert_eq!(
                compute_t(&b, &cg),
                Some(BigInt::from((n as i64).max(e))),
                "T for n={n} e={e}"
            );
        }
        // Hypersurface (3, 2): D = 3, #Cl = 4, U = 12.
        let c = hypersurface(3, 2);
        let b = hilbert_basis(&c).unwrap();
        let cg = class_group(&c).unwrap();
        assert_eq!(compute_u(&b, &cg), Some(BigInt::from(12)));

        let c = veronese(2);
        let b = hilbert_basis(&c).unwrap();
        let cg = class_group(&c).unwrap();
        assert_eq!(compute_u(&b, &cg), Some(BigInt::from(2)));

        let o = orthant(3);
        let b = hilbert_basis(&o).unwrap();
        let cg = class_group(&o).unwrap();
        assert_eq!(compute_t(&b, &cg), Some(BigInt::one()));
        assert_eq!(compute_u(&b, &cg), Some(BigInt::one()));

        let s = segre();
        let b = hilbert_basis(&s).unwrap();
        let cg = class_group(&s).unwrap();
        assert_eq!(compute_t(&b, &cg), None);
        assert_eq!(compute_u(&b, &cg), None);
    }

    #[test]
    fn b_sharp_examples() {
        for e in 2..=4 {
            assert_eq!(compute_b_sharp(&veronese(e)), BigInt::from(e));
        }
        assert_eq!(compute_b_sharp(&hypersurface(2, 2)), BigInt::from(2));
        assert_eq!(compute_b_sharp(&orthant(3)), BigInt::one());
    }

    #[test]
    fn f_signature_examples() {
        let r = f_signature(&orthant(3)).unwrap();
        assert_eq!(r.value, rat(1, 1));
        assert_eq!(r.simplicial_check, Some(rat(1, 1)));
        assert_eq!(r.polytope_vertices.len(), 8);

        let r = f_signature(&hypersurface(2, 2)).unwrap();
        assert_eq!(r.value, rat(1, 2));
        assert_eq!(r.simplicial_check, Some(rat(1, 2)));

        let r = f_signature(&segre()).unwrap();
        assert_eq!(r.value, rat(2, 3));
        assert_eq!(r.simplicial_check, None);
    }

    #[test]
    fn f_signature_rank_one_and_veronese() {
        let line = Cone::from_i64_generators(1, &[&[1]]).unwrap();
        assert_eq!(f_signature(&line).unwrap().value, rat(1, 1));

        for e in 2..=5 {
            let r = f_signature(&veronese(e)).unwrap();
            assert_eq!(r.value, rat(1, e));
            assert_eq!(r.simplicial_check, Some(rat(1, e)));
        }
    }

    #[test]
    fn multiplier_report_is_consistent() {
        let c = hypersurface(3, 2);
        let b = hilbert_basis(&c).unwrap();
        let cg = class_group(&c).unwrap();
        let faces = c.faces().unwrap();
        let rep = multiplier_report(&c, &b, &cg, &faces).unwrap();
        assert_eq!(rep.d, BigInt::from(3));
        assert!(rep.simplicial);
        assert_eq!(rep.per_face_dprime.len(), faces.len() - 1);
        for (_, dp) in &rep.per_face_dprime {
            assert!(*dp >= BigInt::one() && *dp <= rep.d);
        }
        assert!(rep.b_sharp <= rep.d);
        let t = rep.t.clone().unwrap();
        let u = rep.u.clone().unwrap();
        assert!(rep.d <= t && t <= u);
    }

    #[test]
    fn containment_passes_on_examples() {
        for cone in [orthant(2), hypersurface(2, 2), hypersurface(3, 2), segre(), veronese(3)] {
            let basis = hilbert_basis(&cone).unwrap();
            for face in cone.faces().unwrap() {
                if face.is_zero() {
                    continue;
                }
                let checks = verify_containment(&cone, &basis, &face, 4, None).unwrap();
                for c in checks {
                    assert!(c.pass, "r={} scope={:?} witness={:?}", c.r, c.scope, c.witness);
                }
            }
        }
    }

    #[test]
    fn smooth_cones_have_multiplier_one() {
        // On a smooth cone, symbolic and ordinary powers agree: the
        // containment holds with multiplier 1 on every face.
        let c = orthant(3);
        let basis = hilbert_basis(&c).unwrap();
        for face in c.faces().unwrap() {
            if face.is_zero() {
                continue;
            }
            assert_eq!(compute_dprime(&basis, &face).unwrap(), BigInt::one());
            let checks = verify_containment(&c, &basis, &face, 4, Some(1)).unwrap();
            assert!(checks.iter().all(|ck| ck.pass));
        }
    }

    #[test]
    fn segre_override_fails_with_witness() {
        let c = segre();
        let basis = hilbert_basis(&c).unwrap();
        let e1 = c.rays().iter().position(|r| *r == v(&[1, 0, 0])).unwrap();
        let e2 = c.rays().iter().position(|r| *r == v(&[0, 1, 0])).unwrap();
        let mut idx = vec![e1, e2];
        idx.sort();
        let f = c.face_with_rays(&idx).unwrap();
        let checks = verify_containment(&c, &basis, &f, 2, Some(1)).unwrap();
        let r2 = checks.iter().find(|ck| ck.r == 2).unwrap();
        assert!(!r2.pass);
        assert_eq!(r2.witness, Some(v(&[1, 1, -1])));
    }

    #[test]
    fn sharpness_witnesses() {
        // Veronese, degree 3: B = 3.
        let c = veronese(3);
        let b = hilbert_basis(&c).unwrap();
        let w = verify_sharpness(&c, &b).unwrap();
        assert_eq!(w.bound, BigInt::from(3));
        assert!(w.symbolic_member);
        assert!(!w.in_square);

        // Hypersurface (2,2): B = 2, witness (1,0) at the ray (2,1).
        let c = hypersurface(2, 2);
        let b = hilbert_basis(&c).unwrap();
        let w = verify_sharpness(&c, &b).unwrap();
        assert_eq!(w.bound, BigInt::from(2));
        assert_eq!(w.witness, v(&[1, 0]));
        assert_eq!(c.rays()[w.ray_index], v(&[2, 1]));
        assert!(w.symbolic_member);
        assert!(!w.in_square);

        // Orthant: B = 1, degenerate but valid.
        let c = orthant(2);
        let b = hilbert_basis(&c).unwrap();
        let w = verify_sharpness(&c, &b).unwrap();
        assert_eq!(w.bound, BigInt::one());
        assert!(w.symbolic_member);
        assert!(!w.in_square);

        // Non-simplicial input is rejected.
        let s = segre();
        let b = hilbert_basis(&s).unwrap();
        assert!(verify_sharpness(&s, &b).is_err());
    }

    #[test]
    fn signature_class_group_coupling() {
        for cone in [orthant(2), orthant(3), hypersurface(2, 2), hypersurface(3, 2), veronese(4)] {
            let cg = class_group(&cone).unwrap();
            let fs = f_signature(&cone).unwrap();
            let ord = cg.order.unwrap();
            assert_eq!(fs.value * BigRational::from_integer(ord), rat(1, 1));
        }
    }
}
