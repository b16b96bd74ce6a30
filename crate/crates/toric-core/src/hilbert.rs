//! Hilbert bases of the dual semigroup `C^∨ ∩ M` of a full pointed cone,
//! plus degree-truncated enumeration of semigroup elements.
//!
//! Two independent routes into the semigroup live here on purpose:
//! [`hilbert_basis`] goes through fundamental-parallelepiped generators and
//! an irreducibility filter, while [`enumerate_semigroup`] scans an exact
//! bounding box. The test suites play them against each other.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::cone::{for_each_subset_of_size, Cone};
use crate::error::{Error, Result};
use crate::lattice::{self, smith_normal_form, IntegerMatrix, LatticeVector};

/// The Hilbert basis `𝓑` of `C^∨ ∩ M`: the unique minimal generating set,
/// consisting of the irreducible nonzero semigroup elements. Carries the
/// grading functional `v_C` (sum of the primitive ray generators of `C`),
/// which is strictly positive on every nonzero semigroup element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupBasis {
    cone: Cone,
    elements: Vec<LatticeVector>,
    grading: LatticeVector,
}

impl SemigroupBasis {
    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    /// Basis elements, sorted lexicographically.
    pub fn elements(&self) -> &[LatticeVector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The grading functional `v_C`.
    pub fn grading(&self) -> &LatticeVector {
        &self.grading
    }

    /// Degree of a semigroup element under the `v_C` grading.
    pub fn degree(&self, m: &LatticeVector) -> BigInt {
        m.pairing(&self.grading).expect("ranks agree")
    }

    /// Largest `v_C`-degree among the basis elements.
    pub fn max_degree(&self) -> BigInt {
        self.elements
            .iter()
            .map(|b| self.degree(b))
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Lattice points of the half-open fundamental parallelepiped
/// `{Σ tᵢ·uᵢ : 0 ≤ tᵢ < 1}` of a linearly independent column set `u`.
///
/// The points are the `|det U|` residues of `Z^d` modulo the column lattice,
/// found through the Smith decomposition and shifted into the parallelepiped.
fn parallelepiped_points(columns: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    let d = columns.len();
    let u = IntegerMatrix::from_columns(columns);
    let snf = smith_normal_form(&u);
    if snf.nonzero_count() != d {
        return Err(Error::DegenerateInput("parallelepiped columns are dependent"));
    }
    let mut radix: Vec<u64> = Vec::with_capacity(d);
    let mut volume: u64 = 1;
    for di in &snf.diag {
        let v = di
            .to_u64()
            .ok_or_else(|| Error::Unsupported(alloc::format!("invariant factor {di}")))?;
        volume = volume
            .checked_mul(v)
            .ok_or_else(|| Error::Unsupported(alloc::format!("parallelepiped volume overflow")))?;
        radix.push(v);
    }
    if volume > 2_000_000 {
        return Err(Error::Unsupported(alloc::format!(
            "parallelepiped with {volume} lattice points"
        )));
    }

    let mut points = Vec::with_capacity(volume as usize);
    let mut digits = vec![0u64; d];
    loop {
        // Residue representative L^{-1}·y for the current digit vector y.
        let y = LatticeVector::new(digits.iter().map(|&x| BigInt::from(x)).collect());
        let x = snf.left_inv.apply(&y);
        // Shift into the half-open parallelepiped: subtract U·⌊U^{-1}x⌋.
        let rhs: Vec<BigRational> = x
            .coords()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let t = lattice::solve_square_rational(&u, &rhs)
            .expect("independent columns give an invertible matrix");
        let mut shifted = x;
        for (j, tj) in t.iter().enumerate() {
            let fl = tj.floor().to_integer();
            if !fl.is_zero() {
                shifted = shifted.sub(&columns[j].scale(&fl));
            }
        }
        points.push(shifted);

        let mut pos = 0;
        loop {
            if pos == d {
                return Ok(points);
            }
            digits[pos] += 1;
            if digits[pos] < radix[pos].max(1) {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Decides irreducibility of a nonzero semigroup element by subtraction
/// against a candidate list: `m` is reducible exactly when `m − b` is a
/// nonzero semigroup element for some nonzero candidate `b`.
///
/// The verdict is correct whenever `candidates` generates the semigroup up
/// to the degree of `m` (in particular for any generating set).
pub fn is_irreducible(cone: &Cone, candidates: &[LatticeVector], m: &LatticeVector) -> bool {
    !candidates.iter().any(|b| {
        if b.is_zero() || b == m {
            return false;
        }
        let diff = m.sub(b);
        !diff.is_zero() && cone.semigroup_contains(&diff)
    })
}

/// Computes the Hilbert basis of `C^∨ ∩ M` for a full pointed cone.
///
/// Candidate generators are gathered from the fundamental parallelepipeds
/// of the simplicial subcones spanned by every linearly independent
/// `d`-subset of the dual rays (by the conic Carathéodory theorem these
/// subcones cover `C^∨`), together with the dual rays themselves. The
/// candidates generate the semigroup; the irreducible ones among them are
/// exactly the Hilbert basis.
pub fn hilbert_basis(cone: &Cone) -> Result<SemigroupBasis> {
    cone.require_full()?;
    let d = cone.ambient_rank();
    let duals = cone.dual_rays();

    let mut candidates: BTreeSet<LatticeVector> = duals.iter().cloned().collect();
    let mut failure: Option<Error> = None;
    for_each_subset_of_size(duals.len(), d, &mut |subset| {
        if failure.is_some() {
            return;
        }
        let cols: Vec<LatticeVector> = subset.iter().map(|&i| duals[i].clone()).collect();
        if IntegerMatrix::from_rows(&cols).rank() != d {
            return;
        }
        match parallelepiped_points(&cols) {
            Ok(points) => {
                for p in points {
                    if !p.is_zero() {
                        debug_assert!(cone.semigroup_contains(&p));
                        candidates.insert(p);
                    }
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }

    let grading = cone.grading_functional();
    let all: Vec<LatticeVector> = candidates.iter().cloned().collect();
    let mut elements: Vec<LatticeVector> = all
        .iter()
        .filter(|m| is_irreducible(cone, &all, m))
        .cloned()
        .collect();
    elements.sort_by(lattice::lex_cmp);

    debug_assert!(elements
        .iter()
        .all(|b| b.pairing(&grading).expect("ranks agree").is_positive()));

    Ok(SemigroupBasis {
        cone: cone.clone(),
        elements,
        grading,
    })
}

/// All semigroup elements `m ∈ C^∨ ∩ M` with `⟨m, v_C⟩ ≤ max_degree`,
/// sorted lexicographically. Complete by construction: the degree-truncated
/// region is the convex hull of the origin and the scaled dual rays, and
/// every integer point of its bounding box is tested.
pub fn enumerate_semigroup(cone: &Cone, max_degree: u64) -> Result<Vec<LatticeVector>> {
    cone.require_full()?;
    let n = cone.ambient_rank();
    let grading = cone.grading_functional();
    let degree = BigRational::from_integer(BigInt::from(max_degree));

    // Vertices of {w ∈ C^∨ : ⟨w, v_C⟩ ≤ max_degree}: the origin and the dual
    // rays scaled to the cut-off degree.
    let mut lo = vec![BigRational::zero(); n];
    let mut hi = vec![BigRational::zero(); n];
    for w in cone.dual_rays() {
        let deg = w.pairing(&grading).expect("ranks agree");
        debug_assert!(deg.is_positive(), "grading must be positive on dual rays");
        let scale = &degree / BigRational::from_integer(deg);
        for i in 0..n {
            let coord = BigRational::from_integer(w.get(i).clone()) * &scale;
            if coord < lo[i] {
                lo[i] = coord.clone();
            }
            if coord > hi[i] {
                hi[i] = coord;
            }
        }
    }
    let lo: Vec<i64> = lo
        .iter()
        .map(|c| {
            c.floor()
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Unsupported(alloc::format!("bounding box coordinate {c}")))
        })
        .collect::<Result<_>>()?;
    let hi: Vec<i64> = hi
        .iter()
        .map(|c| {
            c.ceil()
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Unsupported(alloc::format!("bounding box coordinate {c}")))
        })
        .collect::<Result<_>>()?;

    let mut cells: u128 = 1;
    for i in 0..n {
        cells = cells.saturating_mul((hi[i] - lo[i] + 1) as u128);
    }
    if cells > 200_000_000 {
        return Err(Error::Unsupported(alloc::format!(
            "semigroup enumeration over {cells} box cells"
        )));
    }

    let max_deg_int = BigInt::from(max_degree);
    let mut out = Vec::new();
    let mut cursor = lo.clone();
    'scan: loop {
        let m = LatticeVector::from_i64(&cursor);
        if cone.semigroup_contains(&m) {
            let deg = m.pairing(&grading).expect("ranks agree");
            if deg <= max_deg_int {
                out.push(m);
            }
        }
        let mut pos = 0;
        loop {
            if pos == n {
                break 'scan;
            }
            cursor[pos] += 1;
            if cursor[pos] <= hi[pos] {
                break;
            }
            cursor[pos] = lo[pos];
            pos += 1;
        }
    }
    out.sort_by(lattice::lex_cmp);
    Ok(out)
}
