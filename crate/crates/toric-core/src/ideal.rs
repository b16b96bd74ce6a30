//! Monomial ideals of the semigroup algebra, presented by their lattice-point
//! generators: monomial primes of faces, ordinary powers, valuation ideals,
//! and two independent symbolic-power membership oracles.
//!
//! Everything runs on pairing vectors. For a full pointed cone the map
//! `m ↦ (⟨m, v⟩)_{v ∈ rays(C)}` is injective on `M` and turns semigroup
//! divisibility into componentwise comparison, so ideal membership and
//! generator minimality are Pareto-frontier computations over `Z^{#rays}`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cone::{Cone, Face};
use crate::error::{Error, Result};
use crate::hilbert::SemigroupBasis;
use crate::lattice::{componentwise_le, LatticeVector};

/// A monomial ideal, given by finitely many generators in `C^∨ ∩ M`.
/// When `minimal` is set, no generator divides another in the semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    cone: Cone,
    gens: Vec<LatticeVector>,
    minimal: bool,
}

/// The monomial prime `P_F` of a nonzero face `F`: generated by the Hilbert
/// basis elements pairing strictly positively with `v_F`. A semigroup
/// element belongs to `P_F` exactly when its `v_F`-pairing is positive, and
/// the height of `P_F` is `dim F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPrime {
    pub ideal: MonomialIdeal,
    pub face: Face,
    pub height: usize,
    /// Hilbert basis elements lying on the dual face `F*` (pairing zero with
    /// `v_F`). These generate the semigroup `F* ∩ M` of monomials that
    /// become units after localizing at `P_F`.
    coface_generators: Vec<LatticeVector>,
}

impl MonomialIdeal {
    /// Builds an ideal after checking that all generators lie in the
    /// semigroup. The generator list is deduplicated and sorted.
    pub fn new(cone: &Cone, gens: Vec<LatticeVector>) -> Result<Self> {
        for g in &gens {
            if g.rank() != cone.ambient_rank() {
                return Err(Error::DimensionMismatch {
                    expected: cone.ambient_rank(),
                    found: g.rank(),
                });
            }
            if !cone.semigroup_contains(g) {
                return Err(Error::OutsideSemigroup(g.clone()));
            }
        }
        let set: BTreeSet<LatticeVector> = gens.into_iter().collect();
        Ok(MonomialIdeal {
            cone: cone.clone(),
            gens: set.into_iter().collect(),
            minimal: false,
        })
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.gens
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }
}

pub(crate) fn same_cone(a: &Cone, b: &Cone) -> bool {
    a.ambient_rank() == b.ambient_rank() && a.rays() == b.rays()
}

/// Drops every generator divisible by another. Implemented as a Pareto
/// filter on pairing vectors, bucketed by the `v_C` grading: a divisor is
/// always of strictly smaller degree, and equal-degree points never divide
/// one another.
pub fn minimalize(ideal: &MonomialIdeal) -> MonomialIdeal {
    let cone = ideal.cone.clone();
    let grading = cone.grading_functional();
    let mut items: Vec<(BigInt, LatticeVector, Vec<BigInt>)> = ideal
        .gens
        .iter()
        .map(|g| {
            let pv = cone.pairing_vector(g);
            (g.pairing(&grading).expect("ranks agree"), g.clone(), pv)
        })
        .collect();
    items.sort_by(|a, b| (&a.0, a.1.coords()).cmp(&(&b.0, b.1.coords())));

    let mut kept: Vec<(BigInt, LatticeVector, Vec<BigInt>)> = Vec::new();
    'next: for (deg, g, pv) in items {
        for (kdeg, _, kpv) in &kept {
            if *kdeg >= deg {
                break;
            }
            if componentwise_le(kpv, &pv) {
                continue 'next;
            }
        }
        kept.push((deg, g, pv));
    }
    let mut gens: Vec<LatticeVector> = kept.into_iter().map(|(_, g, _)| g).collect();
    gens.sort();
    MonomialIdeal {
        cone,
        gens,
        minimal: true,
    }
}

/// Fast repeated-membership oracle for one ideal: precomputes the pairing
/// vectors of the generators once.
pub struct IdealMembership<'a> {
    ideal: &'a MonomialIdeal,
    gen_pvecs: Vec<Vec<BigInt>>,
}

impl<'a> IdealMembership<'a> {
    pub fn new(ideal: &'a MonomialIdeal) -> Self {
        let gen_pvecs = ideal
            .gens
            .iter()
            .map(|g| ideal.cone.pairing_vector(g))
            .collect();
        IdealMembership { ideal, gen_pvecs }
    }

    /// Membership of a semigroup point, by divisibility against some
    /// generator (componentwise domination of pairing vectors).
    pub fn contains(&self, m: &LatticeVector) -> Result<bool> {
        if !self.ideal.cone.semigroup_contains(m) {
            return Err(Error::OutsideSemigroup(m.clone()));
        }
        let pv = self.ideal.cone.pairing_vector(m);
        Ok(self.contains_pvec(&pv))
    }

    pub(crate) fn contains_pvec(&self, pv: &[BigInt]) -> bool {
        self.gen_pvecs.iter().any(|g| componentwise_le(g, pv))
    }
}

/// One-shot ideal membership; see [`IdealMembership`] for query loops.
pub fn membership(ideal: &MonomialIdeal, m: &LatticeVector) -> Result<bool> {
    IdealMembership::new(ideal).contains(m)
}

/// True when every generator of `i` belongs to `j` (hence `i ⊆ j`).
pub fn ideal_containment(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<bool> {
    if !same_cone(&i.cone, &j.cone) {
        return Err(Error::InvalidParameter(
            "ideal containment requires ideals over the same cone",
        ));
    }
    let oracle = IdealMembership::new(j);
    for g in &i.gens {
        if !oracle.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The monomial prime of a nonzero face: `{b ∈ 𝓑 : ⟨b, v_F⟩ > 0}`.
///
/// The generator set is automatically minimal (distinct irreducible vectors
/// cannot divide one another), and it generates the full prime: any
/// semigroup element positive on `v_F` has a Hilbert-basis summand positive
/// on `v_F`.
pub fn monomial_prime(cone: &Cone, basis: &SemigroupBasis, face: &Face) -> Result<MonomialPrime> {
    if !same_cone(cone, basis.cone()) {
        return Err(Error::InvalidParameter("basis belongs to a different cone"));
    }
    if face.is_zero() {
        return Err(Error::ZeroFace);
    }
    let mut gens = Vec::new();
    let mut coface = Vec::new();
    for b in basis.elements() {
        let p = b.pairing(&face.sum).expect("ranks agree");
        debug_assert!(!p.is_negative());
        if p.is_positive() {
            gens.push(b.clone());
        } else {
            coface.push(b.clone());
        }
    }
    debug_assert!(!gens.is_empty());
    Ok(MonomialPrime {
        ideal: MonomialIdeal {
            cone: cone.clone(),
            gens,
            minimal: true,
        },
        face: face.clone(),
        height: face.dim,
        coface_generators: coface,
    })
}

impl MonomialPrime {
    pub fn cone(&self) -> &Cone {
        self.ideal.cone()
    }

    pub fn generators(&self) -> &[LatticeVector] {
        self.ideal.generators()
    }

    /// `v_F` for the prime's face.
    pub fn face_sum(&self) -> &LatticeVector {
        &self.face.sum
    }

    /// Hilbert basis elements on the dual face (the monomials inverted by
    /// localization at this prime).
    pub fn coface_generators(&self) -> &[LatticeVector] {
        &self.coface_generators
    }

    /// `⟨m, v_F⟩`, the valuation that cuts out this prime.
    pub fn face_degree(&self, m: &LatticeVector) -> BigInt {
        m.pairing(&self.face.sum).expect("ranks agree")
    }
}

/// Distinct sums of exactly `count` generators, built level by level with
/// global deduplication (every multiset sum of size `j+1` is a size-`j` sum
/// plus one generator).
fn multiset_sums(gens: &[LatticeVector], count: u32) -> Vec<LatticeVector> {
    debug_assert!(count >= 1);
    let mut level: BTreeSet<LatticeVector> = gens.iter().cloned().collect();
    for _ in 1..count {
        let mut next = BTreeSet::new();
        for s in &level {
            for g in gens {
                next.insert(s.add(g));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// Minimal generators of the ordinary power `P^r`: the multiset sums of
/// exactly `r` prime generators, reduced under semigroup divisibility.
pub fn ideal_power(prime: &MonomialPrime, r: u32) -> Result<MonomialIdeal> {
    if r == 0 {
        return Err(Error::InvalidParameter("ideal power requires r ≥ 1"));
    }
    if r == 1 {
        return Ok(prime.ideal.clone());
    }
    let sums = multiset_sums(prime.generators(), r);
    let raw = MonomialIdeal {
        cone: prime.ideal.cone.clone(),
        gens: sums,
        minimal: false,
    };
    Ok(minimalize(&raw))
}

/// Candidate generators of the valuation ideals `I_F(e) = (χ^m : ⟨m, v_F⟩ ≥ e)`
/// for several thresholds at once.
///
/// A breadth-first walk over distinct sums of the prime generators keeps the
/// states with `v_F`-pairing below the largest threshold and records, for
/// each threshold `e`, every step that crosses from `< e` to `≥ e`. Each
/// minimal generator of `I_F(e)` is such a crossing sum: its summands all
/// pair positively with `v_F` (a zero-pairing or removable summand would
/// contradict minimality), and removing any summand drops the pairing below
/// `e`, so some build order crosses exactly at the last step.
fn valuation_candidates(
    prime: &MonomialPrime,
    thresholds: &[BigInt],
) -> Result<Vec<Vec<LatticeVector>>> {
    let max_t = thresholds
        .iter()
        .max()
        .ok_or(Error::InvalidParameter("no thresholds supplied"))?
        .clone();
    if thresholds.iter().any(|t| !t.is_positive()) {
        return Err(Error::InvalidParameter("valuation ideal requires E ≥ 1"));
    }
    let gens = prime.generators();
    let gen_degrees: Vec<BigInt> = gens.iter().map(|g| prime.face_degree(g)).collect();

    let mut crossers: Vec<BTreeSet<LatticeVector>> =
        thresholds.iter().map(|_| BTreeSet::new()).collect();
    let mut visited: BTreeSet<LatticeVector> = BTreeSet::new();
    let zero = LatticeVector::zero(prime.cone().ambient_rank());
    visited.insert(zero.clone());
    let mut frontier: Vec<(LatticeVector, BigInt)> = alloc::vec![(zero, BigInt::zero())];

    while let Some((state, deg)) = frontier.pop() {
        for (g, gdeg) in gens.iter().zip(&gen_degrees) {
            let next_deg = &deg + gdeg;
            let next = state.add(g);
            for (ti, t) in thresholds.iter().enumerate() {
                if deg < *t && next_deg >= *t {
                    crossers[ti].insert(next.clone());
                }
            }
            if next_deg < max_t && visited.insert(next.clone()) {
                if visited.len() > 5_000_000 {
                    return Err(Error::Unsupported(alloc::format!(
                        "valuation ideal search exceeded 5e6 states at threshold {max_t}"
                    )));
                }
                frontier.push((next, next_deg));
            }
        }
    }
    Ok(crossers
        .into_iter()
        .map(|s| s.into_iter().collect())
        .collect())
}

/// Minimal generating set of the valuation ideal `I_F(E)`. A semigroup
/// element belongs to `I_F(E)` exactly when `⟨m, v_F⟩ ≥ E`.
pub fn valuation_ideal(prime: &MonomialPrime, e: u32) -> Result<MonomialIdeal> {
    if e == 0 {
        return Err(Error::InvalidParameter("valuation ideal requires E ≥ 1"));
    }
    let candidates = valuation_candidates(prime, &[BigInt::from(e)])?
        .pop()
        .expect("one threshold requested");
    let raw = MonomialIdeal {
        cone: prime.ideal.cone.clone(),
        gens: candidates,
        minimal: false,
    };
    Ok(minimalize(&raw))
}

pub(crate) fn valuation_ideals_multi(
    prime: &MonomialPrime,
    thresholds: &[BigInt],
) -> Result<Vec<MonomialIdeal>> {
    let all = valuation_candidates(prime, thresholds)?;
    Ok(all
        .into_iter()
        .map(|gens| {
            minimalize(&MonomialIdeal {
                cone: prime.ideal.cone.clone(),
                gens,
                minimal: false,
            })
        })
        .collect())
}

/// Symbolic-power membership oracle for a fixed prime and exponent.
///
/// The symbolic power is the contraction `P^E·R_P ∩ R`. For a monomial
/// ideal and a monomial prime this contraction is again monomial, and a
/// monomial `χ^ℓ` lies in it exactly when `χ^{ℓ+q} ∈ P^E` for some monomial
/// `χ^q` outside `P`, i.e. some `q` in the dual-face semigroup `F* ∩ M`.
///
/// The oracle tests the localized criterion: `ℓ ∈ P^(E)` iff some generator
/// `g` of `P^E` has `⟨ℓ − g, v⟩ ≥ 0` for every primitive generator `v` of
/// `F`. Why this is the same condition: sign constraints against `F` alone
/// cut out the dual cone of `F`, which by face duality equals `C^∨` relaxed
/// by the span of the dual face `F*`; and whenever `ℓ − g` lies in that
/// relaxed cone, adding a large multiple of the sum of the generators of
/// `F* ∩ M` (a lattice point interior to `F*`) moves it into `C^∨` without
/// leaving the coset `ℓ − g + (F* ∩ M)`. So a feasible sign pattern always
/// has an exact monomial witness `q`, and conversely any witness forces the
/// sign pattern. The brute-force oracle below checks this equivalence
/// independently on every example the suites touch.
pub struct SymbolicOracle {
    face_indices: Vec<usize>,
    /// Pareto-minimal projections of the `P^E` generators' pairing vectors
    /// to the face's ray coordinates.
    frontier: Vec<Vec<BigInt>>,
}

impl SymbolicOracle {
    pub fn new(prime: &MonomialPrime, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidParameter("symbolic power requires E ≥ 1"));
        }
        let power = ideal_power(prime, e)?;
        let cone = prime.cone();
        let face_indices = prime.face.ray_indices.clone();
        let projected: BTreeSet<Vec<BigInt>> = power
            .generators()
            .iter()
            .map(|g| {
                let pv = cone.pairing_vector(g);
                face_indices.iter().map(|&i| pv[i].clone()).collect()
            })
            .collect();
        // Re-reduce: projections of minimal generators need not be minimal.
        let all: Vec<Vec<BigInt>> = projected.into_iter().collect();
        let frontier: Vec<Vec<BigInt>> = all
            .iter()
            .filter(|p| !all.iter().any(|q| q != *p && componentwise_le(q, p)))
            .cloned()
            .collect();
        Ok(SymbolicOracle {
            face_indices,
            frontier,
        })
    }

    pub fn contains(&self, cone: &Cone, m: &LatticeVector) -> Result<bool> {
        if !cone.semigroup_contains(m) {
            return Err(Error::OutsideSemigroup(m.clone()));
        }
        let pv = cone.pairing_vector(m);
        let proj: Vec<BigInt> = self.face_indices.iter().map(|&i| pv[i].clone()).collect();
        Ok(self.frontier.iter().any(|g| componentwise_le(g, &proj)))
    }
}

/// One-shot symbolic membership `ℓ ∈ P^(E)`; see [`SymbolicOracle`].
pub fn symbolic_membership(prime: &MonomialPrime, e: u32, m: &LatticeVector) -> Result<bool> {
    SymbolicOracle::new(prime, e)?.contains(prime.cone(), m)
}

/// Saturation-search oracle for symbolic membership, independent of the
/// localized criterion: hunts for `q ∈ F* ∩ M` with `⟨q, v_C⟩ ≤ search_degree`
/// and `ℓ + q ∈ P^E`, deciding the latter by plain divisibility against the
/// generators of `P^E`.
///
/// Returns the witness `q` on success and `None` on exhaustion. Exhaustion
/// is genuine for the whole search region: membership of `ℓ + q` is
/// monotone in `q` under the semigroup order on `F* ∩ M`, so besides an
/// ascending prefix (which keeps reported witnesses small) it suffices to
/// test the degree-maximal points of the region — those that no generator
/// of `F* ∩ M` can extend without leaving it.
pub struct BruteForceOracle {
    power_frontier: Vec<Vec<BigInt>>,
    /// Witness candidates with their pairing vectors: ascending prefix
    /// first, then the maximal shell.
    candidates: Vec<(LatticeVector, Vec<BigInt>)>,
}

impl BruteForceOracle {
    pub fn new(prime: &MonomialPrime, e: u32, search_degree: u64) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidParameter("symbolic power requires E ≥ 1"));
        }
        let cone = prime.cone();
        let power = ideal_power(prime, e)?;
        let power_frontier: Vec<Vec<BigInt>> = power
            .generators()
            .iter()
            .map(|g| cone.pairing_vector(g))
            .collect();

        let grading = cone.grading_functional();
        let bound = BigInt::from(search_degree);
        let coface = prime.coface_generators();

        // Enumerate the search region {q ∈ F* ∩ M : deg q ≤ bound} by
        // breadth-first sums of its semigroup generators.
        let mut region: BTreeSet<LatticeVector> = BTreeSet::new();
        let zero = LatticeVector::zero(cone.ambient_rank());
        region.insert(zero);
        let mut stack: Vec<LatticeVector> = region.iter().cloned().collect();
        while let Some(q) = stack.pop() {
            for g in coface {
                let next = q.add(g);
                let deg = next.pairing(&grading).expect("ranks agree");
                if deg <= bound && region.insert(next.clone()) {
                    if region.len() > 5_000_000 {
                        return Err(Error::Unsupported(alloc::format!(
                            "saturation search region exceeded 5e6 points at degree {bound}"
                        )));
                    }
                    stack.push(next);
                }
            }
        }

        let min_step: Option<BigInt> = coface
            .iter()
            .map(|g| g.pairing(&grading).expect("ranks agree"))
            .min();
        // Ascending prefix cap, generous enough to catch small witnesses.
        let prefix_cap = BigInt::from(e)
            * BigInt::from(4u32)
            * coface
                .iter()
                .map(|g| g.pairing(&grading).expect("ranks agree"))
                .max()
                .unwrap_or_else(BigInt::one);

        let mut with_deg: Vec<(BigInt, LatticeVector)> = region
            .into_iter()
            .map(|q| (q.pairing(&grading).expect("ranks agree"), q))
            .collect();
        with_deg.sort_by(|a, b| (&a.0, a.1.coords()).cmp(&(&b.0, b.1.coords())));

        let mut candidates = Vec::new();
        for (deg, q) in with_deg {
            let in_prefix = deg <= prefix_cap;
            let is_maximal = match &min_step {
                Some(step) => &deg + step > bound,
                None => true, // F* ∩ M = {0}: the origin is the whole region
            };
            if in_prefix || is_maximal {
                let pv = cone.pairing_vector(&q);
                candidates.push((q, pv));
            }
        }
        Ok(BruteForceOracle {
            power_frontier,
            candidates,
        })
    }

    /// `Some(q)` if `ℓ + q ∈ P^E` for a tested `q`; `None` when the whole
    /// region is exhausted without a witness.
    pub fn search(&self, cone: &Cone, m: &LatticeVector) -> Result<Option<LatticeVector>> {
        if !cone.semigroup_contains(m) {
            return Err(Error::OutsideSemigroup(m.clone()));
        }
        let pv = cone.pairing_vector(m);
        for (q, qpv) in &self.candidates {
            let shifted: Vec<BigInt> = pv.iter().zip(qpv).map(|(a, b)| a + b).collect();
            if self
                .power_frontier
                .iter()
                .any(|g| componentwise_le(g, &shifted))
            {
                return Ok(Some(q.clone()));
            }
        }
        Ok(None)
    }
}

/// One-shot brute-force symbolic membership; see [`BruteForceOracle`].
pub fn symbolic_membership_bruteforce(
    prime: &MonomialPrime,
    e: u32,
    m: &LatticeVector,
    search_degree: u64,
) -> Result<Option<LatticeVector>> {
    BruteForceOracle::new(prime, e, search_degree)?.search(prime.cone(), m)
}

/// Default saturation-search bound: `10 · E · max_{b ∈ 𝓑} ⟨b, v_C⟩`.
pub fn default_search_degree(basis: &SemigroupBasis, e: u32) -> u64 {
    let max_deg = basis.max_degree().to_u64().unwrap_or(u64::MAX / 1024);
    10u64.saturating_mul(e as u64).saturating_mul(max_deg.max(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_basis;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    fn orthant(n: usize) -> Cone {
        let gens: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
        Cone::new(n, gens).unwrap()
    }

    fn segre() -> Cone {
        Cone::from_i64_generators(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]).unwrap()
    }

    fn hypersurface_2_2() -> Cone {
        Cone::from_i64_generators(2, &[&[0, 1], &[2, 1]]).unwrap()
    }

    /// The Segre prime (x, y, z): the face spanned by e_1 and e_2.
    fn segre_xyz() -> (Cone, SemigroupBasis, MonomialPrime) {
        let c = segre();
        let basis = hilbert_basis(&c).unwrap();
        let e1 = c.rays().iter().position(|r| *r == v(&[1, 0, 0])).unwrap();
        let e2 = c.rays().iter().position(|r| *r == v(&[0, 1, 0])).unwrap();
        let mut idx = alloc::vec![e1, e2];
        idx.sort();
        let f = c.face_with_rays(&idx).unwrap();
        let p = monomial_prime(&c, &basis, &f).unwrap();
        (c, basis, p)
    }

    /// The height-one prime of the hypersurface cone at the ray (2, 1).
    fn hypersurface_ray_prime() -> (Cone, SemigroupBasis, MonomialPrime) {
        let c = hypersurface_2_2();
        let basis = hilbert_basis(&c).unwrap();
        let ray = c.rays().iter().position(|r| *r == v(&[2, 1])).unwrap();
        let f = c.face_with_rays(&[ray]).unwrap();
        let p = monomial_prime(&c, &basis, &f).unwrap();
        (c, basis, p)
    }

    fn orthant_ray_prime(n: usize, i: usize) -> (Cone, SemigroupBasis, MonomialPrime) {
        let c = orthant(n);
        let basis = hilbert_basis(&c).unwrap();
        let ray = c
            .rays()
            .iter()
            .position(|r| *r == LatticeVector::unit(n, i))
            .unwrap();
        let f = c.face_with_rays(&[ray]).unwrap();
        let p = monomial_prime(&c, &basis, &f).unwrap();
        (c, basis, p)
    }

    #[test]
    fn segre_xyz_generators() {
        let (_, _, p) = segre_xyz();
        assert_eq!(
            p.generators(),
            &[v(&[0, 1, 0]), v(&[1, 0, 0]), v(&[1, 1, -1])]
        );
        assert_eq!(p.height, 2);
        assert_eq!(p.face_sum(), &v(&[1, 1, 0]));
        assert_eq!(p.coface_generators(), &[v(&[0, 0, 1])]);
    }

    #[test]
    fn orthant_ray_prime_is_principal() {
        let (_, _, p) = orthant_ray_prime(2, 0);
        assert_eq!(p.generators(), &[v(&[1, 0])]);
        assert_eq!(p.height, 1);
    }

    #[test]
    fn hypersurface_ray_prime_generators() {
        let (_, _, p) = hypersurface_ray_prime();
        // Pairings against v_F = (2,1): (1,0) ↦ 2, (0,1) ↦ 1, (−1,2) ↦ 0.
        assert_eq!(p.generators(), &[v(&[0, 1]), v(&[1, 0])]);
        assert_eq!(p.coface_generators(), &[v(&[-1, 2])]);
    }

    #[test]
    fn zero_face_is_rejected() {
        let c = orthant(2);
        let basis = hilbert_basis(&c).unwrap();
        let zero = c.face_with_rays(&[]).unwrap();
        assert!(matches!(
            monomial_prime(&c, &basis, &zero),
            Err(Error::ZeroFace)
        ));
    }

    #[test]
    fn membership_examples() {
        let (_, _, p) = segre_xyz();
        assert!(membership(&p.ideal, &v(&[1, 1, 0])).unwrap());
        for g in p.generators() {
            assert!(membership(&p.ideal, g).unwrap());
        }

        let o = orthant(2);
        let i = MonomialIdeal::new(&o, alloc::vec![v(&[1, 0])]).unwrap();
        assert!(!membership(&i, &v(&[0, 5])).unwrap());
        assert!(matches!(
            membership(&i, &v(&[-1, 0])),
            Err(Error::OutsideSemigroup(_))
        ));
    }

    #[test]
    fn membership_matches_face_positivity() {
        // P_F is exactly the set of semigroup elements positive on v_F.
        let (c, _, p) = segre_xyz();
        for m in crate::hilbert::enumerate_semigroup(&c, 6).unwrap() {
            let expect = p.face_degree(&m).is_positive();
            assert_eq!(membership(&p.ideal, &m).unwrap(), expect, "at {m}");
        }
    }

    #[test]
    fn power_examples() {
        let (_, _, p) = orthant_ray_prime(2, 0);
        let p3 = ideal_power(&p, 3).unwrap();
        assert_eq!(p3.generators(), &[v(&[3, 0])]);

        let (_, _, ps) = segre_xyz();
        let p2 = ideal_power(&ps, 2).unwrap();
        assert_eq!(
            p2.generators(),
            &[
                v(&[0, 2, 0]),
                v(&[1, 1, 0]),
                v(&[1, 2, -1]),
                v(&[2, 0, 0]),
                v(&[2, 1, -1]),
                v(&[2, 2, -2])
            ]
        );

        let (_, _, ph) = hypersurface_ray_prime();
        let p2 = ideal_power(&ph, 2).unwrap();
        assert_eq!(p2.generators(), &[v(&[0, 2]), v(&[1, 1]), v(&[2, 0])]);

        assert!(matches!(
            ideal_power(&ph, 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn minimalize_examples() {
        let o = orthant(2);
        let i = MonomialIdeal::new(&o, alloc::vec![v(&[1, 0]), v(&[2, 0])]).unwrap();
        assert_eq!(minimalize(&i).generators(), &[v(&[1, 0])]);

        let antichain =
            MonomialIdeal::new(&o, alloc::vec![v(&[1, 1]), v(&[2, 0]), v(&[0, 2])]).unwrap();
        assert_eq!(
            minimalize(&antichain).generators(),
            &[v(&[0, 2]), v(&[1, 1]), v(&[2, 0])]
        );

        let ver = Cone::from_i64_generators(2, &[&[1, 0], &[-1, 2]]).unwrap();
        let i = MonomialIdeal::new(&ver, alloc::vec![v(&[0, 1]), v(&[0, 2])]).unwrap();
        assert_eq!(minimalize(&i).generators(), &[v(&[0, 1])]);
    }

    #[test]
    fn valuation_ideal_examples() {
        // E = 1 recovers the prime itself.
        let (_, _, p) = segre_xyz();
        assert_eq!(valuation_ideal(&p, 1).unwrap().generators(), p.generators());

        let i2 = valuation_ideal(&p, 2).unwrap();
        assert_eq!(
            i2.generators(),
            &[v(&[0, 2, 0]), v(&[1, 1, -1]), v(&[2, 0, 0])]
        );

        // Hypersurface ray prime at E = 2: (0,2) = (1,0) + (−1,2) is
        // divisible by (1,0) in this semigroup, so the ideal is principal.
        let (_, _, ph) = hypersurface_ray_prime();
        let i2 = valuation_ideal(&ph, 2).unwrap();
        assert_eq!(i2.generators(), &[v(&[1, 0])]);

        assert!(matches!(
            valuation_ideal(&ph, 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn valuation_ideal_membership_contract() {
        // ℓ ∈ I_F(E) ⟺ ⟨ℓ, v_F⟩ ≥ E, checked pointwise on a truncation.
        let (c, _, p) = segre_xyz();
        for e in 1u32..=4 {
            let ideal = valuation_ideal(&p, e).unwrap();
            let oracle = IdealMembership::new(&ideal);
            for m in crate::hilbert::enumerate_semigroup(&c, 8).unwrap() {
                let expect = p.face_degree(&m) >= BigInt::from(e);
                assert_eq!(oracle.contains(&m).unwrap(), expect, "E={e} at {m}");
            }
        }
    }

    #[test]
    fn symbolic_membership_examples() {
        let (c, _, p) = segre_xyz();
        // z^s ∈ P^(2s): ℓ = (s,s,−s) against g = s·e1 + s·e2.
        for s in 1..=3i64 {
            let ell = v(&[s, s, -s]);
            assert!(symbolic_membership(&p, (2 * s) as u32, &ell).unwrap());
            // ... but z^s ∉ P^{2s} as an ordinary power.
            let power = ideal_power(&p, (2 * s) as u32).unwrap();
            assert!(!membership(&power, &ell).unwrap());
        }

        // E = 1: symbolic membership coincides with membership in P.
        for m in crate::hilbert::enumerate_semigroup(&c, 6).unwrap() {
            assert_eq!(
                symbolic_membership(&p, 1, &m).unwrap(),
                membership(&p.ideal, &m).unwrap()
            );
        }

        // Generators of P^E are symbolic members (witness q = 0).
        let p3 = ideal_power(&p, 3).unwrap();
        for g in p3.generators() {
            assert!(symbolic_membership(&p, 3, g).unwrap());
        }
    }

    #[test]
    fn brute_force_examples() {
        let (_, basis, p) = segre_xyz();
        // z needs the witness w: z·w = xy ∈ P².
        let q = symbolic_membership_bruteforce(&p, 2, &v(&[1, 1, -1]), 4).unwrap();
        assert_eq!(q, Some(v(&[0, 0, 1])));

        // Membership in P itself is witnessed by q = 0.
        let q = symbolic_membership_bruteforce(&p, 1, &v(&[1, 0, 0]), 4).unwrap();
        assert_eq!(q, Some(v(&[0, 0, 0])));

        // 0 ∉ P^(1), and the search is conclusive.
        let deg = default_search_degree(&basis, 1);
        let q = symbolic_membership_bruteforce(&p, 1, &v(&[0, 0, 0]), deg).unwrap();
        assert_eq!(q, None);
    }

    #[test]
    fn containment_examples() {
        let (_, _, p) = segre_xyz();
        // I_F(3) ⊆ P² (the containment theorem at r = 2, D = 2).
        let i3 = valuation_ideal(&p, 3).unwrap();
        let p2 = ideal_power(&p, 2).unwrap();
        assert!(ideal_containment(&i3, &p2).unwrap());
        // P² ⊆ P always; P ⊄ P² for a principal prime.
        assert!(ideal_containment(&p2, &p.ideal).unwrap());

        let (_, _, po) = orthant_ray_prime(2, 0);
        let po2 = ideal_power(&po, 2).unwrap();
        assert!(!ideal_containment(&po.ideal, &po2).unwrap());
    }

    #[test]
    fn containment_requires_same_cone() {
        let (_, _, p) = segre_xyz();
        let (_, _, po) = orthant_ray_prime(2, 0);
        assert!(matches!(
            ideal_containment(&p.ideal, &po.ideal),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn primary_sanity() {
        // Adding a v_F-degree-zero element never changes I_F(E) membership.
        let (c, _, p) = segre_xyz();
        let i3 = valuation_ideal(&p, 3).unwrap();
        let oracle = IdealMembership::new(&i3);
        let w = v(&[0, 0, 1]);
        for m in crate::hilbert::enumerate_semigroup(&c, 6).unwrap() {
            let shifted = m.add(&w);
            assert_eq!(
                oracle.contains(&shifted).unwrap(),
                oracle.contains(&m).unwrap()
            );
        }
    }

    #[test]
    fn prime_generated_by_basis_slice() {
        // Every truncated semigroup element positive on v_F is divisible by
        // a generator of P_F.
        let (c, _, p) = segre_xyz();
        let oracle = IdealMembership::new(&p.ideal);
        for m in crate::hilbert::enumerate_semigroup(&c, 8).unwrap() {
            if p.face_degree(&m).is_positive() {
                assert!(oracle.contains(&m).unwrap(), "{m} should be in P_F");
            }
        }
    }

    #[test]
    fn oracles_agree_on_segre() {
        let (c, basis, p) = segre_xyz();
        for e in 1u32..=4 {
            let fast = SymbolicOracle::new(&p, e).unwrap();
            let brute = BruteForceOracle::new(&p, e, default_search_degree(&basis, e)).unwrap();
            for m in crate::hilbert::enumerate_semigroup(&c, 8).unwrap() {
                let f = fast.contains(&c, &m).unwrap();
                let b = brute.search(&c, &m).unwrap();
                assert_eq!(f, b.is_some(), "E={e} at {m}");
            }
        }
    }
}
