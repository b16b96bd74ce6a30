//! Property suites over randomly generated cones: structural facts about
//! two-dimensional and simplicial cones, the power/symbolic/valuation
//! sandwich, and the coupling between F-signature and class group order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use toric_core::cone::{face_intersection, Cone};
use toric_core::hilbert::{enumerate_semigroup, hilbert_basis};
use toric_core::ideal::{
    ideal_power, monomial_prime, valuation_ideal, IdealMembership, SymbolicOracle,
};
use toric_core::invariant::{class_group, compute_dprime, f_signature, ray_class_order};
use toric_core::lattice::LatticeVector;

fn arb_full_cone(rank: usize, max_coord: i64) -> impl Strategy<Value = Cone> {
    proptest::collection::vec(
        proptest::collection::vec(-max_coord..=max_coord, rank),
        rank..=rank + 2,
    )
    .prop_filter_map("full pointed cones only", move |gens| {
        let vecs: Vec<LatticeVector> = gens
            .iter()
            .filter(|g| g.iter().any(|&x| x != 0))
            .map(|g| LatticeVector::from_i64(g))
            .collect();
        if vecs.is_empty() {
            return None;
        }
        Cone::new(rank, vecs).ok().filter(Cone::is_full)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn two_dimensional_cones_are_simplicial_cyclic(c in arb_full_cone(2, 10)) {
        let cls = c.classify();
        prop_assert!(cls.simplicial);
        let cg = class_group(&c).unwrap();
        prop_assert_eq!(cg.free_rank, 0);
        prop_assert!(cg.invariant_factors.len() <= 1, "class group must be cyclic");
        for j in 0..c.rays().len() {
            prop_assert_eq!(Some(ray_class_order(&c, j).unwrap()), cg.ray_orders[j].clone());
        }
    }

    #[test]
    fn signature_inverts_class_order_on_simplicial(c in arb_full_cone(3, 3)) {
        prop_assume!(c.classify().simplicial);
        let cg = class_group(&c).unwrap();
        let ord = cg.order.unwrap();
        let fs = f_signature(&c).unwrap();
        prop_assert_eq!(
            fs.value * BigRational::from_integer(ord),
            BigRational::one()
        );
    }

    #[test]
    fn faces_closed_under_intersection(c in arb_full_cone(3, 3)) {
        let faces = c.faces().unwrap();
        for a in &faces {
            for b in &faces {
                let meet = face_intersection(&c, a, b).unwrap();
                prop_assert!(faces.contains(&meet));
            }
        }
    }

    #[test]
    fn sandwich_on_random_cones(c in arb_full_cone(2, 6)) {
        // P^E ⊆ {symbolic members} ⊆ I_F(E) ⊆ P^⌈E/D′⌉, pointwise on a
        // degree truncation, for every nonzero face.
        let basis = hilbert_basis(&c).unwrap();
        let points = enumerate_semigroup(&c, 8).unwrap();
        for face in c.faces().unwrap() {
            if face.is_zero() {
                continue;
            }
            let prime = monomial_prime(&c, &basis, &face).unwrap();
            let dprime = compute_dprime(&basis, &face).unwrap().to_u32().unwrap();
            for e in 1u32..=4 {
                let power = ideal_power(&prime, e).unwrap();
                let power_oracle = IdealMembership::new(&power);
                let symbolic = SymbolicOracle::new(&prime, e).unwrap();
                let quotient = ideal_power(&prime, e.div_ceil(dprime)).unwrap();
                let quotient_oracle = IdealMembership::new(&quotient);
                let valuation = valuation_ideal(&prime, e).unwrap();
                let valuation_oracle = IdealMembership::new(&valuation);
                for m in &points {
                    let in_power = power_oracle.contains(m).unwrap();
                    let in_symbolic = symbolic.contains(&c, m).unwrap();
                    let in_valuation = valuation_oracle.contains(m).unwrap();
                    let in_quotient = quotient_oracle.contains(m).unwrap();
                    prop_assert!(!in_power || in_symbolic);
                    prop_assert!(!in_symbolic || in_valuation);
                    prop_assert!(!in_valuation || in_quotient);
                    // The valuation ideal is exactly the pairing threshold.
                    prop_assert_eq!(
                        in_valuation,
                        prime.face_degree(m) >= BigInt::from(e)
                    );
                }
            }
        }
    }

    #[test]
    fn symbolic_membership_shift_invariant(c in arb_full_cone(2, 5)) {
        // Multiplying by a monomial outside P never changes symbolic
        // membership (the contraction is P-primary).
        let basis = hilbert_basis(&c).unwrap();
        let points = enumerate_semigroup(&c, 6).unwrap();
        for face in c.faces().unwrap() {
            if face.is_zero() {
                continue;
            }
            let prime = monomial_prime(&c, &basis, &face).unwrap();
            let Some(q) = prime.coface_generators().first() else {
                continue;
            };
            for e in 1u32..=3 {
                let oracle = SymbolicOracle::new(&prime, e).unwrap();
                for m in &points {
                    let shifted = m.add(q);
                    prop_assert_eq!(
                        oracle.contains(&c, m).unwrap(),
                        oracle.contains(&c, &shifted).unwrap()
                    );
                }
            }
        }
    }
}
