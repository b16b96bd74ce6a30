//! Constructors for the named example families — hypersurface,
//! Veronese, and Segre-Veronese cones — each paired with the closed-form
//! invariants expected of it, kept as data so golden tests can diff
//! computed values against the predictions.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::lattice::{self, LatticeVector};

/// Family label and parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Degree-`degree` Veronese cone in `vars` variables
    /// (the one-factor Segre-Veronese case).
    Veronese { degree: u32, vars: u32 },
    /// Cone of the degree-`degree` hypersurface algebra in `vars` + 1
    /// variables.
    Hypersurface { vars: u32, degree: u32 },
    /// Segre product of Veronese cones with the given degree and variable
    /// sequences.
    SegreVeronese { degrees: Vec<u32>, vars: Vec<u32> },
}

/// Closed-form expectations; a field is present exactly when the family
/// determines it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Predictions {
    /// Exact expected Hilbert basis (sorted lexicographically).
    pub hilbert_basis: Option<Vec<LatticeVector>>,
    pub basis_size: Option<BigInt>,
    pub d: Option<BigInt>,
    pub t: Option<BigInt>,
    /// Expected grading functional `v_C`.
    pub grading: Option<LatticeVector>,
    pub class_invariant_factors: Option<Vec<BigInt>>,
    pub class_order: Option<BigInt>,
    pub f_signature: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub predicted: Predictions,
}

fn binomial(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k.min(n));
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// The cone of `F[x_1..x_n, z]/(z^E − x_1⋯x_n)`: spanned in rank `n` by
/// `e_n` and `E·e_i + e_n` for `i < n`. Its dual semigroup has the
/// `n + 1`-element basis `{e_1, …, e_n, E·e_n − e_1 − ⋯ − e_{n−1}}`, the
/// class group is `(Z/E)^{n−1}`, and the height-one multiplier is
/// `max{n, E}`.
pub fn hypersurface_cone(vars: u32, degree: u32) -> Result<(Cone, FamilySpec)> {
    if vars < 2 || degree < 2 {
        return Err(Error::InvalidParameter(
            "hypersurface family requires n ≥ 2 and E ≥ 2",
        ));
    }
    let n = vars as usize;
    let e = BigInt::from(degree);

    let mut gens: Vec<LatticeVector> = Vec::with_capacity(n);
    gens.push(LatticeVector::unit(n, n - 1));
    for i in 0..n - 1 {
        let mut coords = vec![BigInt::from(0); n];
        coords[i] = e.clone();
        coords[n - 1] = BigInt::one();
        gens.push(LatticeVector::new(coords));
    }
    let cone = Cone::new(n, gens)?;

    let mut basis: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
    let mut last = vec![-BigInt::one(); n];
    last[n - 1] = e.clone();
    basis.push(LatticeVector::new(last));
    basis.sort_by(lattice::lex_cmp);

    let mut grading = vec![e.clone(); n];
    grading[n - 1] = BigInt::from(n as u32);

    let d = BigInt::from(vars.max(degree));
    let order = e.pow(vars - 1);
    let predicted = Predictions {
        hilbert_basis: Some(basis),
        basis_size: Some(BigInt::from(n as u32 + 1)),
        d: Some(d.clone()),
        t: Some(d),
        grading: Some(LatticeVector::new(grading)),
        class_invariant_factors: Some(vec![e; n - 1]),
        class_order: Some(order.clone()),
        f_signature: Some(BigRational::new(BigInt::one(), order)),
    };
    Ok((
        cone,
        FamilySpec {
            kind: FamilyKind::Hypersurface {
                vars,
                degree,
            },
            predicted,
        },
    ))
}

/// Block offsets `d(j) = (Σ_{i ≤ j} m_i) − (j − 1)` with `d(0) = 0`.
fn block_offsets(vars: &[u32]) -> Vec<usize> {
    let mut d = vec![0usize];
    for (j, &m) in vars.iter().enumerate() {
        let prev = d[j];
        d.push(prev + m as usize - usize::from(j > 0));
    }
    d
}

/// The Segre-Veronese cone for degree sequence `degrees` and variable
/// counts `vars`, in rank `d(k) = Σ m_i − (k − 1)`.
///
/// Generators: block 1 contributes `e_1, …, e_{m_1−1}` and
/// `−e_1 − ⋯ − e_{m_1−1} + E_1·e_{m_1}`; each later block `j` contributes
/// its unit vectors and `E_j·e_{m_1} − Σ e_h` over the block coordinates.
/// The dual semigroup basis consists of `e*_{m_1} + Σ_j Σ_ℓ a_{j,ℓ}·e*`
/// with per-block coefficient sums between 0 and `E_j`; its size is
/// `∏ binom(m_j − 1 + E_j, E_j)`, and `v_C = (Σ E_j)·e_{m_1}`.
pub fn segre_veronese_cone(degrees: &[u32], vars: &[u32]) -> Result<(Cone, FamilySpec)> {
    if degrees.is_empty() || degrees.len() != vars.len() {
        return Err(Error::InvalidParameter(
            "degree and variable sequences must be nonempty and of equal length",
        ));
    }
    if degrees.iter().any(|&e| e < 1) || vars.iter().any(|&m| m < 2) {
        return Err(Error::InvalidParameter(
            "Segre-Veronese requires all Eᵢ ≥ 1 and all mᵢ ≥ 2",
        ));
    }
    let k = degrees.len();
    let offsets = block_offsets(vars);
    let rank = offsets[k];
    let anchor = vars[0] as usize - 1; // zero-based index of e_{m_1}

    let mut gens: Vec<LatticeVector> = Vec::new();
    for j in 0..k {
        let block: Vec<usize> = if j == 0 {
            (0..vars[0] as usize - 1).collect()
        } else {
            (offsets[j]..offsets[j + 1]).collect()
        };
        for &h in &block {
            gens.push(LatticeVector::unit(rank, h));
        }
        let mut coords = vec![BigInt::from(0); rank];
        coords[anchor] = BigInt::from(degrees[j]);
        for &h in &block {
            coords[h] -= BigInt::one();
        }
        gens.push(LatticeVector::new(coords));
    }
    let cone = Cone::new(rank, gens)?;

    // Expected basis: anchor dual coordinate 1; block coordinates range
    // over all per-block compositions with sum at most E_j.
    let mut basis: Vec<LatticeVector> = Vec::new();
    let mut stack: Vec<(usize, Vec<BigInt>)> = vec![(0, {
        let mut base = vec![BigInt::from(0); rank];
        base[anchor] = BigInt::one();
        base
    })];
    while let Some((j, coords)) = stack.pop() {
        if j == k {
            basis.push(LatticeVector::new(coords));
            continue;
        }
        let block: Vec<usize> = if j == 0 {
            (0..vars[0] as usize - 1).collect()
        } else {
            (offsets[j]..offsets[j + 1]).collect()
        };
        // All nonnegative fillings of this block with sum ≤ E_j.
        let mut fillings: Vec<Vec<BigInt>> = vec![Vec::new()];
        for _ in &block {
            let mut next = Vec::new();
            for f in &fillings {
                let used: BigInt = f.iter().sum();
                let room = BigInt::from(degrees[j]) - used;
                let mut a = BigInt::from(0);
                while a <= room {
                    let mut g = f.clone();
                    g.push(a.clone());
                    next.push(g);
                    a += 1;
                }
            }
            fillings = next;
        }
        for f in fillings {
            let mut c = coords.clone();
            for (&h, a) in block.iter().zip(f) {
                c[h] = a;
            }
            stack.push((j + 1, c));
        }
    }
    basis.sort_by(lattice::lex_cmp);
    basis.dedup();

    let size: BigInt = degrees
        .iter()
        .zip(vars)
        .map(|(&e, &m)| binomial((m - 1 + e) as u64, e as u64))
        .product();
    let total_degree: u32 = degrees.iter().sum();
    let mut grading = vec![BigInt::from(0); rank];
    grading[anchor] = BigInt::from(total_degree);

    let predicted = Predictions {
        hilbert_basis: Some(basis),
        basis_size: Some(size),
        d: Some(BigInt::from(total_degree)),
        grading: Some(LatticeVector::new(grading)),
        ..Predictions::default()
    };
    Ok((
        cone,
        FamilySpec {
            kind: FamilyKind::SegreVeronese {
                degrees: degrees.to_vec(),
                vars: vars.to_vec(),
            },
            predicted,
        },
    ))
}

/// The degree-`degree` Veronese cone in `vars` variables: the one-factor
/// Segre-Veronese cone, with the extra closed forms available in the
/// simplicial case (`#Cl = E`, F-signature `1/E`, `T = E`).
pub fn veronese_cone(degree: u32, vars: u32) -> Result<(Cone, FamilySpec)> {
    if degree < 1 || vars < 2 {
        return Err(Error::InvalidParameter(
            "Veronese family requires E ≥ 1 and n ≥ 2",
        ));
    }
    let (cone, spec) = segre_veronese_cone(&[degree], &[vars])?;
    let e = BigInt::from(degree);
    let mut predicted = spec.predicted;
    predicted.d = Some(e.clone());
    predicted.basis_size = Some(binomial((vars - 1 + degree) as u64, degree as u64));
    predicted.t = Some(e.clone());
    predicted.class_order = Some(e.clone());
    predicted.class_invariant_factors = Some(if e.is_one() { vec![] } else { vec![e.clone()] });
    predicted.f_signature = Some(BigRational::new(BigInt::one(), e));
    Ok((
        cone,
        FamilySpec {
            kind: FamilyKind::Veronese {
                degree,
                vars,
            },
            predicted,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_basis;
    use crate::invariant::{class_group, compute_d, compute_t, f_signature};

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    fn check_predictions(cone: &Cone, spec: &FamilySpec) {
        let basis = hilbert_basis(cone).unwrap();
        let p = &spec.predicted;
        if let Some(expect) = &p.hilbert_basis {
            assert_eq!(basis.elements(), &expect[..], "basis mismatch");
        }
        if let Some(size) = &p.basis_size {
            assert_eq!(BigInt::from(basis.len() as u64), *size);
        }
        if let Some(grading) = &p.grading {
            assert_eq!(basis.grading(), grading);
        }
        if let Some(d) = &p.d {
            assert_eq!(&compute_d(&basis), d);
        }
        let cg = class_group(cone).unwrap();
        if let Some(factors) = &p.class_invariant_factors {
            assert_eq!(&cg.invariant_factors, factors);
        }
        if let Some(order) = &p.class_order {
            assert_eq!(cg.order.as_ref(), Some(order));
        }
        if let Some(t) = &p.t {
            assert_eq!(compute_t(&basis, &cg).as_ref(), Some(t));
        }
        if let Some(fs) = &p.f_signature {
            assert_eq!(&f_signature(cone).unwrap().value, fs);
        }
    }

    #[test]
    fn hypersurface_examples() {
        let (cone, spec) = hypersurface_cone(2, 2).unwrap();
        assert_eq!(cone.generators(), &[v(&[0, 1]), v(&[2, 1])]);
        check_predictions(&cone, &spec);

        let (cone, spec) = hypersurface_cone(3, 2).unwrap();
        assert_eq!(spec.predicted.class_order, Some(BigInt::from(4)));
        assert_eq!(spec.predicted.t, Some(BigInt::from(3)));
        check_predictions(&cone, &spec);

        let (cone, spec) = hypersurface_cone(2, 5).unwrap();
        assert_eq!(spec.predicted.t, Some(BigInt::from(5)));
        check_predictions(&cone, &spec);

        assert!(hypersurface_cone(1, 2).is_err());
        assert!(hypersurface_cone(2, 1).is_err());
    }

    #[test]
    fn segre_veronese_examples() {
        // (Ē, m̄) = ((1,1),(2,2)): the rank-3 presentation of the product
        // of two polynomial rings in two variables.
        let (cone, spec) = segre_veronese_cone(&[1, 1], &[2, 2]).unwrap();
        assert_eq!(
            cone.generators(),
            &[v(&[1, 0, 0]), v(&[-1, 1, 0]), v(&[0, 0, 1]), v(&[0, 1, -1])]
        );
        assert_eq!(spec.predicted.d, Some(BigInt::from(2)));
        assert_eq!(spec.predicted.basis_size, Some(BigInt::from(4)));
        assert_eq!(spec.predicted.grading, Some(v(&[0, 2, 0])));
        check_predictions(&cone, &spec);

        let (cone, spec) = segre_veronese_cone(&[2], &[2]).unwrap();
        assert_eq!(spec.predicted.basis_size, Some(BigInt::from(3)));
        check_predictions(&cone, &spec);

        let (cone, spec) = segre_veronese_cone(&[2, 1], &[2, 2]).unwrap();
        assert_eq!(spec.predicted.d, Some(BigInt::from(3)));
        assert_eq!(spec.predicted.basis_size, Some(BigInt::from(6)));
        check_predictions(&cone, &spec);

        assert!(segre_veronese_cone(&[1], &[2, 2]).is_err());
        assert!(segre_veronese_cone(&[], &[]).is_err());
        assert!(segre_veronese_cone(&[0], &[2]).is_err());
        assert!(segre_veronese_cone(&[1], &[1]).is_err());
    }

    #[test]
    fn veronese_examples() {
        let (cone, spec) = veronese_cone(2, 2).unwrap();
        assert_eq!(cone.generators(), &[v(&[1, 0]), v(&[-1, 2])]);
        assert_eq!(spec.predicted.d, Some(BigInt::from(2)));
        assert_eq!(spec.predicted.basis_size, Some(BigInt::from(3)));
        check_predictions(&cone, &spec);

        let (cone, spec) = veronese_cone(3, 2).unwrap();
        assert_eq!(spec.predicted.basis_size, Some(BigInt::from(4)));
        check_predictions(&cone, &spec);

        // Degree 1 is the polynomial ring: smooth, D = 1.
        let (cone, spec) = veronese_cone(1, 3).unwrap();
        assert!(cone.classify().smooth);
        assert_eq!(spec.predicted.d, Some(BigInt::one()));
        check_predictions(&cone, &spec);

        assert!(veronese_cone(0, 2).is_err());
        assert!(veronese_cone(2, 1).is_err());
    }

    #[test]
    fn veronese_equals_one_factor_segre() {
        for (e, n) in [(2u32, 2u32), (3, 2), (2, 3), (4, 3)] {
            let (a, _) = veronese_cone(e, n).unwrap();
            let (b, _) = segre_veronese_cone(&[e], &[n]).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn segre_veronese_triple_product() {
        let (cone, spec) = segre_veronese_cone(&[1, 1, 1], &[2, 2, 2]).unwrap();
        assert_eq!(cone.ambient_rank(), 4);
        assert_eq!(spec.predicted.d, Some(BigInt::from(3)));
        assert_eq!(spec.predicted.basis_size, Some(BigInt::from(8)));
        check_predictions(&cone, &spec);
    }
}
