//! Analysis pipeline: reduce to a full pointed cone, compute every
//! invariant, optionally run the containment/sharpness verification, and
//! assemble the deterministic report.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_core::cone::{reduce_to_full_pointed, Cone};
use toric_core::hilbert::{enumerate_semigroup, hilbert_basis, SemigroupBasis};
use toric_core::ideal::{
    default_search_degree, monomial_prime, BruteForceOracle, SymbolicOracle,
};
use toric_core::invariant::{
    class_group, f_signature, multiplier_report, ray_class_order, verify_containment,
    verify_sharpness, MultiplierScope,
};

use crate::report::*;
use crate::spec_file::ConeSpecFile;
use crate::{CliError, CliResult};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub r_max: u32,
    pub multiplier_override: Option<u64>,
    pub search_degree: Option<u64>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            r_max: 3,
            multiplier_override: None,
            search_degree: None,
            seed: 0,
        }
    }
}

/// Outcome of an analysis run: the report plus the flags the process exit
/// code is derived from.
pub struct AnalysisOutcome {
    pub report: AnalysisReport,
    pub verification_failed: bool,
    pub internal_breach: Option<String>,
}

fn scope_name(scope: MultiplierScope) -> &'static str {
    match scope {
        MultiplierScope::Global => "global",
        MultiplierScope::FaceLocal => "face",
        MultiplierScope::Override => "override",
    }
}

/// Cheap cross-checks between independently computed quantities. Any
/// failure here is a bug in the implementation, never in the input, and
/// surfaces as exit code 3.
fn internal_cross_checks(
    cone: &Cone,
    basis: &SemigroupBasis,
    cg: &toric_core::invariant::ClassGroupReport,
    fsig: &toric_core::invariant::FSignatureReport,
    multipliers: &toric_core::invariant::MultiplierReport,
) -> Result<(), String> {
    let dd = cone
        .dual()
        .and_then(|d| d.dual())
        .map_err(|e| format!("double dual failed: {e}"))?;
    if dd.rays() != cone.rays() {
        return Err("double dual changed the ray set".into());
    }
    let n = cone.ambient_rank();
    for f in cone.faces().map_err(|e| e.to_string())? {
        let df = cone.dual_face(&f).map_err(|e| e.to_string())?;
        if f.dim + df.dim != n {
            return Err(format!(
                "face duality dimension identity failed on {:?}",
                f.ray_indices
            ));
        }
    }
    if cone.classify().simplicial {
        match (&fsig.simplicial_check, &cg.order) {
            (Some(check), Some(_)) if *check == fsig.value => {}
            _ => {
                return Err("simplicial F-signature does not invert the class group order".into())
            }
        }
        for j in 0..cone.rays().len() {
            let fast = ray_class_order(cone, j).map_err(|e| e.to_string())?;
            if cg.ray_orders[j] != Some(fast) {
                return Err(format!("ray class order mismatch at ray {j}"));
            }
        }
    }
    let d = toric_core::invariant::compute_d(basis);
    if multipliers.b_sharp > d {
        return Err("sharpness bound exceeds the global multiplier".into());
    }
    for (_, dp) in &multipliers.per_face_dprime {
        if *dp > d {
            return Err("face-local multiplier exceeds the global multiplier".into());
        }
    }
    Ok(())
}

pub fn analyze(spec: &ConeSpecFile, verify: Option<&VerifyOptions>) -> CliResult<AnalysisOutcome> {
    spec.validate()?;
    let input_rank = spec.rank;
    let (cone, laurent_rank, embedding) =
        reduce_to_full_pointed(input_rank, &spec.generator_vectors())?;
    let rank = cone.ambient_rank();

    let classification = cone.classify();
    let basis = hilbert_basis(&cone)?;
    let faces = cone.faces()?;
    let cg = class_group(&cone)?;
    let multipliers = multiplier_report(&cone, &basis, &cg, &faces)?;
    let fsig = f_signature(&cone)?;

    let internal_breach = internal_cross_checks(&cone, &basis, &cg, &fsig, &multipliers)
        .err()
        .map(|msg| msg.to_string());

    let mut by_dim = vec![0usize; rank + 1];
    for f in &faces {
        by_dim[f.dim] += 1;
    }

    let mut verification_failed = false;
    let mut breach = internal_breach;
    let verification = match verify {
        None => None,
        Some(opts) => {
            let (json, failed, oracle_breach) = run_verification(&cone, &basis, opts)?;
            verification_failed = failed;
            if breach.is_none() {
                breach = oracle_breach;
            }
            Some(json)
        }
    };

    let report = AnalysisReport {
        name: spec.name.clone(),
        input_rank,
        laurent_rank,
        rank,
        embedding_rows: if laurent_rank == 0 {
            None
        } else {
            Some(vectors_json(&embedding.rows())?)
        },
        classification: ClassificationJson {
            pointed: classification.pointed,
            full: classification.full,
            simplicial: classification.simplicial,
            smooth: classification.smooth,
        },
        generators: vectors_json(cone.generators())?,
        rays: vectors_json(cone.rays())?,
        dual_rays: vectors_json(cone.dual_rays())?,
        grading: vector_json(&cone.grading_functional())?,
        hilbert_basis: HilbertJson {
            size: basis.len(),
            elements: vectors_json(basis.elements())?,
        },
        faces: FacesJson {
            total: faces.len(),
            by_dim,
            faces: faces.iter().map(|f| f.ray_indices.clone()).collect(),
        },
        multipliers: MultipliersJson {
            d: int_string(&multipliers.d),
            per_face_dprime: multipliers
                .per_face_dprime
                .iter()
                .map(|(rays, dp)| FaceDprimeJson {
                    face_rays: rays.clone(),
                    dprime: int_string(dp),
                })
                .collect(),
            t: multipliers.t.as_ref().map(int_string),
            u: multipliers.u.as_ref().map(int_string),
            b_sharp: int_string(&multipliers.b_sharp),
            note: "T = max(D, annihilator of Cl) and U = lcm(D, #Cl) are computed \
                   independently and both reported; they need not agree."
                .into(),
        },
        class_group: ClassGroupJson {
            free_rank: cg.free_rank,
            invariant_factors: cg.invariant_factors.iter().map(int_string).collect(),
            order: cg.order.as_ref().map(int_string),
            ray_orders: cg
                .ray_orders
                .iter()
                .map(|o| o.as_ref().map(int_string))
                .collect(),
        },
        f_signature: FSignatureJson {
            value: RationalJson::from_rational(&fsig.value),
            simplicial_check: fsig
                .simplicial_check
                .as_ref()
                .map(RationalJson::from_rational),
            polytope_vertices: fsig
                .polytope_vertices
                .iter()
                .map(|v| v.iter().map(RationalJson::from_rational).collect())
                .collect(),
        },
        verification,
    };

    Ok(AnalysisOutcome {
        report,
        verification_failed,
        internal_breach: breach,
    })
}

fn run_verification(
    cone: &Cone,
    basis: &SemigroupBasis,
    opts: &VerifyOptions,
) -> CliResult<(VerificationJson, bool, Option<String>)> {
    if opts.r_max == 0 {
        return Err(CliError::Input("--rmax must be at least 1".into()));
    }
    let faces = cone.faces()?;
    let mut containment = Vec::new();
    let mut all_passed = true;

    for face in &faces {
        if face.is_zero() {
            continue;
        }
        let checks =
            verify_containment(cone, basis, face, opts.r_max, opts.multiplier_override)?;
        for c in checks {
            if !c.pass {
                all_passed = false;
            }
            containment.push(ContainmentJson {
                face_rays: face.ray_indices.clone(),
                r: c.r,
                scope: scope_name(c.scope).into(),
                multiplier: int_string(&c.multiplier),
                exponent: c.exponent,
                pass: c.pass,
                witness: c.witness.as_ref().map(vector_json).transpose()?,
            });
        }
    }

    let max_e_for_search = 4u32;
    let default_degree = default_search_degree(basis, max_e_for_search);
    let search_degree = opts.search_degree.unwrap_or(default_degree);

    let sharpness = if cone.classify().simplicial {
        let w = verify_sharpness(cone, basis)?;
        let pass = w.symbolic_member && !w.in_square;
        if !pass {
            all_passed = false;
        }
        let b_u32 = w
            .bound
            .to_u32()
            .ok_or_else(|| CliError::Internal(format!("sharpness bound {}", w.bound)))?;
        let face = cone.face_with_rays(&[w.ray_index])?;
        let prime = monomial_prime(cone, basis, &face)?;
        let brute = BruteForceOracle::new(&prime, b_u32, search_degree)?;
        let saturation_witness = brute
            .search(cone, &w.witness)?
            .as_ref()
            .map(vector_json)
            .transpose()?;
        Some(SharpnessJson {
            ray_index: w.ray_index,
            witness: vector_json(&w.witness)?,
            bound: int_string(&w.bound),
            symbolic_member: w.symbolic_member,
            in_square: w.in_square,
            saturation_witness,
            pass,
        })
    } else {
        None
    };

    // Seeded spot checks of the two symbolic oracles against each other.
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let points = enumerate_semigroup(cone, 6)?;
    let nonzero_faces: Vec<_> = faces.iter().filter(|f| !f.is_zero()).collect();
    let mut samples = 0usize;
    let mut disagreements = 0usize;
    let mut inconclusive = 0usize;
    for _ in 0..12 {
        let face = nonzero_faces[rng.gen_range(0..nonzero_faces.len())];
        let e: u32 = rng.gen_range(1..=3);
        let m = &points[rng.gen_range(0..points.len())];
        let prime = monomial_prime(cone, basis, face)?;
        let fast = SymbolicOracle::new(&prime, e)?.contains(cone, m)?;
        let brute = BruteForceOracle::new(&prime, e, default_search_degree(basis, e))?
            .search(cone, m)?;
        samples += 1;
        match (fast, brute) {
            (false, Some(_)) => disagreements += 1,
            (true, None) => inconclusive += 1,
            _ => {}
        }
    }
    let oracle_breach = (disagreements > 0).then(|| {
        format!("symbolic oracle disagreed with the saturation search on {disagreements} samples")
    });

    Ok((
        VerificationJson {
            r_max: opts.r_max,
            multiplier_override: opts.multiplier_override,
            search_degree,
            containment,
            sharpness,
            oracle_spot_checks: OracleChecksJson {
                seed: opts.seed,
                samples,
                disagreements,
                inconclusive,
            },
            all_passed,
        },
        !all_passed,
        oracle_breach,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(rank: usize, gens: &[&[i128]], name: &str) -> ConeSpecFile {
        ConeSpecFile {
            rank,
            generators: gens.iter().map(|g| g.to_vec()).collect(),
            name: Some(name.into()),
        }
    }

    #[test]
    fn segre_report_values() {
        let spec = spec(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]], "segre");
        let out = analyze(&spec, None).unwrap();
        assert!(out.internal_breach.is_none());
        let r = out.report;
        assert_eq!(r.multipliers.d, "2");
        assert_eq!(r.class_group.free_rank, 1);
        assert_eq!(r.f_signature.value.num, "2");
        assert_eq!(r.f_signature.value.den, "3");
        assert_eq!(r.faces.total, 10);
        assert_eq!(r.hilbert_basis.size, 4);
        assert!(r.multipliers.t.is_none());
    }

    #[test]
    fn orthant_report_is_trivial() {
        let spec = spec(2, &[&[1, 0], &[0, 1]], "orthant");
        let out = analyze(&spec, Some(&VerifyOptions::default())).unwrap();
        let r = out.report;
        assert!(r.classification.smooth);
        assert_eq!(r.multipliers.d, "1");
        assert_eq!(r.multipliers.t.as_deref(), Some("1"));
        assert_eq!(r.multipliers.u.as_deref(), Some("1"));
        assert_eq!(r.class_group.order.as_deref(), Some("1"));
        assert_eq!(r.f_signature.value.num, "1");
        assert_eq!(r.f_signature.value.den, "1");
        let v = r.verification.unwrap();
        assert!(v.all_passed);
        assert_eq!(v.oracle_spot_checks.disagreements, 0);
        assert!(!out.verification_failed);
    }

    #[test]
    fn reduction_is_reported() {
        let spec = spec(3, &[&[1, 0, 0], &[1, 2, 0]], "plane");
        let out = analyze(&spec, None).unwrap();
        assert_eq!(out.report.laurent_rank, 1);
        assert_eq!(out.report.rank, 2);
        assert!(out.report.embedding_rows.is_some());
    }

    #[test]
    fn nonpointed_is_an_input_error() {
        let spec = spec(2, &[&[1, 0], &[-1, 0]], "line");
        let err = analyze(&spec, None).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("not pointed"), "{msg}");
        assert!(msg.contains("(1, 0)") || msg.contains("(-1, 0)"), "{msg}");
    }

    #[test]
    fn override_multiplier_fails_on_segre() {
        let spec = spec(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]], "segre");
        let opts = VerifyOptions {
            r_max: 2,
            multiplier_override: Some(1),
            ..VerifyOptions::default()
        };
        let out = analyze(&spec, Some(&opts)).unwrap();
        assert!(out.verification_failed);
        let v = out.report.verification.unwrap();
        assert!(!v.all_passed);
        let failing: Vec<_> = v.containment.iter().filter(|c| !c.pass).collect();
        assert!(!failing.is_empty());
        assert!(failing
            .iter()
            .any(|c| c.witness == Some(vec![1, 1, -1])));
    }

    #[test]
    fn verification_passes_on_hypersurface() {
        let spec = spec(2, &[&[0, 1], &[2, 1]], "hyp22");
        let opts = VerifyOptions {
            r_max: 3,
            ..VerifyOptions::default()
        };
        let out = analyze(&spec, Some(&opts)).unwrap();
        assert!(!out.verification_failed);
        assert!(out.internal_breach.is_none());
        let v = out.report.verification.unwrap();
        assert!(v.all_passed);
        let sharp = v.sharpness.unwrap();
        assert!(sharp.pass);
        assert_eq!(sharp.bound, "2");
        assert_eq!(sharp.witness, vec![1, 0]);
        assert!(sharp.saturation_witness.is_some());
    }

    #[test]
    fn reports_are_deterministic() {
        let spec = spec(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]], "segre");
        let opts = VerifyOptions::default();
        let a = analyze(&spec, Some(&opts)).unwrap().report.to_json(false);
        let b = analyze(&spec, Some(&opts)).unwrap().report.to_json(false);
        assert_eq!(a, b);
        let parsed = AnalysisReport::parse(&a).unwrap();
        assert_eq!(parsed.to_json(false), a);
    }
}
