//! The machine-readable analysis report. Every number is exact: integers
//! that could outgrow 64 bits travel as decimal strings, rationals as
//! `{"num": .., "den": ..}` string pairs, and there is no float anywhere
//! in the schema. Serialization is deterministic (fixed field order,
//! presorted lists), so equal analyses produce byte-identical files.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use toric_core::LatticeVector;

use crate::{CliError, CliResult};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl RationalJson {
    pub fn from_rational(r: &BigRational) -> Self {
        RationalJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

pub fn int_string(b: &BigInt) -> String {
    b.to_string()
}

pub fn vector_json(v: &LatticeVector) -> CliResult<Vec<i128>> {
    v.coords()
        .iter()
        .map(|c| {
            c.to_i128()
                .ok_or_else(|| CliError::Internal(format!("coordinate {c} exceeds i128")))
        })
        .collect()
}

pub fn vectors_json(vs: &[LatticeVector]) -> CliResult<Vec<Vec<i128>>> {
    vs.iter().map(vector_json).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassificationJson {
    pub pointed: bool,
    pub full: bool,
    pub simplicial: bool,
    pub smooth: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HilbertJson {
    pub size: usize,
    pub elements: Vec<Vec<i128>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FacesJson {
    pub total: usize,
    /// Face counts indexed by dimension 0..=rank.
    pub by_dim: Vec<usize>,
    /// Ray-index signature of every face, sorted by (dimension, signature).
    pub faces: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FaceDprimeJson {
    pub face_rays: Vec<usize>,
    pub dprime: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MultipliersJson {
    pub d: String,
    pub per_face_dprime: Vec<FaceDprimeJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    pub b_sharp: String,
    /// Records that two height-one multipliers are computed and not
    /// reconciled: T maximizes D against an annihilator of the class group,
    /// U takes the lcm of D and the class group order.
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassGroupJson {
    pub free_rank: usize,
    pub invariant_factors: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    pub ray_orders: Vec<Option<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FSignatureJson {
    pub value: RationalJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplicial_check: Option<RationalJson>,
    pub polytope_vertices: Vec<Vec<RationalJson>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ContainmentJson {
    pub face_rays: Vec<usize>,
    pub r: u32,
    /// "global" (D), "face" (D′), or "override".
    pub scope: String,
    pub multiplier: String,
    pub exponent: u32,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i128>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SharpnessJson {
    pub ray_index: usize,
    pub witness: Vec<i128>,
    pub bound: String,
    pub symbolic_member: bool,
    pub in_square: bool,
    /// Shift confirming the symbolic membership through the saturation
    /// search, when the search found one within its degree budget.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturation_witness: Option<Vec<i128>>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OracleChecksJson {
    pub seed: u64,
    pub samples: usize,
    /// Saturation search found a witness the fast oracle rejected: always a
    /// defect, reported through exit code 3.
    pub disagreements: usize,
    /// Fast oracle accepted but the search exhausted its budget first;
    /// inconclusive, not counted as failure.
    pub inconclusive: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerificationJson {
    pub r_max: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplier_override: Option<u64>,
    pub search_degree: u64,
    pub containment: Vec<ContainmentJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharpness: Option<SharpnessJson>,
    pub oracle_spot_checks: OracleChecksJson,
    pub all_passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AnalysisReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Rank of the lattice the input lived in.
    pub input_rank: usize,
    /// Free lattice directions split off when the input cone was not full.
    pub laurent_rank: usize,
    /// Rank of the analyzed (full) cone.
    pub rank: usize,
    /// Rows of the matrix embedding the analyzed lattice back into the
    /// input lattice; present only when a reduction happened.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding_rows: Option<Vec<Vec<i128>>>,
    pub classification: ClassificationJson,
    pub generators: Vec<Vec<i128>>,
    pub rays: Vec<Vec<i128>>,
    pub dual_rays: Vec<Vec<i128>>,
    pub grading: Vec<i128>,
    pub hilbert_basis: HilbertJson,
    pub faces: FacesJson,
    pub multipliers: MultipliersJson,
    pub class_group: ClassGroupJson,
    pub f_signature: FSignatureJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationJson>,
}

impl AnalysisReport {
    pub fn to_json(&self, pretty: bool) -> String {
        let mut s = if pretty {
            serde_json::to_string_pretty(self).expect("report serializes")
        } else {
            serde_json::to_string(self).expect("report serializes")
        };
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed report: {e}")))
    }
}
