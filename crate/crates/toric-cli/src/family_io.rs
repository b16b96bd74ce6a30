//! Example-family emission: writes a cone spec file plus a predictions
//! sidecar, and diffs predictions against a fresh analysis on request.

use std::path::{Path, PathBuf};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use toric_core::family::{
    hypersurface_cone, segre_veronese_cone, veronese_cone, FamilySpec,
};
use toric_core::Cone;

use crate::analyze::analyze;
use crate::report::{int_string, vector_json, vectors_json, RationalJson};
use crate::spec_file::ConeSpecFile;
use crate::{CliError, CliResult};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PredictionsFile {
    pub kind: String,
    pub degrees: Vec<u32>,
    pub vars: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_size: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert_basis: Option<Vec<Vec<i128>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i128>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_invariant_factors: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_signature: Option<RationalJson>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyName {
    Veronese,
    Hypersurface,
    SegreVeronese,
}

impl FamilyName {
    pub fn parse(s: &str) -> CliResult<Self> {
        match s {
            "veronese" => Ok(FamilyName::Veronese),
            "hypersurface" => Ok(FamilyName::Hypersurface),
            "segre-veronese" => Ok(FamilyName::SegreVeronese),
            other => Err(CliError::Input(format!(
                "unknown family '{other}' (expected veronese, hypersurface, or segre-veronese)"
            ))),
        }
    }

    fn label(self) -> &'static str {
        match self {
            FamilyName::Veronese => "veronese",
            FamilyName::Hypersurface => "hypersurface",
            FamilyName::SegreVeronese => "segre-veronese",
        }
    }
}

pub fn build_family(
    kind: FamilyName,
    degrees: &[u32],
    vars: &[u32],
) -> CliResult<(Cone, FamilySpec)> {
    let built = match kind {
        FamilyName::Veronese => {
            let [e] = degrees else {
                return Err(CliError::Input("veronese takes a single --E value".into()));
            };
            let [n] = vars else {
                return Err(CliError::Input("veronese takes a single --n value".into()));
            };
            veronese_cone(*e, *n)
        }
        FamilyName::Hypersurface => {
            let [e] = degrees else {
                return Err(CliError::Input("hypersurface takes a single --E value".into()));
            };
            let [n] = vars else {
                return Err(CliError::Input("hypersurface takes a single --n value".into()));
            };
            hypersurface_cone(*n, *e)
        }
        FamilyName::SegreVeronese => segre_veronese_cone(degrees, vars),
    };
    Ok(built?)
}

pub fn cone_spec(kind: FamilyName, degrees: &[u32], vars: &[u32], cone: &Cone) -> CliResult<ConeSpecFile> {
    let name = format!(
        "{}-E{}-m{}",
        kind.label(),
        degrees
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(","),
        vars.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    );
    Ok(ConeSpecFile {
        rank: cone.ambient_rank(),
        generators: vectors_json(cone.generators())?,
        name: Some(name),
    })
}

pub fn predictions_file(
    kind: FamilyName,
    degrees: &[u32],
    vars: &[u32],
    spec: &FamilySpec,
) -> CliResult<PredictionsFile> {
    let p = &spec.predicted;
    Ok(PredictionsFile {
        kind: kind.label().into(),
        degrees: degrees.to_vec(),
        vars: vars.to_vec(),
        basis_size: p.basis_size.as_ref().map(int_string),
        hilbert_basis: p
            .hilbert_basis
            .as_ref()
            .map(|b| vectors_json(b))
            .transpose()?,
        d: p.d.as_ref().map(int_string),
        t: p.t.as_ref().map(int_string),
        grading: p.grading.as_ref().map(vector_json).transpose()?,
        class_invariant_factors: p
            .class_invariant_factors
            .as_ref()
            .map(|f| f.iter().map(int_string).collect()),
        class_order: p.class_order.as_ref().map(int_string),
        f_signature: p.f_signature.as_ref().map(RationalJson::from_rational),
    })
}

/// Sidecar path: `foo.json` → `foo.predictions.json`, otherwise append.
pub fn predictions_path(out: &Path) -> PathBuf {
    match out.extension().and_then(|e| e.to_str()) {
        Some("json") => out.with_extension("predictions.json"),
        _ => {
            let mut p = out.as_os_str().to_owned();
            p.push(".predictions.json");
            PathBuf::from(p)
        }
    }
}

/// Re-analyzes an emitted cone file and diffs it against the predictions.
/// Returns human-readable mismatch lines; empty means everything matched.
pub fn check_predictions(
    spec: &ConeSpecFile,
    predictions: &PredictionsFile,
) -> CliResult<Vec<String>> {
    let outcome = analyze(spec, None)?;
    if let Some(breach) = outcome.internal_breach {
        return Err(CliError::Internal(breach));
    }
    let report = outcome.report;
    let mut diffs = Vec::new();

    if let Some(size) = &predictions.basis_size {
        let got = report.hilbert_basis.size.to_string();
        if got != *size {
            diffs.push(format!("basis_size: predicted {size}, computed {got}"));
        }
    }
    if let Some(basis) = &predictions.hilbert_basis {
        if report.hilbert_basis.elements != *basis {
            diffs.push(format!(
                "hilbert_basis: predicted {:?}, computed {:?}",
                basis, report.hilbert_basis.elements
            ));
        }
    }
    if let Some(d) = &predictions.d {
        if report.multipliers.d != *d {
            diffs.push(format!("d: predicted {d}, computed {}", report.multipliers.d));
        }
    }
    if let Some(t) = &predictions.t {
        match &report.multipliers.t {
            Some(got) if got == t => {}
            got => diffs.push(format!("t: predicted {t}, computed {got:?}")),
        }
    }
    if let Some(grading) = &predictions.grading {
        if report.grading != *grading {
            diffs.push(format!(
                "grading: predicted {:?}, computed {:?}",
                grading, report.grading
            ));
        }
    }
    if let Some(factors) = &predictions.class_invariant_factors {
        if report.class_group.invariant_factors != *factors {
            diffs.push(format!(
                "class_invariant_factors: predicted {:?}, computed {:?}",
                factors, report.class_group.invariant_factors
            ));
        }
    }
    if let Some(order) = &predictions.class_order {
        match &report.class_group.order {
            Some(got) if got == order => {}
            got => diffs.push(format!("class_order: predicted {order}, computed {got:?}")),
        }
    }
    if let Some(fs) = &predictions.f_signature {
        if report.f_signature.value != *fs {
            diffs.push(format!(
                "f_signature: predicted {}/{}, computed {}/{}",
                fs.num, fs.den, report.f_signature.value.num, report.f_signature.value.den
            ));
        }
    }
    Ok(diffs)
}

pub fn to_json_string<T: Serialize>(value: &T, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(value).expect("serializes")
    } else {
        serde_json::to_string(value).expect("serializes")
    };
    s.push('\n');
    s
}

// u32::to_string through ToPrimitive is not needed; silence the otherwise
// unused import when the crate is built without tests.
#[allow(unused)]
fn _keep(_: &dyn Fn() -> Option<u32>) {
    let _ = 1u64.to_u32();
}
