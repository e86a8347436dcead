//! Certificates on disk. A certificate embeds the problem it answers, so it
//! can be re-verified without the original input file.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::equivariance::{EquivarianceCertificate, Status};
use crate::error::{Error, Result};
use crate::rep::{Check, CheckReport};

use super::problem::{matrix_from_value, matrix_to_value, EntryValue, MatrixValue, Problem, ProblemFile, RatValue};

pub const CERTIFICATE_FORMAT: &str = "galois-equiv-certificate/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckValue {
    pub check: String,
    pub holds: bool,
}

impl From<&Check> for CheckValue {
    fn from(c: &Check) -> Self {
        CheckValue { check: c.label.clone(), holds: c.holds }
    }
}

pub fn checks_to_value(r: &CheckReport) -> Vec<CheckValue> {
    r.checks.iter().map(CheckValue::from).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub format: String,
    pub problem: ProblemFile,
    pub status: String,
    #[serde(rename = "X")]
    pub x: MatrixValue,
    pub lambda_rep: RatValue,
    pub lambda_canonical: Option<RatValue>,
    pub is_trivial: bool,
    pub symbol: Option<(RatValue, RatValue)>,
    pub witness: Option<EntryValue>,
    #[serde(rename = "X_rescaled")]
    pub x_rescaled: Option<MatrixValue>,
    #[serde(rename = "Y")]
    pub y: Option<MatrixValue>,
    pub rho_prime: Option<BTreeMap<String, MatrixValue>>,
    pub attempts: Option<usize>,
    #[serde(default)]
    pub checks: Vec<CheckValue>,
}

impl CertificateFile {
    pub fn new(problem: ProblemFile, cert: &EquivarianceCertificate, checks: &CheckReport) -> Self {
        CertificateFile {
            format: CERTIFICATE_FORMAT.to_string(),
            problem,
            status: cert.status.as_str().to_string(),
            x: matrix_to_value(&cert.x),
            lambda_rep: RatValue(cert.lambda_rep.clone()),
            lambda_canonical: cert.lambda_canonical.clone().map(RatValue),
            is_trivial: cert.is_trivial,
            symbol: cert.symbol.clone().map(|(a, b)| (RatValue(a), RatValue(b))),
            witness: cert.witness.as_ref().map(EntryValue::from_element),
            x_rescaled: cert.x_rescaled.as_ref().map(matrix_to_value),
            y: cert.y.as_ref().map(matrix_to_value),
            rho_prime: cert.rho_prime.as_ref().map(|rp| {
                rp.group()
                    .gen_names()
                    .iter()
                    .zip(rp.images())
                    .map(|(g, m)| (g.clone(), matrix_to_value(m)))
                    .collect()
            }),
            attempts: cert.attempts,
            checks: checks_to_value(checks),
        }
    }

    /// Rebuilds the in-memory certificate against the embedded problem.
    pub fn to_certificate(&self, problem: &Problem) -> Result<EquivarianceCertificate> {
        if self.format != CERTIFICATE_FORMAT {
            return Err(Error::input("format", format!("unknown certificate format `{}`", self.format)));
        }
        let ext = &problem.ext;
        let status = match self.status.as_str() {
            "constructed" => Status::Constructed,
            "obstructed" => Status::Obstructed,
            "decided-unconstructed" => Status::DecidedUnconstructed,
            other => return Err(Error::input("status", format!("unknown status `{other}`"))),
        };
        let mat = |m: &MatrixValue, path: &str| matrix_from_value(ext, m, path);
        let rho_prime = match &self.rho_prime {
            None => None,
            Some(map) => {
                let mut images = Vec::new();
                for g in problem.group.gen_names() {
                    let m = map
                        .get(g)
                        .ok_or_else(|| Error::input("rho_prime", format!("no matrix for `{g}`")))?;
                    images.push(mat(m, &format!("rho_prime.{g}"))?);
                }
                Some(problem.rep.with_images(images)?)
            }
        };
        Ok(EquivarianceCertificate {
            status,
            x: mat(&self.x, "X")?,
            lambda_rep: self.lambda_rep.0.clone(),
            lambda_canonical: self.lambda_canonical.as_ref().map(|q| q.0.clone()),
            is_trivial: self.is_trivial,
            symbol: self.symbol.as_ref().map(|(a, b)| (a.0.clone(), b.0.clone())),
            witness: match &self.witness {
                Some(w) => Some(ext.element(w.0.clone()).map_err(|e| Error::input("witness", e.to_string()))?),
                None => None,
            },
            x_rescaled: self.x_rescaled.as_ref().map(|m| mat(m, "X_rescaled")).transpose()?,
            y: self.y.as_ref().map(|m| mat(m, "Y")).transpose()?,
            rho_prime,
            attempts: self.attempts,
        })
    }
}
