//! The JSON problem file: field, group, representation and options.
//!
//! Rationals are written as integers or strings such as `"3/40"`. A field
//! element is either a rational or an array of coordinates in the basis
//! `1, t, ..., t^(r-1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::equivariance::{EquivarianceOptions, DEFAULT_H90_BUDGET, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::field::{format_rational, parse_rational, CyclicExtension, FieldElement, Rat, DEFAULT_WITNESS_BUDGET};
use crate::linalg::Mat;
use crate::rep::{GroupData, Representation, Word, DEFAULT_BURNSIDE_CAP};

/// A rational read from an integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatValue(pub Rat);

impl<'de> Deserialize<'de> for RatValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

struct RatVisitor;

impl Visitor<'_> for RatVisitor {
    type Value = RatValue;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a rational string like \"3/40\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RatValue, E> {
        Ok(RatValue(Rat::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RatValue, E> {
        Ok(RatValue(Rat::from_integer(v.into())))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<RatValue, E> {
        Err(E::custom(format!("decimal {v} is not exact; write it as a string \"p/q\"")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RatValue, E> {
        parse_rational(v)
            .map(RatValue)
            .ok_or_else(|| E::custom(format!("`{v}` is not a rational of the form \"p/q\"")))
    }
}

impl Serialize for RatValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

/// A field element: a rational, or an array of coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryValue(pub Vec<Rat>);

impl<'de> Deserialize<'de> for EntryValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(EntryVisitor)
    }
}

struct EntryVisitor;

impl<'de> Visitor<'de> for EntryVisitor {
    type Value = EntryValue;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational or an array of rational coordinates")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<EntryValue, E> {
        RatVisitor.visit_i64(v).map(|q| EntryValue(vec![q.0]))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<EntryValue, E> {
        RatVisitor.visit_u64(v).map(|q| EntryValue(vec![q.0]))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<EntryValue, E> {
        RatVisitor.visit_f64(v).map(|q| EntryValue(vec![q.0]))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<EntryValue, E> {
        RatVisitor.visit_str(v).map(|q| EntryValue(vec![q.0]))
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<EntryValue, A::Error> {
        let mut out = Vec::new();
        while let Some(RatValue(q)) = seq.next_element()? {
            out.push(q);
        }
        Ok(EntryValue(out))
    }
}

impl EntryValue {
    pub fn from_element(x: &FieldElement) -> Self {
        let mut c = x.coeffs().to_vec();
        while c.len() > 1 && c.last().is_some_and(num_traits::Zero::is_zero) {
            c.pop();
        }
        EntryValue(c)
    }
}

impl Serialize for EntryValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.len() == 1 {
            s.serialize_str(&format_rational(&self.0[0]))
        } else {
            let strs: Vec<String> = self.0.iter().map(format_rational).collect();
            strs.serialize(s)
        }
    }
}

pub type MatrixValue = Vec<Vec<EntryValue>>;

/// A witness: `"a/b,c/d"` or an array of coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffList(pub Vec<Rat>);

impl CoeffList {
    pub fn parse(s: &str) -> Option<CoeffList> {
        s.split(',').map(parse_rational).collect::<Option<Vec<_>>>().map(CoeffList)
    }
}

impl<'de> Deserialize<'de> for CoeffList {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = CoeffList;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a string \"a/b,c/d\" or an array of rationals")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<CoeffList, E> {
                CoeffList::parse(v).ok_or_else(|| E::custom(format!("`{v}` is not a list \"a/b,c/d\"")))
            }
            fn visit_seq<A: SeqAccess<'de>>(self, seq: A) -> std::result::Result<CoeffList, A::Error> {
                EntryVisitor.visit_seq(seq).map(|e| CoeffList(e.0))
            }
        }
        d.deserialize_any(V)
    }
}

impl Serialize for CoeffList {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EntryValue(self.0.clone()).serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub min_poly: Vec<RatValue>,
    pub sigma_image: Vec<RatValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub generators: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    pub tau: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_budget: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub burnside_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<CoeffList>,
    /// Order of `G = H x| <tau>`; used only for an informational note.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_order: Option<u64>,
}

/// The file as written, before any mathematical validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub field: FieldSpec,
    pub group: GroupSpec,
    pub representation: BTreeMap<String, MatrixValue>,
    #[serde(default)]
    pub options: OptionsSpec,
}

/// A JSON syntax or schema error with its position in the file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub path: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)?;
        if !self.path.is_empty() && self.path != "." {
            write!(f, " (at {})", self.path)?;
        }
        write!(f, ": {}", self.message)
    }
}

/// Deserializes `T` from JSON text, reporting the failing path and position.
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> std::result::Result<T, ParseError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let res: std::result::Result<T, _> = serde_path_to_error::deserialize(&mut de);
    match res {
        Ok(v) => {
            de.end().map_err(|e| ParseError {
                path: String::new(),
                line: e.line(),
                column: e.column(),
                message: strip_position(&e.to_string()),
            })?;
            Ok(v)
        }
        Err(err) => {
            let path = err.path().to_string();
            let inner = err.into_inner();
            let message = strip_position(&inner.to_string());
            Err(ParseError { path, line: inner.line(), column: inner.column(), message })
        }
    }
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> std::result::Result<ProblemFile, ParseError> {
        from_json(text)
    }

    /// Builds the mathematical objects. Schema-level inconsistencies come
    /// back as [`Error::Input`]; mathematical failures keep their own kind.
    pub fn build(&self) -> Result<Problem> {
        let rats = |v: &[RatValue]| v.iter().map(|q| q.0.clone()).collect::<Vec<_>>();
        let ext = Arc::new(
            CyclicExtension::new(rats(&self.field.min_poly), rats(&self.field.sigma_image))?,
        );
        let names = &self.group.generators;
        if names.is_empty() {
            return Err(Error::input("group.generators", "at least one generator is required"));
        }
        let relations = self
            .group
            .relations
            .iter()
            .enumerate()
            .map(|(i, r)| {
                Word::parse(r, names).map_err(|e| Error::input(format!("group.relations[{i}]"), e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        for key in self.group.tau.keys() {
            if !names.contains(key) {
                return Err(Error::input(format!("group.tau.{key}"), "not a generator"));
            }
        }
        let tau = names
            .iter()
            .map(|g| {
                let w = self
                    .group
                    .tau
                    .get(g)
                    .ok_or_else(|| Error::input("group.tau", format!("no image for generator `{g}`")))?;
                Word::parse(w, names).map_err(|e| Error::input(format!("group.tau.{g}"), e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let group = Arc::new(
            GroupData::new(names.clone(), relations, tau, ext.degree())
                .map_err(|e| Error::input("group", e.to_string()))?,
        );
        for key in self.representation.keys() {
            if !names.contains(key) {
                return Err(Error::input(format!("representation.{key}"), "not a generator"));
            }
        }
        let mut images = Vec::new();
        for g in names {
            let m = self
                .representation
                .get(g)
                .ok_or_else(|| Error::input("representation", format!("no matrix for generator `{g}`")))?;
            images.push(matrix_from_value(&ext, m, &format!("representation.{g}"))?);
        }
        let n = images[0].rows();
        for (g, m) in names.iter().zip(&images) {
            if m.rows() != n || m.cols() != n {
                return Err(Error::input(
                    format!("representation.{g}"),
                    format!("expected a {n}x{n} matrix, found {}x{}", m.rows(), m.cols()),
                ));
            }
        }
        let rep = Representation::new(group.clone(), ext.clone(), images)?;
        let witness = match &self.options.witness {
            Some(c) => Some(
                ext.element(c.0.clone())
                    .map_err(|e| Error::input("options.witness", e.to_string()))?,
            ),
            None => None,
        };
        let options = Options {
            seed: self.options.seed.unwrap_or(DEFAULT_SEED),
            budget: self.options.budget.unwrap_or(DEFAULT_H90_BUDGET),
            witness_budget: self.options.witness_budget.unwrap_or(DEFAULT_WITNESS_BUDGET),
            burnside_cap: self.options.burnside_cap.unwrap_or(DEFAULT_BURNSIDE_CAP),
            witness,
            group_order: self.options.group_order,
        };
        Ok(Problem { ext, group, rep, options })
    }
}

/// Reads a matrix of field elements, reporting bad shapes by path.
pub fn matrix_from_value(ext: &Arc<CyclicExtension>, m: &MatrixValue, path: &str) -> Result<Mat> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if rows == 0 || cols == 0 {
        return Err(Error::input(path, "matrix is empty"));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in m.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::input(format!("{path}[{i}]"), format!("row has {} entries, expected {cols}", row.len())));
        }
        for (j, e) in row.iter().enumerate() {
            let x = ext
                .element(e.0.clone())
                .map_err(|err| Error::input(format!("{path}[{i}][{j}]"), err.to_string()))?;
            entries.push(x);
        }
    }
    Mat::new(ext, rows, cols, entries)
}

pub fn matrix_to_value(m: &Mat) -> MatrixValue {
    (0..m.rows()).map(|i| m.row(i).iter().map(EntryValue::from_element).collect()).collect()
}

#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    pub budget: usize,
    pub witness_budget: u64,
    pub burnside_cap: usize,
    pub witness: Option<FieldElement>,
    pub group_order: Option<u64>,
}

impl Options {
    pub fn equivariance(&self) -> EquivarianceOptions {
        EquivarianceOptions {
            seed: self.seed,
            budget: self.budget,
            witness_budget: self.witness_budget,
            witness: self.witness.clone(),
            replay_y: None,
        }
    }
}

/// A validated problem.
#[derive(Clone, Debug)]
pub struct Problem {
    pub ext: Arc<CyclicExtension>,
    pub group: Arc<GroupData>,
    pub rep: Representation,
    pub options: Options,
}
