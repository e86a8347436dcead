//! The subcommands, as functions from file contents to a JSON report and an
//! exit code.

use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::equivariance::{equivariant_form, lambda_invariant, verify_certificate, Status};
use crate::error::Error;
use crate::field::{factor, format_rational, local_symbols, rat, Rat, DEFAULT_FACTOR_BOUND};
use crate::induced::{endomorphism_dim, schur_index, CrossedProduct, InducedRep};
use crate::rep::{check_automorphism, CheckReport, Verification};

use super::certificate_file::{checks_to_value, CertificateFile};
use super::problem::{from_json, matrix_from_value, matrix_to_value, CoeffList, MatrixValue, Problem, ProblemFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_OBSTRUCTED: i32 = 3;
pub const EXIT_UNCONSTRUCTED: i32 = 4;

/// Samples of `lambda` in `L` used to check the crossed-product relations.
pub const CROSSED_PRODUCT_SAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Lambda,
    Equivariant,
    Induce,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Lambda => "lambda",
            Command::Equivariant => "equivariant",
            Command::Induce => "induce",
            Command::Verify => "verify",
        }
    }
}

/// Command-line values that override the problem file's options.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub budget: Option<usize>,
    pub witness: Option<String>,
    pub replay_y: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

impl Outcome {
    fn new(code: i32, report: Value) -> Self {
        Outcome { code, report }
    }

    fn error(command: Command, code: i32, message: impl Into<String>) -> Self {
        Outcome::new(code, json!({ "command": command.name(), "error": message.into() }))
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Input { .. } | Error::UnknownGenerator(_) => EXIT_PARSE,
        _ => EXIT_INVALID,
    }
}

/// Runs `command` on the file at `path`.
pub fn run(command: Command, path: &Path, ov: &Overrides) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::error(command, EXIT_PARSE, format!("{}: {e}", path.display())),
    };
    let replay = match &ov.replay_y {
        None => None,
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => Some(t),
            Err(e) => return Outcome::error(command, EXIT_PARSE, format!("{}: {e}", p.display())),
        },
    };
    run_text(command, &text, ov, replay.as_deref())
}

/// Runs `command` on file contents already in memory.
pub fn run_text(command: Command, text: &str, ov: &Overrides, replay_y: Option<&str>) -> Outcome {
    if command == Command::Verify {
        return cmd_verify(text);
    }
    let mut file = match ProblemFile::parse(text) {
        Ok(f) => f,
        Err(e) => return Outcome::error(command, EXIT_PARSE, e.to_string()),
    };
    if let Some(s) = ov.seed {
        file.options.seed = Some(s);
    }
    if let Some(b) = ov.budget {
        file.options.budget = Some(b);
    }
    if let Some(w) = &ov.witness {
        match CoeffList::parse(w) {
            Some(c) => file.options.witness = Some(c),
            None => return Outcome::error(command, EXIT_PARSE, format!("--witness: `{w}` is not a list \"a/b,c/d\"")),
        }
    }
    let problem = match file.build() {
        Ok(p) => p,
        Err(e) => return Outcome::error(command, error_code(&e), e.to_string()),
    };
    match command {
        Command::Validate => cmd_validate(&problem),
        Command::Lambda => cmd_lambda(&problem),
        Command::Equivariant => cmd_equivariant(&problem, file, replay_y),
        Command::Induce => cmd_induce(&problem),
        Command::Verify => unreachable!(),
    }
}

fn checks_json(r: &CheckReport) -> Value {
    serde_json::to_value(checks_to_value(r)).expect("plain data")
}

fn verification_json(v: &Verification) -> Value {
    match v {
        Verification::Checked(r) => checks_json(r),
        Verification::Unverifiable => Value::String("unverifiable".into()),
    }
}

fn rat_json(q: &Rat) -> Value {
    Value::String(format_rational(q))
}

pub fn cmd_validate(p: &Problem) -> Outcome {
    let rel = p.rep.check_relations();
    let auto = check_automorphism(&p.group, Some(&p.rep));
    let n2 = p.rep.dim() * p.rep.dim();
    let (burnside, irreducible) = match p.rep.burnside_dim(p.options.burnside_cap) {
        Ok(b) => {
            let irr = b.dim == n2;
            (json!({ "dim": b.dim, "target": n2, "per_length": b.per_length, "absolutely_irreducible": irr }), irr)
        }
        Err(e) => (json!({ "error": e.to_string(), "target": n2 }), false),
    };
    let ok = rel.all_hold() && auto.passed() == Some(true) && irreducible;
    let report = json!({
        "command": "validate",
        "ok": ok,
        "field": { "degree": p.ext.degree(), "disc_core": p.ext.disc_core().map(|d| d.to_string()) },
        "relations": checks_json(&rel),
        "automorphism": {
            "order": auto.order,
            "order_ok": auto.order_ok,
            "relation_images": verification_json(&auto.relation_images),
            "tau_power": verification_json(&auto.tau_power),
        },
        "burnside": burnside,
    });
    Outcome::new(if ok { EXIT_OK } else { EXIT_INVALID }, report)
}

/// Primes of the canonical `lambda` against a declared group order.
fn group_order_note(lambda: &Rat, order: Option<u64>) -> Value {
    let Some(order) = order else { return Value::Null };
    let primes: Vec<String> = factor(lambda.numer(), DEFAULT_FACTOR_BOUND)
        .map(|f| f.factors.iter().map(|(p, _)| p.to_string()).collect())
        .unwrap_or_default();
    let divide = primes.iter().all(|p| p.parse::<u64>().is_ok_and(|p| order % p == 0));
    json!({ "group_order": order, "lambda_primes": primes, "primes_divide_order": divide })
}

pub fn cmd_lambda(p: &Problem) -> Outcome {
    let inv = match lambda_invariant(&p.rep, p.options.witness.as_ref()) {
        Ok(i) => i,
        Err(e) => return Outcome::error(Command::Lambda, EXIT_INVALID, e.to_string()),
    };
    let symbols = if p.ext.degree() == 2 {
        match local_symbols(&inv.lambda_rep, &p.ext) {
            Ok(s) => Value::Array(
                s.iter().map(|(pl, v)| json!({ "place": pl.to_string(), "symbol": v })).collect(),
            ),
            Err(e) => return Outcome::error(Command::Lambda, EXIT_INVALID, e.to_string()),
        }
    } else {
        Value::Null
    };
    let note = inv.lambda_canonical.as_ref().map_or(Value::Null, |c| group_order_note(c, p.options.group_order));
    let report = json!({
        "command": "lambda",
        "lambda_rep": rat_json(&inv.lambda_rep),
        "lambda_canonical": inv.lambda_canonical.as_ref().map(rat_json),
        "is_trivial": inv.is_trivial,
        "X": matrix_to_value(&inv.x),
        "local_symbols": symbols,
        "note": note,
    });
    Outcome::new(EXIT_OK, report)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ReplayFile {
    Wrapped {
        #[serde(rename = "Y")]
        y: MatrixValue,
    },
    Bare(MatrixValue),
}

pub fn cmd_equivariant(p: &Problem, mut file: ProblemFile, replay_y: Option<&str>) -> Outcome {
    let cmd = Command::Equivariant;
    let mut opts = p.options.equivariance();
    if let Some(text) = replay_y {
        let parsed: ReplayFile = match from_json(text) {
            Ok(r) => r,
            Err(e) => return Outcome::error(cmd, EXIT_PARSE, format!("replayed Y: {e}")),
        };
        let m = match parsed {
            ReplayFile::Wrapped { y } | ReplayFile::Bare(y) => y,
        };
        match matrix_from_value(&p.ext, &m, "Y") {
            Ok(y) => opts.replay_y = Some(y),
            Err(e) => return Outcome::error(cmd, EXIT_PARSE, format!("replayed Y: {e}")),
        }
    }
    file.options.seed = Some(opts.seed);
    file.options.budget = Some(opts.budget);
    let cert = match equivariant_form(&p.rep, &opts) {
        Ok(c) => c,
        Err(e) => return Outcome::error(cmd, EXIT_INVALID, e.to_string()),
    };
    let checks = verify_certificate(&cert, &p.rep);
    let code = match cert.status {
        Status::Constructed => EXIT_OK,
        Status::Obstructed => EXIT_OBSTRUCTED,
        Status::DecidedUnconstructed => EXIT_UNCONSTRUCTED,
    };
    let mut report = serde_json::to_value(CertificateFile::new(file, &cert, &checks)).expect("plain data");
    if cert.status == Status::Obstructed {
        report["message"] = Value::String("obstruction: lambda nontrivial".into());
    }
    Outcome::new(code, report)
}

pub fn cmd_induce(p: &Problem) -> Outcome {
    let cmd = Command::Induce;
    let r = p.ext.degree();
    let induced = InducedRep::build(&p.rep);
    let relations = match induced.check_relations() {
        Ok(r) => r,
        Err(e) => return Outcome::error(cmd, EXIT_INVALID, e.to_string()),
    };
    let result = (|| -> crate::Result<Value> {
        let endo = endomorphism_dim(&p.rep)?;
        let inv = lambda_invariant(&p.rep, p.options.witness.as_ref())?;
        let cp = CrossedProduct::build(&induced, &inv.x)?;
        let mut rng = Pcg64::seed_from_u64(p.options.seed);
        let samples: Vec<_> = (0..CROSSED_PRODUCT_SAMPLES)
            .map(|_| {
                let c = (0..r).map(|_| rat(rng.random_range(-9..=9))).collect();
                p.ext.element(c).expect("degree-many coordinates")
            })
            .collect();
        let cp_checks = cp.check_relations(&samples)?;
        let schur = schur_index(&p.rep, p.options.witness.as_ref())?;
        let chars = induced.character_samples(p.options.seed, 12, 8)?;
        let ok = relations.all_hold() && endo == r * r && cp_checks.all_hold() && chars.checks.all_hold();
        Ok(json!({
            "command": "induce",
            "ok": ok,
            "endo_dim": endo,
            "expected_endo_dim": r * r,
            "relations_ok": relations.all_hold(),
            "relations": checks_json(&relations),
            "crossed_product_ok": cp_checks.all_hold(),
            "lambda_rep": rat_json(&cp.lambda_rep),
            "schur_index": schur.index,
            "symbol": schur.division_algebra.as_ref().map(|(a, b)| vec![rat_json(a), rat_json(b)]),
            "ramified": schur.ramified.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "character_ok": chars.checks.all_hold(),
            "character_values": chars.values.iter().map(rat_json).collect::<Vec<_>>(),
        }))
    })();
    match result {
        Ok(report) => {
            let code = if report["ok"] == Value::Bool(true) { EXIT_OK } else { EXIT_INVALID };
            Outcome::new(code, report)
        }
        Err(e) => Outcome::error(cmd, EXIT_INVALID, e.to_string()),
    }
}

pub fn cmd_verify(text: &str) -> Outcome {
    let cmd = Command::Verify;
    let file: CertificateFile = match from_json(text) {
        Ok(f) => f,
        Err(e) => return Outcome::error(cmd, EXIT_PARSE, e.to_string()),
    };
    let problem = match file.problem.build() {
        Ok(p) => p,
        Err(e) => return Outcome::error(cmd, error_code(&e), format!("embedded problem: {e}")),
    };
    let cert = match file.to_certificate(&problem) {
        Ok(c) => c,
        Err(e) => return Outcome::error(cmd, error_code(&e), e.to_string()),
    };
    let report = verify_certificate(&cert, &problem.rep);
    let ok = report.all_hold();
    Outcome::new(
        if ok { EXIT_OK } else { EXIT_INVALID },
        json!({ "command": "verify", "ok": ok, "status": file.status, "checks": checks_json(&report) }),
    )
}
