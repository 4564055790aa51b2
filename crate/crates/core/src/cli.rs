//! The `ihf` command line.
//!
//! Inputs are either a path to an `ihf/1` document or `preset:SPEC`, where
//! `SPEC` is anything [`preset`] accepts (`sigma_2_3_7^3`, `a#b`, ...).

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::complex::homology;
use crate::document::{ComplexDocument, LocalRecord, ResultDocument};
use crate::error::Error;
use crate::involutive::{correction_terms_cone, correction_terms_direct};
use crate::iota::{dual, power, tensor_all, IotaComplex};
use crate::local::local_equivalence;
use crate::presets::{describe, preset, PRESET_NAMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "ihf", version, about = "Involutive Heegaard Floer invariants of iota-complexes")]
pub struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the complex and iota axioms.
    Validate { input: String },
    /// Homology of the underlying complex and d.
    Homology { input: String },
    /// Homology of the involutive mapping cone with its Q-action.
    Hfi { input: String },
    /// Correction terms (d, d_lower, d_upper).
    Dinv {
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Report the product of all inputs instead of each one.
        #[arg(long)]
        sum: bool,
        /// Use each input this many times.
        #[arg(long, default_value_t = 1)]
        copies: usize,
        /// Include the element witnesses of the direct computation.
        #[arg(long)]
        witnesses: bool,
    },
    /// Tensor product of the inputs.
    Tensor {
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(long, default_value_t = 1)]
        copies: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The dual complex.
    Dual {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for local maps in both directions.
    Localequiv { a: String, b: String },
    /// The preset library.
    Preset {
        #[command(subcommand)]
        action: PresetAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum PresetAction {
    List,
    Show { name: String },
}

/// A failure with the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => EXIT_PARSE,
            Error::UnknownPreset(_) | Error::Argument(_) => EXIT_USAGE,
            Error::NotHomogeneous { .. }
            | Error::UnknownGenerator(_)
            | Error::DuplicateGenerator(_)
            | Error::InvalidComplex(_)
            | Error::InvalidIota(_)
            | Error::TowerCount(_)
            | Error::Structure(_) => EXIT_INVALID,
            Error::IndexMismatch(_) | Error::Internal(_) => EXIT_INTERNAL,
        };
        Failure { code, message: e.to_string() }
    }
}

fn io_failure(what: &str, e: std::io::Error) -> Failure {
    Failure { code: EXIT_IO, message: format!("{what}: {e}") }
}

type Outcome = std::result::Result<String, Failure>;

/// Loads without validating, so `validate` can report every problem.
fn load_raw(input: &str) -> std::result::Result<(IotaComplex, String), Failure> {
    if let Some(spec) = input.strip_prefix("preset:") {
        return Ok((preset(spec)?, spec.to_string()));
    }
    let text = std::fs::read_to_string(input).map_err(|e| io_failure(input, e))?;
    let doc = ComplexDocument::parse(&text).map_err(|e| Failure { code: EXIT_PARSE, message: format!("{input}: {e}") })?;
    let label = doc.label.clone().unwrap_or_else(|| input.to_string());
    let x = doc.build().map_err(|e| Failure::from(e).prefixed(input))?;
    Ok((x, label))
}

fn load(input: &str) -> std::result::Result<(IotaComplex, String), Failure> {
    let (x, label) = load_raw(input)?;
    x.check().map_err(|e| Failure::from(e).prefixed(input))?;
    Ok((x, label))
}

impl Failure {
    fn prefixed(mut self, what: &str) -> Self {
        self.message = format!("{what}: {}", self.message);
        self
    }
}

fn repeated(inputs: &[String], copies: usize) -> std::result::Result<Vec<(IotaComplex, String)>, Failure> {
    if copies == 0 {
        return Err(Failure { code: EXIT_USAGE, message: "--copies must be at least 1".into() });
    }
    inputs
        .iter()
        .map(|i| {
            let (x, label) = load(i)?;
            if copies == 1 {
                Ok((x, label))
            } else {
                Ok((power(&x, copies)?, format!("{label} x{copies}")))
            }
        })
        .collect()
}

fn write_document(doc: &ComplexDocument, out: Option<&PathBuf>) -> Outcome {
    let text = doc.to_json();
    match out {
        Some(path) => {
            std::fs::write(path, format!("{text}\n")).map_err(|e| io_failure(&path.display().to_string(), e))?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(format!("{text}\n")),
    }
}

fn validate(input: &str, json: bool) -> Outcome {
    let (x, label) = load_raw(input)?;
    let report = x.validate();
    if json {
        let value = serde_json::json!({
            "format": crate::document::FORMAT,
            "label": label,
            "valid": report.is_ok(),
            "problems": report.problems,
            "square_homotopy": report.square_homotopy.as_ref().map(crate::complex::named_entries),
        });
        let text = serde_json::to_string_pretty(&value).expect("serializable");
        return if report.is_ok() { Ok(format!("{text}\n")) } else { Err(Failure { code: EXIT_INVALID, message: text }) };
    }
    if !report.is_ok() {
        let mut msg = format!("{label}: invalid");
        for p in &report.problems {
            let _ = write!(msg, "\n  {p}");
        }
        return Err(Failure { code: EXIT_INVALID, message: msg });
    }
    let h = report.square_homotopy.expect("valid report carries a witness");
    let mut out = format!("{label}: ok ({} generators)\n", x.len());
    if h.is_zero() {
        out.push_str("iota^2 = id exactly (homotopy H = 0)\n");
    } else {
        let _ = writeln!(out, "iota^2 + id = dH + Hd with H:\n{}", h.display_entries());
    }
    Ok(out)
}

fn homology_cmd(input: &str, json: bool) -> Outcome {
    let (x, label) = load(input)?;
    let h = homology(x.complex())?;
    if json {
        return Ok(format!("{}\n", ResultDocument::new(Some(&label)).with_homology(&h).to_json()));
    }
    let mut out = format!("{label}\nHF- = {h}\n");
    for s in h.summands() {
        let _ = writeln!(out, "  {s}: [{}]", s.representative.display(h.basis()));
    }
    let _ = writeln!(out, "d = {}", x.d()?);
    Ok(out)
}

fn hfi_cmd(input: &str, json: bool) -> Outcome {
    let (x, label) = load(input)?;
    let s = correction_terms_cone(&x)?;
    if json {
        return Ok(format!("{}\n", ResultDocument::new(Some(&label)).with_terms(&s, None).with_hfi(&s).to_json()));
    }
    let mut out = format!("{label}\nHFI- = {}\n", s.hfi);
    for sm in s.hfi.summands() {
        let _ = writeln!(out, "  {sm}: [{}]", sm.representative.display(s.hfi.basis()));
    }
    let _ = writeln!(out, "Q-action:\n{}", indent(&s.q_action.display(&s.hfi, &s.hfi)));
    let _ = writeln!(out, "d = {}, d_lower = {}, d_upper = {}", s.d, s.d_lower, s.d_upper);
    Ok(out)
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n")
}

fn dinv_cmd(inputs: &[String], sum: bool, copies: usize, witnesses: bool, json: bool) -> Outcome {
    let items = repeated(inputs, copies)?;
    let items = if sum {
        let label = items.iter().map(|(_, l)| l.as_str()).collect::<Vec<_>>().join(" # ");
        let xs: Vec<IotaComplex> = items.into_iter().map(|(x, _)| x).collect();
        vec![(tensor_all(&xs)?, label)]
    } else {
        items
    };
    let mut docs = Vec::new();
    for (x, label) in &items {
        let s = correction_terms_cone(x)?;
        let direct = correction_terms_direct(x)?;
        if (direct.d_lower, direct.d_upper) != (s.d_lower, s.d_upper) {
            return Err(Failure {
                code: EXIT_INTERNAL,
                message: format!(
                    "{label}: cone gives ({}, {}) but the direct search gives ({}, {})",
                    s.d_lower, s.d_upper, direct.d_lower, direct.d_upper
                ),
            });
        }
        docs.push(ResultDocument::new(Some(label)).with_terms(&s, witnesses.then_some(&direct)));
    }
    if json {
        let text = if docs.len() == 1 {
            docs[0].to_json()
        } else {
            serde_json::to_string_pretty(&docs).expect("serializable")
        };
        return Ok(format!("{text}\n"));
    }
    let mut out = String::new();
    for doc in &docs {
        let g = |v: Option<crate::Grading>| v.map(|g| g.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{}: d = {}, d_lower = {}, d_upper = {}",
            doc.label.as_deref().unwrap_or(""),
            g(doc.d),
            g(doc.d_lower),
            g(doc.d_upper)
        );
        if let Some(w) = &doc.witnesses {
            let _ = writeln!(out, "  v = {:?} at {}, w = {:?}", w.lower.v.generators, w.lower.v.grading, w.lower.w.generators);
            let _ = writeln!(
                out,
                "  x = {:?}, y = {:?} at {}, z = {:?}, m = {}",
                w.upper.x.generators, w.upper.y.generators, w.upper.y.grading, w.upper.z.generators, w.upper.m
            );
        }
    }
    Ok(out)
}

fn localequiv_cmd(a: &str, b: &str, json: bool) -> Outcome {
    let (x, la) = load(a)?;
    let (y, lb) = load(b)?;
    let eq = local_equivalence(&x, &y)?;
    if json {
        let mut doc = ResultDocument::new(Some(&format!("{la} vs {lb}")));
        doc.local = Some(LocalRecord::new(&eq));
        return Ok(format!("{}\n", doc.to_json()));
    }
    let mut out = String::new();
    for (name, w) in [(format!("{la} -> {lb}"), &eq.forward), (format!("{lb} -> {la}"), &eq.backward)] {
        match w {
            Some(w) => {
                let _ = writeln!(out, "{name}: local map found (tower coefficient U^{})", w.tower_exponent);
                let _ = writeln!(out, "{}", indent(&w.f.display_entries()));
            }
            None => {
                let _ = writeln!(out, "{name}: none");
            }
        }
    }
    let _ = writeln!(out, "locally equivalent: {}", if eq.holds() { "yes" } else { "no" });
    Ok(out)
}

fn preset_cmd(action: &PresetAction, json: bool) -> Outcome {
    match action {
        PresetAction::List => {
            if json {
                let list: Vec<_> =
                    PRESET_NAMES.iter().map(|n| serde_json::json!({"name": n, "description": describe(n)})).collect();
                return Ok(format!("{}\n", serde_json::to_string_pretty(&list).expect("serializable")));
            }
            let width = PRESET_NAMES.iter().map(|n| n.len()).max().unwrap_or(0);
            Ok(PRESET_NAMES.iter().map(|n| format!("{n:width$}  {}\n", describe(n).unwrap_or(""))).collect())
        }
        PresetAction::Show { name } => {
            let x = preset(name)?;
            write_document(&ComplexDocument::from_iota(&x, Some(name)), None)
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Validate { input } => validate(input, json),
        Command::Homology { input } => homology_cmd(input, json),
        Command::Hfi { input } => hfi_cmd(input, json),
        Command::Dinv { inputs, sum, copies, witnesses } => dinv_cmd(inputs, *sum, *copies, *witnesses, json),
        Command::Tensor { inputs, copies, out } => {
            let items = repeated(inputs, *copies)?;
            let label = items.iter().map(|(_, l)| l.as_str()).collect::<Vec<_>>().join(" # ");
            let xs: Vec<IotaComplex> = items.into_iter().map(|(x, _)| x).collect();
            write_document(&ComplexDocument::from_iota(&tensor_all(&xs)?, Some(&label)), out.as_ref())
        }
        Command::Dual { input, out } => {
            let (x, label) = load(input)?;
            write_document(&ComplexDocument::from_iota(&dual(&x)?, Some(&format!("dual of {label}"))), out.as_ref())
        }
        Command::Localequiv { a, b } => localequiv_cmd(a, b, json),
        Command::Preset { action } => preset_cmd(action, json),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
