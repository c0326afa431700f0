//! Command-line front end.
//!
//! Commands print a single JSON document (or CSV with `--format csv`).
//! Exit status is 0 on success, 1 when a verification fails and 2 for bad
//! input.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::diagram::{checkerboard, classify_crossings, Braid, CrossingType, KnotDiagram};
use crate::error::{Error, Result};
use crate::forms::{Inertia, IntMatrix, SymIntMatrix};
use crate::goeritz::{goeritz, knot_determinant};
use crate::obstructions::{
    crosscap2_report, gordian_lower_bound, klein_bottle_test, moebius_b4_test,
    sharp_gordian_lower_bound, turaev_lower_bound, Definiteness, ObstructionReport,
};
use crate::seifert::{arf, seifert_matrix_from_braid, symmetrized_signature, SeifertMatrix};
use crate::surfaces::{
    black_surface_bands, linking_matrix, random_sstar_walk_trace, BandSurface, SurfaceState,
};
use crate::table::{parse_table, verify_entry, EntryReport, BUNDLED_TABLE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "knotform", version, about = "Knot signatures from Goeritz matrices and checkerboard surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Signature, determinant, Goeritz data and (for braids) Seifert data.
    Invariants(InvariantsArgs),
    /// Cross-check every entry of a JSON-lines knot table.
    Verify(VerifyArgs),
    /// Run the signature and Arf based obstructions.
    Obstruct(ObstructArgs),
    /// Random S*-walk, tracking signature + euler/2.
    Sstar(SstarArgs),
    /// Linking matrix of a band surface.
    Bands(BandsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum ColoringChoice {
    Canonical,
    Dual,
    #[default]
    Both,
}

#[derive(Debug, Clone, Default, Args)]
pub struct KnotInput {
    /// PD code, `unknot`, or a file containing either.
    #[arg(long, conflicts_with = "braid")]
    pub pd: Option<String>,
    /// Braid word, e.g. "1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    pub braid: Option<String>,
    /// Strand count for --braid (default: largest letter + 1).
    #[arg(long, requires = "braid")]
    pub strands: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub input: KnotInput,
    #[arg(long, value_enum, default_value_t)]
    pub coloring: ColoringChoice,
    /// White region deleted from the Goeritz matrix.
    #[arg(long, default_value_t = 0)]
    pub deleted: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// JSON-lines table; the bundled table when omitted.
    pub table: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct ObstructArgs {
    /// Compute the invariants from a knot instead of giving them directly.
    #[command(flatten)]
    pub input: KnotInput,
    #[arg(long, allow_hyphen_values = true)]
    pub signature: Option<i64>,
    #[arg(long)]
    pub arf: Option<u8>,
    #[arg(long)]
    pub det: Option<u64>,
    /// Signature of the knot to compare against in the distance bounds.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub against: i64,
    #[arg(long, value_enum)]
    pub definiteness: Option<DefinitenessArg>,
    /// Search radius for the crosscap-2 forms.
    #[arg(long, default_value_t = 20)]
    pub bound: i64,
    /// Only report forms with gcd(l, m, n) = 1.
    #[arg(long)]
    pub cyclic: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub tau: Option<i64>,
    #[arg(long = "s", allow_hyphen_values = true)]
    pub rasmussen: Option<i64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DefinitenessArg {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Args)]
pub struct SstarArgs {
    /// State file or inline JSON `{"matrix": [[..]], "euler": e}`.
    pub state: Option<String>,
    /// Start from the black surface of a knot instead.
    #[command(flatten)]
    pub input: KnotInput,
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct BandsArgs {
    /// Band surface file or inline text `bands: ...; cross(i,j): ...`.
    pub surface: Option<String>,
    /// Use the black surface of a knot instead.
    #[command(flatten)]
    pub input: KnotInput,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// A knot read from the command line.
#[derive(Debug, Clone)]
pub struct Knot {
    pub diagram: KnotDiagram,
    pub braid: Option<Braid>,
}

impl Knot {
    pub fn from_pd(text: &str) -> Result<Self> {
        Ok(Knot {
            diagram: KnotDiagram::parse_pd(text)?,
            braid: None,
        })
    }

    pub fn from_braid(braid: Braid) -> Result<Self> {
        Ok(Knot {
            diagram: braid.to_diagram()?,
            braid: Some(braid),
        })
    }

    fn seifert(&self) -> Result<Option<SeifertMatrix>> {
        match &self.braid {
            Some(b) => seifert_matrix_from_braid(b).map(Some),
            None if self.diagram.is_unknot_literal() => {
                SeifertMatrix::from_matrix(IntMatrix::zeros(0, 0)).map(Some)
            }
            None => Ok(None),
        }
    }
}

impl KnotInput {
    pub fn resolve(&self) -> Result<Option<Knot>> {
        if let Some(pd) = &self.pd {
            return Knot::from_pd(&read_inline_or_file(pd)?).map(Some);
        }
        if let Some(word) = &self.braid {
            return Knot::from_braid(Braid::parse(word, self.strands)?).map(Some);
        }
        Ok(None)
    }

    fn require(&self) -> Result<Knot> {
        self.resolve()?
            .ok_or_else(|| Error::MalformedPd("give a knot with --pd or --braid".into()))
    }
}

/// Treats `arg` as a path when such a file exists, otherwise as the text.
fn read_inline_or_file(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("cannot read {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringReport {
    pub coloring: String,
    pub white_regions: usize,
    pub black_regions: usize,
    pub deleted_index: usize,
    pub goeritz: SymIntMatrix,
    pub inertia: Inertia,
    pub mu: i64,
    pub eta: Vec<i8>,
    pub types: Vec<CrossingType>,
    pub signature: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertReport {
    pub matrix: IntMatrix,
    pub discs: usize,
    pub bands: usize,
    pub symmetrized_signature: i64,
    pub arf: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub pd: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<String>,
    pub crossings: usize,
    pub writhe: i64,
    pub alternating: bool,
    pub signature: i64,
    pub determinant: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arf: Option<u8>,
    pub mu_canonical: i64,
    pub mu_dual: i64,
    pub colorings: Vec<ColoringReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seifert: Option<SeifertReport>,
}

/// Full invariant report for a knot.
pub fn cmd_invariants(knot: &Knot, coloring: ColoringChoice, deleted: usize) -> Result<InvariantsReport> {
    let d = &knot.diagram;
    let (canonical, dual) = checkerboard(d)?;
    let mut colorings = Vec::new();
    let mut mus = [0, 0];
    for (k, (label, col)) in [("canonical", &canonical), ("dual", &dual)].into_iter().enumerate() {
        let g = goeritz(d, col, deleted)?;
        mus[k] = g.mu;
        let wanted = matches!(
            (coloring, k),
            (ColoringChoice::Both, _) | (ColoringChoice::Canonical, 0) | (ColoringChoice::Dual, 1)
        );
        if wanted {
            let class = classify_crossings(d, col);
            colorings.push(ColoringReport {
                coloring: label.into(),
                white_regions: col.white_regions().len(),
                black_regions: col.black_regions().len(),
                deleted_index: deleted,
                inertia: g.reduced.inertia(),
                signature: g.signature(),
                goeritz: g.reduced,
                mu: g.mu,
                eta: class.eta,
                types: class.ctype,
            });
        }
    }
    let signature = goeritz(d, &canonical, deleted)?.signature();
    let dual_signature = goeritz(d, &dual, deleted)?.signature();
    if signature != dual_signature {
        return Err(Error::InternalInvariantViolation(format!(
            "colorings disagree on the signature: {signature} and {dual_signature}"
        )));
    }

    let seifert = match knot.seifert()? {
        Some(s) => {
            let (discs, bands, _) = s.genus_data();
            Some(SeifertReport {
                symmetrized_signature: symmetrized_signature(&s),
                arf: arf(&s)?,
                matrix: s.matrix().clone(),
                discs,
                bands,
            })
        }
        None => None,
    };
    Ok(InvariantsReport {
        pd: d.to_pd_string(),
        braid: knot.braid.as_ref().map(|b| b.to_string()),
        crossings: d.crossing_count(),
        writhe: d.writhe(),
        alternating: d.is_alternating(),
        signature,
        determinant: knot_determinant(d)?,
        arf: seifert.as_ref().map(|s| s.arf),
        mu_canonical: mus[0],
        mu_dual: mus[1],
        colorings,
        seifert,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemaError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub entries: Vec<EntryReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub schema_errors: Vec<SchemaError>,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        if !self.schema_errors.is_empty() {
            EXIT_INPUT
        } else if self.passed {
            EXIT_OK
        } else {
            EXIT_FAILED
        }
    }
}

/// Verifies every entry of a JSON-lines table.
pub fn cmd_verify(table: &str) -> VerifyReport {
    let mut entries = Vec::new();
    let mut schema_errors = Vec::new();
    for line in parse_table(table) {
        match line.entry {
            Ok(e) => entries.push(verify_entry(line.line, &e)),
            Err(message) => schema_errors.push(SchemaError {
                line: line.line,
                message,
            }),
        }
    }
    VerifyReport {
        passed: schema_errors.is_empty() && entries.iter().all(|e| e.passed()),
        entries,
        schema_errors,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ObstructInput {
    pub signature: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arf: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub determinant: Option<u64>,
    pub against: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub definiteness: Option<Definiteness>,
    pub bound: i64,
    pub require_cyclic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructOutput {
    pub inputs: ObstructInput,
    pub gordian_lower_bound: u64,
    pub sharp_gordian_lower_bound: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub turaev_lower_bound: Option<u64>,
    pub reports: Vec<ObstructionReport>,
}

/// Every obstruction that the given invariants allow.
pub fn cmd_obstruct(input: &ObstructInput) -> ObstructOutput {
    let sigma = input.signature;
    let mut reports = Vec::new();
    if let Some(a) = input.arf {
        reports.push(moebius_b4_test(sigma, a));
        let kinds = match input.definiteness {
            Some(k) => vec![k],
            None => vec![Definiteness::Positive, Definiteness::Negative],
        };
        for k in kinds {
            reports.push(klein_bottle_test(sigma, a, k));
        }
    }
    if let Some(det) = input.determinant {
        reports.push(crosscap2_report(sigma, det, input.bound, input.require_cyclic));
    }
    ObstructOutput {
        inputs: input.clone(),
        gordian_lower_bound: gordian_lower_bound(sigma, input.against),
        sharp_gordian_lower_bound: sharp_gordian_lower_bound(sigma, input.against),
        turaev_lower_bound: match (input.tau, input.s) {
            (Some(t), Some(s)) => Some(turaev_lower_bound(t, s, sigma)),
            _ => None,
        },
        reports,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SstarReport {
    pub seed: u64,
    pub steps: usize,
    pub start: i64,
    pub constant: bool,
    pub conserved: Vec<i64>,
    pub end: SurfaceState,
}

/// Runs a seeded S*-walk and reports the conserved quantity after each move.
pub fn cmd_sstar(state: &SurfaceState, steps: usize, seed: u64) -> SstarReport {
    let trace = random_sstar_walk_trace(state, steps, seed);
    SstarReport {
        seed,
        steps,
        start: trace.start,
        constant: trace.is_constant(),
        conserved: trace.conserved,
        end: trace.end,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandsReport {
    pub surface: String,
    pub linking_matrix: SymIntMatrix,
    pub inertia: Inertia,
    pub signature: i64,
    pub determinant: i64,
    pub smith: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<i64>,
}

/// Linking matrix and its invariants for a band surface.
pub fn cmd_bands(surface: &BandSurface, euler: Option<i64>) -> Result<BandsReport> {
    let m = linking_matrix(surface);
    let det = m.determinant();
    let determinant = det
        .to_i64()
        .ok_or_else(|| Error::Overflow(format!("determinant {det}")))?;
    let smith = m
        .smith_invariants()
        .iter()
        .map(|v| v.to_u64().ok_or_else(|| Error::Overflow(format!("Smith invariant {v}"))))
        .collect::<Result<_>>()?;
    Ok(BandsReport {
        surface: surface.to_string(),
        inertia: m.inertia(),
        signature: m.signature(),
        linking_matrix: m,
        determinant,
        smith,
        euler,
    })
}

/// Parses `args` (including the program name), runs the command and writes
/// its report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InternalInvariantViolation(_) => EXIT_FAILED,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Invariants(a) => {
            let knot = a.input.require()?;
            let r = cmd_invariants(&knot, a.coloring, a.deleted)?;
            match a.format {
                Format::Json => emit_json(out, &r),
                Format::Csv => emit_csv(
                    out,
                    &["signature", "determinant", "arf", "mu_canonical", "mu_dual", "crossings"],
                    &[vec![
                        r.signature.to_string(),
                        r.determinant.to_string(),
                        r.arf.map(|a| a.to_string()).unwrap_or_default(),
                        r.mu_canonical.to_string(),
                        r.mu_dual.to_string(),
                        r.crossings.to_string(),
                    ]],
                ),
            }?;
            Ok(EXIT_OK)
        }
        Command::Verify(a) => {
            let text = match &a.table {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("cannot read {path}: {e}")))?,
                None => BUNDLED_TABLE.to_string(),
            };
            let r = cmd_verify(&text);
            match a.format {
                Format::Json => emit_json(out, &r),
                Format::Csv => {
                    let mut rows = Vec::new();
                    for e in &r.entries {
                        for c in &e.checks {
                            rows.push(vec![
                                e.line.to_string(),
                                e.name.clone(),
                                c.name.clone(),
                                c.passed.to_string(),
                                c.detail.clone(),
                            ]);
                        }
                    }
                    for s in &r.schema_errors {
                        rows.push(vec![s.line.to_string(), String::new(), "schema".into(), "false".into(), s.message.clone()]);
                    }
                    emit_csv(out, &["line", "name", "check", "passed", "detail"], &rows)
                }
            }?;
            Ok(r.exit_code())
        }
        Command::Obstruct(a) => {
            let mut input = ObstructInput {
                signature: 0,
                arf: a.arf,
                determinant: a.det,
                against: a.against,
                definiteness: a.definiteness.map(|d| match d {
                    DefinitenessArg::Positive => Definiteness::Positive,
                    DefinitenessArg::Negative => Definiteness::Negative,
                }),
                bound: a.bound,
                require_cyclic: a.cyclic,
                tau: a.tau,
                s: a.rasmussen,
            };
            if let Some(knot) = a.input.resolve()? {
                let r = cmd_invariants(&knot, ColoringChoice::Canonical, 0)?;
                input.signature = r.signature;
                input.determinant = input.determinant.or(Some(r.determinant));
                input.arf = input.arf.or(r.arf);
            } else {
                input.signature = a.signature.ok_or_else(|| {
                    Error::MalformedPd("give --signature or a knot with --pd/--braid".into())
                })?;
            }
            let r = cmd_obstruct(&input);
            match a.format {
                Format::Json => emit_json(out, &r),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = r
                        .reports
                        .iter()
                        .map(|t| {
                            let witnesses: Vec<String> = t
                                .witnesses
                                .iter()
                                .map(|w| format!("({} {} {})", w.l, w.m, w.n))
                                .collect();
                            vec![
                                t.test_name.clone(),
                                serde_json::to_value(t.verdict).expect("verdict serializes")
                                    .as_str()
                                    .unwrap_or_default()
                                    .to_string(),
                                witnesses.join(" "),
                            ]
                        })
                        .collect();
                    emit_csv(out, &["test", "verdict", "witnesses"], &rows)
                }
            }?;
            Ok(EXIT_OK)
        }
        Command::Sstar(a) => {
            let state = match (&a.state, a.input.resolve()?) {
                (Some(s), None) => {
                    let text = read_inline_or_file(s)?;
                    serde_json::from_str::<SurfaceState>(&text).map_err(|e| {
                        Error::Parse {
                            line: e.line(),
                            column: e.column(),
                            message: e.to_string(),
                        }
                    })?
                }
                (None, Some(knot)) => {
                    let (canonical, _) = checkerboard(&knot.diagram)?;
                    SurfaceState::checkerboard(&knot.diagram, &canonical)
                }
                _ => {
                    return Err(Error::MalformedPd(
                        "give either a state or a knot with --pd/--braid".into(),
                    ))
                }
            };
            let r = cmd_sstar(&state, a.steps, a.seed);
            match a.format {
                Format::Json => emit_json(out, &r),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = r
                        .conserved
                        .iter()
                        .enumerate()
                        .map(|(i, c)| vec![(i + 1).to_string(), c.to_string()])
                        .collect();
                    emit_csv(out, &["step", "conserved"], &rows)
                }
            }?;
            Ok(if r.constant { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Bands(a) => {
            let (surface, euler) = match (&a.surface, a.input.resolve()?) {
                (Some(s), None) => (BandSurface::parse(&read_inline_or_file(s)?)?, None),
                (None, Some(knot)) => {
                    let (canonical, _) = checkerboard(&knot.diagram)?;
                    let st = SurfaceState::checkerboard(&knot.diagram, &canonical);
                    (black_surface_bands(&knot.diagram, &canonical), Some(st.euler()))
                }
                _ => {
                    return Err(Error::MalformedPd(
                        "give either a band surface or a knot with --pd/--braid".into(),
                    ))
                }
            };
            let r = cmd_bands(&surface, euler)?;
            match a.format {
                Format::Json => emit_json(out, &r),
                Format::Csv => emit_csv(
                    out,
                    &["bands", "signature", "determinant"],
                    &[vec![
                        surface.band_count().to_string(),
                        r.signature.to_string(),
                        r.determinant.to_string(),
                    ]],
                ),
            }?;
            Ok(EXIT_OK)
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string(value).expect("reports serialize");
    writeln!(out, "{text}").map_err(io_error)
}

fn emit_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(|e| io_error(e.into()))?;
    for r in rows {
        w.write_record(r).map_err(|e| io_error(e.into()))?;
    }
    w.flush().map_err(io_error)
}

fn io_error(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("knotform").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn invariants_of_the_trefoil_braid() {
        let (code, out, _) = run_args(&["invariants", "--braid", "1 1 1"]);
        assert_eq!(code, 0);
        let r: InvariantsReport = serde_json::from_str(&out).unwrap();
        assert_eq!((r.signature, r.determinant, r.arf), (-2, 3, Some(1)));
        assert_eq!(r.colorings.len(), 2);
    }

    #[test]
    fn invariants_of_the_unknot() {
        let (code, out, _) = run_args(&["invariants", "--pd", "unknot", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "signature,determinant,arf,mu_canonical,mu_dual,crossings\n0,1,0,0,0,0\n");
    }

    #[test]
    fn input_errors_exit_two() {
        let (code, _, err) = run_args(&["invariants", "--pd", "X(1,2,3"]);
        assert_eq!(code, 2);
        assert!(err.contains("line 1"));
        assert_eq!(run_args(&["invariants", "--braid", "1 1"]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
    }

    #[test]
    fn report_round_trip() {
        let knot = Knot::from_braid(Braid::parse("1 -2 1 -2", None).unwrap()).unwrap();
        let r = cmd_invariants(&knot, ColoringChoice::Both, 0).unwrap();
        let back: InvariantsReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
