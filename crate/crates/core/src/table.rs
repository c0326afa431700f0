//! Knot tables in JSON-lines form and the batch cross-checks run over them.

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::diagram::{checkerboard, Braid, KnotDiagram};
use crate::error::{Error, Result};
use crate::goeritz::{alternating_signature, gl_signature, goeritz, knot_determinant};
use crate::seifert::{arf, seifert_matrix_from_braid, symmetrized_signature, SeifertMatrix};
use crate::surfaces::{black_surface_bands, linking_matrix};

/// The table shipped with the crate: the unknot, `T(3,2)` through `T(9,2)`,
/// `4_1` and `7_6`.
pub const BUNDLED_TABLE: &str = include_str!("../data/knots.jsonl");

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub determinant: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arf: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_canonical: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotTableEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pd: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<String>,
    /// Overrides the strand count inferred from the braid word.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strands: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

impl KnotTableEntry {
    pub fn braid(&self) -> Result<Option<Braid>> {
        self.braid
            .as_deref()
            .map(|w| Braid::parse(w, self.strands))
            .transpose()
    }

    /// The PD diagram if given, otherwise the braid closure.
    pub fn diagram(&self) -> Result<KnotDiagram> {
        match (&self.pd, self.braid()?) {
            (Some(pd), _) => KnotDiagram::parse_pd(pd),
            (None, Some(b)) => b.to_diagram(),
            (None, None) => Err(Error::MalformedPd(format!("entry `{}` has neither pd nor braid", self.name))),
        }
    }

    /// Seifert matrix of the braid, or the empty one for the unknot literal.
    pub fn seifert(&self) -> Result<Option<SeifertMatrix>> {
        if let Some(b) = self.braid()? {
            return seifert_matrix_from_braid(&b).map(Some);
        }
        if self.diagram()?.is_unknot_literal() {
            return Ok(Some(SeifertMatrix::from_matrix(crate::forms::IntMatrix::zeros(0, 0))?));
        }
        Ok(None)
    }
}

/// One line of a table: the entry, or what was wrong with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableLine {
    pub line: usize,
    pub entry: std::result::Result<KnotTableEntry, String>,
}

/// Parses JSON-lines text. Blank lines are skipped; every other line yields
/// either an entry or a schema error.
pub fn parse_table(text: &str) -> Vec<TableLine> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| TableLine {
            line: i + 1,
            entry: serde_json::from_str::<KnotTableEntry>(l)
                .map_err(|e| e.to_string())
                .and_then(|e| {
                    if e.pd.is_none() && e.braid.is_none() {
                        Err("entry needs `pd` or `braid`".to_string())
                    } else {
                        Ok(e)
                    }
                }),
        })
        .collect()
}

pub fn bundled_table() -> Vec<KnotTableEntry> {
    parse_table(BUNDLED_TABLE)
        .into_iter()
        .map(|l| l.entry.expect("bundled table is well formed"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub line: usize,
    pub name: String,
    pub checks: Vec<Check>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs every applicable cross-check on one entry.
pub fn verify_entry(line: usize, entry: &KnotTableEntry) -> EntryReport {
    let checks = match run_checks(entry) {
        Ok(c) => c,
        Err(e) => vec![Check::new("input", false, e.to_string())],
    };
    EntryReport {
        line,
        name: entry.name.clone(),
        checks,
    }
}

fn run_checks(entry: &KnotTableEntry) -> Result<Vec<Check>> {
    let d = entry.diagram()?;
    let mut checks = Vec::new();
    let (canonical, dual) = checkerboard(&d)?;

    // Every coloring and every deleted region must give the same answer.
    let reference = goeritz(&d, &canonical, 0)?;
    let sigma = reference.signature();
    let mut disagreements = Vec::new();
    let mut region_mismatch = Vec::new();
    for (label, col) in [("canonical", &canonical), ("dual", &dual)] {
        let first = goeritz(&d, col, 0)?;
        if first.signature() != sigma {
            disagreements.push(format!("{label}: {}", first.signature()));
        }
        for k in 1..col.white_regions().len() {
            let g = goeritz(&d, col, k)?;
            let same = g.signature() == first.signature()
                && g.reduced.inertia() == first.reduced.inertia()
                && g.reduced.determinant().abs() == first.reduced.determinant().abs()
                && g.reduced.smith_invariants() == first.reduced.smith_invariants();
            if !same {
                region_mismatch.push(format!("{label} region {k}"));
            }
        }
    }
    checks.push(Check::new(
        "dual_coloring",
        disagreements.is_empty(),
        if disagreements.is_empty() {
            format!("both colorings give {sigma}")
        } else {
            format!("canonical gives {sigma}; {}", disagreements.join(", "))
        },
    ));
    checks.push(Check::new(
        "deleted_region",
        region_mismatch.is_empty(),
        if region_mismatch.is_empty() {
            "all deleted regions agree".to_string()
        } else {
            format!("differs at {}", region_mismatch.join(", "))
        },
    ));

    let det = knot_determinant(&d)?;
    let bands = linking_matrix(&black_surface_bands(&d, &canonical));
    let bridge = bands.inertia() == reference.reduced.inertia()
        && bands.determinant().abs() == reference.reduced.determinant().abs()
        && bands.smith_invariants() == reference.reduced.smith_invariants();
    checks.push(Check::new(
        "band_surface",
        bridge,
        format!("linking matrix {bands}, Goeritz {}", reference.reduced),
    ));

    let mut arf_value = None;
    if let Some(b) = entry.braid()? {
        let closure = b.to_diagram()?;
        let s = seifert_matrix_from_braid(&b)?;
        let seifert_sigma = symmetrized_signature(&s);
        let seifert_det = s.symmetrized().determinant().abs();
        let closure_sigma = gl_signature(&closure)?;
        let ok = seifert_sigma == sigma && closure_sigma == sigma && seifert_det == det.into();
        checks.push(Check::new(
            "seifert",
            ok,
            format!("Seifert signature {seifert_sigma}, |det| {seifert_det}; Goeritz {sigma}, {det}"),
        ));
    }
    if let Some(s) = entry.seifert()? {
        arf_value = Some(arf(&s)?);
    }

    if d.is_alternating() && d.is_reduced() {
        let alt = alternating_signature(&d)?;
        checks.push(Check::new(
            "alternating",
            alt == sigma,
            format!("#black - #positive - 1 = {alt}"),
        ));
    }

    if let Some(exp) = &entry.expected {
        let mut compare = |name: &str, want: Option<i64>, got: Option<i64>| {
            if let Some(w) = want {
                let detail = match got {
                    Some(g) => format!("expected {w}, got {g}"),
                    None => format!("expected {w}, not computable from this entry"),
                };
                checks.push(Check::new(name, got == Some(w), detail));
            }
        };
        compare("expected_signature", exp.signature, Some(sigma));
        compare(
            "expected_determinant",
            exp.determinant.and_then(|v| v.to_i64()),
            det.to_i64(),
        );
        compare("expected_arf", exp.arf.map(i64::from), arf_value.map(i64::from));
        compare("expected_mu_canonical", exp.mu_canonical, Some(reference.mu));
    }
    Ok(checks)
}
