//! The `ihf/1` JSON format for ι-complexes and for computed results.
//!
//! ```json
//! {
//!   "format": "ihf/1",
//!   "label": "Sigma(2,3,7)",
//!   "generators": [{"name": "a", "grading": "-2"}, {"name": "b", "grading": "-2"}, {"name": "c", "grading": "-3"}],
//!   "diff": [["c", "a", 1], ["c", "b", 1]],
//!   "iota": [["a", "b", 0], ["b", "a", 0], ["c", "c", 0]]
//! }
//! ```
//!
//! Each arrow is `[source, target, U-exponent]`. A missing `iota` means the
//! identity. Gradings are strings `"p"` or `"p/q"`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Basis, Chain, Generator, MonoMatrix};
use crate::complex::{GradedComplex, HomologyModule, InducedMap, SummandKind};
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::involutive::{DirectTerms, InvolutiveSummary, LowerWitness, UpperWitness};
use crate::iota::IotaComplex;
use crate::local::{LocalEquivalence, LocalMapWitness};

pub const FORMAT: &str = "ihf/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub name: String,
    pub grading: Grading,
}

/// `[source, target, exponent]`.
pub type Arrow = (String, String, u32);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pinned_d: Option<Grading>,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub diff: Vec<Arrow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iota: Option<Vec<Arrow>>,
}

impl ComplexDocument {
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse("empty document".into()));
        }
        let doc: ComplexDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.format != FORMAT {
            return Err(Error::Parse(format!("unsupported format {:?}, expected {FORMAT:?}", doc.format)));
        }
        Ok(doc)
    }

    pub fn from_iota(x: &IotaComplex, label: Option<&str>) -> Self {
        ComplexDocument {
            format: FORMAT.to_string(),
            label: label.map(str::to_string),
            pinned_d: None,
            generators: x.basis().iter().map(|g| GeneratorEntry { name: g.name.clone(), grading: g.grading }).collect(),
            diff: x.complex().arrows(),
            iota: Some(x.iota_entries()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Builds the ι-complex without checking `∂² = 0` or the ι axioms.
    /// Homogeneity problems are reported with their position in the file.
    pub fn build(&self) -> Result<IotaComplex> {
        let basis = Basis::new(self.generators.iter().map(|g| Generator::new(g.name.clone(), g.grading)).collect())?;
        let diff = arrows_to_matrix(&basis, Grading::int(1), &self.diff, "diff")?;
        let iota = match &self.iota {
            Some(list) => arrows_to_matrix(&basis, Grading::ZERO, list, "iota")?,
            None => MonoMatrix::identity(basis),
        };
        IotaComplex::from_parts(GradedComplex::from_parts(diff)?, iota)
    }

    /// [`build`](Self::build) followed by full validation.
    pub fn to_iota(&self) -> Result<IotaComplex> {
        let x = self.build()?;
        x.check()?;
        Ok(x)
    }
}

fn arrows_to_matrix(basis: &std::sync::Arc<Basis>, shift: Grading, arrows: &[Arrow], field: &str) -> Result<MonoMatrix> {
    let mut m = MonoMatrix::zero(basis.clone(), basis.clone(), shift);
    let mut problems = Vec::new();
    for (k, (src, tgt, e)) in arrows.iter().enumerate() {
        let located = |err: Error| format!("{field}[{k}] {src} -> {tgt}: {err}");
        match (basis.lookup(src), basis.lookup(tgt)) {
            (Ok(c), Ok(r)) => {
                if let Err(err) = m.add_entry(r, c, *e) {
                    problems.push(located(err));
                }
            }
            (Err(err), _) | (_, Err(err)) => problems.push(located(err)),
        }
    }
    if problems.is_empty() {
        Ok(m)
    } else {
        Err(Error::InvalidComplex(problems))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandRecord {
    #[serde(flatten)]
    pub kind: SummandKind,
    pub grading: Grading,
    pub representative: Vec<String>,
}

impl SummandRecord {
    pub fn list(h: &HomologyModule) -> Vec<SummandRecord> {
        h.summands()
            .iter()
            .map(|s| SummandRecord { kind: s.kind, grading: s.grading, representative: chain_terms(&s.representative, h.basis()) })
            .collect()
    }
}

fn chain_terms(c: &Chain, basis: &Basis) -> Vec<String> {
    c.iter().map(|(i, e)| monomial(basis.name(i), e)).collect()
}

fn monomial(name: &str, e: u32) -> String {
    match e {
        0 => name.to_string(),
        1 => format!("U {name}"),
        _ => format!("U^{e} {name}"),
    }
}

/// `Q[source] = U^exponent [target]` on summand indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionRecord {
    pub source: usize,
    pub target: usize,
    pub exponent: u32,
}

impl ActionRecord {
    pub fn list(m: &InducedMap) -> Vec<ActionRecord> {
        let mut out = Vec::new();
        for (source, col) in m.columns.iter().enumerate() {
            for &(target, exponent) in col {
                out.push(ActionRecord { source, target, exponent });
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrectionWitnesses {
    pub lower: LowerWitness,
    pub upper: UpperWitness,
}

/// A local map `F` with homotopy `H`, by generator names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalMapRecord {
    pub f: Vec<Arrow>,
    pub h: Vec<Arrow>,
    pub tower_exponent: u32,
}

impl LocalMapRecord {
    pub fn new(w: &LocalMapWitness) -> Self {
        LocalMapRecord { f: named(&w.f), h: named(&w.h), tower_exponent: w.tower_exponent }
    }

    pub fn rebuild(&self, x: &IotaComplex, y: &IotaComplex) -> Result<LocalMapWitness> {
        let entries = |list: &[Arrow], shift: Grading| {
            MonoMatrix::from_named_entries(
                y.basis().clone(),
                x.basis().clone(),
                shift,
                list.iter().map(|(s, t, e)| (s.as_str(), t.as_str(), *e)),
            )
        };
        Ok(LocalMapWitness { f: entries(&self.f, Grading::ZERO)?, h: entries(&self.h, Grading::int(-1))?, tower_exponent: self.tower_exponent })
    }
}

fn named(m: &MonoMatrix) -> Vec<Arrow> {
    crate::complex::named_entries(m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalRecord {
    pub forward: Option<LocalMapRecord>,
    pub backward: Option<LocalMapRecord>,
    pub equivalent: bool,
}

impl LocalRecord {
    pub fn new(eq: &LocalEquivalence) -> Self {
        LocalRecord {
            forward: eq.forward.as_ref().map(LocalMapRecord::new),
            backward: eq.backward.as_ref().map(LocalMapRecord::new),
            equivalent: eq.holds(),
        }
    }
}

/// Machine-readable output of the computing verbs. Fields that a verb does
/// not produce are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    pub format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Grading>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_lower: Option<Grading>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_upper: Option<Grading>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub homology: Vec<SummandRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hfi: Vec<SummandRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub q_action: Vec<ActionRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<CorrectionWitnesses>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub local: Option<LocalRecord>,
}

impl ResultDocument {
    pub fn new(label: Option<&str>) -> Self {
        ResultDocument { format: FORMAT.to_string(), label: label.map(str::to_string), ..Default::default() }
    }

    pub fn with_terms(mut self, s: &InvolutiveSummary, direct: Option<&DirectTerms>) -> Self {
        self.d = Some(s.d);
        self.d_lower = Some(s.d_lower);
        self.d_upper = Some(s.d_upper);
        self.witnesses = direct.map(|t| CorrectionWitnesses { lower: t.lower.clone(), upper: t.upper.clone() });
        self
    }

    pub fn with_hfi(mut self, s: &InvolutiveSummary) -> Self {
        self.hfi = SummandRecord::list(&s.hfi);
        self.q_action = ActionRecord::list(&s.q_action);
        self
    }

    pub fn with_homology(mut self, h: &HomologyModule) -> Self {
        self.homology = SummandRecord::list(h);
        if let Ok(t) = h.single_tower() {
            self.d = Some(t.grading + Grading::int(2));
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: ResultDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.format != FORMAT {
            return Err(Error::Parse(format!("unsupported format {:?}, expected {FORMAT:?}", doc.format)));
        }
        Ok(doc)
    }

    /// Resubstitutes the recorded correction-term witnesses into `x`.
    pub fn verify_witnesses(&self, x: &IotaComplex) -> Result<bool> {
        let Some(w) = &self.witnesses else { return Ok(true) };
        let lower_ok = w.lower.verify(x)? && Some(w.lower.v.grading + Grading::int(2)) == self.d_lower;
        let upper_ok = w.upper.verify(x)? && Some(w.upper.y.grading + Grading::int(2)) == self.d_upper;
        Ok(lower_ok && upper_ok)
    }

    /// Resubstitutes the recorded local maps between `x` and `y`.
    pub fn verify_local(&self, x: &IotaComplex, y: &IotaComplex) -> Result<bool> {
        let Some(l) = &self.local else { return Ok(true) };
        if let Some(f) = &l.forward {
            if !f.rebuild(x, y)?.verify(x, y)? {
                return Ok(false);
            }
        }
        if let Some(b) = &l.backward {
            if !b.rebuild(y, x)?.verify(y, x)? {
                return Ok(false);
            }
        }
        Ok(l.equivalent == (l.forward.is_some() && l.backward.is_some()))
    }
}
