//! Corpora and lemma-shaped verification suites with JSON reports.

pub mod corpus;
pub mod hajos;
mod lemmas;
pub mod outcomes;

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::obstructions::DegreeFilter;

pub use hajos::{check_hajos_preconditions, hajos_rejection, HajosReport};
pub use lemmas::{verify_lemma, verify_lemma_with_certificates};
pub use outcomes::{classify_extension_outcomes, verify_outcome, ExtensionOutcome};

pub const SCHEMA: &str = "wheelforge/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LemmaId {
    /// Two disjoint paths or an ordered disc embedding.
    #[serde(rename = "L2LINK")]
    L2Link,
    /// Good wheel, a 4-cut of size five, or a catalog entry.
    #[serde(rename = "L5CUTOBS")]
    L5CutObs,
    /// Good wheels of minimal instances are extendable.
    #[serde(rename = "LEXT5")]
    LExt5,
    /// No graph passing the Hajós filter has a large disc-planar 4-side.
    #[serde(rename = "THM1")]
    Thm1,
    /// Cut vertices shared with the outer cut are consecutive on the boundary.
    #[serde(rename = "CONSEC")]
    Consec,
}

impl LemmaId {
    pub const ALL: [LemmaId; 5] = [LemmaId::L2Link, LemmaId::L5CutObs, LemmaId::LExt5, LemmaId::Thm1, LemmaId::Consec];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::L2Link => "L2LINK",
            LemmaId::L5CutObs => "L5CUTOBS",
            LemmaId::LExt5 => "LEXT5",
            LemmaId::Thm1 => "THM1",
            LemmaId::Consec => "CONSEC",
        }
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Usage(format!("unknown lemma id {s:?}; expected one of L2LINK, L5CUTOBS, LEXT5, THM1, CONSEC")))
    }
}

/// Where instances come from.
#[derive(Debug, Clone, Default)]
pub enum Corpus {
    /// The lemma's own generator, within the bounds.
    #[default]
    Generated,
    /// Supplied host graphs (configurations use vertices `0..b` as the
    /// boundary, with `b` from [`Bounds::boundary`]).
    Graphs(Vec<Graph>),
}

/// Size caps and sampling parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Largest host order for generated graph corpora.
    pub nmax: usize,
    /// Largest interior order for generated configurations.
    pub max_interior: usize,
    /// Random hosts added to L2LINK at order `nmax + 1`.
    pub samples: usize,
    pub seed: u64,
    /// Boundary size of supplied configurations (L5CUTOBS, LEXT5, CONSEC).
    pub boundary: usize,
    pub filter: DegreeFilter,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { nmax: 7, max_interior: 4, samples: 0, seed: 0, boundary: 5, filter: DegreeFilter::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

/// A failed instance with the data that shows it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    /// graph6 of the host as checked.
    pub graph: String,
    pub detail: String,
    pub certificate: serde_json::Value,
}

/// One instance's certificate, stored under its canonical form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub id: String,
    pub graph: String,
    pub certificate: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub schema: String,
    pub lemma: LemmaId,
    pub verdict: Verdict,
    pub bounds: Bounds,
    /// Instances whose conclusion was checked.
    pub instances: usize,
    /// Instances dropped by the hypothesis filter.
    pub filtered: usize,
    pub outcomes: BTreeMap<String, usize>,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub certificates: Vec<Certificate>,
}

impl LemmaReport {
    /// The report without its timing, for run-to-run comparison.
    pub fn untimed(&self) -> LemmaReport {
        LemmaReport { elapsed_ms: 0, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Writes one `<canonical form>.json` file per certificate into `dir`.
    pub fn write_certificates(&self, dir: &Path) -> Result<usize> {
        std::fs::create_dir_all(dir)?;
        for c in &self.certificates {
            let body = serde_json::to_string_pretty(c)?;
            std::fs::write(dir.join(format!("{}.json", c.id)), body)?;
        }
        Ok(self.certificates.len())
    }
}
