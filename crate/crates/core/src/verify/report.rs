use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::ring::Mode;

/// Outcome for one relation id, aggregated over all of its instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationResult {
    pub id: String,
    pub cases: usize,
    /// Parameters of the instances whose residual is nonzero.
    pub failures: Vec<String>,
    pub pass: bool,
    /// No instance fell in range; reported, never counted as evidence.
    pub vacuous: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub d: usize,
    pub mode: Mode,
    pub relations: Vec<RelationResult>,
    pub notes: Vec<String>,
    pub pass: bool,
    /// Wall time; kept out of JSON so reports are reproducible byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn relation(&self, id: &str) -> Option<&RelationResult> {
        self.relations.iter().find(|r| r.id == id)
    }

    pub fn failing(&self) -> impl Iterator<Item = &RelationResult> {
        self.relations.iter().filter(|r| !r.pass)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} n={} d={} {}: {} ({:.2?})",
            self.check,
            self.n,
            self.d,
            self.mode,
            if self.pass { "pass" } else { "FAIL" },
            self.elapsed
        )?;
        for r in &self.relations {
            let status = match (r.pass, r.vacuous) {
                (true, true) => "vacuous",
                (true, false) => "pass",
                (false, _) => "FAIL",
            };
            write!(f, "  {:<24} {:>6} cases  {}", r.id, r.cases, status)?;
            if let Some(first) = r.failures.first() {
                write!(f, "  first failure: {first}")?;
            }
            writeln!(f)?;
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}

/// Collects per-relation outcomes in first-seen order.
pub(crate) struct ReportBuilder {
    check: String,
    n: usize,
    d: usize,
    mode: Mode,
    relations: Vec<RelationResult>,
    notes: Vec<String>,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(check: &str, n: usize, d: usize, mode: Mode) -> Self {
        Self {
            check: check.to_string(),
            n,
            d,
            mode,
            relations: Vec::new(),
            notes: Vec::new(),
            start: Instant::now(),
        }
    }

    fn entry(&mut self, id: &str) -> &mut RelationResult {
        if let Some(k) = self.relations.iter().position(|r| r.id == id) {
            return &mut self.relations[k];
        }
        self.relations.push(RelationResult {
            id: id.to_string(),
            cases: 0,
            failures: Vec::new(),
            pass: true,
            vacuous: true,
        });
        self.relations.last_mut().expect("just pushed")
    }

    /// Registers `id` so that it shows up even with no instances.
    pub fn declare(&mut self, id: &str) {
        self.entry(id);
    }

    pub fn case(&mut self, id: &str, ok: bool, params: impl FnOnce() -> String) {
        let r = self.entry(id);
        r.cases += 1;
        r.vacuous = false;
        if !ok {
            r.pass = false;
            r.failures.push(params());
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn finish(self) -> CheckReport {
        let pass = self.relations.iter().all(|r| r.pass);
        CheckReport {
            check: self.check,
            n: self.n,
            d: self.d,
            mode: self.mode,
            relations: self.relations,
            notes: self.notes,
            pass,
            elapsed: self.start.elapsed(),
        }
    }
}
