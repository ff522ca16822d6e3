//! Structured verdicts for validators and theorem cross-checks.

use std::fmt;

/// A single violated axiom, naming the law and the offending cell ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub elements: Vec<String>,
}

impl Violation {
    pub fn new(axiom: impl Into<String>, elements: Vec<String>) -> Self {
        Violation { axiom: axiom.into(), elements }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.axiom, self.elements.join(", "))
    }
}

/// Pass/fail verdict with the exact violated axioms.
///
/// `ok()` holds exactly when the violation list is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
    /// Optional human-readable payload (found witnesses, counts).
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violate(&mut self, axiom: impl Into<String>, elements: Vec<String>) {
        self.violations.push(Violation::new(axiom, elements));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Absorb another report, prefixing its axiom tags.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for v in other.violations {
            self.violations.push(Violation::new(format!("{prefix}/{}", v.axiom), v.elements));
        }
        for n in other.notes {
            self.notes.push(format!("{prefix}: {n}"));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            writeln!(f, "ok")?;
        } else {
            writeln!(f, "failed ({} violations)", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  violation: {v}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Verdict of a 2-dimensional initiality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialityReport {
    pub verdict: bool,
    /// First failing condition in canonical scan order, if any.
    pub failure: Option<InitialityFailure>,
}

/// The condition of the unique-filler characterisation that failed first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InitialityFailure {
    /// No (horizontal) morphism from the candidate to the named object.
    NoMorphismTo { object: String },
    /// A parallel pair of morphisms with 2-cell filler count != 1.
    NonUnique2Cell { from: String, to: String, count: usize },
    /// A boundary over a vertical morphism with no square filler.
    NoSquare { vertical: String, top: String, bottom: String },
    /// A boundary over a vertical morphism with more than one square filler.
    NonUniqueSquare { vertical: String, top: String, bottom: String, count: usize },
}

impl InitialityReport {
    pub fn pass() -> Self {
        InitialityReport { verdict: true, failure: None }
    }

    pub fn fail(failure: InitialityFailure) -> Self {
        InitialityReport { verdict: false, failure: Some(failure) }
    }
}

impl fmt::Display for InitialityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "bi-initial: true"),
            Some(fail) => write!(f, "bi-initial: false ({fail:?})"),
        }
    }
}
