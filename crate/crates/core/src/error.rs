//! Structured errors shared across the crate.

use thiserror::Error;

/// Errors raised by constructions and decision procedures.
///
/// Axiom failures are not errors: validators report those through
/// [`crate::report::Report`]. An `Error` means the input was malformed or a
/// search could not be carried out at all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A table referenced an id outside the declared sort.
    #[error("malformed table in `{structure}`: {detail}")]
    MalformedTable { structure: String, detail: String },

    /// An id was outside the relevant sort.
    #[error("unknown id {id} for sort {sort} (size {size})")]
    UnknownId { sort: &'static str, id: usize, size: usize },

    /// A square boundary was not corner-consistent.
    #[error("inconsistent boundary: {0}")]
    InconsistentBoundary(String),

    /// Two structures (or a map between them) disagree on kind or shape.
    #[error("sort mismatch: {0}")]
    SortMismatch(String),

    /// Boundaries of cells in a map do not line up.
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),

    /// A construction or enumeration would exceed the configured cap.
    #[error("size cap exceeded while {context}: needs {required}, cap is {cap}")]
    SizeCapExceeded { context: String, required: usize, cap: usize },

    /// The base 2-category lacks tensors by the walking arrow.
    #[error("no tensor by the walking arrow at object {object}")]
    NoTensors { object: String },

    /// A representation was requested from a point that is not double bi-initial.
    #[error("({object}, {element}) is not double bi-initial in the double category of elements")]
    NotInitial { object: String, element: String },

    /// No (unique) filler square exists for the requested boundary.
    #[error("filler square count is {found}, expected exactly one")]
    NoFiller { found: usize },

    /// A precondition of an operation failed.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size caps guarding exhaustive constructions.
///
/// Fully materialized structures keep every check a finite loop, but derived
/// structures (commas, elements, cone categories) can blow up. Constructions
/// that may do so take a `Caps` and abort with
/// [`Error::SizeCapExceeded`] instead of truncating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of cells allowed in any single sort of a derived structure.
    pub per_sort: usize,
    /// Maximum raw search-space size for brute-force enumerations.
    pub search: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { per_sort: 64, search: 1 << 20 }
    }
}

impl Caps {
    pub fn with_per_sort(per_sort: usize) -> Self {
        Caps { per_sort, search: per_sort.saturating_mul(per_sort).saturating_mul(256) }
    }

    pub fn check_sort(&self, context: &str, required: usize) -> Result<()> {
        if required > self.per_sort {
            return Err(Error::SizeCapExceeded {
                context: context.to_string(),
                required,
                cap: self.per_sort,
            });
        }
        Ok(())
    }

    pub fn check_search(&self, context: &str, required: usize) -> Result<()> {
        if required > self.search {
            return Err(Error::SizeCapExceeded {
                context: context.to_string(),
                required,
                cap: self.search,
            });
        }
        Ok(())
    }
}
