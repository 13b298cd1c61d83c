use std::fmt;

/// Step counter shared by the backtracking searches.
///
/// A budget of `None` is unlimited. Every elementary search step calls
/// [`Budget::tick`]; once the limit is reached the search unwinds with
/// [`Exhausted`].
#[derive(Debug, Clone)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exhausted;

impl fmt::Display for Exhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("search budget exhausted")
    }
}

impl std::error::Error for Exhausted {}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: None, used: 0 }
    }

    pub fn new(limit: u64) -> Self {
        Budget { limit: Some(limit), used: 0 }
    }

    /// Reads `PATHFORGE_BUDGET`; unlimited when unset or unparsable.
    pub fn from_env() -> Self {
        match std::env::var("PATHFORGE_BUDGET").ok().and_then(|s| s.trim().parse().ok()) {
            Some(n) => Budget::new(n),
            None => Budget::unlimited(),
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), Exhausted> {
        self.used += 1;
        match self.limit {
            Some(l) if self.used > l => Err(Exhausted),
            _ => Ok(()),
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

/// Outcome of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// The search space was exhausted without a witness.
    NotFound,
    /// The step budget ran out first; nothing is known.
    Exhausted,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::NotFound => Search::NotFound,
            Search::Exhausted => Search::Exhausted,
        }
    }
}

impl<T> From<Result<Option<T>, Exhausted>> for Search<T> {
    fn from(r: Result<Option<T>, Exhausted>) -> Self {
        match r {
            Ok(Some(t)) => Search::Found(t),
            Ok(None) => Search::NotFound,
            Err(Exhausted) => Search::Exhausted,
        }
    }
}
