use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactlin::{format_q, sparse_from_dense, Q};

/// A concrete counterexample: the basis tuple that was evaluated and the two
/// sides that should have agreed, as sparse `(coordinate, "num/den")` lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub lhs: Vec<(usize, String)>,
    pub rhs: Vec<(usize, String)>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Witness {
    pub fn new(tuple: Vec<usize>, lhs: &[Q], rhs: &[Q]) -> Self {
        Witness {
            tuple,
            lhs: render(lhs),
            rhs: render(rhs),
            note: String::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn message(note: impl Into<String>) -> Self {
        Witness {
            tuple: Vec::new(),
            lhs: Vec::new(),
            rhs: Vec::new(),
            note: note.into(),
        }
    }
}

fn render(v: &[Q]) -> Vec<(usize, String)> {
    sparse_from_dense(v)
        .into_iter()
        .map(|(i, x)| (i, format_q(&x)))
        .collect()
}

fn show(v: &[(usize, String)]) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    let parts: Vec<String> = v.iter().map(|(i, x)| format!("{x}*b{i}")).collect();
    parts.join(" + ")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.note.is_empty() {
            write!(f, "{}", self.note)?;
            if self.tuple.is_empty() && self.lhs.is_empty() && self.rhs.is_empty() {
                return Ok(());
            }
            write!(f, "; ")?;
        }
        write!(
            f,
            "at {:?}: lhs = {} but rhs = {}",
            self.tuple,
            show(&self.lhs),
            show(&self.rhs)
        )
    }
}

/// Outcome of checking one universally quantified identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Witness>,
}

impl AxiomReport {
    pub fn pass(axiom: impl Into<String>) -> Self {
        AxiomReport {
            axiom: axiom.into(),
            holds: true,
            counterexample: None,
        }
    }

    pub fn from_search(axiom: impl Into<String>, found: Option<Witness>) -> Self {
        AxiomReport {
            axiom: axiom.into(),
            holds: found.is_none(),
            counterexample: found,
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: holds", self.axiom),
            Some(w) => write!(f, "{}: FAILS {}", self.axiom, w),
        }
    }
}

/// Evaluates `f` on every triple in `0..n` and returns the lexicographically
/// first failure. The outer index is spread over threads; the answer does not
/// depend on scheduling.
pub fn first_failing_triple<F>(n: usize, f: F) -> Option<Witness>
where
    F: Fn(usize, usize, usize) -> Option<Witness> + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if let Some(w) = f(a, b, c) {
                    return Some(w);
                }
            }
        }
        None
    })
}

/// Pair version of [`first_failing_triple`].
pub fn first_failing_pair<F>(n: usize, f: F) -> Option<Witness>
where
    F: Fn(usize, usize) -> Option<Witness> + Sync,
{
    use rayon::prelude::*;
    (0..n)
        .into_par_iter()
        .find_map_first(|a| (0..n).find_map(|b| f(a, b)))
}
