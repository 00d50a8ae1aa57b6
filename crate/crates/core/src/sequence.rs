//! Non-decreasing sequences of packing radii.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("empty sequence")]
    Empty,
    #[error("term {index} (`{text}`) is not a positive integer")]
    NotPositive { index: usize, text: String },
    #[error("sequence is not non-decreasing at term {index} ({prev} > {next})")]
    Decreasing { index: usize, prev: u32, next: u32 },
    #[error("prefix length {len} out of range 1..={max}")]
    PrefixOutOfRange { len: usize, max: usize },
}

/// A sequence `(s_1, ..., s_k)` with `1 <= s_1 <= ... <= s_k`.
///
/// Slot `i` of a coloring carries radius `terms()[i]`: two vertices in slot
/// `i` must be at distance greater than `s_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct SSequence(Vec<u32>);

impl SSequence {
    pub fn new(terms: Vec<u32>) -> Result<Self, SequenceError> {
        if terms.is_empty() {
            return Err(SequenceError::Empty);
        }
        for (index, &t) in terms.iter().enumerate() {
            if t == 0 {
                return Err(SequenceError::NotPositive {
                    index,
                    text: "0".into(),
                });
            }
        }
        for index in 1..terms.len() {
            if terms[index - 1] > terms[index] {
                return Err(SequenceError::Decreasing {
                    index,
                    prev: terms[index - 1],
                    next: terms[index],
                });
            }
        }
        Ok(SSequence(terms))
    }

    /// `(1, 2, ..., k)`, the packing coloring sequence.
    pub fn packing(k: usize) -> Self {
        SSequence((1..=k as u32).collect())
    }

    /// `(first, rest, rest, ..., rest)` of length `len`.
    pub fn repeated(first: u32, rest: u32, len: usize) -> Self {
        let mut terms = vec![first];
        terms.extend(std::iter::repeat(rest).take(len.saturating_sub(1)));
        SSequence::new(terms).expect("valid repeated sequence")
    }

    pub fn terms(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn radius(&self, slot: usize) -> u32 {
        self.0[slot]
    }

    /// The first `len` terms.
    pub fn prefix(&self, len: usize) -> Result<SSequence, SequenceError> {
        if len == 0 || len > self.len() {
            return Err(SequenceError::PrefixOutOfRange {
                len,
                max: self.len(),
            });
        }
        Ok(SSequence(self.0[..len].to_vec()))
    }

    /// True when every `stronger`-coloring is also a `self`-coloring: `self`
    /// has at least as many slots and is termwise no larger.
    pub fn dominates(&self, stronger: &SSequence) -> bool {
        self.len() >= stronger.len() && self.0.iter().zip(&stronger.0).all(|(w, s)| w <= s)
    }

    /// The sequence `(1, 2s_1 + 1, ..., 2s_k + 1)` colouring a subdivision.
    pub fn subdivision_lift(&self) -> SSequence {
        let mut terms = vec![1];
        terms.extend(self.0.iter().map(|&s| 2 * s + 1));
        SSequence(terms)
    }

    /// Runs of equal radii as `start..end` slot ranges.
    pub fn groups(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.0.len() {
            if i == self.0.len() || self.0[i] != self.0[start] {
                out.push(start..i);
                start = i;
            }
        }
        out
    }
}

impl FromStr for SSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Err(SequenceError::Empty);
        }
        let terms = s
            .split(',')
            .enumerate()
            .map(|(index, part)| {
                let part = part.trim();
                part.parse::<u32>()
                    .ok()
                    .filter(|&t| t > 0)
                    .ok_or_else(|| SequenceError::NotPositive {
                        index,
                        text: part.to_string(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        SSequence::new(terms)
    }
}

impl fmt::Display for SSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl TryFrom<Vec<u32>> for SSequence {
    type Error = SequenceError;

    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        SSequence::new(v)
    }
}

impl From<SSequence> for Vec<u32> {
    fn from(s: SSequence) -> Self {
        s.0
    }
}
