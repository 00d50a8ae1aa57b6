//! Searches small cubic graphs for counterexamples to open questions on
//! S-packing colorings.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::enumerate::{EnumerateError, Provider};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::named;
use crate::sequence::SSequence;
use crate::solver::{decide_with, Outcome, SolverOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Question {
    /// Every subcubic graph other than Petersen is (1,1,2,3)-colorable?
    #[serde(rename = "1123")]
    OneOneTwoThree,
    /// Every subcubic graph other than Petersen is (1,2,2,2,2,2)-colorable?
    #[serde(rename = "122222")]
    OneTwoFive,
    /// Is some 3-irregular subcubic graph not (1,2,2,3)-colorable?
    #[serde(rename = "1223-irregular")]
    Irregular1223,
    /// Every 3-irregular subcubic graph is (1,1,3)-colorable?
    #[serde(rename = "113-irregular")]
    Irregular113,
    /// The subdivision of every subcubic graph is (1,2,3,4,5)-colorable?
    #[serde(rename = "12345-subdivision")]
    Subdivision12345,
    /// Is there a cubic graph with packing chromatic number above 13?
    #[serde(rename = "packing-13")]
    Packing13,
}

impl Question {
    pub const ALL: [Question; 6] = [
        Question::OneOneTwoThree,
        Question::OneTwoFive,
        Question::Irregular1223,
        Question::Irregular113,
        Question::Subdivision12345,
        Question::Packing13,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Question::OneOneTwoThree => "1123",
            Question::OneTwoFive => "122222",
            Question::Irregular1223 => "1223-irregular",
            Question::Irregular113 => "113-irregular",
            Question::Subdivision12345 => "12345-subdivision",
            Question::Packing13 => "packing-13",
        }
    }

    pub fn sequence(self) -> SSequence {
        let terms = match self {
            Question::OneOneTwoThree => vec![1, 1, 2, 3],
            Question::OneTwoFive => vec![1, 2, 2, 2, 2, 2],
            Question::Irregular1223 => vec![1, 2, 2, 3],
            Question::Irregular113 => vec![1, 1, 3],
            Question::Subdivision12345 => vec![1, 2, 3, 4, 5],
            Question::Packing13 => (1..=13).collect(),
        };
        SSequence::new(terms).expect("fixed sequences are valid")
    }

    /// The 3-irregular and subdivision questions are asked of `S(G)`, which
    /// is 3-irregular for every cubic `G`.
    pub fn subdivides(self) -> bool {
        matches!(
            self,
            Question::Irregular1223 | Question::Irregular113 | Question::Subdivision12345
        )
    }

    pub fn excludes_petersen(self) -> bool {
        matches!(self, Question::OneOneTwoThree | Question::OneTwoFive)
    }

    pub fn description(self) -> &'static str {
        match self {
            Question::OneOneTwoThree => "cubic graphs other than Petersen that are not (1,1,2,3)-colorable",
            Question::OneTwoFive => "cubic graphs other than Petersen that are not (1,2,2,2,2,2)-colorable",
            Question::Irregular1223 => "subdivisions S(G) that are not (1,2,2,3)-colorable",
            Question::Irregular113 => "subdivisions S(G) that are not (1,1,3)-colorable",
            Question::Subdivision12345 => "subdivisions S(G) that are not (1,2,3,4,5)-colorable",
            Question::Packing13 => "cubic graphs that are not (1,2,...,13)-colorable",
        }
    }
}

impl fmt::Display for Question {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Question {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Question::ALL.into_iter().find(|q| q.id() == s).ok_or_else(|| {
            let ids: Vec<&str> = Question::ALL.iter().map(|q| q.id()).collect();
            format!("unknown question `{s}` (one of {})", ids.join(", "))
        })
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ScreeningReport {
    pub question: Question,
    pub description: String,
    pub sequence: SSequence,
    pub n_min: usize,
    pub n_max: usize,
    pub graphs_checked: usize,
    /// graph6 of the cubic graph `G` (not of `S(G)`).
    pub counterexamples: Vec<String>,
    /// Graphs on which the budget ran out.
    pub unknown: Vec<String>,
    pub complete: bool,
}

/// Screens the provider's cubic graphs of orders `4..=n_max`.
pub fn screen(
    question: Question,
    n_max: usize,
    provider: &Provider,
    opts: &SolverOptions,
) -> Result<ScreeningReport, EnumerateError> {
    let graphs: Vec<Graph> = provider.graphs(4, n_max)?.into_values().flatten().collect();
    Ok(screen_graphs(question, 4, n_max, &graphs, opts))
}

pub fn screen_graphs(
    question: Question,
    n_min: usize,
    n_max: usize,
    graphs: &[Graph],
    opts: &SolverOptions,
) -> ScreeningReport {
    let s = question.sequence();
    let petersen = canonical_form(&named::petersen()).expect("small graph");
    let target = |g: &Graph| if question.subdivides() { g.subdivide() } else { g.clone() };
    let verdicts: Vec<(String, Outcome)> = graphs
        .par_iter()
        .filter(|g| !(question.excludes_petersen() && canonical_form(g).ok() == Some(petersen.clone())))
        .map(|g| (write_graph6(g), decide_with(&target(g), &s, opts).outcome))
        .collect();
    let mut counterexamples = Vec::new();
    let mut unknown = Vec::new();
    for (code, outcome) in &verdicts {
        match outcome {
            Outcome::Sat(_) => {}
            Outcome::Unsat => counterexamples.push(code.clone()),
            Outcome::Unknown => unknown.push(code.clone()),
        }
    }
    // a second search without symmetry breaking must agree
    let recheck = SolverOptions { symmetry_breaking: false, ..*opts };
    counterexamples.retain(|code| {
        let g = crate::graph6::parse_graph6(code.as_bytes()).expect("written by write_graph6");
        match decide_with(&target(&g), &s, &recheck).outcome {
            Outcome::Unsat => true,
            Outcome::Unknown => {
                unknown.push(code.clone());
                false
            }
            Outcome::Sat(_) => panic!("verdicts disagree on {code}"),
        }
    });
    ScreeningReport {
        question,
        description: question.description().into(),
        sequence: s,
        n_min,
        n_max,
        graphs_checked: verdicts.len(),
        complete: unknown.is_empty(),
        counterexamples,
        unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_roundtrip() {
        for q in Question::ALL {
            assert_eq!(q.id().parse::<Question>().unwrap(), q);
        }
        assert!("1234".parse::<Question>().is_err());
    }

    #[test]
    fn petersen_is_excluded() {
        let r = screen_graphs(Question::OneOneTwoThree, 10, 10, &[named::petersen()], &SolverOptions::default());
        assert_eq!(r.graphs_checked, 0);
        let r = screen_graphs(Question::Irregular113, 10, 10, &[named::petersen()], &SolverOptions::default());
        assert_eq!(r.graphs_checked, 1);
    }

    #[test]
    fn finds_and_rechecks_counterexample() {
        // not the Petersen graph itself, but a Petersen component keeps it UNSAT
        let g = named::petersen().disjoint_union(&named::complete(4));
        let graphs = [named::complete(4), g.clone()];
        let r = screen_graphs(Question::OneOneTwoThree, 4, 14, &graphs, &SolverOptions::default());
        assert!(r.complete);
        assert_eq!(r.counterexamples, vec![write_graph6(&g)]);
    }
}
