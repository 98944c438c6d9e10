//! Extremal search results and the deterministic merge used by every
//! brute-force engine in the crate.

use serde::Serialize;

use crate::rational::Rational;

/// An extremal value together with one witness, the number of optima seen
/// and the number of candidates explored. Re-evaluating the witness with
/// the corresponding value operation reproduces `value` exactly.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalResult<W> {
    pub value: Rational,
    pub witness: W,
    pub optima_count: u64,
    pub nodes_explored: u64,
}

impl<W> ExtremalResult<W> {
    pub fn map_witness<V>(self, f: impl FnOnce(W) -> V) -> ExtremalResult<V> {
        ExtremalResult {
            value: self.value,
            witness: f(self.witness),
            optima_count: self.optima_count,
            nodes_explored: self.nodes_explored,
        }
    }
}

/// Running (min, max) accumulator over candidates with `Ord` witnesses.
///
/// The merge is associative and commutative and breaks value ties by the
/// lexicographically smallest witness, so parallel reductions produce the
/// same result as sequential ones regardless of the split.
#[derive(Clone, Debug)]
pub(crate) struct MinMaxAcc<W: Ord + Clone> {
    pub min_value: Rational,
    pub min_witness: W,
    pub min_count: u64,
    pub max_value: Rational,
    pub max_witness: W,
    pub max_count: u64,
    pub nodes: u64,
}

impl<W: Ord + Clone> MinMaxAcc<W> {
    pub fn seed(value: Rational, witness: W) -> Self {
        MinMaxAcc {
            min_value: value.clone(),
            min_witness: witness.clone(),
            min_count: 1,
            max_value: value,
            max_witness: witness,
            max_count: 1,
            nodes: 1,
        }
    }

    pub fn observe(&mut self, value: Rational, witness: &W) {
        self.nodes += 1;
        match value.cmp(&self.min_value) {
            std::cmp::Ordering::Less => {
                self.min_value = value.clone();
                self.min_witness = witness.clone();
                self.min_count = 1;
            }
            std::cmp::Ordering::Equal => {
                self.min_count += 1;
                if *witness < self.min_witness {
                    self.min_witness = witness.clone();
                }
            }
            std::cmp::Ordering::Greater => {}
        }
        match value.cmp(&self.max_value) {
            std::cmp::Ordering::Greater => {
                self.max_value = value;
                self.max_witness = witness.clone();
                self.max_count = 1;
            }
            std::cmp::Ordering::Equal => {
                self.max_count += 1;
                if *witness < self.max_witness {
                    self.max_witness = witness.clone();
                }
            }
            std::cmp::Ordering::Less => {}
        }
    }

    pub fn merge(mut a: Self, b: Self) -> Self {
        a.nodes += b.nodes;
        match b.min_value.cmp(&a.min_value) {
            std::cmp::Ordering::Less => {
                a.min_value = b.min_value;
                a.min_witness = b.min_witness;
                a.min_count = b.min_count;
            }
            std::cmp::Ordering::Equal => {
                a.min_count += b.min_count;
                if b.min_witness < a.min_witness {
                    a.min_witness = b.min_witness;
                }
            }
            std::cmp::Ordering::Greater => {}
        }
        match b.max_value.cmp(&a.max_value) {
            std::cmp::Ordering::Greater => {
                a.max_value = b.max_value;
                a.max_witness = b.max_witness;
                a.max_count = b.max_count;
            }
            std::cmp::Ordering::Equal => {
                a.max_count += b.max_count;
                if b.max_witness < a.max_witness {
                    a.max_witness = b.max_witness;
                }
            }
            std::cmp::Ordering::Less => {}
        }
        a
    }

    pub fn into_results(self) -> (ExtremalResult<W>, ExtremalResult<W>) {
        (
            ExtremalResult {
                value: self.min_value,
                witness: self.min_witness,
                optima_count: self.min_count,
                nodes_explored: self.nodes,
            },
            ExtremalResult {
                value: self.max_value,
                witness: self.max_witness,
                optima_count: self.max_count,
                nodes_explored: self.nodes,
            },
        )
    }
}
