//! Sequences of rationals with a tracked sortedness flag.

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A finite sequence of rationals. `sorted` records whether the values are
/// known to be nondecreasing; constructors either verify or establish it.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct OrderedSequence {
    values: Vec<Rational>,
    sorted: bool,
}

impl OrderedSequence {
    /// Wrap values that must already be nondecreasing.
    pub fn sorted(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("empty sequence".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid(
                "sequence is not nondecreasing (pass --sort or sort it first)".into(),
            ));
        }
        Ok(OrderedSequence {
            values,
            sorted: true,
        })
    }

    /// Sort values ascending and wrap them.
    pub fn from_unsorted(mut values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("empty sequence".into()));
        }
        values.sort();
        Ok(OrderedSequence {
            values,
            sorted: true,
        })
    }

    /// Wrap values in their given order without claiming sortedness.
    pub fn raw(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("empty sequence".into()));
        }
        let sorted = values.windows(2).all(|w| w[0] <= w[1]);
        Ok(OrderedSequence { values, sorted })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_sorted(&self) -> bool {
        self.sorted
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| v.is_nonnegative())
    }

    /// 1-indexed access matching the usual `a_i` notation.
    pub fn at(&self, i: usize) -> &Rational {
        &self.values[i - 1]
    }
}

impl fmt::Display for OrderedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for OrderedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse a comma-separated list of rationals.
pub fn parse_rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|t| t.trim().parse::<Rational>())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sortedness_is_checked() {
        let ok = OrderedSequence::sorted(parse_rationals("1,2,2,5/2").unwrap());
        assert!(ok.is_ok());
        let bad = OrderedSequence::sorted(parse_rationals("2,1").unwrap());
        assert!(bad.is_err());
        let fixed = OrderedSequence::from_unsorted(parse_rationals("2,1").unwrap()).unwrap();
        assert_eq!(fixed.values()[0], Rational::from_int(1));
        assert!(fixed.is_sorted());
    }

    #[test]
    fn raw_detects_order() {
        let raw = OrderedSequence::raw(parse_rationals("3,1,2").unwrap()).unwrap();
        assert!(!raw.is_sorted());
        assert!(raw.is_nonnegative());
        let neg = OrderedSequence::raw(parse_rationals("-1,2").unwrap()).unwrap();
        assert!(!neg.is_nonnegative());
    }
}
