//! Integer tables for the special case `a_i = i`.
//!
//! Two table families: the k-permutation extrema of the sequence
//! `1..n` (A260355 for `v_min`, A331988 for `w_max`) and the pooled
//! block extrema of `1..kn` (A331889 `v_min`, A333446 `v_max`, A333420
//! `w_max`, A333445 `w_min`, and A072368 the `v_min(n,3)` row). Square
//! tables are emitted by antidiagonals with the inner index `n`
//! ascending; A072368 is a plain row over `n`. Closed forms are used
//! where they exist and brute force otherwise; a cell whose brute force
//! would exceed the enumeration ceiling is emitted as uncomputed rather
//! than fabricated.

use serde::Serialize;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::kperm::{self, KPermProblem, Which};
use crate::pool::{self, ap_closed_forms, BlockObjective, PoolProblem};
use crate::progression::ArithProgression;
use crate::rational::Rational;
use crate::Limits;

/// The implemented sequence tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OeisId {
    A260355,
    A331988,
    A072368,
    A331889,
    A333420,
    A333445,
    A333446,
}

impl OeisId {
    pub const ALL: [OeisId; 7] = [
        OeisId::A260355,
        OeisId::A331988,
        OeisId::A072368,
        OeisId::A331889,
        OeisId::A333420,
        OeisId::A333445,
        OeisId::A333446,
    ];

    pub fn describe(&self) -> &'static str {
        match self {
            OeisId::A260355 => "k-permutation v_min over 1..n",
            OeisId::A331988 => "k-permutation w_max over 1..n",
            OeisId::A072368 => "pooled v_min(n,3) over 1..3n",
            OeisId::A331889 => "pooled v_min over 1..kn",
            OeisId::A333420 => "pooled w_max over 1..kn",
            OeisId::A333445 => "pooled w_min over 1..kn",
            OeisId::A333446 => "pooled v_max over 1..kn",
        }
    }

    /// Linear sequences are emitted as a single row over `n`.
    pub fn is_linear(&self) -> bool {
        matches!(self, OeisId::A072368)
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for OeisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        OeisId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown sequence id `{s}`")))
    }
}

/// One table cell; `value: None` marks a cell whose computation exceeded
/// the enumeration ceiling.
#[derive(Clone, Debug, Serialize)]
pub struct OeisCell {
    pub n: usize,
    pub k: usize,
    pub value: Option<Rational>,
}

fn int_problem(n: usize, k: usize) -> KPermProblem {
    KPermProblem::new(ArithProgression::integers(n).to_sequence(), k)
        .expect("1..n is sorted and nonnegative")
}

fn brute_or_none(res: crate::error::Result<Rational>) -> Option<Rational> {
    match res {
        Ok(v) => Some(v),
        Err(Error::SizeLimit { .. }) => None,
        Err(e) => panic!("unexpected brute-force failure on integer input: {e}"),
    }
}

/// `v_min(n,k)` for `a_i = i`: catalog closed form when it applies,
/// brute force otherwise.
pub fn kperm_vmin_cell(n: usize, k: usize, limits: &Limits) -> Option<Rational> {
    let p = int_problem(n, k);
    kperm::closed_form_catalog(&p, Which::VMin).or_else(|| {
        brute_or_none(kperm::v_extrema_brute(&p, limits).map(|(min, _)| min.value))
    })
}

/// `w_max(n,k)` for `a_i = i`: catalog, then the progression closed
/// form, then brute force.
pub fn kperm_wmax_cell(n: usize, k: usize, limits: &Limits) -> Option<Rational> {
    let p = int_problem(n, k);
    kperm::closed_form_catalog(&p, Which::WMax)
        .or_else(|| crate::progression::w_max_ap(&ArithProgression::integers(n), k))
        .or_else(|| brute_or_none(kperm::w_extrema_brute(&p, limits).map(|(_, max)| max.value)))
}

/// Pooled `v_min(n,k)` on `1..kn`: the known closed forms (`n = 1`,
/// `k = 1`, `k = 2`), brute force otherwise.
pub fn pool_vmin_cell(n: usize, k: usize, limits: &Limits) -> Option<Rational> {
    if n == 1 {
        // single block: product of 1..k
        return Some(Rational::from_bigint((1..=k as i64).map(num::BigInt::from).product()));
    }
    if k == 1 {
        let s = (n * (n + 1) / 2) as i64;
        return Some(Rational::from_int(s));
    }
    if k == 2 {
        let n = n as i64;
        return Some(Rational::new(n * (n + 1) * (2 * n + 1), 3));
    }
    let p = PoolProblem::integers(n, k);
    brute_or_none(pool::pool_extrema_brute(&p, BlockObjective::V, limits).map(|(min, _)| min.value))
}

/// Pooled `w_max(n,k)` on `1..kn`: progression closed form when the
/// representability conditions hold, brute force otherwise.
pub fn pool_wmax_cell(n: usize, k: usize, limits: &Limits) -> Option<Rational> {
    let ap = ArithProgression::integers(n * k);
    if let Some((value, _)) = pool::w_max_variation(&ap, n, k).expect("length matches") {
        return Some(value);
    }
    let p = PoolProblem::integers(n, k);
    brute_or_none(pool::pool_extrema_brute(&p, BlockObjective::W, limits).map(|(_, max)| max.value))
}

/// Pooled `v_max(n,k)` on `1..kn`: always the consecutive-block closed
/// form.
pub fn pool_vmax_cell(n: usize, k: usize) -> Rational {
    ap_closed_forms(&ArithProgression::integers(n * k), n, k)
        .expect("length matches")
        .v_max
}

/// Pooled `w_min(n,k)` on `1..kn`: always the consecutive-block closed
/// form.
pub fn pool_wmin_cell(n: usize, k: usize) -> Rational {
    ap_closed_forms(&ArithProgression::integers(n * k), n, k)
        .expect("length matches")
        .w_min
}

fn cell_value(id: OeisId, n: usize, k: usize, limits: &Limits) -> Option<Rational> {
    match id {
        OeisId::A260355 => kperm_vmin_cell(n, k, limits),
        OeisId::A331988 => kperm_wmax_cell(n, k, limits),
        OeisId::A072368 => pool_vmin_cell(n, 3, limits),
        OeisId::A331889 => pool_vmin_cell(n, k, limits),
        OeisId::A333420 => pool_wmax_cell(n, k, limits),
        OeisId::A333445 => Some(pool_wmin_cell(n, k)),
        OeisId::A333446 => Some(pool_vmax_cell(n, k)),
    }
}

/// Emit a table region in the deterministic traversal order:
/// antidiagonals `n + k = 2, 3, ...` with `n` ascending within each
/// antidiagonal (for linear sequences, `n = 1..max_n`), capped at
/// `max_cells` when given.
pub fn table(
    id: OeisId,
    max_n: usize,
    max_k: usize,
    max_cells: Option<usize>,
    limits: &Limits,
) -> Vec<OeisCell> {
    let mut cells = Vec::new();
    let full = |cells: &Vec<OeisCell>| max_cells.is_some_and(|m| cells.len() >= m);
    if id.is_linear() {
        for n in 1..=max_n {
            if full(&cells) {
                break;
            }
            cells.push(OeisCell {
                n,
                k: 3,
                value: cell_value(id, n, 3, limits),
            });
        }
        return cells;
    }
    for s in 2..=(max_n + max_k) {
        for n in 1..s {
            let k = s - n;
            if n > max_n || k > max_k {
                continue;
            }
            if full(&cells) {
                return cells;
            }
            cells.push(OeisCell {
                n,
                k,
                value: cell_value(id, n, k, limits),
            });
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn lookup(cells: &[OeisCell], n: usize, k: usize) -> Rational {
        cells
            .iter()
            .find(|c| c.n == n && c.k == k)
            .and_then(|c| c.value.clone())
            .unwrap_or_else(|| panic!("cell ({n},{k}) missing or uncomputed"))
    }

    #[test]
    fn traversal_is_antidiagonal_with_inner_n() {
        let limits = Limits::default();
        let cells = table(OeisId::A333445, 3, 3, None, &limits);
        let order: Vec<(usize, usize)> = cells.iter().map(|c| (c.n, c.k)).collect();
        assert_eq!(
            order,
            vec![
                (1, 1),
                (1, 2),
                (2, 1),
                (1, 3),
                (2, 2),
                (3, 1),
                (2, 3),
                (3, 2),
                (3, 3)
            ]
        );
        let capped = table(OeisId::A333445, 3, 3, Some(4), &limits);
        assert_eq!(capped.len(), 4);
    }

    #[test]
    fn kperm_table_values() {
        let limits = Limits::default();
        let vmin = table(OeisId::A260355, 3, 3, None, &limits);
        assert_eq!(lookup(&vmin, 2, 2), r(4));
        assert_eq!(lookup(&vmin, 3, 2), r(10));
        assert_eq!(lookup(&vmin, 3, 3), r(18));
        assert_eq!(lookup(&vmin, 1, 3), r(1));
        assert_eq!(lookup(&vmin, 3, 1), r(6));

        let wmax = table(OeisId::A331988, 4, 3, None, &limits);
        assert_eq!(lookup(&wmax, 3, 2), r(64));
        assert_eq!(lookup(&wmax, 1, 3), r(3));
        assert_eq!(lookup(&wmax, 2, 3), r(20));
        assert_eq!(lookup(&wmax, 3, 3), r(216));
        assert_eq!(lookup(&wmax, 4, 3), r(3136));
    }

    #[test]
    fn pool_table_values() {
        let limits = Limits::default();
        let vmax = table(OeisId::A333446, 2, 2, None, &limits);
        assert_eq!(lookup(&vmax, 2, 2), r(14));
        let wmin = table(OeisId::A333445, 2, 2, None, &limits);
        assert_eq!(lookup(&wmin, 2, 2), r(21));
        let wmax = table(OeisId::A333420, 2, 3, None, &limits);
        assert_eq!(lookup(&wmax, 2, 2), r(25));
        assert_eq!(lookup(&wmax, 2, 3), r(110));
        let vmin = table(OeisId::A331889, 2, 3, None, &limits);
        assert_eq!(lookup(&vmin, 2, 2), r(10));
        assert_eq!(lookup(&vmin, 2, 3), r(54));
        let row = table(OeisId::A072368, 2, 1, None, &limits);
        assert_eq!(lookup(&row, 1, 3), r(6));
        assert_eq!(lookup(&row, 2, 3), r(54));
    }

    #[test]
    fn oversized_cells_are_uncomputed_not_fabricated() {
        let limits = Limits { max_nodes: 5 };
        // (3,3) brute needs 280 partitions; no closed form for pooled
        // v_min at k=3
        let cell = table(OeisId::A331889, 3, 3, None, &limits)
            .into_iter()
            .find(|c| c.n == 3 && c.k == 3)
            .unwrap();
        assert!(cell.value.is_none());
    }

    #[test]
    fn id_parsing() {
        assert_eq!("A333420".parse::<OeisId>().unwrap(), OeisId::A333420);
        assert_eq!("a260355".parse::<OeisId>().unwrap(), OeisId::A260355);
        assert!("A000001".parse::<OeisId>().is_err());
    }
}
