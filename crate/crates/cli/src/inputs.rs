//! Argument and file parsing into core types.

use rearrange_core::algebra::SymMatrix;
use rearrange_core::progression::{ArithProgression, GeomProgression};
use rearrange_core::sequence::parse_rationals;
use rearrange_core::{OrderedSequence, Rational};

use crate::CliError;

/// Where a sequence came from; progression inputs unlock their closed
/// forms.
pub enum SeqSource {
    Explicit,
    Ap(ArithProgression),
    Gp(GeomProgression),
}

pub struct SeqInput {
    pub seq: OrderedSequence,
    pub source: SeqSource,
}

pub fn parse_seq_args(
    n: Option<usize>,
    seq: &Option<String>,
    ap: &Option<String>,
    int: bool,
    gp: &Option<String>,
    sort: bool,
    len_label: &str,
) -> Result<SeqInput, CliError> {
    let picked =
        usize::from(seq.is_some()) + usize::from(ap.is_some()) + usize::from(int) + usize::from(gp.is_some());
    if picked != 1 {
        return Err(CliError::Usage(
            "pass exactly one of --seq, --ap, --int, --gp".into(),
        ));
    }
    if let Some(s) = seq {
        let vals = parse_rationals(s).map_err(CliError::Core)?;
        if let Some(n) = n {
            if vals.len() != n {
                return Err(CliError::Usage(format!(
                    "--seq has {} entries but {len_label} = {n}",
                    vals.len()
                )));
            }
        }
        let seq = if sort {
            OrderedSequence::from_unsorted(vals)
        } else {
            OrderedSequence::sorted(vals)
        }
        .map_err(CliError::Core)?;
        return Ok(SeqInput {
            seq,
            source: SeqSource::Explicit,
        });
    }
    let n = n.ok_or_else(|| {
        CliError::Usage(format!("--n is required with --ap/--int/--gp ({len_label})"))
    })?;
    if int {
        let ap = ArithProgression::integers(n);
        return Ok(SeqInput {
            seq: ap.to_sequence(),
            source: SeqSource::Ap(ap),
        });
    }
    if let Some(spec) = ap {
        let parts = parse_rationals(spec).map_err(CliError::Core)?;
        if parts.len() != 2 {
            return Err(CliError::Usage("--ap expects `a1,d`".into()));
        }
        let ap = ArithProgression::new(parts[0].clone(), parts[1].clone(), n)
            .map_err(CliError::Core)?;
        return Ok(SeqInput {
            seq: ap.to_sequence(),
            source: SeqSource::Ap(ap),
        });
    }
    let spec = gp.as_ref().expect("picked == 1");
    let parts = parse_rationals(spec).map_err(CliError::Core)?;
    if parts.len() != 4 {
        return Err(CliError::Usage("--gp expects `c,d,b1,db`".into()));
    }
    let b = ArithProgression::new(parts[2].clone(), parts[3].clone(), n).map_err(CliError::Core)?;
    let gp = GeomProgression::new(parts[0].clone(), parts[1].clone(), b).map_err(CliError::Core)?;
    let terms = gp.terms().ok_or_else(|| {
        CliError::Usage("--gp exponents must be integers for explicit terms".into())
    })?;
    Ok(SeqInput {
        seq: OrderedSequence::from_unsorted(terms).map_err(CliError::Core)?,
        source: SeqSource::Gp(gp),
    })
}

pub fn read_to_string(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))
}

pub fn load_matrix(path: &str) -> Result<SymMatrix, CliError> {
    let text = read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("`{path}`: {e}")))
}

pub fn load_chain(path: &str) -> Result<Vec<SymMatrix>, CliError> {
    let text = read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("`{path}`: {e}")))
}

pub fn load_pool_file(path: &str) -> Result<Vec<Rational>, CliError> {
    let text = read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("`{path}`: {e}")))
}

pub fn parse_vector(spec: &str) -> Result<Vec<Rational>, CliError> {
    parse_rationals(spec).map_err(CliError::Core)
}
