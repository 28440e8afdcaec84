//! Degree sequences and the scalar parameters every decision is made from.
//!
//! A [`DegreeSequence`] is kept in canonical (non-increasing) order together
//! with the permutation back to the caller's input order, so realizations can
//! be reported against the original vertex positions.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Upper limit on the number of entries produced by `a^k` expansion.
pub const MAX_ENTRIES: usize = 10_000_000;

/// `index` and `offset` are 0-based; messages print them 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty sequence")]
    Empty,
    #[error("token {} at column {}: `{token}` is not an integer or INT^INT term", index + 1, offset + 1)]
    BadToken {
        index: usize,
        offset: usize,
        token: String,
    },
    #[error("token {} at column {}: entry {value} must be at least 1", index + 1, offset + 1)]
    NonPositiveEntry {
        index: usize,
        offset: usize,
        value: i64,
    },
    #[error("token {} at column {}: exponent {value} must be at least 1", index + 1, offset + 1)]
    NonPositiveExponent {
        index: usize,
        offset: usize,
        value: i64,
    },
    #[error("sequence expands to more than {MAX_ENTRIES} entries")]
    TooLong,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("degree sequence is empty")]
    Empty,
    #[error("degree {value} at position {position} is not positive")]
    NonPositive { position: usize, value: u32 },
    #[error("volume {volume} is odd, so this is not a degree sequence")]
    OddVolume { volume: u64 },
}

/// A non-increasing multiset of positive degrees.
///
/// `perm[i]` is the 0-based position in the original input of the entry now
/// stored at canonical position `i`. Equal entries keep their input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    entries: Vec<u32>,
    perm: Vec<usize>,
}

impl DegreeSequence {
    /// Canonicalizes `input` (any order). Rejects empty input and zero entries.
    pub fn new(input: Vec<u32>) -> Result<Self, SequenceError> {
        if input.is_empty() {
            return Err(SequenceError::Empty);
        }
        if let Some(position) = input.iter().position(|&d| d == 0) {
            return Err(SequenceError::NonPositive { position, value: 0 });
        }
        let mut perm: Vec<usize> = (0..input.len()).collect();
        // stable: ties stay in input order
        perm.sort_by(|&a, &b| input[b].cmp(&input[a]));
        let entries = perm.iter().map(|&i| input[i]).collect();
        Ok(Self { entries, perm })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn volume(&self) -> u64 {
        self.entries.iter().map(|&d| u64::from(d)).sum()
    }

    /// 1-based access matching the usual `d_i` indexing; `None` past the end.
    pub fn nth(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|i| self.entries.get(i).copied())
    }

    pub fn max_degree(&self) -> u32 {
        self.entries[0]
    }

    /// Entries in the caller's original order.
    pub fn in_input_order(&self) -> Vec<u32> {
        let mut out = vec![0; self.entries.len()];
        for (canon, &orig) in self.perm.iter().enumerate() {
            out[orig] = self.entries[canon];
        }
        out
    }

    /// True when every entry equals `value`.
    pub fn is_constant(&self, value: u32) -> bool {
        self.entries.iter().all(|&d| d == value)
    }

    pub fn params(&self) -> Result<SequenceParams, SequenceError> {
        SequenceParams::of(self)
    }
}

impl fmt::Display for DegreeSequence {
    /// Compact exponent notation, e.g. `4,3,2^6,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.entries.len() {
            let d = self.entries[i];
            let run = self.entries[i..].iter().take_while(|&&x| x == d).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Parses `INT` / `INT^INT` tokens separated by commas or whitespace.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence, ParseError> {
    let mut values: Vec<u32> = Vec::new();
    for (index, (offset, token)) in tokens(text).enumerate() {
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b, Some(e)),
            None => (token, None),
        };
        let bad = || ParseError::BadToken {
            index,
            offset,
            token: token.to_string(),
        };
        let base: i64 = base.parse().map_err(|_| bad())?;
        let exp: i64 = match exp {
            Some(e) => e.parse().map_err(|_| bad())?,
            None => 1,
        };
        if base < 1 {
            return Err(ParseError::NonPositiveEntry {
                index,
                offset,
                value: base,
            });
        }
        if exp < 1 {
            return Err(ParseError::NonPositiveExponent {
                index,
                offset,
                value: exp,
            });
        }
        let base = u32::try_from(base).map_err(|_| bad())?;
        let exp = usize::try_from(exp).map_err(|_| ParseError::TooLong)?;
        if exp > MAX_ENTRIES || values.len() + exp > MAX_ENTRIES {
            return Err(ParseError::TooLong);
        }
        values.extend(std::iter::repeat_n(base, exp));
    }
    if values.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(DegreeSequence::new(values).expect("entries checked positive"))
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut consumed = 0;
    std::iter::from_fn(move || {
        let skip = rest
            .find(|c: char| !(c == ',' || c.is_whitespace()))
            .unwrap_or(rest.len());
        consumed += skip;
        rest = &rest[skip..];
        if rest.is_empty() {
            return None;
        }
        let len = rest
            .find(|c: char| c == ',' || c.is_whitespace())
            .unwrap_or(rest.len());
        let tok = &rest[..len];
        let at = consumed;
        consumed += len;
        rest = &rest[len..];
        Some((at, tok))
    })
}

/// The derived scalars of a degree sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SequenceParams {
    pub n: u64,
    pub volume: u64,
    /// Edge count of any realization.
    pub m: u64,
    /// Number of entries equal to 1.
    pub mult1: u64,
    /// Number of odd entries greater than 1.
    pub mult_odd: u64,
    /// Bridge parameter: a lower bound on the bridges of any cactus realization.
    pub beta: u64,
}

impl SequenceParams {
    pub fn of(d: &DegreeSequence) -> Result<Self, SequenceError> {
        let volume = d.volume();
        if volume % 2 == 1 {
            return Err(SequenceError::OddVolume { volume });
        }
        let mut mult1 = 0u64;
        let mut mult_odd = 0u64;
        for &x in d.entries() {
            if x == 1 {
                mult1 += 1;
            } else if x % 2 == 1 {
                mult_odd += 1;
            }
        }
        assert!(
            (mult1 + mult_odd).is_multiple_of(2),
            "odd-entry count must be even for even volume"
        );
        Ok(Self {
            n: d.len() as u64,
            volume,
            m: volume / 2,
            mult1,
            mult_odd,
            beta: bridge_parameter(mult1, mult_odd),
        })
    }

    pub fn cactus_bound(&self) -> i64 {
        cactus_edge_bound(self.n, self.beta)
    }

    pub fn bicactus_bound(&self) -> i64 {
        bicactus_edge_bound(self.n, self.beta)
    }
}

pub fn bridge_parameter(mult1: u64, mult_odd: u64) -> u64 {
    mult1.max((mult1 + mult_odd) / 2)
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// `floor((3(n-1) - beta) / 2)`: the most edges a cactus with this `n` and
/// bridge parameter can have.
pub fn cactus_edge_bound(n: u64, beta: u64) -> i64 {
    floor_div(3 * (n as i64 - 1) - beta as i64, 2)
}

/// `floor((4(n-1) - beta) / 3)`: the bipartite counterpart of
/// [`cactus_edge_bound`].
pub fn bicactus_edge_bound(n: u64, beta: u64) -> i64 {
    floor_div(4 * (n as i64 - 1) - beta as i64, 3)
}

/// `2 floor(2(n-1-b)/3) + b`, the bi-cactus edge bound in terms of the
/// actual bridge count `b`.
pub fn bicactus_bridge_bound(n: u64, bridges: u64) -> i64 {
    let b = bridges as i64;
    2 * floor_div(2 * (n as i64 - 1 - b), 3) + b
}

/// Evaluates the three floor identities that link the bi-cactus bound in
/// `beta` to the bound in the bridge count. Only used as a test target.
pub fn technical_identities_hold(n: u64, beta: u64) -> bool {
    let bound = bicactus_edge_bound(n, beta);
    let at_beta = bicactus_bridge_bound(n, beta);
    let at_beta1 = bicactus_bridge_bound(n, beta + 1);
    let at_beta2 = bicactus_bridge_bound(n, beta + 2);
    let first = bound == at_beta.max(at_beta1);
    let second = at_beta >= at_beta2;
    let nm1 = n as i64 - 1;
    let third = floor_div(floor_div(4 * nm1 + 1, 3), 2) == floor_div(2 * nm1, 3);
    first && second && third
}
