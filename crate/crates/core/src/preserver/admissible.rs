//! Admissible derivative-order tuples.
//!
//! A strictly increasing tuple m of derivative orders is admissible for
//! a profile and dimension n when no other strictly increasing tuple l
//! of length n with Σl ≤ Σm has all of its orders alive (nonzero
//! derivative).  `is_admissible` decides this by exhaustive search and
//! produces a witness on failure; `admissible_characterize` derives the
//! closed-form law: with fewer than n alive orders every tuple is
//! admissible, otherwise exactly the tuples with Σ below the n lowest
//! alive orders' sum, plus that lowest tuple itself.

use super::profile::{DerivProfile, ProfileTooShort, Sign};
use serde::Serialize;
use std::fmt;

/// Outcome of the exhaustive admissibility check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum AdmissibleOutcome {
    Admissible,
    NotAdmissible { witness: Vec<usize> },
}

/// Closed-form admissibility law for one profile and dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "law")]
pub enum AdmissibleLaw {
    /// Fewer than n derivative orders are alive, so no tuple can be beaten.
    AllAdmissible,
    /// Admissible iff the tuple sum is below `sum`, or the tuple equals
    /// `lowest` (the n lowest alive orders, whose sum is `sum`).
    Threshold { lowest: Vec<usize>, sum: usize },
}

impl AdmissibleLaw {
    /// Whether the law admits a strictly increasing tuple.
    pub fn admits(&self, tuple: &[usize]) -> bool {
        match self {
            AdmissibleLaw::AllAdmissible => true,
            AdmissibleLaw::Threshold { lowest, sum } => {
                tuple.iter().sum::<usize>() < *sum || tuple == lowest.as_slice()
            }
        }
    }
}

impl fmt::Display for AdmissibleLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdmissibleLaw::AllAdmissible => write!(f, "ALL_ADMISSIBLE"),
            AdmissibleLaw::Threshold { lowest, sum } => {
                let tuple = lowest
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                write!(f, "admissible iff sum < {sum} or tuple = ({tuple})")
            }
        }
    }
}

fn assert_strictly_increasing(tuple: &[usize]) {
    assert!(!tuple.is_empty(), "tuple must be nonempty");
    assert!(
        tuple.windows(2).all(|w| w[0] < w[1]),
        "tuple must be strictly increasing"
    );
}

/// All strictly increasing tuples of length n with sum ≤ max_sum, in
/// ascending lexicographic order.
fn enumerate_increasing(n: usize, max_sum: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, left: usize, budget: usize, buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(buf.clone());
            return;
        }
        let mut v = start;
        // remaining `left` entries are at least v, v+1, …, v+left−1
        while left * v + left * (left - 1) / 2 <= budget {
            buf.push(v);
            rec(v + 1, left - 1, budget - v, buf, out);
            buf.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    rec(0, n, max_sum, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Exhaustive admissibility decision with witness.  Errs only when the
/// verdict would depend on derivative orders the profile does not cover.
pub fn is_admissible(
    tuple: &[usize],
    profile: &DerivProfile,
    n: usize,
) -> Result<AdmissibleOutcome, ProfileTooShort> {
    assert_eq!(tuple.len(), n, "tuple length must equal the dimension");
    assert_strictly_increasing(tuple);

    let total: usize = tuple.iter().sum();
    let mut undecided = false;
    for cand in enumerate_increasing(n, total) {
        if cand == tuple {
            continue;
        }
        let mut alive = true;
        let mut unknown = false;
        for &k in &cand {
            match profile.sign(k) {
                Some(Sign::Zero) => {
                    alive = false;
                    break;
                }
                Some(_) => {}
                None => unknown = true,
            }
        }
        if alive && !unknown {
            return Ok(AdmissibleOutcome::NotAdmissible { witness: cand });
        }
        if alive && unknown {
            undecided = true;
        }
    }
    if undecided {
        Err(ProfileTooShort {
            known: profile.known_len(),
        })
    } else {
        Ok(AdmissibleOutcome::Admissible)
    }
}

/// Closed-form law equivalent to [`is_admissible`] over all tuples.
pub fn admissible_characterize(
    profile: &DerivProfile,
    n: usize,
) -> Result<AdmissibleLaw, ProfileTooShort> {
    assert!(n >= 1);
    let alive = profile.lowest_alive(0, n)?;
    if alive.len() < n {
        Ok(AdmissibleLaw::AllAdmissible)
    } else {
        let sum = alive.iter().sum();
        Ok(AdmissibleLaw::Threshold { lowest: alive, sum })
    }
}
