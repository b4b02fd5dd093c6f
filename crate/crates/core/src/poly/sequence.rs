//! Unimodality and the log-concavity hierarchy of nonnegative sequences.
//!
//! All inequalities are decided by integer cross-multiplication. For
//! `1 ≤ k ≤ m−1`:
//!
//! * log-concave: `a_k² ≥ a_{k−1}·a_{k+1}`
//! * ordered LC: `k·a_k² ≥ (k+1)·a_{k−1}·a_{k+1}`
//! * ultra LC: `k(m−k)·a_k² ≥ (k+1)(m−k+1)·a_{k−1}·a_{k+1}`
//!
//! The window `m` matters for ultra log-concavity, so callers pass it
//! explicitly and the sequence must have exactly `m + 1` entries.

use super::{is_real_rooted, Polynomial};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    /// First index where the property fails.
    pub first_failure: Option<usize>,
}

impl Verdict {
    fn from_failure(first_failure: Option<usize>) -> Self {
        Verdict {
            holds: first_failure.is_none(),
            first_failure,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub unimodal: Verdict,
    pub log_concave: Verdict,
    pub ordered_lc: Verdict,
    pub ultra_lc: Verdict,
    /// `None` for the identically zero sequence.
    pub real_rooted: Option<bool>,
}

impl SequenceReport {
    /// The chain ultra ⇒ ordered ⇒ LC and real-rooted ⇒ ultra.
    pub fn hierarchy_consistent(&self) -> bool {
        (!self.ultra_lc.holds || self.ordered_lc.holds)
            && (!self.ordered_lc.holds || self.log_concave.holds)
            && (self.real_rooted != Some(true) || self.ultra_lc.holds)
    }
}

fn first_failure(m: usize, ok: impl Fn(usize) -> bool) -> Option<usize> {
    (1..m).find(|&k| !ok(k))
}

fn unimodal_failure(a: &[BigInt]) -> Option<usize> {
    let m = a.len().saturating_sub(1);
    let mut i = 0;
    while i < m && a[i] <= a[i + 1] {
        i += 1;
    }
    while i < m && a[i] >= a[i + 1] {
        i += 1;
    }
    (i < m).then_some(i + 1)
}

/// Checks `a` (length `m + 1`, entries ≥ 0) against every property.
pub fn check_sequence(a: &[BigInt], m: usize) -> Result<SequenceReport> {
    if a.len() != m + 1 {
        return Err(Error::Domain(format!(
            "sequence has {} entries but window m = {m} needs {}",
            a.len(),
            m + 1
        )));
    }
    if let Some(k) = a.iter().position(Signed::is_negative) {
        return Err(Error::Domain(format!("entry a_{k} = {} is negative", a[k])));
    }

    let sq = |k: usize| &a[k] * &a[k];
    let outer = |k: usize| &a[k - 1] * &a[k + 1];
    let big = |x: usize| BigInt::from(x);

    let log_concave = first_failure(m, |k| sq(k) >= outer(k));
    let ordered_lc = first_failure(m, |k| big(k) * sq(k) >= big(k + 1) * outer(k));
    let ultra_lc = first_failure(m, |k| big(k * (m - k)) * sq(k) >= big((k + 1) * (m - k + 1)) * outer(k));

    let poly = Polynomial::new(a.to_vec());
    let real_rooted = if poly.is_zero() {
        None
    } else {
        Some(is_real_rooted(&poly)?)
    };

    Ok(SequenceReport {
        unimodal: Verdict::from_failure(unimodal_failure(a)),
        log_concave: Verdict::from_failure(log_concave),
        ordered_lc: Verdict::from_failure(ordered_lc),
        ultra_lc: Verdict::from_failure(ultra_lc),
        real_rooted,
    })
}

/// [`check_sequence`] on the coefficients of `p` padded to window `m`.
pub fn check_polynomial(p: &Polynomial, m: usize) -> Result<SequenceReport> {
    if p.degree().is_some_and(|d| d > m) {
        return Err(Error::Domain(format!(
            "degree {} exceeds window m = {m}",
            p.degree().unwrap_or(0)
        )));
    }
    check_sequence(&p.padded(m + 1), m)
}

/// True iff `a_{j−1} = a_j = a_{j+1} > 0` for some `2 ≤ j ≤ m−1`, where `m`
/// is the degree. A polynomial with nonnegative coefficients and such a run
/// is never real-rooted.
pub fn has_three_equal_interior(p: &Polynomial) -> bool {
    let a = p.coeffs();
    let Some(m) = p.degree() else { return false };
    (2..m).any(|j| !a[j].is_zero() && a[j - 1] == a[j] && a[j] == a[j + 1])
}
