//! Sturm chains and real-root decisions.
//!
//! The chain is P₀ = p, P₁ = p′, Pᵢ = −rem(Pᵢ₋₂, Pᵢ₋₁), stopping before the
//! first zero remainder. When p has repeated roots the chain ends at
//! gcd(p, p′) rather than a constant. p is real-rooted exactly when every
//! entry has a positive leading coefficient and consecutive degrees drop by
//! one; the sign-variation count then equals deg p − deg gcd, the number of
//! distinct roots, so the criterion holds for non-squarefree input as well.

use super::{Polynomial, RationalPolynomial};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<RationalPolynomial>,
}

impl SturmChain {
    pub fn polys(&self) -> &[RationalPolynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.polys
            .iter()
            .map(|p| p.degree().expect("chain entries are nonzero"))
            .collect()
    }

    /// Positive leading coefficients throughout and unit degree drops.
    pub fn has_real_rooted_pattern(&self) -> bool {
        self.polys.iter().all(|p| p.leading_sign() > 0) && self.degrees().windows(2).all(|w| w[0] == w[1] + 1)
    }

    /// Sign changes of the chain evaluated at `x`, zeros skipped.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        count_variations(self.polys.iter().map(|p| sign_of(&p.eval(x))))
    }

    /// Sign changes at −∞ (`positive = false`) or +∞.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.polys.iter().map(|p| {
            let s = p.leading_sign();
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                -s
            } else {
                s
            }
        }))
    }
}

fn sign_of(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn build_chain(p: &RationalPolynomial) -> SturmChain {
    let mut polys = vec![p.clone()];
    let d = p.derivative();
    if !d.is_zero() {
        polys.push(d);
        loop {
            let k = polys.len();
            let (_, r) = polys[k - 2].div_rem(&polys[k - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(r.neg());
        }
    }
    SturmChain { polys }
}

/// The Sturm chain of `p`; requires degree ≥ 1 and a positive leading
/// coefficient.
pub fn sturm_chain(p: &Polynomial) -> Result<SturmChain> {
    match p.degree() {
        None | Some(0) => Err(Error::Precondition(format!("Sturm chain needs degree >= 1, got {p}"))),
        Some(_) if p.leading().is_some_and(Signed::is_negative) => Err(Error::Precondition(format!(
            "Sturm chain needs a positive leading coefficient, got {p}"
        ))),
        Some(_) => Ok(build_chain(&p.to_rational())),
    }
}

/// Whether every root of `p` is real. Constants are real-rooted by
/// convention; the zero polynomial and negative leading coefficients are
/// rejected (negate first).
pub fn is_real_rooted(p: &Polynomial) -> Result<bool> {
    match p.degree() {
        None => Err(Error::Precondition("real-rootedness of the zero polynomial".into())),
        Some(0) => Ok(true),
        Some(_) => Ok(sturm_chain(p)?.has_real_rooted_pattern()),
    }
}

/// Number of distinct real roots in `(lo, hi]`, by sign variations.
pub fn count_real_roots(p: &Polynomial, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Precondition("root count of the zero polynomial".into()));
    }
    if lo >= hi {
        return Err(Error::Precondition(format!("empty interval ({lo}, {hi}]")));
    }
    for x in [lo, hi] {
        if p.eval(x).is_zero() {
            return Err(Error::EndpointIsRoot(x.to_string()));
        }
    }
    let chain = build_chain(&p.to_rational());
    Ok(chain.variations_at(lo).saturating_sub(chain.variations_at(hi)))
}

/// Number of distinct real roots over the whole line.
pub fn count_distinct_real_roots(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Precondition("root count of the zero polynomial".into()));
    }
    let chain = build_chain(&p.to_rational());
    Ok(chain
        .variations_at_infinity(false)
        .saturating_sub(chain.variations_at_infinity(true)))
}

/// `p / gcd(p, p′)` as a primitive integer polynomial with positive leading
/// coefficient.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::Precondition("squarefree part of the zero polynomial".into()));
    }
    let rp = p.to_rational();
    let g = rp.gcd(&rp.derivative());
    let q = if g.is_zero() { rp } else { rp.div_rem(&g).0 };
    Ok(primitive(&q))
}

/// Clears denominators and divides out the content; leading coefficient > 0.
pub(crate) fn primitive(q: &RationalPolynomial) -> Polynomial {
    let lcm = q.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = q
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if q.leading_sign() < 0 {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    if content.is_zero() {
        return Polynomial::zero();
    }
    Polynomial::new(ints.into_iter().map(|c| c / &content * &sign).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn chain_of_x_squared_minus_one() {
        // rem(x^2 - 1, 2x) = -1, negated to 1
        let chain = sturm_chain(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(chain.degrees(), vec![2, 1, 0]);
        assert_eq!(chain.polys()[1], p(&[0, 2]).to_rational());
        assert_eq!(chain.polys()[2], p(&[1]).to_rational());
    }

    #[test]
    fn chain_of_x_squared_plus_one() {
        let chain = sturm_chain(&p(&[1, 0, 1])).unwrap();
        assert_eq!(chain.polys()[2], p(&[-1]).to_rational());
        assert!(!chain.has_real_rooted_pattern());
    }

    #[test]
    fn chain_stops_on_exact_division() {
        let chain = sturm_chain(&p(&[0, 0, 1])).unwrap();
        assert_eq!(chain.degrees(), vec![2, 1]);
        assert!(chain.has_real_rooted_pattern());
    }

    #[test]
    fn chain_preconditions() {
        assert!(sturm_chain(&Polynomial::zero()).is_err());
        assert!(sturm_chain(&p(&[5])).is_err());
        assert!(sturm_chain(&p(&[1, -1])).is_err());
        assert!(is_real_rooted(&Polynomial::zero()).is_err());
        assert!(is_real_rooted(&p(&[3])).unwrap());
    }

    #[test]
    fn real_rootedness_examples() {
        // D(P3) = x^2 (x + 2)
        assert!(is_real_rooted(&p(&[0, 0, 2, 1])).unwrap());
        // D(K4) = x^2 (x^2 + 4x + 6): discriminant 16 - 24 < 0
        assert!(!is_real_rooted(&p(&[0, 0, 6, 4, 1])).unwrap());
        assert_eq!(count_distinct_real_roots(&p(&[0, 0, 6, 4, 1])).unwrap(), 1);
        // D(chair) = x^2 (x + 1)(x + 2)^2
        assert!(is_real_rooted(&p(&[0, 0, 4, 8, 5, 1])).unwrap());
        // Q4' = 4x^3 + 6x^2 + 4x + 1 = (2x+1)(2x^2+2x+1)
        assert!(!is_real_rooted(&p(&[-1, 1, 2, 2, 1]).derivative()).unwrap());
    }

    #[test]
    fn root_counts() {
        assert_eq!(count_real_roots(&p(&[-1, 0, 1]), &q(-2, 1), &q(2, 1)).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[1, 0, 1]), &q(-1000, 1), &q(1000, 1)).unwrap(), 0);
        assert_eq!(count_real_roots(&p(&[0, 0, 2, 1]), &q(-3, 1), &q(1, 1)).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[0, 0, 2, 1]), &q(-1, 1), &q(1, 1)).unwrap(), 1);
        assert!(matches!(
            count_real_roots(&p(&[-1, 0, 1]), &q(-1, 1), &q(2, 1)),
            Err(Error::EndpointIsRoot(_))
        ));
        assert!(count_real_roots(&p(&[-1, 0, 1]), &q(2, 1), &q(-2, 1)).is_err());
    }

    #[test]
    fn squarefree() {
        // x^2 (x + 2)^2 (x + 1) -> x (x + 2) (x + 1)
        let f = &(&p(&[0, 0, 1]) * &p(&[2, 1]).pow(2)) * &p(&[1, 1]);
        assert_eq!(squarefree_part(&f).unwrap(), p(&[0, 2, 3, 1]));
        assert_eq!(squarefree_part(&p(&[-4, 0, -2])).unwrap(), p(&[2, 0, 1]));
        assert_eq!(squarefree_part(&p(&[6])).unwrap(), p(&[1]));
    }
}
