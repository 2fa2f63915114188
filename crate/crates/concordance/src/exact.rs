//! Arbitrary-precision rationals, modular congruences, and Hirzebruch-Jung
//! (negative) continued fractions.
//!
//! Every rational in the crate is a reduced `num_rational::BigRational` with a
//! positive denominator, so equality is structural and printing is canonical.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::{Error, Result};

/// Exact rational number; always reduced, denominator always positive.
pub type Rational = num_rational::BigRational;

/// Rational from machine integers. Panics on a zero denominator.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational as a `{num, den}` JSON object.
///
/// Both components are decimal strings so values outside the f64-safe range
/// survive a round trip through any JSON parser.
pub fn rational_to_json(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

/// Parse `"a/b"` or `"a"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Precondition(format!("cannot parse rational from {s:?}"));
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// A Hirzebruch-Jung continued fraction
/// `[a1, ..., an] = a1 - 1/(a2 - 1/(... - 1/an))`.
///
/// The bracket produced by [`hj_expand`] always has `ai >= 2` for `i >= 2`,
/// and `a1 >= 2` as well except for the degenerate expansion `1/1 = [1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HJContinuedFraction {
    terms: Vec<u64>,
}

impl HJContinuedFraction {
    /// Validates the bracket shape: nonempty, `a1 >= 1`, `ai >= 2` for `i >= 2`.
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Precondition(
                "continued fraction needs at least one term".into(),
            ));
        }
        if terms[0] < 1 {
            return Err(Error::Precondition("leading term must be >= 1".into()));
        }
        if let Some(t) = terms[1..].iter().find(|&&t| t < 2) {
            return Err(Error::Precondition(format!(
                "term {t} after the first must be >= 2"
            )));
        }
        Ok(HJContinuedFraction { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Exact value of the bracket.
    ///
    /// Infallible for a validated bracket: with all later terms >= 2 every
    /// tail evaluates to a value > 1, so no intermediate denominator vanishes.
    pub fn value(&self) -> Rational {
        let terms: Vec<i64> = self.terms.iter().map(|&t| t as i64).collect();
        hj_evaluate(&terms).expect("validated bracket cannot hit a zero denominator")
    }
}

/// Greedy Hirzebruch-Jung expansion of `p/q` for coprime `1 <= q <= p`.
///
/// Each step takes `a = ceil(p/q)` and recurses on `q/(a*q - p)`; the result
/// is the unique bracket for `p/q` with all terms >= 2 (just `[p]` when
/// `q = 1`).
pub fn hj_expand(p: u64, q: u64) -> Result<HJContinuedFraction> {
    if p == 0 || q == 0 {
        return Err(Error::Precondition("p and q must be positive".into()));
    }
    if q > p {
        return Err(Error::Precondition(format!("need q <= p, got {q} > {p}")));
    }
    if num_integer::gcd(p, q) != 1 {
        return Err(Error::Precondition(format!("{p} and {q} are not coprime")));
    }
    let (mut p, mut q) = (p, q);
    let mut terms = Vec::new();
    while q > 0 {
        let a = p.div_ceil(q);
        let aq = a
            .checked_mul(q)
            .ok_or_else(|| Error::Precondition("continued-fraction input too large".into()))?;
        terms.push(a);
        (p, q) = (q, aq - p);
    }
    Ok(HJContinuedFraction { terms })
}

/// Evaluate a raw term list right to left as a Hirzebruch-Jung bracket.
///
/// Unlike [`HJContinuedFraction::value`] this accepts arbitrary integers and
/// reports [`Error::ZeroDenominator`] when some tail evaluates to zero.
pub fn hj_evaluate(terms: &[i64]) -> Result<Rational> {
    if terms.is_empty() {
        return Err(Error::Precondition(
            "continued fraction needs at least one term".into(),
        ));
    }
    let mut value = Rational::from_integer(BigInt::from(*terms.last().unwrap()));
    for &term in terms[..terms.len() - 1].iter().rev() {
        if value.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        value = Rational::from_integer(BigInt::from(term)) - value.recip();
    }
    Ok(value)
}

/// Solve `a * x = c (mod modulus)` for the representative in `(0, modulus]`.
///
/// Requires `gcd(a, modulus) = 1`. Returns the unique `x` with
/// `0 < x < modulus`, except that a solution `x = 0 (mod modulus)` is reported
/// as `modulus` itself; the degenerate `modulus = 1` returns 0.
pub fn solve_congruence(a: i128, c: i128, modulus: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::Precondition("modulus must be positive".into()));
    }
    if modulus == 1 {
        return Ok(0);
    }
    let m = modulus as i128;
    let (g, inv) = extended_gcd(a.rem_euclid(m), m);
    if g != 1 {
        return Err(Error::NoInverse { a, modulus });
    }
    let x = (c.rem_euclid(m) * inv.rem_euclid(m)).rem_euclid(m);
    Ok(if x == 0 { modulus } else { x as u64 })
}

/// Returns `(gcd(a, b), x)` with `a*x = gcd (mod b)` for `0 <= a < b`.
fn extended_gcd(a: i128, b: i128) -> (i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
    }
    (r0, x0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed};

    fn expand(p: u64, q: u64) -> Vec<u64> {
        hj_expand(p, q).unwrap().terms().to_vec()
    }

    #[test]
    fn expansion_of_integers_is_single_term() {
        assert_eq!(expand(3, 1), vec![3]);
        assert_eq!(expand(1, 1), vec![1]);
        assert_eq!(expand(97, 1), vec![97]);
    }

    #[test]
    fn expansion_19_over_9() {
        // 19/9 = [3, 2, 2, 2, 2, 2, 2, 2, 2], the long-leg shape for k=1, m=1.
        assert_eq!(expand(19, 9), vec![3, 2, 2, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn expansion_59_over_49() {
        // 59/49 = [2, 2, 2, 2, 3, 2 x8], the long-leg shape for k=1, m=3.
        let mut want = vec![2, 2, 2, 2, 3];
        want.extend([2; 8]);
        assert_eq!(expand(59, 49), want);
    }

    #[test]
    fn two_chain_evaluates_to_j_plus_1_over_j() {
        // [2, 2, ..., 2] with j twos has value (j+1)/j.
        for j in 1..=64 {
            let cf = HJContinuedFraction::new(vec![2; j]).unwrap();
            assert_eq!(cf.value(), rational(j as i64 + 1, j as i64), "j = {j}");
        }
    }

    #[test]
    fn evaluation_matches_hand_values() {
        assert_eq!(hj_evaluate(&[2, 2]).unwrap(), rational(3, 2));
        assert_eq!(
            hj_evaluate(&[3, 2, 2, 2, 2, 2, 2, 2, 2]).unwrap(),
            rational(19, 9)
        );
        assert_eq!(hj_evaluate(&[1]).unwrap(), rational(1, 1));
    }

    #[test]
    fn expand_then_evaluate_round_trips() {
        for p in 1..=60u64 {
            for q in 1..=p {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let cf = hj_expand(p, q).unwrap();
                assert_eq!(cf.value(), rational(p as i64, q as i64), "p/q = {p}/{q}");
                for (i, &t) in cf.terms().iter().enumerate() {
                    let floor = if i == 0 && p == q { 1 } else { 2 };
                    assert!(t >= floor, "term {t} at {i} in expansion of {p}/{q}");
                }
            }
        }
    }

    #[test]
    fn expansion_rejects_bad_inputs() {
        assert!(matches!(hj_expand(6, 4), Err(Error::Precondition(_))));
        assert!(matches!(hj_expand(3, 5), Err(Error::Precondition(_))));
        assert!(matches!(hj_expand(5, 0), Err(Error::Precondition(_))));
        assert!(matches!(hj_expand(0, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn bracket_shape_is_validated() {
        assert!(HJContinuedFraction::new(vec![]).is_err());
        assert!(HJContinuedFraction::new(vec![0]).is_err());
        assert!(HJContinuedFraction::new(vec![2, 1]).is_err());
        assert!(HJContinuedFraction::new(vec![1, 2]).is_ok());
    }

    #[test]
    fn evaluation_reports_zero_denominators() {
        // The tail [1, 1] evaluates to 0, so the next step divides by zero.
        assert!(matches!(
            hj_evaluate(&[2, 1, 1]),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn congruence_examples() {
        // 59 * 1 = 59 = -1 (mod 3)
        assert_eq!(solve_congruence(59, -1, 3).unwrap(), 1);
        // 6 * 49 = 294 = -1 (mod 59)
        assert_eq!(solve_congruence(6, -1, 59).unwrap(), 49);
        // Degenerate modulus.
        assert_eq!(solve_congruence(1, 0, 1).unwrap(), 0);
        // c = 0 (mod modulus) reports the representative `modulus`, not 0.
        assert_eq!(solve_congruence(3, 0, 7).unwrap(), 7);
        assert_eq!(solve_congruence(3, 14, 7).unwrap(), 7);
    }

    #[test]
    fn congruence_requires_invertibility() {
        assert!(matches!(
            solve_congruence(2, 1, 4),
            Err(Error::NoInverse { a: 2, modulus: 4 })
        ));
        assert!(matches!(
            solve_congruence(6, -1, 9),
            Err(Error::NoInverse { .. })
        ));
    }

    #[test]
    fn congruence_solution_composes_back() {
        for modulus in 2..=40u64 {
            for a in 1..modulus as i128 {
                if num_integer::gcd(a, modulus as i128) != 1 {
                    continue;
                }
                for c in -3..=3i128 {
                    let x = solve_congruence(a, c, modulus).unwrap();
                    assert!(x >= 1 && x <= modulus);
                    assert_eq!(
                        (a * x as i128 - c).rem_euclid(modulus as i128),
                        0,
                        "a={a} c={c} modulus={modulus}"
                    );
                }
            }
        }
    }

    #[test]
    fn rational_parsing_and_json() {
        assert_eq!(parse_rational("3/4").unwrap(), rational(3, 4));
        assert_eq!(parse_rational("-9/4").unwrap(), rational(-9, 4));
        assert_eq!(parse_rational("6/4").unwrap(), rational(3, 2));
        assert_eq!(parse_rational("7").unwrap(), rational(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
        assert_eq!(
            rational_to_json(&rational(-9, 4)),
            json!({ "num": "-9", "den": "4" })
        );
    }

    #[test]
    fn rationals_stay_reduced_with_positive_denominator() {
        let r = Rational::new(BigInt::from(6), BigInt::from(-8));
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(4));
        assert!(r.denom().is_positive());
        assert!(Rational::new(BigInt::from(4), BigInt::from(2)).is_integer());
        assert!(rational(1, 1).is_one());
    }
}
