//! Levine-Tristram signatures of torus knots by exact jump-set counting.
//!
//! For coprime `p, q` the signature function of `T(p,q)` at `e^{2 pi i x}` is
//! determined by the multiset `Sigma_{p,q} = {k/p + l/q}` in `(0, 2)`: away
//! from jumps it equals `|Sigma \ (x, x+1)| - |Sigma inside (x, x+1)|`, with
//! the convention that the trefoil has signature -2. Root-of-unity sums
//! `sigma^(n)` are evaluated both by direct counting and, for the twist
//! family `T(pm, pmn-1)`, by a closed form; the two routes are kept separate
//! so each can check the other.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::exact::Rational;
use crate::{Error, Result};

/// Largest jump multiset this module will materialize.
const MAX_JUMPS: u128 = 20_000_000;

/// The sorted multiset `Sigma_{p,q} = {k/p + l/q : 0 < k < p, 0 < l < q}`.
///
/// Elements are stored as numerators over the common denominator `p*q`, which
/// keeps construction and counting in machine integers; they are reduced only
/// when converted to [`Rational`]s. For coprime parameters all
/// `(p-1)(q-1)` values are distinct, and construction verifies this instead
/// of assuming it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpSet {
    p: u64,
    q: u64,
    denom: u64,
    numerators: Vec<u64>,
}

impl JumpSet {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Precondition("p and q must be positive".into()));
        }
        if num_integer::gcd(p, q) != 1 {
            return Err(Error::Precondition(format!("{p} and {q} are not coprime")));
        }
        let count = (p as u128 - 1) * (q as u128 - 1);
        if count > MAX_JUMPS {
            return Err(Error::Precondition(format!(
                "jump set of T({p},{q}) has {count} elements, too many to materialize"
            )));
        }
        let denom = p
            .checked_mul(q)
            .ok_or_else(|| Error::Precondition("p*q overflows".into()))?;
        let mut numerators = Vec::with_capacity(count as usize);
        for k in 1..p {
            for l in 1..q {
                numerators.push(k * q + l * p);
            }
        }
        numerators.sort_unstable();
        if numerators.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Consistency(format!(
                "jump values of T({p},{q}) are not distinct"
            )));
        }
        Ok(JumpSet {
            p,
            q,
            denom,
            numerators,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of jumps, `(p-1)(q-1)`.
    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    /// The jumps as reduced rationals in increasing order.
    pub fn elements(&self) -> Vec<Rational> {
        let denom = BigInt::from(self.denom);
        self.numerators
            .iter()
            .map(|&n| Rational::new(BigInt::from(n), denom.clone()))
            .collect()
    }

    /// Number of jumps strictly below `x`.
    fn count_below(&self, x: &Rational, strict: bool) -> usize {
        // n/denom < a/b  <=>  n*b < a*denom (b > 0 always).
        let threshold = x.numer() * BigInt::from(self.denom);
        let b = x.denom();
        self.numerators.partition_point(|&n| {
            let lhs = BigInt::from(n) * b;
            if strict {
                lhs < threshold
            } else {
                lhs <= threshold
            }
        })
    }

    /// Multiplicity of `x` in the multiset (0 or 1 for coprime parameters).
    pub fn multiplicity(&self, x: &Rational) -> usize {
        self.count_below(x, false) - self.count_below(x, true)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.multiplicity(x) > 0
    }

    /// Number of jumps in the open interval `(lo, hi)`.
    pub fn count_in_open(&self, lo: &Rational, hi: &Rational) -> usize {
        self.count_below(hi, true) - self.count_below(lo, false)
    }
}

/// Signature value at a point of the unit circle.
///
/// `at_jump` is set when the evaluation point or its translate by 1 lies in
/// the jump set; the value is then the average of the two one-sided limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureValue {
    pub value: i64,
    pub at_jump: bool,
}

/// A root-of-unity signature sum together with any jump warnings raised while
/// evaluating it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSum {
    pub value: i64,
    pub jump_warnings: Vec<Rational>,
}

/// A torus knot `T(p,q)` or its mirror, with the jump set precomputed.
#[derive(Debug, Clone)]
pub struct TorusKnotProfile {
    p: u64,
    q: u64,
    mirrored: bool,
    jumps: JumpSet,
}

impl TorusKnotProfile {
    pub fn new(p: u64, q: u64, mirrored: bool) -> Result<Self> {
        Ok(TorusKnotProfile {
            p,
            q,
            mirrored,
            jumps: JumpSet::new(p, q)?,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn mirrored(&self) -> bool {
        self.mirrored
    }

    pub fn jumps(&self) -> &JumpSet {
        &self.jumps
    }

    /// Levine-Tristram signature at `e^{2 pi i x}` for `x` in `(0, 1)`.
    ///
    /// Writing `N` for the jump count and `f(x) = |Sigma inside (x, x+1)|`,
    /// the signature away from jumps is `N - 2 f(x)`; at a jump the two
    /// one-sided limits differ by the multiplicities at `x` and `x + 1`, and
    /// `N - 2 f(x) - mult(x) - mult(x+1)` is exactly their average in every
    /// case. Mirroring negates the result.
    pub fn signature_at(&self, x: &Rational) -> Result<SignatureValue> {
        if !x.is_positive() || *x >= Rational::one() {
            return Err(Error::Precondition(format!(
                "evaluation point must lie strictly between 0 and 1, got {x}"
            )));
        }
        let x1 = x + Rational::one();
        let interior = self.jumps.count_in_open(x, &x1) as i64;
        let m0 = self.jumps.multiplicity(x) as i64;
        let m1 = self.jumps.multiplicity(&x1) as i64;
        let raw = self.jumps.len() as i64 - 2 * interior - m0 - m1;
        Ok(SignatureValue {
            value: if self.mirrored { -raw } else { raw },
            at_jump: m0 + m1 > 0,
        })
    }

    /// The ordinary knot signature, the evaluation at `x = 1/2`.
    ///
    /// `-1` is never a root of a torus-knot Alexander polynomial (knot
    /// determinants are odd), so this evaluation cannot sit at a jump.
    pub fn classical_signature(&self) -> i64 {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        self.signature_at(&half)
            .expect("1/2 is a valid evaluation point")
            .value
    }

    /// `sigma^(n)`: the sum of signatures over all order-`n` roots of unity.
    ///
    /// The trivial root contributes 0 and conjugate roots contribute equally,
    /// so the sum folds `j` with `n - j` and doubles, with `j = n/2`
    /// counted once. Warnings list each folded evaluation point that hit a
    /// jump.
    pub fn sigma_sum(&self, n: u64) -> Result<SigmaSum> {
        if n == 0 {
            return Err(Error::Precondition(
                "root-of-unity order must be positive".into(),
            ));
        }
        let mut value: i128 = 0;
        let mut jump_warnings = Vec::new();
        for j in 1..=n / 2 {
            let x = Rational::new(BigInt::from(j), BigInt::from(n));
            let sv = self.signature_at(&x)?;
            let weight = if 2 * j == n { 1 } else { 2 };
            value += weight as i128 * sv.value as i128;
            if sv.at_jump {
                jump_warnings.push(x);
            }
        }
        let value = i64::try_from(value)
            .map_err(|_| Error::Consistency("sigma^(n) overflows 64 bits".into()))?;
        Ok(SigmaSum {
            value,
            jump_warnings,
        })
    }
}

/// Closed form for `sigma^(p)(T(pm, pmn-1))`:
/// `2(p-1) - p(p-1)(p+1) m^2 n / 3`, defined for `p, m, n >= 1` not all 1.
///
/// `(p-1)p(p+1)` is a product of three consecutive integers, so the division
/// by 3 is exact; this is asserted rather than assumed.
pub fn sigma_sum_closed_form(p: u64, m: u64, n: u64) -> Result<i64> {
    if p == 0 || m == 0 || n == 0 {
        return Err(Error::Precondition("p, m, n must all be positive".into()));
    }
    if p == 1 && m == 1 && n == 1 {
        return Err(Error::Precondition(
            "(p, m, n) = (1, 1, 1) is excluded".into(),
        ));
    }
    let p = p as i128;
    let triple = p * (p - 1) * (p + 1);
    assert!(triple % 3 == 0, "product of three consecutive integers");
    let too_big = || Error::Precondition("closed-form parameters too large".into());
    let term = (triple / 3)
        .checked_mul(m as i128)
        .and_then(|t| t.checked_mul(m as i128))
        .and_then(|t| t.checked_mul(n as i128))
        .ok_or_else(too_big)?;
    i64::try_from(2 * (p - 1) - term).map_err(|_| too_big())
}

/// `sigma^(n)` of the `(p,1)`-cable of the figure-eight knot.
///
/// The figure-eight Alexander polynomial has no roots on the unit circle, so
/// the satellite contribution to every Levine-Tristram signature vanishes and
/// the cable's sum equals that of its `T(p,1)` pattern. The pattern has an
/// empty jump set, but the value is still produced by the generic counting
/// machinery rather than hard-coded.
pub fn cable_sigma_sum(p: u64, n: u64) -> Result<SigmaSum> {
    TorusKnotProfile::new(p, 1, false)?.sigma_sum(n)
}
