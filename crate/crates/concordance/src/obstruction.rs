//! The kappa concordance obstruction and the real 10/8-style inequality.
//!
//! The invariant `kappa^(k)` takes values in `(1/16)Z`, sends the unknot to
//! zero, and on torus knots `T(2^k m, q)` with `m, q` odd and coprime equals
//! `-mu_bar/2` of the negative definite plumbing bounding the `2^k`-fold
//! branched cover. Formal sums of such knots are handled by linearity. For a
//! general knot only a lower bound is available, obtained by rearranging the
//! inequality across an equivariant cobordism:
//!
//! ```text
//! -sigma(W)/16 + 1/2 <= (b^+(cover) - b^+(half cover)) + kappa(out) - kappa(in)
//! ```
//!
//! Feeding the cable-disk cobordism through this bound shows that the
//! `(2^k m, 1)`-cables of the figure-eight knot, and all their positive
//! multiples, have `kappa^(k) >= 1/2` after mirroring, so none of them is
//! smoothly slice.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cover::{cable_disk_data, CableDiskData};
use crate::exact::{rational, rational_to_json, Rational};
use crate::lattice::mu_bar;
use crate::plumbing::{brieskorn_plumbing, seifert_invariants, BrieskornParams, SeifertData};
use crate::{Error, Result};

/// A kappa value attached to a specific knot (or formal sum of knots).
///
/// `strongly_spherical` records whether the value is exact rather than a
/// bound; only such values may enter [`kappa_sum`].
#[derive(Debug, Clone, PartialEq)]
pub struct KappaValue {
    value: Rational,
    knot_description: String,
    k: u32,
    strongly_spherical: bool,
}

impl KappaValue {
    /// Wrap a value, enforcing membership in `(1/16)Z`.
    pub fn new(
        value: Rational,
        knot_description: String,
        k: u32,
        strongly_spherical: bool,
    ) -> Result<Self> {
        let sixteen = Rational::from_integer(BigInt::from(16));
        if !(&value * sixteen).is_integer() {
            return Err(Error::Precondition(format!(
                "kappa value {value} is not an integer multiple of 1/16"
            )));
        }
        Ok(KappaValue {
            value,
            knot_description,
            k,
            strongly_spherical,
        })
    }

    /// The unknot value at cover exponent `k`: exactly zero.
    pub fn unknot(k: u32) -> Self {
        KappaValue {
            value: Rational::from_integer(BigInt::from(0)),
            knot_description: "unknot".into(),
            k,
            strongly_spherical: true,
        }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn knot_description(&self) -> &str {
        &self.knot_description
    }

    /// Cover exponent: the invariant is computed from the `2^k`-fold cover.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn strongly_spherical(&self) -> bool {
        self.strongly_spherical
    }

    pub fn to_json(&self) -> Value {
        json!({
            "value": rational_to_json(&self.value),
            "knot": self.knot_description,
            "k": self.k,
            "strongly_spherical": self.strongly_spherical,
        })
    }
}

/// `kappa^(k)` of the torus knot `T(2^k m, q)`, `m` and `q` odd and coprime.
///
/// The `2^k`-fold branched cover is the Brieskorn sphere bounding the
/// negative definite plumbing on `Gamma(k, m, q)`, and the value is
/// `-mu_bar/2` of that plumbing.
pub fn kappa_torus(k: u32, m: u64, q: u64) -> Result<KappaValue> {
    let params = BrieskornParams::new(k, m, q)?;
    let tree = brieskorn_plumbing(&params)?;
    let mu = mu_bar(&tree)?;
    let value = -mu / rational(2, 1);
    KappaValue::new(value, format!("T({}, {})", params.torus_p()?, q), k, true)
}

/// Linear combination of kappa values: `sum of c_i * kappa_i`.
///
/// Every term must be strongly spherical and carry the stated cover exponent
/// `k`; the empty sum is the unknot. Additivity holds for such knots because
/// the covers stay spherical under connected sum.
pub fn kappa_sum(k: u32, terms: &[(i64, KappaValue)]) -> Result<KappaValue> {
    let mut value = Rational::from_integer(BigInt::from(0));
    let mut parts = Vec::new();
    for (coefficient, term) in terms {
        if !term.strongly_spherical() {
            return Err(Error::Precondition(format!(
                "term {} is not strongly spherical; kappa is not known additive on it",
                term.knot_description()
            )));
        }
        if term.k() != k {
            return Err(Error::Precondition(format!(
                "term {} has cover exponent {}, expected {k}",
                term.knot_description(),
                term.k()
            )));
        }
        value += Rational::from_integer(BigInt::from(*coefficient)) * term.value();
        if *coefficient == 1 {
            parts.push(term.knot_description().to_string());
        } else {
            parts.push(format!("{coefficient}*{}", term.knot_description()));
        }
    }
    let description = if parts.is_empty() {
        "unknot".to_string()
    } else {
        parts.join(" + ")
    };
    KappaValue::new(value, description, k, true)
}

/// Outcome of one evaluation of the 10/8-style inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct TenEighthsCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub strict_variant: bool,
    /// `rhs - lhs`; the inequality holds exactly when this is nonnegative.
    pub slack: Rational,
    pub holds: bool,
}

fn ten_eighths_lhs(sigma_cover: i64, bplus_diff: i64, strict: bool) -> Result<Rational> {
    if strict && bplus_diff <= 0 {
        return Err(Error::Precondition(format!(
            "the strict variant needs a positive b^+ difference, got {bplus_diff}"
        )));
    }
    let mut lhs = rational(-sigma_cover, 16);
    if strict {
        lhs += rational(1, 2);
    }
    Ok(lhs)
}

/// Evaluate `-sigma/16 (+ 1/2 when strict) <= bplus_diff + kappa_out - kappa_in`.
///
/// The strict variant additionally requires `bplus_diff > 0` (and the caller
/// asserts the incoming end is strongly spherical).
pub fn ten_eighths_check(
    sigma_cover: i64,
    bplus_diff: i64,
    kappa_out: &Rational,
    kappa_in: &Rational,
    strict: bool,
) -> Result<TenEighthsCheck> {
    let lhs = ten_eighths_lhs(sigma_cover, bplus_diff, strict)?;
    let rhs = Rational::from_integer(BigInt::from(bplus_diff)) + kappa_out - kappa_in;
    let slack = &rhs - &lhs;
    let holds = slack >= Rational::from_integer(BigInt::from(0));
    Ok(TenEighthsCheck {
        lhs,
        rhs,
        strict_variant: strict,
        slack,
        holds,
    })
}

/// Lower-bound mode: the inequality solved for the outgoing kappa value.
///
/// Returns `lhs - bplus_diff + kappa_in`, the smallest value of `kappa_out`
/// for which [`ten_eighths_check`] holds with the same inputs.
pub fn ten_eighths_lower_bound(
    sigma_cover: i64,
    bplus_diff: i64,
    kappa_in: &Rational,
    strict: bool,
) -> Result<Rational> {
    let lhs = ten_eighths_lhs(sigma_cover, bplus_diff, strict)?;
    Ok(lhs - Rational::from_integer(BigInt::from(bplus_diff)) + kappa_in)
}

/// The main lower bound: `kappa^(k)` of the mirrored cable sum.
///
/// Assembles the cable-disk cover data for `(k, m, c)`, the kappa value of
/// `c` copies of `T(2^k m, 10·2^k m - 1)`, and the strict inequality, then
/// solves for the outgoing value. The `c`- and `k`-dependent terms cancel and
/// the bound is exactly `1/2` for every admissible input; this cancellation
/// is asserted, not assumed.
pub fn kappa_lower_bound(k: u32, m: u64, c: u64) -> Result<Rational> {
    let cover = cable_disk_data(k, m, c)?;
    let q = BrieskornParams::special_family(k, m)?.q();
    let torus = kappa_torus(k, m, q)?;
    let coefficient =
        i64::try_from(c).map_err(|_| Error::Precondition("too many copies".into()))?;
    let total = kappa_sum(k, &[(coefficient, torus)])?;
    let diff = cover.b_plus_cover - cover.b_plus_half_cover;
    let bound = ten_eighths_lower_bound(cover.sigma_cover, diff, total.value(), true)?;
    if bound != rational(1, 2) {
        return Err(Error::Consistency(format!(
            "cable lower bound for (k, m, c) = ({k}, {m}, {c}) is {bound}, expected 1/2"
        )));
    }
    Ok(bound)
}

/// Full audit trail of the non-sliceness argument for `c` parallel copies of
/// the `(2^k m, 1)`-cable of the figure-eight knot.
#[derive(Debug, Clone, PartialEq)]
pub struct ObstructionReport {
    pub k: u32,
    pub m: u64,
    pub copies: u64,
    /// Cable parameter `p = 2^k m`.
    pub cable_p: u64,
    /// Companion torus knot parameter `q = 10p - 1`.
    pub torus_q: u64,
    pub seifert: SeifertData,
    pub mu_bar: Rational,
    pub kappa_torus: KappaValue,
    pub kappa_torus_total: KappaValue,
    /// Reported equal to `kappa_torus` on these families; derived, not an
    /// independent computation.
    pub delta_r_torus: Rational,
    pub cover: CableDiskData,
    pub bplus_diff: i64,
    pub inequality_lhs: Rational,
    pub kappa_lower_bound: Rational,
    pub verdict: String,
    /// Branches of the broader non-sliceness statement that rest on prior
    /// published arguments rather than on this computation.
    pub external_results: Vec<String>,
}

impl ObstructionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "m": self.m,
            "copies": self.copies,
            "cable_p": self.cable_p,
            "torus_q": self.torus_q,
            "seifert": self.seifert.to_json(),
            "mu_bar": rational_to_json(&self.mu_bar),
            "kappa_torus": self.kappa_torus.to_json(),
            "kappa_torus_total": self.kappa_torus_total.to_json(),
            "delta_r_torus": rational_to_json(&self.delta_r_torus),
            "cover": self.cover.to_json(),
            "bplus_diff": self.bplus_diff,
            "inequality_lhs": rational_to_json(&self.inequality_lhs),
            "kappa_lower_bound": rational_to_json(&self.kappa_lower_bound),
            "verdict": self.verdict,
            "external_results": self.external_results,
            "provenance": {
                "seifert": prov("plumbing", "seifert_invariants",
                    "alpha, beta solving the congruences for Sigma(2^k, 2^k m, q)"),
                "mu_bar": prov("lattice", "mu_bar",
                    "(signature - Wu^2)/8 of the negative definite plumbing"),
                "kappa_torus": prov("obstruction", "kappa_torus", "-mu_bar/2"),
                "kappa_torus_total": prov("obstruction", "kappa_sum",
                    "c * kappa(T(p, 10p-1)) by linearity"),
                "delta_r_torus": prov("obstruction", "kappa_torus",
                    "equals kappa here: the Froyshov-type invariant agrees on spherical covers"),
                "cover": prov("cover", "cable_disk_data",
                    "branched-cover b^+ and signature of the cable disks"),
                "bplus_diff": prov("cover", "cable_disk_data",
                    "b^+(2^k cover) - b^+(2^(k-1) cover)"),
                "inequality_lhs": prov("obstruction", "ten_eighths_check",
                    "-sigma(cover)/16 + 1/2 (strict variant)"),
                "kappa_lower_bound": prov("obstruction", "ten_eighths_lower_bound",
                    "lhs - bplus_diff + kappa_in, asserted equal to 1/2"),
                "verdict": prov("obstruction", "obstruction_report",
                    "kappa >= 1/2 > 0 = kappa(unknot) rules out smooth sliceness"),
            },
        })
    }
}

fn prov(module: &str, operation: &str, formula: &str) -> Value {
    json!({ "module": module, "operation": operation, "formula": formula })
}

/// Assemble the complete obstruction chain for `(k, m, c)`.
///
/// Every field is recomputed from the upstream modules; nothing is cached or
/// hard-coded. The verdict covers the even-cable case established here; the
/// odd-`p` and higher-`q` branches of the general statement are recorded as
/// external results.
pub fn obstruction_report(k: u32, m: u64, c: u64) -> Result<ObstructionReport> {
    let params = BrieskornParams::special_family(k, m)?;
    let cable_p = params.torus_p()?;
    let torus_q = params.q();
    let seifert = seifert_invariants(&params)?;
    let tree = brieskorn_plumbing(&params)?;
    let mu = mu_bar(&tree)?;
    let torus = kappa_torus(k, m, torus_q)?;
    let coefficient =
        i64::try_from(c).map_err(|_| Error::Precondition("too many copies".into()))?;
    let total = kappa_sum(k, &[(coefficient, torus.clone())])?;
    let cover = cable_disk_data(k, m, c)?;
    let bplus_diff = cover.b_plus_cover - cover.b_plus_half_cover;
    let inequality_lhs = ten_eighths_lhs(cover.sigma_cover, bplus_diff, true)?;
    let bound = kappa_lower_bound(k, m, c)?;

    let cable = if c == 1 {
        format!("(4_1)_{{{cable_p},1}}")
    } else {
        format!("{c}*(4_1)_{{{cable_p},1}}")
    };
    let verdict = format!(
        "kappa^({k})(-{cable}) >= 1/2 > 0 = kappa^({k})(unknot), so {cable} is not \
         smoothly slice; the bound holds for every number of copies, so the cable \
         has infinite order in the smooth concordance group"
    );
    let external_results = vec![
        format!(
            "odd cable parameter p: non-sliceness of (4_1)_{{p,1}} follows from a \
             classical signature argument (external result, not computed here)"
        ),
        format!(
            "cables (4_1)_{{p,q}} with |q| >= 2: handled by previously published \
             smooth concordance obstructions (external result, not computed here)"
        ),
    ];

    Ok(ObstructionReport {
        k,
        m,
        copies: c,
        cable_p,
        torus_q,
        seifert,
        mu_bar: mu,
        delta_r_torus: torus.value().clone(),
        kappa_torus: torus,
        kappa_torus_total: total,
        cover,
        bplus_diff,
        inequality_lhs,
        kappa_lower_bound: bound,
        verdict,
        external_results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn kappa_of_small_torus_knots() {
        let a = kappa_torus(1, 1, 19).unwrap();
        assert_eq!(a.value(), &rational(9, 8));
        assert_eq!(a.knot_description(), "T(2, 19)");
        assert!(a.strongly_spherical());
        assert_eq!(a.k(), 1);

        let b = kappa_torus(1, 1, 3).unwrap();
        assert_eq!(b.value(), &rational(1, 8));
        assert_eq!(b.knot_description(), "T(2, 3)");

        let c = kappa_torus(2, 3, 119).unwrap();
        assert_eq!(c.value(), &rational(17, 8));
        assert_eq!(c.knot_description(), "T(12, 119)");

        let d = kappa_torus(3, 3, 239).unwrap();
        assert_eq!(d.value(), &rational(33, 8));
        assert_eq!(d.knot_description(), "T(24, 239)");
    }

    #[test]
    fn unknot_value_is_zero() {
        let u = KappaValue::unknot(3);
        assert_eq!(u.value(), &rational(0, 1));
        assert!(u.strongly_spherical());
    }

    #[test]
    fn sixteenth_integrality_is_enforced() {
        assert!(KappaValue::new(rational(1, 16), "x".into(), 1, true).is_ok());
        assert!(KappaValue::new(rational(-33, 16), "x".into(), 1, true).is_ok());
        assert!(KappaValue::new(rational(1, 3), "x".into(), 1, true).is_err());
        assert!(KappaValue::new(rational(1, 32), "x".into(), 1, true).is_err());
    }

    #[test]
    fn kappa_sum_examples() {
        let nine_eighths = kappa_torus(1, 1, 19).unwrap();
        let tripled = kappa_sum(1, &[(3, nine_eighths.clone())]).unwrap();
        assert_eq!(tripled.value(), &rational(27, 8));
        assert_eq!(tripled.knot_description(), "3*T(2, 19)");

        let empty = kappa_sum(1, &[]).unwrap();
        assert_eq!(empty.value(), &rational(0, 1));
        assert_eq!(empty.knot_description(), "unknot");

        let cancelled =
            kappa_sum(1, &[(1, nine_eighths.clone()), (-1, nine_eighths.clone())]).unwrap();
        assert_eq!(cancelled.value(), &rational(0, 1));
    }

    #[test]
    fn kappa_sum_rejects_mixed_or_unknown_terms() {
        let level_one = kappa_torus(1, 1, 3).unwrap();
        let level_two = kappa_torus(2, 1, 3).unwrap();
        assert!(kappa_sum(1, &[(1, level_one.clone()), (1, level_two)]).is_err());

        let bound_only = KappaValue::new(rational(1, 2), "mystery".into(), 1, false).unwrap();
        assert!(kappa_sum(1, &[(1, level_one), (1, bound_only)]).is_err());
    }

    #[test]
    fn kappa_sum_is_linear_in_coefficients() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pool = [
            kappa_torus(1, 1, 3).unwrap(),
            kappa_torus(1, 1, 19).unwrap(),
            kappa_torus(1, 3, 7).unwrap(),
        ];
        for _ in 0..50 {
            let first: Vec<(i64, KappaValue)> = (0..rng.gen_range(0..4))
                .map(|_| {
                    (
                        rng.gen_range(-4..=4),
                        pool[rng.gen_range(0..pool.len())].clone(),
                    )
                })
                .collect();
            let second: Vec<(i64, KappaValue)> = (0..rng.gen_range(0..4))
                .map(|_| {
                    (
                        rng.gen_range(-4..=4),
                        pool[rng.gen_range(0..pool.len())].clone(),
                    )
                })
                .collect();

            let mut joined = first.clone();
            joined.extend(second.clone());
            let whole = kappa_sum(1, &joined).unwrap();
            let split = kappa_sum(1, &first).unwrap().value().clone()
                + kappa_sum(1, &second).unwrap().value();
            assert_eq!(whole.value(), &split);

            let mut reversed = joined.clone();
            reversed.reverse();
            assert_eq!(kappa_sum(1, &reversed).unwrap().value(), whole.value());
        }
    }

    #[test]
    fn ten_eighths_check_on_the_k1_cobordism() {
        // sigma = 2, diff = 1, kappa_in = 9/8: holds exactly when out >= 1/2.
        let kappa_in = rational(9, 8);
        let at_half = ten_eighths_check(2, 1, &rational(1, 2), &kappa_in, true).unwrap();
        assert!(at_half.holds);
        assert_eq!(at_half.slack, rational(0, 1));
        assert_eq!(at_half.lhs, rational(3, 8));

        let below = ten_eighths_check(2, 1, &rational(7, 16), &kappa_in, true).unwrap();
        assert!(!below.holds);

        let product = ten_eighths_check(0, 0, &rational(0, 1), &rational(0, 1), false).unwrap();
        assert_eq!(product.lhs, rational(0, 1));
        assert_eq!(product.rhs, rational(0, 1));
        assert!(product.holds);
    }

    #[test]
    fn strict_variant_needs_growing_b_plus() {
        assert!(ten_eighths_check(0, 0, &rational(0, 1), &rational(0, 1), true).is_err());
        assert!(ten_eighths_lower_bound(0, -1, &rational(0, 1), true).is_err());
        assert!(ten_eighths_lower_bound(0, 0, &rational(0, 1), false).is_ok());
    }

    #[test]
    fn check_is_monotone_in_the_outgoing_value() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let sigma = rng.gen_range(-12..=12);
            let diff = rng.gen_range(1..=6);
            let kappa_in = rational(rng.gen_range(-40..=40), 16);
            let kappa_out = rational(rng.gen_range(-40..=40), 16);
            let bump = rational(rng.gen_range(1..=32), 16);
            let base = ten_eighths_check(sigma, diff, &kappa_out, &kappa_in, true).unwrap();
            let raised =
                ten_eighths_check(sigma, diff, &(&kappa_out + &bump), &kappa_in, true).unwrap();
            if base.holds {
                assert!(raised.holds);
            }
            assert!(raised.slack > base.slack);
        }
    }

    #[test]
    fn lower_bound_mode_matches_the_rearrangement() {
        // sigma = 6, diff = 3, kappa_in = 27/8: the c = 3 instance.
        let bound = ten_eighths_lower_bound(6, 3, &rational(27, 8), true).unwrap();
        assert_eq!(bound, rational(1, 2));
        // The bound is the threshold: checking at it holds with zero slack.
        let check = ten_eighths_check(6, 3, &bound, &rational(27, 8), true).unwrap();
        assert!(check.holds);
        assert_eq!(check.slack, rational(0, 1));
    }

    #[test]
    fn cable_lower_bound_is_one_half() {
        for (k, m, c) in [(1, 1, 1), (2, 3, 5), (3, 1, 2), (1, 3, 4), (2, 1, 1)] {
            assert_eq!(
                kappa_lower_bound(k, m, c).unwrap(),
                rational(1, 2),
                "({k},{m},{c})"
            );
        }
    }

    #[test]
    fn report_for_the_smallest_cable() {
        let report = obstruction_report(1, 1, 1).unwrap();
        assert_eq!(report.cable_p, 2);
        assert_eq!(report.torus_q, 19);
        assert_eq!(report.mu_bar, rational(-9, 4));
        assert_eq!(report.kappa_torus.value(), &rational(9, 8));
        assert_eq!(report.kappa_torus_total.value(), &rational(9, 8));
        assert_eq!(report.delta_r_torus, rational(9, 8));
        assert_eq!(report.cover.class_square, 40);
        assert_eq!(report.cover.genus, 0);
        assert_eq!(report.cover.b_plus_cover, 3);
        assert_eq!(report.cover.b_plus_half_cover, 2);
        assert_eq!(report.cover.sigma_cover, 2);
        assert_eq!(report.bplus_diff, 1);
        assert_eq!(report.inequality_lhs, rational(3, 8));
        assert_eq!(report.kappa_lower_bound, rational(1, 2));
        assert!(report.verdict.contains("(4_1)_{2,1}"));
        assert!(report.verdict.contains("not smoothly slice"));
        assert_eq!(report.external_results.len(), 2);
    }

    #[test]
    fn report_scales_with_k_and_copies() {
        let k2 = obstruction_report(2, 1, 1).unwrap();
        assert_eq!(k2.mu_bar, rational(-17, 4));
        assert_eq!(k2.kappa_torus.value(), &rational(17, 8));
        assert_eq!(k2.kappa_lower_bound, rational(1, 2));
        assert!(k2.verdict.contains("(4_1)_{4,1}"));

        let c4 = obstruction_report(1, 3, 4).unwrap();
        assert_eq!(c4.kappa_torus_total.value(), &rational(18, 4));
        assert_eq!(c4.kappa_lower_bound, rational(1, 2));
        assert!(c4.verdict.contains("4*(4_1)_{6,1}"));
    }

    #[test]
    fn report_json_has_provenance_for_each_stage() {
        let report = obstruction_report(1, 1, 1).unwrap();
        let value = report.to_json();
        let provenance = value.get("provenance").unwrap().as_object().unwrap();
        for field in [
            "seifert",
            "mu_bar",
            "kappa_torus",
            "kappa_torus_total",
            "delta_r_torus",
            "cover",
            "bplus_diff",
            "inequality_lhs",
            "kappa_lower_bound",
            "verdict",
        ] {
            assert!(value.get(field).is_some(), "{field}");
            let entry = provenance.get(field).unwrap().as_object().unwrap();
            for key in ["module", "operation", "formula"] {
                assert!(entry.get(key).unwrap().is_string());
            }
        }
        assert_eq!(
            value.get("kappa_lower_bound").unwrap().get("num").unwrap(),
            "1"
        );
        assert_eq!(
            value.get("kappa_lower_bound").unwrap().get("den").unwrap(),
            "2"
        );
    }
}
