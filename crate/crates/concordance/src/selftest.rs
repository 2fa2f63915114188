//! Embedded acceptance grid: the checks CI runs are the checks users run.
//!
//! Ten numbered criteria cover the full pipeline, from continued fractions to
//! the final concordance bound. Each criterion recomputes its grid from
//! scratch and reports a pass/fail outcome with a short detail string; a
//! failure carries the first violated equality. Everything here is exact
//! arithmetic, no tolerances.

use num_integer::Integer;

use crate::cover::cable_disk_data;
use crate::exact::{hj_expand, rational, Rational};
use crate::lattice::{mu_bar, signature_and_determinant, wu_class, IntersectionForm};
use crate::lt_signature::{sigma_sum_closed_form, JumpSet, TorusKnotProfile};
use crate::obstruction::{kappa_lower_bound, kappa_torus};
use crate::plumbing::{brieskorn_plumbing, special_family_plumbing, BrieskornParams, PlumbingTree};
use crate::{Error, Result};

/// Result of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Number of acceptance criteria.
pub const CRITERION_COUNT: u32 = 10;

/// Run a single criterion by id (1-based); `None` for an unknown id.
pub fn run_criterion(id: u32) -> Option<CriterionOutcome> {
    let (name, run): (&'static str, fn() -> Result<String>) = match id {
        1 => ("mu_bar constant on the twist family", criterion_1),
        2 => ("graph presentation independence", criterion_2),
        3 => ("signature and Wu square constants", criterion_3),
        4 => ("signature sum closed form vs direct count", criterion_4),
        5 => ("signature spot values", criterion_5),
        6 => ("branched cover homology grid", criterion_6),
        7 => ("kappa values on the twist family", criterion_7),
        8 => ("cable lower bound is exactly 1/2", criterion_8),
        9 => ("property suites", criterion_9),
        10 => ("small lattice oracle", criterion_10),
        _ => return None,
    };
    let outcome = match run() {
        Ok(detail) => CriterionOutcome {
            id,
            name,
            passed: true,
            detail,
        },
        Err(err) => CriterionOutcome {
            id,
            name,
            passed: false,
            detail: err.to_string(),
        },
    };
    Some(outcome)
}

/// Run the full acceptance grid in order.
pub fn run_acceptance() -> Vec<CriterionOutcome> {
    (1..=CRITERION_COUNT)
        .map(|id| run_criterion(id).expect("ids are exhaustive"))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Consistency(msg()))
    }
}

/// `-2^k - 1/4` as a rational.
fn family_mu_bar(k: u32) -> Rational {
    rational(-(4 * (1i64 << k) + 1), 4)
}

fn criterion_1() -> Result<String> {
    let mut points = 0;
    let mut largest = 0;
    for k in 1..=4u32 {
        for m in [1u64, 3, 5, 7] {
            let tree = special_family_plumbing(k, m)?;
            let mu = mu_bar(&tree)?;
            ensure(mu == family_mu_bar(k), || {
                format!("mu_bar of the special graph (k, m) = ({k}, {m}) is {mu}")
            })?;
            points += 1;
            largest = largest.max(tree.node_count());
        }
    }
    Ok(format!(
        "{points} grid points, largest lattice {largest} nodes"
    ))
}

fn criterion_2() -> Result<String> {
    let mut points = 0;
    for k in 1..=3u32 {
        for m in [1u64, 3, 5] {
            let params = BrieskornParams::special_family(k, m)?;
            let general = mu_bar(&brieskorn_plumbing(&params)?)?;
            let special = mu_bar(&special_family_plumbing(k, m)?)?;
            ensure(general == special && general == family_mu_bar(k), || {
                format!("presentations disagree at (k, m) = ({k}, {m}): {general} vs {special}")
            })?;
            points += 1;
        }
    }
    Ok(format!("{points} grid points, both graph presentations"))
}

fn criterion_3() -> Result<String> {
    let mut points = 0;
    for k in 1..=4u32 {
        for m in [1u64, 3, 5, 7] {
            let tree = special_family_plumbing(k, m)?;
            let form = IntersectionForm::from_tree(&tree);
            let invariants = signature_and_determinant(&form);
            let two_k = 1i64 << k;
            let expected_sigma = -(2 + two_k * (two_k * m as i64 + 7));
            ensure(invariants.signature == expected_sigma, || {
                format!(
                    "signature at (k, m) = ({k}, {m}) is {}, expected {expected_sigma}",
                    invariants.signature
                )
            })?;
            let wu = wu_class(&form)?;
            let expected_square = two_k - two_k * two_k * m as i64;
            ensure(wu.self_pairing() == expected_square, || {
                format!(
                    "Wu square at (k, m) = ({k}, {m}) is {}, expected {expected_square}",
                    wu.self_pairing()
                )
            })?;
            points += 1;
        }
    }
    Ok(format!("{points} grid points, signature and Wu square"))
}

fn criterion_4() -> Result<String> {
    let mut points = 0;
    for p in [2u64, 4, 8] {
        for m in [1u64, 3] {
            for n in [1u64, 2, 3, 10] {
                let big_p = p * m;
                let big_q = p * m * n - 1;
                if big_p * big_q > 2000 {
                    continue;
                }
                let closed = sigma_sum_closed_form(p, m, n)?;
                let direct = TorusKnotProfile::new(big_p, big_q, false)?.sigma_sum(p)?;
                ensure(direct.jump_warnings.is_empty(), || {
                    format!("unexpected jump evaluation at (p, m, n) = ({p}, {m}, {n})")
                })?;
                ensure(closed == direct.value, || {
                    format!(
                        "closed form {closed} != direct count {} at (p, m, n) = ({p}, {m}, {n})",
                        direct.value
                    )
                })?;
                points += 1;
            }
        }
    }
    Ok(format!(
        "{points} parameter triples, brute-force jump counting as oracle"
    ))
}

fn criterion_5() -> Result<String> {
    let trefoil = TorusKnotProfile::new(2, 3, false)?;
    ensure(trefoil.classical_signature() == -2, || {
        format!("sigma(T(2,3)) = {}", trefoil.classical_signature())
    })?;
    let five = TorusKnotProfile::new(2, 5, false)?.sigma_sum(2)?;
    ensure(five.value == -4, || {
        format!("sigma^(2)(T(2,5)) = {}", five.value)
    })?;
    let nineteen = TorusKnotProfile::new(2, 19, false)?.sigma_sum(2)?;
    ensure(nineteen.value == -18, || {
        format!("sigma^(2)(T(2,19)) = {}", nineteen.value)
    })?;
    Ok("3 spot values fixing the sign convention".into())
}

fn criterion_6() -> Result<String> {
    let mut points = 0;
    for k in 1..=4u32 {
        for m in [1u64, 3, 5] {
            for c in 1..=4u64 {
                let data = cable_disk_data(k, m, c)?;
                let two_k = 1i64 << k;
                let ci = c as i64;
                let expected = (
                    10 * two_k * two_k * (m * m) as i64 * ci,
                    0u64,
                    ci * (two_k + 1),
                    ci * (two_k / 2 + 1),
                    2 * ci,
                );
                let got = (
                    data.class_square,
                    data.genus,
                    data.b_plus_cover,
                    data.b_plus_half_cover,
                    data.sigma_cover,
                );
                ensure(got == expected, || {
                    format!("cover data at (k, m, c) = ({k}, {m}, {c}): {got:?} != {expected:?}")
                })?;
                points += 1;
            }
        }
    }
    Ok(format!(
        "{points} grid points, every boundary sum recomputed from jump sets"
    ))
}

fn criterion_7() -> Result<String> {
    let mut points = 0;
    for k in 1..=4u32 {
        for m in [1u64, 3, 5, 7] {
            let q = BrieskornParams::special_family(k, m)?.q();
            let value = kappa_torus(k, m, q)?;
            let expected = rational(1 << (k - 1), 1) + rational(1, 8);
            ensure(value.value() == &expected, || {
                format!(
                    "kappa at (k, m) = ({k}, {m}) is {}, expected {expected}",
                    value.value()
                )
            })?;
            points += 1;
        }
    }
    Ok(format!("{points} grid points, kappa = 2^(k-1) + 1/8"))
}

fn criterion_8() -> Result<String> {
    let mut points = 0;
    let half = rational(1, 2);
    for k in 1..=4u32 {
        for m in [1u64, 3, 5] {
            for c in 1..=4u64 {
                let bound = kappa_lower_bound(k, m, c)?;
                ensure(bound == half, || {
                    format!("bound at (k, m, c) = ({k}, {m}, {c}) is {bound}")
                })?;
                points += 1;
            }
        }
        let bound = kappa_lower_bound(k, 7, 1)?;
        ensure(bound == half, || {
            format!("bound at (k, m, c) = ({k}, 7, 1) is {bound}")
        })?;
        points += 1;
    }
    Ok(format!(
        "{points} grid points, cancellation asserted inside the bound"
    ))
}

fn criterion_9() -> Result<String> {
    // Continued-fraction round trip over every reduced fraction with p <= 500.
    let mut fractions = 0;
    for p in 1..=500u64 {
        for q in 1..=p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let cf = hj_expand(p, q)?;
            ensure(cf.value() == rational(p as i64, q as i64), || {
                format!("round trip failed for {p}/{q}")
            })?;
            fractions += 1;
        }
    }

    // Wu characteristic condition re-verified entry by entry, and negative
    // definiteness with signature -n, on a family of plumbing lattices.
    let mut lattices = 0;
    let mut trees: Vec<PlumbingTree> = Vec::new();
    for (k, m, q) in [
        (1u32, 1u64, 3u64),
        (1, 1, 19),
        (1, 3, 7),
        (1, 5, 3),
        (2, 1, 3),
        (2, 3, 5),
        (2, 3, 239),
        (3, 1, 7),
    ] {
        trees.push(brieskorn_plumbing(&BrieskornParams::new(k, m, q)?)?);
    }
    for (k, m) in [(1u32, 1u64), (1, 3), (2, 1), (2, 3)] {
        trees.push(special_family_plumbing(k, m)?);
    }
    for tree in &trees {
        let form = IntersectionForm::from_tree(tree);
        let n = form.dim();
        let invariants = signature_and_determinant(&form);
        ensure(
            invariants.negative_definite && invariants.signature == -(n as i64),
            || format!("a {n}-node plumbing lattice is not negative definite"),
        )?;
        let wu = wu_class(&form)?;
        for i in 0..n {
            let pairing: i64 = (0..n)
                .filter(|&j| wu.coefficients()[j])
                .map(|j| form.entry(i, j))
                .sum();
            ensure((pairing - form.entry(i, i)) % 2 == 0, || {
                format!("Wu condition fails at basis vector {i} of a {n}-node lattice")
            })?;
        }
        lattices += 1;
    }

    // Jump sets: cardinality (p-1)(q-1) and symmetry under r -> 2 - r.
    let mut jump_sets = 0;
    for (p, q) in [
        (2u64, 3u64),
        (2, 19),
        (3, 4),
        (3, 5),
        (4, 19),
        (5, 6),
        (6, 59),
        (8, 79),
    ] {
        let jumps = JumpSet::new(p, q)?;
        ensure(jumps.len() as u64 == (p - 1) * (q - 1), || {
            format!("jump count for T({p},{q}) is {}", jumps.len())
        })?;
        let elements = jumps.elements();
        let two = rational(2, 1);
        for (r, s) in elements.iter().zip(elements.iter().rev()) {
            ensure(r + s == two, || {
                format!("jump set of T({p},{q}) is not symmetric about 1: {r} pairs with {s}")
            })?;
        }
        jump_sets += 1;
    }

    // Mirror anti-symmetry of the root-of-unity sums.
    let mut mirrored = 0;
    for (p, q) in [(2u64, 3u64), (2, 19), (3, 4), (6, 59)] {
        let plain = TorusKnotProfile::new(p, q, false)?;
        let mirror = TorusKnotProfile::new(p, q, true)?;
        for n in [1u64, 2, 3, 4, 8] {
            let a = plain.sigma_sum(n)?.value;
            let b = mirror.sigma_sum(n)?.value;
            ensure(a == -b, || {
                format!("sigma^({n}) of T({p},{q}): {a} vs mirrored {b}")
            })?;
            mirrored += 1;
        }
    }

    Ok(format!(
        "{fractions} fractions round-tripped, {lattices} lattices re-verified, \
         {jump_sets} jump sets symmetric, {mirrored} mirror sums"
    ))
}

fn criterion_10() -> Result<String> {
    let tree = brieskorn_plumbing(&BrieskornParams::new(1, 1, 3)?)?;
    ensure(tree.node_count() == 3, || {
        format!("expected 3 nodes, got {}", tree.node_count())
    })?;
    let form = IntersectionForm::from_tree(&tree);

    // Independent 3x3 cofactor expansion of the determinant.
    let e = |i, j| form.entry(i, j);
    let hand_det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    ensure(hand_det == -3, || format!("hand determinant is {hand_det}"))?;

    let invariants = signature_and_determinant(&form);
    ensure(invariants.signature == -3, || {
        format!("signature {}", invariants.signature)
    })?;
    ensure(invariants.determinant == (-3).into(), || {
        format!("determinant {}", invariants.determinant)
    })?;
    let wu = wu_class(&form)?;
    ensure(wu.support() == vec![0], || {
        format!("Wu support {:?}", wu.support())
    })?;
    ensure(wu.self_pairing() == -1, || {
        format!("Wu square {}", wu.self_pairing())
    })?;
    let mu = mu_bar(&tree)?;
    ensure(mu == rational(-1, 4), || format!("mu_bar {mu}"))?;
    let kappa = kappa_torus(1, 1, 3)?;
    ensure(kappa.value() == &rational(1, 8), || {
        format!("kappa {}", kappa.value())
    })?;
    Ok("3x3 lattice pinned to a cofactor-expansion oracle".into())
}
