//! Levine-Tristram signatures of torus knots by exact jump counting.
//!
//! Run with: cargo run --example torus_knot_signatures

use concordance::exact::rational;
use concordance::lt_signature::{sigma_sum_closed_form, TorusKnotProfile};

fn main() -> concordance::Result<()> {
    // The trefoil: jumps at 5/6 and 7/6, classical signature -2.
    let trefoil = TorusKnotProfile::new(2, 3, false)?;
    let jumps: Vec<String> = trefoil
        .jumps()
        .elements()
        .iter()
        .map(|r| r.to_string())
        .collect();
    println!("jump set of T(2, 3): {{{}}}", jumps.join(", "));
    for x in [rational(1, 4), rational(1, 2), rational(5, 6)] {
        let value = trefoil.signature_at(&x)?;
        let marker = if value.at_jump {
            "  (jump: averaged)"
        } else {
            ""
        };
        println!("sigma_T(2,3)({x}) = {}{marker}", value.value);
    }

    // Root-of-unity sums: sigma^(n) sums the signature at j/n for j < n/2,
    // with the midpoint counted once.
    for (p, q) in [(2u64, 5u64), (2, 19), (12, 119)] {
        let profile = TorusKnotProfile::new(p, q, false)?;
        let sum = profile.sigma_sum(2)?;
        println!("sigma^(2)(T({p}, {q})) = {}", sum.value);
    }

    // The cable family T(pm, pmn - 1) has a closed form, checked against the
    // direct count.
    let direct = TorusKnotProfile::new(2, 19, false)?.sigma_sum(2)?.value;
    let closed = sigma_sum_closed_form(2, 1, 10)?;
    println!("closed form 2(p-1) - p(p-1)(p+1) m^2 n / 3 at (2, 1, 10): {closed}");
    assert_eq!(direct, closed);

    // Mirroring negates every signature.
    let mirror = TorusKnotProfile::new(2, 19, true)?;
    println!("sigma^(2) of the mirror: {}", mirror.sigma_sum(2)?.value);
    Ok(())
}
