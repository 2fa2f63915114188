//! Seifert invariants and negative definite plumbing graphs for the
//! Brieskorn spheres Sigma(2^k, 2^k m, q).
//!
//! Run with: cargo run --example plumbing_graphs

use concordance::plumbing::{
    brieskorn_plumbing, seifert_invariants, special_family_plumbing, BrieskornParams,
};

fn main() -> concordance::Result<()> {
    // Sigma(2, 2, 19): the double branched cover of the torus knot T(2, 19).
    let params = BrieskornParams::new(1, 1, 19)?;
    let data = seifert_invariants(&params)?;
    println!(
        "Sigma({}, {}, {}): euler weight {}, fibers {:?}",
        params.cover_order(),
        params.torus_p()?,
        params.q(),
        data.euler_weight,
        data.fibers
    );

    let tree = brieskorn_plumbing(&params)?;
    println!(
        "plumbing: central weight {}, {} nodes",
        tree.central_weight(),
        tree.node_count()
    );
    for leg in tree.legs() {
        println!("  leg {leg:?}");
    }

    // The twist family q = 2^k 10m - 1 has a second, more structured
    // presentation: central weight -2^k, a short [-m] leg, and 2^k long legs.
    let special = special_family_plumbing(2, 3)?;
    println!(
        "\nspecial presentation for (k, m) = (2, 3): central {}, {} legs, {} nodes",
        special.central_weight(),
        special.legs().len(),
        special.node_count()
    );
    let first_long = &special.legs()[1];
    println!(
        "  long leg pattern: {} twos, then {}, then {} twos",
        first_long.iter().take_while(|&&w| w == -2).count(),
        first_long[first_long.iter().take_while(|&&w| w == -2).count()],
        first_long.iter().rev().take_while(|&&w| w == -2).count()
    );

    // Graphviz output for small graphs.
    let small = brieskorn_plumbing(&BrieskornParams::new(1, 1, 3)?)?;
    println!("\nDOT for the Sigma(2, 2, 3) graph:\n{}", small.to_dot());
    Ok(())
}
