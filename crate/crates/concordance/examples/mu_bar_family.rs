//! The mu_bar invariant over the twist family: constant in m, linear in 2^k.
//!
//! For q = 2^k 10m - 1 the plumbing has signature -(2 + 2^k(2^k m + 7)) and
//! Wu square 2^k - 4^k m, so mu_bar = (sigma - Wu^2)/8 collapses to
//! -2^k - 1/4 whatever m is.
//!
//! Run with: cargo run --example mu_bar_family

use concordance::exact::rational;
use concordance::lattice::{mu_bar, signature_and_determinant, wu_class, IntersectionForm};
use concordance::plumbing::special_family_plumbing;

fn main() -> concordance::Result<()> {
    println!(
        "{:>3} {:>3} {:>6} {:>8} {:>8} {:>8}",
        "k", "m", "nodes", "sigma", "Wu^2", "mu_bar"
    );
    for k in 1..=3u32 {
        for m in [1u64, 3, 5] {
            let tree = special_family_plumbing(k, m)?;
            let form = IntersectionForm::from_tree(&tree);
            let invariants = signature_and_determinant(&form);
            let wu = wu_class(&form)?;
            let mu = mu_bar(&tree)?;
            println!(
                "{k:>3} {m:>3} {:>6} {:>8} {:>8} {:>8}",
                tree.node_count(),
                invariants.signature,
                wu.self_pairing(),
                mu.to_string()
            );
            assert_eq!(mu, rational(-(4 * (1 << k) + 1), 4));
        }
    }
    println!("\nmu_bar = -2^k - 1/4 on every row: the twist parameter m drops out.");
    Ok(())
}
