//! Negative continued fractions and the congruence solver.
//!
//! Run with: cargo run --example continued_fractions

use concordance::exact::{hj_evaluate, hj_expand, solve_congruence};

fn main() -> concordance::Result<()> {
    // Greedy expansion p/q = a1 - 1/(a2 - 1/(...)) with every ai >= 2 past
    // the first term.
    for (p, q) in [(19u64, 9u64), (59, 49), (97, 1), (7, 4)] {
        let cf = hj_expand(p, q)?;
        let terms: Vec<String> = cf.terms().iter().map(|t| t.to_string()).collect();
        println!("{p}/{q} = [{}]", terms.join(", "));
        assert_eq!(cf.value(), concordance::exact::rational(p as i64, q as i64));
    }

    // A chain of j twos evaluates to (j + 1)/j; these are the long legs of
    // the plumbing graphs.
    for j in [1usize, 4, 9] {
        let chain = vec![2i64; j];
        println!("[{}] = {}", vec!["2"; j].join(", "), hj_evaluate(&chain)?);
    }

    // The Seifert data solver: representative of a^(-1) * c in (0, modulus].
    let beta = solve_congruence(2, -1, 19)?;
    println!("2 * {beta} = -1 (mod 19)");
    let alpha = solve_congruence(59, -1, 3)?;
    println!("59 * {alpha} = -1 (mod 3)");
    Ok(())
}
