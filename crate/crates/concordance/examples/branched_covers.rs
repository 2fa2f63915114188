//! Homology of cyclic branched covers: the generic formula and the cable
//! disk data built on top of it.
//!
//! Run with: cargo run --example branched_covers

use concordance::cover::{
    branched_cover_invariants, cable_disk_data, is_prime_power, AmbientData, SurfaceData,
};

fn main() -> concordance::Result<()> {
    // The raw cover formula, fed by hand with the k = 1 disk data: a sphere
    // of square 40 in a twice-punctured CP^2 # CP^2, boundary sums -18 and 0.
    let ambient = AmbientData::cp2_sum(2);
    let surface = SurfaceData {
        genus: 0,
        class_square: 40,
        divisibility: 2,
        sigma_n_bottom: -18,
        sigma_n_top: 0,
    };
    let cover = branched_cover_invariants(2, &ambient, &surface)?;
    println!(
        "double cover by hand: b+ = {}, sigma = {}",
        cover.b_plus, cover.sigma
    );

    // The same numbers with every boundary sum recomputed from jump sets.
    println!(
        "\n{:>3} {:>3} {:>3} {:>8} {:>8} {:>10} {:>8}",
        "k", "m", "c", "[S]^2", "b+(2^k)", "b+(2^k-1)", "sigma"
    );
    for k in 1..=3u32 {
        for (m, c) in [(1u64, 1u64), (3, 2)] {
            let data = cable_disk_data(k, m, c)?;
            println!(
                "{k:>3} {m:>3} {c:>3} {:>8} {:>8} {:>10} {:>8}",
                data.class_square, data.b_plus_cover, data.b_plus_half_cover, data.sigma_cover
            );
        }
    }
    println!("\npattern: b+ = c(2^k + 1) and c(2^(k-1) + 1), sigma = 2c.");

    // Cover orders must be prime powers dividing the class divisibility.
    for n in [2u64, 4, 6, 9] {
        println!("n = {n}: prime power? {}", is_prime_power(n));
    }
    Ok(())
}
