//! Expansion of the growth constant in powers of 1/k, with exact rational
//! coefficients obtained from the ratio p_k(n)/p_k(n+1) treated symbolically.
//!
//! ```bash
//! cargo run -p palstar --example inverse_k_expansion
//! ```

use num_traits::Signed;
use palstar::asymptotics::{alpha_inv_series, ratio_expansion};
use palstar::gf::{decimal_floor, solve_rho};

fn main() -> palstar::Result<()> {
    // coefficients of p_k(n)/p_k(n+1) freeze as n grows; the frozen prefix
    // is the 1/alpha_k series
    println!("ratio expansions (first 5 coefficients of k^-1..k^-5):");
    for n in [1, 2, 4, 8, 16, 17] {
        let e = ratio_expansion(n, 5)?;
        println!("  n = {n:<2}  p_k({n})/p_k({}) = {e} + ...", n + 1);
    }

    let stabilized = alpha_inv_series(9)?;
    println!("\nstabilized at n = {}", stabilized.stabilized_at);
    println!("1/alpha_k = {} + O(k^-10)", stabilized.series);

    let alpha = stabilized.series.reciprocal()?;
    println!("alpha_k   = {} + O(k^-8)", alpha);

    // compare the truncated series against certified roots: the remainder
    // shrinks like k^-10
    println!("\n|series(k) - rho_k| against certified enclosures:");
    for k in [2u32, 4, 8, 16, 32] {
        let gap = (stabilized.series.eval_at(k)? - solve_rho(k, 25)?.rho.midpoint()).abs();
        println!("  k={k:<3} {}", decimal_floor(&gap, 20));
    }
    Ok(())
}
