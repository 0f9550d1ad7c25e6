//! Certified enclosures of the growth constant: there are
//! Theta(alpha_k^n) palstars of length 2n, with 2k - 1 < alpha_k < 2k - 1/2.
//!
//! ```bash
//! cargo run -p palstar --example growth_constant
//! ```

use num_rational::BigRational;
use palstar::counting::p_sequence;
use palstar::gf::{
    alpha_from_rho, compute_amplitude, decimal_floor, enclosure_decimal, solve_rho,
};

fn main() -> palstar::Result<()> {
    // rho_k is the positive solution of U_k(X) = 2; alpha_k its reciprocal.
    // Both come out as exact rational enclosures of requested width.
    let root = solve_rho(2, 60)?;
    let alpha = alpha_from_rho(&root.rho)?;
    let amplitude = compute_amplitude(2, &root.rho, 40)?;

    println!("k = 2, certified to 50 digits (truncated):");
    println!("  rho_2   = {}", enclosure_decimal(&root.rho, 50).unwrap());
    println!("  alpha_2 = {}", enclosure_decimal(&alpha, 50).unwrap());
    println!("  C_2     = {}", enclosure_decimal(&amplitude.c, 38).unwrap());
    println!("  truncation degrees: {} (rho), {} (C)", root.n_used, amplitude.n_used);

    // p_2(n) ~ alpha_2^{n+1} / C_2: watch the relative error melt away
    let p = p_sequence(2, 30)?;
    let alpha_mid = alpha.midpoint();
    let c_mid = amplitude.c.midpoint();
    println!("\n n   p_2(n) C_2 / alpha_2^(n+1)");
    let mut power = num_traits::pow(alpha_mid.clone(), 6);
    for n in 5..=30usize {
        let ratio = BigRational::from_integer(p.term(n).clone()) * &c_mid / &power;
        if n % 5 == 0 {
            println!("{n:>3}  {}", decimal_floor(&ratio, 12));
        }
        power *= &alpha_mid;
    }

    // alpha_k brackets for a few alphabet sizes
    println!("\nalpha_k enclosures (10 digits):");
    for k in [2u32, 3, 4, 8, 26] {
        let alpha = alpha_from_rho(&solve_rho(k, 12)?.rho)?;
        println!(
            "  k={k:<3} alpha in ({}, {})  [proven bracket ({}, {})]",
            decimal_floor(alpha.lo(), 10),
            decimal_floor(alpha.hi(), 10),
            2 * k - 1,
            BigRational::new((4 * k as i64 - 1).into(), 2.into()),
        );
    }
    Ok(())
}
