//! The analytic guardrails behind the certified constants: closed-form
//! envelopes for U_k, the exact bracket inequalities, and the circle scan
//! for competing singularities.
//!
//! ```bash
//! cargo run -p palstar --example envelope_and_scan
//! ```

use num_rational::BigRational;
use palstar::gf::{
    bracket_bound_values, check_bracket_bounds, circle_scan, decimal_floor, series_envelope,
    solve_rho, TruncatedSeries,
};

fn main() -> palstar::Result<()> {
    // U_k is pinched between two closed forms on (0, 1/k); the truncated
    // series plus its tail bound lands inside
    let series = TruncatedSeries::unbordered(2, 60)?;
    println!("envelopes for U_2(x):");
    for (num, den) in [(1i64, 10i64), (1, 5), (1, 4), (3, 10)] {
        let x = BigRational::new(num.into(), den.into());
        let (low, high) = series_envelope(2, &x)?;
        let value = series.eval(&x);
        let tail = series.tail_bound(&x)?;
        println!(
            "  x = {num}/{den}: {} <= [{}, {}] <= {}",
            decimal_floor(&low, 8),
            decimal_floor(&value, 8),
            decimal_floor(&(&value + &tail), 8),
            decimal_floor(&high, 8),
        );
    }

    // the rational inequalities that pin the bracket (2k-1, 2k-1/2)
    let (low, high) = bracket_bound_values(2)?;
    println!("\nbracket inequalities at k = 2: {low} > 2 and {high} < 2");
    let all_hold = (2..=1000).all(|k| check_bracket_bounds(k).unwrap());
    println!("inequalities hold for every k in 2..=1000: {all_hold}");

    // scan the circle |X| = rho_2 for other near-solutions of U = 2
    let scan = circle_scan(2, 360)?;
    println!(
        "\ncircle scan (k=2, {} samples, excluding |psi| < {}):",
        scan.samples, scan.excluded_angle
    );
    println!(
        "  min |U_2(rho e^(i psi)) - 2| = {:.6} at psi = {:.4}",
        scan.min_distance, scan.min_psi
    );
    let rho = solve_rho(2, 17)?.rho.midpoint();
    println!(
        "  for comparison, at psi = 0 (the real root rho = {}...) the distance is 0",
        decimal_floor(&rho, 12)
    );
    Ok(())
}
