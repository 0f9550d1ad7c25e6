//! The counting recurrences with the alphabet size k left as an
//! indeterminate: exact polynomials instead of integers.
//!
//! ```bash
//! cargo run -p palstar --example symbolic_counts
//! ```

use num_bigint::BigInt;
use palstar::counting::{p_poly, p_sequence, u_poly};

fn main() -> palstar::Result<()> {
    let u = u_poly(6);
    let p = p_poly(6);

    println!("U_k(X) coefficients:");
    for (n, poly) in u.iter().enumerate() {
        println!("  [X^{n}] = {poly}");
    }
    println!("P_k(X) coefficients:");
    for (n, poly) in p.iter().enumerate() {
        println!("  [X^{n}] = {poly}");
    }

    // the leading coefficient of p_k(n) doubles with every n
    println!("\nleading coefficients of p_k(n):");
    let leading: Vec<String> = p
        .iter()
        .skip(1)
        .map(|poly| poly.leading_coefficient().unwrap().to_string())
        .collect();
    println!("  {}", leading.join(", "));

    // plugging an integer back in reproduces the integer sequences exactly
    let at_3: Vec<BigInt> = p.iter().map(|poly| poly.eval(&BigInt::from(3))).collect();
    let direct = p_sequence(3, 6)?;
    assert_eq!(at_3, direct.terms());
    let row: Vec<String> = direct.terms().iter().map(|t| t.to_string()).collect();
    println!("\nevaluating the P-polynomials at k = 3 matches p_sequence: {}", row.join(" "));
    Ok(())
}
