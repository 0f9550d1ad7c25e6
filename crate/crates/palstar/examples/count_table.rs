//! Exact palstar and unbordered-word counts: the first values of p_k(n)
//! and u_k(n) for k = 2, 3, 4.
//!
//! ```bash
//! cargo run -p palstar --example count_table
//! ```

use palstar::counting::{p_sequence, u_sequence, verify_gf_identity};

fn main() -> palstar::Result<()> {
    println!("p_k(n): palstars of length 2n");
    print!("{:>6}", "n =");
    for n in 0..=10 {
        print!("{n:>11}");
    }
    println!();
    for k in 2..=4 {
        let p = p_sequence(k, 10)?;
        print!("k = {k}  ");
        for term in p.terms() {
            print!("{term:>11}");
        }
        println!();
    }

    println!("\nu_k(n): unbordered words of length n");
    for k in 2..=4 {
        let u = u_sequence(k, 10)?;
        let row: Vec<String> = u.terms().iter().map(|t| t.to_string()).collect();
        println!("k = {k}: {}", row.join(" "));
    }

    // the counts are tied together by U_k * P_k = 2 P_k - 1
    for k in 2..=4 {
        assert!(verify_gf_identity(k, 500)?);
    }
    println!("\nU_k * P_k = 2 P_k - 1 verified through degree 500 for k = 2, 3, 4");

    // big integers are exact at any size
    let p = p_sequence(2, 120)?;
    println!("\np_2(120) = {}", p.term(120));
    Ok(())
}
