//! Brute-force string enumeration against the counting recurrences: the
//! ground truth that gates everything downstream.
//!
//! ```bash
//! cargo run -p palstar --example oracle_cross_check
//! ```

use palstar::counting::{p_sequence, u_sequence};
use palstar::factor::{count_palstars_bruteforce, count_prime_palstars_bruteforce};
use palstar::words::{count_unbordered_bruteforce, Alphabet, DEFAULT_ENUMERATION_BUDGET};

fn main() -> palstar::Result<()> {
    let budget = DEFAULT_ENUMERATION_BUDGET;

    for k in [2u32, 3] {
        let alphabet = Alphabet::new(k)?;
        let max_n = if k == 2 { 7 } else { 5 };
        let u = u_sequence(k, max_n)?;
        let p = p_sequence(k, max_n)?;

        println!("k = {k}");
        println!("  n | unbordered brute/rec | palstars brute/rec | primes brute (= u)");
        for n in 1..=max_n {
            let unbordered = count_unbordered_bruteforce(alphabet, n, budget)?;
            let palstars = count_palstars_bruteforce(alphabet, n, budget)?;
            let primes = count_prime_palstars_bruteforce(alphabet, n, budget)?;
            assert_eq!(unbordered, *u.term(n));
            assert_eq!(palstars, *p.term(n));
            assert_eq!(primes, *u.term(n)); // the length-n/length-2n bijection
            println!(
                "  {n} | {unbordered:>10} {:>9} | {palstars:>9} {:>8} | {primes:>7}",
                u.term(n),
                p.term(n),
            );
        }
        println!();
    }

    // the budget keeps enumeration honest
    let alphabet = Alphabet::new(2)?;
    match count_unbordered_bruteforce(alphabet, 64, budget) {
        Err(e) => println!("length 64 refused as expected: {e}"),
        Ok(_) => unreachable!("2^64 words cannot be enumerated"),
    }
    Ok(())
}
