//! Recognize palstars and factor them into prime palstars.
//!
//! ```bash
//! cargo run -p palstar --example factor_words
//! ```

use palstar::factor::{factor_palstar, is_palstar, is_prime_palstar};
use palstar::words::{Alphabet, Word};

fn main() -> palstar::Result<()> {
    let alphabet = Alphabet::new(26)?;

    println!("word        palstar  prime  factorization");
    for letters in ["noon", "appall", "assailli", "abba", "aabbaa", "redder", "ab"] {
        let word = Word::from_letters(alphabet, letters)?;
        let factors = match factor_palstar(&word) {
            Ok(f) => f.to_string(),
            Err(e) => format!("({e})"),
        };
        println!(
            "{letters:<11} {:<8} {:<6} {factors}",
            is_palstar(&word),
            is_prime_palstar(&word),
        );
    }

    // `noon` shows why palstar primality is not unborderedness of the word:
    // it has the border `n` yet no proper split into even palindromes.
    let noon = Word::from_letters(alphabet, "noon")?;
    println!(
        "\nnoon is bordered ({}), yet a prime palstar ({})",
        !palstar::words::is_unbordered(&noon)?,
        is_prime_palstar(&noon),
    );

    // every factor returned is itself prime, and the factors concatenate
    // back to the input
    let word = Word::from_letters(alphabet, "assailliabbanoon")?;
    let factorization = factor_palstar(&word)?;
    assert_eq!(factorization.joined(), word);
    println!(
        "\n{} -> {} ({} prime factors)",
        word,
        factorization,
        factorization.len()
    );
    Ok(())
}
