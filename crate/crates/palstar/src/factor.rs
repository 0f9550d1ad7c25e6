//! Palstar recognition and unique factorization into prime palstars.
//!
//! A palstar is a concatenation of nonempty even-length palindromes; a prime
//! palstar is a nonempty palstar that is not the concatenation of two or more
//! nonempty palstars. Prime palstars form a prefix code, so factorization is
//! unique and greedy shortest-prefix stripping recovers it.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::words::{check_budget, enumerate_words, Alphabet, Word};

/// Palindromic radii over the separator-augmented word, built once in O(n);
/// answers "is w[i..j) a palindrome?" in O(1).
struct PalindromeTable {
    radii: Vec<usize>,
}

impl PalindromeTable {
    fn build(w: &Word) -> Self {
        const SEP: u64 = u64::MAX;
        let s = w.symbols();
        let m = 2 * s.len() + 1;
        let t: Vec<u64> = (0..m)
            .map(|i| if i % 2 == 1 { s[i / 2] as u64 } else { SEP })
            .collect();
        let mut radii = vec![0usize; m];
        let (mut center, mut right) = (0usize, 0usize);
        for i in 0..m {
            let mut r = if i < right {
                radii[2 * center - i].min(right - i)
            } else {
                0
            };
            while i > r && i + r + 1 < m && t[i - r - 1] == t[i + r + 1] {
                r += 1;
            }
            radii[i] = r;
            if i + r > right {
                center = i;
                right = i + r;
            }
        }
        PalindromeTable { radii }
    }

    /// Whether w[i..j) is a nonempty even-length palindrome.
    fn is_even_palindrome_range(&self, i: usize, j: usize) -> bool {
        j > i && (j - i) % 2 == 0 && self.radii[i + j] >= j - i
    }
}

/// True iff `w` belongs to P: nonempty, even length, equal to its reversal.
pub fn is_even_palindrome(w: &Word) -> bool {
    !w.is_empty() && w.len() % 2 == 0 && crate::words::is_palindrome(w)
}

/// Palstar recognition by dynamic programming over prefixes: position j is
/// reachable iff some reachable i < j has w[i..j) in P. The empty word is a
/// palstar (the empty concatenation).
pub fn is_palstar(w: &Word) -> bool {
    let n = w.len();
    if n == 0 {
        return true;
    }
    if n % 2 != 0 {
        return false;
    }
    let table = PalindromeTable::build(w);
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    // factors have even length, so only even positions can be reached
    for j in (2..=n).step_by(2) {
        reachable[j] = (0..j)
            .step_by(2)
            .any(|i| reachable[i] && table.is_even_palindrome_range(i, j));
    }
    reachable[n]
}

/// Ordered prime-palstar factors of a word; concatenating them in order
/// reproduces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<Word>,
}

impl Factorization {
    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Concatenation of all factors.
    pub fn joined(&self) -> Word {
        let symbols = self
            .factors
            .iter()
            .flat_map(|f| f.symbols().iter().copied())
            .collect();
        Word::from_raw(symbols)
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Unique factorization into prime palstars, by greedy stripping of the
/// shortest even-palindrome prefix.
///
/// The shortest nonempty palstar prefix is always a single even palindrome
/// (anything composite would contain a shorter one), and it is the first
/// factor of the unique factorization because no prime palstar is a proper
/// prefix of another. Errors with `NotAPalstar` when the strip gets stuck.
pub fn factor_palstar(w: &Word) -> Result<Factorization> {
    let n = w.len();
    if n % 2 != 0 {
        return Err(Error::NotAPalstar { position: 0 });
    }
    let table = PalindromeTable::build(w);
    let mut factors = Vec::new();
    let mut position = 0;
    while position < n {
        let end = (position + 2..=n)
            .step_by(2)
            .find(|&j| table.is_even_palindrome_range(position, j))
            .ok_or(Error::NotAPalstar { position })?;
        factors.push(Word::from_raw(w.symbols()[position..end].to_vec()));
        position = end;
    }
    Ok(Factorization { factors })
}

/// True iff `w` is a nonempty palstar whose factorization has exactly one
/// factor.
///
/// Not the same as unborderedness of `w` itself: `noon` is bordered yet
/// prime.
pub fn is_prime_palstar(w: &Word) -> bool {
    if w.is_empty() || !is_palstar(w) {
        return false;
    }
    factor_palstar(w).map(|f| f.len() == 1).unwrap_or(false)
}

/// Exact number of palstars of length `2n`, by exhaustive enumeration.
pub fn count_palstars_bruteforce(alphabet: Alphabet, n: usize, budget: u64) -> Result<BigInt> {
    check_budget(alphabet, 2 * n, budget)?;
    let mut count: u64 = 0;
    for w in enumerate_words(alphabet, 2 * n) {
        if is_palstar(&w) {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Exact number of prime palstars of length `2n`, by exhaustive enumeration.
pub fn count_prime_palstars_bruteforce(
    alphabet: Alphabet,
    n: usize,
    budget: u64,
) -> Result<BigInt> {
    check_budget(alphabet, 2 * n, budget)?;
    let mut count: u64 = 0;
    for w in enumerate_words(alphabet, 2 * n) {
        if is_prime_palstar(&w) {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}
