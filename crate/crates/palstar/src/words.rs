//! Alphabet and word primitives: borders, palindromes, and exhaustive
//! enumeration oracles.
//!
//! Symbols are integers `0..k`. The command-line layer maps ASCII letters
//! `a, b, c, ...` onto indices so that dictionary words like `noon` can be
//! used directly.

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Ceiling on how many candidate words the brute-force oracles will visit.
///
/// The oracles exist for desk-scale cross-checking; anything bigger than
/// this should come out of the recurrences instead.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

/// A finite alphabet of `k >= 2` letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alphabet {
    k: u32,
}

impl Alphabet {
    pub fn new(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::AlphabetTooSmall(k));
        }
        Ok(Alphabet { k })
    }

    pub fn size(&self) -> u32 {
        self.k
    }

    /// Number of words of length `n`, or `None` on overflow past `u128`.
    pub fn word_count(&self, n: usize) -> Option<u128> {
        u32::try_from(n)
            .ok()
            .and_then(|n| (self.k as u128).checked_pow(n))
    }
}

/// A finite word; each symbol is an index into some alphabet.
///
/// Words do not carry their alphabet: validity is checked at construction
/// and every predicate below depends only on symbol equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u32>,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word { symbols: Vec::new() }
    }

    pub fn from_symbols(alphabet: Alphabet, symbols: Vec<u32>) -> Result<Self> {
        if let Some(&symbol) = symbols.iter().find(|&&s| s >= alphabet.size()) {
            return Err(Error::SymbolOutOfRange {
                symbol,
                k: alphabet.size(),
            });
        }
        Ok(Word { symbols })
    }

    /// Maps `a -> 0, b -> 1, ...`; rejects letters at or beyond index `k`.
    pub fn from_letters(alphabet: Alphabet, letters: &str) -> Result<Self> {
        let mut symbols = Vec::with_capacity(letters.len());
        for letter in letters.chars() {
            let index = match letter {
                'a'..='z' => letter as u32 - 'a' as u32,
                'A'..='Z' => letter as u32 - 'A' as u32,
                _ => return Err(Error::LetterOutOfRange { letter, k: alphabet.size() }),
            };
            if index >= alphabet.size() {
                return Err(Error::LetterOutOfRange { letter, k: alphabet.size() });
            }
            symbols.push(index);
        }
        Ok(Word { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn reversed(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word { symbols }
    }

    pub(crate) fn from_raw(symbols: Vec<u32>) -> Self {
        Word { symbols }
    }
}

impl std::fmt::Display for Word {
    /// Letters when every symbol fits in `a..=z`, comma-joined indices otherwise.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.symbols.iter().all(|&s| s < 26) {
            for &s in &self.symbols {
                write!(f, "{}", (b'a' + s as u8) as char)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Longest-border lengths for every prefix (the KMP failure function).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderArray {
    values: Vec<usize>,
}

impl BorderArray {
    /// `values()[i]` is the length of the longest border of the prefix of
    /// length `i + 1`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Longest border of the whole word; `None` for the empty word.
    pub fn last(&self) -> Option<usize> {
        self.values.last().copied()
    }
}

/// Failure-function computation, linear in `|w|`.
pub fn border_array(w: &Word) -> BorderArray {
    let s = w.symbols();
    let mut values = vec![0usize; s.len()];
    for i in 1..s.len() {
        let mut b = values[i - 1];
        loop {
            if s[i] == s[b] {
                values[i] = b + 1;
                break;
            }
            if b == 0 {
                values[i] = 0;
                break;
            }
            b = values[b - 1];
        }
    }
    BorderArray { values }
}

/// A word is unbordered when no nonempty proper prefix is also a suffix.
///
/// Rejects the empty word: borderedness is undefined there, and the
/// generating-function convention `u_k(0) = 1` lives in the counting layer.
pub fn is_unbordered(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(border_array(w).last() == Some(0))
}

/// True iff `w` equals its reversal. The empty word is a palindrome.
pub fn is_palindrome(w: &Word) -> bool {
    let s = w.symbols();
    let n = s.len();
    (0..n / 2).all(|i| s[i] == s[n - 1 - i])
}

/// Iterator over all `k^n` words of length `n` in lexicographic order.
pub fn enumerate_words(alphabet: Alphabet, n: usize) -> WordIter {
    WordIter {
        k: alphabet.size(),
        state: Some(vec![0; n]),
    }
}

pub struct WordIter {
    k: u32,
    state: Option<Vec<u32>>,
}

impl Iterator for WordIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.state.as_ref()?.clone();
        // Odometer increment on the rightmost position.
        let mut next = self.state.take().unwrap();
        let mut pos = next.len();
        loop {
            if pos == 0 {
                self.state = None;
                break;
            }
            pos -= 1;
            next[pos] += 1;
            if next[pos] < self.k {
                self.state = Some(next);
                break;
            }
            next[pos] = 0;
        }
        Some(Word { symbols: current })
    }
}

pub(crate) fn check_budget(alphabet: Alphabet, n: usize, budget: u64) -> Result<()> {
    let words = alphabet
        .word_count(n)
        .ok_or(Error::BudgetExceeded { words: u128::MAX, budget })?;
    if words > budget as u128 {
        return Err(Error::BudgetExceeded { words, budget });
    }
    Ok(())
}

/// Exact number of unbordered words of length `n >= 1`, by exhaustive
/// enumeration. Refuses when `k^n` exceeds `budget`.
pub fn count_unbordered_bruteforce(alphabet: Alphabet, n: usize, budget: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    check_budget(alphabet, n, budget)?;
    let mut count: u64 = 0;
    for w in enumerate_words(alphabet, n) {
        if border_array(&w).last() == Some(0) {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn word(letters: &str) -> Word {
        Word::from_letters(Alphabet::new(26).unwrap(), letters).unwrap()
    }

    /// Definitional quadratic oracle: a border is a nonempty proper prefix
    /// that is also a suffix.
    fn naive_borders(w: &Word) -> Vec<usize> {
        let s = w.symbols();
        (1..s.len())
            .filter(|&len| s[..len] == s[s.len() - len..])
            .collect()
    }

    fn naive_border_array(w: &Word) -> Vec<usize> {
        (1..=w.len())
            .map(|prefix_len| {
                let prefix = Word::from_raw(w.symbols()[..prefix_len].to_vec());
                naive_borders(&prefix).into_iter().max().unwrap_or(0)
            })
            .collect()
    }

    #[test]
    fn border_array_examples() {
        assert_eq!(border_array(&word("ionization")).last(), Some(3));
        assert_eq!(border_array(&word("ab")).values(), &[0, 0]);
        // noon: frozen from the definitional prefix/suffix oracle
        assert_eq!(border_array(&word("noon")).values(), &[0, 0, 0, 1]);
    }

    #[test]
    fn border_array_matches_definitional_check() {
        let a = Alphabet::new(2).unwrap();
        for n in 0..=12 {
            for w in enumerate_words(a, n) {
                assert_eq!(
                    border_array(&w).values(),
                    naive_border_array(&w).as_slice(),
                    "mismatch on {w}"
                );
            }
        }
    }

    #[test]
    fn border_array_invariants() {
        let a = Alphabet::new(3).unwrap();
        for w in enumerate_words(a, 7) {
            let values = border_array(&w);
            let values = values.values();
            for (i, &v) in values.iter().enumerate() {
                assert!(v <= i);
                if i + 1 < values.len() {
                    assert!(values[i + 1] <= v + 1);
                }
            }
        }
    }

    #[test]
    fn bordered_words_have_short_borders() {
        // every bordered word of length n has a border of length <= n/2
        let a = Alphabet::new(2).unwrap();
        for n in 2..=14 {
            for w in enumerate_words(a, n) {
                let borders = naive_borders(&w);
                if let Some(&shortest) = borders.first() {
                    assert!(shortest <= n / 2, "word {w} has only long borders");
                }
            }
        }
    }

    #[test]
    fn unborderedness_examples() {
        assert!(!is_unbordered(&word("noon")).unwrap());
        assert!(!is_unbordered(&word("ionization")).unwrap());
        assert!(is_unbordered(&word("q")).unwrap());
        assert_eq!(is_unbordered(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn palindrome_examples() {
        assert!(is_palindrome(&word("radar")));
        assert!(is_palindrome(&Word::empty()));
        assert!(!is_palindrome(&word("ab")));
    }

    #[test]
    fn enumeration_is_exhaustive_and_ordered() {
        let a2 = Alphabet::new(2).unwrap();
        assert_eq!(enumerate_words(a2, 0).count(), 1);
        let len2: Vec<String> = enumerate_words(a2, 2).map(|w| w.to_string()).collect();
        assert_eq!(len2, ["aa", "ab", "ba", "bb"]);
        let a3 = Alphabet::new(3).unwrap();
        assert_eq!(enumerate_words(a3, 4).count(), 81);
        let mut sorted: Vec<Word> = enumerate_words(a3, 3).collect();
        let original = sorted.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(original, sorted);
    }

    #[test]
    fn unbordered_counts() {
        let a2 = Alphabet::new(2).unwrap();
        let a3 = Alphabet::new(3).unwrap();
        let budget = DEFAULT_ENUMERATION_BUDGET;
        assert_eq!(count_unbordered_bruteforce(a2, 4, budget).unwrap(), 6.into());
        assert_eq!(count_unbordered_bruteforce(a2, 1, budget).unwrap(), 2.into());
        assert_eq!(count_unbordered_bruteforce(a3, 2, budget).unwrap(), 6.into());
        // frozen from exhaustive enumeration of all 2^7 words
        assert_eq!(count_unbordered_bruteforce(a2, 7, budget).unwrap(), 40.into());
    }

    #[test]
    fn unbordered_count_complements_bordered() {
        let a2 = Alphabet::new(2).unwrap();
        let a3 = Alphabet::new(3).unwrap();
        for (a, n) in [(a2, 8), (a3, 5)] {
            let bordered = enumerate_words(a, n)
                .filter(|w| !naive_borders(w).is_empty())
                .count();
            let total = a.word_count(n).unwrap() as usize;
            let unbordered: BigInt =
                count_unbordered_bruteforce(a, n, DEFAULT_ENUMERATION_BUDGET).unwrap();
            assert_eq!(unbordered, BigInt::from(total - bordered));
        }
    }

    #[test]
    fn unbordered_count_bounds() {
        // k^n - k^{n-1} above; the even/odd truncated geometric sums below
        let a = Alphabet::new(2).unwrap();
        for n in 2..=14u32 {
            let count = count_unbordered_bruteforce(a, n as usize, DEFAULT_ENUMERATION_BUDGET)
                .unwrap();
            let upper = BigInt::from(2u64.pow(n) - 2u64.pow(n - 1));
            let low_start = if n % 2 == 0 { n / 2 } else { n / 2 + 1 };
            let lower =
                BigInt::from(2i64.pow(n) - (low_start..n).map(|j| 2i64.pow(j)).sum::<i64>());
            assert!(count <= upper, "n={n}");
            assert!(count >= lower, "n={n}");
        }
    }

    #[test]
    fn counts_are_partition_independent() {
        // splitting the enumeration by first symbol must not change the total
        let a = Alphabet::new(3).unwrap();
        let n = 6;
        let whole = count_unbordered_bruteforce(a, n, DEFAULT_ENUMERATION_BUDGET).unwrap();
        let mut by_prefix = BigInt::from(0);
        for first in 0..3u32 {
            for mut rest in enumerate_words(a, n - 1).map(|w| w.symbols().to_vec()) {
                rest.insert(0, first);
                let w = Word::from_raw(rest);
                if border_array(&w).last() == Some(0) {
                    by_prefix += 1;
                }
            }
        }
        assert_eq!(whole, by_prefix);
    }

    #[test]
    fn budget_is_enforced() {
        let a = Alphabet::new(2).unwrap();
        let err = count_unbordered_bruteforce(a, 20, 1000).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        assert!(count_unbordered_bruteforce(a, 9, 512).is_ok());
        assert!(count_unbordered_bruteforce(a, 10, 512).is_err());
    }

    #[test]
    fn alphabet_and_word_validation() {
        assert_eq!(Alphabet::new(1), Err(Error::AlphabetTooSmall(1)));
        assert_eq!(Alphabet::new(0), Err(Error::AlphabetTooSmall(0)));
        let a = Alphabet::new(2).unwrap();
        assert!(Word::from_symbols(a, vec![0, 1, 0]).is_ok());
        assert_eq!(
            Word::from_symbols(a, vec![0, 2]),
            Err(Error::SymbolOutOfRange { symbol: 2, k: 2 })
        );
        assert_eq!(
            Word::from_letters(a, "abc"),
            Err(Error::LetterOutOfRange { letter: 'c', k: 2 })
        );
        assert!(Word::from_letters(a, "a b").is_err());
    }
}
