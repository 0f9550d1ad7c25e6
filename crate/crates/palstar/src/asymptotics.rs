//! Expansion of the growth constant in descending powers of the alphabet
//! size: writing p_k(n) = k^n f_n(1/k) and expanding p_k(n)/p_k(n+1) as a
//! power series in 1/k gives better and better approximations of 1/alpha_k;
//! the leading coefficients freeze once n is large enough.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::counting::p_poly;
use crate::error::{Error, Result};

/// Give up on stabilization past this n unless told otherwise.
pub const DEFAULT_STABILIZATION_LIMIT: usize = 64;

/// Truncated series in descending powers of k with exact rational
/// coefficients: `coefficients()[j]` multiplies k^(leading_power - j).
/// The first coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseKSeries {
    leading_power: i64,
    coefficients: Vec<BigRational>,
}

impl InverseKSeries {
    pub fn new(leading_power: i64, coefficients: Vec<BigRational>) -> Result<Self> {
        match coefficients.first() {
            None => Err(Error::invalid("series needs at least one coefficient")),
            Some(c) if c.is_zero() => Err(Error::ZeroLeadingCoefficient),
            Some(_) => Ok(InverseKSeries { leading_power, coefficients }),
        }
    }

    pub fn leading_power(&self) -> i64 {
        self.leading_power
    }

    /// Number of retained terms.
    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// Coefficient of k^power, zero outside the retained window.
    pub fn coefficient_of_power(&self, power: i64) -> BigRational {
        let j = self.leading_power - power;
        if j < 0 || j as usize >= self.coefficients.len() {
            BigRational::zero()
        } else {
            self.coefficients[j as usize].clone()
        }
    }

    /// Multiplicative inverse, truncated to the same order:
    /// self * reciprocal = 1 + O(k^(leading-order)).
    pub fn reciprocal(&self) -> Result<InverseKSeries> {
        let c0 = &self.coefficients[0];
        if c0.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let mut inverse = Vec::with_capacity(self.coefficients.len());
        inverse.push(c0.recip());
        for j in 1..self.coefficients.len() {
            let mut acc = BigRational::zero();
            for i in 1..=j {
                let c = self
                    .coefficients
                    .get(i)
                    .cloned()
                    .unwrap_or_else(BigRational::zero);
                acc += c * &inverse[j - i];
            }
            inverse.push(-acc / c0);
        }
        Ok(InverseKSeries {
            leading_power: -self.leading_power,
            coefficients: inverse,
        })
    }

    /// Exact evaluation of the truncated series at an integer k >= 2.
    pub fn eval_at(&self, k: u32) -> Result<BigRational> {
        if k < 2 {
            return Err(Error::AlphabetTooSmall(k));
        }
        let kb = BigInt::from(k);
        let mut total = BigRational::zero();
        for (j, c) in self.coefficients.iter().enumerate() {
            let power = self.leading_power - j as i64;
            let monomial = if power >= 0 {
                BigRational::from_integer(kb.pow(power as u32))
            } else {
                BigRational::new(BigInt::one(), kb.pow((-power) as u32))
            };
            total += c * monomial;
        }
        Ok(total)
    }
}

impl std::ops::Mul for &InverseKSeries {
    type Output = InverseKSeries;

    /// Product truncated to the shorter operand's order.
    fn mul(self, rhs: &InverseKSeries) -> InverseKSeries {
        let order = self.order().min(rhs.order());
        let mut coefficients = vec![BigRational::zero(); order];
        for (i, a) in self.coefficients.iter().take(order).enumerate() {
            for (j, b) in rhs.coefficients.iter().take(order - i).enumerate() {
                coefficients[i + j] += a * b;
            }
        }
        InverseKSeries {
            leading_power: self.leading_power + rhs.leading_power,
            coefficients,
        }
    }
}

impl std::fmt::Display for InverseKSeries {
    /// Textbook-style rendering, e.g. `2k - 1/2 - 1/(4k) - 3/(32k^2)`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (j, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = self.leading_power - j as i64;
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let numer = c.numer().magnitude();
            let denom = c.denom().magnitude();
            let k_part = |p: u64| -> String {
                if p == 1 { "k".to_string() } else { format!("k^{p}") }
            };
            if power > 0 {
                let kp = k_part(power as u64);
                if denom.is_one() {
                    if numer.is_one() {
                        write!(f, "{kp}")?;
                    } else {
                        write!(f, "{numer}{kp}")?;
                    }
                } else {
                    write!(f, "({numer}/{denom}){kp}")?;
                }
            } else if power == 0 {
                if denom.is_one() {
                    write!(f, "{numer}")?;
                } else {
                    write!(f, "{numer}/{denom}")?;
                }
            } else {
                let kp = k_part((-power) as u64);
                if denom.is_one() {
                    write!(f, "{numer}/{kp}")?;
                } else {
                    write!(f, "{numer}/({denom}{kp})")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Expansion of p_k(n)/p_k(n+1) as a series in 1/k with `terms`
/// coefficients, starting at k^-1.
///
/// With t = 1/k, p_k(n) = k^n f_n(t) where f_n reverses the coefficients of
/// the degree-n polynomial p_k(n); the ratio is t f_n(t)/f_{n+1}(t), expanded
/// by exact long division.
pub fn ratio_expansion(n: usize, terms: usize) -> Result<InverseKSeries> {
    if n < 1 {
        return Err(Error::invalid("ratio expansion needs n >= 1"));
    }
    if terms < 1 {
        return Err(Error::invalid("ratio expansion needs at least one term"));
    }
    let polys = p_poly(n + 1);
    let f_n = reversed_coefficients(&polys[n], n);
    let f_n1 = reversed_coefficients(&polys[n + 1], n + 1);
    let quotient = divide_series(&f_n, &f_n1, terms);
    InverseKSeries::new(-1, quotient)
}

/// Coefficients of f(t) = p(k)/k^deg at t = 1/k: the polynomial's
/// coefficient vector reversed (constant term = leading coefficient).
fn reversed_coefficients(p: &crate::counting::KPolynomial, deg: usize) -> Vec<BigInt> {
    (0..=deg).map(|j| p.coefficient(deg - j)).collect()
}

/// First `terms` coefficients of a(t)/b(t) as power series, b(0) != 0.
fn divide_series(a: &[BigInt], b: &[BigInt], terms: usize) -> Vec<BigRational> {
    let b0 = BigRational::from_integer(b[0].clone());
    let mut q: Vec<BigRational> = Vec::with_capacity(terms);
    for j in 0..terms {
        let mut acc = a
            .get(j)
            .map(|c| BigRational::from_integer(c.clone()))
            .unwrap_or_else(BigRational::zero);
        for i in 1..=j {
            if let Some(bi) = b.get(i) {
                acc -= BigRational::from_integer(bi.clone()) * &q[j - i];
            }
        }
        q.push(acc / &b0);
    }
    q
}

/// A stabilized expansion, tagged with the n at which the coefficients froze.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizedSeries {
    pub series: InverseKSeries,
    pub stabilized_at: usize,
}

/// Expansion of 1/alpha_k to `terms` coefficients: runs [`ratio_expansion`]
/// for increasing n until two consecutive n agree on every retained
/// coefficient.
pub fn alpha_inv_series(terms: usize) -> Result<StabilizedSeries> {
    alpha_inv_series_bounded(terms, DEFAULT_STABILIZATION_LIMIT)
}

/// As [`alpha_inv_series`] with an explicit ceiling on n.
pub fn alpha_inv_series_bounded(terms: usize, max_n: usize) -> Result<StabilizedSeries> {
    if max_n < 2 {
        return Err(Error::invalid("stabilization needs max_n >= 2"));
    }
    let mut previous = ratio_expansion(1, terms)?;
    for n in 2..=max_n {
        let current = ratio_expansion(n, terms)?;
        if current == previous {
            return Ok(StabilizedSeries { series: current, stabilized_at: n - 1 });
        }
        previous = current;
    }
    Err(Error::NoStabilization { max_n })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn series(leading: i64, coeffs: &[(i64, i64)]) -> InverseKSeries {
        InverseKSeries::new(
            leading,
            coeffs.iter().map(|&(n, d)| rat(n, d)).collect(),
        )
        .unwrap()
    }

    const ALPHA_INV_9: [(i64, i64); 9] = [
        (1, 2),
        (1, 8),
        (3, 32),
        (1, 16),
        (27, 512),
        (93, 2048),
        (83, 2048),
        (155, 4096),
        (4735, 131072),
    ];

    const ALPHA_9: [(i64, i64); 9] = [
        (2, 1),
        (-1, 2),
        (-1, 4),
        (-3, 32),
        (-5, 64),
        (-31, 512),
        (-25, 512),
        (-23, 512),
        (-683, 16384),
    ];

    #[test]
    fn ratio_expansion_leading_term() {
        for n in 1..=6 {
            let e = ratio_expansion(n, 1).unwrap();
            assert_eq!(e.leading_power(), -1);
            assert_eq!(e.coefficients()[0], rat(1, 2), "n={n}");
        }
        assert!(ratio_expansion(0, 3).is_err());
    }

    #[test]
    fn ratio_expansion_small_case() {
        // p_k(1)/p_k(2) = k/(2k^2 - k) = 1/(2k - 1) = sum_j t^{j+1}/2^{j+1}
        let e = ratio_expansion(1, 4).unwrap();
        assert_eq!(
            e.coefficients(),
            &[rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 16)]
        );
    }

    #[test]
    fn nine_term_expansion() {
        let e = ratio_expansion(16, 9).unwrap();
        assert_eq!(e, series(-1, &ALPHA_INV_9));
    }

    #[test]
    fn stabilization() {
        let s = alpha_inv_series(9).unwrap();
        assert_eq!(s.series, series(-1, &ALPHA_INV_9));
        // observed once, then frozen: the first nine coefficients agree
        // from n = 16 onward
        assert_eq!(s.stabilized_at, 16);
        for n in 17..=20 {
            assert_eq!(ratio_expansion(n, 9).unwrap(), s.series);
        }
        assert_eq!(alpha_inv_series(1).unwrap().series, series(-1, &[(1, 2)]));
        assert_eq!(
            alpha_inv_series(2).unwrap().series,
            series(-1, &[(1, 2), (1, 8)])
        );
        assert_eq!(
            alpha_inv_series_bounded(9, 5),
            Err(Error::NoStabilization { max_n: 5 })
        );
    }

    #[test]
    fn reciprocal_examples() {
        let monomial = series(-1, &[(1, 2)]);
        let r = monomial.reciprocal().unwrap();
        assert_eq!(r, series(1, &[(2, 1)]));

        let alpha_inv = series(-1, &ALPHA_INV_9);
        assert_eq!(alpha_inv.reciprocal().unwrap(), series(1, &ALPHA_9));

        let twice = alpha_inv.reciprocal().unwrap().reciprocal().unwrap();
        assert_eq!(twice, alpha_inv);
    }

    #[test]
    fn product_with_reciprocal_is_one() {
        let s = series(-1, &ALPHA_INV_9);
        let product = &s * &s.reciprocal().unwrap();
        assert_eq!(product.leading_power(), 0);
        assert_eq!(product.coefficients()[0], rat(1, 1));
        for c in &product.coefficients()[1..] {
            assert!(c.is_zero());
        }
    }

    #[test]
    fn evaluation_accuracy_at_small_k() {
        let alpha_inv = series(-1, &ALPHA_INV_9);
        let v = alpha_inv.eval_at(2).unwrap();
        let reference = crate::gf::rational_from_decimal("0.29983821359352690506").unwrap();
        assert!((v - reference).abs() < rat(1, 1000));

        let alpha = series(1, &ALPHA_9);
        let v = alpha.eval_at(2).unwrap();
        let reference = crate::gf::rational_from_decimal("3.33513193003357936766").unwrap();
        assert!((v - reference).abs() < rat(1, 100));

        assert_eq!(series(-1, &[(1, 2)]).eval_at(2).unwrap(), rat(1, 4));
        assert!(series(-1, &[(1, 2)]).eval_at(1).is_err());
    }

    #[test]
    fn display_renders_fraction_terms() {
        assert_eq!(series(-1, &[(1, 2), (1, 8)]).to_string(), "1/(2k) + 1/(8k^2)");
        assert_eq!(
            series(1, &ALPHA_9[..4]).to_string(),
            "2k - 1/2 - 1/(4k) - 3/(32k^2)"
        );
        assert_eq!(series(0, &[(3, 1)]).to_string(), "3");
        assert_eq!(series(2, &[(-7, 2)]).to_string(), "-(7/2)k^2");
    }

    #[test]
    fn rejects_zero_leading_coefficient() {
        assert_eq!(
            InverseKSeries::new(0, vec![rat(0, 1), rat(1, 2)]),
            Err(Error::ZeroLeadingCoefficient)
        );
        assert!(InverseKSeries::new(0, vec![]).is_err());
    }
}
