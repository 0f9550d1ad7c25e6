//! Certified analysis of the unbordered generating function U_k: the
//! dominant singularity rho_k of P_k = 1/(2 - U_k), the growth constant
//! alpha_k = 1/rho_k, and the amplitude C_k = U_k'(rho_k).
//!
//! Everything certified is computed over exact rationals. A truncated U_k is
//! bracketed by the geometric tail bound u_k(n) < k^n, so every sign test
//! and every enclosure accounts for the discarded terms. Decimal strings
//! appear only at the rendering boundary.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::counting::u_sequence;
use crate::error::{Error, Result};

/// A pair of exact rationals certifying `lo <= value <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalEnclosure {
    lo: BigRational,
    hi: BigRational,
    certified: bool,
}

impl RationalEnclosure {
    pub fn new(lo: BigRational, hi: BigRational, certified: bool) -> Result<Self> {
        if lo > hi {
            return Err(Error::invalid("enclosure endpoints out of order"));
        }
        Ok(RationalEnclosure { lo, hi, certified })
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Truncated power series of U_k with exact integer coefficients
/// u_k(0..=degree).
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    k: u32,
    coefficients: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Truncation of U_k through degree `degree`.
    pub fn unbordered(k: u32, degree: usize) -> Result<Self> {
        Ok(TruncatedSeries {
            k,
            coefficients: u_sequence(k, degree)?.into_terms(),
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Homogenized Horner pass at x = p/q: returns (r, q^N) with the sum
    /// equal to r / q^N. Keeping it in integers avoids a gcd per step.
    fn eval_parts(&self, p: &BigInt, q: &BigInt) -> (BigInt, BigInt) {
        let n = self.degree();
        let mut acc = self.coefficients[n].clone();
        let mut q_pow = BigInt::one();
        for i in (0..n).rev() {
            q_pow *= q;
            acc = acc * p + &self.coefficients[i] * &q_pow;
        }
        (acc, q_pow)
    }

    /// Exact evaluation of the truncated sum at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let (r, q_pow) = self.eval_parts(x.numer(), x.denom());
        BigRational::new(r, q_pow)
    }

    fn derivative_parts(&self, p: &BigInt, q: &BigInt) -> (BigInt, BigInt) {
        let n = self.degree();
        if n == 0 {
            return (BigInt::zero(), BigInt::one());
        }
        let mut acc = &self.coefficients[n] * n;
        let mut q_pow = BigInt::one();
        for i in (1..n).rev() {
            q_pow *= q;
            acc = acc * p + &self.coefficients[i] * i * &q_pow;
        }
        (acc, q_pow)
    }

    /// Exact evaluation of the truncated derivative sum n c_n x^{n-1}.
    pub fn eval_derivative(&self, x: &BigRational) -> BigRational {
        let (r, q_pow) = self.derivative_parts(x.numer(), x.denom());
        BigRational::new(r, q_pow)
    }

    /// Upper bound on the discarded tail of U_k at x, via u_k(n) < k^n.
    pub fn tail_bound(&self, x: &BigRational) -> Result<BigRational> {
        tail_bound(self.k, self.degree(), x)
    }

    /// Upper bound on the discarded tail of U_k' at x:
    /// sum_{n>N} n k^n x^{n-1} = k t^N (N+1 - N t) / (1-t)^2 with t = kx.
    pub fn derivative_tail_bound(&self, x: &BigRational) -> Result<BigRational> {
        let t = in_convergence_region(self.k, x)?;
        let n = self.degree();
        let t_pow = rational_pow(&t, n as u32);
        let one = BigRational::one();
        let numer = BigRational::from_integer((n as u64 + 1).into())
            - BigRational::from_integer((n as u64).into()) * &t;
        let denom = (&one - &t) * (&one - &t);
        Ok(BigRational::from_integer(self.k.into()) * t_pow * numer / denom)
    }

    /// Which side of 2 the full U_k(x) provably sits on, given only the
    /// truncation: the truncated sum is a lower bound and sum + tail an
    /// upper bound.
    fn side_of_two(&self, x: &BigRational) -> Result<BracketSide> {
        let (p, q) = (x.numer(), x.denom());
        let (r, q_pow) = self.eval_parts(p, q);
        let two_q_pow = &q_pow * 2;
        if r > two_q_pow {
            return Ok(BracketSide::Above);
        }
        let kp = p * self.k;
        let gap = q - &kp;
        if !gap.is_positive() {
            return Err(Error::DivergentTail);
        }
        // r/q^N + (kp)^{N+1} / (q^N gap) < 2  <=>  r gap + (kp)^{N+1} < 2 q^N gap
        let kp_pow = kp.pow(self.degree() as u32 + 1);
        if r * &gap + kp_pow < two_q_pow * &gap {
            Ok(BracketSide::Below)
        } else {
            Ok(BracketSide::Unknown)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BracketSide {
    Below,
    Above,
    Unknown,
}

fn rational_pow(x: &BigRational, e: u32) -> BigRational {
    BigRational::new_raw(x.numer().pow(e), x.denom().pow(e))
}

/// Checks 0 < x < 1/k and returns t = kx.
fn in_convergence_region(k: u32, x: &BigRational) -> Result<BigRational> {
    if !x.is_positive() {
        return Err(Error::invalid("tail bounds need x > 0"));
    }
    let t = BigRational::from_integer(k.into()) * x;
    if t >= BigRational::one() {
        return Err(Error::DivergentTail);
    }
    Ok(t)
}

/// Exact upper bound (kx)^{N+1} / (1 - kx) on the tail sum_{n>N} u_k(n) x^n.
pub fn tail_bound(k: u32, degree: usize, x: &BigRational) -> Result<BigRational> {
    let t = in_convergence_region(k, x)?;
    let t_pow = rational_pow(&t, degree as u32 + 1);
    Ok(&t_pow / (BigRational::one() - &t))
}

/// The proven starting bracket [1/(2k - 1/2), 1/(2k - 1)] for rho_k.
pub fn initial_bracket(k: u32) -> Result<(BigRational, BigRational)> {
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k));
    }
    let lo = BigRational::new(2.into(), BigInt::from(4 * k as u64 - 1));
    let hi = BigRational::new(1.into(), BigInt::from(2 * k as u64 - 1));
    Ok((lo, hi))
}

/// First guess for the truncation degree: the geometric tail at the worst
/// bracket point decays like (k/(2k-1))^N, so this lands near the digit
/// target; escalation doubles from here when certification stalls.
fn initial_degree(k: u32, digits: u32) -> usize {
    let t = k as f64 / (2.0 * k as f64 - 1.0);
    let n = (digits as f64 * std::f64::consts::LN_10 / (1.0 / t).ln()).ceil();
    (n as usize).max(8)
}

/// True when a degree-`degree` truncation certifies U_k < 2 at the lower
/// bracket endpoint and U_k > 2 at the upper one.
pub fn certify_initial_bracket(k: u32, degree: usize) -> Result<bool> {
    let (lo, hi) = initial_bracket(k)?;
    let series = TruncatedSeries::unbordered(k, degree)?;
    Ok(series.side_of_two(&lo)? == BracketSide::Below
        && series.side_of_two(&hi)? == BracketSide::Above)
}

/// A certified enclosure together with the truncation degree that produced it.
#[derive(Debug, Clone)]
pub struct RootResult {
    pub rho: RationalEnclosure,
    pub n_used: usize,
}

/// Certified enclosure of rho_k (the positive solution of U_k(X) = 2) of
/// width at most 10^-digits, by bisection with tail-certified sign tests.
///
/// The truncation degree is raised automatically whenever a sign cannot be
/// certified; this always terminates because k rho_k < 1.
pub fn solve_rho(k: u32, digits: u32) -> Result<RootResult> {
    solve_rho_with_degree(k, digits, initial_degree(k, digits))
}

/// Same as [`solve_rho`] but starting from a caller-chosen truncation degree
/// (useful for checking that refinements nest).
pub fn solve_rho_with_degree(k: u32, digits: u32, degree: usize) -> Result<RootResult> {
    if digits == 0 {
        return Err(Error::invalid("digits must be at least 1"));
    }
    let (mut lo, mut hi) = initial_bracket(k)?;
    let eps = BigRational::new(1.into(), BigInt::from(10u32).pow(digits));
    let half = BigRational::new(1.into(), 2.into());
    let mut degree = degree.max(8);
    let mut series = TruncatedSeries::unbordered(k, degree)?;
    loop {
        let lo_side = series.side_of_two(&lo)?;
        let hi_side = series.side_of_two(&hi)?;
        if lo_side == BracketSide::Below && hi_side == BracketSide::Above {
            break;
        }
        degree *= 2;
        series = TruncatedSeries::unbordered(k, degree)?;
    }
    while (&hi - &lo) > eps {
        let mid = (&lo + &hi) * &half;
        match series.side_of_two(&mid)? {
            BracketSide::Above => hi = mid,
            BracketSide::Below => lo = mid,
            BracketSide::Unknown => {
                degree *= 2;
                series = TruncatedSeries::unbordered(k, degree)?;
            }
        }
    }
    Ok(RootResult {
        rho: RationalEnclosure { lo, hi, certified: true },
        n_used: degree,
    })
}

/// Exact reciprocal enclosure: alpha_k = 1/rho_k.
pub fn alpha_from_rho(rho: &RationalEnclosure) -> Result<RationalEnclosure> {
    if !rho.lo().is_positive() {
        return Err(Error::NonPositiveEnclosure);
    }
    Ok(RationalEnclosure {
        lo: rho.hi().recip(),
        hi: rho.lo().recip(),
        certified: rho.is_certified(),
    })
}

/// A certified amplitude enclosure and the truncation degree used.
#[derive(Debug, Clone)]
pub struct AmplitudeResult {
    pub c: RationalEnclosure,
    pub n_used: usize,
}

/// Certified enclosure of C_k = U_k'(rho_k) of width at most 10^-digits.
///
/// The derivative series has positive coefficients, so it is increasing on
/// (0, 1/k): evaluating at the rho endpoints and adding the derivative tail
/// bound at the top gives a sound enclosure. The truncation degree doubles
/// while the tail dominates; if the supplied rho enclosure itself is too
/// wide to reach the requested width, rho is re-solved to more digits.
pub fn compute_amplitude(
    k: u32,
    rho: &RationalEnclosure,
    digits: u32,
) -> Result<AmplitudeResult> {
    if !rho.is_certified() {
        return Err(Error::invalid("amplitude needs a certified rho enclosure"));
    }
    if !rho.lo().is_positive() {
        return Err(Error::NonPositiveEnclosure);
    }
    let eps = BigRational::new(1.into(), BigInt::from(10u32).pow(digits));
    let half_eps = &eps / BigRational::from_integer(2.into());
    let mut degree = initial_degree(k, digits).max(8);
    let mut series = TruncatedSeries::unbordered(k, degree)?;
    let mut rho_work = rho.clone();
    let mut rho_digits = digits + 5;
    loop {
        let tail = series.derivative_tail_bound(rho_work.hi())?;
        let lo_c = series.eval_derivative(rho_work.lo());
        let hi_c = series.eval_derivative(rho_work.hi()) + &tail;
        if (&hi_c - &lo_c) <= eps {
            return Ok(AmplitudeResult {
                c: RationalEnclosure { lo: lo_c, hi: hi_c, certified: true },
                n_used: degree,
            });
        }
        if tail > half_eps {
            degree *= 2;
            series = TruncatedSeries::unbordered(k, degree)?;
        } else {
            rho_work = solve_rho(k, rho_digits)?.rho;
            rho_digits += 10;
        }
    }
}

/// The two closed-form rational expressions whose comparison with 2 pins the
/// starting bracket: a lower bound on U_k(1/(2k-1)) and an upper bound on
/// U_k(1/(2k-1/2)).
pub fn bracket_bound_values(k: u64) -> Result<(BigRational, BigRational)> {
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k.min(u32::MAX as u64) as u32));
    }
    let k = BigInt::from(k);
    let lower_numer = (2 * &k - 1) * (4 * (&k * &k) - 6 * &k + 1);
    let lower_denom = (&k - 1) * (&k - 1) * (4 * &k - 1);
    let upper_numer = 16 * (&k * &k) - 12 * &k + 1;
    let upper_denom = (4 * &k - 1) * (2 * &k - 1);
    Ok((
        BigRational::new(lower_numer, lower_denom),
        BigRational::new(upper_numer, upper_denom),
    ))
}

/// Exact-rational verification of the two bracket inequalities: the lower
/// expression exceeds 2 and the upper falls short of 2.
pub fn check_bracket_bounds(k: u64) -> Result<bool> {
    let (lower, upper) = bracket_bound_values(k)?;
    let two = BigRational::from_integer(2.into());
    Ok(lower > two && upper < two)
}

/// Closed-form envelope for U_k on (0, 1/k):
/// (1 - 2kx^2)/((kx-1)(kx^2-1)) <= U_k(x) <= (kx^2-1)/(kx-1).
pub fn series_envelope(k: u32, x: &BigRational) -> Result<(BigRational, BigRational)> {
    in_convergence_region(k, x)?;
    let one = BigRational::one();
    let kx = BigRational::from_integer(k.into()) * x;
    let kx2 = &kx * x;
    let upper = (&kx2 - &one) / (&kx - &one);
    let lower = (&one - BigRational::from_integer(2.into()) * &kx2)
        / ((&kx - &one) * (&kx2 - &one));
    Ok((lower, upper))
}

/// Angles within this distance of 0 are excluded from circle scans; the
/// genuine root rho sits at angle 0.
pub const SCAN_EXCLUDED_ANGLE: f64 = 0.1;

#[derive(Debug, Clone, Copy)]
pub struct ScanPoint {
    pub psi: f64,
    pub distance: f64,
}

/// Result of sampling |U_k(rho e^{i psi}) - 2| on a uniform angle grid.
#[derive(Debug, Clone)]
pub struct CircleScan {
    pub k: u32,
    pub samples: usize,
    pub excluded_angle: f64,
    pub n_terms: usize,
    pub points: Vec<ScanPoint>,
    pub min_distance: f64,
    pub min_psi: f64,
}

/// Double-precision smoke test that U_k(X) = 2 has no second root on the
/// circle |X| = rho_k: samples the truncated series at rho e^{i psi} for psi
/// on a uniform grid excluding a neighborhood of 0 and reports the minimum
/// distance from 2. Not a proof; a regression guard.
pub fn circle_scan(k: u32, samples: usize) -> Result<CircleScan> {
    if samples < 8 {
        return Err(Error::invalid("circle scan needs at least 8 samples"));
    }
    let rho = solve_rho(k, 17)?
        .rho
        .midpoint()
        .to_f64()
        .ok_or_else(|| Error::invalid("rho midpoint out of f64 range"))?;
    // enough terms that the tail is far below the observed margins, capped
    // so coefficients k^n stay inside f64 range
    let t = k as f64 * rho;
    let wanted = (30.0 * std::f64::consts::LN_10 / (1.0 / t).ln()).ceil() as usize;
    let cap = (280.0 / (k as f64).log10()).floor() as usize;
    let n_terms = wanted.min(cap).max(16);
    let coefficients: Vec<f64> = u_sequence(k, n_terms)?
        .terms()
        .iter()
        .map(|c| c.to_f64().expect("coefficient fits f64 by cap"))
        .collect();
    let mut points = Vec::with_capacity(samples);
    let mut min_distance = f64::INFINITY;
    let mut min_psi = 0.0;
    for j in 1..=samples {
        let psi = -std::f64::consts::PI
            + 2.0 * std::f64::consts::PI * j as f64 / samples as f64;
        if psi.abs() < SCAN_EXCLUDED_ANGLE {
            continue;
        }
        let z = Complex64::from_polar(rho, psi);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coefficients.iter().rev() {
            acc = acc * z + c;
        }
        let distance = (acc - 2.0).norm();
        points.push(ScanPoint { psi, distance });
        if distance < min_distance {
            min_distance = distance;
            min_psi = psi;
        }
    }
    Ok(CircleScan {
        k,
        samples,
        excluded_angle: SCAN_EXCLUDED_ANGLE,
        n_terms,
        points,
        min_distance,
        min_psi,
    })
}

/// Parses a plain decimal string (`-12.345`) into an exact rational.
pub fn rational_from_decimal(s: &str) -> Result<BigRational> {
    let (sign, rest) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    let (int_part, frac_part) = match rest.split_once('.') {
        Some((i, f)) => (i, f),
        None => (rest, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::invalid(format!("not a decimal number: {s:?}")));
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(Error::invalid(format!("not a decimal number: {s:?}")));
    }
    let digits: String = format!("{int_part}{frac_part}");
    let numer = BigInt::parse_bytes(digits.as_bytes(), 10)
        .ok_or_else(|| Error::invalid(format!("not a decimal number: {s:?}")))?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(BigRational::new(sign * numer, denom))
}

fn format_scaled(scaled: BigInt, digits: usize) -> String {
    let negative = scaled.is_negative();
    let magnitude = scaled.magnitude().clone();
    let scale = num_bigint::BigUint::from(10u32).pow(digits as u32);
    let (int_part, frac_part) = magnitude.div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0>width$}", width = digits)
    }
}

/// Decimal truncation toward minus infinity at the given precision.
pub fn decimal_floor(x: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (x.numer() * scale).div_floor(x.denom());
    format_scaled(scaled, digits)
}

/// Decimal truncation toward plus infinity at the given precision.
pub fn decimal_ceil(x: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (x.numer() * scale).div_ceil(x.denom());
    format_scaled(scaled, digits)
}

/// The shared decimal truncation of every point of the enclosure, when one
/// exists: all certified digits at this precision. `None` when the enclosure
/// straddles a 10^-digits boundary.
pub fn enclosure_decimal(e: &RationalEnclosure, digits: usize) -> Option<String> {
    let lo = decimal_floor(e.lo(), digits);
    let hi = decimal_floor(e.hi(), digits);
    (lo == hi).then_some(lo)
}
