//! Special functions used by the closed forms: Riemann zeta at integer
//! arguments, the complex trigamma function and the unnormalized sinc.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Result};

pub type ComplexValue = Complex64;

/// ζ(n) for n = 2..=9, to double precision.
#[allow(clippy::excessive_precision)]
const ZETA_TABLE: [f64; 8] = [
    1.644_934_066_848_226_4,
    1.202_056_903_159_594_3,
    1.082_323_233_711_138_2,
    1.036_927_755_143_369_9,
    1.017_343_061_984_449_1,
    1.008_349_277_381_922_8,
    1.004_077_356_197_944_3,
    1.002_008_392_826_082_2,
];

/// B₂, B₄, …, B₁₂
const BERNOULLI_EVEN: [f64; 6] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
];

/// Recurrence shifts z upward until |z| exceeds this before the asymptotic
/// series is used.
const ASYMPTOTIC_THRESHOLD: f64 = 10.0;

/// Riemann zeta at an integer argument n ≥ 2.
///
/// n ≤ 9 comes from a table; larger n from Euler–Maclaurin summation.
pub fn zeta_int(n: u32) -> Result<f64> {
    match n {
        0 | 1 => domain(format!("zeta_int requires n >= 2, got {n}")),
        2..=9 => Ok(ZETA_TABLE[(n - 2) as usize]),
        _ => Ok(zeta_euler_maclaurin(n)),
    }
}

fn zeta_euler_maclaurin(n: u32) -> f64 {
    // Σ_{k<N} k^-s + N^{1-s}/(s-1) + N^-s/2 + Σ_j B_2j/(2j)! · s(s+1)…(s+2j-2) N^{-s-2j+1}
    const N: u32 = 10;
    let s = f64::from(n);
    let nf = f64::from(N);
    let mut sum: f64 = (1..N).rev().map(|k| f64::from(k).powf(-s)).sum();
    sum += nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s);
    let mut rising = s; // s(s+1)…(s+2j-2)
    let mut factorial = 2.0; // (2j)!
    let mut npow = nf.powf(-s - 1.0);
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        sum += b / factorial * rising * npow;
        let j2 = 2.0 * (j as f64 + 1.0);
        rising *= (s + j2 - 1.0) * (s + j2);
        factorial *= (j2 + 1.0) * (j2 + 2.0);
        npow /= nf * nf;
    }
    sum
}

/// ψ⁽¹⁾(z) for complex z.
///
/// Arguments with Re z < 1/2 go through the reflection formula
/// ψ⁽¹⁾(1 − z) + ψ⁽¹⁾(z) = π²/sin²(πz). The rest are shifted with
/// ψ⁽¹⁾(z) = ψ⁽¹⁾(z + 1) + 1/z² until |z| > 10 and then summed with the
/// asymptotic series through B₁₂.
pub fn trigamma_complex(z: ComplexValue) -> Result<ComplexValue> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return domain(format!("trigamma argument must be finite, got {z}"));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return domain(format!("trigamma has a pole at {}", z.re));
    }
    if z.re < 0.5 {
        let s = (z * PI).sin();
        let reflected = trigamma_right_half(ComplexValue::new(1.0, 0.0) - z);
        return Ok(PI * PI / (s * s) - reflected);
    }
    Ok(trigamma_right_half(z))
}

fn trigamma_right_half(mut z: ComplexValue) -> ComplexValue {
    let mut acc = ComplexValue::new(0.0, 0.0);
    while z.norm() <= ASYMPTOTIC_THRESHOLD {
        acc += (z * z).inv();
        z += 1.0;
    }
    let w = z.inv();
    let w2 = w * w;
    // Horner over B_2k w^(2k+1), k = 1..6
    let mut series = ComplexValue::new(0.0, 0.0);
    for b in BERNOULLI_EVEN.iter().rev() {
        series = (series + *b) * w2;
    }
    acc + w + 0.5 * w2 + series * w
}

/// sin(x)/x, with a Taylor expansion near the removable singularity.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// 1 − sin(x)/x, accurate to relative precision for small x.
pub fn one_minus_sinc(x: f64) -> f64 {
    if x.abs() < 0.1 {
        let x2 = x * x;
        // x²/3! − x⁴/5! + x⁶/7! − x⁸/9! + x¹⁰/11!
        x2 * (1.0 / 6.0
            - x2 * (1.0 / 120.0 - x2 * (1.0 / 5040.0 - x2 * (1.0 / 362_880.0 - x2 / 39_916_800.0))))
    } else {
        1.0 - x.sin() / x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    /// Σ_{k≤N} k^-n plus the integral tail N^{1-n}/(n-1) and the
    /// trapezoid half-term; error below n(n+1)/12·N^{-n-2}.
    fn zeta_direct(n: u32) -> f64 {
        let s = f64::from(n);
        let big = 100_000u32;
        let mut sum = 0.0;
        for k in (1..=big).rev() {
            sum += f64::from(k).powf(-s);
        }
        let nf = f64::from(big);
        sum + nf.powf(1.0 - s) / (s - 1.0) - 0.5 * nf.powf(-s)
    }

    #[test]
    fn zeta_examples() {
        assert!(rel(zeta_int(3).unwrap(), 1.202_056_903_2) < 1e-10);
        assert!(rel(zeta_int(9).unwrap(), 1.002_008_392_8) < 1e-10);
        assert!(rel(zeta_int(2).unwrap(), PI * PI / 6.0) < 1e-15);
        assert!(zeta_int(1).is_err());
        assert!(zeta_int(0).is_err());
    }

    #[test]
    fn zeta_table_and_series_match_direct_sum() {
        for n in 2..=24 {
            let direct = zeta_direct(n);
            let got = zeta_int(n).unwrap();
            assert!(rel(got, direct) < 1e-12, "n={n}: {got} vs {direct}");
        }
        for n in 2..=9 {
            let em = zeta_euler_maclaurin(n);
            assert!(rel(em, zeta_int(n).unwrap()) < 1e-13, "n={n}");
        }
    }

    #[test]
    fn trigamma_at_one() {
        let v = trigamma_complex(ComplexValue::new(1.0, 0.0)).unwrap();
        assert!(rel(v.re, PI * PI / 6.0) < 1e-12);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn trigamma_at_one_plus_i() {
        let v = trigamma_complex(ComplexValue::new(1.0, 1.0)).unwrap();
        assert!((v.im + 0.795).abs() < 1e-3);
        // mpmath: psi(1, 1+1j)
        assert!(rel(v.re, 0.463_000_096_622_763_8) < 1e-12);
        assert!(rel(v.im, -0.794_233_542_759_318_9) < 1e-12);
    }

    #[test]
    fn trigamma_poles() {
        for x in [0.0, -1.0, -7.0] {
            assert!(trigamma_complex(ComplexValue::new(x, 0.0)).is_err());
        }
        assert!(trigamma_complex(ComplexValue::new(f64::NAN, 0.0)).is_err());
        assert!(trigamma_complex(ComplexValue::new(-1.0, 1e-3)).is_ok());
    }

    #[test]
    fn trigamma_left_half_plane() {
        // ψ1(1/2) = π²/2, ψ1(-1/2) = π²/2 + 4
        let v = trigamma_complex(ComplexValue::new(0.5, 0.0)).unwrap();
        assert!(rel(v.re, PI * PI / 2.0) < 1e-13);
        let v = trigamma_complex(ComplexValue::new(-0.5, 0.0)).unwrap();
        assert!(rel(v.re, PI * PI / 2.0 + 4.0) < 1e-13);
    }

    #[test]
    fn sinc_examples() {
        assert_eq!(sinc(0.0), 1.0);
        assert!(sinc(PI).abs() < 1e-15);
        assert!(rel(sinc(1.0), 0.841_470_984_8) < 1e-10);
        assert_eq!(sinc(-0.3), sinc(0.3));
        // continuity across the Taylor switch
        let below = sinc(0.999_999e-4);
        let above = sinc(1.000_001e-4);
        assert!((below - above).abs() < 1e-12);
    }

    #[test]
    fn one_minus_sinc_is_accurate() {
        for x in [1e-8_f64, 1e-4, 0.01, 0.0999, 0.1, 0.5, 3.0, 40.0] {
            let reference = if x < 0.5 {
                // x²/6·(1 − x²/20 + x⁴/840 − …), via more terms than the implementation
                let x2 = x * x;
                let mut term = x2 / 6.0;
                let mut sum = 0.0;
                for k in 1..12 {
                    sum += term;
                    let a = 2.0 * k as f64 + 2.0;
                    term *= -x2 / (a * (a + 1.0));
                }
                sum
            } else {
                1.0 - x.sin() / x
            };
            assert!(rel(one_minus_sinc(x), reference) < 1e-13, "x={x}");
        }
    }
}
