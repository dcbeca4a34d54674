//! Independent numerical route to the vacuum overlap and rate.
//!
//! Nothing here touches the trigamma closed form: the overlap is the
//! sinc-weighted average of the emission spectrum, integrated by adaptive
//! quadrature in `u = 4πωr_s/c`,
//!
//! ```text
//! overlap = ∫ u²/(eᵘ−1) · sinc(αu) du / ∫ u²/(eᵘ−1) du,   α = Δx/(4πr_s)
//! ```
//!
//! and ψ⁽¹⁾ is summed from its defining series.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::decoherence::SuperpositionGeometry;
use crate::error::{domain, Result};
use crate::quadrature::{integrate, Estimate, QuadratureSpec};
use crate::specfun::{one_minus_sinc, sinc, zeta_int, ComplexValue};
use crate::spectra::{bose_moment, bose_shape, EmissionSpectrum, U_CUTOFF};

/// Peak of u²/(eᵘ−1).
const BOSE_PEAK: f64 = 1.593_624_260_040_04;

/// Above this α the integrand is split at the zeros of sinc(αu).
const PANEL_ALPHA: f64 = 1.0;

fn check_geometry(geom: &SuperpositionGeometry, spec: &EmissionSpectrum) -> Result<()> {
    if ((geom.r_s() - spec.r_s()) / spec.r_s()).abs() > 1e-12 {
        return domain(format!(
            "geometry radius {:e} m does not match spectrum radius {:e} m",
            geom.r_s(),
            spec.r_s()
        ));
    }
    Ok(())
}

fn normalization(u_min: f64, quad: &QuadratureSpec) -> Result<Estimate> {
    if u_min == 0.0 {
        Ok(Estimate {
            value: 2.0 * zeta_int(3)?,
            ..Estimate::default()
        })
    } else {
        bose_moment(u_min, quad)
    }
}

/// Integrate `kernel(u)·u²/(eᵘ−1)` over `[u_min, U_CUTOFF]`, split at the
/// spectral peak.
fn smooth_moment<K>(kernel: K, u_min: f64, quad: &QuadratureSpec) -> Result<Estimate>
where
    K: Fn(f64) -> f64,
{
    if u_min >= U_CUTOFF {
        return Ok(Estimate::default());
    }
    let f = |u: f64| bose_shape(u) * kernel(u);
    let split = BOSE_PEAK.max(u_min);
    Ok(integrate(f, u_min, split, quad)? + integrate(f, split, U_CUTOFF, quad)?)
}

/// ∫ u²/(eᵘ−1)·sinc(αu) du over `[u_min, U_CUTOFF]`, one half-period of the
/// sine per panel. Panels are evaluated in parallel and summed in order.
fn oscillatory_moment(alpha: f64, u_min: f64, quad: &QuadratureSpec) -> Result<Estimate> {
    if u_min >= U_CUTOFF {
        return Ok(Estimate::default());
    }
    let step = PI / alpha;
    let first = (u_min / step).floor() as usize + 1;
    let last = (U_CUTOFF / step).ceil() as usize;
    let mut edges = Vec::with_capacity(last.saturating_sub(first) + 2);
    edges.push(u_min);
    edges.extend(
        (first..last)
            .map(|k| k as f64 * step)
            .filter(|&u| u > u_min),
    );
    edges.push(U_CUTOFF);

    let f = |u: f64| bose_shape(u) * sinc(alpha * u);
    let panels: Vec<Result<Estimate>> = edges
        .par_windows(2)
        .map(|w| integrate(f, w[0], w[1], quad))
        .collect();
    let mut total = Estimate::default();
    for p in panels {
        total = total + p?;
    }
    Ok(total)
}

fn sinc_moment(alpha: f64, u_min: f64, quad: &QuadratureSpec) -> Result<Estimate> {
    if alpha > PANEL_ALPHA {
        oscillatory_moment(alpha, u_min, quad)
    } else {
        smooth_moment(|u| sinc(alpha * u), u_min, quad)
    }
}

fn ratio(num: Estimate, den: Estimate) -> Estimate {
    let value = num.value / den.value;
    let error = num.error / den.value.abs() + value.abs() * den.error / den.value.abs();
    Estimate {
        value,
        error,
        subdivisions: num.subdivisions + den.subdivisions,
    }
}

/// Overlap of the radiation states emitted from the two branches, by quadrature.
pub fn overlap_numeric(
    geom: &SuperpositionGeometry,
    spec: &EmissionSpectrum,
    quad: &QuadratureSpec,
) -> Result<Estimate> {
    check_geometry(geom, spec)?;
    let u_min = spec.u_min();
    let norm = normalization(u_min, quad)?;
    if geom.delta_x() == 0.0 {
        return Ok(Estimate {
            value: 1.0,
            ..Estimate::default()
        });
    }
    Ok(ratio(sinc_moment(geom.alpha(), u_min, quad)?, norm))
}

/// 1 − overlap by quadrature. For α ≤ 1 the kernel 1 − sinc(αu) is integrated
/// directly so that tiny complements keep their relative accuracy.
pub fn overlap_complement_numeric(
    geom: &SuperpositionGeometry,
    spec: &EmissionSpectrum,
    quad: &QuadratureSpec,
) -> Result<Estimate> {
    check_geometry(geom, spec)?;
    let alpha = geom.alpha();
    if alpha == 0.0 {
        return Ok(Estimate::default());
    }
    let u_min = spec.u_min();
    let norm = normalization(u_min, quad)?;
    if alpha > PANEL_ALPHA {
        let overlap = ratio(oscillatory_moment(alpha, u_min, quad)?, norm);
        return Ok(Estimate {
            value: 1.0 - overlap.value,
            ..overlap
        });
    }
    // (1 − sinc(αu))/α² is O(u²) for every α, which keeps the absolute
    // tolerance meaningful when the complement itself is tiny
    let a2 = alpha * alpha;
    let scaled = smooth_moment(|u| one_minus_sinc(alpha * u) / a2, u_min, quad)?;
    let moment = Estimate {
        value: scaled.value * a2,
        error: scaled.error * a2,
        ..scaled
    };
    Ok(ratio(moment, norm))
}

/// Decoherence rate Λ_total·(1 − overlap) with both factors from quadrature
/// when the spectrum has a cutoff, and Λ_total in closed form otherwise.
pub fn rate_numeric(
    geom: &SuperpositionGeometry,
    spec: &EmissionSpectrum,
    quad: &QuadratureSpec,
) -> Result<Estimate> {
    let complement = overlap_complement_numeric(geom, spec, quad)?;
    let total = if spec.omega_min() > 0.0 {
        spec.total_emission_rate_numeric(quad)?
    } else {
        Estimate {
            value: spec.total_emission_rate()?,
            ..Estimate::default()
        }
    };
    Ok(Estimate {
        value: total.value * complement.value,
        error: total.value * complement.error + total.error * complement.value,
        subdivisions: total.subdivisions + complement.subdivisions,
    })
}

/// Σ_{n<N} 1/(z+n)² plus the Euler–Maclaurin tail 1/(z+N) + 1/(2(z+N)²).
/// The returned bound is the size of the first omitted tail term, 1/(6|z+N|³).
pub fn trigamma_series_oracle(z: ComplexValue, terms: usize) -> Result<(ComplexValue, f64)> {
    if terms < 100 {
        return domain(format!(
            "trigamma series needs at least 100 terms, got {terms}"
        ));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return domain(format!("trigamma argument must be finite, got {z}"));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return domain(format!("trigamma has a pole at {}", z.re));
    }
    // smallest terms first
    let mut sum = ComplexValue::new(0.0, 0.0);
    for n in (0..terms).rev() {
        let w = z + n as f64;
        sum += (w * w).inv();
    }
    let tail_at = z + terms as f64;
    sum += tail_at.inv() + 0.5 * (tail_at * tail_at).inv();
    let bound = 1.0 / (6.0 * tail_at.norm().powi(3));
    Ok((sum, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoherence::{vacuum_overlap, vacuum_overlap_complement};

    const C: f64 = 2.997_924_58e8;

    fn setup(dx_over_rs: f64) -> (SuperpositionGeometry, EmissionSpectrum) {
        let r_s = 0.008_866_835;
        (
            SuperpositionGeometry::from_ratio(dx_over_rs, r_s).unwrap(),
            EmissionSpectrum::new(r_s, C).unwrap(),
        )
    }

    #[test]
    fn zero_separation() {
        let (g, s) = setup(0.0);
        let quad = QuadratureSpec::default();
        assert_eq!(overlap_numeric(&g, &s, &quad).unwrap().value, 1.0);
        assert_eq!(
            overlap_complement_numeric(&g, &s, &quad).unwrap().value,
            0.0
        );
        assert_eq!(rate_numeric(&g, &s, &quad).unwrap().value, 0.0);
    }

    #[test]
    fn sinc_moment_at_zero_alpha_is_normalization() {
        let quad = QuadratureSpec::default();
        let m = sinc_moment(0.0, 0.0, &quad).unwrap();
        assert!(((m.value - 2.0 * zeta_int(3).unwrap()) / m.value).abs() < 1e-12);
    }

    #[test]
    fn overlap_at_alpha_one_matches_closed_form() {
        let (g, s) = setup(4.0 * PI);
        let numeric = overlap_numeric(&g, &s, &QuadratureSpec::default()).unwrap();
        let closed = vacuum_overlap(&g).unwrap();
        assert!((numeric.value - 0.331).abs() < 1e-3);
        assert!(((numeric.value - closed) / closed).abs() < 1e-8);
    }

    #[test]
    fn complement_matches_closed_form_across_regimes() {
        let quad = QuadratureSpec::default();
        for y in [1e-7, 1e-3, 0.05, 1.0, 4.0 * PI, 30.0, 500.0] {
            let (g, s) = setup(y);
            let numeric = overlap_complement_numeric(&g, &s, &quad).unwrap().value;
            let closed = vacuum_overlap_complement(&g).unwrap();
            assert!(
                ((numeric - closed) / closed).abs() < 1e-8,
                "y={y}: {numeric} vs {closed}"
            );
        }
    }

    #[test]
    fn mismatched_radius_is_rejected() {
        let g = SuperpositionGeometry::new(1.0, 1.0).unwrap();
        let s = EmissionSpectrum::new(2.0, C).unwrap();
        assert!(overlap_numeric(&g, &s, &QuadratureSpec::default()).is_err());
    }

    #[test]
    fn cutoff_changes_overlap() {
        let quad = QuadratureSpec::default();
        let (g, s) = setup(4.0 * PI);
        let cut = s.with_omega_min(s.omega_of_u(2.0)).unwrap();
        let plain = overlap_numeric(&g, &s, &quad).unwrap().value;
        let with_cut = overlap_numeric(&g, &cut, &quad).unwrap().value;
        assert!((plain - with_cut).abs() > 1e-3);
        // both complement routes agree with a cutoff as well
        let direct = overlap_complement_numeric(&g, &cut, &quad).unwrap().value;
        assert!((1.0 - with_cut - direct).abs() < 1e-10);
        let (g_small, _) = setup(0.5);
        let ov = overlap_numeric(&g_small, &cut, &quad).unwrap().value;
        let comp = overlap_complement_numeric(&g_small, &cut, &quad)
            .unwrap()
            .value;
        assert!((1.0 - ov - comp).abs() < 1e-12);
    }

    #[test]
    fn error_estimate_is_honest() {
        let (g, s) = setup(3.0);
        let loose = QuadratureSpec::new(1e-6, 1e-14, 10_000).unwrap();
        let tight = QuadratureSpec::new(5e-7, 1e-14, 10_000).unwrap();
        let a = overlap_numeric(&g, &s, &loose).unwrap();
        let b = overlap_numeric(&g, &s, &tight).unwrap();
        assert!((a.value - b.value).abs() <= a.error.max(1e-15));
    }

    #[test]
    fn series_oracle() {
        let (v, bound) = trigamma_series_oracle(ComplexValue::new(1.0, 0.0), 10_000).unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 1e-9);
        assert!(bound < 1e-12);
        let (v, _) = trigamma_series_oracle(ComplexValue::new(1.0, 7.29), 10_000).unwrap();
        assert!((v.im + 0.1368).abs() < 1e-4);
        assert!(trigamma_series_oracle(ComplexValue::new(1.0, 0.0), 99).is_err());
        assert!(trigamma_series_oracle(ComplexValue::new(-2.0, 0.0), 1000).is_err());
    }
}
