//! Closed-form relations between the generator threshold `d`, the vertex
//! count `n` and the expected edge density of a random threshold graph whose
//! vertex weights are i.i.d. uniform on `[0, 1]`.
//!
//! Every density formula comes in two regimes: the finite-`n` expressions and
//! their `n -> infinity` limits (`2d^2` and `1 - 2(1-d)^2`). The limits are
//! what the classical `d -> delta` table reports.

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DensityError {
    #[error("threshold {0} outside [0, 1]")]
    ThresholdOutOfRange(f64),
    #[error("density {0} outside [0, 1]")]
    DensityOutOfRange(f64),
    #[error("finite-n formulas need n >= 2, got {0}")]
    TooFewVertices(usize),
    #[error("lower bound g + (n-g)/2 needs d >= 0.5, got {0}")]
    ThresholdBelowHalf(f64),
}

/// Generator threshold `d`, always in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ThresholdParam<T>(T);

impl<T: Scalar> ThresholdParam<T> {
    pub fn new(d: T) -> Result<Self, DensityError> {
        if d >= T::zero() && d <= T::one() {
            Ok(Self(d))
        } else {
            Err(DensityError::ThresholdOutOfRange(d.to_f64().unwrap_or(f64::NAN)))
        }
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }
}

/// Which form of the formulas to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Exact expressions for `n` vertices.
    Finite(usize),
    /// The `n -> infinity` limit.
    Asymptotic,
}

fn check_density<T: Scalar>(delta: T) -> Result<T, DensityError> {
    if delta >= T::zero() && delta <= T::one() {
        Ok(delta)
    } else {
        Err(DensityError::DensityOutOfRange(
            delta.to_f64().unwrap_or(f64::NAN),
        ))
    }
}

fn finite_n(regime: Regime) -> Result<Option<usize>, DensityError> {
    match regime {
        Regime::Finite(n) if n < 2 => Err(DensityError::TooFewVertices(n)),
        Regime::Finite(n) => Ok(Some(n)),
        Regime::Asymptotic => Ok(None),
    }
}

/// Raw values of the `d <= 0.5` and `d >= 0.5` density expressions at `d`,
/// unclamped, regardless of which branch applies.
///
/// In the asymptotic regime the two agree at `d = 0.5`. For finite `n` the
/// upper expression is lower by exactly `1/(n-1)` there.
pub fn density_branches<T: Scalar>(
    regime: Regime,
    d: ThresholdParam<T>,
) -> Result<(T, T), DensityError> {
    let d = d.value();
    let two = T::lit(2.0);
    let c = T::one() - d;
    Ok(match finite_n(regime)? {
        None => (two * d * d, T::one() - two * c * c),
        Some(n) => {
            let n = T::from_count(n);
            let pairs = n * (n - T::one());
            let nd = n * d;
            let lower = (two * nd * nd - nd) / pairs;
            let upper = (pairs - two * n * n * c * c - n * c) / pairs;
            (lower, upper)
        }
    })
}

/// Expected edge density of a threshold graph generated with threshold `d`.
///
/// The `d <= 0.5` branch is used at `d = 0.5`. The result is clamped to `[0, 1]`
/// (the finite lower branch dips below zero for `d < 1/(2n)`).
pub fn expected_density_from_threshold<T: Scalar>(
    regime: Regime,
    d: ThresholdParam<T>,
) -> Result<T, DensityError> {
    let (lower, upper) = density_branches(regime, d)?;
    let raw = if d.value() <= T::lit(0.5) { lower } else { upper };
    Ok(raw.max(T::zero()).min(T::one()))
}

/// Threshold `d` to use so that the generated graph has expected density
/// `delta`. Inverse of [`expected_density_from_threshold`] in the same regime.
pub fn threshold_from_density<T: Scalar>(
    regime: Regime,
    delta: T,
) -> Result<ThresholdParam<T>, DensityError> {
    let delta = check_density(delta)?;
    let Some(n) = finite_n(regime)? else {
        return approx_threshold_from_density(delta);
    };
    let n = T::from_count(n);
    let one = T::one();
    let eight = T::lit(8.0);
    let four_n = T::lit(4.0) * n;
    let d = if delta <= T::lit(0.5) {
        (one + (one + eight * n * (n - one) * delta).sqrt()) / four_n
    } else {
        one + (one - (one + eight * n * (n - one) * (one - delta)).sqrt()) / four_n
    };
    ThresholdParam::new(d.max(T::zero()).min(one))
}

/// Large-`n` approximation: `sqrt(delta/2)` below one half and
/// `1 - sqrt((1-delta)/2)` above.
pub fn approx_threshold_from_density<T: Scalar>(
    delta: T,
) -> Result<ThresholdParam<T>, DensityError> {
    let delta = check_density(delta)?;
    let half = T::lit(0.5);
    let d = if delta <= half {
        (delta * half).sqrt()
    } else {
        T::one() - ((T::one() - delta) * half).sqrt()
    };
    ThresholdParam::new(d)
}

/// Expected maximum clique size `n d`.
pub fn expected_clique_size<T: Scalar>(n: usize, d: ThresholdParam<T>) -> T {
    T::from_count(n) * d.value()
}

/// Expected number of universal vertices: `0` for `d <= 0.5`, else `n(2d - 1)`.
pub fn expected_universal_count<T: Scalar>(n: usize, d: ThresholdParam<T>) -> T {
    let d = d.value();
    if d <= T::lit(0.5) {
        T::zero()
    } else {
        T::from_count(n) * (T::lit(2.0) * d - T::one())
    }
}

/// Expected value of the bin lower bound `g + (n - g)/2` for instances whose
/// conflict graph comes from the threshold generator with `d >= 0.5`.
pub fn expected_bppc_lower_bound<T: Scalar>(
    n: usize,
    d: ThresholdParam<T>,
) -> Result<T, DensityError> {
    if d.value() < T::lit(0.5) {
        return Err(DensityError::ThresholdBelowHalf(
            d.value().to_f64().unwrap_or(f64::NAN),
        ));
    }
    let g = expected_universal_count(n, d);
    Ok(g + (T::from_count(n) - g) / T::lit(2.0))
}
