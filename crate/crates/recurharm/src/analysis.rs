//! Floating-point comparison and performance measurement.
//!
//! The alternating binomial sum is numerically treacherous in binary64:
//! its terms grow like C(n, n/2) while the result stays near ln n, so
//! nearly everything cancels and the relative error climbs with n until
//! the result is pure noise. [`error_report`] quantifies that against
//! the exact value; [`bench`] times the exact strategies and records how
//! large their intermediate rationals get.

use std::time::{Duration, Instant};

use crate::error::Error;
use crate::exact::{int_pow, BigInt, ExactRational};
use crate::harmonic::{eval_binomial, eval_with_stats, EvalStrategy};

/// Exact value vs the binary64 evaluation of the same alternating sum.
///
/// Both error fields are rounded only once: the difference is formed in
/// exact arithmetic from the exact dyadic value of the float result.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub n: u32,
    pub m: u32,
    pub exact: ExactRational,
    pub float_value: f64,
    pub abs_error: f64,
    pub rel_error: f64,
    /// Largest |term| seen while summing; the cancellation scale.
    pub largest_term_magnitude: f64,
}

/// Median wall time and working-set measurements for one evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub strategy: EvalStrategy,
    pub n: u32,
    pub m: u32,
    pub wall_time: Duration,
    pub peak_live_rationals: usize,
    pub max_numerator_bits: u64,
    pub max_denominator_bits: u64,
}

/// The n values used to show how cancellation error grows.
pub const ERROR_TREND_GRID: [u32; 4] = [10, 20, 40, 60];

fn float_sum_parts(n: u32, m: u32) -> Result<(f64, f64), Error> {
    if n < 1 {
        return Err(Error::InvalidIndex { n, m });
    }
    let mut sum = 0.0f64;
    let mut largest = 0.0f64;
    let mut coeff = BigInt::from(1u32);
    for k in 1..=n {
        // C(n, k) from C(n, k-1); both factors are exact in BigInt.
        coeff = coeff * (n - k + 1) / k;
        let term_exact = ExactRational::new(coeff.clone(), int_pow(&BigInt::from(k), m));
        let term = term_exact.to_f64();
        if !term.is_finite() {
            return Err(Error::Overflow { n, m, k });
        }
        largest = largest.max(term.abs());
        if k % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if !sum.is_finite() {
        return Err(Error::Overflow { n, m, k: n });
    }
    Ok((sum, largest))
}

/// The alternating binomial sum evaluated entirely in binary64.
///
/// Each term C(n, k) / k^m is correctly rounded to a float before the
/// ascending-k accumulation; what this measures is the cancellation in
/// the summation itself, not sloppy term generation. Terms beyond
/// binary64 range surface as [`Error::Overflow`] naming the first
/// offending k.
pub fn float_binomial_sum(n: u32, m: u32) -> Result<f64, Error> {
    float_sum_parts(n, m).map(|(sum, _)| sum)
}

/// Compares [`float_binomial_sum`] against the exact value at (n, m).
pub fn error_report(n: u32, m: u32) -> Result<ErrorReport, Error> {
    let exact = eval_binomial(n, m)?;
    let (float_value, largest_term_magnitude) = float_sum_parts(n, m)?;
    let float_as_exact =
        ExactRational::from_f64(float_value).expect("finite float is a dyadic rational");
    let diff = (&float_as_exact - &exact).abs();
    let abs_error = diff.to_f64();
    let rel_error = if exact.is_zero() {
        f64::NAN
    } else {
        (&diff / &exact.abs()).to_f64()
    };
    Ok(ErrorReport {
        n,
        m,
        exact,
        float_value,
        abs_error,
        rel_error,
        largest_term_magnitude,
    })
}

/// [`error_report`] across [`ERROR_TREND_GRID`] at a fixed m.
pub fn error_trend(m: u32) -> Result<Vec<ErrorReport>, Error> {
    ERROR_TREND_GRID.iter().map(|&n| error_report(n, m)).collect()
}

/// Times one strategy at (n, m): median wall time over `repetitions`
/// runs (at least one), never reported below 1ns, plus the allocation
/// and operand-size counters from the run.
pub fn bench(
    n: u32,
    m: u32,
    strategy: EvalStrategy,
    repetitions: u32,
) -> Result<BenchReport, Error> {
    let repetitions = repetitions.max(1);
    let mut durations = Vec::with_capacity(repetitions as usize);
    let mut last = None;
    for _ in 0..repetitions {
        let start = Instant::now();
        let (value, stats) = eval_with_stats(n, m, strategy)?;
        durations.push(start.elapsed());
        if let Some((prev_value, _)) = &last {
            assert_eq!(prev_value, &value, "evaluation must be deterministic");
        }
        last = Some((value, stats));
    }
    durations.sort();
    let median = durations[(durations.len() - 1) / 2];
    let (_, stats) = last.expect("at least one repetition ran");
    Ok(BenchReport {
        strategy,
        n,
        m,
        wall_time: median.max(Duration::from_nanos(1)),
        peak_live_rationals: stats.peak_live_rationals,
        max_numerator_bits: stats.max_numerator_bits,
        max_denominator_bits: stats.max_denominator_bits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::classical_harmonic;
    use proptest::prelude::*;

    #[test]
    fn float_sum_is_exact_while_terms_are_small() {
        // For m = 0 every term is an integer below 2^53, so the floats
        // are exact and the telescoping to 1 is too.
        for n in [1, 2, 7, 20] {
            assert_eq!(float_binomial_sum(n, 0).unwrap(), 1.0);
        }
    }

    #[test]
    fn float_sum_tracks_small_harmonics_closely() {
        let exact = classical_harmonic(10).unwrap().to_f64();
        let float = float_binomial_sum(10, 1).unwrap();
        assert!((float - exact).abs() < 1e-10);
    }

    #[test]
    fn float_sum_rejects_n_zero() {
        assert_eq!(
            float_binomial_sum(0, 3).unwrap_err(),
            Error::InvalidIndex { n: 0, m: 3 }
        );
    }

    #[test]
    fn float_sum_overflows_for_large_n() {
        let err = float_binomial_sum(1100, 0).unwrap_err();
        match err {
            Error::Overflow { n: 1100, m: 0, k } => assert!(k > 1),
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn report_at_small_n_is_nearly_exact() {
        let report = error_report(4, 1).unwrap();
        assert_eq!(report.exact.canonical(), "25/12");
        assert_eq!(report.largest_term_magnitude, 4.0);
        assert!(report.abs_error < 1e-14);
        assert!(report.rel_error < 1e-12);
    }

    #[test]
    fn report_at_n_one_is_exact() {
        let report = error_report(1, 5).unwrap();
        assert_eq!(report.float_value, 1.0);
        assert_eq!(report.abs_error, 0.0);
        assert_eq!(report.rel_error, 0.0);
        assert_eq!(report.largest_term_magnitude, 1.0);
    }

    #[test]
    fn cancellation_destroys_accuracy_by_n_sixty() {
        let report = error_report(60, 1).unwrap();
        assert!(report.rel_error > 1e-6, "rel_error = {}", report.rel_error);
        assert!(report.largest_term_magnitude > 1e15);
    }

    #[test]
    fn error_trend_is_nondecreasing() {
        let reports = error_trend(1).unwrap();
        let ns: Vec<u32> = reports.iter().map(|r| r.n).collect();
        assert_eq!(ns, ERROR_TREND_GRID);
        for pair in reports.windows(2) {
            assert!(pair[0].rel_error <= pair[1].rel_error);
        }
    }

    #[test]
    fn bench_reports_are_populated() {
        let report = bench(8, 2, EvalStrategy::Table, 3).unwrap();
        assert_eq!(report.strategy, EvalStrategy::Table);
        assert_eq!((report.n, report.m), (8, 2));
        assert!(report.wall_time >= Duration::from_nanos(1));
        assert!(report.peak_live_rationals >= 8);
        assert!(report.max_denominator_bits > 0);
    }

    #[test]
    fn bench_clamps_zero_repetitions() {
        let report = bench(3, 1, EvalStrategy::Definition, 0).unwrap();
        assert!(report.wall_time >= Duration::from_nanos(1));
    }

    #[test]
    fn bench_propagates_invalid_index() {
        assert_eq!(
            bench(0, 1, EvalStrategy::Binomial, 1).unwrap_err(),
            Error::InvalidIndex { n: 0, m: 1 }
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn float_sum_stays_near_exact_below_cancellation(n in 1u32..40) {
            let exact = eval_binomial(n, 1).unwrap().to_f64();
            let float = float_binomial_sum(n, 1).unwrap();
            prop_assert!((float - exact).abs() / exact < 1e-4);
        }
    }
}
