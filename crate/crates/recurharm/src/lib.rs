//! Exact evaluation of recursive harmonic numbers.
//!
//! The family is defined by H_n^(0) = 1 and
//!
//! ```text
//! H_n^(m) = sum_{k=1..n} (1/k) H_k^(m-1)
//! ```
//!
//! so m = 1 gives the classical harmonic numbers and each further level
//! feeds the previous one back through weighted partial sums. Everything
//! here is computed in arbitrary-precision rationals; results are exact,
//! not approximations.
//!
//! Three independent strategies compute the same values: the definition
//! by recursion with memoisation, a Pascal-style table sweep, and a
//! closed form as an alternating binomial sum. [`verify::run_suite`]
//! plays them against each other, [`analysis`] measures how badly the
//! alternating sum behaves in binary64 and how expensive each strategy
//! is, and [`render`] fixes deterministic text formats for tables and
//! reports.
//!
//! ```
//! use recurharm::{eval, EvalStrategy};
//!
//! let h = eval(4, 2, EvalStrategy::Table).unwrap();
//! assert_eq!(h.canonical(), "415/144");
//! ```

pub mod analysis;
pub mod error;
pub mod exact;
pub mod harmonic;
pub mod render;
pub mod verify;

pub use analysis::{
    bench, error_report, error_trend, float_binomial_sum, BenchReport, ErrorReport,
    ERROR_TREND_GRID,
};
pub use error::Error;
pub use exact::{binomial, int_pow, lcm_up_to, BigInt, ExactRational};
pub use harmonic::{
    build_table, classical_harmonic, eval, eval_binomial, eval_definition, eval_table,
    eval_with_stats, EvalStats, EvalStrategy, HarmonicTable,
};
pub use render::{
    parse_table_csv, parse_table_json, render_reports, render_table, render_value, RenderFormat,
    TabularReport,
};
pub use verify::{run_suite, PropertyReport, VerifySummary};
