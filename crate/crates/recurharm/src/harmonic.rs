//! Recursive harmonic numbers H(n, m) for n >= 1, m >= 0, computed by
//! three independent strategies that must agree exactly:
//!
//! * `Definition`: H(n, 0) = 1 and H(n, m) = sum_{k=1..n} (1/k) H(k, m-1),
//!   evaluated by literal recursion with memoization over the (k, m') lattice.
//! * `Table`: the equivalent two-neighbor recurrence
//!   H(n, m) = H(n-1, m) + (1/n) H(n, m-1) with H(n, 0) = H(1, m) = 1,
//!   which fills a Pascal-like table one column of m at a time.
//! * `Binomial`: the alternating sum
//!   H(n, m) = sum_{k=1..n} (-1)^(k+1) C(n, k) / k^m.
//!
//! No strategy is the reference; correctness is three-way agreement.
//! H(n, 1) is the classical harmonic number 1 + 1/2 + ... + 1/n, checked
//! against an independent direct summation in [`classical_harmonic`].

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::exact::{binomial, int_pow, BigInt, ExactRational};

/// Which computation path to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalStrategy {
    Definition,
    Table,
    Binomial,
}

impl EvalStrategy {
    pub const ALL: [EvalStrategy; 3] = [
        EvalStrategy::Definition,
        EvalStrategy::Table,
        EvalStrategy::Binomial,
    ];
}

impl fmt::Display for EvalStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            EvalStrategy::Definition => "definition",
            EvalStrategy::Table => "table",
            EvalStrategy::Binomial => "binomial",
        };
        f.write_str(name)
    }
}

impl FromStr for EvalStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "definition" => Ok(EvalStrategy::Definition),
            "table" => Ok(EvalStrategy::Table),
            "binomial" => Ok(EvalStrategy::Binomial),
            _ => Err(Error::Parse(format!(
                "unknown strategy {s:?} (expected definition|table|binomial)"
            ))),
        }
    }
}

/// Operand-size and storage observations from one evaluation.
///
/// `peak_live_rationals` counts the most rationals the strategy kept in
/// its working set at once (memo entries, table column, accumulators);
/// temporaries inside a single arithmetic operation are not counted.
/// The bit maxima cover every intermediate value the strategy produced,
/// accumulator states included, as reduced numerator/denominator sizes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalStats {
    pub peak_live_rationals: usize,
    pub max_numerator_bits: u64,
    pub max_denominator_bits: u64,
    live: usize,
}

impl EvalStats {
    fn observe(&mut self, v: &ExactRational) {
        self.max_numerator_bits = self.max_numerator_bits.max(v.numer().bits());
        self.max_denominator_bits = self.max_denominator_bits.max(v.denom().bits());
    }

    /// A value entering the working set.
    fn retain(&mut self, v: &ExactRational) {
        self.live += 1;
        self.peak_live_rationals = self.peak_live_rationals.max(self.live);
        self.observe(v);
    }

    /// A short-lived value held alongside the working set.
    fn transient(&mut self, v: &ExactRational) {
        self.peak_live_rationals = self.peak_live_rationals.max(self.live + 1);
        self.observe(v);
    }
}

fn check_index(n: u32, m: u32) -> Result<(), Error> {
    if n < 1 {
        return Err(Error::InvalidIndex { n, m });
    }
    Ok(())
}

/// H(n, m) by literal recursion on the definition, memoized over the
/// (k, m') pairs the call touches. The memo lives and dies with the call.
pub fn eval_definition(n: u32, m: u32) -> Result<ExactRational, Error> {
    check_index(n, m)?;
    let mut stats = EvalStats::default();
    Ok(definition_core(n, m, &mut stats))
}

fn definition_core(n: u32, m: u32, stats: &mut EvalStats) -> ExactRational {
    let n = n as usize;
    let m = m as usize;
    let mut memo: Vec<Vec<Option<ExactRational>>> = vec![vec![None; n]; m + 1];

    fn h(k: usize, mp: usize, memo: &mut [Vec<Option<ExactRational>>], stats: &mut EvalStats) -> ExactRational {
        if mp == 0 {
            return ExactRational::one();
        }
        if let Some(v) = &memo[mp][k - 1] {
            return v.clone();
        }
        let mut acc = ExactRational::zero();
        for j in 1..=k {
            let term = ExactRational::unit_fraction(j as u32) * h(j, mp - 1, memo, stats);
            stats.transient(&term);
            acc = acc + term;
            stats.transient(&acc);
        }
        stats.retain(&acc);
        memo[mp][k - 1] = Some(acc.clone());
        acc
    }

    h(n, m, &mut memo, stats)
}

/// H(n, m) by the two-neighbor recurrence, streaming one column of m at
/// a time so only O(n) rationals are live. `build_table` is the variant
/// that materializes the whole table.
pub fn eval_table(n: u32, m: u32) -> Result<ExactRational, Error> {
    check_index(n, m)?;
    let mut stats = EvalStats::default();
    Ok(table_core(n, m, &mut stats))
}

fn table_core(n: u32, m: u32, stats: &mut EvalStats) -> ExactRational {
    // column m' = 0 is all ones
    let mut col = vec![ExactRational::one(); n as usize];
    for v in &col {
        stats.retain(v);
    }
    for _mp in 1..=m {
        // ascending n updates in place: col[i-1] is already the new
        // column, col[i] still holds the previous one
        for i in 2..=(n as usize) {
            let v = &col[i - 2] + &(ExactRational::unit_fraction(i as u32) * col[i - 1].clone());
            stats.transient(&v);
            col[i - 1] = v;
        }
    }
    col.pop().expect("column is nonempty for n >= 1")
}

/// H(n, m) by the alternating binomial sum, ascending k with a running
/// signed accumulator.
pub fn eval_binomial(n: u32, m: u32) -> Result<ExactRational, Error> {
    check_index(n, m)?;
    let mut stats = EvalStats::default();
    Ok(binomial_core(n, m, &mut stats))
}

fn binomial_core(n: u32, m: u32, stats: &mut EvalStats) -> ExactRational {
    let mut acc = ExactRational::zero();
    stats.retain(&acc);
    for k in 1..=n {
        let term = ExactRational::new(binomial(n, k), int_pow(&BigInt::from(k), m));
        stats.transient(&term);
        acc = if k % 2 == 1 { acc + term } else { acc - term };
        stats.observe(&acc);
    }
    acc
}

/// Dispatches to the strategy's evaluator.
pub fn eval(n: u32, m: u32, strategy: EvalStrategy) -> Result<ExactRational, Error> {
    match strategy {
        EvalStrategy::Definition => eval_definition(n, m),
        EvalStrategy::Table => eval_table(n, m),
        EvalStrategy::Binomial => eval_binomial(n, m),
    }
}

/// Evaluates like [`eval`] while recording operand-size and storage
/// observations for the bench reports.
pub fn eval_with_stats(
    n: u32,
    m: u32,
    strategy: EvalStrategy,
) -> Result<(ExactRational, EvalStats), Error> {
    check_index(n, m)?;
    let mut stats = EvalStats::default();
    let value = match strategy {
        EvalStrategy::Definition => definition_core(n, m, &mut stats),
        EvalStrategy::Table => table_core(n, m, &mut stats),
        EvalStrategy::Binomial => binomial_core(n, m, &mut stats),
    };
    stats.observe(&value);
    Ok((value, stats))
}

/// The classical harmonic number 1 + 1/2 + ... + 1/n, summed directly.
/// Kept independent of the three strategies so it can serve as an
/// outside check on all of them at m = 1.
pub fn classical_harmonic(n: u32) -> Result<ExactRational, Error> {
    check_index(n, 0)?;
    let mut acc = ExactRational::zero();
    for k in 1..=n {
        acc = acc + ExactRational::unit_fraction(k);
    }
    Ok(acc)
}

/// A fully materialized (n, m) table of recursive harmonic numbers,
/// immutable once built. Column m = 0 and row n = 1 are all ones and
/// every interior cell satisfies the two-neighbor recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicTable {
    n_max: u32,
    m_max: u32,
    /// row-major: values[(n-1) * (m_max+1) + m]
    values: Vec<ExactRational>,
}

impl HarmonicTable {
    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn m_max(&self) -> u32 {
        self.m_max
    }

    /// The cell H(n, m), or None outside 1 <= n <= n_max, 0 <= m <= m_max.
    pub fn get(&self, n: u32, m: u32) -> Option<&ExactRational> {
        if n < 1 || n > self.n_max || m > self.m_max {
            return None;
        }
        Some(&self.values[self.index(n, m)])
    }

    fn index(&self, n: u32, m: u32) -> usize {
        (n as usize - 1) * (self.m_max as usize + 1) + m as usize
    }

    /// Row-major cell iteration, (n, m, value) with m fastest.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32, &ExactRational)> {
        let cols = self.m_max + 1;
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (i as u32 / cols + 1, i as u32 % cols, v))
    }

    /// Rebuilds a table from row-major cell values, e.g. parsed back from
    /// CSV or JSON. Validates shape, base cases, and the recurrence, so
    /// corrupted interchange data is rejected rather than wrapped.
    pub fn from_values(
        n_max: u32,
        m_max: u32,
        values: Vec<ExactRational>,
    ) -> Result<Self, Error> {
        if n_max < 1 {
            return Err(Error::InvalidIndex { n: n_max, m: m_max });
        }
        let expected = n_max as usize * (m_max as usize + 1);
        if values.len() != expected {
            return Err(Error::Parse(format!(
                "table shape mismatch: {} cells for n_max={n_max}, m_max={m_max} (expected {expected})",
                values.len()
            )));
        }
        let table = HarmonicTable {
            n_max,
            m_max,
            values,
        };
        let one = ExactRational::one();
        for (n, m, v) in table.cells() {
            let ok = if m == 0 || n == 1 {
                *v == one
            } else {
                let up = table.get(n - 1, m).expect("in range");
                let left = table.get(n, m - 1).expect("in range");
                *v == up + &(ExactRational::unit_fraction(n) * left.clone())
            };
            if !ok {
                return Err(Error::Parse(format!(
                    "cell (n={n}, m={m}) does not satisfy the harmonic recurrence"
                )));
            }
        }
        Ok(table)
    }
}

/// Builds the complete table up to (n_max, m_max), filling column by
/// column in m: each cell needs only its upper neighbor in n (same
/// column) and its left neighbor in m (previous column).
pub fn build_table(n_max: u32, m_max: u32) -> Result<HarmonicTable, Error> {
    check_index(n_max, m_max)?;
    let cols = m_max as usize + 1;
    let mut values = vec![ExactRational::one(); n_max as usize * cols];
    let index = |n: u32, m: u32| (n as usize - 1) * cols + m as usize;
    for m in 1..=m_max {
        for n in 2..=n_max {
            let v = &values[index(n - 1, m)]
                + &(ExactRational::unit_fraction(n) * values[index(n, m - 1)].clone());
            values[index(n, m)] = v;
        }
    }
    Ok(HarmonicTable {
        n_max,
        m_max,
        values,
    })
}
