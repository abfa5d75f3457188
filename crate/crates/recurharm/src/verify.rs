//! Cross-checks the three evaluation strategies against each other and
//! against structural facts that hold for every (n, m).
//!
//! There is no external oracle for these numbers, so correctness rests
//! on independent routes agreeing: three different formulas must produce
//! identical rationals, and the shared value must satisfy the recurrence,
//! match the classical harmonic number at m = 1, keep its denominator
//! inside lcm(1..n)^m, and respect the monotonicity the definition
//! forces. Each property scans the full grid and stops at the first
//! counterexample.

use crate::error::Error;
use crate::exact::{lcm_up_to, int_pow, ExactRational};
use crate::harmonic::{
    build_table, classical_harmonic, eval_binomial, eval_definition, HarmonicTable,
};

/// Outcome of one property scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    /// Comparisons performed, including a failing one.
    pub checks: u64,
    pub counterexample: Option<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// All property outcomes for one grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub n_max: u32,
    pub m_max: u32,
    pub properties: Vec<PropertyReport>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(PropertyReport::passed)
    }

    /// One line per property plus a closing verdict line.
    pub fn render_text(&self) -> String {
        let mut lines: Vec<String> = self
            .properties
            .iter()
            .map(|p| match &p.counterexample {
                None => format!("property {}: ok ({} checks)", p.name, p.checks),
                Some(cx) => format!("property {}: FAIL at {cx}", p.name),
            })
            .collect();
        let failed = self.properties.iter().filter(|p| !p.passed()).count();
        let verdict = if failed == 0 {
            "all passed".to_string()
        } else {
            format!("{failed} FAILED")
        };
        lines.push(format!(
            "verified {} properties over n <= {}, m <= {}: {verdict}",
            self.properties.len(),
            self.n_max,
            self.m_max
        ));
        lines.join("\n")
    }
}

fn strategies_agree(table: &HarmonicTable) -> PropertyReport {
    let mut checks = 0;
    let mut counterexample = None;
    'scan: for n in 1..=table.n_max() {
        for m in 0..=table.m_max() {
            checks += 1;
            let tab = table.get(n, m).expect("in range");
            let def = eval_definition(n, m).expect("n >= 1");
            let bin = eval_binomial(n, m).expect("n >= 1");
            if def != *tab || bin != *tab {
                counterexample = Some(format!(
                    "(n={n}, m={m}): definition={def}, table={tab}, binomial={bin}"
                ));
                break 'scan;
            }
        }
    }
    PropertyReport {
        name: "strategies-agree",
        checks,
        counterexample,
    }
}

fn binomial_satisfies_recurrence(n_max: u32, m_max: u32) -> PropertyReport {
    let mut checks = 0;
    let mut counterexample = None;
    'scan: for n in 2..=n_max {
        for m in 1..=m_max {
            checks += 1;
            let here = eval_binomial(n, m).expect("n >= 1");
            let above = eval_binomial(n - 1, m).expect("n >= 2");
            let left = eval_binomial(n, m - 1).expect("n >= 1");
            let rebuilt = &above + &(ExactRational::unit_fraction(n) * left);
            if here != rebuilt {
                counterexample = Some(format!(
                    "(n={n}, m={m}): binomial gives {here}, recurrence gives {rebuilt}"
                ));
                break 'scan;
            }
        }
    }
    PropertyReport {
        name: "binomial-recurrence",
        checks,
        counterexample,
    }
}

fn m_one_is_classical(table: &HarmonicTable) -> PropertyReport {
    let mut checks = 0;
    let mut counterexample = None;
    if table.m_max() >= 1 {
        for n in 1..=table.n_max() {
            checks += 1;
            let classical = classical_harmonic(n).expect("n >= 1");
            let tab = table.get(n, 1).expect("in range");
            let def = eval_definition(n, 1).expect("n >= 1");
            let bin = eval_binomial(n, 1).expect("n >= 1");
            if *tab != classical || def != classical || bin != classical {
                counterexample = Some(format!(
                    "n={n}: classical={classical}, table={tab}, definition={def}, binomial={bin}"
                ));
                break;
            }
        }
    }
    PropertyReport {
        name: "m-one-is-classical",
        checks,
        counterexample,
    }
}

fn denominator_divides_lcm_power(table: &HarmonicTable) -> PropertyReport {
    let mut checks = 0;
    let mut counterexample = None;
    'scan: for n in 1..=table.n_max() {
        let lcm = lcm_up_to(n);
        for m in 0..=table.m_max() {
            checks += 1;
            let value = table.get(n, m).expect("in range");
            let bound = int_pow(&lcm, m);
            if (&bound % value.denom()) != 0u32.into() {
                counterexample = Some(format!(
                    "(n={n}, m={m}): denominator {} does not divide lcm(1..{n})^{m} = {bound}",
                    value.denom()
                ));
                break 'scan;
            }
        }
    }
    PropertyReport {
        name: "denominator-divides-lcm-power",
        checks,
        counterexample,
    }
}

fn strictly_increasing_in_n(table: &HarmonicTable) -> PropertyReport {
    let mut checks = 0;
    let mut counterexample = None;
    'scan: for m in 1..=table.m_max() {
        for n in 1..table.n_max() {
            checks += 1;
            let here = table.get(n, m).expect("in range");
            let next = table.get(n + 1, m).expect("in range");
            if next <= here {
                counterexample = Some(format!(
                    "m={m}: value {next} at n={} is not above {here} at n={n}",
                    n + 1
                ));
                break 'scan;
            }
        }
    }
    PropertyReport {
        name: "strictly-increasing-in-n",
        checks,
        counterexample,
    }
}

fn increasing_in_m_except_first_row(table: &HarmonicTable) -> PropertyReport {
    let mut checks = 0;
    let mut counterexample = None;
    'scan: for n in 1..=table.n_max() {
        for m in 0..table.m_max() {
            checks += 1;
            let here = table.get(n, m).expect("in range");
            let next = table.get(n, m + 1).expect("in range");
            let ok = if n == 1 { next == here } else { next > here };
            if !ok {
                counterexample = Some(format!(
                    "(n={n}): value {next} at m={} vs {here} at m={m}",
                    m + 1
                ));
                break 'scan;
            }
        }
    }
    PropertyReport {
        name: "increasing-in-m-except-n-one",
        checks,
        counterexample,
    }
}

fn never_below_one(table: &HarmonicTable) -> PropertyReport {
    let mut checks = 0;
    let mut counterexample = None;
    let one = ExactRational::one();
    for (n, m, value) in table.cells() {
        checks += 1;
        if *value < one {
            counterexample = Some(format!("(n={n}, m={m}): {value} is below 1"));
            break;
        }
    }
    PropertyReport {
        name: "never-below-one",
        checks,
        counterexample,
    }
}

/// Runs every property over the grid n in 1..=n_max, m in 0..=m_max.
pub fn run_suite(n_max: u32, m_max: u32) -> Result<VerifySummary, Error> {
    let table = build_table(n_max, m_max)?;
    let properties = vec![
        strategies_agree(&table),
        binomial_satisfies_recurrence(n_max, m_max),
        m_one_is_classical(&table),
        denominator_divides_lcm_power(&table),
        strictly_increasing_in_n(&table),
        increasing_in_m_except_first_row(&table),
        never_below_one(&table),
    ];
    Ok(VerifySummary {
        n_max,
        m_max,
        properties,
    })
}
