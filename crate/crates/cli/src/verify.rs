//! The cross-checking suite behind `rootloci verify`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use rootloci::moduli::{
    gcd_certificates, gen_function_check, ideal_equal_up_to, kirwan_ideal,
    lambda2_identity_residual, membership, pi, presentation, presentation_link, stable_partitions,
    GradedIdeal, Space,
};
use rootloci::partition::{partitions, Partition};
use rootloci::poly::c1;
use rootloci::thom::{
    check_relations_even, projective_degree, tp_e3, tp_e3_j2, tp_kirwan, tp_naive, tp_power_block,
    tp_reduce, tp_sum, tp_two_block,
};
use rootloci::{SymForm, ThomPoly};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tp,
    Moduli,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub suite: Suite,
    pub max_d: usize,
    pub partitions: usize,
    pub run: usize,
    pub passed: usize,
    pub failed: usize,
    /// Check name to `[run, passed]`.
    pub by_check: BTreeMap<String, [usize; 2]>,
    #[serde(skip)]
    pub failures: Vec<CheckResult>,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

enum Task {
    Partition(Partition),
    Moduli(usize),
}

struct Checks {
    subject: String,
    out: Vec<CheckResult>,
}

impl Checks {
    fn new(subject: String) -> Self {
        Checks {
            subject,
            out: Vec::new(),
        }
    }

    fn record(&mut self, check: &str, outcome: Result<bool, String>) {
        let (passed, detail) = match outcome {
            Ok(true) => (true, String::new()),
            Ok(false) => (false, "identity does not hold".to_string()),
            Err(e) => (false, e),
        };
        self.out.push(CheckResult {
            check: check.to_string(),
            subject: self.subject.clone(),
            passed,
            detail,
        });
    }
}

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

/// Hand-expanded values; `(partition, c1/c2 degree, coefficients)`.
const SPOT_VALUES: [(&str, usize, &[i64]); 5] = [
    ("2", 1, &[2]),
    ("2,1", 1, &[6]),
    ("3", 2, &[6, 3]),
    ("2,2", 2, &[12, 16]),
    ("1^3 3", 2, &[120, -48]),
];

fn same(closed: Result<ThomPoly, impl ToString>, reference: &ThomPoly) -> Result<bool, String> {
    Ok(closed.map_err(err)?.value == reference.value)
}

fn partition_checks(lambda: &Partition) -> Vec<CheckResult> {
    let mut c = Checks::new(format!("lambda={lambda}"));
    let reference = match tp_reduce(lambda) {
        Ok(r) => r,
        Err(e) => {
            c.record("three-way", Err(err(e)));
            return c.out;
        }
    };
    c.record(
        "three-way",
        (|| {
            let n = tp_naive(lambda).map_err(err)?;
            let s = tp_sum(lambda).map_err(err)?;
            if n.value == reference.value && s.value == reference.value {
                Ok(true)
            } else {
                Err(format!(
                    "reduce {}, naive {}, sum {}",
                    reference.value, n.value, s.value
                ))
            }
        })(),
    );
    c.record(
        "degree",
        projective_degree(&reference).map_err(err).and_then(|deg| {
            let want = lambda.hilbert_degree();
            if deg == want {
                Ok(true)
            } else {
                Err(format!("{deg} vs {want}"))
            }
        }),
    );
    c.record(
        "shape",
        Ok(reference.value.is_integral()
            && reference.value.degree() == lambda.codim()
            && reference.as_biform().is_symmetric()),
    );
    for (text, deg, coeffs) in SPOT_VALUES {
        if Partition::parse(text).as_ref() == Ok(lambda) {
            c.record(
                "spot",
                Ok(reference.value == SymForm::from_ints(deg, coeffs)),
            );
        }
    }

    let blocks: Vec<(usize, usize)> = lambda.blocks().collect();
    match blocks[..] {
        [(i, e)] => c.record("power-block", same(tp_power_block(i, e), &reference)),
        [(i, ei), (j, ej)] => {
            c.record("two-block", same(tp_two_block(i, ei, j, ej), &reference));
            if i == 1 && ej == 1 && j >= 2 {
                c.record("kirwan", same(tp_kirwan(ei, j), &reference));
            }
        }
        _ => {}
    }
    let d = lambda.d();
    let h = d / 2;
    if d.is_multiple_of(2) && h >= 3 {
        for j in 2..h {
            if Partition::ones_plus(h - j, &[j, h]).as_ref() == Ok(lambda) {
                c.record("e3", same(tp_e3(h, j), &reference));
                if j == 2 {
                    c.record("e3", same(tp_e3_j2(h), &reference));
                }
            }
        }
    }
    c.out
}

fn moduli_checks(d: usize) -> Vec<CheckResult> {
    let mut c = Checks::new(format!("d={d}"));
    let bound = 2 * d;
    let h = d / 2;
    let even = d.is_multiple_of(2);

    let verified = |space: Space| {
        presentation(d, space, bound)
            .map(|p| p.series_verified)
            .map_err(err)
    };
    c.record("ss-series", verified(Space::SsEquivariant));
    c.record("ss-quotient-series", verified(Space::SsQuotient));
    c.record("gcd", gcd_certificates(d).map(|r| r.holds()).map_err(err));
    match gen_function_check(d, 12, bound) {
        Ok(r) => {
            c.record("gen-coefficients", Ok(r.coefficients_hold()));
            // odd d: the family generates the stable ideal; even d: the semistable one
            c.record(
                "gen-ideal",
                Ok(if even {
                    r.matches_kirwan_ideal
                } else {
                    r.matches_stable_ideal
                }),
            );
        }
        Err(e) => c.record("gen-coefficients", Err(err(e))),
    }
    if !even {
        return c.out;
    }

    c.record("stable-series", verified(Space::StableQuotient));
    c.record(
        "ideal-c1",
        (|| {
            let p = pi(d);
            let target = GradedIdeal::from_forms(vec![&c1() * &p.divided_difference(), &c1() * &p])
                .map_err(err)?;
            ideal_equal_up_to(&kirwan_ideal(d).map_err(err)?, &target, bound).map_err(err)
        })(),
    );
    c.record(
        "ideal-stable",
        (|| {
            let (l0, l0p) = stable_partitions(d).map_err(err)?;
            let tps = GradedIdeal::from_sym(&[
                tp_reduce(&l0).map_err(err)?.value,
                tp_reduce(&l0p).map_err(err)?.value,
            ])
            .map_err(err)?;
            let p = pi(d);
            let target = GradedIdeal::from_forms(vec![p.divided_difference(), p]).map_err(err)?;
            ideal_equal_up_to(&tps, &target, bound).map_err(err)
        })(),
    );
    c.record(
        "lambda2-identity",
        lambda2_identity_residual(d)
            .map(|r| r.is_zero())
            .map_err(err),
    );
    if h < 3 {
        return c.out;
    }
    c.record(
        "relations",
        check_relations_even(h).map(|r| r.holds()).map_err(err),
    );
    for j in 2..h {
        c.record(
            "non-membership",
            (|| {
                let lambda = Partition::ones_plus(h - j, &[j, h]).map_err(err)?;
                let tp = tp_reduce(&lambda).map_err(err)?;
                let cert = membership(&tp.value, &kirwan_ideal(d).map_err(err)?).map_err(err)?;
                Ok(!cert.member && cert.augmented_rank == cert.span_rank + 1)
            })(),
        );
    }
    c.record(
        "link",
        presentation_link(d).map(|p| p.series_verified).map_err(err),
    );
    c.out
}

/// Runs the suite over `d <= max_d` on `jobs` threads (0: all available).
pub fn run_verify(max_d: usize, suite: Suite, jobs: usize) -> Result<Summary, String> {
    let mut tasks = Vec::new();
    let mut partition_count = 0;
    if suite != Suite::Moduli {
        for d in 1..=max_d {
            for lambda in partitions(d) {
                partition_count += 1;
                tasks.push(Task::Partition(lambda));
            }
        }
    }
    if suite != Suite::Tp {
        tasks.extend((3..=max_d).map(Task::Moduli));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(err)?;
    let results: Vec<CheckResult> = pool.install(|| {
        tasks
            .par_iter()
            .flat_map_iter(|task| match task {
                Task::Partition(lambda) => partition_checks(lambda),
                Task::Moduli(d) => moduli_checks(*d),
            })
            .collect()
    });

    let mut by_check: BTreeMap<String, [usize; 2]> = BTreeMap::new();
    for r in &results {
        let entry = by_check.entry(r.check.clone()).or_default();
        entry[0] += 1;
        entry[1] += usize::from(r.passed);
    }
    let failures: Vec<CheckResult> = results.iter().filter(|r| !r.passed).cloned().collect();
    Ok(Summary {
        suite,
        max_d,
        partitions: partition_count,
        run: results.len(),
        passed: results.len() - failures.len(),
        failed: failures.len(),
        by_check,
        failures,
    })
}
