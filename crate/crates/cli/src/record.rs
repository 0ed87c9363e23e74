//! Thom polynomial records and their text/JSON rendering.

use std::fmt::Write as _;

use rootloci::partition::Partition;
use rootloci::thom::{projective_degree, tp_naive, tp_reduce, tp_sum, Method, ThomError};
use rootloci::{Rational, SymForm, ThomPoly};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    All,
    Reduce,
    Naive,
    Sum,
}

impl MethodChoice {
    fn methods(self) -> &'static [Method] {
        match self {
            MethodChoice::All => &[Method::Reduce, Method::Naive, Method::Sum],
            MethodChoice::Reduce => &[Method::Reduce],
            MethodChoice::Naive => &[Method::Naive],
            MethodChoice::Sum => &[Method::Sum],
        }
    }
}

#[derive(Debug, Error)]
pub enum RecordError {
    #[error(transparent)]
    Thom(#[from] ThomError),
    #[error("methods disagree for {lambda}:\n{report}")]
    Disagreement { lambda: String, report: String },
    #[error("degree {got} of {lambda} differs from the Hilbert formula {expected}")]
    DegreeMismatch {
        lambda: String,
        got: String,
        expected: String,
    },
    #[error("degree {0} does not fit in 64 bits")]
    DegreeOverflow(String),
}

/// One Thom polynomial. Coefficients are decimal strings so that no integer
/// width is assumed; field order is fixed for byte-stable output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TpRecord {
    pub d: usize,
    pub lambda: Vec<usize>,
    pub codim: usize,
    /// `(coefficient, c1 exponent, c2 exponent)` in decreasing `c1` exponent.
    pub tp: Vec<(String, usize, usize)>,
    pub degree: u64,
    pub methods: Vec<String>,
}

fn compute(lambda: &Partition, method: Method) -> Result<ThomPoly, ThomError> {
    match method {
        Method::Reduce => tp_reduce(lambda),
        Method::Naive => tp_naive(lambda),
        Method::Sum => tp_sum(lambda),
        _ => unreachable!("only the general algorithms are dispatched"),
    }
}

/// Computes the Thom polynomial with the chosen algorithms, requiring
/// agreement, and checks its degree against the Hilbert formula.
pub fn run_tp(lambda: &Partition, choice: MethodChoice) -> Result<TpRecord, RecordError> {
    let results = choice
        .methods()
        .iter()
        .map(|&m| compute(lambda, m))
        .collect::<Result<Vec<_>, _>>()?;
    let first = &results[0];
    if results.iter().any(|r| r.value != first.value) {
        let mut report = String::new();
        for r in &results {
            let _ = writeln!(report, "  {:<6} {}", r.method.label(), r.value);
        }
        return Err(RecordError::Disagreement {
            lambda: lambda.to_string(),
            report,
        });
    }
    let degree = projective_degree(first)?;
    let expected = lambda.hilbert_degree();
    if degree != expected {
        return Err(RecordError::DegreeMismatch {
            lambda: lambda.to_string(),
            got: degree.to_string(),
            expected: expected.to_string(),
        });
    }
    Ok(TpRecord {
        d: lambda.d(),
        lambda: lambda.parts().to_vec(),
        codim: lambda.codim(),
        tp: first
            .value
            .terms()
            .map(|(c, i, j)| (c.to_string(), i, j))
            .collect(),
        degree: u64::try_from(&degree)
            .map_err(|_| RecordError::DegreeOverflow(degree.to_string()))?,
        methods: results
            .iter()
            .map(|r| r.method.label().to_string())
            .collect(),
    })
}

impl TpRecord {
    /// The polynomial rebuilt from its triples.
    pub fn polynomial(&self) -> Result<SymForm, String> {
        let mut coeffs = vec![Rational::from_integer(0.into()); self.codim / 2 + 1];
        for (c, i, j) in &self.tp {
            if i + 2 * j != self.codim {
                return Err(format!(
                    "term c1^{i} c2^{j} has degree other than {}",
                    self.codim
                ));
            }
            coeffs[*j] = c.parse().map_err(|_| format!("bad coefficient {c:?}"))?;
        }
        Ok(SymForm::with_degree(self.codim, coeffs))
    }

    fn rendered(&self) -> String {
        self.polynomial()
            .map(|p| p.to_string())
            .unwrap_or_else(|e| e)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn to_text(&self) -> String {
        let lambda: Vec<String> = self.lambda.iter().map(ToString::to_string).collect();
        format!(
            "lambda: {}\nd: {}\ncodim: {}\ntp: {}\ndegree: {}\nmethods: {}\n",
            lambda.join(","),
            self.d,
            self.codim,
            self.rendered(),
            self.degree,
            self.methods.join(","),
        )
    }

    /// Tab-separated table row: partition, codimension, polynomial, degree.
    pub fn to_row(&self) -> String {
        let lambda: Vec<String> = self.lambda.iter().map(ToString::to_string).collect();
        format!(
            "{}\t{}\t{}\t{}",
            lambda.join(","),
            self.codim,
            self.rendered(),
            self.degree
        )
    }
}
