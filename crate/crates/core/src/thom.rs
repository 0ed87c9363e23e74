//! Thom polynomials of coincident root loci `X_lambda` in `S^d C^2`.
//!
//! Three general algorithms are provided and must agree exactly:
//!
//! - [`tp_reduce`]: reduce `phi^*(q)` in `R[x_1..x_r]/(Q_{e_i}(x_i))` and
//!   take the top coefficient;
//! - [`tp_naive`]: the triple sum obtained by expanding `phi^*(q)` into
//!   monomials and integrating each factor by localization;
//! - [`tp_sum`]: the single sum over `(s_1..s_r)` with denominators
//!   `d u - (sum i s_i)(u - v)`, each a weight of `S^d`.
//!
//! The closed forms ([`tp_power_block`], [`tp_two_block`], [`tp_kirwan`],
//! [`tp_e3`]) cover special families of partitions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{factorial, rat, Rational};
use crate::equivariant::{
    chern_classes, integrate, localization_weight, pullback_q_reduced, scaled_relation_value,
    vandermonde_factor, weights, EquivariantError,
};
use crate::partition::{Partition, PartitionError};
use crate::poly::{BiForm, PolyError, SymForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThomError {
    #[error(transparent)]
    Equivariant(#[from] EquivariantError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("degree substitution gave a non-integer or non-positive value {0}")]
    BadDegree(Rational),
}

/// How a Thom polynomial was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Reduce,
    Naive,
    Sum,
    PowerBlock,
    TwoBlock,
    Kirwan,
    E3,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Reduce => "reduce",
            Method::Naive => "naive",
            Method::Sum => "sum",
            Method::PowerBlock => "power-block",
            Method::TwoBlock => "two-block",
            Method::Kirwan => "kirwan",
            Method::E3 => "e3",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThomPoly {
    pub partition: Partition,
    pub value: SymForm,
    pub method: Method,
}

impl ThomPoly {
    fn from_form(partition: Partition, form: &BiForm, method: Method) -> Result<Self, ThomError> {
        Ok(ThomPoly {
            partition,
            value: form.to_sym()?,
            method,
        })
    }

    pub fn codim(&self) -> usize {
        self.partition.codim()
    }

    pub fn as_biform(&self) -> BiForm {
        self.value.to_biform()
    }
}

/// Top coefficient of the reduced pullback of `q`.
///
/// Equals `integrate(reduce(pullback_q(d, evec)))`; the reduction is applied
/// after every Horner step so the working element stays reduced.
pub fn tp_reduce(lambda: &Partition) -> Result<ThomPoly, ThomError> {
    let reduced = pullback_q_reduced(lambda.d(), lambda.evec())?;
    ThomPoly::from_form(lambda.clone(), &integrate(&reduced), Method::Reduce)
}

/// All compositions of `total` into `slots` nonnegative parts.
fn compositions(total: usize, slots: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(total - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if slots > 0 {
        go(total, slots, &mut Vec::new(), &mut out);
    }
    out
}

fn multinomial(parts: &[usize]) -> Rational {
    let total: usize = parts.iter().sum();
    let den = parts
        .iter()
        .fold(BigInt::one(), |acc, &p| acc * factorial(p));
    Rational::from_integer(factorial(total) / den)
}

/// The naive formula: expand `phi^*(q)` into monomials `prod x_i^{j_i}` and
/// integrate every factor by localization at the roots of `Q_{e_i}`.
///
/// Blocks with `e_i = 0` contribute only through `j_i = 0`, so the
/// compositions range over the nonempty blocks.
pub fn tp_naive(lambda: &Partition) -> Result<ThomPoly, ThomError> {
    let d = lambda.d();
    let n = lambda.len();
    let chern = chern_classes(d);
    let blocks: Vec<(usize, usize)> = lambda.blocks().collect();

    // factor[b][j] = sum_s (-1)^s (-i)^j ((e-s)u + s v)^j / (s!(e-s)!)
    let factor: Vec<Vec<BiForm>> = blocks
        .iter()
        .map(|&(i, e)| {
            (0..=d)
                .map(|j| {
                    let minus_i_pow = num_traits::pow(rat(-(i as i64)), j);
                    (0..=e).fold(BiForm::zero(), |acc, s| {
                        let base = BiForm::linear_int((e - s) as i64, s as i64).pow(j);
                        &acc + &base.scale(&(localization_weight(e, s) * &minus_i_pow))
                    })
                })
                .collect()
        })
        .collect();

    let mut total = BiForm::zero();
    for j in n..=d {
        let c = &chern[d - j];
        let mut inner = BiForm::zero();
        for comp in compositions(j, blocks.len()) {
            let mut term = BiForm::constant(multinomial(&comp));
            for (b, &jb) in comp.iter().enumerate() {
                term = &term * &factor[b][jb];
                if term.is_zero() {
                    break;
                }
            }
            inner = &inner + &term;
        }
        total = total.try_add(&(c * &inner))?;
    }
    let value = total.exact_div(&vandermonde_factor(n))?;
    ThomPoly::from_form(lambda.clone(), &value, Method::Naive)
}

/// Accumulated localization weights `sum (-1)^{sum s_i} / prod s_i!(e_i - s_i)!`
/// grouped by `k = sum i s_i`.
fn weights_by_shift(lambda: &Partition) -> BTreeMap<usize, Rational> {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    acc.insert(0, Rational::one());
    for (i, e) in lambda.blocks() {
        let mut next: BTreeMap<usize, Rational> = BTreeMap::new();
        for (k, w) in &acc {
            for s in 0..=e {
                let entry = next.entry(k + i * s).or_insert_with(Rational::zero);
                *entry += w * localization_weight(e, s);
            }
        }
        acc = next;
    }
    acc
}

/// Product of all weights of `S^d` except the one at index `skip`.
fn weights_except(d: usize, skip: usize) -> BiForm {
    weights(d)
        .into_iter()
        .enumerate()
        .filter(|&(j, _)| j != skip)
        .map(|(_, w)| w)
        .product()
}

/// The sum formula. The denominator `d u - k (u - v)` is the weight
/// `(d - k) u + k v`, so `C_{d+1}` divided by it is a product of the other
/// `d` weights.
pub fn tp_sum(lambda: &Partition) -> Result<ThomPoly, ThomError> {
    let d = lambda.d();
    let mut total = BiForm::zero();
    for (k, w) in weights_by_shift(lambda) {
        if w.is_zero() {
            continue;
        }
        total = total.try_add(&weights_except(d, d - k).scale(&w))?;
    }
    let value = total.exact_div(&vandermonde_factor(lambda.len()))?;
    ThomPoly::from_form(lambda.clone(), &value, Method::Sum)
}

/// `lambda = (i^e)`: `i^e prod_{0 <= j <= d, i does not divide j} (j u + (d-j) v)`.
pub fn tp_power_block(i: usize, e: usize) -> Result<ThomPoly, ThomError> {
    if i == 0 || e == 0 {
        return Err(ThomError::InvalidArguments(format!("power block {i}^{e}")));
    }
    let d = i * e;
    let product: BiForm = weights(d)
        .into_iter()
        .enumerate()
        .filter(|&(j, _)| j % i != 0)
        .map(|(_, w)| w)
        .product();
    let value = product.scale(&num_traits::pow(rat(i as i64), e));
    let mut evec = vec![0; i];
    evec[i - 1] = e;
    ThomPoly::from_form(
        Partition::from_exponents(&evec)?,
        &value,
        Method::PowerBlock,
    )
}

/// `lambda = (i^{e_i} j^{e_j})` with the `x_i` integral done in closed form:
/// `C_{d+1}/(v-u)^{e_j} sum_s (-1)^s/(s!(e_j-s)!) / (i Q_{e_i}(a_s / i))`,
/// `a_s = j e_j u - j s (u - v)`.
pub fn tp_two_block(i: usize, e_i: usize, j: usize, e_j: usize) -> Result<ThomPoly, ThomError> {
    if i == j || i == 0 || j == 0 || e_i == 0 || e_j == 0 {
        return Err(ThomError::InvalidArguments(format!(
            "two blocks need distinct positive parts and counts, got {i}^{e_i} {j}^{e_j}"
        )));
    }
    let d = i * e_i + j * e_j;
    let top: BiForm = weights(d).into_iter().product();
    let mut total = BiForm::zero();
    for s in 0..=e_j {
        let a = BiForm::linear_int((j * (e_j - s)) as i64, (j * s) as i64);
        let denominator = scaled_relation_value(e_i, i, &a);
        let term = top.exact_div(&denominator)?;
        total = total.try_add(&term.scale(&localization_weight(e_j, s)))?;
    }
    let value = total.exact_div(&vandermonde_factor(e_j))?;
    let mut evec = vec![0; i.max(j)];
    evec[i - 1] = e_i;
    evec[j - 1] = e_j;
    ThomPoly::from_form(Partition::from_exponents(&evec)?, &value, Method::TwoBlock)
}

/// `Pi_j = prod_{l=0}^{j-1} (l v + (d - l) u)`, the product of the `j` weights
/// of `S^d` with the largest `u`-coefficient. `Pi_0 = 1`.
pub fn top_weights_product(d: usize, j: usize) -> BiForm {
    (0..j)
        .map(|l| BiForm::linear_int(d as i64 - l as i64, l as i64))
        .product()
}

/// `lambda = (1^{e_1} j)`: the divided difference of
/// `prod_{l=0}^{j-1} (l v + (e_1 + j - l) u)`.
pub fn tp_kirwan(e1: usize, j: usize) -> Result<ThomPoly, ThomError> {
    if e1 == 0 || j < 2 {
        return Err(ThomError::InvalidArguments(format!(
            "Kirwan form needs e1 >= 1 and j >= 2, got e1={e1}, j={j}"
        )));
    }
    let value = top_weights_product(e1 + j, j).divided_difference();
    ThomPoly::from_form(Partition::ones_plus(e1, &[j])?, &value, Method::Kirwan)
}

fn check_e3_args(h: usize, j: usize) -> Result<(), ThomError> {
    if h <= 2 || j <= 1 || j >= h {
        return Err(ThomError::InvalidArguments(format!(
            "need h > 2 and 1 < j < h, got h={h}, j={j}"
        )));
    }
    Ok(())
}

/// `D_j = ([prod_{l=h-j+1}^{h} w_l] - [prod_{l=0}^{j-1} w_l]) / (u - v)` with
/// `w_l = l u + (d - l) v` the weights of `S^d`, `d = 2h`.
pub fn e3_correction(h: usize, j: usize) -> Result<BiForm, ThomError> {
    check_e3_args(h, j)?;
    let w = weights(2 * h);
    let upper: BiForm = w[h - j + 1..=h].iter().cloned().product();
    let lower: BiForm = w[..j].iter().cloned().product();
    Ok((&upper - &lower).exact_div(&BiForm::linear_int(1, -1))?)
}

/// `d = 2h`, `lambda = (1^{h-j}, j, h)`: `tp = div.diff(D_j * Pi_h)`.
pub fn tp_e3(h: usize, j: usize) -> Result<ThomPoly, ThomError> {
    let correction = e3_correction(h, j)?;
    let value = (&correction * &top_weights_product(2 * h, h)).divided_difference();
    ThomPoly::from_form(Partition::ones_plus(h - j, &[j, h])?, &value, Method::E3)
}

/// The `j = 2` instance: `h (h - 1) div.diff((u + 3v) Pi_h)`.
pub fn tp_e3_j2(h: usize) -> Result<ThomPoly, ThomError> {
    check_e3_args(h, 2)?;
    let value = (&BiForm::linear_int(1, 3) * &top_weights_product(2 * h, h))
        .divided_difference()
        .scale(&rat((h * (h - 1)) as i64));
    ThomPoly::from_form(Partition::ones_plus(h - 2, &[2, h])?, &value, Method::E3)
}

/// Degree of `P X_lambda` from the Thom polynomial by substituting `u = v = 1/d`.
pub fn projective_degree(tp: &ThomPoly) -> Result<BigInt, ThomError> {
    let x = Rational::new(BigInt::one(), BigInt::from(tp.partition.d()));
    let value = tp.as_biform().evaluate(&x, &x);
    if !value.is_integer() || value <= Rational::zero() {
        return Err(ThomError::BadDegree(value));
    }
    Ok(value.to_integer())
}

pub fn hilbert_degree(lambda: &Partition) -> BigInt {
    lambda.hilbert_degree()
}

/// Outcome of checking the two relations among `Tp_{lambda_0}`,
/// `Tp_{lambda_0'}`, `Tp_{lambda_1}`, `Tp_{lambda_2}` for `d = 2h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub h: usize,
    /// `Tp_{lambda_1} - h c1 Tp_{lambda_0}`.
    pub first_residual: SymForm,
    /// `(h-1) Tp_{lambda_2} - (h-1)(h-2) c1 Tp_{lambda_1} - c1 Tp_{lambda_0'}`.
    pub second_residual: SymForm,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.first_residual.is_zero() && self.second_residual.is_zero()
    }

    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.first_residual.is_zero() {
            out.push("tp(lambda_1) = h c1 tp(lambda_0)");
        }
        if !self.second_residual.is_zero() {
            out.push("(h-1) tp(lambda_2) = (h-1)(h-2) c1 tp(lambda_1) + c1 tp(lambda_0')");
        }
        out
    }
}

pub fn check_relations_even(h: usize) -> Result<RelationReport, ThomError> {
    if h <= 2 {
        return Err(ThomError::InvalidArguments(format!("need h > 2, got {h}")));
    }
    let tp = |ones: usize, rest: &[usize]| -> Result<SymForm, ThomError> {
        Ok(tp_reduce(&Partition::ones_plus(ones, rest)?)?.value)
    };
    let tp0 = tp(h, &[h])?;
    let tp0p = tp(h - 2, &[2, h])?;
    let tp1 = tp(h - 1, &[h + 1])?;
    let tp2 = tp(h - 2, &[h + 2])?;
    let c1s = SymForm::from_ints(1, &[1]);
    let hr = rat(h as i64);
    let first_residual = tp1.try_sub(&c1s.mul(&tp0).scale(&hr))?;
    let lhs = tp2.scale(&rat(h as i64 - 1));
    let rhs = c1s
        .mul(&tp1)
        .scale(&rat(((h - 1) * (h - 2)) as i64))
        .try_add(&c1s.mul(&tp0p))?;
    Ok(RelationReport {
        h,
        first_residual,
        second_residual: lhs.try_sub(&rhs)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn sym(deg: usize, c: &[i64]) -> SymForm {
        SymForm::from_ints(deg, c)
    }

    #[test]
    fn reduce_examples() {
        for d in 1..=6 {
            assert_eq!(
                tp_reduce(&p(&format!("1^{d}"))).unwrap().value,
                SymForm::one()
            );
        }
        assert_eq!(tp_reduce(&p("2")).unwrap().value, sym(1, &[2]));
        assert_eq!(tp_reduce(&p("2,1")).unwrap().value, sym(1, &[6]));
    }

    #[test]
    fn naive_examples() {
        assert_eq!(tp_naive(&p("1^4")).unwrap().value, SymForm::one());
        assert_eq!(tp_naive(&p("2,2")).unwrap().value, sym(2, &[12, 16]));
        assert_eq!(tp_naive(&p("3")).unwrap().value, sym(2, &[6, 3]));
    }

    #[test]
    fn sum_examples() {
        assert_eq!(tp_sum(&p("2,1")).unwrap().value, sym(1, &[6]));
        assert_eq!(tp_sum(&p("1^5")).unwrap().value, SymForm::one());
        assert_eq!(tp_sum(&p("1^3 3")).unwrap().value, sym(2, &[120, -48]));
    }

    #[test]
    fn sum_terms_for_two_one() {
        // C4/(3u) - C4/(2u+v) - C4/(u+2v) + C4/(3v) = 6 (u-v)^2 (u+v)
        let w = weights_by_shift(&p("2,1"));
        assert_eq!(w.len(), 4);
        assert_eq!(w[&0], rat(1));
        assert_eq!(w[&1], rat(-1));
        assert_eq!(w[&2], rat(-1));
        assert_eq!(w[&3], rat(1));
        let total = w.iter().fold(BiForm::zero(), |acc, (&k, c)| {
            &acc + &weights_except(3, 3 - k).scale(c)
        });
        let expected = &BiForm::linear_int(1, -1).pow(2) * &BiForm::from_ints(&[6, 6]);
        assert_eq!(total, expected);
    }

    #[test]
    fn power_block_examples() {
        assert_eq!(tp_power_block(2, 1).unwrap().value, sym(1, &[2]));
        assert_eq!(tp_power_block(3, 1).unwrap().value, sym(2, &[6, 3]));
        assert_eq!(tp_power_block(1, 5).unwrap().value, SymForm::one());
        assert_eq!(tp_power_block(2, 2).unwrap().value, sym(2, &[12, 16]));
    }

    #[test]
    fn two_block_examples() {
        assert_eq!(tp_two_block(1, 1, 2, 1).unwrap().value, sym(1, &[6]));
        assert_eq!(tp_two_block(1, 3, 3, 1).unwrap().value, sym(2, &[120, -48]));
        assert!(tp_two_block(2, 1, 2, 1).is_err());
    }

    #[test]
    fn kirwan_examples() {
        assert_eq!(tp_kirwan(1, 2).unwrap().value, sym(1, &[6]));
        let t = tp_kirwan(3, 3).unwrap();
        assert_eq!(t.as_biform(), BiForm::from_ints(&[120, 192, 120]));
        assert_eq!(t.value, sym(2, &[120, -48]));
        assert_eq!(projective_degree(&t).unwrap(), BigInt::from(12));
        assert!(tp_kirwan(0, 3).is_err());
        assert!(tp_kirwan(2, 1).is_err());
    }

    #[test]
    fn e3_examples() {
        for h in 3..=6 {
            assert_eq!(
                tp_e3(h, 2).unwrap().value,
                tp_e3_j2(h).unwrap().value,
                "h = {h}"
            );
        }
        assert_eq!(
            tp_e3(3, 2).unwrap().value,
            tp_reduce(&p("1,2,3")).unwrap().value
        );
        assert!(tp_e3(2, 2).is_err());
        assert!(tp_e3(4, 4).is_err());
    }

    #[test]
    fn e3_bracket_vanishes_on_diagonal() {
        for h in 3..=6 {
            for j in 2..h {
                let w = weights(2 * h);
                let upper: BiForm = w[h - j + 1..=h].iter().cloned().product();
                let lower: BiForm = w[..j].iter().cloned().product();
                let one = rat(1);
                assert!((&upper - &lower).evaluate(&one, &one).is_zero());
            }
        }
    }

    #[test]
    fn degree_examples() {
        let deg = |s: &str| projective_degree(&tp_reduce(&p(s)).unwrap()).unwrap();
        assert_eq!(deg("2"), BigInt::from(2));
        assert_eq!(deg("2,1"), BigInt::from(4));
        assert_eq!(deg("1^4"), BigInt::from(1));
        assert_eq!(hilbert_degree(&p("2")), BigInt::from(2));
        assert_eq!(hilbert_degree(&p("1^2 2")), BigInt::from(6));
        assert_eq!(hilbert_degree(&p("2,2")), BigInt::from(4));
    }

    #[test]
    fn relation_examples() {
        for h in [3, 4] {
            let report = check_relations_even(h).unwrap();
            assert!(report.holds(), "h = {h}: {:?}", report.violations());
        }
        assert!(check_relations_even(2).is_err());
    }

    #[test]
    fn method_labels() {
        assert_eq!(Method::Reduce.to_string(), "reduce");
        assert_eq!(Method::PowerBlock.label(), "power-block");
    }
}
