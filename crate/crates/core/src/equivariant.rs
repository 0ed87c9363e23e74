//! Equivariant cohomology of products of projective spaces `P V_e`.
//!
//! `H_G(P V_e) = R[y]/(Q_e(y))` with `Q_e(y) = prod_j (y + j u + (e-j) v)`,
//! and a product of such spaces is the tensor product of the factors. A class
//! is *reduced* when every variable `x_i` appears with exponent at most `e_i`;
//! integration along the fibers reads off the coefficient of the top
//! monomial `prod x_i^{e_i}`.

use std::collections::BTreeMap;

use num_traits::One;
use thiserror::Error;

use crate::arith::{factorial, rat, sign, Rational};
use crate::poly::{BiForm, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivariantError {
    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("exponent vector has weight {weight}, expected {d}")]
    WeightMismatch { weight: usize, d: usize },
    #[error("expected a polynomial of degree at most 1 in the formal variable")]
    NotLinear,
    #[error("the class C/g does not exist")]
    NonexistentClass,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Univariate polynomial in a formal variable `y` with [`BiForm`] coefficients,
/// stored densely: `coeffs[j]` multiplies `y^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormPoly {
    coeffs: Vec<BiForm>,
}

impl FormPoly {
    pub fn new(mut coeffs: Vec<BiForm>) -> Self {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BiForm::zero());
        }
        FormPoly { coeffs }
    }

    pub fn constant(c: BiForm) -> Self {
        Self::new(vec![c])
    }

    /// `y + a`.
    pub fn shifted_variable(a: BiForm) -> Self {
        Self::new(vec![a, BiForm::one()])
    }

    /// `c y^k`.
    pub fn monomial(c: BiForm, k: usize) -> Self {
        let mut coeffs = vec![BiForm::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> BiForm {
        self.coeffs.get(j).cloned().unwrap_or_else(BiForm::zero)
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BiForm)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &FormPoly) -> FormPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        FormPoly::new((0..n).map(|j| &self.coeff(j) + &other.coeff(j)).collect())
    }

    pub fn sub(&self, other: &FormPoly) -> FormPoly {
        self.add(&other.scale(&BiForm::constant(-Rational::one())))
    }

    pub fn scale(&self, c: &BiForm) -> FormPoly {
        FormPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &FormPoly) -> FormPoly {
        let mut out = vec![BiForm::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        FormPoly::new(out)
    }

    /// Substitutes a form for the formal variable (Horner).
    pub fn evaluate(&self, point: &BiForm) -> BiForm {
        self.coeffs
            .iter()
            .rev()
            .fold(BiForm::zero(), |acc, c| &(&acc * point) + c)
    }
}

/// The weights `j u + (d - j) v`, `j = 0..=d`, of `S^d C^2`.
pub fn weights(d: usize) -> Vec<BiForm> {
    (0..=d)
        .map(|j| BiForm::linear_int(j as i64, (d - j) as i64))
        .collect()
}

/// `Q_k(y) = prod_{j=0}^{k} (y + j u + (k - j) v)`.
pub fn build_big_q(k: usize) -> FormPoly {
    weights(k)
        .into_iter()
        .fold(FormPoly::constant(BiForm::one()), |acc, w| {
            acc.mul(&FormPoly::shifted_variable(w))
        })
}

/// Chern class `C_j` of `S^d C^2`: the coefficient of `y^(d+1-j)` in `Q_d`.
pub fn chern(d: usize, j: usize) -> Result<BiForm, EquivariantError> {
    if j > d + 1 {
        return Err(EquivariantError::IndexOutOfRange {
            index: j,
            max: d + 1,
        });
    }
    Ok(build_big_q(d).coeff(d + 1 - j))
}

/// All Chern classes `C_0..=C_{d+1}` of `S^d C^2`.
pub fn chern_classes(d: usize) -> Vec<BiForm> {
    let q = build_big_q(d);
    (0..=d + 1).map(|j| q.coeff(d + 1 - j)).collect()
}

/// `q(y) = (Q_d(y) - C_{d+1}) / y = y^d + C_1 y^{d-1} + ... + C_d`.
pub fn build_q(d: usize) -> FormPoly {
    let big = build_big_q(d);
    FormPoly::new((1..=d + 1).map(|j| big.coeff(j)).collect())
}

/// Polynomial in indexed variables `x_1..x_r` with [`BiForm`] coefficients.
/// Keys are exponent tuples of length `r`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<usize>, BiForm>,
}

fn accumulate(terms: &mut BTreeMap<Vec<usize>, BiForm>, key: Vec<usize>, c: BiForm) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BiForm) -> Self {
        let mut p = Self::zero(nvars);
        accumulate(&mut p.terms, vec![0; nvars], c);
        p
    }

    /// `c * x_i^k` with `i` 1-based.
    pub fn monomial(nvars: usize, i: usize, k: usize, c: BiForm) -> Self {
        let mut key = vec![0; nvars];
        key[i - 1] = k;
        let mut p = Self::zero(nvars);
        accumulate(&mut p.terms, key, c);
        p
    }

    /// `sum_i i * x_i` over the indices with `e_i > 0`, the pullback of the
    /// hyperplane class. A variable with `e_i = 0` satisfies `x_i = Q_0(x_i) = 0`
    /// and is left out.
    pub fn weighted_sum(evec: &[usize]) -> Self {
        let nvars = evec.len();
        let mut p = Self::zero(nvars);
        for i in (1..=nvars).filter(|&i| evec[i - 1] > 0) {
            let mut key = vec![0; nvars];
            key[i - 1] = 1;
            accumulate(&mut p.terms, key, BiForm::constant(rat(i as i64)));
        }
        p
    }

    /// Substitutes `y <- x` into a [`FormPoly`].
    pub fn substitute(f: &FormPoly, x: &MultiPoly) -> MultiPoly {
        let nvars = x.nvars;
        let mut acc = MultiPoly::zero(nvars);
        for j in (0..=f.degree()).rev() {
            acc = acc.mul(x).add(&MultiPoly::constant(nvars, f.coeff(j)));
        }
        acc
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, BiForm> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, k.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (ka, a) in &self.terms {
            for (kb, b) in &other.terms {
                let key: Vec<usize> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                accumulate(&mut out.terms, key, a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: &BiForm) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (k, a) in &self.terms {
            accumulate(&mut out.terms, k.clone(), a * c);
        }
        out
    }
}

/// `phi^*(q)`: substitutes `x <- sum_i i x_i` into `q` for `S^d`, unreduced.
pub fn pullback_q(d: usize, evec: &[usize]) -> Result<MultiPoly, EquivariantError> {
    check_weight(d, evec)?;
    Ok(MultiPoly::substitute(
        &build_q(d),
        &MultiPoly::weighted_sum(evec),
    ))
}

fn check_weight(d: usize, evec: &[usize]) -> Result<(), EquivariantError> {
    let weight: usize = evec.iter().enumerate().map(|(i, e)| (i + 1) * e).sum();
    if weight != d {
        return Err(EquivariantError::WeightMismatch { weight, d });
    }
    Ok(())
}

/// Reduced representative of a class in `R[x_1..x_r]/(Q_{e_1}(x_1), ..)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedElement {
    evec: Vec<usize>,
    terms: BTreeMap<Vec<usize>, BiForm>,
}

impl ReducedElement {
    pub fn one(evec: &[usize]) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, vec![0; evec.len()], BiForm::one());
        ReducedElement {
            evec: evec.to_vec(),
            terms,
        }
    }

    pub fn evec(&self) -> &[usize] {
        &self.evec
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, BiForm> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The underlying polynomial, forgetting that it is reduced.
    pub fn to_multipoly(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.evec.len(),
            terms: self.terms.clone(),
        }
    }

    pub fn mul(&self, other: &ReducedElement) -> ReducedElement {
        reduce(&self.to_multipoly().mul(&other.to_multipoly()), &self.evec)
    }
}

/// Remainders of `y^k` modulo `Q_e(y)` for increasing `k`, as coefficient
/// vectors of length `e + 1`.
struct PowerRemainders {
    relation: Vec<BiForm>,
    table: Vec<Vec<BiForm>>,
}

impl PowerRemainders {
    fn new(e: usize) -> Self {
        let big = build_big_q(e);
        let relation = (0..=e).map(|j| big.coeff(j)).collect();
        let table = (0..=e)
            .map(|k| {
                let mut r = vec![BiForm::zero(); e + 1];
                r[k] = BiForm::one();
                r
            })
            .collect();
        PowerRemainders { relation, table }
    }

    fn get(&mut self, k: usize) -> &[BiForm] {
        while self.table.len() <= k {
            let prev = self.table.last().unwrap();
            let e = prev.len() - 1;
            // y * (a_e y^e + ...) with y^{e+1} = -sum_j relation[j] y^j
            let top = &prev[e];
            let mut next = Vec::with_capacity(e + 1);
            for j in 0..=e {
                let shifted = if j == 0 {
                    BiForm::zero()
                } else {
                    prev[j - 1].clone()
                };
                next.push(&shifted - &(top * &self.relation[j]));
            }
            self.table.push(next);
        }
        &self.table[k]
    }
}

/// Reduces modulo the relations `Q_{e_i}(x_i)`, eliminating variables from
/// the highest index down.
pub fn reduce(p: &MultiPoly, evec: &[usize]) -> ReducedElement {
    let order: Vec<usize> = (1..=evec.len()).rev().collect();
    reduce_in_order(p, evec, &order)
}

/// Reduction eliminating variables in the given (1-based) order. Every order
/// yields the same reduced representative.
pub fn reduce_in_order(p: &MultiPoly, evec: &[usize], order: &[usize]) -> ReducedElement {
    assert_eq!(
        p.nvars(),
        evec.len(),
        "variable count must match the exponent vector"
    );
    let mut terms = p.terms.clone();
    for &i in order {
        let idx = i - 1;
        let e = evec[idx];
        if terms.keys().all(|k| k[idx] <= e) {
            continue;
        }
        let mut rems = PowerRemainders::new(e);
        let mut next = BTreeMap::new();
        for (key, c) in terms {
            if key[idx] <= e {
                accumulate(&mut next, key, c);
                continue;
            }
            for (j, r) in rems.get(key[idx]).iter().enumerate() {
                if r.is_zero() {
                    continue;
                }
                let mut k2 = key.clone();
                k2[idx] = j;
                accumulate(&mut next, k2, &c * r);
            }
        }
        terms = next;
    }
    ReducedElement {
        evec: evec.to_vec(),
        terms,
    }
}

/// `phi^*(q)` reduced, with the reduction interleaved into the Horner
/// evaluation so that intermediate results stay reduced.
pub fn pullback_q_reduced(d: usize, evec: &[usize]) -> Result<ReducedElement, EquivariantError> {
    check_weight(d, evec)?;
    let nvars = evec.len();
    let chern = chern_classes(d);
    let mut rems: Vec<PowerRemainders> = evec.iter().map(|&e| PowerRemainders::new(e)).collect();
    let mut acc = ReducedElement::one(evec);
    for c in chern.iter().take(d + 1).skip(1) {
        let mut next = BTreeMap::new();
        for (key, coeff) in &acc.terms {
            for i in (0..nvars).filter(|&i| evec[i] > 0) {
                let weight = BiForm::constant(rat(i as i64 + 1));
                let scaled = coeff * &weight;
                let raised = key[i] + 1;
                if raised <= evec[i] {
                    let mut k2 = key.clone();
                    k2[i] = raised;
                    accumulate(&mut next, k2, scaled);
                } else {
                    for (j, r) in rems[i].get(raised).iter().enumerate() {
                        if r.is_zero() {
                            continue;
                        }
                        let mut k2 = key.clone();
                        k2[i] = j;
                        accumulate(&mut next, k2, &scaled * r);
                    }
                }
            }
        }
        accumulate(&mut next, vec![0; nvars], c.clone());
        acc.terms = next;
    }
    Ok(acc)
}

/// Integration along the fibers: the coefficient of `prod x_i^{e_i}`.
pub fn integrate(elem: &ReducedElement) -> BiForm {
    elem.terms
        .get(&elem.evec)
        .cloned()
        .unwrap_or_else(BiForm::zero)
}

/// The roots `-(e - s) u - s v`, `s = 0..=e`, of `Q_e`.
pub fn integration_points(e: usize) -> Vec<BiForm> {
    (0..=e)
        .map(|s| BiForm::linear_int(-((e - s) as i64), -(s as i64)))
        .collect()
}

/// `(-1)^s / (s! (e - s)!)`.
pub(crate) fn localization_weight(e: usize, s: usize) -> Rational {
    sign(s) / Rational::from_integer(factorial(s) * factorial(e - s))
}

/// `(v - u)^e`.
pub(crate) fn vandermonde_factor(e: usize) -> BiForm {
    BiForm::linear_int(-1, 1).pow(e)
}

/// Top coefficient of `[f]` modulo `Q_e` by evaluation at the roots of `Q_e`.
pub fn integrate_closed(f: &FormPoly, e: usize) -> Result<BiForm, EquivariantError> {
    let mut acc = BiForm::zero();
    for (s, p) in integration_points(e).iter().enumerate() {
        acc = acc.try_add(&f.evaluate(p).scale(&localization_weight(e, s)))?;
    }
    Ok(acc.exact_div(&vandermonde_factor(e))?)
}

/// `int_{P V_e} [C/g]` for a `g` of degree at most 1 in the formal variable.
///
/// All terms are brought over the common denominator `prod_s g(p_s)`; the
/// class exists exactly when the final division is exact.
pub fn integrate_rational(c: &BiForm, g: &FormPoly, e: usize) -> Result<BiForm, EquivariantError> {
    if g.degree() > 1 {
        return Err(EquivariantError::NotLinear);
    }
    let values: Vec<BiForm> = integration_points(e)
        .iter()
        .map(|p| g.evaluate(p))
        .collect();
    if values.iter().any(BiForm::is_zero) {
        return Err(EquivariantError::NonexistentClass);
    }
    let mut numerator = BiForm::zero();
    for s in 0..=e {
        let others: BiForm = values
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != s)
            .map(|(_, v)| v.clone())
            .product();
        numerator = numerator.try_add(&(c * &others).scale(&localization_weight(e, s)))?;
    }
    let denominator: BiForm = values.into_iter().product::<BiForm>() * vandermonde_factor(e);
    numerator
        .exact_div(&denominator)
        .map_err(|_| EquivariantError::NonexistentClass)
}

/// The identity `Q_e(y) - Q_e(a) = (y - a) * (...)` specialized: `i Q_e(a/i)`
/// for a linear form `a`, computed without fractions as
/// `i^{-e} prod_l (a + i l u + i (e - l) v)`.
pub fn scaled_relation_value(e: usize, i: usize, a: &BiForm) -> BiForm {
    let ii = rat(i as i64);
    let factors: BiForm = (0..=e)
        .map(|l| a + &BiForm::linear(&ii * rat(l as i64), &ii * rat((e - l) as i64)))
        .product();
    factors.scale(&num_traits::pow(ii.recip(), e))
}
