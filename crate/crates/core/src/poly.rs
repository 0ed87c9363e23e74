//! Homogeneous forms in the Chern roots `u`, `v`.
//!
//! A [`BiForm`] of degree `m` stores the coefficient of `u^k v^(m-k)` at
//! index `k`. Symmetric forms can be rewritten in the basis `c1 = u + v`,
//! `c2 = u v` as a [`SymForm`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("inexact division")]
    InexactDivision,
    #[error("division by the zero form")]
    DivisionByZero,
    #[error("form is not symmetric")]
    NotSymmetric,
}

/// Homogeneous polynomial in `u`, `v` with rational coefficients.
///
/// Every vanishing form is normalized to the canonical zero, which has
/// degree 0 and is additively compatible with forms of any degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiForm {
    coeffs: Vec<Rational>,
}

impl BiForm {
    /// Builds a form from its coefficients, `coeffs[k]` multiplying `u^k v^(m-k)`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        if coeffs.iter().all(Zero::is_zero) {
            return Self::zero();
        }
        BiForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        BiForm {
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn u() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn v() -> Self {
        Self::from_ints(&[1, 0])
    }

    /// The linear form `a u + b v`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn linear_int(a: i64, b: i64) -> Self {
        Self::linear(rat(a), rat(b))
    }

    /// `c u^i v^j`.
    pub fn monomial(c: Rational, u_exp: usize, v_exp: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); u_exp + v_exp + 1];
        coeffs[u_exp] = c;
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `u^k v^(m-k)`; zero outside the range.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn try_add(&self, other: &BiForm) -> Result<BiForm, PolyError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree() != other.degree() {
            return Err(PolyError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(BiForm::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn try_sub(&self, other: &BiForm) -> Result<BiForm, PolyError> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &Rational) -> BiForm {
        if c.is_zero() {
            return BiForm::zero();
        }
        BiForm::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: usize) -> BiForm {
        let mut result = BiForm::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `A*(u, v) = A(v, u)`.
    pub fn swap(&self) -> BiForm {
        BiForm {
            coeffs: self.coeffs.iter().rev().cloned().collect(),
        }
    }

    /// `(A(u,v) - A(v,u)) / (u - v)`.
    ///
    /// Writing `A - A* = (u - v) Q`, the coefficients of `Q` are the running
    /// sums of the difference read from the `u^m` end.
    pub fn divided_difference(&self) -> BiForm {
        let m = self.degree();
        if m == 0 || self.is_zero() {
            return BiForm::zero();
        }
        // diff[k] = a[k] - a[m-k]; Q[k-1] = sum_{i >= k} diff[i]
        let mut q = vec![Rational::zero(); m];
        let mut acc = Rational::zero();
        for k in (1..=m).rev() {
            acc += &self.coeffs[k] - &self.coeffs[m - k];
            q[k - 1] = acc.clone();
        }
        debug_assert!((acc + &self.coeffs[0] - &self.coeffs[m]).is_zero());
        BiForm::new(q)
    }

    /// Exact quotient `self / divisor`.
    pub fn exact_div(&self, divisor: &BiForm) -> Result<BiForm, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(BiForm::zero());
        }
        let (m, n) = (self.degree(), divisor.degree());
        if m < n {
            return Err(PolyError::InexactDivision);
        }
        // lowest u-power of the divisor
        let t = divisor.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let lead_inv = divisor.coeffs[t].recip();
        let len = m - n + 1;
        let mut q: Vec<Rational> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.coeff(k + t);
            for i in 1..=k.min(n - t) {
                let b = &divisor.coeffs[t + i];
                if !b.is_zero() {
                    acc -= b * &q[k - i];
                }
            }
            q.push(acc * &lead_inv);
        }
        let q = BiForm::new(q);
        if &q * divisor != *self {
            return Err(PolyError::InexactDivision);
        }
        Ok(q)
    }

    /// Exact value at `(u0, v0)`.
    pub fn evaluate(&self, u0: &Rational, v0: &Rational) -> Rational {
        let m = self.degree();
        let mut u_pows = Vec::with_capacity(m + 1);
        let mut v_pows = Vec::with_capacity(m + 1);
        let (mut up, mut vp) = (Rational::one(), Rational::one());
        for _ in 0..=m {
            u_pows.push(up.clone());
            v_pows.push(vp.clone());
            up *= u0;
            vp *= v0;
        }
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| c * &u_pows[k] * &v_pows[m - k])
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Rewrites a symmetric form in the `c1`, `c2` basis.
    pub fn to_sym(&self) -> Result<SymForm, PolyError> {
        if !self.is_symmetric() {
            return Err(PolyError::NotSymmetric);
        }
        let m = self.degree();
        let mut out = Vec::with_capacity(m / 2 + 1);
        let mut rest = self.clone();
        let mut deg = m;
        loop {
            // coefficient of c1^deg is read off at v = 0
            let lead = rest.coeff(deg);
            out.push(lead.clone());
            if deg < 2 {
                break;
            }
            let peeled = rest.try_sub(&c1().pow(deg).scale(&lead))?;
            // what remains is divisible by c2 = uv
            rest = if peeled.is_zero() {
                BiForm::zero()
            } else {
                debug_assert!(peeled.coeffs[0].is_zero() && peeled.coeffs[deg].is_zero());
                BiForm::new(peeled.coeffs[1..deg].to_vec())
            };
            deg -= 2;
        }
        Ok(SymForm::with_degree(m, out))
    }

    /// Monic homogeneous gcd, normalized so that the coefficient of the
    /// highest `u`-power is 1.
    pub fn gcd_homogeneous(&self, other: &BiForm) -> BiForm {
        assert!(
            !self.is_zero() && !other.is_zero(),
            "gcd of the zero form is not defined"
        );
        let split = |f: &BiForm| {
            let lo = f.coeffs.iter().position(|c| !c.is_zero()).unwrap();
            let hi = f.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
            // f = u^lo v^(m-hi) * g(u, v); g dehomogenized at v = 1
            (lo, f.degree() - hi, f.coeffs[lo..=hi].to_vec())
        };
        let (ua, va, pa) = split(self);
        let (ub, vb, pb) = split(other);
        let g = upoly_gcd(pa, pb);
        let (u_exp, v_exp) = (ua.min(ub), va.min(vb));
        let mut coeffs = vec![Rational::zero(); u_exp];
        coeffs.extend(g);
        coeffs.extend(std::iter::repeat_n(Rational::zero(), v_exp));
        BiForm::new(coeffs)
    }
}

/// Euclid over Q on ascending coefficient vectors; the result is monic.
fn upoly_gcd(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
    fn trim(p: &mut Vec<Rational>) {
        while p.len() > 1 && p.last().unwrap().is_zero() {
            p.pop();
        }
    }
    fn is_zero(p: &[Rational]) -> bool {
        p.iter().all(Zero::is_zero)
    }
    fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut r = a.to_vec();
        let lead_inv = b.last().unwrap().recip();
        while r.len() >= b.len() && !is_zero(&r) {
            let shift = r.len() - b.len();
            let factor = r.last().unwrap() * &lead_inv;
            for (i, bc) in b.iter().enumerate() {
                r[shift + i] -= &factor * bc;
            }
            r.pop();
            trim(&mut r);
        }
        r
    }
    trim(&mut a);
    trim(&mut b);
    while !is_zero(&b) {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    let lead_inv = a.last().unwrap().recip();
    a.iter().map(|c| c * &lead_inv).collect()
}

pub fn c1() -> BiForm {
    BiForm::from_ints(&[1, 1])
}

pub fn c2() -> BiForm {
    BiForm::from_ints(&[0, 1, 0])
}

impl Add for &BiForm {
    type Output = BiForm;

    fn add(self, rhs: &BiForm) -> BiForm {
        self.try_add(rhs)
            .expect("adding forms of different degrees")
    }
}

impl Add for BiForm {
    type Output = BiForm;

    fn add(self, rhs: BiForm) -> BiForm {
        &self + &rhs
    }
}

impl Sub for &BiForm {
    type Output = BiForm;

    fn sub(self, rhs: &BiForm) -> BiForm {
        self.try_sub(rhs)
            .expect("subtracting forms of different degrees")
    }
}

impl Sub for BiForm {
    type Output = BiForm;

    fn sub(self, rhs: BiForm) -> BiForm {
        &self - &rhs
    }
}

impl Neg for &BiForm {
    type Output = BiForm;

    fn neg(self) -> BiForm {
        BiForm {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for BiForm {
    type Output = BiForm;

    fn neg(self) -> BiForm {
        -&self
    }
}

impl Mul for &BiForm {
    type Output = BiForm;

    fn mul(self, rhs: &BiForm) -> BiForm {
        if self.is_zero() || rhs.is_zero() {
            return BiForm::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        BiForm::new(out)
    }
}

impl Mul for BiForm {
    type Output = BiForm;

    fn mul(self, rhs: BiForm) -> BiForm {
        &self * &rhs
    }
}

impl std::iter::Product for BiForm {
    fn product<I: Iterator<Item = BiForm>>(iter: I) -> BiForm {
        iter.fold(BiForm::one(), |acc, f| &acc * &f)
    }
}

/// Writes `coeff * body` into a sum, handling signs and unit coefficients.
fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &Rational,
    body: &str,
) -> fmt::Result {
    let negative = coeff.is_negative();
    let magnitude = coeff.abs();
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if body.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{magnitude}*{body}")
    }
}

fn power(name: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    }
}

fn join_factors(a: String, b: String) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b,
        (_, true) => a,
        _ => format!("{a}*{b}"),
    }
}

impl fmt::Display for BiForm {
    /// Terms in decreasing `u`-power, e.g. `120*u^2 + 192*u*v + 120*v^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let m = self.degree();
        let mut first = true;
        for k in (0..=m).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            write_term(f, first, c, &join_factors(power("u", k), power("v", m - k)))?;
            first = false;
        }
        Ok(())
    }
}

/// Homogeneous element of `Q[c1, c2]`; `coeffs[k]` multiplies `c1^(m-2k) c2^k`,
/// where `m` is the `u,v`-degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl SymForm {
    /// Panics unless `coeffs.len() == degree / 2 + 1`.
    pub fn with_degree(degree: usize, coeffs: Vec<Rational>) -> Self {
        assert_eq!(
            coeffs.len(),
            degree / 2 + 1,
            "wrong number of c1,c2 coefficients"
        );
        if coeffs.iter().all(Zero::is_zero) {
            return Self::zero();
        }
        SymForm { degree, coeffs }
    }

    pub fn from_ints(degree: usize, coeffs: &[i64]) -> Self {
        Self::with_degree(degree, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        SymForm {
            degree: 0,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_ints(0, &[1])
    }

    /// `c * c1^i * c2^j`.
    pub fn monomial(c: Rational, c1_exp: usize, c2_exp: usize) -> Self {
        let degree = c1_exp + 2 * c2_exp;
        let mut coeffs = vec![Rational::zero(); degree / 2 + 1];
        coeffs[c2_exp] = c;
        Self::with_degree(degree, coeffs)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// Nonzero terms as `(coefficient, c1-exponent, c2-exponent)`, in
    /// strictly decreasing `c1`-exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, usize, usize)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (c, self.degree - 2 * k, k))
    }

    pub fn scale(&self, c: &Rational) -> SymForm {
        SymForm::with_degree(self.degree, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn try_add(&self, other: &SymForm) -> Result<SymForm, PolyError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(PolyError::DegreeMismatch(self.degree, other.degree));
        }
        Ok(SymForm::with_degree(
            self.degree,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn try_sub(&self, other: &SymForm) -> Result<SymForm, PolyError> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &SymForm) -> SymForm {
        if self.is_zero() || other.is_zero() {
            return SymForm::zero();
        }
        let degree = self.degree + other.degree;
        let mut out = vec![Rational::zero(); degree / 2 + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SymForm::with_degree(degree, out)
    }

    /// Expands `c1 = u + v`, `c2 = u v`.
    pub fn to_biform(&self) -> BiForm {
        let mut acc = BiForm::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = (&c1().pow(self.degree - 2 * k) * &c2().pow(k)).scale(c);
            acc = &acc + &term;
        }
        acc
    }

    pub fn evaluate(&self, c1_val: &Rational, c2_val: &Rational) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                c * num_traits::pow(c1_val.clone(), self.degree - 2 * k)
                    * num_traits::pow(c2_val.clone(), k)
            })
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for SymForm {
    /// Decreasing `c1`-exponent, e.g. `120*c1^2 - 48*c2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (c, i, j) in self.terms() {
            write_term(f, first, c, &join_factors(power("c1", i), power("c2", j)))?;
            first = false;
        }
        Ok(())
    }
}

pub fn from_sym(s: &SymForm) -> BiForm {
    s.to_biform()
}

pub fn to_sym(a: &BiForm) -> Result<SymForm, PolyError> {
    a.to_sym()
}
