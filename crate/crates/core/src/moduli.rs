//! Graded ideals of `Q[c1, c2]`, Poincaré series, and presentations of the
//! cohomology rings of the GIT quotients of `S^d C^2`.
//!
//! Series are indexed by `u,v`-degree (a class of `u,v`-degree `m` lives in
//! cohomological degree `2m`), except for the link of the semistable point,
//! whose Betti numbers are reported in true cohomological degree.
//!
//! A [`GradedIdeal`] may have generators that are not symmetric, such as
//! `Pi`. It then stands for the contraction to `Q[c1, c2]` of the ideal the
//! generators span in `Q[u, v]`. For symmetric generators the contraction is
//! the ideal they generate in `Q[c1, c2]`, because `Q[u, v]` is free over
//! `Q[c1, c2]`.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{rat, solve_in_span, ArithError, RatMatrix, Rational};
use crate::partition::{Partition, PartitionError};
use crate::poly::{BiForm, PolyError, SymForm};
use crate::thom::{top_weights_product, tp_reduce, ThomError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error("ideal generators must be nonzero")]
    ZeroGenerator,
    #[error("unsupported combination: d = {d}, space = {space}")]
    Unsupported { d: usize, space: Space },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Thom(#[from] ThomError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Homogeneous ideal given by generators in the Chern roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal {
    generators: Vec<BiForm>,
}

fn sym_dim(m: usize) -> usize {
    m / 2 + 1
}

fn sym_vector(f: &BiForm, m: usize) -> Result<Vec<Rational>, PolyError> {
    if f.is_zero() {
        return Ok(vec![Rational::zero(); sym_dim(m)]);
    }
    Ok(f.to_sym()?.coeffs().to_vec())
}

impl GradedIdeal {
    pub fn zero() -> Self {
        GradedIdeal {
            generators: Vec::new(),
        }
    }

    pub fn from_sym(generators: &[SymForm]) -> Result<Self, ModuliError> {
        Self::from_forms(generators.iter().map(SymForm::to_biform).collect())
    }

    pub fn from_forms(generators: Vec<BiForm>) -> Result<Self, ModuliError> {
        if generators.iter().any(BiForm::is_zero) {
            return Err(ModuliError::ZeroGenerator);
        }
        Ok(GradedIdeal { generators })
    }

    pub fn generators(&self) -> &[BiForm] {
        &self.generators
    }

    pub fn is_symmetric(&self) -> bool {
        self.generators.iter().all(BiForm::is_symmetric)
    }

    /// `{c1^(m-a-2k) c2^k * g}` in the basis `c1^(m-2k) c2^k`. Only meaningful
    /// for symmetric generators.
    fn sym_columns(&self, m: usize) -> Vec<Vec<Rational>> {
        let mut cols = Vec::new();
        for g in &self.generators {
            let a = g.degree();
            if a > m {
                continue;
            }
            let gs = g.to_sym().expect("symmetric generator");
            for k in 0..=(m - a) / 2 {
                let mut col = vec![Rational::zero(); sym_dim(m)];
                for (i, c) in gs.coeffs().iter().enumerate() {
                    col[i + k] = c.clone();
                }
                cols.push(col);
            }
        }
        cols
    }

    /// `{u^k v^(m-a-k) * g}` in the basis `u^k v^(m-k)` of `Q[u,v]_m`.
    fn root_columns(&self, m: usize) -> Vec<BiForm> {
        let mut cols = Vec::new();
        for g in &self.generators {
            let a = g.degree();
            if a > m {
                continue;
            }
            for k in 0..=m - a {
                cols.push(&BiForm::monomial(Rational::one(), k, m - a - k) * g);
            }
        }
        cols
    }

    /// A spanning set (in the `c1, c2` basis) of the degree-`m` piece of the
    /// contracted ideal, computed by intersecting the `Q[u,v]` span with the
    /// symmetric forms.
    pub fn contracted_piece(&self, m: usize) -> Result<Vec<Vec<Rational>>, ModuliError> {
        let forms = self.root_columns(m);
        if forms.is_empty() {
            return Ok(Vec::new());
        }
        let columns: Vec<Vec<Rational>> = forms.iter().map(|f| dense(f, m)).collect();
        let span = RatMatrix::from_columns(m + 1, &columns)?;
        // x with span * x symmetric: (span - reversed(span)) x = 0
        let mut antisym = RatMatrix::zeros(m + 1, columns.len());
        for i in 0..=m {
            for j in 0..columns.len() {
                antisym[(i, j)] = &span[(i, j)] - &span[(m - i, j)];
            }
        }
        antisym
            .nullspace()
            .into_iter()
            .map(|x| {
                let f = BiForm::new(span.mul_vec(&x)?);
                Ok(sym_vector(&f, m)?)
            })
            .collect()
    }

    /// Spanning set of the degree-`m` piece in the `c1, c2` basis.
    pub fn piece_span(&self, m: usize) -> Result<Vec<Vec<Rational>>, ModuliError> {
        if self.is_symmetric() {
            Ok(self.sym_columns(m))
        } else {
            self.contracted_piece(m)
        }
    }
}

/// Coefficient vector of length `m + 1`, zero-padded for the canonical zero.
fn dense(f: &BiForm, m: usize) -> Vec<Rational> {
    if f.is_zero() {
        vec![Rational::zero(); m + 1]
    } else {
        debug_assert_eq!(f.degree(), m);
        f.coeffs().to_vec()
    }
}

fn span_rank(rows: usize, vectors: &[Vec<Rational>]) -> Result<usize, ModuliError> {
    if vectors.is_empty() {
        return Ok(0);
    }
    Ok(RatMatrix::from_columns(rows, vectors)?.rank())
}

/// `dim (Q[c1,c2]/I)_m`.
pub fn piece_dimension(ideal: &GradedIdeal, m: usize) -> Result<usize, ModuliError> {
    Ok(sym_dim(m) - span_rank(sym_dim(m), &ideal.piece_span(m)?)?)
}

/// Same dimension computed through the contraction from `Q[u, v]`,
/// regardless of whether the generators are symmetric.
pub fn piece_dimension_contracted(ideal: &GradedIdeal, m: usize) -> Result<usize, ModuliError> {
    Ok(sym_dim(m) - span_rank(sym_dim(m), &ideal.contracted_piece(m)?)?)
}

/// Graded dimensions `coeffs[k]`, `k = 0..=bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareSeries {
    coeffs: Vec<u64>,
    /// True when all coefficients past the stored ones vanish.
    finite: bool,
}

impl PoincareSeries {
    pub fn truncated(coeffs: Vec<u64>) -> Self {
        PoincareSeries {
            coeffs,
            finite: false,
        }
    }

    pub fn polynomial(mut coeffs: Vec<u64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        PoincareSeries {
            coeffs,
            finite: true,
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_polynomial(&self) -> bool {
        self.finite
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`, or `None` past the truncation of an infinite series.
    pub fn coeff(&self, k: usize) -> Option<u64> {
        match self.coeffs.get(k) {
            Some(&c) => Some(c),
            None if self.finite => Some(0),
            None => None,
        }
    }

    /// Termwise agreement for `k <= bound`; undefined coefficients disagree.
    pub fn agrees_up_to(&self, other: &PoincareSeries, bound: usize) -> bool {
        (0..=bound).all(|k| match (self.coeff(k), other.coeff(k)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        })
    }

    /// Same series cut or zero-padded to `k = 0..=bound`.
    pub fn to_bound(&self, bound: usize) -> Vec<u64> {
        (0..=bound).map(|k| self.coeff(k).unwrap_or(0)).collect()
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn quotient_series(ideal: &GradedIdeal, bound: usize) -> Result<PoincareSeries, ModuliError> {
    let coeffs = (0..=bound)
        .map(|m| piece_dimension(ideal, m).map(|x| x as u64))
        .collect::<Result<_, _>>()?;
    Ok(PoincareSeries::truncated(coeffs))
}

/// Power-series expansion of `num / den` with `den[0] = 1`, for `k <= bound`.
fn expand_rational(num: &[i64], den: &[i64], bound: usize) -> Vec<i64> {
    assert_eq!(den[0], 1);
    let mut out = vec![0i64; bound + 1];
    for k in 0..=bound {
        let mut c = num.get(k).copied().unwrap_or(0);
        for (i, &dc) in den.iter().enumerate().skip(1) {
            if i <= k {
                c -= dc * out[k - i];
            }
        }
        out[k] = c;
    }
    out
}

/// Sparse polynomial in `t` given as `(coefficient, exponent)` pairs.
fn poly_t(terms: &[(i64, usize)]) -> Vec<i64> {
    let len = terms.iter().map(|&(_, e)| e + 1).max().unwrap_or(1);
    let mut out = vec![0; len];
    for &(c, e) in terms {
        out[e] += c;
    }
    out
}

fn poly_t_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1 - t)(1 - t^2)`
fn two_generator_denominator() -> Vec<i64> {
    poly_t(&[(1, 0), (-1, 1), (-1, 2), (1, 3)])
}

fn nonnegative(v: Vec<i64>) -> Vec<u64> {
    v.into_iter()
        .map(|c| u64::try_from(c).expect("graded dimensions are nonnegative"))
        .collect()
}

/// `(1 - t^h - t^(h+1) + t^d) / ((1 - t)(1 - t^2))`, `h = floor(d/2)`.
pub fn kirwan_series(d: usize, bound: usize) -> PoincareSeries {
    assert!(d >= 2, "need d >= 2");
    let h = d / 2;
    let num = poly_t(&[(1, 0), (-1, h), (-1, h + 1), (1, d)]);
    PoincareSeries::truncated(nonnegative(expand_rational(
        &num,
        &two_generator_denominator(),
        bound,
    )))
}

/// `(1 - t^a)(1 - t^b) / ((1 - t)(1 - t^2))`, the series of a complete
/// intersection of two relations of degrees `a`, `b`.
pub fn complete_intersection_series(a: usize, b: usize, bound: usize) -> PoincareSeries {
    let num = poly_t_mul(&poly_t(&[(1, 0), (-1, a)]), &poly_t(&[(1, 0), (-1, b)]));
    PoincareSeries::truncated(nonnegative(expand_rational(
        &num,
        &two_generator_denominator(),
        bound,
    )))
}

/// `P(t) = (1 - t^(h-1))(1 - t^h) / ((1 - t)(1 - t^2))` for `d = 2h`.
pub fn stable_series_even(d: usize) -> PoincareSeries {
    assert!(d.is_multiple_of(2) && d >= 4, "need d = 2h with h >= 2");
    let h = d / 2;
    let top = 2 * h - 4;
    let full = complete_intersection_series(h - 1, h, top + 4);
    debug_assert!(full.coeffs()[top + 1..].iter().all(|&c| c == 0));
    PoincareSeries::polynomial(full.coeffs()[..=top].to_vec())
}

/// `1/(1 - t^2) + t P(t)` for `d = 2h`.
pub fn ss_series_even(d: usize, bound: usize) -> PoincareSeries {
    let p = stable_series_even(d);
    let coeffs = (0..=bound)
        .map(|k| {
            let even = u64::from(k % 2 == 0);
            let shifted = if k == 0 { 0 } else { p.coeff(k - 1).unwrap() };
            even + shifted
        })
        .collect();
    PoincareSeries::truncated(coeffs)
}

/// `1 + t P(t)` for `d = 2h`.
pub fn ss_quotient_series_even(d: usize) -> PoincareSeries {
    let p = stable_series_even(d);
    let mut coeffs = vec![1];
    coeffs.extend_from_slice(p.coeffs());
    PoincareSeries::polynomial(coeffs)
}

/// Membership certificate for a homogeneous `f` in a [`GradedIdeal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// Cofactors `a_i` with `sum a_i g_i = f`, one per generator.
    pub cofactors: Option<Vec<BiForm>>,
    /// Rank of the degree-`deg f` piece of the ideal.
    pub span_rank: usize,
    /// Rank after adjoining `f`; exceeds `span_rank` exactly when `f` is not a member.
    pub augmented_rank: usize,
}

pub fn membership(f: &SymForm, ideal: &GradedIdeal) -> Result<Membership, ModuliError> {
    let n = ideal.generators.len();
    if f.is_zero() {
        return Ok(Membership {
            member: true,
            cofactors: Some(vec![BiForm::zero(); n]),
            span_rank: 0,
            augmented_rank: 0,
        });
    }
    let m = f.degree();
    // one column per (generator, multiplier monomial), in the u,v basis
    let mut owners = Vec::new();
    let mut multipliers = Vec::new();
    let mut columns = Vec::new();
    for (gi, g) in ideal.generators.iter().enumerate() {
        let a = g.degree();
        if a > m {
            continue;
        }
        for k in 0..=m - a {
            let mono = BiForm::monomial(Rational::one(), k, m - a - k);
            columns.push(dense(&(&mono * g), m));
            owners.push(gi);
            multipliers.push(mono);
        }
    }
    let target = f.to_biform().coeffs().to_vec();
    let span_rank = span_rank(m + 1, &columns)?;
    if columns.is_empty() {
        return Ok(Membership {
            member: false,
            cofactors: None,
            span_rank: 0,
            augmented_rank: 1,
        });
    }
    let matrix = RatMatrix::from_columns(m + 1, &columns)?;
    match solve_in_span(&target, &matrix)? {
        Some(x) => {
            let mut cofactors = vec![BiForm::zero(); n];
            for ((c, &gi), mono) in x.iter().zip(&owners).zip(&multipliers) {
                if !c.is_zero() {
                    cofactors[gi] = &cofactors[gi] + &mono.scale(c);
                }
            }
            // symmetrize: for symmetric generators the average of the
            // cofactors and their swaps is another solution
            if ideal.is_symmetric() {
                let half = Rational::new(1.into(), 2.into());
                cofactors = cofactors
                    .iter()
                    .map(|a| (a + &a.swap()).scale(&half))
                    .collect();
            }
            Ok(Membership {
                member: true,
                cofactors: Some(cofactors),
                span_rank,
                augmented_rank: span_rank,
            })
        }
        None => Ok(Membership {
            member: false,
            cofactors: None,
            span_rank,
            augmented_rank: span_rank + 1,
        }),
    }
}

/// Degreewise equality of the (contracted) ideals for all `m <= bound`.
pub fn ideal_equal_up_to(
    a: &GradedIdeal,
    b: &GradedIdeal,
    bound: usize,
) -> Result<bool, ModuliError> {
    Ok(first_ideal_difference(a, b, bound)?.is_none())
}

/// The first degree where the two ideals differ, if any.
pub fn first_ideal_difference(
    a: &GradedIdeal,
    b: &GradedIdeal,
    bound: usize,
) -> Result<Option<usize>, ModuliError> {
    for m in 0..=bound {
        let pa = a.piece_span(m)?;
        let pb = b.piece_span(m)?;
        let ra = span_rank(sym_dim(m), &pa)?;
        let rb = span_rank(sym_dim(m), &pb)?;
        let mut both = pa;
        both.extend(pb);
        let rab = span_rank(sym_dim(m), &both)?;
        if ra != rab || rb != rab {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// `Pi = prod_{l=0}^{h-1} (l v + (d - l) u)` for even `d = 2h`, and
/// `prod_{l=0}^{h} (l v + (d - l) u)` for odd `d = 2h + 1`.
pub fn pi(d: usize) -> BiForm {
    let h = d / 2;
    if d.is_multiple_of(2) {
        top_weights_product(d, h)
    } else {
        top_weights_product(d, h + 1)
    }
}

/// `L = (h + 1) v + (h - 1) u` for `d = 2h`.
pub fn l_form(h: usize) -> BiForm {
    BiForm::linear_int(h as i64 - 1, h as i64 + 1)
}

/// `lambda_1 = (1^(d-h-1), h+1)` and `lambda_2 = (1^(d-h-2), h+2)`.
pub fn kirwan_partitions(d: usize) -> Result<(Partition, Partition), ModuliError> {
    let h = d / 2;
    Ok((
        Partition::ones_plus(d - h - 1, &[h + 1])?,
        Partition::ones_plus(d - h - 2, &[h + 2])?,
    ))
}

/// `lambda_0 = (1^h, h)` and `lambda_0' = (1^(h-2), 2, h)` for `d = 2h`.
pub fn stable_partitions(d: usize) -> Result<(Partition, Partition), ModuliError> {
    let h = d / 2;
    Ok((
        Partition::ones_plus(h, &[h])?,
        Partition::ones_plus(h - 2, &[2, h])?,
    ))
}

/// The ideal `(Tp_{lambda_1}, Tp_{lambda_2})`.
pub fn kirwan_ideal(d: usize) -> Result<GradedIdeal, ModuliError> {
    let (l1, l2) = kirwan_partitions(d)?;
    GradedIdeal::from_sym(&[tp_reduce(&l1)?.value, tp_reduce(&l2)?.value])
}

/// The ideal `(Pi, div.diff(Pi))`.
pub fn stable_ideal(d: usize) -> Result<GradedIdeal, ModuliError> {
    let p = pi(d);
    GradedIdeal::from_forms(vec![p.divided_difference(), p])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    /// `H_G(X^ss)`
    SsEquivariant,
    /// `H(X^ss / G)`
    SsQuotient,
    /// `H(X^s / G)`
    StableQuotient,
    /// `H(L^ss)`, the link of the strictly semistable point.
    Link,
}

impl Space {
    pub fn label(self) -> &'static str {
        match self {
            Space::SsEquivariant => "ss-equivariant",
            Space::SsQuotient => "ss-quotient",
            Space::StableQuotient => "stable-quotient",
            Space::Link => "link",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grading {
    /// Index `k` counts `u,v`-degree; cohomological degree is `2k`.
    HalfDegree,
    /// Index `k` is the cohomological degree.
    Cohomological,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    Sym(SymForm),
    /// A relation written in the Chern roots; it enters through the
    /// contraction of the ideal it generates in `Q[u, v]`.
    Root(BiForm),
    Power {
        generator: String,
        exponent: usize,
    },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Sym(s) => write!(f, "{s}"),
            Relation::Root(r) => write!(f, "{r}"),
            Relation::Power {
                generator,
                exponent,
            } => write!(f, "{generator}^{exponent}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    pub d: usize,
    pub space: Space,
    pub grading: Grading,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
    /// `Q<1> + c1 Q[c1,c2]/(...)`: positive-degree classes restricted to the
    /// image of multiplication by `c1`.
    pub augmented: bool,
    /// Computed degreewise from the relations.
    pub series: PoincareSeries,
    /// Expansion of the closed form.
    pub expected: PoincareSeries,
    pub closed_form: String,
    pub series_verified: bool,
}

fn chern_generators() -> Vec<Generator> {
    vec![
        Generator {
            name: "c1".into(),
            degree: 1,
        },
        Generator {
            name: "c2".into(),
            degree: 2,
        },
    ]
}

/// `1 + sum_{m >= 1} dim (c1 Q[c1,c2]_{m-1} + I_m) / I_m`.
pub fn augmented_series(ideal: &GradedIdeal, bound: usize) -> Result<PoincareSeries, ModuliError> {
    let mut coeffs = vec![1];
    for m in 1..=bound {
        let piece = ideal.piece_span(m)?;
        let base = span_rank(sym_dim(m), &piece)?;
        let mut with_c1 = piece;
        // c1 * c1^(m-1-2k) c2^k = c1^(m-2k) c2^k
        for k in 0..=(m - 1) / 2 {
            let mut e = vec![Rational::zero(); sym_dim(m)];
            e[k] = Rational::one();
            with_c1.push(e);
        }
        coeffs.push((span_rank(sym_dim(m), &with_c1)? - base) as u64);
    }
    Ok(PoincareSeries::truncated(coeffs))
}

/// Presentation of the requested cohomology ring, with its series checked
/// degreewise up to `bound` (`u,v`-degree) against the closed form.
pub fn presentation(d: usize, space: Space, bound: usize) -> Result<RingPresentation, ModuliError> {
    let unsupported = || ModuliError::Unsupported { d, space };
    if d < 3 {
        return Err(unsupported());
    }
    let h = d / 2;
    let even = d.is_multiple_of(2);
    match space {
        Space::Link => presentation_link(d),
        Space::SsEquivariant | Space::SsQuotient => {
            let (l1, l2) = kirwan_partitions(d)?;
            let t1 = tp_reduce(&l1)?.value;
            let t2 = tp_reduce(&l2)?.value;
            let ideal = GradedIdeal::from_sym(&[t1.clone(), t2.clone()])?;
            let relations = vec![Relation::Sym(t1), Relation::Sym(t2)];
            let augmented = space == Space::SsQuotient && even;
            let (series, expected, closed_form) = if augmented {
                (
                    augmented_series(&ideal, bound)?,
                    ss_quotient_series_even(d),
                    format!("1 + t*(1-t^{})(1-t^{})/((1-t)(1-t^2))", h - 1, h),
                )
            } else {
                (
                    quotient_series(&ideal, bound)?,
                    kirwan_series(d, bound),
                    format!("(1-t^{h}-t^{}+t^{d})/((1-t)(1-t^2))", h + 1),
                )
            };
            let series_verified = series.agrees_up_to(&expected, bound);
            Ok(RingPresentation {
                d,
                space,
                grading: Grading::HalfDegree,
                generators: chern_generators(),
                relations,
                augmented,
                series,
                expected,
                closed_form,
                series_verified,
            })
        }
        Space::StableQuotient => {
            if !even {
                return Err(unsupported());
            }
            let p = pi(d);
            let dp = p.divided_difference();
            let ideal = GradedIdeal::from_forms(vec![dp.clone(), p.clone()])?;
            let series = quotient_series(&ideal, bound)?;
            let expected = stable_series_even(d);
            let series_verified = series.agrees_up_to(&expected, bound);
            Ok(RingPresentation {
                d,
                space,
                grading: Grading::HalfDegree,
                generators: chern_generators(),
                relations: vec![Relation::Sym(dp.to_sym()?), Relation::Root(p)],
                augmented: false,
                series,
                expected,
                closed_form: format!("(1-t^{})(1-t^{})/((1-t)(1-t^2))", h - 1, h),
                series_verified,
            })
        }
    }
}

/// Cohomology of the link of the semistable point for `d = 2h`, `h >= 3`:
/// generated by `c2` (degree 4) and `g` (degree `4h - 4 floor(h/2) - 3`)
/// subject to `c2^floor(h/2) = 0` and `g^2 = 0`.
pub fn presentation_link(d: usize) -> Result<RingPresentation, ModuliError> {
    if !d.is_multiple_of(2) || d < 6 {
        return Err(ModuliError::Unsupported {
            d,
            space: Space::Link,
        });
    }
    let h = d / 2;
    let k = h / 2;
    let g_degree = 4 * h - 4 * k - 3;
    let dim = 4 * h - 7;
    // basis monomials c2^a g^b, a < k, b < 2
    let mut betti = vec![0u64; dim + 1];
    for a in 0..k {
        for b in 0..2 {
            betti[4 * a + b * g_degree] += 1;
        }
    }
    let series = PoincareSeries::polynomial(betti.clone());
    let duality = (0..=dim).all(|i| betti[i] == betti[dim - i]);
    let total: u64 = betti.iter().sum();
    let series_verified = duality && total == 2 * k as u64 && betti.iter().all(|&b| b <= 1);
    Ok(RingPresentation {
        d,
        space: Space::Link,
        grading: Grading::Cohomological,
        generators: vec![
            Generator {
                name: "c2".into(),
                degree: 4,
            },
            Generator {
                name: "g".into(),
                degree: g_degree,
            },
        ],
        relations: vec![
            Relation::Power {
                generator: "c2".into(),
                exponent: k,
            },
            Relation::Power {
                generator: "g".into(),
                exponent: 2,
            },
        ],
        augmented: false,
        expected: series.clone(),
        series,
        closed_form: format!("(1+t^{g_degree})(1-t^{})/(1-t^4)", 4 * k),
        series_verified,
    })
}

/// gcd checks on `Pi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdReport {
    pub d: usize,
    pub pi: BiForm,
    pub gcd_with_swap: BiForm,
    pub gcd_with_divided_difference: BiForm,
}

impl GcdReport {
    pub fn holds(&self) -> bool {
        self.gcd_with_swap == BiForm::one() && self.gcd_with_divided_difference == BiForm::one()
    }
}

pub fn gcd_certificates(d: usize) -> Result<GcdReport, ModuliError> {
    if d < 3 {
        return Err(ModuliError::Unsupported {
            d,
            space: Space::StableQuotient,
        });
    }
    let p = pi(d);
    Ok(GcdReport {
        d,
        gcd_with_swap: p.gcd_homogeneous(&p.swap()),
        gcd_with_divided_difference: p.gcd_homogeneous(&p.divided_difference()),
        pi: p,
    })
}

/// Result of checking the generating function `[1 + (u-v) q]^(du/(u-v))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFunctionReport {
    pub d: usize,
    pub jmax: usize,
    /// First `j` with `j! G_j != Pi_j`.
    pub first_failing_j: Option<usize>,
    /// `{div.diff(Pi_j) : h < j <= h + 3}` against `(Pi, div.diff(Pi))` for
    /// even `d`, and against `(Tp_{lambda_1}, Tp_{lambda_2})` for odd `d`.
    pub matches_stable_ideal: bool,
    /// First degree where the comparison above fails.
    pub stable_mismatch_degree: Option<usize>,
    /// The same family against `(Tp_{lambda_1}, Tp_{lambda_2})`.
    pub matches_kirwan_ideal: bool,
    pub bound: usize,
}

impl GenFunctionReport {
    pub fn coefficients_hold(&self) -> bool {
        self.first_failing_j.is_none()
    }
}

/// Coefficients `G_j` of `[1 + (u - v) q]^(du/(u-v))`, obtained from the
/// differential equation `(1 + (u-v) q) G' = d u G`:
/// `(j + 1) G_{j+1} = (d u - j (u - v)) G_j`.
pub fn generating_coefficients(d: usize, jmax: usize) -> Vec<BiForm> {
    let du = BiForm::linear_int(d as i64, 0);
    let u_minus_v = BiForm::linear_int(1, -1);
    let mut out = vec![BiForm::one()];
    for j in 0..jmax {
        let factor = &du - &u_minus_v.scale(&rat(j as i64));
        let next = (&factor * &out[j]).scale(&Rational::new(1.into(), (j as i64 + 1).into()));
        out.push(next);
    }
    out
}

pub fn gen_function_check(
    d: usize,
    jmax: usize,
    bound: usize,
) -> Result<GenFunctionReport, ModuliError> {
    if d < 3 {
        return Err(ModuliError::Unsupported {
            d,
            space: Space::StableQuotient,
        });
    }
    let g = generating_coefficients(d, jmax);
    let mut first_failing_j = None;
    let mut j_factorial = Rational::one();
    for (j, gj) in g.iter().enumerate() {
        if j > 0 {
            j_factorial *= rat(j as i64);
        }
        if gj.scale(&j_factorial) != top_weights_product(d, j) {
            first_failing_j = Some(j);
            break;
        }
    }
    let h = d / 2;
    let family = GradedIdeal::from_forms(
        (h + 1..=h + 3)
            .map(|j| top_weights_product(d, j).divided_difference())
            // div.diff(Pi_{d+1}) = 0: Pi_{d+1} is the full, symmetric weight product
            .filter(|g| !g.is_zero())
            .collect(),
    )?;
    let kirwan = kirwan_ideal(d)?;
    let stable = if d.is_multiple_of(2) {
        stable_ideal(d)?
    } else {
        kirwan.clone()
    };
    let stable_mismatch_degree = first_ideal_difference(&family, &stable, bound)?;
    Ok(GenFunctionReport {
        d,
        jmax,
        first_failing_j,
        matches_stable_ideal: stable_mismatch_degree.is_none(),
        stable_mismatch_degree,
        matches_kirwan_ideal: ideal_equal_up_to(&family, &kirwan, bound)?,
        bound,
    })
}

/// The identity `Tp_{lambda_2} = h L^* c1 div.diff(Pi) - 2 h c1 Pi` for `d = 2h`,
/// returned as the residual (zero when it holds).
pub fn lambda2_identity_residual(d: usize) -> Result<BiForm, ModuliError> {
    let h = d / 2;
    let (_, l2) = kirwan_partitions(d)?;
    let tp2 = tp_reduce(&l2)?.as_biform();
    let p = pi(d);
    let c1 = crate::poly::c1();
    let hr = rat(h as i64);
    let rhs = &(&(&l_form(h).swap() * &c1) * &p.divided_difference()).scale(&hr)
        - &(&c1 * &p).scale(&(hr * rat(2)));
    Ok(&tp2 - &rhs)
}
