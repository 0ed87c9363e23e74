//! Partitions of `d`, kept simultaneously as a part list and as an
//! exponent vector `(e_1, ..., e_r)` with `e_i` copies of `i`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::factorial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("empty partition")]
    Empty,
    #[error("parts must be positive")]
    NonPositivePart,
    #[error("malformed partition: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    evec: Vec<usize>,
}

impl Partition {
    /// Accepts parts in any order; they are sorted into weakly decreasing order.
    pub fn from_parts(parts: &[usize]) -> Result<Self, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::Empty);
        }
        if parts.contains(&0) {
            return Err(PartitionError::NonPositivePart);
        }
        let mut parts = parts.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut evec = vec![0; parts[0]];
        for &p in &parts {
            evec[p - 1] += 1;
        }
        Ok(Partition { parts, evec })
    }

    /// `evec[i-1]` copies of `i`; trailing zeros are dropped.
    pub fn from_exponents(evec: &[usize]) -> Result<Self, PartitionError> {
        let parts: Vec<usize> = evec
            .iter()
            .enumerate()
            .rev()
            .flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e))
            .collect();
        Self::from_parts(&parts)
    }

    /// `1^a` followed by the given larger parts, e.g. `(1^{h-2}, 2, h)`.
    pub fn ones_plus(ones: usize, rest: &[usize]) -> Result<Self, PartitionError> {
        let mut parts = vec![1; ones];
        parts.extend_from_slice(rest);
        Self::from_parts(&parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn evec(&self) -> &[usize] {
        &self.evec
    }

    /// The partitioned integer `d`.
    pub fn d(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `n`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest part `r`.
    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    /// Codimension `d - n` of the locus, equal to the degree of its Thom polynomial.
    pub fn codim(&self) -> usize {
        self.d() - self.len()
    }

    /// Indices `i` (1-based) with `e_i > 0`, paired with `e_i`.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.evec
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
    }

    /// Hilbert's degree `n! / prod(e_i!) * prod(i^e_i)` of the projectivized locus.
    pub fn hilbert_degree(&self) -> BigInt {
        let mut num = factorial(self.len());
        let mut den = BigInt::from(1);
        for (i, e) in self.blocks() {
            den *= factorial(e);
            num *= BigInt::from(i).pow(e as u32);
        }
        num / den
    }

    /// Parses `"3,2,1,1"` or the exponent form `"1^2 2 3"`.
    pub fn parse(text: &str) -> Result<Self, PartitionError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(PartitionError::Empty);
        }
        let malformed = || PartitionError::Malformed(text.to_string());
        let mut parts = Vec::new();
        for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let (base, count) = match token.split_once('^') {
                Some((b, c)) => (b, c.parse::<usize>().map_err(|_| malformed())?),
                None => (token, 1),
            };
            let base: i64 = base.parse().map_err(|_| malformed())?;
            if base <= 0 {
                return Err(PartitionError::NonPositivePart);
            }
            parts.extend(std::iter::repeat_n(base as usize, count));
        }
        Self::from_parts(&parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// All partitions of `d` in reverse-lexicographic order: `(d)` first, `(1^d)` last.
pub fn partitions(d: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts(prefix).expect("nonempty"));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        go(d, d, &mut Vec::new(), &mut out);
    }
    out
}
