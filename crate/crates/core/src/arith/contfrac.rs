use num_integer::Integer;

use super::Rational;
use crate::error::{Error, Result};

/// Negative continued fraction `[a_1, ..., a_n] = a_1 - 1/(a_2 - 1/(... - 1/a_n))`
/// with every `a_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegContFrac {
    terms: Vec<i64>,
}

impl NegContFrac {
    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Folds the expansion back into a rational, innermost term first.
    pub fn evaluate(&self) -> Rational {
        let mut iter = self.terms.iter().rev();
        let Some(&last) = iter.next() else {
            return Rational::zero();
        };
        let mut acc = Rational::integer(last as i128);
        for &a in iter {
            acc = Rational::integer(a as i128) - Rational::one() / acc;
        }
        acc
    }
}

/// Expands `p/q` (`p > q >= 1`, coprime) as a negative continued fraction.
pub fn neg_cont_frac(p: i64, q: i64) -> Result<NegContFrac> {
    if q < 1 || p <= q {
        return Err(Error::OutOfRange(format!("negative continued fraction needs p > q >= 1, got p={p}, q={q}")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    let mut terms = Vec::new();
    let (mut num, mut den) = (p, q);
    while den != 0 {
        // a = ceil(num/den); the remainder a·den - num lies in [0, den)
        let a = Integer::div_ceil(&num, &den);
        terms.push(a);
        let rem = a * den - num;
        num = den;
        den = rem;
    }
    Ok(NegContFrac { terms })
}
