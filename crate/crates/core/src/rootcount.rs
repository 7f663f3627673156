//! Sign counting on lists of exact ring elements and distinct real root
//! counting from principal subresultant coefficients.

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::ring::{Ordered, Sign};
use crate::subres::{sequence_for, SubresSequence};

/// Number of sign variations between adjacent entries. All entries must be
/// nonzero.
pub fn variations(list: &[Sign]) -> Result<usize> {
    if let Some(i) = list.iter().position(|s| s.is_zero()) {
        return Err(Error::ZeroEntry(i));
    }
    Ok(list.windows(2).filter(|w| w[0] != w[1]).count())
}

/// Number of sign permanences between adjacent entries. All entries must be
/// nonzero.
pub fn permanences(list: &[Sign]) -> Result<usize> {
    if let Some(i) = list.iter().position(|s| s.is_zero()) {
        return Err(Error::ZeroEntry(i));
    }
    Ok(list.windows(2).filter(|w| w[0] == w[1]).count())
}

/// Sign variations with zeros dropped (Descartes' rule).
pub fn variations_skipping_zeros(signs: impl IntoIterator<Item = Sign>) -> usize {
    let nz: Vec<Sign> = signs.into_iter().filter(|s| !s.is_zero()).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

/// A nonempty list of signs whose first entry is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignList(Vec<Sign>);

impl SignList {
    pub fn new(values: Vec<Sign>) -> Result<Self> {
        match values.first() {
            None => Err(Error::Invalid("empty sign list".into())),
            Some(Sign::Zero) => Err(Error::ZeroEntry(0)),
            Some(_) => Ok(SignList(values)),
        }
    }

    pub fn from_elements<R: Ordered>(values: &[R]) -> Result<Self> {
        Self::new(values.iter().map(|v| v.sign()).collect())
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// Lengths of the internal zero runs, with the index of the nonzero
    /// entry preceding each run; a trailing run is reported last with
    /// `None` as its successor.
    pub fn zero_runs(&self) -> Vec<ZeroRun> {
        let mut runs = Vec::new();
        let mut i = 0;
        let v = &self.0;
        while i < v.len() {
            if v[i].is_zero() {
                let start = i;
                while i < v.len() && v[i].is_zero() {
                    i += 1;
                }
                runs.push(ZeroRun {
                    after: start - 1,
                    len: i - start,
                    trailing: i == v.len(),
                });
            } else {
                i += 1;
            }
        }
        runs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroRun {
    pub after: usize,
    pub len: usize,
    pub trailing: bool,
}

/// The generalized permanences-minus-variations count `C`.
///
/// Maximal nonzero blocks contribute `P - V`; an internal run of `k` zeros
/// between `a` and `b` contributes `0` for odd `k` and
/// `(-1)^{k/2} sign(b/a)` for even `k`. A trailing zero run contributes
/// nothing.
pub fn generalized_count(list: &SignList) -> i64 {
    let v = &list.0;
    let mut total = 0i64;
    let mut i = 0;
    while i + 1 < v.len() {
        if v[i + 1].is_zero() {
            let mut k = 0;
            while i + 1 + k < v.len() && v[i + 1 + k].is_zero() {
                k += 1;
            }
            let next = i + 1 + k;
            if next == v.len() {
                break;
            }
            if k % 2 == 0 {
                let s = (v[next] * v[i]).as_i32() as i64;
                total += if (k / 2) % 2 == 0 { s } else { -s };
            }
            i = next;
        } else {
            total += if v[i] == v[i + 1] { 1 } else { -1 };
            i += 1;
        }
    }
    total
}

/// Signs of `[s_p, ..., s_0]` for the subresultant sequence of `P`.
pub fn principal_signs<R: Ordered>(seq: &SubresSequence<R>) -> SignList {
    SignList::from_elements(&seq.principals()).expect("leading coefficient is nonzero")
}

/// Number of distinct real roots of `P` from the signs of its principal
/// subresultant coefficients.
pub fn count_distinct_real_roots<R: Ordered>(p: &UniPoly<R>) -> usize {
    match p.degree() {
        None => panic!("root count of the zero polynomial"),
        Some(0) => 0,
        Some(1) => 1,
        Some(_) => count_from_sequence(&sequence_for(p)),
    }
}

pub fn count_from_sequence<R: Ordered>(seq: &SubresSequence<R>) -> usize {
    let c = generalized_count(&principal_signs(seq));
    debug_assert!(c >= 0, "negative root count {c}");
    c.max(0) as usize
}

/// Sign variations of the coefficients: exact positive root count (with
/// multiplicity) when all roots are real, otherwise an upper bound of the
/// same parity.
pub fn descartes_positive_count<R: Ordered>(p: &UniPoly<R>) -> usize {
    variations_skipping_zeros(p.coeffs().iter().map(|c| c.sign()))
}

/// Same as [`descartes_positive_count`] for `P(-T)`.
pub fn descartes_negative_count<R: Ordered>(p: &UniPoly<R>) -> usize {
    variations_skipping_zeros(p.coeffs().iter().enumerate().map(|(i, c)| {
        if i % 2 == 1 {
            c.sign().negate()
        } else {
            c.sign()
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RatPoly;
    use Sign::{Negative as N, Positive as P, Zero as Z};

    #[test]
    fn v_and_p() {
        assert_eq!((variations(&[P, N, P]).unwrap(), permanences(&[P, N, P]).unwrap()), (2, 0));
        assert_eq!((variations(&[P, P, P]).unwrap(), permanences(&[P, P, P]).unwrap()), (0, 2));
        assert_eq!(
            (variations(&[P, P, N, N]).unwrap(), permanences(&[P, P, N, N]).unwrap()),
            (1, 2)
        );
        assert_eq!(variations(&[P, Z]), Err(Error::ZeroEntry(1)));
    }

    #[test]
    fn generalized_examples() {
        let c = |s: Vec<Sign>| generalized_count(&SignList::new(s).unwrap());
        assert_eq!(c(vec![P, P, P]), 2);
        assert_eq!(c(vec![P, Z, Z, N]), 1);
        assert_eq!(c(vec![P, Z, P]), 0);
        // trailing zeros end the count
        assert_eq!(c(vec![P, P, N, Z, Z]), 0);
        assert!(SignList::new(vec![Z, P]).is_err());
    }

    #[test]
    fn zero_run_structure() {
        let l = SignList::new(vec![P, Z, Z, N, P, Z]).unwrap();
        assert_eq!(
            l.zero_runs(),
            vec![
                ZeroRun { after: 0, len: 2, trailing: false },
                ZeroRun { after: 4, len: 1, trailing: true }
            ]
        );
    }

    #[test]
    fn distinct_real_roots() {
        assert_eq!(count_distinct_real_roots(&RatPoly::from_ints(&[1, 0, 1])), 0);
        assert_eq!(count_distinct_real_roots(&RatPoly::from_ints(&[0, -3, 0, 1])), 3);
        assert_eq!(count_distinct_real_roots(&RatPoly::from_ints(&[2, -3, 0, 1])), 2);
    }

    #[test]
    fn descartes_examples() {
        assert_eq!(descartes_positive_count(&RatPoly::from_ints(&[2, -3, 1])), 2);
        assert_eq!(descartes_positive_count(&RatPoly::from_ints(&[-1, 0, 1])), 1);
        // (T-1)^3 (T+1)
        let f = RatPoly::from_ints(&[-1, 1]).pow(3).mul_ref(&RatPoly::from_ints(&[1, 1]));
        assert_eq!(descartes_positive_count(&f), 3);
        assert_eq!(descartes_negative_count(&f), 1);
    }
}
