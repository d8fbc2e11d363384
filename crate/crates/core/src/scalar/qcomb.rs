//! q-integers, q-factorials, Gaussian binomials and the inversion-count
//! polynomial S_m(q) = Σ_{σ ∈ S_m} q^{τ(σ)}.
//!
//! Two conventions are supported: `Gauss` uses (n)_q = (qⁿ−1)/(q−1) and
//! `Symmetric` uses [n]_q = (qⁿ−q⁻ⁿ)/(q−q⁻¹). Everything is evaluated
//! through polynomial forms — the Gauss q-integer as 1 + q + … + q^{n−1},
//! the binomial through the q-Pascal recurrence, and the symmetric variants
//! through [n]_b = b^{−(n−1)}(n)_{b²} — so root-of-unity evaluation points
//! never trigger a 0/0.

use itertools::Itertools;

use super::Scalar;
use crate::error::{Error, Result};

/// Default bound on permutation enumeration for [`s_m_polynomial`].
pub const DEFAULT_ENUMERATION_BOUND: u64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum QConvention {
    #[serde(rename = "gauss")]
    Gauss,
    #[serde(rename = "symmetric")]
    Symmetric,
}

/// The q-integer (n)_q or [n]_q.
pub fn q_int(n: u64, q: &Scalar, conv: QConvention) -> Result<Scalar> {
    match conv {
        QConvention::Gauss => {
            let mut acc = Scalar::zero();
            let mut p = Scalar::one();
            for _ in 0..n {
                acc = acc.add(&p);
                p = p.mul(q);
            }
            Ok(acc)
        }
        QConvention::Symmetric => {
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            if n == 0 {
                return Ok(Scalar::zero());
            }
            // [n]_b = b^{-(n-1)} (n)_{b²}
            let gauss = q_int(n, &q.mul(q), QConvention::Gauss)?;
            Ok(q.pow(-((n - 1) as i64)).mul(&gauss))
        }
    }
}

/// (n)_q! = ∏_{1 ≤ i ≤ n} (i)_q, with (0)_q! = 1 (and likewise for [n]_q!).
pub fn q_factorial(n: u64, q: &Scalar, conv: QConvention) -> Result<Scalar> {
    let mut acc = Scalar::one();
    for i in 1..=n {
        acc = acc.mul(&q_int(i, q, conv)?);
    }
    Ok(acc)
}

/// The Gaussian (resp. symmetric) binomial coefficient, computed through the
/// q-Pascal recurrence C(n,i) = C(n−1,i−1) + q^i·C(n−1,i) rather than by
/// factorial division.
pub fn q_binomial(n: u64, i: u64, q: &Scalar, conv: QConvention) -> Result<Scalar> {
    if i > n {
        return Err(Error::Argument(format!(
            "q_binomial requires 0 <= i <= n, got n={n}, i={i}"
        )));
    }
    match conv {
        QConvention::Gauss => Ok(gauss_binomial(n, i, q)),
        QConvention::Symmetric => {
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            // [n over i]_b = b^{-i(n-i)} (n over i)_{b²}
            let g = gauss_binomial(n, i, &q.mul(q));
            Ok(q.pow(-((i * (n - i)) as i64)).mul(&g))
        }
    }
}

fn gauss_binomial(n: u64, i: u64, q: &Scalar) -> Scalar {
    // Row-by-row q-Pascal triangle.
    let mut row: Vec<Scalar> = vec![Scalar::one()];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for k in 0..=row.len() {
            let mut entry = if k >= 1 { row[k - 1].clone() } else { Scalar::zero() };
            if k < row.len() {
                entry = entry.add(&q.pow(k as i64).mul(&row[k]));
            }
            next.push(entry);
        }
        row = next;
    }
    row[i as usize].clone()
}

/// τ(σ) = |{(i,j) : i < j, σ(i) > σ(j)}| for a permutation of {1..n}.
pub fn inversion_count(perm: &[usize]) -> Result<u64> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p < 1 || p > n || seen[p - 1] {
            return Err(Error::Argument(format!(
                "not a permutation of 1..{n}: {perm:?}"
            )));
        }
        seen[p - 1] = true;
    }
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// S_m(q) = Σ_{σ ∈ S_m} q^{τ(σ)}, by direct enumeration of all m!
/// permutations.
pub fn s_m_polynomial(m: u64, q: &Scalar) -> Result<Scalar> {
    s_m_polynomial_with_bound(m, q, DEFAULT_ENUMERATION_BOUND)
}

pub fn s_m_polynomial_with_bound(m: u64, q: &Scalar, bound: u64) -> Result<Scalar> {
    if m > bound {
        return Err(Error::BoundExceeded(format!(
            "s_m_polynomial enumeration bound is {bound}, got m={m}"
        )));
    }
    if m == 0 {
        return Ok(Scalar::one());
    }
    // Group permutations by inversion count, then evaluate.
    let m = m as usize;
    let mut counts = vec![0u64; m * (m - 1) / 2 + 1];
    for perm in (1..=m).permutations(m) {
        counts[inversion_count(&perm)? as usize] += 1;
    }
    let mut acc = Scalar::zero();
    let mut p = Scalar::one();
    for c in counts {
        if c > 0 {
            acc = acc.add(&p.mul(&Scalar::int(c as i64)));
        }
        p = p.mul(q);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_factorial_base_cases() {
        let q = Scalar::q();
        assert_eq!(q_factorial(0, &q, QConvention::Gauss).unwrap(), Scalar::one());
        // (3)_q! = 1·(1+q)·(1+q+q²)
        let expected = Scalar::one()
            .add(&q)
            .mul(&Scalar::one().add(&q).add(&q.pow(2)));
        assert_eq!(q_factorial(3, &q, QConvention::Gauss).unwrap(), expected);
    }

    #[test]
    fn q_factorial_vanishes_at_root_of_unity() {
        for n in [2u64, 3, 5] {
            let z = Scalar::zeta(n);
            assert!(q_factorial(n, &z, QConvention::Gauss).unwrap().is_zero());
            assert!(!q_factorial(n - 1, &z, QConvention::Gauss).unwrap().is_zero());
        }
    }

    #[test]
    fn q_binomial_examples() {
        let q = Scalar::q();
        assert_eq!(
            q_binomial(2, 1, &q, QConvention::Gauss).unwrap(),
            Scalar::one().add(&q)
        );
        // [2 over 1]_q = q + q⁻¹
        assert_eq!(
            q_binomial(2, 1, &q, QConvention::Symmetric).unwrap(),
            q.add(&q.inv().unwrap())
        );
        // (4 over 2)_q = 1 + q + 2q² + q³ + q⁴
        let expected = Scalar::one()
            .add(&q)
            .add(&q.pow(2).mul(&Scalar::int(2)))
            .add(&q.pow(3))
            .add(&q.pow(4));
        assert_eq!(q_binomial(4, 2, &q, QConvention::Gauss).unwrap(), expected);
        assert!(q_binomial(2, 3, &q, QConvention::Gauss).is_err());
    }

    #[test]
    fn q_binomial_matches_factorial_quotient_when_defined() {
        let q = Scalar::q();
        for n in 0..=6u64 {
            for i in 0..=n {
                let lhs = q_binomial(n, i, &q, QConvention::Gauss).unwrap();
                let quot = q_factorial(n, &q, QConvention::Gauss)
                    .unwrap()
                    .div(
                        &q_factorial(i, &q, QConvention::Gauss)
                            .unwrap()
                            .mul(&q_factorial(n - i, &q, QConvention::Gauss).unwrap()),
                    )
                    .unwrap();
                assert_eq!(lhs, quot, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn symmetric_binomial_at_one_is_classical() {
        let one = Scalar::one();
        assert_eq!(
            q_binomial(4, 2, &one, QConvention::Symmetric).unwrap(),
            Scalar::int(6)
        );
        assert_eq!(q_int(5, &one, QConvention::Symmetric).unwrap(), Scalar::int(5));
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(inversion_count(&[1, 2, 3, 4]).unwrap(), 0);
        assert_eq!(inversion_count(&[4, 3, 2, 1]).unwrap(), 6);
        assert_eq!(inversion_count(&[2, 3, 1]).unwrap(), 2);
        assert!(inversion_count(&[1, 1]).is_err());
    }

    #[test]
    fn s_m_small_cases() {
        let q = Scalar::q();
        assert_eq!(s_m_polynomial(1, &q).unwrap(), Scalar::one());
        assert_eq!(s_m_polynomial(2, &q).unwrap(), Scalar::one().add(&q));
        // S_3 = 1 + 2q + 2q² + q³
        let expected = Scalar::one()
            .add(&q.mul(&Scalar::int(2)))
            .add(&q.pow(2).mul(&Scalar::int(2)))
            .add(&q.pow(3));
        assert_eq!(s_m_polynomial(3, &q).unwrap(), expected);
        assert!(s_m_polynomial(9, &q).is_err());
    }
}
