//! Gaussian binomial coefficients at a concrete rational parameter.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// `(n, k)_q` computed by the q-Pascal recursion
/// `(n,k)_q = (n-1,k-1)_q + q^k (n-1,k)_q`,
/// which avoids dividing by q-integers that may vanish.
pub fn q_binomial(n: u32, k: u32, q: &Scalar) -> Result<Scalar> {
    if k > n {
        return Err(Error::Domain(format!("q-binomial with k = {k} > n = {n}")));
    }
    if q.is_zero() {
        return Err(Error::Domain("q-binomial at q = 0".into()));
    }
    // row[j] = (m, j)_q, grown row by row
    let mut row: Vec<Scalar> = vec![scalar::one()];
    for _m in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(scalar::one());
        let mut qk = q.clone();
        for j in 1..row.len() {
            next.push(row[j - 1].clone() + qk.clone() * row[j].clone());
            qk *= q;
        }
        next.push(scalar::one());
        row = next;
    }
    Ok(row[k as usize].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{from_i64, ratio};

    #[test]
    fn edge_and_hand_values() {
        let q = from_i64(2);
        // (n, 0)_q = 1: empty product
        assert_eq!(q_binomial(5, 0, &q).unwrap(), from_i64(1));
        // (2, 1)_q = 1 + q by the recursion
        assert_eq!(q_binomial(2, 1, &q).unwrap(), from_i64(3));
        assert_eq!(q_binomial(2, 1, &ratio(1, 3)).unwrap(), ratio(4, 3));
        // (2, 1)_{-1} = 0
        assert_eq!(q_binomial(2, 1, &from_i64(-1)).unwrap(), from_i64(0));
    }

    #[test]
    fn domain_errors() {
        assert!(q_binomial(1, 2, &from_i64(2)).is_err());
        assert!(q_binomial(2, 1, &from_i64(0)).is_err());
    }

    #[test]
    fn q_pascal_identity() {
        // (n,k)_q = (n-1,k-1)_q + q^k (n-1,k)_q for n <= 6 and sampled q
        for q in [from_i64(-1), from_i64(2), ratio(1, 3)] {
            for n in 1u32..=6 {
                for k in 1..n {
                    let lhs = q_binomial(n, k, &q).unwrap();
                    let qk = crate::scalar::pow_i(&q, k as i64).unwrap();
                    let rhs = q_binomial(n - 1, k - 1, &q).unwrap()
                        + qk * q_binomial(n - 1, k, &q).unwrap();
                    assert_eq!(lhs, rhs, "q-Pascal failed at n={n}, k={k}");
                }
            }
        }
    }

    #[test]
    fn integer_specialization() {
        // At q = 1 the Gaussian binomial is the ordinary binomial.
        let q = from_i64(1);
        assert_eq!(q_binomial(6, 3, &q).unwrap(), from_i64(20));
    }
}
