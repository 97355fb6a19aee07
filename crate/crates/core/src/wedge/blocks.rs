//! Dense kernels on a single invariant block (row-major, square).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::ExactInt;
use crate::linalg::{bareiss_rank, rank_mod_p};
use crate::rational::Rational;

fn side<T>(m: &[T]) -> usize {
    let b = (m.len() as f64).sqrt().round() as usize;
    debug_assert_eq!(b * b, m.len());
    b
}

fn matmul<T: ExactInt>(x: &[T], y: &[T], b: usize) -> Option<Vec<T>> {
    let mut out = vec![T::zero(); b * b];
    for i in 0..b {
        for l in 0..b {
            let xil = &x[i * b + l];
            if xil.is_zero() {
                continue;
            }
            for j in 0..b {
                let ylj = &y[l * b + j];
                if !ylj.is_zero() {
                    out[i * b + j] = out[i * b + j].mul_add(xil, ylj)?;
                }
            }
        }
    }
    Some(out)
}

/// `Tr(B^k)` for `k = 0..=k_max` (entry 0 left at zero); `Tr(B^{a+c})` is
/// read off as the pairing of `B^a` with `(B^c)^T`, so only half the powers
/// are formed.
pub(super) fn traces<T: ExactInt>(m: &[T], k_max: usize) -> Option<Vec<BigInt>> {
    let b = side(m);
    let half = k_max.div_ceil(2).max(1);
    let mut powers = vec![m.to_vec()];
    while powers.len() < half {
        let next = matmul(powers.last().unwrap(), m, b)?;
        powers.push(next);
    }
    let mut out = vec![BigInt::ZERO; k_max + 1];
    for (k, slot) in out.iter_mut().enumerate().skip(1) {
        let a = k / 2;
        let c = k - a;
        let pc = &powers[c - 1];
        let mut t = T::zero();
        if a == 0 {
            for i in 0..b {
                t = t.add(&pc[i * b + i])?;
            }
        } else {
            let pa = &powers[a - 1];
            for i in 0..b {
                for j in 0..b {
                    let x = &pa[i * b + j];
                    if !x.is_zero() {
                        t = t.mul_add(x, &pc[j * b + i])?;
                    }
                }
            }
        }
        *slot = t.to_big();
    }
    Some(out)
}

/// `q A - p D I` for `lambda = p/q`, so that its kernel is the
/// `lambda`-eigenspace of `A / D`.
fn shifted(m: &[BigInt], denom: &BigInt, lambda: &Rational) -> Vec<BigInt> {
    let b = side(m);
    let q = lambda.denom();
    let pd = lambda.numer() * denom;
    let mut out: Vec<BigInt> = m.iter().map(|x| x * q).collect();
    for i in 0..b {
        out[i * b + i] -= &pd;
    }
    out
}

/// Kernel dimension at each eigenvalue: ranks modulo every prime, with exact
/// fraction-free elimination whenever the primes disagree.
pub(super) fn kernel_dims(m: &[BigInt], denom: &BigInt, lambdas: &[Rational], primes: &[u64]) -> Result<Vec<usize>> {
    let b = side(m);
    lambdas
        .iter()
        .map(|l| {
            let s = shifted(m, denom, l);
            let ranks: Vec<usize> = primes
                .iter()
                .map(|&p| rank_mod_p(s.iter().map(|x| x.residue(p)).collect(), b, b, p))
                .collect();
            let top = *ranks.iter().max().expect("at least one prime");
            if ranks.iter().all(|&r| r == top) {
                return Ok(b - top);
            }
            let rows = s.chunks(b).map(<[BigInt]>::to_vec).collect();
            let exact = bareiss_rank(rows);
            if exact < top {
                return Err(Error::ModularDisagreement(format!(
                    "exact rank {exact} below modular rank {top} at lambda {l}"
                )));
            }
            Ok(b - exact)
        })
        .collect()
}

pub(super) fn annihilated(m: &[BigInt], denom: &BigInt, roots: &[Rational]) -> bool {
    let b = side(m);
    let mut acc: Option<Vec<BigInt>> = None;
    for r in roots {
        let s = shifted(m, denom, r);
        acc = Some(match acc {
            None => s,
            Some(a) => matmul(&a, &s, b).expect("BigInt arithmetic cannot overflow"),
        });
    }
    acc.is_some_and(|a| a.iter().all(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn traces_of_small_block() {
        // [[1,2],[3,4]]: traces 5, 29, 155, 833 (Newton: p_k = 5 p_{k-1} + 2 p_{k-2})
        let t = traces(&[1i64, 2, 3, 4], 4).unwrap();
        assert_eq!(t[1..], big(&[5, 29, 155, 833])[..]);
        let t = traces(&big(&[1, 2, 3, 4]), 3).unwrap();
        assert_eq!(t[1..], big(&[5, 29, 155])[..]);
    }

    #[test]
    fn overflow_is_none() {
        assert!(traces(&[i64::MAX, 1, 1, 1], 2).is_none());
    }

    #[test]
    fn kernel_of_scaled_projector() {
        // M = diag(1, 1, 0) / 2 stored as diag(1,1,0) over 2
        let m = big(&[1, 0, 0, 0, 1, 0, 0, 0, 0]);
        let d = BigInt::from(2);
        let dims = kernel_dims(
            &m,
            &d,
            &[ratio(1, 2), ratio(0, 1), ratio(1, 3)],
            &[1_000_000_007, 998_244_353],
        )
        .unwrap();
        assert_eq!(dims, vec![2, 1, 0]);
        assert!(annihilated(&m, &d, &[ratio(1, 2), ratio(0, 1)]));
        assert!(!annihilated(&m, &d, &[ratio(1, 2)]));
    }
}
