//! Independent route to `Tr(ASym_n C_(n)^k)`: the antisymmetrizer is
//! expanded as a product of factors in the symmetric group algebra and the
//! trace is taken over the full tensor power, never touching the wedge
//! basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::Caps;
use crate::casimir::{PairTermSet, ScaledCasimir, SplitCasimirTensor};
use crate::error::{Error, Result};
use crate::exact::ExactInt;
use crate::rational::Rational;

/// Permutation as a slot map: `e_x` goes to `e_y` with `y[perm[i]] = x[i]`.
pub type Perm = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupAlgebraElement {
    pub terms: BTreeMap<Perm, Rational>,
}

impl GroupAlgebraElement {
    pub fn identity(n: usize) -> Self {
        Self::single((0..n as u8).collect(), Rational::one())
    }

    fn single(p: Perm, c: Rational) -> Self {
        Self {
            terms: BTreeMap::from([(p, c)]),
        }
    }

    /// Transposition of slots `m`, `n` (1-based).
    pub fn transposition(size: usize, m: usize, n: usize) -> Self {
        let mut p: Perm = (0..size as u8).collect();
        p.swap(m - 1, n - 1);
        Self::single(p, Rational::one())
    }

    pub fn add(&self, other: &Self, scale: &Rational) -> Self {
        let mut terms = self.terms.clone();
        for (p, c) in &other.terms {
            let e = terms.entry(p.clone()).or_insert_with(Rational::zero);
            *e += c * scale;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    /// Operator product `self * other` (`other` acts first).
    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Perm, Rational> = BTreeMap::new();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                let p: Perm = t.iter().map(|&i| s[i as usize]).collect();
                *terms.entry(p).or_insert_with(Rational::zero) += a * b;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::default().add(self, s)
    }
}

/// `1 - s(m-1,m) + s(m-2,m-1) s(m-1,m) - ... ± s(1,2) ... s(m-1,m)`.
fn factor(size: usize, m: usize) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::identity(size);
    let mut word = GroupAlgebraElement::identity(size);
    let mut sign = Rational::one();
    for j in (1..m).rev() {
        word = GroupAlgebraElement::transposition(size, j, j + 1).mul(&word);
        sign = -sign;
        out = out.add(&word, &sign);
    }
    out
}

/// `(1/n!) F_n F_{n-1} ... F_2` with the factors above.
pub fn antisymmetrizer(n: usize) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::identity(n);
    for m in (2..=n).rev() {
        out = out.mul(&factor(n, m));
    }
    let fact: u64 = (1..=n as u64).product();
    out.scale(&Rational::new(BigInt::one(), BigInt::from(fact)))
}

struct Tensor<'a, T> {
    d: usize,
    n: usize,
    pairs: Vec<(usize, usize)>,
    /// forward: `(j1,j2) -> [(i1,i2,v)]`; transposed: `(i1,i2) -> [(j1,j2,v)]`.
    fwd: &'a [Vec<(u16, u16, T)>],
    bwd: &'a [Vec<(u16, u16, T)>],
}

impl<T: ExactInt> Tensor<'_, T> {
    fn decode(&self, mut idx: u32, out: &mut [usize]) {
        for slot in out.iter_mut().rev() {
            *slot = idx as usize % self.d;
            idx /= self.d as u32;
        }
    }

    fn encode(&self, x: &[usize]) -> u32 {
        x.iter().fold(0u32, |a, &v| a * self.d as u32 + v as u32)
    }

    fn apply(&self, v: &[(u32, T)], transpose: bool, acc: &mut [T], touched: &mut Vec<u32>) -> Option<Vec<(u32, T)>> {
        let table = if transpose { self.bwd } else { self.fwd };
        let mut x = [0usize; 5];
        for (idx, val) in v {
            self.decode(*idx, &mut x[..self.n]);
            for &(p, q) in &self.pairs {
                let (p, q) = (p - 1, q - 1);
                let (xp, xq) = (x[p], x[q]);
                for (a, b, c) in &table[xp * self.d + xq] {
                    x[p] = *a as usize;
                    x[q] = *b as usize;
                    let j = self.encode(&x[..self.n]) as usize;
                    if acc[j].is_zero() {
                        touched.push(j as u32);
                    }
                    acc[j] = acc[j].mul_add(val, c)?;
                }
                x[p] = xp;
                x[q] = xq;
            }
        }
        let mut out = Vec::with_capacity(touched.len());
        for &j in touched.iter() {
            let v = std::mem::replace(&mut acc[j as usize], T::zero());
            if !v.is_zero() {
                out.push((j, v));
            }
        }
        touched.clear();
        out.sort_unstable_by_key(|e| e.0);
        out.dedup_by_key(|e| e.0);
        Some(out)
    }

    fn power(&self, x: u32, k: usize, transpose: bool, acc: &mut [T], touched: &mut Vec<u32>) -> Option<Vec<(u32, T)>> {
        let one = T::from_big(&BigInt::one())?;
        let mut v = vec![(x, one)];
        for _ in 0..k {
            v = self.apply(&v, transpose, acc, touched)?;
        }
        Some(v)
    }
}

fn projector_trace_in<T: ExactInt>(
    c: &ScaledCasimir,
    n: usize,
    k: usize,
    rows: &[(u32, Vec<(u32, BigInt)>)],
) -> Option<BigInt> {
    let convert = |s: &Vec<(u16, u16, BigInt)>| {
        s.iter()
            .map(|(a, b, v)| Some((*a, *b, T::from_big(v)?)))
            .collect::<Option<Vec<_>>>()
    };
    let fwd = c.slices.iter().map(convert).collect::<Option<Vec<_>>>()?;
    let mut bwd: Vec<Vec<(u16, u16, T)>> = vec![Vec::new(); c.dim * c.dim];
    for (j, s) in fwd.iter().enumerate() {
        for (a, b, v) in s {
            bwd[*a as usize * c.dim + *b as usize].push(((j / c.dim) as u16, (j % c.dim) as u16, v.clone()));
        }
    }
    let t = Tensor {
        d: c.dim,
        n,
        pairs: PairTermSet::new(n).pairs,
        fwd: &fwd,
        bwd: &bwd,
    };
    let total = c.dim.pow(n as u32);
    let a = k / 2;
    let b = k - a;
    rows.par_iter()
        .map_init(
            || (vec![T::zero(); total], Vec::new(), vec![T::zero(); total]),
            |(acc, touched, dense), (x, row)| {
                // sum_y P[x,y] <(C^T)^a e_y, C^b e_x>
                let w = t.power(*x, b, false, acc, touched)?;
                for (j, v) in &w {
                    dense[*j as usize] = v.clone();
                }
                let mut s = T::zero();
                for (y, p) in row {
                    let py = T::from_big(p)?;
                    for (z, u) in t.power(*y, a, true, acc, touched)? {
                        let wz = &dense[z as usize];
                        if !wz.is_zero() {
                            s = s.add(&py.mul(&u.mul(wz)?)?)?;
                        }
                    }
                }
                for (j, _) in &w {
                    dense[*j as usize] = T::zero();
                }
                Some(s.to_big())
            },
        )
        .try_reduce(|| BigInt::ZERO, |x, y| Some(x + y))
}

/// `Tr(ASym_n C_(n)^k)` over the full `dim^n` tensor space.
pub fn full_projector_trace(c: &SplitCasimirTensor, n: usize, k: usize, caps: &Caps) -> Result<Rational> {
    full_projector_trace_scaled(&c.scaled(), n, k, caps)
}

pub fn full_projector_trace_scaled(c: &ScaledCasimir, n: usize, k: usize, caps: &Caps) -> Result<Rational> {
    if !(2..=5).contains(&n) {
        return Err(Error::InternalConsistency(format!("tensor power {n} outside 2..=5")));
    }
    let total = c.dim.checked_pow(n as u32).unwrap_or(usize::MAX);
    if total > caps.max_full_tensor_dim {
        return Err(Error::ResourceCap(format!(
            "full tensor dimension {total} exceeds max_full_tensor_dim {}",
            caps.max_full_tensor_dim
        )));
    }
    if k > caps.max_trace_power {
        return Err(Error::ResourceCap(format!(
            "trace power {k} exceeds max_trace_power {}",
            caps.max_trace_power
        )));
    }
    let fact: u64 = (1..=n as u64).product();
    let proj = antisymmetrizer(n);
    let scaled: Vec<(Perm, BigInt)> = proj
        .terms
        .iter()
        .map(|(p, q)| {
            let v = q * Rational::from_integer(BigInt::from(fact));
            debug_assert!(v.is_integer());
            (p.clone(), v.to_integer())
        })
        .collect();
    // row x of n! * P: P e_y has coefficient c_t at t(y), so P[x,y] sums c_t
    // over slot maps with t(y) = x.
    let d = c.dim;
    let encode = |x: &[usize]| x.iter().fold(0u32, |a, &v| a * d as u32 + v as u32);
    let mut rows = Vec::new();
    let mut x = vec![0usize; n];
    for idx in 0..total as u32 {
        let mut r = idx as usize;
        for slot in x.iter_mut().rev() {
            *slot = r % d;
            r /= d;
        }
        let mut row: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (perm, coef) in &scaled {
            // y[i] = x[perm[i]]
            let y: Vec<usize> = (0..n).map(|i| x[perm[i] as usize]).collect();
            *row.entry(encode(&y)).or_insert(BigInt::ZERO) += coef;
        }
        let row: Vec<(u32, BigInt)> = row.into_iter().filter(|(_, v)| !Zero::is_zero(v)).collect();
        if !row.is_empty() {
            rows.push((idx, row));
        }
    }
    let sum = projector_trace_in::<i128>(c, n, k, &rows)
        .or_else(|| projector_trace_in::<BigInt>(c, n, k, &rows))
        .expect("BigInt arithmetic cannot overflow");
    let denom = BigInt::from(fact) * num_traits::pow(c.denom.clone(), k);
    Ok(Rational::new(sum, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sign(p: &Perm) -> i64 {
        let mut s = 1;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    s = -s;
                }
            }
        }
        s
    }

    #[test]
    fn product_expansion_is_the_signed_average() {
        for n in 2..=5 {
            let a = antisymmetrizer(n);
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(a.terms.len() as i64, fact);
            for (p, c) in &a.terms {
                assert_eq!(*c, Rational::new(sign(p).into(), fact.into()));
            }
            assert_eq!(a.mul(&a), a);
        }
    }

    #[test]
    fn transpositions_square_to_one() {
        let s = GroupAlgebraElement::transposition(3, 1, 2);
        assert_eq!(s.mul(&s), GroupAlgebraElement::identity(3));
    }
}
