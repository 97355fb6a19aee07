//! `C_(n)` restricted to the wedge basis of the n-th exterior power of the
//! adjoint space, with exact traces of powers and eigenspace dimensions.
//!
//! The operator is stored as an integer matrix over a common denominator
//! and split into the connected components of its sparsity graph; every
//! trace and rank is computed block by block.

mod blocks;
mod projector;

pub use projector::{antisymmetrizer, full_projector_trace, full_projector_trace_scaled, GroupAlgebraElement};

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraId;
use crate::casimir::{PairTermSet, ScaledCasimir, SplitCasimirTensor};
use crate::error::{Error, Result};
use crate::exact::ExactInt;
use crate::linalg::PrimeSource;
use crate::rational::{binomial_usize, to_pq, Rational};

/// Configurable budgets; exceeding any of them is a `ResourceCap` error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest wedge basis that will be restricted (default `binomial(21, 5)`).
    pub max_wedge_dim: usize,
    /// Largest `dim^n` for the full-tensor projector route (default `8^5`).
    pub max_full_tensor_dim: usize,
    /// Largest wedge basis for eigenspace ranks (default `binomial(15, 5)`).
    pub max_spectrum_dim: usize,
    /// Largest power `k` in traces.
    pub max_trace_power: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_wedge_dim: 20349,
            max_full_tensor_dim: 32768,
            max_spectrum_dim: 3003,
            max_trace_power: 8,
        }
    }
}

impl Caps {
    pub fn is_positive(&self) -> bool {
        self.max_wedge_dim > 0 && self.max_full_tensor_dim > 0 && self.max_spectrum_dim > 0 && self.max_trace_power > 0
    }
}

/// Strictly increasing index tuples in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeBasis {
    dim_g: usize,
    n: usize,
    elements: Vec<u16>,
    /// `offsets[i][v]`: number of tuples whose entry at position `i` is
    /// below `v`, given the prefix; used for O(n) ranking.
    offsets: Vec<Vec<usize>>,
}

impl WedgeBasis {
    pub fn new(dim_g: usize, n: usize) -> Result<Self> {
        if !(2..=5).contains(&n) {
            return Err(Error::InternalConsistency(format!("tensor power {n} outside 2..=5")));
        }
        if dim_g == 0 || dim_g > u16::MAX as usize {
            return Err(Error::InternalConsistency(format!("algebra dimension {dim_g}")));
        }
        let mut elements = Vec::with_capacity(binomial_usize(dim_g, n) * n);
        let mut t: Vec<usize> = (0..n).collect();
        if n <= dim_g {
            loop {
                elements.extend(t.iter().map(|&x| x as u16));
                // next combination in lexicographic order
                let Some(i) = (0..n).rev().find(|&i| t[i] < dim_g - n + i) else {
                    break;
                };
                t[i] += 1;
                for j in i + 1..n {
                    t[j] = t[j - 1] + 1;
                }
            }
        }
        // offsets[i][v] = sum_{u < v} C(dim_g - 1 - u, n - 1 - i)
        let offsets = (0..n)
            .map(|i| {
                let mut row = vec![0usize; dim_g + 1];
                for v in 0..dim_g {
                    row[v + 1] = row[v] + binomial_usize(dim_g - 1 - v, n - 1 - i);
                }
                row
            })
            .collect();
        Ok(Self {
            dim_g,
            n,
            elements,
            offsets,
        })
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len() / self.n
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u16] {
        &self.elements[i * self.n..(i + 1) * self.n]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u16]> + '_ {
        self.elements.chunks(self.n)
    }

    /// Position of a strictly increasing tuple.
    pub fn index_of(&self, t: &[u16]) -> usize {
        let mut r = 0;
        let mut lo = 0;
        for (i, &v) in t.iter().enumerate() {
            let v = v as usize;
            r += self.offsets[i][v] - self.offsets[i][lo];
            lo = v + 1;
        }
        r
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Columns {
    Small(Vec<Vec<(u32, i64)>>),
    Big(Vec<Vec<(u32, BigInt)>>),
}

/// Sparse `C_(n)` on the wedge basis, `M = entries / denom`.
#[derive(Debug)]
pub struct WedgeOperator {
    algebra: Option<AlgebraId>,
    basis: WedgeBasis,
    denom: BigInt,
    cols: Columns,
    blocks: OnceLock<Blocks>,
}

#[derive(Debug, Clone)]
struct Blocks {
    members: Vec<Vec<u32>>,
    /// `(block, local position)` of every basis index.
    place: Vec<(u32, u32)>,
}

impl WedgeOperator {
    pub fn algebra(&self) -> Option<AlgebraId> {
        self.algebra
    }

    pub fn n(&self) -> usize {
        self.basis.n
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &WedgeBasis {
        &self.basis
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn nnz(&self) -> usize {
        match &self.cols {
            Columns::Small(c) => c.iter().map(Vec::len).sum(),
            Columns::Big(c) => c.iter().map(Vec::len).sum(),
        }
    }

    pub fn is_fixed_width(&self) -> bool {
        matches!(self.cols, Columns::Small(_))
    }

    /// `M[row, col]` as an exact rational.
    pub fn entry(&self, row: usize, col: usize) -> Rational {
        let num = match &self.cols {
            Columns::Small(c) => c[col]
                .iter()
                .find(|(r, _)| *r as usize == row)
                .map_or_else(|| BigInt::ZERO, |(_, v)| BigInt::from(*v)),
            Columns::Big(c) => c[col]
                .iter()
                .find(|(r, _)| *r as usize == row)
                .map_or_else(|| BigInt::ZERO, |(_, v)| v.clone()),
        };
        Rational::new(num, self.denom.clone())
    }

    /// Column as `(row, numerator)` pairs over [`Self::denom`].
    pub fn column(&self, col: usize) -> Vec<(usize, BigInt)> {
        match &self.cols {
            Columns::Small(c) => c[col].iter().map(|(r, v)| (*r as usize, BigInt::from(*v))).collect(),
            Columns::Big(c) => c[col].iter().map(|(r, v)| (*r as usize, v.clone())).collect(),
        }
    }

    /// Sizes of the invariant blocks, largest first.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks().members.iter().map(Vec::len).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    fn blocks(&self) -> &Blocks {
        self.blocks.get_or_init(|| {
            let size = self.size();
            let mut parent: Vec<u32> = (0..size as u32).collect();
            fn find(p: &mut [u32], mut x: u32) -> u32 {
                while p[x as usize] != x {
                    p[x as usize] = p[p[x as usize] as usize];
                    x = p[x as usize];
                }
                x
            }
            let mut link = |a: u32, b: u32| {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb) as usize] = ra.min(rb);
                }
            };
            match &self.cols {
                Columns::Small(c) => c
                    .iter()
                    .enumerate()
                    .for_each(|(j, col)| col.iter().for_each(|(r, _)| link(*r, j as u32))),
                Columns::Big(c) => c
                    .iter()
                    .enumerate()
                    .for_each(|(j, col)| col.iter().for_each(|(r, _)| link(*r, j as u32))),
            }
            let mut root_block = vec![u32::MAX; size];
            let mut members: Vec<Vec<u32>> = Vec::new();
            let mut place = vec![(0, 0); size];
            for i in 0..size as u32 {
                let r = find(&mut parent, i) as usize;
                if root_block[r] == u32::MAX {
                    root_block[r] = members.len() as u32;
                    members.push(Vec::new());
                }
                let b = root_block[r];
                place[i as usize] = (b, members[b as usize].len() as u32);
                members[b as usize].push(i);
            }
            Blocks { members, place }
        })
    }

    /// Dense numerator block in `T`; `None` if an entry does not fit.
    fn dense_block<T: ExactInt>(&self, block: usize) -> Option<Vec<T>> {
        let blocks = self.blocks();
        let members = &blocks.members[block];
        let b = members.len();
        let mut out = vec![T::zero(); b * b];
        for (lc, &gc) in members.iter().enumerate() {
            match &self.cols {
                Columns::Small(c) => {
                    for (r, v) in &c[gc as usize] {
                        let lr = blocks.place[*r as usize].1 as usize;
                        out[lr * b + lc] = T::from_big(&BigInt::from(*v))?;
                    }
                }
                Columns::Big(c) => {
                    for (r, v) in &c[gc as usize] {
                        let lr = blocks.place[*r as usize].1 as usize;
                        out[lr * b + lc] = T::from_big(v)?;
                    }
                }
            }
        }
        Some(out)
    }

    fn block_count(&self) -> usize {
        self.blocks().members.len()
    }
}

fn sort_with_sign(t: &mut [u16]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

fn restrict_columns<T: ExactInt>(
    c: &ScaledCasimir,
    basis: &WedgeBasis,
    pairs: &[(usize, usize)],
) -> Option<Vec<Vec<(u32, T)>>> {
    let n = basis.n();
    let slices: Vec<Vec<(u16, u16, T)>> = c
        .slices
        .iter()
        .map(|s| {
            s.iter()
                .map(|(a, b, v)| Some((*a, *b, T::from_big(v)?)))
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    let neg_one = T::from_big(&BigInt::from(-1))?;
    (0..basis.len())
        .into_par_iter()
        .map_init(
            || {
                (
                    vec![T::zero(); basis.len()],
                    Vec::<u32>::new(),
                    vec![false; basis.len()],
                )
            },
            |(acc, touched, seen), col| {
                let t = basis.get(col);
                let mut u = [0u16; 5];
                for &(p, q) in pairs {
                    let (p, q) = (p - 1, q - 1);
                    for (a, b, v) in &slices[t[p] as usize * c.dim + t[q] as usize] {
                        u[..n].copy_from_slice(t);
                        u[p] = *a;
                        u[q] = *b;
                        let Some(sign) = sort_with_sign(&mut u[..n]) else {
                            continue;
                        };
                        let row = basis.index_of(&u[..n]);
                        let term = if sign < 0 { v.mul(&neg_one)? } else { v.clone() };
                        acc[row] = acc[row].add(&term)?;
                        if !seen[row] {
                            seen[row] = true;
                            touched.push(row as u32);
                        }
                    }
                }
                touched.sort_unstable();
                let mut out = Vec::with_capacity(touched.len());
                for &r in touched.iter() {
                    let v = std::mem::replace(&mut acc[r as usize], T::zero());
                    seen[r as usize] = false;
                    if !v.is_zero() {
                        out.push((r, v));
                    }
                }
                touched.clear();
                Some(out)
            },
        )
        .collect()
}

/// Builds `C_(n)` on the wedge basis: each pair term acts on the slots of a
/// basis tuple and the result is re-sorted with its permutation sign; tuples
/// with a repeated index drop out.
pub fn restrict_casimir(c: &SplitCasimirTensor, basis: &WedgeBasis, caps: &Caps) -> Result<WedgeOperator> {
    restrict_scaled(&c.scaled(), None, basis, caps)
}

pub fn restrict_scaled(
    c: &ScaledCasimir,
    algebra: Option<AlgebraId>,
    basis: &WedgeBasis,
    caps: &Caps,
) -> Result<WedgeOperator> {
    if c.dim != basis.dim_g() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim_g(),
            actual: c.dim,
        });
    }
    if basis.len() > caps.max_wedge_dim {
        return Err(Error::ResourceCap(format!(
            "wedge dimension {} exceeds max_wedge_dim {}",
            basis.len(),
            caps.max_wedge_dim
        )));
    }
    let pairs = PairTermSet::new(basis.n()).pairs;
    let cols = match restrict_columns::<i64>(c, basis, &pairs) {
        Some(cols) => Columns::Small(cols),
        None => Columns::Big(restrict_columns::<BigInt>(c, basis, &pairs).expect("BigInt arithmetic cannot overflow")),
    };
    Ok(WedgeOperator {
        algebra,
        basis: basis.clone(),
        denom: c.denom.clone(),
        cols,
        blocks: OnceLock::new(),
    })
}

/// `Tr(M^k)` for `k = 0..=k_max`; entry 0 is the basis size.
pub fn trace_powers(op: &WedgeOperator, k_max: usize, caps: &Caps) -> Result<Vec<Rational>> {
    if k_max > caps.max_trace_power {
        return Err(Error::ResourceCap(format!(
            "trace power {k_max} exceeds max_trace_power {}",
            caps.max_trace_power
        )));
    }
    let sums: Vec<BigInt> = (0..op.block_count())
        .into_par_iter()
        .map(|b| {
            op.dense_block::<i128>(b)
                .and_then(|m| blocks::traces(&m, k_max))
                .unwrap_or_else(|| {
                    let m = op.dense_block::<BigInt>(b).expect("BigInt holds every entry");
                    blocks::traces(&m, k_max).expect("BigInt arithmetic cannot overflow")
                })
        })
        .reduce(
            || vec![BigInt::ZERO; k_max + 1],
            |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        );
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(Rational::from_integer(BigInt::from(op.size())));
    let mut scale = BigInt::one();
    for s in sums.into_iter().skip(1) {
        scale *= &op.denom;
        out.push(Rational::new(s, scale.clone()));
    }
    Ok(out)
}

pub fn trace_power(op: &WedgeOperator, k: usize, caps: &Caps) -> Result<Rational> {
    Ok(trace_powers(op, k, caps)?.pop().expect("k + 1 entries"))
}

/// Modular-rank settings for eigenspace dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankConfig {
    pub primes: Vec<u64>,
}

impl RankConfig {
    pub fn seeded(seed: u64, count: usize) -> Self {
        Self {
            primes: PrimeSource::new(seed).take(count.max(2)),
        }
    }
}

impl Default for RankConfig {
    fn default() -> Self {
        Self::seeded(0x5eed, 2)
    }
}

/// `dim ker(M - lambda I)`.
pub fn eigen_multiplicity(op: &WedgeOperator, lambda: &Rational, cfg: &RankConfig, caps: &Caps) -> Result<usize> {
    Ok(spectrum(op, std::slice::from_ref(lambda), cfg, caps)?[0].1)
}

/// Eigenspace dimension at each requested eigenvalue (duplicates removed).
pub fn spectrum(
    op: &WedgeOperator,
    lambdas: &[Rational],
    cfg: &RankConfig,
    caps: &Caps,
) -> Result<Vec<(Rational, usize)>> {
    if op.size() > caps.max_spectrum_dim {
        return Err(Error::ResourceCap(format!(
            "wedge dimension {} exceeds max_spectrum_dim {}",
            op.size(),
            caps.max_spectrum_dim
        )));
    }
    if cfg.primes.len() < 2 {
        return Err(Error::InternalConsistency("at least two primes are required".into()));
    }
    let mut distinct: Vec<Rational> = lambdas.to_vec();
    distinct.sort();
    distinct.dedup();
    let per_block: Vec<Vec<usize>> = (0..op.block_count())
        .into_par_iter()
        .map(|b| {
            let m = op.dense_block::<BigInt>(b).expect("BigInt holds every entry");
            blocks::kernel_dims(&m, &op.denom, &distinct, &cfg.primes)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(distinct
        .into_iter()
        .enumerate()
        .map(|(i, l)| (l, per_block.iter().map(|v| v[i]).sum()))
        .collect())
}

/// Whether `prod_j (M - r_j I) = 0` exactly.
pub fn annihilated_by(op: &WedgeOperator, roots: &[Rational]) -> bool {
    (0..op.block_count()).into_par_iter().all(|b| {
        let m = op.dense_block::<BigInt>(b).expect("BigInt holds every entry");
        blocks::annihilated(&m, &op.denom, roots)
    })
}

/// Dense rational copy; only for small operators in tests and oracles.
pub fn to_dense(op: &WedgeOperator) -> crate::linalg::RatMatrix {
    let n = op.size();
    let mut m = crate::linalg::RatMatrix::zeros(n, n);
    for col in 0..n {
        for (r, v) in op.column(col) {
            m[(r, col)] = Rational::new(v, op.denom.clone());
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRow {
    pub k: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumRow {
    pub lambda: String,
    pub mult: usize,
}

/// `{"algebra","n","traces":[{"k","value"}],"spectrum":[{"lambda","mult"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceTable {
    pub algebra: String,
    pub n: usize,
    pub traces: Vec<TraceRow>,
    pub spectrum: Vec<SpectrumRow>,
}

impl TraceTable {
    pub fn new(algebra: &str, n: usize, traces: &[Rational], spectrum: &[(Rational, usize)]) -> Self {
        Self {
            algebra: algebra.to_string(),
            n,
            traces: traces
                .iter()
                .enumerate()
                .map(|(k, v)| TraceRow { k, value: to_pq(v) })
                .collect(),
            spectrum: spectrum
                .iter()
                .map(|(l, m)| SpectrumRow {
                    lambda: to_pq(l),
                    mult: *m,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basis_counts() {
        assert_eq!(WedgeBasis::new(8, 3).unwrap().len(), 56);
        assert_eq!(WedgeBasis::new(3, 5).unwrap().len(), 0);
        assert_eq!(WedgeBasis::new(14, 5).unwrap().len(), 2002);
        assert!(WedgeBasis::new(8, 6).is_err());
    }

    #[test]
    fn basis_is_lexicographic() {
        let b = WedgeBasis::new(6, 3).unwrap();
        let tuples: Vec<Vec<u16>> = b.iter().map(<[u16]>::to_vec).collect();
        let mut sorted = tuples.clone();
        sorted.sort();
        assert_eq!(tuples, sorted);
        assert!(tuples.iter().all(|t| t.windows(2).all(|w| w[0] < w[1])));
        assert_eq!(tuples[0], vec![0, 1, 2]);
        assert_eq!(tuples.last().unwrap(), &vec![3, 4, 5]);
    }

    #[test]
    fn sign_of_sorting() {
        let mut t = [2, 0, 1];
        assert_eq!(sort_with_sign(&mut t), Some(1));
        let mut t = [1, 0, 2];
        assert_eq!(sort_with_sign(&mut t), Some(-1));
        assert_eq!(t, [0, 1, 2]);
        let mut t = [1, 3, 1];
        assert_eq!(sort_with_sign(&mut t), None);
    }

    proptest! {
        #[test]
        fn rank_inverts_enumeration(dim in 5usize..16, n in 2usize..6, pick in 0usize..100_000) {
            let b = WedgeBasis::new(dim, n).unwrap();
            prop_assume!(!b.is_empty());
            let i = pick % b.len();
            prop_assert_eq!(b.index_of(b.get(i)), i);
        }
    }
}
