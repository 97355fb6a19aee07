//! The split 2-Casimir tensor `C^{i1 i2}_{j1 j2} = g^ab (ad X_a)^{i1}_{j1} (ad X_b)^{i2}_{j2}`
//! and its pair insertions into tensor powers.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{AdjointRep, KillingMetric};
use crate::error::{Error, Result};
use crate::rational::{to_pq, Rational};

/// Dense storage up to this algebra dimension (16^4 = 65536 entries).
pub const DENSE_DIM_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Storage {
    Dense(Vec<Rational>),
    Sparse(HashMap<[u16; 4], Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCasimirTensor {
    dim: usize,
    storage: Storage,
    /// `slices[j1 * dim + j2]`: nonzero `(i1, i2, value)` in lexicographic order.
    slices: Vec<Vec<(u16, u16, Rational)>>,
}

impl SplitCasimirTensor {
    fn from_slices(dim: usize, slices: Vec<Vec<(u16, u16, Rational)>>) -> Self {
        let storage = if dim <= DENSE_DIM_LIMIT {
            let mut dense = vec![Rational::zero(); dim.pow(4)];
            for (js, slice) in slices.iter().enumerate() {
                let (j1, j2) = (js / dim, js % dim);
                for (i1, i2, v) in slice {
                    dense[Self::flat(dim, *i1 as usize, *i2 as usize, j1, j2)] = v.clone();
                }
            }
            Storage::Dense(dense)
        } else {
            let mut map = HashMap::new();
            for (js, slice) in slices.iter().enumerate() {
                let (j1, j2) = (js / dim, js % dim);
                for (i1, i2, v) in slice {
                    map.insert([*i1, *i2, j1 as u16, j2 as u16], v.clone());
                }
            }
            Storage::Sparse(map)
        };
        Self { dim, storage, slices }
    }

    fn flat(dim: usize, i1: usize, i2: usize, j1: usize, j2: usize) -> usize {
        ((i1 * dim + i2) * dim + j1) * dim + j2
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.storage, Storage::Dense(_))
    }

    /// `C^{i1 i2}_{j1 j2}`.
    pub fn get(&self, i1: usize, i2: usize, j1: usize, j2: usize) -> Rational {
        match &self.storage {
            Storage::Dense(v) => v[Self::flat(self.dim, i1, i2, j1, j2)].clone(),
            Storage::Sparse(m) => m
                .get(&[i1 as u16, i2 as u16, j1 as u16, j2 as u16])
                .cloned()
                .unwrap_or_else(Rational::zero),
        }
    }

    /// Column `(j1, j2)`: nonzero `(i1, i2, C^{i1 i2}_{j1 j2})`.
    pub fn slice(&self, j1: usize, j2: usize) -> &[(u16, u16, Rational)] {
        &self.slices[j1 * self.dim + j2]
    }

    pub fn nnz(&self) -> usize {
        self.slices.iter().map(Vec::len).sum()
    }

    /// Nonzero entries ordered by `(j1, j2, i1, i2)`.
    pub fn entries(&self) -> impl Iterator<Item = ([usize; 4], &Rational)> + '_ {
        self.slices.iter().enumerate().flat_map(move |(js, s)| {
            let (j1, j2) = (js / self.dim, js % self.dim);
            s.iter()
                .map(move |(i1, i2, v)| ([*i1 as usize, *i2 as usize, j1, j2], v))
        })
    }

    /// Integer form `C = entries / denom` with `denom > 0` the lcm of all
    /// denominators.
    pub fn scaled(&self) -> ScaledCasimir {
        let mut denom = BigInt::one();
        for (_, v) in self.entries() {
            denom = denom.lcm(v.denom());
        }
        let slices = self
            .slices
            .iter()
            .map(|s| {
                s.iter()
                    .map(|(i1, i2, v)| (*i1, *i2, (v * Rational::from_integer(denom.clone())).to_integer()))
                    .collect()
            })
            .collect();
        ScaledCasimir {
            dim: self.dim,
            denom,
            slices,
        }
    }

    /// `[[i1, i2, j1, j2, "p/q"], ...]`.
    pub fn dump(&self) -> Vec<(usize, usize, usize, usize, String)> {
        self.entries()
            .map(|([i1, i2, j1, j2], v)| (i1, i2, j1, j2, to_pq(v)))
            .collect()
    }
}

/// `C_(2)` with a common denominator pulled out.
#[derive(Debug, Clone)]
pub struct ScaledCasimir {
    pub dim: usize,
    pub denom: BigInt,
    pub slices: Vec<Vec<(u16, u16, BigInt)>>,
}

impl ScaledCasimir {
    pub fn slice(&self, j1: usize, j2: usize) -> &[(u16, u16, BigInt)] {
        &self.slices[j1 * self.dim + j2]
    }
}

pub fn split_casimir_2(adj: &AdjointRep, metric: &KillingMetric) -> Result<SplitCasimirTensor> {
    let d = adj.dim();
    if metric.g_inv.rows() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            actual: metric.g_inv.rows(),
        });
    }
    // raised[b] = sum_a g^ab ad_a, kept sparse
    let sparse = |m: &crate::linalg::RatMatrix| -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if !m[(i, j)].is_zero() {
                    out.push((i, j, m[(i, j)].clone()));
                }
            }
        }
        out
    };
    let ad: Vec<_> = adj.matrices.iter().map(sparse).collect();
    let mut acc: BTreeMap<(usize, usize, usize, usize), Rational> = BTreeMap::new();
    for b in 0..d {
        let mut raised: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for a in 0..d {
            let w = &metric.g_inv[(a, b)];
            if w.is_zero() {
                continue;
            }
            for (i, j, v) in &ad[a] {
                *raised.entry((*i, *j)).or_insert_with(Rational::zero) += w * v;
            }
        }
        for ((i1, j1), x) in raised.iter().filter(|(_, x)| !x.is_zero()) {
            for (i2, j2, y) in &ad[b] {
                *acc.entry((*j1, *j2, *i1, *i2)).or_insert_with(Rational::zero) += x * y;
            }
        }
    }
    let mut slices = vec![Vec::new(); d * d];
    for ((j1, j2, i1, i2), v) in acc {
        if !v.is_zero() {
            slices[j1 * d + j2].push((i1 as u16, i2 as u16, v));
        }
    }
    Ok(SplitCasimirTensor::from_slices(d, slices))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    /// Exact residual (sum of absolute deviations for the families of sums).
    pub residual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CasimirReport {
    pub dim: usize,
    pub checks: Vec<IdentityCheck>,
}

impl CasimirReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn check(name: &str, expected: Rational, actual: Rational) -> IdentityCheck {
    let residual = &actual - &expected;
    IdentityCheck {
        name: name.to_string(),
        expected: to_pq(&expected),
        actual: to_pq(&actual),
        pass: residual.is_zero(),
        residual: to_pq(&residual),
    }
}

/// Trace identities of the split 2-Casimir, each with its exact residual.
///
/// The `C^{ii}_{jj}` contraction pairs the two upper and the two lower
/// indices, so it goes through the metric: `g_{i1 i2} g^{j1 j2} C^{i1 i2}_{j1 j2}`.
/// In a basis with `g` proportional to the identity this is the plain sum.
pub fn verify_casimir_identities(c: &SplitCasimirTensor, metric: &KillingMetric) -> CasimirReport {
    let d = c.dim;
    let dim = Rational::from_integer(BigInt::from(d));
    let full: Rational = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .map(|(i, j)| c.get(i, j, j, i))
        .sum();
    let mut crossed = Rational::zero();
    for ([i1, i2, j1, j2], v) in c.entries() {
        let w = &metric.g[(i1, i2)] * &metric.g_inv[(j1, j2)];
        if !w.is_zero() {
            crossed += v * w;
        }
    }
    let mut left = Rational::zero();
    let mut right = Rational::zero();
    for j in 0..d {
        for l in 0..d {
            let s: Rational = (0..d).map(|i| c.get(i, j, i, l)).sum();
            left += s.abs();
            let s: Rational = (0..d).map(|i| c.get(j, i, l, i)).sum();
            right += s.abs();
        }
    }
    let mut asym = Rational::zero();
    for ([i1, i2, j1, j2], v) in c.entries() {
        asym += (v - c.get(i2, i1, j2, j1)).abs();
    }
    CasimirReport {
        dim: d,
        checks: vec![
            check("C^{ij}_{ji} = dim g", dim.clone(), full),
            check("C^{ii}_{jj} = -dim g", -dim, crossed),
            check("C^{ij}_{il} = 0", Rational::zero(), left),
            check("C^{il}_{jl} = 0", Rational::zero(), right),
            check("C^{i1 i2}_{j1 j2} = C^{i2 i1}_{j2 j1}", Rational::zero(), asym),
        ],
    }
}

/// The `n(n-1)/2` slot pairs `(i, j)`, `1 <= i < j <= n`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTermSet {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl PairTermSet {
    pub fn new(n: usize) -> Self {
        let pairs = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Self { n, pairs }
    }
}

/// Sparse vector in the `dim^n` tensor power, keyed by index tuples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorVector {
    pub entries: BTreeMap<Vec<usize>, Rational>,
}

impl TensorVector {
    pub fn basis(index: &[usize]) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(index.to_vec(), Rational::one());
        Self { entries }
    }

    pub fn add_scaled(&mut self, other: &TensorVector, s: &Rational) {
        for (k, v) in &other.entries {
            let e = self.entries.entry(k.clone()).or_insert_with(Rational::zero);
            *e += v * s;
        }
        self.entries.retain(|_, v| !v.is_zero());
    }

    pub fn get(&self, index: &[usize]) -> Rational {
        self.entries.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    /// Permutes slots: the entry at `x` moves to `y` with `y[perm[s]] = x[s]`.
    pub fn permute_slots(&self, perm: &[usize]) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(k, v)| {
                let mut y = vec![0; k.len()];
                for (s, &t) in perm.iter().enumerate() {
                    y[t] = k[s];
                }
                (y, v.clone())
            })
            .collect();
        Self { entries }
    }
}

/// `C_ij` on slots `i < j` (1-based) of an `n`-fold tensor, identity elsewhere.
pub fn pair_apply(c: &SplitCasimirTensor, n: usize, (i, j): (usize, usize), v: &TensorVector) -> Result<TensorVector> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::SlotOutOfRange { i, j, n });
    }
    let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for (idx, coeff) in &v.entries {
        if idx.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: idx.len(),
            });
        }
        for (a, b, w) in c.slice(idx[i - 1], idx[j - 1]) {
            let mut k = idx.clone();
            k[i - 1] = *a as usize;
            k[j - 1] = *b as usize;
            *out.entry(k).or_insert_with(Rational::zero) += coeff * w;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(TensorVector { entries: out })
}

/// `C_(n) v = sum over all slot pairs`.
pub fn split_casimir_apply(c: &SplitCasimirTensor, n: usize, v: &TensorVector) -> Result<TensorVector> {
    let mut out = TensorVector::default();
    for pair in PairTermSet::new(n).pairs {
        out.add_scaled(&pair_apply(c, n, pair, v)?, &Rational::one());
    }
    Ok(out)
}

/// First `a` for which `C_(2)` fails to commute with `ad X_a (x) 1 + 1 (x) ad X_a`.
pub fn invariance_violation(c: &SplitCasimirTensor, adj: &AdjointRep) -> Option<usize> {
    let d = c.dim;
    let coproduct = |a: usize, v: &TensorVector| -> TensorVector {
        let m = &adj.matrices[a];
        let mut out = TensorVector::default();
        for (k, x) in &v.entries {
            for r in 0..d {
                let w = &m[(r, k[0])];
                if !w.is_zero() {
                    out.add_scaled(&TensorVector::basis(&[r, k[1]]), &(x * w));
                }
                let w = &m[(r, k[1])];
                if !w.is_zero() {
                    out.add_scaled(&TensorVector::basis(&[k[0], r]), &(x * w));
                }
            }
        }
        out
    };
    for a in 0..d {
        for j1 in 0..d {
            for j2 in 0..d {
                let e = TensorVector::basis(&[j1, j2]);
                let lhs = coproduct(a, &pair_apply(c, 2, (1, 2), &e).ok()?);
                let rhs = pair_apply(c, 2, (1, 2), &coproduct(a, &e)).ok()?;
                if lhs != rhs {
                    return Some(a);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, AlgebraId};
    use crate::rational::int;

    fn tensor(id: AlgebraId) -> (Algebra, SplitCasimirTensor) {
        let alg = Algebra::build(id).unwrap();
        let c = split_casimir_2(&alg.adjoint, &alg.metric).unwrap();
        (alg, c)
    }

    #[test]
    fn sl2_traces() {
        let (alg, c) = tensor(AlgebraId::Sl(2));
        let report = verify_casimir_identities(&c, &alg.metric);
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.checks[1].actual, "-3/1");
    }

    #[test]
    fn identities_for_each_family() {
        for (id, trace) in [
            (AlgebraId::Sl(3), "8/1"),
            (AlgebraId::So(5), "10/1"),
            (AlgebraId::G2, "14/1"),
        ] {
            let (alg, c) = tensor(id);
            let report = verify_casimir_identities(&c, &alg.metric);
            assert!(report.all_pass(), "{id}: {report:?}");
            assert_eq!(report.checks[0].actual, trace);
        }
    }

    #[test]
    fn sparse_storage_above_limit() {
        let (alg, c) = tensor(AlgebraId::Sp(6));
        assert!(!c.is_dense());
        assert!(verify_casimir_identities(&c, &alg.metric).all_pass());
    }

    #[test]
    fn casimir_is_invariant() {
        for id in [AlgebraId::Sl(2), AlgebraId::Sl(3), AlgebraId::So(5)] {
            let (alg, c) = tensor(id);
            assert_eq!(invariance_violation(&c, &alg.adjoint), None, "{id}");
        }
    }

    #[test]
    fn pair_apply_on_basis_vector() {
        let (_, c) = tensor(AlgebraId::Sl(2));
        let v = pair_apply(&c, 2, (1, 2), &TensorVector::basis(&[0, 2])).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(v.get(&[i, j]), c.get(i, j, 0, 2));
            }
        }
        assert!(matches!(
            pair_apply(&c, 2, (2, 3), &v),
            Err(Error::SlotOutOfRange { .. })
        ));
        assert!(pair_apply(&c, 3, (2, 2), &v).is_err());
    }

    #[test]
    fn pair_terms_count() {
        assert_eq!(PairTermSet::new(5).pairs.len(), 10);
        assert_eq!(PairTermSet::new(5).pairs[4], (2, 3));
    }

    #[test]
    fn n2_sum_has_trace_dim() {
        let (_, c) = tensor(AlgebraId::Sl(2));
        // trace of C_(2) composed with the swap, summed over basis vectors
        let mut t = Rational::zero();
        for k in 0..3 {
            for l in 0..3 {
                let v = split_casimir_apply(&c, 2, &TensorVector::basis(&[k, l])).unwrap();
                t += v.get(&[l, k]);
            }
        }
        assert_eq!(t, int(3));
    }

    #[test]
    fn swap_relabeling_symmetry() {
        // C_13 followed by swapping slots 1 and 3 equals swapping first.
        let (_, c) = tensor(AlgebraId::Sl(3));
        let swap = [2, 1, 0];
        let v = TensorVector::basis(&[0, 4, 7]);
        let lhs = pair_apply(&c, 3, (1, 3), &v).unwrap().permute_slots(&swap);
        let rhs = pair_apply(&c, 3, (1, 3), &v.permute_slots(&swap)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn scaled_form_is_integral() {
        let (_, c) = tensor(AlgebraId::Sl(3));
        let s = c.scaled();
        assert!(s.denom > BigInt::zero());
        let (i1, i2, v) = &s.slice(0, 0).first().cloned().unwrap();
        assert_eq!(
            Rational::new(v.clone(), s.denom.clone()),
            c.get(*i1 as usize, *i2 as usize, 0, 0)
        );
    }
}
