//! Simple Lie algebras in exact arithmetic: structure constants, the
//! adjoint representation and the Cartan-Killing metric.

mod classical;
mod g2;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::rational::{parse_pq, to_pq, Rational};

/// Largest algebra dimension the builder will construct (so(8)).
pub const MAX_CONSTRUCTED_DIM: usize = 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    /// sl(N), N >= 2.
    Sl(usize),
    /// so(N), N >= 3.
    So(usize),
    /// sp(N) with N = 2r the size of the defining matrices.
    Sp(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    SL,
    SO,
    SP,
    Exceptional,
}

impl AlgebraId {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            AlgebraId::Sl(n) => n >= 2,
            AlgebraId::So(n) => n >= 3,
            AlgebraId::Sp(n) => n >= 2 && n % 2 == 0,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::UnsupportedAlgebra(format!("{self} has an invalid parameter")))
        }
    }

    pub fn dim(self) -> usize {
        match self {
            AlgebraId::Sl(n) => n * n - 1,
            AlgebraId::So(n) => n * (n - 1) / 2,
            AlgebraId::Sp(n) => n * (n + 1) / 2,
            AlgebraId::G2 => 14,
            AlgebraId::F4 => 52,
            AlgebraId::E6 => 78,
            AlgebraId::E7 => 133,
            AlgebraId::E8 => 248,
        }
    }

    pub fn family(self) -> Family {
        match self {
            AlgebraId::Sl(_) => Family::SL,
            AlgebraId::So(_) => Family::SO,
            AlgebraId::Sp(_) => Family::SP,
            _ => Family::Exceptional,
        }
    }

    pub fn parameter(self) -> Option<usize> {
        match self {
            AlgebraId::Sl(n) | AlgebraId::So(n) | AlgebraId::Sp(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_exceptional(self) -> bool {
        self.family() == Family::Exceptional
    }

    /// Whether tensors for this algebra can be built at all (f4..e8 cannot).
    pub fn is_constructible(self) -> bool {
        !matches!(self, AlgebraId::F4 | AlgebraId::E6 | AlgebraId::E7 | AlgebraId::E8)
            && self.dim() <= MAX_CONSTRUCTED_DIM
    }

    pub const EXCEPTIONAL: [AlgebraId; 5] = [
        AlgebraId::G2,
        AlgebraId::F4,
        AlgebraId::E6,
        AlgebraId::E7,
        AlgebraId::E8,
    ];
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraId::Sl(n) => write!(f, "sl{n}"),
            AlgebraId::So(n) => write!(f, "so{n}"),
            AlgebraId::Sp(n) => write!(f, "sp{n}"),
            AlgebraId::G2 => f.write_str("g2"),
            AlgebraId::F4 => f.write_str("f4"),
            AlgebraId::E6 => f.write_str("e6"),
            AlgebraId::E7 => f.write_str("e7"),
            AlgebraId::E8 => f.write_str("e8"),
        }
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ' ' | '_'))
            .collect::<String>()
            .to_ascii_lowercase();
        let id = match t.as_str() {
            "g2" => AlgebraId::G2,
            "f4" => AlgebraId::F4,
            "e6" => AlgebraId::E6,
            "e7" => AlgebraId::E7,
            "e8" => AlgebraId::E8,
            _ => {
                let (fam, rest) = t.split_at(t.len().min(2));
                let n: usize = rest.parse().map_err(|_| Error::UnsupportedAlgebra(s.to_string()))?;
                match fam {
                    "sl" => AlgebraId::Sl(n),
                    "so" => AlgebraId::So(n),
                    "sp" => AlgebraId::Sp(n),
                    _ => return Err(Error::UnsupportedAlgebra(s.to_string())),
                }
            }
        };
        id.validate()
    }
}

impl Serialize for AlgebraId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AlgebraId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Sparse `f_ab^c` with `[X_a, X_b] = f_ab^c X_c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    algebra: Option<AlgebraId>,
    dim: usize,
    /// `brackets[a * dim + b]` lists the nonzero `(c, f_ab^c)`, sorted by `c`.
    brackets: Vec<Vec<(usize, Rational)>>,
}

impl StructureConstants {
    /// Builds from raw `(a, b, c, value)` triples. Zero values are dropped and
    /// repeated triples are summed; no Lie-algebra axioms are checked here.
    pub fn from_entries(
        algebra: Option<AlgebraId>,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut brackets = vec![Vec::<(usize, Rational)>::new(); dim * dim];
        for (a, b, c, v) in entries {
            if a >= dim || b >= dim || c >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: a.max(b).max(c) + 1,
                });
            }
            let slot = &mut brackets[a * dim + b];
            match slot.iter_mut().find(|(k, _)| *k == c) {
                Some((_, x)) => *x += v,
                None => slot.push((c, v)),
            }
        }
        for slot in &mut brackets {
            slot.retain(|(_, v)| !v.is_zero());
            slot.sort_by_key(|(c, _)| *c);
        }
        Ok(Self { algebra, dim, brackets })
    }

    pub fn algebra(&self) -> Option<AlgebraId> {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.brackets[a * self.dim + b]
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> Rational {
        self.bracket(a, b)
            .iter()
            .find(|(k, _)| *k == c)
            .map_or_else(Rational::zero, |(_, v)| v.clone())
    }

    /// Nonzero entries in lexicographic `(a, b, c)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        (0..self.dim).flat_map(move |a| {
            (0..self.dim).flat_map(move |b| self.bracket(a, b).iter().map(move |(c, v)| (a, b, *c, v)))
        })
    }

    pub fn nnz(&self) -> usize {
        self.brackets.iter().map(Vec::len).sum()
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vectors(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let w = xa * yb;
                for (c, f) in self.bracket(a, b) {
                    out[*c] += &w * f;
                }
            }
        }
        out
    }

    /// First `(a, b, c)` with `f_ab^c != -f_ba^c`.
    pub fn antisymmetry_violation(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.dim {
            for b in a..self.dim {
                let mut cs: Vec<usize> = self
                    .bracket(a, b)
                    .iter()
                    .chain(self.bracket(b, a))
                    .map(|(c, _)| *c)
                    .collect();
                cs.sort_unstable();
                cs.dedup();
                for c in cs {
                    if self.get(a, b, c) + self.get(b, a, c) != Rational::zero() {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// First `(a, b, c, d)` with a nonzero Jacobi residual, and the residual.
    pub fn jacobi_violation(&self) -> Option<((usize, usize, usize, usize), Rational)> {
        let n = self.dim;
        let mut acc = vec![Rational::zero(); n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for x in acc.iter_mut() {
                        x.set_zero();
                    }
                    // [[a,b],c] + [[b,c],a] + [[c,a],b]
                    for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for (e, f1) in self.bracket(p, q) {
                            for (d, f2) in self.bracket(*e, r) {
                                acc[*d] += f1 * f2;
                            }
                        }
                    }
                    if let Some(d) = acc.iter().position(|x| !x.is_zero()) {
                        return Some(((a, b, c, d), acc[d].clone()));
                    }
                }
            }
        }
        None
    }

    pub fn validate(&self) -> Result<()> {
        if let Some((a, b, c)) = self.antisymmetry_violation() {
            return Err(Error::InternalConsistency(format!(
                "antisymmetry fails at f_{a}{b}^{c}"
            )));
        }
        if let Some(((a, b, c, d), r)) = self.jacobi_violation() {
            return Err(Error::InternalConsistency(format!(
                "Jacobi residual {} at ({a},{b},{c},{d})",
                to_pq(&r)
            )));
        }
        Ok(())
    }

    /// Structure constants in the basis `Y_j = sum_i P_ij X_i` (columns of
    /// `p` are the new basis vectors in old coordinates).
    pub fn change_basis(&self, p: &RatMatrix) -> Result<Self> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: p.rows(),
            });
        }
        let p_inv = p
            .inverse()
            .ok_or_else(|| Error::InternalConsistency("change of basis matrix is singular".into()))?;
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| (0..n).map(|i| p[(i, j)].clone()).collect()).collect();
        let mut entries = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let br = self.bracket_vectors(&cols[a], &cols[b]);
                for c in 0..n {
                    let v: Rational = (0..n).map(|k| &p_inv[(c, k)] * &br[k]).sum();
                    if !v.is_zero() {
                        entries.push((a, b, c, v));
                    }
                }
            }
        }
        Self::from_entries(self.algebra, n, entries)
    }

    /// Copy with one entry overwritten; used for falsification runs.
    pub fn with_entry(&self, a: usize, b: usize, c: usize, value: Rational) -> Self {
        let mut out = self.clone();
        let slot = &mut out.brackets[a * self.dim + b];
        slot.retain(|(k, _)| *k != c);
        if !value.is_zero() {
            slot.push((c, value));
            slot.sort_by_key(|(k, _)| *k);
        }
        out
    }
}

/// `g_ab = Tr(ad X_a ad X_b)` and its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillingMetric {
    pub g: RatMatrix,
    pub g_inv: RatMatrix,
}

/// `(ad X_a)^c_b = f_ab^c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointRep {
    pub matrices: Vec<RatMatrix>,
}

impl AdjointRep {
    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    /// Largest failure of `[ad_a, ad_b] = f_ab^c ad_c`, as the first offending pair.
    pub fn representation_violation(&self, f: &StructureConstants) -> Option<(usize, usize)> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                let lhs = self.matrices[a]
                    .mul(&self.matrices[b])
                    .sub(&self.matrices[b].mul(&self.matrices[a]));
                let mut rhs = RatMatrix::zeros(n, n);
                for (c, v) in f.bracket(a, b) {
                    rhs = rhs.add(&self.matrices[*c].scale(v));
                }
                if lhs != rhs {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// `sum_ab g^ab ad_a ad_b`; the identity under Killing normalization.
    pub fn quadratic_casimir(&self, metric: &KillingMetric) -> RatMatrix {
        let n = self.dim();
        let mut out = RatMatrix::zeros(n, n);
        for a in 0..n {
            let mut k = RatMatrix::zeros(n, n);
            for b in 0..n {
                let w = &metric.g_inv[(a, b)];
                if !w.is_zero() {
                    k = k.add(&self.matrices[b].scale(w));
                }
            }
            out = out.add(&self.matrices[a].mul(&k));
        }
        out
    }
}

pub fn build_algebra(id: AlgebraId) -> Result<StructureConstants> {
    let id = id.validate()?;
    if !id.is_constructible() {
        let why = if id.is_exceptional() {
            "formula-level only".to_string()
        } else {
            format!("dimension {} exceeds the cap {MAX_CONSTRUCTED_DIM}", id.dim())
        };
        return Err(Error::UnsupportedAlgebra(format!("{id}: {why}")));
    }
    let f = match id {
        AlgebraId::Sl(n) => classical::from_matrix_basis(id, n, &classical::sl_basis(n))?,
        AlgebraId::So(n) => classical::from_matrix_basis(id, n, &classical::so_basis(n))?,
        AlgebraId::Sp(n) => classical::from_matrix_basis(id, n, &classical::sp_basis(n))?,
        AlgebraId::G2 => g2::structure_constants()?,
        _ => unreachable!("rejected above"),
    };
    if f.dim() != id.dim() {
        return Err(Error::InternalConsistency(format!(
            "{id}: built dimension {} != {}",
            f.dim(),
            id.dim()
        )));
    }
    f.validate()?;
    Ok(f)
}

pub fn adjoint_rep(f: &StructureConstants) -> AdjointRep {
    let n = f.dim();
    let matrices = (0..n)
        .map(|a| {
            let mut m = RatMatrix::zeros(n, n);
            for b in 0..n {
                for (c, v) in f.bracket(a, b) {
                    m[(*c, b)] = v.clone();
                }
            }
            m
        })
        .collect();
    AdjointRep { matrices }
}

pub fn killing_metric(f: &StructureConstants) -> Result<KillingMetric> {
    let n = f.dim();
    let ad = adjoint_rep(f);
    let mut g = RatMatrix::zeros(n, n);
    for a in 0..n {
        for b in a..n {
            let v = ad.matrices[a].mul(&ad.matrices[b]).trace();
            g[(a, b)] = v.clone();
            g[(b, a)] = v;
        }
    }
    let g_inv = g.inverse().ok_or(Error::DegenerateMetric)?;
    Ok(KillingMetric { g, g_inv })
}

/// JSON document `{"algebra", "dim", "f": [[a,b,c,"p/q"],..], "g": [["p/q",..],..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub algebra: String,
    pub dim: usize,
    pub f: Vec<(usize, usize, usize, String)>,
    pub g: Vec<Vec<String>>,
}

impl AlgebraDocument {
    pub fn new(f: &StructureConstants, metric: &KillingMetric) -> Self {
        Self {
            algebra: f.algebra().map_or_else(|| "custom".to_string(), |id| id.to_string()),
            dim: f.dim(),
            f: f.entries().map(|(a, b, c, v)| (a, b, c, to_pq(v))).collect(),
            g: metric
                .g
                .to_rows()
                .iter()
                .map(|r| r.iter().map(to_pq).collect())
                .collect(),
        }
    }

    /// Rebuilds both objects; the metric is recomputed and must match `g`.
    pub fn decode(&self) -> Result<(StructureConstants, KillingMetric)> {
        let algebra = self.algebra.parse().ok();
        let entries = self
            .f
            .iter()
            .map(|(a, b, c, v)| Ok((*a, *b, *c, parse_pq(v)?)))
            .collect::<Result<Vec<_>>>()?;
        let f = StructureConstants::from_entries(algebra, self.dim, entries)?;
        let metric = killing_metric(&f)?;
        let g = RatMatrix::from_rows(
            self.g
                .iter()
                .map(|r| r.iter().map(|s| parse_pq(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        );
        if g != metric.g {
            return Err(Error::InternalConsistency(
                "stored metric differs from the recomputed Killing form".into(),
            ));
        }
        Ok((f, metric))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Everything downstream needs for one algebra.
#[derive(Debug, Clone)]
pub struct Algebra {
    pub id: AlgebraId,
    pub f: StructureConstants,
    pub adjoint: AdjointRep,
    pub metric: KillingMetric,
}

impl Algebra {
    pub fn build(id: AlgebraId) -> Result<Self> {
        Self::from_structure_constants(id, build_algebra(id)?)
    }

    pub fn from_structure_constants(id: AlgebraId, f: StructureConstants) -> Result<Self> {
        let metric = killing_metric(&f)?;
        let adjoint = adjoint_rep(&f);
        Ok(Self { id, f, adjoint, metric })
    }

    pub fn dim(&self) -> usize {
        self.f.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn parse_and_display() {
        for s in ["sl3", "so5", "sp4", "g2", "e8", "sl(4)"] {
            let id: AlgebraId = s.parse().unwrap();
            assert_eq!(id.to_string(), s.replace(['(', ')'], ""));
        }
        assert!("sp3".parse::<AlgebraId>().is_err());
        assert!("sl1".parse::<AlgebraId>().is_err());
        assert!("so2".parse::<AlgebraId>().is_err());
        assert!("a7".parse::<AlgebraId>().is_err());
    }

    #[test]
    fn dimension_formulas() {
        assert_eq!(AlgebraId::Sl(4).dim(), 15);
        assert_eq!(AlgebraId::So(5).dim(), AlgebraId::Sp(4).dim());
        assert_eq!(AlgebraId::Sp(6).dim(), 21);
        assert_eq!(AlgebraId::So(7).dim(), 21);
    }

    #[test]
    fn sl2_in_chevalley_form() {
        // basis (e, h, f)
        let f = build_algebra(AlgebraId::Sl(2)).unwrap();
        assert_eq!(f.dim(), 3);
        assert_eq!(f.get(1, 0, 0), int(2));
        assert_eq!(f.get(1, 2, 2), int(-2));
        assert_eq!(f.get(0, 2, 1), int(1));
        let ad = adjoint_rep(&f);
        let h = &ad.matrices[1];
        for (i, d) in [2, 0, -2].into_iter().enumerate() {
            for j in 0..3 {
                assert_eq!(h[(i, j)], if i == j { int(d) } else { int(0) });
            }
        }
        let g = killing_metric(&f).unwrap();
        assert_eq!(g.g[(1, 1)], int(8));
        assert_eq!(g.g[(0, 2)], int(4));
        assert_eq!(g.g[(0, 0)], int(0));
    }

    #[test]
    fn exceptional_beyond_g2_is_formula_level() {
        let err = build_algebra(AlgebraId::E8).unwrap_err();
        assert!(err.to_string().contains("formula-level only"));
        assert!(matches!(
            build_algebra(AlgebraId::Sl(6)),
            Err(Error::UnsupportedAlgebra(_))
        ));
    }

    #[test]
    fn perturbed_entry_breaks_antisymmetry() {
        let f = build_algebra(AlgebraId::Sl(2)).unwrap();
        let bad = f.with_entry(0, 2, 1, int(2));
        assert!(bad.validate().is_err());
        assert_eq!(bad.antisymmetry_violation(), Some((0, 2, 1)));
    }

    #[test]
    fn document_round_trip() {
        let f = build_algebra(AlgebraId::Sl(3)).unwrap();
        let g = killing_metric(&f).unwrap();
        let doc = AlgebraDocument::new(&f, &g);
        let back: AlgebraDocument = serde_json::from_str(&doc.to_json()).unwrap();
        let (f2, g2) = back.decode().unwrap();
        assert_eq!(f2, f);
        assert_eq!(g2, g);
        assert!(doc.to_json().starts_with("{\"algebra\":\"sl3\",\"dim\":8,\"f\":[["));
    }
}
