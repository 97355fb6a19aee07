//! Matching computed spectra and traces against the eigenvalue catalogs:
//! grouping by coinciding eigenvalue, solving single unknown dimensions,
//! moment checks and the derivation of `dim X5`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{Algebra, AlgebraId, Family};
use crate::casimir::split_casimir_2;
use crate::error::{Error, Result};
use crate::formulas::{dim_m3, dim_x, universal_trace};
use crate::linalg::RatMatrix;
use crate::rational::{display, int, pow, to_pq, Rational};
use crate::vogel::{vogel_point, Catalog, Scope, Table2, VogelPoint};
use crate::wedge::{restrict_casimir, spectrum, trace_powers, Caps, RankConfig, WedgeBasis, WedgeOperator};

/// Inputs shared by every solver entry point; all fields are overridable so
/// that negative controls can inject wrong data.
#[derive(Debug, Clone, Default)]
pub struct SolverConfig {
    pub caps: Caps,
    pub ranks: RankConfig,
    pub catalog: Catalog,
    pub table: Table2,
    /// Replaces the dimension of a label wherever it would be known.
    pub dim_overrides: BTreeMap<String, Rational>,
}

/// The exceptional-line decomposition at n = 5 for exceptional algebras,
/// the all-algebras one otherwise (they coincide for n <= 4).
pub fn default_scope(algebra: AlgebraId, n: usize) -> Scope {
    if algebra.is_exceptional() && n == 5 {
        Scope::ExceptionalLine
    } else {
        Scope::Full
    }
}

/// Dimension of a catalog label for this algebra, if any formula covers it.
///
/// Tabulated dimensions are used only for exceptional algebras; for the
/// classical series everything beyond `X_m` and `M3` is unknown.
pub fn known_dim(label: &str, algebra: AlgebraId, cfg: &SolverConfig) -> Result<Option<Rational>> {
    if let Some(v) = cfg.dim_overrides.get(label) {
        return Ok(Some(v.clone()));
    }
    let d = algebra.dim();
    if let Some(m) = label.strip_prefix('X').and_then(|m| m.parse::<usize>().ok()) {
        return Ok((m <= 5).then(|| dim_x(m, d)));
    }
    if label == "M3" {
        return match algebra.family() {
            Family::SP => Ok(None),
            f => dim_m3(f, algebra.parameter()).map(Some),
        };
    }
    if algebra.is_exceptional() && cfg.table.row(label).is_some() {
        let alpha = vogel_point(algebra)?.alpha;
        return cfg.table.dim_resolved(label, &alpha, d).map(Some);
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Contribution {
    pub label: String,
    pub mult: usize,
    /// `None` when no formula is available.
    #[serde(serialize_with = "ser_opt_pq")]
    pub dim: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaGroup {
    #[serde(serialize_with = "ser_pq")]
    pub lambda: Rational,
    pub observed: Option<usize>,
    pub contributions: Vec<Contribution>,
}

impl LambdaGroup {
    /// `sum mult * dim` over labels with known dimension.
    pub fn known_sum(&self) -> Rational {
        self.contributions
            .iter()
            .filter_map(|c| c.dim.as_ref().map(|d| d * int(c.mult as i64)))
            .sum()
    }

    pub fn unknowns(&self) -> Vec<&Contribution> {
        self.contributions.iter().filter(|c| c.dim.is_none()).collect()
    }

    /// `2*dimB''+dimI'`.
    pub fn expected_expr(&self) -> String {
        self.contributions
            .iter()
            .map(|c| {
                if c.mult == 1 {
                    format!("dim{}", c.label)
                } else {
                    format!("{}*dim{}", c.mult, c.label)
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Catalog entries grouped by exact eigenvalue, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupedSpectrum {
    pub groups: Vec<LambdaGroup>,
}

impl GroupedSpectrum {
    pub fn from_catalog(algebra: AlgebraId, n: usize, scope: Scope, cfg: &SolverConfig) -> Result<Self> {
        let point = vogel_point(algebra)?;
        let mut by: BTreeMap<Rational, Vec<Contribution>> = BTreeMap::new();
        for t in cfg.catalog.evaluate(n, &point, scope) {
            let dim = known_dim(&t.label, algebra, cfg)?;
            by.entry(t.lambda).or_default().push(Contribution {
                label: t.label,
                mult: t.mult,
                dim,
            });
        }
        Ok(Self {
            groups: by
                .into_iter()
                .map(|(lambda, contributions)| LambdaGroup {
                    lambda,
                    observed: None,
                    contributions,
                })
                .collect(),
        })
    }

    pub fn lambdas(&self) -> Vec<Rational> {
        self.groups.iter().map(|g| g.lambda.clone()).collect()
    }

    /// Fills in observed multiplicities; they must account for the whole space.
    pub fn observe(&mut self, op: &WedgeOperator, cfg: &SolverConfig) -> Result<()> {
        let spec = spectrum(op, &self.lambdas(), &cfg.ranks, &cfg.caps)?;
        let total: usize = spec.iter().map(|s| s.1).sum();
        if total != op.size() {
            return Err(Error::SpectrumMismatch(format!(
                "catalog eigenvalues account for {total} of {} dimensions",
                op.size()
            )));
        }
        for (g, (_, m)) in self.groups.iter_mut().zip(spec) {
            g.observed = Some(m);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GroupStatus {
    Matched,
    Solved,
    Undetermined,
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupRecord {
    pub lambda: String,
    pub expected: String,
    /// Known part of the expected multiplicity.
    pub known: String,
    pub observed: usize,
    pub status: GroupStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solved: Option<SolvedDim>,
    pub labels: Vec<Contribution>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolvedDim {
    pub label: String,
    pub dim: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub algebra: String,
    pub n: usize,
    pub scope: Scope,
    pub wedge_dim: usize,
    pub primes: Vec<String>,
    pub groups: Vec<GroupRecord>,
}

impl DecompositionReport {
    pub fn is_consistent(&self) -> bool {
        self.groups.iter().all(|g| g.status != GroupStatus::Inconsistent)
    }

    pub fn group(&self, lambda: &Rational) -> Option<&GroupRecord> {
        let key = to_pq(lambda);
        self.groups.iter().find(|g| g.lambda == key)
    }

    pub fn solved(&self) -> BTreeMap<String, String> {
        self.groups
            .iter()
            .filter_map(|g| g.solved.as_ref().map(|s| (s.label.clone(), s.dim.clone())))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

fn classify(g: &LambdaGroup) -> GroupRecord {
    let observed = g.observed.expect("observed before classification");
    let obs = int(observed as i64);
    let known = g.known_sum();
    let unknowns = g.unknowns();
    let (status, solved) = match unknowns.as_slice() {
        [] if known == obs => (GroupStatus::Matched, None),
        [] => (GroupStatus::Inconsistent, None),
        [u] => {
            // dimensions are virtual (may be negative) but always integral
            let dim = (&obs - &known) / int(u.mult as i64);
            let status = if dim.is_integer() {
                GroupStatus::Solved
            } else {
                GroupStatus::Inconsistent
            };
            let solved = SolvedDim {
                label: u.label.clone(),
                dim: display(&dim),
            };
            (status, Some(solved))
        }
        _ => (GroupStatus::Undetermined, None),
    };
    GroupRecord {
        lambda: to_pq(&g.lambda),
        expected: g.expected_expr(),
        known: to_pq(&known),
        observed,
        status,
        solved,
        labels: g.contributions.clone(),
    }
}

pub fn wedge_operator(algebra: &Algebra, n: usize, caps: &Caps) -> Result<WedgeOperator> {
    let c = split_casimir_2(&algebra.adjoint, &algebra.metric)?;
    let basis = WedgeBasis::new(c.dim(), n)?;
    restrict_casimir(&c, &basis, caps)
}

/// Observed spectrum of `algebra` grouped against the catalog.
pub fn observed_groups(
    algebra: &Algebra,
    n: usize,
    scope: Scope,
    cfg: &SolverConfig,
) -> Result<(GroupedSpectrum, usize)> {
    let op = wedge_operator(algebra, n, &cfg.caps)?;
    if op.size() > cfg.caps.max_spectrum_dim {
        return Err(Error::ResourceCap(format!(
            "wedge dimension {} exceeds max_spectrum_dim {}",
            op.size(),
            cfg.caps.max_spectrum_dim
        )));
    }
    let mut groups = GroupedSpectrum::from_catalog(algebra.id, n, scope, cfg)?;
    groups.observe(&op, cfg)?;
    Ok((groups, op.size()))
}

pub fn verify_decomposition(algebra: AlgebraId, n: usize, cfg: &SolverConfig) -> Result<DecompositionReport> {
    verify_decomposition_for(&Algebra::build(algebra)?, n, cfg)
}

/// As [`verify_decomposition`], for an already constructed algebra (any basis).
pub fn verify_decomposition_for(algebra: &Algebra, n: usize, cfg: &SolverConfig) -> Result<DecompositionReport> {
    let scope = default_scope(algebra.id, n);
    let (groups, size) = observed_groups(algebra, n, scope, cfg)?;
    Ok(DecompositionReport {
        algebra: algebra.id.to_string(),
        n,
        scope,
        wedge_dim: size,
        primes: cfg.ranks.primes.iter().map(u64::to_string).collect(),
        groups: groups.groups.iter().map(classify).collect(),
    })
}

/// Solves `sum_i lambda_i^k d_i = traces[k]` using the first `|lambdas|`
/// rows; the remaining rows must vanish as residuals.
pub fn solve_vandermonde(traces: &[Rational], lambdas: &[Rational]) -> Result<Vec<Rational>> {
    let m = lambdas.len();
    for (i, l) in lambdas.iter().enumerate() {
        if lambdas[..i].contains(l) {
            return Err(Error::SingularSystem(to_pq(l)));
        }
    }
    if traces.len() < m {
        return Err(Error::SingularSystem(format!(
            "{} equations for {m} unknowns",
            traces.len()
        )));
    }
    if m == 0 {
        return match traces.iter().position(|t| !t.is_zero()) {
            Some(k) => Err(Error::InconsistentSystem {
                k,
                residual: to_pq(&traces[k]),
            }),
            None => Ok(Vec::new()),
        };
    }
    let v = RatMatrix::from_rows((0..m).map(|k| lambdas.iter().map(|l| pow(l, k)).collect()).collect());
    let inv = v
        .inverse()
        .ok_or_else(|| Error::SingularSystem("Vandermonde matrix".into()))?;
    let d: Vec<Rational> = (0..m)
        .map(|i| (0..m).map(|k| &inv[(i, k)] * &traces[k]).sum())
        .collect();
    for (k, t) in traces.iter().enumerate().skip(m) {
        let r: Rational = t - lambdas.iter().zip(&d).map(|(l, x)| pow(l, k) * x).sum::<Rational>();
        if !r.is_zero() {
            return Err(Error::InconsistentSystem { k, residual: to_pq(&r) });
        }
    }
    Ok(d)
}

/// `dim X5` as what remains of `Tr(ASym_5)` after the tabulated dimensions
/// of the other exceptional-line constituents.
pub fn solve_dim_x5(point: &VogelPoint, dim_g: usize, cfg: &SolverConfig) -> Result<Rational> {
    let total = universal_trace(5, 0, dim_g, None)?;
    let mut rest = Rational::zero();
    for t in cfg.catalog.terms(5, Scope::ExceptionalLine) {
        if t.label == "X5" {
            continue;
        }
        let d = match cfg.dim_overrides.get(&t.label) {
            Some(v) => v.clone(),
            None => cfg.table.dim_resolved(&t.label, &point.alpha, dim_g)?,
        };
        rest += d * int(t.mult as i64);
    }
    Ok(total - rest)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MomentRow {
    pub k: usize,
    pub computed: String,
    pub known: String,
    pub unknown: Option<String>,
    pub residual: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MomentStatus {
    /// Every residual computed and zero.
    Closed,
    /// More unknown groups than trace equations.
    Underdetermined,
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MomentReport {
    pub algebra: String,
    pub n: usize,
    pub scope: Scope,
    /// Eigenvalues whose group contains an unknown dimension.
    pub unknown_lambdas: Vec<String>,
    pub rows: Vec<MomentRow>,
    pub status: MomentStatus,
}

/// Checks `Tr(M^k) = sum_lambda lambda^k sum_i m_i dim_i` for `k = 0..=k_max`.
///
/// Groups with unknown dimensions contribute a total per group: taken from
/// the observed spectrum when given, otherwise solved from the traces
/// themselves (possible while there are at most `k_max + 1` such groups).
pub fn moment_consistency(
    algebra: &Algebra,
    n: usize,
    k_max: usize,
    observed: Option<&GroupedSpectrum>,
    cfg: &SolverConfig,
) -> Result<MomentReport> {
    let scope = default_scope(algebra.id, n);
    let op = wedge_operator(algebra, n, &cfg.caps)?;
    let traces = trace_powers(&op, k_max, &cfg.caps)?;
    let groups = match observed {
        Some(g) => g.clone(),
        None => GroupedSpectrum::from_catalog(algebra.id, n, scope, cfg)?,
    };
    let known: Vec<Rational> = (0..=k_max)
        .map(|k| groups.groups.iter().map(|g| pow(&g.lambda, k) * g.known_sum()).sum())
        .collect();
    let open: Vec<&LambdaGroup> = groups.groups.iter().filter(|g| !g.unknowns().is_empty()).collect();
    // per-group unknown totals
    let totals: Option<Vec<Rational>> = match observed {
        Some(_) => Some(
            open.iter()
                .map(|g| int(g.observed.unwrap_or(0) as i64) - g.known_sum())
                .collect(),
        ),
        None if open.len() <= k_max + 1 => {
            let rhs: Vec<Rational> = traces.iter().zip(&known).map(|(t, k)| t - k).collect();
            let lambdas: Vec<Rational> = open.iter().map(|g| g.lambda.clone()).collect();
            match solve_vandermonde(&rhs[..open.len()], &lambdas) {
                Ok(v) => Some(v),
                Err(Error::SingularSystem(_)) => None,
                Err(e) => return Err(e),
            }
        }
        None => None,
    };
    let rows: Vec<MomentRow> = (0..=k_max)
        .map(|k| {
            let unknown: Option<Rational> = totals
                .as_ref()
                .map(|w| open.iter().zip(w).map(|(g, x)| pow(&g.lambda, k) * x).sum());
            let residual = unknown.as_ref().map(|u| &traces[k] - &known[k] - u);
            MomentRow {
                k,
                computed: to_pq(&traces[k]),
                known: to_pq(&known[k]),
                unknown: unknown.as_ref().map(to_pq),
                residual: residual.as_ref().map(to_pq),
            }
        })
        .collect();
    let status = if totals.is_none() {
        MomentStatus::Underdetermined
    } else if rows.iter().all(|r| r.residual.as_deref() == Some("0/1")) {
        MomentStatus::Closed
    } else {
        MomentStatus::Inconsistent
    };
    Ok(MomentReport {
        algebra: algebra.id.to_string(),
        n,
        scope,
        unknown_lambdas: open.iter().map(|g| to_pq(&g.lambda)).collect(),
        rows,
        status,
    })
}

fn ser_pq<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_pq(v))
}

fn ser_opt_pq<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&to_pq(v)),
        None => s.serialize_str("UNKNOWN"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn vandermonde_pairs() {
        let d = solve_vandermonde(&[int(28), int(-4), int(2)], &[ratio(-1, 2), int(0)]).unwrap();
        assert_eq!(d, vec![int(8), int(20)]);
        assert!(matches!(
            solve_vandermonde(&[int(1), int(1), int(1)], &[int(1), int(1)]),
            Err(Error::SingularSystem(_))
        ));
        assert_eq!(solve_vandermonde(&[int(7)], &[ratio(3, 5)]).unwrap(), vec![int(7)]);
        assert!(matches!(
            solve_vandermonde(&[int(28), int(-4), int(3)], &[ratio(-1, 2), int(0)]),
            Err(Error::InconsistentSystem { k: 2, .. })
        ));
    }

    #[test]
    fn x5_from_the_table() {
        let cfg = SolverConfig::default();
        for id in AlgebraId::EXCEPTIONAL {
            let p = vogel_point(id).unwrap();
            assert_eq!(solve_dim_x5(&p, id.dim(), &cfg).unwrap(), dim_x(5, id.dim()), "{id}");
        }
    }

    #[test]
    fn known_dimensions() {
        let cfg = SolverConfig::default();
        assert_eq!(known_dim("M3", AlgebraId::Sl(4), &cfg).unwrap(), Some(int(245)));
        assert_eq!(known_dim("M3", AlgebraId::G2, &cfg).unwrap(), Some(int(0)));
        assert_eq!(known_dim("M3", AlgebraId::Sp(4), &cfg).unwrap(), None);
        assert_eq!(known_dim("I", AlgebraId::G2, &cfg).unwrap(), Some(int(924)));
        assert_eq!(known_dim("I", AlgebraId::Sl(4), &cfg).unwrap(), None);
        assert_eq!(known_dim("X2", AlgebraId::Sl(3), &cfg).unwrap(), Some(int(20)));
    }

    #[test]
    fn grouping_merges_coinciding_eigenvalues() {
        let g = GroupedSpectrum::from_catalog(AlgebraId::Sl(4), 5, Scope::Full, &SolverConfig::default()).unwrap();
        let minus_one = g.groups.iter().find(|x| x.lambda == int(-1)).unwrap();
        let labels: Vec<&str> = minus_one.contributions.iter().map(|c| c.label.as_str()).collect();
        assert!(labels.contains(&"M3") && labels.contains(&"B''") && labels.contains(&"I'"));
    }
}
