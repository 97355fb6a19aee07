//! Eigenvalues of `C_(n)` on each representation in the decomposition of
//! the n-th antisymmetric power, as affine forms in the Vogel parameters.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Affine, Table2, VogelPoint};
use crate::rational::{int, ratio, to_pq, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Scope {
    /// Decomposition valid on the exceptional line (14 terms at n = 5).
    ExceptionalLine,
    /// Decomposition valid for every simple algebra.
    Full,
}

/// Every label used by the catalogs.
pub const CATALOG_LABELS: [&str; 32] = [
    "X0", "X1", "X2", "X3", "X4", "X5", "M3", "Y2", "Y2'", "Y2''", "B", "B'", "B''", "C", "C'", "C''", "E", "E'",
    "E''", "F", "F'", "F''", "F'''", "F(4)", "F(5)", "Y3", "Y3'", "Y3''", "I", "I'", "I''", "J''",
];

/// Quadratic Casimir (adjoint normalized to 1) of every catalog label.
const C2: &[(&str, &str)] = &[
    ("X0", "0"),
    ("X1", "1"),
    ("X2", "2"),
    ("X3", "3"),
    ("X4", "4"),
    ("X5", "5"),
    ("M3", "3"),
    ("Y2", "2-2*a"),
    ("Y2'", "2-2*b"),
    ("Y2''", "2-2*g"),
    ("B", "2+2*a"),
    ("B'", "2+2*b"),
    ("B''", "2+2*g"),
    ("C", "3-3*a"),
    ("C'", "3-3*b"),
    ("C''", "3-3*g"),
    ("E", "5/2+3*a"),
    ("E'", "5/2+3*b"),
    ("E''", "5/2+3*g"),
    ("F", "4-4*a-2*b"),
    ("F'", "4-2*a-4*b"),
    ("F''", "4-2*b-4*g"),
    ("F'''", "4-4*a-2*g"),
    ("F(4)", "4-4*b-2*g"),
    ("F(5)", "4-2*a-4*g"),
    ("Y3", "3-6*a"),
    ("Y3'", "3-6*b"),
    ("Y3''", "3-6*g"),
    ("I", "4-4*a"),
    ("I'", "4-4*b"),
    ("I''", "4-4*g"),
    ("J''", "2+4*g"),
];

type Term = (&'static str, &'static str, usize);

const N2: &[Term] = &[("X1", "-1/2", 1), ("X2", "0", 1)];

const N3: &[Term] = &[
    ("X0", "-3/2", 1),
    ("X2", "-1/2", 1),
    ("X3", "0", 1),
    ("Y2", "-1/2-a", 1),
    ("Y2'", "-1/2-b", 1),
    ("Y2''", "-1/2-g", 1),
];

const N4: &[Term] = &[
    ("X1", "-3/2", 1),
    ("X2", "-1", 1),
    ("X3", "-1/2", 1),
    ("X4", "0", 1),
    ("Y2", "-1-a", 1),
    ("Y2'", "-1-b", 1),
    ("Y2''", "-1-g", 1),
    ("B", "-1+a", 1),
    ("B'", "-1+b", 1),
    ("B''", "-1+g", 1),
    ("C", "-1/2-3/2*a", 1),
    ("C'", "-1/2-3/2*b", 1),
    ("C''", "-1/2-3/2*g", 1),
];

const N5_FULL: &[Term] = &[
    ("X1", "-2", 2),
    ("X2", "-3/2", 4),
    ("M3", "-1", 1),
    ("X4", "-1/2", 1),
    ("X5", "0", 1),
    ("B", "-3/2+a", 3),
    ("B'", "-3/2+b", 3),
    ("B''", "-3/2+g", 3),
    ("C", "-1-3/2*a", 2),
    ("C'", "-1-3/2*b", 2),
    ("C''", "-1-3/2*g", 2),
    ("E", "-1/2-3/2*b-3/2*g", 1),
    ("E'", "-1/2-3/2*a-3/2*g", 1),
    ("E''", "-1/2-3/2*a-3/2*b", 1),
    ("F", "-1/2-2*a-b", 1),
    ("F'", "-1/2-a-2*b", 1),
    ("F''", "-1/2-b-2*g", 1),
    ("F'''", "-1/2-2*a-g", 1),
    ("F(4)", "-1/2-2*b-g", 1),
    ("F(5)", "-1/2-a-2*g", 1),
    ("Y3", "-1-3*a", 1),
    ("Y3'", "-1-3*b", 1),
    ("Y3''", "-1-3*g", 1),
    ("I", "-1/2-2*a", 1),
    ("I'", "-1/2-2*b", 1),
    ("I''", "-1/2-2*g", 1),
];

// B'' is kept as -3/2+g, which is -7/6 on the line g = 1/3.
const N5_LINE: &[Term] = &[
    ("X1", "-2", 1),
    ("X2", "-3/2", 2),
    ("X4", "-1/2", 1),
    ("X5", "0", 1),
    ("B''", "-3/2+g", 2),
    ("C", "-1-3/2*a", 1),
    ("C'", "-1-3/2*b", 1),
    ("E''", "-1/2-3/2*a-3/2*b", 1),
    ("F", "-1/2-2*a-b", 1),
    ("F'", "-1/2-a-2*b", 1),
    ("Y3", "-1-3*a", 1),
    ("Y3'", "-1-3*b", 1),
    ("I", "-1/2-2*a", 1),
    ("I'", "-1/2-2*b", 1),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogTerm {
    pub label: String,
    pub lambda: Affine,
    pub mult: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvaluatedTerm {
    pub label: String,
    #[serde(serialize_with = "ser_pq")]
    pub lambda: Rational,
    pub mult: usize,
    #[serde(serialize_with = "ser_display")]
    pub expr: Affine,
}

fn ser_pq<S: serde::Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_pq(v))
}

fn ser_display<S: serde::Serializer>(v: &Affine, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Eigenvalue catalogs for n = 2..5 plus the quadratic Casimir of every
/// label; owned so that tests can perturb it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub c2: BTreeMap<String, Affine>,
    pub terms: BTreeMap<(usize, Scope), Vec<CatalogTerm>>,
}

impl Catalog {
    pub fn standard() -> Self {
        let parse = |s: &str| s.parse::<Affine>().expect("well-formed catalog entry");
        let c2 = C2.iter().map(|(l, e)| (l.to_string(), parse(e))).collect();
        let lift = |ts: &[Term]| -> Vec<CatalogTerm> {
            ts.iter()
                .map(|(l, e, m)| CatalogTerm {
                    label: l.to_string(),
                    lambda: parse(e),
                    mult: *m,
                })
                .collect()
        };
        let mut terms = BTreeMap::new();
        for scope in [Scope::ExceptionalLine, Scope::Full] {
            terms.insert((2, scope), lift(N2));
            terms.insert((3, scope), lift(N3));
            terms.insert((4, scope), lift(N4));
        }
        terms.insert((5, Scope::Full), lift(N5_FULL));
        terms.insert((5, Scope::ExceptionalLine), lift(N5_LINE));
        Self { c2, terms }
    }

    pub fn terms(&self, n: usize, scope: Scope) -> &[CatalogTerm] {
        self.terms.get(&(n, scope)).map_or(&[], Vec::as_slice)
    }

    /// Ungrouped `(label, lambda, mult)` at a point.
    pub fn evaluate(&self, n: usize, point: &VogelPoint, scope: Scope) -> Vec<EvaluatedTerm> {
        self.terms(n, scope)
            .iter()
            .map(|t| EvaluatedTerm {
                label: t.label.clone(),
                lambda: t.lambda.eval(point),
                mult: t.mult,
                expr: t.lambda.clone(),
            })
            .collect()
    }

    /// Terms whose eigenvalue is not `(c2 - n)/2` on the normalized plane.
    pub fn eigenvalue_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for ((n, scope), terms) in &self.terms {
            for t in terms {
                let Some(c2) = self.c2.get(&t.label) else {
                    out.push(format!("n={n} {scope:?}: {} has no quadratic Casimir", t.label));
                    continue;
                };
                let want = c2.shift(&int(-(*n as i64))).scale(&ratio(1, 2));
                if !t.lambda.equal_on_plane(&want) {
                    out.push(format!(
                        "n={n} {scope:?}: eigenvalue {} of {} differs from (c2-{n})/2 = {}",
                        t.lambda, t.label, want
                    ));
                }
            }
        }
        out
    }

    /// Labels whose quadratic Casimir disagrees with the tabulated column.
    pub fn table_failures(&self, table: &Table2) -> Vec<String> {
        table
            .rows
            .iter()
            .filter_map(|r| {
                let c2 = self.c2.get(&r.label)?;
                (!c2.equal_on_plane(&r.c2))
                    .then(|| format!("{}: Casimir {} differs from tabulated {}", r.label, c2, r.c2))
            })
            .collect()
    }

    /// Adds `delta` to the constant of one eigenvalue.
    pub fn perturb_eigenvalue(&mut self, n: usize, scope: Scope, index: usize, delta: &Rational) {
        if let Some(ts) = self.terms.get_mut(&(n, scope)) {
            ts[index].lambda = ts[index].lambda.shift(delta);
        }
    }

    /// `[{"label","n","scope","lambda","mult","dim"}]`, where `dim` says where
    /// the dimension comes from.
    pub fn to_json(&self, table: &Table2) -> serde_json::Value {
        let mut out = Vec::new();
        for ((n, scope), terms) in &self.terms {
            for t in terms {
                let dim = if table.row(&t.label).is_some() {
                    "table2"
                } else if t.label == "X5" || t.label == "M3" {
                    "closed-form"
                } else {
                    "none"
                };
                out.push(serde_json::json!({
                    "label": t.label,
                    "n": n,
                    "scope": scope,
                    "lambda": t.lambda.to_string(),
                    "mult": t.mult,
                    "dim": dim,
                }));
            }
        }
        serde_json::Value::Array(out)
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Self::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraId;
    use crate::vogel::vogel_point;

    fn find<'a>(ts: &'a [EvaluatedTerm], l: &str) -> &'a EvaluatedTerm {
        ts.iter().find(|t| t.label == l).unwrap()
    }

    #[test]
    fn pair_catalog() {
        let p = vogel_point(AlgebraId::So(7)).unwrap();
        let ts = Catalog::standard().evaluate(2, &p, Scope::Full);
        let got: Vec<_> = ts
            .iter()
            .map(|t| (t.label.as_str(), t.lambda.clone(), t.mult))
            .collect();
        assert_eq!(got, vec![("X1", ratio(-1, 2), 1), ("X2", ratio(0, 1), 1)]);
    }

    #[test]
    fn fifth_power_entries() {
        let c = Catalog::standard();
        let sl3 = c.evaluate(5, &vogel_point(AlgebraId::Sl(3)).unwrap(), Scope::Full);
        assert_eq!(find(&sl3, "B").lambda, ratio(-11, 6));
        assert_eq!(find(&sl3, "B").mult, 3);
        let g2 = c.evaluate(5, &vogel_point(AlgebraId::G2).unwrap(), Scope::Full);
        assert_eq!(find(&g2, "I").lambda, ratio(0, 1));
        let line = c.evaluate(5, &vogel_point(AlgebraId::G2).unwrap(), Scope::ExceptionalLine);
        assert_eq!(find(&line, "B''").lambda, ratio(-7, 6));
        assert_eq!(find(&line, "X5").lambda, ratio(0, 1));
    }

    #[test]
    fn fifth_power_closure() {
        let c = Catalog::standard();
        let full = c.terms(5, Scope::Full);
        assert_eq!(full.len(), 26);
        // 2 X1 + 4 X2 + M3 + X4 + X5 + 3(B,B',B'') + 2(C,C',C'') + 17 singles
        assert_eq!(
            full.iter().map(|t| t.mult).sum::<usize>(),
            2 + 4 + 1 + 1 + 1 + 9 + 6 + 15
        );
        assert_eq!(c.terms(5, Scope::ExceptionalLine).len(), 14);
    }

    #[test]
    fn casimir_relation_holds() {
        let c = Catalog::standard();
        assert!(c.eigenvalue_failures().is_empty(), "{:?}", c.eigenvalue_failures());
        assert!(c.table_failures(&Table2::standard()).is_empty());
    }

    #[test]
    fn any_shifted_eigenvalue_is_caught() {
        let base = Catalog::standard();
        for (&(n, scope), ts) in &base.terms {
            for i in 0..ts.len() {
                let mut c = base.clone();
                c.perturb_eigenvalue(n, scope, i, &ratio(1, 1000));
                assert_eq!(c.eigenvalue_failures().len(), 1);
            }
        }
    }
}
