//! Exceptional-line data for the representations of the fourth and fifth
//! antisymmetric powers: eigenvalue columns and dimension formulas.
//!
//! Dimension formulas are transcribed in factored form and expanded once
//! into integer coefficient lists, which are what gets evaluated (and what
//! the negative controls perturb).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::Affine;
use crate::error::{Error, Result};
use crate::rational::{display, int, ratio, to_pq, Rational};

/// `alpha` at g2, f4, e6, e7, e8.
pub const EXCEPTIONAL_ALPHAS: [(i64, i64); 5] = [(-1, 4), (-1, 9), (-1, 12), (-1, 18), (-1, 30)];

/// `(a, b, e)` stands for `(a*alpha + b)^e`.
type Factor = (i64, i64, u32);

struct Transcribed {
    label: &'static str,
    c4: &'static str,
    c2: &'static str,
    c5: &'static str,
    dim: TranscribedDim,
}

enum TranscribedDim {
    /// Coefficients of a polynomial in `dim g`, lowest degree first, over a
    /// common denominator.
    InDimG(&'static [i64], i64),
    Factored((i64, i64), &'static [Factor], &'static [Factor]),
}

use TranscribedDim::{Factored, InDimG};

const ROWS: &[Transcribed] = &[
    Transcribed {
        label: "X0",
        c4: "-2",
        c2: "0",
        c5: "-5/2",
        dim: InDimG(&[1], 1),
    },
    Transcribed {
        label: "X1",
        c4: "-3/2",
        c2: "1",
        c5: "-2",
        dim: InDimG(&[0, 1], 1),
    },
    // d(d-3)/2
    Transcribed {
        label: "X2",
        c4: "-1",
        c2: "2",
        c5: "-3/2",
        dim: InDimG(&[0, -3, 1], 2),
    },
    // d(d-1)(d-8)/6
    Transcribed {
        label: "X3",
        c4: "-1/2",
        c2: "3",
        c5: "-1",
        dim: InDimG(&[0, 8, -9, 1], 6),
    },
    // d(d-1)(d-3)(d-14)/24
    Transcribed {
        label: "X4",
        c4: "0",
        c2: "4",
        c5: "-1/2",
        dim: InDimG(&[0, -42, 59, -18, 1], 24),
    },
    Transcribed {
        label: "Y2",
        c4: "-1-a",
        c2: "2-2*a",
        c5: "-3/2-a",
        dim: Factored((-5, 1), &[(3, -2, 1), (6, 5, 1)], &[(1, 0, 2), (6, -1, 1), (12, -1, 1)]),
    },
    Transcribed {
        label: "Y2'",
        c4: "-1-b",
        c2: "2-2*b",
        c5: "-3/2-b",
        dim: Factored(
            (-270, 1),
            &[(1, -1, 1), (2, 1, 1)],
            &[(1, 0, 1), (6, -1, 2), (12, -1, 1)],
        ),
    },
    Transcribed {
        label: "B''",
        c4: "-1+g",
        c2: "2+2*g",
        c5: "-3/2+g",
        dim: Factored(
            (-27, 1),
            &[(1, -1, 1), (2, 1, 1), (3, -2, 1), (3, 2, 1), (6, -5, 1), (6, 5, 1)],
            &[(1, 0, 2), (6, -1, 2), (9, -1, 1), (18, -1, 1)],
        ),
    },
    Transcribed {
        label: "C",
        c4: "-1/2-3/2*a",
        c2: "3-3*a",
        c5: "-1-3/2*a",
        dim: Factored(
            (40, 3),
            &[(2, -1, 1), (2, 1, 1), (6, -5, 1), (6, 5, 1)],
            &[(1, 0, 3), (6, -1, 1), (9, -1, 1), (12, -1, 1)],
        ),
    },
    Transcribed {
        label: "C'",
        c4: "-1/2-3/2*b",
        c2: "3-3*b",
        c5: "-1-3/2*b",
        dim: Factored(
            (5120, 1),
            &[(1, -1, 1), (3, -2, 1), (3, 1, 1), (3, 2, 1)],
            &[(1, 0, 1), (6, -1, 3), (12, -1, 1), (18, -1, 1)],
        ),
    },
    Transcribed {
        label: "J''",
        c4: "-1+2*g",
        c2: "2+4*g",
        c5: "-3/2+2*g",
        dim: Factored(
            (729, 1),
            &[
                (1, -1, 1),
                (2, -1, 1),
                (2, 1, 1),
                (3, -2, 1),
                (3, 1, 1),
                (4, 1, 1),
                (6, 5, 1),
                (12, -5, 1),
            ],
            &[(1, 0, 2), (6, -1, 2), (9, -1, 1), (12, -1, 2), (18, -1, 1)],
        ),
    },
    Transcribed {
        label: "Y4",
        c4: "-6*a",
        c2: "4-12*a",
        c5: "-1/2-6*a",
        dim: Factored(
            (-5, 6),
            &[
                (1, -1, 1),
                (2, -1, 1),
                (3, -2, 1),
                (6, -5, 1),
                (6, 5, 1),
                (7, -1, 1),
                (9, -2, 1),
                (12, -5, 1),
            ],
            &[(1, 0, 4), (6, -1, 2), (9, -1, 1), (12, -1, 1), (18, -1, 1), (24, -1, 1)],
        ),
    },
    Transcribed {
        label: "Y4'",
        c4: "-6*b",
        c2: "4-12*b",
        c5: "-1/2-6*b",
        dim: Factored(
            (-5, 1),
            &[
                (1, -1, 1),
                (2, 1, 1),
                (3, 1, 1),
                (3, 2, 1),
                (4, 1, 1),
                (6, 5, 1),
                (18, 1, 1),
                (42, -1, 1),
            ],
            &[(1, 0, 2), (6, -1, 4), (8, -1, 1), (9, -1, 1), (12, -1, 1), (18, -1, 1)],
        ),
    },
    Transcribed {
        label: "D",
        c4: "-3*a-b",
        c2: "4-6*a-2*b",
        c5: "-1/2-3*a-b",
        dim: Factored(
            (-270, 1),
            &[
                (1, -1, 1),
                (2, -1, 1),
                (2, 1, 1),
                (3, 2, 1),
                (5, -1, 1),
                (6, 5, 1),
                (12, -5, 1),
            ],
            &[(1, 0, 3), (6, -1, 3), (12, -1, 2), (24, -1, 1)],
        ),
    },
    Transcribed {
        label: "D'",
        c4: "-a-3*b",
        c2: "4-2*a-6*b",
        c5: "-1/2-a-3*b",
        dim: Factored(
            (-10, 1),
            &[
                (1, -1, 1),
                (3, -2, 1),
                (3, 1, 1),
                (4, 1, 1),
                (6, -5, 1),
                (6, 5, 1),
                (30, 1, 1),
            ],
            &[(1, 0, 3), (6, -1, 3), (8, -1, 1), (12, -1, 2)],
        ),
    },
    Transcribed {
        label: "E''",
        c4: "-3/4+3/2*g",
        c2: "5/2+3*g",
        c5: "-5/4+3/2*g",
        dim: Factored(
            (2048, 1),
            &[
                (1, -1, 1),
                (2, -1, 1),
                (2, 1, 1),
                (3, -2, 1),
                (3, 1, 1),
                (3, 2, 1),
                (6, -5, 1),
                (6, 5, 1),
            ],
            &[(1, 0, 2), (6, -1, 2), (8, -1, 1), (12, -1, 2), (24, -1, 1)],
        ),
    },
    Transcribed {
        label: "H",
        c4: "-3*a",
        c2: "4-6*a",
        c5: "-1/2-3*a",
        dim: Factored(
            (-5, 3),
            &[
                (1, -1, 1),
                (2, 1, 1),
                (3, 2, 1),
                (5, -1, 1),
                (6, -5, 1),
                (6, 5, 1),
                (9, -2, 1),
                (12, -5, 1),
            ],
            &[(1, 0, 4), (6, -1, 3), (9, -1, 1), (12, -1, 2)],
        ),
    },
    Transcribed {
        label: "H'",
        c4: "-3*b",
        c2: "4-6*b",
        c5: "-1/2-3*b",
        dim: Factored(
            (-10, 3),
            &[
                (1, -1, 1),
                (3, -2, 1),
                (3, 2, 1),
                (4, 1, 1),
                (6, -5, 1),
                (6, 5, 1),
                (18, 1, 1),
                (30, 1, 1),
            ],
            &[(1, 0, 3), (6, -1, 4), (12, -1, 2), (18, -1, 1)],
        ),
    },
    Transcribed {
        label: "G",
        c4: "-4*a",
        c2: "4-8*a",
        c5: "-1/2-4*a",
        dim: Factored(
            (5, 2),
            &[
                (1, -1, 1),
                (2, 1, 1),
                (3, -2, 1),
                (6, -5, 1),
                (6, 5, 1),
                (9, -2, 1),
                (12, -5, 1),
            ],
            &[(1, 0, 4), (6, -1, 2), (12, -1, 2), (18, -1, 1)],
        ),
    },
    Transcribed {
        label: "G'",
        c4: "-4*b",
        c2: "4-8*b",
        c5: "-1/2-4*b",
        dim: Factored(
            (135, 1),
            &[
                (1, -1, 1),
                (2, 1, 1),
                (3, -2, 1),
                (3, 2, 1),
                (4, 1, 1),
                (6, 5, 1),
                (18, 1, 1),
            ],
            &[(1, 0, 2), (6, -1, 4), (9, -1, 1), (12, -1, 2)],
        ),
    },
    Transcribed {
        label: "F",
        c4: "-2*a-b",
        c2: "4-4*a-2*b",
        c5: "-1/2-2*a-b",
        dim: Factored(
            (-270, 1),
            &[(1, -1, 1), (2, 1, 1), (3, -2, 1), (3, 1, 1), (6, 5, 1), (12, -5, 1)],
            &[(1, 0, 3), (6, -1, 2), (12, -1, 2), (18, -1, 1)],
        ),
    },
    Transcribed {
        label: "F'",
        c4: "-a-2*b",
        c2: "4-2*a-4*b",
        c5: "-1/2-a-2*b",
        dim: Factored(
            (-3645, 1),
            &[(1, -1, 1), (2, -1, 1), (2, 1, 1), (3, -2, 1), (4, 1, 1), (6, 5, 1)],
            &[(1, 0, 2), (6, -1, 3), (9, -1, 1), (12, -1, 2)],
        ),
    },
    Transcribed {
        label: "Y3",
        c4: "-1/2-3*a",
        c2: "3-6*a",
        c5: "-1-3*a",
        dim: Factored(
            (-10, 3),
            &[(1, -1, 1), (3, -2, 1), (5, -1, 1), (6, -5, 1), (6, 5, 1)],
            &[(1, 0, 3), (6, -1, 2), (12, -1, 1), (18, -1, 1)],
        ),
    },
    Transcribed {
        label: "Y3'",
        c4: "-1/2-3*b",
        c2: "3-6*b",
        c5: "-1-3*b",
        dim: Factored(
            (-5, 1),
            &[(1, -1, 1), (2, 1, 1), (3, 2, 1), (6, 5, 1), (30, 1, 1)],
            &[(1, 0, 2), (6, -1, 3), (9, -1, 1), (12, -1, 1)],
        ),
    },
    Transcribed {
        label: "I",
        c4: "-2*a",
        c2: "4-4*a",
        c5: "-1/2-2*a",
        dim: Factored(
            (-5, 2),
            &[
                (3, -2, 1),
                (3, 1, 1),
                (3, 2, 1),
                (5, -1, 1),
                (6, -5, 1),
                (6, 5, 1),
                (12, -5, 1),
            ],
            &[(1, 0, 4), (6, -1, 2), (8, -1, 1), (9, -1, 1), (12, -1, 1)],
        ),
    },
    Transcribed {
        label: "I'",
        c4: "-2*b",
        c2: "4-4*b",
        c5: "-1/2-2*b",
        dim: Factored(
            (-3645, 1),
            &[
                (1, -1, 1),
                (2, -1, 1),
                (2, 1, 1),
                (3, 2, 1),
                (4, 1, 1),
                (6, -5, 1),
                (30, 1, 1),
            ],
            &[(1, 0, 2), (6, -1, 4), (12, -1, 1), (18, -1, 1), (24, -1, 1)],
        ),
    },
];

/// Dimension formula with exact coefficient lists (lowest degree first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimFormula {
    /// Polynomial in `dim g`.
    InDimG(Vec<Rational>),
    /// `num(alpha) / den(alpha)` with integer coefficients.
    InAlpha { num: Vec<BigInt>, den: Vec<BigInt> },
}

/// Result of evaluating a dimension formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimValue {
    Exact(Rational),
    /// Depends on `dim g` (the `X1` row is exactly the marker `DIM_G`).
    InDimG(Vec<Rational>),
}

impl DimValue {
    pub fn is_dim_g_marker(&self) -> bool {
        matches!(self, DimValue::InDimG(p) if *p == [Rational::zero(), Rational::one()])
    }

    pub fn resolve(&self, dim_g: usize) -> Rational {
        match self {
            DimValue::Exact(v) => v.clone(),
            DimValue::InDimG(p) => horner(p, &int(dim_g as i64)),
        }
    }
}

fn horner(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn horner_int(coeffs: &[BigInt], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}

fn poly_mul(p: &[BigInt], q: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in q.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn expand(scale: i64, factors: &[Factor]) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(scale)];
    for &(a, b, e) in factors {
        for _ in 0..e {
            p = poly_mul(&p, &[BigInt::from(b), BigInt::from(a)]);
        }
    }
    p
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Row {
    pub label: String,
    pub c4: Affine,
    pub c2: Affine,
    pub c5: Affine,
    pub dim: DimFormula,
}

impl Table2Row {
    pub fn dim_at(&self, alpha: &Rational) -> Result<DimValue> {
        match &self.dim {
            DimFormula::InDimG(p) => {
                if p.len() == 1 {
                    Ok(DimValue::Exact(p[0].clone()))
                } else {
                    Ok(DimValue::InDimG(p.clone()))
                }
            }
            DimFormula::InAlpha { num, den } => {
                let d = horner_int(den, alpha);
                if d.is_zero() {
                    return Err(Error::PoleEncountered {
                        label: self.label.clone(),
                        alpha: to_pq(alpha),
                    });
                }
                Ok(DimValue::Exact(horner_int(num, alpha) / d))
            }
        }
    }
}

/// Which coefficient list of a row a perturbation touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoefficientSlot {
    Numerator(usize),
    Denominator(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2 {
    pub rows: Vec<Table2Row>,
}

impl Table2 {
    pub fn standard() -> Self {
        let parse = |s: &str| s.parse::<Affine>().expect("well-formed column");
        let rows = ROWS
            .iter()
            .map(|t| Table2Row {
                label: t.label.to_string(),
                c4: parse(t.c4),
                c2: parse(t.c2),
                c5: parse(t.c5),
                dim: match &t.dim {
                    InDimG(coeffs, den) => DimFormula::InDimG(coeffs.iter().map(|&c| ratio(c, *den)).collect()),
                    Factored((p, q), num, den) => DimFormula::InAlpha {
                        num: expand(*p, num),
                        den: expand(*q, den),
                    },
                },
            })
            .collect();
        Self { rows }
    }

    pub fn row(&self, label: &str) -> Option<&Table2Row> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.rows.iter().map(|r| r.label.as_str())
    }

    /// Tabulated dimension at `alpha` (valid on the exceptional line only).
    pub fn dim(&self, label: &str, alpha: &Rational) -> Result<DimValue> {
        self.row(label)
            .ok_or_else(|| Error::NoFormula(label.to_string()))?
            .dim_at(alpha)
    }

    /// Exact dimension for an algebra of dimension `dim_g` at `alpha`.
    pub fn dim_resolved(&self, label: &str, alpha: &Rational, dim_g: usize) -> Result<Rational> {
        Ok(self.dim(label, alpha)?.resolve(dim_g))
    }

    /// Rows whose eigenvalue columns are not `(c2 - 4)/2` and `(c2 - 5)/2`
    /// along the exceptional line.
    pub fn column_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.rows {
            let half = ratio(1, 2);
            let want4 = r.c2.shift(&int(-4)).scale(&half);
            let want5 = r.c2.shift(&int(-5)).scale(&half);
            if r.c4.on_exceptional_line() != want4.on_exceptional_line() {
                out.push(format!(
                    "{}: C4 column {} differs from (C2-4)/2 = {}",
                    r.label, r.c4, want4
                ));
            }
            if r.c5.on_exceptional_line() != want5.on_exceptional_line() {
                out.push(format!(
                    "{}: C5 column {} differs from (C2-5)/2 = {}",
                    r.label, r.c5, want5
                ));
            }
        }
        out
    }

    /// Rows whose dimension is undefined or non-integral at an exceptional point.
    pub fn integrality_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.rows {
            for (p, q) in EXCEPTIONAL_ALPHAS {
                let a = ratio(p, q);
                match r.dim_at(&a) {
                    Ok(DimValue::Exact(v)) if !v.is_integer() => out.push(format!(
                        "{}: non-integral dimension {} at alpha = {}",
                        r.label,
                        display(&v),
                        display(&a)
                    )),
                    Err(e) => out.push(format!("{}: {e}", r.label)),
                    _ => {}
                }
            }
        }
        out
    }

    /// Every perturbable dimension coefficient, as `(row, slot)`.
    pub fn coefficient_slots(&self) -> Vec<(usize, CoefficientSlot)> {
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            if let DimFormula::InAlpha { num, den } = &r.dim {
                out.extend((0..num.len()).map(|j| (i, CoefficientSlot::Numerator(j))));
                out.extend((0..den.len()).map(|j| (i, CoefficientSlot::Denominator(j))));
            }
        }
        out
    }

    /// Adds `delta` to one expanded dimension coefficient.
    pub fn perturb_coefficient(&mut self, row: usize, slot: CoefficientSlot, delta: i64) {
        if let DimFormula::InAlpha { num, den } = &mut self.rows[row].dim {
            match slot {
                CoefficientSlot::Numerator(j) => num[j] += delta,
                CoefficientSlot::Denominator(j) => den[j] += delta,
            }
        }
    }

    /// JSON audit form: label, columns and `num`/`den` coefficient lists.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                let dim = match &r.dim {
                    DimFormula::InDimG(p) => serde_json::json!({
                        "in_dim_g": p.iter().map(to_pq).collect::<Vec<_>>(),
                    }),
                    DimFormula::InAlpha { num, den } => serde_json::json!({
                        "num": num.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "den": den.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    }),
                };
                serde_json::json!({
                    "label": r.label,
                    "c4": r.c4.to_string(),
                    "c2": r.c2.to_string(),
                    "c5": r.c5.to_string(),
                    "dim": dim,
                })
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

impl Default for Table2 {
    fn default() -> Self {
        Self::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(v: DimValue) -> Rational {
        match v {
            DimValue::Exact(v) => v,
            other => panic!("expected a number, got {other:?}"),
        }
    }

    #[test]
    fn expansion_matches_factored_evaluation() {
        // Y2 at alpha = -1/3: -5(3a-2)(6a+5) / (a^2 (6a-1)(12a-1))
        let a = ratio(-1, 3);
        let l = |p: i64, q: i64| ratio(p, 1) * &a + ratio(q, 1);
        let direct = ratio(-5, 1) * l(3, -2) * l(6, 5) / (&a * &a * l(6, -1) * l(12, -1));
        assert_eq!(exact(Table2::standard().dim("Y2", &a).unwrap()), direct);
    }

    #[test]
    fn i_prime_vanishes_at_g2() {
        assert_eq!(exact(Table2::standard().dim("I'", &ratio(-1, 4)).unwrap()), ratio(0, 1));
        assert_eq!(
            exact(Table2::standard().dim("I", &ratio(-1, 4)).unwrap()),
            ratio(924, 1)
        );
    }

    #[test]
    fn x1_is_the_dimension_marker() {
        let v = Table2::standard().dim("X1", &ratio(-1, 4)).unwrap();
        assert!(v.is_dim_g_marker());
        assert_eq!(v.resolve(14), ratio(14, 1));
        assert_eq!(
            Table2::standard().dim_resolved("X4", &ratio(0, 1), 8).unwrap(),
            ratio(-70, 1)
        );
    }

    #[test]
    fn poles_and_missing_rows() {
        let t = Table2::standard();
        assert!(matches!(t.dim("Y2", &ratio(0, 1)), Err(Error::PoleEncountered { .. })));
        assert!(matches!(t.dim("Y2", &ratio(1, 6)), Err(Error::PoleEncountered { .. })));
        assert!(matches!(t.dim("B", &ratio(-1, 4)), Err(Error::NoFormula(_))));
    }

    #[test]
    fn tabulated_data_is_consistent() {
        let t = Table2::standard();
        assert_eq!(t.rows.len(), 26);
        assert!(t.column_failures().is_empty(), "{:?}", t.column_failures());
        assert!(t.integrality_failures().is_empty(), "{:?}", t.integrality_failures());
    }

    #[test]
    fn every_single_coefficient_perturbation_is_caught() {
        let base = Table2::standard();
        for (row, slot) in base.coefficient_slots() {
            for delta in [1, -1] {
                let mut t = base.clone();
                t.perturb_coefficient(row, slot, delta);
                assert!(
                    !t.integrality_failures().is_empty(),
                    "{} {slot:?} {delta}",
                    t.rows[row].label
                );
            }
        }
    }

    #[test]
    fn column_perturbation_is_caught() {
        let mut t = Table2::standard();
        t.rows[7].c5 = t.rows[7].c5.shift(&ratio(1, 6));
        assert_eq!(t.column_failures().len(), 1);
    }
}
