//! Vogel parameters, the per-n eigenvalue catalogs and the tabulated
//! exceptional-line data.

mod catalog;
mod table2;

pub use catalog::{Catalog, CatalogTerm, EvaluatedTerm, Scope, CATALOG_LABELS};
pub use table2::{CoefficientSlot, DimFormula, DimValue, Table2, Table2Row, EXCEPTIONAL_ALPHAS};

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::AlgebraId;
use crate::error::{Error, Result};
use crate::rational::{display, parse_pq, ratio, Rational};

/// Normalized so that `alpha + beta + gamma = 1/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VogelPoint {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl VogelPoint {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Self { alpha, beta, gamma }
    }

    /// The point on the line `gamma = 1/3` with the given `alpha`.
    pub fn exceptional_line(alpha: Rational) -> Self {
        let gamma = ratio(1, 3);
        let beta = ratio(1, 2) - &alpha - &gamma;
        Self { alpha, beta, gamma }
    }

    pub fn is_normalized(&self) -> bool {
        &self.alpha + &self.beta + &self.gamma == ratio(1, 2)
    }

    pub fn product(&self) -> Rational {
        &self.alpha * &self.beta * &self.gamma
    }
}

impl Serialize for VogelPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("VogelPoint", 3)?;
        st.serialize_field("alpha", &crate::rational::to_pq(&self.alpha))?;
        st.serialize_field("beta", &crate::rational::to_pq(&self.beta))?;
        st.serialize_field("gamma", &crate::rational::to_pq(&self.gamma))?;
        st.end()
    }
}

pub fn vogel_point(id: AlgebraId) -> Result<VogelPoint> {
    let id = id.validate()?;
    let r = |p: i64, q: i64| ratio(p, q);
    Ok(match id {
        AlgebraId::Sl(n) => {
            let n = n as i64;
            VogelPoint::new(r(-1, n), r(1, n), r(1, 2))
        }
        AlgebraId::So(n) => {
            let n = n as i64;
            VogelPoint::new(r(-1, n - 2), r(2, n - 2), r(n - 4, 2 * n - 4))
        }
        AlgebraId::Sp(n) => {
            let n = n as i64;
            VogelPoint::new(r(1, n + 2), r(-2, n + 2), r(n + 4, 2 * n + 4))
        }
        AlgebraId::G2 => VogelPoint::new(r(-1, 4), r(5, 12), r(1, 3)),
        AlgebraId::F4 => VogelPoint::new(r(-1, 9), r(5, 18), r(1, 3)),
        AlgebraId::E6 => VogelPoint::new(r(-1, 12), r(1, 4), r(1, 3)),
        AlgebraId::E7 => VogelPoint::new(r(-1, 18), r(2, 9), r(1, 3)),
        AlgebraId::E8 => VogelPoint::new(r(-1, 30), r(1, 5), r(1, 3)),
    })
}

/// `c + a*alpha + b*beta + g*gamma`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Affine {
    pub c: Rational,
    pub a: Rational,
    pub b: Rational,
    pub g: Rational,
}

impl Affine {
    pub fn new(c: Rational, a: Rational, b: Rational, g: Rational) -> Self {
        Self { c, a, b, g }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(c, Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// Shorthand with small-integer fractions `(num, den)`.
    pub fn q(c: (i64, i64), a: (i64, i64), b: (i64, i64), g: (i64, i64)) -> Self {
        Self::new(ratio(c.0, c.1), ratio(a.0, a.1), ratio(b.0, b.1), ratio(g.0, g.1))
    }

    pub fn eval(&self, p: &VogelPoint) -> Rational {
        &self.c + &self.a * &p.alpha + &self.b * &p.beta + &self.g * &p.gamma
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.c + &o.c, &self.a + &o.a, &self.b + &o.b, &self.g + &o.g)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(&self.c * s, &self.a * s, &self.b * s, &self.g * s)
    }

    pub fn shift(&self, s: &Rational) -> Self {
        Self::new(&self.c + s, self.a.clone(), self.b.clone(), self.g.clone())
    }

    /// Eliminates `gamma = 1/2 - alpha - beta`: returns `(c, a, b)`.
    pub fn on_plane(&self) -> (Rational, Rational, Rational) {
        (&self.c + &self.g * ratio(1, 2), &self.a - &self.g, &self.b - &self.g)
    }

    /// Equality as functions on the normalized plane.
    pub fn equal_on_plane(&self, o: &Self) -> bool {
        self.on_plane() == o.on_plane()
    }

    /// Restriction to the line `gamma = 1/3`, `beta = 1/6 - alpha`: `(c, a)`.
    pub fn on_exceptional_line(&self) -> (Rational, Rational) {
        (
            &self.c + &self.b * ratio(1, 6) + &self.g * ratio(1, 3),
            &self.a - &self.b,
        )
    }
}

impl fmt::Display for Affine {
    /// `-3/2+a`, `-1/2-3/2*b`, `4-4*g-2*b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if !self.c.is_zero() {
            out.push_str(&display(&self.c));
        }
        for (coef, sym) in [(&self.a, "a"), (&self.b, "b"), (&self.g, "g")] {
            if coef.is_zero() {
                continue;
            }
            let sign = if coef.is_negative() {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = coef.abs();
            out.push_str(sign);
            if mag.is_one() {
                out.push_str(sym);
            } else {
                out.push_str(&format!("{}*{sym}", display(&mag)));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl std::str::FromStr for Affine {
    type Err = Error;

    /// Inverse of `Display`: signed terms `q`, `q*s` or `s` with `s` in `a, b, g`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("affine expression {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = Affine::constant(Rational::zero());
        let mut start = 0;
        let bytes = compact.as_bytes();
        for end in 1..=bytes.len() {
            if end < bytes.len() && !matches!(bytes[end], b'+' | b'-') {
                continue;
            }
            let term = &compact[start..end];
            start = end;
            let (sign, body) = match term.as_bytes()[0] {
                b'-' => (-Rational::one(), &term[1..]),
                b'+' => (Rational::one(), &term[1..]),
                _ => (Rational::one(), term),
            };
            let (coef, sym) = match body.split_once('*') {
                Some((q, v)) => (parse_pq(q)?, Some(v)),
                None if matches!(body, "a" | "b" | "g") => (Rational::one(), Some(body)),
                None => (parse_pq(body).map_err(|_| bad())?, None),
            };
            let v = sign * coef;
            match sym {
                None => out.c += v,
                Some("a") => out.a += v,
                Some("b") => out.b += v,
                Some("g") => out.g += v,
                Some(_) => return Err(bad()),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_points() {
        assert_eq!(
            vogel_point(AlgebraId::Sl(3)).unwrap(),
            VogelPoint::new(ratio(-1, 3), ratio(1, 3), ratio(1, 2))
        );
        assert_eq!(
            vogel_point(AlgebraId::G2).unwrap(),
            VogelPoint::new(ratio(-1, 4), ratio(5, 12), ratio(1, 3))
        );
        assert_eq!(
            vogel_point(AlgebraId::So(5)).unwrap(),
            VogelPoint::new(ratio(-1, 3), ratio(2, 3), ratio(1, 6))
        );
        assert_eq!(vogel_point(AlgebraId::G2).unwrap().product(), ratio(-5, 144));
    }

    #[test]
    fn every_point_is_normalized() {
        let ids = [
            AlgebraId::Sl(2),
            AlgebraId::Sl(7),
            AlgebraId::So(5),
            AlgebraId::So(11),
            AlgebraId::Sp(4),
            AlgebraId::Sp(10),
        ];
        for id in ids.into_iter().chain(AlgebraId::EXCEPTIONAL) {
            assert!(vogel_point(id).unwrap().is_normalized(), "{id}");
        }
    }

    #[test]
    fn exceptional_line_points() {
        for id in AlgebraId::EXCEPTIONAL {
            let p = vogel_point(id).unwrap();
            assert_eq!(VogelPoint::exceptional_line(p.alpha.clone()), p);
        }
    }

    #[test]
    fn affine_text() {
        assert_eq!(Affine::q((-3, 2), (1, 1), (0, 1), (0, 1)).to_string(), "-3/2+a");
        assert_eq!(Affine::q((-1, 2), (0, 1), (-3, 2), (0, 1)).to_string(), "-1/2-3/2*b");
        assert_eq!(Affine::q((0, 1), (0, 1), (0, 1), (0, 1)).to_string(), "0");
        for s in ["-3/2+a", "4-2*b-4*g", "-1/2-3/2*a-3/2*b", "0", "g", "5/2"] {
            assert_eq!(s.parse::<Affine>().unwrap().to_string(), s);
        }
        assert!("2*x".parse::<Affine>().is_err());
    }

    #[test]
    fn plane_equality() {
        // 1/2 - a - b equals g on the plane
        let g = Affine::q((0, 1), (0, 1), (0, 1), (1, 1));
        let h = Affine::q((1, 2), (-1, 1), (-1, 1), (0, 1));
        assert!(g.equal_on_plane(&h));
        assert_ne!(g, h);
    }
}
