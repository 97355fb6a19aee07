//! Closed-form traces `Tr(ASym_n C_(n)^k)` and dimension formulas.

use crate::algebra::Family;
use crate::error::{Error, Result};
use crate::rational::{int, pow, ratio, Rational};
use crate::vogel::VogelPoint;

/// Largest `k` with a closed form for each `n` (`None`: every `k`).
pub fn max_printed_k(n: usize) -> Option<Option<usize>> {
    match n {
        2 => Some(None),
        3 | 4 => Some(Some(3)),
        5 => Some(Some(4)),
        _ => None,
    }
}

pub fn has_formula(n: usize, k: usize) -> bool {
    match max_printed_k(n) {
        Some(None) => true,
        Some(Some(m)) => k <= m,
        None => false,
    }
}

/// `point` is only consulted for `(n, k) = (5, 4)`.
pub fn universal_trace(n: usize, k: usize, dim_g: usize, point: Option<&VogelPoint>) -> Result<Rational> {
    if !has_formula(n, k) {
        return Err(Error::FormulaNotPrinted { n, k });
    }
    let d = int(dim_g as i64);
    let l = |c: i64| &d + int(c);
    let v = match (n, k) {
        (2, 0) => &d * l(-1) * ratio(1, 2),
        (2, k) => pow(&ratio(-1, 2), k) * &d,
        (3, 0) => &d * l(-1) * l(-2) * ratio(1, 6),
        (3, 1) => -(&d * l(-2)) * ratio(1, 2),
        (3, 2) => &d * &d * ratio(1, 4),
        (3, 3) => -(&d * l(6)) * ratio(1, 8),
        (4, 0) => &d * l(-1) * l(-2) * l(-3) * ratio(1, 24),
        (4, 1) => -(&d * l(-2) * l(-3)) * ratio(1, 4),
        (4, 2) => &d * l(-3) * l(4) * ratio(1, 8),
        (4, 3) => -(&d * l(-3) * l(20)) * ratio(1, 16),
        (5, 0) => &d * l(-1) * l(-2) * l(-3) * l(-4) * ratio(1, 120),
        (5, 1) => -(&d * l(-2) * l(-3) * l(-4)) * ratio(1, 12),
        (5, 2) => &d * l(-3) * l(-4) * l(10) * ratio(1, 24),
        (5, 3) => -(&d * l(-3) * (&d * &d + int(36) * &d - int(124))) * ratio(1, 48),
        (5, 4) => {
            let p = point.ok_or_else(|| Error::MissingParameter("Vogel point for n = 5, k = 4".into()))?;
            let inner = &d * &d + int(114) * &d - int(208) + int(36) * l(-10) * l(-9) * p.product();
            &d * l(-3) * inner * ratio(1, 96)
        }
        _ => unreachable!("guarded by has_formula"),
    };
    Ok(v)
}

/// `dim X_m` as a polynomial in `dim g`, `m = 0..=5`.
pub fn dim_x(m: usize, dim_g: usize) -> Rational {
    let d = int(dim_g as i64);
    let l = |c: i64| &d + int(c);
    match m {
        0 => int(1),
        1 => d,
        2 => &d * l(-3) * ratio(1, 2),
        3 => &d * l(-1) * l(-8) * ratio(1, 6),
        4 => &d * l(-1) * l(-3) * l(-14) * ratio(1, 24),
        5 => &d * l(-3) * l(-6) * (&d * &d - int(21) * &d + int(8)) * ratio(1, 120),
        _ => panic!("dim_x is defined for m = 0..=5, got {m}"),
    }
}

/// `dim M3`: SL(N), SO(N) or any exceptional algebra.
pub fn dim_m3(family: Family, n: Option<usize>) -> Result<Rational> {
    let need = || {
        n.map(|v| int(v as i64))
            .ok_or_else(|| Error::MissingParameter(format!("N for {family:?}")))
    };
    match family {
        Family::SL => {
            let n = need()?;
            let n2 = &n * &n;
            Ok((&n2 - int(1)) * (&n2 - int(2)) * (&n2 - int(9)) * ratio(1, 6))
        }
        Family::SO => {
            let n = need()?;
            let n2 = &n * &n;
            Ok(&n * (&n2 - int(1)) * (&n - int(3)) * (&n2 - int(16)) * ratio(1, 72))
        }
        Family::Exceptional => Ok(int(0)),
        Family::SP => Err(Error::NoFormula("M3 for the symplectic series".into())),
    }
}
