//! Chevalley basis of g2 built from its root system.
//!
//! Basis order: `e_a` for the six positive roots (by height), the simple
//! coroots `h_1, h_2`, then `e_-a` in the same order as the positive roots.
//! `[e_a, e_b] = N_ab e_(a+b)` with `|N_ab| = p + 1`; the signs are the first
//! assignment (in a fixed enumeration) that satisfies the Jacobi identity,
//! subject to `N_ba = -N_ab` and `N_(-a)(-b) = -N_ab`.

use std::collections::BTreeMap;

use super::{AlgebraId, StructureConstants};
use crate::error::{Error, Result};
use crate::rational::int;

type Root = [i64; 2];

/// Gram matrix of the simple roots; alpha_1 short, alpha_2 long.
const GRAM: [[i64; 2]; 2] = [[2, -3], [-3, 6]];

const POSITIVE: [Root; 6] = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];

fn ip(x: Root, y: Root) -> i64 {
    (0..2)
        .map(|i| (0..2).map(|j| x[i] * GRAM[i][j] * y[j]).sum::<i64>())
        .sum()
}

fn add(x: Root, y: Root) -> Root {
    [x[0] + y[0], x[1] + y[1]]
}

fn neg(x: Root) -> Root {
    [-x[0], -x[1]]
}

struct RootSystem {
    roots: Vec<Root>,
}

impl RootSystem {
    fn new() -> Self {
        let mut roots = POSITIVE.to_vec();
        roots.extend(POSITIVE.iter().map(|&r| neg(r)));
        Self { roots }
    }

    fn index(&self, r: Root) -> Option<usize> {
        self.roots.iter().position(|&x| x == r)
    }

    /// Basis index of the root vector for root number `i`.
    fn basis_index(i: usize) -> usize {
        if i < 6 {
            i
        } else {
            i + 2
        }
    }

    /// Largest `p` with `b - p a` a root.
    fn string_length(&self, a: Root, b: Root) -> i64 {
        let mut p = 0;
        while self.index([b[0] - (p + 1) * a[0], b[1] - (p + 1) * a[1]]).is_some() {
            p += 1;
        }
        p
    }

    /// Coroot of `a` in the basis of simple coroots.
    fn coroot(&self, a: Root) -> [i64; 2] {
        let norm = ip(a, a);
        let mut out = [0; 2];
        for (i, c) in out.iter_mut().enumerate() {
            let num = a[i] * GRAM[i][i];
            debug_assert_eq!(num % norm, 0, "g2 coroots are integral");
            *c = num / norm;
        }
        out
    }
}

type Table = Vec<Vec<Vec<(usize, i64)>>>;

fn bracket_table(rs: &RootSystem, n: &BTreeMap<(usize, usize), i64>) -> Table {
    let dim = 14;
    let mut t: Table = vec![vec![Vec::new(); dim]; dim];
    let simple = [POSITIVE[0], POSITIVE[1]];
    for (i, &a) in rs.roots.iter().enumerate() {
        let ea = RootSystem::basis_index(i);
        for (k, &s) in simple.iter().enumerate() {
            let hk = 6 + k;
            let v = 2 * ip(a, s) / ip(s, s);
            if v != 0 {
                t[hk][ea].push((ea, v));
                t[ea][hk].push((ea, -v));
            }
        }
        for (j, &b) in rs.roots.iter().enumerate() {
            let eb = RootSystem::basis_index(j);
            let sum = add(a, b);
            if sum == [0, 0] {
                let cr = rs.coroot(a);
                for (k, &c) in cr.iter().enumerate() {
                    if c != 0 {
                        t[ea][eb].push((6 + k, c));
                    }
                }
            } else if let Some(s) = rs.index(sum) {
                t[ea][eb].push((RootSystem::basis_index(s), n[&(i, j)]));
            }
        }
    }
    t
}

fn jacobi_holds(t: &Table) -> bool {
    let dim = t.len();
    let mut acc = vec![0i64; dim];
    for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                acc.iter_mut().for_each(|x| *x = 0);
                for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
                    for &(e, f1) in &t[p][q] {
                        for &(d, f2) in &t[e][r] {
                            acc[d] += f1 * f2;
                        }
                    }
                }
                if acc.iter().any(|&x| x != 0) {
                    return false;
                }
            }
        }
    }
    true
}

pub(crate) fn structure_constants() -> Result<StructureConstants> {
    let rs = RootSystem::new();
    let nroots = rs.roots.len();

    // Ordered pairs (i, j) with roots[i] + roots[j] a root, grouped into
    // classes closed under swap and negation; one sign per class.
    let negated = |i: usize| rs.index(neg(rs.roots[i])).expect("root system is symmetric");
    let mut classes: Vec<(usize, usize)> = Vec::new();
    for i in 0..nroots {
        for j in 0..nroots {
            if rs.index(add(rs.roots[i], rs.roots[j])).is_none() {
                continue;
            }
            let key = [(i, j), (j, i), (negated(i), negated(j)), (negated(j), negated(i))]
                .into_iter()
                .min()
                .expect("nonempty");
            if !classes.contains(&key) {
                classes.push(key);
            }
        }
    }
    classes.sort_unstable();

    for mask in 0u32..(1 << classes.len()) {
        let mut n = BTreeMap::new();
        for (bit, &(i, j)) in classes.iter().enumerate() {
            let sign = if mask >> bit & 1 == 1 { -1 } else { 1 };
            let v = sign * (rs.string_length(rs.roots[i], rs.roots[j]) + 1);
            n.insert((i, j), v);
            n.insert((j, i), -v);
            n.insert((negated(i), negated(j)), -v);
            n.insert((negated(j), negated(i)), v);
        }
        let table = bracket_table(&rs, &n);
        if jacobi_holds(&table) {
            let entries = table.iter().enumerate().flat_map(|(a, row)| {
                row.iter()
                    .enumerate()
                    .flat_map(move |(b, cell)| cell.iter().map(move |&(c, v)| (a, b, c, int(v))))
            });
            return StructureConstants::from_entries(Some(AlgebraId::G2), 14, entries);
        }
    }
    Err(Error::InternalConsistency(
        "no sign assignment satisfies the Jacobi identity for g2".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_system_shape() {
        let rs = RootSystem::new();
        let long = rs.roots.iter().filter(|&&r| ip(r, r) == 6).count();
        let short = rs.roots.iter().filter(|&&r| ip(r, r) == 2).count();
        assert_eq!((long, short), (6, 6));
        // the alpha_1-string through alpha_2 has length 3
        assert_eq!(rs.string_length(POSITIVE[0], POSITIVE[1]), 0);
        assert_eq!(rs.string_length(POSITIVE[0], POSITIVE[4]), 3);
    }

    #[test]
    fn integral_brackets() {
        let f = structure_constants().unwrap();
        assert!(f.entries().all(|(_, _, _, v)| v.is_integer()));
        f.validate().unwrap();
        // [e_1, e_2] = ±e_(a1+a2), [e_a1, e_-a1] = h_1
        assert_eq!(f.bracket(0, 1).len(), 1);
        assert_eq!(f.bracket(0, 8), &[(6, int(1))]);
    }
}
