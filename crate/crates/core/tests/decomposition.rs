use casimir_core::algebra::{build_algebra, Algebra, AlgebraId};
use casimir_core::decomposition::*;
use casimir_core::linalg::RatMatrix;
use casimir_core::rational::{int, parse_pq, ratio};
use casimir_core::vogel::Scope;
use casimir_core::{Error, Rational};
use proptest::prelude::*;

fn status_at(r: &DecompositionReport, lambda: Rational) -> (GroupStatus, usize) {
    let g = r.group(&lambda).unwrap_or_else(|| panic!("no group at {lambda}"));
    (g.status.clone(), g.observed)
}

#[test]
fn sl3_pairs_match() {
    let r = verify_decomposition(AlgebraId::Sl(3), 2, &SolverConfig::default()).unwrap();
    assert_eq!(r.groups.len(), 2);
    assert_eq!(status_at(&r, ratio(-1, 2)), (GroupStatus::Matched, 8));
    assert_eq!(status_at(&r, int(0)), (GroupStatus::Matched, 20));
}

#[test]
fn sl3_triples() {
    let r = verify_decomposition(AlgebraId::Sl(3), 3, &SolverConfig::default()).unwrap();
    assert_eq!(status_at(&r, ratio(-3, 2)), (GroupStatus::Matched, 1));
    assert_eq!(status_at(&r, ratio(-1, 2)), (GroupStatus::Matched, 20));
    assert_eq!(status_at(&r, int(0)), (GroupStatus::Matched, 0));
    let solved = r.solved();
    assert_eq!(solved["Y2"], "27");
    assert_eq!(solved["Y2''"], "8");
    assert_eq!(solved["Y2'"], "0");
}

#[test]
fn g2_fifth_power_cancellation() {
    let r = verify_decomposition(AlgebraId::G2, 5, &SolverConfig::default()).unwrap();
    assert_eq!(r.scope, Scope::ExceptionalLine);
    assert_eq!(r.wedge_dim, 2002);
    let zero = r.group(&int(0)).unwrap();
    assert_eq!(zero.observed, 0);
    assert_eq!(zero.status, GroupStatus::Matched);
    assert_eq!(zero.expected, "dimX5+dimI");
    assert!(r.groups.iter().all(|g| g.status == GroupStatus::Matched));
}

#[test]
fn sl4_m3_group_is_reported_honestly() {
    let cfg = SolverConfig::default();
    let r = verify_decomposition(AlgebraId::Sl(4), 5, &cfg).unwrap();
    let g = r.group(&int(-1)).unwrap();
    assert!(g.labels.iter().any(|c| c.label == "M3" && c.dim == Some(int(245))));
    // M3 shares its eigenvalue with two labels of unknown dimension
    assert_eq!(g.status, GroupStatus::Undetermined);
    assert!(r.is_consistent());
}

#[test]
fn moments_close_for_sl3_fifth_power() {
    let cfg = SolverConfig::default();
    let a = Algebra::build(AlgebraId::Sl(3)).unwrap();
    let (groups, _) = observed_groups(&a, 5, Scope::Full, &cfg).unwrap();
    let m = moment_consistency(&a, 5, 4, Some(&groups), &cfg).unwrap();
    assert_eq!(m.status, MomentStatus::Closed);
    assert!(m.rows.iter().all(|r| r.residual.as_deref() == Some("0/1")));
    assert_eq!(m.rows[0].computed, "56/1");
}

#[test]
fn g2_fourth_power_moments_without_spectrum() {
    let cfg = SolverConfig::default();
    let a = Algebra::build(AlgebraId::G2).unwrap();
    let m = moment_consistency(&a, 4, 3, None, &cfg).unwrap();
    // four groups lack tabulated dimensions, and four traces pin them down
    assert_eq!(m.unknown_lambdas.len(), 4);
    assert_eq!(m.status, MomentStatus::Closed);
}

#[test]
fn perturbed_dimension_is_caught() {
    let mut cfg = SolverConfig::default();
    cfg.dim_overrides.insert("X2".into(), int(21));
    let r = verify_decomposition(AlgebraId::Sl(3), 2, &cfg).unwrap();
    assert_eq!(status_at(&r, int(0)).0, GroupStatus::Inconsistent);
    assert!(!r.is_consistent());

    let mut cfg = SolverConfig::default();
    cfg.dim_overrides.insert("I".into(), int(925));
    let r = verify_decomposition(AlgebraId::G2, 5, &cfg).unwrap();
    assert_eq!(status_at(&r, int(0)).0, GroupStatus::Inconsistent);
}

#[test]
fn every_matched_group_flips_when_a_dimension_is_off_by_one() {
    let base = verify_decomposition(AlgebraId::G2, 4, &SolverConfig::default()).unwrap();
    for g in base.groups.iter().filter(|g| g.status == GroupStatus::Matched) {
        for c in &g.labels {
            let mut cfg = SolverConfig::default();
            cfg.dim_overrides
                .insert(c.label.clone(), c.dim.clone().unwrap() + int(1));
            let r = verify_decomposition(AlgebraId::G2, 4, &cfg).unwrap();
            assert_eq!(
                r.group(&parse_pq(&g.lambda).unwrap()).unwrap().status,
                GroupStatus::Inconsistent,
                "{}",
                c.label
            );
        }
    }
}

#[test]
fn shifted_catalog_eigenvalue_is_a_spectrum_mismatch() {
    let mut cfg = SolverConfig::default();
    cfg.catalog.perturb_eigenvalue(2, Scope::Full, 1, &ratio(1, 1000));
    let err = verify_decomposition(AlgebraId::Sl(3), 2, &cfg).unwrap_err();
    assert!(matches!(err, Error::SpectrumMismatch(_)));
}

#[test]
fn spectrum_cap() {
    let cfg = SolverConfig {
        caps: casimir_core::wedge::Caps {
            max_spectrum_dim: 100,
            ..Default::default()
        },
        ..Default::default()
    };
    assert!(matches!(
        verify_decomposition(AlgebraId::G2, 5, &cfg),
        Err(Error::ResourceCap(_))
    ));
}

/// Unit upper times unit lower triangular: always invertible.
fn basis_change(dim: usize, upper: &[i64], lower: &[i64]) -> RatMatrix {
    let mut u = RatMatrix::identity(dim);
    let mut l = RatMatrix::identity(dim);
    let mut it = upper.iter().cycle();
    let mut jt = lower.iter().cycle();
    for i in 0..dim {
        for j in i + 1..dim {
            u[(i, j)] = int(*it.next().unwrap());
            l[(j, i)] = int(*jt.next().unwrap());
        }
    }
    u.mul(&l)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]
    #[test]
    fn reports_do_not_depend_on_the_basis(
        upper in prop::collection::vec(-2i64..=2, 1..12),
        lower in prop::collection::vec(-2i64..=2, 1..12),
        n in 2usize..=4,
    ) {
        let id = AlgebraId::Sl(3);
        let cfg = SolverConfig::default();
        let f = build_algebra(id).unwrap().change_basis(&basis_change(8, &upper, &lower)).unwrap();
        f.validate().unwrap();
        let moved = Algebra::from_structure_constants(id, f).unwrap();
        let a = verify_decomposition_for(&moved, n, &cfg).unwrap();
        let b = verify_decomposition(id, n, &cfg).unwrap();
        prop_assert_eq!(a, b);
    }
}
