use casimir_core::algebra::{Algebra, AlgebraId};
use casimir_core::casimir::{split_casimir_2, SplitCasimirTensor};
use casimir_core::rational::{binomial_usize, ratio};
use casimir_core::wedge::*;
use casimir_core::Rational;

fn casimir(id: AlgebraId) -> SplitCasimirTensor {
    let a = Algebra::build(id).unwrap();
    split_casimir_2(&a.adjoint, &a.metric).unwrap()
}

fn operator(id: AlgebraId, n: usize) -> WedgeOperator {
    let c = casimir(id);
    let basis = WedgeBasis::new(c.dim(), n).unwrap();
    restrict_casimir(&c, &basis, &Caps::default()).unwrap()
}

#[test]
fn sl3_pair_wedge_trace() {
    let op = operator(AlgebraId::Sl(3), 2);
    assert_eq!(op.size(), 28);
    assert_eq!(trace_power(&op, 1, &Caps::default()).unwrap(), ratio(-4, 1));
}

#[test]
fn sl3_higher_wedges() {
    // dim 8: -(1/8) d (d + 6) and (1/8) d (d - 3)(d + 4)
    let caps = Caps::default();
    assert_eq!(
        trace_power(&operator(AlgebraId::Sl(3), 3), 3, &caps).unwrap(),
        ratio(-14, 1)
    );
    assert_eq!(
        trace_power(&operator(AlgebraId::Sl(3), 4), 2, &caps).unwrap(),
        ratio(60, 1)
    );
}

#[test]
fn trace_at_zero_is_basis_size() {
    let op = operator(AlgebraId::So(5), 3);
    assert_eq!(
        trace_power(&op, 0, &Caps::default()).unwrap(),
        ratio(binomial_usize(10, 3) as i64, 1)
    );
}

#[test]
fn empty_top_wedge() {
    let op = operator(AlgebraId::Sl(2), 5);
    assert_eq!(op.size(), 0);
    for k in 0..4 {
        assert_eq!(trace_power(&op, k, &Caps::default()).unwrap(), ratio(0, 1));
    }
}

#[test]
fn characteristic_identity_on_pairs() {
    for id in [
        AlgebraId::Sl(2),
        AlgebraId::Sl(3),
        AlgebraId::So(5),
        AlgebraId::Sp(4),
        AlgebraId::G2,
    ] {
        let op = operator(id, 2);
        assert!(annihilated_by(&op, &[ratio(0, 1), ratio(-1, 2)]), "{id}");
        assert!(!annihilated_by(&op, &[ratio(0, 1)]), "{id}");
    }
}

#[test]
fn pair_wedge_spectrum() {
    let op = operator(AlgebraId::Sl(3), 2);
    let cfg = RankConfig::default();
    let caps = Caps::default();
    assert_eq!(eigen_multiplicity(&op, &ratio(-1, 2), &cfg, &caps).unwrap(), 8);
    assert_eq!(eigen_multiplicity(&op, &ratio(0, 1), &cfg, &caps).unwrap(), 20);
    assert_eq!(eigen_multiplicity(&op, &ratio(1, 3), &cfg, &caps).unwrap(), 0);
}

#[test]
fn projector_route_small_cases() {
    let caps = Caps::default();
    assert_eq!(
        full_projector_trace(&casimir(AlgebraId::Sl(2)), 3, 1, &caps).unwrap(),
        ratio(-3, 2)
    );
    assert_eq!(
        full_projector_trace(&casimir(AlgebraId::Sl(3)), 2, 1, &caps).unwrap(),
        ratio(-4, 1)
    );
    assert_eq!(
        full_projector_trace(&casimir(AlgebraId::Sl(3)), 5, 0, &caps).unwrap(),
        ratio(56, 1)
    );
}

#[test]
fn routes_agree() {
    let caps = Caps::default();
    for id in [AlgebraId::Sl(2), AlgebraId::Sl(3), AlgebraId::So(5)] {
        let c = casimir(id);
        for n in 2..=4 {
            let basis = WedgeBasis::new(c.dim(), n).unwrap();
            let op = restrict_casimir(&c, &basis, &caps).unwrap();
            let wedge = trace_powers(&op, 3, &caps).unwrap();
            for (k, w) in wedge.iter().enumerate() {
                assert_eq!(&full_projector_trace(&c, n, k, &caps).unwrap(), w, "{id} n={n} k={k}");
            }
        }
    }
}

#[test]
fn caps_are_enforced() {
    let c = casimir(AlgebraId::Sl(3));
    let tight = Caps {
        max_wedge_dim: 10,
        ..Caps::default()
    };
    let basis = WedgeBasis::new(8, 2).unwrap();
    assert!(matches!(
        restrict_casimir(&c, &basis, &tight),
        Err(casimir_core::Error::ResourceCap(_))
    ));
    let tight = Caps {
        max_full_tensor_dim: 100,
        ..Caps::default()
    };
    assert!(full_projector_trace(&c, 3, 1, &tight).is_err());
}

#[test]
fn moments_match_spectrum() {
    let op = operator(AlgebraId::Sl(3), 3);
    let lambdas: Vec<Rational> = [(-3, 2), (-1, 2), (0, 1), (-1, 1), (-1, 6), (-5, 6), (-2, 3)]
        .iter()
        .map(|&(p, q)| ratio(p, q))
        .collect();
    let caps = Caps::default();
    let spec = spectrum(&op, &lambdas, &RankConfig::default(), &caps).unwrap();
    let total: usize = spec.iter().map(|s| s.1).sum();
    assert_eq!(total, 56);
    let traces = trace_powers(&op, 4, &caps).unwrap();
    for (k, t) in traces.iter().enumerate() {
        let m: Rational = spec
            .iter()
            .map(|(l, m)| casimir_core::rational::pow(l, k) * Rational::from_integer((*m).into()))
            .sum();
        assert_eq!(&m, t, "k={k}");
    }
}
