//! One PASS/FAIL line per acceptance criterion, plus the negative controls:
//! each injected wrong number must be caught by the suite.

use casimir_core::algebra::{build_algebra, AlgebraId};
use casimir_core::suite::{run_suite, CheckResult, Injection, RunConfig, SuiteReport, SuiteStatus};
use casimir_core::vogel::{Catalog, CoefficientSlot, Scope, Table2};

fn line(criterion: u8, title: &str, checks: &[&CheckResult]) -> bool {
    let pass = !checks.is_empty() && checks.iter().all(|c| c.pass);
    println!(
        "[{}] criterion {criterion:>2}: {title} ({} checks)",
        if pass { "PASS" } else { "FAIL" },
        checks.len()
    );
    for c in checks.iter().filter(|c| !c.pass) {
        println!("         {}: {}", c.name, c.detail);
    }
    pass
}

fn of(report: &SuiteReport, criterion: u8) -> Vec<&CheckResult> {
    report.checks.iter().filter(|c| c.criterion == criterion).collect()
}

fn caught(cfg: RunConfig, names: &[&str]) -> (bool, String) {
    let r = run_suite(&cfg).expect("config is valid");
    let hit: Vec<&String> = r
        .failed
        .iter()
        .filter(|f| names.iter().any(|n| f.starts_with(n)))
        .collect();
    (
        r.status == SuiteStatus::Fail && !hit.is_empty(),
        format!("failed checks: {:?}", r.failed),
    )
}

fn injected(inject: Injection, algebras: &[&str], n_values: &[usize]) -> RunConfig {
    RunConfig {
        algebras: algebras.iter().map(|s| s.to_string()).collect(),
        n_values: n_values.to_vec(),
        inject: vec![inject],
        ..RunConfig::default()
    }
}

fn main() {
    let report = run_suite(&RunConfig::default()).expect("default config is valid");
    let titles = [
        (0u8, "algebra construction and Casimir identities"),
        (1, "n = 2 traces, k = 0..6"),
        (2, "n = 3, 4 traces, k = 0..3"),
        (3, "n = 5 traces, k = 0..4"),
        (4, "characteristic identity M(M+1/2) = 0 at n = 2"),
        (5, "wedge restriction agrees with the full antisymmetrizer"),
        (6, "catalog spectrum and multiplicities, n = 2..4"),
        (7, "n = 5 spectrum (g2 exceptional, sl4 full)"),
        (8, "dim X5 closed form and trace solve"),
        (9, "tabulated data self-consistency"),
        (10, "M3 values and sl4 n = 5 moments"),
    ];
    let mut all = true;
    for (k, title) in titles {
        all &= line(k, title, &of(&report, k));
    }

    let controls = [
        (
            "wrong dimension coefficient in the table",
            injected(
                Injection::Table2Dim {
                    label: "I'".into(),
                    denominator: false,
                    index: 0,
                    delta: 1,
                },
                &["g2"],
                &[2],
            ),
            vec!["table2.integrality", "table2.iprime-g2", "dimx5.solve"],
        ),
        (
            "wrong eigenvalue column in the table",
            injected(
                Injection::Table2Column {
                    label: "Y4".into(),
                    column: 4,
                    delta: "1/2".into(),
                },
                &["g2"],
                &[2],
            ),
            vec!["table2.lambda-consistency"],
        ),
        (
            "wrong structure constant",
            injected(
                Injection::StructureConstant {
                    algebra: "sl3".into(),
                    a: 0,
                    b: 1,
                    c: 2,
                    delta: "1".into(),
                },
                &["sl3"],
                &[2, 3],
            ),
            vec!["algebra.structure.sl3"],
        ),
        (
            "wrong catalog eigenvalue",
            injected(
                Injection::CatalogEigenvalue {
                    n: 3,
                    scope: Scope::Full,
                    label: "Y2".into(),
                    delta: "1/7".into(),
                },
                &["sl3"],
                &[3],
            ),
            vec!["catalog.lambda-consistency", "spectrum.sl3.n3"],
        ),
    ];
    let mut controls_ok = true;
    for (title, cfg, names) in controls {
        let (ok, detail) = caught(cfg, &names);
        println!(
            "[{}] criterion 11: {title} is rejected",
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            println!("         {detail}");
        }
        controls_ok &= ok;
    }
    let (swept, total, missed) = sweep();
    println!(
        "[{}] criterion 11: exhaustive single-entry sweep, {}/{total} perturbations rejected",
        if missed.is_empty() { "PASS" } else { "FAIL" },
        total - missed.len()
    );
    for m in &missed {
        println!("         not caught: {m}");
    }
    all &= controls_ok && swept;
    println!("{}", report.notes.join("\n"));
    if !all {
        eprintln!("acceptance failures; see lines above");
        std::process::exit(1);
    }
}

/// Every dimension coefficient (+-1), every eigenvalue column (+1/60), every
/// catalog eigenvalue (+1/60) and every nonzero sl3 structure constant (+1).
fn sweep() -> (bool, usize, Vec<String>) {
    let bare = |inject: Injection, algebras: &[&str]| RunConfig {
        algebras: algebras.iter().map(|s| s.to_string()).collect(),
        n_values: vec![2],
        inject: vec![inject],
        ..RunConfig::default()
    };
    let mut cases = Vec::new();
    let table = Table2::standard();
    for (row, slot) in table.coefficient_slots() {
        let (denominator, index) = match slot {
            CoefficientSlot::Numerator(j) => (false, j),
            CoefficientSlot::Denominator(j) => (true, j),
        };
        for delta in [-1, 1] {
            let label = table.rows[row].label.clone();
            cases.push(bare(
                Injection::Table2Dim {
                    label,
                    denominator,
                    index,
                    delta,
                },
                &[],
            ));
        }
    }
    for r in &table.rows {
        for column in [2, 4, 5] {
            cases.push(bare(
                Injection::Table2Column {
                    label: r.label.clone(),
                    column,
                    delta: "1/60".into(),
                },
                &[],
            ));
        }
    }
    for ((n, scope), terms) in &Catalog::standard().terms {
        for t in terms {
            let inject = Injection::CatalogEigenvalue {
                n: *n,
                scope: *scope,
                label: t.label.clone(),
                delta: "1/60".into(),
            };
            cases.push(bare(inject, &[]));
        }
    }
    let sl3 = build_algebra(AlgebraId::Sl(3)).unwrap();
    for (a, b, c, _) in sl3.entries() {
        let inject = Injection::StructureConstant {
            algebra: "sl3".into(),
            a,
            b,
            c,
            delta: "1".into(),
        };
        cases.push(bare(inject, &["sl3"]));
    }
    let total = cases.len();
    let missed: Vec<String> = cases
        .into_iter()
        .filter(|cfg| run_suite(cfg).map_or(true, |r| r.status != SuiteStatus::Fail || r.failed.is_empty()))
        .map(|cfg| format!("{:?}", cfg.inject[0]))
        .collect();
    (missed.is_empty(), total, missed)
}
