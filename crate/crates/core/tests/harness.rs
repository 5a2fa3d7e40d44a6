//! Reference solutions, fine-grid cross-checks and report plumbing.

use std::time::Instant;

use expquad::harness::{
    exact_pde_semidiscrete, exact_t1, reference_fine_grid, run_convergence, ConvergenceReport, MethodSpec, TestProblem,
};
use expquad::solvers::mol_grid;
use expquad::{NodeSet, RationalApproximation};

fn rat() -> &'static RationalApproximation {
    RationalApproximation::shared(15).unwrap()
}

#[test]
fn t1_closed_form_matches_high_precision() {
    // y(1) = E_{α,1}(-3) + E_{α,p+1}(-3) at 100 digits (tools/reference_values.py)
    for (alpha, p, exact) in [
        (0.5, 2.0, 0.35029699883802148131),
        (1.5, 3.0, -0.055432822645417475707),
        (0.5, 3.0, 0.24277883799617234931),
        (1.5, 4.0, -0.14273948853902484349),
        (0.5, 4.0, 0.19622629099709836699),
        (0.5, 6.0, 0.17963893303161618988),
        (1.5, 2.0, 0.12890212597576952014),
        (0.5, 5.0, 0.18265370346198125638),
        (0.8, 3.0, 0.19232621201196374707),
    ] {
        let y = exact_t1(1.0, alpha, 3.0, p, 1.0).unwrap();
        assert!((y - exact).abs() <= 1e-14, "alpha={alpha} p={p}: {y} vs {exact}");
    }
}

#[test]
fn semidiscrete_reference_matches_high_precision() {
    for (alpha, p, m, amp) in [(0.6, 3.0, 16, 0.06137220860095967509), (0.8, 3.0, 8, 0.039062988451454846472)] {
        let u = exact_pde_semidiscrete(1.0, alpha, p, m).unwrap();
        for (ui, x) in u.iter().zip(mol_grid(m)) {
            assert!((ui - amp * (std::f64::consts::PI * x).sin()).abs() <= 1e-14, "alpha={alpha}: {ui}");
        }
    }
}

#[test]
fn classical_limit_fixes_the_forcing_exponent() {
    // α = 1, λ = 0: y' = t^{p-1}/Γ(p), so y = 1 + t^p/p!
    let y = exact_t1(0.7, 1.0, 0.0, 2.0, 1.0).unwrap();
    assert!((y - (1.0 + 0.49 / 2.0)).abs() < 1e-15);
}

#[test]
fn fine_grid_reproduces_closed_forms() {
    let t1 = TestProblem::t1(0.5, 6.0).build().unwrap();
    let y = reference_fine_grid(&t1, 1.0 / 2048.0, rat()).unwrap().last()[0];
    assert!((y - 0.17963893303161618988).abs() <= 1e-11);

    let pde = TestProblem::pde(0.8, 3.0, 8);
    let tr = reference_fine_grid(&pde.build().unwrap(), 1.0 / 1024.0, rat()).unwrap();
    let exact = exact_pde_semidiscrete(1.0, 0.8, 3.0, 8).unwrap();
    assert!((tr.last() - &exact).amax() <= 1e-10);

    let three =
        expquad::solve_exponential_cq(&pde.build().unwrap(), &NodeSet::optimal(3).unwrap(), 1.0 / 2048.0, rat())
            .unwrap();
    assert!((three.last() - &exact).amax() <= 1e-11);
}

#[test]
fn t2_reference_is_stable_under_halving() {
    let p = TestProblem::t2(0.5).build().unwrap();
    let a = reference_fine_grid(&p, 1.0 / 2048.0, rat()).unwrap().last()[0];
    let b = reference_fine_grid(&p, 1.0 / 4096.0, rat()).unwrap().last()[0];
    assert!((a - b).abs() <= 1e-12, "{a} vs {b}");
    assert!(reference_fine_grid(&p, 1.0 / 512.0, rat()).is_err());
}

#[test]
fn generic_nodes_converge_with_order_nu() {
    let problem = TestProblem::t1(0.5, 4.0);
    for (set, nu) in [("0", 1.0), ("0,1", 2.0), ("0,0.8,1", 3.0)] {
        let rep =
            run_convergence(&problem, &MethodSpec::cq(set.parse().unwrap()), &[1.0 / 256.0, 1.0 / 512.0], 1).unwrap();
        let eoc = rep.last_eoc().unwrap();
        assert!((eoc - nu).abs() <= 0.12, "{set}: EOC {eoc}");
    }
}

#[test]
fn pi_trapezoidal_reaches_one_plus_alpha() {
    for (alpha, target) in [(0.6, 1.6), (0.8, 1.8)] {
        let rep =
            run_convergence(&TestProblem::t1(alpha, 4.0), &MethodSpec::PiTrapezoidal, &[1.0 / 512.0, 1.0 / 1024.0], 1)
                .unwrap();
        let eoc = rep.last_eoc().unwrap();
        assert!((eoc - target).abs() <= 0.05, "alpha={alpha}: EOC {eoc}");
    }
}

#[test]
fn baselines_are_second_order_at_alpha_one() {
    for method in [MethodSpec::Pece, MethodSpec::PiTrapezoidal] {
        let rep = run_convergence(&TestProblem::t1(1.0, 3.0), &method, &[1.0 / 128.0, 1.0 / 256.0], 1).unwrap();
        let eoc = rep.last_eoc().unwrap();
        assert!((eoc - 2.0).abs() <= 0.05, "{method}: EOC {eoc}");
    }
}

/// Wall time of the coarsest halving step `1/8, 1/16, …` whose error is below
/// `target`.
fn time_to_accuracy(method: &MethodSpec, target: f64) -> f64 {
    let problem = TestProblem::t1(0.5, 6.0);
    let fde = problem.build().unwrap();
    let exact = exact_t1(1.0, 0.5, 3.0, 6.0, 1.0).unwrap();
    let mut h = 0.125;
    loop {
        let start = Instant::now();
        let y = method.solve(&fde, h).unwrap().last()[0];
        let secs = start.elapsed().as_secs_f64();
        if (y - exact).abs() <= target {
            return secs;
        }
        h *= 0.5;
        assert!(h > 1e-6, "{method} never reached {target:e}");
    }
}

#[test]
fn exponential_rule_is_cheaper_at_equal_accuracy() {
    let cq = MethodSpec::cq(NodeSet::optimal(4).unwrap());
    // reaching 1e-6 already bounds the PECE cost for every tighter target
    // from below; running it down to 1e-8 would take minutes
    let pece_floor = time_to_accuracy(&MethodSpec::Pece, 1e-6);
    for target in [1e-4, 1e-5, 1e-6, 1e-7, 1e-8] {
        let a = time_to_accuracy(&cq, target);
        let b = if target >= 1e-6 { time_to_accuracy(&MethodSpec::Pece, target) } else { pece_floor };
        assert!(a < b, "target {target:e}: exponential {a:e}s, PECE {b:e}s");
    }
}

#[test]
fn report_file_round_trip() {
    let rep = run_convergence(&TestProblem::t1(0.5, 2.0), &MethodSpec::Pece, &[0.25, 0.125], 2).unwrap();
    let path = std::env::temp_dir().join(format!("expquad-report-{}.json", std::process::id()));
    rep.write_json(&path).unwrap();
    let back = ConvergenceReport::read_json(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(back, rep);
    assert!(rep.to_csv().starts_with("h,error,eoc,cpu_seconds\n"));
    assert!(rep.rows[0].eoc.is_none());
}
