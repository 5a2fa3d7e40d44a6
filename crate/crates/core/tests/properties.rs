mod support;

use proptest::prelude::*;
use support::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_scaling_identity(args in scaling_args()) {
        scaling_identity(args)?;
    }

    #[test]
    fn vandermonde_solutions_match_moments(args in vandermonde_args()) {
        vandermonde_roundtrip(args)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn one_by_one_matrix_follows_scalar(args in scalar_problem_args()) {
        matrix_scalar_equivalence(args)?;
    }

    #[test]
    fn solutions_superpose(args in scalar_problem_args()) {
        superposition(args)?;
    }

    #[test]
    fn eigenbasis_solves_match_matrix_solver(args in symmetric_args()) {
        diagonalization_equivalence(args)?;
    }
}

proptest! {
    #[test]
    fn json_reports_preserve_every_bit(
        vals in prop::collection::vec((1e-300f64..1e300, prop::option::of(-10.0f64..10.0), 0.0f64..1e3), 1..6)
    ) {
        use expquad::harness::{ConvergenceReport, ConvergenceRow, MethodSpec, TestProblem};
        let rows = vals
            .iter()
            .map(|&(error, eoc, cpu_seconds)| ConvergenceRow { h: 0.1 * error.sqrt(), error, eoc, cpu_seconds })
            .collect();
        let rep = ConvergenceReport {
            problem: TestProblem::t1(0.5, 4.0),
            method: MethodSpec::Pece,
            reference: "closed form".into(),
            rows,
        };
        prop_assert_eq!(ConvergenceReport::from_json(&rep.to_json().unwrap()).unwrap(), rep);
    }
}
