use kphoton_jc::eigensolver::{hermitian_eigen, residual, DEFAULT_TOL};
use kphoton_jc::fock::{FockSpace, Ladder};
use kphoton_jc::model::{
    analytic_eigenspinor, block_decompose, build_interaction_hamiltonian, coupled_entry, tilted_block,
    Branch, Convention, ModelParams,
};
use kphoton_jc::su2::{
    displacement_matrix, perelomov_number_state, spin_operators, tilt_generator, Generator, Spin,
    TiltParams,
};
use kphoton_jc::{c64, DenseMatrix, C64};
use proptest::prelude::*;

fn expm_series(m: &DenseMatrix) -> DenseMatrix {
    let mut sum = DenseMatrix::identity(m.rows());
    let mut term = DenseMatrix::identity(m.rows());
    for i in 1..80 {
        term = (&term * m).scale_real(1.0 / i as f64);
        sum = &sum + &term;
    }
    sum
}

fn hermitian(n: usize, entries: &[(f64, f64)]) -> DenseMatrix {
    let rows: Vec<Vec<C64>> = (0..n)
        .map(|i| (0..n).map(|j| c64(entries[i * n + j].0, entries[i * n + j].1)).collect())
        .collect();
    let m = DenseMatrix::from_rows(&rows);
    (&m + &m.adjoint()).scale_real(0.5)
}

fn params() -> impl Strategy<Value = ModelParams> {
    (1usize..=4, 0.3f64..3.0, 0.5f64..1.5, 0.0f64..1.0).prop_map(|(k, omega, detune, coupling)| {
        ModelParams::new(k, omega, detune * omega * k as f64, coupling, 24).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_commutator_below_truncation(dim in 2usize..40) {
        let f = FockSpace::new(dim).unwrap();
        let c = f.annihilation().commutator(&f.creation());
        for n in 0..dim - 1 {
            prop_assert!((c[(n, n)] - c64(1.0, 0.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn ladder_power_matches_repeated_product(dim in 2usize..40, k in 1usize..6) {
        let f = FockSpace::new(dim).unwrap();
        let a = f.annihilation();
        let mut product = a.clone();
        for _ in 1..k {
            product = &product * &a;
        }
        let direct = f.ladder_power(k, Ladder::Annihilation).unwrap();
        prop_assert!(direct.max_abs_diff(&product) <= 1e-14 * (1.0 + product.max_abs()));
        let creation = f.ladder_power(k, Ladder::Creation).unwrap();
        prop_assert!(creation.max_abs_diff(&direct.adjoint()) == 0.0);
    }

    #[test]
    fn displacement_is_special_unitary(theta in -3.1f64..3.1, phi in -3.2f64..3.2) {
        let d = displacement_matrix(&TiltParams::new(theta, phi));
        prop_assert!((&d.adjoint() * &d).max_abs_diff(&DenseMatrix::identity(2)) < 1e-14);
        let det = d[(0, 0)] * d[(1, 1)] - d[(0, 1)] * d[(1, 0)];
        prop_assert!((det - c64(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn tilted_generators_keep_hermitian_structure(theta in 0.01f64..3.0, phi in -3.2f64..3.2) {
        let t = TiltParams::new(theta, phi);
        let jp = tilt_generator(Generator::JPlus, &t).unwrap();
        let jm = tilt_generator(Generator::JMinus, &t).unwrap();
        let j0 = tilt_generator(Generator::J0, &t).unwrap();
        prop_assert!(jp.adjoint().max_abs_diff(&jm) < 1e-14);
        prop_assert!(j0.hermiticity_error() < 1e-14);
        // commutation relations survive the unitary tilt
        prop_assert!(jp.commutator(&jm).max_abs_diff(&j0.scale_real(2.0)) < 1e-13);
    }

    #[test]
    fn spectrum_invariant_under_unitary_conjugation(
        entries in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 36),
        gen in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 36),
    ) {
        let h = hermitian(6, &entries);
        let u = expm_series(&hermitian(6, &gen).scale(c64(0.0, 1.0)));
        let conj = &(&u.adjoint() * &h) * &u;
        let a = hermitian_eigen(&h, DEFAULT_TOL).unwrap();
        let b = hermitian_eigen(&conj, DEFAULT_TOL).unwrap();
        for (x, y) in a.values.iter().zip(&b.values) {
            prop_assert!((x - y).abs() < 1e-12);
        }
        let sum: f64 = a.values.iter().sum();
        prop_assert!((sum - h.trace().re).abs() < 1e-12);
        prop_assert!(a.reconstruct().max_abs_diff(&h) < 1e-12);
        for j in 0..6 {
            prop_assert!(residual(&h, a.values[j], &a.vector(j)).unwrap() < 1e-12);
        }
    }

    #[test]
    fn blocks_reassemble_interaction_hamiltonian(p in params()) {
        let h = build_interaction_hamiltonian(&p);
        prop_assert!(block_decompose(&p).reassemble().max_abs_diff(&h) < 1e-14);
    }

    #[test]
    fn tilted_blocks_are_diagonal(p in params(), n in 0usize..10) {
        let b = tilted_block(&p, n).unwrap();
        let e = coupled_entry(&p, n, Branch::Plus, Convention::LambdaSquared).interaction_energy;
        prop_assert!(b.max_abs_diff(&DenseMatrix::from_diagonal(&[e, -e])) < 1e-12 * (1.0 + e));
    }

    #[test]
    fn eigenspinors_solve_full_hamiltonian(p in params(), n in 0usize..10) {
        let h = kphoton_jc::model::build_hamiltonian(&p);
        for branch in Branch::BOTH {
            let s = analytic_eigenspinor(&p, n, branch).unwrap();
            prop_assert!((s.norm() - 1.0).abs() < 1e-14);
            let e = coupled_entry(&p, n, branch, Convention::LambdaSquared).total_energy;
            prop_assert!(residual(&h, e, &s.to_state()).unwrap() < 1e-10);
        }
    }

    #[test]
    fn perelomov_matches_exponentiated_generator(
        twice in 1u32..=8,
        r in 0.0f64..1.5,
        arg in -3.2f64..3.2,
        pick in 0usize..9,
    ) {
        let spin = Spin::from_twice(twice);
        let ops = spin_operators(spin);
        let zeta = C64::from_polar(r, arg);
        let xi = TiltParams::from_zeta(zeta).xi;
        let d = expm_series(&(&ops.jplus.scale(xi) - &ops.jminus.scale(xi.conj())));
        let index = pick % spin.multiplicity();
        let mu = index as f64 - spin.j();
        let state = perelomov_number_state(spin.j(), mu, zeta).unwrap();
        let expected = d.column(index);
        for (c, e) in state.coefficients.iter().zip(&expected) {
            prop_assert!((c - e).norm() < 1e-10);
        }
    }
}
