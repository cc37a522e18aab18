use proptest::prelude::*;
use speclab::experiments::{fit_rate, rep_seed};
use speclab::limit::{extend_normalized, extend_unnormalized, SampleOperators};
use speclab::linalg::{eig_sym, Matrix};
use speclab::model::{sample, Density, KernelSpec};
use speclab::spectral::{
    align_sign, build_laplacian, build_similarity, quadratic_form, threshold_cluster, LaplacianKind, SimilarityMatrix,
};

fn similarity(n: usize, entries: &[f64]) -> SimilarityMatrix {
    let m = Matrix::symmetric_from_fn(n, |i, j| entries[(i * n + j) % entries.len()]);
    SimilarityMatrix::from_matrix(m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quadratic_form_matches_pairwise_sum(
        n in 2usize..24,
        entries in prop::collection::vec(0.01f64..2.0, 16..64),
        f in prop::collection::vec(-3.0f64..3.0, 24),
    ) {
        let k = similarity(n, &entries);
        let f = &f[..n];
        let mut brute = 0.0;
        for i in 0..n {
            for j in 0..n {
                brute += 0.5 * k.matrix[(i, j)] * (f[i] - f[j]).powi(2);
            }
        }
        let q = quadratic_form(&k, f).unwrap();
        prop_assert!((q - brute).abs() <= 1e-9 * brute.abs().max(1e-12));
    }

    #[test]
    fn laplacian_spectra_are_bounded(
        n in 2usize..24,
        entries in prop::collection::vec(0.01f64..2.0, 16..64),
    ) {
        let k = similarity(n, &entries);
        let un = build_laplacian(&k, LaplacianKind::UnnormScaled).unwrap();
        let sym = build_laplacian(&k, LaplacianKind::SymNorm).unwrap();
        let rw = build_laplacian(&k, LaplacianKind::RwNorm).unwrap();
        let eu = eig_sym(&un.matrix, n).unwrap();
        let es = sym.eigensystem(n).unwrap();
        let er = rw.eigensystem(n).unwrap();
        prop_assert!(eu.values[0] >= -1e-10 && es.values[0] >= -1e-10);
        prop_assert!(es.values[n - 1] <= 2.0 + 1e-10);
        for (a, b) in es.values.iter().zip(&er.values) {
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }

    #[test]
    fn sign_alignment_ignores_input_sign(
        v in prop::collection::vec(-1.0f64..1.0, 1..32),
        r in prop::collection::vec(-1.0f64..1.0, 32),
    ) {
        let r = &r[..v.len()];
        let neg: Vec<f64> = v.iter().map(|x| -x).collect();
        let (a, av) = align_sign(&v, r);
        let (b, bv) = align_sign(&neg, r);
        let ip: f64 = av.iter().zip(r).map(|(x, y)| x * y).sum();
        prop_assert!(ip >= 0.0);
        if ip > 0.0 {
            prop_assert_eq!(av, bv);
            prop_assert_eq!(a, -b);
        }
    }

    #[test]
    fn thresholding_negated_vector_swaps_labels(v in prop::collection::vec(-1.0f64..1.0, 1..64)) {
        prop_assume!(v.iter().all(|&x| x != 0.0));
        let neg: Vec<f64> = v.iter().map(|x| -x).collect();
        let a = threshold_cluster(&v, 0.0).labels;
        let b = threshold_cluster(&neg, 0.0).labels;
        prop_assert!(a.iter().zip(&b).all(|(x, y)| x + y == 1));
    }

    #[test]
    fn rate_fit_recovers_power_laws(p in -2.0f64..1.0, c in 0.01f64..100.0) {
        let samples: Vec<(usize, f64)> = [50usize, 100, 200, 400, 800]
            .iter()
            .map(|&n| (n, c * (n as f64).powf(p)))
            .collect();
        let fit = fit_rate(&samples).unwrap();
        prop_assert!((fit.slope - p).abs() < 1e-9);
        prop_assert!((fit.intercept - c.ln()).abs() < 1e-8);
    }

    #[test]
    fn rep_seeds_do_not_collide(master in any::<u64>(), a in 0usize..16, b in 0usize..64) {
        prop_assert_eq!(rep_seed(master, a, b), rep_seed(master, a, b));
        prop_assert_ne!(rep_seed(master, a, b), rep_seed(master, a, b + 1));
        prop_assert_ne!(rep_seed(master, a, b), rep_seed(master, a + 1, b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn extensions_reproduce_sample_eigenvectors(seed in any::<u64>(), sigma in 0.7f64..5.0) {
        let density = Density::four_gaussians();
        let kernel = KernelSpec::gaussian(sigma, density.support()).unwrap();
        let s = sample(&density, 40, seed).unwrap();
        let k = build_similarity(&s, &kernel).unwrap();
        let probes = kernel.support.probes(50);
        let sym = build_laplacian(&k, LaplacianKind::SymNorm).unwrap().eigensystem(3).unwrap();
        for i in 0..3 {
            if sym.degenerate[i] {
                continue;
            }
            let f = extend_normalized(&s, &kernel, &sym.vectors[i], sym.values[i]).unwrap();
            prop_assert!(f.round_trip_error() <= 1e-8);
            prop_assert!(f.residual(&probes) <= 1e-7);
        }
        let un = build_laplacian(&k, LaplacianKind::UnnormScaled).unwrap().eigensystem(1).unwrap();
        let f = extend_unnormalized(&s, &kernel, &un.vectors[0], un.values[0]).unwrap();
        prop_assert!(f.round_trip_error() <= 1e-8);
    }

    #[test]
    fn restriction_commutes_with_sample_operators(seed in any::<u64>(), a in -1.0f64..1.0, b in -1.0f64..1.0) {
        let density = Density::example2(0.3).unwrap();
        let kernel = KernelSpec::product(density.support()).unwrap();
        let s = sample(&density, 30, seed).unwrap();
        let k = build_similarity(&s, &kernel).unwrap();
        let ops = SampleOperators::new(&s, &kernel).unwrap();
        let f = |x: f64| a + b * x * x;
        let fv: Vec<f64> = s.points.iter().map(|&x| f(x)).collect();
        let lu = build_laplacian(&k, LaplacianKind::UnnormScaled).unwrap().matrix.mul_vec(&fv);
        let ls = build_laplacian(&k, LaplacianKind::SymNorm).unwrap().matrix.mul_vec(&fv);
        for (i, &x) in s.points.iter().enumerate() {
            prop_assert!((ops.apply_unnormalized(f, x) - lu[i]).abs() < 1e-9 * 30.0 * 4.0 * 5.0);
            prop_assert!((ops.apply_normalized(f, x) - ls[i]).abs() < 1e-9 * 30.0 * 4.0 * 5.0);
        }
    }
}
