use num_complex::Complex64;
use proptest::prelude::*;
use xop_core::quadrature::{gauss_rule, BaseWeight};
use xop_core::zeros::sturm::SturmSequence;
use xop_core::zeros::{all_roots, classify, interlacing_report, real_roots};
use xop_core::Polynomial;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classical_laguerre_zeros_interlace(alpha in -0.9f64..10.0, n in 2usize..40) {
        let a = gauss_rule(BaseWeight::Laguerre { alpha }, n).unwrap().nodes;
        let b = gauss_rule(BaseWeight::Laguerre { alpha }, n - 1).unwrap().nodes;
        prop_assert!(interlacing_report(&a, &b).interlaces);
    }

    #[test]
    fn classical_jacobi_zeros_interlace(alpha in -0.9f64..6.0, beta in -0.9f64..6.0, n in 2usize..40) {
        let base = BaseWeight::Jacobi { alpha, beta };
        let a = gauss_rule(base, n).unwrap().nodes;
        let b = gauss_rule(base, n - 1).unwrap().nodes;
        prop_assert!(interlacing_report(&a, &b).interlaces);
    }

    #[test]
    fn zero_set_accounts_for_every_root(
        reals in prop::collection::vec(-5.0f64..5.0, 0..8),
        pairs in prop::collection::vec((-3.0f64..3.0, 0.2f64..2.0), 0..4),
    ) {
        let mut p = Polynomial::from_roots(&reals);
        for &(re, im) in &pairs {
            p = &p * &Polynomial::new(vec![re * re + im * im, -2.0 * re, 1.0]);
        }
        prop_assume!(p.degree() >= 1);
        let mut sorted = reals.clone();
        sorted.sort_by(f64::total_cmp);
        prop_assume!(sorted.windows(2).all(|w| w[1] - w[0] > 1e-3));
        prop_assume!(sorted.iter().all(|x| (x.abs() - 1.0).abs() > 1e-3));
        let roots = all_roots(&p).unwrap();
        let c = p.coeffs();
        for z in &roots {
            let (v, s) = c.iter().rev().fold((Complex64::new(0.0, 0.0), 0.0), |(v, s), &ck| {
                (v * z + ck, s * z.norm() + ck.abs())
            });
            prop_assert!(v.norm() <= 1e-8 * s);
        }
        let zs = classify((-1.0, 1.0), &p, &roots).unwrap();
        prop_assert_eq!(zs.degree(), p.degree());
        prop_assert_eq!(zs.exceptional_complex.len(), pairs.len());
        prop_assert_eq!(zs.regular.len() + zs.exceptional_real.len(), reals.len());
        let inside = real_roots(&p, -1.0, 1.0).unwrap();
        prop_assert_eq!(inside.len(), zs.regular.len());
    }

    #[test]
    fn sturm_counts_distinct_real_roots(reals in prop::collection::btree_set(-20i32..20, 0..10)) {
        let roots: Vec<f64> = reals.iter().map(|&k| k as f64 * 0.5 + 0.25).collect();
        let mut p = Polynomial::from_roots(&roots);
        p = &p * &Polynomial::new(vec![1.0, 0.0, 1.0]);
        prop_assert_eq!(SturmSequence::new(&p).total(), roots.len());
    }
}
