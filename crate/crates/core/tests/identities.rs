#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod common;

use common::{jacobi_grid, rel_close, type_i_grid, type_ii_grid};
use rayon::prelude::*;
use xop_core::classical::{jacobi_eval, laguerre_eval};
use xop_core::poly::chebyshev_points;
use xop_core::xjacobi::{
    xjac_b_identity_residual, xjac_eigen_residual, xjac_eval, xjac_flag_residual,
    xjac_representation_residual, xjac_shape_residuals, xjac_value_at_minus_one, xjac_value_at_plus_one,
    JacParams,
};
use xop_core::xlaguerre::{
    xlag, xlag1_eigen_residual, xlag1_eval, xlag1_flag_residual, xlag1_proof_chain_residual,
    xlag1_value_at_zero, xlag2_dual_residual, xlag2_eigen_residual, xlag2_eval, xlag2_leading,
    xlag2_lowering_residual, xlag2_pearson_residual, xlag2_shape_residuals, xlag2_value_at_zero, LagParams,
};

const CONTRACT: f64 = 1e-8;

fn check(failures: &mut Vec<String>, label: String, r: f64) {
    if !(r < CONTRACT) {
        failures.push(format!("{label}: {r:e}"));
    }
}

#[test]
fn type_i_identity_grid() {
    let failures: Vec<String> = type_i_grid()
        .par_iter()
        .flat_map_iter(|&(a, m)| (m..=25).map(move |n| (a, m, n)))
        .flat_map_iter(|(a, m, n)| {
            let p = LagParams::type_i(a, m, n).unwrap();
            let mut f = Vec::new();
            check(&mut f, format!("eigen {a} {m} {n}"), xlag1_eigen_residual(&p));
            check(&mut f, format!("proof chain {a} {m} {n}"), xlag1_proof_chain_residual(&p));
            check(&mut f, format!("flag {a} {m} {n}"), xlag1_flag_residual(&p).unwrap());
            f
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn type_ii_identity_grid() {
    let failures: Vec<String> = type_ii_grid()
        .par_iter()
        .flat_map_iter(|&(a, m)| (m..=25.max(m)).map(move |n| (a, m, n)))
        .flat_map_iter(|(a, m, n)| {
            let p = LagParams::type_ii(a, m, n).unwrap();
            let mut f = Vec::new();
            check(&mut f, format!("eigen {a} {m} {n}"), xlag2_eigen_residual(&p));
            check(&mut f, format!("lowering {a} {m} {n}"), xlag2_lowering_residual(&p));
            let s = xlag2_shape_residuals(&p);
            if let Some(l) = s.lower {
                check(&mut f, format!("shape lower {a} {m} {n}"), l);
            }
            check(&mut f, format!("shape raise {a} {m} {n}"), s.raise);
            check(&mut f, format!("dual {a} {m} {n}"), xlag2_dual_residual(&p));
            f
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn type_ii_pearson_equation() {
    for (a, m) in type_ii_grid() {
        let p = LagParams::type_ii(a, m, m + 3).unwrap();
        let r = xlag2_pearson_residual(&p).unwrap();
        assert!(r < 1e-6, "({a}, {m}): {r:e}");
    }
}

#[test]
fn jacobi_identity_grid() {
    let failures: Vec<String> = jacobi_grid()
        .par_iter()
        .flat_map_iter(|&(a, b, m)| (m..=25).map(move |n| (a, b, m, n)))
        .flat_map_iter(|(a, b, m, n)| {
            let p = JacParams::new(a, b, m, n).unwrap();
            let mut f = Vec::new();
            let tag = format!("{a} {b} {m} {n}");
            check(&mut f, format!("eigen {tag}"), xjac_eigen_residual(&p).unwrap());
            check(&mut f, format!("B {tag}"), xjac_b_identity_residual(&p).unwrap());
            let s = xjac_shape_residuals(&p).unwrap();
            if let Some(l) = s.lower {
                check(&mut f, format!("shape lower {tag}"), l);
            }
            check(&mut f, format!("shape raise {tag}"), s.raise);
            check(&mut f, format!("representation {tag}"), xjac_representation_residual(&p).unwrap());
            check(&mut f, format!("flag {tag}"), xjac_flag_residual(&p).unwrap());
            f
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn codimension_zero_reductions() {
    let pts = chebyshev_points(50, 0.0, 60.0);
    let jpts = chebyshev_points(50, -1.0, 1.0);
    for a in [0.5, 1.0, 3.5, 5.5] {
        for n in 0..=25 {
            for &z in &pts {
                let l = laguerre_eval(a, n, z);
                let x1 = xlag1_eval(a, 0, n, z);
                let x2 = xlag2_eval(a, 0, n, z);
                assert!(rel_close(x1, l, 1e-12) || (x1 - l).abs() < 1e-300, "I {a} {n} {z}");
                let want = -(1.0 + a + n as f64) * l;
                assert!(rel_close(x2, want, 1e-12) || (x2 - want).abs() < 1e-300, "II {a} {n} {z}");
            }
        }
    }
    for (a, b) in [(2.0, 0.5), (3.5, 1.0), (-0.5, -0.3)] {
        for n in 0..=25 {
            for &z in &jpts {
                let x = xjac_eval(a, b, 0, n, z).unwrap();
                let p = jacobi_eval(a, b, n, z);
                assert!(rel_close(x, p, 1e-12) || (x - p).abs() < 1e-300, "J {a} {b} {n} {z}");
            }
        }
    }
}

#[test]
fn endpoint_values() {
    for (a, m) in type_i_grid() {
        for j in 0..=20 - m.min(20) {
            let got = xlag1_eval(a, m as i32, j as i32, 0.0);
            assert!(rel_close(got, xlag1_value_at_zero(a, m, j), 1e-10), "I {a} {m} {j}");
        }
    }
    for (a, m) in type_ii_grid() {
        for j in 0..=20u32.saturating_sub(m) {
            let got = xlag2_eval(a, m as i32, j as i32, 0.0);
            assert!(rel_close(got, xlag2_value_at_zero(a, m, j), 1e-10), "II {a} {m} {j}");
            let lead = xlag(&LagParams::type_ii(a, m, m + j).unwrap()).leading();
            assert!(rel_close(lead, xlag2_leading(a, m, j), 1e-9), "II lead {a} {m} {j}");
        }
    }
    for (a, b, m) in jacobi_grid() {
        for j in 0..=20u32.saturating_sub(m) {
            let plus = xjac_eval(a, b, m as i32, j as i32, 1.0).unwrap();
            let minus = xjac_eval(a, b, m as i32, j as i32, -1.0).unwrap();
            assert!(rel_close(plus, xjac_value_at_plus_one(a, m, j), 1e-10), "+1 {a} {b} {m} {j}");
            assert!(rel_close(minus, xjac_value_at_minus_one(a, b, m, j), 1e-10), "-1 {a} {b} {m} {j}");
        }
    }
}
