#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::process::Command;

use rayon::prelude::*;
use xop_core::asymptotics::{
    default_grid, exceptional_zero_track, gram_matrix, heine_mehler_sweep, scaled_zero_track,
    ConvergenceTrack,
};
use xop_core::classical::{jacobi_eval, laguerre_eval};
use xop_core::poly::chebyshev_points;
use xop_core::xjacobi::{
    xjac_b_identity_residual, xjac_eigen_residual, xjac_eval, xjac_flag_residual,
    xjac_representation_residual, xjac_shape_residuals, xjac_value_at_minus_one, xjac_value_at_plus_one,
    JacParams,
};
use xop_core::xlaguerre::{
    xlag1_eigen_residual, xlag1_eval, xlag1_flag_residual, xlag1_proof_chain_residual, xlag1_value_at_zero,
    xlag2_dual_residual, xlag2_eigen_residual, xlag2_eval, xlag2_lowering_residual, xlag2_shape_residuals,
    xlag2_value_at_zero, LagParams,
};
use xop_core::zeros::{family_zero_set, type_i_pattern};
use xop_core::Family;

type Outcome = Result<String, Vec<String>>;
type Check = fn() -> Outcome;

fn type_i_grid() -> Vec<(f64, u32)> {
    [0.5, 1.0, 3.5, 5.5].iter().flat_map(|&a| [1, 2, 3, 6].map(|m| (a, m))).collect()
}

fn type_ii_grid() -> Vec<(f64, u32)> {
    [1u32, 2, 3, 15]
        .iter()
        .flat_map(|&m| [m as f64 - 0.5, m as f64 + 1.0, m as f64 + 13.01].map(|a| (a, m)))
        .collect()
}

fn jacobi_grid() -> Vec<(f64, f64, u32)> {
    let mut g: Vec<(f64, f64, u32)> =
        [1u32, 2, 3].iter().flat_map(|&m| [-0.3, -0.01].map(|b| (m as f64 - 1.5, b, m))).collect();
    g.extend([(3.5, 1.0, 2), (2.5, 0.5, 1), (4.2, 1.5, 3), (7.3, 2.2, 6)]);
    g
}

fn j_max(alpha: f64, m: u32) -> u32 {
    if (m == 6 && alpha == 3.5) || (m == 15 && alpha == 14.01) {
        22
    } else {
        20
    }
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()) || (a - b).abs() < 1e-300
}

fn collect(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(failures)
    }
}

fn below(out: &mut Vec<String>, label: String, r: f64, tol: f64) {
    if !(r < tol) {
        out.push(format!("{label}: {r:e}"));
    }
}

fn identity_suite() -> Outcome {
    const TOL: f64 = 1e-8;
    let mut f: Vec<String> = type_i_grid()
        .par_iter()
        .flat_map_iter(|&(a, m)| (m..=25).map(move |n| (a, m, n)))
        .flat_map_iter(|(a, m, n)| {
            let p = LagParams::type_i(a, m, n).unwrap();
            let mut f = Vec::new();
            below(&mut f, format!("I eigen {a} {m} {n}"), xlag1_eigen_residual(&p), TOL);
            below(&mut f, format!("I chain {a} {m} {n}"), xlag1_proof_chain_residual(&p), TOL);
            below(&mut f, format!("I flag {a} {m} {n}"), xlag1_flag_residual(&p).unwrap(), TOL);
            f
        })
        .collect();
    f.extend(
        type_ii_grid()
            .par_iter()
            .flat_map_iter(|&(a, m)| (m..=25).map(move |n| (a, m, n)))
            .flat_map_iter(|(a, m, n)| {
                let p = LagParams::type_ii(a, m, n).unwrap();
                let mut f = Vec::new();
                below(&mut f, format!("II eigen {a} {m} {n}"), xlag2_eigen_residual(&p), TOL);
                below(&mut f, format!("II lowering {a} {m} {n}"), xlag2_lowering_residual(&p), TOL);
                let s = xlag2_shape_residuals(&p);
                if let Some(l) = s.lower {
                    below(&mut f, format!("II lower {a} {m} {n}"), l, TOL);
                }
                below(&mut f, format!("II raise {a} {m} {n}"), s.raise, TOL);
                below(&mut f, format!("II dual {a} {m} {n}"), xlag2_dual_residual(&p), TOL);
                f
            })
            .collect::<Vec<_>>(),
    );
    f.extend(
        jacobi_grid()
            .par_iter()
            .flat_map_iter(|&(a, b, m)| (m..=25).map(move |n| (a, b, m, n)))
            .flat_map_iter(|(a, b, m, n)| {
                let p = JacParams::new(a, b, m, n).unwrap();
                let tag = format!("{a} {b} {m} {n}");
                let mut f = Vec::new();
                below(&mut f, format!("J eigen {tag}"), xjac_eigen_residual(&p).unwrap(), TOL);
                below(&mut f, format!("J B {tag}"), xjac_b_identity_residual(&p).unwrap(), TOL);
                let s = xjac_shape_residuals(&p).unwrap();
                if let Some(l) = s.lower {
                    below(&mut f, format!("J lower {tag}"), l, TOL);
                }
                below(&mut f, format!("J raise {tag}"), s.raise, TOL);
                below(&mut f, format!("J repr {tag}"), xjac_representation_residual(&p).unwrap(), TOL);
                below(&mut f, format!("J flag {tag}"), xjac_flag_residual(&p).unwrap(), TOL);
                f
            })
            .collect::<Vec<_>>(),
    );
    collect(f, "all residuals below 1e-8 for n <= 25".into())
}

fn reductions() -> Outcome {
    let mut f = Vec::new();
    let lag = chebyshev_points(50, 0.0, 60.0);
    let jac = chebyshev_points(50, -1.0, 1.0);
    for a in [0.5, 1.0, 3.5, 5.5] {
        for n in 0..=25 {
            for &z in &lag {
                let l = laguerre_eval(a, n, z);
                if !rel_close(xlag1_eval(a, 0, n, z), l, 1e-12) {
                    f.push(format!("I a={a} n={n} z={z}"));
                }
                if !rel_close(xlag2_eval(a, 0, n, z), -(1.0 + a + n as f64) * l, 1e-12) {
                    f.push(format!("II a={a} n={n} z={z}"));
                }
            }
        }
    }
    for (a, b) in [(2.0, 0.5), (3.5, 1.0), (-0.5, -0.3)] {
        for n in 0..=25 {
            for &z in &jac {
                if !rel_close(xjac_eval(a, b, 0, n, z).unwrap(), jacobi_eval(a, b, n, z), 1e-12) {
                    f.push(format!("J a={a} b={b} n={n} z={z}"));
                }
            }
        }
    }
    collect(f, "codimension zero matches classical to 1e-12".into())
}

fn endpoints() -> Outcome {
    let mut f = Vec::new();
    for (a, m) in type_i_grid() {
        for j in 0..=20u32.saturating_sub(m) {
            if !rel_close(xlag1_eval(a, m as i32, j as i32, 0.0), xlag1_value_at_zero(a, m, j), 1e-10) {
                f.push(format!("I(0) {a} {m} {j}"));
            }
        }
    }
    for (a, m) in type_ii_grid() {
        for j in 0..=20u32.saturating_sub(m) {
            if !rel_close(xlag2_eval(a, m as i32, j as i32, 0.0), xlag2_value_at_zero(a, m, j), 1e-10) {
                f.push(format!("II(0) {a} {m} {j}"));
            }
        }
    }
    for (a, b, m) in jacobi_grid() {
        for j in 0..=20u32.saturating_sub(m) {
            let plus = xjac_eval(a, b, m as i32, j as i32, 1.0).unwrap();
            let minus = xjac_eval(a, b, m as i32, j as i32, -1.0).unwrap();
            if !rel_close(plus, xjac_value_at_plus_one(a, m, j), 1e-10) {
                f.push(format!("J(+1) {a} {b} {m} {j}"));
            }
            if !rel_close(minus, xjac_value_at_minus_one(a, b, m, j), 1e-10) {
                f.push(format!("J(-1) {a} {b} {m} {j}"));
            }
        }
    }
    collect(f, "endpoint values to 1e-10".into())
}

fn zero_laws() -> Outcome {
    let mut cases: Vec<(Family, u32)> = Vec::new();
    for (alpha, m) in type_i_grid() {
        cases.extend((0..=j_max(alpha, m)).map(|j| (Family::TypeI { alpha, m }, j)));
    }
    for (alpha, m) in type_ii_grid() {
        cases.extend((0..=j_max(alpha, m)).map(|j| (Family::TypeII { alpha, m }, j)));
    }
    for (alpha, beta, m) in jacobi_grid() {
        cases.extend((0..=20).map(|j| (Family::Jacobi { alpha, beta, m }, j)));
    }
    let f: Vec<String> = cases
        .par_iter()
        .filter_map(|&(fam, j)| {
            let m = fam.codim();
            let zs = match family_zero_set(&fam, m + j) {
                Ok(zs) => zs,
                Err(e) => return Some(format!("{fam} j={j}: {e}")),
            };
            let mut ok = zs.regular.len() == j as usize
                && zs.exceptional_count() == m as usize
                && zs.min_separation() > 1e-6;
            match fam {
                Family::TypeI { alpha, m } => {
                    ok &= type_i_pattern(alpha, m, j, &zs).map(|r| r.interlaces).unwrap_or(false);
                }
                Family::TypeII { m, .. } => ok &= zs.negative().len() == (m % 2) as usize,
                _ => {}
            }
            (!ok).then(|| format!("{fam} j={j}"))
        })
        .collect();
    let summary = format!("{} grid points", cases.len());
    collect(f, summary)
}

fn rate_checks(t: &ConvergenceTrack, out: &mut Vec<String>, label: String) {
    let s = t.log_log_slope();
    if !t.is_strictly_decreasing() || t.reduction() > 1.0 / 3.0 || !(-1.4..=-0.6).contains(&s) {
        out.push(format!("{label}: ratio {:.3}, slope {s:.3}", t.reduction()));
    }
}

fn heine_mehler() -> Outcome {
    let ns = [20, 40, 60, 80, 100];
    let mut f = Vec::new();
    let mut summary = Vec::new();
    for fam in [
        Family::TypeI { alpha: 5.5, m: 3 },
        Family::TypeII { alpha: 4.0, m: 3 },
        Family::Jacobi { alpha: 3.5, beta: 1.0, m: 2 },
    ] {
        match heine_mehler_sweep(&fam, &ns, &default_grid(&fam)) {
            Ok(t) => {
                summary.push(format!("{fam} slope {:.3}", t.log_log_slope()));
                rate_checks(&t, &mut f, fam.to_string());
            }
            Err(e) => f.push(format!("{fam}: {e}")),
        }
    }
    collect(f, summary.join("; "))
}

fn scaled_zeros() -> Outcome {
    let mut f = Vec::new();
    let mut summary = Vec::new();
    for fam in [Family::TypeI { alpha: 5.5, m: 3 }, Family::ClassicalLaguerre { alpha: 5.5 }] {
        match scaled_zero_track(&fam, 1, &[10, 100]) {
            Ok(t) => {
                let factor = t.first().unwrap() / t.last().unwrap();
                summary.push(format!("{fam} factor {factor:.2}"));
                if !(factor >= 2.0) {
                    f.push(format!("{fam}: factor {factor}"));
                }
            }
            Err(e) => f.push(format!("{fam}: {e}")),
        }
    }
    collect(f, summary.join("; "))
}

fn exceptional_zeros() -> Outcome {
    let js: Vec<u32> = (1..=22).collect();
    let mut f = Vec::new();
    let mut summary = Vec::new();
    for fam in [
        Family::TypeI { alpha: 3.5, m: 6 },
        Family::TypeII { alpha: 14.01, m: 15 },
        Family::Jacobi { alpha: 3.5, beta: 1.0, m: 2 },
    ] {
        match exceptional_zero_track(&fam, &js) {
            Ok(t) => {
                summary.push(format!("{fam} ratio {:.3}", t.reduction()));
                if !(t.reduction() <= 1.0 / 3.0) {
                    f.push(format!("{fam}: d(22)/d(1) = {:.3}", t.reduction()));
                }
            }
            Err(e) => f.push(format!("{fam}: {e}")),
        }
    }
    collect(f, summary.join("; "))
}

fn orthogonality() -> Outcome {
    let cases = [
        (Family::TypeI { alpha: 5.5, m: 3 }, 15, 1e-8),
        (Family::TypeII { alpha: 4.0, m: 3 }, 15, 1e-8),
        (Family::Jacobi { alpha: 0.5, beta: -0.3, m: 2 }, 12, 1e-7),
    ];
    let mut f = Vec::new();
    let mut summary = Vec::new();
    for (fam, n_max, tol) in cases {
        let pair = gram_matrix(&fam, n_max, 120).and_then(|g| Ok((gram_matrix(&fam, n_max, 240)?, g)));
        match pair {
            Ok((g2, g)) => {
                let change = g.max_change(&g2);
                summary.push(format!("{fam} offdiag {:.1e}", g.max_offdiag_ratio));
                if !(g.max_offdiag_ratio < tol) || !(change < 1e-9) {
                    f.push(format!("{fam}: offdiag {:e}, doubling {change:e}", g.max_offdiag_ratio));
                }
            }
            Err(e) => f.push(format!("{fam}: {e}")),
        }
    }
    collect(f, summary.join("; "))
}

fn determinism() -> Outcome {
    let runs = [
        vec!["track-exceptional", "--family", "lag1", "--alpha", "3.5", "--m", "6", "--j", "1:22"],
        vec!["heine-mehler", "--family", "lag1", "--alpha", "5.5", "--m", "3", "--n", "20:100:20"],
        vec!["zeros", "--family", "jacobi", "--alpha", "3.5", "--beta", "1", "--m", "2", "--n", "20"],
        vec!["gram", "--family", "lag2", "--alpha", "4", "--m", "3", "--n-max", "10"],
    ];
    let mut f = Vec::new();
    for args in runs {
        let go = |threads: &str| {
            Command::new(env!("CARGO_BIN_EXE_xop-kit"))
                .args(&args)
                .env("XOPKIT_THREADS", threads)
                .output()
                .expect("binary runs")
        };
        let (a, b) = (go("1"), go("4"));
        if !a.status.success() || a.stdout != b.stdout || a.stdout.is_empty() {
            f.push(format!("{}: outputs differ or failed", args[0]));
        }
    }
    collect(f, "byte-identical CSV across runs and thread counts".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, Check); 9] = [
        ("identity suite", identity_suite),
        ("codimension zero reductions", reductions),
        ("endpoint formulas", endpoints),
        ("zero laws", zero_laws),
        ("Heine-Mehler convergence", heine_mehler),
        ("scaled zero Bessel limit", scaled_zeros),
        ("exceptional zero convergence", exceptional_zeros),
        ("orthogonality", orthogonality),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(s) => println!("criterion {} ({name}): PASS - {s}", k + 1),
            Err(f) => {
                println!("criterion {} ({name}): FAIL - {}", k + 1, f.join("; "));
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
