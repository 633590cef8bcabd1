#![allow(dead_code)]

pub const TYPE_I_ALPHAS: [f64; 4] = [0.5, 1.0, 3.5, 5.5];
pub const CODIMS: [u32; 4] = [1, 2, 3, 6];

pub fn type_i_grid() -> Vec<(f64, u32)> {
    TYPE_I_ALPHAS.iter().flat_map(|&a| CODIMS.map(|m| (a, m))).collect()
}

pub fn type_ii_grid() -> Vec<(f64, u32)> {
    [1u32, 2, 3, 15]
        .iter()
        .flat_map(|&m| {
            let mf = m as f64;
            [mf - 0.5, mf + 1.0, mf + 13.01].map(|a| (a, m))
        })
        .collect()
}

/// Class A points `α = m - 1.5` with `β` near both ends of `(-1, 0)`, then class B.
pub fn jacobi_grid() -> Vec<(f64, f64, u32)> {
    let mut g = Vec::new();
    for m in [1u32, 2, 3] {
        for beta in [-0.3, -0.01] {
            g.push((m as f64 - 1.5, beta, m));
        }
    }
    g.extend([(3.5, 1.0, 2), (2.5, 0.5, 1), (4.2, 1.5, 3), (7.3, 2.2, 6)]);
    g
}

pub fn j_max(alpha: f64, m: u32) -> u32 {
    if (m == 6 && alpha == 3.5) || (m == 15 && alpha == 14.01) {
        22
    } else {
        20
    }
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}
