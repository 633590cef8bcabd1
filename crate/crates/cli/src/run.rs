use xop_core::asymptotics::{
    exceptional_zero_track, gram_matrix, gram_min_order, heine_mehler_sweep, scaled_zero_track, z_grid,
    ConvergenceTrack,
};
use xop_core::residual::{jacobi_grid, laguerre_grid, max_relative, Sample};
use xop_core::xjacobi::{
    xjac_b_identity_residual, xjac_eigen_residual, xjac_flag_residual, xjac_representation_residual,
    xjac_shape_residuals,
};
use xop_core::xlaguerre::{
    xlag1_eigen_residual, xlag1_flag_residual, xlag1_proof_chain_residual, xlag2_dual_residual,
    xlag2_eigen_residual, xlag2_lowering_residual, xlag2_pearson_residual, xlag2_shape_residuals,
};
use xop_core::zeros::{consecutive_report, family_zero_set, type_i_pattern};
use xop_core::{Error, Family};

use crate::args::{Command, DegreeArgs, FamilyArgs, FamilyKind};
use crate::csv::{float, Table};

const CONTRACT: f64 = 1e-8;
const PEARSON_CONTRACT: f64 = 1e-6;

pub fn family(args: &FamilyArgs) -> Result<Family, Error> {
    let invalid = |msg: String| Err(Error::InvalidParameter(msg));
    let jacobi = matches!(args.family, FamilyKind::Jacobi | FamilyKind::ClassicalJacobi);
    let exceptional = matches!(args.family, FamilyKind::Lag1 | FamilyKind::Lag2 | FamilyKind::Jacobi);
    if !args.alpha.is_finite() || args.beta.is_some_and(|b| !b.is_finite()) {
        return invalid("parameters must be finite".into());
    }
    if jacobi && args.beta.is_none() {
        return invalid(format!("--beta is required for {}", args.family));
    }
    if !jacobi && args.beta.is_some() {
        return invalid(format!("--beta does not apply to {}", args.family));
    }
    if exceptional && args.m.is_none() {
        return invalid(format!("--m is required for {}", args.family));
    }
    if !exceptional && args.m.is_some() {
        return invalid(format!("--m does not apply to {}", args.family));
    }
    let (alpha, beta, m) = (args.alpha, args.beta.unwrap_or(0.0), args.m.unwrap_or(0));
    let f = match args.family {
        FamilyKind::Lag1 => Family::TypeI { alpha, m },
        FamilyKind::Lag2 => Family::TypeII { alpha, m },
        FamilyKind::Jacobi => Family::Jacobi { alpha, beta, m },
        FamilyKind::ClassicalLaguerre => Family::ClassicalLaguerre { alpha },
        FamilyKind::ClassicalJacobi => Family::ClassicalJacobi { alpha, beta },
    };
    f.validate()?;
    Ok(f)
}

fn check_degree(f: &Family, n: u32) -> Result<(), Error> {
    if n < f.codim() {
        return Err(Error::InvalidParameter(format!("degree n = {n} is below m = {}", f.codim())));
    }
    Ok(())
}

pub fn run(command: &Command) -> Result<Table, Error> {
    let f = family(command.family())?;
    match command {
        Command::Eval(a) => {
            check_degree(&f, a.n)?;
            let mut t = Table::new(&["z", "value"]);
            for z in a.z.values() {
                t.push(vec![float(z), float(f.eval(a.n, z)?)]);
            }
            Ok(t)
        }
        Command::Coeffs(a) => {
            check_degree(&f, a.n)?;
            let p = f.poly(a.n)?;
            let mut t = Table::new(&["k", "coefficient"]);
            for (k, c) in p.coeffs().iter().enumerate() {
                t.push(vec![k.to_string(), float(*c)]);
            }
            Ok(t)
        }
        Command::Zeros(a) => zeros(&f, a),
        Command::Interlace(a) => interlace(&f, a),
        Command::Verify(a) => verify(&f, a),
        Command::HeineMehler(a) => {
            let zmax = a.zmax.unwrap_or(if f.is_laguerre() { 40.0 } else { 20.0 });
            if !(zmax > 0.0 && zmax.is_finite()) || a.count < 2 {
                return Err(Error::InvalidParameter("grid needs zmax > 0 and count >= 2".into()));
            }
            let n = a.n.values();
            n.iter().try_for_each(|&n| check_degree(&f, n))?;
            let track = heine_mehler_sweep(&f, &n, &z_grid(zmax, a.count))?;
            Ok(track_table(&["n", "sup_error"], &track))
        }
        Command::TrackZeros(a) => {
            let track = scaled_zero_track(&f, a.index, &a.j.values())?;
            Ok(track_table(&["j", "scaled_error"], &track))
        }
        Command::TrackExceptional(a) => {
            let track = exceptional_zero_track(&f, &a.j.values())?;
            Ok(track_table(&["j", "hausdorff_distance"], &track))
        }
        Command::Gram(a) => {
            let order = a.quad_order.unwrap_or_else(|| gram_min_order(&f, a.n_max));
            let g = gram_matrix(&f, a.n_max, order)?;
            log::info!("max off-diagonal ratio {:e}", g.max_offdiag_ratio);
            let mut t = Table::new(&["i", "j", "value"]);
            for (r, &i) in g.degrees.iter().enumerate() {
                for (c, &j) in g.degrees.iter().enumerate() {
                    t.push(vec![i.to_string(), j.to_string(), float(g.entries[r][c])]);
                }
            }
            Ok(t)
        }
    }
}

fn track_table(header: &[&str], track: &ConvergenceTrack) -> Table {
    let mut t = Table::new(header);
    for &(k, e) in &track.points {
        t.push(vec![k.to_string(), float(e)]);
    }
    t
}

fn zeros(f: &Family, a: &DegreeArgs) -> Result<Table, Error> {
    check_degree(f, a.n)?;
    let zs = family_zero_set(f, a.n)?;
    let mut t = Table::new(&["index", "re", "im", "class"]);
    let regular = zs.regular.iter().map(|&x| (x, 0.0, "regular"));
    let exceptional = zs.exceptional().into_iter().map(|z| (z.re, z.im, "exceptional"));
    for (k, (re, im, class)) in regular.chain(exceptional).enumerate() {
        t.push(vec![(k + 1).to_string(), float(re), float(im), class.to_string()]);
    }
    Ok(t)
}

fn interlace(f: &Family, a: &DegreeArgs) -> Result<Table, Error> {
    check_degree(f, a.n)?;
    let lower = family_zero_set(f, a.n)?;
    let upper = family_zero_set(f, a.n + 1)?;
    let mut t = Table::new(&["check", "interlaces", "violations"]);
    let mut add = |name: &str, rep: xop_core::zeros::InterlacingReport| {
        t.push(vec![name.to_string(), rep.interlaces.to_string(), rep.violations.len().to_string()]);
    };
    if let Family::TypeI { alpha, m } = *f {
        add("classical_pattern", type_i_pattern(alpha, m, a.n - m, &lower)?);
    }
    add("consecutive_degrees", consecutive_report(&lower, &upper));
    Ok(t)
}

fn verify(f: &Family, a: &DegreeArgs) -> Result<Table, Error> {
    check_degree(f, a.n)?;
    let mut rows: Vec<(&str, f64, f64)> = Vec::new();
    match *f {
        Family::TypeI { .. } => {
            let p = f.lag_params(a.n).expect("Laguerre family")?;
            rows.push(("eigen", xlag1_eigen_residual(&p), CONTRACT));
            rows.push(("proof_chain", xlag1_proof_chain_residual(&p), CONTRACT));
            rows.push(("flag", xlag1_flag_residual(&p)?, CONTRACT));
        }
        Family::TypeII { .. } => {
            let p = f.lag_params(a.n).expect("Laguerre family")?;
            rows.push(("eigen", xlag2_eigen_residual(&p), CONTRACT));
            rows.push(("lowering", xlag2_lowering_residual(&p), CONTRACT));
            let s = xlag2_shape_residuals(&p);
            if let Some(l) = s.lower {
                rows.push(("shape_lower", l, CONTRACT));
            }
            rows.push(("shape_raise", s.raise, CONTRACT));
            rows.push(("dual", xlag2_dual_residual(&p), CONTRACT));
            rows.push(("pearson", xlag2_pearson_residual(&p)?, PEARSON_CONTRACT));
        }
        Family::Jacobi { .. } => {
            let p = f.jac_params(a.n).expect("Jacobi family")?;
            rows.push(("eigen", xjac_eigen_residual(&p)?, CONTRACT));
            rows.push(("b_identity", xjac_b_identity_residual(&p)?, CONTRACT));
            let s = xjac_shape_residuals(&p)?;
            if let Some(l) = s.lower {
                rows.push(("shape_lower", l, CONTRACT));
            }
            rows.push(("shape_raise", s.raise, CONTRACT));
            rows.push(("representation", xjac_representation_residual(&p)?, CONTRACT));
            rows.push(("flag", xjac_flag_residual(&p)?, CONTRACT));
        }
        Family::ClassicalLaguerre { .. } | Family::ClassicalJacobi { .. } => {
            let p = f.poly(a.n)?;
            let grid = if f.is_laguerre() { laguerre_grid(a.n as usize) } else { jacobi_grid(a.n as usize) };
            let r = max_relative(grid, |z| Sample::of_sides(p.eval(z), f.eval(a.n, z).unwrap_or(f64::NAN)));
            rows.push(("coeffs_vs_recurrence", r, CONTRACT));
        }
    }
    let mut t = Table::new(&["identity", "residual", "contract"]);
    for (name, r, c) in rows {
        t.push(vec![name.to_string(), float(r), float(c)]);
    }
    Ok(t)
}
