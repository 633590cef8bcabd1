use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "xop-kit", version, about = "Exceptional Laguerre and Jacobi polynomials as CSV")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the CSV here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pointwise values.
    Eval(EvalArgs),
    /// Monomial coefficients.
    Coeffs(DegreeArgs),
    /// Classified zeros.
    Zeros(DegreeArgs),
    /// Interlacing checks of the regular zeros.
    Interlace(DegreeArgs),
    /// Residuals of the defining identities.
    Verify(DegreeArgs),
    /// Sup-error of the Heine-Mehler limit per degree.
    HeineMehler(HeineMehlerArgs),
    /// Scaled regular zero against its Bessel limit.
    TrackZeros(TrackZerosArgs),
    /// Hausdorff distance of the exceptional zeros to their limits.
    TrackExceptional(TrackArgs),
    /// Gram matrix of the family under its weight.
    Gram(GramArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval(_) => "eval",
            Command::Coeffs(_) => "coeffs",
            Command::Zeros(_) => "zeros",
            Command::Interlace(_) => "interlace",
            Command::Verify(_) => "verify",
            Command::HeineMehler(_) => "heine-mehler",
            Command::TrackZeros(_) => "track-zeros",
            Command::TrackExceptional(_) => "track-exceptional",
            Command::Gram(_) => "gram",
        }
    }

    pub fn family(&self) -> &FamilyArgs {
        match self {
            Command::Eval(a) => &a.family,
            Command::Coeffs(a) | Command::Zeros(a) | Command::Interlace(a) | Command::Verify(a) => &a.family,
            Command::HeineMehler(a) => &a.family,
            Command::TrackZeros(a) => &a.family,
            Command::TrackExceptional(a) => &a.family,
            Command::Gram(a) => &a.family,
        }
    }

    /// Flags in a fixed order with normalized values.
    pub fn canonical_flags(&self) -> String {
        let mut s = self.family().to_string();
        match self {
            Command::Eval(a) => s += &format!(" --n {} --z {}", a.n, a.z),
            Command::Coeffs(a) | Command::Zeros(a) | Command::Interlace(a) | Command::Verify(a) => {
                s += &format!(" --n {}", a.n)
            }
            Command::HeineMehler(a) => {
                s += &format!(" --n {}", a.n);
                if let Some(z) = a.zmax {
                    s += &format!(" --zmax {z}");
                }
                s += &format!(" --count {}", a.count);
            }
            Command::TrackZeros(a) => s += &format!(" --j {} --index {}", a.j, a.index),
            Command::TrackExceptional(a) => s += &format!(" --j {}", a.j),
            Command::Gram(a) => {
                s += &format!(" --n-max {}", a.n_max);
                if let Some(q) = a.quad_order {
                    s += &format!(" --quad-order {q}");
                }
            }
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Lag1,
    Lag2,
    Jacobi,
    ClassicalLaguerre,
    ClassicalJacobi,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: FamilyKind,

    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,

    /// Jacobi families only.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,

    /// Codimension; exceptional families only.
    #[arg(long)]
    pub m: Option<u32>,
}

impl fmt::Display for FamilyArgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "--family {} --alpha {}", self.family, self.alpha)?;
        if let Some(b) = self.beta {
            write!(f, " --beta {b}")?;
        }
        if let Some(m) = self.m {
            write!(f, " --m {m}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Args)]
pub struct DegreeArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    #[arg(long)]
    pub n: u32,

    /// A point or an inclusive grid `lo:hi[:step]`.
    #[arg(long, allow_hyphen_values = true)]
    pub z: PointRange,
}

#[derive(Debug, Clone, Args)]
pub struct HeineMehlerArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    /// Degrees `lo:hi[:step]`.
    #[arg(long)]
    pub n: IndexRange,

    /// Grid end; 40 for Laguerre families, 20 for Jacobi.
    #[arg(long)]
    pub zmax: Option<f64>,

    #[arg(long, default_value_t = 600)]
    pub count: usize,
}

#[derive(Debug, Clone, Args)]
pub struct TrackZerosArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    #[arg(long)]
    pub j: IndexRange,

    /// 1-based zero index, counted from the hard edge.
    #[arg(long, default_value_t = 1)]
    pub index: usize,
}

#[derive(Debug, Clone, Args)]
pub struct TrackArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    #[arg(long)]
    pub j: IndexRange,
}

#[derive(Debug, Clone, Args)]
pub struct GramArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    #[arg(long)]
    pub n_max: u32,

    /// Defaults to the smallest accepted order, `2 (n_max + m) + 20`.
    #[arg(long)]
    pub quad_order: Option<usize>,
}

fn split_range(s: &str) -> Result<(&str, &str, Option<&str>), String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [lo, hi] => Ok((lo, hi, None)),
        [lo, hi, step] => Ok((lo, hi, Some(step))),
        _ => Err(format!("expected lo:hi[:step], got {s:?}")),
    }
}

/// Inclusive integer range `lo:hi[:step]` or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: u32,
    pub hi: u32,
    pub step: u32,
}

impl IndexRange {
    pub fn values(&self) -> Vec<u32> {
        (self.lo..=self.hi).step_by(self.step as usize).collect()
    }
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let int = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
        if !s.contains(':') {
            let v = int(s)?;
            return Ok(IndexRange { lo: v, hi: v, step: 1 });
        }
        let (lo, hi, step) = split_range(s)?;
        let r = IndexRange { lo: int(lo)?, hi: int(hi)?, step: step.map(int).transpose()?.unwrap_or(1) };
        if r.step == 0 || r.hi < r.lo {
            return Err(format!("empty range {s:?}"));
        }
        Ok(r)
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.step)
    }
}

/// A real point or an inclusive grid `lo:hi[:step]` (default 101 points).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointRange {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl PointRange {
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.lo];
        }
        let h = (self.hi - self.lo) / (self.count - 1) as f64;
        (0..self.count).map(|k| self.lo + k as f64 * h).collect()
    }
}

impl FromStr for PointRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let real = |t: &str| {
            let v = t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("{t:?} is not finite"))
            }
        };
        if !s.contains(':') {
            let v = real(s)?;
            return Ok(PointRange { lo: v, hi: v, count: 1 });
        }
        let (lo, hi, step) = split_range(s)?;
        let (lo, hi) = (real(lo)?, real(hi)?);
        if hi < lo {
            return Err(format!("empty range {s:?}"));
        }
        let count = match step {
            None => 101,
            Some(t) => {
                let h = real(t)?;
                if h <= 0.0 {
                    return Err(format!("step must be positive in {s:?}"));
                }
                ((hi - lo) / h + 1e-9).floor() as usize + 1
            }
        };
        if count > 1_000_000 {
            return Err(format!("grid {s:?} has more than a million points"));
        }
        Ok(PointRange { lo, hi, count: if hi == lo { 1 } else { count.max(1) } })
    }
}

impl fmt::Display for PointRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.count == 1 {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}:{}:{}", self.lo, self.hi, (self.hi - self.lo) / (self.count - 1) as f64)
        }
    }
}
