//! Single-value queries for ad-hoc inspection.

use std::fmt::Write as _;

use clap::{Args, Subcommand, ValueEnum};
use jsum_core::characters::{jacobi_sum, product_iq, trace_ad};
use jsum_core::cyclotomic::quadratic_gauss_sum;
use jsum_core::field::make_field_q;
use jsum_core::matrices::{
    bareiss_det, build_carlitz, build_mq, build_nq, build_sun_sp, build_tq, build_wuwang,
};
use jsum_core::{CycInt, FieldCtx, FieldElement, GeneratorChoice};

use crate::error::CliError;

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(subcommand)]
    pub kind: ComputeKind,
    /// `least`, `nth:K` or an element index.
    #[arg(long, global = true)]
    pub generator: Option<GeneratorChoice>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Carlitz,
    Sp,
    Mq,
    Nq,
    Tq,
    Wuwang,
}

#[derive(Subcommand, Debug)]
pub enum ComputeKind {
    /// J_q(χ^i, χ^j).
    JacobiSum {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        i: i64,
        #[arg(long)]
        j: i64,
    },
    /// The product I_q.
    Iq {
        #[arg(long)]
        q: u64,
    },
    /// Frobenius trace a_d(q) for a nonsquare d (given as an element index).
    Ad {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u32,
    },
    /// Determinant of one of the named matrices.
    Det {
        #[arg(long, value_enum)]
        matrix: MatrixKind,
        /// Field size, or the prime for `carlitz` and `sp`.
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        r: Option<i64>,
    },
    /// Σ_{x mod m} ζ_m^{x²}.
    GaussSum {
        #[arg(long)]
        m: u64,
    },
}

/// Multi-line rendering: value, conductor, coefficients and a complex preview.
pub fn describe(x: &CycInt) -> String {
    let z = x.embed_complex();
    let coeffs: Vec<String> = x.coeffs().iter().map(ToString::to_string).collect();
    let mut out = String::new();
    writeln!(out, "value: {x}").unwrap();
    writeln!(out, "conductor: {}", x.conductor()).unwrap();
    writeln!(out, "coeffs: [{}]", coeffs.join(",")).unwrap();
    writeln!(out, "approx: {:.6}{:+.6}i", z.re, z.im).unwrap();
    out
}

fn element(ctx: &FieldCtx, d: Option<u32>) -> Result<FieldElement, CliError> {
    let d = d.ok_or_else(|| CliError::Usage("this matrix needs --d".into()))?;
    Ok(ctx.element(d)?)
}

pub fn compute(args: &ComputeArgs) -> Result<CycInt, CliError> {
    let choice = args.generator.unwrap_or_default();
    let field = |q: u64| make_field_q(q, choice);
    let value = match args.kind {
        ComputeKind::JacobiSum { q, i, j } => jacobi_sum(&field(q)?, i, j).value,
        ComputeKind::Iq { q } => product_iq(&field(q)?),
        ComputeKind::Ad { q, d } => {
            let ctx = field(q)?;
            CycInt::from_int(1, trace_ad(&ctx, ctx.element(d)?)?)
        }
        ComputeKind::GaussSum { m } => {
            if m == 0 {
                return Err(CliError::Usage("m must be positive".into()));
            }
            quadratic_gauss_sum(m)
        }
        ComputeKind::Det { matrix, q, d, r } => {
            let int = |v| CycInt::from_int(1, v);
            match matrix {
                MatrixKind::Carlitz => int(bareiss_det(&build_carlitz(q)?)?),
                MatrixKind::Sp => int(bareiss_det(&build_sun_sp(q)?)?),
                MatrixKind::Mq => {
                    let ctx = field(q)?;
                    int(bareiss_det(&build_mq(&ctx, element(&ctx, d)?)?)?)
                }
                MatrixKind::Nq => int(bareiss_det(&build_nq(&field(q)?))?),
                MatrixKind::Tq => {
                    let ctx = field(q)?;
                    int(bareiss_det(&build_tq(&ctx, element(&ctx, d)?)?)?)
                }
                MatrixKind::Wuwang => {
                    let r = r.ok_or_else(|| CliError::Usage("wuwang needs --r".into()))?;
                    bareiss_det(&build_wuwang(&field(q)?, r))?
                }
            }
        }
    };
    Ok(value)
}
