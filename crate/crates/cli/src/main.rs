//! Command-line surface: evaluate special functions, apply operators to
//! CSV data, run the verification suites, and emit figure data.
//!
//! Exit codes: 0 success, 1 verification-suite failure, 2 input/domain
//! error, 3 numeric (non-convergence) error, 4 I/O error.

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use prabhakar::bounds::{const_ktilde_k, const_m, const_m1_m2, opial_constant, OpialConstant};
use prabhakar::error::Error as PrabError;
use prabhakar::grid::{read_csv, SampledFn};
use prabhakar::operators::{apply_with, OperatorSpec};
use prabhakar::oracles::run_identity_suite;
use prabhakar::probability::{figure_curves, run_laplace_suite, run_normalization_suite};
use prabhakar::specfun::{
    ml3_with, prabhakar_kernel_with, spectral_k, uniform_bound, wright_phi_with, EvalConfig,
    PrabhakarParams,
};
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "prabhakar",
    about = "Prabhakar-type fractional calculus: special functions, operators, verification suites",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a special function on a list of points (CSV to stdout).
    Eval {
        #[arg(value_enum)]
        kind: EvalKind,
        /// Evaluation points (comma-separated).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        at: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<f64>,
        #[arg(long)]
        m: Option<usize>,
        /// Interval endpoints for the bound constants.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        b: f64,
        /// Which bound constant (with `eval bound-const`).
        #[arg(long)]
        name: Option<BoundName>,
        /// Series tolerance override.
        #[arg(long)]
        tol: Option<f64>,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a fractional operator to two-column t,value CSV data.
    Apply {
        #[arg(long, value_enum)]
        op: OpKind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<f64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(value_enum)]
        suite: SuiteKind,
        /// Grid levels (identity suite uses the first two).
        #[arg(long, value_delimiter = ',', default_values_t = [256usize, 512])]
        grids: Vec<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Tolerance override (normalization suite).
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit spectral-kernel figure data, one CSV per curve.
    Figures {
        /// Figure number (1, 2 or 3).
        #[arg(long)]
        which: u8,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalKind {
    Ml3,
    Kernel,
    Wright,
    Spectral,
    BoundConst,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundName {
    /// Uniform pointwise bound for |e^γ_{α,β,ω}|.
    Uniform,
    M,
    M1,
    M2,
    Ktilde,
    K,
    /// Prabhakar-integral Opial factor.
    KOpial,
    Theta,
    ThetaC,
    Omega,
    OmegaTilde,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    RlIntegral,
    RlDerivative,
    Caputo,
    Hilfer,
    PrabIntegral,
    PrabDerivative,
    PrabDerivativeReg,
    HilferPrabhakar,
    HilferPrabhakarReg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteKind {
    Identities,
    Inequalities,
    Normalization,
    Laplace,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(classify(&err))
        }
    }
}

/// Exit-code contract: 2 input/domain, 3 numeric, 4 I/O.
fn classify(err: &anyhow::Error) -> u8 {
    if let Some(p) = err.downcast_ref::<PrabError>() {
        return match p {
            PrabError::NonConvergent { .. } | PrabError::TailTooLarge { .. } => 3,
            _ => 2,
        };
    }
    for cause in err.chain() {
        if cause.downcast_ref::<std::io::Error>().is_some() {
            return 4;
        }
    }
    2
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Eval {
            kind,
            at,
            rho,
            mu,
            gamma,
            omega,
            alpha,
            beta,
            nu,
            p,
            m,
            a,
            b,
            name,
            tol,
            out,
        } => {
            let mut cfg = EvalConfig::default();
            if let Some(t) = tol {
                cfg.tol = t;
            }
            let pr = ParamBag {
                rho,
                mu,
                gamma,
                omega,
                alpha,
                beta,
                nu,
                p,
                m,
                a,
                b,
            };
            let rows = eval_rows(kind, &at, &pr, name, &cfg)?;
            let mut text = String::from("x,value,err_estimate\n");
            for (x, v, e) in rows {
                text.push_str(&format!("{x:.16e},{v:.16e},{e:.16e}\n"));
            }
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Apply {
            op,
            input,
            alpha,
            rho,
            mu,
            nu,
            omega,
            gamma,
            tol,
            out,
        } => {
            let mut cfg = EvalConfig::default();
            if let Some(t) = tol {
                cfg.tol = t;
            }
            let file = fs::File::open(&input)
                .with_context(|| format!("cannot open {}", input.display()))?;
            let sfn: SampledFn = read_csv(std::io::BufReader::new(file))?;
            let spec = build_spec(op, alpha, rho, mu, nu, omega, gamma)?;
            let result = apply_with(&sfn, &spec, &cfg)?;
            let mut text = String::from("t,value,flag\n");
            for (i, t) in result.sfn.grid.nodes().enumerate() {
                text.push_str(&format!(
                    "{t:.16e},{:.16e},{}\n",
                    result.sfn.values[i],
                    result.flags[i].as_str()
                ));
            }
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            suite,
            grids,
            seed,
            tol,
            out,
        } => {
            let report = match suite {
                SuiteKind::Identities => {
                    anyhow::ensure!(grids.len() >= 2, "identity suite needs two grid levels");
                    run_identity_suite(&grids)?
                }
                SuiteKind::Inequalities => {
                    prabhakar::bounds::run_inequality_suite(seed, *grids.last().unwrap_or(&512))?
                }
                SuiteKind::Normalization => run_normalization_suite(tol.unwrap_or(1e-5))?,
                SuiteKind::Laplace => run_laplace_suite()?,
            };
            let json = report.to_json();
            emit(out.as_deref(), &json)?;
            if report.passed {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Figures { which, out_dir } => {
            let curves = figure_curves(which)?;
            fs::create_dir_all(&out_dir)
                .with_context(|| format!("cannot create {}", out_dir.display()))?;
            for c in &curves {
                let path = out_dir.join(c.file_name());
                fs::write(&path, c.to_csv())
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            println!("wrote {} curves to {}", curves.len(), out_dir.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

struct ParamBag {
    rho: Option<f64>,
    mu: Option<f64>,
    gamma: Option<f64>,
    omega: Option<f64>,
    alpha: Option<f64>,
    beta: Option<f64>,
    nu: Option<f64>,
    p: Option<f64>,
    m: Option<usize>,
    a: f64,
    b: f64,
}

fn need(v: Option<f64>, flag: &str) -> anyhow::Result<f64> {
    v.ok_or_else(|| anyhow::anyhow!("missing required parameter --{flag}"))
}

fn eval_rows(
    kind: EvalKind,
    at: &[f64],
    pr: &ParamBag,
    name: Option<BoundName>,
    cfg: &EvalConfig,
) -> anyhow::Result<Vec<(f64, f64, f64)>> {
    anyhow::ensure!(
        !at.is_empty() || matches!(kind, EvalKind::BoundConst),
        "no evaluation points given (--at)"
    );
    let mut rows = Vec::new();
    match kind {
        EvalKind::Ml3 => {
            let (rho, mu, gamma) = (
                need(pr.rho, "rho")?,
                need(pr.mu, "mu")?,
                need(pr.gamma, "gamma")?,
            );
            for &z in at {
                let v = ml3_with(rho, mu, gamma, z, cfg)?;
                rows.push((z, v.value, v.err_estimate));
            }
        }
        EvalKind::Kernel => {
            let params = PrabhakarParams::new(
                need(pr.rho, "rho")?,
                need(pr.mu, "mu")?,
                need(pr.omega, "omega")?,
                need(pr.gamma, "gamma")?,
            )?;
            for &t in at {
                let v = prabhakar_kernel_with(&params, t, cfg)?;
                rows.push((t, v, f64::NAN));
            }
        }
        EvalKind::Wright => {
            let (alpha, rho) = (need(pr.alpha, "alpha")?, need(pr.rho, "rho")?);
            for &z in at {
                let v = wright_phi_with(alpha, rho, z, cfg)?;
                rows.push((z, v.value, v.err_estimate));
            }
        }
        EvalKind::Spectral => {
            let (alpha, beta, gamma) = (
                need(pr.alpha, "alpha")?,
                need(pr.beta, "beta")?,
                need(pr.gamma, "gamma")?,
            );
            for &r in at {
                rows.push((r, spectral_k(alpha, beta, gamma, r)?, f64::NAN));
            }
        }
        EvalKind::BoundConst => {
            let name = name.ok_or_else(|| anyhow::anyhow!("bound-const needs --name"))?;
            let v = bound_const(name, pr)?;
            rows.push((pr.b - pr.a, v, f64::NAN));
        }
    }
    Ok(rows)
}

fn bound_const(name: BoundName, pr: &ParamBag) -> anyhow::Result<f64> {
    let v = match name {
        BoundName::Uniform => uniform_bound(
            need(pr.alpha, "alpha")?,
            need(pr.beta, "beta")?,
            need(pr.gamma, "gamma")?,
            need(pr.omega, "omega")?,
        )?,
        BoundName::M => const_m(
            need(pr.alpha, "alpha")?,
            need(pr.beta, "beta")?,
            need(pr.gamma, "gamma")?,
            need(pr.omega, "omega")?,
            pr.a,
            pr.b,
            need(pr.p, "p")?,
        )?,
        BoundName::M1 | BoundName::M2 => {
            let (m1, m2) = const_m1_m2(
                need(pr.rho, "rho")?,
                need(pr.gamma, "gamma")?,
                need(pr.mu, "mu")?,
                need(pr.nu, "nu")?,
                pr.omega.unwrap_or(1.0),
                pr.a,
                pr.b,
            )?;
            if matches!(name, BoundName::M1) {
                m1
            } else {
                m2
            }
        }
        BoundName::Ktilde | BoundName::K => {
            let mu = need(pr.mu, "mu")?;
            let (kt, k) = const_ktilde_k(
                need(pr.rho, "rho")?,
                need(pr.gamma, "gamma")?,
                mu,
                pr.omega.unwrap_or(1.0),
                pr.a,
                pr.b,
                pr.m.unwrap_or(mu.ceil() as usize),
            )?;
            if matches!(name, BoundName::Ktilde) {
                kt
            } else {
                k
            }
        }
        BoundName::KOpial => opial_constant(&OpialConstant::PrabhakarK {
            alpha: need(pr.alpha, "alpha")?,
            beta: need(pr.beta, "beta")?,
            gamma: need(pr.gamma, "gamma")?,
            omega: need(pr.omega, "omega")?,
        })?,
        BoundName::Theta => opial_constant(&OpialConstant::HilferTheta {
            mu: need(pr.mu, "mu")?,
            nu: need(pr.nu, "nu")?,
            p: need(pr.p, "p")?,
            x: pr.b,
        })?,
        BoundName::ThetaC => opial_constant(&OpialConstant::CaputoTheta {
            mu: need(pr.mu, "mu")?,
            p: need(pr.p, "p")?,
            x: pr.b,
        })?,
        BoundName::Omega => opial_constant(&OpialConstant::PrabhakarOmega {
            rho: need(pr.rho, "rho")?,
            gamma: need(pr.gamma, "gamma")?,
            mu: need(pr.mu, "mu")?,
            m: pr.m.unwrap_or(2),
            omega: pr.omega.unwrap_or(1.0),
            p: need(pr.p, "p")?,
            x: pr.b,
        })?,
        BoundName::OmegaTilde => opial_constant(&OpialConstant::HilferPrabhakarOmegaTilde {
            rho: need(pr.rho, "rho")?,
            gamma: need(pr.gamma, "gamma")?,
            mu: need(pr.mu, "mu")?,
            nu: need(pr.nu, "nu")?,
            omega: pr.omega.unwrap_or(1.0),
            p: need(pr.p, "p")?,
            x: pr.b,
        })?,
    };
    Ok(v)
}

fn build_spec(
    op: OpKind,
    alpha: Option<f64>,
    rho: Option<f64>,
    mu: Option<f64>,
    nu: Option<f64>,
    omega: Option<f64>,
    gamma: Option<f64>,
) -> anyhow::Result<OperatorSpec> {
    let spec = match op {
        OpKind::RlIntegral => OperatorSpec::RlIntegral {
            alpha: need(alpha, "alpha")?,
        },
        OpKind::RlDerivative => OperatorSpec::RlDerivative {
            alpha: need(alpha, "alpha")?,
        },
        OpKind::Caputo => OperatorSpec::Caputo {
            alpha: need(alpha, "alpha")?,
        },
        OpKind::Hilfer => OperatorSpec::Hilfer {
            mu: need(mu, "mu")?,
            nu: need(nu, "nu")?,
        },
        OpKind::PrabIntegral => OperatorSpec::PrabIntegral(PrabhakarParams::new(
            need(rho, "rho")?,
            need(mu, "mu")?,
            need(omega, "omega")?,
            need(gamma, "gamma")?,
        )?),
        OpKind::PrabDerivative => OperatorSpec::PrabDerivative(PrabhakarParams::new(
            need(rho, "rho")?,
            need(mu, "mu")?,
            need(omega, "omega")?,
            need(gamma, "gamma")?,
        )?),
        OpKind::PrabDerivativeReg => {
            OperatorSpec::PrabDerivativeRegularized(PrabhakarParams::new(
                need(rho, "rho")?,
                need(mu, "mu")?,
                need(omega, "omega")?,
                need(gamma, "gamma")?,
            )?)
        }
        OpKind::HilferPrabhakar => OperatorSpec::HilferPrabhakar {
            gamma: need(gamma, "gamma")?,
            mu: need(mu, "mu")?,
            nu: need(nu, "nu")?,
            rho: need(rho, "rho")?,
            omega: need(omega, "omega")?,
        },
        OpKind::HilferPrabhakarReg => OperatorSpec::HilferPrabhakarRegularized {
            gamma: need(gamma, "gamma")?,
            mu: need(mu, "mu")?,
            rho: need(rho, "rho")?,
            omega: need(omega, "omega")?,
        },
    };
    Ok(spec)
}

fn emit(out: Option<&std::path::Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}
