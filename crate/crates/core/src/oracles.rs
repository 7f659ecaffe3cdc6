//! Closed-form reference results used as ground truth by the verification
//! suites and the CLI.
//!
//! The identity suite instantiates every operator on kernels of the
//! e^σ_{ρ,η,ω} family, which each operator maps to another closed-form
//! member of the same family, so both sides of every case are computable
//! without quadrature on one side.

use crate::error::{Error, Result};
use crate::grid::{sample, SampledFn, UniformGrid};
use crate::operators::{
    apply_with, hilfer_prabhakar_with, prabhakar_derivative_regularized_with,
    prabhakar_derivative_with, prabhakar_integral_with, NodeFlag, OperatorOutput, OperatorSpec,
};
use crate::report::{CaseReport, ReportConfig, SuiteReport};
use crate::specfun::{gamma, kernel_raw, prabhakar_kernel, recip_gamma, EvalConfig, PrabhakarParams, DEFAULT_CONFIG};

/// Kernel composition: (E^γ_{ρ,μ,ω,0+} e^σ_{ρ,η,ω})(t) = e^{γ+σ}_{ρ,μ+η,ω}(t).
/// Returns the closed-form right-hand side.
pub fn oracle_composition(p: &PrabhakarParams, sigma: f64, eta: f64) -> Result<impl Fn(f64) -> f64> {
    if !(eta > 0.0) {
        return Err(Error::Domain(format!(
            "oracle_composition: eta must be > 0, got {eta}"
        )));
    }
    let target = PrabhakarParams::new(p.rho, p.mu + eta, p.omega, p.gamma + sigma)?;
    Ok(move |t: f64| {
        if t == 0.0 && target.mu > 1.0 {
            0.0
        } else {
            prabhakar_kernel(&target, t).expect("oracle kernel evaluation")
        }
    })
}

/// Hilfer-Prabhakar derivative of the power t^{p-1} (base point 0):
/// Γ(p) x^{p-μ-1} E^{-γ}_{ρ,p-μ}(ω x^ρ), independent of ν.
pub fn oracle_hp_power(
    p_exp: f64,
    gamma_p: f64,
    mu: f64,
    rho: f64,
    omega: f64,
) -> Result<impl Fn(f64) -> f64> {
    if !(p_exp > 1.0) {
        return Err(Error::Domain(format!(
            "oracle_hp_power: p must be > 1, got {p_exp}"
        )));
    }
    if !(mu > 0.0 && mu < 1.0) {
        return Err(Error::Domain(format!(
            "oracle_hp_power: mu must lie in (0,1), got {mu}"
        )));
    }
    let gp = gamma(p_exp);
    Ok(move |x: f64| {
        gp * kernel_raw(rho, p_exp - mu, omega, -gamma_p, x, &DEFAULT_CONFIG)
            .expect("oracle kernel evaluation")
    })
}

/// Hilfer-Prabhakar derivative of e^γ_{ρ,β,ω} (matching exponent γ):
/// x^{β-μ-1}/Γ(β-μ).
pub fn oracle_hp_kernel(beta_p: f64, mu: f64) -> Result<impl Fn(f64) -> f64> {
    if !(beta_p > 1.0) {
        return Err(Error::Domain(format!(
            "oracle_hp_kernel: beta must be > 1, got {beta_p}"
        )));
    }
    if !(mu > 0.0 && mu < 1.0) {
        return Err(Error::Domain(format!(
            "oracle_hp_kernel: mu must lie in (0,1), got {mu}"
        )));
    }
    let rg = recip_gamma(beta_p - mu);
    Ok(move |x: f64| x.powf(beta_p - mu - 1.0) * rg)
}

/// Riemann-Liouville from Caputo: adds Σ_{k<m} (x-a)^{k-α} f^(k)(a+) / Γ(k-α+1)
/// to the Caputo samples. The base node is a singular limit whenever a
/// boundary coefficient is nonzero.
pub fn oracle_rl_caputo_bridge(
    f_caputo: &SampledFn,
    boundary_derivs: &[f64],
    alpha: f64,
    a: f64,
) -> Result<OperatorOutput> {
    let m = alpha.ceil() as usize;
    if boundary_derivs.len() != m {
        return Err(Error::Domain(format!(
            "oracle_rl_caputo_bridge: need m = ceil(alpha) = {m} boundary derivatives, got {}",
            boundary_derivs.len()
        )));
    }
    let mut vals = f_caputo.values.clone();
    let mut flags = vec![NodeFlag::Ok; vals.len()];
    let mut singular = false;
    for i in 0..vals.len() {
        let x = f_caputo.grid.node(i);
        for (k, &d) in boundary_derivs.iter().enumerate() {
            if d == 0.0 {
                continue;
            }
            let e = k as f64 - alpha;
            if x - a <= 0.0 {
                singular = true;
                vals[i] = f64::INFINITY;
            } else {
                vals[i] += (x - a).powf(e) * d * recip_gamma(k as f64 - alpha + 1.0);
            }
        }
    }
    if singular {
        flags[0] = NodeFlag::Singular;
    }
    Ok(OperatorOutput {
        sfn: SampledFn::new(f_caputo.grid, vals)?,
        flags,
    })
}

/// One closed-form identity: a numeric pipeline against an oracle.
pub struct IdentityCase {
    pub name: String,
    pub params: String,
    /// Target absolute error at the fine grid level.
    pub tol_fine: f64,
    /// Observed-order acceptance window, when checked.
    pub order_range: Option<(f64, f64)>,
    /// Max interior error of the pipeline at grid size n.
    run: Box<dyn Fn(usize) -> Result<f64> + Sync>,
}

impl IdentityCase {
    pub fn max_error(&self, n: usize) -> Result<f64> {
        (self.run)(n)
    }
}

/// Max |out - oracle| over interior nodes, skipping the two nodes nearest
/// the base point (oracle values may be unbounded there) and flagged nodes.
fn max_interior_error(
    out: &OperatorOutput,
    oracle: &dyn Fn(f64) -> f64,
    grid: &UniformGrid,
) -> f64 {
    let mut e: f64 = 0.0;
    for i in 2..=grid.n {
        if out.flags[i] != NodeFlag::Ok {
            continue;
        }
        let t = grid.node(i);
        e = e.max((out.sfn.values[i] - oracle(t)).abs());
    }
    e
}

fn sample_kernel(
    rho: f64,
    eta: f64,
    omega: f64,
    sigma: f64,
    grid: UniformGrid,
) -> Result<SampledFn> {
    // e^σ_{ρ,η,ω} with η > 1 vanishes at t = 0
    let p = PrabhakarParams::new(rho, eta, omega, sigma)?;
    sample(
        |t| {
            if t == 0.0 {
                0.0
            } else {
                prabhakar_kernel(&p, t).expect("kernel sample")
            }
        },
        grid,
    )
}

/// The shipped identity suite.
pub fn identity_cases() -> Vec<IdentityCase> {
    let mut cases: Vec<IdentityCase> = Vec::new();
    let cfg = EvalConfig::default();

    // --- composition: E^γ_{ρ,μ,ω} e^σ_{ρ,η,ω} = e^{γ+σ}_{ρ,μ+η,ω} ---
    let comp_sets = [
        (0.8, 0.6, -1.0, 0.5, 0.25, 2.0),
        (0.6, 0.9, -0.5, 1.2, 0.4, 2.5),
        (1.0, 0.5, -2.0, 0.8, 0.0, 2.4),
    ];
    for (idx, &(rho, mu, omega, gam, sigma, eta)) in comp_sets.iter().enumerate() {
        cases.push(IdentityCase {
            name: format!("composition-{}", idx + 1),
            params: format!("rho={rho} mu={mu} omega={omega} gamma={gam} sigma={sigma} eta={eta}"),
            tol_fine: 1e-4,
            order_range: Some((1.7, 2.3)),
            run: Box::new(move |n| {
                let grid = UniformGrid::new(0.0, 1.0, n)?;
                let f = sample_kernel(rho, eta, omega, sigma, grid)?;
                let p = PrabhakarParams::new(rho, mu, omega, gam)?;
                let out = prabhakar_integral_with(&f, &p, &cfg)?;
                let oracle = oracle_composition(&p, sigma, eta)?;
                Ok(max_interior_error(&out, &oracle, &grid))
            }),
        });
    }

    // --- power-function convergence: f = t^{1.3}, P = (0.8, 0.6, -1, 0.5) ---
    cases.push(IdentityCase {
        name: "integral-power-t1.3".into(),
        params: "rho=0.8 mu=0.6 omega=-1 gamma=0.5 f=t^1.3".into(),
        tol_fine: 1e-3,
        // halving h must cut the error by a factor in [3.5, 4.5]
        order_range: Some((1.807, 2.170)),
        run: Box::new(move |n| {
            let grid = UniformGrid::new(0.0, 1.0, n)?;
            // t^{1.3} = Γ(2.3) e^0_{ρ,2.3,ω}(t)
            let f = sample(|t| t.powf(1.3), grid)?;
            let p = PrabhakarParams::new(0.8, 0.6, -1.0, 0.5)?;
            let out = prabhakar_integral_with(&f, &p, &cfg)?;
            let tgt = PrabhakarParams::new(0.8, 2.9, -1.0, 0.5)?;
            let scale = gamma(2.3);
            let oracle = move |t: f64| scale * prabhakar_kernel(&tgt, t).expect("oracle");
            Ok(max_interior_error(&out, &oracle, &grid))
        }),
    });

    // --- Example 1: Hilfer-Prabhakar of t^{p-1}, all ν agree ---
    for &nu in &[0.0, 0.5, 1.0] {
        cases.push(IdentityCase {
            name: format!("hp-power-nu{nu}"),
            params: format!("p=2.5 gamma=0.4 mu=0.3 nu={nu} rho=0.6 omega=-1"),
            tol_fine: 1e-3,
            order_range: None,
            run: Box::new(move |n| {
                let grid = UniformGrid::new(0.0, 1.0, n)?;
                let f = sample(|t| t.powf(1.5), grid)?;
                let out = hilfer_prabhakar_with(&f, 0.4, 0.3, nu, 0.6, -1.0, &cfg)?;
                let oracle = oracle_hp_power(2.5, 0.4, 0.3, 0.6, -1.0)?;
                Ok(max_interior_error(&out, &|t| oracle(t), &grid))
            }),
        });
    }

    // --- Example 2: Hilfer-Prabhakar of e^γ_{ρ,β,ω} -> x^{β-μ-1}/Γ(β-μ) ---
    cases.push(IdentityCase {
        name: "hp-kernel-example2".into(),
        params: "beta=2.5 gamma=0.6 mu=0.5 nu=0.5 rho=0.7 omega=-1".into(),
        tol_fine: 1e-3,
        order_range: None,
        run: Box::new(move |n| {
            let grid = UniformGrid::new(0.0, 1.0, n)?;
            let f = sample_kernel(0.7, 2.5, -1.0, 0.6, grid)?;
            let out = hilfer_prabhakar_with(&f, 0.6, 0.5, 0.5, 0.7, -1.0, &cfg)?;
            let oracle = oracle_hp_kernel(2.5, 0.5)?;
            Ok(max_interior_error(&out, &|x| oracle(x), &grid))
        }),
    });

    // --- derivative-of-integral collapse: D^{γ,μ,ν}(E^δ_{ρ,λ,ω} f) = E^{δ-γ}_{ρ,λ-μ,ω} f ---
    let dej_sets = [
        // (rho, omega, gamma, delta, mu, nu, lambda, sigma, eta)
        (0.8, -1.0, 0.5, 0.9, 0.4, 0.5, 0.8, 0.25, 2.0),
        // δ = γ: collapses to the RL integral I^{λ-μ}
        (0.7, -0.6, 0.6, 0.6, 0.3, 0.6, 0.9, 0.0, 2.0),
    ];
    for (idx, &(rho, omega, gam, delta, mu, nu, lambda, sigma, eta)) in
        dej_sets.iter().enumerate()
    {
        cases.push(IdentityCase {
            name: format!("hp-of-integral-{}", idx + 1),
            params: format!(
                "rho={rho} omega={omega} gamma={gam} delta={delta} mu={mu} nu={nu} lambda={lambda} sigma={sigma} eta={eta}"
            ),
            tol_fine: 1e-3,
            order_range: None,
            run: Box::new(move |n| {
                assert!(lambda > mu + nu - mu * nu);
                let grid = UniformGrid::new(0.0, 1.0, n)?;
                let f = sample_kernel(rho, eta, omega, sigma, grid)?;
                let inner = PrabhakarParams::new(rho, lambda, omega, delta)?;
                let step1 = prabhakar_integral_with(&f, &inner, &cfg)?;
                let out = hilfer_prabhakar_with(&step1.sfn, gam, mu, nu, rho, omega, &cfg)?;
                // E^{δ-γ}_{ρ,λ-μ,ω} e^σ_{ρ,η,ω} = e^{δ-γ+σ}_{ρ,λ-μ+η,ω}
                let tgt = PrabhakarParams::new(rho, lambda - mu + eta, omega, delta - gam + sigma)?;
                let oracle = move |t: f64| prabhakar_kernel(&tgt, t).expect("oracle");
                Ok(max_interior_error(&out, &oracle, &grid))
            }),
        });
    }

    // --- commutation with the RL integral: I^λ D^{γ,μ,ν} φ = D^{γ,μ,ν} I^λ φ = E^{-γ}_{ρ,λ-μ,ω} φ ---
    cases.push(IdentityCase {
        name: "hp-rl-commutation".into(),
        params: "rho=0.8 omega=-1 gamma=0.5 mu=0.4 nu=0.5 lambda=0.8 sigma=0.25 eta=2.0".into(),
        tol_fine: 1e-3,
        order_range: None,
        run: Box::new(move |n| {
            let (rho, omega, gam, mu, nu, lambda, sigma, eta) =
                (0.8, -1.0, 0.5, 0.4, 0.5, 0.8, 0.25, 2.0);
            let grid = UniformGrid::new(0.0, 1.0, n)?;
            let f = sample_kernel(rho, eta, omega, sigma, grid)?;
            // route 1: I^λ then D
            let il = apply_with(&f, &OperatorSpec::RlIntegral { alpha: lambda }, &cfg)?;
            let r1 = hilfer_prabhakar_with(&il.sfn, gam, mu, nu, rho, omega, &cfg)?;
            // route 2: D then I^λ
            let d = hilfer_prabhakar_with(&f, gam, mu, nu, rho, omega, &cfg)?;
            let r2 = apply_with(&d.sfn, &OperatorSpec::RlIntegral { alpha: lambda }, &cfg)?;
            // closed form: e^{-γ+σ}_{ρ,λ-μ+η,ω}
            let tgt = PrabhakarParams::new(rho, lambda - mu + eta, omega, sigma - gam)?;
            let oracle = move |t: f64| prabhakar_kernel(&tgt, t).expect("oracle");
            let e1 = max_interior_error(&r1, &oracle, &grid);
            let e2 = max_interior_error(&r2, &oracle, &grid);
            // pairwise agreement of the two routes
            let mut e12: f64 = 0.0;
            for i in 2..=grid.n {
                e12 = e12.max((r1.sfn.values[i] - r2.sfn.values[i]).abs());
            }
            Ok(e1.max(e2).max(e12))
        }),
    });

    // --- Theorem: RL = Caputo + boundary series, f = 1 + t, α = 0.5 ---
    cases.push(IdentityCase {
        name: "rl-caputo-bridge".into(),
        params: "f=1+t alpha=0.5".into(),
        tol_fine: 1e-3,
        order_range: None,
        run: Box::new(move |n| {
            let grid = UniformGrid::new(0.0, 1.0, n)?;
            let f = sample(|t| 1.0 + t, grid)?;
            let p = PrabhakarParams::new(1.0, 0.5, 0.0, 0.0)?;
            let rl = prabhakar_derivative_with(&f, &p, &cfg)?;
            let cap = apply_with(&f, &OperatorSpec::Caputo { alpha: 0.5 }, &cfg)?;
            let bridged = oracle_rl_caputo_bridge(&cap.sfn, &[1.0], 0.5, 0.0)?;
            let mut e: f64 = 0.0;
            for i in 2..=grid.n {
                e = e.max((rl.sfn.values[i] - bridged.sfn.values[i]).abs());
            }
            Ok(e)
        }),
    });

    // --- Remark: ᶜD^γ f = D^γ h with h = f - Σ t^k f^(k)(0)/k! ---
    cases.push(IdentityCase {
        name: "remark-regularization".into(),
        params: "rho=0.7 mu=0.6 omega=-0.8 gamma=0.4 f=1+2t+t^2".into(),
        tol_fine: 1e-3,
        order_range: None,
        run: Box::new(move |n| {
            let grid = UniformGrid::new(0.0, 1.0, n)?;
            let p = PrabhakarParams::new(0.7, 0.6, -0.8, 0.4)?;
            let f = sample(|t| 1.0 + 2.0 * t + t * t, grid)?;
            let reg = prabhakar_derivative_regularized_with(&f, &p, &cfg)?;
            // h removes the k < m = 1 boundary data: h = f - f(0)
            let h = sample(|t| 2.0 * t + t * t, grid)?;
            let nonreg_h = prabhakar_derivative_with(&h, &p, &cfg)?;
            let mut e: f64 = 0.0;
            for i in 2..=grid.n {
                e = e.max((reg.sfn.values[i] - nonreg_h.sfn.values[i]).abs());
            }
            Ok(e)
        }),
    });

    cases
}

/// Run the identity suite at two grid levels and produce a report.
pub fn run_identity_suite(grids: &[usize]) -> Result<SuiteReport> {
    if grids.len() < 2 {
        return Err(Error::Domain(
            "identity suite needs two grid levels".into(),
        ));
    }
    let (nc, nf) = (grids[0], grids[1]);
    let mut reports = Vec::new();
    for case in identity_cases() {
        let (coarse, fine) = (case.max_error(nc)?, case.max_error(nf)?);
        let order = if fine > 0.0 && coarse > 0.0 {
            Some((coarse / fine).log2() / ((nf as f64 / nc as f64).log2()))
        } else {
            None
        };
        let mut holds = fine <= case.tol_fine;
        if let (Some((lo, hi)), Some(ord)) = (case.order_range, order) {
            holds = holds && ord >= lo && ord <= hi;
        }
        reports.push(CaseReport {
            name: case.name.clone(),
            params: case.params.clone(),
            grids: vec![nc, nf],
            max_error: Some(fine),
            order,
            holds,
        });
    }
    Ok(SuiteReport::new(
        "identities",
        ReportConfig {
            grids: vec![nc, nf],
            seed: None,
            tol: 1e-3,
        },
        reports,
    ))
}
