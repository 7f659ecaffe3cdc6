//! Uniform-grid sampled functions.
//!
//! `SampledFn` is the operand of every operator: function values on the
//! nodes t_i = a + i·h of a uniform grid, optionally with caller-supplied
//! exact derivative samples. Differentiation uses 4th-order stencils
//! (one-sided at the two boundary nodes on each end) and interpolation is
//! piecewise-cubic 4-point Lagrange.

use crate::error::{Error, Result};
use std::io::{BufRead, Write};

/// Uniform grid with n intervals on [a, b].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    pub a: f64,
    pub b: f64,
    pub n: usize,
}

impl UniformGrid {
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self> {
        if !(b > a) || !a.is_finite() || !b.is_finite() {
            return Err(Error::Grid(format!("need b > a, got a={a}, b={b}")));
        }
        if n < 3 {
            return Err(Error::Grid(format!("need n >= 3 intervals, got {n}")));
        }
        Ok(UniformGrid { a, b, n })
    }

    #[inline]
    pub fn h(&self) -> f64 {
        (self.b - self.a) / self.n as f64
    }

    #[inline]
    pub fn node(&self, i: usize) -> f64 {
        self.a + i as f64 * self.h()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.n).map(|i| self.node(i))
    }

    /// Number of nodes, n + 1.
    #[inline]
    pub fn len(&self) -> usize {
        self.n + 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A real function sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFn {
    pub grid: UniformGrid,
    pub values: Vec<f64>,
    /// Caller-supplied exact derivative samples; row k holds f^{(k+1)}.
    pub deriv_values: Option<Vec<Vec<f64>>>,
}

impl SampledFn {
    pub fn new(grid: UniformGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Grid(format!(
                "value count {} does not match grid nodes {}",
                values.len(),
                grid.len()
            )));
        }
        Ok(SampledFn {
            grid,
            values,
            deriv_values: None,
        })
    }

    /// Attach exact derivative samples (row k = f^{(k+1)} on the nodes).
    pub fn with_derivatives(mut self, rows: Vec<Vec<f64>>) -> Result<Self> {
        for (k, row) in rows.iter().enumerate() {
            if row.len() != self.grid.len() {
                return Err(Error::Grid(format!(
                    "derivative row {} has {} entries, expected {}",
                    k + 1,
                    row.len(),
                    self.grid.len()
                )));
            }
        }
        self.deriv_values = Some(rows);
        Ok(self)
    }
}

/// Sample `f` on the grid nodes. Fails (naming the node) if the function
/// produces a non-finite value.
pub fn sample(f: impl Fn(f64) -> f64, grid: UniformGrid) -> Result<SampledFn> {
    let mut values = Vec::with_capacity(grid.len());
    for (i, t) in grid.nodes().enumerate() {
        let v = f(t);
        if !v.is_finite() {
            return Err(Error::Grid(format!(
                "sample: f({t}) is not finite at node {i}"
            )));
        }
        values.push(v);
    }
    SampledFn::new(grid, values)
}

fn stencil_derivative(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len() - 1;
    let mut d = vec![0.0; n + 1];
    let c = 1.0 / (12.0 * h);
    // one-sided 4th-order at the two left and two right nodes
    d[0] = c * (-25.0 * values[0] + 48.0 * values[1] - 36.0 * values[2] + 16.0 * values[3]
        - 3.0 * values[4]);
    d[1] = c * (-3.0 * values[0] - 10.0 * values[1] + 18.0 * values[2] - 6.0 * values[3]
        + values[4]);
    for i in 2..n - 1 {
        d[i] = c * (values[i - 2] - 8.0 * values[i - 1] + 8.0 * values[i + 1] - values[i + 2]);
    }
    d[n - 1] = c * (3.0 * values[n] + 10.0 * values[n - 1] - 18.0 * values[n - 2]
        + 6.0 * values[n - 3]
        - values[n - 4]);
    d[n] = c * (25.0 * values[n] - 48.0 * values[n - 1] + 36.0 * values[n - 2]
        - 16.0 * values[n - 3]
        + 3.0 * values[n - 4]);
    d
}

fn stencil_second_derivative(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len() - 1;
    let mut d = vec![0.0; n + 1];
    let c = 1.0 / (h * h);
    let lo = [
        [15.0 / 4.0, -77.0 / 6.0, 107.0 / 6.0, -13.0, 61.0 / 12.0, -5.0 / 6.0],
        [5.0 / 6.0, -5.0 / 4.0, -1.0 / 3.0, 7.0 / 6.0, -1.0 / 2.0, 1.0 / 12.0],
    ];
    for (row, coeffs) in lo.iter().enumerate() {
        let mut acc = 0.0;
        for (j, w) in coeffs.iter().enumerate() {
            acc += w * values[j];
        }
        d[row] = acc * c;
        let mut acc = 0.0;
        for (j, w) in coeffs.iter().enumerate() {
            acc += w * values[n - j];
        }
        d[n - row] = acc * c;
    }
    for i in 2..n - 1 {
        d[i] = c
            * (-values[i - 2] / 12.0 + 4.0 * values[i - 1] / 3.0 - 2.5 * values[i]
                + 4.0 * values[i + 1] / 3.0
                - values[i + 2] / 12.0);
    }
    d
}

/// Derivative of order 1 or 2 by 4th-order finite differences; supplied
/// derivative rows, when present, take precedence. Orders above 2 are
/// supported only through supplied rows.
pub fn differentiate(sfn: &SampledFn, order: usize) -> Result<SampledFn> {
    if order == 0 {
        return Ok(sfn.clone());
    }
    if let Some(rows) = &sfn.deriv_values {
        if let Some(row) = rows.get(order - 1) {
            return SampledFn::new(sfn.grid, row.clone());
        }
    }
    if order > 2 {
        return Err(Error::UnsupportedOrder { order, max: 2 });
    }
    if sfn.grid.n < 5 {
        return Err(Error::Grid(format!(
            "differentiate: need n >= 5 intervals, got {}",
            sfn.grid.n
        )));
    }
    let h = sfn.grid.h();
    let vals = if order == 1 {
        stencil_derivative(&sfn.values, h)
    } else {
        stencil_second_derivative(&sfn.values, h)
    };
    SampledFn::new(sfn.grid, vals)
}

/// Piecewise-cubic (4-point Lagrange) interpolation; exact at the nodes
/// and for cubic polynomials.
pub fn eval_interp(sfn: &SampledFn, t: f64) -> Result<f64> {
    let g = &sfn.grid;
    if t < g.a - 1e-12 * (g.b - g.a) || t > g.b + 1e-12 * (g.b - g.a) {
        return Err(Error::Domain(format!(
            "eval_interp: t={t} outside [{}, {}]",
            g.a, g.b
        )));
    }
    let h = g.h();
    let s = ((t - g.a) / h).floor();
    let j = (s as isize).clamp(0, g.n as isize - 1) as usize;
    // window [j-1, j+2] clamped into range
    let lo = j.saturating_sub(1).min(g.n - 3);
    let x = (t - g.node(lo)) / h; // in units of h from the window start
    let y = &sfn.values[lo..lo + 4];
    // Lagrange basis on nodes 0,1,2,3
    let l0 = -(x - 1.0) * (x - 2.0) * (x - 3.0) / 6.0;
    let l1 = x * (x - 2.0) * (x - 3.0) / 2.0;
    let l2 = -x * (x - 1.0) * (x - 3.0) / 2.0;
    let l3 = x * (x - 1.0) * (x - 2.0) / 6.0;
    Ok(y[0] * l0 + y[1] * l1 + y[2] * l2 + y[3] * l3)
}

/// Read a two-column `t,value` CSV (header required). The t column must be
/// strictly increasing and equispaced within 1e-9·h. A third column, when
/// present, is ignored (operator outputs carry a flag column).
pub fn read_csv(reader: impl BufRead) -> Result<SampledFn> {
    let mut ts: Vec<f64> = Vec::new();
    let mut vs: Vec<f64> = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Grid(format!("read failed: {e}")))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if lineno == 0 {
            // header
            continue;
        }
        let mut cols = line.split(',');
        let t: f64 = cols
            .next()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| Error::Grid(format!("row {}: bad t column", lineno + 1)))?;
        let v: f64 = cols
            .next()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| Error::Grid(format!("row {}: bad value column", lineno + 1)))?;
        ts.push(t);
        vs.push(v);
    }
    if ts.len() < 4 {
        return Err(Error::Grid(format!(
            "need at least 4 data rows, got {}",
            ts.len()
        )));
    }
    let n = ts.len() - 1;
    let h = (ts[n] - ts[0]) / n as f64;
    if !(h > 0.0) {
        return Err(Error::Grid("t column must be strictly increasing".into()));
    }
    for i in 1..=n {
        let expect = ts[0] + i as f64 * h;
        if (ts[i] - expect).abs() > 1e-9 * h {
            return Err(Error::Grid(format!(
                "row {}: t={} deviates from uniform spacing (expected {})",
                i + 2,
                ts[i],
                expect
            )));
        }
        if ts[i] <= ts[i - 1] {
            return Err(Error::Grid(format!("row {}: t not increasing", i + 2)));
        }
    }
    SampledFn::new(UniformGrid::new(ts[0], ts[n], n)?, vs)
}

/// Write `t,value` CSV with 17 significant digits (round-trip exact).
pub fn write_csv(sfn: &SampledFn, mut w: impl Write) -> std::io::Result<()> {
    writeln!(w, "t,value")?;
    for (t, v) in sfn.grid.nodes().zip(&sfn.values) {
        writeln!(w, "{t:.16e},{v:.16e}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_basics() {
        let g = UniformGrid::new(0.0, 1.0, 4).unwrap();
        let s = sample(|t| t, g).unwrap();
        assert_eq!(s.values, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let s = sample(|_| 3.5, g).unwrap();
        assert!(s.values.iter().all(|&v| v == 3.5));
        let g2 = UniformGrid::new(0.0, 2.0, 4).unwrap();
        let s = sample(|t| t * t, g2).unwrap();
        assert_eq!(s.values[0], 0.0);
        assert_eq!(s.values[2], 1.0);
        assert_eq!(s.values[4], 4.0);
        assert!(sample(|t| 1.0 / t, g).is_err()); // inf at t=0
    }

    #[test]
    fn grid_validation() {
        assert!(UniformGrid::new(1.0, 0.0, 8).is_err());
        assert!(UniformGrid::new(0.0, 1.0, 2).is_err());
    }

    #[test]
    fn differentiate_cubic_exactly() {
        let g = UniformGrid::new(0.0, 1.0, 64).unwrap();
        let s = sample(|t| t * t * t, g).unwrap();
        let d = differentiate(&s, 1).unwrap();
        for (t, v) in g.nodes().zip(&d.values) {
            assert!((v - 3.0 * t * t).abs() < 1e-10, "t={t}");
        }
        let c = sample(|_| 2.0, g).unwrap();
        let dc = differentiate(&c, 1).unwrap();
        assert!(dc.values.iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn differentiate_2nd_order_sin() {
        let g = UniformGrid::new(0.0, std::f64::consts::PI, 128).unwrap();
        let s = sample(|t| t.sin(), g).unwrap();
        let d2 = differentiate(&s, 2).unwrap();
        for (t, v) in g.nodes().zip(&d2.values) {
            assert!((v + t.sin()).abs() < 1e-6, "t={t}: {v}");
        }
    }

    #[test]
    fn differentiate_supplied_rows_win() {
        let g = UniformGrid::new(0.0, 1.0, 8).unwrap();
        let exact: Vec<f64> = g.nodes().map(|t| t.cos()).collect();
        let s = sample(|t| t.sin(), g)
            .unwrap()
            .with_derivatives(vec![exact.clone()])
            .unwrap();
        let d = differentiate(&s, 1).unwrap();
        assert_eq!(d.values, exact);
        // order 3 without rows is unsupported
        let plain = sample(|t| t.sin(), g).unwrap();
        assert!(matches!(
            differentiate(&plain, 3),
            Err(Error::UnsupportedOrder { .. })
        ));
    }

    #[test]
    fn interp_exact_on_nodes_and_cubics() {
        let g = UniformGrid::new(0.0, 2.0, 16).unwrap();
        let s = sample(|t| 1.0 + t - 0.5 * t * t + 0.25 * t * t * t, g).unwrap();
        for i in 0..=16 {
            let t = g.node(i);
            assert!((eval_interp(&s, t).unwrap() - s.values[i]).abs() < 1e-14);
        }
        for i in 0..40 {
            let t = 2.0 * (i as f64 + 0.5) / 40.0;
            let expect = 1.0 + t - 0.5 * t * t + 0.25 * t * t * t;
            assert!((eval_interp(&s, t).unwrap() - expect).abs() < 1e-12, "t={t}");
        }
        assert!(eval_interp(&s, 2.5).is_err());
    }

    #[test]
    fn interp_exp_fourth_order() {
        let errs: Vec<f64> = [32usize, 64]
            .iter()
            .map(|&n| {
                let g = UniformGrid::new(0.0, 1.0, n).unwrap();
                let s = sample(|t| t.exp(), g).unwrap();
                let mut emax: f64 = 0.0;
                for i in 0..n {
                    let t = g.node(i) + 0.5 * g.h();
                    emax = emax.max((eval_interp(&s, t).unwrap() - t.exp()).abs());
                }
                emax
            })
            .collect();
        let order = (errs[0] / errs[1]).log2();
        assert!(order > 3.5 && order < 4.5, "order {order}");
    }

    #[test]
    fn csv_roundtrip_and_validation() {
        let g = UniformGrid::new(0.5, 1.5, 8).unwrap();
        let s = sample(|t| t.sin() * 7.0, g).unwrap();
        let mut buf = Vec::new();
        write_csv(&s, &mut buf).unwrap();
        let back = read_csv(&buf[..]).unwrap();
        assert_eq!(back.grid.n, 8);
        assert!((back.grid.a - 0.5).abs() < 1e-15);
        for (a, b) in back.values.iter().zip(&s.values) {
            assert_eq!(a, b);
        }
        // non-uniform spacing rejected
        let bad = "t,value\n0,1\n0.1,1\n0.25,1\n0.3,1\n";
        assert!(read_csv(bad.as_bytes()).is_err());
        // decreasing rejected
        let bad = "t,value\n0,1\n-0.1,1\n-0.2,1\n-0.3,1\n";
        assert!(read_csv(bad.as_bytes()).is_err());
    }
}
