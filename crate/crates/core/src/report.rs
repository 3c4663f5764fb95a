//! Approximation ratios per `(β, β⁻)`, grid sweeps, and their CSV, JSON and
//! SVG renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::certificate::certify;
use crate::error::{Error, Result};
use crate::lp::build_lp;
use crate::profiles::Params;
use crate::scalar::{format_decimal, rational_from_f64, Rational};
use crate::simplex::{solve_exact, solve_float, Status};

/// Largest `β` solved exactly unless a mode is forced.
pub const EXACT_CEILING: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn auto(params: &Params) -> Mode {
        if params.beta <= EXACT_CEILING {
            Mode::Exact
        } else {
            Mode::Float
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RatioEntry {
    pub beta: u32,
    pub beta_minus: u32,
    pub mode: Mode,
    /// Exact LP optimum `max μ(G)/μ(H)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimum: Option<Rational>,
    /// Exact ratio, the reciprocal of `optimum`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Rational>,
    pub float: f64,
    /// Four places, half to even.
    pub decimal: String,
    pub solve_millis: u64,
    pub pivots: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl RatioEntry {
    pub fn params(&self) -> Params {
        Params { beta: self.beta, beta_minus: self.beta_minus }
    }

    /// The ratio as an exact rational: the solver's value in exact mode,
    /// the float's binary value otherwise.
    pub fn value(&self) -> Rational {
        self.exact.clone().unwrap_or_else(|| rational_from_f64(self.float).unwrap_or_else(Rational::zero))
    }

    pub fn decimal_places(&self, places: usize) -> String {
        format_decimal(&self.value(), places)
    }
}

/// Builds and solves the LP for `params`. Exact optima are certified
/// before they are reported.
pub fn compute_ratio(params: &Params, mode: Mode) -> Result<RatioEntry> {
    let start = Instant::now();
    let lp = build_lp(params)?;
    let (optimum, exact, float, pivots, warnings) = match mode {
        Mode::Exact => {
            let res = solve_exact(&lp)?;
            if res.status != Status::Optimal {
                return Err(Error::Internal(format!("LP for {params} is {:?}", res.status)));
            }
            certify(&lp, &res)?;
            let opt = res.objective.expect("optimal results carry an objective");
            let ratio = opt.recip();
            let f = ratio.to_f64();
            (Some(opt), Some(ratio), f, res.pivots, res.warnings)
        }
        Mode::Float => {
            let res = solve_float(&lp)?;
            match (res.status, res.objective) {
                (Status::Optimal, Some(opt)) if opt > 0.0 => (None, None, 1.0 / opt, res.pivots, res.warnings),
                (status, _) => return Err(Error::Internal(format!("LP for {params} is {status:?}"))),
            }
        }
    };
    let mut entry = RatioEntry {
        beta: params.beta,
        beta_minus: params.beta_minus,
        mode,
        optimum,
        exact,
        float,
        decimal: String::new(),
        solve_millis: start.elapsed().as_millis() as u64,
        pivots,
        warnings,
    };
    entry.decimal = entry.decimal_places(4);
    Ok(entry)
}

/// Every valid cell with `2 ≤ β ≤ max_beta`.
pub fn grid_cells(max_beta: u32) -> Vec<Params> {
    (2..=max_beta).flat_map(|b| (1..b).map(move |bm| Params { beta: b, beta_minus: bm })).collect()
}

/// Cells `(β, β − c)` for each offset `c`, skipping those with `β − c < 1`.
pub fn diagonal_cells(max_beta: u32, offsets: &[u32]) -> Vec<Params> {
    let mut cells: Vec<Params> = offsets
        .iter()
        .filter(|&&c| c >= 1)
        .flat_map(|&c| ((c + 1)..=max_beta).map(move |b| Params { beta: b, beta_minus: b - c }))
        .collect();
    cells.sort();
    cells.dedup();
    cells
}

#[derive(Debug, Clone, Default)]
pub struct RatioTable {
    pub entries: BTreeMap<(u32, u32), RatioEntry>,
}

/// Solves `cells` on a pool of `workers` threads. `mode = None` picks
/// [`Mode::auto`] per cell. Results are keyed by `(β, β⁻)`, so the table
/// does not depend on scheduling.
pub fn sweep(cells: &[Params], mode: Option<Mode>, workers: usize) -> Result<RatioTable> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let entries: Vec<RatioEntry> = pool.install(|| {
        cells
            .par_iter()
            .map(|p| compute_ratio(p, mode.unwrap_or_else(|| Mode::auto(p))))
            .collect::<Result<_>>()
    })?;
    Ok(RatioTable { entries: entries.into_iter().map(|e| ((e.beta, e.beta_minus), e)).collect() })
}

impl RatioTable {
    pub fn get(&self, beta: u32, beta_minus: u32) -> Option<&RatioEntry> {
        self.entries.get(&(beta, beta_minus))
    }

    /// The entry with the largest ratio; the first in key order on ties.
    pub fn best(&self) -> Option<&RatioEntry> {
        let mut best: Option<(&RatioEntry, Rational)> = None;
        for e in self.entries.values() {
            let v = e.value();
            if best.as_ref().is_none_or(|(_, b)| v > *b) {
                best = Some((e, v));
            }
        }
        best.map(|(e, _)| e)
    }

    fn max_beta(&self) -> u32 {
        self.entries.keys().map(|k| k.0).max().unwrap_or(2)
    }

    /// One row per `β`, one column per `β⁻ < max β`; `-` marks invalid or
    /// unsolved cells.
    pub fn to_csv(&self) -> String {
        let max = self.max_beta();
        let mut out = String::from("beta");
        for bm in 1..max {
            let _ = write!(out, ",{bm}");
        }
        out.push('\n');
        for b in 2..=max {
            let _ = write!(out, "{b}");
            for bm in 1..max {
                match self.get(b, bm) {
                    Some(e) => {
                        let _ = write!(out, ",{}", e.decimal);
                    }
                    None => out.push_str(",-"),
                }
            }
            out.push('\n');
        }
        out
    }

    /// One line per solved cell, for diagonal families.
    pub fn to_long_csv(&self) -> String {
        let mut out = String::from("beta,beta_minus,offset,mode,ratio,exact\n");
        for e in self.entries.values() {
            let exact = e.exact.as_ref().map(|r| r.to_string()).unwrap_or_default();
            let mode = match e.mode {
                Mode::Exact => "exact",
                Mode::Float => "float",
            };
            let _ = writeln!(
                out,
                "{},{},{},{mode},{},{exact}",
                e.beta,
                e.beta_minus,
                e.beta - e.beta_minus,
                e.decimal
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            cells: Vec<&'a RatioEntry>,
            best: Option<&'a RatioEntry>,
        }
        let out = Out { cells: self.entries.values().collect(), best: self.best() };
        serde_json::to_string_pretty(&out).expect("tables always serialize") + "\n"
    }

    /// Static heatmap: rows `β`, columns `β⁻`, darker for larger ratios,
    /// with a green circle on the best cell.
    pub fn to_svg(&self) -> String {
        let max = self.max_beta();
        let cell = (600 / max.max(1)).clamp(6, 48) as f64;
        let margin = 48.0;
        let width = margin + cell * (max - 1).max(1) as f64 + 16.0;
        let height = margin + cell * (max - 1) as f64 + 16.0;
        let values: Vec<f64> = self.entries.values().map(|e| e.float).collect();
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let span = if hi > lo { hi - lo } else { 1.0 };

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" font-family="sans-serif" font-size="10">"#
        );
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(s, r#"<text x="{margin}" y="14">approximation ratio by (beta, beta_minus)</text>"#);
        let _ = writeln!(
            s,
            r#"<text x="{}" y="30" text-anchor="middle">beta_minus</text>"#,
            margin + cell * (max - 1) as f64 / 2.0
        );
        let _ = writeln!(
            s,
            r#"<text x="12" y="{0}" transform="rotate(-90 12 {0})" text-anchor="middle">beta</text>"#,
            margin + cell * (max - 1) as f64 / 2.0
        );
        let label_every = (12.0 / cell).ceil().max(1.0) as u32;
        for k in 1..max {
            if k % label_every == 0 || k == 1 {
                let _ = writeln!(
                    s,
                    r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{k}</text>"#,
                    margin + cell * (k as f64 - 0.5),
                    margin - 4.0
                );
            }
        }
        for b in 2..=max {
            if b % label_every == 0 || b == 2 {
                let _ = writeln!(
                    s,
                    r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{b}</text>"#,
                    margin - 4.0,
                    margin + cell * (b as f64 - 1.5) + 3.5
                );
            }
        }
        for e in self.entries.values() {
            let x = margin + cell * (e.beta_minus - 1) as f64;
            let y = margin + cell * (e.beta - 2) as f64;
            let t = (e.float - lo) / span;
            let _ = writeln!(
                s,
                r#"<rect x="{x:.1}" y="{y:.1}" width="{cell:.1}" height="{cell:.1}" fill="{}"><title>({}, {}) {}</title></rect>"#,
                shade(t),
                e.beta,
                e.beta_minus,
                e.decimal
            );
            if cell >= 36.0 {
                let ink = if t > 0.55 { "white" } else { "black" };
                let _ = writeln!(
                    s,
                    r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" fill="{ink}" font-size="9">{}</text>"#,
                    x + cell / 2.0,
                    y + cell / 2.0 + 3.0,
                    e.decimal
                );
            }
        }
        if let Some(b) = self.best() {
            let cx = margin + cell * (b.beta_minus as f64 - 0.5);
            let cy = margin + cell * (b.beta as f64 - 1.5);
            let _ = writeln!(
                s,
                r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="{:.1}" fill="none" stroke="green" stroke-width="3"/>"#,
                cell * 0.6
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

/// Light yellow to dark blue.
fn shade(t: f64) -> String {
    let t = t.clamp(0.0, 1.0);
    let lerp = |a: f64, b: f64| (a + (b - a) * t).round() as u8;
    format!("#{:02x}{:02x}{:02x}", lerp(255.0, 8.0), lerp(247.0, 48.0), lerp(188.0, 107.0))
}

/// `true` when every exact entry lies in `(0, 1]`.
pub fn ratios_in_range(table: &RatioTable) -> bool {
    table.entries.values().all(|e| {
        let v = e.value();
        v > Rational::zero() && v <= Rational::one()
    })
}
