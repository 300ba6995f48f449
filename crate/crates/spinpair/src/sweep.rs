//! Grid sweeps of the concurrence and reproduction of the reference
//! surfaces, with CSV output.
//!
//! Every grid point is evaluated twice: through the cataloged closed form of
//! its classified case (when one exists) and through the full numeric
//! pipeline. The emitted table carries both columns plus their absolute
//! difference, so a sweep doubles as a bulk cross-check of the formulas.

use crate::concurrence::thermal_concurrence_numeric;
use crate::error::{Error, Result};
use crate::model::{ModelParams, Temperature};
use crate::reductions::{classify, closed_form_concurrence, entanglement_indicator};

use std::fmt;
use std::path::Path;
use std::str::FromStr;

/// A sweepable quantity. The first seven set a parameter directly; the last
/// two set the exchange combinations J+ and J- through the ratios used by
/// the anisotropy surfaces (J+ is taken relative to the base kT, J- relative
/// to the current J+, so an axis pair is applied axis1 first, then axis2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Jx,
    Jy,
    Jz,
    FieldB,
    FieldImbalance,
    Dm,
    Kt,
    JPlusOverKt,
    JMinusOverJPlus,
}

impl FromStr for Axis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "jx" | "j_x" => Axis::Jx,
            "jy" | "j_y" => Axis::Jy,
            "jz" | "j_z" => Axis::Jz,
            "B" => Axis::FieldB,
            "b" => Axis::FieldImbalance,
            "D" => Axis::Dm,
            "kT" => Axis::Kt,
            "j_plus_over_kT" => Axis::JPlusOverKt,
            "j_minus_over_j_plus" => Axis::JMinusOverJPlus,
            other => {
                return Err(Error::Config {
                    field: "parameter-name".into(),
                    reason: format!(
                        "unknown parameter `{other}` (expected one of jx, jy, jz, B, b, D, kT, \
                         j_plus_over_kT, j_minus_over_j_plus)"
                    ),
                })
            }
        })
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axis::Jx => "jx",
            Axis::Jy => "jy",
            Axis::Jz => "jz",
            Axis::FieldB => "B",
            Axis::FieldImbalance => "b",
            Axis::Dm => "D",
            Axis::Kt => "kT",
            Axis::JPlusOverKt => "j_plus_over_kT",
            Axis::JMinusOverJPlus => "j_minus_over_j_plus",
        };
        f.write_str(s)
    }
}

/// One axis of a sweep: `count >= 2` evenly spaced values from `start` to
/// `stop` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec {
    pub param: Axis,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl AxisSpec {
    pub fn new(param: Axis, start: f64, stop: f64, count: usize) -> Self {
        AxisSpec {
            param,
            start,
            stop,
            count,
        }
    }

    fn validate(&self, name: &str) -> Result<()> {
        let fail = |part: &str, reason: String| {
            Err(Error::Config {
                field: format!("{name}.{part}"),
                reason,
            })
        };
        if !self.start.is_finite() || !self.stop.is_finite() {
            return fail("range", "start and stop must be finite".into());
        }
        if self.count < 2 {
            return fail("count", format!("need at least 2 points, got {}", self.count));
        }
        if self.start >= self.stop {
            return fail(
                "range",
                format!("start {} must be below stop {}", self.start, self.stop),
            );
        }
        if self.param == Axis::Kt && self.start <= 0.0 {
            return fail("start", format!("kT values must be positive, got {}", self.start));
        }
        Ok(())
    }

    fn value(&self, i: usize) -> f64 {
        self.start + (self.stop - self.start) * i as f64 / (self.count - 1) as f64
    }
}

/// A sweep: base parameters, base temperature, one or two axes.
#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    pub base: ModelParams,
    pub kt: Temperature,
    pub axis1: AxisSpec,
    pub axis2: Option<AxisSpec>,
}

/// One evaluated grid point. For 1-D sweeps `axis2` is reported as 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub axis1: f64,
    pub axis2: f64,
    pub c_closed: f64,
    pub c_numeric: f64,
    /// Auxiliary column (the XYZ entanglement sign function) carried only by
    /// the anisotropy-versus-temperature figures.
    pub aux: Option<f64>,
}

impl SweepRow {
    pub fn abs_diff(&self) -> f64 {
        (self.c_closed - self.c_numeric).abs()
    }
}

/// An evaluated sweep in axis1-major row order.
#[derive(Debug, Clone, Default)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    pub fn has_aux(&self) -> bool {
        self.rows.iter().any(|r| r.aux.is_some())
    }
}

fn apply_axis(axis: Axis, value: f64, params: &mut ModelParams, kt: &mut f64) {
    match axis {
        Axis::Jx => params.jx = value,
        Axis::Jy => params.jy = value,
        Axis::Jz => params.jz = value,
        Axis::FieldB => params.field = value,
        Axis::FieldImbalance => params.field_imbalance = value,
        Axis::Dm => params.dm = value,
        Axis::Kt => *kt = value,
        Axis::JPlusOverKt => {
            let j_minus = 0.5 * (params.jx - params.jy);
            let j_plus = value * *kt;
            params.jx = j_plus + j_minus;
            params.jy = j_plus - j_minus;
        }
        Axis::JMinusOverJPlus => {
            let j_plus = 0.5 * (params.jx + params.jy);
            let j_minus = value * j_plus;
            params.jx = j_plus + j_minus;
            params.jy = j_plus - j_minus;
        }
    }
}

/// Closed and numeric concurrence at one point. Points whose case has no
/// cataloged closed form report the numeric value in both columns.
fn evaluate_point(params: &ModelParams, kt: Temperature) -> Result<(f64, f64)> {
    let numeric = thermal_concurrence_numeric(params, kt)?.concurrence;
    let closed = match closed_form_concurrence(&classify(params), params, kt) {
        Ok(v) => v,
        Err(Error::NoClosedForm(_)) => numeric,
        Err(e) => return Err(e),
    };
    Ok((closed, numeric))
}

/// Evaluates the configured grid, axis1-major, in deterministic order.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepTable> {
    config.base.validate()?;
    config.axis1.validate("axis1")?;
    if let Some(axis2) = &config.axis2 {
        axis2.validate("axis2")?;
    }

    let mut rows = Vec::new();
    for i in 0..config.axis1.count {
        let a1 = config.axis1.value(i);
        let inner: Vec<(f64, f64)> = match &config.axis2 {
            Some(axis2) => (0..axis2.count).map(|j| (axis2.value(j), 0.0)).collect(),
            None => vec![(0.0, 0.0)],
        };
        for (a2, _) in inner {
            let mut params = config.base;
            let mut kt_val = config.kt.kt();
            apply_axis(config.axis1.param, a1, &mut params, &mut kt_val);
            if let Some(axis2) = &config.axis2 {
                apply_axis(axis2.param, a2, &mut params, &mut kt_val);
            }
            let kt = Temperature::new(kt_val).map_err(|_| Error::Config {
                field: "kT".into(),
                reason: format!("sweep reached non-positive kT = {kt_val}"),
            })?;
            let (c_closed, c_numeric) = evaluate_point(&params, kt)?;
            rows.push(SweepRow {
                axis1: a1,
                axis2: a2,
                c_closed,
                c_numeric,
                aux: None,
            });
        }
    }
    Ok(SweepTable { rows })
}

/// The exchange triples behind the anisotropic reference surfaces:
/// (Jx, Jy, Jz) = (1, 2, 3) and its ferromagnetic mirror (-1, -2, -3).
pub fn figure_triple(ferromagnetic: bool) -> ModelParams {
    if ferromagnetic {
        ModelParams::exchange(-1.0, -2.0, -3.0)
    } else {
        ModelParams::exchange(1.0, 2.0, 3.0)
    }
}

/// Reproduces the data behind the six reference surfaces.
///
/// 1, 2: pure XY concurrence against J+/kT in [0, 6] and J-/J+ in [0, 3]
///       (61 x 61; figure 2 is the ferromagnetic mirror, J+ -> -J+);
/// 3, 4: the (1,2,3) / (-1,-2,-3) triples against kT in [0.05, 5]
///       (200 points) with the entanglement sign function as an extra
///       column;
/// 5, 6: the same triples against D in [0, 5] x kT in [0.05, 5] (60 x 60).
pub fn reproduce_figure(figure_id: u8) -> Result<SweepTable> {
    let kt_span = (0.05f64, 5.0f64);
    let mut rows = Vec::new();
    match figure_id {
        1 | 2 => {
            let sign = if figure_id == 1 { 1.0 } else { -1.0 };
            let kt = Temperature::new(1.0).expect("static");
            let (n1, n2) = (61usize, 61usize);
            for i in 0..n1 {
                let ratio_jp_kt = 6.0 * i as f64 / (n1 - 1) as f64;
                for j in 0..n2 {
                    let ratio_jm_jp = 3.0 * j as f64 / (n2 - 1) as f64;
                    let j_plus = sign * ratio_jp_kt * kt.kt();
                    let j_minus = ratio_jm_jp * j_plus.abs();
                    let params =
                        ModelParams::exchange(j_plus + j_minus, j_plus - j_minus, 0.0);
                    let (c_closed, c_numeric) = evaluate_point(&params, kt)?;
                    rows.push(SweepRow {
                        axis1: ratio_jp_kt,
                        axis2: ratio_jm_jp,
                        c_closed,
                        c_numeric,
                        aux: None,
                    });
                }
            }
        }
        3 | 4 => {
            let params = figure_triple(figure_id == 4);
            let count = 200usize;
            for i in 0..count {
                let kt_val = kt_span.0 + (kt_span.1 - kt_span.0) * i as f64 / (count - 1) as f64;
                let kt = Temperature::new(kt_val)?;
                let (c_closed, c_numeric) = evaluate_point(&params, kt)?;
                rows.push(SweepRow {
                    axis1: kt_val,
                    axis2: 0.0,
                    c_closed,
                    c_numeric,
                    aux: Some(entanglement_indicator(&params, kt)?),
                });
            }
        }
        5 | 6 => {
            let base = figure_triple(figure_id == 6);
            let (nd, nt) = (60usize, 60usize);
            for i in 0..nd {
                let dm = 5.0 * i as f64 / (nd - 1) as f64;
                for j in 0..nt {
                    let kt_val =
                        kt_span.0 + (kt_span.1 - kt_span.0) * j as f64 / (nt - 1) as f64;
                    let kt = Temperature::new(kt_val)?;
                    let params = base.with_dm(dm);
                    let (c_closed, c_numeric) = evaluate_point(&params, kt)?;
                    rows.push(SweepRow {
                        axis1: dm,
                        axis2: kt_val,
                        c_closed,
                        c_numeric,
                        aux: None,
                    });
                }
            }
        }
        other => {
            return Err(Error::Config {
                field: "figure_id".into(),
                reason: format!("figure id must be 1..=6, got {other}"),
            })
        }
    }
    Ok(SweepTable { rows })
}

const CSV_HEADER: &str = "axis1,axis2,c_closed,c_numeric,abs_diff";
const CSV_HEADER_AUX: &str = "axis1,axis2,c_closed,c_numeric,abs_diff,f_t";

/// Serializes a table to CSV with 17 significant digits per value (exact
/// round trip), LF line endings, and a newline after the last row.
pub fn emit_csv(table: &SweepTable, path: &Path) -> Result<()> {
    let io_err = |source: std::io::Error| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let has_aux = table.has_aux();
    let mut out = String::with_capacity(32 + table.rows.len() * 120);
    out.push_str(if has_aux { CSV_HEADER_AUX } else { CSV_HEADER });
    out.push('\n');
    for row in &table.rows {
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            row.axis1,
            row.axis2,
            row.c_closed,
            row.c_numeric,
            row.abs_diff()
        ));
        if has_aux {
            out.push_str(&format!(",{:.16e}", row.aux.unwrap_or(f64::NAN)));
        }
        out.push('\n');
    }
    std::fs::write(path, out).map_err(io_err)
}

/// Parses a CSV produced by [`emit_csv`]; values round-trip bit-exactly.
pub fn read_csv(path: &Path) -> Result<SweepTable> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let bad = |reason: String| Error::Config {
        field: format!("csv `{}`", path.display()),
        reason,
    };
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty file".into()))?;
    let has_aux = match header {
        CSV_HEADER => false,
        CSV_HEADER_AUX => true,
        other => return Err(bad(format!("unexpected header `{other}`"))),
    };
    let mut rows = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        let expect = if has_aux { 6 } else { 5 };
        if fields.len() != expect {
            return Err(bad(format!(
                "line {}: expected {expect} fields, got {}",
                lineno + 2,
                fields.len()
            )));
        }
        let parse = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .map_err(|e| bad(format!("line {}: `{s}`: {e}", lineno + 2)))
        };
        rows.push(SweepRow {
            axis1: parse(fields[0])?,
            axis2: parse(fields[1])?,
            c_closed: parse(fields[2])?,
            c_numeric: parse(fields[3])?,
            aux: if has_aux { Some(parse(fields[5])?) } else { None },
        });
    }
    Ok(SweepTable { rows })
}
