//! Result documents and their text and JSON renderings.

use std::fmt::Write as _;

use latpoly::exactnum::{format_rational, round_to_decimal, BigInt, BigRational, RootInterval};
use latpoly::optimize::{BoundsReport, ShiftInfo};
use serde::Serialize;

/// An exact root bracket and its correctly rounded decimal value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bracket {
    pub lower: String,
    pub upper: String,
    pub decimal: String,
}

impl Bracket {
    pub fn new(r: &RootInterval, digits: u32) -> Self {
        Bracket { lower: format_rational(&r.lower), upper: format_rational(&r.upper), decimal: r.decimal(digits) }
    }
}

/// An exact rational with a decimal rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Number {
    pub exact: String,
    pub decimal: String,
}

impl Number {
    pub fn new(q: &BigRational, digits: u32) -> Self {
        Number { exact: format_rational(q), decimal: round_to_decimal(q, digits) }
    }

    pub fn integer(n: &BigInt, digits: u32) -> Self {
        Number::new(&BigRational::from_integer(n.clone()), digits)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsRow {
    pub k: u32,
    pub count: String,
    pub power_sum: String,
    pub lower: Bracket,
    pub upper: Bracket,
    pub floor_upper: String,
    pub ceil_lower: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_lower: Option<String>,
    pub converged: bool,
}

impl BoundsRow {
    pub fn new(r: &BoundsReport, digits: u32) -> Self {
        BoundsRow {
            k: r.k,
            count: r.count.to_string(),
            power_sum: r.power_sum.to_string(),
            lower: Bracket::new(&r.lower, digits),
            upper: Bracket::new(&r.upper, digits),
            floor_upper: r.floor_upper.to_string(),
            ceil_lower: r.ceil_lower.to_string(),
            ratio_lower: r.ratio_lower.as_ref().map(|v| v.to_string()),
            converged: r.converged,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftDoc {
    pub applied: bool,
    /// `L = -r C M^D`; the working objective is `f - L` when applied.
    pub l: String,
    pub u: String,
    pub m: String,
    pub c: String,
    pub r: usize,
    pub d: u32,
}

impl ShiftDoc {
    pub fn new(s: &ShiftInfo) -> Self {
        ShiftDoc {
            applied: s.shifted,
            l: s.l.to_string(),
            u: s.u.to_string(),
            m: s.m.to_string(),
            c: s.c.to_string(),
            r: s.r,
            d: s.d,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRef {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FptasDoc {
    pub epsilon: String,
    pub k_used: u32,
    /// `L_k ≥ (1 - ε) f*` in the working scale.
    pub guarantee: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub guarantee_at_known_optimum: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub guarantee_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointDoc {
    pub coordinates: Vec<String>,
    /// Objective at the point, original objective and sense.
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub working_value: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ResultDocument {
    pub command: String,
    pub instance: Option<InstanceRef>,
    /// Sense of the stated problem.
    pub sense: String,
    /// What was maximized internally, for example `f` or `-f - L`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solved_as: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<ShiftDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<BoundsRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fptas: Option<FptasDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power_sum: Option<String>,
    /// Optimum of the stated problem (or, when unconverged, absent).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimum: Option<String>,
    /// Bounds on the stated optimum when the exact loop did not converge.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimum_bounds: Option<(String, String)>,
    /// Optimum divided by the instance scale.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimum_unscaled: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<PointDoc>,
    pub status: String,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &str| {
            let _ = writeln!(out, "{k:<14}{v}");
        };
        line("command:", &self.command);
        if let Some(i) = &self.instance {
            let name = if i.name.is_empty() { "(unnamed)" } else { &i.name };
            line("instance:", name);
            line("sha256:", &i.sha256);
        }
        line("sense:", &self.sense);
        if let Some(s) = &self.solved_as {
            line("solved as:", &format!("max {s}"));
        }
        if let Some(s) = &self.shift {
            if s.applied {
                line("shift:", &format!("L = {} (r = {}, C = {}, M = {}, D = {})", s.l, s.r, s.c, s.m, s.d));
            }
        }
        if let Some(c) = &self.count {
            line("count:", c);
        }
        if let Some(f) = &self.fptas {
            line("epsilon:", &f.epsilon);
            line("k used:", &f.k_used.to_string());
            line("guarantee:", &f.guarantee);
            if let Some(g) = &f.guarantee_at_known_optimum {
                let holds = match f.guarantee_holds {
                    Some(true) => "holds",
                    _ => "FAILS",
                };
                line("(1-eps)*known:", &format!("{} ({holds})", g.decimal));
            }
        }
        if let Some(p) = &self.power_sum {
            line("power sum:", p);
        }
        if let Some(v) = &self.optimum {
            line("optimum:", v);
        }
        if let Some((lo, hi)) = &self.optimum_bounds {
            line("bounds:", &format!("[{lo}, {hi}]"));
        }
        if let Some(v) = &self.optimum_unscaled {
            line("unscaled:", &format!("{} ({})", v.decimal, v.exact));
        }
        if let Some(p) = &self.point {
            line("point:", &format!("({})", p.coordinates.join(", ")));
            line("value:", &p.value);
            if let Some(w) = &p.working_value {
                line("working value:", w);
            }
        }
        line("status:", &self.status);
        if !self.rows.is_empty() {
            out.push('\n');
            out.push_str(&self.table());
        }
        out
    }

    fn table(&self) -> String {
        let header = ["k", "L_k", "U_k", "ceil(L_k)", "floor(U_k)", "ratio", "converged", "S_k"];
        let body: Vec<[String; 8]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.k.to_string(),
                    r.lower.decimal.clone(),
                    r.upper.decimal.clone(),
                    r.ceil_lower.clone(),
                    r.floor_upper.clone(),
                    r.ratio_lower.clone().unwrap_or_else(|| "-".into()),
                    if r.converged { "yes" } else { "no" }.into(),
                    r.power_sum.clone(),
                ]
            })
            .collect();
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &body {
            for (w, cell) in widths.iter_mut().zip(row.iter()).take(7) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let render = |cells: Vec<&str>, out: &mut String| {
            let mut parts = Vec::new();
            for (i, c) in cells.iter().enumerate() {
                if i + 1 == cells.len() {
                    parts.push(c.to_string());
                } else {
                    parts.push(format!("{c:>w$}", w = widths[i]));
                }
            }
            let _ = writeln!(out, "{}", parts.join("  "));
        };
        render(header.to_vec(), &mut out);
        for row in &body {
            render(row.iter().map(String::as_str).collect(), &mut out);
        }
        out
    }
}
