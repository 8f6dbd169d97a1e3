use serde::{Deserialize, Serialize};

use super::enumerate::{count_components_closed, teichmuller_count};
use super::group::{CountMode, GroupDescriptor};
use crate::error::Result;
use crate::exact::pow2;
use crate::surface::MarkedSurface;

pub const DASH: &str = "-";
pub const OFF_BY_ONE: &str = "off_by_one";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub group: String,
    pub count: String,
    pub teichmuller: String,
    /// Empty unless the printed entry disagrees with the case analysis.
    pub flag: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub number: u8,
    pub title: String,
    pub g: u32,
    pub s: usize,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Union,
    Even,
    Odd,
}

const ROWS: [(&str, &str); 8] = [
    ("Sp(2,R) = SL(2,R)", "sp2"),
    ("Sp(4,R)", "sp4"),
    ("Sp(2n,R), n >= 3", "sp6"),
    ("SU(n,n)", "su2"),
    ("SO*(2n), n even", "sostar4"),
    ("SO0(2,3)", "so0_2_3"),
    ("SO0(2,n), n >= 4", "so0_2_4"),
    ("E7(-25)", "e7"),
];

fn row(kind: Kind, label: &str, id: &str, g: u32, s: usize) -> Result<Option<TableRow>> {
    let group: GroupDescriptor = id.parse()?;
    let mode = match kind {
        Kind::Union => CountMode::MaxUnion,
        Kind::Even => CountMode::FixedAlpha { alpha: vec![0; s] },
        Kind::Odd => {
            let mut a = vec![0; s];
            if let Some(first) = a.first_mut() {
                *first = 1;
            }
            CountMode::FixedAlpha { alpha: a }
        }
    };
    if kind != Kind::Union && group == GroupDescriptor::E7Minus25 {
        return Ok(None);
    }
    let odd_impossible = kind == Kind::Odd && s == 0;
    let (count, flag) = if odd_impossible {
        (DASH.to_string(), String::new())
    } else {
        let r = count_components_closed(&group, g, s, &mode)?;
        let count = if r.empty_moduli { DASH.to_string() } else { r.total_closed_form.to_string() };
        let flag = if r.discrepancy.is_some() { OFF_BY_ONE.to_string() } else { String::new() };
        (count, flag)
    };
    let teich_value = match kind {
        Kind::Union => teichmuller_count(&GroupDescriptor::Sp2nR { n: 1 }, g, s)?,
        _ => pow2(2 * g as i64)?,
    };
    let teichmuller = match (&group, kind) {
        (GroupDescriptor::Sp2nR { .. }, Kind::Odd) => DASH.to_string(),
        (GroupDescriptor::Sp2nR { .. }, _) => teich_value.to_string(),
        (GroupDescriptor::SUnn { .. }, Kind::Odd) => DASH.to_string(),
        (GroupDescriptor::SUnn { .. }, _) => format!("{DASH} ({teich_value} if n = 1)"),
        (GroupDescriptor::SO02n { n: 3 }, _) => "1".to_string(),
        _ => DASH.to_string(),
    };
    Ok(Some(TableRow { group: label.to_string(), count, teichmuller, flag }))
}

/// The three summary tables instantiated at `(g, s)`.
pub fn emit_tables(g: u32, s: usize) -> Result<Vec<Table>> {
    MarkedSurface::with_order_two(g, s).require_hyperbolic()?;
    let specs = [
        (1, Kind::Union, "maximal, union over parabolic structures"),
        (2, Kind::Even, "maximal, fixed even parabolic structure"),
        (3, Kind::Odd, "maximal, fixed odd parabolic structure"),
    ];
    specs
        .iter()
        .map(|&(number, kind, title)| {
            let mut rows = Vec::new();
            for (label, id) in ROWS {
                if let Some(r) = row(kind, label, id, g, s)? {
                    rows.push(r);
                }
            }
            Ok(Table { number, title: title.to_string(), g, s, rows })
        })
        .collect()
}

pub fn tables_markdown(tables: &[Table]) -> String {
    let mut out = String::new();
    for (i, t) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("### Table {}. Minimum components, {} (g = {}, s = {})\n\n", t.number, t.title, t.g, t.s));
        out.push_str("| Lie group G | components | Teichmüller components | flag |\n");
        out.push_str("|---|---|---|---|\n");
        for r in &t.rows {
            out.push_str(&format!("| {} | {} | {} | {} |\n", r.group, r.count, r.teichmuller, r.flag));
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn tables_csv(tables: &[Table]) -> String {
    let mut out = String::from("table,g,s,group,components,teichmuller,flag\n");
    for t in tables {
        for r in &t.rows {
            let fields = [
                t.number.to_string(),
                t.g.to_string(),
                t.s.to_string(),
                csv_field(&r.group),
                csv_field(&r.count),
                csv_field(&r.teichmuller),
                csv_field(&r.flag),
            ];
            out.push_str(&fields.join(","));
            out.push('\n');
        }
    }
    out
}
