use std::collections::BTreeMap;
use std::io::Read;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use parhiggs::components::{
    count_components_capped, count_components_closed, emit_tables, s1_reduction_report, tables_csv, tables_markdown,
    ComponentCountReport, CountMode, GroupDescriptor,
};
use parhiggs::dimension::{
    dim_complex_group, dim_parabolic_gl, dim_strongly_parabolic_gl, full_flags, lie_catalog, sl_k_teichmuller_formula,
    teichmuller_dimension, DimReport,
};
use parhiggs::exact::Bits;
use parhiggs::orbifold::{
    equivariance_check, kawasaki_euler, orb_to_par_local, par_to_orb_local, parity, pic_v_structure, square_root_types,
    vline_degree, vline_to_parabolic, z2_character_count, z2_character_enumerate, Form, LaurentMatrix, LaurentPoly,
    VLineBundle,
};
use parhiggs::parbun::{pardeg, parslope, ParabolicBundle, ParabolicLineBundle};
use parhiggs::stability::{
    general_mw_interval, hitchin_model, hitchin_sp_triple, is_maximal, milnor_wood_bound, stability_verdict, toledo,
    DecomposableHiggsModel, ModelSpec, SpTripleModel, SpTripleSpec,
};
use parhiggs::vcoh::{v_cohomology_ranks, VCohMode};
use parhiggs::{Error, MarkedSurface, Rational};

use crate::args::{Cli, Command, ComponentsArgs, DimFormula, DimsArgs, Format, OrbifoldOp, SurfaceArgs, VcohModeArg};

/// Failure of a subcommand, already carrying its machine-readable code.
#[derive(Debug)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub extra: BTreeMap<String, Value>,
}

impl CliError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        CliError { code: code.into(), message: message.into(), extra: BTreeMap::new() }
    }

    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        m.insert("error".into(), Value::String(self.code.clone()));
        m.insert("message".into(), Value::String(self.message.clone()));
        for (k, v) in &self.extra {
            m.insert(k.clone(), v.clone());
        }
        Value::Object(m)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let mut c = CliError::new(e.code(), e.to_string());
        match e {
            Error::NotHyperbolic { g, s } => {
                c.extra.insert("g".into(), json!(g));
                c.extra.insert("s".into(), json!(s));
            }
            Error::CapExceeded { needed, cap } => {
                c.extra.insert("needed".into(), json!(needed));
                c.extra.insert("cap".into(), json!(cap));
            }
            _ => {}
        }
        c
    }
}

type R<T> = std::result::Result<T, CliError>;

fn input_error(msg: impl Into<String>) -> CliError {
    CliError::new("invalid_input", msg)
}

/// Inline JSON, `-` for stdin, or a file path.
fn read_source(arg: &str) -> R<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') || t.starts_with('"') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| input_error(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|e| input_error(format!("reading {arg:?}: {e}")))
}

fn read_json<T: DeserializeOwned>(arg: &str) -> R<T> {
    let text = read_source(arg)?;
    serde_json::from_str(&text).map_err(|e| input_error(format!("bad JSON: {e}")))
}

fn surface(a: &SurfaceArgs) -> R<MarkedSurface> {
    if let Some(src) = &a.surface {
        if a.g.is_some() || a.s.is_some() || a.orders.is_some() {
            return Err(CliError::new("usage", "--surface cannot be combined with --g, --s or --orders"));
        }
        return read_json(src);
    }
    let g = a.g.ok_or_else(|| CliError::new("usage", "--g is required unless --surface is given"))?;
    match &a.orders {
        Some(orders) => {
            if a.s.is_some_and(|s| s != orders.len()) {
                return Err(CliError::new("usage", "--s disagrees with the number of --orders"));
            }
            if orders.contains(&0) {
                return Err(input_error("isotropy orders must be positive"));
            }
            Ok(MarkedSurface::with_orders(g, orders))
        }
        None => Ok(MarkedSurface::with_order_two(g, a.s.unwrap_or(0))),
    }
}

fn pretty<T: Serialize>(v: &T) -> R<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::new("internal", e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn json_only(format: Format, command: &str) -> R<()> {
    if format != Format::Json {
        return Err(CliError::new("unsupported_format", format!("{command} only writes json")));
    }
    Ok(())
}

pub fn run(cli: Cli) -> R<String> {
    let format = cli.format;
    let fmt = format.unwrap_or(Format::Json);
    match cli.command {
        Command::Pardeg { surface: sa, bundle } => {
            json_only(fmt, "pardeg")?;
            let surf = surface(&sa)?;
            let raw: Value = read_json(&bundle)?;
            let b: ParabolicBundle = if raw.get("rank").is_some() {
                serde_json::from_value(raw).map_err(|e| input_error(format!("bad bundle: {e}")))?
            } else {
                let l: ParabolicLineBundle =
                    serde_json::from_value(raw).map_err(|e| input_error(format!("bad line bundle: {e}")))?;
                ParabolicBundle::from_line(&l, &surf)?
            };
            pretty(&json!({
                "rank": b.rank,
                "degree": b.degree,
                "pardeg": pardeg(&b, &surf)?,
                "parslope": parslope(&b, &surf)?,
            }))
        }
        Command::Stability { surface: sa, model } => {
            json_only(fmt, "stability")?;
            let surf = surface(&sa)?;
            let spec: ModelSpec = read_json(&model)?;
            let m = DecomposableHiggsModel::from_spec(surf, &spec)?;
            let v = stability_verdict(&m);
            pretty(&json!({
                "verdict": v.verdict,
                "slope": v.slope,
                "witness": v.witness,
                "witness_slope": v.witness_slope,
                "warnings": v.warnings,
                "total_pardeg": m.total_pardeg(),
                "arrow_components": m.arrow_components(),
            }))
        }
        Command::Toledo { surface: sa, triple } => {
            json_only(fmt, "toledo")?;
            let surf = surface(&sa)?;
            surf.require_hyperbolic()?;
            let spec: SpTripleSpec = read_json(&triple)?;
            let t = SpTripleModel::from_spec(surf.clone(), &spec)?;
            let bound = milnor_wood_bound(t.n(), surf.genus, surf.s());
            let tau = toledo(&t);
            let v = stability_verdict(&t.to_higgs_model()?);
            pretty(&json!({
                "toledo": tau,
                "milnor_wood_bound": bound,
                "within_bound": tau.abs() <= bound,
                "maximal": is_maximal(&t),
                "verdict": v.verdict,
                "dual_toledo": toledo(&t.dual_triple()),
                "monomial": t.is_monomial(),
            }))
        }
        Command::Mw { n, g, s, rk_plus, rk_minus } => {
            json_only(fmt, "mw")?;
            MarkedSurface::with_order_two(g, s).require_hyperbolic()?;
            match (n, rk_plus, rk_minus) {
                (_, Some(p), Some(m)) => {
                    let (lo, hi) = general_mw_interval(p, m, g, s);
                    pretty(&json!({ "g": g, "s": s, "rk_plus": p, "rk_minus": m, "lower": lo, "upper": hi }))
                }
                (Some(n), _, _) => pretty(&json!({ "n": n, "g": g, "s": s, "bound": milnor_wood_bound(n, g, s) })),
                _ => Err(CliError::new("usage", "give --n, or --rk-plus and --rk-minus")),
            }
        }
        Command::Hitchin { k, g, s } => {
            json_only(fmt, "hitchin")?;
            let m = hitchin_model(k, g, s)?;
            let v = stability_verdict(&m);
            let sp = if k % 2 == 0 {
                let t = hitchin_sp_triple(k, g, s)?;
                Some(json!({
                    "toledo": toledo(&t),
                    "milnor_wood_bound": milnor_wood_bound(t.n(), g, s),
                    "maximal": is_maximal(&t),
                }))
            } else {
                None
            };
            pretty(&json!({
                "k": k,
                "model": m.to_spec(),
                "pardegs": m.pardegs(),
                "total_pardeg": m.total_pardeg(),
                "verdict": v.verdict,
                "sp_triple": sp,
            }))
        }
        Command::Components(a) => components(a, fmt),
        Command::Tables { g, s } => {
            let t = emit_tables(g, s)?;
            match format.unwrap_or(Format::Markdown) {
                Format::Markdown => Ok(tables_markdown(&t)),
                Format::Csv => Ok(tables_csv(&t)),
                Format::Json => pretty(&t),
            }
        }
        Command::Dims(a) => {
            json_only(fmt, "dims")?;
            pretty(&dims(&a)?)
        }
        Command::Vcoh { g, s, mode, order } => {
            json_only(fmt, "vcoh")?;
            let mode = match (mode, order) {
                (_, Some(p)) => VCohMode::for_order(p)?,
                (Some(VcohModeArg::Punctured), _) => VCohMode::Punctured,
                (Some(VcohModeArg::Odd), _) => VCohMode::OddOrder,
                _ => VCohMode::Order2,
            };
            pretty(&v_cohomology_ranks(g, s, mode)?)
        }
        Command::Orbifold { op } => {
            json_only(fmt, "orbifold")?;
            orbifold(op)
        }
        Command::Characters { surface: sa, list } => {
            json_only(fmt, "characters")?;
            let surf = surface(&sa)?;
            let count = z2_character_count(&surf)?;
            if list {
                pretty(&json!({ "count": count, "characters": z2_character_enumerate(&surf)? }))
            } else {
                pretty(&json!({ "count": count }))
            }
        }
        Command::Roots { surface: sa, degree, isotropy } => {
            json_only(fmt, "roots")?;
            let surf = surface(&sa)?;
            let iso: BTreeMap<String, u32> = match isotropy {
                Some(src) => read_json(&src)?,
                None => BTreeMap::new(),
            };
            let l = VLineBundle::new(degree.unwrap_or_else(|| surf.deg_kd()), iso);
            pretty(&square_root_types(&l, &surf)?)
        }
        Command::S1Report { group, g } => {
            json_only(fmt, "s1-report")?;
            let grp: GroupDescriptor = group.parse()?;
            pretty(&s1_reduction_report(&grp, g)?)
        }
    }
}

#[derive(Serialize)]
struct ComponentsOutput {
    #[serde(flatten)]
    report: ComponentCountReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    tables_markdown: Option<String>,
}

fn report_markdown(r: &ComponentCountReport) -> String {
    let opt = |x: Option<u128>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
    let mut out = format!("### {} at g = {}, s = {} ({})\n\n", r.group, r.g, r.s, r.mode);
    out.push_str("| case | formula | enumerated | closed form |\n|---|---|---|---|\n");
    for c in &r.cases {
        out.push_str(&format!("| {} | {} | {} | {} |\n", c.label, c.formula, opt(c.enumerated), c.closed_form));
    }
    out.push_str(&format!(
        "| total | {} | {} | {} |\n\nminimum components: {}; match: {}\n",
        r.total_formula,
        opt(r.total_enumerated),
        r.total_closed_form,
        r.total_closed_form,
        r.matches
    ));
    if let Some(d) = &r.discrepancy {
        out.push_str(&format!("discrepancy: {d}\n"));
    }
    out
}

fn components(a: ComponentsArgs, fmt: Format) -> R<String> {
    if a.cap == 0 {
        return Err(CliError::new("invalid_input", "cap must be positive"));
    }
    let group: GroupDescriptor = a.group.parse()?;
    let mode = CountMode::parse(&a.mode, a.alpha.as_deref())?;
    let report = if a.closed_form_only {
        count_components_closed(&group, a.g, a.s, &mode)?
    } else {
        count_components_capped(&group, a.g, a.s, &mode, a.cap)?
    };
    let tables = if a.emit_tables { Some(tables_markdown(&emit_tables(a.g, a.s)?)) } else { None };
    match fmt {
        Format::Json => pretty(&ComponentsOutput { report, tables_markdown: tables }),
        Format::Markdown => {
            let mut out = report_markdown(&report);
            if let Some(t) = tables {
                out.push('\n');
                out.push_str(&t);
            }
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::from("case,formula,enumerated,closed_form\n");
            for c in &report.cases {
                let e = c.enumerated.map(|v| v.to_string()).unwrap_or_default();
                out.push_str(&format!("{},\"{}\",{},{}\n", c.label, c.formula, e, c.closed_form));
            }
            Ok(out)
        }
    }
}

fn parse_mults(s: &str) -> R<Vec<Vec<u32>>> {
    s.split(';')
        .map(|pt| {
            pt.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| input_error(format!("bad multiplicity {x:?}"))))
                .collect()
        })
        .collect()
}

fn integer_report(formula: &str, complex: i64) -> DimReport {
    DimReport {
        formula: formula.into(),
        complex_dimension: Some(complex),
        real_dimension: Some(2 * complex),
        summands: Vec::new(),
        alternative_real_dimension: None,
        notes: Vec::new(),
    }
}

fn dims(a: &DimsArgs) -> R<DimReport> {
    let need_n = || a.n.ok_or_else(|| CliError::new("usage", "--n is required for this formula"));
    let need_group = || {
        a.group.as_deref().ok_or_else(|| CliError::new("usage", "--group is required for this formula")).and_then(|g| Ok(lie_catalog(g)?))
    };
    Ok(match a.formula {
        DimFormula::Paradim => integer_report("(2g-2+s)n^2+1", dim_parabolic_gl(need_n()?, a.g, a.s)?),
        DimFormula::Sparadim => {
            let n = need_n()?;
            let mults = match &a.mults {
                Some(m) => parse_mults(m)?,
                None => full_flags(n, a.s),
            };
            integer_report("2(g-1)n^2+2+2Σf_x", dim_strongly_parabolic_gl(n, a.g, a.s, &mults)?)
        }
        DimFormula::Complex => dim_complex_group(&need_group()?, a.g, a.s)?,
        DimFormula::Teich => teichmuller_dimension(&need_group()?, a.g, a.s, a.rk_em)?,
        DimFormula::Slk => {
            let real = sl_k_teichmuller_formula(need_n()?, a.g, a.s)?;
            DimReport {
                formula: "2(g-1)(k^2-1)+s(k^2-k)".into(),
                complex_dimension: None,
                real_dimension: Some(real),
                summands: Vec::new(),
                alternative_real_dimension: None,
                notes: Vec::new(),
            }
        }
    })
}

#[derive(Deserialize)]
struct LocalInput {
    m: u32,
    weights: Vec<Rational>,
    entries: Vec<Vec<LaurentPoly>>,
    window: Option<(i64, i64)>,
    form: Option<Form>,
}

fn orbifold(op: OrbifoldOp) -> R<String> {
    match op {
        OrbifoldOp::Degree { surface: sa, bundle } => {
            let surf = surface(&sa)?;
            let l: VLineBundle = read_json(&bundle)?;
            let par = vline_to_parabolic(&l, &surf)?;
            pretty(&json!({
                "degree": vline_degree(&l, &surf)?,
                "kawasaki_euler": kawasaki_euler(&l, &surf)?,
                "parabolic": par,
                "parabolic_pardeg": par.pardeg(&surf)?,
            }))
        }
        OrbifoldOp::Pic { surface: sa } => pretty(&pic_v_structure(&surface(&sa)?)),
        OrbifoldOp::Local { input } => {
            let li: LocalInput = read_json(&input)?;
            let higgs = LaurentMatrix {
                entries: li.entries,
                window: li.window.unwrap_or_else(|| LaurentMatrix::default_window(li.m)),
                form: li.form.unwrap_or(Form::Plain),
            };
            let (chart, orb) = par_to_orb_local(li.m, &li.weights, &higgs)?;
            let (back_w, back) = orb_to_par_local(&chart, &orb)?;
            let round_trip = back_w == li.weights && back.with_form(higgs.form).entries == higgs.entries;
            pretty(&json!({
                "chart": chart,
                "orbifold": orb,
                "equivariant": equivariance_check(&orb, &chart),
                "round_trip": round_trip,
            }))
        }
        OrbifoldOp::Parity { alpha } => {
            let weights: BTreeMap<String, Rational> = if alpha.trim_start().starts_with('{') {
                read_json(&alpha)?
            } else {
                let bits: Bits = parhiggs::components::parse_bits(&alpha)?;
                bits.iter()
                    .enumerate()
                    .map(|(i, &b)| (format!("x{}", i + 1), if b == 1 { Rational::half() } else { Rational::zero() }))
                    .collect()
            };
            let half = weights.values().filter(|w| **w == Rational::half()).count();
            pretty(&json!({ "parity": parity(&weights)?, "half_weight_points": half }))
        }
    }
}
