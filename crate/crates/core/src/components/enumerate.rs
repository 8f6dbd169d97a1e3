use serde::{Deserialize, Serialize};

use super::group::{bits_string, CountMode, GroupDescriptor};
use crate::error::{Error, Result};
use crate::exact::{all_bit_vectors, pow2, Bits};
use crate::orbifold::{square_root_types, z2_character_enumerate, VLineBundle};
use crate::surface::MarkedSurface;
use crate::vcoh::{v_cohomology_ranks, VCohMode};

/// Default bound on the number of tuples materialised by one count.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// One topological invariant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InvariantTuple {
    /// Stiefel–Whitney type classes `w1 ∈ H^1_V`, `w2 ∈ H^2_V`.
    Stiefel { w1: Bits, w2: Bits },
    /// A parabolic structure on a line bundle together with its degree.
    Degree { structure: Bits, degree: i64 },
    /// A square root, numbered in enumeration order; `rho` is its isotropy pattern.
    SquareRoot { index: u128, rho: Bits },
    /// A parabolic structure alone.
    Structure { alpha: Bits },
}

/// How a case's tuples are produced.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Source {
    /// `w1` from the `Z_2`-characters (nonzero only if asked), `w2` from `w2`.
    Stiefel { w1_nonzero: bool, w2: W2 },
    /// Degrees `0..count` for each listed parabolic structure.
    Degrees { structures: Vec<Bits>, count: i64 },
    /// Square roots of `K(D)`: root types times 2-torsion of the Jacobian.
    RootsOfKd,
    /// Square roots of the trivial bundle whose monodromy around the points is `sigma`.
    RootsWithSigma(Bits),
    /// Square roots of the trivial bundle, all monodromies.
    AllRootsOfTrivial,
    Structures(Vec<Bits>),
    /// `w1` in the first cohomology of the punctured surface.
    PuncturedW1,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum W2 {
    All,
    Fixed(Bits),
    Absent,
}

#[derive(Debug, Clone)]
struct CasePlan {
    label: &'static str,
    formula: String,
    closed_form: u128,
    source: Source,
}

#[derive(Debug, Clone)]
struct Plan {
    cases: Vec<CasePlan>,
    total_formula: String,
    total_closed_form: u128,
    empty_moduli: bool,
    notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseCount {
    pub label: String,
    pub formula: String,
    /// `None` when enumeration was skipped.
    pub enumerated: Option<u128>,
    pub closed_form: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCountReport {
    pub group: String,
    pub group_id: String,
    pub g: u32,
    pub s: usize,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    /// Counts are lower bounds on the number of connected components.
    pub interpretation: String,
    pub cases: Vec<CaseCount>,
    pub total_enumerated: Option<u128>,
    pub total_closed_form: u128,
    pub total_formula: String,
    #[serde(rename = "match")]
    pub matches: bool,
    pub empty_moduli: bool,
    pub discrepancy: Option<String>,
    pub notes: Vec<String>,
}

/// Frequently used powers: `P = 2^{2g+s-1}`, `S = 2^s`, `J = 2^{2g}` and `c = 2g-2+s`.
#[derive(Debug, Clone, Copy)]
struct K {
    g: i64,
    s: i64,
    p: u128,
    sp: u128,
    j: u128,
    c: i64,
}

impl K {
    fn new(g: u32, s: usize) -> Result<K> {
        let (g, s) = (g as i64, s as i64);
        Ok(K { g, s, p: pow2(2 * g + s - 1)?, sp: pow2(s)?, j: pow2(2 * g)?, c: 2 * g - 2 + s })
    }
}

fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or_else(|| Error::Overflow("component count".into()))
}

fn add(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or_else(|| Error::Overflow("component count".into()))
}

fn nonneg(x: i64) -> u128 {
    u128::try_from(x).expect("hyperbolicity keeps this non-negative")
}

fn surface(g: u32, s: usize) -> Result<MarkedSurface> {
    let surf = MarkedSurface::with_order_two(g, s);
    surf.require_hyperbolic()?;
    Ok(surf)
}

fn case(label: &'static str, formula: &str, closed_form: u128, source: Source) -> CasePlan {
    CasePlan { label, formula: formula.into(), closed_form, source }
}

/// The closed-surface counts for `s = 1` comparison, in the non-parabolic setting.
pub fn closed_surface_count(group: &GroupDescriptor, g: u32) -> Result<u128> {
    group.validate()?;
    let j = pow2(2 * g as i64)?;
    let g = g as u128;
    Ok(match group {
        GroupDescriptor::Sp2nR { n: 1 } | GroupDescriptor::SUnn { .. } | GroupDescriptor::E7Minus25 => j,
        GroupDescriptor::Sp2nR { n: 2 } => add(mul(3, j)?, 4 * g - 4)?,
        GroupDescriptor::Sp2nR { .. } => mul(3, j)?,
        GroupDescriptor::SOStar2n { .. } => 1,
        GroupDescriptor::SO02n { n: 3 } => add(mul(2, j)?, 8 * g - 4)?,
        GroupDescriptor::SO02n { .. } => mul(2, j)?,
        GroupDescriptor::Split { .. } => {
            return Err(Error::IncompatibleMode(format!("no closed-surface count for {group}")));
        }
    })
}

fn max_union_plan(group: &GroupDescriptor, k: K) -> Result<Plan> {
    let K { g, s, p, sp, c, .. } = k;
    let mut notes = Vec::new();
    let all_structures = all_bit_vectors(s as usize);
    let (cases, total_formula, total) = match group {
        GroupDescriptor::Sp2nR { n: 1 } | GroupDescriptor::SUnn { n: 1 } => (
            vec![case("square_roots", "2^{2g+s-1}", p, Source::RootsOfKd)],
            "2^{2g+s-1}",
            p,
        ),
        GroupDescriptor::Sp2nR { n: 2 } => (
            vec![
                case(
                    "w1_nonzero_w2",
                    "2^s(2^{2g+s-1}-1)",
                    mul(sp, p - 1)?,
                    Source::Stiefel { w1_nonzero: true, w2: W2::All },
                ),
                case(
                    "pardeg_below_max",
                    "2^s(2g-2+s)",
                    mul(sp, nonneg(c))?,
                    Source::Degrees { structures: all_structures, count: c },
                ),
                case("square_roots", "2^{2g+s-1}", p, Source::RootsOfKd),
            ],
            "(2^s+1)2^{2g+s-1}+2^s(2g-3+s)",
            add(mul(sp + 1, p)?, mul(sp, nonneg(2 * g - 3 + s))?)?,
        ),
        GroupDescriptor::Sp2nR { .. } => (
            vec![
                case("w1_w2", "2^s 2^{2g+s-1}", mul(sp, p)?, Source::Stiefel { w1_nonzero: false, w2: W2::All }),
                case("square_roots", "2^{2g+s-1}", p, Source::RootsOfKd),
            ],
            "(2^s+1)2^{2g+s-1}",
            mul(sp + 1, p)?,
        ),
        GroupDescriptor::SUnn { .. } => {
            notes.push("invariant: square root of the trivial line V-bundle giving det of the twisted W".into());
            (vec![case("square_roots", "2^{2g+s-1}", p, Source::AllRootsOfTrivial)], "2^{2g+s-1}", p)
        }
        GroupDescriptor::SOStar2n { .. } => (
            vec![case("parabolic_structures", "2^s", sp, Source::Structures(all_structures))],
            "2^s",
            sp,
        ),
        GroupDescriptor::SO02n { n: 3 } => {
            let d = 4 * g - 3 + 2 * s;
            (
                vec![
                    case(
                        "w1_nonzero_w2",
                        "2^s(2^{2g+s-1}-1)",
                        mul(sp, p - 1)?,
                        Source::Stiefel { w1_nonzero: true, w2: W2::All },
                    ),
                    case(
                        "pardeg_m",
                        "2^s(4g-3+2s)",
                        mul(sp, nonneg(d))?,
                        Source::Degrees { structures: all_structures, count: d },
                    ),
                ],
                "2^s(2^{2g+s-1}-1)+2^s(4g-3+2s)",
                add(mul(sp, p - 1)?, mul(sp, nonneg(d))?)?,
            )
        }
        GroupDescriptor::SO02n { .. } => (
            vec![case("w1_w2", "2^s 2^{2g+s-1}", mul(sp, p)?, Source::Stiefel { w1_nonzero: false, w2: W2::All })],
            "2^{2g+2s-1}",
            pow2(2 * g + 2 * s - 1)?,
        ),
        GroupDescriptor::E7Minus25 => {
            notes.push("only first V-cohomology invariants are counted; second cohomology may add more".into());
            (
                vec![case("w1", "2^{2g+s-1}", p, Source::Stiefel { w1_nonzero: false, w2: W2::Absent })],
                "2^{2g+s-1}",
                p,
            )
        }
        GroupDescriptor::Split { .. } => {
            return Err(Error::IncompatibleMode(format!("{group}: only the Teichmüller count is available")));
        }
    };
    Ok(Plan { cases, total_formula: total_formula.into(), total_closed_form: total, empty_moduli: false, notes })
}

fn fixed_alpha_plan(group: &GroupDescriptor, k: K, alpha: &Bits) -> Result<Plan> {
    let K { g, s, p, j, c, .. } = k;
    if alpha.len() != s as usize {
        return Err(Error::DimensionMismatch { expected: s as usize, found: alpha.len() });
    }
    if alpha.iter().any(|&b| b > 1) {
        return Err(Error::InvalidWeight("alpha entries must be 0 or 1 (weight 0 or 1/2)".into()));
    }
    let even = alpha.iter().filter(|&&b| b == 1).count() % 2 == 0;
    let roots = |label| case(label, if even { "2^{2g}" } else { "0" }, if even { j } else { 0 }, Source::RootsWithSigma(alpha.clone()));
    let mut notes = Vec::new();
    let (cases, total_formula, total) = match group {
        GroupDescriptor::Sp2nR { n: 1 } | GroupDescriptor::SUnn { .. } => {
            (vec![roots("square_roots")], if even { "2^{2g}" } else { "-" }, if even { j } else { 0 })
        }
        GroupDescriptor::Sp2nR { n: 2 } => {
            let mut cases = vec![
                case(
                    "w1_nonzero",
                    "2^{2g+s-1}-1",
                    p - 1,
                    Source::Stiefel { w1_nonzero: true, w2: W2::Fixed(alpha.clone()) },
                ),
                case("pardeg_below_max", "2g-2+s", nonneg(c), Source::Degrees { structures: vec![alpha.clone()], count: c }),
            ];
            cases.push(roots("square_roots"));
            let base = add(p, nonneg(2 * g - 3 + s))?;
            if even {
                (cases, "2^{2g+s-1}+(2g-3+s)+2^{2g}", add(base, j)?)
            } else {
                (cases, "2^{2g+s-1}+(2g-3+s)", base)
            }
        }
        GroupDescriptor::Sp2nR { .. } => {
            let cases = vec![
                case("w1", "2^{2g+s-1}", p, Source::Stiefel { w1_nonzero: false, w2: W2::Fixed(alpha.clone()) }),
                roots("square_roots"),
            ];
            if even {
                (cases, "2^{2g+s-1}+2^{2g}", add(p, j)?)
            } else {
                (cases, "2^{2g+s-1}", p)
            }
        }
        GroupDescriptor::SOStar2n { .. } => {
            (vec![case("parabolic_structure", "1", 1, Source::Structures(vec![alpha.clone()]))], "1", 1)
        }
        GroupDescriptor::SO02n { n: 3 } => {
            let d = 4 * g - 3 + 2 * s;
            notes.push("case sum is one less than the printed fixed-alpha formula".into());
            (
                vec![
                    case(
                        "w1_nonzero",
                        "2^{2g+s-1}-1",
                        p - 1,
                        Source::Stiefel { w1_nonzero: true, w2: W2::Fixed(alpha.clone()) },
                    ),
                    case("pardeg_m", "4g-3+2s", nonneg(d), Source::Degrees { structures: vec![alpha.clone()], count: d }),
                ],
                "2^{2g+s-1}+(4g-3+2s)",
                add(p, nonneg(d))?,
            )
        }
        GroupDescriptor::SO02n { .. } => (
            vec![case("w1", "2^{2g+s-1}", p, Source::Stiefel { w1_nonzero: false, w2: W2::Fixed(alpha.clone()) })],
            "2^{2g+s-1}",
            p,
        ),
        GroupDescriptor::E7Minus25 | GroupDescriptor::Split { .. } => {
            return Err(Error::IncompatibleMode(format!("{group}: no fixed-alpha count")));
        }
    };
    let empty_moduli = total == 0;
    if empty_moduli {
        notes.push("odd parabolic structure: no maximal objects, the moduli space is empty".into());
    }
    Ok(Plan { cases, total_formula: total_formula.into(), total_closed_form: total, empty_moduli, notes })
}

fn punctured_plan(group: &GroupDescriptor, k: K) -> Result<Plan> {
    if !matches!(group, GroupDescriptor::Sp2nR { .. }) {
        return Err(Error::IncompatibleMode(format!("{group}: punctured count is defined for Sp(2n,R)")));
    }
    if k.s == 0 {
        return Err(Error::InvalidInput("punctured mode needs at least one puncture".into()));
    }
    Ok(Plan {
        cases: vec![case("w1", "2^{2g+s-1}", k.p, Source::PuncturedW1)],
        total_formula: "2^{2g+s-1}".into(),
        total_closed_form: k.p,
        empty_moduli: false,
        notes: vec!["H^2 vanishes and line bundles on the punctured surface are trivial: only w1 survives".into()],
    })
}

fn require_s1(k: K) -> Result<()> {
    if k.s != 1 {
        return Err(Error::InvalidInput(format!("this mode needs s = 1, got s = {}", k.s)));
    }
    Ok(())
}

fn nonparabolic_s1_plan(group: &GroupDescriptor, g: u32, k: K) -> Result<Plan> {
    require_s1(k)?;
    let mut plan = max_union_plan(group, k)?;
    plan.total_formula = "closed-surface count".into();
    plan.total_closed_form = closed_surface_count(group, g)?;
    Ok(plan)
}

fn kd_twisted_s1_plan(group: &GroupDescriptor, k: K) -> Result<Plan> {
    require_s1(k)?;
    let K { g, p, sp, j, c, .. } = k;
    let weight_zero = vec![vec![0u8]];
    let first = case(
        "w1_nonzero_w2",
        "2(2^{2g}-1)",
        mul(sp, p - 1)?,
        Source::Stiefel { w1_nonzero: true, w2: W2::All },
    );
    let (cases, formula, total) = match group {
        GroupDescriptor::Sp2nR { n: 2 } => (
            vec![
                first,
                case("degree", "2g-1", nonneg(c), Source::Degrees { structures: weight_zero, count: c }),
                case("square_roots", "2^{2g}", j, Source::RootsOfKd),
            ],
            "2(2^{2g}-1)+(2g-1)+2^{2g}",
            add(add(mul(2, j - 1)?, nonneg(2 * g - 1))?, j)?,
        ),
        GroupDescriptor::SO02n { n: 3 } => {
            let d = 4 * g - 1;
            (
                vec![first, case("degree", "4g-1", nonneg(d), Source::Degrees { structures: weight_zero, count: d })],
                "2(2^{2g}-1)+(4g-1)",
                add(mul(2, j - 1)?, nonneg(d))?,
            )
        }
        _ => return Err(Error::IncompatibleMode(format!("{group}: K(D)-twisted count is given for Sp(4,R) and SO0(2,3)"))),
    };
    Ok(Plan {
        cases,
        total_formula: formula.into(),
        total_closed_form: total,
        empty_moduli: false,
        notes: vec!["parabolic structure forgotten: degrees carry weight zero only".into()],
    })
}

fn plan(group: &GroupDescriptor, g: u32, s: usize, mode: &CountMode) -> Result<Plan> {
    group.validate()?;
    surface(g, s)?;
    let k = K::new(g, s)?;
    let mut plan = match mode {
        CountMode::MaxUnion => max_union_plan(group, k)?,
        CountMode::FixedAlpha { alpha } => fixed_alpha_plan(group, k, alpha)?,
        CountMode::Punctured => punctured_plan(group, k)?,
        CountMode::NonparabolicS1 => nonparabolic_s1_plan(group, g, k)?,
        CountMode::KdTwistedS1 => kd_twisted_s1_plan(group, k)?,
    };
    if s == 0 && !matches!(mode, CountMode::Punctured) {
        plan.notes.push(
            "s = 0: the closed forms assume at least one orbifold point; enumeration uses the true cohomology".into(),
        );
    }
    Ok(plan)
}

fn materialize(source: &Source, surf: &MarkedSurface) -> Result<Vec<InvariantTuple>> {
    let (g, s) = (surf.genus, surf.s());
    Ok(match source {
        Source::Stiefel { w1_nonzero, w2 } => {
            let w1s: Vec<Bits> = z2_character_enumerate(surf)?
                .into_iter()
                .map(|c| c.flat())
                .filter(|v| !*w1_nonzero || v.iter().any(|&b| b != 0))
                .collect();
            let w2s = match w2 {
                W2::All => all_bit_vectors(v_cohomology_ranks(g, s, VCohMode::Order2)?.h2),
                W2::Fixed(b) => vec![b.clone()],
                W2::Absent => vec![Vec::new()],
            };
            let mut out = Vec::with_capacity(w1s.len() * w2s.len());
            for w1 in &w1s {
                for w2 in &w2s {
                    out.push(InvariantTuple::Stiefel { w1: w1.clone(), w2: w2.clone() });
                }
            }
            out
        }
        Source::Degrees { structures, count } => structures
            .iter()
            .flat_map(|st| (0..*count).map(move |d| InvariantTuple::Degree { structure: st.clone(), degree: d }))
            .collect(),
        Source::RootsOfKd => {
            let roots = square_root_types(&VLineBundle::pullback(surf.deg_kd()), surf)?;
            let mut out = Vec::new();
            let mut index = 0u128;
            for t in &roots.types {
                let rho: Bits = surf.points.iter().map(|p| t.residue(&p.label) as u8).collect();
                for _ in 0..roots.jacobian_multiplicity {
                    out.push(InvariantTuple::SquareRoot { index, rho: rho.clone() });
                    index += 1;
                }
            }
            out
        }
        Source::RootsWithSigma(sigma) => z2_character_enumerate(surf)?
            .into_iter()
            .filter(|c| &c.sigma == sigma)
            .enumerate()
            .map(|(i, c)| InvariantTuple::SquareRoot { index: i as u128, rho: c.sigma })
            .collect(),
        Source::AllRootsOfTrivial => z2_character_enumerate(surf)?
            .into_iter()
            .enumerate()
            .map(|(i, c)| InvariantTuple::SquareRoot { index: i as u128, rho: c.sigma })
            .collect(),
        Source::Structures(list) => list.iter().map(|a| InvariantTuple::Structure { alpha: a.clone() }).collect(),
        Source::PuncturedW1 => {
            let h1 = v_cohomology_ranks(g, s, VCohMode::Punctured)?.h1;
            all_bit_vectors(h1).into_iter().map(|w1| InvariantTuple::Stiefel { w1, w2: Vec::new() }).collect()
        }
    })
}

/// Every invariant tuple, grouped by case label, in deterministic order.
///
/// Fails with [`Error::CapExceeded`] before allocating when the closed forms predict more than
/// `cap` tuples.
pub fn enumerate_invariants(
    group: &GroupDescriptor,
    g: u32,
    s: usize,
    mode: &CountMode,
    cap: u64,
) -> Result<Vec<(String, Vec<InvariantTuple>)>> {
    let plan = plan(group, g, s, mode)?;
    enumerate_plan(&plan, g, s, cap)
}

fn enumerate_plan(plan: &Plan, g: u32, s: usize, cap: u64) -> Result<Vec<(String, Vec<InvariantTuple>)>> {
    if cap == 0 {
        return Err(Error::InvalidInput("cap must be positive".into()));
    }
    let predicted = plan.cases.iter().try_fold(0u128, |acc, c| add(acc, c.closed_form))?;
    // At s = 0 the true cohomology is larger than the closed forms predict.
    let predicted = if s == 0 { predicted.saturating_mul(2).saturating_add(pow2(2 * g as i64)?) } else { predicted };
    if predicted > cap as u128 {
        return Err(Error::CapExceeded { needed: predicted, cap });
    }
    let surf = surface(g, s)?;
    plan.cases.iter().map(|c| Ok((c.label.to_string(), materialize(&c.source, &surf)?))).collect()
}

/// Sp(2n,R) invariants, the case analysis for `n = 2` and its truncations for other `n`.
pub fn enumerate_invariants_sp(n: u32, g: u32, s: usize, mode: &CountMode) -> Result<Vec<InvariantTuple>> {
    let groups = enumerate_invariants(&GroupDescriptor::Sp2nR { n }, g, s, mode, DEFAULT_CAP)?;
    Ok(groups.into_iter().flat_map(|(_, v)| v).collect())
}

fn report(group: &GroupDescriptor, g: u32, s: usize, mode: &CountMode, plan: Plan, counts: Option<Vec<u128>>) -> ComponentCountReport {
    let cases: Vec<CaseCount> = plan
        .cases
        .iter()
        .enumerate()
        .map(|(i, c)| CaseCount {
            label: c.label.into(),
            formula: c.formula.clone(),
            enumerated: counts.as_ref().map(|v| v[i]),
            closed_form: c.closed_form,
        })
        .collect();
    let total_enumerated = counts.as_ref().map(|v| v.iter().sum::<u128>());
    let case_sum: u128 = plan.cases.iter().map(|c| c.closed_form).sum();
    let matches = match total_enumerated {
        Some(t) => t == plan.total_closed_form,
        None => case_sum == plan.total_closed_form,
    };
    let mut notes = plan.notes;
    let discrepancy = if case_sum != plan.total_closed_form {
        Some(format!("case sum {case_sum} differs from the closed form {}", plan.total_closed_form))
    } else if let Some(t) = total_enumerated.filter(|&t| t != plan.total_closed_form) {
        Some(format!("enumerated {t} differs from the closed form {}", plan.total_closed_form))
    } else {
        None
    };
    if counts.is_none() {
        notes.push("enumeration skipped; case numbers are closed forms".into());
    }
    ComponentCountReport {
        group: group.to_string(),
        group_id: group.id(),
        g,
        s,
        mode: mode.name().into(),
        alpha: match mode {
            CountMode::FixedAlpha { alpha } => Some(bits_string(alpha)),
            _ => None,
        },
        interpretation: "minimum components".into(),
        cases,
        total_enumerated,
        total_closed_form: plan.total_closed_form,
        total_formula: plan.total_formula,
        matches,
        empty_moduli: plan.empty_moduli,
        discrepancy,
        notes,
    }
}

/// Enumerate every case and compare with the closed forms.
pub fn count_components_capped(
    group: &GroupDescriptor,
    g: u32,
    s: usize,
    mode: &CountMode,
    cap: u64,
) -> Result<ComponentCountReport> {
    let plan = plan(group, g, s, mode)?;
    let tuples = enumerate_plan(&plan, g, s, cap)?;
    let counts = tuples.iter().map(|(_, v)| v.len() as u128).collect();
    Ok(report(group, g, s, mode, plan, Some(counts)))
}

pub fn count_components(group: &GroupDescriptor, g: u32, s: usize, mode: &CountMode) -> Result<ComponentCountReport> {
    count_components_capped(group, g, s, mode, DEFAULT_CAP)
}

/// Closed forms only; usable far beyond the enumeration cap.
pub fn count_components_closed(
    group: &GroupDescriptor,
    g: u32,
    s: usize,
    mode: &CountMode,
) -> Result<ComponentCountReport> {
    let plan = plan(group, g, s, mode)?;
    Ok(report(group, g, s, mode, plan, None))
}

/// Number of Teichmüller components, one per square root of `K(D)`.
pub fn teichmuller_count(group: &GroupDescriptor, g: u32, s: usize) -> Result<u128> {
    group.validate()?;
    if !group.is_split() {
        return Err(Error::NotSplit(format!("{group} is not a split real form")));
    }
    surface(g, s)?;
    pow2(2 * g as i64 + s as i64 - 1)
}

/// Components for maximal `Sp(2n,R)` representations of a surface with `m` boundary circles.
pub fn strubel_count(g: u32, m: usize) -> Result<u128> {
    if m == 0 {
        return Err(Error::InvalidInput("at least one boundary component is needed".into()));
    }
    let r = count_components(&GroupDescriptor::Sp2nR { n: 1 }, g, m, &CountMode::Punctured)?;
    Ok(r.total_enumerated.expect("enumerated"))
}
