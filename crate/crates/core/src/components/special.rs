use serde::{Deserialize, Serialize};

use super::enumerate::{closed_surface_count, count_components, ComponentCountReport};
use super::group::{CountMode, GroupDescriptor};
use crate::error::Result;
use crate::exact::pow2;

/// The parabolic count at one marked point set against its non-parabolic relatives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct S1Report {
    pub group: String,
    pub g: u32,
    /// Maximal union at `s = 1`, enumerated.
    pub parabolic: u128,
    /// `K(D)`-twisted count with the parabolic structure forgotten.
    pub kd_twisted: u128,
    /// Count on the closed surface.
    pub closed_surface: u128,
    /// The short form printed for the `K(D)`-twisted count, when there is one, and whether it
    /// agrees with the case breakdown.
    pub kd_twisted_printed: Option<u128>,
    pub kd_twisted_printed_consistent: Option<bool>,
    pub parabolic_equals_closed_surface: bool,
    pub parabolic_report: ComponentCountReport,
    pub notes: Vec<String>,
}

pub fn s1_reduction_report(group: &GroupDescriptor, g: u32) -> Result<S1Report> {
    let parabolic_report = count_components(group, g, 1, &CountMode::MaxUnion)?;
    let parabolic = parabolic_report.total_enumerated.expect("enumerated");
    let closed_surface = closed_surface_count(group, g)?;
    let j = pow2(2 * g as i64)?;
    let mut notes = Vec::new();
    let (kd_twisted, printed) = match group {
        GroupDescriptor::Sp2nR { n: 2 } | GroupDescriptor::SO02n { n: 3 } => {
            let r = count_components(group, g, 1, &CountMode::KdTwistedS1)?;
            let extra = if matches!(group, GroupDescriptor::SO02n { .. }) { 4 * g as u128 } else { 2 * g as u128 };
            // 3·2^{2g} + 2g - 3, resp. 3·2^{2g} + 4g - 3.
            (r.total_enumerated.expect("enumerated"), Some(3 * j + extra - 3))
        }
        _ => {
            notes.push(
                "at s = 1 the isotropy is forced to be trivial, so the twisted count is the closed-surface count".into(),
            );
            (closed_surface, None)
        }
    };
    let consistent = printed.map(|p| p == kd_twisted);
    if consistent == Some(false) {
        notes.push(format!(
            "printed short form {} disagrees with the case breakdown {}",
            printed.unwrap(),
            kd_twisted
        ));
    }
    if parabolic != closed_surface {
        notes.push(format!("parabolic count {parabolic} differs from the closed-surface count {closed_surface}"));
    }
    Ok(S1Report {
        group: group.to_string(),
        g,
        parabolic,
        kd_twisted,
        closed_surface,
        kd_twisted_printed: printed,
        kd_twisted_printed_consistent: consistent,
        parabolic_equals_closed_surface: parabolic == closed_surface,
        parabolic_report,
        notes,
    })
}
