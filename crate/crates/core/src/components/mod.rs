//! Lower bounds on the number of connected components of maximal moduli spaces.
//!
//! Each count is an explicit enumeration of topological invariants, case by case, reported next
//! to the corresponding closed form. Disagreements are reported, not reconciled.

mod enumerate;
mod group;
mod special;
mod tables;

pub use enumerate::{
    closed_surface_count, count_components, count_components_capped, count_components_closed,
    enumerate_invariants, enumerate_invariants_sp, strubel_count, teichmuller_count, CaseCount,
    ComponentCountReport, InvariantTuple, DEFAULT_CAP,
};
pub use group::{bits_string, parse_bits, CountMode, GroupDescriptor};
pub use special::{s1_reduction_report, S1Report};
pub use tables::{emit_tables, tables_csv, tables_markdown, Table, TableRow, DASH, OFF_BY_ONE};
