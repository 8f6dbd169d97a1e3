//! Orbifold side of the correspondence: line V-bundles, `Z_2`-characters of the orbifold
//! fundamental group, `Pic_V`, and the local gauge change between parabolic and orbifold
//! Higgs fields.

mod characters;
mod local;
mod vline;

pub use characters::{
    pic_v_structure, z2_character_count, z2_character_enumerate, z2_relation_matrix, PicVDescriptor, Z2Character,
};
pub use local::{
    equivariance_check, orb_to_par_local, par_to_orb_local, Form, LaurentMatrix, LaurentPoly, LocalChart, Term,
};
pub use vline::{
    kawasaki_euler, parabolic_to_vline, parity, square_root_types, vline_degree, vline_tensor, vline_to_parabolic,
    Parity, SquareRoots, VLineBundle,
};
