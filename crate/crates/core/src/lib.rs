//! Exact tableau combinatorics: jeu de taquin, crystal operators, ribbon
//! tableaux, Schur-basis arithmetic with power-sum plethysm, and exhaustive
//! fixed-point checks for promotion and evacuation.

pub mod crystal;
pub mod error;
pub mod jdt;
pub mod partition;
pub mod ribbon;
pub mod symfunc;
pub mod tableau;
pub mod verify;

pub use crystal::{
    apply_e, apply_f, component_of, is_highest_weight, is_lowest_weight, split_blocks,
    string_lengths, CrystalIndexSet, SplitTuple,
};
pub use error::{Error, Result};
pub use jdt::{demote, evacuate, promote, rectify, reverse_slide, slide, SlideTrace};
pub use partition::{is_ribbon, partitions_bounded, partitions_of, Cell, Composition, Partition, Ribbon};
pub use ribbon::{
    domino_reading_word, enumerate_ribbon_tableaux, enumerate_yamanouchi_domino, RibbonTableau,
};
pub use symfunc::{
    inner_product, lr_coefficient, phi_adjoint, plethysm_coefficient, plethysm_power,
    schur_product, KostkaTable, SchurExpansion,
};
pub use tableau::{
    enumerate_ssyt, enumerate_ssyt_bounded, is_yamanouchi, lr_filter, SkewTableau, Word,
};
pub use verify::{
    check_corprom, check_mainevac, check_mainprom, check_rhoades, check_stembridge,
    enumerate_eytab, enumerate_pytab, evac_fixed_count, prom_fixed_count, sweep, SweepBounds,
    Theorem, VerificationReport,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/dynamics.md")]
    mod dynamics {}
    #[doc = include_str!("../../../book/src/crystals.md")]
    mod crystals {}
    #[doc = include_str!("../../../book/src/ribbons.md")]
    mod ribbons {}
    #[doc = include_str!("../../../book/src/symmetric-functions.md")]
    mod symmetric_functions {}
    #[doc = include_str!("../../../book/src/fixed-points.md")]
    mod fixed_points {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
