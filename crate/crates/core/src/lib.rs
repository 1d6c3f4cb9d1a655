//! Exact verification of categorified Lie algebra structures over ℚ.

pub mod braid;
pub mod cohomology;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod json;
pub mod lie2;
pub mod linfty;
pub mod random;
pub mod report;
pub mod twoterm;
pub mod twovect;

pub use error::{Error, Result};
pub use report::VerificationReport;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/linfty.md")]
    mod linfty {}
    #[doc = include_str!("../../../book/src/lie2.md")]
    mod lie2 {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
    #[doc = include_str!("../../../book/src/braid.md")]
    mod braid {}
}
