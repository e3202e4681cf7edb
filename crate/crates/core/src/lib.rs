//! Monoids, bimodules and balanced tensor products in finite monoidal
//! categories, the marked nerve they assemble into, and a checker for its
//! horn-filling and marking conditions.

pub mod kernel;
pub mod bimodule;
pub mod complicial;
pub mod gen;
pub mod harness;
pub mod instances;
pub mod linalg;
pub mod nerve;
pub mod report;
