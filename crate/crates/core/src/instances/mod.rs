//! Concrete finite monoidal categories and combinators.

pub mod finset;
pub mod finvect;
pub mod mutant;
pub mod opposite;
pub mod product;

use crate::kernel::MonoidalInstance;

pub use finset::{func, FinFunction, FinSetDisjoint};
pub use finvect::{FinVect, NotPrime};

pub fn finset_disjoint() -> MonoidalInstance {
    MonoidalInstance::new(FinSetDisjoint)
}

pub fn finvect(p: u64) -> Result<MonoidalInstance, NotPrime> {
    Ok(MonoidalInstance::new(FinVect::new(p)?))
}

/// Coequalizers in the result are equalizers of `c`; a missing one surfaces
/// as `KernelError::MissingColimit` when first requested.
pub fn opposite_instance(c: MonoidalInstance) -> MonoidalInstance {
    MonoidalInstance::new(opposite::Opposite { inner: c })
}

pub fn product_instance(c: MonoidalInstance, d: MonoidalInstance) -> MonoidalInstance {
    MonoidalInstance::new(product::Product { left: c, right: d })
}

pub fn swapped_associator() -> MonoidalInstance {
    MonoidalInstance::new(mutant::SwappedAssociator)
}
