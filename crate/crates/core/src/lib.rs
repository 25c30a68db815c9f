//! Exact algebra for deriving and certifying genus-one Belyi pairs.

pub mod curve;
pub mod derive;
pub mod mp;
pub mod numeric;
pub mod poly;
pub mod scalars;
pub mod series;
pub mod verify;
