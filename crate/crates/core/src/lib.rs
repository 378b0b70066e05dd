pub mod numeric;
pub mod constructions;
pub mod geometry;
pub mod symbolic;
pub mod verification;
pub mod report;
pub mod figures;
