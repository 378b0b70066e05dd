//! Checks every area identity, lemma and printed formula of the ziggurat and
//! pyramid configurations against the geometry kernel.

mod constants;
mod exact;
mod pyramid;
mod record;
mod regular;
mod ziggurat;

use thiserror::Error;

use crate::constructions::{ConfigurationDocument, ConstructionError, Family};
use crate::geometry::GeometryError;
use crate::numeric::NumericError;
use crate::symbolic::ProverError;

pub use constants::{compute_constants, extended_pyramid_area, ConstantsRecord};
pub use exact::{
    check_exact_special_angle, pyramid_identity, ziggurat_identity, ExactIdentity, PYRAMID_SPECIAL_ANGLES,
    ZIGGURAT_SPECIAL_ANGLES,
};
pub use pyramid::{audit_decomposition_b, check_theorem_b};
pub use record::{CheckRecord, CheckStatus, VerificationReport};
pub use regular::check_regular_polygon_additivity;
pub use ziggurat::{
    audit_decomposition_a1, audit_decomposition_a2, check_lemma, check_theorem_a,
    formula_audit_central_parallelogram,
};

pub use crate::constructions::classify_degeneracy;

/// Relative tolerance for area identities.
pub const AREA_REL_TOL: f64 = 1e-9;
/// Relative tolerance for point and length coincidences.
pub const POINT_REL_TOL: f64 = 1e-12;
/// Width of the band around threshold angles in the float backend (degrees).
pub const ANGLE_BAND_DEG: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum VerificationError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Prover(#[from] ProverError),
    #[error("check `{check}` needs a {expected} document, got {got}")]
    WrongFamily {
        check: &'static str,
        expected: &'static str,
        got: &'static str,
    },
}

pub(crate) fn require_family(
    doc: &ConfigurationDocument,
    family: Family,
    check: &'static str,
) -> Result<(), VerificationError> {
    if doc.family != family {
        return Err(VerificationError::WrongFamily {
            check,
            expected: family.name(),
            got: doc.family.name(),
        });
    }
    Ok(())
}

/// Runs every check that applies to the document's family, in a fixed order.
pub fn verify_configuration(doc: &ConfigurationDocument) -> Result<VerificationReport, VerificationError> {
    let checks = match doc.family {
        Family::Ziggurat => ziggurat::all_checks(doc)?,
        Family::Pyramid => pyramid::all_checks(doc)?,
        Family::DoubleAngle => regular::double_angle_checks(doc)?,
    };
    Ok(VerificationReport::new(doc, checks))
}
