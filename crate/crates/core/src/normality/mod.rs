//! Normal certificates: verification, exact search, and the star-covering
//! reduction for triangle-free graphs.

mod certificate;
mod decide;
mod star_covering;

pub use certificate::{verify_certificate, CertificateFile, NormalCertificate, Verification, Violation};
pub use decide::{decide_normal, Budget, Decision};
pub use star_covering::{to_star_covering, Star, StarCovering};
