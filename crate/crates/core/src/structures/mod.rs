//! Contact, Jacobi, cosymplectic and almost contact structures, and the
//! sub-bundles of E^1(M) they determine.

mod almost_contact;
mod contact;
mod cosymplectic;
mod jacobi;
mod sasakian;

pub use almost_contact::{
    almost_contact_check, gac_consistency, gac_from_almost_contact, lemma_identities, normality_check,
    AlmostContact, AlmostContactGac, AlmostContactReport, NormalityReport,
};
pub use contact::{contact_check, flat_eta, flat_eta_inv, flat_matrix, reeb, ContactReport};
pub use cosymplectic::{cosymplectic_check, gac_from_cosymplectic, CosymplecticGac, CosymplecticPair, CosymplecticReport};
pub use jacobi::{
    contact_jacobi_report, graph_eta, graph_jacobi, graph_omega_eta, jacobi_check, jacobi_from_contact,
    kernel_line, sigma, theta_matrix, transversality_check, ContactJacobiReport, JacobiPair, JacobiReport,
    KernelLineReport, TransversalityReport,
};
pub use sasakian::{gen_sasakian_check, gen_sasakian_sampled, PointResult, SasakianReport};
