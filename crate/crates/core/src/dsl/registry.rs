//! Signatures of structure constructors and checks.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ty {
    Scalar,
    Form(usize),
    Vector(usize),
    Tensor,
    Jacobi,
    AlmostContact,
    Cosymplectic,
    Bundle,
    Endo,
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ty::Scalar => f.write_str("scalar"),
            Ty::Form(k) => write!(f, "{k}-form"),
            Ty::Vector(1) => f.write_str("vector field"),
            Ty::Vector(2) => f.write_str("bivector"),
            Ty::Vector(k) => write!(f, "{k}-vector"),
            Ty::Tensor => f.write_str("tensor11"),
            Ty::Jacobi => f.write_str("jacobi pair"),
            Ty::AlmostContact => f.write_str("almost contact structure"),
            Ty::Cosymplectic => f.write_str("cosymplectic pair"),
            Ty::Bundle => f.write_str("sub-bundle"),
            Ty::Endo => f.write_str("endomorphism"),
        }
    }
}

pub struct StructureSig {
    pub kind: &'static str,
    pub args: &'static [Ty],
    pub result: Ty,
}

pub struct CheckSig {
    pub name: &'static str,
    pub args: &'static [Ty],
    /// Accepted option keys with their accepted values.
    pub opts: &'static [(&'static str, &'static [&'static str])],
}

use Ty::*;

pub const STRUCTURES: &[StructureSig] = &[
    StructureSig { kind: "jacobi", args: &[Vector(2), Vector(1)], result: Jacobi },
    StructureSig { kind: "almost_contact", args: &[Tensor, Vector(1), Form(1)], result: AlmostContact },
    StructureSig { kind: "cosymplectic", args: &[Form(2), Form(1)], result: Cosymplectic },
    StructureSig { kind: "contact_jacobi", args: &[Form(1)], result: Jacobi },
    StructureSig { kind: "graph_jacobi", args: &[Jacobi], result: Bundle },
    StructureSig { kind: "graph_omega_eta", args: &[Form(2), Form(1)], result: Bundle },
    StructureSig { kind: "graph_eta", args: &[Form(1)], result: Bundle },
    StructureSig { kind: "gac_almost_contact", args: &[AlmostContact], result: Endo },
    StructureSig { kind: "bundle_almost_contact", args: &[AlmostContact], result: Bundle },
    StructureSig { kind: "gac_cosymplectic", args: &[Cosymplectic], result: Endo },
    StructureSig { kind: "bundle_cosymplectic", args: &[Cosymplectic], result: Bundle },
    StructureSig { kind: "eigenbundle", args: &[Endo], result: Bundle },
    StructureSig { kind: "conjugate", args: &[Bundle], result: Bundle },
    StructureSig { kind: "sigma", args: &[Bundle], result: Bundle },
];

pub const CHECKS: &[CheckSig] = &[
    CheckSig { name: "contact", args: &[Form(1)], opts: &[] },
    CheckSig { name: "reeb", args: &[Form(1)], opts: &[] },
    CheckSig { name: "jacobi_from_contact", args: &[Form(1)], opts: &[] },
    CheckSig { name: "correspondence", args: &[Form(1)], opts: &[] },
    CheckSig { name: "jacobi", args: &[Jacobi], opts: &[] },
    CheckSig { name: "isotropy", args: &[Bundle], opts: &[] },
    CheckSig { name: "integrability", args: &[Bundle], opts: &[] },
    CheckSig { name: "transversality", args: &[Bundle], opts: &[] },
    CheckSig { name: "kernel_line", args: &[Bundle], opts: &[] },
    CheckSig { name: "direct_sum", args: &[Bundle], opts: &[] },
    CheckSig { name: "equal_span", args: &[Bundle, Bundle], opts: &[] },
    CheckSig { name: "almost_contact", args: &[AlmostContact], opts: &[] },
    CheckSig { name: "normality", args: &[AlmostContact], opts: &[] },
    CheckSig { name: "cosymplectic", args: &[Cosymplectic], opts: &[] },
    CheckSig { name: "endo", args: &[Endo], opts: &[] },
    CheckSig { name: "eigenbundle", args: &[Endo, Bundle], opts: &[("sign", &["plus", "minus"])] },
    CheckSig { name: "gen_sasakian", args: &[Endo, Endo], opts: &[] },
];

pub fn structure(kind: &str) -> Option<&'static StructureSig> {
    STRUCTURES.iter().find(|s| s.kind == kind)
}

pub fn check(name: &str) -> Option<&'static CheckSig> {
    CHECKS.iter().find(|s| s.name == name)
}
