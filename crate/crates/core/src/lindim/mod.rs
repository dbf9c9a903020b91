//! Linear dimension of group actions: exact search over the submodule
//! lattice of the permutation module, a fast path for primitive actions, a
//! brute-force oracle, witness certificates and closed-form formulas.

mod afford;
mod formula;
mod primitive;
mod search;
mod witness;

use std::fmt;

use thiserror::Error;

use crate::gfq::{Elem, Field};
use crate::linalg::{unit_vector, Subspace};
use crate::perm::{GroupAction, PermError};
use crate::permmod::{FGModule, ModuleError};

pub use afford::afford_from_vector;
pub use formula::{
    bound_affine, bounds_intransitive, default_2transitive, exact_direct_product,
    formula_2transitive_table, formula_sn_family, formula_wreath_imprimitive,
    formula_wreath_product, lindim_2transitive, AffineBound, SnCase, TwoTransitive,
};
pub use primitive::lindim_primitive;
pub use search::{lindim_general, lindim_oracle};
pub use witness::{
    format_witness, parse_witness, witness_is_valid, witness_verify, WitnessCertificate,
    WitnessFailure,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinDimError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("NotPrimitive: the action is not primitive")]
    NotPrimitive,
    #[error("UseGeneralPath: the induced group is cyclic")]
    UseGeneralPath,
    #[error("OrbitTooLong: orbit exceeds {0} vectors")]
    OrbitTooLong(usize),
    #[error("NoEquivalence: orbit action is not equivalent to the given action")]
    NoEquivalence,
    #[error("BadParameter: {0}")]
    BadParameter(String),
    #[error("OutOfTheoremRange: {0}")]
    OutOfTheoremRange(String),
    #[error("ConditionViolation: {0}")]
    ConditionViolation(String),
    #[error("WitnessRejected: {0}")]
    WitnessRejected(WitnessFailure),
    #[error("Parse: {0}")]
    Parse(String),
}

impl LinDimError {
    /// The variant name, used in reports and exit diagnostics.
    pub fn name(&self) -> String {
        self.to_string()
            .chars()
            .take_while(char::is_ascii_alphanumeric)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinDimValue {
    Exact(usize),
    Interval { lo: usize, hi: usize },
}

impl LinDimValue {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            LinDimValue::Exact(v) => Some(v),
            LinDimValue::Interval { .. } => None,
        }
    }

    pub fn upper(&self) -> usize {
        match *self {
            LinDimValue::Exact(v) => v,
            LinDimValue::Interval { hi, .. } => hi,
        }
    }

    pub fn lower(&self) -> usize {
        match *self {
            LinDimValue::Exact(v) => v,
            LinDimValue::Interval { lo, .. } => lo,
        }
    }
}

impl fmt::Display for LinDimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinDimValue::Exact(v) => write!(f, "{v}"),
            LinDimValue::Interval { lo, hi } => write!(f, "{lo}..{hi}"),
        }
    }
}

impl std::str::FromStr for LinDimValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.parse::<usize>().map_err(|_| format!("bad value {s:?}"));
        match s.split_once("..") {
            Some((lo, hi)) => Ok(LinDimValue::Interval {
                lo: num(lo)?,
                hi: num(hi)?,
            }),
            None => Ok(LinDimValue::Exact(num(s)?)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    GeneralLattice,
    PrimitiveFastPath,
    Oracle,
    Formula,
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::GeneralLattice => "general-lattice",
            Method::PrimitiveFastPath => "primitive-fastpath",
            Method::Oracle => "oracle",
            Method::Formula => "formula",
        }
    }

    pub fn from_tag(s: &str) -> Option<Method> {
        [
            Method::GeneralLattice,
            Method::PrimitiveFastPath,
            Method::Oracle,
            Method::Formula,
        ]
        .into_iter()
        .find(|m| m.tag() == s)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone)]
pub struct LinDimResult {
    pub value: LinDimValue,
    pub witness: Option<WitnessCertificate>,
    pub method: Method,
    pub complete: bool,
    pub seed: u64,
}

/// Whether no difference `e_a - e_b` of distinct basis vectors lies in `u`,
/// that is, whether the points keep distinct images in `F^n / u`.
pub fn separating(u: &Subspace) -> bool {
    let n = u.ambient_dim();
    if u.dim() == 0 {
        return true;
    }
    if u.dim() == n {
        return n <= 1;
    }
    let free = u.free_coords();
    let mut seen = std::collections::HashSet::with_capacity(n);
    (0..n).all(|x| seen.insert(u.quotient_coords_with(&free, &unit_vector(n, x))))
}

/// The largest separating subspace among `nodes` (sorted by dimension, then
/// canonical basis), least canonical basis first among equals.
pub(crate) fn best_separating(nodes: &[Subspace]) -> Option<&Subspace> {
    let mut best: Option<&Subspace> = None;
    for u in nodes.iter().rev() {
        if let Some(b) = best {
            if u.dim() < b.dim() {
                break;
            }
        }
        if separating(u) {
            best = Some(u);
        }
    }
    best
}

/// The quotient of the permutation module by an invariant subspace, with the
/// images of the points, as a certificate.
pub(crate) fn witness_from_kernel(
    a: &GroupAction,
    perm: &FGModule,
    kernel: &Subspace,
    value: LinDimValue,
    method: Method,
    seed: u64,
    complete: bool,
) -> Result<WitnessCertificate, LinDimError> {
    let (quo, proj) = perm.quotient(kernel)?;
    let n = a.size();
    let phi: Vec<Vec<Elem>> = (0..n).map(|x| proj.apply(&unit_vector(n, x))).collect();
    let cert = WitnessCertificate {
        value,
        method,
        seed,
        complete,
        field: perm.field().clone(),
        dim: quo.dim(),
        rho: quo.gens().to_vec(),
        phi,
        kernel: kernel.clone(),
    };
    witness_verify(&cert, a).map_err(LinDimError::WitnessRejected)?;
    Ok(cert)
}

/// General lattice search, or the primitive fast path when it applies.
pub fn lindim_auto(
    a: &GroupAction,
    f: &Field,
    cap: usize,
    seed: u64,
) -> Result<LinDimResult, LinDimError> {
    match lindim_primitive(a, f, seed) {
        Err(LinDimError::NotPrimitive) | Err(LinDimError::UseGeneralPath) => {
            lindim_general(a, f, cap, seed)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PermGroup;

    #[test]
    fn separating_examples() {
        let f = Field::new(3, 1).unwrap();
        assert!(separating(&Subspace::zero(&f, 3)));
        assert!(!separating(&Subspace::full(&f, 3)));
        assert!(separating(&Subspace::full(&f, 1)));
        let m = FGModule::permutation(&GroupAction::natural(&PermGroup::symmetric(3)), &f);
        let (c, zero_sum) = m.constant_and_zero_sum().unwrap();
        assert!(!separating(&zero_sum));
        assert!(separating(&c));
    }

    #[test]
    fn value_text_round_trip() {
        for v in [LinDimValue::Exact(4), LinDimValue::Interval { lo: 2, hi: 7 }] {
            assert_eq!(v.to_string().parse::<LinDimValue>().unwrap(), v);
        }
        assert_eq!(Method::from_tag("oracle"), Some(Method::Oracle));
    }

    #[test]
    fn error_names() {
        assert_eq!(LinDimError::UseGeneralPath.name(), "UseGeneralPath");
        let e: LinDimError = ModuleError::LatticeTooLarge(3).into();
        assert_eq!(e.name(), "LatticeTooLarge");
    }
}
