//! Bundled structure and twistor documents.

use crate::document::{parse_structure, parse_twist, DocumentError, TwistDocument};
use crate::structure::QhsaStructure;

pub const STRUCTURES: &[(&str, &str)] = &[
    ("trivial", include_str!("../fixtures/trivial.qhsa")),
    ("ext", include_str!("../fixtures/ext.qhsa")),
    ("h2", include_str!("../fixtures/h2.qhsa")),
    ("h2r", include_str!("../fixtures/h2r.qhsa")),
    ("h2ext", include_str!("../fixtures/h2ext.qhsa")),
    ("h2-broken-pentagon", include_str!("../fixtures/h2-broken-pentagon.qhsa")),
    ("h2-broken-antipode", include_str!("../fixtures/h2-broken-antipode.qhsa")),
];

pub const TWISTORS: &[(&str, &str)] = &[
    ("f-e11", include_str!("../fixtures/f-e11.twist")),
    ("f-theta", include_str!("../fixtures/f-theta.twist")),
    ("f-odd", include_str!("../fixtures/f-odd.twist")),
];

/// Fixtures expected to pass every applicable suite.
pub const POSITIVE: &[&str] = &["trivial", "ext", "h2", "h2r", "h2ext"];

/// A deliberately broken input: the structure, an optional twistor, the
/// labeled check, and the complete set of checks it is expected to fail.
#[derive(Debug, Clone, Copy)]
pub struct Negative {
    pub fixture: &'static str,
    pub twistor: Option<&'static str>,
    pub label: &'static str,
    pub fails: &'static [&'static str],
}

pub const NEGATIVES: &[Negative] = &[
    Negative {
        fixture: "h2-broken-pentagon",
        twistor: None,
        label: "qb.pentagon",
        fails: &["qb.pentagon", "qb.phi_outer_counit"],
    },
    Negative {
        fixture: "h2-broken-antipode",
        twistor: None,
        label: "antipode.phi",
        fails: &["antipode.phi", "antipode.phi_inverse"],
    },
    Negative {
        fixture: "h2ext",
        twistor: Some("f-odd"),
        label: "twistor.cocycle",
        fails: &["twistor.cocycle"],
    },
];

/// `(fixture, twistor)` pairs of matching dimension.
pub const TWIST_PAIRS: &[(&str, &str)] = &[
    ("ext", "f-theta"),
    ("h2", "f-e11"),
    ("h2r", "f-e11"),
    ("h2ext", "f-odd"),
];

pub fn structure_text(name: &str) -> Option<&'static str> {
    STRUCTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn twistor_text(name: &str) -> Option<&'static str> {
    TWISTORS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Parses a bundled structure; panics on unknown names.
pub fn structure(name: &str) -> Result<QhsaStructure, DocumentError> {
    let text = structure_text(name).unwrap_or_else(|| panic!("no bundled structure {name}"));
    parse_structure(text)?.to_structure()
}

pub fn twistor(name: &str) -> Result<TwistDocument, DocumentError> {
    let text = twistor_text(name).unwrap_or_else(|| panic!("no bundled twistor {name}"));
    parse_twist(text)
}
