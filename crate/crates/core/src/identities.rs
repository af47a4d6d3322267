//! Exhaustive identity checks over whole tables.
//!
//! Every check quantifies over all tuples in lexicographic order and reports
//! the first violating tuple, so failures are reproducible.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants;
use crate::table::{Element, LoopTable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub holds: bool,
    /// First violating tuple; present iff `holds` is false.
    pub witness: Option<Vec<Element>>,
}

impl IdentityReport {
    pub fn ok() -> Self {
        IdentityReport { holds: true, witness: None }
    }

    pub fn fail(witness: Vec<Element>) -> Self {
        IdentityReport { holds: false, witness: Some(witness) }
    }

    fn and_then(self, next: impl FnOnce() -> IdentityReport) -> IdentityReport {
        if self.holds {
            next()
        } else {
            self
        }
    }
}

/// Named properties accepted by [`check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Associative,
    Commutative,
    Flexible,
    LeftAlternative,
    RightAlternative,
    Lip,
    Rip,
    InverseProperty,
    Moufang,
    Extra,
    Steiner,
    SquaresCentral,
    SquaresNuclear,
    CLoop,
    Exponent(usize),
}

impl Identity {
    /// Everything `cmd_check` reports, in display order.
    pub const REPORTED: [Identity; 14] = [
        Identity::CLoop,
        Identity::Associative,
        Identity::Commutative,
        Identity::Flexible,
        Identity::LeftAlternative,
        Identity::RightAlternative,
        Identity::Lip,
        Identity::Rip,
        Identity::InverseProperty,
        Identity::Moufang,
        Identity::Extra,
        Identity::Steiner,
        Identity::SquaresCentral,
        Identity::SquaresNuclear,
    ];
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Identity::Associative => "associative",
            Identity::Commutative => "commutative",
            Identity::Flexible => "flexible",
            Identity::LeftAlternative => "left_alternative",
            Identity::RightAlternative => "right_alternative",
            Identity::Lip => "lip",
            Identity::Rip => "rip",
            Identity::InverseProperty => "inverse_property",
            Identity::Moufang => "moufang",
            Identity::Extra => "extra",
            Identity::Steiner => "steiner",
            Identity::SquaresCentral => "squares_central",
            Identity::SquaresNuclear => "squares_nuclear",
            Identity::CLoop => "c_loop",
            Identity::Exponent(k) => return write!(f, "exponent({k})"),
        };
        f.write_str(name)
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Ok(match s {
            "associative" => Identity::Associative,
            "commutative" => Identity::Commutative,
            "flexible" => Identity::Flexible,
            "left_alternative" => Identity::LeftAlternative,
            "right_alternative" => Identity::RightAlternative,
            "lip" => Identity::Lip,
            "rip" => Identity::Rip,
            "inverse_property" => Identity::InverseProperty,
            "moufang" => Identity::Moufang,
            "extra" => Identity::Extra,
            "steiner" => Identity::Steiner,
            "squares_central" => Identity::SquaresCentral,
            "squares_nuclear" => Identity::SquaresNuclear,
            "c_loop" | "c" => Identity::CLoop,
            _ => {
                let k = s
                    .strip_prefix("exponent(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|k| k.trim().parse::<usize>().ok())
                    .filter(|&k| k > 0)
                    .ok_or_else(|| Error::UnknownIdentity(s.to_string()))?;
                Identity::Exponent(k)
            }
        })
    }
}

fn forall2(l: &LoopTable, pred: impl Fn(Element, Element) -> bool) -> IdentityReport {
    for x in l.elements() {
        for y in l.elements() {
            if !pred(x, y) {
                return IdentityReport::fail(vec![x, y]);
            }
        }
    }
    IdentityReport::ok()
}

fn forall3(l: &LoopTable, pred: impl Fn(Element, Element, Element) -> bool) -> IdentityReport {
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                if !pred(x, y, z) {
                    return IdentityReport::fail(vec![x, y, z]);
                }
            }
        }
    }
    IdentityReport::ok()
}

fn forall1(l: &LoopTable, pred: impl Fn(Element) -> bool) -> IdentityReport {
    match l.elements().find(|&x| !pred(x)) {
        Some(x) => IdentityReport::fail(vec![x]),
        None => IdentityReport::ok(),
    }
}

/// `x(y·yz) = (xy·y)z` for all triples.
pub fn is_c_loop(l: &LoopTable) -> IdentityReport {
    forall3(l, |x, y, z| l.mul(x, l.mul(y, l.mul(y, z))) == l.mul(l.mul(l.mul(x, y), y), z))
}

/// Inverse property plus every square in the nucleus. Independent of
/// [`is_c_loop`], which it must always agree with.
pub fn is_c_loop_structural(l: &LoopTable) -> IdentityReport {
    check(l, Identity::InverseProperty).and_then(|| check(l, Identity::SquaresNuclear))
}

pub fn check_named(l: &LoopTable, name: &str) -> Result<IdentityReport> {
    Ok(check(l, name.parse()?))
}

pub fn check(l: &LoopTable, identity: Identity) -> IdentityReport {
    let m = |x, y| l.mul(x, y);
    match identity {
        Identity::Associative => forall3(l, |x, y, z| m(m(x, y), z) == m(x, m(y, z))),
        Identity::Commutative => forall2(l, |x, y| m(x, y) == m(y, x)),
        Identity::Flexible => forall2(l, |x, y| m(x, m(y, x)) == m(m(x, y), x)),
        Identity::LeftAlternative => forall2(l, |x, y| m(x, m(x, y)) == m(m(x, x), y)),
        Identity::RightAlternative => forall2(l, |x, y| m(m(y, x), x) == m(y, m(x, x))),
        Identity::Lip => forall2(l, |x, y| m(l.left_inverse(x), m(x, y)) == y),
        Identity::Rip => forall2(l, |x, y| m(m(y, x), l.right_inverse(x)) == y),
        Identity::InverseProperty => check(l, Identity::Lip).and_then(|| check(l, Identity::Rip)),
        Identity::Moufang => forall3(l, |x, y, z| m(m(x, y), m(z, x)) == m(x, m(m(y, z), x))),
        Identity::Extra => check(l, Identity::Moufang).and_then(|| is_c_loop(l)),
        Identity::Steiner => check(l, Identity::InverseProperty).and_then(|| check(l, Identity::Exponent(2))),
        Identity::SquaresCentral => {
            let center = l.mask(&invariants::center(l));
            forall1(l, |x| center[m(x, x)])
        }
        Identity::SquaresNuclear => {
            let nucleus = l.mask(&invariants::nuclei(l).nucleus);
            forall1(l, |x| nucleus[m(x, x)])
        }
        Identity::CLoop => is_c_loop(l),
        Identity::Exponent(k) => forall1(l, |x| l.power(x, k) == 0),
    }
}

/// `(xy)^3 = y^3 x^3` with left-associated cubes.
pub fn cube_antiautomorphism(l: &LoopTable) -> IdentityReport {
    forall2(l, |x, y| l.power(l.mul(x, y), 3) == l.mul(l.power(y, 3), l.power(x, 3)))
}

/// `(xy)^2 = (yx)^2` for all pairs.
pub fn product_squares_symmetric(l: &LoopTable) -> IdentityReport {
    forall2(l, |x, y| {
        let (p, q) = (l.mul(x, y), l.mul(y, x));
        l.mul(p, p) == l.mul(q, q)
    })
}
