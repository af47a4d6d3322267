//! Structured results of `cloop check`, rendered as text or JSON.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::identities::{self, Identity, IdentityReport};
use crate::invariants::{self, NucleusReport};
use crate::table::{Element, LoopTable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityEntry {
    pub name: String,
    #[serde(flatten)]
    pub report: IdentityReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub order: usize,
    pub identities: Vec<IdentityEntry>,
    /// Absent when only a single identity was requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub invariants: Option<Invariants>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub nuclei: NucleusReport,
    pub center: Vec<Element>,
    pub exponent: usize,
    /// Orders of all associators; absent if some element lacks a two-sided inverse.
    pub associator_orders: Option<Vec<usize>>,
}

impl Report {
    /// Every reported identity plus nuclei, center, exponent and associator orders.
    pub fn full(l: &LoopTable) -> Self {
        let identities = Identity::REPORTED.iter().map(|&id| entry(l, id)).collect();
        let invariants = Invariants {
            nuclei: invariants::nuclei(l),
            center: invariants::center(l),
            exponent: l.exponent(),
            associator_orders: invariants::associator_order_spectrum(l).ok().map(|s| s.into_iter().collect()),
        };
        Report { order: l.order(), identities, invariants: Some(invariants) }
    }

    pub fn only(l: &LoopTable, id: Identity) -> Self {
        Report { order: l.order(), identities: vec![entry(l, id)], invariants: None }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

fn entry(l: &LoopTable, id: Identity) -> IdentityEntry {
    IdentityEntry { name: id.to_string(), report: identities::check(l, id) }
}

fn set(s: &[Element]) -> String {
    let items: Vec<String> = s.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order: {}", self.order)?;
        for e in &self.identities {
            match &e.report.witness {
                None => writeln!(f, "{}: yes", e.name)?,
                Some(w) => writeln!(f, "{}: no (witness {:?})", e.name, w)?,
            }
        }
        if let Some(inv) = &self.invariants {
            writeln!(f, "left nucleus: {}", set(&inv.nuclei.left))?;
            writeln!(f, "middle nucleus: {}", set(&inv.nuclei.middle))?;
            writeln!(f, "right nucleus: {}", set(&inv.nuclei.right))?;
            writeln!(f, "nucleus: {} (size {})", set(&inv.nuclei.nucleus), inv.nuclei.nucleus.len())?;
            writeln!(f, "center: {} (size {})", set(&inv.center), inv.center.len())?;
            writeln!(f, "exponent: {}", inv.exponent)?;
            match &inv.associator_orders {
                Some(orders) => writeln!(f, "associator orders: {}", set(orders))?,
                None => writeln!(f, "associator orders: undefined (no inverse property)")?,
            }
        }
        Ok(())
    }
}
