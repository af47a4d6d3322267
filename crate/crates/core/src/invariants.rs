//! Nuclei, center, associators and normal subloops.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{Element, LoopTable};

pub const DEFAULT_NORMAL_BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NucleusReport {
    pub left: Vec<Element>,
    pub middle: Vec<Element>,
    pub right: Vec<Element>,
    pub nucleus: Vec<Element>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociatorRecord {
    pub x: Element,
    pub y: Element,
    pub z: Element,
    pub value: Element,
    pub order: usize,
}

pub fn nuclei(l: &LoopTable) -> NucleusReport {
    let m = |x, y| l.mul(x, y);
    let all_pairs = |pred: &dyn Fn(Element, Element) -> bool| l.elements().all(|x| l.elements().all(|y| pred(x, y)));
    let left: Vec<Element> = l.elements().filter(|&a| all_pairs(&|x, y| m(a, m(x, y)) == m(m(a, x), y))).collect();
    let middle: Vec<Element> = l.elements().filter(|&a| all_pairs(&|x, y| m(x, m(a, y)) == m(m(x, a), y))).collect();
    let right: Vec<Element> = l.elements().filter(|&a| all_pairs(&|x, y| m(x, m(y, a)) == m(m(x, y), a))).collect();
    let (lm, mm, rm) = (l.mask(&left), l.mask(&middle), l.mask(&right));
    let nucleus = l.elements().filter(|&a| lm[a] && mm[a] && rm[a]).collect();
    NucleusReport { left, middle, right, nucleus }
}

/// Nuclear elements commuting with everything.
pub fn center(l: &LoopTable) -> Vec<Element> {
    nuclei(l).nucleus.into_iter().filter(|&a| l.elements().all(|x| l.mul(a, x) == l.mul(x, a))).collect()
}

/// `[x,y,z] = (xy·z)^{-1} · (x·yz)`.
pub fn associator(l: &LoopTable, x: Element, y: Element, z: Element) -> Result<Element> {
    let left = l.mul(l.mul(x, y), z);
    let right = l.mul(x, l.mul(y, z));
    Ok(l.mul(l.inv(left)?, right))
}

pub fn associator_record(l: &LoopTable, x: Element, y: Element, z: Element) -> Result<AssociatorRecord> {
    let value = associator(l, x, y, z)?;
    Ok(AssociatorRecord { x, y, z, value, order: l.element_order(value) })
}

/// Orders of all associators.
pub fn associator_order_spectrum(l: &LoopTable) -> Result<BTreeSet<usize>> {
    let mut orders = BTreeSet::new();
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                orders.insert(l.element_order(associator(l, x, y, z)?));
            }
        }
    }
    Ok(orders)
}

/// First triple (lexicographically) whose associator has the given order.
pub fn find_associator_of_order(l: &LoopTable, order: usize) -> Result<Option<AssociatorRecord>> {
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                let rec = associator_record(l, x, y, z)?;
                if rec.order == order {
                    return Ok(Some(rec));
                }
            }
        }
    }
    Ok(None)
}

/// Whether `set` is a subloop on which the product is commutative and associative.
pub fn is_abelian_group(l: &LoopTable, set: &[Element]) -> bool {
    l.is_subloop(set)
        && set.iter().all(|&a| {
            set.iter().all(|&b| {
                l.mul(a, b) == l.mul(b, a) && set.iter().all(|&c| l.mul(l.mul(a, b), c) == l.mul(a, l.mul(b, c)))
            })
        })
}

pub fn normal_subloops(l: &LoopTable) -> Result<Vec<Vec<Element>>> {
    normal_subloops_bounded(l, DEFAULT_NORMAL_BOUND)
}

/// All normal subloops, sorted by size and then lexicographically.
///
/// Every normal subloop is the join of the normal closures of its elements,
/// so closing the single-element closures under joins enumerates them all.
pub fn normal_subloops_bounded(l: &LoopTable, bound: usize) -> Result<Vec<Vec<Element>>> {
    if l.order() > bound {
        return Err(Error::TooLarge { n: l.order(), bound });
    }
    let mut seeds: Vec<Vec<Element>> = Vec::new();
    for x in l.elements() {
        let c = l.normal_closure(&[x]);
        if !seeds.contains(&c) {
            seeds.push(c);
        }
    }
    let mut found: HashSet<Vec<Element>> = seeds.iter().cloned().collect();
    let mut queue: Vec<Vec<Element>> = seeds.clone();
    while let Some(s) = queue.pop() {
        let mask = l.mask(&s);
        for seed in &seeds {
            if seed.iter().all(|&e| mask[e]) {
                continue;
            }
            let joined = join(l, &s, seed);
            if found.insert(joined.clone()) {
                queue.push(joined);
            }
        }
    }
    let mut out: Vec<Vec<Element>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn join(l: &LoopTable, a: &[Element], b: &[Element]) -> Vec<Element> {
    let gens: Vec<Element> = a.iter().chain(b).copied().collect();
    let generated = l.subloop_generated(&gens);
    if l.is_normal(&generated).unwrap_or(false) {
        generated
    } else {
        l.normal_closure(&generated)
    }
}

/// Exactly two normal subloops: `{0}` and the whole loop.
pub fn is_simple(l: &LoopTable) -> bool {
    l.order() > 1 && (1..l.order()).all(|x| l.normal_closure(&[x]).len() == l.order())
}
