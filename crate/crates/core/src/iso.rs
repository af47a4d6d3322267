//! Isomorphism search between small loops.
//!
//! Backtracking over a generating set of the first loop. Each generator is
//! only sent to elements with the same invariant fingerprint, and every
//! assignment is immediately propagated to the subloop the assigned
//! generators span, so contradictions prune early.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::table::{Element, LoopTable};

pub const DEFAULT_SEARCH_BOUND: usize = 64;

/// Per-element data preserved by every isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Fingerprint {
    order: usize,
    square_order: usize,
    commuting: usize,
    left_alternative: usize,
    power_of_two_order: usize,
}

fn fingerprints(t: &LoopTable) -> Vec<Fingerprint> {
    t.elements()
        .map(|x| {
            let sq = t.mul(x, x);
            // order of x^(2^k) for the largest 2^k dividing the order
            let order = t.element_order(x);
            let mut p = x;
            let mut steps = order;
            while steps.is_multiple_of(2) && steps > 1 {
                p = t.mul(p, p);
                steps /= 2;
            }
            Fingerprint {
                order,
                square_order: t.element_order(sq),
                commuting: t.elements().filter(|&y| t.mul(x, y) == t.mul(y, x)).count(),
                left_alternative: t.elements().filter(|&y| t.mul(x, t.mul(x, y)) == t.mul(sq, y)).count(),
                power_of_two_order: t.element_order(p),
            }
        })
        .collect()
}

/// Searches for an isomorphism `a -> b` with the default order bound.
pub fn find_isomorphism(a: &LoopTable, b: &LoopTable) -> Result<Option<Vec<Element>>> {
    find_isomorphism_bounded(a, b, DEFAULT_SEARCH_BOUND)
}

/// Returns `Some(phi)` with `phi[x*y] = phi[x]*phi[y]`, or `None` if the
/// loops are not isomorphic. Loops larger than `bound` are refused.
pub fn find_isomorphism_bounded(a: &LoopTable, b: &LoopTable, bound: usize) -> Result<Option<Vec<Element>>> {
    let n = a.order();
    if n > bound || b.order() > bound {
        return Err(Error::TooLarge { n: n.max(b.order()), bound });
    }
    if n != b.order() {
        return Ok(None);
    }
    let fa = fingerprints(a);
    let fb = fingerprints(b);
    let mut sa = fa.clone();
    let mut sb = fb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }
    let mut classes: HashMap<Fingerprint, Vec<Element>> = HashMap::new();
    for (y, f) in fb.iter().enumerate() {
        classes.entry(*f).or_default().push(y);
    }

    // generators, preferring elements with few candidate images
    let mut gens = Vec::new();
    let mut span = a.subloop_generated(&[]);
    while span.len() < n {
        let inside = a.mask(&span);
        let g =
            a.elements().filter(|&x| !inside[x]).min_by_key(|&x| (classes[&fa[x]].len(), x)).expect("span is proper");
        gens.push(g);
        span = a.subloop_generated(&gens);
    }

    let search = Search { a, b, fa: &fa, fb: &fb, classes: &classes, gens: &gens };
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    if fa[0] != fb[0] {
        return Ok(None);
    }
    let found = search.dfs(0, map, used, vec![0]);
    Ok(found.filter(|phi| is_isomorphism(a, b, phi)))
}

struct Search<'a> {
    a: &'a LoopTable,
    b: &'a LoopTable,
    fa: &'a [Fingerprint],
    fb: &'a [Fingerprint],
    classes: &'a HashMap<Fingerprint, Vec<Element>>,
    gens: &'a [Element],
}

impl Search<'_> {
    fn dfs(&self, k: usize, map: Vec<Element>, used: Vec<bool>, domain: Vec<Element>) -> Option<Vec<Element>> {
        if k == self.gens.len() {
            return Some(map);
        }
        let g = self.gens[k];
        for &c in &self.classes[&self.fa[g]] {
            if used[c] {
                continue;
            }
            let mut map2 = map.clone();
            let mut used2 = used.clone();
            let mut domain2 = domain.clone();
            map2[g] = c;
            used2[c] = true;
            domain2.push(g);
            if self.propagate(&mut map2, &mut used2, &mut domain2) {
                if let Some(m) = self.dfs(k + 1, map2, used2, domain2) {
                    return Some(m);
                }
            }
        }
        None
    }

    // Extends the partial map to the subloop generated by its domain.
    fn propagate(&self, map: &mut [Element], used: &mut [bool], domain: &mut Vec<Element>) -> bool {
        let mut done = 0;
        while done < domain.len() {
            let p = domain[done];
            for j in 0..=done {
                let q = domain[j];
                for (x, y) in [(p, q), (q, p)] {
                    let r = self.a.mul(x, y);
                    let image = self.b.mul(map[x], map[y]);
                    if map[r] == usize::MAX {
                        if used[image] || self.fa[r] != self.fb[image] {
                            return false;
                        }
                        map[r] = image;
                        used[image] = true;
                        domain.push(r);
                    } else if map[r] != image {
                        return false;
                    }
                }
            }
            done += 1;
        }
        true
    }
}

/// Whether `phi` is a bijection `a -> b` preserving products.
pub fn is_isomorphism(a: &LoopTable, b: &LoopTable, phi: &[Element]) -> bool {
    let n = a.order();
    if b.order() != n || phi.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in phi {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    a.elements().all(|x| a.elements().all(|y| phi[a.mul(x, y)] == b.mul(phi[x], phi[y])))
}

pub fn are_isomorphic(a: &LoopTable, b: &LoopTable) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}
