//! Shared generators for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use cloop::abelian::{AbelianGroup, ThetaMap};
use cloop::extension::{FactorSet, ValidFactorSet};
use cloop::steiner::{self, SteinerTripleSystem, TripleChoice};
use cloop::{cayley_dickson, fixtures, groups, LoopTable, SignedTable};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// A random loop of order `n` with identity 0, filled by randomized backtracking.
pub fn random_loop(rng: &mut StdRng, n: usize) -> LoopTable {
    let mut cells = vec![usize::MAX; n * n];
    for i in 0..n {
        cells[i] = i;
        cells[i * n] = i;
    }
    fn fill(cells: &mut [usize], n: usize, pos: usize, rng: &mut StdRng) -> bool {
        if pos == n * n {
            return true;
        }
        let (r, c) = (pos / n, pos % n);
        if r == 0 || c == 0 {
            return fill(cells, n, pos + 1, rng);
        }
        let mut candidates: Vec<usize> = (0..n)
            .filter(|&v| (0..c).all(|j| cells[r * n + j] != v) && (0..r).all(|i| cells[i * n + c] != v))
            .collect();
        candidates.shuffle(rng);
        for v in candidates {
            cells[pos] = v;
            if fill(cells, n, pos + 1, rng) {
                return true;
            }
        }
        cells[pos] = usize::MAX;
        false
    }
    assert!(fill(&mut cells, n, 0, rng));
    LoopTable::from_fn(n, |x, y| cells[x * n + y]).unwrap()
}

/// An isomorphic copy of `l` under a random permutation fixing 0.
pub fn relabel(rng: &mut StdRng, l: &LoopTable) -> LoopTable {
    let mut phi: Vec<usize> = (1..l.order()).collect();
    phi.shuffle(rng);
    phi.insert(0, 0);
    let mut inv = vec![0; l.order()];
    for (x, &y) in phi.iter().enumerate() {
        inv[y] = x;
    }
    LoopTable::from_fn(l.order(), |x, y| phi[l.mul(inv[x], inv[y])]).unwrap()
}

pub fn fano_loop() -> LoopTable {
    steiner::steiner_loop(&SteinerTripleSystem::fano())
}

/// Steiner loops of orders 4, 8 and 10.
pub fn steiner_quotients() -> Vec<(&'static str, LoopTable)> {
    vec![("klein", groups::klein()), ("fano", fano_loop()), ("steiner10", fixtures::steiner10())]
}

pub fn kernels() -> Vec<AbelianGroup> {
    [vec![2], vec![3], vec![4], vec![2, 2], vec![6]].into_iter().map(|f| AbelianGroup::new(f).unwrap()).collect()
}

/// A central factor set over a Steiner loop with random diagonal and random
/// per-triple orientation and free value.
pub fn random_block_factor_set(
    rng: &mut StdRng,
    q: &LoopTable,
    k: &AbelianGroup,
    zero_diagonal: bool,
) -> ValidFactorSet {
    let n = q.order();
    let mut diag = vec![0; n];
    if !zero_diagonal {
        for d in diag.iter_mut().skip(1) {
            *d = rng.gen_range(0..k.order());
        }
    }
    let mut choices = BTreeMap::new();
    for t in steiner::steiner_triples(q) {
        let mut pts = t;
        pts.shuffle(rng);
        choices.insert(t, TripleChoice { u: pts[0], v: pts[1], d: rng.gen_range(0..k.order()) });
    }
    steiner::factor_set_from_blocks(q, k, &diag, &choices).unwrap()
}

/// A random normalized `f` (no cocycle condition).
pub fn random_normalized_f(rng: &mut StdRng, q: &LoopTable, k: &AbelianGroup, zero_diagonal: bool) -> Vec<Vec<usize>> {
    let n = q.order();
    let mut f = vec![vec![0; n]; n];
    for (x, row) in f.iter_mut().enumerate().skip(1) {
        for (y, v) in row.iter_mut().enumerate().skip(1) {
            if !(zero_diagonal && x == y) {
                *v = rng.gen_range(0..k.order());
            }
        }
    }
    f
}

/// Nonzero homomorphisms `Q -> Z_2`, as the images of each element.
pub fn characters(q: &LoopTable) -> Vec<Vec<usize>> {
    let n = q.order();
    let mut out = Vec::new();
    for mask in 1u32..(1 << (n - 1)) {
        let chi: Vec<usize> = (0..n).map(|x| if x == 0 { 0 } else { ((mask >> (x - 1)) & 1) as usize }).collect();
        if q.elements().all(|x| q.elements().all(|y| chi[q.mul(x, y)] == (chi[x] + chi[y]) % 2)) {
            out.push(chi);
        }
    }
    out
}

/// `θ_x = (-1)^{χ(x)}` with `f = 0`: a semidirect product.
pub fn twisted_factor_set(q: &LoopTable, k: &AbelianGroup, chi: &[usize]) -> ValidFactorSet {
    let id: Vec<usize> = k.elements().collect();
    let neg = k.negation().images().to_vec();
    let images = chi.iter().map(|&c| if c == 0 { id.clone() } else { neg.clone() }).collect();
    let theta = ThetaMap::from_images(k, q, images).unwrap();
    let n = q.order();
    FactorSet::new(k.clone(), q.clone(), theta, vec![vec![0; n]; n]).unwrap().validate().unwrap()
}

/// Named C-loops shipped with or built by the library.
pub fn c_loop_corpus() -> Vec<(String, LoopTable)> {
    let mut out: Vec<(String, LoopTable)> = vec![
        ("trivial".into(), LoopTable::trivial()),
        ("steiner10".into(), fixtures::steiner10()),
        ("table1_16".into(), fixtures::table1_16()),
        ("sedenion_table2".into(), fixtures::sedenion_table2()),
        ("klein".into(), groups::klein()),
        ("quaternion".into(), groups::quaternion()),
        ("s3".into(), groups::symmetric(3)),
        ("z2^3".into(), groups::elementary_abelian_2(3)),
        ("fano".into(), fano_loop()),
        ("klein16".into(), steiner::klein16()),
        ("s3 x steiner10".into(), groups::symmetric(3).direct_product(&fixtures::steiner10())),
    ];
    for n in 2..=8 {
        out.push((format!("z{n}"), groups::cyclic(n)));
    }
    for level in 0..=5 {
        out.push((format!("cd level {level}"), SignedTable::level(level).unwrap().signed_loop()));
    }
    for n in [3, 4, 5, 6] {
        out.push((format!("assoc {n}"), steiner::assoc_loop(n).unwrap()));
    }
    out.push(("sedenion".into(), cayley_dickson::sedenion_loop()));
    out
}
