//! Finite abelian groups `Z_{n_1} x ... x Z_{n_k}`, written additively.
//!
//! Elements cross module boundaries as linear indices: the residue tuple
//! `(e_1, ..., e_k)` read as a row-major mixed-radix number (so `e_k` varies
//! fastest). Index 0 is the zero element.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::table::{gcd, lcm, Element, LoopTable};

/// Linear index of an element of an [`AbelianGroup`].
pub type GroupElement = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<usize>,
    order: usize,
}

impl AbelianGroup {
    /// The factor sequence is kept as given; `(2, 2)` and `(4)` are different groups.
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::Dimension(format!("bad cyclic factors {factors:?}")));
        }
        let order = factors.iter().product();
        Ok(AbelianGroup { factors, order })
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new(vec![n]).expect("cyclic factor must be positive")
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<GroupElement> {
        0..self.order
    }

    pub fn residues(&self, a: GroupElement) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        let mut rest = a;
        for (slot, &m) in out.iter_mut().zip(&self.factors).rev() {
            *slot = rest % m;
            rest /= m;
        }
        out
    }

    /// Linear index of a residue tuple; residues are reduced modulo their factor.
    pub fn index_of(&self, residues: &[usize]) -> GroupElement {
        assert_eq!(residues.len(), self.factors.len(), "residue tuple has wrong length");
        residues.iter().zip(&self.factors).fold(0, |acc, (&e, &m)| acc * m + e % m)
    }

    pub fn add(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.zip_with(a, b, |x, y, m| (x + y) % m)
    }

    pub fn sub(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.zip_with(a, b, |x, y, m| (x + m - y) % m)
    }

    pub fn neg(&self, a: GroupElement) -> GroupElement {
        self.sub(0, a)
    }

    /// `m · a` for any integer `m`.
    pub fn scalar(&self, m: i64, a: GroupElement) -> GroupElement {
        let r = self.residues(a);
        let scaled: Vec<usize> =
            r.iter().zip(&self.factors).map(|(&e, &n)| (m.rem_euclid(n as i64) as usize * e) % n).collect();
        self.index_of(&scaled)
    }

    pub fn sum(&self, terms: impl IntoIterator<Item = GroupElement>) -> GroupElement {
        terms.into_iter().fold(0, |acc, t| self.add(acc, t))
    }

    fn zip_with(&self, a: GroupElement, b: GroupElement, f: impl Fn(usize, usize, usize) -> usize) -> GroupElement {
        let (ra, rb) = (self.residues(a), self.residues(b));
        let r: Vec<usize> = ra.iter().zip(&rb).zip(&self.factors).map(|((&x, &y), &m)| f(x, y, m)).collect();
        self.index_of(&r)
    }

    pub fn element_order(&self, a: GroupElement) -> usize {
        self.residues(a).iter().zip(&self.factors).map(|(&e, &m)| m / gcd(e, m)).fold(1, lcm)
    }

    pub fn exponent(&self) -> usize {
        self.factors.iter().copied().fold(1, lcm)
    }

    /// Every nonzero element has order 2 (the trivial group counts too).
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.exponent() <= 2
    }

    /// The group as a loop table on its linear indices.
    pub fn table(&self) -> LoopTable {
        LoopTable::from_fn(self.order, |a, b| self.add(a, b)).expect("abelian group is a loop")
    }

    pub fn identity_automorphism(&self) -> Automorphism {
        Automorphism { images: Permutation::identity(self.order) }
    }

    pub fn negation(&self) -> Automorphism {
        Automorphism { images: Permutation::from_images_unchecked(self.elements().map(|a| self.neg(a)).collect()) }
    }

    /// Checks `images` is a permutation with `φ(a + b) = φ(a) + φ(b)`.
    pub fn validate_automorphism(&self, images: Vec<GroupElement>) -> Result<Automorphism> {
        if images.len() != self.order {
            return Err(Error::Dimension(format!("automorphism has {} images, |K| = {}", images.len(), self.order)));
        }
        let images = Permutation::from_images(images)?;
        for a in self.elements() {
            for b in self.elements() {
                if images.apply(self.add(a, b)) != self.add(images.apply(a), images.apply(b)) {
                    return Err(Error::NotAdditive(a, b));
                }
            }
        }
        Ok(Automorphism { images })
    }

    /// Decomposes an abelian group given by its table into cyclic factors.
    ///
    /// Returns the group and `embed`, where `embed[i]` is the table element
    /// corresponding to linear index `i`. Generators are picked greedily by
    /// decreasing order among elements independent of those already chosen,
    /// backtracking if that greedy choice cannot be completed.
    pub fn decompose(table: &LoopTable) -> Result<(AbelianGroup, Vec<Element>)> {
        let n = table.order();
        for x in table.elements() {
            for y in table.elements() {
                if table.mul(x, y) != table.mul(y, x) {
                    return Err(Error::NotAbelian);
                }
                for z in table.elements() {
                    if table.mul(table.mul(x, y), z) != table.mul(x, table.mul(y, z)) {
                        return Err(Error::NotAbelian);
                    }
                }
            }
        }
        if n == 1 {
            return Ok((AbelianGroup::cyclic(1), vec![0]));
        }
        let mut by_order: Vec<Element> = (1..n).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(table.element_order(x)), x));
        let mut gens = Vec::new();
        let span = vec![0];
        if !extend_basis(table, &by_order, &mut gens, span) {
            unreachable!("every finite abelian group has a cyclic decomposition");
        }
        let factors: Vec<usize> = gens.iter().map(|&g| table.element_order(g)).collect();
        let group = AbelianGroup::new(factors)?;
        let embed = group
            .elements()
            .map(|i| group.residues(i).iter().zip(&gens).fold(0, |acc, (&e, &g)| table.mul(acc, table.power(g, e))))
            .collect();
        Ok((group, embed))
    }
}

// `span` is the subgroup generated by `gens`, as a list.
fn extend_basis(table: &LoopTable, candidates: &[Element], gens: &mut Vec<Element>, span: Vec<Element>) -> bool {
    if span.len() == table.order() {
        return true;
    }
    let inside = table.mask(&span);
    for &g in candidates {
        if inside[g] {
            continue;
        }
        let order = table.element_order(g);
        // <g> meets the span only in 0
        let cyclic: Vec<Element> = (1..order).map(|k| table.power(g, k)).collect();
        if cyclic.iter().any(|&c| inside[c]) {
            continue;
        }
        let mut next = Vec::with_capacity(span.len() * order);
        for &s in &span {
            next.push(s);
            for &c in &cyclic {
                next.push(table.mul(s, c));
            }
        }
        gens.push(g);
        if extend_basis(table, candidates, gens, next) {
            return true;
        }
        gens.pop();
    }
    false
}

/// An additive bijection of an [`AbelianGroup`], stored as a permutation of
/// linear indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    images: Permutation,
}

impl Automorphism {
    #[inline]
    pub fn apply(&self, a: GroupElement) -> GroupElement {
        self.images.apply(a)
    }

    pub fn images(&self) -> &[GroupElement] {
        self.images.images()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { images: self.images.compose(&other.images) }
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism { images: self.images.inverse() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_identity()
    }
}

/// A homomorphism `θ: Q -> Aut(K)`, one automorphism per element of `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaMap {
    maps: Vec<Automorphism>,
}

impl ThetaMap {
    /// `θ_x = id` for every `x`.
    pub fn trivial(k: &AbelianGroup, q_order: usize) -> Self {
        ThetaMap { maps: vec![k.identity_automorphism(); q_order] }
    }

    /// Checks `θ_0 = id` and `θ_{xy} = θ_x ∘ θ_y` for all `x, y` in `Q`.
    pub fn new(k: &AbelianGroup, q: &LoopTable, maps: Vec<Automorphism>) -> Result<Self> {
        if maps.len() != q.order() {
            return Err(Error::Dimension(format!("theta has {} maps, |Q| = {}", maps.len(), q.order())));
        }
        if let Some(m) = maps.iter().find(|m| m.images().len() != k.order()) {
            return Err(Error::Dimension(format!("automorphism of degree {}, |K| = {}", m.images().len(), k.order())));
        }
        if !maps[0].is_identity() {
            return Err(Error::NotHomomorphism(0, 0));
        }
        for x in q.elements() {
            for y in q.elements() {
                if maps[q.mul(x, y)] != maps[x].compose(&maps[y]) {
                    return Err(Error::NotHomomorphism(x, y));
                }
            }
        }
        Ok(ThetaMap { maps })
    }

    /// Validates raw image lists as automorphisms, then as a homomorphism.
    pub fn from_images(k: &AbelianGroup, q: &LoopTable, images: Vec<Vec<GroupElement>>) -> Result<Self> {
        let maps = images.into_iter().map(|im| k.validate_automorphism(im)).collect::<Result<Vec<_>>>()?;
        Self::new(k, q, maps)
    }

    #[inline]
    pub fn get(&self, x: Element) -> &Automorphism {
        &self.maps[x]
    }

    #[inline]
    pub fn apply(&self, x: Element, a: GroupElement) -> GroupElement {
        self.maps[x].apply(a)
    }

    pub fn maps(&self) -> &[Automorphism] {
        &self.maps
    }

    pub fn is_trivial(&self) -> bool {
        self.maps.iter().all(Automorphism::is_identity)
    }
}
