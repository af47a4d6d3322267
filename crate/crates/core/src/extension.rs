//! C-factor sets `(θ, f)` over an abelian group `K` and a C-loop `Q`.
//!
//! `K` is written additively. A pair is a C-factor set when
//!
//! ```text
//! f(x,0) = 0 = f(0,x)
//! θ_{xy} f(y,z) + θ_x f(y,yz) + f(x, y·yz) = f(x,y) + f(xy,y) + f(xy·y, z)
//! ```
//!
//! and then `(a,x)(b,y) = (a + θ_x b + f(x,y), xy)` is a C-loop on `K x Q`
//! in which `K` is nuclear and normal. Extension elements are numbered
//! `(a, x) -> a·|Q| + x`.

use crate::abelian::{AbelianGroup, GroupElement, ThetaMap};
use crate::error::{Error, Result};
use crate::identities::{self, Identity, IdentityReport};
use crate::invariants;
use crate::table::{Element, LoopTable, Quotient};

/// A candidate factor set. Shapes are checked on construction; the cocycle
/// conditions only by [`FactorSet::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    k: AbelianGroup,
    q: LoopTable,
    theta: ThetaMap,
    // row-major |Q| x |Q|
    f: Vec<GroupElement>,
}

/// A factor set that passed [`FactorSet::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidFactorSet(FactorSet);

impl std::ops::Deref for ValidFactorSet {
    type Target = FactorSet;

    fn deref(&self) -> &FactorSet {
        &self.0
    }
}

impl ValidFactorSet {
    pub fn into_inner(self) -> FactorSet {
        self.0
    }
}

impl FactorSet {
    pub fn new(k: AbelianGroup, q: LoopTable, theta: ThetaMap, f: Vec<Vec<GroupElement>>) -> Result<Self> {
        let n = q.order();
        if f.len() != n || f.iter().any(|row| row.len() != n) {
            return Err(Error::Dimension(format!("f must be {n}x{n}")));
        }
        if theta.maps().len() != n || theta.maps().iter().any(|m| m.images().len() != k.order()) {
            return Err(Error::Dimension("theta does not match K and Q".into()));
        }
        let flat: Vec<GroupElement> = f.into_iter().flatten().collect();
        if let Some(&bad) = flat.iter().find(|&&v| v >= k.order()) {
            return Err(Error::Dimension(format!("f value {bad} is not an element of K")));
        }
        Ok(FactorSet { k, q, theta, f: flat })
    }

    /// `θ = id` with the given `f`.
    pub fn central(k: AbelianGroup, q: LoopTable, f: Vec<Vec<GroupElement>>) -> Result<Self> {
        let theta = ThetaMap::trivial(&k, q.order());
        Self::new(k, q, theta, f)
    }

    /// `θ = id`, `f = 0`: the direct product `K x Q`.
    pub fn split(k: AbelianGroup, q: LoopTable) -> Self {
        let n = q.order();
        Self::central(k, q, vec![vec![0; n]; n]).expect("zero factor set has the right shape")
    }

    pub fn k(&self) -> &AbelianGroup {
        &self.k
    }

    pub fn q(&self) -> &LoopTable {
        &self.q
    }

    pub fn theta(&self) -> &ThetaMap {
        &self.theta
    }

    #[inline]
    pub fn f(&self, x: Element, y: Element) -> GroupElement {
        self.f[x * self.q.order() + y]
    }

    pub fn f_rows(&self) -> Vec<Vec<GroupElement>> {
        self.f.chunks(self.q.order()).map(|r| r.to_vec()).collect()
    }

    pub fn f_flat(&self) -> &[GroupElement] {
        &self.f
    }

    /// Copy with one entry of `f` replaced.
    pub fn with_entry(&self, x: Element, y: Element, value: GroupElement) -> FactorSet {
        let mut out = self.clone();
        out.f[x * self.q.order() + y] = value % self.k.order();
        out
    }

    pub fn is_central(&self) -> bool {
        self.theta.is_trivial()
    }

    /// `(a,x)(b,y) = (a + θ_x b + f(x,y), xy)` on `K x Q`, whether or not the
    /// cocycle identity holds. Fails only if `f` is not normalized.
    pub fn product_table(&self) -> Result<LoopTable> {
        let n = self.q.order();
        let k = &self.k;
        LoopTable::from_fn(k.order() * n, |u, v| {
            let (a, x, b, y) = (u / n, u % n, v / n, v % n);
            k.sum([a, self.theta.apply(x, b), self.f(x, y)]) * n + self.q.mul(x, y)
        })
    }

    pub fn is_normalized(&self) -> Option<Element> {
        self.q.elements().find(|&x| self.f(x, 0) != 0 || self.f(0, x) != 0)
    }

    /// First triple violating the C-cocycle identity.
    pub fn cocycle_failure(&self) -> Option<(Element, Element, Element)> {
        let (k, q) = (&self.k, &self.q);
        for x in q.elements() {
            for y in q.elements() {
                let xy = q.mul(x, y);
                let xyy = q.mul(xy, y);
                for z in q.elements() {
                    let yz = q.mul(y, z);
                    let lhs = k.sum([
                        self.theta.apply(xy, self.f(y, z)),
                        self.theta.apply(x, self.f(y, yz)),
                        self.f(x, q.mul(y, yz)),
                    ]);
                    let rhs = k.sum([self.f(x, y), self.f(xy, y), self.f(xyy, z)]);
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Checks that `Q` is a C-loop, `f` is normalized and the cocycle
    /// identity holds on every triple.
    pub fn validate(self) -> Result<ValidFactorSet> {
        if !identities::is_c_loop(&self.q).holds {
            return Err(Error::QNotCLoop);
        }
        if let Some(x) = self.is_normalized() {
            return Err(Error::NotNormalized(x));
        }
        if let Some((x, y, z)) = self.cocycle_failure() {
            return Err(Error::CocycleViolation(x, y, z));
        }
        Ok(ValidFactorSet(self))
    }

    /// `2 f(x,y) = 2 f(y,x)` for all pairs; requires `θ = id` and `Q` Steiner.
    pub fn flexibility_criterion(&self) -> Result<bool> {
        if !self.is_central() {
            return Err(Error::NotCentral);
        }
        require_steiner(&self.q)?;
        let k = &self.k;
        Ok(self.q.elements().all(|x| self.q.elements().all(|y| k.scalar(2, self.f(x, y)) == k.scalar(2, self.f(y, x)))))
    }

    pub fn check_cfs2(&self) -> Result<IdentityReport> {
        check_cfs2(&self.k, &self.q, &self.f)
    }

    pub fn check_mk(&self) -> Result<IdentityReport> {
        check_mk(&self.k, &self.q, &self.f)
    }

    pub fn check_q(&self) -> Result<IdentityReport> {
        check_q(&self.k, &self.q, &self.f)
    }
}

/// A built extension loop with its embedded `K` and projection onto `Q`.
#[derive(Debug, Clone)]
pub struct Extension {
    pub table: LoopTable,
    /// `{(a, 0)}`, i.e. the indices `a·|Q|`.
    pub kernel: Vec<Element>,
    /// `projection[(a, x)] = x`.
    pub projection: Vec<Element>,
    q_order: usize,
}

impl Extension {
    #[inline]
    pub fn index(&self, a: GroupElement, x: Element) -> Element {
        a * self.q_order + x
    }

    #[inline]
    pub fn pair(&self, e: Element) -> (GroupElement, Element) {
        (e / self.q_order, e % self.q_order)
    }

    pub fn mul_pairs(&self, u: (GroupElement, Element), v: (GroupElement, Element)) -> (GroupElement, Element) {
        self.pair(self.table.mul(self.index(u.0, u.1), self.index(v.0, v.1)))
    }
}

impl ValidFactorSet {
    pub fn product(&self, (a, x): (GroupElement, Element), (b, y): (GroupElement, Element)) -> (GroupElement, Element) {
        let k = &self.k;
        (k.sum([a, self.theta.apply(x, b), self.f(x, y)]), self.q.mul(x, y))
    }

    pub fn build_extension(&self) -> Extension {
        let n = self.q.order();
        let size = self.k.order() * n;
        let table = self.product_table().expect("a C-factor set defines a loop");
        Extension {
            table,
            kernel: self.k.elements().map(|a| a * n).collect(),
            projection: (0..size).map(|e| e % n).collect(),
            q_order: n,
        }
    }

    /// Two-sided inverse of `(a, x)`, found by solving `(a,x)(b,y) = (0,0)`
    /// over all of `K x Q` and checking the left product too.
    pub fn inverse_in_extension(&self, a: GroupElement, x: Element) -> Result<(GroupElement, Element)> {
        let y = self.q.right_inverse(x);
        let b = self
            .k
            .elements()
            .find(|&b| self.product((a, x), (b, y)) == (0, 0))
            .expect("right division exists in a loop");
        if self.product((b, y), (a, x)) != (0, 0) {
            return Err(Error::NoTwoSidedInverse(a * self.q.order() + x));
        }
        Ok((b, y))
    }

    /// Closed form of the inverse in additive notation:
    /// `(a,x)^{-1} = (θ_{x^{-1}}(-a - f(x, x^{-1})), x^{-1})`.
    pub fn inverse_formula(&self, a: GroupElement, x: Element) -> Result<(GroupElement, Element)> {
        let xi = self.q.inv(x)?;
        let k = &self.k;
        Ok((self.theta.apply(xi, k.neg(k.add(a, self.f(x, xi)))), xi))
    }
}

fn require_steiner(q: &LoopTable) -> Result<()> {
    if identities::check(q, Identity::Steiner).holds {
        Ok(())
    } else {
        Err(Error::QNotSteiner)
    }
}

fn report2(q: &LoopTable, pred: impl Fn(Element, Element) -> bool) -> IdentityReport {
    for x in q.elements() {
        for y in q.elements() {
            if !pred(x, y) {
                return IdentityReport::fail(vec![x, y]);
            }
        }
    }
    IdentityReport::ok()
}

fn check_shape(k: &AbelianGroup, q: &LoopTable, f: &[GroupElement]) -> Result<()> {
    if f.len() != q.order() * q.order() || f.iter().any(|&v| v >= k.order()) {
        return Err(Error::Dimension("f does not match K and Q".into()));
    }
    Ok(())
}

/// `f(y,z) + f(y,yz) = f(x,y) + f(xy,y)` for all triples; `f` is row-major.
pub fn check_cfs2(k: &AbelianGroup, q: &LoopTable, f: &[GroupElement]) -> Result<IdentityReport> {
    check_shape(k, q, f)?;
    let n = q.order();
    let at = |x: Element, y: Element| f[x * n + y];
    for x in q.elements() {
        for y in q.elements() {
            let rhs = k.add(at(x, y), at(q.mul(x, y), y));
            for z in q.elements() {
                if k.add(at(y, z), at(y, q.mul(y, z))) != rhs {
                    return Ok(IdentityReport::fail(vec![x, y, z]));
                }
            }
        }
    }
    Ok(IdentityReport::ok())
}

/// `f(xy,y) = f(y,y) - f(x,y)`; requires `Q` Steiner.
pub fn check_mk1(k: &AbelianGroup, q: &LoopTable, f: &[GroupElement]) -> Result<IdentityReport> {
    check_shape(k, q, f)?;
    require_steiner(q)?;
    let n = q.order();
    let at = |x: Element, y: Element| f[x * n + y];
    Ok(report2(q, |x, y| at(q.mul(x, y), y) == k.sub(at(y, y), at(x, y))))
}

/// `f(y,yz) = f(y,y) - f(y,z)`; requires `Q` Steiner.
pub fn check_mk2(k: &AbelianGroup, q: &LoopTable, f: &[GroupElement]) -> Result<IdentityReport> {
    check_shape(k, q, f)?;
    require_steiner(q)?;
    let n = q.order();
    let at = |x: Element, y: Element| f[x * n + y];
    Ok(report2(q, |y, z| at(y, q.mul(y, z)) == k.sub(at(y, y), at(y, z))))
}

pub fn check_mk(k: &AbelianGroup, q: &LoopTable, f: &[GroupElement]) -> Result<IdentityReport> {
    let first = check_mk1(k, q, f)?;
    if !first.holds {
        return Ok(first);
    }
    check_mk2(k, q, f)
}

/// `f(xy,y) = -f(x,y)` and `f(y,yz) = -f(y,z)`; requires `Q` Steiner and a
/// zero diagonal.
pub fn check_q(k: &AbelianGroup, q: &LoopTable, f: &[GroupElement]) -> Result<IdentityReport> {
    check_shape(k, q, f)?;
    require_steiner(q)?;
    let n = q.order();
    let at = |x: Element, y: Element| f[x * n + y];
    if let Some(y) = q.elements().find(|&y| at(y, y) != 0) {
        return Err(Error::DiagonalNonzero(y));
    }
    let q1 = report2(q, |x, y| at(q.mul(x, y), y) == k.neg(at(x, y)));
    if !q1.holds {
        return Ok(q1);
    }
    Ok(report2(q, |y, z| at(y, q.mul(y, z)) == k.neg(at(y, z))))
}

/// A factor set read off a loop, with the data identifying the loop with
/// the rebuilt extension.
#[derive(Debug, Clone)]
pub struct Extraction {
    pub factor_set: ValidFactorSet,
    /// `embed[i]` is the loop element for linear index `i` of `K`.
    pub embed: Vec<Element>,
    /// The section `ℓ`: one representative per coset, `ℓ(0) = 0`.
    pub section: Vec<Element>,
    pub quotient: Quotient,
}

impl Extraction {
    /// The isomorphism `u = a·ℓ(x) ↦ (a, x)` from the source loop onto the
    /// rebuilt extension, in extension indices.
    pub fn isomorphism(&self, c: &LoopTable) -> Vec<Element> {
        let n = self.quotient.table.order();
        let mut k_of = vec![usize::MAX; c.order()];
        for (i, &e) in self.embed.iter().enumerate() {
            k_of[e] = i;
        }
        c.elements()
            .map(|u| {
                let x = self.quotient.projection[u];
                let a = k_of[c.rdiv(u, self.section[x])];
                a * n + x
            })
            .collect()
    }
}

/// Reads `(θ, f)` off a C-loop `c` with a normal, nuclear, abelian subloop
/// `ksub`. Without a section, each coset is represented by its minimal element.
pub fn extract_factor_set(c: &LoopTable, ksub: &[Element], section: Option<&[Element]>) -> Result<Extraction> {
    if !identities::is_c_loop(c).holds {
        return Err(Error::NotCLoop);
    }
    let mut ksub = ksub.to_vec();
    ksub.sort_unstable();
    ksub.dedup();
    if let Some(&bad) = ksub.iter().find(|&&e| e >= c.order()) {
        return Err(Error::Dimension(format!("element {bad} out of range")));
    }
    if let Some((a, b)) = c.closure_failure(&ksub) {
        return Err(Error::NotASubloop(a, b));
    }
    let nucleus = c.mask(&invariants::nuclei(c).nucleus);
    if let Some(&e) = ksub.iter().find(|&&e| !nucleus[e]) {
        return Err(Error::NotNuclear(e));
    }
    if !c.is_normal(&ksub)? {
        return Err(Error::NotNormal);
    }
    let (k, embed_sub) = AbelianGroup::decompose(&c.subtable(&ksub)?)?;
    let embed: Vec<Element> = embed_sub.iter().map(|&i| ksub[i]).collect();
    let mut k_of = vec![usize::MAX; c.order()];
    for (i, &e) in embed.iter().enumerate() {
        k_of[e] = i;
    }

    let quotient = c.quotient(&ksub)?;
    let q = quotient.table.clone();
    let section: Vec<Element> = match section {
        Some(s) => {
            if s.len() != q.order() {
                return Err(Error::InvalidSection(format!("expected {} representatives", q.order())));
            }
            if s[0] != 0 {
                return Err(Error::InvalidSection("the identity coset must be represented by 0".into()));
            }
            if let Some(i) = (0..q.order()).find(|&i| s[i] >= c.order() || quotient.projection[s[i]] != i) {
                return Err(Error::InvalidSection(format!("representative {} is not in coset {i}", s[i])));
            }
            s.to_vec()
        }
        None => quotient.cosets.iter().map(|coset| coset[0]).collect(),
    };

    let theta_images: Vec<Vec<GroupElement>> =
        q.elements().map(|x| embed.iter().map(|&e| k_of[c.inner_middle(section[x], e)]).collect()).collect();
    let theta = ThetaMap::from_images(&k, &q, theta_images)?;
    let f: Vec<Vec<GroupElement>> = q
        .elements()
        .map(|x| q.elements().map(|y| k_of[c.rdiv(c.mul(section[x], section[y]), section[q.mul(x, y)])]).collect())
        .collect();
    let factor_set = FactorSet::new(k, q, theta, f)?.validate()?;
    Ok(Extraction { factor_set, embed, section, quotient })
}

/// The Klein-over-Klein factor set behind the order-16 nonflexible C-loop
/// with nucleus `K = Z_2 x Z_2`: `K = Q = {1, u, v, w}`, `θ_1 = θ_u = id`,
/// `θ_v = θ_w = (v w)`, and
///
/// ```text
/// f | 1 u v w
/// --+--------
/// 1 | 1 1 1 1
/// u | 1 v 1 v
/// v | 1 v 1 w
/// w | 1 u 1 u
/// ```
///
/// (multiplicative notation, `1` the neutral element). `Q` is the Klein table
/// on `{0, 1, 2, 3} = {1, u, v, w}`; in `K = Z_2 x Z_2` the elements are
/// `u = (1,0)`, `v = (0,1)`, `w = (1,1)`.
pub fn nklein_factor_set() -> ValidFactorSet {
    let k = AbelianGroup::new(vec![2, 2]).expect("Klein group");
    let (one, u, v, w) = (0, k.index_of(&[1, 0]), k.index_of(&[0, 1]), k.index_of(&[1, 1]));
    let q = crate::groups::klein();
    let id: Vec<GroupElement> = k.elements().collect();
    let mut swap = id.clone();
    swap.swap(v, w);
    let theta =
        ThetaMap::from_images(&k, &q, vec![id.clone(), id, swap.clone(), swap]).expect("Klein-over-Klein theta");
    let f = vec![vec![one; 4], vec![one, v, one, v], vec![one, v, one, w], vec![one, u, one, u]];
    FactorSet::new(k, q, theta, f).and_then(FactorSet::validate).expect("Klein-over-Klein factor set is a C-factor set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, groups, iso};

    #[test]
    fn nklein_builds_table1() {
        let fs = nklein_factor_set();
        let ext = fs.build_extension();
        assert_eq!(ext.table.order(), 16);
        assert!(iso::find_isomorphism(&ext.table, &fixtures::table1_16()).unwrap().is_some());
        let k = fs.k();
        let (u, v, w) = (k.index_of(&[1, 0]), k.index_of(&[0, 1]), k.index_of(&[1, 1]));
        // loop elements u, v, w of Q are 1, 2, 3
        assert_eq!(ext.mul_pairs((u, 2), (v, 1)), (0, 3));
        assert_eq!(ext.mul_pairs((v, 1), (u, 2)), (w, 3));
        let lhs = ext.mul_pairs(ext.mul_pairs((u, 2), (v, 1)), (u, 2));
        let rhs = ext.mul_pairs((u, 2), ext.mul_pairs((v, 1), (u, 2)));
        assert_eq!(lhs, (u, 1));
        assert_eq!(rhs, (0, 1));
    }

    #[test]
    fn perturbed_nklein_is_rejected() {
        let fs = nklein_factor_set().into_inner();
        let bad = fs.with_entry(2, 1, 0);
        assert!(matches!(bad.validate(), Err(Error::CocycleViolation(..))));
        let unnormalized = fs.with_entry(0, 3, 1);
        assert_eq!(unnormalized.validate(), Err(Error::NotNormalized(3)));
        let q = LoopTable::from_rows(&[
            vec![0, 1, 2, 3, 4],
            vec![1, 2, 0, 4, 3],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 0, 3, 1, 2],
        ])
        .unwrap();
        assert_eq!(FactorSet::split(AbelianGroup::cyclic(2), q).validate(), Err(Error::QNotCLoop));
    }

    #[test]
    fn split_extension_is_direct_product() {
        let k = AbelianGroup::cyclic(3);
        let q = fixtures::steiner10();
        let fs = FactorSet::split(k.clone(), q.clone()).validate().unwrap();
        let ext = fs.build_extension();
        assert_eq!(ext.table, k.table().direct_product(&q));
        assert_eq!(fs.check_cfs2().unwrap(), IdentityReport::ok());
        assert_eq!(fs.check_mk().unwrap(), IdentityReport::ok());
        assert_eq!(fs.check_q().unwrap(), IdentityReport::ok());
        assert_eq!(fs.flexibility_criterion(), Ok(true));
    }

    #[test]
    fn inverses_match_formula() {
        let fs = nklein_factor_set();
        let ext = fs.build_extension();
        for a in fs.k().elements() {
            for x in fs.q().elements() {
                let inv = fs.inverse_in_extension(a, x).unwrap();
                assert_eq!(inv, fs.inverse_formula(a, x).unwrap());
                assert_eq!(ext.pair(ext.table.inv(ext.index(a, x)).unwrap()), inv);
            }
        }
        assert_eq!(fs.inverse_in_extension(0, 0), Ok((0, 0)));
    }

    #[test]
    fn central_checks_need_steiner_and_zero_diagonal() {
        let k = AbelianGroup::cyclic(3);
        let q = groups::cyclic(4);
        let fs = FactorSet::split(k.clone(), q);
        assert_eq!(fs.check_mk(), Err(Error::QNotSteiner));
        let klein = groups::klein();
        let f = FactorSet::central(k, klein, vec![vec![0; 4], vec![0, 1, 0, 0], vec![0; 4], vec![0; 4]]).unwrap();
        assert_eq!(f.check_q(), Err(Error::DiagonalNonzero(1)));
        assert_eq!(nklein_factor_set().flexibility_criterion(), Err(Error::NotCentral));
    }

    #[test]
    fn extraction_round_trip_on_table1() {
        let t = fixtures::table1_16();
        let ex = extract_factor_set(&t, &[0, 1, 2, 3], None).unwrap();
        assert_eq!(ex.factor_set.k().order(), 4);
        let rebuilt = ex.factor_set.build_extension();
        let psi = ex.isomorphism(&t);
        assert!(iso::is_isomorphism(&t, &rebuilt.table, &psi));
        assert!(!ex.factor_set.is_central());
        // another section gives another (still valid) factor set
        let other: Vec<usize> = ex.quotient.cosets.iter().map(|c| *c.last().unwrap()).collect();
        let mut other = other;
        other[0] = 0;
        let ex2 = extract_factor_set(&t, &[0, 1, 2, 3], Some(&other)).unwrap();
        assert!(iso::is_isomorphism(&t, &ex2.factor_set.build_extension().table, &ex2.isomorphism(&t)));
    }

    #[test]
    fn extraction_errors() {
        let t = fixtures::table1_16();
        assert!(matches!(extract_factor_set(&t, &[0, 4, 8], None), Err(Error::NotASubloop(..))));
        assert_eq!(extract_factor_set(&t, &[0, 4, 1, 5], None).unwrap_err(), Error::NotNuclear(4));
        let s3 = groups::symmetric(3);
        let tr = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        assert_eq!(extract_factor_set(&s3, &[0, tr], None).unwrap_err(), Error::NotNormal);
        let d = s3.direct_product(&fixtures::steiner10());
        let s3_factor: Vec<usize> = (0..6).map(|i| i * 10).collect();
        assert_eq!(extract_factor_set(&d, &s3_factor, None).unwrap_err(), Error::NotAbelian);
        let bad_section = vec![1, 4, 8, 12];
        assert!(matches!(extract_factor_set(&t, &[0, 1, 2, 3], Some(&bad_section)), Err(Error::InvalidSection(_))));
    }

    #[test]
    fn direct_product_extracts_to_zero() {
        let k = groups::cyclic(3);
        let q = fixtures::steiner10();
        let d = k.direct_product(&q);
        let kernel: Vec<usize> = (0..3).map(|i| i * 10).collect();
        let ex = extract_factor_set(&d, &kernel, None).unwrap();
        assert!(ex.factor_set.is_central());
        assert!(ex.factor_set.f_flat().iter().all(|&v| v == 0));
    }
}
