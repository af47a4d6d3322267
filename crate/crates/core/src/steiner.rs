//! Steiner triple systems, Steiner loops and block-based central factor sets.

use std::collections::BTreeMap;

use crate::abelian::{AbelianGroup, GroupElement};
use crate::error::{parse_err, Error, Result};
use crate::extension::{nklein_factor_set, FactorSet, ValidFactorSet};
use crate::identities::{self, Identity};
use crate::table::{Element, LoopTable};

/// Points are `1..=v`; triples are stored sorted, in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerTripleSystem {
    v: usize,
    triples: Vec<[usize; 3]>,
}

impl SteinerTripleSystem {
    pub fn new(v: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        let mut seen = vec![None; (v + 1) * (v + 1)];
        let mut sorted = Vec::with_capacity(triples.len());
        for (i, t) in triples.iter().enumerate() {
            let mut t = *t;
            t.sort_unstable();
            if t[0] == 0 || t[2] > v {
                return Err(Error::InvalidSts(format!("triple {} has a point outside 1..={v}", i + 1)));
            }
            if t[0] == t[1] || t[1] == t[2] {
                return Err(Error::InvalidSts(format!("triple {} repeats a point", i + 1)));
            }
            for (p, q) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                if let Some(j) = seen[p * (v + 1) + q].replace(i) {
                    return Err(Error::InvalidSts(format!(
                        "pair {{{p}, {q}}} lies in triples {} and {}",
                        j + 1,
                        i + 1
                    )));
                }
            }
            sorted.push(t);
        }
        for p in 1..=v {
            for q in p + 1..=v {
                if seen[p * (v + 1) + q].is_none() {
                    return Err(Error::InvalidSts(format!("pair {{{p}, {q}}} lies in no triple")));
                }
            }
        }
        Ok(SteinerTripleSystem { v, triples: sorted })
    }

    pub fn points(&self) -> usize {
        self.v
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    /// The seven lines of the Fano plane.
    pub fn fano() -> Self {
        let lines = vec![[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]];
        SteinerTripleSystem::new(7, lines).expect("Fano plane")
    }

    /// Reads the triples `{x, y, xy}` back off a Steiner loop.
    pub fn from_steiner_loop(q: &LoopTable) -> Result<Self> {
        require_steiner(q)?;
        SteinerTripleSystem::new(q.order() - 1, steiner_triples(q))
    }

    /// `.sts` text: the point count, then one triple of 1-based points per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, first) = lines.next().ok_or_else(|| parse_err(1, "missing point count"))?;
        let v: usize =
            first.trim().parse().map_err(|_| parse_err(ln + 1, format!("bad point count `{}`", first.trim())))?;
        let mut triples = Vec::new();
        for (ln, line) in lines {
            let pts = crate::table::parse_index_row(line, ln + 1)?;
            let t: [usize; 3] = pts.try_into().map_err(|_| parse_err(ln + 1, "a triple needs exactly three points"))?;
            triples.push(t);
        }
        SteinerTripleSystem::new(v, triples)
    }

    pub fn to_sts_string(&self) -> String {
        let mut out = format!("{}\n", self.v);
        for t in &self.triples {
            out.push_str(&format!("{} {} {}\n", t[0], t[1], t[2]));
        }
        out
    }
}

/// Element 0 is the adjoined identity, `x·x = 0`, and `x·y` is the third
/// point of the triple through `x` and `y`.
pub fn steiner_loop(sts: &SteinerTripleSystem) -> LoopTable {
    let n = sts.v + 1;
    let mut third = vec![0; n * n];
    for t in &sts.triples {
        for (i, j, k) in [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 0, 1), (1, 2, 0), (2, 1, 0)] {
            third[t[i] * n + t[j]] = t[k];
        }
    }
    LoopTable::from_fn(n, |x, y| match (x, y) {
        (0, y) => y,
        (x, 0) => x,
        (x, y) if x == y => 0,
        (x, y) => third[x * n + y],
    })
    .expect("the loop of a Steiner triple system is a Latin square")
}

fn require_steiner(q: &LoopTable) -> Result<()> {
    if identities::check(q, Identity::Steiner).holds {
        Ok(())
    } else {
        Err(Error::QNotSteiner)
    }
}

/// The triples `{x, y, xy}` of a Steiner loop, sorted, in lexicographic order.
pub fn steiner_triples(q: &LoopTable) -> Vec<[Element; 3]> {
    let mut out = Vec::new();
    for x in 1..q.order() {
        for y in x + 1..q.order() {
            let z = q.mul(x, y);
            if z > y {
                out.push([x, y, z]);
            }
        }
    }
    out
}

/// `(a, b, c, d)` with `f(u,u) = a`, `f(v,v) = b`, `f(uv,uv) = c`, `f(v,u) = d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub a: GroupElement,
    pub b: GroupElement,
    pub c: GroupElement,
    pub d: GroupElement,
}

impl Block {
    pub fn new(a: GroupElement, b: GroupElement, c: GroupElement, d: GroupElement) -> Self {
        Block { a, b, c, d }
    }

    /// `B1(a) = (a, a, a, 0)`.
    pub fn b1(a: GroupElement) -> Self {
        Block::new(a, a, a, 0)
    }

    /// `B2(d) = (0, 0, 0, d)`.
    pub fn b2(d: GroupElement) -> Self {
        Block::new(0, 0, 0, d)
    }

    /// `B3(a) = (0, 0, a, -a)`.
    pub fn b3(k: &AbelianGroup, a: GroupElement) -> Self {
        Block::new(0, 0, a, k.neg(a))
    }
}

/// The restriction of `f` to `{1, u, v, uv}`, rows and columns in that order.
pub fn expand_block(k: &AbelianGroup, blk: &Block) -> [[GroupElement; 4]; 4] {
    let Block { a, b, c, d } = *blk;
    let s = |plus: &[GroupElement], minus: &[GroupElement]| {
        let p = k.sum(plus.iter().copied());
        k.sub(p, k.sum(minus.iter().copied()))
    };
    [
        [0, 0, 0, 0],
        [0, a, s(&[a, b], &[c, d]), s(&[c, d], &[b])],
        [0, d, b, k.sub(b, d)],
        [0, k.sub(a, d), s(&[c, d], &[a]), c],
    ]
}

/// How one triple is laid out: which points play `u` and `v`, and the free
/// value `d = f(v, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleChoice {
    pub u: Element,
    pub v: Element,
    pub d: GroupElement,
}

/// Central factor set on a Steiner loop `q`: `diag[x] = f(x,x)` (entry 0 is
/// ignored), and every triple filled from its block. Triples without an entry
/// in `choices` (keyed by the sorted triple) use `u < v < uv` and `d = 0`.
pub fn factor_set_from_blocks(
    q: &LoopTable,
    k: &AbelianGroup,
    diag: &[GroupElement],
    choices: &BTreeMap<[Element; 3], TripleChoice>,
) -> Result<ValidFactorSet> {
    require_steiner(q)?;
    let n = q.order();
    if diag.len() != n || diag.iter().any(|&a| a >= k.order()) {
        return Err(Error::Dimension(format!("diagonal must list {n} elements of K")));
    }
    let mut f = vec![vec![0; n]; n];
    for x in 1..n {
        f[x][x] = diag[x];
    }
    for t in steiner_triples(q) {
        let choice = match choices.get(&t) {
            Some(c) => {
                if c.u == c.v || !t.contains(&c.u) || !t.contains(&c.v) || c.d >= k.order() {
                    return Err(Error::Dimension(format!("bad orientation for triple {t:?}")));
                }
                *c
            }
            None => TripleChoice { u: t[0], v: t[1], d: 0 },
        };
        let pts = [0, choice.u, choice.v, q.mul(choice.u, choice.v)];
        let blk = Block::new(diag[pts[1]], diag[pts[2]], diag[pts[3]], choice.d);
        let arr = expand_block(k, &blk);
        for i in 1..4 {
            for j in 1..4 {
                f[pts[i]][pts[j]] = arr[i][j];
            }
        }
    }
    FactorSet::central(k.clone(), q.clone(), f)?.validate()
}

/// Whether every triple of `q`, in some ordering `(u, v, uv)`, restricts `f`
/// to exactly `expand_block(blk)`.
pub fn is_based_on(fs: &FactorSet, blk: &Block) -> Result<bool> {
    let q = fs.q();
    require_steiner(q)?;
    let arr = expand_block(fs.k(), blk);
    Ok(steiner_triples(q).into_iter().all(|[p, r, s]| {
        [[p, r, s], [p, s, r], [r, p, s], [r, s, p], [s, p, r], [s, r, p]].iter().any(|&[u, v, w]| {
            let pts = [0, u, v, w];
            (0..4).all(|i| (0..4).all(|j| fs.f(pts[i], pts[j]) == arr[i][j]))
        })
    }))
}

/// The order-16 loop built from [`nklein_factor_set`].
pub fn klein16() -> LoopTable {
    nklein_factor_set().build_extension().table
}

/// The coefficient group used by [`assoc_loop`]: `Z_n` for odd `n`, `Z_{2n}` for even.
pub fn assoc_kernel(n: usize) -> Result<AbelianGroup> {
    if n <= 2 {
        return Err(Error::BadOrder(n));
    }
    Ok(AbelianGroup::cyclic(if n % 2 == 1 { n } else { 2 * n }))
}

/// Central factor set over the Klein group based on `B3(1)` in the
/// orientation `(u, v, uv) = (1, 2, 3)`.
pub fn assoc_factor_set(n: usize) -> Result<ValidFactorSet> {
    let k = assoc_kernel(n)?;
    let q = crate::groups::klein();
    let blk = Block::b3(&k, 1);
    let diag = [0, blk.a, blk.b, blk.c];
    let choices = BTreeMap::from([([1, 2, 3], TripleChoice { u: 1, v: 2, d: blk.d })]);
    factor_set_from_blocks(&q, &k, &diag, &choices)
}

/// A C-loop of order `4n` (odd `n`) or `8n` (even `n`) containing an
/// associator of order exactly `n`.
pub fn assoc_loop(n: usize) -> Result<LoopTable> {
    Ok(assoc_factor_set(n)?.build_extension().table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, groups, invariants, iso};

    #[test]
    fn named_blocks() {
        let k = AbelianGroup::cyclic(7);
        let a = 3;
        let na = k.neg(a);
        assert_eq!(expand_block(&k, &Block::b1(a))[1..], [[0, a, a, 0], [0, 0, a, a], [0, a, 0, a]]);
        assert_eq!(expand_block(&k, &Block::b2(a))[1..], [[0, 0, na, a], [0, a, 0, na], [0, na, a, 0]]);
        assert_eq!(expand_block(&k, &Block::b3(&k, a))[1..], [[0, 0, 0, 0], [0, na, 0, a], [0, a, 0, a]]);
    }

    #[test]
    fn small_systems() {
        let one = SteinerTripleSystem::new(3, vec![[1, 2, 3]]).unwrap();
        assert_eq!(steiner_loop(&one), groups::klein());
        let fano = steiner_loop(&SteinerTripleSystem::fano());
        assert!(identities::check(&fano, Identity::Steiner).holds);
        assert!(identities::check(&fano, Identity::Associative).holds);
        assert!(iso::are_isomorphic(&fano, &groups::elementary_abelian_2(3)).unwrap());
    }

    #[test]
    fn steiner10_from_its_triples() {
        let q = fixtures::steiner10();
        let sts = SteinerTripleSystem::from_steiner_loop(&q).unwrap();
        assert_eq!(sts.triples().len(), 12);
        assert_eq!(steiner_loop(&sts), q);
        let back = SteinerTripleSystem::parse(&sts.to_sts_string()).unwrap();
        assert_eq!(back, sts);
    }

    #[test]
    fn invalid_systems() {
        assert!(matches!(SteinerTripleSystem::new(3, vec![]), Err(Error::InvalidSts(_))));
        assert!(matches!(SteinerTripleSystem::new(3, vec![[1, 2, 3], [3, 2, 1]]), Err(Error::InvalidSts(_))));
        assert!(matches!(SteinerTripleSystem::new(3, vec![[1, 2, 4]]), Err(Error::InvalidSts(_))));
        assert!(matches!(SteinerTripleSystem::parse("3\n1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(SteinerTripleSystem::from_steiner_loop(&groups::cyclic(4)), Err(Error::QNotSteiner));
    }

    #[test]
    fn b1_on_klein_is_nonflexible() {
        let k = AbelianGroup::cyclic(3);
        let q = groups::klein();
        let fs = factor_set_from_blocks(&q, &k, &[0, 1, 1, 1], &BTreeMap::new()).unwrap();
        assert!(is_based_on(&fs, &Block::b1(1)).unwrap());
        assert_eq!(fs.flexibility_criterion(), Ok(false));
        let ext = fs.build_extension();
        assert!(!identities::check(&ext.table, Identity::Flexible).holds);
        assert_eq!(invariants::center(&ext.table), ext.kernel);
    }

    #[test]
    fn zero_assignments_give_zero() {
        let q = fixtures::steiner10();
        let k = AbelianGroup::cyclic(5);
        let fs = factor_set_from_blocks(&q, &k, &[0; 10], &BTreeMap::new()).unwrap();
        assert!(fs.f_flat().iter().all(|&v| v == 0));
        assert!(!is_based_on(&fs, &Block::b1(2)).unwrap());
        assert!(is_based_on(&fs, &Block::b1(0)).unwrap());
    }

    #[test]
    fn assoc_witness() {
        for n in [3, 4] {
            let fs = assoc_factor_set(n).unwrap();
            let ext = fs.build_extension();
            let k = fs.k();
            let (u, w) = (1, 3);
            let a = 1;
            let (x, y, z) = (ext.index(0, w), ext.index(0, u), ext.index(a, w));
            let value = invariants::associator(&ext.table, x, y, z).unwrap();
            assert_eq!(ext.pair(value), (k.scalar(-2, a), 0));
            // central squares, nonflexible: the cube map is no antiautomorphism
            assert!(identities::check(&ext.table, Identity::SquaresCentral).holds);
            assert!(!identities::cube_antiautomorphism(&ext.table).holds);
            assert!(!identities::product_squares_symmetric(&ext.table).holds);
        }
        assert_eq!(assoc_loop(2).unwrap_err(), Error::BadOrder(2));
    }
}
