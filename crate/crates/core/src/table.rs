//! Finite loops given by multiplication tables.
//!
//! Elements are the indices `0..n` and element `0` is always the identity.
//! Both division tables are precomputed at construction, so `ldiv`/`rdiv`
//! are lookups like `mul`.

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::perm::Permutation;

/// Index of an element in its ambient [`LoopTable`].
pub type Element = usize;

#[derive(Clone, PartialEq, Eq)]
pub struct LoopTable {
    n: usize,
    cells: Vec<Element>,
    // ldiv_cells[x*n + y] = z with x*z = y
    ldiv_cells: Vec<Element>,
    // rdiv_cells[x*n + y] = z with z*y = x
    rdiv_cells: Vec<Element>,
}

impl fmt::Debug for LoopTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LoopTable(n={})", self.n)
    }
}

/// The three standard generators of the inner mapping group at `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerMaps {
    /// `L(x,y) = L_{yx}^{-1} L_y L_x`
    pub left: Permutation,
    /// `R(x,y) = R_{xy}^{-1} R_y R_x`
    pub right: Permutation,
    /// `T_x = R_x^{-1} L_x`
    pub middle: Permutation,
}

/// A quotient loop together with the coset projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub table: LoopTable,
    /// `projection[x]` is the index of the coset containing `x`.
    pub projection: Vec<Element>,
    /// Cosets, ordered by their minimal element; each coset is sorted.
    pub cosets: Vec<Vec<Element>>,
}

impl LoopTable {
    /// Validates a square table of indices. Rows and columns must be
    /// permutations and row/column 0 must already be the identity.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut cells = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::Ragged { row: r, len: row.len(), expected: n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::OutOfRange { row: r, col: c, value: v as i64, n });
                }
            }
            cells.extend_from_slice(row);
        }
        Self::from_cells(n, cells)
    }

    /// Builds a table from a product function on `0..n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(Element, Element) -> Element) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = f(x, y);
                if v >= n {
                    return Err(Error::OutOfRange { row: x, col: y, value: v as i64, n });
                }
                cells.push(v);
            }
        }
        Self::from_cells(n, cells)
    }

    fn from_cells(n: usize, cells: Vec<Element>) -> Result<Self> {
        let mut seen = vec![usize::MAX; n];
        for r in 0..n {
            for c in 0..n {
                let v = cells[r * n + c];
                if seen[v] == r {
                    return Err(Error::NotLatin { line: format!("row {r}"), value: v });
                }
                seen[v] = r;
            }
        }
        seen.fill(usize::MAX);
        for c in 0..n {
            for r in 0..n {
                let v = cells[r * n + c];
                if seen[v] == c {
                    return Err(Error::NotLatin { line: format!("column {c}"), value: v });
                }
                seen[v] = c;
            }
        }
        for x in 0..n {
            if cells[x] != x || cells[x * n] != x {
                return Err(Error::NoIdentity(x));
            }
        }
        let mut ldiv_cells = vec![0; n * n];
        let mut rdiv_cells = vec![0; n * n];
        for x in 0..n {
            for z in 0..n {
                let p = cells[x * n + z];
                ldiv_cells[x * n + p] = z;
                rdiv_cells[p * n + z] = x;
            }
        }
        Ok(LoopTable { n, cells, ldiv_cells, rdiv_cells })
    }

    /// The trivial one-element loop.
    pub fn trivial() -> Self {
        Self::from_cells(1, vec![0]).expect("trivial loop")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.cells[x * self.n + y]
    }

    /// The unique `z` with `x * z = y`.
    #[inline]
    pub fn ldiv(&self, x: Element, y: Element) -> Element {
        self.ldiv_cells[x * self.n + y]
    }

    /// The unique `z` with `z * y = x`.
    #[inline]
    pub fn rdiv(&self, x: Element, y: Element) -> Element {
        self.rdiv_cells[x * self.n + y]
    }

    pub fn row(&self, x: Element) -> &[Element] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.cells.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// The `z` with `z * x = 0`.
    pub fn left_inverse(&self, x: Element) -> Element {
        self.rdiv(0, x)
    }

    /// The `z` with `x * z = 0`.
    pub fn right_inverse(&self, x: Element) -> Element {
        self.ldiv(x, 0)
    }

    pub fn inv(&self, x: Element) -> Result<Element> {
        let r = self.right_inverse(x);
        if self.left_inverse(x) == r {
            Ok(r)
        } else {
            Err(Error::NoTwoSidedInverse(x))
        }
    }

    /// Left-associated power `(...((x*x)*x)...)*x` with `k` factors; `x^0 = 0`.
    pub fn power(&self, x: Element, k: usize) -> Element {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    /// Least `k >= 1` with `x^k = 0`, using left-associated powers.
    pub fn element_order(&self, x: Element) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
            // left-associated powers of x form the orbit of 0 under R_x,
            // so they return to 0 within n steps
            debug_assert!(k <= self.n);
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|x| self.element_order(x)).fold(1, lcm)
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|x| (x + 1..self.n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn left_translation(&self, x: Element) -> Permutation {
        Permutation::from_images_unchecked(self.row(x).to_vec())
    }

    pub fn right_translation(&self, x: Element) -> Permutation {
        Permutation::from_images_unchecked(self.elements().map(|y| self.mul(y, x)).collect())
    }

    /// `L(x,y)(z) = (yx) \ (y(xz))`
    #[inline]
    pub fn inner_left(&self, x: Element, y: Element, z: Element) -> Element {
        self.ldiv(self.mul(y, x), self.mul(y, self.mul(x, z)))
    }

    /// `R(x,y)(z) = ((zx)y) / (xy)`
    #[inline]
    pub fn inner_right(&self, x: Element, y: Element, z: Element) -> Element {
        self.rdiv(self.mul(self.mul(z, x), y), self.mul(x, y))
    }

    /// `T_x(z) = (xz) / x`
    #[inline]
    pub fn inner_middle(&self, x: Element, z: Element) -> Element {
        self.rdiv(self.mul(x, z), x)
    }

    pub fn inner_maps(&self, x: Element, y: Element) -> InnerMaps {
        let perm =
            |f: &dyn Fn(Element) -> Element| Permutation::from_images_unchecked(self.elements().map(f).collect());
        InnerMaps {
            left: perm(&|z| self.inner_left(x, y, z)),
            right: perm(&|z| self.inner_right(x, y, z)),
            middle: perm(&|z| self.inner_middle(x, z)),
        }
    }

    /// Smallest subloop containing `gens` (and 0), as a sorted list.
    pub fn subloop_generated(&self, gens: &[Element]) -> Vec<Element> {
        let mut inside = vec![false; self.n];
        let mut members = vec![0];
        inside[0] = true;
        for &g in gens {
            if !inside[g] {
                inside[g] = true;
                members.push(g);
            }
        }
        // every pair (members[i], members[j]) with max(i, j) < done is already multiplied
        let mut done = 0;
        while done < members.len() {
            let a = members[done];
            let mut j = 0;
            while j <= done {
                let b = members[j];
                for p in [self.mul(a, b), self.mul(b, a)] {
                    if !inside[p] {
                        inside[p] = true;
                        members.push(p);
                    }
                }
                j += 1;
            }
            done += 1;
        }
        members.sort_unstable();
        members
    }

    /// Returns the first pair whose product leaves `set`, if any. `set` must contain 0.
    pub fn closure_failure(&self, set: &[Element]) -> Option<(Element, Element)> {
        let mask = self.mask(set);
        if !mask[0] {
            return Some((0, 0));
        }
        for &a in set {
            for &b in set {
                if !mask[self.mul(a, b)] {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_subloop(&self, set: &[Element]) -> bool {
        self.closure_failure(set).is_none()
    }

    pub(crate) fn mask(&self, set: &[Element]) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for &s in set {
            mask[s] = true;
        }
        mask
    }

    /// Whether the subloop `set` is invariant under every `L(x,y)`, `R(x,y)`, `T_x`.
    pub fn is_normal(&self, set: &[Element]) -> Result<bool> {
        if let Some((a, b)) = self.closure_failure(set) {
            return Err(Error::NotASubloop(a, b));
        }
        let mask = self.mask(set);
        Ok(self.first_escape(set, &mask).is_none())
    }

    // An inner-mapping image of an element of `set` lying outside it.
    fn first_escape(&self, set: &[Element], mask: &[bool]) -> Option<Element> {
        for x in self.elements() {
            for &h in set {
                let t = self.inner_middle(x, h);
                if !mask[t] {
                    return Some(t);
                }
            }
            for y in self.elements() {
                for &h in set {
                    let l = self.inner_left(x, y, h);
                    if !mask[l] {
                        return Some(l);
                    }
                    let r = self.inner_right(x, y, h);
                    if !mask[r] {
                        return Some(r);
                    }
                }
            }
        }
        None
    }

    /// Smallest normal subloop containing `gens`.
    pub fn normal_closure(&self, gens: &[Element]) -> Vec<Element> {
        let mut current = self.subloop_generated(gens);
        loop {
            let mask = self.mask(&current);
            let mut extra = Vec::new();
            let mut seen = mask.clone();
            for x in self.elements() {
                for &h in &current {
                    let mut push = |e: Element| {
                        if !seen[e] {
                            seen[e] = true;
                            extra.push(e);
                        }
                    };
                    push(self.inner_middle(x, h));
                    for y in self.elements() {
                        push(self.inner_left(x, y, h));
                        push(self.inner_right(x, y, h));
                    }
                }
            }
            if extra.is_empty() {
                return current;
            }
            extra.extend_from_slice(&current);
            current = self.subloop_generated(&extra);
        }
    }

    /// The quotient by a normal subloop. Cosets are numbered by increasing
    /// minimal element, so the coset of 0 is element 0.
    pub fn quotient(&self, normal: &[Element]) -> Result<Quotient> {
        if !self.is_normal(normal)? {
            return Err(Error::NotNormal);
        }
        let mut projection = vec![usize::MAX; self.n];
        let mut cosets: Vec<Vec<Element>> = Vec::new();
        for x in self.elements() {
            if projection[x] != usize::MAX {
                continue;
            }
            let idx = cosets.len();
            let mut coset: Vec<Element> = normal.iter().map(|&h| self.mul(x, h)).collect();
            coset.sort_unstable();
            for &c in &coset {
                debug_assert_eq!(projection[c], usize::MAX, "cosets overlap");
                projection[c] = idx;
            }
            cosets.push(coset);
        }
        let m = cosets.len();
        let table = LoopTable::from_fn(m, |a, b| projection[self.mul(cosets[a][0], cosets[b][0])])?;
        Ok(Quotient { table, projection, cosets })
    }

    /// Componentwise product; `(i, j)` has index `i * other.order() + j`.
    pub fn direct_product(&self, other: &LoopTable) -> LoopTable {
        let m = other.n;
        LoopTable::from_fn(self.n * m, |p, q| self.mul(p / m, q / m) * m + other.mul(p % m, q % m))
            .expect("direct product of loops is a loop")
    }

    /// The subloop on `set` relabelled as `0..set.len()` in sorted order.
    pub fn subtable(&self, set: &[Element]) -> Result<LoopTable> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some((a, b)) = self.closure_failure(&sorted) {
            return Err(Error::NotASubloop(a, b));
        }
        let mut pos = vec![usize::MAX; self.n];
        for (i, &s) in sorted.iter().enumerate() {
            pos[s] = i;
        }
        LoopTable::from_fn(sorted.len(), |a, b| pos[self.mul(sorted[a], sorted[b])])
    }

    /// Renders the `.loop` text format.
    pub fn to_loop_string(&self) -> String {
        self.to_string()
    }

    /// Parses the `.loop` text format: a line with `n`, then `n` rows.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, first) = lines.next().ok_or_else(|| parse_err(1, "missing order line"))?;
        let n: usize = first.trim().parse().map_err(|_| parse_err(ln + 1, format!("bad order `{}`", first.trim())))?;
        let mut rows = Vec::with_capacity(n);
        for (ln, line) in lines.by_ref().take(n) {
            rows.push(parse_index_row(line, ln + 1)?);
        }
        if rows.len() != n {
            return Err(parse_err(text.lines().count(), format!("expected {n} rows, found {}", rows.len())));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(parse_err(ln + 1, "trailing data after table"));
        }
        LoopTable::from_rows(&rows)
    }
}

impl fmt::Display for LoopTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in self.cells.chunks(self.n) {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for LoopTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LoopTable::parse(s)
    }
}

pub(crate) fn parse_index_row(line: &str, ln: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| tok.parse::<usize>().map_err(|_| parse_err(ln, format!("bad index `{tok}`"))))
        .collect()
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::groups;

    #[test]
    fn trivial_and_rejections() {
        let t = LoopTable::from_rows(&[vec![0]]).unwrap();
        assert_eq!(t.order(), 1);
        assert!(matches!(LoopTable::from_rows(&[vec![0, 1], vec![1, 1]]), Err(Error::NotLatin { .. })));
        assert!(matches!(LoopTable::from_rows(&[vec![0, 1], vec![1]]), Err(Error::Ragged { .. })));
        // Latin but 0 is not neutral
        assert!(matches!(LoopTable::from_rows(&[vec![1, 0], vec![0, 1]]), Err(Error::NoIdentity(_))));
        assert!(matches!(LoopTable::from_rows::<Vec<usize>>(&[]), Err(Error::Empty)));
    }

    #[test]
    fn table1_lookups() {
        let t = fixtures::table1_16();
        assert_eq!(t.order(), 16);
        assert_eq!(t.mul(4, 5), 1);
        assert_eq!(t.mul(8, 12), 7);
        assert_eq!(t.ldiv(4, 1), 5);
        assert_eq!(t.inv(4), Ok(4));
        assert_eq!(t.inv(6), Ok(7));
        assert_eq!(t.element_order(6), 4);
        assert_eq!(t.subloop_generated(&[6]), vec![0, 1, 6, 7]);
        // T_8 = R_8^{-1} L_8; 8*2 = 11 and 3*8 = 11
        assert_eq!(t.inner_maps(8, 0).middle.apply(2), 3);
        for x in t.elements() {
            assert_eq!(t.mul(0, x), x);
            assert_eq!(t.ldiv(x, x), 0);
        }
    }

    #[test]
    fn steiner10_basics() {
        let s = fixtures::steiner10();
        assert_eq!(s.ldiv(2, 6), 4);
        assert_eq!(s.exponent(), 2);
        assert_eq!(s.subloop_generated(&[1, 2]), vec![0, 1, 2, 3]);
        assert_eq!(s.subloop_generated(&[]), vec![0]);
        for x in s.elements() {
            assert_eq!(s.inv(x), Ok(x));
            if x != 0 {
                assert_eq!(s.element_order(x), 2);
            }
        }
    }

    #[test]
    fn inverse_needs_two_sides() {
        // a loop of order 5 where 1 has different left and right inverses
        let t = LoopTable::from_rows(&[
            vec![0, 1, 2, 3, 4],
            vec![1, 2, 0, 4, 3],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 0, 3, 1, 2],
        ])
        .unwrap();
        assert!(t.elements().any(|x| t.inv(x).is_err()));
        assert_eq!(t.inv(1), Err(Error::NoTwoSidedInverse(1)));
    }

    #[test]
    fn normality_and_quotients() {
        let t = fixtures::table1_16();
        assert_eq!(t.is_normal(&[0, 1, 2, 3]), Ok(true));
        assert_eq!(t.is_normal(&[0]), Ok(true));
        assert!(matches!(t.is_normal(&[0, 4, 8]), Err(Error::NotASubloop(..))));
        assert_eq!(t.is_normal(&[0, 4]), Ok(false));
        let q = t.quotient(&[0, 1, 2, 3]).unwrap();
        assert_eq!(q.table.order(), 4);
        assert_eq!(q.table.exponent(), 2);
        for x in t.elements() {
            for y in t.elements() {
                assert_eq!(q.projection[t.mul(x, y)], q.table.mul(q.projection[x], q.projection[y]));
            }
        }
        let all: Vec<usize> = t.elements().collect();
        assert_eq!(t.quotient(&all).unwrap().table.order(), 1);
    }

    #[test]
    fn non_normal_subgroup_is_rejected() {
        let s3 = groups::symmetric(3);
        let h = s3.subloop_generated(&[1]);
        let transposition = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let h2 = s3.subloop_generated(&[transposition]);
        assert_eq!(h2.len(), 2);
        assert_eq!(s3.is_normal(&h2), Ok(false));
        assert!(matches!(s3.quotient(&h2), Err(Error::NotNormal)));
        let _ = h;
    }

    #[test]
    fn products() {
        let z2 = groups::cyclic(2);
        let klein = z2.direct_product(&z2);
        assert_eq!(klein, groups::klein());
        let s = fixtures::steiner10();
        assert_eq!(LoopTable::trivial().direct_product(&s), s);
        let d = groups::symmetric(3).direct_product(&s);
        assert_eq!(d.order(), 60);
        let s3_factor: Vec<usize> = (0..6).map(|i| i * 10).collect();
        assert_eq!(d.is_normal(&s3_factor), Ok(true));
    }

    #[test]
    fn inner_maps_in_groups_are_conjugation() {
        let g = groups::symmetric(3);
        for x in g.elements() {
            let xi = g.inv(x).unwrap();
            let maps = g.inner_maps(x, 0);
            for z in g.elements() {
                assert_eq!(maps.middle.apply(z), g.mul(g.mul(x, z), xi));
                assert_eq!(maps.left.apply(z), z);
            }
        }
    }

    #[test]
    fn loop_format_round_trip() {
        let t = fixtures::table1_16();
        let text = t.to_loop_string();
        assert_eq!(LoopTable::parse(&text).unwrap(), t);
        assert!(matches!(LoopTable::parse("2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(LoopTable::parse("2\n0 1\n1 -1\n"), Err(Error::Parse { .. })));
    }
}
