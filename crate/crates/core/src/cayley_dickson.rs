//! Standard Cayley-Dickson doubling (`λ = -1`) on signed basis elements.
//!
//! With the basis chosen as `c_i = (d_i, 0)`, `c_{i+n} = (0, d_i)`, every
//! product of basis elements has exactly one nonzero summand in
//! `(x,y)(u,v) = (xu - v̄y, vx + yū)`:
//!
//! ```text
//! c_i     c_j     = ( d_i d_j, 0)
//! c_i     c_{j+n} = ( 0, d_j d_i)
//! c_{i+n} c_j     = ( 0, d_i d̄_j)
//! c_{i+n} c_{j+n} = (-d̄_j d_i, 0)
//! ```
//!
//! and conjugation doubles as `(u, v)‾ = (ū, -v)`. All bookkeeping is
//! therefore integer-only. Basis indices are 1-based throughout this module.

use std::fmt;

use crate::error::{parse_err, Error, Result};
use crate::fixtures::SEDENION_CONSTANTS;
use crate::table::LoopTable;

/// Highest level [`SignedTable::level`] builds (loop order `2^(MAX_LEVEL+1)`).
pub const MAX_LEVEL: u32 = 10;

/// `±a_index` with a 1-based basis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedElement {
    pub negative: bool,
    pub index: usize,
}

impl SignedElement {
    pub const fn pos(index: usize) -> Self {
        SignedElement { negative: false, index }
    }

    pub const fn neg(index: usize) -> Self {
        SignedElement { negative: true, index }
    }

    pub fn negate(self) -> Self {
        SignedElement { negative: !self.negative, index: self.index }
    }

    fn with_sign(self, negative: bool) -> Self {
        SignedElement { negative: self.negative ^ negative, index: self.index }
    }

    /// Position in the exported loop table: `+a_i -> 2(i-1)`, `-a_i -> 2(i-1)+1`.
    pub fn loop_index(self) -> usize {
        2 * (self.index - 1) + usize::from(self.negative)
    }

    pub fn from_loop_index(e: usize) -> Self {
        SignedElement { negative: e % 2 == 1, index: e / 2 + 1 }
    }

    fn signed_int(self) -> i64 {
        if self.negative {
            -(self.index as i64)
        } else {
            self.index as i64
        }
    }
}

impl fmt::Display for SignedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed_int())
    }
}

/// Products of the basis elements of one Cayley-Dickson level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTable {
    level: u32,
    dim: usize,
    products: Vec<SignedElement>,
    // conj_negative[i-1]: whether d̄_i = -d_i
    conj_negative: Vec<bool>,
}

impl SignedTable {
    /// Level 0: the reals, basis `{1}`.
    pub fn reals() -> Self {
        SignedTable { level: 0, dim: 1, products: vec![SignedElement::pos(1)], conj_negative: vec![false] }
    }

    /// Doubles from the reals `n` times.
    pub fn level(n: u32) -> Result<Self> {
        Self::level_bounded(n, MAX_LEVEL)
    }

    pub fn level_bounded(n: u32, max_level: u32) -> Result<Self> {
        if n > max_level {
            return Err(Error::TooLarge { n: n as usize, bound: max_level as usize });
        }
        let mut t = Self::reals();
        for _ in 0..n {
            t = t.double()?;
        }
        Ok(t)
    }

    /// Builds a table from rows of signed 1-based indices (the rendering of
    /// [`SignedTable::render_constants`]) with the standard conjugation.
    pub fn from_signed_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || !dim.is_power_of_two() {
            return Err(Error::InvariantViolation(format!("dimension {dim} is not a power of two")));
        }
        let mut products = Vec::with_capacity(dim * dim);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(Error::Ragged { row: i, len: row.len(), expected: dim });
            }
            for &v in row {
                let index = v.unsigned_abs() as usize;
                if index == 0 || index > dim {
                    return Err(Error::InvariantViolation(format!("basis index {v} out of range")));
                }
                products.push(SignedElement { negative: v < 0, index });
            }
        }
        let t = SignedTable {
            level: dim.trailing_zeros(),
            dim,
            products,
            conj_negative: (0..dim).map(|i| i > 0).collect(),
        };
        t.validate()?;
        Ok(t)
    }

    pub fn level_number(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `d_i d_j` for 1-based `i`, `j`.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> SignedElement {
        self.products[(i - 1) * self.dim + (j - 1)]
    }

    /// Product of signed elements.
    pub fn mul(&self, x: SignedElement, y: SignedElement) -> SignedElement {
        self.product(x.index, y.index).with_sign(x.negative ^ y.negative)
    }

    /// `d̄_i` as a signed element.
    pub fn conj(&self, i: usize) -> SignedElement {
        SignedElement { negative: self.conj_negative[i - 1], index: i }
    }

    pub fn conj_element(&self, x: SignedElement) -> SignedElement {
        self.conj(x.index).with_sign(x.negative)
    }

    /// Checks the basis conditions that doubling preserves: neutral `d_1`,
    /// `d̄_i = -d_i`, `d_i d_i = -1`, anticommutation, conjugation reversing
    /// products, and the alternative/flexible relations on basis pairs.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        let bad = |msg: String| Err(Error::InvariantViolation(msg));
        if self.products.len() != n * n || self.conj_negative.len() != n {
            return bad("table size does not match dimension".into());
        }
        if self.conj_negative[0] {
            return bad("d_1 is not self-conjugate".into());
        }
        for j in 1..=n {
            if self.product(1, j) != SignedElement::pos(j) || self.product(j, 1) != SignedElement::pos(j) {
                return bad(format!("d_1 is not neutral at {j}"));
            }
        }
        for i in 2..=n {
            if !self.conj_negative[i - 1] {
                return bad(format!("conj(d_{i}) != -d_{i}"));
            }
            if self.product(i, i) != SignedElement::neg(1) {
                return bad(format!("d_{i} d_{i} != -1"));
            }
            for j in i + 1..=n {
                if self.product(i, j) != self.product(j, i).negate() {
                    return bad(format!("d_{i} d_{j} != -d_{j} d_{i}"));
                }
            }
        }
        for i in 1..=n {
            let di = SignedElement::pos(i);
            if self.conj_element(self.conj(i)) != di {
                return bad(format!("conjugation is not involutive at {i}"));
            }
            for j in 1..=n {
                let dj = SignedElement::pos(j);
                let dij = self.product(i, j);
                if self.conj_element(dij) != self.mul(self.conj(j), self.conj(i)) {
                    return bad(format!("conj(d_{i} d_{j}) != conj(d_{j}) conj(d_{i})"));
                }
                let dii = self.product(i, i);
                let djj = self.product(j, j);
                let dji = self.product(j, i);
                if self.mul(di, dij) != self.mul(dii, dj)
                    || self.mul(di, djj) != self.mul(dij, dj)
                    || self.mul(dij, di) != self.mul(di, dji)
                {
                    return bad(format!("alternative/flexible relation fails at ({i}, {j})"));
                }
            }
        }
        Ok(())
    }

    /// One application of the standard doubling.
    pub fn double(&self) -> Result<SignedTable> {
        self.validate()?;
        let n = self.dim;
        let m = 2 * n;
        let mut products = vec![SignedElement::pos(1); m * m];
        let shift = |e: SignedElement| SignedElement { negative: e.negative, index: e.index + n };
        for i in 1..=n {
            for j in 1..=n {
                let dij = self.product(i, j);
                let dji = self.product(j, i);
                let conj_j = self.conj_negative[j - 1];
                products[(i - 1) * m + (j - 1)] = dij;
                products[(i - 1) * m + (j + n - 1)] = shift(dji);
                products[(i + n - 1) * m + (j - 1)] = shift(dij.with_sign(conj_j));
                products[(i + n - 1) * m + (j + n - 1)] = dji.with_sign(!conj_j);
            }
        }
        let mut conj_negative = self.conj_negative.clone();
        conj_negative.extend(std::iter::repeat_n(true, n));
        Ok(SignedTable { level: self.level + 1, dim: m, products, conj_negative })
    }

    /// The loop `±{a_1, …, a_dim}` of order `2·dim`.
    pub fn signed_loop(&self) -> LoopTable {
        LoopTable::from_fn(2 * self.dim, |x, y| {
            self.mul(SignedElement::from_loop_index(x), SignedElement::from_loop_index(y)).loop_index()
        })
        .expect("signed basis elements form a loop")
    }

    /// `dim` lines of `dim` signed 1-based indices separated by single spaces.
    pub fn render_constants(&self) -> String {
        let mut out = String::new();
        for row in self.products.chunks(self.dim) {
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_constants(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (ln, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let row: Result<Vec<i8>> = line
                .split_whitespace()
                .map(|tok| tok.parse::<i8>().map_err(|_| parse_err(ln + 1, format!("bad entry `{tok}`"))))
                .collect();
            rows.push(row?);
        }
        Self::from_signed_rows(&rows)
    }

    /// Compares a level-4 table entrywise against the shipped sedenion
    /// constants; the error carries the first differing 1-based `(i, j)`.
    pub fn verify_table2(&self) -> Result<()> {
        if self.dim != 16 {
            return Err(Error::Dimension(format!("expected dimension 16, got {}", self.dim)));
        }
        for i in 1..=16 {
            for j in 1..=16 {
                if self.product(i, j).signed_int() != i64::from(SEDENION_CONSTANTS[i - 1][j - 1]) {
                    return Err(Error::Mismatch(i, j));
                }
            }
        }
        Ok(())
    }
}

/// The standard sedenion loop, doubled from the reals four times.
pub fn sedenion_loop() -> LoopTable {
    SignedTable::level(4).expect("level 4 is within bounds").signed_loop()
}
