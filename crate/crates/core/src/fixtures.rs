//! Verbatim multiplication tables shipped with the library.

use crate::cayley_dickson::SignedTable;
use crate::error::{Error, Result};
use crate::table::LoopTable;

/// The smallest nonassociative Steiner loop, order 10.
pub const STEINER10: [[usize; 10]; 10] = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
    [1, 0, 3, 2, 5, 4, 7, 6, 9, 8],
    [2, 3, 0, 1, 6, 9, 4, 8, 7, 5],
    [3, 2, 1, 0, 8, 7, 9, 5, 4, 6],
    [4, 5, 6, 8, 0, 1, 2, 9, 3, 7],
    [5, 4, 9, 7, 1, 0, 8, 3, 6, 2],
    [6, 7, 4, 9, 2, 8, 0, 1, 5, 3],
    [7, 6, 8, 5, 9, 3, 1, 0, 2, 4],
    [8, 9, 7, 4, 3, 6, 5, 2, 0, 1],
    [9, 8, 5, 6, 7, 2, 3, 4, 1, 0],
];

/// A smallest nonflexible noncommutative C-loop whose nucleus is an
/// elementary abelian 2-group (order 16).
pub const TABLE1: [[usize; 16]; 16] = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
    [1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14],
    [2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 12, 13],
    [3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8, 15, 14, 13, 12],
    [4, 5, 7, 6, 0, 1, 3, 2, 12, 13, 15, 14, 8, 9, 11, 10],
    [5, 4, 6, 7, 1, 0, 2, 3, 13, 12, 14, 15, 9, 8, 10, 11],
    [6, 7, 5, 4, 2, 3, 1, 0, 14, 15, 13, 12, 10, 11, 9, 8],
    [7, 6, 4, 5, 3, 2, 0, 1, 15, 14, 12, 13, 11, 10, 8, 9],
    [8, 9, 11, 10, 14, 15, 13, 12, 0, 1, 3, 2, 7, 6, 4, 5],
    [9, 8, 10, 11, 15, 14, 12, 13, 1, 0, 2, 3, 6, 7, 5, 4],
    [10, 11, 9, 8, 12, 13, 15, 14, 2, 3, 1, 0, 5, 4, 6, 7],
    [11, 10, 8, 9, 13, 12, 14, 15, 3, 2, 0, 1, 4, 5, 7, 6],
    [12, 13, 14, 15, 10, 11, 8, 9, 4, 5, 6, 7, 2, 3, 0, 1],
    [13, 12, 15, 14, 11, 10, 9, 8, 5, 4, 7, 6, 3, 2, 1, 0],
    [14, 15, 12, 13, 8, 9, 10, 11, 6, 7, 4, 5, 0, 1, 2, 3],
    [15, 14, 13, 12, 9, 8, 11, 10, 7, 6, 5, 4, 1, 0, 3, 2],
];

/// Structure constants of the standard real sedenions: entry `(i, j)` is
/// `±k` when `a_{i+1} a_{j+1} = ±a_k` (basis indices are 1-based).
pub const SEDENION_CONSTANTS: [[i8; 16]; 16] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16],
    [2, -1, 4, -3, 6, -5, -8, 7, 10, -9, -12, 11, -14, 13, 16, -15],
    [3, -4, -1, 2, 7, 8, -5, -6, 11, 12, -9, -10, -15, -16, 13, 14],
    [4, 3, -2, -1, 8, -7, 6, -5, 12, -11, 10, -9, -16, 15, -14, 13],
    [5, -6, -7, -8, -1, 2, 3, 4, 13, 14, 15, 16, -9, -10, -11, -12],
    [6, 5, -8, 7, -2, -1, -4, 3, 14, -13, 16, -15, 10, -9, 12, -11],
    [7, 8, 5, -6, -3, 4, -1, -2, 15, -16, -13, 14, 11, -12, -9, 10],
    [8, -7, 6, 5, -4, -3, 2, -1, 16, 15, -14, -13, 12, 11, -10, -9],
    [9, -10, -11, -12, -13, -14, -15, -16, -1, 2, 3, 4, 5, 6, 7, 8],
    [10, 9, -12, 11, -14, 13, 16, -15, -2, -1, -4, 3, -6, 5, 8, -7],
    [11, 12, 9, -10, -15, -16, 13, 14, -3, 4, -1, -2, -7, -8, 5, 6],
    [12, -11, 10, 9, -16, 15, -14, 13, -4, -3, 2, -1, -8, 7, -6, 5],
    [13, 14, 15, 16, 9, -10, -11, -12, -5, 6, 7, 8, -1, -2, -3, -4],
    [14, -13, 16, -15, 10, 9, 12, -11, -6, -5, 8, -7, 2, -1, 4, -3],
    [15, -16, -13, 14, 11, -12, 9, 10, -7, -8, -5, 6, 3, -4, -1, 2],
    [16, 15, -14, -13, 12, 11, -10, 9, -8, 7, -6, -5, 4, 3, -2, -1],
];

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 3] = ["steiner10", "table1_16", "sedenion_table2"];

pub fn steiner10() -> LoopTable {
    LoopTable::from_rows(&STEINER10).expect("steiner10 fixture is a loop")
}

pub fn table1_16() -> LoopTable {
    LoopTable::from_rows(&TABLE1).expect("table1 fixture is a loop")
}

/// The sedenion structure constants as a level-4 signed table.
pub fn sedenion_constants() -> SignedTable {
    SignedTable::from_signed_rows(&SEDENION_CONSTANTS).expect("sedenion fixture is well formed")
}

/// The 32-element sedenion loop read off the shipped structure constants.
pub fn sedenion_table2() -> LoopTable {
    sedenion_constants().signed_loop()
}

pub fn builtin(name: &str) -> Result<LoopTable> {
    match name {
        "steiner10" => Ok(steiner10()),
        "table1_16" => Ok(table1_16()),
        "sedenion_table2" => Ok(sedenion_table2()),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}
