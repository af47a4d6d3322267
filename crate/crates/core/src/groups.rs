//! Small reference groups as loop tables.

use crate::table::LoopTable;

/// `Z_n` with `x * y = x + y mod n`.
pub fn cyclic(n: usize) -> LoopTable {
    LoopTable::from_fn(n, |x, y| (x + y) % n).expect("cyclic group")
}

/// `Z_2 x Z_2` as `{0, 1, 2, 3}` under XOR.
pub fn klein() -> LoopTable {
    elementary_abelian_2(2)
}

/// `Z_2^k` under XOR.
pub fn elementary_abelian_2(k: u32) -> LoopTable {
    LoopTable::from_fn(1 << k, |x, y| x ^ y).expect("elementary abelian 2-group")
}

/// The symmetric group on `m` points. Elements are listed in lexicographic
/// order of their image lists (identity first); `x * y` applies `y` first.
pub fn symmetric(m: usize) -> LoopTable {
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..m).collect();
    permutations(&mut current, 0, &mut perms);
    perms.sort();
    let index = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
    LoopTable::from_fn(perms.len(), |x, y| {
        let composed: Vec<usize> = perms[y].iter().map(|&i| perms[x][i]).collect();
        index(&composed)
    })
    .expect("symmetric group")
}

fn permutations(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permutations(current, k + 1, out);
        current.swap(k, i);
    }
}

/// The quaternion group `{±1, ±i, ±j, ±k}` from Hamilton's rules.
/// Element `2u + s` is `(-1)^s` times unit `u` (`1, i, j, k`).
pub fn quaternion() -> LoopTable {
    // unit products: (negative, unit)
    const UNITS: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    LoopTable::from_fn(8, |x, y| {
        let (neg, unit) = UNITS[x / 2][y / 2];
        let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
        2 * unit + sign
    })
    .expect("quaternion group")
}
