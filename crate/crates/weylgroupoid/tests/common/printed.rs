//! Published Hamilton words of finite Weyl groups, 1-based.
#![allow(dead_code)]

/// Type B3 (4-bond between 1 and 2), application order.
pub const B3_WORD: &[usize] = &[
    1, 2, 1, 2, 1, 2, 3, 2, 1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 2,
    1, 2, 1, 2, 1, 2, 3, 2, 1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 2,
];

/// Type B4, printed right to left: the last letter is applied first.
pub const B4_WORD: &[usize] = &[
    2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 2, 3, 2, 1, 2, 1, 2, 1,
    2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 2, 3, 2, 1, 2, 1, 2, 4,
    2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 2, 3, 2, 1, 2, 1, 2, 1,
    2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 4, 1, 2, 3, 2, 3, 2, 1,
    2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 2, 3, 2, 1, 2, 1, 2, 1, 2, 3, 2, 3, 2, 1,
    2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 4, 1, 2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3,
    2, 1, 2, 1, 2, 3, 2, 1, 2, 1, 2, 1, 2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3,
    2, 1, 2, 1, 4, 1, 2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 2, 3,
    2, 1, 2, 1, 2, 1, 2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 4, 1,
    2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 2, 3, 2, 1, 2, 1, 2, 1,
    2, 3, 4, 1, 2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 2, 3, 2, 1,
    2, 1, 2, 1, 2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 2, 3, 2, 1,
    2, 1, 4, 3, 2, 1, 2, 3, 2, 1, 4, 1, 2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3,
    2, 1, 2, 1, 2, 3, 2, 1, 2, 1, 2, 1, 2, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3,
    2, 1, 2, 1, 2, 3, 2, 1, 2, 1, 4, 3, 2, 1, 2, 1, 2, 3, 2, 1, 2, 1, 4, 3,
    2, 1, 2, 1, 4, 3, 2, 1, 2, 1, 4, 3, 2, 1, 2, 1, 4, 3, 2, 1, 2, 1, 2, 4,
];

/// Coset label printed with each letter of `B4_WORD`.
pub const B4_BLOCKS: &[usize] = &[
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 4, 4, 4, 4, 4, 4, 4,
    4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4,
    4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7,
    7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7,
    7, 7, 7, 7, 7, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6,
    6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 3,
    3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
    3, 3, 3, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5,
    5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5,
    5, 5, 5, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
    2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
    2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 6,
    6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 4, 4, 4, 4, 4, 4, 1, 1, 1, 1, 1, 1, 1,
];

/// Type A4.
pub const A4_WORD: &[usize] = &[
    3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 1, 4,
    3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 4, 1, 4, 3, 2,
    3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 1, 4, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4,
    1, 4, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2,
    1, 2, 3, 2, 3, 4, 3, 4, 3, 2, 1, 2, 3, 2, 3, 4, 3, 4, 3, 2, 1, 2, 1, 4,
];

/// Type D4 with branch node 2.
pub const D4_WORD: &[usize] = &[
    2, 3, 2, 3, 2, 4, 2, 4, 2, 3, 2, 4, 2, 3, 2, 3, 2, 4, 2, 4, 2, 3, 2, 1,
    2, 3, 2, 3, 2, 4, 2, 4, 2, 3, 2, 4, 2, 3, 2, 3, 2, 4, 2, 4, 2, 1, 2, 4,
    2, 3, 2, 3, 2, 4, 2, 4, 2, 3, 2, 4, 2, 3, 2, 3, 2, 1, 2, 3, 2, 3, 2, 4,
    2, 4, 2, 3, 2, 4, 2, 3, 2, 3, 2, 4, 2, 1, 2, 3, 2, 3, 2, 4, 2, 4, 2, 3,
    2, 4, 2, 3, 2, 3, 2, 1, 2, 3, 2, 3, 2, 4, 2, 4, 2, 3, 2, 4, 2, 3, 2, 3,
    2, 4, 2, 1, 2, 3, 2, 3, 2, 4, 2, 4, 2, 1, 2, 4, 2, 3, 2, 3, 2, 4, 2, 4,
    2, 3, 2, 4, 2, 3, 2, 3, 2, 4, 2, 4, 2, 1, 2, 4, 2, 3, 2, 3, 2, 4, 2, 4,
    2, 3, 2, 1, 2, 3, 2, 1, 2, 4, 2, 3, 2, 1, 2, 3, 2, 1, 2, 4, 2, 1, 2, 1,
];

/// Type F4 (4-bond between 2 and 3).
pub const F4_WORD: &[usize] = &[
    3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2,
    3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2,
    3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2,
    3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 1, 2, 3, 4,
    3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4,
    3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2,
    3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2,
    3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2,
    3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2,
    3, 4, 3, 2, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4,
    3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4,
    1, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2,
    3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 1, 2, 3, 4,
    3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4,
    3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2,
    3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 1, 2,
    3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2,
    3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2,
    3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 1, 2, 3, 4,
    3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4,
    3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2,
    3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2,
    3, 4, 3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2,
    3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 1, 2,
    3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2,
    3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2,
    3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2,
    3, 4, 3, 2, 3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4,
    3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 2, 3, 4,
    3, 2, 3, 2, 1, 2, 3, 2, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 4, 3, 2, 3, 4, 3, 2,
    3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 1, 2, 3, 4, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 3, 2, 3, 4, 3, 4, 3, 2, 3, 4,
    3, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 4, 3, 2, 3, 4, 3, 2,
    3, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2,
    3, 4, 3, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2,
    3, 4, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 4, 3, 2, 3, 2, 1, 2,
    3, 4, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 2,
    1, 2, 3, 2, 1, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1, 2,
];
