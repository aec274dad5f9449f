//! Frozen reference data consumed by the verify targets: the full
//! irreducible decompositions of both hatted families on the published
//! range, and the two tableau classes listed tableau by tableau for small
//! sizes. Values were derived independently before being recorded here;
//! the verify targets recompute everything and compare.

/// One hatted family as frozen (n, i, Schur expansion) cells.
pub type CellTable = &'static [(u32, u32, &'static [(&'static str, i64)])];

/// Cells of the hatted Lie family, n ≤ 8, i ≤ 4. Cells absent from the
/// list are zero.
pub const LIE_CELLS: CellTable = &[
    (0, 0, &[("", 1)]),
    (2, 1, &[("1,1", 1)]),
    (3, 2, &[("2,1", 1)]),
    (4, 2, &[("2,2", 1), ("1,1,1,1", 1)]),
    (4, 3, &[("3,1", 1), ("2,1,1", 1)]),
    (5, 3, &[("2,1,1,1", 1), ("3,2", 1), ("3,1,1", 1), ("2,2,1", 1)]),
    (
        5,
        4,
        &[("4,1", 1), ("3,2", 1), ("3,1,1", 1), ("2,2,1", 1), ("2,1,1,1", 1)],
    ),
    (6, 3, &[("1,1,1,1,1,1", 1), ("2,2,1,1", 1), ("3,3", 1)]),
    (
        6,
        4,
        &[
            ("4,1,1", 1),
            ("2,2,1,1", 1),
            ("2,1,1,1,1", 1),
            ("3,2,1", 3),
            ("3,1,1,1", 3),
            ("2,2,2", 2),
            ("4,2", 2),
        ],
    ),
    (
        7,
        4,
        &[
            ("4,2,1", 1),
            ("4,3", 1),
            ("2,2,2,1", 1),
            ("3,1,1,1,1", 1),
            ("3,2,1,1", 2),
            ("2,2,1,1,1", 1),
            ("3,2,2", 1),
            ("3,3,1", 1),
            ("2,1,1,1,1,1", 1),
        ],
    ),
    (
        8,
        4,
        &[
            ("4,4", 1),
            ("3,3,1,1", 1),
            ("2,2,2,2", 1),
            ("2,2,1,1,1,1", 1),
            ("1,1,1,1,1,1,1,1", 1),
        ],
    ),
];

/// Cells (n, i, Schur expansion) of the hatted Whitney family, n ≤ 8,
/// i ≤ 4. Cells absent from the list are zero.
pub const W_CELLS: CellTable = &[
    (0, 0, &[("", 1)]),
    (2, 1, &[("2", 1)]),
    (3, 2, &[("2,1", 1)]),
    (4, 2, &[("3,1", 1)]),
    (4, 3, &[("3,1", 1), ("2,1,1", 1)]),
    (5, 3, &[("4,1", 1), ("3,2", 1), ("3,1,1", 1), ("2,2,1", 1)]),
    (
        5,
        4,
        &[("4,1", 1), ("3,2", 1), ("3,1,1", 1), ("2,2,1", 1), ("2,1,1,1", 1)],
    ),
    (6, 3, &[("4,1,1", 1), ("3,3", 1)]),
    (
        6,
        4,
        &[
            ("5,1", 1),
            ("4,2", 2),
            ("4,1,1", 2),
            ("3,3", 1),
            ("3,2,1", 3),
            ("3,1,1,1", 2),
            ("2,2,2", 1),
            ("2,2,1,1", 1),
        ],
    ),
    (
        7,
        4,
        &[
            ("5,2", 1),
            ("5,1,1", 1),
            ("4,3", 1),
            ("4,2,1", 2),
            ("4,1,1,1", 1),
            ("3,3,1", 1),
            ("3,2,2", 1),
            ("3,2,1,1", 1),
        ],
    ),
    (8, 4, &[("5,1,1,1", 1), ("4,3,1", 1)]),
];

/// Desarrangement tableaux (text form, unordered) for n ≤ 5.
pub const DESARRANGEMENT_TABLEAUX: [&[&str]; 6] = [
    &[""],
    &[],
    &["1 / 2"],
    &["1 3 / 2"],
    &["1 3 / 2 4", "1 / 2 / 3 / 4", "1 3 4 / 2", "1 3 / 2 / 4"],
    &[
        "1 3 / 2 / 4 / 5",
        "1 3 / 2 4 / 5",
        "1 3 4 / 2 / 5",
        "1 3 4 / 2 5",
        "1 3 4 5 / 2",
        "1 3 5 / 2 4",
        "1 3 5 / 2 / 4",
        "1 3 / 2 5 / 4",
        "1 5 / 2 / 3 / 4",
    ],
];

/// Whitney-generating tableaux (text form, unordered) for n ≤ 5.
pub const WHITNEY_TABLEAUX: [&[&str]; 6] = [
    &[""],
    &[],
    &["1 2"],
    &["1 2 / 3"],
    &["1 2 / 3 / 4", "1 2 3 / 4", "1 2 4 / 3"],
    &[
        "1 2 / 3 / 4 / 5",
        "1 2 / 3 5 / 4",
        "1 2 5 / 3 / 4",
        "1 2 / 3 4 / 5",
        "1 2 3 / 4 5",
        "1 2 3 5 / 4",
        "1 2 4 / 3 / 5",
        "1 2 4 / 3 5",
        "1 2 4 5 / 3",
    ],
];
