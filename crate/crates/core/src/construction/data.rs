//! Hard-coded facet lists.

/// The 11-vertex bounded complex with boundary RP^3.
pub(crate) const BOUNDED_CP2_HOLE: [[u32; 5]; 30] = [
    [1, 3, 5, 6, 11], [2, 3, 5, 6, 11], [2, 4, 5, 6, 11], [2, 3, 6, 9, 11], [3, 6, 7, 9, 11], [1, 3, 6, 7, 11],
    [6, 7, 8, 10, 11], [1, 6, 7, 10, 11], [4, 6, 8, 9, 11], [6, 7, 8, 9, 11], [2, 4, 6, 9, 11], [1, 2, 3, 5, 8],
    [1, 2, 3, 5, 11], [1, 5, 7, 8, 9], [1, 2, 5, 7, 8], [1, 4, 5, 9, 11], [4, 5, 7, 9, 11], [1, 4, 5, 7, 9],
    [1, 2, 4, 5, 11], [1, 2, 4, 5, 7], [3, 4, 7, 8, 11], [1, 3, 4, 7, 8], [1, 2, 3, 8, 11], [1, 3, 7, 8, 11],
    [1, 2, 8, 10, 11], [1, 7, 8, 10, 11], [1, 2, 7, 8, 10], [4, 7, 8, 9, 11], [1, 4, 7, 8, 9], [1, 2, 4, 9, 11],
];

/// The 17-vertex K3 surface.
pub(crate) const K3_17: [[u32; 5]; 312] = [
    [1, 2, 3, 8, 13], [1, 2, 3, 8, 14], [1, 2, 3, 12, 13], [1, 2, 3, 12, 15], [1, 2, 3, 14, 15], [1, 2, 4, 7, 13],
    [1, 2, 4, 7, 15], [1, 2, 4, 13, 15], [1, 2, 5, 6, 9], [1, 2, 5, 6, 14], [1, 2, 5, 9, 17], [1, 2, 5, 14, 15],
    [1, 2, 5, 15, 17], [1, 2, 6, 8, 14], [1, 2, 6, 8, 15], [1, 2, 6, 9, 16], [1, 2, 6, 15, 17], [1, 2, 6, 16, 17],
    [1, 2, 7, 8, 11], [1, 2, 7, 8, 15], [1, 2, 7, 11, 13], [1, 2, 8, 10, 11], [1, 2, 8, 10, 13], [1, 2, 9, 16, 17],
    [1, 2, 10, 11, 13], [1, 2, 12, 13, 15], [1, 3, 4, 5, 8], [1, 3, 4, 5, 17], [1, 3, 4, 6, 10], [1, 3, 4, 6, 12],
    [1, 3, 4, 8, 9], [1, 3, 4, 9, 10], [1, 3, 4, 12, 17], [1, 3, 5, 7, 11], [1, 3, 5, 7, 14], [1, 3, 5, 8, 16],
    [1, 3, 5, 11, 16], [1, 3, 5, 14, 15], [1, 3, 5, 15, 17], [1, 3, 6, 10, 12], [1, 3, 7, 8, 11], [1, 3, 7, 8, 14],
    [1, 3, 8, 9, 12], [1, 3, 8, 11, 16], [1, 3, 8, 12, 13], [1, 3, 9, 10, 12], [1, 3, 12, 15, 17], [1, 4, 5, 8, 16],
    [1, 4, 5, 11, 16], [1, 4, 5, 11, 17], [1, 4, 6, 7, 12], [1, 4, 6, 7, 15], [1, 4, 6, 10, 15], [1, 4, 7, 12, 13],
    [1, 4, 8, 9, 16], [1, 4, 9, 10, 14], [1, 4, 9, 14, 16], [1, 4, 10, 14, 16], [1, 4, 10, 15, 16], [1, 4, 11, 16, 17],
    [1, 4, 12, 13, 17], [1, 4, 13, 15, 16], [1, 4, 13, 16, 17], [1, 5, 6, 9, 13], [1, 5, 6, 13, 14], [1, 5, 7, 10, 12],
    [1, 5, 7, 10, 14], [1, 5, 7, 11, 12], [1, 5, 9, 11, 13], [1, 5, 9, 11, 17], [1, 5, 10, 12, 14], [1, 5, 11, 12, 13],
    [1, 5, 12, 13, 14], [1, 6, 7, 8, 14], [1, 6, 7, 8, 15], [1, 6, 7, 10, 12], [1, 6, 7, 10, 16], [1, 6, 7, 14, 16],
    [1, 6, 9, 11, 13], [1, 6, 9, 11, 14], [1, 6, 9, 14, 16], [1, 6, 10, 15, 16], [1, 6, 11, 13, 14], [1, 6, 15, 16, 17],
    [1, 7, 10, 14, 16], [1, 7, 11, 12, 13], [1, 8, 9, 10, 11], [1, 8, 9, 10, 12], [1, 8, 9, 11, 16], [1, 8, 10, 12, 13],
    [1, 9, 10, 11, 14], [1, 9, 11, 16, 17], [1, 10, 11, 13, 14], [1, 10, 12, 13, 14], [1, 12, 13, 15, 16], [1, 12, 13, 16, 17],
    [1, 12, 15, 16, 17], [2, 3, 4, 6, 12], [2, 3, 4, 6, 16], [2, 3, 4, 7, 14], [2, 3, 4, 7, 16], [2, 3, 4, 12, 14],
    [2, 3, 5, 6, 12], [2, 3, 5, 6, 16], [2, 3, 5, 12, 16], [2, 3, 7, 14, 16], [2, 3, 8, 13, 14], [2, 3, 9, 10, 13],
    [2, 3, 9, 10, 14], [2, 3, 9, 11, 14], [2, 3, 9, 11, 16], [2, 3, 9, 12, 13], [2, 3, 9, 12, 16], [2, 3, 10, 13, 14],
    [2, 3, 11, 14, 16], [2, 3, 12, 14, 15], [2, 4, 5, 7, 10], [2, 4, 5, 7, 11], [2, 4, 5, 8, 10], [2, 4, 5, 8, 12],
    [2, 4, 5, 11, 12], [2, 4, 6, 11, 12], [2, 4, 6, 11, 16], [2, 4, 7, 9, 14], [2, 4, 7, 9, 15], [2, 4, 7, 10, 13],
    [2, 4, 7, 11, 16], [2, 4, 8, 10, 12], [2, 4, 9, 10, 13], [2, 4, 9, 10, 14], [2, 4, 9, 13, 15], [2, 4, 10, 12, 14],
    [2, 5, 6, 7, 10], [2, 5, 6, 7, 12], [2, 5, 6, 8, 10], [2, 5, 6, 8, 14], [2, 5, 6, 9, 16], [2, 5, 7, 11, 12],
    [2, 5, 8, 12, 14], [2, 5, 9, 15, 16], [2, 5, 9, 15, 17], [2, 5, 12, 14, 15], [2, 5, 12, 15, 16], [2, 6, 7, 10, 13],
    [2, 6, 7, 11, 12], [2, 6, 7, 11, 13], [2, 6, 8, 10, 15], [2, 6, 10, 11, 13], [2, 6, 10, 11, 17], [2, 6, 10, 15, 17],
    [2, 6, 11, 16, 17], [2, 7, 8, 11, 15], [2, 7, 9, 11, 14], [2, 7, 9, 11, 15], [2, 7, 11, 14, 16], [2, 8, 10, 11, 15],
    [2, 8, 10, 12, 14], [2, 8, 10, 13, 14], [2, 9, 11, 15, 17], [2, 9, 11, 16, 17], [2, 9, 12, 13, 16], [2, 9, 13, 15, 16],
    [2, 10, 11, 15, 17], [2, 12, 13, 15, 16], [3, 4, 5, 8, 17], [3, 4, 6, 8, 9], [3, 4, 6, 8, 11], [3, 4, 6, 9, 15],
    [3, 4, 6, 10, 15], [3, 4, 6, 11, 13], [3, 4, 6, 13, 16], [3, 4, 7, 12, 14], [3, 4, 7, 12, 17], [3, 4, 7, 13, 16],
    [3, 4, 7, 13, 17], [3, 4, 8, 11, 17], [3, 4, 9, 10, 15], [3, 4, 11, 13, 17], [3, 5, 6, 10, 12], [3, 5, 6, 10, 15],
    [3, 5, 6, 13, 15], [3, 5, 6, 13, 16], [3, 5, 7, 11, 15], [3, 5, 7, 14, 15], [3, 5, 8, 16, 17], [3, 5, 9, 10, 15],
    [3, 5, 9, 10, 17], [3, 5, 9, 15, 17], [3, 5, 10, 12, 16], [3, 5, 10, 16, 17], [3, 5, 11, 15, 16], [3, 5, 13, 15, 16],
    [3, 6, 7, 8, 9], [3, 6, 7, 8, 15], [3, 6, 7, 9, 15], [3, 6, 8, 11, 15], [3, 6, 11, 13, 15], [3, 7, 8, 9, 13],
    [3, 7, 8, 11, 15], [3, 7, 8, 13, 14], [3, 7, 9, 13, 17], [3, 7, 9, 15, 17], [3, 7, 12, 14, 15], [3, 7, 12, 15, 17],
    [3, 7, 13, 14, 16], [3, 8, 9, 12, 13], [3, 8, 10, 11, 16], [3, 8, 10, 11, 17], [3, 8, 10, 16, 17], [3, 9, 10, 11, 14],
    [3, 9, 10, 11, 16], [3, 9, 10, 12, 16], [3, 9, 10, 13, 17], [3, 10, 11, 13, 14], [3, 10, 11, 13, 17], [3, 11, 13, 14, 16],
    [3, 11, 13, 15, 16], [4, 5, 7, 8, 13], [4, 5, 7, 8, 16], [4, 5, 7, 10, 13], [4, 5, 7, 11, 16], [4, 5, 8, 10, 15],
    [4, 5, 8, 11, 12], [4, 5, 8, 11, 17], [4, 5, 8, 13, 15], [4, 5, 9, 10, 13], [4, 5, 9, 10, 15], [4, 5, 9, 13, 15],
    [4, 6, 7, 9, 12], [4, 6, 7, 9, 15], [4, 6, 8, 9, 14], [4, 6, 8, 11, 14], [4, 6, 9, 12, 14], [4, 6, 11, 12, 14],
    [4, 6, 11, 13, 17], [4, 6, 11, 16, 17], [4, 6, 13, 16, 17], [4, 7, 8, 13, 16], [4, 7, 9, 12, 14], [4, 7, 12, 13, 17],
    [4, 8, 9, 14, 16], [4, 8, 10, 11, 12], [4, 8, 10, 11, 15], [4, 8, 11, 14, 15], [4, 8, 13, 15, 16], [4, 8, 14, 15, 16],
    [4, 10, 11, 12, 15], [4, 10, 12, 14, 16], [4, 10, 12, 15, 16], [4, 11, 12, 14, 15], [4, 12, 14, 15, 16], [5, 6, 7, 10, 12],
    [5, 6, 8, 10, 15], [5, 6, 8, 13, 14], [5, 6, 8, 13, 15], [5, 6, 9, 13, 16], [5, 7, 8, 9, 13], [5, 7, 8, 9, 17],
    [5, 7, 8, 16, 17], [5, 7, 9, 10, 13], [5, 7, 9, 10, 17], [5, 7, 10, 14, 16], [5, 7, 10, 16, 17], [5, 7, 11, 15, 16],
    [5, 7, 14, 15, 16], [5, 8, 9, 12, 13], [5, 8, 9, 12, 17], [5, 8, 11, 12, 17], [5, 8, 12, 13, 14], [5, 9, 11, 12, 13],
    [5, 9, 11, 12, 17], [5, 9, 13, 15, 16], [5, 10, 12, 14, 16], [5, 12, 14, 15, 16], [6, 7, 8, 9, 16], [6, 7, 8, 14, 16],
    [6, 7, 9, 12, 16], [6, 7, 10, 13, 17], [6, 7, 10, 16, 17], [6, 7, 11, 12, 13], [6, 7, 12, 13, 17], [6, 7, 12, 16, 17],
    [6, 8, 9, 14, 16], [6, 8, 11, 13, 14], [6, 8, 11, 13, 15], [6, 9, 11, 12, 13], [6, 9, 11, 12, 14], [6, 9, 12, 13, 16],
    [6, 10, 11, 13, 17], [6, 10, 15, 16, 17], [6, 12, 13, 16, 17], [7, 8, 9, 12, 16], [7, 8, 9, 12, 17], [7, 8, 12, 16, 17],
    [7, 8, 13, 14, 16], [7, 9, 10, 13, 17], [7, 9, 11, 14, 15], [7, 9, 12, 14, 15], [7, 9, 12, 15, 17], [7, 11, 14, 15, 16],
    [8, 9, 10, 11, 16], [8, 9, 10, 12, 16], [8, 10, 11, 12, 17], [8, 10, 12, 13, 14], [8, 10, 12, 16, 17], [8, 11, 13, 14, 15],
    [8, 13, 14, 15, 16], [9, 11, 12, 14, 15], [9, 11, 12, 15, 17], [10, 11, 12, 15, 17], [10, 12, 15, 16, 17], [11, 13, 14, 15, 16],
];
