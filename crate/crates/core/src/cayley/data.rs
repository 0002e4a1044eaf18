//! Transcription of the 32x32 Kaluza basis multiplication table.
//!
//! Row `i`, column `j` holds `e_i * e_j` with `e_0 = 1`. Each row is split
//! over two lines: columns `1, e1..e15` then `e16..e31`. The entries are
//! copied cell-for-cell from the published four-quadrant table, including
//! its known misprint; see [`PRINTED_CORRECTIONS`].

use crate::signed::SignedIndex;

const fn p(index: u8) -> SignedIndex {
    SignedIndex::plus(index)
}

const fn n(index: u8) -> SignedIndex {
    SignedIndex::minus(index)
}

/// Cell corrections applied on top of [`PRINTED_TABLE`]:
/// `(row, column, printed, corrected)`.
///
/// `e2 * e22` is printed as `-e13`. With that sign the table is not
/// associative (122 failing triples, all through this cell), the matching
/// entry of the printed multiplication matrix reads `+b22`, and the 2x2 block
/// it lands in after row/column reordering is not bisymmetric. Flipping the
/// sign resolves all three.
pub const PRINTED_CORRECTIONS: [(usize, usize, SignedIndex, SignedIndex); 1] =
    [(2, 22, n(13), p(13))];

#[rustfmt::skip]
pub const PRINTED_TABLE: [SignedIndex; 1024] = [
    // 1
    p(0), p(1), p(2), p(3), p(4), p(5), p(6), p(7), p(8), p(9), p(10), p(11), p(12), p(13), p(14), p(15),
    p(16), p(17), p(18), p(19), p(20), p(21), p(22), p(23), p(24), p(25), p(26), p(27), p(28), p(29), p(30), p(31),
    // e1
    p(1), p(0), p(6), p(7), p(8), p(9), p(2), p(3), p(4), p(5), p(16), p(17), p(18), p(19), p(20), p(21),
    p(10), p(11), p(12), p(13), p(14), p(15), p(26), p(27), p(28), p(29), p(22), p(23), p(24), p(25), p(31), p(30),
    // e2
    p(2), n(6), p(0), p(10), p(11), p(12), n(1), n(16), n(17), n(18), p(3), p(4), p(5), p(22), p(23), p(24),
    n(7), n(8), n(9), n(26), n(27), n(28), n(13), p(14), p(15), p(30), n(19), n(20), n(21), n(31), p(25), n(29),
    // e3
    p(3), n(7), n(10), n(0), p(13), p(14), p(16), p(1), n(19), n(20), p(2), n(22), n(23), n(4), n(5), p(25),
    n(6), p(26), p(27), p(8), p(9), n(29), p(11), p(12), n(30), n(15), n(17), n(18), p(31), p(21), p(24), n(28),
    // e4
    p(4), n(8), n(11), n(13), n(0), p(15), p(17), p(19), p(1), n(21), p(22), p(2), n(24), p(3), n(25), n(5),
    n(26), n(6), p(28), n(7), p(29), p(9), n(10), p(30), p(12), p(14), p(16), n(31), n(18), n(20), n(23), p(27),
    // e5
    p(5), n(9), n(12), n(14), n(15), n(0), p(18), p(20), p(21), p(1), p(23), p(24), p(2), p(25), p(3), p(4),
    n(27), n(28), n(6), n(29), n(7), n(8), n(30), n(10), n(11), n(13), p(31), p(16), p(17), p(19), p(22), n(26),
    // e6
    p(6), n(2), p(1), p(16), p(17), p(18), n(0), n(10), n(11), n(12), p(7), p(8), p(9), p(26), p(27), p(28),
    n(3), n(4), n(5), n(22), n(23), n(24), p(19), p(20), p(21), p(31), n(13), n(14), n(15), n(30), p(29), n(25),
    // e7
    p(7), n(3), n(16), n(1), p(19), p(20), p(10), p(0), n(13), n(14), p(6), n(26), n(27), n(8), n(9), p(29),
    n(2), p(22), p(23), p(4), p(5), n(25), p(17), p(18), n(31), n(21), n(11), n(12), p(30), p(15), p(28), n(24),
    // e8
    p(8), n(4), n(17), n(19), n(1), p(21), p(11), p(13), p(0), n(15), p(26), p(6), n(28), p(7), n(29), n(9),
    n(22), n(2), p(24), n(3), p(25), p(5), n(16), p(31), p(18), p(20), p(10), n(30), n(12), n(14), n(27), p(23),
    // e9
    p(9), n(5), n(18), n(20), n(21), n(1), p(12), p(14), p(15), p(0), p(27), p(28), p(6), p(29), p(7), p(8),
    n(23), n(24), n(2), n(25), n(3), n(4), n(31), n(16), n(17), n(19), p(30), p(10), p(11), p(13), p(26), n(22),
    // e10
    p(10), p(16), n(3), n(2), p(22), p(23), n(7), n(6), p(26), p(27), p(0), n(13), n(14), n(11), n(12), p(30),
    p(1), n(19), n(20), n(17), n(18), p(31), p(4), p(5), n(25), n(24), p(8), p(9), n(29), n(28), p(15), p(21),
    // e11
    p(11), p(17), n(4), n(22), n(2), p(24), n(8), n(26), n(6), p(28), p(13), p(0), n(15), p(10), n(30), n(12),
    p(19), p(1), n(21), p(16), n(31), n(18), n(3), p(25), p(5), p(23), n(7), p(29), p(9), p(27), n(14), n(20),
    // e12
    p(12), p(18), n(5), n(23), n(24), n(2), n(9), n(27), n(28), n(6), p(14), p(15), p(0), p(30), p(10), p(11),
    p(20), p(21), p(1), p(31), p(16), p(17), n(25), n(3), n(4), n(22), n(29), n(7), n(8), n(26), p(13), p(19),
    // e13
    p(13), p(19), p(22), p(4), n(3), p(25), p(26), p(8), n(7), p(29), p(11), n(10), p(30), n(0), p(15), n(14),
    p(17), n(16), p(31), n(1), p(21), n(20), n(2), p(24), n(23), n(5), n(6), p(28), n(27), n(9), n(12), n(18),
    // e14
    p(14), p(20), p(23), p(5), n(25), n(3), p(27), p(9), n(29), n(7), p(12), n(30), n(10), n(15), n(0), p(13),
    p(18), n(31), n(16), n(21), n(1), p(19), n(24), n(2), p(22), p(4), n(28), n(6), p(26), p(8), p(11), p(17),
    // e15
    p(15), p(21), p(24), p(25), p(5), n(4), p(28), p(29), p(9), n(8), p(30), p(12), n(11), p(14), n(13), n(0),
    p(31), p(18), n(17), p(20), n(19), n(1), p(23), n(22), n(2), n(3), p(27), n(26), n(6), n(7), n(10), n(16),
    // e16
    p(16), p(10), n(7), n(6), p(26), p(27), n(3), n(2), p(22), p(23), p(1), n(19), n(20), n(17), n(18), p(31),
    p(0), n(13), n(14), n(11), n(12), p(30), p(8), p(9), n(29), n(28), p(4), p(5), n(25), n(24), p(21), p(15),
    // e17
    p(17), p(11), n(8), n(26), n(6), p(28), n(4), n(22), n(2), p(24), p(19), p(1), n(21), p(16), n(31), n(18),
    p(13), p(0), n(15), p(10), n(30), n(12), n(7), p(29), p(9), p(27), n(3), p(25), p(5), p(23), n(20), n(14),
    // e18
    p(18), p(12), n(9), n(27), n(28), n(6), n(5), n(23), n(24), n(2), p(20), p(21), p(1), p(31), p(16), p(17),
    p(14), p(15), p(0), p(30), p(10), p(11), n(29), n(7), n(8), n(26), n(25), n(3), n(4), n(22), p(19), p(13),
    // e19
    p(19), p(13), p(26), p(8), n(7), p(29), p(22), p(4), n(3), p(25), p(17), n(16), p(31), n(1), p(21), n(20),
    p(11), n(10), p(30), n(0), p(15), n(14), n(6), p(28), n(27), n(9), n(2), p(24), n(23), n(5), n(18), n(12),
    // e20
    p(20), p(14), p(27), p(9), n(29), n(7), p(23), p(5), n(25), n(3), p(18), n(31), n(16), n(21), n(1), p(19),
    p(12), n(30), n(10), n(15), n(0), p(13), n(28), n(6), p(26), p(8), n(24), n(2), p(22), p(4), p(17), p(11),
    // e21
    p(21), p(15), p(28), p(29), p(9), n(8), p(24), p(25), p(5), n(4), p(31), p(18), n(17), p(20), n(19), n(1),
    p(30), p(12), n(11), p(14), n(13), n(0), p(27), n(26), n(6), n(7), p(23), n(22), n(2), n(3), n(16), n(10),
    // e22
    p(22), n(26), p(13), p(11), n(10), p(30), n(19), n(17), p(16), n(31), p(4), n(3), p(25), n(2), p(24), n(23),
    n(8), p(7), n(29), p(6), n(28), p(27), n(0), p(15), n(14), n(12), p(1), n(21), p(20), p(18), n(5), p(9),
    // e23
    p(23), n(27), p(14), p(12), n(30), n(10), n(20), n(18), p(31), p(16), p(5), n(25), n(3), n(24), n(2), p(22),
    n(9), p(29), p(7), p(28), p(6), n(26), n(15), n(0), p(13), p(11), p(21), p(1), n(19), n(17), p(4), n(8),
    // e24
    p(24), n(28), p(15), p(30), p(12), n(11), n(21), n(31), n(18), p(17), p(25), p(5), n(4), p(23), n(22), n(2),
    n(29), n(9), p(8), n(27), p(26), p(6), p(14), n(13), n(0), n(10), n(20), p(19), p(1), p(16), n(3), p(7),
    // e25
    p(25), n(29), n(30), n(15), p(14), n(13), p(31), p(21), n(20), p(19), p(24), n(23), p(22), n(5), p(4), n(3),
    n(28), p(27), n(26), p(9), n(8), p(7), p(12), n(11), p(10), p(0), n(18), p(17), n(16), n(1), n(2), p(6),
    // e26
    p(26), n(22), p(19), p(17), n(16), p(31), n(13), n(11), p(10), n(30), p(8), n(7), p(29), n(6), p(28), n(27),
    n(4), p(3), n(25), p(2), n(24), p(23), n(1), p(21), n(20), n(18), p(0), n(15), p(14), p(12), n(9), p(5),
    // e27
    p(27), n(23), p(20), p(18), n(31), n(16), n(14), n(12), p(30), p(10), p(9), n(29), n(7), n(28), n(6), p(26),
    n(5), p(25), p(3), p(24), p(2), n(22), n(21), n(1), p(19), p(17), p(15), p(0), n(13), n(11), p(8), n(4),
    // e28
    p(28), n(24), p(21), p(31), p(18), n(17), n(15), n(30), n(12), p(11), p(29), p(9), n(8), p(27), n(26), n(6),
    n(25), n(5), p(4), n(23), p(22), p(2), p(20), n(19), n(1), n(16), n(14), p(13), p(0), p(10), n(7), p(3),
    // e29
    p(29), n(25), n(31), n(21), p(20), n(19), p(30), p(15), n(14), p(13), p(28), n(27), p(26), n(9), p(8), n(7),
    n(24), p(23), n(22), p(5), n(4), p(3), p(18), n(17), p(16), p(1), n(12), p(11), n(10), n(0), n(6), p(2),
    // e30
    p(30), p(31), n(25), n(24), p(23), n(22), n(29), n(28), p(27), n(26), p(15), n(14), p(13), n(12), p(11), n(10),
    p(21), n(20), p(19), n(18), p(17), n(16), p(5), n(4), p(3), p(2), p(9), n(8), p(7), p(6), n(0), n(1),
    // e31
    p(31), p(30), n(29), n(28), p(27), n(26), n(25), n(24), p(23), n(22), p(21), n(20), p(19), n(18), p(17), n(16),
    p(15), n(14), p(13), n(12), p(11), n(10), p(9), n(8), p(7), p(6), p(5), n(4), p(3), p(2), n(1), n(0),
];
