//! Canonical blade basis of Cl(1,3) and the multiplication sign table.
//!
//! Blades are stored as bitmasks over the generators e0..e3 (bit k is e_k)
//! and listed in the order
//! `1, e0, e1, e2, e3, e01, e02, e03, e12, e13, e23, e012, e013, e023, e123, e0123`.
//! A blade with several bits set is the product of its generators in
//! ascending index order, so `e01 = e0 e1`.

/// Number of basis blades.
pub const DIM: usize = 16;

/// Squares of the generators: e0² = +1, e1² = e2² = e3² = −1.
pub const METRIC: [i8; 4] = [1, -1, -1, -1];

/// Bitmask of each blade in canonical order.
pub const MASKS: [u8; DIM] = [
    0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, 0b0111, 0b1011,
    0b1101, 0b1110, 0b1111,
];

/// Human-readable blade names in canonical order.
pub const NAMES: [&str; DIM] = [
    "1", "e0", "e1", "e2", "e3", "e01", "e02", "e03", "e12", "e13", "e23", "e012", "e013", "e023", "e123",
    "e0123",
];

pub const SCALAR: usize = 0;
pub const E0: usize = 1;
pub const E1: usize = 2;
pub const E2: usize = 3;
pub const E3: usize = 4;
pub const E01: usize = 5;
pub const E02: usize = 6;
pub const E03: usize = 7;
pub const E12: usize = 8;
pub const E13: usize = 9;
pub const E23: usize = 10;
pub const E012: usize = 11;
pub const E013: usize = 12;
pub const E023: usize = 13;
pub const E123: usize = 14;
pub const E0123: usize = 15;

/// Index of the blade e_{μν} (μ < ν) among the six bivectors, in the
/// storage order 01, 02, 03, 12, 13, 23.
pub const BIVECTOR_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Blade indices of the six bivectors in storage order.
pub const BIVECTORS: [usize; 6] = [E01, E02, E03, E12, E13, E23];

const fn build_index() -> [usize; DIM] {
    let mut out = [0usize; DIM];
    let mut i = 0;
    while i < DIM {
        out[MASKS[i] as usize] = i;
        i += 1;
    }
    out
}

/// Canonical index of each bitmask.
pub const INDEX_OF_MASK: [usize; DIM] = build_index();

const fn reorder_sign(a: u8, b: u8) -> i8 {
    // Count transpositions needed to move each generator of `b` left past
    // the higher generators of `a`.
    let mut swaps = 0u32;
    let mut bits = b;
    while bits != 0 {
        let k = bits.trailing_zeros();
        swaps += (a >> (k + 1)).count_ones();
        bits &= bits - 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

const fn metric_sign(common: u8) -> i8 {
    let mut s = 1i8;
    let mut k = 0;
    while k < 4 {
        if common & (1 << k) != 0 {
            s *= METRIC[k];
        }
        k += 1;
    }
    s
}

const fn build_table() -> [[(i8, u8); DIM]; DIM] {
    let mut t = [[(0i8, 0u8); DIM]; DIM];
    let mut i = 0;
    while i < DIM {
        let mut j = 0;
        while j < DIM {
            let (a, b) = (MASKS[i], MASKS[j]);
            let sign = reorder_sign(a, b) * metric_sign(a & b);
            t[i][j] = (sign, INDEX_OF_MASK[(a ^ b) as usize] as u8);
            j += 1;
        }
        i += 1;
    }
    t
}

/// `PRODUCT[i][j] = (sign, k)` with `E_i E_j = sign · E_k`.
pub const PRODUCT: [[(i8, u8); DIM]; DIM] = build_table();

/// Grade of a blade.
#[inline]
pub const fn grade(i: usize) -> usize {
    MASKS[i].count_ones() as usize
}

/// Sign of the blade under reversion, (−1)^{k(k−1)/2}.
#[inline]
pub const fn reversion_sign(i: usize) -> i8 {
    match grade(i) % 4 {
        2 | 3 => -1,
        _ => 1,
    }
}

/// Sign of the blade under grade involution, (−1)^k.
#[inline]
pub const fn involution_sign(i: usize) -> i8 {
    if grade(i).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Square of a basis blade, ±1.
#[inline]
pub const fn square(i: usize) -> i8 {
    PRODUCT[i][i].0
}

/// Blade index of the 1-vector e_μ.
#[inline]
pub const fn vector(mu: usize) -> usize {
    1 + mu
}

/// Blade index of e_μ e_ν for μ < ν.
pub fn bivector(mu: usize, nu: usize) -> usize {
    assert!(mu < nu && nu < 4, "bivector indices must satisfy mu < nu < 4");
    INDEX_OF_MASK[((1u8 << mu) | (1u8 << nu)) as usize]
}
