//! The finite fields needed for the projective-plane incidence graphs.

use crate::error::{Error, Result};

const GF4_MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

// GF(2)[x] / (x^3 + x + 1), elements as bit vectors
const GF8_MUL: [[u8; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 2, 3, 4, 5, 6, 7],
    [0, 2, 4, 6, 3, 1, 7, 5],
    [0, 3, 6, 5, 7, 4, 1, 2],
    [0, 4, 3, 7, 6, 2, 5, 1],
    [0, 5, 1, 4, 2, 7, 3, 6],
    [0, 6, 7, 1, 5, 3, 2, 4],
    [0, 7, 5, 2, 1, 6, 4, 3],
];

/// Field orders with a shipped implementation.
pub const SUPPORTED_ORDERS: [u32; 6] = [2, 3, 4, 5, 7, 8];

/// `GF(q)` on the elements `0..q`: modular arithmetic for prime `q`,
/// XOR addition with table multiplication for `q = 4, 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteField {
    q: u32,
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        if SUPPORTED_ORDERS.contains(&q) {
            Ok(Self { q })
        } else {
            Err(Error::UnsupportedFamily(format!(
                "no field table for q = {q}; supported orders are {SUPPORTED_ORDERS:?}"
            )))
        }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    fn is_prime(&self) -> bool {
        matches!(self.q, 2 | 3 | 5 | 7)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.is_prime() {
            (a + b) % self.q
        } else {
            a ^ b
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match self.q {
            4 => GF4_MUL[a as usize][b as usize] as u32,
            8 => GF8_MUL[a as usize][b as usize] as u32,
            q => (a * b) % q,
        }
    }

    pub fn dot(&self, x: &[u32; 3], y: &[u32; 3]) -> u32 {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }
}
