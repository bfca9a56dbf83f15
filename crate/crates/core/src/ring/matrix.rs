//! Small dense matrices over a [`FiniteRing`], stored as row vectors.

use super::FiniteRing;

pub type Matrix = Vec<Vec<u32>>;

pub fn identity(dim: usize) -> Matrix {
    (0..dim)
        .map(|i| (0..dim).map(|j| u32::from(i == j)).collect())
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn mul(ring: &FiniteRing, a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(0, |acc, (&x, brow)| ring.add(acc, ring.mul(x, brow[j])))
                })
                .collect()
        })
        .collect()
}

/// `P A Pᵀ`.
pub fn congruent(ring: &FiniteRing, p: &Matrix, a: &Matrix) -> Matrix {
    mul(ring, &mul(ring, p, a), &transpose(p))
}

/// Determinant by cofactor expansion along the first row; valid over any
/// commutative ring and fine for the small dimensions used here.
pub fn determinant(ring: &FiniteRing, a: &Matrix) -> u32 {
    match a.len() {
        0 => 1,
        1 => a[0][0],
        2 => ring.sub(ring.mul(a[0][0], a[1][1]), ring.mul(a[0][1], a[1][0])),
        n => {
            let mut det = 0;
            for j in 0..n {
                if a[0][j] == 0 {
                    continue;
                }
                let minor: Matrix = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let term = ring.mul(a[0][j], determinant(ring, &minor));
                det = if j % 2 == 0 {
                    ring.add(det, term)
                } else {
                    ring.sub(det, term)
                };
            }
            det
        }
    }
}

pub fn is_invertible(ring: &FiniteRing, a: &Matrix) -> bool {
    ring.is_unit(determinant(ring, a))
}
