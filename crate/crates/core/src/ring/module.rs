//! Free modules `R^d`, their canonical element indexing, and alternating bilinear forms.

use std::fmt;

use crate::error::{Error, Result};

use super::FiniteRing;

/// Coordinates of an element of `R^d`, as ring element codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleVector(Vec<u32>);

impl ModuleVector {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The free module `R^d`.
///
/// Elements are numbered by `position(x) = Σ code(x_i)·|R|^(i-1)`, with the first
/// coordinate least significant. The 1-based quandle-matrix index is
/// `position + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    ring: FiniteRing,
    dim: usize,
}

impl FreeModule {
    pub fn new(ring: FiniteRing, dim: usize) -> Self {
        FreeModule { ring, dim }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `|R|^d`, or `None` on overflow.
    pub fn size(&self) -> Option<usize> {
        (self.ring.order() as usize).checked_pow(self.dim as u32)
    }

    /// `|R|^d`, failing when it exceeds `cap`.
    pub fn size_within(&self, cap: usize) -> Result<usize> {
        match self.size() {
            Some(n) if n <= cap => Ok(n),
            _ => Err(Error::CapExceeded {
                what: "module size",
                size: (self.ring.order() as u128).saturating_pow(self.dim as u32),
                cap: cap as u128,
            }),
        }
    }

    pub fn vector(&self, coords: Vec<u32>) -> Result<ModuleVector> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: coords.len(),
            });
        }
        if let Some(&code) = coords.iter().find(|&&c| !self.ring.contains(c)) {
            return Err(Error::ElementOutOfRange {
                code,
                order: self.ring.order(),
            });
        }
        Ok(ModuleVector(coords))
    }

    pub fn zero(&self) -> ModuleVector {
        ModuleVector(vec![0; self.dim])
    }

    /// 1-based index of `x`.
    pub fn index_of(&self, x: &ModuleVector) -> usize {
        self.position(x.coords()) + 1
    }

    /// Inverse of [`FreeModule::index_of`].
    pub fn vector_of(&self, index: usize) -> Result<ModuleVector> {
        let max = self.size().unwrap_or(usize::MAX);
        if index == 0 || index > max {
            return Err(Error::IndexOutOfRange { index, max });
        }
        Ok(ModuleVector(self.coords_at(index - 1)))
    }

    /// 0-based position of a coordinate vector.
    pub fn position(&self, coords: &[u32]) -> usize {
        let q = self.ring.order() as usize;
        coords.iter().rev().fold(0, |acc, &c| acc * q + c as usize)
    }

    /// Coordinates of the element at 0-based `pos`.
    pub fn coords_at(&self, mut pos: usize) -> Vec<u32> {
        let q = self.ring.order() as usize;
        let mut out = Vec::with_capacity(self.dim);
        for _ in 0..self.dim {
            out.push((pos % q) as u32);
            pos /= q;
        }
        out
    }

    pub fn add(&self, x: &ModuleVector, y: &ModuleVector) -> ModuleVector {
        ModuleVector(
            x.0.iter()
                .zip(&y.0)
                .map(|(&a, &b)| self.ring.add(a, b))
                .collect(),
        )
    }

    pub fn scale(&self, r: u32, x: &ModuleVector) -> ModuleVector {
        ModuleVector(x.0.iter().map(|&a| self.ring.mul(r, a)).collect())
    }

    /// Positions of the submodule spanned by the elements at `generators`.
    ///
    /// Built as the running sum of cyclic submodules `R·g`, which is exact for any
    /// finite commutative ring. The result is sorted.
    pub fn span_positions(&self, generators: &[usize]) -> Vec<usize> {
        let size = self.size().expect("module size fits in usize");
        let mut member = vec![false; size];
        let mut span = vec![0usize];
        member[0] = true;
        for &g in generators {
            if member[g] {
                continue;
            }
            let gc = self.coords_at(g);
            let multiples: Vec<Vec<u32>> = self
                .ring
                .elements()
                .map(|r| gc.iter().map(|&c| self.ring.mul(r, c)).collect())
                .collect();
            let current = span.clone();
            for s in current {
                let sc = self.coords_at(s);
                for m in &multiples {
                    let sum: Vec<u32> = sc
                        .iter()
                        .zip(m)
                        .map(|(&a, &b)| self.ring.add(a, b))
                        .collect();
                    let pos = self.position(&sum);
                    if !member[pos] {
                        member[pos] = true;
                        span.push(pos);
                    }
                }
            }
        }
        span.sort_unstable();
        span
    }
}

/// Gram matrix of an alternating (hence antisymmetric) bilinear form,
/// `⟨x,y⟩ = x A yᵀ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    ring: FiniteRing,
    dim: usize,
    entries: Vec<u32>,
}

impl GramMatrix {
    /// Validates that the rows form a square matrix over `ring` with zero diagonal
    /// and `A_ji = -A_ij`.
    pub fn new(ring: &FiniteRing, rows: Vec<Vec<u32>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Gram("empty matrix".into()));
        }
        if let Some(row) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::Gram(format!(
                "expected {dim} entries per row, found a row with {}",
                row.len()
            )));
        }
        let entries: Vec<u32> = rows.into_iter().flatten().collect();
        if let Some(&code) = entries.iter().find(|&&c| !ring.contains(c)) {
            return Err(Error::ElementOutOfRange {
                code,
                order: ring.order(),
            });
        }
        let g = GramMatrix {
            ring: ring.clone(),
            dim,
            entries,
        };
        for i in 0..dim {
            if g.get(i, i) != 0 {
                return Err(Error::Gram(format!(
                    "not alternating: diagonal entry ({0},{0}) is {1}",
                    i + 1,
                    g.get(i, i)
                )));
            }
            for j in 0..i {
                if g.get(j, i) != ring.neg(g.get(i, j)) {
                    return Err(Error::Gram(format!(
                        "not antisymmetric at ({},{}) and ({},{})",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(g)
    }

    /// Parses `"0,1;-1,0"`: rows separated by `;`, entries by `,`. An entry is an
    /// element code, and `-c` stands for the additive inverse of code `c`.
    pub fn parse(ring: &FiniteRing, text: &str) -> Result<Self> {
        let entry = |e: &str| -> Result<u32> {
            let e = e.trim();
            let bad = || Error::Gram(format!("bad entry `{e}`"));
            let (negative, digits) = match e.strip_prefix(['-', '−']) {
                Some(rest) => (true, rest),
                None => (false, e),
            };
            let code: u32 = digits.parse().map_err(|_| bad())?;
            if !negative {
                return Ok(code);
            }
            if !ring.contains(code) {
                return Err(Error::ElementOutOfRange {
                    code,
                    order: ring.order(),
                });
            }
            Ok(ring.neg(code))
        };
        let rows = text
            .split(';')
            .map(|row| row.split(',').map(entry).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, rows)
    }

    /// Block-diagonal form with blocks `[[0, α],[-α, 0]]` followed by zeros.
    pub fn hyperbolic(ring: &FiniteRing, alphas: &[u32], dim: usize) -> Result<Self> {
        if 2 * alphas.len() > dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: 2 * alphas.len(),
            });
        }
        let mut rows = vec![vec![0; dim]; dim];
        for (k, &a) in alphas.iter().enumerate() {
            rows[2 * k][2 * k + 1] = a;
            rows[2 * k + 1][2 * k] = ring.neg(a);
        }
        Self::new(ring, rows)
    }

    pub fn zero(ring: &FiniteRing, dim: usize) -> Result<Self> {
        Self::new(ring, vec![vec![0; dim]; dim])
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.dim).map(<[u32]>::to_vec).collect()
    }

    /// `Σ_{i,j} x_i A_ij y_j`.
    pub fn form(&self, x: &ModuleVector, y: &ModuleVector) -> Result<u32> {
        for v in [x, y] {
            if v.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.dim(),
                });
            }
        }
        Ok(self.form_coords(x.coords(), y.coords()))
    }

    pub(crate) fn form_coords(&self, x: &[u32], y: &[u32]) -> u32 {
        let r = &self.ring;
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let mut row = 0;
            for (j, &yj) in y.iter().enumerate() {
                row = r.add(row, r.mul(self.get(i, j), yj));
            }
            acc = r.add(acc, r.mul(xi, row));
        }
        acc
    }

    /// `A yᵀ` as a column, so that `⟨x,y⟩ = Σ x_i (A yᵀ)_i`.
    pub(crate) fn apply(&self, y: &[u32]) -> Vec<u32> {
        let r = &self.ring;
        (0..self.dim)
            .map(|i| {
                y.iter()
                    .enumerate()
                    .fold(0, |acc, (j, &yj)| r.add(acc, r.mul(self.get(i, j), yj)))
            })
            .collect()
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z2_hyperbolic_gram() -> GramMatrix {
        let z2 = FiniteRing::modular(2).unwrap();
        GramMatrix::parse(&z2, "0,1,0,0;1,0,0,0;0,0,0,1;0,0,1,0").unwrap()
    }

    #[test]
    fn form_examples() {
        let z4 = FiniteRing::modular(4).unwrap();
        let m = FreeModule::new(z4.clone(), 2);
        let a = GramMatrix::parse(&z4, "0,2;2,0").unwrap();
        let x = m.vector(vec![1, 0]).unwrap();
        let y = m.vector(vec![0, 1]).unwrap();
        assert_eq!(a.form(&x, &y).unwrap(), 2);

        let g = z2_hyperbolic_gram();
        let m4 = FreeModule::new(g.ring().clone(), 4);
        let x = m4.vector(vec![1, 0, 0, 0]).unwrap();
        let y = m4.vector(vec![0, 1, 0, 0]).unwrap();
        assert_eq!(g.form(&x, &y).unwrap(), 1);
        assert!(matches!(
            g.form(&x, &m.zero()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn indexing_examples() {
        let z2 = FiniteRing::modular(2).unwrap();
        let m = FreeModule::new(z2, 4);
        assert_eq!(m.index_of(&m.zero()), 1);
        let e1 = m.vector(vec![1, 0, 0, 0]).unwrap();
        let e2 = m.vector(vec![0, 1, 0, 0]).unwrap();
        assert_eq!(m.index_of(&e1), 2);
        assert_eq!(m.index_of(&e2), 3);
        // e1 ▷ e2 = e1 + ⟨e1,e2⟩ e2 = (1,1,0,0)
        let f = z2_hyperbolic_gram().form(&e1, &e2).unwrap();
        let prod = m.add(&e1, &m.scale(f, &e2));
        assert_eq!(m.index_of(&prod), 4);

        let gf4 = FiniteRing::galois(2, 2).unwrap();
        let m2 = FreeModule::new(gf4, 2);
        assert_eq!(m2.index_of(&m2.vector(vec![1, 0]).unwrap()), 2);
        assert_eq!(m2.index_of(&m2.vector(vec![0, 2]).unwrap()), 9);
        assert!(m2.vector_of(0).is_err());
        assert!(m2.vector_of(17).is_err());
    }

    #[test]
    fn gram_validation() {
        let z2 = FiniteRing::modular(2).unwrap();
        // antisymmetric in characteristic 2 but not alternating
        assert!(GramMatrix::parse(&z2, "1,0;0,0").is_err());
        let z3 = FiniteRing::modular(3).unwrap();
        assert!(GramMatrix::parse(&z3, "0,1;1,0").is_err());
        assert!(GramMatrix::parse(&z3, "0,1;2,0").is_ok());
        assert!(GramMatrix::parse(&z3, "0,1;2").is_err());
        assert!(GramMatrix::parse(&z3, "0,5;1,0").is_err());
        assert!(GramMatrix::parse(&z3, "0,x;1,0").is_err());
        assert_eq!(
            GramMatrix::parse(&z3, "0,1;-1,0").unwrap().rows(),
            vec![vec![0, 1], vec![2, 0]]
        );
        assert!(GramMatrix::parse(&z3, "0,-3;0,0").is_err());
        let gf4 = FiniteRing::galois(2, 2).unwrap();
        assert_eq!(GramMatrix::parse(&gf4, "0,3;-3,0").unwrap().get(1, 0), 3);
    }

    #[test]
    fn span_examples() {
        let z4 = FiniteRing::modular(4).unwrap();
        let m = FreeModule::new(z4, 2);
        assert_eq!(m.span_positions(&[]).len(), 1);
        let a = m.position(&[1, 0]);
        let b = m.position(&[0, 2]);
        assert_eq!(m.span_positions(&[a, b]).len(), 8);
        let gf4 = FiniteRing::galois(2, 2).unwrap();
        let m = FreeModule::new(gf4, 2);
        assert_eq!(m.span_positions(&[m.position(&[3, 2])]).len(), 4);
    }

    fn arb_space() -> impl Strategy<Value = (u32, usize, Vec<u32>)> {
        (2u32..7, 1usize..4)
            .prop_flat_map(|(n, d)| (Just(n), Just(d), proptest::collection::vec(0..n, d * d)))
    }

    proptest! {
        #[test]
        fn index_bijection((n, d, _) in arb_space(), seed in 0usize..10_000) {
            let m = FreeModule::new(FiniteRing::modular(n).unwrap(), d);
            let size = m.size().unwrap();
            let i = seed % size + 1;
            let v = m.vector_of(i).unwrap();
            prop_assert_eq!(m.index_of(&v), i);
            let v2 = m.vector(v.coords().to_vec()).unwrap();
            prop_assert_eq!(m.vector_of(m.index_of(&v2)).unwrap(), v2);
        }

        #[test]
        fn form_is_alternating((n, d, raw) in arb_space(), xs in proptest::collection::vec(0u32..100, 8)) {
            let r = FiniteRing::modular(n).unwrap();
            let mut rows = vec![vec![0; d]; d];
            for i in 0..d {
                for j in 0..i {
                    rows[i][j] = raw[i * d + j];
                    rows[j][i] = r.neg(raw[i * d + j]);
                }
            }
            let g = GramMatrix::new(&r, rows).unwrap();
            let m = FreeModule::new(r.clone(), d);
            let x = m.vector(xs[..d].iter().map(|v| v % n).collect()).unwrap();
            let y = m.vector(xs[4..4 + d].iter().map(|v| v % n).collect()).unwrap();
            prop_assert_eq!(g.form(&x, &x).unwrap(), 0);
            prop_assert_eq!(g.form(&x, &y).unwrap(), r.neg(g.form(&y, &x).unwrap()));
        }
    }
}
