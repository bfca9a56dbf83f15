//! Symplectic quandles `x ▷ y = x + ⟨x,y⟩ y` on `R^d`, their radicals, symplectic
//! bases over fields, isometry testing, and the isomorphism-vs-isometry scan
//! over `Z_n`.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quandle::QuandleTable;
use crate::ring::matrix::{self, Matrix};
use crate::ring::{FiniteRing, FreeModule, GramMatrix, ModuleVector, RingSpec};

/// Largest module materialized as a quandle table.
pub const DEFAULT_ELEMENT_CAP: usize = 4096;

/// Largest `|R|^(d²)` accepted by the brute-force isometry search.
pub const DEFAULT_ISOMETRY_CAP: u128 = 1 << 24;

/// `R^d` with an alternating form. Degenerate forms are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticSpace {
    module: FreeModule,
    gram: GramMatrix,
}

impl SymplecticSpace {
    pub fn new(ring: FiniteRing, dim: usize, gram: GramMatrix) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "dimension must be at least 1".into(),
            ));
        }
        if gram.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: gram.dim(),
            });
        }
        if *gram.ring() != ring {
            return Err(Error::RingMismatch(
                ring.to_string(),
                gram.ring().to_string(),
            ));
        }
        Ok(SymplecticSpace {
            module: FreeModule::new(ring, dim),
            gram,
        })
    }

    /// From the command-line triple `--ring <spec> --dim <d> --gram "<rows>"`.
    pub fn parse(ring: &str, dim: usize, gram: &str) -> Result<Self> {
        let ring = FiniteRing::new(ring.parse::<RingSpec>()?)?;
        let gram = GramMatrix::parse(&ring, gram)?;
        Self::new(ring, dim, gram)
    }

    /// `[[0, α], [-α, 0]]` on `R^2`.
    pub fn planar(ring: &FiniteRing, alpha: u32) -> Result<Self> {
        Self::new(ring.clone(), 2, GramMatrix::hyperbolic(ring, &[alpha], 2)?)
    }

    pub fn ring(&self) -> &FiniteRing {
        self.module.ring()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn is_nondegenerate(&self) -> Result<bool> {
        Ok(self.degenerate_submodule()?.len() == 1)
    }

    pub fn build_quandle(&self) -> Result<QuandleTable> {
        self.build_quandle_capped(DEFAULT_ELEMENT_CAP)
    }

    /// The quandle table under the module's canonical indexing.
    pub fn build_quandle_capped(&self, cap: usize) -> Result<QuandleTable> {
        let n = self.module.size_within(cap)?;
        let ring = self.ring();
        let coords: Vec<Vec<u32>> = (0..n).map(|i| self.module.coords_at(i)).collect();
        let applied: Vec<Vec<u32>> = coords.iter().map(|y| self.gram.apply(y)).collect();
        let rows: Vec<Vec<u32>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let x = &coords[i];
                let mut z = vec![0u32; x.len()];
                (0..n)
                    .map(|j| {
                        let f = x
                            .iter()
                            .zip(&applied[j])
                            .fold(0, |acc, (&a, &b)| ring.add(acc, ring.mul(a, b)));
                        if f == 0 {
                            return i as u32;
                        }
                        for (k, zk) in z.iter_mut().enumerate() {
                            *zk = ring.add(x[k], ring.mul(f, coords[j][k]));
                        }
                        self.module.position(&z) as u32
                    })
                    .collect()
            })
            .collect();
        Ok(QuandleTable::from_raw(n, rows.concat()))
    }

    /// `{x : ⟨x,y⟩ = 0 for all y}`, in index order.
    pub fn degenerate_submodule(&self) -> Result<Vec<ModuleVector>> {
        let n = self.module.size_within(DEFAULT_ELEMENT_CAP.max(1 << 20))?;
        let d = self.dim();
        let basis: Vec<Vec<u32>> = (0..d)
            .map(|k| (0..d).map(|j| u32::from(j == k)).collect())
            .collect();
        let mut out = Vec::new();
        for i in 0..n {
            let x = self.module.coords_at(i);
            if basis.iter().all(|e| self.gram.form_coords(&x, e) == 0) {
                out.push(self.module.vector(x)?);
            }
        }
        Ok(out)
    }

    /// Symplectic basis over a field: returns `B` with `B A Bᵀ` equal to `k`
    /// blocks `[[0,1],[-1,0]]` followed by zeros.
    pub fn symplectic_reduce(&self) -> Result<SymplecticBasis> {
        let ring = self.ring().clone();
        if !ring.is_field() {
            return Err(Error::NotAField(ring.to_string()));
        }
        let d = self.dim();
        let form = |u: &[u32], v: &[u32]| self.gram.form_coords(u, v);
        let mut remaining: Vec<Vec<u32>> = matrix::identity(d);
        let mut pairs: Vec<Vec<u32>> = Vec::new();
        loop {
            let pick = (0..remaining.len()).find_map(|i| {
                (0..remaining.len())
                    .find(|&j| form(&remaining[i], &remaining[j]) != 0)
                    .map(|j| (i, j))
            });
            let Some((i, j)) = pick else { break };
            let u = remaining[i].clone();
            let inv = ring
                .inverse(form(&u, &remaining[j]))
                .expect("nonzero element of a field");
            let v: Vec<u32> = remaining[j].iter().map(|&c| ring.mul(inv, c)).collect();
            let (hi, lo) = (i.max(j), i.min(j));
            remaining.remove(hi);
            remaining.remove(lo);
            // w ← w - ⟨w,v⟩u + ⟨w,u⟩v makes w orthogonal to both u and v
            for w in remaining.iter_mut() {
                let wv = form(w, &v);
                let wu = form(w, &u);
                for k in 0..d {
                    w[k] = ring.add(ring.sub(w[k], ring.mul(wv, u[k])), ring.mul(wu, v[k]));
                }
            }
            pairs.push(u);
            pairs.push(v);
        }
        let rank = pairs.len();
        pairs.extend(remaining);
        Ok(SymplecticBasis {
            basis: pairs,
            rank,
            radical_dim: d - rank,
        })
    }

    pub fn is_isometric(&self, other: &SymplecticSpace) -> Result<IsometryReport> {
        self.is_isometric_capped(other, DEFAULT_ISOMETRY_CAP)
    }

    /// Looks for invertible `P` with `P A Pᵀ = A'`, where `A` is this space's
    /// Gram matrix and `A'` is `other`'s. Then `x ↦ x P` is an isometry from
    /// `other` to `self`.
    pub fn is_isometric_capped(
        &self,
        other: &SymplecticSpace,
        cap: u128,
    ) -> Result<IsometryReport> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch(
                self.ring().to_string(),
                other.ring().to_string(),
            ));
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let ring = self.ring();
        let d = self.dim();
        let a = self.gram.rows();
        let target = other.gram.rows();
        if a == target {
            return Ok(IsometryReport::found(matrix::identity(d)));
        }
        if d == 2 {
            // diag(u,1) [[0,α],[-α,0]] diag(u,1) = [[0,uα],[-uα,0]], and every
            // congruence scales the form by det(P), so β = uα for a unit u decides it.
            let (alpha, beta) = (a[0][1], target[0][1]);
            for u in ring.elements().filter(|&u| ring.is_unit(u)) {
                if ring.mul(u, alpha) == beta {
                    let p = vec![vec![u, 0], vec![0, 1]];
                    debug_assert_eq!(matrix::congruent(ring, &p, &a), target);
                    return Ok(IsometryReport::found(p));
                }
            }
            return Ok(IsometryReport::none());
        }
        let space = (ring.order() as u128)
            .checked_pow((d * d) as u32)
            .unwrap_or(u128::MAX);
        if space > cap {
            return Err(Error::CapExceeded {
                what: "isometry search space",
                size: space,
                cap,
            });
        }
        // Row-by-row search: row i of P must satisfy ⟨p_i, p_j⟩_A = A'_ij for j ≤ i.
        let vectors: Vec<Vec<u32>> = (0..self.module.size().unwrap())
            .map(|i| self.module.coords_at(i))
            .collect();
        let mut rows: Vec<usize> = Vec::with_capacity(d);
        fn search(
            space: &SymplecticSpace,
            vectors: &[Vec<u32>],
            target: &Matrix,
            rows: &mut Vec<usize>,
        ) -> Option<Matrix> {
            let d = space.dim();
            if rows.len() == d {
                let p: Matrix = rows.iter().map(|&r| vectors[r].clone()).collect();
                return matrix::is_invertible(space.ring(), &p).then_some(p);
            }
            let i = rows.len();
            for (cand, v) in vectors.iter().enumerate() {
                let ok = rows
                    .iter()
                    .enumerate()
                    .all(|(j, &r)| space.gram.form_coords(v, &vectors[r]) == target[i][j]);
                if ok {
                    rows.push(cand);
                    if let Some(p) = search(space, vectors, target, rows) {
                        return Some(p);
                    }
                    rows.pop();
                }
            }
            None
        }
        Ok(match search(self, &vectors, &target, &mut rows) {
            Some(p) => IsometryReport::found(p),
            None => IsometryReport::none(),
        })
    }

    /// Index map induced by `x ↦ x P` from `other`'s elements to this space's,
    /// 0-based.
    pub fn induced_map(&self, p: &Matrix) -> Vec<usize> {
        let ring = self.ring();
        let n = self.module.size().unwrap();
        (0..n)
            .map(|i| {
                let x = self.module.coords_at(i);
                let y: Vec<u32> = (0..self.dim())
                    .map(|k| {
                        x.iter()
                            .zip(p)
                            .fold(0, |acc, (&xi, row)| ring.add(acc, ring.mul(xi, row[k])))
                    })
                    .collect();
                self.module.position(&y)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticBasis {
    /// Rows are the new basis vectors: hyperbolic pairs first, then the radical.
    pub basis: Matrix,
    pub rank: usize,
    pub radical_dim: usize,
}

/// `k` hyperbolic blocks `[[0,1],[-1,0]]` padded with zeros to `dim`.
pub fn standard_form(ring: &FiniteRing, dim: usize, rank: usize) -> Matrix {
    let mut m = vec![vec![0; dim]; dim];
    for k in 0..rank / 2 {
        m[2 * k][2 * k + 1] = 1;
        m[2 * k + 1][2 * k] = ring.neg(1);
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsometryReport {
    pub isometric: bool,
    pub witness: Option<Matrix>,
}

impl IsometryReport {
    fn found(p: Matrix) -> Self {
        IsometryReport {
            isometric: true,
            witness: Some(p),
        }
    }

    fn none() -> Self {
        IsometryReport {
            isometric: false,
            witness: None,
        }
    }
}

/// Result of comparing quandle isomorphism with isometry for the forms
/// `[[0,α],[-α,0]]` over one `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModulusScan {
    pub n: u32,
    /// Classes of `α` values under quandle isomorphism.
    pub isomorphism_classes: Vec<Vec<u32>>,
    /// Classes of `α` values under isometry.
    pub isometry_classes: Vec<Vec<u32>>,
    pub coincide: bool,
    /// Pairs `(α, β)` that are isomorphic as quandles but not isometric, or the reverse.
    pub counterexamples: Vec<(u32, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub dim: usize,
    pub results: Vec<ModulusScan>,
}

impl ConjectureReport {
    pub fn all_coincide(&self) -> bool {
        self.results.iter().all(|r| r.coincide)
    }
}

/// Largest modulus accepted by [`conjecture_scan`].
pub const MAX_SCAN_MODULUS: u32 = 16;

/// For each `n`, partitions `{[[0,α],[-α,0]] : α ∈ Z_n}` by quandle isomorphism
/// and by isometry, and reports whether the partitions agree. Moduli are
/// scanned concurrently; results are in ascending `n`.
pub fn conjecture_scan(moduli: RangeInclusive<u32>, dim: usize) -> Result<ConjectureReport> {
    if dim != 2 {
        return Err(Error::InvalidArgument(format!(
            "conjecture scan supports dimension 2 only, got {dim}"
        )));
    }
    if *moduli.start() < 2 || *moduli.end() > MAX_SCAN_MODULUS {
        return Err(Error::CapExceeded {
            what: "scan modulus",
            size: *moduli.end() as u128,
            cap: MAX_SCAN_MODULUS as u128,
        });
    }
    let ns: Vec<u32> = moduli.collect();
    let results = ns
        .par_iter()
        .map(|&n| scan_modulus(n))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjectureReport { dim, results })
}

fn partition(
    items: &[u32],
    mut same: impl FnMut(usize, usize) -> Result<bool>,
) -> Result<Vec<Vec<u32>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for i in 0..items.len() {
        for class in classes.iter_mut() {
            if same(class[0], i)? {
                class.push(i);
                continue 'outer;
            }
        }
        classes.push(vec![i]);
    }
    Ok(classes
        .into_iter()
        .map(|c| c.into_iter().map(|i| items[i]).collect())
        .collect())
}

fn scan_modulus(n: u32) -> Result<ModulusScan> {
    let ring = FiniteRing::modular(n)?;
    let alphas: Vec<u32> = ring.elements().collect();
    let spaces = alphas
        .iter()
        .map(|&a| SymplecticSpace::planar(&ring, a))
        .collect::<Result<Vec<_>>>()?;
    let tables = spaces
        .iter()
        .map(SymplecticSpace::build_quandle)
        .collect::<Result<Vec<_>>>()?;
    let isomorphism_classes = partition(&alphas, |i, j| {
        Ok(tables[i].is_isomorphic(&tables[j]).is_some())
    })?;
    let isometry_classes = partition(&alphas, |i, j| {
        Ok(spaces[i].is_isometric(&spaces[j])?.isometric)
    })?;
    let class_of = |classes: &[Vec<u32>], a: u32| classes.iter().position(|c| c.contains(&a));
    let mut counterexamples = Vec::new();
    for (k, &a) in alphas.iter().enumerate() {
        for &b in &alphas[k + 1..] {
            let iso = class_of(&isomorphism_classes, a) == class_of(&isomorphism_classes, b);
            let isom = class_of(&isometry_classes, a) == class_of(&isometry_classes, b);
            if iso != isom {
                counterexamples.push((a, b));
            }
        }
    }
    Ok(ModulusScan {
        n,
        coincide: counterexamples.is_empty(),
        isomorphism_classes,
        isometry_classes,
        counterexamples,
    })
}
