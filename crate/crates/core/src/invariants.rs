//! Quandle colorings of link presentations and the invariants built from them:
//! the counting invariant, Φ_E, its decomposition over subquandles, and the
//! symplectic quandle polynomial Φ_sqp.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::link::{Presentation, Sign};
use crate::poly::{InvariantPolynomial, TermOrder};
use crate::quandle::QuandleTable;
use crate::ring::FreeModule;
use crate::symplectic::SymplecticSpace;

/// Target element (0-based) for each generator.
pub type Coloring = Vec<usize>;

/// A coloring target, optionally carrying the module structure needed by Φ_sqp.
#[derive(Debug, Clone)]
pub struct TargetQuandle {
    pub table: QuandleTable,
    pub module: Option<FreeModule>,
}

impl TargetQuandle {
    pub fn plain(table: QuandleTable) -> Self {
        TargetQuandle {
            table,
            module: None,
        }
    }

    /// The symplectic quandle of `space`, with elements indexed canonically.
    pub fn symplectic(space: &SymplecticSpace) -> Result<Self> {
        Ok(TargetQuandle {
            table: space.build_quandle()?,
            module: Some(space.module().clone()),
        })
    }
}

/// Backtracking search over generator assignments with relation propagation.
struct ColoringSearch<'a> {
    p: &'a Presentation,
    t: &'a QuandleTable,
    dual: QuandleTable,
    /// Generators in branching order: most relations first, ties by index.
    order: Vec<usize>,
    by_generator: Vec<Vec<usize>>,
}

impl<'a> ColoringSearch<'a> {
    fn new(p: &'a Presentation, t: &'a QuandleTable) -> Self {
        let mut by_generator = vec![Vec::new(); p.generators];
        for (k, r) in p.relations.iter().enumerate() {
            for g in [r.a, r.b, r.c] {
                if by_generator[g].last() != Some(&k) {
                    by_generator[g].push(k);
                }
            }
        }
        let mut order: Vec<usize> = (0..p.generators).collect();
        order.sort_by_key(|&g| (std::cmp::Reverse(by_generator[g].len()), g));
        ColoringSearch {
            p,
            t,
            dual: t.dual(),
            order,
            by_generator,
        }
    }

    /// Assigns `g = v` and everything it forces; returns false on conflict.
    fn assign(
        &self,
        g: usize,
        v: usize,
        state: &mut [Option<usize>],
        trail: &mut Vec<usize>,
    ) -> bool {
        let mut queue = vec![(g, v)];
        while let Some((g, v)) = queue.pop() {
            match state[g] {
                Some(w) if w == v => continue,
                Some(_) => return false,
                None => {
                    state[g] = Some(v);
                    trail.push(g);
                }
            }
            for &k in &self.by_generator[g] {
                let r = self.p.relations[k];
                let (fwd, back) = match r.sign {
                    Sign::Positive => (self.t, &self.dual),
                    Sign::Negative => (&self.dual, self.t),
                };
                // c = fwd(a, b), a = back(c, b)
                match (state[r.a], state[r.b], state[r.c]) {
                    (Some(a), Some(b), Some(c)) => {
                        if fwd.op(a, b) != c {
                            return false;
                        }
                    }
                    (Some(a), Some(b), None) => queue.push((r.c, fwd.op(a, b))),
                    (None, Some(b), Some(c)) => queue.push((r.a, back.op(c, b))),
                    _ => {}
                }
            }
        }
        true
    }

    fn undo(state: &mut [Option<usize>], trail: &mut Vec<usize>, mark: usize) {
        while trail.len() > mark {
            state[trail.pop().unwrap()] = None;
        }
    }

    fn descend(
        &self,
        state: &mut Vec<Option<usize>>,
        trail: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        let Some(&g) = self.order.iter().find(|&&g| state[g].is_none()) else {
            let coloring: Vec<usize> = state.iter().map(|s| s.unwrap()).collect();
            visit(&coloring);
            return;
        };
        for v in 0..self.t.order() {
            let mark = trail.len();
            if self.assign(g, v, state, trail) {
                self.descend(state, trail, visit);
            }
            Self::undo(state, trail, mark);
        }
    }

    /// Visits every coloring whose first branching generator takes `first`.
    fn run_branch(&self, first: usize, mut visit: impl FnMut(&[usize])) {
        let mut state = vec![None; self.p.generators];
        let mut trail = Vec::new();
        if self.assign(self.order[0], first, &mut state, &mut trail) {
            self.descend(&mut state, &mut trail, &mut visit);
        }
    }

    /// Folds over all colorings, splitting the work by the first generator's value.
    fn fold<T, F>(
        &self,
        init: impl Fn() -> T + Sync + Send,
        visit: F,
        merge: impl Fn(T, T) -> T + Sync + Send,
    ) -> T
    where
        T: Send,
        F: Fn(&mut T, &[usize]) + Sync + Send,
    {
        if self.p.generators == 0 {
            let mut acc = init();
            visit(&mut acc, &[]);
            return acc;
        }
        (0..self.t.order())
            .into_par_iter()
            .map(|first| {
                let mut acc = init();
                self.run_branch(first, |c| visit(&mut acc, c));
                acc
            })
            .reduce(&init, merge)
    }
}

/// All colorings, in lexicographic order.
pub fn enumerate_colorings(p: &Presentation, t: &QuandleTable) -> Vec<Coloring> {
    let search = ColoringSearch::new(p, t);
    let mut all = search.fold(
        Vec::new,
        |acc: &mut Vec<Coloring>, c| acc.push(c.to_vec()),
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    all.sort_unstable();
    all
}

/// `|Hom(Q(L), T)|`.
pub fn counting_invariant(p: &Presentation, t: &QuandleTable) -> u64 {
    ColoringSearch::new(p, t).fold(|| 0u64, |acc, _| *acc += 1, |a, b| a + b)
}

fn image(c: &[usize]) -> Vec<usize> {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn merge_counts<K: std::hash::Hash + Eq>(
    mut a: HashMap<K, i64>,
    b: HashMap<K, i64>,
) -> HashMap<K, i64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// `Φ_E = Σ_f q^{|Im f|}`.
pub fn phi_e(p: &Presentation, t: &QuandleTable) -> InvariantPolynomial {
    let counts = ColoringSearch::new(p, t).fold(
        HashMap::new,
        |acc: &mut HashMap<u32, i64>, c| *acc.entry(image(c).len() as u32).or_insert(0) += 1,
        merge_counts,
    );
    let mut poly = InvariantPolynomial::with_order(&["q"], TermOrder::Ascending);
    for (e, c) in counts {
        poly.add_term(&[e], c);
    }
    poly
}

/// Number of colorings whose image is exactly `s`, which must be a subquandle.
pub fn surjective_hom_count(p: &Presentation, t: &QuandleTable, s: &[usize]) -> Result<u64> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    if !t.is_subquandle(&s) {
        return Err(Error::NotSubquandle);
    }
    let sub = t.restrict(&s)?;
    Ok(surjective_onto(p, &sub))
}

/// Colorings by `sub` that use every element of `sub`.
fn surjective_onto(p: &Presentation, sub: &QuandleTable) -> u64 {
    let n = sub.order();
    ColoringSearch::new(p, sub).fold(
        || 0u64,
        |acc, c| {
            if image(c).len() == n {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )
}

/// `Σ_{S ∈ SQ(T)} |SH(Q(L), S)| q^{|S|}`, computed by enumerating colorings into
/// each subquandle separately.
pub fn phi_e_decomposed(p: &Presentation, t: &QuandleTable) -> Result<InvariantPolynomial> {
    let mut poly = InvariantPolynomial::with_order(&["q"], TermOrder::Ascending);
    for s in t.subquandles()? {
        let sub = t.restrict(&s)?;
        poly.add_term(&[s.len() as u32], surjective_onto(p, &sub) as i64);
    }
    Ok(poly)
}

/// `ρ`: size of the submodule spanned by the elements at `positions`.
pub fn submodule_span(module: &FreeModule, positions: &[usize]) -> usize {
    module.span_positions(positions).len()
}

/// `Φ_sqp = Σ_f q^{|Im f|} z^{ρ(f)}`.
pub fn phi_sqp(p: &Presentation, target: &TargetQuandle) -> Result<InvariantPolynomial> {
    Ok(summarize_with_module(p, target)?
        .phi_sqp
        .expect("module context present"))
}

/// Counting invariant, Φ_E and (when the target has a module) Φ_sqp from one
/// enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSummary {
    pub count: u64,
    pub phi_e: InvariantPolynomial,
    pub phi_sqp: Option<InvariantPolynomial>,
}

pub fn summarize(p: &Presentation, target: &TargetQuandle) -> Result<InvariantSummary> {
    let t = &target.table;
    if let Some(m) = &target.module {
        if m.size() != Some(t.order()) {
            return Err(Error::InvalidArgument(format!(
                "module of size {:?} does not match table of order {}",
                m.size(),
                t.order()
            )));
        }
    }
    let module = target.module.as_ref();
    // (|Im f|, ρ(f)) -> count, with ρ memoized per image
    type Acc = (HashMap<(u32, u32), i64>, HashMap<Vec<usize>, u32>);
    let (counts, _) = ColoringSearch::new(p, t).fold(
        || (HashMap::new(), HashMap::new()),
        |acc: &mut Acc, c| {
            let img = image(c);
            let rho = match module {
                Some(m) => *acc
                    .1
                    .entry(img.clone())
                    .or_insert_with(|| submodule_span(m, &img) as u32),
                None => 0,
            };
            *acc.0.entry((img.len() as u32, rho)).or_insert(0) += 1;
        },
        |a, b| (merge_counts(a.0, b.0), HashMap::new()),
    );
    let mut phi_e = InvariantPolynomial::with_order(&["q"], TermOrder::Ascending);
    let mut sqp = InvariantPolynomial::with_order(&["q", "z"], TermOrder::Ascending);
    let mut count = 0;
    for (&(size, rho), &c) in &counts {
        count += c as u64;
        phi_e.add_term(&[size], c);
        sqp.add_term(&[size, rho], c);
    }
    Ok(InvariantSummary {
        count,
        phi_e,
        phi_sqp: module.map(|_| sqp),
    })
}

/// Like [`summarize`] but fails when the target has no module structure.
pub fn summarize_with_module(p: &Presentation, target: &TargetQuandle) -> Result<InvariantSummary> {
    if target.module.is_none() {
        return Err(Error::MissingModuleContext);
    }
    summarize(p, target)
}
