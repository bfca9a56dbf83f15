use std::collections::BTreeMap;

use super::QuandleTable;

/// Per-element invariant that any isomorphism must preserve.
type Profile = (usize, usize, usize);

fn profiles(t: &QuandleTable) -> Vec<Profile> {
    let mut orbit_size = vec![0; t.order()];
    for orbit in t.orbits() {
        for &x in &orbit {
            orbit_size[x] = orbit.len();
        }
    }
    (0..t.order())
        .map(|i| {
            let (c, r) = t.fixed_counts(i);
            (c, r, orbit_size[i])
        })
        .collect()
}

type Signature = (u32, Vec<(u32, u32)>, Vec<(u32, u32)>);

fn signature(t: &QuandleTable, colors: &[u32], x: usize) -> Signature {
    let n = t.order();
    let mut row: Vec<(u32, u32)> = (0..n).map(|y| (colors[y], colors[t.op(x, y)])).collect();
    let mut col: Vec<(u32, u32)> = (0..n).map(|y| (colors[y], colors[t.op(y, x)])).collect();
    row.sort_unstable();
    col.sort_unstable();
    (colors[x], row, col)
}

/// Jointly refines colorings of both tables until stable. Returns `false` when
/// the color histograms differ.
fn refine(a: &QuandleTable, b: &QuandleTable, ca: &mut Vec<u32>, cb: &mut Vec<u32>) -> bool {
    let classes = |c: &[u32]| {
        let mut v = c.to_vec();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    let mut count = classes(ca);
    loop {
        let sa: Vec<Signature> = (0..a.order()).map(|x| signature(a, ca, x)).collect();
        let sb: Vec<Signature> = (0..b.order()).map(|x| signature(b, cb, x)).collect();
        let mut ids: BTreeMap<&Signature, (u32, usize, usize)> = BTreeMap::new();
        for s in &sa {
            ids.entry(s).or_default().1 += 1;
        }
        for s in &sb {
            ids.entry(s).or_default().2 += 1;
        }
        if ids.values().any(|&(_, x, y)| x != y) {
            return false;
        }
        for (k, v) in ids.values_mut().enumerate() {
            v.0 = k as u32;
        }
        let next = ids.len();
        *ca = sa.iter().map(|s| ids[s].0).collect();
        *cb = sb.iter().map(|s| ids[s].0).collect();
        if next == count {
            return true;
        }
        count = next;
    }
}

struct Search<'a> {
    a: &'a QuandleTable,
    b: &'a QuandleTable,
    ca: Vec<u32>,
    cb: Vec<u32>,
    fwd: Vec<Option<usize>>,
    bwd: Vec<Option<usize>>,
    trail: Vec<usize>,
}

impl Search<'_> {
    fn set(&mut self, x: usize, y: usize, queue: &mut Vec<usize>) -> bool {
        match (self.fwd[x], self.bwd[y]) {
            (Some(v), _) => v == y,
            (None, Some(_)) => false,
            (None, None) => {
                if self.ca[x] != self.cb[y] {
                    return false;
                }
                self.fwd[x] = Some(y);
                self.bwd[y] = Some(x);
                self.trail.push(x);
                queue.push(x);
                true
            }
        }
    }

    /// Assigns `x ↦ y` and everything it forces through `φ(u ▷ v) = φ(u) ▷ φ(v)`.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = Vec::new();
        if !self.set(x, y, &mut queue) {
            return false;
        }
        while let Some(u) = queue.pop() {
            let fu = self.fwd[u].unwrap();
            let mut k = 0;
            while k < self.trail.len() {
                let v = self.trail[k];
                let fv = self.fwd[v].unwrap();
                if !self.set(self.a.op(u, v), self.b.op(fu, fv), &mut queue)
                    || !self.set(self.a.op(v, u), self.b.op(fv, fu), &mut queue)
                {
                    return false;
                }
                k += 1;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let y = self.fwd[x].take().unwrap();
            self.bwd[y] = None;
        }
    }

    /// Gives every assigned pair its own color and refines.
    fn individualize(&mut self) -> bool {
        let base = self.ca.iter().chain(&self.cb).copied().max().unwrap_or(0) + 1;
        for (k, &x) in self.trail.iter().enumerate() {
            let y = self.fwd[x].unwrap();
            self.ca[x] = base + k as u32;
            self.cb[y] = base + k as u32;
        }
        refine(self.a, self.b, &mut self.ca, &mut self.cb)
    }

    fn extend(&mut self) -> bool {
        let saved = (self.ca.clone(), self.cb.clone());
        let ok = self.individualize() && self.branch();
        if !ok {
            (self.ca, self.cb) = saved;
        }
        ok
    }

    fn branch(&mut self) -> bool {
        // unassigned element with the fewest candidates, least index on ties
        let mut size: BTreeMap<u32, usize> = BTreeMap::new();
        for x in (0..self.a.order()).filter(|&x| self.fwd[x].is_none()) {
            *size.entry(self.ca[x]).or_default() += 1;
        }
        let Some(x) = (0..self.a.order())
            .filter(|&x| self.fwd[x].is_none())
            .min_by_key(|&x| (size[&self.ca[x]], x))
        else {
            return true;
        };
        for y in 0..self.b.order() {
            if self.bwd[y].is_some() || self.ca[x] != self.cb[y] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) && self.extend() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

impl QuandleTable {
    /// Finds an isomorphism `φ: self → other` (0-based, `φ[i]` is the image of `i`).
    ///
    /// Individualization-refinement search: elements start colored by their
    /// `(c(i), r(i), orbit size)` profile, colors are refined jointly through
    /// the operation, and after each choice the assigned pairs get fresh colors.
    /// Forced values propagate through `φ(u ▷ v) = φ(u) ▷ φ(v)`. The element
    /// branched on is the one in the smallest color class, least index first,
    /// and candidates are tried in ascending order, so results are reproducible.
    pub fn is_isomorphic(&self, other: &QuandleTable) -> Option<Vec<usize>> {
        if self.order() != other.order() {
            return None;
        }
        let pa = profiles(self);
        let pb = profiles(other);
        let mut keys: Vec<Profile> = pa.iter().chain(&pb).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        let color = |p: &Profile| keys.binary_search(p).unwrap() as u32;
        let n = self.order();
        let mut search = Search {
            a: self,
            b: other,
            ca: pa.iter().map(color).collect(),
            cb: pb.iter().map(color).collect(),
            fwd: vec![None; n],
            bwd: vec![None; n],
            trail: Vec::with_capacity(n),
        };
        if search.extend() {
            Some(search.fwd.into_iter().map(Option::unwrap).collect())
        } else {
            None
        }
    }
}
