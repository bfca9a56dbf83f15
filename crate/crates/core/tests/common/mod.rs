#![allow(dead_code)]

use symquandle::link::{Presentation, Sign};
use symquandle::ring::GramMatrix;
use symquandle::{FiniteRing, GaussCode, QuandleTable, SymplecticSpace};

pub const M_V: &str = include_str!("../fixtures/m_v.txt");
pub const M_V_PRIME: &str = include_str!("../fixtures/m_v_prime.txt");
pub const M_V_DOUBLE_PRIME: &str = include_str!("../fixtures/m_v_double_prime.txt");
pub const ERRATA: &str = include_str!("../fixtures/errata.txt");

pub const TREFOIL: &str = "O1+U2+O3+U1+O2+U3+";
pub const HOPF: &str = "O1+U2+,O2+U1+";
pub const FIGURE_EIGHT: &str = "O1+U4-O3-U1+O2+U3-O4-U2+";
/// A non-planar code: the virtual trefoil.
pub const VIRTUAL_TREFOIL: &str = "O1-U2-U1-O2-";

/// Rows of a fixture with 1-based entries, as printed.
pub fn fixture_rows(text: &str) -> Vec<Vec<usize>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect()
}

/// `(row, col, printed, computed)` entries listed for `file` in the errata.
pub fn errata_for(file: &str) -> Vec<(usize, usize, usize, usize)> {
    ERRATA
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .filter_map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[0] == file).then(|| {
                (
                    f[1].parse().unwrap(),
                    f[2].parse().unwrap(),
                    f[3].parse().unwrap(),
                    f[4].parse().unwrap(),
                )
            })
        })
        .collect()
}

/// The fixture with its errata applied.
pub fn corrected(file: &str, text: &str) -> QuandleTable {
    let mut rows = fixture_rows(text);
    for (r, c, printed, computed) in errata_for(file) {
        assert_eq!(rows[r - 1][c - 1], printed);
        rows[r - 1][c - 1] = computed;
    }
    QuandleTable::from_rows(rows).unwrap()
}

pub fn v_space() -> SymplecticSpace {
    SymplecticSpace::parse("Z2", 4, "0,1,0,0;1,0,0,0;0,0,0,1;0,0,1,0").unwrap()
}

pub fn v_prime_space() -> SymplecticSpace {
    SymplecticSpace::parse("GF(2^2)/t^2+t+1", 2, "0,1;1,0").unwrap()
}

pub fn v_double_prime_space() -> SymplecticSpace {
    SymplecticSpace::parse("Z4", 2, "0,2;2,0").unwrap()
}

pub fn one_based(set: &[usize]) -> Vec<usize> {
    set.iter().map(|x| x + 1).collect()
}

pub fn presentation(code: &str) -> Presentation {
    code.parse::<GaussCode>().unwrap().presentation()
}

/// Direct relation check by table lookup, no propagation.
pub fn satisfies(p: &Presentation, t: &QuandleTable, c: &[usize]) -> bool {
    p.relations.iter().all(|r| match r.sign {
        Sign::Positive => t.op(c[r.a], c[r.b]) == c[r.c],
        Sign::Negative => t.op(c[r.c], c[r.b]) == c[r.a],
    })
}

/// Every assignment in `T^g`, in lexicographic order, filtered by [`satisfies`].
pub fn naive_colorings(p: &Presentation, t: &QuandleTable) -> Vec<Vec<usize>> {
    let n = t.order();
    let g = p.generators;
    let mut out = Vec::new();
    let mut c = vec![0usize; g];
    loop {
        if satisfies(p, t, &c) {
            out.push(c.clone());
        }
        let mut k = g;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            c[k] += 1;
            if c[k] < n {
                break;
            }
            c[k] = 0;
        }
    }
}

pub fn naive_size(p: &Presentation, t: &QuandleTable) -> u128 {
    (t.order() as u128).pow(p.generators as u32)
}

/// Nondegenerate d = 2 forms over the listed fields, plus standard d = 4 forms
/// over Z_2 and Z_3.
pub fn field_suite() -> Vec<SymplecticSpace> {
    let mut out = Vec::new();
    for spec in ["Z2", "Z3", "Z5", "Z7", "GF(2^2)", "GF(2^3)", "GF(3^2)"] {
        let ring = FiniteRing::new(spec.parse().unwrap()).unwrap();
        for alpha in 1..ring.order() {
            out.push(SymplecticSpace::planar(&ring, alpha).unwrap());
        }
    }
    for n in [2, 3] {
        let ring = FiniteRing::modular(n).unwrap();
        out.push(
            SymplecticSpace::new(
                ring.clone(),
                4,
                GramMatrix::hyperbolic(&ring, &[1, 1], 4).unwrap(),
            )
            .unwrap(),
        );
        out.push(
            SymplecticSpace::new(
                ring.clone(),
                4,
                GramMatrix::hyperbolic(&ring, &[1, n - 1], 4).unwrap(),
            )
            .unwrap(),
        );
    }
    out.push(v_space());
    out.push(SymplecticSpace::parse("Z3", 4, "0,1,1,0;2,0,0,0;2,0,0,1;0,0,2,0").unwrap());
    out
}

/// Field suite plus degenerate forms and non-field rings.
pub fn full_suite() -> Vec<SymplecticSpace> {
    let mut out = field_suite();
    for (ring, dim, gram) in [
        ("Z4", 2, "0,2;2,0"),
        ("Z4", 2, "0,1;3,0"),
        ("Z6", 2, "0,3;3,0"),
        ("Z8", 2, "0,4;4,0"),
        ("Z9", 2, "0,3;6,0"),
        ("Z2", 3, "0,1,0;1,0,0;0,0,0"),
        ("Z3", 3, "0,1,2;2,0,1;1,2,0"),
        ("Z2", 4, "0,0,0,0;0,0,0,0;0,0,0,0;0,0,0,0"),
        ("GF(2^2)", 3, "0,2,3;2,0,1;3,1,0"),
        ("Z3", 1, "0"),
    ] {
        out.push(SymplecticSpace::parse(ring, dim, gram).unwrap());
    }
    out
}

/// Standard nondegenerate form on `(Z_3)^4`, an 81-element target.
pub const Z3_4_GRAM: &str = "0,1,0,0;2,0,0,0;0,0,0,1;0,0,2,0";
