//! Signed Gauss codes of classical and virtual links, and their knot-quandle
//! presentations (one generator per arc, one relation per crossing).
//!
//! Grammar: components separated by `,`; each component a sequence of tokens
//! `O<k><s>` or `U<k><s>` with `s` one of `+`, `-`, `−`. Whitespace is ignored and
//! an empty component is a zero-crossing unknot. Any abstract code is accepted,
//! so non-planar codes describe virtual links.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pass {
    Over,
    Under,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Token {
    pub pass: Pass,
    pub label: u32,
    pub sign: Sign,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.pass {
            Pass::Over => 'O',
            Pass::Under => 'U',
        };
        let s = match self.sign {
            Sign::Positive => '+',
            Sign::Negative => '-',
        };
        write!(f, "{p}{}{s}", self.label)
    }
}

/// A validated signed Gauss code: every crossing label occurs exactly twice,
/// once over and once under, with the same sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussCode {
    components: Vec<Vec<Token>>,
}

impl GaussCode {
    pub fn new(components: Vec<Vec<Token>>) -> Result<Self> {
        let mut seen: BTreeMap<u32, Vec<Token>> = BTreeMap::new();
        for t in components.iter().flatten() {
            seen.entry(t.label).or_default().push(*t);
        }
        for (&label, occ) in &seen {
            if occ.len() != 2 {
                return Err(Error::Crossing {
                    label,
                    msg: format!("appears {} times, expected 2", occ.len()),
                });
            }
            if occ[0].pass == occ[1].pass {
                return Err(Error::Crossing {
                    label,
                    msg: "needs one over-pass and one under-pass".into(),
                });
            }
            if occ[0].sign != occ[1].sign {
                return Err(Error::Crossing {
                    label,
                    msg: "sign mismatch between its two occurrences".into(),
                });
            }
        }
        Ok(GaussCode { components })
    }

    pub fn components(&self) -> &[Vec<Token>] {
        &self.components
    }

    pub fn crossing_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// The same code with every crossing sign reversed.
    pub fn with_signs_reversed(&self) -> GaussCode {
        GaussCode {
            components: self
                .components
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|t| Token {
                            sign: t.sign.flip(),
                            ..*t
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Arcs and crossing relations.
    ///
    /// On a component with under-passes at positions `u_1 < ... < u_r`, arc `k`
    /// (`k ≥ 1`) starts just after `u_k` and arc 0 is the one running through the
    /// start of the component (it starts after `u_r` and wraps around). A component
    /// with no under-pass is a single arc. Arcs are numbered component by
    /// component; relations are listed by ascending crossing label.
    pub fn presentation(&self) -> Presentation {
        let mut offset = 0;
        // label -> (incoming under arc, outgoing under arc)
        let mut under: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
        let mut over: BTreeMap<u32, usize> = BTreeMap::new();
        let mut signs: BTreeMap<u32, Sign> = BTreeMap::new();
        for comp in &self.components {
            let r = comp.iter().filter(|t| t.pass == Pass::Under).count();
            let arcs = r.max(1);
            let mut seen_under = 0;
            for t in comp {
                signs.insert(t.label, t.sign);
                match t.pass {
                    Pass::Over => {
                        over.insert(t.label, offset + seen_under % arcs);
                    }
                    Pass::Under => {
                        let incoming = offset + seen_under % arcs;
                        seen_under += 1;
                        let outgoing = offset + seen_under % arcs;
                        under.insert(t.label, (incoming, outgoing));
                    }
                }
            }
            offset += arcs;
        }
        let relations = under
            .iter()
            .map(|(label, &(a, c))| Relation {
                a,
                b: over[label],
                c,
                sign: signs[label],
            })
            .collect();
        Presentation {
            generators: offset,
            relations,
        }
    }
}

impl FromStr for GaussCode {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut components = vec![Vec::new()];
        let mut k = 0;
        while k < chars.len() {
            let (pos, c) = chars[k];
            let pass = match c {
                ',' => {
                    components.push(Vec::new());
                    k += 1;
                    continue;
                }
                'O' | 'o' => Pass::Over,
                'U' | 'u' => Pass::Under,
                _ => {
                    return Err(Error::GaussSyntax {
                        pos,
                        msg: format!("expected `O`, `U` or `,`, found `{c}`"),
                    })
                }
            };
            k += 1;
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            if start == k {
                return Err(Error::GaussSyntax {
                    pos: chars.get(k).map_or(text.len(), |c| c.0),
                    msg: "expected a crossing number".into(),
                });
            }
            let digits: String = chars[start..k].iter().map(|c| c.1).collect();
            let label: u32 = digits.parse().map_err(|_| Error::GaussSyntax {
                pos: chars[start].0,
                msg: format!("crossing number `{digits}` out of range"),
            })?;
            if label == 0 {
                return Err(Error::GaussSyntax {
                    pos: chars[start].0,
                    msg: "crossing numbers start at 1".into(),
                });
            }
            let sign = match chars.get(k).map(|c| c.1) {
                Some('+') => Sign::Positive,
                Some('-') | Some('−') => Sign::Negative,
                _ => {
                    return Err(Error::GaussSyntax {
                        pos: chars.get(k).map_or(text.len(), |c| c.0),
                        msg: "expected a crossing sign `+` or `-`".into(),
                    })
                }
            };
            k += 1;
            components
                .last_mut()
                .unwrap()
                .push(Token { pass, label, sign });
        }
        GaussCode::new(components)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, comp) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            for t in comp {
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

/// One crossing: `a ▷ b = c` when positive, `a ▷⁻¹ b = c` (so `c ▷ b = a`) when
/// negative. `a` is the incoming under-arc, `b` the over-arc, `c` the outgoing
/// under-arc. Generators are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relations: Vec<Relation>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generators)?;
        for r in &self.relations {
            let op = match r.sign {
                Sign::Positive => "▷",
                Sign::Negative => "▷⁻¹",
            };
            writeln!(f, "x{} {op} x{} = x{}", r.a + 1, r.b + 1, r.c + 1)?;
        }
        Ok(())
    }
}
