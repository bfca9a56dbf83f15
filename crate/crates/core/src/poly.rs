//! Integer polynomials in named formal variables, used for qp(s,t), Φ_E and Φ_sqp.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order in which terms are listed. Equality ignores it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum TermOrder {
    /// Descending total degree, then lexicographically descending exponents.
    #[default]
    Descending,
    /// The reverse: ascending total degree, then ascending exponents.
    Ascending,
}

/// Sparse integer polynomial. Zero coefficients are never stored.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct InvariantPolynomial {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, i64>,
    order: TermOrder,
}

impl PartialEq for InvariantPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for InvariantPolynomial {}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coef: i64,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

impl From<InvariantPolynomial> for PolyJson {
    fn from(p: InvariantPolynomial) -> Self {
        let terms = p
            .terms()
            .map(|(exp, coef)| TermJson {
                exp: exp.to_vec(),
                coef,
            })
            .collect();
        PolyJson {
            vars: p.vars,
            terms,
        }
    }
}

impl TryFrom<PolyJson> for InvariantPolynomial {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self> {
        let mut p = InvariantPolynomial::new(&j.vars);
        for t in j.terms {
            if t.exp.len() != p.vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: p.vars.len(),
                    found: t.exp.len(),
                });
            }
            p.add_term(&t.exp, t.coef);
        }
        Ok(p)
    }
}

fn canonical_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl InvariantPolynomial {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::with_order(vars, TermOrder::Descending)
    }

    pub fn with_order<S: AsRef<str>>(vars: &[S], order: TermOrder) -> Self {
        InvariantPolynomial {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    /// The same polynomial listed in `order`.
    pub fn ordered(mut self, order: TermOrder) -> Self {
        self.order = order;
        self
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coef · Π var_k^{exp_k}`.
    pub fn add_term(&mut self, exp: &[u32], coef: i64) {
        assert_eq!(exp.len(), self.vars.len(), "exponent arity");
        if coef == 0 {
            return;
        }
        let entry = self.terms.entry(exp.to_vec()).or_insert(0);
        *entry += coef;
        if *entry == 0 {
            self.terms.remove(exp);
        }
    }

    pub fn coefficient(&self, exp: &[u32]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    /// Terms in this polynomial's [`TermOrder`].
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, &c)| (e.as_slice(), c)).collect();
        match self.order {
            TermOrder::Descending => v.sort_by(|a, b| canonical_cmp(a.0, b.0)),
            TermOrder::Ascending => v.sort_by(|a, b| canonical_cmp(b.0, a.0)),
        }
        v.into_iter()
    }

    pub fn add(&self, other: &InvariantPolynomial) -> InvariantPolynomial {
        assert_eq!(self.vars, other.vars, "variable lists differ");
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    /// Substitutes an integer for `var`, removing it from the variable list.
    pub fn substitute(&self, var: &str, value: i64) -> Result<InvariantPolynomial> {
        let k = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::InvalidArgument(format!("no variable `{var}`")))?;
        let mut vars = self.vars.clone();
        vars.remove(k);
        let mut out = InvariantPolynomial::with_order(&vars, self.order);
        for (e, &c) in &self.terms {
            let mut e2 = e.clone();
            let power = e2.remove(k);
            out.add_term(&e2, c * value.pow(power));
        }
        Ok(out)
    }

    /// Value with every variable set to `value`.
    pub fn evaluate_all(&self, value: i64) -> i64 {
        self.terms
            .iter()
            .map(|(e, &c)| c * value.pow(e.iter().sum()))
            .sum()
    }

    /// Parses the canonical text form, e.g. `s^16t^16 + 15s^8t^8`, over the given
    /// variables. Terms may appear in any order.
    pub fn parse<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<InvariantPolynomial> {
        let err = || Error::Polynomial(text.to_string());
        let mut p = InvariantPolynomial::new(vars);
        let s: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        if s == "0" {
            return Ok(p);
        }
        if s.is_empty() {
            return Err(err());
        }
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r;
            } else if !first {
                return Err(err());
            }
            first = false;
            let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
            let coef: i64 = if digits > 0 {
                rest[..digits].parse().map_err(|_| err())?
            } else {
                1
            };
            rest = &rest[digits..];
            let mut exp = vec![0u32; p.vars.len()];
            let mut any_var = false;
            while let Some(k) = p.vars.iter().position(|v| rest.starts_with(v.as_str())) {
                rest = &rest[p.vars[k].len()..];
                any_var = true;
                let mut power = 1;
                if let Some(r) = rest.strip_prefix('^') {
                    let d = r.bytes().take_while(u8::is_ascii_digit).count();
                    if d == 0 {
                        return Err(err());
                    }
                    power = r[..d].parse().map_err(|_| err())?;
                    rest = &r[d..];
                }
                exp[k] += power;
            }
            if digits == 0 && !any_var {
                return Err(err());
            }
            p.add_term(&exp, sign * coef);
        }
        Ok(p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }
}

impl fmt::Display for InvariantPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (exp, coef)) in self.terms().enumerate() {
            let mut monomial = String::new();
            for (v, &e) in self.vars.iter().zip(exp) {
                match e {
                    0 => {}
                    1 => monomial.push_str(v),
                    _ => monomial.push_str(&format!("{v}^{e}")),
                }
            }
            let mag = coef.unsigned_abs();
            let body = if monomial.is_empty() {
                mag.to_string()
            } else if mag == 1 {
                monomial
            } else {
                format!("{mag}{monomial}")
            };
            match (k, coef < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_text() {
        let mut p = InvariantPolynomial::new(&["s", "t"]);
        p.add_term(&[8, 8], 15);
        p.add_term(&[16, 16], 1);
        assert_eq!(p.to_string(), "s^16t^16 + 15s^8t^8");

        let mut q = InvariantPolynomial::new(&["q", "z"]);
        q.add_term(&[1, 1], 1);
        q.add_term(&[1, 4], 15);
        assert_eq!(q.to_string(), "15qz^4 + qz");
        q.add_term(&[0, 0], -2);
        q.add_term(&[2, 0], -1);
        assert_eq!(q.to_string(), "15qz^4 - q^2 + qz - 2");
        assert_eq!(InvariantPolynomial::new(&["q"]).to_string(), "0");

        let up = q.clone().ordered(TermOrder::Ascending);
        assert_eq!(up.to_string(), "-2 + qz - q^2 + 15qz^4");
        assert_eq!(up, q);
        assert_eq!(up.substitute("z", 1).unwrap().order(), TermOrder::Ascending);
    }

    #[test]
    fn parse_ignores_order() {
        let a = InvariantPolynomial::parse("qz + 15qz^4", &["q", "z"]).unwrap();
        let b = InvariantPolynomial::parse("15qz^4+qz", &["q", "z"]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coefficient(&[1, 4]), 15);
        assert!(InvariantPolynomial::parse("qx", &["q", "z"]).is_err());
        assert!(InvariantPolynomial::parse("q^", &["q"]).is_err());
    }

    #[test]
    fn json_shape() {
        let mut p = InvariantPolynomial::new(&["s", "t"]);
        p.add_term(&[8, 8], 15);
        p.add_term(&[16, 16], 1);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(
            j,
            r#"{"vars":["s","t"],"terms":[{"exp":[16,16],"coef":1},{"exp":[8,8],"coef":15}]}"#
        );
        let back: InvariantPolynomial = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn substitution() {
        let p = InvariantPolynomial::parse("3qz + 6q^3z^9", &["q", "z"]).unwrap();
        let e = p.substitute("z", 1).unwrap();
        assert_eq!(e, InvariantPolynomial::parse("3q + 6q^3", &["q"]).unwrap());
        assert_eq!(e.evaluate_all(1), 9);
        assert!(p.substitute("w", 1).is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(terms in proptest::collection::vec(((0u32..5, 0u32..5), -20i64..20), 0..6)) {
            let mut p = InvariantPolynomial::new(&["q", "z"]);
            for ((a, b), c) in terms {
                p.add_term(&[a, b], c);
            }
            let back = InvariantPolynomial::parse(&p.to_string(), &["q", "z"]).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
