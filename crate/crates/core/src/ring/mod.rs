//! Finite commutative rings `Z_n` and `GF(p^m)` with elements encoded as integers.
//!
//! For `Z_n` an element is its canonical residue. For `GF(p^m) = Z_p[t]/(f)` an
//! element `c_0 + c_1 t + ... + c_{m-1} t^{m-1}` is encoded as `Σ c_j p^j`, so
//! `0 ↦ 0`, `1 ↦ 1` and `t ↦ p`.

pub mod matrix;
pub mod module;
pub(crate) mod zpoly;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use module::{FreeModule, GramMatrix, ModuleVector};

/// Largest ring order accepted by [`FiniteRing::new`].
pub const MAX_RING_ORDER: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Modular {
        n: u32,
    },
    /// `modulus` lists coefficients lowest degree first; it is monic of degree `m`.
    Galois {
        p: u32,
        m: u32,
        modulus: Vec<u32>,
    },
}

impl RingSpec {
    pub fn modular(n: u32) -> Self {
        RingSpec::Modular { n }
    }

    /// `GF(p^m)` with the built-in modulus table.
    pub fn galois(p: u32, m: u32) -> Result<Self> {
        let modulus = default_modulus(p, m).ok_or(Error::NoDefaultModulus { p, m })?;
        Ok(RingSpec::Galois { p, m, modulus })
    }

    pub fn galois_with_modulus(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        RingSpec::Galois { p, m, modulus }
    }

    pub fn order(&self) -> Option<u32> {
        match self {
            RingSpec::Modular { n } => Some(*n),
            RingSpec::Galois { p, m, .. } => p.checked_pow(*m),
        }
    }
}

/// Moduli used when `GF(p^m)` is given without one.
fn default_modulus(p: u32, m: u32) -> Option<Vec<u32>> {
    let v: &[u32] = match (p, m) {
        (_, 1) => return Some(vec![0, 1]),
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (3, 2) => &[2, 2, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (5, 2) => &[2, 4, 1],
        (3, 3) => &[1, 2, 0, 1],
        _ => return None,
    };
    Some(v.to_vec())
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Modular { n } => write!(f, "Z{n}"),
            RingSpec::Galois { p, m, modulus } => {
                write!(f, "GF({p}^{m})/{}", zpoly::format(modulus))
            }
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Accepts `Z<n>`, `GF(<p>^<m>)`, `GF(<p>)` and `GF(<p>^<m>)/<poly in t>`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::RingSpec(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(rest) = compact.strip_prefix('Z') {
            let n: u32 = rest.parse().map_err(|_| err())?;
            return Ok(RingSpec::Modular { n });
        }
        let rest = compact.strip_prefix("GF(").ok_or_else(err)?;
        let (inside, tail) = rest.split_once(')').ok_or_else(err)?;
        let (p, m) = match inside.split_once('^') {
            Some((p, m)) => (
                p.parse::<u32>().map_err(|_| err())?,
                m.parse::<u32>().map_err(|_| err())?,
            ),
            None => (inside.parse::<u32>().map_err(|_| err())?, 1),
        };
        if !zpoly::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if tail.is_empty() {
            return RingSpec::galois(p, m);
        }
        let poly = tail.strip_prefix('/').ok_or_else(err)?;
        Ok(RingSpec::Galois {
            p,
            m,
            modulus: zpoly::parse(poly, p)?,
        })
    }
}

#[derive(Debug)]
enum Arith {
    Modular {
        n: u32,
    },
    Galois {
        p: u32,
        m: u32,
        /// `exp[k] = g^k` for a multiplicative generator `g`, length `q - 1`.
        exp: Vec<u32>,
        log: Vec<u32>,
    },
}

#[derive(Debug)]
struct RingInner {
    spec: RingSpec,
    order: u32,
    arith: Arith,
}

/// A finite commutative ring with identity. Cheap to clone.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    inner: Arc<RingInner>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.inner.spec == other.inner.spec
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    pub fn new(spec: RingSpec) -> Result<Self> {
        let (order, arith) = match &spec {
            RingSpec::Modular { n } => {
                if *n < 2 {
                    return Err(Error::RingSpec(format!("Z{n}: modulus must be at least 2")));
                }
                if *n > MAX_RING_ORDER {
                    return Err(Error::CapExceeded {
                        what: "ring order",
                        size: *n as u128,
                        cap: MAX_RING_ORDER as u128,
                    });
                }
                (*n, Arith::Modular { n: *n })
            }
            RingSpec::Galois { p, m, modulus } => {
                if !zpoly::is_prime(*p) {
                    return Err(Error::NotPrime(*p));
                }
                if *m == 0 {
                    return Err(Error::RingSpec(spec.to_string()));
                }
                let order = match p.checked_pow(*m) {
                    Some(q) if q <= MAX_RING_ORDER => q,
                    _ => {
                        return Err(Error::CapExceeded {
                            what: "ring order",
                            size: (*p as u128).saturating_pow(*m),
                            cap: MAX_RING_ORDER as u128,
                        })
                    }
                };
                let deg_ok = zpoly::degree(modulus) == Some(*m as usize)
                    && modulus.len() == *m as usize + 1
                    && modulus[*m as usize] == 1
                    && modulus.iter().all(|&c| c < *p);
                if !deg_ok {
                    return Err(Error::Polynomial(format!(
                        "{} is not a monic degree-{m} polynomial over Z_{p}",
                        zpoly::format(modulus)
                    )));
                }
                if !zpoly::is_irreducible(modulus, *p) {
                    return Err(Error::ReducibleModulus {
                        modulus: zpoly::format(modulus),
                        p: *p,
                    });
                }
                let (exp, log) = log_tables(*p, *m, modulus, order);
                (
                    order,
                    Arith::Galois {
                        p: *p,
                        m: *m,
                        exp,
                        log,
                    },
                )
            }
        };
        Ok(FiniteRing {
            inner: Arc::new(RingInner { spec, order, arith }),
        })
    }

    pub fn modular(n: u32) -> Result<Self> {
        Self::new(RingSpec::modular(n))
    }

    pub fn galois(p: u32, m: u32) -> Result<Self> {
        Self::new(RingSpec::galois(p, m)?)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.inner.spec
    }

    pub fn order(&self) -> u32 {
        self.inner.order
    }

    pub fn characteristic(&self) -> u32 {
        match &self.inner.arith {
            Arith::Modular { n } => *n,
            Arith::Galois { p, .. } => *p,
        }
    }

    pub fn is_field(&self) -> bool {
        match &self.inner.arith {
            Arith::Modular { n } => zpoly::is_prime(*n),
            Arith::Galois { .. } => true,
        }
    }

    /// Elements in encoding order.
    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.order()
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.order()
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// Image of an integer under `Z → R`.
    pub fn from_int(&self, k: i64) -> u32 {
        (k.rem_euclid(self.characteristic() as i64)) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.inner.arith {
            Arith::Modular { n } => ((a as u64 + b as u64) % *n as u64) as u32,
            Arith::Galois { p, m, .. } => digitwise(*p, *m, a, b, |x, y| (x + y) % p),
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        match &self.inner.arith {
            Arith::Modular { n } => (n - a) % n,
            Arith::Galois { p, m, .. } => digitwise(*p, *m, a, 0, |x, _| (p - x) % p),
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.inner.arith {
            Arith::Modular { n } => ((a as u64 * b as u64) % *n as u64) as u32,
            Arith::Galois { exp, log, .. } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    let k = (log[a as usize] as usize + log[b as usize] as usize) % exp.len();
                    exp[k]
                }
            }
        }
    }

    pub fn is_unit(&self, a: u32) -> bool {
        match &self.inner.arith {
            Arith::Modular { n } => gcd(a, *n) == 1,
            Arith::Galois { .. } => a != 0,
        }
    }

    pub fn inverse(&self, a: u32) -> Option<u32> {
        if !self.is_unit(a) {
            return None;
        }
        match &self.inner.arith {
            Arith::Modular { n } => {
                let (mut r0, mut r1) = (*n as i64, a as i64);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                Some(t0.rem_euclid(*n as i64) as u32)
            }
            Arith::Galois { exp, log, .. } => {
                let q1 = exp.len();
                Some(exp[(q1 - log[a as usize] as usize) % q1])
            }
        }
    }

    /// Human-readable form: the residue for `Z_n`, a polynomial in `t` for `GF(p^m)`.
    pub fn format_element(&self, a: u32) -> String {
        match &self.inner.arith {
            Arith::Modular { .. } => a.to_string(),
            Arith::Galois { p, m, .. } => zpoly::format(&decode_poly(*p, *m, a)),
        }
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec().fmt(f)
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn digitwise(p: u32, m: u32, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    for _ in 0..m {
        out += op(a % p, b % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn decode_poly(p: u32, m: u32, mut a: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(m as usize);
    for _ in 0..m {
        v.push(a % p);
        a /= p;
    }
    zpoly::trim(v)
}

fn encode_poly(p: u32, v: &[u32]) -> u32 {
    v.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn log_tables(p: u32, m: u32, modulus: &[u32], order: u32) -> (Vec<u32>, Vec<u32>) {
    let slow_mul = |a: u32, b: u32| {
        let prod = zpoly::mul(&decode_poly(p, m, a), &decode_poly(p, m, b), p);
        encode_poly(p, &zpoly::rem_monic(&prod, modulus, p))
    };
    let group = (order - 1) as usize;
    for g in 1..order {
        let mut exp = Vec::with_capacity(group);
        let mut x = 1;
        loop {
            exp.push(x);
            x = slow_mul(x, g);
            if x == 1 || exp.len() > group {
                break;
            }
        }
        if exp.len() == group {
            let mut log = vec![u32::MAX; order as usize];
            for (k, &e) in exp.iter().enumerate() {
                log[e as usize] = k as u32;
            }
            return (exp, log);
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}
