//! Dense polynomials over Z_p, coefficients stored lowest degree first.

use crate::error::{Error, Result};

pub(crate) fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn degree(v: &[u32]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub(crate) fn rem_monic(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = degree(m).expect("modulus is nonzero");
    debug_assert_eq!(m[dm], 1);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let lead = r[dr] as u64;
        let shift = dr - dm;
        for (k, &c) in m[..=dm].iter().enumerate() {
            let sub = lead * c as u64 % p as u64;
            r[shift + k] = ((r[shift + k] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(m: &[u32], p: u32) -> bool {
    let Some(deg) = degree(m) else { return false };
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut x = code;
            for _ in 0..d {
                f.push((x % p as u64) as u32);
                x /= p as u64;
            }
            f.push(1);
            if rem_monic(m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Parses a polynomial in `t` such as `t^2+t+1`, `2t^2 + 4*t + 2` or `t^3-t+1`.
/// Coefficients are reduced mod `p`.
pub(crate) fn parse(text: &str, p: u32) -> Result<Vec<u32>> {
    let err = || Error::Polynomial(text.to_string());
    let s: String = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '−' { '-' } else { c })
        .collect();
    if s.is_empty() {
        return Err(err());
    }
    let bytes = s.as_bytes();
    let mut coeffs: Vec<i64> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i != 0 {
            return Err(err());
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef: i64 = if i > start {
            s[start..i].parse().map_err(|_| err())?
        } else {
            1
        };
        let had_coef = i > start;
        if i < bytes.len() && bytes[i] == b'*' {
            if !had_coef {
                return Err(err());
            }
            i += 1;
            if i >= bytes.len() || bytes[i] != b't' {
                return Err(err());
            }
        }
        let exp = if i < bytes.len() && bytes[i] == b't' {
            i += 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let es = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if es == i {
                    return Err(err());
                }
                s[es..i].parse::<usize>().map_err(|_| err())?
            } else {
                1
            }
        } else if had_coef {
            0
        } else {
            return Err(err());
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] += sign * coef;
    }
    Ok(trim(
        coeffs
            .into_iter()
            .map(|c| c.rem_euclid(p as i64) as u32)
            .collect(),
    ))
}

pub(crate) fn format(v: &[u32]) -> String {
    let mut parts = Vec::new();
    for (e, &c) in v.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let var = match e {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{e}"),
        };
        parts.push(match (c, e) {
            (_, 0) => c.to_string(),
            (1, _) => var,
            _ => format!("{c}{var}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("t^2+t+1", 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(parse("2t^2 + 4*t + 2", 5).unwrap(), vec![2, 4, 2]);
        assert_eq!(parse("t^3-t+1", 3).unwrap(), vec![1, 2, 0, 1]);
        assert_eq!(format(&[1, 1, 1]), "t^2+t+1");
        assert_eq!(format(&[2, 0, 1]), "t^2+2");
        assert!(parse("t^", 2).is_err());
        assert!(parse("", 2).is_err());
        assert!(parse("x+1", 2).is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        // t^2+1 = (t+1)^2 over Z_2
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        // t^4+t^2+1 = (t^2+t+1)^2 over Z_2, no linear factor
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn remainder() {
        // t^2 mod t^2+t+1 over Z_2 is t+1
        assert_eq!(rem_monic(&[0, 0, 1], &[1, 1, 1], 2), vec![1, 1]);
    }
}
