//! Small helpers around exact big-rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// x reduced into [0, 1).
pub fn mod_one(x: &Rat) -> Rat {
    let f = x.floor();
    x - f
}

/// x reduced into [0, m) for a positive modulus m.
pub fn mod_pos(x: &Rat, m: &Rat) -> Rat {
    assert!(m.is_positive(), "modulus must be positive");
    let q = (x / m).floor();
    x - q * m
}

/// Positive generator of the subgroup of Q generated by a and b.
/// gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d).
pub fn gcd_rat(a: &Rat, b: &Rat) -> Rat {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = num_integer::gcd(
        a.numer() * b.denom(),
        b.numer() * a.denom(),
    );
    Rat::new(num, a.denom() * b.denom())
}

/// Positive generator of the subgroup of Q generated by all entries
/// together with Z. Always divides 1.
pub fn subgroup_with_one(entries: &[Rat]) -> Rat {
    let mut g = Rat::one();
    for e in entries {
        g = gcd_rat(&g, e);
    }
    g
}

/// Serialize as `p` or `p/q` with q > 0.
pub fn rat_to_string(x: &Rat) -> String {
    if is_integer(x) {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator {num:?}")))?;
    let d: Int = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator {den:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // fall back to a quotient of lossy conversions for huge entries
        let n = x.numer().to_f64().unwrap_or(f64::MAX);
        let d = x.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_one_reduces_negative() {
        assert_eq!(mod_one(&rat(-3, 2)), rat(1, 2));
        assert_eq!(mod_one(&rat(7, 3)), rat(1, 3));
        assert_eq!(mod_one(&rat_int(4)), rat_int(0));
    }

    #[test]
    fn rational_gcd() {
        assert_eq!(gcd_rat(&rat(1, 2), &rat(1, 3)), rat(1, 6));
        assert_eq!(gcd_rat(&rat(3, 4), &rat_int(0)), rat(3, 4));
        assert_eq!(subgroup_with_one(&[rat(2, 3)]), rat(1, 3));
        assert_eq!(subgroup_with_one(&[]), rat_int(1));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["5/24", "-7", "0", "-3/17"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(rat_to_string(&x), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
    }
}
