//! Binary polynomials for LFSR feedback and cyclic-code generators.

use std::fmt;

use crate::{Error, Result};

/// A polynomial over GF(2), stored as a bit mask with bit `i` holding the
/// coefficient `c_i`. Degrees up to 32 are supported by the primitivity test
/// (it factors `2^n - 1` by trial division).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf2Polynomial {
    mask: u64,
}

impl fmt::Debug for Gf2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Polynomial({self})")
    }
}

impl fmt::Display for Gf2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..=self.degree()).rev() {
            if self.coeff(i) == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Gf2Polynomial {
    pub fn from_mask(mask: u64) -> Result<Self> {
        if mask == 0 {
            return Err(Error::Parse {
                field: "polynomial".into(),
                detail: "the zero polynomial has no degree".into(),
            });
        }
        Ok(Self { mask })
    }

    /// Coefficients `c_0 .. c_n` in ascending order.
    pub fn from_coeffs(coeffs: &[u8]) -> Result<Self> {
        let mut mask = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => mask |= 1 << i,
                other => {
                    return Err(Error::SymbolOutOfRange { value: other.into(), q: 2 });
                }
            }
        }
        Self::from_mask(mask)
    }

    /// Accepts `x9+x4+1` / `x^9+x^4+1` style or a hex mask like `0x211`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = |detail: String| Error::Parse { field: "polynomial".into(), detail };
        if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
            let mask = u64::from_str_radix(hex, 16)
                .map_err(|e| bad(format!("invalid hex mask {text:?}: {e}")))?;
            return Self::from_mask(mask);
        }
        let mut mask = 0u64;
        for term in text.split('+') {
            let term = term.trim();
            let exponent = if term == "1" {
                0
            } else if let Some(rest) = term.strip_prefix('x') {
                let rest = rest.strip_prefix('^').unwrap_or(rest);
                if rest.is_empty() {
                    1
                } else {
                    rest.parse::<u32>()
                        .map_err(|e| bad(format!("invalid exponent {rest:?}: {e}")))?
                }
            } else {
                return Err(bad(format!("unrecognized term {term:?}")));
            };
            if exponent > 63 {
                return Err(bad(format!("exponent {exponent} exceeds 63")));
            }
            if mask & (1 << exponent) != 0 {
                return Err(bad(format!("duplicate term for x^{exponent}")));
            }
            mask |= 1 << exponent;
        }
        Self::from_mask(mask)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn degree(&self) -> u32 {
        63 - self.mask.leading_zeros()
    }

    pub fn coeff(&self, i: u32) -> u8 {
        ((self.mask >> i) & 1) as u8
    }

    /// Has the `c_0 = c_n = 1` shape required for LFSR feedback.
    pub fn is_lfsr_shaped(&self) -> bool {
        self.degree() >= 1 && self.coeff(0) == 1
    }

    /// Rabin irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let n = self.degree();
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let x = 0b10u64;
        // gcd(x^(2^(n/f)) - x, p) = 1 for every prime f | n
        for f in distinct_prime_factors(n as u64) {
            let e = n / f as u32;
            let t = frobenius_power(x, e, self.mask);
            if poly_gcd(t ^ x, self.mask) != 1 {
                return false;
            }
        }
        // x^(2^n) = x (mod p)
        frobenius_power(x, n, self.mask) == x
    }

    /// True iff irreducible and the multiplicative order of `x` modulo the
    /// polynomial is `2^n - 1`. Supported for degrees up to 32.
    pub fn is_primitive(&self) -> Result<bool> {
        let n = self.degree();
        if n == 0 {
            return Err(Error::DegreeZero);
        }
        if n > 32 {
            return Err(Error::Unsupported(format!(
                "primitivity test supports degree <= 32, got {n}"
            )));
        }
        if self.coeff(0) == 0 || !self.is_irreducible() {
            return Ok(false);
        }
        let order: u64 = (1u64 << n) - 1;
        if poly_pow_mod(0b10, order, self.mask) != 1 {
            return Ok(false);
        }
        for f in distinct_prime_factors(order) {
            if poly_pow_mod(0b10, order / f, self.mask) == 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Does this polynomial divide `x^n + 1`?
    pub fn divides_x_pow_plus_one(&self, n: u32) -> bool {
        if self.degree() == 0 {
            return true; // the constant 1 divides everything
        }
        poly_pow_mod(0b10, n.into(), self.mask) == 1
    }

    /// Number of nonzero feedback coefficients `c_1 .. c_n`.
    pub fn feedback_weight(&self) -> u32 {
        (self.mask & !1).count_ones()
    }
}

/// Carry-less product; operand degrees must sum below 64.
pub fn poly_mul(mut a: u64, mut b: u64) -> u64 {
    let mut out = 0u64;
    while b != 0 {
        if b & 1 == 1 {
            out ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    out
}

pub fn poly_rem(mut x: u64, m: u64) -> u64 {
    debug_assert!(m != 0);
    let dm = 63 - m.leading_zeros();
    while x != 0 {
        let dx = 63 - x.leading_zeros();
        if dx < dm {
            break;
        }
        x ^= m << (dx - dm);
    }
    x
}

fn poly_mulmod(a: u64, b: u64, m: u64) -> u64 {
    poly_rem(poly_mul(a, b), m)
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// `base^(2^e) mod m` by repeated squaring of the Frobenius map.
fn frobenius_power(base: u64, e: u32, m: u64) -> u64 {
    let mut t = poly_rem(base, m);
    for _ in 0..e {
        t = poly_mulmod(t, t, m);
    }
    t
}

fn poly_pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let mut result = poly_rem(1, m);
    let mut acc = poly_rem(base, m);
    while e != 0 {
        if e & 1 == 1 {
            result = poly_mulmod(result, acc, m);
        }
        acc = poly_mulmod(acc, acc, m);
        e >>= 1;
    }
    result
}

fn distinct_prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= x {
        if x % d == 0 {
            out.push(d);
            while x % d == 0 {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// Bundled primitive polynomials `(degree, mask)`, one or more per degree up
/// to 16. Entries whose low-order coefficients vanish support the
/// covering-code recursion at positive radius (for radius R the coefficients
/// `c_1 .. c_{2R+1}` must be zero).
pub const PRIMITIVE_POLYS: &[(u32, u64)] = &[
    (2, 0x7),      // x^2+x+1
    (3, 0xb),      // x^3+x+1
    (4, 0x13),     // x^4+x+1
    (4, 0x19),     // x^4+x^3+1
    (5, 0x25),     // x^5+x^2+1
    (6, 0x43),     // x^6+x+1
    (6, 0x61),     // x^6+x^5+1
    (7, 0x83),     // x^7+x+1
    (7, 0x89),     // x^7+x^3+1
    (7, 0xc1),     // x^7+x^6+1
    (8, 0x11d),    // x^8+x^4+x^3+x^2+1
    (9, 0x211),    // x^9+x^4+1
    (9, 0x221),    // x^9+x^5+1
    (10, 0x409),   // x^10+x^3+1
    (10, 0x481),   // x^10+x^7+1
    (11, 0x805),   // x^11+x^2+1
    (11, 0xa01),   // x^11+x^9+1
    (12, 0x1053),  // x^12+x^6+x^4+x+1
    (13, 0x201b),  // x^13+x^4+x^3+x+1
    (14, 0x4443),  // x^14+x^10+x^6+x+1
    (15, 0x8003),  // x^15+x+1
    (15, 0xc001),  // x^15+x^14+1
    (16, 0x1100b), // x^16+x^12+x^3+x+1
];

/// First bundled primitive polynomial of the given degree.
pub fn bundled_primitive(degree: u32) -> Option<Gf2Polynomial> {
    PRIMITIVE_POLYS
        .iter()
        .find(|&&(d, _)| d == degree)
        .map(|&(_, mask)| Gf2Polynomial { mask })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force irreducibility: trial division by every polynomial of
    /// degree 1 ..= n/2.
    fn irreducible_brute(p: u64) -> bool {
        let n = 63 - p.leading_zeros();
        if n == 0 {
            return false;
        }
        for d in 1..=n / 2 {
            for low in 0..(1u64 << d) {
                let g = (1 << d) | low;
                if poly_rem(p, g) == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Brute-force order of x modulo p by iterated multiplication.
    fn order_of_x(p: u64) -> u64 {
        let n = 63 - p.leading_zeros();
        let mut t = poly_rem(0b10, p);
        let mut e = 1u64;
        while t != 1 {
            t = poly_mulmod(t, 0b10, p);
            e += 1;
            assert!(e <= 1 << n, "order exceeds field size");
        }
        e
    }

    #[test]
    fn rabin_matches_trial_division() {
        for mask in 2u64..(1 << 9) {
            let p = Gf2Polynomial::from_mask(mask).unwrap();
            assert_eq!(p.is_irreducible(), irreducible_brute(mask), "mask={mask:#b}");
        }
    }

    #[test]
    fn primitivity_examples() {
        let p = Gf2Polynomial::parse("x4+x+1").unwrap();
        assert!(p.is_primitive().unwrap());
        assert_eq!(order_of_x(p.mask()), 15);

        // irreducible of order 5, not primitive
        let p = Gf2Polynomial::parse("x4+x3+x2+x+1").unwrap();
        assert!(p.is_irreducible());
        assert!(!p.is_primitive().unwrap());
        assert_eq!(order_of_x(p.mask()), 5);

        // (x+1)^2
        let p = Gf2Polynomial::parse("x2+1").unwrap();
        assert!(!p.is_irreducible());
        assert!(!p.is_primitive().unwrap());

        assert!(matches!(
            Gf2Polynomial::from_mask(1).unwrap().is_primitive(),
            Err(Error::DegreeZero)
        ));
    }

    #[test]
    fn primitivity_agrees_with_order_oracle_up_to_degree_8() {
        for mask in 4u64..(1 << 9) {
            let p = Gf2Polynomial::from_mask(mask).unwrap();
            let n = p.degree();
            let expected = p.coeff(0) == 1
                && irreducible_brute(mask)
                && order_of_x(mask) == (1 << n) - 1;
            assert_eq!(p.is_primitive().unwrap(), expected, "mask={mask:#b}");
        }
    }

    #[test]
    fn bundled_table_is_primitive() {
        for &(degree, mask) in PRIMITIVE_POLYS {
            let p = Gf2Polynomial::from_mask(mask).unwrap();
            assert_eq!(p.degree(), degree, "{p}");
            assert!(p.is_primitive().unwrap(), "{p} is not primitive");
        }
    }

    #[test]
    fn parser_accepts_both_notations() {
        let a = Gf2Polynomial::parse("x9+x4+1").unwrap();
        let b = Gf2Polynomial::parse("0x211").unwrap();
        let c = Gf2Polynomial::parse("x^9 + x^4 + 1").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.to_string(), "x^9+x^4+1");
        assert!(Gf2Polynomial::parse("y3+1").is_err());
        assert!(Gf2Polynomial::parse("x4+x4+1").is_err());
    }

    #[test]
    fn division_of_x_n_plus_one() {
        let g = Gf2Polynomial::parse("x4+x+1").unwrap();
        assert!(g.divides_x_pow_plus_one(15));
        assert!(!g.divides_x_pow_plus_one(14));
        // (x^5+1)/(x+1)
        let rep = Gf2Polynomial::parse("x4+x3+x2+x+1").unwrap();
        assert!(rep.divides_x_pow_plus_one(5));
    }
}
