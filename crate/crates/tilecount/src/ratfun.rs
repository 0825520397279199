//! Exact integer polynomials and rational generating functions.
//!
//! Series prefixes are turned back into rational functions by detecting the
//! minimal linear recurrence they satisfy (a fraction-free Berlekamp-Massey
//! over the integers) and every reconstruction is re-verified by expanding
//! the result over the full input range. Polynomial gcds use the
//! subresultant pseudo-remainder sequence, so nothing in this module ever
//! leaves exact arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients ascending in `z`.
///
/// Trailing zero coefficients are stripped; the zero polynomial has an empty
/// coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("zero polynomial has no leading")
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, factor: &BigInt) -> Poly {
        if factor.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Substitution `z -> z^s`; fixtures transcribed in powers of `z^s`
    /// inflate through this.
    pub fn inflate(&self, s: usize) -> Poly {
        assert!(s >= 1);
        if self.is_zero() || s == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * s + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * s] = c.clone();
        }
        Poly { coeffs }
    }

    /// Gcd of all coefficients, nonnegative; zero only for the zero poly.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// The primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut content = self.content();
        if self.leading().is_negative() {
            content = -content;
        }
        self.div_exact_scalar(&content)
            .expect("content divides every coefficient")
    }

    pub fn div_exact_scalar(&self, d: &BigInt) -> Option<Poly> {
        assert!(!d.is_zero());
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Poly { coeffs: out })
    }

    /// Exact polynomial division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero());
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (dn, dd) = (self.degree()?, d.degree()?);
        if dn < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for step in (0..=dn - dd).rev() {
            let lead = rem[step + dd].clone();
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(d.leading());
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[step + i] -= &q * c;
            }
            quot[step] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::new(quot))
    }

    /// Decimal-string coefficient list for JSON output.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a  mod  b`.
fn pseudo_rem(a: &Poly, b: &Poly) -> Poly {
    let db = b.degree().expect("pseudo_rem by zero");
    let da = a.degree().expect("pseudo_rem of zero");
    debug_assert!(da >= db);
    let lb = b.leading().clone();
    let mut scalings = (da - db + 1) as i64;
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let monomial = Poly {
            coeffs: {
                let mut c = vec![BigInt::zero(); dr - db];
                c.push(r.leading().clone());
                c
            },
        };
        r = r.scale(&lb).sub(&b.mul(&monomial));
        scalings -= 1;
    }
    for _ in 0..scalings {
        r = r.scale(&lb);
    }
    r
}

/// Full integer gcd (contents included) with positive leading coefficient,
/// via the subresultant pseudo-remainder sequence.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.primitive_part().scale(&b.content().abs());
    }
    if b.is_zero() {
        return a.primitive_part().scale(&a.content().abs());
    }
    let content = a.content().gcd(&b.content());
    let mut p = a.primitive_part();
    let mut q = b.primitive_part();
    if p.degree() < q.degree() {
        std::mem::swap(&mut p, &mut q);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = p.degree().unwrap() - q.degree().unwrap();
        let rem = pseudo_rem(&p, &q);
        if rem.is_zero() {
            break;
        }
        if rem.degree() == Some(0) {
            q = Poly::one();
            break;
        }
        p = q;
        let divisor = &g * h.pow(delta as u32);
        q = rem
            .div_exact_scalar(&divisor)
            .expect("subresultant divisions are exact");
        g = p.leading().clone();
        h = if delta == 0 {
            h
        } else {
            let mut num = g.pow(delta as u32);
            if delta > 1 {
                let den = h.pow(delta as u32 - 1);
                let (quot, rem) = num.div_rem(&den);
                debug_assert!(rem.is_zero());
                num = quot;
            }
            num
        };
    }
    q.primitive_part().scale(&content)
}

/// A rational generating function `num / den` in lowest terms with
/// `den(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Reduces `num / den` to canonical form. Fails when the denominator is
    /// zero or its constant term cannot be normalized to 1 over the
    /// integers.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = poly_gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        let c0 = den.coeff(0);
        if (-&c0).is_one() {
            num = num.neg();
            den = den.neg();
        } else if !c0.is_one() {
            return Err(Error::NonUnitDenominator(c0.to_string()));
        }
        Ok(RatFun { num, den })
    }

    pub fn one() -> Self {
        RatFun {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// First `len` Taylor coefficients, exactly.
    pub fn expand(&self, len: usize) -> Vec<BigInt> {
        let order = self.den.degree().unwrap_or(0);
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = self.num.coeff(n);
            for i in 1..=order.min(n) {
                acc -= self.den.coeff(i) * &out[n - i];
            }
            out.push(acc);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "num": self.num.to_json(),
            "den": self.den.to_json(),
        })
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// First `len` Taylor coefficients of `r`.
pub fn gf_expand(r: &RatFun, len: usize) -> Vec<BigInt> {
    r.expand(len)
}

/// Equality as rational functions (cross-multiplication), so forms printed
/// with removable common factors compare equal to reduced ones.
pub fn gf_equal(a: &RatFun, b: &RatFun) -> bool {
    a.num.mul(&b.den) == b.num.mul(&a.den)
}

/// The generating function of the irreducible counts: `(R - 1) / R`.
pub fn irreducible_gf(r: &RatFun) -> Result<RatFun> {
    if !r.num.coeff(0).is_one() || !r.den.coeff(0).is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    RatFun::new(r.num.sub(&r.den), r.num.clone())
}

/// Fraction-free Berlekamp-Massey: the minimal-length linear recurrence
/// generating `terms`, returned as a primitive integer connection polynomial
/// `c_0 + c_1 z + ...` with `c_0 > 0` (`c_0 * t_n = -(c_1 t_{n-1} + ...)`
/// for every index where the register is full). The returned length is the
/// linear complexity; the polynomial degree never exceeds it.
fn berlekamp_massey(terms: &[BigInt]) -> (usize, Poly) {
    let mut current = Poly::one();
    let mut previous = Poly::one();
    let mut length = 0usize;
    let mut shift = 1usize;
    let mut prev_discrepancy = BigInt::one();

    for n in 0..terms.len() {
        let mut discrepancy = BigInt::zero();
        for (i, c) in current.coeffs().iter().enumerate() {
            if i > n {
                break;
            }
            discrepancy += c * &terms[n - i];
        }
        if discrepancy.is_zero() {
            shift += 1;
            continue;
        }
        let update = current
            .scale(&prev_discrepancy)
            .sub(&previous.shift(shift).scale(&discrepancy));
        if 2 * length <= n {
            previous = current;
            prev_discrepancy = discrepancy;
            length = n + 1 - length;
            shift = 1;
        } else {
            shift += 1;
        }
        current = update.primitive_part();
        // primitive_part fixes the sign of the leading coefficient; keep the
        // constant term positive instead so successive updates stay aligned
        if current.coeff(0).is_negative() {
            current = current.neg();
        }
    }
    debug_assert!(!current.coeff(0).is_zero());
    (length, current)
}

/// Minimal linear recurrence of order at most `max_order` fitting every
/// supplied term, as the denominator polynomial `1 - c_1 z - ...`; `None`
/// when no such recurrence exists.
///
/// Requires at least `2 * max_order + 2` terms, enough for the detector to
/// lock onto any recurrence within the bound with margin to spare.
pub fn find_recurrence(terms: &[BigInt], max_order: usize) -> Result<Option<Poly>> {
    let needed = 2 * max_order + 2;
    if terms.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            got: terms.len(),
        });
    }
    let (length, connection) = berlekamp_massey(terms);
    if length > max_order {
        return Ok(None);
    }
    Ok(Some(connection))
}

/// Reconstructs the rational generating function of a series prefix.
///
/// The denominator is the minimal recurrence from [`find_recurrence`], the
/// numerator is `T * den` (whose tail must vanish), and the result is
/// re-expanded over the whole input range before it is returned.
pub fn series_to_gf(terms: &[BigInt], order_bound: usize) -> Result<RatFun> {
    let den = find_recurrence(terms, order_bound)?
        .ok_or(Error::NoRationalFit {
            max_order: order_bound,
        })?;
    let order = den.degree().unwrap_or(0);
    // numerator = truncation of T * den; everything past the recurrence
    // lock-on point must cancel
    let mut num_coeffs = Vec::with_capacity(terms.len());
    for j in 0..terms.len() {
        let mut acc = BigInt::zero();
        for i in 0..=order.min(j) {
            acc += den.coeff(i) * &terms[j - i];
        }
        num_coeffs.push(acc);
    }
    let split = order_bound.min(terms.len());
    if num_coeffs[split..].iter().any(|c| !c.is_zero()) {
        return Err(Error::NoRationalFit {
            max_order: order_bound,
        });
    }
    num_coeffs.truncate(split);
    let gf = RatFun::new(Poly::new(num_coeffs), den)?;
    if gf.expand(terms.len()) != terms {
        return Err(Error::NoRationalFit {
            max_order: order_bound,
        });
    }
    Ok(gf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::from_i64(coeffs)
    }

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn poly_normalization() {
        assert_eq!(poly(&[1, 0, 0]), poly(&[1]));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[]).degree(), None);
        assert_eq!(poly(&[0, 0, 5]).degree(), Some(2));
    }

    #[test]
    fn poly_arithmetic() {
        let a = poly(&[1, 2]);
        let b = poly(&[3, -2]);
        assert_eq!(a.add(&b), poly(&[4]));
        assert_eq!(a.mul(&b), poly(&[3, 4, -4]));
        assert_eq!(a.shift(2), poly(&[0, 0, 1, 2]));
        assert_eq!(poly(&[1, -1]).inflate(5), poly(&[1, 0, 0, 0, 0, -1]));
    }

    #[test]
    fn poly_display() {
        assert_eq!(poly(&[1, 0, 0, -4, 0, 0, 1]).to_string(), "1 - 4*z^3 + z^6");
        assert_eq!(poly(&[0, 1]).to_string(), "z");
        assert_eq!(poly(&[-2, -3]).to_string(), "-2 - 3*z");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let product = poly(&[1, 2, 1]);
        assert_eq!(product.div_exact(&poly(&[1, 1])), Some(poly(&[1, 1])));
        assert_eq!(product.div_exact(&poly(&[1, -1])), None);
        assert_eq!(poly(&[2, 4]).div_exact_scalar(&BigInt::from(2)), Some(poly(&[1, 2])));
        assert_eq!(poly(&[2, 3]).div_exact_scalar(&BigInt::from(2)), None);
    }

    #[test]
    fn gcd_basics() {
        // (1 - z^2) and (1 - z)^2 share 1 - z, up to sign
        let g = poly_gcd(&poly(&[1, 0, -1]), &poly(&[1, -2, 1]));
        assert_eq!(g, poly(&[-1, 1]));
        // contents participate
        let g = poly_gcd(&poly(&[2, 2]), &poly(&[4]));
        assert_eq!(g, poly(&[2]));
        // coprime inputs
        let g = poly_gcd(&poly(&[1, 0, 0, -4, 0, 0, 1]), &poly(&[1, 0, 0, -1]));
        assert_eq!(g, poly(&[1]));
        // zero operands
        assert_eq!(poly_gcd(&Poly::zero(), &poly(&[0, -3])), poly(&[0, 3]));
    }

    #[test]
    fn gcd_of_scaled_pairs_divides() {
        let factor = poly(&[1, 0, 0, -1]);
        let a = poly(&[1, 5]).mul(&factor);
        let b = poly(&[-2, 0, 7]).mul(&factor);
        let g = poly_gcd(&a, &b);
        assert!(g.div_exact(&factor).is_some());
        assert!(a.div_exact(&g).is_some());
        assert!(b.div_exact(&g).is_some());
    }

    #[test]
    fn ratfun_reduction() {
        // (1 + z) / (1 - z^2) reduces to 1 / (1 - z)
        let r = RatFun::new(poly(&[1, 1]), poly(&[1, 0, -1])).unwrap();
        assert_eq!(r.num(), &poly(&[1]));
        assert_eq!(r.den(), &poly(&[1, -1]));
        // negative constant terms are normalized away
        let r = RatFun::new(poly(&[-1]), poly(&[-1, 1])).unwrap();
        assert_eq!(r.den().coeff(0), BigInt::one());
        // non-unit constant terms cannot be represented
        assert!(matches!(
            RatFun::new(poly(&[1]), poly(&[2, 1])),
            Err(Error::NonUnitDenominator(_))
        ));
        assert!(matches!(
            RatFun::new(poly(&[1]), Poly::zero()),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn gf_equality() {
        let reduced = RatFun::new(poly(&[1, 0, 0, -1]), poly(&[1, 0, 0, -4, 0, 0, 1])).unwrap();
        // the same function entered with its numerator factored differently
        let unreduced = RatFun::new(
            poly(&[1, -1]).neg().neg().mul(&poly(&[1, 1, 1])),
            poly(&[1, 0, 0, -4, 0, 0, 1]),
        )
        .unwrap();
        assert!(gf_equal(&reduced, &unreduced));

        let a = RatFun::new(poly(&[1]), poly(&[1, -1])).unwrap();
        let b = RatFun::new(poly(&[1, 1]), poly(&[1, 0, -1])).unwrap();
        assert!(gf_equal(&a, &b));
        let c = RatFun::new(poly(&[1]), poly(&[1, -2])).unwrap();
        assert!(!gf_equal(&a, &c));
    }

    #[test]
    fn expansion() {
        // 1 / (1 - 2 z^5)
        let r = RatFun::new(poly(&[1]), poly(&[1, 0, 0, 0, 0, -2])).unwrap();
        let coeffs = gf_expand(&r, 26);
        for (n, c) in coeffs.iter().enumerate() {
            if n % 5 == 0 {
                assert_eq!(*c, BigInt::from(1i64 << (n / 5)));
            } else {
                assert!(c.is_zero());
            }
        }
        assert_eq!(gf_expand(&RatFun::one(), 5), ints(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn berlekamp_massey_classics() {
        // Fibonacci
        let (len, c) = berlekamp_massey(&ints(&[1, 1, 2, 3, 5, 8, 13, 21, 34, 55]));
        assert_eq!((len, c), (2, poly(&[1, -1, -1])));
        // geometric
        let (len, c) = berlekamp_massey(&ints(&[1, 2, 4, 8, 16, 32]));
        assert_eq!((len, c), (1, poly(&[1, -2])));
        // all zero
        let (len, c) = berlekamp_massey(&ints(&[0, 0, 0, 0]));
        assert_eq!((len, c), (0, poly(&[1])));
        // 1, 0, 0, ... : one initial term, then everything vanishes
        let (len, c) = berlekamp_massey(&ints(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(c, poly(&[1]));
        assert_eq!(len, 1);
        // delayed onset: 1,0,0,1,1,1,... has complexity 4 but degree-1 connection
        let (len, c) = berlekamp_massey(&ints(&[1, 0, 0, 1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(len, 4);
        assert_eq!(c, poly(&[1, -1]));
        // sparse recurrence from tilings: 1,0,0,3,0,0,11,... satisfies 1 - 4z^3 + z^6
        let seq = ints(&[1, 0, 0, 3, 0, 0, 11, 0, 0, 41, 0, 0, 153, 0, 0, 571]);
        let (len, c) = berlekamp_massey(&seq);
        assert_eq!(len, 6);
        assert_eq!(c, poly(&[1, 0, 0, -4, 0, 0, 1]));
    }

    #[test]
    fn recurrence_detection() {
        let fib = ints(&[1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987]);
        let den = find_recurrence(&fib, 7).unwrap().unwrap();
        assert_eq!(den, poly(&[1, -1, -1]));

        // Jacobsthal-like: 1/(1 - z - 2z^2)
        let jac = ints(&[1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683, 1365, 2731, 5461, 10923, 21845, 43691, 87381, 174763, 349525]);
        let den = find_recurrence(&jac, 9).unwrap().unwrap();
        assert_eq!(den, poly(&[1, -1, -2]));

        let constant = ints(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let den = find_recurrence(&constant, 4).unwrap().unwrap();
        assert_eq!(den, poly(&[1]));

        assert!(matches!(
            find_recurrence(&fib[..5], 4),
            Err(Error::InsufficientTerms { needed: 10, got: 5 })
        ));

        // factorials admit no short recurrence
        let fact = ints(&[1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880]);
        assert_eq!(find_recurrence(&fact, 3).unwrap(), None);
    }

    #[test]
    fn reconstruction_roundtrip() {
        let fib = ints(&[1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987]);
        let gf = series_to_gf(&fib, 7).unwrap();
        assert_eq!(gf.num(), &poly(&[1]));
        assert_eq!(gf.den(), &poly(&[1, -1, -1]));

        // improper function: numerator degree above denominator degree
        let delayed = ints(&[1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        let gf = series_to_gf(&delayed, 5).unwrap();
        assert_eq!(gf.den(), &poly(&[1, -1]));
        assert_eq!(gf.num(), &poly(&[1, -1, 0, 1]));
        assert_eq!(gf.expand(12), delayed);

        let fact = ints(&[1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880]);
        assert!(matches!(
            series_to_gf(&fact, 4),
            Err(Error::NoRationalFit { max_order: 4 })
        ));
    }

    #[test]
    fn irreducible_forms() {
        // (1 - z^3)/(1 - 4z^3 + z^6)  ->  z^3 (3 - z^3) / (1 - z^3)
        let r = RatFun::new(poly(&[1, 0, 0, -1]), poly(&[1, 0, 0, -4, 0, 0, 1])).unwrap();
        let hat = irreducible_gf(&r).unwrap();
        let expected = RatFun::new(
            poly(&[0, 0, 0, 3, 0, 0, -1]),
            poly(&[1, 0, 0, -1]),
        )
        .unwrap();
        assert!(gf_equal(&hat, &expected));

        // (1 - z^5)^3 / (1 - 6z^5 + 6z^10 - 4z^15 + z^20)
        let one_minus = poly(&[1, 0, 0, 0, 0, -1]);
        let num = one_minus.mul(&one_minus).mul(&one_minus);
        let den = Poly::from_i64(&[1, -6, 6, -4, 1]).inflate(5);
        let r = RatFun::new(num.clone(), den).unwrap();
        let hat = irreducible_gf(&r).unwrap();
        let expected = RatFun::new(
            Poly::from_i64(&[0, 3, -3, 3, -1]).inflate(5),
            num,
        )
        .unwrap();
        assert!(gf_equal(&hat, &expected));

        // R = 1 -> 0
        let hat = irreducible_gf(&RatFun::one()).unwrap();
        assert!(hat.num().is_zero());

        // and 1/(1 - hat) comes back to R
        let r = RatFun::new(poly(&[1, 0, 0, -1]), poly(&[1, 0, 0, -4, 0, 0, 1])).unwrap();
        let hat = irreducible_gf(&r).unwrap();
        let back = RatFun::new(hat.den().clone(), hat.den().sub(hat.num())).unwrap();
        assert!(gf_equal(&back, &r));

        let off = RatFun::new(poly(&[2]), poly(&[1, -1])).unwrap();
        assert!(matches!(irreducible_gf(&off), Err(Error::ConstantTermNotOne)));
    }
}
