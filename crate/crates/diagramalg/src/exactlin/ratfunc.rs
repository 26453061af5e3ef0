//! Univariate polynomials over `ℚ` and the rational function field `ℚ(u)`.
//!
//! Rational functions are kept gcd-reduced with a monic denominator, so each
//! element has a unique representative and equality is structural.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::field::{Field, Rat};

/// A dense univariate polynomial in `u` with rational coefficients.
/// No trailing zero coefficients are stored; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(<Rat as Field>::one())
    }

    pub fn constant(c: Rat) -> Poly {
        Poly { coeffs: vec![c] }.trimmed()
    }

    /// The indeterminate `u`.
    pub fn u() -> Poly {
        Poly {
            coeffs: vec![<Rat as Field>::zero(), <Rat as Field>::one()],
        }
    }

    /// Builds from low-to-high coefficients.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Poly {
        Poly { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Poly {
        while self.coeffs.last().is_some_and(Field::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(<Rat as Field>::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(<Rat as Field>::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(<Rat as Field>::zero);
            coeffs.push(a + b);
        }
        Poly { coeffs }.trimmed()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![<Rat as Field>::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs }.trimmed()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
        .trimmed()
    }

    /// Euclidean division: `self = q·div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.coeffs.len();
        if self.coeffs.len() < dd {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = div.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![<Rat as Field>::zero(); rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (j, b) in div.coeffs.iter().enumerate() {
                let t = b * &c;
                rem[k + j] -= t;
            }
        }
        (
            Poly { coeffs: quot }.trimmed(),
            Poly { coeffs: rem }.trimmed(),
        )
    }

    /// Monic gcd via Euclid's algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = <Rat as Field>::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Rational roots via the rational root theorem, applied to the scaled
    /// integer form of the polynomial. Returns roots with multiplicity
    /// deflated, plus the remaining (root-free over `ℚ`) factor.
    pub fn rational_roots(&self) -> (Vec<Rat>, Poly) {
        let mut roots = Vec::new();
        let mut p = self.clone();
        if p.is_zero() {
            return (roots, p);
        }
        'outer: loop {
            if p.degree() == Some(0) {
                break;
            }
            // clear denominators to get integer coefficients
            let mut denom_lcm = BigInt::from(1);
            for c in &p.coeffs {
                let d = c.denom();
                denom_lcm = num_integer::lcm(denom_lcm, d.clone());
            }
            let ints: Vec<BigInt> = p
                .coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
                .collect();
            let a0 = ints.iter().find(|c| *c != &BigInt::from(0)).unwrap().clone();
            let lead = ints.last().unwrap().clone();
            // u = 0 root shows up as a zero constant term
            if p.coeffs[0].is_zero() {
                roots.push(<Rat as Field>::zero());
                p = Poly {
                    coeffs: p.coeffs[1..].to_vec(),
                }
                .trimmed();
                continue;
            }
            for num in divisors(&a0) {
                for den in divisors(&lead) {
                    for sign in [1i64, -1] {
                        let cand = BigRational::new(num.clone() * BigInt::from(sign), den.clone());
                        if p.eval(&cand).is_zero() {
                            roots.push(cand.clone());
                            let factor = Poly::from_coeffs(vec![-cand, <Rat as Field>::one()]);
                            let (q, r) = p.divrem(&factor);
                            debug_assert!(r.is_zero());
                            p = q;
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        roots.sort();
        (roots, p)
    }
}

fn divisors(v: &BigInt) -> Vec<BigInt> {
    let v = BigInt::from(v.magnitude().clone());
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    // trial division is fine at the sizes that occur here
    while &d * &d <= v {
        if (&v % &d) == BigInt::from(0) {
            out.push(d.clone());
            out.push(&v / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag == <Rat as Field>::one();
            match (k, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "u")?,
                (1, false) => write!(f, "{mag}*u")?,
                (_, true) => write!(f, "u^{k}")?,
                (_, false) => write!(f, "{mag}*u^{k}")?,
            }
        }
        Ok(())
    }
}

/// An element of `ℚ(u)`: a reduced fraction of polynomials with monic
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc { num, den }.reduced()
    }

    fn reduced(self) -> RatFunc {
        if self.num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = self.num.gcd(&self.den);
        let (num, r1) = self.num.divrem(&g);
        let (den, r2) = self.den.divrem(&g);
        debug_assert!(r1.is_zero() && r2.is_zero());
        let lead = den.leading_coeff();
        let inv = lead.recip();
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    /// The indeterminate `u`.
    pub fn u() -> RatFunc {
        RatFunc::from_poly(Poly::u())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// Evaluates at `u = x`; `None` when the denominator vanishes there.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    fn from_integer(v: i64) -> Self {
        RatFunc::from_rat(super::field::rat(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::{rat, rat_from};

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn poly_arithmetic() {
        let a = p(&[1, 2, 1]); // (u+1)^2
        let b = p(&[1, 1]); // u+1
        let (q, r) = a.divrem(&b);
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(a.gcd(&b), b.monic());
        assert_eq!(b.mul(&b), a);
        assert_eq!(a.eval(&rat(2)), rat(9));
    }

    #[test]
    fn gcd_is_monic() {
        let a = p(&[2, 2]); // 2u+2
        let b = p(&[4, 8, 4]); // 4(u+1)^2
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn ratfunc_reduction_and_field_laws() {
        let u = RatFunc::u();
        let one = RatFunc::one();
        // (u^2-1)/(u-1) reduces to u+1
        let f = RatFunc::new(p(&[-1, 0, 1]), p(&[-1, 1]));
        assert_eq!(f, u.add(&one));
        let g = f.mul(&f.inv());
        assert_eq!(g, one);
        assert!(f.sub(&f).is_zero());
        // denominators stay monic
        let h = RatFunc::new(p(&[1]), p(&[2, 4]));
        assert_eq!(h.denominator().leading_coeff(), rat(1));
        assert_eq!(h.eval(&rat_from(-1, 2)), None);
        assert_eq!(h.eval(&rat(0)), Some(rat_from(1, 2)));
    }

    #[test]
    fn rational_roots_deflation() {
        // 2(u-1)(u+3)(u^2+1)
        let f = p(&[-2, 2]).mul(&p(&[3, 1])).mul(&p(&[1, 0, 1]));
        let (roots, rest) = f.rational_roots();
        assert_eq!(roots, vec![rat(-3), rat(1)]);
        assert_eq!(rest.degree(), Some(2));
        let (roots, _) = p(&[0, 0, 1]).rational_roots();
        assert_eq!(roots, vec![rat(0), rat(0)]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "u^2 - 1");
        assert_eq!(
            RatFunc::new(p(&[1]), p(&[0, 1])).to_string(),
            "(1)/(u)"
        );
        assert_eq!(RatFunc::from_rat(rat(3)).to_string(), "3");
    }
}
