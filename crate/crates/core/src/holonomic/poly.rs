//! Dense univariate polynomials with big-integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `Σ coeffs[i]·v^i`, with no trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Coefficients in ascending degree.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `a·v + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64(&[b, a])
    }

    /// `v^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// `(v+s)(v+s-1)…(v+s-i+1)`; the empty product when `i = 0`.
    pub fn falling(shift: i64, i: usize) -> Self {
        (0..i as i64).fold(Self::one(), |acc, l| &acc * &Self::linear(1, shift - l))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, v: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * v + c)
    }

    pub fn eval_usize(&self, v: usize) -> BigInt {
        self.eval(&BigInt::from(v))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Greatest common divisor of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divided by its content, with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Remainder of `lc(d)^(deg self - deg d + 1)·self` modulo `d`.
    fn pseudo_rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("pseudo-division by zero");
        let lc = d.leading();
        let mut r = self.clone();
        while let Some(dr) = r.degree().filter(|&dr| dr >= dd) {
            let lr = r.leading();
            let shifted = Poly::new(
                std::iter::repeat_n(BigInt::zero(), dr - dd)
                    .chain(d.coeffs.iter().map(|c| c * &lr))
                    .collect(),
            );
            r = &r.scale(&lc) - &shifted;
        }
        r
    }

    /// Primitive gcd with positive leading coefficient; equal to the gcd in
    /// `Q[v]` up to a rational unit.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// The exact quotient `self / d` when it has integer coefficients.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let dd = d.degree()?;
        let lc = d.leading();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree().filter(|&dr| dr >= dd) {
            let (c, rem) = r.leading().div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            let shifted = Poly::new(
                std::iter::repeat_n(BigInt::zero(), dr - dd)
                    .chain(d.coeffs.iter().map(|x| x * &c))
                    .collect(),
            );
            q[dr - dd] = c;
            r = &r - &shifted;
        }
        r.is_zero().then(|| Poly::new(q))
    }

    /// Nonnegative integer roots, with multiplicity.
    pub fn nonnegative_integer_roots(&self) -> Vec<usize> {
        let mut roots = Vec::new();
        if self.is_zero() {
            return roots;
        }
        // Cauchy bound: every root satisfies |r| <= 1 + max |c_i / c_d|.
        let lc = self.leading().abs();
        let bound = self
            .coeffs
            .iter()
            .map(|c| c.abs().div_ceil(&lc))
            .max()
            .unwrap_or_default()
            + 1u32;
        let bound = usize::try_from(bound).unwrap_or(usize::MAX);
        let mut p = self.clone();
        let mut r = 0usize;
        while r <= bound && p.degree().is_some_and(|d| d > 0) {
            match p.eval_usize(r).is_zero() {
                true => {
                    roots.push(r);
                    p = p
                        .div_exact(&Poly::linear(1, -(r as i64)))
                        .expect("monic linear factor divides exactly");
                }
                false => r += 1,
            }
        }
        roots
    }

    /// Renders in descending degree, e.g. `2*n^2 - n + 3`.
    pub fn display<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 if unit => write!(f, "{}", self.var)?,
                1 => write!(f, "*{}", self.var)?,
                _ if unit => write!(f, "{}^{k}", self.var)?,
                _ => write!(f, "*{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Mul<i64> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: i64) -> Poly {
        self.scale(&BigInt::from(rhs))
    }
}

/// Product of the given polynomials.
pub fn product<'a>(factors: impl IntoIterator<Item = &'a Poly>) -> Poly {
    factors.into_iter().fold(Poly::one(), |acc, f| &acc * f)
}
