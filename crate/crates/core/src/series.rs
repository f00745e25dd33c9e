//! Truncated power series over exact rationals.
//!
//! A [`PowerSeries`] stores the coefficients of `t^0 … t^(N-1)`; everything
//! from `t^N` on is unknown. Every operation tracks how many coefficients it
//! can guarantee and fails instead of returning fewer than requested.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::holonomic::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// A series known to order `coeffs.len()`.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![BigRational::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn from_integers(terms: &[BigInt]) -> Self {
        Self::new(
            terms
                .iter()
                .map(|t| BigRational::from_integer(t.clone()))
                .collect(),
        )
    }

    pub fn from_i64(terms: &[i64]) -> Self {
        Self::new(
            terms
                .iter()
                .map(|&t| BigRational::from_integer(t.into()))
                .collect(),
        )
    }

    /// A polynomial in `t` (ascending coefficients) known to `order`.
    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::new(
            (0..order)
                .map(|k| BigRational::from_integer(p.coeff(k)))
                .collect(),
        )
    }

    /// Truncation order `N`: coefficients `0..N` are known.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero known coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Keeps the first `order` coefficients.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientTruncation {
                have: self.order(),
                need: order,
            });
        }
        Ok(Self::new(self.coeffs[..order].to_vec()))
    }

    /// All coefficients as integers, or `None` if one is not integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `f / t^k`, requiring the first `k` coefficients to vanish.
    pub fn divide_by_t_power(&self, k: usize) -> Result<Self> {
        if self.order() < k {
            return Err(Error::InsufficientTruncation {
                have: self.order(),
                need: k,
            });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::ClosedFormInconsistent(k));
        }
        Ok(Self::new(self.coeffs[k..].to_vec()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let n = self.order();
        let Some(c0) = self.coeffs.first().filter(|c| !c.is_zero()) else {
            return Err(Error::ConstantTerm {
                expected: "nonzero",
                found: self
                    .coeffs
                    .first()
                    .map_or("unknown".into(), |c| c.to_string()),
            });
        };
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let s: BigRational = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out.push(-s * &inv0);
        }
        Ok(Self::new(out))
    }

    /// `self(inner(t))`, needing `inner(0) = 0`.
    ///
    /// If `inner` has valuation `v`, `self` known to order `N` determines the
    /// result to order `N·v`; the output order is the smaller of that and the
    /// order of `inner`.
    pub fn compose(&self, inner: &PowerSeries) -> Result<Self> {
        let Some(c0) = inner.coeffs.first() else {
            return Ok(Self::zero(0));
        };
        if !c0.is_zero() {
            return Err(Error::ConstantTerm {
                expected: "zero",
                found: c0.to_string(),
            });
        }
        let order = match inner.valuation() {
            Some(v) => inner.order().min(self.order().saturating_mul(v)),
            None => inner
                .order()
                .min(if self.order() > 0 { usize::MAX } else { 0 }),
        };
        let inner = inner.truncate(order)?;
        // Horner over the outer coefficients that can still matter.
        let used = match inner.valuation() {
            Some(v) => self.order().min(order.div_ceil(v)),
            None => self.order().min(1),
        };
        let mut acc = Self::zero(order);
        for c in self.coeffs[..used].iter().rev() {
            acc = &acc * &inner;
            if order > 0 {
                acc.coeffs[0] += c;
            }
        }
        Ok(acc)
    }

    /// `self^exponent` for a rational exponent, needing `self(0) = 1`.
    ///
    /// Uses the power recurrence `n·g_n = Σ_{k=1..n} ((α+1)k − n)·f_k·g_{n−k}`,
    /// which follows from `f·g' = α·f'·g`.
    pub fn pow_rational(&self, exponent: &BigRational) -> Result<Self> {
        let n = self.order();
        match self.coeffs.first() {
            Some(c) if c.is_one() => {}
            other => {
                return Err(Error::ConstantTerm {
                    expected: "one",
                    found: other.map_or("unknown".into(), |c| c.to_string()),
                })
            }
        }
        let alpha1 = exponent + BigRational::one();
        let mut out = Vec::with_capacity(n);
        out.push(BigRational::one());
        for m in 1..n {
            let mr = BigRational::from_integer(m.into());
            let s: BigRational = (1..=m)
                .map(|k| {
                    let w = &alpha1 * BigRational::from_integer(k.into()) - &mr;
                    w * &self.coeffs[k] * &out[m - k]
                })
                .sum();
            out.push(s / mr);
        }
        Ok(Self::new(out))
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries::new(out)
    }
}

/// Generating-function form of the `k`-fold binomial transform:
/// `G(t) ↦ 1/(1−kt) · G(t/(1−kt))`, truncated to `n`.
pub fn bt_series(g: &PowerSeries, k: i64, n: usize) -> Result<PowerSeries> {
    if g.order() < n {
        return Err(Error::InsufficientTruncation {
            have: g.order(),
            need: n,
        });
    }
    let g = g.truncate(n)?;
    if k == 0 {
        return Ok(g);
    }
    let geometric = PowerSeries::from_poly(&Poly::linear(-k, 1), n).reciprocal()?;
    let inner = &geometric * &PowerSeries::from_poly(&Poly::monomial(1), n);
    Ok(&geometric * &g.compose(&inner)?)
}

fn is_nonpositive_integer(c: &BigRational) -> bool {
    c.is_integer() && c <= &BigRational::zero()
}

/// `₂F₁(a, b; c; z) = Σ (a)_m (b)_m / ((c)_m m!) z^m`, to `n` terms.
pub fn hypergeom_2f1(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    n: usize,
) -> Result<PowerSeries> {
    if is_nonpositive_integer(c) {
        return Err(Error::HypergeometricPole(c.to_string()));
    }
    let mut coeffs = Vec::with_capacity(n);
    let mut term = BigRational::one();
    for m in 0..n {
        coeffs.push(term.clone());
        let mr = BigRational::from_integer(m.into());
        term = term * (a + &mr) * (b + &mr) / ((c + &mr) * (&mr + BigRational::one()));
    }
    Ok(PowerSeries::new(coeffs))
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn poly(c: &[i64]) -> Poly {
    Poly::from_i64(c)
}

fn series(p: &Poly, order: usize) -> PowerSeries {
    PowerSeries::from_poly(p, order)
}

/// `Σ T3(n) t^n` from the hypergeometric closed form
/// `[R1·₂F₁(1/3,2/3;2;φ) + R2·₂F₁(2/3,4/3;3;φ) + 5P] / (30 t^5)`,
/// with `φ = 27(t+1)t²/(1−t)³`.
pub fn t3_closed_form_hypergeom(n: usize) -> Result<PowerSeries> {
    let m = n + 5;
    let inv_one_minus_t = series(&poly(&[1, -1]), m).reciprocal()?;
    let inv_one_minus_t3 = &(&inv_one_minus_t * &inv_one_minus_t) * &inv_one_minus_t;
    let phi = &series(&poly(&[0, 0, 27, 27]), m) * &inv_one_minus_t3;

    let t_plus_1_sq = poly(&[1, 2, 1]);
    // 1/(t−1) = −1/(1−t)
    let r1 = &(&series(&(&t_plus_1_sq * &poly(&[5, 60, 45, 214])), m) * &inv_one_minus_t)
        .scale(&rat(-1, 1));
    let r2 = &(&series(
        &(&(&t_plus_1_sq * &poly(&[0, 0, 6])) * &poly(&[5, 74, 101])),
        m,
    ) * &inv_one_minus_t)
        * &inv_one_minus_t;
    let p = series(&poly(&[1, 15, 46, 66, 28]), m);

    let outer = m.div_ceil(2);
    let f1 = hypergeom_2f1(&rat(1, 3), &rat(2, 3), &rat(2, 1), outer)?.compose(&phi)?;
    let f2 = hypergeom_2f1(&rat(2, 3), &rat(4, 3), &rat(3, 1), outer)?.compose(&phi)?;

    let bracket = &(&(r1 * &f1) + &(&r2 * &f2)) + &p.scale(&rat(5, 1));
    Ok(bracket.divide_by_t_power(5)?.scale(&rat(1, 30)))
}

/// Weierstrass invariant `g2 = (t−1)(25t³ + 21t² + 3t − 1)`.
pub fn weierstrass_g2() -> Poly {
    &poly(&[-1, 1]) * &poly(&[-1, 3, 21, 25])
}

/// `1728/J` as a series, where `J` is the j-invariant of the curve family.
pub fn inverse_j_series(order: usize) -> Result<PowerSeries> {
    let cubic = poly(&[-1, 3, 21, 25]);
    let numer = &(&(&Poly::monomial(6) * &poly(&[1, -7])) * &(&poly(&[1, 2]) * &poly(&[1, 2])))
        * &(&(&poly(&[1, 1]) * &poly(&[1, 1])) * &poly(&[1, 1]));
    let t_minus_1 = poly(&[-1, 1]);
    let denom = &(&(&t_minus_1 * &t_minus_1) * &t_minus_1) * &(&(&cubic * &cubic) * &cubic);
    let z = &series(&numer, order) * &series(&denom, order).reciprocal()?;
    Ok(z.scale(&rat(1728, 1)))
}

/// `Σ T3(n) t^n` from the elliptic closed form in terms of
/// `H(t) = g2^(−1/4)·₂F₁(1/12, 5/12; 1; 1728/J)` and `H'(t)`.
pub fn t3_closed_form_weierstrass(n: usize) -> Result<PowerSeries> {
    // The bracket is needed to order n + 5, which takes H to one more term.
    let m = n + 6;
    let z = inverse_j_series(m)?;
    let outer = m.div_ceil(6);
    let f = hypergeom_2f1(&rat(1, 12), &rat(5, 12), &rat(1, 1), outer)?.compose(&z)?;
    let g2_root = series(&weierstrass_g2(), m).pow_rational(&rat(-1, 4))?;
    let h = &g2_root * &f;
    let h_prime = h.derivative();
    let k = n + 5;
    let h = h.truncate(k)?;

    let a = &poly(&[59, 182, 155]) * &poly(&[1, 11]);
    let b = &poly(&[1, 231, 507, 341]) * &poly(&[1, 5]);
    let front = &(&poly(&[-1, 7]) * &poly(&[1, 2])) * &poly(&[1, 1]);
    let inner = &(&series(&a, k) * &h) + &(&series(&b, k) * &h_prime);
    let p = series(&poly(&[1, 15, 46, 66, 28]), k).scale(&rat(60, 1));
    let bracket = &p + &(&series(&front, k) * &inner);
    Ok(bracket.divide_by_t_power(5)?.scale(&rat(1, 360)))
}
