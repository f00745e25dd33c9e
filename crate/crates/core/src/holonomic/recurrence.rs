//! Linear recurrences with polynomial coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::poly::{product, Poly};
use crate::error::{Error, Result};
use crate::laurent::{ct_sequence, sl3_kernel};
use crate::sequence::{compare_prefix, Sequence};

/// `Σ_{i=0..=r} c_i(n)·a(n+i) + g(n) = 0` for `n ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PRecurrence {
    coeffs: Vec<Poly>,
    inhomogeneous: Poly,
}

impl PRecurrence {
    /// # Panics
    ///
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<Poly>, inhomogeneous: Poly) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a recurrence needs at least one coefficient"
        );
        Self {
            coeffs,
            inhomogeneous,
        }
    }

    pub fn homogeneous(coeffs: Vec<Poly>) -> Self {
        Self::new(coeffs, Poly::zero())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Poly {
        &self.coeffs[i]
    }

    pub fn inhomogeneous(&self) -> &Poly {
        &self.inhomogeneous
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inhomogeneous.is_zero()
    }

    fn residual(&self, terms: &[BigInt], n: usize) -> BigInt {
        let nb = BigInt::from(n);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.eval(&nb) * &terms[n + i])
            .sum::<BigInt>()
            + self.inhomogeneous.eval(&nb)
    }

    /// Extends `initial` to the terms `0..=n_max` by solving for the top term.
    pub fn generate(&self, initial: &[BigInt], n_max: usize) -> Result<Sequence> {
        let r = self.order();
        if initial.len() != r {
            return Err(Error::InitialTermCount {
                order: r,
                given: initial.len(),
            });
        }
        let mut terms = initial.to_vec();
        for n in 0..(n_max + 1).saturating_sub(r) {
            let nb = BigInt::from(n);
            let lead = self.coeffs[r].eval(&nb);
            if lead.is_zero() {
                return Err(Error::LeadingCoefficientVanishes { n });
            }
            let rest: BigInt = self.coeffs[..r]
                .iter()
                .enumerate()
                .map(|(i, c)| c.eval(&nb) * &terms[n + i])
                .sum::<BigInt>()
                + self.inhomogeneous.eval(&nb);
            let (q, rem) = (-rest).div_rem(&lead);
            if !rem.is_zero() {
                return Err(Error::InexactDivision { index: n + r });
            }
            terms.push(q);
        }
        terms.truncate(n_max + 1);
        Ok(Sequence::new("rec", terms))
    }

    /// Whether every relation fitting inside `s` holds.
    pub fn verify(&self, s: &Sequence) -> Result<bool> {
        let r = self.order();
        if s.len() <= r {
            return Err(Error::SequenceTooShort {
                len: s.len(),
                order: r,
            });
        }
        Ok((0..s.len() - r).all(|n| self.residual(s.terms(), n).is_zero()))
    }

    /// Index of the first relation that fails, if any.
    pub fn first_violation(&self, s: &Sequence) -> Option<usize> {
        let r = self.order();
        (0..s.len().saturating_sub(r)).find(|&n| !self.residual(s.terms(), n).is_zero())
    }

    /// Divides out the integer content and makes the leading polynomial's
    /// leading coefficient positive.
    pub fn normalize_content(&self) -> PRecurrence {
        let g = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.inhomogeneous))
            .fold(BigInt::zero(), |g, c| g.gcd(&c.content()));
        if g.is_zero() {
            return self.clone();
        }
        let lead = self
            .coeffs
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .map(Poly::leading)
            .unwrap_or_default();
        let g = if lead.is_negative() { -g } else { g };
        let div = |p: &Poly| Poly::new(p.coeffs().iter().map(|c| c / &g).collect());
        PRecurrence::new(
            self.coeffs.iter().map(div).collect(),
            div(&self.inhomogeneous),
        )
    }

    /// Removes the common polynomial factor of all coefficients that has no
    /// root at a nonnegative integer (so the relation set for `n ≥ 0` is
    /// unchanged), then normalizes the content.
    pub fn reduce(&self) -> PRecurrence {
        let common = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.inhomogeneous))
            .fold(Poly::zero(), |g, c| {
                if g.is_zero() {
                    c.primitive()
                } else {
                    g.gcd(c)
                }
            });
        let mut factor = common;
        for root in factor.nonnegative_integer_roots() {
            factor = factor
                .div_exact(&Poly::linear(1, -(root as i64)))
                .expect("root divides exactly");
        }
        if factor.degree().unwrap_or(0) == 0 {
            return self.normalize_content();
        }
        let div = |p: &Poly| {
            p.div_exact(&factor)
                .expect("common factor divides every coefficient")
        };
        PRecurrence::new(
            self.coeffs.iter().map(div).collect(),
            div(&self.inhomogeneous),
        )
        .normalize_content()
    }

    /// Equal after content normalization, i.e. up to a nonzero integer factor.
    pub fn equivalent_up_to_unit(&self, other: &PRecurrence) -> bool {
        self.normalize_content() == other.normalize_content()
    }
}

impl fmt::Display for PRecurrence {
    /// `(c_0)*a(n) + (c_1)*a(n+1) + … = 0`, each `c_i` in descending powers of `n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let shift = match i {
                0 => "n".to_owned(),
                _ => format!("n+{i}"),
            };
            write!(f, "({})*a({shift})", c.display("n"))?;
        }
        if !self.inhomogeneous.is_zero() {
            write!(f, " + ({})", self.inhomogeneous.display("n"))?;
        }
        f.write_str(" = 0")
    }
}

fn lin(a: i64, b: i64) -> Poly {
    Poly::linear(a, b)
}

fn quad(a: i64, b: i64, c: i64) -> Poly {
    Poly::from_i64(&[c, b, a])
}

/// Order-3 recurrence for the G2 excursion counts A059710.
pub fn t3_recurrence() -> PRecurrence {
    PRecurrence::homogeneous(vec![
        &product([&lin(1, 1), &lin(1, 2)]) * 14,
        product([&lin(1, 2), &lin(19, 75)]),
        &product([&lin(1, 2), &lin(2, 11)]) * 2,
        &product([&lin(1, 8), &lin(1, 9)]) * -1,
    ])
}

/// Order-2 recurrence for the hesitating-tableau counts A108307.
pub fn e3_recurrence() -> PRecurrence {
    PRecurrence::homogeneous(vec![
        &product([&lin(1, 3), &lin(1, 1)]) * 8,
        quad(7, 53, 88),
        &product([&lin(1, 8), &lin(1, 7)]) * -1,
    ])
}

/// Order-2 recurrence for A216947.
pub fn c2_recurrence() -> PRecurrence {
    PRecurrence::homogeneous(vec![
        &product([&lin(1, 1), &lin(1, 4)]) * 9,
        &quad(5, 36, 61) * -2,
        product([&lin(1, 5), &lin(1, 6)]),
    ])
}

/// The order-4 recurrence shared by the quadrant family, with parameter `k`
/// substituted.
pub fn uniform_recurrence(k: i64) -> Result<PRecurrence> {
    if !(0..=3).contains(&k) {
        return Err(Error::ParameterOutOfRange(k));
    }
    let c0 = &product([&lin(1, 1), &lin(1, 2)]) * ((k - 9) * (k - 1) * k * k);
    let c1 = &product([
        &lin(1, 2),
        &lin(2 * k * k - 15 * k + 9, 8 * k * k - 56 * k + 36),
    ]) * (2 * k);
    let c2 = quad(
        6 * k * k - 30 * k + 9,
        54 * k * k - 254 * k + 81,
        114 * k * k - 510 * k + 162,
    );
    let c3 = &quad(2 * k - 5, 24 * k - 56, 70 * k - 153) * 2;
    let c4 = product([&lin(1, 7), &lin(1, 8)]);
    Ok(PRecurrence::homogeneous(vec![c0, c1, c2, c3, c4]))
}

/// Which SL(3) kernel parameter a uniform-recurrence parameter reproduces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniformMatch {
    pub parameter: i64,
    pub kernel: Option<u32>,
}

/// Resolves, for each uniform parameter `k ∈ 0..=3`, the kernel parameter `j`
/// such that the recurrence seeded with the first four constant terms of
/// `sl3_kernel(j)` regenerates its first `n_terms` constant terms. A
/// parameter matching zero or several kernels gets `kernel: None`.
pub fn resolve_uniform_parameters(n_terms: usize) -> Vec<UniformMatch> {
    let n_terms = n_terms.max(5);
    let rows: Vec<Sequence> = (0..4u32)
        .map(|j| {
            let (k, w) = sl3_kernel(j);
            ct_sequence(&k, &w, n_terms - 1)
        })
        .collect();
    (0..=3)
        .map(|k| {
            let rec = uniform_recurrence(k).expect("parameter in range");
            let hits: Vec<u32> = (0..4u32)
                .filter(|&j| {
                    let row = &rows[j as usize];
                    rec.generate(&row.terms()[..4], n_terms - 1)
                        .is_ok_and(|g| compare_prefix(&g, row) == n_terms)
                })
                .collect();
            UniformMatch {
                parameter: k,
                kernel: match hits.as_slice() {
                    [j] => Some(*j),
                    _ => None,
                },
            }
        })
        .collect()
}
