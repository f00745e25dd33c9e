//! Linear differential operators `Σ p_i(t)·∂^i` with integer polynomial
//! coefficients, their (Weyl algebra) product, action on series, and the
//! conversion to a recurrence on coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{product, Poly};
use super::recurrence::PRecurrence;
use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// `Σ_{i=0..=d} coeffs[i](t)·∂^i` with `coeffs[d] ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOperator {
    coeffs: Vec<Poly>,
}

impl DiffOperator {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    /// Multiplication by `p(t)`.
    pub fn multiplication(p: Poly) -> Self {
        Self::new(vec![p])
    }

    pub fn identity() -> Self {
        Self::multiplication(Poly::one())
    }

    /// `∂ = d/dt`.
    pub fn derivation() -> Self {
        Self::new(vec![Poly::zero(), Poly::one()])
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order `d`; zero for the zero operator.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

impl fmt::Display for DiffOperator {
    /// Descending powers of `D = ∂`, coefficients in descending powers of `t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, p) in self.coeffs.iter().enumerate().rev() {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({})", p.display("t"))?,
                1 => write!(f, "({})*D", p.display("t"))?,
                _ => write!(f, "({})*D^{i}", p.display("t"))?,
            }
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Product `a·b`, using `∂^i·q = Σ_l C(i,l)·q^(l)·∂^(i−l)`.
pub fn weyl_mul(a: &DiffOperator, b: &DiffOperator) -> DiffOperator {
    if a.is_zero() || b.is_zero() {
        return DiffOperator::zero();
    }
    let mut out = vec![Poly::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (j, q) in b.coeffs.iter().enumerate() {
        let mut derivs = vec![q.clone()];
        for (i, p) in a.coeffs.iter().enumerate() {
            while derivs.len() <= i {
                let next = derivs.last().expect("nonempty").derivative();
                derivs.push(next);
            }
            for (l, dq) in derivs.iter().enumerate().take(i + 1) {
                if dq.is_zero() {
                    continue;
                }
                let term = (p * dq).scale(&binomial(i, l));
                out[i - l + j] = &out[i - l + j] + &term;
            }
        }
    }
    DiffOperator::new(out)
}

/// `Σ p_i(t)·f^(i)(t)`, truncated to `n_keep` coefficients.
pub fn apply_operator(op: &DiffOperator, f: &PowerSeries, n_keep: usize) -> Result<PowerSeries> {
    let need = n_keep + op.order();
    if f.order() < need {
        return Err(Error::InsufficientTruncation {
            have: f.order(),
            need,
        });
    }
    let mut acc = PowerSeries::zero(n_keep);
    let mut deriv = f.clone();
    for (i, p) in op.coeffs.iter().enumerate() {
        if i > 0 {
            deriv = deriv.derivative();
        }
        if p.is_zero() {
            continue;
        }
        let term = &PowerSeries::from_poly(p, n_keep) * &deriv.truncate(n_keep)?;
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Recurrence satisfied by the coefficients of every power-series solution.
///
/// The term `c·t^j·∂^i` sends `a_{m+i−j}` to the coefficient of `t^m` with
/// weight `(m+i−j)^(falling i)`. With `s = i − j` and `s_lo = min(0, min s)`
/// the relation is written in `n = m + s_lo`, so that for `n ≥ 0` it is exactly
/// the vanishing of the coefficient of `t^(n − s_lo)`. Integer content is
/// cleared; no polynomial factor is removed.
pub fn diff_to_rec(op: &DiffOperator) -> PRecurrence {
    let mut shifts = Vec::new();
    for (i, p) in op.coeffs.iter().enumerate() {
        for (j, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                shifts.push((i, j, i as i64 - j as i64, c.clone()));
            }
        }
    }
    if shifts.is_empty() {
        return PRecurrence::homogeneous(vec![Poly::zero()]);
    }
    let s_lo = shifts
        .iter()
        .map(|&(_, _, s, _)| s)
        .min()
        .unwrap_or(0)
        .min(0);
    let s_hi = shifts
        .iter()
        .map(|&(_, _, s, _)| s)
        .max()
        .unwrap_or(0)
        .max(s_lo);
    let mut coeffs = vec![Poly::zero(); (s_hi - s_lo) as usize + 1];
    for (i, _j, s, c) in shifts {
        // a-index m + s = n − s_lo + s
        let weight = Poly::falling(s - s_lo, i).scale(&c);
        let slot = (s - s_lo) as usize;
        coeffs[slot] = &coeffs[slot] + &weight;
    }
    PRecurrence::homogeneous(coeffs).normalize_content()
}

fn p(c: &[i64]) -> Poly {
    Poly::from_i64(c)
}

fn t_pow(k: usize) -> Poly {
    Poly::monomial(k)
}

/// Order-6 annihilator of the G2 excursion generating function.
pub fn l6() -> DiffOperator {
    DiffOperator::new(vec![
        p(&[0, 8064, 25200, 20160]),
        &p(&[-35, 16, 1646, 4540, 3360]) * 36,
        &(&t_pow(1) * &p(&[-77, 54, 2442, 6100, 4200])) * 36,
        &(&t_pow(2) * &p(&[-273, 268, 7556, 17400, 11200])) * 6,
        &(&t_pow(3) * &p(&[-61, 79, 1616, 3475, 2100])) * 6,
        &product([&t_pow(4), &p(&[1, 2]), &p(&[-11, 40, 211, 168])]) * 3,
        product([
            &t_pow(5),
            &p(&[1, 1]),
            &p(&[-1, 7]),
            &p(&[1, 2]),
            &p(&[1, 2]),
        ]),
    ])
}

/// Left factor of `L6 = Q·L3`.
pub fn q_operator() -> DiffOperator {
    DiffOperator::new(vec![
        p(&[30, 48]),
        &(&t_pow(1) * &p(&[7, 12])) * 6,
        &t_pow(2) * &p(&[13, 24]),
        &t_pow(3) * &p(&[1, 2]),
    ])
}

/// Order-3 annihilator of the G2 excursion generating function.
pub fn l3() -> DiffOperator {
    DiffOperator::new(vec![
        &(&t_pow(1) * &p(&[4, 3])) * 28,
        p(&[-42, 36, 338, 252]),
        &product([&t_pow(1), &p(&[1, 1]), &p(&[-7, 22, 63])]) * 2,
        product([&t_pow(2), &p(&[1, 2]), &p(&[-1, 7]), &p(&[1, 1])]),
    ])
}

/// Homogeneous part of the A108307 differential equation; applied to its
/// generating function it yields the constant 30.
pub fn e3_operator() -> DiffOperator {
    DiffOperator::new(vec![
        &p(&[5, -7, -4]) * 6,
        &(&t_pow(1) * &p(&[6, -23, -20])) * 2,
        product([&t_pow(2), &p(&[1, 1]), &p(&[1, -8])]),
    ])
}

/// Order-4 annihilator of the A216947 generating function.
pub fn c2_operator() -> DiffOperator {
    DiffOperator::new(vec![
        p(&[72]),
        &p(&[-61, 117]) * 4,
        &p(&[15, -184, 234]) * 2,
        &product([&t_pow(1), &p(&[-6, 7]), &p(&[-1, 9])]) * 2,
        product([&p(&[-1, 1]), &t_pow(2), &p(&[-1, 9])]),
    ])
}

/// `2(n+2)·f_n + (n+6)·f_{n+1} = 0`, the recurrence attached to `Q`.
pub fn q_stated_recurrence() -> PRecurrence {
    PRecurrence::homogeneous(vec![Poly::linear(2, 4), Poly::linear(1, 6)])
}

/// Whether the recurrence converted from `Q` is the stated two-term relation,
/// once common factors without nonnegative integer roots are removed.
pub fn q_recurrence_check() -> bool {
    diff_to_rec(&q_operator())
        .reduce()
        .equivalent_up_to_unit(&q_stated_recurrence())
}

/// The constant series `c` to `order` terms, handy for comparing operator output.
pub fn constant_series(c: i64, order: usize) -> PowerSeries {
    PowerSeries::constant(BigRational::from_integer(c.into()), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomic::recurrence::{c2_recurrence, e3_recurrence, t3_recurrence};
    use crate::sequence::Sequence;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn t3_terms(n: usize) -> Vec<BigInt> {
        t3_recurrence()
            .generate(&big(&[1, 0, 1]), n - 1)
            .unwrap()
            .into_terms()
    }

    /// Applies an operator to a polynomial symbolically, for checking the
    /// product independently of `weyl_mul`.
    fn act(op: &DiffOperator, f: &Poly) -> Poly {
        let mut acc = Poly::zero();
        let mut d = f.clone();
        for (i, c) in op.coeffs().iter().enumerate() {
            if i > 0 {
                d = d.derivative();
            }
            acc = &acc + &(c * &d);
        }
        acc
    }

    #[test]
    fn product_rule() {
        let t = DiffOperator::multiplication(t_pow(1));
        let got = weyl_mul(&DiffOperator::derivation(), &t);
        assert_eq!(got, DiffOperator::new(vec![Poly::one(), t_pow(1)]));
        assert_eq!(weyl_mul(&l3(), &DiffOperator::identity()), l3());
        assert_eq!(
            weyl_mul(&DiffOperator::identity(), &q_operator()),
            q_operator()
        );
    }

    #[test]
    fn q_times_l3_is_l6() {
        assert_eq!(weyl_mul(&q_operator(), &l3()), l6());
        assert_eq!(l6().order(), 6);
    }

    #[test]
    fn product_acts_as_composition() {
        let (a, b) = (q_operator(), l3());
        let ab = weyl_mul(&a, &b);
        for f in [
            p(&[1, 2, 0, 5, -3, 1, 0, 0, 7]),
            t_pow(11),
            p(&[3, -1, 4, 1, -5, 9, 2, -6]),
        ] {
            assert_eq!(act(&ab, &f), act(&a, &act(&b, &f)));
        }
    }

    #[test]
    fn product_is_associative() {
        let ops = [
            q_operator(),
            l3(),
            DiffOperator::derivation(),
            DiffOperator::multiplication(t_pow(1)),
        ];
        for a in &ops {
            for b in &ops {
                for c in &ops {
                    assert_eq!(weyl_mul(&weyl_mul(a, b), c), weyl_mul(a, &weyl_mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn annihilators() {
        let t = PowerSeries::from_integers(&t3_terms(60));
        assert!(apply_operator(&l3(), &t, 50).unwrap().is_zero());
        assert!(apply_operator(&l6(), &t, 50).unwrap().is_zero());
        let c = c2_recurrence().generate(&big(&[1, 3]), 59).unwrap();
        let c = PowerSeries::from_integers(c.terms());
        assert!(apply_operator(&c2_operator(), &c, 50).unwrap().is_zero());
    }

    #[test]
    fn e3_equation_leaves_constant() {
        let e = e3_recurrence().generate(&big(&[1, 1]), 59).unwrap();
        let out = apply_operator(&e3_operator(), &PowerSeries::from_integers(e.terms()), 50);
        assert_eq!(out.unwrap(), constant_series(30, 50));
    }

    #[test]
    fn derivation_kills_constants() {
        let one = PowerSeries::one(10);
        assert!(apply_operator(&DiffOperator::derivation(), &one, 9)
            .unwrap()
            .is_zero());
        let err = apply_operator(&l6(), &one, 5).unwrap_err();
        assert_eq!(err, Error::InsufficientTruncation { have: 10, need: 11 });
    }

    #[test]
    fn conversions_of_small_operators() {
        let d = diff_to_rec(&DiffOperator::derivation());
        assert_eq!(
            d,
            PRecurrence::homogeneous(vec![Poly::zero(), Poly::linear(1, 1)])
        );
        let shifted = DiffOperator::new(vec![Poly::constant(-1), t_pow(1)]);
        assert_eq!(
            diff_to_rec(&shifted),
            PRecurrence::homogeneous(vec![Poly::linear(1, -1)])
        );
    }

    #[test]
    fn q_conversion() {
        assert!(q_recurrence_check());
        let raw = diff_to_rec(&q_operator());
        let factor = &Poly::linear(1, 3) * &Poly::linear(1, 4);
        let expected = PRecurrence::homogeneous(vec![
            &factor * &Poly::linear(2, 4),
            &factor * &Poly::linear(1, 6),
        ]);
        assert_eq!(raw, expected);
    }

    #[test]
    fn q_relation_propagates_zero() {
        let rec = q_stated_recurrence();
        let zeros = rec.generate(&big(&[0]), 30).unwrap();
        assert!(zeros.terms().iter().all(Zero::is_zero));
        // From f_0 = 1 the relation gives f_1 = -4/6: not an integer.
        let err = rec.generate(&big(&[1]), 3).unwrap_err();
        assert_eq!(err, Error::InexactDivision { index: 1 });
        let ok = rec.generate(&big(&[3]), 1).unwrap();
        assert_eq!(ok.terms(), big(&[3, -2]).as_slice());
    }

    #[test]
    fn converted_recurrences_hold_on_solutions() {
        let t = Sequence::new("t3", t3_terms(80));
        assert!(diff_to_rec(&l3()).verify(&t).unwrap());
        assert!(diff_to_rec(&l6()).verify(&t).unwrap());
        let c = c2_recurrence().generate(&big(&[1, 3]), 80).unwrap();
        assert!(diff_to_rec(&c2_operator()).verify(&c).unwrap());
    }

    #[test]
    fn l3_conversion_reduces_to_t3_recurrence() {
        let rec = diff_to_rec(&l3());
        assert_eq!(rec.order(), 3);
        assert!(rec.reduce().equivalent_up_to_unit(&t3_recurrence()));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(
            q_operator().to_string(),
            "(2*t^4 + t^3)*D^3 + (24*t^3 + 13*t^2)*D^2 + (72*t^2 + 42*t)*D + (48*t + 30)"
        );
        assert_eq!(
            diff_to_rec(&q_operator()).reduce().to_string(),
            "(2*n + 4)*a(n) + (n + 6)*a(n+1) = 0"
        );
    }
}
