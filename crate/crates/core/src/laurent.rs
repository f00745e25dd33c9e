//! Sparse bivariate Laurent polynomials and constant-term sequences.
//!
//! `ct_sequence(K, W, N)` lists the constant terms of `W·K^n` for `n ≤ N`.
//! For the G2 and SL(3) kernels these count chamber-confined excursions: `W`
//! is the alternating sum over the Weyl group that cancels every walk leaving
//! the chamber.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::sequence::Sequence;

/// Exponent pair `(i, j)` of the monomial `x^i y^j`.
pub type Exponent = (i64, i64);

/// Finite sum of `c·x^i·y^j`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(c: i64, i: i64, j: i64) -> Self {
        Self::from_terms([((i, j), c)])
    }

    /// Sums the given terms, merging repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Smallest box `[i_lo, i_hi] × [j_lo, j_hi]` containing the support.
    pub fn bounding_box(&self) -> Option<(Exponent, Exponent)> {
        let mut it = self.terms.keys();
        let &(i0, j0) = it.next()?;
        let init = ((i0, i0), (j0, j0));
        let ((ilo, ihi), (jlo, jhi)) = it.fold(init, |((ilo, ihi), (jlo, jhi)), &(i, j)| {
            ((ilo.min(i), ihi.max(i)), (jlo.min(j), jhi.max(j)))
        });
        Some(((ilo, jlo), (ihi, jhi)))
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    /// Multiplies every exponent by `x^i y^j`.
    pub fn shift(&self, i: i64, j: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }
}

/// Exact product.
pub fn lp_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (&(i1, j1), c1) in &a.terms {
        for (&(i2, j2), c2) in &b.terms {
            out.add_term((i1 + i2, j1 + j2), c1 * c2);
        }
    }
    out
}

/// Coefficient of `x^0 y^0`.
pub fn constant_term(a: &LaurentPoly) -> BigInt {
    a.coeff(0, 0)
}

impl fmt::Display for LaurentPoly {
    /// `c*x^i*y^j` terms in lexicographic exponent order, joined by `" + "`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((i, j), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*x^{i}*y^{j}")?;
        }
        Ok(())
    }
}

/// Character of the 7-dimensional G2 representation and its Weyl numerator.
pub fn g2_kernel() -> (LaurentPoly, LaurentPoly) {
    let k = LaurentPoly::from_terms([
        ((0, 0), 1),
        ((1, 0), 1),
        ((0, 1), 1),
        ((1, 1), 1),
        ((-1, 0), 1),
        ((0, -1), 1),
        ((-1, -1), 1),
    ]);
    let bracket = LaurentPoly::from_terms([
        ((2, 3), 1),
        ((1, 3), -1),
        ((-1, 2), 1),
        ((-2, 1), -1),
        ((-3, -1), 1),
        ((-3, -2), -1),
        ((-2, -3), 1),
        ((-1, -3), -1),
        ((1, -2), 1),
        ((2, -1), -1),
        ((3, 1), 1),
        ((3, 2), -1),
    ]);
    (k, bracket.shift(-2, -3))
}

/// Kernel for `V ⊕ V* ⊕ k·C` over SL(3): `K = k + x + y + 1/x + 1/y + x/y + y/x`.
pub fn sl3_kernel(k: u32) -> (LaurentPoly, LaurentPoly) {
    let kernel = LaurentPoly::from_terms([
        ((0, 0), i64::from(k)),
        ((1, 0), 1),
        ((0, 1), 1),
        ((-1, 0), 1),
        ((0, -1), 1),
        ((1, -1), 1),
        ((-1, 1), 1),
    ]);
    let weyl = LaurentPoly::from_terms([
        ((0, 0), 1),
        ((2, -1), -1),
        ((3, 0), 1),
        ((2, 2), -1),
        ((0, 3), 1),
        ((-1, 2), -1),
    ]);
    (kernel, weyl)
}

/// Constant terms of `W·K^n` for `n = 0..=n_max`.
///
/// Runs `P ← P·K` on a dense grid. Before each multiplication, monomials that
/// cannot be brought back to `x^0 y^0` by the remaining powers of `K` are
/// dropped, so the table never exceeds the Minkowski-sum box of the supports.
pub fn ct_sequence(k: &LaurentPoly, w: &LaurentPoly, n_max: usize) -> Sequence {
    let Some(((wilo, wjlo), (wihi, wjhi))) = w.bounding_box() else {
        return Sequence::new("ct", vec![BigInt::zero(); n_max + 1]);
    };
    let Some(((kilo, kjlo), (kihi, kjhi))) = k.bounding_box() else {
        let mut terms = vec![BigInt::zero(); n_max + 1];
        terms[0] = constant_term(w);
        return Sequence::new("ct", terms);
    };
    let kterms: Vec<(i64, i64, BigInt)> = k.terms().map(|((i, j), c)| (i, j, c.clone())).collect();

    // After m multiplications a monomial x^i y^j can still reach the constant
    // term only if -i lies in r·[kilo, kihi] for some r in 0..=n_max - m.
    let window = |m: usize| {
        let r = (n_max - m) as i64;
        let ilo = -(r * kihi).max(0);
        let ihi = -(r * kilo).min(0);
        let jlo = -(r * kjhi).max(0);
        let jhi = -(r * kjlo).min(0);
        (ilo, ihi, jlo, jhi)
    };
    let clip = |(ilo, ihi, jlo, jhi): (i64, i64, i64, i64), m: usize| {
        let (wlo_i, whi_i, wlo_j, whi_j) = window(m);
        (
            ilo.max(wlo_i),
            ihi.min(whi_i),
            jlo.max(wlo_j),
            jhi.min(whi_j),
        )
    };

    let mut bounds = clip((wilo, wihi, wjlo, wjhi), 0);
    let mut grid = Grid::new(bounds);
    for ((i, j), c) in w.terms() {
        grid.add(i, j, c);
    }
    let mut terms = vec![grid.get(0, 0)];
    for m in 1..=n_max {
        let (ilo, ihi, jlo, jhi) = bounds;
        bounds = clip((ilo + kilo, ihi + kihi, jlo + kjlo, jhi + kjhi), m);
        let mut next = Grid::new(bounds);
        for (i, j, c) in grid.nonzero() {
            for (di, dj, kc) in &kterms {
                let (ti, tj) = (i + di, j + dj);
                if next.in_bounds(ti, tj) {
                    if kc.is_one() {
                        next.add(ti, tj, c);
                    } else if (-kc).is_one() {
                        next.sub(ti, tj, c);
                    } else {
                        next.add(ti, tj, &(c * kc));
                    }
                }
            }
        }
        grid = next;
        terms.push(grid.get(0, 0));
    }
    Sequence::new("ct", terms)
}

/// Dense coefficient table over an exponent box; empty when the box is empty.
struct Grid {
    ilo: i64,
    ihi: i64,
    jlo: i64,
    jhi: i64,
    cells: Vec<BigInt>,
}

impl Grid {
    fn new((ilo, ihi, jlo, jhi): (i64, i64, i64, i64)) -> Self {
        let len = if ilo > ihi || jlo > jhi {
            0
        } else {
            ((ihi - ilo + 1) * (jhi - jlo + 1)) as usize
        };
        Self {
            ilo,
            ihi,
            jlo,
            jhi,
            cells: vec![BigInt::zero(); len],
        }
    }

    fn in_bounds(&self, i: i64, j: i64) -> bool {
        (self.ilo..=self.ihi).contains(&i) && (self.jlo..=self.jhi).contains(&j)
    }

    fn slot(&self, i: i64, j: i64) -> usize {
        ((i - self.ilo) * (self.jhi - self.jlo + 1) + (j - self.jlo)) as usize
    }

    fn get(&self, i: i64, j: i64) -> BigInt {
        if self.in_bounds(i, j) {
            self.cells[self.slot(i, j)].clone()
        } else {
            BigInt::zero()
        }
    }

    fn add(&mut self, i: i64, j: i64, c: &BigInt) {
        if self.in_bounds(i, j) {
            let s = self.slot(i, j);
            self.cells[s] += c;
        }
    }

    fn sub(&mut self, i: i64, j: i64, c: &BigInt) {
        let s = self.slot(i, j);
        self.cells[s] -= c;
    }

    fn nonzero(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        let height = self.jhi - self.jlo + 1;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(s, c)| {
                let s = s as i64;
                (self.ilo + s / height, self.jlo + s % height, c)
            })
    }
}

impl LaurentPoly {
    /// Largest absolute coefficient, useful for sizing diagnostics.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::binomial_transform;

    fn ints(s: &Sequence) -> Vec<i64> {
        s.terms()
            .iter()
            .map(|t| i64::try_from(t).unwrap())
            .collect()
    }

    /// Plain iterated multiplication, no pruning.
    fn naive_ct(k: &LaurentPoly, w: &LaurentPoly, n_max: usize) -> Vec<BigInt> {
        let mut p = w.clone();
        let mut out = Vec::new();
        for _ in 0..=n_max {
            out.push(constant_term(&p));
            p = lp_mul(&p, k);
        }
        out
    }

    #[test]
    fn products() {
        let a = LaurentPoly::from_terms([((1, 0), 1), ((-1, 0), 1)]);
        let b = LaurentPoly::from_terms([((1, 0), 1), ((-1, 0), -1)]);
        assert_eq!(
            lp_mul(&a, &b),
            LaurentPoly::from_terms([((2, 0), 1), ((-2, 0), -1)])
        );
        assert_eq!(lp_mul(&a, &LaurentPoly::one()), a);
        assert!(lp_mul(&a, &LaurentPoly::zero()).is_zero());
        let (k, w) = g2_kernel();
        assert_eq!(constant_term(&lp_mul(&w, &k)), BigInt::zero());
    }

    #[test]
    fn cancellation_is_structural() {
        let a = LaurentPoly::from_terms([((0, 1), 1), ((0, 1), -1)]);
        assert_eq!(a, LaurentPoly::zero());
        assert_eq!(a.support_size(), 0);
    }

    #[test]
    fn constant_terms() {
        assert_eq!(constant_term(&g2_kernel().1), BigInt::one());
        assert_eq!(constant_term(&sl3_kernel(0).1), BigInt::one());
        assert_eq!(constant_term(&LaurentPoly::zero()), BigInt::zero());
    }

    #[test]
    fn kernel_shapes() {
        let (k, w) = g2_kernel();
        assert_eq!(k.support_size(), 7);
        assert_eq!(w.support_size(), 12);
        assert_eq!(w.coeff(0, 0), BigInt::one());
        assert_eq!(sl3_kernel(3).0.coeff(0, 0), BigInt::from(3));
        assert_eq!(sl3_kernel(0).0.support_size(), 6);
        assert_eq!(sl3_kernel(2).1.support_size(), 6);
    }

    #[test]
    fn rendering() {
        let a = LaurentPoly::from_terms([((1, 0), 2), ((-1, 2), -1), ((0, 0), 1)]);
        assert_eq!(a.to_string(), "-1*x^-1*y^2 + 1*x^0*y^0 + 2*x^1*y^0");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn g2_constant_terms() {
        let (k, w) = g2_kernel();
        assert_eq!(
            ints(&ct_sequence(&k, &w, 9)),
            [1, 0, 1, 1, 4, 10, 35, 120, 455, 1792]
        );
    }

    #[test]
    fn sl3_constant_terms() {
        let rows: [&[i64]; 4] = [
            &[1, 0, 2, 2, 12, 30],
            &[1, 1, 3, 9, 33, 131],
            &[1, 2, 6, 22, 92, 422],
            // The published A216947 prefix reads 1, 3, 11, 49, 221, 1113.
            &[1, 3, 11, 47, 225, 1173],
        ];
        for (k, row) in rows.iter().enumerate() {
            let (kernel, weyl) = sl3_kernel(k as u32);
            assert_eq!(ints(&ct_sequence(&kernel, &weyl, 5)), *row, "k = {k}");
        }
    }

    #[test]
    fn pruned_engine_matches_naive_multiplication() {
        let (k, w) = g2_kernel();
        assert_eq!(
            ct_sequence(&k, &w, 25).terms(),
            naive_ct(&k, &w, 25).as_slice()
        );
        for kk in 0..4 {
            let (k, w) = sl3_kernel(kk);
            assert_eq!(
                ct_sequence(&k, &w, 20).terms(),
                naive_ct(&k, &w, 20).as_slice()
            );
        }
        // Kernels whose support box misses the origin.
        let k = LaurentPoly::from_terms([((1, 0), 2), ((2, 1), -3)]);
        let w = LaurentPoly::from_terms([((-3, -1), 1), ((-2, 0), 5), ((0, 0), 1)]);
        assert_eq!(
            ct_sequence(&k, &w, 8).terms(),
            naive_ct(&k, &w, 8).as_slice()
        );
    }

    #[test]
    fn degenerate_inputs() {
        let (k, w) = g2_kernel();
        assert_eq!(
            ints(&ct_sequence(&k, &LaurentPoly::zero(), 3)),
            [0, 0, 0, 0]
        );
        assert_eq!(
            ints(&ct_sequence(&LaurentPoly::zero(), &w, 3)),
            [1, 0, 0, 0]
        );
    }

    #[test]
    fn adding_one_to_the_kernel_is_a_binomial_transform() {
        let (k, w) = g2_kernel();
        let base = ct_sequence(&k, &w, 40);
        let shifted = ct_sequence(&k.add(&LaurentPoly::one()), &w, 40);
        assert_eq!(
            shifted.terms(),
            binomial_transform(&base, 1).unwrap().terms()
        );
        for kk in 0..3 {
            let (k0, w) = sl3_kernel(kk);
            let (k1, _) = sl3_kernel(kk + 1);
            let lower = ct_sequence(&k0, &w, 40);
            let upper = ct_sequence(&k1, &w, 40);
            assert_eq!(
                upper.terms(),
                binomial_transform(&lower, 1).unwrap().terms()
            );
        }
    }

    #[test]
    fn support_stays_in_minkowski_box() {
        let (k, w) = g2_kernel();
        let mut p = w.clone();
        let ((wilo, wjlo), (wihi, wjhi)) = w.bounding_box().unwrap();
        for n in 1..12i64 {
            p = lp_mul(&p, &k);
            let ((ilo, jlo), (ihi, jhi)) = p.bounding_box().unwrap();
            assert!(ilo >= wilo - n && ihi <= wihi + n);
            assert!(jlo >= wjlo - n && jhi <= wjhi + n);
        }
        assert!(p.max_abs_coeff() > BigInt::zero());
    }
}
