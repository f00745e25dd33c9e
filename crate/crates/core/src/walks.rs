//! Excursion counting for planar walk models.
//!
//! A [`WalkModel`] is a multiset of steps together with a domain cut out by
//! finitely many half-planes. A step may carry a restriction: a line on which
//! it is forbidden. Both the domain and the restrictions are affine-linear, so
//! they transport exactly under a unimodular change of coordinates.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::sequence::Sequence;

/// The affine form `a·x + b·y + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl LinearForm {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.a * x + self.b * y + self.c
    }

    /// The same form written in the coordinates `p' = M·p`.
    fn transport(&self, inverse: &[[i64; 2]; 2]) -> Self {
        Self {
            a: self.a * inverse[0][0] + self.b * inverse[1][0],
            b: self.a * inverse[0][1] + self.b * inverse[1][1],
            c: self.c,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub dx: i64,
    pub dy: i64,
    /// The step is forbidden at points where this form vanishes.
    pub forbidden_on: Option<LinearForm>,
}

impl Step {
    pub const fn free(dx: i64, dy: i64) -> Self {
        Self {
            dx,
            dy,
            forbidden_on: None,
        }
    }

    pub const fn forbidden_on(dx: i64, dy: i64, line: LinearForm) -> Self {
        Self {
            dx,
            dy,
            forbidden_on: Some(line),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dx == 0 && self.dy == 0
    }

    pub fn allowed_at(&self, x: i64, y: i64) -> bool {
        self.forbidden_on.is_none_or(|line| line.eval(x, y) != 0)
    }
}

/// A step multiset and a domain `{p : f(p) ≥ 0 for every f}` containing the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkModel {
    name: String,
    steps: Vec<Step>,
    domain: Vec<LinearForm>,
}

impl WalkModel {
    pub fn new(name: impl Into<String>, steps: Vec<Step>, domain: Vec<LinearForm>) -> Result<Self> {
        let model = Self {
            name: name.into(),
            steps,
            domain,
        };
        if !model.contains(0, 0) {
            return Err(Error::OriginOutsideDomain(model.name));
        }
        Ok(model)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn domain(&self) -> &[LinearForm] {
        &self.domain
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        self.domain.iter().all(|f| f.eval(x, y) >= 0)
    }

    /// Non-zero step vectors, sorted.
    pub fn nonzero_steps(&self) -> Vec<(i64, i64)> {
        let mut out: Vec<_> = self
            .steps
            .iter()
            .filter(|s| !s.is_zero())
            .map(|s| (s.dx, s.dy))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Walks on the G2 weight lattice in fundamental-weight coordinates, confined
/// to the dominant chamber `x ≥ 0, y ≥ 0`. The zero step is forbidden on the
/// wall `x = 0`.
pub fn octant_g2_model() -> WalkModel {
    let steps = vec![
        Step::free(1, 0),
        Step::free(-1, 1),
        Step::free(-2, 1),
        Step::free(-1, 0),
        Step::free(1, -1),
        Step::free(2, -1),
        Step::forbidden_on(0, 0, LinearForm::new(1, 0, 0)),
    ];
    let domain = vec![LinearForm::new(1, 0, 0), LinearForm::new(0, 1, 0)];
    WalkModel::new("octant-g2", steps, domain).expect("origin is in the chamber")
}

/// Height-2 hesitating tableaux as walks in `x ≥ y ≥ 0`.
///
/// Eight steps: the six unit moves, a zero step for "add then remove a cell in
/// the first row" (always allowed) and a zero step for the same move in the
/// second row, which is forbidden on the diagonal `x = y`.
pub fn hesitating_model() -> WalkModel {
    let steps = vec![
        Step::free(1, 0),
        Step::free(0, 1),
        Step::free(-1, 0),
        Step::free(0, -1),
        Step::free(1, -1),
        Step::free(-1, 1),
        Step::free(0, 0),
        Step::forbidden_on(0, 0, LinearForm::new(1, -1, 0)),
    ];
    let domain = vec![LinearForm::new(1, -1, 0), LinearForm::new(0, 1, 0)];
    WalkModel::new("hesitating", steps, domain).expect("origin is in the domain")
}

/// Adds `j` unrestricted zero steps. Counts become the `j`-fold binomial transform.
pub fn with_extra_zero_steps(model: &WalkModel, j: usize) -> WalkModel {
    let mut out = model.clone();
    out.steps.extend(std::iter::repeat_n(Step::free(0, 0), j));
    if j > 0 {
        out.name = format!("{}+{j}0", model.name);
    }
    out
}

/// Pushes the model forward along `p ↦ M·p` for an integer matrix `M` with
/// determinant ±1.
pub fn apply_unimodular(model: &WalkModel, matrix: [[i64; 2]; 2]) -> Result<WalkModel> {
    let [[a, b], [c, d]] = matrix;
    let det = a * d - b * c;
    if det != 1 && det != -1 {
        return Err(Error::NotUnimodular(matrix));
    }
    let inverse = [[det * d, -det * b], [-det * c, det * a]];
    let steps = model
        .steps
        .iter()
        .map(|s| Step {
            dx: a * s.dx + b * s.dy,
            dy: c * s.dx + d * s.dy,
            forbidden_on: s.forbidden_on.map(|f| f.transport(&inverse)),
        })
        .collect();
    let domain = model.domain.iter().map(|f| f.transport(&inverse)).collect();
    Ok(WalkModel {
        name: format!("{}*{matrix:?}", model.name),
        steps,
        domain,
    })
}

/// Largest `|x|` and `|y|` of any lattice point holding a nonzero count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Extent {
    pub max_abs_x: i64,
    pub max_abs_y: i64,
}

/// Number of excursions of length `0..=n_max`.
pub fn count_excursions(model: &WalkModel, n_max: usize) -> Sequence {
    count_excursions_with_extent(model, n_max).0
}

/// Same as [`count_excursions`], also reporting how far the table spread.
pub fn count_excursions_with_extent(model: &WalkModel, n_max: usize) -> (Sequence, Extent) {
    // Identical steps are merged and weighted by multiplicity.
    let mut grouped: Vec<(Step, u32)> = Vec::new();
    for step in &model.steps {
        match grouped.iter_mut().find(|(s, _)| s == step) {
            Some((_, mult)) => *mult += 1,
            None => grouped.push((*step, 1)),
        }
    }
    let reach_x = model.steps.iter().map(|s| s.dx.abs()).max().unwrap_or(0);
    let reach_y = model.steps.iter().map(|s| s.dy.abs()).max().unwrap_or(0);

    // A point that is live after m of N steps is reachable in m steps and can
    // return in N - m, so it sits within half the horizon of the origin.
    let half = n_max.div_ceil(2) as i64;
    let (hx, hy) = (reach_x * half, reach_y * half);
    let width = (2 * hy + 1) as usize;
    let cells = (2 * hx + 1) as usize * width;
    let index = |x: i64, y: i64| ((x + hx) as usize) * width + (y + hy) as usize;

    let mut cur = vec![BigUint::zero(); cells];
    let mut next = vec![BigUint::zero(); cells];
    cur[index(0, 0)] = BigUint::from(1u32);
    let mut terms = vec![BigInt::from(1)];
    let mut extent = Extent::default();

    for m in 0..n_max {
        let remaining = (n_max - m - 1) as i64;
        for x in -hx..=hx {
            for y in -hy..=hy {
                let value = &cur[index(x, y)];
                if value.is_zero() {
                    continue;
                }
                for (step, mult) in &grouped {
                    if !step.allowed_at(x, y) {
                        continue;
                    }
                    let (tx, ty) = (x + step.dx, y + step.dy);
                    if tx.abs() > remaining * reach_x
                        || ty.abs() > remaining * reach_y
                        || !model.contains(tx, ty)
                    {
                        continue;
                    }
                    debug_assert!(tx.abs() <= hx && ty.abs() <= hy);
                    extent.max_abs_x = extent.max_abs_x.max(tx.abs());
                    extent.max_abs_y = extent.max_abs_y.max(ty.abs());
                    let slot = &mut next[index(tx, ty)];
                    if *mult == 1 {
                        *slot += value;
                    } else {
                        *slot += value * *mult;
                    }
                }
            }
        }
        std::mem::swap(&mut cur, &mut next);
        next.iter_mut().for_each(|c| c.set_zero());
        terms.push(BigInt::from(cur[index(0, 0)].clone()));
    }
    (Sequence::new(model.name.clone(), terms), extent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::binomial_transform;
    use std::collections::HashMap;

    fn ints(s: &Sequence) -> Vec<i64> {
        s.terms()
            .iter()
            .map(|t| i64::try_from(t).unwrap())
            .collect()
    }

    /// Exhaustive enumeration of all step words, for small n.
    fn brute_force(model: &WalkModel, n: usize) -> u64 {
        fn go(model: &WalkModel, x: i64, y: i64, left: usize) -> u64 {
            if left == 0 {
                return u64::from(x == 0 && y == 0);
            }
            model
                .steps()
                .iter()
                .filter(|s| s.allowed_at(x, y) && model.contains(x + s.dx, y + s.dy))
                .map(|s| go(model, x + s.dx, y + s.dy, left - 1))
                .sum()
        }
        go(model, 0, 0, n)
    }

    /// Unpruned sparse DP, independent of the dense table above.
    fn sparse_dp(model: &WalkModel, n_max: usize) -> Vec<BigInt> {
        let mut cur: HashMap<(i64, i64), BigInt> = HashMap::from([((0, 0), BigInt::from(1))]);
        let mut out = vec![BigInt::from(1)];
        for _ in 0..n_max {
            let mut next: HashMap<(i64, i64), BigInt> = HashMap::new();
            for (&(x, y), v) in &cur {
                for s in model.steps() {
                    if s.allowed_at(x, y) && model.contains(x + s.dx, y + s.dy) {
                        *next.entry((x + s.dx, y + s.dy)).or_default() += v;
                    }
                }
            }
            cur = next;
            out.push(cur.get(&(0, 0)).cloned().unwrap_or_default());
        }
        out
    }

    #[test]
    fn octant_counts() {
        let t3 = count_excursions(&octant_g2_model(), 9);
        assert_eq!(ints(&t3), [1, 0, 1, 1, 4, 10, 35, 120, 455, 1792]);
    }

    #[test]
    fn hesitating_counts() {
        let e3 = count_excursions(&hesitating_model(), 9);
        assert_eq!(ints(&e3), [1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032]);
        assert_eq!(
            ints(&count_excursions(&hesitating_model(), 5)),
            [1, 1, 2, 5, 15, 51]
        );
    }

    #[test]
    fn small_lengths_agree_with_brute_force() {
        for model in [octant_g2_model(), hesitating_model()] {
            let dp = count_excursions(&model, 6);
            for n in 0..=6 {
                assert_eq!(dp.terms()[n], BigInt::from(brute_force(&model, n)), "{n}");
            }
        }
    }

    #[test]
    fn pruned_table_matches_sparse_dp() {
        for model in [
            octant_g2_model(),
            hesitating_model(),
            with_extra_zero_steps(&octant_g2_model(), 2),
        ] {
            assert_eq!(
                count_excursions(&model, 30).terms(),
                sparse_dp(&model, 30).as_slice()
            );
        }
    }

    #[test]
    fn empty_walk_is_counted_once() {
        for model in [octant_g2_model(), hesitating_model()] {
            assert_eq!(ints(&count_excursions(&model, 0)), [1]);
        }
    }

    #[test]
    fn model_shapes() {
        let g2 = octant_g2_model();
        assert_eq!(g2.steps().len(), 7);
        let zero: Vec<_> = g2.steps().iter().filter(|s| s.is_zero()).collect();
        assert_eq!(zero.len(), 1);
        assert!(!zero[0].allowed_at(0, 5));
        assert!(zero[0].allowed_at(1, 0));

        let hes = hesitating_model();
        assert_eq!(hes.steps().len(), 8);
        let zero: Vec<_> = hes.steps().iter().filter(|s| s.is_zero()).collect();
        assert_eq!(zero.len(), 2);
        assert_eq!(zero.iter().filter(|s| s.forbidden_on.is_some()).count(), 1);
        assert!(hes.contains(2, 1) && !hes.contains(1, 2) && !hes.contains(1, -1));
    }

    #[test]
    fn origin_must_be_in_domain() {
        let err = WalkModel::new("bad", vec![], vec![LinearForm::new(1, 0, -1)]).unwrap_err();
        assert_eq!(err, Error::OriginOutsideDomain("bad".into()));
    }

    #[test]
    fn zero_step_adjunction() {
        let g2 = octant_g2_model();
        assert_eq!(with_extra_zero_steps(&g2, 0), g2);
        assert_eq!(
            ints(&count_excursions(&with_extra_zero_steps(&g2, 1), 9)),
            [1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032]
        );
        assert_eq!(
            ints(&count_excursions(&with_extra_zero_steps(&g2, 2), 9)),
            [1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566]
        );
        for model in [g2, hesitating_model()] {
            let base = count_excursions(&model, 40);
            let plus = count_excursions(&with_extra_zero_steps(&model, 1), 40);
            assert_eq!(plus.terms(), binomial_transform(&base, 1).unwrap().terms());
        }
    }

    #[test]
    fn unimodular_maps() {
        let g2 = octant_g2_model();
        assert_eq!(
            apply_unimodular(&g2, [[1, 0], [0, 1]]).unwrap().steps(),
            g2.steps()
        );
        assert_eq!(
            apply_unimodular(&g2, [[2, 0], [0, 1]]).unwrap_err(),
            Error::NotUnimodular([[2, 0], [0, 1]])
        );
        let base = count_excursions(&g2, 20);
        for m in [
            [[1, 0], [1, 1]],
            [[1, 0], [-1, 1]],
            [[0, 1], [1, 0]],
            [[1, 0], [0, 1]],
        ] {
            let moved = apply_unimodular(&g2, m).unwrap();
            assert_eq!(count_excursions(&moved, 20).terms(), base.terms(), "{m:?}");
        }
    }

    #[test]
    fn hesitating_steps_become_g2_steps() {
        // (x, y) -> (x, y - x), then read coordinates in swapped order.
        let moved = apply_unimodular(&hesitating_model(), [[1, 0], [-1, 1]]).unwrap();
        let mut swapped: Vec<_> = moved
            .nonzero_steps()
            .into_iter()
            .map(|(a, b)| (b, a))
            .collect();
        swapped.sort_unstable();
        assert_eq!(swapped, octant_g2_model().nonzero_steps());
    }

    #[test]
    fn hesitating_domain_becomes_the_chamber() {
        // (x, y) -> (x - y, y) carries x >= y >= 0 onto the quadrant and the
        // diagonal restriction onto the wall x = 0.
        let moved = apply_unimodular(&hesitating_model(), [[1, -1], [0, 1]]).unwrap();
        let target = with_extra_zero_steps(&octant_g2_model(), 1);
        assert_eq!(moved.nonzero_steps(), target.nonzero_steps());
        for x in -6..=6 {
            for y in -6..=6 {
                assert_eq!(moved.contains(x, y), target.contains(x, y), "({x},{y})");
                let restricted = |m: &WalkModel| {
                    m.steps()
                        .iter()
                        .filter(|s| s.is_zero() && !s.allowed_at(x, y))
                        .count()
                };
                assert_eq!(restricted(&moved), restricted(&target));
            }
        }
        assert_eq!(
            count_excursions(&moved, 25).terms(),
            count_excursions(&target, 25).terms()
        );
    }

    #[test]
    fn table_stays_inside_the_step_box() {
        for n in [1, 2, 7, 30] {
            let (_, extent) = count_excursions_with_extent(&octant_g2_model(), n);
            assert!(extent.max_abs_x <= 2 * n as i64);
            assert!(extent.max_abs_y <= n as i64);
        }
    }
}
