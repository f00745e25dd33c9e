//! The cross-pipeline verification suite behind `chamberseq verify`.
//!
//! Each check recomputes its sequences from scratch and compares them exactly.
//! Checks are independent and run on separate threads; the report is sorted
//! by check name so its content does not depend on completion order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::holonomic::{
    apply_operator, c2_recurrence, e3_operator, e3_recurrence, l3, l6, q_operator,
    q_recurrence_check, resolve_uniform_parameters, t3_recurrence, weyl_mul,
};
use crate::laurent::{ct_sequence, g2_kernel, sl3_kernel};
use crate::sequence::{
    binomial_transform, compare_prefix, ReferenceTable, Sequence, A059710, A108304, A108307,
};
use crate::series::{bt_series, t3_closed_form_hypergeom, t3_closed_form_weierstrass, PowerSeries};
use crate::walks::{count_excursions, hesitating_model, octant_g2_model, with_extra_zero_steps};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub terms_compared: usize,
}

/// Where uniform-recurrence parameter `k` landed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaEntry {
    /// SL(3) kernel parameter whose constant terms the recurrence regenerates.
    pub kernel: Option<u32>,
    /// Reference row matching that kernel's first terms.
    pub tag: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub sigma: BTreeMap<String, SigmaEntry>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Thm1,
    Thm2,
    Factorization,
    Closed,
    Quadrant,
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "all" => Scope::All,
            "thm1" => Scope::Thm1,
            "thm2" => Scope::Thm2,
            "factorization" => Scope::Factorization,
            "closed" => Scope::Closed,
            "quadrant" => Scope::Quadrant,
            _ => {
                return Err(format!(
                "unknown scope `{s}` (expected all, thm1, thm2, factorization, closed, quadrant)"
            ))
            }
        })
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::All => "all",
            Scope::Thm1 => "thm1",
            Scope::Thm2 => "thm2",
            Scope::Factorization => "factorization",
            Scope::Closed => "closed",
            Scope::Quadrant => "quadrant",
        })
    }
}

type CheckFn = fn(&ReferenceTable) -> Check;

const CHECKS: [(&str, CheckFn, &[Scope]); 10] = [
    ("c01_octant_rows", octant_rows, &[Scope::Thm2]),
    (
        "c02_hesitating_is_binomial_transform",
        hesitating_transform,
        &[Scope::Thm1],
    ),
    ("c03_t3_recurrence", t3_rec, &[Scope::Thm2]),
    (
        "c04_operator_identities",
        operator_identities,
        &[Scope::Factorization],
    ),
    ("c05_closed_forms", closed_forms, &[Scope::Closed]),
    ("c06_quadrant_rows", quadrant_rows, &[Scope::Quadrant]),
    ("c07_c2_recurrence", c2_recurrence_check, &[Scope::Quadrant]),
    (
        "c08_uniform_recurrence_sigma",
        uniform_sigma,
        &[Scope::Quadrant],
    ),
    (
        "c09_zero_step_adjunction",
        zero_step_adjunction,
        &[Scope::Thm1],
    ),
    (
        "c10_series_binomial_transform",
        series_transform,
        &[Scope::Thm1],
    ),
];

/// Names of the checks `scope` runs, in report order.
pub fn check_names(scope: Scope) -> Vec<&'static str> {
    CHECKS
        .iter()
        .filter(|(_, _, scopes)| scope == Scope::All || scopes.contains(&scope))
        .map(|(name, _, _)| *name)
        .collect()
}

/// Runs every check in `scope` against `refs`.
pub fn run(scope: Scope, refs: &ReferenceTable) -> VerificationReport {
    let selected: Vec<_> = CHECKS
        .iter()
        .filter(|(_, _, scopes)| scope == Scope::All || scopes.contains(&scope))
        .collect();
    let mut checks: Vec<Check> = std::thread::scope(|s| {
        let handles: Vec<_> = selected
            .iter()
            .map(|(name, f, _)| {
                let handle = s.spawn(move || f(refs));
                (*name, handle)
            })
            .collect();
        handles
            .into_iter()
            .map(|(name, h)| {
                let mut check = h.join().unwrap_or_else(|_| Check {
                    name: String::new(),
                    status: Status::Fail,
                    detail: "check panicked".into(),
                    terms_compared: 0,
                });
                check.name = name.to_owned();
                check
            })
            .collect()
    });
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let sigma = if matches!(scope, Scope::All | Scope::Quadrant) {
        resolve_sigma(refs, 40)
    } else {
        BTreeMap::new()
    };
    VerificationReport { checks, sigma }
}

/// Maps each uniform parameter to a kernel and to the reference row whose
/// printed prefix that kernel reproduces.
pub fn resolve_sigma(refs: &ReferenceTable, n_terms: usize) -> BTreeMap<String, SigmaEntry> {
    resolve_uniform_parameters(n_terms)
        .into_iter()
        .map(|m| {
            let tag = m.kernel.and_then(|j| {
                let (k, w) = sl3_kernel(j);
                let row = ct_sequence(&k, &w, n_terms - 1);
                crate::sequence::QUADRANT_TAGS
                    .iter()
                    .filter_map(|t| refs.get(t).ok())
                    .find(|r| compare_prefix(&row, r) == r.len())
                    .map(|r| r.tag().to_owned())
            });
            (
                m.parameter.to_string(),
                SigmaEntry {
                    kernel: m.kernel,
                    tag,
                },
            )
        })
        .collect()
}

struct Outcome {
    failures: Vec<String>,
    compared: usize,
}

impl Outcome {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            compared: 0,
        }
    }

    fn same(&mut self, what: &str, got: &Sequence, want: &Sequence, len: usize) {
        let len = len.min(got.len()).min(want.len());
        self.compared = self.compared.max(len);
        let agree = compare_prefix(got, want);
        if agree < len {
            self.failures
                .push(format!("{what}: first difference at index {agree}"));
        }
    }

    fn holds(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(format!("{what}: failed"));
        }
    }

    fn result(&mut self, what: &str, r: Result<bool>) {
        match r {
            Ok(ok) => self.holds(what, ok),
            Err(e) => self.failures.push(format!("{what}: {e}")),
        }
    }

    fn finish(self, ok_detail: &str) -> Check {
        let (status, detail) = if self.failures.is_empty() {
            (Status::Pass, ok_detail.to_owned())
        } else {
            (Status::Fail, self.failures.join("; "))
        };
        Check {
            name: String::new(),
            status,
            detail,
            terms_compared: self.compared,
        }
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn t3_ct(n: usize) -> Sequence {
    let (k, w) = g2_kernel();
    ct_sequence(&k, &w, n)
}

fn closed_terms(series: Result<PowerSeries>) -> std::result::Result<Sequence, String> {
    let series = series.map_err(|e| e.to_string())?;
    let terms = series.to_integers().ok_or("non-integral coefficient")?;
    Ok(Sequence::new("closed", terms))
}

fn octant_rows(refs: &ReferenceTable) -> Check {
    let mut out = Outcome::new();
    let (t3, e3) = match (refs.get(A059710), refs.get(A108307)) {
        (Ok(a), Ok(b)) => (a.clone(), b.clone()),
        (Err(e), _) | (_, Err(e)) => {
            out.failures.push(e.to_string());
            return out.finish("");
        }
    };
    let n = t3.len() - 1;
    out.same(
        "walk",
        &count_excursions(&octant_g2_model(), n),
        &t3,
        t3.len(),
    );
    out.same("ct", &t3_ct(n), &t3, t3.len());
    match t3_recurrence().generate(&ints(&[1, 0, 1]), n) {
        Ok(s) => out.same("rec", &s, &t3, t3.len()),
        Err(e) => out.failures.push(format!("rec: {e}")),
    }
    for (what, series) in [
        ("hypergeometric", t3_closed_form_hypergeom(n + 1)),
        ("weierstrass", t3_closed_form_weierstrass(n + 1)),
    ] {
        match closed_terms(series) {
            Ok(s) => out.same(what, &s, &t3, t3.len()),
            Err(e) => out.failures.push(format!("{what}: {e}")),
        }
    }
    let m = e3.len() - 1;
    out.same(
        "hesitating walk",
        &count_excursions(&hesitating_model(), m),
        &e3,
        e3.len(),
    );
    match e3_recurrence().generate(&ints(&[1, 1]), m) {
        Ok(s) => out.same("e3 rec", &s, &e3, e3.len()),
        Err(e) => out.failures.push(format!("e3 rec: {e}")),
    }
    out.finish("five T3 pipelines and two E3 pipelines reproduce the printed rows")
}

fn hesitating_transform(_: &ReferenceTable) -> Check {
    let mut out = Outcome::new();
    let n = 199;
    let t3 = t3_ct(n);
    let transformed = binomial_transform(&t3, 1).expect("nonempty");
    out.same(
        "hesitating walk",
        &transformed,
        &count_excursions(&hesitating_model(), n),
        200,
    );
    match e3_recurrence().generate(&ints(&[1, 1]), n) {
        Ok(e3) => out.same("e3 rec", &transformed, &e3, 200),
        Err(e) => out.failures.push(format!("e3 rec: {e}")),
    }
    out.finish("bt(T3 by constant terms) equals E3 by walks and by recurrence")
}

fn t3_rec(_: &ReferenceTable) -> Check {
    let mut out = Outcome::new();
    let n = 199;
    let t3 = t3_ct(n);
    out.compared = 200;
    out.result("recurrence on constant terms", t3_recurrence().verify(&t3));
    match t3_recurrence().generate(&ints(&[1, 0, 1]), n) {
        Ok(s) => out.same(
            "generated vs walk",
            &s,
            &count_excursions(&octant_g2_model(), n),
            200,
        ),
        Err(e) => out.failures.push(format!("generate: {e}")),
    }
    out.finish("T3 recurrence holds on constant terms and regenerates the walk counts")
}

fn operator_identities(_: &ReferenceTable) -> Check {
    let mut out = Outcome::new();
    out.holds("Q*L3 = L6", weyl_mul(&q_operator(), &l3()) == l6());
    let t = PowerSeries::from_integers(t3_ct(59).terms());
    out.result(
        "L3 annihilates T",
        apply_operator(&l3(), &t, 50).map(|s| s.is_zero()),
    );
    match e3_recurrence().generate(&ints(&[1, 1]), 59) {
        Ok(e) => {
            let applied =
                apply_operator(&e3_operator(), &PowerSeries::from_integers(e.terms()), 50);
            out.result(
                "E equation leaves 30",
                applied.map(|s| s == crate::holonomic::operator::constant_series(30, 50)),
            );
        }
        Err(e) => out.failures.push(format!("e3 rec: {e}")),
    }
    out.holds("Q recurrence", q_recurrence_check());
    out.compared = 50;
    out.finish(
        "Q*L3 = L6; L3(T) = 0 and E-equation = 30 to 50 terms; Q gives 2(n+2)f_n + (n+6)f_{n+1}",
    )
}

fn closed_forms(_: &ReferenceTable) -> Check {
    let mut out = Outcome::new();
    let t3 = t3_ct(49);
    for (what, series) in [
        ("hypergeometric", t3_closed_form_hypergeom(50)),
        ("weierstrass", t3_closed_form_weierstrass(50)),
    ] {
        match closed_terms(series) {
            Ok(s) => out.same(what, &s, &t3, 50),
            Err(e) => out.failures.push(format!("{what}: {e}")),
        }
    }
    out.finish("both closed forms are t^5-divisible, integral, and equal T3 to 50 terms")
}

fn quadrant_rows(refs: &ReferenceTable) -> Check {
    let mut out = Outcome::new();
    let rows: Vec<Sequence> = (0..4)
        .map(|k| {
            let (kernel, w) = sl3_kernel(k);
            ct_sequence(&kernel, &w, 39)
        })
        .collect();
    for (k, tag) in crate::sequence::QUADRANT_TAGS.iter().enumerate() {
        match refs.get(tag) {
            Ok(r) => out.same(&format!("kernel {k} vs {tag}"), &rows[k], r, r.len()),
            Err(e) => out.failures.push(e.to_string()),
        }
    }
    for k in 0..3 {
        let bt = binomial_transform(&rows[k], 1).expect("nonempty");
        out.same(
            &format!("bt(kernel {k}) vs kernel {}", k + 1),
            &bt,
            &rows[k + 1],
            40,
        );
    }
    out.finish("four printed rows reproduced; consecutive rows are binomial transforms to 40 terms")
}

fn c2_recurrence_check(_: &ReferenceTable) -> Check {
    let mut out = Outcome::new();
    let (k, w) = sl3_kernel(3);
    let c2 = ct_sequence(&k, &w, 99);
    out.compared = 100;
    out.result("recurrence on constant terms", c2_recurrence().verify(&c2));
    match c2_recurrence().generate(&ints(&[1, 3]), 99) {
        Ok(s) => out.same("generated vs constant terms", &s, &c2, 100),
        Err(e) => out.failures.push(format!("generate: {e}")),
    }
    out.finish("A216947 recurrence verified and regenerated over 100 constant terms")
}

fn uniform_sigma(refs: &ReferenceTable) -> Check {
    let mut out = Outcome::new();
    out.compared = 40;
    let sigma = resolve_sigma(refs, 40);
    let mut tags: Vec<&str> = Vec::new();
    for (k, entry) in &sigma {
        match (&entry.kernel, &entry.tag) {
            (None, _) => out.failures.push(format!("k={k}: no unique kernel")),
            (Some(j), None) => out
                .failures
                .push(format!("k={k}: kernel {j} matches no printed row")),
            (Some(_), Some(tag)) => tags.push(tag),
        }
    }
    tags.sort_unstable();
    tags.dedup();
    if out.failures.is_empty() && tags.len() != 4 {
        out.failures.push("parameter map is not a bijection".into());
    }
    let summary = sigma
        .iter()
        .map(|(k, e)| format!("{k}->{}", e.tag.as_deref().unwrap_or("?")))
        .collect::<Vec<_>>()
        .join(", ");
    let mut check = out.finish(&format!("bijective: {summary}"));
    if check.status == Status::Fail {
        check.detail = format!("{} ({summary})", check.detail);
    }
    check
}

fn zero_step_adjunction(refs: &ReferenceTable) -> Check {
    let mut out = Outcome::new();
    for model in [octant_g2_model(), hesitating_model()] {
        let base = count_excursions(&model, 39);
        for j in 1..=2 {
            let adjoined = count_excursions(&with_extra_zero_steps(&model, j), 39);
            let bt = binomial_transform(&base, j as i64).expect("nonempty");
            out.same(
                &format!("{} + {j} zero steps", model.name()),
                &adjoined,
                &bt,
                40,
            );
        }
    }
    match refs.get(A108304) {
        Ok(row) => {
            let t3 = count_excursions(&octant_g2_model(), row.len() - 1);
            let bt2 = binomial_transform(&t3, 2).expect("nonempty");
            out.same("bt^2(T3) vs A108304", &bt2, row, row.len());
        }
        Err(e) => out.failures.push(e.to_string()),
    }
    out.finish("zero-step adjunction equals the binomial transform for both models, j = 1, 2")
}

fn series_transform(_: &ReferenceTable) -> Check {
    let mut out = Outcome::new();
    let n = 40;
    let mut inputs = vec![t3_ct(n - 1)];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..20 {
        let terms: Vec<BigInt> = (0..n)
            .map(|_| BigInt::from(rng.gen_range(-1000i64..=1000)))
            .collect();
        inputs.push(Sequence::new(format!("random{i}"), terms));
    }
    for s in &inputs {
        let g = PowerSeries::from_integers(s.terms());
        for k in -3..=3 {
            let want = binomial_transform(s, k).expect("nonempty");
            match bt_series(&g, k, n).map(|r| r.to_integers()) {
                Ok(Some(terms)) => out.same(
                    &format!("{} k={k}", s.tag()),
                    &Sequence::new("series", terms),
                    &want,
                    n,
                ),
                Ok(None) => out
                    .failures
                    .push(format!("{} k={k}: non-integral", s.tag())),
                Err(e) => out.failures.push(format!("{} k={k}: {e}", s.tag())),
            }
        }
    }
    out.finish("series substitution equals term-level transform for k in -3..=3 on 21 inputs")
}
