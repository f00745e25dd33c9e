//! Named sequence models and the methods that can compute them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::holonomic::{
    c2_recurrence, e3_recurrence, resolve_uniform_parameters, t3_recurrence, uniform_recurrence,
};
use crate::laurent::{ct_sequence, g2_kernel, sl3_kernel, LaurentPoly};
use crate::sequence::{Sequence, A059710, A108304, A108307, QUADRANT_TAGS};
use crate::series::t3_closed_form_hypergeom;
use crate::walks::{count_excursions, hesitating_model, octant_g2_model, with_extra_zero_steps};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// A059710, G2 excursions.
    T3,
    /// A108307, one extra zero step.
    E3,
    /// A108304, two extra zero steps.
    A108304,
    /// Quadrant sequence for `V ⊕ V* ⊕ k·C`, `k ∈ 0..=3`.
    Quad(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Walk,
    Ct,
    Rec,
    Closed,
}

impl Model {
    pub const ALL: [Model; 7] = [
        Model::T3,
        Model::E3,
        Model::A108304,
        Model::Quad(0),
        Model::Quad(1),
        Model::Quad(2),
        Model::Quad(3),
    ];

    pub fn oeis_tag(self) -> &'static str {
        match self {
            Model::T3 => A059710,
            Model::E3 => A108307,
            Model::A108304 => A108304,
            Model::Quad(k) => QUADRANT_TAGS[k as usize],
        }
    }

    pub fn methods(self) -> &'static [Method] {
        match self {
            Model::T3 => &[Method::Walk, Method::Ct, Method::Rec, Method::Closed],
            Model::E3 => &[Method::Walk, Method::Ct, Method::Rec],
            Model::A108304 => &[Method::Walk, Method::Ct],
            Model::Quad(_) => &[Method::Ct, Method::Rec],
        }
    }

    /// `rec` where available, otherwise constant terms.
    pub fn default_method(self) -> Method {
        if self.methods().contains(&Method::Rec) {
            Method::Rec
        } else {
            Method::Ct
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::T3 => f.write_str("t3"),
            Model::E3 => f.write_str("e3"),
            Model::A108304 => f.write_str("a108304"),
            Model::Quad(k) => write!(f, "quad{k}"),
        }
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Model::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| format!("unknown model `{s}` (expected t3, e3, a108304, quad0..quad3)"))
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Walk => "walk",
            Method::Ct => "ct",
            Method::Rec => "rec",
            Method::Closed => "closed",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "walk" => Ok(Method::Walk),
            "ct" => Ok(Method::Ct),
            "rec" => Ok(Method::Rec),
            "closed" => Ok(Method::Closed),
            _ => Err(format!(
                "unknown method `{s}` (expected walk, ct, rec, closed)"
            )),
        }
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Terms `0..=n` of `model` computed by `method`, tagged with the OEIS id.
pub fn generate(model: Model, method: Method, n: usize) -> Result<Sequence> {
    if !model.methods().contains(&method) {
        return Err(Error::MethodUnavailable {
            model: model.to_string(),
            method: method.to_string(),
        });
    }
    let seq = match (model, method) {
        (Model::T3, Method::Walk) => count_excursions(&octant_g2_model(), n),
        (Model::E3, Method::Walk) => count_excursions(&hesitating_model(), n),
        (Model::A108304, Method::Walk) => {
            count_excursions(&with_extra_zero_steps(&octant_g2_model(), 2), n)
        }
        (Model::T3 | Model::E3 | Model::A108304, Method::Ct) => {
            let extra = match model {
                Model::T3 => 0,
                Model::E3 => 1,
                _ => 2,
            };
            let (k, w) = g2_kernel();
            let k = k.add(&LaurentPoly::monomial(extra, 0, 0));
            ct_sequence(&k, &w, n)
        }
        (Model::Quad(k), Method::Ct) => {
            let (kernel, weyl) = sl3_kernel(k);
            ct_sequence(&kernel, &weyl, n)
        }
        (Model::T3, Method::Rec) => t3_recurrence().generate(&ints(&[1, 0, 1]), n)?,
        (Model::E3, Method::Rec) => e3_recurrence().generate(&ints(&[1, 1]), n)?,
        (Model::Quad(3), Method::Rec) => c2_recurrence().generate(&ints(&[1, 3]), n)?,
        (Model::Quad(k), Method::Rec) => {
            let parameter = resolve_uniform_parameters(20)
                .into_iter()
                .find(|m| m.kernel == Some(k))
                .map(|m| m.parameter)
                .ok_or_else(|| Error::MethodUnavailable {
                    model: model.to_string(),
                    method: method.to_string(),
                })?;
            let (kernel, weyl) = sl3_kernel(k);
            let seed = ct_sequence(&kernel, &weyl, 3);
            uniform_recurrence(parameter)?.generate(seed.terms(), n)?
        }
        (Model::T3, Method::Closed) => {
            let series = t3_closed_form_hypergeom(n + 1)?;
            let terms = series
                .to_integers()
                .ok_or(Error::ClosedFormInconsistent(5))?;
            Sequence::new("closed", terms)
        }
        _ => unreachable!("method availability checked above"),
    };
    Ok(seq.with_tag(model.oeis_tag()))
}
