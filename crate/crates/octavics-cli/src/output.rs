//! JSON rendering and the error-to-exit-code mapping.

use crate::parse::ParseError;
use octavics::arith::FactorBudget;
use octavics::passage::PassageError;
use octavics::reduction::ReductionError;
use octavics::roots::RootsError;
use octavics::{factor_for_display, Rat, ReductionType, ShiodaVector, TsuyumineVector};
use serde_json::{json, Value};

/// Machine-readable failure: a kind, a message, and a stable exit code.
#[derive(Debug, Clone)]
pub struct CliError {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn to_json(&self) -> Value {
        json!({
            "error": {
                "code": self.code,
                "kind": self.kind,
                "message": self.message,
            }
        })
    }

    pub fn usage_error(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            kind: "usage",
            message: message.into(),
        }
    }

    pub fn parse(e: ParseError) -> Self {
        CliError {
            code: 2,
            kind: "parse",
            message: e.to_string(),
        }
    }

    pub fn degree(e: impl std::fmt::Display) -> Self {
        CliError {
            code: 3,
            kind: "degree",
            message: e.to_string(),
        }
    }

    pub fn passage(e: PassageError) -> Self {
        let (code, kind) = match e {
            PassageError::SingularOctic => (6, "singular"),
            PassageError::NormalizerVanishes => (7, "degenerate"),
            PassageError::InterpolationDegenerate => (9, "interpolation"),
            PassageError::UndefinedPoint | PassageError::LengthMismatch => (10, "weighted-eq"),
        };
        CliError {
            code,
            kind,
            message: e.to_string(),
        }
    }

    pub fn reduction(e: ReductionError) -> Self {
        let (code, kind) = match e {
            ReductionError::NotAPrime(_) => (4, "not-a-prime"),
            ReductionError::RequiresExternalHsop(_) => (5, "requires-external-hsop"),
            ReductionError::SingularModel => (6, "singular"),
            ReductionError::DegenerateOctic => (7, "degenerate"),
            ReductionError::Form(_) => (3, "degree"),
        };
        CliError {
            code,
            kind,
            message: e.to_string(),
        }
    }

    pub fn roots(e: RootsError) -> Self {
        let (code, kind) = match e {
            RootsError::NotAPrime(_) => (4, "not-a-prime"),
            RootsError::ResidueCharTwo => (5, "requires-external-hsop"),
            RootsError::FiniteRootsRequired => (8, "finite-roots"),
            RootsError::ZeroPoint => (2, "parse"),
        };
        CliError {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

/// Helpers that return `Err(CliError)` with the right code.
pub mod fail {
    use super::CliError;

    pub fn usage<T>(message: impl Into<String>) -> Result<T, CliError> {
        Err(CliError::usage_error(message))
    }
}

pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

/// Best-effort factored rendering `num / den` with partial factorizations
/// flagged (`?` probable prime, `!` unresolved composite).
fn factored_string(r: &Rat) -> String {
    let num = factor_for_display(r.numer(), FactorBudget::default());
    let den = factor_for_display(r.denom(), FactorBudget::default());
    if r.denom() == &octavics::Int::from(1) {
        num.to_string()
    } else {
        format!("({num}) / ({den})")
    }
}

pub fn rat_json(r: &Rat, factored: bool) -> Value {
    if factored {
        json!({ "value": rat_string(r), "factored": factored_string(r) })
    } else {
        Value::String(rat_string(r))
    }
}

pub fn shioda_json(j: &ShiodaVector, factored: bool) -> Value {
    let mut map = serde_json::Map::new();
    for k in 2..=10u32 {
        map.insert(format!("J{k}"), rat_json(j.j(k), factored));
    }
    Value::Object(map)
}

pub fn tsuyumine_json(i: &TsuyumineVector, factored: bool) -> Value {
    let mut map = serde_json::Map::new();
    for k in 2..=10u32 {
        map.insert(format!("I{k}"), rat_json(i.i(k), factored));
    }
    Value::Object(map)
}

pub fn verdict_code(v: ReductionType) -> &'static str {
    match v {
        ReductionType::PotentiallyGood => "PotentiallyGood",
        ReductionType::BadEllipticTimesGenus2 => "BadEllipticTimesGenus2",
        ReductionType::BadThreeElliptic => "BadThreeElliptic",
    }
}
