//! Verification reports emitted by the theorem checkers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Claim {
    Main1,
    Main2,
    DILemma,
    Corres,
    PnPushdown,
    BonGab,
    SelfinjCriteria,
    ZGpEquivalence,
    ModPushdown,
    TiltingPushdown,
    TiltingFinite,
}

impl Claim {
    pub const ALL: [Claim; 11] = [
        Claim::Main1,
        Claim::Main2,
        Claim::DILemma,
        Claim::Corres,
        Claim::PnPushdown,
        Claim::BonGab,
        Claim::SelfinjCriteria,
        Claim::ZGpEquivalence,
        Claim::ModPushdown,
        Claim::TiltingPushdown,
        Claim::TiltingFinite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Main1 => "Main1",
            Claim::Main2 => "Main2",
            Claim::DILemma => "DILemma",
            Claim::Corres => "Corres",
            Claim::PnPushdown => "PnPushdown",
            Claim::BonGab => "BonGab",
            Claim::SelfinjCriteria => "SelfinjCriteria",
            Claim::ZGpEquivalence => "ZGpEquivalence",
            Claim::ModPushdown => "ModPushdown",
            Claim::TiltingPushdown => "TiltingPushdown",
            Claim::TiltingFinite => "TiltingFinite",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Serialized as `true`, `false`, `"not-applicable"` or `"indeterminate"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    Indeterminate,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::NotApplicable | Verdict::Indeterminate => 3,
        }
    }

    /// Conjunction: a failure dominates, then indeterminacy, then inapplicability.
    pub fn and(self, other: Self) -> Self {
        use Verdict::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Indeterminate, _) | (_, Indeterminate) => Indeterminate,
            (NotApplicable, _) | (_, NotApplicable) => NotApplicable,
            _ => Pass,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Indeterminate => "indeterminate",
        })
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::Pass => s.serialize_bool(true),
            Verdict::Fail => s.serialize_bool(false),
            Verdict::NotApplicable => s.serialize_str("not-applicable"),
            Verdict::Indeterminate => s.serialize_str("indeterminate"),
        }
    }
}

impl<'de> Deserialize<'de> for Verdict {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::Bool(true) => Ok(Verdict::Pass),
            Value::Bool(false) => Ok(Verdict::Fail),
            Value::String(s) if s == "not-applicable" => Ok(Verdict::NotApplicable),
            Value::String(s) if s == "indeterminate" => Ok(Verdict::Indeterminate),
            other => Err(serde::de::Error::custom(format!("invalid verdict {other}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub instance: Value,
    pub pass: Verdict,
    pub witnesses: Vec<Value>,
    pub caps: BTreeMap<String, Value>,
}

impl VerificationReport {
    pub fn new(claim: Claim, instance: Value) -> Self {
        Self { claim, instance, pass: Verdict::Pass, witnesses: Vec::new(), caps: BTreeMap::new() }
    }

    /// Records a sub-check and folds its outcome into the verdict.
    pub fn check(&mut self, name: &str, ok: bool, detail: Value) {
        self.pass = self.pass.and(Verdict::from_bool(ok));
        self.witnesses.push(serde_json::json!({ "check": name, "ok": ok, "detail": detail }));
    }

    pub fn note(&mut self, detail: Value) {
        self.witnesses.push(detail);
    }

    pub fn cap(&mut self, name: &str, value: impl Into<Value>) {
        self.caps.insert(name.to_string(), value.into());
    }

    /// Marks the report not applicable or indeterminate for errors that mean
    /// exactly that; any other error is handed back.
    pub fn absorb(&mut self, err: Error) -> Result<(), Error> {
        let verdict = match &err {
            Error::NotSquareFree(_) | Error::HypothesisUnverified(_) | Error::AmbientNotClusterTilting(_) => {
                Verdict::NotApplicable
            }
            Error::CapExceeded(_)
            | Error::WindowTooSmall(_)
            | Error::DecompositionInconclusive(_)
            | Error::IsoInconclusive(_) => Verdict::Indeterminate,
            _ => return Err(err),
        };
        self.pass = self.pass.and(verdict);
        self.witnesses.push(serde_json::json!({ "error": err.kind(), "detail": err.to_string() }));
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
