//! JSON documents printed with `--json`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use snowkit::qbell::QPolynomial;
use snowkit::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Polynomial,
    Diagram,
    Composition,
    Series,
    Report,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub kind: Kind,
    pub payload: Value,
}

impl OutputDocument {
    pub fn new(kind: Kind, payload: Value) -> Self {
        Self { kind, payload }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// One term; `coeff` is a decimal string so that large values survive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub x: Vec<u32>,
    pub b: u32,
    pub coeff: String,
}

/// Terms in increasing tail-lex order of the x-part, then by `b`-exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub text: String,
    pub terms: Vec<TermJson>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        Self {
            text: p.to_string(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    x: m.xexp().to_vec(),
                    b: m.bexp(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

pub fn polynomial_doc(p: &Polynomial, extra: Value) -> OutputDocument {
    let mut payload = serde_json::to_value(PolynomialJson::from(p)).expect("serializable");
    if let (Value::Object(map), Value::Object(more)) = (&mut payload, extra) {
        map.extend(more);
    }
    OutputDocument::new(Kind::Polynomial, payload)
}

pub fn series_doc(h: &QPolynomial) -> OutputDocument {
    let coeffs: Vec<String> = h.coeffs().iter().map(ToString::to_string).collect();
    OutputDocument::new(
        Kind::Series,
        json!({ "text": h.to_string(), "coefficients": coeffs }),
    )
}
