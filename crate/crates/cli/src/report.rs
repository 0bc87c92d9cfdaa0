//! Reports and exit codes.

use gpd_core::{Error, LawViolation};
use serde_json::{json, Map, Value};

/// Exit code for a true verdict or a successful construction.
pub const EXIT_TRUE: i32 = 0;
/// Exit code for a false verdict.
pub const EXIT_FALSE: i32 = 1;
/// Exit code for unreadable input, failed validation or an exceeded bound.
pub const EXIT_ERROR: i32 = 2;

/// A successful report: payload fields and an exit code.
pub struct Report {
    pub code: i32,
    pub fields: Map<String, Value>,
}

impl Report {
    pub fn payload() -> Self {
        Report { code: EXIT_TRUE, fields: Map::new() }
    }

    pub fn verdict(key: &str, holds: bool) -> Self {
        let mut r = Report {
            code: if holds { EXIT_TRUE } else { EXIT_FALSE },
            fields: Map::new(),
        };
        r.fields.insert(key.into(), Value::Bool(holds));
        r
    }

    pub fn with(mut self, key: &str, v: Value) -> Self {
        self.fields.insert(key.into(), v);
        self
    }

    pub fn witness(mut self, key: &str, v: Value) -> Self {
        let w = self.fields.entry("witnesses").or_insert_with(|| Value::Object(Map::new()));
        w.as_object_mut().expect("witnesses is an object").insert(key.into(), v);
        self
    }
}

/// Everything that ends a command with exit code 2.
#[derive(Debug)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
    pub witnesses: Option<Value>,
}

impl Failure {
    pub fn usage(message: &str) -> Self {
        Failure { kind: "usage", message: message.into(), witnesses: None }
    }

    pub fn io(source: &str, message: &str) -> Self {
        Failure {
            kind: "io",
            message: format!("{source}: {message}"),
            witnesses: Some(json!({ "input": source })),
        }
    }

    pub fn json(source: &str, e: &serde_json::Error) -> Self {
        Failure {
            kind: "json",
            message: format!("{source}: {e}"),
            witnesses: Some(json!({ "input": source, "line": e.line(), "column": e.column() })),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        let (kind, witnesses) = match &e {
            Error::Malformed(_) => ("malformed", None),
            Error::OutOfRange { context, id, bound } => {
                ("out_of_range", Some(json!({ "context": context, "id": id, "bound": bound })))
            }
            Error::NotComposable { g2, g1 } => ("not_composable", Some(json!({ "arrows": [g2, g1] }))),
            Error::CompositionTable(_) => ("composition_table", None),
            Error::Laws(v) => ("laws", Some(Value::Array(v.iter().map(law_json).collect()))),
            Error::GroupLaw(_) => ("group_law", None),
            Error::ActionLaw(_) => ("action_law", None),
            Error::MapLaw { arrow, .. } => ("map_law", Some(json!({ "arrows": [arrow] }))),
            Error::EndpointMismatch(_) => ("endpoint_mismatch", None),
            Error::NatIsoLaw(_) => ("natiso_law", None),
            Error::NotWeakEquivalence(_) => ("not_weak_equivalence", None),
            Error::NotACover(x) => ("not_a_cover", Some(json!({ "missing": x }))),
            Error::NotFree { arrow, element } => ("not_free", Some(json!({ "arrow": arrow, "element": element }))),
            Error::NotPrincipal(_) => ("not_principal", None),
            Error::NotActionMap(_) => ("not_action_map", None),
            Error::BibundleLaw(_) => ("bibundle_law", None),
            Error::RepLaw { arrows, .. } => ("rep_law", Some(json!({ "arrows": arrows }))),
            Error::Shape(_) => ("shape", None),
            Error::Scale { what, size, bound } => ("scale", Some(json!({ "what": what, "size": size, "bound": bound }))),
            Error::Internal(_) => ("internal", None),
        };
        Failure { kind, message, witnesses }
    }
}

fn law_json(l: &LawViolation) -> Value {
    let (law, arrows) = match *l {
        LawViolation::UnitNotLoop { unit, .. } => ("unit_not_loop", vec![unit]),
        LawViolation::CompositeEndpoints { g2, g1 } => ("composite_endpoints", vec![g2, g1]),
        LawViolation::UnitLaw { arrow } => ("unit", vec![arrow]),
        LawViolation::InverseLaw { arrow } => ("inverse", vec![arrow]),
        LawViolation::Associativity { g3, g2, g1 } => ("associativity", vec![g3, g2, g1]),
    };
    json!({ "law": law, "arrows": arrows })
}

pub fn failure_json(command: &str, f: &Failure) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), command.into());
    m.insert("error".into(), json!({ "kind": f.kind, "message": f.message }));
    if let Some(w) = &f.witnesses {
        m.insert("witnesses".into(), w.clone());
    }
    Value::Object(m)
}

pub fn report_json(command: &str, r: Report) -> Value {
    let mut m = r.fields;
    m.insert("command".into(), command.into());
    Value::Object(m)
}
