//! Reading command arguments: `-` is standard input, text starting with `{`
//! or `[` is inline JSON, anything else is a path.

use std::cell::RefCell;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use gpd_core::format::Decoder;
use gpd_core::{Bibundle, FiniteGroupoid, Fraction, GroupoidMap, Group, Representation};
use serde_json::Value;

use crate::report::Failure;

/// Where an argument came from, for error messages and relative paths.
#[derive(Debug, Clone)]
enum Origin {
    Stdin,
    Inline,
    File(PathBuf),
}

pub struct Inputs<'a> {
    stdin: RefCell<Option<&'a mut dyn Read>>,
    stdin_text: RefCell<Option<String>>,
}

impl<'a> Inputs<'a> {
    pub fn new(stdin: &'a mut dyn Read) -> Self {
        Inputs {
            stdin: RefCell::new(Some(stdin)),
            stdin_text: RefCell::new(None),
        }
    }

    fn raw(&self, arg: &str) -> Result<(String, Origin), Failure> {
        let trimmed = arg.trim_start();
        if arg == "-" {
            if let Some(text) = self.stdin_text.borrow().as_ref() {
                return Ok((text.clone(), Origin::Stdin));
            }
            let mut text = String::new();
            let mut slot = self.stdin.borrow_mut();
            let reader = slot.take().ok_or_else(|| Failure::io("-", "standard input is already consumed"))?;
            reader.read_to_string(&mut text).map_err(|e| Failure::io("-", &e.to_string()))?;
            *self.stdin_text.borrow_mut() = Some(text.clone());
            Ok((text, Origin::Stdin))
        } else if trimmed.starts_with('{') || trimmed.starts_with('[') {
            Ok((arg.to_string(), Origin::Inline))
        } else {
            let text = fs::read_to_string(arg).map_err(|e| Failure::io(arg, &e.to_string()))?;
            Ok((text, Origin::File(PathBuf::from(arg))))
        }
    }

    fn parsed(&self, arg: &str) -> Result<(Value, Origin), Failure> {
        let (text, origin) = self.raw(arg)?;
        let v = parse(&text, arg)?;
        Ok((v, origin))
    }

    /// The JSON value of an argument, unwrapped from a report if it is one.
    pub fn value(&self, arg: &str, payload: &[&str]) -> Result<Value, Failure> {
        Ok(unwrap_report(self.parsed(arg)?.0, payload))
    }

    fn decode<T>(&self, arg: &str, payload: &[&str], f: impl FnOnce(&Decoder, &Value) -> gpd_core::Result<T>) -> Result<T, Failure> {
        let (v, origin) = self.parsed(arg)?;
        let v = unwrap_report(v, payload);
        let base = match &origin {
            Origin::File(p) => p.parent().map(Path::to_path_buf).unwrap_or_default(),
            Origin::Stdin | Origin::Inline => PathBuf::new(),
        };
        let resolve = |s: &str| -> gpd_core::Result<Value> {
            let path = base.join(s);
            let text = fs::read_to_string(&path)
                .map_err(|e| gpd_core::Error::Malformed(format!("reference {}: {e}", path.display())))?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| gpd_core::Error::Malformed(format!("reference {}: {e}", path.display())))?;
            Ok(unwrap_report(v, &["groupoid"]))
        };
        let decoder = Decoder::with_resolver(&resolve);
        f(&decoder, &v).map_err(Failure::from)
    }

    pub fn groupoid(&self, arg: &str) -> Result<Arc<FiniteGroupoid>, Failure> {
        self.decode(arg, &["groupoid"], |d, v| d.groupoid(v)).map(Arc::new)
    }

    pub fn map(&self, arg: &str) -> Result<GroupoidMap, Failure> {
        self.decode(arg, &["map"], |d, v| d.map(v))
    }

    pub fn fraction(&self, arg: &str) -> Result<Fraction, Failure> {
        self.decode(arg, &["fraction", "span"], |d, v| d.fraction(v))
    }

    pub fn bibundle(&self, arg: &str) -> Result<Bibundle, Failure> {
        self.decode(arg, &["bibundle"], |d, v| d.bibundle(v))
    }

    pub fn rep(&self, arg: &str, g: &Arc<FiniteGroupoid>) -> Result<Representation, Failure> {
        self.decode(arg, &["rep"], |d, v| d.rep(v, g))
    }

    /// A group given by name (`trivial`, `cyclic:n`, `symmetric:n`,
    /// `dihedral:n`) or as a table.
    pub fn group(&self, arg: &str) -> Result<Group, Failure> {
        if let Some(g) = named_group(arg)? {
            return Ok(g);
        }
        self.decode(arg, &["group"], |d, v| d.group(v))
    }
}

pub fn parse(text: &str, source: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::json(source, &e))
}

/// Reports produced by this tool can be fed back in: the first payload
/// field present is taken.
fn unwrap_report(v: Value, payload: &[&str]) -> Value {
    if v.get("command").is_some() {
        for key in payload {
            if let Some(inner) = v.get(*key) {
                return inner.clone();
            }
        }
    }
    v
}

/// Largest group built from a name; the multiplication table has
/// `order²` entries.
const NAMED_GROUP_ORDER_BOUND: usize = 4096;

fn named_group(arg: &str) -> Result<Option<Group>, Failure> {
    if arg == "trivial" {
        return Ok(Some(Group::trivial()));
    }
    if arg.trim_start().starts_with(['{', '[']) {
        return Ok(None);
    }
    let Some((kind, n)) = arg.split_once(':') else {
        return Ok(None);
    };
    let n: usize = n
        .parse()
        .map_err(|_| Failure::usage(&format!("group size {n:?} is not a number")))?;
    let order = match kind {
        "cyclic" => Some(n),
        "dihedral" => n.checked_mul(2),
        "symmetric" => (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
        _ => return Err(Failure::usage(&format!("unknown group family {kind:?}"))),
    };
    let order = order.unwrap_or(usize::MAX);
    if order > NAMED_GROUP_ORDER_BOUND {
        return Err(gpd_core::Error::Scale {
            what: "group order",
            size: order,
            bound: NAMED_GROUP_ORDER_BOUND,
        }
        .into());
    }
    if n == 0 {
        return Err(Failure::usage("group size must be positive"));
    }
    Ok(Some(match kind {
        "cyclic" => Group::cyclic(n),
        "dihedral" => Group::dihedral(n),
        _ => Group::symmetric(n),
    }))
}
