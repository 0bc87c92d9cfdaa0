//! JSON interchange.
//!
//! Encoders produce `serde_json::Value`s with sorted keys, so printing an
//! encoded value is deterministic. Decoders validate everything they read.
//! Wherever a groupoid is expected a [`Decoder`] may also accept a string,
//! handed to its resolver (the command line uses this for file references).

use std::borrow::Cow;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bundle::{Bibundle, GroupoidAction, Side};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::group::Group;
use crate::groupoid::{FiniteGroupoid, GroupoidTables};
use crate::morphism::{GroupoidMap, NatIso};
use crate::rep::{validate_rep, Matrix, Representation};
use crate::{ArrowId, ObjectId};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFields {
    domain: Value,
    codomain: Value,
    on_objects: Vec<ObjectId>,
    on_arrows: Vec<ArrowId>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NatIsoFields {
    alpha: Vec<ArrowId>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FractionFields {
    apex: Value,
    left: Value,
    right: Value,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BibundleFields {
    left: Value,
    right: Value,
    carrier: usize,
    lmom: Vec<ObjectId>,
    rmom: Vec<ObjectId>,
    lact: Vec<[usize; 3]>,
    ract: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepFields {
    dims: Vec<usize>,
    mats: Vec<Vec<Vec<String>>>,
}

fn typed<T: DeserializeOwned>(v: &Value, what: &str) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Malformed(format!("{what}: {e}")))
}

fn value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("plain data serializes")
}

pub fn groupoid_json(g: &FiniteGroupoid) -> Value {
    value(&g.to_tables())
}

pub fn group_json(g: &Group) -> Value {
    value(&g.to_table())
}

pub fn map_json(f: &GroupoidMap) -> Value {
    value(&MapFields {
        domain: groupoid_json(f.domain()),
        codomain: groupoid_json(f.codomain()),
        on_objects: f.on_objects().to_vec(),
        on_arrows: f.on_arrows().to_vec(),
    })
}

pub fn natiso_json(n: &NatIso) -> Value {
    json!({ "alpha": n.components() })
}

pub fn fraction_json(fr: &Fraction) -> Value {
    value(&FractionFields {
        apex: groupoid_json(fr.apex()),
        left: map_json(fr.left()),
        right: map_json(fr.right()),
    })
}

pub fn bibundle_json(b: &Bibundle) -> Value {
    value(&BibundleFields {
        left: groupoid_json(b.left_groupoid()),
        right: groupoid_json(b.right_groupoid()),
        carrier: b.carrier(),
        lmom: b.lmom().to_vec(),
        rmom: b.rmom().to_vec(),
        lact: b.left_action().triples(),
        ract: b.right_action().triples(),
    })
}

pub fn rep_json(r: &Representation) -> Value {
    value(&RepFields {
        dims: r.dims().to_vec(),
        mats: r.mats().iter().map(Matrix::to_strings).collect(),
    })
}

type Resolver<'a> = dyn Fn(&str) -> Result<Value> + 'a;

/// Reads the interchange formats back into validated values.
#[derive(Default)]
pub struct Decoder<'a> {
    resolve: Option<&'a Resolver<'a>>,
}

impl<'a> Decoder<'a> {
    pub fn new() -> Self {
        Decoder { resolve: None }
    }

    /// Strings in groupoid positions are passed to `resolve`.
    pub fn with_resolver(resolve: &'a Resolver<'a>) -> Self {
        Decoder { resolve: Some(resolve) }
    }

    fn deref<'v>(&self, v: &'v Value) -> Result<Cow<'v, Value>> {
        match (v, self.resolve) {
            (Value::String(s), Some(r)) => Ok(Cow::Owned(r(s)?)),
            (Value::String(s), None) => Err(Error::Malformed(format!("unresolved reference {s:?}"))),
            _ => Ok(Cow::Borrowed(v)),
        }
    }

    pub fn groupoid(&self, v: &Value) -> Result<FiniteGroupoid> {
        let v = self.deref(v)?;
        let tables: GroupoidTables = typed(&v, "groupoid")?;
        FiniteGroupoid::from_tables(&tables)
    }

    pub fn group(&self, v: &Value) -> Result<Group> {
        let v = self.deref(v)?;
        let rows: Vec<Vec<usize>> = match v.get("table") {
            Some(r) => typed(r, "group")?,
            None => typed(&v, "group")?,
        };
        Group::from_rows(&rows)
    }

    pub fn map(&self, v: &Value) -> Result<GroupoidMap> {
        let m: MapFields = typed(&*self.deref(v)?, "map")?;
        let domain = Arc::new(self.groupoid(&m.domain)?);
        let codomain = Arc::new(self.groupoid(&m.codomain)?);
        GroupoidMap::new(domain, codomain, m.on_objects, m.on_arrows)
    }

    /// A map whose endpoints are already known; the embedded domain and
    /// codomain must match them.
    pub fn map_between(&self, v: &Value, domain: &Arc<FiniteGroupoid>, codomain: &Arc<FiniteGroupoid>) -> Result<GroupoidMap> {
        let m: MapFields = typed(&*self.deref(v)?, "map")?;
        if self.groupoid(&m.domain)? != **domain {
            return Err(Error::EndpointMismatch("map domain differs from the expected groupoid".into()));
        }
        if self.groupoid(&m.codomain)? != **codomain {
            return Err(Error::EndpointMismatch("map codomain differs from the expected groupoid".into()));
        }
        GroupoidMap::new(domain.clone(), codomain.clone(), m.on_objects, m.on_arrows)
    }

    pub fn natiso(&self, v: &Value, from: &GroupoidMap, to: &GroupoidMap) -> Result<NatIso> {
        let n: NatIsoFields = typed(v, "natural isomorphism")?;
        NatIso::new(from.clone(), to.clone(), n.alpha)
    }

    pub fn fraction(&self, v: &Value) -> Result<Fraction> {
        let f: FractionFields = typed(&*self.deref(v)?, "fraction")?;
        let apex = Arc::new(self.groupoid(&f.apex)?);
        let left = self.map(&f.left)?;
        let right = self.map(&f.right)?;
        for (name, leg) in [("left", &left), ("right", &right)] {
            if **leg.domain() != *apex {
                return Err(Error::EndpointMismatch(format!("{name} leg does not start at the apex")));
            }
        }
        let left = GroupoidMap::new(apex.clone(), left.codomain().clone(), left.on_objects().to_vec(), left.on_arrows().to_vec())?;
        let right = GroupoidMap::new(apex, right.codomain().clone(), right.on_objects().to_vec(), right.on_arrows().to_vec())?;
        Fraction::new(left, right)
    }

    pub fn bibundle(&self, v: &Value) -> Result<Bibundle> {
        let b: BibundleFields = typed(&*self.deref(v)?, "bibundle")?;
        for (name, m) in [("lmom", &b.lmom), ("rmom", &b.rmom)] {
            if m.len() != b.carrier {
                return Err(Error::Shape(format!("{name} has {} entries for carrier {}", m.len(), b.carrier)));
            }
        }
        let left = Arc::new(self.groupoid(&b.left)?);
        let right = Arc::new(self.groupoid(&b.right)?);
        let lact = GroupoidAction::new(left, Side::Left, b.lmom, &b.lact)?;
        let ract = GroupoidAction::new(right, Side::Right, b.rmom, &b.ract)?;
        Bibundle::new(lact, ract)
    }

    pub fn rep(&self, v: &Value, groupoid: &Arc<FiniteGroupoid>) -> Result<Representation> {
        let r: RepFields = typed(v, "representation")?;
        if r.dims.len() != groupoid.n_objects() || r.mats.len() != groupoid.n_arrows() {
            return Err(Error::Shape(format!(
                "{} dims and {} matrices for {} objects and {} arrows",
                r.dims.len(),
                r.mats.len(),
                groupoid.n_objects(),
                groupoid.n_arrows()
            )));
        }
        if let Some(&d) = r.dims.iter().find(|&&d| d > 64) {
            return Err(Error::Scale {
                what: "representation dimension",
                size: d,
                bound: 64,
            });
        }
        let mats = r
            .mats
            .iter()
            .enumerate()
            .map(|(a, rows)| {
                // zero-row matrices carry no column count of their own
                let cols = rows.first().map_or(r.dims[groupoid.src(a)], Vec::len);
                Matrix::from_strings(rows, cols)
            })
            .collect::<Result<Vec<_>>>()?;
        validate_rep(groupoid.clone(), r.dims, mats)
    }
}
