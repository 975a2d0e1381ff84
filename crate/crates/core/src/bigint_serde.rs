//! Big integers in JSON as plain numbers when they fit in `i64`, as decimal
//! strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Deserialize)]
#[serde(untagged)]
enum Repr {
    Int(i64),
    Str(String),
}

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => x.serialize(s),
        None => v.to_string().serialize(s),
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    match Repr::deserialize(d)? {
        Repr::Int(x) => Ok(BigInt::from(x)),
        Repr::Str(s) => s.parse().map_err(de::Error::custom),
    }
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => super::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        match Option::<Repr>::deserialize(d)? {
            None => Ok(None),
            Some(Repr::Int(x)) => Ok(Some(BigInt::from(x))),
            Some(Repr::Str(s)) => s.parse().map(Some).map_err(de::Error::custom),
        }
    }
}
