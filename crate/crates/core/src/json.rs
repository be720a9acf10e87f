//! Serde helpers. Big integers are written as decimal strings so that no
//! JSON reader has to cope with numbers beyond 64 bits.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::ser::SerializeMap;
use serde::Serializer;

pub fn big<T: Display, S: Serializer>(value: &T, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub fn big_map<K: Display, V: Display, S: Serializer>(
    map: &BTreeMap<K, V>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    let mut out = serializer.serialize_map(Some(map.len()))?;
    for (k, v) in map {
        out.serialize_entry(&k.to_string(), &v.to_string())?;
    }
    out.end()
}
