//! Serde helpers shared by the JSON formats.

/// Serializes a `BigUint` as a JSON number when it fits in `u64`, otherwise
/// as a decimal string. Both forms are accepted on input.
pub mod big_number {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match n.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&n.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(u64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(BigUint::from(v)),
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}
