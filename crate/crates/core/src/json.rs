//! Report serialization with sorted object keys, so output is byte-stable.

use serde::Serialize;

/// Compact JSON with keys sorted at every level.
pub fn to_sorted_string<T: Serialize>(value: &T) -> String {
    // serde_json::Value keeps objects in a BTreeMap unless `preserve_order` is on
    let v = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string(&v).expect("values serialize")
}

/// Indented variant of [`to_sorted_string`].
pub fn to_sorted_string_pretty<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string_pretty(&v).expect("values serialize")
}
