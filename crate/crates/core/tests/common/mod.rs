#![allow(dead_code)]

use std::path::PathBuf;

use greenring::{Datum, GroupDatum};

pub const RADFORD: [(u32, u32); 5] = [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)];

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

/// Radford data plus the non-cyclic data shipped in `data/`.
pub fn test_data() -> Vec<(String, Datum)> {
    let mut out: Vec<(String, Datum)> = RADFORD
        .iter()
        .map(|&(m, n)| (format!("radford({m},{n})"), Datum::radford(m, n).unwrap()))
        .collect();
    for file in ["z2xz4.json", "z2xz6.json"] {
        let raw = GroupDatum::from_path(data_dir().join(file)).unwrap();
        out.push((
            file.trim_end_matches(".json").to_string(),
            Datum::new(raw).unwrap(),
        ));
    }
    out
}
