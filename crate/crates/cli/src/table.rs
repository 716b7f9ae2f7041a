//! Emission of the DP bound table in the shared `k,l,bound` CSV schema.

use std::path::Path;

use rainbow_bounds::{build_dp_table, Error, Result};

/// CSV text with header `k,l,bound` and one row per k = 3..=k_max at
/// l = ceil(k/2), LF endings throughout.
pub fn table1_csv(k_max: usize) -> Result<String> {
    if k_max < 3 {
        return Err(Error::Domain("table emission needs k_max >= 3".into()));
    }
    let table = build_dp_table(k_max)?;
    let mut out = String::from("k,l,bound\n");
    for k in 3..=k_max {
        let l = k.div_ceil(2);
        out.push_str(&format!("{k},{l},{}\n", table.entry(k, l)));
    }
    Ok(out)
}

/// Writes [`table1_csv`] to `path`; I/O failures carry the path.
pub fn emit_table1(k_max: usize, path: &Path) -> Result<()> {
    let csv = table1_csv(k_max)?;
    std::fs::write(path, csv).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}
