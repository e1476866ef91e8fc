//! JSON interchange for families.
//!
//! Schema: `{"m": int, "n": int, "A": [[Matrix; m]; m]}` where `Matrix` is
//! `[[string; n]; n]` row-major with rationals rendered `"p/q"` (reduced,
//! denominator omitted when 1).  Array position `(i-1, l-1)` holds `A(i,l)`
//! and matrix entry `(k-1, j-1)` holds `A(i,l)_{kj}`.  Output is
//! deterministic: field order `m`, `n`, `A` and canonical rational strings.

use crate::TwistingFamily;
use serde::{Deserialize, Serialize};
use twistlab_core::{rat_from_str, rat_to_string, QMat};

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    m: usize,
    n: usize,
    #[serde(rename = "A")]
    a: Vec<Vec<Vec<Vec<String>>>>,
}

/// Serializes a family to the interchange schema.
pub fn family_to_json(f: &TwistingFamily) -> String {
    let a = (1..=f.m())
        .map(|i| {
            (1..=f.m())
                .map(|l| {
                    let mat = f.a(i, l);
                    (0..f.n())
                        .map(|k0| (0..f.n()).map(|j0| rat_to_string(&mat[(k0, j0)])).collect())
                        .collect()
                })
                .collect()
        })
        .collect();
    let doc = FamilyJson { m: f.m(), n: f.n(), a };
    serde_json::to_string(&doc).expect("family JSON serialization cannot fail")
}

/// Parses the interchange schema, validating shape and rational syntax.
pub fn family_from_json(text: &str) -> Result<TwistingFamily, String> {
    let doc: FamilyJson =
        serde_json::from_str(text).map_err(|e| format!("malformed family JSON: {e}"))?;
    if doc.m == 0 || doc.n == 0 {
        return Err("m and n must be positive".to_string());
    }
    if doc.a.len() != doc.m {
        return Err(format!("expected {} rows in \"A\", got {}", doc.m, doc.a.len()));
    }
    let mut grid = Vec::with_capacity(doc.m);
    for (i0, row) in doc.a.into_iter().enumerate() {
        if row.len() != doc.m {
            return Err(format!(
                "expected {} matrices in \"A\"[{}], got {}",
                doc.m,
                i0,
                row.len()
            ));
        }
        let mut grid_row = Vec::with_capacity(doc.m);
        for (l0, mat) in row.into_iter().enumerate() {
            if mat.len() != doc.n {
                return Err(format!(
                    "matrix A({},{}) must have {} rows, got {}",
                    i0 + 1,
                    l0 + 1,
                    doc.n,
                    mat.len()
                ));
            }
            let mut rows = Vec::with_capacity(doc.n);
            for (k0, line) in mat.into_iter().enumerate() {
                if line.len() != doc.n {
                    return Err(format!(
                        "row {} of A({},{}) must have {} entries, got {}",
                        k0 + 1,
                        i0 + 1,
                        l0 + 1,
                        doc.n,
                        line.len()
                    ));
                }
                let parsed: Result<Vec<_>, String> = line
                    .iter()
                    .map(|s| {
                        rat_from_str(s).map_err(|e| {
                            format!("entry {s:?} of A({},{}): {e}", i0 + 1, l0 + 1)
                        })
                    })
                    .collect();
                rows.push(parsed?);
            }
            grid_row.push(QMat::from_rows(rows));
        }
        grid.push(grid_row);
    }
    TwistingFamily::new(doc.m, doc.n, grid)
}
