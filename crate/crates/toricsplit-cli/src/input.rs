//! Input parsing: matrix files and partition descriptions.

use num_bigint::BigInt;
use std::io::Read;
use toricsplit::IntMatrix;

/// Reads a configuration matrix. Format: first non-comment line holds
/// "m n", followed by m rows of n whitespace-separated integers; `#` starts
/// a comment anywhere; `-` reads from stdin. Columns are the configuration
/// vectors.
pub fn read_matrix(path: &str) -> Result<IntMatrix, String> {
    let content = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
    };
    parse_matrix(&content).map_err(|e| format!("{path}: {e}"))
}

pub fn parse_matrix(content: &str) -> Result<IntMatrix, String> {
    let mut tokens = content
        .lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .flat_map(|line| line.split_whitespace().map(str::to_owned))
        .collect::<Vec<_>>()
        .into_iter();
    let m: usize = tokens
        .next()
        .ok_or("missing row count")?
        .parse()
        .map_err(|e| format!("bad row count: {e}"))?;
    let n: usize = tokens
        .next()
        .ok_or("missing column count")?
        .parse()
        .map_err(|e| format!("bad column count: {e}"))?;
    let mut rows = Vec::with_capacity(m);
    for r in 0..m {
        let mut row = Vec::with_capacity(n);
        for c in 0..n {
            let tok = tokens.next().ok_or(format!("missing entry ({r},{c})"))?;
            let v: BigInt = tok
                .parse()
                .map_err(|e| format!("bad entry ({r},{c}): {e}"))?;
            row.push(v);
        }
        rows.push(row);
    }
    if tokens.next().is_some() {
        return Err("trailing tokens after the matrix".into());
    }
    IntMatrix::from_rows(rows, n).map_err(|e| e.to_string())
}

/// Parses "1,2|3,4,5" (1-based column lists) into two 0-based index sets.
pub fn parse_partition(spec: &str) -> Result<(Vec<usize>, Vec<usize>), String> {
    let (left, right) = spec
        .split_once('|')
        .ok_or("partition must look like \"1,2|3,4,5\"")?;
    let side = |s: &str| -> Result<Vec<usize>, String> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let i: usize = t
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad index {t}: {e}"))?;
                if i == 0 {
                    return Err("column indices are 1-based".into());
                }
                Ok(i - 1)
            })
            .collect()
    };
    Ok((side(left)?, side(right)?))
}
