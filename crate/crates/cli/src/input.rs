use std::io::Read;
use std::path::Path;

use affprod::{Field, FieldMatrix, IrregularJson, IrregularSpec, ProductCode, ProductSpec};
use anyhow::{Context, Result};

/// File contents, or stdin for `-`.
pub fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn product(path: &Path) -> Result<ProductCode> {
    let spec: ProductSpec =
        serde_json::from_str(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))?;
    spec.build().with_context(|| format!("building the code in {}", path.display()))
}

pub fn irregular(path: &Path) -> Result<IrregularSpec> {
    let spec: IrregularJson =
        serde_json::from_str(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))?;
    spec.build().with_context(|| format!("building the code in {}", path.display()))
}

pub fn matrix(field: Field, path: &Path) -> Result<FieldMatrix> {
    FieldMatrix::parse(field, &read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// `row-weight=2,col-weight=2` into `(row, col)`.
pub fn weight_filter(s: &str) -> Result<(Option<usize>, Option<usize>)> {
    let (mut row, mut col) = (None, None);
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part.split_once('=').with_context(|| format!("filter term {part:?} lacks '='"))?;
        let value: usize = value.trim().parse().with_context(|| format!("bad weight in {part:?}"))?;
        match key.trim() {
            "row-weight" => row = Some(value),
            "col-weight" => col = Some(value),
            other => anyhow::bail!("unknown filter {other:?}; expected row-weight or col-weight"),
        }
    }
    Ok((row, col))
}

/// `3..7` or `3..=7`, both inclusive.
pub fn inclusive_range(s: &str) -> Result<(u32, u32)> {
    let (lo, hi) = s.split_once("..").with_context(|| format!("range {s:?} should look like 3..7"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    Ok((lo.trim().parse().context("range start")?, hi.trim().parse().context("range end")?))
}
