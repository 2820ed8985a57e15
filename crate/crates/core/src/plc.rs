//! Power-line channel noise and the matching product-code decoder.
//!
//! Rows of a codeword are frequency slots and columns are time slots. The
//! channel has four event classes:
//!
//! * background noise flips single cells,
//! * a fade forces a row to all-zero,
//! * narrowband noise forces a row to all-one,
//! * impulse noise forces a column to all-one.
//!
//! They are applied in that order, so an impulse overrides everything in
//! its column. All indices are 0-based.
//!
//! The decoder marks all-one rows as erasures, then every column whose
//! surviving entries are all one, subtracts the coset leader and runs
//! iterative column/row erasure decoding on the classical product.

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::affine::{AffineCode, ErasureFailure, Symbol};
use crate::algebra::{AlgebraError, Field, FieldMatrix};
use crate::codes::CodeError;
use crate::product::{ProductCode, ProductError, WeightBounds};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlcError {
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error("the channel model is binary; got GF({0})")]
    NotBinary(u8),
    #[error("invalid noise configuration: {0}")]
    InvalidConfig(String),
    #[error("expected a {}x{} matrix, got {}x{}", .expected.0, .expected.1, .got.0, .got.1)]
    ShapeMismatch { expected: (usize, usize), got: (usize, usize) },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("at least one trial is required")]
    NoTrials,
    #[error("r must satisfy 1 <= r_min <= r_max <= 63, got {0}..{1}")]
    BadRange(u32, u32),
}

impl From<CodeError> for PlcError {
    fn from(e: CodeError) -> Self {
        PlcError::Product(e.into())
    }
}

impl From<AlgebraError> for PlcError {
    fn from(e: AlgebraError) -> Self {
        PlcError::Product(e.into())
    }
}

/// Event counts for one transmission.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoiseConfig {
    pub e_nbd: usize,
    pub e_imp: usize,
    pub e_fade: usize,
    pub e_bg: usize,
    pub seed: u64,
}

impl NoiseConfig {
    pub fn validate(&self, rows: usize, cols: usize) -> Result<(), PlcError> {
        if self.e_nbd + self.e_fade > rows {
            return Err(PlcError::InvalidConfig(format!(
                "{} narrowband + {} faded rows exceed {rows} rows",
                self.e_nbd, self.e_fade
            )));
        }
        if self.e_imp > cols {
            return Err(PlcError::InvalidConfig(format!("{} impulse columns exceed {cols} columns", self.e_imp)));
        }
        if self.e_bg > rows * cols {
            return Err(PlcError::InvalidConfig(format!(
                "{} background flips exceed {} cells",
                self.e_bg,
                rows * cols
            )));
        }
        Ok(())
    }
}

/// Where each event landed. Every list is sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoiseEvents {
    pub background: Vec<(usize, usize)>,
    pub fade: Vec<usize>,
    pub narrowband: Vec<usize>,
    pub impulse: Vec<usize>,
}

impl NoiseEvents {
    /// Draws every event set uniformly without replacement. Narrowband rows
    /// are drawn from the rows that did not fade.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, cfg: &NoiseConfig) -> Self {
        let mut background: Vec<(usize, usize)> =
            sample(rng, rows * cols, cfg.e_bg).into_iter().map(|c| (c / cols, c % cols)).collect();
        let mut fade = sample(rng, rows, cfg.e_fade).into_vec();
        fade.sort_unstable();
        let spare: Vec<usize> = (0..rows).filter(|r| fade.binary_search(r).is_err()).collect();
        let mut narrowband: Vec<usize> = sample(rng, spare.len(), cfg.e_nbd).into_iter().map(|i| spare[i]).collect();
        let mut impulse = sample(rng, cols, cfg.e_imp).into_vec();
        background.sort_unstable();
        narrowband.sort_unstable();
        impulse.sort_unstable();
        NoiseEvents { background, fade, narrowband, impulse }
    }
}

/// Applies explicit events to a binary matrix.
pub fn apply_events(n: &FieldMatrix, events: &NoiseEvents) -> Result<FieldMatrix, PlcError> {
    if !n.field().is_binary() {
        return Err(PlcError::NotBinary(n.field().order()));
    }
    let (rows, cols) = n.shape();
    let oob = events.background.iter().any(|&(i, j)| i >= rows || j >= cols)
        || events.fade.iter().chain(&events.narrowband).any(|&i| i >= rows)
        || events.impulse.iter().any(|&j| j >= cols);
    if oob {
        return Err(PlcError::InvalidConfig("event index out of range".into()));
    }
    let mut out = n.clone();
    for &(i, j) in &events.background {
        out.set(i, j, 1 - out.get(i, j));
    }
    for &i in &events.fade {
        out.set_row(i, &vec![0; cols]);
    }
    for &i in &events.narrowband {
        out.set_row(i, &vec![1; cols]);
    }
    for &j in &events.impulse {
        out.set_column(j, &vec![1; rows]);
    }
    Ok(out)
}

/// Samples events from `cfg.seed` and applies them.
pub fn apply_noise(n: &FieldMatrix, cfg: &NoiseConfig) -> Result<(FieldMatrix, NoiseEvents), PlcError> {
    cfg.validate(n.rows(), n.cols())?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let events = NoiseEvents::sample(&mut rng, n.rows(), n.cols(), cfg);
    Ok((apply_events(n, &events)?, events))
}

/// A matrix over `GF(p) ∪ {ε}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReceivedMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Symbol>,
}

impl ReceivedMatrix {
    pub fn from_matrix(n: &FieldMatrix) -> Self {
        ReceivedMatrix { rows: n.rows(), cols: n.cols(), data: n.as_slice().iter().map(|&x| Some(x)).collect() }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> Symbol {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Symbol) {
        self.data[i * self.cols + j] = s;
    }

    pub fn row(&self, i: usize) -> &[Symbol] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Symbol> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn erasures(&self) -> usize {
        self.data.iter().filter(|s| s.is_none()).count()
    }

    /// The matrix itself when nothing is erased.
    pub fn to_matrix(&self, field: Field) -> Option<FieldMatrix> {
        if self.erasures() > 0 {
            return None;
        }
        Some(FieldMatrix::from_fn(field, self.rows, self.cols, |i, j| self.get(i, j).unwrap()))
    }

    /// Same layout as matrix text, with `e` for an erasure.
    pub fn parse(field: Field, text: &str) -> Result<Self, PlcError> {
        let mut data = Vec::new();
        let mut rows = 0;
        let mut cols = None;
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = if line.contains(char::is_whitespace) {
                line.split_whitespace().collect()
            } else {
                line.char_indices().map(|(i, c)| &line[i..i + c.len_utf8()]).collect()
            };
            let parse_err = |msg: String| PlcError::Parse { line: ln + 1, msg };
            if *cols.get_or_insert(tokens.len()) != tokens.len() {
                return Err(parse_err(format!("expected {} symbols, got {}", cols.unwrap(), tokens.len())));
            }
            for t in tokens {
                if t == "e" || t == "ε" {
                    data.push(None);
                    continue;
                }
                let v: u32 = t.parse().map_err(|_| parse_err(format!("bad symbol {t:?}")))?;
                if v >= field.order() as u32 {
                    return Err(parse_err(format!("symbol {v} out of range for GF({})", field.order())));
                }
                data.push(Some(v as u8));
            }
            rows += 1;
        }
        Ok(ReceivedMatrix { rows, cols: cols.unwrap_or(0), data })
    }

    pub fn to_text(&self, field: Field) -> String {
        let sym = |s: &Symbol| s.map_or("e".to_string(), |x| x.to_string());
        let sep = if field.is_binary() { "" } else { " " };
        (0..self.rows).map(|i| self.row(i).iter().map(sym).collect::<Vec<_>>().join(sep)).collect::<Vec<_>>().join("\n")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    Row(usize),
    Column(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Row(i) => write!(f, "row {i}"),
            Location::Column(j) => write!(f, "column {j}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
#[error("{kind:?} at {location}")]
pub struct DecodeFailure {
    pub kind: ErasureFailure,
    pub location: Location,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeOptions {
    /// Also treat all-zero rows as erasures (fades).
    pub mark_fades: bool,
    /// Radius of the bounded-distance passes run before erasure decoding;
    /// 0 disables them.
    pub background_radius: usize,
    pub max_iters: usize,
}

impl Default for DecodeOptions {
    fn default() -> Self {
        DecodeOptions { mark_fades: false, background_radius: 0, max_iters: 10 }
    }
}

impl DecodeOptions {
    /// Background correction up to `floor((d - 1) / 2)` of the weaker
    /// component.
    pub fn with_background_correction(pc: &ProductCode) -> Result<Self, PlcError> {
        let d = pc.row_code().base().min_distance()?.min(pc.col_code().base().min_distance()?);
        Ok(DecodeOptions { background_radius: (d - 1) / 2, ..Default::default() })
    }
}

/// Which lines the detector erased.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Detection {
    pub rows: Vec<usize>,
    pub columns: Vec<usize>,
}

/// The detector half of the decoder: all-one rows (and all-zero rows with
/// `mark_fades`), then columns whose entries are all one or erased.
pub fn detect(received: &ReceivedMatrix, mark_fades: bool) -> (ReceivedMatrix, Detection) {
    let (m, n) = received.shape();
    let mut w = received.clone();
    let mut det = Detection::default();
    for i in 0..m {
        let row = received.row(i);
        if row.iter().all(|&s| s == Some(1)) || (mark_fades && row.iter().all(|&s| s == Some(0))) {
            det.rows.push(i);
            for j in 0..n {
                w.set(i, j, None);
            }
        }
    }
    for j in 0..n {
        if (0..m).all(|i| matches!(w.get(i, j), Some(1) | None)) {
            det.columns.push(j);
            for i in 0..m {
                w.set(i, j, None);
            }
        }
    }
    (w, det)
}

/// Decodes a received matrix. The inner `Err` is a decoding failure; the
/// outer one a usage error.
pub fn decode(
    received: &ReceivedMatrix,
    pc: &ProductCode,
    opts: &DecodeOptions,
) -> Result<Result<FieldMatrix, DecodeFailure>, PlcError> {
    let f = pc.field();
    if !f.is_binary() {
        return Err(PlcError::NotBinary(f.order()));
    }
    if received.shape() != pc.shape() {
        return Err(PlcError::ShapeMismatch { expected: pc.shape(), got: received.shape() });
    }
    let (m, n) = pc.shape();
    let (mut w, _) = detect(received, opts.mark_fades);
    let leader = pc.leader();
    for i in 0..m {
        for j in 0..n {
            if let Some(s) = w.get(i, j) {
                w.set(i, j, Some(f.sub(s, leader.get(i, j))));
            }
        }
    }
    let row_code = AffineCode::linear(pc.row_code().base().clone());
    let col_code = AffineCode::linear(pc.col_code().base().clone());

    if opts.background_radius > 0 {
        correct_background(&mut w, &row_code, &col_code, opts)?;
    }

    let mut stalled = false;
    while w.erasures() > 0 && !stalled {
        stalled = true;
        for j in 0..n {
            let col = w.column(j);
            if col.iter().all(Option::is_some) {
                continue;
            }
            match col_code.erasure_decode(&col)? {
                Ok(c) => {
                    for (i, &x) in c.iter().enumerate() {
                        w.set(i, j, Some(x));
                    }
                    stalled = false;
                }
                Err(ErasureFailure::Ambiguous) => {}
                Err(kind) => return Ok(Err(DecodeFailure { kind, location: Location::Column(j) })),
            }
        }
        for i in 0..m {
            let row = w.row(i).to_vec();
            if row.iter().all(Option::is_some) {
                continue;
            }
            match row_code.erasure_decode(&row)? {
                Ok(c) => {
                    for (j, &x) in c.iter().enumerate() {
                        w.set(i, j, Some(x));
                    }
                    stalled = false;
                }
                Err(ErasureFailure::Ambiguous) => {}
                Err(kind) => return Ok(Err(DecodeFailure { kind, location: Location::Row(i) })),
            }
        }
    }
    if let Some(i) = (0..m).find(|&i| w.row(i).iter().any(Option::is_none)) {
        return Ok(Err(DecodeFailure { kind: ErasureFailure::Ambiguous, location: Location::Row(i) }));
    }

    let diff = w.to_matrix(f).expect("no erasures left");
    for j in 0..n {
        if !col_code.base().contains(&diff.column(j))? {
            return Ok(Err(DecodeFailure { kind: ErasureFailure::Inconsistent, location: Location::Column(j) }));
        }
    }
    for i in 0..m {
        if !row_code.base().contains(diff.row(i))? {
            return Ok(Err(DecodeFailure { kind: ErasureFailure::Inconsistent, location: Location::Row(i) }));
        }
    }
    Ok(Ok(&diff + leader))
}

/// Bounded-distance passes over erasure-free rows and columns until
/// nothing changes or `max_iters` is reached.
fn correct_background(
    w: &mut ReceivedMatrix,
    row_code: &AffineCode,
    col_code: &AffineCode,
    opts: &DecodeOptions,
) -> Result<(), PlcError> {
    let (m, n) = w.shape();
    let radius = opts.background_radius;
    for _ in 0..opts.max_iters {
        let mut changed = false;
        for i in 0..m {
            let Some(row) = w.row(i).iter().copied().collect::<Option<Vec<u8>>>() else {
                continue;
            };
            if let Some(c) = row_code.bounded_distance_decode(&row, radius)? {
                if c != row {
                    for (j, &x) in c.iter().enumerate() {
                        w.set(i, j, Some(x));
                    }
                    changed = true;
                }
            }
        }
        for j in 0..n {
            let Some(col) = w.column(j).into_iter().collect::<Option<Vec<u8>>>() else {
                continue;
            };
            if let Some(c) = col_code.bounded_distance_decode(&col, radius)? {
                if c != col {
                    for (i, &x) in c.iter().enumerate() {
                        w.set(i, j, Some(x));
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(())
}

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// One splitmix64 output step.
pub fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `t`: output `t + 1` of a splitmix64 stream started at
/// `master`, so trials never share a seed with each other or the master.
pub fn trial_seed(master: u64, t: u64) -> u64 {
    splitmix64(master.wrapping_add(t.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    Ambiguous,
    Inconsistent,
    /// The decoder returned a codeword other than the one sent.
    Miscorrected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: u64,
    pub seed: u64,
    pub kind: FailureKind,
    pub location: Option<Location>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureHistogram {
    pub ambiguous: u64,
    pub inconsistent: u64,
    pub miscorrected: u64,
    /// Trials in which the detector erased a line that no narrowband or
    /// impulse event hit (background noise completing an all-one line, or
    /// a fade when marking fades). Counted whether or not decoding
    /// succeeded.
    pub spurious_detections: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub trials: u64,
    pub master_seed: u64,
    pub e_nbd: usize,
    pub e_imp: usize,
    pub e_fade: usize,
    pub e_bg: usize,
    pub successes: u64,
    pub success_rate: f64,
    pub histogram: FailureHistogram,
    pub failures: Vec<TrialFailure>,
}

struct TrialOutcome {
    failure: Option<TrialFailure>,
    spurious: bool,
}

fn run_trial(
    pc: &ProductCode,
    template: &NoiseConfig,
    opts: &DecodeOptions,
    master: u64,
    t: u64,
) -> Result<TrialOutcome, PlcError> {
    let seed = trial_seed(master, t);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = pc.field();
    let (l, k) = pc.info_shape();
    let info = FieldMatrix::from_fn(f, l, k, |_, _| rng.gen_range(0..f.order()));
    let sent = pc.encode(&info)?;
    let (m, n) = pc.shape();
    let events = NoiseEvents::sample(&mut rng, m, n, template);
    let received = ReceivedMatrix::from_matrix(&apply_events(&sent, &events)?);

    let (_, det) = detect(&received, opts.mark_fades);
    let spurious = det.rows.iter().any(|r| events.narrowband.binary_search(r).is_err())
        || det.columns.iter().any(|c| events.impulse.binary_search(c).is_err());

    let failure = match decode(&received, pc, opts)? {
        Ok(c) if c == sent => None,
        Ok(_) => Some((FailureKind::Miscorrected, None)),
        Err(e) => Some((
            match e.kind {
                ErasureFailure::Ambiguous => FailureKind::Ambiguous,
                ErasureFailure::Inconsistent => FailureKind::Inconsistent,
            },
            Some(e.location),
        )),
    }
    .map(|(kind, location)| TrialFailure { trial: t, seed, kind, location });
    Ok(TrialOutcome { failure, spurious })
}

/// Monte-Carlo run over `trials` random codewords. Trials run in parallel;
/// each draws from its own seed (see [`trial_seed`]), so the report does
/// not depend on scheduling. The template's own `seed` is ignored.
pub fn simulate(
    pc: &ProductCode,
    template: &NoiseConfig,
    opts: &DecodeOptions,
    trials: u64,
    master_seed: u64,
) -> Result<SimulationReport, PlcError> {
    if trials == 0 {
        return Err(PlcError::NoTrials);
    }
    if !pc.field().is_binary() {
        return Err(PlcError::NotBinary(pc.field().order()));
    }
    let (m, n) = pc.shape();
    template.validate(m, n)?;
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(pc, template, opts, master_seed, t))
        .collect::<Result<Vec<_>, _>>()?;

    let mut histogram = FailureHistogram::default();
    let mut failures = Vec::new();
    for o in outcomes {
        histogram.spurious_detections += o.spurious as u64;
        if let Some(fl) = o.failure {
            match fl.kind {
                FailureKind::Ambiguous => histogram.ambiguous += 1,
                FailureKind::Inconsistent => histogram.inconsistent += 1,
                FailureKind::Miscorrected => histogram.miscorrected += 1,
            }
            failures.push(fl);
        }
    }
    let successes = trials - failures.len() as u64;
    Ok(SimulationReport {
        trials,
        master_seed,
        e_nbd: template.e_nbd,
        e_imp: template.e_imp,
        e_fade: template.e_fade,
        e_bg: template.e_bg,
        successes,
        success_rate: successes as f64 / trials as f64,
        histogram,
        failures,
    })
}

/// Exact row/column weight extrema over every codeword.
pub fn weight_bounds_report(pc: &ProductCode) -> Result<WeightBounds, PlcError> {
    Ok(pc.weight_bounds()?)
}

/// Dimensions of two square-matrix families correcting the same number of
/// narrowband and impulse events.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub r: u32,
    /// Side length `2^r` of the square codewords.
    pub size: u64,
    /// Construction IA from first-order Reed-Muller codes: `r^2`.
    pub product_dim: u64,
    /// Doubled rank-metric code with `n = d = 2^(r-1)`, `k = 1`:
    /// `n k = 2^(r-1)`.
    pub gabidulin_dim: u64,
}

pub fn gabidulin_comparison(r_min: u32, r_max: u32) -> Result<Vec<ComparisonRow>, PlcError> {
    if r_min < 1 || r_min > r_max || r_max > 63 {
        return Err(PlcError::BadRange(r_min, r_max));
    }
    Ok((r_min..=r_max)
        .map(|r| ComparisonRow {
            r,
            size: 1u64 << r,
            product_dim: (r as u64) * (r as u64),
            gabidulin_dim: 1u64 << (r - 1),
        })
        .collect())
}
