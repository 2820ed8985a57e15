use std::collections::HashSet;
use std::io::Write;
use std::path::Path;

use affprod::algebra::{checked_space_size, parse_vector, vector_to_text};
use affprod::plc::{decode, gabidulin_comparison, simulate};
use affprod::product::{verify_property, WeightBounds};
use affprod::{AffineCode, DecodeOptions, FieldMatrix, NoiseConfig, ProductCode, ReceivedMatrix};
use anyhow::{Context, Result};
use serde::Serialize;

use crate::input;

/// `println!` that hands write errors (a closed pipe, say) back to the caller.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout().lock(), $($arg)*)
    };
}
use crate::{Command, DecoderArgs};

/// Codes up to this many codewords are checked exhaustively by `verify`.
const EXHAUSTIVE_LIMIT: u64 = 1 << 12;
/// Minimum distance is only computed up to this many codewords.
const DISTANCE_LIMIT: u64 = 1 << 16;

/// `Ok(false)` means the command ran but the answer was negative.
pub fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Construct { code, json } => construct(&code.code, json),
        Command::Encode { code, input } => encode(&code.code, &input),
        Command::Decode { code, input, decoder } => decode_cmd(&code.code, &input, &decoder),
        Command::Simulate { code, e_nbd, e_imp, e_fade, e_bg, trials, seed, decoder, json } => {
            let cfg = NoiseConfig { e_nbd, e_imp, e_fade, e_bg, seed };
            simulate_cmd(&code.code, cfg, trials, &decoder, json)
        }
        Command::Verify { code, samples, seed, json } => verify(&code.code, samples, seed, json),
        Command::Enumerate { code, filter, count, json } => enumerate(&code.code, filter.as_deref(), count, json),
        Command::Table { gabidulin, json } => table(&gabidulin, json),
        Command::IrregularDim { code, json } => irregular_dim(&code, json),
        Command::IrregularEncode { code, info } => irregular_encode(&code, &info),
        Command::IrregularVerify { code, input, all } => irregular_verify(&code, input.as_deref(), all),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    out!("{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

#[derive(Serialize)]
struct ComponentReport {
    length: usize,
    dimension: usize,
    distance: usize,
    representative: String,
    generator: Vec<String>,
}

impl ComponentReport {
    fn new(code: &AffineCode) -> Result<Self> {
        let f = code.base().field();
        Ok(ComponentReport {
            length: code.length(),
            dimension: code.dimension(),
            distance: code.base().min_distance()?,
            representative: vector_to_text(f, &code.representative()),
            generator: code.generator().to_text().lines().map(str::to_owned).collect(),
        })
    }
}

#[derive(Serialize)]
struct ConstructReport {
    kind: affprod::ProductKind,
    p: u8,
    rows: usize,
    cols: usize,
    dimension: usize,
    row_code: ComponentReport,
    col_code: ComponentReport,
    systematic_rows: Vec<usize>,
    systematic_cols: Vec<usize>,
    leader: Vec<String>,
}

fn construct(path: &Path, json: bool) -> Result<bool> {
    let pc = input::product(path)?;
    let (m, n) = pc.shape();
    let (systematic_rows, systematic_cols) = pc.systematic_positions();
    let report = ConstructReport {
        kind: pc.kind(),
        p: pc.field().order(),
        rows: m,
        cols: n,
        dimension: pc.dimension(),
        row_code: ComponentReport::new(pc.row_code())?,
        col_code: ComponentReport::new(pc.col_code())?,
        systematic_rows,
        systematic_cols,
        leader: pc.leader().to_text().lines().map(str::to_owned).collect(),
    };
    if json {
        print_json(&report)?;
        return Ok(true);
    }
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let component =
        |c: &ComponentReport| format!("[{}, {}, {}] + {}", c.length, c.dimension, c.distance, c.representative);
    out!("kind             {}", serde_json::to_value(report.kind)?.as_str().unwrap_or_default())?;
    out!("field            GF({})", report.p)?;
    out!("shape            {} x {}", m, n)?;
    out!("dimension        {}", report.dimension)?;
    out!("row code         {}", component(&report.row_code))?;
    out!("column code      {}", component(&report.col_code))?;
    out!("systematic rows  {}", join(&report.systematic_rows))?;
    out!("systematic cols  {}", join(&report.systematic_cols))?;
    out!("leader")?;
    out!("{}", pc.leader())?;
    Ok(true)
}

fn encode(path: &Path, info: &Path) -> Result<bool> {
    let pc = input::product(path)?;
    let m = input::matrix(pc.field(), info)?;
    out!("{}", pc.encode(&m)?)?;
    Ok(true)
}

fn options(args: &DecoderArgs) -> DecodeOptions {
    DecodeOptions { mark_fades: args.mark_fades, background_radius: args.bg_radius, max_iters: args.max_iters }
}

fn decode_cmd(path: &Path, received: &Path, args: &DecoderArgs) -> Result<bool> {
    let pc = input::product(path)?;
    let text = input::read_text(received)?;
    let r = ReceivedMatrix::parse(pc.field(), &text).with_context(|| format!("parsing {}", received.display()))?;
    match decode(&r, &pc, &options(args))? {
        Ok(c) => {
            out!("{c}")?;
            Ok(true)
        }
        Err(failure) => {
            let kind = match failure.kind {
                affprod::ErasureFailure::Ambiguous => "ambiguous",
                affprod::ErasureFailure::Inconsistent => "inconsistent",
            };
            eprintln!("decoding failed: {kind} at {}", failure.location);
            Ok(false)
        }
    }
}

fn simulate_cmd(path: &Path, cfg: NoiseConfig, trials: u64, args: &DecoderArgs, json: bool) -> Result<bool> {
    let pc = input::product(path)?;
    let report = simulate(&pc, &cfg, &options(args), trials, cfg.seed)?;
    if json {
        print_json(&report)?;
        return Ok(true);
    }
    out!("trials               {}", report.trials)?;
    out!("seed                 {}", report.master_seed)?;
    out!("events               nbd={} imp={} fade={} bg={}", report.e_nbd, report.e_imp, report.e_fade, report.e_bg)?;
    out!("successes            {}", report.successes)?;
    out!("success rate         {:.6}", report.success_rate)?;
    out!("ambiguous            {}", report.histogram.ambiguous)?;
    out!("inconsistent         {}", report.histogram.inconsistent)?;
    out!("miscorrected         {}", report.histogram.miscorrected)?;
    out!("spurious detections  {}", report.histogram.spurious_detections)?;
    for f in report.failures.iter().take(20) {
        let loc = f.location.map(|l| format!(" at {l}")).unwrap_or_default();
        out!("  trial {:>6}  seed {:#018x}  {:?}{loc}", f.trial, f.seed, f.kind)?;
    }
    if report.failures.len() > 20 {
        out!("  ... {} more", report.failures.len() - 20)?;
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    status: Status,
    detail: String,
}

#[derive(Serialize)]
struct VerifyReport {
    exhaustive: bool,
    tested: usize,
    weight_bounds: Option<WeightBounds>,
    checks: Vec<Check>,
    ok: bool,
}

fn pass_fail(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn weight_check(pc: &ProductCode, wb: &WeightBounds, exhaustive: bool) -> Result<Check> {
    let (m, n) = pc.shape();
    let scope = if exhaustive { "all codewords" } else { "sampled codewords" };
    let observed =
        format!("rows {}..={}, columns {}..={} over {scope}", wb.row_min, wb.row_max, wb.col_min, wb.col_max);
    let (Some((dr, _)), Some((dc, _))) = (pc.row_code().weight_window()?, pc.col_code().weight_window()?) else {
        return Ok(Check {
            name: "weight_bounds",
            status: Status::Skipped,
            detail: format!("no window applies; {observed}"),
        });
    };
    Ok(Check {
        name: "weight_bounds",
        status: pass_fail(wb.within(dr, n, dc, m)),
        detail: format!("window rows {dr}..={}, columns {dc}..={}; {observed}", n - dr, m - dc),
    })
}

fn verify(path: &Path, samples: usize, seed: u64, json: bool) -> Result<bool> {
    let pc = input::product(path)?;
    let size = checked_space_size(pc.field(), pc.dimension(), EXHAUSTIVE_LIMIT);
    let exhaustive = size.is_some();
    let infos: Vec<FieldMatrix> = if exhaustive {
        let (l, k) = pc.info_shape();
        affprod::algebra::all_vectors(pc.field(), l * k).map(|x| pc.info_from_vector(&x)).collect()
    } else {
        pc.random_information(samples, seed)
    };

    let mut orders = true;
    let mut property = true;
    let mut coset = true;
    let mut systematic = true;
    let mut wb = WeightBounds::empty();
    let mut blocks = HashSet::new();
    for m in &infos {
        let a = pc.encode_cols_then_rows(m)?;
        orders &= a == pc.encode_rows_then_cols(m)?;
        property &= verify_property(&a, pc.row_code(), pc.col_code())?;
        coset &= pc.contains(&a)?;
        let block = pc.information(&a)?;
        systematic &= &block == m;
        blocks.insert(block);
        wb.absorb(&a);
    }
    let scope = if exhaustive { "all" } else { "sampled" };
    let tested = infos.len();
    let mut checks = vec![
        Check {
            name: "order_independence",
            status: pass_fail(orders),
            detail: format!("{scope} {tested} information matrices"),
        },
        Check {
            name: "property",
            status: pass_fail(property),
            detail: "rows in the row coset, columns in the column coset".into(),
        },
        Check {
            name: "coset_structure",
            status: pass_fail(coset),
            detail: "codeword minus leader lies in the classical product".into(),
        },
    ];
    if exhaustive {
        systematic &= blocks.len() as u64 == size.unwrap();
    }
    checks.push(Check {
        name: "systematicity",
        status: pass_fail(systematic),
        detail: format!("{} distinct information blocks of {} tested", blocks.len(), tested),
    });
    checks.push(weight_check(&pc, &wb, exhaustive)?);

    let dc = pc.row_code().base().min_distance()?;
    let dd = pc.col_code().base().min_distance()?;
    checks.push(if checked_space_size(pc.field(), pc.dimension(), DISTANCE_LIMIT).is_some() {
        let d = pc.min_distance()?;
        Check { name: "distance", status: pass_fail(d == dc * dd), detail: format!("{d} = {dc} x {dd} expected") }
    } else {
        Check { name: "distance", status: Status::Skipped, detail: format!("too many codewords; expected {}", dc * dd) }
    });

    let ok = checks.iter().all(|c| c.status != Status::Fail);
    let report = VerifyReport { exhaustive, tested, weight_bounds: (tested > 0).then_some(wb), checks, ok };
    if json {
        print_json(&report)?;
    } else {
        for c in &report.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            out!("{:<20} {:<5} {}", c.name, status, c.detail)?;
        }
    }
    Ok(ok)
}

#[derive(Serialize)]
struct EnumerateReport {
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    codewords: Option<Vec<Vec<String>>>,
}

fn enumerate(path: &Path, filter: Option<&str>, count_only: bool, json: bool) -> Result<bool> {
    let pc = input::product(path)?;
    let (row_w, col_w) = filter.map(input::weight_filter).transpose()?.unwrap_or((None, None));
    let (m, n) = pc.shape();
    let keep = |c: &FieldMatrix| {
        row_w.is_none_or(|w| (0..m).all(|i| c.row_weight(i) == w))
            && col_w.is_none_or(|w| (0..n).all(|j| c.col_weight(j) == w))
    };
    let matches: Vec<FieldMatrix> = pc.codewords()?.filter(keep).collect();
    if json {
        let codewords =
            (!count_only).then(|| matches.iter().map(|c| c.to_text().lines().map(str::to_owned).collect()).collect());
        print_json(&EnumerateReport { count: matches.len(), codewords })?;
    } else if count_only {
        out!("{}", matches.len())?;
    } else {
        let texts: Vec<String> = matches.iter().map(FieldMatrix::to_text).collect();
        out!("{}", texts.join("\n\n"))?;
    }
    Ok(true)
}

fn table(range: &str, json: bool) -> Result<bool> {
    let (lo, hi) = input::inclusive_range(range)?;
    let rows = gabidulin_comparison(lo, hi)?;
    if json {
        print_json(&rows)?;
        return Ok(true);
    }
    out!("{:>3}  {:>8}  {:>12}  {:>12}", "r", "size", "product", "gabidulin")?;
    for r in rows {
        let size = format!("{0}x{0}", r.size);
        out!("{:>3}  {:>8}  {:>12}  {:>12}", r.r, size, r.product_dim, r.gabidulin_dim)?;
    }
    Ok(true)
}

fn irregular_dim(path: &Path, json: bool) -> Result<bool> {
    let spec = input::irregular(path)?;
    let s = spec.summary();
    if json {
        print_json(&s)?;
        return Ok(true);
    }
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    out!("shape            {} x {}", s.shape.0, s.shape.1)?;
    out!("row dimensions   {}", join(&s.row_dims))?;
    out!("col dimensions   {}", join(&s.col_dims))?;
    out!("nested rows      {}", s.nested_rows)?;
    out!("nested cols      {}", s.nested_cols)?;
    let qualifier = if s.exact { "exact" } else { "upper bound" };
    out!("dimension        {} ({qualifier})", s.dimension_bound)?;
    Ok(true)
}

fn irregular_encode(path: &Path, info: &str) -> Result<bool> {
    let spec = input::irregular(path)?;
    let x = parse_vector(spec.field(), info).context("parsing --info")?;
    out!("{}", spec.encode(&x)?)?;
    Ok(true)
}

fn irregular_verify(path: &Path, input: Option<&Path>, all: bool) -> Result<bool> {
    let spec = input::irregular(path)?;
    if all {
        let p = spec.field().order() as u128;
        let expected = p.pow(spec.dimension_bound() as u32);
        let mut distinct = HashSet::new();
        let mut bad = 0usize;
        for w in spec.codewords()? {
            bad += !spec.verify(&w)? as usize;
            distinct.insert(w);
        }
        let ok = bad == 0 && distinct.len() as u128 == expected;
        out!("codewords  {} distinct, {} expected", distinct.len(), expected)?;
        out!("violations {bad}")?;
        return Ok(ok);
    }
    let path_in = input.context("give --in PATH or --all")?;
    let m = input::matrix(spec.field(), path_in)?;
    let ok = spec.verify(&m)?;
    out!("{}", if ok { "member" } else { "not a member" })?;
    Ok(ok)
}
