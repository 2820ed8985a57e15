//! Codes the benchmarks run against.

use affprod::codes::{even_weight, reed_muller_1, repetition};
use affprod::{Field, ProductCode};

/// `even_weight(4)` on both sides, no translate.
pub fn even4_product() -> ProductCode {
    let ev = even_weight(Field::BINARY, 4).unwrap();
    ProductCode::classical(ev.clone(), ev).unwrap()
}

/// Construction IA from `<j>` inside first-order Reed-Muller `RM(1, r)`.
pub fn reed_muller(r: usize) -> ProductCode {
    let n = 1 << r;
    let j = repetition(Field::BINARY, n).unwrap();
    let rm = reed_muller_1(r).unwrap();
    ProductCode::construction_ia(&j, &rm, &j, &rm).unwrap()
}
