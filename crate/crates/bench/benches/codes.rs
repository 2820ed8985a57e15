use std::hint::black_box;

use affprod::plc::{apply_events, decode, NoiseEvents};
use affprod::product::systematic_coordinate_sets;
use affprod::{DecodeOptions, FieldMatrix, ReceivedMatrix};
use affprod_bench::{even4_product, reed_muller};
use criterion::{criterion_group, criterion_main, Criterion};

fn constant_weight(c: &FieldMatrix) -> bool {
    (0..4).all(|i| c.row_weight(i) == 2) && (0..4).all(|j| c.col_weight(j) == 2)
}

fn enumeration(c: &mut Criterion) {
    let pc = even4_product();
    c.bench_function("even4 constant-weight count", |b| {
        b.iter(|| black_box(&pc).codewords().unwrap().filter(constant_weight).count())
    });
    let words: Vec<FieldMatrix> = pc.codewords().unwrap().filter(constant_weight).collect();
    c.bench_function("five-set systematic search", |b| b.iter(|| systematic_coordinate_sets(black_box(&words), 5)));
}

fn encoding(c: &mut Criterion) {
    let mut group = c.benchmark_group("reed-muller encode");
    for r in [3, 4, 5] {
        let pc = reed_muller(r);
        let infos = pc.random_information(64, 1);
        group.bench_function(format!("r={r}"), |b| {
            b.iter(|| infos.iter().map(|m| pc.encode(black_box(m)).unwrap()).collect::<Vec<_>>())
        });
    }
    group.finish();
}

fn decoding(c: &mut Criterion) {
    let pc = reed_muller(4);
    let info = pc.random_information(1, 2).pop().unwrap();
    let sent = pc.encode(&info).unwrap();
    let events = NoiseEvents { narrowband: vec![1, 5, 9], impulse: vec![0, 7, 12], ..Default::default() };
    let received = ReceivedMatrix::from_matrix(&apply_events(&sent, &events).unwrap());
    let opts = DecodeOptions::default();
    c.bench_function("decode r=4, 3 rows + 3 columns", |b| {
        b.iter(|| decode(black_box(&received), &pc, &opts).unwrap().unwrap())
    });
}

fn distance(c: &mut Criterion) {
    let pc = reed_muller(3);
    c.bench_function("min distance r=3", |b| b.iter(|| black_box(&pc).min_distance().unwrap()));
}

criterion_group!(benches, enumeration, encoding, decoding, distance);
criterion_main!(benches);
