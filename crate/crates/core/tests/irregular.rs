use std::collections::{HashMap, HashSet};

use affprod::algebra::{all_ones, all_vectors};
use affprod::codes::{even_weight, full_space, repetition};
use affprod::{AffineCode, Field, FieldMatrix, IrregularSpec, LinearCode, ProductCode};

const F2: Field = Field::BINARY;

fn nested_specs() -> Vec<IrregularSpec> {
    let j4 = repetition(F2, 4).unwrap();
    let ev4 = even_weight(F2, 4).unwrap();
    let fs4 = full_space(F2, 4).unwrap();
    // odd-length repetition codes are not inside the even-weight codes
    let pair5 = LinearCode::spanned_by(F2, 5, &[vec![1, 1, 0, 0, 0]]).unwrap();
    let ev5 = even_weight(F2, 5).unwrap();
    let pair3 = LinearCode::spanned_by(F2, 3, &[vec![1, 1, 0]]).unwrap();
    let ev3 = even_weight(F2, 3).unwrap();
    let f3 = Field::new(3).unwrap();
    let z3 = even_weight(f3, 3).unwrap();
    let r3 = repetition(f3, 3).unwrap();
    vec![
        IrregularSpec::linear(
            vec![j4.clone(), j4.clone(), ev4.clone(), ev4.clone()],
            vec![j4.clone(), j4.clone(), ev4.clone(), ev4.clone()],
        )
        .unwrap(),
        IrregularSpec::linear(
            vec![j4.clone(), ev4.clone(), ev4.clone(), fs4.clone()],
            vec![ev4.clone(), ev4.clone(), fs4.clone(), fs4],
        )
        .unwrap(),
        // 5 rows of length 4, 4 columns of length 5
        IrregularSpec::linear(
            vec![j4.clone(), j4.clone(), ev4.clone(), ev4.clone(), ev4.clone()],
            vec![pair5, ev5.clone(), ev5.clone(), ev5],
        )
        .unwrap(),
        IrregularSpec::linear(vec![pair3.clone(), ev3.clone(), ev3], vec![pair3.clone(), pair3.clone(), pair3])
            .unwrap(),
        IrregularSpec::linear(vec![r3.clone(), z3.clone(), z3.clone()], vec![r3, z3.clone(), z3]).unwrap(),
    ]
}

/// Oracle: the row space of the encoded unit vectors.
fn span_rank(spec: &IrregularSpec) -> usize {
    let k = spec.dimension_bound();
    let rows: Vec<Vec<u8>> = (0..k)
        .map(|t| {
            let mut x = vec![0; k];
            x[t] = 1;
            spec.encode(&x).unwrap().as_slice().to_vec()
        })
        .collect();
    if rows.is_empty() {
        return 0;
    }
    FieldMatrix::from_rows(spec.field(), &rows).unwrap().rank()
}

#[test]
fn nested_chains_reach_the_dimension_formula() {
    for spec in nested_specs() {
        let words: HashSet<_> = spec.codewords().unwrap().collect();
        let p = spec.field().order() as usize;
        assert_eq!(words.len(), p.pow(spec.dimension_bound() as u32));
        assert_eq!(span_rank(&spec), spec.dimension_bound());
        assert!(words.iter().all(|w| spec.verify(w).unwrap()));
    }
}

#[test]
fn encoder_hits_every_constrained_matrix() {
    // oracle: scan every matrix for the binary 4x4 and 3x3 specs
    for spec in nested_specs().into_iter().filter(|s| s.field().is_binary() && s.shape().0 * s.shape().1 <= 16) {
        let (m, n) = spec.shape();
        let brute: HashSet<_> = all_vectors(F2, m * n)
            .map(|x| FieldMatrix::from_fn(F2, m, n, |i, j| x[i * n + j]))
            .filter(|c| spec.verify(c).unwrap())
            .collect();
        let encoded: HashSet<_> = spec.codewords().unwrap().collect();
        assert_eq!(encoded, brute);
    }
}

#[test]
fn leading_block_determines_the_codeword() {
    for spec in nested_specs() {
        let km = *spec.row_dims().last().unwrap();
        let ln = *spec.col_dims().last().unwrap();
        let mut seen: HashMap<FieldMatrix, FieldMatrix> = HashMap::new();
        for w in spec.codewords().unwrap() {
            let block = w.submatrix(0..ln, 0..km);
            if let Some(prev) = seen.insert(block, w.clone()) {
                assert_eq!(prev, w);
            }
        }
    }
}

#[test]
fn affine_translate_identity() {
    let base = LinearCode::spanned_by(F2, 4, &[all_ones(4), vec![1, 0, 1, 0]]).unwrap();
    let j4 = repetition(F2, 4).unwrap();
    let u = vec![0, 0, 1, 1];
    let chain = vec![j4.clone(), j4, base.clone(), base];
    let spec = IrregularSpec::new(chain.clone(), chain, u.clone(), u).unwrap();
    let linear = spec.without_reps();
    let translate = spec.translate_matrix().unwrap();
    for x in all_vectors(F2, spec.dimension_bound()) {
        let w = spec.encode(&x).unwrap();
        assert_eq!(w, &linear.encode(&x).unwrap() + &translate);
        assert!(spec.verify(&w).unwrap());
        assert!(!linear.verify(&w).unwrap());
    }
}

#[test]
fn uniform_chains_reduce_to_the_product_code() {
    let base = LinearCode::spanned_by(F2, 4, &[all_ones(4), vec![1, 0, 1, 0]]).unwrap();
    let u = vec![0, 0, 1, 1];
    let spec = IrregularSpec::new(vec![base.clone(); 4], vec![base.clone(); 4], u.clone(), u.clone()).unwrap();
    let ac = AffineCode::new(base, &u).unwrap();
    let pc = ProductCode::construction_i(ac.clone(), ac).unwrap();
    let a: HashSet<_> = spec.codewords().unwrap().collect();
    let b: HashSet<_> = pc.codewords().unwrap().collect();
    assert_eq!(a, b);

    let ev = even_weight(F2, 4).unwrap();
    let rep = repetition(F2, 3).unwrap();
    let spec = IrregularSpec::linear(vec![ev.clone(); 3], vec![rep.clone(); 4]).unwrap();
    let pc = ProductCode::classical(ev, rep).unwrap();
    let a: HashSet<_> = spec.codewords().unwrap().collect();
    let b: HashSet<_> = pc.codewords().unwrap().collect();
    assert_eq!(a, b);
}

#[test]
fn bound_is_only_an_upper_bound_without_nesting() {
    // rows alternate between two incomparable 2-dimensional codes
    let a = LinearCode::spanned_by(F2, 4, &[all_ones(4), vec![1, 1, 0, 0]]).unwrap();
    let b = LinearCode::spanned_by(F2, 4, &[all_ones(4), vec![1, 0, 1, 0]]).unwrap();
    let fs = full_space(F2, 4).unwrap();
    let spec = IrregularSpec::linear(vec![a.clone(), b.clone(), a, b], vec![fs; 4]).unwrap();
    assert!(!spec.nested_rows());
    let actual = all_vectors(F2, 16)
        .map(|x| FieldMatrix::from_fn(F2, 4, 4, |i, j| x[i * 4 + j]))
        .filter(|c| spec.verify(c).unwrap())
        .count();
    assert!(actual <= 1 << spec.dimension_bound());
    assert!(spec.encode(&vec![0; spec.dimension_bound()]).is_err());
}
