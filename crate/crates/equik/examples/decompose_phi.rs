//! Round trip a coefficient vector through phi and back: assemble
//! phi = sum of n_H f_H, then recover n by exact decomposition.

use equik::catalogue::{catalogue, GroupKind};
use equik::mdecomp::{decompose, FMatrix, MSet};
use equik::ratmat::to_natural;

fn main() {
    let kind = GroupKind::S4;
    let g = kind.realize().unwrap();
    let mset = MSet::new(&g);
    let pieces: Vec<_> = catalogue(&kind)
        .unwrap()
        .into_iter()
        .map(|e| (e.label, e.subgroup))
        .collect();
    let fmatrix = FMatrix::new(&mset, &pieces).unwrap();

    let n = vec![1, 0, 1, 2, 0];
    let phi = fmatrix.apply(&n);
    println!("phi from n = {n:?}:");
    for (p, v) in mset.points().iter().zip(&phi.values) {
        println!(
            "  ({}, irrep {}) -> {}",
            mset.classes()[p.class_index].rep.cycle_notation(),
            p.irrep_index,
            to_natural(v).unwrap()
        );
    }

    let recovered = decompose(&phi, &fmatrix).unwrap();
    println!("\nrecovered coefficients:");
    for ((label, _), value) in pieces.iter().zip(&recovered) {
        println!("  {label:8} {value}");
    }
    assert_eq!(recovered, n);
}
