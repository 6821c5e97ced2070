//! Assemble the S4-set with multiplicities (1, 0, 1, 2, 0) over the S4
//! catalogue and verify its structural properties.

use equik::catalogue::{catalogue, GroupKind};
use equik::gset::{check_stabilizer_conjecture, verify_realization, GSet};
use equik::mdecomp::MSet;
use equik::Subgroup;

fn main() {
    let kind = GroupKind::S4;
    let g = kind.realize().unwrap();
    let pieces: Vec<_> = catalogue(&kind)
        .unwrap()
        .into_iter()
        .map(|e| (e.label, e.subgroup))
        .collect();
    let n = [1, 0, 1, 2, 0];
    let y = GSet::build(&g, &pieces, &n).unwrap();

    println!("|Y| = {}", y.len());
    for ((label, h), &k) in pieces.iter().zip(&n) {
        println!("  piece {:6} n = {}  [G:H] = {}", label, k, h.index_in_parent());
    }
    println!("action law: {}", y.verify_action_law());
    println!("fixed counts per class: {:?}", y.fixed_counts());
    println!("orbits on Y x Y: {}", y.square_orbit_count());

    let family: Vec<Subgroup> = pieces.iter().map(|(_, h)| h.clone()).collect();
    println!(
        "stabilizers conjugate into the catalogue: {}",
        check_stabilizer_conjecture(&y, &family)
    );
    let mset = MSet::new(&g);
    println!(
        "fixed-point multiplicities match the f-columns: {}",
        verify_realization(&y, &mset, &pieces).unwrap()
    );
}
