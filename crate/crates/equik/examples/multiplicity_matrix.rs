//! Build M(S4) and the matrix of subgroup multiplicity functions, then
//! check its column rank.

use equik::catalogue::{catalogue, GroupKind};
use equik::mdecomp::{FMatrix, MSet};
use equik::ratmat::to_natural;
use equik::Group;

fn main() {
    let g = Group::symmetric(4).unwrap();
    let mset = MSet::new(&g);
    println!("|M(S4)| = {}", mset.len());

    let pieces: Vec<_> = catalogue(&GroupKind::S4)
        .unwrap()
        .into_iter()
        .map(|e| (e.label, e.subgroup))
        .collect();
    let fmatrix = FMatrix::new(&mset, &pieces).unwrap();

    print!("{:16}", "(class, irrep)");
    for label in &fmatrix.labels {
        print!("{label:>8}");
    }
    println!();
    for (r, p) in mset.points().iter().enumerate() {
        let class = mset.classes()[p.class_index].rep.cycle_notation();
        print!("{:16}", format!("({class}, {})", p.irrep_index));
        for col in &fmatrix.columns {
            print!("{:>8}", to_natural(&col.values[r]).unwrap());
        }
        println!();
    }
    println!(
        "\nrank {} of {} columns (full column rank: {})",
        fmatrix.rank(),
        fmatrix.cols(),
        fmatrix.has_full_column_rank()
    );
}
