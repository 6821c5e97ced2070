//! Enumerate the inductive GF(2) subspace families and show the d = 3
//! partition against the full subspace lattice.

use equik::f2::{family, membership_report, FamilyMode, OrderedBasis};

fn main() {
    for mode in [FamilyMode::PaperConsistent, FamilyMode::StrictLiteral] {
        let counts: Vec<usize> = (0..=5)
            .map(|d| {
                let basis = OrderedBasis::standard(d).unwrap();
                family(&basis, mode).unwrap().len()
            })
            .collect();
        println!("{} counts for d = 0..5: {:?}", mode.as_str(), counts);
    }

    let basis = OrderedBasis::standard(3).unwrap();
    let report = membership_report(&basis, FamilyMode::PaperConsistent).unwrap();
    println!(
        "\nd = 3 paper-consistent: {} included, {} excluded",
        report.included.len(),
        report.excluded.len()
    );
    for s in &report.excluded {
        println!("  excluded: span{{{}}}", s.row_strings().join(", "));
    }
}
