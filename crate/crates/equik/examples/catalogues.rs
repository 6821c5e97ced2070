//! Print the subgroup catalogue of each group kind with its verification
//! report.

use equik::catalogue::{catalogue, verify_catalogue, GroupKind};

fn main() {
    let kinds = [
        GroupKind::S3 { g2: false },
        GroupKind::S3 { g2: true },
        GroupKind::S4,
        GroupKind::S5,
        GroupKind::F2 { d: 3, exceptional: false },
        GroupKind::F2 { d: 1, exceptional: true },
    ];
    for kind in kinds {
        println!("{}", kind.name());
        for entry in catalogue(&kind).unwrap() {
            let gens: Vec<String> = entry
                .subgroup
                .small_generating_set()
                .iter()
                .map(|p| p.cycle_notation())
                .collect();
            println!(
                "  {:8} order {:4}  <{}>",
                entry.label,
                entry.subgroup.order(),
                gens.join(", ")
            );
        }
        for check in verify_catalogue(&kind).unwrap() {
            println!(
                "  check {:30} {}",
                check.name,
                if check.passed { "ok" } else { "FAIL" }
            );
        }
        println!();
    }
}
