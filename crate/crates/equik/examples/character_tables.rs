//! Compute and print the exact character table of S4.

use equik::chartab::character_table;
use equik::Group;

fn main() {
    let g = Group::symmetric(4).unwrap();
    let table = character_table(&g);
    table.validate().unwrap();

    print!("{:10}", "");
    for c in table.classes() {
        print!("{:>12}", c.rep.cycle_notation());
    }
    println!();
    print!("{:10}", "size");
    for c in table.classes() {
        print!("{:>12}", c.size());
    }
    println!();
    for i in 0..table.num_irreps() {
        print!("chi_{i} d={:<3}", table.degree(i));
        for j in 0..table.num_classes() {
            print!("{:>12}", format!("{}", table.value(i, j)));
        }
        println!();
    }
    println!("\nconductor: {}", table.conductor());
}
