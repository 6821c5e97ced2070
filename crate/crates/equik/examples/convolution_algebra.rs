//! Build the convolution algebra over the square of an S3-set and check it
//! against the fixed-point data.

use equik::catalogue::{catalogue, GroupKind};
use equik::gset::GSet;
use equik::kconv::{verify_dimension_identity, ConvolutionAlgebra};

fn main() {
    let kind = GroupKind::S3 { g2: false };
    let g = kind.realize().unwrap();
    let pieces: Vec<_> = catalogue(&kind)
        .unwrap()
        .into_iter()
        .map(|e| (e.label, e.subgroup))
        .collect();
    let y = GSet::build(&g, &pieces, &[1, 1, 1]).unwrap();
    println!("|Y| = {}", y.len());

    let algebra = ConvolutionAlgebra::new(y).unwrap();
    println!("orbits on Y x Y: {}", algebra.chart().num_orbits());
    println!("dim A = {}", algebra.dim());
    println!("unit law: {}", algebra.verify_unit());
    println!("associativity: {}", algebra.verify_associativity());
    println!("trace form nondegenerate: {}", algebra.trace_form_nondegenerate());

    let report = verify_dimension_identity(&algebra).unwrap();
    println!(
        "dimension identity: dim {} = sum of squared blocks {} -> {}",
        report.dim,
        report.expected_dim,
        report.passed()
    );
    println!(
        "center dim {} = nonzero blocks {}",
        report.center_dim, report.expected_center_dim
    );
    println!("block sizes: {:?}", report.blocks);
}
