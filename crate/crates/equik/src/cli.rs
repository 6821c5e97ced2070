//! Command line interface.
//!
//! Subcommands cover the whole pipeline: `cf-enum` (subspace families),
//! `catalogue`, `mset`, `fmatrix`, `decompose`, `yprime`, `kconv` and
//! `verify` (the full invariant suite).  Output is JSON by default or an
//! aligned text table with `--format table`; both carry a schema version.
//! Exit codes: 0 on success, 2 on solver errors, 3 on validation errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::catalogue::{catalogue, verify_catalogue, CatalogueEntry, GroupKind};
use crate::error::{Error, Result};
use crate::f2::{family, family_naive, membership_report, FamilyMode, OrderedBasis};
use crate::group::{Group, Subgroup};
use crate::gset::{check_stabilizer_conjecture, verify_realization, GSet};
use crate::io::{to_json, PhiFile, SCHEMA_VERSION};
use crate::kconv::{verify_dimension_identity, ConvolutionAlgebra};
use crate::mdecomp::{decompose, FMatrix, MSet};
use crate::ratmat::to_natural;

#[derive(Parser)]
#[command(name = "equik", version, about = "Exact computations with finite group actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

fn parse_format(s: &str) -> Result<Format> {
    match s {
        "json" => Ok(Format::Json),
        "table" => Ok(Format::Table),
        other => Err(Error::InvalidInput(format!(
            "unknown format '{other}' (expected json or table)"
        ))),
    }
}

fn parse_mode(s: &str) -> Result<FamilyMode> {
    s.parse::<FamilyMode>()
}

fn parse_kind(kind: &str, d: Option<usize>, exceptional: bool) -> Result<GroupKind> {
    let needs_f2 = kind == "F2";
    if !needs_f2 && (d.is_some() || exceptional) {
        return Err(Error::InvalidFlags(
            "--d and --exceptional apply only to --kind F2".into(),
        ));
    }
    match kind {
        "S3" => Ok(GroupKind::S3 { g2: false }),
        "S3-G2" => Ok(GroupKind::S3 { g2: true }),
        "S4" => Ok(GroupKind::S4),
        "S5" => Ok(GroupKind::S5),
        "F2" => {
            let d = d.ok_or_else(|| Error::InvalidFlags("--kind F2 requires --d".into()))?;
            Ok(GroupKind::F2 { d, exceptional })
        }
        other => Err(Error::InvalidInput(format!(
            "unknown kind '{other}' (expected S3, S3-G2, S4, S5 or F2)"
        ))),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the inductive family of GF(2) subspaces for dimension d
    CfEnum {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "paper-consistent")]
        mode: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// List the subgroup catalogue of a group kind
    Catalogue {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        exceptional: bool,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Print the canonical ordering of M(G) points
    Mset {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        exceptional: bool,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Emit the matrix of subgroup multiplicity functions on M(G)
    Fmatrix {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        exceptional: bool,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Solve phi = sum of n_H f_H in natural numbers
    Decompose {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        exceptional: bool,
        #[arg(long)]
        phi: PathBuf,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Decompose phi and build the resulting G-set
    Yprime {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        exceptional: bool,
        #[arg(long)]
        phi: PathBuf,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Build the convolution algebra on the square of the G-set of phi
    Kconv {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        exceptional: bool,
        #[arg(long)]
        phi: PathBuf,
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run the full invariant suite and report each check
    Verify {
        #[arg(long, default_value = "json")]
        format: String,
    },
}

#[derive(Serialize)]
struct CfEnumReport {
    schema: u32,
    d: usize,
    mode: String,
    included: Vec<Vec<String>>,
    excluded: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct CatalogueEntryReport {
    label: String,
    order: usize,
    index: usize,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct CatalogueReport {
    schema: u32,
    kind: String,
    group_order: usize,
    entries: Vec<CatalogueEntryReport>,
}

#[derive(Serialize)]
struct MPointReport {
    index: usize,
    class: String,
    centralizer_order: usize,
    irrep: usize,
    degree: u64,
}

#[derive(Serialize)]
struct MsetReport {
    schema: u32,
    kind: String,
    size: usize,
    points: Vec<MPointReport>,
}

#[derive(Serialize)]
struct FmatrixRow {
    class: String,
    irrep: usize,
    values: Vec<u64>,
}

#[derive(Serialize)]
struct FmatrixReport {
    schema: u32,
    kind: String,
    labels: Vec<String>,
    rows: Vec<FmatrixRow>,
    rank: usize,
    full_column_rank: bool,
}

#[derive(Serialize)]
struct DecomposeReport {
    schema: u32,
    kind: String,
    coefficients: Vec<Coefficient>,
}

#[derive(Serialize)]
struct Coefficient {
    label: String,
    n: u64,
}

#[derive(Serialize)]
struct YprimePiece {
    label: String,
    n: u64,
    piece_size: usize,
    stabilizer_generators: Vec<String>,
}

#[derive(Serialize)]
struct YprimeReport {
    schema: u32,
    kind: String,
    size: usize,
    pieces: Vec<YprimePiece>,
    fixed_counts: Vec<FixedCount>,
    action_law: bool,
    stabilizer_conjecture: bool,
    realizes_phi: bool,
}

#[derive(Serialize)]
struct FixedCount {
    class: String,
    count: usize,
}

#[derive(Serialize)]
struct KconvReport {
    schema: u32,
    kind: String,
    yprime_size: usize,
    num_orbits: usize,
    dim: usize,
    expected_dim: u64,
    center_dim: usize,
    expected_center_dim: usize,
    blocks: Vec<u64>,
    unit_law: bool,
    associativity: bool,
    trace_form_nondegenerate: bool,
    dimension_identity: bool,
}

#[derive(Serialize)]
struct CheckLine {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyReport {
    schema: u32,
    checks: Vec<CheckLine>,
    passed: bool,
}

fn family_pieces(kind: &GroupKind) -> Result<Vec<(String, Subgroup)>> {
    Ok(catalogue(kind)?
        .into_iter()
        .map(|e: CatalogueEntry| (e.label, e.subgroup))
        .collect())
}

fn gens_notation(h: &Subgroup) -> Vec<String> {
    h.small_generating_set()
        .iter()
        .map(|p| p.cycle_notation())
        .collect()
}

fn pad_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut width = vec![0usize; cols];
    for r in rows {
        for (i, cell) in r.iter().enumerate() {
            width[i] = width[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (i, cell) in r.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < r.len() {
                for _ in cell.len()..width[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn run_cf_enum(d: usize, mode: &str, format: &str) -> Result<String> {
    let format = parse_format(format)?;
    let mode = parse_mode(mode)?;
    let basis = OrderedBasis::standard(d)?;
    let report = membership_report(&basis, mode)?;
    let doc = CfEnumReport {
        schema: SCHEMA_VERSION,
        d,
        mode: mode.as_str().to_string(),
        included: report.included.iter().map(|s| s.row_strings()).collect(),
        excluded: report.excluded.iter().map(|s| s.row_strings()).collect(),
    };
    Ok(match format {
        Format::Json => to_json(&doc),
        Format::Table => {
            let mut rows = vec![vec![format!("schema {}", doc.schema)]];
            rows.push(vec![format!("d {}", doc.d), format!("mode {}", doc.mode)]);
            for (tag, set) in [("included", &doc.included), ("excluded", &doc.excluded)] {
                for s in set {
                    rows.push(vec![tag.to_string(), format!("{{{}}}", s.join(", "))]);
                }
            }
            pad_table(&rows)
        }
    })
}

fn run_catalogue(kind: &GroupKind, format: Format) -> Result<String> {
    let g = kind.realize()?;
    let entries = catalogue(kind)?;
    let doc = CatalogueReport {
        schema: SCHEMA_VERSION,
        kind: kind.name(),
        group_order: g.order(),
        entries: entries
            .iter()
            .map(|e| CatalogueEntryReport {
                label: e.label.clone(),
                order: e.subgroup.order(),
                index: e.subgroup.index_in_parent(),
                generators: gens_notation(&e.subgroup),
            })
            .collect(),
    };
    Ok(match format {
        Format::Json => to_json(&doc),
        Format::Table => {
            let mut rows = vec![
                vec![format!("schema {}", doc.schema), doc.kind.clone()],
                vec!["label".into(), "order".into(), "index".into(), "generators".into()],
            ];
            for e in &doc.entries {
                rows.push(vec![
                    e.label.clone(),
                    e.order.to_string(),
                    e.index.to_string(),
                    e.generators.join(" "),
                ]);
            }
            pad_table(&rows)
        }
    })
}

fn mset_report(kind: &GroupKind) -> Result<MsetReport> {
    let g = kind.realize()?;
    let mset = MSet::new(&g);
    let points = mset
        .points()
        .iter()
        .enumerate()
        .map(|(index, p)| MPointReport {
            index,
            class: mset.classes()[p.class_index].rep.cycle_notation(),
            centralizer_order: mset.centralizer(p.class_index).order(),
            irrep: p.irrep_index,
            degree: mset.table(p.class_index).degree(p.irrep_index),
        })
        .collect();
    Ok(MsetReport {
        schema: SCHEMA_VERSION,
        kind: kind.name(),
        size: mset.len(),
        points,
    })
}

fn run_mset(kind: &GroupKind, format: Format) -> Result<String> {
    let doc = mset_report(kind)?;
    Ok(match format {
        Format::Json => to_json(&doc),
        Format::Table => {
            let mut rows = vec![
                vec![format!("schema {}", doc.schema), doc.kind.clone(), format!("size {}", doc.size)],
                vec!["index".into(), "class".into(), "|Z|".into(), "irrep".into(), "degree".into()],
            ];
            for p in &doc.points {
                rows.push(vec![
                    p.index.to_string(),
                    p.class.clone(),
                    p.centralizer_order.to_string(),
                    p.irrep.to_string(),
                    p.degree.to_string(),
                ]);
            }
            pad_table(&rows)
        }
    })
}

fn fmatrix_report(kind: &GroupKind) -> Result<FmatrixReport> {
    let g = kind.realize()?;
    let mset = MSet::new(&g);
    let pieces = family_pieces(kind)?;
    let fmatrix = FMatrix::new(&mset, &pieces)?;
    let rows = mset
        .points()
        .iter()
        .enumerate()
        .map(|(r, p)| FmatrixRow {
            class: mset.classes()[p.class_index].rep.cycle_notation(),
            irrep: p.irrep_index,
            values: fmatrix
                .columns
                .iter()
                .map(|c| to_natural(&c.values[r]).expect("matrix entries are natural"))
                .collect(),
        })
        .collect();
    Ok(FmatrixReport {
        schema: SCHEMA_VERSION,
        kind: kind.name(),
        labels: fmatrix.labels.clone(),
        rows,
        rank: fmatrix.rank(),
        full_column_rank: fmatrix.has_full_column_rank(),
    })
}

fn run_fmatrix(kind: &GroupKind, format: Format) -> Result<String> {
    let doc = fmatrix_report(kind)?;
    Ok(match format {
        Format::Json => to_json(&doc),
        Format::Table => {
            let mut rows = vec![
                vec![format!("schema {}", doc.schema), doc.kind.clone(), format!("rank {}", doc.rank)],
                {
                    let mut h = vec!["class".into(), "irrep".into()];
                    h.extend(doc.labels.iter().cloned());
                    h
                },
            ];
            for r in &doc.rows {
                let mut row = vec![r.class.clone(), r.irrep.to_string()];
                row.extend(r.values.iter().map(|v| v.to_string()));
                rows.push(row);
            }
            pad_table(&rows)
        }
    })
}

fn load_and_decompose(
    kind: &GroupKind,
    phi_path: &PathBuf,
) -> Result<(Group, MSet, Vec<(String, Subgroup)>, Vec<u64>)> {
    let g = kind.realize()?;
    let mset = MSet::new(&g);
    let pieces = family_pieces(kind)?;
    let fmatrix = FMatrix::new(&mset, &pieces)?;
    let phi = PhiFile::load(phi_path)?.class_fn(&mset)?;
    let n = decompose(&phi, &fmatrix)?;
    Ok((g, mset, pieces, n))
}

fn run_decompose(kind: &GroupKind, phi_path: &PathBuf, format: Format) -> Result<String> {
    let (_, _, pieces, n) = load_and_decompose(kind, phi_path)?;
    let doc = DecomposeReport {
        schema: SCHEMA_VERSION,
        kind: kind.name(),
        coefficients: pieces
            .iter()
            .zip(&n)
            .map(|((label, _), &n)| Coefficient { label: label.clone(), n })
            .collect(),
    };
    Ok(match format {
        Format::Json => to_json(&doc),
        Format::Table => {
            let mut rows = vec![
                vec![format!("schema {}", doc.schema), doc.kind.clone()],
                vec!["label".into(), "n".into()],
            ];
            for c in &doc.coefficients {
                rows.push(vec![c.label.clone(), c.n.to_string()]);
            }
            pad_table(&rows)
        }
    })
}

fn yprime_report(kind: &GroupKind, phi_path: &PathBuf) -> Result<(GSet, YprimeReport)> {
    let (g, mset, pieces, n) = load_and_decompose(kind, phi_path)?;
    let y = GSet::build(&g, &pieces, &n)?;
    let family: Vec<Subgroup> = pieces.iter().map(|(_, h)| h.clone()).collect();
    let report = YprimeReport {
        schema: SCHEMA_VERSION,
        kind: kind.name(),
        size: y.len(),
        pieces: pieces
            .iter()
            .zip(&n)
            .map(|((label, h), &n)| YprimePiece {
                label: label.clone(),
                n,
                piece_size: h.index_in_parent(),
                stabilizer_generators: gens_notation(h),
            })
            .collect(),
        fixed_counts: g
            .conjugacy_classes()
            .iter()
            .map(|c| FixedCount {
                class: c.rep.cycle_notation(),
                count: y.fixed_points(&c.rep).len(),
            })
            .collect(),
        action_law: y.verify_action_law(),
        stabilizer_conjecture: check_stabilizer_conjecture(&y, &family),
        realizes_phi: verify_realization(&y, &mset, &pieces)?,
    };
    Ok((y, report))
}

fn run_yprime(kind: &GroupKind, phi_path: &PathBuf, format: Format) -> Result<String> {
    let (_, doc) = yprime_report(kind, phi_path)?;
    Ok(match format {
        Format::Json => to_json(&doc),
        Format::Table => {
            let mut rows = vec![
                vec![format!("schema {}", doc.schema), doc.kind.clone(), format!("size {}", doc.size)],
                vec!["label".into(), "n".into(), "piece_size".into(), "generators".into()],
            ];
            for p in &doc.pieces {
                rows.push(vec![
                    p.label.clone(),
                    p.n.to_string(),
                    p.piece_size.to_string(),
                    p.stabilizer_generators.join(" "),
                ]);
            }
            rows.push(vec![
                format!("action_law {}", doc.action_law),
                format!("stabilizers {}", doc.stabilizer_conjecture),
                format!("realizes_phi {}", doc.realizes_phi),
            ]);
            pad_table(&rows)
        }
    })
}

fn run_kconv(kind: &GroupKind, phi_path: &PathBuf, check: &str, format: Format) -> Result<String> {
    if check != "all" && check != "dims" {
        return Err(Error::InvalidInput(format!(
            "unknown check set '{check}' (expected all or dims)"
        )));
    }
    let (g, _, pieces, n) = load_and_decompose(kind, phi_path)?;
    let y = GSet::build(&g, &pieces, &n)?;
    let size = y.len();
    let algebra = ConvolutionAlgebra::new(y)?;
    let identity = verify_dimension_identity(&algebra)?;
    let full = check == "all";
    let doc = KconvReport {
        schema: SCHEMA_VERSION,
        kind: kind.name(),
        yprime_size: size,
        num_orbits: algebra.chart().num_orbits(),
        dim: algebra.dim(),
        expected_dim: identity.expected_dim,
        center_dim: identity.center_dim,
        expected_center_dim: identity.expected_center_dim,
        blocks: identity.blocks.clone(),
        unit_law: !full || algebra.verify_unit(),
        associativity: !full || algebra.verify_associativity(),
        trace_form_nondegenerate: !full || algebra.trace_form_nondegenerate(),
        dimension_identity: identity.passed(),
    };
    Ok(match format {
        Format::Json => to_json(&doc),
        Format::Table => {
            let rows = vec![
                vec![format!("schema {}", doc.schema), doc.kind.clone()],
                vec!["size".into(), doc.yprime_size.to_string()],
                vec!["orbits".into(), doc.num_orbits.to_string()],
                vec!["dim".into(), doc.dim.to_string()],
                vec!["center".into(), doc.center_dim.to_string()],
                vec![
                    "blocks".into(),
                    doc.blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" "),
                ],
                vec!["unit_law".into(), doc.unit_law.to_string()],
                vec!["associativity".into(), doc.associativity.to_string()],
                vec!["trace_form".into(), doc.trace_form_nondegenerate.to_string()],
                vec!["dimension_identity".into(), doc.dimension_identity.to_string()],
            ];
            pad_table(&rows)
        }
    })
}

fn all_kinds() -> Vec<GroupKind> {
    let mut kinds = vec![
        GroupKind::S3 { g2: false },
        GroupKind::S3 { g2: true },
        GroupKind::S4,
        GroupKind::S5,
    ];
    for d in 0..=4 {
        kinds.push(GroupKind::F2 { d, exceptional: false });
    }
    kinds.push(GroupKind::F2 { d: 1, exceptional: true });
    kinds
}

fn verify_checks() -> Result<Vec<CheckLine>> {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(CheckLine {
            name: name.to_string(),
            passed,
            detail,
        });
    };

    // subspace family counts and the d = 3 exclusions
    let expected_counts = [1usize, 2, 5, 14, 42, 132];
    let mut counts = Vec::new();
    let mut ok = true;
    for d in 0..=5 {
        let basis = OrderedBasis::standard(d)?;
        let fam = family(&basis, FamilyMode::PaperConsistent)?;
        counts.push(fam.len());
        ok &= fam.len() == expected_counts[d];
    }
    push("family-counts", ok, format!("{counts:?}"));

    let basis3 = OrderedBasis::standard(3)?;
    let report3 = membership_report(&basis3, FamilyMode::PaperConsistent)?;
    let excluded: Vec<Vec<String>> = report3.excluded.iter().map(|s| s.row_strings()).collect();
    // the line through xi1 + xi3 and the plane spanned by xi1 + xi2, xi2 + xi3
    let expected_excluded = vec![
        crate::f2::Subspace2::span(3, &[0b101]),
        crate::f2::Subspace2::span(3, &[0b011, 0b110]),
    ];
    let ok = report3.included.len() == 14 && report3.excluded == expected_excluded;
    push("family-d3-exclusions", ok, format!("{excluded:?}"));

    let mut ok = true;
    for d in 0..=4 {
        let basis = OrderedBasis::standard(d)?;
        for mode in [FamilyMode::PaperConsistent, FamilyMode::StrictLiteral] {
            ok &= family(&basis, mode)? == family_naive(&basis, mode)?;
        }
    }
    push("family-dual-implementation", ok, "memoized = naive, d <= 4".into());

    // catalogues
    for kind in all_kinds() {
        let results = verify_catalogue(&kind)?;
        let ok = results.iter().all(|c| c.passed);
        let detail = results
            .iter()
            .map(|c| format!("{}:{}", c.name, if c.passed { "ok" } else { "FAIL" }))
            .collect::<Vec<_>>()
            .join(" ");
        push(&format!("catalogue-{}", kind.name()), ok, detail);
    }

    // M-set sizes
    let mut ok = true;
    let mut detail = Vec::new();
    for (kind, expected) in [
        (GroupKind::S3 { g2: false }, 8usize),
        (GroupKind::S4, 21),
        (GroupKind::S5, 39),
    ] {
        let size = MSet::new(&kind.realize()?).len();
        ok &= size == expected;
        detail.push(format!("{}={}", kind.name(), size));
    }
    for d in 0..=4usize {
        let size = MSet::new(&Group::elementary_abelian2(d)?).len();
        ok &= size == 4usize.pow(d as u32);
        detail.push(format!("F2-d{d}={size}"));
    }
    push("mset-sizes", ok, detail.join(" "));

    // f-matrix normalization and ranks
    for (kind, expected_rank) in [
        (GroupKind::S3 { g2: false }, 3usize),
        (GroupKind::S3 { g2: true }, 2),
        (GroupKind::S4, 5),
        (GroupKind::S5, 7),
        (GroupKind::F2 { d: 3, exceptional: false }, 14),
        (GroupKind::F2 { d: 4, exceptional: false }, 42),
    ] {
        let g = kind.realize()?;
        let mset = MSet::new(&g);
        let pieces = family_pieces(&kind)?;
        let fmatrix = FMatrix::new(&mset, &pieces)?;
        let normalized = fmatrix
            .columns
            .iter()
            .all(|c| to_natural(&c.values[0]) == Some(1));
        let natural = fmatrix
            .columns
            .iter()
            .all(|c| c.values.iter().all(|v| to_natural(v).is_some()));
        let rank = fmatrix.rank();
        push(
            &format!("fmatrix-{}", kind.name()),
            normalized && natural && rank == expected_rank && fmatrix.cols() == expected_rank,
            format!("rank {rank} of {} columns", fmatrix.cols()),
        );
    }

    // decomposition round trips on fixed coefficient vectors
    for kind in [
        GroupKind::S3 { g2: false },
        GroupKind::S3 { g2: true },
        GroupKind::S4,
        GroupKind::S5,
        GroupKind::F2 { d: 2, exceptional: false },
    ] {
        let g = kind.realize()?;
        let mset = MSet::new(&g);
        let fmatrix = FMatrix::new(&mset, &family_pieces(&kind)?)?;
        let mut ok = true;
        for shift in 0..3u64 {
            let n: Vec<u64> = (0..fmatrix.cols() as u64).map(|i| (i + shift) % 6).collect();
            ok &= decompose(&fmatrix.apply(&n), &fmatrix)? == n;
        }
        push(&format!("round-trip-{}", kind.name()), ok, "3 fixed vectors".into());
    }

    // assembled G-sets
    for (kind, n) in [
        (GroupKind::S3 { g2: false }, vec![1u64, 1, 1]),
        (GroupKind::S4, vec![1, 0, 1, 2, 0]),
    ] {
        let g = kind.realize()?;
        let mset = MSet::new(&g);
        let pieces = family_pieces(&kind)?;
        let y = GSet::build(&g, &pieces, &n)?;
        let family: Vec<Subgroup> = pieces.iter().map(|(_, h)| h.clone()).collect();
        let ok = y.verify_action_law()
            && y.verify_fixed_counts()?
            && check_stabilizer_conjecture(&y, &family)
            && verify_realization(&y, &mset, &pieces)?;
        push(&format!("yprime-{}", kind.name()), ok, format!("{} points", y.len()));
    }

    // convolution algebras
    for (name, group, pieces, n) in [
        (
            "point",
            Group::symmetric(3)?,
            vec![("S3".to_string(), Group::symmetric(3)?.full_subgroup())],
            vec![1u64],
        ),
        (
            "regular-C2",
            Group::symmetric(2)?,
            vec![("1".to_string(), Group::symmetric(2)?.trivial_subgroup())],
            vec![1],
        ),
        (
            "regular-S3",
            Group::symmetric(3)?,
            vec![("1".to_string(), Group::symmetric(3)?.trivial_subgroup())],
            vec![1],
        ),
    ] {
        let y = GSet::build(&group, &pieces, &n)?;
        let algebra = ConvolutionAlgebra::new(y)?;
        let identity = verify_dimension_identity(&algebra)?;
        let ok = algebra.verify_unit()
            && algebra.verify_associativity()
            && algebra.trace_form_nondegenerate()
            && identity.passed();
        push(&format!("kconv-{name}"), ok, format!("dim {}", algebra.dim()));
    }
    for (kind, n) in [
        (GroupKind::S3 { g2: false }, vec![1u64, 1, 1]),
        (GroupKind::S4, vec![1, 0, 1, 2, 0]),
    ] {
        let g = kind.realize()?;
        let pieces = family_pieces(&kind)?;
        let y = GSet::build(&g, &pieces, &n)?;
        let algebra = ConvolutionAlgebra::new(y)?;
        let identity = verify_dimension_identity(&algebra)?;
        let ok = algebra.verify_unit()
            && algebra.verify_associativity()
            && algebra.trace_form_nondegenerate()
            && identity.passed();
        push(
            &format!("kconv-{}", kind.name()),
            ok,
            format!("dim {} center {}", algebra.dim(), identity.center_dim),
        );
    }

    Ok(checks)
}

fn run_verify(format: Format) -> Result<(String, i32)> {
    let checks = verify_checks()?;
    let passed = checks.iter().all(|c| c.passed);
    let doc = VerifyReport {
        schema: SCHEMA_VERSION,
        checks,
        passed,
    };
    let text = match format {
        Format::Json => to_json(&doc),
        Format::Table => {
            let mut rows = vec![vec![format!("schema {}", doc.schema)]];
            for c in &doc.checks {
                rows.push(vec![
                    c.name.clone(),
                    if c.passed { "ok".into() } else { "FAIL".into() },
                    c.detail.clone(),
                ]);
            }
            rows.push(vec![if doc.passed { "passed".into() } else { "FAILED".into() }]);
            pad_table(&rows)
        }
    };
    Ok((text, if passed { 0 } else { 3 }))
}

fn dispatch(cli: Cli) -> Result<(String, i32)> {
    match cli.command {
        Command::CfEnum { d, mode, format } => Ok((run_cf_enum(d, &mode, &format)?, 0)),
        Command::Catalogue { kind, d, exceptional, format } => {
            let format = parse_format(&format)?;
            let kind = parse_kind(&kind, d, exceptional)?;
            Ok((run_catalogue(&kind, format)?, 0))
        }
        Command::Mset { kind, d, exceptional, format } => {
            let format = parse_format(&format)?;
            let kind = parse_kind(&kind, d, exceptional)?;
            Ok((run_mset(&kind, format)?, 0))
        }
        Command::Fmatrix { kind, d, exceptional, format } => {
            let format = parse_format(&format)?;
            let kind = parse_kind(&kind, d, exceptional)?;
            Ok((run_fmatrix(&kind, format)?, 0))
        }
        Command::Decompose { kind, d, exceptional, phi, format } => {
            let format = parse_format(&format)?;
            let kind = parse_kind(&kind, d, exceptional)?;
            Ok((run_decompose(&kind, &phi, format)?, 0))
        }
        Command::Yprime { kind, d, exceptional, phi, format } => {
            let format = parse_format(&format)?;
            let kind = parse_kind(&kind, d, exceptional)?;
            Ok((run_yprime(&kind, &phi, format)?, 0))
        }
        Command::Kconv { kind, d, exceptional, phi, check, format } => {
            let format = parse_format(&format)?;
            let kind = parse_kind(&kind, d, exceptional)?;
            Ok((run_kconv(&kind, &phi, &check, format)?, 0))
        }
        Command::Verify { format } => run_verify(parse_format(&format)?),
    }
}

/// Parse the arguments, run the subcommand, print the document and return
/// the process exit code.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are successes, not flag misuse
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_parsing() {
        assert!(matches!(parse_kind("S3", None, false), Ok(GroupKind::S3 { g2: false })));
        assert!(matches!(parse_kind("S3-G2", None, false), Ok(GroupKind::S3 { g2: true })));
        assert!(matches!(
            parse_kind("F2", Some(3), false),
            Ok(GroupKind::F2 { d: 3, exceptional: false })
        ));
        assert!(parse_kind("F2", None, false).is_err());
        assert!(parse_kind("S4", Some(2), false).is_err());
        assert!(parse_kind("S4", None, true).is_err());
        assert!(parse_kind("Q8", None, false).is_err());
    }

    #[test]
    fn table_output_is_aligned() {
        let kind = GroupKind::S3 { g2: false };
        let text = run_catalogue(&kind, Format::Table).unwrap();
        assert!(text.contains("label"));
        assert!(text.lines().count() >= 5);
    }

    #[test]
    fn cf_enum_d3_counts() {
        let text = run_cf_enum(3, "paper-consistent", "json").unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["included"].as_array().unwrap().len(), 14);
        assert_eq!(v["excluded"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn mset_s4_size() {
        let doc = mset_report(&GroupKind::S4).unwrap();
        assert_eq!(doc.size, 21);
        assert_eq!(doc.points.len(), 21);
        assert_eq!(doc.points[0].class, "()");
        assert_eq!(doc.points[0].irrep, 0);
    }

    #[test]
    fn format_validation() {
        assert!(parse_format("json").is_ok());
        assert!(parse_format("yaml").is_err());
    }
}
