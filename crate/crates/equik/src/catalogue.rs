//! Case-by-case subgroup catalogues for the acting group.
//!
//! The acting group is one of S3 (two variants), S4, S5, or an elementary
//! abelian 2-group; each case comes with a fixed list of subgroups and fixed
//! embedding conventions.  On 0-based points, the involution defining D8 is
//! (0 3)(1 2).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::f2::{family, FamilyMode, OrderedBasis, Subspace2};
use crate::group::{Group, Subgroup};
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    S3 {
        /// Drops the trivial subgroup from the catalogue.
        g2: bool,
    },
    S4,
    S5,
    F2 {
        d: usize,
        /// Catalogue collapses to the trivial subgroup alone; only
        /// meaningful at d = 1.
        exceptional: bool,
    },
}

impl GroupKind {
    pub fn name(&self) -> String {
        match self {
            GroupKind::S3 { g2: false } => "S3".into(),
            GroupKind::S3 { g2: true } => "S3-G2".into(),
            GroupKind::S4 => "S4".into(),
            GroupKind::S5 => "S5".into(),
            GroupKind::F2 { d, exceptional } => {
                if *exceptional {
                    format!("F2-d{d}-exceptional")
                } else {
                    format!("F2-d{d}")
                }
            }
        }
    }

    pub fn realize(&self) -> Result<Group> {
        match self {
            GroupKind::S3 { .. } => Group::symmetric(3),
            GroupKind::S4 => Group::symmetric(4),
            GroupKind::S5 => Group::symmetric(5),
            GroupKind::F2 { d, exceptional } => {
                if *exceptional && *d != 1 {
                    return Err(Error::InvalidFlags(
                        "the exceptional catalogue only exists at d = 1".into(),
                    ));
                }
                Group::elementary_abelian2(*d)
            }
        }
    }
}

/// A named catalogue member.
#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub label: String,
    pub subgroup: Subgroup,
}

/// The subgroup catalogue of the given kind, in its fixed order.
pub fn catalogue(kind: &GroupKind) -> Result<Vec<CatalogueEntry>> {
    let g = kind.realize()?;
    let entry = |label: &str, gens: &[Perm]| -> Result<CatalogueEntry> {
        Ok(CatalogueEntry {
            label: label.to_string(),
            subgroup: g.subgroup_generated(gens)?,
        })
    };
    let n = g.degree();
    let t = |a: u8, b: u8| Perm::from_cycles(n, &[vec![a, b]]).unwrap();
    let c = |pts: &[u8]| Perm::from_cycles(n, &[pts.to_vec()]).unwrap();
    match kind {
        GroupKind::S3 { g2 } => {
            let mut out = Vec::new();
            if !*g2 {
                out.push(entry("1", &[])?);
            }
            out.push(entry("S2", &[t(0, 1)])?);
            out.push(entry("S3", &[t(0, 1), c(&[0, 1, 2])])?);
            Ok(out)
        }
        GroupKind::S4 => Ok(vec![
            entry("S2", &[t(0, 1)])?,
            entry("S3", &[t(0, 1), c(&[0, 1, 2])])?,
            entry("S4", &[t(0, 1), c(&[0, 1, 2, 3])])?,
            entry("S2xS2", &[t(0, 1), t(2, 3)])?,
            d8_entry(&g)?,
        ]),
        GroupKind::S5 => Ok(vec![
            entry("S2", &[t(0, 1)])?,
            entry("S3", &[t(0, 1), c(&[0, 1, 2])])?,
            entry("S4", &[t(0, 1), c(&[0, 1, 2, 3])])?,
            entry("S5", &[t(0, 1), c(&[0, 1, 2, 3, 4])])?,
            entry("S2xS2", &[t(0, 1), t(2, 3)])?,
            entry("S2xS3", &[t(0, 1), t(2, 3), c(&[2, 3, 4])])?,
            d8_entry(&g)?,
        ]),
        GroupKind::F2 { d, exceptional } => {
            if *exceptional {
                if *d != 1 {
                    return Err(Error::InvalidFlags(
                        "the exceptional catalogue only exists at d = 1".into(),
                    ));
                }
                return Ok(vec![CatalogueEntry {
                    label: "1".into(),
                    subgroup: g.trivial_subgroup(),
                }]);
            }
            let basis = OrderedBasis::standard(*d)?;
            let fam: BTreeSet<Subspace2> = family(&basis, FamilyMode::PaperConsistent)?;
            fam.into_iter()
                .map(|space| {
                    Ok(CatalogueEntry {
                        label: if space.dim() == 0 {
                            "1".to_string()
                        } else {
                            space.row_strings().join(",")
                        },
                        subgroup: subspace_subgroup(&g, &space)?,
                    })
                })
                .collect()
        }
    }
}

/// D8 as the centralizer of the involution (0 3)(1 2), computed inside the
/// embedded S4 and pushed into the ambient group.
fn d8_entry(g: &Group) -> Result<CatalogueEntry> {
    let n = g.degree();
    let invol = Perm::from_cycles(n, &[vec![0, 3], vec![1, 2]])?;
    let s4 = g.subgroup_generated(&[
        Perm::from_cycles(n, &[vec![0, 1]])?,
        Perm::from_cycles(n, &[vec![0, 1, 2, 3]])?,
    ])?;
    let elements: Vec<Perm> = s4
        .elements()
        .iter()
        .filter(|h| h.compose(&invol) == invol.compose(h))
        .cloned()
        .collect();
    Ok(CatalogueEntry {
        label: "D8".into(),
        subgroup: g.subgroup_from_elements(&elements)?,
    })
}

/// The subgroup of the elementary abelian group corresponding to a subspace,
/// under the generator <-> basis-vector correspondence.
pub fn subspace_subgroup(g: &Group, space: &Subspace2) -> Result<Subgroup> {
    let gens = g.generators();
    let elements: Vec<Perm> = space
        .vectors()
        .iter()
        .map(|&v| {
            let mut p = g.identity();
            for (i, gen) in gens.iter().enumerate() {
                if v >> i & 1 == 1 {
                    p = p.compose(gen);
                }
            }
            p
        })
        .collect();
    g.subgroup_from_elements(&elements)
}

/// One verification check with its outcome.
#[derive(Clone, Debug)]
pub struct CatalogueCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Structural verification of a catalogue: closure, expected orders, the D8
/// centralizer identity, and pairwise non-conjugacy of the members.
pub fn verify_catalogue(kind: &GroupKind) -> Result<Vec<CatalogueCheck>> {
    let g = kind.realize()?;
    let entries = catalogue(kind)?;
    let mut checks = Vec::new();

    let closure_ok = entries.iter().all(|e| {
        g.subgroup_from_elements(e.subgroup.elements()).is_ok()
    });
    checks.push(CatalogueCheck {
        name: "subgroup-closure".into(),
        passed: closure_ok,
        detail: format!("{} members", entries.len()),
    });

    let orders: Vec<usize> = entries.iter().map(|e| e.subgroup.order()).collect();
    let expected: Option<Vec<usize>> = match kind {
        GroupKind::S3 { g2: false } => Some(vec![1, 2, 6]),
        GroupKind::S3 { g2: true } => Some(vec![2, 6]),
        GroupKind::S4 => Some(vec![2, 6, 24, 4, 8]),
        GroupKind::S5 => Some(vec![2, 6, 24, 120, 4, 12, 8]),
        GroupKind::F2 { .. } => None,
    };
    if let Some(expected) = expected {
        checks.push(CatalogueCheck {
            name: "expected-orders".into(),
            passed: orders == expected,
            detail: format!("orders {orders:?}"),
        });
    } else {
        let orders_ok = orders.iter().all(|o| o.is_power_of_two());
        checks.push(CatalogueCheck {
            name: "orders-are-2-powers".into(),
            passed: orders_ok,
            detail: format!("orders {orders:?}"),
        });
    }

    if matches!(kind, GroupKind::S4 | GroupKind::S5) {
        let invol = Perm::from_cycles(g.degree(), &[vec![0, 3], vec![1, 2]])?;
        let d8 = &entries.last().unwrap().subgroup;
        let passed = if g.degree() == 4 {
            *d8 == g.centralizer(&invol)?
        } else {
            // inside S5 the centralizer picks up the extra fixed point; the
            // catalogue member is its intersection with the embedded S4
            let z = g.centralizer(&invol)?;
            d8.elements().iter().all(|h| z.contains(h)) && d8.order() == 8
        };
        checks.push(CatalogueCheck {
            name: "d8-is-involution-centralizer".into(),
            passed,
            detail: invol.cycle_notation(),
        });
    }

    let mut non_conjugate = true;
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if g
                .conjugate_subgroup_witness(&entries[i].subgroup, &entries[j].subgroup)
                .is_some()
            {
                non_conjugate = false;
            }
        }
    }
    checks.push(CatalogueCheck {
        name: "pairwise-non-conjugate".into(),
        passed: non_conjugate,
        detail: format!("{} members", entries.len()),
    });

    Ok(checks)
}
