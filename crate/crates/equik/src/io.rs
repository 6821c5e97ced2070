//! File formats: group specifications and phi input files.
//!
//! All machine output carries `schema: 1`.  A phi file assigns one integer
//! to every point of M(G), keyed by the cycle notation of the class
//! representative and the index of the centralizer irreducible, and must
//! cover each point exactly once.

use std::collections::HashMap;
use std::path::Path;

use num::rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::mdecomp::{ClassFn, MSet};
use crate::perm::Perm;

pub const SCHEMA_VERSION: u32 = 1;

/// A group given either by a standard family or by explicit generators.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "type")]
pub enum GroupSpec {
    #[serde(rename = "S")]
    Symmetric { n: usize },
    #[serde(rename = "F2")]
    ElementaryAbelian2 { d: usize },
    #[serde(rename = "perm")]
    Perm { degree: usize, generators: Vec<Vec<u8>> },
}

impl GroupSpec {
    pub fn realize(&self) -> Result<Group> {
        match self {
            GroupSpec::Symmetric { n } => Group::symmetric(*n),
            GroupSpec::ElementaryAbelian2 { d } => Group::elementary_abelian2(*d),
            GroupSpec::Perm { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|imgs| Perm::from_images(imgs.clone()))
                    .collect::<Result<Vec<_>>>()?;
                Group::generated(*degree, gens)
            }
        }
    }

    pub fn of_group(g: &Group) -> GroupSpec {
        match g.kind() {
            crate::group::KindTag::Symmetric(n) => GroupSpec::Symmetric { n: *n },
            crate::group::KindTag::ElementaryAbelian2(d) => {
                GroupSpec::ElementaryAbelian2 { d: *d }
            }
            crate::group::KindTag::Custom => GroupSpec::Perm {
                degree: g.degree(),
                generators: g.generators().iter().map(|p| p.images().to_vec()).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhiEntry {
    pub class: String,
    pub irrep: usize,
    pub value: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhiFile {
    pub schema: u32,
    pub group: GroupSpec,
    pub values: Vec<PhiEntry>,
}

impl PhiFile {
    pub fn load(path: &Path) -> Result<PhiFile> {
        let text = std::fs::read_to_string(path)?;
        let file: PhiFile = serde_json::from_str(&text)?;
        if file.schema != SCHEMA_VERSION {
            return Err(Error::InvalidInput(format!(
                "unsupported phi schema {} (expected {})",
                file.schema, SCHEMA_VERSION
            )));
        }
        Ok(file)
    }

    /// Check the group matches and every M-point is covered exactly once,
    /// then order the values canonically.
    pub fn class_fn(&self, mset: &MSet) -> Result<ClassFn> {
        let group = self.group.realize()?;
        if group.elements() != mset.group().elements() {
            return Err(Error::InvalidInput(
                "phi file group does not match the requested group".into(),
            ));
        }
        let mut class_of = HashMap::new();
        for (j, c) in mset.classes().iter().enumerate() {
            for e in &c.elements {
                class_of.insert(e.clone(), j);
            }
        }
        let mut slots: Vec<Option<i64>> = vec![None; mset.len()];
        for entry in &self.values {
            let p = Perm::parse_cycles(group.degree(), &entry.class).map_err(|_| {
                Error::InvalidInput(format!("unparsable class '{}'", entry.class))
            })?;
            let class_index = *class_of.get(&p).ok_or_else(|| {
                Error::InvalidInput(format!("'{}' is not in the group", entry.class))
            })?;
            if entry.irrep >= mset.table(class_index).num_irreps() {
                return Err(Error::InvalidInput(format!(
                    "irrep index {} out of range for class '{}'",
                    entry.irrep, entry.class
                )));
            }
            let slot = mset
                .points()
                .iter()
                .position(|q| q.class_index == class_index && q.irrep_index == entry.irrep)
                .expect("every (class, irrep) pair is an M-point");
            if slots[slot].is_some() {
                return Err(Error::InvalidInput(format!(
                    "duplicate phi entry for class '{}' irrep {}",
                    entry.class, entry.irrep
                )));
            }
            slots[slot] = Some(entry.value);
        }
        let values = slots
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.map(|x| BigRational::from_integer(x.into())).ok_or_else(|| {
                    let p = &mset.points()[i];
                    Error::InvalidInput(format!(
                        "phi file misses class '{}' irrep {}",
                        mset.classes()[p.class_index].rep.cycle_notation(),
                        p.irrep_index
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFn { values })
    }

    /// A phi file covering `mset` with the given values, in canonical order.
    pub fn from_values(mset: &MSet, values: &[i64]) -> PhiFile {
        assert_eq!(values.len(), mset.len());
        PhiFile {
            schema: SCHEMA_VERSION,
            group: GroupSpec::of_group(mset.group()),
            values: mset
                .points()
                .iter()
                .zip(values)
                .map(|(p, &value)| PhiEntry {
                    class: mset.classes()[p.class_index].rep.cycle_notation(),
                    irrep: p.irrep_index,
                    value,
                })
                .collect(),
        }
    }
}

/// Pretty JSON with a trailing newline; field order is declaration order,
/// so the bytes are stable.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    #[test]
    fn group_spec_round_trip() {
        for spec in [
            GroupSpec::Symmetric { n: 4 },
            GroupSpec::ElementaryAbelian2 { d: 3 },
        ] {
            let g = spec.realize().unwrap();
            assert_eq!(GroupSpec::of_group(&g), spec);
            let json = serde_json::to_string(&spec).unwrap();
            let back: GroupSpec = serde_json::from_str(&json).unwrap();
            assert_eq!(back, spec);
        }
        let json = r#"{"type":"perm","degree":3,"generators":[[1,0,2]]}"#;
        let spec: GroupSpec = serde_json::from_str(json).unwrap();
        assert_eq!(spec.realize().unwrap().order(), 2);
    }

    #[test]
    fn phi_round_trip_and_validation() {
        let g = Group::symmetric(3).unwrap();
        let mset = MSet::new(&g);
        let values: Vec<i64> = (0..mset.len() as i64).collect();
        let file = PhiFile::from_values(&mset, &values);
        let f = file.class_fn(&mset).unwrap();
        for (i, v) in f.values.iter().enumerate() {
            assert_eq!(*v, BigRational::from_integer((values[i]).into()));
        }

        // duplicate entry
        let mut dup = file.clone();
        let e = dup.values[0].clone();
        dup.values.push(e);
        assert!(matches!(dup.class_fn(&mset), Err(Error::InvalidInput(_))));

        // missing entry
        let mut missing = file.clone();
        missing.values.pop();
        assert!(matches!(missing.class_fn(&mset), Err(Error::InvalidInput(_))));

        // bad class string
        let mut bad = file.clone();
        bad.values[0].class = "(0 9)".into();
        assert!(matches!(bad.class_fn(&mset), Err(Error::InvalidInput(_))));

        // irrep out of range
        let mut bad = file;
        bad.values[0].irrep = 99;
        assert!(matches!(bad.class_fn(&mset), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn phi_group_mismatch() {
        let s3 = Group::symmetric(3).unwrap();
        let s4 = Group::symmetric(4).unwrap();
        let mset3 = MSet::new(&s3);
        let mset4 = MSet::new(&s4);
        let file = PhiFile::from_values(&mset3, &vec![0; mset3.len()]);
        assert!(matches!(file.class_fn(&mset4), Err(Error::InvalidInput(_))));
        let zeroes = file.class_fn(&mset3).unwrap();
        assert!(zeroes.values.iter().all(|v| v.is_zero()));
    }
}
