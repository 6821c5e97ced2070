//! The pairing set M(H), coset-multiplicity functions and the unique
//! expansion of a class function in them.
//!
//! M(H) is the set of pairs (s, rho), s running over conjugacy class
//! representatives of H and rho over the irreducibles of the centralizer
//! Z_H(s).  Each subgroup H' of H induces a natural-valued function on M(H):
//! the multiplicity of rho in the permutation module of Z_H(s) on the s-fixed
//! cosets of H/H'.  Stacking those functions as columns gives a matrix with
//! full column rank for the catalogued families, so an integral function has
//! at most one expansion with natural coefficients; `decompose` finds it or
//! reports exactly why there is none.

use std::sync::Arc;

use num::rational::BigRational;
use num::Zero;

use crate::chartab::{character_table, inner_product_rational, CharacterTable, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{ConjClass, CosetSpace, Group, Subgroup};
use crate::perm::Perm;
use crate::ratmat::{to_natural, RatMat};

/// One point of M(H): a conjugacy class of H paired with an irreducible of
/// the centralizer of its canonical representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MPoint {
    pub class_index: usize,
    pub irrep_index: usize,
}

pub struct MSet {
    group: Group,
    classes: Vec<ConjClass>,
    centralizers: Vec<Subgroup>,
    tables: Vec<Arc<CharacterTable>>,
    points: Vec<MPoint>,
}

impl MSet {
    pub fn new(group: &Group) -> MSet {
        let classes = group.conjugacy_classes();
        let mut centralizers = Vec::new();
        let mut tables = Vec::new();
        let mut points = Vec::new();
        for (class_index, class) in classes.iter().enumerate() {
            let z = group.centralizer(&class.rep).expect("representative is in the group");
            let table = character_table(&z.as_group());
            for irrep_index in 0..table.num_irreps() {
                points.push(MPoint { class_index, irrep_index });
            }
            centralizers.push(z);
            tables.push(table);
        }
        MSet {
            group: group.clone(),
            classes,
            centralizers,
            tables,
            points,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[MPoint] {
        &self.points
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn centralizer(&self, class_index: usize) -> &Subgroup {
        &self.centralizers[class_index]
    }

    pub fn table(&self, class_index: usize) -> &Arc<CharacterTable> {
        &self.tables[class_index]
    }

    pub fn point_index(&self, p: &MPoint) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }
}

/// A rational-valued function on an MSet, in point order.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFn {
    pub values: Vec<BigRational>,
}

impl ClassFn {
    pub fn from_integers(values: &[i64]) -> ClassFn {
        ClassFn {
            values: values.iter().map(|&v| BigRational::from_integer(v.into())).collect(),
        }
    }
}

/// The s-fixed cosets: indices i with s * reps[i] H' = reps[i] H'.
pub fn fixed_cosets(cosets: &CosetSpace, s: &Perm) -> Vec<usize> {
    (0..cosets.len())
        .filter(|&i| cosets.left_translate(s, i) == i)
        .collect()
}

/// Multiplicity of `rho` (a row of the centralizer table of `s`) in the
/// permutation module of Z_H(s) on the s-fixed cosets of H/H'.
///
/// Exposed at element level so that representative independence can be
/// tested directly.
pub fn f_value_at(
    group: &Group,
    subgroup: &Subgroup,
    s: &Perm,
    z_table: &CharacterTable,
    irrep_index: usize,
) -> Result<u64> {
    let cosets = group.left_cosets(subgroup)?;
    let fixed = fixed_cosets(&cosets, s);
    let perm_char = ClassFunction {
        values: z_table
            .classes()
            .iter()
            .map(|c| {
                let count = fixed
                    .iter()
                    .filter(|&&i| cosets.left_translate(&c.rep, i) == i)
                    .count();
                Cyclotomic::from_integer(count as i64)
            })
            .collect(),
    };
    let rho = ClassFunction {
        values: z_table.row(irrep_index).to_vec(),
    };
    let m = inner_product_rational(&perm_char, &rho, z_table)?;
    to_natural(&m).ok_or_else(|| {
        Error::Internal(format!("multiplicity {m} is not a natural number"))
    })
}

pub fn f_value(mset: &MSet, subgroup: &Subgroup, point: &MPoint) -> Result<u64> {
    f_value_at(
        mset.group(),
        subgroup,
        &mset.classes[point.class_index].rep,
        mset.table(point.class_index),
        point.irrep_index,
    )
}

/// The full function of one subgroup on the MSet.
pub fn f_vector(mset: &MSet, subgroup: &Subgroup) -> Result<ClassFn> {
    let mut values = Vec::with_capacity(mset.len());
    let cosets = mset.group().left_cosets(subgroup)?;
    for class_index in 0..mset.classes.len() {
        let s = &mset.classes[class_index].rep;
        let z_table = mset.table(class_index);
        let fixed = fixed_cosets(&cosets, s);
        let perm_char = ClassFunction {
            values: z_table
                .classes()
                .iter()
                .map(|c| {
                    let count = fixed
                        .iter()
                        .filter(|&&i| cosets.left_translate(&c.rep, i) == i)
                        .count();
                    Cyclotomic::from_integer(count as i64)
                })
                .collect(),
        };
        for irrep_index in 0..z_table.num_irreps() {
            let rho = ClassFunction {
                values: z_table.row(irrep_index).to_vec(),
            };
            let m = inner_product_rational(&perm_char, &rho, z_table)?;
            if to_natural(&m).is_none() {
                return Err(Error::Internal(format!(
                    "multiplicity {m} is not a natural number"
                )));
            }
            values.push(m);
        }
    }
    Ok(ClassFn { values })
}

/// Columns = one ClassFn per family member, rows in MSet point order.
pub struct FMatrix {
    pub labels: Vec<String>,
    pub columns: Vec<ClassFn>,
    rows: usize,
}

impl FMatrix {
    pub fn new(mset: &MSet, family: &[(String, Subgroup)]) -> Result<FMatrix> {
        let columns: Vec<ClassFn> = family
            .iter()
            .map(|(_, h)| f_vector(mset, h))
            .collect::<Result<_>>()?;
        Ok(FMatrix {
            labels: family.iter().map(|(l, _)| l.clone()).collect(),
            columns,
            rows: mset.len(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    fn as_ratmat(&self) -> RatMat {
        let mut m = RatMat::zero(self.rows, self.cols());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.values.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    /// Exact rational rank of the column system.
    pub fn rank(&self) -> usize {
        self.as_ratmat().rank()
    }

    pub fn has_full_column_rank(&self) -> bool {
        self.rank() == self.cols()
    }

    /// F * n as a ClassFn.
    pub fn apply(&self, n: &[u64]) -> ClassFn {
        assert_eq!(n.len(), self.cols());
        let mut values = vec![BigRational::zero(); self.rows];
        for (col, &coeff) in self.columns.iter().zip(n) {
            let c = BigRational::from_integer((coeff as i64).into());
            for (v, x) in values.iter_mut().zip(&col.values) {
                *v += x * &c;
            }
        }
        ClassFn { values }
    }
}

/// The unique natural-number coefficients with `F * n = phi`.
///
/// Errors: `RankDeficient` when the columns are dependent (checked first),
/// `InconsistentSystem` when no rational solution exists,
/// `NonNaturalSolution` when the unique rational solution leaves N.
pub fn decompose(phi: &ClassFn, fmatrix: &FMatrix) -> Result<Vec<u64>> {
    if phi.values.len() != fmatrix.rows() {
        return Err(Error::DomainMismatch(format!(
            "phi has {} values, matrix has {} rows",
            phi.values.len(),
            fmatrix.rows()
        )));
    }
    let m = fmatrix.as_ratmat();
    if m.rank() < fmatrix.cols() {
        return Err(Error::RankDeficient);
    }
    let solution = m.solve_full_rank(&phi.values)?;
    solution
        .iter()
        .map(|v| to_natural(v).ok_or(Error::NonNaturalSolution))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::{catalogue, GroupKind};
    use crate::chartab::character_table;

    fn family_of(kind: &GroupKind) -> Vec<(String, Subgroup)> {
        catalogue(kind)
            .unwrap()
            .into_iter()
            .map(|e| (e.label, e.subgroup))
            .collect()
    }

    #[test]
    fn m_set_sizes() {
        assert_eq!(MSet::new(&Group::symmetric(3).unwrap()).len(), 8);
        assert_eq!(MSet::new(&Group::symmetric(4).unwrap()).len(), 21);
        for d in 0..=3 {
            let g = Group::elementary_abelian2(d).unwrap();
            assert_eq!(MSet::new(&g).len(), 4usize.pow(d as u32));
        }
    }

    #[test]
    fn fixed_coset_cases() {
        let s3 = Group::symmetric(3).unwrap();
        let s2 = s3
            .subgroup_generated(&[Perm::from_cycles(3, &[vec![0, 1]]).unwrap()])
            .unwrap();
        let cosets = s3.left_cosets(&s2).unwrap();
        let t = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        assert_eq!(fixed_cosets(&cosets, &t).len(), 1);
        assert_eq!(fixed_cosets(&cosets, &s3.identity()).len(), 3);
        let regular = s3.left_cosets(&s3.trivial_subgroup()).unwrap();
        assert!(fixed_cosets(&regular, &t).is_empty());
    }

    #[test]
    fn f_values_whole_group_column() {
        let s3 = Group::symmetric(3).unwrap();
        let mset = MSet::new(&s3);
        let full = s3.full_subgroup();
        for p in mset.points() {
            let expected = if p.irrep_index == 0 { 1 } else { 0 };
            assert_eq!(f_value(&mset, &full, p).unwrap(), expected);
        }
    }

    #[test]
    fn f_values_s2_in_s3() {
        let s3 = Group::symmetric(3).unwrap();
        let mset = MSet::new(&s3);
        let s2 = s3
            .subgroup_generated(&[Perm::from_cycles(3, &[vec![0, 1]]).unwrap()])
            .unwrap();
        // identity class, standard 2-dimensional irrep of Z = S3
        let id_table = mset.table(0);
        let std_idx = (0..id_table.num_irreps()).find(|&i| id_table.degree(i) == 2).unwrap();
        assert_eq!(
            f_value(&mset, &s2, &MPoint { class_index: 0, irrep_index: std_idx }).unwrap(),
            1
        );
        // transposition class: fixed set is a single point, so the sign of
        // Z = C2 has multiplicity 0 and the trivial has 1
        let transposition_class = mset
            .classes()
            .iter()
            .position(|c| c.rep.order() == 2)
            .unwrap();
        assert_eq!(
            f_value(&mset, &s2, &MPoint { class_index: transposition_class, irrep_index: 1 }).unwrap(),
            0
        );
        assert_eq!(
            f_value(&mset, &s2, &MPoint { class_index: transposition_class, irrep_index: 0 }).unwrap(),
            1
        );
    }

    #[test]
    fn abelian_specialization() {
        // for an elementary abelian group, f_L(s, rho) = [s in L][rho trivial on L]
        let g = Group::elementary_abelian2(2).unwrap();
        let mset = MSet::new(&g);
        let table = character_table(&g);
        for entry in catalogue(&GroupKind::F2 { d: 2, exceptional: false }).unwrap() {
            let l = entry.subgroup;
            let f = f_vector(&mset, &l).unwrap();
            let mut i = 0;
            for (class_index, class) in mset.classes().iter().enumerate() {
                let z_table = mset.table(class_index);
                for irrep_index in 0..z_table.num_irreps() {
                    let s_in_l = l.contains(&class.rep);
                    let rho_trivial_on_l = l.elements().iter().all(|h| {
                        let j = table.class_index(h).unwrap();
                        // centralizer = whole group here, so tables agree
                        z_table.value(irrep_index, j) == &Cyclotomic::one()
                    });
                    let expected = if s_in_l && rho_trivial_on_l { 1 } else { 0 };
                    assert_eq!(f.values[i], BigRational::from_integer(expected.into()));
                    i += 1;
                }
            }
        }
    }

    #[test]
    fn representative_independence() {
        for n in [3, 4] {
            let g = Group::symmetric(n).unwrap();
            let mset = MSet::new(&g);
            let family = family_of(if n == 3 {
                &GroupKind::S3 { g2: false }
            } else {
                &GroupKind::S4
            });
            // transport: s' = g s g^{-1}, rho' = rho( g^{-1} . g )
            for conj_by in [g.elements()[1].clone(), g.elements()[g.order() - 1].clone()] {
                for p in mset.points() {
                    let s = &mset.classes()[p.class_index].rep;
                    let s2 = conj_by.conjugate(s);
                    let z2 = g.centralizer(&s2).unwrap();
                    let z2_table = character_table(&z2.as_group());
                    let z_table = mset.table(p.class_index);
                    // row of z2_table matching the transported character
                    let transported: Vec<Cyclotomic> = z2_table
                        .classes()
                        .iter()
                        .map(|c| {
                            let back = conj_by.inverse().conjugate(&c.rep);
                            z_table.row(p.irrep_index)[z_table.class_index(&back).unwrap()].clone()
                        })
                        .collect();
                    let idx2 = (0..z2_table.num_irreps())
                        .find(|&i| z2_table.row(i) == transported.as_slice())
                        .expect("transported character is an irreducible");
                    for (_, h) in &family {
                        assert_eq!(
                            f_value_at(&g, h, s, z_table, p.irrep_index).unwrap(),
                            f_value_at(&g, h, &s2, &z2_table, idx2).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn normalization_and_nonvanishing() {
        for kind in [
            GroupKind::S3 { g2: false },
            GroupKind::S3 { g2: true },
            GroupKind::S4,
            GroupKind::F2 { d: 2, exceptional: false },
        ] {
            let g = kind.realize().unwrap();
            let mset = MSet::new(&g);
            let fmatrix = FMatrix::new(&mset, &family_of(&kind)).unwrap();
            for col in &fmatrix.columns {
                // first MSet point is (identity, trivial)
                assert_eq!(col.values[0], BigRational::from_integer(1.into()));
                assert!(col.values.iter().any(|v| !v.is_zero()));
                assert!(col.values.iter().all(|v| to_natural(v).is_some()));
            }
        }
    }

    #[test]
    fn ranks_match_family_sizes() {
        let cases = [
            (GroupKind::S3 { g2: false }, 3),
            (GroupKind::S3 { g2: true }, 2),
            (GroupKind::S4, 5),
            (GroupKind::S5, 7),
        ];
        for (kind, expected) in cases {
            let g = kind.realize().unwrap();
            let mset = MSet::new(&g);
            let fmatrix = FMatrix::new(&mset, &family_of(&kind)).unwrap();
            assert_eq!(fmatrix.cols(), expected);
            assert_eq!(fmatrix.rank(), expected, "{}", kind.name());
        }
    }

    #[test]
    fn duplicate_column_keeps_rank() {
        let kind = GroupKind::S3 { g2: false };
        let g = kind.realize().unwrap();
        let mset = MSet::new(&g);
        let mut family = family_of(&kind);
        let rank_before = FMatrix::new(&mset, &family).unwrap().rank();
        family.push(family[0].clone());
        let f = FMatrix::new(&mset, &family).unwrap();
        assert_eq!(f.rank(), rank_before);
        assert!(!f.has_full_column_rank());
    }

    #[test]
    fn decompose_column_selection_and_round_trip() {
        let kind = GroupKind::S3 { g2: false };
        let g = kind.realize().unwrap();
        let mset = MSet::new(&g);
        let fmatrix = FMatrix::new(&mset, &family_of(&kind)).unwrap();
        // phi = the S3 column
        let phi = fmatrix.columns[2].clone();
        assert_eq!(decompose(&phi, &fmatrix).unwrap(), vec![0, 0, 1]);
        let n = vec![1, 2, 3];
        assert_eq!(decompose(&fmatrix.apply(&n), &fmatrix).unwrap(), n);
    }

    #[test]
    fn decompose_error_classes() {
        let kind = GroupKind::S3 { g2: false };
        let g = kind.realize().unwrap();
        let mset = MSet::new(&g);
        let fmatrix = FMatrix::new(&mset, &family_of(&kind)).unwrap();

        // negative value at (identity, trivial) cannot be a natural combination
        let mut phi = fmatrix.apply(&[1, 0, 0]);
        phi.values[0] = BigRational::from_integer((-1).into());
        assert!(matches!(
            decompose(&phi, &fmatrix),
            Err(Error::InconsistentSystem) | Err(Error::NonNaturalSolution)
        ));

        // rank-deficient family
        let mut family = family_of(&kind);
        family.push(family[1].clone());
        let bad = FMatrix::new(&mset, &family).unwrap();
        let phi = bad.columns[0].clone();
        assert!(matches!(decompose(&phi, &bad), Err(Error::RankDeficient)));

        // natural solution exists rationally but not over N
        let phi = ClassFn {
            values: fmatrix
                .apply(&[1, 0, 0])
                .values
                .iter()
                .map(|v| v / BigRational::from_integer(2.into()))
                .collect(),
        };
        assert!(matches!(decompose(&phi, &fmatrix), Err(Error::NonNaturalSolution)));
    }
}
