//! Finite G-sets assembled from transitive pieces.
//!
//! A `GSet` is a disjoint union of coset spaces G/H', each taken with a
//! natural multiplicity.  Points are tagged with (piece, copy, coset) so
//! that the assembly order is reproducible, and the whole action is stored
//! as a table indexed by group element and point.

use num::rational::BigRational;

use crate::chartab::character_table;
use crate::error::{Error, Result};
use crate::group::{CosetSpace, Group, Subgroup};
use crate::mdecomp::{f_vector, ClassFn, MSet};
use crate::perm::Perm;
use crate::ratmat::to_natural;

/// Tag of one point: which catalogue piece, which copy of that piece, and
/// which coset inside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PointTag {
    pub piece: usize,
    pub copy: usize,
    pub coset: usize,
}

pub struct GSet {
    group: Group,
    labels: Vec<String>,
    multiplicities: Vec<u64>,
    cosets: Vec<CosetSpace>,
    tags: Vec<PointTag>,
    /// action[g][p] = index of g . p, g in group element order
    action: Vec<Vec<usize>>,
}

impl GSet {
    /// The disjoint union of `multiplicities[i]` copies of G/H_i.
    pub fn build(
        group: &Group,
        pieces: &[(String, Subgroup)],
        multiplicities: &[u64],
    ) -> Result<GSet> {
        if pieces.len() != multiplicities.len() {
            return Err(Error::InvalidInput(format!(
                "{} pieces but {} multiplicities",
                pieces.len(),
                multiplicities.len()
            )));
        }
        let mut cosets = Vec::new();
        let mut tags = Vec::new();
        let mut block_start = Vec::new();
        for (piece, (_, h)) in pieces.iter().enumerate() {
            let cs = group.left_cosets(h)?;
            let mut starts = Vec::new();
            for copy in 0..multiplicities[piece] as usize {
                starts.push(tags.len());
                for coset in 0..cs.len() {
                    tags.push(PointTag { piece, copy, coset });
                }
            }
            block_start.push(starts);
            cosets.push(cs);
        }
        let action = group
            .elements()
            .iter()
            .map(|g| {
                tags.iter()
                    .map(|t| {
                        block_start[t.piece][t.copy] + cosets[t.piece].left_translate(g, t.coset)
                    })
                    .collect()
            })
            .collect();
        Ok(GSet {
            group: group.clone(),
            labels: pieces.iter().map(|(l, _)| l.clone()).collect(),
            multiplicities: multiplicities.to_vec(),
            cosets,
            tags,
            action,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    pub fn tags(&self) -> &[PointTag] {
        &self.tags
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// Coset representative realizing the point.
    pub fn point_rep(&self, p: usize) -> &Perm {
        let t = &self.tags[p];
        &self.cosets[t.piece].reps()[t.coset]
    }

    pub fn apply(&self, g: &Perm, p: usize) -> usize {
        let gi = self.group.element_index(g).expect("element of the acting group");
        self.action[gi][p]
    }

    pub fn apply_index(&self, element_index: usize, p: usize) -> usize {
        self.action[element_index][p]
    }

    /// Stabilizer of a point: r H' r^{-1} for the point's coset rep r.
    pub fn stabilizer(&self, p: usize) -> Subgroup {
        let t = &self.tags[p];
        self.cosets[t.piece]
            .subgroup()
            .conjugated_by(self.point_rep(p))
    }

    pub fn fixed_points(&self, g: &Perm) -> Vec<usize> {
        let gi = self.group.element_index(g).expect("element of the acting group");
        (0..self.len()).filter(|&p| self.action[gi][p] == p).collect()
    }

    /// Fixed-point count for one representative of each conjugacy class, in
    /// class order.
    pub fn fixed_counts(&self) -> Vec<usize> {
        self.group
            .conjugacy_classes()
            .iter()
            .map(|c| self.fixed_points(&c.rep).len())
            .collect()
    }

    /// Number of orbits of the diagonal action on the square, by the orbit
    /// counting lemma.
    pub fn square_orbit_count(&self) -> usize {
        let total: usize = self
            .group
            .conjugacy_classes()
            .iter()
            .map(|c| c.size() * self.fixed_points(&c.rep).len().pow(2))
            .sum();
        assert_eq!(total % self.group.order(), 0);
        total / self.group.order()
    }

    /// Orbits of the plain action, each sorted, listed by minimal point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut orbits = Vec::new();
        for p in 0..self.len() {
            if seen[p] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..self.group.order())
                .map(|gi| self.action[gi][p])
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &q in &orbit {
                seen[q] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Check that the table is a left action: 1.p = p and (gh).p = g.(h.p).
    pub fn verify_action_law(&self) -> bool {
        let id = self.group.element_index(&self.group.identity()).unwrap();
        if (0..self.len()).any(|p| self.action[id][p] != p) {
            return false;
        }
        for (gi, g) in self.group.elements().iter().enumerate() {
            for (hi, h) in self.group.elements().iter().enumerate() {
                let gh = g.compose(h);
                let ghi = self.group.element_index(&gh).unwrap();
                for p in 0..self.len() {
                    if self.action[ghi][p] != self.action[gi][self.action[hi][p]] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Check that every point stabilizer is conjugate in G to the subgroup
    /// of its piece.
    pub fn verify_stabilizers(&self) -> bool {
        (0..self.len()).all(|p| {
            let t = &self.tags[p];
            self.group
                .conjugate_subgroup_witness(&self.stabilizer(p), self.cosets[t.piece].subgroup())
                .is_some()
        })
    }

    /// Per-class fixed counts match the sum of per-piece fixed coset counts.
    pub fn verify_fixed_counts(&self) -> Result<bool> {
        for class in self.group.conjugacy_classes() {
            let direct = self.fixed_points(&class.rep).len();
            let mut from_pieces = 0usize;
            for (piece, cs) in self.cosets.iter().enumerate() {
                from_pieces += self.multiplicities[piece] as usize
                    * crate::mdecomp::fixed_cosets(cs, &class.rep).len();
            }
            if direct != from_pieces {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The function on M(G) sending (s, rho) to the multiplicity of rho in
    /// the permutation module of Z_G(s) on the s-fixed points.
    pub fn mset_function(&self, mset: &MSet) -> Result<ClassFn> {
        let mut values = Vec::with_capacity(mset.len());
        for (class_index, class) in mset.classes().iter().enumerate() {
            let fixed = self.fixed_points(&class.rep);
            let z_table = mset.table(class_index);
            let perm_char = crate::chartab::ClassFunction {
                values: z_table
                    .classes()
                    .iter()
                    .map(|c| {
                        let zi = self.group.element_index(&c.rep).unwrap();
                        let count = fixed.iter().filter(|&&p| self.action[zi][p] == p).count();
                        crate::cyclotomic::Cyclotomic::from_integer(count as i64)
                    })
                    .collect(),
            };
            for irrep_index in 0..z_table.num_irreps() {
                let rho = crate::chartab::ClassFunction {
                    values: z_table.row(irrep_index).to_vec(),
                };
                let m = crate::chartab::inner_product_rational(&perm_char, &rho, z_table)?;
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
}

/// True iff every point stabilizer is conjugate in the acting group to a
/// member of the given list.
pub fn check_stabilizer_conjecture(gset: &GSet, catalogue: &[Subgroup]) -> bool {
    (0..gset.len()).all(|p| {
        let stab = gset.stabilizer(p);
        catalogue
            .iter()
            .any(|h| gset.group().conjugate_subgroup_witness(&stab, h).is_some())
    })
}

/// Check that the assembled set realizes phi = sum of n_i f_{H_i}: the
/// MSet function of the union equals the weighted sum of the piece columns.
pub fn verify_realization(
    gset: &GSet,
    mset: &MSet,
    pieces: &[(String, Subgroup)],
) -> Result<bool> {
    let actual = gset.mset_function(mset)?;
    let mut expected = vec![BigRational::from_integer(0.into()); mset.len()];
    for ((_, h), &n) in pieces.iter().zip(gset.multiplicities()) {
        let col = f_vector(mset, h)?;
        let c = BigRational::from_integer((n as i64).into());
        for (e, v) in expected.iter_mut().zip(&col.values) {
            *e += v * &c;
        }
    }
    Ok(actual.values == expected)
}

/// The decomposition of the permutation character of the set, as
/// multiplicities over the irreducibles of the acting group.
pub fn permutation_character_multiplicities(gset: &GSet) -> Result<Vec<u64>> {
    let table = character_table(gset.group());
    let perm_char = crate::chartab::ClassFunction {
        values: table
            .classes()
            .iter()
            .map(|c| {
                crate::cyclotomic::Cyclotomic::from_integer(gset.fixed_points(&c.rep).len() as i64)
            })
            .collect(),
    };
    let mults = crate::chartab::decompose_class_function(&perm_char, &table)?;
    mults
        .iter()
        .map(|m| {
            to_natural(m).ok_or_else(|| {
                Error::Internal("permutation character multiplicity is not natural".into())
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::{catalogue, GroupKind};

    fn family_of(kind: &GroupKind) -> Vec<(String, Subgroup)> {
        catalogue(kind)
            .unwrap()
            .into_iter()
            .map(|e| (e.label, e.subgroup))
            .collect()
    }

    #[test]
    fn s4_instance_counts() {
        let kind = GroupKind::S4;
        let g = kind.realize().unwrap();
        let pieces = family_of(&kind);
        let n = [1, 0, 1, 2, 0];
        let y = GSet::build(&g, &pieces, &n).unwrap();
        // indices 12, 1, 6 and 6: 12 + 1 + 12 = 25
        assert_eq!(y.len(), 25);
        assert!(y.verify_action_law());
        assert!(y.verify_stabilizers());
        assert_eq!(y.square_orbit_count(), 42);
        let orbit_sizes: usize = y.orbits().iter().map(|o| o.len()).sum();
        assert_eq!(orbit_sizes, 25);
    }

    #[test]
    fn regular_set_is_free() {
        let g = Group::symmetric(3).unwrap();
        let pieces = vec![("1".to_string(), g.trivial_subgroup())];
        let y = GSet::build(&g, &pieces, &[1]).unwrap();
        assert_eq!(y.len(), 6);
        assert!(y.verify_action_law());
        for p in 0..y.len() {
            assert_eq!(y.stabilizer(p).order(), 1);
        }
        // only the identity fixes anything
        let counts = y.fixed_counts();
        assert_eq!(counts[0], 6);
        assert!(counts[1..].iter().all(|&c| c == 0));
        // permutation character = regular character: multiplicities = degrees
        let table = character_table(&g);
        let mults = permutation_character_multiplicities(&y).unwrap();
        let degrees: Vec<u64> = (0..table.num_irreps()).map(|i| table.degree(i)).collect();
        assert_eq!(mults, degrees);
    }

    #[test]
    fn realization_matches_f_columns() {
        for (kind, n) in [
            (GroupKind::S3 { g2: false }, vec![1u64, 2, 1]),
            (GroupKind::S4, vec![1, 0, 1, 2, 0]),
        ] {
            let g = kind.realize().unwrap();
            let pieces = family_of(&kind);
            let y = GSet::build(&g, &pieces, &n).unwrap();
            let mset = MSet::new(&g);
            assert!(verify_realization(&y, &mset, &pieces).unwrap());
        }
    }

    #[test]
    fn size_formula() {
        let kind = GroupKind::S5;
        let g = kind.realize().unwrap();
        let pieces = family_of(&kind);
        let n = [1, 1, 0, 1, 2, 0, 3];
        let y = GSet::build(&g, &pieces, &n).unwrap();
        let expected: usize = pieces
            .iter()
            .zip(&n)
            .map(|((_, h), &k)| h.index_in_parent() * k as usize)
            .sum();
        assert_eq!(y.len(), expected);
    }

    #[test]
    fn stabilizer_conjecture_cases() {
        let kind = GroupKind::S3 { g2: false };
        let g = kind.realize().unwrap();
        let pieces = family_of(&kind);
        let y = GSet::build(&g, &pieces, &[1, 1, 1]).unwrap();
        assert_eq!(y.len(), 10);
        assert!(y.verify_fixed_counts().unwrap());
        let family: Vec<Subgroup> = pieces.iter().map(|(_, h)| h.clone()).collect();
        assert!(check_stabilizer_conjecture(&y, &family));
        // a C3 stabilizer is conjugate to none of {1}, S2, S3
        let c3 = g
            .subgroup_generated(&[crate::perm::Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap()])
            .unwrap();
        let bad = GSet::build(&g, &[("C3".to_string(), c3)], &[1]).unwrap();
        assert!(!check_stabilizer_conjecture(&bad, &family));
        // empty set: vacuously true
        let empty = GSet::build(&g, &pieces, &[0, 0, 0]).unwrap();
        assert!(empty.is_empty());
        assert!(check_stabilizer_conjecture(&empty, &family));
    }

    #[test]
    fn multiplicity_length_mismatch_rejected() {
        let kind = GroupKind::S3 { g2: false };
        let g = kind.realize().unwrap();
        let pieces = family_of(&kind);
        assert!(matches!(
            GSet::build(&g, &pieces, &[1, 2]),
            Err(Error::InvalidInput(_))
        ));
    }
}
