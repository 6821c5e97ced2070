//! GF(2) subspaces and the inductive subspace family attached to an ordered
//! basis.
//!
//! Subspaces of F_2^d are stored as reduced row echelon bitmask rows (bit i =
//! coordinate i), the unique canonical representative.  The family recursion
//! branches, for each basis position j, into the span of the basis with the
//! j-th vector removed (adjoining F_2 xi_j to each member) and, for j >= 2,
//! into the basis where xi_{j-1} is replaced by xi_{j-1} + xi_j.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

pub const MAX_FAMILY_DIM: usize = 6;

/// An F_2 subspace in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace2 {
    ambient_dim: usize,
    /// RREF rows, pivot columns strictly increasing; empty for the zero
    /// subspace.
    rows: Vec<u64>,
}

impl Subspace2 {
    pub fn zero(ambient_dim: usize) -> Subspace2 {
        Subspace2 {
            ambient_dim,
            rows: Vec::new(),
        }
    }

    /// Canonical form of the span of arbitrary vectors.
    pub fn span(ambient_dim: usize, vectors: &[u64]) -> Subspace2 {
        let mut rows: Vec<u64> = Vec::new();
        for &v in vectors {
            let mut v = v & mask(ambient_dim);
            for &r in &rows {
                let pivot = r.trailing_zeros();
                if v >> pivot & 1 == 1 {
                    v ^= r;
                }
            }
            if v != 0 {
                rows.push(v);
            }
        }
        rows.sort_by_key(|r| r.trailing_zeros());
        // back substitution, highest pivot first
        for i in (0..rows.len()).rev() {
            let pivot = rows[i].trailing_zeros();
            let row = rows[i];
            for (j, r) in rows.iter_mut().enumerate() {
                if j != i && *r >> pivot & 1 == 1 {
                    *r ^= row;
                }
            }
        }
        Subspace2 { ambient_dim, rows }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn contains(&self, v: u64) -> bool {
        let mut v = v & mask(self.ambient_dim);
        for &r in &self.rows {
            let pivot = r.trailing_zeros();
            if v >> pivot & 1 == 1 {
                v ^= r;
            }
        }
        v == 0
    }

    /// All vectors of the subspace, in increasing numeric order.
    pub fn vectors(&self) -> Vec<u64> {
        let mut out: Vec<u64> = (0..1u64 << self.dim())
            .map(|sel| {
                let mut v = 0;
                for (i, &r) in self.rows.iter().enumerate() {
                    if sel >> i & 1 == 1 {
                        v ^= r;
                    }
                }
                v
            })
            .collect();
        out.sort();
        out
    }

    /// Sum with the line through `v`.
    pub fn adjoin(&self, v: u64) -> Subspace2 {
        let mut vectors = self.rows.clone();
        vectors.push(v);
        Subspace2::span(self.ambient_dim, &vectors)
    }

    /// Rows rendered as 0/1 strings, coordinate 0 first.
    pub fn row_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| {
                (0..self.ambient_dim)
                    .map(|i| if r >> i & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

fn mask(d: usize) -> u64 {
    if d == 64 {
        u64::MAX
    } else {
        (1u64 << d) - 1
    }
}

/// An ordered independent tuple of vectors in F_2^d.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedBasis {
    ambient_dim: usize,
    vectors: Vec<u64>,
}

impl OrderedBasis {
    pub fn new(ambient_dim: usize, vectors: Vec<u64>) -> Result<OrderedBasis> {
        if Subspace2::span(ambient_dim, &vectors).dim() != vectors.len() {
            return Err(Error::DependentBasis);
        }
        Ok(OrderedBasis { ambient_dim, vectors })
    }

    /// The standard basis of F_2^d.
    pub fn standard(d: usize) -> Result<OrderedBasis> {
        if d > MAX_FAMILY_DIM {
            return Err(Error::SizeLimit(format!(
                "family dimension must be at most {MAX_FAMILY_DIM}, got {d}"
            )));
        }
        OrderedBasis::new(d, (0..d).map(|i| 1u64 << i).collect())
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vectors(&self) -> &[u64] {
        &self.vectors
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyMode {
    /// The recursion with the zero subspace included as a member at every
    /// level; reproduces the stated d <= 3 ground truth.
    PaperConsistent,
    /// The recursion exactly as printed.
    StrictLiteral,
}

impl FamilyMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyMode::PaperConsistent => "paper-consistent",
            FamilyMode::StrictLiteral => "strict-literal",
        }
    }
}

impl std::str::FromStr for FamilyMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilyMode> {
        match s {
            "paper-consistent" => Ok(FamilyMode::PaperConsistent),
            "strict-literal" => Ok(FamilyMode::StrictLiteral),
            other => Err(Error::InvalidInput(format!("unknown mode: {other}"))),
        }
    }
}

/// The subspace family of an ordered basis, memoized recursion.
pub fn family(basis: &OrderedBasis, mode: FamilyMode) -> Result<BTreeSet<Subspace2>> {
    check_cap(basis)?;
    let mut memo = HashMap::new();
    Ok(family_memo(basis.ambient_dim, basis.vectors(), mode, &mut memo))
}

/// Same family by plain recursion, no memo table; second code path used to
/// cross-check the memoized one.
pub fn family_naive(basis: &OrderedBasis, mode: FamilyMode) -> Result<BTreeSet<Subspace2>> {
    check_cap(basis)?;
    Ok(family_rec(basis.ambient_dim, basis.vectors(), mode))
}

fn check_cap(basis: &OrderedBasis) -> Result<()> {
    if basis.len() > MAX_FAMILY_DIM {
        return Err(Error::SizeLimit(format!(
            "family dimension must be at most {MAX_FAMILY_DIM}, got {}",
            basis.len()
        )));
    }
    Ok(())
}

fn family_memo(
    ambient: usize,
    basis: &[u64],
    mode: FamilyMode,
    memo: &mut HashMap<Vec<u64>, BTreeSet<Subspace2>>,
) -> BTreeSet<Subspace2> {
    if let Some(hit) = memo.get(basis) {
        return hit.clone();
    }
    let mut out = BTreeSet::new();
    step(ambient, basis, mode, &mut out, &mut |ambient, sub_basis, mode| {
        family_memo(ambient, sub_basis, mode, memo)
    });
    memo.insert(basis.to_vec(), out.clone());
    out
}

fn family_rec(ambient: usize, basis: &[u64], mode: FamilyMode) -> BTreeSet<Subspace2> {
    let mut out = BTreeSet::new();
    step(ambient, basis, mode, &mut out, &mut |ambient, sub_basis, mode| {
        family_rec(ambient, sub_basis, mode)
    });
    out
}

/// One level of the inductive definition; `recurse` supplies the family of a
/// smaller basis.
fn step(
    ambient: usize,
    basis: &[u64],
    mode: FamilyMode,
    out: &mut BTreeSet<Subspace2>,
    recurse: &mut dyn FnMut(usize, &[u64], FamilyMode) -> BTreeSet<Subspace2>,
) {
    let d = basis.len();
    if d == 0 || mode == FamilyMode::PaperConsistent {
        out.insert(Subspace2::zero(ambient));
    }
    if d == 0 {
        return;
    }
    for j in 0..d {
        // basis with the j-th vector removed; adjoin the line through it
        let sub: Vec<u64> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != j)
            .map(|(_, &v)| v)
            .collect();
        for l in recurse(ambient, &sub, mode) {
            out.insert(l.adjoin(basis[j]));
        }
    }
    for j in 1..d {
        // basis with positions j-1, j merged into their sum
        let mut sub: Vec<u64> = Vec::with_capacity(d - 1);
        sub.extend_from_slice(&basis[..j.saturating_sub(1)]);
        sub.push(basis[j - 1] ^ basis[j]);
        sub.extend_from_slice(&basis[j + 1..]);
        for l in recurse(ambient, &sub, mode) {
            out.insert(l);
        }
    }
}

/// Every subspace of F_2^d, enumerated through echelon forms.
pub fn all_subspaces(d: usize) -> Result<BTreeSet<Subspace2>> {
    if d > MAX_FAMILY_DIM {
        return Err(Error::SizeLimit(format!(
            "dimension must be at most {MAX_FAMILY_DIM}, got {d}"
        )));
    }
    let mut out = BTreeSet::new();
    for pivot_bits in 0..1u64 << d {
        let pivots: Vec<usize> = (0..d).filter(|&i| pivot_bits >> i & 1 == 1).collect();
        enumerate_rref(d, &pivots, 0, Vec::new(), &mut out);
    }
    Ok(out)
}

fn enumerate_rref(
    d: usize,
    pivots: &[usize],
    row: usize,
    rows: Vec<u64>,
    out: &mut BTreeSet<Subspace2>,
) {
    if row == pivots.len() {
        out.insert(Subspace2 {
            ambient_dim: d,
            rows,
        });
        return;
    }
    let pivot = pivots[row];
    // free coordinates: right of this pivot, not a pivot column
    let free: Vec<usize> = (pivot + 1..d).filter(|c| !pivots.contains(c)).collect();
    for bits in 0..1u64 << free.len() {
        let mut r = 1u64 << pivot;
        for (i, &c) in free.iter().enumerate() {
            if bits >> i & 1 == 1 {
                r |= 1 << c;
            }
        }
        let mut next = rows.clone();
        next.push(r);
        enumerate_rref(d, pivots, row + 1, next, out);
    }
}

/// The family, split against the full subspace lattice.
pub struct MembershipReport {
    pub included: Vec<Subspace2>,
    pub excluded: Vec<Subspace2>,
}

pub fn membership_report(basis: &OrderedBasis, mode: FamilyMode) -> Result<MembershipReport> {
    if basis.len() != basis.ambient_dim() {
        return Err(Error::InvalidInput(
            "membership report requires a basis of the full ambient space".into(),
        ));
    }
    let fam = family(basis, mode)?;
    let all = all_subspaces(basis.ambient_dim())?;
    let included: Vec<Subspace2> = all.iter().filter(|s| fam.contains(s)).cloned().collect();
    let excluded: Vec<Subspace2> = all.iter().filter(|s| !fam.contains(s)).cloned().collect();
    Ok(MembershipReport { included, excluded })
}
