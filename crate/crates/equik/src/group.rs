//! Finite permutation groups by full element enumeration.
//!
//! Every group handled here has order at most a few hundred (symmetric groups
//! up to degree 8 and elementary abelian 2-groups up to rank 6), so groups are
//! stored as the complete sorted element list and all algorithms are direct
//! enumerations.  The element list is sorted by the fixed total order on image
//! arrays, which makes every canonical choice (class representatives, coset
//! representatives) stable across runs.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Perm;

pub const MAX_SYMMETRIC_DEGREE: usize = 8;
pub const MAX_F2_RANK: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KindTag {
    Symmetric(usize),
    ElementaryAbelian2(usize),
    Custom,
}

#[derive(Clone)]
pub struct Group {
    degree: usize,
    elements: Arc<Vec<Perm>>,
    index: Arc<HashMap<Perm, usize>>,
    generators: Vec<Perm>,
    kind: KindTag,
}

impl PartialEq for Group {
    fn eq(&self, other: &Group) -> bool {
        self.degree == other.degree
            && (Arc::ptr_eq(&self.elements, &other.elements) || self.elements == other.elements)
    }
}
impl Eq for Group {}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Group(degree={}, order={}, kind={:?})",
            self.degree,
            self.order(),
            self.kind
        )
    }
}

/// One conjugacy class: canonical (minimal) representative plus the sorted
/// element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub rep: Perm,
    pub elements: Vec<Perm>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

impl Group {
    fn from_sorted_elements(degree: usize, elements: Vec<Perm>, generators: Vec<Perm>, kind: KindTag) -> Group {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        Group {
            degree,
            elements: Arc::new(elements),
            index: Arc::new(index),
            generators,
            kind,
        }
    }

    /// Closure of a generating set inside Sym(degree).
    pub fn generated(degree: usize, generators: Vec<Perm>) -> Result<Group> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPerm(format!(
                    "generator degree {} does not match {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut frontier = vec![Perm::identity(degree)];
        seen.insert(Perm::identity(degree));
        while let Some(g) = frontier.pop() {
            for s in &generators {
                let h = s.compose(&g);
                if seen.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(Group::from_sorted_elements(degree, elements, generators, KindTag::Custom))
    }

    /// The symmetric group on `{0, .., n-1}`.  The embedding of a smaller
    /// symmetric group fixes the trailing points.
    pub fn symmetric(n: usize) -> Result<Group> {
        if n < 1 || n > MAX_SYMMETRIC_DEGREE {
            return Err(Error::SizeLimit(format!(
                "symmetric group degree must be in 1..={MAX_SYMMETRIC_DEGREE}, got {n}"
            )));
        }
        let mut generators = Vec::new();
        if n >= 2 {
            generators.push(Perm::from_cycles(n, &[vec![0, 1]])?);
            generators.push(Perm::from_cycles(n, &[(0..n as u8).collect()])?);
        }
        let mut g = Group::generated(n, generators)?;
        g.kind = KindTag::Symmetric(n);
        Ok(g)
    }

    /// Elementary abelian 2-group of rank `d`, acting faithfully on `2d`
    /// points; the i-th recorded generator is the transposition `(2i, 2i+1)`.
    pub fn elementary_abelian2(d: usize) -> Result<Group> {
        if d > MAX_F2_RANK {
            return Err(Error::SizeLimit(format!(
                "elementary abelian rank must be at most {MAX_F2_RANK}, got {d}"
            )));
        }
        let degree = 2 * d;
        let generators: Vec<Perm> = (0..d)
            .map(|i| Perm::from_cycles(degree, &[vec![2 * i as u8, 2 * i as u8 + 1]]))
            .collect::<Result<_>>()?;
        let mut g = Group::generated(degree, generators)?;
        g.kind = KindTag::ElementaryAbelian2(d);
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn kind(&self) -> &KindTag {
        &self.kind
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.index.contains_key(g)
    }

    pub fn element_index(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// lcm of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements.iter().fold(1, |acc, g| {
            let o = g.order();
            acc / gcd(acc, o) * o
        })
    }

    /// Conjugacy classes, ordered by (representative order, class size,
    /// representative); the identity class is always first.
    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let mut assigned: HashSet<Perm> = HashSet::new();
        let mut classes = Vec::new();
        for g in self.elements.iter() {
            if assigned.contains(g) {
                continue;
            }
            let mut class: Vec<Perm> = self
                .elements
                .iter()
                .map(|h| h.conjugate(g))
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            class.sort();
            for e in &class {
                assigned.insert(e.clone());
            }
            classes.push(ConjClass {
                rep: class[0].clone(),
                elements: class,
            });
        }
        classes.sort_by(|a, b| {
            (a.rep.order(), a.size(), &a.rep).cmp(&(b.rep.order(), b.size(), &b.rep))
        });
        classes
    }

    pub fn centralizer(&self, s: &Perm) -> Result<Subgroup> {
        if !self.contains(s) {
            return Err(Error::NotAnElement(s.cycle_notation()));
        }
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|g| g.compose(s) == s.compose(g))
            .cloned()
            .collect();
        Ok(Subgroup {
            parent: self.clone(),
            elements,
        })
    }

    /// Left coset space G/H with canonical (minimal) representatives, in
    /// representative order.
    pub fn left_cosets(&self, subgroup: &Subgroup) -> Result<CosetSpace> {
        if subgroup.parent != *self {
            return Err(Error::ParentMismatch);
        }
        let sub_set: HashSet<&Perm> = subgroup.elements.iter().collect();
        let mut coset_of: HashMap<Perm, usize> = HashMap::new();
        let mut reps = Vec::new();
        for g in self.elements.iter() {
            if coset_of.contains_key(g) {
                continue;
            }
            // elements() is sorted, so the first unseen g is minimal in gH
            let idx = reps.len();
            for h in &sub_set {
                coset_of.insert(g.compose(h), idx);
            }
            reps.push(g.clone());
        }
        Ok(CosetSpace {
            parent: self.clone(),
            subgroup: subgroup.clone(),
            reps,
            coset_of,
        })
    }

    /// Smallest subgroup containing the given elements.
    pub fn subgroup_generated(&self, gens: &[Perm]) -> Result<Subgroup> {
        for g in gens {
            if !self.contains(g) {
                return Err(Error::NotAnElement(g.cycle_notation()));
            }
        }
        let closure = Group::generated(self.degree, gens.to_vec())?;
        Ok(Subgroup {
            parent: self.clone(),
            elements: closure.elements.as_ref().clone(),
        })
    }

    /// Subgroup from an explicit element list (checked for closure).
    pub fn subgroup_from_elements(&self, elements: &[Perm]) -> Result<Subgroup> {
        let set: HashSet<&Perm> = elements.iter().collect();
        if !set.contains(&self.identity()) {
            return Err(Error::NotASubgroup("missing identity".into()));
        }
        for a in &set {
            if !self.contains(a) {
                return Err(Error::NotAnElement(a.cycle_notation()));
            }
            if !set.contains(&a.inverse()) {
                return Err(Error::NotASubgroup(format!("not closed under inverse: {a}")));
            }
            for b in &set {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::NotASubgroup(format!("not closed: {a} * {b}")));
                }
            }
        }
        let mut elements = elements.to_vec();
        elements.sort();
        elements.dedup();
        Ok(Subgroup {
            parent: self.clone(),
            elements,
        })
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            elements: vec![self.identity()],
        }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            elements: self.elements.as_ref().clone(),
        }
    }

    /// Searches for g with g A g^{-1} = B; brute force over the parent is
    /// fine at these orders.  Returns the minimal witness.
    pub fn conjugate_subgroup_witness(&self, a: &Subgroup, b: &Subgroup) -> Option<Perm> {
        if a.order() != b.order() {
            return None;
        }
        let b_set: HashSet<&Perm> = b.elements.iter().collect();
        'outer: for g in self.elements.iter() {
            for x in &a.elements {
                if !b_set.contains(&g.conjugate(x)) {
                    continue 'outer;
                }
            }
            return Some(g.clone());
        }
        None
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: Group,
    /// Sorted, duplicate-free.
    elements: Vec<Perm>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order={} of order {})", self.order(), self.parent.order())
    }
}

impl Subgroup {
    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn index_in_parent(&self) -> usize {
        self.parent.order() / self.order()
    }

    /// The subgroup as a standalone group on the same points.
    pub fn as_group(&self) -> Group {
        Group::from_sorted_elements(
            self.parent.degree(),
            self.elements.clone(),
            self.elements.clone(),
            KindTag::Custom,
        )
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|g| other.contains(g))
            .cloned()
            .collect();
        Ok(Subgroup {
            parent: self.parent.clone(),
            elements,
        })
    }

    /// g H g^{-1} as a subgroup of the same parent.
    pub fn conjugated_by(&self, g: &Perm) -> Subgroup {
        let mut elements: Vec<Perm> = self.elements.iter().map(|h| g.conjugate(h)).collect();
        elements.sort();
        Subgroup {
            parent: self.parent.clone(),
            elements,
        }
    }

    /// A small generating set (greedy closure growth), useful for reports.
    pub fn small_generating_set(&self) -> Vec<Perm> {
        let mut gens: Vec<Perm> = Vec::new();
        let mut have: HashSet<Perm> = HashSet::new();
        have.insert(self.parent.identity());
        for g in &self.elements {
            if have.contains(g) {
                continue;
            }
            gens.push(g.clone());
            let closure = Group::generated(self.parent.degree(), gens.clone()).unwrap();
            have = closure.elements().iter().cloned().collect();
            if have.len() == self.elements.len() {
                break;
            }
        }
        gens
    }
}

#[derive(Clone)]
pub struct CosetSpace {
    parent: Group,
    subgroup: Subgroup,
    reps: Vec<Perm>,
    coset_of: HashMap<Perm, usize>,
}

impl CosetSpace {
    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn reps(&self) -> &[Perm] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the coset gH.
    pub fn coset_index(&self, g: &Perm) -> Option<usize> {
        self.coset_of.get(g).copied()
    }

    /// Index of the coset s * (reps[i] H).
    pub fn left_translate(&self, s: &Perm, i: usize) -> usize {
        self.coset_of[&s.compose(&self.reps[i])]
    }
}
