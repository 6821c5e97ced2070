//! Ordinary character tables, computed exactly.
//!
//! The table is produced by the class-sum eigenvector method over a prime
//! field F_p with p = 1 (mod exponent), p > 2*sqrt(|G|): the class matrices
//! are simultaneously diagonalized over F_p, degrees and character values are
//! recovered mod p, and each value is lifted to the cyclotomic field of
//! conductor = exponent(G) through the eigenvalue-multiplicity counts, which
//! are honest nonnegative integers below p.  Row and column orthogonality of
//! the finished table are verified exactly on construction.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num::rational::BigRational;
use once_cell::sync::Lazy;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{ConjClass, Group};
use crate::perm::Perm;

pub struct CharacterTable {
    group: Group,
    classes: Vec<ConjClass>,
    class_of: HashMap<Perm, usize>,
    conductor: u64,
    /// rows[i][j] = value of the i-th irreducible on the j-th class.
    rows: Vec<Vec<Cyclotomic>>,
}

static TABLE_CACHE: Lazy<Mutex<HashMap<Vec<Perm>, Arc<CharacterTable>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The complete character table of `g`, cached by element list.
pub fn character_table(g: &Group) -> Arc<CharacterTable> {
    let key: Vec<Perm> = g.elements().to_vec();
    if let Some(t) = TABLE_CACHE.lock().unwrap().get(&key) {
        return t.clone();
    }
    let table = Arc::new(CharacterTable::compute(g));
    TABLE_CACHE.lock().unwrap().insert(key, table.clone());
    table
}

impl CharacterTable {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_irreps(&self) -> usize {
        self.rows.len()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn class_index(&self, g: &Perm) -> Option<usize> {
        self.class_of.get(g).copied()
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.rows[i]
    }

    pub fn value(&self, irrep: usize, class: usize) -> &Cyclotomic {
        &self.rows[irrep][class]
    }

    /// chi_i(1) as an integer.
    pub fn degree(&self, i: usize) -> u64 {
        crate::ratmat::to_natural(&self.rows[i][0].to_rational().expect("degree is rational"))
            .expect("degree is a natural number")
    }

    fn compute(g: &Group) -> CharacterTable {
        let classes = g.conjugacy_classes();
        let mut class_of = HashMap::new();
        for (j, c) in classes.iter().enumerate() {
            for e in &c.elements {
                class_of.insert(e.clone(), j);
            }
        }
        let conductor = g.exponent() as u64;
        let rows = if classes.len() == 1 {
            vec![vec![Cyclotomic::one()]]
        } else {
            dixon_rows(g, &classes, &class_of, conductor)
        };
        let table = CharacterTable {
            group: g.clone(),
            classes,
            class_of,
            conductor,
            rows,
        };
        table.validate().expect("character table failed orthogonality validation");
        table
    }

    /// Exact orthogonality and degree checks.
    pub fn validate(&self) -> Result<()> {
        let k = self.num_classes();
        let order = self.group.order() as i64;
        if self.rows.len() != k {
            return Err(Error::Internal("row count != class count".into()));
        }
        if self.rows[0].iter().any(|v| *v != Cyclotomic::one()) {
            return Err(Error::Internal("first row is not the trivial character".into()));
        }
        // row orthogonality
        for i in 0..k {
            for l in i..k {
                let mut s = Cyclotomic::zero();
                for j in 0..k {
                    let term = self.rows[i][j]
                        .mul(&self.rows[l][j].conj())
                        .scale(&BigRational::from_integer((self.classes[j].size() as i64).into()));
                    s = s.add(&term);
                }
                let expect = if i == l { order } else { 0 };
                if s != Cyclotomic::from_integer(expect) {
                    return Err(Error::Internal(format!("row orthogonality failed at ({i},{l})")));
                }
            }
        }
        // column orthogonality
        for j in 0..k {
            for m in j..k {
                let mut s = Cyclotomic::zero();
                for i in 0..k {
                    s = s.add(&self.rows[i][j].mul(&self.rows[i][m].conj()));
                }
                let expect = if j == m {
                    (self.group.order() / self.classes[j].size()) as i64
                } else {
                    0
                };
                if s != Cyclotomic::from_integer(expect) {
                    return Err(Error::Internal(format!("column orthogonality failed at ({j},{m})")));
                }
            }
        }
        let degree_sq: u64 = (0..k).map(|i| self.degree(i) * self.degree(i)).sum();
        if degree_sq != self.group.order() as u64 {
            return Err(Error::Internal("sum of squared degrees != |G|".into()));
        }
        for i in 0..k {
            if self.group.order() as u64 % self.degree(i) != 0 {
                return Err(Error::Internal("degree does not divide |G|".into()));
            }
        }
        Ok(())
    }
}

/// A function constant on the conjugacy classes of a fixed table.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn from_integers(values: &[i64]) -> ClassFunction {
        ClassFunction {
            values: values.iter().map(|&v| Cyclotomic::from_integer(v)).collect(),
        }
    }

    /// Value on the class of `g`.
    pub fn value_at<'a>(&'a self, table: &CharacterTable, g: &Perm) -> &'a Cyclotomic {
        &self.values[table.class_index(g).expect("element of the group")]
    }
}

/// (1/|G|) sum_g a(g) conj(b(g)), computed exactly by classes.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction, table: &CharacterTable) -> Result<Cyclotomic> {
    let k = table.num_classes();
    if a.values.len() != k || b.values.len() != k {
        return Err(Error::DomainMismatch(format!(
            "class function length {} / {} vs {} classes",
            a.values.len(),
            b.values.len(),
            k
        )));
    }
    let mut s = Cyclotomic::zero();
    for j in 0..k {
        let term = a.values[j]
            .mul(&b.values[j].conj())
            .scale(&BigRational::from_integer((table.classes()[j].size() as i64).into()));
        s = s.add(&term);
    }
    Ok(s.scale(&BigRational::new(1.into(), (table.group().order() as i64).into())))
}

/// Rational inner product; errors when the exact value is irrational.
pub fn inner_product_rational(
    a: &ClassFunction,
    b: &ClassFunction,
    table: &CharacterTable,
) -> Result<BigRational> {
    let v = inner_product(a, b, table)?;
    v.to_rational()
        .ok_or_else(|| Error::NotRational(format!("{v}")))
}

/// Exact multiplicities of `f` against the irreducible rows, with the
/// reconstruction `sum m_i chi_i = f` verified.
pub fn decompose_class_function(f: &ClassFunction, table: &CharacterTable) -> Result<Vec<BigRational>> {
    let mut mults = Vec::with_capacity(table.num_irreps());
    for i in 0..table.num_irreps() {
        let chi = ClassFunction {
            values: table.row(i).to_vec(),
        };
        mults.push(inner_product_rational(f, &chi, table)?);
    }
    for j in 0..table.num_classes() {
        let mut s = Cyclotomic::zero();
        for (i, m) in mults.iter().enumerate() {
            s = s.add(&table.row(i)[j].scale(m));
        }
        if s != f.values[j] {
            return Err(Error::Internal("class function reconstruction failed".into()));
        }
    }
    Ok(mults)
}

// ---------------------------------------------------------------------------
// Dixon's method over F_p
// ---------------------------------------------------------------------------

struct Fp {
    p: u64,
}

impl Fp {
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn choose_prime(exponent: u64, order: u64) -> u64 {
    let bound = 2 * (order as f64).sqrt() as u64 + 2;
    let mut p = exponent + 1;
    loop {
        if p > bound && is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

fn primitive_root_of_unity(fp: &Fp, e: u64) -> u64 {
    // generator of F_p^*, then raised to (p-1)/e
    let pm1 = fp.p - 1;
    let mut prime_factors = Vec::new();
    let mut m = pm1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            prime_factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        prime_factors.push(m);
    }
    let gen = (2..fp.p)
        .find(|&g| prime_factors.iter().all(|&q| fp.pow(g, pm1 / q) != 1))
        .expect("primitive root exists");
    fp.pow(gen, pm1 / e)
}

/// Gaussian elimination helpers over F_p.  All matrices are Vec of rows.
fn nullspace_fp(fp: &Fp, mat: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let rows = mat.len();
    let cols = if rows == 0 { return Vec::new() } else { mat[0].len() };
    let mut m: Vec<Vec<u64>> = mat.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let inv = fp.inv(m[r][c]);
        for x in c..cols {
            m[r][x] = fp.mul(m[r][x], inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for x in c..cols {
                    let t = fp.mul(f, m[r][x]);
                    m[i][x] = fp.sub(m[i][x], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = fp.sub(0, m[row][free]);
        }
        basis.push(v);
    }
    basis
}

/// Solves B * C = W for C, where B is k x m with independent columns and W is
/// k x m2; returns C as m x m2 (columns are coordinates).
fn solve_in_basis(fp: &Fp, b_cols: &[Vec<u64>], w_cols: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let k = b_cols[0].len();
    let m = b_cols.len();
    let m2 = w_cols.len();
    // augmented rows: [B | W]
    let mut aug: Vec<Vec<u64>> = (0..k)
        .map(|r| {
            let mut row: Vec<u64> = b_cols.iter().map(|col| col[r]).collect();
            row.extend(w_cols.iter().map(|col| col[r]));
            row
        })
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..m {
        let Some(pr) = (r..k).find(|&i| aug[i][c] != 0) else { continue };
        aug.swap(r, pr);
        let inv = fp.inv(aug[r][c]);
        for x in c..m + m2 {
            aug[r][x] = fp.mul(aug[r][x], inv);
        }
        for i in 0..k {
            if i != r && aug[i][c] != 0 {
                let f = aug[i][c];
                for x in c..m + m2 {
                    let t = fp.mul(f, aug[r][x]);
                    aug[i][x] = fp.sub(aug[i][x], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    assert_eq!(pivots.len(), m, "basis columns must be independent");
    // coordinates: row i of the eliminated system
    (0..m)
        .map(|i| (0..m2).map(|j| aug[i][m + j]).collect())
        .collect()
}

fn mat_vec_fp(fp: &Fp, mat: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    mat.iter()
        .map(|row| {
            let mut s = 0u64;
            for (a, b) in row.iter().zip(v) {
                if *a != 0 && *b != 0 {
                    s = fp.add(s, fp.mul(*a, *b));
                }
            }
            s
        })
        .collect()
}

fn dixon_rows(
    g: &Group,
    classes: &[ConjClass],
    class_of: &HashMap<Perm, usize>,
    conductor: u64,
) -> Vec<Vec<Cyclotomic>> {
    let k = classes.len();
    let order = g.order() as u64;
    let fp = Fp {
        p: choose_prime(conductor, order),
    };
    let class_sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();

    // lazily computed class matrices M_i[j][l] = a_{ijl}
    let mut class_matrices: Vec<Option<Vec<Vec<u64>>>> = vec![None; k];
    let matrix = |i: usize, cm: &mut Vec<Option<Vec<Vec<u64>>>>| -> Vec<Vec<u64>> {
        if cm[i].is_none() {
            let mut counts = vec![vec![0u64; k]; k];
            for x in &classes[i].elements {
                for y in g.elements() {
                    let j = class_of[y];
                    let l = class_of[&x.compose(y)];
                    counts[j][l] += 1;
                }
            }
            for l in 0..k {
                for row in counts.iter_mut() {
                    debug_assert_eq!(row[l] % class_sizes[l], 0);
                    row[l] = row[l] / class_sizes[l] % fp.p;
                }
            }
            cm[i] = Some(counts);
        }
        cm[i].clone().unwrap()
    };

    // split the full space into common eigenlines
    let mut finished: Vec<Vec<u64>> = Vec::new();
    let mut active: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for i in 1..k {
        if active.is_empty() {
            break;
        }
        let m_i = matrix(i, &mut class_matrices);
        let mut next_active = Vec::new();
        for basis in active {
            let m = basis.len();
            let w_cols: Vec<Vec<u64>> = basis.iter().map(|b| mat_vec_fp(&fp, &m_i, b)).collect();
            let coords = solve_in_basis(&fp, &basis, &w_cols); // m x m, C[t][j]
            let mut split_total = 0;
            for lambda in 0..fp.p {
                let shifted: Vec<Vec<u64>> = (0..m)
                    .map(|r| {
                        (0..m)
                            .map(|c| {
                                let v = coords[r][c];
                                if r == c {
                                    fp.sub(v, lambda)
                                } else {
                                    v
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ns = nullspace_fp(&fp, &shifted);
                if ns.is_empty() {
                    continue;
                }
                split_total += ns.len();
                let sub_basis: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|u| {
                        let mut v = vec![0u64; k];
                        for (t, coeff) in u.iter().enumerate() {
                            if *coeff != 0 {
                                for (x, b) in v.iter_mut().zip(&basis[t]) {
                                    *x = fp.add(*x, fp.mul(*coeff, *b));
                                }
                            }
                        }
                        v
                    })
                    .collect();
                if sub_basis.len() == 1 {
                    finished.push(sub_basis.into_iter().next().unwrap());
                } else {
                    next_active.push(sub_basis);
                }
                if split_total == m {
                    break;
                }
            }
            assert_eq!(split_total, m, "class matrix must be diagonalizable mod p");
        }
        active = next_active;
    }
    assert!(active.is_empty(), "eigenspace splitting did not terminate");
    assert_eq!(finished.len(), k);

    // class of the inverse of each representative, and power maps
    let inv_class: Vec<usize> = classes.iter().map(|c| class_of[&c.rep.inverse()]).collect();

    // per eigenline: degree and character values mod p
    let mut chars_mod_p: Vec<(u64, Vec<u64>)> = Vec::new();
    for v in &finished {
        // normalize so the identity-class entry is 1; then v_j = |C_j| chi(g_j) / chi(1)
        assert!(v[0] != 0, "eigenvector vanishes on the identity class");
        let inv0 = fp.inv(v[0]);
        let v: Vec<u64> = v.iter().map(|&x| fp.mul(x, inv0)).collect();
        let mut denom = 0u64;
        for j in 0..k {
            let t = fp.mul(v[j], v[inv_class[j]]);
            denom = fp.add(denom, fp.mul(t, fp.inv(class_sizes[j])));
        }
        let d_sq = fp.mul(order % fp.p, fp.inv(denom));
        let d = (1..=fp.p / 2)
            .find(|&t| fp.mul(t, t) == d_sq)
            .expect("degree square root exists mod p");
        let values: Vec<u64> = (0..k)
            .map(|j| fp.mul(fp.mul(d, v[j]), fp.inv(class_sizes[j])))
            .collect();
        chars_mod_p.push((d, values));
    }

    // lift to the cyclotomic field of conductor = exponent
    let root = primitive_root_of_unity(&fp, conductor);
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
    for (_d, values) in &chars_mod_p {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let n = classes[j].rep.order() as u64;
            let omega = fp.pow(root, conductor / n); // primitive n-th root mod p
            // classes of the successive powers of the representative
            let mut power_classes = Vec::with_capacity(n as usize);
            let mut p_elt = Perm::identity(classes[j].rep.degree());
            for _ in 0..n {
                power_classes.push(class_of[&p_elt]);
                p_elt = classes[j].rep.compose(&p_elt);
            }
            let n_inv = fp.inv(n % fp.p);
            let mut value = Cyclotomic::zero();
            for m in 0..n {
                // multiplicity of the eigenvalue zeta_n^m in the representation
                let mut mu = 0u64;
                for (l, &pc) in power_classes.iter().enumerate() {
                    let w = fp.pow(fp.inv(omega), m * l as u64 % n);
                    mu = fp.add(mu, fp.mul(values[pc], w));
                }
                mu = fp.mul(mu, n_inv);
                if mu != 0 {
                    let zeta = Cyclotomic::root_of_unity(conductor, conductor / n * m);
                    value = value.add(&zeta.scale(&BigRational::from_integer((mu as i64).into())));
                }
            }
            row.push(value);
        }
        rows.push(row);
    }

    sort_rows(rows)
}

/// Deterministic row order: trivial character first, then ascending degree,
/// ties broken lexicographically on the canonical coefficient vectors of the
/// value vector in class order.
fn sort_rows(mut rows: Vec<Vec<Cyclotomic>>) -> Vec<Vec<Cyclotomic>> {
    let trivial_at = rows
        .iter()
        .position(|r| r.iter().all(|v| *v == Cyclotomic::one()))
        .expect("table contains the trivial character");
    let trivial = rows.remove(trivial_at);
    rows.sort_by(|a, b| {
        let da = a[0].to_rational().unwrap();
        let db = b[0].to_rational().unwrap();
        da.cmp(&db).then_with(|| {
            for (x, y) in a.iter().zip(b) {
                let c = x.lex_cmp(y);
                if c != std::cmp::Ordering::Equal {
                    return c;
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    let mut out = vec![trivial];
    out.extend(rows);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;
    use crate::perm::Perm;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cyclic_two() {
        let c2 = Group::generated(2, vec![Perm::from_cycles(2, &[vec![0, 1]]).unwrap()]).unwrap();
        let t = character_table(&c2);
        assert_eq!(t.num_irreps(), 2);
        assert_eq!(t.row(0), &[Cyclotomic::one(), Cyclotomic::one()]);
        assert_eq!(t.row(1), &[Cyclotomic::one(), Cyclotomic::from_integer(-1)]);
    }

    #[test]
    fn s3_degrees() {
        let s3 = Group::symmetric(3).unwrap();
        let t = character_table(&s3);
        let mut degrees: Vec<u64> = (0..t.num_irreps()).map(|i| t.degree(i)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 2]);
    }

    #[test]
    fn cyclic_five_values() {
        let c5 = Group::generated(5, vec![Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap()])
            .unwrap();
        let t = character_table(&c5);
        assert_eq!(t.num_irreps(), 5);
        assert_eq!(t.conductor(), 5);
        for i in 0..5 {
            assert_eq!(t.degree(i), 1);
        }
        // each nontrivial row takes a primitive fifth root of unity somewhere
        for i in 1..5 {
            assert!(t.row(i).iter().any(|v| v.to_rational().is_none()));
        }
    }

    #[test]
    fn s4_and_s5_tables_validate() {
        for n in [4, 5] {
            let g = Group::symmetric(n).unwrap();
            let t = character_table(&g);
            assert_eq!(t.num_irreps(), t.num_classes());
            t.validate().unwrap();
        }
    }

    #[test]
    fn irreducibles_are_orthonormal() {
        let s4 = Group::symmetric(4).unwrap();
        let t = character_table(&s4);
        for i in 0..t.num_irreps() {
            let chi = ClassFunction { values: t.row(i).to_vec() };
            assert_eq!(inner_product_rational(&chi, &chi, &t).unwrap(), rat(1));
        }
    }

    #[test]
    fn regular_character_decomposes_by_degrees() {
        let s3 = Group::symmetric(3).unwrap();
        let t = character_table(&s3);
        let mut values = vec![Cyclotomic::zero(); t.num_classes()];
        values[0] = Cyclotomic::from_integer(s3.order() as i64);
        let reg = ClassFunction { values };
        let trivial = ClassFunction { values: t.row(0).to_vec() };
        assert_eq!(inner_product_rational(&reg, &trivial, &t).unwrap(), rat(1));
        let mults = decompose_class_function(&reg, &t).unwrap();
        for (i, m) in mults.iter().enumerate() {
            assert_eq!(*m, rat(t.degree(i) as i64));
        }
    }

    #[test]
    fn permutation_character_of_s3() {
        // natural action on 3 points: fixed point counts per class
        let s3 = Group::symmetric(3).unwrap();
        let t = character_table(&s3);
        let values: Vec<Cyclotomic> = t
            .classes()
            .iter()
            .map(|c| {
                let fixed = (0..3).filter(|&p| c.rep.apply(p) == p).count();
                Cyclotomic::from_integer(fixed as i64)
            })
            .collect();
        let perm_char = ClassFunction { values };
        // standard 2-dimensional character appears once
        let std_idx = (0..t.num_irreps()).find(|&i| t.degree(i) == 2).unwrap();
        let std_chi = ClassFunction { values: t.row(std_idx).to_vec() };
        assert_eq!(inner_product_rational(&perm_char, &std_chi, &t).unwrap(), rat(1));
        let mults = decompose_class_function(&perm_char, &t).unwrap();
        assert_eq!(mults.iter().filter(|m| !m.is_zero()).count(), 2);
    }

    #[test]
    fn s4_natural_permutation_character() {
        let s4 = Group::symmetric(4).unwrap();
        let t = character_table(&s4);
        let values: Vec<Cyclotomic> = t
            .classes()
            .iter()
            .map(|c| {
                let fixed = (0..4).filter(|&p| c.rep.apply(p) == p).count();
                Cyclotomic::from_integer(fixed as i64)
            })
            .collect();
        let mults = decompose_class_function(&ClassFunction { values }, &t).unwrap();
        // trivial + one 3-dimensional constituent
        assert_eq!(mults[0], rat(1));
        let total: BigRational = mults
            .iter()
            .enumerate()
            .map(|(i, m)| m * rat(t.degree(i) as i64))
            .sum();
        assert_eq!(total, rat(4));
        assert_eq!(mults.iter().filter(|m| !m.is_zero()).count(), 2);
        let other = (1..t.num_irreps()).find(|&i| !mults[i].is_zero()).unwrap();
        assert_eq!(t.degree(other), 3);
    }

    #[test]
    fn abelian_two_group_table() {
        let g = Group::elementary_abelian2(3).unwrap();
        let t = character_table(&g);
        assert_eq!(t.num_irreps(), 8);
        assert!((0..8).all(|i| t.degree(i) == 1));
        assert!(t
            .rows
            .iter()
            .flatten()
            .all(|v| v.to_rational().is_some()));
    }

    #[test]
    fn domain_mismatch_is_reported() {
        let s3 = Group::symmetric(3).unwrap();
        let t = character_table(&s3);
        let short = ClassFunction::from_integers(&[1, 2]);
        assert!(matches!(
            inner_product(&short, &short, &t),
            Err(Error::DomainMismatch(_))
        ));
    }
}
