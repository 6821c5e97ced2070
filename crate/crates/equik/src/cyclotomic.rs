//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! A value is stored as rational coefficients over the power basis
//! `1, z, .., z^{phi(N)-1}` of a fixed conductor N, reduced modulo the N-th
//! cyclotomic polynomial.  That reduced form is unique, so equality is
//! coefficient comparison (after promoting both sides to a common conductor).
//! No floating point is involved anywhere.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use once_cell::sync::Lazy;

pub fn euler_phi(n: u64) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Per-conductor data: the cyclotomic polynomial and the reductions of
/// `x^j` modulo it, for every exponent that can arise in products and
/// Galois images.
struct CycTables {
    phi: usize,
    /// powers[j] = coefficients of x^j mod Phi_N, length phi.
    powers: Vec<Vec<BigRational>>,
}

static TABLES: Lazy<Mutex<HashMap<u64, Arc<CycTables>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Coefficients of Phi_n, index = power, monic.
fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Exact division of integer polynomials (monic divisor).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one());
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        quot[i] = c.clone();
        for j in 0..=dd {
            rem[i + j] -= &c * &den[j];
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

fn tables(n: u64) -> Arc<CycTables> {
    let mut cache = TABLES.lock().unwrap();
    if let Some(t) = cache.get(&n) {
        return t.clone();
    }
    let phi = euler_phi(n);
    let poly = cyclotomic_polynomial(n);
    // x^phi mod Phi = -(lower coefficients)
    let top: Vec<BigRational> = (0..phi)
        .map(|i| -BigRational::from_integer(poly[i].clone()))
        .collect();
    let max_exp = std::cmp::max(n as usize, 2 * phi.max(1));
    let mut powers: Vec<Vec<BigRational>> = Vec::with_capacity(max_exp);
    let mut cur = vec![BigRational::zero(); phi];
    cur[0] = BigRational::one();
    powers.push(cur.clone());
    for _ in 1..max_exp {
        let carry = cur[phi - 1].clone();
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = BigRational::zero();
        if !carry.is_zero() {
            for i in 0..phi {
                cur[i] += &carry * &top[i];
            }
        }
        powers.push(cur.clone());
    }
    let t = Arc::new(CycTables { phi, powers });
    cache.insert(n, t.clone());
    t
}

#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u64,
    /// length phi(conductor), reduced modulo Phi_conductor.
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Cyclotomic {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Cyclotomic {
        Cyclotomic::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Cyclotomic {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(n: i64) -> Cyclotomic {
        Cyclotomic::from_rational(BigRational::from_integer(n.into()))
    }

    /// zeta_n^k.
    pub fn root_of_unity(n: u64, k: u64) -> Cyclotomic {
        assert!(n >= 1);
        let t = tables(n);
        Cyclotomic {
            conductor: n,
            coeffs: t.powers[(k % n) as usize].clone(),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-expresses the value in Q(zeta_m), where the current conductor
    /// divides m.
    pub fn promote(&self, m: u64) -> Cyclotomic {
        if m == self.conductor {
            return self.clone();
        }
        assert_eq!(m % self.conductor, 0, "conductor {} does not divide {}", self.conductor, m);
        let step = m / self.conductor;
        let t = tables(m);
        let mut coeffs = vec![BigRational::zero(); t.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as u64 * step) % m;
            for (j, p) in t.powers[e as usize].iter().enumerate() {
                coeffs[j] += c * p;
            }
        }
        Cyclotomic { conductor: m, coeffs }
    }

    fn common(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if a.conductor == b.conductor {
            (a.clone(), b.clone())
        } else {
            let m = lcm_u64(a.conductor, b.conductor);
            (a.promote(m), b.promote(m))
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, other);
        let t = tables(a.conductor);
        let phi = t.phi;
        let mut coeffs = vec![BigRational::zero(); phi];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let prod = x * y;
                if i + j < phi {
                    coeffs[i + j] += prod;
                } else {
                    for (k, p) in t.powers[i + j].iter().enumerate() {
                        if !p.is_zero() {
                            coeffs[k] += &prod * p;
                        }
                    }
                }
            }
        }
        Cyclotomic { conductor: a.conductor, coeffs }
    }

    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Galois image under zeta -> zeta^k; requires gcd(k, conductor) = 1.
    pub fn galois(&self, k: u64) -> Cyclotomic {
        assert_eq!(gcd_u64(k, self.conductor), 1, "galois exponent must be coprime to the conductor");
        let t = tables(self.conductor);
        let mut coeffs = vec![BigRational::zero(); t.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as u64 * k) % self.conductor;
            for (j, p) in t.powers[e as usize].iter().enumerate() {
                coeffs[j] += c * p;
            }
        }
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    /// Complex conjugation: zeta -> zeta^{N-1}.
    pub fn conj(&self) -> Cyclotomic {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// Some(r) iff the value is rational; in reduced form this means all
    /// non-constant coefficients vanish.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Deterministic total order: promote to a common conductor, compare
    /// coefficient vectors lexicographically.
    pub fn lex_cmp(&self, other: &Cyclotomic) -> std::cmp::Ordering {
        let (a, b) = Cyclotomic::common(self, other);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Cyclotomic) -> bool {
        let (a, b) = Cyclotomic::common(self, other);
        a.coeffs == b.coeffs
    }
}
impl Eq for Cyclotomic {}

impl std::fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyc(N={}; {:?})", self.conductor, self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl std::fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "z{}^{}", self.conductor, i)?;
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, 1)
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(60), 16);
    }

    #[test]
    fn primitive_root_power_cycles() {
        for n in [1u64, 2, 3, 4, 5, 6, 8, 12, 60] {
            let z = zeta(n);
            let mut p = Cyclotomic::one();
            for _ in 0..n {
                p = p.mul(&z);
            }
            assert_eq!(p, Cyclotomic::one(), "zeta_{n}^{n} != 1");
        }
    }

    #[test]
    fn minimal_polynomial_vanishes() {
        // 1 + z + z^2 = 0 for z = zeta_3
        let z = zeta(3);
        let s = Cyclotomic::one().add(&z).add(&z.mul(&z));
        assert!(s.is_zero());
        // z^2 = -1 for z = zeta_4
        assert_eq!(zeta(4).mul(&zeta(4)), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn conjugation_is_involutive_and_fixes_rationals() {
        let v = zeta(5).add(&Cyclotomic::from_integer(3));
        assert_eq!(v.conj().conj(), v);
        let r = Cyclotomic::from_rational(BigRational::new(7.into(), 2.into()));
        assert_eq!(r.conj(), r);
        // z * conj(z) = 1 for roots of unity
        assert_eq!(zeta(12).mul(&zeta(12).conj()), Cyclotomic::one());
    }

    #[test]
    fn cross_conductor_equality() {
        // zeta_6^3 = -1 = zeta_2
        let a = Cyclotomic::root_of_unity(6, 3);
        let b = Cyclotomic::root_of_unity(2, 1);
        assert_eq!(a, b);
        // rational constants embedded at any conductor compare equal
        let c = Cyclotomic::from_integer(2).promote(12);
        assert_eq!(c, Cyclotomic::from_integer(2));
        assert_eq!(c.to_rational(), Some(BigRational::from_integer(2.into())));
    }

    #[test]
    fn gauss_sum_in_conductor_5() {
        // (2*zeta_5 + 2*zeta_5^4 + 1)^2 = 5
        let g = Cyclotomic::root_of_unity(5, 1)
            .scale(&BigRational::from_integer(2.into()))
            .add(&Cyclotomic::root_of_unity(5, 4).scale(&BigRational::from_integer(2.into())))
            .add(&Cyclotomic::one());
        assert_eq!(g.mul(&g), Cyclotomic::from_integer(5));
    }

    #[test]
    fn ring_axioms_spot_check() {
        let vals = [
            zeta(12),
            zeta(12).mul(&zeta(12)),
            Cyclotomic::from_integer(-2),
            zeta(4).add(&zeta(3)),
        ];
        for a in &vals {
            for b in &vals {
                assert_eq!(a.mul(b), b.mul(a));
                assert_eq!(a.add(b), b.add(a));
                for c in &vals {
                    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                    assert_eq!(a.mul(&b.mul(c)), a.mul(b).mul(c));
                }
            }
        }
    }
}
