//! Exact arithmetic in `Q(w)`, `w = e^(2 pi i / m)`.
//!
//! Elements are coordinate vectors over `Q` in the power basis
//! `1, w, ..., w^(phi(m) - 1)`, reduced modulo the cyclotomic polynomial
//! `Phi_m`. The representation is canonical, so equality is coordinate
//! equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pomset::check_modulus;

/// Integer polynomial, lowest degree first.
type IntPoly = Vec<BigInt>;

/// `Phi_m` together with the reduction of every `w^k`, `0 <= k < m`.
#[derive(Debug)]
pub struct CyclotomicField {
    modulus: u32,
    phi: IntPoly,
    powers: Vec<Vec<BigInt>>,
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient by a monic divisor; panics if the division leaves a
/// remainder.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> IntPoly {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// Remainder of `x^exp` modulo a monic polynomial, by long division.
pub fn x_power_mod(exp: usize, monic: &[BigInt]) -> Vec<BigInt> {
    let d = monic.len() - 1;
    let mut rem = vec![BigInt::zero(); exp.max(d) + 1];
    rem[exp] = BigInt::one();
    for k in (d..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        for (j, p) in monic.iter().enumerate() {
            rem[k - d + j] -= &c * p;
        }
    }
    rem.truncate(d);
    rem
}

/// `Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d`.
fn cyclotomic_polynomial(m: u32, memo: &mut HashMap<u32, IntPoly>) -> IntPoly {
    if let Some(p) = memo.get(&m) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    let mut den: IntPoly = vec![BigInt::one()];
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        den = poly_mul(&den, &cyclotomic_polynomial(d, memo));
    }
    let phi = poly_div_exact(&num, &den);
    memo.insert(m, phi.clone());
    phi
}

impl CyclotomicField {
    fn build(modulus: u32) -> Self {
        let phi = cyclotomic_polynomial(modulus, &mut HashMap::new());
        let d = phi.len() - 1;
        let mut powers = Vec::with_capacity(modulus as usize);
        let mut cur = vec![BigInt::zero(); d];
        cur[0] = BigInt::one();
        for _ in 0..modulus {
            powers.push(cur.clone());
            // multiply by w and reduce the overflowing coordinate
            let top = cur[d - 1].clone();
            let mut next = vec![BigInt::zero(); d];
            next[1..d].clone_from_slice(&cur[..d - 1]);
            if !top.is_zero() {
                for (slot, p) in next.iter_mut().zip(&phi) {
                    *slot -= &top * p;
                }
            }
            cur = next;
        }
        CyclotomicField { modulus, phi, powers }
    }

    /// Shared, lazily built field for modulus `m`.
    pub fn get(modulus: u32) -> Result<Arc<CyclotomicField>> {
        check_modulus(modulus)?;
        static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = FIELDS.get_or_init(Default::default);
        if let Some(f) = cache.lock().unwrap().get(&modulus) {
            return Ok(f.clone());
        }
        let built = Arc::new(Self::build(modulus));
        Ok(cache.lock().unwrap().entry(modulus).or_insert(built).clone())
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `phi(m)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Coefficients of `Phi_m`, lowest degree first.
    pub fn polynomial(&self) -> &[BigInt] {
        &self.phi
    }

    /// Power-basis coordinates of `w^k`.
    pub fn power_coords(&self, k: i64) -> &[BigInt] {
        &self.powers[k.rem_euclid(self.modulus as i64) as usize]
    }
}

/// An exact element of `Q(w_m)`.
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.modulus == other.field.modulus && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNum {}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(m={}, {})", self.field.modulus, self)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})w")?,
                _ => write!(f, "({c})w^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CycloNum {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CycloNum {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree()],
        }
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, n: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(field);
        z.coeffs[0] = BigRational::from_integer(n.into());
        z
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_integer(field, 1)
    }

    /// `w^k` for any integer `k`.
    pub fn root_power(field: &Arc<CyclotomicField>, k: i64) -> Self {
        CycloNum {
            field: field.clone(),
            coeffs: field.power_coords(k).iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        }
    }

    /// `sum_k weights[k] w^k` over `k = 0..m`.
    pub fn from_group_ring<T: Clone + Into<BigInt>>(field: &Arc<CyclotomicField>, weights: &[T]) -> Self {
        let mut acc = vec![BigInt::zero(); field.degree()];
        for (k, w) in weights.iter().enumerate() {
            let w: BigInt = w.clone().into();
            if w.is_zero() {
                continue;
            }
            for (slot, c) in acc.iter_mut().zip(field.power_coords(k as i64)) {
                *slot += &w * c;
            }
        }
        CycloNum {
            field: field.clone(),
            coeffs: acc.into_iter().map(BigRational::from_integer).collect(),
        }
    }

    /// `cos(2 pi k / m) = (w^k + w^-k) / 2`.
    pub fn cosine(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let two = BigRational::from_integer(2.into());
        (Self::root_power(field, k) + Self::root_power(field, -k)).scale(&(BigRational::one() / two))
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn modulus(&self) -> u32 {
        self.field.modulus
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(n.into()))
    }

    /// The rational value if every non-constant coordinate vanishes.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same_field(&self, other: &CycloNum) {
        assert_eq!(self.field.modulus, other.field.modulus, "mixing cyclotomic fields");
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.check_same_field(rhs);
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Add for CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: CycloNum) -> CycloNum {
        &self + &rhs
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.check_same_field(rhs);
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Sub for CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: CycloNum) -> CycloNum {
        &self - &rhs
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.check_same_field(rhs);
        let field = &self.field;
        let m = field.modulus as usize;
        // product in the group ring Q[Z_m], then one reduction pass
        let mut ring = vec![BigRational::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                ring[(i + j) % m] += a * b;
            }
        }
        let mut coeffs = vec![BigRational::zero(); field.degree()];
        for (k, g) in ring.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            for (slot, c) in coeffs.iter_mut().zip(field.power_coords(k as i64)) {
                if !c.is_zero() {
                    *slot += g * BigRational::from_integer(c.clone());
                }
            }
        }
        CycloNum {
            field: field.clone(),
            coeffs,
        }
    }
}

impl Mul for CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: CycloNum) -> CycloNum {
        &self * &rhs
    }
}

impl std::iter::Sum for CycloNum {
    fn sum<I: Iterator<Item = CycloNum>>(mut iter: I) -> CycloNum {
        let first = iter.next().expect("summing an empty CycloNum iterator needs a field; use fold");
        iter.fold(first, |acc, x| &acc + &x)
    }
}

/// `w^power` in `Q(w_m)`.
pub fn cyclo(modulus: u32, power: i64) -> Result<CycloNum> {
    let field = CyclotomicField::get(modulus)?;
    Ok(CycloNum::root_power(&field, power))
}

/// `sum_{t=-j}^{j} w^(u t)`, i.e. `1 + 2 sum_{t=1}^{j} cos(2 pi u t / m)`.
pub fn kernel_sum(u: u32, j: u32, modulus: u32) -> Result<CycloNum> {
    let field = CyclotomicField::get(modulus)?;
    if u >= modulus {
        return Err(Error::ResidueOutOfRange { value: u, modulus });
    }
    if j > modulus / 2 {
        return Err(Error::IndexOutOfRange {
            index: j as usize,
            max: (modulus / 2) as usize,
        });
    }
    let m = modulus as usize;
    let mut weights = vec![0i64; m];
    for t in -(j as i64)..=(j as i64) {
        weights[(u as i64 * t).rem_euclid(m as i64) as usize] += 1;
    }
    Ok(CycloNum::from_group_ring(&field, &weights))
}

/// Extracts a rational integer, failing on anything irrational or
/// fractional.
pub fn as_integer(x: &CycloNum) -> Result<BigInt> {
    match x.as_rational() {
        Some(r) if r.is_integer() => Ok(r.to_integer()),
        _ => Err(Error::NonInteger(x.to_string())),
    }
}
