//! Arithmetic in GF(2^d) via log/antilog tables, and permutation
//! polynomial evaluation.
//!
//! Element labels are the coefficient bit-vectors read as integers, so
//! the element x is the label 2. The primitive element of every field
//! built here is x itself.

use alloc::vec::Vec;
use core::fmt;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    BadDegree,
    /// Supplied modulus whose residue class of x is not primitive.
    NotPrimitive,
    /// Modulus mask of the wrong degree or with zero constant term.
    BadModulus,
    NotBijective,
    ExponentNotCoprime,
    OutOfRange,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::BadDegree => write!(f, "degree must be between 2 and 16"),
            FieldError::NotPrimitive => write!(f, "modulus is not primitive"),
            FieldError::BadModulus => write!(f, "modulus mask is malformed"),
            FieldError::NotBijective => write!(f, "polynomial is not a permutation"),
            FieldError::ExponentNotCoprime => {
                write!(f, "monomial exponent shares a factor with the group order")
            }
            FieldError::OutOfRange => write!(f, "element out of range"),
        }
    }
}

impl core::error::Error for FieldError {}

/// GF(2^d) with log/antilog tables over the primitive element x.
#[derive(Debug, Clone)]
pub struct FieldGF2d {
    d: u32,
    modulus: u32,
    /// antilog[k] = x^k, length N-1
    antilog: Vec<u32>,
    /// log[v] = k with x^k = v, for v in 1..N; log[0] unused
    log: Vec<u32>,
}

impl FieldGF2d {
    /// Builds GF(2^d). Without an explicit modulus the lexicographically
    /// smallest primitive polynomial is used; these are x^3+x+1,
    /// x^4+x+1, x^5+x^2+1 and x^7+x+1 for d = 3, 4, 5, 7.
    pub fn new(d: u32, modulus: Option<u32>) -> Result<Self, FieldError> {
        if !(2..=16).contains(&d) {
            return Err(FieldError::BadDegree);
        }
        match modulus {
            Some(m) => Self::with_modulus(d, m),
            None => {
                for m in (1u32 << d) + 1..1u32 << (d + 1) {
                    if m & 1 == 1 {
                        if let Ok(field) = Self::with_modulus(d, m) {
                            return Ok(field);
                        }
                    }
                }
                unreachable!("a primitive polynomial exists for every degree")
            }
        }
    }

    fn with_modulus(d: u32, modulus: u32) -> Result<Self, FieldError> {
        let n = 1u32 << d;
        if modulus >> d != 1 || modulus & 1 == 0 {
            return Err(FieldError::BadModulus);
        }
        let mut antilog = Vec::with_capacity(n as usize - 1);
        let mut log = alloc::vec![0u32; n as usize];
        let mut v = 1u32;
        for k in 0..n - 1 {
            if v == 1 && k > 0 {
                return Err(FieldError::NotPrimitive);
            }
            if v >= n || log[v as usize] != 0 && v != 1 {
                return Err(FieldError::NotPrimitive);
            }
            antilog.push(v);
            log[v as usize] = k;
            v <<= 1;
            if v & n != 0 {
                v ^= modulus;
            }
        }
        if v != 1 {
            return Err(FieldError::NotPrimitive);
        }
        Ok(FieldGF2d { d, modulus, antilog, log })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Field size N = 2^d.
    pub fn size(&self) -> u32 {
        1 << self.d
    }

    /// The primitive element x (label 2).
    pub fn generator(&self) -> u32 {
        2
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        x ^ y
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        let order = self.size() - 1;
        let k = (self.log[x as usize] + self.log[y as usize]) % order;
        self.antilog[k as usize]
    }

    pub fn inv(&self, x: u32) -> Option<u32> {
        if x == 0 {
            return None;
        }
        let order = self.size() - 1;
        let k = (order - self.log[x as usize]) % order;
        Some(self.antilog[k as usize])
    }

    pub fn pow(&self, x: u32, e: u64) -> u32 {
        if x == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let order = (self.size() - 1) as u64;
        let k = (self.log[x as usize] as u64 * (e % order)) % order;
        self.antilog[k as usize]
    }

    /// x^k for the primitive element x.
    pub fn exp(&self, k: u64) -> u32 {
        self.antilog[(k % (self.size() as u64 - 1)) as usize]
    }

    /// Discrete log of a nonzero element.
    pub fn dlog(&self, x: u32) -> Option<u32> {
        if x == 0 || x >= self.size() {
            return None;
        }
        Some(self.log[x as usize])
    }
}

/// A polynomial over GF(2^d) with zero constant term, stored as
/// coefficients of X^1, X^2, ...
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldPolynomial {
    coeffs: Vec<u32>,
}

impl FieldPolynomial {
    /// `coeffs[i]` is the coefficient of X^(i+1).
    pub fn new(coeffs: Vec<u32>) -> Self {
        let mut c = coeffs;
        while c.last() == Some(&0) {
            c.pop();
        }
        FieldPolynomial { coeffs: c }
    }

    pub fn monomial(exponent: u32, coeff: u32) -> Self {
        let mut coeffs = alloc::vec![0u32; exponent as usize];
        coeffs[exponent as usize - 1] = coeff;
        FieldPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn eval(&self, field: &FieldGF2d, x: u32) -> u32 {
        // Horner on c_1 X + .. + c_k X^k = X (c_1 + X (c_2 + ..))
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, x), c);
        }
        field.mul(acc, x)
    }
}

/// The permutation x -> P(x) of all of F_N (0 included; P fixes 0
/// since it has no constant term). Fails if P is not bijective.
pub fn eval_permutation_polynomial(
    field: &FieldGF2d,
    p: &FieldPolynomial,
) -> Result<Permutation, FieldError> {
    let images: Vec<u32> = (0..field.size()).map(|x| p.eval(field, x)).collect();
    Permutation::from_images(images).map_err(|_| FieldError::NotBijective)
}

/// The permutation x -> x^r; requires gcd(r, N-1) = 1.
pub fn monomial_permutation(field: &FieldGF2d, r: u32) -> Result<Permutation, FieldError> {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    if gcd(r as u64, field.size() as u64 - 1) != 1 {
        return Err(FieldError::ExponentNotCoprime);
    }
    eval_permutation_polynomial(field, &FieldPolynomial::monomial(r, 1))
}

/// True if the permutation of F_N is additive, i.e. F_2-linear.
pub fn is_additive(perm: &Permutation) -> bool {
    let n = perm.len() as u32;
    for x in 0..n {
        for y in 0..n {
            if perm.apply(x ^ y) != perm.apply(x) ^ perm.apply(y) {
                return false;
            }
        }
    }
    true
}
