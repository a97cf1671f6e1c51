//! Exact arithmetic in prime fields GF(p).
//!
//! Elements carry their modulus, and mixing elements of different fields is a
//! hard error rather than an implicit coercion. Only prime moduli below 2^15
//! are accepted; extension fields are out of scope.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} exceeds the supported bound 2^15")]
    ModulusTooLarge(u32),
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
}

/// A prime field GF(p), `p < 2^15`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldSpec {
    p: u16,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if p >= 1 << 15 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec { p: p as u16 })
    }

    pub fn p(&self) -> u16 {
        self.p
    }

    /// The element congruent to `v` mod p (negative inputs allowed).
    pub fn elem(&self, v: i64) -> FieldElem {
        let p = self.p as i64;
        FieldElem {
            value: v.rem_euclid(p) as u16,
            spec: *self,
        }
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { value: 0, spec: *self }
    }

    pub fn one(&self) -> FieldElem {
        self.elem(1)
    }

    /// All p field elements, in the order 0, 1, ..., p-1.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        let spec = *self;
        (0..self.p).map(move |v| FieldElem { value: v, spec })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// An element of GF(p), stored as its canonical representative in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem {
    value: u16,
    spec: FieldSpec,
}

impl FieldElem {
    pub fn value(&self) -> u16 {
        self.value
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let p = self.spec.p;
        let mut base = self.value;
        let mut acc = 1u16;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulp(acc, base, p);
            }
            base = mulp(base, base, p);
            e >>= 1;
        }
        FieldElem { value: acc, spec: self.spec }
    }

    /// Multiplicative inverse via Fermat: a^(p-2).
    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        if self.value == 0 {
            return Err(FieldError::InverseOfZero);
        }
        Ok(self.pow(self.spec.p as u64 - 2))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn check_same(a: FieldSpec, b: FieldSpec) {
    assert_eq!(a, b, "arithmetic between {a} and {b} elements");
}

// Raw helpers used by the matrix kernels; values must already be reduced.
pub(crate) fn addp(a: u16, b: u16, p: u16) -> u16 {
    let s = a as u32 + b as u32;
    (if s >= p as u32 { s - p as u32 } else { s }) as u16
}

pub(crate) fn subp(a: u16, b: u16, p: u16) -> u16 {
    let s = a as u32 + p as u32 - b as u32;
    (if s >= p as u32 { s - p as u32 } else { s }) as u16
}

pub(crate) fn mulp(a: u16, b: u16, p: u16) -> u16 {
    ((a as u32 * b as u32) % p as u32) as u16
}

pub(crate) fn negp(a: u16, p: u16) -> u16 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub(crate) fn invp(a: u16, p: u16) -> u16 {
    debug_assert!(a != 0);
    let mut e = p as u64 - 2;
    let mut base = a;
    let mut acc = 1u16;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulp(acc, base, p);
        }
        base = mulp(base, base, p);
        e >>= 1;
    }
    acc
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        check_same(self.spec, rhs.spec);
        FieldElem {
            value: addp(self.value, rhs.value, self.spec.p),
            spec: self.spec,
        }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        check_same(self.spec, rhs.spec);
        FieldElem {
            value: subp(self.value, rhs.value, self.spec.p),
            spec: self.spec,
        }
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        check_same(self.spec, rhs.spec);
        FieldElem {
            value: mulp(self.value, rhs.value, self.spec.p),
            spec: self.spec,
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            value: negp(self.value, self.spec.p),
            spec: self.spec,
        }
    }
}
