//! Sparse multivariate polynomials over GF(p), used for the symbolic
//! determinant and Pfaffian expansions and their coefficient checks.
//!
//! Terms map exponent vectors to nonzero coefficients; a BTreeMap keeps the
//! term order deterministic.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::{FieldElem, FieldSpec};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    spec: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, FieldElem>,
}

impl Polynomial {
    pub fn zero(spec: FieldSpec, nvars: usize) -> Polynomial {
        Polynomial { spec, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(spec: FieldSpec, nvars: usize, c: FieldElem) -> Polynomial {
        let mut p = Polynomial::zero(spec, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The affine linear form `constant + sum(coeff_i * x_i)`.
    pub fn linear(spec: FieldSpec, nvars: usize, constant: FieldElem, coeffs: &[FieldElem]) -> Polynomial {
        assert_eq!(coeffs.len(), nvars);
        let mut p = Polynomial::constant(spec, nvars, constant);
        for (i, &c) in coeffs.iter().enumerate() {
            let mut exps = vec![0u32; nvars];
            exps[i] = 1;
            p.add_term(exps, c);
        }
        p
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &FieldElem)> {
        self.terms.iter()
    }

    /// Adds `c` to the coefficient of the given monomial, dropping the term
    /// if it cancels.
    pub fn add_term(&mut self, exps: Vec<u32>, c: FieldElem) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        assert_eq!(c.spec(), self.spec, "coefficient field");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = *e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, exps: &[u32]) -> FieldElem {
        assert_eq!(exps.len(), self.nvars);
        self.terms.get(exps).copied().unwrap_or_else(|| self.spec.zero())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        assert_eq!(self.spec, other.spec);
        let mut out = self.clone();
        for (e, &c) in other.terms.iter() {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: FieldElem) -> Polynomial {
        assert_eq!(c.spec(), self.spec);
        let mut out = Polynomial::zero(self.spec, self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, &v) in self.terms.iter() {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        assert_eq!(self.spec, other.spec);
        let mut out = Polynomial::zero(self.spec, self.nvars);
        for (ea, &ca) in self.terms.iter() {
            for (eb, &cb) in other.terms.iter() {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, point: &[FieldElem]) -> FieldElem {
        assert_eq!(point.len(), self.nvars, "one value per variable");
        let mut acc = self.spec.zero();
        for (exps, &c) in self.terms.iter() {
            let mut term = c;
            for (x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term = term * x.pow(e as u64);
                }
            }
            acc = acc + term;
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_const = exps.iter().all(|&e| e == 0);
            if c.value() != 1 || is_const {
                write!(f, "{}", c.value())?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut firstv = true;
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !firstv {
                    write!(f, "*")?;
                }
                firstv = false;
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
