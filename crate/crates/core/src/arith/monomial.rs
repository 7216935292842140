use std::fmt;

use crate::error::ArithError;

/// Capacity of the inline exponent vector. Saturation and intersection
/// adjoin one auxiliary variable, so user systems are limited to
/// `MAX_VARS - 1` variables.
pub const MAX_VARS: usize = 24;

/// Dense exponent vector with cached total degree and support mask.
///
/// Entries past `len` are always zero, so equality and hashing can look at
/// the whole array.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    len: u8,
    degree: u32,
    mask: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        Monomial {
            exps: [0; MAX_VARS],
            len: nvars as u8,
            degree: 0,
            mask: 0,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        assert!(index < nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m.mask = 1 << index;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self, ArithError> {
        if exps.len() > MAX_VARS {
            return Err(ArithError::TooManyVariables {
                max: MAX_VARS,
                got: exps.len(),
            });
        }
        let mut m = Self::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).expect("exponent exceeds u16");
        }
        m.refresh();
        Ok(m)
    }

    fn refresh(&mut self) {
        let mut degree = 0u32;
        let mut mask = 0u32;
        for (i, &e) in self.exps[..self.len as usize].iter().enumerate() {
            degree += e as u32;
            if e != 0 {
                mask |= 1 << i;
            }
        }
        self.degree = degree;
        self.mask = mask;
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.len as usize]
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Bit `i` is set iff variable `i` occurs.
    #[inline]
    pub fn support(&self) -> u32 {
        self.mask
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn involves(&self, var: usize) -> bool {
        self.mask & (1 << var) != 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len, other.len);
        let mut out = *self;
        for i in 0..self.len as usize {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        out.degree = self.degree + other.degree;
        out.mask = self.mask | other.mask;
        out
    }

    /// `self | other`
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps[..self.len as usize]
            .iter()
            .zip(&other.exps[..other.len as usize])
            .all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..self.len as usize {
            out.exps[i] -= other.exps[i];
        }
        out.refresh();
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..self.len as usize {
            out.exps[i] = self.exps[i].max(other.exps[i]);
        }
        out.refresh();
        out
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }

    /// Same exponents with a zero inserted at `pos`.
    pub fn insert_var(&self, pos: usize) -> Monomial {
        let n = self.len as usize;
        assert!(n < MAX_VARS && pos <= n);
        let mut out = Monomial::one(n + 1);
        out.exps[..pos].copy_from_slice(&self.exps[..pos]);
        out.exps[pos + 1..=n].copy_from_slice(&self.exps[pos..n]);
        out.refresh();
        out
    }

    /// Drops the (zero) exponent at `pos`.
    pub fn remove_var(&self, pos: usize) -> Monomial {
        let n = self.len as usize;
        assert!(pos < n && self.exps[pos] == 0);
        let mut out = Monomial::one(n - 1);
        out.exps[..pos].copy_from_slice(&self.exps[..pos]);
        out.exps[pos..n - 1].copy_from_slice(&self.exps[pos + 1..n]);
        out.refresh();
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}
