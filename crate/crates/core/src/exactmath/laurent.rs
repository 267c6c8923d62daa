//! Sparse multivariate Laurent polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so iteration is in
//! ascending lexicographic order. The *leading* term is the lexicographically
//! greatest one; canonical forms make its coefficient positive.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial. Entries may be negative.
pub type Exponents = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

/// Ring operation selector for [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring arithmetic; fails only on an arity mismatch.
pub fn arith(op: ArithOp, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    if a.arity != b.arity {
        return Err(Error::ArityMismatch(a.arity, b.arity));
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Self {
        LaurentPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRational::one())
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        Self::monomial(arity, vec![0; arity], c)
    }

    /// The variable `x_{index}` (0-based).
    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index {index} out of range");
        let mut e = vec![0; arity];
        e[index] = 1;
        Self::monomial(arity, e, BigRational::one())
    }

    pub fn monomial(arity: usize, exps: Exponents, coeff: BigRational) -> Self {
        assert_eq!(exps.len(), arity, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        LaurentPoly { arity, terms }
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms<I>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigRational)>,
    {
        let mut p = LaurentPoly::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.len(), arity, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.is_constant() && self.terms.values().next().unwrap().is_one()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[i64]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// A single nonzero term (a unit of the Laurent ring).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant term value, zero if absent.
    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&vec![0; self.arity])
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.leading_term().map(|(_, c)| c)
    }

    /// No negative exponents anywhere.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] != 0)
    }

    /// Indices of variables that appear with a nonzero exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.arity).filter(|&v| self.involves(v)).collect()
    }

    pub fn max_degree_in(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[var]).min()
    }

    /// Componentwise minimum of all exponent vectors (zero vector for the zero polynomial).
    pub fn min_exponents(&self) -> Exponents {
        let mut it = self.terms.keys();
        let mut m = match it.next() {
            Some(e) => e.clone(),
            None => return vec![0; self.arity],
        };
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.arity);
        }
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the Laurent monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.arity);
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = LaurentPoly::one(self.arity);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Inverse of a monomial; `None` for anything else.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if !self.is_monomial() {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(LaurentPoly::monomial(
            self.arity,
            e.iter().map(|x| -x).collect(),
            c.recip(),
        ))
    }

    /// Integer power, negative exponents allowed only for monomials.
    pub fn powi(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            let inv = self.monomial_inverse().ok_or(Error::NonMonomialInverse)?;
            Ok(inv.pow((-k) as u32))
        }
    }

    /// Splits `self = x^u * rest` with `rest` a polynomial that no variable divides.
    pub fn split_monomial(&self) -> (Exponents, LaurentPoly) {
        let u = self.min_exponents();
        let neg: Vec<i64> = u.iter().map(|x| -x).collect();
        (u, self.shift(&neg))
    }

    /// Rational `c` such that `self / c` has coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn rational_content(&self) -> BigRational {
        let Some(lc) = self.leading_coefficient() else {
            return BigRational::one();
        };
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let c = BigRational::new(num_gcd, den_lcm);
        if lc.is_negative() {
            -c
        } else {
            c
        }
    }

    /// Canonical associate up to Laurent units: no variable divides it,
    /// integer coefficients with gcd 1 and a positive leading coefficient.
    pub fn canonical_associate(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let (_, rest) = self.split_monomial();
        let c = rest.rational_content();
        rest.scale(&c.recip())
    }

    /// Unit part `c * x^u` and canonical associate, with `self = c x^u * assoc`.
    pub fn unit_decomposition(&self) -> (BigRational, Exponents, LaurentPoly) {
        let (u, rest) = self.split_monomial();
        let c = rest.rational_content();
        let assoc = rest.scale(&c.recip());
        (c, u, assoc)
    }

    /// Makes the leading coefficient positive, keeping everything else.
    pub fn sign_normalized(&self) -> LaurentPoly {
        match self.leading_coefficient() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Sets `x_var = 0`. Errors if the variable appears with a negative exponent.
    pub fn eval_zero(&self, var: usize) -> Result<LaurentPoly> {
        if self.min_degree_in(var).unwrap_or(0) < 0 {
            return Err(Error::IllDefinedSubstitution(format!(
                "variable {} occurs with a negative exponent",
                var + 1
            )));
        }
        Ok(LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[var] == 0)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    /// Substitutes `value` for `x_var`. Negative powers of `x_var` require a monomial value.
    pub fn substitute(&self, var: usize, value: &LaurentPoly) -> Result<LaurentPoly> {
        if value.arity != self.arity {
            return Err(Error::ArityMismatch(self.arity, value.arity));
        }
        // Group by exponent of var: self = sum_k c_k * x_var^k.
        let mut groups: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[var];
            let mut e2 = e.clone();
            e2[var] = 0;
            groups
                .entry(k)
                .or_insert_with(|| LaurentPoly::zero(self.arity))
                .add_term(e2, c.clone());
        }
        let mut out = LaurentPoly::zero(self.arity);
        for (k, coeff) in groups {
            out = &out + &(&coeff * &value.powi(k)?);
        }
        Ok(out)
    }

    /// Simultaneous substitution of every variable.
    pub fn compose(&self, values: &[LaurentPoly], target_arity: usize) -> Result<LaurentPoly> {
        assert_eq!(values.len(), self.arity);
        let mut out = LaurentPoly::zero(target_arity);
        for (e, c) in &self.terms {
            let mut t = LaurentPoly::constant(target_arity, c.clone());
            for (v, &k) in values.iter().zip(e) {
                if k != 0 {
                    t = &t * &v.powi(k)?;
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Embeds into a larger ring by appending variables.
    pub fn extend_arity(&self, new_arity: usize) -> LaurentPoly {
        assert!(new_arity >= self.arity);
        LaurentPoly {
            arity: new_arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.resize(new_arity, 0);
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Drops trailing variables that must not occur.
    pub fn truncate_arity(&self, new_arity: usize) -> Result<LaurentPoly> {
        if self.terms.keys().any(|e| e[new_arity..].iter().any(|&x| x != 0)) {
            return Err(Error::ArityMismatch(self.arity, new_arity));
        }
        Ok(LaurentPoly {
            arity: new_arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e[..new_arity].to_vec(), c.clone()))
                .collect(),
        })
    }

    /// Renames variables: old variable `i` becomes new variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> LaurentPoly {
        assert_eq!(perm.len(), self.arity);
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = vec![0; self.arity];
                    for (i, &x) in e.iter().enumerate() {
                        e2[perm[i]] = x;
                    }
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Applies `x_i -> r_i x_i` for rational scalars `r`.
    pub fn rescale_vars(&self, r: &[BigRational]) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut c = c.clone();
                    for (ri, &k) in r.iter().zip(e) {
                        if k >= 0 {
                            c *= num_traits::pow(ri.clone(), k as usize);
                        } else {
                            c /= num_traits::pow(ri.clone(), (-k) as usize);
                        }
                    }
                    (e.clone(), c)
                })
                .collect(),
        }
    }

    /// Coefficients with respect to `var`, as a dense list indexed by exponent.
    /// Only valid for polynomials in `var` (nonnegative exponents).
    pub(crate) fn coefficients_in(&self, var: usize) -> Vec<LaurentPoly> {
        let deg = self.max_degree_in(var).unwrap_or(0).max(0) as usize;
        let mut out = vec![LaurentPoly::zero(self.arity); deg + 1];
        for (e, c) in &self.terms {
            debug_assert!(e[var] >= 0);
            let k = e[var] as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    pub(crate) fn from_coefficients_in(arity: usize, var: usize, coeffs: &[LaurentPoly]) -> Self {
        let mut out = LaurentPoly::zero(arity);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut e2 = e.clone();
                e2[var] += k as i64;
                out.add_term(e2, x.clone());
            }
        }
        out
    }

    /// Renders with the given variable names in canonical (descending lex) order.
    pub fn to_string_with(&self, names: &[String]) -> String {
        assert!(names.len() >= self.arity);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&x| x == 0);
            if !abs.is_one() || is_const {
                factors.push(abs.to_string());
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], k)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Default variable names `x1, x2, ...`.
pub fn default_names(arity: usize) -> Vec<String> {
    (1..=arity).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_names(self.arity)))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.arity, self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = LaurentPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-BigRational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Exact quotient `a / b` in the Laurent ring, or [`Error::NotDivisible`].
pub fn divide_exact(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    if a.arity != b.arity {
        return Err(Error::ArityMismatch(a.arity, b.arity));
    }
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if a.is_zero() {
        return Ok(LaurentPoly::zero(a.arity));
    }
    if let Some(inv) = b.monomial_inverse() {
        return Ok(a * &inv);
    }
    let (ua, pa) = a.split_monomial();
    let (ub, pb) = b.split_monomial();
    let q = divide_polynomial(&pa, &pb).ok_or(Error::NotDivisible)?;
    let shift: Vec<i64> = ua.iter().zip(&ub).map(|(x, y)| x - y).collect();
    Ok(q.shift(&shift))
}

/// Multivariate exact division of polynomials (nonnegative exponents) using
/// the lexicographic leading term.
pub(crate) fn divide_polynomial(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let (lb_e, lb_c) = b.leading_term()?;
    let lb_e = lb_e.clone();
    let lb_c = lb_c.clone();
    // Degree bounds reject early: every variable degree of b must fit in a.
    for v in 0..a.arity {
        if b.max_degree_in(v).unwrap_or(0) > a.max_degree_in(v).unwrap_or(0) {
            return None;
        }
    }
    let mut rem = a.clone();
    let mut q = LaurentPoly::zero(a.arity);
    while let Some((re, rc)) = rem.leading_term() {
        let e: Exponents = re.iter().zip(&lb_e).map(|(x, y)| x - y).collect();
        if e.iter().any(|&x| x < 0) {
            return None;
        }
        let c = rc / &lb_c;
        let t = LaurentPoly::monomial(a.arity, e, c);
        rem = &rem - &(&t * b);
        q = &q + &t;
    }
    Some(q)
}

/// Gcd of a slice of integers (nonnegative result).
pub(crate) fn int_gcd(values: impl IntoIterator<Item = i64>) -> i64 {
    values.into_iter().fold(0i64, |g, x| g.gcd(&x))
}
