//! Squarefree decomposition and factorization of univariate polynomials over Q.
//!
//! Factorization is Zassenhaus-style: factor modulo a small prime with
//! Cantor–Zassenhaus, Hensel-lift to a modulus above the Mignotte bound,
//! then recombine lifted factors by trial division over Z.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// `g = unit * prod factor^multiplicity`, factors primitive over Z with positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigRational,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

/// Yun's algorithm. Parts are squarefree, pairwise coprime, primitive over Z,
/// listed by increasing multiplicity.
pub fn squarefree_decompose(g: &UniPoly) -> Result<Factorization> {
    if g.is_constant() {
        return Err(Error::ConstantInput);
    }
    let f = g.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let c = df.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut parts = Vec::new();
    let mut i = 1u32;
    while !b.is_constant() {
        let a = b.gcd(&d);
        let nb = b.div_exact(&a).expect("gcd divides");
        let nc = d.div_exact(&a).expect("gcd divides");
        d = &nc - &nb.derivative();
        b = nb;
        if !a.is_constant() {
            parts.push((a.primitive_part(), i));
        }
        i += 1;
    }
    let mut prod = UniPoly::one();
    for (p, m) in &parts {
        prod = &prod * &p.pow(*m);
    }
    let unit = g.leading_coefficient() / prod.leading_coefficient();
    Ok(Factorization {
        unit,
        factors: parts,
    })
}

/// Complete factorization over Q into irreducible primitive integer polynomials.
pub fn factor_univariate(g: &UniPoly) -> Result<Factorization> {
    let sqf = squarefree_decompose(g)?;
    let mut factors = Vec::new();
    for (part, m) in &sqf.factors {
        for irr in factor_squarefree(part) {
            factors.push((irr, *m));
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
            .then(ma.cmp(mb))
    });
    let mut prod = UniPoly::one();
    for (p, m) in &factors {
        prod = &prod * &p.pow(*m);
    }
    let unit = g.leading_coefficient() / prod.leading_coefficient();
    Ok(Factorization { unit, factors })
}

/// True iff `g` is irreducible over Q (nonconstant, no proper factorization).
pub fn is_irreducible(g: &UniPoly) -> bool {
    match factor_univariate(g) {
        Ok(f) => f.factors.len() == 1 && f.factors[0].1 == 1,
        Err(_) => false,
    }
}

/// Factors a squarefree primitive integer polynomial of positive degree.
fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    let mut out = Vec::new();
    let mut f = f.primitive_part();
    if f.coeff(0).is_zero() {
        out.push(UniPoly::x());
        f = f.div_exact(&UniPoly::x()).unwrap();
    }
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    if f.degree() == Some(1) {
        out.push(f);
        return out;
    }
    out.extend(zassenhaus(&f));
    out
}

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307,
    311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421,
    431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541,
];

fn zassenhaus(f: &UniPoly) -> Vec<UniPoly> {
    let fz = f.to_bigints();
    let n = fz.len() - 1;
    let lc = fz[n].clone();

    // Pick among a few admissible primes the one giving the fewest modular factors.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<FPoly>)> = None;
    let mut tried = 0;
    for &p in PRIMES {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = FPoly::from_bigints(&fz, p);
        if fp.degree() != Some(n) || !fp.gcd(&fp.derivative()).is_one() {
            continue;
        }
        let facs = fp.monic().factor(&mut rng);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 3 {
            break;
        }
    }
    let (p, modular) = best.expect("some prime keeps the polynomial squarefree");
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // Coefficient bound for factors of lc * f.
    let maxc = fz.iter().map(|c| c.abs()).max().unwrap();
    let bound = lc.abs() * (BigInt::one() << n) * BigInt::from(n + 1) * maxc;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }

    let lifted = lift_factors(&fz, &modular, p, k, &modulus);
    recombine(f, lifted, &modulus)
}

fn recombine(f: &UniPoly, lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<UniPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        let lc = rest.leading_coefficient().to_integer();
        let mut combo: Vec<usize> = (0..s).collect();
        loop {
            let mut cand = vec![lc.clone()];
            for &i in &combo {
                cand = mul_mod(&cand, &remaining[i], modulus);
            }
            let cand = UniPoly::from_bigints(&symmetric(&cand, modulus)).primitive_part();
            if let Some(q) = rest.div_exact(&cand) {
                out.push(cand);
                rest = q;
                for &i in combo.iter().rev() {
                    remaining.remove(i);
                }
                continue 'outer;
            }
            if !next_combination(&mut combo, remaining.len()) {
                break;
            }
        }
        s += 1;
    }
    if !rest.is_constant() {
        out.push(rest.primitive_part());
    }
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn symmetric(c: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    c.iter()
        .map(|x| {
            let r = x.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn mul_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(&mut c);
    c
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = mul_z(a, b).into_iter().map(|x| x.mod_floor(m)).collect();
    trim(&mut c);
    c
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// Lifts monic modular factors of `f` (mod p) to monic factors mod p^k.
fn lift_factors(f: &[BigInt], factors: &[FPoly], p: u64, k: u32, m: &BigInt) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let inv = mod_inverse(f.last().unwrap(), m);
        let mut g: Vec<BigInt> = f.iter().map(|c| (c * &inv).mod_floor(m)).collect();
        trim(&mut g);
        return vec![g];
    }
    let mid = factors.len() / 2;
    let g0 = factors[..mid]
        .iter()
        .fold(FPoly::one(p), |acc, x| acc.mul(x));
    let lcp = FPoly::from_bigints(&[f.last().unwrap().clone()], p);
    let h0 = factors[mid..].iter().fold(lcp, |acc, x| acc.mul(x));
    let (g, h) = hensel_pair(f, &g0, &h0, p, k, m);
    let mut out = lift_factors(&g, &factors[..mid], p, k, m);
    out.extend(lift_factors(&h, &factors[mid..], p, k, m));
    out
}

/// Linear Hensel lifting of `f = g*h` from mod p to mod p^k; `g0` monic.
fn hensel_pair(
    f: &[BigInt],
    g0: &FPoly,
    h0: &FPoly,
    p: u64,
    k: u32,
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let (s, t) = g0.ext_gcd_coeffs(h0);
    let mut g = g0.to_bigints();
    let mut h = h0.to_bigints();
    *h.last_mut().unwrap() = f.last().unwrap().clone();
    let pb = BigInt::from(p);
    let mut pj = pb.clone();
    for _ in 1..k {
        let gh = mul_z(&g, &h);
        let n = f.len().max(gh.len());
        let e: Vec<BigInt> = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                a - b
            })
            .collect();
        debug_assert!(e.iter().all(|c| (c % &pj).is_zero()));
        let c = FPoly::from_bigints(&e.iter().map(|x| x / &pj).collect::<Vec<_>>(), p);
        let (q, tau) = t.mul(&c).div_rem(g0);
        let sigma = s.mul(&c).add(&q.mul(h0));
        add_scaled(&mut g, &tau.to_bigints(), &pj);
        add_scaled(&mut h, &sigma.to_bigints(), &pj);
        pj *= &pb;
    }
    let red = |v: Vec<BigInt>| {
        let mut v: Vec<BigInt> = v.into_iter().map(|x| x.mod_floor(m)).collect();
        trim(&mut v);
        v
    };
    (red(g), red(h))
}

fn add_scaled(a: &mut Vec<BigInt>, b: &[BigInt], s: &BigInt) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y * s;
    }
}

/// Polynomial over F_p, lowest degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
struct FPoly {
    c: Vec<u64>,
    p: u64,
}

impl FPoly {
    fn new(mut c: Vec<u64>, p: u64) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        FPoly { c, p }
    }

    fn one(p: u64) -> Self {
        FPoly::new(vec![1], p)
    }

    fn from_bigints(v: &[BigInt], p: u64) -> Self {
        let pb = BigInt::from(p);
        FPoly::new(
            v.iter()
                .map(|x| x.mod_floor(&pb).to_u64().unwrap())
                .collect(),
            p,
        )
    }

    fn to_bigints(&self) -> Vec<BigInt> {
        self.c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn is_one(&self) -> bool {
        self.c == [1]
    }

    fn inv(&self, a: u64) -> u64 {
        powmod_u64(a, self.p - 2, self.p)
    }

    fn monic(&self) -> Self {
        let inv = self.inv(*self.c.last().unwrap());
        FPoly::new(self.c.iter().map(|&x| x * inv % self.p).collect(), self.p)
    }

    fn add(&self, o: &FPoly) -> Self {
        let n = self.c.len().max(o.c.len());
        FPoly::new(
            (0..n)
                .map(|i| (self.c.get(i).unwrap_or(&0) + o.c.get(i).unwrap_or(&0)) % self.p)
                .collect(),
            self.p,
        )
    }

    fn sub(&self, o: &FPoly) -> Self {
        let n = self.c.len().max(o.c.len());
        FPoly::new(
            (0..n)
                .map(|i| {
                    (self.c.get(i).unwrap_or(&0) + self.p - o.c.get(i).unwrap_or(&0)) % self.p
                })
                .collect(),
            self.p,
        )
    }

    fn mul(&self, o: &FPoly) -> Self {
        if self.is_zero() || o.is_zero() {
            return FPoly::new(vec![], self.p);
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.p;
            }
        }
        FPoly::new(c, self.p)
    }

    fn div_rem(&self, d: &FPoly) -> (FPoly, FPoly) {
        let dd = d.degree().expect("nonzero divisor");
        let inv = self.inv(*d.c.last().unwrap());
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (FPoly::new(vec![], self.p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd] * inv % self.p;
            if c != 0 {
                for (j, &x) in d.c.iter().enumerate() {
                    r[k + j] = (r[k + j] + self.p - c * x % self.p) % self.p;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (FPoly::new(q, self.p), FPoly::new(r, self.p))
    }

    fn rem(&self, d: &FPoly) -> FPoly {
        self.div_rem(d).1
    }

    fn gcd(&self, o: &FPoly) -> FPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    fn derivative(&self) -> FPoly {
        FPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &x)| (k as u64 % self.p) * x % self.p)
                .collect(),
            self.p,
        )
    }

    /// `(s, t)` with `s*self + t*o = 1`, `deg s < deg o`, `deg t < deg self`.
    fn ext_gcd_coeffs(&self, o: &FPoly) -> (FPoly, FPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (FPoly::one(p), FPoly::new(vec![], p));
        let (mut t0, mut t1) = (FPoly::new(vec![], p), FPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        assert_eq!(r0.degree(), Some(0), "factors must be coprime mod p");
        let inv = FPoly::new(vec![self.inv(r0.c[0])], p);
        (s0.mul(&inv), t0.mul(&inv))
    }

    fn powmod(&self, e: &BigUint, m: &FPoly) -> FPoly {
        let mut result = FPoly::one(self.p);
        let mut base = self.rem(m);
        for i in 0..e.bits() {
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
        }
        result
    }

    /// Distinct-degree then equal-degree factorization of a monic squarefree polynomial.
    fn factor(&self, rng: &mut ChaCha8Rng) -> Vec<FPoly> {
        let p = self.p;
        let x = FPoly::new(vec![0, 1], p);
        let pu = BigUint::from(p);
        let mut f = self.clone();
        let mut h = x.clone();
        let mut out = Vec::new();
        let mut d = 1;
        while f.degree().unwrap_or(0) >= 2 * d {
            h = h.powmod(&pu, &f);
            let g = f.gcd(&h.sub(&x));
            if !g.is_one() {
                out.extend(g.equal_degree(d, rng));
                f = f.div_rem(&g).0;
                h = h.rem(&f);
            }
            d += 1;
        }
        if f.degree().unwrap_or(0) > 0 {
            out.push(f.monic());
        }
        out
    }

    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<FPoly> {
        let n = self.degree().unwrap();
        if n == d {
            return vec![self.monic()];
        }
        let e: BigUint = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a = FPoly::new((0..n).map(|_| rng.gen_range(0..self.p)).collect(), self.p);
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = a.powmod(&e, self).sub(&FPoly::one(self.p));
            let g = self.gcd(&b);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < n {
                let mut out = g.equal_degree(d, rng);
                out.extend(self.div_rem(&g).0.equal_degree(d, rng));
                return out;
            }
        }
    }
}

fn powmod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn squarefree_examples() {
        let s = squarefree_decompose(&up(&[1, 2, 1])).unwrap();
        assert_eq!(s.factors, vec![(up(&[1, 1]), 2)]);
        let s = squarefree_decompose(&up(&[1, 1])).unwrap();
        assert_eq!(s.factors, vec![(up(&[1, 1]), 1)]);
        // x^3 + x^2 = x^2 (x + 1)
        let s = squarefree_decompose(&up(&[0, 0, 1, 1])).unwrap();
        assert_eq!(s.factors, vec![(up(&[1, 1]), 1), (up(&[0, 1]), 2)]);
        assert_eq!(squarefree_decompose(&up(&[5])), Err(Error::ConstantInput));
    }

    #[test]
    fn factor_examples() {
        let f = factor_univariate(&up(&[1, 3, 3, 1])).unwrap();
        assert_eq!(f.factors, vec![(up(&[1, 1]), 3)]);
        let f = factor_univariate(&up(&[-1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(up(&[-1, 1]), 1), (up(&[1, 1]), 1)]);
        assert_eq!(factor_univariate(&up(&[3])), Err(Error::ConstantInput));
    }

    #[test]
    fn factor_needs_recombination() {
        // x^4 + 1 is irreducible over Q but splits modulo every prime.
        let f = factor_univariate(&up(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(up(&[1, 0, 0, 0, 1]), 1)]);
        // 1 + y^2 + y^4 = (y^2 + y + 1)(y^2 - y + 1)
        let f = factor_univariate(&up(&[1, 0, 1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(up(&[1, -1, 1]), 1), (up(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn factor_keeps_unit_and_non_monic_factors() {
        // (2x + 1)(3x - 1) / 5
        let g = (&up(&[1, 2]) * &up(&[-1, 3])).scale(&BigRational::new(1.into(), 5.into()));
        let f = factor_univariate(&g).unwrap();
        assert_eq!(f.expand(), g);
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.unit, BigRational::new(1.into(), 5.into()));
    }

    #[test]
    fn cyclotomic_products() {
        // x^12 - 1 = product of Phi_d for d | 12
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let f = factor_univariate(&up(&c)).unwrap();
        assert_eq!(f.factors.len(), 6);
        assert_eq!(f.expand(), up(&c));
    }
}
