//! Multivariate gcd over Q, up to Laurent units.
//!
//! Recursive content / primitive part with a subresultant remainder sequence
//! in the main variable. Segment-shaped inputs take a univariate shortcut.

use num_rational::BigRational;
use num_traits::One;

use super::laurent::{divide_exact, LaurentPoly};
use super::segment::{segment_decompose, SegmentForm};
use super::unipoly::UniPoly;

/// Normalized gcd: primitive integer coefficients, positive leading
/// coefficient, and no variable divides it. `gcd(0, 0) = 0`.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    assert_eq!(a.arity(), b.arity(), "arity mismatch");
    if a.is_zero() {
        return b.canonical_associate();
    }
    if b.is_zero() {
        return a.canonical_associate();
    }
    let a = a.canonical_associate();
    let b = b.canonical_associate();
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one(a.arity());
    }
    if a == b {
        return a;
    }
    if let (Some(sa), Some(sb)) = (segment_decompose(&a), segment_decompose(&b)) {
        return segment_gcd(&sa, &sb, a.arity());
    }
    poly_gcd(&a, &b).canonical_associate()
}

/// True iff the gcd is a unit of the Laurent ring.
pub fn coprime(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    gcd(a, b).is_constant()
}

fn segment_gcd(a: &SegmentForm, b: &SegmentForm, arity: usize) -> LaurentPoly {
    let one = LaurentPoly::one(arity);
    if a.is_monomial() || b.is_monomial() {
        return one;
    }
    let ga = a.inflated_profile();
    let gb = if a.direction == b.direction {
        b.inflated_profile()
    } else if a.direction.iter().zip(&b.direction).all(|(x, y)| *x == -*y) {
        // g(x^{-w}) is, up to a monomial, the reversed profile evaluated at x^w.
        b.inflated_profile().reversed()
    } else {
        return one;
    };
    let g = ga.gcd(&gb);
    if g.is_constant() {
        return one;
    }
    let step = LaurentPoly::monomial(arity, a.direction.clone(), BigRational::one());
    g.compose_laurent(&step).canonical_associate()
}

/// Gcd of two polynomials (nonnegative exponents), up to a rational constant.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let arity = a.arity();
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one(arity);
    }
    let Some(v) = (0..arity).rev().find(|&v| a.involves(v) || b.involves(v)) else {
        return LaurentPoly::one(arity);
    };
    if !a.involves(v) {
        return poly_gcd(a, &content_in(b, v));
    }
    if !b.involves(v) {
        return poly_gcd(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = poly_gcd(&ca, &cb);
    let pa = divide_exact(a, &ca).expect("content divides");
    let pb = divide_exact(b, &cb).expect("content divides");
    let g = subresultant(&pa.coefficients_in(v), &pb.coefficients_in(v));
    let g = LaurentPoly::from_coefficients_in(arity, v, &g);
    let g = divide_exact(&g, &content_in(&g, v)).expect("content divides");
    &c * &g
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &LaurentPoly, v: usize) -> LaurentPoly {
    let mut coeffs = p.coefficients_in(v).into_iter().filter(|c| !c.is_zero());
    let mut g = coeffs.next().unwrap_or_else(|| LaurentPoly::zero(p.arity()));
    for c in coeffs {
        if g.is_constant() {
            break;
        }
        g = poly_gcd(&g, &c);
    }
    if g.is_constant() {
        LaurentPoly::one(p.arity())
    } else {
        g.canonical_associate()
    }
}

fn deg(p: &[LaurentPoly]) -> usize {
    p.len() - 1
}

fn trim(p: &mut Vec<LaurentPoly>) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &[LaurentPoly], b: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let db = deg(b);
    let lb = b.last().unwrap().clone();
    let mut r = a.to_vec();
    let delta = deg(a) - db;
    let mut steps = 0u32;
    while r.len() > db && !r.iter().all(|c| c.is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            let k = dr - db + j;
            r[k] = &r[k] - &(&lr * bc);
        }
        r.pop();
        trim(&mut r);
        steps += 1;
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    let extra = (delta as u32 + 1).saturating_sub(steps);
    if extra > 0 {
        let f = lb.pow(extra);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

/// Last nonzero element of the subresultant remainder sequence of `a`, `b`
/// (coefficients listed by degree in the main variable).
fn subresultant(a: &[LaurentPoly], b: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let (mut a, mut b) = if deg(a) >= deg(b) {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    let arity = a[0].arity();
    let mut g = LaurentPoly::one(arity);
    let mut h = LaurentPoly::one(arity);
    loop {
        let delta = (deg(&a) - deg(&b)) as u32;
        let r = prem(&a, &b);
        if r.iter().all(|c| c.is_zero()) {
            return b;
        }
        if deg(&r) == 0 {
            return vec![LaurentPoly::one(arity)];
        }
        let denom = &g * &h.pow(delta);
        let r: Vec<LaurentPoly> = r
            .iter()
            .map(|c| divide_exact(c, &denom).expect("subresultant division is exact"))
            .collect();
        a = b;
        b = r;
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            divide_exact(&g.pow(delta), &h.pow(delta - 1)).expect("exact")
        };
    }
}

/// Univariate gcd re-exported for callers that work with dense polynomials.
pub fn gcd_univariate(a: &UniPoly, b: &UniPoly) -> UniPoly {
    a.gcd(b).primitive_part()
}
