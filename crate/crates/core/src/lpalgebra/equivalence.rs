//! Equivalence of LP seeds: `x_i = r_i y_i` and `F_i = r'_i G_i` with units
//! `r_i`, `r'_i` of the ground ring.
//!
//! Rescaling `x_v -> r_v x_v` multiplies the coefficient of `x^e` by `r^e`, so
//! after dividing by a reference term each polynomial gives equations
//! `r^(e_t - e_0) = q_t`. Over Q the absolute values are solved one prime
//! block at a time (a coprime base of the numbers involved, with perfect
//! powers reduced) as integer linear systems; the signs form a system over
//! GF(2). Over Z only the signs are free.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmath::{smith_with_transforms, IntegerMatrix};
use crate::genseed::GroundRing;

use super::seed::LPSeed;

/// True iff the two seeds agree up to unit rescaling of variables and of
/// exchange polynomials (signs over Z, nonzero rationals over Q).
pub fn seeds_equivalent(a: &LPSeed, b: &LPSeed) -> bool {
    if a.n != b.n || a.ring != b.ring || a.f.len() != b.f.len() {
        return false;
    }
    let mut exps: Vec<Vec<i64>> = Vec::new();
    let mut ratios: Vec<BigRational> = Vec::new();
    for (f, g) in a.f.iter().zip(&b.f) {
        if f.arity() != g.arity() || f.len() != g.len() {
            return false;
        }
        let tf: Vec<_> = f.terms().collect();
        let tg: Vec<_> = g.terms().collect();
        if tf.iter().zip(&tg).any(|((ef, _), (eg, _))| ef != eg) {
            return false;
        }
        if a.ring == GroundRing::Integers && tf.iter().zip(&tg).any(|((_, cf), (_, cg))| cf.abs() != cg.abs()) {
            return false;
        }
        let Some(((e0, c0), (_, g0))) = tf.first().zip(tg.first()) else {
            continue;
        };
        for ((e, c), (_, gc)) in tf.iter().zip(&tg).skip(1) {
            exps.push(e.iter().zip(e0.iter()).map(|(x, y)| x - y).collect());
            ratios.push((*gc / *g0) / (*c / *c0));
        }
    }
    let n = a.n;
    if !signs_solvable(&exps, &ratios, n) {
        return false;
    }
    a.ring == GroundRing::Integers || magnitudes_solvable(&exps, &ratios, n)
}

fn signs_solvable(exps: &[Vec<i64>], ratios: &[BigRational], n: usize) -> bool {
    let rows: Vec<(Vec<bool>, bool)> = exps
        .iter()
        .zip(ratios)
        .map(|(e, q)| (e.iter().map(|x| x.is_odd()).collect(), q.is_negative()))
        .collect();
    gf2_solvable(rows, n)
}

fn gf2_solvable(mut rows: Vec<(Vec<bool>, bool)>, n: usize) -> bool {
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0[c]) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.0[c] {
                for (x, y) in row.0.iter_mut().zip(&pivot.0) {
                    *x ^= *y;
                }
                row.1 ^= pivot.1;
            }
        }
        r += 1;
    }
    rows[r..].iter().all(|(_, rhs)| !rhs)
}

fn magnitudes_solvable(exps: &[Vec<i64>], ratios: &[BigRational], n: usize) -> bool {
    let mut numbers = Vec::new();
    for q in ratios {
        numbers.push(q.numer().abs());
        numbers.push(q.denom().clone());
    }
    let base = coprime_base(numbers);
    if base.is_empty() {
        return true;
    }
    let u = IntegerMatrix::from_rows(n, exps);
    let (d, p, _) = smith_with_transforms(&u, true);
    base.iter().all(|b| {
        let k: Vec<BigInt> = ratios
            .iter()
            .map(|q| BigInt::from(valuation(q.numer(), b)) - BigInt::from(valuation(q.denom(), b)))
            .collect();
        integer_solvable(&d, &p, &k)
    })
}

/// `U x = k` has an integer solution, given `P U Q = D`.
fn integer_solvable(d: &IntegerMatrix, p: &IntegerMatrix, k: &[BigInt]) -> bool {
    let rows = d.rows();
    (0..rows).all(|i| {
        let c: BigInt = (0..rows).map(|j| p.get(i, j) * &k[j]).sum();
        let di = if i < d.cols() { d.get(i, i).clone() } else { BigInt::zero() };
        if di.is_zero() {
            c.is_zero()
        } else {
            c.is_multiple_of(&di)
        }
    })
}

fn valuation(x: &BigInt, b: &BigInt) -> i64 {
    let mut x = x.abs();
    let mut v = 0;
    while !x.is_zero() && x.is_multiple_of(b) {
        x /= b;
        v += 1;
    }
    v
}

/// Pairwise coprime numbers, none a perfect power, such that every input is
/// a product of their powers.
fn coprime_base(numbers: Vec<BigInt>) -> Vec<BigInt> {
    let mut base: Vec<BigInt> = numbers.into_iter().filter(|x| *x > BigInt::one()).collect();
    'refine: loop {
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let g = base[i].gcd(&base[j]);
                if !g.is_one() {
                    let (a, b) = (&base[i] / &g, &base[j] / &g);
                    base.swap_remove(j);
                    base.swap_remove(i);
                    base.extend([a, b, g].into_iter().filter(|x| !x.is_one()));
                    continue 'refine;
                }
            }
        }
        break;
    }
    base.iter().map(root).collect()
}

fn root(x: &BigInt) -> BigInt {
    let mut x = x.clone();
    'outer: loop {
        for e in 2..=x.bits() as u32 {
            let r = x.nth_root(e);
            if num_traits::pow(r.clone(), e as usize) == x {
                x = r;
                continue 'outer;
            }
        }
        return x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{default_names, parse_poly};

    fn seed(ring: GroundRing, fs: &[&str]) -> LPSeed {
        let names = default_names(fs.len());
        LPSeed::new(ring, names.clone(), fs.iter().map(|s| parse_poly(s, &names).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn scaling_a_polynomial() {
        let a = seed(GroundRing::Rationals, &["x2 + 1", "x1 + x3", "x2 + 1"]);
        let b = seed(GroundRing::Rationals, &["x2 + 1", "3*x1 + 3*x3", "x2 + 1"]);
        assert!(seeds_equivalent(&a, &b));
        let a = seed(GroundRing::Integers, &["x2 + 1", "x1 + x3", "x2 + 1"]);
        let b = LPSeed {
            f: vec![a.f[0].clone(), a.f[1].scale(&BigRational::from_integer(3.into())), a.f[2].clone()],
            ..a.clone()
        };
        assert!(!seeds_equivalent(&a, &b));
    }

    #[test]
    fn rescaling_variables() {
        // x1 -> 4 x1 turns x1 + x3 into 4 x1 + x3; x2 -> -x2 flips x2 + 1.
        let a = seed(GroundRing::Rationals, &["x2 + 1", "x1 + x3", "x2 + 1"]);
        let b = seed(GroundRing::Rationals, &["-x2 + 1", "4*x1 + x3", "-x2 + 1"]);
        assert!(seeds_equivalent(&a, &b));
        // x1^2 + x2^2 with ratio 2 needs r1^2 / r2^2 = 2: impossible over Q.
        let c = seed(GroundRing::Rationals, &["x2^2 + x3^2", "x1^2 + x3^2", "x1^2 + x2^2"]);
        let d = seed(GroundRing::Rationals, &["x2^2 + 2*x3^2", "x1^2 + x3^2", "x1^2 + x2^2"]);
        assert!(!seeds_equivalent(&c, &d));
        let e = seed(GroundRing::Rationals, &["x2^2 + 4*x3^2", "x1^2 + 4*x3^2", "x1^2 + x2^2"]);
        assert!(seeds_equivalent(&c, &e));
    }

    #[test]
    fn base_handles_powers() {
        let b = coprime_base(vec![12.into(), 18.into(), 16.into()]);
        let mut b: Vec<i64> = b.iter().map(|x| x.try_into().unwrap()).collect();
        b.sort();
        assert_eq!(b, vec![2, 3]);
    }
}
