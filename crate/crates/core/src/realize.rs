//! Acyclic coprime generalized seeds with a prescribed divisor class group.
//!
//! Matrices are written with the large entry below the diagonal in the
//! column of the variable whose exchange polynomial it controls, so that
//! `d_i` divides column `i` as required of a generalized seed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::classgroup::{class_group, ClassGroupResult, FieldMode};
use crate::error::{Error, Result};
use crate::exactmath::{default_names, smith_normal_form, IntegerMatrix, LaurentPoly};
use crate::genseed::{GeneralizedSeed, GroundRing};

/// `Z^free_rank + Z/t_1 + ... + Z/t_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroupSpec {
    pub free_rank: usize,
    /// Non-decreasing, every entry at least 2 once normalized.
    pub torsion: Vec<u64>,
}

impl AbelianGroupSpec {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        AbelianGroupSpec { free_rank, torsion }.normalize()
    }

    /// Drops factors equal to 1 and sorts. Zero entries are rejected.
    pub fn normalize(&self) -> Result<Self> {
        if self.torsion.contains(&0) {
            return Err(Error::Precondition("torsion-positive".into()));
        }
        if self.torsion.iter().any(|&t| t > i64::MAX as u64) {
            return Err(Error::Overflow);
        }
        let mut torsion: Vec<u64> = self.torsion.iter().copied().filter(|&t| t > 1).collect();
        torsion.sort_unstable();
        Ok(AbelianGroupSpec {
            free_rank: self.free_rank,
            torsion,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.iter().all(|&t| t == 1)
    }

    /// Invariant factors of the torsion part, e.g. `[2, 3]` becomes `[6]`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.torsion.len();
        let mut m = IntegerMatrix::zeros(k, k);
        for (i, &t) in self.torsion.iter().enumerate() {
            m.set(i, i, BigInt::from(t));
        }
        smith_normal_form(&m).torsion
    }
}

/// Builds the seed. The trivial group gets `x1` with exchange polynomial
/// `x2 + 1` over one frozen variable.
pub fn realize_seed(g: &AbelianGroupSpec) -> Result<GeneralizedSeed> {
    let g = g.normalize()?;
    let torsion: Vec<i64> = g.torsion.iter().map(|&t| t as i64).collect();
    let k = torsion.len();
    let free = g.free_rank;
    if free == 0 && k == 0 {
        return seed(1, 1, vec![vec![0], vec![1]], vec![1]);
    }
    if k == 0 {
        let m = i64::try_from(free + 1).map_err(|_| Error::Overflow)?;
        return seed(2, 0, vec![vec![0, m], vec![-1, 0]], vec![1, 1]);
    }
    if free == 0 {
        let size = 2 * k;
        let mut b = vec![vec![0i64; size]; size];
        let mut d = vec![1i64; size];
        for i in 1..=size {
            let row = 2 * k + 1 - i;
            if i <= k {
                b[row - 1][i - 1] = torsion[i - 1];
                d[i - 1] = torsion[i - 1];
            } else {
                b[row - 1][i - 1] = -1;
            }
        }
        return seed(size, 0, b, d);
    }
    let m = i64::try_from(free + 1).map_err(|_| Error::Overflow)?;
    let size = 2 * k + 2;
    let mut b = vec![vec![0i64; size]; size];
    let mut d = vec![1i64; size];
    b[size - 1][0] = m;
    b[0][size - 1] = -1;
    for i in 2..=2 * k + 1 {
        let row = 2 * k + 3 - i;
        if i <= k + 1 {
            b[row - 1][i - 1] = torsion[i - 2];
            d[i - 1] = torsion[i - 2];
        } else {
            b[row - 1][i - 1] = -1;
        }
    }
    seed(size, 0, b, d)
}

/// Square seed over an algebraically closed field; strings are binomial
/// coefficients so that each `f_i` is a power of a binomial.
fn seed(n: usize, m: usize, b: Vec<Vec<i64>>, d: Vec<i64>) -> Result<GeneralizedSeed> {
    let arity = n + m;
    let rho = d
        .iter()
        .map(|&di| {
            binomials(di as u64)
                .into_iter()
                .map(|c| LaurentPoly::constant(arity, BigRational::from_integer(c)))
                .collect()
        })
        .collect();
    GeneralizedSeed::new(GroundRing::AlgebraicClosure, n, m, default_names(arity), b, d, rho)
}

fn binomials(n: u64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for r in 1..=n {
        let next = &row[r as usize - 1] * BigInt::from(n - r + 1) / BigInt::from(r);
        row.push(next);
    }
    row
}

/// Realizes `g`, checks the seed hypotheses and computes its class group
/// over an algebraically closed field.
pub fn realize_and_verify(g: &AbelianGroupSpec) -> Result<(GeneralizedSeed, ClassGroupResult, bool)> {
    let g = g.normalize()?;
    let s = realize_seed(&g)?;
    let cg = class_group(&s, FieldMode::AlgebraicallyClosed)?;
    let full_rank = s.exchange_matrix().rank() == s.n;
    let ok = full_rank && cg.free_rank == g.free_rank && cg.torsion == g.invariant_factors();
    Ok((s, cg, ok))
}

/// True iff the realized seed is acyclic, coprime, of full rank and has
/// class group isomorphic to `g` (compared by invariant factors).
pub fn verify_realization(g: &AbelianGroupSpec) -> Result<bool> {
    Ok(realize_and_verify(g)?.2)
}
