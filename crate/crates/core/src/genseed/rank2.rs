//! Monomial identities behind the rank-2 exchange argument with frozen
//! variables: `r2*r3 = q2*q3*r1^b` and `h_k*r2 = g_k*q3*r1^(k*beta12)`.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::LaurentPoly;

use super::seed::{pos, GeneralizedSeed};

/// Which checks passed. `h_identities` holds one entry per `k` in `1..d2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank2Report {
    /// Labels 1 and 2 were swapped to make `b12 > 0`.
    pub swapped: bool,
    pub r_identity: bool,
    pub h_identities: Vec<bool>,
    /// `f1`, `f2` and the mutated `f2` split exactly into the displayed terms.
    pub decompositions: bool,
}

impl Rank2Report {
    pub fn holds(&self) -> bool {
        self.r_identity && self.decompositions && self.h_identities.iter().all(|&x| x)
    }
}

/// Runs every check; see [`rank2_report`].
pub fn rank2_identities(s: &GeneralizedSeed) -> Result<bool> {
    Ok(rank2_report(s)?.holds())
}

/// Requires `n = 2` and `b12 != 0`; a negative `b12` is normalized by
/// swapping the two exchangeable labels.
pub fn rank2_report(s: &GeneralizedSeed) -> Result<Rank2Report> {
    s.validate().map_err(Error::InvalidSeed)?;
    if s.n != 2 {
        return Err(Error::Precondition("rank-2".into()));
    }
    if s.b[0][1] == 0 {
        return Err(Error::Precondition("b12-nonzero".into()));
    }
    let swapped = s.b[0][1] < 0;
    let s = if swapped { swap_labels(s) } else { s.clone() };
    let arity = s.arity();
    let frozen = 2..arity;
    let mono = |e: Vec<i64>| LaurentPoly::monomial(arity, e, BigRational::one());
    // prod over frozen j of x_j^(exponent(j)).
    let frozen_mono = |f: &dyn Fn(usize) -> i64| {
        mono((0..arity).map(|j| if frozen.contains(&j) { f(j) } else { 0 }).collect())
    };

    let b = s.b[0][1];
    let c = -s.b[1][0];
    let (d1, d2) = (s.d[0], s.d[1]);
    let beta12 = b / d2;
    let mu = s.mutate(1)?;

    let q1 = frozen_mono(&|j| pos(-s.b[j][0]));
    let r1 = frozen_mono(&|j| pos(s.b[j][0]));
    let q2 = frozen_mono(&|j| pos(s.b[j][1]));
    let r2 = frozen_mono(&|j| pos(-s.b[j][1]));
    let q3 = frozen_mono(&|j| pos(-mu.b[j][1]));
    let r3 = frozen_mono(&|j| pos(mu.b[j][1]));

    let coeff = |seed: &GeneralizedSeed, col: usize, k: i64| {
        let bt = |j: usize| seed.b[j][col] / seed.d[col];
        &seed.rho[col][k as usize] * &frozen_mono(&|j| k * pos(bt(j)) + (seed.d[col] - k) * pos(-bt(j)))
    };
    let f_k = |k: i64| coeff(&s, 0, k);
    let g_k = |k: i64| coeff(&s, 1, k);
    let h_k = |k: i64| coeff(&mu, 1, k);
    let var_pow = |v: usize, e: i64| {
        let mut x = vec![0; arity];
        x[v] = e;
        mono(x)
    };

    let r_identity = &r2 * &r3 == &(&q2 * &q3) * &r1.pow(b as u32);
    let h_identities = (1..d2)
        .map(|k| &h_k(k) * &r2 == &(&g_k(k) * &q3) * &r1.pow((k * beta12) as u32))
        .collect();

    let f1: LaurentPoly = (0..=d1)
        .map(|k| &f_k(k) * &var_pow(1, (d1 - k) * c / d1))
        .fold(LaurentPoly::zero(arity), |a, t| &a + &t);
    let f2: LaurentPoly = (1..=d2)
        .map(|k| &g_k(k) * &var_pow(0, k * beta12))
        .fold(r2.clone(), |a, t| &a + &t);
    let f2_mu: LaurentPoly = (0..d2)
        .map(|k| &h_k(k) * &var_pow(0, (d2 - k) * beta12))
        .fold(r3.clone(), |a, t| &a + &t);
    let decompositions = f_k(0) == q1
        && f_k(d1) == r1
        && g_k(d2) == q2
        && h_k(0) == q3
        && f1 == s.exchange_polynomial(0)
        && f2 == s.exchange_polynomial(1)
        && f2_mu == mu.exchange_polynomial(1);

    Ok(Rank2Report {
        swapped,
        r_identity,
        h_identities,
        decompositions,
    })
}

/// Relabels exchangeable variables 1 and 2.
fn swap_labels(s: &GeneralizedSeed) -> GeneralizedSeed {
    let mut out = s.clone();
    out.names.swap(0, 1);
    out.b.swap(0, 1);
    for row in out.b.iter_mut() {
        row.swap(0, 1);
    }
    out.d.swap(0, 1);
    out.rho.swap(0, 1);
    out
}
