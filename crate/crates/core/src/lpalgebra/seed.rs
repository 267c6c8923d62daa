use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactmath::{
    default_names, divide_exact, gcd, is_irreducible, segment_decompose, LaurentPoly,
};
use crate::genseed::{toggle_prime, GeneralizedSeed, GroundRing};

/// Cluster `x_1..x_n` with exchange polynomials `F_1..F_n` in those variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LPSeed {
    pub ring: GroundRing,
    pub n: usize,
    pub names: Vec<String>,
    pub f: Vec<LaurentPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpViolation {
    UnsupportedRing,
    WrongCount { expected: usize, found: usize },
    Arity { i: usize, arity: usize },
    NotPolynomial { i: usize },
    Constant { i: usize },
    NonIntegral { i: usize },
    DependsOnOwnVariable { i: usize },
    DivisibleByVariable { i: usize, j: usize },
    Monomial { i: usize },
    Reducible { i: usize },
}

impl LpViolation {
    pub fn code(&self) -> &'static str {
        match self {
            LpViolation::UnsupportedRing => "unsupported-ring",
            LpViolation::WrongCount { .. } => "wrong-count",
            LpViolation::Arity { .. } => "arity",
            LpViolation::NotPolynomial { .. } => "not-polynomial",
            LpViolation::Constant { .. } => "constant",
            LpViolation::NonIntegral { .. } => "non-integral",
            LpViolation::DependsOnOwnVariable { .. } => "depends-on-own-variable",
            LpViolation::DivisibleByVariable { .. } => "divisible-by-variable",
            LpViolation::Monomial { .. } => "monomial",
            LpViolation::Reducible { .. } => "reducible",
        }
    }
}

impl fmt::Display for LpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpViolation::UnsupportedRing => write!(f, "LP seeds are supported over Z and Q only"),
            LpViolation::WrongCount { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            LpViolation::Arity { i, arity } => write!(f, "F_{i} has arity {arity}"),
            LpViolation::NotPolynomial { i } => write!(f, "F_{i} has a negative exponent"),
            LpViolation::Constant { i } => write!(f, "F_{i} is constant"),
            LpViolation::NonIntegral { i } => write!(f, "F_{i} has non-integer coefficients over Z"),
            LpViolation::DependsOnOwnVariable { i } => write!(f, "F_{i} depends on x_{i}"),
            LpViolation::DivisibleByVariable { i, j } => write!(f, "x_{j} divides F_{i}"),
            LpViolation::Monomial { i } => write!(f, "F_{i} is a monomial"),
            LpViolation::Reducible { i } => write!(f, "F_{i} is reducible"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Irreducibility {
    /// Decided exactly through the segment decomposition.
    Verified,
    /// Not a segment; irreducibility is assumed.
    AcceptedUnverified,
}

impl Irreducibility {
    pub fn tag(self) -> &'static str {
        match self {
            Irreducibility::Verified => "verified",
            Irreducibility::AcceptedUnverified => "accepted-unverified",
        }
    }
}

impl LPSeed {
    pub fn new(ring: GroundRing, names: Vec<String>, f: Vec<LaurentPoly>) -> Result<Self> {
        let s = LPSeed {
            ring,
            n: f.len(),
            names,
            f,
        };
        s.validate().map_err(Error::InvalidLpSeed)?;
        Ok(s)
    }

    /// Default names `x1..xn` over Q.
    pub fn from_polys(f: Vec<LaurentPoly>) -> Result<Self> {
        Self::new(GroundRing::Rationals, default_names(f.len()), f)
    }

    /// The LP seed whose exchange polynomials are those of a seed without
    /// frozen variables.
    pub fn from_generalized(s: &GeneralizedSeed) -> Result<Self> {
        if s.m != 0 {
            return Err(Error::Precondition("no-frozen".into()));
        }
        let ring = match s.ring {
            GroundRing::AlgebraicClosure => GroundRing::Rationals,
            r => r,
        };
        Self::new(ring, s.names.clone(), s.exchange_polynomials())
    }

    /// Checks the seed axioms; returns the irreducibility status per polynomial.
    pub fn validate(&self) -> std::result::Result<Vec<Irreducibility>, Vec<LpViolation>> {
        let mut v = Vec::new();
        if self.ring == GroundRing::AlgebraicClosure {
            v.push(LpViolation::UnsupportedRing);
        }
        if self.f.len() != self.n {
            v.push(LpViolation::WrongCount {
                expected: self.n,
                found: self.f.len(),
            });
        }
        if self.names.len() != self.n {
            v.push(LpViolation::WrongCount {
                expected: self.n,
                found: self.names.len(),
            });
        }
        if !v.is_empty() {
            return Err(v);
        }
        let mut flags = Vec::with_capacity(self.n);
        for (idx, f) in self.f.iter().enumerate() {
            let i = idx + 1;
            if f.arity() != self.n {
                v.push(LpViolation::Arity { i, arity: f.arity() });
                continue;
            }
            if f.is_constant() {
                v.push(LpViolation::Constant { i });
                continue;
            }
            if !f.is_polynomial() {
                v.push(LpViolation::NotPolynomial { i });
                continue;
            }
            if self.ring == GroundRing::Integers && f.terms().any(|(_, c)| !c.is_integer()) {
                v.push(LpViolation::NonIntegral { i });
            }
            if f.involves(idx) {
                v.push(LpViolation::DependsOnOwnVariable { i });
            }
            let low = f.min_exponents();
            for (j, &e) in low.iter().enumerate() {
                if e > 0 {
                    v.push(LpViolation::DivisibleByVariable { i, j: j + 1 });
                }
            }
            if f.is_monomial() {
                v.push(LpViolation::Monomial { i });
                continue;
            }
            match irreducibility(f, self.ring) {
                Some(true) => flags.push(Irreducibility::Verified),
                Some(false) => v.push(LpViolation::Reducible { i }),
                None => flags.push(Irreducibility::AcceptedUnverified),
            }
        }
        if v.is_empty() {
            Ok(flags)
        } else {
            Err(v)
        }
    }

    fn check(&self) -> Result<()> {
        self.validate().map(|_| ()).map_err(Error::InvalidLpSeed)
    }

    /// `x_i in F_j` iff `x_j in F_i`.
    pub fn is_sign_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.f[j].involves(i) == self.f[i].involves(j)))
    }

    /// Representative of the class under unit rescaling of the polynomials:
    /// content removed over Q, only the sign fixed over Z.
    pub fn canonical(&self) -> LPSeed {
        LPSeed {
            f: self.f.iter().map(|p| normalize(p, self.ring)).collect(),
            ..self.clone()
        }
    }
}

/// Exact answer for segments, `None` otherwise.
fn irreducibility(f: &LaurentPoly, ring: GroundRing) -> Option<bool> {
    let seg = segment_decompose(f)?;
    // Over Z a nontrivial content is a proper factor.
    if ring == GroundRing::Integers && !f.rational_content().abs().is_one() {
        return Some(false);
    }
    Some(is_irreducible(&seg.inflated_profile()))
}

pub(crate) fn normalize(p: &LaurentPoly, ring: GroundRing) -> LaurentPoly {
    match ring {
        GroundRing::Integers => p.sign_normalized(),
        _ => p.canonical_associate(),
    }
}

/// Maximal `a` such that `F_k^a` divides `F_j` with `x_k` replaced by `F_k / x`,
/// computed in a ring with one extra variable standing for `1/x`.
pub fn hat_exponent(fj: &LaurentPoly, fk: &LaurentPoly, k: usize) -> Result<u32> {
    if fk.is_constant() {
        return Err(Error::ConstantInput);
    }
    let arity = fj.arity() + 1;
    let y = LaurentPoly::var(arity, arity - 1);
    let fk = fk.extend_arity(arity);
    let mut cur = fj.extend_arity(arity).substitute(k, &(&fk * &y))?;
    let mut a = 0;
    loop {
        match divide_exact(&cur, &fk) {
            Ok(q) => {
                cur = q;
                a += 1;
            }
            Err(Error::NotDivisible) => return Ok(a),
            Err(e) => return Err(e),
        }
    }
}

/// Exchange Laurent polynomials `F̂_j = F_j / prod_{k != j} x_k^{a_k}`.
pub fn exchange_laurent(s: &LPSeed) -> Result<Vec<LaurentPoly>> {
    s.check()?;
    hats(s)
}

fn hats(s: &LPSeed) -> Result<Vec<LaurentPoly>> {
    let mut out = Vec::with_capacity(s.n);
    for j in 0..s.n {
        let mut shift = vec![0i64; s.n];
        for (k, (e, fk)) in shift.iter_mut().zip(&s.f).enumerate() {
            if k != j {
                *e = -(hat_exponent(&s.f[j], fk, k)? as i64);
            }
        }
        out.push(s.f[j].shift(&shift));
    }
    Ok(out)
}

/// Result of one LP mutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpMutation {
    /// Canonical representative of the mutated seed, in the new cluster.
    pub seed: LPSeed,
    /// `F̂_k`, in the old cluster; the new variable is `F̂_k / x_k`.
    pub fhat_k: LaurentPoly,
    /// All exchange Laurent polynomials of the old seed.
    pub fhat: Vec<LaurentPoly>,
}

/// LP mutation in direction `k` (1-based), canonicalized.
pub fn lp_mutate(s: &LPSeed, k: usize) -> Result<LPSeed> {
    Ok(lp_mutate_detailed(s, k)?.seed)
}

pub fn lp_mutate_detailed(s: &LPSeed, k: usize) -> Result<LpMutation> {
    if k == 0 || k > s.n {
        return Err(Error::DirectionOutOfRange {
            direction: k,
            rank: s.n,
        });
    }
    s.check()?;
    let kk = k - 1;
    let fhat = hats(s)?;
    let fk_hat = &fhat[kk];
    let mut f = Vec::with_capacity(s.n);
    for (i, fi) in s.f.iter().enumerate() {
        if i == kk || !fi.involves(kk) {
            f.push(normalize(fi, s.ring));
            continue;
        }
        let p = fk_hat.eval_zero(i)?;
        if p.is_zero() {
            return Err(Error::IllDefinedSubstitution(format!(
                "F̂_{k} vanishes at x_{} = 0",
                i + 1
            )));
        }
        // In the new cluster x_k stands for x_k', so N_k = p * x_k^-1.
        let mut inv = vec![0i64; s.n];
        inv[kk] = -1;
        let nk = p.shift(&inv);
        let mut h = fi.substitute(kk, &nk)?;
        loop {
            let g = gcd(&h, &p);
            if g.is_constant() {
                break;
            }
            h = divide_exact(&h, &g)?;
        }
        // Over Z the content is also a common factor of no use: an
        // irreducible nonconstant element of Z[x] is primitive.
        f.push(h.canonical_associate());
    }
    let mut names = s.names.clone();
    names[kk] = toggle_prime(&names[kk]);
    Ok(LpMutation {
        seed: LPSeed {
            ring: s.ring,
            n: s.n,
            names,
            f,
        },
        fhat_k: fk_hat.clone(),
        fhat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_poly;

    fn seed(fs: &[&str]) -> LPSeed {
        let names = default_names(fs.len());
        LPSeed::from_polys(fs.iter().map(|s| parse_poly(s, &names).unwrap()).collect()).unwrap()
    }

    #[test]
    fn a3_hats() {
        let s = seed(&["x2 + 1", "x1 + x3", "x2 + 1"]);
        let want: Vec<LaurentPoly> = ["(x2 + 1)/x3", "x1 + x3", "(x2 + 1)/x1"]
            .iter()
            .map(|t| parse_poly(t, &default_names(3)).unwrap())
            .collect();
        assert_eq!(exchange_laurent(&s).unwrap(), want);
        assert!(s.is_sign_skew_symmetric());
    }

    #[test]
    fn markov_hat_is_f() {
        let s = seed(&["x2^2 + x3^2", "x1^2 + x3^2", "x2^2 + x1^2"]);
        assert_eq!(exchange_laurent(&s).unwrap(), s.f);
        assert_eq!(s.validate().unwrap(), vec![Irreducibility::Verified; 3]);
    }

    #[test]
    fn violations() {
        let names = default_names(2);
        let bad = LPSeed {
            ring: GroundRing::Rationals,
            n: 2,
            names: names.clone(),
            f: vec![parse_poly("x1 + x2", &names).unwrap(), parse_poly("3", &names).unwrap()],
        };
        let v = bad.validate().unwrap_err();
        assert!(v.contains(&LpViolation::DependsOnOwnVariable { i: 1 }));
        assert!(v.contains(&LpViolation::Constant { i: 2 }));
        let cyc = seed(&["x2 + 1", "x3 + 1", "x1 + 1"]);
        assert!(!cyc.is_sign_skew_symmetric());
    }

    #[test]
    fn a3_mutation_gives_expected_variable() {
        let s = seed(&["x2 + 1", "x1 + x3", "x2 + 1"]);
        let m = lp_mutate_detailed(&s, 1).unwrap();
        assert_eq!(m.fhat_k, parse_poly("(x2 + 1)/x3", &default_names(3)).unwrap());
        assert!(m.seed.validate().is_ok());
    }
}
