//! Height-one primes, valuation matrices and divisor class groups of
//! acyclic coprime generalized cluster algebras.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{
    factor_univariate, segment_decompose, smith_with_transforms, summarize_smith,
    squarefree_decompose, IntegerMatrix, LaurentPoly, UniPoly,
};
use crate::genseed::GeneralizedSeed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldMode {
    /// Ground field Q (equivalently Z: exchange polynomials are primitive).
    #[default]
    Rational,
    /// An algebraically closed field of characteristic zero. Primes are
    /// counted from squarefree decompositions; no algebraic numbers appear.
    AlgebraicallyClosed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeWitness {
    /// Irreducible factor of `f_i` over Q, canonically normalized.
    Polynomial(LaurentPoly),
    /// One root of a squarefree block of `G(y)`; the prime is `x^w - root`.
    Root {
        direction: Vec<i64>,
        stretch: usize,
        /// Squarefree block of `G` (primitive) containing the root.
        block: UniPoly,
        root_index: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeDivisor {
    /// Exchangeable variable `x_i` (1-based) whose exchange polynomial the prime divides.
    pub source: usize,
    pub witness: PrimeWitness,
    pub multiplicity: u32,
}

/// `n x r` matrix: entry `(i, j)` is the valuation of `x_i` at prime `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationMatrix {
    pub rows: Vec<Vec<u32>>,
}

impl ValuationMatrix {
    pub fn to_integer_matrix(&self, r: usize) -> IntegerMatrix {
        IntegerMatrix::from_rows(r, &self.rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroupResult {
    /// Number of height-one primes containing some `x_i`.
    pub r: usize,
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
    pub primes: Vec<PrimeDivisor>,
    pub valuation: ValuationMatrix,
    /// Image of `[p_j]` in `Z/t_1 + ... + Z/t_s + Z^free_rank`, one row per prime.
    pub generators: Vec<Vec<BigInt>>,
}

impl ClassGroupResult {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassGroupOptions {
    pub mode: FieldMode,
    /// Accept coprime seeds whose directed graph has cycles.
    pub allow_non_acyclic: bool,
}

impl From<FieldMode> for ClassGroupOptions {
    fn from(mode: FieldMode) -> Self {
        ClassGroupOptions {
            mode,
            allow_non_acyclic: false,
        }
    }
}

/// Names of unmet hypotheses, in the order `acyclic`, `coprime`.
pub fn unmet_preconditions(s: &GeneralizedSeed, opts: ClassGroupOptions) -> Vec<&'static str> {
    let mut out = Vec::new();
    if !opts.allow_non_acyclic && !s.is_acyclic() {
        out.push("acyclic");
    }
    if !s.is_coprime() {
        out.push("coprime");
    }
    out
}

fn check_preconditions(s: &GeneralizedSeed, opts: ClassGroupOptions) -> Result<()> {
    s.validate().map_err(Error::InvalidSeed)?;
    let unmet = unmet_preconditions(s, opts);
    if unmet.is_empty() {
        Ok(())
    } else {
        Err(Error::Precondition(unmet.join(", ")))
    }
}

pub fn height_one_primes(s: &GeneralizedSeed, mode: FieldMode) -> Result<Vec<PrimeDivisor>> {
    height_one_primes_with(s, mode.into())
}

pub fn height_one_primes_with(s: &GeneralizedSeed, opts: ClassGroupOptions) -> Result<Vec<PrimeDivisor>> {
    check_preconditions(s, opts)?;
    let mut primes = Vec::new();
    for (i, f) in s.exchange_polynomials().iter().enumerate() {
        primes.extend(primes_of(i + 1, f, opts.mode)?);
    }
    if opts.mode == FieldMode::Rational {
        for (a, p) in primes.iter().enumerate() {
            for q in &primes[..a] {
                if p.source != q.source && p.witness == q.witness {
                    return Err(Error::Internal(format!(
                        "prime shared by f_{} and f_{} of a coprime seed",
                        q.source, p.source
                    )));
                }
            }
        }
    }
    Ok(primes)
}

fn primes_of(source: usize, f: &LaurentPoly, mode: FieldMode) -> Result<Vec<PrimeDivisor>> {
    let seg = segment_decompose(f).ok_or_else(|| {
        Error::Precondition(format!("segment: f_{source} has a non-collinear Newton polytope"))
    })?;
    if seg.is_monomial() {
        // A unit: x_i is invertible and lies in no prime.
        return Ok(Vec::new());
    }
    let big_g = seg.inflated_profile();
    let arity = f.arity();
    let step = LaurentPoly::monomial(arity, seg.direction.clone(), num_rational::BigRational::one());
    let mut out = Vec::new();
    match mode {
        FieldMode::Rational => {
            for (g, mult) in factor_univariate(&big_g)?.factors {
                out.push(PrimeDivisor {
                    source,
                    witness: PrimeWitness::Polynomial(g.compose_laurent(&step).canonical_associate()),
                    multiplicity: mult,
                });
            }
        }
        FieldMode::AlgebraicallyClosed => {
            for (block, mult) in squarefree_decompose(&big_g)?.factors {
                let deg = block.degree().unwrap_or(0);
                for root_index in 0..deg {
                    out.push(PrimeDivisor {
                        source,
                        witness: PrimeWitness::Root {
                            direction: seg.direction.clone(),
                            stretch: seg.stretch,
                            block: block.clone(),
                            root_index,
                        },
                        multiplicity: mult,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Row `i` carries the multiplicities of the primes sourced at `x_{i+1}`.
pub fn valuation_matrix(primes: &[PrimeDivisor], n: usize) -> ValuationMatrix {
    let mut rows = vec![vec![0u32; primes.len()]; n];
    for (j, p) in primes.iter().enumerate() {
        rows[p.source - 1][j] = p.multiplicity;
    }
    ValuationMatrix { rows }
}

pub fn class_group(s: &GeneralizedSeed, mode: FieldMode) -> Result<ClassGroupResult> {
    class_group_with(s, mode.into())
}

pub fn class_group_with(s: &GeneralizedSeed, opts: ClassGroupOptions) -> Result<ClassGroupResult> {
    let primes = height_one_primes_with(s, opts)?;
    let r = primes.len();
    let valuation = valuation_matrix(&primes, s.n);
    let m = valuation.to_integer_matrix(r);
    let (d, _, v) = smith_with_transforms(&m, true);
    let snf = summarize_smith(&d);
    // x -> x V carries the row span onto the diagonal lattice of D.
    let generators = (0..r)
        .map(|j| {
            let mut img = Vec::new();
            for (t, dt) in snf.invariant_factors.iter().enumerate() {
                if !dt.is_one() {
                    img.push(v.get(j, t).mod_floor(dt));
                }
            }
            for t in snf.rank..r {
                img.push(v.get(j, t).clone());
            }
            img
        })
        .collect();
    Ok(ClassGroupResult {
        r,
        free_rank: snf.free_rank,
        torsion: snf.torsion,
        primes,
        valuation,
        generators,
    })
}

/// Factoriality, i.e. a trivial class group. Cross-checked against
/// irreducibility of every exchange polynomial up to units.
pub fn is_factorial(s: &GeneralizedSeed, mode: FieldMode) -> Result<bool> {
    let cg = class_group(s, mode)?;
    let mut all_irreducible = true;
    for i in 0..s.n {
        let count: u32 = cg
            .primes
            .iter()
            .filter(|p| p.source == i + 1)
            .map(|p| p.multiplicity)
            .sum();
        if count > 1 {
            all_irreducible = false;
        }
    }
    if all_irreducible != cg.is_trivial() {
        return Err(Error::Internal(
            "class group triviality disagrees with irreducibility of the exchange polynomials".into(),
        ));
    }
    Ok(cg.is_trivial())
}

/// For classical seeds: the class group is free of rank `r - n`.
pub fn classical_consistency(s: &GeneralizedSeed, mode: FieldMode) -> Result<bool> {
    if !s.is_classical() {
        return Err(Error::Precondition("classical".into()));
    }
    let cg = class_group(s, mode)?;
    let units = s
        .exchange_polynomials()
        .iter()
        .filter(|f| f.is_monomial())
        .count();
    Ok(cg.torsion.is_empty() && cg.free_rank + s.n == cg.r + units)
}

/// Total degree of `G_i` counted with multiplicity equals the row sum of
/// the valuation matrix in closed mode.
pub fn profile_degree(f: &LaurentPoly) -> Option<usize> {
    let seg = segment_decompose(f)?;
    Some(seg.inflated_profile().degree().unwrap_or(0))
}
