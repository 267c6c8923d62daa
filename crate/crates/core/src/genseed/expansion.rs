use std::collections::{BTreeMap, VecDeque};

use crate::error::Result;
use crate::exactmath::{divide_exact, LaurentPoly};

use super::expr::{eval_fraction, RationalExpression};
use super::seed::GeneralizedSeed;

/// Expressions of the current extended cluster in the initial one, together
/// with the current seed.
#[derive(Debug, Clone)]
pub struct TrackedSeed {
    pub seed: GeneralizedSeed,
    pub cluster: Vec<RationalExpression>,
}

impl TrackedSeed {
    pub fn initial(seed: &GeneralizedSeed) -> Self {
        let arity = seed.arity();
        TrackedSeed {
            seed: seed.clone(),
            cluster: (0..arity).map(|v| RationalExpression::var(arity, v)).collect(),
        }
    }

    /// Mutation in direction `k` (1-based) using `mutate` for the seed data.
    pub fn step_with<M>(&self, k: usize, mutate: M) -> Result<TrackedSeed>
    where
        M: Fn(&GeneralizedSeed, usize) -> Result<GeneralizedSeed>,
    {
        let next = mutate(&self.seed, k)?;
        let i = k - 1;
        let f = self.seed.exchange_polynomial(i);
        let new_var = exchange(&f, &self.cluster, i)?;
        let mut cluster = self.cluster.clone();
        cluster[i] = new_var;
        Ok(TrackedSeed {
            seed: next,
            cluster,
        })
    }

    pub fn step(&self, k: usize) -> Result<TrackedSeed> {
        self.step_with(k, GeneralizedSeed::mutate)
    }
}

/// `f(cluster) / cluster[i]`, reduced.
fn exchange(f: &LaurentPoly, cluster: &[RationalExpression], i: usize) -> Result<RationalExpression> {
    let arity = cluster[0].arity();
    let xi = &cluster[i];
    let (num, den) = if cluster.iter().all(|v| v.is_laurent()) {
        let nums: Vec<LaurentPoly> = cluster.iter().map(|v| v.numerator().clone()).collect();
        (f.compose(&nums, arity)?, LaurentPoly::one(arity))
    } else {
        eval_fraction(f, cluster, arity)
    };
    let num = &num * xi.denominator();
    let den = &den * xi.numerator();
    if let Ok(q) = divide_exact(&num, &den) {
        return Ok(RationalExpression::laurent(q));
    }
    RationalExpression::new(num, den)
}

/// Expressions of every variable of the final extended cluster after the
/// mutation sequence (1-based directions), in the initial cluster.
pub fn expand_in_initial(s0: &GeneralizedSeed, sequence: &[usize]) -> Result<Vec<RationalExpression>> {
    expand_in_initial_with(s0, sequence, GeneralizedSeed::mutate)
}

/// As [`expand_in_initial`] with a caller-supplied seed mutation; the
/// exchange relation at each step always comes from the current seed.
pub fn expand_in_initial_with<M>(
    s0: &GeneralizedSeed,
    sequence: &[usize],
    mutate: M,
) -> Result<Vec<RationalExpression>>
where
    M: Fn(&GeneralizedSeed, usize) -> Result<GeneralizedSeed>,
{
    Ok(expansion_trace(s0, sequence, mutate)?
        .pop()
        .expect("trace starts with the initial seed")
        .cluster)
}

fn expansion_trace<M>(s0: &GeneralizedSeed, sequence: &[usize], mutate: M) -> Result<Vec<TrackedSeed>>
where
    M: Fn(&GeneralizedSeed, usize) -> Result<GeneralizedSeed>,
{
    s0.validate().map_err(crate::error::Error::InvalidSeed)?;
    let mut trace = vec![TrackedSeed::initial(s0)];
    for &k in sequence {
        let next = trace.last().unwrap().step_with(k, &mutate)?;
        trace.push(next);
    }
    Ok(trace)
}

/// True iff every cluster variable met along the sequence is a Laurent
/// polynomial in the initial cluster.
pub fn verify_laurent(s0: &GeneralizedSeed, sequence: &[usize]) -> Result<bool> {
    verify_laurent_with(s0, sequence, GeneralizedSeed::mutate)
}

pub fn verify_laurent_with<M>(s0: &GeneralizedSeed, sequence: &[usize], mutate: M) -> Result<bool>
where
    M: Fn(&GeneralizedSeed, usize) -> Result<GeneralizedSeed>,
{
    let trace = expansion_trace(s0, sequence, mutate)?;
    Ok(trace.iter().all(|t| t.cluster.iter().all(|e| e.is_laurent())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExplorationResult {
    pub seeds_found: usize,
    pub exhausted: bool,
}

/// Breadth-first search over the mutation class, identifying seeds whose
/// clusters agree as sets of expressions and whose data agree under the
/// induced relabeling. Stops once `max_seeds` distinct seeds are known and
/// another one turns up.
pub fn explore_mutation_class(s0: &GeneralizedSeed, max_seeds: usize) -> Result<ExplorationResult> {
    s0.validate().map_err(crate::error::Error::InvalidSeed)?;
    let start = TrackedSeed::initial(s0);
    let mut seen: BTreeMap<SeedKey, ()> = BTreeMap::new();
    seen.insert(seed_key(&start), ());
    if max_seeds == 0 {
        return Ok(ExplorationResult {
            seeds_found: 0,
            exhausted: false,
        });
    }
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for k in 1..=s0.n {
            let next = t.step(k)?;
            let key = seed_key(&next);
            if seen.contains_key(&key) {
                continue;
            }
            if seen.len() >= max_seeds {
                return Ok(ExplorationResult {
                    seeds_found: seen.len(),
                    exhausted: false,
                });
            }
            seen.insert(key, ());
            queue.push_back(next);
        }
    }
    Ok(ExplorationResult {
        seeds_found: seen.len(),
        exhausted: true,
    })
}

type SeedKey = (Vec<RationalExpression>, Vec<Vec<i64>>, Vec<i64>, Vec<Vec<LaurentPoly>>);

/// Canonical representative: exchangeable positions sorted by expression,
/// with `B`, `d` and `rho` permuted along.
fn seed_key(t: &TrackedSeed) -> SeedKey {
    let n = t.seed.n;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| t.cluster[a].cmp(&t.cluster[b]));
    let exprs: Vec<RationalExpression> = order.iter().map(|&i| t.cluster[i].clone()).collect();
    let row_of = |r: usize| if r < n { order[r] } else { r };
    let b: Vec<Vec<i64>> = (0..t.seed.arity())
        .map(|r| order.iter().map(|&c| t.seed.b[row_of(r)][c]).collect())
        .collect();
    let d = order.iter().map(|&i| t.seed.d[i]).collect();
    let rho = order.iter().map(|&i| t.seed.rho[i].clone()).collect();
    (exprs, b, d, rho)
}
