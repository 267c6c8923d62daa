use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::exactmath::LaurentPoly;
use crate::genseed::RationalExpression;

use super::seed::{exchange_laurent, lp_mutate, lp_mutate_detailed, LPSeed};

/// Two exchange Laurent polynomials of one seed that coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualExchangeLaurent {
    /// Mutation path (1-based directions) from the initial seed.
    pub path: Vec<usize>,
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpEnumeration {
    pub variables: BTreeSet<RationalExpression>,
    pub seeds_visited: usize,
    pub equal_exchange_laurent: Vec<EqualExchangeLaurent>,
}

/// `F̂(values) / values[k]` for `F̂` Laurent in the current cluster.
fn exchange_value(
    fhat: &LaurentPoly,
    cluster: &[RationalExpression],
    k: usize,
) -> Result<RationalExpression> {
    let (low, p) = fhat.split_monomial();
    let n = cluster.len();
    let mut den = vec![0i64; n];
    let mut num_shift = vec![0i64; n];
    for v in 0..n {
        if low[v] < 0 {
            den[v] = -low[v];
        } else {
            num_shift[v] = low[v];
        }
    }
    den[k] += 1;
    let num = RationalExpression::eval_polynomial(&p.shift(&num_shift), cluster)?;
    let mono = LaurentPoly::monomial(n, den, num_rational::BigRational::from_integer(1.into()));
    let den = RationalExpression::eval_polynomial(&mono, cluster)?;
    num.divide(&den)
}

/// One LP mutation tracking the cluster as expressions in the initial one.
pub fn lp_step(
    seed: &LPSeed,
    cluster: &[RationalExpression],
    k: usize,
) -> Result<(LPSeed, Vec<RationalExpression>)> {
    let m = lp_mutate_detailed(seed, k)?;
    let value = exchange_value(&m.fhat_k, cluster, k - 1)?;
    let mut c = cluster.to_vec();
    c[k - 1] = value;
    Ok((m.seed, c))
}

/// Breadth-first LP mutation up to `depth` steps, collecting every cluster
/// variable as an expression in the initial cluster. Seeds are identified
/// positionally by their cluster expressions and canonical polynomials.
pub fn enumerate_lp_cluster_variables(s: &LPSeed, depth: usize) -> Result<LpEnumeration> {
    s.validate().map_err(Error::InvalidLpSeed)?;
    let n = s.n;
    let start = s.canonical();
    let cluster: Vec<RationalExpression> = (0..n).map(|v| RationalExpression::var(n, v)).collect();
    let mut variables: BTreeSet<RationalExpression> = cluster.iter().cloned().collect();
    let mut seen: HashSet<(Vec<RationalExpression>, Vec<LaurentPoly>)> = HashSet::new();
    seen.insert((cluster.clone(), start.f.clone()));
    let mut level = vec![(start, cluster, Vec::<usize>::new())];
    let mut equal = Vec::new();
    for step in 0..=depth {
        let mut next = Vec::new();
        for (seed, cluster, path) in &level {
            let fhat = exchange_laurent(seed)?;
            for i in 0..n {
                for j in i + 1..n {
                    if fhat[i] == fhat[j] {
                        log::warn!(
                            "equal exchange Laurent polynomials F̂_{} = F̂_{} after {path:?}",
                            i + 1,
                            j + 1
                        );
                        equal.push(EqualExchangeLaurent {
                            path: path.clone(),
                            i: i + 1,
                            j: j + 1,
                        });
                    }
                }
            }
            if step == depth {
                continue;
            }
            for k in 1..=n {
                let mutated = lp_mutate(seed, k)?;
                let value = exchange_value(&fhat[k - 1], cluster, k - 1)?;
                if !value.is_laurent() {
                    return Err(Error::Internal(format!(
                        "non-Laurent LP cluster variable {value} after {path:?} then {k}"
                    )));
                }
                variables.insert(value.clone());
                let mut c = cluster.clone();
                c[k - 1] = value;
                if seen.insert((c.clone(), mutated.f.clone())) {
                    let mut p = path.clone();
                    p.push(k);
                    next.push((mutated, c, p));
                }
            }
        }
        level = next;
    }
    Ok(LpEnumeration {
        variables,
        seeds_visited: seen.len(),
        equal_exchange_laurent: equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{default_names, parse_poly};

    #[test]
    fn a3_variables() {
        let names = default_names(3);
        let f = ["x2 + 1", "x1 + x3", "x2 + 1"].iter().map(|s| parse_poly(s, &names).unwrap()).collect();
        let s = LPSeed::from_polys(f).unwrap();
        let e = enumerate_lp_cluster_variables(&s, 4).unwrap();
        let got: Vec<String> = e.variables.iter().map(|v| v.to_string()).collect();
        assert_eq!(got.len(), 7, "{got:?}");
        let d0 = enumerate_lp_cluster_variables(&s, 0).unwrap();
        assert_eq!(d0.variables.len(), 3);
    }
}
