use std::collections::VecDeque;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{coprime, rat, IntegerMatrix, LaurentPoly};

/// Ground ring of the algebra. Arithmetic is always over Q; the ring only
/// changes which constants count as units and how factors are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum GroundRing {
    #[serde(rename = "Z")]
    Integers,
    #[default]
    #[serde(rename = "Q")]
    Rationals,
    /// An algebraically closed field of characteristic zero.
    #[serde(rename = "Qbar")]
    AlgebraicClosure,
}

/// Seed data: `n` exchangeable and `m` frozen variables, an `(n+m) x n`
/// exchange matrix, divisors `d` and strings `rho`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedSeed {
    pub ring: GroundRing,
    pub n: usize,
    pub m: usize,
    pub names: Vec<String>,
    /// Row-major, `n + m` rows of length `n`.
    pub b: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    /// `rho[i]` has `d[i] + 1` entries, each a monomial in the frozen variables
    /// (arity `n + m`).
    pub rho: Vec<Vec<LaurentPoly>>,
}

/// One violated seed invariant. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Shape(String),
    DuplicateName(String),
    NonPositiveDivisor { i: usize, d: i64 },
    SignPattern { i: usize, j: usize },
    NotSkewSymmetrizable { i: usize, j: usize },
    DivisorDoesNotDivide { i: usize, j: usize, d: i64, b: i64 },
    StringLength { i: usize, expected: usize, found: usize },
    StringEndpoint { i: usize, j: usize },
    StringNotFrozenMonomial { i: usize, j: usize },
}

impl Violation {
    /// Stable machine-readable tag.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::Shape(_) => "shape",
            Violation::DuplicateName(_) => "duplicate-name",
            Violation::NonPositiveDivisor { .. } => "non-positive-divisor",
            Violation::SignPattern { .. } => "sign-pattern",
            Violation::NotSkewSymmetrizable { .. } => "not-skew-symmetrizable",
            Violation::DivisorDoesNotDivide { .. } => "divisor-does-not-divide",
            Violation::StringLength { .. } => "string-length",
            Violation::StringEndpoint { .. } => "string-endpoint",
            Violation::StringNotFrozenMonomial { .. } => "string-not-frozen-monomial",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape(s) => write!(f, "shape: {s}"),
            Violation::DuplicateName(s) => write!(f, "duplicate variable name '{s}'"),
            Violation::NonPositiveDivisor { i, d } => write!(f, "d_{i} = {d} is not positive"),
            Violation::SignPattern { i, j } => {
                write!(f, "b_{i}{j} and b_{j}{i} violate the skew sign pattern")
            }
            Violation::NotSkewSymmetrizable { i, j } => {
                write!(f, "no skew-symmetrizer is consistent at entry ({i},{j})")
            }
            Violation::DivisorDoesNotDivide { i, j, d, b } => {
                write!(f, "d_{i} ∤ b_{j}{i} ({d} does not divide {b})")
            }
            Violation::StringLength {
                i,
                expected,
                found,
            } => write!(f, "rho_{i} has {found} entries, expected {expected}"),
            Violation::StringEndpoint { i, j } => write!(f, "rho_{i},{j} must be 1"),
            Violation::StringNotFrozenMonomial { i, j } => write!(
                f,
                "rho_{i},{j} must be a nonzero monomial in the frozen variables"
            ),
        }
    }
}

/// `[t]_+`.
pub(crate) fn pos(t: i64) -> i64 {
    t.max(0)
}

impl GeneralizedSeed {
    /// Validates and builds a seed.
    pub fn new(
        ring: GroundRing,
        n: usize,
        m: usize,
        names: Vec<String>,
        b: Vec<Vec<i64>>,
        d: Vec<i64>,
        rho: Vec<Vec<LaurentPoly>>,
    ) -> Result<Self> {
        let s = GeneralizedSeed {
            ring,
            n,
            m,
            names,
            b,
            d,
            rho,
        };
        s.validate().map_err(Error::InvalidSeed)?;
        Ok(s)
    }

    /// Seed with every `rho_{i,j}` equal to 1 and default names.
    pub fn with_trivial_strings(
        ring: GroundRing,
        n: usize,
        m: usize,
        b: Vec<Vec<i64>>,
        d: Vec<i64>,
    ) -> Result<Self> {
        let arity = n + m;
        let rho = d
            .iter()
            .map(|&di| vec![LaurentPoly::one(arity); di.max(0) as usize + 1])
            .collect();
        Self::new(ring, n, m, crate::exactmath::default_names(arity), b, d, rho)
    }

    /// Classical seed (`d = 1`, trivial strings) with default names.
    pub fn classical(n: usize, m: usize, b: Vec<Vec<i64>>) -> Result<Self> {
        Self::with_trivial_strings(GroundRing::Rationals, n, m, b, vec![1; n])
    }

    pub fn arity(&self) -> usize {
        self.n + self.m
    }

    pub fn is_classical(&self) -> bool {
        self.d.iter().all(|&x| x == 1)
    }

    pub fn exchange_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_rows(self.n, &self.b)
    }

    /// Checks every seed invariant and reports all violations.
    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let mut v = Vec::new();
        let (n, m) = (self.n, self.m);
        let arity = n + m;
        if self.names.len() != arity {
            v.push(Violation::Shape(format!(
                "{} names for {} variables",
                self.names.len(),
                arity
            )));
        }
        for (k, name) in self.names.iter().enumerate() {
            if self.names[..k].contains(name) {
                v.push(Violation::DuplicateName(name.clone()));
            }
        }
        if self.b.len() != arity || self.b.iter().any(|r| r.len() != n) {
            v.push(Violation::Shape(format!("B must be {arity}x{n}")));
        }
        if self.d.len() != n {
            v.push(Violation::Shape(format!("d must have {n} entries")));
        }
        if self.rho.len() != n {
            v.push(Violation::Shape(format!("rho must have {n} strings")));
        }
        if !v.is_empty() {
            return Err(v);
        }

        for (i, &di) in self.d.iter().enumerate() {
            if di <= 0 {
                v.push(Violation::NonPositiveDivisor { i: i + 1, d: di });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let (x, y) = (self.b[i][j], self.b[j][i]);
                if (x == 0) != (y == 0) || (x != 0 && x.signum() == y.signum()) {
                    v.push(Violation::SignPattern { i: i + 1, j: j + 1 });
                }
            }
            if self.b[i][i] != 0 {
                v.push(Violation::SignPattern { i: i + 1, j: i + 1 });
            }
        }
        if v.is_empty() {
            if let Some((i, j)) = self.skew_symmetrizer_conflict() {
                v.push(Violation::NotSkewSymmetrizable { i: i + 1, j: j + 1 });
            }
        }
        for i in 0..n {
            let di = self.d[i];
            if di <= 0 {
                continue;
            }
            for j in 0..arity {
                if self.b[j][i] % di != 0 {
                    v.push(Violation::DivisorDoesNotDivide {
                        i: i + 1,
                        j: j + 1,
                        d: di,
                        b: self.b[j][i],
                    });
                }
            }
            let expected = di as usize + 1;
            if self.rho[i].len() != expected {
                v.push(Violation::StringLength {
                    i: i + 1,
                    expected,
                    found: self.rho[i].len(),
                });
                continue;
            }
            for (j, r) in self.rho[i].iter().enumerate() {
                let endpoint = j == 0 || j + 1 == expected;
                if r.arity() != arity
                    || !r.is_monomial()
                    || !r.is_polynomial()
                    || (0..n).any(|k| r.involves(k))
                {
                    v.push(Violation::StringNotFrozenMonomial { i: i + 1, j });
                } else if endpoint && !r.is_one() {
                    v.push(Violation::StringEndpoint { i: i + 1, j });
                }
            }
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    /// Skew-symmetrizer `D` of the principal block, scaled to coprime positive
    /// integers, if one exists. Assumes the sign pattern has been checked.
    pub fn skew_symmetrizer(&self) -> Option<Vec<i64>> {
        if self.skew_symmetrizer_conflict().is_some() {
            return None;
        }
        let ds = self.symmetrizer_candidates();
        let lcm = ds
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        let ints: Vec<i64> = ds
            .iter()
            .map(|x| i64::try_from(x.numer() * &lcm / x.denom()).unwrap_or(i64::MAX))
            .collect();
        let g = crate::exactmath::int_gcd(ints.iter().copied()).max(1);
        Some(ints.iter().map(|x| x / g).collect())
    }

    /// Multipliers propagated along a spanning forest of the nonzero pattern.
    fn symmetrizer_candidates(&self) -> Vec<BigRational> {
        let n = self.n;
        let mut ds: Vec<Option<BigRational>> = vec![None; n];
        for root in 0..n {
            if ds[root].is_some() {
                continue;
            }
            ds[root] = Some(BigRational::one());
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                for j in 0..n {
                    if ds[j].is_none() && self.b[i][j] != 0 && self.b[j][i] != 0 {
                        // d_i b_ij = -d_j b_ji
                        let di = ds[i].clone().unwrap();
                        ds[j] = Some(-di * rat(self.b[i][j]) / rat(self.b[j][i]));
                        queue.push_back(j);
                    }
                }
            }
        }
        ds.into_iter().map(Option::unwrap).collect()
    }

    fn skew_symmetrizer_conflict(&self) -> Option<(usize, usize)> {
        let ds = self.symmetrizer_candidates();
        for i in 0..self.n {
            if !ds[i].is_positive() {
                return Some((i, i));
            }
            for j in 0..self.n {
                if &ds[i] * rat(self.b[i][j]) != -(&ds[j] * rat(self.b[j][i])) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn beta(&self, k: usize, i: usize) -> i64 {
        self.b[k][i] / self.d[i]
    }

    /// Exponent vector of the `j`-th term of `f_i` (without the string coefficient).
    pub(crate) fn term_exponents(&self, i: usize, j: i64) -> Vec<i64> {
        let di = self.d[i];
        (0..self.arity())
            .map(|k| {
                let bk = self.beta(k, i);
                j * pos(bk) + (di - j) * pos(-bk)
            })
            .collect()
    }

    /// `f_i = sum_j rho_{i,j} prod_k x_k^(j[beta_ki]_+ + (d_i - j)[-beta_ki]_+)`, 0-based `i`.
    pub fn exchange_polynomial(&self, i: usize) -> LaurentPoly {
        let arity = self.arity();
        let mut f = LaurentPoly::zero(arity);
        for j in 0..=self.d[i] {
            let mono = LaurentPoly::monomial(arity, self.term_exponents(i, j), BigRational::one());
            f = &f + &(&mono * &self.rho[i][j as usize]);
        }
        f
    }

    pub fn exchange_polynomials(&self) -> Vec<LaurentPoly> {
        (0..self.n).map(|i| self.exchange_polynomial(i)).collect()
    }

    /// Mutation in direction `k` (1-based).
    pub fn mutate(&self, k: usize) -> Result<GeneralizedSeed> {
        if k == 0 || k > self.n {
            return Err(Error::DirectionOutOfRange {
                direction: k,
                rank: self.n,
            });
        }
        let i = k - 1;
        let mut out = self.clone();
        out.b = mutate_matrix(&self.b, i)?;
        out.rho[i].reverse();
        out.names[i] = toggle_prime(&self.names[i]);
        Ok(out)
    }

    /// Edges `i -> j` (1-based) for every `b_ij > 0`.
    pub fn digraph(&self) -> DirectedGraph {
        let mut edges = Vec::new();
        for (i, row) in self.b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x > 0 {
                    edges.push((i + 1, j + 1));
                }
            }
        }
        DirectedGraph {
            vertices: self.arity(),
            edges,
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.digraph().is_acyclic()
    }

    /// Pairwise coprimality of the exchange polynomials.
    pub fn is_coprime(&self) -> bool {
        let fs = self.exchange_polynomials();
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                if !coprime(&fs[i], &fs[j]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn coprimality_criteria(&self) -> CoprimalityCriteria {
        let full_rank = self.exchange_matrix().rank() == self.n;
        let mut no_proportional_columns = true;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.columns_proportional(i, j) {
                    no_proportional_columns = false;
                }
            }
        }
        CoprimalityCriteria {
            full_rank,
            no_proportional_columns,
        }
    }

    /// Columns `i`, `j` are linearly dependent over Q.
    fn columns_proportional(&self, i: usize, j: usize) -> bool {
        let rows = self.arity();
        (0..rows).all(|a| {
            (0..rows).all(|c| {
                (self.b[a][i] as i128) * (self.b[c][j] as i128)
                    == (self.b[c][i] as i128) * (self.b[a][j] as i128)
            })
        })
    }
}

/// Matrix mutation in direction `i` (0-based) on an `(n+m) x n` matrix.
pub fn mutate_matrix(b: &[Vec<i64>], i: usize) -> Result<Vec<Vec<i64>>> {
    let mut out = b.to_vec();
    for (k, row) in b.iter().enumerate() {
        for (l, &bkl) in row.iter().enumerate() {
            out[k][l] = if k == i || l == i {
                bkl.checked_neg().ok_or(Error::Overflow)?
            } else {
                let bil = b[i][l];
                let bki = b[k][i];
                pos(bil)
                    .checked_mul(bki)
                    .and_then(|x| x.checked_add(bil.checked_mul(pos(-bki))?))
                    .and_then(|x| x.checked_add(bkl))
                    .ok_or(Error::Overflow)?
            };
        }
    }
    Ok(out)
}

pub(crate) fn toggle_prime(name: &str) -> String {
    match name.strip_suffix('\'') {
        Some(base) => base.to_string(),
        None => format!("{name}'"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    pub vertices: usize,
    /// 1-based `(from, to)` pairs.
    pub edges: Vec<(usize, usize)>,
}

impl DirectedGraph {
    /// Kahn's algorithm.
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertices + 1];
        let mut adj = vec![Vec::new(); self.vertices + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            indeg[b] += 1;
        }
        let mut queue: VecDeque<usize> = (1..=self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::new();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == self.vertices).then_some(order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoprimalityCriteria {
    pub full_rank: bool,
    pub no_proportional_columns: bool,
}
