#![allow(dead_code, clippy::needless_range_loop)]

use gencluster::exactmath::{default_names, parse_poly, BigRational, LaurentPoly};
use gencluster::genseed::{GeneralizedSeed, GroundRing};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn z2_seed() -> GeneralizedSeed {
    let names = default_names(2);
    let one = LaurentPoly::one(2);
    let two = parse_poly("2", &names).unwrap();
    GeneralizedSeed::new(
        GroundRing::Rationals,
        2,
        0,
        names,
        vec![vec![0, -2], vec![1, 0]],
        vec![1, 2],
        vec![vec![one.clone(), one.clone()], vec![one.clone(), two, one]],
    )
    .unwrap()
}

pub const Z2_JSON: &str =
    r#"{"ring":"Q","n":2,"m":0,"B":[[0,-2],[1,0]],"d":[1,2],"rho":[["1","1"],["1","2","1"]]}"#;

pub const A3_LP_JSON: &str = r#"{"ring":"Q","n":3,"F":["x2 + 1","x1 + x3","x2 + 1"]}"#;

/// Bounds for random seeds.
#[derive(Debug, Clone, Copy)]
pub struct SeedShape {
    pub max_n: usize,
    pub min_m: usize,
    pub max_m: usize,
    pub max_entry: i64,
    pub max_d: i64,
    /// Use random frozen monomials for the inner string entries.
    pub random_strings: bool,
}

/// `B = diag(delta) * C * diag(d)` with `C` skew-symmetric is skew-symmetrizable
/// with every column divisible by its `d_i`; frozen rows are multiples of `d_i`.
/// Rejection keeps entries within `max_entry`.
pub fn random_seed(rng: &mut ChaCha8Rng, shape: SeedShape) -> GeneralizedSeed {
    loop {
        let n = rng.gen_range(1..=shape.max_n);
        let m = rng.gen_range(shape.min_m..=shape.max_m);
        if let Some(s) = try_seed(rng, n, m, shape) {
            return s;
        }
    }
}

pub fn random_seed_of_rank(rng: &mut ChaCha8Rng, n: usize, m: usize, shape: SeedShape) -> GeneralizedSeed {
    loop {
        if let Some(s) = try_seed(rng, n, m, shape) {
            return s;
        }
    }
}

fn try_seed(rng: &mut ChaCha8Rng, n: usize, m: usize, shape: SeedShape) -> Option<GeneralizedSeed> {
    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=shape.max_d)).collect();
    let delta: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = rng.gen_range(-2..=2);
            c[i][j] = v;
            c[j][i] = -v;
        }
    }
    let mut b = vec![vec![0i64; n]; n + m];
    for i in 0..n {
        for j in 0..n {
            b[i][j] = delta[i] * c[i][j] * d[j];
        }
    }
    for row in b.iter_mut().skip(n) {
        for j in 0..n {
            row[j] = d[j] * rng.gen_range(-2..=2);
        }
    }
    if b.iter().flatten().any(|x| x.abs() > shape.max_entry) {
        return None;
    }
    let arity = n + m;
    let names = default_names(arity);
    let rho = d
        .iter()
        .map(|&di| {
            (0..=di)
                .map(|j| {
                    if j == 0 || j == di || !shape.random_strings || m == 0 {
                        LaurentPoly::one(arity)
                    } else {
                        let mut e = vec![0i64; arity];
                        for x in e.iter_mut().skip(n) {
                            *x = rng.gen_range(0..=1);
                        }
                        LaurentPoly::monomial(arity, e, BigRational::from_integer(1.into()))
                    }
                })
                .collect()
        })
        .collect();
    GeneralizedSeed::new(GroundRing::Rationals, n, m, names, b, d, rho).ok()
}

pub fn random_classical(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> GeneralizedSeed {
    random_seed(
        rng,
        SeedShape {
            max_n,
            min_m: 0,
            max_m,
            max_entry: 3,
            max_d: 1,
            random_strings: false,
        },
    )
}

pub fn random_sequence(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<usize> {
    let dirs: Vec<usize> = (1..=n).collect();
    (0..len).map(|_| *dirs.choose(rng).unwrap()).collect()
}

// ---------------------------------------------------------------------------
// Kronecker factorization oracle over Z, in i128.

/// Coefficients lowest degree first.
pub type IPoly = Vec<i128>;

fn trim(mut p: IPoly) -> IPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn eval(p: &IPoly, x: i128) -> i128 {
    p.iter().rev().fold(0, |acc, c| acc * x + c)
}

pub fn ipoly_mul(a: &IPoly, b: &IPoly) -> IPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact quotient `a / b` over Z, if any.
fn ipoly_div(a: &IPoly, b: &IPoly) -> Option<IPoly> {
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return None;
    }
    let mut q = vec![0; r.len() - db];
    let lb = *b.last().unwrap();
    for k in (0..q.len()).rev() {
        let c = r[k + db];
        if c % lb != 0 {
            return None;
        }
        let t = c / lb;
        q[k] = t;
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= t * y;
        }
    }
    r.iter().all(|&x| x == 0).then(|| trim(q))
}

fn divisors(v: i128) -> Vec<i128> {
    let v = v.abs();
    let mut out = Vec::new();
    let mut k = 1;
    while k * k <= v {
        if v % k == 0 {
            out.push(k);
            if k * k != v {
                out.push(v / k);
            }
        }
        k += 1;
    }
    out
}

/// Integer polynomial through `(xs[i], ys[i])` if its coefficients are integral.
fn interpolate(xs: &[i128], ys: &[i128]) -> Option<IPoly> {
    let k = xs.len();
    // Divided differences of an integer polynomial at integer nodes are integers.
    let mut dd = ys.to_vec();
    let mut coef = vec![dd[0]];
    for level in 1..k {
        let mut next = Vec::with_capacity(k - level);
        for i in 0..k - level {
            let num = dd[i + 1] - dd[i];
            let den = xs[i + level] - xs[i];
            if num % den != 0 {
                return None;
            }
            next.push(num / den);
        }
        coef.push(next[0]);
        dd = next;
    }
    let mut p: IPoly = vec![0];
    for i in (0..k).rev() {
        p = ipoly_mul(&p, &vec![-xs[i], 1]);
        p[0] += coef[i];
        p = trim(p);
    }
    Some(trim(p))
}

fn normalize_sign(p: IPoly) -> IPoly {
    if *p.last().unwrap() < 0 {
        p.into_iter().map(|c| -c).collect()
    } else {
        p
    }
}

/// A factor of `f` of exact degree `d`, if one exists.
fn kronecker_factor(f: &IPoly, d: usize) -> Option<IPoly> {
    let mut pts: Vec<(i128, i128)> = (-8i128..=8).map(|x| (x, eval(f, x))).collect();
    if let Some(&(x, _)) = pts.iter().find(|(_, v)| *v == 0) {
        if d == 1 {
            return Some(vec![-x, 1]);
        }
    }
    pts.retain(|(_, v)| *v != 0);
    pts.sort_by_key(|(_, v)| divisors(*v).len());
    let pts = &pts[..=d];
    let xs: Vec<i128> = pts.iter().map(|p| p.0).collect();
    let choices: Vec<Vec<i128>> = pts
        .iter()
        .enumerate()
        .map(|(i, (_, v))| {
            let ds = divisors(*v);
            if i == 0 {
                ds
            } else {
                ds.iter().flat_map(|&x| [x, -x]).collect()
            }
        })
        .collect();
    let mut idx = vec![0usize; d + 1];
    loop {
        let ys: Vec<i128> = idx.iter().enumerate().map(|(i, &j)| choices[i][j]).collect();
        if let Some(g) = interpolate(&xs, &ys) {
            if g.len() == d + 1 && ipoly_div(f, &g).is_some() {
                return Some(normalize_sign(g));
            }
        }
        let mut t = 0;
        loop {
            if t == idx.len() {
                return None;
            }
            idx[t] += 1;
            if idx[t] < choices[t].len() {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
    }
}

/// Content (with sign of the leading coefficient) and primitive irreducible
/// factors with positive leading coefficient, sorted.
pub fn kronecker_factorization(f: &IPoly) -> (i128, Vec<(IPoly, u32)>) {
    let f = trim(f.clone());
    let mut content = f.iter().fold(0, |g, &c| gcd(g, c));
    if *f.last().unwrap() < 0 {
        content = -content;
    }
    let mut rest: IPoly = f.iter().map(|c| c / content).collect();
    let mut out: Vec<(IPoly, u32)> = Vec::new();
    // x is handled directly since evaluation at 0 would vanish.
    let mut mx = 0;
    while rest.len() > 1 && rest[0] == 0 {
        rest.remove(0);
        mx += 1;
    }
    if mx > 0 {
        out.push((vec![0, 1], mx));
    }
    'outer: while rest.len() > 1 {
        let deg = rest.len() - 1;
        for d in 1..=deg / 2 {
            if let Some(g) = kronecker_factor(&rest, d) {
                let mut k = 0;
                while let Some(q) = ipoly_div(&rest, &g) {
                    rest = q;
                    k += 1;
                }
                out.push((g, k));
                continue 'outer;
            }
        }
        out.push((normalize_sign(rest.clone()), 1));
        break;
    }
    out.sort();
    (content, out)
}

pub fn random_ipoly(rng: &mut ChaCha8Rng) -> IPoly {
    loop {
        let p = if rng.gen_bool(0.5) {
            let deg = rng.gen_range(1..=6);
            let mut p: IPoly = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
            if p[deg] == 0 {
                p[deg] = 1;
            }
            p
        } else {
            // Products of small factors, so that factorizations are nontrivial.
            let parts = rng.gen_range(2..=3);
            let mut p: IPoly = vec![1];
            for _ in 0..parts {
                let deg = rng.gen_range(1..=2);
                let mut q: IPoly = (0..=deg).map(|_| rng.gen_range(-2..=2)).collect();
                if q[deg] == 0 {
                    q[deg] = 1;
                }
                p = ipoly_mul(&p, &q);
            }
            p
        };
        let p = trim(p);
        if p.len() >= 2 && p.len() <= 7 && p.iter().all(|c| c.abs() <= 9) {
            return p;
        }
    }
}

// ---------------------------------------------------------------------------
// Determinantal-divisor oracle for the Smith normal form.

fn det(m: &[Vec<i128>]) -> i128 {
    let k = m.len();
    if k == 1 {
        return m[0][0];
    }
    (0..k)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Nonzero invariant factors `D_k / D_(k-1)`, `D_k` the gcd of all `k x k` minors.
pub fn determinantal_invariants(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut dk = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i128>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
                dk = gcd(dk, det(&sub));
            }
        }
        if dk == 0 {
            break;
        }
        out.push(dk / prev);
        prev = dk;
    }
    out
}

pub fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let r = rng.gen_range(1..=5);
    let c = rng.gen_range(1..=5);
    (0..r).map(|_| (0..c).map(|_| rng.gen_range(-4..=4)).collect()).collect()
}

pub fn poly(text: &str, arity: usize) -> LaurentPoly {
    parse_poly(text, &default_names(arity)).unwrap()
}
