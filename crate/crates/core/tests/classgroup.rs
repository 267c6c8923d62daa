mod common;

use common::*;
use gencluster::classgroup::{
    class_group, class_group_with, classical_consistency, height_one_primes, is_factorial, profile_degree,
    unmet_preconditions, valuation_matrix, ClassGroupOptions, FieldMode,
};
use gencluster::exactmath::{smith_normal_form, BigInt, IntegerMatrix};
use gencluster::genseed::GeneralizedSeed;
use gencluster::realize::{realize_seed, verify_realization, AbelianGroupSpec};
use gencluster::Error;

fn show(s: &GeneralizedSeed) -> Vec<String> {
    s.exchange_polynomials().iter().map(|f| f.to_string_with(&s.names)).collect()
}

fn ints(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).unwrap()).collect()
}

#[test]
fn z2_example() {
    let s = z2_seed();
    let primes = height_one_primes(&s, FieldMode::Rational).unwrap();
    assert_eq!(primes.len(), 2);
    assert_eq!((primes[0].source, primes[0].multiplicity), (1, 1));
    assert_eq!((primes[1].source, primes[1].multiplicity), (2, 2));
    assert_eq!(valuation_matrix(&primes, 2).rows, vec![vec![1, 0], vec![0, 2]]);
    let cg = class_group(&s, FieldMode::Rational).unwrap();
    assert_eq!((cg.r, cg.free_rank, ints(&cg.torsion)), (2, 0, vec![2]));
    assert!(!is_factorial(&s, FieldMode::Rational).unwrap());
}

#[test]
fn mixed_group_in_closed_mode() {
    let g = AbelianGroupSpec::new(2, vec![3]).unwrap();
    let s = realize_seed(&g).unwrap();
    assert_eq!(show(&s), ["x4^3 + 1", "x3^3 + 3*x3^2 + 3*x3 + 1", "x2 + 1", "x1 + 1"]);
    assert_eq!(s.rho[1].len(), 4);
    let primes = height_one_primes(&s, FieldMode::AlgebraicallyClosed).unwrap();
    assert_eq!(primes.len(), 6);
    let v = valuation_matrix(&primes, s.n);
    assert_eq!(
        v.rows,
        vec![
            vec![1, 1, 1, 0, 0, 0],
            vec![0, 0, 0, 3, 0, 0],
            vec![0, 0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 0, 1],
        ]
    );
    let cg = class_group(&s, FieldMode::AlgebraicallyClosed).unwrap();
    assert_eq!((cg.free_rank, ints(&cg.torsion)), (2, vec![3]));
    // Over Q, y^3 + 1 = (y + 1)(y^2 - y + 1) gives only two primes.
    let cg = class_group(&s, FieldMode::Rational).unwrap();
    assert_eq!((cg.r, cg.free_rank, ints(&cg.torsion)), (5, 1, vec![3]));
}

#[test]
fn realization_examples() {
    let s = realize_seed(&AbelianGroupSpec::new(0, vec![2]).unwrap()).unwrap();
    assert_eq!(s.b, vec![vec![0, -1], vec![2, 0]]);
    assert_eq!(s.d, vec![2, 1]);
    assert_eq!(show(&s), ["x2^2 + 2*x2 + 1", "x1 + 1"]);
    assert!(!is_factorial(&s, FieldMode::AlgebraicallyClosed).unwrap());
    let s = realize_seed(&AbelianGroupSpec::new(2, vec![]).unwrap()).unwrap();
    assert_eq!(show(&s), ["x2 + 1", "x1^3 + 1"]);
    let trivial = realize_seed(&AbelianGroupSpec::new(0, vec![1, 1]).unwrap()).unwrap();
    assert!(is_factorial(&trivial, FieldMode::AlgebraicallyClosed).unwrap());
    assert!(verify_realization(&AbelianGroupSpec::new(0, vec![2, 2, 4]).unwrap()).unwrap());
    assert!(matches!(AbelianGroupSpec::new(1, vec![0]), Err(Error::Precondition(_))));
}

#[test]
fn case_one_binomial_powers() {
    for torsion in [vec![2], vec![2, 3], vec![3, 4, 6]] {
        let k = torsion.len();
        let s = realize_seed(&AbelianGroupSpec::new(0, torsion.clone()).unwrap()).unwrap();
        assert!(s.coprimality_criteria().full_rank);
        for (i, &ni) in torsion.iter().enumerate() {
            let partner = 2 * k - i;
            let want = poly(&format!("(x{partner} + 1)^{ni}"), 2 * k);
            assert_eq!(s.exchange_polynomial(i), want);
        }
    }
}

#[test]
fn classical_consistency_examples() {
    let case2 = GeneralizedSeed::classical(2, 0, vec![vec![0, 3], vec![-1, 0]]).unwrap();
    assert!(classical_consistency(&case2, FieldMode::AlgebraicallyClosed).unwrap());
    assert_eq!(class_group(&case2, FieldMode::AlgebraicallyClosed).unwrap().r, 4);
    let a2 = GeneralizedSeed::classical(2, 0, vec![vec![0, 1], vec![-1, 0]]).unwrap();
    let cg = class_group(&a2, FieldMode::Rational).unwrap();
    assert_eq!((cg.r, cg.free_rank), (2, 0));
    assert!(is_factorial(&a2, FieldMode::Rational).unwrap());
    assert!(classical_consistency(&a2, FieldMode::Rational).unwrap());
    assert!(matches!(classical_consistency(&z2_seed(), FieldMode::Rational), Err(Error::Precondition(_))));
}

#[test]
fn preconditions() {
    let cyc = GeneralizedSeed::classical(3, 0, vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]).unwrap();
    assert_eq!(unmet_preconditions(&cyc, FieldMode::Rational.into()), ["acyclic"]);
    match class_group(&cyc, FieldMode::Rational) {
        Err(Error::Precondition(p)) => assert!(p.contains("acyclic"), "{p}"),
        other => panic!("{other:?}"),
    }
    let opts = ClassGroupOptions {
        mode: FieldMode::Rational,
        allow_non_acyclic: true,
    };
    assert!(class_group_with(&cyc, opts).is_ok());
    let twin = GeneralizedSeed::classical(2, 1, vec![vec![0, 0], vec![0, 0], vec![1, 1]]).unwrap();
    assert_eq!(unmet_preconditions(&twin, FieldMode::Rational.into()), ["coprime"]);
}

fn random_krull(rng: &mut rand_chacha::ChaCha8Rng) -> GeneralizedSeed {
    let shape = SeedShape {
        max_n: 3,
        min_m: 0,
        max_m: 2,
        max_entry: 4,
        max_d: 3,
        random_strings: false,
    };
    loop {
        let s = random_seed(rng, shape);
        if s.is_acyclic() && s.is_coprime() {
            return s;
        }
    }
}

#[test]
fn valuation_rows_and_degrees() {
    let mut rng = rng(21);
    for _ in 0..40 {
        let s = random_krull(&mut rng);
        let primes = height_one_primes(&s, FieldMode::AlgebraicallyClosed).unwrap();
        let v = valuation_matrix(&primes, s.n);
        for (i, row) in v.rows.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                if a != 0 {
                    assert_eq!(primes[j].source, i + 1);
                }
            }
            let f = s.exchange_polynomial(i);
            let deg = profile_degree(&f).unwrap();
            assert_eq!(row.iter().map(|&a| a as usize).sum::<usize>(), deg, "{f}");
        }
    }
}

#[test]
fn permutation_invariance_and_classical_torsion() {
    let mut rng = rng(22);
    for _ in 0..40 {
        let s = random_krull(&mut rng);
        let cg = class_group(&s, FieldMode::AlgebraicallyClosed).unwrap();
        let primes = height_one_primes(&s, FieldMode::AlgebraicallyClosed).unwrap();
        let mut rows = valuation_matrix(&primes, s.n).rows;
        for row in rows.iter_mut() {
            row.reverse();
        }
        let reversed = smith_normal_form(&IntegerMatrix::from_rows(primes.len(), &rows));
        assert_eq!(reversed.torsion, cg.torsion);
        assert_eq!(reversed.free_rank, cg.free_rank);
        if s.is_classical() {
            assert!(cg.torsion.is_empty());
        }
    }
}

#[test]
fn modes_agree_on_split_polynomials() {
    // (x + 1)^2 and x + 1 profiles split into linear factors over Q.
    for torsion in [vec![2], vec![2, 4], vec![3, 5]] {
        let s = realize_seed(&AbelianGroupSpec::new(0, torsion).unwrap()).unwrap();
        let a = class_group(&s, FieldMode::Rational).unwrap();
        let b = class_group(&s, FieldMode::AlgebraicallyClosed).unwrap();
        assert_eq!((a.r, a.free_rank, &a.torsion), (b.r, b.free_rank, &b.torsion));
    }
}
