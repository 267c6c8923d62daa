//! JSON result payloads shared by the command line and the service, so both
//! print byte-identical documents.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::classgroup::{class_group_with, ClassGroupOptions, ClassGroupResult, FieldMode, PrimeWitness};
use crate::error::{Error, Result};
use crate::genseed::{
    expand_in_initial, explore_mutation_class, verify_laurent, GeneralizedSeed, GroundRing,
    RationalExpression,
};
use crate::io::seed_to_value;
use crate::lpalgebra::{enumerate_lp_cluster_variables, exchange_laurent, LPSeed};
use crate::realize::{realize_and_verify, AbelianGroupSpec};

/// Default field mode for a ground ring: closed for `Qbar`, rational otherwise.
pub fn default_mode(ring: GroundRing) -> FieldMode {
    match ring {
        GroundRing::AlgebraicClosure => FieldMode::AlgebraicallyClosed,
        _ => FieldMode::Rational,
    }
}

pub fn mode_tag(mode: FieldMode) -> &'static str {
    match mode {
        FieldMode::Rational => "rational",
        FieldMode::AlgebraicallyClosed => "closed",
    }
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn big(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn bigs(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

pub fn error_json(e: &Error) -> Value {
    let mut out = json!({ "error": e.kind(), "message": e.to_string() });
    match e {
        Error::InvalidSeed(v) => {
            out["violations"] = v
                .iter()
                .map(|x| json!({ "code": x.code(), "message": x.to_string() }))
                .collect();
        }
        Error::InvalidLpSeed(v) => {
            out["violations"] = v
                .iter()
                .map(|x| json!({ "code": x.code(), "message": x.to_string() }))
                .collect();
        }
        Error::Precondition(p) => out["precondition"] = json!(p),
        _ => {}
    }
    out
}

/// Exit status for an error: 1 for internal failures, 2 for bad input.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_)
        | Error::NotDivisible
        | Error::DivisionByZero
        | Error::ArityMismatch(..)
        | Error::NonMonomialInverse
        | Error::ConstantInput => 1,
        _ => 2,
    }
}

pub fn seed_validation_json(s: &GeneralizedSeed) -> Value {
    match s.validate() {
        Err(v) => json!({
            "valid": false,
            "violations": v.iter().map(|x| json!({ "code": x.code(), "message": x.to_string() })).collect::<Vec<_>>(),
        }),
        Ok(()) => {
            let c = s.coprimality_criteria();
            json!({
                "valid": true,
                "violations": [],
                "skew_symmetrizer": s.skew_symmetrizer(),
                "acyclic": s.is_acyclic(),
                "coprime": s.is_coprime(),
                "full_rank": c.full_rank,
                "no_proportional_columns": c.no_proportional_columns,
            })
        }
    }
}

pub fn lp_validation_json(s: &LPSeed) -> Value {
    match s.validate() {
        Err(v) => json!({
            "valid": false,
            "violations": v.iter().map(|x| json!({ "code": x.code(), "message": x.to_string() })).collect::<Vec<_>>(),
        }),
        Ok(flags) => json!({
            "valid": true,
            "violations": [],
            "irreducibility": flags.iter().map(|f| f.tag()).collect::<Vec<_>>(),
            "sign_skew_symmetric": s.is_sign_skew_symmetric(),
        }),
    }
}

pub fn exchange_polys_json(s: &GeneralizedSeed) -> Value {
    json!({
        "exchange_polynomials": s
            .exchange_polynomials()
            .iter()
            .map(|f| f.to_string_with(&s.names))
            .collect::<Vec<_>>(),
    })
}

pub fn graph_json(s: &GeneralizedSeed) -> Value {
    let g = s.digraph();
    json!({
        "vertices": g.vertices,
        "edges": g.edges.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        "acyclic": g.is_acyclic(),
    })
}

pub fn class_group_result_json(s: &GeneralizedSeed, cg: &ClassGroupResult, mode: FieldMode) -> Value {
    let primes: Vec<Value> = cg
        .primes
        .iter()
        .map(|p| {
            let witness = match &p.witness {
                PrimeWitness::Polynomial(f) => json!(f.to_string_with(&s.names)),
                PrimeWitness::Root {
                    direction,
                    stretch,
                    block,
                    root_index,
                } => json!({
                    "direction": direction,
                    "stretch": stretch,
                    "block": block.to_string(),
                    "root_index": root_index,
                }),
            };
            json!({ "source": p.source, "witness": witness, "multiplicity": p.multiplicity })
        })
        .collect();
    json!({
        "mode": mode_tag(mode),
        "r": cg.r,
        "free_rank": cg.free_rank,
        "torsion": bigs(&cg.torsion),
        "primes": primes,
        "valuation_matrix": cg.valuation.rows,
        "generators": cg.generators.iter().map(|g| bigs(g)).collect::<Vec<_>>(),
    })
}

pub fn class_group_json(s: &GeneralizedSeed, opts: ClassGroupOptions) -> Result<Value> {
    let cg = class_group_with(s, opts)?;
    Ok(class_group_result_json(s, &cg, opts.mode))
}

pub fn realize_json(g: &AbelianGroupSpec) -> Result<Value> {
    let g = g.normalize()?;
    let (s, cg, verified) = realize_and_verify(&g)?;
    Ok(json!({
        "group": { "free_rank": g.free_rank, "torsion": g.torsion },
        "seed": seed_to_value(&s),
        "class_group": class_group_result_json(&s, &cg, FieldMode::AlgebraicallyClosed),
        "verified": verified,
    }))
}

pub fn expressions_json(cluster: &[RationalExpression], names: &[String]) -> Value {
    json!(cluster.iter().map(|e| e.to_string_with(names)).collect::<Vec<_>>())
}

pub fn verify_laurent_json(s: &GeneralizedSeed, seq: &[usize]) -> Result<Value> {
    let laurent = verify_laurent(s, seq)?;
    let cluster = expand_in_initial(s, seq)?;
    Ok(json!({
        "sequence": seq,
        "laurent": laurent,
        "cluster": expressions_json(&cluster, &s.names),
    }))
}

pub fn explore_json(s: &GeneralizedSeed, max_seeds: usize) -> Result<Value> {
    let r = explore_mutation_class(s, max_seeds)?;
    Ok(json!({
        "max_seeds": max_seeds,
        "seeds_found": r.seeds_found,
        "exhausted": r.exhausted,
    }))
}

pub fn exchange_laurent_json(s: &LPSeed) -> Result<Value> {
    Ok(json!(exchange_laurent(s)?
        .iter()
        .map(|f| RationalExpression::laurent(f.clone()).to_string_with(&s.names))
        .collect::<Vec<_>>()))
}

pub fn lp_enumerate_json(s: &LPSeed, depth: usize) -> Result<Value> {
    let e = enumerate_lp_cluster_variables(s, depth)?;
    Ok(json!({
        "depth": depth,
        "count": e.variables.len(),
        "variables": e.variables.iter().map(|v| v.to_string_with(&s.names)).collect::<Vec<_>>(),
        "seeds_visited": e.seeds_visited,
        "equal_exchange_laurent": e
            .equal_exchange_laurent
            .iter()
            .map(|x| json!({ "path": x.path, "i": x.i, "j": x.j }))
            .collect::<Vec<_>>(),
    }))
}
