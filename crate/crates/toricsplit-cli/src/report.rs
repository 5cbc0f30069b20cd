//! JSON rendering of the library types. Numbers go through serde_json's
//! arbitrary-precision representation so every integer round-trips exactly.

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};
use toricsplit::config::MoveVector;
use toricsplit::curve::NumericalSemigroup;
use toricsplit::gluing::GluingCertificate;
use toricsplit::markov::MinimalSystem;
use toricsplit::splitting::{Splitting, VerificationReport};
use toricsplit::{IntMatrix, SubspaceQ};

pub fn big(v: &BigInt) -> Value {
    let n: Number = serde_json::from_str(&v.to_string()).expect("integer literal");
    Value::Number(n)
}

pub fn bigs(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

pub fn u64s(v: &[u64]) -> Value {
    Value::Array(v.iter().map(|&x| json!(x)).collect())
}

pub fn move_vec(m: &MoveVector) -> Value {
    bigs(m.as_slice())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| bigs(m.row(r))).collect())
}

pub fn subspace(s: &SubspaceQ) -> Value {
    json!({
        "ambient": s.ambient_dim(),
        "dim": s.dim(),
        "basis": Value::Array(s.basis().iter().map(|r| bigs(r)).collect()),
    })
}

pub fn minimal_system(sys: &MinimalSystem) -> Value {
    let moves: Vec<Value> = sys.moves().iter().map(move_vec).collect();
    let indispensable: Vec<Value> = sys.indispensable().iter().map(move_vec).collect();
    let betti: Vec<Value> = sys
        .betti()
        .iter()
        .map(|(degree, comps)| {
            json!({
                "degree": bigs(degree),
                "components": comps.count(),
                "fiber_size": comps.components().iter().map(|c| c.len()).sum::<usize>(),
            })
        })
        .collect();
    json!({ "moves": moves, "indispensable": indispensable, "betti": betti })
}

pub fn verification(r: &VerificationReport) -> Value {
    json!({
        "subideal_containment": [r.contained[0], r.contained[1]],
        "generators_covered": r.covers_generators,
        "proper_subideals": [r.proper[0], r.proper[1]],
        "verdict": r.verdict(),
    })
}

pub fn splitting(s: &Splitting) -> Value {
    let (p1, p2) = s.canonical_pair();
    json!({
        "pair": [
            Value::Array(p1.basis().iter().map(|r| bigs(r)).collect()),
            Value::Array(p2.basis().iter().map(|r| bigs(r)).collect()),
        ],
        "A1": matrix(&s.a1),
        "A2": matrix(&s.a2),
        "verified": s.report.verdict(),
    })
}

pub fn gluing_certificate(c: &GluingCertificate) -> Value {
    json!({
        "s1": c.partition.s1.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "s2": c.partition.s2.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "a": bigs(&c.a),
        "c": bigs(&c.c),
        "d": bigs(&c.d),
    })
}

pub fn semigroup(ns: &NumericalSemigroup) -> Value {
    json!({
        "generators": u64s(ns.generators()),
        "frobenius": ns.frobenius(),
        "apery": u64s(ns.apery()),
        "gaps": u64s(ns.gaps()),
    })
}

/// The top-level report payload: {"input": ..., "verb": ..., "result": ...}.
pub fn envelope(verb: &str, input: Value, result: Value) -> Value {
    let mut map = Map::new();
    map.insert("input".into(), input);
    map.insert("verb".into(), verb.into());
    map.insert("result".into(), result);
    Value::Object(map)
}
