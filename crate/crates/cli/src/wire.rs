//! JSON and CSV wire formats. Rationals travel as `"p/q"` strings with
//! a positive denominator; elements of ℚ(i) as `{"re": "p/q", "im":
//! "p/q"}` objects. All maps serialize with sorted keys, so identical
//! data yields identical bytes.

use ale_curves::count::{
    CurveCountReport, PointKind, PointLocation, Rank1Report, SemicontReport, ZetaTriple,
};
use ale_curves::decomp::{
    DecompKind, Decomposition, InducedDecomposition, SolveMode, SolverResult,
};
use ale_curves::exact::{rat_from_str, rat_to_string, Gauss, Rat};
use ale_curves::roots::{build_root_system, Family, RootSubsystem, RootSystem};
use ale_curves::Error;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub fn rat_json(r: &Rat) -> Value {
    Value::String(rat_to_string(r))
}

pub fn gauss_json(g: &Gauss) -> Value {
    json!({ "re": rat_to_string(&g.re), "im": rat_to_string(&g.im) })
}

pub fn rat_from_json(v: &Value) -> Result<Rat, Error> {
    match v {
        Value::String(s) => rat_from_str(s),
        Value::Number(n) => {
            rat_from_str(&n.to_string()).map_err(|_| Error::Parse(format!("bad rational {}", n)))
        }
        other => Err(Error::Parse(format!("expected \"p/q\", got {}", other))),
    }
}

pub fn gauss_from_json(v: &Value) -> Result<Gauss, Error> {
    match v {
        // a bare "p/q" string is accepted as a real value
        Value::String(_) | Value::Number(_) => Ok(Gauss::from_rat(rat_from_json(v)?)),
        Value::Object(m) => {
            let re = m
                .get("re")
                .map(rat_from_json)
                .transpose()?
                .unwrap_or_else(ale_curves::exact::rat_zero);
            let im = m
                .get("im")
                .map(rat_from_json)
                .transpose()?
                .unwrap_or_else(ale_curves::exact::rat_zero);
            Ok(Gauss::new(re, im))
        }
        other => Err(Error::Parse(format!("expected Gaussian rational, got {}", other))),
    }
}

/// On-disk twistor-parameter file: three rows of `"p/q"` strings.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ZetaFile {
    pub family: String,
    pub rank: usize,
    pub zeta: [Vec<String>; 3],
}

impl ZetaFile {
    pub fn parse(text: &str) -> Result<(RootSystem, ZetaTriple), Error> {
        let file: ZetaFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("zeta file: {}", e)))?;
        let family = family_from_str(&file.family)?;
        let system = build_root_system(family, file.rank)?;
        let rows: [Vec<Rat>; 3] = [
            parse_row(&file.zeta[0])?,
            parse_row(&file.zeta[1])?,
            parse_row(&file.zeta[2])?,
        ];
        let zeta = ZetaTriple::new(&system, rows)?;
        Ok((system, zeta))
    }

    pub fn from_zeta(system: &RootSystem, zeta: &ZetaTriple) -> Self {
        let rows = zeta.rows();
        ZetaFile {
            family: system.family().letter().to_string(),
            rank: system.rank(),
            zeta: [
                rows[0].iter().map(rat_to_string).collect(),
                rows[1].iter().map(rat_to_string).collect(),
                rows[2].iter().map(rat_to_string).collect(),
            ],
        }
    }
}

fn parse_row(row: &[String]) -> Result<Vec<Rat>, Error> {
    row.iter().map(|s| rat_from_str(s)).collect()
}

pub fn family_from_str(s: &str) -> Result<Family, Error> {
    s.chars()
        .next()
        .and_then(Family::from_letter)
        .filter(|_| s.len() == 1)
        .ok_or_else(|| Error::Parse(format!("unknown family {:?} (expected A, D or E)", s)))
}

pub fn root_system_json(system: &RootSystem) -> Value {
    json!({
        "family": system.family().letter().to_string(),
        "rank": system.rank(),
        "num_roots": system.num_roots(),
        "roots": system.roots(),
        "cartan": system.cartan(),
    })
}

pub fn zeta_json(system: &RootSystem, zeta: &ZetaTriple) -> Value {
    serde_json::to_value(ZetaFile::from_zeta(system, zeta)).expect("serializable")
}

fn point_location_json(loc: &PointLocation) -> Value {
    match loc {
        PointLocation::Exact(p) => json!({
            "type": "exact",
            "z1": gauss_json(p.z1()),
            "z2": gauss_json(p.z2()),
        }),
        PointLocation::PrivatePair { class, member } => json!({
            "type": "private_pair",
            "class": class,
            "member": member,
        }),
    }
}

pub fn count_report_json(report: &CurveCountReport) -> Value {
    let points: Vec<Value> = report
        .points
        .iter()
        .map(|p| {
            json!({
                "location": point_location_json(&p.location),
                "kind": match p.kind {
                    PointKind::Tangential => "tangential",
                    PointKind::Transversal => "transversal",
                },
                "classes": p.classes,
                "member_roots": p.member_roots.iter().collect::<Vec<_>>(),
                "subsystem_rank": p.subsystem_rank,
            })
        })
        .collect();
    let classes: Vec<Value> = report
        .classes
        .iter()
        .map(|c| {
            json!({
                "roots": c.roots,
                "rank": c.rank,
                "form": {
                    "a": gauss_json(&c.form.a),
                    "b": gauss_json(&c.form.b),
                    "c": gauss_json(&c.form.c),
                },
            })
        })
        .collect();
    json!({
        "rank_zeta": report.rank_zeta,
        "q1": report.q1,
        "q2": report.q2,
        "s_count": report.s_count,
        "t_count": report.t_count,
        "classes": classes,
        "points": points,
        "bounds": report.bounds.iter().map(|(n, ok)| json!([n, ok])).collect::<Vec<_>>(),
        "bounds_ok": report.bounds_ok(),
    })
}

pub fn rank1_report_json(report: &Rank1Report) -> Value {
    json!({
        "direction": report.direction.iter().map(rat_to_string).collect::<Vec<_>>(),
        "xyz": [rat_to_string(&report.xyz.0), rat_to_string(&report.xyz.1), rat_to_string(&report.xyz.2)],
        "quadratic": {
            "a": gauss_json(&report.quadratic.a),
            "b": gauss_json(&report.quadratic.b),
            "c": gauss_json(&report.quadratic.c),
        },
        "roots": report.roots.as_ref().map(|(p, q)| json!([
            { "z1": gauss_json(p.z1()), "z2": gauss_json(p.z2()) },
            { "z1": gauss_json(q.z1()), "z2": gauss_json(q.z2()) },
        ])),
        "q1": report.q1,
        "q2": report.q2,
    })
}

fn piece_json(piece: &RootSubsystem) -> Value {
    json!(piece.members.iter().collect::<Vec<_>>())
}

pub fn decomposition_json(d: &Decomposition) -> Value {
    let (kind, s) = match d.kind {
        DecompKind::Induced => ("induced", None),
        DecompKind::Type1 => ("type1", None),
        DecompKind::Type2 { s } => ("type2", Some(s)),
    };
    json!({
        "kind": kind,
        "s": s,
        "pieces": d.pieces.iter().map(piece_json).collect::<Vec<_>>(),
    })
}

/// Parses a decomposition witness: pieces are lists of root indices.
pub fn decomposition_from_json(system: &RootSystem, v: &Value) -> Result<Decomposition, Error> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("witness must be an object".into()))?;
    let kind_str = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("witness needs a \"kind\"".into()))?;
    let pieces_val = obj
        .get("pieces")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("witness needs \"pieces\"".into()))?;
    let mut pieces = Vec::new();
    for (i, pv) in pieces_val.iter().enumerate() {
        let arr = pv
            .as_array()
            .ok_or_else(|| Error::Parse(format!("piece {} must be an index list", i)))?;
        let mut members = std::collections::BTreeSet::new();
        for e in arr {
            let idx = e
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("piece {} has a non-integer entry", i)))?
                as usize;
            if idx >= system.num_roots() {
                return Err(Error::Parse(format!("piece {} index {} out of range", i, idx)));
            }
            members.insert(idx);
        }
        pieces.push(RootSubsystem { members, span_closed: false });
    }
    let kind = match kind_str {
        "induced" => DecompKind::Induced,
        "type1" => DecompKind::Type1,
        "type2" => {
            let s = obj
                .get("s")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("type2 witness needs \"s\"".into()))?
                as usize;
            DecompKind::Type2 { s }
        }
        other => return Err(Error::Parse(format!("unknown decomposition kind {:?}", other))),
    };
    Ok(Decomposition { pieces, kind })
}

pub fn solver_result_json(r: &SolverResult) -> Value {
    json!({
        "value": r.value,
        "mode": match r.mode {
            SolveMode::Type1 => "type1",
            SolveMode::Type2Literal => "type2_literal",
            SolveMode::Type2Geometric => "type2_geometric",
        },
        "proven_optimal": r.proven_optimal,
        "explored": r.explored,
        "witness": decomposition_json(&r.witness),
    })
}

pub fn induced_decomposition_json(d: &InducedDecomposition) -> Value {
    json!({
        "classes": d.classes.iter().map(|c| json!({
            "line": { "z1": gauss_json(c.line.z1()), "z2": gauss_json(c.line.z2()) },
            "members": c.subsystem.members.iter().collect::<Vec<_>>(),
            "rank": c.rank,
            "simple_count": c.simple_count,
        })).collect::<Vec<_>>(),
        "rank_sum": d.rank_sum,
        "class_count_bounds_ok": d.class_count_bounds_ok,
        "rank_sum_bounds_ok": d.rank_sum_bounds_ok,
    })
}

pub fn semicont_report_json(system: &RootSystem, r: &SemicontReport) -> Value {
    json!({
        "base_q1": r.base_q1,
        "trials": r.trials,
        "min_q1": r.min_q1,
        "rejected": r.rejected,
        "violations": r.violations.iter().map(|v| json!({
            "q1": v.q1,
            "zeta": zeta_json(system, &v.zeta),
        })).collect::<Vec<_>>(),
    })
}

/// One fixed-schema CSV row of a sampling run.
#[derive(Clone, Debug)]
pub struct CsvRow {
    pub family: Family,
    pub rank: usize,
    pub seed_index: u64,
    pub rank_zeta: usize,
    pub q1: usize,
    pub q2: usize,
    pub s_count: usize,
    pub t_count: usize,
    pub bounds_ok: bool,
}

pub const CSV_HEADER: &str = "family,rank,seed_index,rank_zeta,q1,q2,s_count,t_count,bounds_ok";

pub fn rows_to_csv(rows: &[CsvRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.family.letter(),
            r.rank,
            r.seed_index,
            r.rank_zeta,
            r.q1,
            r.q2,
            r.s_count,
            r.t_count,
            r.bounds_ok
        ));
    }
    out
}

/// Canonical (sorted-key, compact) JSON bytes.
pub fn canonical_bytes(v: &Value) -> Vec<u8> {
    let mut bytes = serde_json::to_vec(v).expect("serializable");
    bytes.push(b'\n');
    bytes
}
