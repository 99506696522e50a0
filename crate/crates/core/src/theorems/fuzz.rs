use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::families::{binary_ideal, instance_rng, serre_pair, subscheme};
use super::{verify, Verdict, VerificationReport, THEOREM_IDS};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceError {
    pub instance: u64,
    pub message: String,
}

/// Outcome of a campaign; reports are ordered by instance id.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FuzzSummary {
    pub theorem_id: String,
    pub count: u64,
    pub seed: u64,
    pub prime: u32,
    pub holds: u64,
    pub violated: u64,
    pub not_applicable: u64,
    pub errors: Vec<InstanceError>,
    pub reports: Vec<VerificationReport>,
}

impl FuzzSummary {
    pub fn violations(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| r.verdict == Verdict::Violated)
    }
}

fn instance(id: &str, field: Field, seed: u64, k: u64) -> Result<VerificationReport> {
    let mut rng = instance_rng(seed, k);
    let ideals: Vec<Ideal> = match id {
        "serre" => {
            let (i, j) = serre_pair(field, &mut rng, k as usize)?;
            vec![i, j]
        }
        "dubreil_base" => vec![binary_ideal(field, &mut rng)?],
        "migliore" => vec![subscheme(field, &mut rng, Some(4))?],
        _ => vec![subscheme(field, &mut rng, None)?],
    };
    verify(id, &ideals, rng.gen())
}

/// Runs `count` seeded instances of a theorem in parallel.
pub fn fuzz(id: &str, count: u64, seed: u64, field: Field) -> Result<FuzzSummary> {
    if !THEOREM_IDS.contains(&id) {
        return Err(Error::UnknownTheorem(id.to_string()));
    }
    let results: Vec<(u64, Result<VerificationReport>)> =
        (0..count).into_par_iter().map(|k| (k, instance(id, field, seed, k))).collect();
    let mut s = FuzzSummary {
        theorem_id: id.to_string(),
        count,
        seed,
        prime: field.characteristic(),
        holds: 0,
        violated: 0,
        not_applicable: 0,
        errors: Vec::new(),
        reports: Vec::new(),
    };
    for (k, r) in results {
        match r {
            Ok(rep) => {
                match rep.verdict {
                    Verdict::Holds => s.holds += 1,
                    Verdict::Violated => s.violated += 1,
                    Verdict::NotApplicable => s.not_applicable += 1,
                }
                s.reports.push(rep);
            }
            Err(e) => s.errors.push(InstanceError { instance: k, message: e.to_string() }),
        }
    }
    Ok(s)
}
