//! On-disk cache of eliminated quotients, keyed by arity.
//!
//! Enabled by the `LIE2_CACHE_DIR` environment variable. Files carry a
//! schema tag and a fingerprint of the monomial order; anything that does not
//! match is ignored and rebuilt.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::quotient::{build_quotient, enumerate_monomials, Block, QuotientModel};
use crate::linalg::{Echelon, SparseVec};
use crate::rings::{parse_rational, rational_to_string};
use crate::Result;

pub const CACHE_ENV: &str = "LIE2_CACHE_DIR";
const SCHEMA: &str = "lie2-quotient/1";

#[derive(Serialize, Deserialize)]
struct CachedBlock {
    t1: usize,
    t2: usize,
    columns: usize,
    first: String,
    last: String,
    relations: usize,
    rows: Vec<Vec<(usize, String)>>,
}

#[derive(Serialize, Deserialize)]
struct CachedModel {
    schema: String,
    n: usize,
    blocks: Vec<CachedBlock>,
}

fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("quotient-{n}.json"))
}

fn encode(model: &QuotientModel) -> CachedModel {
    CachedModel {
        schema: SCHEMA.into(),
        n: model.n(),
        blocks: model
            .blocks()
            .iter()
            .map(|b| CachedBlock {
                t1: b.t1,
                t2: b.t2,
                columns: b.monomials().len(),
                first: b.monomials().first().map(|m| m.to_string()).unwrap_or_default(),
                last: b.monomials().last().map(|m| m.to_string()).unwrap_or_default(),
                relations: b.relation_count(),
                rows: b
                    .echelon()
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(|(c, x)| (*c, rational_to_string(x))).collect())
                    .collect(),
            })
            .collect(),
    }
}

fn decode(cached: CachedModel, n: usize) -> Option<QuotientModel> {
    if cached.schema != SCHEMA || cached.n != n {
        return None;
    }
    let monomials = enumerate_monomials(n).ok()?;
    let mut by_t1 = vec![Vec::new(); n];
    for m in monomials {
        by_t1[m.bidegree().0].push(m);
    }
    if cached.blocks.len() != n {
        return None;
    }
    let mut blocks = Vec::with_capacity(n);
    for (cb, ms) in cached.blocks.into_iter().zip(by_t1) {
        let fingerprint_ok = cb.columns == ms.len()
            && cb.first == ms.first().map(|m| m.to_string()).unwrap_or_default()
            && cb.last == ms.last().map(|m| m.to_string()).unwrap_or_default();
        if !fingerprint_ok {
            return None;
        }
        let rows: Option<Vec<SparseVec>> = cb
            .rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|(c, x)| parse_rational(&x).ok().map(|x| (c, x)))
                    .collect()
            })
            .collect();
        let echelon = Echelon::from_reduced_rows(ms.len(), rows?);
        blocks.push(Block::from_parts(cb.t1, cb.t2, ms, echelon, cb.relations));
    }
    Some(QuotientModel::from_blocks(n, blocks))
}

/// Loads the quotient of arity `n` from `dir`, building and storing it when
/// absent or stale.
pub fn load_or_build_in(dir: &Path, n: usize) -> Result<QuotientModel> {
    let path = cache_path(dir, n);
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(cached) = serde_json::from_str::<CachedModel>(&text) {
            if let Some(model) = decode(cached, n) {
                return Ok(model);
            }
        }
    }
    let model = build_quotient(n)?;
    std::fs::create_dir_all(dir)?;
    std::fs::write(&path, serde_json::to_string(&encode(&model))?)?;
    Ok(model)
}

/// [`build_quotient`], going through the cache directory when
/// `LIE2_CACHE_DIR` is set.
pub fn load_or_build(n: usize) -> Result<QuotientModel> {
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => load_or_build_in(Path::new(&dir), n),
        _ => build_quotient(n),
    }
}
