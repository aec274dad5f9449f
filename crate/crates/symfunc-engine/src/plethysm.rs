//! Plethysm f[g], computed in the p basis via the substitution rule
//! p_k[g] = g with every p_m replaced by p_{km}, extended to all of f as a
//! ring morphism in f. Results for nontrivial inputs are cached on disk,
//! keyed by a hash of the canonical serialization of (f, g); entries are
//! re-verified with a degree check on load and discarded if inconsistent.

use crate::basis::{Basis, Expansion};
use crate::{SymFn, SymFnError};
use partition_core::Partition;
use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;

/// f[g]. For homogeneous f of degree m and homogeneous g of degree d, the
/// result is homogeneous of degree m·d; the degree cap is checked against
/// that product before any work happens.
pub fn plethysm(f: &SymFn, g: &SymFn) -> Result<SymFn, SymFnError> {
    if let (Some(mf), Some(mg)) = (f.max_degree(), g.max_degree()) {
        crate::ensure_degree(mf.saturating_mul(mg))?;
    }
    if f.is_zero() {
        return Ok(SymFn::zero());
    }
    // Trivial shapes skip the cache: constants, and g = 0 where only the
    // constant term of f survives.
    let f_const = f.max_degree() == Some(0) || f.is_zero();
    let g_small = g.max_degree().unwrap_or(0) == 0;
    if f_const || g_small {
        return Ok(compute(f, g));
    }
    let (key, f_json, g_json) = cache_key(f, g);
    if let Some(hit) = cache_load(key, &f_json, &g_json, f, g) {
        return Ok(hit);
    }
    let result = compute(f, g);
    cache_store(key, &f_json, &g_json, &result);
    Ok(result)
}

fn compute(f: &SymFn, g: &SymFn) -> SymFn {
    let mut powers: HashMap<u32, SymFn> = HashMap::new();
    let mut out = SymFn::zero();
    for (lambda, coeff) in f.terms() {
        let mut term = SymFn::constant(coeff.clone());
        for &k in lambda.parts() {
            let pk = powers.entry(k).or_insert_with(|| p_k_of(g, k));
            term = term.multiply_truncated(pk, u32::MAX);
        }
        out = &out + &term;
    }
    out
}

/// p_k[g]: every part of every index partition is scaled by k.
fn p_k_of(g: &SymFn, k: u32) -> SymFn {
    let terms = g.terms().map(|(l, c)| {
        let scaled: Vec<u32> = l.parts().iter().map(|&p| p * k).collect();
        (Partition::new(scaled).expect("scaling preserves order"), c.clone())
    });
    let mut out = SymFn::zero();
    for (l, c) in terms {
        out.add_term(l, c);
    }
    out
}

/// Cache directory: $CONFSYM_CACHE_DIR if set, otherwise a fixed name under
/// the system temp dir.
pub fn plethysm_cache_dir() -> PathBuf {
    match std::env::var_os("CONFSYM_CACHE_DIR") {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => std::env::temp_dir().join("confsym-plethysm-cache"),
    }
}

/// Removes every cached plethysm entry. Returns how many files went away.
pub fn clear_plethysm_cache() -> std::io::Result<usize> {
    let dir = plethysm_cache_dir();
    let mut removed = 0;
    match fs::read_dir(&dir) {
        Ok(entries) => {
            for entry in entries.flatten() {
                if entry.path().extension().is_some_and(|e| e == "json") {
                    fs::remove_file(entry.path())?;
                    removed += 1;
                }
            }
            Ok(removed)
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(0),
        Err(e) => Err(e),
    }
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn cache_key(f: &SymFn, g: &SymFn) -> (u64, String, String) {
    let f_json = f.convert(Basis::P).to_json();
    let g_json = g.convert(Basis::P).to_json();
    let key = fnv1a64(format!("{f_json}|{g_json}").as_bytes());
    (key, f_json, g_json)
}

#[derive(serde::Serialize, serde::Deserialize)]
struct CacheEntry {
    f: String,
    g: String,
    result: String,
}

fn cache_path(key: u64) -> PathBuf {
    plethysm_cache_dir().join(format!("{key:016x}.json"))
}

fn cache_load(key: u64, f_json: &str, g_json: &str, f: &SymFn, g: &SymFn) -> Option<SymFn> {
    let text = fs::read_to_string(cache_path(key)).ok()?;
    let entry: CacheEntry = serde_json::from_str(&text).ok()?;
    // Hash collision or stale schema: the stored operands must match ours.
    if entry.f != f_json || entry.g != g_json {
        return None;
    }
    let result = Expansion::parse_to_symfn(&entry.result).ok()?;
    if !degrees_consistent(f, g, &result) {
        // Corrupt entry; drop it so it gets rewritten.
        let _ = fs::remove_file(cache_path(key));
        return None;
    }
    Some(result)
}

/// The load-time corruption check: plethysm multiplies degrees, so the
/// result's degree range must sit inside the product range of the operands;
/// for homogeneous operands equality is forced.
fn degrees_consistent(f: &SymFn, g: &SymFn, result: &SymFn) -> bool {
    let (Some(mf), Some(mg)) = (f.max_degree(), g.max_degree()) else {
        return result.is_zero();
    };
    if f.is_homogeneous() && g.is_homogeneous() {
        return result.is_zero() || (result.max_degree() == Some(mf * mg) && result.is_homogeneous());
    }
    result.max_degree().unwrap_or(0) <= mf * mg
}

fn cache_store(key: u64, f_json: &str, g_json: &str, result: &SymFn) {
    let dir = plethysm_cache_dir();
    if fs::create_dir_all(&dir).is_err() {
        return;
    }
    let entry = CacheEntry {
        f: f_json.to_string(),
        g: g_json.to_string(),
        result: result.convert(Basis::P).to_json(),
    };
    let Ok(body) = serde_json::to_string(&entry) else { return };
    let tmp = dir.join(format!("{key:016x}.tmp.{}", std::process::id()));
    // Best effort: a failed write only costs a recomputation next time.
    if fs::write(&tmp, body).is_ok() {
        let _ = fs::rename(&tmp, cache_path(key));
    }
}
