//! Append-only run log for search commands.
//!
//! One line per search, space-separated fields in fixed order:
//!
//! ```text
//! <unix-seconds> <percent-encoded-command> digest=<hex> k=<k> s=<s>
//!     flags=<comma-list-or-none> outcome=<status> nodes=<n> wall_ms=<t>
//! ```
//!
//! The command string is percent-encoded (bytes outside
//! `[A-Za-z0-9._~/=,\[\]-]` become `%XX`); no other escaping.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Result;

pub struct RunRecord {
    pub command: String,
    pub digest: u64,
    pub k: u32,
    pub s: u32,
    pub flags: Vec<String>,
    pub outcome: String,
    pub nodes: u64,
    pub wall_ms: u128,
}

/// FNV-1a digest of the (canonicalized) input bytes.
pub fn digest(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn percent_encode(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for b in s.bytes() {
        let keep = b.is_ascii_alphanumeric()
            || matches!(b, b'.' | b'_' | b'~' | b'/' | b'=' | b',' | b'[' | b']' | b'-');
        if keep {
            out.push(b as char);
        } else {
            out.push_str(&format!("%{b:02X}"));
        }
    }
    out
}

pub fn append(path: &Path, record: &RunRecord) -> Result<()> {
    let ts = SystemTime::now().duration_since(UNIX_EPOCH)?.as_secs();
    let flags = if record.flags.is_empty() {
        "none".to_string()
    } else {
        record.flags.join(",")
    };
    let line = format!(
        "{ts} {} digest={:016x} k={} s={} flags={flags} outcome={} nodes={} wall_ms={}\n",
        percent_encode(&record.command),
        record.digest,
        record.k,
        record.s,
        record.outcome,
        record.nodes,
        record.wall_ms,
    );
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    file.write_all(line.as_bytes())?;
    Ok(())
}
