//! On-disk cache of transition matrices: the exported CSV plus a sidecar
//! digest recording `n`, a hash of the canonical web order and a hash of the
//! CSV bytes. A cached matrix is reused only when all three match.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::json;
use sha2::{Digest, Sha256};
use webbasis::transition::TransitionMatrix;
use webbasis::{Int, WebBasis};

fn sha256(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Hash of the canonical web labels, one per line.
pub fn order_digest(basis: &WebBasis) -> String {
    let mut text = String::new();
    for w in basis.webs() {
        text.push_str(&w.to_string());
        text.push('\n');
    }
    sha256(text.as_bytes())
}

pub fn matrix_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("transition-n{n}.csv"))
}

pub fn digest_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("transition-n{n}.digest.json"))
}

/// The cached matrix, if present and consistent with `basis`.
pub fn load(dir: &Path, basis: &WebBasis) -> Option<TransitionMatrix<Int>> {
    let n = basis.n();
    let csv = fs::read_to_string(matrix_path(dir, n)).ok()?;
    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(digest_path(dir, n)).ok()?).ok()?;
    let fresh = sidecar["n"].as_u64() == Some(n as u64)
        && sidecar["order_sha256"].as_str() == Some(order_digest(basis).as_str())
        && sidecar["content_sha256"].as_str() == Some(sha256(csv.as_bytes()).as_str());
    if !fresh {
        return None;
    }
    let m = TransitionMatrix::from_csv(n, &csv).ok()?;
    let labels: Vec<String> = basis.webs().iter().map(ToString::to_string).collect();
    (m.labels == labels).then_some(m)
}

pub fn store(dir: &Path, basis: &WebBasis, m: &TransitionMatrix<Int>) -> std::io::Result<()> {
    let n = basis.n();
    fs::create_dir_all(dir)?;
    let csv = m.to_csv();
    let sidecar = json!({
        "n": n,
        "order_sha256": order_digest(basis),
        "content_sha256": sha256(csv.as_bytes()),
    });
    fs::write(matrix_path(dir, n), &csv)?;
    fs::write(
        digest_path(dir, n),
        serde_json::to_string_pretty(&sidecar)? + "\n",
    )
}
