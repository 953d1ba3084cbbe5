//! Bundled polynomial data files, checked against `fixtures/SHA256SUMS`.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::idealops::Ideal;
use crate::ring::RingRef;

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name, ".txt")))),*]
    };
}

const FILES: &[(&str, &str)] = bundle!(
    "delpezzo",
    "dp-a-cubic",
    "dp-a-plane",
    "dp-b-cubic",
    "dp-b-plane",
    "dp-c-cubic",
    "dp-c-plane",
    "dp-d-cubic",
    "dp-d-plane",
    "dp-e-cubic",
    "dp-e-plane",
    "skew-planes-cubic",
    "skew-planes-p1",
    "skew-planes-p2",
);

const SUMS: &str = include_str!("../fixtures/SHA256SUMS");

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

/// Contents of a bundled file after checksum verification.
pub fn text(name: &str) -> Result<&'static str> {
    let (_, body) = FILES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let file = format!("{name}.txt");
    let expected = SUMS
        .lines()
        .filter_map(|l| l.split_once(char::is_whitespace))
        .find(|(_, f)| f.trim() == file)
        .map(|(h, _)| h)
        .ok_or_else(|| Error::Fixture(format!("no checksum for {file}")))?;
    let actual = hex(&Sha256::digest(body.as_bytes()));
    if actual != expected {
        return Err(Error::Fixture(format!("checksum mismatch for {file}")));
    }
    Ok(body)
}

pub fn ideal(name: &str, ring: &RingRef) -> Result<Ideal> {
    Ideal::parse(ring, text(name)?)
}
