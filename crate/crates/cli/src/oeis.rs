//! b-file retrieval: cache directory first, then the network (or the
//! bundled snapshots when offline). Downloads are cached verbatim.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::time::Duration;

use anyhow::{Context, Result};
use fission::bfile::{parse_bfile, OeisId};

const BUNDLED: [(&str, &str); 3] = [
    ("A000041", include_str!("../data/b000041.txt")),
    ("A000070", include_str!("../data/b000070.txt")),
    ("A001970", include_str!("../data/b001970.txt")),
];

/// No usable copy of the requested sequence could be found.
#[derive(Debug)]
pub struct NoData(pub String);

impl fmt::Display for NoData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for NoData {}

pub struct Source {
    pub base_url: String,
    pub cache_dir: PathBuf,
    pub offline: bool,
    pub trace: bool,
}

pub fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(dir).join("fission");
    }
    match std::env::var_os("HOME") {
        Some(home) => PathBuf::from(home).join(".cache").join("fission"),
        None => PathBuf::from(".fission-cache"),
    }
}

pub fn bundled(id: &OeisId) -> Option<&'static str> {
    BUNDLED.iter().find(|(name, _)| *name == id.as_str()).map(|(_, text)| *text)
}

/// Returns the b-file text and where it came from.
pub fn load(id: &OeisId, source: &Source) -> Result<(String, &'static str)> {
    let cached = source.cache_dir.join(id.bfile_name());
    if let Ok(text) = fs::read_to_string(&cached) {
        if source.trace {
            eprintln!("trace: cache hit {}", cached.display());
        }
        return Ok((text, "cache"));
    }
    if source.offline {
        if let Some(text) = bundled(id) {
            if source.trace {
                eprintln!("trace: bundled snapshot {id}");
            }
            return Ok((text.to_string(), "bundled snapshot"));
        }
        return Err(NoData(format!("no cached data for {id} (offline, no bundled snapshot)")).into());
    }
    let url = format!("{}/{}/{}", source.base_url.trim_end_matches('/'), id, id.bfile_name());
    if source.trace {
        eprintln!("trace: GET {url}");
    }
    let text = fetch(&url).map_err(|e| NoData(format!("no cached data for {id}; download failed: {e:#}")))?;
    parse_bfile(&text).with_context(|| format!("{url} did not return a b-file"))?;
    fs::create_dir_all(&source.cache_dir)
        .and_then(|_| fs::write(&cached, &text))
        .with_context(|| format!("caching to {}", cached.display()))?;
    Ok((text, "network"))
}

fn fetch(url: &str) -> Result<String> {
    let agent: ureq::Agent = ureq::Agent::config_builder().timeout_global(Some(Duration::from_secs(30))).build().into();
    let mut response = agent.get(url).call()?;
    Ok(response.body_mut().read_to_string()?)
}
