//! `key = value` configuration files. Keys use the long flag names; a flag
//! given on the command line wins over the file, and the file wins over
//! the built-in defaults.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};

const KEYS: [&str; 11] = [
    "charge",
    "charges",
    "max-boxes",
    "window",
    "l",
    "preset",
    "ri-mode",
    "workers",
    "budget",
    "suite",
    "no-meta",
];

#[derive(Debug, Default)]
pub struct FileSettings {
    values: BTreeMap<String, String>,
}

impl FileSettings {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in config {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("line {}: expected key = value", n + 1))?;
            let k = k.trim().replace('_', "-");
            if !KEYS.contains(&k.as_str()) {
                bail!("line {}: unknown key {k:?}", n + 1);
            }
            values.insert(k, v.trim().to_string());
        }
        Ok(FileSettings { values })
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        self.values
            .get(key)
            .map(|v| v.parse::<T>().map_err(|e| anyhow!("{key} = {v}: {e}")))
            .transpose()
    }

    pub fn get_list(&self, key: &str) -> Result<Option<Vec<i64>>> {
        self.values
            .get(key)
            .map(|v| parse_list(v).map_err(|e| anyhow!("{key} = {v}: {e}")))
            .transpose()
    }

    pub fn flag(&self, key: &str) -> Result<bool> {
        Ok(self.get::<bool>(key)?.unwrap_or(false))
    }
}

pub fn parse_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| anyhow!("{x:?}: {e}")))
        .collect()
}
