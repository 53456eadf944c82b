use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Graded Betti numbers `β_{i,j}`; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    /// `modules[i]` lists the twists of `F_i`.
    pub fn from_modules(modules: Vec<Vec<i64>>) -> Self {
        let mut entries = BTreeMap::new();
        for (i, tw) in modules.into_iter().enumerate() {
            for j in tw {
                *entries.entry((i, j)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, i64), u64)>) -> Self {
        BettiTable { entries: entries.into_iter().filter(|e| e.1 > 0).collect() }
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i64), u64> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, v)| v).sum()
    }

    /// `max (j − i)`; `None` for the empty table (zero module).
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j - i as i64).max()
    }

    /// Largest `j` with `β_{1,j} ≠ 0`.
    pub fn max_generator_degree(&self) -> Option<i64> {
        self.entries.keys().filter(|k| k.0 == 1).map(|k| k.1).max()
    }

    /// Triangular layout: column `i`, row `j − i`, plus a total row.
    pub fn to_text(&self) -> String {
        let Some(pd) = self.projective_dimension() else {
            return "0\n".to_string();
        };
        let rows: Vec<i64> = {
            let lo = self.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap();
            let hi = self.regularity().unwrap();
            (lo..=hi).collect()
        };
        let cell = |i: usize, r: i64| match self.get(i, r + i as i64) {
            0 => ".".to_string(),
            v => v.to_string(),
        };
        let widths: Vec<usize> = (0..=pd)
            .map(|i| {
                let mut w = i.to_string().len().max(self.total(i).to_string().len());
                for &r in &rows {
                    w = w.max(cell(i, r).len());
                }
                w
            })
            .collect();
        let label_w = rows.iter().map(|r| format!("{r}:").len()).max().unwrap_or(0).max("total:".len());
        let mut out = String::new();
        let mut line = |label: String, cells: Vec<String>| {
            let mut l = format!("{label:>label_w$}");
            for (c, w) in cells.iter().zip(&widths) {
                l.push_str(&format!(" {c:>w$}"));
            }
            out.push_str(l.trim_end());
            out.push('\n');
        };
        line(String::new(), (0..=pd).map(|i| i.to_string()).collect());
        line("total:".into(), (0..=pd).map(|i| self.total(i).to_string()).collect());
        for &r in &rows {
            line(format!("{r}:"), (0..=pd).map(|i| cell(i, r)).collect());
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(self.entries.iter().map(|(&(i, j), v)| (format!("{i},{j}"), v)))
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, u64>::deserialize(d)?;
        let mut entries = BTreeMap::new();
        for (k, v) in raw {
            let (i, j) = k.split_once(',').ok_or_else(|| D::Error::custom(format!("bad key `{k}`")))?;
            let i = i.trim().parse().map_err(D::Error::custom)?;
            let j = j.trim().parse().map_err(D::Error::custom)?;
            if v > 0 {
                entries.insert((i, j), v);
            }
        }
        Ok(BettiTable { entries })
    }
}
