//! Graded Betti tables of squarefree monomial ideals and the ring-theoretic
//! properties read off from them.
//!
//! Tables always hold the numbers of the ideal `I`, so `β_{i,j}(I) = β_{i+1,j}(S/I)`.

mod hochster;
mod koszul;
mod properties;

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::homology::FieldSpec;

pub use self::hochster::hochster_betti;
pub use self::koszul::{koszul_betti, koszul_multigraded_betti, upper_koszul_faces};
pub use self::properties::{has_linear_resolution, ring_properties, PropertyReport};
pub(crate) use self::properties::properties_from_table;

#[derive(Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(n: usize, field: FieldSpec) -> Self {
        BettiTable {
            n,
            field,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a table from `((i, j), β)` pairs; zero entries are dropped.
    pub fn from_entries<I>(n: usize, field: FieldSpec, entries: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), u64)>,
    {
        let mut t = BettiTable::new(n, field);
        for ((i, j), b) in entries {
            t.add(i, j, b);
        }
        t
    }

    pub(crate) fn add(&mut self, i: usize, j: usize, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Projective dimension of `I`: the largest `i` with a nonzero entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Castelnuovo–Mumford regularity of `I`: the largest `j - i`.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Total Betti number `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.row(i).map(|(_, b)| b).sum()
    }

    /// Nonzero `(j, β_{i,j})` at homological step `i`.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .map(|(&(_, j), &b)| (j, b))
    }

    /// Same numbers, ignoring the field tag.
    pub fn same_numbers(&self, other: &BettiTable) -> bool {
        self.n == other.n && self.entries == other.entries
    }

    /// Staircase layout: columns are `i`, rows are `j - i`, zeros shown as `.`.
    pub fn render_text(&self) -> String {
        let cols = if self.is_empty() { 0 } else { self.pd() + 1 };
        let lo = self.entries.keys().map(|&(i, j)| j - i).min().unwrap_or(0);
        let hi = self.reg();
        let mut cells: Vec<Vec<String>> = Vec::new();
        cells.push((0..cols).map(|i| i.to_string()).collect());
        cells.push((0..cols).map(|i| self.total(i).to_string()).collect());
        for r in lo..=hi {
            cells.push(
                (0..cols)
                    .map(|i| match self.get(i, i + r) {
                        0 => ".".to_string(),
                        b => b.to_string(),
                    })
                    .collect(),
            );
        }
        let width: Vec<usize> = (0..cols)
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(1))
            .collect();
        let labels: Vec<String> = ["".to_string(), "total:".to_string()]
            .into_iter()
            .chain((lo..=hi).map(|r| format!("{r}:")))
            .collect();
        let label_w = labels.iter().map(|l| l.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (label, row) in labels.iter().zip(&cells) {
            let _ = write!(out, "{label:>label_w$}");
            for (c, cell) in row.iter().enumerate() {
                let _ = write!(out, " {cell:>w$}", w = width[c]);
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct BettiTableRepr {
    n: usize,
    field: FieldSpec,
    entries: BTreeMap<String, u64>,
    pd: usize,
    reg: usize,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BettiTableRepr {
            n: self.n,
            field: self.field,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &b)| (format!("{i},{j}"), b))
                .collect(),
            pd: self.pd(),
            reg: self.reg(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = BettiTableRepr::deserialize(d)?;
        let mut entries = BTreeMap::new();
        for (key, b) in repr.entries {
            let (i, j) = key
                .split_once(',')
                .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)))
                .ok_or_else(|| D::Error::custom(format!("bad Betti index {key:?}")))?;
            if j < i {
                return Err(D::Error::custom(format!("Betti index {key:?} has j < i")));
            }
            if b > 0 {
                entries.insert((i, j), b);
            }
        }
        let t = BettiTable {
            n: repr.n,
            field: repr.field,
            entries,
        };
        if t.pd() != repr.pd || t.reg() != repr.reg {
            return Err(D::Error::custom("pd/reg summary disagrees with the entries"));
        }
        Ok(t)
    }
}

/// The only positions a complementary edge ideal on `[n]` can occupy:
/// `(0,n-2)`, `(1,n-1)`, `(1,n)` and `(2,n)`.
pub fn betti_positions_check(t: &BettiTable) -> bool {
    let n = t.n();
    let allowed = [(0, n.wrapping_sub(2)), (1, n.wrapping_sub(1)), (1, n), (2, n)];
    t.entries().all(|(pos, _)| allowed.contains(&pos))
}
