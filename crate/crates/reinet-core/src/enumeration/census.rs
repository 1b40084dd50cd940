//! ODE-class census of the connected valence-at-most-2 universe, bucketed
//! like the published class tables.
//!
//! Counting convention. The tables treat node labels as fixed for classes
//! without autoregulation (a class and its image under exchanging the two E
//! nodes are listed separately), but identify the two E nodes for classes
//! with autoregulation (the loop always sits on node 1). The table key of a
//! labelled vector is therefore its normal form, minimised over the E-node
//! exchange when that normal form has a loop.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::published::Table;
use super::{valence_le2_vectors, MultiplicityVector};
use crate::equiv::classify;
use crate::network::ReiNetwork;

/// Autoregulation and arrow-type usage of a class representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Category {
    pub autoregulation: bool,
    pub both_types: bool,
}

impl Category {
    pub fn of(v: MultiplicityVector) -> Self {
        Category { autoregulation: v.has_autoregulation(), both_types: v.uses_both_types() }
    }

    pub fn table(self) -> Table {
        match (self.autoregulation, self.both_types) {
            (false, true) => Table::T3,
            (false, false) => Table::T4,
            (true, true) => Table::T5,
            (true, false) => Table::T6,
        }
    }

    pub fn label(self) -> &'static str {
        match (self.autoregulation, self.both_types) {
            (false, true) => "no-auto/both",
            (false, false) => "no-auto/one",
            (true, true) => "auto/both",
            (true, false) => "auto/one",
        }
    }
}

/// Published bucket sizes, in table order 3, 4, 5, 6.
pub const PUBLISHED_COUNTS: [usize; 4] = [92, 38, 62, 35];

/// Class key under the table counting convention; also the class's
/// minimal representative.
pub fn table_class_key(v: MultiplicityVector) -> MultiplicityVector {
    let nf = v.normal_form();
    if nf.has_autoregulation() {
        nf.min(v.swap_e().normal_form())
    } else {
        nf
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusClass {
    /// Minimal representative; doubles as the class key.
    pub key: MultiplicityVector,
    pub category: Category,
    pub members: Vec<MultiplicityVector>,
}

/// Outcome of checking one table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowAudit {
    pub table: Table,
    /// 1-based row number within the table.
    pub row: usize,
    pub stated: usize,
    /// Distinct classes the row's description expands to.
    pub found: usize,
    /// Every expanded vector is connected, within the valence bound, in
    /// the table's category, and already minimal.
    pub well_formed: bool,
}

impl RowAudit {
    pub fn ok(&self) -> bool {
        self.stated == self.found && self.well_formed
    }
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    /// Sorted by key.
    pub classes: Vec<CensusClass>,
    /// Class counts in table order 3, 4, 5, 6.
    pub counts: [usize; 4],
    pub rows: Vec<RowAudit>,
    /// Census classes that no table row describes.
    pub unlisted: Vec<MultiplicityVector>,
    /// Classes described by a row but absent from the census.
    pub listed_not_found: Vec<MultiplicityVector>,
    /// Counts when classes are also identified under every relabeling
    /// (the isomorphism-invariant class key), table order.
    pub relabeling_invariant_counts: [usize; 4],
}

impl CensusReport {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn matches_published(&self) -> bool {
        self.counts == PUBLISHED_COUNTS
    }
}

fn bucket(t: Table) -> usize {
    t.number() as usize - 3
}

/// Classifies the labelled connected valence-at-most-2 universe and audits
/// every table row.
pub fn reproduce_tables() -> CensusReport {
    let mut groups: BTreeMap<MultiplicityVector, Vec<MultiplicityVector>> = BTreeMap::new();
    for v in valence_le2_vectors() {
        groups.entry(table_class_key(v)).or_default().push(v);
    }
    let classes: Vec<CensusClass> = groups
        .into_iter()
        .map(|(key, members)| CensusClass { key, category: Category::of(key), members })
        .collect();
    let mut counts = [0; 4];
    for c in &classes {
        counts[bucket(c.category.table())] += 1;
    }

    let mut rows = Vec::new();
    let mut listed = BTreeSet::new();
    for t in Table::ALL {
        for (k, r) in t.rows().iter().enumerate() {
            let vs = r.expand();
            let keys: BTreeSet<_> = vs.iter().map(|&v| table_class_key(v)).collect();
            let well_formed = vs.iter().all(|&v| {
                v.is_connected()
                    && v.valences().iter().all(|&d| d <= 2)
                    && Category::of(v).table() == t
                    && v.normal_form() == v
            });
            rows.push(RowAudit { table: t, row: k + 1, stated: r.stated, found: keys.len(), well_formed });
            listed.extend(keys);
        }
    }
    let census: BTreeSet<_> = classes.iter().map(|c| c.key).collect();
    let unlisted = census.difference(&listed).copied().collect();
    let listed_not_found = listed.difference(&census).copied().collect();

    let nets: Vec<ReiNetwork> = super::enumerate_valence_le2();
    let mut relabeling_invariant_counts = [0; 4];
    for class in classify(&nets).expect("uniform size").values() {
        let rep = MultiplicityVector::from_network(&class.minimal.net).expect("E, E, I layout");
        relabeling_invariant_counts[bucket(Category::of(rep).table())] += 1;
    }

    CensusReport { classes, counts, rows, unlisted, listed_not_found, relabeling_invariant_counts }
}
