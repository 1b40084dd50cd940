//! Published catalogs, transcribed verbatim so generators can be checked
//! against them.
//!
//! Each table row reads "each parameter in `ranged` takes values 1 or 2,
//! each parameter in `fixed` equals 1, all others are 0", optionally
//! excluding the assignment where every ranged parameter equals 2. `stated`
//! is the class count printed next to the row.

use alloc::vec::Vec;

use super::{MultiplicityVector, Param, SupportPattern};

/// Connected support patterns as listed, in listing order.
pub const TABLE1: [&str; 51] = [
    "b1 b2", "b1 b2 b3", "b1 b2 b3 b4", "b1 b2 b3 g1", "b1 b2 b3 g1 g2",
    "b1 b2 b3 g2", "b1 b2 b3 b4 g1", "b1 b2 b3 b4 g1 g2", "b1 b2 b3 b4 g2", "b1 b2 b4",
    "b1 b2 b4 g1", "b1 b2 b4 g1 g2", "b1 b2 b4 g2", "b1 b2 g1", "b1 b2 g1 g2",
    "b1 b2 g2", "b1 b3", "b1 b3 b4", "b1 b3 b4 g1", "b1 b3 b4 g1 g2",
    "b1 b3 b4 g2", "b1 b3 g1", "b1 b3 g1 g2", "b1 b3 g2", "b1 b4",
    "b1 b4 g1", "b1 b4 g1 g2", "b1 b4 g2", "b1 g1 g2", "b1 g2",
    "b2 b3 b4", "b2 b3 b4 g1", "b2 b3 b4 g1 g2", "b2 b3 b4 g2", "b2 b4",
    "b2 b4 g1", "b2 b4 g1 g2", "b2 b4 g2", "b2 g1", "b2 g1 g2",
    "b2 g2", "b3 b4", "b3 b4 g1", "b3 b4 g1 g2", "b3 b4 g2",
    "b3 g1", "b3 g1 g2", "b3 g2", "b4 g1", "b4 g1 g2",
    "g1 g2",
];

fn parse_params(s: &str) -> Vec<Param> {
    s.split_whitespace().map(|t| Param::parse(t).expect("fixture parameter name")).collect()
}

/// The published connected support patterns.
pub fn table1_supports() -> Vec<SupportPattern> {
    TABLE1.iter().map(|s| SupportPattern::from_params(&parse_params(s))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub ranged: &'static str,
    pub fixed: &'static str,
    pub exclude_all_two: bool,
    pub stated: usize,
}

const fn row(ranged: &'static str, fixed: &'static str, exclude_all_two: bool, stated: usize) -> TableRow {
    TableRow { ranged, fixed, exclude_all_two, stated }
}

impl TableRow {
    pub fn ranged_params(&self) -> Vec<Param> {
        parse_params(self.ranged)
    }

    pub fn fixed_params(&self) -> Vec<Param> {
        parse_params(self.fixed)
    }

    /// Every vector the row describes.
    pub fn expand(&self) -> Vec<MultiplicityVector> {
        let ranged = self.ranged_params();
        let mut base = MultiplicityVector::default();
        for p in self.fixed_params() {
            base.set(p, 1);
        }
        let mut out = Vec::new();
        for bits in 0u32..(1 << ranged.len()) {
            if self.exclude_all_two && bits + 1 == 1 << ranged.len() {
                continue;
            }
            let mut v = base;
            for (k, &p) in ranged.iter().enumerate() {
                v.set(p, 1 + ((bits >> (ranged.len() - 1 - k)) & 1));
            }
            out.push(v);
        }
        out
    }
}

/// Which of the four class tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Table {
    T3,
    T4,
    T5,
    T6,
}

impl Table {
    pub const ALL: [Table; 4] = [Table::T3, Table::T4, Table::T5, Table::T6];

    pub fn rows(self) -> &'static [TableRow] {
        match self {
            Table::T3 => TABLE3,
            Table::T4 => TABLE4,
            Table::T5 => TABLE5,
            Table::T6 => TABLE6,
        }
    }

    /// Class count from the table caption.
    pub fn stated_total(self) -> usize {
        match self {
            Table::T3 => 92,
            Table::T4 => 38,
            Table::T5 => 62,
            Table::T6 => 35,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Table::T3 => 3,
            Table::T4 => 4,
            Table::T5 => 5,
            Table::T6 => 6,
        }
    }
}

/// Classes without autoregulation using both arrow types; 92 stated.
pub const TABLE3: &[TableRow] = &[
    row("b1 b2", "b3 g1", false, 4),
    row("b1", "b2 b3 g1 g2", false, 2),
    row("b1 b3", "b2 g2", false, 4),
    row("b2", "b1 b3 b4 g1", false, 2),
    row("b3", "b1 b2 b4 g2", false, 2),
    row("", "b1 b2 b3 b4 g1 g2", false, 1),
    row("b2", "b1 b4 g1", false, 2),
    row("", "b1 b2 b4 g2", false, 1),
    row("g1", "b1 b2 b4 g2", false, 2),
    row("b1 b2", "g1", true, 3),
    row("b1 g1", "b2 g2", false, 4),
    row("b1", "b2 g2", false, 2),
    row("", "b1 b3 b4 g1", false, 1),
    row("g2", "b1 b3 b4 g1", false, 2),
    row("b3", "b1 b4 g2", false, 2),
    row("b1", "b3 g1", false, 2),
    row("b1 g2", "b3 g1", false, 4),
    row("b1 b3", "g2", true, 3),
    row("", "b1 b4 g1", false, 1),
    row("g1 g2", "b1 b4", true, 3),
    row("", "b1 b4 g2", false, 1),
    row("", "b1 g2", false, 1),
    row("g1 g2", "b1", true, 3),
    row("b2 b4", "b3 g1", false, 4),
    row("b4", "b2 b3 g1 g2", false, 2),
    row("b3 b4", "b2 g2", false, 4),
    row("b2 b4", "g1", true, 3),
    row("b4 g1", "b2 g2", false, 4),
    row("b4", "b2 g2", false, 2),
    row("", "b2 g1", false, 1),
    row("g1", "b2 g2", false, 2),
    row("", "b2 g2", false, 1),
    row("b4", "b3 g1", false, 2),
    row("b4 g2", "b3 g1", false, 4),
    row("b3 b4", "g2", true, 3),
    row("", "b3 g1", false, 1),
    row("g2", "b3 g1", false, 2),
    row("", "b3 g2", false, 1),
    row("", "b4 g1", false, 1),
    row("g1 g2", "b4", true, 3),
];

/// Classes without autoregulation using one arrow type; 38 stated.
pub const TABLE4: &[TableRow] = &[
    row("b1 b2", "", true, 3),
    row("b1 b2 b3", "", true, 7),
    row("b2", "b1 b4", false, 2),
    row("b2 b3", "b1 b4", false, 4),
    row("b2 b3 b4", "", true, 7),
    row("b2 b4", "", true, 3),
    row("b1 b3", "", true, 3),
    row("b3", "b1 b4", false, 2),
    row("b3 b4", "", true, 3),
    row("", "b1 b4", false, 1),
    row("g1 g2", "", true, 3),
];

/// Classes with autoregulation using both arrow types; 62 stated.
pub const TABLE5: &[TableRow] = &[
    row("b1", "b3 a b2 g2", false, 2),
    row("", "b3 a b1 b2 b4 g2", false, 1),
    row("b2", "g1 a b1 b4", false, 2),
    row("a", "b1 b2 b4 g2", false, 2),
    row("", "g1 a b1 b2 b4 g2", false, 2),
    row("b1 b2", "g1 a", false, 4),
    row("b1", "g1 a b2 g2", false, 2),
    row("a b1", "b2 g2", false, 4),
    row("", "b3 a b1 b4 g2", false, 1),
    row("b1", "b3 a g2", false, 2),
    row("", "g1 a b1 b4", false, 1),
    row("g2", "g1 a b1 b4", false, 2),
    row("a", "b1 b4 g2", false, 2),
    row("a b1", "g2", true, 3),
    row("b1 g2", "g1 a", false, 4),
    row("b4", "b3 a b2 g2", false, 2),
    row("b2 b4", "g1 a", false, 4),
    row("b4", "g1 a b2 g2", false, 2),
    row("a b4", "b2 g2", false, 4),
    row("b2", "g1 a", false, 2),
    row("", "g1 a b2 g2", false, 1),
    row("a", "b2 g2", false, 2),
    row("b4", "b3 a g2", false, 2),
    row("", "b3 a g2", false, 1),
    row("b4", "g1 a", false, 2),
    row("b4 g2", "g1 a", false, 4),
    row("g2", "g1 a", false, 2),
];

/// Classes with autoregulation using one arrow type; 35 stated.
pub const TABLE6: &[TableRow] = &[
    row("a b1 b2", "", true, 7),
    row("b1 b2", "b3 a", false, 4),
    row("a b2", "b1 b4", false, 4),
    row("b2", "b3 a b1 b4", false, 2),
    row("b2 b4", "b3 a", false, 4),
    row("a b2 b4", "", true, 7),
    row("b1", "b3 a", false, 2),
    row("", "b3 a b1 b4", false, 1),
    row("b4", "b3 a", false, 2),
    row("a", "b1 b4", false, 2),
];
