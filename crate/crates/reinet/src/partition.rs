//! Partition syntax: `1,2|3`. Commas separate nodes within a block, bars
//! separate blocks, whitespace is ignored, ids are 1-based.

use reinet_core::synchrony::{Partition, PartitionError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParsePartitionError {
    #[error("block {block}: {text:?} is not a positive node id")]
    BadId { block: usize, text: String },
    #[error(transparent)]
    Invalid(#[from] PartitionError),
}

pub fn parse_partition(s: &str, n: usize) -> Result<Partition, ParsePartitionError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut blocks = Vec::new();
    for (b, part) in compact.split('|').enumerate() {
        let mut block = Vec::new();
        if !part.is_empty() {
            for tok in part.split(',') {
                match tok.parse::<usize>() {
                    Ok(id) if id >= 1 => block.push(id - 1),
                    _ => return Err(ParsePartitionError::BadId { block: b + 1, text: tok.to_string() }),
                }
            }
        }
        blocks.push(block);
    }
    Ok(Partition::new(n, blocks)?)
}
