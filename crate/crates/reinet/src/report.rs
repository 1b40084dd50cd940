//! Tabular outputs: census tables and trajectories.

use reinet_core::dynamics::Trajectory;
use reinet_core::enumeration::census::CensusReport;
use reinet_core::enumeration::MultiplicityVector;
use sha2::{Digest, Sha256};

/// First 16 hex digits of the SHA-256 of the comma-joined parameter array.
pub fn key_digest(key: MultiplicityVector) -> String {
    let text = key.to_array().map(|x| x.to_string()).join(",");
    hex::encode(&Sha256::digest(text.as_bytes())[..8])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub digest: String,
    pub representative: MultiplicityVector,
    pub category: &'static str,
    pub members: usize,
}

/// One row per class, sorted by digest.
pub fn census_rows(report: &CensusReport) -> Vec<CensusRow> {
    let mut rows: Vec<CensusRow> = report
        .classes
        .iter()
        .map(|c| CensusRow {
            digest: key_digest(c.key),
            representative: c.key,
            category: c.category.label(),
            members: c.members.len(),
        })
        .collect();
    rows.sort_by(|a, b| a.digest.cmp(&b.digest));
    rows
}

/// Tab-separated census table with a header line.
pub fn census_tsv(report: &CensusReport) -> String {
    let mut w = csv::WriterBuilder::new().delimiter(b'\t').from_writer(Vec::new());
    w.write_record(["digest", "representative", "category", "members"]).expect("in-memory write");
    for r in census_rows(report) {
        w.write_record([r.digest, r.representative.to_string(), r.category.to_string(), r.members.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// CSV with columns `t, m1, p1, m2, p2, ...`.
pub fn trajectory_csv(traj: &Trajectory, n: usize) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["t".to_string()];
    for i in 1..=n {
        header.push(format!("m{i}"));
        header.push(format!("p{i}"));
    }
    w.write_record(&header).expect("in-memory write");
    for (t, x) in traj.times.iter().zip(&traj.states) {
        let rec: Vec<String> = std::iter::once(*t).chain(x.iter().copied()).map(|v| format!("{v:e}")).collect();
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}
