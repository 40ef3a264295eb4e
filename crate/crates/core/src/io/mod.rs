//! Knot tables in, JSON reports out.

mod knotfile;
pub mod report;

pub use knotfile::{find_knot, parse_knot_file, parse_knot_str, serialize_knot_file, FORMAT_VERSION};
pub use report::{input_digest, ReportDocument};
