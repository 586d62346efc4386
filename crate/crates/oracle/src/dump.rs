//! Flat binary dump of a group: one JSON header line `{"dim","q","count"}`,
//! then `count` row-major `dim x dim` byte matrices.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::group::Group;
use crate::linalg::Mat;
use crate::OracleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DumpHeader {
    pub dim: usize,
    pub q: u64,
    pub count: usize,
}

fn io(e: impl std::fmt::Display) -> OracleError {
    OracleError::Io(e.to_string())
}

pub fn write_dump(g: &Group, q: u64, mut out: impl Write) -> Result<(), OracleError> {
    let header = DumpHeader { dim: g.dim(), q, count: g.order() };
    serde_json::to_writer(&mut out, &header).map_err(io)?;
    out.write_all(b"\n").map_err(io)?;
    for m in g.elements() {
        out.write_all(m.bytes()).map_err(io)?;
    }
    out.flush().map_err(io)
}

pub fn read_dump(mut input: impl BufRead) -> Result<(DumpHeader, Vec<Mat>), OracleError> {
    let mut line = String::new();
    input.read_line(&mut line).map_err(io)?;
    let header: DumpHeader = serde_json::from_str(line.trim_end()).map_err(io)?;
    let mut buf = vec![0; header.dim * header.dim];
    let mut mats = Vec::with_capacity(header.count);
    for _ in 0..header.count {
        input.read_exact(&mut buf).map_err(io)?;
        mats.push(Mat::from_rows(header.dim, buf.clone()));
    }
    Ok((header, mats))
}
