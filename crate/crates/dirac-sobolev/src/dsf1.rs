//! DSF1: a minimal little-endian binary container for grid fields.
//!
//! Layout, all integers and floats little-endian:
//!
//! | bytes | content                                   |
//! |-------|-------------------------------------------|
//! | 4     | magic `b"DSF1"`                           |
//! | 4     | `u32` format version, currently `1`       |
//! | 4     | `u32` grid size `n` per axis              |
//! | 8     | `f64` box length `L`                      |
//! | 4     | `u32` component count, `1` or `4`         |
//! | rest  | `ncomp · n³` samples as `(re, im)` `f64` pairs |
//!
//! Samples are x-fastest (flat index `ix + n·(iy + n·iz)`), components
//! stored one after another. A scalar field has one component; a 4-spinor
//! has four. Decoding is strict: wrong magic, unknown version, bad
//! component count, truncation, or trailing bytes all fail with a format
//! error rather than yielding a partially read field.

use crate::error::{Error, Result};
use crate::field::{ScalarField, SpinorField};
use crate::grid::make_grid;
use crate::C64;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::Path;

const MAGIC: [u8; 4] = *b"DSF1";
const VERSION: u32 = 1;
/// Largest grid side accepted by the format (4096³ samples ≈ 1 TiB per
/// component is already far beyond anything this laboratory computes on).
const MAX_N: usize = 4096;

/// A field as stored in a DSF1 file: either one component or four.
#[derive(Clone, Debug, PartialEq)]
pub enum Dsf1Field {
    Scalar(ScalarField),
    Spinor(SpinorField),
}

impl Dsf1Field {
    fn component_count(&self) -> u32 {
        match self {
            Dsf1Field::Scalar(_) => 1,
            Dsf1Field::Spinor(_) => 4,
        }
    }

    fn grid(&self) -> crate::grid::GridSpec {
        match self {
            Dsf1Field::Scalar(f) => f.grid(),
            Dsf1Field::Spinor(f) => f.grid(),
        }
    }
}

impl From<ScalarField> for Dsf1Field {
    fn from(f: ScalarField) -> Self {
        Dsf1Field::Scalar(f)
    }
}

impl From<SpinorField> for Dsf1Field {
    fn from(f: SpinorField) -> Self {
        Dsf1Field::Spinor(f)
    }
}

/// Serializes a field into any writer.
pub fn encode(field: &Dsf1Field, w: &mut impl Write) -> Result<()> {
    let grid = field.grid();
    w.write_all(&MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&(grid.n() as u32).to_le_bytes())?;
    w.write_all(&grid.box_length().to_le_bytes())?;
    w.write_all(&field.component_count().to_le_bytes())?;
    let mut write_component = |f: &ScalarField| -> Result<()> {
        for z in f.values() {
            w.write_all(&z.re.to_le_bytes())?;
            w.write_all(&z.im.to_le_bytes())?;
        }
        Ok(())
    };
    match field {
        Dsf1Field::Scalar(f) => write_component(f)?,
        Dsf1Field::Spinor(f) => {
            for k in 1..=4 {
                write_component(f.component(k))?;
            }
        }
    }
    Ok(())
}

/// Reads exactly `buf.len()` bytes, reporting truncation as a format error
/// instead of a bare I/O error.
fn read_exact_or_format(r: &mut (impl Read + ?Sized), buf: &mut [u8]) -> Result<()> {
    r.read_exact(buf).map_err(|e| {
        if e.kind() == io::ErrorKind::UnexpectedEof {
            Error::Format("DSF1 payload is truncated".into())
        } else {
            Error::Io(e)
        }
    })
}

fn read_u32(r: &mut impl Read) -> Result<u32> {
    let mut b = [0u8; 4];
    read_exact_or_format(r, &mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_f64(r: &mut impl Read) -> Result<f64> {
    let mut b = [0u8; 8];
    read_exact_or_format(r, &mut b)?;
    Ok(f64::from_le_bytes(b))
}

/// Deserializes a field from any reader. The stream must end exactly at the
/// last sample.
pub fn decode(r: &mut impl Read) -> Result<Dsf1Field> {
    let mut magic = [0u8; 4];
    read_exact_or_format(r, &mut magic)?;
    if magic != MAGIC {
        return Err(Error::Format(format!(
            "bad magic {magic:?}, expected {MAGIC:?}"
        )));
    }
    let version = read_u32(r)?;
    if version != VERSION {
        return Err(Error::Format(format!(
            "unsupported DSF1 version {version}, expected {VERSION}"
        )));
    }
    let n = read_u32(r)? as usize;
    // Format-level ceiling: keeps `n³` far from overflow and stops a
    // corrupted header from demanding an absurd allocation up front.
    if n > MAX_N {
        return Err(Error::Format(format!(
            "grid size {n} exceeds the DSF1 limit of {MAX_N} points per axis"
        )));
    }
    let box_length = read_f64(r)?;
    let grid = make_grid(n, box_length)
        .map_err(|e| Error::Format(format!("invalid grid in DSF1 header: {e}")))?;
    let ncomp = read_u32(r)?;
    if ncomp != 1 && ncomp != 4 {
        return Err(Error::Format(format!(
            "component count must be 1 or 4, got {ncomp}"
        )));
    }

    let read_component = |r: &mut dyn Read| -> Result<ScalarField> {
        // Grow buffers only as bytes actually arrive, so a header that
        // promises more data than the stream holds fails on truncation
        // instead of reserving the promised size.
        let total = grid.len() * 16;
        let mut buf = Vec::new();
        while buf.len() < total {
            let take = (total - buf.len()).min(1 << 22);
            let start = buf.len();
            buf.resize(start + take, 0);
            read_exact_or_format(r, &mut buf[start..])?;
        }
        let mut values = Vec::with_capacity(buf.len() / 16);
        for pair in buf.chunks_exact(16) {
            let re = f64::from_le_bytes(pair[..8].try_into().unwrap());
            let im = f64::from_le_bytes(pair[8..].try_into().unwrap());
            values.push(C64::new(re, im));
        }
        ScalarField::new(grid, values)
            .map_err(|e| Error::Format(format!("invalid DSF1 payload: {e}")))
    };

    let field = if ncomp == 1 {
        Dsf1Field::Scalar(read_component(r)?)
    } else {
        let c1 = read_component(r)?;
        let c2 = read_component(r)?;
        let c3 = read_component(r)?;
        let c4 = read_component(r)?;
        Dsf1Field::Spinor(SpinorField::from_components([c1, c2, c3, c4]).expect("grids match"))
    };

    let mut probe = [0u8; 1];
    match r.read(&mut probe) {
        Ok(0) => Ok(field),
        Ok(_) => Err(Error::Format("trailing bytes after DSF1 payload".into())),
        Err(e) => Err(Error::Io(e)),
    }
}

/// Writes a field to a file.
pub fn store(path: impl AsRef<Path>, field: &Dsf1Field) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    encode(field, &mut w)?;
    w.flush()?;
    Ok(())
}

/// Reads a field from a file.
pub fn load(path: impl AsRef<Path>) -> Result<Dsf1Field> {
    let mut r = BufReader::new(File::open(path)?);
    decode(&mut r)
}
