//! CO-RE relocation records from `.BTF.ext`.

use thiserror::Error;

use super::{BtfTypeGraph, TypeId, BTF_MAGIC};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtError {
    #[error("bad .BTF.ext magic {0:#06x}")]
    BadMagic(u16),
    #[error("truncated .BTF.ext: {0}")]
    Truncated(&'static str),
    #[error("bad CO-RE record size {0}")]
    BadRecordSize(u32),
    #[error("string offset {0} not in BTF string table")]
    BadStringOffset(u32),
    #[error("malformed access string {0:?}")]
    BadAccessString(String),
    #[error("CO-RE instruction offset {0} is not instruction aligned")]
    Misaligned(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoreReloKind {
    FieldByteOffset,
    FieldExists,
    /// Any other libbpf relocation kind, by its numeric code.
    Other(u32),
}

impl CoreReloKind {
    pub fn from_code(code: u32) -> Self {
        match code {
            0 => CoreReloKind::FieldByteOffset,
            2 => CoreReloKind::FieldExists,
            other => CoreReloKind::Other(other),
        }
    }

    pub fn code(&self) -> u32 {
        match self {
            CoreReloKind::FieldByteOffset => 0,
            CoreReloKind::FieldExists => 2,
            CoreReloKind::Other(c) => *c,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CoreReloKind::FieldByteOffset => "byte_off",
            CoreReloKind::FieldExists => "field_exists",
            CoreReloKind::Other(1) => "byte_sz",
            CoreReloKind::Other(3) => "signed",
            CoreReloKind::Other(4) => "lshift_u64",
            CoreReloKind::Other(5) => "rshift_u64",
            CoreReloKind::Other(6) => "local_type_id",
            CoreReloKind::Other(7) => "target_type_id",
            CoreReloKind::Other(8) => "type_exists",
            CoreReloKind::Other(9) => "type_size",
            CoreReloKind::Other(10) => "enumval_exists",
            CoreReloKind::Other(11) => "enumval_value",
            CoreReloKind::Other(12) => "type_matches",
            CoreReloKind::Other(_) => "unknown",
        }
    }
}

/// One CO-RE relocation. `access_spec[0]` indexes the root pointer as an
/// array (almost always 0); the rest are member or array indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreRelo {
    /// Byte offset into the owning program's instruction stream.
    pub insn_off: u32,
    pub type_id: TypeId,
    pub access_spec: Vec<u32>,
    pub kind: CoreReloKind,
}

impl CoreRelo {
    pub fn insn_index(&self) -> usize {
        self.insn_off as usize / 8
    }
}

pub fn parse_access_string(s: &str) -> Result<Vec<u32>, ExtError> {
    if s.is_empty() {
        return Err(ExtError::BadAccessString(s.into()));
    }
    s.split(':')
        .map(|p| p.parse::<u32>().map_err(|_| ExtError::BadAccessString(s.into())))
        .collect()
}

fn u32_at(data: &[u8], off: usize, big: bool, what: &'static str) -> Result<u32, ExtError> {
    let b: [u8; 4] = data
        .get(off..off.checked_add(4).ok_or(ExtError::Truncated(what))?)
        .ok_or(ExtError::Truncated(what))?
        .try_into()
        .unwrap();
    Ok(if big {
        u32::from_be_bytes(b)
    } else {
        u32::from_le_bytes(b)
    })
}

/// Parse the CO-RE relocation subsection, grouped by program section name.
/// Strings (section names, access strings) resolve against `btf`.
pub fn parse_btf_ext(blob: &[u8], btf: &BtfTypeGraph) -> Result<Vec<(String, Vec<CoreRelo>)>, ExtError> {
    if blob.len() < 8 {
        return Err(ExtError::Truncated("header"));
    }
    let magic = u16::from_le_bytes([blob[0], blob[1]]);
    let big = match magic {
        BTF_MAGIC => false,
        m if m.swap_bytes() == BTF_MAGIC => true,
        m => return Err(ExtError::BadMagic(m)),
    };
    let hdr_len = u32_at(blob, 4, big, "header")? as usize;
    if hdr_len < 24 || hdr_len > blob.len() {
        return Err(ExtError::Truncated("header"));
    }
    // Headers shorter than 32 bytes predate CO-RE records.
    if hdr_len < 32 {
        return Ok(Vec::new());
    }
    let core_off = u32_at(blob, 24, big, "header")? as usize;
    let core_len = u32_at(blob, 28, big, "header")? as usize;
    if core_len == 0 {
        return Ok(Vec::new());
    }
    let start = hdr_len
        .checked_add(core_off)
        .ok_or(ExtError::Truncated("core_relo"))?;
    let end = start
        .checked_add(core_len)
        .filter(|&e| e <= blob.len())
        .ok_or(ExtError::Truncated("core_relo"))?;
    let rec_size = u32_at(blob, start, big, "core_relo")?;
    if rec_size < 16 {
        return Err(ExtError::BadRecordSize(rec_size));
    }
    let string = |off: u32| btf.string_at(off).ok_or(ExtError::BadStringOffset(off));

    let mut out = Vec::new();
    let mut pos = start + 4;
    while pos < end {
        let sec_name = string(u32_at(blob, pos, big, "core_relo")?)?;
        let num = u32_at(blob, pos + 4, big, "core_relo")? as usize;
        pos += 8;
        let body = num
            .checked_mul(rec_size as usize)
            .ok_or(ExtError::Truncated("core_relo"))?;
        if pos + body > end {
            return Err(ExtError::Truncated("core_relo"));
        }
        let mut relos = Vec::with_capacity(num);
        for i in 0..num {
            let rec = pos + i * rec_size as usize;
            let insn_off = u32_at(blob, rec, big, "core_relo")?;
            if insn_off % 8 != 0 {
                return Err(ExtError::Misaligned(insn_off));
            }
            let type_id = u32_at(blob, rec + 4, big, "core_relo")?;
            let access = string(u32_at(blob, rec + 8, big, "core_relo")?)?;
            let kind = CoreReloKind::from_code(u32_at(blob, rec + 12, big, "core_relo")?);
            relos.push(CoreRelo {
                insn_off,
                type_id,
                access_spec: parse_access_string(&access)?,
                kind,
            });
        }
        pos += body;
        out.push((sec_name, relos));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::builder::{BtfBuilder, BtfExtBuilder};
    use super::super::parse_btf;
    use super::*;

    #[test]
    fn access_strings() {
        assert_eq!(parse_access_string("0:1:2").unwrap(), vec![0, 1, 2]);
        assert!(parse_access_string("").is_err());
        assert!(parse_access_string("0:x").is_err());
    }

    #[test]
    fn roundtrips_records() {
        let mut b = BtfBuilder::new();
        let int = b.add_int("int", 4, true);
        let s = b.add_struct("s", 8, &[("a", int, 0), ("b", int, 32)]);
        let sec = b.intern("kprobe/x");
        let acc = b.intern("0:1");
        let btf = parse_btf(&b.build()).unwrap();
        let mut e = BtfExtBuilder::new();
        e.add_core_relo(sec, [16, s, acc, 0]);
        e.add_core_relo(sec, [24, s, acc, 2]);
        let parsed = parse_btf_ext(&e.build(), &btf).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(parsed[0].0, "kprobe/x");
        assert_eq!(parsed[0].1[0].access_spec, vec![0, 1]);
        assert_eq!(parsed[0].1[1].kind, CoreReloKind::FieldExists);
        assert_eq!(parsed[0].1[1].insn_index(), 3);
    }

    #[test]
    fn rejects_misaligned_offset() {
        let mut b = BtfBuilder::new();
        let int = b.add_int("int", 4, true);
        let sec = b.intern("xdp");
        let acc = b.intern("0");
        let btf = parse_btf(&b.build()).unwrap();
        let mut e = BtfExtBuilder::new();
        e.add_core_relo(sec, [3, int, acc, 0]);
        assert_eq!(parse_btf_ext(&e.build(), &btf), Err(ExtError::Misaligned(3)));
    }
}
