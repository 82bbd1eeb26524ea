//! Minimal BTF writer used to produce test fixtures and fuzz seeds.
//!
//! Callers supply every size and offset; nothing is computed here.

use super::*;

#[derive(Debug, Default, Clone)]
pub struct BtfBuilder {
    types: Vec<u8>,
    strings: Vec<u8>,
    next_id: TypeId,
}

impl BtfBuilder {
    pub fn new() -> Self {
        BtfBuilder {
            types: Vec::new(),
            strings: vec![0],
            next_id: 1,
        }
    }

    fn add_str(&mut self, s: &str) -> u32 {
        if s.is_empty() {
            return 0;
        }
        let off = self.strings.len() as u32;
        self.strings.extend_from_slice(s.as_bytes());
        self.strings.push(0);
        off
    }

    fn push_u32(&mut self, v: u32) {
        self.types.extend_from_slice(&v.to_le_bytes());
    }

    fn header(&mut self, name: &str, kind: u32, vlen: u32, kind_flag: bool, size_type: u32) -> TypeId {
        let name_off = self.add_str(name);
        self.push_u32(name_off);
        self.push_u32((kind_flag as u32) << 31 | kind << 24 | (vlen & 0xffff));
        self.push_u32(size_type);
        let id = self.next_id;
        self.next_id += 1;
        id
    }

    pub fn add_int(&mut self, name: &str, size: u32, signed: bool) -> TypeId {
        let id = self.header(name, KIND_INT, 0, false, size);
        let encoding = if signed { 1u32 } else { 0 };
        self.push_u32(encoding << 24 | (size * 8));
        id
    }

    pub fn add_float(&mut self, name: &str, size: u32) -> TypeId {
        self.header(name, KIND_FLOAT, 0, false, size)
    }

    pub fn add_ptr(&mut self, target: TypeId) -> TypeId {
        self.header("", KIND_PTR, 0, false, target)
    }

    pub fn add_array(&mut self, elem: TypeId, index: TypeId, nelems: u32) -> TypeId {
        let id = self.header("", KIND_ARRAY, 0, false, 0);
        self.push_u32(elem);
        self.push_u32(index);
        self.push_u32(nelems);
        id
    }

    /// `members` are `(name, type, bit_offset)`.
    pub fn add_struct(&mut self, name: &str, size: u32, members: &[(&str, TypeId, u32)]) -> TypeId {
        self.add_composite(name, KIND_STRUCT, size, members)
    }

    pub fn add_union(&mut self, name: &str, size: u32, members: &[(&str, TypeId, u32)]) -> TypeId {
        self.add_composite(name, KIND_UNION, size, members)
    }

    fn add_composite(&mut self, name: &str, kind: u32, size: u32, members: &[(&str, TypeId, u32)]) -> TypeId {
        let id = self.header(name, kind, members.len() as u32, false, size);
        for (m_name, ty, bit_off) in members {
            let off = self.add_str(m_name);
            self.push_u32(off);
            self.push_u32(*ty);
            self.push_u32(*bit_off);
        }
        id
    }

    /// Struct with bitfield encoding; `members` are `(name, type, bit_offset, bitfield_size)`.
    pub fn add_struct_bitfields(&mut self, name: &str, size: u32, members: &[(&str, TypeId, u32, u32)]) -> TypeId {
        let id = self.header(name, KIND_STRUCT, members.len() as u32, true, size);
        for (m_name, ty, bit_off, bits) in members {
            let off = self.add_str(m_name);
            self.push_u32(off);
            self.push_u32(*ty);
            self.push_u32(bits << 24 | (bit_off & 0x00ff_ffff));
        }
        id
    }

    pub fn add_enum(&mut self, name: &str, size: u32, values: &[(&str, i32)]) -> TypeId {
        let id = self.header(name, KIND_ENUM, values.len() as u32, true, size);
        for (v_name, v) in values {
            let off = self.add_str(v_name);
            self.push_u32(off);
            self.push_u32(*v as u32);
        }
        id
    }

    pub fn add_fwd(&mut self, name: &str, is_union: bool) -> TypeId {
        self.header(name, KIND_FWD, 0, is_union, 0)
    }

    pub fn add_typedef(&mut self, name: &str, target: TypeId) -> TypeId {
        self.header(name, KIND_TYPEDEF, 0, false, target)
    }

    pub fn add_const(&mut self, target: TypeId) -> TypeId {
        self.header("", KIND_CONST, 0, false, target)
    }

    pub fn add_volatile(&mut self, target: TypeId) -> TypeId {
        self.header("", KIND_VOLATILE, 0, false, target)
    }

    pub fn add_func_proto(&mut self, ret: TypeId, params: &[(&str, TypeId)]) -> TypeId {
        let id = self.header("", KIND_FUNC_PROTO, params.len() as u32, false, ret);
        for (p_name, ty) in params {
            let off = self.add_str(p_name);
            self.push_u32(off);
            self.push_u32(*ty);
        }
        id
    }

    pub fn add_func(&mut self, name: &str, proto: TypeId) -> TypeId {
        self.header(name, KIND_FUNC, 1, false, proto)
    }

    pub fn add_var(&mut self, name: &str, ty: TypeId) -> TypeId {
        let id = self.header(name, KIND_VAR, 0, false, ty);
        self.push_u32(1);
        id
    }

    /// `vars` are `(var type id, offset, size)`.
    pub fn add_datasec(&mut self, name: &str, size: u32, vars: &[(TypeId, u32, u32)]) -> TypeId {
        let id = self.header(name, KIND_DATASEC, vars.len() as u32, false, size);
        for (ty, off, sz) in vars {
            self.push_u32(*ty);
            self.push_u32(*off);
            self.push_u32(*sz);
        }
        id
    }

    /// Intern a string and return its offset (for `.BTF.ext` section names and access strings).
    pub fn intern(&mut self, s: &str) -> u32 {
        self.add_str(s)
    }

    pub fn build(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(24 + self.types.len() + self.strings.len());
        out.extend_from_slice(&BTF_MAGIC.to_le_bytes());
        out.push(1); // version
        out.push(0); // flags
        out.extend_from_slice(&24u32.to_le_bytes());
        out.extend_from_slice(&0u32.to_le_bytes());
        out.extend_from_slice(&(self.types.len() as u32).to_le_bytes());
        out.extend_from_slice(&(self.types.len() as u32).to_le_bytes());
        out.extend_from_slice(&(self.strings.len() as u32).to_le_bytes());
        out.extend_from_slice(&self.types);
        out.extend_from_slice(&self.strings);
        out
    }
}

/// Writer for the CO-RE part of `.BTF.ext`; string offsets refer to the paired `.BTF`.
#[derive(Debug, Default, Clone)]
pub struct BtfExtBuilder {
    sections: Vec<(u32, Vec<[u32; 4]>)>,
}

impl BtfExtBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a record `(insn_off, type_id, access_str_off, kind)` under a section name offset.
    pub fn add_core_relo(&mut self, sec_name_off: u32, record: [u32; 4]) {
        match self.sections.iter_mut().find(|(s, _)| *s == sec_name_off) {
            Some((_, recs)) => recs.push(record),
            None => self.sections.push((sec_name_off, vec![record])),
        }
    }

    pub fn build(&self) -> Vec<u8> {
        let mut core = Vec::new();
        if !self.sections.is_empty() {
            core.extend_from_slice(&16u32.to_le_bytes());
            for (sec, recs) in &self.sections {
                core.extend_from_slice(&sec.to_le_bytes());
                core.extend_from_slice(&(recs.len() as u32).to_le_bytes());
                for r in recs {
                    for v in r {
                        core.extend_from_slice(&v.to_le_bytes());
                    }
                }
            }
        }
        let mut out = Vec::new();
        out.extend_from_slice(&BTF_MAGIC.to_le_bytes());
        out.push(1);
        out.push(0);
        out.extend_from_slice(&32u32.to_le_bytes());
        // func_info and line_info are empty
        for _ in 0..4 {
            out.extend_from_slice(&0u32.to_le_bytes());
        }
        out.extend_from_slice(&0u32.to_le_bytes());
        out.extend_from_slice(&(core.len() as u32).to_le_bytes());
        out.extend_from_slice(&core);
        out
    }
}
