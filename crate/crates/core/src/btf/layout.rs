//! Shared-layout validation: can a struct be copied byte-for-byte between a
//! 64-bit host and a 32-bit Wasm guest and read back with the same meaning?

use serde::Serialize;
use thiserror::Error;

use super::{BtfKind, BtfTypeGraph, TypeId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("type {0} has no size")]
    UnsizedType(TypeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldLayout {
    pub name: String,
    pub offset: u64,
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayoutReport {
    pub type_id: TypeId,
    pub name: String,
    pub total_size: u64,
    pub fields: Vec<FieldLayout>,
    pub wasm_safe: bool,
    pub violations: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Model {
    /// Offsets as recorded in BTF (64-bit host).
    Host,
    /// Natural layout with the given pointer width.
    Guest(u64),
}

struct Walker<'a> {
    graph: &'a BtfTypeGraph,
    violations: Vec<String>,
    depth_limit: usize,
}

#[derive(Clone, Copy)]
struct SizeAlign {
    size: u64,
    align: u64,
}

fn align_up(v: u64, a: u64) -> u64 {
    if a <= 1 {
        v
    } else {
        v.div_ceil(a) * a
    }
}

/// `long` and friends change width between ILP32 and LP64.
fn is_pointer_width_int(name: &str) -> bool {
    name.contains("long") && !name.contains("long long")
}

impl Walker<'_> {
    fn flag(&mut self, path: &str, msg: impl AsRef<str>) {
        let what = if path.is_empty() { "<root>" } else { path };
        let v = format!("{what}: {}", msg.as_ref());
        if !self.violations.contains(&v) {
            self.violations.push(v);
        }
    }

    fn layout(&mut self, id: TypeId, model: Model, path: &str, depth: usize) -> Option<SizeAlign> {
        if depth > self.depth_limit {
            self.flag(path, "type nesting too deep");
            return None;
        }
        let ty = self.graph.get(id)?;
        match &ty.kind {
            BtfKind::Typedef { type_id }
            | BtfKind::Const { type_id }
            | BtfKind::Volatile { type_id }
            | BtfKind::Restrict { type_id }
            | BtfKind::TypeTag { type_id } => self.layout(*type_id, model, path, depth + 1),
            BtfKind::Int { size, .. } => {
                let size = *size as u64;
                if let Model::Guest(ptr) = model {
                    if is_pointer_width_int(&ty.name) {
                        self.flag(path, format!("`{}` changes width on a 32-bit guest", ty.name));
                        return Some(SizeAlign { size: ptr, align: ptr });
                    }
                }
                Some(SizeAlign { size, align: size.clamp(1, 16) })
            }
            BtfKind::Enum { size, .. } | BtfKind::Float { size } => {
                let size = *size as u64;
                Some(SizeAlign { size, align: size.clamp(1, 16) })
            }
            BtfKind::Ptr { .. } => {
                self.flag(path, "pointer member");
                let w = match model {
                    Model::Host => 8,
                    Model::Guest(ptr) => ptr,
                };
                Some(SizeAlign { size: w, align: w })
            }
            BtfKind::Array { elem, nelems, .. } => {
                let e = self.layout(*elem, model, &format!("{path}[]"), depth + 1)?;
                Some(SizeAlign {
                    size: e.size.checked_mul(*nelems as u64)?,
                    align: e.align,
                })
            }
            BtfKind::Struct { size, members } | BtfKind::Union { size, members } => {
                let is_union = matches!(ty.kind, BtfKind::Union { .. });
                let mut end = 0u64;
                let mut align = 1u64;
                for m in members {
                    let mpath = if path.is_empty() {
                        m.name.clone()
                    } else {
                        format!("{path}.{}", m.name)
                    };
                    if m.is_bitfield() {
                        self.flag(&mpath, "bitfield member");
                    }
                    let ml = self.layout(m.type_id, model, &mpath, depth + 1)?;
                    let off = match model {
                        Model::Host => m.byte_offset() as u64,
                        Model::Guest(_) if is_union => 0,
                        Model::Guest(_) => align_up(end, ml.align),
                    };
                    end = end.max(off + ml.size);
                    align = align.max(ml.align);
                }
                let natural = align_up(end, align);
                match model {
                    Model::Host => Some(SizeAlign {
                        size: *size as u64,
                        align,
                    }),
                    Model::Guest(_) => Some(SizeAlign { size: natural, align }),
                }
            }
            BtfKind::Void
            | BtfKind::Fwd { .. }
            | BtfKind::Func { .. }
            | BtfKind::FuncProto { .. }
            | BtfKind::Var { .. }
            | BtfKind::Datasec { .. }
            | BtfKind::DeclTag { .. } => None,
        }
    }

    /// Compare recorded member offsets with the natural layout at every struct level.
    fn check_natural(&mut self, id: TypeId, path: &str, depth: usize) {
        if depth > self.depth_limit {
            return;
        }
        let id = self.graph.resolve(id);
        let Some(ty) = self.graph.get(id) else { return };
        match &ty.kind {
            BtfKind::Struct { size, members } => {
                let mut end = 0u64;
                let mut align = 1u64;
                for m in members {
                    let mpath = if path.is_empty() {
                        m.name.clone()
                    } else {
                        format!("{path}.{}", m.name)
                    };
                    let mut quiet = Walker {
                        graph: self.graph,
                        violations: Vec::new(),
                        depth_limit: self.depth_limit,
                    };
                    let Some(ml) = quiet.layout(m.type_id, Model::Host, &mpath, depth + 1) else {
                        continue;
                    };
                    let natural = align_up(end, ml.align);
                    if !m.is_bitfield() && m.byte_offset() as u64 != natural {
                        self.flag(
                            &mpath,
                            format!(
                                "recorded at offset {} but natural alignment places it at {natural}",
                                m.byte_offset()
                            ),
                        );
                    }
                    end = m.byte_offset() as u64 + ml.size;
                    align = align.max(ml.align);
                    self.check_natural(m.type_id, &mpath, depth + 1);
                }
                if align_up(end, align) != *size as u64 {
                    self.flag(path, format!("recorded size {size} differs from natural size {}", align_up(end, align)));
                }
            }
            BtfKind::Union { members, .. } => {
                for m in members {
                    self.check_natural(m.type_id, &format!("{path}.{}", m.name), depth + 1);
                }
            }
            BtfKind::Array { elem, .. } => self.check_natural(*elem, &format!("{path}[]"), depth + 1),
            _ => {}
        }
    }

    fn member_offsets(&self, id: TypeId, model: Model) -> Vec<(String, u64, u64)> {
        let id = self.graph.resolve(id);
        let Some(BtfKind::Struct { members, .. }) = self.graph.get(id).map(|t| &t.kind) else {
            return Vec::new();
        };
        let mut quiet = Walker {
            graph: self.graph,
            violations: Vec::new(),
            depth_limit: self.depth_limit,
        };
        let mut end = 0u64;
        let mut out = Vec::new();
        for m in members {
            let Some(ml) = quiet.layout(m.type_id, model, &m.name, 1) else {
                continue;
            };
            let off = match model {
                Model::Host => m.byte_offset() as u64,
                Model::Guest(_) => align_up(end, ml.align),
            };
            end = off + ml.size;
            out.push((m.name.clone(), off, ml.size));
        }
        out
    }
}

/// Decide whether `type_id` can be shared with a guest whose pointers are
/// `wasm_ptr_width` bytes wide, without any serialization step.
pub fn validate_shared_layout(
    graph: &BtfTypeGraph,
    type_id: TypeId,
    wasm_ptr_width: u32,
) -> Result<LayoutReport, LayoutError> {
    let mut w = Walker {
        graph,
        violations: Vec::new(),
        depth_limit: 64,
    };
    let host = w
        .layout(type_id, Model::Host, "", 0)
        .ok_or(LayoutError::UnsizedType(type_id))?;
    let guest = w
        .layout(type_id, Model::Guest(wasm_ptr_width as u64), "", 0)
        .ok_or(LayoutError::UnsizedType(type_id))?;
    w.check_natural(type_id, "", 0);
    if host.size != guest.size {
        w.flag("", format!("size {} on host but {} on guest", host.size, guest.size));
    }
    if host.align != guest.align {
        w.flag("", format!("alignment {} on host but {} on guest", host.align, guest.align));
    }
    let host_fields = w.member_offsets(type_id, Model::Host);
    let guest_fields = w.member_offsets(type_id, Model::Guest(wasm_ptr_width as u64));
    for (h, g) in host_fields.iter().zip(&guest_fields) {
        if h.1 != g.1 {
            w.flag(&h.0, format!("offset {} on host but {} on guest", h.1, g.1));
        }
    }
    let fields = host_fields
        .into_iter()
        .map(|(name, offset, size)| FieldLayout { name, offset, size })
        .collect();
    Ok(LayoutReport {
        type_id,
        name: graph.display_name(type_id),
        total_size: host.size,
        fields,
        wasm_safe: w.violations.is_empty(),
        violations: w.violations,
    })
}

#[cfg(test)]
mod tests {
    use super::super::builder::BtfBuilder;
    use super::super::parse_btf;
    use super::*;

    #[test]
    fn event_struct_is_safe() {
        let mut b = BtfBuilder::new();
        let u32t = b.add_int("unsigned int", 4, false);
        let u64t = b.add_int("unsigned long long", 8, false);
        let ch = b.add_int("char", 1, true);
        let comm = b.add_array(ch, u32t, 16);
        let ev = b.add_struct("event", 32, &[("pid", u32t, 0), ("ts", u64t, 64), ("comm", comm, 128)]);
        let g = parse_btf(&b.build()).unwrap();
        let r = validate_shared_layout(&g, ev, 4).unwrap();
        assert!(r.wasm_safe, "{:?}", r.violations);
        assert_eq!(r.total_size, 32);
        assert_eq!(r.fields[1], FieldLayout { name: "ts".into(), offset: 8, size: 8 });
    }

    #[test]
    fn single_u64() {
        let mut b = BtfBuilder::new();
        let u64t = b.add_int("unsigned long long", 8, false);
        let s = b.add_struct("s", 8, &[("a", u64t, 0)]);
        let g = parse_btf(&b.build()).unwrap();
        let r = validate_shared_layout(&g, s, 4).unwrap();
        assert!(r.wasm_safe);
        assert_eq!(r.total_size, 8);
    }

    #[test]
    fn pointer_member_flagged() {
        let mut b = BtfBuilder::new();
        let u32t = b.add_int("unsigned int", 4, false);
        let p = b.add_ptr(u32t);
        let s = b.add_struct("s", 16, &[("pid", u32t, 0), ("task", p, 64)]);
        let g = parse_btf(&b.build()).unwrap();
        let r = validate_shared_layout(&g, s, 4).unwrap();
        assert!(!r.wasm_safe);
        assert!(r.violations.iter().any(|v| v.starts_with("task")), "{:?}", r.violations);
    }

    #[test]
    fn long_is_pointer_width() {
        let mut b = BtfBuilder::new();
        let l = b.add_int("long", 8, true);
        let s = b.add_struct("s", 8, &[("v", l, 0)]);
        let g = parse_btf(&b.build()).unwrap();
        assert!(!validate_shared_layout(&g, s, 4).unwrap().wasm_safe);
    }

    #[test]
    fn packed_layout_flagged() {
        let mut b = BtfBuilder::new();
        let u8t = b.add_int("unsigned char", 1, false);
        let u32t = b.add_int("unsigned int", 4, false);
        let s = b.add_struct("p", 5, &[("a", u8t, 0), ("b", u32t, 8)]);
        let g = parse_btf(&b.build()).unwrap();
        assert!(!validate_shared_layout(&g, s, 4).unwrap().wasm_safe);
    }

    #[test]
    fn unsized_root() {
        let mut b = BtfBuilder::new();
        let f = b.add_fwd("opaque", false);
        let g = parse_btf(&b.build()).unwrap();
        assert_eq!(validate_shared_layout(&g, f, 4), Err(LayoutError::UnsizedType(f)));
        assert_eq!(validate_shared_layout(&g, 0, 4), Err(LayoutError::UnsizedType(0)));
    }
}
