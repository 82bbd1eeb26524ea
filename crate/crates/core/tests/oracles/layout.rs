//! Brute-force C struct layout for pointer-free field descriptions.

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ty {
    /// Unsigned integer of 1, 2, 4 or 8 bytes.
    Int(u32),
    Array(Box<Ty>, u32),
    Struct(String, Vec<(String, Ty)>),
}

impl Ty {
    pub fn align(&self) -> u32 {
        match self {
            Ty::Int(n) => *n,
            Ty::Array(e, _) => e.align(),
            Ty::Struct(_, fields) => fields.iter().map(|(_, t)| t.align()).max().unwrap_or(1),
        }
    }

    pub fn size(&self) -> u32 {
        match self {
            Ty::Int(n) => *n,
            Ty::Array(e, n) => e.size() * n,
            Ty::Struct(_, fields) => {
                let mut end = 0u32;
                for (_, t) in fields {
                    end = end.next_multiple_of(t.align()) + t.size();
                }
                end.next_multiple_of(self.align())
            }
        }
    }

    /// Offset of every member, placing each at the next multiple of its alignment.
    pub fn member_offsets(&self) -> Vec<u32> {
        let Ty::Struct(_, fields) = self else { return Vec::new() };
        let mut out = Vec::new();
        let mut end = 0u32;
        for (_, t) in fields {
            let off = end.next_multiple_of(t.align());
            out.push(off);
            end = off + t.size();
        }
        out
    }
}

/// A scalar leaf reachable from a struct: names along the way, its byte
/// offset and width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Leaf {
    pub names: Vec<String>,
    /// Array element indices, aligned with `names` (`None` for struct members).
    pub elems: Vec<Option<u32>>,
    pub offset: u32,
    pub width: u32,
}

/// Every scalar leaf of `ty` by walking all members and all array elements.
pub fn leaves(ty: &Ty) -> Vec<Leaf> {
    let mut out = Vec::new();
    walk(ty, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

fn walk(ty: &Ty, base: u32, names: &mut Vec<String>, elems: &mut Vec<Option<u32>>, out: &mut Vec<Leaf>) {
    match ty {
        Ty::Int(w) => out.push(Leaf {
            names: names.clone(),
            elems: elems.clone(),
            offset: base,
            width: *w,
        }),
        Ty::Array(e, n) => {
            for k in 0..*n {
                // the element index is attached to the array member just pushed
                let last = elems.len() - 1;
                elems[last] = Some(k);
                walk(e, base + k * e.size(), names, elems, out);
            }
            let last = elems.len() - 1;
            elems[last] = None;
        }
        Ty::Struct(_, fields) => {
            for ((name, t), off) in fields.iter().zip(ty.member_offsets()) {
                names.push(name.clone());
                elems.push(None);
                walk(t, base + off, names, elems, out);
                names.pop();
                elems.pop();
            }
        }
    }
}

/// Find the leaf in `target` with the same names and element indices.
pub fn matching_leaf<'a>(target: &'a [Leaf], leaf: &Leaf) -> Option<&'a Leaf> {
    target.iter().find(|t| t.names == leaf.names && t.elems == leaf.elems)
}
