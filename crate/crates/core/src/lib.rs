//! Core of the wasm-bpf host runtime: eBPF object parsing, BTF and CO-RE
//! relocation, a userspace eBPF interpreter, in-process maps, backend
//! selection and OCI packaging.

pub mod btf;
pub mod elf;
pub mod insn;
pub mod maps;
pub mod oci;
pub mod select;
pub mod vm;

pub use elf::{bind_maps, parse_object, EbpfProgramImage, ElfBpfObject, ElfError, MapDef, MapType, ProgType, ProgramBlob};
pub use insn::{decode_instructions, DecodeError, Insn};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Endianness {
    #[default]
    Little,
    Big,
}
