//! ABI return codes and the detailed last-error record.

use thiserror::Error;
use wbpf_core::btf::{BtfError, CoreError, PtRegsError};
use wbpf_core::maps::MapError;
use wbpf_core::select::UnsupportedReport;
use wbpf_core::vm::verify::VerifyError;
use wbpf_core::ElfError;

pub const OK: i32 = 0;
pub const E_BAD_HANDLE: i32 = -1;
pub const E_NOT_FOUND: i32 = -2;
pub const E_OUT_OF_BOUNDS: i32 = -3;
pub const E_UNSUPPORTED: i32 = -4;
pub const E_BAD_ARGUMENT: i32 = -5;
/// Poll found nothing and the embedder has asked the guest to wind down.
pub const E_INTERRUPTED: i32 = -6;
pub const E_EXISTS: i32 = -7;
pub const E_NO_SPACE: i32 = -8;

/// Longest string read from guest memory, terminator included.
pub const MAX_STRING: u32 = 512;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HostError {
    #[error("guest pointer {ptr:#x}+{len} outside linear memory of {mem_size} bytes")]
    OutOfBoundsGuestPointer { ptr: u32, len: u64, mem_size: usize },
    #[error("guest string at {0:#x} is not NUL-terminated within 512 bytes or not UTF-8")]
    BadString(u32),
    #[error("empty object")]
    EmptyObject,
    #[error("unknown object handle {0}")]
    BadHandle(u64),
    #[error("no program named {0:?}")]
    NoSuchProgram(String),
    #[error("no map named {0:?}")]
    NoSuchMap(String),
    #[error("{0}")]
    UnsupportedAttachType(String),
    #[error("map {0} is not a ring buffer of this object")]
    NotARingbuf(i32),
    #[error("sample callback index {0} is not a (i32, i32, i32) -> i32 function")]
    BadCallback(u32),
    #[error("guest exports no linear memory named \"memory\"")]
    NoMemory,
    #[error("record of {len} bytes exceeds the {max}-byte guest buffer; skipped")]
    RecordTooLarge { len: usize, max: u32 },
    #[error("object: {0}")]
    Elf(#[from] ElfError),
    #[error("{0}")]
    Unsupported(UnsupportedReport),
    #[error("target BTF: {0}")]
    TargetBtf(BtfError),
    #[error("CO-RE: {0}")]
    Core(#[from] CoreError),
    #[error("register frame relocation: {0}")]
    PtRegs(#[from] PtRegsError),
    #[error("program {program} rejected: {error}")]
    Verify { program: String, error: VerifyError },
    #[error("map: {0}")]
    Map(#[from] MapError),
}

impl HostError {
    /// Stable ABI code for this error.
    pub fn code(&self) -> i32 {
        match self {
            HostError::OutOfBoundsGuestPointer { .. } => E_OUT_OF_BOUNDS,
            HostError::BadHandle(_) => E_BAD_HANDLE,
            HostError::NoSuchProgram(_) | HostError::NoSuchMap(_) => E_NOT_FOUND,
            HostError::UnsupportedAttachType(_) | HostError::Unsupported(_) => E_UNSUPPORTED,
            HostError::Map(e) => map_code(e),
            _ => E_BAD_ARGUMENT,
        }
    }
}

pub fn map_code(e: &MapError) -> i32 {
    match e {
        MapError::BadHandle(_) => E_BAD_HANDLE,
        MapError::NotFound | MapError::IndexOutOfRange(_) => E_NOT_FOUND,
        MapError::Unsupported(_) | MapError::WrongMapType(_) => E_UNSUPPORTED,
        MapError::AlreadyExists => E_EXISTS,
        MapError::CapacityExceeded => E_NO_SPACE,
        _ => E_BAD_ARGUMENT,
    }
}
