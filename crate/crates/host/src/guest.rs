//! Bounds-checked access to guest linear memory.
//!
//! Every payload copy between the host and the guest goes through this
//! module so the copy counters see all of them.

use crate::error::{HostError, MAX_STRING};

/// Byte range `[ptr, ptr + len)` inside a memory of `mem_size` bytes.
pub fn check_range(mem_size: usize, ptr: u32, len: u64) -> Result<std::ops::Range<usize>, HostError> {
    let start = ptr as u64;
    match start.checked_add(len) {
        Some(end) if end <= mem_size as u64 => Ok(start as usize..end as usize),
        _ => Err(HostError::OutOfBoundsGuestPointer { ptr, len, mem_size }),
    }
}

pub fn slice(mem: &[u8], ptr: u32, len: u64) -> Result<&[u8], HostError> {
    let r = check_range(mem.len(), ptr, len)?;
    Ok(&mem[r])
}

pub fn slice_mut(mem: &mut [u8], ptr: u32, len: u64) -> Result<&mut [u8], HostError> {
    let r = check_range(mem.len(), ptr, len)?;
    Ok(&mut mem[r])
}

/// NUL-terminated UTF-8 string of at most [`MAX_STRING`] bytes including the NUL.
pub fn read_cstr(mem: &[u8], ptr: u32) -> Result<String, HostError> {
    if ptr as usize >= mem.len() {
        return Err(HostError::OutOfBoundsGuestPointer {
            ptr,
            len: 1,
            mem_size: mem.len(),
        });
    }
    let window = &mem[ptr as usize..mem.len().min(ptr as usize + MAX_STRING as usize)];
    let nul = window.iter().position(|&b| b == 0).ok_or(HostError::BadString(ptr))?;
    std::str::from_utf8(&window[..nul])
        .map(str::to_owned)
        .map_err(|_| HostError::BadString(ptr))
}

/// Payload copies across the guest boundary. Owned by one instance and
/// only touched on its thread.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CopyStats {
    pub into_guest: u64,
    pub into_guest_bytes: u64,
    pub from_guest: u64,
    pub from_guest_bytes: u64,
}

impl CopyStats {
    pub fn note_into_guest(&mut self, bytes: usize) {
        self.into_guest += 1;
        self.into_guest_bytes += bytes as u64;
    }

    pub fn note_from_guest(&mut self, bytes: usize) {
        self.from_guest += 1;
        self.from_guest_bytes += bytes as u64;
    }
}

/// Copy `len` bytes out of guest memory.
pub fn copy_from_guest(mem: &[u8], ptr: u32, len: u64, counters: &mut CopyStats) -> Result<Vec<u8>, HostError> {
    let v = slice(mem, ptr, len)?.to_vec();
    counters.note_from_guest(v.len());
    Ok(v)
}

/// Copy `bytes` into guest memory at `ptr`.
pub fn copy_into_guest(mem: &mut [u8], ptr: u32, bytes: &[u8], counters: &mut CopyStats) -> Result<(), HostError> {
    slice_mut(mem, ptr, bytes.len() as u64)?.copy_from_slice(bytes);
    counters.note_into_guest(bytes.len());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(check_range(16, 0, 16).unwrap(), 0..16);
        assert_eq!(check_range(16, 16, 0).unwrap(), 16..16);
        assert!(check_range(16, 15, 2).is_err());
        assert!(check_range(16, u32::MAX, u64::MAX).is_err());
    }

    #[test]
    fn strings() {
        let mut mem = vec![0u8; 1024];
        mem[10..15].copy_from_slice(b"hello");
        assert_eq!(read_cstr(&mem, 10).unwrap(), "hello");
        assert_eq!(read_cstr(&mem, 15).unwrap(), "");
        assert!(matches!(read_cstr(&mem, 1024), Err(HostError::OutOfBoundsGuestPointer { .. })));
        let unterminated = vec![b'a'; 600];
        assert_eq!(read_cstr(&unterminated, 0), Err(HostError::BadString(0)));
        let short = b"abc".to_vec();
        assert_eq!(read_cstr(&short, 0), Err(HostError::BadString(0)));
        mem[100] = 0xff;
        assert_eq!(read_cstr(&mem, 100), Err(HostError::BadString(100)));
    }

    #[test]
    fn counters() {
        let mut s = CopyStats::default();
        let mut mem = vec![0u8; 8];
        copy_into_guest(&mut mem, 2, &[1, 2, 3], &mut s).unwrap();
        assert!(copy_into_guest(&mut mem, 7, &[1, 2], &mut s).is_err());
        assert_eq!(copy_from_guest(&mem, 2, 3, &mut s).unwrap(), [1, 2, 3]);
        assert_eq!((s.into_guest, s.into_guest_bytes, s.from_guest, s.from_guest_bytes), (1, 3, 1, 3));
    }
}
