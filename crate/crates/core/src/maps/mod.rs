//! In-process eBPF maps shared by the VM (producer side) and the Wasm guest.

pub mod ringbuf;

use std::collections::HashMap;
use std::sync::atomic::{AtomicI32, Ordering};
use std::sync::{Arc, Mutex, MutexGuard, RwLock};

use indexmap::IndexMap;
use thiserror::Error;

pub use ringbuf::{ConsumeAction, Payload, Polled, Reservation, RingBuffer, RingError, RingStats};

use crate::elf::{MapDef, MapType};

pub const BPF_ANY: u64 = 0;
pub const BPF_NOEXIST: u64 = 1;
pub const BPF_EXIST: u64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("key not found")]
    NotFound,
    #[error("key already exists")]
    AlreadyExists,
    #[error("map is full")]
    CapacityExceeded,
    #[error("unknown map handle {0}")]
    BadHandle(i32),
    #[error("array index {0} out of range")]
    IndexOutOfRange(u32),
    #[error("expected {expected} bytes, got {got}")]
    BadSize { expected: usize, got: usize },
    #[error("unsupported update flags {0:#x}")]
    BadFlags(u64),
    #[error("unknown map command {0}")]
    BadCommand(i32),
    #[error("map type {0} is not supported")]
    Unsupported(MapType),
    #[error("operation not valid on a {0} map")]
    WrongMapType(MapType),
    #[error("ring buffer: {0}")]
    Ring(#[from] RingError),
}

impl MapError {
    /// Kernel-style errno, as returned by map helpers to eBPF programs.
    pub fn errno(&self) -> i64 {
        match self {
            MapError::NotFound => -2,
            MapError::AlreadyExists => -17,
            MapError::CapacityExceeded => -7,
            MapError::BadHandle(_) => -9,
            MapError::Ring(RingError::Busy) => -11,
            MapError::Ring(RingError::TooLarge) => -7,
            MapError::Unsupported(_) => -95,
            _ => -22,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapCmd {
    Lookup = 1,
    Update = 2,
    Delete = 3,
    GetNextKey = 4,
}

impl MapCmd {
    pub fn from_i32(cmd: i32) -> Result<MapCmd, MapError> {
        match cmd {
            1 => Ok(MapCmd::Lookup),
            2 => Ok(MapCmd::Update),
            3 => Ok(MapCmd::Delete),
            4 => Ok(MapCmd::GetNextKey),
            other => Err(MapError::BadCommand(other)),
        }
    }
}

/// Identity of a live map value, used by the VM to read and write through
/// a pointer returned from a lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueRef {
    Hash(Vec<u8>),
    Array(u32),
}

#[derive(Debug)]
enum Backing {
    Hash(Mutex<IndexMap<Vec<u8>, Vec<u8>>>),
    Array(Mutex<Vec<u8>>),
    Ring(RingBuffer),
}

#[derive(Debug)]
pub struct MapStore {
    handle: i32,
    def: MapDef,
    backing: Backing,
}

fn lock<T>(m: &Mutex<T>) -> MutexGuard<'_, T> {
    m.lock().unwrap_or_else(|e| e.into_inner())
}

fn check_len(expected: u32, got: usize) -> Result<(), MapError> {
    if expected as usize == got {
        Ok(())
    } else {
        Err(MapError::BadSize {
            expected: expected as usize,
            got,
        })
    }
}

impl MapStore {
    pub fn new(handle: i32, def: MapDef) -> Result<Self, MapError> {
        let backing = match def.map_type {
            MapType::Hash => Backing::Hash(Mutex::new(IndexMap::new())),
            MapType::Array => {
                let bytes = (def.value_size as usize)
                    .checked_mul(def.max_entries as usize)
                    .filter(|&b| b <= 1 << 30)
                    .ok_or(MapError::CapacityExceeded)?;
                Backing::Array(Mutex::new(vec![0; bytes]))
            }
            MapType::Ringbuf => Backing::Ring(RingBuffer::new(def.max_entries)?),
            MapType::PerfEventArray => return Err(MapError::Unsupported(def.map_type)),
        };
        Ok(MapStore { handle, def, backing })
    }

    pub fn handle(&self) -> i32 {
        self.handle
    }

    pub fn def(&self) -> &MapDef {
        &self.def
    }

    pub fn ringbuf(&self) -> Option<&RingBuffer> {
        match &self.backing {
            Backing::Ring(r) => Some(r),
            _ => None,
        }
    }

    fn array_index(&self, key: &[u8]) -> Result<u32, MapError> {
        check_len(4, key.len())?;
        let i = u32::from_le_bytes(key.try_into().unwrap());
        if i >= self.def.max_entries {
            return Err(MapError::IndexOutOfRange(i));
        }
        Ok(i)
    }

    fn slot(&self, i: u32) -> std::ops::Range<usize> {
        let vs = self.def.value_size as usize;
        i as usize * vs..(i as usize + 1) * vs
    }

    pub fn lookup(&self, key: &[u8], value_out: &mut [u8]) -> Result<(), MapError> {
        check_len(self.def.value_size, value_out.len())?;
        match &self.backing {
            Backing::Hash(h) => {
                check_len(self.def.key_size, key.len())?;
                let g = lock(h);
                let v = g.get(key).ok_or(MapError::NotFound)?;
                value_out.copy_from_slice(v);
                Ok(())
            }
            Backing::Array(a) => {
                let i = self.array_index(key)?;
                value_out.copy_from_slice(&lock(a)[self.slot(i)]);
                Ok(())
            }
            Backing::Ring(_) => Err(MapError::WrongMapType(self.def.map_type)),
        }
    }

    pub fn update(&self, key: &[u8], value: &[u8], flags: u64) -> Result<(), MapError> {
        if flags > BPF_EXIST {
            return Err(MapError::BadFlags(flags));
        }
        check_len(self.def.value_size, value.len())?;
        match &self.backing {
            Backing::Hash(h) => {
                check_len(self.def.key_size, key.len())?;
                let mut g = lock(h);
                let present = g.contains_key(key);
                match (flags, present) {
                    (BPF_NOEXIST, true) => return Err(MapError::AlreadyExists),
                    (BPF_EXIST, false) => return Err(MapError::NotFound),
                    _ => {}
                }
                if !present && g.len() >= self.def.max_entries as usize {
                    return Err(MapError::CapacityExceeded);
                }
                match g.get_mut(key) {
                    Some(v) => v.copy_from_slice(value),
                    None => {
                        g.insert(key.to_vec(), value.to_vec());
                    }
                }
                Ok(())
            }
            Backing::Array(a) => {
                let i = self.array_index(key)?;
                if flags == BPF_NOEXIST {
                    return Err(MapError::AlreadyExists);
                }
                lock(a)[self.slot(i)].copy_from_slice(value);
                Ok(())
            }
            Backing::Ring(_) => Err(MapError::WrongMapType(self.def.map_type)),
        }
    }

    pub fn delete(&self, key: &[u8]) -> Result<(), MapError> {
        match &self.backing {
            Backing::Hash(h) => {
                check_len(self.def.key_size, key.len())?;
                lock(h).shift_remove(key).map(|_| ()).ok_or(MapError::NotFound)
            }
            _ => Err(MapError::WrongMapType(self.def.map_type)),
        }
    }

    /// First key when `key` is `None` or absent, else the key after it.
    pub fn get_next_key(&self, key: Option<&[u8]>, next_out: &mut [u8]) -> Result<(), MapError> {
        check_len(self.def.key_size, next_out.len())?;
        match &self.backing {
            Backing::Hash(h) => {
                let g = lock(h);
                let next = match key {
                    None => 0,
                    Some(k) => {
                        check_len(self.def.key_size, k.len())?;
                        g.get_index_of(k).map_or(0, |i| i + 1)
                    }
                };
                let (k, _) = g.get_index(next).ok_or(MapError::NotFound)?;
                next_out.copy_from_slice(k);
                Ok(())
            }
            Backing::Array(_) => {
                let next = match key {
                    None => 0,
                    Some(k) => {
                        check_len(4, k.len())?;
                        let i = u32::from_le_bytes(k.try_into().unwrap());
                        if i >= self.def.max_entries {
                            0
                        } else {
                            i + 1
                        }
                    }
                };
                if next >= self.def.max_entries {
                    return Err(MapError::NotFound);
                }
                next_out.copy_from_slice(&next.to_le_bytes());
                Ok(())
            }
            Backing::Ring(_) => Err(MapError::WrongMapType(self.def.map_type)),
        }
    }

    pub fn len(&self) -> usize {
        match &self.backing {
            Backing::Hash(h) => lock(h).len(),
            Backing::Array(_) => self.def.max_entries as usize,
            Backing::Ring(_) => 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Resolve a key to a live value, for pointer-returning lookups.
    pub fn lookup_ref(&self, key: &[u8]) -> Result<Option<ValueRef>, MapError> {
        match &self.backing {
            Backing::Hash(h) => {
                check_len(self.def.key_size, key.len())?;
                Ok(lock(h).contains_key(key).then(|| ValueRef::Hash(key.to_vec())))
            }
            Backing::Array(_) => Ok(self.array_index(key).ok().map(ValueRef::Array)),
            Backing::Ring(_) => Err(MapError::WrongMapType(self.def.map_type)),
        }
    }

    fn with_value<R>(&self, vref: &ValueRef, f: impl FnOnce(&mut [u8]) -> R) -> Result<R, MapError> {
        match (&self.backing, vref) {
            (Backing::Hash(h), ValueRef::Hash(k)) => {
                let mut g = lock(h);
                let v = g.get_mut(k.as_slice()).ok_or(MapError::NotFound)?;
                Ok(f(v))
            }
            (Backing::Array(a), ValueRef::Array(i)) => {
                let range = self.slot(*i);
                Ok(f(&mut lock(a)[range]))
            }
            _ => Err(MapError::WrongMapType(self.def.map_type)),
        }
    }

    pub fn value_read(&self, vref: &ValueRef, offset: usize, out: &mut [u8]) -> Result<(), MapError> {
        self.with_value(vref, |v| {
            let src = v.get(offset..offset + out.len()).ok_or(MapError::BadSize {
                expected: v.len(),
                got: offset + out.len(),
            })?;
            out.copy_from_slice(src);
            Ok(())
        })?
    }

    pub fn value_write(&self, vref: &ValueRef, offset: usize, bytes: &[u8]) -> Result<(), MapError> {
        self.with_value(vref, |v| {
            let len = v.len();
            let dst = v.get_mut(offset..offset + bytes.len()).ok_or(MapError::BadSize {
                expected: len,
                got: offset + bytes.len(),
            })?;
            dst.copy_from_slice(bytes);
            Ok(())
        })?
    }

    /// Snapshot of all entries in iteration order.
    pub fn entries(&self) -> Vec<(Vec<u8>, Vec<u8>)> {
        match &self.backing {
            Backing::Hash(h) => lock(h).iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
            Backing::Array(a) => {
                let g = lock(a);
                (0..self.def.max_entries)
                    .map(|i| (i.to_le_bytes().to_vec(), g[self.slot(i)].to_vec()))
                    .collect()
            }
            Backing::Ring(_) => Vec::new(),
        }
    }
}

/// One map command with its in/out buffers.
#[derive(Debug)]
pub enum MapOp<'a> {
    Lookup { key: &'a [u8], value_out: &'a mut [u8] },
    Update { key: &'a [u8], value: &'a [u8], flags: u64 },
    Delete { key: &'a [u8] },
    GetNextKey { key: Option<&'a [u8]>, next_out: &'a mut [u8] },
}

/// Handle-indexed set of live maps.
#[derive(Debug)]
pub struct MapRegistry {
    maps: RwLock<HashMap<i32, Arc<MapStore>>>,
    next: AtomicI32,
}

impl Default for MapRegistry {
    fn default() -> Self {
        Self::new()
    }
}

impl MapRegistry {
    pub fn new() -> Self {
        MapRegistry {
            maps: RwLock::new(HashMap::new()),
            next: AtomicI32::new(1),
        }
    }

    pub fn create(&self, def: MapDef) -> Result<i32, MapError> {
        let handle = self.next.fetch_add(1, Ordering::Relaxed);
        let store = Arc::new(MapStore::new(handle, def)?);
        self.maps.write().unwrap_or_else(|e| e.into_inner()).insert(handle, store);
        Ok(handle)
    }

    pub fn get(&self, handle: i32) -> Option<Arc<MapStore>> {
        self.maps.read().unwrap_or_else(|e| e.into_inner()).get(&handle).cloned()
    }

    pub fn remove(&self, handle: i32) -> Option<Arc<MapStore>> {
        self.maps.write().unwrap_or_else(|e| e.into_inner()).remove(&handle)
    }

    pub fn map_operate(&self, handle: i32, op: MapOp<'_>) -> Result<(), MapError> {
        let map = self.get(handle).ok_or(MapError::BadHandle(handle))?;
        match op {
            MapOp::Lookup { key, value_out } => map.lookup(key, value_out),
            MapOp::Update { key, value, flags } => map.update(key, value, flags),
            MapOp::Delete { key } => map.delete(key),
            MapOp::GetNextKey { key, next_out } => map.get_next_key(key, next_out),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn def(map_type: MapType, key: u32, value: u32, max: u32) -> MapDef {
        MapDef {
            name: "m".into(),
            map_type,
            key_size: key,
            value_size: value,
            max_entries: max,
            btf_key_type_id: None,
            btf_value_type_id: None,
        }
    }

    #[test]
    fn hash_roundtrip() {
        let m = MapStore::new(1, def(MapType::Hash, 4, 8, 4)).unwrap();
        let mut out = [0u8; 8];
        assert_eq!(m.lookup(&[1, 0, 0, 0], &mut out), Err(MapError::NotFound));
        m.update(&[1, 0, 0, 0], &[7; 8], BPF_ANY).unwrap();
        m.lookup(&[1, 0, 0, 0], &mut out).unwrap();
        assert_eq!(out, [7; 8]);
        assert_eq!(m.update(&[1, 0, 0, 0], &[8; 8], BPF_NOEXIST), Err(MapError::AlreadyExists));
        assert_eq!(m.update(&[2, 0, 0, 0], &[8; 8], BPF_EXIST), Err(MapError::NotFound));
        assert_eq!(m.update(&[2, 0, 0, 0], &[8; 8], 3), Err(MapError::BadFlags(3)));
    }

    #[test]
    fn hash_capacity() {
        let m = MapStore::new(1, def(MapType::Hash, 1, 1, 2)).unwrap();
        m.update(&[1], &[1], 0).unwrap();
        m.update(&[2], &[1], 0).unwrap();
        assert_eq!(m.update(&[3], &[1], 0), Err(MapError::CapacityExceeded));
        m.update(&[2], &[9], 0).unwrap();
    }

    #[test]
    fn hash_iteration_is_insertion_order() {
        let m = MapStore::new(1, def(MapType::Hash, 1, 1, 8)).unwrap();
        for k in [5u8, 3, 9] {
            m.update(&[k], &[0], 0).unwrap();
        }
        let mut k = [0u8];
        m.get_next_key(None, &mut k).unwrap();
        assert_eq!(k, [5]);
        let cur = k;
        m.get_next_key(Some(&cur), &mut k).unwrap();
        assert_eq!(k, [3]);
        m.get_next_key(Some(&[9]), &mut k).unwrap_err();
        m.get_next_key(Some(&[42]), &mut k).unwrap();
        assert_eq!(k, [5]);
        m.delete(&[5]).unwrap();
        m.get_next_key(None, &mut k).unwrap();
        assert_eq!(k, [3]);
    }

    #[test]
    fn array_rules() {
        let m = MapStore::new(1, def(MapType::Array, 4, 4, 2)).unwrap();
        let mut out = [9u8; 4];
        m.lookup(&0u32.to_le_bytes(), &mut out).unwrap();
        assert_eq!(out, [0; 4]);
        m.update(&1u32.to_le_bytes(), &[1, 2, 3, 4], 0).unwrap();
        assert_eq!(
            m.update(&2u32.to_le_bytes(), &[1, 2, 3, 4], 0),
            Err(MapError::IndexOutOfRange(2))
        );
        assert!(m.delete(&0u32.to_le_bytes()).is_err());
        let mut k = [0u8; 4];
        m.get_next_key(Some(&1u32.to_le_bytes()), &mut k).unwrap_err();
        m.get_next_key(None, &mut k).unwrap();
        assert_eq!(k, 0u32.to_le_bytes());
    }

    #[test]
    fn value_refs_write_through() {
        let m = MapStore::new(1, def(MapType::Array, 4, 8, 2)).unwrap();
        let r = m.lookup_ref(&1u32.to_le_bytes()).unwrap().unwrap();
        m.value_write(&r, 4, &[1, 2]).unwrap();
        let mut out = [0u8; 8];
        m.lookup(&1u32.to_le_bytes(), &mut out).unwrap();
        assert_eq!(out, [0, 0, 0, 0, 1, 2, 0, 0]);
        assert!(m.value_write(&r, 7, &[1, 2]).is_err());
    }

    #[test]
    fn perf_event_array_unsupported() {
        assert!(matches!(
            MapStore::new(1, def(MapType::PerfEventArray, 4, 4, 4)),
            Err(MapError::Unsupported(MapType::PerfEventArray))
        ));
    }

    #[test]
    fn registry_handles() {
        let reg = MapRegistry::new();
        let a = reg.create(def(MapType::Hash, 4, 4, 4)).unwrap();
        let b = reg.create(def(MapType::Hash, 4, 4, 4)).unwrap();
        assert!(b > a && a > 0);
        reg.remove(a);
        let mut out = [0u8; 4];
        assert_eq!(
            reg.map_operate(a, MapOp::Lookup { key: &[0; 4], value_out: &mut out }),
            Err(MapError::BadHandle(a))
        );
        assert_eq!(MapCmd::from_i32(9), Err(MapError::BadCommand(9)));
    }
}
