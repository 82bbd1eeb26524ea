//! Kernel-format BPF ring buffer.
//!
//! Records are an 8-byte header (little-endian length word with BUSY and
//! DISCARD flag bits, then 4 reserved bytes) followed by the payload padded
//! to 8 bytes. Positions are free-running u64 byte counters; the data array
//! is indexed with `pos & mask`.

use std::collections::BTreeSet;
use std::sync::{Condvar, Mutex, MutexGuard};
use std::time::{Duration, Instant};

use thiserror::Error;

pub const BUSY_BIT: u32 = 1 << 31;
pub const DISCARD_BIT: u32 = 1 << 30;
pub const HDR_SIZE: u64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring buffer size must be a power of two of at least 16 bytes")]
    BadSize,
    #[error("record length must be non-zero")]
    ZeroLength,
    #[error("record too large for the ring")]
    TooLarge,
    #[error("not enough free space in the ring")]
    Busy,
    #[error("reservation already submitted or discarded")]
    DoubleSubmit,
    #[error("access outside the reserved record")]
    OutOfRange,
}

/// An outstanding record, identified by the position of its header.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Reservation {
    pub pos: u64,
    pub len: u32,
}

/// Bytes consumed by a record with `len` payload bytes.
pub fn record_footprint(len: u64) -> u64 {
    HDR_SIZE + len.div_ceil(8) * 8
}

/// A record payload as at most two slices (the second is non-empty when the
/// record wraps around the end of the data array).
#[derive(Debug, Clone, Copy)]
pub struct Payload<'a> {
    pub first: &'a [u8],
    pub second: &'a [u8],
}

impl Payload<'_> {
    pub fn len(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Copy into `dst`, which must be exactly `len()` bytes.
    pub fn copy_to(&self, dst: &mut [u8]) {
        let (a, b) = dst.split_at_mut(self.first.len());
        a.copy_from_slice(self.first);
        b.copy_from_slice(self.second);
    }

    pub fn to_vec(&self) -> Vec<u8> {
        let mut v = Vec::with_capacity(self.len());
        v.extend_from_slice(self.first);
        v.extend_from_slice(self.second);
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConsumeAction {
    Continue,
    Stop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RingStats {
    pub producer_pos: u64,
    pub consumer_pos: u64,
    pub outstanding: usize,
}

#[derive(Debug)]
struct Inner {
    data: Vec<u8>,
    producer: u64,
    consumer: u64,
    outstanding: BTreeSet<u64>,
}

#[derive(Debug)]
pub struct RingBuffer {
    size: u64,
    mask: u64,
    inner: Mutex<Inner>,
    ready: Condvar,
}

/// Outcome of taking one record off the ring.
#[derive(Debug, PartialEq, Eq)]
pub enum Polled<R> {
    Empty,
    Record(R),
}

impl Inner {
    fn write_at(&mut self, mask: u64, pos: u64, bytes: &[u8]) {
        let size = self.data.len();
        let start = (pos & mask) as usize;
        let first = bytes.len().min(size - start);
        self.data[start..start + first].copy_from_slice(&bytes[..first]);
        self.data[..bytes.len() - first].copy_from_slice(&bytes[first..]);
    }

    fn read_at(&self, mask: u64, pos: u64, out: &mut [u8]) {
        let size = self.data.len();
        let start = (pos & mask) as usize;
        let first = out.len().min(size - start);
        let n = out.len();
        out[..first].copy_from_slice(&self.data[start..start + first]);
        out[first..].copy_from_slice(&self.data[..n - first]);
    }

    fn header(&self, mask: u64, pos: u64) -> u32 {
        let at = (pos & mask) as usize;
        u32::from_le_bytes(self.data[at..at + 4].try_into().unwrap())
    }

    fn set_header(&mut self, mask: u64, pos: u64, word: u32) {
        let at = (pos & mask) as usize;
        self.data[at..at + 4].copy_from_slice(&word.to_le_bytes());
    }

    fn payload(&self, mask: u64, pos: u64, len: usize) -> Payload<'_> {
        let size = self.data.len();
        let start = ((pos + HDR_SIZE) & mask) as usize;
        let first = len.min(size - start);
        Payload {
            first: &self.data[start..start + first],
            second: &self.data[..len - first],
        }
    }
}

impl RingBuffer {
    pub fn new(size: u32) -> Result<Self, RingError> {
        if !size.is_power_of_two() || size < 16 {
            return Err(RingError::BadSize);
        }
        Ok(RingBuffer {
            size: size as u64,
            mask: size as u64 - 1,
            inner: Mutex::new(Inner {
                data: vec![0; size as usize],
                producer: 0,
                consumer: 0,
                outstanding: BTreeSet::new(),
            }),
            ready: Condvar::new(),
        })
    }

    fn lock(&self) -> MutexGuard<'_, Inner> {
        // A panicking producer cannot leave the counters inconsistent: every
        // update is a single assignment made after all checks.
        self.inner.lock().unwrap_or_else(|e| e.into_inner())
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn stats(&self) -> RingStats {
        let g = self.lock();
        RingStats {
            producer_pos: g.producer,
            consumer_pos: g.consumer,
            outstanding: g.outstanding.len(),
        }
    }

    /// Raw copy of the data array, for byte-level inspection.
    pub fn snapshot(&self) -> Vec<u8> {
        self.lock().data.clone()
    }

    pub fn reserve(&self, len: u32) -> Result<Reservation, RingError> {
        if len == 0 {
            return Err(RingError::ZeroLength);
        }
        if len as u64 > self.size - HDR_SIZE || len & (BUSY_BIT | DISCARD_BIT) != 0 {
            return Err(RingError::TooLarge);
        }
        let need = record_footprint(len as u64);
        let mut g = self.lock();
        if g.producer - g.consumer + need > self.size {
            return Err(RingError::Busy);
        }
        let pos = g.producer;
        let mut hdr = [0u8; 8];
        hdr[..4].copy_from_slice(&(len | BUSY_BIT).to_le_bytes());
        g.write_at(self.mask, pos, &hdr);
        g.producer = pos + need;
        g.outstanding.insert(pos);
        Ok(Reservation { pos, len })
    }

    /// Write into the payload of an outstanding reservation.
    pub fn write(&self, res: &Reservation, offset: usize, bytes: &[u8]) -> Result<(), RingError> {
        if offset.checked_add(bytes.len()).is_none_or(|end| end > res.len as usize) {
            return Err(RingError::OutOfRange);
        }
        let mut g = self.lock();
        if !g.outstanding.contains(&res.pos) {
            return Err(RingError::DoubleSubmit);
        }
        g.write_at(self.mask, res.pos + HDR_SIZE + offset as u64, bytes);
        Ok(())
    }

    pub fn read(&self, res: &Reservation, offset: usize, out: &mut [u8]) -> Result<(), RingError> {
        if offset.checked_add(out.len()).is_none_or(|end| end > res.len as usize) {
            return Err(RingError::OutOfRange);
        }
        let g = self.lock();
        if !g.outstanding.contains(&res.pos) {
            return Err(RingError::DoubleSubmit);
        }
        g.read_at(self.mask, res.pos + HDR_SIZE + offset as u64, out);
        Ok(())
    }

    fn commit(&self, res: &Reservation, discard: bool) -> Result<(), RingError> {
        let mut g = self.lock();
        if !g.outstanding.remove(&res.pos) {
            return Err(RingError::DoubleSubmit);
        }
        let word = res.len | if discard { DISCARD_BIT } else { 0 };
        g.set_header(self.mask, res.pos, word);
        drop(g);
        self.ready.notify_all();
        Ok(())
    }

    pub fn submit(&self, res: &Reservation) -> Result<(), RingError> {
        self.commit(res, false)
    }

    pub fn discard(&self, res: &Reservation) -> Result<(), RingError> {
        self.commit(res, true)
    }

    /// Reserve, copy and submit in one step.
    pub fn output(&self, bytes: &[u8]) -> Result<(), RingError> {
        let len = u32::try_from(bytes.len()).map_err(|_| RingError::TooLarge)?;
        let res = self.reserve(len)?;
        self.write(&res, 0, bytes)?;
        self.submit(&res)
    }

    /// Take the next committed record, skipping discarded ones. `f` sees the
    /// payload while the ring is locked; the consumer position advances past
    /// the record before this returns.
    pub fn poll_one<R>(&self, f: impl FnOnce(Payload<'_>) -> R) -> Polled<R> {
        let mut g = self.lock();
        loop {
            if g.consumer == g.producer {
                return Polled::Empty;
            }
            let pos = g.consumer;
            let word = g.header(self.mask, pos);
            if word & BUSY_BIT != 0 {
                return Polled::Empty;
            }
            let len = word & !(BUSY_BIT | DISCARD_BIT);
            let next = pos + record_footprint(len as u64);
            if word & DISCARD_BIT != 0 {
                g.consumer = next;
                continue;
            }
            let r = f(g.payload(self.mask, pos, len as usize));
            g.consumer = next;
            return Polled::Record(r);
        }
    }

    /// Deliver committed records in order until the ring is empty, a BUSY
    /// record is reached, or `sink` asks to stop. The sink runs without the
    /// ring locked.
    pub fn consume(&self, mut sink: impl FnMut(&[u8]) -> ConsumeAction) -> usize {
        let mut delivered = 0;
        loop {
            match self.poll_one(|p| p.to_vec()) {
                Polled::Empty => return delivered,
                Polled::Record(bytes) => {
                    delivered += 1;
                    if sink(&bytes) == ConsumeAction::Stop {
                        return delivered;
                    }
                }
            }
        }
    }

    /// Whether a committed (submitted or discarded) record is at the consumer position.
    pub fn has_committed(&self) -> bool {
        let g = self.lock();
        g.consumer != g.producer && g.header(self.mask, g.consumer) & BUSY_BIT == 0
    }

    /// Block until a committed record is available or `timeout` passes.
    pub fn wait(&self, timeout: Duration) -> bool {
        let deadline = Instant::now() + timeout;
        let mut g = self.lock();
        loop {
            if g.consumer != g.producer && g.header(self.mask, g.consumer) & BUSY_BIT == 0 {
                return true;
            }
            let now = Instant::now();
            if now >= deadline {
                return false;
            }
            g = self
                .ready
                .wait_timeout(g, deadline - now)
                .unwrap_or_else(|e| e.into_inner())
                .0;
        }
    }

    /// Wake any waiter without producing data.
    pub fn notify(&self) {
        self.ready.notify_all();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reserve_arithmetic() {
        let rb = RingBuffer::new(4096).unwrap();
        rb.reserve(5).unwrap();
        assert_eq!(rb.stats().producer_pos, 16);
        assert_eq!(rb.reserve(4096), Err(RingError::TooLarge));
        assert_eq!(rb.reserve(0), Err(RingError::ZeroLength));
        assert!(RingBuffer::new(100).is_err());
    }

    #[test]
    fn header_layout() {
        let rb = RingBuffer::new(64).unwrap();
        let r = rb.reserve(3).unwrap();
        let snap = rb.snapshot();
        assert_eq!(&snap[..4], &(3 | BUSY_BIT).to_le_bytes());
        rb.write(&r, 0, b"abc").unwrap();
        rb.discard(&r).unwrap();
        let snap = rb.snapshot();
        assert_eq!(&snap[..4], &(3 | DISCARD_BIT).to_le_bytes());
        assert_eq!(&snap[8..11], b"abc");
    }

    #[test]
    fn fill_then_busy() {
        let rb = RingBuffer::new(64).unwrap();
        for _ in 0..4 {
            rb.reserve(8).unwrap();
        }
        assert_eq!(rb.reserve(8), Err(RingError::Busy));
    }

    #[test]
    fn submit_discard_consume() {
        let rb = RingBuffer::new(128).unwrap();
        let a = rb.reserve(4).unwrap();
        rb.write(&a, 0, &[1, 2, 3, 4]).unwrap();
        rb.submit(&a).unwrap();
        assert_eq!(rb.submit(&a), Err(RingError::DoubleSubmit));
        let b = rb.reserve(4).unwrap();
        rb.discard(&b).unwrap();
        let mut got = Vec::new();
        assert_eq!(rb.consume(|p| {
            got.push(p.to_vec());
            ConsumeAction::Continue
        }), 1);
        assert_eq!(got, vec![vec![1, 2, 3, 4]]);
        let s = rb.stats();
        assert_eq!(s.consumer_pos, 32);
        assert_eq!(s.consumer_pos, s.producer_pos);
    }

    #[test]
    fn busy_record_blocks_later_ones() {
        let rb = RingBuffer::new(128).unwrap();
        let a = rb.reserve(8).unwrap();
        rb.output(b"later!!!").unwrap();
        assert_eq!(rb.consume(|_| ConsumeAction::Continue), 0);
        rb.submit(&a).unwrap();
        assert_eq!(rb.consume(|_| ConsumeAction::Continue), 2);
    }

    #[test]
    fn stop_consumes_current_record() {
        let rb = RingBuffer::new(128).unwrap();
        rb.output(b"one").unwrap();
        rb.output(b"two").unwrap();
        assert_eq!(rb.consume(|_| ConsumeAction::Stop), 1);
        assert_eq!(rb.consume(|p| {
            assert_eq!(p, b"two");
            ConsumeAction::Continue
        }), 1);
    }

    #[test]
    fn wraparound_payload() {
        let rb = RingBuffer::new(32).unwrap();
        rb.output(&[0u8; 8]).unwrap();
        assert_eq!(rb.consume(|_| ConsumeAction::Continue), 1);
        // Header at 16, payload 24..40 wraps to the start.
        let data: Vec<u8> = (0..16).collect();
        rb.output(&data).unwrap();
        let seen = rb.poll_one(|p| {
            assert_eq!(p.first.len(), 8);
            assert_eq!(p.second.len(), 8);
            p.to_vec()
        });
        assert_eq!(seen, Polled::Record(data));
    }

    #[test]
    fn wait_times_out() {
        let rb = RingBuffer::new(64).unwrap();
        let t = Instant::now();
        assert!(!rb.wait(Duration::from_millis(10)));
        assert!(t.elapsed() >= Duration::from_millis(10));
        rb.output(b"x").unwrap();
        assert!(rb.wait(Duration::from_millis(10)));
    }
}
