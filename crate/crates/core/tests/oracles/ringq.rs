//! Queue model of a BPF ring buffer: a FIFO of records with byte accounting.

use std::collections::VecDeque;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum State {
    Reserved,
    Submitted,
    Discarded,
}

#[derive(Debug, Clone)]
pub struct Rec {
    pub id: u64,
    pub state: State,
    pub footprint: u64,
    pub payload: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reserve {
    Ok(u64),
    ZeroLength,
    TooLarge,
    Full,
}

#[derive(Debug)]
pub struct RingQueue {
    capacity: u64,
    queue: VecDeque<Rec>,
    next_id: u64,
}

impl RingQueue {
    pub fn new(capacity: u64) -> Self {
        RingQueue {
            capacity,
            queue: VecDeque::new(),
            next_id: 0,
        }
    }

    /// 8-byte header plus the payload rounded up to a multiple of 8.
    pub fn footprint(len: u64) -> u64 {
        8 + (len + 7) / 8 * 8
    }

    pub fn used(&self) -> u64 {
        self.queue.iter().map(|r| r.footprint).sum()
    }

    pub fn reserve(&mut self, payload: Vec<u8>) -> Reserve {
        let len = payload.len() as u64;
        if len == 0 {
            return Reserve::ZeroLength;
        }
        if len + 8 > self.capacity {
            return Reserve::TooLarge;
        }
        let fp = Self::footprint(len);
        if self.used() + fp > self.capacity {
            return Reserve::Full;
        }
        let id = self.next_id;
        self.next_id += 1;
        self.queue.push_back(Rec {
            id,
            state: State::Reserved,
            footprint: fp,
            payload,
        });
        Reserve::Ok(id)
    }

    /// Returns false when `id` is not an outstanding reservation.
    pub fn commit(&mut self, id: u64, discard: bool) -> bool {
        match self.queue.iter_mut().find(|r| r.id == id && r.state == State::Reserved) {
            Some(r) => {
                r.state = if discard { State::Discarded } else { State::Submitted };
                true
            }
            None => false,
        }
    }

    /// Next submitted record, dropping discarded ones; stops at a reserved one.
    pub fn consume(&mut self) -> Option<Vec<u8>> {
        while let Some(front) = self.queue.front() {
            match front.state {
                State::Reserved => return None,
                State::Discarded => {
                    self.queue.pop_front();
                }
                State::Submitted => return self.queue.pop_front().map(|r| r.payload),
            }
        }
        None
    }

    pub fn outstanding(&self) -> Vec<u64> {
        self.queue.iter().filter(|r| r.state == State::Reserved).map(|r| r.id).collect()
    }
}
