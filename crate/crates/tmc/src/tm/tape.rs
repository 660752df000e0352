//! The simulator's tape: unbounded in both directions, blank (`a`) everywhere
//! it has never been written.

use super::Sym;

/// A two-symbol tape with a head.
///
/// Cells are addressed by signed logical positions; position 0 is where the
/// head starts. Storage is a single contiguous buffer that grows on demand in
/// either direction, so reads and writes are O(1) and growth is amortized
/// O(1).
#[derive(Clone, Debug)]
pub struct Tape {
    /// Bit per cell: 0 = `a`, 1 = `b`.
    cells: Vec<u8>,
    /// Buffer index of logical position 0.
    origin: usize,
    /// Buffer index of the head.
    head: usize,
}

impl Tape {
    pub fn new() -> Tape {
        Tape {
            cells: vec![0],
            origin: 0,
            head: 0,
        }
    }

    /// Head position in logical coordinates.
    pub fn head(&self) -> i64 {
        self.head as i64 - self.origin as i64
    }

    /// The symbol at logical position `pos` (blank outside the buffer).
    pub fn read(&self, pos: i64) -> Sym {
        let idx = pos + self.origin as i64;
        if idx < 0 || idx as usize >= self.cells.len() {
            Sym::A
        } else {
            Sym::from_bit(self.cells[idx as usize])
        }
    }

    pub fn write(&mut self, pos: i64, sym: Sym) {
        let idx = self.ensure(pos);
        self.cells[idx] = sym.bit();
    }

    /// The smallest logical range `[lo, hi)` containing every `b` cell.
    /// Returns `None` for an all-blank tape.
    pub fn nonblank_range(&self) -> Option<(i64, i64)> {
        let first = self.cells.iter().position(|&c| c != 0)?;
        let last = self.cells.iter().rposition(|&c| c != 0).unwrap();
        Some((
            first as i64 - self.origin as i64,
            last as i64 + 1 - self.origin as i64,
        ))
    }

    /// Number of `b` cells on the tape.
    pub fn count_b(&self) -> usize {
        self.cells.iter().filter(|&&c| c != 0).count()
    }

    /// Materializes `pos` in the buffer and returns its index.
    fn ensure(&mut self, pos: i64) -> usize {
        let mut idx = pos + self.origin as i64;
        if idx < 0 {
            let grow = (-idx) as usize + 64;
            let mut bigger = vec![0u8; self.cells.len() + grow];
            bigger[grow..].copy_from_slice(&self.cells);
            self.cells = bigger;
            self.origin += grow;
            self.head += grow;
            idx += grow as i64;
        }
        let idx = idx as usize;
        if idx >= self.cells.len() {
            self.cells.resize(idx + 1, 0);
        }
        idx
    }

    // ---- simulator internals ----

    pub(super) fn read_at_head(&self) -> u8 {
        self.cells[self.head]
    }

    pub(super) fn write_at_head(&mut self, bit: u8) {
        self.cells[self.head] = bit;
    }

    pub(super) fn step_left(&mut self) {
        if self.head == 0 {
            let grow = 64.max(self.cells.len() / 2);
            let mut bigger = vec![0u8; self.cells.len() + grow];
            bigger[grow..].copy_from_slice(&self.cells);
            self.cells = bigger;
            self.origin += grow;
            self.head += grow;
        }
        self.head -= 1;
    }

    pub(super) fn step_right(&mut self) {
        self.head += 1;
        if self.head == self.cells.len() {
            // Chunked growth keeps the hot loop's bound check cheap.
            self.cells.resize(self.cells.len() + 64.max(self.cells.len() / 2), 0);
        }
    }
}

impl Default for Tape {
    fn default() -> Self {
        Tape::new()
    }
}

/// Logical equality: same head position and same symbol at every position.
impl PartialEq for Tape {
    fn eq(&self, other: &Tape) -> bool {
        if self.head() != other.head() {
            return false;
        }
        let lo = -(self.origin.max(other.origin) as i64);
        let hi = (self.cells.len() - self.origin).max(other.cells.len() - other.origin) as i64;
        (lo..hi).all(|p| self.read(p) == other.read(p))
    }
}

impl Eq for Tape {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blank_everywhere_initially() {
        let t = Tape::new();
        assert_eq!(t.read(-1000), Sym::A);
        assert_eq!(t.read(0), Sym::A);
        assert_eq!(t.read(1000), Sym::A);
        assert_eq!(t.nonblank_range(), None);
        assert_eq!(t.head(), 0);
    }

    #[test]
    fn writes_persist_in_both_directions() {
        let mut t = Tape::new();
        t.write(-5, Sym::B);
        t.write(7, Sym::B);
        assert_eq!(t.read(-5), Sym::B);
        assert_eq!(t.read(7), Sym::B);
        assert_eq!(t.read(0), Sym::A);
        assert_eq!(t.nonblank_range(), Some((-5, 8)));
        assert_eq!(t.count_b(), 2);
    }

    #[test]
    fn equality_ignores_buffer_layout() {
        let mut a = Tape::new();
        let mut b = Tape::new();
        a.write(3, Sym::B);
        // Force different internal origins in `b` by walking left first.
        for _ in 0..10 {
            b.step_left();
        }
        for _ in 0..10 {
            b.step_right();
        }
        b.write(3, Sym::B);
        assert_eq!(a, b);
        b.write(-20, Sym::B);
        assert_ne!(a, b);
    }

    #[test]
    fn head_walk_round_trip() {
        let mut t = Tape::new();
        for _ in 0..100 {
            t.step_left();
        }
        assert_eq!(t.head(), -100);
        for _ in 0..200 {
            t.step_right();
        }
        assert_eq!(t.head(), 100);
    }
}
