/// Portable 64-bit generator: an MMIX linear congruential sequence fed
/// through a 32-slot Bays–Durham shuffle table.
///
/// The algorithm is fixed so that test vectors are reproducible on every
/// platform and in other languages:
///
/// ```text
/// step(s)  = s * 6364136223846793005 + 1442695040888963407   (mod 2^64)
/// init:    s = seed; repeat 8 times: s = step(s)
///          table[i] = s = step(s)  for i in 0..32
///          last     = s = step(s)
/// next():  j = last >> 59
///          out = table[j]; table[j] = s = step(s); last = out
///          return out
/// uniform in [0,1): (next() >> 11) * 2^-53
/// ```
#[derive(Clone, Debug)]
pub struct ShuffledLcg {
    state: u64,
    table: [u64; TABLE_SIZE],
    last: u64,
}

const TABLE_SIZE: usize = 32;
const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;
const WARMUP: usize = 8;

impl ShuffledLcg {
    pub fn new(seed: u64) -> Self {
        let mut state = seed;
        for _ in 0..WARMUP {
            state = step(state);
        }
        let mut table = [0u64; TABLE_SIZE];
        for slot in table.iter_mut() {
            state = step(state);
            *slot = state;
        }
        state = step(state);
        ShuffledLcg {
            state,
            table,
            last: state,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let j = (self.last >> 59) as usize;
        let out = self.table[j];
        self.state = step(self.state);
        self.table[j] = self.state;
        self.last = out;
        out
    }

    /// Uniform double in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform double in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in `0..bound` (bound > 0), by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

#[inline]
fn step(s: u64) -> u64 {
    s.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT)
}
