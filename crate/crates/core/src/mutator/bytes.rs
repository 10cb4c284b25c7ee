//! Byte-level baseline: AFL-style havoc over raw program bytes, with the
//! token texts as a dictionary. Used only for comparison campaigns.

use rand::Rng;

const INTERESTING_8: [i8; 9] = [-128, -1, 0, 1, 16, 32, 64, 100, 127];
const INTERESTING_16: [i16; 10] = [-32768, -129, 128, 255, 256, 512, 1000, 1024, 4096, 32767];
const INTERESTING_32: [i32; 8] = [
    -2147483648,
    -100663046,
    -32769,
    32768,
    65535,
    65536,
    100663045,
    2147483647,
];
const ARITH_MAX: u32 = 35;
const HAVOC_STACK_POW2: u32 = 7;
const HAVOC_BLK_SMALL: usize = 32;
const HAVOC_BLK_MEDIUM: usize = 128;
const HAVOC_BLK_LARGE: usize = 1500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ByteOp {
    FlipBit,
    Interesting8,
    Interesting16,
    Interesting32,
    SubByte,
    AddByte,
    SubWord,
    AddWord,
    SubDword,
    AddDword,
    RandomByte,
    DeleteBytes,
    InsertBlock,
    OverwriteBlock,
    OverwriteExtra,
    InsertExtra,
}

impl ByteOp {
    const BASE: [ByteOp; 15] = [
        ByteOp::FlipBit,
        ByteOp::Interesting8,
        ByteOp::Interesting16,
        ByteOp::Interesting32,
        ByteOp::SubByte,
        ByteOp::AddByte,
        ByteOp::SubWord,
        ByteOp::AddWord,
        ByteOp::SubDword,
        ByteOp::AddDword,
        ByteOp::RandomByte,
        // deletion is drawn twice as often, as in AFL
        ByteOp::DeleteBytes,
        ByteOp::DeleteBytes,
        ByteOp::InsertBlock,
        ByteOp::OverwriteBlock,
    ];
}

#[derive(Debug, Clone)]
pub struct ByteHavoc {
    dictionary: Vec<Vec<u8>>,
    max_len: usize,
}

impl ByteHavoc {
    pub fn new(dictionary: Vec<Vec<u8>>, max_len: usize) -> Self {
        ByteHavoc {
            dictionary: dictionary.into_iter().filter(|d| !d.is_empty()).collect(),
            max_len: max_len.max(1),
        }
    }

    pub fn dictionary(&self) -> &[Vec<u8>] {
        &self.dictionary
    }

    /// One havoc round: a stack of 2..=128 operations (powers of two).
    /// `cycle` limits block sizes early in the campaign as AFL does.
    pub fn havoc<R: Rng + ?Sized>(&self, data: &mut Vec<u8>, cycle: usize, rng: &mut R) -> Vec<ByteOp> {
        let stack = 1usize << (1 + rng.gen_range(0..HAVOC_STACK_POW2));
        let choices = ByteOp::BASE.len() + if self.dictionary.is_empty() { 0 } else { 2 };
        let mut applied = Vec::with_capacity(stack);
        for _ in 0..stack {
            let pick = rng.gen_range(0..choices);
            let op = match pick {
                i if i < ByteOp::BASE.len() => ByteOp::BASE[i],
                15 => ByteOp::OverwriteExtra,
                _ => ByteOp::InsertExtra,
            };
            if self.apply(op, data, cycle, rng) {
                applied.push(op);
            }
        }
        applied
    }

    /// Returns false when the operation does not fit the current data.
    pub fn apply<R: Rng + ?Sized>(&self, op: ByteOp, data: &mut Vec<u8>, cycle: usize, rng: &mut R) -> bool {
        let len = data.len();
        match op {
            ByteOp::FlipBit => {
                if len == 0 {
                    return false;
                }
                let bit = rng.gen_range(0..len * 8);
                data[bit >> 3] ^= 128 >> (bit & 7);
            }
            ByteOp::Interesting8 => {
                if len == 0 {
                    return false;
                }
                let i = rng.gen_range(0..len);
                data[i] = INTERESTING_8[rng.gen_range(0..INTERESTING_8.len())] as u8;
            }
            ByteOp::Interesting16 => {
                if len < 2 {
                    return false;
                }
                let i = rng.gen_range(0..len - 1);
                let v = INTERESTING_16[rng.gen_range(0..INTERESTING_16.len())] as u16;
                let b = if rng.gen() { v.to_le_bytes() } else { v.to_be_bytes() };
                data[i..i + 2].copy_from_slice(&b);
            }
            ByteOp::Interesting32 => {
                if len < 4 {
                    return false;
                }
                let i = rng.gen_range(0..len - 3);
                let v = INTERESTING_32[rng.gen_range(0..INTERESTING_32.len())] as u32;
                let b = if rng.gen() { v.to_le_bytes() } else { v.to_be_bytes() };
                data[i..i + 4].copy_from_slice(&b);
            }
            ByteOp::SubByte | ByteOp::AddByte => {
                if len == 0 {
                    return false;
                }
                let i = rng.gen_range(0..len);
                let d = rng.gen_range(1..=ARITH_MAX) as u8;
                data[i] = if op == ByteOp::SubByte {
                    data[i].wrapping_sub(d)
                } else {
                    data[i].wrapping_add(d)
                };
            }
            ByteOp::SubWord | ByteOp::AddWord => {
                if len < 2 {
                    return false;
                }
                let i = rng.gen_range(0..len - 1);
                let d = rng.gen_range(1..=ARITH_MAX) as u16;
                let be = rng.gen::<bool>();
                let cur = if be {
                    u16::from_be_bytes([data[i], data[i + 1]])
                } else {
                    u16::from_le_bytes([data[i], data[i + 1]])
                };
                let v = if op == ByteOp::SubWord { cur.wrapping_sub(d) } else { cur.wrapping_add(d) };
                data[i..i + 2].copy_from_slice(&if be { v.to_be_bytes() } else { v.to_le_bytes() });
            }
            ByteOp::SubDword | ByteOp::AddDword => {
                if len < 4 {
                    return false;
                }
                let i = rng.gen_range(0..len - 3);
                let d = rng.gen_range(1..=ARITH_MAX);
                let be = rng.gen::<bool>();
                let raw = [data[i], data[i + 1], data[i + 2], data[i + 3]];
                let cur = if be { u32::from_be_bytes(raw) } else { u32::from_le_bytes(raw) };
                let v = if op == ByteOp::SubDword { cur.wrapping_sub(d) } else { cur.wrapping_add(d) };
                data[i..i + 4].copy_from_slice(&if be { v.to_be_bytes() } else { v.to_le_bytes() });
            }
            ByteOp::RandomByte => {
                if len == 0 {
                    return false;
                }
                let i = rng.gen_range(0..len);
                data[i] ^= rng.gen_range(1..=255u8);
            }
            ByteOp::DeleteBytes => {
                if len < 2 {
                    return false;
                }
                let n = choose_block_len(len - 1, cycle, rng);
                let start = rng.gen_range(0..=len - n);
                data.drain(start..start + n);
            }
            ByteOp::InsertBlock => {
                if len == 0 || len >= self.max_len {
                    return false;
                }
                let clone = rng.gen_range(0..4) != 0;
                let n = if clone {
                    choose_block_len(len, cycle, rng)
                } else {
                    choose_block_len(HAVOC_BLK_LARGE, cycle, rng)
                };
                let n = n.min(self.max_len - len);
                if n == 0 {
                    return false;
                }
                let at = rng.gen_range(0..=len);
                let block: Vec<u8> = if clone {
                    let from = rng.gen_range(0..=len - n.min(len));
                    data[from..from + n.min(len)].to_vec()
                } else {
                    let fill = if rng.gen() { rng.gen() } else { data[rng.gen_range(0..len)] };
                    vec![fill; n]
                };
                data.splice(at..at, block);
            }
            ByteOp::OverwriteBlock => {
                if len < 2 {
                    return false;
                }
                let n = choose_block_len(len - 1, cycle, rng);
                let from = rng.gen_range(0..=len - n);
                let to = rng.gen_range(0..=len - n);
                if rng.gen_range(0..4) != 0 {
                    if from != to {
                        data.copy_within(from..from + n, to);
                    }
                } else {
                    let fill = if rng.gen() { rng.gen() } else { data[rng.gen_range(0..len)] };
                    data[to..to + n].fill(fill);
                }
            }
            ByteOp::OverwriteExtra => {
                if self.dictionary.is_empty() {
                    return false;
                }
                let word = &self.dictionary[rng.gen_range(0..self.dictionary.len())];
                if word.len() > len {
                    return false;
                }
                let at = rng.gen_range(0..=len - word.len());
                data[at..at + word.len()].copy_from_slice(word);
            }
            ByteOp::InsertExtra => {
                if self.dictionary.is_empty() {
                    return false;
                }
                let word = &self.dictionary[rng.gen_range(0..self.dictionary.len())];
                if len + word.len() > self.max_len {
                    return false;
                }
                let at = rng.gen_range(0..=len);
                data.splice(at..at, word.iter().copied());
            }
        }
        true
    }
}

/// AFL's block-length choice: small blocks in the first queue cycle,
/// medium and (rarely) large ones later. Never exceeds `limit`.
fn choose_block_len<R: Rng + ?Sized>(limit: usize, cycle: usize, rng: &mut R) -> usize {
    let rlim = cycle.clamp(1, 3);
    let (min, max) = match rng.gen_range(0..rlim) {
        0 => (1, HAVOC_BLK_SMALL),
        1 => (HAVOC_BLK_SMALL, HAVOC_BLK_MEDIUM),
        _ => {
            if rng.gen_range(0..10) != 0 {
                (HAVOC_BLK_MEDIUM, HAVOC_BLK_LARGE)
            } else {
                (HAVOC_BLK_LARGE, HAVOC_BLK_LARGE * 2)
            }
        }
    };
    let min = min.min(limit).max(1);
    let max = max.min(limit).max(min);
    rng.gen_range(min..=max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn havoc_respects_limits() {
        let h = ByteHavoc::new(vec![b"while".to_vec(), b";".to_vec(), Vec::new()], 256);
        assert_eq!(h.dictionary().len(), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut stacks = std::collections::BTreeSet::new();
        for _ in 0..5000 {
            let mut d = b"let var1 = 1 ; print ( var1 ) ;".to_vec();
            let ops = h.havoc(&mut d, 1, &mut rng);
            assert!(d.len() <= 256);
            assert!(ops.len() <= 128);
            stacks.insert(ops.len());
        }
        assert!(stacks.len() > 5);
    }

    #[test]
    fn empty_input_grows_only_through_dictionary() {
        let h = ByteHavoc::new(vec![b"x".to_vec()], 64);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut d = Vec::new();
        assert!(!h.apply(ByteOp::FlipBit, &mut d, 1, &mut rng));
        assert!(!h.apply(ByteOp::InsertBlock, &mut d, 1, &mut rng));
        assert!(h.apply(ByteOp::InsertExtra, &mut d, 1, &mut rng));
        assert_eq!(d, b"x");
    }

    #[test]
    fn block_len_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for cycle in 0..5 {
            for limit in 1..200 {
                let n = choose_block_len(limit, cycle, &mut rng);
                assert!((1..=limit).contains(&n));
            }
        }
    }

    #[test]
    fn arithmetic_ops_change_bytes() {
        let h = ByteHavoc::new(Vec::new(), 64);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for op in [ByteOp::AddByte, ByteOp::SubByte, ByteOp::RandomByte, ByteOp::FlipBit] {
            let mut d = vec![0u8; 8];
            assert!(h.apply(op, &mut d, 1, &mut rng));
            assert_ne!(d, vec![0u8; 8], "{op:?}");
        }
    }
}
