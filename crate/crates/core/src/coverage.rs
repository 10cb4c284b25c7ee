//! Edge coverage: an AFL-compatible hit-count bitmap, count classes, and
//! novelty detection against the campaign-wide view.

use thiserror::Error;

pub const DEFAULT_MAP_SIZE: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("coverage map size mismatch: expected {expected}, got {got}")]
pub struct SizeMismatch {
    pub expected: usize,
    pub got: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Novelty {
    NewEdge,
    NewBucket,
    Nothing,
}

impl Novelty {
    pub fn is_new(self) -> bool {
        self != Novelty::Nothing
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Novelty::NewEdge => "new_edge",
            Novelty::NewBucket => "new_bucket",
            Novelty::Nothing => "nothing",
        }
    }
}

/// Increments the cell for the edge `prev_loc -> cur_loc`, saturating at 255.
/// Callers must then set `prev_loc = cur_loc >> 1`.
#[inline]
pub fn record_edge(cells: &mut [u8], prev_loc: u32, cur_loc: u32) {
    debug_assert!(cells.len().is_power_of_two());
    let idx = (prev_loc ^ cur_loc) as usize & (cells.len() - 1);
    cells[idx] = cells[idx].saturating_add(1);
}

/// Instrumentation-side helper carrying `prev_loc` between probes.
#[derive(Debug, Default, Clone, Copy)]
pub struct EdgeProbe {
    prev_loc: u32,
}

impl EdgeProbe {
    pub fn new() -> Self {
        EdgeProbe { prev_loc: 0 }
    }

    #[inline]
    pub fn hit(&mut self, cells: &mut [u8], site: u32) {
        record_edge(cells, self.prev_loc, site);
        self.prev_loc = site >> 1;
    }

    pub fn reset(&mut self) {
        self.prev_loc = 0;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageMap {
    cells: Vec<u8>,
}

impl CoverageMap {
    pub fn new(size: usize) -> Self {
        assert!(size.is_power_of_two(), "coverage map size must be a power of two");
        CoverageMap { cells: vec![0; size] }
    }

    pub fn from_cells(cells: Vec<u8>) -> Self {
        assert!(cells.len().is_power_of_two(), "coverage map size must be a power of two");
        CoverageMap { cells }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|&c| c == 0)
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn cells_mut(&mut self) -> &mut [u8] {
        &mut self.cells
    }

    pub fn record_edge(&mut self, prev_loc: u32, cur_loc: u32) {
        record_edge(&mut self.cells, prev_loc, cur_loc);
    }

    pub fn clear(&mut self) {
        self.cells.fill(0);
    }
}

impl Default for CoverageMap {
    fn default() -> Self {
        CoverageMap::new(DEFAULT_MAP_SIZE)
    }
}

const fn build_classes() -> [u8; 256] {
    let mut t = [0u8; 256];
    let mut i = 1;
    while i < 256 {
        t[i] = match i {
            1 => 1,
            2 => 2,
            3 => 4,
            4..=7 => 8,
            8..=15 => 16,
            16..=31 => 32,
            32..=127 => 64,
            _ => 128,
        };
        i += 1;
    }
    t
}

static COUNT_CLASS: [u8; 256] = build_classes();

/// One-hot class mask for a hit count: 1, 2, 3, 4-7, 8-15, 16-31, 32-127,
/// 128-255. Zero maps to the empty mask.
#[inline]
pub fn bucketize(count: u8) -> u8 {
    COUNT_CLASS[count as usize]
}

/// Sparse `(cell, count)` pairs of the nonzero cells in a trace.
pub fn sparse_trace(trace: &[u8]) -> Vec<(u32, u8)> {
    let mut out = Vec::new();
    for_each_nonzero(trace, |i, c| out.push((i as u32, c)));
    out
}

/// Sparse `(cell, class)` pairs; two traces with equal signatures are
/// indistinguishable to novelty detection.
pub fn bucket_signature(trace: &[u8]) -> Vec<(u32, u8)> {
    let mut out = Vec::new();
    for_each_nonzero(trace, |i, c| out.push((i as u32, bucketize(c))));
    out
}

/// True when `trace` has exactly the bucketized signature `sig`, without
/// allocating.
pub fn matches_signature(trace: &[u8], sig: &[(u32, u8)]) -> bool {
    let mut n = 0usize;
    let mut ok = true;
    for_each_nonzero(trace, |i, c| {
        if ok {
            ok = sig.get(n).is_some_and(|&(j, class)| j as usize == i && class == bucketize(c));
        }
        n += 1;
    });
    ok && n == sig.len()
}

pub fn expand_sparse(sparse: &[(u32, u8)], size: usize) -> Vec<u8> {
    let mut cells = vec![0; size];
    for &(i, c) in sparse {
        cells[i as usize] = c;
    }
    cells
}

#[inline]
fn for_each_nonzero(trace: &[u8], mut f: impl FnMut(usize, u8)) {
    let mut chunks = trace.chunks_exact(8);
    let mut base = 0;
    for chunk in &mut chunks {
        if u64::from_ne_bytes(chunk.try_into().unwrap()) != 0 {
            for (j, &c) in chunk.iter().enumerate() {
                if c != 0 {
                    f(base + j, c);
                }
            }
        }
        base += 8;
    }
    for (j, &c) in chunks.remainder().iter().enumerate() {
        if c != 0 {
            f(base + j, c);
        }
    }
}

/// Campaign-wide record of every count class seen per cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalCoverage {
    virgin: Vec<u8>,
    edges_seen: usize,
}

impl GlobalCoverage {
    pub fn new(size: usize) -> Self {
        assert!(size.is_power_of_two(), "coverage map size must be a power of two");
        GlobalCoverage {
            virgin: vec![0; size],
            edges_seen: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.virgin.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges_seen == 0
    }

    pub fn edges_seen(&self) -> usize {
        self.edges_seen
    }

    pub fn masks(&self) -> &[u8] {
        &self.virgin
    }

    /// Folds `trace` into the global view and reports what it added.
    pub fn has_new_bits(&mut self, trace: &[u8]) -> Result<Novelty, SizeMismatch> {
        self.check_size(trace.len())?;
        let mut result = Novelty::Nothing;
        let virgin = &mut self.virgin;
        let mut new_edges = 0;
        for_each_nonzero(trace, |i, c| {
            let class = bucketize(c);
            let seen = virgin[i];
            if class & !seen != 0 {
                if seen == 0 {
                    new_edges += 1;
                    result = Novelty::NewEdge;
                } else if result == Novelty::Nothing {
                    result = Novelty::NewBucket;
                }
                virgin[i] = seen | class;
            }
        });
        self.edges_seen += new_edges;
        Ok(result)
    }

    /// Same classification as [`has_new_bits`](Self::has_new_bits) without
    /// updating anything.
    pub fn peek_new_bits(&self, trace: &[u8]) -> Result<Novelty, SizeMismatch> {
        self.check_size(trace.len())?;
        let mut result = Novelty::Nothing;
        for_each_nonzero(trace, |i, c| {
            let class = bucketize(c);
            let seen = self.virgin[i];
            if class & !seen != 0 {
                if seen == 0 {
                    result = Novelty::NewEdge;
                } else if result == Novelty::Nothing {
                    result = Novelty::NewBucket;
                }
            }
        });
        Ok(result)
    }

    pub fn merge_sparse(&mut self, sparse: &[(u32, u8)]) -> Novelty {
        let mut result = Novelty::Nothing;
        for &(i, c) in sparse {
            let class = bucketize(c);
            let seen = self.virgin[i as usize];
            if class & !seen != 0 {
                if seen == 0 {
                    self.edges_seen += 1;
                    result = Novelty::NewEdge;
                } else if result == Novelty::Nothing {
                    result = Novelty::NewBucket;
                }
                self.virgin[i as usize] = seen | class;
            }
        }
        result
    }

    fn check_size(&self, got: usize) -> Result<(), SizeMismatch> {
        if got != self.virgin.len() {
            return Err(SizeMismatch {
                expected: self.virgin.len(),
                got,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn same_edge_twice() {
        let mut map = CoverageMap::new(1024);
        map.record_edge(7, 99);
        map.record_edge(7, 99);
        assert_eq!(map.cells()[(7 ^ 99) & 1023], 2);
    }

    #[test]
    fn saturates() {
        let mut map = CoverageMap::new(64);
        for _ in 0..300 {
            map.record_edge(1, 2);
        }
        assert_eq!(map.cells()[3], 255);
    }

    #[test]
    fn shift_breaks_symmetry() {
        // A -> B lands on (A >> 1) ^ B, B -> A on (B >> 1) ^ A.
        let (a, b) = (0x1234u32, 0x0f0fu32);
        let mut ab = CoverageMap::new(DEFAULT_MAP_SIZE);
        let mut probe = EdgeProbe::new();
        probe.hit(ab.cells_mut(), a);
        probe.hit(ab.cells_mut(), b);
        let mut ba = CoverageMap::new(DEFAULT_MAP_SIZE);
        let mut probe = EdgeProbe::new();
        probe.hit(ba.cells_mut(), b);
        probe.hit(ba.cells_mut(), a);

        let ab_edge = ((a >> 1) ^ b) as usize;
        let ba_edge = ((b >> 1) ^ a) as usize;
        assert_eq!((ab_edge, ba_edge), (0x0615, 0x15b3));
        assert_eq!(ab.cells()[ab_edge], 1);
        assert_eq!(ab.cells()[ba_edge], 0);
        assert_eq!(ba.cells()[ba_edge], 1);
    }

    #[test]
    fn buckets() {
        assert_eq!(bucketize(0), 0);
        assert_eq!(bucketize(1), 1);
        assert_eq!(bucketize(3), 4);
        assert_eq!(bucketize(100), 64);
        assert_eq!(bucketize(32), 64);
        assert_eq!(bucketize(127), 64);
        assert_eq!(bucketize(128), 128);
        let distinct: std::collections::BTreeSet<u8> = (1..=255).map(bucketize).collect();
        assert_eq!(distinct.len(), 8);
    }

    #[test]
    fn novelty_progression() {
        let mut global = GlobalCoverage::new(256);
        let mut trace = vec![0u8; 256];
        assert_eq!(global.has_new_bits(&trace), Ok(Novelty::Nothing));

        trace[10] = 1;
        assert_eq!(global.has_new_bits(&trace), Ok(Novelty::NewEdge));
        assert_eq!(global.edges_seen(), 1);
        assert_eq!(global.has_new_bits(&trace), Ok(Novelty::Nothing));

        trace[10] = 9;
        assert_eq!(global.has_new_bits(&trace), Ok(Novelty::NewBucket));
        assert_eq!(global.edges_seen(), 1);
        // 12 shares the 8-15 class with 9.
        trace[10] = 12;
        assert_eq!(global.has_new_bits(&trace), Ok(Novelty::Nothing));
    }

    #[test]
    fn size_mismatch() {
        let mut global = GlobalCoverage::new(256);
        assert_eq!(
            global.has_new_bits(&[0u8; 128]),
            Err(SizeMismatch {
                expected: 256,
                got: 128
            })
        );
    }

    #[test]
    fn sparse_round_trip() {
        let mut cells = vec![0u8; 128];
        cells[3] = 4;
        cells[77] = 200;
        let sparse = sparse_trace(&cells);
        assert_eq!(sparse, [(3, 4), (77, 200)]);
        assert_eq!(expand_sparse(&sparse, 128), cells);
        assert_eq!(bucket_signature(&cells), [(3, 8), (77, 128)]);
    }

    proptest! {
        #[test]
        fn index_always_in_range(prev in any::<u32>(), cur in any::<u32>(), bits in 1u32..17) {
            let mut map = CoverageMap::new(1 << bits);
            map.record_edge(prev, cur);
            prop_assert_eq!(map.cells().iter().map(|&c| c as u32).sum::<u32>(), 1);
        }

        #[test]
        fn absorption_and_monotone(traces in proptest::collection::vec(
            proptest::collection::vec((0usize..512, 1u8..=255), 0..20), 1..8)
        ) {
            let mut global = GlobalCoverage::new(512);
            let mut last = 0;
            for sparse in traces {
                let mut trace = vec![0u8; 512];
                for (i, c) in sparse {
                    trace[i] = c;
                }
                let peek = global.peek_new_bits(&trace).unwrap();
                let first = global.has_new_bits(&trace).unwrap();
                prop_assert_eq!(peek, first);
                prop_assert_eq!(global.has_new_bits(&trace).unwrap(), Novelty::Nothing);
                prop_assert!(global.edges_seen() >= last);
                last = global.edges_seen();
                let nonzero = global.masks().iter().filter(|&&m| m != 0).count();
                prop_assert_eq!(nonzero, global.edges_seen());
            }
        }
    }
}
