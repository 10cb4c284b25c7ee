//! Coverage probes. Site ids are FNV-1a hashes of `(node kind, production)`
//! evaluated at compile time, so they are identical across builds and runs.

use tlfuzz_core::coverage::EdgeProbe;

pub const fn site_id(kind: &str, production: &str) -> u32 {
    let mut h: u32 = 0x811c_9dc5;
    let k = kind.as_bytes();
    let mut i = 0;
    while i < k.len() {
        h ^= k[i] as u32;
        h = h.wrapping_mul(0x0100_0193);
        i += 1;
    }
    h ^= b'/' as u32;
    h = h.wrapping_mul(0x0100_0193);
    let p = production.as_bytes();
    let mut i = 0;
    while i < p.len() {
        h ^= p[i] as u32;
        h = h.wrapping_mul(0x0100_0193);
        i += 1;
    }
    // fold the high half in so the low bits used for indexing see all input
    h ^ (h >> 16)
}

macro_rules! site {
    ($kind:literal, $prod:literal) => {{
        const ID: u32 = $crate::probe::site_id($kind, $prod);
        ID
    }};
}
pub(crate) use site;

/// Probe sink over a trace region; `None` disables recording.
pub struct Probe<'a> {
    cells: Option<&'a mut [u8]>,
    edge: EdgeProbe,
}

impl<'a> Probe<'a> {
    pub fn new(cells: &'a mut [u8]) -> Self {
        assert!(cells.len().is_power_of_two());
        Probe {
            cells: Some(cells),
            edge: EdgeProbe::new(),
        }
    }

    pub fn disabled() -> Self {
        Probe {
            cells: None,
            edge: EdgeProbe::new(),
        }
    }

    #[inline]
    pub fn hit(&mut self, site: u32) {
        if let Some(cells) = self.cells.as_deref_mut() {
            self.edge.hit(cells, site);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn site_ids_are_stable_and_distinct() {
        // FNV-1a reference values computed independently
        assert_eq!(site_id("", ""), {
            let h = (0x811c_9dc5u32 ^ b'/' as u32).wrapping_mul(0x0100_0193);
            h ^ (h >> 16)
        });
        let a = site!("stmt", "while");
        let b = site!("stmt", "for");
        let c = site!("expr", "while");
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, site_id("stmt", "while"));
    }

    #[test]
    fn probe_records_edges() {
        let mut cells = vec![0u8; 64];
        {
            let mut p = Probe::new(&mut cells);
            p.hit(3);
            p.hit(3);
        }
        assert_eq!(cells.iter().map(|&c| c as u32).sum::<u32>(), 2);
        let mut off = Probe::disabled();
        off.hit(1);
    }
}
