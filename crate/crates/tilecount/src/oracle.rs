//! Brute-force tiling counter used to validate the transfer-matrix pipeline.
//!
//! Counts complete tilings by exhaustive backtracking over an occupancy
//! bitset. The placement rule mirrors the canonical fill order (first
//! uncovered cell, scanning the length axis outermost, then layers, then
//! columns) but the code shares nothing with the state-graph machinery, so
//! agreement between the two is a real check.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::shapes::{Region, Shape};

/// Default ceiling on region volume; exhaustive search beyond this is slow.
pub const DEFAULT_VOLUME_CAP: u64 = 64;

/// Counts complete tilings of `region` by `shape` under the default cap.
pub fn brute_count(shape: Shape, region: Region) -> Result<BigUint> {
    brute_count_capped(shape, region, DEFAULT_VOLUME_CAP)
}

/// Counts complete tilings of `region` by `shape`, exhaustively.
pub fn brute_count_capped(shape: Shape, region: Region, volume_cap: u64) -> Result<BigUint> {
    let volume = region.volume();
    if volume > volume_cap.min(128) {
        return Err(Error::VolumeCapExceeded {
            cap: volume_cap.min(128),
            volume,
        });
    }
    if volume % shape.volume() != 0 {
        return Ok(BigUint::from(0u32));
    }
    let board = Board::new(shape, region);
    Ok(BigUint::from(board.count(0u128)))
}

struct Board {
    k: usize,
    m: usize,
    n: usize,
    volume: usize,
    /// Per orientation: (len_k, len_m, len_n) as usize.
    orientations: Vec<(usize, usize, usize)>,
}

impl Board {
    fn new(shape: Shape, region: Region) -> Self {
        Board {
            k: region.k as usize,
            m: region.m as usize,
            n: region.n as usize,
            volume: region.volume() as usize,
            orientations: shape
                .orientations()
                .iter()
                .map(|o| (o.len_k as usize, o.len_m as usize, o.len_n as usize))
                .collect(),
        }
    }

    /// Bit index of a cell; the scan order is n outermost, then rows, then
    /// columns, so "first uncovered" is simply the lowest clear bit.
    fn bit(&self, layer_n: usize, row: usize, col: usize) -> usize {
        (layer_n * self.k + row) * self.m + col
    }

    fn count(&self, occupied: u128) -> u128 {
        let first_free = (!occupied).trailing_zeros() as usize;
        if first_free >= self.volume {
            return 1;
        }
        let col = first_free % self.m;
        let row = (first_free / self.m) % self.k;
        let layer = first_free / (self.m * self.k);

        let mut total = 0u128;
        for &(ak, am, an) in &self.orientations {
            if row + ak > self.k || col + am > self.m || layer + an > self.n {
                continue;
            }
            let mut mask = 0u128;
            for l in layer..layer + an {
                for i in row..row + ak {
                    for j in col..col + am {
                        mask |= 1u128 << self.bit(l, i, j);
                    }
                }
            }
            if occupied & mask == 0 {
                total += self.count(occupied | mask);
            }
        }
        total
    }
}

/// One row of a cross-validation report.
#[derive(Debug, Clone)]
pub struct CrossCheckRow {
    pub n: u32,
    pub tiles: u64,
    pub brute: BigUint,
    pub pipeline: BigUint,
}

impl CrossCheckRow {
    pub fn matches(&self) -> bool {
        self.brute == self.pipeline
    }
}

/// Compares the brute-force count against the transfer-matrix count for each
/// region length `1..=n_max` over the given cross section. Mismatching rows
/// are report content, not errors.
pub fn cross_validate(
    shape: Shape,
    cross_k: u32,
    cross_m: u32,
    n_max: u32,
    volume_cap: u64,
) -> Result<Vec<CrossCheckRow>> {
    let graph = crate::graph::StateGraph::build(shape, cross_k as usize, cross_m as usize)?;
    let pruned = graph.prune();
    let matrix = pruned.transfer_matrix();

    let shape_volume = shape.volume();
    let lengths: Vec<u32> = (1..=n_max).collect();
    let max_tiles = lengths
        .iter()
        .map(|&n| Region::new(cross_k, cross_m, n).volume() / shape_volume)
        .max()
        .unwrap_or(0);
    let series = crate::series::count_series(&matrix, 0, max_tiles as usize + 1);

    let check_one = |&n: &u32| -> Result<CrossCheckRow> {
        let region = Region::new(cross_k, cross_m, n);
        let brute = brute_count_capped(shape, region, volume_cap)?;
        let pipeline = if region.volume() % shape_volume == 0 {
            let tiles = (region.volume() / shape_volume) as usize;
            series.coeffs()[tiles].clone()
        } else {
            BigUint::from(0u32)
        };
        Ok(CrossCheckRow {
            n,
            tiles: region.volume() / shape_volume,
            brute,
            pipeline,
        })
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        lengths.par_iter().map(check_one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        lengths.iter().map(check_one).collect()
    }
}
