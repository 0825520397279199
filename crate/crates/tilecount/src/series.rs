//! Exact tiling-count series from iterated transfer-matrix products.
//!
//! The flat frontier is loaded with 1 and the load vector is pushed through
//! successive matrix powers; the load back at the flat frontier after `N`
//! steps counts the tilings built from `N` tiles. Everything is big-integer
//! exact.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{StateGraph, TransferMatrix};
use crate::shapes::{Region, Shape};

/// A prefix of a tiling-count sequence, indexed by the number of tiles.
///
/// Indices with no complete tiling hold an explicit zero so that position
/// `N` always means "N tiles placed".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    shape: Shape,
    cross: (usize, usize),
    coeffs: Vec<BigUint>,
}

impl Series {
    pub fn new(shape: Shape, cross: (usize, usize), coeffs: Vec<BigUint>) -> Self {
        Series {
            shape,
            cross,
            coeffs,
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn cross_section(&self) -> (usize, usize) {
        self.cross
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigUint {
        &self.coeffs[n]
    }

    /// Coefficients as signed integers, for the rational-function layer.
    pub fn signed_coeffs(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .map(|c| BigInt::from_biguint(Sign::Plus, c.clone()))
            .collect()
    }

    /// JSON form with decimal-string coefficients; native JSON numbers would
    /// overflow 64-bit consumers quickly.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.shape.to_string(),
            "cross_section": format!("{}x{}", self.cross.0, self.cross.1),
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// First `len` closed-walk counts at `origin`: entry `origin` of
/// `X^N * e_origin` for `N = 0, 1, ...`.
pub fn count_series(matrix: &TransferMatrix, origin: usize, len: usize) -> Series {
    assert!(len >= 1);
    assert!(origin < matrix.dim());
    let mut coeffs = Vec::with_capacity(len);
    let mut load = vec![BigUint::zero(); matrix.dim()];
    load[origin] = BigUint::one();
    coeffs.push(load[origin].clone());
    for _ in 1..len {
        load = matrix.apply(&load);
        coeffs.push(load[origin].clone());
    }
    Series {
        shape: matrix.shape(),
        cross: matrix.cross_section(),
        coeffs,
    }
}

/// Convenience pipeline: build, prune, and count for a cross section.
pub fn tiling_series(shape: Shape, k: usize, m: usize, len: usize) -> Result<Series> {
    let graph = StateGraph::build(shape, k, m)?;
    Ok(count_series(&graph.prune().transfer_matrix(), 0, len))
}

/// Counts of tilings that no straight full-width cut can split: the series
/// `1 - 1/T`, whose walks return to the flat frontier exactly once.
pub fn irreducible_series(series: &Series) -> Result<Series> {
    let t = series.coeffs();
    if t.is_empty() || !t[0].is_one() {
        return Err(Error::LeadingTermNotOne(
            t.first().map_or_else(|| "<empty>".into(), |c| c.to_string()),
        ));
    }
    // reciprocal of T by convolution, then negate the tail
    let signed = series.signed_coeffs();
    let mut reciprocal: Vec<BigInt> = Vec::with_capacity(t.len());
    reciprocal.push(BigInt::one());
    let mut irreducible = vec![BigUint::zero()];
    for n in 1..t.len() {
        let mut acc = BigInt::zero();
        for i in 1..=n {
            acc += &signed[i] * &reciprocal[n - i];
        }
        let hat = acc; // = -reciprocal[n]
        if hat.sign() == Sign::Minus {
            return Err(Error::NegativeIrreducible { index: n });
        }
        reciprocal.push(-hat.clone());
        irreducible.push(hat.to_biguint().unwrap());
    }
    Ok(Series {
        shape: series.shape,
        cross: series.cross,
        coeffs: irreducible,
    })
}

/// Exact tiling count for one region: the series coefficient at
/// `N = volume / shape volume`, or zero when the volume does not divide.
pub fn count_tilings(shape: Shape, region: Region) -> Result<BigUint> {
    if region.volume() % shape.volume() != 0 {
        return Ok(BigUint::zero());
    }
    let tiles = (region.volume() / shape.volume()) as usize;
    let series = tiling_series(shape, region.k as usize, region.m as usize, tiles + 1)?;
    Ok(series.coeff(tiles).clone())
}

/// Checks the stacked-product law `A(p*j) = B(j)^p` with `A` zero elsewhere:
/// a room whose cross section carries `p` independent copies of a floor is
/// tiled by independent stacks, and each floor tiling of `j` tiles shows up
/// in the room count at `p*j` tiles.
pub fn pointwise_power_check(a: &Series, b: &Series, p: u32) -> bool {
    assert!(p >= 1);
    let mut compared = 0usize;
    for n in 0..a.len() {
        if n % p as usize != 0 {
            if !a.coeffs[n].is_zero() {
                return false;
            }
            continue;
        }
        let j = n / p as usize;
        if j >= b.len() {
            break;
        }
        if a.coeffs[n] != b.coeffs[j].pow(p) {
            return false;
        }
        compared += 1;
    }
    compared > 0
}
