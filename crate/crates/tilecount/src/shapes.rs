//! Prototiles and bricks together with their axis-aligned orientations.
//!
//! A two-dimensional tile is treated as a brick whose first edge is 1, so a
//! floor of width `m` is simply a room with cross section `1 x m`. One code
//! path then serves both the 2D and the 3D problems.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A rectangular prototile or brick, stored as its sorted edge triple.
///
/// Edges satisfy `edges[0] <= edges[1] <= edges[2]`; the largest edge is the
/// "long edge" that bounds frontier heights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    edges: [u32; 3],
}

impl Shape {
    /// Builds a shape from three edge lengths, sorting them ascending.
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::ParseShape(format!("{a}x{b}x{c}")));
        }
        let mut edges = [a, b, c];
        edges.sort_unstable();
        Ok(Shape { edges })
    }

    /// Builds a 2D tile `t_m x t_n`, stored as the brick `1 x t_m x t_n`.
    pub fn tile(t_m: u32, t_n: u32) -> Result<Self> {
        Shape::new(1, t_m, t_n)
    }

    pub fn edges(&self) -> [u32; 3] {
        self.edges
    }

    /// The long edge; frontier heights never exceed it.
    pub fn long_edge(&self) -> u32 {
        self.edges[2]
    }

    /// Number of unit cells the shape occupies.
    pub fn volume(&self) -> u64 {
        self.edges.iter().map(|&e| e as u64).product()
    }

    /// True when the three edges share no common factor. Shapes with a common
    /// factor are accepted but redundant: the whole geometry could be shrunk
    /// by that factor without changing any count.
    pub fn is_coprime(&self) -> bool {
        let g = gcd(gcd(self.edges[0], self.edges[1]), self.edges[2]);
        g == 1
    }

    /// All distinct axis orientations of the shape, ordered lexicographically
    /// on `(len_k, len_m, len_n)`. Equal edges collapse duplicates, so the
    /// result has 1, 3 or 6 entries.
    pub fn orientations(&self) -> Vec<Orientation> {
        let [a, b, c] = self.edges;
        let mut perms = vec![
            [a, b, c],
            [a, c, b],
            [b, a, c],
            [b, c, a],
            [c, a, b],
            [c, b, a],
        ];
        perms.sort_unstable();
        perms.dedup();
        perms
            .into_iter()
            .map(|[k, m, n]| Orientation {
                len_k: k,
                len_m: m,
                len_n: n,
            })
            .collect()
    }
}

impl FromStr for Shape {
    type Err = Error;

    /// Parses `"WxL"` (2D) or `"KxMxL"` (3D); no whitespace, separator `x`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('x').collect();
        let parsed: Option<Vec<u32>> = parts.iter().map(|p| p.parse().ok()).collect();
        let dims = parsed.ok_or_else(|| Error::ParseShape(s.to_string()))?;
        match dims.as_slice() {
            [w, l] => Shape::tile(*w, *l),
            [k, m, l] => Shape::new(*k, *m, *l),
            _ => Err(Error::ParseShape(s.to_string())),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.edges[0], self.edges[1], self.edges[2])
    }
}

/// One way of axis-aligning a shape: `len_k`/`len_m` span the cross section,
/// `len_n` points along the walk axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Orientation {
    pub len_k: u32,
    pub len_m: u32,
    pub len_n: u32,
}

/// A rectangular region `k x m x n`; a 2D floor `m x n` is `1 x m x n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Region {
    pub k: u32,
    pub m: u32,
    pub n: u32,
}

impl Region {
    pub fn new(k: u32, m: u32, n: u32) -> Self {
        Region { k, m, n }
    }

    /// A 2D floor of width `m` and length `n`.
    pub fn floor(m: u32, n: u32) -> Self {
        Region { k: 1, m, n }
    }

    pub fn volume(&self) -> u64 {
        self.k as u64 * self.m as u64 * self.n as u64
    }
}

impl FromStr for Region {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Option<Vec<u32>> = s.split('x').map(|p| p.parse().ok()).collect();
        let dims = parts.ok_or_else(|| Error::ParseRegion(s.to_string()))?;
        if dims.iter().any(|&d| d == 0) {
            return Err(Error::ParseRegion(s.to_string()));
        }
        match dims.as_slice() {
            [m, n] => Ok(Region::floor(*m, *n)),
            [k, m, n] => Ok(Region::new(*k, *m, *n)),
            _ => Err(Error::ParseRegion(s.to_string())),
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.k, self.m, self.n)
    }
}

/// True iff the region volume is an integer multiple of the shape volume.
/// A complete packing is impossible otherwise.
pub fn area_divisible(shape: Shape, region: Region) -> bool {
    region.volume() % shape.volume() == 0
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_tile_and_brick() {
        let t: Shape = "1x3".parse().unwrap();
        assert_eq!(t.edges(), [1, 1, 3]);
        let b: Shape = "1x2x3".parse().unwrap();
        assert_eq!(b.edges(), [1, 2, 3]);
        let sorted: Shape = "3x2x1".parse().unwrap();
        assert_eq!(sorted, b);
        assert!("".parse::<Shape>().is_err());
        assert!("1x0".parse::<Shape>().is_err());
        assert!("1x2x3x4".parse::<Shape>().is_err());
        assert!("1 x 2".parse::<Shape>().is_err());
    }

    #[test]
    fn orientation_counts() {
        assert_eq!(Shape::new(1, 2, 3).unwrap().orientations().len(), 6);
        assert_eq!(Shape::new(1, 1, 2).unwrap().orientations().len(), 3);
        assert_eq!(Shape::new(1, 1, 1).unwrap().orientations().len(), 1);
        assert_eq!(Shape::new(2, 2, 2).unwrap().orientations().len(), 1);
        assert_eq!(Shape::new(1, 2, 2).unwrap().orientations().len(), 3);
    }

    #[test]
    fn orientations_are_sorted_permutations() {
        let s = Shape::new(1, 2, 3).unwrap();
        let os = s.orientations();
        let mut seen = os.clone();
        seen.sort_by_key(|o| (o.len_k, o.len_m, o.len_n));
        assert_eq!(os, seen, "orientation order must be lexicographic");
        for o in &os {
            let mut edges = [o.len_k, o.len_m, o.len_n];
            edges.sort_unstable();
            assert_eq!(edges, s.edges());
        }
    }

    #[test]
    fn orientation_count_from_multiplicities() {
        // distinct permutations = 6 / product of factorials of edge multiplicities
        for (edges, want) in [
            ((1, 2, 3), 6),
            ((1, 1, 2), 3),
            ((2, 2, 2), 1),
            ((4, 4, 1), 3),
        ] {
            let s = Shape::new(edges.0, edges.1, edges.2).unwrap();
            assert_eq!(s.orientations().len(), want);
        }
    }

    #[test]
    fn divisibility() {
        let domino = Shape::new(1, 1, 2).unwrap();
        assert!(area_divisible(domino, Region::new(2, 2, 4)));
        let tromino = Shape::new(1, 1, 3).unwrap();
        assert!(!area_divisible(tromino, Region::new(1, 2, 2)));
        let hexomino = Shape::tile(2, 3).unwrap();
        assert!(area_divisible(hexomino, Region::new(1, 3, 4)));
    }

    #[test]
    fn coprimality_flag() {
        assert!(Shape::new(1, 2, 3).unwrap().is_coprime());
        assert!(Shape::new(1, 2, 2).unwrap().is_coprime());
        assert!(!Shape::new(2, 2, 4).unwrap().is_coprime());
    }

    #[test]
    fn region_parsing_and_volume() {
        let r: Region = "3x9".parse().unwrap();
        assert_eq!((r.k, r.m, r.n), (1, 3, 9));
        let r: Region = "2x3x6".parse().unwrap();
        assert_eq!(r.volume(), 36);
        assert!("2x0x1".parse::<Region>().is_err());
    }
}
