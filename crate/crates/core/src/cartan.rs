//! Simply-laced Cartan data and weight/coweight arithmetic.
//!
//! Node numbering conventions (Bourbaki):
//! * `A_n`: the path `1 - 2 - ... - n`;
//! * `D_n` (n >= 4): the chain `1 - 2 - ... - (n-2)` with both `n-1` and `n`
//!   attached to the fork node `n-2`;
//! * `E_n` (n = 6, 7, 8): the chain `1 - 3 - 4 - 5 - 6 [- 7 [- 8]]` with node
//!   `2` attached to node `4`.
//!
//! Weights are stored in the fundamental-weight basis, coweights in the
//! simple-coroot basis, so the canonical pairing is the dot product of
//! coordinate vectors. Vertices are 1-based in all public APIs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanFamily {
    A,
    D,
    E,
}

impl fmt::Display for CartanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanFamily::A => write!(f, "A"),
            CartanFamily::D => write!(f, "D"),
            CartanFamily::E => write!(f, "E"),
        }
    }
}

impl std::str::FromStr for CartanFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(CartanFamily::A),
            "D" | "d" => Ok(CartanFamily::D),
            "E" | "e" => Ok(CartanFamily::E),
            other => Err(Error::InvalidCartan(format!("unknown family {other:?}"))),
        }
    }
}

/// A weight written in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

/// A coweight written in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn neg(&self) -> Self {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    /// Coordinate `<self, coroot_i>` (1-based vertex).
    pub fn coord(&self, i: usize) -> i64 {
        self.0[i - 1]
    }
}

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn simple_coroot(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Coweight(v)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: i64) -> Coweight {
        Coweight(self.0.iter().map(|x| s * x).collect())
    }

    /// Is this a nonnegative integer combination of simple coroots?
    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

/// `<weight, coweight>`; bilinear with `<w_i, c_j> = delta_ij`.
///
/// Panics when the two vectors come from different ranks.
pub fn pairing(lambda: &Weight, nu: &Coweight) -> i64 {
    assert_eq!(lambda.0.len(), nu.0.len(), "pairing: rank mismatch");
    lambda.0.iter().zip(&nu.0).map(|(a, b)| a * b).sum()
}

/// Cartan matrix plus adjacency structure of one ADE Dynkin tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub family: CartanFamily,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, coroot_i>`; symmetric with 2 on the diagonal.
    pub cartan: Vec<Vec<i64>>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl CartanData {
    pub fn new(family: CartanFamily, rank: usize) -> Result<Self> {
        let edges = dynkin_edges(family, rank)?;
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            cartan[i][i] = 2;
        }
        let mut adjacency = vec![Vec::new(); rank];
        for &(a, b) in &edges {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
            adjacency[a - 1].push(b);
            adjacency[b - 1].push(a);
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        Ok(CartanData {
            family,
            rank,
            cartan,
            adjacency,
            edges,
        })
    }

    /// Tree edges as `(low, high)` vertex pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of vertex `i` (1-based).
    pub fn adjacent(&self, i: usize) -> &[usize] {
        &self.adjacency[i - 1]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.rank
    }

    /// Simple reflection on a weight:
    /// `s_i(lambda) = lambda - <lambda, coroot_i> * alpha_i`, with `alpha_i`
    /// expanded in fundamental-weight coordinates via column `i` of the
    /// Cartan matrix.
    pub fn reflect_weight(&self, i: usize, lambda: &Weight) -> Weight {
        let li = lambda.coord(i);
        let coords = lambda
            .0
            .iter()
            .enumerate()
            .map(|(j, &x)| x - li * self.cartan[j][i - 1])
            .collect();
        Weight(coords)
    }

    /// Simple reflection on a coweight:
    /// `s_i(nu) = nu - <alpha_i, nu> * coroot_i`.
    pub fn reflect_coweight(&self, i: usize, nu: &Coweight) -> Coweight {
        let a: i64 = (0..self.rank).map(|j| self.cartan[i - 1][j] * nu.0[j]).sum();
        let mut coords = nu.0.clone();
        coords[i - 1] -= a;
        Coweight(coords)
    }

    pub fn check_vertex(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::InvalidCartan(format!(
                "vertex {i} out of range 1..={}",
                self.rank
            )));
        }
        Ok(())
    }
}

fn dynkin_edges(family: CartanFamily, rank: usize) -> Result<Vec<(usize, usize)>> {
    match family {
        CartanFamily::A => {
            if rank < 1 {
                return Err(Error::InvalidCartan("A_n needs rank >= 1".into()));
            }
            Ok((1..rank).map(|i| (i, i + 1)).collect())
        }
        CartanFamily::D => {
            if rank < 4 {
                return Err(Error::InvalidCartan("D_n needs rank >= 4".into()));
            }
            let mut e: Vec<(usize, usize)> = (1..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 2, rank - 1));
            e.push((rank - 2, rank));
            e.sort_unstable();
            Ok(e)
        }
        CartanFamily::E => {
            if !(6..=8).contains(&rank) {
                return Err(Error::InvalidCartan("E_n needs rank in {6,7,8}".into()));
            }
            let mut e = vec![(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)];
            if rank >= 7 {
                e.push((6, 7));
            }
            if rank == 8 {
                e.push((7, 8));
            }
            e.sort_unstable();
            Ok(e)
        }
    }
}
