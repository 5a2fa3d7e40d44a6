use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_NODES: usize = 8;
pub const MIN_NODE_GAP: f64 = 1e-10;

/// Quadrature nodes `c_1, …, c_ν` in `[0, 1]`, pairwise distinct.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct NodeSet {
    nodes: Vec<f64>,
}

impl NodeSet {
    pub fn new(nodes: Vec<f64>) -> Result<Self> {
        if nodes.is_empty() || nodes.len() > MAX_NODES {
            return Err(Error::InvalidNodes(format!("need between 1 and {MAX_NODES} nodes, got {}", nodes.len())));
        }
        if let Some(c) = nodes.iter().find(|c| !(0.0..=1.0).contains(*c)) {
            return Err(Error::InvalidNodes(format!("node {c} outside [0, 1]")));
        }
        for (i, a) in nodes.iter().enumerate() {
            for b in &nodes[i + 1..] {
                if (a - b).abs() <= MIN_NODE_GAP {
                    return Err(Error::InvalidNodes(format!("nodes {a} and {b} coincide")));
                }
            }
        }
        Ok(Self { nodes })
    }

    /// Nodes with vanishing `P_K` for `K = 1..4`: `{1/2}`, `{1/3, 1}`,
    /// `{0, 1/2, 1}` and `{0, 1/4, 7/10, 1}`.
    pub fn optimal(nu: usize) -> Result<Self> {
        match nu {
            1 => Self::new(vec![0.5]),
            2 => Self::new(vec![1.0 / 3.0, 1.0]),
            3 => Self::new(vec![0.0, 0.5, 1.0]),
            4 => Self::new(vec![0.0, 0.25, 0.7, 1.0]),
            _ => Err(Error::InvalidNodes(format!("no optimal preset for {nu} nodes"))),
        }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn nu(&self) -> usize {
        self.nodes.len()
    }

    pub fn first(&self) -> f64 {
        self.nodes[0]
    }
}

impl TryFrom<Vec<f64>> for NodeSet {
    type Error = Error;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<NodeSet> for Vec<f64> {
    fn from(n: NodeSet) -> Self {
        n.nodes
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nodes.iter().map(|c| format!("{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn parse_number(s: &str) -> Result<f64> {
    let bad = || Error::InvalidNodes(format!("cannot parse node '{s}'"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            Ok(num / den)
        }
        None => s.trim().parse().map_err(|_| bad()),
    }
}

/// Accepts a preset name `opt1`..`opt4` or a comma list such as `0,1/2,1`.
impl FromStr for NodeSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(k) = s.strip_prefix("opt") {
            let nu: usize = k.parse().map_err(|_| Error::InvalidNodes(format!("unknown preset '{s}'")))?;
            return Self::optimal(nu);
        }
        let nodes = s.split(',').map(parse_number).collect::<Result<Vec<_>>>()?;
        Self::new(nodes)
    }
}

/// Monomial coefficients (ascending) of `π(u) = Π_r (u - c_r)`.
pub fn node_polynomial(nodes: &NodeSet) -> Vec<f64> {
    let mut coeffs = vec![1.0];
    for &c in nodes.nodes() {
        let mut next = vec![0.0; coeffs.len() + 1];
        for (i, &a) in coeffs.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= c * a;
        }
        coeffs = next;
    }
    coeffs
}

/// `P_K = ∫_0^1 π(u) du`, integrated term by term from the expanded
/// polynomial.
pub fn node_poly_integral(nodes: &NodeSet) -> f64 {
    node_polynomial(nodes).iter().enumerate().map(|(i, a)| a / (i + 1) as f64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(v: &[f64]) -> NodeSet {
        NodeSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn optimal_nodes_have_zero_integral() {
        assert_eq!(node_poly_integral(&ns(&[0.5])), 0.0);
        assert!(node_poly_integral(&ns(&[0.0, 2.0 / 3.0])).abs() < 1e-16);
        assert!(node_poly_integral(&ns(&[1.0 / 3.0, 1.0])).abs() < 1e-16);
        assert!(node_poly_integral(&ns(&[0.0, 0.25, 0.7, 1.0])).abs() < 1e-16);
        for nu in 1..=4 {
            assert!(node_poly_integral(&NodeSet::optimal(nu).unwrap()).abs() < 1e-16);
        }
    }

    #[test]
    fn generic_nodes() {
        assert!((node_poly_integral(&ns(&[0.0, 1.0])) + 1.0 / 6.0).abs() < 1e-16);
        assert!((node_poly_integral(&ns(&[0.0])) - 0.5).abs() < 1e-16);
        assert!((node_poly_integral(&ns(&[1.0])) + 0.5).abs() < 1e-16);
    }

    #[test]
    fn expansion_of_four_node_polynomial() {
        let p = node_polynomial(&ns(&[0.0, 0.25, 0.7, 1.0]));
        let expect = [0.0, -0.175, 1.125, -1.95, 1.0];
        for (a, b) in p.iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn validation() {
        assert!(NodeSet::new(vec![]).is_err());
        assert!(NodeSet::new(vec![0.5, 0.5]).is_err());
        assert!(NodeSet::new(vec![0.2, 0.2 + 1e-11]).is_err());
        assert!(NodeSet::new(vec![-0.1]).is_err());
        assert!(NodeSet::new(vec![1.5]).is_err());
        assert!(NodeSet::new((0..9).map(|i| i as f64 / 8.0).collect()).is_err());
        assert!(NodeSet::new((0..8).map(|i| i as f64 / 7.0).collect()).is_ok());
    }

    #[test]
    fn parsing() {
        assert_eq!("opt2".parse::<NodeSet>().unwrap(), NodeSet::optimal(2).unwrap());
        assert_eq!("0, 1/2, 1".parse::<NodeSet>().unwrap(), ns(&[0.0, 0.5, 1.0]));
        assert_eq!("0.2,0.5,0.8".parse::<NodeSet>().unwrap(), ns(&[0.2, 0.5, 0.8]));
        assert!("opt9".parse::<NodeSet>().is_err());
        assert!("a,b".parse::<NodeSet>().is_err());
    }
}
