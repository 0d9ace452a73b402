//! Simple graphs: the pivot, the vertex-elimination interlace polynomial, and
//! the two edge moves matching the set-system moves through the nondegeneracy
//! delta-matroid.
//!
//! Vertices are labelled 1 through n; adjacency rows are packed bitmasks with
//! a zero diagonal.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::canonical::{all_perms_cached, MAX_CANON};
use crate::error::{Error, Result};
use crate::gf2::Gf2SymMatrix;
use crate::polynomial::IntPolynomial;
use crate::set_system::{drop_bit, DeltaMatroid, Mask, Permutation, MAX_GROUND};

/// An undirected simple graph on {1, …, n}, n ≤ 16.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u32>,
}

fn check_vertex(v: usize, n: usize) -> Result<u32> {
    if v >= 1 && v <= n {
        Ok((v - 1) as u32)
    } else {
        Err(Error::ElementOutOfRange { element: v, n })
    }
}

impl SimpleGraph {
    pub fn edgeless(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "graph size {n} exceeds {MAX_GROUND}");
        SimpleGraph {
            n,
            adj: vec![0; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::edgeless(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::edgeless(n);
        for a in 1..=n {
            for b in a + 1..=n {
                g.add_edge(a, b).expect("vertices in range");
            }
        }
        g
    }

    /// The path 1 – 2 – … – n.
    pub fn path(n: usize) -> Self {
        let mut g = SimpleGraph::edgeless(n);
        for a in 1..n {
            g.add_edge(a, a + 1).expect("vertices in range");
        }
        g
    }

    /// Each possible edge independently with probability 1/2, drawn in
    /// lexicographic pair order.
    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let mut g = SimpleGraph::edgeless(n);
        for a in 1..=n {
            for b in a + 1..=n {
                if rng.gen::<bool>() {
                    g.add_edge(a, b).expect("vertices in range");
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let ba = check_vertex(a, self.n)?;
        let bb = check_vertex(b, self.n)?;
        if ba == bb {
            return Err(Error::DistinctRequired { element: a });
        }
        self.adj[ba as usize] |= 1 << bb;
        self.adj[bb as usize] |= 1 << ba;
        Ok(())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        match (check_vertex(a, self.n), check_vertex(b, self.n)) {
            (Ok(ba), Ok(bb)) => self.adj[ba as usize] >> bb & 1 == 1,
            _ => false,
        }
    }

    /// Neighbourhood of v as a mask.
    pub fn neighbors(&self, v: usize) -> Mask {
        self.adj[v - 1]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Lowest edge in lexicographic order, if any.
    pub fn first_edge(&self) -> Option<(usize, usize)> {
        for a in 1..=self.n {
            let higher = self.adj[a - 1] >> a;
            if higher != 0 {
                let b = a + 1 + higher.trailing_zeros() as usize;
                return Some((a, b));
            }
        }
        None
    }

    /// The adjacency matrix over GF(2).
    pub fn adjacency_matrix(&self) -> Gf2SymMatrix {
        Gf2SymMatrix::from_bitrows(self.n, self.adj.clone())
    }

    /// The nondegeneracy delta-matroid of the graph: X feasible iff the
    /// induced subgraph on X is nondegenerate. ∅ is always feasible.
    pub fn delta_matroid(&self) -> DeltaMatroid {
        self.adjacency_matrix().delta_matroid()
    }

    /// Removes vertex v and relabels the survivors to {1, …, n − 1} in order.
    pub fn delete_vertex(&self, v: usize) -> Result<SimpleGraph> {
        let bv = check_vertex(v, self.n)?;
        let adj: Vec<u32> = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != bv as usize)
            .map(|(_, &row)| drop_bit(row & !(1u32 << bv), bv))
            .collect();
        Ok(SimpleGraph {
            n: self.n - 1,
            adj,
        })
    }

    /// Disjoint union; the right graph's labels are shifted up.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let n = self.n + other.n;
        if n > MAX_GROUND {
            return Err(Error::Capacity {
                task: "disjoint union",
                n,
                bound: MAX_GROUND,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(SimpleGraph { n, adj })
    }

    /// The pivot G^{ab} for an edge ab: among the other vertices, those seeing
    /// only a, those seeing only b, and those seeing both form three classes;
    /// every pair of vertices from two *different* classes has its edge
    /// toggled. Edges inside a class and edges at a or b stay put.
    pub fn pivot(&self, a: usize, b: usize) -> Result<SimpleGraph> {
        let ba = check_vertex(a, self.n)?;
        let bb = check_vertex(b, self.n)?;
        if ba == bb {
            return Err(Error::DistinctRequired { element: a });
        }
        if !self.has_edge(a, b) {
            return Err(Error::NotAnEdge { a, b });
        }
        let na = self.adj[ba as usize] & !(1 << bb);
        let nb = self.adj[bb as usize] & !(1 << ba);
        let only_a = na & !nb;
        let only_b = nb & !na;
        let both = na & nb;
        let mut g = self.clone();
        let toggle = |g: &mut SimpleGraph, class: Mask, others: Mask| {
            let mut rest = class;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                g.adj[v as usize] ^= others;
            }
        };
        toggle(&mut g, only_a, only_b | both);
        toggle(&mut g, only_b, only_a | both);
        toggle(&mut g, both, only_a | only_b);
        Ok(g)
    }

    /// Relabels the vertices.
    pub fn relabel(&self, p: &Permutation) -> Result<SimpleGraph> {
        if p.n() != self.n {
            return Err(Error::ElementOutOfRange {
                element: p.n(),
                n: self.n,
            });
        }
        let mut adj = vec![0u32; self.n];
        for (i, &row) in self.adj.iter().enumerate() {
            adj[p.image(i + 1) - 1] = p.apply_mask(row);
        }
        Ok(SimpleGraph { n: self.n, adj })
    }

    /// Lexicographically smallest adjacency encoding over all relabellings,
    /// plus a permutation taking `self` there. Brute force over n! (n ≤ 8).
    pub fn canonical_form(&self) -> Result<(SimpleGraph, Permutation)> {
        if self.n > MAX_CANON {
            return Err(Error::Capacity {
                task: "graph canonicalization",
                n: self.n,
                bound: MAX_CANON,
            });
        }
        let perms = all_perms_cached(self.n);
        let mut best = [u32::MAX; MAX_CANON];
        let mut best_p = 0;
        let mut cand = [0u32; MAX_CANON];
        for (pi, p) in perms.iter().enumerate() {
            cand[..self.n].fill(0);
            for (i, &row) in self.adj.iter().enumerate() {
                cand[p.image(i + 1) - 1] = p.apply_mask(row);
            }
            if cand[..self.n] < best[..self.n] {
                best[..self.n].copy_from_slice(&cand[..self.n]);
                best_p = pi;
            }
        }
        let canon = SimpleGraph {
            n: self.n,
            adj: best[..self.n].to_vec(),
        };
        Ok((canon, perms[best_p].clone()))
    }

    /// Interlace polynomial by vertex elimination: an edgeless graph on n
    /// vertices contributes x^n; otherwise, for the lowest edge ab,
    /// q(G) = q(G ∖ a) + q(G^{ab} ∖ b). Memoized on canonical forms.
    pub fn interlace_polynomial(&self) -> Result<IntPolynomial> {
        self.interlace_polynomial_memo(&mut GraphPolyMemo::new())
    }

    /// Memoized variant for bulk runs; the memo may be shared across graphs.
    pub fn interlace_polynomial_memo(&self, memo: &mut GraphPolyMemo) -> Result<IntPolynomial> {
        if self.edge_count() == 0 {
            return Ok(IntPolynomial::monomial(1, self.n));
        }
        let (canon, _) = self.canonical_form()?;
        if let Some(q) = memo.0.get(&canon) {
            return Ok(q.clone());
        }
        let (a, b) = canon.first_edge().expect("graph has an edge");
        let qa = canon
            .delete_vertex(a)?
            .interlace_polynomial_memo(memo)?;
        let qb = canon
            .pivot(a, b)?
            .delete_vertex(b)?
            .interlace_polynomial_memo(memo)?;
        let q = &qa + &qb;
        memo.0.insert(canon, q.clone());
        Ok(q)
    }

    /// Interlace polynomial with the first elimination forced through the edge
    /// ab; the rest of the recursion proceeds as usual. Agreement across all
    /// admissible first edges is the well-definedness check.
    pub fn interlace_polynomial_via_edge(&self, a: usize, b: usize) -> Result<IntPolynomial> {
        if !self.has_edge(a, b) {
            return Err(Error::NotAnEdge { a, b });
        }
        let mut memo = GraphPolyMemo::new();
        let qa = self.delete_vertex(a)?.interlace_polynomial_memo(&mut memo)?;
        let qb = self
            .pivot(a, b)?
            .delete_vertex(b)?
            .interlace_polynomial_memo(&mut memo)?;
        Ok(&qa + &qb)
    }

    /// The two edge moves at an ordered pair (a, b), plus their composition.
    ///
    /// `exchanged` toggles the single edge ab. `slid` toggles the adjacency
    /// c – a for every vertex c adjacent to b (c ≠ a). The two commute, which
    /// `both` relies on.
    pub fn moves(&self, a: usize, b: usize) -> Result<GraphMoves> {
        let ba = check_vertex(a, self.n)?;
        let bb = check_vertex(b, self.n)?;
        if ba == bb {
            return Err(Error::DistinctRequired { element: a });
        }
        let toggle_edge = |g: &mut SimpleGraph| {
            g.adj[ba as usize] ^= 1 << bb;
            g.adj[bb as usize] ^= 1 << ba;
        };
        let slide = |g: &mut SimpleGraph| {
            let targets = g.adj[bb as usize] & !(1u32 << ba);
            g.adj[ba as usize] ^= targets;
            let mut rest = targets;
            while rest != 0 {
                let c = rest.trailing_zeros();
                rest &= rest - 1;
                g.adj[c as usize] ^= 1 << ba;
            }
        };
        let mut exchanged = self.clone();
        toggle_edge(&mut exchanged);
        let mut slid = self.clone();
        slide(&mut slid);
        let mut both = slid.clone();
        toggle_edge(&mut both);
        // The other composition order must agree.
        let mut check = exchanged.clone();
        slide(&mut check);
        if check != both {
            return Err(Error::CommutationFailure { a, b });
        }
        Ok(GraphMoves {
            exchanged,
            slid,
            both,
        })
    }
}

/// Results of the two edge moves and their composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMoves {
    pub exchanged: SimpleGraph,
    pub slid: SimpleGraph,
    pub both: SimpleGraph,
}

/// Cache of interlace polynomials keyed by canonical graph form.
#[derive(Default)]
pub struct GraphPolyMemo(HashMap<SimpleGraph, IntPolynomial>);

impl GraphPolyMemo {
    pub fn new() -> Self {
        GraphPolyMemo(HashMap::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        write!(f, "graph(n={}; {})", self.n, edges.join(" "))
    }
}

// ---------------------------------------------------------------------------
// Text format `graph v1`:
//     graph v1
//     n 3
//     edge 1 2
//     edge 2 3

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph v1\nn {}", self.n)?;
        for (a, b) in self.edges() {
            write!(f, "\nedge {a} {b}")?;
        }
        Ok(())
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl FromStr for SimpleGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().map(|l| l.trim_end()).collect();
        match lines.first() {
            Some(&"graph v1") => {}
            _ => return Err(parse_err(1, "expected header `graph v1`")),
        }
        let n: usize = match lines
            .get(1)
            .map(|l| l.split_whitespace().collect::<Vec<_>>())
            .as_deref()
        {
            Some(["n", v]) => v
                .parse()
                .map_err(|_| parse_err(2, format!("invalid vertex count `{v}`")))?,
            _ => return Err(parse_err(2, "expected `n <size>`")),
        };
        if n > MAX_GROUND {
            return Err(parse_err(
                2,
                format!("vertex count {n} exceeds the bound of {MAX_GROUND}"),
            ));
        }
        let mut g = SimpleGraph::edgeless(n);
        for (i, line) in lines.iter().enumerate().skip(2) {
            let lineno = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let [kw, sa, sb] = toks.as_slice() else {
                return Err(parse_err(lineno, "expected `edge <a> <b>`"));
            };
            if *kw != "edge" {
                return Err(parse_err(lineno, "expected `edge <a> <b>`"));
            }
            let a: usize = sa
                .parse()
                .map_err(|_| parse_err(lineno, format!("invalid vertex `{sa}`")))?;
            let b: usize = sb
                .parse()
                .map_err(|_| parse_err(lineno, format!("invalid vertex `{sb}`")))?;
            if g.has_edge(a, b) {
                return Err(parse_err(lineno, format!("edge {a} {b} listed twice")));
            }
            g.add_edge(a, b)
                .map_err(|e| parse_err(lineno, e.to_string()))?;
        }
        Ok(g)
    }
}
