//! Finite windows of the Stern–Brocot diagram: vertices `ν(p/q)`, Farey
//! edges between them, and the Farey triangles they bound.

mod funnel;
mod svg;

pub use funnel::{
    funnel, verify_hatcher, vertex_index, ClauseCheck, Funnel, FunnelReport, HatcherReport,
};
pub use svg::{render_svg, Overlay, SvgOptions};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{mediant, ExtendedRational};

/// Three vertices in increasing order.
pub type Triangle = [ExtendedRational; 3];

/// An unordered edge, stored with the smaller endpoint first.
pub type Edge = (ExtendedRational, ExtendedRational);

#[derive(Clone, Debug)]
pub struct Diagram {
    lo: ExtendedRational,
    hi: ExtendedRational,
    max_den: u64,
    vertices: Vec<ExtendedRational>,
    edges: Vec<Edge>,
    triangles: Vec<Triangle>,
}

impl Diagram {
    /// All `p/q` with `lo <= p/q <= hi` and `q <= max_den`, with every Farey
    /// edge and triangle among them.
    ///
    /// Built by mediant subdivision of `[k, k+1]` for the integers spanning the
    /// window. Each vertex is born as the mediant of its two Farey neighbours of
    /// smaller denominator, and those are the only such neighbours, so the
    /// subdivision edges are all the Farey edges of the window.
    pub fn build(lo: &ExtendedRational, hi: &ExtendedRational, max_den: u64) -> Result<Self> {
        let lo_r = lo.finite()?;
        let hi_r = hi.finite()?;
        if lo_r >= hi_r {
            return Err(Error::EmptyWindow(format!("[{lo}, {hi}]")));
        }
        if max_den == 0 {
            return Err(Error::EmptyWindow("max denominator 0".into()));
        }
        let cap = BigInt::from(max_den);
        let in_window = |x: &ExtendedRational| lo <= x && x <= hi;

        let first = lo_r.floor().to_integer();
        let last = hi_r.ceil().to_integer();
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut triangles = Vec::new();

        let mut k = first;
        while k < last {
            let left = ExtendedRational::integer(k.clone());
            let right = ExtendedRational::integer(&k + BigInt::one());
            if in_window(&left) {
                vertices.push(left.clone());
            }
            if in_window(&left) && in_window(&right) {
                edges.push((left.clone(), right.clone()));
            }
            let mut stack = vec![(left, right)];
            while let Some((l, r)) = stack.pop() {
                // the interval (l, r) misses the window entirely
                if &r <= lo || &l >= hi {
                    continue;
                }
                let m = mediant(&l, &r)?;
                if m.denom() > &cap {
                    continue;
                }
                let keep = [in_window(&l), in_window(&m), in_window(&r)];
                if keep[1] {
                    vertices.push(m.clone());
                    if keep[0] {
                        edges.push((l.clone(), m.clone()));
                    }
                    if keep[2] {
                        edges.push((m.clone(), r.clone()));
                    }
                    if keep[0] && keep[2] {
                        triangles.push([l.clone(), m.clone(), r.clone()]);
                    }
                }
                stack.push((m.clone(), r));
                stack.push((l, m));
            }
            k += 1;
        }
        let top = ExtendedRational::integer(last);
        if in_window(&top) {
            vertices.push(top);
        }
        vertices.sort();
        edges.sort();
        triangles.sort();
        Ok(Self {
            lo: lo.clone(),
            hi: hi.clone(),
            max_den,
            vertices,
            edges,
            triangles,
        })
    }

    pub fn window(&self) -> (&ExtendedRational, &ExtendedRational) {
        (&self.lo, &self.hi)
    }

    pub fn max_den(&self) -> u64 {
        self.max_den
    }

    pub fn vertices(&self) -> &[ExtendedRational] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn contains_vertex(&self, v: &ExtendedRational) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    pub fn contains_edge(&self, a: &ExtendedRational, b: &ExtendedRational) -> bool {
        let e = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        self.edges.binary_search(&e).is_ok()
    }
}

/// Free-function form of [`Diagram::build`].
pub fn build_diagram(
    lo: &ExtendedRational,
    hi: &ExtendedRational,
    max_den: u64,
) -> Result<Diagram> {
    Diagram::build(lo, hi, max_den)
}
