//! Funnels: the strip of diagram triangles crossed by the vertical ray over
//! a non-integer rational `α`.
//!
//! A triangle belongs to the funnel when the ray passes through its interior,
//! i.e. its vertices lie strictly on both sides of `x = α` or one of them is
//! `ν(α)` with the other two on opposite sides. Triangles that only touch the
//! ray at `ν(α)` (the fan below it) are not part of the strip.
//!
//! The index of a vertex counts the funnel edges at that vertex that cross the
//! ray, i.e. whose endpoints lie strictly on opposite sides of `x = α`. Edges
//! ending at `ν(α)` touch the ray but do not cross it.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::{Edge, Triangle};
use crate::contfrac::{convergents, evaluate, standard_expansion, CfSequence};
use crate::error::{Error, Result};
use crate::rational::{mediant, ExtendedRational};

#[derive(Clone, Debug)]
pub struct Funnel {
    base: ExtendedRational,
    terms: CfSequence,
    triangles: Vec<Triangle>,
    left_edge: Vec<ExtendedRational>,
    right_edge: Vec<ExtendedRational>,
    indices: BTreeMap<ExtendedRational, u64>,
}

impl Funnel {
    pub fn base(&self) -> &ExtendedRational {
        &self.base
    }

    /// Standard expansion of the base.
    pub fn terms(&self) -> &CfSequence {
        &self.terms
    }

    /// Ordered from the top (height 1) down to the triangle at `ν(α)`.
    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    /// Left boundary vertices, top to bottom, ending at `α`.
    pub fn left_edge(&self) -> &[ExtendedRational] {
        &self.left_edge
    }

    pub fn right_edge(&self) -> &[ExtendedRational] {
        &self.right_edge
    }

    /// Index of every vertex except the bottom vertex `α`.
    pub fn indices(&self) -> &BTreeMap<ExtendedRational, u64> {
        &self.indices
    }

    pub fn vertices(&self) -> BTreeSet<ExtendedRational> {
        self.triangles.iter().flatten().cloned().collect()
    }

    pub fn edges(&self) -> BTreeSet<Edge> {
        funnel_edges(&self.triangles)
    }

    pub fn contains_vertex(&self, v: &ExtendedRational) -> bool {
        self.triangles.iter().any(|t| t.contains(v))
    }

    pub fn report(&self) -> FunnelReport {
        FunnelReport {
            base: self.base.clone(),
            terms: self.terms.clone(),
            triangles: self.triangles.clone(),
            indices: self
                .indices
                .iter()
                .map(|(v, &k)| (v.to_string(), k))
                .collect(),
        }
    }
}

/// JSON shape of a funnel.
#[derive(Clone, Debug, Serialize)]
pub struct FunnelReport {
    pub base: ExtendedRational,
    pub terms: CfSequence,
    pub triangles: Vec<Triangle>,
    pub indices: BTreeMap<String, u64>,
}

fn funnel_edges(triangles: &[Triangle]) -> BTreeSet<Edge> {
    let mut edges = BTreeSet::new();
    for [a, b, c] in triangles {
        edges.insert((a.clone(), b.clone()));
        edges.insert((b.clone(), c.clone()));
        edges.insert((a.clone(), c.clone()));
    }
    edges
}

fn crosses(edge: &Edge, alpha: &ExtendedRational) -> bool {
    let (a, b) = edge;
    (a < alpha && alpha < b) || (b < alpha && alpha < a)
}

/// Builds `F_α` from the standard expansion of `α`.
///
/// The strip starts at `[a0, a0 + 1]` and descends by mediants. Run `j`
/// consists of `a_j` steps, all moving the right endpoint (odd `j`) or the
/// left endpoint (even `j`); the first and last runs are one step shorter
/// because the top triangle and the final triangle at `ν(α)` close them.
pub fn funnel(alpha: &ExtendedRational) -> Result<Funnel> {
    if alpha.is_infinite() {
        return Err(Error::Infinite(alpha.to_string()));
    }
    if alpha.is_integer() {
        return Err(Error::DegenerateFunnel(alpha.to_string()));
    }
    let terms = standard_expansion(alpha)?;
    let n = terms.n();
    let a0 = terms.a0().clone();
    let mut left = ExtendedRational::integer(a0.clone());
    let mut right = ExtendedRational::integer(a0 + BigInt::one());
    let mut left_edge = vec![left.clone()];
    let mut right_edge = vec![right.clone()];
    let mut triangles = Vec::new();

    for (j, a) in terms.tail().iter().enumerate().map(|(k, a)| (k + 1, a)) {
        let steps = a - BigInt::from(u8::from(j == 1)) - BigInt::from(u8::from(j == n));
        let steps = steps
            .to_u64()
            .ok_or_else(|| Error::Invariant(format!("run length {steps} for term {a}")))?;
        for _ in 0..steps {
            let m = mediant(&left, &right)?;
            triangles.push([left.clone(), m.clone(), right.clone()]);
            let moves_right = j % 2 == 1;
            if moves_right != (alpha < &m) || &m == alpha {
                return Err(Error::Invariant(format!(
                    "descent toward {alpha} left the strip at {m}"
                )));
            }
            if moves_right {
                right_edge.push(m.clone());
                right = m;
            } else {
                left_edge.push(m.clone());
                left = m;
            }
        }
    }
    let last = mediant(&left, &right)?;
    if &last != alpha {
        return Err(Error::Invariant(format!(
            "descent toward {alpha} ended at {last}"
        )));
    }
    triangles.push([left, last, right]);
    left_edge.push(alpha.clone());
    right_edge.push(alpha.clone());

    let edges = funnel_edges(&triangles);
    let mut indices = BTreeMap::new();
    for v in triangles.iter().flatten() {
        if v != alpha && !indices.contains_key(v) {
            indices.insert(v.clone(), count_crossing(&edges, v, alpha));
        }
    }
    Ok(Funnel {
        base: alpha.clone(),
        terms,
        triangles,
        left_edge,
        right_edge,
        indices,
    })
}

fn count_crossing(edges: &BTreeSet<Edge>, v: &ExtendedRational, alpha: &ExtendedRational) -> u64 {
    edges
        .iter()
        .filter(|e| (&e.0 == v || &e.1 == v) && crosses(e, alpha))
        .count() as u64
}

/// Number of funnel edges at `v` crossing the defining ray. The bottom vertex
/// `α` has index 0: every edge there ends on the ray rather than crossing it.
pub fn vertex_index(f: &Funnel, v: &ExtendedRational) -> Result<u64> {
    if !f.contains_vertex(v) {
        return Err(Error::NotInFunnel {
            vertex: v.to_string(),
            base: f.base.to_string(),
        });
    }
    Ok(count_crossing(&f.edges(), v, &f.base))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseCheck {
    pub clause: u8,
    pub statement: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HatcherReport {
    pub sequence: CfSequence,
    pub clauses: Vec<ClauseCheck>,
}

impl HatcherReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

/// Checks the funnel of a standard sequence against its convergents:
///
/// 1. `ν(c_j)` is on the left edge for even `j`, the right edge for odd `j`;
/// 2. `ν(c_0)` has index `a_1` and `ν(c_{n-1})` has index `a_n`;
/// 3. `ν(c_j)` has index `1 + a_{j+1}` for `0 < j < n - 1`.
pub fn verify_hatcher(seq: &CfSequence) -> Result<HatcherReport> {
    seq.ensure_standard()?;
    let n = seq.n();
    if n == 0 {
        return Err(Error::DegenerateFunnel(seq.to_string()));
    }
    let f = funnel(&evaluate(seq))?;
    let c = convergents(seq);
    let a = seq.terms();
    let index = |v: &ExtendedRational| vertex_index(&f, v);

    let mut edge_failures = Vec::new();
    for (j, cj) in c.iter().enumerate() {
        let (side, name) = if j % 2 == 0 {
            (f.left_edge(), "left")
        } else {
            (f.right_edge(), "right")
        };
        if !side.contains(cj) {
            edge_failures.push(format!("c_{j} = {cj} is not on the {name} edge"));
        }
    }

    let mut end_failures = Vec::new();
    // with n = 1 both ends are c_0 and a_1 = a_n
    let ends: &[(usize, &BigInt)] = if n == 1 {
        &[(0, &a[1])]
    } else {
        &[(0, &a[1]), (n - 1, &a[n])]
    };
    for &(j, expected) in ends {
        let got = index(&c[j])?;
        if BigInt::from(got) != *expected {
            end_failures.push(format!(
                "index of c_{j} = {} is {got}, expected {expected}",
                c[j]
            ));
        }
    }

    let mut mid_failures = Vec::new();
    for j in 1..n.saturating_sub(1) {
        let got = index(&c[j])?;
        let expected = &a[j + 1] + 1;
        if BigInt::from(got) != expected {
            mid_failures.push(format!(
                "index of c_{j} = {} is {got}, expected {expected}",
                c[j]
            ));
        }
    }

    let clause = |k: u8, statement: &str, failures: Vec<String>| ClauseCheck {
        clause: k,
        statement: statement.to_string(),
        passed: failures.is_empty(),
        failures,
    };
    Ok(HatcherReport {
        sequence: seq.clone(),
        clauses: vec![
            clause(
                1,
                "even convergents on the left edge, odd on the right",
                edge_failures,
            ),
            clause(2, "index(c_0) = a_1 and index(c_(n-1)) = a_n", end_failures),
            clause(3, "index(c_j) = 1 + a_(j+1) for 0 < j < n-1", mid_failures),
        ],
    })
}
