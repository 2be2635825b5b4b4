//! The quantum Bruhat graph `Γ_n`, shortest paths and tilted Bruhat intervals.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{check_gate, domain, Error, Result};
use crate::permcore::{cyclic_interval_contains, Perm, Subset};

const BFS_GATE: usize = 8;

/// Exponent vector of `q_1, ..., q_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct DegreeVec(pub Vec<u32>);

impl DegreeVec {
    pub fn zero(n: usize) -> DegreeVec {
        DegreeVec(vec![0; n.saturating_sub(1)])
    }

    /// Indicator vector of the positions `[i, j)`.
    pub fn indicator(n: usize, i: usize, j: usize) -> DegreeVec {
        let mut d = DegreeVec::zero(n);
        for k in i..j {
            d.0[k - 1] = 1;
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &DegreeVec) -> DegreeVec {
        DegreeVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &DegreeVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for DegreeVec {
    /// Monomial form, e.g. `q1q2q3^2`; `1` for the zero vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        for (k, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "q{}", k + 1)?,
                _ => write!(f, "q{}^{}", k + 1, e)?,
            }
        }
        Ok(())
    }
}

/// An edge `w -> w t_ij` of `Γ_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QbgEdge {
    pub source: Perm,
    pub target: Perm,
    pub i: usize,
    pub j: usize,
    pub weight: DegreeVec,
}

impl QbgEdge {
    pub fn is_quantum(&self) -> bool {
        !self.weight.is_zero()
    }
}

/// Weight of the edge `w -> w t_ij`, or `None` if there is no such edge.
///
/// Uses the cyclic-interval criterion: the edge exists iff no `w_k` with
/// `i < k < j` lies in `(w_i, w_j)_c`.
pub fn edge_weight(w: &Perm, i: usize, j: usize) -> Option<DegreeVec> {
    debug_assert!(1 <= i && i < j && j <= w.n());
    let n = w.n();
    let (wi, wj) = (w.at(i), w.at(j));
    if (i + 1..j).any(|k| cyclic_interval_contains(n, wi, wj, w.at(k), false, false)) {
        return None;
    }
    Some(if wi < wj { DegreeVec::zero(n) } else { DegreeVec::indicator(n, i, j) })
}

/// [`edge_weight`] cross-checked against the two length conditions
/// (`ℓ` up by one for strong edges, down by `2(j-i)-1` for quantum edges).
pub fn edge_weight_checked(w: &Perm, i: usize, j: usize) -> Result<Option<DegreeVec>> {
    if !(1 <= i && i < j && j <= w.n()) {
        return domain(format!("positions ({i},{j}) invalid for n={}", w.n()));
    }
    let fast = edge_weight(w, i, j);
    let l = w.length() as i64;
    let l2 = w.swap_positions(i, j).length() as i64;
    let by_length = if l2 == l + 1 {
        Some(DegreeVec::zero(w.n()))
    } else if l2 == l + 1 - 2 * (j - i) as i64 {
        Some(DegreeVec::indicator(w.n(), i, j))
    } else {
        None
    };
    if fast != by_length {
        return Err(Error::Inconsistency(format!(
            "edge {w} -> t({i},{j}): cyclic criterion {fast:?}, length criterion {by_length:?}"
        )));
    }
    Ok(fast)
}

/// All outgoing edges of `w`.
pub fn out_edges(w: &Perm) -> Vec<QbgEdge> {
    let n = w.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if let Some(weight) = edge_weight(w, i, j) {
                out.push(QbgEdge { source: w.clone(), target: w.swap_positions(i, j), i, j, weight });
            }
        }
    }
    out
}

/// All edges of `Γ_n`.
pub fn all_edges(n: usize) -> Vec<QbgEdge> {
    Perm::all(n).iter().flat_map(out_edges).collect()
}

/// Graphviz rendering of `Γ_n`; quantum edges are dashed and labelled by weight.
pub fn graph_dot(n: usize) -> String {
    let mut s = format!("digraph Gamma{n} {{\n");
    for w in Perm::all(n) {
        s.push_str(&format!("  \"{w}\";\n"));
    }
    for e in all_edges(n) {
        if e.is_quantum() {
            s.push_str(&format!("  \"{}\" -> \"{}\" [style=dashed, label=\"{}\"];\n", e.source, e.target, e.weight));
        } else {
            s.push_str(&format!("  \"{}\" -> \"{}\";\n", e.source, e.target));
        }
    }
    s.push_str("}\n");
    s
}

type BfsKey = (bool, Perm);

fn bfs_cache() -> &'static Mutex<HashMap<BfsKey, Arc<Vec<u8>>>> {
    static CACHE: OnceLock<Mutex<HashMap<BfsKey, Arc<Vec<u8>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

const UNREACHED: u8 = u8::MAX;

/// BFS distance table indexed by [`Perm::index`]. `forward` gives distances
/// from `root`; otherwise distances to `root`.
fn bfs_table(root: &Perm, forward: bool) -> Result<Arc<Vec<u8>>> {
    let n = root.n();
    check_gate("breadth-first search", "BFS", n, BFS_GATE)?;
    let key = (forward, root.clone());
    if let Some(t) = bfs_cache().lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let size: usize = (1..=n).product();
    let mut dist = vec![UNREACHED; size];
    let mut queue = VecDeque::new();
    dist[root.index()] = 0;
    queue.push_back(root.clone());
    while let Some(x) = queue.pop_front() {
        let dx = dist[x.index()];
        for i in 1..=n {
            for j in i + 1..=n {
                let y = x.swap_positions(i, j);
                // forward: x -> y must be an edge; backward: y -> x must be.
                let ok = if forward { edge_weight(&x, i, j).is_some() } else { edge_weight(&y, i, j).is_some() };
                if ok && dist[y.index()] == UNREACHED {
                    dist[y.index()] = dx + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    if dist.contains(&UNREACHED) {
        return Err(Error::Inconsistency(format!("Γ_{n} is not strongly connected from {root}")));
    }
    let table = Arc::new(dist);
    let mut cache = bfs_cache().lock().unwrap();
    if cache.len() > 4096 {
        cache.clear();
    }
    cache.insert(key, table.clone());
    Ok(table)
}

fn same_n(u: &Perm, v: &Perm) -> Result<()> {
    if u.n() != v.n() {
        return domain(format!("{u} and {v} have different sizes"));
    }
    Ok(())
}

/// Length `ℓ(u,v)` of a shortest directed path from `u` to `v`.
pub fn ell(u: &Perm, v: &Perm) -> Result<usize> {
    same_n(u, v)?;
    Ok(bfs_table(u, true)?[v.index()] as usize)
}

/// One shortest path from `u` to `v`, as a list of edges.
pub fn shortest_path(u: &Perm, v: &Perm) -> Result<Vec<QbgEdge>> {
    same_n(u, v)?;
    let to_v = bfs_table(v, false)?;
    let mut path = Vec::new();
    let mut x = u.clone();
    while x != *v {
        let dx = to_v[x.index()];
        let e = out_edges(&x)
            .into_iter()
            .find(|e| to_v[e.target.index()] + 1 == dx)
            .ok_or_else(|| Error::Inconsistency(format!("no descending edge out of {x}")))?;
        x = e.target.clone();
        path.push(e);
    }
    Ok(path)
}

/// Total weight of a path.
pub fn path_weight(n: usize, path: &[QbgEdge]) -> DegreeVec {
    path.iter().fold(DegreeVec::zero(n), |acc, e| acc.add(&e.weight))
}

/// Heights `h_0, ..., h_n` of the lattice path `Λ(A,B)`: step `i` rises for
/// `i ∈ A \ B`, falls for `i ∈ B \ A` and is flat otherwise.
pub fn lattice_heights(a: &Subset, b: &Subset) -> Result<Vec<i64>> {
    if a.len() != b.len() || a.n() != b.n() {
        return domain(format!("lattice path needs |A|=|B|, got {a} and {b}"));
    }
    let mut h = vec![0i64];
    for i in 1..=a.n() {
        let step = match (a.contains(i), b.contains(i)) {
            (true, false) => 1,
            (false, true) => -1,
            _ => 0,
        };
        h.push(h[i - 1] + step);
    }
    Ok(h)
}

/// `depth(A,B) = max(0, -min h)`.
pub fn lattice_depth(a: &Subset, b: &Subset) -> Result<u32> {
    let h = lattice_heights(a, b)?;
    Ok((-h.iter().copied().min().unwrap()).max(0) as u32)
}

/// The `r ∈ [n]` where the path attains its minimum at `x = r-1`; these are
/// exactly the `r` with `A <=_r B`.
pub fn min_set(a: &Subset, b: &Subset) -> Result<Vec<usize>> {
    let h = lattice_heights(a, b)?;
    let m = *h.iter().min().unwrap();
    Ok((1..=a.n()).filter(|&r| h[r - 1] == m).collect())
}

/// Minimal degree `d(u,v)` by the lattice-path depth formula.
pub fn min_degree(u: &Perm, v: &Perm) -> Result<DegreeVec> {
    same_n(u, v)?;
    let n = u.n();
    let mut d = DegreeVec::zero(n);
    for k in 1..n {
        d.0[k - 1] = lattice_depth(&u.prefix_set(k), &v.prefix_set(k))?;
    }
    Ok(d)
}

/// Minimal degree as the weight of one BFS shortest path.
pub fn min_degree_bfs(u: &Perm, v: &Perm) -> Result<DegreeVec> {
    Ok(path_weight(u.n(), &shortest_path(u, v)?))
}

/// [`min_degree`] cross-checked against [`min_degree_bfs`].
pub fn min_degree_checked(u: &Perm, v: &Perm) -> Result<DegreeVec> {
    let d = min_degree(u, v)?;
    let b = min_degree_bfs(u, v)?;
    if d != b {
        return Err(Error::Inconsistency(format!("d({u},{v}): depth formula {d:?}, shortest path {b:?}")));
    }
    Ok(d)
}

/// The tilted Bruhat interval `[u,v]`, with ranks `ℓ(u,·)`.
#[derive(Clone, Debug)]
pub struct TiltedInterval {
    pub u: Perm,
    pub v: Perm,
    pub ell: usize,
    /// member -> `ℓ(u, member)`
    pub rank: BTreeMap<Perm, usize>,
}

/// Members `w` with `ℓ(u,w) + ℓ(w,v) = ℓ(u,v)`.
pub fn tilted_interval(u: &Perm, v: &Perm) -> Result<TiltedInterval> {
    same_n(u, v)?;
    let from_u = bfs_table(u, true)?;
    let to_v = bfs_table(v, false)?;
    let total = from_u[v.index()];
    let mut rank = BTreeMap::new();
    for (idx, (&a, &b)) in from_u.iter().zip(to_v.iter()).enumerate() {
        if a + b == total {
            rank.insert(Perm::from_index(u.n(), idx), a as usize);
        }
    }
    Ok(TiltedInterval { u: u.clone(), v: v.clone(), ell: total as usize, rank })
}

impl TiltedInterval {
    pub fn contains(&self, w: &Perm) -> bool {
        self.rank.contains_key(w)
    }

    pub fn members(&self) -> impl Iterator<Item = &Perm> {
        self.rank.keys()
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    /// `x ⪯ y` iff `ℓ(u,x) + ℓ(x,y) + ℓ(y,v) = ℓ(u,v)`.
    pub fn leq(&self, x: &Perm, y: &Perm) -> Result<bool> {
        match (self.rank.get(x), self.rank.get(y)) {
            (Some(&rx), Some(&ry)) => Ok(ry >= rx && ell(x, y)? == ry - rx),
            _ => Ok(false),
        }
    }

    /// Cover relations of the interval (pairs one rank apart joined by an edge).
    pub fn hasse_edges(&self) -> Vec<(Perm, Perm)> {
        let mut out = Vec::new();
        for (x, &rx) in &self.rank {
            for e in out_edges(x) {
                if self.rank.get(&e.target) == Some(&(rx + 1)) {
                    out.push((x.clone(), e.target));
                }
            }
        }
        out
    }

    /// Number of members at each rank.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.ell + 1];
        for &r in self.rank.values() {
            sizes[r] += 1;
        }
        sizes
    }

    /// Rank two with exactly two middle elements.
    pub fn is_diamond(&self) -> bool {
        self.ell == 2 && self.rank_sizes() == vec![1, 2, 1]
    }

    /// Graphviz Hasse diagram.
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph interval_{}_{} {{\n  rankdir=BT;\n", self.u, self.v);
        for w in self.rank.keys() {
            s.push_str(&format!("  \"{w}\";\n"));
        }
        for (x, y) in self.hasse_edges() {
            let i = (1..=x.n()).find(|&i| x.at(i) != y.at(i)).unwrap();
            let j = (1..=x.n()).rev().find(|&j| x.at(j) != y.at(j)).unwrap();
            match edge_weight(&x, i, j) {
                Some(w) if !w.is_zero() => {
                    s.push_str(&format!("  \"{x}\" -> \"{y}\" [style=dashed, label=\"{w}\"];\n"))
                }
                _ => s.push_str(&format!("  \"{x}\" -> \"{y}\";\n")),
            }
        }
        s.push_str("}\n");
        s
    }
}

/// A total order on the positive roots `e_i - e_j` (`i < j`) of type A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionOrder {
    n: usize,
    roots: Vec<(usize, usize)>,
    pos: HashMap<(usize, usize), usize>,
}

impl ReflectionOrder {
    /// Validates a root sequence: every positive root exactly once, and for
    /// `i < j < k` the root `e_i - e_k` lies between `e_i - e_j` and `e_j - e_k`.
    pub fn new(n: usize, roots: Vec<(usize, usize)>) -> Result<ReflectionOrder> {
        let mut pos = HashMap::new();
        for (p, &(i, j)) in roots.iter().enumerate() {
            if !(1 <= i && i < j && j <= n) || pos.insert((i, j), p).is_some() {
                return domain(format!("root e{i}-e{j} is invalid or repeated"));
            }
        }
        if pos.len() != n * (n - 1) / 2 {
            return domain(format!("expected {} roots, got {}", n * (n - 1) / 2, pos.len()));
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    let (a, b, c) = (pos[&(i, j)], pos[&(i, k)], pos[&(j, k)]);
                    if !((a < b && b < c) || (c < b && b < a)) {
                        return domain(format!("e{i}-e{k} is not between e{i}-e{j} and e{j}-e{k}"));
                    }
                }
            }
        }
        Ok(ReflectionOrder { n, roots, pos })
    }

    /// The order `γ_j = s_{i_1} ... s_{i_{j-1}}(α_{i_j})` of a reduced word for `w_0`.
    pub fn from_reduced_word(n: usize, word: &[usize]) -> Result<ReflectionOrder> {
        let mut sigma = Perm::identity(n);
        let mut roots = Vec::new();
        for &i in word {
            if i == 0 || i >= n {
                return domain(format!("generator s{i} invalid for n={n}"));
            }
            let (a, b) = (sigma.at(i), sigma.at(i + 1));
            if a > b {
                return domain("word is not reduced");
            }
            roots.push((a, b));
            sigma = sigma.compose(&Perm::simple(n, i));
        }
        ReflectionOrder::new(n, roots)
    }

    /// The order from `w_0 = (s_1 ... s_{n-1})(s_1 ... s_{n-2}) ... s_1`,
    /// which lists `e_1 - e_2, ..., e_1 - e_n, e_2 - e_3, ...`.
    pub fn standard(n: usize) -> ReflectionOrder {
        let word: Vec<usize> = (1..n).rev().flat_map(|m| 1..=m).collect();
        ReflectionOrder::from_reduced_word(n, &word).expect("standard word is reduced")
    }

    pub fn roots(&self) -> &[(usize, usize)] {
        &self.roots
    }

    pub fn position(&self, i: usize, j: usize) -> usize {
        self.pos[&(i, j)]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// The shortest path from `u` to `v` whose labels `e_i - e_j` increase in the
/// given reflection order. Exactly one such path must exist.
pub fn increasing_path(u: &Perm, v: &Perm, order: &ReflectionOrder) -> Result<Vec<QbgEdge>> {
    same_n(u, v)?;
    if order.n() != u.n() {
        return domain("reflection order has the wrong size");
    }
    let to_v = bfs_table(v, false)?;
    let mut found: Vec<Vec<QbgEdge>> = Vec::new();
    let mut stack = Vec::new();
    fn dfs(
        x: &Perm,
        v: &Perm,
        last: Option<usize>,
        to_v: &[u8],
        order: &ReflectionOrder,
        stack: &mut Vec<QbgEdge>,
        found: &mut Vec<Vec<QbgEdge>>,
    ) {
        if x == v {
            found.push(stack.clone());
            return;
        }
        let dx = to_v[x.index()];
        for e in out_edges(x) {
            let p = order.position(e.i, e.j);
            if to_v[e.target.index()] + 1 == dx && last.is_none_or(|l| p > l) {
                let y = e.target.clone();
                stack.push(e);
                dfs(&y, v, Some(p), to_v, order, stack, found);
                stack.pop();
            }
        }
    }
    dfs(u, v, None, &to_v, order, &mut stack, &mut found);
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        k => Err(Error::Inconsistency(format!("{k} increasing shortest paths from {u} to {v}"))),
    }
}

/// `w ↦ τw` with `τ = 23...n1`, i.e. every value `x` becomes `x mod n + 1`.
pub fn rotate(w: &Perm) -> Perm {
    Perm::long_cycle(w.n()).compose(w)
}
