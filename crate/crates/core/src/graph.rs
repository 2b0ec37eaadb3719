//! Simple undirected graphs: ingestion, generators, walk counts and the
//! degree-based graph classes (regular, semiregular, pseudoregular, ...).

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n` stored as sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidArgument("a graph needs at least one vertex".into()));
        }
        Ok(Graph {
            adjacency: vec![Vec::new(); n],
            m: 0,
        })
    }

    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = Graph::empty(n)?.adjacency;
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice_m = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Ok(Graph {
            adjacency,
            m: twice_m / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `out = A x` for the adjacency matrix `A`. Neighbors are summed in
    /// ascending index order.
    pub fn apply(&self, x: &[f64], out: &mut [f64]) {
        for (o, list) in out.iter_mut().zip(&self.adjacency) {
            *o = list.iter().map(|&j| x[j]).sum();
        }
    }

    /// Connected component label per vertex, labelled in order of first vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if label[v] == usize::MAX {
                        label[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn is_connected(&self) -> bool {
        self.components().0 == 1
    }
}

/// Parses a whitespace-separated edge list, one edge per line. `#` starts a
/// comment. Labels are 0-based when the smallest label is 0 and 1-based
/// otherwise; the vertex count is the largest normalized label plus one.
///
/// A `# n=<count>` header, as written by [`to_edge_list`], fixes the labels
/// as 0-based and the vertex count to `<count>`, so isolated vertices survive
/// a round trip.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut raw = Vec::new();
    let mut declared: Option<usize> = None;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (body, comment) = line.split_once('#').unwrap_or((line, ""));
        let body = body.trim();
        if raw.is_empty() && body.is_empty() && declared.is_none() {
            declared = declared_order(comment);
        }
        if body.is_empty() {
            continue;
        }
        let mut labels = [0u64; 2];
        let mut tokens = body.split_whitespace();
        for slot in &mut labels {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: line_no,
                msg: "expected two vertex labels".into(),
            })?;
            *slot = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("`{tok}` is not a nonnegative integer label"),
            })?;
        }
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("unexpected token `{extra}` after the two vertex labels"),
            });
        }
        if labels[0] == labels[1] {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("self-loop on vertex {}", labels[0]),
            });
        }
        raw.push((labels[0], labels[1]));
    }
    if let Some(n) = declared {
        let mut edges = Vec::with_capacity(raw.len());
        for (u, v) in raw {
            let (Ok(u), Ok(v)) = (usize::try_from(u), usize::try_from(v)) else {
                return Err(Error::InvalidArgument("vertex label too large".into()));
            };
            if u.max(v) >= n {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("label {} exceeds the declared n={n}", u.max(v)),
                });
            }
            edges.push((u, v));
        }
        return Graph::from_edges(n, edges);
    }
    if raw.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "edge list contains no edges".into(),
        });
    }
    let min = raw.iter().map(|&(u, v)| u.min(v)).min().unwrap_or(0);
    let offset = if min == 0 { 0 } else { 1 };
    let max = raw.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
    let n = usize::try_from(max - offset + 1)
        .map_err(|_| Error::InvalidArgument(format!("vertex label {max} too large")))?;
    let edges = raw
        .into_iter()
        .map(|(u, v)| ((u - offset) as usize, (v - offset) as usize));
    Graph::from_edges(n, edges)
}

fn declared_order(comment: &str) -> Option<usize> {
    comment
        .split_whitespace()
        .find_map(|tok| tok.strip_prefix("n="))
        .and_then(|v| v.parse().ok())
}

/// Writes the graph as a 0-based edge list with a comment header.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# n={} m={}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_BIAS: u8 = 63;
const G6_LONG: u8 = 126;

/// Decodes one graph6 line. The optional `>>graph6<<` prefix and trailing
/// whitespace are accepted; padding bits in the last byte are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let s = line.trim_end();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(G6_BIAS..=G6_LONG).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside the graph6 range")));
    }
    let (n, header) = match bytes {
        [] => return Err(Error::Graph6("empty line".into())),
        [G6_LONG, G6_LONG, rest @ ..] => (read_g6_int(rest, 6)?, 8),
        [G6_LONG, rest @ ..] => (read_g6_int(rest, 3)?, 4),
        [b, ..] => ((b - G6_BIAS) as usize, 1),
    };
    let body = &bytes[header..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "body has {} bytes, expected {expected} for n = {n}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - G6_BIAS;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).map_err(|e| Error::Graph6(e.to_string()))
}

fn read_g6_int(bytes: &[u8], len: usize) -> Result<usize> {
    if bytes.len() < len {
        return Err(Error::Graph6("truncated size header".into()));
    }
    Ok(bytes[..len]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - G6_BIAS) as usize))
}

/// Encodes the graph in graph6, using the short header up to 62 vertices.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + G6_BIAS);
    } else if n <= 258_047 {
        out.push(G6_LONG);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + G6_BIAS));
    } else {
        out.extend([G6_LONG, G6_LONG]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + G6_BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + G6_BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + G6_BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Graph families the generator knows about.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// Center vertex 0 joined to `n - 1` leaves.
    Star(usize),
    /// G(n, p): every pair `i < j`, in lexicographic order, is kept when a
    /// ChaCha8 stream seeded with `seed` draws a uniform value below `p`.
    ErdosRenyi { n: usize, p: f64, seed: u64 },
}

pub fn generate(family: Family) -> Result<Graph> {
    let positive = |n: usize, what: &str| {
        if n == 0 {
            Err(Error::InvalidArgument(format!("{what} must be at least 1")))
        } else {
            Ok(n)
        }
    };
    match family {
        Family::Complete(n) => {
            positive(n, "n")?;
            Graph::from_edges(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
        }
        Family::Path(n) => {
            positive(n, "n")?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::CompleteBipartite(p, q) => {
            positive(p, "p")?;
            positive(q, "q")?;
            Graph::from_edges(p + q, (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))))
        }
        Family::Star(n) => {
            positive(n, "n")?;
            Graph::from_edges(n, (1..n).map(|i| (0, i)))
        }
        Family::ErdosRenyi { n, p, seed } => {
            positive(n, "n")?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidArgument(format!(
                    "edge probability {p} outside [0, 1]"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random::<f64>() < p {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
    }
}

/// Walk counts `d_k(i)` for a fixed `k`.
///
/// Small counts are held exactly. Once a count no longer fits in `u128` the
/// vector switches to a unit-norm representation with a natural-log scale,
/// so `d_k(i) = unit[i] * exp(log_scale)`.
#[derive(Debug, Clone, PartialEq)]
pub struct KDegreeVector {
    pub k: usize,
    pub values: KDegreeValues,
}

#[derive(Debug, Clone, PartialEq)]
pub enum KDegreeValues {
    Exact(Vec<u128>),
    Scaled { unit: Vec<f64>, log_scale: f64 },
}

impl KDegreeVector {
    pub fn len(&self) -> usize {
        match &self.values {
            KDegreeValues::Exact(v) => v.len(),
            KDegreeValues::Scaled { unit, .. } => unit.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn exact(&self) -> Option<&[u128]> {
        match &self.values {
            KDegreeValues::Exact(v) => Some(v),
            KDegreeValues::Scaled { .. } => None,
        }
    }

    /// `d_k(i)` as a float; may be infinite for very long walks.
    pub fn get(&self, i: usize) -> f64 {
        match &self.values {
            KDegreeValues::Exact(v) => v[i] as f64,
            KDegreeValues::Scaled { unit, log_scale } => unit[i] * log_scale.exp(),
        }
    }

    /// `ln Σ_i d_k(i)^2`, finite even when the counts themselves overflow.
    pub fn log_sum_squares(&self) -> f64 {
        match &self.values {
            KDegreeValues::Exact(v) => v.iter().map(|&x| (x as f64).powi(2)).sum::<f64>().ln(),
            KDegreeValues::Scaled { unit, log_scale } => {
                unit.iter().map(|x| x * x).sum::<f64>().ln() + 2.0 * log_scale
            }
        }
    }
}

/// Walk counts via `d_0 = 1`, `d_{k+1}(i) = Σ_{j ∈ N(i)} d_k(j)`.
pub fn k_degrees(g: &Graph, k: usize) -> KDegreeVector {
    let n = g.n();
    let mut exact: Option<Vec<u128>> = Some(vec![1; n]);
    let mut unit = Vec::new();
    let mut log_scale = 0.0;
    for _ in 0..k {
        if let Some(cur) = &exact {
            let next: Option<Vec<u128>> = (0..n)
                .map(|i| {
                    g.neighbors(i)
                        .iter()
                        .try_fold(0u128, |acc, &j| acc.checked_add(cur[j]))
                })
                .collect();
            match next {
                Some(next) => {
                    exact = Some(next);
                    continue;
                }
                None => {
                    let as_float: Vec<f64> = cur.iter().map(|&x| x as f64).collect();
                    let norm = euclidean(&as_float);
                    unit = as_float.into_iter().map(|x| x / norm).collect();
                    log_scale = norm.ln();
                    exact = None;
                }
            }
        }
        let mut next = vec![0.0; n];
        g.apply(&unit, &mut next);
        let norm = euclidean(&next);
        if norm > 0.0 {
            next.iter_mut().for_each(|x| *x /= norm);
            log_scale += norm.ln();
        }
        unit = next;
    }
    let values = match exact {
        Some(v) => KDegreeValues::Exact(v),
        None => KDegreeValues::Scaled { unit, log_scale },
    };
    KDegreeVector { k, values }
}

pub(crate) fn euclidean(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Number of triangles, counted once per vertex triple.
pub fn triangle_count(g: &Graph) -> u64 {
    let mut t = 0;
    for (u, v) in g.edges() {
        // common neighbours w > v, by merging the sorted lists
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (a.partition_point(|&w| w <= v), b.partition_point(|&w| w <= v));
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    t += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    t
}

/// Two colour classes of a bipartite graph, as sorted 0-based vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// BFS 2-colouring, component by component. The lowest vertex of each
/// component (and so every isolated vertex) lands on the left side.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let cu = color[u]?;
            for &v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (v, c) in color.into_iter().enumerate() {
        if c == Some(true) {
            right.push(v);
        } else {
            left.push(v);
        }
    }
    Some(Bipartition { left, right })
}

/// Nonnegative rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    /// `den` must be nonzero.
    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Exact comparison by cross-multiplication.
    pub fn same_value(self, other: Ratio) -> bool {
        self.num as u128 * other.den as u128 == other.num as u128 * self.den as u128
    }

    fn value_cmp(self, other: Ratio) -> std::cmp::Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Membership of a graph in the degree-based classes, with witnesses.
///
/// Pairs are reported larger value first. The edgeless graph is 0-regular and
/// belongs to every class with witness 0. Any other graph with an isolated
/// vertex belongs to none of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClassification {
    pub regular: Option<u64>,
    pub semiregular: Option<(u64, u64)>,
    pub pseudoregular: Option<Ratio>,
    pub semipseudoregular: Option<Ratio>,
    pub pseudosemiregular: Option<(Ratio, Ratio)>,
    pub bipartition: Option<Bipartition>,
    pub strictly_semiregular: bool,
    pub strictly_semipseudoregular: bool,
    pub strictly_pseudosemiregular: bool,
}

impl GraphClassification {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

impl fmt::Display for GraphClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(r) = self.regular {
            parts.push(format!("regular r={r}"));
        }
        if let (Some((a, b)), true) = (self.semiregular, self.strictly_semiregular) {
            parts.push(format!("semiregular ({a},{b})"));
        }
        if let Some(mu) = self.pseudoregular {
            parts.push(format!("pseudoregular μ={mu}"));
        }
        // classes already implied by a listed one are left out
        let semi_pair = self
            .semiregular
            .filter(|_| self.strictly_semiregular)
            .map(|(a, b)| (Ratio::new(a, 1), Ratio::new(b, 1)));
        let pseudo_pair = self
            .pseudosemiregular
            .filter(|_| self.strictly_pseudosemiregular)
            .filter(|&(a, b)| semi_pair.is_none_or(|(x, y)| !(a.same_value(x) && b.same_value(y))));
        let product = |(a, b): (Ratio, Ratio)| Ratio::new(a.num * b.num, a.den * b.den);
        if let (Some(mu), true) = (self.semipseudoregular, self.strictly_semipseudoregular) {
            let implied = semi_pair
                .into_iter()
                .chain(self.pseudosemiregular.filter(|_| self.strictly_pseudosemiregular))
                .any(|pair| product(pair).same_value(mu));
            if !implied {
                parts.push(format!("semipseudoregular μ={mu}"));
            }
        }
        if let Some((a, b)) = pseudo_pair {
            parts.push(format!("pseudosemiregular ({a},{b})"));
        }
        let bip = if self.is_bipartite() { "yes" } else { "no" };
        parts.push(format!("bipartite: {bip}"));
        write!(f, "{}", parts.join("; "))
    }
}

/// Classifies `g` using exact integer walk counts. Ratio tests compare by
/// cross-multiplication, never by floating division.
pub fn classify(g: &Graph) -> GraphClassification {
    let n = g.n();
    let d: Vec<u64> = g.degrees().into_iter().map(|x| x as u64).collect();
    let step = |x: &[u64]| -> Vec<u64> {
        (0..n)
            .map(|i| g.neighbors(i).iter().map(|&j| x[j]).sum())
            .collect()
    };
    let d2 = step(&d);
    let d3 = step(&d2);
    let bipartition = is_bipartite(g);

    if g.m() == 0 {
        let zero = Ratio::new(0, 1);
        return GraphClassification {
            regular: Some(0),
            semiregular: Some((0, 0)),
            pseudoregular: Some(zero),
            semipseudoregular: Some(zero),
            pseudosemiregular: Some((zero, zero)),
            bipartition,
            strictly_semiregular: false,
            strictly_semipseudoregular: false,
            strictly_pseudosemiregular: false,
        };
    }

    let has_isolated = d.contains(&0);
    let regular = (!has_isolated && d.iter().all(|&x| x == d[0])).then_some(d[0]);

    let semiregular = if has_isolated {
        None
    } else {
        let pair = |u: usize, v: usize| (d[u].max(d[v]), d[u].min(d[v]));
        let mut edges = g.edges();
        let first = edges.next().map(|(u, v)| pair(u, v));
        first.filter(|&p| edges.all(|(u, v)| pair(u, v) == p))
    };

    let uniform_ratio = |walks: &[u64]| -> Option<Ratio> {
        if has_isolated {
            return None;
        }
        let mu = Ratio::new(walks[0], d[0]);
        (0..n)
            .all(|i| Ratio::new(walks[i], d[i]).same_value(mu))
            .then_some(mu)
    };
    let pseudoregular = uniform_ratio(&d2);
    let semipseudoregular = uniform_ratio(&d3);

    let pseudosemiregular = if has_isolated {
        None
    } else {
        let ratio = |i: usize| Ratio::new(d2[i], d[i]);
        let pair = |u: usize, v: usize| {
            let (a, b) = (ratio(u), ratio(v));
            if a.value_cmp(b).is_ge() {
                (a, b)
            } else {
                (b, a)
            }
        };
        let mut edges = g.edges();
        let first = edges.next().map(|(u, v)| pair(u, v));
        first.filter(|&(a, b)| {
            edges.all(|(u, v)| {
                let (x, y) = pair(u, v);
                x.same_value(a) && y.same_value(b)
            })
        })
    };

    GraphClassification {
        regular,
        semiregular,
        pseudoregular,
        semipseudoregular,
        pseudosemiregular,
        bipartition,
        strictly_semiregular: semiregular.is_some() && regular.is_none(),
        strictly_semipseudoregular: semipseudoregular.is_some() && pseudoregular.is_none(),
        strictly_pseudosemiregular: pseudosemiregular.is_some() && pseudoregular.is_none(),
    }
}
