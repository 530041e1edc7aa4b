//! Slices of cylindric partitions and the slice flow.
//!
//! A slice is a 0/1 cylindric partition. Its row `i` is `1^{t_i}`, drawn as
//! `t_i` white squares to the right of a gray baseline of length `b_i` fixed
//! by the profile. Validity reduces to
//!
//! ```text
//! t_{i+1} <= t_i + c_{i+1}   (1 <= i < r),      t_1 <= t_r + c_1
//! ```
//!
//! and containment of slices reduces to a per-row comparison of white counts,
//! because white squares are left-justified after the baseline.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cylindric::{join, CylindricPartition, Profile};
use crate::error::{Error, Result};

/// Gray baseline lengths `b_i = c_1 + c_{i+1} + ... + c_r`.
///
/// Consecutive rows differ by `b_i - b_{i+1} = c_{i+1}` and the last row has
/// length `c_1`.
pub fn baseline(profile: &Profile) -> Vec<u32> {
    let r = profile.rank();
    (1..=r)
        .map(|i| profile.c(1) + profile.partial_sum(i + 1, r))
        .collect()
}

fn is_valid_white(profile: &Profile, white: &[u32]) -> bool {
    let c = profile.parts();
    let r = c.len();
    if white.len() != r {
        return false;
    }
    let chain_ok = (0..r - 1).all(|i| white[i + 1] <= white[i] + c[i + 1]);
    chain_ok && white[0] <= white[r - 1] + c[0]
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSlice", into = "RawSlice")]
pub struct Slice {
    profile: Profile,
    white: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawSlice {
    profile: Profile,
    white: Vec<u32>,
}

impl TryFrom<RawSlice> for Slice {
    type Error = Error;

    fn try_from(raw: RawSlice) -> Result<Self> {
        Slice::new(raw.profile, raw.white)
    }
}

impl From<Slice> for RawSlice {
    fn from(s: Slice) -> Self {
        RawSlice {
            profile: s.profile,
            white: s.white,
        }
    }
}

impl Slice {
    pub fn new(profile: Profile, white: Vec<u32>) -> Result<Self> {
        if !is_valid_white(&profile, &white) {
            return Err(Error::InvalidSlice {
                profile: profile.parts().to_vec(),
                white,
            });
        }
        Ok(Slice { profile, white })
    }

    pub fn empty(profile: Profile) -> Self {
        let white = vec![0; profile.rank()];
        Slice { profile, white }
    }

    pub fn is_valid(profile: &Profile, white: &[u32]) -> bool {
        is_valid_white(profile, white)
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn white(&self) -> &[u32] {
        &self.white
    }

    pub fn weight(&self) -> u32 {
        self.white.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.white.iter().all(|&t| t == 0)
    }

    pub fn shape(&self) -> Shape {
        let b = baseline(&self.profile);
        let r = self.white.len();
        let last = b[r - 1] + self.white[r - 1];
        Shape(
            (0..r - 1)
                .map(|j| b[j] + self.white[j] - last)
                .collect(),
        )
    }

    /// The slice obtained by adding `k` white squares to every row; same shape.
    pub fn lifted(&self, k: u32) -> Slice {
        Slice {
            profile: self.profile.clone(),
            white: self.white.iter().map(|t| t + k).collect(),
        }
    }

    /// Whether every white square of `self` is also white in `outer`.
    pub fn contained_in(&self, outer: &Slice) -> Result<bool> {
        contains(self, outer)
    }

    /// Rows drawn as `#` for gray and `.` for white squares, top row first.
    pub fn board(&self) -> String {
        let b = baseline(&self.profile);
        let mut out = String::new();
        for (gray, white) in b.iter().zip(&self.white) {
            out.push_str(&"#".repeat(*gray as usize));
            out.push_str(&".".repeat(*white as usize));
            out.push('\n');
        }
        out
    }
}

/// `true` iff `inner` sits inside `outer`.
pub fn contains(inner: &Slice, outer: &Slice) -> Result<bool> {
    if inner.profile != outer.profile {
        return Err(Error::ProfileMismatch {
            lhs: inner.profile.parts().to_vec(),
            rhs: outer.profile.parts().to_vec(),
        });
    }
    Ok(inner.white.iter().zip(&outer.white).all(|(a, b)| a <= b))
}

/// Row-length differences against the last row, `d_j = (b_j + t_j) - (b_r + t_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape(pub Vec<u32>);

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

/// Every valid slice of weight at most `max_weight`, the empty one included,
/// ordered by weight and then lexicographically by white counts.
pub fn valid_slices(profile: &Profile, max_weight: u32) -> Vec<Slice> {
    fn fill(profile: &Profile, budget: u32, white: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let c = profile.parts();
        let r = c.len();
        let i = white.len();
        if i == r {
            if white[0] <= white[r - 1] + c[0] {
                out.push(white.clone());
            }
            return;
        }
        let hi = if i == 0 { budget } else { (white[i - 1] + c[i]).min(budget) };
        for t in 0..=hi {
            white.push(t);
            fill(profile, budget - t, white, out);
            white.pop();
        }
    }
    let mut raw = Vec::new();
    fill(profile, max_weight, &mut Vec::with_capacity(profile.rank()), &mut raw);
    let mut slices: Vec<Slice> = raw
        .into_iter()
        .map(|white| Slice {
            profile: profile.clone(),
            white,
        })
        .collect();
    slices.sort_by(|a, b| (a.weight(), &a.white).cmp(&(b.weight(), &b.white)));
    slices
}

/// Splits `Λ` into its slices; entry `k - 1` is the level-`k` slice, whose row
/// `i` counts the parts of `λ^(i)` that are at least `k`.
pub fn decompose(partition: &CylindricPartition) -> Vec<Slice> {
    let max = partition.max_part();
    (1..=max)
        .map(|level| Slice {
            profile: partition.profile().clone(),
            white: partition
                .rows()
                .iter()
                .map(|row| row.iter().filter(|&&v| v >= level).count() as u32)
                .collect(),
        })
        .collect()
}

/// Stacks slices back into a cylindric partition. `levels[k]` is the level
/// `k + 1` slice and must sit inside `levels[k - 1]`.
pub fn recompose(profile: &Profile, levels: &[Slice]) -> Result<CylindricPartition> {
    for (k, s) in levels.iter().enumerate() {
        if s.profile != *profile {
            return Err(Error::ProfileMismatch {
                lhs: profile.parts().to_vec(),
                rhs: s.profile.parts().to_vec(),
            });
        }
        if k > 0 && !contains(s, &levels[k - 1])? {
            return Err(Error::ContainmentViolation { level: k + 1 });
        }
        if s.is_empty() {
            // an empty level would leave a gap in the part values
            return Err(Error::InvalidSlice {
                profile: profile.parts().to_vec(),
                white: s.white.clone(),
            });
        }
    }
    let rows = (0..profile.rank())
        .map(|i| {
            let len = levels.first().map_or(0, |s| s.white[i]);
            (1..=len)
                .map(|j| levels.iter().filter(|s| s.white[i] >= j).count() as i64)
                .collect::<Vec<i64>>()
        })
        .collect::<Vec<_>>();
    crate::cylindric::validate(profile, &rows)
}

/// For every shape, its valid slice of smallest positive weight.
pub fn min_slices(profile: &Profile) -> BTreeMap<Shape, Slice> {
    // the minimal representative of a shape has some zero row and entries at most ℓ
    let bound = profile.rank() as u32 * (profile.level() + 1);
    let mut out: BTreeMap<Shape, Slice> = BTreeMap::new();
    for s in valid_slices(profile, bound) {
        if s.is_empty() {
            continue;
        }
        out.entry(s.shape()).or_insert(s);
    }
    out
}

/// Presentation letters for the shapes of a profile: `a, b, c, ...` in
/// lexicographic order of the shape tuples, falling back to the tuple itself
/// past `z`.
#[derive(Debug, Clone)]
pub struct ShapeLetters {
    letters: BTreeMap<Shape, String>,
}

impl ShapeLetters {
    pub fn new(profile: &Profile) -> Self {
        let letters = min_slices(profile)
            .into_keys()
            .enumerate()
            .map(|(i, shape)| {
                let label = if i < 26 {
                    char::from(b'a' + i as u8).to_string()
                } else {
                    shape.to_string()
                };
                (shape, label)
            })
            .collect();
        ShapeLetters { letters }
    }

    pub fn label(&self, shape: &Shape) -> String {
        self.letters
            .get(shape)
            .cloned()
            .unwrap_or_else(|| shape.to_string())
    }

    /// Generating-term label such as `aq^3`.
    pub fn term(&self, slice: &Slice) -> String {
        format!("{}q^{}", self.label(&slice.shape()), slice.weight())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Shape, &String)> {
        self.letters.iter()
    }
}

/// Non-empty slices up to a weight bound, with an edge `u -> v` whenever `v`
/// is `u` plus one white square.
#[derive(Debug, Clone)]
pub struct SliceFlow {
    profile: Profile,
    max_weight: u32,
    nodes: Vec<Slice>,
    edges: Vec<(usize, usize)>,
}

/// Builds the slice flow on nodes of weight `1..=max_weight`.
pub fn flow_graph(profile: &Profile, max_weight: u32) -> SliceFlow {
    let nodes: Vec<Slice> = valid_slices(profile, max_weight)
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    let index: BTreeMap<&[u32], usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, s)| (s.white.as_slice(), i))
        .collect();
    let mut edges = Vec::new();
    for (u, s) in nodes.iter().enumerate() {
        let mut grown = s.white.clone();
        for i in 0..grown.len() {
            grown[i] += 1;
            if let Some(&v) = index.get(grown.as_slice()) {
                edges.push((u, v));
            }
            grown[i] -= 1;
        }
    }
    edges.sort_unstable();
    SliceFlow {
        profile: profile.clone(),
        max_weight,
        nodes,
        edges,
    }
}

impl SliceFlow {
    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn nodes(&self) -> &[Slice] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn node_index(&self, slice: &Slice) -> Option<usize> {
        self.nodes.iter().position(|s| s == slice)
    }

    /// Edges as labelled pairs, e.g. `("aq^1", "cq^2")`.
    pub fn labelled_edges(&self, letters: &ShapeLetters) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(u, v)| (letters.term(&self.nodes[u]), letters.term(&self.nodes[v])))
            .collect()
    }

    /// Whether `to` can be reached from `from` along edges (a node reaches itself).
    pub fn reachable(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(u) = queue.pop_front() {
            if u == to {
                return true;
            }
            for &(a, b) in &self.edges {
                if a == u && !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        false
    }

    /// Graphviz rendering. Nodes are emitted by weight and then shape tuple,
    /// so equal inputs give byte-identical output.
    pub fn to_dot(&self) -> String {
        let letters = ShapeLetters::new(&self.profile);
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by_key(|&i| (self.nodes[i].weight(), self.nodes[i].shape()));
        let mut name = vec![0usize; self.nodes.len()];
        for (pos, &i) in order.iter().enumerate() {
            name[i] = pos;
        }
        let mut out = format!(
            "digraph slice_flow {{\n  // profile {} max weight {}\n  rankdir=LR;\n",
            self.profile, self.max_weight
        );
        for &i in &order {
            let s = &self.nodes[i];
            out.push_str(&format!(
                "  n{} [label=\"{}\", tooltip=\"{} white={}\"];\n",
                name[i],
                letters.term(s),
                s.shape(),
                join(&s.white)
            ));
        }
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (name[u], name[v])).collect();
        edges.sort_unstable();
        for (u, v) in edges {
            out.push_str(&format!("  n{u} -> n{v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cylindric::{enumerate, for_each_partition, validate};
    use std::collections::BTreeSet;

    fn profile(parts: &[u32]) -> Profile {
        Profile::new(parts.to_vec()).unwrap()
    }

    fn slice(c: &[u32], t: &[u32]) -> Slice {
        Slice::new(profile(c), t.to_vec()).unwrap()
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn baseline_matches_displayed_boards() {
        assert_eq!(baseline(&profile(&[1, 1, 1])), vec![3, 2, 1]);
        assert_eq!(baseline(&profile(&[2, 1])), vec![3, 2]);
        assert_eq!(baseline(&profile(&[2, 0, 0, 0])), vec![2, 2, 2, 2]);
        assert_eq!(baseline(&profile(&[1, 1])), vec![2, 1]);
        assert_eq!(baseline(&profile(&[2, 0])), vec![2, 2]);
        assert_eq!(baseline(&profile(&[2, 2])), vec![4, 2]);
        assert_eq!(baseline(&profile(&[3, 1])), vec![4, 3]);
    }

    #[test]
    fn shape_examples() {
        assert_eq!(slice(&[2, 1], &[0, 1]).shape(), Shape(vec![0]));
        let s = slice(&[1, 1, 1], &[0, 1, 2]);
        assert_eq!(s.lifted(1).shape(), s.shape());
        assert_eq!(s.lifted(3).weight(), s.weight() + 9);
    }

    #[test]
    fn invalid_slice_rejected() {
        assert!(Slice::new(profile(&[2, 1]), vec![0, 2]).is_err());
        assert!(Slice::new(profile(&[2, 1]), vec![4, 1]).is_err());
        assert!(Slice::new(profile(&[2, 1]), vec![0]).is_err());
    }

    #[test]
    fn decompose_two_row_example() {
        let c = profile(&[2, 1]);
        let p = validate(&c, &[vec![2, 2, 1], vec![3]]).unwrap();
        let levels = decompose(&p);
        let whites: Vec<&[u32]> = levels.iter().map(|s| s.white()).collect();
        assert_eq!(whites, vec![&[3, 1][..], &[2, 1], &[0, 1]]);
        // dq^4, bq^3, aq^1 with a=(0), b=(2), d=(3)
        let described: Vec<(Shape, u32)> = levels.iter().map(|s| (s.shape(), s.weight())).collect();
        assert_eq!(
            described,
            vec![(Shape(vec![3]), 4), (Shape(vec![2]), 3), (Shape(vec![0]), 1)]
        );
        assert_eq!(recompose(&c, &levels).unwrap(), p);
    }

    #[test]
    fn decompose_rank_three_example() {
        let c = profile(&[1, 1, 1]);
        let p = validate(&c, &[vec![5, 4], vec![8, 2], vec![7, 5, 1]]).unwrap();
        let levels = decompose(&p);
        assert_eq!(levels.len(), 8);
        // listed from the empty slice, then level 8 down to level 1
        let mut shapes = vec![Slice::empty(c.clone()).shape()];
        shapes.extend(levels.iter().rev().map(Slice::shape));
        let expected: Vec<Shape> = [[2, 1], [2, 2], [1, 1], [1, 1], [1, 0], [2, 0], [2, 0], [2, 1], [1, 0]]
            .iter()
            .map(|d| Shape(d.to_vec()))
            .collect();
        assert_eq!(shapes, expected);
        assert_eq!(levels.iter().map(Slice::weight).sum::<u32>(), 32);
        for w in levels.windows(2) {
            assert!(contains(&w[1], &w[0]).unwrap());
        }
    }

    #[test]
    fn empty_partition_round_trip() {
        let c = profile(&[1, 1]);
        let e = CylindricPartition::empty(c.clone());
        assert!(decompose(&e).is_empty());
        assert_eq!(recompose(&c, &[]).unwrap(), e);
    }

    #[test]
    fn recompose_errors() {
        let c = profile(&[2, 1]);
        let outer = slice(&[2, 1], &[0, 1]);
        let inner = slice(&[2, 1], &[3, 1]);
        assert_eq!(
            recompose(&c, &[outer.clone(), inner]),
            Err(Error::ContainmentViolation { level: 2 })
        );
        let other = slice(&[1, 1], &[1, 1]);
        assert!(matches!(recompose(&c, &[other]), Err(Error::ProfileMismatch { .. })));
        assert!(recompose(&c, &[Slice::empty(c.clone())]).is_err());
    }

    #[test]
    fn containment_examples() {
        let a1 = slice(&[2, 1], &[0, 1]);
        let d2 = slice(&[2, 1], &[2, 0]);
        let d4 = slice(&[2, 1], &[3, 1]);
        assert!(!contains(&a1, &d2).unwrap());
        assert!(contains(&a1, &a1).unwrap());
        assert!(contains(&a1, &d4).unwrap());
        assert!(contains(&a1, &slice(&[1, 1], &[0, 1])).is_err());
    }

    fn weights_by_shape(c: &Profile) -> BTreeMap<Shape, u32> {
        min_slices(c).into_iter().map(|(k, v)| (k, v.weight())).collect()
    }

    #[test]
    fn min_slices_examples() {
        let m = weights_by_shape(&profile(&[2, 1]));
        let expected: BTreeMap<Shape, u32> =
            [(vec![0], 1), (vec![2], 1), (vec![1], 2), (vec![3], 2)]
                .into_iter()
                .map(|(s, w)| (Shape(s), w))
                .collect();
        assert_eq!(m, expected);
        let m = min_slices(&profile(&[2, 1]));
        assert_eq!(m[&Shape(vec![0])].white(), &[0, 1]);
        assert_eq!(m[&Shape(vec![2])].white(), &[1, 0]);
        assert_eq!(m[&Shape(vec![1])].white(), &[1, 1]);
        assert_eq!(m[&Shape(vec![3])].white(), &[2, 0]);

        let m = weights_by_shape(&profile(&[1, 1]));
        assert_eq!(
            m.into_iter().collect::<Vec<_>>(),
            vec![(Shape(vec![0]), 1), (Shape(vec![1]), 2), (Shape(vec![2]), 1)]
        );

        let mut w: Vec<u32> = weights_by_shape(&profile(&[2, 0, 0])).into_values().collect();
        w.sort_unstable();
        assert_eq!(w, vec![1, 2, 2, 3, 3, 4]);
    }

    #[test]
    fn min_slices_count_is_binomial() {
        for c in Profile::all_up_to_period(7) {
            let n = (c.level() + c.rank() as u32 - 1) as u64;
            assert_eq!(min_slices(&c).len() as u64, binomial(n, c.rank() as u64 - 1), "{c}");
        }
    }

    fn edge_set(flow: &SliceFlow, letters: &ShapeLetters) -> BTreeSet<(String, String)> {
        flow.labelled_edges(letters).into_iter().collect()
    }

    /// Map shape tuples to the letters of a hand-drawn flow table.
    fn table_letters(names: &[(&[u32], &str)]) -> impl Fn(&Slice) -> String {
        let map: BTreeMap<Shape, String> = names
            .iter()
            .map(|(s, n)| (Shape(s.to_vec()), n.to_string()))
            .collect();
        move |s: &Slice| format!("{}q^{}", map[&s.shape()], s.weight())
    }

    #[test]
    fn flow_graph_profile_2_1() {
        let c = profile(&[2, 1]);
        let flow = flow_graph(&c, 4);
        let name = table_letters(&[(&[0], "a"), (&[1], "c"), (&[2], "b"), (&[3], "d")]);
        let edges: BTreeSet<(String, String)> = flow
            .edges()
            .iter()
            .map(|&(u, v)| (name(&flow.nodes()[u]), name(&flow.nodes()[v])))
            .collect();
        let expected: BTreeSet<(String, String)> = [
            ("aq^1", "cq^2"),
            ("bq^1", "cq^2"),
            ("bq^1", "dq^2"),
            ("cq^2", "aq^3"),
            ("cq^2", "bq^3"),
            ("dq^2", "bq^3"),
            ("aq^3", "cq^4"),
            ("bq^3", "cq^4"),
            ("bq^3", "dq^4"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(edges, expected);
        assert_eq!(flow.nodes().len(), 8);
    }

    #[test]
    fn flow_graph_profile_1_1() {
        let c = profile(&[1, 1]);
        let flow = flow_graph(&c, 3);
        let name = table_letters(&[(&[0], "a"), (&[1], "c"), (&[2], "b")]);
        let edges: BTreeSet<(String, String)> = flow
            .edges()
            .iter()
            .map(|&(u, v)| (name(&flow.nodes()[u]), name(&flow.nodes()[v])))
            .collect();
        let expected: BTreeSet<(String, String)> = [("aq^1", "cq^2"), ("bq^1", "cq^2"), ("cq^2", "aq^3"), ("cq^2", "bq^3")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(edges, expected);
    }

    #[test]
    fn flow_graph_weight_one_is_edgeless() {
        for c in [profile(&[2, 1]), profile(&[1, 1, 1]), profile(&[4])] {
            let flow = flow_graph(&c, 1);
            assert!(flow.edges().is_empty());
            assert!(flow.nodes().iter().all(|s| s.weight() == 1));
        }
    }

    #[test]
    fn flow_edges_add_one_square() {
        let c = profile(&[2, 0, 1]);
        let flow = flow_graph(&c, 9);
        for &(u, v) in flow.edges() {
            let (a, b) = (&flow.nodes()[u], &flow.nodes()[v]);
            assert_eq!(a.weight() + 1, b.weight());
            let diffs: Vec<u32> = a.white().iter().zip(b.white()).map(|(x, y)| y - x).collect();
            assert_eq!(diffs.iter().sum::<u32>(), 1);
        }
        let letters = ShapeLetters::new(&c);
        assert_eq!(edge_set(&flow, &letters).len(), flow.edges().len());
    }

    #[test]
    fn dot_is_deterministic() {
        let c = profile(&[1, 1]);
        let dot = flow_graph(&c, 2).to_dot();
        assert_eq!(dot, flow_graph(&c, 2).to_dot());
        assert_eq!(
            dot,
            "digraph slice_flow {\n  // profile (1,1) max weight 2\n  rankdir=LR;\n  \
             n0 [label=\"aq^1\", tooltip=\"(0) white=0,1\"];\n  \
             n1 [label=\"cq^1\", tooltip=\"(2) white=1,0\"];\n  \
             n2 [label=\"bq^2\", tooltip=\"(1) white=1,1\"];\n  \
             n0 -> n2;\n  n1 -> n2;\n}\n"
        );
    }

    #[test]
    fn validity_matches_definition() {
        for c in Profile::all_up_to_period(7) {
            let r = c.rank();
            let mut t = vec![0u32; r];
            loop {
                let rows: Vec<Vec<i64>> = t.iter().map(|&k| vec![1; k as usize]).collect();
                assert_eq!(
                    Slice::is_valid(&c, &t),
                    validate(&c, &rows).is_ok(),
                    "profile {c} white {t:?}"
                );
                // odometer over {0..=6}^r
                let mut i = 0;
                while i < r && t[i] == 6 {
                    t[i] = 0;
                    i += 1;
                }
                if i == r {
                    break;
                }
                t[i] += 1;
            }
        }
    }

    #[test]
    fn shape_census_and_weight_residues() {
        for c in Profile::all_up_to_period(8) {
            let r = c.rank() as u32;
            let bound = r * c.level() + r;
            let mut weights: BTreeMap<Shape, Vec<u32>> = BTreeMap::new();
            for s in valid_slices(&c, bound) {
                weights.entry(s.shape()).or_default().push(s.weight());
            }
            let n = (c.level() + r - 1) as u64;
            assert_eq!(weights.len() as u64, binomial(n, r as u64 - 1), "{c}");
            for ws in weights.values() {
                for w in ws.windows(2) {
                    assert_eq!(w[1] - w[0], r, "{c}");
                }
            }
        }
    }

    #[test]
    fn containment_is_reachability() {
        for c in [profile(&[2, 1]), profile(&[1, 1, 1]), profile(&[2, 0, 0]), profile(&[1, 0, 1, 0]), profile(&[3, 1])] {
            let flow = flow_graph(&c, 12);
            let n = flow.nodes().len();
            for u in 0..n {
                for v in 0..n {
                    let (a, b) = (&flow.nodes()[u], &flow.nodes()[v]);
                    if b.weight() <= a.weight() {
                        continue;
                    }
                    assert_eq!(contains(a, b).unwrap(), flow.reachable(u, v), "{c}: {a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn round_trip_small_partitions() {
        for c in [profile(&[1, 1]), profile(&[2, 0]), profile(&[2, 1]), profile(&[1, 1, 1])] {
            let mut count = 0u64;
            for_each_partition(&c, 8, |p| {
                let levels = decompose(p);
                assert!(levels.iter().all(|s| Slice::is_valid(&c, s.white()) && !s.is_empty()));
                assert_eq!(levels.iter().map(Slice::weight).sum::<u32>() as u64, p.size());
                assert_eq!(&recompose(&c, &levels).unwrap(), p);
                count += 1;
            });
            let total: u64 = enumerate(&c, 8).rows().iter().flatten().sum();
            assert_eq!(count, total);
        }
    }

    #[test]
    fn slice_json() {
        let s = slice(&[2, 1], &[0, 1]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"profile":[2,1],"white":[0,1]}"#);
        assert_eq!(serde_json::from_str::<Slice>(&text).unwrap(), s);
        assert!(serde_json::from_str::<Slice>(r#"{"profile":[2,1],"white":[0,2]}"#).is_err());
    }

    #[test]
    fn board_dump() {
        assert_eq!(slice(&[2, 1], &[2, 0]).board(), "###..\n##\n");
    }
}
