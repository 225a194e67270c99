//! Extended Dynkin diagram combinatorics: automorphism groups, the Omega
//! subgroup acting on Kac tuples, connected-subgraph enumeration with its
//! injection into the positive roots, and classification of root subsystems
//! into type strings.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsystem::{Root, RootSystem};

/// The extended Dynkin diagram on nodes `{0, ..., l}`; node 0 carries the
/// lowest root. Adjacency, edge multiplicities and arrow directions are all
/// encoded by the off-diagonal entries of the extended Cartan matrix.
#[derive(Debug, Clone)]
pub struct ExtendedDiagram {
    n: usize,
    cartan: Vec<Vec<i64>>,
    marks: Vec<i64>,
}

impl ExtendedDiagram {
    pub fn new(rs: &RootSystem) -> ExtendedDiagram {
        ExtendedDiagram {
            n: rs.rank() + 1,
            cartan: rs.extended_cartan().to_vec(),
            marks: rs.extended_marks(),
        }
    }

    /// Number of nodes, `l + 1`.
    pub fn num_nodes(&self) -> usize {
        self.n
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    fn is_connected(&self, nodes: &BTreeSet<usize>) -> bool {
        let Some(&start) = nodes.iter().next() else {
            return false;
        };
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(i) = stack.pop() {
            for &j in nodes {
                if !seen.contains(&j) && self.adjacent(i, j) {
                    seen.insert(j);
                    stack.push(j);
                }
            }
        }
        seen.len() == nodes.len()
    }

    /// The full group of mark-preserving graph automorphisms, by exhaustive
    /// backtracking over images with adjacency pruning.
    pub fn automorphism_group(&self) -> Vec<NodePermutation> {
        let n = self.n;
        let mut found = Vec::new();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.search_automorphisms(0, &mut image, &mut used, &mut found);
        found.sort_by(|a, b| a.mapping().cmp(b.mapping()));
        found
    }

    fn search_automorphisms(
        &self,
        i: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<NodePermutation>,
    ) {
        if i == self.n {
            found.push(NodePermutation {
                perm: image.clone(),
            });
            return;
        }
        for target in 0..self.n {
            if used[target] || self.marks[target] != self.marks[i] {
                continue;
            }
            let ok = (0..i).all(|j| {
                self.cartan[target][image[j]] == self.cartan[i][j]
                    && self.cartan[image[j]][target] == self.cartan[j][i]
            });
            if ok {
                image[i] = target;
                used[target] = true;
                self.search_automorphisms(i + 1, image, used, found);
                used[target] = false;
                image[i] = usize::MAX;
            }
        }
    }

    /// All nonempty connected node subsets.
    pub fn connected_subgraphs(&self) -> Vec<BTreeSet<usize>> {
        let mut out = Vec::new();
        for mask in 1u32..(1 << self.n) {
            let nodes: BTreeSet<usize> = (0..self.n).filter(|&i| mask >> i & 1 == 1).collect();
            if self.is_connected(&nodes) {
                out.push(nodes);
            }
        }
        out
    }

    /// `|{ J connected : A ⊆ J, J ∩ B = ∅ }|`.
    pub fn psi_count(&self, require: &BTreeSet<usize>, forbid: &BTreeSet<usize>) -> Result<usize> {
        Ok(self.psi_set(require, forbid)?.len())
    }

    /// The subgraphs counted by [`ExtendedDiagram::psi_count`].
    pub fn psi_set(
        &self,
        require: &BTreeSet<usize>,
        forbid: &BTreeSet<usize>,
    ) -> Result<Vec<BTreeSet<usize>>> {
        if require.intersection(forbid).next().is_some() {
            return Err(Error::OverlappingNodeSets);
        }
        for &i in require.iter().chain(forbid) {
            if i >= self.n {
                return Err(Error::NodeOutOfRange(i));
            }
        }
        Ok(self
            .connected_subgraphs()
            .into_iter()
            .filter(|j| require.is_subset(j) && j.intersection(forbid).next().is_none())
            .collect())
    }
}

/// A mark- and adjacency-preserving permutation of the extended diagram's nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodePermutation {
    perm: Vec<usize>,
}

impl NodePermutation {
    pub fn identity(n: usize) -> NodePermutation {
        NodePermutation {
            perm: (0..n).collect(),
        }
    }

    /// `mapping()[i]` is the image of node `i`.
    pub fn mapping(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &t)| i == t)
    }

    /// `self` after `other`: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &NodePermutation) -> NodePermutation {
        NodePermutation {
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            k += 1;
        }
        k
    }

    /// Relabel a node-indexed vector: entry at node `i` moves to node `perm[i]`.
    pub fn apply_labels(&self, labels: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; labels.len()];
        for (i, &x) in labels.iter().enumerate() {
            out[self.perm[i]] = x;
        }
        out
    }

    pub fn apply_set(&self, nodes: &BTreeSet<usize>) -> BTreeSet<usize> {
        nodes.iter().map(|&i| self.perm[i]).collect()
    }
}

/// The stabilizer Omega of the fundamental alcove, as node permutations.
///
/// Trivial for G2, F4 and E8; the order-2 flip for E7; the order-3 rotation
/// subgroup for E6. Its order always equals `det` of the Cartan matrix, which
/// is how the subgroup is cut out of the full automorphism group here.
pub fn omega_group(rs: &RootSystem) -> Vec<NodePermutation> {
    let diagram = ExtendedDiagram::new(rs);
    let auts = diagram.automorphism_group();
    let det = determinant(rs.cartan());
    let omega: Vec<NodePermutation> = auts
        .into_iter()
        .filter(|s| {
            let o = s.order() as i64;
            det % o == 0
        })
        .collect();
    assert_eq!(
        omega.len() as i64,
        det,
        "Omega order must equal det(Cartan)"
    );
    omega
}

/// Integer determinant by Bareiss fraction-free elimination.
fn determinant(matrix: &[Vec<i64>]) -> i64 {
    let n = matrix.len();
    let mut m: Vec<Vec<i64>> = matrix.to_vec();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// The injection from connected subgraphs into the positive roots:
/// the sum of the member simple roots when node 0 is absent, and the highest
/// root minus the other members when node 0 is present.
///
/// Fails loudly if the image is not a positive root; for the exceptional
/// types it never does.
pub fn phi(rs: &RootSystem, subgraph: &BTreeSet<usize>) -> Result<Root> {
    let diagram = ExtendedDiagram::new(rs);
    for &i in subgraph {
        if i >= diagram.num_nodes() {
            return Err(Error::NodeOutOfRange(i));
        }
    }
    if !diagram.is_connected(subgraph) {
        return Err(Error::NotConnected);
    }
    let rank = rs.rank();
    let mut coeffs = vec![0i64; rank];
    if subgraph.contains(&0) {
        coeffs.copy_from_slice(rs.marks());
        for &i in subgraph {
            if i != 0 {
                coeffs[i - 1] -= 1;
            }
        }
    } else {
        for &i in subgraph {
            coeffs[i - 1] += 1;
        }
    }
    match rs.root_index(&coeffs) {
        Some(idx) => Ok(rs.positives()[idx].clone()),
        None => Err(Error::PhiImageNotRoot),
    }
}

/// A root subsystem of the ambient system, closed under negation and under
/// addition within the ambient roots. Stored as the set of its positive
/// members (indices into `positives`); the negatives are implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsystem {
    positives: BTreeSet<usize>,
}

impl Subsystem {
    /// Build from positive-root indices, re-verifying closure under addition.
    pub fn from_positive_indices(
        rs: &RootSystem,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Subsystem> {
        let positives: BTreeSet<usize> = indices.into_iter().collect();
        if let Some(&bad) = positives.iter().find(|&&i| i >= rs.positives().len()) {
            return Err(Error::NotASubsystem(format!(
                "root index {bad} out of range"
            )));
        }
        let sub = Subsystem { positives };
        sub.check_closure(rs)?;
        Ok(sub)
    }

    /// Build from signed coefficient vectors. The input must contain the
    /// negative of each of its members.
    pub fn from_signed_roots<I>(rs: &RootSystem, roots: I) -> Result<Subsystem>
    where
        I: IntoIterator<Item = Vec<i64>>,
    {
        let all: HashSet<Vec<i64>> = roots.into_iter().collect();
        let mut positives = BTreeSet::new();
        for v in &all {
            let neg: Vec<i64> = v.iter().map(|&c| -c).collect();
            if !all.contains(&neg) {
                return Err(Error::NotASubsystem("not closed under negation".into()));
            }
            if let Some(idx) = rs.root_index(v) {
                positives.insert(idx);
            } else if rs.root_index(&neg).is_none() {
                return Err(Error::NotASubsystem(format!("{v:?} is not a root")));
            }
        }
        let sub = Subsystem { positives };
        sub.check_closure(rs)?;
        Ok(sub)
    }

    fn check_closure(&self, rs: &RootSystem) -> Result<()> {
        // closure of the signed set: it suffices to check sums and differences
        // of positive members.
        let rank = rs.rank();
        let members: Vec<&[i64]> = self
            .positives
            .iter()
            .map(|&i| rs.positives()[i].coeffs())
            .collect();
        for (ai, a) in members.iter().enumerate() {
            for b in &members[ai + 1..] {
                let sum: Vec<i64> = (0..rank).map(|k| a[k] + b[k]).collect();
                if let Some(idx) = rs.root_index(&sum) {
                    if !self.positives.contains(&idx) {
                        return Err(Error::NotASubsystem("not closed under addition".into()));
                    }
                }
                let diff: Vec<i64> = (0..rank).map(|k| a[k] - b[k]).collect();
                let neg_diff: Vec<i64> = diff.iter().map(|&c| -c).collect();
                let idx = rs.root_index(&diff).or_else(|| rs.root_index(&neg_diff));
                if let Some(idx) = idx {
                    if !self.positives.contains(&idx) {
                        return Err(Error::NotASubsystem("not closed under addition".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn positive_indices(&self) -> &BTreeSet<usize> {
        &self.positives
    }

    /// Number of roots counting negatives.
    pub fn num_roots(&self) -> i64 {
        2 * self.positives.len() as i64
    }

    /// Positive members not expressible as a sum of two positive members.
    pub fn base(&self, rs: &RootSystem) -> Vec<usize> {
        let mut base = Vec::new();
        for &i in &self.positives {
            let gamma = rs.positives()[i].coeffs();
            let decomposable = self.positives.iter().any(|&j| {
                let beta = rs.positives()[j].coeffs();
                let rest: Vec<i64> = gamma.iter().zip(beta).map(|(c, d)| c - d).collect();
                rest.iter().any(|&c| c != 0)
                    && rest.iter().all(|&c| c >= 0)
                    && rs
                        .root_index(&rest)
                        .is_some_and(|k| self.positives.contains(&k))
            });
            if !decomposable {
                base.push(i);
            }
        }
        base
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        match c {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    /// Total number of roots of the simple system of this family and rank.
    fn num_roots(self, rank: usize) -> i64 {
        let n = rank as i64;
        match self {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match rank {
                6 => 72,
                7 => 126,
                8 => 240,
                _ => unreachable!(),
            },
            Family::F => 48,
            Family::G => 12,
        }
    }
}

/// One irreducible factor of a centralizer type. `tilde` marks factors built
/// entirely from short roots of a two-length ambient system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    pub tilde: bool,
}

/// The type of a root subsystem as a canonically sorted product of
/// irreducible factors, e.g. `A1A4`, `A2A2A2`, `A1A1~`. The empty product
/// renders as `regular`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralizerType {
    components: Vec<Component>,
}

impl CentralizerType {
    pub fn regular() -> CentralizerType {
        CentralizerType {
            components: Vec::new(),
        }
    }

    pub fn new(mut components: Vec<Component>) -> CentralizerType {
        components.sort();
        CentralizerType { components }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_regular(&self) -> bool {
        self.components.is_empty()
    }

    /// Pretty form with repeated factors as powers and tildes over the
    /// letter: `A2^3`, `Ã2`.
    pub fn pretty(&self) -> String {
        if self.components.is_empty() {
            return "regular".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.components.len() {
            let c = self.components[i];
            let mut run = 1;
            while i + run < self.components.len() && self.components[i + run] == c {
                run += 1;
            }
            if c.tilde {
                out.push_str(&format!("{}\u{303}{}", c.family.letter(), c.rank));
            } else {
                out.push_str(&format!("{}{}", c.family.letter(), c.rank));
            }
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        out
    }

    /// Parse either rendering (machine `A1A1~`, pretty `Ã1A1` or `A2^3`);
    /// the result is canonically sorted, so comparing parsed values compares
    /// factor multisets.
    pub fn parse(s: &str) -> Result<CentralizerType> {
        let s = s.trim();
        if s.is_empty() || s == "regular" {
            return Ok(CentralizerType::regular());
        }
        let bad = || Error::NotASubsystem(format!("unparseable type string `{s}`"));
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut components = Vec::new();
        while i < chars.len() {
            let mut tilde = false;
            if chars[i] == '~' {
                tilde = true;
                i += 1;
            }
            if i >= chars.len() {
                return Err(bad());
            }
            let family = Family::from_letter(chars[i]).ok_or_else(bad)?;
            i += 1;
            // combining tilde or standalone tilde directly after the letter
            while i < chars.len() && (chars[i] == '\u{303}' || chars[i] == '~') {
                tilde = true;
                i += 1;
            }
            let mut rank = 0usize;
            let mut any = false;
            while i < chars.len() && chars[i].is_ascii_digit() {
                rank = rank * 10 + chars[i].to_digit(10).unwrap() as usize;
                i += 1;
                any = true;
            }
            if !any || rank == 0 {
                return Err(bad());
            }
            while i < chars.len() && chars[i] == '~' {
                tilde = true;
                i += 1;
            }
            let mut run = 1usize;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let mut e = 0usize;
                let mut any = false;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    e = e * 10 + chars[i].to_digit(10).unwrap() as usize;
                    i += 1;
                    any = true;
                }
                if !any || e == 0 {
                    return Err(bad());
                }
                run = e;
            }
            for _ in 0..run {
                components.push(Component {
                    family,
                    rank,
                    tilde,
                });
            }
        }
        Ok(CentralizerType::new(components))
    }
}

impl fmt::Display for CentralizerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("regular");
        }
        for c in &self.components {
            write!(f, "{}{}", c.family.letter(), c.rank)?;
            if c.tilde {
                f.write_str("~")?;
            }
        }
        Ok(())
    }
}

/// Classify a root subsystem into its type string.
///
/// The base is extracted as the indecomposable positive members, its Cartan
/// matrix is computed exactly, split into connected components and each
/// component matched by diagram shape; the factor root counts are then
/// checked against the subsystem, which catches any mismatch loudly.
pub fn classify_subsystem(rs: &RootSystem, sub: &Subsystem) -> Result<CentralizerType> {
    if sub.positive_indices().is_empty() {
        return Ok(CentralizerType::regular());
    }
    let base = sub.base(rs);
    let r = base.len();
    let coeffs: Vec<&[i64]> = base.iter().map(|&i| rs.positives()[i].coeffs()).collect();
    let mut cartan = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            cartan[i][j] = rs.pairing(coeffs[j], coeffs[i]);
        }
    }
    for i in 0..r {
        if cartan[i][i] != 2 {
            return Err(Error::NotASubsystem(
                "base fails Cartan matrix shape".into(),
            ));
        }
        for j in 0..r {
            if i != j && cartan[i][j] > 0 {
                return Err(Error::NotASubsystem(
                    "base fails Cartan matrix shape".into(),
                ));
            }
        }
    }

    // connected components of the base
    let mut comp_of = vec![usize::MAX; r];
    let mut num_comps = 0;
    for start in 0..r {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp_of[start] = num_comps;
        while let Some(i) = stack.pop() {
            for j in 0..r {
                if comp_of[j] == usize::MAX && cartan[i][j] != 0 {
                    comp_of[j] = num_comps;
                    stack.push(j);
                }
            }
        }
        num_comps += 1;
    }

    // count subsystem roots per component, for the factor-size check
    let mut roots_per_comp = vec![0i64; num_comps];
    for &g in sub.positive_indices() {
        let gc = rs.positives()[g].coeffs();
        let mut comps: BTreeSet<usize> = BTreeSet::new();
        for (i, &b) in base.iter().enumerate() {
            if rs.pairing(gc, rs.positives()[b].coeffs()) != 0 {
                comps.insert(comp_of[i]);
            }
        }
        if comps.len() != 1 {
            return Err(Error::NotASubsystem(
                "member root does not lie in a unique factor".into(),
            ));
        }
        roots_per_comp[*comps.iter().next().unwrap()] += 2;
    }

    let two_lengths = rs.has_two_lengths();
    let mut components = Vec::new();
    for c in 0..num_comps {
        let nodes: Vec<usize> = (0..r).filter(|&i| comp_of[i] == c).collect();
        let family = component_shape(&cartan, &nodes)?;
        let rank = nodes.len();
        if family.num_roots(rank) != roots_per_comp[c] {
            return Err(Error::NotASubsystem(format!(
                "factor {}{} expects {} roots, subsystem provides {}",
                family.letter(),
                rank,
                family.num_roots(rank),
                roots_per_comp[c]
            )));
        }
        let tilde = two_lengths && nodes.iter().all(|&i| rs.is_short(base[i]));
        components.push(Component {
            family,
            rank,
            tilde,
        });
    }
    Ok(CentralizerType::new(components))
}

/// Match one connected Cartan component against the simple diagrams.
fn component_shape(cartan: &[Vec<i64>], nodes: &[usize]) -> Result<Family> {
    let r = nodes.len();
    let bad = |msg: &str| Error::NotASubsystem(format!("base fails Cartan matching: {msg}"));
    if r == 1 {
        return Ok(Family::A);
    }
    let mult = |i: usize, j: usize| cartan[nodes[i]][nodes[j]] * cartan[nodes[j]][nodes[i]];
    let mut edges = Vec::new();
    let mut max_mult = 0;
    for i in 0..r {
        for j in i + 1..r {
            let m = mult(i, j);
            if m > 0 {
                edges.push((i, j, m));
                max_mult = max_mult.max(m);
            }
        }
    }
    if edges.len() != r - 1 {
        return Err(bad("component is not a tree"));
    }
    let mut degree = vec![0usize; r];
    for &(i, j, _) in &edges {
        degree[i] += 1;
        degree[j] += 1;
    }
    match max_mult {
        3 => {
            if r == 2 {
                Ok(Family::G)
            } else {
                Err(bad("triple edge outside G2"))
            }
        }
        2 => {
            if degree.iter().any(|&d| d > 2) {
                return Err(bad("branch node with a double edge"));
            }
            if edges.iter().filter(|&&(_, _, m)| m == 2).count() != 1 {
                return Err(bad("more than one double edge"));
            }
            if r == 2 {
                return Ok(Family::B);
            }
            // Asymmetric entries distinguish the short side of the double
            // edge: |<alpha_short, alpha_long^vee>| = 2.
            let &(i, j, _) = edges.iter().find(|&&(_, _, m)| m == 2).unwrap();
            let short_node = if cartan[nodes[i]][nodes[j]] == -2 {
                // <alpha_j, alpha_i^vee> = -2 means alpha_j is... the entry
                // A[i][j] = 2(a_i,a_j)/(a_i,a_i) = -2 forces (a_i,a_i) short.
                i
            } else {
                j
            };
            let long_node = if short_node == i { j } else { i };
            // walk from the double edge toward both ends
            let arm = |from: usize, banned: usize| -> usize {
                let mut len = 0;
                let mut prev = banned;
                let mut cur = from;
                loop {
                    let next = (0..r).find(|&k| k != prev && k != cur && mult(cur, k) > 0);
                    match next {
                        Some(k) => {
                            len += 1;
                            prev = cur;
                            cur = k;
                        }
                        None => return len,
                    }
                }
            };
            let short_arm = arm(short_node, long_node);
            let long_arm = arm(long_node, short_node);
            if short_arm + long_arm + 2 != r {
                return Err(bad("double-edge diagram is not a path"));
            }
            match (long_arm, short_arm) {
                (_, 0) => Ok(Family::B),
                (0, _) => Ok(Family::C),
                (1, 1) => Ok(Family::F),
                _ => Err(bad("double edge strictly inside a path of rank > 4")),
            }
        }
        1 => {
            let branches = degree.iter().filter(|&&d| d > 2).count();
            if degree.iter().any(|&d| d > 3) || branches > 1 {
                return Err(bad("unrecognized branching"));
            }
            if branches == 0 {
                return Ok(Family::A);
            }
            let center = degree.iter().position(|&d| d == 3).unwrap();
            let mut arms: Vec<usize> = (0..r)
                .filter(|&k| k != center && mult(center, k) > 0)
                .map(|k| {
                    // arm length including the first node off the center
                    let mut len = 1;
                    let mut prev = center;
                    let mut cur = k;
                    while let Some(next) =
                        (0..r).find(|&m| m != prev && m != cur && mult(cur, m) > 0)
                    {
                        len += 1;
                        prev = cur;
                        cur = next;
                    }
                    len
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => Ok(Family::D),
                [1, 2, 2] => Ok(Family::E),
                [1, 2, 3] => Ok(Family::E),
                [1, 2, 4] => Ok(Family::E),
                _ => Err(bad("branch arms match no simple diagram")),
            }
        }
        _ => Err(bad("edge multiplicity out of range")),
    }
}
