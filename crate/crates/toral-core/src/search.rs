//! Enumeration of balanced toral classes for a given (type, prime).
//!
//! Three engines produce identical results wherever their preconditions
//! overlap:
//!
//! * `exhaustive` walks every Kac tuple of level p, including the wall
//!   `a_0 = 0`, and tests balance directly. It is the brute-force oracle.
//! * `levi` enumerates only tuples whose zero coordinates form a standard
//!   subsystem whose complementary orbit dimension is divisible by `p - 1`,
//!   with `a_0 > 0`. Good characteristic only.
//! * `pruned` runs a depth-first search per zero-set candidate (wall-0 sets
//!   included, in every characteristic) and aborts a branch as soon as an
//!   eigenvalue count exceeds its target, which is what makes the large
//!   primes tractable.
//!
//! Workers partition the tuple space by the first assigned coordinate;
//! results are merged and canonically sorted, so output does not depend on
//! the worker count.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::diagram::{omega_group, NodePermutation};
use crate::error::{Error, Result};
use crate::rootsystem::{is_prime, ExceptionalType, RootSystem};
use crate::toral::{centralizer, eigen_profile, BalancedClassRecord, KacTuple};

/// Which engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Levi,
    Pruned,
}

impl std::fmt::Display for SearchMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Levi => "levi",
            SearchMode::Pruned => "pruned",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exhaustive" => Ok(SearchMode::Exhaustive),
            "levi" => Ok(SearchMode::Levi),
            "pruned" => Ok(SearchMode::Pruned),
            other => Err(Error::UnknownMode(other.to_string())),
        }
    }
}

/// A set of nodes whose Kac coordinates are forced to zero, together with
/// the dimension `|Phi| - |Phi_S|` of the associated induced orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSetCandidate {
    pub nodes: BTreeSet<usize>,
    pub orbit_dim: i64,
}

impl ZeroSetCandidate {
    pub fn is_wall0(&self) -> bool {
        self.nodes.contains(&0)
    }
}

/// The primes that can possibly carry a balanced class of the given type:
/// {2, 3} together with the per-type candidate window and the isolated top
/// prime `|Phi| + 1` where prime (for E8 the bad prime 5 is included too).
pub fn candidate_primes(ty: ExceptionalType) -> Vec<i64> {
    let mut ps: Vec<i64> = vec![2, 3];
    let (lo, hi, extra): (i64, i64, &[i64]) = match ty {
        ExceptionalType::G2 => (5, 7, &[13]),
        ExceptionalType::F4 => (5, 23, &[]),
        ExceptionalType::E6 => (5, 37, &[73]),
        ExceptionalType::E7 => (5, 43, &[127]),
        ExceptionalType::E8 => (5, 79, &[241]),
    };
    ps.extend((lo..=hi).filter(|&n| is_prime(n)));
    ps.extend_from_slice(extra);
    ps
}

/// The (type, prime) pairs whose search space is large enough to need the
/// pruned engine.
pub const HEAVY_CASES: [(ExceptionalType, i64); 7] = [
    (ExceptionalType::E6, 73),
    (ExceptionalType::E7, 43),
    (ExceptionalType::E7, 127),
    (ExceptionalType::E8, 41),
    (ExceptionalType::E8, 61),
    (ExceptionalType::E8, 79),
    (ExceptionalType::E8, 241),
];

pub fn is_heavy_case(ty: ExceptionalType, p: i64) -> bool {
    HEAVY_CASES.contains(&(ty, p))
}

/// Roots of the standard subsystem spanned by simple nodes `S ⊆ {1..l}`:
/// exactly the positive roots supported on `S`, counted with negatives.
fn levi_size(rs: &RootSystem, nodes: &BTreeSet<usize>) -> i64 {
    let count = rs
        .positives()
        .iter()
        .filter(|r| {
            r.coeffs()
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || nodes.contains(&(i + 1)))
        })
        .count();
    2 * count as i64
}

/// Size of the closed subsystem generated by the simple roots of
/// `S \ {0}` together with the highest root (for the affine node). Computed
/// by closing the generator set under sums and differences.
fn wall_subsystem_size(rs: &RootSystem, nodes: &BTreeSet<usize>) -> i64 {
    let mut members: BTreeSet<usize> = BTreeSet::new();
    let mut queue: Vec<usize> = Vec::new();
    let push = |idx: usize, members: &mut BTreeSet<usize>, queue: &mut Vec<usize>| {
        if members.insert(idx) {
            queue.push(idx);
        }
    };
    for &i in nodes {
        let idx = if i == 0 {
            rs.positives().len() - 1
        } else {
            let mut e = vec![0i64; rs.rank()];
            e[i - 1] = 1;
            rs.root_index(&e).expect("simple roots are roots")
        };
        push(idx, &mut members, &mut queue);
    }
    while let Some(i) = queue.pop() {
        let snapshot: Vec<usize> = members.iter().copied().collect();
        for j in snapshot {
            let a = rs.positives()[i].coeffs();
            let b = rs.positives()[j].coeffs();
            let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if let Some(k) = rs.root_index(&sum) {
                push(k, &mut members, &mut queue);
            }
            let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
            let neg: Vec<i64> = diff.iter().map(|&c| -c).collect();
            if let Some(k) = rs.root_index(&diff).or_else(|| rs.root_index(&neg)) {
                push(k, &mut members, &mut queue);
            }
        }
    }
    2 * members.len() as i64
}

/// Zero-set candidates for `(rs, p)`, deduplicated up to Omega.
///
/// For `0 ∉ S` the filter is exact: a balanced class with `a_0 > 0` has
/// centralizer equal to the standard subsystem on its zero nodes, so
/// `p - 1` must divide `|Phi| - |Phi_S|`. On the wall (`0 ∈ S`) the
/// centralizer can strictly contain `Phi_S`, so the filter only requires
/// that some eigenspace dimension `>= 1` is achievable, i.e.
/// `|Phi| - |Phi_S| >= p - 1`, plus the budget bound
/// `sum of marks outside S <= p`.
pub fn zero_set_candidates(rs: &RootSystem, p: i64, include_wall0: bool) -> Vec<ZeroSetCandidate> {
    let l = rs.rank();
    let total = rs.num_roots();
    let ext_marks = rs.extended_marks();
    let omega = omega_group(rs);
    let mut out = Vec::new();

    // canonical representative of the orbit of `s` among images on the same
    // side of the wall (containing 0 or not)
    let canonical = |s: &BTreeSet<usize>, omega: &[NodePermutation]| -> BTreeSet<usize> {
        omega
            .iter()
            .map(|g| g.apply_set(s))
            .filter(|img| img.contains(&0) == s.contains(&0))
            .min()
            .expect("identity preserves the wall side")
    };

    for mask in 0u32..(1 << l) {
        let nodes: BTreeSet<usize> = (1..=l).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        let size = levi_size(rs, &nodes);
        let orbit_dim = total - size;
        if orbit_dim == 0 || orbit_dim % (p - 1) != 0 {
            continue;
        }
        if canonical(&nodes, &omega) == nodes {
            out.push(ZeroSetCandidate { nodes, orbit_dim });
        }
    }

    if include_wall0 {
        for mask in 0u32..(1 << l) {
            let mut nodes: BTreeSet<usize> =
                (1..=l).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
            nodes.insert(0);
            if nodes.len() == l + 1 {
                continue;
            }
            let size = wall_subsystem_size(rs, &nodes);
            let orbit_dim = total - size;
            if orbit_dim < p - 1 {
                continue;
            }
            let budget: i64 = (0..=l)
                .filter(|i| !nodes.contains(i))
                .map(|i| ext_marks[i])
                .sum();
            if budget > p {
                continue;
            }
            if canonical(&nodes, &omega) == nodes {
                out.push(ZeroSetCandidate { nodes, orbit_dim });
            }
        }
    }

    out.sort_by(|a, b| a.nodes.cmp(&b.nodes));
    out
}

/// Shared immutable state for one enumeration run.
struct Enumerator<'a> {
    rs: &'a RootSystem,
    omega: Vec<NodePermutation>,
    p: i64,
    /// positive roots as flat coefficient rows
    root_coeffs: Vec<Vec<i64>>,
}

impl<'a> Enumerator<'a> {
    fn new(rs: &'a RootSystem, p: i64) -> Enumerator<'a> {
        Enumerator {
            rs,
            omega: omega_group(rs),
            p,
            root_coeffs: rs.positives().iter().map(|r| r.coeffs().to_vec()).collect(),
        }
    }

    /// Profile the simple coordinates `a[1..]` into `v` and return balance.
    /// `v` must have length `p` and be zeroed.
    fn profile_into(&self, coords: &[i64], v: &mut [u32]) {
        let p = self.p;
        for row in &self.root_coeffs {
            let mut s = 0i64;
            for (c, a) in row.iter().zip(&coords[1..]) {
                s += c * a;
            }
            let e = s % p;
            if e == 0 {
                v[0] += 2;
            } else {
                v[e as usize] += 1;
                v[(p - e) as usize] += 1;
            }
        }
    }

    fn record_from(&self, coords: Vec<i64>) -> Option<BalancedClassRecord> {
        let kac = KacTuple::new(self.rs, self.p, coords).expect("enumerated tuples are valid");
        if kac.is_zero_class() {
            return None;
        }
        let profile = eigen_profile(self.rs, &kac);
        let d = profile.balanced_d()?;
        debug_assert!(d >= 1);
        let canon = canonical_with(self.rs, &kac, &self.omega);
        let (_, centralizer) = centralizer(self.rs, &canon);
        Some(BalancedClassRecord {
            kac: canon,
            centralizer,
            d,
        })
    }

    /// Exhaustive scan of all tuples with the first simple coordinate fixed.
    fn exhaustive_task(&self, first: i64) -> Vec<BalancedClassRecord> {
        let l = self.rs.rank();
        let marks = self.rs.marks();
        let p = self.p;
        let mut found = Vec::new();
        let mut coords = vec![0i64; l + 1];
        coords[1] = first;
        let mut v = vec![0u32; p as usize];

        // assign a_2..a_l recursively; a_0 is the leftover level
        fn rec(
            en: &Enumerator,
            marks: &[i64],
            coords: &mut Vec<i64>,
            v: &mut Vec<u32>,
            node: usize,
            used: i64,
            found: &mut Vec<BalancedClassRecord>,
        ) {
            let l = marks.len();
            let p = en.p;
            if node > l {
                coords[0] = p - used;
                v.fill(0);
                en.profile_into(coords, v);
                let d = v[1];
                let balanced = v[1..].iter().all(|&x| x == d);
                if balanced && d >= 1 {
                    if let Some(rec) = en.record_from(coords.clone()) {
                        found.push(rec);
                    }
                }
                return;
            }
            let b = marks[node - 1];
            let mut a = 0;
            while used + a * b <= p {
                coords[node] = a;
                rec(en, marks, coords, v, node + 1, used + a * b, found);
                a += 1;
            }
            coords[node] = 0;
        }

        let used = first * marks[0];
        if used <= p {
            rec(self, marks, &mut coords, &mut v, 2, used, &mut found);
        }
        found
    }

    fn exhaustive(&self) -> Vec<BalancedClassRecord> {
        let max_first = self.p / self.rs.marks()[0];
        let tasks: Vec<i64> = (0..=max_first).collect();
        let nested: Vec<Vec<BalancedClassRecord>> = tasks
            .par_iter()
            .map(|&first| self.exhaustive_task(first))
            .collect();
        finish(nested)
    }

    fn levi(&self) -> Result<Vec<BalancedClassRecord>> {
        let ty = self.rs.ty();
        if !ty.is_good_prime(self.p)? {
            return Err(Error::BadPrimeForLevi { ty, p: self.p });
        }
        let candidates = zero_set_candidates(self.rs, self.p, false);
        let mut tasks = Vec::new();
        for (ci, _) in candidates.iter().enumerate() {
            tasks.push(ci);
        }
        let nested: Vec<Vec<BalancedClassRecord>> = tasks
            .par_iter()
            .map(|&ci| self.levi_task(&candidates[ci]))
            .collect();
        Ok(finish(nested))
    }

    /// All tuples with zero set exactly `cand.nodes`, every other coordinate
    /// (including `a_0`) at least 1; direct balance test at the leaves.
    fn levi_task(&self, cand: &ZeroSetCandidate) -> Vec<BalancedClassRecord> {
        let l = self.rs.rank();
        let marks = self.rs.marks();
        let p = self.p;
        let free: Vec<usize> = (1..=l).filter(|i| !cand.nodes.contains(i)).collect();
        let tail: Vec<i64> = {
            let mut t = vec![0i64; free.len() + 1];
            for k in (0..free.len()).rev() {
                t[k] = t[k + 1] + marks[free[k] - 1];
            }
            t
        };
        let mut found = Vec::new();
        let mut coords = vec![0i64; l + 1];
        let mut v = vec![0u32; p as usize];

        #[allow(clippy::too_many_arguments)]
        fn rec(
            en: &Enumerator,
            free: &[usize],
            tail: &[i64],
            marks: &[i64],
            coords: &mut Vec<i64>,
            v: &mut Vec<u32>,
            k: usize,
            used: i64,
            found: &mut Vec<BalancedClassRecord>,
        ) {
            let p = en.p;
            if k == free.len() {
                coords[0] = p - used;
                debug_assert!(coords[0] >= 1);
                v.fill(0);
                en.profile_into(coords, v);
                let d = v[1];
                if d >= 1 && v[1..].iter().all(|&x| x == d) {
                    if let Some(rec) = en.record_from(coords.clone()) {
                        found.push(rec);
                    }
                }
                return;
            }
            let b = marks[free[k] - 1];
            let mut a = 1i64;
            // reserve 1 for a_0 and the minimum for the remaining nodes
            while used + a * b + tail[k + 1] < p {
                coords[free[k]] = a;
                rec(en, free, tail, marks, coords, v, k + 1, used + a * b, found);
                a += 1;
            }
            coords[free[k]] = 0;
        }

        rec(
            self,
            &free,
            &tail,
            marks,
            &mut coords,
            &mut v,
            0,
            0,
            &mut found,
        );
        found
    }

    fn pruned(&self) -> Vec<BalancedClassRecord> {
        let candidates = zero_set_candidates(self.rs, self.p, true);
        let compiled: Vec<CompiledCandidate> = candidates.iter().map(|c| self.compile(c)).collect();
        // partition work by (candidate, first slot value)
        let mut tasks: Vec<(usize, Option<i64>)> = Vec::new();
        for (ci, cc) in compiled.iter().enumerate() {
            if cc.slots.is_empty() {
                tasks.push((ci, None));
            } else {
                let cap = if cc.wall0 { self.p } else { self.p - 1 };
                let max_first = (cap - cc.tail_min[1]) / cc.weights[0];
                for a in 1..=max_first.max(0) {
                    tasks.push((ci, Some(a)));
                }
            }
        }
        let nested: Vec<Vec<BalancedClassRecord>> = tasks
            .par_iter()
            .map(|&(ci, first)| self.pruned_task(&compiled[ci], first))
            .collect();
        finish(nested)
    }

    fn compile(&self, cand: &ZeroSetCandidate) -> CompiledCandidate {
        let l = self.rs.rank();
        let marks = self.rs.marks();
        let cartan = self.rs.cartan();
        let wall0 = cand.is_wall0();
        let d_target = (cand.orbit_dim / (self.p - 1)) as u32;

        // assignment order: descending mark, preferring nodes adjacent to the
        // prefix so whole sub-root-systems become measurable early
        let mut remaining: Vec<usize> = (1..=l).filter(|i| !cand.nodes.contains(i)).collect();
        let mut slots: Vec<usize> = Vec::new();
        while !remaining.is_empty() {
            let pick = remaining
                .iter()
                .enumerate()
                .max_by_key(|&(_, &n)| {
                    let adj = slots
                        .iter()
                        .any(|&s| cartan[s - 1][n - 1] != 0 || cartan[n - 1][s - 1] != 0);
                    (marks[n - 1], adj as i64, -(n as i64))
                })
                .map(|(pos, _)| pos)
                .unwrap();
            slots.push(remaining.remove(pick));
        }
        let weights: Vec<i64> = slots.iter().map(|&n| marks[n - 1]).collect();
        let mut tail_min = vec![0i64; slots.len() + 1];
        for k in (0..slots.len()).rev() {
            tail_min[k] = tail_min[k + 1] + weights[k];
        }

        let slot_of = {
            let mut m = vec![usize::MAX; l + 1];
            for (k, &n) in slots.iter().enumerate() {
                m[n] = k;
            }
            m
        };
        let mut roots_at: Vec<Vec<CompiledRoot>> = (0..=slots.len()).map(|_| Vec::new()).collect();
        for row in &self.root_coeffs {
            let mut terms: Vec<(usize, i64)> = Vec::new();
            let mut depth = 0usize;
            for (i, &c) in row.iter().enumerate() {
                if c != 0 && slot_of[i + 1] != usize::MAX {
                    let s = slot_of[i + 1];
                    terms.push((s, c));
                    depth = depth.max(s + 1);
                }
            }
            if !terms.is_empty() {
                roots_at[depth].push(CompiledRoot { terms });
            }
        }

        CompiledCandidate {
            wall0,
            d_target,
            slots,
            weights,
            tail_min,
            roots_at,
        }
    }

    fn pruned_task(&self, cc: &CompiledCandidate, first: Option<i64>) -> Vec<BalancedClassRecord> {
        if cc.d_target == 0 {
            // only the zero class could survive; nothing to report
            return Vec::new();
        }
        let mut state = PrunedState {
            values: vec![0i64; cc.slots.len()],
            counts: vec![0u32; (self.p as usize) / 2 + 1],
            undo: Vec::new(),
            found: Vec::new(),
        };
        if cc.slots.is_empty() {
            // no free node: either the zero class (a_0 = p) or, on the wall,
            // an unreachable level
            return Vec::new();
        }
        self.pruned_dfs(cc, &mut state, 0, 0, first);
        state.found
    }

    fn pruned_dfs(
        &self,
        cc: &CompiledCandidate,
        state: &mut PrunedState,
        k: usize,
        used: i64,
        first: Option<i64>,
    ) {
        let p = self.p;
        if k == cc.slots.len() {
            let l = self.rs.rank();
            let mut coords = vec![0i64; l + 1];
            for (slot, &node) in cc.slots.iter().enumerate() {
                coords[node] = state.values[slot];
            }
            coords[0] = if cc.wall0 { 0 } else { p - used };
            if let Some(rec) = self.record_from(coords) {
                debug_assert!(cc.wall0 || rec.d == cc.d_target);
                state.found.push(rec);
            }
            return;
        }
        let w = cc.weights[k];
        let cap = if cc.wall0 { p } else { p - 1 };
        let max_a = (cap - used - cc.tail_min[k + 1]) / w;
        let last = k == cc.slots.len() - 1;
        for a in 1..=max_a.max(0) {
            if k == 0 {
                if let Some(f) = first {
                    if a != f {
                        continue;
                    }
                }
            }
            if cc.wall0 && last && used + a * w != p {
                continue;
            }
            state.values[k] = a;
            let mark = state.undo.len();
            let mut ok = true;
            for root in &cc.roots_at[k + 1] {
                let mut e = 0i64;
                for &(slot, c) in &root.terms {
                    e += c * state.values[slot];
                }
                if e >= p {
                    e -= p;
                }
                debug_assert!((0..p).contains(&e));
                if e == 0 {
                    if !cc.wall0 {
                        // a_0 > 0 here, so the centralizer is exactly the
                        // standard subsystem: no other root may vanish
                        ok = false;
                        break;
                    }
                } else {
                    let cls = e.min(p - e) as usize;
                    state.counts[cls] += 1;
                    state.undo.push(cls);
                    if state.counts[cls] > cc.d_target {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.pruned_dfs(cc, state, k + 1, used + a * w, first);
            }
            for &cls in &state.undo[mark..] {
                state.counts[cls] -= 1;
            }
            state.undo.truncate(mark);
        }
        state.values[k] = 0;
    }
}

struct CompiledRoot {
    terms: Vec<(usize, i64)>,
}

struct CompiledCandidate {
    wall0: bool,
    d_target: u32,
    slots: Vec<usize>,
    weights: Vec<i64>,
    tail_min: Vec<i64>,
    roots_at: Vec<Vec<CompiledRoot>>,
}

struct PrunedState {
    values: Vec<i64>,
    counts: Vec<u32>,
    undo: Vec<usize>,
    found: Vec<BalancedClassRecord>,
}

fn canonical_with(rs: &RootSystem, kac: &KacTuple, omega: &[NodePermutation]) -> KacTuple {
    let best = omega
        .iter()
        .map(|s| s.apply_labels(kac.coords()))
        .min()
        .expect("identity is present");
    KacTuple::new(rs, kac.prime(), best).expect("relabeling preserves validity")
}

fn finish(nested: Vec<Vec<BalancedClassRecord>>) -> Vec<BalancedClassRecord> {
    let mut all: Vec<BalancedClassRecord> = nested.into_iter().flatten().collect();
    all.sort();
    all.dedup_by(|a, b| a.kac == b.kac);
    all
}

/// Enumerate all balanced toral classes of `(rs.ty(), p)` with the given
/// engine, as canonically sorted Omega-representatives.
pub fn enumerate_balanced(
    rs: &RootSystem,
    p: i64,
    mode: SearchMode,
) -> Result<Vec<BalancedClassRecord>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let en = Enumerator::new(rs, p);
    match mode {
        SearchMode::Exhaustive => Ok(en.exhaustive()),
        SearchMode::Levi => en.levi(),
        SearchMode::Pruned => Ok(en.pruned()),
    }
}

/// Engine auto-selection: pruned for the heavy cases, exhaustive otherwise.
pub fn enumerate_balanced_auto(rs: &RootSystem, p: i64) -> Result<Vec<BalancedClassRecord>> {
    let mode = if is_heavy_case(rs.ty(), p) {
        SearchMode::Pruned
    } else {
        SearchMode::Exhaustive
    };
    enumerate_balanced(rs, p, mode)
}

/// Result of one (type, prime) cell of the full tables.
#[derive(Debug, Clone)]
pub enum PrimeOutcome {
    Computed(Vec<BalancedClassRecord>),
    Skipped,
}

/// All balanced classes of one type over its candidate primes.
#[derive(Debug, Clone)]
pub struct TypeTable {
    pub ty: ExceptionalType,
    pub primes: Vec<(i64, PrimeOutcome)>,
}

impl TypeTable {
    pub fn computed_records(&self) -> Vec<&BalancedClassRecord> {
        self.primes
            .iter()
            .filter_map(|(_, o)| match o {
                PrimeOutcome::Computed(v) => Some(v.iter()),
                PrimeOutcome::Skipped => None,
            })
            .flatten()
            .collect()
    }
}

/// The classification table of one type. With `heavy = false` the heavy
/// (type, prime) cells are skipped; with `heavy = true` they run the pruned
/// engine.
pub fn table_for(ty: ExceptionalType, heavy: bool) -> TypeTable {
    let rs = RootSystem::build(ty);
    let mut primes = Vec::new();
    for p in candidate_primes(ty) {
        if !heavy && is_heavy_case(ty, p) {
            primes.push((p, PrimeOutcome::Skipped));
        } else {
            let records = enumerate_balanced_auto(&rs, p).expect("candidate primes are prime");
            primes.push((p, PrimeOutcome::Computed(records)));
        }
    }
    TypeTable { ty, primes }
}

/// The classification tables of all five types.
pub fn all_tables(heavy: bool) -> Vec<TypeTable> {
    ExceptionalType::ALL
        .iter()
        .map(|&ty| table_for(ty, heavy))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidate_prime_lists() {
        assert_eq!(candidate_primes(ExceptionalType::G2), vec![2, 3, 5, 7, 13]);
        assert_eq!(
            candidate_primes(ExceptionalType::F4),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23]
        );
        assert_eq!(
            candidate_primes(ExceptionalType::E6),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 73]
        );
        let e7 = candidate_primes(ExceptionalType::E7);
        assert_eq!(*e7.last().unwrap(), 127);
        assert!(e7.contains(&43));
        let e8 = candidate_primes(ExceptionalType::E8);
        assert_eq!(e8.first(), Some(&2));
        assert!(e8.contains(&5));
        assert!(e8.contains(&79));
        assert_eq!(*e8.last().unwrap(), 241);
    }

    #[test]
    fn zero_sets_e8_p19() {
        let rs = RootSystem::build(ExceptionalType::E8);
        let cands = zero_set_candidates(&rs, 19, false);
        let a2: BTreeSet<usize> = [4, 5].into();
        let hit = cands
            .iter()
            .find(|c| c.nodes == a2)
            .expect("A2 candidate present");
        assert_eq!(hit.orbit_dim, 234);
        assert_eq!(hit.orbit_dim % 18, 0);
    }

    #[test]
    fn zero_sets_e8_p241_only_empty() {
        let rs = RootSystem::build(ExceptionalType::E8);
        let cands = zero_set_candidates(&rs, 241, false);
        assert_eq!(cands.len(), 1);
        assert!(cands[0].nodes.is_empty());
        assert_eq!(cands[0].orbit_dim, 240);
    }

    #[test]
    fn zero_sets_p2_all_proper() {
        let rs = RootSystem::build(ExceptionalType::G2);
        let cands = zero_set_candidates(&rs, 2, false);
        // all subsets of {1,2} with nonzero orbit dimension qualify at p=2
        assert_eq!(cands.len(), 3);
        for c in &cands {
            assert!(c.orbit_dim > 0 && c.orbit_dim % 2 == 0);
        }
    }

    #[test]
    fn enumerate_e6_p13_single_class() {
        let rs = RootSystem::build(ExceptionalType::E6);
        for mode in [SearchMode::Exhaustive, SearchMode::Levi, SearchMode::Pruned] {
            let recs = enumerate_balanced(&rs, 13, mode).unwrap();
            assert_eq!(recs.len(), 1, "{mode}");
            // canonical representative of the rotation orbit of (2,1,1,1,1,1,1)
            assert_eq!(recs[0].kac.coords(), &[1, 1, 1, 1, 1, 1, 2]);
            assert!(recs[0].centralizer.is_regular());
            assert_eq!(recs[0].d, 6);
        }
    }

    #[test]
    fn enumerate_f4_p11_empty() {
        let rs = RootSystem::build(ExceptionalType::F4);
        for mode in [SearchMode::Exhaustive, SearchMode::Levi, SearchMode::Pruned] {
            assert!(
                enumerate_balanced(&rs, 11, mode).unwrap().is_empty(),
                "{mode}"
            );
        }
    }

    #[test]
    fn enumerate_e8_p7_two_classes() {
        let rs = RootSystem::build(ExceptionalType::E8);
        let recs = enumerate_balanced(&rs, 7, SearchMode::Pruned).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].kac.coords(), &[1, 1, 0, 0, 0, 0, 1, 0, 0]);
        assert_eq!(recs[0].centralizer.to_string(), "A2D4");
        assert_eq!(recs[0].d, 35);
        assert_eq!(recs[1].kac.coords(), &[2, 0, 0, 0, 0, 0, 0, 1, 1]);
        assert_eq!(recs[1].centralizer.to_string(), "E6");
        assert_eq!(recs[1].d, 28);
    }

    #[test]
    fn enumerate_g2_p13_two_regular_classes() {
        let rs = RootSystem::build(ExceptionalType::G2);
        let recs = enumerate_balanced(&rs, 13, SearchMode::Exhaustive).unwrap();
        let kacs: Vec<&[i64]> = recs.iter().map(|r| r.kac.coords()).collect();
        assert_eq!(kacs, vec![&[1, 2, 3][..], &[6, 1, 2][..]]);
        assert!(recs.iter().all(|r| r.centralizer.is_regular() && r.d == 1));
    }

    #[test]
    fn e8_bad_prime_wall_classes() {
        let rs = RootSystem::build(ExceptionalType::E8);
        let recs = enumerate_balanced(&rs, 5, SearchMode::Exhaustive).unwrap();
        assert_eq!(recs.len(), 4);
        let strings: Vec<String> = recs.iter().map(|r| r.centralizer.to_string()).collect();
        assert_eq!(strings.iter().filter(|s| *s == "A1A6").count(), 2);
        assert!(strings.contains(&"D6".to_string()));
        assert!(strings.contains(&"A4A4".to_string()));
        // pruned agrees in bad characteristic
        let pruned = enumerate_balanced(&rs, 5, SearchMode::Pruned).unwrap();
        assert_eq!(recs, pruned);
    }

    #[test]
    fn levi_mode_rejects_bad_primes() {
        let rs = RootSystem::build(ExceptionalType::E8);
        assert!(matches!(
            enumerate_balanced(&rs, 5, SearchMode::Levi),
            Err(Error::BadPrimeForLevi { .. })
        ));
        assert!(matches!(
            enumerate_balanced(&rs, 6, SearchMode::Exhaustive),
            Err(Error::NotPrime(6))
        ));
    }

    #[test]
    fn skipping_heavy_cells() {
        let t = table_for(ExceptionalType::E7, false);
        let skipped: Vec<i64> = t
            .primes
            .iter()
            .filter(|(_, o)| matches!(o, PrimeOutcome::Skipped))
            .map(|&(p, _)| p)
            .collect();
        assert_eq!(skipped, vec![43, 127]);
    }
}
