//! Affine Weyl reduction of label vectors to the fundamental alcove (the
//! numbers game on the extended diagram), scalar multiplication of toral
//! classes, and conjugacy tests under Omega and under the full automorphism
//! group of the extended diagram.

use crate::diagram::{omega_group, CentralizerType, ExtendedDiagram, NodePermutation};
use crate::error::{Error, Result};
use crate::rootsystem::RootSystem;
use crate::search::enumerate_balanced_auto;
use crate::toral::KacTuple;

/// A node-indexed integer label vector of fixed level `sum b_i a_i = p`;
/// negative entries are allowed. Every reflection preserves the level because
/// the extended marks annihilate the rows of the extended Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelVector {
    p: i64,
    a: Vec<i64>,
}

impl LabelVector {
    pub fn new(rs: &RootSystem, p: i64, a: Vec<i64>) -> Result<LabelVector> {
        if a.len() != rs.rank() + 1 {
            return Err(Error::WrongLength {
                expected: rs.rank() + 1,
                found: a.len(),
            });
        }
        let level: i64 = rs.extended_marks().iter().zip(&a).map(|(b, x)| b * x).sum();
        if level != p {
            return Err(Error::LevelMismatch {
                expected: p,
                found: level,
            });
        }
        Ok(LabelVector { p, a })
    }

    pub fn from_kac(kac: &KacTuple) -> LabelVector {
        LabelVector {
            p: kac.prime(),
            a: kac.coords().to_vec(),
        }
    }

    pub fn level(&self) -> i64 {
        self.p
    }

    pub fn labels(&self) -> &[i64] {
        &self.a
    }
}

/// Reflect the label vector in the wall of node `i`:
/// `a'_j = a_j - ExtCartan[i][j] * a_i`, so in particular `a'_i = -a_i`.
pub fn reflect(rs: &RootSystem, v: &LabelVector, i: usize) -> LabelVector {
    let cartan = rs.extended_cartan();
    let ai = v.a[i];
    let a: Vec<i64> =
        v.a.iter()
            .enumerate()
            .map(|(j, &aj)| aj - cartan[i][j] * ai)
            .collect();
    LabelVector { p: v.p, a }
}

const REDUCTION_CAP: u64 = 10_000_000;

/// Run the numbers game to the closed fundamental alcove: repeatedly reflect
/// at the lowest-index node with a negative label until all labels are
/// nonnegative. Terminates for every positive level; the cap is a guard that
/// must never fire on valid input.
pub fn reduce_to_alcove(rs: &RootSystem, v: &LabelVector) -> Result<KacTuple> {
    let mut cur = v.clone();
    let mut steps = 0u64;
    loop {
        match cur.a.iter().position(|&x| x < 0) {
            None => return KacTuple::new(rs, cur.p, cur.a),
            Some(i) => {
                cur = reflect(rs, &cur, i);
                steps += 1;
                if steps > REDUCTION_CAP {
                    return Err(Error::ReductionDiverged);
                }
            }
        }
    }
}

/// The lexicographic minimum of the Omega-orbit of a Kac tuple.
pub fn canonicalize_omega(rs: &RootSystem, kac: &KacTuple) -> KacTuple {
    canonicalize_under(rs, kac, &omega_group(rs))
}

fn canonicalize_under(rs: &RootSystem, kac: &KacTuple, group: &[NodePermutation]) -> KacTuple {
    let best = group
        .iter()
        .map(|s| s.apply_labels(kac.coords()))
        .min()
        .expect("group contains the identity");
    KacTuple::new(rs, kac.prime(), best).expect("relabeling preserves validity")
}

/// The class of `r * h`: multiply the simple coordinates by `r`, restore the
/// level through `a_0' = p - r (p - a_0)`, reduce to the alcove and take the
/// Omega-canonical representative.
pub fn scale_class(rs: &RootSystem, kac: &KacTuple, r: i64) -> Result<KacTuple> {
    let p = kac.prime();
    let r = r.rem_euclid(p);
    if r == 0 {
        return Err(Error::NotAUnit { r, p });
    }
    let mut a: Vec<i64> = kac.coords().iter().map(|&x| r * x).collect();
    a[0] = p - r * (p - kac.coords()[0]);
    let v = LabelVector { p, a };
    let reduced = reduce_to_alcove(rs, &v)?;
    Ok(canonicalize_omega(rs, &reduced))
}

/// Which group decides conjugacy: `Inner` uses Omega (G-conjugacy of
/// classes), `Full` uses the whole automorphism group of the extended
/// diagram. The two differ only for E6.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugacyGroup {
    Inner,
    Full,
}

/// Whether two Kac tuples describe conjugate classes under the chosen group.
pub fn conjugate_under(
    rs: &RootSystem,
    k1: &KacTuple,
    k2: &KacTuple,
    group: ConjugacyGroup,
) -> Result<bool> {
    if k1.ty() != k2.ty() || k1.prime() != k2.prime() || k1.ty() != rs.ty() {
        return Err(Error::ClassMismatch);
    }
    let perms = match group {
        ConjugacyGroup::Inner => omega_group(rs),
        ConjugacyGroup::Full => ExtendedDiagram::new(rs).automorphism_group(),
    };
    Ok(canonicalize_under(rs, k1, &perms) == canonicalize_under(rs, k2, &perms))
}

/// Scalar linkage of one centralizer type: for every ordered pair of classes
/// sharing this centralizer, the witness `r` with `r * h_i` conjugate to
/// `h_j` under the full automorphism group, if one exists.
#[derive(Debug, Clone)]
pub struct ScalarGroup {
    pub centralizer: CentralizerType,
    pub classes: Vec<KacTuple>,
    /// `witnesses[i][j]` is the least witness for the pair `(i, j)`.
    pub witnesses: Vec<Vec<Option<i64>>>,
}

impl ScalarGroup {
    pub fn fully_linked(&self) -> bool {
        self.witnesses
            .iter()
            .all(|row| row.iter().all(|w| w.is_some()))
    }
}

/// The outcome of checking scalar conjugacy between all same-centralizer
/// classes at one `(type, p)`.
#[derive(Debug, Clone)]
pub struct ScalarReport {
    pub p: i64,
    pub groups: Vec<ScalarGroup>,
}

impl ScalarReport {
    /// True iff every ordered pair of same-centralizer classes has a witness.
    pub fn all_linked(&self) -> bool {
        self.groups.iter().all(ScalarGroup::fully_linked)
    }
}

/// For every pair of balanced classes at `(rs.ty(), p)` with equal
/// centralizer type, find `r` with `scale_class(h, r)` conjugate to `h'`
/// under the full automorphism group. A missing witness is reported, not an
/// error: it would contradict the scalar-multiple theorem.
pub fn verify_scalar_theorem(rs: &RootSystem, p: i64) -> Result<ScalarReport> {
    let records = enumerate_balanced_auto(rs, p)?;
    let mut groups: Vec<ScalarGroup> = Vec::new();
    for rec in &records {
        match groups.iter_mut().find(|g| g.centralizer == rec.centralizer) {
            Some(g) => g.classes.push(rec.kac.clone()),
            None => groups.push(ScalarGroup {
                centralizer: rec.centralizer.clone(),
                classes: vec![rec.kac.clone()],
                witnesses: Vec::new(),
            }),
        }
    }
    for g in &mut groups {
        let n = g.classes.len();
        g.witnesses = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                for r in 1..p {
                    let scaled = scale_class(rs, &g.classes[i], r)?;
                    if conjugate_under(rs, &scaled, &g.classes[j], ConjugacyGroup::Full)? {
                        g.witnesses[i][j] = Some(r);
                        break;
                    }
                }
            }
        }
    }
    Ok(ScalarReport { p, groups })
}
