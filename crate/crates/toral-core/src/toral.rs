//! Toral classes: Kac tuples, adjoint eigenvalue profiles, balance
//! predicates, centralizers and the derived quantities.

use std::fmt;

use crate::diagram::{classify_subsystem, CentralizerType, Subsystem};
use crate::error::{Error, Result};
use crate::rootsystem::{is_prime, ExceptionalType, RootSystem};

/// Kac coordinates `(a_0, ..., a_l)` of a toral class: nonnegative integers
/// with `sum b_i a_i = p` (where `b_0 = 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KacTuple {
    ty: ExceptionalType,
    p: i64,
    a: Vec<i64>,
}

impl KacTuple {
    pub fn new(rs: &RootSystem, p: i64, a: Vec<i64>) -> Result<KacTuple> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if a.len() != rs.rank() + 1 {
            return Err(Error::WrongLength {
                expected: rs.rank() + 1,
                found: a.len(),
            });
        }
        if a.iter().any(|&x| x < 0) {
            return Err(Error::NegativeCoordinate);
        }
        let level: i64 = rs.extended_marks().iter().zip(&a).map(|(b, x)| b * x).sum();
        if level != p {
            return Err(Error::LevelMismatch {
                expected: p,
                found: level,
            });
        }
        Ok(KacTuple { ty: rs.ty(), p, a })
    }

    /// The zero class `(p, 0, ..., 0)`.
    pub fn zero(rs: &RootSystem, p: i64) -> Result<KacTuple> {
        let mut a = vec![0i64; rs.rank() + 1];
        a[0] = p;
        KacTuple::new(rs, p, a)
    }

    pub fn ty(&self) -> ExceptionalType {
        self.ty
    }

    pub fn prime(&self) -> i64 {
        self.p
    }

    /// Coordinates indexed by node, `coords()[0] = a_0`.
    pub fn coords(&self) -> &[i64] {
        &self.a
    }

    /// True iff every simple coordinate vanishes mod p, i.e. the underlying
    /// element is central (zero in the adjoint algebra). This catches the
    /// zero class in all of its representations, e.g. `(0,...,0,p)` on a
    /// node of mark 1.
    pub fn is_zero_class(&self) -> bool {
        self.a[1..].iter().all(|&x| x % self.p == 0)
    }
}

impl fmt::Display for KacTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// Root-space counts per adjoint eigenvalue: `v[j]` is the number of root
/// spaces in the eigenspace of `j` mod p. The Cartan subalgebra is not
/// counted (it sits in degree 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenProfile {
    p: i64,
    v: Vec<u32>,
}

impl EigenProfile {
    pub fn prime(&self) -> i64 {
        self.p
    }

    pub fn counts(&self) -> &[u32] {
        &self.v
    }

    /// `Some(d)` iff `v_1 = v_2 = ... = v_{p-1} = d`. The zero class is
    /// balanced with `d = 0`; callers filter it out of class listings.
    pub fn balanced_d(&self) -> Option<u32> {
        let d = self.v[1];
        if self.v[1..].iter().all(|&x| x == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.balanced_d().is_some()
    }

    /// Balanced with `d | v_1`. Requires `d >= 1`.
    pub fn is_d_balanced(&self, d: u32) -> bool {
        assert!(d >= 1, "divisor must be positive");
        match self.balanced_d() {
            Some(v1) => v1 % d == 0,
            None => false,
        }
    }

    /// `kappa(h, h) = sum_j v_j j^2 mod p`, the trace form evaluated on the
    /// class. Vanishes mod p for every balanced class when p > 3.
    pub fn killing_norm(&self) -> i64 {
        let p = self.p;
        let mut s = 0i64;
        for (j, &vj) in self.v.iter().enumerate().skip(1) {
            s = (s + vj as i64 % p * ((j as i64 * j as i64) % p)) % p;
        }
        s
    }
}

/// Count root spaces per eigenvalue for the toral class `kac`.
///
/// Each positive root `alpha` contributes to `v_e` and `v_{p-e}` where
/// `e = (sum c_i a_i) mod p`; if `e = 0` both contributions land in `v_0`.
/// The mod-p reduction is mandatory: on the wall `a_0 = 0` the raw sum can
/// reach p.
pub fn eigen_profile(rs: &RootSystem, kac: &KacTuple) -> EigenProfile {
    let p = kac.prime();
    let mut v = vec![0u32; p as usize];
    for root in rs.positives() {
        let e = rs.eigenvalue(root, kac);
        if e == 0 {
            v[0] += 2;
        } else {
            v[e as usize] += 1;
            v[(p - e) as usize] += 1;
        }
    }
    EigenProfile { p, v }
}

/// The centralizer root subsystem `Phi_0 = { alpha : eigenvalue = 0 }` and
/// its type string.
///
/// Always computed from scratch: for `a_0 > 0` this equals the standard
/// subsystem spanned by the zero-coordinate simple nodes, but on the wall
/// `a_0 = 0` it can be strictly larger.
pub fn centralizer(rs: &RootSystem, kac: &KacTuple) -> (Subsystem, CentralizerType) {
    let zero: Vec<usize> = rs
        .positives()
        .iter()
        .enumerate()
        .filter(|(_, root)| rs.eigenvalue(root, kac) == 0)
        .map(|(i, _)| i)
        .collect();
    let sub = Subsystem::from_positive_indices(rs, zero)
        .expect("eigenvalue-zero roots always form a closed subsystem");
    let ct = classify_subsystem(rs, &sub).expect("centralizer subsystems always classify");
    (sub, ct)
}

/// One conjugacy class of balanced toral elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedClassRecord {
    /// Lexicographic minimum over the Omega-orbit.
    pub kac: KacTuple,
    pub centralizer: CentralizerType,
    /// Dimension of each nonzero eigenspace, `d = v_1`.
    pub d: u32,
}

impl BalancedClassRecord {
    pub fn ty(&self) -> ExceptionalType {
        self.kac.ty()
    }

    pub fn prime(&self) -> i64 {
        self.kac.prime()
    }
}

impl PartialOrd for BalancedClassRecord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BalancedClassRecord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.prime(), self.kac.coords()).cmp(&(other.prime(), other.kac.coords()))
    }
}

impl fmt::Display for BalancedClassRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} p={} kac={} centralizer={} d={}",
            self.ty(),
            self.prime(),
            self.kac,
            self.centralizer,
            self.d
        )
    }
}
