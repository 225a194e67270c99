//! Exact root-system data for the five exceptional types.
//!
//! Simple roots follow Bourbaki numbering throughout. A root is stored as its
//! integer coefficient vector over the simple roots; only positive roots are
//! kept (negatives are implicit). Positive roots are generated from the
//! hard-coded Cartan matrix by closing the simple roots under root strings,
//! so no root table is ever read in. All arithmetic is over `i64`; there is
//! no floating point anywhere in this crate.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::toral::KacTuple;

/// One of the five exceptional simple types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionalType {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl ExceptionalType {
    pub const ALL: [ExceptionalType; 5] = [
        ExceptionalType::G2,
        ExceptionalType::F4,
        ExceptionalType::E6,
        ExceptionalType::E7,
        ExceptionalType::E8,
    ];

    /// Rank `l` (number of simple roots).
    pub fn rank(self) -> usize {
        match self {
            ExceptionalType::G2 => 2,
            ExceptionalType::F4 => 4,
            ExceptionalType::E6 => 6,
            ExceptionalType::E7 => 7,
            ExceptionalType::E8 => 8,
        }
    }

    /// Cartan matrix `A[i][j] = <alpha_j, alpha_i^vee>`, 0-indexed rows/columns
    /// for simple roots `alpha_1..alpha_l` in Bourbaki numbering.
    pub fn cartan(self) -> Vec<Vec<i64>> {
        match self {
            // alpha_1 short, alpha_2 long; highest root 3a1 + 2a2.
            ExceptionalType::G2 => vec![vec![2, -3], vec![-1, 2]],
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            ExceptionalType::F4 => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ],
            ExceptionalType::E6 => {
                simply_laced_cartan(6, &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)])
            }
            ExceptionalType::E7 => {
                simply_laced_cartan(7, &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)])
            }
            ExceptionalType::E8 => {
                simply_laced_cartan(8, &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)])
            }
        }
    }

    /// Marks `b_1..b_l`: coefficients of the highest root over the simple roots.
    pub fn marks(self) -> Vec<i64> {
        match self {
            ExceptionalType::G2 => vec![3, 2],
            ExceptionalType::F4 => vec![2, 3, 4, 2],
            ExceptionalType::E6 => vec![1, 2, 2, 3, 2, 1],
            ExceptionalType::E7 => vec![2, 2, 3, 4, 3, 2, 1],
            ExceptionalType::E8 => vec![2, 3, 4, 6, 5, 4, 3, 2],
        }
    }

    /// True iff `p` is a good prime for this type: `p` divides no mark.
    pub fn is_good_prime(self, p: i64) -> Result<bool> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(self.marks().iter().all(|&b| b % p != 0))
    }
}

impl fmt::Display for ExceptionalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExceptionalType::G2 => "G2",
            ExceptionalType::F4 => "F4",
            ExceptionalType::E6 => "E6",
            ExceptionalType::E7 => "E7",
            ExceptionalType::E8 => "E8",
        };
        f.write_str(s)
    }
}

impl FromStr for ExceptionalType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "G2" => Ok(ExceptionalType::G2),
            "F4" => Ok(ExceptionalType::F4),
            "E6" => Ok(ExceptionalType::E6),
            "E7" => Ok(ExceptionalType::E7),
            "E8" => Ok(ExceptionalType::E8),
            other => Err(Error::UnknownType(other.to_string())),
        }
    }
}

fn simply_laced_cartan(rank: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        a[i][i] = 2;
    }
    for &(i, j) in edges {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    }
    a
}

/// Deterministic trial-division primality test; inputs here never exceed a few hundred.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A positive root, stored as nonnegative integer coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Sum of the coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            if c == 1 {
                write!(f, "a{}", i + 1)?;
            } else {
                write!(f, "{}a{}", c, i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Complete integer data of an exceptional root system.
///
/// Immutable after construction and safe to share across threads.
#[derive(Debug)]
pub struct RootSystem {
    ty: ExceptionalType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Positive roots sorted by (height, coefficients).
    positives: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    marks: Vec<i64>,
    /// `(l+1) x (l+1)` extended Cartan matrix over nodes `0..=l`, node 0 affine.
    extended_cartan: Vec<Vec<i64>>,
    coxeter_number: i64,
    /// Symmetrizer `d_i` with `d_i A[i][j] = d_j A[j][i]`, minimal positive integers.
    symmetrizer: Vec<i64>,
    /// Squared length `(alpha, alpha)` of each positive root, in units where a
    /// short simple root has `d = 1`.
    norms: Vec<i64>,
    max_norm: i64,
    min_norm: i64,
}

impl RootSystem {
    /// Build the full root system of `ty` from its Cartan matrix.
    ///
    /// Positive roots are produced by iterative closure: a candidate
    /// `alpha + alpha_i` is a root iff the `alpha_i`-string through `alpha`
    /// extends upward, i.e. `depth - <alpha, alpha_i^vee> > 0`.
    pub fn build(ty: ExceptionalType) -> RootSystem {
        let rank = ty.rank();
        let cartan = ty.cartan();

        let mut set: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            set.insert(e.clone(), ());
            frontier.push(e);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for alpha in frontier {
                for i in 0..rank {
                    // depth of the alpha_i-string below alpha
                    let mut depth = 0i64;
                    let mut probe = alpha.clone();
                    loop {
                        probe[i] -= 1;
                        if probe[i] < 0 || !set.contains_key(&probe) {
                            break;
                        }
                        depth += 1;
                    }
                    let pairing: i64 = (0..rank).map(|j| cartan[i][j] * alpha[j]).sum();
                    if depth - pairing > 0 {
                        let mut up = alpha.clone();
                        up[i] += 1;
                        if set.insert(up.clone(), ()).is_none() {
                            next.push(up);
                        }
                    }
                }
            }
            frontier = next;
        }

        let mut positives: Vec<Root> = set.into_keys().map(|coeffs| Root { coeffs }).collect();
        positives.sort_by_key(|r| (r.height(), r.coeffs.clone()));

        let index: HashMap<Vec<i64>, usize> = positives
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();

        let marks = ty.marks();
        let highest = positives.last().expect("nonempty root system");
        assert_eq!(
            highest.coeffs, marks,
            "generated highest root disagrees with the marks table"
        );
        let coxeter_number = highest.height() + 1;
        assert_eq!(
            coxeter_number,
            2 * positives.len() as i64 / rank as i64,
            "Coxeter number consistency"
        );

        let symmetrizer = compute_symmetrizer(&cartan);
        let gram: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| symmetrizer[i] * cartan[i][j]).collect())
            .collect();
        for i in 0..rank {
            for j in 0..rank {
                assert_eq!(gram[i][j], gram[j][i], "symmetrizer must symmetrize");
            }
        }

        let norm_of = |coeffs: &[i64]| -> i64 {
            let mut n = 0;
            for i in 0..rank {
                for j in 0..rank {
                    n += coeffs[i] * gram[i][j] * coeffs[j];
                }
            }
            n
        };
        let norms: Vec<i64> = positives.iter().map(|r| norm_of(&r.coeffs)).collect();
        let max_norm = *norms.iter().max().unwrap();
        let min_norm = *norms.iter().min().unwrap();

        // Extended Cartan matrix: node 0 carries -highest_root.
        let n = rank + 1;
        let node_vec = |node: usize| -> Vec<i64> {
            if node == 0 {
                marks.iter().map(|&b| -b).collect()
            } else {
                let mut e = vec![0i64; rank];
                e[node - 1] = 1;
                e
            }
        };
        let inner = |x: &[i64], y: &[i64]| -> i64 {
            let mut v = 0;
            for i in 0..rank {
                for j in 0..rank {
                    v += x[i] * gram[i][j] * y[j];
                }
            }
            v
        };
        let mut extended_cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let vi = node_vec(i);
                let vj = node_vec(j);
                let num = 2 * inner(&vj, &vi);
                let den = inner(&vi, &vi);
                assert_eq!(num % den, 0, "Cartan pairings are integers");
                extended_cartan[i][j] = num / den;
            }
        }
        // The extended marks (1, b_1..b_l) annihilate every row.
        for i in 0..n {
            let s: i64 = (0..n)
                .map(|j| extended_cartan[i][j] * if j == 0 { 1 } else { marks[j - 1] })
                .sum();
            assert_eq!(
                s, 0,
                "marks must be a null vector of the extended Cartan matrix"
            );
        }

        RootSystem {
            ty,
            rank,
            cartan,
            positives,
            index,
            marks,
            extended_cartan,
            coxeter_number,
            symmetrizer,
            norms,
            max_norm,
            min_norm,
        }
    }

    pub fn ty(&self) -> ExceptionalType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positives(&self) -> &[Root] {
        &self.positives
    }

    /// Total number of roots `|Phi|`, positive and negative.
    pub fn num_roots(&self) -> i64 {
        2 * self.positives.len() as i64
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Extended marks `(b_0 = 1, b_1, ..., b_l)` indexed by node.
    pub fn extended_marks(&self) -> Vec<i64> {
        let mut b = Vec::with_capacity(self.rank + 1);
        b.push(1);
        b.extend_from_slice(&self.marks);
        b
    }

    pub fn extended_cartan(&self) -> &[Vec<i64>] {
        &self.extended_cartan
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn highest_root(&self) -> &Root {
        self.positives.last().unwrap()
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        self.index.contains_key(coeffs)
    }

    /// Squared length of the positive root at `idx` (short simple root = 2).
    pub fn norm(&self, idx: usize) -> i64 {
        self.norms[idx]
    }

    /// True iff the system has two root lengths (G2, F4).
    pub fn has_two_lengths(&self) -> bool {
        self.min_norm < self.max_norm
    }

    pub fn is_short(&self, idx: usize) -> bool {
        self.has_two_lengths() && self.norms[idx] == self.min_norm
    }

    /// `<beta, gamma^vee>` for coefficient vectors over the simple roots.
    pub fn pairing(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let mut num = 0;
        let mut den = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                let g = self.symmetrizer[i] * self.cartan[i][j];
                num += beta[i] * g * gamma[j];
                den += gamma[i] * g * gamma[j];
            }
        }
        debug_assert_eq!((2 * num) % den, 0);
        2 * num / den
    }

    /// `<alpha, alpha_i^vee>` for a coefficient vector and a simple root
    /// (`i` is 1-based Bourbaki numbering).
    pub fn simple_pairing(&self, alpha: &[i64], i: usize) -> i64 {
        (0..self.rank)
            .map(|j| self.cartan[i - 1][j] * alpha[j])
            .sum()
    }

    /// Adjoint eigenvalue of `root` under the toral element with Kac
    /// coordinates `kac`: `(sum_i c_i a_i) mod p`.
    pub fn eigenvalue(&self, root: &Root, kac: &KacTuple) -> i64 {
        let a = kac.coords();
        let mut s = 0i64;
        for (i, &c) in root.coeffs.iter().enumerate() {
            s += c * a[i + 1];
        }
        s.rem_euclid(kac.prime())
    }
}

/// Minimal positive integers `d_i` with `d_i A[i][j] = d_j A[j][i]`.
fn compute_symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let rank = cartan.len();
    // Propagate rational ratios over the (connected) Dynkin graph, then clear
    // denominators.
    let mut num = vec![0i64; rank];
    let mut den = vec![1i64; rank];
    num[0] = 1;
    let mut stack = vec![0usize];
    let mut seen = vec![false; rank];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..rank {
            if i == j || cartan[i][j] == 0 || seen[j] {
                continue;
            }
            // d_j = d_i * A[i][j] / A[j][i]
            num[j] = num[i] * cartan[i][j];
            den[j] = den[i] * cartan[j][i];
            if num[j] < 0 && den[j] < 0 {
                num[j] = -num[j];
                den[j] = -den[j];
            }
            seen[j] = true;
            stack.push(j);
        }
    }
    assert!(seen.iter().all(|&s| s), "Dynkin diagram must be connected");
    let lcm_den = den.iter().fold(1i64, |acc, &d| lcm(acc, d.abs()));
    let mut d: Vec<i64> = (0..rank).map(|i| num[i] * (lcm_den / den[i])).collect();
    let g = d.iter().fold(0i64, |acc, &x| gcd(acc, x.abs()));
    for x in &mut d {
        *x /= g;
    }
    assert!(d.iter().all(|&x| x > 0));
    d
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}
