//! Finite-type Cartan data, weight-lattice arithmetic, Levi subsets,
//! dominance, cominuscule detection, and the Weyl dimension formula for the
//! semisimple part of a Levi subalgebra.
//!
//! Conventions: `a[i][j] = <alpha_j, alpha_i^vee>` and
//! `(alpha_i, alpha_j) = d_i * a[i][j]`, so the symmetric form of a weight
//! against a simple root is `(mu, alpha_j) = <mu, alpha_j^vee> * d_j`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootDataError {
    #[error("unsupported type/rank: {0}{1}")]
    Unsupported(char, usize),
    #[error("node index {0} out of range 1..={1}")]
    NodeOutOfRange(usize, usize),
    #[error("weight {0:?} is not S-dominant")]
    NotDominant(Vec<i64>),
}

/// Cartan matrix and symmetrizers for a finite type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub type_letter: char,
    pub rank: usize,
    /// `cartan[i][j] = a_{ij} = <alpha_j, alpha_i^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// Minimal positive symmetrizers: `d[i] * a[i][j] = d[j] * a[j][i]`.
    pub d: Vec<u64>,
}

/// Element of the weight lattice P in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Weight { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }
}

impl fmt::Display for Weight {
    /// Canonical text in the fundamental-weight basis, e.g. `-2*w2+w1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{}*", a)?;
            }
            write!(f, "w{}", i + 1)?;
        }
        Ok(())
    }
}

/// A choice of Levi subset `S` inside the simple roots of a datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviSpec {
    pub datum: CartanDatum,
    /// 0-based node indices.
    pub s: BTreeSet<usize>,
    /// Set when `S` is the complement of a single node `x` (0-based).
    pub x: Option<usize>,
}

impl LeviSpec {
    pub fn from_subset(datum: CartanDatum, s: BTreeSet<usize>) -> Result<Self, RootDataError> {
        for &i in &s {
            if i >= datum.rank {
                return Err(RootDataError::NodeOutOfRange(i + 1, datum.rank));
            }
        }
        let x = if s.len() + 1 == datum.rank {
            (0..datum.rank).find(|i| !s.contains(i))
        } else {
            None
        };
        Ok(LeviSpec { datum, s, x })
    }

    pub fn from_complement(datum: CartanDatum, x: usize) -> Result<Self, RootDataError> {
        if x >= datum.rank {
            return Err(RootDataError::NodeOutOfRange(x + 1, datum.rank));
        }
        let s = (0..datum.rank).filter(|&i| i != x).collect();
        Ok(LeviSpec {
            datum,
            s,
            x: Some(x),
        })
    }
}

/// Standard Cartan matrix and minimal symmetrizers for the given type.
pub fn build_cartan(type_letter: char, rank: usize) -> Result<CartanDatum, RootDataError> {
    let unsupported = || RootDataError::Unsupported(type_letter, rank);
    let mut a = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        a[i][i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let d: Vec<u64> = match type_letter {
        'A' => {
            if rank == 0 || rank > 8 {
                return Err(unsupported());
            }
            for i in 0..rank.saturating_sub(1) {
                chain(&mut a, i, i + 1);
            }
            vec![1; rank]
        }
        'B' => {
            // alpha_rank short: a[r-2][r-1] = -1, a[r-1][r-2] = -2, d = (2,..,2,1)
            if !(2..=6).contains(&rank) {
                return Err(unsupported());
            }
            for i in 0..rank - 2 {
                chain(&mut a, i, i + 1);
            }
            a[rank - 2][rank - 1] = -1;
            a[rank - 1][rank - 2] = -2;
            let mut d = vec![2; rank];
            d[rank - 1] = 1;
            d
        }
        'C' => {
            // alpha_rank long: a[r-2][r-1] = -2, a[r-1][r-2] = -1, d = (1,..,1,2)
            if !(2..=6).contains(&rank) {
                return Err(unsupported());
            }
            for i in 0..rank - 2 {
                chain(&mut a, i, i + 1);
            }
            a[rank - 2][rank - 1] = -2;
            a[rank - 1][rank - 2] = -1;
            let mut d = vec![1; rank];
            d[rank - 1] = 2;
            d
        }
        'D' => {
            if !(4..=6).contains(&rank) {
                return Err(unsupported());
            }
            for i in 0..rank - 2 {
                chain(&mut a, i, i + 1);
            }
            // node rank-1 also attached to rank-3
            a[rank - 2][rank - 1] = 0;
            a[rank - 1][rank - 2] = 0;
            chain(&mut a, rank - 3, rank - 1);
            vec![1; rank]
        }
        'E' => {
            if !(6..=8).contains(&rank) {
                return Err(unsupported());
            }
            // Bourbaki numbering: chain 1-3-4-5-..-rank, node 2 attached to 4.
            chain(&mut a, 0, 2);
            for i in 2..rank - 1 {
                chain(&mut a, i, i + 1);
            }
            chain(&mut a, 1, 3);
            vec![1; rank]
        }
        'F' => {
            if rank != 4 {
                return Err(unsupported());
            }
            chain(&mut a, 0, 1);
            a[1][2] = -1;
            a[2][1] = -2;
            chain(&mut a, 2, 3);
            vec![2, 2, 1, 1]
        }
        'G' => {
            if rank != 2 {
                return Err(unsupported());
            }
            a[0][1] = -3;
            a[1][0] = -1;
            vec![1, 3]
        }
        _ => return Err(unsupported()),
    };
    let datum = CartanDatum {
        type_letter,
        rank,
        cartan: a,
        d,
    };
    debug_assert!(datum.is_symmetrizable());
    Ok(datum)
}

impl CartanDatum {
    pub fn is_symmetrizable(&self) -> bool {
        (0..self.rank).all(|i| {
            self.cartan[i][i] == 2
                && (0..self.rank).all(|j| {
                    (i == j || self.cartan[i][j] <= 0)
                        && self.d[i] as i64 * self.cartan[i][j]
                            == self.d[j] as i64 * self.cartan[j][i]
                })
        })
    }

    /// `(bracket, form) = (<mu, alpha_j^vee>, (mu, alpha_j))`.
    pub fn pairing(&self, mu: &Weight, j: usize) -> (i64, i64) {
        let bracket = mu.coords[j];
        (bracket, bracket * self.d[j] as i64)
    }

    /// `alpha_i` in fundamental-weight coordinates: the i-th column of the
    /// Cartan matrix.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight {
            coords: (0..self.rank).map(|j| self.cartan[j][i]).collect(),
        }
    }

    /// Symmetric form `(mu, nu)` of two weights, via root coordinates of `nu`.
    /// Returns a rational since `nu` need not lie in the root lattice.
    pub fn form(&self, mu: &Weight, nu: &Weight) -> BigRational {
        // (mu, nu) = sum_j c_j (mu, alpha_j) where nu = sum c_j alpha_j
        let c = self.root_coords(nu);
        let mut acc = BigRational::zero();
        for j in 0..self.rank {
            let (_, form) = self.pairing(mu, j);
            acc += &c[j] * BigRational::from_integer(BigInt::from(form));
        }
        acc
    }

    /// Coordinates of a weight in the simple-root basis, as rationals.
    pub fn root_coords(&self, mu: &Weight) -> Vec<BigRational> {
        // Solve cartan * c = coords (coords_j = sum_i a_{ji} c_i).
        let n = self.rank;
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..n)
                    .map(|c| BigRational::from_integer(BigInt::from(self.cartan[r][c])))
                    .collect();
                row.push(BigRational::from_integer(BigInt::from(mu.coords[r])));
                row
            })
            .collect();
        // Gaussian elimination; the Cartan matrix is invertible.
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .expect("singular Cartan matrix");
            m.swap(col, piv);
            let p = m[col][col].clone();
            for c in col..=n {
                m[col][c] = &m[col][c] / &p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=n {
                        let t = &m[col][c] * &f;
                        m[r][c] = &m[r][c] - t;
                    }
                }
            }
        }
        (0..n).map(|r| m[r][n].clone()).collect()
    }

    /// Membership of `mu` in the root lattice Q.
    pub fn in_root_lattice(&self, mu: &Weight) -> bool {
        self.root_coords(mu).iter().all(|c| c.is_integer())
    }

    /// Integer root coordinates, if `mu` lies in Q.
    pub fn integral_root_coords(&self, mu: &Weight) -> Option<Vec<i64>> {
        let c = self.root_coords(mu);
        if c.iter().all(|x| x.is_integer()) {
            Some(
                c.iter()
                    .map(|x| {
                        let v: BigInt = x.to_integer();
                        i64::try_from(&v).expect("root coordinate overflows i64")
                    })
                    .collect(),
            )
        } else {
            None
        }
    }

    /// All positive roots as integer vectors in the simple-root basis,
    /// generated by root-string closure from the simple roots.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            roots.insert(v);
        }
        loop {
            let mut added = false;
            let snapshot: Vec<Vec<i64>> = roots.iter().cloned().collect();
            for beta in &snapshot {
                for i in 0..n {
                    // <beta, alpha_i^vee> = sum_j beta_j a_{ij}
                    let pair: i64 = (0..n).map(|j| beta[j] * self.cartan[i][j]).sum();
                    // down-string length
                    let mut down = 0i64;
                    let mut v = beta.clone();
                    loop {
                        v[i] -= 1;
                        if v.iter().all(|&c| c == 0) || roots.contains(&v) {
                            if v.iter().all(|&c| c == 0) {
                                down += 1;
                                break;
                            }
                            down += 1;
                        } else {
                            break;
                        }
                    }
                    if down - pair > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if roots.insert(up) {
                            added = true;
                        }
                    }
                }
            }
            if !added {
                break;
            }
        }
        roots.into_iter().collect()
    }

    /// The highest root in simple-root coordinates.
    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots()
            .into_iter()
            .max_by_key(|r| (r.iter().sum::<i64>(), r.clone()))
            .expect("nonempty root system")
    }

    /// Nodes whose coefficient in the highest root is 1 (0-based).
    pub fn cominuscule_nodes(&self) -> BTreeSet<usize> {
        let theta = self.highest_root();
        (0..self.rank).filter(|&i| theta[i] == 1).collect()
    }
}

/// S-restricted dominance: `<lambda, alpha_j^vee> >= 0` for all `j` in S.
pub fn s_dominant(lambda: &Weight, levi: &LeviSpec) -> bool {
    levi.s.iter().all(|&j| lambda.coords[j] >= 0)
}

/// Dimension of the irreducible module of the semisimple part of the Levi
/// with highest weight `lambda`, by the Weyl dimension formula.  The torus
/// directions do not affect the dimension.
pub fn weyl_dim_levi(lambda: &Weight, levi: &LeviSpec) -> Result<BigInt, RootDataError> {
    if !s_dominant(lambda, levi) {
        return Err(RootDataError::NotDominant(lambda.coords.clone()));
    }
    let datum = &levi.datum;
    let s: Vec<usize> = levi.s.iter().copied().collect();
    if s.is_empty() {
        return Ok(BigInt::one());
    }
    // Positive roots of the sub-root-system spanned by S: restrict the Cartan
    // datum to S and enumerate there.
    let sub = CartanDatum {
        type_letter: datum.type_letter,
        rank: s.len(),
        cartan: s
            .iter()
            .map(|&i| s.iter().map(|&j| datum.cartan[i][j]).collect())
            .collect(),
        d: s.iter().map(|&i| datum.d[i]).collect(),
    };
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for beta in sub.positive_roots() {
        // (mu, beta) = sum_k beta_k d_{s_k} <mu, alpha_{s_k}^vee>
        let pair = |bracket: &dyn Fn(usize) -> i64| -> BigRational {
            let mut acc = BigInt::zero();
            for (k, &c) in beta.iter().enumerate() {
                acc += BigInt::from(c) * BigInt::from(sub.d[k] as i64) * BigInt::from(bracket(k));
            }
            BigRational::from_integer(acc)
        };
        // rho_S has <rho_S, alpha_j^vee> = 1 for j in S
        let lam_plus_rho = pair(&|k| lambda.coords[s[k]] + 1);
        let rho = pair(&|_k| 1);
        num *= lam_plus_rho;
        den *= rho;
    }
    let dim = num / den;
    assert!(dim.is_integer(), "Weyl dimension must be an integer");
    Ok(dim.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_tables() {
        let a2 = build_cartan('A', 2).unwrap();
        assert_eq!(a2.cartan, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.d, vec![1, 1]);
        let a1 = build_cartan('A', 1).unwrap();
        assert_eq!(a1.cartan, vec![vec![2]]);
        let b2 = build_cartan('B', 2).unwrap();
        assert_eq!(b2.cartan[0][1] * b2.cartan[1][0], 2);
        assert_eq!(b2.d, vec![2, 1]);
        assert!(build_cartan('A', 9).is_err());
        assert!(build_cartan('Z', 2).is_err());
    }

    #[test]
    fn all_supported_data_are_symmetrizable() {
        for (t, ranks) in [
            ('A', 1..=8),
            ('B', 2..=6),
            ('C', 2..=6),
            ('D', 4..=6),
            ('E', 6..=8),
            ('F', 4..=4),
            ('G', 2..=2),
        ] {
            for r in ranks {
                let d = build_cartan(t, r).unwrap();
                assert!(d.is_symmetrizable(), "{t}{r}");
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = build_cartan('A', 2).unwrap();
        let w1 = Weight::fundamental(2, 0);
        assert_eq!(a2.pairing(&w1, 0), (1, 1));
        assert_eq!(a2.pairing(&Weight::zero(2), 1), (0, 0));
        let mu = Weight::fundamental(2, 1).scale(-2);
        assert_eq!(a2.pairing(&mu, 1).1, -2);
        let b2 = build_cartan('B', 2).unwrap();
        assert_eq!(b2.pairing(&Weight::fundamental(2, 0), 0).1, 2);
    }

    #[test]
    fn simple_root_coords() {
        let a2 = build_cartan('A', 2).unwrap();
        assert_eq!(a2.simple_root(0).coords, vec![2, -1]);
        let a1 = build_cartan('A', 1).unwrap();
        assert_eq!(a1.simple_root(0).coords, vec![2]);
        let sum = a2.simple_root(0).add(&a2.simple_root(1));
        assert_eq!(sum.coords, vec![1, 1]);
        // pairing(simple_root(i), j).bracket = a_{ji}
        for (t, r) in [('A', 3), ('B', 2), ('G', 2)] {
            let d = build_cartan(t, r).unwrap();
            for i in 0..r {
                let alpha = d.simple_root(i);
                for j in 0..r {
                    assert_eq!(d.pairing(&alpha, j).0, d.cartan[j][i]);
                }
            }
        }
    }

    #[test]
    fn root_lattice_membership() {
        let a2 = build_cartan('A', 2).unwrap();
        assert!(a2.in_root_lattice(&a2.simple_root(0)));
        assert!(!a2.in_root_lattice(&Weight::fundamental(2, 0)));
        assert_eq!(
            a2.integral_root_coords(&a2.simple_root(0).add(&a2.simple_root(1))),
            Some(vec![1, 1])
        );
    }

    #[test]
    fn cominuscule_examples() {
        for r in 1..=4 {
            let a = build_cartan('A', r).unwrap();
            assert_eq!(a.cominuscule_nodes(), (0..r).collect());
        }
        assert!(build_cartan('G', 2).unwrap().cominuscule_nodes().is_empty());
        assert_eq!(
            build_cartan('B', 3).unwrap().cominuscule_nodes(),
            [0].into_iter().collect()
        );
        assert_eq!(
            build_cartan('C', 3).unwrap().cominuscule_nodes(),
            [2].into_iter().collect()
        );
        assert_eq!(
            build_cartan('D', 4).unwrap().cominuscule_nodes(),
            [0, 2, 3].into_iter().collect()
        );
    }

    /// Independent oracle: positive roots as the positive part of the Weyl
    /// orbit of the simple roots under repeated simple reflections.
    fn positive_roots_by_reflections(datum: &CartanDatum) -> BTreeSet<Vec<i64>> {
        let n = datum.rank;
        let mut orbit: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = vec![];
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            orbit.insert(v.clone());
            queue.push(v);
        }
        while let Some(beta) = queue.pop() {
            for i in 0..n {
                let pair: i64 = (0..n).map(|j| beta[j] * datum.cartan[i][j]).sum();
                let mut refl = beta.clone();
                refl[i] -= pair;
                if orbit.insert(refl.clone()) {
                    queue.push(refl);
                }
            }
        }
        orbit
            .into_iter()
            .filter(|v| v.iter().all(|&c| c >= 0) && v.iter().any(|&c| c > 0))
            .collect()
    }

    #[test]
    fn positive_roots_match_reflection_oracle() {
        for (t, r) in [('A', 2), ('A', 3), ('B', 2), ('B', 3), ('C', 3), ('D', 4), ('G', 2), ('F', 4)] {
            let datum = build_cartan(t, r).unwrap();
            let closure: BTreeSet<Vec<i64>> = datum.positive_roots().into_iter().collect();
            assert_eq!(closure, positive_roots_by_reflections(&datum), "{t}{r}");
        }
    }

    #[test]
    fn cominuscule_matches_reflection_oracle() {
        for (t, r) in [('A', 4), ('B', 3), ('C', 3), ('D', 5), ('E', 6), ('G', 2)] {
            let datum = build_cartan(t, r).unwrap();
            let roots = positive_roots_by_reflections(&datum);
            let theta = roots
                .iter()
                .max_by_key(|v| (v.iter().sum::<i64>(), (*v).clone()))
                .unwrap();
            let expect: BTreeSet<usize> = (0..r).filter(|&i| theta[i] == 1).collect();
            assert_eq!(datum.cominuscule_nodes(), expect, "{t}{r}");
        }
    }

    #[test]
    fn dominance() {
        let a2 = build_cartan('A', 2).unwrap();
        let s1 = LeviSpec::from_subset(a2.clone(), [0].into_iter().collect()).unwrap();
        let s2 = LeviSpec::from_subset(a2.clone(), [1].into_iter().collect()).unwrap();
        assert!(s_dominant(&Weight::zero(2), &s1));
        let neg_a2 = a2.simple_root(1).neg();
        assert!(s_dominant(&neg_a2, &s1));
        assert!(!s_dominant(&neg_a2, &s2));
    }

    #[test]
    fn weyl_dimensions() {
        let a2 = build_cartan('A', 2).unwrap();
        let s1 = LeviSpec::from_subset(a2.clone(), [0].into_iter().collect()).unwrap();
        assert_eq!(
            weyl_dim_levi(&Weight::zero(2), &s1).unwrap(),
            BigInt::from(1)
        );
        let neg_a2 = a2.simple_root(1).neg();
        assert_eq!(weyl_dim_levi(&neg_a2, &s1).unwrap(), BigInt::from(2));
        let a3 = build_cartan('A', 3).unwrap();
        let s12 = LeviSpec::from_subset(a3.clone(), [0, 1].into_iter().collect()).unwrap();
        let neg_a3 = a3.simple_root(2).neg();
        assert_eq!(weyl_dim_levi(&neg_a3, &s12).unwrap(), BigInt::from(3));
        // adjoint of sl3: highest weight alpha_1 + alpha_2 on full A2
        let full = LeviSpec::from_subset(a2.clone(), [0, 1].into_iter().collect()).unwrap();
        let theta = a2.simple_root(0).add(&a2.simple_root(1));
        assert_eq!(weyl_dim_levi(&theta, &full).unwrap(), BigInt::from(8));
        // empty S
        let empty = LeviSpec::from_subset(a2.clone(), BTreeSet::new()).unwrap();
        assert_eq!(
            weyl_dim_levi(&Weight::fundamental(2, 0).scale(-5), &empty).unwrap(),
            BigInt::from(1)
        );
        // non-dominant input errors
        assert!(weyl_dim_levi(&a2.simple_root(1).neg(), &full).is_err());
    }
}
