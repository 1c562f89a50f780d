//! Sparse exact matrices over the rationals.
//!
//! Every rank-based statement in the crate ends up here. Elimination runs on
//! integer rows (each row scaled by the lcm of its denominators), first with
//! checked `i64` arithmetic and, on overflow, again with big integers. Rows are
//! kept primitive (content divided out) after every update, which keeps the
//! entries of the 0/1-heavy matrices met in practice small.
//!
//! Pivoting prefers the column with the fewest live entries, ties broken by the
//! lowest column index, and within a column the shortest row, ties broken by
//! the lowest row index. The pivot sequence is therefore a pure function of the
//! input, and so is the kernel basis.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

type SparseRow<T> = Vec<(usize, T)>;

/// Sparse rational matrix stored as sorted `(row, col, value)` triplets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, BigRational)>,
}

/// Right kernel of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    pub vectors: Vec<Vec<BigRational>>,
    pub ambient_dim: usize,
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

impl ExactMatrix {
    /// Builds a matrix from triplets. Repeated positions are summed and zero
    /// results dropped.
    pub fn new(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, BigRational)>,
    ) -> Self {
        let mut entries: Vec<(usize, usize, BigRational)> = triplets.into_iter().collect();
        for (r, c, _) in &entries {
            assert!(*r < rows && *c < cols, "triplet ({r}, {c}) outside {rows}x{cols}");
        }
        entries.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut merged: Vec<(usize, usize, BigRational)> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => merged.push((r, c, v)),
            }
        }
        merged.retain(|e| !e.2.is_zero());
        ExactMatrix { rows, cols, entries: merged }
    }

    pub fn from_integer_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Self {
        Self::new(
            rows,
            cols,
            triplets
                .into_iter()
                .map(|(r, c, v)| (r, c, BigRational::from_integer(BigInt::from(v)))),
        )
    }

    /// Dense integer input, one inner vector per row.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let triplets = rows.iter().enumerate().flat_map(|(i, row)| {
            assert_eq!(row.len(), cols, "ragged row {i}");
            row.iter().enumerate().map(move |(j, &v)| (i, j, v))
        });
        Self::from_integer_triplets(rows.len(), cols, triplets)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_integer_triplets(n, n, (0..n).map(|i| (i, i, 1)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, BigRational)] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> BigRational {
        self.entries
            .binary_search_by(|e| (e.0, e.1).cmp(&(row, col)))
            .map(|i| self.entries[i].2.clone())
            .unwrap_or_else(|_| BigRational::zero())
    }

    pub fn transpose(&self) -> Self {
        Self::new(
            self.cols,
            self.rows,
            self.entries.iter().map(|(r, c, v)| (*c, *r, v.clone())),
        )
    }

    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        let mut out = vec![vec![BigRational::zero(); self.cols]; self.rows];
        for (r, c, v) in &self.entries {
            out[*r][*c] = v.clone();
        }
        out
    }

    /// Row-major sparse view.
    pub fn row_lists(&self) -> Vec<Vec<(usize, BigRational)>> {
        let mut out = vec![Vec::new(); self.rows];
        for (r, c, v) in &self.entries {
            out[*r].push((*c, v.clone()));
        }
        out
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let right = other.row_lists();
        let mut triplets = Vec::new();
        for (r, c, v) in &self.entries {
            for (k, w) in &right[*c] {
                triplets.push((*r, *k, v * w));
            }
        }
        ExactMatrix::new(self.rows, other.cols, triplets)
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![BigRational::zero(); self.rows];
        for (r, c, x) in &self.entries {
            out[*r] += x * &v[*c];
        }
        out
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        echelon_integer(self.integer_rows(), self.cols).len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    ///
    /// One vector per non-pivot column `f`: the unique kernel element with a 1
    /// at `f` and 0 at every other non-pivot column, rescaled to a primitive
    /// integer vector whose first nonzero entry is positive. Vectors are listed
    /// by increasing free column.
    pub fn kernel_basis(&self) -> KernelBasis {
        let pivots = echelon_integer(self.integer_rows(), self.cols);
        let mut is_pivot = vec![false; self.cols];
        for (c, _) in &pivots {
            is_pivot[*c] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|c| !is_pivot[*c]) {
            let mut x = vec![BigRational::zero(); self.cols];
            x[free] = BigRational::one();
            for (pc, row) in pivots.iter().rev() {
                let mut acc = BigRational::zero();
                let mut pv = BigInt::zero();
                for (c, v) in row {
                    if c == pc {
                        pv = v.clone();
                    } else if !x[*c].is_zero() {
                        acc += &x[*c] * BigRational::from_integer(v.clone());
                    }
                }
                x[*pc] = -acc / BigRational::from_integer(pv);
            }
            vectors.push(primitive_integer_vector(x));
        }
        KernelBasis { vectors, ambient_dim: self.cols }
    }

    /// Rank of the integer-scaled rows reduced modulo `p`. Never exceeds the
    /// rational rank; intended only as a quick lower bound.
    pub fn rank_mod_p(&self, p: u64) -> Result<usize> {
        if !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        let rows = self
            .integer_rows()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .filter_map(|(c, v)| {
                        let r = v.mod_floor(&BigInt::from(p)).to_u64().unwrap();
                        (r != 0).then_some((c, r))
                    })
                    .collect()
            })
            .collect();
        let field = ModP(p);
        Ok(echelon(&field, rows, self.cols)
            .expect("modular elimination cannot overflow")
            .len())
    }

    /// Each row multiplied by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<SparseRow<BigInt>> {
        self.row_lists()
            .into_iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
                row.into_iter()
                    .map(|(c, v)| (c, (v * BigRational::from_integer(lcm.clone())).to_integer()))
                    .collect()
            })
            .collect()
    }

    pub fn to_triplet_json(&self) -> TripletMatrix {
        TripletMatrix {
            rows: self.rows,
            cols: self.cols,
            triplets: self
                .entries
                .iter()
                .map(|(r, c, v)| (*r, *c, format_rational(v)))
                .collect(),
        }
    }

    pub fn from_triplet_json(t: &TripletMatrix) -> Result<Self> {
        let mut triplets = Vec::with_capacity(t.triplets.len());
        for (r, c, s) in &t.triplets {
            if *r >= t.rows || *c >= t.cols {
                return Err(Error::Input(format!("triplet ({r}, {c}) outside matrix")));
            }
            triplets.push((*r, *c, parse_rational(s)?));
        }
        Ok(Self::new(t.rows, t.cols, triplets))
    }
}

/// Serialized form `{"rows": m, "cols": n, "triplets": [[i, j, "p/q"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripletMatrix {
    pub rows: usize,
    pub cols: usize,
    pub triplets: Vec<(usize, usize, String)>,
}

pub fn format_rational(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn primitive_integer_vector(x: Vec<BigRational>) -> Vec<BigRational> {
    let lcm = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = x
        .iter()
        .map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return x;
    }
    if ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        g = -g;
    }
    ints.into_iter()
        .map(|v| BigRational::from_integer(v / &g))
        .collect()
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic used by the elimination kernel. `combine` returns
/// `pv * a - rv * b`, or `None` on overflow.
trait Arith {
    type T: Clone;
    fn zero(&self) -> Self::T;
    fn is_zero(&self, a: &Self::T) -> bool;
    fn combine(&self, pv: &Self::T, a: &Self::T, rv: &Self::T, b: &Self::T) -> Option<Self::T>;
    /// Cancels common factors of the two multipliers.
    fn reduce_pair(&self, pv: &Self::T, rv: &Self::T) -> (Self::T, Self::T);
    fn normalize(&self, row: &mut SparseRow<Self::T>);
}

struct CheckedI64;
struct Big;
struct ModP(u64);

impl Arith for CheckedI64 {
    type T = i64;
    fn zero(&self) -> i64 {
        0
    }
    fn is_zero(&self, a: &i64) -> bool {
        *a == 0
    }
    fn combine(&self, pv: &i64, a: &i64, rv: &i64, b: &i64) -> Option<i64> {
        pv.checked_mul(*a)?.checked_sub(rv.checked_mul(*b)?)
    }
    fn reduce_pair(&self, pv: &i64, rv: &i64) -> (i64, i64) {
        let g = pv.gcd(rv);
        (pv / g, rv / g)
    }
    fn normalize(&self, row: &mut SparseRow<i64>) {
        let g = row.iter().fold(0i64, |acc, (_, v)| acc.gcd(v));
        if g > 1 {
            row.iter_mut().for_each(|(_, v)| *v /= g);
        }
    }
}

impl Arith for Big {
    type T = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn combine(&self, pv: &BigInt, a: &BigInt, rv: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(pv * a - rv * b)
    }
    fn reduce_pair(&self, pv: &BigInt, rv: &BigInt) -> (BigInt, BigInt) {
        let g = pv.gcd(rv);
        (pv / &g, rv / &g)
    }
    fn normalize(&self, row: &mut SparseRow<BigInt>) {
        let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
        if !g.is_one() && !g.is_zero() {
            row.iter_mut().for_each(|(_, v)| *v /= &g);
        }
    }
}

impl Arith for ModP {
    type T = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn combine(&self, pv: &u64, a: &u64, rv: &u64, b: &u64) -> Option<u64> {
        let p = self.0 as u128;
        let x = (*pv as u128 * *a as u128) % p;
        let y = (*rv as u128 * *b as u128) % p;
        Some(((x + p - y) % p) as u64)
    }
    fn reduce_pair(&self, pv: &u64, rv: &u64) -> (u64, u64) {
        (*pv, *rv)
    }
    fn normalize(&self, _row: &mut SparseRow<u64>) {}
}

/// Integer elimination with an `i64` fast path.
fn echelon_integer(rows: Vec<SparseRow<BigInt>>, ncols: usize) -> Vec<(usize, SparseRow<BigInt>)> {
    let small: Option<Vec<SparseRow<i64>>> = rows
        .iter()
        .map(|row| row.iter().map(|(c, v)| v.to_i64().map(|x| (*c, x))).collect())
        .collect();
    if let Some(small) = small {
        if let Some(piv) = echelon(&CheckedI64, small, ncols) {
            return piv
                .into_iter()
                .map(|(c, row)| (c, row.into_iter().map(|(j, v)| (j, BigInt::from(v))).collect()))
                .collect();
        }
    }
    echelon(&Big, rows, ncols).expect("big-integer elimination cannot overflow")
}

fn entry<'a, T>(row: &'a SparseRow<T>, col: usize) -> Option<&'a T> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|i| &row[i].1)
}

/// Sparse row echelon form. Returns the pivot rows in the order they were
/// chosen, each tagged with its pivot column. A pivot row is zero in every
/// column pivoted before it.
fn echelon<A: Arith>(
    ar: &A,
    mut rows: Vec<SparseRow<A::T>>,
    ncols: usize,
) -> Option<Vec<(usize, SparseRow<A::T>)>> {
    let mut active = vec![true; rows.len()];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    for (i, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].push(i);
        }
    }
    let mut col_done = vec![false; ncols];
    let mut pivots = Vec::new();
    loop {
        let mut best: Option<(usize, usize)> = None;
        for c in 0..ncols {
            if col_done[c] {
                continue;
            }
            let n = col_rows[c].len();
            if n == 0 {
                col_done[c] = true;
                continue;
            }
            if best.is_none_or(|(bn, _)| n < bn) {
                best = Some((n, c));
            }
        }
        let Some((_, c)) = best else { break };

        let mut cand: Vec<usize> = std::mem::take(&mut col_rows[c])
            .into_iter()
            .filter(|&i| active[i] && entry(&rows[i], c).is_some())
            .collect();
        cand.sort_unstable();
        cand.dedup();
        col_done[c] = true;
        let Some(&p) = cand.iter().min_by_key(|&&i| (rows[i].len(), i)) else {
            continue;
        };
        active[p] = false;
        let prow = std::mem::take(&mut rows[p]);
        let pv = entry(&prow, c).unwrap().clone();
        for &i in cand.iter().filter(|&&i| i != p) {
            let rv = entry(&rows[i], c).unwrap().clone();
            let (mp, mr) = ar.reduce_pair(&pv, &rv);
            let old = std::mem::take(&mut rows[i]);
            let mut new = Vec::with_capacity(old.len() + prow.len());
            let (mut x, mut y) = (0, 0);
            while x < old.len() || y < prow.len() {
                let cx = old.get(x).map_or(usize::MAX, |e| e.0);
                let cy = prow.get(y).map_or(usize::MAX, |e| e.0);
                if cx < cy {
                    let v = ar.combine(&mp, &old[x].1, &mr, &ar.zero())?;
                    new.push((cx, v));
                    x += 1;
                } else if cy < cx {
                    let v = ar.combine(&mp, &ar.zero(), &mr, &prow[y].1)?;
                    if !ar.is_zero(&v) {
                        col_rows[cy].push(i);
                        new.push((cy, v));
                    }
                    y += 1;
                } else {
                    let v = ar.combine(&mp, &old[x].1, &mr, &prow[y].1)?;
                    if !ar.is_zero(&v) {
                        new.push((cx, v));
                    }
                    x += 1;
                    y += 1;
                }
            }
            ar.normalize(&mut new);
            rows[i] = new;
        }
        pivots.push((c, prow));
    }
    Some(pivots)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).rank(), 1);
        assert_eq!(ExactMatrix::zeros(4, 3).rank(), 0);
        let tri = ExactMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(tri.rank(), 3);
        assert_eq!(tri.rank_mod_p(2).unwrap(), 2);
        assert_eq!(tri.rank_mod_p(3).unwrap(), 3);
    }

    #[test]
    fn modular_rank_examples() {
        assert_eq!(ExactMatrix::identity(5).rank_mod_p(101).unwrap(), 5);
        assert_eq!(ExactMatrix::zeros(3, 3).rank_mod_p(7).unwrap(), 0);
        assert_eq!(ExactMatrix::identity(2).rank_mod_p(9), Err(Error::InvalidModulus(9)));
        assert_eq!(ExactMatrix::identity(2).rank_mod_p(1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn kernel_of_cycle_incidence() {
        // edges 12, 23, 34, 14 of the 4-cycle
        let m = ExactMatrix::from_rows(&[
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 1],
        ]);
        let k = m.kernel_basis();
        assert_eq!(k.vectors, vec![vec![q(1), q(-1), q(1), q(-1)]]);
        assert!(ExactMatrix::identity(3).kernel_basis().vectors.is_empty());
    }

    #[test]
    fn rational_entries_and_overflow_path() {
        let half = BigRational::new(1.into(), 2.into());
        let m = ExactMatrix::new(2, 2, vec![(0, 0, half.clone()), (0, 1, q(1)), (1, 0, q(1)), (1, 1, q(2))]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.vectors, vec![vec![q(2), q(-1)]]);
        let big = i64::MAX / 3;
        let m = ExactMatrix::from_rows(&[vec![big, big - 1, 7], vec![big - 5, big, 3], vec![1, 2, 3]]);
        let dense: Vec<Vec<BigInt>> = vec![
            vec![big.into(), (big - 1).into(), 7.into()],
            vec![(big - 5).into(), big.into(), 3.into()],
            vec![1.into(), 2.into(), 3.into()],
        ];
        let det = &dense[0][0] * (&dense[1][1] * &dense[2][2] - &dense[1][2] * &dense[2][1])
            - &dense[0][1] * (&dense[1][0] * &dense[2][2] - &dense[1][2] * &dense[2][0])
            + &dense[0][2] * (&dense[1][0] * &dense[2][1] - &dense[1][1] * &dense[2][0]);
        assert_eq!(m.rank(), if det.is_zero() { 2 } else { 3 });
    }

    #[test]
    fn duplicate_triplets_are_summed() {
        let m = ExactMatrix::from_integer_triplets(2, 2, vec![(0, 0, 1), (0, 0, -1), (1, 1, 2), (1, 1, 3)]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 1), q(5));
    }

    #[test]
    fn triplet_json_round_trip() {
        let m = ExactMatrix::new(2, 3, vec![(0, 2, BigRational::new((-3).into(), 4.into())), (1, 0, q(2))]);
        let json = serde_json::to_string(&m.to_triplet_json()).unwrap();
        assert_eq!(json, r#"{"rows":2,"cols":3,"triplets":[[0,2,"-3/4"],[1,0,"2/1"]]}"#);
        let back: TripletMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(ExactMatrix::from_triplet_json(&back).unwrap(), m);
    }
}
