//! Dense exact matrices over Z and Q, Smith normal form with full
//! transforms, and a replayable exact LU used as the cached Green solver.
//!
//! Sizes in this crate stay in the low hundreds, so everything is dense;
//! pivoting prefers sparse rows and small entries to limit coefficient
//! growth.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::ratio::{Int, Rat};

// ---------------------------------------------------------------------------
// Integer matrices
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> IntMat {
        IntMat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in IntMat::mul");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Int::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x[j].is_zero() {
                        acc += a * &x[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rat(&self) -> RatMat {
        RatMat::from_fn(self.rows, self.cols, |i, j| Rat::from_integer(self.get(i, j).clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, c: &Int) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = c * self.get(src, j);
            if !add.is_zero() {
                let v = self.get(dst, j) + add;
                self.set(dst, j, v);
            }
        }
    }

    /// col[dst] += c * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, c: &Int) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = c * self.get(i, src);
            if !add.is_zero() {
                let v = self.get(i, dst) + add;
                self.set(i, dst, v);
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }
}

/// Quotient nearest to a/p, minimizing |a - q p|.
fn nearest_div(a: &Int, p: &Int) -> Int {
    let (mut q, r) = a.div_rem(p);
    // bias the remainder into (-|p|/2, |p|/2]
    let two_r = &r * 2;
    if two_r.abs() > p.abs() {
        if (r.is_positive() && p.is_positive()) || (r.is_negative() && p.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Smith normal form: u * a * v = d with u, v unimodular and d diagonal
/// with a divisibility chain d1 | d2 | ... Inverse transforms are
/// maintained alongside, so callers get exact lattice bookkeeping.
pub struct Snf {
    pub d: IntMat,
    pub u: IntMat,
    pub uinv: IntMat,
    pub v: IntMat,
    pub vinv: IntMat,
    pub rank: usize,
}

impl Snf {
    pub fn diag(&self, i: usize) -> &Int {
        self.d.get(i, i)
    }
}

pub fn snf(a: &IntMat) -> Snf {
    let m = a.rows();
    let n = a.cols();
    let mut b = a.clone();
    let mut u = IntMat::identity(m);
    let mut uinv = IntMat::identity(m);
    let mut v = IntMat::identity(n);
    let mut vinv = IntMat::identity(n);

    // elementary ops keeping u*a*v = b, uinv = u^-1, vinv = v^-1
    macro_rules! rswap {
        ($i:expr, $k:expr) => {{
            b.swap_rows($i, $k);
            u.swap_rows($i, $k);
            uinv.swap_cols($i, $k);
        }};
    }
    macro_rules! cswap {
        ($j:expr, $k:expr) => {{
            b.swap_cols($j, $k);
            v.swap_cols($j, $k);
            vinv.swap_rows($j, $k);
        }};
    }
    macro_rules! raxpy {
        ($dst:expr, $src:expr, $c:expr) => {{
            let c: Int = $c;
            b.row_axpy($dst, $src, &c);
            u.row_axpy($dst, $src, &c);
            let negc = -c;
            uinv.col_axpy($src, $dst, &negc);
        }};
    }
    macro_rules! caxpy {
        ($dst:expr, $src:expr, $c:expr) => {{
            let c: Int = $c;
            b.col_axpy($dst, $src, &c);
            v.col_axpy($dst, $src, &c);
            let negc = -c;
            vinv.row_axpy($src, $dst, &negc);
        }};
    }

    let mut t = 0usize;
    let limit = m.min(n);
    while t < limit {
        // locate the smallest nonzero entry in the trailing submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !b.get(i, j).is_zero() {
                    match &pivot {
                        Some((pi, pj)) if b.get(*pi, *pj).abs() <= b.get(i, j).abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        rswap!(t, pi);
        cswap!(t, pj);

        // clear row and column t; restart whenever a smaller remainder
        // gets swapped into the pivot position
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if b.get(i, t).is_zero() {
                    continue;
                }
                let q = nearest_div(b.get(i, t), b.get(t, t));
                raxpy!(i, t, -q);
                if !b.get(i, t).is_zero() {
                    rswap!(t, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            for j in t + 1..n {
                if b.get(t, j).is_zero() {
                    continue;
                }
                let q = nearest_div(b.get(t, j), b.get(t, t));
                caxpy!(j, t, -q);
                if !b.get(t, j).is_zero() {
                    cswap!(t, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        // divisibility sweep: every remaining entry must be a multiple
        // of the pivot before we move on
        let mut offender: Option<usize> = None;
        'scan: for i in t + 1..m {
            for j in t + 1..n {
                if !b.get(i, j).mod_floor(b.get(t, t)).is_zero() {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offender {
            raxpy!(t, i, Int::one());
            continue; // re-run the reduction at the same t
        }

        if b.get(t, t).is_negative() {
            b.negate_row(t);
            u.negate_row(t);
            uinv.negate_col(t);
        }
        t += 1;
    }

    Snf { d: b, u, uinv, v, vinv, rank: t }
}

// ---------------------------------------------------------------------------
// Rational matrices
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> RatMat {
        RatMat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in RatMat::mul");
        let mut out = RatMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x[j].is_zero() {
                        acc += a * &x[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &RatMat) -> RatMat {
        assert!(self.rows == other.rows && self.cols == other.cols);
        RatMat::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn scale_rows(&self, d: &[Rat]) -> RatMat {
        assert_eq!(d.len(), self.rows);
        RatMat::from_fn(self.rows, self.cols, |i, j| &d[i] * self.get(i, j))
    }

    pub fn scale_cols(&self, d: &[Rat]) -> RatMat {
        assert_eq!(d.len(), self.cols);
        RatMat::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * &d[j])
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Inverse of a small square matrix; None if singular.
    pub fn inverse(&self) -> Option<RatMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let lu = RatLu::decompose(self);
        if lu.rank() < n {
            return None;
        }
        let mut out = RatMat::zeros(n, n);
        for j in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[j] = Rat::one();
            let x = lu.solve(&e)?;
            for i in 0..n {
                out.set(i, j, x[i].clone());
            }
        }
        Some(out)
    }

    /// Exact rank via LU.
    pub fn rank(&self) -> usize {
        RatLu::decompose(self).rank()
    }
}

// ---------------------------------------------------------------------------
// Replayable exact LU
// ---------------------------------------------------------------------------

enum LuOp {
    Swap(usize, usize),
    /// row[dst] -= q * row[src]
    Axpy { dst: usize, src: usize, q: Rat },
    /// row *= s (s > 0, used to keep entries as small integers)
    Scale { row: usize, s: Rat },
}

/// Exact forward elimination with an op log. Factor once, replay the ops
/// on each right-hand side. Rows are rescaled to integer content after
/// every update, which keeps coefficient growth tolerable on the mesh
/// Laplacians this crate produces.
pub struct RatLu {
    rows: usize,
    cols: usize,
    ops: Vec<LuOp>,
    reduced: RatMat,
    /// (row, col) of each pivot, in elimination order
    pivots: Vec<(usize, usize)>,
    pivot_col_set: Vec<bool>,
}

impl RatLu {
    pub fn decompose(a: &RatMat) -> RatLu {
        let rows = a.rows();
        let cols = a.cols();
        let mut w = a.clone();
        let mut ops: Vec<LuOp> = Vec::new();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut nnz: Vec<usize> = (0..rows)
            .map(|i| (0..cols).filter(|&j| !w.get(i, j).is_zero()).count())
            .collect();

        // normalize a row to integer entries with content 1
        let mut normalize = |w: &mut RatMat, ops: &mut Vec<LuOp>, i: usize| {
            let mut lcm_den = Int::one();
            let mut gcd_num = Int::zero();
            for j in 0..cols {
                let e = w.get(i, j);
                if !e.is_zero() {
                    lcm_den = lcm_den.lcm(e.denom());
                    gcd_num = gcd_num.gcd(e.numer());
                }
            }
            if gcd_num.is_zero() {
                return;
            }
            let s = Rat::new(lcm_den, gcd_num.abs());
            if s.is_one() {
                return;
            }
            for j in 0..cols {
                let e = w.get(i, j).clone();
                if !e.is_zero() {
                    w.set(i, j, e * &s);
                }
            }
            ops.push(LuOp::Scale { row: i, s });
        };

        for i in 0..rows {
            normalize(&mut w, &mut ops, i);
        }

        let mut r = 0usize; // next pivot row slot
        for col in 0..cols {
            if r == rows {
                break;
            }
            // candidate pivot: nonzero in this column, prefer sparse rows
            // and small entries
            let mut best: Option<usize> = None;
            for i in r..rows {
                if w.get(i, col).is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(i),
                    Some(b) => {
                        let eb = w.get(b, col);
                        let ei = w.get(i, col);
                        let kb = (nnz[b], eb.numer().bits());
                        let ki = (nnz[i], ei.numer().bits());
                        if ki < kb {
                            Some(i)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let Some(p) = best else { continue };
            if p != r {
                w.swap_rows(p, r);
                nnz.swap(p, r);
                ops.push(LuOp::Swap(p, r));
            }
            let pivot = w.get(r, col).clone();
            for i in r + 1..rows {
                if w.get(i, col).is_zero() {
                    continue;
                }
                let q = w.get(i, col) / &pivot;
                for j in col..cols {
                    let sub = &q * w.get(r, j);
                    if !sub.is_zero() {
                        let v = w.get(i, j) - sub;
                        w.set(i, j, v);
                    }
                }
                ops.push(LuOp::Axpy { dst: i, src: r, q });
                normalize(&mut w, &mut ops, i);
                nnz[i] = (0..cols).filter(|&j| !w.get(i, j).is_zero()).count();
            }
            pivots.push((r, col));
            r += 1;
        }

        let mut pivot_col_set = vec![false; cols];
        for &(_, c) in &pivots {
            pivot_col_set[c] = true;
        }
        RatLu { rows, cols, ops, reduced: w, pivots, pivot_col_set }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn apply_ops(&self, b: &[Rat]) -> Vec<Rat> {
        let mut y = b.to_vec();
        for op in &self.ops {
            match op {
                LuOp::Swap(a, b) => y.swap(*a, *b),
                LuOp::Axpy { dst, src, q } => {
                    if !y[*src].is_zero() {
                        let sub = q * &y[*src];
                        y[*dst] = &y[*dst] - sub;
                    }
                }
                LuOp::Scale { row, s } => {
                    if !y[*row].is_zero() {
                        y[*row] = &y[*row] * s;
                    }
                }
            }
        }
        y
    }

    /// Some solution of A x = b (free variables set to zero), or None if
    /// the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let y = self.apply_ops(b);
        for i in self.pivots.len()..self.rows {
            if !y[i].is_zero() {
                return None;
            }
        }
        let mut x = vec![Rat::zero(); self.cols];
        for t in (0..self.pivots.len()).rev() {
            let (pr, pc) = self.pivots[t];
            let mut acc = y[pr].clone();
            for j in pc + 1..self.cols {
                let a = self.reduced.get(pr, j);
                if !a.is_zero() && !x[j].is_zero() {
                    acc -= a * &x[j];
                }
            }
            x[pc] = acc / self.reduced.get(pr, pc);
        }
        Some(x)
    }

    /// Basis of the null space of A.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if self.pivot_col_set[f] {
                continue;
            }
            let mut x = vec![Rat::zero(); self.cols];
            x[f] = Rat::one();
            for t in (0..self.pivots.len()).rev() {
                let (pr, pc) = self.pivots[t];
                if pc >= f {
                    continue;
                }
                let mut acc = Rat::zero();
                for j in pc + 1..self.cols {
                    let a = self.reduced.get(pr, j);
                    if !a.is_zero() && !x[j].is_zero() {
                        acc -= a * &x[j];
                    }
                }
                x[pc] = acc / self.reduced.get(pr, pc);
            }
            basis.push(x);
        }
        basis
    }
}

// ---------------------------------------------------------------------------
// f64 mirror for the optional float fast path
// ---------------------------------------------------------------------------

pub struct FloatLu {
    n: usize,
    lu: Vec<f64>,
    perm: Vec<usize>,
    singular_tol: f64,
    rank: usize,
}

impl FloatLu {
    pub fn decompose(a: &[f64], n: usize) -> FloatLu {
        let mut lu = a.to_vec();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rank = n;
        let scale: f64 = lu.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
        let tol = scale * 1e-12;
        for k in 0..n {
            let mut p = k;
            for i in k + 1..n {
                if lu[i * n + k].abs() > lu[p * n + k].abs() {
                    p = i;
                }
            }
            if lu[p * n + k].abs() <= tol {
                rank = rank.min(k);
                lu[p * n + k] = 0.0;
                continue;
            }
            if p != k {
                for j in 0..n {
                    lu.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
            }
            let piv = lu[k * n + k];
            for i in k + 1..n {
                let f = lu[i * n + k] / piv;
                lu[i * n + k] = f;
                for j in k + 1..n {
                    lu[i * n + j] -= f * lu[k * n + j];
                }
            }
        }
        FloatLu { n, lu, perm, singular_tol: tol, rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Least-structure solve: assumes consistent system when pivots
    /// vanish (rhs entry then ignored). Good enough for the fast path,
    /// which is always cross-checked against the exact route.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y: Vec<f64> = self.perm.iter().map(|&i| b[i]).collect();
        for k in 0..n {
            for i in k + 1..n {
                y[i] -= self.lu[i * n + k] * y[k];
            }
        }
        let mut x = vec![0.0; n];
        for k in (0..n).rev() {
            let piv = self.lu[k * n + k];
            if piv.abs() <= self.singular_tol {
                x[k] = 0.0;
                continue;
            }
            let mut acc = y[k];
            for j in k + 1..n {
                acc -= self.lu[k * n + j] * x[j];
            }
            x[k] = acc / piv;
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, rat_int};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn int_mat(rows: usize, cols: usize, vals: &[i64]) -> IntMat {
        assert_eq!(vals.len(), rows * cols);
        IntMat::from_fn(rows, cols, |i, j| Int::from(vals[i * cols + j]))
    }

    #[test]
    fn snf_identity() {
        let a = IntMat::identity(4);
        let s = snf(&a);
        assert_eq!(s.d, IntMat::identity(4));
        assert_eq!(s.rank, 4);
    }

    #[test]
    fn snf_divisibility_normalization() {
        // diag(2,3) normalizes to diag(1,6)
        let a = int_mat(2, 2, &[2, 0, 0, 3]);
        let s = snf(&a);
        assert_eq!(*s.diag(0), Int::from(1));
        assert_eq!(*s.diag(1), Int::from(6));
    }

    #[test]
    fn snf_random_reverifies() {
        // self-check oracle: U*A*V = D, U*Uinv = I, V*Vinv = I,
        // divisibility chain
        let mut rng = StdRng::seed_from_u64(7);
        for trial in 0..8 {
            let rows = 20;
            let cols = 30;
            let a = IntMat::from_fn(rows, cols, |_, _| Int::from(rng.gen_range(-5i64..=5)));
            let s = snf(&a);
            assert_eq!(s.u.mul(&a).mul(&s.v), s.d, "UAV != D in trial {trial}");
            assert_eq!(s.u.mul(&s.uinv), IntMat::identity(rows));
            assert_eq!(s.v.mul(&s.vinv), IntMat::identity(cols));
            for i in 0..rows.min(cols) {
                for j in 0..cols.min(rows) {
                    if i != j {
                        assert!(s.d.get(i, j).is_zero());
                    }
                }
            }
            for i in 1..s.rank {
                assert!(
                    s.diag(i).mod_floor(s.diag(i - 1)).is_zero(),
                    "divisibility chain broken at {i}"
                );
            }
        }
    }

    #[test]
    fn lu_solves_and_kernel() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..6 {
            let n = 12;
            // random rank-deficient symmetric-ish matrix
            let a = RatMat::from_fn(n, n - 3, |_, _| rat(rng.gen_range(-4i64..=4), 1));
            let b = a.mul(&a.transpose()); // n x n, rank <= n-3
            let lu = RatLu::decompose(&b);
            assert!(lu.rank() <= n - 3);
            // every kernel vector annihilates
            for k in lu.kernel() {
                let y = b.mul_vec(&k);
                assert!(y.iter().all(|v| v.is_zero()));
            }
            // a consistent rhs solves exactly
            let x0: Vec<Rat> = (0..n).map(|_| rat(rng.gen_range(-3i64..=3), 2)).collect();
            let rhs = b.mul_vec(&x0);
            let x = lu.solve(&rhs).expect("consistent system");
            assert_eq!(b.mul_vec(&x), rhs);
        }
    }

    #[test]
    fn lu_detects_inconsistency() {
        // x + y = 1, x + y = 2
        let a = RatMat::from_fn(2, 2, |_, _| rat_int(1));
        let lu = RatLu::decompose(&a);
        assert_eq!(lu.rank(), 1);
        assert!(lu.solve(&[rat_int(1), rat_int(2)]).is_none());
        assert!(lu.solve(&[rat_int(1), rat_int(1)]).is_some());
    }

    #[test]
    fn float_lu_matches_exact() {
        let mut rng = StdRng::seed_from_u64(3);
        let n = 10;
        let a = RatMat::from_fn(n, n, |i, j| {
            if i == j {
                rat_int(rng.gen_range(5i64..9))
            } else {
                rat(rng.gen_range(-2i64..=2), 1)
            }
        });
        let af: Vec<f64> = (0..n * n)
            .map(|k| crate::ratio::rat_to_f64(a.get(k / n, k % n)))
            .collect();
        let rhs: Vec<Rat> = (0..n).map(|_| rat(rng.gen_range(-5i64..=5), 3)).collect();
        let exact = RatLu::decompose(&a).solve(&rhs).unwrap();
        let fl = FloatLu::decompose(&af, n);
        let approx = fl.solve(&rhs.iter().map(crate::ratio::rat_to_f64).collect::<Vec<_>>());
        for i in 0..n {
            assert!((crate::ratio::rat_to_f64(&exact[i]) - approx[i]).abs() < 1e-9);
        }
    }
}
