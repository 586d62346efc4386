//! Square matrices and vectors over a [`FieldTable`].

use crate::field::{Elt, FieldTable};

/// Row-major `n x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    n: usize,
    a: Box<[Elt]>,
}

impl Mat {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n].into_boxed_slice();
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, a }
    }

    pub fn zero(n: usize) -> Self {
        Mat { n, a: vec![0; n * n].into_boxed_slice() }
    }

    pub fn from_rows(n: usize, a: Vec<Elt>) -> Self {
        assert_eq!(a.len(), n * n);
        Mat { n, a: a.into_boxed_slice() }
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<Elt>]) -> Self {
        let n = cols.len();
        let mut m = Mat::zero(n);
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m.a[i * n + j] = c[i];
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bytes(&self) -> &[Elt] {
        &self.a
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elt {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elt) {
        self.a[i * self.n + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Elt> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.n)
    }

    pub fn mul(&self, o: &Mat, f: &FieldTable) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.a[idx] = f.add(out.a[idx], f.mul(x, o.get(k, j)));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Elt], f: &FieldTable) -> Vec<Elt> {
        (0..self.n)
            .map(|i| (0..self.n).fold(0, |acc, k| f.add(acc, f.mul(self.get(i, k), v[k]))))
            .collect()
    }

    /// `self + c * I`.
    pub fn plus_scalar(&self, c: Elt, f: &FieldTable) -> Mat {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = f.add(m.get(i, i), c);
            m.set(i, i, v);
        }
        m
    }

    pub fn inverse(&self, f: &FieldTable) -> Option<Mat> {
        let n = self.n;
        let mut rows: Vec<Vec<Elt>> = (0..n)
            .map(|i| {
                let mut r: Vec<Elt> = (0..n).map(|j| self.get(i, j)).collect();
                r.extend((0..n).map(|j| u8::from(i == j)));
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| rows[r][c] != 0)?;
            rows.swap(c, p);
            let s = f.inv(rows[c][c]);
            for x in rows[c].iter_mut() {
                *x = f.mul(*x, s);
            }
            for r in 0..n {
                if r != c && rows[r][c] != 0 {
                    let m = rows[r][c];
                    for k in 0..2 * n {
                        rows[r][k] = f.sub(rows[r][k], f.mul(m, rows[c][k]));
                    }
                }
            }
        }
        let a = rows.into_iter().flat_map(|r| r[n..].to_vec()).collect();
        Some(Mat::from_rows(n, a))
    }

    pub fn rank(&self, f: &FieldTable) -> usize {
        let rows: Vec<Vec<Elt>> = (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect();
        echelon(rows, self.n, f).len()
    }

    pub fn det(&self, f: &FieldTable) -> Elt {
        let n = self.n;
        let mut rows: Vec<Vec<Elt>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect();
        let mut det = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| rows[r][c] != 0) else { return 0 };
            if p != c {
                rows.swap(c, p);
                det = f.neg(det);
            }
            det = f.mul(det, rows[c][c]);
            let s = f.inv(rows[c][c]);
            for r in c + 1..n {
                if rows[r][c] != 0 {
                    let m = f.mul(rows[r][c], s);
                    for k in c..n {
                        rows[r][k] = f.sub(rows[r][k], f.mul(m, rows[c][k]));
                    }
                }
            }
        }
        det
    }

    /// Basis of `{v : self v = 0}`.
    pub fn kernel(&self, f: &FieldTable) -> Vec<Vec<Elt>> {
        let n = self.n;
        let rows: Vec<Vec<Elt>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect();
        let red = echelon(rows, n, f);
        let pivots: Vec<usize> = red.iter().map(|r| r.iter().position(|&x| x != 0).expect("nonzero row")).collect();
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; n];
            v[free] = 1;
            for (r, &pc) in red.iter().zip(&pivots) {
                v[pc] = f.neg(r[free]);
            }
            basis.push(v);
        }
        basis
    }
}

/// Reduced row echelon form; returns the nonzero rows.
fn echelon(mut rows: Vec<Vec<Elt>>, ncols: usize, f: &FieldTable) -> Vec<Vec<Elt>> {
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let s = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, s);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let m = rows[i][c];
                for k in 0..ncols {
                    rows[i][k] = f.sub(rows[i][k], f.mul(m, rows[r][k]));
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Every vector of `GF(q)^n`, in lexicographic order.
pub fn all_vectors(n: usize, q: usize) -> Vec<Vec<Elt>> {
    let total = q.pow(n as u32);
    (0..total)
        .map(|mut x| {
            let mut v = vec![0; n];
            for c in v.iter_mut().rev() {
                *c = (x % q) as Elt;
                x /= q;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_rank_det_kernel() {
        let f = FieldTable::new(5).unwrap();
        let m = Mat::from_rows(3, vec![1, 2, 0, 0, 1, 3, 4, 0, 2]);
        let inv = m.inverse(&f).unwrap();
        assert!(m.mul(&inv, &f).is_identity());
        assert_eq!(m.rank(&f), 3);
        assert_ne!(m.det(&f), 0);
        let s = Mat::from_rows(3, vec![1, 2, 3, 2, 4, 1, 0, 1, 1]);
        assert_eq!(s.rank(&f), 2);
        assert_eq!(s.det(&f), 0);
        let k = s.kernel(&f);
        assert_eq!(k.len(), 1);
        assert!(s.apply(&k[0], &f).iter().all(|&x| x == 0));
    }

    #[test]
    fn vectors_enumerated() {
        assert_eq!(all_vectors(3, 2).len(), 8);
        assert_eq!(all_vectors(2, 3)[5], vec![1, 2]);
    }
}
